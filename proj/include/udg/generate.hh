#pragma once

#include <udg/geometry.hh>

#include <cstdint>
#include <random>
#include <string>

namespace udg::gen
{
    /// Deterministic 64-bit stream named after its consumer.
    auto stream(const std::string & name, std::uint64_t seed) -> std::mt19937_64;

    /// n disks with centres drawn uniformly (on a 1/1000 grid) from the box
    /// [0,w] x [0,h] so that every disk lies inside it. Candidates that would
    /// push the ply above `max_ply` are redrawn; InfeasibleError after
    /// `max_rejections` redraws.
    auto random_udg(int n, long w, long h, int max_ply, std::mt19937_64 & rng,
            long max_rejections = 100000) -> EmbeddedGraph;
    auto random_udg(int n, long w, long h, int max_ply, std::uint64_t seed,
            long max_rejections = 100000) -> EmbeddedGraph;

    /// Connected drawing: each new disk touches an earlier one.
    auto random_connected_udg(int k, int max_ply, std::mt19937_64 & rng) -> EmbeddedGraph;
}
