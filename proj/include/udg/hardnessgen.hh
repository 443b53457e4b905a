#pragma once

#include <udg/geometry.hh>
#include <udg/graph.hh>

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace udg::hardness
{
    /// Three lists of n binary strings, all of one length.
    struct S3GInstance
    {
        std::vector<std::string> a, b, c;

        auto n() const -> int { return int(a.size()); }
        auto length() const -> int { return a.empty() ? 0 : int(a[0].size()); }
    };

    /// Throws InputError unless the lists have equal size and every string
    /// is binary with the common length.
    auto validate(const S3GInstance & inst) -> void;

    auto pad_a(const std::string & s) -> std::string;
    auto pad_b(const std::string & s) -> std::string;
    auto pad_c(const std::string & s) -> std::string;
    auto pad(const S3GInstance & inst) -> S3GInstance;

    /// Drawing and the graph it is meant to realise, vertices in the same order.
    struct Gadget
    {
        EmbeddedGraph embedding;
        Graph graph;
        std::vector<std::string> names;
    };

    struct Reduction
    {
        Gadget pattern;
        Gadget host;
        S3GInstance padded;
    };

    /// Host gets one ladder per A string, the pattern one comb per B and C
    /// string. With padded = false the strings are padded first. Each output
    /// is checked for ply <= 2 and for matching adjacency.
    auto build(const S3GInstance & inst, bool padded = false) -> Reduction;

    /// Triples (index into a, b, c) covering every string once with
    /// a + b + c <= 1 in every coordinate.
    using Assignment = std::vector<std::array<int, 3> >;
    auto solve_s3g_brute(const S3GInstance & inst) -> std::optional<Assignment>;

    auto random_instance(int n, int length, std::mt19937_64 & rng) -> S3GInstance;

    /// Manifest text listing the source strings.
    auto manifest(const S3GInstance & inst) -> std::string;
    auto parse_strings(std::istream & in) -> S3GInstance;
}
