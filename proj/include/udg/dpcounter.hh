#pragma once

#include <udg/count.hh>
#include <udg/geometry.hh>
#include <udg/graph.hh>
#include <udg/pathdecomp.hh>
#include <udg/separations.hh>

namespace udg::dp
{
    struct Stats
    {
        long peak_states = 0;
        long transitions = 0;
    };

    /// Maps of P into G extending the pinned partial map `f`, by dynamic
    /// programming over the nice path decomposition `pd` of G. The catalog
    /// must be built for P with every pinned vertex anchored and an order
    /// cap of at least min(|P|, width + 1).
    auto count_extensions(const Graph & p, const Graph & g, const PathDecomposition & pd,
            const PartialMap & f, Mode mode, const SeparationCatalog & cat, Stats * stats = nullptr) -> BigCount;

    /// As above with a catalog built on the spot.
    auto count_extensions(const Graph & p, const Graph & g, const PathDecomposition & pd,
            const PartialMap & f, Mode mode) -> BigCount;

    auto count(const Graph & p, const Graph & g, const PathDecomposition & pd, Mode mode) -> BigCount;

    /// Uses the strip decomposition of the drawing.
    auto count(const Graph & p, const EmbeddedGraph & host, Mode mode) -> BigCount;

    auto catalog_for(const Graph & p, const PathDecomposition & pd, const PartialMap & f) -> SeparationCatalog;
}
