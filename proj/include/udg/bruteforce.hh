#pragma once

#include <udg/count.hh>
#include <udg/graph.hh>

#include <vector>

namespace udg::brute
{
    /// |sub(P,G)| or |ind(P,G)|: injective maps, counted as labelled maps.
    auto count_maps(const Graph & p, const Graph & g, Mode mode) -> BigCount;

    /// Same search, stopping at the first map found.
    auto detect(const Graph & p, const Graph & g, Mode mode) -> bool;

    /// Maps of the chosen class that extend the injective partial map `f`.
    auto count_extensions(const Graph & p, const Graph & g, const PartialMap & f, Mode mode) -> BigCount;

    /// Permutations of V(P) preserving adjacency and fixing `fixed` pointwise.
    auto automorphisms_fixing(const Graph & p, PatternSet fixed) -> std::vector<std::vector<int> >;

    struct SeparationClass
    {
        Separation representative;
        std::vector<Separation> members;
    };

    /// Every separation of order <= s, grouped into orbits of the
    /// automorphisms fixing each boundary pointwise. The number of groups is
    /// sigma_s(P).
    auto separations(const Graph & p, int s) -> std::vector<SeparationClass>;
}
