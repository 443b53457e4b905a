#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace udg
{
    /// Simple undirected graph on vertices 0..n-1. Neighbour lists are kept
    /// sorted and duplicate-free, with a dense matrix alongside for O(1)
    /// adjacency tests.
    class Graph
    {
        public:
            Graph() = default;
            explicit Graph(int n);

            auto size() const -> int { return _n; }
            auto add_edge(int u, int v) -> void;
            auto adjacent(int u, int v) const -> bool { return _matrix[std::size_t(u) * _n + v]; }
            auto neighbours(int v) const -> const std::vector<int> & { return _adj[v]; }
            auto degree(int v) const -> int { return int(_adj[v].size()); }
            auto edge_count() const -> long;

            auto operator== (const Graph &) const -> bool = default;

        private:
            int _n = 0;
            std::vector<std::vector<int> > _adj;
            std::vector<std::uint8_t> _matrix;
    };

    /// Pattern vertex -> host vertex, for pinned counting.
    using PartialMap = std::map<int, int>;

    struct InducedGraph
    {
        Graph graph;
        std::vector<int> to_parent;   // new id -> old id
    };

    /// Induced subgraph on `vertices`, relabelled 0..|S|-1 in the given order.
    auto induced(const Graph & g, const std::vector<int> & vertices) -> InducedGraph;

    /// Connected components, each sorted, ordered by smallest member.
    auto components(const Graph & g) -> std::vector<std::vector<int> >;

    /// Per-vertex class ids forming the contiguous range 0..classes-1.
    class VertexColoring
    {
        public:
            VertexColoring() = default;
            explicit VertexColoring(std::vector<int> colour);

            static auto uniform(int n) -> VertexColoring;

            auto size() const -> int { return int(_colour.size()); }
            auto operator[] (int v) const -> int { return _colour[v]; }
            auto classes() const -> int { return _classes; }

        private:
            std::vector<int> _colour;
            int _classes = 0;
    };

    /// Byte string; equal iff a colour-preserving isomorphism exists.
    using CanonicalCode = std::string;

    auto canonical(const Graph & g, const VertexColoring & colouring) -> CanonicalCode;
    auto canonical(const Graph & g) -> CanonicalCode;

    /// Pattern vertex subsets. Separation machinery is limited to patterns of
    /// at most 64 vertices.
    using PatternSet = std::uint64_t;

    inline auto bit(int v) -> PatternSet { return PatternSet{1} << v; }
    inline auto contains(PatternSet s, int v) -> bool { return (s >> v) & 1u; }
    auto popcount(PatternSet s) -> int;
    auto members(PatternSet s) -> std::vector<int>;
    auto full_set(int n) -> PatternSet;

    /// (A, B) with A ∪ B = V and no edge between A \ B and B \ A.
    struct Separation
    {
        PatternSet a = 0;
        PatternSet b = 0;

        auto boundary() const -> PatternSet { return a & b; }
        auto order() const -> int { return popcount(a & b); }
        auto operator== (const Separation &) const -> bool = default;
    };

    auto is_separation(const Graph & p, const Separation & s) -> bool;

    /// Components of P - X, each vertex coloured by its neighbourhood inside X.
    /// Colours are consistent across all components of the same X, so equal
    /// codes mean isomorphic with X fixed pointwise. `anchors` are extra
    /// vertices that must be fixed by any isomorphism (each gets its own colour).
    struct BoundaryComponents
    {
        std::vector<PatternSet> parts;
        std::vector<CanonicalCode> codes;
    };

    auto boundary_components(const Graph & p, PatternSet x, PatternSet anchors = 0) -> BoundaryComponents;

    /// True iff an automorphism of P maps s1 onto s2 while fixing s1's
    /// boundary pointwise.
    auto anchored_isomorphic(const Graph & p, const Separation & s1, const Separation & s2) -> bool;
}
