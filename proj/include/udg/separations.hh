#pragma once

#include <udg/count.hh>
#include <udg/graph.hh>

#include <unordered_map>
#include <vector>

namespace udg
{
    /// Connected components of a pattern grouped into isomorphism classes.
    /// Classes are ordered by canonical code; members by smallest vertex.
    struct ComponentSignature
    {
        std::vector<CanonicalCode> codes;
        std::vector<std::vector<std::vector<int> > > members;

        auto classes() const -> int { return int(codes.size()); }
        auto counts() const -> std::vector<int>;
    };

    auto component_signature(const Graph & p) -> ComponentSignature;

    /// Components of P - X and their anchored isomorphism types.
    struct BoundaryInfo
    {
        PatternSet x = 0;
        std::vector<PatternSet> parts;
        std::vector<int> type;             // per part
        std::vector<CanonicalCode> codes;  // per type
        std::vector<int> type_count;       // per type
        int first_class = 0;
    };

    struct CatalogClass
    {
        Separation representative;
        std::vector<int> counts;   // components of each type placed on the A side
        BigCount size;             // separations in the class
        int boundary_index = 0;
    };

    /// Pairwise non-isomorphic separations of order <= s, one class per
    /// (boundary X, per-type component counts). Vertices in `anchors` are
    /// treated as distinguishable: no isomorphism may move them.
    class SeparationCatalog
    {
        public:
            SeparationCatalog(const Graph & p, int s, PatternSet anchors = 0);

            auto pattern() const -> const Graph & { return _pattern; }
            auto order_cap() const -> int { return _order_cap; }
            auto anchors() const -> PatternSet { return _anchors; }

            auto size() const -> int { return int(_classes.size()); }
            auto operator[] (int c) const -> const CatalogClass & { return _classes[c]; }
            auto boundary_of(int c) const -> PatternSet { return _classes[c].representative.boundary(); }

            auto boundaries() const -> const std::vector<BoundaryInfo> & { return _boundaries; }
            auto boundary_info(PatternSet x) const -> const BoundaryInfo *;

            /// Class id of a separation, or -1 when it is not a separation
            /// or its order exceeds the cap.
            auto class_of(const Separation & s) const -> int;
            auto class_of(PatternSet x, const std::vector<int> & counts) const -> int;

            /// Total number of separations covered (sum of class sizes).
            auto separation_count() const -> BigCount;

        private:
            Graph _pattern;
            int _order_cap;
            PatternSet _anchors;
            std::vector<BoundaryInfo> _boundaries;
            std::unordered_map<PatternSet, int> _boundary_index;
            std::vector<CatalogClass> _classes;
    };

    auto sigma(const Graph & p, int s) -> long;

    struct Multiplicity
    {
        BigCount count;
        PatternSet chosen = 0;   // one qualifying A side (valid when count > 0)
    };

    /// Number of separations (C, D) isomorphic to class c1 with C inside the
    /// container's A side and C \ D avoiding the container's B side: a
    /// product of binomials over component types of P - X1. `chosen` is the
    /// first such C.
    auto multiplicity(const SeparationCatalog & cat, int c1, const Separation & container) -> Multiplicity;
    auto multiplicity(const SeparationCatalog & cat, int c1, int c2) -> BigCount;

    /// #components(P - X) <= 6|X|.
    auto six_s_component_check(const Graph & p, PatternSet x) -> bool;
}
