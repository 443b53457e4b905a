#pragma once

#include <udg/count.hh>
#include <udg/geometry.hh>
#include <udg/graph.hh>
#include <udg/separations.hh>

#include <map>
#include <memory>
#include <tuple>
#include <vector>

namespace udg::mainalgo
{
    struct Options
    {
        int s_star = 0;        // sparsity cap; 0 means 2*ceil(sqrt(ply*k))
        int case1_width = 0;   // widest strip solved directly; 0 means ceil(sqrt(k/ply))
        bool use_kernel = true;
    };

    struct Stats
    {
        long subproblems = 0;
        long direct = 0;        // strips answered by the path decomposition DP
        long split = 0;         // strips answered by inclusion-exclusion over lines
        long states = 0;
        long matrix_entries = 0;
    };

    auto ceil_sqrt(long n) -> int;
    auto default_s_star(int k, int ply) -> int;
    auto default_case1_width(int k, int ply) -> int;

    /// T[x, x', class, f]: the class representative's A side, the boundary
    /// images listed in ascending order of boundary vertex.
    struct SubproblemKey
    {
        long x, x2;
        int cls;
        std::vector<int> images;

        auto operator<=> (const SubproblemKey &) const = default;
    };

    /// A sparse cut at `line`: pattern vertices `y` on disks meeting the line
    /// (images `phi`), and the class of the separation whose A side is
    /// everything left of it. `member` is one A side of that class inside
    /// the enclosing subproblem.
    struct BoundaryState
    {
        long line;
        int cls;
        std::vector<int> y;
        std::vector<int> phi;
        PatternSet yset = 0;
        PatternSet z = 0;
        PatternSet member = 0;
    };

    /// Per-query context: catalog, memo table, host strips.
    class Context
    {
        public:
            Context(const Graph & p, const EmbeddedGraph & host, Mode mode, const Options & options = {});
            ~Context();

            auto count() -> BigCount;
            auto solve_T(const SubproblemKey & key) -> BigCount;

            /// States of `key` at interior line m.
            auto states(const SubproblemKey & key, long m) -> std::vector<BoundaryState>;
            auto start_state(const SubproblemKey & key) -> BoundaryState;
            auto end_state(const SubproblemKey & key) -> BoundaryState;
            auto build_M_entry(const SubproblemKey & key, const BoundaryState & si, const BoundaryState & sj) -> BigCount;

            auto catalog() const -> const SeparationCatalog & { return *_cat; }
            auto root_key() const -> SubproblemKey;
            auto s_star() const -> int { return _s_star; }
            auto case1_width() const -> int { return _case1_width; }
            auto stats() const -> const Stats & { return _stats; }

        private:
            struct KeyInfo;
            auto info(const SubproblemKey & key) const -> KeyInfo;
            auto direct(const KeyInfo & k) -> BigCount;
            auto split(const SubproblemKey & key, const KeyInfo & k) -> BigCount;
            auto meets(int v, long m) const -> bool { return _lo[v] <= m && m <= _hi[v]; }

            Graph _p;
            EmbeddedGraph _host;
            Graph _g;
            Mode _mode;
            int _s_star, _case1_width;
            long _width;
            std::vector<long> _lo, _hi;
            std::unique_ptr<SeparationCatalog> _cat;
            std::map<SubproblemKey, BigCount> _memo;
            std::map<std::tuple<PatternSet, PatternSet, int>, std::unique_ptr<SeparationCatalog> > _strip_catalogs;
            Stats _stats;
    };

    /// |sub(P,G)| or |ind(P,G)| without the kernel preprocessing.
    auto count_direct(const Graph & p, const EmbeddedGraph & g, Mode mode, const Options & options = {},
            Stats * stats = nullptr) -> BigCount;

    /// Kernel preprocessing (when enabled) with count_direct answering the
    /// small hosts.
    auto count(const Graph & p, const EmbeddedGraph & g, Mode mode, const Options & options = {},
            Stats * stats = nullptr) -> BigCount;

    auto detect(const Graph & p, const EmbeddedGraph & g, Mode mode, const Options & options = {}) -> bool;
}
