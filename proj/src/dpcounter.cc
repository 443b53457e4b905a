#include <udg/dpcounter.hh>

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <unordered_map>

using std::vector;

namespace udg::dp
{
    namespace
    {
        struct Key
        {
            int cls;
            vector<int> images;   // boundary vertices in ascending order -> host

            auto operator== (const Key &) const -> bool = default;
        };

        struct KeyHash
        {
            auto operator() (const Key & k) const -> std::size_t
            {
                std::size_t seed = std::size_t(k.cls);
                boost::hash_combine(seed, boost::hash_range(k.images.begin(), k.images.end()));
                return seed;
            }
        };

        using Table = std::unordered_map<Key, BigCount, KeyHash>;

        class Runner
        {
            public:
                Runner(const Graph & p, const Graph & g, const PartialMap & f, Mode mode, const SeparationCatalog & cat) :
                    _p(p), _g(g), _mode(mode), _cat(cat),
                    _pin(p.size(), -1), _pinned_by(g.size(), -1),
                    _introduce(cat.size() * std::size_t(p.size()), -2),
                    _forget(cat.size() * std::size_t(p.size()), -2)
                {
                    for (auto [u, v] : f) {
                        _pin[u] = v;
                        _pinned_by[v] = u;
                    }
                    for (int c = 0 ; c < cat.size() ; ++c)
                        _boundary.push_back(members(cat.boundary_of(c)));
                }

                auto introduce(const Table & in, int v) -> Table
                {
                    Table out;
                    int owner = _pinned_by[v];
                    for (auto & [key, count] : in) {
                        if (owner == -1)
                            out[key] += count;   // v stays unused

                        auto & sep = _cat[key.cls].representative;
                        auto & x = _boundary[key.cls];
                        PatternSet rest = sep.b & ~sep.a;
                        for (int a : members(rest)) {
                            if (owner != -1 && owner != a)
                                continue;
                            if (_pin[a] != -1 && _pin[a] != v)
                                continue;
                            bool ok = true;
                            for (std::size_t i = 0 ; i < x.size() && ok ; ++i) {
                                bool pe = _p.adjacent(a, x[i]), ge = _g.adjacent(v, key.images[i]);
                                ok = _mode == Mode::Sub ? (! pe || ge) : pe == ge;
                            }
                            if (! ok)
                                continue;
                            int target = introduce_target(key.cls, a);
                            if (target < 0)
                                continue;

                            Key next{target, {}};
                            next.images.reserve(x.size() + 1);
                            std::size_t i = 0;
                            for ( ; i < x.size() && x[i] < a ; ++i)
                                next.images.push_back(key.images[i]);
                            next.images.push_back(v);
                            for ( ; i < x.size() ; ++i)
                                next.images.push_back(key.images[i]);
                            out[std::move(next)] += count;
                            ++_stats.transitions;
                        }
                    }
                    return out;
                }

                auto forget(const Table & in, int v) -> Table
                {
                    Table out;
                    for (auto & [key, count] : in) {
                        auto pos = std::find(key.images.begin(), key.images.end(), v);
                        if (pos == key.images.end()) {
                            out[key] += count;
                            continue;
                        }
                        auto index = std::size_t(pos - key.images.begin());
                        int u = _boundary[key.cls][index];
                        int target = forget_target(key.cls, u);
                        if (target < 0)
                            continue;
                        Key next{target, key.images};
                        next.images.erase(next.images.begin() + long(index));
                        out[std::move(next)] += count;
                        ++_stats.transitions;
                    }
                    return out;
                }

                auto stats() -> Stats & { return _stats; }

            private:
                auto introduce_target(int c, int a) -> int
                {
                    auto & slot = _introduce[std::size_t(c) * _p.size() + a];
                    if (slot == -2) {
                        auto & sep = _cat[c].representative;
                        bool clean = true;
                        for (int w : _p.neighbours(a))
                            if (contains(sep.a & ~sep.b, w))
                                clean = false;
                        slot = clean ? _cat.class_of(Separation{sep.a | bit(a), sep.b}) : -1;
                    }
                    return slot;
                }

                auto forget_target(int c, int u) -> int
                {
                    auto & slot = _forget[std::size_t(c) * _p.size() + u];
                    if (slot == -2) {
                        auto & sep = _cat[c].representative;
                        bool clean = true;
                        for (int w : _p.neighbours(u))
                            if (contains(sep.b & ~sep.a, w))
                                clean = false;
                        slot = clean ? _cat.class_of(Separation{sep.a, sep.b & ~bit(u)}) : -1;
                    }
                    return slot;
                }

                const Graph & _p;
                const Graph & _g;
                Mode _mode;
                const SeparationCatalog & _cat;
                vector<int> _pin, _pinned_by;
                vector<vector<int> > _boundary;
                vector<int> _introduce, _forget;
                Stats _stats;
        };

        auto check_map(const Graph & p, const Graph & g, const PartialMap & f) -> PatternSet
        {
            PatternSet domain = 0;
            vector<bool> used(g.size(), false);
            for (auto [u, v] : f) {
                if (u < 0 || u >= p.size() || v < 0 || v >= g.size())
                    throw InputError{"pinned map refers to a missing vertex"};
                if (used[v])
                    throw InputError{"pinned map is not injective"};
                used[v] = true;
                domain |= bit(u);
            }
            return domain;
        }

        auto nice_events(const PathDecomposition & pd, const Graph & g) -> vector<Event>
        {
            auto events = pd.events.empty() ? make_nice(pd).events : pd.events;
            vector<int> state(g.size(), 0);   // 0 unseen, 1 live, 2 gone
            for (auto & e : events) {
                if (e.vertex < 0 || e.vertex >= g.size())
                    throw InputError{"decomposition refers to a missing host vertex"};
                int & s = state[e.vertex];
                if (e.kind == EventKind::Introduce ? s != 0 : s != 1)
                    throw InputError{"decomposition events are out of order"};
                s = e.kind == EventKind::Introduce ? 1 : 2;
            }
            for (int s : state)
                if (s == 1)
                    throw InputError{"decomposition leaves a vertex unforgotten"};
            return events;
        }
    }

    auto catalog_for(const Graph & p, const PathDecomposition & pd, const PartialMap & f) -> SeparationCatalog
    {
        PatternSet anchors = 0;
        for (auto [u, v] : f) {
            if (u < 0 || u >= p.size())
                throw InputError{"pinned map refers to a missing vertex"};
            anchors |= bit(u);
        }
        return SeparationCatalog(p, std::min(p.size(), pd.width() + 1), anchors);
    }

    auto count_extensions(const Graph & p, const Graph & g, const PathDecomposition & pd,
            const PartialMap & f, Mode mode, const SeparationCatalog & cat, Stats * stats) -> BigCount
    {
        if (p.size() > 64)
            throw InfeasibleError{"pattern too large for the separation dynamic program"};
        if (! (cat.pattern() == p))
            throw InputError{"catalog was built for a different pattern"};
        PatternSet domain = check_map(p, g, f);
        if ((cat.anchors() & domain) != domain)
            throw InputError{"catalog does not anchor every pinned vertex"};
        if (cat.order_cap() < std::min(p.size(), pd.width() + 1))
            throw InputError{"catalog order cap is below the decomposition width"};

        auto events = nice_events(pd, g);
        Runner runner(p, g, f, mode, cat);

        PatternSet all = full_set(p.size());
        int leaf = cat.class_of(Separation{0, all});
        int root = cat.class_of(Separation{all, 0});

        Table table;
        table[Key{leaf, {}}] = 1;
        for (auto & e : events) {
            table = e.kind == EventKind::Introduce ? runner.introduce(table, e.vertex) : runner.forget(table, e.vertex);
            runner.stats().peak_states = std::max(runner.stats().peak_states, long(table.size()));
        }
        if (stats)
            *stats = runner.stats();

        auto it = table.find(Key{root, {}});
        return it == table.end() ? BigCount{0} : it->second;
    }

    auto count_extensions(const Graph & p, const Graph & g, const PathDecomposition & pd,
            const PartialMap & f, Mode mode) -> BigCount
    {
        return count_extensions(p, g, pd, f, mode, catalog_for(p, pd, f));
    }

    auto count(const Graph & p, const Graph & g, const PathDecomposition & pd, Mode mode) -> BigCount
    {
        return count_extensions(p, g, pd, {}, mode);
    }

    auto count(const Graph & p, const EmbeddedGraph & host, Mode mode) -> BigCount
    {
        return count(p, adjacency_graph(host), path_decomposition_from_box(host), mode);
    }
}
