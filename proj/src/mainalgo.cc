#include <udg/mainalgo.hh>
#include <udg/dpcounter.hh>
#include <udg/incexc.hh>
#include <udg/kernel.hh>
#include <udg/pathdecomp.hh>

#include <algorithm>
#include <set>

using std::vector;

namespace udg::mainalgo
{
    auto ceil_sqrt(long n) -> int
    {
        int r = 0;
        while (long(r) * r < n)
            ++r;
        return r;
    }

    auto default_s_star(int k, int ply) -> int
    {
        return 2 * ceil_sqrt(long(std::max(ply, 1)) * k);
    }

    auto default_case1_width(int k, int ply) -> int
    {
        int p = std::max(ply, 1), r = 0;
        while (long(r) * r * p < k)
            ++r;
        return std::max(r, 1);
    }

    struct Context::KeyInfo
    {
        long x, x2;
        int cls;
        PatternSet a, b, x_set, xl, xr;
        vector<int> xs;
        vector<int> f;            // pattern vertex -> host vertex or -1
        vector<bool> in_range;    // host vertex used by f
    };

    Context::Context(const Graph & p, const EmbeddedGraph & host, Mode mode, const Options & options) :
        _p(p),
        _mode(mode)
    {
        if (p.size() > 64)
            throw InfeasibleError{"pattern too large for the separation machinery"};
        _host = host.size() ? normalize_box(host).embedding : host;
        _g = adjacency_graph(_host);
        _width = host.size() ? normalize_box(_host).width : 0;
        for (int v = 0 ; v < _host.size() ; ++v) {
            auto [lo, hi] = lines_met(_host.centre(v).x);
            _lo.push_back(lo);
            _hi.push_back(hi);
        }
        int k = p.size(), pl = _host.size() ? ply(_host) : 1;
        _s_star = options.s_star > 0 ? options.s_star : default_s_star(k, pl);
        _case1_width = options.case1_width > 0 ? options.case1_width : default_case1_width(k, pl);
        _cat = std::make_unique<SeparationCatalog>(p, std::min(k, 2 * _s_star));
    }

    Context::~Context() = default;

    auto Context::root_key() const -> SubproblemKey
    {
        PatternSet all = full_set(_p.size());
        return SubproblemKey{-1, _width + 1, _cat->class_of(Separation{all, 0}), {}};
    }

    auto Context::count() -> BigCount
    {
        if (_p.size() == 0)
            return 1;
        return solve_T(root_key());
    }

    auto Context::info(const SubproblemKey & key) const -> KeyInfo
    {
        KeyInfo k;
        k.x = key.x;
        k.x2 = key.x2;
        k.cls = key.cls;
        auto & rep = (*_cat)[key.cls].representative;
        k.a = rep.a;
        k.b = rep.b;
        k.x_set = rep.boundary();
        k.xs = members(k.x_set);
        if (k.xs.size() != key.images.size())
            throw InputError{"subproblem boundary map does not match its class"};
        k.f.assign(_p.size(), -1);
        k.in_range.assign(_g.size(), false);
        k.xl = k.xr = 0;
        for (std::size_t i = 0 ; i < k.xs.size() ; ++i) {
            int u = k.xs[i], v = key.images[i];
            k.f[u] = v;
            k.in_range[v] = true;
            if (meets(v, key.x))
                k.xl |= bit(u);
            if (meets(v, key.x2))
                k.xr |= bit(u);
        }
        return k;
    }

    auto Context::solve_T(const SubproblemKey & key) -> BigCount
    {
        auto it = _memo.find(key);
        if (it != _memo.end())
            return it->second;

        ++_stats.subproblems;
        auto k = info(key);
        int interior = popcount(k.a & ~k.x_set);
        long lines = key.x2 - key.x - 1;
        BigCount result;
        if (interior > 0 && lines >= 1 && lines * (_s_star + 1) > 2L * popcount(k.a) && key.x2 - key.x > _case1_width) {
            ++_stats.split;
            result = split(key, k);
        }
        else {
            ++_stats.direct;
            result = direct(k);
        }
        _memo.emplace(key, result);
        return result;
    }

    auto Context::direct(const KeyInfo & k) -> BigCount
    {
        if ((k.a & ~k.x_set) == 0) {
            for (std::size_t i = 0 ; i < k.xs.size() ; ++i)
                for (std::size_t j = i + 1 ; j < k.xs.size() ; ++j) {
                    bool pe = _p.adjacent(k.xs[i], k.xs[j]), ge = _g.adjacent(k.f[k.xs[i]], k.f[k.xs[j]]);
                    if (_mode == Mode::Sub ? (pe && ! ge) : pe != ge)
                        return 0;
                }
            return 1;
        }

        // host: disks of the strip missing both lines, plus the boundary images
        vector<int> hv;
        for (int v = 0 ; v < _g.size() ; ++v) {
            bool in_strip = _hi[v] >= k.x && _lo[v] <= k.x2 && ! meets(v, k.x) && ! meets(v, k.x2);
            if (in_strip || k.in_range[v])
                hv.push_back(v);
        }
        if (hv.size() < std::size_t(popcount(k.a)))
            return 0;
        vector<int> local_host(_g.size(), -1);
        for (std::size_t i = 0 ; i < hv.size() ; ++i)
            local_host[hv[i]] = int(i);

        auto av = members(k.a);
        auto pa = induced(_p, av);
        PartialMap pins;
        PatternSet anchors = 0;
        for (std::size_t i = 0 ; i < av.size() ; ++i)
            if (k.f[av[i]] != -1) {
                pins[int(i)] = local_host[k.f[av[i]]];
                anchors |= bit(int(i));
            }

        auto emb = restrict_to(_host, hv);
        auto pd = make_nice(path_decomposition_from_box(emb));
        int cap = std::min(int(av.size()), pd.width() + 1);
        auto & cat = _strip_catalogs[{k.a, k.x_set, cap}];
        if (! cat)
            cat = std::make_unique<SeparationCatalog>(pa.graph, cap, anchors);
        return dp::count_extensions(pa.graph, induced(_g, hv).graph, pd, pins, _mode, *cat);
    }

    auto Context::start_state(const SubproblemKey & key) -> BoundaryState
    {
        auto k = info(key);
        BoundaryState s;
        s.line = key.x;
        s.y = members(k.xl);
        for (int u : s.y)
            s.phi.push_back(k.f[u]);
        s.yset = s.z = s.member = k.xl;
        s.cls = _cat->class_of(Separation{k.xl, full_set(_p.size())});
        return s;
    }

    auto Context::end_state(const SubproblemKey & key) -> BoundaryState
    {
        auto k = info(key);
        BoundaryState s;
        s.line = key.x2;
        s.y = members(k.xr);
        for (int u : s.y)
            s.phi.push_back(k.f[u]);
        s.yset = k.xr;
        s.z = k.x_set;
        s.member = k.a;
        s.cls = key.cls;
        return s;
    }

    auto Context::states(const SubproblemKey & key, long m) -> vector<BoundaryState>
    {
        auto k = info(key);
        vector<BoundaryState> result;

        // boundary vertices whose image meets m are forced into Y
        vector<int> y, phi;
        for (int u : k.xs)
            if (meets(k.f[u], m)) {
                y.push_back(u);
                phi.push_back(k.f[u]);
            }
        if (int(y.size()) > _s_star)
            return result;

        vector<int> free;
        for (int v = 0 ; v < _g.size() ; ++v)
            if (meets(v, m) && ! meets(v, k.x) && ! meets(v, k.x2) && ! k.in_range[v])
                free.push_back(v);

        // disks strictly between x and m, and strictly between m and x2
        int left_room = 0, right_room = 0;
        for (int v = 0 ; v < _g.size() ; ++v) {
            if (k.in_range[v])
                continue;
            if (_lo[v] > k.x && _hi[v] < m)
                ++left_room;
            if (_lo[v] > m && _hi[v] < k.x2)
                ++right_room;
        }

        auto candidates = members(k.a & ~k.x_set);
        vector<bool> used(_g.size(), false);
        PatternSet inside = k.a & ~k.x_set;

        auto emit = [&] () {
            PatternSet yset = 0;
            for (int u : y)
                yset |= bit(u);
            PatternSet z = yset | k.xl;
            auto binfo = _cat->boundary_info(z);
            if (! binfo)
                return;
            PatternSet left_only = k.xl & ~yset;

            int types = int(binfo->type_count.size());
            vector<vector<PatternSet> > pool(types);
            vector<bool> must_take(types, false);
            for (std::size_t i = 0 ; i < binfo->parts.size() ; ++i) {
                PatternSet part = binfo->parts[i];
                if ((part & inside) != part)
                    continue;
                int t = binfo->type[i];
                pool[t].push_back(part);
                for (int u : members(part))
                    for (int w : _p.neighbours(u))
                        if (contains(left_only, w))
                            must_take[t] = true;
            }

            vector<int> counts(types, 0);
            for (int t = 0 ; t < types ; ++t)
                if (must_take[t])
                    counts[t] = int(pool[t].size());
            while (true) {
                BoundaryState s;
                s.line = m;
                s.y = y;
                s.phi = phi;
                s.yset = yset;
                s.z = z;
                s.member = z;
                for (int t = 0 ; t < types ; ++t)
                    for (int i = 0 ; i < counts[t] ; ++i)
                        s.member |= pool[t][i];
                int left = popcount(s.member & ~z), right = popcount(inside & ~s.member & ~yset);
                if (left <= left_room && right <= right_room) {
                    s.cls = _cat->class_of(z, counts);
                    result.push_back(std::move(s));
                }

                int t = 0;
                while (t < types && (must_take[t] || counts[t] == int(pool[t].size()))) {
                    if (! must_take[t])
                        counts[t] = 0;
                    ++t;
                }
                if (t == types)
                    break;
                ++counts[t];
            }
        };

        // sort Y by vertex id at emission time
        auto emit_sorted = [&] () {
            vector<std::size_t> order(y.size());
            for (std::size_t i = 0 ; i < order.size() ; ++i)
                order[i] = i;
            std::sort(order.begin(), order.end(), [&] (std::size_t a, std::size_t b) { return y[a] < y[b]; });
            auto y0 = y, phi0 = phi;
            for (std::size_t i = 0 ; i < order.size() ; ++i) {
                y[i] = y0[order[i]];
                phi[i] = phi0[order[i]];
            }
            emit();
            y = y0;
            phi = phi0;
        };

        auto agrees = [&] (int u, int v, int w, int gw) {
            bool pe = _p.adjacent(u, w), ge = _g.adjacent(v, gw);
            return _mode == Mode::Sub ? (! pe || ge) : pe == ge;
        };
        auto compatible = [&] (int u, int v) {
            for (int w : k.xs)
                if (! agrees(u, v, w, k.f[w]))
                    return false;
            for (std::size_t i = 0 ; i < y.size() ; ++i)
                if (! contains(k.x_set, y[i]) && ! agrees(u, v, y[i], phi[i]))
                    return false;
            return true;
        };

        auto search = [&] (auto & self, std::size_t i) -> void {
            if (i == candidates.size()) {
                emit_sorted();
                return;
            }
            self(self, i + 1);
            if (int(y.size()) >= _s_star)
                return;
            int u = candidates[i];
            for (int v : free) {
                if (used[v] || ! compatible(u, v))
                    continue;
                used[v] = true;
                y.push_back(u);
                phi.push_back(v);
                self(self, i + 1);
                y.pop_back();
                phi.pop_back();
                used[v] = false;
            }
        };
        search(search, 0);
        _stats.states += long(result.size());
        return result;
    }

    auto Context::build_M_entry(const SubproblemKey & key, const BoundaryState & si, const BoundaryState & sj) -> BigCount
    {
        if (sj.line <= si.line)
            return 0;
        auto k = info(key);

        // phi_i, phi_j agree where both are defined; images exact on both lines
        for (std::size_t a = 0 ; a < si.y.size() ; ++a) {
            int u = si.y[a], v = si.phi[a];
            auto pos = std::find(sj.y.begin(), sj.y.end(), u);
            if (pos != sj.y.end()) {
                if (sj.phi[std::size_t(pos - sj.y.begin())] != v)
                    return 0;
            }
            else if (meets(v, sj.line))
                return 0;
        }
        for (std::size_t b = 0 ; b < sj.y.size() ; ++b)
            if (! contains(si.yset, sj.y[b]) && meets(sj.phi[b], si.line))
                return 0;

        if (((k.xl & sj.yset) & ~si.yset) != 0)
            return 0;
        if ((si.z & sj.member) != si.z)
            return 0;

        PatternSet all = full_set(_p.size());
        Separation container{sj.member, (all & ~sj.member) | sj.z};
        auto mu = multiplicity(*_cat, si.cls, container);
        if (mu.count == 0)
            return 0;

        PatternSet seg = (sj.member & ~mu.chosen) | si.yset;
        PatternSet w = si.yset | sj.yset;
        PatternSet left_only = k.xl & ~si.yset, right = seg & ~si.yset;
        for (int u : members(left_only))
            for (int v : _p.neighbours(u))
                if (contains(right, v))
                    return 0;

        Separation s{seg, (all & ~seg) | w};
        if (! is_separation(_p, s))
            return 0;
        int cls = _cat->class_of(s);
        if (cls < 0)
            return 0;

        SubproblemKey sub{si.line, sj.line, cls, {}};
        for (int u : members(w)) {
            auto pi = std::find(si.y.begin(), si.y.end(), u);
            if (pi != si.y.end())
                sub.images.push_back(si.phi[std::size_t(pi - si.y.begin())]);
            else
                sub.images.push_back(sj.phi[std::size_t(std::find(sj.y.begin(), sj.y.end(), u) - sj.y.begin())]);
        }
        if (sub.x2 - sub.x >= key.x2 - key.x)
            throw std::logic_error{"subproblem recursion does not shrink"};

        ++_stats.matrix_entries;
        auto t = solve_T(sub);
        return t == 0 ? BigCount{0} : mu.count * t;
    }

    auto Context::split(const SubproblemKey & key, const KeyInfo &) -> BigCount
    {
        auto s0 = start_state(key), send = end_state(key);

        vector<vector<BoundaryState> > by_line;
        for (long m = key.x + 1 ; m < key.x2 ; ++m)
            by_line.push_back(states(key, m));

        // states reachable from s0 through nonzero entries
        vector<BoundaryState> reach;
        vector<BigCount> start;
        vector<std::tuple<int, int, BigCount> > entries;
        vector<vector<int> > index(by_line.size());
        for (std::size_t li = 0 ; li < by_line.size() ; ++li) {
            index[li].assign(by_line[li].size(), -1);
            for (std::size_t si = 0 ; si < by_line[li].size() ; ++si) {
                auto & s = by_line[li][si];
                BigCount first = build_M_entry(key, s0, s);
                vector<std::pair<int, BigCount> > incoming;
                for (int r = 0 ; r < int(reach.size()) ; ++r) {
                    if (reach[r].line >= s.line)
                        continue;
                    BigCount e = build_M_entry(key, reach[r], s);
                    if (e != 0)
                        incoming.emplace_back(r, std::move(e));
                }
                if (first == 0 && incoming.empty())
                    continue;
                int id = int(reach.size());
                index[li][si] = id;
                reach.push_back(s);
                start.push_back(std::move(first));
                for (auto & [r, e] : incoming)
                    entries.emplace_back(r, id, std::move(e));
            }
        }
        if (reach.empty())
            return 0;

        SparseMatrix m(int(reach.size()));
        for (auto & [r, c, e] : entries)
            m.add(r, c, e);
        vector<BigCount> end;
        for (auto & s : reach)
            end.push_back(build_M_entry(key, s, send));

        return alternating_chain_sum(m, start, end, int(key.x2 - key.x - 1));
    }

    auto count_direct(const Graph & p, const EmbeddedGraph & g, Mode mode, const Options & options, Stats * stats) -> BigCount
    {
        if (p.size() == 0)
            return 1;
        if (g.size() < p.size())
            return 0;
        Context ctx(p, g, mode, options);
        auto result = ctx.count();
        if (stats) {
            auto & s = ctx.stats();
            stats->subproblems += s.subproblems;
            stats->direct += s.direct;
            stats->split += s.split;
            stats->states += s.states;
            stats->matrix_entries += s.matrix_entries;
        }
        return result;
    }

    auto count(const Graph & p, const EmbeddedGraph & g, Mode mode, const Options & options, Stats * stats) -> BigCount
    {
        if (! options.use_kernel)
            return count_direct(p, g, mode, options, stats);
        kernel::Solver leaf = [&] (const Graph & q, const EmbeddedGraph & h, Mode m) {
            return count_direct(q, h, m, options, stats);
        };
        return kernel::kernelized_count(p, g, mode, leaf);
    }

    auto detect(const Graph & p, const EmbeddedGraph & g, Mode mode, const Options & options) -> bool
    {
        return count(p, g, mode, options) > 0;
    }
}
