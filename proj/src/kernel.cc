#include <udg/kernel.hh>
#include <udg/bruteforce.hh>
#include <udg/dpcounter.hh>
#include <udg/incexc.hh>

#include <map>

using std::vector;

namespace udg::kernel
{
    namespace
    {
        auto mod(long m, long l) -> long
        {
            long r = m % l;
            return r < 0 ? r + l : r;
        }

        // Last line of class c at or left of q.
        auto line_at_or_before(const Rational & q, long c, long l) -> long
        {
            long f = floor_of(q);
            return f - mod(f - c, l);
        }

        auto meets_class(const Rational & cx, long c, long l) -> bool
        {
            auto [lo, hi] = lines_met(cx);
            for (long m = lo ; m <= hi ; ++m)
                if (mod(m, l) == c)
                    return true;
            return false;
        }

        auto in_block(const Rational & cx, long a, long b, long l) -> bool
        {
            if (meets_class(cx, a, l) || meets_class(cx, b, l))
                return false;
            if (a == b)
                return true;
            Rational left = cx - Rational(1, 2);
            return line_at_or_before(left, a, l) > line_at_or_before(left, b, l);
        }
    }

    auto blocks(const EmbeddedGraph & g, int a, int b, int period, Axis axis) -> vector<BlockComponent>
    {
        if (period < 1 || a < 0 || b < 0 || a >= period || b >= period)
            throw InputError{"blocks: residues must lie in 0..period-1"};
        auto emb = axis == Axis::X ? g : transpose(g);

        vector<int> inside;
        for (int v = 0 ; v < emb.size() ; ++v)
            if (in_block(emb.centre(v).x, a, b, period))
                inside.push_back(v);

        auto sub = induced(adjacency_graph(emb), inside);
        vector<BlockComponent> result;
        for (auto & comp : components(sub.graph)) {
            BlockComponent bc;
            for (int v : comp)
                bc.vertices.push_back(sub.to_parent[v]);
            bc.embedding = normalize_box(restrict_to(g, bc.vertices)).embedding;
            result.push_back(std::move(bc));
        }
        return result;
    }

    VectorSpace::VectorSpace(vector<int> p) :
        _p(std::move(p))
    {
        _size = 1;
        for (int x : _p) {
            if (x < 0)
                throw InputError{"component counts must be nonnegative"};
            _stride.push_back(_size);
            _size *= x + 1;
        }
    }

    auto VectorSpace::index(const vector<int> & w) const -> int
    {
        int i = 0;
        for (std::size_t t = 0 ; t < _p.size() ; ++t)
            i += w[t] * _stride[t];
        return i;
    }

    auto VectorSpace::vector_at(int index) const -> vector<int>
    {
        vector<int> w(_p.size());
        for (std::size_t t = 0 ; t < _p.size() ; ++t) {
            w[t] = index % (_p[t] + 1);
            index /= _p[t] + 1;
        }
        return w;
    }

    auto sub_pattern(const Graph & p, const ComponentSignature & sig, const vector<int> & w) -> Graph
    {
        vector<int> vertices;
        for (int t = 0 ; t < sig.classes() ; ++t)
            for (int i = 0 ; i < w[t] ; ++i)
                vertices.insert(vertices.end(), sig.members[t][i].begin(), sig.members[t][i].end());
        return induced(p, vertices).graph;
    }

    namespace
    {
        // prod_t binom(w_t, v_t)
        auto choose(const vector<int> & w, const vector<int> & v) -> BigCount
        {
            BigCount r = 1;
            for (std::size_t t = 0 ; t < w.size() ; ++t)
                r *= binomial(unsigned(w[t]), unsigned(v[t]));
            return r;
        }

        auto leq(const vector<int> & a, const vector<int> & b) -> bool
        {
            for (std::size_t t = 0 ; t < a.size() ; ++t)
                if (a[t] > b[t])
                    return false;
            return true;
        }

        auto minus(const vector<int> & a, const vector<int> & b) -> vector<int>
        {
            vector<int> r(a.size());
            for (std::size_t t = 0 ; t < a.size() ; ++t)
                r[t] = a[t] - b[t];
            return r;
        }
    }

    auto distribute_table(const vector<vector<BigCount> > & per_part, const VectorSpace & space) -> vector<BigCount>
    {
        vector<BigCount> current(space.size(), 0);
        current[0] = 1;
        vector<vector<int> > vecs;
        for (int i = 0 ; i < space.size() ; ++i)
            vecs.push_back(space.vector_at(i));

        for (auto & tab : per_part) {
            if (int(tab.size()) != space.size())
                throw InputError{"distribute: table size does not match the component signature"};
            vector<BigCount> next(space.size(), 0);
            for (int wi = 0 ; wi < space.size() ; ++wi)
                for (int vi = 0 ; vi < space.size() ; ++vi) {
                    if (tab[vi] == 0 || ! leq(vecs[vi], vecs[wi]))
                        continue;
                    auto & rest = current[space.index(minus(vecs[wi], vecs[vi]))];
                    if (rest != 0)
                        next[wi] += choose(vecs[wi], vecs[vi]) * tab[vi] * rest;
                }
            current = std::move(next);
        }
        return current;
    }

    auto distribute_components(const vector<vector<BigCount> > & per_part, const VectorSpace & space) -> BigCount
    {
        return distribute_table(per_part, space)[space.top()];
    }

    auto period(int k) -> int
    {
        return 2 * k + 1;
    }

    namespace
    {
        auto count_shifting(const Graph & p, const EmbeddedGraph & g, Mode mode, Axis axis,
                const Solver & inner, Stats * stats, int l) -> BigCount
        {
            if (p.size() == 0)
                return 1;
            if (g.size() == 0)
                return 0;
            if (stats)
                ++stats->shifting_passes;

            auto emb = normalize_box(axis == Axis::X ? g : transpose(g)).embedding;
            auto sig = component_signature(p);
            VectorSpace space(sig.counts());
            vector<Graph> patterns;
            vector<int> pattern_size;
            for (int wi = 0 ; wi < space.size() ; ++wi) {
                patterns.push_back(sub_pattern(p, sig, space.vector_at(wi)));
                pattern_size.push_back(patterns.back().size());
            }

            // |maps of P[w] into B[a,b]| for every w
            std::map<vector<int>, vector<BigCount> > memo;
            vector<vector<vector<BigCount> > > table(l, vector<vector<BigCount> >(l));
            for (int a = 0 ; a < l ; ++a)
                for (int b = 0 ; b < l ; ++b) {
                    vector<vector<BigCount> > parts;
                    for (auto & comp : blocks(emb, a, b, l)) {
                        if (stats)
                            ++stats->block_components;
                        auto [it, fresh] = memo.try_emplace(comp.vertices);
                        if (fresh) {
                            auto & tab = it->second;
                            tab.assign(space.size(), 0);
                            tab[0] = 1;
                            for (int wi = 1 ; wi < space.size() ; ++wi)
                                if (pattern_size[wi] <= comp.embedding.size())
                                    tab[wi] = inner(patterns[wi], comp.embedding, mode);
                        }
                        parts.push_back(it->second);
                    }
                    table[a][b] = distribute_table(parts, space);
                }

            int s = space.size();
            vector<vector<int> > vecs;
            for (int i = 0 ; i < s ; ++i)
                vecs.push_back(space.vector_at(i));
            auto top = vecs[space.top()];

            SparseMatrix m(l * s);
            for (int c = 0 ; c < l ; ++c)
                for (int c2 = c + 1 ; c2 < l ; ++c2)
                    for (int u = 0 ; u < s ; ++u)
                        for (int u2 = 0 ; u2 < s ; ++u2) {
                            if (! leq(vecs[u], vecs[u2]))
                                continue;
                            auto & t = table[c][c2][space.index(minus(vecs[u2], vecs[u]))];
                            if (t != 0)
                                m.add(c * s + u, c2 * s + u2, choose(vecs[u2], vecs[u]) * t);
                        }

            BigCount total = 0;
            for (int c1 = 0 ; c1 < l ; ++c1) {
                vector<BigCount> start(l * s, 0), end(l * s, 0);
                start[c1 * s] = 1;
                for (int c = c1 ; c < l ; ++c)
                    for (int u = 0 ; u < s ; ++u)
                        end[c * s + u] = choose(top, vecs[u]) * table[c][c1][space.index(minus(top, vecs[u]))];
                total += alternating_chain_sum(m, start, end, l);
            }
            return total;
        }

        auto kernelized(const Graph & p, const EmbeddedGraph & g, Mode mode, const Solver & solver,
                Stats * stats, int l) -> BigCount
        {
            if (p.size() == 0)
                return 1;
            if (g.size() == 0)
                return 0;
            auto boxed = normalize_box(g);
            if (boxed.width <= l && boxed.height <= l) {
                if (stats) {
                    ++stats->solver_calls;
                    stats->largest_leaf = std::max(stats->largest_leaf, long(g.size()));
                    stats->largest_leaf_side = std::max({stats->largest_leaf_side, boxed.width, boxed.height});
                }
                return solver(p, boxed.embedding, mode);
            }
            Solver inner = [&] (const Graph & q, const EmbeddedGraph & h, Mode m) {
                return kernelized(q, h, m, solver, stats, l);
            };
            return count_shifting(p, boxed.embedding, mode, boxed.width > l ? Axis::X : Axis::Y, inner, stats, l);
        }
    }

    auto count_via_shifting(const Graph & p, const EmbeddedGraph & g, Mode mode, Axis axis,
            const Solver & inner, Stats * stats) -> BigCount
    {
        return count_shifting(p, g, mode, axis, inner, stats, period(p.size()));
    }

    auto kernelized_count(const Graph & p, const EmbeddedGraph & g, Mode mode, const Solver & solver,
            Stats * stats) -> BigCount
    {
        return kernelized(p, g, mode, solver, stats, period(p.size()));
    }

    auto brute_solver() -> Solver
    {
        return [] (const Graph & p, const EmbeddedGraph & host, Mode mode) {
            return brute::count_maps(p, adjacency_graph(host), mode);
        };
    }

    auto dp_solver() -> Solver
    {
        return [] (const Graph & p, const EmbeddedGraph & host, Mode mode) {
            return dp::count(p, host, mode);
        };
    }
}
