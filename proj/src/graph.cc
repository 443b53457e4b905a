#include <udg/count.hh>
#include <udg/graph.hh>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <utility>

using std::pair;
using std::string;
using std::vector;

namespace udg
{
    Graph::Graph(int n) :
        _n(n),
        _adj(n),
        _matrix(std::size_t(n) * n, 0)
    {
    }

    auto Graph::add_edge(int u, int v) -> void
    {
        if (u < 0 || v < 0 || u >= _n || v >= _n)
            throw InputError{"edge endpoint out of range"};
        if (u == v)
            throw InputError{"loops are not allowed"};
        if (adjacent(u, v))
            return;

        _matrix[std::size_t(u) * _n + v] = 1;
        _matrix[std::size_t(v) * _n + u] = 1;
        _adj[u].insert(std::lower_bound(_adj[u].begin(), _adj[u].end(), v), v);
        _adj[v].insert(std::lower_bound(_adj[v].begin(), _adj[v].end(), u), u);
    }

    auto Graph::edge_count() const -> long
    {
        long total = 0;
        for (auto & a : _adj)
            total += long(a.size());
        return total / 2;
    }

    auto induced(const Graph & g, const vector<int> & vertices) -> InducedGraph
    {
        vector<int> to_new(g.size(), -1);
        for (std::size_t i = 0 ; i < vertices.size() ; ++i) {
            int v = vertices[i];
            if (v < 0 || v >= g.size())
                throw InputError{"induced: vertex " + std::to_string(v) + " out of range"};
            if (to_new[v] != -1)
                throw InputError{"induced: vertex " + std::to_string(v) + " repeated"};
            to_new[v] = int(i);
        }

        InducedGraph result{Graph(int(vertices.size())), vertices};
        for (std::size_t i = 0 ; i < vertices.size() ; ++i)
            for (int w : g.neighbours(vertices[i]))
                if (to_new[w] > int(i))
                    result.graph.add_edge(int(i), to_new[w]);
        return result;
    }

    auto components(const Graph & g) -> vector<vector<int> >
    {
        vector<vector<int> > result;
        vector<char> seen(g.size(), 0);
        for (int s = 0 ; s < g.size() ; ++s) {
            if (seen[s])
                continue;
            vector<int> comp{s}, stack{s};
            seen[s] = 1;
            while (! stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : g.neighbours(v))
                    if (! seen[w]) {
                        seen[w] = 1;
                        comp.push_back(w);
                        stack.push_back(w);
                    }
            }
            std::sort(comp.begin(), comp.end());
            result.push_back(std::move(comp));
        }
        return result;
    }

    VertexColoring::VertexColoring(vector<int> colour) :
        _colour(std::move(colour))
    {
        if (_colour.empty())
            return;
        vector<char> used(_colour.size(), 0);
        for (int c : _colour) {
            if (c < 0 || c >= int(_colour.size()))
                throw InputError{"colour ids must form a contiguous range from 0"};
            used[c] = 1;
        }
        _classes = int(std::find(used.begin(), used.end(), 0) - used.begin());
        if (std::any_of(used.begin() + _classes, used.end(), [] (char u) { return u; }))
            throw InputError{"colour ids must form a contiguous range from 0"};
    }

    auto VertexColoring::uniform(int n) -> VertexColoring
    {
        return VertexColoring(vector<int>(n, 0));
    }

    namespace
    {
        // Colour refinement to a stable partition. Colours stay ordered
        // consistently with the input colours, so refinement never merges or
        // reorders existing classes.
        auto refine(const Graph & g, vector<int> colours) -> vector<int>
        {
            int n = g.size();
            int classes = -1;
            while (true) {
                vector<pair<vector<int>, int> > sigs(n);
                for (int v = 0 ; v < n ; ++v) {
                    auto & sig = sigs[v].first;
                    sig.reserve(g.degree(v) + 1);
                    sig.push_back(colours[v]);
                    for (int w : g.neighbours(v))
                        sig.push_back(colours[w]);
                    std::sort(sig.begin() + 1, sig.end());
                    sigs[v].second = v;
                }
                std::sort(sigs.begin(), sigs.end());
                int next = 0;
                for (int i = 0 ; i < n ; ++i) {
                    if (i > 0 && sigs[i].first != sigs[i - 1].first)
                        ++next;
                    colours[sigs[i].second] = next;
                }
                int now = n == 0 ? 0 : next + 1;
                if (now == classes)
                    return colours;
                classes = now;
            }
        }

        auto twins(const Graph & g, int u, int v) -> bool
        {
            for (int w = 0 ; w < g.size() ; ++w)
                if (w != u && w != v && g.adjacent(u, w) != g.adjacent(v, w))
                    return false;
            return true;
        }

        struct Search
        {
            const Graph & g;
            const VertexColoring & initial;
            string best;
            bool have_best = false;

            auto leaf_code(const vector<int> & colours) -> string
            {
                int n = g.size();
                vector<int> at(n);
                for (int v = 0 ; v < n ; ++v)
                    at[colours[v]] = v;

                string code;
                auto put = [&] (std::uint32_t x) {
                    for (int s = 24 ; s >= 0 ; s -= 8)
                        code.push_back(char((x >> s) & 0xff));
                };
                put(std::uint32_t(n));
                for (int i = 0 ; i < n ; ++i)
                    put(std::uint32_t(initial[at[i]]));
                unsigned char acc = 0;
                int bits = 0;
                for (int i = 0 ; i < n ; ++i)
                    for (int j = i + 1 ; j < n ; ++j) {
                        acc = (acc << 1) | (g.adjacent(at[i], at[j]) ? 1 : 0);
                        if (++bits == 8) {
                            code.push_back(char(acc));
                            acc = 0;
                            bits = 0;
                        }
                    }
                if (bits)
                    code.push_back(char(acc << (8 - bits)));
                return code;
            }

            auto go(const vector<int> & colours) -> void
            {
                int n = g.size();
                vector<int> cell_size(n, 0);
                for (int c : colours)
                    ++cell_size[c];

                int target = -1;
                for (int c = 0 ; c < n ; ++c)
                    if (cell_size[c] > 1) {
                        target = c;
                        break;
                    }

                if (target == -1) {
                    auto code = leaf_code(colours);
                    if (! have_best || code < best) {
                        best = std::move(code);
                        have_best = true;
                    }
                    return;
                }

                // Individualising either of two twins leads to isomorphic
                // subtrees (the transposition is an automorphism fixing the
                // current colouring), so one representative per twin class.
                vector<int> tried;
                for (int v = 0 ; v < n ; ++v) {
                    if (colours[v] != target)
                        continue;
                    if (std::any_of(tried.begin(), tried.end(), [&] (int u) { return twins(g, u, v); }))
                        continue;
                    tried.push_back(v);

                    vector<int> split(n);
                    for (int w = 0 ; w < n ; ++w)
                        split[w] = 2 * colours[w] + ((colours[w] == target && w != v) ? 1 : 0);
                    go(refine(g, std::move(split)));
                }
            }
        };
    }

    auto canonical(const Graph & g, const VertexColoring & colouring) -> CanonicalCode
    {
        if (colouring.size() != g.size())
            throw InputError{"colouring does not cover the graph"};

        vector<int> start(g.size());
        for (int v = 0 ; v < g.size() ; ++v)
            start[v] = colouring[v];

        Search search{g, colouring, {}, false};
        search.go(refine(g, std::move(start)));
        return search.best;
    }

    auto canonical(const Graph & g) -> CanonicalCode
    {
        return canonical(g, VertexColoring::uniform(g.size()));
    }

    auto popcount(PatternSet s) -> int
    {
        return std::popcount(s);
    }

    auto members(PatternSet s) -> vector<int>
    {
        vector<int> result;
        while (s) {
            result.push_back(std::countr_zero(s));
            s &= s - 1;
        }
        return result;
    }

    auto full_set(int n) -> PatternSet
    {
        return n >= 64 ? ~PatternSet{0} : (PatternSet{1} << n) - 1;
    }

    auto is_separation(const Graph & p, const Separation & s) -> bool
    {
        if (p.size() > 64)
            return false;
        PatternSet all = full_set(p.size());
        if ((s.a | s.b) != all || (s.a & ~all) || (s.b & ~all))
            return false;
        PatternSet left = s.a & ~s.b, right = s.b & ~s.a;
        for (int v : members(left))
            for (int w : p.neighbours(v))
                if (contains(right, w))
                    return false;
        return true;
    }

    auto boundary_components(const Graph & p, PatternSet x, PatternSet anchors) -> BoundaryComponents
    {
        PatternSet rest = full_set(p.size()) & ~x;
        vector<int> outside = members(rest);
        auto sub = induced(p, outside);

        // colour key: (neighbourhood inside X, anchor index or -1)
        vector<pair<PatternSet, int> > keys(outside.size());
        for (std::size_t i = 0 ; i < outside.size() ; ++i) {
            int v = outside[i];
            PatternSet nx = 0;
            for (int w : p.neighbours(v))
                if (contains(x, w))
                    nx |= bit(w);
            keys[i] = {nx, contains(anchors, v) ? v : -1};
        }
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

        BoundaryComponents result;
        for (auto & comp : components(sub.graph)) {
            PatternSet part = 0;
            vector<int> local_ids;
            for (int c : comp) {
                part |= bit(sub.to_parent[c]);
                local_ids.push_back(c);
            }
            auto piece = induced(sub.graph, local_ids);

            // colours contiguous within this piece but carrying the global key
            // order, then the global key rank is prefixed to make codes
            // comparable across pieces.
            vector<int> ranks;
            for (int c : comp)
                ranks.push_back(int(std::lower_bound(sorted.begin(), sorted.end(), keys[c]) - sorted.begin()));
            auto distinct = ranks;
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            vector<int> local(ranks.size());
            for (std::size_t i = 0 ; i < ranks.size() ; ++i)
                local[i] = int(std::lower_bound(distinct.begin(), distinct.end(), ranks[i]) - distinct.begin());

            CanonicalCode code;
            for (int d : distinct) {
                code += std::to_string(d);
                code.push_back(',');
            }
            code.push_back('|');
            code += canonical(piece.graph, VertexColoring(std::move(local)));

            result.parts.push_back(part);
            result.codes.push_back(std::move(code));
        }
        return result;
    }

    auto anchored_isomorphic(const Graph & p, const Separation & s1, const Separation & s2) -> bool
    {
        if (! is_separation(p, s1) || ! is_separation(p, s2))
            throw InputError{"anchored_isomorphic: not a separation"};
        if (s1.boundary() != s2.boundary())
            return false;

        auto comps = boundary_components(p, s1.boundary());
        vector<CanonicalCode> side1, side2;
        for (std::size_t i = 0 ; i < comps.parts.size() ; ++i) {
            if ((comps.parts[i] & s1.a) == comps.parts[i])
                side1.push_back(comps.codes[i]);
            if ((comps.parts[i] & s2.a) == comps.parts[i])
                side2.push_back(comps.codes[i]);
        }
        std::sort(side1.begin(), side1.end());
        std::sort(side2.begin(), side2.end());
        return side1 == side2;
    }
}
