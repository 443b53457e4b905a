#include <udg/count.hh>
#include <udg/pathdecomp.hh>

#include <algorithm>
#include <map>
#include <set>

using std::vector;

namespace udg
{
    auto PathDecomposition::width() const -> int
    {
        std::size_t biggest = 0;
        for (auto & b : bags)
            biggest = std::max(biggest, b.size());
        return int(biggest) - 1;
    }

    auto path_decomposition_from_box(const EmbeddedGraph & emb) -> PathDecomposition
    {
        if (emb.size() == 0)
            return PathDecomposition{{{}}, {}};

        auto boxed = normalize_box(emb);
        if (boxed.height > boxed.width)
            boxed = normalize_box(transpose(boxed.embedding));

        PathDecomposition pd;
        for (long i = 1 ; i <= boxed.width ; ++i) {
            Rational lo = Rational(i) - Rational(3, 2), hi = Rational(i) + Rational(1, 2);
            vector<int> bag;
            for (int v = 0 ; v < emb.size() ; ++v) {
                auto & cx = boxed.embedding.centre(v).x;
                if (cx >= lo && cx <= hi)
                    bag.push_back(v);
            }
            pd.bags.push_back(std::move(bag));
        }
        return pd;
    }

    namespace
    {
        auto contiguous(const vector<vector<int> > & bags) -> bool
        {
            std::map<int, std::pair<int, int> > span;   // first, last bag
            std::map<int, int> occurrences;
            for (int i = 0 ; i < int(bags.size()) ; ++i) {
                std::set<int> seen;
                for (int v : bags[i]) {
                    if (! seen.insert(v).second)
                        return false;
                    auto [it, fresh] = span.try_emplace(v, i, i);
                    it->second.second = i;
                    ++occurrences[v];
                }
            }
            for (auto & [v, s] : span)
                if (s.second - s.first + 1 != occurrences[v])
                    return false;
            return true;
        }
    }

    auto make_nice(const PathDecomposition & pd) -> PathDecomposition
    {
        if (! contiguous(pd.bags))
            throw InputError{"make_nice: bags are not a path decomposition"};

        PathDecomposition result{pd.bags, {}};
        vector<int> previous;
        for (auto bag : pd.bags) {
            std::sort(bag.begin(), bag.end());
            vector<int> gone, fresh;
            std::set_difference(previous.begin(), previous.end(), bag.begin(), bag.end(), std::back_inserter(gone));
            std::set_difference(bag.begin(), bag.end(), previous.begin(), previous.end(), std::back_inserter(fresh));
            for (int v : gone)
                result.events.push_back({EventKind::Forget, v});
            for (int v : fresh)
                result.events.push_back({EventKind::Introduce, v});
            previous = std::move(bag);
        }
        for (int v : previous)
            result.events.push_back({EventKind::Forget, v});
        return result;
    }

    auto replay(const vector<Event> & events) -> vector<vector<int> >
    {
        vector<vector<int> > bags;
        std::set<int> current;
        for (auto & e : events) {
            if (e.kind == EventKind::Introduce) {
                if (! current.insert(e.vertex).second)
                    throw InputError{"replay: vertex introduced twice"};
            }
            else if (current.erase(e.vertex) == 0)
                throw InputError{"replay: forgetting an absent vertex"};
            bags.emplace_back(current.begin(), current.end());
        }
        return bags;
    }

    auto verify(const PathDecomposition & pd, const Graph & g) -> bool
    {
        vector<char> covered(g.size(), 0);
        for (auto & bag : pd.bags)
            for (int v : bag) {
                if (v < 0 || v >= g.size())
                    return false;
                covered[v] = 1;
            }
        if (std::count(covered.begin(), covered.end(), 0) != 0)
            return false;
        if (! contiguous(pd.bags))
            return false;

        vector<int> first(g.size(), -1), last(g.size(), -1);
        for (int i = 0 ; i < int(pd.bags.size()) ; ++i)
            for (int v : pd.bags[i]) {
                if (first[v] == -1)
                    first[v] = i;
                last[v] = i;
            }
        for (int u = 0 ; u < g.size() ; ++u)
            for (int v : g.neighbours(u))
                if (std::max(first[u], first[v]) > std::min(last[u], last[v]))
                    return false;
        return true;
    }
}
