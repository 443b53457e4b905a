#include <udg/bruteforce.hh>

#include <algorithm>
#include <map>

using std::vector;

namespace udg::brute
{
    namespace
    {
        struct Backtracker
        {
            const Graph & p;
            const Graph & g;
            Mode mode;
            bool stop_at_first;

            vector<int> order;
            vector<vector<int> > earlier_neighbours;   // positions of earlier pattern neighbours
            vector<vector<int> > earlier_others;       // positions of earlier non-neighbours (ind only)
            vector<int> pinned;                        // host vertex or -1, per position
            vector<int> image;
            vector<char> used;
            std::uint64_t found = 0;

            Backtracker(const Graph & pp, const Graph & gg, Mode m, bool first, const PartialMap & pins) :
                p(pp), g(gg), mode(m), stop_at_first(first)
            {
                int k = p.size();
                vector<char> placed(k, 0);
                vector<int> placed_nbrs(k, 0);

                auto take = [&] (int v) {
                    order.push_back(v);
                    placed[v] = 1;
                    for (int w : p.neighbours(v))
                        ++placed_nbrs[w];
                };

                for (auto & [u, h] : pins)
                    take(u);

                while (int(order.size()) < k) {
                    int best = -1;
                    for (int v = 0 ; v < k ; ++v) {
                        if (placed[v])
                            continue;
                        if (best == -1 || placed_nbrs[v] > placed_nbrs[best]
                                || (placed_nbrs[v] == placed_nbrs[best] && p.degree(v) > p.degree(best)))
                            best = v;
                    }
                    take(best);
                }

                vector<int> position(k);
                for (int i = 0 ; i < k ; ++i)
                    position[order[i]] = i;

                earlier_neighbours.resize(k);
                earlier_others.resize(k);
                pinned.assign(k, -1);
                for (int i = 0 ; i < k ; ++i) {
                    int v = order[i];
                    for (int j = 0 ; j < i ; ++j) {
                        if (p.adjacent(v, order[j]))
                            earlier_neighbours[i].push_back(j);
                        else if (mode == Mode::Ind)
                            earlier_others[i].push_back(j);
                    }
                    if (auto it = pins.find(v) ; it != pins.end())
                        pinned[i] = it->second;
                }

                image.assign(k, -1);
                used.assign(g.size(), 0);
            }

            auto fits(int i, int h) const -> bool
            {
                if (used[h])
                    return false;
                for (int j : earlier_neighbours[i])
                    if (! g.adjacent(h, image[j]))
                        return false;
                for (int j : earlier_others[i])
                    if (g.adjacent(h, image[j]))
                        return false;
                return true;
            }

            auto place(int i, int h) -> bool
            {
                image[i] = h;
                used[h] = 1;
                bool done = go(i + 1);
                used[h] = 0;
                return done;
            }

            // returns true when the search should stop
            auto go(int i) -> bool
            {
                if (i == int(order.size())) {
                    ++found;
                    return stop_at_first;
                }

                if (pinned[i] != -1)
                    return fits(i, pinned[i]) && place(i, pinned[i]);

                if (! earlier_neighbours[i].empty()) {
                    for (int h : g.neighbours(image[earlier_neighbours[i].front()]))
                        if (fits(i, h) && place(i, h))
                            return true;
                }
                else {
                    for (int h = 0 ; h < g.size() ; ++h)
                        if (fits(i, h) && place(i, h))
                            return true;
                }
                return false;
            }
        };

        auto run(const Graph & p, const Graph & g, Mode mode, bool first, const PartialMap & pins) -> std::uint64_t
        {
            if (p.size() > g.size())
                return 0;
            Backtracker b(p, g, mode, first, pins);
            b.go(0);
            return b.found;
        }
    }

    auto count_maps(const Graph & p, const Graph & g, Mode mode) -> BigCount
    {
        return BigCount(run(p, g, mode, false, {}));
    }

    auto detect(const Graph & p, const Graph & g, Mode mode) -> bool
    {
        return run(p, g, mode, true, {}) > 0;
    }

    auto count_extensions(const Graph & p, const Graph & g, const PartialMap & f, Mode mode) -> BigCount
    {
        vector<char> hit(g.size(), 0);
        for (auto & [u, h] : f) {
            if (u < 0 || u >= p.size() || h < 0 || h >= g.size())
                throw InputError{"partial map entry out of range"};
            if (hit[h])
                throw InputError{"partial map is not injective"};
            hit[h] = 1;
        }
        return BigCount(run(p, g, mode, false, f));
    }

    auto automorphisms_fixing(const Graph & p, PatternSet fixed) -> vector<vector<int> >
    {
        int k = p.size();
        vector<vector<int> > result;
        vector<int> perm(k, -1);
        vector<char> used(k, 0);

        auto go = [&] (auto & self, int v) -> void {
            if (v == k) {
                result.push_back(perm);
                return;
            }
            for (int w = 0 ; w < k ; ++w) {
                if (used[w] || (contains(fixed, v) && w != v) || p.degree(w) != p.degree(v))
                    continue;
                bool ok = true;
                for (int u = 0 ; u < v && ok ; ++u)
                    ok = p.adjacent(u, v) == p.adjacent(perm[u], w);
                if (! ok)
                    continue;
                perm[v] = w;
                used[w] = 1;
                self(self, v + 1);
                used[w] = 0;
            }
            perm[v] = -1;
        };
        go(go, 0);
        return result;
    }

    auto separations(const Graph & p, int s) -> vector<SeparationClass>
    {
        int k = p.size();
        if (k > 20)
            throw InfeasibleError{"exhaustive separation enumeration is limited to 20 vertices"};

        // group by boundary first: isomorphic separations share it
        std::map<PatternSet, vector<Separation> > by_boundary;
        long total = 1;
        for (int i = 0 ; i < k ; ++i)
            total *= 3;
        for (long code = 0 ; code < total ; ++code) {
            Separation sep;
            long c = code;
            for (int v = 0 ; v < k ; ++v, c /= 3) {
                if (c % 3 != 0) sep.a |= bit(v);
                if (c % 3 != 1) sep.b |= bit(v);
            }
            if (sep.order() <= s && is_separation(p, sep))
                by_boundary[sep.boundary()].push_back(sep);
        }

        vector<SeparationClass> result;
        for (auto & [x, seps] : by_boundary) {
            auto autos = automorphisms_fixing(p, x);
            std::map<PatternSet, std::size_t> index;   // A side -> position in seps
            for (std::size_t i = 0 ; i < seps.size() ; ++i)
                index[seps[i].a] = i;

            vector<char> done(seps.size(), 0);
            for (std::size_t i = 0 ; i < seps.size() ; ++i) {
                if (done[i])
                    continue;
                SeparationClass cls{seps[i], {}};
                for (auto & perm : autos) {
                    PatternSet image = 0;
                    for (int v : members(seps[i].a))
                        image |= bit(perm[v]);
                    auto j = index.at(image);
                    if (! done[j]) {
                        done[j] = 1;
                        cls.members.push_back(seps[j]);
                    }
                }
                result.push_back(std::move(cls));
            }
        }
        return result;
    }
}
