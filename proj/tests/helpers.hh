#pragma once

#include <udg/count.hh>
#include <udg/generate.hh>
#include <udg/geometry.hh>
#include <udg/graph.hh>

#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace udg::test
{
    inline auto graph(int n, std::initializer_list<std::pair<int, int> > edges) -> Graph
    {
        Graph g(n);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    inline auto path(int n) -> Graph
    {
        Graph g(n);
        for (int i = 0 ; i + 1 < n ; ++i)
            g.add_edge(i, i + 1);
        return g;
    }

    inline auto cycle(int n) -> Graph
    {
        auto g = path(n);
        g.add_edge(n - 1, 0);
        return g;
    }

    inline auto complete(int n) -> Graph
    {
        Graph g(n);
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                g.add_edge(i, j);
        return g;
    }

    inline auto emb(std::initializer_list<std::pair<const char *, const char *> > centres) -> EmbeddedGraph
    {
        std::vector<Point2> pts;
        for (auto [x, y] : centres)
            pts.push_back(Point2{parse_decimal(x), parse_decimal(y)});
        return EmbeddedGraph(pts);
    }

    /// Disks at (x, 0.5) for each x, a path when spaced by at most 1.
    inline auto row(std::initializer_list<const char *> xs) -> EmbeddedGraph
    {
        std::vector<Point2> pts;
        for (auto x : xs)
            pts.push_back(Point2{parse_decimal(x), Rational(1, 2)});
        return EmbeddedGraph(pts);
    }

    struct Instance
    {
        EmbeddedGraph host;
        EmbeddedGraph pattern;
        Graph g, p;
    };

    /// Seeded random host/pattern pairs; hosts that cannot be drawn within
    /// the ply bound are skipped.
    inline auto corpus(const std::string & name, int count, int max_n, int max_k, long max_w, long max_h,
            int max_ply, std::uint64_t seed = 1) -> std::vector<Instance>
    {
        auto rng = gen::stream(name, seed);
        std::vector<Instance> result;
        while (int(result.size()) < count) {
            int n = 1 + int(rng() % max_n), k = 1 + int(rng() % max_k);
            long w = 1 + long(rng() % max_w), h = 1 + long(rng() % max_h);
            Instance inst;
            try {
                inst.host = gen::random_udg(n, w, h, max_ply, rng, 2000);
            }
            catch (const InfeasibleError &) {
                continue;
            }
            inst.pattern = gen::random_udg(k, 3, 2, max_ply, rng);
            inst.g = adjacency_graph(inst.host);
            inst.p = adjacency_graph(inst.pattern);
            result.push_back(std::move(inst));
        }
        return result;
    }
}
