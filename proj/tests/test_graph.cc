#include "helpers.hh"

#include <udg/bruteforce.hh>
#include <udg/count.hh>
#include <udg/graph.hh>

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace udg;
using test::graph;

namespace
{
    auto random_graph(int n, double density, std::mt19937_64 & rng) -> Graph
    {
        std::bernoulli_distribution coin(density);
        Graph g(n);
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                if (coin(rng))
                    g.add_edge(i, j);
        return g;
    }

    auto relabel(const Graph & g, const std::vector<int> & perm) -> Graph
    {
        Graph h(g.size());
        for (int u = 0 ; u < g.size() ; ++u)
            for (int v : g.neighbours(u))
                if (u < v)
                    h.add_edge(perm[u], perm[v]);
        return h;
    }
}

TEST_SUITE("graphcore")
{
    TEST_CASE("induced subgraphs")
    {
        auto a = induced(test::complete(3), {0, 1});
        CHECK(a.graph == graph(2, {{0, 1}}));
        CHECK(a.to_parent == std::vector<int>{0, 1});

        CHECK(induced(test::complete(3), {}).graph.size() == 0);

        auto c = induced(test::path(4), {0, 2, 3});
        CHECK(c.graph == graph(3, {{1, 2}}));
        CHECK(c.to_parent == std::vector<int>{0, 2, 3});

        CHECK_THROWS_AS(induced(test::path(3), {0, 5}), InputError);
        CHECK_THROWS_AS(induced(test::path(3), {1, 1}), InputError);
    }

    TEST_CASE("connected components")
    {
        CHECK(components(Graph(3)) == std::vector<std::vector<int> >{{0}, {1}, {2}});
        CHECK(components(test::complete(3)) == std::vector<std::vector<int> >{{0, 1, 2}});
        CHECK(components(graph(4, {{0, 3}, {1, 2}})) == std::vector<std::vector<int> >{{0, 3}, {1, 2}});
        CHECK(components(Graph(0)).empty());
    }

    TEST_CASE("components partition the vertex set")
    {
        auto rng = gen::stream("components", 1);
        for (int it = 0 ; it < 30 ; ++it) {
            auto g = random_graph(10, 0.15, rng);
            std::vector<int> all;
            for (auto & c : components(g))
                all.insert(all.end(), c.begin(), c.end());
            std::sort(all.begin(), all.end());
            std::vector<int> expect(10);
            std::iota(expect.begin(), expect.end(), 0);
            CHECK(all == expect);
        }
    }

    TEST_CASE("bad edges are rejected")
    {
        Graph g(3);
        CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
        CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
    }

    TEST_CASE("canonical codes of small graphs")
    {
        CHECK(canonical(graph(3, {{0, 1}, {1, 2}})) == canonical(graph(3, {{2, 1}, {1, 0}})));
        CHECK(canonical(test::path(3)) != canonical(test::complete(3)));

        auto c4 = test::cycle(4);
        CHECK(canonical(c4, VertexColoring({0, 0, 1, 1})) != canonical(c4, VertexColoring({0, 1, 0, 1})));
        CHECK(canonical(c4, VertexColoring({0, 0, 1, 1})) == canonical(c4, VertexColoring({1, 0, 0, 1})));
        CHECK_THROWS_AS(VertexColoring({0, 2}), InputError);
    }

    TEST_CASE("canonical codes survive relabelling")
    {
        auto rng = gen::stream("canonical-relabel", 2);
        for (int it = 0 ; it < 200 ; ++it) {
            int n = 1 + int(rng() % 8);
            auto g = random_graph(n, 0.4, rng);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical(g) == canonical(relabel(g, perm)));
        }
    }

    TEST_CASE("canonical codes agree with an exhaustive isomorphism test")
    {
        auto rng = gen::stream("canonical-complete", 3);
        int equal = 0;
        for (int it = 0 ; it < 400 ; ++it) {
            int n = 1 + int(rng() % 7);
            auto g = random_graph(n, 0.5, rng), h = random_graph(n, 0.5, rng);
            bool iso = brute::count_maps(g, h, Mode::Ind) > 0;
            equal += iso;
            CHECK((canonical(g) == canonical(h)) == iso);
        }
        CHECK(equal > 10);
    }

    TEST_CASE("canonical codes on vertex-transitive graphs")
    {
        // two triangles vs a 6-cycle: same degree sequence
        auto two_triangles = graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
        CHECK(canonical(two_triangles) != canonical(test::cycle(6)));
        auto prism = graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
        auto k33 = graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
        CHECK(canonical(prism) != canonical(k33));
    }

    TEST_CASE("separation validity")
    {
        auto p3 = test::path(3);
        CHECK(is_separation(p3, Separation{0b011, 0b110}));
        CHECK(! is_separation(p3, Separation{0b001, 0b100}));   // misses vertex 1
        CHECK(! is_separation(p3, Separation{0b011, 0b100}));   // edge 1-2 crosses
        CHECK(Separation{0b011, 0b110}.order() == 1);
    }

    TEST_CASE("anchored isomorphism")
    {
        auto two = Graph(2);
        Separation s{0b011, 0b110};
        CHECK(anchored_isomorphic(test::path(3), s, s));
        CHECK(anchored_isomorphic(two, Separation{0b01, 0b10}, Separation{0b10, 0b01}));
        // reflection of the path fixes the middle vertex and swaps the ends
        CHECK(anchored_isomorphic(test::path(3), Separation{0b011, 0b110}, Separation{0b110, 0b011}));
        CHECK(! anchored_isomorphic(test::path(3), Separation{0b011, 0b110}, Separation{0b111, 0b010}));
        CHECK(! anchored_isomorphic(two, Separation{0b01, 0b11}, Separation{0b10, 0b11}));
        CHECK_THROWS_AS(anchored_isomorphic(test::path(3), Separation{0b001, 0b100}, s), InputError);
    }

    TEST_CASE("anchored isomorphism matches explicit automorphisms")
    {
        auto rng = gen::stream("anchored", 4);
        for (int it = 0 ; it < 20 ; ++it) {
            int n = 2 + int(rng() % 5);
            auto p = random_graph(n, 0.35, rng);
            for (auto & cls : brute::separations(p, 2)) {
                for (auto & m : cls.members)
                    CHECK(anchored_isomorphic(p, cls.representative, m));
            }
            auto classes = brute::separations(p, 2);
            for (std::size_t i = 0 ; i < classes.size() ; ++i)
                for (std::size_t j = i + 1 ; j < classes.size() ; ++j)
                    CHECK(! anchored_isomorphic(p, classes[i].representative, classes[j].representative));
        }
    }
}
