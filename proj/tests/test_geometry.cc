#include "helpers.hh"

#include <udg/count.hh>
#include <udg/generate.hh>
#include <udg/geometry.hh>

#include <doctest.h>

using namespace udg;
using udg::test::emb;

TEST_SUITE("geometry")
{
    TEST_CASE("tangent disks are adjacent")
    {
        auto g = adjacency_graph(emb({{"0", "0"}, {"1", "0"}}));
        CHECK(g.edge_count() == 1);
        CHECK(g.adjacent(0, 1));
    }

    TEST_CASE("disks just over distance one are not adjacent")
    {
        CHECK(adjacency_graph(emb({{"0", "0"}, {"1.0001", "0"}})).edge_count() == 0);
    }

    TEST_CASE("three overlapping disks form a triangle with ply three")
    {
        auto e = emb({{"0", "0"}, {"0.6", "0"}, {"0.3", "0.5"}});
        CHECK(adjacency_graph(e) == test::complete(3));
        CHECK(ply(e) == 3);
    }

    TEST_CASE("ply of small configurations")
    {
        CHECK(ply(emb({{"0", "0"}})) == 1);
        CHECK(ply(emb({{"0", "0"}, {"0.5", "0"}})) == 2);
        CHECK(ply(emb({{"0", "0"}, {"0", "0"}, {"0", "0"}})) == 3);
        CHECK(ply(emb({{"0", "0"}, {"1", "0"}, {"2", "0"}})) == 2);
        CHECK(ply(emb({{"0", "0"}, {"3", "0"}})) == 1);
    }

    TEST_CASE("ply is at least the depth at sampled grid points")
    {
        auto rng = gen::stream("ply-grid", 5);
        for (int it = 0 ; it < 30 ; ++it) {
            auto e = gen::random_udg(8, 3, 3, 4, rng);
            int best = 0;
            for (int gx = 0 ; gx <= 60 ; ++gx)
                for (int gy = 0 ; gy <= 60 ; ++gy) {
                    Rational px(gx, 20), py(gy, 20);
                    int depth = 0;
                    for (auto & c : e.centres()) {
                        Rational dx = c.x - px, dy = c.y - py;
                        if (dx * dx + dy * dy <= Rational(1, 4))
                            ++depth;
                    }
                    best = std::max(best, depth);
                }
            CHECK(ply(e) >= best);
            CHECK(ply(e) <= 4);
        }
    }

    TEST_CASE("strip membership")
    {
        CHECK(strip(emb({{"0.5", "0.5"}}), 0, 1) == std::vector<int>{0});
        CHECK(strip(emb({{"5", "0.5"}}), 0, 1).empty());
        CHECK(strip(emb({{"0.9", "0.5"}, {"2.1", "0.5"}}), 1, 2) == std::vector<int>{0, 1});
        // tangency counts
        CHECK(strip(emb({{"1.5", "0"}}), 2, 2) == std::vector<int>{0});
        CHECK(strip(emb({{"1.5", "0"}}), 1, 1) == std::vector<int>{0});
        CHECK(strip(emb({{"1.50001", "0"}}), 1, 1).empty());
    }

    TEST_CASE("strips grow with the band")
    {
        auto rng = gen::stream("strip-monotone", 1);
        auto e = gen::random_udg(20, 10, 3, 3, rng);
        for (long x = -1 ; x <= 10 ; ++x)
            for (long x2 = x ; x2 <= 10 ; ++x2)
                for (long x3 = x2 ; x3 <= 11 ; ++x3) {
                    auto a = strip(e, x, x2), b = strip(e, x, x3);
                    CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
                }
    }

    TEST_CASE("lines met by a disk")
    {
        CHECK(lines_met(Rational(1, 2)) == std::pair<long, long>{0, 1});
        CHECK(lines_met(parse_decimal("0.7")) == std::pair<long, long>{1, 1});
        CHECK(lines_met(Rational(3)) == std::pair<long, long>{3, 3});
        CHECK(lines_met(parse_decimal("-0.2")) == std::pair<long, long>{0, 0});
    }

    TEST_CASE("normalize_box")
    {
        auto a = normalize_box(emb({{"7", "9"}}));
        CHECK(a.embedding.centre(0) == Point2{Rational(1, 2), Rational(1, 2)});
        CHECK(a.width == 1);
        CHECK(a.height == 1);

        auto b = normalize_box(emb({{"3", "3"}, {"4", "3"}}));
        CHECK(b.embedding.centre(0) == Point2{Rational(1, 2), Rational(1, 2)});
        CHECK(b.embedding.centre(1) == Point2{Rational(3, 2), Rational(1, 2)});
        CHECK(b.width == 2);
        CHECK(b.height == 1);
    }

    TEST_CASE("normalisation keeps adjacency and fits the box")
    {
        auto rng = gen::stream("normalize", 2);
        for (int it = 0 ; it < 20 ; ++it) {
            auto e = gen::random_udg(12, 6, 4, 3, rng);
            auto boxed = normalize_box(e);
            CHECK(adjacency_graph(e) == adjacency_graph(boxed.embedding));
            for (auto & c : boxed.embedding.centres()) {
                CHECK(c.x - Rational(1, 2) >= 0);
                CHECK(c.y - Rational(1, 2) >= 0);
                CHECK(c.x + Rational(1, 2) <= boxed.width);
                CHECK(c.y + Rational(1, 2) <= boxed.height);
            }
            CHECK(strip(boxed.embedding, 0, boxed.width).size() == std::size_t(e.size()));
        }
    }

    TEST_CASE("adjacency is symmetric and irreflexive")
    {
        auto rng = gen::stream("symmetry", 3);
        auto g = adjacency_graph(gen::random_udg(15, 4, 4, 3, rng));
        for (int u = 0 ; u < g.size() ; ++u) {
            CHECK(! g.adjacent(u, u));
            for (int v = 0 ; v < g.size() ; ++v)
                CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        }
    }

    TEST_CASE("coincident centres are adjacent")
    {
        CHECK(adjacency_graph(emb({{"1", "1"}, {"1", "1"}})).adjacent(0, 1));
    }

    TEST_CASE("decimal parsing is exact")
    {
        CHECK(parse_decimal("0.1") == Rational(1, 10));
        CHECK(parse_decimal("-2.25") == Rational(-9, 4));
        CHECK(parse_decimal("3") == Rational(3));
        CHECK(parse_decimal("+0.5") == Rational(1, 2));
        CHECK(format_decimal(Rational(-9, 4)) == "-2.25");
        CHECK(format_decimal(Rational(3)) == "3");
        CHECK_THROWS_AS(parse_decimal("1.2.3"), InputError);
        CHECK_THROWS_AS(parse_decimal("abc"), InputError);
        CHECK_THROWS_AS(parse_decimal(""), InputError);
        CHECK_THROWS_AS(format_decimal(Rational(1, 3)), InputError);
    }

    TEST_CASE("udg files round-trip")
    {
        std::string text = "udg 1\nradius 0.5\ndisks 3\n0 0.5 0.5\n1 1.25 0.5\n2 -3 7.125\n";
        auto e = parse_udg(text);
        CHECK(e.size() == 3);
        CHECK(emit_udg(e) == text);
        CHECK(parse_udg(emit_udg(e)) == e);

        auto rng = gen::stream("roundtrip", 4);
        auto r = gen::random_udg(10, 5, 5, 3, rng);
        CHECK(parse_udg(emit_udg(r)) == r);
    }

    TEST_CASE("udg files with comments and blank lines")
    {
        auto e = parse_udg("# a comment\n\nudg 1\nradius 0.5\n# another\ndisks 1\n0 1 2\n\n");
        CHECK(e.size() == 1);
        CHECK(e.centre(0) == Point2{1, 2});
    }

    TEST_CASE("malformed udg files are rejected")
    {
        CHECK_THROWS_AS(parse_udg("udg 2\nradius 0.5\ndisks 0\n"), InputError);
        CHECK_THROWS_AS(parse_udg("udg 1\nradius 1\ndisks 0\n"), InputError);
        CHECK_THROWS_AS(parse_udg("udg 1\nradius 0.5\ndisks 2\n0 0 0\n"), InputError);
        CHECK_THROWS_AS(parse_udg("udg 1\nradius 0.5\ndisks 1\n1 0 0\n"), InputError);
        CHECK_THROWS_AS(parse_udg("udg 1\nradius 0.5\ndisks 1\n0 0 x\n"), InputError);
        CHECK_THROWS_AS(parse_udg("udg 1\nradius 0.5\ndisks 1\n0 0 0\n1 1 1\n"), InputError);
        CHECK_THROWS_AS(parse_udg(""), InputError);
        CHECK_THROWS_AS(read_udg("/nonexistent/file.udg"), InputError);
    }

    TEST_CASE("transpose swaps coordinates")
    {
        auto t = transpose(emb({{"1", "2"}, {"3", "4.5"}}));
        CHECK(t.centre(0) == Point2{2, 1});
        CHECK(t.centre(1) == Point2{parse_decimal("4.5"), 3});
    }

    TEST_CASE("random drawings are deterministic and respect the ply bound")
    {
        CHECK(emit_udg(gen::random_udg(20, 8, 3, 2, 11)) == emit_udg(gen::random_udg(20, 8, 3, 2, 11)));
        for (std::uint64_t seed = 0 ; seed < 10 ; ++seed) {
            CHECK(ply(gen::random_udg(1, 1, 1, 1, seed)) == 1);
            CHECK(ply(gen::random_udg(15, 5, 3, 2, seed)) <= 2);
        }
        CHECK_THROWS_AS(gen::random_udg(50, 1, 1, 1, 3), InfeasibleError);
        CHECK_THROWS_AS(gen::random_udg(3, 0, 1, 1, 3), InputError);
    }
}
