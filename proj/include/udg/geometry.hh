#pragma once

#include <udg/graph.hh>

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace udg
{
    using Rational = boost::multiprecision::cpp_rational;

    struct Point2
    {
        Rational x;
        Rational y;

        auto operator== (const Point2 &) const -> bool = default;
    };

    /// Closed disks of radius 1/2 (diameter 1); two vertices are adjacent iff
    /// their centres are at distance at most 1.
    class EmbeddedGraph
    {
        public:
            EmbeddedGraph() = default;
            explicit EmbeddedGraph(std::vector<Point2> centres) : _centres(std::move(centres)) { }

            auto size() const -> int { return int(_centres.size()); }
            auto centre(int v) const -> const Point2 & { return _centres[v]; }
            auto centres() const -> const std::vector<Point2> & { return _centres; }

            static auto radius() -> Rational { return Rational(1, 2); }

            auto operator== (const EmbeddedGraph &) const -> bool = default;

        private:
            std::vector<Point2> _centres;
    };

    struct BoxedEmbedding
    {
        EmbeddedGraph embedding;
        long width = 0;
        long height = 0;
    };

    auto parse_decimal(const std::string & literal) -> Rational;
    auto format_decimal(const Rational & value) -> std::string;

    auto parse_udg(std::istream & in) -> EmbeddedGraph;
    auto parse_udg(const std::string & text) -> EmbeddedGraph;
    auto emit_udg(const EmbeddedGraph & emb) -> std::string;
    auto read_udg(const std::string & path) -> EmbeddedGraph;
    auto write_udg(const std::string & path, const EmbeddedGraph & emb) -> void;

    auto floor_of(const Rational & q) -> long;
    auto ceil_of(const Rational & q) -> long;

    auto adjacency_graph(const EmbeddedGraph & emb) -> Graph;

    /// Maximum number of disks sharing a point, sampled at disk centres and at
    /// pairwise boundary intersections (floating point, containment up to tol).
    auto ply(const EmbeddedGraph & emb, double tol = 1e-9) -> int;

    /// Integer vertical lines met by the disk centred at x = cx: the closed
    /// range [first, last], one or two lines.
    auto lines_met(const Rational & cx) -> std::pair<long, long>;

    /// Vertices whose disk meets the closed band x <= a <= x2.
    auto strip(const EmbeddedGraph & emb, long x, long x2) -> std::vector<int>;

    /// Translate so the disks' lower-left extent sits at the origin.
    auto normalize_box(const EmbeddedGraph & emb) -> BoxedEmbedding;

    auto transpose(const EmbeddedGraph & emb) -> EmbeddedGraph;
    auto restrict_to(const EmbeddedGraph & emb, const std::vector<int> & vertices) -> EmbeddedGraph;
}
