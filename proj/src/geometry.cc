#include <udg/count.hh>
#include <udg/geometry.hh>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

using std::pair;
using std::string;
using std::vector;

using boost::multiprecision::cpp_int;

namespace udg
{
    auto parse_decimal(const string & literal) -> Rational
    {
        std::size_t i = 0;
        bool negative = false;
        if (i < literal.size() && (literal[i] == '-' || literal[i] == '+'))
            negative = literal[i++] == '-';

        cpp_int digits = 0, scale = 1;
        bool any = false, fraction = false;
        for ( ; i < literal.size() ; ++i) {
            char c = literal[i];
            if (c == '.' && ! fraction) {
                fraction = true;
                continue;
            }
            if (c < '0' || c > '9')
                throw InputError{"bad decimal literal '" + literal + "'"};
            digits = digits * 10 + (c - '0');
            if (fraction)
                scale *= 10;
            any = true;
        }
        if (! any)
            throw InputError{"bad decimal literal '" + literal + "'"};
        Rational q(digits, scale);
        return negative ? Rational(-q) : q;
    }

    auto format_decimal(const Rational & value) -> string
    {
        cpp_int num = boost::multiprecision::numerator(value);
        cpp_int den = boost::multiprecision::denominator(value);
        bool negative = num < 0;
        if (negative)
            num = -num;

        int places = 0;
        cpp_int rest = den;
        int twos = 0, fives = 0;
        while (rest % 2 == 0) { rest /= 2; ++twos; }
        while (rest % 5 == 0) { rest /= 5; ++fives; }
        if (rest != 1)
            throw InputError{"value has no finite decimal expansion"};
        places = std::max(twos, fives);

        cpp_int scaled = num * boost::multiprecision::pow(cpp_int(10), places) / den;
        string s = scaled.str();
        if (places > 0) {
            if (int(s.size()) <= places)
                s.insert(0, string(places + 1 - s.size(), '0'));
            s.insert(s.size() - places, ".");
        }
        if (negative && scaled != 0)
            s.insert(0, "-");
        return s;
    }

    namespace
    {
        auto next_line(std::istream & in, string & line) -> bool
        {
            while (std::getline(in, line)) {
                if (! line.empty() && line.back() == '\r')
                    line.pop_back();
                auto first = line.find_first_not_of(" \t");
                if (first == string::npos || line[first] == '#')
                    continue;
                return true;
            }
            return false;
        }

        auto split(const string & line) -> vector<string>
        {
            std::istringstream ss(line);
            vector<string> words;
            string w;
            while (ss >> w)
                words.push_back(w);
            return words;
        }
    }

    auto parse_udg(std::istream & in) -> EmbeddedGraph
    {
        string line;
        if (! next_line(in, line) || split(line) != vector<string>{"udg", "1"})
            throw InputError{"expected header 'udg 1'"};
        if (! next_line(in, line) || split(line) != vector<string>{"radius", "0.5"})
            throw InputError{"expected 'radius 0.5'"};
        if (! next_line(in, line))
            throw InputError{"expected 'disks <n>'"};
        auto words = split(line);
        if (words.size() != 2 || words[0] != "disks")
            throw InputError{"expected 'disks <n>'"};
        long n = 0;
        try {
            std::size_t used = 0;
            n = std::stol(words[1], &used);
            if (used != words[1].size() || n < 0)
                throw InputError{""};
        }
        catch (const std::exception &) {
            throw InputError{"bad disk count '" + words[1] + "'"};
        }

        vector<Point2> centres;
        for (long i = 0 ; i < n ; ++i) {
            if (! next_line(in, line))
                throw InputError{"expected " + std::to_string(n) + " disks, got " + std::to_string(i)};
            words = split(line);
            if (words.size() != 3 || words[0] != std::to_string(i))
                throw InputError{"expected disk line '" + std::to_string(i) + " <x> <y>', got '" + line + "'"};
            centres.push_back(Point2{parse_decimal(words[1]), parse_decimal(words[2])});
        }
        if (next_line(in, line))
            throw InputError{"trailing content after disk list: '" + line + "'"};
        return EmbeddedGraph(std::move(centres));
    }

    auto parse_udg(const string & text) -> EmbeddedGraph
    {
        std::istringstream in(text);
        return parse_udg(in);
    }

    auto emit_udg(const EmbeddedGraph & emb) -> string
    {
        string out = "udg 1\nradius 0.5\ndisks " + std::to_string(emb.size()) + "\n";
        for (int v = 0 ; v < emb.size() ; ++v)
            out += std::to_string(v) + " " + format_decimal(emb.centre(v).x) + " " + format_decimal(emb.centre(v).y) + "\n";
        return out;
    }

    auto read_udg(const string & path) -> EmbeddedGraph
    {
        std::ifstream in(path);
        if (! in)
            throw InputError{"cannot open '" + path + "'"};
        return parse_udg(in);
    }

    auto write_udg(const string & path, const EmbeddedGraph & emb) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw InputError{"cannot write '" + path + "'"};
        out << emit_udg(emb);
    }

    auto floor_of(const Rational & q) -> long
    {
        cpp_int num = boost::multiprecision::numerator(q);
        cpp_int den = boost::multiprecision::denominator(q);
        cpp_int f = num / den;
        if (num < 0 && f * den != num)
            f -= 1;
        return f.convert_to<long>();
    }

    auto ceil_of(const Rational & q) -> long
    {
        return -floor_of(Rational(-q));
    }

    auto adjacency_graph(const EmbeddedGraph & emb) -> Graph
    {
        Graph g(emb.size());
        for (int u = 0 ; u < emb.size() ; ++u)
            for (int v = u + 1 ; v < emb.size() ; ++v) {
                Rational dx = emb.centre(u).x - emb.centre(v).x;
                Rational dy = emb.centre(u).y - emb.centre(v).y;
                if (dx * dx + dy * dy <= 1)
                    g.add_edge(u, v);
            }
        return g;
    }

    auto ply(const EmbeddedGraph & emb, double tol) -> int
    {
        int n = emb.size();
        if (n == 0)
            return 0;

        vector<pair<double, double> > c(n);
        for (int v = 0 ; v < n ; ++v)
            c[v] = {emb.centre(v).x.convert_to<double>(), emb.centre(v).y.convert_to<double>()};

        const double r = 0.5;
        vector<pair<double, double> > candidates(c.begin(), c.end());
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v) {
                double dx = c[v].first - c[u].first, dy = c[v].second - c[u].second;
                double d = std::hypot(dx, dy);
                if (d > 2 * r + tol || d == 0.0)
                    continue;
                double a = d / 2;
                double h = std::sqrt(std::max(0.0, r * r - a * a));
                double mx = c[u].first + dx / 2, my = c[u].second + dy / 2;
                candidates.emplace_back(mx - h * dy / d, my + h * dx / d);
                candidates.emplace_back(mx + h * dy / d, my - h * dx / d);
            }

        int best = 0;
        for (auto & [px, py] : candidates) {
            int depth = 0;
            for (auto & [cx, cy] : c)
                if (std::hypot(px - cx, py - cy) <= r + tol)
                    ++depth;
            best = std::max(best, depth);
        }
        return best;
    }

    auto lines_met(const Rational & cx) -> pair<long, long>
    {
        return {ceil_of(cx - Rational(1, 2)), floor_of(cx + Rational(1, 2))};
    }

    auto strip(const EmbeddedGraph & emb, long x, long x2) -> vector<int>
    {
        vector<int> result;
        Rational lo = Rational(x) - Rational(1, 2), hi = Rational(x2) + Rational(1, 2);
        for (int v = 0 ; v < emb.size() ; ++v)
            if (emb.centre(v).x >= lo && emb.centre(v).x <= hi)
                result.push_back(v);
        return result;
    }

    auto normalize_box(const EmbeddedGraph & emb) -> BoxedEmbedding
    {
        if (emb.size() == 0)
            return {emb, 0, 0};

        Rational min_x = emb.centre(0).x, min_y = emb.centre(0).y;
        for (auto & p : emb.centres()) {
            min_x = std::min(min_x, p.x);
            min_y = std::min(min_y, p.y);
        }
        Rational shift_x = Rational(1, 2) - min_x, shift_y = Rational(1, 2) - min_y;

        vector<Point2> moved;
        Rational max_x = 0, max_y = 0;
        for (auto & p : emb.centres()) {
            moved.push_back(Point2{p.x + shift_x, p.y + shift_y});
            max_x = std::max(max_x, moved.back().x);
            max_y = std::max(max_y, moved.back().y);
        }
        return {EmbeddedGraph(std::move(moved)), ceil_of(max_x + Rational(1, 2)), ceil_of(max_y + Rational(1, 2))};
    }

    auto transpose(const EmbeddedGraph & emb) -> EmbeddedGraph
    {
        vector<Point2> swapped;
        for (auto & p : emb.centres())
            swapped.push_back(Point2{p.y, p.x});
        return EmbeddedGraph(std::move(swapped));
    }

    auto restrict_to(const EmbeddedGraph & emb, const vector<int> & vertices) -> EmbeddedGraph
    {
        vector<Point2> kept;
        for (int v : vertices)
            kept.push_back(emb.centre(v));
        return EmbeddedGraph(std::move(kept));
    }
}
