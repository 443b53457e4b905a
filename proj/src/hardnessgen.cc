#include <udg/hardnessgen.hh>
#include <udg/count.hh>

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

using std::string;
using std::vector;

namespace udg::hardness
{
    auto validate(const S3GInstance & inst) -> void
    {
        if (inst.b.size() != inst.a.size() || inst.c.size() != inst.a.size())
            throw InputError{"string lists must have equal sizes"};
        for (auto * list : {&inst.a, &inst.b, &inst.c})
            for (auto & s : *list) {
                if (int(s.size()) != inst.length())
                    throw InputError{"strings must all have the same length"};
                if (s.find_first_not_of("01") != string::npos)
                    throw InputError{"string '" + s + "' is not binary"};
            }
    }

    namespace
    {
        auto interleave(const string & s, char sep, const string & tail) -> string
        {
            string r;
            for (std::size_t i = 0 ; i < s.size() ; ++i) {
                if (i)
                    r += sep;
                r += s[i];
            }
            return r + tail;
        }
    }

    auto pad_a(const string & s) -> string { return interleave(s, '1', "10"); }
    auto pad_b(const string & s) -> string { return interleave(s, '0', "01"); }
    auto pad_c(const string & s) -> string { return interleave(s, '0', "00"); }

    auto pad(const S3GInstance & inst) -> S3GInstance
    {
        validate(inst);
        S3GInstance r;
        for (auto & s : inst.a)
            r.a.push_back(pad_a(s));
        for (auto & s : inst.b)
            r.b.push_back(pad_b(s));
        for (auto & s : inst.c)
            r.c.push_back(pad_c(s));
        return r;
    }

    namespace
    {
        const Rational spacing = 8;
        const Rational tri_height = parse_decimal("0.866");

        class Builder
        {
            public:
                auto add(const string & name, Rational x, Rational y) -> int
                {
                    _names.push_back(name);
                    _points.push_back(Point2{std::move(x), std::move(y)});
                    return int(_points.size()) - 1;
                }

                auto edge(int u, int v) -> void { _edges.emplace_back(u, v); }

                auto path(const vector<int> & vs) -> void
                {
                    for (std::size_t i = 0 ; i + 1 < vs.size() ; ++i)
                        edge(vs[i], vs[i + 1]);
                }

                auto cycle(const vector<int> & vs) -> void
                {
                    path(vs);
                    edge(vs.back(), vs.front());
                }

                // 4-cycle hanging below (ox, oy), opening towards dx
                auto square(const string & tag, const Rational & ox, const Rational & oy, int dx) -> int
                {
                    int v1 = add(tag + "1", ox, oy);
                    int v2 = add(tag + "2", ox + dx, oy);
                    int v3 = add(tag + "3", ox + dx, oy - 1);
                    int v4 = add(tag + "4", ox, oy - 1);
                    cycle({v1, v2, v3, v4});
                    return v1;
                }

                auto triangle(const string & tag, const Rational & ox, const Rational & oy, int dx) -> int
                {
                    int v1 = add(tag + "1", ox, oy);
                    int v2 = add(tag + "2", ox + dx, oy);
                    int v3 = add(tag + "3", ox + Rational(dx, 2), oy + tri_height);
                    cycle({v1, v2, v3});
                    return v1;
                }

                auto finish() -> Gadget
                {
                    Gadget g;
                    g.embedding = EmbeddedGraph(_points);
                    g.graph = Graph(int(_points.size()));
                    for (auto [u, v] : _edges)
                        g.graph.add_edge(u, v);
                    g.names = _names;

                    if (! (adjacency_graph(g.embedding) == g.graph))
                        throw std::logic_error{"gadget drawing does not realise the gadget graph"};
                    if (ply(g.embedding) > 2)
                        throw std::logic_error{"gadget drawing has ply above 2"};
                    return g;
                }

            private:
                vector<Point2> _points;
                vector<string> _names;
                vector<std::pair<int, int> > _edges;
        };

        auto check_runs(const string & s, char bad, const string & what, int index) -> void
        {
            for (std::size_t i = 0 ; i + 1 < s.size() ; ++i)
                if (s[i] == bad && s[i + 1] == bad)
                    throw InputError{what + " string " + std::to_string(index) + " ('" + s + "') has consecutive '"
                        + string(1, bad) + "' at positions " + std::to_string(i + 1) + " and " + std::to_string(i + 2)};
        }

        auto ladder(Builder & out, const string & a, const string & tag, const Rational & ox) -> void
        {
            int m = int(a.size());
            vector<int> p, q;
            for (int i = 1 ; i <= m ; ++i) {
                p.push_back(out.add(tag + "p" + std::to_string(i), ox, i));
                q.push_back(out.add(tag + "q" + std::to_string(i), ox + 4, i));
            }
            out.path(p);
            out.path(q);
            for (int i = 1 ; i <= m ; ++i)
                if (a[i - 1] == '0') {
                    vector<int> rung{p[i - 1]};
                    for (int j = 1 ; j <= 3 ; ++j)
                        rung.push_back(out.add(tag + "r" + std::to_string(i) + "_" + std::to_string(j), ox + j, i));
                    rung.push_back(q[i - 1]);
                    out.path(rung);
                }
            out.edge(out.square(tag + "x", ox, 0, -1), p.front());
            out.edge(out.triangle(tag + "x'", ox, m + 1, -1), p.back());
            out.edge(out.square(tag + "y", ox + 4, 0, 1), q.front());
            out.edge(out.triangle(tag + "y'", ox + 4, m + 1, 1), q.back());
        }

        auto comb(Builder & out, const string & s, const string & tag, const string & anchor,
                const Rational & ox) -> void
        {
            int m = int(s.size());
            vector<int> spine;
            for (int i = 1 ; i <= m ; ++i)
                spine.push_back(out.add(tag + std::to_string(i), ox, i));
            out.path(spine);
            for (int i = 1 ; i <= m ; ++i)
                if (s[i - 1] == '1') {
                    int t1 = out.add(tag + std::to_string(i) + "_1", ox + 1, i);
                    int t2 = out.add(tag + std::to_string(i) + "_2", ox + 2, i);
                    out.path({spine[i - 1], t1, t2});
                }
            out.edge(out.square(tag + anchor, ox, 0, -1), spine.front());
            out.edge(out.triangle(tag + anchor + "'", ox, m + 1, -1), spine.back());
        }
    }

    auto build(const S3GInstance & inst, bool padded) -> Reduction
    {
        validate(inst);
        Reduction r;
        r.padded = padded ? inst : pad(inst);

        for (int i = 0 ; i < r.padded.n() ; ++i) {
            check_runs(r.padded.a[i], '0', "A", i);
            check_runs(r.padded.b[i], '1', "B", i);
            check_runs(r.padded.c[i], '1', "C", i);
        }

        Builder host;
        for (int i = 0 ; i < r.padded.n() ; ++i)
            ladder(host, r.padded.a[i], "G" + std::to_string(i) + ".", spacing * i);
        r.host = host.finish();

        Builder pattern;
        for (int i = 0 ; i < r.padded.n() ; ++i)
            comb(pattern, r.padded.b[i], "B" + std::to_string(i) + ".s", "z", spacing * (2 * i));
        for (int i = 0 ; i < r.padded.n() ; ++i)
            comb(pattern, r.padded.c[i], "C" + std::to_string(i) + ".t", "w", spacing * (2 * i + 1));
        r.pattern = pattern.finish();
        return r;
    }

    auto solve_s3g_brute(const S3GInstance & inst) -> std::optional<Assignment>
    {
        validate(inst);
        int n = inst.n();
        if (n > 6)
            throw InfeasibleError{"solve_s3g_brute is limited to n <= 6"};

        auto fits = [&] (int i, int j, int l) {
            for (int t = 0 ; t < inst.length() ; ++t)
                if ((inst.a[i][t] - '0') + (inst.b[j][t] - '0') + (inst.c[l][t] - '0') > 1)
                    return false;
            return true;
        };

        vector<int> pb(n), pc(n);
        std::iota(pb.begin(), pb.end(), 0);
        do {
            std::iota(pc.begin(), pc.end(), 0);
            do {
                bool ok = true;
                for (int i = 0 ; i < n && ok ; ++i)
                    ok = fits(i, pb[i], pc[i]);
                if (ok) {
                    Assignment result;
                    for (int i = 0 ; i < n ; ++i)
                        result.push_back({i, pb[i], pc[i]});
                    return result;
                }
            } while (std::next_permutation(pc.begin(), pc.end()));
        } while (std::next_permutation(pb.begin(), pb.end()));
        return std::nullopt;
    }

    auto random_instance(int n, int length, std::mt19937_64 & rng) -> S3GInstance
    {
        if (n < 1 || length < 1)
            throw InputError{"random_instance: n and length must be positive"};
        S3GInstance inst;
        std::bernoulli_distribution coin(0.4);
        for (auto * list : {&inst.a, &inst.b, &inst.c})
            for (int i = 0 ; i < n ; ++i) {
                string s;
                for (int t = 0 ; t < length ; ++t)
                    s += coin(rng) ? '1' : '0';
                list->push_back(s);
            }
        return inst;
    }

    auto manifest(const S3GInstance & inst) -> string
    {
        std::ostringstream out;
        out << "n " << inst.n() << "\n";
        for (auto & s : inst.a)
            out << "A " << s << "\n";
        for (auto & s : inst.b)
            out << "B " << s << "\n";
        for (auto & s : inst.c)
            out << "C " << s << "\n";
        return out.str();
    }

    auto parse_strings(std::istream & in) -> S3GInstance
    {
        S3GInstance inst;
        string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            string tag, s;
            if (! (ls >> tag) || tag[0] == '#' || tag == "n")
                continue;
            if (! (ls >> s))
                throw InputError{"strings file: missing string after '" + tag + "'"};
            if (tag == "A")
                inst.a.push_back(s);
            else if (tag == "B")
                inst.b.push_back(s);
            else if (tag == "C")
                inst.c.push_back(s);
            else
                throw InputError{"strings file: unknown tag '" + tag + "'"};
        }
        validate(inst);
        if (inst.n() == 0)
            throw InputError{"strings file: no strings"};
        return inst;
    }
}
