#include <udg/generate.hh>
#include <udg/count.hh>

#include <vector>

using std::vector;

namespace udg::gen
{
    auto stream(const std::string & name, std::uint64_t seed) -> std::mt19937_64
    {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (unsigned char c : name) {
            h ^= c;
            h *= 0x100000001b3ull;
        }
        std::seed_seq seq{std::uint32_t(h), std::uint32_t(h >> 32), std::uint32_t(seed), std::uint32_t(seed >> 32)};
        return std::mt19937_64(seq);
    }

    namespace
    {
        // Depth only rises inside the new disk, so the disks meeting it are
        // all that matter.
        auto fits(const vector<Point2> & centres, const Point2 & c, int max_ply) -> bool
        {
            vector<Point2> local{c};
            for (auto & q : centres) {
                Rational dx = q.x - c.x, dy = q.y - c.y;
                if (dx * dx + dy * dy <= 1)
                    local.push_back(q);
            }
            if (int(local.size()) <= max_ply)
                return true;
            return ply(EmbeddedGraph(local)) <= max_ply;
        }

        auto grid_point(std::mt19937_64 & rng, long lo_milli, long hi_milli) -> Rational
        {
            std::uniform_int_distribution<long> d(lo_milli, hi_milli);
            return Rational(d(rng), 1000);
        }
    }

    auto random_udg(int n, long w, long h, int max_ply, std::mt19937_64 & rng, long max_rejections) -> EmbeddedGraph
    {
        if (n < 0 || w < 1 || h < 1 || max_ply < 1)
            throw InputError{"random_udg: parameters must be positive and the box at least 1 x 1"};

        vector<Point2> centres;
        long rejections = 0;
        while (int(centres.size()) < n) {
            Point2 c{grid_point(rng, 500, w * 1000 - 500), grid_point(rng, 500, h * 1000 - 500)};
            if (fits(centres, c, max_ply))
                centres.push_back(c);
            else if (++rejections > max_rejections)
                throw InfeasibleError{"random_udg: too many rejected centres; enlarge the box or raise the ply bound"};
        }
        return EmbeddedGraph(centres);
    }

    auto random_udg(int n, long w, long h, int max_ply, std::uint64_t seed, long max_rejections) -> EmbeddedGraph
    {
        auto rng = stream("gen-random", seed);
        return random_udg(n, w, h, max_ply, rng, max_rejections);
    }

    auto random_connected_udg(int k, int max_ply, std::mt19937_64 & rng) -> EmbeddedGraph
    {
        if (k < 0 || max_ply < 1)
            throw InputError{"random_connected_udg: bad parameters"};
        vector<Point2> centres;
        std::uniform_int_distribution<int> offset(-1000, 1000);
        long rejections = 0;
        while (int(centres.size()) < k) {
            Point2 c{0, 0};
            if (! centres.empty()) {
                auto & base = centres[std::uniform_int_distribution<std::size_t>(0, centres.size() - 1)(rng)];
                c = Point2{base.x + Rational(offset(rng), 1000), base.y + Rational(offset(rng), 1000)};
                Rational dx = c.x - base.x, dy = c.y - base.y;
                if (dx * dx + dy * dy > 1)
                    continue;
            }
            if (fits(centres, c, max_ply))
                centres.push_back(c);
            else if (++rejections > 100000)
                throw InfeasibleError{"random_connected_udg: too many rejections"};
        }
        return EmbeddedGraph(centres);
    }
}
