#include <udg/separations.hh>

#include <algorithm>
#include <map>

using std::vector;

namespace udg
{
    auto ComponentSignature::counts() const -> vector<int>
    {
        vector<int> result;
        for (auto & m : members)
            result.push_back(int(m.size()));
        return result;
    }

    auto component_signature(const Graph & p) -> ComponentSignature
    {
        std::map<CanonicalCode, vector<vector<int> > > grouped;
        for (auto & comp : components(p))
            grouped[canonical(induced(p, comp).graph)].push_back(comp);

        ComponentSignature sig;
        for (auto & [code, comps] : grouped) {
            sig.codes.push_back(code);
            sig.members.push_back(comps);
        }
        return sig;
    }

    namespace
    {
        auto for_each_subset_up_to(int n, int s, auto && f) -> void
        {
            for (int size = 0 ; size <= std::min(s, n) ; ++size) {
                if (size == 0) {
                    f(PatternSet{0});
                    continue;
                }
                PatternSet x = full_set(size);
                PatternSet limit = n == 64 ? 0 : PatternSet{1} << n;
                while (true) {
                    f(x);
                    // Gosper's hack: next subset of the same size
                    PatternSet c = x & (~x + 1), r = x + c;
                    if (r == 0 || (limit != 0 && r >= limit))
                        break;
                    PatternSet next = (((r ^ x) >> 2) / c) | r;
                    if (limit != 0 && next >= limit)
                        break;
                    x = next;
                }
            }
        }
    }

    SeparationCatalog::SeparationCatalog(const Graph & p, int s, PatternSet anchors) :
        _pattern(p),
        _order_cap(s),
        _anchors(anchors)
    {
        int k = p.size();
        if (k > 64)
            throw InfeasibleError{"separation catalog is limited to patterns of at most 64 vertices"};
        if (s < 0)
            throw InputError{"separation order cap must be nonnegative"};

        for_each_subset_up_to(k, s, [&] (PatternSet x) {
            auto comps = boundary_components(p, x, anchors);
            BoundaryInfo info;
            info.x = x;
            info.parts = comps.parts;

            auto codes = comps.codes;
            std::sort(codes.begin(), codes.end());
            codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
            info.codes = codes;
            info.type_count.assign(codes.size(), 0);
            for (auto & c : comps.codes) {
                int t = int(std::lower_bound(codes.begin(), codes.end(), c) - codes.begin());
                info.type.push_back(t);
                ++info.type_count[t];
            }
            info.first_class = int(_classes.size());

            int index = int(_boundaries.size());
            vector<int> counts(codes.size(), 0);
            while (true) {
                CatalogClass cls;
                cls.counts = counts;
                cls.boundary_index = index;
                cls.size = 1;
                vector<int> taken(codes.size(), 0);
                PatternSet a = x;
                for (std::size_t i = 0 ; i < info.parts.size() ; ++i) {
                    int t = info.type[i];
                    if (taken[t] < counts[t]) {
                        ++taken[t];
                        a |= info.parts[i];
                    }
                }
                for (std::size_t t = 0 ; t < codes.size() ; ++t)
                    cls.size *= binomial(unsigned(info.type_count[t]), unsigned(counts[t]));
                cls.representative = Separation{a, (full_set(k) & ~a) | x};
                _classes.push_back(std::move(cls));

                // mixed-radix increment, first type fastest
                std::size_t t = 0;
                while (t < counts.size() && counts[t] == info.type_count[t])
                    counts[t++] = 0;
                if (t == counts.size())
                    break;
                ++counts[t];
            }

            _boundary_index.emplace(x, index);
            _boundaries.push_back(std::move(info));
        });
    }

    auto SeparationCatalog::boundary_info(PatternSet x) const -> const BoundaryInfo *
    {
        auto it = _boundary_index.find(x);
        return it == _boundary_index.end() ? nullptr : &_boundaries[it->second];
    }

    auto SeparationCatalog::class_of(PatternSet x, const vector<int> & counts) const -> int
    {
        auto info = boundary_info(x);
        if (! info || counts.size() != info->type_count.size())
            return -1;
        int index = 0, radix = 1;
        for (std::size_t t = 0 ; t < counts.size() ; ++t) {
            if (counts[t] < 0 || counts[t] > info->type_count[t])
                return -1;
            index += counts[t] * radix;
            radix *= info->type_count[t] + 1;
        }
        return info->first_class + index;
    }

    auto SeparationCatalog::class_of(const Separation & s) const -> int
    {
        PatternSet all = full_set(_pattern.size());
        if ((s.a | s.b) != all)
            return -1;
        auto info = boundary_info(s.a & s.b);
        if (! info)
            return -1;
        PatternSet left = s.a & ~s.b;
        vector<int> counts(info->type_count.size(), 0);
        for (std::size_t i = 0 ; i < info->parts.size() ; ++i) {
            PatternSet part = info->parts[i];
            if ((part & left) == part)
                ++counts[info->type[i]];
            else if (part & left)
                return -1;   // a component split across the sides
        }
        return class_of(info->x, counts);
    }

    auto SeparationCatalog::separation_count() const -> BigCount
    {
        BigCount total = 0;
        for (auto & c : _classes)
            total += c.size;
        return total;
    }

    auto sigma(const Graph & p, int s) -> long
    {
        return SeparationCatalog(p, s).size();
    }

    auto multiplicity(const SeparationCatalog & cat, int c1, const Separation & container) -> Multiplicity
    {
        auto & cls = cat[c1];
        auto & info = cat.boundaries()[cls.boundary_index];
        if ((info.x & container.a) != info.x)
            return {0, 0};

        PatternSet interior = container.a & ~container.b;
        vector<int> need = cls.counts;
        PatternSet chosen = info.x;
        vector<int> pool(need.size(), 0);
        for (std::size_t i = 0 ; i < info.parts.size() ; ++i) {
            PatternSet part = info.parts[i];
            if ((part & interior) != part)
                continue;
            int t = info.type[i];
            if (pool[t]++ < need[t])
                chosen |= part;
        }

        Multiplicity result{1, chosen};
        for (std::size_t t = 0 ; t < need.size() ; ++t)
            result.count *= binomial(unsigned(pool[t]), unsigned(need[t]));
        if (result.count == 0)
            result.chosen = 0;
        return result;
    }

    auto multiplicity(const SeparationCatalog & cat, int c1, int c2) -> BigCount
    {
        return multiplicity(cat, c1, cat[c2].representative).count;
    }

    auto six_s_component_check(const Graph & p, PatternSet x) -> bool
    {
        vector<int> rest;
        for (int v = 0 ; v < p.size() ; ++v)
            if (! contains(x, v))
                rest.push_back(v);
        return long(components(induced(p, rest).graph).size()) <= 6L * popcount(x);
    }
}
