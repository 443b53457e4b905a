#include <udg/incexc.hh>

namespace udg
{
    auto SparseMatrix::add(int i, int j, BigCount value) -> void
    {
        if (i < 0 || i >= size() || j < 0 || j >= size())
            throw InputError{"matrix index out of range"};
        if (value != 0)
            _rows[i].emplace_back(j, std::move(value));
    }

    auto SparseMatrix::nonzeros() const -> long
    {
        long n = 0;
        for (auto & r : _rows)
            n += long(r.size());
        return n;
    }

    auto SparseMatrix::from_dense(const std::vector<std::vector<BigCount> > & m) -> SparseMatrix
    {
        SparseMatrix result(int(m.size()));
        for (std::size_t i = 0 ; i < m.size() ; ++i) {
            if (m[i].size() != m.size())
                throw InputError{"matrix is not square"};
            for (std::size_t j = 0 ; j < m.size() ; ++j)
                result.add(int(i), int(j), m[i][j]);
        }
        return result;
    }

    namespace
    {
        auto check(const SparseMatrix & m, const std::vector<BigCount> & start,
                const std::vector<BigCount> & end, int l) -> void
        {
            if (l < 1)
                throw InputError{"chain length must be at least 1"};
            if (int(start.size()) != m.size() || int(end.size()) != m.size())
                throw InputError{"vector dimension does not match matrix"};
        }

        auto dot(const std::vector<BigCount> & a, const std::vector<BigCount> & b) -> BigCount
        {
            BigCount s = 0;
            for (std::size_t i = 0 ; i < a.size() ; ++i)
                if (a[i] != 0 && b[i] != 0)
                    s += a[i] * b[i];
            return s;
        }

        auto multiply(const SparseMatrix & m, const std::vector<BigCount> & v) -> std::vector<BigCount>
        {
            std::vector<BigCount> out(v.size());
            for (int i = 0 ; i < m.size() ; ++i)
                for (auto & [j, x] : m.row(i))
                    if (v[j] != 0)
                        out[i] += x * v[j];
            return out;
        }
    }

    auto chain_sums(const SparseMatrix & m, const std::vector<BigCount> & start,
            const std::vector<BigCount> & end, int max_l) -> std::vector<BigCount>
    {
        check(m, start, end, max_l);
        std::vector<BigCount> result;
        auto v = end;
        for (int l = 1 ; l <= max_l ; ++l) {
            if (l > 1)
                v = multiply(m, v);
            result.push_back(dot(start, v));
        }
        return result;
    }

    auto chain_sum(const SparseMatrix & m, const std::vector<BigCount> & start,
            const std::vector<BigCount> & end, int l) -> BigCount
    {
        return chain_sums(m, start, end, l).back();
    }

    auto alternating_chain_sum(const SparseMatrix & m, const std::vector<BigCount> & start,
            const std::vector<BigCount> & end, int max_l) -> BigCount
    {
        BigCount total = 0;
        auto sums = chain_sums(m, start, end, max_l);
        for (int l = 1 ; l <= max_l ; ++l) {
            if (l % 2)
                total += sums[l - 1];
            else
                total -= sums[l - 1];
        }
        return total;
    }

    auto chain_sum_naive(const std::vector<std::vector<BigCount> > & m, const std::vector<BigCount> & start,
            const std::vector<BigCount> & end, int l) -> BigCount
    {
        int n = int(m.size());
        if (l < 1)
            throw InputError{"chain length must be at least 1"};
        if (int(start.size()) != n || int(end.size()) != n)
            throw InputError{"vector dimension does not match matrix"};

        BigCount total = 0;
        std::vector<int> walk(l, 0);
        if (n == 0)
            return 0;
        while (true) {
            BigCount w = start[walk[0]];
            for (int i = 0 ; i + 1 < l && w != 0 ; ++i)
                w *= m[walk[i]][walk[i + 1]];
            if (w != 0)
                total += w * end[walk[l - 1]];

            int i = l - 1;
            while (i >= 0 && walk[i] == n - 1)
                walk[i--] = 0;
            if (i < 0)
                break;
            ++walk[i];
        }
        return total;
    }
}
