#pragma once

#include <udg/count.hh>

#include <utility>
#include <vector>

namespace udg
{
    /// Square matrix stored as rows of (column, value) entries.
    class SparseMatrix
    {
        public:
            explicit SparseMatrix(int n = 0) : _rows(n) { }

            auto size() const -> int { return int(_rows.size()); }
            auto add(int i, int j, BigCount value) -> void;
            auto row(int i) const -> const std::vector<std::pair<int, BigCount> > & { return _rows[i]; }
            auto nonzeros() const -> long;

            static auto from_dense(const std::vector<std::vector<BigCount> > & m) -> SparseMatrix;

        private:
            std::vector<std::vector<std::pair<int, BigCount> > > _rows;
    };

    /// start^T M^(l-1) end, i.e. the sum over all walks with l vertices of
    /// start(first) * product of edge weights * end(last).
    auto chain_sum(const SparseMatrix & m, const std::vector<BigCount> & start,
            const std::vector<BigCount> & end, int l) -> BigCount;

    /// chain_sum for every l in 1..max_l (index l-1).
    auto chain_sums(const SparseMatrix & m, const std::vector<BigCount> & start,
            const std::vector<BigCount> & end, int max_l) -> std::vector<BigCount>;

    /// sum over l = 1..max_l of (-1)^(l+1) chain_sum(l).
    auto alternating_chain_sum(const SparseMatrix & m, const std::vector<BigCount> & start,
            const std::vector<BigCount> & end, int max_l) -> BigCount;

    /// Reference implementation by explicit walk enumeration.
    auto chain_sum_naive(const std::vector<std::vector<BigCount> > & m, const std::vector<BigCount> & start,
            const std::vector<BigCount> & end, int l) -> BigCount;
}
