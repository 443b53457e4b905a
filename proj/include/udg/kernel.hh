#pragma once

#include <udg/count.hh>
#include <udg/geometry.hh>
#include <udg/graph.hh>
#include <udg/separations.hh>

#include <functional>
#include <vector>

namespace udg::kernel
{
    enum class Axis
    {
        X,
        Y
    };

    /// Answers |sub(P,H)| or |ind(P,H)| for a small host H.
    using Solver = std::function<BigCount (const Graph & p, const EmbeddedGraph & host, Mode mode)>;

    /// One connected component of a building block.
    struct BlockComponent
    {
        std::vector<int> vertices;   // ids in the host passed to blocks()
        EmbeddedGraph embedding;     // normalised into its own box
    };

    /// Disks strictly inside the open stripes running from a line of class a
    /// to the next line of class b, lines x = m being of class m mod L.
    /// Along Axis::Y the roles of x and y are swapped.
    auto blocks(const EmbeddedGraph & g, int a, int b, int period, Axis axis = Axis::X) -> std::vector<BlockComponent>;

    /// Mixed-radix indexing of vectors w <= p.
    class VectorSpace
    {
        public:
            explicit VectorSpace(std::vector<int> p);

            auto size() const -> int { return _size; }
            auto bound() const -> const std::vector<int> & { return _p; }
            auto index(const std::vector<int> & w) const -> int;
            auto vector_at(int index) const -> std::vector<int>;
            /// Index of the top vector p.
            auto top() const -> int { return _size - 1; }

        private:
            std::vector<int> _p;
            std::vector<int> _stride;
            int _size;
    };

    /// Pattern made of the first w_t components of each signature class.
    auto sub_pattern(const Graph & p, const ComponentSignature & sig, const std::vector<int> & w) -> Graph;

    /// Combine per-part tables tab_i[w] = |maps of P[w] into part i| into the
    /// table for the disjoint union of the parts.
    auto distribute_table(const std::vector<std::vector<BigCount> > & per_part, const VectorSpace & space) -> std::vector<BigCount>;
    auto distribute_components(const std::vector<std::vector<BigCount> > & per_part, const VectorSpace & space) -> BigCount;

    struct Stats
    {
        long solver_calls = 0;
        long block_components = 0;
        long largest_leaf = 0;       // disks in the biggest host handed to the solver
        long largest_leaf_side = 0;  // longest box side of a solver host
        long shifting_passes = 0;
    };

    /// Counts maps of P into G along one axis: inclusion-exclusion over the
    /// residue classes of the lines avoided by an occurrence, with
    /// `inner` answering every block component.
    auto count_via_shifting(const Graph & p, const EmbeddedGraph & g, Mode mode, Axis axis,
            const Solver & inner, Stats * stats = nullptr) -> BigCount;

    auto period(int k) -> int;

    /// Shifting along x, then along y inside any block component still too
    /// tall, until every host given to `solver` fits a box of side
    /// period(k).
    auto kernelized_count(const Graph & p, const EmbeddedGraph & g, Mode mode, const Solver & solver,
            Stats * stats = nullptr) -> BigCount;

    auto brute_solver() -> Solver;
    auto dp_solver() -> Solver;
}
