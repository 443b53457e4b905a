#pragma once

#include <udg/geometry.hh>
#include <udg/graph.hh>

#include <vector>

namespace udg
{
    enum class EventKind
    {
        Introduce,
        Forget
    };

    struct Event
    {
        EventKind kind;
        int vertex;

        auto operator== (const Event &) const -> bool = default;
    };

    struct PathDecomposition
    {
        std::vector<std::vector<int> > bags;
        std::vector<Event> events;   // filled by make_nice

        auto width() const -> int;
    };

    /// Bags over unit-width strips of a boxed drawing, strips crossing the
    /// shorter side (the drawing is transposed when it is taller than wide).
    auto path_decomposition_from_box(const EmbeddedGraph & emb) -> PathDecomposition;

    /// Introduce/forget event form. On each bag change all forgets come
    /// before introduces, each in ascending vertex id; everything left is
    /// forgotten at the end.
    auto make_nice(const PathDecomposition & pd) -> PathDecomposition;

    /// Bag sequence obtained by applying events one at a time.
    auto replay(const std::vector<Event> & events) -> std::vector<std::vector<int> >;

    /// Vertex coverage, edge coverage and contiguity against `g`.
    auto verify(const PathDecomposition & pd, const Graph & g) -> bool;
}
