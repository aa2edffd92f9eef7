#include "tempspan/reduce.hpp"

#include <algorithm>

#include "tempspan/reach.hpp"

namespace tempspan {

namespace {

/// Dismounting works on the original label matrix with alive masks instead of
/// re-inducing after every removal. Alive index lists stay ascending, so the
/// scan order over the shrinking instance equals the scan order over its
/// re-indexed copy and find_dismountable on the copy finds the same step.
struct DismountState {
    const TemporalBiClique& g;
    std::vector<Index> alive_a, alive_b;
    std::vector<Index> early_of_a;  // per original A-index: alive B-index with minimum label
    std::vector<Index> late_of_b;   // per original B-index: alive A-index with maximum label

    explicit DismountState(const TemporalBiClique& graph) : g(graph) {
        alive_a.resize(g.side_a());
        alive_b.resize(g.side_b());
        for (Index a = 0; a < g.side_a(); ++a) alive_a[a] = a;
        for (Index b = 0; b < g.side_b(); ++b) alive_b[b] = b;
        early_of_a.resize(g.side_a());
        late_of_b.resize(g.side_b());
        for (Index a : alive_a) recompute_early(a);
        for (Index b : alive_b) recompute_late(b);
    }

    void recompute_early(Index a) {
        Index best = alive_b.front();
        for (Index b : alive_b)
            if (g.label(a, b) < g.label(a, best)) best = b;
        early_of_a[a] = best;
    }

    void recompute_late(Index b) {
        Index best = alive_a.front();
        for (Index a : alive_a)
            if (g.label(a, b) > g.label(best, b)) best = a;
        late_of_b[b] = best;
    }

    std::optional<DismountStep> scan() const {
        for (Index a : alive_a) {
            for (Index a2 : alive_a) {
                if (a2 == a) continue;
                const Index pb = early_of_a[a2];
                if (g.label(a, pb) <= g.label(a2, pb))
                    return DismountStep{VertexRef{Side::A, a}, VertexRef{Side::A, a2},
                                        {EdgeRef{a, pb}, EdgeRef{a2, pb}}};
            }
        }
        for (Index b : alive_b) {
            for (Index b2 : alive_b) {
                if (b2 == b) continue;
                const Index pa = late_of_b[b2];
                if (g.label(pa, b2) <= g.label(pa, b))
                    return DismountStep{VertexRef{Side::B, b}, VertexRef{Side::B, b2},
                                        {EdgeRef{pa, b2}, EdgeRef{pa, b}}};
            }
        }
        return std::nullopt;
    }

    void remove(const DismountStep& step) {
        if (step.removed.side == Side::A) {
            const Index a = step.removed.index;
            alive_a.erase(std::find(alive_a.begin(), alive_a.end(), a));
            for (Index b : alive_b)
                if (late_of_b[b] == a) recompute_late(b);
        } else {
            const Index b = step.removed.index;
            alive_b.erase(std::find(alive_b.begin(), alive_b.end(), b));
            for (Index a : alive_a)
                if (early_of_a[a] == b) recompute_early(a);
        }
    }
};

}  // namespace

std::vector<EdgeRef> ReductionTrace::recorded_edges() const {
    std::vector<EdgeRef> out;
    out.reserve(2 * steps.size());
    for (const DismountStep& s : steps) {
        out.push_back(s.included_edges[0]);
        out.push_back(s.included_edges[1]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<DismountStep> find_dismountable(const TemporalBiClique& g) {
    if (!g.locally_injective())
        throw PreconditionError("dismounting needs distinct labels at every vertex");
    return DismountState(g).scan();
}

ReductionTrace dismount_exhaustive(const TemporalBiClique& g) {
    if (!g.locally_injective())
        throw PreconditionError("dismounting needs distinct labels at every vertex");
    DismountState state(g);
    std::vector<DismountStep> steps;
    while (auto step = state.scan()) {
        steps.push_back(*step);
        state.remove(*step);
    }
    InducedInstance fin = induced_subinstance(g, state.alive_a, state.alive_b);
    return ReductionTrace{std::move(steps), std::move(fin.graph), std::move(fin.map)};
}

Spanner lift_spanner(const TemporalBiClique& original, const ReductionTrace& trace,
                     const Spanner& sub, bool strict) {
    if (strict) {
        VerificationReport rep = verify_bispanner(trace.final_instance, sub);
        if (!rep.ok)
            throw PreconditionError("lift rejected: edge set is not a bi-spanner of the reduced instance");
    }
    std::vector<EdgeRef> edges;
    edges.reserve(sub.edges.size() + 2 * trace.steps.size());
    for (EdgeRef e : sub.edges) {
        if (!trace.final_instance.valid_edge(e))
            throw PreconditionError("lift rejected: edge outside the reduced instance");
        edges.push_back(trace.map.to_parent(e));
    }
    for (const DismountStep& s : trace.steps) {
        edges.push_back(s.included_edges[0]);
        edges.push_back(s.included_edges[1]);
    }
    for (EdgeRef e : edges)
        if (!original.valid_edge(e))
            throw PreconditionError("lift rejected: edge outside the original instance");
    return Spanner::make(SpannerKind::bi_spanner, std::move(edges), sub.method);
}

}
