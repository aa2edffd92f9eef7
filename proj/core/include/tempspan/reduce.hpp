#ifndef TEMPSPAN_REDUCE_HPP
#define TEMPSPAN_REDUCE_HPP

#include <array>
#include <optional>
#include <vector>

#include "tempspan/graph.hpp"
#include "tempspan/types.hpp"

namespace tempspan {

/// Removal of one vertex that provably preserves bi-spanner liftability.
///
/// An A-vertex a can be removed using a delegate a' != a when
///     label(a, early(a')) <= label(a', early(a'))
/// where early(a') is a's delegate's earliest neighbor; the two recorded
/// edges are {a, early(a')} and {a', early(a')}. Any path that previously
/// departed from a can instead hop a -> early(a') -> a' and follow a'.
/// B-vertices mirror this with latest neighbors: b can be removed using b'
/// when label(b', late(b')) <= label(b, late(b')), recording
/// {b', late(b')} and {b, late(b')}.
struct DismountStep {
    VertexRef removed;
    VertexRef via;
    std::array<EdgeRef, 2> included_edges;
};

/// Result of exhaustively dismounting an instance. Steps are recorded in the
/// index space of the ORIGINAL instance; replaying their removals from the
/// original reproduces final_instance, whose indices are translated by map.
struct ReductionTrace {
    std::vector<DismountStep> steps;
    TemporalBiClique final_instance;
    SubMap map;

    /// Distinct edges recorded across all steps, sorted.
    std::vector<EdgeRef> recorded_edges() const;
};

/// First removable vertex under the deterministic scan order: A-side indices
/// ascending, then B-side indices ascending; the delegate is the smallest
/// index that works. Returns nothing iff the instance is extremally matched.
/// Requires locally injective labels.
std::optional<DismountStep> find_dismountable(const TemporalBiClique& g);

/// Repeats find_dismountable until no vertex is removable. The surviving
/// instance is extremally matched (possibly 1x1).
ReductionTrace dismount_exhaustive(const TemporalBiClique& g);

/// Lifts a bi-spanner of trace.final_instance to one of the original
/// instance: translates its edges and unions the recorded step edges.
/// With strict set, sub is first verified against final_instance.
Spanner lift_spanner(const TemporalBiClique& original, const ReductionTrace& trace,
                     const Spanner& sub, bool strict = false);

}

#endif
