#ifndef TEMPSPAN_REACH_HPP
#define TEMPSPAN_REACH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tempspan/graph.hpp"
#include "tempspan/types.hpp"

namespace tempspan {

/// A temporal path here is a sequence of edges with non-decreasing labels;
/// equal consecutive labels are allowed. All reachability in this library
/// uses that convention.

enum class ReachDirection : std::uint8_t { in, out };

/// Vertices reachable from an anchor edge (direction out) or able to reach it
/// (direction in), together with a witnessing tree.
///
/// Vertices are flattened ids of the underlying graph. The tree stores, for
/// every member except the anchor's primary endpoint (the root), one edge:
///  - out: the edge through which the member is first reached; following
///    these edges from the root yields, for both anchor endpoints, a temporal
///    path to every member departing no earlier than the anchor label.
///  - in: the mirror under time reversal; paths arrive at the anchor
///    endpoints no later than the anchor label.
/// The anchor edge itself is the tree edge of the anchor's secondary
/// endpoint, so tree.size() == members.size() - 1.
struct ReachResult {
    EdgeRef anchor;
    ReachDirection direction = ReachDirection::out;
    std::vector<Index> members;                    // sorted flat ids
    std::vector<std::pair<Index, EdgeRef>> tree;   // (flat member, tree edge)

    std::vector<EdgeRef> tree_edges() const;
};

struct VerificationReport {
    bool ok = true;
    /// First failing ordered pair in scan order. For bi-spanner checks the
    /// pair is (A-index, B-index); for full spanner checks it is a pair of
    /// flattened vertex ids.
    std::optional<std::pair<Index, Index>> witness;
    std::uint64_t pairs_checked = 0;
};

struct ArrivalInfo {
    Label when = 0;
    std::optional<EdgeRef> via;  // empty for sources/sinks
};

/// Sweep result indexed by flattened vertex id; disengaged = unreachable.
using SweepResult = std::vector<std::optional<ArrivalInfo>>;

/// Reusable single-source/multi-source sweep machine over a fixed edge set.
/// One sweep's results stay readable until the next run_* call. Handles
/// duplicate labels: edges of equal label are closed under joint traversal,
/// matching the non-strict path convention.
class ReachEngine {
public:
    ReachEngine(Index vertex_count, std::vector<std::pair<EdgeRef, Label>> edges);

    explicit ReachEngine(const TemporalBiClique& g);
    explicit ReachEngine(const TemporalClique& g);
    /// Restriction of g to the edges of s (s must only contain edges of g).
    ReachEngine(const TemporalBiClique& g, const Spanner& s);
    ReachEngine(const TemporalClique& g, const Spanner& s);

    /// Earliest-arrival sweep: arrival(v) is the minimum last-edge label over
    /// temporal paths from the sources using only labels >= t_start; sources
    /// themselves get arrival t_start.
    void run_earliest(std::span<const Index> sources, Label t_start);

    /// Mirror sweep under time reversal: departure(v) is the maximum
    /// first-edge label over temporal paths from v into the sinks using only
    /// labels <= t_end; sinks themselves get departure t_end.
    void run_latest(std::span<const Index> sinks, Label t_end);

    bool reached(Index v) const { return stamp_[static_cast<std::size_t>(v)] == epoch_; }
    Label when(Index v) const { return when_[static_cast<std::size_t>(v)]; }
    std::optional<EdgeRef> via(Index v) const;

    /// Vertices touched by the last run, in discovery order.
    const std::vector<Index>& reached_vertices() const { return reached_; }
    Index vertex_count() const { return n_; }

private:
    struct EngineEdge {
        Label label;
        Index u, v;
        EdgeRef ref;
    };

    void build_adjacency();
    template <bool Earliest>
    void run(std::span<const Index> seeds, Label bound);

    Index n_;
    std::vector<EngineEdge> edges_;        // sorted by (label, ref)
    std::vector<std::uint32_t> adj_begin_; // CSR offsets per vertex
    std::vector<std::uint32_t> adj_edge_;  // edge indices, per vertex ascending by label

    std::vector<Label> when_;
    std::vector<std::uint32_t> stamp_;
    std::vector<std::int32_t> via_;        // edge index, -1 for seeds
    std::vector<Index> reached_;
    std::vector<Index> queue_;
    std::uint32_t epoch_ = 0;
};

/// Convenience wrappers returning a full per-vertex table.
SweepResult earliest_arrivals(const TemporalBiClique& g, std::span<const Index> sources_flat, Label t_start);
SweepResult earliest_arrivals(const TemporalClique& g, std::span<const Index> sources, Label t_start);
SweepResult latest_departures(const TemporalBiClique& g, std::span<const Index> sinks_flat, Label t_end);
SweepResult latest_departures(const TemporalClique& g, std::span<const Index> sinks, Label t_end);

/// Out(e): vertices reachable from either endpoint of e by a temporal path
/// departing at or after label(e), with a witnessing tree rooted at the
/// A-side (resp. lower-index) endpoint.
ReachResult out_set(const TemporalBiClique& g, EdgeRef e);
ReachResult out_set(const TemporalClique& g, EdgeRef e);

/// In(e): vertices that reach an endpoint of e by a temporal path arriving
/// at or before label(e); mirror of out_set.
ReachResult in_set(const TemporalBiClique& g, EdgeRef e);
ReachResult in_set(const TemporalClique& g, EdgeRef e);

/// Union of the in- and out-trees of e. With injective labels this has
/// exactly |In(e)| + |Out(e)| - 3 edges, and inside it every In(e) vertex
/// reaches every Out(e) vertex through e.
std::vector<EdgeRef> connector_set(const TemporalBiClique& g, EdgeRef e);

/// Checks that s routes every A-vertex to every B-vertex. Scans sources in
/// ascending A order and targets in ascending B order, so a reported witness
/// is the lexicographically first failing pair.
VerificationReport verify_bispanner(const TemporalBiClique& g, const Spanner& s);

/// Checks all ordered vertex pairs (full temporal connectivity).
VerificationReport verify_spanner(const TemporalClique& g, const Spanner& s);
/// Full connectivity over A + B of a bi-clique using only cross edges.
VerificationReport verify_spanner(const TemporalBiClique& g, const Spanner& s);

}

#endif
