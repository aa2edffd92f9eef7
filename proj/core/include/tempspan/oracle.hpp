#ifndef TEMPSPAN_ORACLE_HPP
#define TEMPSPAN_ORACLE_HPP

#include <vector>

#include "tempspan/graph.hpp"
#include "tempspan/types.hpp"

namespace tempspan {

/// Reference implementations kept deliberately naive and independent of the
/// sweep machinery; they define correct behavior for the fast paths and back
/// the exactness tests. All are guarded against oversized inputs.

/// Vertices reachable from source (flattened id) by a temporal path whose
/// labels are all >= t_start, found by exhaustive walk extension. Sorted.
/// Guard: at most 12 vertices per side.
std::vector<Index> reach_bruteforce(const TemporalBiClique& g, Index source_flat, Label t_start);
std::vector<Index> reach_bruteforce(const TemporalClique& g, Index source, Label t_start);

/// Minimum-size bi-spanner, lexicographically smallest edge set among the
/// minimum ones. Plain subset enumeration in ascending cardinality; guard:
/// at most 20 edges, or 30 with branch_and_bound (which prunes but returns
/// the same set).
Spanner min_bispanner_bruteforce(const TemporalBiClique& g, bool branch_and_bound = false);

/// Same for full spanners of a clique.
Spanner min_spanner_bruteforce(const TemporalClique& g, bool branch_and_bound = false);

}

#endif
