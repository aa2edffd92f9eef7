#ifndef TEMPSPAN_ALGORITHMS_HPP
#define TEMPSPAN_ALGORITHMS_HPP

#include <optional>
#include <vector>

#include "tempspan/graph.hpp"
#include "tempspan/reach.hpp"
#include "tempspan/types.hpp"

namespace tempspan {

enum class PivotFallback : std::uint8_t { nlogn, reverted_best, fail };

struct PivotConfig {
    Rational c{1, 4};  // in (0, 1]
    PivotFallback fallback = PivotFallback::nlogn;
};

/// Outcome of a spanner construction. Every constructor verifies its own
/// output before returning and throws InternalCheckError if that fails, so a
/// returned report always carries a valid (bi-)spanner.
struct AlgoReport {
    Spanner spanner;
    std::size_t size = 0;                     // == spanner.size()
    std::size_t recursion_depth = 0;          // deepest recursive level, 0 = no recursion
    std::size_t fallback_invocations = 0;
    /// A size bound the construction promises for this input, when it makes
    /// one; size <= bound_claimed always holds when present.
    std::optional<std::size_t> bound_claimed;
};

/// Thrown by bispanner_pivot under PivotFallback::fail when a sub-instance
/// has no pivot edge for the configured c; carries that sub-instance.
struct NoPivotEdgeError : std::runtime_error {
    TemporalBiClique instance;
    explicit NoPivotEdgeError(TemporalBiClique g)
        : std::runtime_error("no pivot edge for the configured density"), instance(std::move(g)) {}
};

/// Divide-and-conquer bi-spanner: halve A, dismount each half-instance, and
/// recurse; an instance with |A| = 1 keeps all its edges. On square inputs
/// (|A| = |B| = n) the result has at most 2n*ceil(log2 n) + 2n edges,
/// recorded in bound_claimed. Requires locally injective labels.
AlgoReport bispanner_nlogn(const TemporalBiClique& g);

struct PivotEdge {
    EdgeRef edge;
    std::vector<Index> pivot_set;  // In(e) and Out(e) overlap, sorted flat ids
};

/// Searches a square (n x n) instance for an edge whose pivot set
/// In(e) "intersect" Out(e) has at least 2*c*n vertices. Scans all edges and
/// returns the one maximizing the pivot set (lexicographic tie-break), or
/// nothing if even the maximum falls short of the threshold.
std::optional<PivotEdge> find_pivot_edge(const TemporalBiClique& g, const PivotConfig& cfg);

/// Recursive pivot construction: dismount, split off In(e)/Out(e) of a pivot
/// edge with its connector set, recurse on the two remainders. Sides of size
/// <= 2 are finished by brute force. Sub-instances without a pivot edge are
/// handled per cfg.fallback (counted in fallback_invocations). When no
/// fallback fired, bound_claimed = floor((4/c) * (|A| + |B|)), which is
/// (8/c) * n on square inputs.
AlgoReport bispanner_pivot(const TemporalBiClique& g, const PivotConfig& cfg = {});

/// M(e) for an anchor edge e = {a, b} of an extremally matched instance: the
/// edges {a', b'} that are NOT e-reverted, where {a', b'} is e-reverted when
///     label(a', b) <= label(late(b'), b)   or
///     label(early(a'), a) <= label(b', a).
/// A reverted pair routes a' -> b' through the anchor's endpoints using only
/// extremal edges and edges incident to a or b.
std::vector<EdgeRef> reverted_set(const TemporalBiClique& g, EdgeRef e);

/// Bi-spanner from one anchor edge: all edges at a and b, both extremal
/// matchings, plus M(e). Size at most 4n - 4 + |M(e)| for n >= 2. Requires
/// an extremally matched instance.
AlgoReport bispanner_reverted(const TemporalBiClique& g, EdgeRef e);

/// bispanner_reverted with the anchor chosen to minimize |M(e)| over the
/// extremal-matching edges (or over all edges with scan_all_anchors),
/// lexicographic tie-break.
AlgoReport bispanner_reverted_best(const TemporalBiClique& g, bool scan_all_anchors = false);

/// Wrapper for inputs that are not extremally matched: dismount first, run
/// bispanner_reverted_best on the core, lift the result.
AlgoReport bispanner_reverted_reduced(const TemporalBiClique& g, bool scan_all_anchors = false);

/// Bi-spanner of the label-product of g and h (see generators: product) built
/// from bi-spanners of the factors, of size at most
///     |s_g| * |A_h| + |s_h| * |B_g|.
/// With strict (default) the factor spanners are verified first. The report's
/// edges live in the product's index space.
AlgoReport product_bispanner(const TemporalBiClique& g, const TemporalBiClique& h,
                             const Spanner& s_g, const Spanner& s_h, bool strict = true);

/// Runs bispanner_nlogn, bispanner_pivot (c = 1/4, nlogn fallback) and
/// bispanner_reverted_reduced, and keeps the smallest result. Ties prefer
/// reverted_reduced, then pivot, then nlogn.
AlgoReport bispanner_portfolio(const TemporalBiClique& g);

/// Spanner of a temporal clique through the bi-clique image: relabel
/// injectively, duplicate into a bi-clique, run the portfolio, collapse back.
/// The result is verified against the clique's original labels.
AlgoReport clique_spanner(const TemporalClique& c);

}

#endif
