#ifndef TEMPSPAN_DIAGNOSTICS_HPP
#define TEMPSPAN_DIAGNOSTICS_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "tempspan/graph.hpp"
#include "tempspan/types.hpp"

namespace tempspan {

/// |In(e) intersect Out(e)| for every edge of a bi-clique, row-major, with
/// the maximum, its first attaining edge (lexicographic) and a histogram
/// size -> edge count.
struct PivotProfile {
    Index n_a = 0;
    Index n_b = 0;
    std::vector<std::size_t> sizes;  // sizes[a * n_b + b]
    std::size_t max_size = 0;
    EdgeRef argmax{0, 0};
    std::map<std::size_t, std::size_t> histogram;

    std::size_t at(EdgeRef e) const { return sizes[static_cast<std::size_t>(e.i) * n_b + e.j]; }
};

PivotProfile pivot_profile(const TemporalBiClique& g);

/// Edges of a square bi-clique whose two endpoint ranks differ by at least
/// c*n: |rank_a(e) - rank_b(e)| >= c*n, where rank_v(e) is the 1-based
/// position of e among v's incident edges by ascending label. On extremally
/// matched instances a steep edge always has a pivot set of at least 2*c*n
/// vertices (In and Out then split evenly between the sides), so such
/// instances without pivot edges cannot contain one; without the matching
/// hypothesis the floor can fail. Requires |A| = |B| and locally injective
/// labels. Result is sorted.
std::vector<EdgeRef> steep_edges(const TemporalBiClique& g, Rational c);

/// Number of neighbors v' of v for which the edge {v, v'} sits at rank i..j
/// from v' side, i.e. i <= rank_{v'}({v, v'}) <= j (1-based, inclusive).
/// With rank_at_v set, ranks are taken at v instead, which makes the count
/// trivially min(j, deg) - i + 1; exposed for comparison only.
std::size_t label_spread(const TemporalBiClique& g, VertexRef v, Index i, Index j,
                         bool rank_at_v = false);

/// |M(e)| (see reverted_set) for candidate anchors: by default the edges of
/// the two extremal matchings, with all_edges every edge. Requires an
/// extremally matched instance. Entries are sorted by edge.
struct RevertedProfile {
    std::vector<std::pair<EdgeRef, std::size_t>> entries;
    std::size_t min_size = 0;
    EdgeRef argmin{0, 0};
};

RevertedProfile reverted_profile(const TemporalBiClique& g, bool all_edges = false);

}

#endif
