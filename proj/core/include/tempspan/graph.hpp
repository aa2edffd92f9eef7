#ifndef TEMPSPAN_GRAPH_HPP
#define TEMPSPAN_GRAPH_HPP

#include <optional>
#include <vector>

#include "tempspan/types.hpp"

namespace tempspan {

/// Complete bipartite temporal graph: every pair (a, b) with a in A and b in B
/// carries exactly one time label. Immutable after construction.
///
/// Vertices are addressed per side (A-index, B-index) or by a flattened id:
/// A occupies [0, side_a()), B occupies [side_a(), vertex_count()).
class TemporalBiClique {
public:
    /// labels is row-major: labels[a * n_b + b].
    TemporalBiClique(Index n_a, Index n_b, std::vector<Label> labels);

    Index side_a() const { return n_a_; }
    Index side_b() const { return n_b_; }
    Index vertex_count() const { return n_a_ + n_b_; }
    std::size_t edge_count() const { return labels_.size(); }

    Label label(Index a, Index b) const { return labels_[static_cast<std::size_t>(a) * n_b_ + b]; }
    Label label(EdgeRef e) const { return label(e.i, e.j); }
    const std::vector<Label>& labels() const { return labels_; }
    Label max_label() const { return max_label_; }

    /// All labels pairwise distinct.
    bool injective() const { return injective_; }
    /// Labels distinct among the edges incident to each single vertex. Weaker
    /// than injective(); enough for rank-based operations.
    bool locally_injective() const { return locally_injective_; }

    bool valid_edge(EdgeRef e) const {
        return e.i >= 0 && e.i < n_a_ && e.j >= 0 && e.j < n_b_;
    }

    Index flat_a(Index a) const { return a; }
    Index flat_b(Index b) const { return n_a_ + b; }
    Index flat(VertexRef v) const { return v.side == Side::A ? v.index : n_a_ + v.index; }
    VertexRef vertex(Index flat) const {
        return flat < n_a_ ? VertexRef{Side::A, flat} : VertexRef{Side::B, static_cast<Index>(flat - n_a_)};
    }

    /// Same graph with the two sides swapped.
    TemporalBiClique transposed() const;

    friend bool operator==(const TemporalBiClique& x, const TemporalBiClique& y) {
        return x.n_a_ == y.n_a_ && x.n_b_ == y.n_b_ && x.labels_ == y.labels_;
    }

private:
    Index n_a_;
    Index n_b_;
    std::vector<Label> labels_;
    Label max_label_ = 0;
    bool injective_ = true;
    bool locally_injective_ = true;
};

/// Complete temporal graph on n vertices; one label per unordered pair.
/// Immutable after construction.
class TemporalClique {
public:
    /// labels holds the upper triangle in lexicographic (i, j) order, i < j.
    TemporalClique(Index n, std::vector<Label> labels);

    Index vertex_count() const { return n_; }
    std::size_t edge_count() const { return labels_.size(); }

    Label label(Index i, Index j) const { return labels_[pair_rank(i, j)]; }
    Label label(EdgeRef e) const { return label(e.i, e.j); }
    const std::vector<Label>& labels() const { return labels_; }
    Label max_label() const { return max_label_; }

    bool injective() const { return injective_; }
    bool locally_injective() const { return locally_injective_; }

    bool valid_edge(EdgeRef e) const {
        return e.i >= 0 && e.j > e.i && e.j < n_;
    }

    /// Rank of the unordered pair {i, j} in lexicographic order.
    std::size_t pair_rank(Index i, Index j) const;

    friend bool operator==(const TemporalClique& x, const TemporalClique& y) {
        return x.n_ == y.n_ && x.labels_ == y.labels_;
    }

private:
    Index n_;
    std::vector<Label> labels_;
    Label max_label_ = 0;
    bool injective_ = true;
    bool locally_injective_ = true;
};

/// Injective, order-preserving relabeling: every edge e gets
///     label'(e) = label(e) * (edge_count + 1) + rank(e)
/// where rank is the 1-based position of e in lexicographic edge order.
/// Strict label order is preserved and ties are broken by that edge order, so
/// any spanner of the result is a spanner of the input. If the arithmetic
/// would overflow, labels are first compressed to their sorted ranks.
TemporalBiClique make_injective(const TemporalBiClique& g);
TemporalClique make_injective(const TemporalClique& g);

/// Earliest (early) and latest (late) incident edge partner of every vertex,
/// plus whether each of the two edge families forms a perfect matching.
/// The per-vertex maps require locally injective labels.
struct ExtremalMatching {
    std::vector<Index> early_a;  // early_a[a] = B-index of a's minimum-label edge
    std::vector<Index> early_b;  // early_b[b] = A-index of b's minimum-label edge
    std::vector<Index> late_a;
    std::vector<Index> late_b;
    bool early_is_perfect = false;
    bool late_is_perfect = false;
};

ExtremalMatching extremal_matching(const TemporalBiClique& g);

/// Clique variant: early[v]/late[v] are plain vertex indices.
struct CliqueExtremalMatching {
    std::vector<Index> early;
    std::vector<Index> late;
    bool early_is_perfect = false;
    bool late_is_perfect = false;
};

CliqueExtremalMatching extremal_matching(const TemporalClique& g);

/// Both the early-edge set and the late-edge set are perfect matchings.
bool extremally_matched(const TemporalBiClique& g);

/// 1-based rank of edge e among the edges incident to v, ordered by ascending
/// label. Requires e incident to v and distinct labels at v.
Index edge_index(const TemporalBiClique& g, VertexRef v, EdgeRef e);
Index edge_index(const TemporalClique& g, Index v, EdgeRef e);

/// Index translation between a bi-clique and one of its induced subinstances.
struct SubMap {
    std::vector<Index> a_orig;  // new A-index -> original A-index, ascending
    std::vector<Index> b_orig;
    std::vector<Index> a_sub;   // original A-index -> new index, -1 if dropped
    std::vector<Index> b_sub;

    EdgeRef to_parent(EdgeRef e) const { return {a_orig[e.i], b_orig[e.j]}; }
    std::optional<EdgeRef> to_sub(EdgeRef e) const {
        Index a = a_sub[e.i], b = b_sub[e.j];
        if (a < 0 || b < 0) return std::nullopt;
        return EdgeRef{a, b};
    }
    VertexRef to_parent(VertexRef v) const {
        return {v.side, v.side == Side::A ? a_orig[v.index] : b_orig[v.index]};
    }
};

struct InducedInstance {
    TemporalBiClique graph;
    SubMap map;
};

/// Subgraph induced by the given A- and B-indices (any order, duplicates
/// ignored), reindexed densely in ascending original order. Both keep sets
/// must be non-empty and in range.
InducedInstance induced_subinstance(const TemporalBiClique& g,
                                    const std::vector<Index>& keep_a,
                                    const std::vector<Index>& keep_b);

}

#endif
