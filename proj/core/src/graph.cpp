#include "tempspan/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_set>

namespace tempspan {

namespace {

bool all_distinct_sorted(std::vector<Label>& scratch) {
    std::sort(scratch.begin(), scratch.end());
    return std::adjacent_find(scratch.begin(), scratch.end()) == scratch.end();
}

/// Order-preserving compression of labels to 0-based ranks of their sorted
/// distinct values.
std::vector<Label> compress_to_ranks(const std::vector<Label>& labels) {
    std::vector<Label> sorted(labels);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Label> out(labels.size());
    for (std::size_t k = 0; k < labels.size(); ++k)
        out[k] = static_cast<Label>(std::lower_bound(sorted.begin(), sorted.end(), labels[k]) - sorted.begin());
    return out;
}

/// labels[k] * (E + 1) + (k + 1) for E = labels.size(), compressing first if
/// the arithmetic would not fit.
std::vector<Label> injective_relabel(std::vector<Label> labels) {
    const std::uint64_t e = labels.size();
    const std::uint64_t stride = e + 1;
    const std::uint64_t max_safe = (std::numeric_limits<std::uint64_t>::max() - e) / stride;
    bool needs_compress = std::any_of(labels.begin(), labels.end(),
                                      [&](Label l) { return l > max_safe; });
    if (needs_compress) labels = compress_to_ranks(labels);
    std::vector<Label> out(labels.size());
    for (std::size_t k = 0; k < labels.size(); ++k)
        out[k] = labels[k] * stride + (k + 1);
    return out;
}

}  // namespace

TemporalBiClique::TemporalBiClique(Index n_a, Index n_b, std::vector<Label> labels)
    : n_a_(n_a), n_b_(n_b), labels_(std::move(labels)) {
    if (n_a_ < 1 || n_b_ < 1) throw PreconditionError("bi-clique sides must be non-empty");
    if (labels_.size() != static_cast<std::size_t>(n_a_) * static_cast<std::size_t>(n_b_))
        throw PreconditionError("bi-clique label matrix has wrong size");
    max_label_ = *std::max_element(labels_.begin(), labels_.end());

    std::vector<Label> scratch(labels_);
    injective_ = all_distinct_sorted(scratch);
    if (injective_) {
        locally_injective_ = true;
        return;
    }
    locally_injective_ = true;
    for (Index a = 0; a < n_a_ && locally_injective_; ++a) {
        scratch.assign(labels_.begin() + static_cast<std::size_t>(a) * n_b_,
                       labels_.begin() + static_cast<std::size_t>(a + 1) * n_b_);
        locally_injective_ = all_distinct_sorted(scratch);
    }
    for (Index b = 0; b < n_b_ && locally_injective_; ++b) {
        scratch.clear();
        for (Index a = 0; a < n_a_; ++a) scratch.push_back(label(a, b));
        locally_injective_ = all_distinct_sorted(scratch);
    }
}

TemporalBiClique TemporalBiClique::transposed() const {
    std::vector<Label> t(labels_.size());
    for (Index a = 0; a < n_a_; ++a)
        for (Index b = 0; b < n_b_; ++b)
            t[static_cast<std::size_t>(b) * n_a_ + a] = label(a, b);
    return TemporalBiClique(n_b_, n_a_, std::move(t));
}

std::size_t TemporalClique::pair_rank(Index i, Index j) const {
    if (i > j) std::swap(i, j);
    if (i < 0 || i == j || j >= n_) throw PreconditionError("clique edge out of range");
    return static_cast<std::size_t>(i) * (2 * static_cast<std::size_t>(n_) - i - 1) / 2 +
           static_cast<std::size_t>(j - i - 1);
}

TemporalClique::TemporalClique(Index n, std::vector<Label> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n_ < 1) throw PreconditionError("clique must have at least one vertex");
    if (labels_.size() != static_cast<std::size_t>(n_) * (n_ - 1) / 2)
        throw PreconditionError("clique label vector has wrong size");
    max_label_ = labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end());

    std::vector<Label> scratch(labels_);
    injective_ = all_distinct_sorted(scratch);
    if (injective_) {
        locally_injective_ = true;
        return;
    }
    locally_injective_ = true;
    for (Index v = 0; v < n_ && locally_injective_; ++v) {
        scratch.clear();
        for (Index w = 0; w < n_; ++w)
            if (w != v) scratch.push_back(label(std::min(v, w), std::max(v, w)));
        locally_injective_ = all_distinct_sorted(scratch);
    }
}

TemporalBiClique make_injective(const TemporalBiClique& g) {
    return TemporalBiClique(g.side_a(), g.side_b(), injective_relabel(g.labels()));
}

TemporalClique make_injective(const TemporalClique& g) {
    return TemporalClique(g.vertex_count(), injective_relabel(g.labels()));
}

ExtremalMatching extremal_matching(const TemporalBiClique& g) {
    if (!g.locally_injective())
        throw PreconditionError("extremal matching needs distinct labels at every vertex");
    const Index na = g.side_a(), nb = g.side_b();
    ExtremalMatching m;
    m.early_a.resize(na);
    m.late_a.resize(na);
    m.early_b.resize(nb);
    m.late_b.resize(nb);
    for (Index a = 0; a < na; ++a) {
        Index lo = 0, hi = 0;
        for (Index b = 1; b < nb; ++b) {
            if (g.label(a, b) < g.label(a, lo)) lo = b;
            if (g.label(a, b) > g.label(a, hi)) hi = b;
        }
        m.early_a[a] = lo;
        m.late_a[a] = hi;
    }
    for (Index b = 0; b < nb; ++b) {
        Index lo = 0, hi = 0;
        for (Index a = 1; a < na; ++a) {
            if (g.label(a, b) < g.label(lo, b)) lo = a;
            if (g.label(a, b) > g.label(hi, b)) hi = a;
        }
        m.early_b[b] = lo;
        m.late_b[b] = hi;
    }
    if (na == nb) {
        m.early_is_perfect = true;
        m.late_is_perfect = true;
        for (Index a = 0; a < na; ++a) {
            if (m.early_b[m.early_a[a]] != a) m.early_is_perfect = false;
            if (m.late_b[m.late_a[a]] != a) m.late_is_perfect = false;
        }
    }
    return m;
}

CliqueExtremalMatching extremal_matching(const TemporalClique& g) {
    if (!g.locally_injective())
        throw PreconditionError("extremal matching needs distinct labels at every vertex");
    const Index n = g.vertex_count();
    if (n < 2) throw PreconditionError("extremal matching needs at least one edge");
    CliqueExtremalMatching m;
    m.early.resize(n);
    m.late.resize(n);
    for (Index v = 0; v < n; ++v) {
        Index lo = v == 0 ? 1 : 0, hi = lo;
        for (Index w = 0; w < n; ++w) {
            if (w == v) continue;
            if (g.label(std::min(v, w), std::max(v, w)) < g.label(std::min(v, lo), std::max(v, lo))) lo = w;
            if (g.label(std::min(v, w), std::max(v, w)) > g.label(std::min(v, hi), std::max(v, hi))) hi = w;
        }
        m.early[v] = lo;
        m.late[v] = hi;
    }
    m.early_is_perfect = true;
    m.late_is_perfect = true;
    for (Index v = 0; v < n; ++v) {
        if (m.early[m.early[v]] != v) m.early_is_perfect = false;
        if (m.late[m.late[v]] != v) m.late_is_perfect = false;
    }
    return m;
}

bool extremally_matched(const TemporalBiClique& g) {
    if (g.side_a() != g.side_b()) return false;
    ExtremalMatching m = extremal_matching(g);
    return m.early_is_perfect && m.late_is_perfect;
}

Index edge_index(const TemporalBiClique& g, VertexRef v, EdgeRef e) {
    if (!g.valid_edge(e)) throw PreconditionError("edge out of range");
    Index rank = 1;
    if (v.side == Side::A) {
        if (v.index != e.i) throw PreconditionError("edge not incident to vertex");
        Label le = g.label(e);
        for (Index b = 0; b < g.side_b(); ++b) {
            Label l = g.label(v.index, b);
            if (b != e.j && l == le) throw PreconditionError("ambiguous rank: duplicate labels at vertex");
            if (l < le) ++rank;
        }
    } else {
        if (v.index != e.j) throw PreconditionError("edge not incident to vertex");
        Label le = g.label(e);
        for (Index a = 0; a < g.side_a(); ++a) {
            Label l = g.label(a, v.index);
            if (a != e.i && l == le) throw PreconditionError("ambiguous rank: duplicate labels at vertex");
            if (l < le) ++rank;
        }
    }
    return rank;
}

Index edge_index(const TemporalClique& g, Index v, EdgeRef e) {
    if (!g.valid_edge(e)) throw PreconditionError("edge out of range");
    if (v != e.i && v != e.j) throw PreconditionError("edge not incident to vertex");
    Label le = g.label(e);
    Index rank = 1;
    Index other = v == e.i ? e.j : e.i;
    for (Index w = 0; w < g.vertex_count(); ++w) {
        if (w == v) continue;
        Label l = g.label(std::min(v, w), std::max(v, w));
        if (w != other && l == le) throw PreconditionError("ambiguous rank: duplicate labels at vertex");
        if (l < le) ++rank;
    }
    return rank;
}

namespace {

std::vector<Index> clean_keep(const std::vector<Index>& keep, Index bound, const char* side) {
    std::vector<Index> k(keep);
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    if (k.empty()) throw PreconditionError(std::string("induced subinstance: empty ") + side + " side");
    if (k.front() < 0 || k.back() >= bound)
        throw PreconditionError(std::string("induced subinstance: ") + side + " index out of range");
    return k;
}

}  // namespace

InducedInstance induced_subinstance(const TemporalBiClique& g,
                                    const std::vector<Index>& keep_a,
                                    const std::vector<Index>& keep_b) {
    SubMap map;
    map.a_orig = clean_keep(keep_a, g.side_a(), "A");
    map.b_orig = clean_keep(keep_b, g.side_b(), "B");
    map.a_sub.assign(g.side_a(), -1);
    map.b_sub.assign(g.side_b(), -1);
    for (Index i = 0; i < static_cast<Index>(map.a_orig.size()); ++i) map.a_sub[map.a_orig[i]] = i;
    for (Index j = 0; j < static_cast<Index>(map.b_orig.size()); ++j) map.b_sub[map.b_orig[j]] = j;

    std::vector<Label> labels;
    labels.reserve(map.a_orig.size() * map.b_orig.size());
    for (Index a : map.a_orig)
        for (Index b : map.b_orig) labels.push_back(g.label(a, b));
    TemporalBiClique sub(static_cast<Index>(map.a_orig.size()),
                         static_cast<Index>(map.b_orig.size()), std::move(labels));
    return InducedInstance{std::move(sub), std::move(map)};
}

}
