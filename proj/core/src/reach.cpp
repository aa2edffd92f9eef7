#include "tempspan/reach.hpp"

#include <algorithm>
#include <array>

namespace tempspan {

std::vector<EdgeRef> ReachResult::tree_edges() const {
    std::vector<EdgeRef> out;
    out.reserve(tree.size());
    for (const auto& [v, e] : tree) out.push_back(e);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ReachEngine::ReachEngine(Index vertex_count, std::vector<std::pair<EdgeRef, Label>> edges)
    : n_(vertex_count) {
    if (n_ < 1) throw PreconditionError("sweep over empty vertex set");
    edges_.reserve(edges.size());
    for (const auto& [ref, label] : edges) {
        if (ref.i < 0 || ref.i >= n_ || ref.j < 0 || ref.j >= n_ || ref.i == ref.j)
            throw PreconditionError("sweep edge endpoint out of range");
        edges_.push_back(EngineEdge{label, ref.i, ref.j, ref});
    }
    build_adjacency();
}

ReachEngine::ReachEngine(const TemporalBiClique& g) : n_(g.vertex_count()) {
    edges_.reserve(g.edge_count());
    for (Index a = 0; a < g.side_a(); ++a)
        for (Index b = 0; b < g.side_b(); ++b)
            edges_.push_back(EngineEdge{g.label(a, b), g.flat_a(a), g.flat_b(b), EdgeRef{a, b}});
    build_adjacency();
}

ReachEngine::ReachEngine(const TemporalClique& g) : n_(g.vertex_count()) {
    edges_.reserve(g.edge_count());
    for (Index i = 0; i < n_; ++i)
        for (Index j = i + 1; j < n_; ++j)
            edges_.push_back(EngineEdge{g.label(i, j), i, j, EdgeRef{i, j}});
    build_adjacency();
}

ReachEngine::ReachEngine(const TemporalBiClique& g, const Spanner& s) : n_(g.vertex_count()) {
    edges_.reserve(s.edges.size());
    for (EdgeRef e : s.edges) {
        if (!g.valid_edge(e)) throw PreconditionError("spanner edge outside the instance");
        edges_.push_back(EngineEdge{g.label(e), g.flat_a(e.i), g.flat_b(e.j), e});
    }
    build_adjacency();
}

ReachEngine::ReachEngine(const TemporalClique& g, const Spanner& s) : n_(g.vertex_count()) {
    edges_.reserve(s.edges.size());
    for (EdgeRef e : s.edges) {
        if (!g.valid_edge(e)) throw PreconditionError("spanner edge outside the instance");
        edges_.push_back(EngineEdge{g.label(e), e.i, e.j, e});
    }
    build_adjacency();
}

void ReachEngine::build_adjacency() {
    std::sort(edges_.begin(), edges_.end(), [](const EngineEdge& x, const EngineEdge& y) {
        if (x.label != y.label) return x.label < y.label;
        return x.ref < y.ref;
    });
    adj_begin_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const EngineEdge& e : edges_) {
        ++adj_begin_[static_cast<std::size_t>(e.u) + 1];
        ++adj_begin_[static_cast<std::size_t>(e.v) + 1];
    }
    for (std::size_t v = 1; v < adj_begin_.size(); ++v) adj_begin_[v] += adj_begin_[v - 1];
    adj_edge_.resize(2 * edges_.size());
    std::vector<std::uint32_t> cursor(adj_begin_.begin(), adj_begin_.end() - 1);
    for (std::uint32_t k = 0; k < edges_.size(); ++k) {
        adj_edge_[cursor[edges_[k].u]++] = k;
        adj_edge_[cursor[edges_[k].v]++] = k;
    }
    when_.resize(n_);
    stamp_.assign(static_cast<std::size_t>(n_), 0);
    via_.resize(n_);
    epoch_ = 0;
}

std::optional<EdgeRef> ReachEngine::via(Index v) const {
    if (!reached(v) || via_[static_cast<std::size_t>(v)] < 0) return std::nullopt;
    return edges_[static_cast<std::size_t>(via_[static_cast<std::size_t>(v)])].ref;
}

template <bool Earliest>
void ReachEngine::run(std::span<const Index> seeds, Label bound) {
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
    reached_.clear();
    queue_.clear();

    auto set = [&](Index x, Label l, std::int32_t via_edge) {
        stamp_[static_cast<std::size_t>(x)] = epoch_;
        when_[static_cast<std::size_t>(x)] = l;
        via_[static_cast<std::size_t>(x)] = via_edge;
        reached_.push_back(x);
        queue_.push_back(x);
    };

    for (Index s : seeds) {
        if (s < 0 || s >= n_) throw PreconditionError("sweep seed out of range");
        if (reached(s)) continue;
        stamp_[static_cast<std::size_t>(s)] = epoch_;
        when_[static_cast<std::size_t>(s)] = bound;
        via_[static_cast<std::size_t>(s)] = -1;
        reached_.push_back(s);
    }
    queue_.clear();

    // Edges of one label form one relaxation round: first seed the round from
    // vertices reached before it, then close transitively within the round.
    // That makes walks with equal consecutive labels count as temporal paths.
    auto process_group = [&](std::size_t gi, std::size_t gj) {
        const Label l = edges_[gi].label;
        for (std::size_t k = gi; k < gj; ++k) {
            const EngineEdge& e = edges_[k];
            const bool ru = reached(e.u), rv = reached(e.v);
            if (ru == rv) continue;
            if (ru)
                set(e.v, l, static_cast<std::int32_t>(k));
            else
                set(e.u, l, static_cast<std::int32_t>(k));
        }
        while (!queue_.empty()) {
            const Index x = queue_.back();
            queue_.pop_back();
            const auto first = adj_edge_.begin() + adj_begin_[static_cast<std::size_t>(x)];
            const auto last = adj_edge_.begin() + adj_begin_[static_cast<std::size_t>(x) + 1];
            auto lo = std::lower_bound(first, last, l, [&](std::uint32_t idx, Label val) {
                return edges_[idx].label < val;
            });
            for (auto it = lo; it != last && edges_[*it].label == l; ++it) {
                const EngineEdge& e = edges_[*it];
                const Index y = e.u == x ? e.v : e.u;
                if (!reached(y)) set(y, l, static_cast<std::int32_t>(*it));
            }
        }
    };

    if constexpr (Earliest) {
        std::size_t i = std::lower_bound(edges_.begin(), edges_.end(), bound,
                                         [](const EngineEdge& e, Label val) { return e.label < val; }) -
                        edges_.begin();
        while (i < edges_.size()) {
            std::size_t j = i + 1;
            while (j < edges_.size() && edges_[j].label == edges_[i].label) ++j;
            process_group(i, j);
            i = j;
        }
    } else {
        std::size_t end = std::upper_bound(edges_.begin(), edges_.end(), bound,
                                           [](Label val, const EngineEdge& e) { return val < e.label; }) -
                          edges_.begin();
        while (end > 0) {
            std::size_t i = end - 1;
            while (i > 0 && edges_[i - 1].label == edges_[end - 1].label) --i;
            process_group(i, end);
            end = i;
        }
    }
}

void ReachEngine::run_earliest(std::span<const Index> sources, Label t_start) {
    run<true>(sources, t_start);
}

void ReachEngine::run_latest(std::span<const Index> sinks, Label t_end) {
    run<false>(sinks, t_end);
}

namespace {

template <class Graph>
SweepResult sweep_table(const Graph& g, std::span<const Index> seeds, Label bound, bool earliest) {
    ReachEngine eng(g);
    if (earliest)
        eng.run_earliest(seeds, bound);
    else
        eng.run_latest(seeds, bound);
    SweepResult out(static_cast<std::size_t>(eng.vertex_count()));
    for (Index v : eng.reached_vertices())
        out[static_cast<std::size_t>(v)] = ArrivalInfo{eng.when(v), eng.via(v)};
    return out;
}

/// Shared assembly for in/out sets: run the sweep seeded at both endpoints,
/// then build the witnessing tree rooted at the primary endpoint, handing the
/// secondary endpoint the anchor edge itself.
template <class Graph>
ReachResult anchored_set(const Graph& g, EdgeRef e, Index primary, Index secondary,
                         ReachDirection dir) {
    if (!g.valid_edge(e)) throw PreconditionError("anchor edge out of range");
    ReachEngine eng(g);
    const std::array<Index, 2> seeds{primary, secondary};
    if (dir == ReachDirection::out)
        eng.run_earliest(seeds, g.label(e));
    else
        eng.run_latest(seeds, g.label(e));

    ReachResult r;
    r.anchor = e;
    r.direction = dir;
    r.members = eng.reached_vertices();
    std::sort(r.members.begin(), r.members.end());
    r.tree.reserve(r.members.size() - 1);
    for (Index v : r.members) {
        if (v == primary) continue;
        if (v == secondary)
            r.tree.emplace_back(v, e);
        else
            r.tree.emplace_back(v, *eng.via(v));
    }
    return r;
}

}  // namespace

SweepResult earliest_arrivals(const TemporalBiClique& g, std::span<const Index> sources_flat, Label t_start) {
    return sweep_table(g, sources_flat, t_start, true);
}

SweepResult earliest_arrivals(const TemporalClique& g, std::span<const Index> sources, Label t_start) {
    return sweep_table(g, sources, t_start, true);
}

SweepResult latest_departures(const TemporalBiClique& g, std::span<const Index> sinks_flat, Label t_end) {
    return sweep_table(g, sinks_flat, t_end, false);
}

SweepResult latest_departures(const TemporalClique& g, std::span<const Index> sinks, Label t_end) {
    return sweep_table(g, sinks, t_end, false);
}

ReachResult out_set(const TemporalBiClique& g, EdgeRef e) {
    return anchored_set(g, e, g.flat_a(e.i), g.flat_b(e.j), ReachDirection::out);
}

ReachResult out_set(const TemporalClique& g, EdgeRef e) {
    return anchored_set(g, e, e.i, e.j, ReachDirection::out);
}

ReachResult in_set(const TemporalBiClique& g, EdgeRef e) {
    return anchored_set(g, e, g.flat_a(e.i), g.flat_b(e.j), ReachDirection::in);
}

ReachResult in_set(const TemporalClique& g, EdgeRef e) {
    return anchored_set(g, e, e.i, e.j, ReachDirection::in);
}

std::vector<EdgeRef> connector_set(const TemporalBiClique& g, EdgeRef e) {
    std::vector<EdgeRef> edges = in_set(g, e).tree_edges();
    std::vector<EdgeRef> out = out_set(g, e).tree_edges();
    edges.insert(edges.end(), out.begin(), out.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

VerificationReport verify_bispanner(const TemporalBiClique& g, const Spanner& s) {
    ReachEngine eng(g, s);
    VerificationReport rep;
    for (Index a = 0; a < g.side_a(); ++a) {
        const std::array<Index, 1> src{g.flat_a(a)};
        eng.run_earliest(src, 0);
        for (Index b = 0; b < g.side_b(); ++b) {
            ++rep.pairs_checked;
            if (!eng.reached(g.flat_b(b))) {
                rep.ok = false;
                rep.witness = std::pair<Index, Index>{a, b};
                return rep;
            }
        }
    }
    return rep;
}

namespace {

template <class Graph>
VerificationReport verify_all_pairs(const Graph& g, const Spanner& s) {
    ReachEngine eng(g, s);
    const Index n = eng.vertex_count();
    VerificationReport rep;
    for (Index u = 0; u < n; ++u) {
        const std::array<Index, 1> src{u};
        eng.run_earliest(src, 0);
        for (Index v = 0; v < n; ++v) {
            if (v == u) continue;
            ++rep.pairs_checked;
            if (!eng.reached(v)) {
                rep.ok = false;
                rep.witness = std::pair<Index, Index>{u, v};
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace

VerificationReport verify_spanner(const TemporalClique& g, const Spanner& s) {
    return verify_all_pairs(g, s);
}

VerificationReport verify_spanner(const TemporalBiClique& g, const Spanner& s) {
    return verify_all_pairs(g, s);
}

}
