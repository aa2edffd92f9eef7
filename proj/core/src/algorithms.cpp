#include "tempspan/algorithms.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "tempspan/generators.hpp"
#include "tempspan/oracle.hpp"
#include "tempspan/reduce.hpp"
#include "tempspan/transform.hpp"

namespace tempspan {

namespace {

std::size_t ceil_log2(std::size_t n) {
    std::size_t bits = 0;
    std::size_t pow = 1;
    while (pow < n) {
        pow *= 2;
        ++bits;
    }
    return bits;
}

void check_pivot_config(const PivotConfig& cfg) {
    if (cfg.c.num <= 0 || cfg.c.num > cfg.c.den)
        throw PreconditionError("pivot threshold must lie in (0, 1]");
}

Spanner checked_bispanner(const TemporalBiClique& g, std::vector<EdgeRef> edges,
                          const char* method) {
    Spanner s = Spanner::make(SpannerKind::bi_spanner, std::move(edges), method);
    if (!verify_bispanner(g, s).ok)
        throw InternalCheckError(std::string(method) + ": constructed edge set is not a bi-spanner");
    return s;
}

void enforce_bound(const AlgoReport& r, const char* method) {
    if (r.bound_claimed && r.size > *r.bound_claimed)
        throw InternalCheckError(std::string(method) + ": claimed size bound exceeded");
}

// Recursion core shared by bispanner_nlogn and the pivot fallback. Returns
// edges in g's own index space; depth_out is the deepest level reached.
std::vector<EdgeRef> nlogn_rec(const TemporalBiClique& g, std::size_t depth,
                               std::size_t& depth_out) {
    depth_out = std::max(depth_out, depth);
    const Index na = g.side_a();
    const Index nb = g.side_b();
    std::vector<EdgeRef> out;
    if (na == 1) {
        out.reserve(static_cast<std::size_t>(nb));
        for (Index j = 0; j < nb; ++j) out.push_back({0, j});
        return out;
    }
    std::vector<Index> all_b(static_cast<std::size_t>(nb));
    for (Index j = 0; j < nb; ++j) all_b[static_cast<std::size_t>(j)] = j;

    const Index mid = na / 2;
    for (int half = 0; half < 2; ++half) {
        std::vector<Index> keep_a;
        if (half == 0)
            for (Index i = 0; i < mid; ++i) keep_a.push_back(i);
        else
            for (Index i = mid; i < na; ++i) keep_a.push_back(i);

        InducedInstance part = induced_subinstance(g, keep_a, all_b);
        ReductionTrace tr = dismount_exhaustive(part.graph);
        std::vector<EdgeRef> sub = nlogn_rec(tr.final_instance, depth + 1, depth_out);
        for (EdgeRef e : sub) out.push_back(part.map.to_parent(tr.map.to_parent(e)));
        for (EdgeRef e : tr.recorded_edges()) out.push_back(part.map.to_parent(e));
    }
    return out;
}

}  // namespace

AlgoReport bispanner_nlogn(const TemporalBiClique& g) {
    AlgoReport report;
    std::size_t depth = 0;
    std::vector<EdgeRef> edges = nlogn_rec(g, 0, depth);
    report.spanner = checked_bispanner(g, std::move(edges), "nlogn");
    report.size = report.spanner.size();
    report.recursion_depth = depth;
    if (g.side_a() == g.side_b()) {
        const std::size_t n = static_cast<std::size_t>(g.side_a());
        report.bound_claimed = 2 * n * ceil_log2(n) + 2 * n;
    }
    enforce_bound(report, "nlogn");
    return report;
}

std::optional<PivotEdge> find_pivot_edge(const TemporalBiClique& g, const PivotConfig& cfg) {
    check_pivot_config(cfg);
    if (g.side_a() != g.side_b())
        throw PreconditionError("pivot search requires a square instance");
    const Index n = g.side_a();

    ReachEngine eng(g);
    std::vector<Index> out_members;
    std::size_t best = 0;
    EdgeRef best_edge{0, 0};
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            const EdgeRef e{a, b};
            const Label t = g.label(a, b);
            const Index seeds[2] = {g.flat_a(a), g.flat_b(b)};
            eng.run_earliest(seeds, t);
            out_members = eng.reached_vertices();
            eng.run_latest(seeds, t);
            std::size_t overlap = 0;
            for (Index v : out_members)
                if (eng.reached(v)) ++overlap;
            if (overlap > best) {
                best = overlap;
                best_edge = e;
            }
        }
    }
    // Threshold: |In(e) "intersect" Out(e)| >= 2cn.
    if (!cfg.c.ge_times(static_cast<std::uint64_t>(best), 2 * static_cast<std::uint64_t>(n)))
        return std::nullopt;

    PivotEdge result;
    result.edge = best_edge;
    const Index seeds[2] = {g.flat_a(best_edge.i), g.flat_b(best_edge.j)};
    eng.run_earliest(seeds, g.label(best_edge));
    out_members = eng.reached_vertices();
    eng.run_latest(seeds, g.label(best_edge));
    for (Index v : out_members)
        if (eng.reached(v)) result.pivot_set.push_back(v);
    std::sort(result.pivot_set.begin(), result.pivot_set.end());
    return result;
}

namespace {

struct PivotState {
    PivotConfig cfg;
    std::size_t fallbacks = 0;
    std::size_t depth = 0;
};

// Edges (in g's index space) of a bi-spanner of g built by the pivot
// recursion. g is arbitrary; it is dismounted to an extremally matched core
// first, and cores with at most two vertices per side go to the oracle.
std::vector<EdgeRef> pivot_rec(const TemporalBiClique& g, PivotState& st, std::size_t depth) {
    st.depth = std::max(st.depth, depth);
    ReductionTrace tr = dismount_exhaustive(g);
    const TemporalBiClique& core = tr.final_instance;
    const Index n = core.side_a();

    std::vector<EdgeRef> core_edges;
    if (std::min(core.side_a(), core.side_b()) <= 2) {
        core_edges = min_bispanner_bruteforce(core).edges;
    } else if (std::optional<PivotEdge> pe = find_pivot_edge(core, st.cfg)) {
        const EdgeRef e = pe->edge;
        ReachResult outs = out_set(core, e);
        ReachResult ins = in_set(core, e);
        core_edges = outs.tree_edges();
        for (EdgeRef f : ins.tree_edges()) core_edges.push_back(f);

        // Vertices of A not reaching e still need all of B, and vertices of B
        // not reached from e still need all of A; everything else pairs up
        // through the connector trees.
        std::vector<char> in_a(static_cast<std::size_t>(n), 0);
        std::vector<char> out_b(static_cast<std::size_t>(n), 0);
        for (Index v : ins.members) {
            VertexRef r = core.vertex(v);
            if (r.side == Side::A) in_a[static_cast<std::size_t>(r.index)] = 1;
        }
        for (Index v : outs.members) {
            VertexRef r = core.vertex(v);
            if (r.side == Side::B) out_b[static_cast<std::size_t>(r.index)] = 1;
        }
        std::vector<Index> rest_a, rest_b, all_a, all_b;
        for (Index i = 0; i < n; ++i) {
            all_a.push_back(i);
            all_b.push_back(i);
            if (!in_a[static_cast<std::size_t>(i)]) rest_a.push_back(i);
            if (!out_b[static_cast<std::size_t>(i)]) rest_b.push_back(i);
        }
        if (!rest_a.empty()) {
            InducedInstance sub = induced_subinstance(core, rest_a, all_b);
            for (EdgeRef f : pivot_rec(sub.graph, st, depth + 1))
                core_edges.push_back(sub.map.to_parent(f));
        }
        if (!rest_b.empty()) {
            InducedInstance sub = induced_subinstance(core, all_a, rest_b);
            for (EdgeRef f : pivot_rec(sub.graph, st, depth + 1))
                core_edges.push_back(sub.map.to_parent(f));
        }
    } else {
        switch (st.cfg.fallback) {
            case PivotFallback::fail:
                throw NoPivotEdgeError(core);
            case PivotFallback::nlogn: {
                ++st.fallbacks;
                std::size_t ignored = 0;
                core_edges = nlogn_rec(core, 0, ignored);
                break;
            }
            case PivotFallback::reverted_best: {
                ++st.fallbacks;
                core_edges = bispanner_reverted_best(core).spanner.edges;
                break;
            }
        }
    }

    Spanner sub = Spanner::make(SpannerKind::bi_spanner, std::move(core_edges), "pivot");
    return lift_spanner(g, tr, sub).edges;
}

}  // namespace

AlgoReport bispanner_pivot(const TemporalBiClique& g, const PivotConfig& cfg) {
    check_pivot_config(cfg);
    PivotState st;
    st.cfg = cfg;
    std::vector<EdgeRef> edges = pivot_rec(g, st, 0);

    AlgoReport report;
    report.spanner = checked_bispanner(g, std::move(edges), "pivot");
    report.size = report.spanner.size();
    report.recursion_depth = st.depth;
    report.fallback_invocations = st.fallbacks;
    if (st.fallbacks == 0) {
        // floor((4/c) * (|A| + |B|)); equals (8/c) * n on square instances.
        const std::size_t sides = static_cast<std::size_t>(g.side_a()) + static_cast<std::size_t>(g.side_b());
        report.bound_claimed =
            4 * sides * static_cast<std::size_t>(cfg.c.den) / static_cast<std::size_t>(cfg.c.num);
    }
    enforce_bound(report, "pivot");
    return report;
}

namespace {

ExtremalMatching matched_or_throw(const TemporalBiClique& g, const char* what) {
    ExtremalMatching m = extremal_matching(g);
    if (!m.early_is_perfect || !m.late_is_perfect)
        throw PreconditionError(std::string(what) + " requires an extremally matched instance");
    return m;
}

bool pair_reverted(const TemporalBiClique& g, const ExtremalMatching& m, Index a, Index b,
                   Index a2, Index b2) {
    // Route a2 -> late(b2) -> b (through column b), or a2 -> early(a2) -> a
    // (through row a); either detour stays temporal.
    return g.label(a2, b) <= g.label(m.late_b[static_cast<std::size_t>(b2)], b) ||
           g.label(a, m.early_a[static_cast<std::size_t>(a2)]) <= g.label(a, b2);
}

}  // namespace

std::vector<EdgeRef> reverted_set(const TemporalBiClique& g, EdgeRef e) {
    if (!g.valid_edge(e)) throw PreconditionError("anchor edge out of range");
    ExtremalMatching m = matched_or_throw(g, "reverted_set");
    const Index n = g.side_a();
    std::vector<EdgeRef> out;
    for (Index a2 = 0; a2 < n; ++a2)
        for (Index b2 = 0; b2 < n; ++b2)
            if (!pair_reverted(g, m, e.i, e.j, a2, b2)) out.push_back({a2, b2});
    return out;
}

AlgoReport bispanner_reverted(const TemporalBiClique& g, EdgeRef e) {
    if (!g.valid_edge(e)) throw PreconditionError("anchor edge out of range");
    ExtremalMatching m = matched_or_throw(g, "bispanner_reverted");
    const Index n = g.side_a();

    std::vector<EdgeRef> edges;
    std::vector<EdgeRef> malicious = reverted_set(g, e);
    edges.reserve(static_cast<std::size_t>(4 * n) + malicious.size());
    for (Index j = 0; j < n; ++j) edges.push_back({e.i, j});
    for (Index i = 0; i < n; ++i) edges.push_back({i, e.j});
    for (Index a2 = 0; a2 < n; ++a2) edges.push_back({a2, m.early_a[static_cast<std::size_t>(a2)]});
    for (Index b2 = 0; b2 < n; ++b2) edges.push_back({m.late_b[static_cast<std::size_t>(b2)], b2});
    for (EdgeRef f : malicious) edges.push_back(f);

    AlgoReport report;
    report.spanner = checked_bispanner(g, std::move(edges), "reverted");
    report.size = report.spanner.size();
    report.bound_claimed =
        std::max<std::size_t>(1, 4 * static_cast<std::size_t>(n) - 4 + malicious.size());
    enforce_bound(report, "reverted");
    return report;
}

AlgoReport bispanner_reverted_best(const TemporalBiClique& g, bool scan_all_anchors) {
    ExtremalMatching m = matched_or_throw(g, "bispanner_reverted_best");
    const Index n = g.side_a();

    std::vector<EdgeRef> candidates;
    if (scan_all_anchors) {
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b) candidates.push_back({a, b});
    } else {
        for (Index a = 0; a < n; ++a) {
            candidates.push_back({a, m.early_a[static_cast<std::size_t>(a)]});
            candidates.push_back({a, m.late_a[static_cast<std::size_t>(a)]});
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }

    EdgeRef best_edge = candidates.front();
    std::size_t best_count = static_cast<std::size_t>(-1);
    for (EdgeRef e : candidates) {
        std::size_t count = 0;
        for (Index a2 = 0; a2 < n; ++a2)
            for (Index b2 = 0; b2 < n; ++b2)
                if (!pair_reverted(g, m, e.i, e.j, a2, b2)) ++count;
        if (count < best_count) {
            best_count = count;
            best_edge = e;
        }
    }

    AlgoReport report = bispanner_reverted(g, best_edge);
    report.spanner.method = "reverted_best";
    return report;
}

AlgoReport bispanner_reverted_reduced(const TemporalBiClique& g, bool scan_all_anchors) {
    ReductionTrace tr = dismount_exhaustive(g);
    if (tr.steps.empty()) return bispanner_reverted_best(g, scan_all_anchors);

    AlgoReport sub = bispanner_reverted_best(tr.final_instance, scan_all_anchors);
    AlgoReport report;
    report.spanner = lift_spanner(g, tr, sub.spanner);
    if (!verify_bispanner(g, report.spanner).ok)
        throw InternalCheckError("reverted_best: lifted edge set is not a bi-spanner");
    report.size = report.spanner.size();
    if (sub.bound_claimed) report.bound_claimed = *sub.bound_claimed + 2 * tr.steps.size();
    enforce_bound(report, "reverted_best");
    return report;
}

AlgoReport product_bispanner(const TemporalBiClique& g, const TemporalBiClique& h,
                             const Spanner& s_g, const Spanner& s_h, bool strict) {
    if (s_g.kind != SpannerKind::bi_spanner || s_h.kind != SpannerKind::bi_spanner)
        throw PreconditionError("product construction needs bi-spanners of the factors");
    if (s_h.edges.empty()) throw PreconditionError("factor spanner is empty");
    if (strict) {
        if (!verify_bispanner(g, s_g).ok || !verify_bispanner(h, s_h).ok)
            throw PreconditionError("factor spanner fails verification");
    }

    ProductResult prod = product(g, h);

    // Latest s_g edge per B-vertex of g; ties take the smaller A-index.
    std::vector<Index> late_bag(static_cast<std::size_t>(g.side_b()), -1);
    for (EdgeRef e : s_g.edges) {
        Index& cur = late_bag[static_cast<std::size_t>(e.j)];
        if (cur < 0 || g.label(cur, e.j) < g.label(e) ||
            (g.label(cur, e.j) == g.label(e) && e.i < cur))
            cur = e.i;
    }
    for (Index b = 0; b < g.side_b(); ++b)
        if (late_bag[static_cast<std::size_t>(b)] < 0)
            throw PreconditionError("factor spanner leaves a B-vertex uncovered");

    // Lowest-label s_h edge, lexicographic tie-break; its B-endpoint is the
    // shared representative target of the first edge family.
    EdgeRef rep = s_h.edges.front();
    for (EdgeRef e : s_h.edges)
        if (h.label(e) < h.label(rep) || (h.label(e) == h.label(rep) && e < rep)) rep = e;

    std::vector<EdgeRef> edges;
    edges.reserve(s_g.size() * static_cast<std::size_t>(h.side_a()) +
                  s_h.size() * static_cast<std::size_t>(g.side_b()));
    for (EdgeRef e : s_g.edges)
        for (Index ah = 0; ah < h.side_a(); ++ah)
            edges.push_back({prod.flat_a(e.i, ah), prod.flat_b(e.j, rep.j)});
    for (EdgeRef e : s_h.edges)
        for (Index bg = 0; bg < g.side_b(); ++bg)
            edges.push_back({prod.flat_a(late_bag[static_cast<std::size_t>(bg)], e.i),
                             prod.flat_b(bg, e.j)});

    AlgoReport report;
    report.spanner = checked_bispanner(prod.graph, std::move(edges), "product");
    report.size = report.spanner.size();
    report.bound_claimed = s_g.size() * static_cast<std::size_t>(h.side_a()) +
                           s_h.size() * static_cast<std::size_t>(g.side_b());
    enforce_bound(report, "product");
    return report;
}

AlgoReport bispanner_portfolio(const TemporalBiClique& g) {
    AlgoReport best = bispanner_reverted_reduced(g);
    AlgoReport pivot = bispanner_pivot(g);
    if (pivot.size < best.size) best = std::move(pivot);
    AlgoReport nlogn = bispanner_nlogn(g);
    if (nlogn.size < best.size) best = std::move(nlogn);
    best.spanner.method = "portfolio/" + best.spanner.method;
    return best;
}

AlgoReport clique_spanner(const TemporalClique& c) {
    if (c.vertex_count() == 1) {
        AlgoReport report;
        report.spanner = Spanner::make(SpannerKind::spanner, {}, "clique/trivial");
        report.bound_claimed = 0;
        return report;
    }
    TemporalClique inj = make_injective(c);
    CliqueAsBiclique image = clique_to_biclique(inj);
    AlgoReport sub = bispanner_portfolio(image.image);
    Spanner collapsed = bispanner_to_clique_spanner(image, sub.spanner, /*strict=*/false);

    AlgoReport report;
    report.spanner =
        Spanner::make(SpannerKind::spanner, std::move(collapsed.edges), "clique/" + sub.spanner.method);
    if (!verify_spanner(c, report.spanner).ok)
        throw InternalCheckError("clique pipeline output fails verification on the original labels");
    report.size = report.spanner.size();
    report.recursion_depth = sub.recursion_depth;
    report.fallback_invocations = sub.fallback_invocations;
    report.bound_claimed = sub.size;  // never larger than the bi-clique solution
    enforce_bound(report, "clique");
    return report;
}

}
