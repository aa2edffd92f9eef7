#include "tempspan/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <utility>

namespace tempspan {

namespace {

struct FlatEdge {
    Index u, v;
    Label label;
    EdgeRef ref;
};

/// Exhaustive walk extension over (vertex, time) states. Deliberately does
/// not share the label-group sweep mechanics: correctness here only depends
/// on "an edge with label >= the current time extends a walk".
std::vector<Index> walk_closure(const std::vector<FlatEdge>& edges, Index n, Index source,
                                Label t_start) {
    std::set<std::pair<Index, Label>> visited;
    std::vector<std::pair<Index, Label>> stack;
    std::vector<bool> member(static_cast<std::size_t>(n), false);
    stack.emplace_back(source, t_start);
    visited.insert({source, t_start});
    member[static_cast<std::size_t>(source)] = true;
    while (!stack.empty()) {
        auto [v, t] = stack.back();
        stack.pop_back();
        for (const FlatEdge& e : edges) {
            Index other;
            if (e.u == v)
                other = e.v;
            else if (e.v == v)
                other = e.u;
            else
                continue;
            if (e.label < t) continue;
            if (visited.insert({other, e.label}).second) {
                member[static_cast<std::size_t>(other)] = true;
                stack.emplace_back(other, e.label);
            }
        }
    }
    std::vector<Index> out;
    for (Index v = 0; v < n; ++v)
        if (member[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

std::vector<FlatEdge> all_edges(const TemporalBiClique& g) {
    std::vector<FlatEdge> edges;
    edges.reserve(g.edge_count());
    for (Index a = 0; a < g.side_a(); ++a)
        for (Index b = 0; b < g.side_b(); ++b)
            edges.push_back(FlatEdge{g.flat_a(a), g.flat_b(b), g.label(a, b), EdgeRef{a, b}});
    return edges;
}

std::vector<FlatEdge> all_edges(const TemporalClique& g) {
    std::vector<FlatEdge> edges;
    edges.reserve(g.edge_count());
    for (Index i = 0; i < g.vertex_count(); ++i)
        for (Index j = i + 1; j < g.vertex_count(); ++j)
            edges.push_back(FlatEdge{i, j, g.label(i, j), EdgeRef{i, j}});
    return edges;
}

/// Fixpoint relaxation of earliest arrivals restricted to the edges selected
/// by mask. Edges are visited in ascending label order, so the loop settles
/// in one extra pass unless equal labels interact; the repeat-until-stable
/// outer loop is what makes ties correct.
struct SubsetVerifier {
    std::vector<FlatEdge> lex;           // enumeration order (lexicographic)
    std::vector<std::uint32_t> by_label; // positions into lex, ascending by (label, position)
    Index n = 0;

    static constexpr Label unreached = static_cast<Label>(-1);

    bool connects(std::uint32_t mask, Index source, std::uint64_t targets) const {
        std::array<Label, 64> arrival;
        arrival.fill(unreached);
        arrival[static_cast<std::size_t>(source)] = 0;
        std::uint64_t seen = std::uint64_t{1} << source;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::uint32_t pos : by_label) {
                if (!(mask & (std::uint32_t{1} << pos))) continue;
                const FlatEdge& e = lex[pos];
                const Label au = arrival[static_cast<std::size_t>(e.u)];
                const Label av = arrival[static_cast<std::size_t>(e.v)];
                if (au != unreached && au <= e.label && (av == unreached || av > e.label)) {
                    arrival[static_cast<std::size_t>(e.v)] = e.label;
                    seen |= std::uint64_t{1} << e.v;
                    changed = true;
                } else if (av != unreached && av <= e.label && (au == unreached || au > e.label)) {
                    arrival[static_cast<std::size_t>(e.u)] = e.label;
                    seen |= std::uint64_t{1} << e.u;
                    changed = true;
                }
            }
        }
        return (seen & targets) == targets;
    }

    bool valid(std::uint32_t mask, const std::vector<Index>& sources, std::uint64_t targets) const {
        for (Index s : sources) {
            const std::uint64_t others = targets & ~(std::uint64_t{1} << s);
            if (!connects(mask, s, others)) return false;
        }
        return true;
    }
};

SubsetVerifier make_verifier(std::vector<FlatEdge> lex, Index n) {
    SubsetVerifier v;
    v.lex = std::move(lex);
    v.n = n;
    v.by_label.resize(v.lex.size());
    for (std::uint32_t k = 0; k < v.by_label.size(); ++k) v.by_label[k] = k;
    std::stable_sort(v.by_label.begin(), v.by_label.end(), [&](std::uint32_t x, std::uint32_t y) {
        return v.lex[x].label < v.lex[y].label;
    });
    return v;
}

/// Plain ascending-cardinality combination scan; first hit is the
/// lexicographically smallest minimum.
std::optional<std::vector<EdgeRef>> scan_plain(const SubsetVerifier& ver,
                                               const std::vector<Index>& sources,
                                               std::uint64_t targets, std::size_t k) {
    const std::size_t e = ver.lex.size();
    if (k > e) return std::nullopt;
    std::vector<std::uint32_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = static_cast<std::uint32_t>(i);
    while (true) {
        std::uint32_t mask = 0;
        for (std::uint32_t idx : comb) mask |= std::uint32_t{1} << idx;
        if (ver.valid(mask, sources, targets)) {
            std::vector<EdgeRef> edges;
            for (std::uint32_t idx : comb) edges.push_back(ver.lex[idx].ref);
            return edges;
        }
        // next combination
        std::size_t i = k;
        while (i-- > 0) {
            if (comb[i] != i + e - k) {
                ++comb[i];
                for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
                break;
            }
            if (i == 0) return std::nullopt;
        }
        if (k == 0) return std::nullopt;
    }
}

/// Same scan with a coverage prune: once every edge of a still-uncovered
/// vertex lies strictly before the next free position, the branch is dead.
/// Prunes never change the outcome, only skip doomed combinations.
struct PrunedScan {
    const SubsetVerifier& ver;
    const std::vector<Index>& sources;
    std::uint64_t targets;
    std::size_t k = 0;
    std::vector<std::uint32_t> comb;
    std::vector<std::vector<std::uint32_t>> incident;  // per vertex: lex positions
    std::optional<std::vector<EdgeRef>> found;

    PrunedScan(const SubsetVerifier& v, const std::vector<Index>& s, std::uint64_t t)
        : ver(v), sources(s), targets(t) {
        incident.resize(static_cast<std::size_t>(v.n));
        for (std::uint32_t pos = 0; pos < v.lex.size(); ++pos) {
            incident[static_cast<std::size_t>(v.lex[pos].u)].push_back(pos);
            incident[static_cast<std::size_t>(v.lex[pos].v)].push_back(pos);
        }
    }

    bool coverage_ok(std::uint32_t mask, std::uint32_t next_free) const {
        for (Index v = 0; v < ver.n; ++v) {
            bool covered = false;
            for (std::uint32_t pos : incident[static_cast<std::size_t>(v)]) {
                if ((mask & (std::uint32_t{1} << pos)) || pos >= next_free) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
        return true;
    }

    void dfs(std::size_t depth, std::uint32_t start, std::uint32_t mask) {
        if (found) return;
        if (depth == k) {
            if (ver.valid(mask, sources, targets)) {
                std::vector<EdgeRef> edges;
                for (std::uint32_t pos = 0; pos < ver.lex.size(); ++pos)
                    if (mask & (std::uint32_t{1} << pos)) edges.push_back(ver.lex[pos].ref);
                found = edges;
            }
            return;
        }
        const std::uint32_t e = static_cast<std::uint32_t>(ver.lex.size());
        for (std::uint32_t pos = start; pos + (k - depth) <= e; ++pos) {
            const std::uint32_t next = mask | (std::uint32_t{1} << pos);
            // A vertex whose every incident edge is now behind us and unchosen
            // can never be covered again; no extension of this branch works.
            if (!coverage_ok(next, pos + 1)) continue;
            dfs(depth + 1, pos + 1, next);
            if (found) return;
        }
    }
};

std::optional<std::vector<EdgeRef>> scan_pruned(const SubsetVerifier& ver,
                                                const std::vector<Index>& sources,
                                                std::uint64_t targets, std::size_t k) {
    PrunedScan scan(ver, sources, targets);
    scan.k = k;
    scan.dfs(0, 0, 0);
    return scan.found;
}

Spanner minimum_subset(const SubsetVerifier& ver, const std::vector<Index>& sources,
                       std::uint64_t targets, std::size_t k_start, SpannerKind kind,
                       bool branch_and_bound) {
    for (std::size_t k = k_start; k <= ver.lex.size(); ++k) {
        auto hit = branch_and_bound ? scan_pruned(ver, sources, targets, k)
                                    : scan_plain(ver, sources, targets, k);
        if (hit) return Spanner::make(kind, std::move(*hit), "bruteforce");
    }
    throw InternalCheckError("complete instance admitted no spanner");
}

}  // namespace

std::vector<Index> reach_bruteforce(const TemporalBiClique& g, Index source_flat, Label t_start) {
    if (g.side_a() > 12 || g.side_b() > 12)
        throw GuardError("reach_bruteforce guard: at most 12 vertices per side");
    if (source_flat < 0 || source_flat >= g.vertex_count())
        throw PreconditionError("source out of range");
    return walk_closure(all_edges(g), g.vertex_count(), source_flat, t_start);
}

std::vector<Index> reach_bruteforce(const TemporalClique& g, Index source, Label t_start) {
    if (g.vertex_count() > 12)
        throw GuardError("reach_bruteforce guard: at most 12 vertices");
    if (source < 0 || source >= g.vertex_count())
        throw PreconditionError("source out of range");
    return walk_closure(all_edges(g), g.vertex_count(), source, t_start);
}

Spanner min_bispanner_bruteforce(const TemporalBiClique& g, bool branch_and_bound) {
    const std::size_t guard = branch_and_bound ? 30 : 20;
    if (g.edge_count() > guard)
        throw GuardError("min_bispanner_bruteforce guard: too many edges");
    SubsetVerifier ver = make_verifier(all_edges(g), g.vertex_count());
    std::vector<Index> sources;
    for (Index a = 0; a < g.side_a(); ++a) sources.push_back(g.flat_a(a));
    std::uint64_t targets = 0;
    for (Index b = 0; b < g.side_b(); ++b) targets |= std::uint64_t{1} << g.flat_b(b);
    const std::size_t k_start = static_cast<std::size_t>(std::max(g.side_a(), g.side_b()));
    return minimum_subset(ver, sources, targets, k_start, SpannerKind::bi_spanner, branch_and_bound);
}

Spanner min_spanner_bruteforce(const TemporalClique& g, bool branch_and_bound) {
    const std::size_t guard = branch_and_bound ? 30 : 20;
    if (g.edge_count() > guard)
        throw GuardError("min_spanner_bruteforce guard: too many edges");
    if (g.vertex_count() == 1) return Spanner::make(SpannerKind::spanner, {}, "bruteforce");
    SubsetVerifier ver = make_verifier(all_edges(g), g.vertex_count());
    std::vector<Index> sources;
    std::uint64_t targets = 0;
    for (Index v = 0; v < g.vertex_count(); ++v) {
        sources.push_back(v);
        targets |= std::uint64_t{1} << v;
    }
    const std::size_t k_start = static_cast<std::size_t>(g.vertex_count()) - 1;
    return minimum_subset(ver, sources, targets, k_start, SpannerKind::spanner, branch_and_bound);
}

}
