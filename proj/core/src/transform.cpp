#include "tempspan/transform.hpp"

#include <limits>

#include "tempspan/reach.hpp"

namespace tempspan {

CliqueAsBiclique clique_to_biclique(const TemporalClique& c) {
    if (c.max_label() == std::numeric_limits<Label>::max())
        throw PreconditionError("no room above the maximum label for the diagonal");
    const Index n = c.vertex_count();
    const Label mu = c.max_label() + 1;
    std::vector<Label> labels(static_cast<std::size_t>(n) * n);
    for (Index u = 0; u < n; ++u)
        for (Index v = 0; v < n; ++v)
            labels[static_cast<std::size_t>(u) * n + v] = u == v ? mu : c.label(std::min(u, v), std::max(u, v));
    return CliqueAsBiclique{TemporalBiClique(n, n, std::move(labels)), mu};
}

Spanner bispanner_to_clique_spanner(const CliqueAsBiclique& t, const Spanner& s_d, bool strict) {
    for (EdgeRef e : s_d.edges)
        if (!t.image.valid_edge(e))
            throw PreconditionError("bi-spanner edge outside the duplicated image");
    if (strict) {
        VerificationReport rep = verify_bispanner(t.image, s_d);
        if (!rep.ok)
            throw PreconditionError("edge set is not a bi-spanner of the duplicated image");
    }
    std::vector<EdgeRef> edges;
    edges.reserve(s_d.edges.size());
    for (EdgeRef e : s_d.edges) {
        if (e.i == e.j) continue;  // diagonal edge, label mu, no clique counterpart
        edges.push_back(EdgeRef{std::min(e.i, e.j), std::max(e.i, e.j)});
    }
    return Spanner::make(SpannerKind::spanner, std::move(edges), s_d.method);
}

BicliqueAsClique biclique_to_clique(const TemporalBiClique& g) {
    if (g.side_a() != g.side_b())
        throw PreconditionError("clique embedding needs a square bi-clique");
    if (g.max_label() >= std::numeric_limits<Label>::max() - 1)
        throw PreconditionError("no room above the maximum label for the A-side filler");
    const Index n = g.side_a();
    const Label mu = g.max_label() + 2;
    std::vector<Label> flat(static_cast<std::size_t>(2 * n) * (2 * n - 1) / 2);
    std::size_t k = 0;
    for (Index i = 0; i < 2 * n; ++i) {
        for (Index j = i + 1; j < 2 * n; ++j) {
            Label l;
            if (j < n)
                l = mu;                          // inside A: later than everything
            else if (i >= n)
                l = 0;                           // inside B: earlier than everything
            else
                l = g.label(i, j - n) + 1;       // cross pair
            flat[k++] = l;
        }
    }
    return BicliqueAsClique{TemporalClique(2 * n, std::move(flat)), n, mu};
}

Spanner cross_filter(const BicliqueAsClique& t, const Spanner& s) {
    std::vector<EdgeRef> edges;
    edges.reserve(s.edges.size());
    for (EdgeRef e : s.edges) {
        if (!t.image.valid_edge(e))
            throw PreconditionError("spanner edge outside the clique image");
        if (e.i < t.n && e.j >= t.n) edges.push_back(EdgeRef{e.i, e.j - t.n});
    }
    return Spanner::make(SpannerKind::bi_spanner, std::move(edges), s.method);
}

}
