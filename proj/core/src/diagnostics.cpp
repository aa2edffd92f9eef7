#include "tempspan/diagnostics.hpp"

#include <algorithm>
#include <cstdlib>

#include "tempspan/algorithms.hpp"
#include "tempspan/reach.hpp"

namespace tempspan {

PivotProfile pivot_profile(const TemporalBiClique& g) {
    PivotProfile p;
    p.n_a = g.side_a();
    p.n_b = g.side_b();
    p.sizes.assign(static_cast<std::size_t>(p.n_a) * static_cast<std::size_t>(p.n_b), 0);

    ReachEngine eng(g);
    std::vector<Index> out_members;
    for (Index a = 0; a < p.n_a; ++a) {
        for (Index b = 0; b < p.n_b; ++b) {
            const Label t = g.label(a, b);
            const Index seeds[2] = {g.flat_a(a), g.flat_b(b)};
            eng.run_earliest(seeds, t);
            out_members = eng.reached_vertices();
            eng.run_latest(seeds, t);
            std::size_t overlap = 0;
            for (Index v : out_members)
                if (eng.reached(v)) ++overlap;

            p.sizes[static_cast<std::size_t>(a) * p.n_b + b] = overlap;
            ++p.histogram[overlap];
            if (overlap > p.max_size) {
                p.max_size = overlap;
                p.argmax = {a, b};
            }
        }
    }
    return p;
}

std::vector<EdgeRef> steep_edges(const TemporalBiClique& g, Rational c) {
    if (g.side_a() != g.side_b())
        throw PreconditionError("steepness is defined for square instances only");
    const Index n = g.side_a();

    std::vector<EdgeRef> out;
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            const EdgeRef e{a, b};
            const Index ra = edge_index(g, {Side::A, a}, e);
            const Index rb = edge_index(g, {Side::B, b}, e);
            const std::uint64_t diff =
                static_cast<std::uint64_t>(ra > rb ? ra - rb : rb - ra);
            if (c.ge_times(diff, static_cast<std::uint64_t>(n))) out.push_back(e);
        }
    }
    return out;
}

std::size_t label_spread(const TemporalBiClique& g, VertexRef v, Index i, Index j,
                         bool rank_at_v) {
    const Index deg = v.side == Side::A ? g.side_b() : g.side_a();
    if (i < 1 || i > j || j > deg) throw PreconditionError("rank window out of range");

    std::size_t count = 0;
    for (Index w = 0; w < deg; ++w) {
        const EdgeRef e = v.side == Side::A ? EdgeRef{v.index, w} : EdgeRef{w, v.index};
        const VertexRef other{v.side == Side::A ? Side::B : Side::A, w};
        const Index rank = edge_index(g, rank_at_v ? v : other, e);
        if (i <= rank && rank <= j) ++count;
    }
    return count;
}

RevertedProfile reverted_profile(const TemporalBiClique& g, bool all_edges) {
    ExtremalMatching m = extremal_matching(g);
    if (!m.early_is_perfect || !m.late_is_perfect)
        throw PreconditionError("reverted_profile requires an extremally matched instance");
    const Index n = g.side_a();

    std::vector<EdgeRef> candidates;
    if (all_edges) {
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

    RevertedProfile p;
    p.min_size = static_cast<std::size_t>(-1);
    for (EdgeRef e : candidates) {
        const std::size_t size = reverted_set(g, e).size();
        p.entries.emplace_back(e, size);
        if (size < p.min_size) {
            p.min_size = size;
            p.argmin = e;
        }
    }
    return p;
}

}
