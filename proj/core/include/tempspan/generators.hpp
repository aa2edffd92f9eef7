#ifndef TEMPSPAN_GENERATORS_HPP
#define TEMPSPAN_GENERATORS_HPP

#include <cstdint>

#include "tempspan/graph.hpp"
#include "tempspan/types.hpp"

namespace tempspan {

/// SplitMix64: tiny, portable, splittable generator. All randomized
/// generators in this library derive every draw from it so that a seed pins
/// the instance bit-for-bit on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, bound) by modulo; bound must be positive.
    /// The modulo bias is irrelevant here and keeping the draw to one next()
    /// call keeps instances reproducible.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

/// Ring-shift instance R_n: an n x n bi-clique with label(a_i, b_j) =
/// (j - i) mod n. Every label class is a perfect matching; the 0-labels are
/// the early matching and the (n-1)-labels the late matching, so R_n is
/// extremally matched. Labels repeat across vertices but are distinct at
/// each single vertex.
TemporalBiClique ringshift(Index n);

/// Label-product of two bi-cliques: vertices are pairs (g-vertex, h-vertex)
/// per side, and the pair edge carries
///     Lambda = lambda_g * h_scale + lambda_h,   h_scale = 1 + max lambda_h,
/// i.e. labels compare lexicographically by (g-label, h-label). If that
/// embedding would overflow, labels are first compressed to sorted ranks.
/// Flattened product indices: A-side (g_a, h_a) -> g_a * h.side_a() + h_a,
/// B-side likewise; bag_of_* projects back onto the g factor.
struct ProductResult {
    TemporalBiClique graph;
    Index n_ah = 0;       // h.side_a()
    Index n_bh = 0;       // h.side_b()
    Label h_scale = 1;

    Index bag_of_a(Index a) const { return a / n_ah; }
    Index bag_of_b(Index b) const { return b / n_bh; }
    Index h_of_a(Index a) const { return a % n_ah; }
    Index h_of_b(Index b) const { return b % n_bh; }
    EdgeRef bag_of_edge(EdgeRef e) const { return {bag_of_a(e.i), bag_of_b(e.j)}; }
    Index flat_a(Index g_a, Index h_a) const { return g_a * n_ah + h_a; }
    Index flat_b(Index g_b, Index h_b) const { return g_b * n_bh + h_b; }
};

ProductResult product(const TemporalBiClique& g, const TemporalBiClique& h);

/// The product of two ring-shift instances, R_m x R_k: an extremally matched
/// mk x mk bi-clique whose pivot sets stay small (at most 2k) while every
/// anchor keeps a large non-reverted set. Construction is asserted to be
/// extremally matched.
ProductResult smsmbg(Index m, Index k);

/// Random instances: labels are a seeded uniform permutation of
/// [1, edge count] laid out in lexicographic edge order, so they are
/// globally injective. Permutation = Fisher-Yates from SplitMix64(seed),
/// swapping positions i = E-1 .. 1 with j = below(i + 1).
TemporalBiClique random_biclique(Index n_a, Index n_b, std::uint64_t seed);
TemporalClique random_clique(Index n, std::uint64_t seed);

/// Variants with independent uniform labels in [0, max_label]; duplicates
/// are likely by design.
TemporalBiClique random_biclique_duplabels(Index n_a, Index n_b, std::uint64_t seed, Label max_label);
TemporalClique random_clique_duplabels(Index n, std::uint64_t seed, Label max_label);

}

#endif
