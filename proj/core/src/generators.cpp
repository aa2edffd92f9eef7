#include "tempspan/generators.hpp"

#include <algorithm>
#include <limits>

namespace tempspan {

namespace {

std::vector<Label> ranks_of(const std::vector<Label>& labels) {
    std::vector<Label> sorted(labels);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Label> out(labels.size());
    for (std::size_t k = 0; k < labels.size(); ++k)
        out[k] = static_cast<Label>(std::lower_bound(sorted.begin(), sorted.end(), labels[k]) - sorted.begin());
    return out;
}

std::vector<Label> shuffled_permutation(std::size_t count, std::uint64_t seed) {
    std::vector<Label> labels(count);
    for (std::size_t k = 0; k < count; ++k) labels[k] = k + 1;
    SplitMix64 rng(seed);
    for (std::size_t i = count; i-- > 1;) {
        std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
        std::swap(labels[i], labels[j]);
    }
    return labels;
}

std::vector<Label> uniform_labels(std::size_t count, std::uint64_t seed, Label max_label) {
    std::vector<Label> labels(count);
    SplitMix64 rng(seed);
    for (std::size_t k = 0; k < count; ++k)
        labels[k] = max_label == std::numeric_limits<Label>::max() ? rng.next()
                                                                   : rng.below(max_label + 1);
    return labels;
}

}  // namespace

TemporalBiClique ringshift(Index n) {
    if (n < 1) throw PreconditionError("ring-shift instance needs n >= 1");
    std::vector<Label> labels(static_cast<std::size_t>(n) * n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            labels[static_cast<std::size_t>(i) * n + j] = static_cast<Label>((j - i + n) % n);
    return TemporalBiClique(n, n, std::move(labels));
}

ProductResult product(const TemporalBiClique& g, const TemporalBiClique& h) {
    std::vector<Label> lg(g.labels());
    std::vector<Label> lh(h.labels());
    const auto fits = [](Label gmax, Label hmax) {
        const Label scale = hmax + 1;
        return gmax <= (std::numeric_limits<Label>::max() - hmax) / scale;
    };
    Label gmax = *std::max_element(lg.begin(), lg.end());
    Label hmax = *std::max_element(lh.begin(), lh.end());
    if (!fits(gmax, hmax)) {
        lh = ranks_of(lh);
        hmax = *std::max_element(lh.begin(), lh.end());
    }
    if (!fits(gmax, hmax)) {
        lg = ranks_of(lg);
        gmax = *std::max_element(lg.begin(), lg.end());
    }
    if (!fits(gmax, hmax)) throw PreconditionError("product labels overflow even after rank compression");
    const Label h_scale = hmax + 1;

    const Index nag = g.side_a(), nbg = g.side_b(), nah = h.side_a(), nbh = h.side_b();
    const Index na = nag * nah, nb = nbg * nbh;
    std::vector<Label> labels(static_cast<std::size_t>(na) * nb);
    for (Index ag = 0; ag < nag; ++ag)
        for (Index ah = 0; ah < nah; ++ah)
            for (Index bg = 0; bg < nbg; ++bg)
                for (Index bh = 0; bh < nbh; ++bh) {
                    const Label composite =
                        lg[static_cast<std::size_t>(ag) * nbg + bg] * h_scale +
                        lh[static_cast<std::size_t>(ah) * nbh + bh];
                    labels[static_cast<std::size_t>(ag * nah + ah) * nb + (bg * nbh + bh)] = composite;
                }
    ProductResult out{TemporalBiClique(na, nb, std::move(labels)), nah, nbh, h_scale};
    return out;
}

ProductResult smsmbg(Index m, Index k) {
    ProductResult out = product(ringshift(m), ringshift(k));
    if (!extremally_matched(out.graph))
        throw InternalCheckError("ring-shift product lost the extremal matching");
    return out;
}

TemporalBiClique random_biclique(Index n_a, Index n_b, std::uint64_t seed) {
    if (n_a < 1 || n_b < 1) throw PreconditionError("bi-clique sides must be non-empty");
    return TemporalBiClique(n_a, n_b,
                            shuffled_permutation(static_cast<std::size_t>(n_a) * n_b, seed));
}

TemporalClique random_clique(Index n, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("clique needs n >= 1");
    return TemporalClique(n, shuffled_permutation(static_cast<std::size_t>(n) * (n - 1) / 2, seed));
}

TemporalBiClique random_biclique_duplabels(Index n_a, Index n_b, std::uint64_t seed, Label max_label) {
    if (n_a < 1 || n_b < 1) throw PreconditionError("bi-clique sides must be non-empty");
    return TemporalBiClique(n_a, n_b,
                            uniform_labels(static_cast<std::size_t>(n_a) * n_b, seed, max_label));
}

TemporalClique random_clique_duplabels(Index n, std::uint64_t seed, Label max_label) {
    if (n < 1) throw PreconditionError("clique needs n >= 1");
    return TemporalClique(n, uniform_labels(static_cast<std::size_t>(n) * (n - 1) / 2, seed, max_label));
}

}
