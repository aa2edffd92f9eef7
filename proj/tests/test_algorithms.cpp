#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include <tempspan/algorithms.hpp>
#include <tempspan/generators.hpp>
#include <tempspan/oracle.hpp>
#include <tempspan/reach.hpp>

using namespace tempspan;

TEST_CASE("halving construction on ring shifts") {
    AlgoReport r4 = bispanner_nlogn(make_injective(ringshift(4)));
    CHECK(r4.size == 12);
    CHECK(r4.bound_claimed == 24);  // 2n ceil(log2 n) + 2n
    CHECK(verify_bispanner(ringshift(4), r4.spanner).ok);

    AlgoReport r8 = bispanner_nlogn(make_injective(ringshift(8)));
    CHECK(r8.size == 32);
    CHECK(r8.bound_claimed == 64);
    CHECK(r8.recursion_depth == 3);
    CHECK(verify_bispanner(ringshift(8), r8.spanner).ok);
}

TEST_CASE("halving construction keeps everything on one A-vertex") {
    TemporalBiClique g(1, 3, {5, 1, 3});
    AlgoReport r = bispanner_nlogn(g);
    CHECK(r.size == 3);
    CHECK(!r.bound_claimed);  // the squared bound only applies to squares
    CHECK(r.recursion_depth == 0);
}

TEST_CASE("pivot edge of the pinned 2x2 instance") {
    TemporalBiClique g(2, 2, {2, 3, 1, 4});
    PivotConfig cfg;
    cfg.c = Rational(3, 4);  // threshold 2cn = 3
    std::optional<PivotEdge> p = find_pivot_edge(g, cfg);
    REQUIRE(p.has_value());
    CHECK(p->edge == EdgeRef{0, 0});
    CHECK(p->pivot_set.size() == 3);

    cfg.c = Rational(1, 1);  // threshold 4: nothing qualifies
    CHECK(!find_pivot_edge(g, cfg).has_value());

    TemporalBiClique rect(2, 3, {1, 2, 3, 4, 5, 6});
    CHECK_THROWS_AS(find_pivot_edge(rect, cfg), PreconditionError);
    cfg.c = Rational(0, 1);
    CHECK_THROWS_AS(find_pivot_edge(g, cfg), PreconditionError);
}

TEST_CASE("ring shifts have no pivot edge above the floor") {
    TemporalBiClique g = make_injective(ringshift(4));
    PivotConfig cfg;
    cfg.c = Rational(1, 2);  // threshold 4 > 2
    CHECK(!find_pivot_edge(g, cfg).has_value());
    cfg.c = Rational(1, 4);  // threshold 2: every edge qualifies
    std::optional<PivotEdge> p = find_pivot_edge(g, cfg);
    REQUIRE(p.has_value());
    CHECK(p->pivot_set.size() == 2);
}

TEST_CASE("pivot recursion with the failing fallback") {
    PivotConfig cfg;
    cfg.fallback = PivotFallback::fail;
    cfg.c = Rational(1, 2);
    TemporalBiClique g = make_injective(ringshift(4));
    CHECK_THROWS_AS(bispanner_pivot(g, cfg), NoPivotEdgeError);
    try {
        bispanner_pivot(g, cfg);
    } catch (const NoPivotEdgeError& e) {
        // The carried instance is the undismountable core, here all of R_4.
        CHECK(e.instance.side_a() == 4);
        CHECK(e.instance.side_b() == 4);
    }

    cfg.c = Rational(1, 4);
    AlgoReport r = bispanner_pivot(g, cfg);
    CHECK(r.fallback_invocations == 0);
    CHECK(r.size <= 32 * 4);
    CHECK(r.bound_claimed == 4 * 8 * 4);  // floor((4/c)(|A|+|B|))
    CHECK(verify_bispanner(ringshift(4), r.spanner).ok);
}

TEST_CASE("pivot recursion with rescue fallbacks") {
    TemporalBiClique g = make_injective(ringshift(8));
    PivotConfig cfg;
    cfg.c = Rational(1, 2);  // no pivot edges exist: every call falls back
    cfg.fallback = PivotFallback::nlogn;
    AlgoReport by_nlogn = bispanner_pivot(g, cfg);
    CHECK(by_nlogn.fallback_invocations > 0);
    CHECK(!by_nlogn.bound_claimed);
    CHECK(verify_bispanner(ringshift(8), by_nlogn.spanner).ok);

    cfg.fallback = PivotFallback::reverted_best;
    AlgoReport by_reverted = bispanner_pivot(g, cfg);
    CHECK(by_reverted.fallback_invocations > 0);
    CHECK(verify_bispanner(ringshift(8), by_reverted.spanner).ok);
}

TEST_CASE("reverted pairs of ring shifts are everything") {
    TemporalBiClique g = ringshift(4);
    // Matching anchors: early edge (0,0) and late edge (2,1).
    CHECK(reverted_set(g, {0, 0}).empty());
    CHECK(reverted_set(g, {2, 1}).empty());

    AlgoReport r = bispanner_reverted(g, {0, 0});
    CHECK(r.size == 12);
    CHECK(r.bound_claimed == 12);  // 4n - 4 + |M(e)|
    CHECK(verify_bispanner(g, r.spanner).ok);
    // Row, column and both matchings, nothing else.
    for (EdgeRef e : r.spanner.edges) {
        bool expected = e.i == 0 || e.j == 0 || e.j == e.i || e.j == (e.i + 3) % 4;
        CHECK(expected);
    }
}

TEST_CASE("reverted anchor selection scans the matchings") {
    for (Index n : {2, 3, 4, 8}) {
        AlgoReport r = bispanner_reverted_best(ringshift(n));
        CHECK(r.size == 4 * static_cast<std::size_t>(n) - 4);
        CHECK(verify_bispanner(ringshift(n), r.spanner).ok);
        CHECK(r.spanner.method == "reverted_best");
    }

    // Non-matching anchors can only be better with the full scan.
    TemporalBiClique s = smsmbg(3, 3).graph;
    AlgoReport some = bispanner_reverted_best(s);
    AlgoReport all = bispanner_reverted_best(s, true);
    CHECK(all.size <= some.size);
}

TEST_CASE("reverted construction requires the extremal structure") {
    TemporalBiClique asc(2, 2, {1, 2, 3, 4});
    CHECK_THROWS_AS(bispanner_reverted(asc, {0, 0}), PreconditionError);
    CHECK_THROWS_AS(bispanner_reverted_best(asc), PreconditionError);

    // The reducing wrapper dismounts first and lifts back.
    AlgoReport r = bispanner_reverted_reduced(asc);
    CHECK(r.size == 3);
    CHECK(verify_bispanner(asc, r.spanner).ok);
    CHECK(r.spanner.method == "reverted_best");
    REQUIRE(r.bound_claimed.has_value());
    CHECK(r.size <= *r.bound_claimed);
}

TEST_CASE("product spanner from factor spanners") {
    ProductResult prod = smsmbg(2, 2);
    TemporalBiClique r2 = ringshift(2);
    Spanner s2 = bispanner_reverted_best(r2).spanner;
    AlgoReport r = product_bispanner(r2, r2, s2, s2);
    CHECK(r.size <= 16);  // |s_g| |A_h| + |s_h| |B_g| = 4*2 + 4*2
    CHECK(r.bound_claimed == 16);
    CHECK(verify_bispanner(prod.graph, r.spanner).ok);

    Spanner junk = Spanner::make(SpannerKind::bi_spanner, {{0, 0}}, "t");
    CHECK_THROWS_AS(product_bispanner(r2, r2, junk, s2), PreconditionError);
    CHECK_THROWS_AS(product_bispanner(r2, r2, s2, junk), PreconditionError);
}

TEST_CASE("portfolio keeps the smallest construction") {
    AlgoReport r = bispanner_portfolio(ringshift(4));
    CHECK(r.size == 12);
    CHECK(r.spanner.method == "portfolio/reverted_best");

    for (std::uint64_t seed : {3, 4}) {
        TemporalBiClique g = random_biclique(5, 5, seed);
        AlgoReport best = bispanner_portfolio(g);
        CHECK(best.size <= bispanner_nlogn(g).size);
        CHECK(best.size <= bispanner_reverted_reduced(g).size);
        CHECK(verify_bispanner(g, best.spanner).ok);
    }
}

TEST_CASE("clique spanners through the duplicated image") {
    TemporalClique tri(3, {1, 2, 3});
    AlgoReport r = clique_spanner(tri);
    CHECK(r.size == 3);
    CHECK(verify_spanner(tri, r.spanner).ok);
    CHECK(r.spanner.method.substr(0, 7) == "clique/");

    TemporalClique one(1, {});
    AlgoReport empty = clique_spanner(one);
    CHECK(empty.size == 0);
    CHECK(empty.bound_claimed == 0);

    // Duplicate labels: pipeline relabels internally, result is checked
    // against the labels as given.
    TemporalClique dup = random_clique_duplabels(6, 13, 4);
    AlgoReport rd = clique_spanner(dup);
    CHECK(verify_spanner(dup, rd.spanner).ok);
    REQUIRE(rd.bound_claimed.has_value());
    CHECK(rd.size <= *rd.bound_claimed);
}

TEST_CASE("every construction stays above the exact minimum") {
    TemporalBiClique g = random_biclique(4, 4, 17);
    const std::size_t floor = min_bispanner_bruteforce(g).size();
    CHECK(bispanner_nlogn(g).size >= floor);
    CHECK(bispanner_pivot(g).size >= floor);
    CHECK(bispanner_reverted_reduced(g).size >= floor);
    CHECK(bispanner_portfolio(g).size >= floor);
}
