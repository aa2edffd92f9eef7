#include <doctest.h>

#include <algorithm>
#include <array>
#include <vector>

#include <tempspan/generators.hpp>
#include <tempspan/oracle.hpp>
#include <tempspan/reach.hpp>

using namespace tempspan;

namespace {

std::vector<Index> sorted(std::vector<Index> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("earliest and latest sweeps on a 2x2 instance") {
    TemporalBiClique g(2, 2, {1, 2, 3, 4});

    // Flat ids: a0=0 a1=1 b0=2 b1=3.
    std::array<Index, 1> a0{0};
    SweepResult fwd = earliest_arrivals(g, a0, 0);
    REQUIRE(fwd[2].has_value());
    CHECK(fwd[2]->when == 1);
    CHECK(fwd[3]->when == 2);
    CHECK(fwd[1]->when == 3);  // a0 -> b0 at 1, b0 -> a1 at 3
    CHECK(fwd[0]->when == 0);
    CHECK(!fwd[0]->via);
    CHECK(fwd[1]->via == EdgeRef{1, 0});

    std::array<Index, 1> b1{3};
    SweepResult bwd = latest_departures(g, b1, g.max_label());
    CHECK(bwd[0]->when == 2);
    CHECK(bwd[1]->when == 4);
    CHECK(bwd[2]->when == 3);  // b0 -> a1 at 3, a1 -> b1 at 4

    // A start bound cuts off all earlier edges.
    std::array<Index, 1> a1{1};
    SweepResult cut = earliest_arrivals(g, a1, 4);
    CHECK(!cut[0].has_value());
    CHECK(!cut[2].has_value());
    CHECK(cut[3]->when == 4);
}

TEST_CASE("sweeps close equal-label groups transitively") {
    // All four edges share one label: every vertex reaches every other
    // within the single time step.
    TemporalBiClique g(2, 2, {5, 5, 5, 5});
    std::array<Index, 1> a0{0};
    SweepResult fwd = earliest_arrivals(g, a0, 0);
    for (Index v = 0; v < 4; ++v) {
        REQUIRE(fwd[v].has_value());
        CHECK(fwd[v]->when == (v == 0 ? 0 : 5));
    }
}

TEST_CASE("engine agrees with the exhaustive walker") {
    TemporalBiClique g = random_biclique(4, 4, 3);
    TemporalBiClique tied = random_biclique_duplabels(4, 4, 5, 4);
    for (const TemporalBiClique* inst : {&g, &tied}) {
        ReachEngine engine(*inst);
        for (Index s = 0; s < inst->vertex_count(); ++s) {
            for (Label t : {Label{0}, Label{2}, Label{7}}) {
                std::array<Index, 1> seed{s};
                engine.run_earliest(seed, t);
                std::vector<Index> got = sorted(engine.reached_vertices());
                CHECK(got == reach_bruteforce(*inst, s, t));
            }
        }
    }

    TemporalClique c = random_clique(5, 11);
    ReachEngine engine(c);
    for (Index s = 0; s < 5; ++s) {
        std::array<Index, 1> seed{s};
        engine.run_earliest(seed, 0);
        CHECK(sorted(engine.reached_vertices()) == reach_bruteforce(c, s, Label{0}));
    }
}

TEST_CASE("in and out sets of a ring shift edge") {
    TemporalBiClique g = ringshift(4);
    EdgeRef e{0, 1};  // label 1

    ReachResult out = out_set(g, e);
    CHECK(out.members == std::vector<Index>{0, 2, 3, 5, 6, 7});
    CHECK(out.direction == ReachDirection::out);
    CHECK(out.tree.size() == out.members.size() - 1);

    ReachResult in = in_set(g, e);
    CHECK(in.members == std::vector<Index>{0, 1, 4, 5});
    CHECK(in.tree.size() == in.members.size() - 1);

    // Tree edges certify their sets: restricted to the out tree, both
    // anchor endpoints still reach every member departing at label(e).
    ReachEngine sub(g.vertex_count(), [&] {
        std::vector<std::pair<EdgeRef, Label>> edges;
        for (EdgeRef t : out.tree_edges()) edges.push_back({{g.flat_a(t.i), g.flat_b(t.j)}, g.label(t)});
        return edges;
    }());
    std::array<Index, 2> seeds{g.flat_a(e.i), g.flat_b(e.j)};
    sub.run_earliest(seeds, g.label(e));
    for (Index v : out.members) CHECK(sub.reached(v));
}

TEST_CASE("connector joins every in vertex to every out vertex") {
    TemporalBiClique g = make_injective(ringshift(4));
    EdgeRef e{0, 1};
    std::vector<EdgeRef> f = connector_set(g, e);
    ReachResult in = in_set(g, e);
    ReachResult out = out_set(g, e);
    CHECK(f.size() == in.members.size() + out.members.size() - 3);

    ReachEngine sub(g.vertex_count(), [&] {
        std::vector<std::pair<EdgeRef, Label>> edges;
        for (EdgeRef t : f) edges.push_back({{g.flat_a(t.i), g.flat_b(t.j)}, g.label(t)});
        return edges;
    }());
    for (Index v : in.members) {
        std::array<Index, 1> seed{v};
        sub.run_earliest(seed, 0);
        for (Index w : out.members) CHECK(sub.reached(w));
    }
}

TEST_CASE("bi-spanner verification finds the first failing pair") {
    TemporalBiClique g = ringshift(2);
    std::vector<EdgeRef> all{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    CHECK(verify_bispanner(g, Spanner::make(SpannerKind::bi_spanner, all, "t")).ok);

    // Dropping a1 -> b0 cannot be routed around in R_2.
    std::vector<EdgeRef> missing{{0, 0}, {0, 1}, {1, 1}};
    VerificationReport r = verify_bispanner(g, Spanner::make(SpannerKind::bi_spanner, missing, "t"));
    CHECK(!r.ok);
    CHECK(r.witness == std::pair<Index, Index>{1, 0});
}

TEST_CASE("full spanner verification on a clique") {
    TemporalClique c(3, {1, 2, 3});
    std::vector<EdgeRef> all{{0, 1}, {0, 2}, {1, 2}};
    VerificationReport full = verify_spanner(c, Spanner::make(SpannerKind::spanner, all, "t"));
    CHECK(full.ok);
    CHECK(full.pairs_checked == 6);

    // Without {0,2}: vertex 2 arrives at 1 no earlier than 3, but the edge
    // towards 0 departed at 1 already.
    std::vector<EdgeRef> missing{{0, 1}, {1, 2}};
    VerificationReport r = verify_spanner(c, Spanner::make(SpannerKind::spanner, missing, "t"));
    CHECK(!r.ok);
    CHECK(r.witness == std::pair<Index, Index>{2, 0});
}

TEST_CASE("full verification over a bi-clique uses cross edges only") {
    TemporalBiClique g = ringshift(2);
    std::vector<EdgeRef> all{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    CHECK(verify_spanner(g, Spanner::make(SpannerKind::spanner, all, "t")).ok);
    std::vector<EdgeRef> three{{0, 0}, {0, 1}, {1, 0}};
    CHECK(!verify_spanner(g, Spanner::make(SpannerKind::spanner, three, "t")).ok);
}

TEST_CASE("engine restricted to a spanner") {
    TemporalBiClique g = random_biclique(3, 3, 21);
    Spanner s = min_bispanner_bruteforce(g);
    ReachEngine eng(g, s);
    for (Index a = 0; a < 3; ++a) {
        std::array<Index, 1> seed{g.flat_a(a)};
        eng.run_earliest(seed, 0);
        for (Index b = 0; b < 3; ++b) CHECK(eng.reached(g.flat_b(b)));
    }
}
