#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <variant>

#include <tempspan/generators.hpp>
#include <tempspan/io.hpp>

using namespace tempspan;

namespace {

TemporalGraphFile parse(const std::string& text) {
    std::istringstream in(text);
    return read_tg(in);
}

}  // namespace

TEST_CASE("bi-clique files round-trip bit for bit") {
    TemporalBiClique g = random_biclique(3, 4, 5);
    std::ostringstream out;
    write_tg(out, g);
    TemporalGraphFile back = parse(out.str());
    REQUIRE(std::holds_alternative<TemporalBiClique>(back));
    CHECK(std::get<TemporalBiClique>(back) == g);

    std::ostringstream again;
    write_tg(again, std::get<TemporalBiClique>(back));
    CHECK(again.str() == out.str());
}

TEST_CASE("clique files round-trip") {
    TemporalClique c = random_clique(5, 6);
    std::ostringstream out;
    write_tg(out, c);
    TemporalGraphFile back = parse(out.str());
    REQUIRE(std::holds_alternative<TemporalClique>(back));
    CHECK(std::get<TemporalClique>(back) == c);
}

TEST_CASE("exact file layout") {
    TemporalBiClique g = ringshift(2);
    std::ostringstream out;
    write_tg(out, g);
    CHECK(out.str() == "tg 1\nbiclique 2 2\n0 0 0\n0 1 1\n1 0 1\n1 1 0\n");

    Spanner s = Spanner::make(SpannerKind::bi_spanner, {{1, 0}, {0, 0}}, "t");
    std::ostringstream sp;
    write_sp(sp, s);
    CHECK(sp.str() == "sp 1 bi 2\n0 0\n1 0\n");
}

TEST_CASE("spanner files round-trip and keep their kind") {
    Spanner bi = Spanner::make(SpannerKind::bi_spanner, {{0, 1}, {2, 0}}, "t");
    std::ostringstream out;
    write_sp(out, bi);
    std::istringstream in(out.str());
    Spanner back = read_sp(in);
    CHECK(back.kind == SpannerKind::bi_spanner);
    CHECK(back.edges == bi.edges);

    Spanner full = Spanner::make(SpannerKind::spanner, {{0, 1}}, "t");
    std::ostringstream out2;
    write_sp(out2, full);
    std::istringstream in2(out2.str());
    CHECK(read_sp(in2).kind == SpannerKind::spanner);
}

TEST_CASE("malformed instance files are rejected with line context") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("tg 2\nbiclique 1 1\n0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("tg 1\ntriangle 3\n"), ParseError);
    CHECK_THROWS_AS(parse("tg 1\nbiclique 1\n0 0 1\n"), ParseError);
    // Edges must appear in exact lexicographic order.
    CHECK_THROWS_AS(parse("tg 1\nbiclique 1 2\n0 1 1\n0 0 2\n"), ParseError);
    // Missing and trailing edges.
    CHECK_THROWS_AS(parse("tg 1\nbiclique 1 2\n0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("tg 1\nbiclique 1 1\n0 0 1\n0 1 2\n"), ParseError);
    // Strict single-space fields: no tabs, no double spaces, no blanks.
    CHECK_THROWS_AS(parse("tg 1\nbiclique 1 1\n0\t0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("tg 1\nbiclique 1 1\n0  0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("tg 1\nbiclique 1 1\n\n0 0 1\n"), ParseError);
    // Numbers are canonical decimal.
    CHECK_THROWS_AS(parse("tg 1\nbiclique 01 1\n0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("tg 1\nbiclique 1 1\n0 0 99999999999999999999999\n"), ParseError);
    CHECK_THROWS_AS(parse("tg 1\nbiclique 1 1\n0 0 -1\n"), ParseError);
    // Oversized headers bail out before allocating.
    CHECK_THROWS_AS(parse("tg 1\nbiclique 9999999 9999999\n"), ParseError);
    CHECK_THROWS_AS(parse("tg 1\nclique 9999999\n"), ParseError);

    try {
        parse("tg 1\nbiclique 1 2\n0 0 1\n0 1 2\ntrailing\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 5") != std::string::npos);
    }
}

TEST_CASE("malformed spanner files are rejected") {
    auto parse_sp = [](const std::string& text) {
        std::istringstream in(text);
        return read_sp(in);
    };
    CHECK_THROWS_AS(parse_sp("sp 1 tri 1\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_sp("sp 1 bi 2\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_sp("sp 1 bi 1\n0 0\n1 0\n"), ParseError);
    // Duplicates and disorder.
    CHECK_THROWS_AS(parse_sp("sp 1 bi 2\n0 0\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_sp("sp 1 bi 2\n1 0\n0 0\n"), ParseError);

    std::istringstream empty_ok("sp 1 bi 0\n");
    CHECK(read_sp(empty_ok).size() == 0);
}

TEST_CASE("file wrappers surface io failures") {
    CHECK_THROWS_AS(read_tg_file("/nonexistent/tempspan/in.tg"), IoError);
    CHECK_THROWS_AS(read_sp_file("/nonexistent/tempspan/in.sp"), IoError);
    CHECK_THROWS_AS(write_tg_file("/nonexistent/tempspan/out.tg", ringshift(2)), IoError);
    CHECK_THROWS_AS(
        write_sp_file("/nonexistent/tempspan/out.sp",
                      Spanner::make(SpannerKind::bi_spanner, {{0, 0}}, "t")),
        IoError);

    std::filesystem::path dir = std::filesystem::temp_directory_path() / "tempspan_io_test";
    std::filesystem::create_directories(dir);
    std::string path = (dir / "roundtrip.tg").string();
    write_tg_file(path, ringshift(3));
    TemporalGraphFile back = read_tg_file(path);
    CHECK(std::get<TemporalBiClique>(back) == ringshift(3));
    std::filesystem::remove_all(dir);
}
