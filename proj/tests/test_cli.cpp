#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <variant>

#include <tempspan/generators.hpp>
#include <tempspan/io.hpp>
#include <tempspan/reach.hpp>

using namespace tempspan;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(TEMPSPAN_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[512];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "tempspan_cli_test") {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("generate writes canonical instance files") {
    TempDir dir;
    RunResult r = run_cli("generate ringshift 4 -o " + dir.file("r4.tg"));
    CHECK(r.exit_code == 0);
    TemporalGraphFile g = read_tg_file(dir.file("r4.tg"));
    CHECK(std::get<TemporalBiClique>(g) == ringshift(4));

    // Same seed, same bytes.
    CHECK(run_cli("generate random-biclique 6 6 --seed 3 -o " + dir.file("x.tg")).exit_code == 0);
    CHECK(run_cli("generate random-biclique 6 6 --seed 3 -o " + dir.file("y.tg")).exit_code == 0);
    std::ifstream x(dir.file("x.tg")), y(dir.file("y.tg"));
    std::string xs((std::istreambuf_iterator<char>(x)), std::istreambuf_iterator<char>());
    std::string ys((std::istreambuf_iterator<char>(y)), std::istreambuf_iterator<char>());
    CHECK(xs == ys);
    CHECK(!xs.empty());

    CHECK(run_cli("generate random-clique 5 --max-label 3 -o " + dir.file("k.tg")).exit_code == 0);
    CHECK(std::holds_alternative<TemporalClique>(read_tg_file(dir.file("k.tg"))));

    CHECK(run_cli("generate moebius 4 -o " + dir.file("m.tg")).exit_code == 2);
    CHECK(run_cli("generate ringshift -o " + dir.file("m.tg")).exit_code == 2);
}

TEST_CASE("spanner subcommand computes, writes and reports") {
    TempDir dir;
    run_cli("generate ringshift 4 -o " + dir.file("r4.tg"));

    RunResult r = run_cli("spanner " + dir.file("r4.tg") + " --algo reverted --report " +
                          dir.file("rep.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("size=12") != std::string::npos);
    Spanner s = read_sp_file(dir.file("r4.sp"));
    CHECK(s.size() == 12);
    CHECK(verify_bispanner(ringshift(4), s).ok);

    std::ifstream rep(dir.file("rep.json"));
    std::string json((std::istreambuf_iterator<char>(rep)), std::istreambuf_iterator<char>());
    CHECK(json.find("\"size\": 12") != std::string::npos);
    CHECK(json.find("\"verified\": true") != std::string::npos);

    // A pivot density no instance satisfies, surfaced as its own exit code.
    CHECK(run_cli("spanner " + dir.file("r4.tg") + " --algo pivot --c 0.5 --fallback fail")
              .exit_code == 5);
    // With a rescue fallback the same call succeeds.
    CHECK(run_cli("spanner " + dir.file("r4.tg") + " --algo pivot --c 0.5 --fallback nlogn")
              .exit_code == 0);

    CHECK(run_cli("spanner " + dir.file("r4.tg") + " --algo quantum").exit_code == 2);
    CHECK(run_cli("spanner " + dir.file("missing.tg")).exit_code == 3);
}

TEST_CASE("verify subcommand distinguishes pass from fail") {
    TempDir dir;
    run_cli("generate ringshift 2 -o " + dir.file("r2.tg"));
    run_cli("spanner " + dir.file("r2.tg") + " --algo bruteforce");
    CHECK(run_cli("verify " + dir.file("r2.tg") + " " + dir.file("r2.sp")).exit_code == 0);

    // R_2 needs all four edges; removing one must fail verification.
    write_sp_file(dir.file("bad.sp"),
                  Spanner::make(SpannerKind::bi_spanner, {{0, 0}, {0, 1}, {1, 1}}, "t"));
    RunResult bad = run_cli("verify " + dir.file("r2.tg") + " " + dir.file("bad.sp"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("witness") != std::string::npos);

    // Full-connectivity check of the same edge set.
    write_sp_file(dir.file("full.sp"),
                  Spanner::make(SpannerKind::spanner, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, "t"));
    CHECK(run_cli("verify " + dir.file("r2.tg") + " " + dir.file("full.sp")).exit_code == 0);
    CHECK(run_cli("verify --bi --full " + dir.file("r2.tg") + " " + dir.file("full.sp"))
              .exit_code == 2);
}

TEST_CASE("clique pipeline through the tool") {
    TempDir dir;
    run_cli("generate random-clique 6 --seed 2 -o " + dir.file("k6.tg"));
    RunResult r = run_cli("spanner " + dir.file("k6.tg"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("method=clique/") != std::string::npos);
    CHECK(run_cli("verify " + dir.file("k6.tg") + " " + dir.file("k6.sp")).exit_code == 0);
}

TEST_CASE("stats emits one row per edge plus a summary") {
    TempDir dir;
    run_cli("generate ringshift 4 -o " + dir.file("r4.tg"));
    RunResult r = run_cli("stats " + dir.file("r4.tg") + " --c 1/4 --reverted");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("edge_a,edge_b,label,pivot_set_size,is_c_steep,reverted_size") !=
          std::string::npos);
    CHECK(r.output.find("summary") != std::string::npos);
    std::size_t lines = 0;
    for (char ch : r.output)
        if (ch == '\n') ++lines;
    CHECK(lines == 18);  // header + 16 edges + summary

    CHECK(run_cli("stats " + dir.file("r4.tg") + " --csv " + dir.file("out.csv")).exit_code == 0);
    CHECK(fs::exists(dir.file("out.csv")));
}

TEST_CASE("bench emits a csv table") {
    TempDir dir;
    RunResult r = run_cli("bench --family ringshift --sizes 2,4 --algos nlogn --algos reverted");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("family,n,algo,size,bound_claimed,time_ms,verified,version") !=
          std::string::npos);
    CHECK(r.output.find("ringshift,2,nlogn,") != std::string::npos);
    CHECK(r.output.find("ringshift,4,reverted,12,12,") != std::string::npos);

    CHECK(run_cli("bench --sizes 4..8 --family random --algos portfolio").exit_code == 0);
    CHECK(run_cli("bench --sizes 0 --family random").exit_code == 2);
    CHECK(run_cli("bench --sizes x --family random").exit_code == 2);
}

TEST_CASE("help and argument errors use distinct exits") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("explode").exit_code == 2);
}
