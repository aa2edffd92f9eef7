#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <tempspan/tempspan.hpp>

namespace ts = tempspan;
using nlohmann::json;

namespace {

// Exit codes shared by every subcommand.
constexpr int exit_ok = 0;
constexpr int exit_verify_fail = 1;
constexpr int exit_bad_input = 2;
constexpr int exit_io = 3;
constexpr int exit_internal = 4;
constexpr int exit_no_pivot = 5;

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw ts::IoError("cannot open '" + path + "' for writing");
    return file;
}

// ---- generate ----

struct GenerateOpts {
    std::string family;
    std::vector<std::int64_t> args;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> max_label;
    std::string output;
};

ts::Index sized_arg(const GenerateOpts& o, std::size_t at) {
    if (o.args.size() <= at || o.args[at] < 1 || o.args[at] > (1 << 20))
        throw ts::PreconditionError("family '" + o.family + "' needs positive size arguments");
    return static_cast<ts::Index>(o.args[at]);
}

void require_args(const GenerateOpts& o, std::size_t count) {
    if (o.args.size() != count)
        throw ts::PreconditionError("family '" + o.family + "' takes " + std::to_string(count) +
                                    " size argument(s)");
}

int run_generate(const GenerateOpts& o) {
    ts::TemporalGraphFile out = [&]() -> ts::TemporalGraphFile {
        if (o.family == "ringshift") {
            require_args(o, 1);
            return ts::ringshift(sized_arg(o, 0));
        }
        if (o.family == "smsmbg") {
            require_args(o, 2);
            return ts::smsmbg(sized_arg(o, 0), sized_arg(o, 1)).graph;
        }
        if (o.family == "random-biclique") {
            require_args(o, 2);
            if (o.max_label)
                return ts::random_biclique_duplabels(sized_arg(o, 0), sized_arg(o, 1), o.seed,
                                                     *o.max_label);
            return ts::random_biclique(sized_arg(o, 0), sized_arg(o, 1), o.seed);
        }
        if (o.family == "random-clique") {
            require_args(o, 1);
            if (o.max_label) return ts::random_clique_duplabels(sized_arg(o, 0), o.seed, *o.max_label);
            return ts::random_clique(sized_arg(o, 0), o.seed);
        }
        throw ts::PreconditionError("unknown family '" + o.family +
                                    "' (ringshift, smsmbg, random-biclique, random-clique)");
    }();

    if (o.output.empty()) {
        ts::write_tg(std::cout, out);
    } else {
        ts::write_tg_file(o.output, out);
    }
    return exit_ok;
}

// ---- spanner ----

struct SpannerOpts {
    std::string input;
    std::string output;
    std::string report_path;
    std::string algo = "portfolio";
    std::string c = "1/4";
    std::string fallback = "nlogn";
    bool no_verify = false;
    bool all_anchors = false;
};

ts::PivotConfig pivot_config(const SpannerOpts& o) {
    ts::PivotConfig cfg;
    cfg.c = ts::Rational::parse(o.c);
    if (o.fallback == "nlogn")
        cfg.fallback = ts::PivotFallback::nlogn;
    else if (o.fallback == "reverted")
        cfg.fallback = ts::PivotFallback::reverted_best;
    else if (o.fallback == "fail")
        cfg.fallback = ts::PivotFallback::fail;
    else
        throw ts::PreconditionError("unknown fallback '" + o.fallback + "' (nlogn, reverted, fail)");
    return cfg;
}

ts::AlgoReport run_bi_algo(const SpannerOpts& o, const ts::TemporalBiClique& work) {
    if (o.algo == "nlogn") return ts::bispanner_nlogn(work);
    if (o.algo == "pivot") return ts::bispanner_pivot(work, pivot_config(o));
    if (o.algo == "reverted") return ts::bispanner_reverted_reduced(work, o.all_anchors);
    if (o.algo == "portfolio") return ts::bispanner_portfolio(work);
    if (o.algo == "bruteforce") {
        ts::AlgoReport r;
        r.spanner = ts::min_bispanner_bruteforce(work);
        r.size = r.spanner.size();
        return r;
    }
    throw ts::PreconditionError("unknown algorithm '" + o.algo +
                                "' (nlogn, pivot, reverted, portfolio, bruteforce)");
}

int run_spanner(const SpannerOpts& o) {
    const ts::TemporalGraphFile in = ts::read_tg_file(o.input);
    const auto start = std::chrono::steady_clock::now();

    ts::AlgoReport report;
    bool verified = false;
    if (std::holds_alternative<ts::TemporalBiClique>(in)) {
        const ts::TemporalBiClique& raw = std::get<ts::TemporalBiClique>(in);
        if (o.algo == "bruteforce") {
            report.spanner = ts::min_bispanner_bruteforce(raw);
            report.size = report.spanner.size();
        } else {
            // Algorithms want distinct labels; break ties, then check the
            // result against the labels as given.
            const ts::TemporalBiClique work = raw.injective() ? raw : ts::make_injective(raw);
            report = run_bi_algo(o, work);
        }
        if (!o.no_verify) verified = ts::verify_bispanner(raw, report.spanner).ok;
    } else {
        const ts::TemporalClique& raw = std::get<ts::TemporalClique>(in);
        if (o.algo == "bruteforce") {
            report.spanner = ts::min_spanner_bruteforce(raw);
            report.size = report.spanner.size();
        } else if (o.algo == "portfolio") {
            report = ts::clique_spanner(raw);
        } else {
            const ts::TemporalClique inj = ts::make_injective(raw);
            const ts::CliqueAsBiclique image = ts::clique_to_biclique(inj);
            ts::AlgoReport sub = run_bi_algo(o, image.image);
            ts::Spanner collapsed = ts::bispanner_to_clique_spanner(image, sub.spanner, false);
            report.spanner = ts::Spanner::make(ts::SpannerKind::spanner, std::move(collapsed.edges),
                                               "clique/" + sub.spanner.method);
            report.size = report.spanner.size();
            report.recursion_depth = sub.recursion_depth;
            report.fallback_invocations = sub.fallback_invocations;
            report.bound_claimed = sub.size;
        }
        if (!o.no_verify) verified = ts::verify_spanner(raw, report.spanner).ok;
    }
    const double elapsed = ms_since(start);

    std::string out_path = o.output;
    if (out_path.empty())
        out_path = std::filesystem::path(o.input).replace_extension(".sp").string();
    ts::write_sp_file(out_path, report.spanner);

    json j{{"size", report.size},
           {"recursion_depth", report.recursion_depth},
           {"fallback_invocations", report.fallback_invocations},
           {"bound_claimed", nullptr},
           {"method", report.spanner.method},
           {"verified", verified},
           {"wall_time_ms", elapsed}};
    if (report.bound_claimed) j["bound_claimed"] = *report.bound_claimed;
    if (!o.report_path.empty()) {
        std::ofstream rf(o.report_path, std::ios::binary);
        if (!rf) throw ts::IoError("cannot open '" + o.report_path + "' for writing");
        rf << j.dump(2) << '\n';
    }
    std::cout << "method=" << report.spanner.method << " size=" << report.size << " bound="
              << (report.bound_claimed ? std::to_string(*report.bound_claimed) : "-")
              << " verified=" << (o.no_verify ? "skipped" : verified ? "yes" : "NO") << " out="
              << out_path << '\n';

    if (!o.no_verify && !verified) {
        std::cerr << "internal verification failed\n";
        return exit_internal;
    }
    return exit_ok;
}

// ---- verify ----

struct VerifyOpts {
    std::string input;
    std::string spanner;
    bool bi = false;
    bool full = false;
};

int run_verify(const VerifyOpts& o) {
    const ts::TemporalGraphFile in = ts::read_tg_file(o.input);
    const ts::Spanner sp = ts::read_sp_file(o.spanner);
    const bool check_bi = o.bi || (!o.full && sp.kind == ts::SpannerKind::bi_spanner);

    ts::VerificationReport report;
    if (check_bi) {
        if (!std::holds_alternative<ts::TemporalBiClique>(in))
            throw ts::PreconditionError("bi-spanner checks need a bi-clique instance");
        report = ts::verify_bispanner(std::get<ts::TemporalBiClique>(in), sp);
    } else if (std::holds_alternative<ts::TemporalClique>(in)) {
        report = ts::verify_spanner(std::get<ts::TemporalClique>(in), sp);
    } else {
        report = ts::verify_spanner(std::get<ts::TemporalBiClique>(in), sp);
    }

    if (report.ok) {
        std::cout << "ok (" << report.pairs_checked << " pairs)\n";
        return exit_ok;
    }
    std::cout << "fail: witness (" << report.witness->first << ", " << report.witness->second
              << ")\n";
    return exit_verify_fail;
}

// ---- stats ----

struct StatsOpts {
    std::string input;
    std::string csv;
    std::string c;
    bool reverted = false;
    bool all_anchors = false;
};

int run_stats(const StatsOpts& o) {
    const ts::TemporalGraphFile in = ts::read_tg_file(o.input);
    if (!std::holds_alternative<ts::TemporalBiClique>(in))
        throw ts::PreconditionError("stats needs a bi-clique instance");
    const ts::TemporalBiClique& raw = std::get<ts::TemporalBiClique>(in);
    const ts::TemporalBiClique work = raw.injective() ? raw : ts::make_injective(raw);

    const ts::PivotProfile profile = ts::pivot_profile(work);

    std::optional<std::set<ts::EdgeRef>> steep;
    if (!o.c.empty()) {
        const std::vector<ts::EdgeRef> list = ts::steep_edges(work, ts::Rational::parse(o.c));
        steep.emplace(list.begin(), list.end());
    }

    std::optional<std::vector<std::optional<std::size_t>>> reverted;
    std::size_t reverted_min = 0;
    if (o.reverted) {
        const ts::RevertedProfile rp = ts::reverted_profile(work, o.all_anchors);
        reverted.emplace(profile.sizes.size());
        for (const auto& [edge, size] : rp.entries)
            (*reverted)[static_cast<std::size_t>(edge.i) * raw.side_b() + edge.j] = size;
        reverted_min = rp.min_size;
    }

    std::ofstream file;
    std::ostream& out = open_or_stdout(file, o.csv);
    out << "edge_a,edge_b,label,pivot_set_size";
    if (steep) out << ",is_c_steep";
    if (reverted) out << ",reverted_size";
    out << '\n';
    for (ts::Index a = 0; a < raw.side_a(); ++a) {
        for (ts::Index b = 0; b < raw.side_b(); ++b) {
            out << a << ',' << b << ',' << raw.label(a, b) << ',' << profile.at({a, b});
            if (steep) out << ',' << (steep->count({a, b}) ? 1 : 0);
            if (reverted) {
                const auto& cell = (*reverted)[static_cast<std::size_t>(a) * raw.side_b() + b];
                out << ',';
                if (cell) out << *cell;
            }
            out << '\n';
        }
    }
    out << "summary,,," << profile.max_size;
    if (steep) out << ',' << steep->size();
    if (reverted) out << ',' << reverted_min;
    out << '\n';
    return exit_ok;
}

// ---- bench ----

struct BenchOpts {
    std::vector<std::string> families{"ringshift", "random"};
    std::string sizes = "4..64";
    std::vector<std::string> algos{"nlogn", "pivot", "reverted", "portfolio"};
    std::uint64_t seed = 1;
    std::string csv;
};

std::vector<ts::Index> parse_sizes(const std::string& text) {
    std::vector<ts::Index> out;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        const std::size_t dots = token.find("..");
        try {
            if (dots == std::string::npos) {
                out.push_back(static_cast<ts::Index>(std::stol(token)));
            } else {
                const long from = std::stol(token.substr(0, dots));
                const long to = std::stol(token.substr(dots + 2));
                for (long n = from; n <= to; n *= 2) out.push_back(static_cast<ts::Index>(n));
            }
        } catch (const std::exception&) {
            throw ts::PreconditionError("bad size token '" + token + "'");
        }
    }
    if (out.empty()) throw ts::PreconditionError("no sizes given");
    for (ts::Index n : out)
        if (n < 1 || n > (1 << 20)) throw ts::PreconditionError("size out of range");
    return out;
}

int run_bench(const BenchOpts& o) {
    const std::vector<ts::Index> sizes = parse_sizes(o.sizes);

    std::ofstream file;
    std::ostream& out = open_or_stdout(file, o.csv);
    out << "family,n,algo,size,bound_claimed,time_ms,verified,version\n";

    for (const std::string& family : o.families) {
        for (ts::Index n : sizes) {
            const ts::TemporalBiClique raw = [&]() -> ts::TemporalBiClique {
                if (family == "ringshift") return ts::ringshift(n);
                if (family == "smsmbg") return ts::smsmbg(n, n).graph;
                if (family == "random") return ts::random_biclique(n, n, o.seed);
                throw ts::PreconditionError("unknown family '" + family +
                                            "' (ringshift, smsmbg, random)");
            }();
            const ts::TemporalBiClique work = raw.injective() ? raw : ts::make_injective(raw);
            for (const std::string& algo : o.algos) {
                SpannerOpts sub;
                sub.algo = algo;
                const auto start = std::chrono::steady_clock::now();
                const ts::AlgoReport report = run_bi_algo(sub, work);
                const double elapsed = ms_since(start);
                const bool ok = ts::verify_bispanner(raw, report.spanner).ok;
                out << family << ',' << n << ',' << algo << ',' << report.size << ',';
                if (report.bound_claimed) out << *report.bound_claimed;
                out << ',' << elapsed << ',' << (ok ? 1 : 0) << ',' << ts::version << '\n';
            }
        }
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"temporal clique and bi-clique spanner toolkit"};
    app.require_subcommand(1);

    GenerateOpts gen;
    CLI::App* cmd_gen = app.add_subcommand("generate", "write an instance file");
    cmd_gen->add_option("family", gen.family,
                        "ringshift | smsmbg | random-biclique | random-clique")
        ->required();
    cmd_gen->add_option("args", gen.args, "size arguments of the family");
    cmd_gen->add_option("--seed", gen.seed, "seed for random families");
    cmd_gen->add_option("--max-label", gen.max_label,
                        "draw labels uniformly from [0, max] instead of a permutation");
    cmd_gen->add_option("-o,--output", gen.output, "output .tg path (default stdout)");

    SpannerOpts sp;
    CLI::App* cmd_sp = app.add_subcommand("spanner", "compute a spanner");
    cmd_sp->add_option("input", sp.input, "instance .tg file")->required();
    cmd_sp->add_option("--algo", sp.algo, "nlogn | pivot | reverted | portfolio | bruteforce");
    cmd_sp->add_option("--c", sp.c, "pivot threshold, e.g. 1/4 or 0.25");
    cmd_sp->add_option("--fallback", sp.fallback, "pivot fallback: nlogn | reverted | fail");
    cmd_sp->add_flag("--all-anchors", sp.all_anchors, "scan every anchor edge (reverted)");
    cmd_sp->add_flag("--no-verify", sp.no_verify, "skip verification (benchmarking only)");
    cmd_sp->add_option("-o,--output", sp.output, "output .sp path (default: input with .sp)");
    cmd_sp->add_option("--report", sp.report_path, "write a JSON run report here");

    VerifyOpts vf;
    CLI::App* cmd_vf = app.add_subcommand("verify", "check a spanner file against an instance");
    cmd_vf->add_option("input", vf.input, "instance .tg file")->required();
    cmd_vf->add_option("spanner", vf.spanner, "spanner .sp file")->required();
    CLI::Option* opt_bi = cmd_vf->add_flag("--bi", vf.bi, "check A-to-B reachability");
    cmd_vf->add_flag("--full", vf.full, "check all ordered pairs")->excludes(opt_bi);

    StatsOpts st;
    CLI::App* cmd_st = app.add_subcommand("stats", "per-edge structural measurements as CSV");
    cmd_st->add_option("input", st.input, "instance .tg file")->required();
    cmd_st->add_option("--c", st.c, "also flag c-steep edges (square instances)");
    cmd_st->add_flag("--reverted", st.reverted, "also profile |M(e)| on anchor candidates");
    cmd_st->add_flag("--all-anchors", st.all_anchors, "profile |M(e)| on every edge");
    cmd_st->add_option("--csv", st.csv, "output path (default stdout)");

    BenchOpts bn;
    CLI::App* cmd_bn = app.add_subcommand("bench", "timing and size table over families");
    cmd_bn->add_option("--family", bn.families, "ringshift | smsmbg | random (repeatable)");
    cmd_bn->add_option("--sizes", bn.sizes, "comma list; A..B doubles from A to B");
    cmd_bn->add_option("--algos", bn.algos, "algorithms to run (repeatable)");
    cmd_bn->add_option("--seed", bn.seed, "seed for the random family");
    cmd_bn->add_option("--csv", bn.csv, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_bad_input;
    }

    try {
        if (cmd_gen->parsed()) return run_generate(gen);
        if (cmd_sp->parsed()) return run_spanner(sp);
        if (cmd_vf->parsed()) return run_verify(vf);
        if (cmd_st->parsed()) return run_stats(st);
        return run_bench(bn);
    } catch (const ts::NoPivotEdgeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_no_pivot;
    } catch (const ts::InternalCheckError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_internal;
    } catch (const ts::IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return exit_io;
    } catch (const ts::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_bad_input;
    } catch (const ts::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_bad_input;
    } catch (const ts::GuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_bad_input;
    }
}
