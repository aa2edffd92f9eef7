#include "tempspan/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace tempspan {

namespace {

// Reads one line and splits it on single spaces; rejects tabs, CR, leading,
// trailing or doubled spaces so the accepted shape matches the writers.
bool next_fields(std::istream& in, std::vector<std::string>& fields, std::size_t line_no) {
    std::string line;
    if (!std::getline(in, line)) return false;
    fields.clear();
    std::string cur;
    for (char ch : line) {
        if (ch == ' ') {
            if (cur.empty())
                throw ParseError("line " + std::to_string(line_no) + ": malformed spacing");
            fields.push_back(std::move(cur));
            cur.clear();
        } else if (ch == '\t' || ch == '\r') {
            throw ParseError("line " + std::to_string(line_no) + ": unexpected whitespace");
        } else {
            cur += ch;
        }
    }
    if (cur.empty())
        throw ParseError("line " + std::to_string(line_no) + ": malformed spacing");
    fields.push_back(std::move(cur));
    return true;
}

std::uint64_t parse_u64(const std::string& text, std::size_t line_no, std::uint64_t max) {
    if (text.empty() || text.size() > 20)
        throw ParseError("line " + std::to_string(line_no) + ": bad number '" + text + "'");
    if (text.size() > 1 && text[0] == '0')
        throw ParseError("line " + std::to_string(line_no) + ": leading zero in '" + text + "'");
    std::uint64_t value = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9')
            throw ParseError("line " + std::to_string(line_no) + ": bad number '" + text + "'");
        const std::uint64_t digit = static_cast<std::uint64_t>(ch - '0');
        if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
            throw ParseError("line " + std::to_string(line_no) + ": number out of range");
        value = value * 10 + digit;
    }
    if (value > max) throw ParseError("line " + std::to_string(line_no) + ": number out of range");
    return value;
}

Index parse_index(const std::string& text, std::size_t line_no, Index bound) {
    return static_cast<Index>(parse_u64(text, line_no, static_cast<std::uint64_t>(bound) - 1));
}

void expect_end(std::istream& in, std::size_t line_no) {
    std::string line;
    if (std::getline(in, line))
        throw ParseError("line " + std::to_string(line_no) + ": trailing content");
}

constexpr Index max_side = 1 << 20;
constexpr std::uint64_t max_edges = 1u << 24;

}  // namespace

TemporalGraphFile read_tg(std::istream& in) {
    std::vector<std::string> fields;
    std::size_t line_no = 1;
    if (!next_fields(in, fields, line_no) || fields.size() != 2 || fields[0] != "tg" ||
        fields[1] != "1")
        throw ParseError("line 1: expected header 'tg 1'");

    ++line_no;
    if (!next_fields(in, fields, line_no)) throw ParseError("line 2: missing shape line");

    if (fields.size() == 3 && fields[0] == "biclique") {
        const Index n_a = static_cast<Index>(parse_u64(fields[1], line_no, max_side));
        const Index n_b = static_cast<Index>(parse_u64(fields[2], line_no, max_side));
        if (n_a < 1 || n_b < 1) throw ParseError("line 2: sides must be positive");
        if (static_cast<std::uint64_t>(n_a) * static_cast<std::uint64_t>(n_b) > max_edges)
            throw ParseError("line 2: instance too large");
        std::vector<Label> labels(static_cast<std::size_t>(n_a) * static_cast<std::size_t>(n_b));
        for (Index a = 0; a < n_a; ++a) {
            for (Index b = 0; b < n_b; ++b) {
                ++line_no;
                if (!next_fields(in, fields, line_no) || fields.size() != 3)
                    throw ParseError("line " + std::to_string(line_no) + ": expected '<i> <j> <label>'");
                if (parse_index(fields[0], line_no, n_a) != a ||
                    parse_index(fields[1], line_no, n_b) != b)
                    throw ParseError("line " + std::to_string(line_no) + ": edges out of order");
                labels[static_cast<std::size_t>(a) * n_b + b] =
                    parse_u64(fields[2], line_no, std::numeric_limits<Label>::max());
            }
        }
        expect_end(in, line_no + 1);
        return TemporalBiClique(n_a, n_b, std::move(labels));
    }

    if (fields.size() == 2 && fields[0] == "clique") {
        const Index n = static_cast<Index>(parse_u64(fields[1], line_no, max_side));
        if (n < 1) throw ParseError("line 2: vertex count must be positive");
        if (static_cast<std::uint64_t>(n) * (static_cast<std::uint64_t>(n) - 1) / 2 > max_edges)
            throw ParseError("line 2: instance too large");
        std::vector<Label> labels;
        labels.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        for (Index i = 0; i < n; ++i) {
            for (Index j = i + 1; j < n; ++j) {
                ++line_no;
                if (!next_fields(in, fields, line_no) || fields.size() != 3)
                    throw ParseError("line " + std::to_string(line_no) + ": expected '<i> <j> <label>'");
                if (parse_index(fields[0], line_no, n) != i ||
                    parse_index(fields[1], line_no, n) != j)
                    throw ParseError("line " + std::to_string(line_no) + ": edges out of order");
                labels.push_back(parse_u64(fields[2], line_no, std::numeric_limits<Label>::max()));
            }
        }
        expect_end(in, line_no + 1);
        return TemporalClique(n, std::move(labels));
    }

    throw ParseError("line 2: expected 'biclique <nA> <nB>' or 'clique <n>'");
}

TemporalGraphFile read_tg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return read_tg(in);
}

void write_tg(std::ostream& out, const TemporalBiClique& g) {
    out << "tg 1\n";
    out << "biclique " << g.side_a() << ' ' << g.side_b() << '\n';
    for (Index a = 0; a < g.side_a(); ++a)
        for (Index b = 0; b < g.side_b(); ++b)
            out << a << ' ' << b << ' ' << g.label(a, b) << '\n';
}

void write_tg(std::ostream& out, const TemporalClique& g) {
    out << "tg 1\n";
    out << "clique " << g.vertex_count() << '\n';
    for (Index i = 0; i < g.vertex_count(); ++i)
        for (Index j = i + 1; j < g.vertex_count(); ++j)
            out << i << ' ' << j << ' ' << g.label(i, j) << '\n';
}

void write_tg(std::ostream& out, const TemporalGraphFile& g) {
    std::visit([&out](const auto& graph) { write_tg(out, graph); }, g);
}

void write_tg_file(const std::string& path, const TemporalGraphFile& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_tg(out, g);
    out.flush();
    if (!out) throw IoError("failed writing '" + path + "'");
}

Spanner read_sp(std::istream& in) {
    std::vector<std::string> fields;
    std::size_t line_no = 1;
    if (!next_fields(in, fields, line_no) || fields.size() != 4 || fields[0] != "sp" ||
        fields[1] != "1" || (fields[2] != "bi" && fields[2] != "full"))
        throw ParseError("line 1: expected header 'sp 1 <bi|full> <count>'");
    const SpannerKind kind = fields[2] == "bi" ? SpannerKind::bi_spanner : SpannerKind::spanner;
    const std::uint64_t count = parse_u64(fields[3], line_no, max_edges);

    std::vector<EdgeRef> edges;
    edges.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        ++line_no;
        if (!next_fields(in, fields, line_no) || fields.size() != 2)
            throw ParseError("line " + std::to_string(line_no) + ": expected '<i> <j>'");
        EdgeRef e{static_cast<Index>(parse_u64(fields[0], line_no, max_side)),
                  static_cast<Index>(parse_u64(fields[1], line_no, max_side))};
        if (!edges.empty() && !(edges.back() < e))
            throw ParseError("line " + std::to_string(line_no) + ": edges out of order");
        edges.push_back(e);
    }
    expect_end(in, line_no + 1);

    Spanner s = Spanner::make(kind, std::move(edges), "file");
    if (s.size() != count) throw ParseError("duplicate edges in spanner file");
    return s;
}

Spanner read_sp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return read_sp(in);
}

void write_sp(std::ostream& out, const Spanner& s) {
    out << "sp 1 " << (s.kind == SpannerKind::bi_spanner ? "bi" : "full") << ' ' << s.size()
        << '\n';
    for (EdgeRef e : s.edges) out << e.i << ' ' << e.j << '\n';
}

void write_sp_file(const std::string& path, const Spanner& s) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_sp(out, s);
    out.flush();
    if (!out) throw IoError("failed writing '" + path + "'");
}

}
