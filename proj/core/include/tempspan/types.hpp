#ifndef TEMPSPAN_TYPES_HPP
#define TEMPSPAN_TYPES_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tempspan {

/// Time labels carried by edges. Labels are non-negative integers; they need
/// not be distinct unless an operation documents otherwise.
using Label = std::uint64_t;

/// Dense vertex index within one side (bi-cliques) or the whole vertex set
/// (cliques). Always 0-based.
using Index = std::int32_t;

enum class Side : std::uint8_t { A, B };

/// A vertex of a bi-clique, addressed by side and index within that side.
/// Cliques address vertices by bare Index instead.
struct VertexRef {
    Side side = Side::A;
    Index index = 0;

    friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

/// An undirected edge named by endpoint indices.
///  - bi-clique: i is the A-side index, j the B-side index
///  - clique:    i < j are plain vertex indices
struct EdgeRef {
    Index i = 0;
    Index j = 0;

    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

enum class SpannerKind : std::uint8_t { bi_spanner, spanner };

/// An edge subset claimed to preserve temporal reachability: either from every
/// A-vertex to every B-vertex (bi_spanner) or between all ordered vertex pairs
/// (spanner). Edges are kept sorted and duplicate-free.
struct Spanner {
    SpannerKind kind = SpannerKind::bi_spanner;
    std::vector<EdgeRef> edges;
    std::string method;

    static Spanner make(SpannerKind kind, std::vector<EdgeRef> edges, std::string method);

    bool contains(EdgeRef e) const;
    std::size_t size() const { return edges.size(); }

    friend bool operator==(const Spanner& x, const Spanner& y) {
        return x.kind == y.kind && x.edges == y.edges;
    }
};

/// Exact non-negative rational used for density thresholds. Kept normalized
/// with den > 0 so comparisons are integer-exact and reproducible.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    /// Parses "p/q", a decimal like "0.25", or a plain integer.
    static Rational parse(const std::string& text);

    /// Sign of value - (num/den) * scale, computed without overflow.
    int compare_times(std::uint64_t value, std::uint64_t scale) const;

    bool ge_times(std::uint64_t value, std::uint64_t scale) const {
        return compare_times(value, scale) >= 0;
    }

    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Malformed input file or malformed value in an external interface.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem-level failure (open/read/write).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A brute-force guard rejected an instance as too large.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal consistency failure: a constructed result failed its own
/// verification. Indicates a bug, never bad user input.
struct InternalCheckError : std::logic_error {
    using std::logic_error::logic_error;
};

}

#endif
