#include "tempspan/types.hpp"

#include <algorithm>
#include <numeric>

namespace tempspan {

Spanner Spanner::make(SpannerKind kind, std::vector<EdgeRef> edges, std::string method) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Spanner{kind, std::move(edges), std::move(method)};
}

bool Spanner::contains(EdgeRef e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num < 0) throw PreconditionError("rational thresholds must be non-negative");
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational");
    auto digits_only = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto to_int = [](const std::string& s) {
        if (s.size() > 18) throw ParseError("rational component too large: " + s);
        std::int64_t v = 0;
        for (char c : s) v = v * 10 + (c - '0');
        return v;
    };
    if (auto slash = text.find('/'); slash != std::string::npos) {
        std::string p = text.substr(0, slash), q = text.substr(slash + 1);
        if (!digits_only(p) || !digits_only(q)) throw ParseError("malformed rational: " + text);
        std::int64_t den = to_int(q);
        if (den == 0) throw ParseError("zero denominator: " + text);
        return Rational(to_int(p), den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string ip = text.substr(0, dot), fp = text.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!digits_only(ip) || !digits_only(fp) || fp.size() > 15)
            throw ParseError("malformed rational: " + text);
        std::int64_t den = 1;
        for (std::size_t k = 0; k < fp.size(); ++k) den *= 10;
        return Rational(to_int(ip) * den + (fp.empty() ? 0 : to_int(fp)), den);
    }
    if (!digits_only(text)) throw ParseError("malformed rational: " + text);
    return Rational(to_int(text), 1);
}

int Rational::compare_times(std::uint64_t value, std::uint64_t scale) const {
    using I = __int128;
    I lhs = static_cast<I>(value) * den;
    I rhs = static_cast<I>(num) * static_cast<I>(scale);
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

}
