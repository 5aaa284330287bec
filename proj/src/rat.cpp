#include "sigmoment/rat.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "sigmoment/error.hpp"

namespace sigmoment {

namespace {

using wide = __int128;

wide wide_abs(wide v) { return v < 0 ? -v : v; }

wide wide_gcd(wide a, wide b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(wide v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t out = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (first == last || ec != std::errc{} || ptr != last) {
        throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(whole) + "'");
    }
    return out;
}

}  // namespace

Rat::Rat(std::int64_t n, std::int64_t d) {
    if (d == 0) throw Error(ErrorCode::DomainViolation, "zero denominator");
    *this = from_wide(n, d);
}

Rat Rat::from_wide(wide n, wide d) {
    if (d == 0) throw Error(ErrorCode::DomainViolation, "division by zero");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    wide g = wide_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (!fits(n) || !fits(d)) throw Error(ErrorCode::Overflow, "rational result exceeds 64-bit range");
    Rat r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

std::int64_t Rat::floor() const noexcept {
    std::int64_t q = num_ / den_;
    if ((num_ % den_ != 0) && (num_ < 0)) --q;
    return q;
}

std::int64_t Rat::ceil() const noexcept {
    std::int64_t q = num_ / den_;
    if ((num_ % den_ != 0) && (num_ > 0)) ++q;
    return q;
}

Rat Rat::frac() const { return *this - Rat(floor()); }

std::string Rat::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text, text));
    std::int64_t n = parse_int(text.substr(0, slash), text);
    auto den_part = text.substr(slash + 1);
    if (!den_part.empty() && (den_part.front() == '-' || den_part.front() == '+')) {
        throw Error(ErrorCode::ParseError, "signed denominator in '" + std::string(text) + "'");
    }
    std::int64_t d = parse_int(den_part, text);
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rat(n, d);
}

Rat Rat::operator-() const { return from_wide(-static_cast<wide>(num_), den_); }

Rat& Rat::operator+=(const Rat& o) {
    if (den_ == o.den_) {
        *this = from_wide(static_cast<wide>(num_) + o.num_, den_);
    } else {
        *this = from_wide(static_cast<wide>(num_) * o.den_ + static_cast<wide>(o.num_) * den_,
                          static_cast<wide>(den_) * o.den_);
    }
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    if (den_ == o.den_) {
        *this = from_wide(static_cast<wide>(num_) - o.num_, den_);
    } else {
        *this = from_wide(static_cast<wide>(num_) * o.den_ - static_cast<wide>(o.num_) * den_,
                          static_cast<wide>(den_) * o.den_);
    }
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    *this = from_wide(static_cast<wide>(num_) * o.num_, static_cast<wide>(den_) * o.den_);
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.num_ == 0) throw Error(ErrorCode::DomainViolation, "division by zero");
    *this = from_wide(static_cast<wide>(num_) * o.den_, static_cast<wide>(den_) * o.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) noexcept {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    wide lhs = static_cast<wide>(a.num_) * b.den_;
    wide rhs = static_cast<wide>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat lcm(const Rat& a, const Rat& b) {
    if (a.sign() <= 0 || b.sign() <= 0) throw Error(ErrorCode::DomainViolation, "lcm of non-positive rational");
    // For reduced fractions: lcm(p1/q1, p2/q2) = lcm(p1, p2) / gcd(q1, q2).
    wide g_num = wide_gcd(a.num(), b.num());
    wide l_num = static_cast<wide>(a.num()) / g_num * b.num();
    wide g_den = wide_gcd(a.den(), b.den());
    if (!fits(l_num)) throw Error(ErrorCode::Overflow, "lcm exceeds 64-bit range");
    return Rat(static_cast<std::int64_t>(l_num), static_cast<std::int64_t>(g_den));
}

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPositivePeriod: return "NonPositivePeriod";
        case ErrorCode::NonPositiveExec: return "NonPositiveExec";
        case ErrorCode::ExecNotLessThanPeriod: return "ExecNotLessThanPeriod";
        case ErrorCode::NegativeOffset: return "NegativeOffset";
        case ErrorCode::DuplicateName: return "DuplicateName";
        case ErrorCode::EmptyTaskSet: return "EmptyTaskSet";
        case ErrorCode::InvalidPriority: return "InvalidPriority";
        case ErrorCode::WindowExhausted: return "WindowExhausted";
        case ErrorCode::ReleaseSkipped: return "ReleaseSkipped";
        case ErrorCode::IntervalOutsideTrace: return "IntervalOutsideTrace";
        case ErrorCode::DomainViolation: return "DomainViolation";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

}  // namespace sigmoment
