#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sigmoment {

/// Exact rational number with a 64-bit reduced numerator/denominator.
///
/// Intermediate products are formed in 128 bits; a result that does not fit
/// back into 64 bits after reduction raises Error{Overflow} instead of
/// silently wrapping. The denominator is always positive and
/// gcd(|num|, den) == 1, so equality is structural.
class Rat {
public:
    constexpr Rat() noexcept = default;
    constexpr Rat(std::int64_t n) noexcept : num_(n), den_(1) {}  // NOLINT(implicit)
    Rat(std::int64_t n, std::int64_t d);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

    /// Largest integer <= *this.
    std::int64_t floor() const noexcept;
    /// Smallest integer >= *this.
    std::int64_t ceil() const noexcept;
    /// x - floor(x), always in [0, 1).
    Rat frac() const;

    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    long double to_long_double() const noexcept {
        return static_cast<long double>(num_) / static_cast<long double>(den_);
    }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;
    /// Accepts "p", "p/q" and optional leading sign; q must be nonzero.
    static Rat parse(std::string_view text);

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) noexcept = default;
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) noexcept;

private:
    static Rat from_wide(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

/// lcm of two positive rationals: the smallest positive rational that is an
/// integer multiple of both.
Rat lcm(const Rat& a, const Rat& b);

}  // namespace sigmoment

template <>
struct std::hash<sigmoment::Rat> {
    std::size_t operator()(const sigmoment::Rat& r) const noexcept {
        return std::hash<std::int64_t>{}(r.num()) * 31u ^ std::hash<std::int64_t>{}(r.den());
    }
};
