#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace isorad {

// Exact rational with 64-bit reduced num/den, den > 0. Products and sums are
// formed in 128 bits and reduced; anything that does not fit back into
// 64 bits throws std::overflow_error rather than wrapping.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    std::int64_t floor() const;
    double to_double() const { return double(num_) / double(den_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const;

private:
    static Rational from_wide(__int128 n, __int128 d);
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Angles are carried in turns: 1 turn = 2*pi radians.
using Turn = Rational;

// Representative of r modulo 1 in [0, 1).
inline Turn lift01(const Turn& r) { return r - Rational(r.floor()); }

inline const Turn kHalfTurn{1, 2};
inline const Turn kQuarterTurn{1, 4};

}  // namespace isorad
