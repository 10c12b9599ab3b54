#pragma once

#include <string>

#include "chatelet/int128.hpp"

namespace chatelet {

// Exact rational on checked 128-bit integers, always in lowest terms with
// positive denominator. Census-scale values never come close to the limits;
// overflow raises.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(int128 n) : num_(n), den_(1) {}
    Rational(int128 num, int128 den);

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this == o || *this < o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    bool is_integer() const { return den_ == 1; }
    Rational abs() const { return num_ < 0 ? -*this : *this; }
    double to_double() const;

    // "n" when integral, "n/d" otherwise.
    std::string to_string() const;

  private:
    int128 num_;
    int128 den_;
    void normalize();
};

// Fixed decimal rendering with 6 significant digits, deterministic, locale
// free. Falls back to exponent notation outside [1e-4, 1e9).
std::string format_sig6(const Rational& r);

}  // namespace chatelet
