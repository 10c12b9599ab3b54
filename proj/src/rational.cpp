#include "chatelet/rational.hpp"

#include <stdexcept>

namespace chatelet {

Rational::Rational(int128 num, int128 den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = checked_neg(num_);
        den_ = checked_neg(den_);
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    int128 g = gcd128(num_, den_);
    num_ /= g;
    den_ /= g;
}

Rational Rational::operator+(const Rational& o) const {
    int128 g = gcd128(den_, o.den_);
    int128 da = den_ / g;
    int128 db = o.den_ / g;
    int128 n = checked_add(checked_mul(num_, db), checked_mul(o.num_, da));
    int128 d = checked_mul(checked_mul(da, g), db);
    return Rational(n, d);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    int128 g1 = gcd128(num_, o.den_);
    int128 g2 = gcd128(o.num_, den_);
    return Rational(checked_mul(num_ / g1, o.num_ / g2),
                    checked_mul(den_ / g2, o.den_ / g1));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return *this * Rational(o.den_, o.num_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = checked_neg(num_);
    r.den_ = den_;
    return r;
}

bool Rational::operator<(const Rational& o) const {
    return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
    if (den_ == 1) return to_string_128(num_);
    return to_string_128(num_) + "/" + to_string_128(den_);
}

std::string format_sig6(const Rational& r) {
    if (r.num() == 0) return "0.00000";
    bool neg = r.num() < 0;
    int128 n = abs128(r.num());
    int128 d = r.den();
    // e = floor(log10(n/d)): smallest e with n/d < 10^(e+1).
    int e = 0;
    {
        // Scale into [1, 10).
        int128 nn = n, dd = d;
        while (nn >= checked_mul(dd, 10)) {
            dd = checked_mul(dd, 10);
            ++e;
        }
        while (nn < dd) {
            nn = checked_mul(nn, 10);
            --e;
        }
    }
    // mantissa: round(n/d * 10^(5-e)), 6 digits, half away from zero.
    int128 num = n, den = d;
    int shift = 5 - e;
    if (shift >= 0)
        num = checked_mul(num, [&] { int128 p = 1; for (int i = 0; i < shift; ++i) p = checked_mul(p, 10); return p; }());
    else
        den = checked_mul(den, [&] { int128 p = 1; for (int i = 0; i < -shift; ++i) p = checked_mul(p, 10); return p; }());
    int128 q = num / den;
    int128 rem = num % den;
    if (checked_mul(rem, 2) >= den) q += 1;
    if (q >= 1000000) {  // rounding carried into a new digit
        q /= 10;
        ++e;
    }
    std::string digits = to_string_128(q);  // exactly 6 digits
    std::string out;
    if (e >= 0 && e <= 8) {
        if (e + 1 >= 6) {
            out = digits;
            for (int i = 0; i < e + 1 - 6; ++i) out.push_back('0');
        } else {
            out = digits.substr(0, static_cast<std::size_t>(e + 1)) + "." +
                  digits.substr(static_cast<std::size_t>(e + 1));
        }
    } else if (e < 0 && e >= -4) {
        out = "0.";
        for (int i = 0; i < -e - 1; ++i) out.push_back('0');
        out += digits;
    } else {
        out = digits.substr(0, 1) + "." + digits.substr(1) + "e" + std::to_string(e);
    }
    return neg ? "-" + out : out;
}

}  // namespace chatelet
