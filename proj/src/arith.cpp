#include "chatelet/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace chatelet {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Place Place::prime(std::int64_t p) {
    if (!is_prime(p)) throw std::domain_error("not a prime: " + std::to_string(p));
    return Place(p);
}

std::int64_t Place::prime_value() const {
    if (is_real()) throw std::domain_error("real place has no prime");
    return p_;
}

std::string Place::to_string() const {
    return is_real() ? "real" : std::to_string(p_);
}

int valuation(int128 n, std::int64_t p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    if (p == 2) return v2_128(n);
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

int128 odd_part(int128 n) {
    if (n == 0) throw std::domain_error("odd part of zero");
    return n >> v2_128(n);
}

namespace {
int mod4(int128 n) { return static_cast<int>(mod_floor(n, 4)); }
}  // namespace

int hilbert_minus_one(int128 n, const Place& v) {
    if (n == 0) throw std::domain_error("hilbert symbol of zero");
    if (v.is_real()) return n > 0 ? 1 : -1;
    std::int64_t p = v.prime_value();
    if (p == 2) return mod4(odd_part(n)) == 1 ? 1 : -1;
    if (p % 4 == 1) return 1;
    return valuation(n, p) % 2 == 0 ? 1 : -1;
}

bool conic_oracle(std::int64_t n, std::int64_t p, int k) {
    if (n == 0) throw std::domain_error("conic oracle needs n != 0");
    if (!is_prime(p)) throw std::domain_error("conic oracle needs a prime");
    if (p == 2 ? k < 3 : k < 1) throw std::domain_error("conic oracle modulus too shallow");
    std::int64_t mod = 1;
    for (int i = 0; i < k; ++i) {
        if (mod > (std::int64_t{1} << 24) / p) throw std::domain_error("conic oracle modulus too large");
        mod *= p;
    }
    // Solutions are normalized so z = p^j (multiplying through by a unit
    // square preserves solubility and the divisibility pattern). bit 0 of
    // sq[w]: w is a square; bit 1: w is the square of a unit.
    std::vector<std::uint8_t> sq(static_cast<std::size_t>(mod), 0);
    for (std::int64_t y = 0; y < mod; ++y) {
        auto w = static_cast<std::size_t>(static_cast<int128>(y) * y % mod);
        sq[w] |= (y % p != 0) ? 3 : 1;
    }
    std::int64_t nr = ((n % mod) + mod) % mod;
    for (int j = 0; 2 * j <= k + 1; ++j) {
        // target = n * p^(2j) mod p^k; z = p^j
        std::int64_t target = nr;
        for (int i = 0; i < 2 * j && target != 0; ++i) target = target * p % mod;
        for (std::int64_t x = 0; x < mod; ++x) {
            auto w = static_cast<std::size_t>(
                mod_floor(static_cast<int128>(target) - static_cast<int128>(x) * x, mod));
            if (j == 0) {
                if (sq[w] & 1) return true;  // z is a unit, primitive for free
            } else {
                // z divisible by p: need x or y a unit
                if (x % p != 0 ? (sq[w] & 1) : (sq[w] & 2)) return true;
            }
        }
    }
    return false;
}

XgcdResult xgcd(std::int64_t a, std::int64_t b) {
    if (a == 0 && b == 0) throw std::domain_error("xgcd(0, 0)");
    std::int64_t r0 = a, r1 = b;
    std::int64_t s0 = 1, s1 = 0;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1; r0 = r1; r1 = tmp;
        tmp = s0 - q * s1; s0 = s1; s1 = tmp;
        tmp = t0 - q * t1; t0 = t1; t1 = tmp;
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    return {r0, s0, t0};
}

std::vector<std::int64_t> odd_prime_factors(std::int64_t n) {
    if (n == 0) throw std::domain_error("factoring zero");
    if (n < 0) n = -n;
    if (n > (std::int64_t{1} << 31)) throw std::domain_error("factoring input above 2^31");
    while (n % 2 == 0) n /= 2;
    std::vector<std::int64_t> out;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace chatelet
