#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chatelet/int128.hpp"

namespace chatelet {

bool is_prime(std::int64_t n);

// A place of Q: the real place or a finite prime. The prime is validated at
// construction, so downstream code can trust it.
class Place {
  public:
    static Place real() { return Place(0); }
    static Place prime(std::int64_t p);

    bool is_real() const { return p_ == 0; }
    std::int64_t prime_value() const;
    std::string to_string() const;

    bool operator==(const Place& o) const { return p_ == o.p_; }
    bool operator!=(const Place& o) const { return p_ != o.p_; }

  private:
    explicit Place(std::int64_t p) : p_(p) {}
    std::int64_t p_;  // 0 encodes the real place
};

// Exact power of p dividing n. n must be nonzero.
int valuation(int128 n, std::int64_t p);

// n / 2^v2(n), sign preserved.
int128 odd_part(int128 n);

// Hilbert symbol (-1, n)_v in {+1, -1}, closed form:
//   real:          +1 iff n > 0
//   p = 2:         +1 iff odd_part(n) = 1 mod 4
//   p = 1 mod 4:   always +1
//   p = 3 mod 4:   (-1)^valuation(n, p)
int hilbert_minus_one(int128 n, const Place& v);

// Brute-force ground truth for the finite-place symbol: does
// x^2 + y^2 = n z^2 (mod p^k) admit a solution with not all of x, y, z
// divisible by p? Exists solely to test hilbert_minus_one; shares none of
// its case analysis. k >= 3 required for p = 2, k >= 1 otherwise.
bool conic_oracle(std::int64_t n, std::int64_t p, int k);

struct XgcdResult {
    std::int64_t g;  // > 0
    std::int64_t s;
    std::int64_t t;  // g = s*a + t*b
};
XgcdResult xgcd(std::int64_t a, std::int64_t b);

// Distinct odd primes dividing n, ascending, by trial division.
// |n| must be nonzero and at most 2^31.
std::vector<std::int64_t> odd_prime_factors(std::int64_t n);

}  // namespace chatelet
