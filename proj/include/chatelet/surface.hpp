#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace chatelet {

// Signs of (b, c, d) for a tuple normalized to a > 0. Only four sign
// patterns are compatible with |ad - bc| = 1 up to the group action; the
// surface's real behavior depends on nothing else.
struct SignSignature {
    int sb, sc, sd;  // each +1 or -1
    bool operator==(const SignSignature&) const = default;
    std::string to_string() const;
};

// Coefficients of y^2 + z^2 = (a t^2 + b)(c t^2 + d). Construct through
// validate(); a > 0, no zero entries, ad - bc = +-1.
struct SurfaceTuple {
    std::int64_t a, b, c, d;
    int det;  // ad - bc, +1 or -1
    bool operator==(const SurfaceTuple&) const = default;
    std::string to_string() const;
};

// Normalizes sign (negates all four if a < 0) and checks the invariants.
// Throws std::domain_error with a reason otherwise ("determinant is 0", ...).
SurfaceTuple validate(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

SignSignature sign_signature(const SurfaceTuple& u);

// Orbit under rho1: (a,b,c,d) -> (c,d,a,b) and rho2: (a,b,c,d) -> (b,a,d,c),
// sign-normalized. Always exactly 4 distinct tuples; the surface and its
// classification are orbit invariants.
std::array<SurfaceTuple, 4> orbit(const SurfaceTuple& u);

// 2-adic stratum of the odd-a representative (rho2-swap applied first when a
// is even): valuations (beta, gamma, delta) of (b, c, d), signs, units mod 16
// and the determinant sign. Exactly one of beta+gamma = 0 < delta or
// delta = 0 < beta+gamma holds.
struct Stratum {
    SignSignature eps;
    int beta, gamma, delta;
    int det_sign;
    std::array<int, 4> xi;  // units mod 16 of (a, |b|/2^beta, |c|/2^gamma, |d|/2^delta)
    bool b_even;            // beta >= 1, i.e. the tuple came from (or sits in) the even-b family
    std::string to_string() const;
};

Stratum stratify(const SurfaceTuple& u);

// A stratum cell prescribes signs, valuations, units mod 16 and determinant
// sign; this reconstructs `count` distinct member tuples by scanning small
// primed coefficients. Throws if the cell violates the admissibility
// congruence or no member is found within the scan bound.
std::vector<SurfaceTuple> build_representatives(const Stratum& cell, int count,
                                                std::int64_t search_bound = std::int64_t{1} << 28);

// The mod-16 admissibility congruence for a cell: whether
// eps4 2^delta xi1 xi4 - eps2 eps3 2^(beta+gamma) xi2 xi3 = det_sign (mod 16).
bool cell_admissible(const Stratum& cell);

}  // namespace chatelet
