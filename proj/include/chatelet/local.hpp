#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "chatelet/arith.hpp"
#include "chatelet/surface.hpp"

namespace chatelet {

// Achievable values of the local invariant (-1, a t^2 + b)_v over the local
// points of one place. A subset of {+1, -1}.
struct InvariantSet {
    bool plus = false;
    bool minus = false;
    bool empty() const { return !plus && !minus; }
    bool full() const { return plus && minus; }
    bool singleton() const { return plus != minus; }
    int value() const;  // requires singleton
    bool contains(int v) const { return v > 0 ? plus : minus; }
    void add(int v) { (v > 0 ? plus : minus) = true; }
    bool operator==(const InvariantSet&) const = default;
    std::string to_string() const;
};

struct LocalOptions {
    int depth_margin = 32;  // subdivision cap is v_p(abcd) + depth_margin
};

// Raised when ball subdivision hits the depth cap. Never expected on valid
// input; the cap is a safety net.
class UndecidedError : public std::runtime_error {
  public:
    UndecidedError(const SurfaceTuple& u, const Place& place, int depth);
    SurfaceTuple tuple;
    Place place;
    int depth;
};

// Real place, closed form by sign signature (a > 0 throughout):
//   (+,+,+) -> {+1}   (+,-,-) -> {}   (-,+,-) -> {+1,-1}   (-,-,+) -> {det}
InvariantSet real_invariant_set(const SurfaceTuple& u);

// 2-adic invariant set by breadth-limited ball subdivision over the two
// affine charts of P^1(Q_2). See src/local.cpp for the decision rules.
InvariantSet two_adic_invariant_set(const SurfaceTuple& u, const LocalOptions& opts = {});

// Same engine restricted to one chart and one seed ball; test hook for chart
// coverage and overlap checks. chart is 1 (parameter t, factors a t^2 + b,
// c t^2 + d) or 2 (parameter s = 1/t, factors b s^2 + a, d s^2 + c).
InvariantSet two_adic_chart_set(const SurfaceTuple& u, int chart, std::int64_t center, int level,
                                const LocalOptions& opts = {});

// Solubility over Q_p for odd p. p = 1 mod 4 is always soluble; p = 3 mod 4
// is decided by the same subdivision scheme with decided margin k-1, where a
// residue class counts as a point witness iff v_p of the fiber value is even
// (or a factor root exists).
bool odd_place_soluble(const SurfaceTuple& u, std::int64_t p, const LocalOptions& opts = {});

// The invariant at a soluble odd place, always +1. Runs the solubility
// engine first and throws std::domain_error if the place is insoluble.
int odd_invariant_value(const SurfaceTuple& u, std::int64_t p, const LocalOptions& opts = {});

}  // namespace chatelet
