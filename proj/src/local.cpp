#include "chatelet/local.hpp"

#include <vector>

namespace chatelet {

int InvariantSet::value() const {
    if (!singleton()) throw std::logic_error("invariant set is not a singleton");
    return plus ? 1 : -1;
}

std::string InvariantSet::to_string() const {
    if (empty()) return "{}";
    if (full()) return "{+1,-1}";
    return plus ? "{+1}" : "{-1}";
}

UndecidedError::UndecidedError(const SurfaceTuple& u, const Place& p, int depth_)
    : std::runtime_error("undecided at place " + p.to_string() + " for tuple " + u.to_string() +
                         " at depth " + std::to_string(depth_)),
      tuple(u), place(p), depth(depth_) {}

InvariantSet real_invariant_set(const SurfaceTuple& u) {
    SignSignature s = sign_signature(u);
    InvariantSet out;
    if (s.sb > 0 && s.sc > 0 && s.sd > 0) {
        out.add(1);
    } else if (s.sb > 0 && s.sc < 0 && s.sd < 0) {
        // both factors never simultaneously positive or zero: no real points
    } else if (s.sb < 0 && s.sc > 0 && s.sd < 0) {
        out.add(1);
        out.add(-1);
    } else if (s.sb < 0 && s.sc < 0 && s.sd > 0) {
        out.add(u.det);
    } else {
        // the remaining four sign patterns force |ad - bc| >= 2 once a > 0
        // (ad and -bc then share a sign), so a valid tuple never lands here
        throw std::logic_error("unreachable sign signature " + s.to_string());
    }
    return out;
}

namespace {

int mod4(int128 n) { return static_cast<int>(mod_floor(n, 4)); }

struct QuadPair {
    // Factor polynomials A1 x^2 + B1, A2 x^2 + B2 on one chart, plus the
    // closed-form invariant contributed by a root of each factor.
    std::int64_t A1, B1, A2, B2;
    int root_inv_1, root_inv_2;
};

QuadPair chart_polys(const SurfaceTuple& u, int chart) {
    auto h2 = [](int128 n) { return hilbert_minus_one(n, Place::prime(2)); };
    if (chart == 1)
        return {u.a, u.b, u.c, u.d,
                h2(int128{u.det} * u.a), h2(-int128{u.det} * u.c)};
    if (chart == 2)
        return {u.b, u.a, u.d, u.c,
                h2(-int128{u.det} * u.b), h2(int128{u.det} * u.d)};
    throw std::domain_error("chart must be 1 or 2");
}

int v2_of_product(const SurfaceTuple& u) {
    return v2_128(u.a) + v2_128(u.b) + v2_128(u.c) + v2_128(u.d);
}

struct Ball {
    int128 center;
    int level;
};

// Subdivision over one chart of P^1(Q_2). A ball t0 + 2^k Z_2 is
//  - decided when v2(g_i(t0)) <= k - 3 for both factors: unit parts mod 8
//    are then frozen on the ball, so the point condition (odd part of the
//    product = 1 mod 4) and the invariant (odd part of g_1 mod 4) are
//    constant;
//  - a root certificate for g_i when v2(g_i(t0)) > 2 v2(g_i'(t0)): Hensel
//    gives a 2-adic root, the other factor is det/lead times a square-unit
//    there, and every point in the ball carries the root invariant;
//  - split otherwise.
// Both certificates at once would force v2(ad - bc) > 0; asserted.
void descend_two_adic(const SurfaceTuple& u, const QuadPair& q, std::int64_t center, int level,
                      int cap, InvariantSet& out) {
    std::vector<Ball> stack;
    stack.push_back({center, level});
    while (!stack.empty() && !out.full()) {
        Ball ball = stack.back();
        stack.pop_back();
        int128 t0 = ball.center;
        int k = ball.level;
        int128 tsq = checked_mul(t0, t0);
        int128 e1 = checked_add(checked_mul(int128{q.A1}, tsq), int128{q.B1});
        int128 e2 = checked_add(checked_mul(int128{q.A2}, tsq), int128{q.B2});
        if (e1 != 0 && e2 != 0 && v2_128(e1) <= k - 3 && v2_128(e2) <= k - 3) {
            int u1 = mod4(odd_part(e1));
            int u2 = mod4(odd_part(e2));
            if (u1 * u2 % 4 == 1) out.add(u1 == 1 ? 1 : -1);
            continue;
        }
        int128 d1 = checked_mul(int128{2} * q.A1, t0);
        int128 d2 = checked_mul(int128{2} * q.A2, t0);
        bool cert1 = e1 == 0 || (d1 != 0 && v2_128(e1) > 2 * v2_128(d1));
        bool cert2 = e2 == 0 || (d2 != 0 && v2_128(e2) > 2 * v2_128(d2));
        if (cert1 && cert2)
            throw std::logic_error("both factors certified a 2-adic root for " + u.to_string());
        if (cert1) { out.add(q.root_inv_1); continue; }
        if (cert2) { out.add(q.root_inv_2); continue; }
        if (k >= cap) throw UndecidedError(u, Place::prime(2), k);
        stack.push_back({t0, k + 1});
        stack.push_back({checked_add(t0, int128{1} << k), k + 1});
    }
}

}  // namespace

InvariantSet two_adic_chart_set(const SurfaceTuple& u, int chart, std::int64_t center, int level,
                                const LocalOptions& opts) {
    InvariantSet out;
    descend_two_adic(u, chart_polys(u, chart), center, level, v2_of_product(u) + opts.depth_margin,
                     out);
    return out;
}

InvariantSet two_adic_invariant_set(const SurfaceTuple& u, const LocalOptions& opts) {
    int cap = v2_of_product(u) + opts.depth_margin;
    InvariantSet out;
    descend_two_adic(u, chart_polys(u, 1), 0, 0, cap, out);  // |t| <= 1
    if (!out.full())
        descend_two_adic(u, chart_polys(u, 2), 0, 1, cap, out);  // |t| > 1 and infinity
    return out;
}

namespace {

std::int64_t mulmod(std::int64_t x, std::int64_t y, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<int128>(x) * y % m);
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    std::int64_t r = 1 % m;
    base %= m;
    if (base < 0) base += m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Number of roots of A x^2 + B in F_p (p odd), via Euler's criterion.
int fp_root_count(std::int64_t A, std::int64_t B, std::int64_t p) {
    std::int64_t Am = ((A % p) + p) % p;
    std::int64_t Bm = ((B % p) + p) % p;
    if (Am == 0) {
        if (Bm == 0) throw std::logic_error("factor vanishes mod p, determinant not a unit");
        return 0;
    }
    if (Bm == 0) return 1;  // double root at 0
    std::int64_t r = mulmod(p - Bm, powmod(Am, p - 2, p), p);  // -B/A
    return powmod(r, (p - 1) / 2, p) == 1 ? 2 : 0;
}

int vp_128(int128 n, std::int64_t p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// Descent over root classes for p = 3 mod 4. Decided margin is k-1 (the
// valuation of each factor is frozen once below the ball modulus); a decided
// ball hosts points iff the total valuation is even. Root certificates are
// point witnesses outright (the fiber y = z = 0).
bool descend_odd(const SurfaceTuple& u, std::int64_t p, std::int64_t A1, std::int64_t B1,
                 std::int64_t A2, std::int64_t B2, std::int64_t center, int level, int cap) {
    std::vector<Ball> stack;
    stack.push_back({center, level});
    while (!stack.empty()) {
        Ball ball = stack.back();
        stack.pop_back();
        int128 t0 = ball.center;
        int k = ball.level;
        int128 tsq = checked_mul(t0, t0);
        int128 e1 = checked_add(checked_mul(int128{A1}, tsq), int128{B1});
        int128 e2 = checked_add(checked_mul(int128{A2}, tsq), int128{B2});
        if (e1 == 0 || e2 == 0) return true;
        int v1 = vp_128(e1, p);
        int v2 = vp_128(e2, p);
        if (v1 <= k - 1 && v2 <= k - 1) {
            if ((v1 + v2) % 2 == 0) return true;
            continue;
        }
        int128 d1 = checked_mul(int128{2} * A1, t0);
        int128 d2 = checked_mul(int128{2} * A2, t0);
        if (d1 != 0 && vp_128(e1, p) > 2 * vp_128(d1, p)) return true;
        if (d2 != 0 && vp_128(e2, p) > 2 * vp_128(d2, p)) return true;
        if (k >= cap) throw UndecidedError(u, Place::prime(p), k);
        int128 step = 1;
        for (int i = 0; i < k; ++i) step = checked_mul(step, p);
        for (std::int64_t j = 0; j < p; ++j)
            stack.push_back({checked_add(t0, checked_mul(step, int128{j})), k + 1});
    }
    return false;
}

}  // namespace

bool odd_place_soluble(const SurfaceTuple& u, std::int64_t p, const LocalOptions& opts) {
    if (p % 2 == 0 || !is_prime(p)) throw std::domain_error("odd place needs an odd prime");
    if (p % 4 == 1) return true;  // the symbol is identically +1, any fiber works
    // Level-1 in bulk: a residue class of P^1(F_p) where neither factor
    // vanishes is decided with total valuation 0. The factors cannot share a
    // root mod p (a g2 - c g1 = det, a unit), so there are at most 5 root
    // classes; whenever they do not cover all p+1 classes, some class is a
    // decided even-valuation witness.
    int roots = fp_root_count(u.a, u.b, p) + fp_root_count(u.c, u.d, p) +
                ((static_cast<int128>(u.a) * u.c) % p == 0 ? 1 : 0);
    if (roots < p + 1) return true;
    if (p != 3) throw std::logic_error("root classes cover P^1(F_p) for p > 3");
    int cap = vp_128(static_cast<int128>(u.a) * u.b * u.c * u.d, p) + opts.depth_margin;
    // chart 1 root classes
    for (std::int64_t t = 0; t < p; ++t) {
        int128 m = (checked_mul(int128{u.a}, int128{t} * t) + u.b) *
                   (checked_mul(int128{u.c}, int128{t} * t) + u.d);
        if (m % p != 0) continue;
        if (descend_odd(u, p, u.a, u.b, u.c, u.d, t, 1, cap)) return true;
    }
    // chart 2, the class at infinity
    if ((static_cast<int128>(u.a) * u.c) % p == 0)
        if (descend_odd(u, p, u.b, u.a, u.d, u.c, 0, 1, cap)) return true;
    return false;
}

int odd_invariant_value(const SurfaceTuple& u, std::int64_t p, const LocalOptions& opts) {
    if (!odd_place_soluble(u, p, opts))
        throw std::domain_error("no points over Q_" + std::to_string(p) + " for " + u.to_string());
    // p = 1 mod 4: -1 is a square, the symbol is +1 for every fiber value.
    // p = 3 mod 4: the engine's witnesses all have even valuation (or are
    // roots), and no point can sit over odd valuation, so again +1.
    return 1;
}

}  // namespace chatelet
