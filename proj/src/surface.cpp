#include "chatelet/surface.hpp"

#include <stdexcept>

#include "chatelet/arith.hpp"
#include "chatelet/int128.hpp"

namespace chatelet {

std::string SignSignature::to_string() const {
    auto ch = [](int s) { return s > 0 ? '+' : '-'; };
    return std::string("(") + ch(sb) + "," + ch(sc) + "," + ch(sd) + ")";
}

std::string SurfaceTuple::to_string() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
           std::to_string(d) + ")";
}

std::string Stratum::to_string() const {
    return "eps=" + eps.to_string() + " (beta,gamma,delta)=(" + std::to_string(beta) + "," +
           std::to_string(gamma) + "," + std::to_string(delta) + ") det=" +
           (det_sign > 0 ? "+1" : "-1") + " xi=(" + std::to_string(xi[0]) + "," +
           std::to_string(xi[1]) + "," + std::to_string(xi[2]) + "," + std::to_string(xi[3]) + ")";
}

SurfaceTuple validate(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    if (a < 0) {
        a = -a; b = -b; c = -c; d = -d;
    }
    if (a == 0 || b == 0 || c == 0 || d == 0)
        throw std::domain_error("zero entry in " + SurfaceTuple{a, b, c, d, 0}.to_string());
    int128 det = checked_sub(checked_mul(int128{a}, d), checked_mul(int128{b}, c));
    if (det != 1 && det != -1)
        throw std::domain_error("determinant is " + to_string_128(det));
    return SurfaceTuple{a, b, c, d, det == 1 ? 1 : -1};
}

SignSignature sign_signature(const SurfaceTuple& u) {
    auto sg = [](std::int64_t x) { return x > 0 ? 1 : -1; };
    return SignSignature{sg(u.b), sg(u.c), sg(u.d)};
}

std::array<SurfaceTuple, 4> orbit(const SurfaceTuple& u) {
    std::array<SurfaceTuple, 4> out = {
        u,
        validate(u.c, u.d, u.a, u.b),  // rho1
        validate(u.b, u.a, u.d, u.c),  // rho2
        validate(u.d, u.c, u.b, u.a),  // rho1 rho2
    };
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (out[i] == out[j])
                throw std::logic_error("orbit collision at " + u.to_string());
    return out;
}

Stratum stratify(const SurfaceTuple& u) {
    SurfaceTuple w = u;
    if (w.a % 2 == 0) w = validate(w.b, w.a, w.d, w.c);  // rho2 to the odd-a member
    Stratum s;
    s.eps = sign_signature(w);
    auto abs64 = [](std::int64_t x) { return x < 0 ? -x : x; };
    s.beta = valuation(w.b, 2);
    s.gamma = valuation(w.c, 2);
    s.delta = valuation(w.d, 2);
    s.det_sign = w.det;
    s.xi = {static_cast<int>(w.a % 16),
            static_cast<int>((abs64(w.b) >> s.beta) % 16),
            static_cast<int>((abs64(w.c) >> s.gamma) % 16),
            static_cast<int>((abs64(w.d) >> s.delta) % 16)};
    s.b_even = s.beta >= 1;
    // ad - bc odd forces exactly one of bc, d even.
    bool case1 = s.beta + s.gamma == 0 && s.delta > 0;
    bool case2 = s.delta == 0 && s.beta + s.gamma > 0;
    if (case1 == case2)
        throw std::logic_error("stratum shape violation for " + u.to_string());
    return s;
}

bool cell_admissible(const Stratum& cell) {
    int e = cell.delta;
    int f = cell.beta + cell.gamma;
    std::int64_t lhs = cell.eps.sd * (std::int64_t{1} << std::min(e, 8)) * cell.xi[0] * cell.xi[3] -
                       cell.eps.sb * cell.eps.sc * (std::int64_t{1} << std::min(f, 8)) * cell.xi[1] * cell.xi[2];
    return ((lhs - cell.det_sign) % 16 + 16) % 16 == 0;
}

std::vector<SurfaceTuple> build_representatives(const Stratum& cell, int count,
                                                std::int64_t search_bound) {
    if (count < 1) throw std::domain_error("representative count must be positive");
    for (int i = 0; i < 4; ++i)
        if (cell.xi[i] % 2 == 0 || cell.xi[i] < 1 || cell.xi[i] > 15)
            throw std::domain_error("cell xi component not a unit mod 16: " + cell.to_string());
    bool case1 = cell.beta + cell.gamma == 0 && cell.delta > 0;
    bool case2 = cell.delta == 0 && cell.beta + cell.gamma > 0;
    if (case1 == case2) throw std::domain_error("cell shape invalid: " + cell.to_string());
    if (!cell_admissible(cell))
        throw std::domain_error("cell violates the admissibility congruence: " + cell.to_string());

    std::vector<SurfaceTuple> out;
    std::int64_t combos = 0;
    int128 pow_bg = int128{1} << (cell.beta + cell.gamma);
    int128 pow_d = int128{1} << cell.delta;
    int E = cell.eps.sb * cell.eps.sc;
    // d' is determined by (a', b', c') through the determinant identity; scan
    // primed coefficients smallest first so the first member found is the
    // smallest, then filter on integrality, positivity and the mod-16 class.
    for (std::int64_t total = 0; static_cast<int>(out.size()) < count; ++total) {
        if (combos > search_bound)
            throw std::runtime_error("no representative found within bound for cell " + cell.to_string());
        for (std::int64_t ka = 0; ka <= total; ++ka) {
            for (std::int64_t kb = 0; ka + kb <= total; ++kb) {
                std::int64_t kc = total - ka - kb;
                ++combos;
                std::int64_t ap = cell.xi[0] + 16 * ka;
                std::int64_t bp = cell.xi[1] + 16 * kb;
                std::int64_t cp = cell.xi[2] + 16 * kc;
                int128 numer = checked_add(int128{cell.det_sign},
                                           checked_mul(checked_mul(int128{E}, pow_bg),
                                                       checked_mul(int128{bp}, int128{cp})));
                int128 denom = checked_mul(checked_mul(int128{cell.eps.sd}, pow_d), int128{ap});
                if (numer % denom != 0) continue;
                int128 dp = numer / denom;
                if (dp <= 0 || dp % 16 != cell.xi[3]) continue;
                auto tuple = validate(ap,
                                      cell.eps.sb * (bp << cell.beta),
                                      cell.eps.sc * (cp << cell.gamma),
                                      cell.eps.sd * (static_cast<std::int64_t>(dp) << cell.delta));
                out.push_back(tuple);
                if (static_cast<int>(out.size()) >= count) return out;
            }
        }
    }
    return out;
}

}  // namespace chatelet
