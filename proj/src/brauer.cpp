#include "chatelet/brauer.hpp"

#include <algorithm>
#include <array>

namespace chatelet {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::SolubleNoObstruction: return "SolubleNoObstruction";
        case Verdict::InsolubleAt: return "InsolubleAt";
        case Verdict::HasseFailure: return "HasseFailure";
    }
    throw std::logic_error("bad verdict");
}

namespace {

// Odd primes dividing any entry, ascending, deduplicated; fixed buffer to
// keep the census hot path free of allocation.
int collect_odd_primes(const SurfaceTuple& u, std::array<std::int64_t, 64>& out) {
    int n = 0;
    auto add = [&](std::int64_t p) {
        for (int i = 0; i < n; ++i)
            if (out[static_cast<std::size_t>(i)] == p) return;
        if (n == 64) throw std::logic_error("odd prime buffer overflow");
        out[static_cast<std::size_t>(n++)] = p;
    };
    for (std::int64_t x : {u.a, u.b, u.c, u.d}) {
        if (x < 0) x = -x;
        while (x % 2 == 0) x /= 2;
        for (std::int64_t d = 3; d * d <= x; d += 2)
            if (x % d == 0) {
                add(d);
                while (x % d == 0) x /= d;
            }
        if (x > 1) add(x);
    }
    std::sort(out.begin(), out.begin() + n);
    return n;
}

bool forced_product_negative(const Classification& c) {
    return c.real_set.singleton() && c.two_adic_set.singleton() &&
           c.real_set.value() * c.two_adic_set.value() == -1;
}

}  // namespace

Classification classify(const SurfaceTuple& u, const LocalOptions& opts) {
    Classification out;
    out.real_set = real_invariant_set(u);
    if (out.real_set.empty()) {
        out.verdict = Verdict::InsolubleAt;
        out.obstruction = Place::real();
        return out;
    }
    out.two_adic_set = two_adic_invariant_set(u, opts);
    if (out.two_adic_set.empty()) {
        out.verdict = Verdict::InsolubleAt;
        out.obstruction = Place::prime(2);
        return out;
    }
    std::array<std::int64_t, 64> primes;
    int np = collect_odd_primes(u, primes);
    for (int i = 0; i < np; ++i) {
        std::int64_t p = primes[static_cast<std::size_t>(i)];
        out.checked_odd_primes.push_back(p);
        if (!odd_place_soluble(u, p, opts)) {
            out.verdict = Verdict::InsolubleAt;
            out.obstruction = Place::prime(p);
            return out;
        }
    }
    out.verdict =
        forced_product_negative(out) ? Verdict::HasseFailure : Verdict::SolubleNoObstruction;
    return out;
}

Classification classify_all_places(const SurfaceTuple& u, const LocalOptions& opts) {
    Classification out;
    out.real_set = real_invariant_set(u);
    out.two_adic_set = two_adic_invariant_set(u, opts);
    std::array<std::int64_t, 64> primes;
    int np = collect_odd_primes(u, primes);
    std::int64_t odd_obstruction = 0;
    for (int i = 0; i < np; ++i) {
        std::int64_t p = primes[static_cast<std::size_t>(i)];
        out.checked_odd_primes.push_back(p);
        if (odd_obstruction == 0 && !odd_place_soluble(u, p, opts)) odd_obstruction = p;
    }
    if (out.real_set.empty()) {
        out.verdict = Verdict::InsolubleAt;
        out.obstruction = Place::real();
    } else if (out.two_adic_set.empty()) {
        out.verdict = Verdict::InsolubleAt;
        out.obstruction = Place::prime(2);
    } else if (odd_obstruction != 0) {
        out.verdict = Verdict::InsolubleAt;
        out.obstruction = Place::prime(odd_obstruction);
    } else {
        out.verdict =
            forced_product_negative(out) ? Verdict::HasseFailure : Verdict::SolubleNoObstruction;
    }
    return out;
}

std::vector<FamilyCheckRow> ctcs_family_check(std::int64_t k_max, const LocalOptions& opts) {
    if (k_max < 3) throw std::domain_error("k_max must be at least 3");
    std::vector<FamilyCheckRow> rows;
    for (std::int64_t k = 3; k <= k_max; k += 4) {
        Classification c = classify(validate(1, 1 - k, -1, k), opts);
        rows.push_back({k, c.verdict == Verdict::HasseFailure});
    }
    return rows;
}

}  // namespace chatelet
