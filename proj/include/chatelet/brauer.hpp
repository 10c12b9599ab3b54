#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chatelet/local.hpp"
#include "chatelet/surface.hpp"

namespace chatelet {

enum class Verdict {
    SolubleNoObstruction,  // everywhere locally soluble, product condition satisfiable
    InsolubleAt,           // some completion has no points
    HasseFailure,          // locally soluble everywhere, forced product = -1
};

std::string verdict_name(Verdict v);

struct Classification {
    Verdict verdict;
    Place obstruction = Place::real();  // witness place, meaningful for InsolubleAt
    InvariantSet real_set;
    InvariantSet two_adic_set;
    std::vector<std::int64_t> checked_odd_primes;
};

// Places in play: the real place, 2, and the odd primes dividing abcd
// (solubility elsewhere is automatic). Insoluble at any of them wins, in
// real -> 2 -> ascending-odd order; otherwise a Hasse failure iff both
// stored sets are forced singletons multiplying to -1 (odd places only ever
// contribute +1).
Classification classify(const SurfaceTuple& u, const LocalOptions& opts = {});

// Same verdict as classify, but every place is evaluated even after an
// obstruction is found, so the stored invariant sets are meaningful for
// insoluble surfaces too. The census and the class-count tables use this;
// classify keeps the early exits.
Classification classify_all_places(const SurfaceTuple& u, const LocalOptions& opts = {});

struct FamilyCheckRow {
    std::int64_t k;
    bool hasse_failure;
};

// The classical counterexample family (1, 1-k, -1, k), k = 3 mod 4: every
// member must classify as a Hasse failure.
std::vector<FamilyCheckRow> ctcs_family_check(std::int64_t k_max, const LocalOptions& opts = {});

}  // namespace chatelet
