#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chatelet/brauer.hpp"
#include "chatelet/rational.hpp"
#include "chatelet/surface.hpp"

namespace chatelet {

// Visits every valid tuple with sup-norm at most P exactly once: for each
// a in [1,P], c in [-P,P]\{0} coprime to a, and each determinant sign, the
// solutions of ad - bc = det form the progression (b0 + ma, d0 + mc) with
// (b0, d0) from the extended Euclidean algorithm; the m-window is the exact
// interval intersection keeping |b|, |d| <= P, minus the b = 0 / d = 0 hits.
void enumerate(std::int64_t P, const std::function<void(const SurfaceTuple&)>& visit);

struct StratumCount {
    std::int64_t total = 0;
    std::int64_t two_soluble = 0;
};

struct CensusCounters {
    std::int64_t raw_total = 0;
    std::int64_t raw_loc = 0;
    std::int64_t raw_br = 0;
    std::int64_t insoluble_real = 0;
    std::int64_t insoluble_two = 0;
    std::int64_t insoluble_odd = 0;  // never hit in this family; counted, not assumed
    std::map<std::string, std::int64_t> sign_histogram;
    std::map<std::array<int, 3>, StratumCount> stratum_histogram;  // key (beta,gamma,delta)
    void merge(const CensusCounters& o);
};

struct CensusReport {
    std::int64_t P = 0;
    std::int64_t raw_total = 0;
    std::int64_t raw_loc = 0;
    std::int64_t raw_br = 0;
    Rational N, N_loc, N_Br;  // raw counts / 4 (orbit classes)
    Rational N_over_P2, Nloc_over_P2, NBr_over_P2, NBr_over_Nloc;
    CensusCounters counters;  // cumulative through this checkpoint
};

// Classifies every tuple of sup-norm <= P once and reports cumulative counts
// at each checkpoint (ascending, <= P; P itself is appended when missing).
// Tuples are bucketed by sup-norm at visit time, sharded by the a coordinate;
// results are independent of the shard count. Raw counts at every checkpoint
// are multiples of 4 (the box is orbit-closed); violations throw.
std::vector<CensusReport> run_census(std::int64_t P, std::vector<std::int64_t> checkpoints,
                                     int shards, const LocalOptions& opts = {});

struct PredictedConstants {
    Rational c_tot;  // leading coefficient of N(P)/P^2, times 1/pi^2
    Rational c_loc;
    Rational c_br;
};

// Assembles the leading constants from the three stratum tail sums.
PredictedConstants predict_constants(const Rational& sum_T, const Rational& sum_H,
                                     const Rational& sum_Htilde);

std::string census_csv(const std::vector<CensusReport>& reports);
std::string census_json(const std::vector<CensusReport>& reports, std::uint64_t seed,
                        const std::vector<std::int64_t>& checkpoints);

}  // namespace chatelet
