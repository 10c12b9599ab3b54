#include "chatelet/census.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace chatelet {

namespace {

std::int64_t floor_div(std::int64_t x, std::int64_t y) {
    std::int64_t q = x / y;
    if (x % y != 0 && ((x < 0) != (y < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t x, std::int64_t y) { return -floor_div(-x, y); }

// All (b, d) completing fixed coprime (a, c) to determinant +-1 inside the
// box, walked by exact interval intersection.
template <typename F>
void visit_progressions(std::int64_t a, std::int64_t c, std::int64_t P, F&& visit) {
    XgcdResult e = xgcd(a, c);
    if (e.g != 1) return;
    for (int det : {1, -1}) {
        std::int64_t b0 = -det * e.t;
        std::int64_t d0 = det * e.s;
        std::int64_t lo = ceil_div(-P - b0, a);
        std::int64_t hi = floor_div(P - b0, a);
        if (c > 0) {
            lo = std::max(lo, ceil_div(-P - d0, c));
            hi = std::min(hi, floor_div(P - d0, c));
        } else {
            lo = std::max(lo, ceil_div(P - d0, c));
            hi = std::min(hi, floor_div(-P - d0, c));
        }
        for (std::int64_t m = lo; m <= hi; ++m) {
            std::int64_t b = b0 + m * a;
            std::int64_t d = d0 + m * c;
            if (b != 0 && d != 0) visit(validate(a, b, c, d));
        }
    }
}

std::int64_t sup_norm(const SurfaceTuple& u) {
    return std::max({u.a, u.b < 0 ? -u.b : u.b, u.c < 0 ? -u.c : u.c, u.d < 0 ? -u.d : u.d});
}

// One tuple into the counters. classify_all_places evaluates the 2-adic set
// even when the real place already rules the surface out, so the per-stratum
// solubility fractions cover every tuple.
void tally(CensusCounters& ct, const SurfaceTuple& u, const LocalOptions& opts) {
    Classification cl = classify_all_places(u, opts);
    ++ct.raw_total;
    ++ct.sign_histogram[sign_signature(u).to_string()];
    Stratum st = stratify(u);
    StratumCount& sc = ct.stratum_histogram[{st.beta, st.gamma, st.delta}];
    ++sc.total;
    if (!cl.two_adic_set.empty()) ++sc.two_soluble;
    switch (cl.verdict) {
        case Verdict::InsolubleAt:
            if (cl.obstruction.is_real())
                ++ct.insoluble_real;
            else if (cl.obstruction.prime_value() == 2)
                ++ct.insoluble_two;
            else
                ++ct.insoluble_odd;
            break;
        case Verdict::HasseFailure:
            ++ct.raw_br;
            [[fallthrough]];
        case Verdict::SolubleNoObstruction:
            ++ct.raw_loc;
            break;
    }
}

CensusReport make_report(std::int64_t cp, const CensusCounters& cum) {
    if (cum.raw_total % 4 != 0 || cum.raw_loc % 4 != 0 || cum.raw_br % 4 != 0)
        throw std::logic_error("raw counts not orbit-complete at checkpoint " +
                               std::to_string(cp));
    CensusReport r;
    r.P = cp;
    r.raw_total = cum.raw_total;
    r.raw_loc = cum.raw_loc;
    r.raw_br = cum.raw_br;
    r.N = Rational(cum.raw_total, 4);
    r.N_loc = Rational(cum.raw_loc, 4);
    r.N_Br = Rational(cum.raw_br, 4);
    Rational P2{int128{cp} * cp};
    r.N_over_P2 = r.N / P2;
    r.Nloc_over_P2 = r.N_loc / P2;
    r.NBr_over_P2 = r.N_Br / P2;
    r.NBr_over_Nloc = cum.raw_loc == 0 ? Rational(0) : Rational(cum.raw_br, cum.raw_loc);
    r.counters = cum;
    return r;
}

}  // namespace

void CensusCounters::merge(const CensusCounters& o) {
    raw_total += o.raw_total;
    raw_loc += o.raw_loc;
    raw_br += o.raw_br;
    insoluble_real += o.insoluble_real;
    insoluble_two += o.insoluble_two;
    insoluble_odd += o.insoluble_odd;
    for (const auto& [k, v] : o.sign_histogram) sign_histogram[k] += v;
    for (const auto& [k, v] : o.stratum_histogram) {
        StratumCount& sc = stratum_histogram[k];
        sc.total += v.total;
        sc.two_soluble += v.two_soluble;
    }
}

void enumerate(std::int64_t P, const std::function<void(const SurfaceTuple&)>& visit) {
    if (P < 1) throw std::domain_error("height must be positive");
    for (std::int64_t a = 1; a <= P; ++a)
        for (std::int64_t c = -P; c <= P; ++c)
            if (c != 0) visit_progressions(a, c, P, visit);
}

std::vector<CensusReport> run_census(std::int64_t P, std::vector<std::int64_t> checkpoints,
                                     int shards, const LocalOptions& opts) {
    if (P < 1) throw std::domain_error("height must be positive");
    if (shards < 1) throw std::domain_error("shard count must be positive");
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 1 || checkpoints[i] > P)
            throw std::domain_error("checkpoints must lie in [1, height]");
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            throw std::domain_error("checkpoints must be strictly ascending");
    }
    if (checkpoints.empty() || checkpoints.back() != P) checkpoints.push_back(P);
    const std::size_t nb = checkpoints.size();

    std::vector<std::vector<CensusCounters>> shard_buckets(
        static_cast<std::size_t>(shards), std::vector<CensusCounters>(nb));
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(shards));

    auto worker = [&](int k) {
        try {
            std::vector<CensusCounters>& buckets = shard_buckets[static_cast<std::size_t>(k)];
            auto visit = [&](const SurfaceTuple& u) {
                std::size_t bi = static_cast<std::size_t>(
                    std::lower_bound(checkpoints.begin(), checkpoints.end(), sup_norm(u)) -
                    checkpoints.begin());
                tally(buckets[bi], u, opts);
            };
            for (std::int64_t a = 1 + k; a <= P; a += shards)
                for (std::int64_t c = -P; c <= P; ++c)
                    if (c != 0) visit_progressions(a, c, P, visit);
        } catch (...) {
            failures[static_cast<std::size_t>(k)] = std::current_exception();
        }
    };

    if (shards == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(shards));
        for (int k = 0; k < shards; ++k) pool.emplace_back(worker, k);
        for (std::thread& t : pool) t.join();
    }
    for (const std::exception_ptr& e : failures)
        if (e) std::rethrow_exception(e);

    std::vector<CensusReport> reports;
    CensusCounters cum;
    for (std::size_t i = 0; i < nb; ++i) {
        for (int k = 0; k < shards; ++k) cum.merge(shard_buckets[static_cast<std::size_t>(k)][i]);
        reports.push_back(make_report(checkpoints[i], cum));
    }
    return reports;
}

PredictedConstants predict_constants(const Rational& sum_T, const Rational& sum_H,
                                     const Rational& sum_Htilde) {
    PredictedConstants out;
    out.c_tot = sum_T / Rational(256);
    out.c_loc = Rational(3) * sum_H / Rational(1024);
    out.c_br = Rational(2) * sum_Htilde / Rational(1024);
    return out;
}

std::string census_csv(const std::vector<CensusReport>& reports) {
    std::ostringstream os;
    os << "P,raw_total,raw_loc,raw_br,N,N_loc,N_Br,N_over_P2,Nloc_over_P2,NBr_over_P2,"
          "NBr_over_Nloc\n";
    for (const CensusReport& r : reports) {
        os << r.P << ',' << r.raw_total << ',' << r.raw_loc << ',' << r.raw_br << ','
           << format_sig6(r.N) << ',' << format_sig6(r.N_loc) << ',' << format_sig6(r.N_Br) << ','
           << format_sig6(r.N_over_P2) << ',' << format_sig6(r.Nloc_over_P2) << ','
           << format_sig6(r.NBr_over_P2) << ',' << format_sig6(r.NBr_over_Nloc) << '\n';
    }
    return os.str();
}

std::string census_json(const std::vector<CensusReport>& reports, std::uint64_t seed,
                        const std::vector<std::int64_t>& checkpoints) {
    nlohmann::ordered_json doc;
    doc["height"] = reports.empty() ? 0 : reports.back().P;
    doc["checkpoints"] = checkpoints;
    doc["seed"] = seed;
    doc["reports"] = nlohmann::ordered_json::array();
    for (const CensusReport& r : reports) {
        nlohmann::ordered_json row;
        row["P"] = r.P;
        row["raw_total"] = r.raw_total;
        row["raw_loc"] = r.raw_loc;
        row["raw_br"] = r.raw_br;
        row["N"] = r.N.to_string();
        row["N_loc"] = r.N_loc.to_string();
        row["N_Br"] = r.N_Br.to_string();
        row["N_over_P2"] = r.N_over_P2.to_string();
        row["Nloc_over_P2"] = r.Nloc_over_P2.to_string();
        row["NBr_over_P2"] = r.NBr_over_P2.to_string();
        row["NBr_over_Nloc"] = r.NBr_over_Nloc.to_string();
        row["insoluble"] = {{"real", r.counters.insoluble_real},
                            {"two", r.counters.insoluble_two},
                            {"odd", r.counters.insoluble_odd}};
        nlohmann::ordered_json signs = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.counters.sign_histogram) signs[k] = v;
        row["sign_histogram"] = signs;
        nlohmann::ordered_json strata = nlohmann::ordered_json::array();
        for (const auto& [k, v] : r.counters.stratum_histogram)
            strata.push_back({{"beta", k[0]},
                              {"gamma", k[1]},
                              {"delta", k[2]},
                              {"total", v.total},
                              {"two_soluble", v.two_soluble}});
        row["stratum_histogram"] = strata;
        doc["reports"].push_back(row);
    }
    return doc.dump(2) + "\n";
}

}  // namespace chatelet
