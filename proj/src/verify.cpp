#include "frobkit/verify.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "frobkit/closedforms.hpp"
#include "frobkit/semigroup.hpp"

namespace frobkit {

std::uint64_t VerifyReport::mismatch_count() const {
    return static_cast<std::uint64_t>(
        std::count_if(cases.begin(), cases.end(),
                      [](const CaseResult& c) { return !c.ok; }));
}

std::vector<CaseResult> VerifyReport::mismatches() const {
    std::vector<CaseResult> out;
    for (const CaseResult& c : cases) {
        if (!c.ok) {
            out.push_back(c);
        }
    }
    return out;
}

namespace {

void check_cap(std::uint64_t value, std::uint64_t cap, const char* what) {
    if (value > cap) {
        throw BoundOverflow(std::string(what) + " exceeds safety cap " +
                            std::to_string(cap));
    }
}

void add_case(std::vector<CaseResult>& out, const std::string& params,
              std::string quantity, std::string expected, std::string got) {
    bool ok = expected == got;
    out.push_back({params, std::move(quantity), std::move(expected),
                   std::move(got), ok});
}

// Runs fn over every tuple, fanning out over `jobs` workers in contiguous
// chunks; results are concatenated in tuple order, so the report is
// identical for any worker count.
template <typename Tuple, typename Fn>
std::vector<CaseResult> map_tuples(const std::vector<Tuple>& tuples,
                                   unsigned jobs, Fn fn) {
    if (jobs == 0) {
        jobs = std::max(1u, std::thread::hardware_concurrency());
    }
    jobs = std::min<std::size_t>(jobs, std::max<std::size_t>(tuples.size(), 1));

    auto run_range = [&](std::size_t begin, std::size_t end) {
        std::vector<CaseResult> out;
        for (std::size_t i = begin; i < end; ++i) {
            fn(tuples[i], out);
        }
        return out;
    };

    if (jobs <= 1) {
        return run_range(0, tuples.size());
    }
    std::vector<std::future<std::vector<CaseResult>>> futures;
    std::size_t chunk = (tuples.size() + jobs - 1) / jobs;
    for (std::size_t begin = 0; begin < tuples.size(); begin += chunk) {
        std::size_t end = std::min(begin + chunk, tuples.size());
        futures.push_back(std::async(std::launch::async, run_range, begin, end));
    }
    std::vector<CaseResult> merged;
    for (auto& f : futures) {
        std::vector<CaseResult> part = f.get();
        merged.insert(merged.end(), std::make_move_iterator(part.begin()),
                      std::make_move_iterator(part.end()));
    }
    return merged;
}

std::string istr(const BigInt& v) { return v.str(); }

std::string pair_str(const GaussianRational& a, const GaussianRational& b) {
    return "(" + to_string(a) + ", " + to_string(b) + ")";
}

std::vector<GaussianRational> weighted_lambdas() {
    return {
        GaussianRational(2),
        GaussianRational(BigRational(1, 2)),
        GaussianRational(BigRational(0), BigRational(1)),
        GaussianRational(BigRational(-3, 2), BigRational(1, 2)),
        GaussianRational(-1),
    };
}

bool lambda_admissible(const APParams& p, const GaussianRational& lambda) {
    if (lambda.is_zero()) {
        return false;
    }
    for (std::uint64_t e : {p.d, p.a, p.a + (p.k - 1) * p.d}) {
        if (pow(lambda, e).is_one()) {
            return false;
        }
    }
    return true;
}

}  // namespace

VerifyReport verify_ap(std::uint64_t max_a, std::uint64_t max_d,
                       const VerifyOptions& options) {
    check_cap(max_a, 2000, "max_a");
    check_cap(max_d, 100, "max_d");

    struct T {
        std::uint64_t a, d, k;
    };
    std::vector<T> tuples;
    for (std::uint64_t a = 2; a <= max_a; ++a) {
        for (std::uint64_t d = 1; d <= max_d; ++d) {
            if (std::gcd(a, d) != 1) continue;
            for (std::uint64_t k = 2; k <= a; ++k) {
                tuples.push_back({a, d, k});
            }
        }
    }

    VerifyReport report;
    report.family = "ap";
    report.grid = "2<=k<=a<=" + std::to_string(max_a) +
                  ", 1<=d<=" + std::to_string(max_d) + ", gcd(a,d)=1";
    report.tuples = tuples.size();
    report.cases = map_tuples(tuples, options.jobs, [&](const T& t, std::vector<CaseResult>& out) {
        APParams p = APParams::create(t.a, t.d, t.k);
        std::string params = "a=" + std::to_string(t.a) + ",d=" + std::to_string(t.d) +
                             ",k=" + std::to_string(t.k);
        GeneratorSet gens(p.generators());
        GapReport truth = oracle_report(gens, std::nullopt, options.max_cells);
        AperyTable table = apery_set(gens);

        add_case(out, params, "g:apery", istr(truth.g), istr(g_from_apery(table)));
        add_case(out, params, "n:apery", istr(truth.n), istr(n_from_apery(table)));
        add_case(out, params, "s:apery", istr(truth.s), istr(s_from_apery(table)));
        add_case(out, params, "g:roberts", istr(truth.g), istr(roberts_g_ap(p)));
        add_case(out, params, "n:grant", istr(truth.n), istr(grant_n_ap(p)));
        add_case(out, params, "s:closed", istr(truth.s), istr(ap_gap_sum(p)));
        auto [s1, s2] = ap_apery_sums(p);
        add_case(out, params, "sum_m:closed", istr(apery_power_sum(table, 1)), istr(s1));
        add_case(out, params, "sum_m2:closed", istr(apery_power_sum(table, 2)), istr(s2));
    });
    return report;
}

VerifyReport verify_almost_ap(std::uint64_t max_a, std::uint64_t max_d,
                              std::uint64_t max_h, const VerifyOptions& options) {
    check_cap(max_a, 2000, "max_a");
    check_cap(max_d, 100, "max_d");
    check_cap(max_h, 100, "max_h");

    struct T {
        std::uint64_t a, d, h, k;
    };
    std::vector<T> tuples;
    for (std::uint64_t a = 2; a <= max_a; ++a) {
        for (std::uint64_t d = 1; d <= max_d; ++d) {
            if (std::gcd(a, d) != 1) continue;
            for (std::uint64_t h = 1; h <= max_h; ++h) {
                for (std::uint64_t k = 2; k <= a; ++k) {
                    tuples.push_back({a, d, h, k});
                }
            }
        }
    }

    VerifyReport report;
    report.family = "almost-ap";
    report.grid = "2<=k<=a<=" + std::to_string(max_a) + ", 1<=d<=" +
                  std::to_string(max_d) + ", 1<=h<=" + std::to_string(max_h) +
                  ", gcd(a,d)=1";
    report.tuples = tuples.size();
    report.cases = map_tuples(tuples, options.jobs, [&](const T& t, std::vector<CaseResult>& out) {
        AlmostAPParams p = AlmostAPParams::create(t.a, t.d, t.h, t.k);
        std::string params = "a=" + std::to_string(t.a) + ",d=" + std::to_string(t.d) +
                             ",h=" + std::to_string(t.h) + ",k=" + std::to_string(t.k);
        GeneratorSet gens(p.generators());
        GapReport truth = oracle_report(gens, std::nullopt, options.max_cells);
        AperyTable table = apery_set(gens);

        add_case(out, params, "g:selmer", istr(truth.g), istr(selmer_g_almost(p)));
        add_case(out, params, "n:selmer", istr(truth.n), istr(selmer_n_almost(p)));
        add_case(out, params, "s:closed", istr(truth.s), istr(almost_ap_gap_sum(p)));
        auto [s1, s2] = almost_ap_apery_sums(p);
        add_case(out, params, "sum_m:closed", istr(apery_power_sum(table, 1)), istr(s1));
        add_case(out, params, "sum_m2:closed", istr(apery_power_sum(table, 2)), istr(s2));
    });
    return report;
}

VerifyReport verify_weighted_ap(std::uint64_t max_a, std::uint64_t max_d,
                                const VerifyOptions& options) {
    check_cap(max_a, 500, "max_a");
    check_cap(max_d, 100, "max_d");

    const std::vector<GaussianRational> lambdas = weighted_lambdas();
    struct T {
        std::uint64_t a, d, k;
        std::size_t lambda_index;
    };
    std::vector<T> tuples;
    for (std::uint64_t a = 2; a <= max_a; ++a) {
        for (std::uint64_t d = 1; d <= max_d; ++d) {
            if (std::gcd(a, d) != 1) continue;
            for (std::uint64_t k = 2; k <= a; ++k) {
                APParams p = APParams::create(a, d, k);
                for (std::size_t li = 0; li < lambdas.size(); ++li) {
                    if (lambda_admissible(p, lambdas[li])) {
                        tuples.push_back({a, d, k, li});
                    }
                }
            }
        }
    }

    VerifyReport report;
    report.family = "weighted-ap";
    report.grid = "2<=k<=a<=" + std::to_string(max_a) + ", 1<=d<=" +
                  std::to_string(max_d) +
                  ", gcd(a,d)=1, lambda in {2, 1/2, i, -3/2+1/2i, -1 when admissible}";
    report.tuples = tuples.size();
    report.cases = map_tuples(tuples, options.jobs, [&](const T& t, std::vector<CaseResult>& out) {
        APParams p = APParams::create(t.a, t.d, t.k);
        const GaussianRational& lambda = lambdas[t.lambda_index];
        std::string params = "a=" + std::to_string(t.a) + ",d=" + std::to_string(t.d) +
                             ",k=" + std::to_string(t.k) + ",lambda=" + to_string(lambda);
        GeneratorSet gens(p.generators());
        GapReport truth = oracle_report(gens, lambda, options.max_cells);
        AperyTable table = apery_set(gens);

        add_case(out, params, "wsum:closed", to_string(*truth.weighted),
                 to_string(ap_weighted_gap_sum(p, lambda)));
        add_case(out, params, "wsum:apery", to_string(*truth.weighted),
                 to_string(weighted_sum_from_apery(table, lambda)));
        // closed-form table sums exclude the i = 0 term, the generic ones
        // include it as (0, 1)
        auto [closed_mw, closed_w] = ap_weighted_apery_sums(p, lambda);
        auto [table_mw, table_w] = weighted_apery_sums(table, lambda);
        add_case(out, params, "wsums:closed",
                 pair_str(table_mw, table_w - GaussianRational(1)),
                 pair_str(closed_mw, closed_w));
    });
    return report;
}

VerifyReport verify_extra(std::uint64_t max_K, std::uint64_t max_a,
                          std::uint64_t max_d, std::uint64_t quad_max_a,
                          const VerifyOptions& options) {
    check_cap(max_K, 100, "max_K");
    check_cap(max_a, 2000, "max_a");
    check_cap(max_d, 100, "max_d");
    check_cap(quad_max_a, 5000, "quad_max_a");

    // section 0: sweep; 1: K = a reduction; 2: quadruple fast paths
    struct T {
        int section;
        std::uint64_t a, d, k, K;
    };
    std::vector<T> tuples;
    for (std::uint64_t k = 3; k < max_K; ++k) {
        for (std::uint64_t K = k + 1; K <= max_K; ++K) {
            for (std::uint64_t a = K; a <= max_a; ++a) {
                for (std::uint64_t d = 1; d <= max_d; ++d) {
                    if (std::gcd(a, d) != 1) continue;
                    tuples.push_back({0, a, d, k, K});
                }
            }
        }
    }
    for (std::uint64_t a = 3; a <= std::min(max_a, std::uint64_t{40}); ++a) {
        for (std::uint64_t k = 2; k < a; ++k) {
            for (std::uint64_t d = 1; d <= max_d; ++d) {
                if (std::gcd(a, d) != 1) continue;
                tuples.push_back({1, a, d, k, a});
            }
        }
    }
    for (std::uint64_t c = 4; c <= 6; ++c) {
        for (std::uint64_t a = 4; a <= quad_max_a; ++a) {
            tuples.push_back({2, a, 1, 3, c});
        }
    }

    VerifyReport report;
    report.family = "extra";
    report.grid = "3<=k<K<=" + std::to_string(max_K) + ", K<=a<=" +
                  std::to_string(max_a) + ", 1<=d<=" + std::to_string(max_d) +
                  ", gcd(a,d)=1; K=a reduction; quadruple 4<=a<=" +
                  std::to_string(quad_max_a);
    report.tuples = tuples.size();
    report.cases = map_tuples(tuples, options.jobs, [&](const T& t, std::vector<CaseResult>& out) {
        if (t.section == 0) {
            ExtraTermParams p = decompose_extra(t.a, t.d, t.k, t.K);
            std::string params = "a=" + std::to_string(t.a) + ",d=" + std::to_string(t.d) +
                                 ",k=" + std::to_string(t.k) + ",K=" + std::to_string(t.K);
            GeneratorSet gens(p.generators());
            GapReport truth = oracle_report(gens, std::nullopt, options.max_cells);
            add_case(out, params, "s:closed", istr(truth.s), istr(extra_term_gap_sum(p)));
        } else if (t.section == 1) {
            ExtraTermParams p = decompose_extra(t.a, t.d, t.k, t.a);
            APParams ap = APParams::create(t.a, t.d, t.k);
            std::string params = "a=" + std::to_string(t.a) + ",d=" + std::to_string(t.d) +
                                 ",k=" + std::to_string(t.k) + ",K=a";
            add_case(out, params, "s:reduction", istr(ap_gap_sum(ap)),
                     istr(extra_term_gap_sum(p)));
        } else {
            std::uint64_t a = t.a, c = t.K;
            std::string params = "a=" + std::to_string(a) + ",c=" + std::to_string(c);
            GeneratorSet gens({a, a + 1, a + 2, a + c});
            GapReport truth = oracle_report(gens, std::nullopt, options.max_cells);
            BigInt quad = quadruple_gap_sum(a, c);
            add_case(out, params, "s:quadruple", istr(truth.s), istr(quad));
            add_case(out, params, "g:dm", istr(truth.g), istr(dm_g_quadruple(a, c)));
            if (a >= c) {
                add_case(out, params, "s:quadruple_vs_extra",
                         istr(extra_term_gap_sum(decompose_extra(a, 1, 3, c))),
                         istr(quad));
            }
        }
    });
    return report;
}

VerifyReport verify_geom(std::uint64_t max_a,
                         const std::vector<std::uint64_t>& ks,
                         const VerifyOptions& options) {
    check_cap(max_a, 2000, "max_a");

    struct T {
        std::uint64_t a, k;
    };
    std::vector<T> tuples;
    for (std::uint64_t k : ks) {
        if (k < 2 || k > 20) {
            throw BoundOverflow("geometric k outside [2, 20]");
        }
        for (std::uint64_t a = std::uint64_t{1} << k; a <= max_a; ++a) {
            tuples.push_back({a, k});
        }
    }

    VerifyReport report;
    report.family = "geom";
    std::string klist;
    for (std::uint64_t k : ks) {
        klist += (klist.empty() ? "" : ",") + std::to_string(k);
    }
    report.grid = "k in {" + klist + "}, 2^k<=a<=" + std::to_string(max_a);
    report.tuples = tuples.size();
    report.cases = map_tuples(tuples, options.jobs, [&](const T& t, std::vector<CaseResult>& out) {
        GeomParams p = GeomParams::create(t.a, t.k);
        std::string params = "a=" + std::to_string(t.a) + ",k=" + std::to_string(t.k);
        GeneratorSet gens(p.generators());
        GapReport truth = oracle_report(gens, std::nullopt, options.max_cells);
        add_case(out, params, "s:closed", istr(truth.s), istr(geometric_gap_sum(p)));
    });
    return report;
}

VerifyReport verify_generic(std::uint64_t cases, std::uint64_t max_a1,
                            std::uint64_t seed, const VerifyOptions& options) {
    check_cap(cases, 100000, "cases");
    check_cap(max_a1, 100000, "max_a1");
    if (max_a1 < 2) {
        throw BoundOverflow("max_a1 must be at least 2");
    }

    // Pre-generate all sets with one RNG stream so the grid is identical
    // regardless of worker count.
    struct T {
        std::uint64_t index;
        std::vector<std::uint64_t> gens;
    };
    std::mt19937_64 rng(seed);
    auto rand_in = [&rng](std::uint64_t lo, std::uint64_t hi) {
        return lo + rng() % (hi - lo + 1);
    };
    std::vector<T> tuples;
    tuples.reserve(cases);
    for (std::uint64_t i = 0; i < cases; ++i) {
        std::uint64_t a1 = rand_in(2, max_a1);
        std::uint64_t extra = rand_in(1, 4);
        std::vector<std::uint64_t> gens{a1};
        for (std::uint64_t j = 0; j < extra; ++j) {
            gens.push_back(rand_in(a1 + 1, 4 * a1));
        }
        std::uint64_t g = 0;
        for (std::uint64_t v : gens) {
            g = std::gcd(g, v);
        }
        if (g != 1) {
            gens.push_back(a1 + 1);  // coprime to a1, keeps the set valid
        }
        tuples.push_back({i, std::move(gens)});
    }

    VerifyReport report;
    report.family = "generic";
    report.grid = std::to_string(cases) + " seeded random coprime sets, a1<=" +
                  std::to_string(max_a1) + ", seed=" + std::to_string(seed);
    report.tuples = tuples.size();
    report.cases = map_tuples(tuples, options.jobs, [&](const T& t, std::vector<CaseResult>& out) {
        GeneratorSet gens(t.gens);
        std::string params = "case=" + std::to_string(t.index) + ",gens=";
        for (std::size_t i = 0; i < gens.values().size(); ++i) {
            params += (i ? " " : "") + std::to_string(gens.values()[i]);
        }
        RepresentabilityMap map = representability_map(gens, options.max_cells);
        GapReport truth = oracle_report(gens, std::nullopt, options.max_cells);
        AperyTable table = apery_set(gens);

        add_case(out, params, "g:apery", istr(truth.g), istr(g_from_apery(table)));
        add_case(out, params, "n:apery", istr(truth.n), istr(n_from_apery(table)));
        add_case(out, params, "s:apery", istr(truth.s), istr(s_from_apery(table)));

        // m[i] must be representable while m[i] - base is not
        std::string violation = "minimal";
        for (std::uint64_t i = 1; i < table.base; ++i) {
            std::uint64_t m = table.m[i];
            bool representable = m <= map.bound && map.bits[m];
            bool predecessor_gap = m < table.base || !map.bits[m - table.base];
            if (!representable || !predecessor_gap) {
                violation = "violated at residue " + std::to_string(i);
                break;
            }
        }
        add_case(out, params, "apery:minimal", "minimal", violation);
        add_case(out, params, "gaps:engine", "equal",
                 truth.gaps && *truth.gaps == gaps_from_apery(table) ? "equal"
                                                                     : "differ");
    });
    return report;
}

}  // namespace frobkit
