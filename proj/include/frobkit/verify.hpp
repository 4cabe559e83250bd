#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobkit/oracle.hpp"

namespace frobkit {

/// One comparison between a fast path and its reference value.
struct CaseResult {
    std::string params;    // "a=7,d=2,k=3" (plus lambda for weighted runs)
    std::string quantity;  // what was compared, e.g. "s:closed"
    std::string expected;  // reference (oracle / engine) value
    std::string got;       // fast-path value
    bool ok;
};

struct VerifyReport {
    std::string family;
    std::string grid;
    std::uint64_t tuples = 0;  // parameter tuples enumerated
    std::vector<CaseResult> cases;

    std::uint64_t mismatch_count() const;
    std::vector<CaseResult> mismatches() const;
};

struct VerifyOptions {
    unsigned jobs = 0;  // 0 = one worker per hardware thread
    std::uint64_t max_cells = kDefaultCellCap;
};

/// Closed-form g, n, s and Apery sums for every arithmetic progression with
/// 2 <= k <= a <= max_a, 1 <= d <= max_d, gcd(a,d) = 1, compared against
/// the brute-force oracle and the generic Apery engine.
VerifyReport verify_ap(std::uint64_t max_a, std::uint64_t max_d,
                       const VerifyOptions& options = {});

/// Same for almost-arithmetic progressions with h <= max_h.
VerifyReport verify_almost_ap(std::uint64_t max_a, std::uint64_t max_d,
                              std::uint64_t max_h,
                              const VerifyOptions& options = {});

/// Weighted gap sums on the progression grid for
/// lambda in {2, 1/2, i, -3/2+1/2i} plus -1 where admissible:
/// closed form vs direct oracle sum vs the generic Apery-table route.
VerifyReport verify_weighted_ap(std::uint64_t max_a, std::uint64_t max_d,
                                const VerifyOptions& options = {});

/// Extra-term family: closed form vs oracle over 3 <= k < K <= max_K,
/// K <= a <= max_a, d <= max_d; the K = a reduction identity; and the
/// quadruple fast paths (gap sum and Dulmage-Mendelsohn g) for
/// 4 <= a <= quad_max_a, c in {4, 5, 6}.
VerifyReport verify_extra(std::uint64_t max_K, std::uint64_t max_a,
                          std::uint64_t max_d, std::uint64_t quad_max_a,
                          const VerifyOptions& options = {});

/// Geometric-like family vs oracle for the given k values, 2^k <= a <= max_a.
VerifyReport verify_geom(std::uint64_t max_a,
                         const std::vector<std::uint64_t>& ks,
                         const VerifyOptions& options = {});

/// Seeded random coprime generator sets (smallest generator <= max_a1):
/// Apery engine vs oracle, table minimality against the representability
/// bitmap, and engine gap enumeration vs oracle gaps.
VerifyReport verify_generic(std::uint64_t cases, std::uint64_t max_a1,
                            std::uint64_t seed,
                            const VerifyOptions& options = {});

}  // namespace frobkit
