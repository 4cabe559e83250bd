#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "frobkit/exactnum.hpp"

namespace frobkit {

/// Validated generator set of a numerical semigroup: sorted, deduplicated,
/// all entries >= 1, gcd over all entries = 1. Redundant generators (one a
/// combination of others) are accepted.
class GeneratorSet {
  public:
    explicit GeneratorSet(std::vector<std::uint64_t> generators);

    const std::vector<std::uint64_t>& values() const { return gens_; }
    std::uint64_t smallest() const { return gens_.front(); }
    std::size_t size() const { return gens_.size(); }

  private:
    std::vector<std::uint64_t> gens_;
};

/// m[i] is the least representable value congruent to i mod base; m[0] = 0.
struct AperyTable {
    std::uint64_t base = 1;
    std::vector<std::uint64_t> m;
};

/// Invariants for a generator set: largest gap g (-1 when there are none),
/// gap count n, gap sum s, optionally the explicit gap list and a weighted
/// sum with the lambda it was taken at.
struct GapReport {
    BigInt g;
    BigInt n;
    BigInt s;
    std::optional<std::vector<std::uint64_t>> gaps;
    std::optional<GaussianRational> lambda;
    std::optional<GaussianRational> weighted;
};

/// Single-source shortest path over residues mod the smallest generator:
/// an edge i -> (i + a_j) mod base of weight a_j for every other generator.
AperyTable apery_set(const GeneratorSet& generators);

/// max m[i] - base; -1 when base = 1 (no gaps by convention).
BigInt g_from_apery(const AperyTable& table);

/// (1/base) * sum m[i] - (base-1)/2, asserted integral and >= 0.
BigInt n_from_apery(const AperyTable& table);

/// (1/(2 base)) * sum m[i]^2 - (1/2) * sum m[i] + (base^2-1)/12,
/// asserted integral and >= 0.
BigInt s_from_apery(const AperyTable& table);

/// sum of m[i]^exponent over i = 1..base-1, exponent in {1, 2}.
BigInt apery_power_sum(const AperyTable& table, int exponent);

/// (sum m_i lambda^{m_i}, sum lambda^{m_i}) over i = 0..base-1; the i = 0
/// term contributes (0, 1). Requires lambda != 0.
std::pair<GaussianRational, GaussianRational> weighted_apery_sums(
    const AperyTable& table, const GaussianRational& lambda);

/// Weighted gap sum  sum_{n in NR} lambda^n n  from the Apery table:
///   S / (lambda^base - 1) - base lambda^base W / (lambda^base - 1)^2
///   + lambda / (lambda - 1)^2
/// with (S, W) = weighted_apery_sums. Requires lambda != 0 and
/// lambda^base != 1 (so lambda = 1 is rejected; use s_from_apery for it).
GaussianRational weighted_sum_from_apery(const AperyTable& table,
                                         const GaussianRational& lambda);

/// Enumerates the gaps directly from the table: x is a gap iff
/// x < m[x mod base]. Ascending.
std::vector<std::uint64_t> gaps_from_apery(const AperyTable& table);

}  // namespace frobkit
