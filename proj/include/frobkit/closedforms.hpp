#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "frobkit/exactnum.hpp"

namespace frobkit {

/// Arithmetic progression a, a+d, ..., a+(k-1)d with gcd(a,d) = 1 and
/// 2 <= k <= a, plus the division a-1 = q(k-1) + r, 0 <= r < k-1.
/// k <= a forces q >= 1.
struct APParams {
    std::uint64_t a, d, k;
    std::uint64_t q, r;

    static APParams create(std::uint64_t a, std::uint64_t d, std::uint64_t k);
    std::vector<std::uint64_t> generators() const;
};

/// Almost-arithmetic progression a, ha+d, ..., ha+(k-1)d, h >= 1.
struct AlmostAPParams {
    std::uint64_t a, d, h, k;
    std::uint64_t q, r;

    static AlmostAPParams create(std::uint64_t a, std::uint64_t d,
                                 std::uint64_t h, std::uint64_t k);
    std::vector<std::uint64_t> generators() const;
};

/// Progression with one extra term: a, a+d, ..., a+(k-1)d, a+Kd with K > k
/// and a >= k. Derived integers:
///   K-1 = q(k-1) + r        (0 <= r < k-1)
///   a   = alpha K + beta    (0 <= beta < K, alpha >= 1)
///   beta-1 = gamma(k-1) + delta  (0 <= delta < k-1; gamma = delta = 0
///                                 sentinels when beta = 0)
struct ExtraTermParams {
    std::uint64_t a, d, k, K;
    std::uint64_t q, r, alpha, beta, gamma, delta;

    static ExtraTermParams create(std::uint64_t a, std::uint64_t d,
                                  std::uint64_t k, std::uint64_t K);
    std::vector<std::uint64_t> generators() const;
};

/// Geometric-like family a, a+1, a+2, a+4, ..., a+2^k (k >= 2), with
/// a = 2^k q + r, 0 <= r < 2^k and q >= 1.
struct GeomParams {
    std::uint64_t a, k;
    std::uint64_t q, r;

    static GeomParams create(std::uint64_t a, std::uint64_t k);
    std::uint64_t power() const { return std::uint64_t{1} << k; }
    std::vector<std::uint64_t> generators() const;
};

// ---- two generators ----------------------------------------------------

/// (a-1)(b-1) - 1; equals -1 when either generator is 1.
BigInt sylvester_g2(std::uint64_t a, std::uint64_t b);

/// (a-1)(b-1)/2.
BigInt sylvester_n2(std::uint64_t a, std::uint64_t b);

/// (1/12)(a-1)(b-1)(2ab - a - b - 1).
BigInt brown_shiue_s2(std::uint64_t a, std::uint64_t b);

// ---- arithmetic progressions --------------------------------------------

/// floor((a-2)/(k-1)) a + (a-1) d.
BigInt roberts_g_ap(const APParams& p);

/// (1/2)((a-1)(q+d) + r(q+1)).
BigInt grant_n_ap(const APParams& p);

/// Closed-form gap sum for the progression (divides by 12q; asserted
/// integral and nonnegative).
BigInt ap_gap_sum(const APParams& p);

/// Closed forms for (sum m_i, sum m_i^2) over the progression's Apery table.
std::pair<BigInt, BigInt> ap_apery_sums(const APParams& p);

// ---- almost-arithmetic progressions --------------------------------------

/// (h floor((a-2)/(k-1)) + h - 1) a + (a-1) d.
BigInt selmer_g_almost(const AlmostAPParams& p);

/// (1/2)((a-1)(hq + d + h - 1) + hr(q+1)).
BigInt selmer_n_almost(const AlmostAPParams& p);

/// Closed-form gap sum; reduces to ap_gap_sum at h = 1.
BigInt almost_ap_gap_sum(const AlmostAPParams& p);

/// (sum m_i, sum m_i^2) for the almost-arithmetic family.
std::pair<BigInt, BigInt> almost_ap_apery_sums(const AlmostAPParams& p);

// ---- weighted sums over arithmetic progressions --------------------------

/// (sum_{i>=1} m_i lambda^{m_i}, sum_{i>=1} lambda^{m_i}) in closed form.
/// Requires lambda != 0 and lambda^d, lambda^a, lambda^{a+(k-1)d} all != 1;
/// throws LambdaDegenerate naming the violated condition otherwise.
/// The i = 0 term is excluded (it would add (0, 1)).
std::pair<GaussianRational, GaussianRational> ap_weighted_apery_sums(
    const APParams& p, const GaussianRational& lambda);

/// Closed-form weighted gap sum  sum_{n in NR} lambda^n n  for the
/// progression. Same lambda conditions as ap_weighted_apery_sums.
GaussianRational ap_weighted_gap_sum(const APParams& p,
                                     const GaussianRational& lambda);

// ---- progression with an extra term --------------------------------------

/// Validates and decomposes; InvalidParams lists every violated constraint.
ExtraTermParams decompose_extra(std::uint64_t a, std::uint64_t d,
                                std::uint64_t k, std::uint64_t K);

/// (S1, S2): the per-block linear and square sums
///   S1 = (q+1)(K-1+r)/2 a + (K-1)K/2 d
///   S2 = analogous square sum (divides by 12q).
std::pair<BigInt, BigInt> extra_block_sums(const ExtraTermParams& p);

/// (T1, T2): linear and square sums of the tail line; (0, 0) when beta = 0.
std::pair<BigInt, BigInt> extra_tail_sums(const ExtraTermParams& p);

/// Assembled gap sum for the extra-term family. Faithful to the published
/// closed form; see docs/extra-term-validity.md for the parameter region
/// where it provably agrees with the oracle.
BigInt extra_term_gap_sum(const ExtraTermParams& p);

/// Gap sum of (a, a+1, a+2, a+c) for c in {4, 5, 6}: quartic in a selected
/// by a mod c. Valid for every a >= 4, including a < c.
BigInt quadruple_gap_sum(std::uint64_t a, std::uint64_t c);

/// Dulmage-Mendelsohn floor formulas for g(a, a+1, a+2, a+c), c in {4,5,6}.
BigInt dm_g_quadruple(std::uint64_t a, std::uint64_t c);

// ---- geometric-like family ------------------------------------------------

/// Exponent of 2 in n! (Legendre): sum_{i>=1} floor(n / 2^i).
std::uint64_t factorial_two_exponent(std::uint64_t n);

/// Number of ones in the binary representation; equals
/// n - factorial_two_exponent(n).
std::uint64_t binary_ones(std::uint64_t n);

/// Tail-line sums (T1, T2) of the geometric-like family; (0, 0) when r = 0.
/// The digit-sum ingredients are accumulated by an O(r) loop.
std::pair<BigInt, BigInt> geom_tail_sums(const GeomParams& p);

/// Assembled gap sum for the geometric-like family. See
/// docs/geometric-validity.md for the verified parameter region.
BigInt geometric_gap_sum(const GeomParams& p);

}  // namespace frobkit
