#include "frobkit/closedforms.hpp"

#include <array>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

namespace frobkit {

namespace {

BigRational frac(BigInt num, BigInt den) { return BigRational(std::move(num), std::move(den)); }

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) {
        throw BoundOverflow("generator exceeds 64-bit range");
    }
    return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
        throw BoundOverflow("value exceeds 64-bit range");
    }
    return a * b;
}

void append_violation(std::string& msg, const char* violation) {
    if (!msg.empty()) {
        msg += "; ";
    }
    msg += violation;
}

GaussianRational gint(const BigInt& v) { return GaussianRational(BigRational(v)); }
GaussianRational gint(std::uint64_t v) { return gint(BigInt(v)); }

}  // namespace

APParams APParams::create(std::uint64_t a, std::uint64_t d, std::uint64_t k) {
    std::string bad;
    if (a == 0 || d == 0 || k == 0) {
        append_violation(bad, "a, d, k must be positive");
    } else {
        if (std::gcd(a, d) != 1) append_violation(bad, "gcd(a, d) != 1");
        if (k < 2) append_violation(bad, "k < 2");
        if (k > a) append_violation(bad, "k > a");
    }
    if (!bad.empty()) {
        throw InvalidParams("arithmetic-progression params: " + bad);
    }
    APParams p{a, d, k, 0, 0};
    p.q = (a - 1) / (k - 1);
    p.r = (a - 1) % (k - 1);
    return p;
}

std::vector<std::uint64_t> APParams::generators() const {
    std::vector<std::uint64_t> gens;
    gens.reserve(k);
    for (std::uint64_t i = 0; i < k; ++i) {
        gens.push_back(checked_add(a, checked_mul(i, d)));
    }
    return gens;
}

AlmostAPParams AlmostAPParams::create(std::uint64_t a, std::uint64_t d,
                                      std::uint64_t h, std::uint64_t k) {
    std::string bad;
    if (a == 0 || d == 0 || h == 0 || k == 0) {
        append_violation(bad, "a, d, h, k must be positive");
    } else {
        if (std::gcd(a, d) != 1) append_violation(bad, "gcd(a, d) != 1");
        if (k < 2) append_violation(bad, "k < 2");
        if (k > a) append_violation(bad, "k > a");
    }
    if (!bad.empty()) {
        throw InvalidParams("almost-arithmetic params: " + bad);
    }
    AlmostAPParams p{a, d, h, k, 0, 0};
    p.q = (a - 1) / (k - 1);
    p.r = (a - 1) % (k - 1);
    return p;
}

std::vector<std::uint64_t> AlmostAPParams::generators() const {
    std::vector<std::uint64_t> gens;
    gens.reserve(k);
    gens.push_back(a);
    std::uint64_t ha = checked_mul(h, a);
    for (std::uint64_t i = 1; i < k; ++i) {
        gens.push_back(checked_add(ha, checked_mul(i, d)));
    }
    return gens;
}

ExtraTermParams ExtraTermParams::create(std::uint64_t a, std::uint64_t d,
                                        std::uint64_t k, std::uint64_t K) {
    std::string bad;
    if (a == 0 || d == 0 || k == 0 || K == 0) {
        append_violation(bad, "a, d, k, K must be positive");
    } else {
        if (std::gcd(a, d) != 1) append_violation(bad, "gcd(a, d) != 1");
        if (k < 2) append_violation(bad, "k < 2");
        if (K <= k) append_violation(bad, "K <= k");
        if (a < k) append_violation(bad, "a < k");
        if (a < K) append_violation(bad, "a < K (alpha would be 0)");
    }
    if (!bad.empty()) {
        throw InvalidParams("extra-term params: " + bad);
    }
    ExtraTermParams p{a, d, k, K, 0, 0, 0, 0, 0, 0};
    p.q = (K - 1) / (k - 1);
    p.r = (K - 1) % (k - 1);
    p.alpha = a / K;
    p.beta = a % K;
    if (p.beta > 0) {
        p.gamma = (p.beta - 1) / (k - 1);
        p.delta = (p.beta - 1) % (k - 1);
    }
    return p;
}

std::vector<std::uint64_t> ExtraTermParams::generators() const {
    std::vector<std::uint64_t> gens;
    gens.reserve(k + 1);
    for (std::uint64_t i = 0; i < k; ++i) {
        gens.push_back(checked_add(a, checked_mul(i, d)));
    }
    gens.push_back(checked_add(a, checked_mul(K, d)));
    return gens;
}

GeomParams GeomParams::create(std::uint64_t a, std::uint64_t k) {
    std::string bad;
    if (k < 2) append_violation(bad, "k < 2");
    if (k > 62) append_violation(bad, "k > 62");
    if (bad.empty() && a < (std::uint64_t{1} << k)) {
        append_violation(bad, "a < 2^k (q would be 0)");
    }
    if (!bad.empty()) {
        throw InvalidParams("geometric-like params: " + bad);
    }
    GeomParams p{a, k, 0, 0};
    p.q = a >> k;
    p.r = a & ((std::uint64_t{1} << k) - 1);
    return p;
}

std::vector<std::uint64_t> GeomParams::generators() const {
    std::vector<std::uint64_t> gens;
    gens.reserve(k + 2);
    gens.push_back(a);
    for (std::uint64_t i = 0; i <= k; ++i) {
        gens.push_back(checked_add(a, std::uint64_t{1} << i));
    }
    return gens;
}

// ---- two generators ----------------------------------------------------

namespace {
void check_pair(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) {
        throw InvalidParams("two-generator formulas need positive integers");
    }
    if (std::gcd(a, b) != 1) {
        throw InvalidParams("two-generator formulas need gcd(a, b) = 1");
    }
}
}  // namespace

BigInt sylvester_g2(std::uint64_t a, std::uint64_t b) {
    check_pair(a, b);
    return (BigInt(a) - 1) * (BigInt(b) - 1) - 1;
}

BigInt sylvester_n2(std::uint64_t a, std::uint64_t b) {
    check_pair(a, b);
    return require_nonnegative_integer(frac((BigInt(a) - 1) * (BigInt(b) - 1), 2),
                                       "two-generator gap count");
}

BigInt brown_shiue_s2(std::uint64_t a, std::uint64_t b) {
    check_pair(a, b);
    BigInt A(a), B(b);
    return require_nonnegative_integer(
        frac((A - 1) * (B - 1) * (2 * A * B - A - B - 1), 12),
        "two-generator gap sum");
}

// ---- arithmetic progressions --------------------------------------------

BigInt roberts_g_ap(const APParams& p) {
    return BigInt((p.a - 2) / (p.k - 1)) * p.a + BigInt(p.a - 1) * p.d;
}

BigInt grant_n_ap(const APParams& p) {
    BigInt a(p.a), d(p.d), q(p.q), r(p.r);
    return require_nonnegative_integer(frac((a - 1) * (q + d) + r * (q + 1), 2),
                                       "ap gap count");
}

BigInt ap_gap_sum(const APParams& p) {
    BigInt a(p.a), d(p.d), q(p.q), r(p.r);
    BigInt t = 2 * a * q * q * q * (a + 2 * r - 1);
    t += q * q * (a * d * (4 * a + 4 * r - 5) - d * (2 * r - 1) * (r + 1) + 6 * a * r);
    t -= q * (3 * d * r * (r + 1) - (a - 1) * ((a - 1) * (d * d - 1) + a * d * d) -
              2 * a * r * (3 * d + 1));
    t -= d * (a - r - 1) * (a - r - 1);
    return require_nonnegative_integer(frac(t, 12 * q), "ap gap sum");
}

std::pair<BigInt, BigInt> ap_apery_sums(const APParams& p) {
    BigInt a(p.a), d(p.d), q(p.q), r(p.r);
    BigRational s1 = frac(a, 2) * ((a - 1) * (q + d + 1) + r * (q + 1));
    BigRational s2 =
        frac((q + 1) * ((2 * q + 1) * (a - r - 1) + 6 * r * (q + 1)), 6) * a * a +
        frac((a - 1) * a * (2 * a - 1), 6) * d * d +
        2 * a * d * (q + 1) *
            (frac((a - r - 1) * (q * (4 * a - 4 * r - 1) - (a - r - 1)), 12 * q) +
             frac(r * (2 * a - r - 1), 2));
    return {require_nonnegative_integer(s1, "ap apery sum"),
            require_nonnegative_integer(s2, "ap apery square sum")};
}

// ---- almost-arithmetic progressions --------------------------------------

BigInt selmer_g_almost(const AlmostAPParams& p) {
    BigInt h(p.h);
    return (h * ((p.a - 2) / (p.k - 1)) + h - 1) * p.a + BigInt(p.a - 1) * p.d;
}

BigInt selmer_n_almost(const AlmostAPParams& p) {
    BigInt a(p.a), d(p.d), h(p.h), q(p.q), r(p.r);
    return require_nonnegative_integer(
        frac((a - 1) * (h * q + d + h - 1) + h * r * (q + 1), 2),
        "almost-ap gap count");
}

BigInt almost_ap_gap_sum(const AlmostAPParams& p) {
    BigInt a(p.a), d(p.d), h(p.h), q(p.q), r(p.r);
    BigInt t = 2 * h * h * a * q * q * q * (a + 2 * r - 1);
    t += q * q *
         (3 * h * h * a * (a + 3 * r - 1) +
          h * (a * d * (4 * a + 4 * r - 5) - d * (2 * r - 1) * (r + 1) -
               3 * a * (a + r - 1)));
    t += q * (h * h * a * (a + 5 * r - 1) +
              (a - 1) * (d - 1) * (2 * a * d - a - d - 1) +
              3 * h * ((a + r - 1) * (d * (a + r) - a) - 2 * d * r * r));
    t -= h * d * (a - r - 1) * (a - r - 1);
    return require_nonnegative_integer(frac(t, 12 * q), "almost-ap gap sum");
}

std::pair<BigInt, BigInt> almost_ap_apery_sums(const AlmostAPParams& p) {
    BigInt a(p.a), d(p.d), h(p.h), q(p.q), r(p.r);
    BigRational s1 = frac(a, 2) * ((a - 1) * (h * (q + 1) + d) + h * r * (q + 1));
    BigRational s2 =
        frac((q + 1) * ((2 * q + 1) * (a - r - 1) + 6 * r * (q + 1)), 6) * h * h * a * a +
        frac((a - 1) * a * (2 * a - 1), 6) * d * d +
        2 * h * a * d * (q + 1) *
            (frac((a - r - 1) * (q * (4 * a - 4 * r - 1) - (a - r - 1)), 12 * q) +
             frac(r * (2 * a - r - 1), 2));
    return {require_nonnegative_integer(s1, "almost-ap apery sum"),
            require_nonnegative_integer(s2, "almost-ap apery square sum")};
}

// ---- weighted sums over arithmetic progressions --------------------------

namespace {

struct LambdaPowers {
    GaussianRational t;   // lambda^d
    GaussianRational u;   // lambda^a
    GaussianRational v;   // lambda^{a_k}
    GaussianRational vq;  // lambda^{q a_k}
    GaussianRational z;   // lambda^{a_{r+1}}
};

LambdaPowers checked_powers(const APParams& p, const GaussianRational& lambda) {
    if (lambda.is_zero()) {
        throw LambdaDegenerate("lambda = 0");
    }
    std::uint64_t ak = checked_add(p.a, checked_mul(p.k - 1, p.d));
    LambdaPowers lp;
    lp.t = pow(lambda, p.d);
    if (lp.t.is_one()) {
        throw LambdaDegenerate("lambda^d = 1");
    }
    lp.u = pow(lambda, p.a);
    if (lp.u.is_one()) {
        throw LambdaDegenerate("lambda^a = 1");
    }
    lp.v = pow(lambda, ak);
    if (lp.v.is_one()) {
        throw LambdaDegenerate("lambda^(a+(k-1)d) = 1");
    }
    checked_mul(p.q, ak);
    lp.vq = pow(lp.v, p.q);
    lp.z = pow(lambda, checked_add(p.a, checked_mul(p.r, p.d)));
    return lp;
}

}  // namespace

std::pair<GaussianRational, GaussianRational> ap_weighted_apery_sums(
    const APParams& p, const GaussianRational& lambda) {
    LambdaPowers lp = checked_powers(p, lambda);
    const GaussianRational one{1};
    std::uint64_t ak = p.a + (p.k - 1) * p.d;
    std::uint64_t ar1 = p.a + p.r * p.d;
    GaussianRational tm1 = lp.t - one;
    GaussianRational vm1 = lp.v - one;

    // geometric blocks: one full row and its tail (the tail vanishes at r=0
    // because lambda^{a_{r+1}} = lambda^a there)
    GaussianRational row_w = lp.t * (lp.v - lp.u) / tm1;
    GaussianRational row_mw =
        lp.t * ((gint(ak) * lp.v - gint(p.a) * lp.u) / tm1 -
                gint(p.d) * (lp.v - lp.u) / (tm1 * tm1));
    GaussianRational rows = (lp.vq - one) / vm1;  // sum_{j=0}^{q-1} v^j
    GaussianRational rows_j = gint(p.q) * lp.vq / vm1 -
                              lp.v * (lp.vq - one) / (vm1 * vm1);  // sum j v^j
    GaussianRational tail_w = lp.t * (lp.z - lp.u) / tm1;
    GaussianRational tail_mw =
        lp.t * ((gint(ar1) * lp.z - gint(p.a) * lp.u) / tm1 -
                gint(p.d) * (lp.z - lp.u) / (tm1 * tm1));

    GaussianRational sum_mw = row_mw * rows + gint(ak) * row_w * rows_j +
                              lp.vq * tail_mw +
                              gint(BigInt(p.q) * ak) * lp.vq * tail_w;
    GaussianRational sum_w = row_w * rows + lp.vq * tail_w;
    return {sum_mw, sum_w};
}

GaussianRational ap_weighted_gap_sum(const APParams& p,
                                     const GaussianRational& lambda) {
    auto [sum_mw, sum_w] = ap_weighted_apery_sums(p, lambda);
    const GaussianRational one{1};
    GaussianRational u = pow(lambda, p.a);
    GaussianRational um1 = u - one;
    GaussianRational lm1 = lambda - one;
    return sum_mw / um1 - gint(p.a) * u * (one + sum_w) / (um1 * um1) +
           lambda / (lm1 * lm1);
}

// ---- progression with an extra term --------------------------------------

ExtraTermParams decompose_extra(std::uint64_t a, std::uint64_t d,
                                std::uint64_t k, std::uint64_t K) {
    return ExtraTermParams::create(a, d, k, K);
}

std::pair<BigInt, BigInt> extra_block_sums(const ExtraTermParams& p) {
    BigInt a(p.a), d(p.d), q(p.q), r(p.r), K(p.K);
    BigRational s1 = frac((q + 1) * (K - 1 + r), 2) * a + frac((K - 1) * K, 2) * d;
    BigRational s2 =
        frac((q + 1) * ((2 * q + 1) * (K - r - 1) + 6 * r * (q + 1)), 6) * a * a +
        frac((K - 1) * K * (2 * K - 1), 6) * d * d +
        2 * a * d * (q + 1) *
            (frac((K - r - 1) * (q * (4 * K - 4 * r - 1) - (K - r - 1)), 12 * q) +
             frac(r * (2 * K - r - 1), 2));
    return {require_nonnegative_integer(s1, "extra-term block sum"),
            require_nonnegative_integer(s2, "extra-term block square sum")};
}

std::pair<BigInt, BigInt> extra_tail_sums(const ExtraTermParams& p) {
    if (p.beta == 0) {
        return {BigInt(0), BigInt(0)};
    }
    BigInt a(p.a), d(p.d), k(p.k), K(p.K);
    BigInt alpha(p.alpha), beta(p.beta), gamma(p.gamma), delta(p.delta);
    BigRational t1 = (alpha * beta + frac((beta + delta - 1) * (gamma + 1), 2)) * a +
                     (alpha * beta * K + frac((beta - delta - 1) * (beta - delta), 2) +
                      frac(delta * (2 * beta - delta - 1), 2)) *
                         d;
    BigInt T1 = require_nonnegative_integer(t1, "extra-term tail sum");
    BigRational t3 =
        (frac((beta - delta - 1) * (gamma + 1) * (2 * gamma + 1), 6) +
         delta * (gamma + 1) * (gamma + 1)) *
            a * a +
        (frac((beta - delta - 1) * (4 * (beta - delta) - k), 6) +
         delta * (2 * beta - delta - 1)) *
            (gamma + 1) * a * d +
        frac((beta - 1) * beta * (2 * beta - 1), 6) * d * d;
    BigInt T3 = require_nonnegative_integer(t3, "extra-term tail cross sum");
    BigInt ak1 = a + K * d;
    BigInt T2 = beta * (alpha * ak1) * (alpha * ak1) +
                2 * alpha * ak1 * (T1 - alpha * beta * ak1) + T3;
    if (T2 < 0) {
        throw IntegralityViolation("extra-term tail square sum: negative");
    }
    return {T1, T2};
}

BigInt extra_term_gap_sum(const ExtraTermParams& p) {
    auto [S1, S2] = extra_block_sums(p);
    auto [T1, T2] = extra_tail_sums(p);
    BigInt a(p.a), d(p.d), K(p.K), alpha(p.alpha);
    BigInt aKd = a + K * d;
    BigRational s =
        frac(alpha * (alpha - 1) * aKd * K * (2 * (alpha - 2) * a + (2 * alpha - 1) * K * d),
             12 * a) +
        frac(alpha * ((alpha - 2) * a + (alpha - 1) * K * d), 2 * a) * S1 +
        frac(alpha, 2 * a) * S2 - frac(T1, 2) + frac(T2, 2 * a) +
        frac(a * a - 1, 12);
    return require_nonnegative_integer(s, "extra-term gap sum");
}

namespace {

struct QuadTable {
    std::uint64_t divisor;
    // coefficients of a^4, a^3, a^2, a, 1 per residue of a mod c
    std::array<std::array<std::int64_t, 5>, 6> rows;
};

constexpr QuadTable kQuad4{96,
                           {{{1, 8, 26, 16, 0},
                             {1, 8, 11, -38, 18},
                             {1, 8, 14, -32, 24},
                             {1, 8, 11, -50, 42},
                             {},
                             {}}}};
constexpr QuadTable kQuad5{150,
                           {{{1, 13, 65, 35, 0},
                             {1, 13, 41, -85, 30},
                             {1, 13, 41, -97, 60},
                             {1, 13, 35, -139, 120},
                             {1, 13, 53, -19, 90},
                             {}}}};
constexpr QuadTable kQuad6{216,
                           {{{1, 21, 189, 126, 0},
                             {1, 21, 150, -169, -3},
                             {1, 21, 141, -290, 48},
                             {1, 21, 126, -441, 189},
                             {1, 21, 141, -322, 240},
                             {1, 21, 150, -281, 237}}}};

const QuadTable& quad_table(std::uint64_t c) {
    switch (c) {
        case 4: return kQuad4;
        case 5: return kQuad5;
        case 6: return kQuad6;
        default: throw InvalidParams("quadruple family: c must be 4, 5 or 6");
    }
}

void check_quadruple(std::uint64_t a, std::uint64_t c) {
    quad_table(c);
    if (a < 4) {
        throw InvalidParams("quadruple family: a must be at least 4");
    }
}

}  // namespace

BigInt quadruple_gap_sum(std::uint64_t a, std::uint64_t c) {
    check_quadruple(a, c);
    const QuadTable& table = quad_table(c);
    const auto& row = table.rows[a % c];
    BigInt A(a);
    BigInt value = row[0] * A * A * A * A + row[1] * A * A * A + row[2] * A * A +
                   row[3] * A + row[4];
    return require_nonnegative_integer(frac(value, table.divisor),
                                       "quadruple gap sum");
}

BigInt dm_g_quadruple(std::uint64_t a, std::uint64_t c) {
    check_quadruple(a, c);
    BigInt A(a);
    switch (c) {
        case 4:
            return (A + 1) * (a / 4) + (a + 1) / 4 + 2 * BigInt((a + 2) / 4) - 1;
        case 5:
            return A * ((a + 1) / 5) + a / 5 + (a + 1) / 5 + (a + 2) / 5 +
                   2 * BigInt((a + 3) / 5) - 1;
        default:
            return A * (a / 6) + 2 * BigInt(a / 6) + 2 * BigInt((a + 1) / 6) +
                   5 * BigInt((a + 2) / 6) + (a + 3) / 6 + (a + 4) / 6 +
                   (a + 5) / 6 - 1;
    }
}

// ---- geometric-like family ------------------------------------------------

std::uint64_t factorial_two_exponent(std::uint64_t n) {
    std::uint64_t sum = 0;
    while (n != 0) {
        n >>= 1;
        sum += n;
    }
    return sum;
}

std::uint64_t binary_ones(std::uint64_t n) {
    return static_cast<std::uint64_t>(std::popcount(n));
}

std::pair<BigInt, BigInt> geom_tail_sums(const GeomParams& p) {
    if (p.r == 0) {
        return {BigInt(0), BigInt(0)};
    }
    BigInt a(p.a);
    BigInt ak2 = a + p.power();  // a + 2^k, the last generator
    // tail elements: q*ak2 + (s2(j) a + j) for j = 0..r-1
    BigInt ones_sum = 0;   // sum of s2(j)
    BigInt linear_sum = 0; // sum of j
    BigInt elem_sum = 0;   // sum of (s2(j) a + j)
    BigInt elem_sq = 0;    // sum of (s2(j) a + j)^2
    for (std::uint64_t j = 1; j < p.r; ++j) {
        BigInt s2(binary_ones(j));
        BigInt elem = s2 * a + j;
        ones_sum += s2;
        linear_sum += j;
        elem_sum += elem;
        elem_sq += elem * elem;
    }
    BigInt q(p.q), r(p.r);
    BigInt T1 = r * q * ak2 + ones_sum * a + linear_sum;
    BigInt T2 = r * q * q * ak2 * ak2 + 2 * q * ak2 * elem_sum + elem_sq;
    return {T1, T2};
}

BigInt geometric_gap_sum(const GeomParams& p) {
    BigInt a(p.a), q(p.q), k(p.k);
    BigInt P(p.power());
    BigInt pow_km1 = P / 2;  // 2^{k-1}
    BigInt pow_km2 = P / 4;  // 2^{k-2}, k >= 2

    // sums over the q full lines
    BigInt A = 3 * k * (2 * q + k - 1) + 2 * (q - 1) * (2 * q - 1);
    BigInt B = P * (4 * q * q + 3 * k * q - 3 * q + 2) - 3 * (q + k);
    BigInt C = 2 * P * P * q * q - 3 * P * q + 1;
    BigInt sum_m = pow_km1 * q * ((q + k - 1) * a + P * q - 1);
    BigInt sum_m2 = require_integer(frac(pow_km2 * q, 3) * (A * a * a + 2 * B * a + 2 * C),
                                    "geometric square sum");

    auto [T1, T2] = geom_tail_sums(p);
    sum_m += T1;
    sum_m2 += T2;

    BigRational s = frac(sum_m2, 2 * a) - frac(sum_m, 2) + frac(a * a - 1, 12);
    return require_nonnegative_integer(s, "geometric gap sum");
}

}  // namespace frobkit
