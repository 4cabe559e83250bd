#include "frobkit/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace frobkit {

GeneratorSet::GeneratorSet(std::vector<std::uint64_t> generators)
    : gens_(std::move(generators)) {
    if (gens_.empty()) {
        throw InvalidGenerators("generator set must be nonempty");
    }
    for (std::uint64_t g : gens_) {
        if (g == 0) {
            throw InvalidGenerators("generators must be positive");
        }
    }
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    std::uint64_t g = 0;
    for (std::uint64_t v : gens_) {
        g = std::gcd(g, v);
    }
    if (g != 1) {
        throw InvalidGenerators("gcd of generators is " + std::to_string(g) +
                                ", must be 1");
    }
}

AperyTable apery_set(const GeneratorSet& generators) {
    const std::uint64_t base = generators.smallest();
    AperyTable table;
    table.base = base;
    table.m.assign(base, std::numeric_limits<std::uint64_t>::max());
    table.m[0] = 0;
    if (base == 1) {
        return table;
    }

    using Entry = std::pair<std::uint64_t, std::uint64_t>;  // (value, residue)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    queue.emplace(0, 0);
    while (!queue.empty()) {
        auto [value, residue] = queue.top();
        queue.pop();
        if (value > table.m[residue]) {
            continue;
        }
        for (std::uint64_t gen : generators.values()) {
            if (gen == base) {
                continue;  // stays in the same residue class, never smaller
            }
            if (value > std::numeric_limits<std::uint64_t>::max() - gen) {
                throw BoundOverflow("apery value exceeds 64-bit range");
            }
            std::uint64_t next_value = value + gen;
            std::uint64_t next_residue = (residue + gen % base) % base;
            if (next_value < table.m[next_residue]) {
                table.m[next_residue] = next_value;
                queue.emplace(next_value, next_residue);
            }
        }
    }
    for (std::uint64_t v : table.m) {
        if (v == std::numeric_limits<std::uint64_t>::max()) {
            // unreachable when gcd = 1; GeneratorSet guarantees that
            throw InvalidGenerators("residue class unreachable");
        }
    }
    return table;
}

BigInt g_from_apery(const AperyTable& table) {
    if (table.base == 1) {
        return BigInt(-1);
    }
    std::uint64_t largest = *std::max_element(table.m.begin(), table.m.end());
    return BigInt(largest) - table.base;
}

BigInt n_from_apery(const AperyTable& table) {
    BigInt sum = apery_power_sum(table, 1);
    BigRational n = BigRational(sum, table.base) -
                    BigRational(BigInt(table.base) - 1, 2);
    return require_nonnegative_integer(n, "gap count from apery table");
}

BigInt s_from_apery(const AperyTable& table) {
    BigInt sum1 = apery_power_sum(table, 1);
    BigInt sum2 = apery_power_sum(table, 2);
    BigRational s = BigRational(sum2, 2 * BigInt(table.base)) -
                    BigRational(sum1, 2) +
                    BigRational(BigInt(table.base) * table.base - 1, 12);
    return require_nonnegative_integer(s, "gap sum from apery table");
}

BigInt apery_power_sum(const AperyTable& table, int exponent) {
    if (exponent != 1 && exponent != 2) {
        throw InvalidParams("apery power sum exponent must be 1 or 2");
    }
    BigInt sum = 0;
    for (std::size_t i = 1; i < table.m.size(); ++i) {
        BigInt v = table.m[i];
        sum += exponent == 1 ? v : v * v;
    }
    return sum;
}

std::pair<GaussianRational, GaussianRational> weighted_apery_sums(
    const AperyTable& table, const GaussianRational& lambda) {
    if (lambda.is_zero()) {
        throw LambdaDegenerate("lambda = 0");
    }
    GaussianRational weighted;  // sum m_i lambda^{m_i}
    GaussianRational plain;     // sum lambda^{m_i}
    for (std::uint64_t m : table.m) {
        GaussianRational p = pow(lambda, m);
        weighted += GaussianRational(BigRational(BigInt(m))) * p;
        plain += p;
    }
    return {weighted, plain};
}

GaussianRational weighted_sum_from_apery(const AperyTable& table,
                                         const GaussianRational& lambda) {
    if (lambda.is_zero()) {
        throw LambdaDegenerate("lambda = 0");
    }
    GaussianRational lambda_base = pow(lambda, table.base);
    if (lambda_base.is_one()) {
        throw LambdaDegenerate("lambda^base = 1 (use the plain gap sum for lambda = 1)");
    }
    auto [weighted, plain] = weighted_apery_sums(table, lambda);
    GaussianRational denom = lambda_base - GaussianRational(1);
    GaussianRational base_term(BigRational(BigInt(table.base)));
    GaussianRational lm1 = lambda - GaussianRational(1);
    return weighted / denom -
           base_term * lambda_base * plain / (denom * denom) +
           lambda / (lm1 * lm1);
}

std::vector<std::uint64_t> gaps_from_apery(const AperyTable& table) {
    std::vector<std::uint64_t> gaps;
    for (std::size_t i = 1; i < table.m.size(); ++i) {
        for (std::uint64_t v = i; v < table.m[i]; v += table.base) {
            gaps.push_back(v);
        }
    }
    std::sort(gaps.begin(), gaps.end());
    return gaps;
}

}  // namespace frobkit
