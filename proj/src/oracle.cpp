#include "frobkit/oracle.hpp"

namespace frobkit {

RepresentabilityMap representability_map(const GeneratorSet& generators,
                                         std::uint64_t max_cells) {
    const std::uint64_t base = generators.smallest();
    RepresentabilityMap map;
    map.bits.push_back(true);  // 0 is the empty combination
    if (base == 1) {
        map.bound = 0;
        return map;
    }
    std::uint64_t run = 0;  // consecutive representable values ending at n
    std::uint64_t n = 0;
    while (run < base) {
        ++n;
        if (n >= max_cells) {
            throw BoundOverflow("representability scan exceeded " +
                                std::to_string(max_cells) + " cells");
        }
        bool representable = false;
        for (std::uint64_t g : generators.values()) {
            if (g <= n && map.bits[n - g]) {
                representable = true;
                break;
            }
        }
        map.bits.push_back(representable);
        run = representable ? run + 1 : 0;
    }
    map.bound = n;
    return map;
}

std::vector<std::uint64_t> gaps(const GeneratorSet& generators,
                                std::uint64_t max_cells) {
    RepresentabilityMap map = representability_map(generators, max_cells);
    std::vector<std::uint64_t> result;
    for (std::uint64_t n = 1; n <= map.bound; ++n) {
        if (!map.bits[n]) {
            result.push_back(n);
        }
    }
    return result;
}

GapReport oracle_report(const GeneratorSet& generators,
                        const std::optional<GaussianRational>& lambda,
                        std::uint64_t max_cells) {
    if (lambda && lambda->is_zero()) {
        throw LambdaDegenerate("lambda = 0");
    }
    std::vector<std::uint64_t> gap_list = gaps(generators, max_cells);
    GapReport report;
    report.g = gap_list.empty() ? BigInt(-1) : BigInt(gap_list.back());
    report.n = BigInt(gap_list.size());
    BigInt sum = 0;
    for (std::uint64_t g : gap_list) {
        sum += g;
    }
    report.s = sum;
    if (lambda) {
        // gaps are ascending; advance lambda^n one multiplication at a time
        GaussianRational power{1};
        std::uint64_t at = 0;
        GaussianRational weighted;
        for (std::uint64_t g : gap_list) {
            for (; at < g; ++at) {
                power *= *lambda;
            }
            weighted += GaussianRational(BigRational(BigInt(g))) * power;
        }
        report.lambda = *lambda;
        report.weighted = weighted;
    }
    report.gaps = std::move(gap_list);
    return report;
}

}  // namespace frobkit
