#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frobkit/exactnum.hpp"
#include "frobkit/semigroup.hpp"

namespace frobkit {

/// Default cap on the number of DP cells the oracle may allocate.
inline constexpr std::uint64_t kDefaultCellCap = 100'000'000;

/// bits[n] = true iff n is representable. The scan stops at the first index
/// after which `base` consecutive representable values occur, so everything
/// beyond `bound` is representable too.
struct RepresentabilityMap {
    std::uint64_t bound = 0;
    std::vector<bool> bits;
};

/// Forward dynamic programming over the generators. Throws BoundOverflow
/// when the scan would exceed max_cells.
RepresentabilityMap representability_map(const GeneratorSet& generators,
                                         std::uint64_t max_cells = kDefaultCellCap);

/// Ascending list of all nonrepresentable positive integers.
std::vector<std::uint64_t> gaps(const GeneratorSet& generators,
                                std::uint64_t max_cells = kDefaultCellCap);

/// Ground-truth report by explicit enumeration: g, n, s and (when lambda is
/// given) the weighted sum computed term by term with incremental powers.
/// lambda = 1 is allowed here; lambda = 0 is not.
GapReport oracle_report(const GeneratorSet& generators,
                        const std::optional<GaussianRational>& lambda = std::nullopt,
                        std::uint64_t max_cells = kDefaultCellCap);

}  // namespace frobkit
