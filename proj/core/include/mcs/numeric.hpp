#pragma once

#include <cstddef>
#include <span>

namespace mcs {

/// Sum of 1/x over `values`. Plain left-to-right accumulation up to 32 terms,
/// pairwise above that. Every module that needs a harmonic sum goes through
/// here so the task split, the matching latency and the oracles agree bit for bit.
double harmonic_sum(std::span<const double> values);

/// Same accumulator over the values themselves (no reciprocal).
double stable_sum(std::span<const double> values);

}  // namespace mcs
