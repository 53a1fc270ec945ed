#include "mcs/numeric.hpp"

namespace mcs {

namespace {

constexpr std::size_t kPairwiseThreshold = 32;

template <typename Term>
double accumulate(std::span<const double> values, Term term) {
  if (values.size() <= kPairwiseThreshold) {
    double sum = 0.0;
    for (double v : values) sum += term(v);
    return sum;
  }
  const std::size_t half = values.size() / 2;
  return accumulate(values.first(half), term) + accumulate(values.subspan(half), term);
}

}  // namespace

double harmonic_sum(std::span<const double> values) {
  return accumulate(values, [](double v) { return 1.0 / v; });
}

double stable_sum(std::span<const double> values) {
  return accumulate(values, [](double v) { return v; });
}

}  // namespace mcs
