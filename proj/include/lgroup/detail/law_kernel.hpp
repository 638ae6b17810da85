#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "lgroup/parallel.hpp"
#include "lgroup/spectrum.hpp"

namespace lgroup::detail {

// Runs pred over [0, cases); the failure count and the first failing case are
// identical for both execution modes.
template <class Pred, class Describe>
LawCheck run_law(std::string name, std::size_t cases, Exec exec, Pred pred, Describe describe) {
  std::size_t failures = 0;
  std::size_t first = std::numeric_limits<std::size_t>::max();
  if (exec == Exec::parallel) {
    const auto n = static_cast<std::int64_t>(cases);
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : failures) reduction(min : first)
    for (std::int64_t i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      if (!pred(k)) {
        ++failures;
        first = std::min(first, k);
      }
    }
  } else {
    for (std::size_t k = 0; k < cases; ++k) {
      if (!pred(k)) {
        ++failures;
        first = std::min(first, k);
      }
    }
  }
  LawCheck law{std::move(name), cases, failures, {}};
  if (failures != 0) law.first_failure = describe(first);
  return law;
}

}  // namespace lgroup::detail
