#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "octo/canonical.hpp"
#include "octo/tolerances.hpp"

namespace octo {

// Random canonical system with the origin in the central square: alpha and
// beta uniform in (0.01, 0.99), the linear coefficients of random sign with
// magnitudes log-uniform in [1e-2, 1e2].
template <class Rng>
CanonicalSystem random_central_system(Rng& rng);

struct RowSearch {
  std::map<std::string, std::vector<CanonicalSystem>> samples;  // normalized systems per table row
  long draws = 0;
  bool complete = false;  // every row has the requested number of samples
};

// Draws random central systems, normalizes them and files each under its
// table row until every row holds per_row samples or max_draws is reached.
RowSearch search_rows(std::uint64_t seed, int per_row = 1, long max_draws = 5'000'000, const Tolerances& tol = {});

}  // namespace octo
