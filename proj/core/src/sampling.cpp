#include "octo/sampling.hpp"

#include <cmath>
#include <random>

#include "octo/case_tables.hpp"
#include "octo/classifier.hpp"
#include "octo/errors.hpp"

namespace octo {

template <class Rng>
CanonicalSystem random_central_system(Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto coef = [&] {
    const double m = std::pow(10.0, -2.0 + 4.0 * unit(rng));
    return unit(rng) < 0.5 ? -m : m;
  };
  CanonicalSystem c;
  c.alpha = 0.01 + 0.98 * unit(rng);
  c.beta = 0.01 + 0.98 * unit(rng);
  c.a10 = coef();
  c.a01 = coef();
  c.b10 = coef();
  c.b01 = coef();
  return c;
}

template CanonicalSystem random_central_system<std::mt19937_64>(std::mt19937_64&);

RowSearch search_rows(std::uint64_t seed, int per_row, long max_draws, const Tolerances& tol) {
  RowSearch out;
  std::mt19937_64 rng(seed);
  const std::size_t total = case_rows().size();
  std::size_t full = 0;
  while (out.draws < max_draws && full < total) {
    ++out.draws;
    const CanonicalSystem c = random_central_system(rng);
    try {
      const NormalizedSystem n = normalize_to_family(c, tol);
      const CaseLabel label = classify_case(n, tol);
      if (label.row.empty()) continue;
      auto& bucket = out.samples[label.row];
      if (static_cast<int>(bucket.size()) >= per_row) continue;
      CanonicalSystem s = n.system;
      s.log.clear();
      bucket.push_back(s);
      if (static_cast<int>(bucket.size()) == per_row) ++full;
    } catch (const Error&) {
    }
  }
  out.complete = full == total;
  return out;
}

}  // namespace octo
