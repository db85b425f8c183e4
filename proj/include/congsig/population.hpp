#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "congsig/rng.hpp"

namespace congsig {

/// Risk types: the weight an agent puts on the optimistic end of a signal.
struct TypeSet {
  std::vector<double> omegas;  // strictly increasing, within [0, 1]

  std::size_t size() const noexcept { return omegas.size(); }
  void validate() const;
};

/// Share of the population per risk type.
struct PopulationProfile {
  std::vector<double> weights;

  std::size_t size() const noexcept { return weights.size(); }
  /// Nonnegative and summing to 1 within 1e-12.
  void validate() const;
};

/// The first K-1 shares drawn from U(1/K - eps, 1/K + eps), the last share taking the
/// remainder. Vectors with a negative remainder are rejected and redrawn.
struct UniformPerturbation {
  std::size_t type_count = 5;
  double eps = 0.15;
};

/// A finite set of profiles, one drawn per period with the given probabilities.
struct FiniteSupport {
  std::vector<PopulationProfile> profiles;
  std::vector<double> probabilities;
};

using RenewalProcess = std::variant<UniformPerturbation, FiniteSupport>;

/// Evenly spaced types 0, 1/(K-1), ..., 1. Requires count >= 2.
TypeSet uniform_type_set(std::size_t count);

void validate(const RenewalProcess& process);
/// Number of risk types the process' profiles range over.
std::size_t type_count(const RenewalProcess& process);

/// One i.i.d. draw of the population profile.
PopulationProfile sample_profile(const RenewalProcess& process, Rng& rng);

}  // namespace congsig
