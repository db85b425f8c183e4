#include "congsig/population.hpp"

#include <cmath>
#include <numeric>

#include "congsig/errors.hpp"

namespace congsig {

void TypeSet::validate() const {
  if (omegas.empty()) throw ValidationError("type set is empty");
  for (std::size_t k = 0; k < omegas.size(); ++k) {
    if (!(omegas[k] >= 0.0 && omegas[k] <= 1.0)) throw ValidationError("risk types must lie in [0, 1]");
    if (k > 0 && !(omegas[k] > omegas[k - 1])) throw ValidationError("risk types must be strictly increasing");
  }
}

void PopulationProfile::validate() const {
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw ValidationError("profile weights must be nonnegative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw ValidationError("profile weights must sum to 1");
}

TypeSet uniform_type_set(std::size_t count) {
  if (count < 2) throw ValidationError("a uniform type set needs at least 2 types");
  TypeSet t;
  t.omegas.resize(count);
  for (std::size_t k = 0; k < count; ++k) t.omegas[k] = static_cast<double>(k) / static_cast<double>(count - 1);
  return t;
}

void validate(const RenewalProcess& process) {
  if (const auto* u = std::get_if<UniformPerturbation>(&process)) {
    if (u->type_count < 1) throw ValidationError("renewal needs at least one type");
    const double share = 1.0 / static_cast<double>(u->type_count);
    if (!(u->eps >= 0.0 && u->eps <= share)) {
      throw ValidationError("perturbation eps must lie in [0, 1/|types|]");
    }
    return;
  }
  const auto& f = std::get<FiniteSupport>(process);
  if (f.profiles.empty() || f.profiles.size() != f.probabilities.size()) {
    throw ValidationError("finite-support renewal needs one probability per profile");
  }
  double sum = 0.0;
  for (double d : f.probabilities) {
    if (!(d > 0.0 && d <= 1.0)) throw ValidationError("support probabilities must lie in (0, 1]");
    sum += d;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw ValidationError("support probabilities must sum to 1");
  for (const auto& p : f.profiles) {
    p.validate();
    if (p.size() != f.profiles.front().size()) throw ValidationError("support profiles differ in length");
  }
}

std::size_t type_count(const RenewalProcess& process) {
  if (const auto* u = std::get_if<UniformPerturbation>(&process)) return u->type_count;
  return std::get<FiniteSupport>(process).profiles.front().size();
}

PopulationProfile sample_profile(const RenewalProcess& process, Rng& rng) {
  if (const auto* u = std::get_if<UniformPerturbation>(&process)) {
    const std::size_t k = u->type_count;
    const double share = 1.0 / static_cast<double>(k);
    PopulationProfile p;
    p.weights.resize(k);
    for (;;) {
      double sum = 0.0;
      for (std::size_t i = 0; i + 1 < k; ++i) {
        p.weights[i] = rng.uniform(share - u->eps, share + u->eps);
        sum += p.weights[i];
      }
      p.weights[k - 1] = 1.0 - sum;
      if (p.weights[k - 1] >= 0.0) return p;
    }
  }
  const auto& f = std::get<FiniteSupport>(process);
  const double x = rng.uniform01();
  double acc = 0.0;
  for (std::size_t i = 0; i < f.profiles.size(); ++i) {
    acc += f.probabilities[i];
    if (x < acc) return f.profiles[i];
  }
  return f.profiles.back();
}

}  // namespace congsig
