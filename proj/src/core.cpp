#include "fewformany/core.hpp"

#include <cmath>
#include <stdexcept>

namespace fewformany {

Problem::Problem(std::size_t m, std::size_t n, std::string descriptor,
                 double ideal_epsilon)
    : m_(m), n_(n), descriptor_(std::move(descriptor)), ideal_epsilon_(ideal_epsilon) {
  if (m_ == 0 || n_ == 0)
    throw std::invalid_argument("Problem: m and n must be positive");
  if (!(ideal_epsilon_ > 0.0))
    throw std::invalid_argument("Problem: ideal epsilon must be positive");
  ideal_.assign(m_, -ideal_epsilon_);
}

void Problem::set_ideal_epsilon(double epsilon) {
  if (!(epsilon > 0.0))
    throw std::invalid_argument("Problem: ideal epsilon must be positive");
  ideal_epsilon_ = epsilon;
  ideal_.assign(m_, -epsilon);
}

PreferenceVector::PreferenceVector(Vec weights) : weights_(std::move(weights)) {
  if (weights_.empty())
    throw std::invalid_argument("PreferenceVector: empty weights");
  double sum = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0)
      throw std::invalid_argument("PreferenceVector: entries must be finite and >= 0");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("PreferenceVector: entries must sum to 1");
}

PreferenceVector PreferenceVector::uniform(std::size_t m) {
  if (m == 0) throw std::invalid_argument("PreferenceVector: m must be positive");
  return PreferenceVector(Vec(m, 1.0 / static_cast<double>(m)));
}

bool PreferenceVector::strictly_positive() const {
  for (double w : weights_)
    if (!(w > 0.0)) return false;
  return true;
}

double SmoothingConfig::mu_at(std::size_t iteration) const {
  if (schedule == MuSchedule::kFixed) return mu_outer;
  const double mu = decay_initial * std::exp(-decay_rate * static_cast<double>(iteration));
  return mu < mu_floor ? mu_floor : mu;
}

void SmoothingConfig::validate(std::size_t m) const {
  if (!(mu_outer > 0.0))
    throw std::invalid_argument("SmoothingConfig: mu_outer must be positive");
  if (!mu_inner.empty() && mu_inner.size() != m)
    throw std::invalid_argument("SmoothingConfig: mu_inner size must match objective count");
  for (double mu : mu_inner)
    if (!(mu > 0.0))
      throw std::invalid_argument("SmoothingConfig: mu_inner entries must be positive");
  if (schedule == MuSchedule::kExponentialDecay) {
    if (!(decay_initial > 0.0) || !(mu_floor > 0.0) || decay_rate < 0.0)
      throw std::invalid_argument("SmoothingConfig: invalid decay schedule");
  }
}

Dominance dominates(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("dominates: vectors must have equal positive length");
  bool all_le = true, all_lt = true, any_lt = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) all_le = false;
    if (a[i] >= b[i]) all_lt = false;
    if (a[i] < b[i]) any_lt = true;
  }
  if (all_lt) return Dominance::kStrictlyDominates;
  if (all_le && any_lt) return Dominance::kDominates;
  return Dominance::kNone;
}

ObjectiveMatrix evaluate_matrix(const Problem& problem, const SolutionSet& set) {
  if (set.size() == 0)
    throw std::invalid_argument("evaluate_matrix: empty solution set");
  for (const Vec& x : set.solutions)
    if (x.size() != problem.dimension())
      throw std::invalid_argument("evaluate_matrix: solution dimension does not match problem");
  const std::size_t m = problem.num_objectives();
  const std::size_t k_count = set.size();
  ObjectiveMatrix f(m, k_count);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < k_count; ++k)
      f(i, k) = problem.value(i, set.solutions[k]);
  return f;
}

}  // namespace fewformany
