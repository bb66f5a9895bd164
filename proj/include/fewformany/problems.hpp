#ifndef FEWFORMANY_PROBLEMS_HPP
#define FEWFORMANY_PROBLEMS_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "fewformany/core.hpp"
#include "fewformany/rng.hpp"

namespace fewformany {

struct QuadraticProblemSpec {
  std::size_t m = 128;
  std::size_t n = 10;
  std::uint64_t seed = 0;
  double ideal_epsilon = 0.1;
};

struct MixedRegressionSpec {
  std::size_t m = 1000;    // data points, one objective each
  std::size_t d = 10;      // feature dimension
  std::size_t k_true = 5;  // ground-truth model count
  double sigma = 0.1;      // noise standard deviation
  double beta = 0.01;      // ridge penalty
  std::uint64_t seed = 0;
  double ideal_epsilon = 0.1;
  std::size_t d_hidden = 10;  // nonlinear family only
};

/// m independent strongly convex quadratics f_i(x) = (x - c_i)^T A_i (x - c_i)
/// with A_i = B_i^T B_i + 0.1 I (B_i standard normal) and centers c_i standard
/// normal, so every objective has minimum value exactly 0 at its center.
class QuadraticProblem : public Problem {
 public:
  explicit QuadraticProblem(const QuadraticProblemSpec& spec);

  double value(std::size_t i, std::span<const double> x) const override;
  void gradient(std::size_t i, std::span<const double> x,
                std::span<double> out) const override;
  double value_and_gradient(std::size_t i, std::span<const double> x,
                            std::span<double> grad_out) const override;

  std::span<const double> center(std::size_t i) const;
  std::span<const double> quadratic_form(std::size_t i) const;  // n*n row-major
  const QuadraticProblemSpec& spec() const { return spec_; }

 private:
  QuadraticProblemSpec spec_;
  std::vector<double> forms_;    // m * n * n
  std::vector<double> centers_;  // m * n
};

/// Noisy mixed linear regression: f_i(x) = 0.5 (a_i . x - b_i)^2
/// + (beta/2) |x|^2 over x in R^d, with targets b_i = a_i . xhat_{c_i} + eps_i
/// generated from k_true random ground-truth models.
class MixedLinearProblem : public Problem {
 public:
  explicit MixedLinearProblem(const MixedRegressionSpec& spec);

  double value(std::size_t i, std::span<const double> x) const override;
  void gradient(std::size_t i, std::span<const double> x,
                std::span<double> out) const override;
  double value_and_gradient(std::size_t i, std::span<const double> x,
                            std::span<double> grad_out) const override;

  std::span<const double> feature(std::size_t i) const;
  double target(std::size_t i) const { return targets_[i]; }
  const std::vector<Vec>& ground_truths() const { return ground_truths_; }
  std::size_t assignment(std::size_t i) const { return assignments_[i]; }
  const MixedRegressionSpec& spec() const { return spec_; }

 private:
  MixedRegressionSpec spec_;
  std::vector<Vec> ground_truths_;
  std::vector<double> features_;  // m * d
  std::vector<double> targets_;   // m
  std::vector<std::size_t> assignments_;
};

/// Noisy mixed nonlinear regression with a one-hidden-layer network
/// psi(a; W, p, q, o) = p . relu(W a + q) + o. The decision vector flattens
/// the parameters as [W row-major, p, q, o]; relu'(0) is taken as 0.
class MixedNonlinearProblem : public Problem {
 public:
  explicit MixedNonlinearProblem(const MixedRegressionSpec& spec);

  double value(std::size_t i, std::span<const double> x) const override;
  void gradient(std::size_t i, std::span<const double> x,
                std::span<double> out) const override;
  double value_and_gradient(std::size_t i, std::span<const double> x,
                            std::span<double> grad_out) const override;

  std::size_t d_input() const { return spec_.d; }
  std::size_t d_hidden() const { return spec_.d_hidden; }
  static std::size_t param_count(std::size_t d_input, std::size_t d_hidden) {
    return d_hidden * d_input + 2 * d_hidden + 1;
  }

  /// Network forward pass for an arbitrary parameter vector.
  double forward(std::span<const double> a, std::span<const double> params) const;

  std::span<const double> feature(std::size_t i) const;
  double target(std::size_t i) const { return targets_[i]; }
  const std::vector<Vec>& ground_truths() const { return ground_truths_; }
  std::size_t assignment(std::size_t i) const { return assignments_[i]; }
  const MixedRegressionSpec& spec() const { return spec_; }

 private:
  MixedRegressionSpec spec_;
  std::vector<Vec> ground_truths_;
  std::vector<double> features_;  // m * d
  std::vector<double> targets_;
  std::vector<std::size_t> assignments_;
};

std::shared_ptr<Problem> gen_quadratics(const QuadraticProblemSpec& spec);
std::shared_ptr<Problem> gen_mixed_linear(const MixedRegressionSpec& spec);
std::shared_ptr<Problem> gen_mixed_nonlinear(const MixedRegressionSpec& spec);

/// Preference vectors sampled from Dirichlet(concentration * ones(m)).
/// An infinite concentration is the sentinel for the exact uniform vector.
std::vector<PreferenceVector> sample_preferences(std::size_t m, std::size_t count,
                                                 double dirichlet_concentration,
                                                 std::uint64_t seed);

/// JSON description sufficient to regenerate a benchmark problem.
nlohmann::json problem_to_json(const Problem& problem);
std::shared_ptr<Problem> problem_from_json(const nlohmann::json& j);

/// Raw (a, b) data rows for the regression families; throws for quadratics.
void export_problem_data_csv(const Problem& problem, const std::string& path);

}  // namespace fewformany

#endif  // FEWFORMANY_PROBLEMS_HPP
