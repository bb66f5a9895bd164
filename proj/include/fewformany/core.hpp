#ifndef FEWFORMANY_CORE_HPP
#define FEWFORMANY_CORE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace fewformany {

using Vec = std::vector<double>;

/// Dense row-major matrix. Objective matrices store one row per objective
/// and one column per solution: F(i, k) = f_i(x^(k)).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  double& operator()(std::size_t i, std::size_t k) { return data_[i * cols_ + k]; }
  double operator()(std::size_t i, std::size_t k) const { return data_[i * cols_ + k]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(data_.data() + i * cols_, cols_);
  }
  std::span<double> row(std::size_t i) {
    return std::span<double>(data_.data() + i * cols_, cols_);
  }

  const std::vector<double>& data() const { return data_; }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

using ObjectiveMatrix = Matrix;

/// A bundle of m differentiable objectives over R^n. Implementations must be
/// immutable after construction; value/gradient are safe to call from
/// multiple threads concurrently.
class Problem {
 public:
  virtual ~Problem() = default;

  std::size_t num_objectives() const { return m_; }
  std::size_t dimension() const { return n_; }

  virtual double value(std::size_t i, std::span<const double> x) const = 0;
  virtual void gradient(std::size_t i, std::span<const double> x,
                        std::span<double> out) const = 0;

  /// Combined evaluation; overridden where value and gradient share work.
  virtual double value_and_gradient(std::size_t i, std::span<const double> x,
                                    std::span<double> grad_out) const {
    gradient(i, x, grad_out);
    return value(i, x);
  }

  /// Utopian reference z*. Every built-in benchmark has objective lower
  /// bound 0, so z*_i = -epsilon with a small positive epsilon.
  const Vec& ideal_point() const { return ideal_; }
  double ideal_epsilon() const { return ideal_epsilon_; }
  void set_ideal_epsilon(double epsilon);

  /// Human-readable provenance (generator name, shape, seed).
  const std::string& descriptor() const { return descriptor_; }

 protected:
  Problem(std::size_t m, std::size_t n, std::string descriptor,
          double ideal_epsilon = 0.1);

 private:
  std::size_t m_, n_;
  std::string descriptor_;
  double ideal_epsilon_;
  Vec ideal_;
};

/// K candidate solutions of identical dimension. When flattened (traces,
/// finite-difference sweeps) the order is solution-major: all coordinates of
/// solution 0, then solution 1, and so on.
struct SolutionSet {
  std::vector<Vec> solutions;

  std::size_t size() const { return solutions.size(); }
  std::size_t dimension() const { return solutions.empty() ? 0 : solutions.front().size(); }
};

/// Simplex weights over the m objectives. Entries are validated to be
/// nonnegative and to sum to 1 within 1e-12 at construction.
class PreferenceVector {
 public:
  explicit PreferenceVector(Vec weights);
  static PreferenceVector uniform(std::size_t m);

  const Vec& weights() const { return weights_; }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::size_t size() const { return weights_.size(); }
  bool strictly_positive() const;

 private:
  Vec weights_;
};

enum class MuSchedule { kFixed, kExponentialDecay };

/// Smoothing parameters for the nested log-sum-exp scalarization: one outer
/// parameter and optional per-objective inner parameters (empty means all
/// equal to mu_outer). The exponential-decay schedule follows
/// mu(t) = max(floor, initial * exp(-rate * t)).
struct SmoothingConfig {
  double mu_outer = 0.1;
  Vec mu_inner;  // empty => shared mu_outer
  MuSchedule schedule = MuSchedule::kFixed;
  double decay_initial = 1.0;
  double decay_rate = 3e-3;
  double mu_floor = 0.05;

  double mu_at(std::size_t iteration) const;
  double inner_mu(std::size_t i) const {
    return mu_inner.empty() ? mu_outer : mu_inner[i];
  }
  void validate(std::size_t m) const;
};

/// Value and per-solution gradients of a scalarization. For the smooth set
/// scalarization the weight decomposition is populated: weights(i, k) is the
/// total multiplier of grad f_i(x^(k)), split into the preference entry, the
/// outer softmax over objectives, and the inner softmax over solutions.
struct ScalarizationOutput {
  double value = 0.0;
  std::vector<Vec> gradients;

  bool has_weights = false;
  Matrix weights;        // m x K, lambda_i * outer_i * inner_ik
  Matrix inner_softmax;  // m x K, rows sum to 1
  Vec outer_softmax;     // length m, sums to 1

  int active_objective = -1;  // max-type scalarizations
  int active_solution = -1;   // set scalarizations
};

enum class Dominance { kNone, kDominates, kStrictlyDominates };

/// Pareto dominance of objective vector a over b (minimization).
Dominance dominates(std::span<const double> a, std::span<const double> b);

/// Batched evaluation: F(i, k) = f_i(x^(k)). Throws on dimension mismatch.
ObjectiveMatrix evaluate_matrix(const Problem& problem, const SolutionSet& set);

}  // namespace fewformany

#endif  // FEWFORMANY_CORE_HPP
