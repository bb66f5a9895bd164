#ifndef FEWFORMANY_SCALARIZE_HPP
#define FEWFORMANY_SCALARIZE_HPP

#include <span>

#include "fewformany/core.hpp"

namespace fewformany {

/// Result of a stabilized log-sum-exp reduction: the smooth extremum and the
/// softmax weight of each input (nonnegative, summing to 1).
struct SmoothReduceResult {
  double value = 0.0;
  Vec softmax_weights;
};

/// Smooth maximum mu * log(sum_i exp(v_i / mu)), computed with max-shift
/// stabilization. Satisfies max(v) <= value <= max(v) + mu * log(n).
SmoothReduceResult smooth_max(std::span<const double> values, double mu);

/// Smooth minimum -mu * log(sum_i exp(-v_i / mu)), computed with min-shift
/// stabilization. Satisfies min(v) - mu * log(n) <= value <= min(v).
SmoothReduceResult smooth_min(std::span<const double> values, double mu);

// Single-solution scalarizations. f_col holds the m objective values at one
// point, grads the m gradients at the same point.

/// Linear scalarization: sum_i lambda_i f_i.
ScalarizationOutput ls_value_grad(std::span<const double> f_col,
                                  std::span<const Vec> grads,
                                  const PreferenceVector& lambda);

/// Tchebycheff scalarization max_i lambda_i (f_i - z*_i). Nonsmooth; the
/// returned gradient is the subgradient of the active term, ties broken to
/// the smallest objective index.
ScalarizationOutput tch_value_subgrad(std::span<const double> f_col,
                                      std::span<const Vec> grads,
                                      const PreferenceVector& lambda,
                                      std::span<const double> z_star);

/// Smooth Tchebycheff scalarization mu * log sum_i exp(lambda_i (f_i - z*_i) / mu).
ScalarizationOutput stch_value_grad(std::span<const double> f_col,
                                    std::span<const Vec> grads,
                                    const PreferenceVector& lambda,
                                    std::span<const double> z_star, double mu);

// Set scalarizations over an m x K objective matrix. Gradient tables are
// row-major by objective: grads[i * K + k] = grad f_i(x^(k)).

double tch_set_value(const ObjectiveMatrix& f, const PreferenceVector& lambda,
                     std::span<const double> z_star);

/// Tchebycheff set scalarization max_i lambda_i (min_k F(i,k) - z*_i).
/// The subgradient is lambda_{i*} grad f_{i*}(x^(k*)) placed on the active
/// solution k*, zero elsewhere; both argext ties break to the smallest index.
ScalarizationOutput tch_set_value_subgrad(const ObjectiveMatrix& f,
                                          std::span<const Vec> grads,
                                          const PreferenceVector& lambda,
                                          std::span<const double> z_star);

double stch_set_value(const ObjectiveMatrix& f, const PreferenceVector& lambda,
                      std::span<const double> z_star, double mu_outer,
                      std::span<const double> mu_inner = {});

/// Smooth Tchebycheff set scalarization: outer smooth max over objectives of
/// lambda_i (smooth min over solutions of f_i - z*_i), with per-objective
/// inner parameters. Gradients follow the chain rule,
///   grad_{x^(k)} = sum_i w_ik grad f_i(x^(k)),
///   w_ik = lambda_i * outer_softmax_i * inner_softmax_ik,
/// and the full decomposition is returned in the output.
ScalarizationOutput stch_set_value_grad(const ObjectiveMatrix& f,
                                        std::span<const Vec> grads,
                                        const PreferenceVector& lambda,
                                        std::span<const double> z_star,
                                        double mu_outer,
                                        std::span<const double> mu_inner = {});

ScalarizationOutput stch_set_value_grad(const ObjectiveMatrix& f,
                                        std::span<const Vec> grads,
                                        const PreferenceVector& lambda,
                                        std::span<const double> z_star,
                                        const SmoothingConfig& config);

}  // namespace fewformany

#endif  // FEWFORMANY_SCALARIZE_HPP
