#include "fewformany/scalarize.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fewformany {

namespace {

void check_finite(std::span<const double> values, const char* who) {
  for (double v : values)
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(who) + ": non-finite input");
}

void check_single_dims(std::span<const double> f_col, std::span<const Vec> grads,
                       const PreferenceVector& lambda, const char* who) {
  if (f_col.empty()) throw std::invalid_argument(std::string(who) + ": empty objective vector");
  if (f_col.size() != lambda.size() || grads.size() != f_col.size())
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
  for (std::size_t i = 1; i < grads.size(); ++i)
    if (grads[i].size() != grads[0].size())
      throw std::invalid_argument(std::string(who) + ": ragged gradient table");
}

void check_set_dims(const ObjectiveMatrix& f, std::span<const Vec> grads,
                    const PreferenceVector& lambda, std::span<const double> z_star,
                    const char* who) {
  if (f.rows() == 0 || f.cols() == 0)
    throw std::invalid_argument(std::string(who) + ": empty objective matrix");
  if (lambda.size() != f.rows() || z_star.size() != f.rows())
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
  if (!grads.empty() && grads.size() != f.rows() * f.cols())
    throw std::invalid_argument(std::string(who) + ": gradient table size mismatch");
}

// Row minima with smallest-index ties, and the weighted max over objectives.
struct TchSetParts {
  double value;
  std::size_t active_i, active_k;
};

TchSetParts tch_set_parts(const ObjectiveMatrix& f, const PreferenceVector& lambda,
                          std::span<const double> z_star) {
  check_finite(std::span<const double>(f.data().data(), f.data().size()), "tch_set");
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_i = 0, best_k = 0;
  for (std::size_t i = 0; i < f.rows(); ++i) {
    double row_min = f(i, 0);
    std::size_t row_arg = 0;
    for (std::size_t k = 1; k < f.cols(); ++k) {
      if (f(i, k) < row_min) {
        row_min = f(i, k);
        row_arg = k;
      }
    }
    const double t = lambda[i] * (row_min - z_star[i]);
    if (t > best) {
      best = t;
      best_i = i;
      best_k = row_arg;
    }
  }
  return {best, best_i, best_k};
}

}  // namespace

SmoothReduceResult smooth_max(std::span<const double> values, double mu) {
  if (values.empty()) throw std::invalid_argument("smooth_max: empty input");
  if (!(mu > 0.0)) throw std::invalid_argument("smooth_max: mu must be positive");
  check_finite(values, "smooth_max");
  double vmax = values[0];
  for (double v : values) vmax = std::max(vmax, v);
  SmoothReduceResult out;
  out.softmax_weights.resize(values.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.softmax_weights[i] = std::exp((values[i] - vmax) / mu);
    sum += out.softmax_weights[i];
  }
  out.value = vmax + mu * std::log(sum);
  for (auto& w : out.softmax_weights) w /= sum;
  return out;
}

SmoothReduceResult smooth_min(std::span<const double> values, double mu) {
  if (values.empty()) throw std::invalid_argument("smooth_min: empty input");
  if (!(mu > 0.0)) throw std::invalid_argument("smooth_min: mu must be positive");
  check_finite(values, "smooth_min");
  double vmin = values[0];
  for (double v : values) vmin = std::min(vmin, v);
  SmoothReduceResult out;
  out.softmax_weights.resize(values.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.softmax_weights[i] = std::exp(-(values[i] - vmin) / mu);
    sum += out.softmax_weights[i];
  }
  out.value = vmin - mu * std::log(sum);
  for (auto& w : out.softmax_weights) w /= sum;
  return out;
}

ScalarizationOutput ls_value_grad(std::span<const double> f_col,
                                  std::span<const Vec> grads,
                                  const PreferenceVector& lambda) {
  check_single_dims(f_col, grads, lambda, "ls_value_grad");
  const std::size_t n = grads[0].size();
  ScalarizationOutput out;
  out.gradients.assign(1, Vec(n, 0.0));
  for (std::size_t i = 0; i < f_col.size(); ++i) {
    out.value += lambda[i] * f_col[i];
    for (std::size_t j = 0; j < n; ++j) out.gradients[0][j] += lambda[i] * grads[i][j];
  }
  return out;
}

ScalarizationOutput tch_value_subgrad(std::span<const double> f_col,
                                      std::span<const Vec> grads,
                                      const PreferenceVector& lambda,
                                      std::span<const double> z_star) {
  check_single_dims(f_col, grads, lambda, "tch_value_subgrad");
  if (z_star.size() != f_col.size())
    throw std::invalid_argument("tch_value_subgrad: dimension mismatch");
  check_finite(f_col, "tch_value_subgrad");
  std::size_t active = 0;
  double best = lambda[0] * (f_col[0] - z_star[0]);
  for (std::size_t i = 1; i < f_col.size(); ++i) {
    const double t = lambda[i] * (f_col[i] - z_star[i]);
    if (t > best) {
      best = t;
      active = i;
    }
  }
  const std::size_t n = grads[0].size();
  ScalarizationOutput out;
  out.value = best;
  out.active_objective = static_cast<int>(active);
  out.gradients.assign(1, Vec(n));
  for (std::size_t j = 0; j < n; ++j)
    out.gradients[0][j] = lambda[active] * grads[active][j];
  return out;
}

ScalarizationOutput stch_value_grad(std::span<const double> f_col,
                                    std::span<const Vec> grads,
                                    const PreferenceVector& lambda,
                                    std::span<const double> z_star, double mu) {
  check_single_dims(f_col, grads, lambda, "stch_value_grad");
  if (z_star.size() != f_col.size())
    throw std::invalid_argument("stch_value_grad: dimension mismatch");
  Vec terms(f_col.size());
  for (std::size_t i = 0; i < f_col.size(); ++i)
    terms[i] = lambda[i] * (f_col[i] - z_star[i]);
  const SmoothReduceResult sm = smooth_max(terms, mu);
  const std::size_t n = grads[0].size();
  ScalarizationOutput out;
  out.value = sm.value;
  out.gradients.assign(1, Vec(n, 0.0));
  for (std::size_t i = 0; i < f_col.size(); ++i) {
    const double w = sm.softmax_weights[i] * lambda[i];
    for (std::size_t j = 0; j < n; ++j) out.gradients[0][j] += w * grads[i][j];
  }
  return out;
}

double tch_set_value(const ObjectiveMatrix& f, const PreferenceVector& lambda,
                     std::span<const double> z_star) {
  check_set_dims(f, {}, lambda, z_star, "tch_set_value");
  return tch_set_parts(f, lambda, z_star).value;
}

ScalarizationOutput tch_set_value_subgrad(const ObjectiveMatrix& f,
                                          std::span<const Vec> grads,
                                          const PreferenceVector& lambda,
                                          std::span<const double> z_star) {
  check_set_dims(f, grads, lambda, z_star, "tch_set_value_subgrad");
  const TchSetParts parts = tch_set_parts(f, lambda, z_star);
  const std::size_t k_count = f.cols();
  const std::size_t n = grads[parts.active_i * k_count + parts.active_k].size();
  ScalarizationOutput out;
  out.value = parts.value;
  out.active_objective = static_cast<int>(parts.active_i);
  out.active_solution = static_cast<int>(parts.active_k);
  out.gradients.assign(k_count, Vec(n, 0.0));
  const Vec& g = grads[parts.active_i * k_count + parts.active_k];
  for (std::size_t j = 0; j < n; ++j)
    out.gradients[parts.active_k][j] = lambda[parts.active_i] * g[j];
  return out;
}

double stch_set_value(const ObjectiveMatrix& f, const PreferenceVector& lambda,
                      std::span<const double> z_star, double mu_outer,
                      std::span<const double> mu_inner) {
  check_set_dims(f, {}, lambda, z_star, "stch_set_value");
  if (!mu_inner.empty() && mu_inner.size() != f.rows())
    throw std::invalid_argument("stch_set_value: mu_inner size mismatch");
  Vec y(f.rows());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    const double mu_i = mu_inner.empty() ? mu_outer : mu_inner[i];
    y[i] = lambda[i] * (smooth_min(f.row(i), mu_i).value - z_star[i]);
  }
  return smooth_max(y, mu_outer).value;
}

ScalarizationOutput stch_set_value_grad(const ObjectiveMatrix& f,
                                        std::span<const Vec> grads,
                                        const PreferenceVector& lambda,
                                        std::span<const double> z_star,
                                        double mu_outer,
                                        std::span<const double> mu_inner) {
  check_set_dims(f, grads, lambda, z_star, "stch_set_value_grad");
  if (!mu_inner.empty() && mu_inner.size() != f.rows())
    throw std::invalid_argument("stch_set_value_grad: mu_inner size mismatch");
  const std::size_t m = f.rows();
  const std::size_t k_count = f.cols();
  const std::size_t n = grads[0].size();

  ScalarizationOutput out;
  out.has_weights = true;
  out.inner_softmax = Matrix(m, k_count);
  out.weights = Matrix(m, k_count);

  Vec y(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double mu_i = mu_inner.empty() ? mu_outer : mu_inner[i];
    const SmoothReduceResult inner = smooth_min(f.row(i), mu_i);
    for (std::size_t k = 0; k < k_count; ++k)
      out.inner_softmax(i, k) = inner.softmax_weights[k];
    y[i] = lambda[i] * (inner.value - z_star[i]);
  }
  const SmoothReduceResult outer = smooth_max(y, mu_outer);
  out.value = outer.value;
  out.outer_softmax = outer.softmax_weights;

  out.gradients.assign(k_count, Vec(n, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    const double li_oi = lambda[i] * out.outer_softmax[i];
    for (std::size_t k = 0; k < k_count; ++k) {
      const double w = li_oi * out.inner_softmax(i, k);
      out.weights(i, k) = w;
      if (w == 0.0) continue;
      const Vec& g = grads[i * k_count + k];
      Vec& acc = out.gradients[k];
      for (std::size_t j = 0; j < n; ++j) acc[j] += w * g[j];
    }
  }
  return out;
}

ScalarizationOutput stch_set_value_grad(const ObjectiveMatrix& f,
                                        std::span<const Vec> grads,
                                        const PreferenceVector& lambda,
                                        std::span<const double> z_star,
                                        const SmoothingConfig& config) {
  config.validate(f.rows());
  return stch_set_value_grad(f, grads, lambda, z_star, config.mu_outer,
                             config.mu_inner);
}

}  // namespace fewformany
