/*
 * Copyright 2026 The Synbench Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Maximum-likelihood fitters: logistic and gamma (inverse link) GLMs via
// IRLS/Newton, proportional-odds cumulative logit and baseline-category
// multinomial logit via Newton with step halving. Standard errors come from
// the inverse (observed or expected) information at the MLE.

#ifndef SYNBENCH_GLM_HPP
#define SYNBENCH_GLM_HPP

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "synbench/errors.hpp"
#include "synbench/tabular.hpp"

namespace synbench::glm {

constexpr int kMaxIterations = 100;
constexpr double kRelTol = 1e-10;

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// log(1 + e^x) without overflow
inline double log1pexp(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

// Design matrix: intercept + continuous columns as-is + categorical columns
// dummy-coded against their first level. Labels name each non-intercept
// column ("age", "stage=II", ...).
struct Design {
  Eigen::MatrixXd X;
  std::vector<std::string> labels;  // size X.cols()-1 when intercept present
};

inline Design build_design(const Dataset& data, const std::vector<std::string>& covariates,
                           bool intercept = true) {
  const std::size_t n = data.rows();
  std::size_t p = intercept ? 1 : 0;
  for (const auto& name : covariates) {
    const auto& kind = data.schema().columns[data.schema().index_of(name)].kind;
    p += kind.is_categorical() ? kind.cardinality() - 1 : 1;
  }
  Design d;
  d.X.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  std::size_t col = 0;
  if (intercept) {
    d.X.col(0).setOnes();
    col = 1;
  }
  for (const auto& name : covariates) {
    const std::size_t j = data.schema().index_of(name);
    const auto& kind = data.schema().columns[j].kind;
    if (kind.is_categorical()) {
      const auto& cells = data.categorical(j);
      for (std::size_t level = 1; level < kind.cardinality(); ++level) {
        for (std::size_t i = 0; i < n; ++i) {
          d.X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(col)) =
              (cells[i] == static_cast<std::int32_t>(level)) ? 1.0 : 0.0;
        }
        d.labels.push_back(name + "=" + kind.levels[level]);
        ++col;
      }
    } else {
      const auto& cells = data.continuous(j);
      for (std::size_t i = 0; i < n; ++i) {
        d.X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(col)) = cells[i];
      }
      d.labels.push_back(name);
      ++col;
    }
  }
  return d;
}

struct FitResult {
  Eigen::VectorXd coef;
  Eigen::VectorXd se;
  double loglik = std::numeric_limits<double>::quiet_NaN();
  int iterations = 0;
  bool converged = false;

  bool ok() const { return converged && coef.allFinite() && se.allFinite(); }
};

struct OlsResult {
  Eigen::VectorXd coef;
  std::vector<double> residuals;
  bool ok = false;
};

inline OlsResult fit_ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  OlsResult r;
  Eigen::MatrixXd xtx = X.transpose() * X;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(xtx);
  if (ldlt.info() != Eigen::Success) return r;
  r.coef = ldlt.solve(X.transpose() * y);
  if (!r.coef.allFinite()) return r;
  Eigen::VectorXd resid = y - X * r.coef;
  r.residuals.assign(resid.data(), resid.data() + resid.size());
  r.ok = true;
  return r;
}

// Binomial logistic regression, Newton-Raphson with step halving.
// SEs are sqrt of the diagonal of the inverse observed information.
inline FitResult fit_logistic(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  const Eigen::Index n = X.rows();
  const Eigen::Index p = X.cols();
  FitResult r;
  r.coef = Eigen::VectorXd::Zero(p);
  r.se = Eigen::VectorXd::Constant(p, std::numeric_limits<double>::quiet_NaN());
  if (n < p) return r;

  auto loglik = [&](const Eigen::VectorXd& beta) {
    const Eigen::VectorXd eta = X * beta;
    double ll = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) ll += y[i] * eta[i] - log1pexp(eta[i]);
    return ll;
  };

  double ll = loglik(r.coef);
  Eigen::MatrixXd hess(p, p);
  for (int iter = 1; iter <= kMaxIterations; ++iter) {
    r.iterations = iter;
    const Eigen::VectorXd eta = X * r.coef;
    Eigen::VectorXd mu(n), w(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      mu[i] = sigmoid(eta[i]);
      w[i] = mu[i] * (1.0 - mu[i]);
    }
    const Eigen::VectorXd grad = X.transpose() * (y - mu);
    hess = X.transpose() * w.asDiagonal() * X;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(hess);
    if (ldlt.info() != Eigen::Success) return r;
    Eigen::VectorXd step = ldlt.solve(grad);
    if (!step.allFinite()) return r;

    double scale = 1.0;
    double ll_new = loglik(r.coef + step);
    int halvings = 0;
    while (!(ll_new >= ll) && halvings < 30) {
      scale *= 0.5;
      ll_new = loglik(r.coef + scale * step);
      ++halvings;
    }
    if (!(ll_new >= ll)) return r;
    r.coef += scale * step;
    const double rel = std::fabs(ll_new - ll) / (std::fabs(ll_new) + 1e-300);
    ll = ll_new;
    if (rel < kRelTol) {
      r.converged = true;
      break;
    }
  }
  if (!r.converged) return r;
  r.loglik = ll;

  const Eigen::VectorXd eta = X * r.coef;
  Eigen::VectorXd w(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double mu = sigmoid(eta[i]);
    w[i] = mu * (1.0 - mu);
  }
  hess = X.transpose() * w.asDiagonal() * X;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(hess);
  if (ldlt.info() != Eigen::Success) {
    r.converged = false;
    return r;
  }
  const Eigen::MatrixXd cov = ldlt.solve(Eigen::MatrixXd::Identity(p, p));
  for (Eigen::Index j = 0; j < p; ++j) r.se[j] = std::sqrt(std::max(cov(j, j), 0.0));
  return r;
}

// Gamma GLM with inverse link eta = 1/mu, fitted by IRLS with step halving to
// keep fitted means positive. Coefficient covariance is the inverse expected
// information scaled by the Pearson dispersion estimate.
inline FitResult fit_gamma_inverse(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  const Eigen::Index n = X.rows();
  const Eigen::Index p = X.cols();
  FitResult r;
  r.coef = Eigen::VectorXd::Zero(p);
  r.se = Eigen::VectorXd::Constant(p, std::numeric_limits<double>::quiet_NaN());
  if (n <= p) return r;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(y[i] > 0.0)) return r;
  }

  // Shape-free profile of the gamma log likelihood; its maximiser equals the
  // coefficient MLE for any fixed shape.
  auto pseudo_ll = [&](const Eigen::VectorXd& beta, bool& valid) {
    const Eigen::VectorXd eta = X * beta;
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!(eta[i] > 0.0)) {
        valid = false;
        return -std::numeric_limits<double>::infinity();
      }
      const double mu = 1.0 / eta[i];
      s += -y[i] / mu - std::log(mu);
    }
    valid = true;
    return s;
  };

  // init from the saturated-ish start mu_i = y_i smoothed toward the mean
  const double ybar = y.mean();
  Eigen::VectorXd eta0(n);
  for (Eigen::Index i = 0; i < n; ++i) eta0[i] = 1.0 / (0.5 * (y[i] + ybar));
  {
    OlsResult init = fit_ols(X, eta0);
    if (!init.ok) return r;
    r.coef = init.coef;
  }
  bool valid = false;
  double ll = pseudo_ll(r.coef, valid);
  if (!valid) {
    // fall back to intercept-only start
    r.coef.setZero();
    r.coef[0] = 1.0 / ybar;
    ll = pseudo_ll(r.coef, valid);
    if (!valid) return r;
  }

  for (int iter = 1; iter <= kMaxIterations; ++iter) {
    r.iterations = iter;
    const Eigen::VectorXd eta = X * r.coef;
    Eigen::VectorXd w(n), z(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double mu = 1.0 / eta[i];
      // weight (dmu/deta)^2 / V(mu) = mu^2; working response z = eta - (y - mu)/mu^2
      w[i] = mu * mu;
      z[i] = eta[i] - (y[i] - mu) / (mu * mu);
    }
    Eigen::MatrixXd xtwx = X.transpose() * w.asDiagonal() * X;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(xtwx);
    if (ldlt.info() != Eigen::Success) return r;
    Eigen::VectorXd target = ldlt.solve(X.transpose() * (w.asDiagonal() * z));
    if (!target.allFinite()) return r;
    Eigen::VectorXd step = target - r.coef;

    double scale = 1.0;
    bool ok = false;
    double ll_new = pseudo_ll(r.coef + step, ok);
    int halvings = 0;
    while ((!ok || !(ll_new >= ll)) && halvings < 30) {
      scale *= 0.5;
      ll_new = pseudo_ll(r.coef + scale * step, ok);
      ++halvings;
    }
    if (!ok || !(ll_new >= ll)) return r;
    r.coef += scale * step;
    const double rel = std::fabs(ll_new - ll) / (std::fabs(ll_new) + 1e-300);
    ll = ll_new;
    if (rel < kRelTol) {
      r.converged = true;
      break;
    }
  }
  if (!r.converged) return r;
  r.loglik = ll;

  const Eigen::VectorXd eta = X * r.coef;
  Eigen::VectorXd w(n);
  double pearson = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double mu = 1.0 / eta[i];
    w[i] = mu * mu;
    const double resid = (y[i] - mu) / mu;
    pearson += resid * resid;
  }
  const double dispersion = pearson / static_cast<double>(n - p);
  Eigen::MatrixXd xtwx = X.transpose() * w.asDiagonal() * X;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(xtwx);
  if (ldlt.info() != Eigen::Success) {
    r.converged = false;
    return r;
  }
  const Eigen::MatrixXd cov = dispersion * ldlt.solve(Eigen::MatrixXd::Identity(p, p));
  for (Eigen::Index j = 0; j < p; ++j) r.se[j] = std::sqrt(std::max(cov(j, j), 0.0));
  return r;
}

// Proportional-odds cumulative logit: logit P(Y <= k) = alpha_k + x' beta,
// alpha strictly increasing. Newton on the observed information with step
// halving on likelihood decreases or non-monotone alphas.
struct CumulativeLogitResult {
  Eigen::VectorXd alpha;     // K-1 cutpoints
  Eigen::VectorXd beta;      // covariate effects
  Eigen::VectorXd beta_se;
  double loglik = std::numeric_limits<double>::quiet_NaN();
  int iterations = 0;
  bool converged = false;

  bool ok() const { return converged && alpha.allFinite() && beta.allFinite() && beta_se.allFinite(); }
};

inline CumulativeLogitResult fit_cumulative_logit(const Eigen::MatrixXd& X,
                                                  const std::vector<std::int32_t>& y,
                                                  std::size_t n_levels) {
  const Eigen::Index n = X.rows();
  const Eigen::Index p = X.cols();  // no intercept column here
  const Eigen::Index kc = static_cast<Eigen::Index>(n_levels) - 1;
  CumulativeLogitResult r;
  if (kc < 1 || n == 0) return r;
  r.alpha.resize(kc);
  r.beta = Eigen::VectorXd::Zero(p);
  r.beta_se = Eigen::VectorXd::Constant(p, std::numeric_limits<double>::quiet_NaN());

  // start at the marginal cumulative logits
  std::vector<double> counts(n_levels, 0.0);
  for (auto v : y) counts[static_cast<std::size_t>(v)] += 1.0;
  double cum = 0.0;
  for (Eigen::Index k = 0; k < kc; ++k) {
    cum += counts[static_cast<std::size_t>(k)];
    double frac = cum / static_cast<double>(n);
    frac = std::min(std::max(frac, 1e-6), 1.0 - 1e-6);
    r.alpha[k] = std::log(frac / (1.0 - frac));
  }
  for (Eigen::Index k = 1; k < kc; ++k) {
    if (!(r.alpha[k] > r.alpha[k - 1])) r.alpha[k] = r.alpha[k - 1] + 1e-6;
  }

  const Eigen::Index dim = kc + p;
  auto monotone = [&](const Eigen::VectorXd& a) {
    for (Eigen::Index k = 1; k < kc; ++k) {
      if (!(a[k] > a[k - 1])) return false;
    }
    return true;
  };
  auto loglik = [&](const Eigen::VectorXd& a, const Eigen::VectorXd& b, bool& valid) {
    valid = true;
    const Eigen::VectorXd xb = X * b;
    double ll = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto yi = static_cast<Eigen::Index>(y[static_cast<std::size_t>(i)]);
      const double upper = (yi < kc) ? sigmoid(a[yi] + xb[i]) : 1.0;
      const double lower = (yi > 0) ? sigmoid(a[yi - 1] + xb[i]) : 0.0;
      const double pi = upper - lower;
      if (!(pi > 0.0)) {
        valid = false;
        return -std::numeric_limits<double>::infinity();
      }
      ll += std::log(pi);
    }
    return ll;
  };

  bool valid = false;
  double ll = loglik(r.alpha, r.beta, valid);
  if (!valid) return r;

  Eigen::VectorXd grad(dim);
  Eigen::MatrixXd info(dim, dim);
  for (int iter = 1; iter <= kMaxIterations; ++iter) {
    r.iterations = iter;
    grad.setZero();
    info.setZero();
    const Eigen::VectorXd xb = X * r.beta;
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto yi = static_cast<Eigen::Index>(y[static_cast<std::size_t>(i)]);
      const bool has_up = yi < kc;
      const bool has_lo = yi > 0;
      const double fu = has_up ? sigmoid(r.alpha[yi] + xb[i]) : 1.0;
      const double fl = has_lo ? sigmoid(r.alpha[yi - 1] + xb[i]) : 0.0;
      const double pi = fu - fl;
      const double du = has_up ? fu * (1.0 - fu) : 0.0;  // density at upper cut
      const double dl = has_lo ? fl * (1.0 - fl) : 0.0;
      const double gu = du / pi;
      const double gl = dl / pi;
      // second derivatives of log pi wrt the two linear predictors
      const double dpu = has_up ? du * (1.0 - 2.0 * fu) : 0.0;
      const double dpl = has_lo ? dl * (1.0 - 2.0 * fl) : 0.0;
      const double huu = dpu / pi - gu * gu;
      const double hll = -dpl / pi - gl * gl;
      const double hul = gu * gl;

      const double gbeta = gu - gl;
      for (Eigen::Index j = 0; j < p; ++j) grad[kc + j] += gbeta * X(i, j);
      if (has_up) grad[yi] += gu;
      if (has_lo) grad[yi - 1] -= gl;

      const double hbb = huu + 2.0 * hul + hll;
      for (Eigen::Index a = 0; a < p; ++a) {
        for (Eigen::Index b = 0; b <= a; ++b) {
          info(kc + a, kc + b) -= hbb * X(i, a) * X(i, b);
        }
      }
      if (has_up) {
        info(yi, yi) -= huu;
        for (Eigen::Index j = 0; j < p; ++j) info(kc + j, yi) -= (huu + hul) * X(i, j);
      }
      if (has_lo) {
        info(yi - 1, yi - 1) -= hll;
        for (Eigen::Index j = 0; j < p; ++j) info(kc + j, yi - 1) -= (hll + hul) * X(i, j);
      }
      if (has_up && has_lo) info(yi, yi - 1) -= hul;
    }
    info = info.selfadjointView<Eigen::Lower>();

    Eigen::LDLT<Eigen::MatrixXd> ldlt(info);
    if (ldlt.info() != Eigen::Success) return r;
    Eigen::VectorXd step = ldlt.solve(grad);
    if (!step.allFinite()) return r;

    double scale = 1.0;
    Eigen::VectorXd a_new, b_new;
    double ll_new = -std::numeric_limits<double>::infinity();
    bool ok = false;
    for (int halvings = 0; halvings < 40; ++halvings) {
      a_new = r.alpha + scale * step.head(kc);
      b_new = r.beta + scale * step.tail(p);
      if (monotone(a_new)) {
        ll_new = loglik(a_new, b_new, ok);
        if (ok && ll_new >= ll) break;
      }
      ok = false;
      scale *= 0.5;
    }
    if (!ok) return r;
    r.alpha = a_new;
    r.beta = b_new;
    const double rel = std::fabs(ll_new - ll) / (std::fabs(ll_new) + 1e-300);
    ll = ll_new;
    if (rel < kRelTol) {
      r.converged = true;
      break;
    }
  }
  if (!r.converged) return r;
  r.loglik = ll;

  // SEs for beta from the inverse observed information at the MLE
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(dim, dim);
  {
    // rebuild information at the optimum (same loop as above, gradient ignored)
    Eigen::MatrixXd info2 = Eigen::MatrixXd::Zero(dim, dim);
    const Eigen::VectorXd xb = X * r.beta;
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto yi = static_cast<Eigen::Index>(y[static_cast<std::size_t>(i)]);
      const bool has_up = yi < kc;
      const bool has_lo = yi > 0;
      const double fu = has_up ? sigmoid(r.alpha[yi] + xb[i]) : 1.0;
      const double fl = has_lo ? sigmoid(r.alpha[yi - 1] + xb[i]) : 0.0;
      const double pi = fu - fl;
      const double du = has_up ? fu * (1.0 - fu) : 0.0;
      const double dl = has_lo ? fl * (1.0 - fl) : 0.0;
      const double gu = du / pi;
      const double gl = dl / pi;
      const double dpu = has_up ? du * (1.0 - 2.0 * fu) : 0.0;
      const double dpl = has_lo ? dl * (1.0 - 2.0 * fl) : 0.0;
      const double huu = dpu / pi - gu * gu;
      const double hll = -dpl / pi - gl * gl;
      const double hul = gu * gl;
      const double hbb = huu + 2.0 * hul + hll;
      for (Eigen::Index a = 0; a < p; ++a) {
        for (Eigen::Index b = 0; b <= a; ++b) info2(kc + a, kc + b) -= hbb * X(i, a) * X(i, b);
      }
      if (has_up) {
        info2(yi, yi) -= huu;
        for (Eigen::Index j = 0; j < p; ++j) info2(kc + j, yi) -= (huu + hul) * X(i, j);
      }
      if (has_lo) {
        info2(yi - 1, yi - 1) -= hll;
        for (Eigen::Index j = 0; j < p; ++j) info2(kc + j, yi - 1) -= (hll + hul) * X(i, j);
      }
      if (has_up && has_lo) info2(yi, yi - 1) -= hul;
    }
    info2 = info2.selfadjointView<Eigen::Lower>();
    Eigen::LDLT<Eigen::MatrixXd> ldlt(info2);
    if (ldlt.info() != Eigen::Success) {
      r.converged = false;
      return r;
    }
    cov = ldlt.solve(Eigen::MatrixXd::Identity(dim, dim));
  }
  for (Eigen::Index j = 0; j < p; ++j) r.beta_se[j] = std::sqrt(std::max(cov(kc + j, kc + j), 0.0));
  return r;
}

// Baseline-category multinomial logit (first level is the baseline). Used by
// the sequential synthesiser for nominal variables; no SEs needed.
struct MultinomialResult {
  Eigen::MatrixXd coef;  // (K-1) x p, row l-1 holds the coefficients of level l
  double loglik = std::numeric_limits<double>::quiet_NaN();
  int iterations = 0;
  bool converged = false;

  bool ok() const { return converged && coef.allFinite(); }
};

inline MultinomialResult fit_multinomial(const Eigen::MatrixXd& X,
                                         const std::vector<std::int32_t>& y,
                                         std::size_t n_levels) {
  const Eigen::Index n = X.rows();
  const Eigen::Index p = X.cols();  // includes intercept
  const Eigen::Index km = static_cast<Eigen::Index>(n_levels) - 1;
  MultinomialResult r;
  if (km < 1 || n == 0) return r;
  r.coef = Eigen::MatrixXd::Zero(km, p);

  auto probs_of = [&](const Eigen::MatrixXd& B, Eigen::Index i, std::vector<double>& pi) {
    double denom = 1.0;
    for (Eigen::Index l = 0; l < km; ++l) {
      const double e = std::exp(X.row(i).dot(B.row(l)));
      pi[static_cast<std::size_t>(l) + 1] = e;
      denom += e;
    }
    pi[0] = 1.0 / denom;
    for (Eigen::Index l = 0; l < km; ++l) pi[static_cast<std::size_t>(l) + 1] /= denom;
  };
  auto loglik = [&](const Eigen::MatrixXd& B) {
    std::vector<double> pi(n_levels);
    double ll = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      probs_of(B, i, pi);
      const double q = pi[static_cast<std::size_t>(y[static_cast<std::size_t>(i)])];
      if (!(q > 0.0)) return -std::numeric_limits<double>::infinity();
      ll += std::log(q);
    }
    return ll;
  };

  const Eigen::Index dim = km * p;
  double ll = loglik(r.coef);
  Eigen::VectorXd grad(dim);
  Eigen::MatrixXd info(dim, dim);
  std::vector<double> pi(n_levels);
  for (int iter = 1; iter <= kMaxIterations; ++iter) {
    r.iterations = iter;
    grad.setZero();
    info.setZero();
    for (Eigen::Index i = 0; i < n; ++i) {
      probs_of(r.coef, i, pi);
      const auto yi = y[static_cast<std::size_t>(i)];
      for (Eigen::Index l = 0; l < km; ++l) {
        const double pl = pi[static_cast<std::size_t>(l) + 1];
        const double resid = ((yi == static_cast<std::int32_t>(l + 1)) ? 1.0 : 0.0) - pl;
        for (Eigen::Index a = 0; a < p; ++a) grad[l * p + a] += resid * X(i, a);
        for (Eigen::Index m = 0; m <= l; ++m) {
          const double pm = pi[static_cast<std::size_t>(m) + 1];
          const double wlm = pl * (((l == m) ? 1.0 : 0.0) - pm);
          for (Eigen::Index a = 0; a < p; ++a) {
            for (Eigen::Index b = 0; b < p; ++b) {
              info(l * p + a, m * p + b) += wlm * X(i, a) * X(i, b);
            }
          }
        }
      }
    }
    Eigen::MatrixXd full = info.selfadjointView<Eigen::Lower>();
    Eigen::LDLT<Eigen::MatrixXd> ldlt(full);
    if (ldlt.info() != Eigen::Success) return r;
    Eigen::VectorXd step = ldlt.solve(grad);
    if (!step.allFinite()) return r;

    double scale = 1.0;
    Eigen::MatrixXd cand;
    double ll_new = -std::numeric_limits<double>::infinity();
    for (int halvings = 0; halvings < 40; ++halvings) {
      cand = r.coef;
      for (Eigen::Index l = 0; l < km; ++l) {
        for (Eigen::Index a = 0; a < p; ++a) cand(l, a) += scale * step[l * p + a];
      }
      ll_new = loglik(cand);
      if (ll_new >= ll) break;
      scale *= 0.5;
    }
    if (!(ll_new >= ll)) return r;
    r.coef = cand;
    const double rel = std::fabs(ll_new - ll) / (std::fabs(ll_new) + 1e-300);
    ll = ll_new;
    if (rel < kRelTol) {
      r.converged = true;
      break;
    }
  }
  r.loglik = ll;
  return r;
}

}  // namespace synbench::glm

#endif  // SYNBENCH_GLM_HPP
