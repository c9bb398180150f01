#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "design_core.hpp"
#include "info_matrix.hpp"
#include "matrix.hpp"

namespace pcbd {

struct model_params {
  std::vector<double> beta;   // one effect per attribute
  std::vector<double> gamma;  // one effect per block
  double sigma = 1.0;
  unsigned long long seed = 0;
};

// Standard normal draws from two uniforms, with the second draw cached.
class normal_sampler {
 public:
  explicit normal_sampler(std::mt19937_64& gen) : gen_(gen) {}

  double operator()() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = ((gen_() >> 11) + 1.0) * 0x1p-53;  // in (0, 1]
    const double u2 = ((gen_() >> 11) + 0.5) * 0x1p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64& gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

namespace detail {

inline void check_length(size_t got, int want, const char* what) {
  if (static_cast<int>(got) != want)
    throw validation_error(std::string(what) + " has length " + std::to_string(got) +
                           ", want " + std::to_string(want));
}

// Column-centers per block: the projection complementary to the block space.
inline Eigen::MatrixXd block_center(const blocked_design& d, const Eigen::MatrixXd& x) {
  Eigen::MatrixXd out = x;
  int r = 0;
  for (int m : d.layout.sizes()) {
    Eigen::RowVectorXd mean = x.middleRows(r, m).colwise().mean();
    out.middleRows(r, m).rowwise() -= mean;
    r += m;
  }
  return out;
}

inline Eigen::MatrixXd to_eigen(const imat& f) {
  Eigen::MatrixXd out(f.rows(), f.cols());
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j) out(i, j) = static_cast<double>(f(i, j));
  return out;
}

}  // namespace detail

// Generalized least squares for the attribute effects in exact arithmetic:
// solves (F' P F) beta = F' P y with P the block-centering projection.
inline std::vector<rational> estimate_exact(const blocked_design& d,
                                            const std::vector<rational>& y) {
  const int n = d.pairs(), k = d.attributes();
  detail::check_length(y.size(), n, "response vector");
  std::vector<rational> yc = y;
  int r = 0;
  for (int m : d.layout.sizes()) {
    rational mean(0);
    for (int t = 0; t < m; ++t) mean += y[r + t];
    mean = mean / rational(m);
    for (int t = 0; t < m; ++t) yc[r + t] -= mean;
    r += m;
  }
  qmat mm = rational(4) * information_matrix(d);
  std::vector<rational> rhs(k, rational(0));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) rhs[j] += rational(d.f(i, j)) * yc[i];
  return solve(mm, rhs);
}

inline Eigen::VectorXd estimate_numeric(const blocked_design& d, const Eigen::VectorXd& y) {
  detail::check_length(y.size(), d.pairs(), "response vector");
  Eigen::MatrixXd fc = detail::block_center(d, detail::to_eigen(d.f));
  Eigen::FullPivLU<Eigen::MatrixXd> lu(fc.transpose() * fc);
  if (!lu.isInvertible()) throw singular_error("the blocked information matrix is singular");
  return lu.solve(fc.transpose() * y);
}

// Noiseless response F beta + Z gamma in exact arithmetic.
inline std::vector<rational> exact_response(const blocked_design& d,
                                            const std::vector<rational>& beta,
                                            const std::vector<rational>& gamma) {
  const int n = d.pairs(), k = d.attributes(), b = d.layout.count();
  detail::check_length(beta.size(), k, "beta");
  detail::check_length(gamma.size(), b, "gamma");
  std::vector<rational> y(n, rational(0));
  int r = 0, blk = 0;
  for (int m : d.layout.sizes()) {
    for (int t = 0; t < m; ++t) {
      rational v = gamma[blk];
      for (int j = 0; j < k; ++j) v += rational(d.f(r + t, j)) * beta[j];
      y[r + t] = v;
    }
    r += m;
    ++blk;
  }
  return y;
}

struct simulation_summary {
  int reps = 0;
  std::vector<double> mean_estimate;
  dmat empirical_covariance;  // sample covariance, divisor reps - 1
  dmat target_covariance;     // sigma^2 (F' P F)^{-1}
  double max_abs_bias = 0.0;
  double rel_frobenius = 0.0;  // ||empirical - target||_F / ||target||_F
};

// Monte Carlo study of the generalized least squares estimator.  Every
// repetition runs on its own generator seeded from (seed, repetition), so
// results do not depend on scheduling and are reproducible one by one.
inline simulation_summary simulate(const blocked_design& d, const model_params& mp, int reps) {
  const int n = d.pairs(), k = d.attributes(), b = d.layout.count();
  detail::check_length(mp.beta.size(), k, "beta");
  detail::check_length(mp.gamma.size(), b, "gamma");
  if (mp.sigma < 0) throw validation_error("sigma must be nonnegative");
  if (reps < 1) throw validation_error("at least one repetition is required");

  Eigen::MatrixXd f = detail::to_eigen(d.f);
  Eigen::VectorXd mean_y(n);
  {
    Eigen::VectorXd beta(k);
    for (int j = 0; j < k; ++j) beta(j) = mp.beta[j];
    mean_y = f * beta;
    int r = 0, blk = 0;
    for (int m : d.layout.sizes()) {
      mean_y.segment(r, m).array() += mp.gamma[blk];
      r += m;
      ++blk;
    }
  }
  Eigen::MatrixXd fc = detail::block_center(d, f);
  Eigen::MatrixXd mm = fc.transpose() * fc;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(mm);
  if (!lu.isInvertible()) throw singular_error("the blocked information matrix is singular");

  Eigen::VectorXd sum = Eigen::VectorXd::Zero(k);
  Eigen::MatrixXd scatter = Eigen::MatrixXd::Zero(k, k);
  Eigen::VectorXd y(n), bhat(k);
  for (int rep = 0; rep < reps; ++rep) {
    std::seed_seq seq{mp.seed, static_cast<unsigned long long>(rep)};
    std::mt19937_64 gen(seq);
    normal_sampler normal(gen);
    for (int i = 0; i < n; ++i) y(i) = mean_y(i) + mp.sigma * normal();
    bhat = lu.solve(fc.transpose() * y);
    sum += bhat;
    scatter += bhat * bhat.transpose();
  }
  Eigen::VectorXd mean = sum / reps;
  Eigen::MatrixXd emp = Eigen::MatrixXd::Zero(k, k);
  if (reps > 1) emp = (scatter - reps * (mean * mean.transpose())) / (reps - 1);
  Eigen::MatrixXd target = mp.sigma * mp.sigma * lu.inverse();

  simulation_summary out;
  out.reps = reps;
  out.mean_estimate.resize(k);
  out.empirical_covariance = dmat(k, k);
  out.target_covariance = dmat(k, k);
  out.max_abs_bias = 0.0;
  for (int i = 0; i < k; ++i) {
    out.mean_estimate[i] = mean(i);
    out.max_abs_bias = std::max(out.max_abs_bias, std::abs(mean(i) - mp.beta[i]));
    for (int j = 0; j < k; ++j) {
      out.empirical_covariance(i, j) = emp(i, j);
      out.target_covariance(i, j) = target(i, j);
    }
  }
  const double tnorm = target.norm();
  out.rel_frobenius = tnorm > 0 ? (emp - target).norm() / tnorm : emp.norm();
  return out;
}

struct payoff_report {
  bool orthogonally_blocked = false;
  bool identical_estimates = false;  // block-adjusted equals unadjusted on this response
  imat cross_moments;                // F' Z
};

// Shows what orthogonal blocking buys: when F' Z = 0, adjusting for blocks
// does not move the attribute-effect estimates at all.
inline payoff_report orthogonality_payoff(const blocked_design& d,
                                          const std::vector<rational>& y) {
  const int n = d.pairs(), k = d.attributes(), b = d.layout.count();
  detail::check_length(y.size(), n, "response vector");
  payoff_report rep;
  rep.orthogonally_blocked = is_orthogonally_blocked(d);
  rep.cross_moments = imat(k, b, 0);
  int r = 0, blk = 0;
  for (int m : d.layout.sizes()) {
    for (int j = 0; j < k; ++j)
      for (int t = 0; t < m; ++t) rep.cross_moments(j, blk) += d.f(r + t, j);
    r += m;
    ++blk;
  }
  std::vector<rational> adjusted = estimate_exact(d, y);
  qmat ff(k, k, rational(0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      long long s = 0;
      for (int t = 0; t < n; ++t) s += d.f(t, i) * d.f(t, j);
      ff(i, j) = rational(s);
    }
  std::vector<rational> rhs(k, rational(0));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) rhs[j] += rational(d.f(i, j)) * y[i];
  std::vector<rational> raw = solve(ff, rhs);
  rep.identical_estimates = adjusted == raw;
  return rep;
}

}  // namespace pcbd
