#include "qfconv/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qfconv {

namespace {

// Orthonormal Hermite polynomials w.r.t. e^{-x^2} dx:
//   p0 = pi^{-1/4}, p_{k+1} = x sqrt(2/(k+1)) p_k - sqrt(k/(k+1)) p_{k-1},
//   p_n' = sqrt(2n) p_{n-1}.
double hermite_eval(int n, double x, double* deriv,
                    double* christoffel_sum) {
  double pkm1 = 0.0;
  double pk = 0.751125544464942483;  // pi^{-1/4}
  double sum = pk * pk;
  for (int k = 0; k < n; ++k) {
    const double pkp1 =
        x * std::sqrt(2.0 / (k + 1)) * pk - std::sqrt(k / (k + 1.0)) * pkm1;
    pkm1 = pk;
    pk = pkp1;
    if (k + 1 < n) sum += pk * pk;
  }
  if (deriv) *deriv = std::sqrt(2.0 * n) * pkm1;
  if (christoffel_sum) *christoffel_sum = sum;
  return pk;
}

GaussHermite compute_gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: n must be >= 1");
  GaussHermite rule;
  const double bound = std::sqrt(2.0 * n + 1.0) + 2.0;
  const int scan = 40 * n;
  double prev_x = -bound;
  double prev_p = hermite_eval(n, prev_x, nullptr, nullptr);
  for (int i = 1; i <= scan; ++i) {
    const double x = -bound + 2.0 * bound * i / scan;
    const double p = hermite_eval(n, x, nullptr, nullptr);
    if (prev_p == 0.0 || p * prev_p < 0.0) {
      // Bisection into a tight bracket, then Newton polish.
      double lo = prev_x, hi = x, flo = prev_p;
      for (int it = 0; it < 100 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = hermite_eval(n, mid, nullptr, nullptr);
        if (fmid == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((fmid > 0.0) == (flo > 0.0)) {
          lo = mid;
          flo = fmid;
        } else {
          hi = mid;
        }
      }
      double root = 0.5 * (lo + hi);
      for (int it = 0; it < 4; ++it) {
        double d;
        const double v = hermite_eval(n, root, &d, nullptr);
        if (d == 0.0) break;
        root -= v / d;
      }
      double sum;
      hermite_eval(n, root, nullptr, &sum);
      rule.nodes.push_back(root);
      rule.weights.push_back(1.0 / sum);  // Christoffel numbers
    }
    prev_x = x;
    prev_p = p;
  }
  if (static_cast<int>(rule.nodes.size()) != n)
    throw std::runtime_error("gauss_hermite: root scan missed nodes");
  return rule;
}

}  // namespace

const GaussHermite& gauss_hermite(int n) {
  static std::map<int, GaussHermite> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_hermite(n)).first;
  return it->second;
}

double log_integral_gh(const std::function<double(double)>& log_f,
                       double mean, double sigma, int n) {
  if (sigma <= 0.0) throw std::invalid_argument("log_integral_gh: sigma <= 0");
  const GaussHermite& rule = gauss_hermite(n);
  const double s = sigma * std::sqrt(2.0);
  // Streaming log-sum-exp of w_i e^{t_i^2} f(mean + s t_i).
  double max_e = -HUGE_VAL;
  std::vector<double> exps(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = rule.nodes[i];
    const double e =
        t * t + log_f(mean + s * t) + std::log(rule.weights[i]);
    exps[i] = e;
    if (e > max_e) max_e = e;
  }
  if (!std::isfinite(max_e)) return -HUGE_VAL;
  double acc = 0.0;
  for (double e : exps) acc += std::exp(e - max_e);
  return std::log(s) + max_e + std::log(acc);
}

double log_integral_gh_nd(
    const std::function<double(std::span<const double>)>& log_f,
    const std::vector<double>& means, const std::vector<double>& sigmas,
    int n) {
  const std::size_t dims = means.size();
  if (dims == 0 || sigmas.size() != dims)
    throw std::invalid_argument("log_integral_gh_nd: bad dimensions");
  const GaussHermite& rule = gauss_hermite(n);
  std::vector<double> scale(dims);
  double log_jacobian = 0.0;
  for (std::size_t d = 0; d < dims; ++d) {
    if (sigmas[d] <= 0.0)
      throw std::invalid_argument("log_integral_gh_nd: sigma <= 0");
    scale[d] = sigmas[d] * std::sqrt(2.0);
    log_jacobian += std::log(scale[d]);
  }
  std::vector<std::size_t> idx(dims, 0);
  std::vector<double> x(dims);
  // Two-pass log-sum-exp without storing n^d values: track the max first.
  double max_e = -HUGE_VAL;
  double acc = 0.0;
  for (int pass = 0; pass < 2; ++pass) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      double e = 0.0;
      for (std::size_t d = 0; d < dims; ++d) {
        const double t = rule.nodes[idx[d]];
        x[d] = means[d] + scale[d] * t;
        e += t * t + std::log(rule.weights[idx[d]]);
      }
      e += log_f(x);
      if (pass == 0) {
        if (e > max_e) max_e = e;
      } else {
        acc += std::exp(e - max_e);
      }
      std::size_t d = 0;
      while (d < dims && ++idx[d] == rule.nodes.size()) idx[d++] = 0;
      if (d == dims) break;
    }
    if (!std::isfinite(max_e)) return -HUGE_VAL;
  }
  return log_jacobian + max_e + std::log(acc);
}

double log_integral_gh_adaptive(const std::function<double(double)>& log_f,
                                double mean, double sigma, double rel_tol,
                                int start_n, int max_n) {
  double prev = log_integral_gh(log_f, mean, sigma, start_n);
  for (int n = start_n * 2; n <= max_n; n *= 2) {
    const double cur = log_integral_gh(log_f, mean, sigma, n);
    if (std::abs(cur - prev) <= rel_tol * (1.0 + std::abs(cur))) return cur;
    prev = cur;
  }
  return prev;
}

namespace {

double simpson_rec(const std::function<double(double)>& f, double a,
                   double fa, double b, double fb, double m, double fm,
                   double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson_rec(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1) +
         simpson_rec(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1);
}

}  // namespace

double integrate_simpson(const std::function<double(double)>& f, double a,
                         double b, double tol, int max_depth) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

}  // namespace qfconv
