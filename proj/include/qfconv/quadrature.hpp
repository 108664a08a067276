#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qfconv {

// Gauss-Hermite rule for the weight e^{-x^2}: int g(x) e^{-x^2} dx ~
// sum w_i g(x_i). Nodes symmetric about 0, ascending.
struct GaussHermite {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussHermite& gauss_hermite(int n);

// ln of int exp(log_f(x)) dx for integrands shaped like a Gaussian of the
// given location/scale. Exact for that Gaussian at any node count.
double log_integral_gh(const std::function<double(double)>& log_f,
                       double mean, double sigma, int n);

// Tensor-product version over dims = means.size() (kept small).
double log_integral_gh_nd(
    const std::function<double(std::span<const double>)>& log_f,
    const std::vector<double>& means, const std::vector<double>& sigmas,
    int n);

// Node-doubling wrapper: doubles n until the result moves by less than
// rel_tol (or max_n is hit). Returns the last value.
double log_integral_gh_adaptive(const std::function<double(double)>& log_f,
                                double mean, double sigma,
                                double rel_tol = 1e-11, int start_n = 24,
                                int max_n = 192);

// Plain adaptive Simpson on [a, b]; used as an independent cross-check.
double integrate_simpson(const std::function<double(double)>& f, double a,
                         double b, double tol = 1e-12, int max_depth = 40);

}  // namespace qfconv
