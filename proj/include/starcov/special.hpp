#pragma once

#include <functional>
#include <span>
#include <stdexcept>

namespace starcov {

// Raised when a series or adaptive quadrature fails to reach its tolerance.
// Carries the best value obtained so callers can degrade gracefully.
class NonConvergenceError : public std::runtime_error {
  public:
    NonConvergenceError(const std::string& what, double best)
        : std::runtime_error(what), best_estimate(best) {}
    double best_estimate;
};

// Raised when a hypergeometric lower parameter sits on a nonpositive integer.
class PoleError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Pochhammer symbol (x)_m = x (x+1) ... (x+m-1), (x)_0 = 1.
double pochhammer(double x, int m);

// Gauss hypergeometric 2F1(a, b; c; z) for z <= 0.
//
// Branches: direct series for small |z|, the Pfaff transformation
// z -> z/(z-1) for moderate |z| (which maps the argument into [0, 1)), and
// the 1/z connection formula for large |z| when a - b is not an integer.
// Absolute tolerance 1e-13; throws NonConvergenceError after 1e5 terms and
// PoleError when c is a nonpositive integer.
double hyp2f1_neg(double a, double b, double c, double z);

// Argument block of the radial interference functional family xi_m.
struct XiArgs {
    double a;                  // first hypergeometric parameter
    double pathloss_exponent;  // b slot, must be > 2
    double c;                  // >= 0
    double x;                  // >= 0
    int order;                 // m >= 0, derivative order in x
};

// xi_m(a, b, c; x) = (a)_m (-2/b)_m (-c)^m / (1-2/b)_m
//                    * 2F1(a+m, -2/b+m; 1-2/b+m; -c x).
// Equals the m-th x-derivative of xi_0; xi_0(a, b, 0; x) = 1.
double xi(const XiArgs& args);

// Specialised evaluators for the a = 1 family used by the coverage and rate
// integrands, stable for large order and large argument.
//
// xi0_radial(alpha, y)  = xi_0 at combined argument y = c*x.
// xi_deriv_scaled(m, alpha, c) = |xi_m(1, alpha, c; x)| / (m-1)! at x = 1.
// The derivative sign is (-1)^(m+1); magnitudes stay modest (O(c^(2/alpha)))
// even when the raw xi_m would overflow.
double xi0_radial(double alpha, double y);
double xi_deriv_scaled(int m, double alpha, double c);

// Complete Bell polynomial B_m(x_1, ..., x_m); m = xs.size(), B_0 = 1.
double bell_complete(std::span<const double> xs);

// Incomplete Bell polynomial B_{m,l}; xs supplies x_1 ... x_{m-l+1}.
// Throws std::out_of_range unless 0 <= l <= m.
double bell_incomplete(int m, int l, std::span<const double> xs);

// Adaptive Gauss-Kronrod quadrature over a finite interval, absolute
// tolerance. Throws NonConvergenceError (with the best estimate) if the
// interval budget is exhausted.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol);

// Semi-infinite integral of f over [lower, inf) via r = lower + t/(1-t).
double integrate_semi_inf(const std::function<double(double)>& f, double lower,
                          double tol);

} // namespace starcov
