// 1D Gauss rules via Golub-Welsch on the Jacobi recurrence matrix.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace hpfrac {

struct Rule1D {
  std::vector<double> x;
  std::vector<double> w;
  int size() const { return static_cast<int>(x.size()); }
};

namespace detail {

// nodes/weights for weight (1-x)^alpha (1+x)^beta on [-1,1]
inline Rule1D golub_welsch_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw std::invalid_argument("quadrature rule needs n >= 1");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  const double ab = alpha + beta;
  for (int k = 0; k < n; ++k) {
    // diagonal a_k
    double num = beta * beta - alpha * alpha;
    double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
    J(k, k) = (den == 0.0) ? 0.0 : num / den;
    if (k + 1 < n) {
      int kk = k + 1;  // sub/super-diagonal b_k, k = kk
      double b2 = 4.0 * kk * (kk + alpha) * (kk + beta) * (kk + ab) /
                  ((2.0 * kk + ab) * (2.0 * kk + ab) * (2.0 * kk + ab + 1.0) * (2.0 * kk + ab - 1.0));
      J(k, k + 1) = J(k + 1, k) = std::sqrt(b2);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  // mu0 = integral of the weight over [-1,1]
  double mu0 = std::pow(2.0, ab + 1.0) * std::exp(std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
  Rule1D r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    r.x[i] = es.eigenvalues()[i];
    double v0 = es.eigenvectors()(0, i);
    r.w[i] = mu0 * v0 * v0;
  }
  return r;
}

}  // namespace detail

// Gauss-Legendre on [-1,1]; exact for polynomials of degree 2n-1.
inline Rule1D gauss_legendre(int n) { return detail::golub_welsch_jacobi(n, 0.0, 0.0); }

// Gauss rule on [0,1] with weight x^alpha; exact for x^alpha * poly(deg 2n-1).
inline Rule1D gauss_jacobi01(int n, double alpha, double beta = 0.0) {
  // map weight (1-t)^alpha on [-1,1] to x^alpha on [0,1] via x = (1-t)/2
  Rule1D j = detail::golub_welsch_jacobi(n, alpha, beta);
  Rule1D r;
  r.x.resize(n);
  r.w.resize(n);
  const double scale = std::pow(0.5, alpha + beta + 1.0);
  for (int i = 0; i < n; ++i) {
    r.x[i] = 0.5 * (1.0 - j.x[i]);
    r.w[i] = scale * j.w[i];
  }
  return r;
}

// Gauss-Lobatto nodes/weights on [-1,1]: p+1 nodes including both endpoints,
// interior nodes the roots of L_p'.
inline Rule1D gauss_lobatto(int p) {
  if (p < 1) throw std::invalid_argument("gauss_lobatto needs p >= 1");
  const int n = p + 1;
  Rule1D r;
  r.x.resize(n);
  r.w.resize(n);
  if (p == 1) {
    r.x = {-1.0, 1.0};
    r.w = {1.0, 1.0};
    return r;
  }
  Rule1D inner = detail::golub_welsch_jacobi(p - 1, 1.0, 1.0);
  r.x[0] = -1.0;
  r.x[n - 1] = 1.0;
  for (int i = 0; i < p - 1; ++i) r.x[i + 1] = inner.x[i];
  // w_i = 2 / (p(p+1) L_p(x_i)^2)
  auto legendre = [&](double x) {
    double pm1 = 1.0, pk = x;
    for (int k = 2; k <= p; ++k) {
      double pn = ((2.0 * k - 1.0) * x * pk - (k - 1.0) * pm1) / k;
      pm1 = pk;
      pk = pn;
    }
    return p >= 1 ? pk : pm1;
  };
  for (int i = 0; i < n; ++i) {
    double lp = legendre(r.x[i]);
    r.w[i] = 2.0 / (p * (n)*lp * lp);
  }
  return r;
}

// Legendre polynomial coefficient tables (monomial basis, index = power).
inline std::vector<double> legendre_coeffs(int k) {
  std::vector<std::vector<double>> L(std::max(2, k + 1));
  L[0] = {1.0};
  L[1] = {0.0, 1.0};
  for (int n = 2; n <= k; ++n) {
    std::vector<double> cur(n + 1, 0.0);
    for (size_t j = 0; j < L[n - 1].size(); ++j) cur[j + 1] += (2.0 * n - 1.0) / n * L[n - 1][j];
    for (size_t j = 0; j < L[n - 2].size(); ++j) cur[j] -= (n - 1.0) / n * L[n - 2][j];
    L[n] = cur;
  }
  return L[k];
}

// Integrated Legendre (edge kernel) coefficients:
// Lhat_k = (L_k - L_{k-2}) / sqrt(2(2k-1)), k >= 2; vanishes at +-1.
inline std::vector<double> integrated_legendre_coeffs(int k) {
  if (k < 2) throw std::invalid_argument("integrated_legendre needs k >= 2");
  auto a = legendre_coeffs(k);
  auto b = legendre_coeffs(k - 2);
  std::vector<double> c(k + 1, 0.0);
  const double s = 1.0 / std::sqrt(2.0 * (2.0 * k - 1.0));
  for (size_t j = 0; j < a.size(); ++j) c[j] += s * a[j];
  for (size_t j = 0; j < b.size(); ++j) c[j] -= s * b[j];
  return c;
}

inline double eval_poly1(const std::vector<double>& c, double x) {
  double s = 0.0;
  for (size_t j = c.size(); j-- > 0;) s = s * x + c[j];
  return s;
}

}  // namespace hpfrac
