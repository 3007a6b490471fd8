// Uniform grid on [0,1], nodal fields, finite-difference operators and the
// discrete Sobolev norms every other module is defined against.
//
// Conventions:
//   * nodes z_i = i*h with h = 1/(n-1); z_0 = 0 and z_{n-1} = 1 exactly,
//   * diff1/diff2 are second order everywhere (central stencils inside,
//     one-sided three-point stencils on the boundary rows),
//   * L2 is the trapezoid quadrature of f^2, so norms are defined on exactly
//     the nodal data the time stepper produces.

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rothe {

struct Grid {
  int n = 0;       // number of nodes, >= 3
  double h = 0.0;  // spacing 1/(n-1)

  Grid() = default;
  explicit Grid(int nodes) : n(nodes), h(1.0 / (nodes - 1)) {
    if (nodes < 3) throw std::invalid_argument("Grid: need at least 3 nodes");
  }
  double z(int i) const { return (i == n - 1) ? 1.0 : i * h; }
  bool operator==(const Grid& o) const { return n == o.n; }
};

struct Field {
  Grid grid;
  std::vector<double> values;

  Field() = default;
  explicit Field(const Grid& g, double fill = 0.0) : grid(g), values(g.n, fill) {}
  Field(const Grid& g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if ((int)values.size() != g.n) throw std::invalid_argument("Field: size mismatch");
  }

  int n() const { return grid.n; }
  double h() const { return grid.h; }
  double& operator[](int i) { return values[(size_t)i]; }
  double operator[](int i) const { return values[(size_t)i]; }

  bool all_finite() const;
};

enum class NormKind { L2, H1semi, H1, Linf };

// Second-order first derivative. Boundary rows use the one-sided stencils
// (-3f0 + 4f1 - f2)/2h and (3fN - 4fN-1 + fN-2)/2h.
Field diff1(const Field& f);

// Second-order second derivative, 3-point stencil inside; the boundary rows
// use the 4-point one-sided stencil (2,-5,4,-1)/h^2.
Field diff2(const Field& f);

// Trapezoid quadrature of the nodal values over [0,1].
double trapezoid(const Field& f);

// Trapezoid antiderivative F(z_i) = int_0^{z_i} f, F(0) = 0 exactly.
Field antiderivative(const Field& f);

double norm(const Field& f, NormKind kind);
inline double norm_l2(const Field& f) { return norm(f, NormKind::L2); }
inline double norm_h1semi(const Field& f) { return norm(f, NormKind::H1semi); }

// Nodewise (u_k - u_km1)/dt. dt must be positive.
Field dt_quotient(const Field& u_k, const Field& u_km1, double dt);

// Elementwise helpers used throughout the stepper and audits.
Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(double s, const Field& a);
Field multiply(const Field& a, const Field& b);

double max_abs(const Field& f);
double min_value(const Field& f);

}  // namespace rothe
