#include "rothe1d/field.hpp"

#include <algorithm>
#include <cmath>

namespace rothe {

bool Field::all_finite() const {
  for (double v : values)
    if (!std::isfinite(v)) return false;
  return true;
}

Field diff1(const Field& f) {
  const int n = f.n();
  const double h = f.h();
  Field g(f.grid);
  g[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  for (int i = 1; i + 1 < n; ++i) g[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
  g[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  return g;
}

Field diff2(const Field& f) {
  const int n = f.n();
  const double h2 = f.h() * f.h();
  Field g(f.grid);
  if (n >= 4) {
    g[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
    g[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / h2;
  } else {
    g[0] = (f[0] - 2.0 * f[1] + f[2]) / h2;
    g[n - 1] = (f[n - 3] - 2.0 * f[n - 2] + f[n - 1]) / h2;
  }
  for (int i = 1; i + 1 < n; ++i) g[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / h2;
  return g;
}

double trapezoid(const Field& f) {
  const int n = f.n();
  double s = 0.5 * (f[0] + f[n - 1]);
  for (int i = 1; i + 1 < n; ++i) s += f[i];
  return s * f.h();
}

Field antiderivative(const Field& f) {
  const int n = f.n();
  const double h = f.h();
  Field F(f.grid);
  F[0] = 0.0;
  for (int i = 1; i < n; ++i) F[i] = F[i - 1] + 0.5 * h * (f[i - 1] + f[i]);
  return F;
}

double norm(const Field& f, NormKind kind) {
  switch (kind) {
    case NormKind::L2: {
      Field sq(f.grid);
      for (int i = 0; i < f.n(); ++i) sq[i] = f[i] * f[i];
      return std::sqrt(trapezoid(sq));
    }
    case NormKind::H1semi:
      return norm(diff1(f), NormKind::L2);
    case NormKind::H1: {
      const double a = norm(f, NormKind::L2);
      const double b = norm(f, NormKind::H1semi);
      return std::sqrt(a * a + b * b);
    }
    case NormKind::Linf:
      return max_abs(f);
  }
  return 0.0;
}

Field dt_quotient(const Field& u_k, const Field& u_km1, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt_quotient: dt must be > 0");
  Field g(u_k.grid);
  for (int i = 0; i < u_k.n(); ++i) g[i] = (u_k[i] - u_km1[i]) / dt;
  return g;
}

Field operator+(const Field& a, const Field& b) {
  Field r(a.grid);
  for (int i = 0; i < a.n(); ++i) r[i] = a[i] + b[i];
  return r;
}

Field operator-(const Field& a, const Field& b) {
  Field r(a.grid);
  for (int i = 0; i < a.n(); ++i) r[i] = a[i] - b[i];
  return r;
}

Field operator*(double s, const Field& a) {
  Field r(a.grid);
  for (int i = 0; i < a.n(); ++i) r[i] = s * a[i];
  return r;
}

Field multiply(const Field& a, const Field& b) {
  Field r(a.grid);
  for (int i = 0; i < a.n(); ++i) r[i] = a[i] * b[i];
  return r;
}

double max_abs(const Field& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::fabs(v));
  return m;
}

double min_value(const Field& f) {
  double m = f.values.empty() ? 0.0 : f.values[0];
  for (double v : f.values) m = std::min(m, v);
  return m;
}

}  // namespace rothe
