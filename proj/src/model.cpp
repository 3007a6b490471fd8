#include "rothe1d/model.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

namespace rothe {

double Coefficient::eval(const std::vector<double>& phi) const {
  switch (kind) {
    case CoefKind::Zero:
      return 0.0;
    case CoefKind::Constant:
      return c0;
    case CoefKind::Affine: {
      double s = c0;
      for (size_t i = 0; i < a.size(); ++i) s += a[i] * phi[i];
      return s;
    }
    case CoefKind::Product: {
      double s = c0;
      for (int f : factors) s *= phi[(size_t)f];
      return s;
    }
    case CoefKind::Table: {
      // Multilinear interpolation on the uniform lattice of [0,1]^d.
      const int dim = (int)phi.size();
      const int r = table_res;
      std::vector<int> base(dim);
      std::vector<double> frac(dim);
      for (int k = 0; k < dim; ++k) {
        double x = phi[(size_t)k];
        if (x < 0.0) x = 0.0;
        if (x > 1.0) x = 1.0;
        double t = x * (r - 1);
        int b = (int)t;
        if (b > r - 2) b = r - 2;
        base[(size_t)k] = b;
        frac[(size_t)k] = t - b;
      }
      double acc = 0.0;
      const int corners = 1 << dim;
      for (int c = 0; c < corners; ++c) {
        double wgt = 1.0;
        size_t idx = 0;
        for (int k = 0; k < dim; ++k) {
          const int bit = (c >> k) & 1;
          wgt *= bit ? frac[(size_t)k] : 1.0 - frac[(size_t)k];
          idx = idx * (size_t)r + (size_t)(base[(size_t)k] + bit);
        }
        acc += wgt * table[idx];
      }
      return acc;
    }
    case CoefKind::Custom:
      return custom(phi);
  }
  return 0.0;
}

Coefficient Coefficient::zero() { return Coefficient{}; }

Coefficient Coefficient::constant(double c) {
  Coefficient k;
  k.kind = CoefKind::Constant;
  k.c0 = c;
  k.sup = std::fabs(c);
  k.lip = 0.0;
  return k;
}

Coefficient Coefficient::affine(double c0, std::vector<double> slopes) {
  Coefficient k;
  k.kind = CoefKind::Affine;
  k.c0 = c0;
  k.a = std::move(slopes);
  double s = std::fabs(c0), l = 0.0;
  for (double v : k.a) {
    s += std::fabs(v);
    l = std::max(l, std::fabs(v));
  }
  k.sup = s;
  k.lip = l;
  return k;
}

Coefficient Coefficient::product(double c, std::vector<int> factors, int /*d*/) {
  Coefficient k;
  k.kind = CoefKind::Product;
  k.c0 = c;
  k.factors = std::move(factors);
  k.sup = std::fabs(c);
  k.lip = std::fabs(c);
  return k;
}

CoefficientProvider::CoefficientProvider(int dim) : d(dim) {
  I.assign((size_t)d, Coefficient::zero());
  Gphi.assign((size_t)d, Coefficient::zero());
  F.assign((size_t)(d - 1), Coefficient::zero());
  Gw.assign((size_t)(d - 1), Coefficient::zero());
  H.assign((size_t)(2 * (d - 1)), Coefficient::zero());
  B.assign((size_t)(d * 4 * (d - 1)), Coefficient::zero());
  E.assign((size_t)((d - 1) * 3 * (d - 1)), Coefficient::zero());
  Gamma = Coefficient::constant(1.0);
  Gv = Coefficient::zero();
}

namespace {

// Walks the uniform lattice of [low, high]^d with res points per axis.
void for_each_lattice_point(int d, double low, double high, int res,
                            const std::function<void(const std::vector<double>&)>& fn) {
  std::vector<double> phi((size_t)d, low);
  std::vector<int> idx((size_t)d, 0);
  const double step = (res > 1) ? (high - low) / (res - 1) : 0.0;
  while (true) {
    for (int k = 0; k < d; ++k) phi[(size_t)k] = low + step * idx[(size_t)k];
    fn(phi);
    int k = 0;
    while (k < d) {
      if (++idx[(size_t)k] < res) break;
      idx[(size_t)k] = 0;
      ++k;
    }
    if (k == d) break;
  }
}

std::string fmt_point(const std::vector<double>& phi) {
  std::string s = "(";
  char buf[32];
  for (size_t i = 0; i < phi.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.6g", phi[i]);
    s += buf;
    if (i + 1 < phi.size()) s += ", ";
  }
  return s + ")";
}

struct NamedCoef {
  std::string name;
  const Coefficient* c;
};

std::vector<NamedCoef> all_coefficients(const CoefficientProvider& p) {
  std::vector<NamedCoef> out;
  out.push_back({"Gamma", &p.Gamma});
  out.push_back({"Gv", &p.Gv});
  for (int l = 1; l <= p.d; ++l) {
    out.push_back({"I" + std::to_string(l), &p.I[(size_t)l - 1]});
    out.push_back({"Gphi" + std::to_string(l), &p.Gphi[(size_t)l - 1]});
  }
  for (int m = 1; m < p.d; ++m) {
    out.push_back({"F" + std::to_string(m), &p.F[(size_t)m - 1]});
    out.push_back({"Gw" + std::to_string(m), &p.Gw[(size_t)m - 1]});
    for (int j = 0; j <= 1; ++j)
      out.push_back({"H" + std::to_string(j) + std::to_string(m), &p.getH(j, m)});
  }
  for (int l = 1; l <= p.d; ++l)
    for (int i = 0; i <= 1; ++i)
      for (int j = 0; j <= 1; ++j)
        for (int m = 1; m < p.d; ++m)
          out.push_back({"B" + std::to_string(l) + std::to_string(i) + std::to_string(j) +
                             std::to_string(m),
                         &p.getB(l, i, j, m)});
  for (int m = 1; m < p.d; ++m)
    for (int j = 1; j < p.d; ++j) {
      out.push_back({"E" + std::to_string(m) + "00" + std::to_string(j), &p.getE(m, 0, 0, j)});
      out.push_back({"E" + std::to_string(m) + "10" + std::to_string(j), &p.getE(m, 1, 0, j)});
      out.push_back({"E" + std::to_string(m) + "01" + std::to_string(j), &p.getE(m, 0, 1, j)});
    }
  return out;
}

}  // namespace

ValidationReport validate_model(const ModelSpec& spec, int resolution) {
  if (resolution < 2) throw std::invalid_argument("validate_model: resolution must be >= 2");
  ValidationReport rep;
  auto add = [&rep](const std::string& name, bool pass, const std::string& detail = "") {
    rep.items.push_back({name, pass, detail});
  };

  add("d >= 2", spec.d >= 2, "d = " + std::to_string(spec.d));

  auto check_sizes = [&](const char* name, size_t got, size_t want) {
    add(std::string(name) + " length", got == want,
        std::to_string(got) + " vs " + std::to_string(want));
  };
  check_sizes("delta", spec.delta.size(), (size_t)spec.d);
  check_sizes("bigD", spec.bigD.size(), (size_t)spec.d - 1);
  check_sizes("gamma", spec.gamma.size(), (size_t)spec.d - 1);
  check_sizes("robinA", spec.robinA.size(), (size_t)spec.d - 1);
  check_sizes("jhat", spec.jhat.size(), (size_t)spec.d);
  check_sizes("phi_res", spec.phi_res.size(), (size_t)spec.d);
  check_sizes("phi0", spec.phi0.size(), (size_t)spec.d);

  bool pos = true;
  for (double v : spec.delta) pos = pos && v > 0.0;
  add("delta_l > 0", pos);
  pos = true;
  for (double v : spec.bigD) pos = pos && v > 0.0;
  add("D_m > 0", pos);
  pos = true;
  for (double v : spec.gamma) pos = pos && v > 0.0;
  add("gamma_m > 0", pos);

  bool jn = !spec.jhat.empty() && spec.jhat[0] == 0.0;
  for (double v : spec.jhat) jn = jn && v >= 0.0;
  add("jhat_l >= 0 and jhat_1 == 0", jn);

  double sum_res = 0.0;
  bool res_range = true;
  for (double v : spec.phi_res) {
    sum_res += v;
    res_range = res_range && v >= 0.0 && v <= 1.0;
  }
  add("phi_res in [0,1]", res_range);
  add("sum phi_res == 1", std::fabs(sum_res - 1.0) <= 1e-12,
      "sum = " + std::to_string(sum_res));

  double sum0 = 0.0;
  for (double v : spec.phi0) sum0 += v;
  add("sum phi0 == 1", std::fabs(sum0 - 1.0) <= 1e-12, "sum = " + std::to_string(sum0));

  // Sup-bound audit over the [0,1]^d lattice.
  for (const auto& nc : all_coefficients(spec.coeffs)) {
    double worst = 0.0;
    std::vector<double> worst_at;
    for_each_lattice_point(spec.d, 0.0, 1.0, resolution, [&](const std::vector<double>& phi) {
      const double v = nc.c->eval(phi);
      if (!std::isfinite(v))
        throw std::runtime_error("validate_model: coefficient " + nc.name +
                                 " is non-finite at " + fmt_point(phi));
      if (std::fabs(v) > worst) {
        worst = std::fabs(v);
        worst_at = phi;
      }
    });
    const bool ok = nc.c->sup >= worst;
    char buf[128];
    std::snprintf(buf, sizeof buf, "sampled max %.6g vs declared sup %.6g", worst, nc.c->sup);
    std::string detail = buf;
    if (!ok && !worst_at.empty()) detail += " at " + fmt_point(worst_at);
    add("sup bound " + nc.name, ok, detail);
  }

  rep.pass = true;
  for (const auto& it : rep.items) rep.pass = rep.pass && it.pass;
  return rep;
}

InfimumBounds infimum_bounds(const ModelSpec& spec, double alpha, int resolution) {
  if (!(alpha > 0.0 && alpha < 1.0 / spec.d))
    throw std::invalid_argument("infimum_bounds: alpha must lie in (0, 1/d)");
  if (resolution < 2) throw std::invalid_argument("infimum_bounds: resolution must be >= 2");
  const double low = alpha;
  const double high = 1.0 - (spec.d - 1) * alpha;
  const double hlat = (high - low) / (resolution - 1);

  auto certified_min = [&](const Coefficient& c) {
    double mn = std::numeric_limits<double>::infinity();
    for_each_lattice_point(spec.d, low, high, resolution,
                           [&](const std::vector<double>& phi) {
                             const double v = c.eval(phi);
                             if (v < mn) mn = v;
                           });
    return mn - c.lip * hlat;
  };

  InfimumBounds out;
  out.Gamma_alpha = certified_min(spec.coeffs.Gamma);
  out.H_alpha = std::numeric_limits<double>::infinity();
  for (int m = 1; m < spec.d; ++m)
    out.H_alpha = std::min(out.H_alpha, certified_min(spec.coeffs.getH(1, m)));
  out.assumption22_ok = out.Gamma_alpha > 0.0 && out.H_alpha > 0.0;
  return out;
}

}  // namespace rothe
