// Mixture model definition: the coefficient families I, Gamma, B, H, F, E,
// G_phi, G_v, G_w on [0,1]^d, the physical constants, the reservoir data,
// and the structural validation that the assumptions engine builds on.
//
// Every coefficient carries two declared bounds: a sup bound on |f| and a
// Lipschitz bound on max_i sup|df/dphi_i|. The estimates ledger reads the
// single "abuse of notation" constant as max(sup, lip), which is what the
// W^{1,inf} bound in the derivations actually requires. Declared bounds are
// audited by lattice sampling, never inferred.

#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rothe {

enum class CoefKind { Zero, Constant, Affine, Product, Table, Custom };

// A scalar function of the fraction vector phi in [0,1]^d.
//   Zero      f == 0
//   Constant  f == c0
//   Affine    f == c0 + sum_i a[i] phi_i
//   Product   f == c0 * prod_{i in factors} phi_i
//   Table     multilinear interpolation of a res^d row-major value table
//   Custom    arbitrary callable (tests only; not serializable)
struct Coefficient {
  CoefKind kind = CoefKind::Zero;
  double c0 = 0.0;
  std::vector<double> a;        // Affine slopes, length d
  std::vector<int> factors;     // Product factor indices, 0-based
  int table_res = 0;            // Table points per axis
  std::vector<double> table;    // res^d values, last axis fastest
  std::function<double(const std::vector<double>&)> custom;

  double sup = 0.0;  // declared bound on sup |f| over [0,1]^d
  double lip = 0.0;  // declared bound on max_i sup |d f / d phi_i|

  double eval(const std::vector<double>& phi) const;
  // The paper-style scalar that bounds the W^{1,inf} norm.
  double w1inf() const { return sup > lip ? sup : lip; }

  static Coefficient zero();
  static Coefficient constant(double c);
  static Coefficient affine(double c0, std::vector<double> slopes);
  static Coefficient product(double c, std::vector<int> factors, int d);
};

// All coefficient families of the evolution system, indexed as in the model:
// l in 1..d (components), m,j in 1..d-1 (displacements), i,n in {0,1}
// (spatial / temporal derivative order). Accessors take 1-based l,m,j.
struct CoefficientProvider {
  int d = 0;
  Coefficient Gamma;
  Coefficient Gv;
  std::vector<Coefficient> I;     // size d
  std::vector<Coefficient> Gphi;  // size d
  std::vector<Coefficient> F;     // size d-1
  std::vector<Coefficient> Gw;    // size d-1
  std::vector<Coefficient> H;     // (j,m): index j*(d-1) + (m-1), j in {0,1}
  std::vector<Coefficient> B;     // (l,i,j,m)
  std::vector<Coefficient> E;     // (m,i,n,j), i+n <= 1

  explicit CoefficientProvider(int dim);
  CoefficientProvider() = default;

  const Coefficient& getH(int j, int m) const { return H[(size_t)(j * (d - 1) + m - 1)]; }
  Coefficient& getH(int j, int m) { return H[(size_t)(j * (d - 1) + m - 1)]; }
  const Coefficient& getB(int l, int i, int j, int m) const {
    return B[(size_t)((((l - 1) * 2 + i) * 2 + j) * (d - 1) + m - 1)];
  }
  Coefficient& getB(int l, int i, int j, int m) {
    return B[(size_t)((((l - 1) * 2 + i) * 2 + j) * (d - 1) + m - 1)];
  }
  // E_{minj} with i+n <= 1; slot order (i,n) in {(0,0),(1,0),(0,1)}.
  const Coefficient& getE(int m, int i, int n, int j) const {
    return E[(size_t)(((m - 1) * 3 + slotE(i, n)) * (d - 1) + j - 1)];
  }
  Coefficient& getE(int m, int i, int n, int j) {
    return E[(size_t)(((m - 1) * 3 + slotE(i, n)) * (d - 1) + j - 1)];
  }

  static int slotE(int i, int n) {
    if (i == 0 && n == 0) return 0;
    if (i == 1 && n == 0) return 1;
    if (i == 0 && n == 1) return 2;
    throw std::invalid_argument("E_{minj}: requires i+n <= 1");
  }
};

struct ModelSpec {
  int d = 0;
  CoefficientProvider coeffs;
  std::vector<double> delta;    // d positive diffusivities
  std::vector<double> bigD;     // d-1 positive elastic constants
  std::vector<double> gamma;    // d-1 positive viscosities
  std::vector<double> robinA;   // d-1 Robin coefficients (any sign)
  std::vector<double> jhat;     // d influx rates, jhat[0] == 0
  std::vector<double> phi_res;  // d reservoir fractions, sum 1
  std::vector<double> phi0;     // d uniform initial fractions, sum 1
  double W0 = 0.0;              // initial boundary displacement
};

struct ValidationItem {
  std::string name;
  bool pass = false;
  std::string detail;  // worst offending sample / value, when applicable
};

struct ValidationReport {
  bool pass = false;
  std::vector<ValidationItem> items;
};

// Checks every ModelSpec and CoefficientProvider invariant. Coefficient
// sup bounds are audited on the [0,1]^d lattice with `resolution` points per
// axis; a non-finite provider value is a hard error naming the coefficient
// and the sample point.
ValidationReport validate_model(const ModelSpec& spec, int resolution);

struct InfimumBounds {
  double Gamma_alpha = 0.0;  // certified lower bound of inf Gamma over I_alpha^d
  double H_alpha = 0.0;      // min over m of certified lower bounds of inf H_{1m}
  bool assumption22_ok = false;
};

// Lattice sampling over the closed box [alpha, 1-(d-1)alpha]^d at
// `resolution` points per axis, minus the declared-Lipschitz safety margin
// L*h_lattice, so the result never overestimates the true infimum.
InfimumBounds infimum_bounds(const ModelSpec& spec, double alpha, int resolution = 33);

}  // namespace rothe
