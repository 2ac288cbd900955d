#pragma once

// Generalized Weyl algebras D(sigma, a) = D[X, Y; sigma, a] over a
// commutative ring D of polynomials / Laurent polynomials over Q(q):
//
//   X d = sigma(d) X,  Y d = sigma^-1(d) Y,  YX = a,  XY = sigma(a).
//
// Elements are sums d_n v_n with v_n = X^n (n > 0), Y^-n (n < 0), v_0 = 1.

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qsa/algebra.hpp"
#include "qsa/presented.hpp"

namespace qsa {

class GWAData {
 public:
  using Ptr = std::shared_ptr<const GWAData>;

  /// D must be commutative; sigma and sigma_inv list the images of D's
  /// generators and must be mutually inverse. Throws std::invalid_argument.
  static Ptr make(QCAlgebra::Ptr D, std::vector<QCElement> sigma, std::vector<QCElement> sigma_inv, QCElement a);
  /// sigma(x_k) = q^shifts[k] x_k.
  static Ptr diagonal(QCAlgebra::Ptr D, const std::vector<long>& shifts, QCElement a);

  const QCAlgebra::Ptr& D() const { return D_; }
  const QCElement& a() const { return a_; }
  const std::vector<QCElement>& sigma() const { return sigma_; }
  const std::vector<QCElement>& sigma_inv() const { return sigma_inv_; }

  /// sigma^n(d) for any integer n.
  QCElement apply_sigma(const QCElement& d, long n) const;
  /// The coefficient (n, m) with v_n v_m = (n, m) v_{n+m}, by the closed
  /// product formula.
  QCElement left_coefficient(long n, long m) const;
  /// The coefficient <n, m> with v_n v_m = v_{n+m} <n, m>, obtained by moving
  /// coefficients to the right one generator at a time.
  QCElement right_coefficient(long n, long m) const;

 private:
  GWAData(QCAlgebra::Ptr D, std::vector<QCElement> s, std::vector<QCElement> si, QCElement a)
      : D_(std::move(D)), sigma_(std::move(s)), sigma_inv_(std::move(si)), a_(std::move(a)) {}
  QCAlgebra::Ptr D_;
  std::vector<QCElement> sigma_, sigma_inv_;
  QCElement a_;
};

/// Substitute images for the generators of d's parent (negative exponents
/// need invertible images).
QCElement substitute(const QCElement& d, const std::vector<QCElement>& images);

class GWAElement {
 public:
  explicit GWAElement(GWAData::Ptr data) : data_(std::move(data)) {}
  /// d v_n.
  GWAElement(GWAData::Ptr data, const QCElement& d, long n = 0);
  static GWAElement v(GWAData::Ptr data, long n);

  const GWAData::Ptr& data() const { return data_; }
  const std::map<long, QCElement>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  QCElement component(long n) const;

  friend GWAElement operator+(const GWAElement& x, const GWAElement& y);
  friend GWAElement operator-(const GWAElement& x, const GWAElement& y);
  friend GWAElement operator*(const GWAElement& x, const GWAElement& y);
  friend bool operator==(const GWAElement& x, const GWAElement& y);

  std::string to_string() const;

 private:
  void add(long n, const QCElement& d);
  void check_data(const GWAElement& o) const;
  GWAData::Ptr data_;
  std::map<long, QCElement> comps_;
};

/// Product built from single generators and the relations alone: X and Y
/// are pushed through one at a time using YX = a, XY = sigma(a) and the
/// commutation with D. Used as an oracle for operator*.
GWAElement gwa_mul_stepwise(const GWAElement& x, const GWAElement& y);

/// Random element: components v_n with |n| + deg d_n <= max_degree and
/// D-monomials with nonnegative exponents.
GWAElement random_gwa(const GWAData::Ptr& data, std::mt19937_64& rng, long max_degree, int max_terms = 3);

// ---------------------------------------------------------------- ambiskew

/// E = D[X, Y; sigma, b, rho]: X d = sigma(d) X, Y d = sigma^-1(d) Y,
/// XY - rho YX = b, with b, rho in D, rho invertible and sigma(rho) = rho.
struct AmbiskewData {
  QCAlgebra::Ptr D;
  std::vector<QCElement> sigma, sigma_inv;
  QCElement b, rho;
};

struct AmbiskewResult {
  /// D[H][X, Y; sigma, H] with sigma(H) = rho H + b.
  GWAData::Ptr form1;
  /// A solution of rho alpha - sigma(alpha) = b supported on the monomials of b.
  std::optional<QCElement> alpha;
  /// D[C][X, Y; sigma, rho^-1 C - alpha] with sigma(C) = rho C; null when no
  /// alpha was found.
  GWAData::Ptr form3;
  Report report;
};

/// Both GWA presentations of E. The report checks the hypotheses on rho and,
/// when alpha exists, that C = rho(YX + alpha) = XY + sigma(alpha) and that C
/// is normal (X C = rho C X, Y C = rho^-1 C Y) inside both GWAs.
AmbiskewResult ambiskew_to_gwa(const AmbiskewData& e);

/// Embed d into a ring whose generators extend those of d's parent.
QCElement extend(const QCElement& d, const QCAlgebra::Ptr& bigger);

// ---------------------------------------------------------------- E inside A

/// The subalgebra generated by X, E, Y: D = K[X], sigma(X) = qX, b = X,
/// rho = q^-1, with E in the role of X and Y in the role of Y.
AmbiskewData e_ambiskew();
/// K[X, phi][E, Y; sigma, a = (phi - X)/(q^-1 - q)], sigma(X) = qX,
/// sigma(phi) = q^-1 phi.
GWAData::Ptr e_gwa();

/// Algebra map from a GWA into A, given by the images of D's generators and
/// of v_1, v_-1.
struct GWAToA {
  GWAData::Ptr data;
  std::vector<AlgebraElement> d_images;
  AlgebraElement v1, vm1;
  AlgebraElement operator()(const QCElement& d) const;
  AlgebraElement operator()(const GWAElement& x) const;
};

/// X -> X, phi -> phi, v_1 -> E, v_-1 -> Y on e_gwa().
GWAToA e_structure_map();

/// The structure map is multiplicative on `trials` random pairs with
/// components of degree <= n, plus the images of v_1 v_-1, v_-1 v_1 and 1.
Report iso_E_check(long n, int trials, std::uint64_t seed = 1);

/// Associativity of gwa multiplication, agreement with gwa_mul_stepwise and
/// <n, m> = sigma^{-n-m}((n, m)) for |n|, |m| <= bound.
Report gwa_law_check(const GWAData::Ptr& data, int trials, long bound, std::uint64_t seed = 1);

}  // namespace qsa
