#pragma once

// q-commuting presented algebras: generators g_0..g_{n-1}, some of them
// invertible, with g_j g_i = q^c(j,i) g_i g_j. Quantum affine spaces, tori and
// mixtures of the two; every prime factor algebra of A is of this shape.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qsa/algebra.hpp"
#include "qsa/scalar.hpp"

namespace qsa {

class QCElement;

/// Exponent vectors, ordered by total |degree| and then lexicographically.
struct ExponentLess {
  bool operator()(const std::vector<long>& l, const std::vector<long>& r) const;
};

class QCAlgebra : public std::enable_shared_from_this<QCAlgebra> {
 public:
  using Ptr = std::shared_ptr<const QCAlgebra>;

  /// comm is the full antisymmetric matrix c (n x n, zero diagonal).
  static Ptr make(std::string name, std::vector<std::string> generators, std::vector<bool> invertible,
                  std::vector<std::vector<long>> comm);
  static Ptr from_json(const nlohmann::json& manifest);
  nlohmann::json to_json() const;

  const std::string& name() const { return name_; }
  std::size_t ngens() const { return gens_.size(); }
  const std::string& generator(std::size_t k) const { return gens_[k]; }
  bool invertible(std::size_t k) const { return inv_[k]; }
  long comm(std::size_t j, std::size_t i) const { return c_[j][i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Residue-field label when the presentation is a specialization
  /// (for instance Z = zeta); purely descriptive.
  std::optional<std::pair<std::string, Scalar>> residue;

  QCElement one() const;
  QCElement constant(const Scalar& s) const;
  QCElement gen(std::size_t k, long power = 1) const;
  QCElement monomial(const std::vector<long>& exps, const Scalar& c = Scalar(1)) const;

  /// q-exponent of (monomial l) * (monomial r) relative to the monomial l+r.
  long product_twist(const std::vector<long>& l, const std::vector<long>& r) const;

  bool same_as(const QCAlgebra& o) const;
  /// "K^2*Y^-1"; empty for the unit.
  std::string monomial_string(const std::vector<long>& e) const;

 private:
  QCAlgebra() = default;
  std::string name_;
  std::vector<std::string> gens_;
  std::vector<bool> inv_;
  std::vector<std::vector<long>> c_;
};

class QCElement {
 public:
  using Terms = std::map<std::vector<long>, Scalar, ExponentLess>;

  explicit QCElement(QCAlgebra::Ptr parent) : parent_(std::move(parent)) {}
  QCElement(QCAlgebra::Ptr parent, const Scalar& s);  // constant

  const QCAlgebra::Ptr& parent() const { return parent_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const std::vector<long>& e) const;
  void add_term(const std::vector<long>& e, const Scalar& c);

  friend QCElement operator+(const QCElement& x, const QCElement& y);
  friend QCElement operator-(const QCElement& x, const QCElement& y);
  friend QCElement operator*(const QCElement& x, const QCElement& y);
  friend QCElement operator*(const Scalar& s, const QCElement& x);
  QCElement operator-() const;
  QCElement pow(long n) const;
  friend bool operator==(const QCElement& x, const QCElement& y);

  /// Invertible elements of a q-commuting domain: c times a monomial in the
  /// invertible generators.
  static std::optional<QCElement> invert(const QCElement& x);

  std::string to_string() const;

 private:
  void check_parent(const QCElement& o) const;
  QCAlgebra::Ptr parent_;
  Terms terms_;
};

/// Algebra homomorphism A -> target given by the images of the generators.
struct QuotientMap {
  std::string name;
  QCAlgebra::Ptr target;
  std::optional<QCElement> K, Kinv, X, Y, E;
  /// Extra named elements available to the expression evaluator (Z, C).
  std::map<std::string, QCElement> symbols;

  QuotientMap(std::string n, QCAlgebra::Ptr t) : name(std::move(n)), target(std::move(t)) {}
};

/// Send every defining relation of A (and K K^-1 = K^-1 K = 1) through m.
Report check_well_defined(const QuotientMap& m);

/// Image of x under m; m must be well-defined.
QCElement project(const QuotientMap& m, const AlgebraElement& x);

/// Basis of the central elements of degree <= n: non-invertible exponents
/// summing to at most n and each invertible exponent in [-n, n].
std::vector<QCElement> center_basis_qc(const QCAlgebra::Ptr& A, long n);

/// True when every expected element lies in span(basis) and dimensions match.
bool same_span_qc(const std::vector<QCElement>& basis, const std::vector<QCElement>& expected);

// ---------------------------------------------------------------- presets

namespace presets {

QuotientMap A_mod_X();
QuotientMap A_mod_phi();
QuotientMap A_mod_Y();
QuotientMap A_mod_E();
QuotientMap A_mod_YE();
/// L = K[K^{+-1}], the same target as A_mod_YE.
QuotientMap L();
/// A -> Y = K[Y^{+-1}][K^{+-1}; tau], X, E -> 0; kernel (E).
QuotientMap Ybb();
/// A/(Y, E, K - kappa): the ground field.
QuotientMap A_mod_P(const Scalar& kappa);
/// A/(X, Z - zeta), zeta != 0.
QuotientMap A_mod_X_q(const Scalar& zeta);
/// A/(phi, C - zeta), zeta != 0.
QuotientMap A_mod_phi_r(const Scalar& zeta);

/// Names accepted by by_name; parametrised ones take "(scalar)".
std::vector<std::string> names();
/// "A_mod_X", "A_mod_X_q(q^2)", "A_mod_P(2)", ... Throws std::invalid_argument.
QuotientMap by_name(const std::string& spec);

}  // namespace presets

/// Evaluate an expression in the target of m. Symbols: generator names of
/// the target, <gen>inv for invertible generators, the images of K, Kinv,
/// X, Y, E, phi, and the extra symbols of m (Z, C).
QCElement parse_in(const QuotientMap& m, const std::string& text);

}  // namespace qsa
