#pragma once

// Prime ideals of A, membership through the factor presentations, the
// inclusion poset and its Hasse diagram.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qsa/algebra.hpp"
#include "qsa/presented.hpp"

namespace qsa {

enum class PrimeKind { Zero, X, Phi, Y, E, YE, P, Q, R };

class PrimeIdeal {
 public:
  static PrimeIdeal zero();
  static PrimeIdeal x();
  static PrimeIdeal phi();
  static PrimeIdeal y();
  static PrimeIdeal e();
  static PrimeIdeal ye();
  /// (Y, E, K - kappa), kappa != 0.
  static PrimeIdeal p(const Scalar& kappa);
  /// (X, Z - zeta) with Z = phi Y K^-1, zeta != 0.
  static PrimeIdeal q(const Scalar& zeta);
  /// (phi, C - zeta) with C = X Y K, zeta != 0.
  static PrimeIdeal r(const Scalar& zeta);

  PrimeKind kind() const { return kind_; }
  const std::optional<Scalar>& parameter() const { return param_; }
  const std::vector<AlgebraElement>& generators() const { return gens_; }
  /// Factor map with kernel exactly this ideal; absent for 0.
  const std::optional<QuotientMap>& map() const { return map_; }

  std::string name() const;
  /// Family-level node name used in diagrams.
  std::string node() const;

  friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) {
    return a.kind_ == b.kind_ && a.param_ == b.param_;
  }

 private:
  PrimeIdeal(PrimeKind k, std::optional<Scalar> p, std::vector<AlgebraElement> g, std::optional<QuotientMap> m)
      : kind_(k), param_(std::move(p)), gens_(std::move(g)), map_(std::move(m)) {}
  PrimeKind kind_;
  std::optional<Scalar> param_;
  std::vector<AlgebraElement> gens_;
  std::optional<QuotientMap> map_;
};

/// Z = phi Y K^-1 and C = X Y K as elements of A.
AlgebraElement element_Z();
AlgebraElement element_C();

bool contains(const PrimeIdeal& I, const AlgebraElement& x);
/// I <= J iff every generator of I lies in J.
bool leq(const PrimeIdeal& I, const PrimeIdeal& J);

struct Classification {
  bool maximal = false;
  bool primitive = false;
  bool completely_prime = true;
};
Classification classify(const PrimeIdeal& I);

/// One representative per node: 0, (X), (phi), (Y), (E), (Y,E), P, Q, R.
std::vector<PrimeIdeal> representatives(const Scalar& kappa = Scalar(1), const Scalar& zeta = Scalar(1));

struct HasseDiagram {
  std::vector<std::string> nodes;
  std::vector<std::vector<bool>> leq;                    // leq[i][j]: nodes[i] <= nodes[j]
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)
  std::string dot() const;
  nlohmann::json to_json() const;
};

HasseDiagram hasse();

enum class Membership { Yes, Unknown };

/// The degree-<= n slice of the two-sided ideal generated by gens, spanned by
/// m1 * g * m2 over PBW monomials with deg m1 + deg g + deg m2 <= n.
class IdealSlice {
 public:
  IdealSlice(const std::vector<AlgebraElement>& gens, long n);
  Membership test(const AlgebraElement& x) const;
  std::size_t dimension() const;
  long degree() const { return n_; }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  long n_;
};

Membership member_bounded(const std::vector<AlgebraElement>& gens, const AlgebraElement& x, long n);

}  // namespace qsa
