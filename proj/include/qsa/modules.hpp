#pragma once

// Explicit A-modules, plus the sigma-orbit bookkeeping behind l-normal
// elements.

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qsa/algebra.hpp"
#include "qsa/presented.hpp"
#include "qsa/spectrum.hpp"

namespace qsa {

using Label = std::vector<long>;

class ModuleVector {
 public:
  using Terms = std::map<Label, Scalar>;
  ModuleVector() = default;
  explicit ModuleVector(const Label& l, const Scalar& c = Scalar(1)) { add(l, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Label& l) const;
  void add(const Label& l, const Scalar& c);

  friend ModuleVector operator+(const ModuleVector& x, const ModuleVector& y);
  friend ModuleVector operator-(const ModuleVector& x, const ModuleVector& y);
  friend ModuleVector operator*(const Scalar& s, const ModuleVector& x);
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

 private:
  Terms terms_;
};

class Module {
 public:
  virtual ~Module() = default;
  virtual std::string name() const = 0;
  /// Action of one generator on a basis vector.
  virtual ModuleVector act_basis(Letter g, const Label& l) const = 0;
  virtual std::string label_string(const Label& l) const = 0;
  /// Label of the distinguished generating vector.
  virtual Label origin() const = 0;
  /// Parse "(i,m)" or "j" style labels.
  virtual Label parse_label(const std::string& text) const = 0;

  ModuleVector act(Letter g, const ModuleVector& v) const;
  /// Letters are applied right to left.
  ModuleVector act(const Word& w, const ModuleVector& v) const;
  /// Through the PBW form: K^i X^a Y^b E^c acts as K^i, then X^a, Y^b, E^c.
  ModuleVector act(const AlgebraElement& x, const ModuleVector& v) const;
  std::string to_string(const ModuleVector& v) const;
};

/// The six defining relations of A and K Kinv = Kinv K = 1 act as zero on
/// every label in `labels`.
Report check_relations_on(const Module& M, const std::vector<Label>& labels);

// ---------------------------------------------------------------- weight modules

struct WeightModuleSpec {
  Scalar kappa;   // K acts on (0, m) by kappa
  Scalar lambda;  // t e_m = lambda q^{2m} e_m
};

/// Basis Y^i (x) e_m, label (i, m):
///   K (i,m) = q^-i kappa (i,m),     Y (i,m) = (i+1,m),
///   X (i,m) = q^i lambda q^2m (i-1,m),
///   E (i,m) = ((q^-i (i-2,m+1) - q^i lambda q^2m (i-2,m)) / (q^-1 - q).
class WeightModule : public Module {
 public:
  /// Throws std::invalid_argument when kappa or lambda is zero.
  explicit WeightModule(WeightModuleSpec spec);
  const WeightModuleSpec& spec() const { return spec_; }

  std::string name() const override;
  ModuleVector act_basis(Letter g, const Label& l) const override;
  std::string label_string(const Label& l) const override;
  Label origin() const override { return {0, 0}; }
  Label parse_label(const std::string& text) const override;

 private:
  WeightModuleSpec spec_;
};

/// Labels (i, m) with |i|, |m| <= window.
std::vector<Label> window_labels(long window);

Report check_module_axioms(const WeightModuleSpec& spec, long window);

/// K-eigenvalues q^-i kappa read off the action on (i, 0), |i| <= window.
std::vector<Scalar> support(const WeightModuleSpec& spec, long window);

/// dim span { w (0,0) : w a PBW monomial of degree <= n }.
std::size_t module_growth(const WeightModuleSpec& spec, long n);

/// X and phi send the labels in the window to linearly independent vectors
/// (zero kernel on their span).
Report faithfulness_probe(const WeightModuleSpec& spec, long window);

/// Cyclicity within the reachable part: (0,0) generates every (i, m) with
/// |i| <= 2, 0 <= m <= 2 using words of length <= max_len; each of `samples`
/// random vectors reaches each of its basis components with words of length
/// <= 4 (K and YX separate the labels); and no
/// word lowers the least m, so (0,0) is outside the submodule of (0,1).
Report cyclicity_probe(const WeightModuleSpec& spec, int samples, std::size_t max_len, std::uint64_t seed = 1);

/// Span of { w v : w a word of length <= max_len }.
std::vector<ModuleVector> word_span(const Module& M, const ModuleVector& v, std::size_t max_len);
bool in_span(const std::vector<ModuleVector>& basis, const ModuleVector& v);

// ---------------------------------------------------------------- unfaithful

enum class UnfaithfulCase { A, B, C, D, E };

struct UnfaithfulModuleSpec {
  UnfaithfulCase which;
  /// (a) kappa; (b), (c) lambda; (d), (e) zeta.
  Scalar param;
  /// (d), (e): K-eigenvalue mu of the generating vector.
  Scalar point = Scalar(1);
};

/// R / R(g - c) for a prime factor algebra R = target of a quotient map and
/// one of its generators g (no relation for the one-dimensional case).
/// Basis: the monomials of R without g.
class CyclicModule : public Module {
 public:
  CyclicModule(std::string name, QuotientMap map, std::optional<std::size_t> g, Scalar value);

  const QuotientMap& map() const { return map_; }
  std::string name() const override { return name_; }
  ModuleVector act_basis(Letter g, const Label& l) const override;
  std::string label_string(const Label& l) const override;
  Label origin() const override;
  Label parse_label(const std::string& text) const override;
  /// Write an element of R times the generating vector in the basis.
  ModuleVector reduce(const QCElement& r) const;
  /// Basis vectors whose free exponents lie in [-range, range].
  std::vector<Label> sample_labels(long range) const;

 private:
  std::string name_;
  QuotientMap map_;
  std::optional<std::size_t> g_;
  Scalar value_;
};

struct UnfaithfulModule {
  UnfaithfulModuleSpec spec;
  std::shared_ptr<const CyclicModule> module;
  PrimeIdeal annihilator;
  Report report;
};

/// Build the module of the given case and certify: the relations of A act
/// as zero, the stated annihilator kills the sampled basis, the witnesses
/// of the case act as stated, and every element of F_3 killing the sampled
/// basis lies in the stated annihilator.
UnfaithfulModule build_unfaithful(const UnfaithfulModuleSpec& spec);

/// Elements of F_n acting as zero on all the given vectors (basis of the
/// kernel of the evaluation map).
std::vector<AlgebraElement> killers(const Module& M, const std::vector<ModuleVector>& vs, long n);

/// "weight(kappa;lambda)", "case-a(kappa)", "case-b(lambda)", "case-c(lambda)",
/// "case-d(zeta;mu)", "case-e(zeta;mu)". Throws ParseError.
std::shared_ptr<const Module> parse_module(const std::string& text);

// ---------------------------------------------------------------- orbits

/// D = K[H] (F-type) or K[H, H^-1] (I-type), sigma(H) = qH. A point is the
/// maximal ideal (H - root); sigma^j((H - r)) = (H - q^-j r).
enum class RingType { F, I };

struct OrbitPoint {
  RingType ring;
  Scalar root;
  /// Throws std::invalid_argument for root 0 over the Laurent ring.
  OrbitPoint(RingType t, Scalar r);
  /// The sigma-fixed ideal (H) of K[H].
  bool exceptional() const { return root.is_zero(); }
};

/// j with r = sigma^j(p), or nullopt. The exceptional point is only related
/// to itself (j = 0). Throws std::invalid_argument on mixed ring types.
std::optional<long> same_orbit(const OrbitPoint& p, const OrbitPoint& r);

/// b = t^m beta_m + ... + t^n beta_n (m < n) with beta_m, beta_n given by
/// their roots in H (units have no roots).
struct FactoredLaurent {
  RingType ring;
  std::vector<Scalar> roots_m, roots_n;
};

/// beta_n < beta_m: no root of beta_n and root of beta_m lie on a common
/// infinite orbit with the ideal of beta_n's root >= that of beta_m's.
bool l_normal(const FactoredLaurent& b);
/// The same predicate by scanning sigma^j, |j| <= window.
bool l_normal_bruteforce(const FactoredLaurent& b, long window = 20);

/// Roots of c * prod (H - r_k) for polynomials of degree <= 1 and monomials
/// c H^k. Anything else throws std::invalid_argument (no factorization).
std::vector<Scalar> linear_roots(const QCElement& beta);

/// Random factored inputs whose roots are q-power multiples of a few seeds.
FactoredLaurent random_factored(std::mt19937_64& rng);

}  // namespace qsa
