#pragma once

// The quantum spatial ageing algebra A, generated by K, K^-1, X, Y, E with
//
//   EK = q^-2 KE,  XK = q^-1 KX,  YK = q KY,
//   EX = q XE,     EY = X + q^-1 YE,  qYX = XY.
//
// Elements are kept in the PBW normal form sum c * K^i X^a Y^b E^c.

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qsa/scalar.hpp"

namespace qsa {

struct PbwMonomial {
  long i = 0;  // exponent of K
  long a = 0;  // X
  long b = 0;  // Y
  long c = 0;  // E

  long degree() const { return (i < 0 ? -i : i) + a + b + c; }
  /// Eigenvalue exponent of conjugation by K: K m K^-1 = q^weight m.
  long weight() const { return a - b + 2 * c; }

  friend bool operator==(const PbwMonomial&, const PbwMonomial&) = default;
  /// Graded lexicographic on (degree, i, a, b, c).
  friend std::strong_ordering operator<=>(const PbwMonomial& l, const PbwMonomial& r) {
    if (auto o = l.degree() <=> r.degree(); o != 0) return o;
    if (auto o = l.i <=> r.i; o != 0) return o;
    if (auto o = l.a <=> r.a; o != 0) return o;
    if (auto o = l.b <=> r.b; o != 0) return o;
    return l.c <=> r.c;
  }
};

std::string to_string(const PbwMonomial& m);

class AlgebraElement {
 public:
  using Terms = std::map<PbwMonomial, Scalar>;

  AlgebraElement() = default;
  AlgebraElement(const Scalar& s);  // NOLINT(google-explicit-constructor)
  AlgebraElement(const PbwMonomial& m, const Scalar& c = Scalar(1));

  static AlgebraElement K(long power = 1) { return AlgebraElement(PbwMonomial{power, 0, 0, 0}); }
  static AlgebraElement X() { return AlgebraElement(PbwMonomial{0, 1, 0, 0}); }
  static AlgebraElement Y() { return AlgebraElement(PbwMonomial{0, 0, 1, 0}); }
  static AlgebraElement E() { return AlgebraElement(PbwMonomial{0, 0, 0, 1}); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const PbwMonomial& m) const;
  /// Largest total degree of a monomial (0 for the zero element).
  long degree() const;

  friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& x);
  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& y);
  AlgebraElement pow(long n) const;
  /// Accumulate c * m in place.
  void add_term(const PbwMonomial& m, const Scalar& c);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  /// Invertible elements are exactly c * K^i with c != 0.
  static std::optional<AlgebraElement> invert(const AlgebraElement& x);

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  Terms terms_;
};

/// Print sum c_k * name_k in canonical style; an empty name is the unit.
std::string render_sum(const std::vector<std::pair<Scalar, std::string>>& terms);

/// Product of two PBW monomials, already in normal form.
AlgebraElement mul_monomials(const PbwMonomial& l, const PbwMonomial& r);

/// The normal element phi = (q^-1 - q) YE + X.
AlgebraElement phi();

/// Parse an element of A ("E*Y - q^-1*Y*E"). Symbols: K, Kinv, X, Y, E, phi.
AlgebraElement parse_element(const std::string& text);

// ------------------------------------------------------------ rewriting

/// Letters of the free algebra on the generators.
enum class Letter : std::uint8_t { K, Kinv, X, Y, E };

/// A scalar multiple of a word in the generators.
struct Word {
  std::vector<Letter> letters;
  Scalar coeff = Scalar(1);
};

enum class RewriteStrategy { LeftmostFirst, RightmostFirst };

/// Normalize a word by applying the defining relations as rewrite rules on
/// adjacent out-of-order pairs. Independent of operator*; used as the
/// confluence witness.
AlgebraElement rewrite_normal_form(const Word& w, RewriteStrategy strategy);

AlgebraElement letter_element(Letter l);

// ------------------------------------------------------------ normality

struct NormalityWitness {
  Scalar s_X, s_Y, s_E, s_K;  // g * x = s_g * x * g
};

/// Find s_g with g x = s_g x g for g in {X, Y, E, K}; nullopt when some
/// generator admits no such scalar (x is not q-normal). x must be nonzero.
std::optional<NormalityWitness> normality_witness(const AlgebraElement& x);

// ------------------------------------------------------------ identities

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<CheckResult> checks;
  bool all_passed() const;
  std::size_t failures() const;
  std::string to_string() const;
  void add(std::string name, bool ok, std::string detail = {});
};

/// Both sides of every structural identity of A in normal form; i ranges
/// 1..max_i for the E Y^i and Y E^i expansions.
Report verify_identity_suite(int max_i = 8);

/// Cross relations of the smash product recomputed from the module-algebra
/// action of K, E on the quantum plane and the coproduct of E.
Report smash_consistency_check();

// ------------------------------------------------------------ filtration

/// All PBW monomials with |i| + a + b + c <= n, in monomial order.
std::vector<PbwMonomial> filtration_basis(long n);
/// Number of PBW monomials with |i| + a + b + c <= n.
std::uint64_t filtration_dim(long n);

/// Basis (reduced echelon, leading coefficient 1) of the elements of F_n
/// commuting with every element of gens.
std::vector<AlgebraElement> centralizer_basis(const std::vector<AlgebraElement>& gens, long n);

/// True when every element of `expected` lies in span(basis) and the
/// dimensions agree.
bool same_span(const std::vector<AlgebraElement>& basis, const std::vector<AlgebraElement>& expected);

// ------------------------------------------------------------ random

/// Seeded random elements for property tests: monomials with |i| <= 2 and
/// a, b, c <= 2 (further capped at total degree max_degree), coefficients
/// from {1, -1, q, q^-1, q^2 - 1}.
class ElementSampler {
 public:
  explicit ElementSampler(std::uint64_t seed) : rng_(seed) {}
  PbwMonomial monomial(long max_degree = 8);
  Scalar coefficient();
  AlgebraElement element(long max_degree = 3, int max_terms = 3);
  Word word(std::size_t max_length = 6);
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qsa
