#pragma once

// The automorphisms sigma_{lambda, mu, gamma, i} of A:
//
//   X -> lambda K^i X,   Y -> mu K^-i Y,   K -> gamma K,
//   E -> lambda mu^-1 q^-2i K^2i E.

#include <random>
#include <string>

#include "qsa/algebra.hpp"
#include "qsa/scalar.hpp"
#include "qsa/spectrum.hpp"

namespace qsa {

class Aut {
 public:
  /// Throws std::invalid_argument when lambda, mu or gamma is zero.
  Aut(Scalar lambda, Scalar mu, Scalar gamma, long i);
  static Aut identity() { return Aut(Scalar(1), Scalar(1), Scalar(1), 0); }

  const Scalar& lambda() const { return lambda_; }
  const Scalar& mu() const { return mu_; }
  const Scalar& gamma() const { return gamma_; }
  long i() const { return i_; }

  /// Images of the generators.
  AlgebraElement image_K() const;
  AlgebraElement image_Kinv() const;
  AlgebraElement image_X() const;
  AlgebraElement image_Y() const;
  AlgebraElement image_E() const;

  /// "aut(lambda;mu;gamma;i)".
  std::string to_string() const;
  /// Inverse of to_string; scalars use the Scalar syntax. Throws ParseError.
  static Aut parse(const std::string& text);

  friend bool operator==(const Aut&, const Aut&) = default;

 private:
  Scalar lambda_, mu_, gamma_;
  long i_;
};

AlgebraElement apply(const Aut& s, const AlgebraElement& x);
/// s o t.
Aut compose(const Aut& s, const Aut& t);
Aut inverse(const Aut& s);

/// Scalars c with s(Z) = c Z and s(C) = c C.
Scalar z_scaling(const Aut& s);
Scalar c_scaling(const Aut& s);

/// The prime s(I).
PrimeIdeal act_on_spectrum(const Aut& s, const PrimeIdeal& I);

/// The six defining relations and K K^-1 = 1 sent through s.
Report check_relations(const Aut& s);

/// Parameters drawn from a fixed pool of nonzero scalars, |i| <= max_i.
Aut random_aut(std::mt19937_64& rng, long max_i = 5);

}  // namespace qsa
