#include "qsa/automorphisms.hpp"

#include <map>
#include <stdexcept>

#include "qsa/expr.hpp"

namespace qsa {

Aut::Aut(Scalar lambda, Scalar mu, Scalar gamma, long i)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), gamma_(std::move(gamma)), i_(i) {
  if (lambda_.is_zero() || mu_.is_zero() || gamma_.is_zero())
    throw std::invalid_argument("automorphism parameters lambda, mu, gamma must be nonzero");
}

AlgebraElement Aut::image_K() const { return gamma_ * AlgebraElement::K(); }
AlgebraElement Aut::image_Kinv() const { return gamma_.inverse() * AlgebraElement::K(-1); }
AlgebraElement Aut::image_X() const { return lambda_ * (AlgebraElement::K(i_) * AlgebraElement::X()); }
AlgebraElement Aut::image_Y() const { return mu_ * (AlgebraElement::K(-i_) * AlgebraElement::Y()); }

AlgebraElement Aut::image_E() const {
  return (lambda_ / mu_ * Scalar::q_power(-2 * i_)) * (AlgebraElement::K(2 * i_) * AlgebraElement::E());
}

std::string Aut::to_string() const {
  return "aut(" + lambda_.to_string() + ";" + mu_.to_string() + ";" + gamma_.to_string() + ";" +
         std::to_string(i_) + ")";
}

Aut Aut::parse(const std::string& text) {
  const CallLiteral c = parse_call(text, 4);
  if (c.name != "aut") throw ParseError(ParseError::Kind::Syntax, 1, "expected aut(lambda;mu;gamma;i)");
  return Aut(c.nonzero_scalar(0), c.nonzero_scalar(1), c.nonzero_scalar(2), c.integer(3));
}

AlgebraElement apply(const Aut& s, const AlgebraElement& x) {
  // Each generator image is a scalar times a monomial, so each monomial image
  // is one product of cached powers.
  std::map<std::pair<int, long>, AlgebraElement> cache;
  auto power = [&](int g, long e) -> const AlgebraElement& {
    auto it = cache.find({g, e});
    if (it != cache.end()) return it->second;
    AlgebraElement base;
    switch (g) {
      case 0: base = e >= 0 ? s.image_K() : s.image_Kinv(); break;
      case 1: base = s.image_X(); break;
      case 2: base = s.image_Y(); break;
      default: base = s.image_E(); break;
    }
    return cache.emplace(std::make_pair(g, e), base.pow(e >= 0 ? e : -e)).first->second;
  };
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) out += c * (power(0, m.i) * power(1, m.a) * power(2, m.b) * power(3, m.c));
  return out;
}

Aut compose(const Aut& s, const Aut& t) {
  const long j = t.i();
  return Aut(s.lambda() * t.lambda() * s.gamma().pow(j), s.mu() * t.mu() * s.gamma().pow(-j), s.gamma() * t.gamma(),
             s.i() + j);
}

Aut inverse(const Aut& s) {
  return Aut(s.lambda().inverse() * s.gamma().pow(s.i()), s.mu().inverse() * s.gamma().pow(-s.i()),
             s.gamma().inverse(), -s.i());
}

Scalar z_scaling(const Aut& s) { return s.lambda() * s.mu() / s.gamma() * Scalar::q_power(s.i()); }

Scalar c_scaling(const Aut& s) { return s.lambda() * s.mu() * s.gamma() * Scalar::q_power(s.i()); }

PrimeIdeal act_on_spectrum(const Aut& s, const PrimeIdeal& I) {
  switch (I.kind()) {
    case PrimeKind::P: return PrimeIdeal::p(*I.parameter() / s.gamma());
    case PrimeKind::Q: return PrimeIdeal::q(*I.parameter() / z_scaling(s));
    case PrimeKind::R: return PrimeIdeal::r(*I.parameter() / c_scaling(s));
    default: return I;
  }
}

Report check_relations(const Aut& s) {
  Report r;
  r.title = "relations under " + s.to_string();
  const AlgebraElement K = s.image_K(), Ki = s.image_Kinv(), X = s.image_X(), Y = s.image_Y(), E = s.image_E();
  const Scalar q = Scalar::q(), qi = Scalar::q_power(-1);
  auto check = [&](const char* name, const AlgebraElement& v) { r.add(name, v.is_zero(), v.to_string()); };
  check("EK = q^-2 KE", E * K - Scalar::q_power(-2) * (K * E));
  check("XK = q^-1 KX", X * K - qi * (K * X));
  check("YK = q KY", Y * K - q * (K * Y));
  check("EX = q XE", E * X - q * (X * E));
  check("EY = X + q^-1 YE", E * Y - X - qi * (Y * E));
  check("qYX = XY", q * (Y * X) - X * Y);
  check("K Kinv = 1", K * Ki - AlgebraElement(Scalar(1)));
  check("Kinv K = 1", Ki * K - AlgebraElement(Scalar(1)));
  return r;
}

Aut random_aut(std::mt19937_64& rng, long max_i) {
  static const char* const pool[] = {"1", "-1", "2", "q", "q^-1", "q^2 - 1", "-3*q^2", "(q + 1)/(q - 2)"};
  auto pick = [&] { return Scalar::parse(pool[rng() % std::size(pool)]); };
  Scalar l = pick(), m = pick(), g = pick();
  const long i = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * max_i + 1)) - max_i;
  return Aut(l, m, g, i);
}

}  // namespace qsa
