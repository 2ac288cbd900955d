#include "qsa/suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "qsa/automorphisms.hpp"
#include "qsa/growth.hpp"
#include "qsa/gwa.hpp"
#include "qsa/modules.hpp"
#include "qsa/presented.hpp"
#include "qsa/spectrum.hpp"

namespace qsa {

namespace {

void absorb(Report& into, const Report& from, const std::string& prefix = {}) {
  for (const auto& c : from.checks) into.checks.push_back({prefix + c.name, c.passed, c.detail});
}

std::vector<QuotientMap> nine_maps() {
  return {presets::A_mod_X(),
          presets::A_mod_phi(),
          presets::A_mod_Y(),
          presets::A_mod_E(),
          presets::A_mod_YE(),
          presets::A_mod_P(Scalar::parse("q^2 + 1")),
          presets::A_mod_X_q(Scalar::parse("2*q")),
          presets::A_mod_phi_r(Scalar::parse("(q - 1)/(q + 3)")),
          presets::Ybb()};
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace

Report identity_checks() {
  Report r;
  r.title = "identities";
  absorb(r, verify_identity_suite(8));
  absorb(r, smash_consistency_check(), "smash: ");
  const Scalar q = Scalar::q();
  const auto mx = presets::A_mod_X();
  const AlgebraElement Y = AlgebraElement::Y(), E = AlgebraElement::E();
  const QCElement z = project(mx, (1 - q * q) * (E * Y.pow(2) * AlgebraElement::K(-1)));
  r.add("Z = (1 - q^2) E Y^2 K^-1 mod (X)", z == mx.symbols.at("Z") && z == project(mx, element_Z()));
  const auto w = normality_witness(phi());
  r.add("phi is normal: g phi = s_g phi g with (s_X, s_Y, s_E, s_K) = (1, q, q^-1, q)",
        w && w->s_X == Scalar(1) && w->s_Y == q && w->s_E == Scalar::q_power(-1) && w->s_K == q);
  return r;
}

Report quotient_checks(std::uint64_t seed) {
  Report r;
  r.title = "factor algebras";
  ElementSampler s(seed);
  for (const auto& m : nine_maps()) {
    const Report w = check_well_defined(m);
    r.add(m.name + " is well defined", w.all_passed(), w.all_passed() ? "" : w.to_string());
    bool domain = true;
    for (int t = 0; t < 30 && domain; ++t) {
      const QCElement x = project(m, s.element()), y = project(m, s.element());
      if (!x.is_zero() && !y.is_zero()) domain = !(x * y).is_zero();
    }
    r.add(m.name + " has no zero divisors among 30 sampled pairs", domain);
  }
  return r;
}

Report spectrum_checks() {
  Report r;
  r.title = "spectrum";
  const HasseDiagram h = hasse();
  const std::vector<std::pair<std::string, std::string>> drawn = {
      {"zero", "X"}, {"zero", "phi"}, {"X", "Y"},   {"phi", "Y"},      {"X", "E"},        {"phi", "E"},
      {"Y", "YE"},   {"E", "YE"},     {"YE", "P_family"}, {"X", "Q_family"}, {"phi", "R_family"}};
  const std::size_t n = h.nodes.size();
  std::map<std::string, std::size_t> at;
  for (std::size_t k = 0; k < n; ++k) at[h.nodes[k]] = k;
  std::vector<std::vector<bool>> closure(n, std::vector<bool>(n, false));
  for (std::size_t k = 0; k < n; ++k) closure[k][k] = true;
  for (const auto& [lo, hi] : drawn) closure[at.at(lo)][at.at(hi)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (closure[i][k] && closure[k][j]) closure[i][j] = true;
  r.add("9 x 9 inclusion matrix is the closure of the drawn diagram", n == 9 && h.leq == closure);
  r.add("11 covering relations", h.covers.size() == drawn.size());

  const AlgebraElement X = AlgebraElement::X(), f = phi();
  r.add("X in (Y)", contains(PrimeIdeal::y(), X));
  r.add("X in (E)", contains(PrimeIdeal::e(), X));
  r.add("phi in (E)", contains(PrimeIdeal::e(), f));
  r.add("X not in (phi)", !contains(PrimeIdeal::phi(), X));
  r.add("phi not in (X)", !contains(PrimeIdeal::x(), f));

  const std::vector<std::pair<Scalar, Scalar>> params = {
      {Scalar(1), Scalar(1)}, {Scalar::parse("q^-3"), Scalar::parse("q + 1")}, {Scalar(-2), Scalar::parse("3/q")}};
  bool cls = true;
  for (const auto& [kappa, zeta] : params)
    for (const auto& I : representatives(kappa, zeta)) {
      const Classification c = classify(I);
      const PrimeKind k = I.kind();
      const bool maximal = k == PrimeKind::P || k == PrimeKind::Q || k == PrimeKind::R;
      const bool primitive = maximal || k == PrimeKind::Zero || k == PrimeKind::Y || k == PrimeKind::E;
      cls = cls && c.maximal == maximal && c.primitive == primitive && c.completely_prime;
    }
  r.add("maximal: the three families; primitive: 0, (Y), (E) and the maximal ideals", cls);
  const std::string dot = h.dot();
  r.add("DOT output is deterministic", dot == hasse().dot() && dot.find("zero -> X;") != std::string::npos);
  return r;
}

Report aut_checks(int samples, std::uint64_t seed) {
  Report r;
  r.title = "automorphisms";
  std::mt19937_64 rng(seed);
  const std::vector<AlgebraElement> gens = {AlgebraElement::K(), AlgebraElement::K(-1), AlgebraElement::X(),
                                            AlgebraElement::Y(), AlgebraElement::E()};
  const std::vector<PrimeIdeal> fixed_ideals = {PrimeIdeal::zero(), PrimeIdeal::x(), PrimeIdeal::phi(),
                                                PrimeIdeal::y(),    PrimeIdeal::e(), PrimeIdeal::ye()};
  const std::vector<PrimeIdeal> families = {PrimeIdeal::p(Scalar::parse("q + 2")), PrimeIdeal::q(Scalar::parse("q^3")),
                                            PrimeIdeal::r(Scalar::parse("-1/q"))};
  int rel = 0, comp = 0, inv = 0, fix = 0, fam = 0;
  std::string first;
  auto note = [&](const Aut& s, const char* what) {
    if (first.empty()) first = std::string(what) + " at " + s.to_string();
  };
  for (int k = 0; k < samples; ++k) {
    const Aut s = random_aut(rng), t = random_aut(rng);
    if (check_relations(s).all_passed()) ++rel; else note(s, "relations");
    const Aut st = compose(s, t);
    bool c = true;
    for (const auto& g : gens) c = c && apply(st, g) == apply(s, apply(t, g));
    if (c) ++comp; else note(s, "compose");
    const Aut si = inverse(s);
    bool i = compose(s, si) == Aut::identity() && compose(si, s) == Aut::identity();
    for (const auto& g : gens) i = i && apply(si, apply(s, g)) == g;
    if (i) ++inv; else note(s, "inverse");
    bool f = true;
    for (const auto& I : fixed_ideals) {
      f = f && act_on_spectrum(s, I) == I;
      for (const auto& g : I.generators()) f = f && contains(I, apply(s, g));
    }
    if (f) ++fix; else note(s, "fixed ideals");
    bool m = true;
    for (const auto& I : families) {
      const PrimeIdeal J = act_on_spectrum(s, I);
      m = m && J.kind() == I.kind();
      for (const auto& g : I.generators()) m = m && contains(J, apply(s, g));
    }
    if (m) ++fam; else note(s, "families");
  }
  const std::string of = " (" + std::to_string(samples) + " samples)";
  r.add("relations preserved" + of, rel == samples, first);
  r.add("compose agrees with pointwise application on generators" + of, comp == samples);
  r.add("inverse law" + of, inv == samples);
  r.add("0, (X), (phi), (Y), (E), (Y, E) are fixed" + of, fix == samples);
  r.add("images of P, Q, R family members contain the transformed generators" + of, fam == samples);
  return r;
}

Report gwa_checks(int trials, int iso_trials, std::uint64_t seed) {
  Report r;
  r.title = "GWA";
  absorb(r, gwa_law_check(e_gwa(), trials, 4, seed));
  absorb(r, iso_E_check(4, iso_trials, seed), "structure map: ");
  const AmbiskewData data = e_ambiskew();
  const AmbiskewResult res = ambiskew_to_gwa(data);
  const Scalar q = Scalar::q();
  const QCElement want = (Scalar::q_power(-1) - q).inverse() * data.D->gen(0);
  r.add("ambiskew data of E gives alpha = X / (q^-1 - q)", res.alpha && *res.alpha == want,
        res.alpha ? res.alpha->to_string() : "no alpha");
  absorb(r, res.report, "ambiskew: ");
  return r;
}

Report weight_module_checks() {
  Report r;
  r.title = "weight modules";
  const std::vector<WeightModuleSpec> specs = {{Scalar(1), Scalar(1)},
                                               {Scalar::parse("q^2"), Scalar::parse("-3")},
                                               {Scalar::parse("(q + 1)/(q - 2)"), Scalar::parse("2*q^-1")}};
  for (const auto& s : specs) {
    const std::string tag = WeightModule(s).name() + ": ";
    const Report ax = check_module_axioms(s, 4);
    r.add(tag + "relations act as zero on window 4", ax.all_passed(), ax.all_passed() ? "" : ax.to_string());
    const auto ev = support(s, 4);
    bool distinct = true;
    for (std::size_t a = 0; a < ev.size(); ++a)
      for (std::size_t b = a + 1; b < ev.size(); ++b) distinct = distinct && ev[a] != ev[b];
    r.add(tag + "K-eigenvalues on strata |i| <= 4 pairwise distinct", distinct);
    absorb(r, faithfulness_probe(s, 3), tag);
  }
  std::vector<long> ns;
  std::vector<double> ds;
  for (long n = 6; n <= 14; ++n) {
    ns.push_back(n);
    ds.push_back(static_cast<double>(module_growth(specs[2], n)));
  }
  const double k = fit_growth(ns, ds).exponent;
  r.add("growth exponent over n = 6..14 is " + fixed(k) + " (want 2.0 +- 0.3)", std::abs(k - 2.0) <= 0.3);
  absorb(r, cyclicity_probe(specs[1], 10, 8));
  return r;
}

Report unfaithful_checks() {
  Report r;
  r.title = "unfaithful modules";
  const std::vector<UnfaithfulModuleSpec> specs = {{UnfaithfulCase::A, Scalar::parse("q^2 - 3")},
                                                   {UnfaithfulCase::B, Scalar::parse("q + 2")},
                                                   {UnfaithfulCase::C, Scalar::parse("-q")},
                                                   {UnfaithfulCase::D, Scalar::parse("q + 1"), Scalar(3)},
                                                   {UnfaithfulCase::E, Scalar::parse("2*q^-2"), Scalar::q()}};
  for (const auto& s : specs) {
    const auto u = build_unfaithful(s);
    absorb(r, u.report, u.module->name() + ": ");
  }
  return r;
}

Report center_checks() {
  Report r;
  r.title = "centers";
  const AlgebraElement K = AlgebraElement::K(), X = AlgebraElement::X(), Y = AlgebraElement::Y(),
                       E = AlgebraElement::E();
  const AlgebraElement one(Scalar(1));
  r.add("center of A in degree <= 4 is the scalars", same_span(centralizer_basis({X, Y, E, K}, 4), {one}));
  const auto ck = centralizer_basis({K}, 2);
  r.add("C_A(K) in degree <= 2 is spanned by K^-2, K^-1, 1, K, K^2, YX",
        ck.size() == 6 && same_span(ck, {AlgebraElement::K(-2), AlgebraElement::K(-1), one, K, K * K, Y * X}));
  const auto mx = presets::A_mod_X(), mp = presets::A_mod_phi(), yb = presets::Ybb();
  r.add("center of A/(X) in degree <= 3 is span{1, Z}",
        same_span_qc(center_basis_qc(mx.target, 3), {mx.target->one(), mx.symbols.at("Z")}));
  r.add("center of A/(phi) in degree <= 3 is span{1, C}",
        same_span_qc(center_basis_qc(mp.target, 3), {mp.target->one(), mp.symbols.at("C")}));
  r.add("center of Ybb in degree <= 3 is the scalars", same_span_qc(center_basis_qc(yb.target, 3), {yb.target->one()}));
  return r;
}

Report growth_checks() {
  Report r;
  r.title = "growth";
  r.add("filtration_dim(0) = 1, filtration_dim(1) = 6", filtration_dim(0) == 1 && filtration_dim(1) == 6);
  std::vector<long> ns;
  std::vector<double> ds;
  for (long n = 8; n <= 16; ++n) {
    ns.push_back(n);
    ds.push_back(static_cast<double>(filtration_dim(n)));
  }
  const double k = fit_growth(ns, ds).exponent;
  r.add("growth exponent of filtration_dim over n = 8..16 is " + fixed(k) + " (want 4.0 +- 0.3)",
        std::abs(k - 4.0) <= 0.3);
  return r;
}

Report l_normal_checks(int samples, std::uint64_t seed) {
  Report r;
  r.title = "l-normal elements";
  const Scalar qi = Scalar::q_power(-1);
  const FactoredLaurent b1{RingType::F, {}, {Scalar()}};
  const FactoredLaurent b2{RingType::F, {Scalar(1)}, {qi}};
  const FactoredLaurent b3{RingType::F, {qi}, {Scalar(1)}};
  r.add("1 + tH is l-normal", l_normal(b1) && l_normal_bruteforce(b1));
  r.add("(H - 1) + t(H - q^-1) is not l-normal", !l_normal(b2) && !l_normal_bruteforce(b2));
  r.add("(H - q^-1) + t(H - 1) is l-normal", l_normal(b3) && l_normal_bruteforce(b3));
  std::mt19937_64 rng(seed);
  int agree = 0;
  for (int k = 0; k < samples; ++k) {
    const FactoredLaurent b = random_factored(rng);
    if (l_normal(b) == l_normal_bruteforce(b, 20)) ++agree;
  }
  r.add("agrees with the orbit scan |j| <= 20 on " + std::to_string(samples) + " random inputs", agree == samples,
        std::to_string(agree) + " agree");
  return r;
}

std::vector<std::string> suite_names() { return {"identities", "spectrum", "aut", "gwa", "modules"}; }

std::vector<Report> run_suite(const std::string& name) {
  if (name == "identities") return {identity_checks(), center_checks(), growth_checks()};
  if (name == "spectrum") return {quotient_checks(), spectrum_checks()};
  if (name == "aut") return {aut_checks()};
  if (name == "gwa") return {gwa_checks()};
  if (name == "modules") return {weight_module_checks(), unfaithful_checks(), l_normal_checks()};
  if (name == "all") {
    std::vector<Report> out;
    for (const auto& s : suite_names())
      for (auto& r : run_suite(s)) out.push_back(std::move(r));
    return out;
  }
  throw std::invalid_argument("unknown suite '" + name + "' (identities, spectrum, aut, gwa, modules, all)");
}

}  // namespace qsa
