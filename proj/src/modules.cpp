#include "qsa/modules.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qsa/expr.hpp"
#include "qsa/linalg.hpp"

namespace qsa {

// ---------------------------------------------------------------- vectors

Scalar ModuleVector::coefficient(const Label& l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? Scalar() : it->second;
}

void ModuleVector::add(const Label& l, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(l);
  if (it == terms_.end()) {
    terms_.emplace(l, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ModuleVector operator+(const ModuleVector& x, const ModuleVector& y) {
  ModuleVector r = x;
  for (const auto& [l, c] : y.terms_) r.add(l, c);
  return r;
}

ModuleVector operator-(const ModuleVector& x, const ModuleVector& y) {
  ModuleVector r = x;
  for (const auto& [l, c] : y.terms_) r.add(l, -c);
  return r;
}

ModuleVector operator*(const Scalar& s, const ModuleVector& x) {
  ModuleVector r;
  if (s.is_zero()) return r;
  for (const auto& [l, c] : x.terms_) r.terms_.emplace(l, s * c);
  return r;
}

ModuleVector Module::act(Letter g, const ModuleVector& v) const {
  ModuleVector r;
  for (const auto& [l, c] : v.terms()) r = r + c * act_basis(g, l);
  return r;
}

ModuleVector Module::act(const Word& w, const ModuleVector& v) const {
  ModuleVector r = v;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = act(*it, r);
  return w.coeff * r;
}

ModuleVector Module::act(const AlgebraElement& x, const ModuleVector& v) const {
  ModuleVector out;
  for (const auto& [m, c] : x.terms()) {
    ModuleVector r = v;
    for (long k = 0; k < m.c; ++k) r = act(Letter::E, r);
    for (long k = 0; k < m.b; ++k) r = act(Letter::Y, r);
    for (long k = 0; k < m.a; ++k) r = act(Letter::X, r);
    for (long k = 0; k < (m.i < 0 ? -m.i : m.i); ++k) r = act(m.i < 0 ? Letter::Kinv : Letter::K, r);
    out = out + c * r;
  }
  return out;
}

std::string Module::to_string(const ModuleVector& v) const {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [l, c] : v.terms()) terms.emplace_back(c, label_string(l));
  return render_sum(terms);
}

Report check_relations_on(const Module& M, const std::vector<Label>& labels) {
  Report r;
  r.title = "relations of A on " + M.name();
  const Scalar q = Scalar::q(), qi = Scalar::q_power(-1);
  using L = Letter;
  auto w = [](std::initializer_list<L> ls, Scalar c = Scalar(1)) { return Word{std::vector<L>(ls), std::move(c)}; };
  const std::vector<std::pair<std::string, std::vector<Word>>> rels = {
      {"EK = q^-2 KE", {w({L::E, L::K}), w({L::K, L::E}, -Scalar::q_power(-2))}},
      {"XK = q^-1 KX", {w({L::X, L::K}), w({L::K, L::X}, -qi)}},
      {"YK = q KY", {w({L::Y, L::K}), w({L::K, L::Y}, -q)}},
      {"EX = q XE", {w({L::E, L::X}), w({L::X, L::E}, -q)}},
      {"EY = X + q^-1 YE", {w({L::E, L::Y}), w({L::X}, Scalar(-1)), w({L::Y, L::E}, -qi)}},
      {"qYX = XY", {w({L::Y, L::X}, q), w({L::X, L::Y}, Scalar(-1))}},
      {"K Kinv = 1", {w({L::K, L::Kinv}), w({}, Scalar(-1))}},
      {"Kinv K = 1", {w({L::Kinv, L::K}), w({}, Scalar(-1))}},
  };
  for (const auto& [name, words] : rels) {
    std::string bad;
    for (const auto& l : labels) {
      ModuleVector s;
      for (const auto& word : words) s = s + M.act(word, ModuleVector(l));
      if (!s.is_zero()) {
        bad = "on " + M.label_string(l) + ": " + M.to_string(s);
        break;
      }
    }
    r.add(name, bad.empty(), bad);
  }
  return r;
}

namespace {

// "(1, -2)" or "3" -> integers.
std::vector<long> parse_int_tuple(const std::string& text) {
  std::string body = text;
  const std::size_t a = body.find_first_not_of(" \t"), b = body.find_last_not_of(" \t");
  if (a == std::string::npos) throw ParseError(ParseError::Kind::Syntax, 1, "empty label");
  body = body.substr(a, b - a + 1);
  std::size_t offset = a;
  if (body.front() == '(') {
    if (body.back() != ')') throw ParseError(ParseError::Kind::Syntax, b + 1, "expected ')'");
    body = body.substr(1, body.size() - 2);
    ++offset;
  }
  std::vector<long> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    const std::string piece = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    const std::size_t lead = piece.find_first_not_of(" \t");
    long v = 0;
    bool ok = lead != std::string::npos;
    if (ok) {
      try {
        v = std::stol(piece.substr(lead), &used);
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok || piece.find_first_not_of(" \t", lead + used) != std::string::npos)
      throw ParseError(ParseError::Kind::Syntax, offset + start + 1, "expected an integer");
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

SparseVec<Label> as_sparse(const ModuleVector& v) { return SparseVec<Label>(v.terms().begin(), v.terms().end()); }

}  // namespace

// ---------------------------------------------------------------- weight modules

WeightModule::WeightModule(WeightModuleSpec spec) : spec_(std::move(spec)) {
  if (spec_.kappa.is_zero() || spec_.lambda.is_zero()) throw std::invalid_argument("kappa and lambda must be nonzero");
}

std::string WeightModule::name() const {
  return "weight(" + spec_.kappa.to_string() + ";" + spec_.lambda.to_string() + ")";
}

ModuleVector WeightModule::act_basis(Letter g, const Label& l) const {
  const long i = l.at(0), m = l.at(1);
  ModuleVector r;
  const Scalar t = Scalar::q_power(i + 2 * m) * spec_.lambda;  // q^i lambda q^2m
  switch (g) {
    case Letter::K: r.add(l, Scalar::q_power(-i) * spec_.kappa); break;
    case Letter::Kinv: r.add(l, Scalar::q_power(i) * spec_.kappa.inverse()); break;
    case Letter::Y: r.add({i + 1, m}, Scalar(1)); break;
    case Letter::X: r.add({i - 1, m}, t); break;
    case Letter::E: {
      const Scalar c = (Scalar::q_power(-1) - Scalar::q()).inverse();
      r.add({i - 2, m + 1}, c * Scalar::q_power(-i));
      r.add({i - 2, m}, -c * t);
      break;
    }
  }
  return r;
}

std::string WeightModule::label_string(const Label& l) const {
  return "(" + std::to_string(l.at(0)) + "," + std::to_string(l.at(1)) + ")";
}

Label WeightModule::parse_label(const std::string& text) const {
  Label l = parse_int_tuple(text);
  if (l.size() != 2) throw ParseError(ParseError::Kind::Syntax, 1, "weight module labels are (i,m)");
  return l;
}

std::vector<Label> window_labels(long window) {
  std::vector<Label> out;
  for (long i = -window; i <= window; ++i)
    for (long m = -window; m <= window; ++m) out.push_back({i, m});
  return out;
}

Report check_module_axioms(const WeightModuleSpec& spec, long window) {
  const WeightModule M(spec);
  Report r = check_relations_on(M, window_labels(window));
  r.title = M.name() + ", window " + std::to_string(window);
  return r;
}

std::vector<Scalar> support(const WeightModuleSpec& spec, long window) {
  const WeightModule M(spec);
  std::vector<Scalar> out;
  for (long i = -window; i <= window; ++i) {
    const ModuleVector v = M.act(Letter::K, ModuleVector(Label{i, 0}));
    const Scalar ev = v.coefficient({i, 0});
    if (v != ev * ModuleVector(Label{i, 0})) throw std::logic_error("K does not act diagonally");
    out.push_back(ev);
  }
  return out;
}

std::size_t module_growth(const WeightModuleSpec& spec, long n) {
  if (n < 0) return 0;
  // K^i only rescales labels, so the monomials X^a Y^b E^c with
  // a + b + c <= n already span; X^a Y^b E^c (0,0) lies in stratum b - a - 2c.
  const WeightModule M(spec);
  std::map<long, Echelon<Label>> strata;
  std::vector<ModuleVector> e_pow{ModuleVector(M.origin())};
  for (long c = 1; c <= n; ++c) e_pow.push_back(M.act(Letter::E, e_pow.back()));
  for (long c = 0; c <= n; ++c) {
    ModuleVector yb = e_pow[static_cast<std::size_t>(c)];
    for (long b = 0; b + c <= n; ++b) {
      ModuleVector xa = yb;
      for (long a = 0; a + b + c <= n; ++a) {
        auto it = strata.try_emplace(b - a - 2 * c, false).first;
        it->second.insert(as_sparse(xa));
        xa = M.act(Letter::X, xa);
      }
      yb = M.act(Letter::Y, yb);
    }
  }
  std::size_t d = 0;
  for (const auto& [s, e] : strata) d += e.rank();
  return d;
}

Report faithfulness_probe(const WeightModuleSpec& spec, long window) {
  const WeightModule M(spec);
  Report r;
  r.title = "faithfulness of " + M.name();
  const auto labels = window_labels(window);
  for (const auto& [name, x] : {std::pair<std::string, AlgebraElement>{"X", AlgebraElement::X()}, {"phi", phi()}}) {
    Echelon<Label> ech(false);
    bool nonzero = true;
    for (const auto& l : labels) {
      const ModuleVector v = M.act(x, ModuleVector(l));
      nonzero = nonzero && !v.is_zero();
      ech.insert(as_sparse(v));
    }
    r.add(name + " has zero kernel on the window", nonzero && ech.rank() == labels.size(),
          "rank " + std::to_string(ech.rank()) + " of " + std::to_string(labels.size()));
  }
  return r;
}

std::vector<ModuleVector> word_span(const Module& M, const ModuleVector& v, std::size_t max_len) {
  Echelon<Label> ech(false);
  std::vector<ModuleVector> basis, frontier;
  if (!v.is_zero() && ech.insert(as_sparse(v))) {
    basis.push_back(v);
    frontier.push_back(v);
  }
  for (std::size_t len = 0; len < max_len && !frontier.empty(); ++len) {
    std::vector<ModuleVector> next;
    for (const auto& f : frontier)
      for (Letter g : {Letter::K, Letter::Kinv, Letter::X, Letter::Y, Letter::E}) {
        ModuleVector w = M.act(g, f);
        if (!w.is_zero() && ech.insert(as_sparse(w))) {
          basis.push_back(w);
          next.push_back(std::move(w));
        }
      }
    frontier = std::move(next);
  }
  return basis;
}

bool in_span(const std::vector<ModuleVector>& basis, const ModuleVector& v) {
  Echelon<Label> ech(false);
  for (const auto& b : basis) ech.insert(as_sparse(b));
  return ech.contains(as_sparse(v));
}

Report cyclicity_probe(const WeightModuleSpec& spec, int samples, std::size_t max_len, std::uint64_t seed) {
  const WeightModule M(spec);
  Report r;
  r.title = "submodules of " + M.name();
  {
    const auto span = word_span(M, ModuleVector(M.origin()), max_len);
    std::string missing;
    for (long i = -2; i <= 2; ++i)
      for (long m = 0; m <= 2; ++m)
        if (missing.empty() && !in_span(span, ModuleVector(Label{i, m}))) missing = M.label_string({i, m});
    r.add("(0,0) generates (i,m) for |i| <= 2, 0 <= m <= 2 with words of length <= " + std::to_string(max_len),
          missing.empty(), missing);
  }
  std::mt19937_64 rng(seed);
  int ok = 0;
  std::string first_bad;
  for (int s = 0; s < samples; ++s) {
    ModuleVector v;
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t)
      v.add({static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2},
            Scalar(static_cast<long>(rng() % 7) - 3) * Scalar::q_power(static_cast<long>(rng() % 5) - 2));
    if (v.is_zero()) v = ModuleVector(M.origin());
    Echelon<Label> ech(false);
    for (const auto& b : word_span(M, v, std::min<std::size_t>(max_len, 4))) ech.insert(as_sparse(b));
    bool all = true;
    for (const auto& [l, c] : v.terms()) all = all && ech.contains(as_sparse(ModuleVector(l)));
    if (all) {
      ++ok;
    } else if (first_bad.empty()) {
      first_bad = M.to_string(v);
    }
  }
  r.add("each of " + std::to_string(samples) + " sampled vectors generates its basis components in <= 4 letters",
        ok == samples,
        first_bad);
  {
    const auto span = word_span(M, ModuleVector(Label{0, 1}), max_len);
    bool floor = true;
    for (const auto& b : span)
      for (const auto& [l, c] : b.terms()) floor = floor && l[1] >= 1;
    r.add("no word lowers m: (0,0) is not in the submodule generated by (0,1)",
          floor && !in_span(span, ModuleVector(M.origin())));
  }
  return r;
}

// ---------------------------------------------------------------- cyclic modules

CyclicModule::CyclicModule(std::string name, QuotientMap map, std::optional<std::size_t> g, Scalar value)
    : name_(std::move(name)), map_(std::move(map)), g_(g), value_(std::move(value)) {
  if (g_ && *g_ >= map_.target->ngens()) throw std::invalid_argument("relation generator out of range");
  if (g_ && map_.target->invertible(*g_) && value_.is_zero())
    throw std::invalid_argument("an invertible generator cannot act by 0");
}

ModuleVector CyclicModule::reduce(const QCElement& r) const {
  const auto& R = *map_.target;
  ModuleVector out;
  for (const auto& [e, c] : r.terms()) {
    if (!g_) {
      out.add(e, c);
      continue;
    }
    const long eg = e[*g_];
    Label rest = e;
    rest[*g_] = 0;
    if (eg > 0 && value_.is_zero()) continue;
    // monomial(e) = monomial(rest) * g^eg / twist
    const QCElement p = R.monomial(rest) * R.gen(*g_, eg);
    out.add(rest, c / p.coefficient(e) * value_.pow(eg));
  }
  return out;
}

ModuleVector CyclicModule::act_basis(Letter g, const Label& l) const {
  return reduce(project(map_, letter_element(g)) * map_.target->monomial(l));
}

std::string CyclicModule::label_string(const Label& l) const {
  const std::string m = map_.target->monomial_string(l);
  return "[" + (m.empty() ? std::string("1") : m) + "]";
}

Label CyclicModule::origin() const { return Label(map_.target->ngens(), 0); }

Label CyclicModule::parse_label(const std::string& text) const {
  const std::vector<long> v = parse_int_tuple(text);
  Label l = origin();
  std::size_t k = 0;
  for (std::size_t j = 0; j < l.size(); ++j) {
    if (g_ && j == *g_) continue;
    if (k >= v.size()) throw ParseError(ParseError::Kind::Syntax, 1, "too few exponents for " + name_);
    if (v[k] < 0 && !map_.target->invertible(j))
      throw ParseError(ParseError::Kind::Domain, 1, "negative exponent of " + map_.target->generator(j));
    l[j] = v[k++];
  }
  if (k != v.size() && !(l.empty() && v.size() == 1 && v[0] == 0))
    throw ParseError(ParseError::Kind::Syntax, 1, "too many exponents for " + name_);
  return l;
}

std::vector<Label> CyclicModule::sample_labels(long range) const {
  std::vector<Label> out{origin()};
  for (std::size_t j = 0; j < map_.target->ngens(); ++j) {
    if (g_ && j == *g_) continue;
    std::vector<Label> next;
    const long lo = map_.target->invertible(j) ? -range : 0;
    for (const auto& l : out)
      for (long e = lo; e <= range; ++e) {
        Label m = l;
        m[j] = e;
        next.push_back(m);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<AlgebraElement> killers(const Module& M, const std::vector<ModuleVector>& vs, long n) {
  const auto basis = filtration_basis(n);
  std::vector<SparseVec<Label>> images;
  for (const auto& m : basis) {
    SparseVec<Label> img;
    for (std::size_t s = 0; s < vs.size(); ++s) {
      const ModuleVector w = M.act(AlgebraElement(m), vs[s]);
      for (const auto& [l, c] : w.terms()) {
        Label key{static_cast<long>(s)};
        key.insert(key.end(), l.begin(), l.end());
        img.emplace(std::move(key), c);
      }
    }
    images.push_back(std::move(img));
  }
  std::vector<AlgebraElement> out;
  for (const auto& k : kernel(images)) {
    AlgebraElement x;
    for (const auto& [idx, c] : k) x.add_term(basis[idx], c);
    out.push_back(std::move(x));
  }
  return out;
}

namespace {

std::size_t gen_index(const QuotientMap& m, const std::string& name) {
  auto k = m.target->index_of(name);
  if (!k) throw std::logic_error(m.name + " has no generator " + name);
  return *k;
}

}  // namespace

UnfaithfulModule build_unfaithful(const UnfaithfulModuleSpec& spec) {
  if (spec.param.is_zero()) throw std::invalid_argument("module parameter must be nonzero");
  const bool torus = spec.which == UnfaithfulCase::D || spec.which == UnfaithfulCase::E;
  if (torus && spec.point.is_zero()) throw std::invalid_argument("K-eigenvalue must be nonzero");
  const Scalar& p = spec.param;
  std::shared_ptr<const CyclicModule> M;
  std::optional<PrimeIdeal> ann;
  switch (spec.which) {
    case UnfaithfulCase::A:
      M = std::make_shared<CyclicModule>("case-a(" + p.to_string() + ")", presets::A_mod_P(p), std::nullopt, Scalar());
      ann = PrimeIdeal::p(p);
      break;
    case UnfaithfulCase::B: {
      auto m = presets::A_mod_Y();
      const auto g = gen_index(m, "E");
      M = std::make_shared<CyclicModule>("case-b(" + p.to_string() + ")", std::move(m), g, p);
      ann = PrimeIdeal::y();
      break;
    }
    case UnfaithfulCase::C: {
      auto m = presets::A_mod_E();
      const auto g = gen_index(m, "Y");
      M = std::make_shared<CyclicModule>("case-c(" + p.to_string() + ")", std::move(m), g, p);
      ann = PrimeIdeal::e();
      break;
    }
    case UnfaithfulCase::D: {
      auto m = presets::A_mod_X_q(p);
      const auto g = gen_index(m, "K");
      M = std::make_shared<CyclicModule>("case-d(" + p.to_string() + ";" + spec.point.to_string() + ")", std::move(m),
                                         g, spec.point);
      ann = PrimeIdeal::q(p);
      break;
    }
    case UnfaithfulCase::E: {
      auto m = presets::A_mod_phi_r(p);
      const auto g = gen_index(m, "K");
      M = std::make_shared<CyclicModule>("case-e(" + p.to_string() + ";" + spec.point.to_string() + ")", std::move(m),
                                         g, spec.point);
      ann = PrimeIdeal::r(p);
      break;
    }
  }
  UnfaithfulModule out{spec, M, *ann, Report{}};
  Report& r = out.report;
  r.title = M->name() + ", annihilator " + ann->name();

  const auto labels = M->sample_labels(3);
  const ModuleVector one(M->origin());
  for (const auto& c : check_relations_on(*M, labels).checks) r.checks.push_back(c);

  bool killed = true;
  for (const auto& g : ann->generators())
    for (const auto& l : labels) killed = killed && M->act(g, ModuleVector(l)).is_zero();
  r.add("generators of " + ann->name() + " act as zero", killed);

  auto acts_as = [&](const AlgebraElement& x, const Scalar& s) {
    for (const auto& l : labels)
      if (M->act(x, ModuleVector(l)) != s * ModuleVector(l)) return false;
    return true;
  };
  switch (spec.which) {
    case UnfaithfulCase::A:
      r.add("one-dimensional", labels.size() == 1 && M->sample_labels(10).size() == 1);
      r.add("K acts by kappa", acts_as(AlgebraElement::K(), p));
      r.add("X, Y, E act as zero", acts_as(AlgebraElement::X(), Scalar()) && acts_as(AlgebraElement::Y(), Scalar()) &&
                                       acts_as(AlgebraElement::E(), Scalar()));
      break;
    case UnfaithfulCase::B:
      r.add("Y acts as zero", acts_as(AlgebraElement::Y(), Scalar()));
      r.add("E 1 = lambda 1 != 0", M->act(AlgebraElement::E(), one) == p * one && !p.is_zero());
      break;
    case UnfaithfulCase::C:
      r.add("E and X act as zero", acts_as(AlgebraElement::E(), Scalar()) && acts_as(AlgebraElement::X(), Scalar()));
      r.add("Y 1 = lambda 1 != 0", M->act(AlgebraElement::Y(), one) == p * one && !p.is_zero());
      break;
    case UnfaithfulCase::D:
    case UnfaithfulCase::E: {
      const bool d = spec.which == UnfaithfulCase::D;
      r.add(d ? "X acts as zero" : "phi acts as zero", acts_as(d ? AlgebraElement::X() : phi(), Scalar()));
      r.add(d ? "Z acts by zeta" : "C acts by zeta", acts_as(d ? element_Z() : element_C(), p));
      r.add("K 1 = mu 1", M->act(AlgebraElement::K(), one) == spec.point * one);
      bool weights = true;
      std::vector<Scalar> seen;
      for (const auto& l : labels) {
        const ModuleVector v = M->act(AlgebraElement::K(), ModuleVector(l));
        const Scalar ev = v.coefficient(l);
        weights = weights && v == ev * ModuleVector(l) && std::find(seen.begin(), seen.end(), ev) == seen.end();
        seen.push_back(ev);
      }
      r.add("K acts diagonally with pairwise distinct eigenvalues", weights);
      break;
    }
  }

  std::vector<ModuleVector> sampled;
  for (const auto& l : M->sample_labels(8)) sampled.emplace_back(l);
  const auto ks = killers(*M, sampled, 3);
  std::string outside;
  for (const auto& k : ks)
    if (outside.empty() && !contains(*ann, k)) outside = k.to_string();
  r.add("elements of F_3 killing the sampled basis lie in " + ann->name() + " (" + std::to_string(ks.size()) + ")",
        outside.empty(), outside);
  return out;
}

std::shared_ptr<const Module> parse_module(const std::string& text) {
  const CallLiteral c = parse_call(text);
  auto need = [&](std::size_t n) {
    if (c.args.size() != n)
      throw ParseError(ParseError::Kind::Syntax, 1,
                       c.name + "(...) takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
  };
  if (c.name == "weight") {
    need(2);
    return std::make_shared<WeightModule>(WeightModuleSpec{c.nonzero_scalar(0), c.nonzero_scalar(1)});
  }
  static const std::map<std::string, UnfaithfulCase> cases = {{"case-a", UnfaithfulCase::A},
                                                              {"case-b", UnfaithfulCase::B},
                                                              {"case-c", UnfaithfulCase::C},
                                                              {"case-d", UnfaithfulCase::D},
                                                              {"case-e", UnfaithfulCase::E}};
  auto it = cases.find(c.name);
  if (it == cases.end())
    throw ParseError(ParseError::Kind::UnknownSymbol, 1,
                     "unknown module '" + c.name + "' (weight, case-a, case-b, case-c, case-d, case-e)");
  const bool torus = it->second == UnfaithfulCase::D || it->second == UnfaithfulCase::E;
  need(torus ? 2 : 1);
  UnfaithfulModuleSpec spec{it->second, c.nonzero_scalar(0), torus ? c.nonzero_scalar(1) : Scalar(1)};
  return build_unfaithful(spec).module;
}

// ---------------------------------------------------------------- orbits

OrbitPoint::OrbitPoint(RingType t, Scalar r) : ring(t), root(std::move(r)) {
  if (ring == RingType::I && root.is_zero()) throw std::invalid_argument("H is a unit of K[H, H^-1]; root 0 is not a point");
}

std::optional<long> same_orbit(const OrbitPoint& p, const OrbitPoint& r) {
  if (p.ring != r.ring) throw std::invalid_argument("orbit points over different rings");
  if (p.exceptional() || r.exceptional()) {
    if (p.exceptional() && r.exceptional()) return 0;
    return std::nullopt;
  }
  return (p.root / r.root).as_q_power();
}

namespace {

void check_roots(const FactoredLaurent& b) {
  for (const auto* v : {&b.roots_m, &b.roots_n})
    for (const auto& r : *v) OrbitPoint(b.ring, r);
}

}  // namespace

bool l_normal(const FactoredLaurent& b) {
  check_roots(b);
  for (const auto& rn : b.roots_n)
    for (const auto& rm : b.roots_m) {
      if (rn.is_zero() || rm.is_zero()) continue;
      const auto k = same_orbit(OrbitPoint(b.ring, rm), OrbitPoint(b.ring, rn));
      if (k && *k >= 0) return false;
    }
  return true;
}

bool l_normal_bruteforce(const FactoredLaurent& b, long window) {
  check_roots(b);
  for (const auto& rn : b.roots_n)
    for (const auto& rm : b.roots_m) {
      if (rn.is_zero() || rm.is_zero()) continue;
      for (long j = 0; j <= window; ++j)
        if (rn == Scalar::q_power(-j) * rm) return false;
    }
  return true;
}

std::vector<Scalar> linear_roots(const QCElement& beta) {
  const auto& D = *beta.parent();
  if (D.ngens() != 1) throw std::invalid_argument("expected an element of K[H] or K[H, H^-1]");
  if (beta.is_zero()) throw std::invalid_argument("zero has no factorization");
  const bool laurent = D.invertible(0);
  const auto& t = beta.terms();
  auto zeros = [&](long k) { return laurent ? std::vector<Scalar>{} : std::vector<Scalar>(static_cast<std::size_t>(k)); };
  if (t.size() == 1) return zeros(t.begin()->first[0]);
  if (t.size() == 2) {
    auto lo = t.begin(), hi = std::next(lo);
    if (lo->first[0] > hi->first[0]) std::swap(lo, hi);
    if (hi->first[0] == lo->first[0] + 1) {
      std::vector<Scalar> r = zeros(lo->first[0]);
      r.push_back(-lo->second / hi->second);
      return r;
    }
  }
  throw std::invalid_argument("unfactored input: " + beta.to_string() + " is not a product of linear factors here");
}

FactoredLaurent random_factored(std::mt19937_64& rng) {
  static const char* const seeds[] = {"1", "2", "q + 1", "-3/(q - 2)"};
  FactoredLaurent b;
  b.ring = rng() % 2 ? RingType::F : RingType::I;
  // One or two seeds per input so that q-power relations are common.
  const Scalar s1 = Scalar::parse(seeds[rng() % std::size(seeds)]);
  const Scalar s2 = Scalar::parse(seeds[rng() % std::size(seeds)]);
  auto draw = [&](std::vector<Scalar>& roots) {
    const int n = static_cast<int>(rng() % 3);
    for (int k = 0; k < n; ++k) {
      if (b.ring == RingType::F && rng() % 6 == 0) {
        roots.emplace_back();
        continue;
      }
      const long e = static_cast<long>(rng() % 13) - 6;
      roots.push_back((rng() % 3 ? s1 : s2) * Scalar::q_power(e));
    }
  };
  draw(b.roots_m);
  draw(b.roots_n);
  return b;
}

}  // namespace qsa
