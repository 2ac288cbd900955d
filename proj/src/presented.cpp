#include "qsa/presented.hpp"

#include <nlohmann/json.hpp>

#include "qsa/expr.hpp"
#include "qsa/linalg.hpp"

namespace qsa {

bool ExponentLess::operator()(const std::vector<long>& l, const std::vector<long>& r) const {
  long dl = 0, dr = 0;
  for (long v : l) dl += v < 0 ? -v : v;
  for (long v : r) dr += v < 0 ? -v : v;
  if (dl != dr) return dl < dr;
  return l < r;
}

// ---------------------------------------------------------------- algebra

QCAlgebra::Ptr QCAlgebra::make(std::string name, std::vector<std::string> generators, std::vector<bool> invertible,
                               std::vector<std::vector<long>> comm) {
  const std::size_t n = generators.size();
  if (invertible.size() != n || comm.size() != n) throw std::invalid_argument("presentation: size mismatch");
  for (std::size_t j = 0; j < n; ++j) {
    if (comm[j].size() != n) throw std::invalid_argument("presentation: commutation matrix must be square");
    if (comm[j][j] != 0) throw std::invalid_argument("presentation: diagonal must vanish");
    for (std::size_t i = 0; i < j; ++i)
      if (comm[j][i] != -comm[i][j]) throw std::invalid_argument("presentation: matrix is not antisymmetric");
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (generators[i] == generators[j]) throw std::invalid_argument("presentation: duplicate generator " + generators[i]);
  auto a = std::shared_ptr<QCAlgebra>(new QCAlgebra());
  a->name_ = std::move(name);
  a->gens_ = std::move(generators);
  a->inv_ = std::move(invertible);
  a->c_ = std::move(comm);
  return a;
}

QCAlgebra::Ptr QCAlgebra::from_json(const nlohmann::json& j) {
  try {
    std::vector<std::string> g = j.at("generators").get<std::vector<std::string>>();
    std::vector<bool> inv = j.at("invertible").get<std::vector<bool>>();
    std::vector<std::vector<long>> c = j.at("commutation").get<std::vector<std::vector<long>>>();
    return make(j.value("name", std::string("custom")), std::move(g), std::move(inv), std::move(c));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("presentation manifest: ") + e.what());
  }
}

nlohmann::json QCAlgebra::to_json() const {
  nlohmann::json j;
  j["name"] = name_;
  j["generators"] = gens_;
  j["invertible"] = inv_;
  j["commutation"] = c_;
  if (residue) j["residue"] = {{"symbol", residue->first}, {"value", residue->second.to_string()}};
  return j;
}

std::optional<std::size_t> QCAlgebra::index_of(const std::string& name) const {
  for (std::size_t k = 0; k < gens_.size(); ++k)
    if (gens_[k] == name) return k;
  return std::nullopt;
}

bool QCAlgebra::same_as(const QCAlgebra& o) const {
  return this == &o || (name_ == o.name_ && gens_ == o.gens_ && inv_ == o.inv_ && c_ == o.c_ && residue == o.residue);
}

QCElement QCAlgebra::one() const { return constant(Scalar(1)); }

QCElement QCAlgebra::constant(const Scalar& s) const { return QCElement(shared_from_this(), s); }

QCElement QCAlgebra::monomial(const std::vector<long>& exps, const Scalar& c) const {
  if (exps.size() != gens_.size()) throw std::invalid_argument("monomial: wrong number of exponents");
  for (std::size_t k = 0; k < exps.size(); ++k)
    if (exps[k] < 0 && !inv_[k]) throw std::invalid_argument("monomial: negative power of non-invertible " + gens_[k]);
  QCElement e(shared_from_this());
  e.add_term(exps, c);
  return e;
}

QCElement QCAlgebra::gen(std::size_t k, long power) const {
  std::vector<long> e(gens_.size(), 0);
  e.at(k) = power;
  return monomial(e);
}

long QCAlgebra::product_twist(const std::vector<long>& l, const std::vector<long>& r) const {
  long t = 0;
  for (std::size_t j = 0; j < l.size(); ++j) {
    if (!l[j]) continue;
    for (std::size_t i = 0; i < j; ++i) t += c_[j][i] * l[j] * r[i];
  }
  return t;
}

// ---------------------------------------------------------------- element

QCElement::QCElement(QCAlgebra::Ptr parent, const Scalar& s) : parent_(std::move(parent)) {
  if (!s.is_zero()) terms_.emplace(std::vector<long>(parent_->ngens(), 0), s);
}

Scalar QCElement::coefficient(const std::vector<long>& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

void QCElement::add_term(const std::vector<long>& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void QCElement::check_parent(const QCElement& o) const {
  if (!parent_->same_as(*o.parent_))
    throw std::invalid_argument("elements of different algebras: " + parent_->name() + " and " + o.parent_->name());
}

QCElement operator+(const QCElement& x, const QCElement& y) {
  x.check_parent(y);
  QCElement r = x;
  for (const auto& [e, c] : y.terms_) r.add_term(e, c);
  return r;
}

QCElement QCElement::operator-() const {
  QCElement r(parent_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

QCElement operator-(const QCElement& x, const QCElement& y) { return x + (-y); }

QCElement operator*(const Scalar& s, const QCElement& x) {
  QCElement r(x.parent_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : x.terms_) r.terms_.emplace(e, s * c);
  return r;
}

QCElement operator*(const QCElement& x, const QCElement& y) {
  x.check_parent(y);
  QCElement r(x.parent_);
  for (const auto& [el, cl] : x.terms_) {
    for (const auto& [er, cr] : y.terms_) {
      std::vector<long> e(el.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = el[k] + er[k];
      r.add_term(e, Scalar::q_power(x.parent_->product_twist(el, er)) * cl * cr);
    }
  }
  return r;
}

bool operator==(const QCElement& x, const QCElement& y) {
  return x.parent_->same_as(*y.parent_) && x.terms_ == y.terms_;
}

std::optional<QCElement> QCElement::invert(const QCElement& x) {
  if (x.terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *x.terms_.begin();
  std::vector<long> neg(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] != 0 && !x.parent_->invertible(k)) return std::nullopt;
    neg[k] = -e[k];
  }
  const QCElement u = x.parent_->monomial(neg);
  const QCElement prod = x * u;  // a nonzero scalar
  return prod.terms_.begin()->second.inverse() * u;
}

QCElement QCElement::pow(long n) const {
  if (n < 0) {
    auto inv = invert(*this);
    if (!inv) throw ArithmeticError("negative power of a non-invertible element");
    return inv->pow(-n);
  }
  QCElement r = parent_->one();
  for (long k = 0; k < n; ++k) r = r * *this;
  return r;
}

std::string QCAlgebra::monomial_string(const std::vector<long>& e) const {
  std::string mono;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (!e[k]) continue;
    if (!mono.empty()) mono += '*';
    mono += gens_[k];
    if (e[k] != 1) mono += '^' + std::to_string(e[k]);
  }
  return mono;
}

std::string QCElement::to_string() const {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [e, c] : terms_) terms.emplace_back(c, parent_->monomial_string(e));
  return render_sum(terms);
}

// ---------------------------------------------------------------- maps

namespace {

struct Images {
  const QuotientMap& m;
  const QCElement& get(const std::optional<QCElement>& v, const char* name) const {
    if (!v) throw std::invalid_argument(m.name + ": no image for " + name);
    return *v;
  }
};

void add_zero(Report& r, const std::string& name, const QCElement& v) {
  r.add(name, v.is_zero(), v.is_zero() ? std::string() : "image = " + v.to_string());
}

}  // namespace

Report check_well_defined(const QuotientMap& m) {
  Report r;
  r.title = "quotient map " + m.name;
  if (!m.K || !m.Kinv || !m.X || !m.Y || !m.E) {
    r.add("all generator images present", false, "missing image");
    return r;
  }
  const QCElement &K = *m.K, &Ki = *m.Kinv, &X = *m.X, &Y = *m.Y, &E = *m.E;
  for (const QCElement* v : {&K, &Ki, &X, &Y, &E}) {
    if (!v->parent()->same_as(*m.target)) {
      r.add("images lie in the target", false, "image in " + v->parent()->name());
      return r;
    }
  }
  const Scalar q = Scalar::q();
  const Scalar qi = Scalar::q_power(-1);
  add_zero(r, "EK = q^-2 KE", E * K - Scalar::q_power(-2) * (K * E));
  add_zero(r, "XK = q^-1 KX", X * K - qi * (K * X));
  add_zero(r, "YK = q KY", Y * K - q * (K * Y));
  add_zero(r, "EX = q XE", E * X - q * (X * E));
  add_zero(r, "EY = X + q^-1 YE", E * Y - X - qi * (Y * E));
  add_zero(r, "qYX = XY", q * (Y * X) - X * Y);
  add_zero(r, "K Kinv = 1", K * Ki - m.target->one());
  add_zero(r, "Kinv K = 1", Ki * K - m.target->one());
  return r;
}

QCElement project(const QuotientMap& m, const AlgebraElement& x) {
  const Images im{m};
  std::map<std::pair<int, long>, QCElement> powers;
  auto power = [&](int which, const QCElement& base, long e) -> const QCElement& {
    auto key = std::make_pair(which, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, base.pow(e)).first->second;
  };
  QCElement out(m.target);
  for (const auto& [mono, c] : x.terms()) {
    QCElement t = m.target->constant(c);
    if (mono.i > 0) t = t * power(0, im.get(m.K, "K"), mono.i);
    if (mono.i < 0) t = t * power(1, im.get(m.Kinv, "Kinv"), -mono.i);
    if (mono.a) t = t * power(2, im.get(m.X, "X"), mono.a);
    if (mono.b) t = t * power(3, im.get(m.Y, "Y"), mono.b);
    if (mono.c) t = t * power(4, im.get(m.E, "E"), mono.c);
    out = out + t;
  }
  return out;
}

// ---------------------------------------------------------------- center

namespace {

void enumerate(const QCAlgebra& A, long n, std::size_t k, long budget, std::vector<long>& cur,
               std::vector<std::vector<long>>& out) {
  if (k == A.ngens()) {
    out.push_back(cur);
    return;
  }
  if (A.invertible(k)) {
    for (long e = -n; e <= n; ++e) {
      cur[k] = e;
      enumerate(A, n, k + 1, budget, cur, out);
    }
  } else {
    for (long e = 0; e <= budget; ++e) {
      cur[k] = e;
      enumerate(A, n, k + 1, budget - e, cur, out);
    }
  }
  cur[k] = 0;
}

using ExpVec = SparseVec<std::vector<long>, ExponentLess>;

}  // namespace

std::vector<QCElement> center_basis_qc(const QCAlgebra::Ptr& A, long n) {
  std::vector<std::vector<long>> basis;
  std::vector<long> cur(A->ngens(), 0);
  enumerate(*A, n, 0, n, cur, basis);
  using Key = std::pair<std::size_t, std::vector<long>>;
  std::vector<SparseVec<Key, std::less<Key>>> images;
  for (const auto& e : basis) {
    const QCElement x = A->monomial(e);
    SparseVec<Key, std::less<Key>> img;
    for (std::size_t g = 0; g < A->ngens(); ++g) {
      const QCElement gen = A->gen(g);
      const QCElement comm = x * gen - gen * x;
      for (const auto& [ee, c] : comm.terms()) img.emplace(Key{g, ee}, c);
    }
    images.push_back(std::move(img));
  }
  std::vector<ExpVec> kv;
  for (const auto& k : kernel(images)) {
    ExpVec v;
    for (const auto& [idx, c] : k) v.emplace(basis[idx], c);
    kv.push_back(std::move(v));
  }
  std::vector<QCElement> out;
  for (const auto& v : reduced_basis(kv)) {
    QCElement x(A);
    for (const auto& [e, c] : v) x.add_term(e, c);
    out.push_back(std::move(x));
  }
  return out;
}

bool same_span_qc(const std::vector<QCElement>& basis, const std::vector<QCElement>& expected) {
  auto vec = [](const QCElement& x) { return ExpVec(x.terms().begin(), x.terms().end()); };
  Echelon<std::vector<long>, ExponentLess> e(false);
  for (const auto& b : basis) e.insert(vec(b));
  if (e.rank() != basis.size()) return false;
  for (const auto& x : expected)
    if (!e.contains(vec(x))) return false;
  Echelon<std::vector<long>, ExponentLess> f(false);
  for (const auto& x : expected) f.insert(vec(x));
  return f.rank() == e.rank();
}

// ---------------------------------------------------------------- presets

namespace presets {

namespace {

std::vector<std::vector<long>> matrix(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, long>> entries) {
  std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
  for (const auto& [j, i, v] : entries) {
    c[j][i] = v;
    c[i][j] = -v;
  }
  return c;
}

QuotientMap with_k(std::string name, QCAlgebra::Ptr A) {
  QuotientMap m(std::move(name), A);
  m.K = A->gen(0);
  m.Kinv = A->gen(0, -1);
  return m;
}

Scalar nonzero(const Scalar& s, const char* what) {
  if (s.is_zero()) throw std::invalid_argument(std::string(what) + " must be nonzero");
  return s;
}

// K, Y, E with EY = q^s YE
QuotientMap kye(std::string name, long s) {
  auto A = QCAlgebra::make(name, {"K", "Y", "E"}, {true, false, false}, matrix(3, {{1, 0, 1}, {2, 0, -2}, {2, 1, s}}));
  QuotientMap m = with_k(std::move(name), A);
  m.Y = A->gen(1);
  m.E = A->gen(2);
  return m;
}

QCAlgebra::Ptr torus_ky(const std::string& name) {
  return QCAlgebra::make(name, {"K", "Y"}, {true, true}, matrix(2, {{1, 0, 1}}));
}

}  // namespace

QuotientMap A_mod_X() {
  QuotientMap m = kye("A_mod_X", -1);
  m.X = QCElement(m.target);
  m.symbols.emplace("Z", (1 - Scalar::q_power(2)) * (*m.E * m.Y->pow(2) * *m.Kinv));
  return m;
}

QuotientMap A_mod_phi() {
  QuotientMap m = kye("A_mod_phi", 1);
  m.X = (Scalar::q() - Scalar::q_power(-1)) * (*m.Y * *m.E);
  m.symbols.emplace("C", *m.X * *m.Y * *m.K);
  return m;
}

QuotientMap A_mod_Y() {
  auto A = QCAlgebra::make("A_mod_Y", {"K", "E"}, {true, false}, matrix(2, {{1, 0, -2}}));
  QuotientMap m = with_k("A_mod_Y", A);
  m.X = QCElement(A);
  m.Y = QCElement(A);
  m.E = A->gen(1);
  return m;
}

QuotientMap A_mod_E() {
  auto A = QCAlgebra::make("A_mod_E", {"K", "Y"}, {true, false}, matrix(2, {{1, 0, 1}}));
  QuotientMap m = with_k("A_mod_E", A);
  m.X = QCElement(A);
  m.Y = A->gen(1);
  m.E = QCElement(A);
  return m;
}

namespace {

QuotientMap laurent_k(const std::string& name) {
  auto A = QCAlgebra::make("L", {"K"}, {true}, matrix(1, {}));
  QuotientMap m = with_k(name, A);
  m.X = QCElement(A);
  m.Y = QCElement(A);
  m.E = QCElement(A);
  return m;
}

}  // namespace

QuotientMap A_mod_YE() { return laurent_k("A_mod_YE"); }

QuotientMap L() { return laurent_k("L"); }

QuotientMap Ybb() {
  auto A = torus_ky("Ybb");
  QuotientMap m = with_k("Ybb", A);
  m.X = QCElement(A);
  m.Y = A->gen(1);
  m.E = QCElement(A);
  return m;
}

QuotientMap A_mod_P(const Scalar& kappa) {
  nonzero(kappa, "kappa");
  auto base = QCAlgebra::make("A_mod_P", {}, {}, {});
  auto A = std::const_pointer_cast<QCAlgebra>(base);
  A->residue = std::make_pair(std::string("K"), kappa);
  QuotientMap m("A_mod_P(" + kappa.to_string() + ")", A);
  m.K = A->constant(kappa);
  m.Kinv = A->constant(kappa.inverse());
  m.X = QCElement(A);
  m.Y = QCElement(A);
  m.E = QCElement(A);
  return m;
}

QuotientMap A_mod_X_q(const Scalar& zeta) {
  nonzero(zeta, "zeta");
  auto A = std::const_pointer_cast<QCAlgebra>(torus_ky("A_mod_X_q"));
  A->residue = std::make_pair(std::string("Z"), zeta);
  QuotientMap m = with_k("A_mod_X_q(" + zeta.to_string() + ")", A);
  const QCElement Yi = A->gen(1, -1);
  m.X = QCElement(A);
  m.Y = A->gen(1);
  m.E = (zeta / (Scalar::q_power(-1) - Scalar::q())) * (Yi * *m.K * Yi);
  m.symbols.emplace("Z", (1 - Scalar::q_power(2)) * (*m.E * m.Y->pow(2) * *m.Kinv));
  return m;
}

QuotientMap A_mod_phi_r(const Scalar& zeta) {
  nonzero(zeta, "zeta");
  auto A = std::const_pointer_cast<QCAlgebra>(torus_ky("A_mod_phi_r"));
  A->residue = std::make_pair(std::string("C"), zeta);
  QuotientMap m = with_k("A_mod_phi_r(" + zeta.to_string() + ")", A);
  const QCElement Yi = A->gen(1, -1);
  m.Y = A->gen(1);
  m.X = zeta * (*m.Kinv * Yi);
  m.E = (Scalar::q() - Scalar::q_power(-1)).inverse() * (Yi * *m.X);
  m.symbols.emplace("C", *m.X * *m.Y * *m.K);
  return m;
}

std::vector<std::string> names() {
  return {"A_mod_X", "A_mod_phi", "A_mod_Y", "A_mod_E", "A_mod_YE", "L", "Ybb",
          "A_mod_P(kappa)", "A_mod_X_q(zeta)", "A_mod_phi_r(zeta)"};
}

QuotientMap by_name(const std::string& spec) {
  const auto open = spec.find('(');
  const std::string base = spec.substr(0, open);
  std::optional<Scalar> arg;
  if (open != std::string::npos) {
    if (spec.back() != ')') throw std::invalid_argument("malformed preset '" + spec + "'");
    arg = Scalar::parse(spec.substr(open + 1, spec.size() - open - 2));
  }
  auto need = [&](bool param) {
    if (param != arg.has_value())
      throw std::invalid_argument(param ? "preset " + base + " needs a parameter" : "preset " + base + " takes no parameter");
  };
  if (base == "A_mod_X") return need(false), A_mod_X();
  if (base == "A_mod_phi") return need(false), A_mod_phi();
  if (base == "A_mod_Y") return need(false), A_mod_Y();
  if (base == "A_mod_E") return need(false), A_mod_E();
  if (base == "A_mod_YE") return need(false), A_mod_YE();
  if (base == "L") return need(false), L();
  if (base == "Ybb") return need(false), Ybb();
  if (base == "A_mod_P") return need(true), A_mod_P(*arg);
  if (base == "A_mod_X_q") return need(true), A_mod_X_q(*arg);
  if (base == "A_mod_phi_r") return need(true), A_mod_phi_r(*arg);
  throw std::invalid_argument("unknown algebra '" + spec + "'");
}

}  // namespace presets

// ---------------------------------------------------------------- parsing

namespace {

// Value that is either a bare scalar or an element of a fixed algebra.
struct QCVal {
  Scalar s;
  std::optional<QCElement> e;
  explicit QCVal(Scalar v) : s(std::move(v)) {}
  explicit QCVal(QCElement x) : e(std::move(x)) {}

  QCElement as(const QCAlgebra::Ptr& A) const { return e ? *e : A->constant(s); }

  friend QCVal operator+(const QCVal& a, const QCVal& b) {
    if (!a.e && !b.e) return QCVal(a.s + b.s);
    const auto& A = a.e ? a.e->parent() : b.e->parent();
    return QCVal(a.as(A) + b.as(A));
  }
  friend QCVal operator-(const QCVal& a, const QCVal& b) { return a + (-b); }
  friend QCVal operator*(const QCVal& a, const QCVal& b) {
    if (!a.e && !b.e) return QCVal(a.s * b.s);
    if (!a.e) return QCVal(a.s * *b.e);
    if (!b.e) return QCVal(b.s * *a.e);
    return QCVal(*a.e * *b.e);
  }
  QCVal operator-() const { return e ? QCVal(-*e) : QCVal(-s); }
  static std::optional<QCVal> invert(const QCVal& a) {
    if (!a.e) {
      if (a.s.is_zero()) return std::nullopt;
      return QCVal(a.s.inverse());
    }
    auto inv = QCElement::invert(*a.e);
    if (!inv) return std::nullopt;
    return QCVal(*inv);
  }
};

}  // namespace

QCElement parse_in(const QuotientMap& m, const std::string& text) {
  std::map<std::string, QCElement> sym;
  const auto& A = m.target;
  auto put = [&](const std::string& n, const std::optional<QCElement>& v) {
    if (v) sym.insert_or_assign(n, *v);
  };
  put("K", m.K);
  put("Kinv", m.Kinv);
  put("X", m.X);
  put("Y", m.Y);
  put("E", m.E);
  if (m.X && m.Y && m.E)
    sym.insert_or_assign("phi", *m.X + (Scalar::q_power(-1) - Scalar::q()) * (*m.Y * *m.E));
  for (std::size_t k = 0; k < A->ngens(); ++k) {
    sym.insert_or_assign(A->generator(k), A->gen(k));
    if (A->invertible(k)) sym.insert_or_assign(A->generator(k) + "inv", A->gen(k, -1));
  }
  for (const auto& [n, v] : m.symbols) sym.insert_or_assign(n, v);

  std::function<std::optional<QCVal>(const std::string&)> resolve = [&](const std::string& s) -> std::optional<QCVal> {
    auto it = sym.find(s);
    if (it == sym.end()) return std::nullopt;
    return QCVal(it->second);
  };
  return evaluate<QCVal>(*parse_expr(text), resolve).as(A);
}

}  // namespace qsa
