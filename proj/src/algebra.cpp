#include "qsa/algebra.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "qsa/expr.hpp"
#include "qsa/linalg.hpp"

namespace qsa {

namespace {

// [e] = 1 + q^-2 + ... + q^-2(e-1)
Scalar qint_inv2(long e) {
  Scalar s;
  for (long j = 0; j < e; ++j) s += Scalar::q_power(-2 * j);
  return s;
}

// E^c Y^e = sum_k beta(c, e, k) X^k Y^(e-k) E^(c-k)
const std::vector<Scalar>& beta_row(long c, long e) {
  thread_local std::map<std::pair<long, long>, std::vector<Scalar>> memo;
  auto key = std::make_pair(c, e);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const long kmax = std::min(c, e);
  std::vector<Scalar> row(static_cast<std::size_t>(kmax + 1));
  if (c == 0 || e == 0) {
    row[0] = Scalar(1);
  } else {
    const auto& same = beta_row(c - 1, e);      // q^-e E^(c-1) Y^e E
    const auto& lower = beta_row(c - 1, e - 1);  // [e] q^(c-1) X E^(c-1) Y^(e-1)
    const Scalar f_same = Scalar::q_power(-e);
    const Scalar f_lower = qint_inv2(e) * Scalar::q_power(c - 1);
    for (std::size_t k = 0; k < same.size(); ++k) row[k] += f_same * same[k];
    for (std::size_t k = 0; k < lower.size(); ++k) row[k + 1] += f_lower * lower[k];
  }
  return memo.emplace(key, std::move(row)).first->second;
}

long iabs(long v) { return v < 0 ? -v : v; }

}  // namespace

std::string to_string(const PbwMonomial& m) {
  std::string out;
  auto put = [&](const char* name, long e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) out += '^' + std::to_string(e);
  };
  put("K", m.i);
  put("X", m.a);
  put("Y", m.b);
  put("E", m.c);
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------- element

AlgebraElement::AlgebraElement(const Scalar& s) {
  if (!s.is_zero()) terms_.emplace(PbwMonomial{}, s);
}

AlgebraElement::AlgebraElement(const PbwMonomial& m, const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(m, c);
}

void AlgebraElement::add_term(const PbwMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar AlgebraElement::coefficient(const PbwMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

long AlgebraElement::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement r = x;
  r += y;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& y) {
  for (const auto& [m, c] : y.terms_) add_term(m, c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) { return x + (-y); }

AlgebraElement operator*(const Scalar& s, const AlgebraElement& x) {
  AlgebraElement r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : x.terms_) r.terms_.emplace(m, s * c);
  return r;
}

AlgebraElement mul_monomials(const PbwMonomial& l, const PbwMonomial& r) {
  AlgebraElement out;
  const Scalar pre = Scalar::q_power(r.i * (l.b - l.a - 2 * l.c) + r.a * (l.c - l.b));
  const auto& beta = beta_row(l.c, r.b);
  for (std::size_t k = 0; k < beta.size(); ++k) {
    const long kk = static_cast<long>(k);
    PbwMonomial m{l.i + r.i, l.a + r.a + kk, l.b + r.b - kk, l.c - kk + r.c};
    out.add_term(m, pre * beta[k] * Scalar::q_power(-l.b * kk));
  }
  return out;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement r;
  for (const auto& [ml, cl] : x.terms_) {
    for (const auto& [mr, cr] : y.terms_) {
      const Scalar c = cl * cr;
      for (const auto& [m, s] : mul_monomials(ml, mr).terms_) r.add_term(m, c * s);
    }
  }
  return r;
}

AlgebraElement AlgebraElement::pow(long n) const {
  if (n < 0) {
    auto inv = invert(*this);
    if (!inv) throw ArithmeticError("negative power of a non-invertible element");
    return inv->pow(-n);
  }
  AlgebraElement r(Scalar(1));
  for (long k = 0; k < n; ++k) r = r * *this;
  return r;
}

std::optional<AlgebraElement> AlgebraElement::invert(const AlgebraElement& x) {
  if (x.terms_.size() != 1) return std::nullopt;
  const auto& [m, c] = *x.terms_.begin();
  if (m.a || m.b || m.c) return std::nullopt;
  return AlgebraElement(PbwMonomial{-m.i, 0, 0, 0}, c.inverse());
}

namespace {

// Render c*m for a sum; returns the sign separately so the caller can join.
std::pair<bool, std::string> render_term(const Scalar& c, const std::string& mono, bool is_unit_mono) {
  const bool atomic = c.is_atomic();
  bool neg = atomic && c.prints_negative();
  Scalar mag = neg ? -c : c;
  std::string cs = mag.to_string();
  if (is_unit_mono) {
    if (!atomic) return {false, "(" + cs + ")"};
    return {neg, cs};
  }
  if (mag.is_one()) return {neg, mono};
  if (!atomic) cs = "(" + cs + ")";
  return {neg, cs + " * " + mono};
}

}  // namespace

std::string render_sum(const std::vector<std::pair<Scalar, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, name] : terms) {
    auto [neg, body] = render_term(c, name, name.empty());
    if (first) {
      out = neg ? "-" + body : body;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::string AlgebraElement::to_string() const {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [m, c] : terms_) terms.emplace_back(c, m == PbwMonomial{} ? std::string() : qsa::to_string(m));
  return render_sum(terms);
}

nlohmann::json AlgebraElement::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    RatPoly num = c.plain_numerator();
    RatPoly den = c.plain_denominator();
    mpz_class l = 1;
    for (const auto& v : num.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    auto ints = [&](const RatPoly& p) {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& v : p.coeffs()) {
        mpq_class s = v * l;
        a.push_back(s.get_num().get_str());
      }
      return a;
    };
    nlohmann::json rec = nlohmann::json::object();
    rec["i"] = m.i;
    rec["a"] = m.a;
    rec["b"] = m.b;
    rec["c"] = m.c;
    rec["numerator"] = ints(num);
    rec["denominator"] = ints(den);
    arr.push_back(std::move(rec));
  }
  return arr;
}

AlgebraElement phi() {
  const Scalar d = Scalar::q_power(-1) - Scalar::q();
  return d * (AlgebraElement::Y() * AlgebraElement::E()) + AlgebraElement::X();
}

AlgebraElement parse_element(const std::string& text) {
  auto e = parse_expr(text);
  std::function<std::optional<AlgebraElement>(const std::string&)> resolve =
      [](const std::string& s) -> std::optional<AlgebraElement> {
    if (s == "K") return AlgebraElement::K();
    if (s == "Kinv") return AlgebraElement::K(-1);
    if (s == "X") return AlgebraElement::X();
    if (s == "Y") return AlgebraElement::Y();
    if (s == "E") return AlgebraElement::E();
    if (s == "phi") return phi();
    return std::nullopt;
  };
  return evaluate<AlgebraElement>(*e, resolve);
}

// ---------------------------------------------------------------- rewriting

AlgebraElement letter_element(Letter l) {
  switch (l) {
    case Letter::K: return AlgebraElement::K();
    case Letter::Kinv: return AlgebraElement::K(-1);
    case Letter::X: return AlgebraElement::X();
    case Letter::Y: return AlgebraElement::Y();
    case Letter::E: return AlgebraElement::E();
  }
  return {};
}

namespace {

int rank(Letter l) {
  switch (l) {
    case Letter::K:
    case Letter::Kinv: return 0;
    case Letter::X: return 1;
    case Letter::Y: return 2;
    case Letter::E: return 3;
  }
  return 0;
}

bool reducible(Letter l, Letter r) {
  if ((l == Letter::K && r == Letter::Kinv) || (l == Letter::Kinv && r == Letter::K)) return true;
  return rank(l) > rank(r);
}

// q-exponent for l*r -> q^e r*l when l is X, Y or E and r is K or Kinv.
long k_swap(Letter l, Letter r) {
  const long s = r == Letter::K ? 1 : -1;
  switch (l) {
    case Letter::X: return -s;
    case Letter::Y: return s;
    case Letter::E: return -2 * s;
    default: return 0;
  }
}

}  // namespace

AlgebraElement rewrite_normal_form(const Word& w, RewriteStrategy strategy) {
  AlgebraElement out;
  std::deque<Word> work{w};
  while (!work.empty()) {
    Word t = std::move(work.front());
    work.pop_front();
    if (t.coeff.is_zero()) continue;
    auto& L = t.letters;
    std::optional<std::size_t> pos;
    if (strategy == RewriteStrategy::LeftmostFirst) {
      for (std::size_t p = 0; p + 1 < L.size(); ++p) {
        if (reducible(L[p], L[p + 1])) {
          pos = p;
          break;
        }
      }
    } else {
      for (std::size_t p = L.size(); p-- > 1;) {
        if (reducible(L[p - 1], L[p])) {
          pos = p - 1;
          break;
        }
      }
    }
    if (!pos) {
      PbwMonomial m;
      for (Letter l : L) {
        switch (l) {
          case Letter::K: ++m.i; break;
          case Letter::Kinv: --m.i; break;
          case Letter::X: ++m.a; break;
          case Letter::Y: ++m.b; break;
          case Letter::E: ++m.c; break;
        }
      }
      out += AlgebraElement(m, t.coeff);
      continue;
    }
    const std::size_t p = *pos;
    const Letter l = L[p], r = L[p + 1];
    if (rank(l) == 0 && rank(r) == 0) {
      L.erase(L.begin() + static_cast<long>(p), L.begin() + static_cast<long>(p) + 2);
      work.push_back(std::move(t));
    } else if (rank(r) == 0) {
      t.coeff *= Scalar::q_power(k_swap(l, r));
      std::swap(L[p], L[p + 1]);
      work.push_back(std::move(t));
    } else if (l == Letter::Y && r == Letter::X) {
      t.coeff *= Scalar::q_power(-1);
      std::swap(L[p], L[p + 1]);
      work.push_back(std::move(t));
    } else if (l == Letter::E && r == Letter::X) {
      t.coeff *= Scalar::q();
      std::swap(L[p], L[p + 1]);
      work.push_back(std::move(t));
    } else {  // E Y -> X + q^-1 Y E
      Word inh = t;
      inh.letters.erase(inh.letters.begin() + static_cast<long>(p));
      inh.letters[p] = Letter::X;
      t.coeff *= Scalar::q_power(-1);
      std::swap(L[p], L[p + 1]);
      work.push_back(std::move(inh));
      work.push_back(std::move(t));
    }
  }
  return out;
}

// ---------------------------------------------------------------- normality

std::optional<NormalityWitness> normality_witness(const AlgebraElement& x) {
  if (x.is_zero()) throw ArithmeticError("normality witness of zero");
  auto ratio = [&](const AlgebraElement& g) -> std::optional<Scalar> {
    const AlgebraElement gx = g * x;
    const AlgebraElement xg = x * g;
    const auto& [m, c] = *xg.terms().begin();
    const Scalar s = gx.coefficient(m) / c;
    if (s.is_zero() || !(gx == s * xg)) return std::nullopt;
    return s;
  };
  NormalityWitness w;
  auto sx = ratio(AlgebraElement::X());
  auto sy = ratio(AlgebraElement::Y());
  auto se = ratio(AlgebraElement::E());
  auto sk = ratio(AlgebraElement::K());
  if (!sx || !sy || !se || !sk) return std::nullopt;
  w.s_X = *sx;
  w.s_Y = *sy;
  w.s_E = *se;
  w.s_K = *sk;
  return w;
}

// ---------------------------------------------------------------- reports

bool Report::all_passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

void Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

std::string Report::to_string() const {
  std::ostringstream os;
  os << "[" << title << "] " << (checks.size() - failures()) << "/" << checks.size() << " passed\n";
  for (const auto& c : checks) {
    os << "  " << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << " : " << c.detail;
    os << '\n';
  }
  return os.str();
}

namespace {

void add_equal(Report& r, const std::string& name, const AlgebraElement& lhs, const AlgebraElement& rhs) {
  const bool ok = lhs == rhs;
  r.add(name, ok, ok ? std::string() : "lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string());
}

AlgebraElement mono(long i, long a, long b, long c, const Scalar& s = Scalar(1)) {
  return AlgebraElement(PbwMonomial{i, a, b, c}, s);
}

}  // namespace

Report verify_identity_suite(int max_i) {
  Report r;
  r.title = "identities";
  const Scalar q = Scalar::q();
  const Scalar qi = Scalar::q_power(-1);
  const AlgebraElement X = AlgebraElement::X(), Y = AlgebraElement::Y(), E = AlgebraElement::E(),
                       K = AlgebraElement::K();
  const AlgebraElement f = phi();

  for (long i = 1; i <= max_i; ++i) {
    // E Y^i = (q^-2i - 1)/(q^-2 - 1) X Y^(i-1) + q^-i Y^i E
    const Scalar c1 = (Scalar::q_power(-2 * i) - 1) / (Scalar::q_power(-2) - 1);
    add_equal(r, "E*Y^" + std::to_string(i) + " expansion", E * Y.pow(i),
              mono(0, 1, i - 1, 0, c1) + mono(0, 0, i, 1, Scalar::q_power(-i)));
    // Y E^i = q^i E^i Y - q(1 - q^2i)/(1 - q^2) X E^(i-1)
    const Scalar c2 = q * (1 - Scalar::q_power(2 * i)) / (1 - Scalar::q_power(2));
    add_equal(r, "Y*E^" + std::to_string(i) + " expansion", Y * E.pow(i),
              Scalar::q_power(i) * (E.pow(i) * Y) - mono(0, 1, 0, i - 1, c2));
  }

  add_equal(r, "phi two expressions", (qi - q) * (Y * E) + X, (1 - q * q) * (E * Y) + q * q * X);
  add_equal(r, "E*Y through phi", E * Y, (qi - q).inverse() * (qi * f - q * X));
  add_equal(r, "E*Y^2 through Y*phi and Y*X", E * Y.pow(2),
            (q * (1 - q * q)).inverse() * (Y * f) + (q.pow(3) / (q * q - 1)) * (Y * X));
  add_equal(r, "X*phi = phi*X", X * f, f * X);
  add_equal(r, "Y*phi = q*phi*Y", Y * f, q * (f * Y));
  add_equal(r, "E*phi = q^-1*phi*E", E * f, qi * (f * E));
  add_equal(r, "K*phi = q*phi*K", K * f, q * (f * K));
  return r;
}

Report smash_consistency_check() {
  Report r;
  r.title = "smash product";
  const Scalar q = Scalar::q();
  // Quantum plane part: X^a Y^b with i = c = 0.
  using QP = AlgebraElement;
  auto act_K = [&](const QP& v, long sign) {
    QP out;
    for (const auto& [m, c] : v.terms()) out += AlgebraElement(m, c * Scalar::q_power(sign * (m.a - m.b)));
    return out;
  };
  // E acts on generators; extended to words through Delta(E) = E (x) 1 + K (x) E.
  auto act_E_gen = [&](Letter g) -> QP {
    return g == Letter::Y ? AlgebraElement::X() : QP();
  };
  auto act_E_word = [&](const std::vector<Letter>& w) {
    // E.(g1 g2 ... gn) = sum_k (K.g1)...(K.g_{k-1}) (E.g_k) g_{k+1}...g_n
    QP total;
    for (std::size_t k = 0; k < w.size(); ++k) {
      QP term(Scalar(1));
      for (std::size_t j = 0; j < k; ++j) term = term * act_K(letter_element(w[j]), 1);
      term = term * act_E_gen(w[k]);
      for (std::size_t j = k + 1; j < w.size(); ++j) term = term * letter_element(w[j]);
      total += term;
    }
    return total;
  };

  const std::vector<std::pair<Letter, const char*>> plane{{Letter::X, "X"}, {Letter::Y, "Y"}};
  for (const auto& [g, name] : plane) {
    const QP a = letter_element(g);
    // K a = (K.a) K ; K^-1 a = (K^-1.a) K^-1 ; E a = (E.a) 1 + (K.a) E
    add_equal(r, std::string("K*") + name, AlgebraElement::K() * a, act_K(a, 1) * AlgebraElement::K());
    add_equal(r, std::string("Kinv*") + name, AlgebraElement::K(-1) * a, act_K(a, -1) * AlgebraElement::K(-1));
    add_equal(r, std::string("E*") + name, AlgebraElement::E() * a,
              act_E_gen(g) + act_K(a, 1) * AlgebraElement::E());
  }
  // Hopf side: K E K^-1 = q^2 E.
  add_equal(r, "K*E", AlgebraElement::K() * AlgebraElement::E(), q * q * (AlgebraElement::E() * AlgebraElement::K()));
  // The action respects the quantum plane relation XY = qYX.
  const QP rel_e = act_E_word({Letter::X, Letter::Y}) - q * act_E_word({Letter::Y, Letter::X});
  r.add("E.(XY - qYX) = 0", rel_e.is_zero(), rel_e.to_string());
  const QP xy = AlgebraElement::X() * AlgebraElement::Y();
  const QP yx = AlgebraElement::Y() * AlgebraElement::X();
  const QP rel_k = act_K(xy - q * yx, 1);
  r.add("K.(XY - qYX) = 0", rel_k.is_zero() && (xy - q * yx).is_zero(), rel_k.to_string());
  return r;
}

// ---------------------------------------------------------------- filtration

std::vector<PbwMonomial> filtration_basis(long n) {
  std::vector<PbwMonomial> out;
  for (long i = -n; i <= n; ++i) {
    const long rest = n - iabs(i);
    for (long a = 0; a <= rest; ++a)
      for (long b = 0; a + b <= rest; ++b)
        for (long c = 0; a + b + c <= rest; ++c) out.push_back({i, a, b, c});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t filtration_dim(long n) {
  if (n < 0) return 0;
  std::uint64_t total = 0;
  for (long i = -n; i <= n; ++i) {
    const auto r = static_cast<std::uint64_t>(n - iabs(i));
    total += (r + 1) * (r + 2) * (r + 3) / 6;
  }
  return total;
}

namespace {

using MonoVec = SparseVec<PbwMonomial, std::less<PbwMonomial>>;

MonoVec as_vec(const AlgebraElement& x) { return MonoVec(x.terms().begin(), x.terms().end()); }

AlgebraElement from_vec(const MonoVec& v) {
  AlgebraElement r;
  for (const auto& [m, c] : v) r += AlgebraElement(m, c);
  return r;
}

}  // namespace

std::vector<AlgebraElement> centralizer_basis(const std::vector<AlgebraElement>& gens, long n) {
  const auto basis = filtration_basis(n);
  using Key = std::pair<std::size_t, PbwMonomial>;
  std::vector<SparseVec<Key, std::less<Key>>> images;
  images.reserve(basis.size());
  for (const auto& m : basis) {
    SparseVec<Key, std::less<Key>> img;
    const AlgebraElement x(m);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const AlgebraElement comm = x * gens[g] - gens[g] * x;
      for (const auto& [mm, c] : comm.terms()) img.emplace(Key{g, mm}, c);
    }
    images.push_back(std::move(img));
  }
  std::vector<MonoVec> kernel_vecs;
  for (const auto& k : kernel(images)) {
    MonoVec v;
    for (const auto& [idx, c] : k) v.emplace(basis[idx], c);
    kernel_vecs.push_back(std::move(v));
  }
  std::vector<AlgebraElement> out;
  for (const auto& v : reduced_basis(kernel_vecs)) out.push_back(from_vec(v));
  return out;
}

bool same_span(const std::vector<AlgebraElement>& basis, const std::vector<AlgebraElement>& expected) {
  Echelon<PbwMonomial> e(false);
  for (const auto& b : basis) e.insert(as_vec(b));
  const std::size_t r = e.rank();
  if (r != basis.size()) return false;
  for (const auto& x : expected)
    if (!e.contains(as_vec(x))) return false;
  Echelon<PbwMonomial> f(false);
  for (const auto& x : expected) f.insert(as_vec(x));
  return f.rank() == r;
}

// ---------------------------------------------------------------- sampler

PbwMonomial ElementSampler::monomial(long max_degree) {
  std::uniform_int_distribution<long> di(-2, 2), de(0, 2);
  for (;;) {
    PbwMonomial m{di(rng_), de(rng_), de(rng_), de(rng_)};
    if (m.degree() <= max_degree) return m;
  }
}

Scalar ElementSampler::coefficient() {
  std::uniform_int_distribution<int> d(0, 4);
  switch (d(rng_)) {
    case 0: return Scalar(1);
    case 1: return Scalar(-1);
    case 2: return Scalar::q();
    case 3: return Scalar::q_power(-1);
    default: return Scalar::q_power(2) - 1;
  }
}

AlgebraElement ElementSampler::element(long max_degree, int max_terms) {
  std::uniform_int_distribution<int> dn(1, max_terms);
  AlgebraElement x;
  const int n = dn(rng_);
  for (int k = 0; k < n; ++k) x += AlgebraElement(monomial(max_degree), coefficient());
  if (x.is_zero()) x = AlgebraElement(monomial(max_degree), coefficient());
  return x;
}

Word ElementSampler::word(std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> dl(0, max_length);
  std::uniform_int_distribution<int> dg(0, 4);
  Word w;
  w.coeff = coefficient();
  const std::size_t n = dl(rng_);
  for (std::size_t k = 0; k < n; ++k) w.letters.push_back(static_cast<Letter>(dg(rng_)));
  return w;
}

}  // namespace qsa
