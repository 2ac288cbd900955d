#include "qsa/gwa.hpp"

#include <sstream>
#include <stdexcept>

#include "qsa/linalg.hpp"

namespace qsa {

namespace {

void require_commutative(const QCAlgebra& D) {
  for (std::size_t i = 0; i < D.ngens(); ++i)
    for (std::size_t j = 0; j < D.ngens(); ++j)
      if (D.comm(i, j) != 0) throw std::invalid_argument("GWA base ring " + D.name() + " is not commutative");
}

QCElement d_one(const QCAlgebra::Ptr& D) { return D->one(); }

Scalar pool_coefficient(std::mt19937_64& rng) {
  static const char* const pool[] = {"1", "-1", "q", "q^-1", "q^2 - 1"};
  return Scalar::parse(pool[rng() % std::size(pool)]);
}

}  // namespace

QCElement substitute(const QCElement& d, const std::vector<QCElement>& images) {
  if (images.size() != d.parent()->ngens()) throw std::invalid_argument("substitute: wrong number of images");
  const QCAlgebra::Ptr& target = images.empty() ? d.parent() : images.front().parent();
  QCElement out(target);
  for (const auto& [e, c] : d.terms()) {
    QCElement t = target->constant(c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] > 0) {
        t = t * images[k].pow(e[k]);
      } else if (e[k] < 0) {
        auto inv = QCElement::invert(images[k]);
        if (!inv) throw std::invalid_argument("substitute: image of " + d.parent()->generator(k) + " is not invertible");
        t = t * inv->pow(-e[k]);
      }
    }
    out = out + t;
  }
  return out;
}

GWAData::Ptr GWAData::make(QCAlgebra::Ptr D, std::vector<QCElement> sigma, std::vector<QCElement> sigma_inv,
                           QCElement a) {
  require_commutative(*D);
  if (sigma.size() != D->ngens() || sigma_inv.size() != D->ngens())
    throw std::invalid_argument("sigma needs one image per generator of D");
  for (const auto* v : {&sigma, &sigma_inv})
    for (const auto& s : *v)
      if (s.parent() != D) throw std::invalid_argument("sigma images must lie in D");
  if (a.parent() != D) throw std::invalid_argument("a must lie in D");
  for (std::size_t k = 0; k < D->ngens(); ++k) {
    if (substitute(sigma_inv[k], sigma) != D->gen(k) || substitute(sigma[k], sigma_inv) != D->gen(k))
      throw std::invalid_argument("sigma and sigma_inv are not mutually inverse on " + D->generator(k));
  }
  return Ptr(new GWAData(std::move(D), std::move(sigma), std::move(sigma_inv), std::move(a)));
}

GWAData::Ptr GWAData::diagonal(QCAlgebra::Ptr D, const std::vector<long>& shifts, QCElement a) {
  if (shifts.size() != D->ngens()) throw std::invalid_argument("one shift per generator of D");
  std::vector<QCElement> s, si;
  for (std::size_t k = 0; k < shifts.size(); ++k) {
    s.push_back(Scalar::q_power(shifts[k]) * D->gen(k));
    si.push_back(Scalar::q_power(-shifts[k]) * D->gen(k));
  }
  return make(std::move(D), std::move(s), std::move(si), std::move(a));
}

QCElement GWAData::apply_sigma(const QCElement& d, long n) const {
  if (n == 0) return d;
  const auto& base = n > 0 ? sigma_ : sigma_inv_;
  std::vector<QCElement> images = base;
  for (long k = 1; k < (n > 0 ? n : -n); ++k) {
    std::vector<QCElement> next;
    for (const auto& img : images) next.push_back(substitute(img, base));
    images = std::move(next);
  }
  return substitute(d, images);
}

QCElement GWAData::left_coefficient(long n, long m) const {
  QCElement r = d_one(D_);
  if (n > 0 && m < 0) {
    for (long k = std::max(1L, n + m + 1); k <= n; ++k) r = r * apply_sigma(a_, k);
  } else if (n < 0 && m > 0) {
    for (long k = n + 1; k <= std::min(0L, n + m); ++k) r = r * apply_sigma(a_, k);
  }
  return r;
}

QCElement GWAData::right_coefficient(long n, long m) const {
  long k = n;
  QCElement r = d_one(D_);
  const QCElement sa = apply_sigma(a_, 1);
  for (long s = 0; s < (m > 0 ? m : -m); ++s) {
    if (m > 0) {
      r = (k < 0 ? a_ : d_one(D_)) * apply_sigma(r, -1);
      ++k;
    } else {
      r = (k > 0 ? sa : d_one(D_)) * apply_sigma(r, 1);
      --k;
    }
  }
  return r;
}

// ---------------------------------------------------------------- elements

GWAElement::GWAElement(GWAData::Ptr data, const QCElement& d, long n) : data_(std::move(data)) {
  if (d.parent() != data_->D()) throw std::invalid_argument("coefficient does not lie in D");
  add(n, d);
}

GWAElement GWAElement::v(GWAData::Ptr data, long n) {
  const QCElement one = data->D()->one();
  return GWAElement(std::move(data), one, n);
}

QCElement GWAElement::component(long n) const {
  auto it = comps_.find(n);
  return it == comps_.end() ? QCElement(data_->D()) : it->second;
}

void GWAElement::add(long n, const QCElement& d) {
  if (d.is_zero()) return;
  auto it = comps_.find(n);
  if (it == comps_.end()) {
    comps_.emplace(n, d);
    return;
  }
  it->second = it->second + d;
  if (it->second.is_zero()) comps_.erase(it);
}

void GWAElement::check_data(const GWAElement& o) const {
  if (data_ != o.data_) throw std::invalid_argument("GWA elements of different algebras");
}

GWAElement operator+(const GWAElement& x, const GWAElement& y) {
  x.check_data(y);
  GWAElement r = x;
  for (const auto& [n, d] : y.comps_) r.add(n, d);
  return r;
}

GWAElement operator-(const GWAElement& x, const GWAElement& y) {
  x.check_data(y);
  GWAElement r = x;
  for (const auto& [n, d] : y.comps_) r.add(n, -d);
  return r;
}

GWAElement operator*(const GWAElement& x, const GWAElement& y) {
  x.check_data(y);
  const GWAData& g = *x.data_;
  GWAElement r(x.data_);
  for (const auto& [n, d] : x.comps_)
    for (const auto& [m, e] : y.comps_) r.add(n + m, d * g.apply_sigma(e, n) * g.left_coefficient(n, m));
  return r;
}

bool operator==(const GWAElement& x, const GWAElement& y) {
  if (x.data_ != y.data_ || x.comps_.size() != y.comps_.size()) return false;
  for (auto i = x.comps_.begin(), j = y.comps_.begin(); i != x.comps_.end(); ++i, ++j)
    if (i->first != j->first || !(i->second == j->second)) return false;
  return true;
}

std::string GWAElement::to_string() const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, d] : comps_) {
    if (!first) os << " + ";
    first = false;
    if (n == 0) {
      os << d.to_string();
    } else if (d == data_->D()->one()) {
      os << "v_" << n;
    } else {
      os << "(" << d.to_string() << ") * v_" << n;
    }
  }
  return os.str();
}

GWAElement gwa_mul_stepwise(const GWAElement& x, const GWAElement& y) {
  const GWAData& g = *x.data();
  GWAElement out(x.data());
  for (const auto& [n, d] : x.components()) {
    for (const auto& [m, e] : y.components()) {
      // d v_n e = d sigma^n(e) v_n, then append the letters of v_m.
      QCElement c = d * g.apply_sigma(e, n);
      long k = n;
      for (long s = 0; s < (m > 0 ? m : -m); ++s) {
        if (m > 0) {
          if (k < 0) c = c * g.apply_sigma(g.a(), k + 1);
          ++k;
        } else {
          if (k > 0) c = c * g.apply_sigma(g.a(), k);
          --k;
        }
      }
      out = out + GWAElement(x.data(), c, k);
    }
  }
  return out;
}

GWAElement random_gwa(const GWAData::Ptr& data, std::mt19937_64& rng, long max_degree, int max_terms) {
  GWAElement r(data);
  const int terms = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms));
  const std::size_t ng = data->D()->ngens();
  for (int t = 0; t < terms; ++t) {
    const long n = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * max_degree + 1)) - max_degree;
    long budget = max_degree - (n < 0 ? -n : n);
    std::vector<long> e(ng, 0);
    for (std::size_t k = 0; k < ng && budget > 0; ++k) {
      e[k] = static_cast<long>(rng() % static_cast<std::uint64_t>(budget + 1));
      budget -= e[k];
    }
    r = r + GWAElement(data, data->D()->monomial(e, pool_coefficient(rng)), n);
  }
  return r;
}

// ---------------------------------------------------------------- ambiskew

QCElement extend(const QCElement& d, const QCAlgebra::Ptr& bigger) {
  QCElement out(bigger);
  for (const auto& [e, c] : d.terms()) {
    std::vector<long> f = e;
    f.resize(bigger->ngens(), 0);
    out.add_term(f, c);
  }
  return out;
}

namespace {

QCAlgebra::Ptr adjoin(const QCAlgebra& D, const std::string& var) {
  if (D.index_of(var)) throw std::invalid_argument("base ring already has a generator named " + var);
  std::vector<std::string> names;
  std::vector<bool> inv;
  for (std::size_t k = 0; k < D.ngens(); ++k) {
    names.push_back(D.generator(k));
    inv.push_back(D.invertible(k));
  }
  names.push_back(var);
  inv.push_back(false);
  const std::size_t n = names.size();
  return QCAlgebra::make(D.name() + "[" + var + "]", names, inv, std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
}

std::vector<QCElement> extend_all(const std::vector<QCElement>& v, const QCAlgebra::Ptr& bigger) {
  std::vector<QCElement> out;
  for (const auto& d : v) out.push_back(extend(d, bigger));
  return out;
}

std::optional<QCElement> solve_alpha(const AmbiskewData& e) {
  using Vec = SparseVec<std::vector<long>, ExponentLess>;
  std::vector<QCElement> monos;
  std::vector<Vec> images;
  for (const auto& [exp, c] : e.b.terms()) {
    const QCElement m = e.D->monomial(exp);
    const QCElement v = e.rho * m - substitute(m, e.sigma);
    monos.push_back(m);
    images.emplace_back(v.terms().begin(), v.terms().end());
  }
  const QCElement nb = -e.b;
  images.emplace_back(nb.terms().begin(), nb.terms().end());
  const std::size_t last = images.size() - 1;
  for (const auto& k : kernel(images)) {
    auto it = k.find(last);
    if (it == k.end()) continue;
    QCElement alpha(e.D);
    for (const auto& [i, c] : k)
      if (i != last) alpha = alpha + (c / it->second) * monos[i];
    return alpha;
  }
  return std::nullopt;
}

}  // namespace

AmbiskewResult ambiskew_to_gwa(const AmbiskewData& e) {
  require_commutative(*e.D);
  AmbiskewResult res;
  res.report.title = "ambiskew ring over " + e.D->name();
  const auto rho_inv = QCElement::invert(e.rho);
  res.report.add("rho is invertible", rho_inv.has_value(), e.rho.to_string());
  res.report.add("sigma(rho) = rho", substitute(e.rho, e.sigma) == e.rho);
  if (!rho_inv) throw std::invalid_argument("rho must be invertible");

  // Form (1): a = H, sigma(H) = rho H + b, sigma^-1(H) = rho^-1 (H - sigma^-1(b)).
  const auto DH = adjoin(*e.D, "H");
  const QCElement H = DH->gen(DH->ngens() - 1);
  auto s1 = extend_all(e.sigma, DH), s1i = extend_all(e.sigma_inv, DH);
  s1.push_back(extend(e.rho, DH) * H + extend(e.b, DH));
  s1i.push_back(extend(*rho_inv, DH) * (H - extend(substitute(e.b, e.sigma_inv), DH)));
  res.form1 = GWAData::make(DH, s1, s1i, H);
  {
    const auto x = GWAElement::v(res.form1, 1), y = GWAElement::v(res.form1, -1);
    const GWAElement rho(res.form1, extend(e.rho, DH)), b(res.form1, extend(e.b, DH));
    res.report.add("form (1): XY - rho YX = b", x * y - rho * (y * x) == b);
  }

  res.alpha = solve_alpha(e);
  res.report.add("alpha with rho alpha - sigma(alpha) = b",
                 res.alpha && e.rho * *res.alpha - substitute(*res.alpha, e.sigma) == e.b,
                 res.alpha ? res.alpha->to_string() : "no solution supported on the monomials of b");
  if (!res.alpha) return res;
  const QCElement& alpha = *res.alpha;
  const QCElement s_alpha = substitute(alpha, e.sigma);

  {
    // C = rho(YX + alpha) inside form (1).
    const auto& g = res.form1;
    const auto x = GWAElement::v(g, 1), y = GWAElement::v(g, -1);
    const GWAElement rho(g, extend(e.rho, DH)), rho_i(g, extend(*rho_inv, DH));
    const GWAElement C = rho * (y * x + GWAElement(g, extend(alpha, DH)));
    res.report.add("form (1): rho(YX + alpha) = XY + sigma(alpha)", C == x * y + GWAElement(g, extend(s_alpha, DH)));
    res.report.add("form (1): XC = rho CX", x * C == rho * C * x);
    res.report.add("form (1): YC = rho^-1 CY", y * C == rho_i * C * y);
  }

  // Form (3): a = rho^-1 C - alpha, sigma(C) = rho C.
  const auto DC = adjoin(*e.D, "C");
  const QCElement C = DC->gen(DC->ngens() - 1);
  auto s3 = extend_all(e.sigma, DC), s3i = extend_all(e.sigma_inv, DC);
  s3.push_back(extend(e.rho, DC) * C);
  s3i.push_back(extend(*rho_inv, DC) * C);
  res.form3 = GWAData::make(DC, s3, s3i, extend(*rho_inv, DC) * C - extend(alpha, DC));
  {
    const auto& g = res.form3;
    const auto x = GWAElement::v(g, 1), y = GWAElement::v(g, -1);
    const GWAElement rho(g, extend(e.rho, DC)), Cg(g, C);
    res.report.add("form (3): C = rho(YX + alpha)", Cg == rho * (y * x + GWAElement(g, extend(alpha, DC))));
    res.report.add("form (3): C = XY + sigma(alpha)", Cg == x * y + GWAElement(g, extend(s_alpha, DC)));
    res.report.add("form (3): XY - rho YX = b", x * y - rho * (y * x) == GWAElement(g, extend(e.b, DC)));
  }
  return res;
}

// ---------------------------------------------------------------- E inside A

AmbiskewData e_ambiskew() {
  const auto D = QCAlgebra::make("K[X]", {"X"}, {false}, {{0}});
  const Scalar q = Scalar::q();
  return AmbiskewData{D, {q * D->gen(0)}, {q.inverse() * D->gen(0)}, D->gen(0), D->constant(q.inverse())};
}

GWAData::Ptr e_gwa() {
  const auto D = QCAlgebra::make("K[X,phi]", {"X", "phi"}, {false, false}, {{0, 0}, {0, 0}});
  const Scalar c = (Scalar::q_power(-1) - Scalar::q()).inverse();
  return GWAData::diagonal(D, {1, -1}, c * (D->gen(1) - D->gen(0)));
}

AlgebraElement GWAToA::operator()(const QCElement& d) const {
  AlgebraElement out;
  for (const auto& [e, c] : d.terms()) {
    AlgebraElement t(c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] >= 0) {
        t = t * d_images[k].pow(e[k]);
      } else {
        auto inv = AlgebraElement::invert(d_images[k]);
        if (!inv) throw std::invalid_argument("image of an invertible generator is not invertible");
        t = t * inv->pow(-e[k]);
      }
    }
    out += t;
  }
  return out;
}

AlgebraElement GWAToA::operator()(const GWAElement& x) const {
  AlgebraElement out;
  for (const auto& [n, d] : x.components()) out += (*this)(d) * (n >= 0 ? v1.pow(n) : vm1.pow(-n));
  return out;
}

GWAToA e_structure_map() {
  return GWAToA{e_gwa(), {AlgebraElement::X(), phi()}, AlgebraElement::E(), AlgebraElement::Y()};
}

Report iso_E_check(long n, int trials, std::uint64_t seed) {
  Report r;
  r.title = "E as a GWA over K[X, phi]";
  const GWAToA F = e_structure_map();
  const auto& g = F.data;
  const auto x = GWAElement::v(g, 1), y = GWAElement::v(g, -1);
  const AlgebraElement X = AlgebraElement::X(), Y = AlgebraElement::Y(), E = AlgebraElement::E();
  const Scalar c = (Scalar::q_power(-1) - Scalar::q()).inverse();
  r.add("Phi(v_1 v_-1) = EY", F(x * y) == E * Y);
  r.add("EY = (q^-1 phi - qX)/(q^-1 - q)", E * Y == c * (Scalar::q_power(-1) * phi() - Scalar::q() * X));
  r.add("Phi(v_-1 v_1) = YE = (phi - X)/(q^-1 - q)", F(y * x) == Y * E && Y * E == c * (phi() - X));
  r.add("Phi(v_0) = 1", F(GWAElement::v(g, 0)) == AlgebraElement(Scalar(1)));
  r.add("X and phi commute in A", X * phi() == phi() * X);
  std::mt19937_64 rng(seed);
  int bad = 0;
  std::string first;
  for (int t = 0; t < trials; ++t) {
    const GWAElement u = random_gwa(g, rng, n), w = random_gwa(g, rng, n);
    if (F(u * w) != F(u) * F(w)) {
      if (bad++ == 0) first = u.to_string() + " ; " + w.to_string();
    }
  }
  r.add("Phi(uw) = Phi(u) Phi(w) on " + std::to_string(trials) + " random pairs", bad == 0, first);
  return r;
}

Report gwa_law_check(const GWAData::Ptr& data, int trials, long bound, std::uint64_t seed) {
  Report r;
  r.title = "GWA laws over " + data->D()->name();
  const auto x = GWAElement::v(data, 1), y = GWAElement::v(data, -1);
  r.add("YX = a", y * x == GWAElement(data, data->a()));
  r.add("XY = sigma(a)", x * y == GWAElement(data, data->apply_sigma(data->a(), 1)));
  bool comm = true;
  for (std::size_t k = 0; k < data->D()->ngens(); ++k) {
    const GWAElement d(data, data->D()->gen(k));
    comm = comm && x * d == GWAElement(data, data->sigma()[k]) * x && y * d == GWAElement(data, data->sigma_inv()[k]) * y;
  }
  r.add("X d = sigma(d) X and Y d = sigma^-1(d) Y on generators", comm);
  std::mt19937_64 rng(seed);
  int assoc_bad = 0, step_bad = 0;
  for (int t = 0; t < trials; ++t) {
    const GWAElement u = random_gwa(data, rng, 3), v = random_gwa(data, rng, 3), w = random_gwa(data, rng, 3);
    if ((u * v) * w != u * (v * w)) ++assoc_bad;
    if (u * v != gwa_mul_stepwise(u, v)) ++step_bad;
  }
  r.add("associativity on " + std::to_string(trials) + " random triples", assoc_bad == 0,
        std::to_string(assoc_bad) + " failures");
  r.add("closed product formula agrees with stepwise multiplication", step_bad == 0,
        std::to_string(step_bad) + " failures");
  bool brackets = true;
  std::string detail;
  for (long n = -bound; n <= bound; ++n)
    for (long m = -bound; m <= bound; ++m)
      if (data->right_coefficient(n, m) != data->apply_sigma(data->left_coefficient(n, m), -n - m)) {
        if (brackets) detail = "n=" + std::to_string(n) + " m=" + std::to_string(m);
        brackets = false;
      }
  r.add("<n,m> = sigma^{-n-m}((n,m)) for |n|,|m| <= " + std::to_string(bound), brackets, detail);
  return r;
}

}  // namespace qsa
