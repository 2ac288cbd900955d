#include "qsa/spectrum.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "qsa/linalg.hpp"

namespace qsa {

AlgebraElement element_Z() { return qsa::phi() * AlgebraElement::Y() * AlgebraElement::K(-1); }

AlgebraElement element_C() { return AlgebraElement::X() * AlgebraElement::Y() * AlgebraElement::K(); }

namespace {

Scalar nonzero(const Scalar& s, const char* what) {
  if (s.is_zero()) throw std::invalid_argument(std::string(what) + " must be nonzero");
  return s;
}

}  // namespace

PrimeIdeal PrimeIdeal::zero() { return PrimeIdeal(PrimeKind::Zero, std::nullopt, {}, std::nullopt); }
PrimeIdeal PrimeIdeal::x() { return PrimeIdeal(PrimeKind::X, std::nullopt, {AlgebraElement::X()}, presets::A_mod_X()); }
PrimeIdeal PrimeIdeal::phi() { return PrimeIdeal(PrimeKind::Phi, std::nullopt, {qsa::phi()}, presets::A_mod_phi()); }
PrimeIdeal PrimeIdeal::y() { return PrimeIdeal(PrimeKind::Y, std::nullopt, {AlgebraElement::Y()}, presets::A_mod_Y()); }
PrimeIdeal PrimeIdeal::e() { return PrimeIdeal(PrimeKind::E, std::nullopt, {AlgebraElement::E()}, presets::A_mod_E()); }

PrimeIdeal PrimeIdeal::ye() {
  return PrimeIdeal(PrimeKind::YE, std::nullopt, {AlgebraElement::Y(), AlgebraElement::E()}, presets::A_mod_YE());
}

PrimeIdeal PrimeIdeal::p(const Scalar& kappa) {
  nonzero(kappa, "kappa");
  return PrimeIdeal(PrimeKind::P, kappa, {AlgebraElement::Y(), AlgebraElement::E(), AlgebraElement::K() - kappa},
                    presets::A_mod_P(kappa));
}

PrimeIdeal PrimeIdeal::q(const Scalar& zeta) {
  nonzero(zeta, "zeta");
  return PrimeIdeal(PrimeKind::Q, zeta, {AlgebraElement::X(), element_Z() - zeta}, presets::A_mod_X_q(zeta));
}

PrimeIdeal PrimeIdeal::r(const Scalar& zeta) {
  nonzero(zeta, "zeta");
  return PrimeIdeal(PrimeKind::R, zeta, {qsa::phi(), element_C() - zeta}, presets::A_mod_phi_r(zeta));
}

std::string PrimeIdeal::name() const {
  switch (kind_) {
    case PrimeKind::Zero: return "0";
    case PrimeKind::X: return "(X)";
    case PrimeKind::Phi: return "(phi)";
    case PrimeKind::Y: return "(Y)";
    case PrimeKind::E: return "(E)";
    case PrimeKind::YE: return "(Y, E)";
    case PrimeKind::P: return "(Y, E, K - " + param_->to_string() + ")";
    case PrimeKind::Q: return "(X, Z - " + param_->to_string() + ")";
    case PrimeKind::R: return "(phi, C - " + param_->to_string() + ")";
  }
  return "?";
}

std::string PrimeIdeal::node() const {
  switch (kind_) {
    case PrimeKind::Zero: return "zero";
    case PrimeKind::X: return "X";
    case PrimeKind::Phi: return "phi";
    case PrimeKind::Y: return "Y";
    case PrimeKind::E: return "E";
    case PrimeKind::YE: return "YE";
    case PrimeKind::P: return "P_family";
    case PrimeKind::Q: return "Q_family";
    case PrimeKind::R: return "R_family";
  }
  return "?";
}

bool contains(const PrimeIdeal& I, const AlgebraElement& x) {
  if (!I.map()) return x.is_zero();
  return project(*I.map(), x).is_zero();
}

bool leq(const PrimeIdeal& I, const PrimeIdeal& J) {
  for (const auto& g : I.generators())
    if (!contains(J, g)) return false;
  return true;
}

Classification classify(const PrimeIdeal& I) {
  Classification c;
  switch (I.kind()) {
    case PrimeKind::P:
    case PrimeKind::Q:
    case PrimeKind::R:
      c.maximal = true;
      c.primitive = true;
      break;
    case PrimeKind::Y:
    case PrimeKind::E:
    case PrimeKind::Zero:
      c.primitive = true;
      break;
    default:
      break;
  }
  c.completely_prime = true;
  return c;
}

std::vector<PrimeIdeal> representatives(const Scalar& kappa, const Scalar& zeta) {
  return {PrimeIdeal::zero(), PrimeIdeal::x(), PrimeIdeal::phi(),   PrimeIdeal::y(),      PrimeIdeal::e(),
          PrimeIdeal::ye(),   PrimeIdeal::p(kappa), PrimeIdeal::q(zeta), PrimeIdeal::r(zeta)};
}

HasseDiagram hasse() {
  const auto reps = representatives();
  const std::size_t n = reps.size();
  HasseDiagram h;
  for (const auto& r : reps) h.nodes.push_back(r.node());
  h.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h.leq[i][j] = leq(reps[i], reps[j]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !h.leq[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && h.leq[i][k] && h.leq[k][j] && !h.leq[k][i] && !h.leq[j][k]) cover = false;
      if (cover) h.covers.emplace_back(i, j);
    }
  }
  return h;
}

std::string HasseDiagram::dot() const {
  std::ostringstream os;
  os << "digraph Spec {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (const auto& n : nodes) os << "  " << n << ";\n";
  for (const auto& [lo, hi] : covers) os << "  " << nodes[lo] << " -> " << nodes[hi] << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json HasseDiagram::to_json() const {
  nlohmann::json j;
  j["nodes"] = nodes;
  nlohmann::json adj = nlohmann::json::object();
  for (const auto& n : nodes) adj[n] = nlohmann::json::array();
  for (const auto& [lo, hi] : covers) adj[nodes[lo]].push_back(nodes[hi]);
  j["covers"] = adj;
  j["leq"] = leq;
  return j;
}

// ---------------------------------------------------------------- slices

struct IdealSlice::Impl {
  Echelon<PbwMonomial> ech{false};
};

IdealSlice::IdealSlice(const std::vector<AlgebraElement>& gens, long n) : n_(n) {
  auto impl = std::make_shared<Impl>();
  std::vector<std::vector<PbwMonomial>> by_degree(static_cast<std::size_t>(std::max<long>(n, 0) + 1));
  for (const auto& m : filtration_basis(n)) by_degree[static_cast<std::size_t>(m.degree())].push_back(m);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const long room = n - g.degree();
    if (room < 0) continue;
    for (long d1 = 0; d1 <= room; ++d1) {
      for (const auto& m1 : by_degree[static_cast<std::size_t>(d1)]) {
        const AlgebraElement left = AlgebraElement(m1) * g;
        for (long d2 = 0; d1 + d2 <= room; ++d2) {
          for (const auto& m2 : by_degree[static_cast<std::size_t>(d2)]) {
            const AlgebraElement p = left * AlgebraElement(m2);
            impl->ech.insert(SparseVec<PbwMonomial>(p.terms().begin(), p.terms().end()));
          }
        }
      }
    }
  }
  impl_ = std::move(impl);
}

Membership IdealSlice::test(const AlgebraElement& x) const {
  if (x.is_zero()) return Membership::Yes;
  return impl_->ech.contains(SparseVec<PbwMonomial>(x.terms().begin(), x.terms().end())) ? Membership::Yes
                                                                                         : Membership::Unknown;
}

std::size_t IdealSlice::dimension() const { return impl_->ech.rank(); }

Membership member_bounded(const std::vector<AlgebraElement>& gens, const AlgebraElement& x, long n) {
  return IdealSlice(gens, n).test(x);
}

}  // namespace qsa
