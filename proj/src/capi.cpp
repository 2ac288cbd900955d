#include "qsa/qsa.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "qsa/automorphisms.hpp"
#include "qsa/expr.hpp"
#include "qsa/gwa.hpp"
#include "qsa/modules.hpp"
#include "qsa/presented.hpp"
#include "qsa/spectrum.hpp"
#include "qsa/suites.hpp"

using namespace qsa;

struct qsa_element {
  std::optional<QuotientMap> map;  // absent: element of A
  std::variant<AlgebraElement, QCElement> value;
};

struct qsa_aut {
  Aut value;
};

struct qsa_module {
  std::shared_ptr<const Module> value;
};

struct qsa_report {
  std::vector<Report> reports;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_column = 0;

struct NullArgument {};

template <class T>
T& deref(T* p) {
  if (p == nullptr) throw NullArgument{};
  return *p;
}

std::string text_arg(const char* p) {
  if (p == nullptr) throw NullArgument{};
  return p;
}

template <class F>
qsa_status guarded(F&& f) {
  last_error.clear();
  last_column = 0;
  try {
    f();
    return QSA_OK;
  } catch (const ParseError& e) {
    last_error = e.message();
    last_column = e.column();
    switch (e.kind()) {
      case ParseError::Kind::Syntax: return QSA_ERR_SYNTAX;
      case ParseError::Kind::UnknownSymbol: return QSA_ERR_UNKNOWN_SYMBOL;
      case ParseError::Kind::Domain: return QSA_ERR_DOMAIN;
    }
    return QSA_ERR_SYNTAX;
  } catch (const NullArgument&) {
    last_error = "null pointer argument";
    return QSA_ERR_NULL_POINTER;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return QSA_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    last_error = e.what();
    return QSA_ERR_DOMAIN;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QSA_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return QSA_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::optional<QuotientMap> algebra(const char* name) {
  if (name == nullptr || std::strcmp(name, "A") == 0) return std::nullopt;
  return presets::by_name(name);
}

std::string element_string(const qsa_element& x) {
  return std::visit([](const auto& v) { return v.to_string(); }, x.value);
}

nlohmann::json element_json(const qsa_element& x) {
  nlohmann::json j;
  j["text"] = element_string(x);
  if (const auto* a = std::get_if<AlgebraElement>(&x.value)) {
    j["algebra"] = "A";
    j["terms"] = a->to_json();
    return j;
  }
  const auto& r = std::get<QCElement>(x.value);
  j["algebra"] = x.map->name;
  j["generators"] = nlohmann::json::array();
  for (std::size_t k = 0; k < r.parent()->ngens(); ++k) j["generators"].push_back(r.parent()->generator(k));
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : r.terms()) terms.push_back({{"exponents", e}, {"coefficient", c.to_string()}});
  j["terms"] = terms;
  return j;
}

void require_same_algebra(const qsa_element& x, const qsa_element& y) {
  if (x.value.index() != y.value.index() || (x.map.has_value() && x.map->name != y.map->name))
    throw std::invalid_argument("elements of different algebras");
}

// y written over x's copy of the factor algebra.
QCElement same_parent(const qsa_element& x, const qsa_element& y) {
  const auto& a = std::get<QCElement>(x.value);
  const auto& b = std::get<QCElement>(y.value);
  if (a.parent() == b.parent()) return b;
  return parse_in(*x.map, b.to_string());
}

template <class Op>
qsa_status binary(const qsa_element* a, const qsa_element* b, qsa_element** out, Op op) {
  return guarded([&] {
    const auto& x = deref(a);
    const auto& y = deref(b);
    auto& slot = deref(out);
    require_same_algebra(x, y);
    qsa_element r{x.map, x.value};
    if (const auto* u = std::get_if<AlgebraElement>(&x.value))
      r.value = op(*u, std::get<AlgebraElement>(y.value));
    else
      r.value = op(std::get<QCElement>(x.value), same_parent(x, y));
    slot = new qsa_element(std::move(r));
  });
}

nlohmann::json report_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"title", r.title}, {"passed", r.all_passed()}, {"checks", checks}};
}

}  // namespace

extern "C" {

const char* qsa_version(void) { return "0.1.0"; }

const char* qsa_status_string(qsa_status s) {
  switch (s) {
    case QSA_OK: return "ok";
    case QSA_ERR_SYNTAX: return "syntax error";
    case QSA_ERR_UNKNOWN_SYMBOL: return "unknown symbol";
    case QSA_ERR_DOMAIN: return "domain error";
    case QSA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case QSA_ERR_NULL_POINTER: return "null pointer";
    case QSA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* qsa_last_error(void) { return last_error.c_str(); }
size_t qsa_last_error_column(void) { return last_column; }
void qsa_string_free(char* s) { std::free(s); }

qsa_status qsa_element_parse(const char* text, const char* alg, qsa_element** out) {
  return guarded([&] {
    const std::string t = text_arg(text);
    auto& slot = deref(out);
    auto m = algebra(alg);
    if (m) {
      QCElement v = parse_in(*m, t);
      slot = new qsa_element{std::move(m), std::move(v)};
    } else {
      slot = new qsa_element{std::nullopt, parse_element(t)};
    }
  });
}

qsa_status qsa_element_add(const qsa_element* a, const qsa_element* b, qsa_element** out) {
  return binary(a, b, out, [](const auto& x, const auto& y) { return x + y; });
}

qsa_status qsa_element_sub(const qsa_element* a, const qsa_element* b, qsa_element** out) {
  return binary(a, b, out, [](const auto& x, const auto& y) { return x - y; });
}

qsa_status qsa_element_mul(const qsa_element* a, const qsa_element* b, qsa_element** out) {
  return binary(a, b, out, [](const auto& x, const auto& y) { return x * y; });
}

qsa_status qsa_element_equal(const qsa_element* a, const qsa_element* b, int* out) {
  return guarded([&] {
    const auto& x = deref(a);
    const auto& y = deref(b);
    require_same_algebra(x, y);
    if (const auto* u = std::get_if<AlgebraElement>(&x.value))
      deref(out) = *u == std::get<AlgebraElement>(y.value);
    else
      deref(out) = std::get<QCElement>(x.value) == same_parent(x, y);
  });
}

qsa_status qsa_element_to_string(const qsa_element* x, char** out) {
  return guarded([&] { deref(out) = dup(element_string(deref(x))); });
}

qsa_status qsa_element_to_json(const qsa_element* x, char** out) {
  return guarded([&] { deref(out) = dup(element_json(deref(x)).dump()); });
}

void qsa_element_free(qsa_element* x) { delete x; }

qsa_status qsa_center(const char* alg, long deg, char** out_json) {
  return guarded([&] {
    auto& slot = deref(out_json);
    if (deg < 0) throw std::invalid_argument("degree must be >= 0");
    nlohmann::json arr = nlohmann::json::array();
    if (auto m = algebra(alg)) {
      for (const auto& z : center_basis_qc(m->target, deg)) arr.push_back(z.to_string());
    } else {
      const std::vector<AlgebraElement> gens = {AlgebraElement::K(), AlgebraElement::X(), AlgebraElement::Y(),
                                                AlgebraElement::E()};
      for (const auto& z : centralizer_basis(gens, deg)) arr.push_back(z.to_string());
    }
    slot = dup(arr.dump());
  });
}

qsa_status qsa_algebra_names(char** out) {
  return guarded([&] {
    std::string s = "A\n";
    for (const auto& n : presets::names()) s += n + "\n";
    deref(out) = dup(s);
  });
}

qsa_status qsa_aut_parse(const char* text, qsa_aut** out) {
  return guarded([&] {
    const std::string t = text_arg(text);
    deref(out) = new qsa_aut{Aut::parse(t)};
  });
}

qsa_status qsa_aut_compose(const qsa_aut* s, const qsa_aut* t, qsa_aut** out) {
  return guarded([&] { deref(out) = new qsa_aut{compose(deref(s).value, deref(t).value)}; });
}

qsa_status qsa_aut_inverse(const qsa_aut* s, qsa_aut** out) {
  return guarded([&] { deref(out) = new qsa_aut{inverse(deref(s).value)}; });
}

qsa_status qsa_aut_apply(const qsa_aut* s, const qsa_element* x, qsa_element** out) {
  return guarded([&] {
    const auto* a = std::get_if<AlgebraElement>(&deref(x).value);
    if (a == nullptr) throw std::invalid_argument("automorphisms act on elements of A");
    deref(out) = new qsa_element{std::nullopt, apply(deref(s).value, *a)};
  });
}

qsa_status qsa_aut_to_string(const qsa_aut* s, char** out) {
  return guarded([&] { deref(out) = dup(deref(s).value.to_string()); });
}

void qsa_aut_free(qsa_aut* s) { delete s; }

qsa_status qsa_module_parse(const char* text, qsa_module** out) {
  return guarded([&] {
    const std::string t = text_arg(text);
    deref(out) = new qsa_module{parse_module(t)};
  });
}

qsa_status qsa_module_name(const qsa_module* m, char** out) {
  return guarded([&] { deref(out) = dup(deref(m).value->name()); });
}

qsa_status qsa_module_act(const qsa_module* m, const char* word, const char* start, char** out) {
  return guarded([&] {
    const Module& M = *deref(m).value;
    const AlgebraElement x = parse_element(text_arg(word));
    const Label l = start == nullptr ? M.origin() : M.parse_label(start);
    deref(out) = dup(M.to_string(M.act(x, ModuleVector(l))));
  });
}

void qsa_module_free(qsa_module* m) { delete m; }

qsa_status qsa_verify(const char* suite, qsa_report** out) {
  return guarded([&] {
    const std::string s = text_arg(suite);
    deref(out) = new qsa_report{run_suite(s)};
  });
}

qsa_status qsa_gwa_check(int trials, unsigned long long seed, qsa_report** out) {
  return guarded([&] {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    deref(out) = new qsa_report{{gwa_checks(trials, trials, seed)}};
  });
}

qsa_status qsa_report_passed(const qsa_report* r, int* out) {
  return guarded([&] {
    bool ok = true;
    for (const auto& x : deref(r).reports) ok = ok && x.all_passed();
    deref(out) = ok;
  });
}

qsa_status qsa_report_to_string(const qsa_report* r, char** out) {
  return guarded([&] {
    std::string s;
    for (const auto& x : deref(r).reports) s += x.to_string();
    deref(out) = dup(s);
  });
}

qsa_status qsa_report_to_json(const qsa_report* r, char** out) {
  return guarded([&] {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : deref(r).reports) arr.push_back(report_json(x));
    deref(out) = dup(arr.dump(2));
  });
}

void qsa_report_free(qsa_report* r) { delete r; }

qsa_status qsa_spectrum_dot(char** out) {
  return guarded([&] { deref(out) = dup(hasse().dot()); });
}

qsa_status qsa_spectrum_json(char** out) {
  return guarded([&] { deref(out) = dup(hasse().to_json().dump(2)); });
}

}  // extern "C"
