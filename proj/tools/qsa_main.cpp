// qsa: command line front end over the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qsa/qsa.h"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Freer {
  void operator()(char* s) const { qsa_string_free(s); }
  void operator()(qsa_element* x) const { qsa_element_free(x); }
  void operator()(qsa_aut* x) const { qsa_aut_free(x); }
  void operator()(qsa_module* x) const { qsa_module_free(x); }
  void operator()(qsa_report* x) const { qsa_report_free(x); }
};
template <class T>
using Owned = std::unique_ptr<T, Freer>;

struct Failure {
  int code;
};

void check(qsa_status s, const std::string& input = {}) {
  if (s == QSA_OK) return;
  const std::string msg = qsa_last_error();
  std::cerr << "error: " << (msg.empty() ? qsa_status_string(s) : msg.c_str());
  if (const std::size_t col = qsa_last_error_column(); col > 0) {
    std::cerr << " (column " << col << ")";
    if (!input.empty()) std::cerr << "\n  " << input << "\n  " << std::string(col - 1, ' ') << "^";
  }
  std::cerr << "\n";
  throw Failure{kUsage};
}

std::string take(char* s) {
  Owned<char> o(s);
  return s == nullptr ? std::string() : std::string(s);
}

Owned<qsa_element> parse(const std::string& text, const std::string& algebra) {
  qsa_element* x = nullptr;
  check(qsa_element_parse(text.c_str(), algebra.empty() ? nullptr : algebra.c_str(), &x), text);
  return Owned<qsa_element>(x);
}

Owned<qsa_aut> parse_aut(const std::string& text) {
  qsa_aut* a = nullptr;
  check(qsa_aut_parse(text.c_str(), &a), text);
  return Owned<qsa_aut>(a);
}

std::string show(const qsa_element* x, bool json) {
  char* s = nullptr;
  check(json ? qsa_element_to_json(x, &s) : qsa_element_to_string(x, &s));
  return take(s);
}

std::string show(const qsa_aut* a) {
  char* s = nullptr;
  check(qsa_aut_to_string(a, &s));
  return take(s);
}

int report(qsa_report* raw, bool json) {
  Owned<qsa_report> r(raw);
  char* s = nullptr;
  check(json ? qsa_report_to_json(r.get(), &s) : qsa_report_to_string(r.get(), &s));
  std::cout << take(s);
  if (json) std::cout << "\n";
  int ok = 0;
  check(qsa_report_passed(r.get(), &ok));
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the quantum spatial ageing algebra A"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qsa_version()));
  bool json = false;

  auto* normalize = app.add_subcommand("normalize", "print the normal form of an expression");
  std::string expr, in;
  normalize->add_option("expr", expr, "expression, e.g. \"E*Y - q^-1*Y*E\"")->required();
  normalize->add_option("--in", in, "algebra: A (default) or a factor algebra such as A_mod_X, A_mod_X_q(q^2)");
  normalize->add_flag("--json", json, "machine readable output");
  bool list = false;
  normalize->add_flag("--list-algebras", list, "print the accepted algebra names first");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  verify->add_option("--suite", suite, "identities|spectrum|aut|gwa|modules|all")
      ->check(CLI::IsMember({"identities", "spectrum", "aut", "gwa", "modules", "all"}));
  verify->add_flag("--json", json);

  auto* spectrum = app.add_subcommand("spectrum", "Hasse diagram of the prime spectrum");
  std::string dot_path;
  spectrum->add_option("--dot", dot_path, "write DOT to this path ('-' for stdout)");
  spectrum->add_flag("--json", json);

  auto* aut = app.add_subcommand("aut", "automorphisms aut(lambda;mu;gamma;i)");
  aut->require_subcommand(1);
  std::string s_text, t_text, x_text;
  auto* aut_apply = aut->add_subcommand("apply", "apply an automorphism to an element of A");
  aut_apply->add_option("aut", s_text)->required();
  aut_apply->add_option("expr", x_text)->required();
  aut_apply->add_flag("--json", json);
  auto* aut_compose = aut->add_subcommand("compose", "s o t");
  aut_compose->add_option("s", s_text)->required();
  aut_compose->add_option("t", t_text)->required();
  auto* aut_inverse = aut->add_subcommand("inverse", "s^-1");
  aut_inverse->add_option("aut", s_text)->required();

  auto* act = app.add_subcommand("act", "apply an element of A to a module vector");
  std::string module, word, start;
  act->add_option("--module", module, "weight(k;l), case-a(k), case-b(l), case-c(l), case-d(z;mu), case-e(z;mu)")
      ->required();
  act->add_option("--word", word, "element of A, e.g. E*Y^2")->required();
  act->add_option("--start", start, "basis label, (i,m) for weight modules, j for K^j or Y^j");

  auto* center = app.add_subcommand("center", "center in bounded degree");
  long deg = 3;
  std::string center_in = "A";
  center->add_option("--in", center_in, "algebra");
  center->add_option("--deg", deg, "degree bound")->check(CLI::Range(0L, 12L));
  center->add_flag("--json", json);

  auto* gwa = app.add_subcommand("gwa-check", "GWA laws and the isomorphism onto the subalgebra E");
  int trials = 100;
  unsigned long long seed = 1;
  gwa->add_option("--trials", trials)->check(CLI::PositiveNumber);
  gwa->add_option("--seed", seed);
  gwa->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (normalize->parsed()) {
      if (list) {
        char* s = nullptr;
        check(qsa_algebra_names(&s));
        std::cout << take(s);
      }
      std::cout << show(parse(expr, in).get(), json) << "\n";
      return kPass;
    }
    if (verify->parsed()) {
      qsa_report* r = nullptr;
      check(qsa_verify(suite.c_str(), &r));
      return report(r, json);
    }
    if (spectrum->parsed()) {
      char* s = nullptr;
      if (json) {
        check(qsa_spectrum_json(&s));
        std::cout << take(s) << "\n";
        return kPass;
      }
      check(qsa_spectrum_dot(&s));
      const std::string dot = take(s);
      if (dot_path.empty() || dot_path == "-") {
        std::cout << dot;
      } else {
        std::ofstream f(dot_path);
        if (!(f << dot)) {
          std::cerr << "error: cannot write " << dot_path << "\n";
          return kUsage;
        }
      }
      return kPass;
    }
    if (aut_apply->parsed()) {
      const auto s = parse_aut(s_text);
      const auto x = parse(x_text, "");
      qsa_element* y = nullptr;
      check(qsa_aut_apply(s.get(), x.get(), &y));
      std::cout << show(Owned<qsa_element>(y).get(), json) << "\n";
      return kPass;
    }
    if (aut_compose->parsed()) {
      qsa_aut* r = nullptr;
      check(qsa_aut_compose(parse_aut(s_text).get(), parse_aut(t_text).get(), &r));
      std::cout << show(Owned<qsa_aut>(r).get()) << "\n";
      return kPass;
    }
    if (aut_inverse->parsed()) {
      qsa_aut* r = nullptr;
      check(qsa_aut_inverse(parse_aut(s_text).get(), &r));
      std::cout << show(Owned<qsa_aut>(r).get()) << "\n";
      return kPass;
    }
    if (act->parsed()) {
      qsa_module* m = nullptr;
      check(qsa_module_parse(module.c_str(), &m), module);
      Owned<qsa_module> mod(m);
      char* s = nullptr;
      check(qsa_module_act(mod.get(), word.c_str(), start.empty() ? nullptr : start.c_str(), &s));
      std::cout << take(s) << "\n";
      return kPass;
    }
    if (center->parsed()) {
      char* s = nullptr;
      check(qsa_center(center_in.c_str(), deg, &s));
      const std::string out = take(s);
      if (json) {
        std::cout << out << "\n";
      } else {
        for (const auto& z : nlohmann::json::parse(out)) std::cout << z.get<std::string>() << "\n";
      }
      return kPass;
    }
    if (gwa->parsed()) {
      qsa_report* r = nullptr;
      check(qsa_gwa_check(trials, seed, &r));
      return report(r, json);
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kUsage;
}
