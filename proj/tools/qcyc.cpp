// qcyc: command-line front end.
//
// Exit codes: 0 success / true, 1 false / inconclusive, 2 usage error,
// 3 internal contract violation.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcyc/acceptance.hpp"
#include "qcyc/cartan.hpp"
#include "qcyc/criteria.hpp"
#include "qcyc/intertwiner.hpp"
#include "qcyc/linalg/elim.hpp"
#include "qcyc/parse.hpp"
#include "qcyc/qchar.hpp"
#include "qcyc/sl2/engine.hpp"

using nlohmann::json;
using namespace qcyc;

namespace {

struct Output {
  bool as_json = false;
  std::string path;
  json doc;
  std::ostringstream text;
  int code = 0;

  void flush() {
    std::string s;
    if (as_json) {
      doc["schema"] = 1;
      s = doc.dump(2) + "\n";
    } else {
      s = text.str();
    }
    if (path.empty()) {
      std::cout << s;
    } else {
      std::ofstream f(path);
      if (!f) throw std::runtime_error("cannot write " + path);
      f << s;
    }
  }
};

json weight_json(const Weight& w) { return json(w); }

std::string fundamental_str(const Fundamental& f) {
  std::string s;
  if (f.a.orbit != "c") s += f.a.orbit + "@";
  s += std::to_string(f.i) + ";" + std::to_string(f.a.l);
  if (f.a.k) s += ";" + std::to_string(f.a.k);
  return s;
}

json list_json(const FundamentalList& fl) {
  json a = json::array();
  for (const auto& f : fl) a.push_back(fundamental_str(f));
  return a;
}

std::vector<Monomial> parse_all(const std::vector<std::string>& ss) {
  std::vector<Monomial> out;
  for (const auto& s : ss) out.push_back(parse_monomial(s));
  return out;
}

json verdict_json(const CyclicVerdict& v) {
  json pairs = json::array();
  for (const auto& p : v.pairs) pairs.push_back({{"i", p.i + 1}, {"j", p.j + 1}, {"oracle", p.oracle}, {"result", p.result}});
  return {{"status", to_string(v.status)}, {"pairs", pairs}};
}

std::string matrix_rank_line(const char* what, std::size_t r, std::size_t n) {
  return std::string(what) + ": rank " + std::to_string(r) + " of " + std::to_string(n) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclicity of tensor products for quantum affine algebras: monomials, q-characters, sl2 modules and intertwiners"};
  app.require_subcommand(1);
  Output out;
  std::uint64_t seed = 20240611;
  bool serial = false;
  app.add_flag("--json", out.as_json, "Machine-readable output");
  app.add_option("--out", out.path, "Write output to a file");
  app.add_option("--seed", seed, "Seed for randomized checks");
  app.add_flag("--serial", serial, "Use the serial kernels instead of OpenMP");

  std::string type_s = "A1~1", mono_s, mono2_s;
  int node = 1;
  long ell = 0, L = 0;
  int k_eps = 0;
  std::vector<std::string> monos, funds;
  std::vector<long> fundamental;
  bool use_oracle = false;
  int example = 1;
  long l1 = 0, l2 = 2, l3 = 4;

  auto* c_cartan = app.add_subcommand("cartan", "Cartan data of an affine type (e.g. A1~1, B3~1, A2~2, D4~3)");
  c_cartan->add_option("type", type_s)->required();
  auto* c_amon = app.add_subcommand("amonomial", "The monomial A_{i,a}");
  c_amon->add_option("type", type_s)->required();
  c_amon->add_option("i", node)->required();
  c_amon->add_option("l", ell)->required();
  c_amon->add_option("k", k_eps);
  auto* c_qchar = app.add_subcommand("qchar", "q-character of an sl2 simple, or of a fundamental with --fundamental");
  c_qchar->add_option("monomial", mono_s);
  c_qchar->add_option("--fundamental", fundamental, "i l")->expected(2);
  c_qchar->add_option("--type", type_s, "Affine type for --fundamental");
  auto* c_trunc = app.add_subcommand("truncate", "(m^{>=L}, m^{<=L-1})");
  c_trunc->add_option("monomial", mono_s)->required();
  c_trunc->add_option("L", L)->required();
  auto* c_split = app.add_subcommand("split", "(M+, M-) = (M^{>=1}, M^{<=0})");
  c_split->add_option("monomial", mono_s)->required();
  auto* c_fact = app.add_subcommand("factorize", "Orbit factorization");
  c_fact->add_option("monomial", mono_s)->required();
  auto* c_order = app.add_subcommand("order", "Admissible factorization into fundamentals");
  c_order->add_option("monomial", mono_s)->required();
  c_order->add_option("--type", type_s);
  auto* c_check = app.add_subcommand("check-order", "Ordering condition; arguments i;l[;k], first = rightmost factor");
  c_check->add_option("fundamentals", funds)->required();
  c_check->add_option("--type", type_s);
  auto* c_pair = app.add_subcommand("pairwise", "Sufficient condition for L(m) (x) L(m2) to be cyclic");
  c_pair->add_option("m", mono_s)->required();
  c_pair->add_option("m2", mono2_s)->required();
  c_pair->add_option("--type", type_s);
  auto* c_main = app.add_subcommand("maincyc", "Pairwise to global cyclicity of L(m_1) (x) ... (x) L(m_N)");
  c_main->add_option("monomials", monos)->required();
  c_main->add_flag("--oracle", use_oracle, "Decide pairs with the sl2 cyclic-span oracle");
  c_main->add_option("--type", type_s);
  auto* c_orc = app.add_subcommand("oracle-cyclic", "Cyclic-span oracle on L(m_1) (x) ... (x) L(m_N) (sl2)");
  c_orc->add_option("monomials", monos)->required();
  auto* c_simple = app.add_subcommand("simple", "Dimension and weights of the sl2 simple L(M)");
  c_simple->add_option("monomial", mono_s)->required();
  auto* c_int = app.add_subcommand("intertwine", "T_{L(m),L(m2)}(z): ranks at z = 1 and pole report");
  c_int->add_option("m", mono_s)->required();
  c_int->add_option("m2", mono2_s)->required();
  auto* c_hex = app.add_subcommand("hexagon", "Hexagon identity for V(q^l1), V(q^l2), V(q^l3)");
  c_hex->add_option("l1", l1)->required();
  c_hex->add_option("l2", l2)->required();
  c_hex->add_option("l3", l3)->required();
  auto* c_ex = app.add_subcommand("examples", "Reproduce worked example 1, 2 or 3");
  c_ex->add_option("n", example)->required()->check(CLI::Range(1, 3));
  auto* c_self = app.add_subcommand("selftest", "Run the acceptance suite");
  std::vector<int> only;
  c_self->add_option("--only", only, "Criterion ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const Backend backend = serial ? Backend::Serial : Backend::OpenMP;

  try {
    json& J = out.doc;
    std::ostringstream& T = out.text;
    if (*c_cartan) {
      const CartanData cd = build_cartan(type_s);
      J["command"] = "cartan";
      J["type"] = cd.type.name();
      J["C"] = cd.C;
      std::vector<std::string> r;
      for (const auto& x : cd.r) r.push_back(x.get_str());
      J["r"] = r;
      J["mu"] = cd.mu;
      J["d"] = cd.d;
      J["twist_order"] = cd.twist_order;
      T << "type " << cd.type.name() << "\nC =\n";
      for (const auto& row : cd.C) {
        for (int x : row) T << ' ' << (x >= 0 ? " " : "") << x;
        T << '\n';
      }
      T << "r  =";
      for (const auto& x : r) T << ' ' << x;
      T << "\nmu =";
      for (int x : cd.mu) T << ' ' << x;
      T << "\nd  =";
      for (int x : cd.d) T << ' ' << x;
      T << "\ntwist order " << cd.twist_order << '\n';
    } else if (*c_amon) {
      const CartanData cd = build_cartan(type_s);
      const Monomial A = a_monomial(cd, node, SpectralParam(ell, k_eps));
      J["command"] = "amonomial";
      J["A"] = A.str();
      J["weight"] = weight_json(weight_of(A, cd));
      T << A.str() << '\n';
    } else if (*c_qchar) {
      QCharacter chi;
      if (!fundamental.empty()) {
        const CartanData cd = build_cartan(type_s);
        chi = fm_fundamental(cd, static_cast<int>(fundamental[0]), SpectralParam(fundamental[1]));
      } else {
        if (mono_s.empty()) throw std::invalid_argument("qchar: give a monomial or --fundamental i l");
        chi = sl2_simple_qchar(parse_monomial(mono_s));
      }
      J["command"] = "qchar";
      J["qchar"] = chi.str();
      J["dimension"] = chi.dimension();
      T << chi.str() << '\n';
    } else if (*c_trunc) {
      const auto [hi, lo] = truncate(parse_monomial(mono_s), L);
      J["command"] = "truncate";
      J["upper"] = hi.str();
      J["lower"] = lo.str();
      T << hi.str() << '\n' << lo.str() << '\n';
    } else if (*c_split) {
      const auto [p, m] = plus_minus_split(parse_monomial(mono_s));
      J["command"] = "split";
      J["plus"] = p.str();
      J["minus"] = m.str();
      T << "M+ = " << p.str() << "\nM- = " << m.str() << '\n';
    } else if (*c_fact) {
      J["command"] = "factorize";
      J["orbits"] = json::object();
      for (const auto& [o, m] : orbit_factorize(parse_monomial(mono_s))) {
        J["orbits"][o] = m.str();
        T << o << ": " << m.str() << '\n';
      }
    } else if (*c_order) {
      const FundamentalList fl = admissible_factorization(parse_monomial(mono_s), build_cartan(type_s));
      J["command"] = "order";
      J["list"] = list_json(fl);
      for (const auto& f : fl) T << fundamental_str(f) << '\n';
    } else if (*c_check) {
      FundamentalList fl;
      for (const auto& s : funds) fl.push_back(parse_fundamental(s));
      const bool ok = fundamental_order_ok(fl, build_cartan(type_s));
      J["command"] = "check-order";
      J["ok"] = ok;
      T << (ok ? "true" : "false") << '\n';
      out.code = ok ? 0 : 1;
    } else if (*c_pair) {
      const bool ok = pairwise_cyclic_sufficient(parse_monomial(mono_s), parse_monomial(mono2_s), build_cartan(type_s));
      J["command"] = "pairwise";
      J["sufficient"] = ok;
      T << (ok ? "true" : "false") << '\n';
      out.code = ok ? 0 : 1;
    } else if (*c_main) {
      const CartanData cd = build_cartan(type_s);
      const auto ms = parse_all(monos);
      CyclicVerdict v;
      if (use_oracle) {
        std::vector<Rep<QFunc>> reps;
        for (const auto& m : ms) reps.push_back(simple_module(m));
        v = maincyc_conclude(
            ms, [&](std::size_t i, std::size_t j) { return is_cyclic_certified(tensor(reps[i], reps[j])); }, "sl2-oracle", backend);
      } else {
        v = maincyc_conclude(
            ms, [&](std::size_t i, std::size_t j) { return pairwise_cyclic_sufficient(ms[i], ms[j], cd); }, "pairwise-sufficient",
            backend);
      }
      J["command"] = "maincyc";
      J["verdict"] = verdict_json(v);
      T << to_string(v.status) << '\n';
      for (const auto& p : v.pairs) T << "  (" << p.i + 1 << "," << p.j + 1 << ") " << p.oracle << ": " << (p.result ? "cyclic" : "not established") << '\n';
      out.code = v.status == Verdict::Cyclic ? 0 : 1;
    } else if (*c_orc) {
      const auto ms = parse_all(monos);
      std::vector<Rep<QFunc>> reps;
      for (const auto& m : ms) reps.push_back(simple_module(m));
      const Rep<QFunc> t = tensor_all(reps);
      const std::size_t span = cyclic_span(t, basis_vector<QFunc>(t.dim, t.hw)).dim;
      J["command"] = "oracle-cyclic";
      J["dimension"] = t.dim;
      J["span"] = span;
      J["cyclic"] = static_cast<int>(span) == t.dim;
      T << "span " << span << " of " << t.dim << (static_cast<int>(span) == t.dim ? ": cyclic\n" : ": not cyclic\n");
      out.code = static_cast<int>(span) == t.dim ? 0 : 1;
    } else if (*c_simple) {
      const Monomial M = parse_monomial(mono_s);
      const Rep<QFunc> r = simple_module(M);
      std::vector<int> w = r.wt;
      std::sort(w.rbegin(), w.rend());
      const bool rel = verify_relations(r).ok;
      J["command"] = "simple";
      J["monomial"] = M.str();
      J["dimension"] = r.dim;
      J["weights"] = w;
      J["relations"] = rel;
      T << "L(" << M.str() << "): dimension " << r.dim << "\nweights";
      for (int x : w) T << ' ' << x;
      T << "\nrelations " << (rel ? "verified" : "FAILED") << '\n';
      if (!rel) out.code = 3;
    } else if (*c_int) {
      const Monomial m = parse_monomial(mono_s), m2 = parse_monomial(mono2_s);
      const Rep<QFunc> w = simple_module(m), w2 = simple_module(m2);
      const Matrix<ZFunc> Tz = solve_T(w, w2).T;
      const auto inv = inverse(Tz, backend);
      long vt = 0, vi = 0;
      for (std::size_t i = 0; i < Tz.rows(); ++i)
        for (std::size_t j = 0; j < Tz.cols(); ++j) {
          vt = std::min(vt, valuation_at_1(Tz(i, j)));
          if (inv) vi = std::min(vi, valuation_at_1((*inv)(i, j)));
        }
      J["command"] = "intertwine";
      J["dimension"] = Tz.rows();
      J["pole_order_T"] = -vt;
      J["pole_order_T_inverse"] = -vi;
      T << "T_{L(" << m.str() << "),L(" << m2.str() << ")}(z): " << Tz.rows() << " x " << Tz.cols() << '\n';
      T << "pole order at z=1: T " << -vt << ", T^-1 " << -vi << '\n';
      if (vt >= 0) {
        const std::size_t r = rank(laurent_at_1(Tz, 0), backend);
        J["rank_I"] = r;
        J["kernel_I"] = Tz.cols() - r;
        J["simple_dimension"] = sl2_simple_qchar(m * m2).dimension();
        T << matrix_rank_line("I = T(1)", r, Tz.cols());
      }
      if (inv && vi < 0) {
        const std::size_t r = rank(laurent_at_1(*inv, vi), backend);
        J["rank_leading_inverse"] = r;
        T << matrix_rank_line("leading coefficient of T^-1", r, Tz.cols());
      }
    } else if (*c_hex) {
      const bool ok = check_hexagon(eval_module(l1), eval_module(l2), eval_module(l3));
      J["command"] = "hexagon";
      J["holds"] = ok;
      T << (ok ? "hexagon holds\n" : "hexagon FAILS\n");
      out.code = ok ? 0 : 1;
    } else if (*c_ex) {
      const ExampleReport r = example_suite(example, backend);
      json checks = json::array();
      for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}});
        T << (c.pass ? "  ok   " : "  FAIL ") << c.name << ": expected " << c.expected << ", got " << c.got << '\n';
        if (c.name == "rk_A" || c.name == "rk_Aprime" || c.name == "ker_I") J[c.name] = std::stol(c.got);
      }
      J["command"] = "examples";
      J["example"] = example;
      J["checks"] = checks;
      J["pass"] = r.pass();
      out.code = r.pass() ? 0 : 1;
    } else if (*c_self) {
      AcceptanceOptions opt;
      opt.seed = seed;
      opt.backend = backend;
      opt.only = only;
      json rs = json::array();
      bool all = true;
      for (const auto& r : run_acceptance(opt)) {
        all = all && r.pass;
        rs.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
        T << format_line(r) << '\n';
      }
      J["command"] = "selftest";
      J["criteria"] = rs;
      J["pass"] = all;
      out.code = all ? 0 : 1;
    }
    out.flush();
    return out.code;
  } catch (const ParseError& e) {
    std::cerr << "qcyc: parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qcyc: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qcyc: internal error: " << e.what() << '\n';
    return 3;
  }
}
