// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance <eqdc executable> <golden directory>
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>

#include "eqdc/chern/chern_weil.hpp"
#include "eqdc/chern/equivariant.hpp"
#include "eqdc/chern/instances.hpp"
#include "eqdc/chern/witness.hpp"
#include "eqdc/cli/model_file.hpp"
#include "eqdc/cli/runner.hpp"
#include "eqdc/diffcoh/cohomology.hpp"
#include "eqdc/gstar/models.hpp"
#include "eqdc/gstar/weil.hpp"
#include "json.hpp"

using namespace eqdc;
namespace fs = std::filesystem;

namespace {

std::string g_cli;
std::string g_golden;

// Collects failed checks; the first few become the detail line.
class Checks {
 public:
  void operator()(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failures_.push_back(what);
  }
  bool passed() const { return failures_.empty(); }
  std::string detail() const {
    if (passed()) return std::to_string(total_) + " checks";
    std::string out = std::to_string(failures_.size()) + "/" + std::to_string(total_) + " failed: " + failures_[0];
    if (failures_.size() > 1) out += "; " + failures_[1];
    return out;
  }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failures_;
};

Element gen(const AlgebraPtr& a, const std::string& name) { return Element::generator(a, name); }

InvariantPolynomial u_power(unsigned k) {
  RationalPoly p(1);
  p.add_term({k}, 1);
  return {"u^" + std::to_string(k), p, GaussRational(Rational(1))};
}

// ---------------------------------------------------------------------------

void c1_gstar_axioms(Checks& check) {
  for (const char* name : {"u1", "r2", "su2", "u2", "heis3"}) {
    GStarReport r = check_gstar(build_weil(builtin::lie_by_name(name)).gstar, 8);
    std::string what = std::string("W(") + name + ")";
    if (!r.ok()) what += ": " + r.violations[0].relation + " on " + r.violations[0].element;
    check(r.ok() && r.checks > 0, what);
  }
}

void c2_weil_acyclic(Checks& check) {
  WeilAlgebra w = build_weil(builtin::su2());
  for (int n = 0; n <= 6; ++n) {
    std::size_t dim = cohomology_dim(w.gstar.d, n);
    check(dim == (n == 0 ? 1u : 0u), "dim H^" + std::to_string(n) + " = " + std::to_string(dim));
  }
}

void c3_koszul_contraction(Checks& check) {
  for (const char* name : {"u1", "r2", "su2", "u2", "heis3"}) {
    WeilAlgebra w = build_weil(builtin::lie_by_name(name));
    Derivation iota_omega = contraction_sum(curvature(w.gstar, w.theta), w.gstar.iota);
    for (std::size_t i = 0; i < w.algebra()->size(); ++i) {
      check(iota_omega.image(i) == w.d_koszul.image(i),
            std::string(name) + ": generator " + w.algebra()->generator(i).name);
    }
  }
}

void c4_mathai_quillen(Checks& check) {
  std::vector<std::pair<std::string, WeilTensor>> models;
  models.emplace_back("rotation", weil_model(builtin::circle_rotation()));
  models.emplace_back("W(su2) x Lambda(x3)",
                      weil_model(builtin::trivial_model(builtin::su2(), {Generator{"x3", 3, std::nullopt, 0}})));
  for (const auto& [name, wt] : models) {
    MathaiQuillen mq(wt);
    Derivation dc = cartan_differential(wt);
    const AlgebraPtr& alg = wt.total.carrier;
    for (int n = 0; n <= 8; ++n) {
      for (const auto& m : alg->degree_basis(n)) {
        Element x = Element::monomial(alg, m);
        check(mq.forward(mq.inverse(x)) == x && mq.inverse(mq.forward(x)) == x,
              name + ": inverse on " + x.to_string());
        // multiplicativity on generator * monomial determines it on all products
        for (std::size_t i = 0; i < alg->size(); ++i) {
          Element g = Element::generator(alg, i);
          if (n + alg->generator(i).degree > 8) continue;
          check(mq.forward(g * x) == mq.forward(g) * mq.forward(x), name + ": product " + g.to_string() + " * " + x.to_string());
        }
      }
      for (const auto& x : cartan_basis(wt, n)) {
        check(mq.conjugated_d(x) == dc(x), name + ": d_C on " + x.to_string());
      }
    }
  }
}

void c5_transgression(Checks& check) {
  auto verify = [&](const LieAlgebra& g, const InvariantPolynomial& p) {
    WeilAlgebra w = build_weil(g);
    Element cs = chern_simons(p, w);
    check(w.gstar.d(cs) == w.from_polynomial(p.poly), g.name() + ": d CS_" + p.name);
  };
  LieAlgebra u1 = builtin::u1();
  verify(u1, u_power(2));
  verify(u1, u_power(3));
  LieAlgebra su2 = builtin::su2();
  verify(su2, invariant_generators(su2, 2)[0]);
  LieAlgebra u2 = builtin::u2();
  auto sigma = invariant_generators(u2, 2);
  verify(u2, sigma[0] * sigma[0]);
  verify(u2, sigma[1]);
  WeilAlgebra w = build_weil(u1);
  for (unsigned k = 1; k <= 4; ++k) {
    check(chern_simons(u_power(k), w) == w.theta_gen(0) * power(w.u_gen(0), k - 1), "CS_{u^" + std::to_string(k) + "}");
  }
}

void c6_equivariant_connection(Checks& check) {
  auto inst = builtin::rotation_instance();
  EquivariantConnection ec = equivariant_connection(inst.g, inst.k, inst.algebra, inst.theta);
  const GStarAlgebra& t = ec.total();
  const AlgebraPtr& alg = t.carrier;
  Element lambda = gen(alg, "lambda_M"), theta = gen(alg, "theta"), u = gen(alg, "u");
  check(ec.theta_G[0] == lambda - theta, "Theta_G = " + ec.theta_G[0].to_string());
  check(t.iota[0](ec.theta_G[0]).is_zero(), "g-horizontal");
  check(t.lie_derivs[0](ec.theta_G[0]).is_zero(), "g-invariant");
  check(t.iota[1](ec.theta_G[0]) == Element::scalar(alg, 1), "k-connection");
  check(ec.omega_G_cartan[0] == -u, "Cartan curvature = " + ec.omega_G_cartan[0].to_string());
  check(ec.mathai_quillen(ec.omega_G_weil[0]) == ec.omega_G_cartan[0], "exp(iota_theta) Omega_G");
  check(equivariant_connection_defects(ec).empty(), "equivariant connection checks");
  for (unsigned k = 1; k <= 3; ++k) {
    Element cs = equivariant_chern_simons(u_power(k), ec);
    check(t.d(cs) == equivariant_chern_weil(u_power(k), ec), "d_G CS_{u^" + std::to_string(k) + "}(Theta_G)");
  }
  check(t.d(equivariant_chern_simons(u_power(1), ec)) == ec.omega_G_weil[0], "d_G CS_u(Theta_G) = Omega_G");
}

void c7_pullback(Checks& check) {
  std::vector<std::pair<std::string, builtin::ConnectionInstance>> instances;
  instances.emplace_back("rotation", builtin::rotation_instance());
  instances.emplace_back("product(u1, u1)", builtin::product_instance(builtin::u1(), builtin::u1()));
  instances.emplace_back("product(su2, u1)", builtin::product_instance(builtin::su2(), builtin::u1()));
  for (const auto& [name, inst] : instances) {
    WeilAlgebra wg = build_weil(inst.g);
    PullbackConnection pc = pullback_connection(wg.gstar, wg.theta, inst.algebra, inst.theta);
    const auto& total = pc.model.total;
    const std::size_t n = total.lie.dim();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        check(total.iota[a](pc.connection.components[b]) == Element::scalar(total.carrier, a == b ? 1 : 0),
              name + ": iota_" + std::to_string(a + 1) + " Theta^" + std::to_string(b + 1));
      }
    }
    EquivariantConnection ec = equivariant_connection(inst.g, inst.k, inst.algebra, inst.theta);
    ReductionMap r = theta_g_star(ec);
    const AlgebraPtr& alg = ec.total().carrier;
    for (std::size_t i = 0; i < alg->size(); ++i) {
      Element x = Element::generator(alg, i);
      check(r.map(r.inclusion(x)) == x, name + ": Theta_G^* after inclusion on " + x.to_string());
    }
    check(reduction_defects(ec, r, 3).empty(), name + ": Theta_G^* chain map and basic-to-basic");
  }
}

void c8_witness(Checks& check) {
  LieAlgebra u1 = builtin::u1();
  LieAlgebra su2 = builtin::su2();
  std::vector<std::pair<LieAlgebra, InvariantPolynomial>> cases = {
      {u1, u_power(1)}, {u1, u_power(2)}, {su2, invariant_generators(su2, 2)[0]}};
  for (const auto& [g, w] : cases) {
    InjectivityWitness wit = weil_injectivity_witness(g, w);
    check(wit.coefficient == Rational(wit.factorial) * w.polarized(wit.indices) && wit.coefficient != 0,
          g.name() + " " + w.name + ": coefficient " + to_string(wit.coefficient));
  }
}

DiffCochain triple(int degree, IntegerVector c, RationalVector h, RationalVector w) {
  return DiffCochain{degree, degree, std::move(c), std::move(h), std::move(w)};
}

// (n alpha^k, 0, n t^k) and (0, r alpha^k, 0) on cp models
DiffCochain even(const GeometricModel& m, int k, long n = 1) {
  return triple(2 * k, {n}, RationalVector(m.rank(2 * k - 1), Rational(0)), {Rational(n)});
}
DiffCochain odd(int k, const Rational& r) { return triple(2 * k + 1, {}, {r}, {}); }

void c9_circle(Checks& check) {
  GeometricModel m = builtin::cp(8);
  for (int k = 0; k <= 3; ++k) {
    DiffCohomologyReport r = diff_cohomology(m, 2 * k);
    std::string where = "degree " + std::to_string(2 * k);
    check(r.rank() == 1 && r.flat_torsion.empty() && r.flat_divisible_rank == 0 && r.lattice_rational_rank == 0,
          where + ": " + r.summary());
    check(r.lattice_generators.size() == 1 && r.lattice_generators[0] == even(m, k), where + ": generator");
    for (const Rational& x : {Rational(0), Rational(1), Rational(-3), Rational(1, 2), Rational(2, 3), Rational(7, 5)}) {
      DiffCochain y = odd(k, x);
      check(is_cocycle(y, m) && is_coboundary(y, m) == is_integer(x),
            "degree " + std::to_string(2 * k + 1) + ", r = " + to_string(x));
    }
  }
}

void c10_finite_groups(Checks& check) {
  for (auto [name, order] : {std::pair{"rp9", 2}, std::pair{"lens3_7", 3}}) {
    GeometricModel m = builtin::model_by_name(name);
    for (int n = 2; n <= m.certified_max(); ++n) {
      DiffCohomologyReport r = diff_cohomology(m, n);
      std::vector<Integer> want = n % 2 == 0 ? std::vector<Integer>{Integer(order)} : std::vector<Integer>{};
      check(r.rank() == 0 && r.flat_torsion == want && r.flat_divisible_rank == 0 && r.lattice_rational_rank == 0,
            std::string(name) + " degree " + std::to_string(n) + ": " + r.summary());
    }
    DiffCohomologyReport r1 = diff_cohomology(m, 1);
    check(r1.rank() == 0 && r1.flat_torsion.empty() && r1.flat_divisible_rank == 1,
          std::string(name) + " degree 1: " + r1.summary());
  }
}

void c11_ring(Checks& check) {
  GeometricModel m = builtin::cp(8);
  for (int k1 = 0; k1 <= 2; ++k1) {
    for (int k2 = 0; k2 <= 2; ++k2) {
      for (long n : {1L, 3L, -2L}) {
        for (const Rational& r : {Rational(1, 2), Rational(2, 3), Rational(-7, 5)}) {
          std::string where = "k1=" + std::to_string(k1) + " k2=" + std::to_string(k2) + " n=" + std::to_string(n) +
                              " r=" + to_string(r);
          check(product(even(m, k1, n), odd(k2, r), m) == odd(k1 + k2, Rational(n) * r), where + ": even*odd");
          check(product(odd(k1, r), odd(k2, Rational(1, 3)), m) == zero_cochain(m, 2 * (k1 + k2 + 1), 2 * (k1 + k2 + 1)),
                where + ": odd*odd");
        }
        for (long n2 : {2L, -1L}) {
          DiffCochain a = even(m, k1, n), b = even(m, k2, n2);
          DiffCochain p = product(a, b, m);
          check(cc(p, m).free == std::vector<Integer>{Integer(n * n2)}, "cc multiplicative");
          check(curv(p, m) == m.wedge_product(2 * k1, curv(a, m), 2 * k2, curv(b, m)), "curv multiplicative");
        }
      }
      if (k1 == k2) {
        DiffCochain a = even(m, k1, 2), b = even(m, k1, 5);
        check(cc(a + b, m).free == std::vector<Integer>{Integer(7)}, "cc additive");
        check(curv(a + b, m) == RationalVector{Rational(7)}, "curv additive");
      }
    }
  }
  GeometricModel rp = builtin::rp(9);
  DiffCochain t2 = diff_cohomology(rp, 2).flat_torsion_generators.at(0);
  DiffCochain unit = unit_cochain(rp);
  check(cc(product(unit, t2, rp), rp) == cc(t2, rp), "rp9: unit * torsion");
  check(cc(product(t2, t2, rp), rp).torsion == std::vector<Integer>{1}, "rp9: torsion square generates H^4");
}

void c12_ses(Checks& check) {
  auto run = [&](const GeometricModel& m, int lo, int hi) {
    for (int n = lo; n <= hi; ++n) {
      SesReport rep = verify_ses(m, n);
      bool square = false;
      for (const auto& c : rep.checks) {
        check(c.passed, m.name + " degree " + std::to_string(n) + ": " + c.name + " " + c.detail);
        square = square || c.name.find("square") != std::string::npos;
      }
      check(square, m.name + " degree " + std::to_string(n) + ": square checked");
    }
  };
  run(builtin::cp(8), 2, 6);
  run(builtin::rp(9), 2, 8);
}

// --- CLI ---------------------------------------------------------------

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

std::pair<int, std::string> run_cli(const std::vector<std::string>& args) {
  std::string cmd = "cd " + quote(g_golden) + " && " + quote(g_cli);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> read_lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

void c13_cli(Checks& check) {
  std::vector<fs::path> cases;
  for (const auto& e : fs::directory_iterator(g_golden)) {
    if (e.path().extension() == ".args") cases.push_back(e.path());
  }
  std::sort(cases.begin(), cases.end());
  check(!cases.empty(), "golden corpus present");
  std::set<int> codes;
  for (const auto& c : cases) {
    std::string name = c.stem().string();
    auto args = read_lines(c);
    auto [code, out] = run_cli(args);
    int want = std::stoi(read_file(fs::path(c).replace_extension(".code")));
    codes.insert(want);
    check(code == want, name + ": exit " + std::to_string(code) + ", expected " + std::to_string(want));
    check(out == read_file(fs::path(c).replace_extension(".out")), name + ": output differs");
    if (args.front() == "print" || out.empty()) continue;
    // exit-code contract: the report states the same outcome
    auto j = nlohmann::json::parse(out);
    const char* status = code == 0 ? "ok" : code == 1 ? "failed" : "error";
    check(j["schema"] == cli::kSchema && j["exit_code"] == code && j["status"] == status, name + ": report status");
  }
  check(codes == std::set<int>{0, 1, 2}, "corpus covers exit codes 0, 1 and 2");

  // determinism
  for (const char* model : {"rotation", "rp9", "su2"}) {
    check(run_cli({"run", model}).second == run_cli({"run", model}).second, std::string(model) + ": repeated run");
  }

  // round trip on shipped models
  for (const auto& e : fs::directory_iterator(fs::path(cli::data_dir()) / "models")) {
    std::string text = read_file(e.path());
    cli::ModelFile f = cli::parse_model_text(text, e.path().filename().string());
    std::string printed = cli::print_model(f);
    check(printed == text, e.path().filename().string() + ": print(parse) is the identity");
    check(cli::same_model(cli::parse_model_text(printed, "again"), f),
          e.path().filename().string() + ": reparse gives the same objects");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <eqdc executable> <golden directory>\n";
    return 2;
  }
  g_cli = fs::absolute(argv[1]).string();
  g_golden = fs::absolute(argv[2]).string();

  const std::vector<std::pair<std::string, std::function<void(Checks&)>>> criteria = {
      {"G* axioms on W(g) through degree 8", c1_gstar_axioms},
      {"Weil algebra of su(2) is acyclic through degree 6", c2_weil_acyclic},
      {"Koszul differential is contraction with the curvature", c3_koszul_contraction},
      {"Mathai-Quillen automorphism and Cartan differential", c4_mathai_quillen},
      {"Transgression d_W CS = w", c5_transgression},
      {"Equivariant connection on the rotation instance", c6_equivariant_connection},
      {"Pullback connection and Theta_G^*", c7_pullback},
      {"Injectivity witness", c8_witness},
      {"Differential cohomology of the circle (cp8)", c9_circle},
      {"Differential cohomology of finite groups (rp9, lens3_7)", c10_finite_groups},
      {"Ring structure, cc and curv", c11_ring},
      {"Short exact sequences and the square", c12_ses},
      {"CLI golden corpus, round trip and exit codes", c13_cli},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checks check;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    if (!check.passed()) ++failed;
    std::cout << (check.passed() ? "PASS" : "FAIL") << " " << (i < 9 ? " " : "") << i + 1 << " "
              << criteria[i].first << " (" << check.detail() << ")" << std::endl;
  }
  std::cout << (criteria.size() - std::size_t(failed)) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
