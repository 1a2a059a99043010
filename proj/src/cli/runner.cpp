#include "eqdc/cli/runner.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "eqdc/chern/chern_weil.hpp"
#include "eqdc/chern/equivariant.hpp"
#include "eqdc/chern/witness.hpp"
#include "eqdc/cli/model_file.hpp"
#include "eqdc/diffcoh/cohomology.hpp"
#include "eqdc/error.hpp"
#include "json.hpp"

namespace eqdc::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error("UsageError", what) {}
};

struct Report {
  json result = json::object();
  bool failed = false;
  std::string summary;
};

const std::set<std::string> kVerificationKinds = {"NotAConnection",   "NotInvariant",     "ModelInvariantViolation",
                                                  "InvalidLieAlgebra", "NotAHomomorphism", "CompositionNonzero",
                                                  "NotACocycle",       "NeedsHomotopyData"};

std::vector<std::string> strings(const std::vector<Element>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(e.to_string());
  return out;
}

std::string power_group(const std::string& g, std::size_t k) {
  if (k == 1) return g;
  return (g.size() > 1 ? "(" + g + ")" : g) + "^" + std::to_string(k);
}

int parse_int(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 6) {
    throw UsageError(what + " expects a non-negative integer, found '" + text + "'");
  }
  return std::stoi(text);
}

// --- model access -------------------------------------------------------

const LieAlgebra& need_lie(const ModelFile& f) {
  if (!f.lie) throw UsageError(f.source + " has no [lie] section");
  return *f.lie;
}

GStarAlgebra need_gstar(const ModelFile& f) {
  if (f.gstar) return *f.gstar;
  return build_weil(need_lie(f)).gstar;
}

const GeometricModel& need_model(const ModelFile& f) {
  if (!f.model) throw UsageError(f.source + " has no [model] section");
  return *f.model;
}

InvariantPolynomial need_poly(const Options& o, const LieAlgebra& g) {
  if (o.poly.empty()) throw UsageError("this command needs --poly");
  RationalPoly p = parse_polynomial(o.poly, coordinate_names(g), {"--poly", 1, 1});
  return {"w", p};
}

std::pair<int, int> degree_range(const Options& o, const GeometricModel& m) {
  if (o.degree) return {*o.degree, *o.degree};
  int hi = o.max_degree ? *o.max_degree : (m.exact ? 3 : m.certified_max());
  return {0, std::min(hi, m.certified_max())};
}

// --- commands -----------------------------------------------------------

Report check_gstar_cmd(const ModelFile& f, const Options& o) {
  Report r;
  GStarAlgebra a = need_gstar(f);
  int max = o.max_degree.value_or(8);
  GStarReport g = check_gstar(a, max);
  json violations = json::array();
  for (const auto& v : g.violations) {
    violations.push_back({{"relation", v.relation}, {"element", v.element}, {"defect", v.defect}, {"degree", v.degree}});
  }
  std::vector<std::string> generators;
  for (const auto& gen : a.carrier->generators()) generators.push_back(gen.name);
  r.result = {{"lie", a.lie.name()}, {"generators", generators}, {"max_degree", max}, {"checks", g.checks},
              {"violations", violations}};
  std::vector<std::string> conn;
  if (f.connection) {
    conn = connection_defects(a, f.connection_data());
    r.result["connection_defects"] = conn;
  }
  r.failed = !g.ok() || !conn.empty();
  if (!g.ok()) {
    const auto& v = g.violations.front();
    r.summary = "G* relation " + v.relation + " fails on " + v.element + ": " + v.defect;
  } else if (!conn.empty()) {
    r.summary = "connection axiom fails: " + conn.front();
  } else {
    r.summary = "G* axioms hold through degree " + std::to_string(max) + " (" + std::to_string(g.checks) + " checks)";
    if (f.connection) r.summary += "; connection axioms hold";
  }
  return r;
}

Report weil_cohomology_cmd(const ModelFile& f, const Options& o) {
  Report r;
  const LieAlgebra& g = need_lie(f);
  int max = o.max_degree.value_or(6);
  WeilAlgebra w = build_weil(g);
  std::vector<std::size_t> dims;
  std::vector<std::string> groups;
  for (int n = 0; n <= max; ++n) {
    dims.push_back(cohomology_dim(w.gstar.d, n));
    groups.push_back(dims.back() == 0 ? "0" : power_group("Q", dims.back()));
  }
  std::vector<std::string> parts;
  for (int n = 0; n <= max;) {
    int m = n;
    while (m + 1 <= max && groups[std::size_t(m + 1)] == groups[std::size_t(n)]) ++m;
    std::string label = "H" + std::to_string(n) + (m > n ? "..H" + std::to_string(m) : "");
    parts.push_back(label + "=" + groups[std::size_t(n)]);
    n = m + 1;
  }
  std::string summary;
  for (std::size_t i = 0; i < parts.size(); ++i) summary += (i ? "; " : "") + parts[i];
  r.result = {{"lie", g.name()}, {"max_degree", max}, {"dimensions", dims}, {"groups", groups}};
  r.summary = summary;
  return r;
}

Report chern_simons_cmd(const ModelFile& f, const Options& o) {
  Report r;
  const LieAlgebra& lie = need_lie(f);
  const bool equivariant = f.split && f.connection;
  LieAlgebra k = equivariant ? f.k() : lie;
  InvariantPolynomial w = need_poly(o, k);
  WeilAlgebra weil = build_weil(k);
  Element cs = chern_simons(w, weil);
  Element dcs = weil.gstar.d(cs);
  Element form = weil.from_polynomial(w.poly);
  bool ok = dcs == form;
  r.result = {{"lie", k.name()},
              {"polynomial", to_string(w.poly, coordinate_names(k))},
              {"chern_simons", cs.to_string()},
              {"d_chern_simons", dcs.to_string()},
              {"form", form.to_string()},
              {"transgression_holds", ok}};
  r.summary = "CS = " + cs.to_string();
  if (equivariant) {
    EquivariantConnection ec = equivariant_connection(f.g(), k, need_gstar(f), f.connection_data());
    Element cs_g = equivariant_chern_simons(w, ec);
    Element d_g = ec.total().d(cs_g);
    Element cw = equivariant_chern_weil(w, ec);
    bool ok_g = d_g == cw;
    r.result["equivariant"] = {{"chern_simons", cs_g.to_string()},
                               {"d_chern_simons", d_g.to_string()},
                               {"chern_weil", cw.to_string()},
                               {"transgression_holds", ok_g}};
    r.summary += "; CS_G = " + cs_g.to_string();
    ok = ok && ok_g;
    if (!ok_g) r.summary += "; d CS_G = " + d_g.to_string() + " differs from w(Omega_G) = " + cw.to_string();
  }
  if (dcs != form) r.summary += "; d CS = " + dcs.to_string() + " differs from " + form.to_string();
  r.failed = !ok;
  return r;
}

Report equiv_cw_cmd(const ModelFile& f, const Options& o) {
  Report r;
  need_lie(f);
  if (!f.connection) throw UsageError(f.source + " has no [connection] section");
  GStarAlgebra a = need_gstar(f);
  Connection theta = f.connection_data();
  InvariantPolynomial w = need_poly(o, theta.lie);
  if (!f.split) {
    std::vector<Element> omega = curvature(a, theta);
    Element cw = chern_weil(w, a, theta);
    bool closed = a.d(cw).is_zero();
    r.result = {{"curvature", strings(omega)}, {"chern_weil", cw.to_string()}, {"closed", closed}};
    r.failed = !closed;
    r.summary = "w(Omega) = " + cw.to_string() + (closed ? "" : "; not closed: d = " + a.d(cw).to_string());
    return r;
  }
  EquivariantConnection ec = equivariant_connection(f.g(), theta.lie, a, theta);
  std::vector<std::string> defects = equivariant_connection_defects(ec);
  Element cw = equivariant_chern_weil(w, ec);
  Element cw_cartan = equivariant_chern_weil_cartan(w, ec);
  bool mq = ec.mathai_quillen(cw) == cw_cartan;
  r.result = {{"theta_G", strings(ec.theta_G)},
              {"omega_G", strings(ec.omega_G_weil)},
              {"omega_G_cartan", strings(ec.omega_G_cartan)},
              {"chern_weil", cw.to_string()},
              {"chern_weil_cartan", cw_cartan.to_string()},
              {"mathai_quillen", mq},
              {"defects", defects}};
  r.failed = !defects.empty() || !mq;
  r.summary = "Theta_G = " + strings(ec.theta_G).front() + "; Omega_G (Cartan) = " +
              strings(ec.omega_G_cartan).front() + "; w(Omega_G) (Cartan) = " + cw_cartan.to_string();
  if (!defects.empty()) r.summary += "; " + defects.front();
  if (!mq) r.summary += "; exp(iota_theta) w(Omega_G) differs from the Cartan form";
  return r;
}

json group_json(const DiffCohomologyReport& d) {
  json torsion = json::array();
  std::vector<std::string> parts;
  if (d.rank()) parts.push_back(power_group("Z", d.rank()));
  for (const auto& t : d.flat_torsion) {
    torsion.push_back(t.get_si());
    parts.push_back("Z/" + to_string(t));
  }
  if (d.flat_divisible_rank) parts.push_back(power_group("Q/Z", d.flat_divisible_rank));
  if (d.lattice_rational_rank) parts.push_back(power_group("Q", d.lattice_rational_rank));
  std::string presentation;
  for (std::size_t i = 0; i < parts.size(); ++i) presentation += (i ? " + " : "") + parts[i];
  return {{"rank", d.rank()},
          {"torsion", torsion},
          {"divisible_rank", d.flat_divisible_rank},
          {"rational_rank", d.lattice_rational_rank},
          {"presentation", presentation.empty() ? "0" : presentation}};
}

Report diffcoh_cmd(const ModelFile& f, const Options& o) {
  Report r;
  const GeometricModel& m = need_model(f);
  auto [lo, hi] = degree_range(o, m);
  json degrees = json::array();
  std::vector<std::string> lines;
  for (int n = lo; n <= hi; ++n) {
    DiffCohomologyReport d = diff_cohomology(m, n);
    std::vector<std::string> gens, tors, flat;
    for (const auto& x : d.lattice_generators) gens.push_back(to_string(x, m));
    for (const auto& x : d.flat_torsion_generators) tors.push_back(to_string(x, m));
    for (const auto& v : d.flat_directions) {
      flat.push_back("(0, " + format_combination(v, m.cochain_labels[std::size_t(n - 1)]) + ", 0)");
    }
    degrees.push_back({{"degree", n},
                       {"group", group_json(d)},
                       {"summary", d.summary()},
                       {"generators", gens},
                       {"torsion_generators", tors},
                       {"flat_directions", flat}});
    std::string line = (lo == hi ? "" : "degree " + std::to_string(n) + ": ") + d.summary();
    std::vector<std::string> all = gens;
    all.insert(all.end(), tors.begin(), tors.end());
    if (!all.empty()) {
      line += "; generators";
      for (const auto& g : all) line += " " + g;
    }
    lines.push_back(line);
  }
  r.result = {{"model", m.name}, {"certified_max", m.exact ? json(nullptr) : json(m.certified_max())},
              {"degrees", degrees}};
  for (std::size_t i = 0; i < lines.size(); ++i) r.summary += (i ? "\n" : "") + lines[i];
  return r;
}

Report verify_ses_cmd(const ModelFile& f, const Options& o) {
  Report r;
  const GeometricModel& m = need_model(f);
  auto [lo, hi] = degree_range(o, m);
  json degrees = json::array();
  std::string failure;
  for (int n = lo; n <= hi; ++n) {
    SesReport s = verify_ses(m, n);
    json checks = json::array();
    for (const auto& c : s.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      if (!c.passed && failure.empty()) {
        failure = "SES check " + c.name + " fails in degree " + std::to_string(n) + ": " + c.detail;
      }
    }
    degrees.push_back({{"degree", n}, {"ok", s.ok()}, {"checks", checks}});
  }
  r.result = {{"model", m.name}, {"degrees", degrees}};
  r.failed = !failure.empty();
  r.summary = r.failed ? failure
                       : "SES checks pass in degree" + (lo == hi ? " " + std::to_string(lo)
                                                                 : "s " + std::to_string(lo) + ".." + std::to_string(hi));
  return r;
}

Report witness_cmd(const ModelFile& f, const Options& o) {
  Report r;
  const LieAlgebra& g = need_lie(f);
  InvariantPolynomial w = need_poly(o, g);
  InjectivityWitness wit = weil_injectivity_witness(g, w);
  std::vector<std::size_t> idx;
  std::vector<std::string> basis;
  for (auto i : wit.indices) {
    idx.push_back(i + 1);
    basis.push_back(g.basis()[i]);
  }
  r.result = {{"polynomial", to_string(w.poly, coordinate_names(g))},
              {"indices", idx},
              {"basis", basis},
              {"polarized", to_string(wit.polarized)},
              {"factorial", to_string(wit.factorial)},
              {"coefficient", to_string(wit.coefficient)},
              {"form", wit.form.to_string()}};
  std::string args;
  for (const auto& b : basis) args += (args.empty() ? "" : ", ") + b;
  r.summary = "coefficient " + to_string(wit.coefficient) + " = " + std::to_string(wit.indices.size()) + "! * w(" +
              args + ") = " + to_string(wit.factorial) + " * " + to_string(wit.polarized);
  return r;
}

// --- plumbing -----------------------------------------------------------

struct Located {
  std::string path;
  std::string display;
};

Located locate(const Options& o) {
  if (!o.model_path.empty()) {
    if (!o.target.empty()) throw UsageError("give either a model name or --model, not both");
    return {o.model_path, o.model_path};
  }
  if (o.target.empty()) throw UsageError("missing model name or path");
  if (o.target.find('/') != std::string::npos || fs::exists(o.target)) return {o.target, o.target};
  fs::path p = fs::path(data_dir()) / "models" / (o.target + ".model");
  if (!fs::exists(p)) throw UsageError("no model file named '" + o.target + ".model' in the data directory");
  return {p.string(), o.target + ".model"};
}

ModelFile load(const Located& where) {
  std::ifstream in(where.path, std::ios::binary);
  if (!in) throw UsageError(where.display + ": cannot read file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_model_text(text.str(), where.display);
}

Options with_task(Options o, const ModelFile& f) {
  auto get = [&](const std::string& k) -> const std::string* {
    auto it = f.task.find(k);
    return it == f.task.end() ? nullptr : &it->second;
  };
  const std::string* command = get("command");
  if (!command) throw UsageError(f.source + " has no 'command' in [task]");
  if (*command == "run" || *command == "print") throw UsageError("[task] command cannot be '" + *command + "'");
  o.command = *command;
  if (auto v = get("poly"); v && o.poly.empty()) o.poly = *v;
  if (auto v = get("degree"); v && !o.degree) o.degree = parse_int(*v, "[task] degree");
  if (auto v = get("max-degree"); v && !o.max_degree) o.max_degree = parse_int(*v, "[task] max-degree");
  if (auto v = get("coeff")) o.coeff = *v;
  return o;
}

Report dispatch(const ModelFile& f, const Options& o) {
  if (o.coeff != "z-in-q") throw UsageError("--coeff supports only z-in-q, got '" + o.coeff + "'");
  if (o.command == "check-gstar") return check_gstar_cmd(f, o);
  if (o.command == "weil-cohomology") return weil_cohomology_cmd(f, o);
  if (o.command == "chern-simons") return chern_simons_cmd(f, o);
  if (o.command == "equiv-cw") return equiv_cw_cmd(f, o);
  if (o.command == "diffcoh") return diffcoh_cmd(f, o);
  if (o.command == "verify-ses") return verify_ses_cmd(f, o);
  if (o.command == "witness-inj") return witness_cmd(f, o);
  throw UsageError("unknown command '" + o.command + "'");
}

}  // namespace

std::string data_dir() {
  if (const char* env = std::getenv("EQDC_DATA_DIR"); env && *env) return env;
#ifdef EQDC_DATA_DIR
  return EQDC_DATA_DIR;
#else
  return "data";
#endif
}

Outcome run(const Options& options) {
  json report = {{"schema", kSchema}, {"command", options.command}};
  Outcome out;
  try {
    Located where = locate(options);
    report["model"] = fs::path(where.display).stem().string();
    ModelFile f = load(where);
    if (options.command == "print") {
      out.output = print_model(f, options.expand);
      out.summary = "printed " + where.display;
      return out;
    }
    Options o = options.command == "run" ? with_task(options, f) : options;
    report["command"] = o.command;
    Report r = dispatch(f, o);
    out.exit_code = r.failed ? 1 : 0;
    out.summary = r.summary;
    report["status"] = r.failed ? "failed" : "ok";
    report["result"] = std::move(r.result);
  } catch (const Error& e) {
    out.exit_code = kVerificationKinds.count(e.kind()) ? 1 : 2;
    out.summary = e.what();
    report["status"] = out.exit_code == 1 ? "failed" : "error";
    report["error"] = {{"kind", e.kind()}, {"message", e.what()}};
  } catch (const std::exception& e) {
    out.exit_code = 2;
    out.summary = std::string("internal error: ") + e.what();
    report["status"] = "error";
    report["error"] = {{"kind", "Internal"}, {"message", e.what()}};
  }
  report["exit_code"] = out.exit_code;
  report["summary"] = out.summary;
  out.output = report.dump(2) + "\n";
  return out;
}

}  // namespace eqdc::cli
