#include "hnc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hnc/acceptance.hpp"
#include "hnc/errors.hpp"
#include "hnc/expr.hpp"
#include "hnc/foliation.hpp"
#include "hnc/hncone.hpp"
#include "hnc/poisson.hpp"
#include "hnc/preset.hpp"
#include "hnc/random.hpp"
#include "hnc/symbols.hpp"

namespace hnc {

namespace {

using Json = nlohmann::ordered_json;

struct CommonOptions {
  std::string preset;
  std::uint64_t seed = 0;
  std::string out;
  std::string csv;
  std::optional<unsigned> degree_bound;
  std::string curves;
  std::string points;
  bool timing = false;
};

/// A usage problem detected after CLI11 parsing succeeded.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json rational_json(const Rational& q) { return to_string(q); }

Json vector_json(std::span<const Rational> v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(rational_json(q));
  return a;
}

Json subspace_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& b : s.basis_vectors()) basis.push_back(vector_json(b));
  return Json{{"dim", s.dim()}, {"basis", basis}, {"plucker", vector_json(s.plucker())}};
}

std::string plucker_field(const Subspace& s) {
  std::string out;
  for (std::size_t i = 0; i < s.plucker().size(); ++i) out += (i ? " " : "") + to_string(s.plucker()[i]);
  return out;
}

CurveFamilyConfig parse_curves(const std::string& text, std::uint64_t seed) {
  CurveFamilyConfig c;
  c.seed = seed;
  if (text.empty()) return c;
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    const std::string count = text.substr(0, colon);
    const long n = std::stol(count, &used);
    if (used != count.size() || n < 0) throw std::invalid_argument("count");
    c.direction_count = static_cast<std::size_t>(n);
    if (colon != std::string::npos) {
      const std::string deg = text.substr(colon + 1);
      const long g = std::stol(deg, &used);
      if (used != deg.size() || g < 1 || g > 16) throw std::invalid_argument("degree");
      c.arc_degree = static_cast<unsigned>(g);
    }
  } catch (const std::exception&) {
    throw UsageError("--curves expects <count>[:<arc_degree>] with arc_degree in 1..16, got '" + text + "'");
  }
  return c;
}

std::vector<RationalVector> parse_points(const std::string& text, const LoadedPreset& lp) {
  if (text.empty()) {
    if (lp.preset.points.empty()) throw UsageError("preset lists no points; pass --points");
    return lp.preset.points;
  }
  std::vector<RationalVector> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    RationalVector m;
    try {
      m = parse_point(item);
    } catch (const std::exception& e) {
      throw UsageError("bad point '" + item + "': " + e.what());
    }
    if (m.size() != lp.presentation.dim()) {
      throw UsageError("point '" + item + "' has " + std::to_string(m.size()) + " coordinates, expected " +
                       std::to_string(lp.presentation.dim()));
    }
    out.push_back(std::move(m));
  }
  if (out.empty()) throw UsageError("--points is empty");
  return out;
}

Json preset_json(const LoadedPreset& lp) {
  Json gens = Json::array();
  for (const auto& g : lp.preset.generators) gens.push_back({{"name", g.name}, {"field", g.value.text}});
  return Json{{"name", lp.preset.name},
              {"source", lp.preset.source},
              {"tag", lp.preset.tag},
              {"vars", lp.preset.vars},
              {"generators", gens},
              {"structure", lp.preset.structure_auto ? "solved" : lp.preset.has_structure ? "given" : "absent"}};
}

Json report_header(const std::string& command, const std::vector<std::string>& echo) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["argv"] = echo;
  return j;
}

void emit(const Json& report, const CommonOptions& o, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + o.out + "'");
  f << text;
}

std::ofstream open_csv(const CommonOptions& o, const std::string& file) {
  std::filesystem::create_directories(o.csv);
  std::ofstream f(std::filesystem::path(o.csv) / file, std::ios::binary);
  if (!f) throw UsageError("cannot write CSV into '" + o.csv + "'");
  f.precision(17);
  return f;
}

std::vector<std::string> fiber_names(const FoliationPresentation& p) {
  std::vector<std::string> names = p.vars();
  for (const auto& g : p.generator_names()) names.push_back("xi_" + g);
  return names;
}

// ---------------------------------------------------------------------------

int cmd_analyze(const CommonOptions& o, Json& j) {
  const auto lp = load_preset(o.preset);
  const auto& p = lp.presentation;
  const unsigned bound = o.degree_bound.value_or(default_degree_bound(p));
  const auto reg = regular_data(p);
  j["preset"] = preset_json(lp);
  j["seed"] = o.seed;
  j["degree_bound"] = bound;
  j["base_dimension"] = p.dim();
  j["generators"] = p.size();
  j["regular_rank"] = reg.rank;
  bool ok = true;
  if (p.has_structure_functions()) {
    const auto defects = jacobi_defects(p);
    Json d = Json::array();
    for (const auto& e : defects) {
      Json v = Json::array();
      for (const auto& c : e.value) v.push_back(to_string(c, p.vars()));
      d.push_back({{"triple", {p.generator_names()[e.i], p.generator_names()[e.j], p.generator_names()[e.l]}}, {"value", v}});
    }
    j["jacobi"] = {{"holds", defects.empty()}, {"defects", d}};
  }
  const auto syz = syzygies(p, bound);
  j["syzygy_count"] = syz.size();
  Json pts = Json::array();
  for (const auto& m : parse_points(o.points, lp)) {
    Json e;
    e["point"] = point_to_string(m);
    e["rank"] = leaf_dimension_at(p, m);
    e["regular"] = reg.is_regular(m);
    const Subspace ker = kernel_at(p, m);
    const Subspace sker = strong_kernel_at(syz, p.size(), m);
    e["kernel"] = subspace_json(ker);
    e["strong_kernel"] = subspace_json(sker);
    const bool inside = ker.contains(sker);
    e["strong_kernel_in_kernel"] = inside;
    ok = ok && inside;
    if (p.has_structure_functions()) {
      const auto iso = isotropy_algebra(p, m, bound);
      Json basis = Json::array();
      for (const auto& q : iso.quotient_basis) basis.push_back(vector_json(q));
      Json table = Json::array();
      for (const auto& row : iso.bracket_table) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(vector_json(c));
        table.push_back(r);
      }
      e["isotropy"] = {{"dim", iso.dim()}, {"quotient_basis", basis}, {"brackets", table}};
    }
    pts.push_back(e);
  }
  j["points"] = pts;
  j["passed"] = ok;
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_fiber(const CommonOptions& o, Json& j, bool dual) {
  const auto lp = load_preset(o.preset);
  const auto& p = lp.presentation;
  const unsigned bound = o.degree_bound.value_or(default_degree_bound(p));
  const CurveFamilyConfig cfg = parse_curves(o.curves, o.seed);
  const auto reg = regular_data(p);
  j["preset"] = preset_json(lp);
  j["seed"] = o.seed;
  j["degree_bound"] = bound;
  j["curve_family"] = cfg.describe();
  j["regular_rank"] = reg.rank;
  std::optional<std::ofstream> csv;
  if (!o.csv.empty()) {
    csv = open_csv(o, dual ? "hn_fiber.csv" : "nash_fiber.csv");
    *csv << "point,curve,accepted,space_index,dim,plucker\n";
  }
  bool ok = true;
  Json pts = Json::array();
  for (const auto& m : parse_points(o.points, lp)) {
    const auto nash = sample_nash_fiber(p, reg, m, cfg);
    Json e;
    e["point"] = point_to_string(m);
    e["regular"] = reg.is_regular(m);
    e["expected_dim"] = nash.expected_dim;
    Json curves = Json::array();
    for (const auto& c : nash.curves) {
      Json cj{{"label", c.label}, {"accepted", c.accepted}};
      if (c.accepted) {
        cj["limit"] = c.limit_index;
        cj["valuation"] = c.trace ? c.trace->valuation : 0;
      } else {
        cj["reason"] = c.reason;
      }
      curves.push_back(cj);
    }
    e["curves"] = curves;
    Json limits = Json::array();
    for (const auto& v : nash.limits) limits.push_back(subspace_json(v));
    e["nash_limits"] = limits;
    ok = ok && !nash.limits.empty();
    std::vector<Subspace> reported = nash.limits;
    if (dual) {
      const auto hn = hn_fiber(nash);
      reported = hn.covector_spaces;
      Json spaces = Json::array();
      for (const auto& s : hn.covector_spaces) spaces.push_back(subspace_json(s));
      e["covector_spaces"] = spaces;
      const auto sw = sandwich_check(p, nash, bound);
      Json swj = Json::array();
      for (const auto& s : sw.entries) swj.push_back({{"sker_in_limit", s.sker_in_limit}, {"limit_in_kernel", s.limit_in_kernel}});
      e["sandwich"] = {{"strong_kernel", subspace_json(sw.sker)}, {"kernel", subspace_json(sw.kernel)}, {"entries", swj},
                       {"passed", sw.ok()}};
      ok = ok && sw.ok();
      if (p.has_structure_functions()) {
        const auto iso = isotropy_algebra(p, m, bound);
        const auto sub = limit_subalgebra_check(p, nash, iso);
        Json sj = Json::array();
        for (const auto& s : sub.entries) {
          sj.push_back({{"image", subspace_json(s.image)}, {"closed", s.closed}, {"codimension", s.codimension}});
        }
        e["subalgebra"] = {{"isotropy_dim", sub.isotropy_dim}, {"expected_codimension", sub.expected_codimension},
                           {"entries", sj}, {"passed", sub.ok()}};
        ok = ok && sub.ok();
      } else {
        e["subalgebra"] = "skipped: no structure functions";
      }
    }
    if (csv) {
      for (const auto& c : nash.curves) {
        *csv << '"' << point_to_string(m) << "\"," << '"' << c.label << "\"," << (c.accepted ? 1 : 0) << ',';
        if (c.accepted) {
          const Subspace& s = reported[c.limit_index];
          *csv << c.limit_index << ',' << s.dim() << ',' << plucker_field(s) << '\n';
        } else {
          *csv << ",,\n";
        }
      }
    }
    pts.push_back(e);
  }
  j["points"] = pts;
  j["passed"] = ok;
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_symbol(const CommonOptions& o, Json& j, const std::string& op, std::optional<std::size_t> degree) {
  const auto lp = load_preset(o.preset);
  const auto& p = lp.presentation;
  if (op.empty()) throw UsageError("--op is required");
  const UEAElement element = UEAElement::parse(resolve_operator(lp, op), p);
  const std::size_t k = degree.value_or(element.degree());
  const DiffOperator d = realize(element, p);
  j["preset"] = preset_json(lp);
  j["seed"] = o.seed;
  j["operator"] = to_string(element.words(), p.generator_names(), p.vars());
  j["degree"] = k;
  j["realization"] = to_string(d, p.vars());
  j["realization_order"] = d.order();
  j["symbol"] = to_string(symbol_top(element, k, p.size()), fiber_names(p));
  std::vector<std::string> eta_names = p.vars();
  for (const auto& v : p.vars()) eta_names.push_back("eta_" + v);
  j["classical_principal_symbol"] = to_string(classical_principal_symbol(d, k), eta_names);
  bool ok = true;
  if (k == element.degree()) {
    Rng rng(o.seed);
    const auto rep = pullback_consistency(element, p, rng, 20);
    Json trials = Json::array();
    for (const auto& t : rep.trials) {
      trials.push_back({{"point", point_to_string(t.point)}, {"eta", point_to_string(t.eta)},
                        {"classical", to_string(t.classical)}, {"pulled_back", to_string(t.pulled)}});
    }
    j["pullback"] = {{"passed", rep.ok()}, {"trials", trials}};
    ok = rep.ok();
  }
  j["passed"] = ok;
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_elliptic(const CommonOptions& o, Json& j, const std::string& op, double tol, const std::string& convention) {
  const auto lp = load_preset(o.preset);
  const auto& p = lp.presentation;
  if (op.empty()) throw UsageError("--op is required");
  EllipticityConfig cfg;
  cfg.tolerance = tol;
  cfg.curves = parse_curves(o.curves, o.seed);
  if (convention == "strict") {
    cfg.convention = PositivityConvention::StrictlyPositive;
  } else if (convention == "nonvanishing") {
    cfg.convention = PositivityConvention::NonVanishing;
  } else {
    throw UsageError("--convention must be 'strict' or 'nonvanishing'");
  }
  const UEAElement element = UEAElement::parse(resolve_operator(lp, op), p);
  EllipticityReport rep;
  try {
    rep = ellipticity_check(element, p, parse_points(o.points, lp), cfg);
  } catch (const OddDegreeWarning& w) {
    throw UsageError(w.what());
  }
  j["preset"] = preset_json(lp);
  j["seed"] = o.seed;
  j["operator"] = to_string(element.words(), p.generator_names(), p.vars());
  j["degree"] = rep.degree;
  j["tolerance"] = tol;
  j["convention"] = convention;
  j["curve_family"] = cfg.curves.describe();
  Json pts = Json::array();
  for (const auto& pt : rep.points) {
    Json fibers = Json::array();
    for (const auto& f : pt.fibers) {
      std::vector<std::string> u = numbered_names("u", f.space.dim());
      Json fj{{"space", subspace_json(f.space)},  {"elliptic", f.elliptic}, {"method", f.method},
              {"minimum", f.minimum},            {"identically_zero", f.identically_zero},
              {"restricted_symbol", to_string(f.restricted, u)}};
      if (f.exact_minimum) fj["exact_minimum"] = to_string(*f.exact_minimum);
      fibers.push_back(fj);
    }
    pts.push_back({{"point", point_to_string(pt.point)}, {"regular", pt.regular}, {"elliptic", pt.elliptic()},
                   {"fibers", fibers}});
  }
  j["points"] = pts;
  j["verdict"] = rep.elliptic() ? "elliptic" : "not elliptic";
  j["passed"] = rep.elliptic();
  return rep.elliptic() ? kExitOk : kExitCheckFailed;
}

int cmd_poisson(const CommonOptions& o, Json& j, const std::string& scenario) {
  const auto lp = load_preset(o.preset);
  const auto& p = lp.presentation;
  std::vector<PoissonScenario> scenarios;
  if (scenario.empty()) {
    for (const auto& s : lp.preset.scenarios) scenarios.push_back(parse_scenario(s.name, s.value.text, p));
    if (scenarios.empty()) throw UsageError("preset lists no scenarios; pass --scenario");
  } else {
    auto it = std::find_if(lp.preset.scenarios.begin(), lp.preset.scenarios.end(),
                           [&](const NamedEntry& e) { return e.name == scenario; });
    scenarios.push_back(it != lp.preset.scenarios.end() ? parse_scenario(it->name, it->value.text, p)
                                                         : parse_scenario("custom", scenario, p));
  }
  const CurveFamilyConfig curves = parse_curves(o.curves, o.seed);
  j["preset"] = preset_json(lp);
  j["seed"] = o.seed;
  j["curve_family"] = curves.describe();
  bool ok = true;
  const auto jacobi = poisson_jacobi_failures(p);
  j["poisson_jacobi"] = {{"holds", jacobi.empty()}, {"failures", jacobi}};
  Rng rng(o.seed);
  Json list = Json::array();
  for (const auto& sc : scenarios) {
    const RationalVector eta = sc.eta ? *sc.eta : rng.nonzero_integer_vector(p.dim(), 3);
    const auto ids = verify_hamiltonian_identities(p, hamiltonian_field(p, sc.section));
    InvarianceConfig cfg;
    cfg.duration = sc.duration;
    cfg.steps = sc.steps;
    cfg.curves = curves;
    const auto inv = hn_invariance_test(p, sc.point, sc.section, eta, cfg);
    const auto lift = cotangent_lift_check(p, sc.point, eta, sc.section, sc.duration, sc.steps, cfg.tolerance);
    Json cps = Json::array();
    for (const auto& c : inv.checkpoints) {
      cps.push_back({{"time", c.time}, {"snapped_point", point_to_string(c.snapped)}, {"drift", c.drift},
                     {"fiber_spaces", c.fiber_spaces}});
    }
    const bool passed = ids.ok() && inv.passed && lift.passed;
    ok = ok && passed;
    list.push_back({{"name", sc.name},
                    {"section", vector_json(sc.section)},
                    {"point", point_to_string(sc.point)},
                    {"eta", point_to_string(eta)},
                    {"xi0", point_to_string(inv.xi0)},
                    {"duration", sc.duration},
                    {"steps", sc.steps},
                    {"identities", {{"passed", ids.ok()}, {"failures", ids.failures}}},
                    {"max_drift", inv.max_drift},
                    {"snap_radius", inv.snap_radius},
                    {"checkpoints", cps},
                    {"cotangent_deviation", lift.max_deviation},
                    {"passed", passed}});
    if (!o.csv.empty()) {
      auto f = open_csv(o, "trajectory_" + sc.name + ".csv");
      f << "t";
      for (const auto& v : p.vars()) f << ',' << v;
      for (const auto& g : p.generator_names()) f << ",xi_" << g;
      f << '\n';
      for (std::size_t s = 0; s < inv.trajectory.times.size(); ++s) {
        f << inv.trajectory.times[s];
        for (double x : inv.trajectory.states[s].x) f << ',' << x;
        for (double x : inv.trajectory.states[s].xi) f << ',' << x;
        f << '\n';
      }
    }
  }
  j["scenarios"] = list;
  j["passed"] = ok;
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_selftest(const CommonOptions& o, Json& j, std::ostream& err) {
  AcceptanceOptions ao;
  ao.seed = o.seed;
  Json list = Json::array();
  bool ok = true;
  run_acceptance(ao, [&](const CriterionResult& r) {
    err << format_result_line(r) << std::endl;
    for (const auto& n : r.notes) err << "    " << n << '\n';
    Json e{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"summary", r.summary}, {"notes", r.notes}};
    if (o.timing) e["seconds"] = r.seconds;
    list.push_back(e);
    ok = ok && r.passed;
  });
  j["seed"] = o.seed;
  j["criteria"] = list;
  j["passed"] = ok;
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact fibers of the Nash blow-up and Helffer-Nourrigat cone of polynomial foliations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hnc 1.0");
  CommonOptions o;
  std::string op;
  std::optional<std::size_t> degree;
  double tol = 1e-9;
  std::string convention = "strict";
  std::string scenario;

  auto add_common = [&](CLI::App* sub, bool needs_preset) {
    if (needs_preset) sub->add_option("preset", o.preset, "builtin preset name or preset file")->required();
    sub->add_option("--seed", o.seed, "seed for every random choice (default 0)");
    sub->add_option("--out", o.out, "write the JSON report to this file instead of stdout");
    sub->add_flag("--timing", o.timing, "include wall-clock timings (reports are then not reproducible)");
  };
  auto* analyze = app.add_subcommand("analyze", "ranks, strong kernels and isotropy algebras at points");
  add_common(analyze, true);
  analyze->add_option("--points,--point", o.points, "points 'a,b;c,d' (default: the preset's points)");
  analyze->add_option("--degree-bound", o.degree_bound, "degree bound for syzygies");

  CLI::App* fibers[2];
  const char* fiber_names_[2] = {"nash-fiber", "hn-fiber"};
  for (int i = 0; i < 2; ++i) {
    fibers[i] = app.add_subcommand(fiber_names_[i], i == 0 ? "sampled Nash blow-up fiber" : "sampled HN cone fiber with sandwich and subalgebra checks");
    add_common(fibers[i], true);
    fibers[i]->add_option("--points,--point", o.points, "points 'a,b;c,d' (default: the preset's points)");
    fibers[i]->add_option("--curves", o.curves, "curve family '<rays>[:<arc_degree>]'");
    fibers[i]->add_option("--degree-bound", o.degree_bound, "degree bound for strong kernels");
    fibers[i]->add_option("--csv", o.csv, "directory for CSV fiber samples");
  }
  auto* symbol = app.add_subcommand("symbol", "realization and symbols of an operator");
  add_common(symbol, true);
  symbol->add_option("--op", op, "operator expression or name of a preset operator")->required();
  symbol->add_option("--degree", degree, "symbol degree (default: degree of the operator)");

  auto* elliptic = app.add_subcommand("elliptic", "longitudinal ellipticity on sampled cone fibers");
  add_common(elliptic, true);
  elliptic->add_option("--op", op, "operator expression or name of a preset operator")->required();
  elliptic->add_option("--points,--point", o.points, "points 'a,b;c,d' (default: the preset's points)");
  elliptic->add_option("--tol", tol, "positivity tolerance (default 1e-9)");
  elliptic->add_option("--convention", convention, "'strict' (default) or 'nonvanishing'");
  elliptic->add_option("--curves", o.curves, "curve family '<rays>[:<arc_degree>]'");

  auto* poisson = app.add_subcommand("poisson-check", "Hamiltonian flows and invariance of the cone");
  add_common(poisson, true);
  poisson->add_option("--scenario", scenario, "scenario name from the preset or 'a=... m=... [T=..] [steps=..] [eta=..]'");
  poisson->add_option("--curves", o.curves, "curve family '<rays>[:<arc_degree>]'");
  poisson->add_option("--csv", o.csv, "directory for CSV trajectories");

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  add_common(selftest, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::vector<std::string> echo;
  for (int i = 1; i < argc; ++i) echo.emplace_back(argv[i]);
  CLI::App* active = app.get_subcommands().front();
  Json j = report_header(active->get_name(), echo);
  const auto t0 = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (active == analyze) {
      code = cmd_analyze(o, j);
    } else if (active == fibers[0]) {
      code = cmd_fiber(o, j, false);
    } else if (active == fibers[1]) {
      code = cmd_fiber(o, j, true);
    } else if (active == symbol) {
      code = cmd_symbol(o, j, op, degree);
    } else if (active == elliptic) {
      code = cmd_elliptic(o, j, op, tol, convention);
    } else if (active == poisson) {
      code = cmd_poisson(o, j, scenario);
    } else {
      code = cmd_selftest(o, j, err);
    }
  } catch (const ParseError& e) {
    err << "hnc: parse error in " << (o.preset.empty() ? "arguments" : o.preset) << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "hnc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "hnc: invalid preset: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MissingStructureFunctions& e) {
    err << "hnc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    // unreadable preset files land here
    if (std::string(e.what()).rfind("cannot open", 0) == 0) {
      err << "hnc: " << e.what() << '\n';
      return kExitUsage;
    }
    err << "hnc: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "hnc: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  if (o.timing) j["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  try {
    emit(j, o, out);
  } catch (const UsageError& e) {
    err << "hnc: " << e.what() << '\n';
    return kExitUsage;
  }
  return code;
}

}  // namespace hnc
