// conedens: exact Shnirel'man-type density computations and certificate-
// producing addition-theorem checkers over boxed lattice cones.

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <span>

#include "acceptance/acceptance.hpp"
#include "conedens/density.hpp"
#include "conedens/errors.hpp"
#include "conedens/json_io.hpp"
#include "conedens/setgen.hpp"
#include "conedens/theorems.hpp"
#include "conedens/version.hpp"

namespace {

using namespace conedens;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitViolated = 3;

struct RunConfig {
  std::string command;
  std::map<std::string, std::string> sets;  // role -> spec text
  std::vector<int> m;                       // box bounds; 1D: {N}
  std::uint64_t seed = 0;
  int h_max = 16;
  std::uint64_t ideal_cap = kDefaultIdealCap;
  std::uint64_t margin_cap = 512;
  std::string format = "text";
  std::string out_path;
  int jobs = 0;
  std::optional<std::vector<int>> target;  // pigeonhole --x
  std::string extension = "lex";

  Box box() const { return Box(m); }

  Json to_json() const {
    Json j{{"command", command}, {"box", {{"n", m.size()}, {"m", m}}},
           {"seed", seed},       {"h_max", h_max},
           {"ideal_cap", ideal_cap}, {"margin_cap", margin_cap},
           {"format", format},   {"jobs", jobs}};
    Json js = Json::object();
    for (const auto& [role, spec] : sets) js[role] = spec;
    j["sets"] = js;
    if (target) j["x"] = *target;
    if (command == "partition") j["extension"] = extension;
    return j;
  }
};

std::string timestamp_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

// Report envelope: config + version first, payload after.  Re-running the
// same config reproduces everything but the timestamp.
Json envelope(const RunConfig& cfg, Json payload) {
  payload["config"] = cfg.to_json();
  payload["tool_version"] = std::string(kVersion);
  payload["timestamp"] = timestamp_now();
  return payload;
}

void emit(const RunConfig& cfg, const Json& report, const std::string& text,
          const std::string& csv) {
  std::string body;
  if (cfg.format == "json")
    body = report.dump(2) + "\n";
  else if (cfg.format == "csv")
    body = csv;
  else
    body = text;
  if (cfg.out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(cfg.out_path);
    if (!f) throw std::invalid_argument("cannot write " + cfg.out_path);
    f << body;
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// key,value rows from a flat json object; arrays/objects are serialized inline
std::string csv_flat(const Json& j) {
  std::string out = "key,value\n";
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    out += it.key() + "," +
           csv_escape(v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  }
  return out;
}

std::string points_inline(const std::vector<Point>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += '|';
    s += point_str(pts[i]);
  }
  return s;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::holds: return kExitOk;
    case Verdict::hypothesis_not_met: return kExitHypothesis;
    case Verdict::violated:
    case Verdict::candidate_observation: return kExitViolated;
  }
  return kExitUsage;
}

PointSet build_set(const RunConfig& cfg, const std::string& role) {
  return parse_and_build(cfg.sets.at(role), cfg.box(), cfg.seed);
}

// --------------------------------------------------------------------------
// subcommand bodies

int cmd_density(const RunConfig& cfg) {
  const PointSet a = build_set(cfg, "set");
  const DensityReport rep = cfg.box().dim() == 1
                                ? sigma_1d(a)
                                : sigma_ideal_family(a, cfg.ideal_cap);
  Json j = json_density(rep);
  std::string text = "sigma = " + fraction_string(rep.value) + "  (~" +
                     std::to_string(approx(rep.value)) + ")\nwitness ideal (" +
                     std::to_string(rep.witness.size()) + " points): " +
                     points_inline(rep.witness.points()) + "\nfamily size: " +
                     std::to_string(rep.family_size) + " (box-relative)\n";
  emit(cfg, envelope(cfg, std::move(j)), text, csv_flat(json_density(rep)));
  return kExitOk;
}

int cmd_sumset(const RunConfig& cfg, int h) {
  const PointSet a = build_set(cfg, "setA");
  PointSet result = cfg.sets.count("setB") ? sumset(a, build_set(cfg, "setB"))
                                           : hfold(a, h);
  Json j{{"points", json_pointset(result)},
         {"cardinality", result.cardinality()}};
  std::string text = points_inline(result.points()) + "\n";
  std::string csv = "point\n";
  for (const Point& p : result.points()) csv += csv_escape(point_str(p)) + "\n";
  emit(cfg, envelope(cfg, std::move(j)), text, csv);
  return kExitOk;
}

int cmd_basis(const RunConfig& cfg) {
  const BasisReport rep = basis_order(build_set(cfg, "set"), cfg.h_max, cfg.ideal_cap);
  std::string text;
  switch (rep.outcome) {
    case BasisReport::Outcome::found:
      text = "basis of order " + std::to_string(rep.order);
      break;
    case BasisReport::Outcome::not_a_basis:
      text = "not a basis (folds stabilized at h = " + std::to_string(rep.fixpoint_h) + ")";
      break;
    case BasisReport::Outcome::not_within_h_max:
      text = "not a basis within h_max = " + std::to_string(rep.h_max);
      break;
  }
  text += "; alpha = " + fraction_string(rep.alpha);
  if (rep.h0_known)
    text += ", h0 = " + std::to_string(rep.h0) + ", bound 2*h0 = " +
            std::to_string(2 * rep.h0) + (rep.bound_ok ? " (ok)" : " (VIOLATED)");
  text += "\nverdict: " + std::string(verdict_str(rep.verdict)) + "\n";
  emit(cfg, envelope(cfg, json_basis(rep)), text, csv_flat(json_basis(rep)));
  return verdict_exit(rep.verdict);
}

int cmd_partition(const RunConfig& cfg) {
  const Box box = cfg.box();
  const PointSet j_seed = build_set(cfg, "J");
  if (j_seed.empty()) throw std::invalid_argument("J spec resolves to the empty set");
  const OrderIdeal j = downward_closure(j_seed.points());
  const PointSet b = build_set(cfg, "setB");
  const ConeContext ctx{box.dim(), cfg.extension == "topo"
                                       ? ExtensionRule::topo_sort
                                       : ExtensionRule::lexicographic};
  const PartitionCertificate cert = partition_j_star(j, b, ctx);
  const auto bad = cert.check();
  const Verdict verdict = bad.empty() ? Verdict::holds : Verdict::violated;

  Json payload = json_partition(cert);
  payload["theorem"] = "partition";
  payload["verdict"] = verdict_str(verdict);
  if (!bad.empty()) payload["violations"] = bad;

  std::string text = "J* = J \\ B partitioned into " +
                     std::to_string(cert.parts.size()) + " part(s):\n";
  for (const auto& part : cert.parts)
    text += "  b = " + point_str(part.anchor) + "  J_l = {" +
            points_inline(part.members) + "}\n";
  text += "verdict: " + std::string(verdict_str(verdict)) + "\n";

  std::string csv = "b,members\n";
  for (const auto& part : cert.parts)
    csv += csv_escape(point_str(part.anchor)) + "," +
           csv_escape(points_inline(part.members)) + "\n";
  emit(cfg, envelope(cfg, std::move(payload)), text, csv);
  return verdict_exit(verdict);
}

int cmd_verify_shnirelman(const RunConfig& cfg) {
  const InequalityReport rep = verify_shnirelman(
      build_set(cfg, "setA"), build_set(cfg, "setB"), cfg.ideal_cap,
      cfg.format == "text" ? 0 : cfg.margin_cap);
  std::string text =
      "alpha = " + fraction_string(rep.alpha) + ", beta = " + fraction_string(rep.beta) +
      "\nbound alpha+beta-alpha*beta = " + fraction_string(rep.bound) +
      "\nsigma(A+B) = " + fraction_string(rep.sigma_c) +
      "\nmin per-ideal margin = " + fraction_string(rep.min_margin) + " at {" +
      points_inline(rep.min_margin_ideal) + "}\nverdict: " +
      std::string(verdict_str(rep.verdict)) + "\n";
  // csv: summary columns repeated, one row per captured per-ideal margin
  std::string csv = "theorem,verdict,alpha,beta,bound,sigma_sum,ideal,ideal_size,margin\n";
  const std::string prefix = "shnirelman," + std::string(verdict_str(rep.verdict)) +
                             "," + fraction_string(rep.alpha) + "," +
                             fraction_string(rep.beta) + "," + fraction_string(rep.bound) +
                             "," + fraction_string(rep.sigma_c) + ",";
  for (const auto& m : rep.margins)
    csv += prefix + csv_escape(points_inline(m.ideal)) + "," +
           std::to_string(m.ideal.size()) + "," + fraction_string(m.margin) + "\n";
  if (rep.margins.empty())
    csv += prefix + csv_escape(points_inline(rep.min_margin_ideal)) + "," +
           std::to_string(rep.min_margin_ideal.size()) + "," +
           fraction_string(rep.min_margin) + "\n";
  emit(cfg, envelope(cfg, json_inequality(rep)), text, csv);
  return verdict_exit(rep.verdict);
}

int cmd_verify_product(const RunConfig& cfg, const std::vector<std::string>& specs) {
  std::vector<PointSet> sets;
  for (const auto& s : specs) sets.push_back(parse_and_build(s, cfg.box(), cfg.seed));
  const ProductBoundReport rep = verify_product_bound(sets, cfg.ideal_cap);
  std::string text = "1 - sigma(A1+...+Ah) = " + fraction_string(rep.lhs) +
                     " <= prod(1 - alpha_i) = " + fraction_string(rep.rhs) +
                     "\nverdict: " + std::string(verdict_str(rep.verdict)) + "\n";
  emit(cfg, envelope(cfg, json_product_bound(rep)), text,
       csv_flat(json_product_bound(rep)));
  return verdict_exit(rep.verdict);
}

int cmd_verify_pigeonhole(const RunConfig& cfg) {
  const Box box = cfg.box();
  const PointSet a = build_set(cfg, "setA");
  const PointSet b = build_set(cfg, "setB");

  std::vector<Point> targets;
  if (cfg.target) {
    targets.push_back(*cfg.target);
  } else {
    for (std::uint64_t idx = 1; idx < box.volume(); ++idx) {
      Point x = box.point_at(idx);
      if (box.dim() == 1 || !open_interval_below(x).empty())
        targets.push_back(std::move(x));
    }
  }

  Json decs = Json::array();
  std::string text, csv = "x,a,b,covered_directly\n";
  for (const Point& x : targets) {
    const Decomposition d = box.dim() == 1
                                ? pigeonhole_decompose_1d(a, b, x[0])
                                : pigeonhole_decompose(a, b, x, cfg.ideal_cap);
    Json dj = json_decomposition(d);
    dj["x"] = json_point(x);
    decs.push_back(std::move(dj));
    text += point_str(x) + " = " + point_str(d.a) + " + " + point_str(d.b) +
            (d.direct ? "  (covered directly)\n" : "\n");
    csv += csv_escape(point_str(x)) + "," + csv_escape(point_str(d.a)) + "," +
           csv_escape(point_str(d.b)) + "," + (d.direct ? "yes" : "no") + "\n";
  }
  Json payload{{"theorem", "pigeonhole"},
               {"verdict", "holds"},
               {"decompositions", std::move(decs)}};
  text += "verdict: holds (" + std::to_string(targets.size()) + " target(s))\n";
  emit(cfg, envelope(cfg, std::move(payload)), text, csv);
  return kExitOk;
}

int cmd_verify_cover(const RunConfig& cfg) {
  const CoverReport rep =
      cover_check(build_set(cfg, "setA"), build_set(cfg, "setB"), cfg.ideal_cap);
  std::string text = "alpha = " + fraction_string(rep.alpha) + ", beta = " +
                     fraction_string(rep.beta) + "\n";
  if (rep.verdict == Verdict::hypothesis_not_met) text += "skipped: " + rep.note + "\n";
  if (!rep.missing.empty()) text += "missing: " + points_inline(rep.missing) + "\n";
  text += "verdict: " + std::string(verdict_str(rep.verdict)) + "\n";
  emit(cfg, envelope(cfg, json_cover(rep)), text, csv_flat(json_cover(rep)));
  return verdict_exit(rep.verdict);
}

int cmd_verify_mann(const RunConfig& cfg) {
  const MannReport rep =
      mann_check(build_set(cfg, "setA"), build_set(cfg, "setB"), cfg.ideal_cap);
  std::string text = "alpha = " + fraction_string(rep.alpha) + ", beta = " +
                     fraction_string(rep.beta) + "\nmin(1, alpha+beta) = " +
                     fraction_string(rep.bound) + "\nsigma(A+B) = " +
                     fraction_string(rep.sigma_c) + "\n";
  text += rep.asserted ? "1D: asserted (Mann's theorem)\n"
                       : "n >= 2: reported only; the bound is an open problem\n";
  text += "verdict: " + std::string(verdict_str(rep.verdict)) + "\n";
  emit(cfg, envelope(cfg, json_mann(rep)), text, csv_flat(json_mann(rep)));
  return verdict_exit(rep.verdict);
}

int cmd_suite(const RunConfig& cfg, const std::string& preset) {
  if (preset != "paper-acceptance")
    throw std::invalid_argument("unknown preset '" + preset + "'");
  const auto results = acceptance::run_all(cfg.seed ? cfg.seed
                                                    : acceptance::kDefaultSeed);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : results)
      arr.push_back(Json{{"id", r.id},
                         {"name", r.name},
                         {"passed", r.passed},
                         {"detail", r.detail},
                         {"seconds", r.seconds}});
    Json payload{{"suite", "paper-acceptance"}, {"criteria", std::move(arr)}};
    emit(cfg, envelope(cfg, std::move(payload)), "", "");
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    return all ? kExitOk : kExitViolated;
  }
  return acceptance::print_results(results) == 0 ? kExitOk : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact density and addition-theorem workbench on boxed lattice cones"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RunConfig cfg;
  int n_flag = 0, big_n = 0, h = 1;
  std::string set_spec, set_a, set_b, j_spec, x_arg, preset = "paper-acceptance";
  std::vector<std::string> product_specs;

  auto add_common = [&](CLI::App* c, bool needs_box = true) {
    if (needs_box) {
      c->add_option("--n", n_flag, "dimension (checked against --m/--N)");
      c->add_option("--N", big_n, "1D box bound");
      c->add_option("--m", cfg.m, "box bounds, comma separated")->delimiter(',');
    }
    c->add_option("--seed", cfg.seed, "random seed for set generators");
    c->add_option("--ideal-cap", cfg.ideal_cap, "ideal enumeration cap");
    c->add_option("--format", cfg.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    c->add_option("--out", cfg.out_path, "write the report to a file");
    c->add_option("--jobs", cfg.jobs, "worker threads (default: all)");
  };

  CLI::App* density = app.add_subcommand("density", "box-relative density of a set");
  density->add_option("--set", set_spec, "set spec")->required();
  add_common(density);

  CLI::App* sums = app.add_subcommand("sumset", "augmented sumset or h-fold sumset");
  sums->add_option("--setA", set_a, "first set")->required();
  sums->add_option("--setB", set_b, "second set (omit to use --h)");
  sums->add_option("--fold", h, "fold count when --setB is omitted");
  add_common(sums);

  CLI::App* basis = app.add_subcommand("basis", "least h with hA covering the boxed cone");
  basis->add_option("--set", set_spec, "set spec")->required();
  basis->add_option("--h-max", cfg.h_max, "search limit");
  add_common(basis);

  CLI::App* part = app.add_subcommand("partition", "partition certificate for J \\ B");
  part->add_option("--J", j_spec, "seed set; J is its downward closure")->required();
  part->add_option("--setB", set_b, "the set B")->required();
  part->add_option("--extension", cfg.extension, "lex | topo")
      ->check(CLI::IsMember({"lex", "topo"}));
  add_common(part);

  CLI::App* verify = app.add_subcommand("verify", "theorem checkers");
  verify->require_subcommand(1);

  CLI::App* vsh = verify->add_subcommand("shnirelman", "sigma(A+B) >= a+b-ab");
  vsh->add_option("--setA", set_a)->required();
  vsh->add_option("--setB", set_b)->required();
  vsh->add_option("--margin-cap", cfg.margin_cap, "per-ideal margins kept in the report");
  add_common(vsh);

  CLI::App* vpr = verify->add_subcommand("product", "1-sigma(sum) <= prod(1-alpha_i)");
  vpr->add_option("--sets", product_specs, "two or more set specs")
      ->required()
      ->expected(2, -1);
  add_common(vpr);

  CLI::App* vpi = verify->add_subcommand("pigeonhole", "decompose targets as a+b");
  vpi->add_option("--setA", set_a)->required();
  vpi->add_option("--setB", set_b)->required();
  vpi->add_option("--x", x_arg, "single target point, comma separated");
  add_common(vpi);

  CLI::App* vco = verify->add_subcommand("cover", "A+B covers the boxed cone");
  vco->add_option("--setA", set_a)->required();
  vco->add_option("--setB", set_b)->required();
  add_common(vco);

  CLI::App* vma = verify->add_subcommand("mann", "sigma(A+B) vs min(1, a+b)");
  vma->add_option("--setA", set_a)->required();
  vma->add_option("--setB", set_b)->required();
  add_common(vma);

  CLI::App* suite = app.add_subcommand("suite", "preset batteries");
  suite->add_option("--preset", preset, "paper-acceptance");
  add_common(suite, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cfg.jobs > 0) omp_set_num_threads(cfg.jobs);

    // resolve the box: --N implies 1D; --m wins if both given
    if (cfg.m.empty() && big_n > 0) cfg.m = {big_n};
    if (!suite->parsed() && cfg.m.empty())
      throw std::invalid_argument("specify the box with --N (1D) or --m");
    if (n_flag > 0 && !cfg.m.empty() && n_flag != static_cast<int>(cfg.m.size()))
      throw std::invalid_argument("--n disagrees with the box bounds");

    if (density->parsed()) {
      cfg.command = "density";
      cfg.sets["set"] = set_spec;
      return cmd_density(cfg);
    }
    if (sums->parsed()) {
      cfg.command = "sumset";
      cfg.sets["setA"] = set_a;
      if (!set_b.empty()) cfg.sets["setB"] = set_b;
      return cmd_sumset(cfg, h);
    }
    if (basis->parsed()) {
      cfg.command = "basis";
      cfg.sets["set"] = set_spec;
      return cmd_basis(cfg);
    }
    if (part->parsed()) {
      cfg.command = "partition";
      cfg.sets["J"] = j_spec;
      cfg.sets["setB"] = set_b;
      return cmd_partition(cfg);
    }
    if (verify->parsed()) {
      if (vsh->parsed()) {
        cfg.command = "verify shnirelman";
        cfg.sets["setA"] = set_a;
        cfg.sets["setB"] = set_b;
        return cmd_verify_shnirelman(cfg);
      }
      if (vpr->parsed()) {
        cfg.command = "verify product";
        for (std::size_t i = 0; i < product_specs.size(); ++i)
          cfg.sets["set" + std::to_string(i + 1)] = product_specs[i];
        return cmd_verify_product(cfg, product_specs);
      }
      if (vpi->parsed()) {
        cfg.command = "verify pigeonhole";
        cfg.sets["setA"] = set_a;
        cfg.sets["setB"] = set_b;
        if (!x_arg.empty()) {
          std::vector<int> x;
          std::string tok;
          for (char c : x_arg + ",") {
            if (c == ',') {
              x.push_back(std::stoi(tok));
              tok.clear();
            } else {
              tok += c;
            }
          }
          cfg.target = x;
        }
        return cmd_verify_pigeonhole(cfg);
      }
      if (vco->parsed()) {
        cfg.command = "verify cover";
        cfg.sets["setA"] = set_a;
        cfg.sets["setB"] = set_b;
        return cmd_verify_cover(cfg);
      }
      if (vma->parsed()) {
        cfg.command = "verify mann";
        cfg.sets["setA"] = set_a;
        cfg.sets["setB"] = set_b;
        return cmd_verify_mann(cfg);
      }
    }
    if (suite->parsed()) {
      cfg.command = "suite";
      return cmd_suite(cfg, preset);
    }
    throw std::invalid_argument("no subcommand");
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis not met: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
