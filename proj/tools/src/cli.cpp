#include "nodalcodes/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "nodalcodes/bounds.hpp"
#include "nodalcodes/classify.hpp"
#include "nodalcodes/errors.hpp"
#include "nodalcodes/evencode.hpp"
#include "nodalcodes/formats.hpp"
#include "nodalcodes/nodal.hpp"
#include "nodalcodes/series.hpp"
#include "nodalcodes/symmetroid.hpp"

namespace nodalcodes::cli {

using nlohmann::json;

namespace {

constexpr const char* kFiniteFieldNote =
    "finite-field evidence only (probabilistic transfer to characteristic 0)";

struct Options {
  std::optional<int> degree;
  std::optional<std::int64_t> mu;
  std::optional<std::int64_t> dim_m;
  std::string nodes;
  std::string surface;
  std::string code;
  std::string matrix;
  std::vector<std::string> files;
  bool json = false;
  std::uint32_t prime = 101;
  std::uint64_t seed = 0;
  std::string family = "six-point";
  std::size_t threshold = 50;
  std::size_t order = 5;
  bool paper_closed_form = false;
  bool audit = false;
};

CommandResult finish(int code, const std::ostringstream& text, json payload, const Options& o) {
  CommandResult r;
  r.exit_code = code;
  r.text = text.str();
  if (o.json) r.json = std::move(payload);
  return r;
}

NodeConfiguration load_nodes(const Options& o) {
  if (o.nodes.empty()) throw DataError("--nodes <file> is required");
  NodeConfiguration cfg = parse_node_configuration(read_json_file(o.nodes));
  if (!o.surface.empty()) {
    HomogeneousForm f = parse_form(read_text_file(o.surface), cfg.field);
    cfg = make_node_configuration(cfg.degree, cfg.field, std::move(cfg.nodes), std::move(f));
  }
  return cfg;
}

std::string point_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) s += ", ";
    s += p[i].to_string();
  }
  return s + ")";
}

std::string point_string(const FpPoint& p) {
  return "(" + std::to_string(p[0]) + ", " + std::to_string(p[1]) + ", " + std::to_string(p[2]) + ", " +
         std::to_string(p[3]) + ")";
}

std::string bound_note(std::int64_t v) { return v < 0 ? " (vacuous bound)" : ""; }

CommandResult run_defect(const Options& o) {
  DefectReport report;
  std::ostringstream text;
  json payload{{"command", "defect"}};
  int exit_code = kOk;
  if (!o.nodes.empty()) {
    const NodeConfiguration cfg = load_nodes(o);
    if (o.degree && *o.degree != cfg.degree) {
      throw DataError("--degree " + std::to_string(*o.degree) + " disagrees with node file degree " +
                      std::to_string(cfg.degree));
    }
    if (o.mu && *o.mu != static_cast<std::int64_t>(cfg.mu())) {
      throw DataError("--mu disagrees with the number of nodes in the file");
    }
    report = defect_from_nodes(cfg);
    if (cfg.surface) {
      const auto failures = std::count_if(cfg.nodes.begin(), cfg.nodes.end(),
                                          [&](const Point& p) { return !verify_node(*cfg.surface, p); });
      payload["nodes_verified"] = failures == 0;
      if (failures > 0) {
        text << failures << " listed point(s) are not nodes of the surface\n";
        exit_code = kVerificationFailed;
      }
    }
    if (!cfg.field.is_rational()) payload["note"] = kFiniteFieldNote;
  } else {
    if (!o.degree || !o.mu || !o.dim_m) {
      throw DataError("defect needs --nodes <file>, or all of --degree, --mu and --dim-m");
    }
    report = defect(*o.degree, *o.mu, *o.dim_m);
  }
  text << "b = " << report.b << ", mu = " << report.mu << "\n"
       << "forms of degree " << report.m_degree << " through the nodes: dim M = " << report.dim_m << "\n"
       << "expected dimension C(" << report.m_degree + 3 << ",3) - mu = " << report.estimate << "\n"
       << "defect d = " << report.d << (report.d < 0 ? " (negative: inconsistent input)" : "") << "\n";
  payload["report"] = to_json(report);
  if (!o.code.empty()) {
    const EvenSetCode code = parse_code(read_json_file(o.code));
    const TorsionRank t = torsion_rank(static_cast<std::int64_t>(code.dim()), report.d);
    text << "2-torsion rank: " << t.h3_rank << " in H^3, " << t.total_rank << " in total\n";
    payload["torsion"] = {{"code_dim", code.dim()}, {"h3_rank", t.h3_rank}, {"total_rank", t.total_rank}};
  }
  return finish(exit_code, text, std::move(payload), o);
}

CommandResult run_vanishing_dim(const Options& o) {
  const NodeConfiguration cfg = load_nodes(o);
  const int d = o.degree ? *o.degree : 3 * cfg.degree / 2 - 4;
  if (d < 0) throw DataError("form degree must be non-negative");
  const std::size_t dim = vanishing_dimension(cfg, d);
  std::ostringstream text;
  text << "forms of degree " << d << " vanishing at " << cfg.mu() << " point(s) over " << cfg.field.to_string()
       << ": " << dim << " of " << binomial(d + 3, 3) << "\n";
  json payload{{"command", "vanishing-dim"},
               {"form_degree", d},
               {"mu", cfg.mu()},
               {"field", cfg.field.to_string()},
               {"monomials", binomial(d + 3, 3)},
               {"dimension", dim}};
  return finish(kOk, text, std::move(payload), o);
}

CommandResult run_verify_nodes(const Options& o) {
  const NodeConfiguration cfg = load_nodes(o);
  if (!cfg.surface) throw DataError("verify-nodes needs a surface (node file \"surface\" or --surface <file>)");
  std::ostringstream text;
  json results = json::array();
  bool all_ok = true;
  for (const Point& p : cfg.nodes) {
    const bool ok = verify_node(*cfg.surface, p);
    all_ok = all_ok && ok;
    text << (ok ? "node     " : "NOT NODE ") << point_string(p) << "\n";
    json row = json::array();
    for (const Scalar& c : p) row.push_back(c.to_string());
    results.push_back({{"point", std::move(row)}, {"node", ok}});
  }
  text << (all_ok ? "all " + std::to_string(cfg.mu()) + " points are nodes\n" : "verification failed\n");
  json payload{{"command", "verify-nodes"}, {"all_nodes", all_ok}, {"points", std::move(results)}};
  if (!cfg.field.is_rational()) payload["note"] = kFiniteFieldNote;
  return finish(all_ok ? kOk : kVerificationFailed, text, std::move(payload), o);
}

CommandResult run_bounds(const Options& o) {
  if (!o.degree || !o.mu) throw DataError("bounds needs --degree and --mu");
  const BoundReport r = bound_report(*o.degree, *o.mu, o.paper_closed_form);
  std::ostringstream text;
  text << "b = " << r.b << ", mu = " << r.mu << "\n"
       << "Beauville lower bound on d (" << (r.printed_closed_form ? "printed closed form" : "b2 form")
       << "): " << r.beauville << bound_note(r.beauville) << "\n"
       << "improved lower bound on d: " << r.improved << bound_note(r.improved) << "\n"
       << "Miyaoka maximum node count: " << r.miyaoka_max << "\n"
       << "Jacobian slice dimension: " << r.jacobian_slice_dim << "\n";
  return finish(kOk, text, json{{"command", "bounds"}, {"report", to_json(r)}}, o);
}

CommandResult run_classify(const Options& o) {
  if (!o.mu) throw DataError("classify-quartic needs --mu");
  if (*o.mu < 1 || *o.mu > 16) throw DataError("--mu must be between 1 and 16");
  ClassifyOptions options;
  options.audit = o.audit;
  const ClassificationTable table = classify_quartic_codes(static_cast<std::size_t>(*o.mu), options);
  std::ostringstream text;
  text << "mu = " << table.mu << ": " << table.entries.size() << " code(s)\n";
  for (const auto& c : table.entries) text << "  " << c.profile << "\n";
  if (o.audit) {
    text << "excluded by the dimension lower bounds: " << table.excluded.size() << "\n";
    for (const auto& c : table.excluded) text << "  " << c.profile << "\n";
  }
  json payload = to_json(table);
  payload["command"] = "classify-quartic";
  return finish(kOk, text, std::move(payload), o);
}

json code_info_json(const EvenSetCode& code) {
  return json{{"mu", code.mu()},
              {"dim", code.dim()},
              {"strict_dim", code.strict_dim()},
              {"profile", weight_profile(code)},
              {"weight_enumerator", weight_enumerator_json(code)}};
}

CommandResult run_code(const std::string& action, const Options& o) {
  const std::size_t wanted = action == "isomorphic" ? 2 : 1;
  if (o.files.size() != wanted) {
    throw DataError("code " + action + " takes " + std::to_string(wanted) + " code file(s)");
  }
  std::vector<EvenSetCode> codes;
  for (const auto& f : o.files) codes.push_back(parse_code(read_json_file(f)));
  std::ostringstream text;
  if (action == "info") {
    const EvenSetCode& c = codes.front();
    text << weight_profile(c) << "\n"
         << "mu = " << c.mu() << ", dim = " << c.dim() << ", strict dim = " << c.strict_dim() << "\n";
    for (const auto& [weight, count] : weight_enumerator(c)) {
      text << "  weight " << weight << ": " << count.weak << " weak, " << count.strict << " strict\n";
    }
    json payload = code_info_json(c);
    payload["command"] = "code info";
    payload["code"] = to_json(c);
    return finish(kOk, text, std::move(payload), o);
  }
  if (action == "canonical") {
    const auto bytes = canonical_form(codes.front());
    const EvenSetCode canonical = canonical_code(codes.front());
    text << hex_bytes(bytes) << "\n";
    return finish(kOk, text,
                  json{{"command", "code canonical"}, {"canonical", hex_bytes(bytes)}, {"code", to_json(canonical)}},
                  o);
  }
  const bool iso = is_isomorphic(codes[0], codes[1]);
  text << (iso ? "isomorphic\n" : "not isomorphic\n");
  return finish(iso ? kOk : kVerificationFailed, text, json{{"command", "code isomorphic"}, {"isomorphic", iso}}, o);
}

CommandResult run_symmetroid_scan(const Options& o) {
  const SymmetricLinearMatrix a = [&] {
    if (!o.matrix.empty()) return parse_symmetric_matrix(read_json_file(o.matrix));
    if (o.family == "uniform") return SymmetricLinearMatrix::uniform_random(o.prime, o.seed);
    return SymmetricLinearMatrix::six_point_web(o.prime, o.seed);
  }();
  ScanOptions options;
  options.degeneracy_threshold = o.threshold;
  const ScanResult scan = scan_nodes_fp(a, options);

  std::ostringstream text;
  text << "p = " << scan.prime << ": " << scan.points.size() << " point(s) of rank <= 2"
       << (scan.degenerate ? " (degenerate: positive-dimensional locus suspected)" : "") << "\n";
  if (scan.points.size() <= 64) {
    for (const FpPoint& p : scan.points) text << "  " << point_string(p) << "\n";
  }
  json payload{{"command", "symmetroid-scan"},
               {"matrix", to_json(a)},
               {"count", scan.points.size()},
               {"degenerate", scan.degenerate},
               {"note", kFiniteFieldNote}};

  int exit_code = kVerificationFailed;
  if (!scan.degenerate && scan.points.size() == 10) {
    const QuadricCertificate cert = no_quadric_certificate(scan.points, scan.prime);
    text << "quadric evaluation rank " << cert.rank << ": "
         << (cert.certified ? "no quadric through the ten nodes" : "a quadric passes through the ten nodes")
         << "\n";
    payload["certificate"] = {{"rank", cert.rank}, {"certified", cert.certified}};
    if (cert.certified) exit_code = kOk;
  } else {
    text << "no certificate: the scan did not find exactly ten isolated nodes\n";
  }
  text << kFiniteFieldNote << "\n";

  if (!scan.degenerate) {
    const Field field = Field::prime(scan.prime);
    std::vector<Point> nodes;
    for (const FpPoint& p : scan.points) {
      nodes.push_back({Scalar::residue(field, p[0]), Scalar::residue(field, p[1]), Scalar::residue(field, p[2]),
                       Scalar::residue(field, p[3])});
    }
    const HomogeneousForm det = a.determinant();
    std::optional<HomogeneousForm> surface;
    if (!det.is_zero()) surface = det;
    payload["nodes"] = to_json(make_node_configuration(4, field, std::move(nodes), std::move(surface)));
  } else {
    payload["points"] = points_json(scan.points);
  }
  return finish(exit_code, text, std::move(payload), o);
}

CommandResult run_hilbert_check(const Options& o) {
  const HilbertCheck check = symmetroid_hilbert_check(o.order);
  std::ostringstream text;
  text << "t^3(6t^2 - 15t + 10)/(t - 1)^4 =";
  json coefficients = json::array();
  for (std::size_t i = 0; i < check.coefficients.size() && i <= std::max<std::size_t>(o.order, 5); ++i) {
    text << (i == 0 ? " " : " + ") << check.coefficients[i].get_str() << "t^" << i;
    coefficients.push_back(check.coefficients[i].get_str());
  }
  text << " + ...\n" << (check.ok ? "matches 10, 25, 46 at t^3..t^5 and 0 below\n" : "MISMATCH\n");
  return finish(check.ok ? kOk : kVerificationFailed, text,
                json{{"command", "hilbert-check"}, {"ok", check.ok}, {"coefficients", std::move(coefficients)}}, o);
}

CommandResult invalid_data(const std::exception& e) {
  CommandResult r;
  r.exit_code = kInvalidData;
  r.error = std::string("error: ") + e.what() + "\n";
  return r;
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Exact computations for nodal double solids and their even-set codes", "nodalcodes"};
  app.require_subcommand(1);

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Print a JSON payload instead of text"); };
  auto add_nodes = [&](CLI::App* sub) {
    sub->add_option("--nodes", o.nodes, "Node file (JSON)");
    sub->add_option("--surface", o.surface, "File holding the surface polynomial");
  };

  auto* defect_cmd = app.add_subcommand("defect", "Defect of the double solid branched along a nodal surface");
  defect_cmd->add_option("--degree", o.degree, "Even degree b of the branch surface");
  defect_cmd->add_option("--mu", o.mu, "Number of nodes");
  defect_cmd->add_option("--dim-m", o.dim_m, "Dimension of forms of degree 3b/2-4 through the nodes");
  defect_cmd->add_option("--code", o.code, "Code file; also report the 2-torsion rank");
  add_nodes(defect_cmd);
  add_json(defect_cmd);

  auto* vanishing_cmd = app.add_subcommand("vanishing-dim", "Dimension of forms of a degree vanishing at the nodes");
  vanishing_cmd->add_option("--degree", o.degree, "Degree of the forms (default 3b/2-4)");
  add_nodes(vanishing_cmd);
  add_json(vanishing_cmd);

  auto* verify_cmd = app.add_subcommand("verify-nodes", "Check that every listed point is a node of the surface");
  add_nodes(verify_cmd);
  add_json(verify_cmd);

  auto* bounds_cmd = app.add_subcommand("bounds", "Lower bounds on the defect and node-count limits");
  bounds_cmd->add_option("--degree", o.degree, "Even degree b")->required();
  bounds_cmd->add_option("--mu", o.mu, "Number of nodes")->required();
  bounds_cmd->add_flag("--paper-closed-form", o.paper_closed_form, "Use the printed closed form of Beauville's bound");
  add_json(bounds_cmd);

  auto* classify_cmd = app.add_subcommand("classify-quartic", "Classify the codes of a mu-nodal quartic");
  classify_cmd->add_option("--mu", o.mu, "Number of nodes (1..16)")->required();
  classify_cmd->add_flag("--audit", o.audit, "Also list weight-admissible codes excluded by the dimension bounds");
  add_json(classify_cmd);

  auto* code_cmd = app.add_subcommand("code", "Inspect even-set codes");
  code_cmd->require_subcommand(1);
  for (const char* name : {"info", "canonical", "isomorphic"}) {
    auto* sub = code_cmd->add_subcommand(name);
    sub->add_option("files", o.files, "Code file(s)")->required();
    add_json(sub);
  }
  code_cmd->get_subcommand("info")->description("Dimension, weight profile and weight enumerator");
  code_cmd->get_subcommand("canonical")->description("Canonical form under node permutations");
  code_cmd->get_subcommand("isomorphic")->description("Exit 0 if the two codes agree up to node permutation");

  auto* scan_cmd = app.add_subcommand("symmetroid-scan", "Rank-2 locus of a symmetric matrix of linear forms over F_p");
  scan_cmd->add_option("--matrix", o.matrix, "Matrix file (JSON); otherwise a seeded random matrix");
  scan_cmd->add_option("--prime", o.prime, "Odd prime p <= 1024")->capture_default_str();
  scan_cmd->add_option("--seed", o.seed, "Seed of the random matrix")->capture_default_str();
  scan_cmd->add_option("--family", o.family, "Random family")
      ->check(CLI::IsMember({"six-point", "uniform"}))
      ->capture_default_str();
  scan_cmd->add_option("--threshold", o.threshold, "Point count flagging a degenerate locus")->capture_default_str();
  add_json(scan_cmd);

  auto* hilbert_cmd = app.add_subcommand("hilbert-check", "Expand the symmetroid Hilbert series");
  hilbert_cmd->add_option("--order", o.order, "Highest power of t to print")->capture_default_str();
  add_json(hilbert_cmd);

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    result.exit_code = code == 0 ? kOk : kUsage;
    result.text = out.str();
    result.error = err.str();
    return result;
  }

  try {
    if (defect_cmd->parsed()) return run_defect(o);
    if (vanishing_cmd->parsed()) return run_vanishing_dim(o);
    if (verify_cmd->parsed()) return run_verify_nodes(o);
    if (bounds_cmd->parsed()) return run_bounds(o);
    if (classify_cmd->parsed()) return run_classify(o);
    if (scan_cmd->parsed()) return run_symmetroid_scan(o);
    if (hilbert_cmd->parsed()) return run_hilbert_check(o);
    for (const char* name : {"info", "canonical", "isomorphic"}) {
      if (code_cmd->get_subcommand(name)->parsed()) return run_code(name, o);
    }
  } catch (const DataError& e) {
    return invalid_data(e);
  } catch (const DomainError& e) {
    return invalid_data(e);
  } catch (const ResourceError& e) {
    return invalid_data(e);
  } catch (const InconsistencyError& e) {
    return invalid_data(e);
  }
  result.exit_code = kUsage;
  result.error = app.help();
  return result;
}

}  // namespace nodalcodes::cli
