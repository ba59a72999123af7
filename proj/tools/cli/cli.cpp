#include "cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "cli/edge_list.hpp"
#include "cli/format.hpp"
#include "distspec/distance.hpp"
#include "distspec/error.hpp"
#include "distspec/families.hpp"
#include "distspec/quotient.hpp"

namespace distspec::cli {

NRange parse_n_range(const std::string& text) {
  const auto parse_int = [&](const std::string& s) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("bad value '" + text + "' for --n (expected N or A..B)");
    return value;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = parse_int(text);
    return {n, n};
  }
  NRange r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  if (r.first > r.last) throw UsageError("empty range '" + text + "' for --n");
  return r;
}

Graph build_family(const std::string& family, int n, int k, const std::vector<int>& jumps) {
  if (family == "crown") return build_crown(n);
  if (family == "lcr") return build_lcr(n);
  if (family == "line-crown") return build_line_graph(build_crown(n));
  if (family == "johnson") return build_johnson(n, k);
  if (family == "line-johnson") return build_line_graph(build_johnson(n, k));
  if (family == "cycle") return build_cycle(n);
  if (family == "complete") return build_complete(n);
  if (family == "circulant") return build_circulant(n, jumps);
  throw UsageError("unknown family '" + family +
                   "' (expected crown, lcr, line-crown, johnson, line-johnson, cycle, complete, circulant)");
}

std::optional<SymmetryData> family_symmetry(const std::string& family, int n, int k) {
  // line-crown uses the same vertex order as lcr: edge {i, x_j} sits where (i, j) does.
  if (family == "lcr" || family == "line-crown") return lcr_symmetry(n);
  if (family == "crown") return crown_symmetry(n);
  if (family == "johnson") return johnson_symmetry(n, k);
  if (family == "complete") return johnson_symmetry(n, 1);
  if (family == "cycle" || family == "circulant") return circulant_symmetry(n);
  return std::nullopt;
}

namespace {

struct Source {
  Graph graph;
  std::optional<SymmetryData> symmetry;
  std::string n_label;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

GeneratorSet parse_generators(int degree, const std::vector<std::string>& texts) {
  std::vector<Permutation> gens;
  for (const auto& t : texts) gens.push_back(Permutation::from_cycles(degree, t));
  return GeneratorSet(degree, std::move(gens));
}

void require_single_source(const RunConfig& c) {
  if (c.family.empty() == c.input_path.empty()) throw UsageError("give exactly one of --family or --input");
}

Source load_source(const RunConfig& c, int n) {
  require_single_source(c);
  if (!c.family.empty()) {
    return {build_family(c.family, n, c.k, c.jumps), family_symmetry(c.family, n, c.k), std::to_string(n)};
  }
  Source s{parse_edge_list(read_file(c.input_path), c.input_path), std::nullopt, ""};
  if (!c.transitive_generators.empty() && !c.stabilizer_generators.empty()) {
    s.symmetry = SymmetryData{parse_generators(s.graph.order(), c.transitive_generators),
                              parse_generators(s.graph.order(), c.stabilizer_generators)};
  }
  return s;
}

int single_n(const RunConfig& c) {
  if (!c.family.empty() && c.n.first != c.n.last) throw UsageError("this command takes a single --n value");
  return c.n.first;
}

const SymmetryData* symmetry_for(const RunConfig& c, const Source& s) {
  if (c.method != SpectrumMethod::QuotientAssisted) return nullptr;
  if (!s.symmetry) {
    throw UsageError("quotient-assisted needs symmetry generators: use a vertex-transitive family or pass "
                     "--transitive-gen and --stabilizer-gen");
  }
  return &*s.symmetry;
}

std::string join_values(const std::vector<std::int64_t>& values) {
  std::string s;
  for (std::size_t k = 0; k < values.size(); ++k) s += (k ? " " : "") + std::to_string(values[k]);
  return s;
}

int run_spectrum(const RunConfig& c, std::string& body) {
  const auto source = load_source(c, single_n(c));
  const auto report = is_distance_integral(source.graph, c.method, symmetry_for(c, source));
  body = format_report(report, c.format, source.n_label);
  if (!report.all_checks_pass()) return kExitRefuted;
  return (c.assert_integral && !report.is_distance_integral) ? kExitRefuted : kExitOk;
}

int run_quotient(const RunConfig& c, std::string& body) {
  const auto source = load_source(c, single_n(c));
  const auto d = all_pairs_distances(source.graph);
  std::optional<bool> closed_form_match;
  OrbitPartition partition;
  const bool lcr_like = c.family == "lcr" || c.family == "line-crown";
  if (lcr_like && c.n.first >= 4) {
    partition = lcr_stabilizer_partition(c.n.first);
  } else if (source.symmetry) {
    for (const auto& g : source.symmetry->stabilizer.generators()) {
      if (!is_automorphism(source.graph, g)) throw UsageError("stabilizer generator " + g.to_cycle_string() + " is not an automorphism");
    }
    partition = orbits(source.symmetry->stabilizer);
  } else if (!c.stabilizer_generators.empty()) {
    const auto gens = parse_generators(source.graph.order(), c.stabilizer_generators);
    for (const auto& g : gens.generators()) {
      if (!is_automorphism(source.graph, g)) throw UsageError("generator " + g.to_cycle_string() + " is not an automorphism");
    }
    partition = orbits(gens);
  } else {
    throw UsageError("quotient needs a family with known symmetries or --stabilizer-gen");
  }
  const auto q = quotient_matrix(d, partition);
  if (lcr_like && c.n.first >= 4) closed_form_match = q.matrix == lcr_quotient_closed_form(c.n.first);
  body = format_quotient(source.graph, q, c.format, closed_form_match);
  return closed_form_match.value_or(true) ? kExitOk : kExitRefuted;
}

int run_verify_lcr(const RunConfig& c, std::string& body) {
  if (!c.input_path.empty()) throw UsageError("verify-lcr builds its own graphs; --input is not accepted");
  if (!c.family.empty() && c.family != "lcr") throw UsageError("verify-lcr only applies to --family lcr");
  std::vector<IntegralityReport> reports;
  std::vector<std::string> labels;
  bool all_pass = true;
  std::ostringstream text;
  for (int n = c.n.first; n <= c.n.last; ++n) {
    auto report = verify_lcr_theorem(n);
    const bool pass = report.all_checks_pass();
    all_pass = all_pass && pass;
    if (pass) {
      text << "PASS n=" << n << " " << report.graph << ": distinct " << join_values(report.distinct_values)
           << "; spectrum";
      for (const auto& [value, mult] : report.spectrum.eigenvalues) text << " " << value << "^" << mult;
      text << "\n";
    } else {
      const auto failed = std::find_if(report.checks.begin(), report.checks.end(), [](const Check& k) { return !k.pass; });
      text << "FAIL n=" << n << " " << report.graph << ": stage " << failed->name << ": " << failed->detail << "\n";
    }
    labels.push_back(std::to_string(n));
    reports.push_back(std::move(report));
  }
  body = c.format == OutputFormat::Text ? text.str() : format_reports(reports, c.format, labels);
  return all_pass ? kExitOk : kExitRefuted;
}

int run_scan(const RunConfig& c, std::string& body, std::ostream& err) {
  if (c.family.empty()) throw UsageError("scan needs --family");
  std::vector<IntegralityReport> reports;
  std::vector<std::string> labels;
  bool ok = true;
  for (int n = c.n.first; n <= c.n.last; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const auto source = load_source(c, n);
    auto report = is_distance_integral(source.graph, c.method, symmetry_for(c, source));
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    // Wall time goes to the diagnostic stream so the report stays byte-identical across runs.
    err << "n=" << n << " " << report.graph << ": " << std::fixed << std::setprecision(3) << elapsed.count() << " s\n";
    ok = ok && report.all_checks_pass() && (!c.assert_integral || report.is_distance_integral);
    labels.push_back(std::to_string(n));
    reports.push_back(std::move(report));
  }
  body = format_reports(reports, c.format, labels);
  return ok ? kExitOk : kExitRefuted;
}

int run_distances(const RunConfig& c, std::string& body) {
  const auto source = load_source(c, single_n(c));
  body = format_distances(source.graph, all_pairs_distances(source.graph), c.format);
  return kExitOk;
}

int run_check_dr(const RunConfig& c, std::string& body) {
  const auto source = load_source(c, single_n(c));
  body = format_distance_regularity(source.graph, is_distance_regular(source.graph), c.format);
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::string body;
  int status = kExitOk;
  try {
    switch (config.command) {
      case Command::Spectrum: status = run_spectrum(config, body); break;
      case Command::Quotient: status = run_quotient(config, body); break;
      case Command::VerifyLcr: status = run_verify_lcr(config, body); break;
      case Command::Scan: status = run_scan(config, body, err); break;
      case Command::Distances: status = run_distances(config, body); break;
      case Command::CheckDr: status = run_check_dr(config, body); break;
    }
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitRefuted;
  } catch (const EdgeListError& e) {
    err << "error: " << config.input_path << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (config.output_path.empty()) {
    out << body;
  } else {
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << config.output_path << "'\n";
      return kExitUsage;
    }
    file << body;
  }
  return status;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string n_text;
  std::string method_text = "rank-sweep";
  std::string format_text = "text";

  CLI::App app{"exact distance spectra of graphs via orbit-partition quotients", "distspec"};
  app.require_subcommand(1, 1);

  const auto add_common = [&](CLI::App* sub, bool with_method) {
    sub->add_option("--family", config.family,
                    "graph family: crown, lcr, line-crown, johnson, line-johnson, cycle, complete, circulant");
    sub->add_option("--input", config.input_path, "edge-list file ('p <count>' then 'e <u> <v>' lines)");
    sub->add_option("--n", n_text, "family parameter n, or an inclusive range A..B where accepted");
    sub->add_option("--k", config.k, "subset size for johnson and line-johnson");
    sub->add_option("--jumps", config.jumps, "circulant jumps, comma separated")->delimiter(',');
    sub->add_option("--format", format_text, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--output", config.output_path, "write the report here instead of standard output");
    if (with_method) {
      sub->add_option("--method", method_text, "rank-sweep, char-poly or quotient-assisted")
          ->check(CLI::IsMember({"rank-sweep", "char-poly", "quotient-assisted"}));
      sub->add_option("--transitive-gen", config.transitive_generators,
                      "transitive automorphism in 1-based cycle notation (edge-list input; repeatable)");
      sub->add_option("--stabilizer-gen", config.stabilizer_generators,
                      "stabilizer generator in 1-based cycle notation (edge-list input; repeatable)");
    }
  };

  auto* spectrum = app.add_subcommand("spectrum", "exact distance spectrum of one graph");
  add_common(spectrum, true);
  spectrum->add_flag("--assert-integral", config.assert_integral, "exit 1 if the graph is not distance integral");

  auto* quotient = app.add_subcommand("quotient", "quotient matrix of D over stabilizer orbits");
  add_common(quotient, false);
  quotient->add_option("--stabilizer-gen", config.stabilizer_generators,
                       "stabilizer generator in 1-based cycle notation (edge-list input; repeatable)");

  auto* verify = app.add_subcommand("verify-lcr", "certify the distance spectrum of L(Cr(n)) for each n");
  add_common(verify, false);

  auto* scan = app.add_subcommand("scan", "spectrum of a family over a range of n");
  add_common(scan, true);
  scan->add_flag("--assert-integral", config.assert_integral, "exit 1 if any graph is not distance integral");

  auto* distances = app.add_subcommand("distances", "all-pairs distance matrix");
  add_common(distances, false);

  auto* check_dr = app.add_subcommand("check-dr", "distance-regularity test with intersection array or witness");
  add_common(check_dr, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (!n_text.empty()) {
      config.n = parse_n_range(n_text);
    } else if (!config.family.empty() || verify->parsed()) {
      throw UsageError("--n is required");
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (spectrum->parsed()) config.command = Command::Spectrum;
  else if (quotient->parsed()) config.command = Command::Quotient;
  else if (verify->parsed()) config.command = Command::VerifyLcr;
  else if (scan->parsed()) config.command = Command::Scan;
  else if (distances->parsed()) config.command = Command::Distances;
  else config.command = Command::CheckDr;

  config.method = *parse_spectrum_method(method_text);
  config.format = format_text == "json" ? OutputFormat::Json : format_text == "csv" ? OutputFormat::Csv : OutputFormat::Text;
  return run(config, out, err);
}

}  // namespace distspec::cli
