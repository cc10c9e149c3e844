#include "zagreb/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "zagreb/bounds.hpp"
#include "zagreb/enumeration.hpp"
#include "zagreb/families.hpp"
#include "zagreb/graph_io.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/report_json.hpp"

namespace zagreb {
namespace {

using nlohmann::json;

std::string fmt_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string bound_side_text(const BoundCheck& c, const std::variant<Rational, double>& side) {
  if (c.exact()) return std::get<Rational>(side).to_string();
  return fmt_real(std::get<double>(side));
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

void print_check_text(std::ostream& out, const BoundCheck& c) {
  out << "  " << c.name << ": " << bound_side_text(c, c.lhs)
      << (c.relation == Relation::greater_equal ? " >= " : " <= ") << bound_side_text(c, c.rhs)
      << "  satisfied=" << yes_no(c.satisfied) << " tight=" << yes_no(c.tight)
      << " equality_condition=" << yes_no(c.equality_condition_met) << "\n";
}

struct NamedGraph {
  std::string id;
  Graph graph;
};

long long parse_int(const std::string& text, const std::string& what) {
  try {
    size_t used = 0;
    long long value = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    fail(errc::syntax_error, "expected integer for " + what + ", got \"" + text + "\"");
  }
}

Graph graph_from_family(const std::string& spec) {
  if (spec == "s6k3") return make_disconnected_counterexample();
  const size_t colon = spec.find(':');
  if (colon == std::string::npos)
    fail(errc::syntax_error, "family spec \"" + spec + "\" (want name:params, e.g. star:6 or cab:12,2)");
  const std::string name = spec.substr(0, colon);
  const std::string params = spec.substr(colon + 1);
  if (name == "cab") {
    const size_t comma = params.find(',');
    if (comma == std::string::npos) fail(errc::syntax_error, "cab wants two parameters, e.g. cab:12,2");
    return make_counterexample_family(parse_int(params.substr(0, comma), "a"),
                                      parse_int(params.substr(comma + 1), "b"));
  }
  const long long size = parse_int(params, "family size");
  if (name == "star") return make_named(NamedFamily::star, size);
  if (name == "cycle") return make_named(NamedFamily::cycle, size);
  if (name == "path") return make_named(NamedFamily::path, size);
  if (name == "complete") return make_named(NamedFamily::complete, size);
  fail(errc::syntax_error, "unknown family \"" + name + "\"");
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Edge-list content starts with a digit (the "n m" header); every graph6
// byte is >= 63, so the two formats cannot be confused.
std::vector<NamedGraph> load_graphs(const std::string& family, const std::string& path) {
  if (!family.empty() && !path.empty())
    fail(errc::syntax_error, "give either --family or an input file, not both");
  if (family.empty() && path.empty()) fail(errc::syntax_error, "no input: give --family or a file");
  if (!family.empty()) return {{family, graph_from_family(family)}};

  const std::string content = read_input(path);
  const size_t first = content.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) fail(errc::syntax_error, path + ": empty input");
  if (content[first] >= '0' && content[first] <= '9')
    return {{path, parse_edge_list(content)}};

  std::vector<NamedGraph> graphs;
  std::istringstream in(content);
  for_each_graph6_line(in, [&](const Graph& g, long long line_no) {
    graphs.push_back({path + ":" + std::to_string(line_no), g});
  });
  if (graphs.empty()) fail(errc::syntax_error, path + ": no graphs found");
  return graphs;
}

struct CommonOptions {
  std::string family;
  std::string path;
  std::string format = "text";

  void attach(CLI::App* cmd) {
    cmd->add_option("file", path, "graph file: edge list or graph6 lines ('-' for stdin)");
    cmd->add_option("--family", family,
                    "named graph: star:n, cycle:n, path:n, complete:n, cab:a,b, s6k3");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  }
  bool json_output() const { return format == "json"; }
};

// ---- index ----------------------------------------------------------------

struct IndexOptions {
  CommonOptions common;
  std::vector<double> lambdas;
};

void cmd_index(const IndexOptions& opt, std::ostream& out) {
  for (const NamedGraph& input : load_graphs(opt.common.family, opt.common.path)) {
    const IndexReport report = compare_indices(input.graph);
    std::vector<std::pair<VariableIndexValue, VariableIndexValue>> variable;
    variable.reserve(opt.lambdas.size());
    for (double lambda : opt.lambdas)
      variable.emplace_back(variable_first_zagreb(input.graph, lambda),
                            variable_second_zagreb(input.graph, lambda));

    if (opt.common.json_output()) {
      json j = report;
      j["command"] = "index";
      j["input"] = input.id;
      if (!variable.empty()) {
        json list = json::array();
        for (const auto& [vm1, vm2] : variable)
          list.push_back({{"lambda", vm1.lambda}, {"m1", vm1.value}, {"m2", vm2.value}});
        j["variable"] = list;
      }
      out << j.dump() << "\n";
    } else {
      out << "index " << input.id << ": n=" << report.n << " m=" << report.m << " M1=" << report.m1
          << " M2=" << report.m2 << " comparison=" << wide_to_string(report.comparison)
          << " verdict=" << verdict_name(report.verdict) << "\n";
      for (const auto& [vm1, vm2] : variable)
        out << "  lambda=" << fmt_real(vm1.lambda) << ": M1=" << fmt_real(vm1.value)
            << " M2=" << fmt_real(vm2.value) << "\n";
    }
  }
}

// ---- bounds ---------------------------------------------------------------

struct BoundsOptions {
  CommonOptions common;
  bool das = false;
  std::vector<double> lambdas;
};

void cmd_bounds(const BoundsOptions& opt, std::ostream& out) {
  for (const NamedGraph& input : load_graphs(opt.common.family, opt.common.path)) {
    std::vector<BoundCheck> checks;
    std::vector<std::pair<std::string, std::string>> errors;
    auto attempt = [&](const char* name, auto&& make) {
      try {
        make();
      } catch (const Error& e) {
        errors.emplace_back(name, e.what());
      }
    };
    attempt("m1_lower", [&] { checks.push_back(check_m1_lower(input.graph)); });
    attempt("m2_lower", [&] { checks.push_back(check_m2_lower(input.graph)); });
    attempt("common_upper", [&] {
      auto [first, second] = check_common_upper(input.graph);
      checks.push_back(first);
      checks.push_back(second);
    });
    if (opt.das)
      attempt("das_upper", [&] { checks.push_back(check_das_upper(input.graph)); });
    for (double lambda : opt.lambdas) {
      attempt("var_m1_lower", [&] { checks.push_back(check_variable_m1_lower(input.graph, lambda)); });
      attempt("var_m2_lower", [&] { checks.push_back(check_variable_m2_lower(input.graph, lambda)); });
      attempt("var_upper", [&] {
        auto [first, second] = check_variable_upper(input.graph, lambda);
        checks.push_back(first);
        checks.push_back(second);
      });
    }

    if (opt.common.json_output()) {
      json j;
      j["command"] = "bounds";
      j["input"] = input.id;
      j["checks"] = checks;
      if (!errors.empty()) {
        json skipped = json::array();
        for (const auto& [name, message] : errors)
          skipped.push_back({{"name", name}, {"error", message}});
        j["skipped"] = skipped;
      }
      out << j.dump() << "\n";
    } else {
      out << "bounds " << input.id << ":\n";
      for (const BoundCheck& c : checks) print_check_text(out, c);
      for (const auto& [name, message] : errors)
        out << "  " << name << ": skipped (" << message << ")\n";
    }
  }
}

// ---- threshold ------------------------------------------------------------

struct ThresholdOptions {
  long long b_from = 2;
  long long b_to = -1;  // defaults to b_from
  std::string format = "text";
};

void cmd_threshold(const ThresholdOptions& opt, std::ostream& out) {
  const long long b_to = opt.b_to < 0 ? opt.b_from : opt.b_to;
  if (b_to < opt.b_from) fail(errc::parameter_out_of_range, "empty b range");
  for (long long b = opt.b_from; b <= b_to; ++b) {
    const ThresholdResult r = threshold_a(b);
    if (opt.format == "json") {
      json j = r;
      j["command"] = "threshold";
      out << j.dump() << "\n";
    } else {
      out << "threshold b=" << r.b << ": D=" << r.discriminant << " a_min=" << r.a_min << "\n";
    }
  }
}

// ---- subdivide ------------------------------------------------------------

void cmd_subdivide(const CommonOptions& opt, std::ostream& out) {
  for (const NamedGraph& input : load_graphs(opt.family, opt.path)) {
    const Graph& g = input.graph;
    const Graph s = subdivide(g);
    const long long m1 = first_zagreb(g);
    const long long m = g.edge_count();
    const long long m1_s = first_zagreb(s);
    const long long m2_s = second_zagreb(s);
    const bool identity_m1 = m1_s == m1 + 4 * m;
    const bool identity_m2 = m2_s == 2 * m1;

    std::optional<BoundCheck> theorem;
    std::string theorem_error;
    try {
      theorem = check_subdivision_theorem(g);
    } catch (const Error& e) {
      theorem_error = e.what();
    }

    if (opt.json_output()) {
      json j;
      j["command"] = "subdivide";
      j["input"] = input.id;
      j["n"] = g.vertex_count();
      j["m"] = m;
      j["s_n"] = s.vertex_count();
      j["s_m"] = s.edge_count();
      j["s_graph6"] = write_graph6(s);
      j["s_edge_list"] = edge_list_line(s);
      j["m1"] = m1;
      j["m1_s"] = m1_s;
      j["m2_s"] = m2_s;
      j["identity_m1_ok"] = identity_m1;
      j["identity_m2_ok"] = identity_m2;
      if (theorem) j["theorem"] = *theorem;
      else j["theorem_error"] = theorem_error;
      out << j.dump() << "\n";
    } else {
      out << "subdivide " << input.id << ": n=" << g.vertex_count() << " m=" << m << " -> n="
          << s.vertex_count() << " m=" << s.edge_count() << "\n";
      out << "  M1(S)=" << m1_s << " (M1+4m=" << m1 + 4 * m << ", "
          << (identity_m1 ? "ok" : "MISMATCH") << ")  M2(S)=" << m2_s << " (2*M1=" << 2 * m1 << ", "
          << (identity_m2 ? "ok" : "MISMATCH") << ")\n";
      if (theorem) print_check_text(out, *theorem);
      else out << "  subdivision: skipped (" << theorem_error << ")\n";
      out << "  graph6(S)=" << write_graph6(s) << "\n";
    }
  }
}

// ---- scan -----------------------------------------------------------------

struct ScanOptions {
  int n_max = 7;
  std::string corpus;
  std::string class_name;
  bool connected = false;
  int jobs = 1;
  std::vector<std::string> checks;
  std::string format = "text";
};

void cmd_scan(const ScanOptions& opt, std::ostream& out) {
  ScanConfig config;
  config.n_max = opt.n_max;
  if (!opt.corpus.empty()) config.corpus_path = opt.corpus;
  config.connected_only = opt.connected;
  config.jobs = opt.jobs;
  if (!opt.checks.empty()) config.checks = opt.checks;

  if (!opt.class_name.empty()) {
    if (opt.class_name == "tree") config.class_filter = ClassFilter::tree;
    else if (opt.class_name == "unicyclic") config.class_filter = ClassFilter::unicyclic;
    else if (opt.class_name == "chemical") config.class_filter = ClassFilter::chemical;
    else if (opt.class_name.starts_with("cyclic:")) {
      config.class_filter = ClassFilter::k_cyclic;
      config.cycle_rank = parse_int(opt.class_name.substr(7), "cycle rank");
    } else {
      fail(errc::syntax_error, "unknown class \"" + opt.class_name +
                                   "\" (want tree, unicyclic, chemical or cyclic:<k>)");
    }
  }

  const ScanReport report = scan(config);

  if (opt.format == "json") {
    json j = report;
    j["command"] = "scan";
    j["source"] = config.corpus_path ? "corpus" : "exhaustive";
    if (config.corpus_path) j["corpus"] = *config.corpus_path;
    else j["n_max"] = config.n_max;
    j["connected_only"] = config.connected_only;
    j["class"] = opt.class_name.empty() ? "all" : opt.class_name;
    j["checks"] = config.checks;
    out << j.dump() << "\n";
  } else {
    out << "scan " << (config.corpus_path ? "corpus " + *config.corpus_path
                                          : "exhaustive n<=" + std::to_string(config.n_max));
    if (!opt.class_name.empty()) out << " class=" << opt.class_name;
    if (config.connected_only) out << " connected";
    out << "\n";
    out << "  scanned=" << report.total_scanned << " skipped_edgeless=" << report.skipped_edgeless
        << "\n";
    out << "  holds_strict=" << report.holds_strict
        << " holds_with_equality=" << report.holds_with_equality << " fails=" << report.fails
        << "\n";
    long long violations = 0;
    for (const auto& [name, count] : report.bound_violations) violations += count;
    long long mismatches = 0;
    for (const auto& [name, count] : report.tightness_mismatches) mismatches += count;
    out << "  bound_violations=" << violations << " tightness_mismatches=" << mismatches << "\n";
    const size_t shown = std::min<size_t>(report.failing.size(), 10);
    for (size_t i = 0; i < shown; ++i) out << "  failing: " << report.failing[i] << "\n";
    if (report.failing_total > static_cast<long long>(shown))
      out << "  ... " << report.failing_total << " failing graphs in total\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zagreb index toolkit: exact M1/M2 comparison, bounds, families, scans"};
  app.name("zagreb");
  app.require_subcommand(1);

  IndexOptions index_opt;
  CLI::App* index_cmd = app.add_subcommand("index", "compute M1, M2 and the exact comparison verdict");
  index_opt.common.attach(index_cmd);
  index_cmd->add_option("--lambda", index_opt.lambdas, "also evaluate variable indices at lambda");

  BoundsOptions bounds_opt;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "verify degree-based bounds with equality conditions");
  bounds_opt.common.attach(bounds_cmd);
  bounds_cmd->add_flag("--das", bounds_opt.das, "include the Das upper bound (needs n >= 2)");
  bounds_cmd->add_option("--variable", bounds_opt.lambdas, "add variable-index checks at lambda");

  ThresholdOptions threshold_opt;
  CLI::App* threshold_cmd =
      app.add_subcommand("threshold", "smallest a making C(a,b) fail, per b (exact integer scan)");
  threshold_cmd->add_option("b", threshold_opt.b_from, "first b (>= 2)")->required();
  threshold_cmd->add_option("b_end", threshold_opt.b_to, "last b (defaults to first)");
  threshold_cmd->add_option("--format", threshold_opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CommonOptions subdivide_opt;
  CLI::App* subdivide_cmd =
      app.add_subcommand("subdivide", "build the subdivision graph and verify its identities");
  subdivide_opt.attach(subdivide_cmd);

  ScanOptions scan_opt;
  CLI::App* scan_cmd = app.add_subcommand("scan", "scan enumerated or corpus graphs, aggregate verdicts");
  scan_cmd->add_option("--n-max", scan_opt.n_max, "exhaustive labeled enumeration up to n (1..8)");
  scan_cmd->add_option("--corpus", scan_opt.corpus, "graph6 corpus file instead of enumeration");
  scan_cmd->add_option("--class", scan_opt.class_name, "filter: tree, unicyclic, chemical, cyclic:<k>");
  scan_cmd->add_flag("--connected", scan_opt.connected, "connected graphs only");
  scan_cmd->add_option("--jobs", scan_opt.jobs, "worker threads (result is independent of this)");
  scan_cmd->add_option("--checks", scan_opt.checks,
                       "subset of: conjecture, m1_lower, m2_lower, common_upper, das_upper");
  scan_cmd->add_option("--format", scan_opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (index_cmd->parsed()) cmd_index(index_opt, out);
    else if (bounds_cmd->parsed()) cmd_bounds(bounds_opt, out);
    else if (threshold_cmd->parsed()) cmd_threshold(threshold_opt, out);
    else if (subdivide_cmd->parsed()) cmd_subdivide(subdivide_opt, out);
    else if (scan_cmd->parsed()) cmd_scan(scan_opt, out);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace zagreb
