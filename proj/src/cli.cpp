#include "twosc/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "twosc/canonical.hpp"
#include "twosc/enumeration.hpp"
#include "twosc/io.hpp"
#include "twosc/serialize.hpp"

namespace twosc {
namespace {

constexpr const char* kFooter = R"(Examples:
  twosc check 'Cl'                     # C4 as graph6
  twosc check --input graph.txt --format table
  twosc decompose 'Cl' | twosc build --canonical
  twosc reduce --input example.txt
  twosc sample --seed 7 --budget 12 --format graph6
  twosc enumerate --n 5
  twosc verify --n-max 7 --workers 4 --format table

Exit status: 0 success, 1 property does not hold, 2 invalid input.)";

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph;
  std::string input;
  std::string format;
  std::string item8 = "printed";
  std::uint64_t seed = 1;
  int budget = 10;
  int n = 0;
  int n_max = 7;
  int full_battery_max = 7;
  int workers = 1;
  bool canonical = false;
};

Item8Reading reading_of(const Options& o) {
  return o.item8 == "symmetric" ? Item8Reading::kSymmetric : Item8Reading::kPrinted;
}

std::string read_all(const Options& o, std::istream& in) {
  if (o.input.empty() || o.input == "-") {
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  }
  std::ifstream file(o.input);
  if (!file) throw InputError("cannot open " + o.input);
  return std::string((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
}

std::vector<Graph> input_graphs(const Options& o, std::istream& in) {
  if (!o.graph.empty()) return {from_graph6(o.graph)};
  std::istringstream text(read_all(o, in));
  std::vector<Graph> graphs = read_graphs(text);
  if (graphs.empty()) throw InputError("no graph in input");
  return graphs;
}

Graph single_graph(const Options& o, std::istream& in) {
  std::vector<Graph> graphs = input_graphs(o, in);
  if (graphs.size() != 1) throw InputError("expected exactly one graph, got " + std::to_string(graphs.size()));
  return graphs.front();
}

std::string set_text(VertexSet s) {
  std::string out = "{";
  for (int v : members(s)) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  int status = kExitOk;
  for (const Graph& g : input_graphs(o, in)) {
    const json report = check_report(g);
    const bool is_2sc = report["verdict"]["two_self_centered"].get<bool>();
    if (!is_2sc) status = kExitPropertyFalse;
    if (o.format == "json") {
      out << report.dump() << '\n';
      continue;
    }
    out << to_graph6(g) << ": ";
    if (!is_2sc) {
      out << "not 2-self-centered";
      if (!report["verdict"]["violating_vertex"].is_null()) {
        out << "; vertex " << report["verdict"]["violating_vertex"] << " has degree outside [2, n-2]";
      }
      if (!report["verdict"]["violating_pair"].is_null()) {
        const auto& p = report["verdict"]["violating_pair"];
        out << "; pair " << p[0] << "," << p[1] << " has no common neighbor";
      }
      out << '\n';
      continue;
    }
    out << "2-self-centered"
        << ", edge-maximal=" << report["edge_maximal"]["edge_maximal"]
        << ", edge-minimal=" << report["edge_minimal"]["edge_minimal"]
        << ", triangles=" << report["triangles"].size()
        << ", critical-triples=" << report["critical_triples"].size() << '\n';
  }
  return status;
}

int cmd_decompose(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Graph g = single_graph(o, in);
  if (!is_two_self_centered(g).is_2sc || !is_triangle_free(g)) {
    err << "decompose: input is not a triangle-free 2-self-centered graph\n";
    return kExitPropertyFalse;
  }
  const GcbDecomposition d = decompose_triangle_free(g, reading_of(o));
  if (o.format == "json") {
    out << json(d).dump(2) << '\n';
  } else {
    out << "k=" << d.spec.k << " l=" << d.spec.l << " r=" << d.spec.r() << " s=" << d.spec.s()
        << " |X|=" << d.spec.t() << '\n';
    for (std::size_t v = 0; v < d.roles.size(); ++v) {
      out << "  vertex " << v << " -> " << to_string(d.roles[v].role) << d.roles[v].index + 1 << '\n';
    }
    for (int i = 0; i < d.spec.r(); ++i) out << "  A" << i + 1 << " = " << set_text(d.spec.witness.a_family[i]) << '\n';
    for (int j = 0; j < d.spec.s(); ++j) out << "  B" << j + 1 << " = " << set_text(d.spec.witness.b_family[j]) << '\n';
  }
  const GcbValidation validation = validate_gcb_spec(d.spec, reading_of(o));
  if (!validation.ok()) {
    err << "decompose: decomposition does not validate under the " << o.item8 << " reading\n";
    return kExitPropertyFalse;
  }
  return kExitOk;
}

void emit_graph(const Graph& g, const std::string& format, std::ostream& out) {
  if (format == "graph6") {
    out << to_graph6(g) << '\n';
  } else if (format == "dot") {
    out << to_dot(g);
  } else {
    out << json(g).dump() << '\n';
  }
}

int cmd_build(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  GcbSpec spec;
  try {
    spec = json::parse(read_all(o, in)).get<GcbSpec>();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed spec document: ") + e.what());
  }
  const GcbValidation validation = validate_gcb_spec(spec, reading_of(o));
  if (!validation.ok()) {
    err << "build: spec fails validation\n" << json(validation).dump(2) << '\n';
    return kExitPropertyFalse;
  }
  Graph g = build_gcb(spec, reading_of(o));
  if (o.canonical) g = canonical_form(g);
  emit_graph(g, o.format, out);
  return kExitOk;
}

int cmd_reduce(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Graph g = single_graph(o, in);
  if (!is_two_self_centered(g).is_2sc) {
    err << "reduce: input is not 2-self-centered\n";
    return kExitPropertyFalse;
  }
  const ReductionTrace trace = reduce_to_triangle_free(g);
  if (o.format == "json") {
    out << json(trace).dump(2) << '\n';
  } else {
    for (const ReductionStep& s : trace.steps) {
      out << "remove " << s.removed.u << "-" << s.removed.v << ", add";
      for (const Edge& e : s.added) out << ' ' << e.u << "-" << e.v;
      out << " (triangles " << s.triangles_before << " -> " << s.triangles_after << ")\n";
    }
    out << (trace.succeeded ? "triangle-free: " : "stopped: ") << to_graph6(trace.final);
    if (!trace.succeeded) out << " (" << trace.stop_reason << ")";
    out << '\n';
  }
  return trace.succeeded ? kExitOk : kExitPropertyFalse;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const GcbSpec spec = sample_gcb_spec(o.budget, o.seed, reading_of(o));
  if (o.format == "json") {
    out << json(spec).dump(2) << '\n';
  } else {
    emit_graph(build_gcb(spec, reading_of(o)), o.format, out);
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const int lo = o.n > 0 ? o.n : 1;
  const int hi = o.n > 0 ? o.n : o.n_max;
  for (int n = lo; n <= hi; ++n) {
    for (const Graph& g : enumerate_connected(n)) out << to_graph6(g) << '\n';
  }
  return kExitOk;
}

void print_summary_table(const VerificationSummary& s, std::ostream& out) {
  out << std::left << std::setw(44) << "statement" << std::right << std::setw(6) << "n" << std::setw(10)
      << "examined" << std::setw(10) << "passes" << std::setw(10) << "failures" << '\n';
  for (const auto& r : s.reports) {
    const std::string range = r.examined ? std::to_string(r.n_min) + "-" + std::to_string(r.n_max) : "-";
    out << std::left << std::setw(44) << r.theorem << std::right << std::setw(6) << range << std::setw(10)
        << r.examined << std::setw(10) << r.passes << std::setw(10) << r.counterexamples.size() << '\n';
    for (const auto& c : r.counterexamples) out << "    " << c.graph6 << "  " << c.detail << '\n';
  }
  out << '\n'
      << std::setw(3) << "n" << std::setw(10) << "graphs" << std::setw(8) << "2sc" << std::setw(10) << "minimal"
      << std::setw(10) << "maximal" << std::setw(12) << "tri-free" << std::setw(16) << "minimal+tri" << '\n';
  for (const auto& row : s.counts) {
    out << std::setw(3) << row.n << std::setw(10) << row.graphs << std::setw(8) << row.two_sc << std::setw(10)
        << row.edge_minimal << std::setw(10) << row.edge_maximal << std::setw(12) << row.triangle_free
        << std::setw(16) << row.minimal_with_triangles << '\n';
  }
  out << '\n';
  for (const auto& f : s.findings) {
    out << f.id << ": " << f.count << " of " << f.examined << '\n';
    for (const auto& e : f.examples) out << "    " << e << '\n';
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions options;
  options.n_max = o.n_max;
  options.full_battery_max = o.full_battery_max;
  options.workers = o.workers;
  options.reading = reading_of(o);
  if (!o.input.empty()) options.source = o.input;
  if (!options.source && (o.n_max < 1 || o.n_max > kMaxEnumerationOrder)) {
    throw InputError("--n-max must lie in 1.." + std::to_string(kMaxEnumerationOrder));
  }
  const VerificationSummary summary = verify_all(options);
  if (o.format == "json") {
    out << json(summary).dump(2) << '\n';
  } else {
    print_summary_table(summary, out);
  }
  return summary.ok() ? kExitOk : kExitPropertyFalse;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recognize, certify and enumerate 2-self-centered graphs", "twosc"};
  app.footer(kFooter);
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> item8_choices{"printed", "symmetric"};
  auto add_graph_input = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph, "Inline graph6 record");
    sub->add_option("-i,--input", o.input, "Input file (graph6 lines or edge list); '-' for stdin");
  };
  std::vector<std::pair<CLI::App*, std::string>> default_format;
  auto add_format = [&](CLI::App* sub, std::vector<std::string> choices) {
    default_format.emplace_back(sub, choices.front());
    sub->add_option("-f,--format", o.format, "Output format (default " + choices.front() + ")")
        ->check(CLI::IsMember(choices));
  };

  auto* check = app.add_subcommand("check", "Recognize and certify 2-self-centered graphs");
  add_graph_input(check);
  auto* decompose = app.add_subcommand("decompose", "GCB spec of a triangle-free 2-self-centered graph");
  add_graph_input(decompose);
  decompose->add_option("--item8", o.item8, "Reading of the l = 0 special case")->check(CLI::IsMember(item8_choices));
  auto* build = app.add_subcommand("build", "Graph from a GCB spec document");
  build->add_option("-i,--input", o.input, "Spec document; '-' or omitted for stdin");
  build->add_option("--item8", o.item8, "Reading of the l = 0 special case")->check(CLI::IsMember(item8_choices));
  build->add_flag("--canonical", o.canonical, "Relabel the output canonically");
  auto* reduce = app.add_subcommand("reduce", "Reduce triangles with the star procedure");
  add_graph_input(reduce);
  auto* sample = app.add_subcommand("sample", "Random valid GCB spec");
  sample->add_option("--seed", o.seed, "Random seed");
  sample->add_option("--budget", o.budget, "Maximum vertex count (>= 4)");
  sample->add_option("--item8", o.item8, "Reading of the l = 0 special case")->check(CLI::IsMember(item8_choices));
  auto* enumerate = app.add_subcommand("enumerate", "Connected graphs up to isomorphism, as graph6");
  enumerate->add_option("--n", o.n, "Exact vertex count (1..8)");
  enumerate->add_option("--n-max", o.n_max, "All vertex counts 1..n-max");
  auto* verify = app.add_subcommand("verify", "Run the full statement battery");
  verify->add_option("--n-max", o.n_max, "Largest vertex count");
  verify->add_option("--full-battery-max", o.full_battery_max, "Largest order for the full battery");
  verify->add_option("-i,--input", o.input, "graph6 file instead of the built-in generator");
  verify->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--item8", o.item8, "Reading of the l = 0 special case")->check(CLI::IsMember(item8_choices));

  add_format(check, {"table", "json"});
  add_format(decompose, {"json", "table"});
  add_format(build, {"graph6", "json", "dot"});
  add_format(reduce, {"json", "table"});
  add_format(sample, {"json", "graph6", "dot"});
  add_format(enumerate, {"graph6"});
  add_format(verify, {"table", "json"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "twosc: " << e.what() << '\n';
    return kExitInputError;
  }
  if (o.format.empty()) {
    for (const auto& [sub, format] : default_format) {
      if (sub->parsed()) o.format = format;
    }
  }

  try {
    if (*check) return cmd_check(o, in, out);
    if (*decompose) return cmd_decompose(o, in, out, err);
    if (*build) return cmd_build(o, in, out, err);
    if (*reduce) return cmd_reduce(o, in, out, err);
    if (*sample) return cmd_sample(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const ParseError& e) {
    err << "twosc: parse error at line " << e.line() << ", offset " << e.offset() << ": " << e.what() << '\n';
    return kExitInputError;
  } catch (const InputError& e) {
    err << "twosc: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "twosc: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace twosc
