// lapctl: generate graphs, compute Laplacian spectra, decide single-input
// Laplacian controllability and run the prediction-vs-oracle sweeps.
//
// Exit codes: 0 success, 1 verification or expectation failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lapctl/compose.hpp"
#include "lapctl/controllability.hpp"
#include "lapctl/graph.hpp"
#include "lapctl/io.hpp"
#include "lapctl/spectral.hpp"
#include "lapctl/verify.hpp"

namespace {

using lapctl::io::Json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text << '\n';
      return;
    }
    std::ofstream out(path);
    if (!out) throw lapctl::InvalidArgument("cannot write " + path);
    out << text << '\n';
  }
};

std::vector<lapctl::Vertex> parse_vertex_list(const std::string& s) {
  std::vector<lapctl::Vertex> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw lapctl::InvalidArgument("bad vertex '" + item + "'");
    }
    if (used != item.size() || v < 1)
      throw lapctl::InvalidArgument("bad vertex '" + item + "'");
    out.push_back(static_cast<lapctl::Vertex>(v));
  }
  if (out.empty()) throw lapctl::InvalidArgument("empty vertex list");
  return out;
}

lapctl::ControlMatrix build_inputs(std::size_t n, const std::vector<std::string>& sets) {
  std::vector<std::vector<int>> cols;
  for (const auto& s : sets) {
    std::vector<int> col(n, 0);
    for (auto v : parse_vertex_list(s)) {
      if (v > n)
        throw lapctl::InvalidArgument("input vertex " + std::to_string(v) +
                                      " exceeds graph order " + std::to_string(n));
      col[v - 1] = 1;
    }
    cols.push_back(std::move(col));
  }
  const auto p = cols.size();
  return lapctl::ControlMatrix(n, p, std::move(cols));
}

std::vector<lapctl::Link> parse_links(const std::string& s) {
  std::vector<lapctl::Link> out;
  for (char c : s) {
    if (c == 'D' || c == 'd')
      out.push_back(lapctl::Link::Dominating);
    else if (c == 'T' || c == 't')
      out.push_back(lapctl::Link::Terminal);
    else if (c != ',')
      throw lapctl::InvalidArgument(std::string("bad link '") + c + "', expected D or T");
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lapctl::InvalidArgument("cannot open " + path);
  try {
    Json j;
    in >> j;
    return j;
  } catch (const nlohmann::json::exception& ex) {
    throw lapctl::InvalidArgument(path + ": " + ex.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacian controllability of interconnected graphs"};
  app.require_subcommand(1, 1);
  Output out;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph as JSON");
  std::string family;
  std::size_t gen_k = 0;
  std::string creation;
  gen->add_option("family", family, "path | antiregular | threshold | complete")
      ->required()
      ->check(CLI::IsMember({"path", "antiregular", "threshold", "complete"}));
  gen->add_option("--k", gen_k, "Vertex count");
  gen->add_option("--creation", creation, "Threshold creation string of U/J steps");
  gen->add_option("-o,--output", out.path, "Output file (default stdout)");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Laplacian eigendecomposition as JSON");
  std::string spectrum_file;
  double rtol = 1e-9;
  bool spectrum_serial = false;
  spectrum->add_option("graph", spectrum_file, "Graph JSON file")->required();
  spectrum->add_option("--rtol", rtol, "Residual tolerance relative to ||L||_inf");
  spectrum->add_flag("--serial", spectrum_serial, "Use the serial reference kernel");
  spectrum->add_option("-o,--output", out.path, "Output file (default stdout)");

  // check
  auto* check = app.add_subcommand("check", "Decide controllability of (L, B)");
  std::string check_file;
  std::vector<std::string> inputs;
  std::string method = "auto";
  std::string expect;
  double horizon = 1.0;
  int steps = 64;
  check->add_option("graph", check_file, "Graph JSON file")->required();
  check->add_option("--input", inputs,
                    "Comma-separated vertices driven by one input; repeat for more inputs")
      ->required()
      ->allow_extra_args(false);
  check->add_option("--method", method, "auto | exact | pbh | gramian | all")
      ->check(CLI::IsMember({"auto", "exact", "pbh", "gramian", "all"}));
  check->add_option("--expect", expect, "controllable | uncontrollable")
      ->check(CLI::IsMember({"controllable", "uncontrollable"}));
  check->add_option("--horizon", horizon, "Gramian horizon T");
  check->add_option("--steps", steps, "Gramian quadrature intervals (>= 16)");
  check->add_option("-o,--output", out.path, "Output file (default stdout)");

  // compose
  auto* compose = app.add_subcommand("compose", "Build a composite graph");
  std::string compose_spec, structure_file, cell_file;
  lapctl::Vertex compose_s = 0;
  std::optional<lapctl::Vertex> predict_w;
  compose->add_option("--spec", compose_spec, "Composite spec JSON file");
  compose->add_option("--structure", structure_file, "Structure graph JSON file");
  compose->add_option("--cell", cell_file, "Cell graph JSON file");
  compose->add_option("--s", compose_s, "Composite vertex of the cell");
  compose->add_option("--predict", predict_w,
                      "Print the predicted verdict for an input at this structure vertex");
  compose->add_option("-o,--output", out.path, "Output file (default stdout)");

  // chain
  auto* chain = app.add_subcommand("chain", "Build a chain of antiregular graphs");
  std::string chain_spec_file, links;
  std::size_t chain_c = 1, chain_k2 = 2, tail = 0;
  std::optional<lapctl::Vertex> tail_attach;
  std::string chain_input;
  chain->add_option("--spec", chain_spec_file, "Chain spec JSON file");
  chain->add_option("--c", chain_c, "Number of blocks");
  chain->add_option("--k2", chain_k2, "Block order");
  chain->add_option("--links", links, "Junction types, e.g. DDT");
  chain->add_option("--tail", tail, "Appended path length");
  chain->add_option("--tail-attach", tail_attach, "Block-1 vertex carrying the tail");
  chain->add_option("--input", chain_input,
                    "Comma-separated input vertices: report the block-1 condition and exact verdict");
  chain->add_option("-o,--output", out.path, "Output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a prediction-vs-oracle sweep");
  std::string suite;
  lapctl::verify::MajorizationOptions mopt;
  bool serial = false;
  std::vector<std::string> suites(lapctl::verify::suite_names().begin(),
                                  lapctl::verify::suite_names().end());
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--random", mopt.random, "Random graphs (majorization)");
  verify->add_option("--maxk", mopt.maxk, "Largest random graph order (majorization)");
  verify->add_option("--seed", mopt.seed, "RNG seed (majorization)");
  verify->add_flag("--serial", serial, "Run cases serially");
  verify->add_option("-o,--output", out.path, "Output file (default stdout)");

  // export
  auto* exp = app.add_subcommand("export", "Export a graph as DOT or normalized JSON");
  std::string export_file, format;
  bool as_dot = false, as_json = false;
  exp->add_option("graph", export_file, "Graph JSON file")->required();
  exp->add_flag("--dot", as_dot, "DOT output");
  exp->add_flag("--json", as_json, "Normalized JSON output");
  exp->add_option("--format", format, "dot | json");
  exp->add_option("-o,--output", out.path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*gen) {
      lapctl::Graph g(1);
      if (family == "threshold") {
        if (creation.empty()) throw lapctl::InvalidArgument("threshold needs --creation");
        const auto steps_list = lapctl::parse_creation(creation);
        g = lapctl::gen_threshold(steps_list);
      } else {
        if (gen_k == 0) throw lapctl::InvalidArgument(family + " needs --k >= 1");
        if (family == "path") g = lapctl::gen_path(gen_k);
        if (family == "antiregular") g = lapctl::gen_antiregular(gen_k);
        if (family == "complete") g = lapctl::gen_complete(gen_k);
      }
      out.write(lapctl::io::to_json(g).dump());
      return kOk;
    }

    if (*spectrum) {
      const auto g = lapctl::io::read_graph_file(spectrum_file);
      const auto dec = lapctl::eig_sym(lapctl::laplacian(g), rtol,
                                       spectrum_serial ? lapctl::EigenKernel::SerialReference
                                                       : lapctl::EigenKernel::Parallel);
      out.write(lapctl::io::to_json(dec).dump());
      return kOk;
    }

    if (*check) {
      const auto g = lapctl::io::read_graph_file(check_file);
      const auto l = lapctl::laplacian(g);
      const auto b = build_inputs(g.order(), inputs);
      Json result;
      bool controllable = false;
      bool agree = true;
      if (method == "all") {
        const auto exact = lapctl::kalman_verdict(l, b);
        const auto pbh = lapctl::pbh_verdict(l, b);
        const auto gram = lapctl::gramian_verdict(l, b, horizon, steps);
        agree = exact.controllable == pbh.controllable &&
                exact.controllable == gram.controllable;
        controllable = exact.controllable;
        result["controllable"] = controllable;
        result["agree"] = agree;
        result["exact"] = lapctl::io::to_json(exact);
        result["pbh"] = lapctl::io::to_json(pbh);
        result["gramian"] = lapctl::io::to_json(gram);
      } else {
        lapctl::Verdict v;
        if (method == "exact") v = lapctl::kalman_verdict(l, b);
        if (method == "pbh") v = lapctl::pbh_verdict(l, b);
        if (method == "gramian") v = lapctl::gramian_verdict(l, b, horizon, steps);
        if (method == "auto") {
          const auto d = lapctl::decide(l, b);
          if (d.near_degenerate)
            std::cerr << "warning: eigenvalue gap within 10x of grouping tolerance\n";
          v = d.verdict;
        }
        controllable = v.controllable;
        result = lapctl::io::to_json(v);
      }
      out.write(result.dump());
      if (!agree) {
        std::cerr << "methods disagree\n";
        return kFailed;
      }
      if (!expect.empty() && (expect == "controllable") != controllable) {
        std::cerr << "expectation '" << expect << "' not met\n";
        return kFailed;
      }
      return kOk;
    }

    if (*compose) {
      lapctl::CompositeSpec spec = [&] {
        if (!compose_spec.empty())
          return lapctl::io::composite_spec_from_json(read_json_file(compose_spec));
        if (structure_file.empty() || cell_file.empty() || compose_s == 0)
          throw lapctl::InvalidArgument("compose needs --spec or --structure/--cell/--s");
        return lapctl::CompositeSpec{lapctl::io::read_graph_file(structure_file),
                                     lapctl::io::read_graph_file(cell_file), compose_s};
      }();
      if (predict_w) {
        const auto pred = lapctl::predict_composite(spec, *predict_w);
        Json j;
        j["controllable"] = pred.controllable;
        j["input_vertex"] = pred.input_vertex;
        j["structure"] = lapctl::io::to_json(pred.structure_verdict);
        out.write(j.dump());
      } else {
        out.write(lapctl::io::to_json(lapctl::composite(spec)).dump());
      }
      return kOk;
    }

    if (*chain) {
      lapctl::ChainSpec spec;
      if (!chain_spec_file.empty()) {
        spec = lapctl::io::chain_spec_from_json(read_json_file(chain_spec_file));
      } else {
        spec.c = chain_c;
        spec.k2 = chain_k2;
        spec.links = parse_links(links);
        spec.tail = tail;
        spec.tail_attach = tail_attach;
        spec.validate();
      }
      const auto g = lapctl::chain_antiregular(spec);
      if (chain_input.empty()) {
        out.write(lapctl::io::to_json(g).dump());
        return kOk;
      }
      std::vector<int> b(g.order(), 0);
      for (auto v : parse_vertex_list(chain_input)) {
        if (v > g.order()) throw lapctl::InvalidArgument("input vertex out of range");
        b[v - 1] = 1;
      }
      Json j;
      try {
        j["theorem_condition"] = lapctl::valid_chain_input(spec, b);
      } catch (const lapctl::OutOfSupport& ex) {
        j["theorem_condition"] = nullptr;
        j["note"] = ex.what();
      }
      j["exact"] = lapctl::io::to_json(
          lapctl::kalman_verdict(lapctl::laplacian(g), lapctl::ControlMatrix::from_vector(b)));
      out.write(j.dump());
      return kOk;
    }

    if (*verify) {
      const auto cases = lapctl::verify::suite_cases(suite, mopt);
      const auto results = lapctl::verify::run_cases(
          cases, serial ? lapctl::verify::Schedule::Serial : lapctl::verify::Schedule::Parallel);
      std::ostringstream os;
      std::size_t passed = 0;
      for (const auto& r : results) {
        passed += r.pass;
        os << Json{{"case", r.name}, {"pass", r.pass}, {"detail", r.detail}}.dump() << '\n';
      }
      const bool ok = passed == results.size();
      os << Json{{"suite", suite},
                 {"cases", results.size()},
                 {"passed", passed},
                 {"pass", ok}}
                .dump();
      out.write(os.str());
      return ok ? kOk : kFailed;
    }

    if (*exp) {
      if (!format.empty()) {
        if (format == "dot")
          as_dot = true;
        else if (format == "json")
          as_json = true;
        else
          throw lapctl::InvalidArgument("unknown format '" + format + "'");
      }
      if (as_dot == as_json)
        throw lapctl::InvalidArgument("export needs exactly one of --dot, --json");
      const auto g = lapctl::io::read_graph_file(export_file);
      out.write(as_dot ? lapctl::io::to_dot(g) : lapctl::io::to_json(g).dump());
      return kOk;
    }
  } catch (const lapctl::InvalidArgument& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const lapctl::HypothesisNotMet& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kFailed;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
