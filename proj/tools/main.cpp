#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "chromakac/chromatic.hpp"
#include "chromakac/errors.hpp"
#include "chromakac/graph.hpp"
#include "chromakac/json_io.hpp"
#include "chromakac/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOperational = 1;   // parse errors, size guards, bad flags
constexpr int kExitDisagreement = 2;  // an identity that must hold did not

struct GraphSource {
  std::string file;
  std::string gen;
};

chromakac::Graph parse_gen_spec(const std::string& spec, const chromakac::Limits& limits) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() < 2) throw std::invalid_argument("--gen expects family:n[:p=..][:seed=..]");

  chromakac::GraphFamily family = chromakac::parse_family(parts[0]);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("--gen size must be an integer, got \"" + parts[1] + "\"");
  }

  std::optional<double> p;
  std::optional<std::uint64_t> seed;
  for (std::size_t i = 2; i < parts.size(); ++i) {
    if (parts[i].rfind("p=", 0) == 0)
      p = std::stod(parts[i].substr(2));
    else if (parts[i].rfind("seed=", 0) == 0)
      seed = std::stoull(parts[i].substr(5));
    else
      throw std::invalid_argument("unknown --gen option \"" + parts[i] + "\"");
  }
  return chromakac::Graph::generate(family, n, seed, p, limits);
}

chromakac::Graph load_graph(const GraphSource& source, const chromakac::Limits& limits) {
  if (source.file.empty() == source.gen.empty())
    throw std::invalid_argument("provide exactly one of --file or --gen");
  if (!source.gen.empty()) return parse_gen_spec(source.gen, limits);

  std::ifstream in(source.file, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + source.file);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return chromakac::Graph::parse(buffer.str(), limits);
}

void add_common_options(CLI::App* cmd, GraphSource& source, chromakac::Limits& limits,
                        std::string& format) {
  cmd->add_option("--file", source.file, "Edge-list file (first line l, then \"u v\" lines)");
  cmd->add_option("--gen", source.gen, "Generated graph, family:n[:p=<p>][:seed=<s>]");
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  cmd->add_option("--max-lattice", limits.max_lattice_elements,
                  "Cap on bond-lattice elements")
      ->envname("CHROMAKAC_MAX_LATTICE");
  cmd->add_option("--max-vertices", limits.max_vertices, "Cap on vertex count");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic polynomials through the bond lattice and Kac-Moody root "
               "multiplicities, with cross-checked exact arithmetic"};
  app.require_subcommand(1);

  GraphSource source;
  chromakac::Limits limits;
  std::string format = "human";
  std::string method = "bond-lattice";
  bool timings = false;

  CLI::App* compute = app.add_subcommand("compute", "Compute the polynomial by one method");
  add_common_options(compute, source, limits, format);
  compute->add_option("--method", method, "Computation route")
      ->check(CLI::IsMember({"bond-lattice", "mobius", "path-sum", "matrix",
                             "deletion-contraction", "interpolate", "independent-partitions",
                             "kostant"}))
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "Run every method and every identity check");
  add_common_options(verify, source, limits, format);
  verify->add_flag("--timings", timings,
                   "Include per-method wall-clock times in JSON output (times vary run to "
                   "run, so they are off by default to keep JSON byte-stable)");

  CLI::App* lattice = app.add_subcommand("lattice", "Dump the bond lattice as JSON");
  add_common_options(lattice, source, limits, format);

  CLI::App* mult = app.add_subcommand("mult", "Dump root multiplicities as JSON");
  add_common_options(mult, source, limits, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Flag problems are operational errors; keep the exit-code contract
    // (help/version still exit 0).
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitOperational;
  }

  try {
    chromakac::Graph g = load_graph(source, limits);

    if (compute->parsed()) {
      chromakac::Polynomial p = chromakac::compute_method(g, method, limits);
      if (format == "json") {
        chromakac::ordered_json out;
        out["method"] = method;
        out["graph"] = chromakac::graph_to_json(g);
        out["polynomial"] = chromakac::polynomial_to_json(p);
        out["rendered"] = p.to_string();
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << p.to_string() << '\n';
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      chromakac::RunReport report = chromakac::run_verify(g, limits);
      if (format == "json")
        std::cout << chromakac::report_to_json(report, timings).dump(2) << '\n';
      else
        std::cout << chromakac::report_to_text(report);
      return report.all_ok() ? kExitOk : kExitDisagreement;
    }

    if (lattice->parsed()) {
      chromakac::BondLattice lat = chromakac::BondLattice::enumerate(g, limits);
      std::cout << chromakac::lattice_to_json(lat).dump(2) << '\n';
      return kExitOk;
    }

    if (mult->parsed()) {
      std::cout << chromakac::mult_table_to_json(g).dump(2) << '\n';
      return kExitOk;
    }
  } catch (const chromakac::integrality_error& e) {
    // An exact identity failed inside a route: that is a theorem violation,
    // not an operational problem.
    std::cerr << "error: " << e.what() << '\n';
    return kExitDisagreement;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOperational;
  }
  return kExitOperational;
}
