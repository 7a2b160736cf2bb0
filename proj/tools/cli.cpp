#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "covernum/covers.hpp"
#include "covernum/error.hpp"
#include "covernum/generators.hpp"
#include "covernum/io.hpp"
#include "covernum/recognizers.hpp"
#include "covernum/serialize.hpp"
#include "covernum/solver.hpp"
#include "covernum/verify.hpp"

namespace covernum::cli {

namespace {

struct Input {
  std::string source;
  std::string format;
};

std::string read_source(const std::string& source, std::istream& in) {
  if (source == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream file(source, std::ios::binary);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
  }
  return source;
}

Graph load(const Input& input, std::istream& in) {
  std::optional<GraphFormat> format;
  if (!input.format.empty() && input.format != "auto") {
    format = format_from_name(input.format);
    if (!format) throw InvalidArgument("unknown format '" + input.format + "'");
  }
  return read_graph(read_source(input.source, in), format);
}

void add_input(CLI::App* cmd, Input& input) {
  cmd->add_option("graph", input.source, "graph6 text, a file path, or - for stdin")->required();
  cmd->add_option("--format", input.format, "graph6 | edges | dimacs (default: auto-detect)");
}

void print(std::ostream& out, const Json& json) { out << json.dump(2) << '\n'; }

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::capacity:
      return kCapacity;
    case ErrorKind::unsupported:
      return kUnsupported;
    case ErrorKind::budget:
      return kBudget;
    case ErrorKind::invalid_argument:
    case ErrorKind::parse:
    case ErrorKind::host_mismatch:
      break;
  }
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-cover numbers of graphs by hereditary and chi-bounded classes", "covernum"};
  app.require_subcommand(1);

  std::string family;
  auto* gen = app.add_subcommand("gen", "Emit a generated graph as graph6");
  gen->add_option("family", family,
                  "complete:n | cycle:n | multipartite:a,b,.. | hypercube:d | mycielski:chi | kkl:k,l | far:k,l")
      ->required();

  Input inv_input;
  bool want_chi = false;
  bool want_omega = false;
  auto* invariant = app.add_subcommand("invariant", "Exact chromatic and clique numbers");
  add_input(invariant, inv_input);
  invariant->add_flag("--chi", want_chi, "Report the chromatic number");
  invariant->add_flag("--omega", want_omega, "Report the clique number");

  Input rec_input;
  std::string rec_class;
  auto* recognize = app.add_subcommand("recognize", "Class membership with a witness");
  add_input(recognize, rec_input);
  recognize->add_option("--class", rec_class, "class spec")->required();

  Input cov_input;
  std::string cov_class;
  bool construct = false;
  auto* cover = app.add_subcommand("cover", "Constructive cover certificate");
  add_input(cover, cov_input);
  cover->add_option("--class", cov_class, "bipartite | chi-le:<k> | chi-le-f:<f>")->required();
  cover->add_flag("--construct", construct, "Build the certificate (the default and only mode)");

  Input sol_input;
  std::string sol_class;
  std::optional<std::size_t> decision;
  SolveBudget budget;
  auto* solve = app.add_subcommand("solve", "Exact cover number by exhaustive search");
  add_input(solve, sol_input);
  solve->add_option("--class", sol_class, "class spec")->required();
  solve->add_option("--decision", decision, "Only decide whether a cover with at most k parts exists");
  solve->add_option("--max-edges", budget.max_edges, "Edge budget for subset enumeration")
      ->capture_default_str();

  std::string suite;
  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "hhm | chibound | chain | far3 | hypercube | arithmetic | inclusion")
      ->required();
  verify->add_option("--n-max", verify_options.corpus.exhaustive_max_n, "Exhaustive corpus up to this order")
      ->check(CLI::Range(0, 6))
      ->capture_default_str();
  verify->add_option("--samples", verify_options.corpus.samples, "Random graphs per sampled order")
      ->capture_default_str();
  verify->add_option("--sample-sizes", verify_options.corpus.sample_sizes, "Orders of the random samples")
      ->delimiter(',');
  verify->add_option("--seed", verify_options.corpus.seed, "Seed for the random samples")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      out << emit_graph6(generate(family)) << '\n';
      return kOk;
    }

    if (invariant->parsed()) {
      const Graph g = load(inv_input, in);
      if (!want_chi && !want_omega) want_chi = want_omega = true;
      Json result;
      Json witnesses;
      if (want_chi) {
        const auto chi = chromatic_number(g);
        result["chi"] = chi.chi;
        witnesses["coloring"] = to_json(chi.coloring);
      }
      if (want_omega) {
        const auto omega = clique_number(g);
        result["omega"] = omega.size;
        witnesses["clique"] = vertices_json(omega.witness.vertices);
      }
      result["witnesses"] = std::move(witnesses);
      print(out, result);
      return kOk;
    }

    if (recognize->parsed()) {
      const ClassSpec spec = ClassSpec::parse(rec_class);
      const Graph g = load(rec_input, in);
      Json result;
      result["class"] = spec.to_string();
      if (const auto witness = in_class(g, spec)) {
        result["member"] = true;
        result["witness"] = to_json(*witness);
      } else {
        result["member"] = false;
        result["witness"] = nullptr;
        if (spec.kind() == ClassSpec::Kind::perfect) {
          if (const auto hole = is_perfect(g).obstruction) result["witness"] = to_json(*hole);
        }
      }
      print(out, result);
      return kOk;
    }

    if (cover->parsed()) {
      const ClassSpec spec = ClassSpec::parse(cov_class);
      const Graph g = load(cov_input, in);
      CoverCertificate cert;
      switch (spec.kind()) {
        case ClassSpec::Kind::bipartite:
          cert = bipartite_cover(g);
          break;
        case ClassSpec::Kind::chi_le:
          cert = spec.k() == 1 ? throw UnsupportedClass("chi-le:1 covers only edgeless graphs")
                               : chi_le_k_cover(g, spec.k());
          break;
        case ClassSpec::Kind::chi_le_f:
          cert = chibound_cover(g, spec.f());
          break;
        default:
          err << "covernum: no constructive cover for class '" << spec.to_string()
              << "'; use `covernum solve --class " << spec.to_string() << "` for the exact value\n";
          return kUnsupported;
      }
      Json result = to_json(cert);
      result["valid"] = check_certificate(g, cert);
      print(out, result);
      return result["valid"] == true ? kOk : kVerificationFailed;
    }

    if (solve->parsed()) {
      const ClassSpec spec = ClassSpec::parse(sol_class);
      const Graph g = load(sol_input, in);
      if (decision) {
        const auto cert = decide_cover(g, spec, *decision, budget);
        Json result;
        result["class"] = spec.to_string();
        result["k"] = *decision;
        result["present"] = cert.has_value();
        result["certificate"] = cert ? to_json(*cert) : Json(nullptr);
        print(out, result);
        return kOk;
      }
      print(out, to_json(exact_cover_number(g, spec, budget)));
      return kOk;
    }

    if (verify->parsed()) {
      const auto report = run_suite(suite, verify_options);
      print(out, to_json(report));
      return report.pass ? kOk : kVerificationFailed;
    }
  } catch (const Error& e) {
    err << "covernum: " << e.what() << '\n';
    return exit_for(e);
  }
  return kUsage;
}

}  // namespace covernum::cli
