#include "commands.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "chainpair/cps.hpp"
#include "chainpair/errors.hpp"
#include "chainpair/freespace.hpp"
#include "chainpair/frechet.hpp"
#include "chainpair/io.hpp"
#include "chainpair/reduction.hpp"
#include "chainpair/wcps.hpp"

namespace chainpair::cli {

namespace {

struct Options {
  std::string set;
  bool weighted = false;
  std::string out_path;
  std::string instance_path;
  std::string solution_path;
  std::string chain_a_path;
  std::string chain_b_path;
  std::string svg_path;
  std::string csv_path;
  std::optional<double> k_override;
  std::size_t state_cap = SolveOptions{}.state_cap;
};

void print_side(std::ostream& out, const char* name, std::span<const int> set,
                const std::vector<std::size_t>& side) {
  out << name << ":";
  for (std::size_t p : side) out << ' ' << set[p];
  out << " (sum " << side_sum(set, side) << ")\n";
}

int cmd_gen(const Options& o, std::ostream& out) {
  const auto set = parse_set(o.set);
  InstanceFile file;
  if (o.weighted) {
    file = InstanceFile::from(gen_wcps_instance(set));
    file.elements = set;
  } else {
    file = InstanceFile::from(gen_instance(set));
  }
  save_text(o.out_path, to_json(file));
  out << "wrote " << o.out_path << ": " << file.a.cols() << " + " << file.b.cols()
      << " vertices, K = " << format_double(file.k) << '\n';
  return kYes;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  InstanceFile file = load_instance(o.instance_path);
  if (o.k_override) file.k = *o.k_override;
  const SolveOptions options{o.state_cap};
  SolutionFile result;
  std::optional<Solution> sol =
      file.weighted() ? solve_wcps(file.wcps(), options) : solve(file.cps(), options);
  if (!sol) {
    err << "infeasible at K = " << format_double(file.k) << '\n';
    return kNo;
  }
  result.solution = *sol;
  if (!file.elements.empty()) {
    result.elements = file.elements;
    if (file.weighted()) {
      result.partition = decode_weighted_partition(file.elements, *sol);
    } else if (!file.blocks.empty()) {
      try {
        result.partition = decode_partition(file.generated(), *sol);
      } catch (const DecodeError& e) {
        err << "note: " << e.what() << '\n';
      }
    }
  }
  out << to_json(result);
  return kYes;
}

int cmd_frechet(const Options& o, std::ostream& out) {
  const Chain3d a = load_chain(o.chain_a_path);
  const Chain3d b = load_chain(o.chain_b_path);
  out << format_double(discrete_frechet(a, b)) << '\n';
  return kYes;
}

int cmd_freespace(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.svg_path.empty() && o.csv_path.empty()) {
    err << "freespace: give --svg and/or --csv\n";
    return kError;
  }
  const InstanceFile file = load_instance(o.instance_path);
  const auto diagram = build_diagram(file.a, file.b, file.deltas.a, file.deltas.b, file.deltas.cross);
  if (!o.csv_path.empty()) {
    std::ostringstream csv;
    write_csv(csv, diagram);
    save_text(o.csv_path, csv.str());
  }
  if (!o.svg_path.empty()) {
    const auto paths = enumerate_paths(diagram, 8);
    std::ostringstream svg;
    write_svg(svg, diagram, paths.paths);
    save_text(o.svg_path, svg.str());
  }
  out << diagram.rects.size() << " rectangles\n";
  return kYes;
}

int cmd_partition(const Options& o, std::ostream& out, std::ostream& err) {
  const auto set = parse_set(o.set);
  const auto found = solve_partition(set, SolveOptions{o.state_cap});
  if (found && side_sum(set, found->first) != side_sum(set, found->second)) {
    err << "decoded partition is unbalanced\n";
    return kError;
  }
  if (set.size() <= 20 && found.has_value() != brute_force_partition(set).has_value()) {
    err << "reduction verdict disagrees with exhaustive partition search\n";
    return kError;
  }
  if (!found) {
    out << "no partition\n";
    return kNo;
  }
  print_side(out, "P1", set, found->first);
  print_side(out, "P2", set, found->second);
  return kYes;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const InstanceFile file = load_instance(o.instance_path);
  const SolutionFile sol = load_solution(o.solution_path);
  bool ok = false;
  try {
    ok = file.weighted() ? verify_wcps(file.wcps(), sol.solution)
                         : verify_solution(file.cps(), sol.solution);
  } catch (const std::out_of_range& e) {
    out << "invalid: " << e.what() << '\n';
    return kNo;
  } catch (const std::invalid_argument& e) {
    out << "invalid: " << e.what() << '\n';
    return kNo;
  }
  out << (ok ? "valid" : "invalid") << '\n';
  return ok ? kYes : kNo;
}

}  // namespace

std::vector<int> parse_set(const std::string& text) {
  std::vector<int> set;
  std::string_view rest(text);
  while (true) {
    const auto comma = rest.find(',');
    std::string_view token = rest.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 1) {
      throw std::invalid_argument("malformed set element '" + std::string(token) +
                                  "': expected positive integers separated by commas");
    }
    set.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return set;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chain pair simplification under the discrete Frechet distance", "chainpair"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate a reduction instance from a set of integers");
  gen->add_option("--set", o.set, "Comma-separated positive integers")->required();
  gen->add_flag("--weighted", o.weighted, "Emit the weighted two-vertex-per-element instance");
  gen->add_option("--out", o.out_path, "Instance file to write")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance; prints a solution file");
  solve_cmd->add_option("instance", o.instance_path)->required();
  solve_cmd->add_option("--k", o.k_override, "Override the instance budget");
  solve_cmd->add_option("--state-cap", o.state_cap, "Search state cap");

  auto* frechet = app.add_subcommand("frechet", "Discrete Frechet distance of two chain files");
  frechet->add_option("chain_a", o.chain_a_path)->required();
  frechet->add_option("chain_b", o.chain_b_path)->required();

  auto* freespace = app.add_subcommand("freespace", "Export the rectangle diagram of an instance");
  freespace->add_option("instance", o.instance_path)->required();
  freespace->add_option("--svg", o.svg_path, "SVG output");
  freespace->add_option("--csv", o.csv_path, "CSV output");

  auto* partition = app.add_subcommand("partition", "Decide set partition through the reduction");
  partition->add_option("--set", o.set, "Comma-separated positive integers")->required();
  partition->add_option("--state-cap", o.state_cap, "Search state cap");

  auto* verify = app.add_subcommand("verify", "Check a solution file against an instance");
  verify->add_option("instance", o.instance_path)->required();
  verify->add_option("solution", o.solution_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kError;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (solve_cmd->parsed()) return cmd_solve(o, out, err);
    if (frechet->parsed()) return cmd_frechet(o, out);
    if (freespace->parsed()) return cmd_freespace(o, out, err);
    if (partition->parsed()) return cmd_partition(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace chainpair::cli
