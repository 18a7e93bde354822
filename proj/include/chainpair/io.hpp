#ifndef CHAINPAIR_IO_HPP
#define CHAINPAIR_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chainpair/cps.hpp"
#include "chainpair/reduction.hpp"
#include "chainpair/wcps.hpp"

namespace chainpair {

// Chain text: one "x,y,z" vertex per line; blank lines and '#' comments ignored.
Chain3d read_chain_text(std::istream& is);
void write_chain_text(std::ostream& os, const Chain3d& chain);

/// Contents of an instance file (JSON, "format": "chainpair-instance").
///
///   {"format": "chainpair-instance", "version": 1,
///    "A": [[x,y,z], ...], "B": [[x,y,z], ...],
///    "delta1": d1, "delta2": d2, "delta3": d3, "K": k,
///    "weightsA": [...], "weightsB": [...],          (optional, together)
///    "set": [s1, ...],                              (optional metadata)
///    "blocks": [{"element": s, "a": [lo,hi], "b": [lo,hi],
///                "units_a": [[lo,hi],...], "units_b": [[lo,hi],...]}, ...]}
struct InstanceFile {
  Chain3d a;
  Chain3d b;
  Deltas deltas;
  double k = 1;
  std::optional<std::vector<double>> weight_a;
  std::optional<std::vector<double>> weight_b;
  std::vector<int> elements;
  std::vector<BlockRange> blocks;

  bool weighted() const { return weight_a.has_value(); }
  CpsInstance cps() const { return {a, b, deltas, k}; }
  WcpsInstance wcps() const;
  GeneratedInstance generated() const { return {cps(), elements, blocks}; }

  static InstanceFile from(const CpsInstance& inst);
  static InstanceFile from(const WcpsInstance& inst);
  static InstanceFile from(const GeneratedInstance& gen);
};

/// Contents of a solution file:
///   {"format": "chainpair-solution", "version": 1, "aIdx": [...], "bIdx": [...],
///    "partition": {"first": [values], "second": [values],
///                  "first_positions": [...], "second_positions": [...]}}
struct SolutionFile {
  Solution solution;
  std::optional<Partition> partition;
  std::vector<int> elements;  // needed to print partition values
};

std::string to_json(const InstanceFile& file);
std::string to_json(const SolutionFile& file);
InstanceFile instance_from_json(const std::string& text);
SolutionFile solution_from_json(const std::string& text);

InstanceFile load_instance(const std::string& path);
SolutionFile load_solution(const std::string& path);
Chain3d load_chain(const std::string& path);
void save_text(const std::string& path, const std::string& text);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

}  // namespace chainpair

#endif  // CHAINPAIR_IO_HPP
