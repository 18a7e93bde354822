#ifndef CHAINPAIR_REDUCTION_HPP
#define CHAINPAIR_REDUCTION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "chainpair/cps.hpp"
#include "chainpair/wcps.hpp"

namespace chainpair {

/// The 11 + 11 vertex two-path gadget.
struct GadgetTemplate {
  Chain3d a;
  Chain3d b;
};

/// Gadget coordinates with a_9 = (2.24, 0.46, 0.85). This row reproduces the
/// gadget's ten close pairs, including (a_9, b_4).
const GadgetTemplate& gadget_template();

/// a_9 with z = 1.85, the variant that breaks the pair list. Kept for regression tests.
Point3d uncorrected_a9();

/// Gadget geometry and thresholds.
inline constexpr double kGadgetStep = 1.7;   // x shift between consecutive unit copies
inline constexpr double kBlockLift = 10.0;   // z shift between blocks
inline constexpr double kGadgetDelta = 1.1;  // delta1 = delta2
inline constexpr double kGadgetCross = 0.9;  // delta3

/// Every vertex moved by (step * j, 0, lift * k).
Chain3d translate(const Chain3d& chain, std::size_t j, std::size_t k);

/// Chains for one element s placed as block `block` (0-based z level):
/// start vertex, s copies of vertices 2..9, then vertices 10 and 11 of the
/// last copy. 8s + 3 vertices each.
std::pair<Chain3d, Chain3d> gen_block(int s, std::size_t block);

/// Where one element's block sits inside the generated chains (1-based).
struct BlockRange {
  int element = 0;
  IndexInterval a;
  IndexInterval b;
  std::vector<IndexInterval> units_a;  // vertices 2..9 of each copy
  std::vector<IndexInterval> units_b;
};

struct GeneratedInstance {
  CpsInstance instance;
  std::vector<int> elements;
  std::vector<BlockRange> blocks;
};

/// Throws std::invalid_argument for an empty set or a non-positive element.
void check_partition_input(std::span<const int> set);

/// 2|S| + 3*sum + sum/2.
double partition_budget(std::span<const int> set);

GeneratedInstance gen_instance(std::span<const int> set);

/// Two vertices per element on each chain. Stage i keeps exactly one vertex
/// per chain; the heavy choice costs s_i + 1 on one chain and 1 on the other.
/// Budget |S| + sum/2, unrounded.
WcpsInstance gen_wcps_instance(std::span<const int> set);

/// Positions (0-based) into the element list, one list per side.
struct Partition {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

long long side_sum(std::span<const int> set, const std::vector<std::size_t>& side);

/// Element i goes to `first` when the A-side of its block kept exactly s_i
/// more vertices than the B-side, to `second` for the mirror image; anything
/// else throws DecodeError.
Partition decode_partition(const GeneratedInstance& gen, const Solution& sol);

/// Element i goes to `first` when a_{2i-1} (weight s_i + 1) is kept.
Partition decode_weighted_partition(std::span<const int> set, const Solution& sol);

/// gen_instance, solve, decode_partition.
std::optional<Partition> solve_partition(std::span<const int> set,
                                         const SolveOptions& options = {});

/// Exhaustive subset search; |S| <= 20.
std::optional<Partition> brute_force_partition(std::span<const int> set);

}  // namespace chainpair

#endif  // CHAINPAIR_REDUCTION_HPP
