#include "chainpair/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "chainpair/errors.hpp"

namespace chainpair {

namespace {

Chain3d concat(const std::vector<Chain3d>& parts) {
  Eigen::Index total = 0;
  for (const auto& p : parts) total += p.cols();
  Chain3d out(3, total);
  Eigen::Index at = 0;
  for (const auto& p : parts) {
    out.middleCols(at, p.cols()) = p;
    at += p.cols();
  }
  return out;
}

// Vertices first..last (1-based, inclusive) of a unit chain copy.
Chain3d segment(const Chain3d& chain, std::size_t j, std::size_t k, Eigen::Index first,
                Eigen::Index last) {
  return translate(chain.middleCols(first - 1, last - first + 1), j, k);
}

Chain3d block_chain(const Chain3d& unit, int s, std::size_t block) {
  const auto copies = static_cast<std::size_t>(s);
  std::vector<Chain3d> parts;
  parts.push_back(segment(unit, 1, block, 1, 1));
  for (std::size_t u = 1; u <= copies; ++u) parts.push_back(segment(unit, u, block, 2, 9));
  parts.push_back(segment(unit, copies, block, 10, 11));
  return concat(parts);
}

}  // namespace

const GadgetTemplate& gadget_template() {
  static const GadgetTemplate gadget{
      make_chain({{0.70, 0.00, 0.60},
                  {1.00, 0.00, 0.00},
                  {1.28, -0.56, 0.90},
                  {1.78, -0.49, 1.20},
                  {1.60, -0.60, 2.00},
                  {2.06, -0.35, 2.80},
                  {2.41, 0.00, 2.50},
                  {1.74, 0.46, 1.80},
                  {2.24, 0.46, 0.85},
                  {2.70, 0.00, 0.00},
                  {2.70, 0.00, 0.60}}),
      make_chain({{0.70, 0.00, 1.40},
                  {1.00, 0.00, 2.00},
                  {0.96, 0.88, 1.55},
                  {1.64, 0.49, 0.80},
                  {1.57, 0.42, 0.10},
                  {1.92, 0.49, -0.70},
                  {2.41, 0.00, -0.50},
                  {1.78, -0.21, 0.20},
                  {2.13, -0.42, 1.20},
                  {2.70, 0.00, 2.00},
                  {2.70, 0.00, 1.50}})};
  return gadget;
}

Point3d uncorrected_a9() { return Point3d(2.24, 0.46, 1.85); }

Chain3d translate(const Chain3d& chain, std::size_t j, std::size_t k) {
  const Point3d offset(kGadgetStep * static_cast<double>(j), 0.0,
                       kBlockLift * static_cast<double>(k));
  return chain.colwise() + offset;
}

std::pair<Chain3d, Chain3d> gen_block(int s, std::size_t block) {
  if (s < 1) throw std::invalid_argument("gen_block: element must be positive");
  const auto& g = gadget_template();
  return {block_chain(g.a, s, block), block_chain(g.b, s, block)};
}

void check_partition_input(std::span<const int> set) {
  if (set.empty()) throw std::invalid_argument("the set must not be empty");
  for (int s : set) {
    if (s < 1) throw std::invalid_argument("set elements must be positive, got " + std::to_string(s));
  }
}

double partition_budget(std::span<const int> set) {
  const double total = static_cast<double>(std::accumulate(set.begin(), set.end(), 0LL));
  return 2.0 * static_cast<double>(set.size()) + 3.0 * total + total / 2.0;
}

GeneratedInstance gen_instance(std::span<const int> set) {
  check_partition_input(set);
  GeneratedInstance gen;
  gen.elements.assign(set.begin(), set.end());
  std::vector<Chain3d> xs;
  std::vector<Chain3d> ys;
  std::size_t offset = 0;
  for (std::size_t k = 0; k < set.size(); ++k) {
    auto [x, y] = gen_block(set[k], k);
    const auto len = static_cast<std::size_t>(x.cols());
    BlockRange range;
    range.element = set[k];
    range.a = {offset + 1, offset + len};
    range.b = range.a;
    for (int u = 0; u < set[k]; ++u) {
      const std::size_t lo = offset + 2 + 8 * static_cast<std::size_t>(u);
      range.units_a.push_back({lo, lo + 7});
    }
    range.units_b = range.units_a;
    gen.blocks.push_back(std::move(range));
    xs.push_back(std::move(x));
    ys.push_back(std::move(y));
    offset += len;
  }
  gen.instance.a = concat(xs);
  gen.instance.b = concat(ys);
  gen.instance.deltas = {kGadgetDelta, kGadgetDelta, kGadgetCross};
  gen.instance.k = partition_budget(set);
  return gen;
}

WcpsInstance gen_wcps_instance(std::span<const int> set) {
  check_partition_input(set);
  const auto stages = static_cast<Eigen::Index>(set.size());
  WcpsInstance inst;
  inst.a.resize(3, 2 * stages);
  inst.b.resize(3, 2 * stages);
  for (Eigen::Index i = 0; i < stages; ++i) {
    const double x = 3.0 * static_cast<double>(i + 1);
    const double heavy = static_cast<double>(set[static_cast<std::size_t>(i)]) + 1.0;
    inst.a.col(2 * i) << x, 0.0, 0.0;
    inst.a.col(2 * i + 1) << x + 1.0, 0.0, 0.0;
    inst.b.col(2 * i) << x, 0.5, 0.0;
    inst.b.col(2 * i + 1) << x + 1.0, 0.5, 0.0;
    inst.weight_a.insert(inst.weight_a.end(), {heavy, 1.0});
    inst.weight_b.insert(inst.weight_b.end(), {1.0, heavy});
  }
  inst.deltas = {1.0, 1.0, 0.5};
  const double total = static_cast<double>(std::accumulate(set.begin(), set.end(), 0LL));
  inst.k = static_cast<double>(set.size()) + total / 2.0;
  return inst;
}

long long side_sum(std::span<const int> set, const std::vector<std::size_t>& side) {
  long long total = 0;
  for (std::size_t p : side) total += set[p];
  return total;
}

Partition decode_partition(const GeneratedInstance& gen, const Solution& sol) {
  auto kept_in = [](const std::vector<std::size_t>& idx, const IndexInterval& range) {
    long long count = 0;
    for (std::size_t i : idx) count += range.contains(i) ? 1 : 0;
    return count;
  };
  Partition part;
  for (std::size_t k = 0; k < gen.blocks.size(); ++k) {
    const auto& block = gen.blocks[k];
    const long long diff = kept_in(sol.a_idx, block.a) - kept_in(sol.b_idx, block.b);
    if (diff == block.element) {
      part.first.push_back(k);
    } else if (diff == -block.element) {
      part.second.push_back(k);
    } else {
      throw DecodeError("block " + std::to_string(k + 1) + " (element " +
                        std::to_string(block.element) + ") shows no two-path signature: kept " +
                        "vertex difference " + std::to_string(diff));
    }
  }
  return part;
}

Partition decode_weighted_partition(std::span<const int> set, const Solution& sol) {
  Partition part;
  for (std::size_t k = 0; k < set.size(); ++k) {
    const std::size_t heavy = 2 * k + 1;
    const bool kept = std::find(sol.a_idx.begin(), sol.a_idx.end(), heavy) != sol.a_idx.end();
    (kept ? part.first : part.second).push_back(k);
  }
  return part;
}

std::optional<Partition> solve_partition(std::span<const int> set, const SolveOptions& options) {
  const auto gen = gen_instance(set);
  const auto sol = solve(gen.instance, options);
  if (!sol) return std::nullopt;
  return decode_partition(gen, *sol);
}

std::optional<Partition> brute_force_partition(std::span<const int> set) {
  check_partition_input(set);
  if (set.size() > 20) throw GuardError("brute_force_partition: more than 20 elements");
  const long long total = std::accumulate(set.begin(), set.end(), 0LL);
  if (total % 2 != 0) return std::nullopt;
  const unsigned count = 1U << set.size();
  for (unsigned mask = 0; mask < count; ++mask) {
    long long sum = 0;
    for (std::size_t k = 0; k < set.size(); ++k) {
      if (mask & (1U << k)) sum += set[k];
    }
    if (2 * sum != total) continue;
    Partition part;
    for (std::size_t k = 0; k < set.size(); ++k) {
      ((mask & (1U << k)) ? part.first : part.second).push_back(k);
    }
    return part;
  }
  return std::nullopt;
}

}  // namespace chainpair
