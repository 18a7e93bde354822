#include "chainpair/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "chainpair/errors.hpp"

namespace chainpair {

namespace {

using nlohmann::json;

constexpr const char* kInstanceFormat = "chainpair-instance";
constexpr const char* kSolutionFormat = "chainpair-solution";
constexpr int kVersion = 1;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view token, std::size_t line) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty() ||
      !std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line) + ": bad coordinate '" + std::string(token) + "'");
  }
  return value;
}

json chain_to_json(const Chain3d& chain) {
  json out = json::array();
  for (Eigen::Index k = 0; k < chain.cols(); ++k) {
    out.push_back({chain(0, k), chain(1, k), chain(2, k)});
  }
  return out;
}

Chain3d chain_from_json(const json& j, const char* name) {
  if (!j.is_array() || j.empty()) throw ParseError(std::string(name) + " must be a non-empty array");
  Chain3d chain(3, static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& v = j[k];
    if (!v.is_array() || v.size() != 3) {
      throw ParseError(std::string(name) + " vertex " + std::to_string(k + 1) + " needs 3 coordinates");
    }
    for (std::size_t c = 0; c < 3; ++c) {
      if (!v[c].is_number()) throw ParseError(std::string(name) + " coordinates must be numbers");
      chain(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(k)) = v[c].get<double>();
    }
  }
  return chain;
}

json interval_to_json(const IndexInterval& r) { return {r.lo, r.hi}; }

IndexInterval interval_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("an index range must be [lo, hi]");
  return {j[0].get<std::size_t>(), j[1].get<std::size_t>()};
}

double number(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number()) {
    throw ParseError(std::string("missing numeric field '") + key + "'");
  }
  return doc[key].get<double>();
}

void check_format(const json& doc, const char* format) {
  if (!doc.is_object() || doc.value("format", "") != format) {
    throw ParseError(std::string("expected a ") + format + " document");
  }
  if (doc.value("version", 0) != kVersion) throw ParseError("unsupported document version");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::size_t> index_list(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) throw ParseError(std::string("missing '") + key + "'");
  std::vector<std::size_t> out;
  for (const auto& v : doc[key]) {
    if (!v.is_number_integer()) throw ParseError(std::string(key) + " entries must be integers");
    const auto value = v.get<long long>();
    // Zero and negative indices survive parsing so verification can reject them.
    out.push_back(value < 1 ? 0 : static_cast<std::size_t>(value));
  }
  return out;
}

}  // namespace

Chain3d read_chain_text(std::istream& is) {
  std::vector<std::array<double, 3>> vertices;
  std::string line;
  std::size_t number_of_line = 0;
  while (std::getline(is, line)) {
    ++number_of_line;
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    std::array<double, 3> v{};
    std::size_t start = 0;
    for (std::size_t c = 0; c < 3; ++c) {
      const auto comma = content.find(',', start);
      if ((c < 2) == (comma == std::string_view::npos)) {
        throw ParseError("line " + std::to_string(number_of_line) + ": expected x,y,z");
      }
      const auto end = c < 2 ? comma : content.size();
      v[c] = parse_double(content.substr(start, end - start), number_of_line);
      start = end + 1;
    }
    vertices.push_back(v);
  }
  if (vertices.empty()) throw ParseError("chain has no vertices");
  Chain3d chain(3, static_cast<Eigen::Index>(vertices.size()));
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    chain.col(static_cast<Eigen::Index>(k)) << vertices[k][0], vertices[k][1], vertices[k][2];
  }
  return chain;
}

void write_chain_text(std::ostream& os, const Chain3d& chain) {
  for (Eigen::Index k = 0; k < chain.cols(); ++k) {
    os << format_double(chain(0, k)) << ',' << format_double(chain(1, k)) << ','
       << format_double(chain(2, k)) << '\n';
  }
}

std::string format_double(double value) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw std::runtime_error("cannot format number");
  return std::string(buf.data(), ptr);
}

WcpsInstance InstanceFile::wcps() const {
  if (!weighted()) throw std::logic_error("instance carries no weights");
  return {a, b, *weight_a, *weight_b, deltas, k};
}

InstanceFile InstanceFile::from(const CpsInstance& inst) {
  InstanceFile f;
  f.a = inst.a;
  f.b = inst.b;
  f.deltas = inst.deltas;
  f.k = inst.k;
  return f;
}

InstanceFile InstanceFile::from(const WcpsInstance& inst) {
  InstanceFile f;
  f.a = inst.a;
  f.b = inst.b;
  f.deltas = inst.deltas;
  f.k = inst.k;
  f.weight_a = inst.weight_a;
  f.weight_b = inst.weight_b;
  return f;
}

InstanceFile InstanceFile::from(const GeneratedInstance& gen) {
  InstanceFile f = from(gen.instance);
  f.elements = gen.elements;
  f.blocks = gen.blocks;
  return f;
}

std::string to_json(const InstanceFile& f) {
  json doc;
  doc["format"] = kInstanceFormat;
  doc["version"] = kVersion;
  doc["A"] = chain_to_json(f.a);
  doc["B"] = chain_to_json(f.b);
  doc["delta1"] = f.deltas.a;
  doc["delta2"] = f.deltas.b;
  doc["delta3"] = f.deltas.cross;
  doc["K"] = f.k;
  if (f.weighted()) {
    doc["weightsA"] = *f.weight_a;
    doc["weightsB"] = *f.weight_b;
  }
  if (!f.elements.empty()) doc["set"] = f.elements;
  if (!f.blocks.empty()) {
    json blocks = json::array();
    for (const auto& b : f.blocks) {
      json units_a = json::array();
      json units_b = json::array();
      for (const auto& u : b.units_a) units_a.push_back(interval_to_json(u));
      for (const auto& u : b.units_b) units_b.push_back(interval_to_json(u));
      blocks.push_back({{"element", b.element},
                        {"a", interval_to_json(b.a)},
                        {"b", interval_to_json(b.b)},
                        {"units_a", units_a},
                        {"units_b", units_b}});
    }
    doc["blocks"] = blocks;
  }
  return doc.dump(1) + "\n";
}

InstanceFile instance_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance is not valid JSON: ") + e.what());
  }
  check_format(doc, kInstanceFormat);
  InstanceFile f;
  try {
    f.a = chain_from_json(doc.at("A"), "A");
    f.b = chain_from_json(doc.at("B"), "B");
    f.deltas = {number(doc, "delta1"), number(doc, "delta2"), number(doc, "delta3")};
    f.k = number(doc, "K");
    if (doc.contains("weightsA") != doc.contains("weightsB")) {
      throw ParseError("weightsA and weightsB must be given together");
    }
    if (doc.contains("weightsA")) {
      f.weight_a = doc["weightsA"].get<std::vector<double>>();
      f.weight_b = doc["weightsB"].get<std::vector<double>>();
      if (f.weight_a->size() != static_cast<std::size_t>(f.a.cols()) ||
          f.weight_b->size() != static_cast<std::size_t>(f.b.cols())) {
        throw ParseError("weight list length does not match its chain");
      }
    }
    if (doc.contains("set")) f.elements = doc["set"].get<std::vector<int>>();
    if (doc.contains("blocks")) {
      for (const auto& jb : doc["blocks"]) {
        BlockRange b;
        b.element = jb.at("element").get<int>();
        b.a = interval_from_json(jb.at("a"));
        b.b = interval_from_json(jb.at("b"));
        for (const auto& u : jb.value("units_a", json::array())) b.units_a.push_back(interval_from_json(u));
        for (const auto& u : jb.value("units_b", json::array())) b.units_b.push_back(interval_from_json(u));
        f.blocks.push_back(std::move(b));
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }
  return f;
}

std::string to_json(const SolutionFile& f) {
  json doc;
  doc["format"] = kSolutionFormat;
  doc["version"] = kVersion;
  doc["aIdx"] = f.solution.a_idx;
  doc["bIdx"] = f.solution.b_idx;
  if (f.partition) {
    auto values = [&](const std::vector<std::size_t>& side) {
      std::vector<int> out;
      for (std::size_t p : side) out.push_back(f.elements.at(p));
      return out;
    };
    doc["partition"] = {{"first", values(f.partition->first)},
                        {"second", values(f.partition->second)},
                        {"first_positions", f.partition->first},
                        {"second_positions", f.partition->second}};
  }
  return doc.dump() + "\n";
}

SolutionFile solution_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("solution is not valid JSON: ") + e.what());
  }
  check_format(doc, kSolutionFormat);
  SolutionFile f;
  try {
    f.solution.a_idx = index_list(doc, "aIdx");
    f.solution.b_idx = index_list(doc, "bIdx");
    if (doc.contains("partition")) {
      const auto& p = doc["partition"];
      Partition part;
      part.first = p.at("first_positions").get<std::vector<std::size_t>>();
      part.second = p.at("second_positions").get<std::vector<std::size_t>>();
      const auto first = p.at("first").get<std::vector<int>>();
      const auto second = p.at("second").get<std::vector<int>>();
      if (first.size() != part.first.size() || second.size() != part.second.size()) {
        throw ParseError("partition values and positions disagree");
      }
      const std::size_t count = part.first.size() + part.second.size();
      f.elements.assign(count, 0);
      for (std::size_t k = 0; k < first.size(); ++k) f.elements.at(part.first[k]) = first[k];
      for (std::size_t k = 0; k < second.size(); ++k) f.elements.at(part.second[k]) = second[k];
      f.partition = std::move(part);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed solution: ") + e.what());
  } catch (const std::out_of_range&) {
    throw ParseError("partition positions out of range");
  }
  return f;
}

InstanceFile load_instance(const std::string& path) { return instance_from_json(read_file(path)); }

SolutionFile load_solution(const std::string& path) { return solution_from_json(read_file(path)); }

Chain3d load_chain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_chain_text(in);
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace chainpair
