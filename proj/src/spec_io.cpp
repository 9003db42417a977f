#include "pqw/spec_io.hpp"

#include <fstream>

namespace pqw {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
  throw ValidationError(path + ": " + msg);
}

const json& field(const json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, "missing field '" + key + "'");
  return *it;
}

long long as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<long long>();
}

FiniteGroup parse_group(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  if (j.contains("abelian_invariant_factors")) {
    const json& f = j.at("abelian_invariant_factors");
    if (!f.is_array() || f.empty()) bad(path + ".abelian_invariant_factors", "expected a non-empty array");
    std::vector<int> factors;
    for (std::size_t i = 0; i < f.size(); ++i) {
      long long v = as_int(f[i], path + ".abelian_invariant_factors[" + std::to_string(i) + "]");
      if (v < 1) bad(path + ".abelian_invariant_factors[" + std::to_string(i) + "]", "factors must be >= 1");
      factors.push_back(int(v));
    }
    return FiniteGroup::abelian(factors);
  }
  if (j.contains("table")) {
    const json& t = j.at("table");
    if (!t.is_array()) bad(path + ".table", "expected an array of rows");
    std::vector<std::vector<int>> table;
    for (std::size_t r = 0; r < t.size(); ++r) {
      if (!t[r].is_array()) bad(path + ".table[" + std::to_string(r) + "]", "expected a row array");
      std::vector<int> row;
      for (std::size_t c = 0; c < t[r].size(); ++c) {
        row.push_back(int(as_int(t[r][c], path + ".table[" + std::to_string(r) + "][" +
                                              std::to_string(c) + "]")));
      }
      table.push_back(std::move(row));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      const json& ls = j.at("labels");
      if (!ls.is_array()) bad(path + ".labels", "expected an array of strings");
      for (std::size_t i = 0; i < ls.size(); ++i) {
        if (!ls[i].is_string()) bad(path + ".labels[" + std::to_string(i) + "]", "expected a string");
        labels.push_back(ls[i].get<std::string>());
      }
    }
    return FiniteGroup::from_table(table, std::move(labels));
  }
  bad(path, "group needs either 'abelian_invariant_factors' or 'table'");
}

int parse_element(const FiniteGroup& g, const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected an element label string");
  std::optional<int> e = g.element_by_label(j.get<std::string>());
  if (!e) bad(path, "unknown element label '" + j.get<std::string>() + "'");
  return *e;
}

}  // namespace

SpecDocument parse_spec_document(const json& j) {
  if (!j.is_object()) throw ValidationError("top level: expected an object");
  SpecDocument doc;

  FiniteGroup group = parse_group(field(j, "top level", "group"), "group");

  const json& factors = field(j, "top level", "factors");
  if (!factors.is_array() || factors.empty()) throw ValidationError("factors: expected a non-empty array");
  std::vector<std::pair<BranchData, std::vector<int>>> data;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::string fpath = "factors[" + std::to_string(i) + "]";
    const json& f = factors[i];
    BranchData branch;
    branch.base_genus = int(as_int(field(f, fpath, "base_genus"), fpath + ".base_genus"));
    const json& idx = field(f, fpath, "branch_indices");
    if (!idx.is_array()) bad(fpath + ".branch_indices", "expected an array");
    for (std::size_t k = 0; k < idx.size(); ++k) {
      branch.indices.push_back(
          int(as_int(idx[k], fpath + ".branch_indices[" + std::to_string(k) + "]")));
    }
    try {
      branch.validate();
    } catch (const ValidationError& e) {
      bad(fpath + ".branch_indices", e.what());
    }
    const json& vec = field(f, fpath, "vector");
    if (!vec.is_array()) bad(fpath + ".vector", "expected an array of element labels");
    std::vector<int> images;
    for (std::size_t k = 0; k < vec.size(); ++k) {
      images.push_back(parse_element(group, vec[k], fpath + ".vector[" + std::to_string(k) + "]"));
    }
    data.emplace_back(std::move(branch), std::move(images));
  }

  std::string label = j.value("label", std::string{});
  try {
    doc.spec = make_spec(group, data, label);
  } catch (const ValidationError& e) {
    throw ValidationError("factors: " + std::string(e.what()));
  }

  if (j.contains("subgroup")) {
    const json& s = j.at("subgroup");
    if (!s.is_array()) throw ValidationError("subgroup: expected an array of element labels");
    std::vector<int> gens;
    for (std::size_t i = 0; i < s.size(); ++i) {
      gens.push_back(parse_element(group, s[i], "subgroup[" + std::to_string(i) + "]"));
    }
    doc.subgroup = subgroup_generated(group, gens).elements;
  }

  if (j.contains("limits")) {
    const json& l = j.at("limits");
    if (!l.is_object()) throw ValidationError("limits: expected an object");
    EnumerationLimits lim;
    if (l.contains("max_cosets")) lim.max_cosets = as_int(l.at("max_cosets"), "limits.max_cosets");
    if (l.contains("max_relators")) lim.max_relators = as_int(l.at("max_relators"), "limits.max_relators");
    if (l.contains("max_definitions"))
      lim.max_definitions = as_int(l.at("max_definitions"), "limits.max_definitions");
    if (lim.max_cosets <= 0) throw ValidationError("limits.max_cosets: must be positive");
    if (lim.max_relators <= 0) throw ValidationError("limits.max_relators: must be positive");
    doc.limits = lim;
  }
  return doc;
}

SpecDocument load_spec_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": JSON parse error at byte " + std::to_string(e.byte) + ": " +
                          e.what());
  }
  return parse_spec_document(j);
}

EnumerationLimits parse_limits(const std::string& s, EnumerationLimits base) {
  EnumerationLimits out = base;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? s.size() : comma + 1;
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw ValidationError("limits: expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    long long v = 0;
    try {
      v = std::stoll(val);
    } catch (...) {
      throw ValidationError("limits: bad value in '" + item + "'");
    }
    if (v <= 0) throw ValidationError("limits: value must be positive in '" + item + "'");
    if (key == "max-cosets") {
      out.max_cosets = v;
    } else if (key == "max-relators") {
      out.max_relators = v;
    } else if (key == "max-definitions") {
      out.max_definitions = v;
    } else {
      throw ValidationError("limits: unknown key '" + key + "'");
    }
  }
  return out;
}

nlohmann::json spec_echo_json(const ProductQuotientSpec& spec) {
  json j;
  j["label"] = spec.label;
  j["group"]["order"] = spec.group.order();
  if (!spec.group.abelian_factors().empty()) {
    j["group"]["abelian_invariant_factors"] = spec.group.abelian_factors();
  }
  j["n"] = spec.n();
  json factors = json::array();
  for (const Factor& f : spec.factors) {
    json fj;
    fj["branch"] = f.branch.to_string();
    fj["genus"] = f.genus;
    json vec = json::array();
    for (int v : f.vector.images) vec.push_back(spec.group.label(v));
    fj["vector"] = vec;
    factors.push_back(fj);
  }
  j["factors"] = factors;
  return j;
}

}  // namespace pqw
