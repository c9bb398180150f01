#pragma once

#include <ctime>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "design_core.hpp"
#include "version.hpp"

namespace pcbd {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    size_t a = field.find_first_not_of(" \t\r");
    size_t b = field.find_last_not_of(" \t\r");
    out.push_back(a == std::string::npos ? "" : field.substr(a, b - a + 1));
  }
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// CSV: header "block,attr1,...,attrK", one row per pair, entries -2/+2
// (0 when an attribute shows the same level on both sides).

inline void write_design_csv(std::ostream& os, const blocked_design& d) {
  os << "block";
  for (int j = 1; j <= d.attributes(); ++j) os << ",attr" << j;
  os << "\n";
  int r = 0, blk = 1;
  for (int m : d.layout.sizes()) {
    for (int t = 0; t < m; ++t, ++r) {
      os << blk;
      for (int j = 0; j < d.attributes(); ++j) os << "," << d.f(r, j);
      os << "\n";
    }
    ++blk;
  }
}

inline blocked_design read_design_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw io_error("empty design file");
  auto header = detail::split_csv_line(line);
  if (header.empty() || header[0] != "block")
    throw io_error("design CSV must start with a 'block' column");
  const int k = static_cast<int>(header.size()) - 1;
  if (k < 1) throw io_error("design CSV has no attribute columns");
  std::vector<std::vector<long long>> rows;
  std::vector<int> sizes;
  int current_block = 0;
  while (std::getline(is, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fields = detail::split_csv_line(line);
    if (static_cast<int>(fields.size()) != k + 1)
      throw io_error("design CSV row has " + std::to_string(fields.size()) + " fields, want " +
                     std::to_string(k + 1));
    int blk;
    try {
      blk = std::stoi(fields[0]);
    } catch (const std::exception&) {
      throw io_error("bad block id '" + fields[0] + "'");
    }
    if (blk == current_block + 1) {
      sizes.push_back(0);
      current_block = blk;
    } else if (blk != current_block) {
      throw io_error("block ids must be contiguous and nondecreasing; saw " +
                     std::to_string(blk) + " after " + std::to_string(current_block));
    }
    ++sizes.back();
    std::vector<long long> row(k);
    for (int j = 0; j < k; ++j) {
      try {
        row[j] = std::stoll(fields[j + 1]);
      } catch (const std::exception&) {
        throw io_error("bad entry '" + fields[j + 1] + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw io_error("design CSV has no rows");
  imat f(static_cast<int>(rows.size()), k);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < k; ++j) f(static_cast<int>(i), j) = rows[i][j];
  return blocked_design(f, block_layout(sizes));
}

// ---------------------------------------------------------------------------
// Level-pair text: one line per pair, tokens (1,2) / (2,1) per attribute.

inline void write_design_pairs(std::ostream& os, const blocked_design& d) {
  for (int r = 0; r < d.pairs(); ++r) {
    for (int j = 0; j < d.attributes(); ++j) {
      level_pair lp = decode_effects(d.f(r, j));
      os << (j ? " " : "") << "(" << lp.first << "," << lp.second << ")";
    }
    os << "\n";
  }
}

inline imat read_design_pairs(std::istream& is) {
  std::vector<std::vector<long long>> rows;
  std::string line;
  while (std::getline(is, line)) {
    std::vector<long long> row;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      if (tok == "(1,2)")
        row.push_back(2);
      else if (tok == "(2,1)")
        row.push_back(-2);
      else
        throw io_error("unknown level-pair token '" + tok + "'");
    }
    if (row.empty()) continue;
    if (!rows.empty() && rows.front().size() != row.size())
      throw io_error("inconsistent attribute count across rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw io_error("no level-pair rows found");
  imat f(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j) f(i, j) = rows[i][j];
  return f;
}

// ---------------------------------------------------------------------------
// JSON: design plus the descriptor that records where it came from.

inline ordered_json claim_to_json(const closed_form_claim& c) {
  ordered_json j;
  j["label"] = c.label;
  if (c.has_ij) {
    j["form"] = "alpha I + beta J";
    j["alpha"] = c.alpha.str();
    if (c.beta_lower || c.beta_upper) {
      if (c.beta_lower) j["beta_above"] = c.beta_lower->str();
      if (c.beta_upper) j["beta_below"] = c.beta_upper->str();
    } else {
      j["beta"] = c.beta.str();
    }
  }
  if (c.explicit_matrix) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < c.explicit_matrix->rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (int jj = 0; jj < c.explicit_matrix->cols(); ++jj)
        row.push_back((*c.explicit_matrix)(i, jj).str());
      rows.push_back(row);
    }
    j["matrix"] = rows;
  }
  if (!c.eigenvalues.empty()) {
    ordered_json eigs = ordered_json::array();
    for (const auto& [v, mult] : c.eigenvalues)
      eigs.push_back(ordered_json{{"value", v.str()}, {"multiplicity", mult}});
    j["eigenvalues"] = eigs;
  }
  j["archived"] = c.archived;
  return j;
}

inline ordered_json descriptor_to_json(const design_descriptor& desc) {
  ordered_json j;
  j["method"] = desc.method;
  j["class"] = desc.class_label;
  ordered_json params = ordered_json::object();
  for (const auto& [key, value] : desc.params) params[key] = value;
  j["parameters"] = params;
  j["optimality"] = desc.optimality;
  j["notes"] = desc.notes;
  ordered_json claims = ordered_json::array();
  for (const auto& c : desc.claims) claims.push_back(claim_to_json(c));
  j["claims"] = claims;
  return j;
}

inline ordered_json design_to_json(const blocked_design& d,
                                   const design_descriptor* desc = nullptr) {
  ordered_json j;
  j["format"] = "pcbd-design";
  j["toolkit_version"] = toolkit_version;
  ordered_json dj;
  dj["pairs"] = d.pairs();
  dj["attributes"] = d.attributes();
  dj["block_sizes"] = d.layout.sizes();
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < d.pairs(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < d.attributes(); ++c) row.push_back(d.f(r, c));
    rows.push_back(row);
  }
  dj["rows"] = rows;
  j["design"] = dj;
  if (desc) j["provenance"] = descriptor_to_json(*desc);
  return j;
}

inline blocked_design design_from_json(const ordered_json& j) {
  if (!j.contains("design")) throw io_error("JSON design file lacks a 'design' object");
  const auto& dj = j.at("design");
  std::vector<int> sizes = dj.at("block_sizes").get<std::vector<int>>();
  const auto& rows = dj.at("rows");
  if (!rows.is_array() || rows.empty()) throw io_error("JSON design has no rows");
  const int n = static_cast<int>(rows.size());
  const int k = static_cast<int>(rows.at(0).size());
  imat f(n, k);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows.at(i);
    if (static_cast<int>(row.size()) != k) throw io_error("ragged rows in JSON design");
    for (int c = 0; c < k; ++c) f(i, c) = row.at(c).get<long long>();
  }
  return blocked_design(f, block_layout(sizes));
}

inline closed_form_claim claim_from_json(const ordered_json& j) {
  closed_form_claim c;
  c.label = j.value("label", std::string{});
  if (j.contains("alpha")) {
    c.has_ij = true;
    c.alpha = parse_rational(j.at("alpha").get<std::string>());
    if (j.contains("beta")) c.beta = parse_rational(j.at("beta").get<std::string>());
    if (j.contains("beta_above")) c.beta_lower = parse_rational(j.at("beta_above").get<std::string>());
    if (j.contains("beta_below")) c.beta_upper = parse_rational(j.at("beta_below").get<std::string>());
  }
  if (j.contains("matrix")) {
    const auto& rows = j.at("matrix");
    if (!rows.is_array() || rows.empty()) throw io_error("claim matrix must be a nonempty array");
    const int n = static_cast<int>(rows.size());
    const int m = static_cast<int>(rows.at(0).size());
    qmat mm(n, m);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows.at(i).size()) != m) throw io_error("ragged claim matrix");
      for (int jj = 0; jj < m; ++jj)
        mm(i, jj) = parse_rational(rows.at(i).at(jj).get<std::string>());
    }
    c.explicit_matrix = std::move(mm);
  }
  if (j.contains("eigenvalues")) {
    for (const auto& e : j.at("eigenvalues"))
      c.eigenvalues.emplace_back(parse_rational(e.at("value").get<std::string>()),
                                 e.at("multiplicity").get<int>());
  }
  c.archived = j.value("archived", false);
  return c;
}

inline design_descriptor descriptor_from_json(const ordered_json& j) {
  design_descriptor d;
  d.method = j.value("method", 0);
  d.class_label = j.value("class", std::string{});
  if (j.contains("parameters"))
    for (const auto& [key, value] : j.at("parameters").items())
      d.params[key] = value.get<std::string>();
  d.optimality = j.value("optimality", std::string{});
  if (j.contains("notes")) d.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("claims"))
    for (const auto& cj : j.at("claims")) d.claims.push_back(claim_from_json(cj));
  return d;
}

// ---------------------------------------------------------------------------
// File helpers and the run manifest that accompanies every written file.

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot write " + path);
  out << content;
  if (!out) throw io_error("failed writing " + path);
}

inline blocked_design load_design(const std::string& path) {
  const std::string text = read_text_file(path);
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
    ordered_json j = ordered_json::parse(text, nullptr, true, true);
    return design_from_json(j);
  }
  std::istringstream ss(text);
  return read_design_csv(ss);
}

// Loads a design and, for JSON files, whatever provenance they carry.
// CSV files yield an empty descriptor: the design alone makes no claims.
inline construction_result load_design_with_provenance(const std::string& path) {
  const std::string text = read_text_file(path);
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
    ordered_json j = ordered_json::parse(text, nullptr, true, true);
    construction_result cr;
    cr.design = design_from_json(j);
    if (j.contains("provenance")) cr.descriptor = descriptor_from_json(j.at("provenance"));
    return cr;
  }
  std::istringstream ss(text);
  construction_result cr;
  cr.design = read_design_csv(ss);
  return cr;
}

inline std::string manifest_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Writes PATH.manifest.json describing the run that produced PATH.
inline void write_manifest(const std::string& output_path, const std::string& subcommand,
                           const std::map<std::string, std::string>& parameters,
                           const std::vector<std::string>& inputs) {
  ordered_json j;
  j["subcommand"] = subcommand;
  ordered_json params = ordered_json::object();
  for (const auto& [key, value] : parameters) params[key] = value;
  j["parameters"] = params;
  j["inputs"] = inputs;
  j["outputs"] = std::vector<std::string>{output_path};
  j["toolkit_version"] = toolkit_version;
  j["generated_at"] = manifest_timestamp();
  write_text_file(output_path + ".manifest.json", j.dump(2) + "\n");
}

}  // namespace pcbd
