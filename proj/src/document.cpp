#include "dnum/document.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

namespace dnum {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string join_messages(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const auto& d : diagnostics) {
    if (!out.empty()) out += "; ";
    out += to_string(d);
  }
  return out;
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

// Collects diagnostics while walking the parsed JSON tree.
class Validator {
 public:
  std::vector<Diagnostic> diagnostics;

  void error(std::string path, std::string message) { diagnostics.push_back({std::move(path), std::move(message)}); }

  std::optional<std::vector<std::string>> labels(const json& root) {
    if (!root.contains("frame")) {
      error("", "missing required field \"frame\"");
      return std::nullopt;
    }
    const json& frame = root["frame"];
    if (!frame.is_array() || frame.empty()) {
      error("/frame", "must be a nonempty array of labels");
      return std::nullopt;
    }
    std::vector<std::string> out;
    bool ok = true;
    for (std::size_t i = 0; i < frame.size(); ++i) {
      const std::string path = "/frame/" + std::to_string(i);
      if (!frame[i].is_string()) {
        error(path, "label must be a string");
        ok = false;
        continue;
      }
      auto label = frame[i].get<std::string>();
      if (label.empty()) {
        error(path, "label must be nonempty");
        ok = false;
      } else if (label == kUnknownLabel) {
        error(path, "label \"X\" is reserved for the unknown event");
        ok = false;
      } else if (std::find(out.begin(), out.end(), label) != out.end()) {
        error(path, "duplicate label \"" + label + "\"");
        ok = false;
      }
      out.push_back(std::move(label));
    }
    if (out.size() > kMaxFrameSize) {
      error("/frame", "at most " + std::to_string(kMaxFrameSize) + " elements are supported");
      ok = false;
    }
    if (!ok) return std::nullopt;
    return out;
  }

  std::optional<double> unit_number(const json& node, const std::string& path, const std::string& what) {
    if (!node.is_number()) {
      error(path, what + " must be a number");
      return std::nullopt;
    }
    const double v = node.get<double>();
    if (!(v >= 0.0 && v <= 1.0)) {
      error(path, what + " " + node.dump() + " is outside [0, 1]");
      return std::nullopt;
    }
    return v;
  }

  void degree_list(const json& list, const std::string& path, const std::vector<std::string>& labels,
                   bool with_unknown, std::vector<DegreeSpec>& out) {
    if (!list.is_array()) {
      error(path, "must be an array");
      return;
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string item = path + "/" + std::to_string(i);
      const json& entry = list[i];
      if (!entry.is_object() || !entry.contains("pair") || !entry.contains("degree")) {
        error(item, "expected {\"pair\": [label, label], \"degree\": number}");
        continue;
      }
      const json& pair = entry["pair"];
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
        error(item + "/pair", "must be an array of two labels");
        continue;
      }
      auto a = pair[0].get<std::string>();
      auto b = pair[1].get<std::string>();
      const std::string pair_text = "(" + a + ", " + b + ")";
      auto degree = unit_number(entry["degree"], item + "/degree", "degree for pair " + pair_text);
      bool ok = degree.has_value();
      auto known = [&](const std::string& l) { return std::find(labels.begin(), labels.end(), l) != labels.end(); };
      for (const auto& l : {a, b}) {
        if (l != kUnknownLabel && !known(l)) {
          error(item + "/pair", "unknown label \"" + l + "\" in pair " + pair_text);
          ok = false;
        }
      }
      const bool has_x = a == kUnknownLabel || b == kUnknownLabel;
      if (with_unknown && (!has_x || a == b)) {
        error(item + "/pair", "pairs under \"unknown\" must join one frame label with \"X\"");
        ok = false;
      } else if (!with_unknown && has_x) {
        error(item + "/pair", "degrees involving \"X\" belong under \"unknown\"");
        ok = false;
      } else if (a == b) {
        error(item + "/pair", "pair " + pair_text + " repeats a label");
        ok = false;
      }
      auto key = std::minmax(a, b);
      if (!seen.insert({key.first, key.second}).second) {
        error(item + "/pair", "duplicate entry for pair " + pair_text);
        ok = false;
      }
      if (ok) out.push_back({a, b, *degree});
    }
  }

  std::optional<int> cardinality(const json& unknown) {
    if (!unknown.contains("cardinality")) return std::nullopt;
    const json& c = unknown["cardinality"];
    if (c.is_null() || (c.is_string() && c.get<std::string>() == "unknown")) return std::nullopt;
    if (!c.is_number_integer() || c.get<long long>() < 2 || c.get<long long>() > 1'000'000'000) {
      error("/unknown/cardinality", "cardinality must be an integer >= 2 or \"unknown\"");
      return std::nullopt;
    }
    return static_cast<int>(c.get<long long>());
  }

  std::vector<FocalElement> masses(const json& list, const Frame& frame) {
    std::vector<FocalElement> out;
    if (!list.is_array()) {
      error("/masses", "must be an array");
      return out;
    }
    std::set<Subset> seen;
    double total = 0.0;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string item = "/masses/" + std::to_string(i);
      const json& entry = list[i];
      if (!entry.is_object() || !entry.contains("set") || !entry.contains("mass")) {
        error(item, "expected {\"set\": [labels...], \"mass\": number}");
        continue;
      }
      const json& set = entry["set"];
      const json& mass = entry["mass"];
      bool ok = true;
      Subset s;
      if (!set.is_array()) {
        error(item + "/set", "must be an array of labels");
        ok = false;
      } else {
        for (std::size_t k = 0; k < set.size(); ++k) {
          if (!set[k].is_string()) {
            error(item + "/set/" + std::to_string(k), "label must be a string");
            ok = false;
            continue;
          }
          const auto label = set[k].get<std::string>();
          auto index = frame.index_of(label);
          if (!index) {
            error(item + "/set/" + std::to_string(k), "unknown label \"" + label + "\"");
            ok = false;
          } else if (s.contains(*index)) {
            error(item + "/set/" + std::to_string(k), "label \"" + label + "\" repeated within the set");
            ok = false;
          } else {
            s = s | Subset::singleton(*index);
          }
        }
      }
      double value = 0.0;
      if (!mass.is_number() || !std::isfinite(mass.get<double>()) || mass.get<double>() < 0.0) {
        error(item + "/mass", "mass must be a finite nonnegative number");
        ok = false;
      } else {
        value = mass.get<double>();
        if (value > 1.0) {
          error(item + "/mass", "mass " + mass.dump() + " exceeds 1");
          ok = false;
        }
      }
      if (!ok) continue;
      if (s.empty()) {
        if (value > 0.0) error(item, "D(∅) must be 0: the empty set cannot carry mass");
        continue;
      }
      if (!seen.insert(s).second) {
        error(item + "/set", "duplicate entry for set " + frame.describe(s));
        continue;
      }
      total += value;
      out.push_back({s, value});
    }
    if (total > 1.0 + kMassTolerance) {
      error("/masses", "total mass " + json(total).dump() + " exceeds 1");
    }
    return out;
  }
};

template <class Json>
Json degree_entry(const std::string& a, const std::string& b, double degree) {
  Json entry;
  entry["pair"] = Json::array({a, b});
  entry["degree"] = degree;
  return entry;
}

}  // namespace

std::string to_string(const Diagnostic& diagnostic) {
  if (diagnostic.path.empty()) return diagnostic.message;
  return diagnostic.path + ": " + diagnostic.message;
}

DocumentError::DocumentError(std::vector<Diagnostic> diagnostics)
    : DNumberError(join_messages(diagnostics)), diagnostics_(std::move(diagnostics)) {}

ValidationResult validate_document(std::string_view text) {
  ValidationResult result;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    result.diagnostics.push_back({"", "syntax error at " + line_column(text, e.byte) + ": " + e.what()});
    return result;
  }
  Validator v;
  if (!root.is_object()) {
    v.error("", "document must be a JSON object");
    result.diagnostics = std::move(v.diagnostics);
    return result;
  }
  for (const auto& [key, value] : root.items()) {
    if (key != "frame" && key != "unknown" && key != "non_exclusivity" && key != "masses") {
      v.error("/" + key, "unexpected field");
    }
  }

  auto labels = v.labels(root);
  std::optional<int> cardinality;
  std::vector<DegreeSpec> degrees;
  if (root.contains("unknown")) {
    const json& unknown = root["unknown"];
    if (!unknown.is_object()) {
      v.error("/unknown", "must be an object");
    } else {
      for (const auto& [key, value] : unknown.items()) {
        if (key != "cardinality" && key != "non_exclusivity") v.error("/unknown/" + key, "unexpected field");
      }
      cardinality = v.cardinality(unknown);
      if (labels && unknown.contains("non_exclusivity")) {
        v.degree_list(unknown["non_exclusivity"], "/unknown/non_exclusivity", *labels, true, degrees);
      }
    }
  }
  if (labels && root.contains("non_exclusivity")) {
    v.degree_list(root["non_exclusivity"], "/non_exclusivity", *labels, false, degrees);
  }
  if (!root.contains("masses")) v.error("", "missing required field \"masses\"");
  if (!labels) {
    result.diagnostics = std::move(v.diagnostics);
    return result;
  }

  // The frame is built even when degrees were rejected so masses can still be checked.
  auto frame = std::make_shared<const Frame>(*labels, cardinality, degrees);
  std::vector<FocalElement> entries;
  if (root.contains("masses")) entries = v.masses(root["masses"], *frame);

  if (v.diagnostics.empty()) {
    try {
      result.dnumber.emplace(frame, std::move(entries));
    } catch (const DNumberError& e) {
      v.error("", e.what());
    }
  }
  result.diagnostics = std::move(v.diagnostics);
  return result;
}

DNumber parse_document(std::string_view text) {
  auto result = validate_document(text);
  if (!result.dnumber) throw DocumentError(std::move(result.diagnostics));
  return std::move(*result.dnumber);
}

std::string serialize_document(const DNumber& d) {
  const Frame& frame = d.frame();
  const std::size_t n = frame.size();
  ordered_json doc;
  doc["frame"] = frame.labels();

  ordered_json x_degrees = ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) {
    if (double p = frame.degree(i, n); p != 0.0) {
      x_degrees.push_back(degree_entry<ordered_json>(frame.label(i), std::string(kUnknownLabel), p));
    }
  }
  if (frame.unknown_cardinality() || !x_degrees.empty()) {
    ordered_json unknown = ordered_json::object();
    if (frame.unknown_cardinality()) unknown["cardinality"] = *frame.unknown_cardinality();
    if (!x_degrees.empty()) unknown["non_exclusivity"] = std::move(x_degrees);
    doc["unknown"] = std::move(unknown);
  }

  ordered_json degrees = ordered_json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (double p = frame.degree(i, j); p != 0.0) {
        degrees.push_back(degree_entry<ordered_json>(frame.label(i), frame.label(j), p));
      }
  if (!degrees.empty()) doc["non_exclusivity"] = std::move(degrees);

  ordered_json masses = ordered_json::array();
  for (const auto& e : d.focal_elements()) {
    ordered_json set = ordered_json::array();
    for (auto i : indices_of(e.set)) set.push_back(frame.label(i));
    ordered_json entry;
    entry["set"] = std::move(set);
    entry["mass"] = e.mass;
    masses.push_back(std::move(entry));
  }
  doc["masses"] = std::move(masses);
  return doc.dump(2) + "\n";
}

}  // namespace dnum
