#include "tropical/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tropical {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
  throw ParseError(field + ": " + msg);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + key, "missing");
  return *it;
}

std::size_t index_value(const json& v, std::size_t limit, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer index");
  auto k = v.get<long long>();
  if (k < 1 || static_cast<std::size_t>(k) > limit) {
    fail(path, "index " + std::to_string(k) + " outside 1.." + std::to_string(limit));
  }
  return static_cast<std::size_t>(k - 1);
}

IndexSet index_list(const json& v, std::size_t limit, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of indices");
  IndexSet s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    std::size_t i = index_value(v[k], limit, path + "[" + std::to_string(k) + "]");
    if (s.contains(i)) fail(path, "index " + std::to_string(i + 1) + " listed twice");
    s.insert(i);
  }
  return s;
}

}  // namespace

SpecFile parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document", "expected a JSON object");

  SpecFile out;
  const json& model = field(doc, "model", "");
  if (!model.is_string()) fail("model", "expected a string");
  out.raw.model = parse_model(model.get<std::string>());

  const json& n = field(doc, "n", "");
  if (!n.is_number_integer() || n.get<long long>() < 1) fail("n", "expected a positive integer");
  const auto ambient = static_cast<std::size_t>(n.get<long long>());

  bool affine = false;
  if (auto it = doc.find("affine"); it != doc.end()) {
    if (!it->is_boolean()) fail("affine", "expected a boolean");
    affine = it->get<bool>();
  }
  if (affine) {
    const json& cz = field(doc, "contains_zero", "");
    if (!cz.is_boolean()) fail("contains_zero", "expected a boolean");
    out.contains_zero = cz.get<bool>();
  } else if (doc.contains("contains_zero")) {
    fail("contains_zero", "only allowed with \"affine\": true");
  }
  out.raw.dim = affine ? ambient + 1 : ambient;

  out.raw.rows = index_list(field(doc, "I", ""), out.raw.dim, "I");
  out.raw.cols = index_list(field(doc, "J", ""), out.raw.dim, "J");

  const json& sigma = field(doc, "sigma", "");
  if (!sigma.is_array()) fail("sigma", "expected an array");
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    const std::string path = "sigma[" + std::to_string(k) + "].";
    const json& e = sigma[k];
    if (!e.is_object()) fail("sigma[" + std::to_string(k) + "]", "expected an object");
    std::size_t i = index_value(field(e, "i", path), out.raw.dim, path + "i");
    std::size_t j = index_value(field(e, "j", path), out.raw.dim, path + "j");
    if (!out.raw.rows.contains(i)) fail(path + "i", std::to_string(i + 1) + " is not in I");
    if (!out.raw.cols.contains(j)) fail(path + "j", std::to_string(j + 1) + " is not in J");
    const json& th = field(e, "threshold", path);
    if (!th.is_string()) fail(path + "threshold", "expected a string such as \"1/2\", \"zero\" or \"inf\"");
    const json& closed = field(e, "closed", path);
    if (!closed.is_boolean()) fail(path + "closed", "expected a boolean");
    Scalar t = Scalar::zero(out.raw.model);
    try {
      t = parse_scalar(out.raw.model, th.get<std::string>());
    } catch (const std::exception& ex) {
      fail(path + "threshold", ex.what());
    }
    if (t.is_zero() && !closed.get<bool>()) fail(path + "closed", "threshold zero must be closed");
    if (!out.raw.sigma.emplace(std::make_pair(i, j), BoundarySet::make(t, closed.get<bool>())).second) {
      fail("sigma[" + std::to_string(k) + "]", "duplicate entry for (" + std::to_string(i + 1) + "," +
                                                    std::to_string(j + 1) + ")");
    }
  }
  for (auto i : out.raw.rows) {
    for (auto j : out.raw.cols) {
      if (!out.raw.sigma.count({i, j})) {
        fail("sigma", "missing entry for (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
  return out;
}

SpecFile read_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_spec(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string serialize_spec(const SpecFile& spec) {
  nlohmann::ordered_json doc;
  doc["model"] = std::string(to_string(spec.raw.model));
  doc["n"] = spec.affine() ? spec.raw.dim - 1 : spec.raw.dim;
  if (spec.affine()) {
    doc["affine"] = true;
    doc["contains_zero"] = *spec.contains_zero;
  }
  auto one_based = [](const IndexSet& s) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (auto k : s) a.push_back(k + 1);
    return a;
  };
  doc["I"] = one_based(spec.raw.rows);
  doc["J"] = one_based(spec.raw.cols);
  doc["sigma"] = nlohmann::ordered_json::array();
  for (const auto& [key, s] : spec.raw.sigma) {
    nlohmann::ordered_json e;
    e["i"] = key.first + 1;
    e["j"] = key.second + 1;
    e["threshold"] = to_string(s.threshold());
    e["closed"] = s.closed();
    doc["sigma"].push_back(std::move(e));
  }
  return doc.dump(2) + "\n";
}

std::string serialize_spec(const HemispaceSpec& spec) { return serialize_spec(SpecFile{spec.raw(), std::nullopt}); }

std::string serialize_spec(const AffineHemispace& h) {
  return serialize_spec(SpecFile{h.base().raw(), h.contains_zero()});
}

}  // namespace tropical
