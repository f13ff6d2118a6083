#pragma once

// JSON specification files. Indices in files are 1-based:
//   {"model": "max-times", "n": 2, "I": [1], "J": [2],
//    "sigma": [{"i": 1, "j": 2, "threshold": "1", "closed": true}]}
// Affine files add "affine": true and "contains_zero", keep "n" as the
// ambient dimension and list n+1 in I.

#include <optional>
#include <string>
#include <string_view>

#include "tropical/hemispace.hpp"

namespace tropical {

struct SpecFile {
  RawSpec raw;
  // Set for affine files.
  std::optional<bool> contains_zero;

  bool affine() const { return contains_zero.has_value(); }
};

// Throws ParseError naming the offending field.
SpecFile parse_spec(std::string_view json_text);
SpecFile read_spec_file(const std::string& path);

// Canonical form: sorted I and J, sigma sorted by (i, j), fixed key order.
std::string serialize_spec(const SpecFile& spec);
std::string serialize_spec(const HemispaceSpec& spec);
std::string serialize_spec(const AffineHemispace& h);

}  // namespace tropical
