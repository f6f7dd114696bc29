#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dialg/diagram.hpp"
#include "dialg/fi.hpp"
#include "dialg/hom.hpp"

namespace dialg {

// Outcome of a verification suite. Serialized by io.hpp in field order:
// check, family, m, <degree_key>, parameters, total, failures, extras.
struct Report {
  std::string check;
  std::optional<Family> family;
  std::optional<int> m;  // absent when a suite covers every m
  int n = 0;
  std::string degree_key = "n";
  std::vector<std::pair<std::string, std::string>> parameters;
  std::size_t total = 0;
  std::vector<std::pair<std::string, long long>> extras;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// Compact one-line forms used in failure messages.
inline std::string describe_blocks(const std::vector<Block>& blocks) {
  std::string s = "[";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += ',';
    s += '[';
    for (std::size_t k = 0; k < blocks[i].size(); ++k) {
      if (k) s += ',';
      s += std::to_string(blocks[i][k]);
    }
    s += ']';
  }
  return s + "]";
}

inline std::string describe(const Diagram& d) {
  return "n=" + std::to_string(d.size()) + " " + describe_blocks(d.blocks());
}

inline std::string describe(const BlobDiagram& x) {
  std::string s = "Hom(" + std::to_string(x.target()) + "," + std::to_string(x.source()) + ") " +
                  describe_blocks(x.blocks()) + " marked=[";
  for (std::size_t i = 0; i < x.marked().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x.marked()[i]);
  }
  return s + "]";
}

inline std::string describe(const FIMorphism& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.map().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(f.map()[i]);
  }
  return s + "]->[" + std::to_string(f.target()) + "]";
}

}  // namespace dialg
