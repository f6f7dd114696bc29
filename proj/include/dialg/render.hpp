#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dialg/diagram.hpp"
#include "dialg/hom.hpp"

namespace dialg::render {

// Two node columns, one row per absolute value, the highest row on top. Each
// node shows the letter of its block; marked blocks (blob connections or
// marked partition blocks) carry a trailing '*'.

namespace detail {

inline std::string block_name(std::size_t i) {
  std::string s(1, static_cast<char>('a' + i % 26));
  if (i >= 26) s += std::to_string(i / 26);
  return s;
}

inline std::string ascii_columns(const std::vector<Block>& blocks, const std::vector<char>& marked,
                                 int left_rows, int right_rows) {
  auto name_of = [&](int v) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (int w : blocks[i]) {
        if (w == v) return block_name(i) + (marked[i] ? "*" : "");
      }
    }
    return std::string("?");
  };
  auto pad = [](std::string s, std::size_t w, bool right_align) {
    while (s.size() < w) s = right_align ? " " + s : s + " ";
    return s;
  };
  std::string out;
  for (int k = std::max(left_rows, right_rows); k >= 1; --k) {
    std::string left = k <= left_rows ? pad(std::to_string(-k), 4, true) + " " + pad(name_of(-k), 4, false) : std::string(9, ' ');
    std::string right = k <= right_rows ? pad(name_of(k), 4, true) + " " + std::to_string(k) : "";
    out += left + "   " + right;
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out += block_name(i) + (marked[i] ? "*" : "") + ": {";
    for (std::size_t k = 0; k < blocks[i].size(); ++k) out += (k ? ", " : "") + std::to_string(blocks[i][k]);
    out += "}\n";
  }
  return out;
}

inline std::string dot_id(int v) { return v < 0 ? "L" + std::to_string(-v) : "R" + std::to_string(v); }

inline std::string dot_graph(const std::vector<Block>& blocks, const std::vector<char>& marked,
                             int left_rows, int right_rows, bool blob_vertex, int blob_valence) {
  std::string out = "graph diagram {\n  rankdir=LR;\n  node [shape=circle, fontsize=10];\n";
  out += "  subgraph left {\n    rank=same;\n";
  for (int k = left_rows; k >= 1; --k) out += "    " + dot_id(-k) + " [label=\"" + std::to_string(-k) + "\"];\n";
  out += "  }\n  subgraph right {\n    rank=same;\n";
  for (int k = right_rows; k >= 1; --k) out += "    " + dot_id(k) + " [label=\"" + std::to_string(k) + "\"];\n";
  out += "  }\n";
  if (blob_vertex) {
    out += "  blob [shape=box, style=filled, fillcolor=gray80, label=\"" + std::to_string(blob_valence) + "-blob\"];\n";
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    const std::string style = marked[i] && !blob_vertex ? " [color=red]" : "";
    if (marked[i] && !blob_vertex) {
      for (int v : b) out += "  " + dot_id(v) + " [color=red];\n";
    }
    for (std::size_t k = 1; k < b.size(); ++k) out += "  " + dot_id(b[k - 1]) + " -- " + dot_id(b[k]) + style + ";\n";
    if (marked[i] && blob_vertex) {
      for (int v : b) out += "  " + dot_id(v) + " -- blob;\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace detail

inline std::string ascii(const Diagram& d) {
  return detail::ascii_columns(d.blocks(), std::vector<char>(d.blocks().size(), 0), d.size(), d.size());
}

inline std::string ascii(const BlobDiagram& x) {
  std::vector<char> marked(x.blocks().size(), 0);
  for (std::size_t i : x.marked()) marked[i] = 1;
  return detail::ascii_columns(x.blocks(), marked, x.source(), x.target());
}

inline std::string dot(const Diagram& d) {
  return detail::dot_graph(d.blocks(), std::vector<char>(d.blocks().size(), 0), d.size(), d.size(), false, 0);
}

// Brauer-type blob diagrams get a box vertex for the blob; marked partition
// blocks are drawn in red.
inline std::string dot(const BlobDiagram& x) {
  std::vector<char> marked(x.blocks().size(), 0);
  for (std::size_t i : x.marked()) marked[i] = 1;
  const bool blob_vertex = x.family() != Family::Partition && !x.marked().empty();
  return detail::dot_graph(x.blocks(), marked, x.source(), x.target(), blob_vertex,
                           x.source() - x.target());
}

}  // namespace dialg::render
