#pragma once

// Adjacency form of a transducer with single-symbol arcs, shared by the
// transducer sources.

#include <vector>

#include "dnacodec/transducer.hpp"

namespace dnacodec::detail {

struct Arc {
  Symbol in;   // kEpsilon or a symbol
  Symbol out;  // kEpsilon or a symbol
  State target;
  bool operator==(const Arc&) const = default;
};

struct Graph {
  std::vector<std::vector<Arc>> out;
  std::vector<char> init;
  std::vector<char> fin;

  std::size_t size() const { return out.size(); }
  State add() {
    out.emplace_back();
    init.push_back(0);
    fin.push_back(0);
    return static_cast<State>(out.size() - 1);
  }
};

// Split edges into single-symbol arcs; (eps, eps) arcs may remain.
Graph expand(const Transducer& t);
// Remove (eps, eps) arcs by closure.
Graph epsilon_free(const Graph& g);
Graph trim(const Graph& g);
// Sort arcs: input arcs first by symbol, then output arcs by symbol.
void canonicalize(Graph& g);
// expand, epsilon_free, trim, canonicalize.
Graph normal_graph(const Transducer& t);
Transducer to_transducer(const Alphabet& al, const Graph& g);

// A path as a list of (state, arc index) steps.
struct PathLabel {
  Word input;
  Word output;
};
void append_arc(PathLabel& p, const Arc& a, const Alphabet& al);

}  // namespace dnacodec::detail
