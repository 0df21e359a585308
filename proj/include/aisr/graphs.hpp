#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aisr/terms.hpp"

namespace aisr {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph on variables. Edges are stored with
/// first < second.
struct TermGraph {
  VarSet vertices;
  std::set<std::pair<Variable, Variable>> edges;

  bool has_edge(const Variable& a, const Variable& b) const;
  std::vector<Variable> neighbours(const Variable& v) const;
};

/// Graph of the length-2 words of A: vertex set c(A'), an edge {x, y} for
/// each word xy. Other lengths are ignored. Throws GraphError on a word xx.
TermGraph term_graph(const Term& a);

/// Exactly one of the two members is set.
struct Bipartition {
  /// Closed odd cycle v0 v1 ... v(k-1), consecutive vertices adjacent and
  /// v(k-1) adjacent to v0.
  std::optional<std::vector<Variable>> odd_cycle;
  /// Proper 2-colouring (0/1), computed per connected component with the
  /// smallest vertex of each component coloured 0.
  std::optional<std::map<Variable, int>> coloring;

  bool bipartite() const { return coloring.has_value(); }
};

/// Breadth-first 2-colouring; on a clash the two tree paths to the common
/// ancestor close an odd cycle.
Bipartition odd_cycle(const TermGraph& g);

std::vector<VarSet> connected_components(const TermGraph& g);

}  // namespace aisr
