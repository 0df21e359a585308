#include "aisr/graphs.hpp"

#include <algorithm>
#include <deque>

namespace aisr {

bool TermGraph::has_edge(const Variable& a, const Variable& b) const {
  return a < b ? edges.count({a, b}) > 0 : edges.count({b, a}) > 0;
}

std::vector<Variable> TermGraph::neighbours(const Variable& v) const {
  std::vector<Variable> out;
  for (const auto& [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TermGraph term_graph(const Term& a) {
  TermGraph g;
  for (const auto& w : a.words()) {
    if (w.length() != 2) continue;
    const auto& x = w.letters()[0];
    const auto& y = w.letters()[1];
    if (x == y)
      throw GraphError("word " + to_string(w) + " repeats a variable and is not a simple edge");
    g.vertices.insert(x);
    g.vertices.insert(y);
    g.edges.insert(x < y ? std::pair{x, y} : std::pair{y, x});
  }
  return g;
}

namespace {

using Adjacency = std::map<Variable, std::vector<Variable>>;

Adjacency adjacency(const TermGraph& g) {
  Adjacency adj;
  for (const auto& v : g.vertices) adj[v];
  for (const auto& [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& [v, ns] : adj) std::sort(ns.begin(), ns.end());
  return adj;
}

}  // namespace

Bipartition odd_cycle(const TermGraph& g) {
  const auto adj = adjacency(g);
  std::map<Variable, int> color;
  std::map<Variable, std::size_t> depth;
  std::map<Variable, Variable> parent;

  for (const auto& root : g.vertices) {
    if (color.count(root)) continue;
    color[root] = 0;
    depth[root] = 0;
    std::deque<Variable> queue{root};
    while (!queue.empty()) {
      const Variable v = queue.front();
      queue.pop_front();
      for (const auto& w : adj.at(v)) {
        if (!color.count(w)) {
          color[w] = 1 - color[v];
          depth[w] = depth[v] + 1;
          parent.emplace(w, v);
          queue.push_back(w);
          continue;
        }
        if (color[w] != color[v]) continue;

        // Same colour on both ends: walk both up to their common ancestor.
        std::vector<Variable> left{v}, right{w};
        Variable a = v, b = w;
        while (depth[a] > depth[b]) left.push_back(a = parent.at(a));
        while (depth[b] > depth[a]) right.push_back(b = parent.at(b));
        while (a != b) {
          left.push_back(a = parent.at(a));
          right.push_back(b = parent.at(b));
        }
        right.pop_back();  // the ancestor is already the last entry of left
        std::vector<Variable> cycle(left.rbegin(), left.rend());
        cycle.insert(cycle.end(), right.begin(), right.end());
        return Bipartition{std::move(cycle), std::nullopt};
      }
    }
  }
  return Bipartition{std::nullopt, std::move(color)};
}

std::vector<VarSet> connected_components(const TermGraph& g) {
  const auto adj = adjacency(g);
  std::vector<VarSet> out;
  VarSet seen;
  for (const auto& root : g.vertices) {
    if (seen.count(root)) continue;
    VarSet comp;
    std::vector<Variable> stack{root};
    seen.insert(root);
    while (!stack.empty()) {
      const Variable v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (const auto& w : adj.at(v))
        if (seen.insert(w).second) stack.push_back(w);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace aisr
