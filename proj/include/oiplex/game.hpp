#pragma once

#include <string>
#include <variant>
#include <vector>

#include "oiplex/rational.hpp"

namespace oiplex {

enum class Owner : std::uint8_t { Min, Max };

struct Edge {
  int src = 0;
  int dst = 0;
  Rational weight;
  Rational discount;
};

// A discounted payoff game: a sink-free directed graph whose vertices are
// partitioned between a minimiser and a maximiser, with an exact-rational
// weight and discount on every edge. Immutable after construction.
class Game {
 public:
  Game(int n, std::vector<Owner> owner, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  Owner owner(int v) const { return owner_[static_cast<size_t>(v)]; }
  const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  // Edge ids leaving v, in insertion order.
  const std::vector<int>& out_edges(int v) const {
    return out_[static_cast<size_t>(v)];
  }

 private:
  int n_;
  std::vector<Owner> owner_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
};

// One chosen outgoing edge per vertex, covering both players at once.
struct JointStrategy {
  std::vector<int> choice;  // edge id, indexed by vertex
  bool operator==(const JointStrategy&) const = default;
};

struct Valuation {
  std::vector<Rational> value;  // indexed by vertex
  bool operator==(const Valuation&) const = default;
};

struct SinkVertex {
  int vertex;
};
struct DiscountOutOfRange {
  int edge;
};
struct DuplicateEdge {
  int edge;
};
using GameDefect = std::variant<SinkVertex, DiscountOutOfRange, DuplicateEdge>;

struct ValidationReport {
  std::vector<GameDefect> defects;
  bool ok() const { return defects.empty(); }
  std::string to_string() const;
};

ValidationReport validate_game(const Game& g);

bool is_valid_strategy(const Game& g, const JointStrategy& s);

// Exact value of the unique play from every vertex under s, via the
// stem-plus-cycle decomposition of each play.
Valuation strategy_valuation(const Game& g, const JointStrategy& s);

// Signed slack of the edge's inequation at val: for a maximiser source
// val(v) - (w + lambda*val(v')), mirrored for a minimiser source. Negative
// exactly when val violates the edge's inequation.
Rational offset(const Game& g, const Valuation& val, int edge_id);

// Per-vertex sets of outgoing edges whose offset is exactly zero.
std::vector<std::vector<int>> sharp_out_edges(const Game& g,
                                              const Valuation& val);

// True when every vertex has at least one sharp outgoing edge.
bool defines_strategies(const Game& g, const Valuation& val);

}  // namespace oiplex
