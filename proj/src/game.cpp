#include "oiplex/game.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace oiplex {

Game::Game(int n, std::vector<Owner> owner, std::vector<Edge> edges)
    : n_(n), owner_(std::move(owner)), edges_(std::move(edges)) {
  if (n_ < 0 || owner_.size() != static_cast<size_t>(n_))
    throw std::invalid_argument("owner list does not match vertex count");
  out_.resize(static_cast<size_t>(n_));
  for (size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.src < 0 || ed.src >= n_ || ed.dst < 0 || ed.dst >= n_)
      throw std::out_of_range("edge endpoint outside 0..n-1");
    out_[static_cast<size_t>(ed.src)].push_back(static_cast<int>(e));
  }
}

ValidationReport validate_game(const Game& g) {
  ValidationReport report;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.out_edges(v).empty()) report.defects.push_back(SinkVertex{v});
  std::map<std::pair<int, int>, int> seen;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.discount < 0 || ed.discount >= 1)
      report.defects.push_back(DiscountOutOfRange{e});
    auto [it, fresh] = seen.emplace(std::make_pair(ed.src, ed.dst), e);
    if (!fresh) report.defects.push_back(DuplicateEdge{e});
  }
  return report;
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const GameDefect& d : defects) {
    if (const auto* s = std::get_if<SinkVertex>(&d))
      out << "vertex " << s->vertex << " has no outgoing edge\n";
    else if (const auto* r = std::get_if<DiscountOutOfRange>(&d))
      out << "edge " << r->edge << " has a discount outside [0,1)\n";
    else if (const auto* dup = std::get_if<DuplicateEdge>(&d))
      out << "edge " << dup->edge << " duplicates an earlier (src,dst) pair\n";
  }
  return out.str();
}

bool is_valid_strategy(const Game& g, const JointStrategy& s) {
  if (s.choice.size() != static_cast<size_t>(g.vertex_count())) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int e = s.choice[static_cast<size_t>(v)];
    if (e < 0 || e >= g.edge_count() || g.edge(e).src != v) return false;
  }
  return true;
}

Valuation strategy_valuation(const Game& g, const JointStrategy& s) {
  if (!is_valid_strategy(g, s))
    throw std::invalid_argument("strategy does not select an outgoing edge");
  const int n = g.vertex_count();
  Valuation val;
  val.value.assign(static_cast<size_t>(n), Rational(0));
  enum : char { kFresh, kOnPath, kDone };
  std::vector<char> state(static_cast<size_t>(n), kFresh);
  std::vector<int> path;

  for (int start = 0; start < n; ++start) {
    if (state[static_cast<size_t>(start)] != kFresh) continue;
    path.clear();
    int u = start;
    while (state[static_cast<size_t>(u)] == kFresh) {
      state[static_cast<size_t>(u)] = kOnPath;
      path.push_back(u);
      u = g.edge(s.choice[static_cast<size_t>(u)]).dst;
    }
    if (state[static_cast<size_t>(u)] == kOnPath) {
      // Fresh cycle entered at u: its value is the discounted weight sum of
      // one loop divided by (1 - product of discounts around it).
      Rational sum(0);
      Rational prod(1);
      int c = u;
      do {
        const Edge& ed = g.edge(s.choice[static_cast<size_t>(c)]);
        sum += prod * ed.weight;
        prod *= ed.discount;
        c = ed.dst;
      } while (c != u);
      val.value[static_cast<size_t>(u)] = sum / (1 - prod);
      state[static_cast<size_t>(u)] = kDone;
    }
    // Unwind: one-step equation along the path, back to front.
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      int v = *it;
      if (state[static_cast<size_t>(v)] == kDone) continue;  // cycle entry
      const Edge& ed = g.edge(s.choice[static_cast<size_t>(v)]);
      val.value[static_cast<size_t>(v)] =
          ed.weight + ed.discount * val.value[static_cast<size_t>(ed.dst)];
      state[static_cast<size_t>(v)] = kDone;
    }
  }
  return val;
}

Rational offset(const Game& g, const Valuation& val, int edge_id) {
  const Edge& ed = g.edge(edge_id);
  Rational rhs = ed.weight + ed.discount * val.value[static_cast<size_t>(ed.dst)];
  const Rational& lhs = val.value[static_cast<size_t>(ed.src)];
  return g.owner(ed.src) == Owner::Max ? lhs - rhs : rhs - lhs;
}

std::vector<std::vector<int>> sharp_out_edges(const Game& g,
                                              const Valuation& val) {
  std::vector<std::vector<int>> sharp(static_cast<size_t>(g.vertex_count()));
  for (int e = 0; e < g.edge_count(); ++e)
    if (offset(g, val, e) == 0)
      sharp[static_cast<size_t>(g.edge(e).src)].push_back(e);
  return sharp;
}

bool defines_strategies(const Game& g, const Valuation& val) {
  std::vector<char> covered(static_cast<size_t>(g.vertex_count()), 0);
  int remaining = g.vertex_count();
  for (int e = 0; e < g.edge_count() && remaining > 0; ++e) {
    int v = g.edge(e).src;
    if (!covered[static_cast<size_t>(v)] && offset(g, val, e) == 0) {
      covered[static_cast<size_t>(v)] = 1;
      --remaining;
    }
  }
  return remaining == 0;
}

}  // namespace oiplex
