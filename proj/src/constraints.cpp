#include "oiplex/constraints.hpp"

namespace oiplex {

Rational ConstraintSystem::slack(int i, const Valuation& val) const {
  const ConstraintRow& r = rows_[static_cast<size_t>(i)];
  Rational lhs = val.value[static_cast<size_t>(r.src)];
  Rational rhs = r.rhs + r.lambda * val.value[static_cast<size_t>(r.dst)];
  return r.sense == Sense::Le ? rhs - lhs : lhs - rhs;
}

bool ConstraintSystem::satisfied(const Valuation& val) const {
  for (int i = 0; i < row_count(); ++i) {
    Rational s = slack(i, val);
    if (rows_[static_cast<size_t>(i)].sense == Sense::Eq ? s != 0 : s < 0)
      return false;
  }
  return true;
}

ConstraintSystem build_inequations(const Game& g) {
  std::vector<ConstraintRow> rows;
  rows.reserve(static_cast<size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    rows.push_back(ConstraintRow{
        ed.src, ed.dst, ed.discount, ed.weight,
        g.owner(ed.src) == Owner::Max ? Sense::Ge : Sense::Le, e});
  }
  return ConstraintSystem(g.vertex_count(), std::move(rows), feasible_point(g));
}

AffineObjective build_objective(
    const Game& g, const JointStrategy& s,
    const std::optional<std::vector<Rational>>& alpha) {
  if (!is_valid_strategy(g, s))
    throw std::invalid_argument("strategy does not select an outgoing edge");
  if (alpha) {
    if (alpha->size() != static_cast<size_t>(g.edge_count()))
      throw std::invalid_argument("one offset factor per edge required");
    for (int e = 0; e < g.edge_count(); ++e)
      if ((*alpha)[static_cast<size_t>(e)] <= 0) throw NonPositiveFactor(e);
  }
  AffineObjective f;
  f.linear.assign(static_cast<size_t>(g.vertex_count()), Rational(0));
  f.constant = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int e = s.choice[static_cast<size_t>(v)];
    const Edge& ed = g.edge(e);
    Rational a = alpha ? (*alpha)[static_cast<size_t>(e)] : Rational(1);
    if (g.owner(v) == Owner::Max) {
      // offset = val(v) - w - lambda*val(dst)
      f.linear[static_cast<size_t>(v)] += a;
      f.linear[static_cast<size_t>(ed.dst)] -= a * ed.discount;
      f.constant -= a * ed.weight;
    } else {
      f.linear[static_cast<size_t>(v)] -= a;
      f.linear[static_cast<size_t>(ed.dst)] += a * ed.discount;
      f.constant += a * ed.weight;
    }
  }
  return f;
}

Rational evaluate_objective(const AffineObjective& f, const Valuation& val) {
  return f.evaluate(val);
}

Valuation feasible_point(const Game& g) {
  Rational max_abs_w(0);
  Rational contraction(0);
  for (const Edge& ed : g.edges()) {
    Rational a = abs(ed.weight);
    if (a > max_abs_w) max_abs_w = a;
    if (ed.discount > contraction) contraction = ed.discount;
  }
  Rational m = max_abs_w / (1 - contraction);
  Valuation val;
  val.value.reserve(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    val.value.push_back(g.owner(v) == Owner::Max ? m : -m);
  return val;
}

int count_sharp(const Game& g, const Valuation& val) {
  int sharp = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    Rational off = offset(g, val, e);
    if (off < 0) throw InfeasiblePoint();
    if (off == 0) ++sharp;
  }
  return sharp;
}

}  // namespace oiplex
