#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "oiplex/game.hpp"

namespace oiplex {

enum class Sense : std::uint8_t { Le, Ge, Eq };

// One row reads: val(src) <sense> rhs + lambda * val(dst).
struct ConstraintRow {
  int src = 0;
  int dst = 0;
  Rational lambda;
  Rational rhs;
  Sense sense = Sense::Ge;
  int edge_id = -1;
};

// A fixed set of affine constraints over per-vertex values, together with a
// point known to satisfy all of them (the phase-1 seed for the LP).
class ConstraintSystem {
 public:
  ConstraintSystem(int variables, std::vector<ConstraintRow> rows,
                   Valuation start)
      : variables_(variables), rows_(std::move(rows)), start_(std::move(start)) {}

  int variable_count() const { return variables_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  const std::vector<ConstraintRow>& rows() const { return rows_; }
  const ConstraintRow& row(int i) const { return rows_[static_cast<size_t>(i)]; }
  const Valuation& start_point() const { return start_; }

  // Signed slack of row i at val, normalized so feasible means >= 0
  // (Eq rows report the raw ge-side value; both signs must vanish).
  Rational slack(int i, const Valuation& val) const;
  bool satisfied(const Valuation& val) const;

 private:
  int variables_;
  std::vector<ConstraintRow> rows_;
  Valuation start_;
};

struct AffineObjective {
  std::vector<Rational> linear;  // indexed by vertex
  Rational constant;

  Rational evaluate(const Valuation& val) const {
    Rational acc = constant;
    for (size_t v = 0; v < linear.size(); ++v) acc += linear[v] * val.value[v];
    return acc;
  }
};

class NonPositiveFactor : public std::invalid_argument {
 public:
  explicit NonPositiveFactor(int edge)
      : std::invalid_argument("offset factor must be positive (edge " +
                              std::to_string(edge) + ")"),
        edge(edge) {}
  int edge;
};

class InfeasiblePoint : public std::invalid_argument {
 public:
  InfeasiblePoint() : std::invalid_argument("valuation violates the system") {}
};

// One inequation per edge of the game: >= for maximiser sources, <= for
// minimiser sources. The system never changes while a game is solved.
ConstraintSystem build_inequations(const Game& g);

// The strategy-indexed objective: the (optionally alpha-weighted) sum of the
// offsets of the selected edges, kept with its constant term so objective
// values are comparable across strategies.
AffineObjective build_objective(
    const Game& g, const JointStrategy& s,
    const std::optional<std::vector<Rational>>& alpha = std::nullopt);

Rational evaluate_objective(const AffineObjective& f, const Valuation& val);

// The box point -M / +M for minimiser / maximiser vertices, with
// M = max|w| / (1 - max lambda); satisfies every inequation of the game.
Valuation feasible_point(const Game& g);

// Number of edge inequations satisfied with equality at val.
// Throws InfeasiblePoint when val violates some inequation.
int count_sharp(const Game& g, const Valuation& val);

}  // namespace oiplex
