#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oiplex/constraints.hpp"

namespace oiplex {

// |V| inequation ids treated as equations; when feasible, their solution is
// a corner of the polytope.
struct Basis {
  std::vector<int> rows;  // sorted
  bool operator==(const Basis&) const = default;
};

struct LpResult {
  Valuation valuation;
  Basis basis;
  Rational objective_value;
  int pivot_count = 0;  // crash steps plus phase-2 pivots of this call
};

class LpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Objective unbounded below on the polytope. Cannot happen for the two game
// encodings; reported so a broken constraint construction is loud.
class UnboundedObjective : public LpError {
 public:
  UnboundedObjective() : LpError("objective is unbounded below") {}
};

class InfeasibleSystem : public LpError {
 public:
  using LpError::LpError;
};

// Exact-rational simplex over the row polytope of a ConstraintSystem. A
// solver instance keeps its basis between calls, so a sequence of solves
// against changing objectives pays for phase 1 only once.
class SimplexSolver {
 public:
  explicit SimplexSolver(const ConstraintSystem& sys);

  // Minimize f, warm-starting from the basis of the previous call when one
  // exists; the first call crashes from the system's start point.
  LpResult minimize(const AffineObjective& f);
  // Minimize f starting from the given feasible basis; phase 1 is skipped.
  LpResult minimize(const AffineObjective& f, const Basis& warm);

  // Install a feasible basis without optimizing anything.
  void seat(const Basis& warm);
  bool seated() const { return seated_; }
  void reset();

  // Visits every feasible basis differing from the current one in exactly
  // one row, with its induced valuation; stops early when visit returns
  // false. Deterministic order: leaving rows ascending, entering ascending.
  void for_each_neighbour(
      const std::function<bool(const Basis&, const Valuation&)>& visit);

 private:
  struct NRow {
    int va = -1;
    Rational ca;
    int vb = -1;
    Rational cb;
    Rational rhs;
    bool eq = false;
  };

  struct LuPivot {
    int row;
    int col;
    Rational diag;
    int other_col;
    Rational other_val;
  };
  struct LuOp {
    int target;
    int pivot_row;
    Rational factor;
  };

  Rational row_dot(const NRow& r, const std::vector<Rational>& v) const;
  Rational row_slack(int j) const;

  bool factor_basis();
  void ensure_factored();
  std::vector<Rational> lu_solve(std::vector<Rational> rhs) const;
  std::vector<Rational> lu_solve_transposed(std::vector<Rational> rhs) const;

  void cold_start();
  void crash_phase(int& pivots);
  int phase_two(const std::vector<Rational>& gamma);
  void apply_step(int slot, int enter, const Rational& t,
                  const std::vector<Rational>& d,
                  const std::vector<Rational>& dots);
  LpResult finish(const AffineObjective& f, int pivots) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<NRow> nrows_;
  std::vector<Rational> start_;

  std::vector<int> basis_;  // row id per slot; -1 marks a coordinate slot
  std::vector<char> in_basis_;
  std::vector<Rational> x_;
  std::vector<Rational> slack_;
  bool seated_ = false;

  std::vector<LuPivot> lu_pivots_;
  std::vector<LuOp> lu_ops_;
  bool lu_valid_ = false;
};

// One-shot solve: crash phase 1 from the system's start point, or skip it
// when a feasible warm basis is supplied.
LpResult minimize(const ConstraintSystem& sys, const AffineObjective& f,
                  const std::optional<Basis>& warm = std::nullopt);

std::vector<std::pair<Basis, Valuation>> neighbouring_bases(
    const ConstraintSystem& sys, const Basis& b);

}  // namespace oiplex
