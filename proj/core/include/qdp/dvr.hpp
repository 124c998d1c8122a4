#pragma once

#include <map>
#include <vector>

#include "qdp/scalar.hpp"

namespace qdp {

/// Sparse coordinate vector over the scalar field.
using Vec = std::map<int, Scalar>;

inline void vec_add(Vec& a, const Vec& b, const Scalar& factor) {
  if (factor.is_zero()) return;
  for (const auto& [k, c] : b) {
    auto it = a.find(k);
    if (it == a.end()) {
      Scalar t = c * factor;
      if (!t.is_zero()) a.emplace(k, std::move(t));
    } else {
      it->second += c * factor;
      if (it->second.is_zero()) a.erase(it);
    }
  }
}

/// Row echelon form over the local ring of scalars regular at q = 1
/// (a discrete valuation ring with uniformizer v-1). Pivots are chosen
/// globally by minimal valuation, so pivot valuations are the elementary
/// divisors of the row span inside the ambient coordinate lattice.
class Echelon {
 public:
  struct Row {
    Vec v;
    int pivot = -1;
    int pivot_val = 0;
  };

  void add(Vec row) { pending_.push_back(std::move(row)); }
  void add_rows(const std::vector<Vec>& rows) {
    for (const Vec& r : rows) pending_.push_back(r);
  }

  /// Consumes pending rows; idempotent between batches of add().
  void build();

  const std::vector<Row>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }

  /// Elementary divisors (pivot valuations), ascending.
  std::vector<int> divisors() const;

  /// Membership of x in the row span over the local ring: reduction may only
  /// use multipliers of valuation >= 0. On success *coeffs (if given)
  /// receives one multiplier per row.
  bool contains(Vec x, std::vector<Scalar>* coeffs = nullptr) const;

  /// Field-coefficient decomposition x = sum mu_i row_i + residual.
  void solve(Vec x, std::vector<Scalar>* mu, Vec* residual) const;

 private:
  std::vector<Vec> pending_;
  std::vector<Row> rows_;
};

/// Basis of { lambda : sum_i lambda_i columns[i] = 0 } over the field.
std::vector<std::vector<Scalar>> field_kernel(
    const std::vector<Vec>& columns);

/// val_q1 with the zero scalar mapped to a large sentinel.
int val_or_large(const Scalar& s);

}  // namespace qdp
