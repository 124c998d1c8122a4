#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdp/scalar.hpp"
#include "qdp/tensor.hpp"

namespace qdp {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

/// Reduced row echelon form over the rationals; canonical (unique) rows,
/// zero rows dropped.
QMat rref(QMat rows);
bool rref_contains(const QMat& rref_rows, QVec x);

/// Finite-dimensional Lie bialgebra by structure constants over Q.
struct LieBialgebra {
  std::string name;
  std::vector<std::string> basis;
  /// bracket[i][j] = coordinates of [x_i, x_j]
  std::vector<std::vector<QVec>> bracket;
  /// cobracket[k]: antisymmetric matrix, delta(x_k) = sum_{i,j} m[i][j] x_i (x) x_j
  std::vector<QMat> cobracket;

  int dim() const { return static_cast<int>(basis.size()); }
  int index_of(const std::string& label) const;

  QVec bracket_of(const QVec& x, const QVec& y) const;
  QMat cobracket_of(const QVec& x) const;  // antisymmetric matrix

  /// Dual bialgebra: bracket = transpose of the cobracket and vice versa.
  LieBialgebra dual() const;

  CheckReport validate() const;  // antisymmetry, Jacobi, co-Jacobi, cocycle

  /// Parses a linear combination of basis labels, e.g. "E13 + 2*H1".
  QVec parse_vector(const std::string& expr) const;
};

/// Subspace in canonical reduced-echelon coordinates.
struct LieSubspace {
  QMat rows;  // canonical RREF
  int dim() const { return static_cast<int>(rows.size()); }
  bool operator==(const LieSubspace& o) const { return rows == o.rows; }
  bool contains(const QVec& x) const { return rref_contains(rows, x); }
};

LieSubspace span_of(const QMat& vectors);
LieSubspace subspace_sum(const LieSubspace& a, const LieSubspace& b);

/// Annihilator with respect to the dual-basis pairing.
LieSubspace orthogonal(const LieSubspace& k, int ambient_dim);

/// Smallest bracket-closed subspace containing s.
LieSubspace lie_closure(const LieBialgebra& g, const LieSubspace& s);

bool is_subalgebra(const LieBialgebra& g, const LieSubspace& s);

/// Lie coideal test: delta(k) inside k wedge g; cross-checked against the
/// dual criterion (k-perp a subalgebra of the dual). Throws on disagreement
/// and on non-subalgebra input.
bool is_coisotropic(const LieBialgebra& g, const LieSubspace& k);

/// Largest coisotropic subalgebra inside k: (closure of k-perp)-perp.
LieSubspace coisotropic_interior(const LieBialgebra& g, const LieSubspace& k);

/// k-perp as a subspace of the dual bialgebra; requires coisotropic input.
LieSubspace complementary_dual(const LieBialgebra& g, const LieSubspace& k);

}  // namespace qdp
