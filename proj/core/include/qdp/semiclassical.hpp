#pragma once

#include <memory>

#include "qdp/liebialg.hpp"
#include "qdp/subobject.hpp"

namespace qdp {

/// Coefficientwise value at q = 1 over the matching classical presentation
/// (generators matched by name). Throws ScalarError("Pole") when a
/// coefficient has negative valuation.
Element specialize(const Element& x, const Presentation* classical);

/// { f, g } = specialization of (q-1)^{-1} [phi, gamma] for lifts phi, gamma.
Element poisson_bracket(const Element& phi, const Element& gamma,
                        const Presentation* classical);

/// Degree-one semiclassical data of a host: designated classical directions
/// with their integral lifts, over either the plain lattice or the blow-up.
struct SemiclassicalMap {
  const Presentation* quantum = nullptr;
  std::vector<std::string> labels;
  std::vector<Element> lifts;
  std::vector<Element> lattice;  // integral-form generators; empty: monomials
  HostForm form = HostForm::plain;
  int budget = 3;
};

/// Classes in the specialization of the lattice modulo scalars and products:
/// a plain Q-vector space, with designated coordinates along the lifts.
class PrimitiveQuotient {
 public:
  PrimitiveQuotient(Workspace& ws, const SemiclassicalMap& sm);

  /// Raw class of y in the ambient quotient (coordinates over lattice rows).
  QVec raw_class(Workspace& ws, const Element& y) const;

  /// Coordinates over the designated lifts; throws when the class leaves
  /// their span.
  QVec coords(Workspace& ws, const Element& y) const;

  /// Classical image of a (q-1)-divided antisymmetrized coproduct:
  /// dim x dim antisymmetric matrix over the lifts.
  QMat tensor_class(Workspace& ws, const Tensor& t) const;

  int dim() const { return static_cast<int>(sm_.lifts.size()); }
  const SemiclassicalMap& map() const { return sm_; }

 private:
  QVec to_eval_coords(Workspace& ws, const Element& y) const;
  QVec solve_over_lifts(QVec target) const;
  SemiclassicalMap sm_;
  std::string akey_;
  const Echelon* A_ = nullptr;
  QMat mbar_;          // RREF of the scalar-and-product part
  QMat lift_classes_;  // reduced lift classes (rows)
  int ambient_dim_ = 0;
};

/// Cobracket of the class of `lift`, as an antisymmetric matrix over the
/// designated directions: the classical image of (q-1)^{-1} nabla(lift).
QMat cobracket_matrix(Workspace& ws, const PrimitiveQuotient& pq,
                      const Element& lift);

/// The Lie bialgebra carried by the degree-one part of the (q-1)-adic
/// blow-up of a function-algebra host: candidate directions are the shifted
/// generators over (q-1); linear relations are detected and reported.
class VeeBialgebra {
 public:
  VeeBialgebra(Workspace& ws, int budget);
  const LieBialgebra& bialgebra() const { return g_; }
  const std::vector<std::string>& dropped() const { return dropped_; }
  const PrimitiveQuotient& quotient() const { return *pq_; }
  /// Class coordinates of an element of the blow-up in the accepted basis.
  QVec coords(Workspace& ws, const Element& y) const {
    return pq_->coords(ws, y);
  }

 private:
  LieBialgebra g_;
  std::vector<std::string> dropped_;
  std::unique_ptr<PrimitiveQuotient> pq_;
};

}  // namespace qdp
