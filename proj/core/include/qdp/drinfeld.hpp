#pragma once

#include "qdp/subobject.hpp"

namespace qdp {

/// Ambient integral-form slice family of a host, within the budget.
std::vector<Element> ambient_products(Workspace& ws, const SubobjectSpec& s,
                                      int budget);

/// Degree-slice spanning family of the subobject itself.
std::vector<Element> slice_family(Workspace& ws, const SubobjectSpec& s,
                                  int budget);

/// Cached echelon of slice_family / ambient_products.
Echelon& slice_echelon(Workspace& ws, const SubobjectSpec& s, int budget);
Echelon& ambient_echelon(Workspace& ws, const SubobjectSpec& s, int budget);

/// Membership of x in sum_m (q-1)^{-m} J^m for the augmentation ideal J of
/// the host; exact for inputs of degree <= D whose poles sit at q = 1.
Verdict member_vee(Workspace& ws, const Element& x, int D);

/// Divisibility delta_n(x) in (q-1)^n L^{(x) n} for 1 <= n <= N, where L is
/// the ambient lattice described by `ambient` (empty: monomial lattice).
Verdict member_prime(Workspace& ws, const Element& x, int N,
                     const std::vector<Element>& ambient_lattice = {});

/// delta_n(x) in (q-1)^n sum_s A..J..A slot spaces, J the given ideal-kind
/// subobject, for 1 <= n <= N; slices truncated at degree D.
Verdict member_bang(Workspace& ws, const Element& x, const SubobjectSpec& gI,
                    int N, int D);

/// delta_n(x) in (q-1)^n A^{(x)(n-1)} (x) C (last slot; first slot for
/// side=right), C the given subalgebra-kind subobject.
Verdict member_lsh(Workspace& ws, const Element& x, const SubobjectSpec& gC,
                   int N, int D);

/// Echelon of the subobject slice in ambient-row coordinates.
Echelon& relative_slice_echelon(Workspace& ws, const SubobjectSpec& s,
                                int budget);

/// Membership of T in the sum over slots of ambient..S..ambient within
/// degree D. Over the rationals the wedge condition U ^ S reduces to this
/// slot sum for antisymmetric T.
bool tensor_in_slot_sum(Workspace& ws, const Tensor& T, const SubobjectSpec& S,
                        int D, Scalar* witness);

/// Ideal-kind input rescaled into the blow-up host: generators (q-1)^{-1} g.
SubobjectSpec map_vee(const SubobjectSpec& I);

/// Subalgebra-kind input: generators (q-1)^{-1}(c - eps(c)) over the blow-up.
SubobjectSpec map_down(const SubobjectSpec& C);

/// Psi: the one-sided ideal generated by shifted generators c - eps(c).
/// Generators lying in the span of the others are pruned.
SubobjectSpec psi(Workspace& ws, const SubobjectSpec& C, int prune_budget = 3);

/// Phi: basis of the degree <= D slice of the coinvariant space
/// { y : Delta(y) - y(x)1 in H (x) span(I) } (mirrored for side=right).
std::vector<Element> phi(Workspace& ws, const SubobjectSpec& I, int D);

}  // namespace qdp
