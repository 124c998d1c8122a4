#pragma once

#include <set>
#include <vector>

#include "qdp/presentation.hpp"

namespace qdp {

/// Element of H^{tensor n}; arity 0 holds a plain scalar. Every slot word is
/// kept in normal form and zero coefficients are dropped.
class Tensor {
 public:
  Tensor() : pres_(nullptr), arity_(0) {}
  Tensor(const Presentation* p, int arity) : pres_(p), arity_(arity) {}

  static Tensor scalar(const Presentation* p, const Scalar& c);
  static Tensor from_element(const Element& e);

  const Presentation* pres() const { return pres_; }
  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<Monomial>, Scalar>& terms() const {
    return terms_;
  }

  void add_term(const std::vector<Monomial>& slots, const Scalar& c);

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor operator-() const;
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  /// Componentwise product (same arity), with per-slot reduction.
  friend Tensor operator*(const Tensor& a, const Tensor& b);
  bool operator==(const Tensor& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }
  bool operator!=(const Tensor& o) const { return !(*this == o); }

  Tensor scaled(const Scalar& c) const;
  Tensor mul_q1_power(int k) const;
  Tensor flipped() const;  // reverses the slot order

  /// Minimal val_q1 over coefficients; nullopt for zero.
  std::optional<int> min_val() const;

  Element as_element() const;  // arity must be 1
  Scalar as_scalar() const;    // arity must be 0

  std::string str() const;

 private:
  const Presentation* pres_;
  int arity_;
  std::map<std::vector<Monomial>, Scalar> terms_;
};

enum class StructureMap { coproduct, counit, antipode, nabla };

/// Coproduct extended to H as an algebra morphism.
Tensor coproduct(const Element& x);
/// Antipode extended as an algebra antimorphism.
Element antipode(const Element& x);
/// nabla = coproduct - opposite coproduct.
Tensor nabla(const Element& x);
/// Dispatch by kind; counit yields an arity-0 tensor.
Tensor structure_map(StructureMap kind, const Element& x);

/// Delta^n: arity-n iterated coproduct (n=0 is the counit, n=1 identity).
Tensor iterated_coproduct(const Element& x, int n);

/// j_Sigma: pad an arity-k tensor into arity n, unit in slots outside Sigma.
Tensor pad_slots(const Tensor& t, const std::set<int>& sigma, int n);

/// Delta_Sigma = j_Sigma . Delta^{|Sigma|}.
Tensor coproduct_subset(const Element& x, const std::set<int>& sigma, int n);

/// delta_Sigma by inclusion-exclusion over subsets of Sigma.
Tensor delta_subset(const Element& x, const std::set<int>& sigma, int n);

/// delta_n via (id - counit)^{tensor n} . Delta^n.
Tensor delta_n(const Element& x, int n);

struct CheckReport {
  bool pass = true;
  std::vector<std::string> failures;
  void fail(const std::string& msg) {
    pass = false;
    failures.push_back(msg);
  }
};

/// Verifies coassociativity, counit and antipode laws on all normal
/// monomials of length <= maxdeg, and structure-map compatibility with
/// every rewriting rule.
CheckReport axioms_check(const Presentation& p, int maxdeg);

// --- expression parsing ----------------------------------------------------

/// Parses the shared expression syntax: integers, fractions, v, q, ^, + - *
/// / ( ), parameter names, generator names (when a presentation is given)
/// and the tensor separator (*).
Tensor parse_tensor(const std::string& text, const Presentation* pres,
                    const std::map<std::string, Scalar>* extra_params = nullptr);
Element parse_element(const std::string& text, const Presentation* pres,
                      const std::map<std::string, Scalar>* extra_params = nullptr);
Scalar parse_scalar(const std::string& text,
                    const std::map<std::string, Scalar>* params = nullptr);

}  // namespace qdp
