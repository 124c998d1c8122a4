#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qdp/dvr.hpp"
#include "qdp/tensor.hpp"

namespace qdp {

enum class Side { left, right };

/// Interns monomials as column ids so elements become sparse vectors.
class MonoInterner {
 public:
  int id(const Monomial& m);
  const Monomial& key(int i) const { return keys_[static_cast<size_t>(i)]; }
  int size() const { return static_cast<int>(keys_.size()); }

 private:
  std::map<Monomial, int> idx_;
  std::vector<Monomial> keys_;
};

/// Per-presentation scratch space: interner plus memoized slice families and
/// echelon forms. Confine one workspace to one thread of work.
class Workspace {
 public:
  explicit Workspace(const Presentation* p) : pres_(p) {}

  const Presentation* pres() const { return pres_; }
  MonoInterner& interner() { return interner_; }

  Vec vec(const Element& e);
  Element elem(const Vec& v) const;
  std::vector<Vec> vecs(const std::vector<Element>& es);

  /// Normal monomials of length <= deg (cached).
  const std::vector<Monomial>& monomials(int deg);

  /// Complete slice family of the augmentation ideal: m - eps(m), m != 1.
  const std::vector<Element>& aug_family(int deg);

  /// Products of n augmentation-family factors, total word length <= budget.
  const std::vector<Element>& aug_power(int n, int budget);

  /// Slice family of ((q-1) + J)^m within the total budget.
  const std::vector<Element>& i_power(int m, int budget);

  /// Slice family of sum_m (q-1)^{-m} J^m, m <= budget.
  const std::vector<Element>& vee_family(int budget);

  /// Echelon for an arbitrary keyed family, built once.
  Echelon& echelon(const std::string& key,
                   const std::function<std::vector<Element>()>& make);
  Echelon& echelon_of(const std::string& key, const std::vector<Element>& fam);

 private:
  const Presentation* pres_;
  MonoInterner interner_;
  std::map<int, std::vector<Monomial>> monomials_;
  std::map<int, std::vector<Element>> aug_;
  std::map<std::pair<int, int>, std::vector<Element>> aug_pow_;
  std::map<std::pair<int, int>, std::vector<Element>> i_pow_;
  std::map<int, std::vector<Element>> vee_;
  std::map<std::string, Echelon> echelons_;
};

/// Unital words in the given generators with total factor degree <= budget.
std::vector<Element> subalgebra_family(const std::vector<Element>& gens,
                                       int budget);

/// One-sided multiples of the generators by an ambient family.
std::vector<Element> ideal_family(const std::vector<Element>& ambient,
                                  const std::vector<Element>& gens, Side side,
                                  int budget);

/// Largest n <= bound with x in the slice span of J^n, J the (two-sided)
/// ideal generated by jgens; 0 when x is not in J. Families are truncated to
/// products whose total word length stays within bound.
int filtration_valuation(Workspace& ws, const Element& x,
                         const std::vector<Element>& jgens, int bound);

}  // namespace qdp
