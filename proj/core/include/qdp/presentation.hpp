#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qdp/scalar.hpp"

namespace qdp {

/// Word in generator indices; the empty word is the unit monomial.
using Monomial = std::vector<int32_t>;

struct AlgebraError : std::runtime_error {
  explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

class Presentation;

/// Normal-form linear combination of monomials over one presentation.
/// All stored words are irreducible; no zero coefficients are kept.
class Element {
 public:
  Element() : pres_(nullptr) {}
  explicit Element(const Presentation* p) : pres_(p) {}
  Element(const Presentation* p, const Scalar& c);

  static Element unit(const Presentation* p) { return Element(p, Scalar(1)); }
  static Element generator(const Presentation* p, int g);

  const Presentation* pres() const { return pres_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  /// Maximal word length of the support (0 for scalars and zero).
  int degree() const;

  /// Minimal val_q1 over all coefficients; nullopt for the zero element.
  std::optional<int> min_val() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  Element& operator*=(const Element& o) { return *this = *this * o; }
  bool operator==(const Element& o) const { return terms_ == o.terms_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

  Element scaled(const Scalar& c) const;
  Element mul_q1_power(int k) const;  // exact (q-1)^k rescaling

  Scalar counit() const;
  Scalar coefficient(const Monomial& m) const;

  /// x - counit(x): the canonical augmentation-ideal shift.
  Element shifted() const;

  void add_term(const Monomial& m, const Scalar& c);  // m assumed normal

  std::string str() const;

 private:
  friend class Presentation;
  const Presentation* pres_;
  std::map<Monomial, Scalar> terms_;
};

struct RawTensorTerm {
  std::vector<Monomial> factors;
  Scalar coeff;
};

struct Rule {
  Monomial lhs;
  std::vector<std::pair<Monomial, Scalar>> rhs;
};

/// A Hopf algebra presented by generators, a terminating rewriting system,
/// and structure-map tables on generators. Immutable after finalize().
class Presentation {
 public:
  std::string name;

  int add_generator(const std::string& gname, int weight = 1);
  int generator_index(const std::string& gname) const;  // -1 when absent
  int generator_count() const { return static_cast<int>(gens_.size()); }
  const std::string& generator_name(int g) const { return gens_[g]; }
  int generator_weight(int g) const { return weights_[g]; }

  /// Monomial-order precedence; defaults to declaration order.
  void set_order(const std::vector<std::string>& names);
  void add_rule(const Monomial& lhs,
                std::vector<std::pair<Monomial, Scalar>> rhs);

  void set_counit(int g, const Scalar& c);
  void set_coproduct(int g, std::vector<RawTensorTerm> terms);  // arity 2
  void set_antipode(int g, std::vector<std::pair<Monomial, Scalar>> terms);

  void set_param(const std::string& pname, const Scalar& value);
  const std::map<std::string, Scalar>& params() const { return params_; }

  /// Validates rule termination and normalizes rule right-hand sides.
  void finalize();
  bool finalized() const { return finalized_; }

  // --- monomial order ------------------------------------------------------
  long long weight(const Monomial& m) const;
  bool mono_less(const Monomial& a, const Monomial& b) const;

  // --- rewriting -----------------------------------------------------------
  /// Reduce c*w to normal form. Throws AlgebraError("NonTerminating") if the
  /// configured step budget is exceeded.
  Element reduce_word(const Monomial& w, const Scalar& c) const;
  bool word_is_normal(const Monomial& w) const;

  /// All normal monomials of word length <= maxlen, sorted by the order.
  std::vector<Monomial> normal_monomials(int maxlen) const;

  // --- structure tables ----------------------------------------------------
  bool has_counit(int g) const;
  bool has_coproduct(int g) const;
  bool has_antipode(int g) const;
  const Scalar& counit_of(int g) const;
  const std::vector<RawTensorTerm>& coproduct_of(int g) const;
  const std::vector<std::pair<Monomial, Scalar>>& antipode_of(int g) const;

  const std::vector<Rule>& rules() const { return rules_; }

  std::string mono_str(const Monomial& m) const;

  long long step_budget = 2'000'000;

 private:
  std::optional<int> find_redex(const Monomial& w, int from = 0) const;
  const Rule* match_at(const Monomial& w, int pos) const;

  std::vector<std::string> gens_;
  std::vector<int> weights_;
  std::vector<int> precedence_;  // precedence_[g] = rank in the order
  std::map<std::string, int> index_;
  std::vector<Rule> rules_;
  std::vector<Scalar> counit_;
  std::vector<char> counit_set_;
  std::vector<std::vector<RawTensorTerm>> coproduct_;
  std::vector<std::vector<std::pair<Monomial, Scalar>>> antipode_;
  std::map<std::string, Scalar> params_;
  size_t max_lhs_len_ = 0;
  bool finalized_ = false;
};

/// Product of two normal words under a presentation, as an element.
Element word_product(const Presentation& p, const Monomial& a,
                     const Monomial& b);

}  // namespace qdp
