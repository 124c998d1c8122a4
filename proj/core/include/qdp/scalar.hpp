#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace qdp {

using Rat = boost::multiprecision::cpp_rational;

struct ScalarError : std::runtime_error {
  explicit ScalarError(const std::string& what) : std::runtime_error(what) {}
};

/// Laurent polynomial in the ground variable v, exact rational coefficients.
/// q is shorthand for v^2 throughout. Zero coefficients are never stored,
/// so equal values have identical representations.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(const Rat& c) {
    if (c != 0) coeff_[0] = c;
  }
  static Laurent monomial(const Rat& c, int vexp) {
    Laurent l;
    if (c != 0) l.coeff_[vexp] = c;
    return l;
  }
  static Laurent v(int exp = 1) { return monomial(1, exp); }
  static Laurent q(int exp = 1) { return monomial(1, 2 * exp); }
  static Laurent q_minus_one() {
    Laurent l = q();
    l -= Laurent(1);
    return l;
  }

  bool is_zero() const { return coeff_.empty(); }
  bool is_one() const;
  const std::map<int, Rat>& coeffs() const { return coeff_; }

  int min_exp() const;  // requires nonzero
  int max_exp() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator-() const;
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  bool operator==(const Laurent& o) const { return coeff_ == o.coeff_; }

  /// Sum of coefficients = value at v = 1.
  Rat eval_one() const;

  /// Multiplicity of the root v = 1 (0 for units at v=1); nullopt for zero.
  std::optional<int> val_one() const;

  /// Exact division by (v-1)^k; throws if not divisible.
  Laurent divide_v_minus_one(int k) const;

  std::string str() const;

 private:
  std::map<int, Rat> coeff_;
};

/// Element of the fraction field of Laurent polynomials. Canonical form:
/// numerator/denominator coprime, denominator a monic polynomial in v with
/// nonzero constant term. Equality is representation equality.
class Scalar {
 public:
  Scalar() : num_(), den_(Rat(1)) {}
  Scalar(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT(runtime/explicit)
  Scalar(long c) : num_(Rat(c)), den_(Rat(1)) {}   // NOLINT(runtime/explicit)
  Scalar(const Laurent& n) : num_(n), den_(Rat(1)) {}
  Scalar(Laurent n, Laurent d);

  static Scalar v(int exp = 1) { return Scalar(Laurent::v(exp)); }
  static Scalar q(int exp = 1) { return Scalar(Laurent::q(exp)); }
  static Scalar q_minus_one(int pow = 1);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_polynomial() const { return den_.is_one(); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;
  Scalar pow(int e) const;

  /// Order of vanishing at v = 1. (q-1) = (v-1)(v+1) has order 1 since
  /// (v+1) is a unit there. nullopt encodes +infinity (the zero scalar).
  std::optional<int> val_q1() const;

  /// Exact value at v = 1; throws ScalarError("Pole") when val_q1 < 0.
  Rat eval_q1() const;

  /// Multiply by (q-1)^k, k of either sign, exactly.
  Scalar mul_q1_power(int k) const;

  std::string str() const;

 private:
  void reduce();
  Laurent num_, den_;
};

}  // namespace qdp
