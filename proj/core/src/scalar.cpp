#include "qdp/scalar.hpp"

#include <sstream>
#include <vector>

namespace qdp {

bool Laurent::is_one() const {
  return coeff_.size() == 1 && coeff_.begin()->first == 0 &&
         coeff_.begin()->second == 1;
}

int Laurent::min_exp() const { return coeff_.begin()->first; }
int Laurent::max_exp() const { return coeff_.rbegin()->first; }

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.coeff_) {
    Rat& t = coeff_[e];
    t += c;
    if (t == 0) coeff_.erase(e);
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.coeff_) {
    Rat& t = coeff_[e];
    t -= c;
    if (t == 0) coeff_.erase(e);
  }
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : coeff_) r.coeff_[e] = -c;
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a.coeff_)
    for (const auto& [eb, cb] : b.coeff_) {
      Rat& t = r.coeff_[ea + eb];
      t += ca * cb;
      if (t == 0) r.coeff_.erase(ea + eb);
    }
  return r;
}

Rat Laurent::eval_one() const {
  Rat s = 0;
  for (const auto& [e, c] : coeff_) s += c;
  return s;
}

std::optional<int> Laurent::val_one() const {
  if (is_zero()) return std::nullopt;
  Laurent p = *this;
  int val = 0;
  while (p.eval_one() == 0) {
    p = p.divide_v_minus_one(1);
    ++val;
  }
  return val;
}

Laurent Laurent::divide_v_minus_one(int k) const {
  Laurent p = *this;
  for (int round = 0; round < k; ++round) {
    if (p.is_zero()) break;
    // Shift to an honest polynomial, synthetic-divide by (v-1), shift back.
    int m = p.min_exp();
    int M = p.max_exp();
    std::vector<Rat> dense(static_cast<size_t>(M - m) + 1);
    for (const auto& [e, c] : p.coeff_) dense[static_cast<size_t>(e - m)] = c;
    // poly = sum dense[i] v^i; divide by (v-1): quotient from the top.
    std::vector<Rat> quo(dense.size() ? dense.size() - 1 : 0);
    Rat carry = 0;
    for (size_t i = dense.size(); i-- > 1;) {
      Rat coef = dense[i] + carry;
      quo[i - 1] = coef;
      carry = coef;
    }
    Rat rem = dense.empty() ? Rat(0) : dense[0] + carry;
    if (rem != 0) throw ScalarError("not divisible by (v-1)");
    Laurent q;
    for (size_t i = 0; i < quo.size(); ++i)
      if (quo[i] != 0) q.coeff_[static_cast<int>(i) + m] = quo[i];
    p = q;
  }
  return p;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// gcd of two polynomials given densely, monic result; both nonzero.
std::vector<Rat> dense_gcd(std::vector<Rat> a, std::vector<Rat> b) {
  auto trim = [](std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      Rat f = a.back() / b.back();
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
      trim(a);
    }
    std::swap(a, b);
  }
  // normalize monic
  if (!a.empty()) {
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

std::vector<Rat> to_dense(const Laurent& l, int* shift) {
  *shift = l.min_exp();
  std::vector<Rat> d(static_cast<size_t>(l.max_exp() - *shift) + 1);
  for (const auto& [e, c] : l.coeffs()) d[static_cast<size_t>(e - *shift)] = c;
  return d;
}

Laurent from_dense(const std::vector<Rat>& d, int shift) {
  Laurent r;
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) r += Laurent::monomial(d[i], static_cast<int>(i) + shift);
  return r;
}

// exact division a / b of dense polynomials (b | a assumed).
std::vector<Rat> dense_div(std::vector<Rat> a, const std::vector<Rat>& b) {
  std::vector<Rat> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    size_t off = a.size() - b.size();
    q[off] = f;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return q;
}

}  // namespace

Scalar::Scalar(Laurent n, Laurent d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw ScalarError("division by zero");
  reduce();
}

void Scalar::reduce() {
  if (num_.is_zero()) {
    den_ = Laurent(Rat(1));
    return;
  }
  int sn = 0, sd = 0;
  std::vector<Rat> dn = to_dense(num_, &sn);
  std::vector<Rat> dd = to_dense(den_, &sd);
  // strip trailing zero constant terms is implicit: dn[0], dd[0] nonzero by
  // construction of min_exp. Divide out the content gcd.
  std::vector<Rat> g = dense_gcd(dn, dd);
  if (g.size() > 1) {
    dn = dense_div(dn, g);
    dd = dense_div(dd, g);
  }
  // make denominator monic with constant term at exponent 0
  Rat lead = dd.back();
  for (auto& c : dd) c /= lead;
  for (auto& c : dn) c /= lead;
  num_ = from_dense(dn, sn - sd);
  den_ = from_dense(dd, 0);
}

Scalar Scalar::q_minus_one(int pow) {
  Scalar s(Rat(1));
  return s.mul_q1_power(pow);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw ScalarError("division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  reduce();
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ScalarError("division by zero");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
  if (e == 0) return Scalar(Rat(1));
  Scalar base = e > 0 ? *this : inverse();
  int n = e > 0 ? e : -e;
  Scalar r(Rat(1));
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

std::optional<int> Scalar::val_q1() const {
  if (is_zero()) return std::nullopt;
  return *num_.val_one() - *den_.val_one();
}

Rat Scalar::eval_q1() const {
  if (is_zero()) return 0;
  auto v = val_q1();
  if (*v < 0) throw ScalarError("Pole");
  if (*v > 0) return 0;
  int vn = *num_.val_one();
  Laurent n = num_.divide_v_minus_one(vn);
  Laurent d = den_.divide_v_minus_one(vn);
  return n.eval_one() / d.eval_one();
}

Scalar Scalar::mul_q1_power(int k) const {
  if (is_zero() || k == 0) return *this;
  Laurent qm1 = Laurent::q_minus_one();
  Scalar r = *this;
  for (int i = 0; i < k; ++i) r.num_ = r.num_ * qm1;
  for (int i = 0; i < -k; ++i) r.den_ = r.den_ * qm1;
  r.reduce();
  return r;
}

std::string Scalar::str() const {
  if (is_polynomial()) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ")/(" << den_.str() << ")";
  return os.str();
}

}  // namespace qdp
