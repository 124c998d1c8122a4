#include "qdp/tensor.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qdp {

Tensor Tensor::scalar(const Presentation* p, const Scalar& c) {
  Tensor t(p, 0);
  t.add_term({}, c);
  return t;
}

Tensor Tensor::from_element(const Element& e) {
  Tensor t(e.pres(), 1);
  for (const auto& [m, c] : e.terms()) t.add_term({m}, c);
  return t;
}

void Tensor::add_term(const std::vector<Monomial>& slots, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(slots);
  if (it == terms_.end()) {
    terms_.emplace(slots, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (!pres_) {
    pres_ = o.pres_;
    arity_ = o.arity_;
  }
  if (arity_ != o.arity_ && !o.terms_.empty() && !terms_.empty())
    throw AlgebraError("tensor arity mismatch in sum");
  if (terms_.empty() && !o.terms_.empty()) arity_ = o.arity_;
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) { return *this += -o; }

Tensor Tensor::operator-() const {
  Tensor r(pres_, arity_);
  for (const auto& [s, c] : terms_) r.terms_[s] = -c;
  return r;
}

Tensor operator*(const Tensor& a, const Tensor& b) {
  if (a.arity_ != b.arity_) throw AlgebraError("tensor arity mismatch");
  const Presentation* p = a.pres_ ? a.pres_ : b.pres_;
  Tensor r(p, a.arity_);
  for (const auto& [sa, ca] : a.terms_)
    for (const auto& [sb, cb] : b.terms_) {
      // per-slot word products, expanded by distributivity
      std::vector<Element> slot_elts;
      slot_elts.reserve(sa.size());
      for (size_t i = 0; i < sa.size(); ++i)
        slot_elts.push_back(word_product(*p, sa[i], sb[i]));
      std::vector<std::vector<Monomial>> acc{{}};
      std::vector<Scalar> coef{ca * cb};
      for (const Element& e : slot_elts) {
        std::vector<std::vector<Monomial>> nacc;
        std::vector<Scalar> ncoef;
        for (size_t k = 0; k < acc.size(); ++k)
          for (const auto& [m, c] : e.terms()) {
            auto slots = acc[k];
            slots.push_back(m);
            nacc.push_back(std::move(slots));
            ncoef.push_back(coef[k] * c);
          }
        acc = std::move(nacc);
        coef = std::move(ncoef);
      }
      for (size_t k = 0; k < acc.size(); ++k) r.add_term(acc[k], coef[k]);
    }
  return r;
}

Tensor Tensor::scaled(const Scalar& c) const {
  Tensor r(pres_, arity_);
  if (c.is_zero()) return r;
  for (const auto& [s, k] : terms_) r.terms_[s] = k * c;
  return r;
}

Tensor Tensor::mul_q1_power(int k) const {
  Tensor r(pres_, arity_);
  for (const auto& [s, c] : terms_) r.terms_[s] = c.mul_q1_power(k);
  return r;
}

Tensor Tensor::flipped() const {
  Tensor r(pres_, arity_);
  for (const auto& [s, c] : terms_) {
    auto rs = s;
    std::reverse(rs.begin(), rs.end());
    r.add_term(rs, c);
  }
  return r;
}

std::optional<int> Tensor::min_val() const {
  std::optional<int> v;
  for (const auto& [s, c] : terms_) {
    int cv = *c.val_q1();
    if (!v || cv < *v) v = cv;
  }
  return v;
}

Element Tensor::as_element() const {
  if (arity_ != 1) throw AlgebraError("tensor arity is not 1");
  Element e(pres_);
  for (const auto& [s, c] : terms_) e.add_term(s[0], c);
  return e;
}

Scalar Tensor::as_scalar() const {
  if (arity_ != 0) throw AlgebraError("tensor arity is not 0");
  Scalar s(0);
  for (const auto& [slots, c] : terms_) s += c;
  return s;
}

std::string Tensor::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (size_t i = 0; i < s.size(); ++i)
      os << (i ? " (*) " : "*") << pres_->mono_str(s[i]);
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

Tensor coproduct_word(const Presentation& p, const Monomial& w) {
  Tensor t(&p, 2);
  t.add_term({Monomial{}, Monomial{}}, Scalar(1));
  for (int g : w) {
    Tensor dg(&p, 2);
    for (const RawTensorTerm& rt : p.coproduct_of(g))
      dg.add_term(rt.factors, rt.coeff);
    t = t * dg;
  }
  return t;
}

}  // namespace

Tensor coproduct(const Element& x) {
  const Presentation* p = x.pres();
  Tensor out(p, 2);
  for (const auto& [m, c] : x.terms())
    out += coproduct_word(*p, m).scaled(c);
  return out;
}

Element antipode(const Element& x) {
  const Presentation* p = x.pres();
  Element out(p);
  for (const auto& [m, c] : x.terms()) {
    Element prod = Element::unit(p);
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
      Element sg(p);
      for (const auto& [sm, sc] : p->antipode_of(*it)) sg.add_term(sm, sc);
      prod *= sg;
    }
    out += prod.scaled(c);
  }
  return out;
}

Tensor nabla(const Element& x) {
  Tensor d = coproduct(x);
  return d - d.flipped();
}

Tensor structure_map(StructureMap kind, const Element& x) {
  switch (kind) {
    case StructureMap::coproduct:
      return coproduct(x);
    case StructureMap::counit:
      return Tensor::scalar(x.pres(), x.counit());
    case StructureMap::antipode:
      return Tensor::from_element(antipode(x));
    case StructureMap::nabla:
      return nabla(x);
  }
  throw AlgebraError("unknown structure map");
}

Tensor iterated_coproduct(const Element& x, int n) {
  const Presentation* p = x.pres();
  if (n < 0) throw AlgebraError("negative coproduct arity");
  if (n == 0) return Tensor::scalar(p, x.counit());
  Tensor t = Tensor::from_element(x);
  // Repeatedly co-multiply the first slot: Delta^{k+1} = (Delta (x) id) Delta^k.
  for (int k = 1; k < n; ++k) {
    Tensor nt(p, k + 1);
    for (const auto& [slots, c] : t.terms()) {
      Tensor d = coproduct_word(*p, slots[0]);
      for (const auto& [ds, dc] : d.terms()) {
        std::vector<Monomial> ns;
        ns.reserve(slots.size() + 1);
        ns.push_back(ds[0]);
        ns.push_back(ds[1]);
        ns.insert(ns.end(), slots.begin() + 1, slots.end());
        nt.add_term(ns, c * dc);
      }
    }
    t = std::move(nt);
  }
  return t;
}

Tensor pad_slots(const Tensor& t, const std::set<int>& sigma, int n) {
  if (static_cast<int>(sigma.size()) != t.arity())
    throw AlgebraError("pad_slots: subset size differs from arity");
  Tensor out(t.pres(), n);
  for (const auto& [slots, c] : t.terms()) {
    std::vector<Monomial> ns(static_cast<size_t>(n));
    size_t k = 0;
    for (int pos : sigma) ns[static_cast<size_t>(pos - 1)] = slots[k++];
    out.add_term(ns, c);
  }
  return out;
}

Tensor coproduct_subset(const Element& x, const std::set<int>& sigma, int n) {
  Tensor inner = iterated_coproduct(x, static_cast<int>(sigma.size()));
  if (sigma.empty()) {
    Tensor out(x.pres(), n);
    out.add_term(std::vector<Monomial>(static_cast<size_t>(n)),
                 inner.as_scalar());
    return out;
  }
  return pad_slots(inner, sigma, n);
}

Tensor delta_subset(const Element& x, const std::set<int>& sigma, int n) {
  if (sigma.empty()) {
    Tensor out(x.pres(), n);
    out.add_term(std::vector<Monomial>(static_cast<size_t>(n)), x.counit());
    return out;
  }
  std::vector<int> idx(sigma.begin(), sigma.end());
  size_t count = size_t{1} << idx.size();
  Tensor out(x.pres(), n);
  for (size_t mask = 0; mask < count; ++mask) {
    std::set<int> sub;
    for (size_t i = 0; i < idx.size(); ++i)
      if (mask & (size_t{1} << i)) sub.insert(idx[i]);
    int sign = ((idx.size() - sub.size()) % 2 == 0) ? 1 : -1;
    Tensor term = coproduct_subset(x, sub, n);
    out += sign > 0 ? term : -term;
  }
  return out;
}

Tensor delta_n(const Element& x, int n) {
  const Presentation* p = x.pres();
  if (n == 0) return Tensor::scalar(p, x.counit());
  Tensor t = iterated_coproduct(x, n);
  // apply (id - counit) in every slot
  for (int slot = 0; slot < n; ++slot) {
    Tensor nt(p, n);
    for (const auto& [slots, c] : t.terms()) {
      nt.add_term(slots, c);
      Scalar eps(1);
      for (int g : slots[static_cast<size_t>(slot)]) eps *= p->counit_of(g);
      if (!eps.is_zero()) {
        auto ns = slots;
        ns[static_cast<size_t>(slot)] = Monomial{};
        nt.add_term(ns, -(c * eps));
      }
    }
    t = std::move(nt);
  }
  return t;
}

// ---------------------------------------------------------------------------

CheckReport axioms_check(const Presentation& p, int maxdeg) {
  CheckReport rep;
  auto unit2 = [&p](const Scalar& c) {
    Tensor t(&p, 2);
    t.add_term({Monomial{}, Monomial{}}, c);
    return t;
  };
  for (const Monomial& m : p.normal_monomials(maxdeg)) {
    Element x(&p);
    x.add_term(m, Scalar(1));
    Tensor d = coproduct(x);
    // counit laws
    Element left(&p), right(&p);
    for (const auto& [s, c] : d.terms()) {
      Scalar e0(1), e1(1);
      for (int g : s[0]) e0 *= p.counit_of(g);
      for (int g : s[1]) e1 *= p.counit_of(g);
      left.add_term(s[1], c * e0);
      right.add_term(s[0], c * e1);
    }
    if (left != x || right != x) {
      rep.fail("counit law fails on " + p.mono_str(m));
      continue;
    }
    // coassociativity
    Tensor l3(&p, 3), r3(&p, 3);
    for (const auto& [s, c] : d.terms()) {
      for (const auto& [ds, dc] : coproduct_word(p, s[0]).terms())
        l3.add_term({ds[0], ds[1], s[1]}, c * dc);
      for (const auto& [ds, dc] : coproduct_word(p, s[1]).terms())
        r3.add_term({s[0], ds[0], ds[1]}, c * dc);
    }
    if (l3 != r3) rep.fail("coassociativity fails on " + p.mono_str(m));
    // antipode convolution laws
    Element conv_l(&p), conv_r(&p);
    for (const auto& [s, c] : d.terms()) {
      Element sa(&p), sb(&p);
      sa.add_term(s[0], Scalar(1));
      sb.add_term(s[1], Scalar(1));
      conv_l += (antipode(sa) * sb).scaled(c);
      conv_r += (sa * antipode(sb)).scaled(c);
    }
    Element eps_unit(&p, x.counit());
    if (conv_l != eps_unit || conv_r != eps_unit)
      rep.fail("antipode law fails on " + p.mono_str(m));
  }
  // structure maps must respect every rewriting rule
  for (const Rule& r : p.rules()) {
    Element rhs(&p);
    for (const auto& [m, c] : r.rhs) rhs.add_term(m, c);
    Tensor dl = coproduct_word(p, r.lhs);
    Tensor dr = coproduct(rhs);
    if (dl != dr)
      rep.fail("coproduct incompatible with rule on " + p.mono_str(r.lhs));
    Scalar el(1);
    for (int g : r.lhs) el *= p.counit_of(g);
    if (el != rhs.counit())
      rep.fail("counit incompatible with rule on " + p.mono_str(r.lhs));
    Element sl = Element::unit(&p);
    for (auto it = r.lhs.rbegin(); it != r.lhs.rend(); ++it) {
      Element sg(&p);
      for (const auto& [sm, sc] : p.antipode_of(*it)) sg.add_term(sm, sc);
      sl *= sg;
    }
    if (sl != antipode(rhs))
      rep.fail("antipode incompatible with rule on " + p.mono_str(r.lhs));
  }
  (void)unit2;
  return rep;
}

// --- expression parsing ----------------------------------------------------

namespace {

struct Token {
  enum Kind { Name, Number, Plus, Minus, Star, Slash, Caret, LPar, RPar,
              TenSep, End } kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(' && i + 2 < s.size() && s[i + 1] == '*' && s[i + 2] == ')') {
      out.push_back({Token::TenSep, "(*)"});
      i += 3;
      continue;
    }
    switch (c) {
      case '+': out.push_back({Token::Plus, "+"}); ++i; continue;
      case '-': out.push_back({Token::Minus, "-"}); ++i; continue;
      case '*': out.push_back({Token::Star, "*"}); ++i; continue;
      case '/': out.push_back({Token::Slash, "/"}); ++i; continue;
      case '^': out.push_back({Token::Caret, "^"}); ++i; continue;
      case '(': out.push_back({Token::LPar, "("}); ++i; continue;
      case ')': out.push_back({Token::RPar, ")"}); ++i; continue;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      out.push_back({Token::Number, s.substr(i, j - i)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Token::Name, s.substr(i, j - i)});
      i = j;
      continue;
    }
    throw AlgebraError(std::string("unexpected character '") + c +
                       "' in expression");
  }
  out.push_back({Token::End, ""});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, const Presentation* pres,
         const std::map<std::string, Scalar>* extra)
      : toks_(tokenize(text)), pres_(pres), extra_(extra) {}

  Tensor parse() {
    Tensor t = sum();
    expect(Token::End);
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  void expect(Token::Kind k) {
    if (toks_[pos_].kind != k) throw AlgebraError("parse error near '" +
                                                  toks_[pos_].text + "'");
    ++pos_;
  }

  // promote an arity-0 value to the given arity (scalar times unit tensor)
  Tensor promote(const Tensor& t, int arity) const {
    if (t.arity() == arity || t.is_zero()) {
      Tensor r = t;
      if (r.is_zero()) return Tensor(pres_, arity);
      return r;
    }
    if (t.arity() != 0) throw AlgebraError("tensor arity mismatch");
    Tensor r(pres_, arity);
    r.add_term(std::vector<Monomial>(static_cast<size_t>(arity)),
               t.as_scalar());
    return r;
  }

  Tensor combine_add(Tensor a, Tensor b, bool minus) {
    int ar = std::max(a.arity(), b.arity());
    a = promote(a, ar);
    b = promote(b, ar);
    return minus ? a - b : a + b;
  }

  Tensor sum() {
    bool neg = false;
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      if (next().kind == Token::Minus) neg = !neg;
    }
    Tensor t = tensor_prod();
    if (neg) t = -t;
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      bool minus = next().kind == Token::Minus;
      Tensor rhs = tensor_prod();
      t = combine_add(std::move(t), std::move(rhs), minus);
    }
    return t;
  }

  Tensor tensor_prod() {
    Tensor t = product();
    if (peek().kind != Token::TenSep) return t;
    std::vector<Tensor> factors{promote(t, std::max(1, t.arity()))};
    while (peek().kind == Token::TenSep) {
      next();
      Tensor f = product();
      factors.push_back(promote(f, std::max(1, f.arity())));
    }
    int total = 0;
    for (const Tensor& f : factors) total += f.arity();
    Tensor out(pres_, total);
    std::vector<std::vector<Monomial>> slots{{}};
    std::vector<Scalar> coef{Scalar(1)};
    for (const Tensor& f : factors) {
      std::vector<std::vector<Monomial>> ns;
      std::vector<Scalar> nc;
      for (size_t k = 0; k < slots.size(); ++k)
        for (const auto& [fs, fc] : f.terms()) {
          auto s = slots[k];
          s.insert(s.end(), fs.begin(), fs.end());
          ns.push_back(std::move(s));
          nc.push_back(coef[k] * fc);
        }
      slots = std::move(ns);
      coef = std::move(nc);
    }
    for (size_t k = 0; k < slots.size(); ++k) out.add_term(slots[k], coef[k]);
    return out;
  }

  Tensor product() {
    Tensor t = unary();
    while (peek().kind == Token::Star || peek().kind == Token::Slash) {
      bool div = next().kind == Token::Slash;
      Tensor rhs = unary();
      if (div) {
        if (rhs.arity() != 0)
          throw AlgebraError("division by a non-scalar expression");
        t = t.scaled(rhs.as_scalar().inverse());
      } else if (t.arity() == 0 && rhs.arity() != 0) {
        t = rhs.scaled(t.as_scalar());
      } else if (rhs.arity() == 0 && t.arity() != 0) {
        t = t.scaled(rhs.as_scalar());
      } else {
        t = t * rhs;
      }
    }
    return t;
  }

  Tensor unary() {
    bool neg = false;
    while (peek().kind == Token::Minus) {
      next();
      neg = !neg;
    }
    Tensor t = power();
    return neg ? -t : t;
  }

  Tensor power() {
    Tensor t = atom();
    if (peek().kind != Token::Caret) return t;
    next();
    int sign = 1;
    if (peek().kind == Token::Minus) {
      next();
      sign = -1;
    }
    if (peek().kind != Token::Number) throw AlgebraError("integer exponent expected");
    int e = sign * std::stoi(next().text);
    if (t.arity() == 0) return Tensor::scalar(pres_, t.as_scalar().pow(e));
    if (e < 0) throw AlgebraError("negative power of a non-scalar");
    Tensor r = promote(Tensor::scalar(pres_, Scalar(1)), t.arity());
    for (int i = 0; i < e; ++i) r = r * t;
    return r;
  }

  Tensor atom() {
    const Token& t = peek();
    if (t.kind == Token::Number) {
      Rat val(next().text.c_str());
      return Tensor::scalar(pres_, Scalar(val));
    }
    if (t.kind == Token::LPar) {
      next();
      Tensor inner = sum();
      expect(Token::RPar);
      return inner;
    }
    if (t.kind == Token::Name) {
      std::string name = next().text;
      if (name == "v") return Tensor::scalar(pres_, Scalar::v());
      if (name == "q") return Tensor::scalar(pres_, Scalar::q());
      if (extra_) {
        auto it = extra_->find(name);
        if (it != extra_->end()) return Tensor::scalar(pres_, it->second);
      }
      if (pres_) {
        auto it = pres_->params().find(name);
        if (it != pres_->params().end())
          return Tensor::scalar(pres_, it->second);
        int g = pres_->generator_index(name);
        if (g >= 0)
          return Tensor::from_element(Element::generator(pres_, g));
      }
      throw AlgebraError("unknown symbol '" + name + "'");
    }
    throw AlgebraError("parse error near '" + t.text + "'");
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  const Presentation* pres_;
  const std::map<std::string, Scalar>* extra_;
};

}  // namespace

Tensor parse_tensor(const std::string& text, const Presentation* pres,
                    const std::map<std::string, Scalar>* extra_params) {
  return Parser(text, pres, extra_params).parse();
}

Element parse_element(const std::string& text, const Presentation* pres,
                      const std::map<std::string, Scalar>* extra_params) {
  Tensor t = parse_tensor(text, pres, extra_params);
  if (t.arity() == 0) return Element(pres, t.as_scalar());
  return t.as_element();
}

Scalar parse_scalar(const std::string& text,
                    const std::map<std::string, Scalar>* params) {
  Tensor t = parse_tensor(text, nullptr, params);
  return t.as_scalar();
}

}  // namespace qdp
