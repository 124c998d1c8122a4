#include "qdp/presentation.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace qdp {

Element::Element(const Presentation* p, const Scalar& c) : pres_(p) {
  if (!c.is_zero()) terms_[Monomial{}] = c;
}

Element Element::generator(const Presentation* p, int g) {
  Element e(p);
  e.terms_[Monomial{g}] = Scalar(1);
  return e;
}

int Element::degree() const {
  size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return static_cast<int>(d);
}

std::optional<int> Element::min_val() const {
  std::optional<int> v;
  for (const auto& [m, c] : terms_) {
    int cv = *c.val_q1();
    if (!v || cv < *v) v = cv;
  }
  return v;
}

Element& Element::operator+=(const Element& o) {
  if (!pres_) pres_ = o.pres_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (!pres_) pres_ = o.pres_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element Element::operator-() const {
  Element r(pres_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Element operator*(const Element& a, const Element& b) {
  const Presentation* p = a.pres_ ? a.pres_ : b.pres_;
  Element r(p);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial w = ma;
      w.insert(w.end(), mb.begin(), mb.end());
      r += p->reduce_word(w, ca * cb);
    }
  return r;
}

Element Element::scaled(const Scalar& c) const {
  Element r(pres_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
  return r;
}

Element Element::mul_q1_power(int k) const {
  Element r(pres_);
  for (const auto& [m, c] : terms_) r.terms_[m] = c.mul_q1_power(k);
  return r;
}

Scalar Element::counit() const {
  Scalar s(0);
  for (const auto& [m, c] : terms_) {
    Scalar e(1);
    for (int g : m) e *= pres_->counit_of(g);
    s += c * e;
  }
  return s;
}

Scalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Element Element::shifted() const {
  Element r = *this;
  r -= Element(pres_, counit());
  return r;
}

void Element::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string Element::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (!m.empty()) os << "*" << pres_->mono_str(m);
  }
  return os.str();
}

// ---------------------------------------------------------------------------

int Presentation::add_generator(const std::string& gname, int weight) {
  if (finalized_) throw AlgebraError("presentation is finalized");
  if (index_.count(gname)) throw AlgebraError("duplicate generator " + gname);
  int g = static_cast<int>(gens_.size());
  gens_.push_back(gname);
  weights_.push_back(weight);
  precedence_.push_back(g);
  index_[gname] = g;
  counit_.emplace_back();
  counit_set_.push_back(0);
  coproduct_.emplace_back();
  antipode_.emplace_back();
  return g;
}

int Presentation::generator_index(const std::string& gname) const {
  auto it = index_.find(gname);
  return it == index_.end() ? -1 : it->second;
}

void Presentation::set_order(const std::vector<std::string>& names) {
  if (names.size() != gens_.size())
    throw AlgebraError("order list must mention every generator once");
  std::vector<int> rank(gens_.size(), -1);
  for (size_t i = 0; i < names.size(); ++i) {
    int g = generator_index(names[i]);
    if (g < 0) throw AlgebraError("unknown generator in order: " + names[i]);
    if (rank[g] != -1) throw AlgebraError("generator repeated in order");
    rank[g] = static_cast<int>(i);
  }
  precedence_ = rank;
}

void Presentation::add_rule(const Monomial& lhs,
                            std::vector<std::pair<Monomial, Scalar>> rhs) {
  if (lhs.empty()) throw AlgebraError("rule with empty left side");
  rules_.push_back(Rule{lhs, std::move(rhs)});
  max_lhs_len_ = std::max(max_lhs_len_, lhs.size());
}

void Presentation::set_counit(int g, const Scalar& c) {
  counit_[g] = c;
  counit_set_[g] = 1;
}

void Presentation::set_coproduct(int g, std::vector<RawTensorTerm> terms) {
  coproduct_[g] = std::move(terms);
}

void Presentation::set_antipode(int g,
                                std::vector<std::pair<Monomial, Scalar>> t) {
  antipode_[g] = std::move(t);
}

void Presentation::set_param(const std::string& pname, const Scalar& value) {
  params_[pname] = value;
}

long long Presentation::weight(const Monomial& m) const {
  long long w = 0;
  for (int g : m) w += weights_[g];
  return w;
}

bool Presentation::mono_less(const Monomial& a, const Monomial& b) const {
  long long wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return precedence_[a[i]] < precedence_[b[i]];
  return false;
}

void Presentation::finalize() {
  if (finalized_) return;
  for (const Rule& r : rules_)
    for (const auto& [m, c] : r.rhs)
      if (!mono_less(m, r.lhs))
        throw AlgebraError("rule is not decreasing: " + mono_str(r.lhs) +
                           " -> " + mono_str(m));
  finalized_ = true;
  // Normalize rule right-hand sides against the full rule set.
  for (bool changed = true; changed;) {
    changed = false;
    for (Rule& r : rules_) {
      Element nf(this);
      bool dirty = false;
      for (const auto& [m, c] : r.rhs) {
        if (!word_is_normal(m)) dirty = true;
        nf += reduce_word(m, c);
      }
      if (dirty) {
        r.rhs.assign(nf.terms().begin(), nf.terms().end());
        changed = true;
      }
    }
  }
}

std::optional<int> Presentation::find_redex(const Monomial& w,
                                            int from) const {
  for (int pos = from; pos < static_cast<int>(w.size()); ++pos)
    if (match_at(w, pos)) return pos;
  return std::nullopt;
}

const Rule* Presentation::match_at(const Monomial& w, int pos) const {
  for (const Rule& r : rules_) {
    size_t n = r.lhs.size();
    if (pos + n > w.size()) continue;
    if (std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + pos)) return &r;
  }
  return nullptr;
}

Element Presentation::reduce_word(const Monomial& w, const Scalar& c) const {
  Element out(this);
  if (c.is_zero()) return out;
  std::deque<std::pair<Monomial, Scalar>> work;
  work.emplace_back(w, c);
  long long steps = 0;
  while (!work.empty()) {
    auto [word, coeff] = std::move(work.front());
    work.pop_front();
    if (++steps > step_budget) throw AlgebraError("NonTerminating");
    auto pos = find_redex(word);
    if (!pos) {
      out.add_term(word, coeff);
      continue;
    }
    const Rule* r = match_at(word, *pos);
    for (const auto& [rm, rc] : r->rhs) {
      Monomial nw;
      nw.reserve(word.size() - r->lhs.size() + rm.size());
      nw.insert(nw.end(), word.begin(), word.begin() + *pos);
      nw.insert(nw.end(), rm.begin(), rm.end());
      nw.insert(nw.end(), word.begin() + *pos + r->lhs.size(), word.end());
      work.emplace_back(std::move(nw), coeff * rc);
    }
  }
  return out;
}

bool Presentation::word_is_normal(const Monomial& w) const {
  return !find_redex(w).has_value();
}

std::vector<Monomial> Presentation::normal_monomials(int maxlen) const {
  std::vector<Monomial> out{Monomial{}};
  std::vector<Monomial> frontier{Monomial{}};
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<Monomial> next;
    for (const Monomial& w : frontier)
      for (int g = 0; g < generator_count(); ++g) {
        Monomial ext = w;
        ext.push_back(g);
        // w is normal, so a redex must involve the appended letter.
        int lo = std::max<int>(0, static_cast<int>(ext.size()) -
                                      static_cast<int>(max_lhs_len_));
        bool normal = true;
        for (int pos = lo; pos < static_cast<int>(ext.size()); ++pos)
          if (match_at(ext, pos)) {
            normal = false;
            break;
          }
        if (normal) next.push_back(std::move(ext));
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(),
            [this](const Monomial& a, const Monomial& b) {
              return mono_less(a, b);
            });
  return out;
}

bool Presentation::has_counit(int g) const { return counit_set_[g]; }
bool Presentation::has_coproduct(int g) const {
  return !coproduct_[g].empty();
}
bool Presentation::has_antipode(int g) const { return !antipode_[g].empty(); }

const Scalar& Presentation::counit_of(int g) const {
  if (!counit_set_[g])
    throw AlgebraError("MissingStructure: counit of " + gens_[g]);
  return counit_[g];
}

const std::vector<RawTensorTerm>& Presentation::coproduct_of(int g) const {
  if (coproduct_[g].empty())
    throw AlgebraError("MissingStructure: coproduct of " + gens_[g]);
  return coproduct_[g];
}

const std::vector<std::pair<Monomial, Scalar>>& Presentation::antipode_of(
    int g) const {
  if (antipode_[g].empty())
    throw AlgebraError("MissingStructure: antipode of " + gens_[g]);
  return antipode_[g];
}

std::string Presentation::mono_str(const Monomial& m) const {
  if (m.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) os << "*";
    os << gens_[m[i]];
  }
  return os.str();
}

Element word_product(const Presentation& p, const Monomial& a,
                     const Monomial& b) {
  Monomial w = a;
  w.insert(w.end(), b.begin(), b.end());
  return p.reduce_word(w, Scalar(1));
}

}  // namespace qdp
