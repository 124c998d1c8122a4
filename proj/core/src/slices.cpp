#include "qdp/slices.hpp"

#include <algorithm>

namespace qdp {

int MonoInterner::id(const Monomial& m) {
  auto it = idx_.find(m);
  if (it != idx_.end()) return it->second;
  int k = static_cast<int>(keys_.size());
  keys_.push_back(m);
  idx_.emplace(m, k);
  return k;
}

Vec Workspace::vec(const Element& e) {
  Vec v;
  for (const auto& [m, c] : e.terms()) v[interner_.id(m)] = c;
  return v;
}

Element Workspace::elem(const Vec& v) const {
  Element e(pres_);
  for (const auto& [k, c] : v) e.add_term(interner_.key(k), c);
  return e;
}

std::vector<Vec> Workspace::vecs(const std::vector<Element>& es) {
  std::vector<Vec> out;
  out.reserve(es.size());
  for (const Element& e : es) out.push_back(vec(e));
  return out;
}

const std::vector<Monomial>& Workspace::monomials(int deg) {
  auto it = monomials_.find(deg);
  if (it == monomials_.end())
    it = monomials_.emplace(deg, pres_->normal_monomials(deg)).first;
  return it->second;
}

const std::vector<Element>& Workspace::aug_family(int deg) {
  auto it = aug_.find(deg);
  if (it != aug_.end()) return it->second;
  std::vector<Element> fam;
  for (const Monomial& m : monomials(deg)) {
    if (m.empty()) continue;
    Element e(pres_);
    e.add_term(m, Scalar(1));
    fam.push_back(e.shifted());
  }
  return aug_.emplace(deg, std::move(fam)).first->second;
}

const std::vector<Element>& Workspace::aug_power(int n, int budget) {
  auto key = std::make_pair(n, budget);
  auto it = aug_pow_.find(key);
  if (it != aug_pow_.end()) return it->second;
  std::vector<Element> fam;
  if (n == 0) {
    fam.push_back(Element::unit(pres_));
  } else {
    // products of n shifted monomials with total word length <= budget
    const std::vector<Element>& shifts = aug_family(budget - (n - 1));
    std::function<void(int, int, const Element&)> rec =
        [&](int k, int used, const Element& acc) {
          if (k == n) {
            fam.push_back(acc);
            return;
          }
          int room = budget - used - (n - k - 1);
          for (const Element& s : shifts) {
            int d = s.degree();
            if (d > room || d < 1) continue;
            rec(k + 1, used + d, k == 0 ? s : acc * s);
          }
        };
    rec(0, 0, Element(pres_));
  }
  return aug_pow_.emplace(key, std::move(fam)).first->second;
}

const std::vector<Element>& Workspace::i_power(int m, int budget) {
  auto key = std::make_pair(m, budget);
  auto it = i_pow_.find(key);
  if (it != i_pow_.end()) return it->second;
  std::vector<Element> fam;
  for (int k = 0; k <= m; ++k) {
    if (k == 0) {
      for (const Monomial& mo : monomials(budget)) {
        Element e(pres_);
        e.add_term(mo, Scalar::q_minus_one(m));
        fam.push_back(e);
      }
    } else {
      for (const Element& p : aug_power(k, budget))
        fam.push_back(p.mul_q1_power(m - k));
    }
  }
  return i_pow_.emplace(key, std::move(fam)).first->second;
}

const std::vector<Element>& Workspace::vee_family(int budget) {
  auto it = vee_.find(budget);
  if (it != vee_.end()) return it->second;
  std::vector<Element> fam;
  fam.push_back(Element::unit(pres_));
  for (int m = 1; m <= budget; ++m)
    for (const Element& p : aug_power(m, budget))
      fam.push_back(p.mul_q1_power(-m));
  return vee_.emplace(budget, std::move(fam)).first->second;
}

Echelon& Workspace::echelon(const std::string& key,
                            const std::function<std::vector<Element>()>& make) {
  auto it = echelons_.find(key);
  if (it != echelons_.end()) return it->second;
  Echelon e;
  for (const Element& el : make()) e.add(vec(el));
  e.build();
  return echelons_.emplace(key, std::move(e)).first->second;
}

Echelon& Workspace::echelon_of(const std::string& key,
                               const std::vector<Element>& fam) {
  return echelon(key, [&fam]() { return fam; });
}

std::vector<Element> subalgebra_family(const std::vector<Element>& gens,
                                       int budget) {
  std::vector<Element> fam;
  if (gens.empty()) return fam;
  const Presentation* p = gens.front().pres();
  std::vector<std::pair<Element, int>> frontier{{Element::unit(p), 0}};
  fam.push_back(Element::unit(p));
  while (!frontier.empty()) {
    std::vector<std::pair<Element, int>> next;
    for (const auto& [w, used] : frontier)
      for (const Element& g : gens) {
        int d = std::max(1, g.degree());
        if (used + d > budget) continue;
        Element prod = w * g;
        if (prod.is_zero()) continue;
        fam.push_back(prod);
        next.emplace_back(std::move(prod), used + d);
      }
    frontier = std::move(next);
  }
  return fam;
}

std::vector<Element> ideal_family(const std::vector<Element>& ambient,
                                  const std::vector<Element>& gens, Side side,
                                  int budget) {
  std::vector<Element> fam;
  for (const Element& g : gens) {
    int gd = std::max(1, g.degree());
    for (const Element& u : ambient) {
      if (u.degree() + gd > budget) continue;
      Element prod = side == Side::left ? u * g : g * u;
      if (!prod.is_zero()) fam.push_back(std::move(prod));
    }
  }
  return fam;
}

int filtration_valuation(Workspace& ws, const Element& x,
                         const std::vector<Element>& jgens, int bound) {
  if (x.is_zero()) return bound;
  if (x.degree() > bound)
    throw AlgebraError("BoundTooSmall: element degree exceeds the bound");
  const Presentation* p = ws.pres();
  // Words mixing plain generators and marked jgen factors, with exactly n
  // marks, spanning the degree slice of J^n for the two-sided ideal J.
  auto family = [&](int n) {
    std::vector<Element> fam;
    int ngen = p->generator_count();
    std::function<void(const Element&, int, int)> rec =
        [&](const Element& acc, int used, int marks) {
          if (marks == n) fam.push_back(acc);
          if (used >= bound) return;
          int need = n - marks;
          if (used + need > bound) return;
          for (int g = 0; g < ngen; ++g)
            rec(acc * Element::generator(p, g), used + 1, marks);
          if (marks < n)
            for (const Element& jg : jgens) {
              int d = std::max(1, jg.degree());
              if (used + d + (need - 1) > bound) continue;
              rec(acc * jg, used + d, marks + 1);
            }
        };
    rec(Element::unit(p), 0, 0);
    return fam;
  };
  int best = 0;
  for (int n = 1; n <= bound; ++n) {
    Echelon& e = ws.echelon("filt:" + std::to_string(n) + ":" +
                                std::to_string(bound),
                            [&]() { return family(n); });
    if (e.contains(ws.vec(x)))
      best = n;
    else
      break;
  }
  return best;
}

}  // namespace qdp
