#include "qdp/pairing.hpp"

#include "qdp/drinfeld.hpp"

namespace qdp {

namespace {

struct PairContext {
  const PairingSpec* ps;
  std::map<std::pair<Monomial, Monomial>, Scalar> memo;
};

Scalar eps_of(const Presentation* p, const Monomial& w) {
  Scalar s(1);
  for (int g : w) s *= p->counit_of(g);
  return s;
}

Scalar pair_words(PairContext& ctx, const Monomial& u, const Monomial& f);

Scalar pair_word_element_left(PairContext& ctx, const Monomial& u,
                              const Element& f) {
  Scalar s(0);
  for (const auto& [m, c] : f.terms()) s += c * pair_words(ctx, u, m);
  return s;
}

Scalar pair_words(PairContext& ctx, const Monomial& u, const Monomial& f) {
  if (u.empty()) return eps_of(ctx.ps->right, f);
  if (f.empty()) return eps_of(ctx.ps->left, u);
  auto key = std::make_pair(u, f);
  auto it = ctx.memo.find(key);
  if (it != ctx.memo.end()) return it->second;
  Scalar out(0);
  if (u.size() == 1 && f.size() == 1) {
    out = ctx.ps->on_generators(u[0], f[0]);
  } else if (u.size() > 1) {
    // <u0 u', f> = sum <u0, f_(1)> <u', f_(2)>
    Monomial u0{u[0]};
    Monomial urest(u.begin() + 1, u.end());
    Element fe(ctx.ps->right);
    fe.add_term(f, Scalar(1));
    for (const auto& [slots, c] : coproduct(fe).terms())
      out += c * pair_words(ctx, u0, slots[0]) *
             pair_words(ctx, urest, slots[1]);
  } else {
    // u a single generator, f longer: <u, f0 f'> = sum <u_(1), f0><u_(2), f'>
    Monomial f0{f[0]};
    Monomial frest(f.begin() + 1, f.end());
    Element ue(ctx.ps->left);
    ue.add_term(u, Scalar(1));
    for (const auto& [slots, c] : coproduct(ue).terms())
      out += c * pair_words(ctx, slots[0], f0) *
             pair_words(ctx, slots[1], frest);
  }
  ctx.memo.emplace(std::move(key), out);
  return out;
}

}  // namespace

Scalar pair_elements(const PairingSpec& ps, const Element& u,
                     const Element& f) {
  if (u.pres() != ps.left || f.pres() != ps.right)
    throw AlgebraError("MissingTable: elements do not match the paired hosts");
  PairContext ctx{&ps, {}};
  Scalar out(0);
  for (const auto& [mu, cu] : u.terms())
    for (const auto& [mf, cf] : f.terms())
      out += cu * cf * pair_words(ctx, mu, mf);
  return out;
}

std::vector<Element> orthogonal_side(Workspace& ws_sub, Workspace& ws_other,
                                     const PairingSpec& ps,
                                     const SubobjectSpec& S, int D,
                                     int Dprime) {
  bool sub_on_left = S.host == ps.left;
  if (!sub_on_left && S.host != ps.right)
    throw AlgebraError("subobject host is not part of the pairing");
  std::vector<Element> fam = slice_family(ws_sub, S, Dprime);
  const Presentation* other = sub_on_left ? ps.right : ps.left;
  std::vector<Monomial> candidates = ws_other.monomials(D);
  std::vector<Vec> columns;
  for (const Monomial& y : candidates) {
    Element ye(other);
    ye.add_term(y, Scalar(1));
    Vec col;
    for (size_t i = 0; i < fam.size(); ++i) {
      Scalar val = sub_on_left ? pair_elements(ps, fam[i], ye)
                               : pair_elements(ps, ye, fam[i]);
      if (!val.is_zero()) col[static_cast<int>(i)] = val;
    }
    columns.push_back(std::move(col));
  }
  std::vector<Element> basis;
  for (const std::vector<Scalar>& lambda : field_kernel(columns)) {
    Element y(other);
    for (size_t i = 0; i < lambda.size(); ++i)
      if (!lambda[i].is_zero()) y.add_term(candidates[i], lambda[i]);
    if (y.is_zero()) continue;
    basis.push_back(y.scaled(y.terms().begin()->second.inverse()));
  }
  return basis;
}

}  // namespace qdp
