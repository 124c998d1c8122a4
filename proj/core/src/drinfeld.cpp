#include "qdp/drinfeld.hpp"

#include <algorithm>
#include <functional>

namespace qdp {

std::string kind_name(SubKind k) {
  switch (k) {
    case SubKind::I: return "I";
    case SubKind::C: return "C";
    case SubKind::gI: return "gI";
    case SubKind::gC: return "gC";
  }
  return "?";
}

SubKind kind_from_name(const std::string& s) {
  if (s == "I") return SubKind::I;
  if (s == "C") return SubKind::C;
  if (s == "gI") return SubKind::gI;
  if (s == "gC") return SubKind::gC;
  throw AlgebraError("unknown subobject kind: " + s);
}

namespace {

std::string digest(const std::vector<Element>& gens) {
  std::string s;
  for (const Element& g : gens) {
    s += g.str();
    s += ';';
  }
  return std::to_string(std::hash<std::string>{}(s));
}

int max_slot_degree(const Tensor& t) {
  size_t d = 0;
  for (const auto& [slots, c] : t.terms())
    for (const Monomial& w : slots) d = std::max(d, w.size());
  return static_cast<int>(d);
}

}  // namespace

std::vector<Element> ambient_products(Workspace& ws, const SubobjectSpec& s,
                                      int budget) {
  if (s.host_form == HostForm::vee) return ws.vee_family(budget);
  if (!s.host_lattice.empty()) return subalgebra_family(s.host_lattice, budget);
  std::vector<Element> out;
  for (const Monomial& m : ws.monomials(budget)) {
    Element e(ws.pres());
    e.add_term(m, Scalar(1));
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Element> slice_family(Workspace& ws, const SubobjectSpec& s,
                                  int budget) {
  if (!kind_is_ideal(s.kind)) return subalgebra_family(s.gens, budget);
  return ideal_family(ambient_products(ws, s, budget), s.gens, s.side, budget);
}

Echelon& slice_echelon(Workspace& ws, const SubobjectSpec& s, int budget) {
  std::string key = "sub:" + s.name + ":" + kind_name(s.kind) + ":" +
                    (s.side == Side::left ? "l" : "r") + ":" + digest(s.gens) +
                    ":" + std::to_string(budget);
  return ws.echelon(key, [&]() { return slice_family(ws, s, budget); });
}

Echelon& ambient_echelon(Workspace& ws, const SubobjectSpec& s, int budget) {
  std::string key = "amb:" +
                    std::string(s.host_form == HostForm::vee ? "vee" : "plain") +
                    ":" + digest(s.host_lattice) + ":" + std::to_string(budget);
  return ws.echelon(key, [&]() { return ambient_products(ws, s, budget); });
}

// --- coordinate tensors ----------------------------------------------------

namespace {

using Slots = std::vector<int>;
using CoordTensor = std::map<Slots, Scalar>;

void ct_add(CoordTensor& T, const Slots& s, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = T.find(s);
  if (it == T.end()) {
    T.emplace(s, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) T.erase(it);
  }
}

CoordTensor tensor_coords(Workspace& ws, const Tensor& t) {
  CoordTensor T;
  for (const auto& [slots, c] : t.terms()) {
    Slots ids;
    ids.reserve(slots.size());
    for (const Monomial& w : slots) ids.push_back(ws.interner().id(w));
    ct_add(T, ids, c);
  }
  return T;
}

struct Peeled {
  std::vector<std::pair<size_t, CoordTensor>> fibers;  // (row index, mu)
  std::map<int, CoordTensor> residual;                 // leading column
};

/// Decomposes T = sum_i e_i (x) mu_i + residual along the first slot, with
/// field coefficients; integrality is judged by the callers per layer.
Peeled peel_slot(CoordTensor T, const Echelon& E) {
  Peeled out;
  for (size_t i = 0; i < E.rows().size(); ++i) {
    const Echelon::Row& row = E.rows()[i];
    CoordTensor fib;
    {
      Slots lo{row.pivot};
      auto it = T.lower_bound(lo);
      while (it != T.end() && !it->first.empty() && it->first[0] == row.pivot) {
        Slots rest(it->first.begin() + 1, it->first.end());
        fib.emplace(std::move(rest), it->second);
        it = T.erase(it);
      }
    }
    if (fib.empty()) continue;
    Scalar inv = row.v.at(row.pivot).inverse();
    CoordTensor mu;
    for (auto& [s, c] : fib) mu.emplace(s, c * inv);
    for (const auto& [col, rc] : row.v) {
      if (col == row.pivot) continue;
      for (const auto& [s, mc] : mu) {
        Slots full;
        full.reserve(s.size() + 1);
        full.push_back(col);
        full.insert(full.end(), s.begin(), s.end());
        ct_add(T, full, -(rc * mc));
      }
    }
    out.fibers.emplace_back(i, std::move(mu));
  }
  for (auto& [s, c] : T) {
    Slots rest(s.begin() + 1, s.end());
    ct_add(out.residual[s[0]], rest, c);
  }
  return out;
}

const Scalar& v_minus_one() {
  static const Scalar s = Scalar::v() - Scalar(1);
  return s;
}

bool in_lattice_power(CoordTensor T, int arity, const Echelon& A,
                      Scalar* wit) {
  if (arity == 0) {
    if (T.empty()) return true;
    const Scalar& c = T.begin()->second;
    if (val_or_large(c) >= 0) return true;
    if (wit) *wit = c;
    return false;
  }
  Peeled p = peel_slot(std::move(T), A);
  if (!p.residual.empty()) {
    if (wit) *wit = p.residual.begin()->second.begin()->second;
    return false;
  }
  for (auto& [i, fib] : p.fibers)
    if (!in_lattice_power(std::move(fib), arity - 1, A, wit)) return false;
  return true;
}

/// T in (v-1)^e . R^{(x)arity} + sum_s R..L..R (slot sum); e < 0 is infinity.
bool in_slot_sum(CoordTensor T, int arity, const Echelon& L, int e,
                 Scalar* wit) {
  if (arity == 0) {
    if (T.empty()) return true;
    const Scalar& c = T.begin()->second;
    bool ok = e >= 0 && val_or_large(c) >= e;
    if (!ok && wit) *wit = c;
    return ok;
  }
  Peeled p = peel_slot(std::move(T), L);
  for (auto& [i, mu] : p.fibers) {
    int a = L.rows()[i].pivot_val;
    int ne = e < 0 ? a : std::min(e, a);
    CoordTensor scaled;
    Scalar f = v_minus_one().pow(a);
    for (auto& [s, c] : mu) scaled.emplace(s, c * f);
    if (!in_slot_sum(std::move(scaled), arity - 1, L, ne, wit)) return false;
  }
  for (auto& [col, fib] : p.residual)
    if (!in_slot_sum(std::move(fib), arity - 1, L, e, wit)) return false;
  return true;
}

bool to_row_coords(CoordTensor T, int arity, const Echelon& A, Slots prefix,
                   CoordTensor* out, Scalar* wit) {
  if (arity == 0) {
    if (!T.empty()) ct_add(*out, prefix, T.begin()->second);
    return true;
  }
  Peeled p = peel_slot(std::move(T), A);
  if (!p.residual.empty()) {
    if (wit) *wit = p.residual.begin()->second.begin()->second;
    return false;
  }
  for (auto& [i, fib] : p.fibers) {
    Slots np = prefix;
    np.push_back(static_cast<int>(i));
    if (!to_row_coords(std::move(fib), arity - 1, A, np, out, wit))
      return false;
  }
  return true;
}

bool lsh_rec(CoordTensor T, int arity, const Echelon& A, const Echelon& C,
             Scalar* wit) {
  if (arity == 1) {
    Vec v;
    for (auto& [s, c] : T) v[s[0]] = c;
    if (C.contains(v)) return true;
    if (wit && !v.empty()) *wit = v.begin()->second;
    return false;
  }
  Peeled p = peel_slot(std::move(T), A);
  if (!p.residual.empty()) {
    if (wit) *wit = p.residual.begin()->second.begin()->second;
    return false;
  }
  for (auto& [i, fib] : p.fibers)
    if (!lsh_rec(std::move(fib), arity - 1, A, C, wit)) return false;
  return true;
}

}  // namespace

// --- membership operations -------------------------------------------------

Verdict member_vee(Workspace& ws, const Element& x, int D) {
  if (x.is_zero()) return Verdict::in_up_to(D);
  if (x.degree() > D)
    throw AlgebraError("BoundTooSmall: element degree exceeds the bound");
  int m = std::max(0, -*x.min_val());
  Element y = x.mul_q1_power(m);
  int budget = std::max(D, y.degree());
  std::string key =
      "ipow:" + std::to_string(m) + ":" + std::to_string(budget);
  Echelon& e =
      ws.echelon(key, [&]() { return ws.i_power(m, budget); });
  if (e.contains(ws.vec(y))) return Verdict::in_up_to(D);
  Vec res;
  e.solve(ws.vec(y), nullptr, &res);
  Scalar c = res.empty() ? y.terms().begin()->second : res.begin()->second;
  return Verdict::not_in(m, c, "pole order " + std::to_string(m));
}

Verdict member_prime(Workspace& ws, const Element& x, int N,
                     const std::vector<Element>& ambient_lattice) {
  for (int n = 1; n <= N; ++n) {
    Tensor T = delta_n(x, n).mul_q1_power(-n);
    if (T.is_zero()) continue;
    if (ambient_lattice.empty()) {
      for (const auto& [slots, c] : T.terms())
        if (val_or_large(c) < 0)
          return Verdict::not_in(n, c, "coefficient valuation below " +
                                           std::to_string(n));
      continue;
    }
    int budget = std::max(max_slot_degree(T), 1);
    std::string key = "lat:" + digest(ambient_lattice) + ":" +
                      std::to_string(budget);
    Echelon& A = ws.echelon(key, [&]() {
      return subalgebra_family(ambient_lattice, budget);
    });
    Scalar wit;
    if (!in_lattice_power(tensor_coords(ws, T), n, A, &wit))
      return Verdict::not_in(n, wit);
  }
  return Verdict::in_up_to(N);
}

Echelon& relative_slice_echelon(Workspace& ws, const SubobjectSpec& s,
                                int budget) {
  std::string lkey = "rel:" + s.name + ":" + kind_name(s.kind) + ":" +
                     digest(s.gens) + ":" + std::to_string(budget);
  Echelon& L = ws.echelon(lkey, []() { return std::vector<Element>{}; });
  if (L.empty()) {
    Echelon& A = ambient_echelon(ws, s, budget);
    for (const Element& f : slice_family(ws, s, budget)) {
      std::vector<Scalar> mu;
      Vec res;
      A.solve(ws.vec(f), &mu, &res);
      if (!res.empty())
        throw AlgebraError(
            "BoundTooSmall: slice leaves the ambient family span");
      Vec row;
      for (size_t i = 0; i < mu.size(); ++i)
        if (!mu[i].is_zero()) row[static_cast<int>(i)] = mu[i];
      if (!row.empty()) L.add(std::move(row));
    }
    L.build();
  }
  return L;
}

bool tensor_in_slot_sum(Workspace& ws, const Tensor& T, const SubobjectSpec& S,
                        int D, Scalar* witness) {
  if (T.is_zero()) return true;
  int n = T.arity();
  int budget = std::max(D, max_slot_degree(T));
  Echelon& A = ambient_echelon(ws, S, budget);
  Echelon& L = relative_slice_echelon(ws, S, budget);
  CoordTensor TA;
  if (!to_row_coords(tensor_coords(ws, T), n, A, {}, &TA, witness))
    return false;
  return in_slot_sum(std::move(TA), n, L, -1, witness);
}

Verdict member_bang(Workspace& ws, const Element& x, const SubobjectSpec& gI,
                    int N, int D) {
  if (!kind_is_ideal(gI.kind)) throw AlgebraError("KindMismatch");
  int pre_budget = std::max(D, x.degree());
  if (!slice_echelon(ws, gI, pre_budget).contains(ws.vec(x)))
    throw AlgebraError("NotInIdeal");
  for (int n = 1; n <= N; ++n) {
    Tensor T = delta_n(x, n).mul_q1_power(-n);
    Scalar wit;
    if (!tensor_in_slot_sum(ws, T, gI, D, &wit))
      return Verdict::not_in(n, wit);
  }
  return Verdict::in_up_to(N);
}

Verdict member_lsh(Workspace& ws, const Element& x, const SubobjectSpec& gC,
                   int N, int D) {
  if (kind_is_ideal(gC.kind)) throw AlgebraError("KindMismatch");
  int pre_budget = std::max(D, x.degree());
  if (!slice_echelon(ws, gC, pre_budget).contains(ws.vec(x)))
    throw AlgebraError("NotInIdeal");
  for (int n = 1; n <= N; ++n) {
    Tensor T = delta_n(x, n).mul_q1_power(-n);
    if (gC.side == Side::right) T = T.flipped();
    if (T.is_zero()) continue;
    int budget = std::max(D, max_slot_degree(T));
    Echelon& A = ambient_echelon(ws, gC, budget);
    Echelon& C = slice_echelon(ws, gC, budget);
    Scalar wit;
    if (!lsh_rec(tensor_coords(ws, T), n, A, C, &wit))
      return Verdict::not_in(n, wit);
  }
  return Verdict::in_up_to(N);
}

// --- the four maps and the Galois pair --------------------------------------

SubobjectSpec map_vee(const SubobjectSpec& I) {
  if (I.kind != SubKind::I) throw AlgebraError("KindMismatch");
  SubobjectSpec out = I;
  out.kind = SubKind::gI;
  out.host_form = HostForm::vee;
  out.host_lattice.clear();
  out.name = I.name.empty() ? "" : I.name + "_vee";
  out.gens.clear();
  for (const Element& g : I.gens) out.gens.push_back(g.mul_q1_power(-1));
  return out;
}

SubobjectSpec map_down(const SubobjectSpec& C) {
  if (C.kind != SubKind::C) throw AlgebraError("KindMismatch");
  SubobjectSpec out = C;
  out.kind = SubKind::gC;
  out.host_form = HostForm::vee;
  out.host_lattice.clear();
  out.name = C.name.empty() ? "" : C.name + "_down";
  out.gens.clear();
  for (const Element& g : C.gens)
    out.gens.push_back(g.shifted().mul_q1_power(-1));
  return out;
}

SubobjectSpec psi(Workspace& ws, const SubobjectSpec& C, int prune_budget) {
  if (kind_is_ideal(C.kind)) throw AlgebraError("KindMismatch");
  SubobjectSpec out = C;
  out.kind = C.kind == SubKind::C ? SubKind::I : SubKind::gI;
  out.name = C.name.empty() ? "" : "psi_" + C.name;
  out.gens.clear();
  for (const Element& g : C.gens) {
    Element s = g.shifted();
    if (!s.is_zero()) out.gens.push_back(std::move(s));
  }
  // prune generators lying in the span of the ideal on the others
  for (size_t i = out.gens.size(); i-- > 0;) {
    std::vector<Element> others;
    for (size_t j = 0; j < out.gens.size(); ++j)
      if (j != i) others.push_back(out.gens[j]);
    if (others.empty()) break;
    SubobjectSpec probe = out;
    probe.gens = others;
    probe.name.clear();
    int b = std::max(prune_budget, out.gens[i].degree());
    Echelon e;
    for (const Element& f : slice_family(ws, probe, b)) e.add(ws.vec(f));
    e.build();
    if (e.contains(ws.vec(out.gens[i])))
      out.gens.erase(out.gens.begin() + static_cast<long>(i));
  }
  return out;
}

std::vector<Element> phi(Workspace& ws, const SubobjectSpec& I, int D) {
  if (!kind_is_ideal(I.kind)) throw AlgebraError("KindMismatch");
  const Presentation* p = ws.pres();
  // budget must cover the coproduct slot degrees of all candidates
  int needed = D;
  std::vector<std::pair<Monomial, Tensor>> cops;
  for (const Monomial& m : ws.monomials(D)) {
    Element e(p);
    e.add_term(m, Scalar(1));
    Tensor d = coproduct(e);
    needed = std::max(needed, max_slot_degree(d));
    cops.emplace_back(m, std::move(d));
  }
  Echelon& M = slice_echelon(ws, I, needed);
  bool left = I.side == Side::left;
  // constraint columns: residual of the ideal-side slot against M
  std::map<Monomial, Vec> reduced;
  auto residual_of = [&](const Monomial& w) -> const Vec& {
    auto it = reduced.find(w);
    if (it == reduced.end()) {
      Vec r;
      Element e(p);
      e.add_term(w, Scalar(1));
      M.solve(ws.vec(e), nullptr, &r);
      it = reduced.emplace(w, std::move(r)).first;
    }
    return it->second;
  };
  std::map<std::pair<int, int>, int> paircols;
  auto paircol = [&](int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = paircols.find(key);
    if (it == paircols.end())
      it = paircols.emplace(key, static_cast<int>(paircols.size())).first;
    return it->second;
  };
  std::vector<Vec> columns;
  for (auto& [m, d] : cops) {
    // Delta(y) - y (x) 1 for the left side, Delta(y) - 1 (x) y mirrored
    Tensor shifted = d;
    Tensor sub(p, 2);
    if (left)
      sub.add_term({m, Monomial{}}, Scalar(1));
    else
      sub.add_term({Monomial{}, m}, Scalar(1));
    shifted -= sub;
    Vec col;
    for (const auto& [slots, c] : shifted.terms()) {
      const Monomial& free_w = left ? slots[0] : slots[1];
      const Monomial& ideal_w = left ? slots[1] : slots[0];
      for (const auto& [rescol, rc] : residual_of(ideal_w)) {
        int cc = paircol(ws.interner().id(free_w), rescol);
        auto it = col.find(cc);
        if (it == col.end()) {
          Scalar t = c * rc;
          if (!t.is_zero()) col.emplace(cc, std::move(t));
        } else {
          it->second += c * rc;
          if (it->second.is_zero()) col.erase(it);
        }
      }
    }
    columns.push_back(std::move(col));
  }
  std::vector<Element> basis;
  for (const std::vector<Scalar>& lambda : field_kernel(columns)) {
    Element y(p);
    for (size_t i = 0; i < lambda.size(); ++i)
      if (!lambda[i].is_zero()) y.add_term(cops[i].first, lambda[i]);
    if (y.is_zero()) continue;
    // normalize: leading coefficient one
    Scalar lead = y.terms().begin()->second;
    basis.push_back(y.scaled(lead.inverse()));
  }
  return basis;
}

}  // namespace qdp
