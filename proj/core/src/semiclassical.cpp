#include "qdp/semiclassical.hpp"

#include <algorithm>
#include <functional>

namespace qdp {

Element specialize(const Element& x, const Presentation* classical) {
  Element out(classical);
  for (const auto& [m, c] : x.terms()) {
    Rat value = c.eval_q1();
    if (value == 0) continue;
    Monomial w;
    w.reserve(m.size());
    for (int g : m) {
      int cg = classical->generator_index(x.pres()->generator_name(g));
      if (cg < 0)
        throw AlgebraError("no classical generator named " +
                           x.pres()->generator_name(g));
      w.push_back(cg);
    }
    out += classical->reduce_word(w, Scalar(value));
  }
  return out;
}

Element poisson_bracket(const Element& phi, const Element& gamma,
                        const Presentation* classical) {
  Element comm = phi * gamma - gamma * phi;
  return specialize(comm.mul_q1_power(-1), classical);
}

// ---------------------------------------------------------------------------

namespace {

std::string family_digest(const std::vector<Element>& fam) {
  std::string s;
  for (const Element& e : fam) {
    s += e.str();
    s += ';';
  }
  return std::to_string(std::hash<std::string>{}(s));
}

std::vector<Element> lattice_slice(Workspace& ws, const SemiclassicalMap& sm) {
  if (sm.form == HostForm::vee) return ws.vee_family(sm.budget);
  if (!sm.lattice.empty()) return subalgebra_family(sm.lattice, sm.budget);
  std::vector<Element> out;
  for (const Monomial& m : ws.monomials(sm.budget)) {
    Element e(ws.pres());
    e.add_term(m, Scalar(1));
    out.push_back(std::move(e));
  }
  return out;
}

void reduce_by_rref(const QMat& rows, QVec& c) {
  for (const QVec& r : rows) {
    size_t p = 0;
    while (p < r.size() && r[p] == 0) ++p;
    if (p >= r.size()) continue;
    if (p < c.size() && c[p] != 0) {
      Rat f = c[p];
      for (size_t k = 0; k < std::min(c.size(), r.size()); ++k)
        c[k] -= f * r[k];
    }
  }
}

bool qvec_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; });
}

}  // namespace

PrimitiveQuotient::PrimitiveQuotient(Workspace& ws, const SemiclassicalMap& sm)
    : sm_(sm) {
  std::vector<Element> lat = lattice_slice(ws, sm_);
  akey_ = "prim:" + std::to_string(static_cast<int>(sm_.form)) + ":" +
          std::to_string(sm_.budget) + ":" + family_digest(sm_.lattice) + ":" +
          ws.pres()->name;
  A_ = &ws.echelon_of(akey_, lat);
  ambient_dim_ = static_cast<int>(A_->rows().size());

  // Scalar-and-product part of the quotient: classes of 1 and of pairwise
  // products of shifted lattice elements. (q-1)-multiples evaluate to zero
  // coordinatewise and need no rows of their own.
  QMat mrows;
  mrows.push_back(to_eval_coords(ws, Element::unit(ws.pres())));
  std::vector<Element> shifted;
  for (const Element& f : lat) {
    Element s = f.shifted();
    if (!s.is_zero()) shifted.push_back(std::move(s));
  }
  for (const Element& f : shifted)
    for (const Element& g : shifted) {
      Element prod = f * g;
      if (prod.is_zero()) continue;
      mrows.push_back(to_eval_coords(ws, prod));
    }
  mbar_ = rref(std::move(mrows));

  for (const Element& l : sm_.lifts) {
    QVec c = to_eval_coords(ws, l);
    reduce_by_rref(mbar_, c);
    if (qvec_zero(c))
      throw AlgebraError("designated lift has trivial semiclassical class");
    lift_classes_.push_back(std::move(c));
  }
}

QVec PrimitiveQuotient::to_eval_coords(Workspace& ws, const Element& y) const {
  std::vector<Scalar> mu;
  if (!A_->contains(ws.vec(y), &mu))
    throw AlgebraError("element is not in the integral lattice slice");
  QVec out(mu.size(), Rat(0));
  for (size_t i = 0; i < mu.size(); ++i) out[i] = mu[i].eval_q1();
  out.resize(static_cast<size_t>(ambient_dim_), Rat(0));
  return out;
}

QVec PrimitiveQuotient::raw_class(Workspace& ws, const Element& y) const {
  QVec c = to_eval_coords(ws, y);
  reduce_by_rref(mbar_, c);
  return c;
}

QVec PrimitiveQuotient::solve_over_lifts(QVec target) const {
  // target = sum a_i lift_classes_[i]: augmented Gaussian elimination
  size_t n = lift_classes_.size();
  struct Aug {
    QVec coord, tag;
  };
  std::vector<Aug> ech;
  for (size_t i = 0; i < n; ++i) {
    Aug a;
    a.coord = lift_classes_[i];
    a.tag.assign(n, Rat(0));
    a.tag[i] = 1;
    for (const Aug& e : ech) {
      size_t p = 0;
      while (p < e.coord.size() && e.coord[p] == 0) ++p;
      if (p < a.coord.size() && a.coord[p] != 0) {
        Rat f = a.coord[p] / e.coord[p];
        for (size_t k = 0; k < a.coord.size(); ++k)
          a.coord[k] -= f * e.coord[k];
        for (size_t k = 0; k < n; ++k) a.tag[k] -= f * e.tag[k];
      }
    }
    if (!qvec_zero(a.coord)) ech.push_back(std::move(a));
  }
  QVec acc(n, Rat(0));
  for (const Aug& e : ech) {
    size_t p = 0;
    while (p < e.coord.size() && e.coord[p] == 0) ++p;
    if (p < target.size() && target[p] != 0) {
      Rat f = target[p] / e.coord[p];
      for (size_t k = 0; k < target.size(); ++k)
        target[k] -= f * e.coord[k];
      for (size_t k = 0; k < n; ++k) acc[k] += f * e.tag[k];
    }
  }
  if (!qvec_zero(target))
    throw AlgebraError("class leaves the span of the designated lifts");
  return acc;
}

QVec PrimitiveQuotient::coords(Workspace& ws, const Element& y) const {
  return solve_over_lifts(raw_class(ws, y));
}

QMat PrimitiveQuotient::tensor_class(Workspace& ws, const Tensor& t) const {
  if (t.arity() != 2) throw AlgebraError("tensor arity must be 2");
  // slot-1 decomposition over lattice rows, with element-valued fibers
  std::map<int, Element> cur;
  for (const auto& [slots, c] : t.terms()) {
    Element& f = cur[ws.interner().id(slots[0])];
    if (f.pres() == nullptr) f = Element(t.pres());
    f.add_term(slots[1], c);
  }
  const auto& rows = A_->rows();
  std::vector<std::pair<size_t, Element>> slot1;
  for (size_t i = 0; i < rows.size(); ++i) {
    auto it = cur.find(rows[i].pivot);
    if (it == cur.end()) continue;
    Element mu = it->second.scaled(rows[i].v.at(rows[i].pivot).inverse());
    cur.erase(it);
    for (const auto& [col, rc] : rows[i].v) {
      if (col == rows[i].pivot) continue;
      Element& dst = cur[col];
      if (dst.pres() == nullptr) dst = Element(t.pres());
      dst -= mu.scaled(rc);
      if (dst.is_zero()) cur.erase(col);
    }
    if (!mu.is_zero()) slot1.emplace_back(i, std::move(mu));
  }
  for (auto& [col, rest] : cur)
    if (!rest.is_zero())
      throw AlgebraError("tensor leaves the lattice slice span");
  // second slot: integral coordinates, evaluated at q = 1
  std::map<std::pair<size_t, size_t>, Rat> coords;
  for (auto& [i, fiber] : slot1) {
    std::vector<Scalar> mu;
    if (!A_->contains(ws.vec(fiber), &mu))
      throw AlgebraError("Pole: tensor is not integral over the lattice");
    for (size_t j = 0; j < mu.size(); ++j) {
      if (mu[j].is_zero()) continue;
      Rat value = mu[j].eval_q1();
      if (value != 0) coords[{i, j}] += value;
    }
  }
  // project both slots onto the designated directions
  int n = dim();
  std::vector<QVec> proj(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    Element rowel = ws.elem(rows[i].v);
    proj[i] = solve_over_lifts(raw_class(ws, rowel));
  }
  QMat out(static_cast<size_t>(n), QVec(static_cast<size_t>(n), Rat(0)));
  for (const auto& [ij, c] : coords) {
    const QVec& pa = proj[ij.first];
    const QVec& pb = proj[ij.second];
    for (int a = 0; a < n; ++a) {
      if (pa[static_cast<size_t>(a)] == 0) continue;
      for (int b = 0; b < n; ++b)
        out[static_cast<size_t>(a)][static_cast<size_t>(b)] +=
            c * pa[static_cast<size_t>(a)] * pb[static_cast<size_t>(b)];
    }
  }
  return out;
}

QMat cobracket_matrix(Workspace& ws, const PrimitiveQuotient& pq,
                      const Element& lift) {
  Tensor t = nabla(lift).mul_q1_power(-1);
  return pq.tensor_class(ws, t);
}

// ---------------------------------------------------------------------------

VeeBialgebra::VeeBialgebra(Workspace& ws, int budget) {
  const Presentation* p = ws.pres();
  SemiclassicalMap sm;
  sm.quantum = p;
  sm.form = HostForm::vee;
  sm.budget = budget;
  std::vector<std::string> cand_labels;
  std::vector<Element> cands;
  for (int g = 0; g < p->generator_count(); ++g) {
    cands.push_back(Element::generator(p, g).shifted().mul_q1_power(-1));
    cand_labels.push_back(p->generator_name(g));
  }
  PrimitiveQuotient probe(ws, sm);  // no designated lifts: raw classes only
  QMat accepted_rows;
  for (size_t i = 0; i < cands.size(); ++i) {
    QVec cls = probe.raw_class(ws, cands[i]);
    QMat test = accepted_rows;
    test.push_back(cls);
    QMat red = rref(test);
    if (red.size() > accepted_rows.size()) {
      accepted_rows = std::move(red);
      sm.lifts.push_back(cands[i]);
      sm.labels.push_back(cand_labels[i]);
    } else {
      dropped_.push_back(cand_labels[i]);
    }
  }
  pq_ = std::make_unique<PrimitiveQuotient>(ws, sm);
  int n = static_cast<int>(sm.lifts.size());
  g_.name = p->name + "_vee_bialgebra";
  g_.basis = sm.labels;
  g_.bracket.assign(static_cast<size_t>(n),
                    std::vector<QVec>(static_cast<size_t>(n),
                                      QVec(static_cast<size_t>(n), Rat(0))));
  g_.cobracket.assign(
      static_cast<size_t>(n),
      QMat(static_cast<size_t>(n), QVec(static_cast<size_t>(n), Rat(0))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Element comm =
          sm.lifts[static_cast<size_t>(i)] * sm.lifts[static_cast<size_t>(j)] -
          sm.lifts[static_cast<size_t>(j)] * sm.lifts[static_cast<size_t>(i)];
      g_.bracket[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          pq_->coords(ws, comm);
    }
  for (int k = 0; k < n; ++k)
    g_.cobracket[static_cast<size_t>(k)] =
        cobracket_matrix(ws, *pq_, sm.lifts[static_cast<size_t>(k)]);
}

}  // namespace qdp
