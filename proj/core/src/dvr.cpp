#include "qdp/dvr.hpp"

#include <algorithm>
#include <limits>

namespace qdp {

int val_or_large(const Scalar& s) {
  auto v = s.val_q1();
  return v ? *v : std::numeric_limits<int>::max() / 2;
}

void Echelon::build() {
  if (pending_.empty()) return;
  // Re-echelonize from scratch: row operations must stay invertible over the
  // local ring, which global minimum-valuation pivoting guarantees only for
  // a full batch.
  for (const Row& r : rows_) pending_.push_back(r.v);
  rows_.clear();
  std::vector<Vec> work;
  work.reserve(pending_.size());
  for (Vec& r : pending_)
    if (!r.empty()) work.push_back(std::move(r));
  pending_.clear();

  while (!work.empty()) {
    size_t best_row = 0;
    int best_col = -1;
    int best_val = std::numeric_limits<int>::max();
    for (size_t i = 0; i < work.size(); ++i)
      for (const auto& [col, c] : work[i]) {
        int v = val_or_large(c);
        if (v < best_val ||
            (v == best_val && (best_col < 0 || col < best_col))) {
          best_val = v;
          best_col = col;
          best_row = i;
        }
      }
    Row piv;
    piv.v = std::move(work[best_row]);
    piv.pivot = best_col;
    piv.pivot_val = best_val;
    work.erase(work.begin() + static_cast<long>(best_row));
    const Scalar& pc = piv.v.at(best_col);
    std::vector<Vec> nwork;
    nwork.reserve(work.size());
    for (Vec& r : work) {
      auto it = r.find(best_col);
      if (it != r.end()) {
        Scalar mu = it->second / pc;  // val(mu) >= 0 by pivot minimality
        vec_add(r, piv.v, -mu);
      }
      if (!r.empty()) nwork.push_back(std::move(r));
    }
    work = std::move(nwork);
    rows_.push_back(std::move(piv));
  }
}

std::vector<int> Echelon::divisors() const {
  std::vector<int> d;
  d.reserve(rows_.size());
  for (const Row& r : rows_) d.push_back(r.pivot_val);
  std::sort(d.begin(), d.end());
  return d;
}

bool Echelon::contains(Vec x, std::vector<Scalar>* coeffs) const {
  if (coeffs) coeffs->assign(rows_.size(), Scalar(0));
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Row& e = rows_[i];
    auto it = x.find(e.pivot);
    if (it == x.end()) continue;
    Scalar mu = it->second / e.v.at(e.pivot);
    int v = val_or_large(mu);
    if (v < 0) return false;
    if (coeffs) (*coeffs)[i] = mu;
    vec_add(x, e.v, -mu);
  }
  return x.empty();
}

void Echelon::solve(Vec x, std::vector<Scalar>* mu, Vec* residual) const {
  if (mu) mu->assign(rows_.size(), Scalar(0));
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Row& e = rows_[i];
    auto it = x.find(e.pivot);
    if (it == x.end()) continue;
    Scalar m = it->second / e.v.at(e.pivot);
    if (mu) (*mu)[i] = m;
    vec_add(x, e.v, -m);
  }
  if (residual) *residual = std::move(x);
}

std::vector<std::vector<Scalar>> field_kernel(const std::vector<Vec>& columns) {
  // Row i of the working matrix is columns[i] augmented with the i-th unit
  // tag; rows whose coordinate part eliminates to zero yield kernel vectors.
  struct AugRow {
    Vec coord;
    std::vector<Scalar> tag;
  };
  size_t n = columns.size();
  std::vector<AugRow> rows(n);
  for (size_t i = 0; i < n; ++i) {
    rows[i].coord = columns[i];
    rows[i].tag.assign(n, Scalar(0));
    rows[i].tag[i] = Scalar(1);
  }
  std::vector<std::vector<Scalar>> kernel;
  std::vector<AugRow> echelon;
  for (AugRow& r : rows) {
    for (const AugRow& e : echelon) {
      int p = e.coord.begin()->first;
      auto it = r.coord.find(p);
      if (it == r.coord.end()) continue;
      Scalar mu = it->second / e.coord.begin()->second;
      vec_add(r.coord, e.coord, -mu);
      for (size_t k = 0; k < n; ++k) r.tag[k] -= mu * e.tag[k];
    }
    if (r.coord.empty()) {
      kernel.push_back(std::move(r.tag));
    } else {
      echelon.push_back(std::move(r));
    }
  }
  return kernel;
}

}  // namespace qdp
