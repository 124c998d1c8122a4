#include "qdp/liebialg.hpp"

#include <algorithm>
#include <sstream>

namespace qdp {

QMat rref(QMat rows) {
  size_t rank = 0;
  size_t cols = 0;
  for (const QVec& r : rows) cols = std::max(cols, r.size());
  for (QVec& r : rows) r.resize(cols, Rat(0));
  for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Rat inv = 1 / rows[rank][col];
    for (Rat& c : rows[rank]) c *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rat f = rows[r][col];
      for (size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

bool rref_contains(const QMat& rref_rows, QVec x) {
  for (const QVec& r : rref_rows) {
    size_t p = 0;
    while (p < r.size() && r[p] == 0) ++p;
    if (p == r.size()) continue;
    if (p < x.size() && x[p] != 0) {
      Rat f = x[p];
      for (size_t k = 0; k < std::min(x.size(), r.size()); ++k)
        x[k] -= f * r[k];
    }
  }
  return std::all_of(x.begin(), x.end(), [](const Rat& c) { return c == 0; });
}

int LieBialgebra::index_of(const std::string& label) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == label) return static_cast<int>(i);
  return -1;
}

QVec LieBialgebra::bracket_of(const QVec& x, const QVec& y) const {
  int n = dim();
  QVec out(static_cast<size_t>(n), Rat(0));
  for (int i = 0; i < n; ++i) {
    if (x[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (y[static_cast<size_t>(j)] == 0) continue;
      const QVec& b = bracket[static_cast<size_t>(i)][static_cast<size_t>(j)];
      Rat f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
      for (int k = 0; k < n; ++k) out[static_cast<size_t>(k)] += f * b[static_cast<size_t>(k)];
    }
  }
  return out;
}

QMat LieBialgebra::cobracket_of(const QVec& x) const {
  int n = dim();
  QMat out(static_cast<size_t>(n), QVec(static_cast<size_t>(n), Rat(0)));
  for (int k = 0; k < n; ++k) {
    if (x[static_cast<size_t>(k)] == 0) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
            x[static_cast<size_t>(k)] *
            cobracket[static_cast<size_t>(k)][static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return out;
}

LieBialgebra LieBialgebra::dual() const {
  int n = dim();
  LieBialgebra d;
  d.name = name + "_dual";
  for (const std::string& b : basis) d.basis.push_back(b + "^");
  d.bracket.assign(static_cast<size_t>(n),
                   std::vector<QVec>(static_cast<size_t>(n),
                                     QVec(static_cast<size_t>(n), Rat(0))));
  d.cobracket.assign(static_cast<size_t>(n),
                     QMat(static_cast<size_t>(n),
                          QVec(static_cast<size_t>(n), Rat(0))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // [xi^, xj^] pairs with delta(x_k)
        d.bracket[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] =
            cobracket[static_cast<size_t>(k)][static_cast<size_t>(i)][static_cast<size_t>(j)];
        // delta(xk^) pairs with brackets: coefficient of xi^ (x) xj^
        d.cobracket[static_cast<size_t>(k)][static_cast<size_t>(i)][static_cast<size_t>(j)] =
            bracket[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
      }
  return d;
}

CheckReport LieBialgebra::validate() const {
  CheckReport rep;
  int n = dim();
  auto vec_is_zero = [](const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; });
  };
  // antisymmetry of the bracket and the cobracket matrices
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QVec s = bracket[static_cast<size_t>(i)][static_cast<size_t>(j)];
      const QVec& t = bracket[static_cast<size_t>(j)][static_cast<size_t>(i)];
      for (int k = 0; k < n; ++k) s[static_cast<size_t>(k)] += t[static_cast<size_t>(k)];
      if (!vec_is_zero(s))
        rep.fail("bracket not antisymmetric at (" + basis[static_cast<size_t>(i)] + "," +
                 basis[static_cast<size_t>(j)] + ")");
    }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (cobracket[static_cast<size_t>(k)][static_cast<size_t>(i)][static_cast<size_t>(j)] !=
            -cobracket[static_cast<size_t>(k)][static_cast<size_t>(j)][static_cast<size_t>(i)])
          rep.fail("cobracket not antisymmetric at " + basis[static_cast<size_t>(k)]);
  // Jacobi
  auto unit = [n](int i) {
    QVec v(static_cast<size_t>(n), Rat(0));
    v[static_cast<size_t>(i)] = 1;
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        QVec s = bracket_of(bracket_of(unit(i), unit(j)), unit(k));
        QVec t = bracket_of(bracket_of(unit(j), unit(k)), unit(i));
        QVec u = bracket_of(bracket_of(unit(k), unit(i)), unit(j));
        for (int m = 0; m < n; ++m)
          s[static_cast<size_t>(m)] += t[static_cast<size_t>(m)] + u[static_cast<size_t>(m)];
        if (!vec_is_zero(s))
          rep.fail("Jacobi fails on (" + basis[static_cast<size_t>(i)] + "," +
                   basis[static_cast<size_t>(j)] + "," + basis[static_cast<size_t>(k)] + ")");
      }
  // co-Jacobi: alternating sum of (delta (x) id) delta vanishes
  for (int x = 0; x < n; ++x) {
    std::vector<std::vector<std::vector<Rat>>> T(
        static_cast<size_t>(n),
        QMat(static_cast<size_t>(n), QVec(static_cast<size_t>(n), Rat(0))));
    const QMat& dx = cobracket[static_cast<size_t>(x)];
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (dx[static_cast<size_t>(a)][static_cast<size_t>(b)] == 0) continue;
        const QMat& da = cobracket[static_cast<size_t>(a)];
        for (int u = 0; u < n; ++u)
          for (int w = 0; w < n; ++w)
            T[static_cast<size_t>(u)][static_cast<size_t>(w)][static_cast<size_t>(b)] +=
                dx[static_cast<size_t>(a)][static_cast<size_t>(b)] *
                da[static_cast<size_t>(u)][static_cast<size_t>(w)];
      }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c) {
          Rat s = T[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(c)] +
                  T[static_cast<size_t>(b)][static_cast<size_t>(c)][static_cast<size_t>(a)] +
                  T[static_cast<size_t>(c)][static_cast<size_t>(a)][static_cast<size_t>(b)];
          if (s != 0) ok = false;
        }
    if (!ok) rep.fail("co-Jacobi fails on " + basis[static_cast<size_t>(x)]);
  }
  // 1-cocycle: delta([x,y]) = x.delta(y) - y.delta(x)
  auto act = [&](int x, const QMat& m) {
    QMat out(static_cast<size_t>(n), QVec(static_cast<size_t>(n), Rat(0)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Rat c = m[static_cast<size_t>(a)][static_cast<size_t>(b)];
        if (c == 0) continue;
        const QVec& xa = bracket[static_cast<size_t>(x)][static_cast<size_t>(a)];
        const QVec& xb = bracket[static_cast<size_t>(x)][static_cast<size_t>(b)];
        for (int k = 0; k < n; ++k) {
          out[static_cast<size_t>(k)][static_cast<size_t>(b)] += c * xa[static_cast<size_t>(k)];
          out[static_cast<size_t>(a)][static_cast<size_t>(k)] += c * xb[static_cast<size_t>(k)];
        }
      }
    return out;
  };
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      QVec br = bracket[static_cast<size_t>(x)][static_cast<size_t>(y)];
      QMat lhs = cobracket_of(br);
      QMat r1 = act(x, cobracket[static_cast<size_t>(y)]);
      QMat r2 = act(y, cobracket[static_cast<size_t>(x)]);
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b)
          if (lhs[static_cast<size_t>(a)][static_cast<size_t>(b)] !=
              r1[static_cast<size_t>(a)][static_cast<size_t>(b)] -
                  r2[static_cast<size_t>(a)][static_cast<size_t>(b)])
            ok = false;
      if (!ok)
        rep.fail("cocycle fails on (" + basis[static_cast<size_t>(x)] + "," +
                 basis[static_cast<size_t>(y)] + ")");
    }
  return rep;
}

QVec LieBialgebra::parse_vector(const std::string& expr) const {
  // tiny grammar: sum of [coeff *] label; labels match case-insensitively
  QVec out(static_cast<size_t>(dim()), Rat(0));
  std::string s = expr;
  size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  bool first = true;
  while (true) {
    skip();
    if (i >= s.size()) break;
    Rat sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (!first) {
      throw AlgebraError("expected + or - in vector expression");
    }
    Rat coeff = sign;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) ||
                              s[j] == '/'))
        ++j;
      coeff = sign * Rat(s.substr(i, j - i).c_str());
      i = j;
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip();
      }
    }
    size_t j = i;
    while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                            s[j] == '_' || s[j] == '^'))
      ++j;
    if (j == i) throw AlgebraError("expected basis label in vector expression");
    std::string label = s.substr(i, j - i);
    int idx = index_of(label);
    if (idx < 0) {
      std::string lower = label;
      for (char& ch : lower) ch = static_cast<char>(std::tolower(
          static_cast<unsigned char>(ch)));
      idx = index_of(lower);
    }
    if (idx < 0) throw AlgebraError("unknown basis label: " + label);
    out[static_cast<size_t>(idx)] += coeff;
    i = j;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------

LieSubspace span_of(const QMat& vectors) { return LieSubspace{rref(vectors)}; }

LieSubspace subspace_sum(const LieSubspace& a, const LieSubspace& b) {
  QMat rows = a.rows;
  rows.insert(rows.end(), b.rows.begin(), b.rows.end());
  return span_of(rows);
}

LieSubspace orthogonal(const LieSubspace& k, int ambient_dim) {
  size_t n = static_cast<size_t>(ambient_dim);
  QMat cols;
  for (size_t j = 0; j < n; ++j) {
    QVec col(k.rows.size(), Rat(0));
    for (size_t r = 0; r < k.rows.size(); ++r)
      if (j < k.rows[r].size()) col[r] = k.rows[r][j];
    cols.push_back(std::move(col));
  }
  // kernel of the pairing matrix: lambda with sum_j lambda_j k_r[j] = 0
  QMat rows;
  // Gaussian elimination on the transpose with identity tags
  struct Aug {
    QVec coord, tag;
  };
  std::vector<Aug> work(n);
  for (size_t j = 0; j < n; ++j) {
    work[j].coord = cols[j];
    work[j].tag.assign(n, Rat(0));
    work[j].tag[j] = 1;
  }
  std::vector<Aug> ech;
  for (Aug& w : work) {
    for (const Aug& e : ech) {
      size_t p = 0;
      while (p < e.coord.size() && e.coord[p] == 0) ++p;
      if (p < w.coord.size() && w.coord[p] != 0) {
        Rat f = w.coord[p] / e.coord[p];
        for (size_t t = 0; t < w.coord.size(); ++t)
          w.coord[t] -= f * e.coord[t];
        for (size_t t = 0; t < n; ++t) w.tag[t] -= f * e.tag[t];
      }
    }
    bool zero = std::all_of(w.coord.begin(), w.coord.end(),
                            [](const Rat& c) { return c == 0; });
    if (zero)
      rows.push_back(w.tag);
    else
      ech.push_back(w);
  }
  return span_of(rows);
}

LieSubspace lie_closure(const LieBialgebra& g, const LieSubspace& s) {
  LieSubspace cur = s;
  for (int round = 0; round <= g.dim(); ++round) {
    QMat extra;
    for (const QVec& a : cur.rows)
      for (const QVec& b : cur.rows) {
        QVec br = g.bracket_of(a, b);
        if (!cur.contains(br)) extra.push_back(br);
      }
    if (extra.empty()) return cur;
    QMat rows = cur.rows;
    rows.insert(rows.end(), extra.begin(), extra.end());
    cur = span_of(rows);
  }
  return cur;
}

bool is_subalgebra(const LieBialgebra& g, const LieSubspace& s) {
  for (const QVec& a : s.rows)
    for (const QVec& b : s.rows)
      if (!s.contains(g.bracket_of(a, b))) return false;
  return true;
}

namespace {

/// k wedge g as a subspace of the full tensor square, coordinates (i,j).
QMat wedge_family(const LieSubspace& k, int n) {
  QMat fam;
  for (const QVec& a : k.rows)
    for (int j = 0; j < n; ++j) {
      QVec w(static_cast<size_t>(n) * static_cast<size_t>(n), Rat(0));
      for (int i = 0; i < n; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        w[static_cast<size_t>(i * n + j)] += a[static_cast<size_t>(i)];
        w[static_cast<size_t>(j * n + i)] -= a[static_cast<size_t>(i)];
      }
      fam.push_back(std::move(w));
    }
  return fam;
}

}  // namespace

bool is_coisotropic(const LieBialgebra& g, const LieSubspace& k) {
  if (!is_subalgebra(g, k)) throw AlgebraError("NotSubalgebra");
  int n = g.dim();
  QMat wedge = rref(wedge_family(k, n));
  bool direct = true;
  for (const QVec& a : k.rows) {
    QMat d = g.cobracket_of(a);
    QVec flat(static_cast<size_t>(n) * static_cast<size_t>(n), Rat(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        flat[static_cast<size_t>(i * n + j)] = d[static_cast<size_t>(i)][static_cast<size_t>(j)];
    if (!rref_contains(wedge, flat)) {
      direct = false;
      break;
    }
  }
  // dual criterion: the annihilator is a subalgebra of the dual
  LieBialgebra gd = g.dual();
  bool dual_crit = is_subalgebra(gd, orthogonal(k, n));
  if (direct != dual_crit)
    throw AlgebraError("coisotropy criteria disagree on " + g.name);
  return direct;
}

LieSubspace coisotropic_interior(const LieBialgebra& g, const LieSubspace& k) {
  if (!is_subalgebra(g, k)) throw AlgebraError("NotSubalgebra");
  LieBialgebra gd = g.dual();
  LieSubspace perp = orthogonal(k, g.dim());
  LieSubspace closed = lie_closure(gd, perp);
  return orthogonal(closed, g.dim());
}

LieSubspace complementary_dual(const LieBialgebra& g, const LieSubspace& k) {
  if (!is_coisotropic(g, k)) throw AlgebraError("NotCoisotropic");
  return orthogonal(k, g.dim());
}

}  // namespace qdp
