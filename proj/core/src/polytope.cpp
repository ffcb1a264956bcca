#include "hyperbound/polytope.hpp"

#include <algorithm>
#include <numeric>

#include "hyperbound/error.hpp"

namespace hyperbound {

namespace {

using Matrix = std::vector<Vector>;

Rational dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Reduced row-echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational lead = m[row][c];
    for (auto& x : m[row]) x /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = 0; j < m[r].size(); ++j) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m[sel][c] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      std::swap(m[sel], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

// Inverse of a nonsingular square matrix by Gauss-Jordan.
Matrix inverse(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix aug(n, Vector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  rref(aug, n);
  Matrix inv(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  }
  return inv;
}

// Scales a nonzero vector to a primitive integer vector in the same direction.
void make_primitive(Vector& v) {
  Integer den = 1, num = 0;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  for (auto& x : v) {
    x *= den;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
  }
  if (num > 1) {
    for (auto& x : v) x /= num;
  }
}

using ZeroSet = std::vector<char>;

bool subset(const ZeroSet& a, const ZeroSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

struct Ray {
  Vector a;
  ZeroSet zeros;
};

// Extreme rays of {a : <r_i, a> >= 0} for rows spanning Q^{k+1}, by the
// double description method.
std::vector<Vector> extreme_rays(const Matrix& rows) {
  const std::size_t n = rows.size();
  const std::size_t dim = rows[0].size();

  std::vector<std::size_t> order;
  Matrix basis;
  for (std::size_t i = 0; i < n && order.size() < dim; ++i) {
    Matrix trial = basis;
    trial.push_back(rows[i]);
    const std::size_t want = trial.size();
    if (rref(trial, dim).size() == want) {
      basis.push_back(rows[i]);
      order.push_back(i);
    }
  }
  if (order.size() != dim) throw std::logic_error("extreme_rays: rows do not span");

  Matrix a0;
  for (auto i : order) a0.push_back(rows[i]);
  const Matrix inv = inverse(a0);
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    Ray ray{Vector(dim), ZeroSet(n, 0)};
    for (std::size_t i = 0; i < dim; ++i) ray.a[i] = inv[i][j];
    make_primitive(ray.a);
    for (std::size_t i = 0; i < dim; ++i) {
      if (i != j) ray.zeros[order[i]] = 1;
    }
    rays.push_back(std::move(ray));
  }

  std::vector<char> seeded(n, 0);
  for (auto i : order) seeded[i] = 1;
  const std::size_t need = dim - 2;

  for (std::size_t r = 0; r < n; ++r) {
    if (seeded[r]) continue;
    std::vector<int> sign(rays.size());
    std::vector<Rational> value(rays.size());
    bool any_negative = false;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      value[j] = dot(rows[r], rays[j].a);
      sign[j] = sgn(value[j]);
      any_negative = any_negative || sign[j] < 0;
    }
    if (!any_negative) {
      for (std::size_t j = 0; j < rays.size(); ++j) {
        if (sign[j] == 0) rays[j].zeros[r] = 1;
      }
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      if (sign[j] <= 0) continue;
      for (std::size_t l = 0; l < rays.size(); ++l) {
        if (sign[l] >= 0) continue;
        ZeroSet common(n, 0);
        std::size_t count = 0;
        for (std::size_t i = 0; i < n; ++i) {
          common[i] = rays[j].zeros[i] && rays[l].zeros[i];
          count += common[i] ? 1 : 0;
        }
        if (count < need) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o != j && o != l && subset(common, rays[o].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray ray{Vector(dim), std::move(common)};
        for (std::size_t i = 0; i < dim; ++i) ray.a[i] = value[j] * rays[l].a[i] - value[l] * rays[j].a[i];
        make_primitive(ray.a);
        ray.zeros[r] = 1;
        next.push_back(std::move(ray));
      }
    }
    for (std::size_t j = 0; j < rays.size(); ++j) {
      if (sign[j] < 0) continue;
      if (sign[j] == 0) rays[j].zeros[r] = 1;
      next.push_back(std::move(rays[j]));
    }
    rays = std::move(next);
  }

  std::vector<Vector> out;
  for (auto& ray : rays) out.push_back(std::move(ray.a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_dim(std::size_t dim, const Vector& v) {
  if (v.size() != dim) throw InputError("point dimension mismatch: expected " + std::to_string(dim));
}

}  // namespace

Polytope::Polytope(std::size_t ambient_dim) : dim_(ambient_dim) {
  if (ambient_dim < 1) throw InputError("ambient dimension must be positive");
}

Polytope Polytope::hull(std::size_t ambient_dim, std::vector<Vector> points) {
  Polytope out(ambient_dim);
  for (const auto& p : points) check_dim(ambient_dim, p);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) return out;

  out.base_ = points[0];
  Matrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    Vector d(ambient_dim);
    for (std::size_t j = 0; j < ambient_dim; ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  out.pivots_ = rref(diffs, ambient_dim);
  out.basis_ = std::move(diffs);
  const std::size_t k = out.pivots_.size();
  if (k == 0) {
    out.vertices_ = {points[0]};
    return out;
  }

  Matrix rows;
  for (const auto& p : points) {
    Vector r{Rational(1)};
    for (auto c : out.project(p)) r.push_back(c);
    rows.push_back(std::move(r));
  }
  const auto rays = extreme_rays(rows);

  const std::size_t n = points.size();
  std::vector<ZeroSet> incidence(n, ZeroSet(rays.size(), 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t f = 0; f < rays.size(); ++f) incidence[i][f] = dot(rows[i], rays[f]) == 0;
  }
  std::vector<std::size_t> index(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    bool vertex = true;
    for (std::size_t j = 0; j < n && vertex; ++j) {
      if (j != i && subset(incidence[i], incidence[j])) vertex = false;
    }
    if (vertex) {
      index[i] = out.vertices_.size();
      out.vertices_.push_back(points[i]);
    }
  }
  for (std::size_t f = 0; f < rays.size(); ++f) {
    Facet facet{Vector(rays[f].begin() + 1, rays[f].end()), rays[f][0], {}};
    for (std::size_t i = 0; i < n; ++i) {
      if (index[i] < n && incidence[i][f]) facet.vertices.push_back(index[i]);
    }
    out.facets_.push_back(std::move(facet));
  }
  return out;
}

std::vector<Rational> Polytope::project(const Vector& x) const {
  std::vector<Rational> out;
  for (auto c : pivots_) out.push_back(x[c]);
  return out;
}

bool Polytope::contains(const Vector& x) const {
  check_dim(dim_, x);
  if (empty()) return false;
  Vector y(dim_);
  for (std::size_t j = 0; j < dim_; ++j) y[j] = x[j] - base_[j];
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = y[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) y[j] -= f * basis_[i][j];
  }
  for (const auto& c : y) {
    if (c != 0) return false;
  }
  const auto px = project(x);
  for (const auto& facet : facets_) {
    if (facet.offset + dot(facet.normal, px) < 0) return false;
  }
  return true;
}

namespace {

using IndexSet = std::vector<std::size_t>;

// Pulling triangulation of the face with vertex set `face`: cone from its
// smallest vertex over every facet of the face that misses it.
void pull(const IndexSet& face, std::size_t face_dim, const std::vector<IndexSet>& facets,
          IndexSet& prefix, std::vector<IndexSet>& out) {
  if (face_dim == 0) {
    prefix.push_back(face[0]);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  std::vector<IndexSet> cuts;
  for (const auto& facet : facets) {
    IndexSet cut;
    std::set_intersection(face.begin(), face.end(), facet.begin(), facet.end(), std::back_inserter(cut));
    if (!cut.empty() && cut.size() < face.size()) cuts.push_back(std::move(cut));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  const std::size_t apex = face[0];
  prefix.push_back(apex);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cuts.size() && maximal; ++j) {
      if (i != j && cuts[j].size() > cuts[i].size() &&
          std::includes(cuts[j].begin(), cuts[j].end(), cuts[i].begin(), cuts[i].end())) {
        maximal = false;
      }
    }
    if (!maximal || std::binary_search(cuts[i].begin(), cuts[i].end(), apex)) continue;
    pull(cuts[i], face_dim - 1, facets, prefix, out);
  }
  prefix.pop_back();
}

}  // namespace

std::vector<std::vector<std::size_t>> Polytope::triangulation() const {
  if (!full_dimensional()) return {};
  std::vector<IndexSet> facets;
  for (const auto& f : facets_) facets.push_back(f.vertices);
  IndexSet all(vertices_.size());
  std::iota(all.begin(), all.end(), 0);
  IndexSet prefix;
  std::vector<IndexSet> out;
  pull(all, dim_, facets, prefix, out);
  return out;
}

Polytope Polytope::translate(const Vector& shift) const {
  check_dim(dim_, shift);
  std::vector<Vector> pts = vertices_;
  for (auto& p : pts) {
    for (std::size_t j = 0; j < dim_; ++j) p[j] += shift[j];
  }
  return hull(dim_, std::move(pts));
}

Polytope Polytope::scale(const Rational& factor) const {
  std::vector<Vector> pts = vertices_;
  for (auto& p : pts) {
    for (auto& c : p) c *= factor;
  }
  return hull(dim_, std::move(pts));
}

Polytope convex_hull(const std::vector<Vector>& points) {
  if (points.empty()) throw InputError("convex hull of an empty point set");
  const std::size_t dim = points[0].size();
  if (dim < 1 || dim > 6) throw InputError("ambient dimension must be between 1 and 6");
  return Polytope::hull(dim, points);
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("Minkowski sum of polytopes of different dimension");
  std::vector<Vector> pts;
  for (const auto& u : a.vertices()) {
    for (const auto& v : b.vertices()) {
      Vector s(u.size());
      for (std::size_t j = 0; j < u.size(); ++j) s[j] = u[j] + v[j];
      pts.push_back(std::move(s));
    }
  }
  return Polytope::hull(a.ambient_dim(), std::move(pts));
}

Rational volume(const Polytope& p) {
  if (!p.full_dimensional()) return 0;
  const std::size_t d = p.ambient_dim();
  const auto& v = p.vertices();
  Rational total = 0;
  for (const auto& simplex : p.triangulation()) {
    Matrix m;
    for (std::size_t i = 1; i <= d; ++i) {
      Vector row(d);
      for (std::size_t j = 0; j < d; ++j) row[j] = v[simplex[i]][j] - v[simplex[0]][j];
      m.push_back(std::move(row));
    }
    total += abs(determinant(std::move(m)));
  }
  Integer fact = 1;
  for (std::size_t i = 2; i <= d; ++i) fact *= static_cast<unsigned long>(i);
  return total / Rational(fact);
}

Rational mixed_volume(const std::vector<Polytope>& polytopes) {
  const std::size_t d = polytopes.size();
  if (d < 1 || d > 6) throw InputError("mixed volume needs between 1 and 6 polytopes");
  for (const auto& p : polytopes) {
    if (p.ambient_dim() != d) throw InputError("mixed volume needs d polytopes in dimension d");
  }
  for (const auto& p : polytopes) {
    if (p.empty()) return 0;
  }
  std::vector<Polytope> sums(std::size_t{1} << d, Polytope(d));
  Rational total = 0;
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    const std::size_t rest = mask & (mask - 1);
    sums[mask] = rest == 0 ? polytopes[low] : minkowski_sum(sums[rest], polytopes[low]);
    const int size = __builtin_popcountll(mask);
    const Rational vol = volume(sums[mask]);
    if ((d - static_cast<std::size_t>(size)) % 2 == 0) {
      total += vol;
    } else {
      total -= vol;
    }
  }
  return total;
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

}  // namespace hyperbound
