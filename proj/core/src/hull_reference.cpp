#include "hyperbound/hull_reference.hpp"

#include <algorithm>

#include "hyperbound/error.hpp"

namespace hyperbound {

namespace {

Rational cross(const Vector& o, const Vector& a, const Vector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Rational dist2(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

std::vector<Vector> wrap_2d(const std::vector<Vector>& pts) {
  if (pts.size() <= 2) return pts;
  bool collinear = true;
  for (std::size_t i = 2; i < pts.size() && collinear; ++i) collinear = cross(pts[0], pts[1], pts[i]) == 0;
  if (collinear) return {pts.front(), pts.back()};

  std::vector<Vector> hull;
  std::size_t current = 0;  // lexicographic minimum is a vertex
  do {
    hull.push_back(pts[current]);
    std::size_t next = current == 0 ? 1 : 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i == current) continue;
      const Rational c = cross(pts[current], pts[next], pts[i]);
      // Keep the most clockwise candidate; on collinear ties keep the farthest.
      if (c < 0 || (c == 0 && dist2(pts[current], pts[i]) > dist2(pts[current], pts[next]))) next = i;
    }
    current = next;
  } while (current != 0);
  return hull;
}

// Solves for barycentric coordinates of x with respect to the affinely
// independent points s; returns false if x is outside aff(s) or some
// coordinate is negative.
bool in_simplex(const Vector& x, const std::vector<const Vector*>& s) {
  const std::size_t d = x.size();
  const std::size_t k = s.size() - 1;
  // Columns: s_i - s_0 for i >= 1; augmented with x - s_0.
  std::vector<Vector> m(d, Vector(k + 1));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < k; ++c) m[r][c] = (*s[c + 1])[r] - (*s[0])[r];
    m[r][k] = x[r] - (*s[0])[r];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t sel = row;
    while (sel < d && m[sel][c] == 0) ++sel;
    if (sel == d) return false;  // dependent
    std::swap(m[row], m[sel]);
    const Rational lead = m[row][c];
    for (auto& v : m[row]) v /= lead;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = 0; j <= k; ++j) m[r][j] -= f * m[row][j];
    }
    ++row;
  }
  for (std::size_t r = k; r < d; ++r) {
    if (m[r][k] != 0) return false;
  }
  Rational sum = 0;
  for (std::size_t r = 0; r < k; ++r) {
    if (m[r][k] < 0) return false;
    sum += m[r][k];
  }
  return sum <= 1;
}

bool in_hull_of_others(std::size_t i, const std::vector<Vector>& pts) {
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (j != i) others.push_back(j);
  }
  const std::size_t n = others.size();
  std::vector<const Vector*> s;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      s = {&pts[others[a]], &pts[others[b]]};
      if (in_simplex(pts[i], s)) return true;
      for (std::size_t c = b + 1; c < n; ++c) {
        s = {&pts[others[a]], &pts[others[b]], &pts[others[c]]};
        if (in_simplex(pts[i], s)) return true;
        for (std::size_t e = c + 1; e < n; ++e) {
          s = {&pts[others[a]], &pts[others[b]], &pts[others[c]], &pts[others[e]]};
          if (in_simplex(pts[i], s)) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

std::vector<Vector> reference_hull_vertices(std::vector<Vector> points) {
  if (points.empty()) return {};
  const std::size_t d = points[0].size();
  if (d < 1 || d > 3) throw InputError("reference hull supports dimensions 1 to 3");
  for (const auto& p : points) {
    if (p.size() != d) throw InputError("point dimension mismatch");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<Vector> out;
  if (d == 1) {
    out = {points.front()};
    if (points.size() > 1) out.push_back(points.back());
  } else if (d == 2) {
    out = wrap_2d(points);
  } else {
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!in_hull_of_others(i, points)) out.push_back(points[i]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hyperbound
