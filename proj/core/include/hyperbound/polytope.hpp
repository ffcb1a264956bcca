#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hyperbound/rational.hpp"

namespace hyperbound {

using Vector = std::vector<Rational>;

// Convex hull of a finite set of rational points in Q^d, 1 <= d <= 6.
// The hull may be lower dimensional or empty.
class Polytope {
 public:
  // Inequality a0 + <a, x> >= 0 in the coordinates of the affine hull.
  struct Facet {
    Vector normal;
    Rational offset;
    std::vector<std::size_t> vertices;  // indices into vertices()
  };

  explicit Polytope(std::size_t ambient_dim = 1);

  static Polytope hull(std::size_t ambient_dim, std::vector<Vector> points);

  std::size_t ambient_dim() const { return dim_; }
  // -1 when empty.
  int affine_dim() const { return static_cast<int>(pivots_.size()) - (empty() ? 1 : 0); }
  bool empty() const { return vertices_.empty(); }
  bool full_dimensional() const { return !empty() && pivots_.size() == dim_; }

  // Sorted lexicographically.
  const std::vector<Vector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(const Vector& x) const;
  // Vertex-index simplices of a pulling triangulation (full-dimensional only).
  std::vector<std::vector<std::size_t>> triangulation() const;

  Polytope translate(const Vector& shift) const;
  Polytope scale(const Rational& factor) const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  std::vector<Rational> project(const Vector& x) const;

  std::size_t dim_;
  std::vector<Vector> vertices_;
  // Affine hull: base point plus reduced row-echelon direction basis whose
  // pivot columns give injective coordinates on the hull.
  Vector base_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<Facet> facets_;
};

// Nonempty point list with consistent dimension; throws InputError otherwise.
Polytope convex_hull(const std::vector<Vector>& points);

Polytope minkowski_sum(const Polytope& a, const Polytope& b);

// d-dimensional volume; 0 for lower-dimensional hulls.
Rational volume(const Polytope& p);

// Mixed volume of d polytopes in Q^d, normalized so MV(Z, ..., Z) = d! Vol(Z).
Rational mixed_volume(const std::vector<Polytope>& polytopes);

std::string to_string(const Vector& v);

}  // namespace hyperbound
