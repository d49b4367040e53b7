#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cpsurf/cycles.hpp"

namespace cpsurf {

// A finite simplicial complex given by its facets on the labels
// [0, n_vertices). Facets are stored sorted; no facet is a face of another.
// Vertices that lie in no facet are allowed and ignored by every query.
class Complex {
 public:
  Complex() = default;
  // Throws kVertexOutOfRange or kDuplicateFacet (also for a facet that is a
  // proper face of another one).
  Complex(std::int64_t n_vertices, std::vector<Simplex> facets);

  std::int64_t n_vertices() const noexcept { return n_vertices_; }
  const std::vector<Simplex>& facets() const noexcept { return facets_; }
  std::size_t facet_count() const noexcept { return facets_.size(); }
  bool empty() const noexcept { return facets_.empty(); }

  // Sorted labels incident to at least one facet.
  std::vector<Vertex> used_vertices() const;
  bool is_pure(std::size_t dimension) const noexcept;

  // Distinct edges of the 1-skeleton, sorted.
  std::vector<Simplex> edges() const;

  // Image under v -> map[v]; `map` must be injective on used vertices and
  // land in [0, n_vertices).
  Complex relabeled(std::span<const Vertex> map,
                    std::int64_t n_vertices) const;

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  std::int64_t n_vertices_ = 0;
  std::vector<Simplex> facets_;
};

std::ostream& operator<<(std::ostream& os, const Complex& c);

// Union of the expansions of `cycles`. Throws kMixedModulus.
Complex from_cycles(std::span<const DifferenceCycle> cycles, std::int64_t n);

// V - E + F over the vertices actually used. Throws kNotPure2Complex.
std::int64_t euler_characteristic(const Complex& c);

// {sigma \ {v} : v in sigma}. Throws kVertexNotPresent.
Complex vertex_link(const Complex& c, Vertex v);

// Components under facet adjacency through shared vertices, ordered by their
// smallest vertex. Labels are kept.
std::vector<Complex> connected_components(const Complex& c);

// degree -> number of edges lying in exactly that many triangles.
// Throws kNotPure2Complex.
std::map<std::int64_t, std::int64_t> edge_degree_profile(const Complex& c);

// True iff all triangles admit a coherent orientation.
// Throws kNotPure2Complex or kNotPseudomanifold (an edge in > 2 triangles).
bool orientable(const Complex& c);

enum class SurfaceKind {
  kSphere,
  kTorus,
  kKleinBottle,
  kMoebiusStrip,
  kCylinder,
  kOther,
};

std::string_view to_string(SurfaceKind kind);

// Topological type of a surface as `copies` disjoint copies of one connected
// type. `euler` and `orientable` describe a single copy; for the named kinds
// they are implied by `kind`, for kOther they carry the data.
struct SurfaceType {
  SurfaceKind kind = SurfaceKind::kOther;
  std::int64_t copies = 1;
  std::int64_t euler = 0;
  bool orientable = true;
  std::int64_t boundary_circles = 0;

  static SurfaceType named(SurfaceKind kind, std::int64_t copies = 1);

  // "torus", "disjoint_union(moebius_strip,7)", "other(1,false,0)".
  std::string to_string() const;
  // Table-style label: "T^2", "{1,2} x T^2", "{1,...,5} x M^2".
  std::string label() const;

  static SurfaceType parse(std::string_view text);

  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

struct SurfaceReport {
  std::int64_t euler = 0;
  bool orientable = true;
  std::int64_t component_count = 0;
  std::int64_t boundary_circles = 0;
  bool closed = true;
  std::int64_t vertex_count = 0;
  std::int64_t triangle_count = 0;
  SurfaceType type;
};

std::ostream& operator<<(std::ostream& os, const SurfaceReport& r);

// Classifies a pure 2-complex whose vertex links are single cycles or single
// paths. Throws Error{kNotASurface} naming the first offending vertex and its
// link otherwise (kNotPure2Complex for the wrong dimension).
SurfaceReport classify_surface(const Complex& c);

// Cheap isomorphism invariants used to bucket complexes before searching.
struct ComplexSignature {
  std::size_t vertices = 0;
  std::size_t facets = 0;
  std::vector<std::size_t> facet_sizes;
  std::vector<std::pair<std::size_t, std::size_t>> vertex_degrees;

  friend auto operator<=>(const ComplexSignature&,
                          const ComplexSignature&) = default;
};

ComplexSignature signature(const Complex& c);

// Vertex bijection witnessing an isomorphism: witness[v] is the image of the
// used vertex v of the first complex, -1 for unused labels.
using VertexMap = std::vector<Vertex>;

// Searches for a relabeling of the used vertices of `a` that maps its facets
// onto those of `b`. Returns the witness when one exists.
std::optional<VertexMap> find_isomorphism(const Complex& a, const Complex& b);

inline bool is_isomorphic(const Complex& a, const Complex& b) {
  return find_isomorphism(a, b).has_value();
}

// True iff `map` carries the facets of `a` exactly onto the facets of `b`.
bool check_isomorphism(const Complex& a, const Complex& b,
                       std::span<const Vertex> map);

// Facet-list text format: a header "n=<vertices>" followed by one facet per
// line, vertices separated by spaces, sorted within and between lines.
std::string to_facet_list(const Complex& c);
Complex parse_facet_list(std::string_view text);

}  // namespace cpsurf
