#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpsurf/complex.hpp"
#include "cpsurf/cycles.hpp"

namespace cpsurf {

enum class Ambient { kCrossPolytope, kSimplex };

std::string_view to_string(Ambient ambient);  // "beta" / "simplex"

// Which closed-form family a part belongs to; drives predict_type.
enum class Series {
  kUnknown,
  // {(l:j:2k-l-j), (l:2k-l-j:j)} in the cross polytope.
  kCrossTorus,
  // {(l:l:2(k-l)), (k-l:k-l:2l)} in the cross polytope.
  kCrossPair,
  // {(l:l:k-2l)} on k vertices.
  kStrip,
  // {(l:j:k-l-j), (l:k-l-j:j)} on k vertices, k odd.
  kSimplexTorus,
};

struct Part {
  std::vector<DifferenceCycle> cycles;  // sorted, canonical
  std::int64_t modulus = 0;
  Series series = Series::kUnknown;
  // Construction parameters (l, j); j is 0 for the single-parameter series.
  std::int64_t l = 0;
  std::int64_t j = 0;
  // Half the modulus for the cross polytope, the modulus for the simplex.
  std::int64_t k = 0;
  SurfaceType predicted_type;
  std::int64_t predicted_components = 1;

  Complex complex() const { return from_cycles(cycles, modulus); }
  std::int64_t triangle_count() const;
};

struct Decomposition {
  Ambient ambient = Ambient::kCrossPolytope;
  std::int64_t k = 0;
  std::vector<Part> parts;  // sorted by cycle list

  std::int64_t vertex_count() const {
    return ambient == Ambient::kCrossPolytope ? 2 * k : k;
  }
};

// Closed-form type of a part; never builds the complex.
// Throws Error{kUnknownSeries} for parts without a recorded series.
SurfaceType predict_type(const Part& part);

// Cycles whose expansions make up the 2-skeleton of the k-dimensional cross
// polytope on labels 0..2k-1 with diagonals {i, k+i}. Throws kKTooSmall.
std::vector<DifferenceCycle> beta_skeleton_cycles(std::int64_t k);

// Pairs up beta_skeleton_cycles(k) into vertex transitive closed surfaces.
// Throws kKTooSmall (k < 3) or kKTooLarge (k > kMaxK).
Decomposition decompose_beta(std::int64_t k);

// Splits all triangles on k vertices into strip and torus families.
// Throws kKTooSmall, kBadResidue unless k mod 6 is 1 or 5, or kKTooLarge.
Decomposition decompose_simplex(std::int64_t k);

// M_{l,k} = {(l:l:k-2l)}: gcd(l,k) Moebius strips (k/gcd odd) or cylinders
// (k/gcd even). Requires k >= 5, 3 does not divide k, 4 does not divide k and
// 1 <= l <= (k-1)/2; throws kKTooSmall / kBadResidue otherwise.
Part moebius_family(std::int64_t l, std::int64_t k);

// The cross polytope parts, exposed for tests and benchmarks.
Part cross_torus_part(std::int64_t l, std::int64_t j, std::int64_t k);
Part cross_pair_part(std::int64_t l, std::int64_t k);
Part simplex_torus_part(std::int64_t l, std::int64_t j, std::int64_t k);

// C(2k,3) - k(2k-2).
std::int64_t skel2_size_beta(std::int64_t k);

// All triangles of the ambient 2-skeleton, enumerated directly from vertex
// triples (diagonal-free triples for the cross polytope). Sorted.
std::vector<Simplex> ambient_triangles(Ambient ambient, std::int64_t k);

struct CountCheck {
  std::string name;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
  bool pass() const { return expected == actual; }
};

struct PartCheck {
  std::vector<DifferenceCycle> cycles;
  SurfaceType predicted;
  std::int64_t predicted_components = 0;
  std::optional<SurfaceReport> computed;  // empty when classification threw
  std::string error;
  bool structure_ok = true;  // series-specific structural checks
  std::string structure_note;

  bool pass() const {
    return computed && structure_ok && computed->type == predicted &&
           computed->component_count == predicted_components;
  }
};

struct VerificationReport {
  Ambient ambient = Ambient::kCrossPolytope;
  std::int64_t k = 0;
  bool disjoint = false;
  bool covered = false;
  std::int64_t triangle_total = 0;
  std::vector<PartCheck> parts;
  std::vector<CountCheck> count_checks;

  bool passed() const;
};

// Recomputes everything about `d` from the expanded complexes: disjointness,
// coverage of the ambient skeleton, each part's topology against its
// prediction, and the global surface counts. Never throws on a failed check.
VerificationReport verify(const Decomposition& d);

}  // namespace cpsurf
