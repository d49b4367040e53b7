#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cpsurf/decomp.hpp"

namespace cpsurf {

struct TypeClass {
  Part representative;  // first part of the class in input order
  std::int64_t multiplicity = 0;
};

struct TypeCensus {
  std::int64_t k = 0;
  std::vector<TypeClass> classes;
  std::int64_t total_types = 0;
};

// Groups `parts` into combinatorial isomorphism classes. Parts are compared
// only within buckets of equal signature().
TypeCensus distinct_types(std::span<const Part> parts, std::int64_t k = 0);

// The parts of decompose_beta(k) that the engine classifies as connected
// orientable closed surfaces of Euler characteristic 0 on all 2k vertices.
std::vector<Part> cst_torus_parts(std::int64_t k);

// Number of isomorphism classes among cst_torus_parts(k).
std::int64_t count_cst_torus_types(std::int64_t k);

}  // namespace cpsurf
