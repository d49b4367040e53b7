#include "cpsurf/census.hpp"

#include <map>

namespace cpsurf {

TypeCensus distinct_types(std::span<const Part> parts, std::int64_t k) {
  TypeCensus census;
  census.k = k;
  struct Entry {
    std::size_t class_index;
    Complex complex;
  };
  std::map<ComplexSignature, std::vector<Entry>> buckets;
  for (const Part& part : parts) {
    Complex c = part.complex();
    auto& bucket = buckets[signature(c)];
    bool found = false;
    for (const Entry& e : bucket) {
      if (is_isomorphic(e.complex, c)) {
        ++census.classes[e.class_index].multiplicity;
        found = true;
        break;
      }
    }
    if (!found) {
      bucket.push_back({census.classes.size(), std::move(c)});
      census.classes.push_back({part, 1});
    }
  }
  census.total_types = static_cast<std::int64_t>(census.classes.size());
  return census;
}

std::vector<Part> cst_torus_parts(std::int64_t k) {
  std::vector<Part> tori;
  for (Part& part : decompose_beta(k).parts) {
    const SurfaceReport r = classify_surface(part.complex());
    if (r.component_count == 1 && r.closed && r.orientable && r.euler == 0 &&
        r.vertex_count == 2 * k) {
      tori.push_back(std::move(part));
    }
  }
  return tori;
}

std::int64_t count_cst_torus_types(std::int64_t k) {
  const auto tori = cst_torus_parts(k);
  return distinct_types(tori, k).total_types;
}

}  // namespace cpsurf
