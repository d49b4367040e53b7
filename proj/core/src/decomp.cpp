#include "cpsurf/decomp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cpsurf {

namespace {

void require_k_range(std::int64_t k, std::int64_t minimum) {
  if (k < minimum) {
    throw Error(ErrorCode::kKTooSmall,
                "k must be ≥ " + std::to_string(minimum) + ", got " +
                    std::to_string(k));
  }
  if (k > kMaxK) {
    throw Error(ErrorCode::kKTooLarge,
                "k must be ≤ " + std::to_string(kMaxK) + ", got " +
                    std::to_string(k));
  }
}

Part make_part(std::vector<DifferenceCycle> cycles, Series series,
               std::int64_t l, std::int64_t j, std::int64_t k) {
  Part part;
  part.modulus = cycles.front().modulus();
  std::sort(cycles.begin(), cycles.end());
  part.cycles = std::move(cycles);
  part.series = series;
  part.l = l;
  part.j = j;
  part.k = k;
  part.predicted_type = predict_type(part);
  part.predicted_components = part.predicted_type.copies;
  return part;
}

void sort_parts(std::vector<Part>& parts) {
  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    return a.cycles < b.cycles;
  });
}

const Complex& octahedron() {
  static const Complex oct = [] {
    const std::vector<DifferenceCycle> cycles{DifferenceCycle({1, 1, 4}, 6),
                                              DifferenceCycle({2, 2, 2}, 6)};
    return from_cycles(cycles, 6);
  }();
  return oct;
}

bool shift_invariant(const Complex& c, std::int64_t shift) {
  const std::int64_t n = c.n_vertices();
  VertexMap map(static_cast<std::size_t>(n));
  for (std::int64_t v = 0; v < n; ++v) {
    map[static_cast<std::size_t>(v)] = mod(v + shift, n);
  }
  return c.relabeled(map, n) == c;
}

bool closed_pseudomanifold(const Complex& c) {
  const auto profile = edge_degree_profile(c);
  return profile.size() == 1 && profile.begin()->first == 2;
}

}  // namespace

std::string_view to_string(Ambient ambient) {
  return ambient == Ambient::kCrossPolytope ? "beta" : "simplex";
}

std::int64_t Part::triangle_count() const {
  std::int64_t total = 0;
  for (const auto& c : cycles) total += c.orbit_length();
  return total;
}

SurfaceType predict_type(const Part& part) {
  const std::int64_t l = part.l;
  const std::int64_t j = part.j;
  const std::int64_t k = part.k;
  switch (part.series) {
    case Series::kCrossTorus:
      return SurfaceType::named(SurfaceKind::kTorus, gcd(gcd(l, j), 2 * k));
    case Series::kCrossPair: {
      if (k % 3 == 0 && l == k / 3) {
        return SurfaceType::named(SurfaceKind::kSphere, k / 3);
      }
      // gcd(l,k) copies of the series A_6(n') on n' = 2k / gcd(l,k)
      // vertices: a torus when 4 divides n', a Klein bottle otherwise.
      const std::int64_t copies = gcd(l, k);
      const std::int64_t component_vertices = 2 * k / copies;
      return SurfaceType::named(component_vertices % 4 == 0
                                    ? SurfaceKind::kTorus
                                    : SurfaceKind::kKleinBottle,
                                copies);
    }
    case Series::kStrip: {
      const std::int64_t copies = gcd(l, k);
      return SurfaceType::named((k / copies) % 2 == 1
                                    ? SurfaceKind::kMoebiusStrip
                                    : SurfaceKind::kCylinder,
                                copies);
    }
    case Series::kSimplexTorus:
      return SurfaceType::named(SurfaceKind::kTorus, gcd(gcd(l, j), k));
    case Series::kUnknown:
      break;
  }
  throw Error(ErrorCode::kUnknownSeries,
              "part " + format_cycle_list(part.cycles) +
                  " was not produced by a known construction");
}

std::vector<DifferenceCycle> beta_skeleton_cycles(std::int64_t k) {
  require_k_range(k, 3);
  const std::int64_t n = 2 * k;
  std::vector<DifferenceCycle> cycles;
  for (std::int64_t l = 1; 3 * l < n; ++l) {
    for (std::int64_t j = l + 1; j < n - l - j; ++j) {
      if (l == k || j == k || l + j == k) continue;
      cycles.emplace_back(std::vector<std::int64_t>{l, j, n - l - j}, n);
      cycles.emplace_back(std::vector<std::int64_t>{l, n - l - j, j}, n);
    }
  }
  for (std::int64_t j = 1; j < k; ++j) {
    if (2 * j == k) continue;
    cycles.emplace_back(std::vector<std::int64_t>{j, j, 2 * (k - j)}, n);
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

Part cross_torus_part(std::int64_t l, std::int64_t j, std::int64_t k) {
  const std::int64_t n = 2 * k;
  const std::int64_t rest = n - l - j;
  if (!(0 < l && l < j && j < rest) || l == k || j == k || l + j == k) {
    throw Error(ErrorCode::kWrongDimension,
                "need 0 < l < j < 2k-l-j and k not in {l, j, l+j}");
  }
  return make_part({DifferenceCycle({l, j, rest}, n),
                    DifferenceCycle({l, rest, j}, n)},
                   Series::kCrossTorus, l, j, k);
}

Part cross_pair_part(std::int64_t l, std::int64_t k) {
  if (l < 1 || l > (k - 1) / 2) {
    throw Error(ErrorCode::kWrongDimension, "need 1 <= l <= (k-1)/2");
  }
  const std::int64_t n = 2 * k;
  return make_part({DifferenceCycle({l, l, 2 * (k - l)}, n),
                    DifferenceCycle({k - l, k - l, 2 * l}, n)},
                   Series::kCrossPair, l, 0, k);
}

Part simplex_torus_part(std::int64_t l, std::int64_t j, std::int64_t k) {
  const std::int64_t rest = k - l - j;
  if (!(0 < l && l < j && j < rest)) {
    throw Error(ErrorCode::kWrongDimension, "need 0 < l < j < k-l-j");
  }
  return make_part({DifferenceCycle({l, j, rest}, k),
                    DifferenceCycle({l, rest, j}, k)},
                   Series::kSimplexTorus, l, j, k);
}

Part moebius_family(std::int64_t l, std::int64_t k) {
  require_k_range(k, 5);
  if (k % 3 == 0 || k % 4 == 0) {
    throw Error(ErrorCode::kBadResidue,
                "strip family needs k not divisible by 3 or 4, got " +
                    std::to_string(k));
  }
  if (l < 1 || l > (k - 1) / 2) {
    throw Error(ErrorCode::kWrongDimension, "need 1 <= l <= (k-1)/2");
  }
  return make_part({DifferenceCycle({l, l, k - 2 * l}, k)}, Series::kStrip, l,
                   0, k);
}

Decomposition decompose_beta(std::int64_t k) {
  require_k_range(k, 3);
  Decomposition d;
  d.ambient = Ambient::kCrossPolytope;
  d.k = k;
  const std::int64_t n = 2 * k;
  for (std::int64_t l = 1; 3 * l < n; ++l) {
    for (std::int64_t j = l + 1; j < n - l - j; ++j) {
      if (l == k || j == k || l + j == k) continue;
      d.parts.push_back(cross_torus_part(l, j, k));
    }
  }
  for (std::int64_t l = 1; l <= (k - 1) / 2; ++l) {
    d.parts.push_back(cross_pair_part(l, k));
  }
  sort_parts(d.parts);
  return d;
}

Decomposition decompose_simplex(std::int64_t k) {
  require_k_range(k, 2);
  if (k % 6 != 1 && k % 6 != 5) {
    throw Error(ErrorCode::kBadResidue,
                "k must be 1 or 5 mod 6, got " + std::to_string(k) + " = " +
                    std::to_string(k % 6) + " mod 6");
  }
  Decomposition d;
  d.ambient = Ambient::kSimplex;
  d.k = k;
  for (std::int64_t l = 1; l <= (k - 1) / 2; ++l) {
    d.parts.push_back(make_part({DifferenceCycle({l, l, k - 2 * l}, k)},
                                Series::kStrip, l, 0, k));
  }
  for (std::int64_t l = 1; 3 * l < k; ++l) {
    for (std::int64_t j = l + 1; j < k - l - j; ++j) {
      d.parts.push_back(simplex_torus_part(l, j, k));
    }
  }
  sort_parts(d.parts);
  return d;
}

std::int64_t skel2_size_beta(std::int64_t k) {
  return binomial(2 * k, 3) - k * (2 * k - 2);
}

std::vector<Simplex> ambient_triangles(Ambient ambient, std::int64_t k) {
  const std::int64_t n = ambient == Ambient::kCrossPolytope ? 2 * k : k;
  auto diagonal = [&](Vertex a, Vertex b) {
    return ambient == Ambient::kCrossPolytope && b - a == k;
  };
  std::vector<Simplex> triangles;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (diagonal(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (diagonal(a, c) || diagonal(b, c)) continue;
        triangles.push_back(Simplex{a, b, c});
      }
    }
  }
  return triangles;
}

bool VerificationReport::passed() const {
  return disjoint && covered &&
         std::all_of(parts.begin(), parts.end(),
                     [](const PartCheck& p) { return p.pass(); }) &&
         std::all_of(count_checks.begin(), count_checks.end(),
                     [](const CountCheck& c) { return c.pass(); });
}

VerificationReport verify(const Decomposition& d) {
  VerificationReport report;
  report.ambient = d.ambient;
  report.k = d.k;
  const std::int64_t k = d.k;
  const std::int64_t n = d.vertex_count();
  const bool beta = d.ambient == Ambient::kCrossPolytope;

  std::vector<Simplex> all;
  std::int64_t closed_parts = 0;
  std::int64_t pseudomanifold_parts = 0;
  std::int64_t chi0_closed_parts = 0;
  std::int64_t octahedron_parts = 0;
  std::int64_t octahedra = 0;
  std::int64_t strip_parts = 0;
  std::int64_t torus_parts = 0;

  for (const Part& part : d.parts) {
    PartCheck check;
    check.cycles = part.cycles;
    Complex c;
    try {
      c = part.complex();
      all.insert(all.end(), c.facets().begin(), c.facets().end());
      check.predicted = part.predicted_type;
      check.predicted_components = part.predicted_components;
    } catch (const Error& e) {
      check.error = e.what();
      check.structure_ok = false;
      report.parts.push_back(std::move(check));
      continue;
    }

    try {
      check.computed = classify_surface(c);
    } catch (const Error& e) {
      check.error = std::string(to_string(e.code())) + ": " + e.what();
    }

    auto note = [&](const std::string& what) {
      check.structure_ok = false;
      if (!check.structure_note.empty()) check.structure_note += "; ";
      check.structure_note += what;
    };

    if (part.series != Series::kUnknown &&
        predict_type(part) != part.predicted_type) {
      note("claimed type differs from the closed form");
    }
    if (c.n_vertices() != n) note("part is not on the ambient vertex set");
    if (!shift_invariant(c, 1)) note("not invariant under v -> v+1");
    if (beta && !shift_invariant(c, k)) note("not invariant under v -> v+k");

    if (check.computed) {
      const SurfaceReport& r = *check.computed;
      if (r.closed) ++closed_parts;
      if (r.closed && r.euler == 0) ++chi0_closed_parts;
      if (r.type.kind == SurfaceKind::kSphere) {
        ++octahedron_parts;
        octahedra += r.component_count;
        for (const Complex& comp : connected_components(c)) {
          if (!is_isomorphic(comp, octahedron())) {
            note("sphere component is not an octahedron boundary");
            break;
          }
        }
        if (beta && 3 * r.triangle_count != 8 * k) {
          note("octahedra part does not have 8k/3 triangles");
        }
      }
      if (r.type.kind == SurfaceKind::kMoebiusStrip) ++strip_parts;
      if (r.type.kind == SurfaceKind::kTorus) ++torus_parts;

      const bool full_length = std::all_of(
          part.cycles.begin(), part.cycles.end(),
          [&](const DifferenceCycle& cyc) { return cyc.orbit_length() == n; });
      if (r.closed && full_length) {
        // chi = (1 - m/2) * n for m full-length cycles on n vertices.
        const auto m = static_cast<std::int64_t>(part.cycles.size());
        if (2 * r.euler != (2 - m) * r.vertex_count) {
          note("Euler characteristic differs from (1 - m/2) n");
        }
      }
      if (beta && r.euler == 0 && r.triangle_count != 4 * k) {
        note("Euler characteristic 0 part does not have 4k triangles");
      }
    }
    if (closed_pseudomanifold(c)) ++pseudomanifold_parts;
    report.parts.push_back(std::move(check));
  }

  std::sort(all.begin(), all.end());
  report.triangle_total = static_cast<std::int64_t>(all.size());
  report.disjoint = std::adjacent_find(all.begin(), all.end()) == all.end();
  const auto ambient = ambient_triangles(d.ambient, k);
  report.covered = report.disjoint && all == ambient;

  const auto parts = static_cast<std::int64_t>(d.parts.size());
  auto add = [&](std::string name, std::int64_t expected, std::int64_t actual) {
    report.count_checks.push_back({std::move(name), expected, actual});
  };
  if (beta) {
    add("skeleton triangles C(2k,3)-k(2k-2)", skel2_size_beta(k),
        static_cast<std::int64_t>(ambient.size()));
    add("triangles in parts", skel2_size_beta(k), report.triangle_total);
    add("closed pseudomanifold parts", parts, pseudomanifold_parts);
    add("closed surface parts", parts, closed_parts);
    if (k % 3 != 0) {
      add("Euler characteristic 0 surfaces", (k - 1) * (k - 2) / 3,
          chi0_closed_parts);
      add("octahedra parts", 0, octahedron_parts);
    } else {
      add("Euler characteristic 0 surfaces", k * (k - 3) / 3,
          chi0_closed_parts);
      add("octahedra parts", 1, octahedron_parts);
      add("octahedra", k / 3, octahedra);
    }
  } else {
    add("skeleton triangles C(k,3)", binomial(k, 3),
        static_cast<std::int64_t>(ambient.size()));
    add("triangles in parts", binomial(k, 3), report.triangle_total);
    add("Moebius strip collections", (k - 1) / 2, strip_parts);
    add("torus collections", (k * k - 6 * k + 5) / 12, torus_parts);
  }
  return report;
}

}  // namespace cpsurf
