// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. `--nightly` additionally runs the census up to k = 30.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cpsurf/cpsurf.hpp"

namespace {

using namespace cpsurf;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(CPSURF_FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parts as (cycles, type, components), the comparison key for the tables.
using PartKey = std::tuple<std::vector<std::vector<std::int64_t>>, std::string,
                           std::int64_t>;

std::set<PartKey> keys(const Certificate& c) {
  std::set<PartKey> out;
  for (const auto& p : c.parts) out.insert({p.cycles, p.predicted_type, p.components});
  return out;
}

std::int64_t f2(const Certificate& c) {
  std::int64_t sum = 0;
  for (const auto& p : c.parts) sum += p.triangles;
  return sum;
}

bool all_edges_degree_two(const Complex& c) {
  const auto profile = edge_degree_profile(c);
  return profile.size() == 1 && profile.begin()->first == 2;
}

Outcome golden_beta() {
  Outcome o;
  const std::vector<std::int64_t> f2_column{8, 32, 80, 160, 280, 448, 672, 960};
  for (std::int64_t k = 3; k <= 10; ++k) {
    const auto expected =
        parse_certificate(read_fixture("beta_k" + std::to_string(k) + ".json"));
    const auto got = make_certificate(decompose_beta(k));
    const auto tag = "k=" + std::to_string(k);
    o.expect(keys(got) == keys(expected), tag + ": parts differ from table");
    o.expect(got == expected, tag + ": certificate differs from fixture");
    o.expect(f2(got) == f2_column[static_cast<std::size_t>(k - 3)],
             tag + ": f2 column mismatch");
  }
  return o;
}

Outcome golden_simplex() {
  Outcome o;
  for (std::int64_t k : {5, 7, 11, 13, 35}) {
    const auto expected =
        parse_certificate(read_fixture("simplex_k" + std::to_string(k) + ".json"));
    const auto d = decompose_simplex(k);
    const auto got = make_certificate(d);
    const auto tag = "k=" + std::to_string(k);
    o.expect(keys(got) == keys(expected), tag + ": parts differ from table");
    o.expect(got == expected, tag + ": certificate differs from fixture");
    o.expect(f2(got) == binomial(k, 3), tag + ": triangle total");
    if (k != 35) continue;
    int annotated = 0;
    for (const auto& p : d.parts) {
      const auto text = format_cycle_list(p.cycles);
      if (text == "(5:10:20),(5:20:10)") {
        o.expect(p.predicted_type.label() == "{1,...,5} x T^2", "label of (5:10:20)");
        o.expect(classify_surface(p.complex()).component_count == 5,
                 "components of (5:10:20)");
        ++annotated;
      }
      if (text == "(7:7:21)") {
        o.expect(p.predicted_type.label() == "{1,...,7} x M^2", "label of (7:7:21)");
        o.expect(classify_surface(p.complex()).component_count == 7,
                 "components of (7:7:21)");
        ++annotated;
      }
    }
    o.expect(annotated == 2, "annotated k=35 parts missing");
  }
  return o;
}

const std::vector<std::int64_t> kCensusTable{
    0, 1, 1, 4, 2, 3, 4, 6, 4, 9, 5, 8, 11, 7,
    7, 12, 8, 13, 15, 12, 10, 17, 13, 14, 16, 17, 13, 26};

Outcome census(std::int64_t k_max) {
  Outcome o;
  for (std::int64_t k = 3; k <= k_max; ++k) {
    const auto got = count_cst_torus_types(k);
    const auto want = kCensusTable[static_cast<std::size_t>(k - 3)];
    o.expect(got == want, "k=" + std::to_string(k) + ": " + std::to_string(got) +
                              " types, table says " + std::to_string(want));
  }
  return o;
}

Outcome surface_counts() {
  Outcome o;
  for (std::int64_t k = 3; k <= 30; ++k) {
    const auto tag = "k=" + std::to_string(k);
    const auto d = decompose_beta(k);
    const auto report = verify(d);
    o.expect(report.passed(), tag + ": verify failed");
    std::int64_t chi_zero = 0;
    std::int64_t octahedra_parts = 0;
    std::int64_t octahedra = 0;
    for (const auto& p : d.parts) {
      const Complex c = p.complex();
      o.expect(all_edges_degree_two(c), tag + ": part is not a closed pseudomanifold");
      SurfaceReport r;
      try {
        r = classify_surface(c);
      } catch (const Error& e) {
        o.expect(false, tag + ": " + e.what());
        continue;
      }
      o.expect(r.closed, tag + ": part has boundary");
      if (r.euler == 0) ++chi_zero;
      if (r.type.kind == SurfaceKind::kSphere) {
        ++octahedra_parts;
        octahedra += r.component_count;
        o.expect(r.triangle_count == 8 * r.component_count, tag + ": sphere size");
      }
    }
    if (k % 3 != 0) {
      o.expect(chi_zero == (k - 1) * (k - 2) / 3, tag + ": chi=0 count");
      o.expect(octahedra_parts == 0, tag + ": unexpected sphere part");
    } else {
      o.expect(chi_zero == k * (k - 3) / 3, tag + ": chi=0 count");
      o.expect(octahedra_parts == 1 && octahedra == k / 3, tag + ": octahedra");
    }
  }
  return o;
}

std::int64_t expected_components(const Part& p) {
  switch (p.series) {
    case Series::kCrossTorus:
      return gcd(gcd(p.l, p.j), 2 * p.k);
    case Series::kCrossPair:
      return (p.k % 3 == 0 && 3 * p.l == p.k) ? p.k / 3 : gcd(p.l, p.k);
    case Series::kStrip:
      return gcd(p.l, p.k);
    case Series::kSimplexTorus:
      return gcd(gcd(p.l, p.j), p.k);
    case Series::kUnknown:
      break;
  }
  return -1;
}

Outcome property_suite() {
  Outcome o;
  std::vector<Part> parts;
  for (std::int64_t k = 3; k <= 30; ++k) {
    for (auto& p : decompose_beta(k).parts) parts.push_back(std::move(p));
  }
  for (std::int64_t k = 5; k <= 35; ++k) {
    if (k % 6 != 1 && k % 6 != 5) continue;
    for (auto& p : decompose_simplex(k).parts) parts.push_back(std::move(p));
  }
  for (const auto& p : parts) {
    const auto tag = format_cycle_list(p.cycles) + " on " + std::to_string(p.modulus);
    const Complex c = p.complex();
    // (a) full-length closed parts.
    bool full = true;
    for (const auto& cyc : p.cycles) full = full && cyc.orbit_length() == p.modulus;
    if (full && all_edges_degree_two(c)) {
      const auto m = static_cast<std::int64_t>(p.cycles.size());
      o.expect(2 * euler_characteristic(c) == (2 - m) * p.modulus, "(a) " + tag);
    }
    // (b) component counts.
    o.expect(static_cast<std::int64_t>(connected_components(c).size()) ==
                 expected_components(p),
             "(b) " + tag);
  }
  // (c) reflected pairs have equal boundary.
  for (std::int64_t k = 3; 2 * k <= 40; ++k) {
    const std::int64_t n = 2 * k;
    for (std::int64_t a = 1; a < n; ++a) {
      for (std::int64_t b = 1; a + b < n; ++b) {
        const std::int64_t c = n - a - b;
        if (a == k || b == k || c == k) continue;
        const auto diff = boundary_chain(new_cycle({a, b, c}, n)) -
                          boundary_chain(new_cycle({a, c, b}, n));
        o.expect(diff.empty(), "(c) (" + std::to_string(a) + ":" +
                                   std::to_string(b) + ":" + std::to_string(c) + ")");
      }
    }
  }
  // (d) pair series parity.
  for (std::int64_t k = 3; k <= 30; ++k) {
    for (std::int64_t l = 1; l <= (k - 1) / 2; ++l) {
      if (3 * l == k) continue;
      const Part p = cross_pair_part(l, k);
      const auto r = classify_surface(p.complex());
      const std::int64_t g = gcd(l, k);
      const bool torus = (2 * k / g) % 4 == 0;
      o.expect(r.type == SurfaceType::named(torus ? SurfaceKind::kTorus
                                                  : SurfaceKind::kKleinBottle,
                                            g),
               "(d) l=" + std::to_string(l) + " k=" + std::to_string(k));
      o.expect(r.type == p.predicted_type, "(d) prediction l=" + std::to_string(l) +
                                               " k=" + std::to_string(k));
    }
  }
  return o;
}

Outcome enumeration_oracle() {
  Outcome o;
  for (std::int64_t n = 4; n <= 20; ++n) {
    std::set<Simplex> seen;
    std::int64_t total = 0;
    for (const auto& c : enumerate_cycles(2, n)) {
      const auto orbit = c.expand();
      o.expect(static_cast<std::int64_t>(orbit.size()) == c.orbit_length(),
               "orbit length of " + c.to_string());
      total += static_cast<std::int64_t>(orbit.size());
      seen.insert(orbit.begin(), orbit.end());
    }
    // Brute-force count of all triples.
    std::int64_t triples = 0;
    for (std::int64_t a = 0; a < n; ++a) {
      for (std::int64_t b = a + 1; b < n; ++b) {
        for (std::int64_t c = b + 1; c < n; ++c) {
          ++triples;
          o.expect(seen.count(Simplex{a, b, c}) == 1, "missing triangle");
        }
      }
    }
    o.expect(static_cast<std::int64_t>(seen.size()) == triples, "union size");
    o.expect(total == triples, "expansions overlap at n=" + std::to_string(n));
  }
  return o;
}

Outcome isomorphism_soundness() {
  Outcome o;
  std::mt19937_64 rng(2024);
  for (std::int64_t k = 4; k <= 8; ++k) {
    const auto parts = decompose_beta(k).parts;
    const std::int64_t n = 2 * k;
    for (int trial = 0; trial < 50; ++trial) {
      const auto& part = parts[std::uniform_int_distribution<std::size_t>(
          0, parts.size() - 1)(rng)];
      VertexMap perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), Vertex{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      const Complex a = part.complex();
      const Complex b = a.relabeled(perm, n);
      const auto w = find_isomorphism(a, b);
      o.expect(w.has_value() && check_isomorphism(a, b, *w),
               "relabeled copy not matched, k=" + std::to_string(k));
    }
    std::vector<std::pair<Complex, SurfaceReport>> classified;
    for (const auto& p : parts) {
      classified.emplace_back(p.complex(), classify_surface(p.complex()));
    }
    for (std::size_t i = 0; i < classified.size(); ++i) {
      for (std::size_t j = i + 1; j < classified.size(); ++j) {
        const auto& ri = classified[i].second;
        const auto& rj = classified[j].second;
        if (std::tie(ri.euler, ri.orientable, ri.component_count) ==
            std::tie(rj.euler, rj.orientable, rj.component_count)) {
          continue;
        }
        o.expect(!is_isomorphic(classified[i].first, classified[j].first),
                 "distinct invariants declared isomorphic, k=" + std::to_string(k));
      }
    }
  }
  return o;
}

Outcome negative_control() {
  Outcome o;
  for (std::int64_t k : {6, 8, 10}) {
    const std::int64_t h = k / 2;
    for (std::int64_t l = 1; 2 * l < h; ++l) {
      const std::vector<DifferenceCycle> cycles{new_cycle({l, h - l, h}, k)};
      bool rejected = false;
      try {
        classify_surface(from_cycles(cycles, k));
      } catch (const Error& e) {
        rejected = e.code() == ErrorCode::kNotASurface;
      }
      o.expect(rejected, "l=" + std::to_string(l) + " k=" + std::to_string(k) +
                             " accepted");
    }
  }
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0 for no limit
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const bool nightly = argc > 1 && std::string(argv[1]) == "--nightly";
  std::vector<Criterion> criteria{
      {1, "golden cross polytope tables k=3..10", 1.0, golden_beta},
      {2, "golden simplex tables k=5,7,11,13,35", 5.0, golden_simplex},
      {3, "census k=3..12", 60.0, [] { return census(12); }},
      {4, "surface counts k=3..30", 0.0, surface_counts},
      {5, "property suite", 0.0, property_suite},
      {6, "cycle enumeration against brute force n=4..20", 0.0, enumeration_oracle},
      {7, "isomorphism soundness k=4..8", 0.0, isomorphism_soundness},
      {8, "half-diagonal family rejected", 0.0, negative_control},
  };
  if (nightly) {
    criteria.push_back({9, "census k=3..30 (nightly)", 0.0, [] { return census(30); }});
  }
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.expect(false, "took longer than " + std::to_string(c.limit_seconds) + " s");
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name
              << " (" << std::fixed;
    std::cout.precision(3);
    std::cout << secs << " s)";
    if (!o.pass) std::cout << " " << o.detail;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
