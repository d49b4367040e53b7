#include <gtest/gtest.h>

#include <random>

#include "cpsurf/complex.hpp"
#include "oracles.hpp"

namespace cpsurf {
namespace {

Complex cx(std::string_view cycles, std::int64_t n) {
  return from_cycles(parse_cycle_list(cycles, n), n);
}

std::set<oracle::Tri> tris(const Complex& c) {
  std::set<oracle::Tri> out;
  for (const auto& f : c.facets()) out.insert({f.begin(), f.end()});
  return out;
}

Complex random_relabel(const Complex& c, std::mt19937_64& rng) {
  VertexMap perm(static_cast<std::size_t>(c.n_vertices()));
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return c.relabeled(perm, c.n_vertices());
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kParseError;
}

TEST(Complex, Invariants) {
  EXPECT_EQ(code_of([] { Complex(3, {Simplex{0, 1, 3}}); }),
            ErrorCode::kVertexOutOfRange);
  EXPECT_EQ(code_of([] { Complex(4, {Simplex{0, 1, 2}, Simplex{2, 1, 0}}); }),
            ErrorCode::kDuplicateFacet);
  EXPECT_EQ(code_of([] { Complex(4, {Simplex{0, 1, 2}, Simplex{1, 2}}); }),
            ErrorCode::kDuplicateFacet);
  const Complex mixed(5, {Simplex{0, 1, 2}, Simplex{3, 4}});
  EXPECT_FALSE(mixed.is_pure(2));
  EXPECT_EQ(mixed.used_vertices(), (std::vector<Vertex>{0, 1, 2, 3, 4}));
}

TEST(FromCycles, Examples) {
  EXPECT_EQ(cx("(1:1:4),(2:2:2)", 6).facet_count(), 8u);
  EXPECT_EQ(cx("(1:2:5),(1:5:2)", 8).facet_count(), 16u);
  const Complex empty = from_cycles({}, 6);
  EXPECT_TRUE(empty.empty());
  EXPECT_EQ(empty.n_vertices(), 6);
  const std::vector<DifferenceCycle> mixed{new_cycle({1, 1, 4}, 6),
                                           new_cycle({1, 1, 6}, 8)};
  EXPECT_EQ(code_of([&] { from_cycles(mixed, 6); }), ErrorCode::kMixedModulus);
}

TEST(EulerCharacteristic, Examples) {
  EXPECT_EQ(euler_characteristic(cx("(1:1:4),(2:2:2)", 6)), 2);
  EXPECT_EQ(euler_characteristic(cx("(1:2:5),(1:5:2)", 8)), 0);
  // Two disjoint filled triangles: V=6, E=6, F=2.
  EXPECT_EQ(euler_characteristic(cx("(2:2:2)", 6)), 2);
  EXPECT_EQ(code_of([] { euler_characteristic(Complex(4, {Simplex{0, 1}})); }),
            ErrorCode::kNotPure2Complex);
}

TEST(EulerCharacteristic, AgreesWithFaceCountingOracle) {
  for (std::int64_t n = 5; n <= 16; ++n) {
    const auto cycles = enumerate_cycles(2, n);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      for (std::size_t j = i; j < cycles.size(); ++j) {
        std::vector<DifferenceCycle> pick{cycles[i]};
        if (j != i) pick.push_back(cycles[j]);
        const Complex c = from_cycles(pick, n);
        EXPECT_EQ(euler_characteristic(c), oracle::euler(tris(c)));
      }
    }
  }
}

TEST(VertexLink, Examples) {
  const Complex hexagon = vertex_link(cx("(1:2:5),(1:5:2)", 8), 0);
  EXPECT_EQ(hexagon.facet_count(), 6u);
  EXPECT_EQ(hexagon.used_vertices(), (std::vector<Vertex>{1, 2, 3, 5, 6, 7}));
  EXPECT_EQ(edge_degree_profile(cx("(1:2:5),(1:5:2)", 8)).at(2), 24);

  const Complex square = vertex_link(cx("(1:1:4),(2:2:2)", 6), 0);
  EXPECT_EQ(square.facet_count(), 4u);
  EXPECT_EQ(square.used_vertices().size(), 4u);

  // Link of 0 in (1:1:3) on 5 vertices: the path 2 - 1 - 4 - 3.
  const Complex path = vertex_link(cx("(1:1:3)", 5), 0);
  EXPECT_EQ(path.facets(), (std::vector<Simplex>{Simplex{1, 2}, Simplex{1, 4},
                                                 Simplex{3, 4}}));
  EXPECT_EQ(code_of([] { vertex_link(cx("(2:2:2)", 6), 7); }),
            ErrorCode::kVertexNotPresent);
}

TEST(ConnectedComponents, Examples) {
  EXPECT_EQ(connected_components(cx("(2:4:8),(2:8:4)", 14)).size(), 2u);
  const auto five = connected_components(cx("(5:10:20),(5:20:10)", 35));
  ASSERT_EQ(five.size(), 5u);
  for (std::size_t i = 0; i < five.size(); ++i) {
    EXPECT_EQ(five[i].used_vertices().front(), static_cast<Vertex>(i));
    EXPECT_EQ(five[i].n_vertices(), 35);
  }
  EXPECT_EQ(connected_components(cx("(1:2:5),(1:5:2)", 8)).size(), 1u);
  EXPECT_TRUE(connected_components(from_cycles({}, 4)).empty());
}

TEST(EdgeDegreeProfile, Examples) {
  EXPECT_EQ(edge_degree_profile(cx("(1:1:3)", 5)),
            (std::map<std::int64_t, std::int64_t>{{1, 5}, {2, 5}}));
  EXPECT_EQ(edge_degree_profile(Complex(3, {Simplex{0, 1, 2}})),
            (std::map<std::int64_t, std::int64_t>{{1, 3}}));
}

TEST(Orientable, Examples) {
  EXPECT_TRUE(orientable(cx("(1:2:7),(1:7:2)", 10)));
  EXPECT_FALSE(orientable(cx("(1:1:8),(4:4:2)", 10)));
  EXPECT_FALSE(orientable(cx("(1:1:3)", 5)));
  EXPECT_TRUE(orientable(cx("(1:1:4)", 6)));  // cylinder
  EXPECT_EQ(code_of([] {
              orientable(Complex(5, {Simplex{0, 1, 2}, Simplex{0, 1, 3},
                                     Simplex{0, 1, 4}}));
            }),
            ErrorCode::kNotPseudomanifold);
}

TEST(Orientable, AgreesWithDoubleCoverOracleAndRelabeling) {
  std::mt19937_64 rng(3);
  for (std::int64_t n = 5; n <= 14; ++n) {
    const auto cycles = enumerate_cycles(2, n);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      for (std::size_t j = i; j < cycles.size(); ++j) {
        std::vector<DifferenceCycle> pick{cycles[i]};
        if (j != i) pick.push_back(cycles[j]);
        const Complex c = from_cycles(pick, n);
        const auto profile = edge_degree_profile(c);
        if (profile.rbegin()->first > 2) continue;
        for (const Complex& comp : connected_components(c)) {
          EXPECT_EQ(orientable(comp), oracle::orientable(tris(comp)))
              << format_cycle_list(pick) << " n=" << n;
        }
        EXPECT_EQ(orientable(c), orientable(random_relabel(c, rng)));
      }
    }
  }
}

TEST(ClassifySurface, Examples) {
  const auto sphere = classify_surface(cx("(1:1:4),(2:2:2)", 6));
  EXPECT_EQ(sphere.type, SurfaceType::named(SurfaceKind::kSphere));
  EXPECT_EQ(sphere.euler, 2);
  EXPECT_TRUE(sphere.closed);

  const auto two_spheres = classify_surface(cx("(2:2:8),(4:4:4)", 12));
  EXPECT_EQ(two_spheres.type, SurfaceType::named(SurfaceKind::kSphere, 2));
  EXPECT_EQ(two_spheres.type.to_string(), "disjoint_union(sphere,2)");
  EXPECT_EQ(two_spheres.component_count, 2);
  EXPECT_EQ(two_spheres.euler, 4);

  const auto strip = classify_surface(cx("(1:1:3)", 5));
  EXPECT_EQ(strip.type, SurfaceType::named(SurfaceKind::kMoebiusStrip));
  EXPECT_EQ(strip.boundary_circles, 1);
  EXPECT_FALSE(strip.closed);
  EXPECT_FALSE(strip.orientable);

  const auto klein = classify_surface(cx("(1:1:8),(4:4:2)", 10));
  EXPECT_EQ(klein.type, SurfaceType::named(SurfaceKind::kKleinBottle));

  const auto cylinder = classify_surface(cx("(1:1:4)", 6));
  EXPECT_EQ(cylinder.type, SurfaceType::named(SurfaceKind::kCylinder));
  EXPECT_EQ(cylinder.boundary_circles, 2);

  // A single triangle is a disk.
  const auto disk = classify_surface(Complex(3, {Simplex{0, 1, 2}}));
  EXPECT_EQ(disk.type.kind, SurfaceKind::kOther);
  EXPECT_EQ(disk.type.to_string(), "other(1,true,1)");
}

TEST(ClassifySurface, ReportInvariants) {
  for (std::int64_t n = 6; n <= 16; ++n) {
    const auto cycles = enumerate_cycles(2, n);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      for (std::size_t j = i + 1; j < cycles.size(); ++j) {
        const Complex c = from_cycles(std::vector{cycles[i], cycles[j]}, n);
        SurfaceReport r;
        try {
          r = classify_surface(c);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::kNotASurface);
          continue;
        }
        EXPECT_EQ(r.closed, r.boundary_circles == 0);
        EXPECT_GE(r.component_count, 1);
        if (r.closed && r.component_count == 1) {
          EXPECT_EQ(r.type.kind == SurfaceKind::kSphere, r.euler == 2);
          EXPECT_EQ(r.type.kind == SurfaceKind::kTorus,
                    r.euler == 0 && r.orientable);
          EXPECT_EQ(r.type.kind == SurfaceKind::kKleinBottle,
                    r.euler == 0 && !r.orientable);
        }
      }
    }
  }
}

TEST(ClassifySurface, RejectsNonSurfaces) {
  // l + j = 6 = k hits a diagonal: the link of 0 falls apart.
  try {
    classify_surface(cx("(1:5:6)", 12));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotASurface);
    EXPECT_NE(std::string(e.what()).find("link of vertex 0"), std::string::npos);
  }
  EXPECT_EQ(code_of([] { classify_surface(from_cycles({}, 5)); }),
            ErrorCode::kNotASurface);
  EXPECT_EQ(code_of([] { classify_surface(Complex(3, {Simplex{0, 1}})); }),
            ErrorCode::kNotPure2Complex);
  // Two triangles sharing only a vertex (a pinch point).
  EXPECT_EQ(code_of([] {
              classify_surface(Complex(5, {Simplex{0, 1, 2}, Simplex{0, 3, 4}}));
            }),
            ErrorCode::kNotASurface);
}

TEST(SurfaceType, ParseRoundTrip) {
  for (const auto& t :
       {SurfaceType::named(SurfaceKind::kTorus),
        SurfaceType::named(SurfaceKind::kMoebiusStrip, 7),
        SurfaceType::named(SurfaceKind::kCylinder, 2),
        SurfaceType{SurfaceKind::kOther, 3, -2, false, 1}}) {
    EXPECT_EQ(SurfaceType::parse(t.to_string()), t) << t.to_string();
  }
  EXPECT_THROW(SurfaceType::parse("donut"), Error);
  EXPECT_EQ(SurfaceType::named(SurfaceKind::kTorus, 5).label(), "{1,...,5} x T^2");
  EXPECT_EQ(SurfaceType::named(SurfaceKind::kSphere, 2).label(), "{1,2} x S^2");
}

TEST(FacetList, FormatAndParse) {
  const Complex c = cx("(1:1:3)", 5);
  const std::string text = to_facet_list(c);
  EXPECT_EQ(text, "n=5\n0 1 2\n0 1 4\n0 3 4\n1 2 3\n2 3 4\n");
  EXPECT_EQ(parse_facet_list(text), c);
  EXPECT_EQ(parse_facet_list("  n=4\n\n2 1 0\n 3 1 2 \n"),
            Complex(4, {Simplex{0, 1, 2}, Simplex{1, 2, 3}}));
  for (const char* bad : {"0 1 2\n", "n=3\n0 1 x\n", "n=x\n", "n=3\n0 1 2 3 4\n"}) {
    EXPECT_EQ(code_of([&] { parse_facet_list(bad); }), ErrorCode::kParseError)
        << bad;
  }
  EXPECT_EQ(code_of([] { parse_facet_list("n=3\n0 1 5\n"); }),
            ErrorCode::kVertexOutOfRange);
}

}  // namespace
}  // namespace cpsurf
