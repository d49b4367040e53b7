#include "cpsurf/complex.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace cpsurf {

namespace {

// Union-find over dense indices.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

void require_pure2(const Complex& c, std::string_view op) {
  if (!c.is_pure(2)) {
    throw Error(ErrorCode::kNotPure2Complex,
                std::string(op) + " needs a pure 2-dimensional complex");
  }
}

// An edge of a triangle together with the sign it receives from the
// triangle's vertex order a < b < c, i.e. from the boundary ab + bc - ac.
struct EdgeIncidence {
  Vertex u;
  Vertex v;
  std::size_t triangle;
  int sign;

  friend bool operator<(const EdgeIncidence& x, const EdgeIncidence& y) {
    return std::tie(x.u, x.v, x.triangle) < std::tie(y.u, y.v, y.triangle);
  }
};

std::vector<EdgeIncidence> edge_incidences(const Complex& c) {
  std::vector<EdgeIncidence> inc;
  inc.reserve(3 * c.facet_count());
  for (std::size_t t = 0; t < c.facet_count(); ++t) {
    const Simplex& f = c.facets()[t];
    inc.push_back({f[0], f[1], t, +1});
    inc.push_back({f[1], f[2], t, +1});
    inc.push_back({f[0], f[2], t, -1});
  }
  std::sort(inc.begin(), inc.end());
  return inc;
}

template <typename Fn>
void for_each_edge_group(const std::vector<EdgeIncidence>& inc, Fn&& fn) {
  for (std::size_t i = 0; i < inc.size();) {
    std::size_t j = i;
    while (j < inc.size() && inc[j].u == inc[i].u && inc[j].v == inc[i].v) ++j;
    fn(std::span<const EdgeIncidence>(inc.data() + i, j - i));
    i = j;
  }
}

std::int64_t count_faces(const Complex& c) {
  const auto used = c.used_vertices();
  const auto edges = c.edges();
  return static_cast<std::int64_t>(used.size()) -
         static_cast<std::int64_t>(edges.size()) +
         static_cast<std::int64_t>(c.facet_count());
}

// Orientation propagation. Returns false on the first conflict.
bool orient(const Complex& c) {
  const auto inc = edge_incidences(c);
  std::vector<std::vector<std::pair<std::size_t, int>>> adjacent(
      c.facet_count());
  for_each_edge_group(inc, [&](std::span<const EdgeIncidence> group) {
    if (group.size() > 2) {
      std::ostringstream msg;
      msg << "edge <" << group[0].u << "," << group[0].v << "> lies in "
          << group.size() << " triangles";
      throw Error(ErrorCode::kNotPseudomanifold, msg.str());
    }
    if (group.size() == 2) {
      // Triangles t1, t2 with orientations o1, o2 are coherent along this
      // edge iff o1 * s1 = -o2 * s2, i.e. o2 = -o1 * s1 * s2.
      const int rel = -group[0].sign * group[1].sign;
      adjacent[group[0].triangle].emplace_back(group[1].triangle, rel);
      adjacent[group[1].triangle].emplace_back(group[0].triangle, rel);
    }
  });
  std::vector<int> orientation(c.facet_count(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < c.facet_count(); ++start) {
    if (orientation[start] != 0) continue;
    orientation[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t t = stack.back();
      stack.pop_back();
      for (auto [other, rel] : adjacent[t]) {
        const int want = orientation[t] * rel;
        if (orientation[other] == 0) {
          orientation[other] = want;
          stack.push_back(other);
        } else if (orientation[other] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

// Link of a vertex in a 2-complex, as a graph.
struct LinkShape {
  bool connected = false;
  std::size_t vertices = 0;
  std::size_t degree_one = 0;
  bool degree_ok = true;  // every link vertex has degree 1 or 2

  bool is_cycle() const { return connected && degree_ok && degree_one == 0; }
  bool is_path() const { return connected && degree_ok && degree_one == 2; }
};

LinkShape link_shape(const Complex& link) {
  LinkShape shape;
  const auto used = link.used_vertices();
  shape.vertices = used.size();
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(
        std::lower_bound(used.begin(), used.end(), v) - used.begin());
  };
  std::vector<std::size_t> degree(used.size(), 0);
  DisjointSets sets(used.size());
  for (const Simplex& e : link.facets()) {
    const std::size_t a = index(e[0]);
    const std::size_t b = index(e[1]);
    ++degree[a];
    ++degree[b];
    sets.unite(a, b);
  }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (sets.find(i) == i) ++roots;
    if (degree[i] == 1) ++shape.degree_one;
    if (degree[i] < 1 || degree[i] > 2) shape.degree_ok = false;
  }
  shape.connected = roots == 1;
  return shape;
}

SurfaceType component_type(std::int64_t euler, bool is_orientable,
                           std::int64_t boundary) {
  if (boundary == 0) {
    if (euler == 2) return SurfaceType::named(SurfaceKind::kSphere);
    if (euler == 0) {
      return SurfaceType::named(is_orientable ? SurfaceKind::kTorus
                                              : SurfaceKind::kKleinBottle);
    }
  } else if (euler == 0) {
    if (boundary == 1 && !is_orientable) {
      return SurfaceType::named(SurfaceKind::kMoebiusStrip);
    }
    if (boundary == 2 && is_orientable) {
      return SurfaceType::named(SurfaceKind::kCylinder);
    }
  }
  return SurfaceType{SurfaceKind::kOther, 1, euler, is_orientable, boundary};
}

}  // namespace

// ---------------------------------------------------------------- Complex

Complex::Complex(std::int64_t n_vertices, std::vector<Simplex> facets)
    : n_vertices_(n_vertices), facets_(std::move(facets)) {
  std::sort(facets_.begin(), facets_.end());
  for (const Simplex& f : facets_) {
    for (Vertex v : f) {
      if (v < 0 || v >= n_vertices_) {
        std::ostringstream msg;
        msg << "facet " << f << " has a label outside [0, " << n_vertices_
            << ")";
        throw Error(ErrorCode::kVertexOutOfRange, msg.str());
      }
    }
  }
  if (auto it = std::adjacent_find(facets_.begin(), facets_.end());
      it != facets_.end()) {
    std::ostringstream msg;
    msg << "facet " << *it << " appears twice";
    throw Error(ErrorCode::kDuplicateFacet, msg.str());
  }
  const bool uniform = std::all_of(
      facets_.begin(), facets_.end(),
      [&](const Simplex& f) { return f.size() == facets_.front().size(); });
  if (!uniform) {
    std::unordered_set<Simplex, SimplexHash> all(facets_.begin(),
                                                 facets_.end());
    for (const Simplex& f : facets_) {
      const auto n = f.size();
      for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::array<Vertex, kMaxSimplexSize> sub{};
        std::size_t m = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask & (1u << i)) sub[m++] = f[i];
        }
        Simplex face(std::span<const Vertex>(sub.data(), m));
        if (all.contains(face)) {
          std::ostringstream msg;
          msg << "facet " << face << " is a face of " << f;
          throw Error(ErrorCode::kDuplicateFacet, msg.str());
        }
      }
    }
  }
}

std::vector<Vertex> Complex::used_vertices() const {
  std::vector<Vertex> used;
  for (const Simplex& f : facets_) used.insert(used.end(), f.begin(), f.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  return used;
}

bool Complex::is_pure(std::size_t dimension) const noexcept {
  return std::all_of(facets_.begin(), facets_.end(), [&](const Simplex& f) {
    return f.size() == dimension + 1;
  });
}

std::vector<Simplex> Complex::edges() const {
  std::vector<Simplex> edges;
  for (const Simplex& f : facets_) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        edges.push_back(Simplex{f[i], f[j]});
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

Complex Complex::relabeled(std::span<const Vertex> map,
                           std::int64_t n_vertices) const {
  std::vector<Simplex> image;
  image.reserve(facets_.size());
  std::array<Vertex, kMaxSimplexSize> v{};
  for (const Simplex& f : facets_) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      v[i] = map[static_cast<std::size_t>(f[i])];
    }
    image.emplace_back(std::span<const Vertex>(v.data(), f.size()));
  }
  return Complex(n_vertices, std::move(image));
}

std::ostream& operator<<(std::ostream& os, const Complex& c) {
  os << "Complex(n=" << c.n_vertices() << ", {";
  for (std::size_t i = 0; i < c.facet_count(); ++i) {
    os << (i ? " " : "") << c.facets()[i];
  }
  return os << "})";
}

Complex from_cycles(std::span<const DifferenceCycle> cycles, std::int64_t n) {
  std::vector<Simplex> facets;
  for (const auto& c : cycles) {
    if (c.modulus() != n) {
      throw Error(ErrorCode::kMixedModulus,
                  "cycle " + c.to_string() + " is on " +
                      std::to_string(c.modulus()) + " vertices, expected " +
                      std::to_string(n));
    }
    auto orbit = c.expand();
    facets.insert(facets.end(), orbit.begin(), orbit.end());
  }
  return Complex(n, std::move(facets));
}

std::int64_t euler_characteristic(const Complex& c) {
  require_pure2(c, "euler_characteristic");
  return count_faces(c);
}

Complex vertex_link(const Complex& c, Vertex v) {
  std::vector<Simplex> link;
  for (const Simplex& f : c.facets()) {
    if (f.contains(v) && f.size() > 1) link.push_back(f.without(v));
  }
  if (link.empty()) {
    throw Error(ErrorCode::kVertexNotPresent,
                "vertex " + std::to_string(v) + " lies in no facet");
  }
  return Complex(c.n_vertices(), std::move(link));
}

std::vector<Complex> connected_components(const Complex& c) {
  const auto n = static_cast<std::size_t>(c.n_vertices());
  DisjointSets sets(n);
  for (const Simplex& f : c.facets()) {
    for (std::size_t i = 1; i < f.size(); ++i) {
      sets.unite(static_cast<std::size_t>(f[0]), static_cast<std::size_t>(f[i]));
    }
  }
  // Facets sorted lexicographically, so the first facet of each component
  // carries its smallest vertex; the discovery order is the output order.
  std::vector<std::size_t> slot(n, SIZE_MAX);
  std::vector<std::vector<Simplex>> groups;
  for (const Simplex& f : c.facets()) {
    const std::size_t root = sets.find(static_cast<std::size_t>(f[0]));
    if (slot[root] == SIZE_MAX) {
      slot[root] = groups.size();
      groups.emplace_back();
    }
    groups[slot[root]].push_back(f);
  }
  std::vector<Complex> components;
  components.reserve(groups.size());
  for (auto& g : groups) components.emplace_back(c.n_vertices(), std::move(g));
  return components;
}

std::map<std::int64_t, std::int64_t> edge_degree_profile(const Complex& c) {
  require_pure2(c, "edge_degree_profile");
  std::map<std::int64_t, std::int64_t> profile;
  for_each_edge_group(edge_incidences(c),
                      [&](std::span<const EdgeIncidence> group) {
                        ++profile[static_cast<std::int64_t>(group.size())];
                      });
  return profile;
}

bool orientable(const Complex& c) {
  require_pure2(c, "orientable");
  return orient(c);
}

// ------------------------------------------------------------ SurfaceType

std::string_view to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::kSphere: return "sphere";
    case SurfaceKind::kTorus: return "torus";
    case SurfaceKind::kKleinBottle: return "klein_bottle";
    case SurfaceKind::kMoebiusStrip: return "moebius_strip";
    case SurfaceKind::kCylinder: return "cylinder";
    case SurfaceKind::kOther: return "other";
  }
  return "other";
}

SurfaceType SurfaceType::named(SurfaceKind kind, std::int64_t copies) {
  switch (kind) {
    case SurfaceKind::kSphere: return {kind, copies, 2, true, 0};
    case SurfaceKind::kTorus: return {kind, copies, 0, true, 0};
    case SurfaceKind::kKleinBottle: return {kind, copies, 0, false, 0};
    case SurfaceKind::kMoebiusStrip: return {kind, copies, 0, false, 1};
    case SurfaceKind::kCylinder: return {kind, copies, 0, true, 2};
    case SurfaceKind::kOther: break;
  }
  throw Error(ErrorCode::kUnknownSeries, "kOther has no implied invariants");
}

std::string SurfaceType::to_string() const {
  std::string base(cpsurf::to_string(kind));
  if (kind == SurfaceKind::kOther) {
    base += "(" + std::to_string(euler) + "," +
            (orientable ? "true" : "false") + "," +
            std::to_string(boundary_circles) + ")";
  }
  if (copies == 1) return base;
  return "disjoint_union(" + base + "," + std::to_string(copies) + ")";
}

std::string SurfaceType::label() const {
  std::string base;
  switch (kind) {
    case SurfaceKind::kSphere: base = "S^2"; break;
    case SurfaceKind::kTorus: base = "T^2"; break;
    case SurfaceKind::kKleinBottle: base = "K^2"; break;
    case SurfaceKind::kMoebiusStrip: base = "M^2"; break;
    case SurfaceKind::kCylinder: base = "C^2"; break;
    case SurfaceKind::kOther: base = to_string(); return base;
  }
  if (copies == 1) return base;
  if (copies == 2) return "{1,2} x " + base;
  if (copies == 3) return "{1,2,3} x " + base;
  return "{1,...," + std::to_string(copies) + "} x " + base;
}

SurfaceType SurfaceType::parse(std::string_view text) {
  auto fail = [&]() -> SurfaceType {
    throw Error(ErrorCode::kParseError,
                "unknown surface type \"" + std::string(text) + "\"");
  };
  std::int64_t copies = 1;
  std::string_view inner = text;
  constexpr std::string_view kUnion = "disjoint_union(";
  if (inner.starts_with(kUnion) && inner.ends_with(")")) {
    inner = inner.substr(kUnion.size(), inner.size() - kUnion.size() - 1);
    const auto comma = inner.rfind(',');
    if (comma == std::string_view::npos) return fail();
    try {
      copies = std::stoll(std::string(inner.substr(comma + 1)));
    } catch (const std::exception&) {
      return fail();
    }
    inner = inner.substr(0, comma);
  }
  for (auto kind : {SurfaceKind::kSphere, SurfaceKind::kTorus,
                    SurfaceKind::kKleinBottle, SurfaceKind::kMoebiusStrip,
                    SurfaceKind::kCylinder}) {
    if (inner == cpsurf::to_string(kind)) return named(kind, copies);
  }
  if (inner.starts_with("other(") && inner.ends_with(")")) {
    std::string body(inner.substr(6, inner.size() - 7));
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    SurfaceType t{SurfaceKind::kOther, copies, 0, true, 0};
    std::string orient_word;
    if (in >> t.euler >> orient_word >> t.boundary_circles &&
        (orient_word == "true" || orient_word == "false")) {
      t.orientable = orient_word == "true";
      return t;
    }
  }
  return fail();
}

std::ostream& operator<<(std::ostream& os, const SurfaceReport& r) {
  return os << "type=" << r.type.to_string() << " euler=" << r.euler
            << " orientable=" << (r.orientable ? "true" : "false")
            << " components=" << r.component_count
            << " boundary_circles=" << r.boundary_circles
            << " closed=" << (r.closed ? "true" : "false")
            << " vertices=" << r.vertex_count
            << " triangles=" << r.triangle_count;
}

// -------------------------------------------------------- classification

SurfaceReport classify_surface(const Complex& c) {
  require_pure2(c, "classify_surface");
  if (c.empty()) {
    throw Error(ErrorCode::kNotASurface, "empty complex is not a surface");
  }
  for (Vertex v : c.used_vertices()) {
    const Complex link = vertex_link(c, v);
    const LinkShape shape = link_shape(link);
    if (!shape.is_cycle() && !shape.is_path()) {
      std::ostringstream msg;
      msg << "link of vertex " << v << " is neither a cycle nor a path: "
          << to_facet_list(link);
      throw Error(ErrorCode::kNotASurface, msg.str());
    }
  }

  SurfaceReport report;
  report.vertex_count = static_cast<std::int64_t>(c.used_vertices().size());
  report.triangle_count = static_cast<std::int64_t>(c.facet_count());

  const auto components = connected_components(c);
  report.component_count = static_cast<std::int64_t>(components.size());

  std::vector<SurfaceType> types;
  for (const Complex& comp : components) {
    const std::int64_t euler = count_faces(comp);
    const bool is_orientable = orient(comp);
    std::int64_t boundary = 0;
    {
      // Degree-one edges form disjoint cycles; count them as components.
      std::vector<Simplex> boundary_edges;
      for_each_edge_group(edge_incidences(comp),
                          [&](std::span<const EdgeIncidence> group) {
                            if (group.size() == 1) {
                              boundary_edges.push_back(
                                  Simplex{group[0].u, group[0].v});
                            }
                          });
      if (!boundary_edges.empty()) {
        boundary = static_cast<std::int64_t>(
            connected_components(Complex(c.n_vertices(), boundary_edges))
                .size());
      }
    }
    report.euler += euler;
    report.orientable = report.orientable && is_orientable;
    report.boundary_circles += boundary;
    types.push_back(component_type(euler, is_orientable, boundary));
  }
  report.closed = report.boundary_circles == 0;

  const bool uniform =
      std::all_of(types.begin(), types.end(),
                  [&](const SurfaceType& t) { return t == types.front(); }) &&
      std::all_of(components.begin() + 1, components.end(),
                  [&](const Complex& comp) {
                    return is_isomorphic(components.front(), comp);
                  });
  if (uniform) {
    report.type = types.front();
    report.type.copies = report.component_count;
  } else {
    report.type = SurfaceType{SurfaceKind::kOther, 1, report.euler,
                              report.orientable, report.boundary_circles};
  }
  return report;
}

// ------------------------------------------------------------- facet list

std::string to_facet_list(const Complex& c) {
  std::ostringstream out;
  out << "n=" << c.n_vertices() << '\n';
  for (const Simplex& f : c.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << '\n';
  }
  return out.str();
}

Complex parse_facet_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::int64_t n = -1;
  std::vector<Simplex> facets;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kParseError,
                "facet list line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (n < 0) {
      const auto start = line.find_first_not_of(" \t");
      if (line.compare(start, 2, "n=") != 0) fail("expected header \"n=<vertices>\"");
      try {
        std::size_t used = 0;
        n = std::stoll(line.substr(start + 2), &used);
        if (line.find_first_not_of(" \t\r", start + 2 + used) != std::string::npos) {
          fail("trailing characters after header");
        }
      } catch (const std::logic_error&) {
        fail("bad vertex count");
      }
      if (n <= 0) fail("vertex count must be positive");
      continue;
    }
    std::istringstream row(line);
    std::vector<Vertex> vertices;
    std::string token;
    while (row >> token) {
      try {
        std::size_t used = 0;
        vertices.push_back(std::stoll(token, &used));
        if (used != token.size()) fail("bad vertex \"" + token + "\"");
      } catch (const std::logic_error&) {
        fail("bad vertex \"" + token + "\"");
      }
    }
    if (vertices.empty() || vertices.size() > kMaxSimplexSize) {
      fail("a facet needs between 1 and 4 vertices");
    }
    facets.emplace_back(std::span<const Vertex>(vertices));
  }
  if (n < 0) fail("missing header \"n=<vertices>\"");
  return Complex(n, std::move(facets));
}

}  // namespace cpsurf
