#include <algorithm>
#include <unordered_set>

#include "cpsurf/complex.hpp"

namespace cpsurf {

namespace {

// Per-complex adjacency data with labels compressed to [0, used.size()).
struct Indexed {
  std::vector<Vertex> labels;                     // dense index -> label
  std::vector<std::vector<std::size_t>> neighbors;  // sorted, 1-skeleton
  std::vector<std::vector<std::size_t>> facets_of;  // facet indices per vertex
  std::vector<std::vector<std::size_t>> facets;     // dense facets
  std::vector<std::pair<std::size_t, std::size_t>> invariant;

  explicit Indexed(const Complex& c) : labels(c.used_vertices()) {
    const std::size_t n = labels.size();
    neighbors.resize(n);
    facets_of.resize(n);
    auto index = [&](Vertex v) {
      return static_cast<std::size_t>(
          std::lower_bound(labels.begin(), labels.end(), v) - labels.begin());
    };
    for (const Simplex& f : c.facets()) {
      std::vector<std::size_t> dense;
      for (Vertex v : f) dense.push_back(index(v));
      for (std::size_t i = 0; i < dense.size(); ++i) {
        facets_of[dense[i]].push_back(facets.size());
        for (std::size_t j = 0; j < dense.size(); ++j) {
          if (i != j) neighbors[dense[i]].push_back(dense[j]);
        }
      }
      facets.push_back(std::move(dense));
    }
    invariant.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto& nb = neighbors[v];
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      invariant[v] = {facets_of[v].size(), nb.size()};
    }
  }

  bool adjacent(std::size_t a, std::size_t b) const {
    return std::binary_search(neighbors[a].begin(), neighbors[a].end(), b);
  }
};

struct DenseFacetHash {
  std::size_t operator()(const std::vector<std::size_t>& f) const noexcept {
    std::size_t h = f.size();
    for (auto v : f) h = h * 1000003u ^ v;
    return h;
  }
};

class Search {
 public:
  Search(const Indexed& a, const Indexed& b) : a_(a), b_(b) {
    for (const auto& f : b_.facets) b_facets_.insert(f);
    const std::size_t n = a_.labels.size();
    forward_.assign(n, kUnset);
    backward_.assign(n, kUnset);
    order_vertices();
  }

  bool run() { return extend(0); }

  VertexMap witness(std::int64_t n_vertices_a) const {
    VertexMap map(static_cast<std::size_t>(n_vertices_a), -1);
    for (std::size_t v = 0; v < forward_.size(); ++v) {
      map[static_cast<std::size_t>(a_.labels[v])] = b_.labels[forward_[v]];
    }
    return map;
  }

 private:
  static constexpr std::size_t kUnset = SIZE_MAX;

  // Breadth-first order over the 1-skeleton of `a`; every non-root vertex is
  // preceded by one of its neighbors (its anchor).
  void order_vertices() {
    const std::size_t n = a_.labels.size();
    std::vector<bool> seen(n, false);
    for (std::size_t root = 0; root < n; ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      order_.push_back(root);
      anchor_.push_back(kUnset);
      for (std::size_t head = order_.size() - 1; head < order_.size(); ++head) {
        const std::size_t u = order_[head];
        for (std::size_t w : a_.neighbors[u]) {
          if (!seen[w]) {
            seen[w] = true;
            order_.push_back(w);
            anchor_.push_back(u);
          }
        }
      }
    }
  }

  bool consistent(std::size_t u, std::size_t x) const {
    if (a_.invariant[u] != b_.invariant[x]) return false;
    // Edges between u and mapped vertices must match in both directions.
    std::size_t mapped_a = 0;
    for (std::size_t w : a_.neighbors[u]) {
      if (forward_[w] == kUnset) continue;
      ++mapped_a;
      if (!b_.adjacent(x, forward_[w])) return false;
    }
    std::size_t mapped_b = 0;
    for (std::size_t y : b_.neighbors[x]) {
      if (backward_[y] != kUnset) ++mapped_b;
    }
    return mapped_a == mapped_b;
  }

  bool facets_close(std::size_t u) const {
    std::vector<std::size_t> image;
    for (std::size_t f : a_.facets_of[u]) {
      image.clear();
      bool complete = true;
      for (std::size_t w : a_.facets[f]) {
        if (forward_[w] == kUnset) {
          complete = false;
          break;
        }
        image.push_back(forward_[w]);
      }
      if (!complete) continue;
      std::sort(image.begin(), image.end());
      if (!b_facets_.contains(image)) return false;
    }
    return true;
  }

  bool try_map(std::size_t depth, std::size_t u, std::size_t x) {
    if (backward_[x] != kUnset || !consistent(u, x)) return false;
    forward_[u] = x;
    backward_[x] = u;
    if (facets_close(u) && extend(depth + 1)) return true;
    forward_[u] = kUnset;
    backward_[x] = kUnset;
    return false;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t u = order_[depth];
    const std::size_t anchor = anchor_[depth];
    if (anchor != kUnset) {
      for (std::size_t x : b_.neighbors[forward_[anchor]]) {
        if (try_map(depth, u, x)) return true;
      }
      return false;
    }
    for (std::size_t x = 0; x < b_.labels.size(); ++x) {
      if (try_map(depth, u, x)) return true;
    }
    return false;
  }

  const Indexed& a_;
  const Indexed& b_;
  std::unordered_set<std::vector<std::size_t>, DenseFacetHash> b_facets_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> anchor_;
  std::vector<std::size_t> forward_;
  std::vector<std::size_t> backward_;
};

// Maps v -> lambda * v + shift on Z_n for every unit lambda and every shift.
// Unions of difference cycles on the same modulus are very often related by
// such a map, which avoids the general search.
std::optional<VertexMap> try_affine(const Complex& a, const Complex& b) {
  const std::int64_t n = a.n_vertices();
  if (n != b.n_vertices() || a.empty()) return std::nullopt;
  std::unordered_set<Simplex, SimplexHash> target(b.facets().begin(),
                                                  b.facets().end());
  const Simplex& probe = a.facets().front();
  std::array<Vertex, kMaxSimplexSize> v{};
  auto image = [&](const Simplex& f, std::int64_t lambda, std::int64_t shift) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      v[i] = mod(f[i] * lambda + shift, n);
    }
    return Simplex(std::span<const Vertex>(v.data(), f.size()));
  };
  for (std::int64_t lambda = 1; lambda < std::max<std::int64_t>(n, 2);
       ++lambda) {
    if (gcd(lambda, n) != 1) continue;
    for (std::int64_t shift = 0; shift < n; ++shift) {
      if (!target.contains(image(probe, lambda, shift))) continue;
      const bool all = std::all_of(
          a.facets().begin(), a.facets().end(), [&](const Simplex& f) {
            return target.contains(image(f, lambda, shift));
          });
      if (!all) continue;
      VertexMap map(static_cast<std::size_t>(n), -1);
      for (Vertex u : a.used_vertices()) {
        map[static_cast<std::size_t>(u)] = mod(u * lambda + shift, n);
      }
      return map;
    }
  }
  return std::nullopt;
}

}  // namespace

ComplexSignature signature(const Complex& c) {
  Indexed ix(c);
  ComplexSignature sig;
  sig.vertices = ix.labels.size();
  sig.facets = c.facet_count();
  for (const Simplex& f : c.facets()) sig.facet_sizes.push_back(f.size());
  std::sort(sig.facet_sizes.begin(), sig.facet_sizes.end());
  sig.vertex_degrees = ix.invariant;
  std::sort(sig.vertex_degrees.begin(), sig.vertex_degrees.end());
  return sig;
}

std::optional<VertexMap> find_isomorphism(const Complex& a, const Complex& b) {
  if (signature(a) != signature(b)) return std::nullopt;
  if (a.empty()) return VertexMap(static_cast<std::size_t>(a.n_vertices()), -1);
  if (auto affine = try_affine(a, b)) return affine;
  Indexed ia(a);
  Indexed ib(b);
  Search search(ia, ib);
  if (!search.run()) return std::nullopt;
  return search.witness(a.n_vertices());
}

bool check_isomorphism(const Complex& a, const Complex& b,
                       std::span<const Vertex> map) {
  if (static_cast<std::int64_t>(map.size()) < a.n_vertices()) return false;
  const auto used = a.used_vertices();
  std::vector<Vertex> images;
  for (Vertex v : used) {
    const Vertex x = map[static_cast<std::size_t>(v)];
    if (x < 0 || x >= b.n_vertices()) return false;
    images.push_back(x);
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
    return false;
  }
  if (a.facet_count() != b.facet_count()) return false;
  try {
    return a.relabeled(map, b.n_vertices()).facets() == b.facets();
  } catch (const Error&) {
    return false;
  }
}

}  // namespace cpsurf
