#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpsurf/error.hpp"

namespace cpsurf {

using Vertex = std::int64_t;

// Upper bound on k for the constructions; keeps every label, gap and product
// of two residues comfortably inside 64 bits.
inline constexpr std::int64_t kMaxK = 1'000'000;

// Largest supported simplex: a tetrahedron (difference cycles of dimension 3).
inline constexpr std::size_t kMaxSimplexSize = 4;

// A simplex stored as a strictly increasing tuple of at most four vertices.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<Vertex> vertices);
  explicit Simplex(std::span<const Vertex> vertices);

  std::size_t size() const noexcept { return size_; }
  std::size_t dimension() const noexcept { return size_ - 1; }
  Vertex operator[](std::size_t i) const noexcept { return v_[i]; }
  const Vertex* begin() const noexcept { return v_.data(); }
  const Vertex* end() const noexcept { return v_.data() + size_; }
  bool contains(Vertex v) const noexcept;

  // The face obtained by deleting vertex `v`; `v` must be present.
  Simplex without(Vertex v) const;

  friend bool operator==(const Simplex& a, const Simplex& b) noexcept {
    return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
  }
  friend std::strong_ordering operator<=>(const Simplex& a,
                                          const Simplex& b) noexcept {
    return std::lexicographical_compare_three_way(a.begin(), a.end(),
                                                  b.begin(), b.end());
  }

 private:
  std::array<Vertex, kMaxSimplexSize> v_{};
  std::uint8_t size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Simplex& s);

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

// A difference cycle (a_0 : ... : a_d) on n = a_0 + ... + a_d vertices: the
// Z_n-orbit of the simplex {0, a_0, a_0 + a_1, ...}. Entries are kept in the
// lexicographically least cyclic rotation, so rotations of the same gap
// sequence compare equal. Reflections are distinct cycles.
class DifferenceCycle {
 public:
  // Throws Error{kNonPositiveEntry} or Error{kSumMismatch}.
  DifferenceCycle(std::vector<std::int64_t> entries, std::int64_t modulus);

  // Canonical cycle of an arbitrary simplex with labels in Z_n.
  static DifferenceCycle of_simplex(const Simplex& s, std::int64_t modulus);

  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  std::size_t dimension() const noexcept { return entries_.size() - 1; }

  // Number of distinct simplices in the orbit, n * p / (d + 1) for the least
  // period p of the entries.
  std::int64_t orbit_length() const noexcept;

  // Orbit representative {0, a_0, a_0 + a_1, ...}.
  Simplex base_simplex() const;

  // The orbit itself, sorted; exactly orbit_length() simplices.
  std::vector<Simplex> expand() const;

  std::string to_string() const;

  friend bool operator==(const DifferenceCycle&,
                         const DifferenceCycle&) = default;
  friend auto operator<=>(const DifferenceCycle& a, const DifferenceCycle& b) {
    if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<std::int64_t> entries_;
  std::int64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const DifferenceCycle& c);

// Convenience wrapper matching the textual "(a:b:c)" constructor.
DifferenceCycle new_cycle(std::vector<std::int64_t> entries,
                          std::int64_t modulus);

std::int64_t orbit_length(const DifferenceCycle& c);
std::vector<Simplex> expand(const DifferenceCycle& c);

// The canonical cycle of lambda * {0, a_0, a_0 + a_1, ...} mod n.
// Throws Error{kNotAUnit} unless gcd(lambda, n) = 1.
DifferenceCycle apply_multiplier(const DifferenceCycle& c, std::int64_t lambda);

// True iff lambda permutes `cycles` as a set. Throws kMixedModulus/kNotAUnit.
bool is_multiplier(std::span<const DifferenceCycle> cycles,
                   std::int64_t lambda);

// Formal Z-linear combination of 1-dimensional difference cycles. Terms with
// coefficient zero are never stored.
class SignedCycleChain {
 public:
  void add(const DifferenceCycle& c, std::int64_t coefficient);
  SignedCycleChain operator-(const SignedCycleChain& other) const;
  SignedCycleChain operator+(const SignedCycleChain& other) const;

  bool empty() const noexcept { return terms_.empty(); }
  const std::map<DifferenceCycle, std::int64_t>& terms() const noexcept {
    return terms_;
  }
  std::int64_t coefficient(const DifferenceCycle& c) const;

  friend bool operator==(const SignedCycleChain&,
                         const SignedCycleChain&) = default;

 private:
  std::map<DifferenceCycle, std::int64_t> terms_;
};

std::ostream& operator<<(std::ostream& os, const SignedCycleChain& chain);

// Oriented boundary of (a:b:c): (b : n-b) - (a+b : n-a-b) + (a : n-a), where
// (x : n-x) with x > n/2 stands for minus (n-x : x). Coefficients are those of
// the boundary of the expanded orbit, so (a:a:a) maps to +(a : 2a).
// Throws Error{kWrongDimension} unless c is 2-dimensional.
SignedCycleChain boundary_chain(const DifferenceCycle& c);

// Every canonical d-dimensional cycle on n vertices, each once, sorted.
// Requires n >= d + 1 >= 2.
std::vector<DifferenceCycle> enumerate_cycles(std::size_t dimension,
                                              std::int64_t n);

// Parses "(1:2:5)" or a comma-separated list "(1:1:8),(4:4:2)". Whitespace is
// allowed between tokens. The modulus of each cycle is the sum of its
// entries; when `expected_modulus` is positive it must match.
std::vector<DifferenceCycle> parse_cycle_list(std::string_view text,
                                              std::int64_t expected_modulus = 0);
DifferenceCycle parse_cycle(std::string_view text,
                            std::int64_t expected_modulus = 0);

std::string format_cycle_list(std::span<const DifferenceCycle> cycles);

// Arithmetic helpers shared by the constructions.
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t mod(std::int64_t a, std::int64_t n);
std::int64_t binomial(std::int64_t n, std::int64_t r);

}  // namespace cpsurf

template <>
struct std::hash<cpsurf::DifferenceCycle> {
  std::size_t operator()(const cpsurf::DifferenceCycle& c) const noexcept;
};
