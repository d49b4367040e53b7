#include "cpsurf/cycles.hpp"

#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace cpsurf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSumMismatch: return "SumMismatch";
    case ErrorCode::kNonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::kNotAUnit: return "NotAUnit";
    case ErrorCode::kMixedModulus: return "MixedModulus";
    case ErrorCode::kWrongDimension: return "WrongDimension";
    case ErrorCode::kNotPure2Complex: return "NotPure2Complex";
    case ErrorCode::kVertexNotPresent: return "VertexNotPresent";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kDuplicateFacet: return "DuplicateFacet";
    case ErrorCode::kNotPseudomanifold: return "NotPseudomanifold";
    case ErrorCode::kNotASurface: return "NotASurface";
    case ErrorCode::kKTooSmall: return "KTooSmall";
    case ErrorCode::kKTooLarge: return "KTooLarge";
    case ErrorCode::kBadResidue: return "BadResidue";
    case ErrorCode::kUnknownSeries: return "UnknownSeries";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= r; ++i) result = result * (n - r + i) / i;
  return result;
}

// ---------------------------------------------------------------- Simplex

Simplex::Simplex(std::initializer_list<Vertex> vertices)
    : Simplex(std::span<const Vertex>(vertices.begin(), vertices.size())) {}

Simplex::Simplex(std::span<const Vertex> vertices) {
  if (vertices.empty() || vertices.size() > kMaxSimplexSize) {
    throw Error(ErrorCode::kWrongDimension,
                "simplex must have between 1 and 4 vertices");
  }
  std::copy(vertices.begin(), vertices.end(), v_.begin());
  size_ = static_cast<std::uint8_t>(vertices.size());
  std::sort(v_.begin(), v_.begin() + size_);
  if (std::adjacent_find(v_.begin(), v_.begin() + size_) != v_.begin() + size_) {
    throw Error(ErrorCode::kDuplicateFacet, "simplex has a repeated vertex");
  }
}

bool Simplex::contains(Vertex v) const noexcept {
  return std::binary_search(begin(), end(), v);
}

Simplex Simplex::without(Vertex v) const {
  std::array<Vertex, kMaxSimplexSize> rest{};
  std::size_t m = 0;
  for (Vertex x : *this) {
    if (x != v) rest[m++] = x;
  }
  return Simplex(std::span<const Vertex>(rest.data(), m));
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
  os << '<';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  return os << '>';
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = s.size();
  for (Vertex v : s) h = h * 1000003u ^ std::hash<Vertex>{}(v);
  return h;
}

// -------------------------------------------------------- DifferenceCycle

namespace {

std::vector<std::int64_t> least_rotation(const std::vector<std::int64_t>& e) {
  std::vector<std::int64_t> best = e;
  std::vector<std::int64_t> rot(e.size());
  for (std::size_t r = 1; r < e.size(); ++r) {
    std::rotate_copy(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(r),
                     e.end(), rot.begin());
    if (rot < best) best = rot;
  }
  return best;
}

std::vector<std::int64_t> gaps_of(const Simplex& s, std::int64_t n) {
  std::vector<std::int64_t> gaps(s.size());
  for (std::size_t i = 0; i + 1 < s.size(); ++i) gaps[i] = s[i + 1] - s[i];
  gaps.back() = n - (s[s.size() - 1] - s[0]);
  return gaps;
}

}  // namespace

DifferenceCycle::DifferenceCycle(std::vector<std::int64_t> entries,
                                 std::int64_t modulus)
    : modulus_(modulus) {
  if (entries.empty() || entries.size() > kMaxSimplexSize) {
    throw Error(ErrorCode::kWrongDimension,
                "difference cycle needs between 1 and 4 entries");
  }
  std::int64_t sum = 0;
  for (std::int64_t a : entries) {
    if (a < 1) {
      throw Error(ErrorCode::kNonPositiveEntry,
                  "difference cycle entry " + std::to_string(a) + " < 1");
    }
    if (a > 2 * kMaxK) {
      throw Error(ErrorCode::kSumMismatch, "difference cycle entry too large");
    }
    sum += a;
  }
  if (sum != modulus) {
    throw Error(ErrorCode::kSumMismatch,
                "entries sum to " + std::to_string(sum) + ", expected n = " +
                    std::to_string(modulus));
  }
  entries_ = least_rotation(entries);
}

DifferenceCycle DifferenceCycle::of_simplex(const Simplex& s,
                                            std::int64_t modulus) {
  std::vector<Vertex> labels(s.begin(), s.end());
  for (Vertex& v : labels) v = mod(v, modulus);
  return DifferenceCycle(gaps_of(Simplex(std::span<const Vertex>(labels)),
                                 modulus),
                         modulus);
}

std::int64_t DifferenceCycle::orbit_length() const noexcept {
  const std::size_t size = entries_.size();
  for (std::size_t p = 1; p <= size; ++p) {
    if (size % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i + p < size && periodic; ++i) {
      periodic = entries_[i] == entries_[i + p];
    }
    if (periodic) {
      return modulus_ * static_cast<std::int64_t>(p) /
             static_cast<std::int64_t>(size);
    }
  }
  return modulus_;
}

Simplex DifferenceCycle::base_simplex() const {
  std::array<Vertex, kMaxSimplexSize> v{};
  Vertex partial = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    v[i] = partial;
    partial += entries_[i];
  }
  return Simplex(std::span<const Vertex>(v.data(), entries_.size()));
}

std::vector<Simplex> DifferenceCycle::expand() const {
  const Simplex base = base_simplex();
  const std::int64_t length = orbit_length();
  std::vector<Simplex> orbit;
  orbit.reserve(static_cast<std::size_t>(length));
  std::array<Vertex, kMaxSimplexSize> v{};
  for (std::int64_t shift = 0; shift < length; ++shift) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      v[i] = mod(base[i] + shift, modulus_);
    }
    orbit.emplace_back(std::span<const Vertex>(v.data(), base.size()));
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::string DifferenceCycle::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ':';
    out += std::to_string(entries_[i]);
  }
  return out + ')';
}

std::ostream& operator<<(std::ostream& os, const DifferenceCycle& c) {
  return os << c.to_string();
}

DifferenceCycle new_cycle(std::vector<std::int64_t> entries,
                          std::int64_t modulus) {
  return DifferenceCycle(std::move(entries), modulus);
}

std::int64_t orbit_length(const DifferenceCycle& c) { return c.orbit_length(); }

std::vector<Simplex> expand(const DifferenceCycle& c) { return c.expand(); }

DifferenceCycle apply_multiplier(const DifferenceCycle& c, std::int64_t lambda) {
  const std::int64_t n = c.modulus();
  if (gcd(mod(lambda, n), n) != 1) {
    throw Error(ErrorCode::kNotAUnit, std::to_string(lambda) +
                                          " is not a unit modulo " +
                                          std::to_string(n));
  }
  const std::int64_t unit = mod(lambda, n);
  const Simplex base = c.base_simplex();
  std::array<Vertex, kMaxSimplexSize> v{};
  for (std::size_t i = 0; i < base.size(); ++i) v[i] = mod(base[i] * unit, n);
  return DifferenceCycle::of_simplex(
      Simplex(std::span<const Vertex>(v.data(), base.size())), n);
}

bool is_multiplier(std::span<const DifferenceCycle> cycles,
                   std::int64_t lambda) {
  if (cycles.empty()) return true;
  const std::int64_t n = cycles.front().modulus();
  for (const auto& c : cycles) {
    if (c.modulus() != n) {
      throw Error(ErrorCode::kMixedModulus, "cycles have different moduli");
    }
  }
  std::set<DifferenceCycle> original(cycles.begin(), cycles.end());
  std::set<DifferenceCycle> image;
  for (const auto& c : cycles) image.insert(apply_multiplier(c, lambda));
  return image == original;
}

// ------------------------------------------------------- SignedCycleChain

void SignedCycleChain::add(const DifferenceCycle& c, std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(c, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

SignedCycleChain SignedCycleChain::operator+(const SignedCycleChain& other) const {
  SignedCycleChain sum = *this;
  for (const auto& [c, coeff] : other.terms_) sum.add(c, coeff);
  return sum;
}

SignedCycleChain SignedCycleChain::operator-(const SignedCycleChain& other) const {
  SignedCycleChain diff = *this;
  for (const auto& [c, coeff] : other.terms_) diff.add(c, -coeff);
  return diff;
}

std::int64_t SignedCycleChain::coefficient(const DifferenceCycle& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? 0 : it->second;
}

std::ostream& operator<<(std::ostream& os, const SignedCycleChain& chain) {
  if (chain.empty()) return os << '0';
  bool first = true;
  for (const auto& [c, coeff] : chain.terms()) {
    if (coeff > 0) {
      os << (first ? "+" : " +");
    } else {
      os << (first ? "-" : " -");
    }
    if (coeff != 1 && coeff != -1) os << (coeff > 0 ? coeff : -coeff);
    os << c;
    first = false;
  }
  return os;
}

SignedCycleChain boundary_chain(const DifferenceCycle& c) {
  if (c.dimension() != 2) {
    throw Error(ErrorCode::kWrongDimension,
                "boundary_chain needs a 2-dimensional cycle, got " +
                    c.to_string());
  }
  const std::int64_t n = c.modulus();
  const std::int64_t a = c.entries()[0];
  const std::int64_t b = c.entries()[1];
  // (x : n-x) with 2x > n is the reverse of (n-x : x); the diagonal orbit
  // (n/2 : n/2) is its own reverse and drops out.
  std::map<DifferenceCycle, std::int64_t> sum;
  auto edge = [&](std::int64_t x, std::int64_t sign) {
    if (2 * x == n) return;
    if (2 * x > n) {
      x = n - x;
      sign = -sign;
    }
    sum[DifferenceCycle({x, n - x}, n)] += sign;
  };
  edge(b, +1);
  edge(a + b, -1);
  edge(a, +1);
  // An orbit of n/3 triangles, (a:a:a), meets its edge orbit once, not three times.
  const std::int64_t scale = n / c.orbit_length();
  SignedCycleChain chain;
  for (const auto& [cycle, coeff] : sum) chain.add(cycle, coeff / scale);
  return chain;
}

std::vector<DifferenceCycle> enumerate_cycles(std::size_t dimension,
                                              std::int64_t n) {
  const std::size_t size = dimension + 1;
  if (size < 2 || size > kMaxSimplexSize ||
      n < static_cast<std::int64_t>(size)) {
    throw Error(ErrorCode::kWrongDimension,
                "enumerate_cycles needs n >= d + 1 >= 2 and d <= 3");
  }
  // Walk all compositions of n into `size` positive parts; keep the ones
  // already in least-rotation form.
  std::vector<DifferenceCycle> result;
  std::vector<std::int64_t> parts(size);
  auto fill = [&](auto&& self, std::size_t slot, std::int64_t left) -> void {
    if (slot + 1 == size) {
      parts[slot] = left;
      if (least_rotation(parts) == parts) result.emplace_back(parts, n);
      return;
    }
    const auto slots_after = static_cast<std::int64_t>(size - slot - 1);
    for (std::int64_t a = 1; a + slots_after <= left; ++a) {
      parts[slot] = a;
      self(self, slot + 1, left - a);
    }
  };
  fill(fill, 0, n);
  std::sort(result.begin(), result.end());
  return result;
}

// ------------------------------------------------------------------ parse

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) {
      fail("expected an integer");
    }
    if (pos_ - start > 12) fail("integer too large");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::kParseError,
                why + " at offset " + std::to_string(pos_) + " in \"" +
                    std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

DifferenceCycle parse_one(Scanner& in, std::int64_t expected_modulus) {
  in.expect('(');
  std::vector<std::int64_t> entries{in.integer()};
  while (in.accept(':')) entries.push_back(in.integer());
  in.expect(')');
  std::int64_t sum = 0;
  for (auto a : entries) sum += a;
  return DifferenceCycle(std::move(entries),
                         expected_modulus > 0 ? expected_modulus : sum);
}

}  // namespace

std::vector<DifferenceCycle> parse_cycle_list(std::string_view text,
                                              std::int64_t expected_modulus) {
  Scanner in(text);
  std::vector<DifferenceCycle> cycles;
  if (in.done()) return cycles;
  cycles.push_back(parse_one(in, expected_modulus));
  while (in.accept(',')) cycles.push_back(parse_one(in, expected_modulus));
  if (!in.done()) in.fail("trailing characters");
  return cycles;
}

DifferenceCycle parse_cycle(std::string_view text,
                            std::int64_t expected_modulus) {
  auto cycles = parse_cycle_list(text, expected_modulus);
  if (cycles.size() != 1) {
    throw Error(ErrorCode::kParseError,
                "expected exactly one cycle in \"" + std::string(text) + "\"");
  }
  return cycles.front();
}

std::string format_cycle_list(std::span<const DifferenceCycle> cycles) {
  std::string out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (i) out += ',';
    out += cycles[i].to_string();
  }
  return out;
}

}  // namespace cpsurf

std::size_t std::hash<cpsurf::DifferenceCycle>::operator()(
    const cpsurf::DifferenceCycle& c) const noexcept {
  std::size_t h = std::hash<std::int64_t>{}(c.modulus());
  for (auto a : c.entries()) h = h * 1000003u ^ std::hash<std::int64_t>{}(a);
  return h;
}
