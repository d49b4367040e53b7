#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cpsurf/decomp.hpp"

namespace cpsurf {

// One entry of the "parts" array of a decomposition certificate.
struct CertificatePart {
  std::vector<std::vector<std::int64_t>> cycles;  // canonical entries
  std::string predicted_type;
  std::int64_t components = 0;
  std::int64_t euler = 0;
  bool orientable = true;
  std::int64_t triangles = 0;

  friend auto operator<=>(const CertificatePart&,
                          const CertificatePart&) = default;
};

// JSON certificate of a decomposition:
//   {"ambient": "beta"|"simplex", "k": int, "vertices": int,
//    "parts": [{"components", "cycles", "euler", "orientable",
//               "predicted_type", "triangles"}, ...]}
// Keys are sorted and parts appear in canonical order, so the rendering is
// byte-stable for a given decomposition.
struct Certificate {
  std::string ambient;
  std::int64_t k = 0;
  std::int64_t vertices = 0;
  std::vector<CertificatePart> parts;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Fills euler/orientable/triangles from the engine's classification.
Certificate make_certificate(const Decomposition& d);

std::string to_json(const Certificate& cert);

// Throws Error{kParseError} on malformed input or missing fields.
Certificate parse_certificate(std::string_view json_text);

}  // namespace cpsurf
