#include "cpsurf/certificate.hpp"

#include <algorithm>

#include "json.hpp"

namespace cpsurf {

using nlohmann::json;

Certificate make_certificate(const Decomposition& d) {
  Certificate cert;
  cert.ambient = std::string(to_string(d.ambient));
  cert.k = d.k;
  cert.vertices = d.vertex_count();
  for (const Part& part : d.parts) {
    CertificatePart p;
    for (const auto& c : part.cycles) p.cycles.push_back(c.entries());
    p.predicted_type = part.predicted_type.to_string();
    p.components = part.predicted_components;
    const SurfaceReport r = classify_surface(part.complex());
    p.euler = r.euler;
    p.orientable = r.orientable;
    p.triangles = r.triangle_count;
    cert.parts.push_back(std::move(p));
  }
  return cert;
}

std::string to_json(const Certificate& cert) {
  json parts = json::array();
  for (const auto& p : cert.parts) {
    parts.push_back({{"components", p.components},
                     {"cycles", p.cycles},
                     {"euler", p.euler},
                     {"orientable", p.orientable},
                     {"predicted_type", p.predicted_type},
                     {"triangles", p.triangles}});
  }
  // nlohmann::json objects are std::map backed, so keys come out sorted.
  const json doc = {{"ambient", cert.ambient},
                    {"k", cert.k},
                    {"parts", parts},
                    {"vertices", cert.vertices}};
  return doc.dump(2) + "\n";
}

Certificate parse_certificate(std::string_view json_text) {
  try {
    const json doc = json::parse(json_text);
    Certificate cert;
    cert.ambient = doc.at("ambient").get<std::string>();
    if (cert.ambient != "beta" && cert.ambient != "simplex") {
      throw Error(ErrorCode::kParseError,
                  "ambient must be \"beta\" or \"simplex\"");
    }
    cert.k = doc.at("k").get<std::int64_t>();
    cert.vertices = doc.at("vertices").get<std::int64_t>();
    for (const auto& p : doc.at("parts")) {
      CertificatePart part;
      part.cycles = p.at("cycles").get<std::vector<std::vector<std::int64_t>>>();
      part.predicted_type = p.at("predicted_type").get<std::string>();
      part.components = p.at("components").get<std::int64_t>();
      part.euler = p.at("euler").get<std::int64_t>();
      part.orientable = p.at("orientable").get<bool>();
      part.triangles = p.at("triangles").get<std::int64_t>();
      cert.parts.push_back(std::move(part));
    }
    return cert;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string("bad certificate: ") + e.what());
  }
}

}  // namespace cpsurf
