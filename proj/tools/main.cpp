#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpsurf/cpsurf.hpp"

namespace {

using cpsurf::Ambient;
using cpsurf::Decomposition;
using cpsurf::Error;
using cpsurf::ErrorCode;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRejected = 3;

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = -1;  // empty when hi < lo
  bool single = false;
};

Range parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) {
      throw Error(ErrorCode::kParseError, "bad k or range: '" + text + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = to_int(text);
    return {v, v, true};
  }
  return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2)), false};
}

// Runs task(k) for every k in the range on up to `jobs` threads; results are
// returned in ascending k.
template <class Result>
std::vector<Result> fan_out(const Range& r, unsigned jobs,
                            const std::function<Result(std::int64_t)>& task) {
  if (r.hi < r.lo) return {};
  const auto count = static_cast<std::size_t>(r.hi - r.lo + 1);
  std::vector<Result> out(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      out[i] = task(r.lo + static_cast<std::int64_t>(i));
    }
  };
  const auto n = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::string render_text(const Decomposition& d) {
  std::ostringstream os;
  std::int64_t triangles = 0;
  for (const auto& p : d.parts) triangles += p.triangle_count();
  os << to_string(d.ambient) << " k=" << d.k << " vertices=" << d.vertex_count()
     << " triangles=" << triangles << " parts=" << d.parts.size() << "\n";
  // Grouped by type, groups in order of first appearance.
  std::vector<std::string> order;
  std::map<std::string, std::vector<const cpsurf::Part*>> groups;
  for (const auto& p : d.parts) {
    const auto label = p.predicted_type.label();
    if (!groups.count(label)) order.push_back(label);
    groups[label].push_back(&p);
  }
  for (const auto& label : order) {
    os << label << " (" << groups[label].size() << ")\n";
    for (const auto* p : groups[label]) {
      os << "  " << cpsurf::format_cycle_list(p->cycles) << "  f2="
         << p->triangle_count() << "\n";
    }
  }
  return os.str();
}

std::string render_csv_rows(const Decomposition& d) {
  std::ostringstream os;
  for (const auto& p : d.parts) {
    os << d.k << "," << csv_quote(cpsurf::format_cycle_list(p.cycles)) << ","
       << p.predicted_type.to_string() << "," << p.predicted_components << ","
       << p.triangle_count() << "\n";
  }
  return os.str();
}

struct Output {
  std::optional<std::ofstream> file;
  std::ostream* stream = &std::cout;

  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.emplace(path);
    if (!*file) throw Error(ErrorCode::kParseError, "cannot open " + path);
    stream = &*file;
  }
  std::ostream& operator*() { return *stream; }
};

struct Options {
  std::string k;
  std::string format = "text";
  std::string out;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

struct KResult {
  std::string body;
  std::string error;
  bool usage_error = false;
};

int cmd_decompose(Ambient ambient, const Options& opt) {
  const Range range = parse_range(opt.k);
  auto build = [&](std::int64_t k) {
    return ambient == Ambient::kCrossPolytope ? cpsurf::decompose_beta(k)
                                              : cpsurf::decompose_simplex(k);
  };
  const auto results = fan_out<KResult>(range, opt.jobs, [&](std::int64_t k) {
    KResult r;
    try {
      const auto d = build(k);
      if (opt.format == "json") {
        r.body = cpsurf::to_json(cpsurf::make_certificate(d));
      } else if (opt.format == "csv") {
        r.body = render_csv_rows(d);
      } else {
        r.body = render_text(d);
      }
    } catch (const Error& e) {
      r.error = e.what();
      // Inside a range, k of the wrong residue is skipped.
      r.usage_error = range.single || e.code() != ErrorCode::kBadResidue;
    }
    return r;
  });
  for (const auto& r : results) {
    if (r.usage_error) {
      std::cerr << "error: " << r.error << "\n";
      return kExitUsage;
    }
  }
  Output out(opt.out);
  if (opt.format == "csv") *out << "k,cycles,type,components,triangles\n";
  bool first = true;
  for (const auto& r : results) {
    if (!r.error.empty()) continue;
    if (!first && opt.format == "text") *out << "\n";
    *out << r.body;
    first = false;
  }
  return kExitOk;
}

std::string describe_failures(const cpsurf::VerificationReport& r) {
  std::ostringstream os;
  if (!r.disjoint) os << "  parts overlap\n";
  if (!r.covered) os << "  parts do not cover the 2-skeleton\n";
  for (const auto& p : r.parts) {
    if (p.pass()) continue;
    os << "  " << cpsurf::format_cycle_list(p.cycles) << ": predicted "
       << p.predicted.to_string() << ", ";
    if (p.computed) {
      os << "computed " << p.computed->type.to_string() << " with "
         << p.computed->component_count << " components";
    } else {
      os << "rejected: " << p.error;
    }
    if (!p.structure_ok) os << "; " << p.structure_note;
    os << "\n";
  }
  for (const auto& c : r.count_checks) {
    if (!c.pass()) {
      os << "  " << c.name << ": expected " << c.expected << ", got "
         << c.actual << "\n";
    }
  }
  return os.str();
}

int cmd_verify(const std::string& beta, const std::string& simplex,
               const Options& opt) {
  struct Line {
    std::string text;
    bool failed = false;
  };
  std::vector<Line> lines;
  auto run = [&](Ambient ambient, const std::string& range_text) {
    if (range_text.empty()) return;
    const auto name = std::string(to_string(ambient));
    const auto got = fan_out<Line>(parse_range(range_text), opt.jobs, [&](std::int64_t k) {
      Line line;
      const auto prefix = name + " k=" + std::to_string(k) + " ";
      try {
        const auto d = ambient == Ambient::kCrossPolytope
                           ? cpsurf::decompose_beta(k)
                           : cpsurf::decompose_simplex(k);
        const auto report = cpsurf::verify(d);
        if (report.passed()) {
          line.text = prefix + "PASS parts=" + std::to_string(d.parts.size()) +
                      " triangles=" + std::to_string(report.triangle_total) + "\n";
        } else {
          line.text = prefix + "FAIL\n" + describe_failures(report);
          line.failed = true;
        }
      } catch (const Error& e) {
        line.text = prefix + "SKIP " + e.what() + "\n";
      }
      return line;
    });
    lines.insert(lines.end(), got.begin(), got.end());
  };
  run(Ambient::kCrossPolytope, beta);
  run(Ambient::kSimplex, simplex);
  Output out(opt.out);
  bool failed = false;
  for (const auto& l : lines) {
    *out << l.text;
    failed = failed || l.failed;
  }
  return failed ? kExitFailed : kExitOk;
}

int cmd_census(const Options& opt) {
  const auto counts = fan_out<std::int64_t>(
      parse_range(opt.k), opt.jobs,
      [](std::int64_t k) { return cpsurf::count_cst_torus_types(k); });
  const Range range = parse_range(opt.k);
  Output out(opt.out);
  if (opt.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < counts.size(); ++i) {
      rows.push_back({{"k", range.lo + static_cast<std::int64_t>(i)},
                      {"types", counts[i]}});
    }
    *out << rows.dump(2) << "\n";
    return kExitOk;
  }
  *out << "k,types\n";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    *out << range.lo + static_cast<std::int64_t>(i) << "," << counts[i] << "\n";
  }
  return kExitOk;
}

int cmd_classify(const std::string& cycles, std::int64_t n,
                 const std::string& facets_path, const Options& opt) {
  cpsurf::Complex c;
  if (!facets_path.empty()) {
    std::ifstream in(facets_path);
    if (!in) throw Error(ErrorCode::kParseError, "cannot open " + facets_path);
    std::stringstream ss;
    ss << in.rdbuf();
    c = cpsurf::parse_facet_list(ss.str());
  } else {
    if (cycles.empty()) {
      throw Error(ErrorCode::kParseError, "need a cycle list or --facets");
    }
    const auto list = cpsurf::parse_cycle_list(cycles, n);
    if (list.empty()) throw Error(ErrorCode::kParseError, "empty cycle list");
    c = cpsurf::from_cycles(list, list.front().modulus());
  }
  cpsurf::SurfaceReport r;
  try {
    r = cpsurf::classify_surface(c);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotASurface) throw;
    std::cerr << "NotASurface: " << e.what() << "\n";
    return kExitRejected;
  }
  Output out(opt.out);
  if (opt.format == "json") {
    const nlohmann::json j = {{"euler", r.euler},
                              {"orientable", r.orientable},
                              {"components", r.component_count},
                              {"boundary_circles", r.boundary_circles},
                              {"vertices", r.vertex_count},
                              {"triangles", r.triangle_count},
                              {"type", r.type.to_string()}};
    *out << j.dump(2) << "\n";
  } else if (opt.format == "csv") {
    *out << "euler,orientable,components,boundary_circles,vertices,triangles,type\n"
         << r.euler << "," << (r.orientable ? "true" : "false") << ","
         << r.component_count << "," << r.boundary_circles << ","
         << r.vertex_count << "," << r.triangle_count << ","
         << csv_quote(r.type.to_string()) << "\n";
  } else {
    *out << "euler: " << r.euler << "\n"
         << "orientable: " << (r.orientable ? "true" : "false") << "\n"
         << "components: " << r.component_count << "\n"
         << "boundary_circles: " << r.boundary_circles << "\n"
         << "vertices: " << r.vertex_count << "\n"
         << "triangles: " << r.triangle_count << "\n"
         << "type: " << r.type.to_string() << "\n";
  }
  return kExitOk;
}

void add_common(CLI::App* cmd, Options& opt, bool needs_k) {
  if (needs_k) {
    cmd->add_option("--k", opt.k, "k or inclusive range a..b")->required();
  }
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", opt.out, "output path (default stdout)");
  cmd->add_option("--jobs", opt.jobs, "worker threads")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transitive surface decompositions of cross polytope and simplex 2-skeletons"};
  app.require_subcommand(1);
  Options opt;

  auto* beta = app.add_subcommand("beta", "decompose the cross polytope 2-skeleton");
  add_common(beta, opt, true);
  auto* simplex = app.add_subcommand("simplex", "decompose the simplex 2-skeleton");
  add_common(simplex, opt, true);

  std::string verify_beta;
  std::string verify_simplex;
  auto* verify = app.add_subcommand("verify", "recompute and check decompositions");
  verify->add_option("--beta", verify_beta, "range of k for the cross polytope");
  verify->add_option("--simplex", verify_simplex, "range of k for the simplex");
  add_common(verify, opt, false);

  auto* census = app.add_subcommand("census", "count torus types per k");
  add_common(census, opt, true);
  census->get_option("--format")->default_str("csv");

  std::string cycles;
  std::int64_t n = 0;
  std::string facets;
  auto* classify = app.add_subcommand("classify", "classify a complex");
  classify->add_option("cycles", cycles, "cycle list, e.g. \"(1:1:8),(4:4:2)\"");
  classify->add_option("--n", n, "number of vertices");
  classify->add_option("--facets", facets, "facet list file");
  add_common(classify, opt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*beta) return cmd_decompose(Ambient::kCrossPolytope, opt);
    if (*simplex) return cmd_decompose(Ambient::kSimplex, opt);
    if (*verify) return cmd_verify(verify_beta, verify_simplex, opt);
    if (*census) return cmd_census(opt);
    if (*classify) return cmd_classify(cycles, n, facets, opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kNotASurface ? kExitRejected : kExitUsage;
  }
  return kExitUsage;
}
