#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sscover/covering.hpp"
#include "sscover/instance.hpp"
#include "sscover/singularity.hpp"
#include "sscover/types.hpp"

namespace sscover {

/// Knobs shared by the classify / cover / verify pipeline stages.
struct PipelineOptions {
  int j = 0;           ///< 1-based coordinate, 0 = all coordinates
  int order = 2;       ///< 0, 1, or 2 = both
  double epsilon = 1.0;
  double delta = 1e-6;
  int samples = 48;    ///< tie-set samples per point pair
  double radius = 4.0;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  double fd_step = 1e-6;
  double normal_tol = 1e-6;
};

struct SurfaceFamily {
  std::string name;
  int j = 0;
  int order = 0;  ///< witness class this family covers (0 isotropic, 1 positive)
  std::vector<CcSurface> surfaces;
};

struct PlaneFamily {
  std::string name;
  int j = 0;
  std::vector<IsotropicHyperplane> planes;
};

struct CoverFamilies {
  std::vector<SurfaceFamily> surface_families;
  std::vector<PlaneFamily> plane_families;
};

struct FamilyReport {
  std::string name;
  CoverReport report;
};

struct VerifyOutcome {
  std::vector<SingularPoint> points;
  CoverFamilies families;
  std::vector<FamilyReport> family_reports;
  CoverReport aggregate;

  bool passed() const {
    return aggregate.covered == aggregate.total_points && aggregate.normal_failures == 0;
  }
};

inline std::vector<SingularPoint> run_classify(const Instance& inst,
                                               const PipelineOptions& opts) {
  return candidate_singular_points(inst.set, opts.samples, opts.radius, opts.seed,
                                   inst.tolerances.activity, inst.tolerances.isotropy);
}

inline CoverFamilies run_cover(const Instance& inst, const PipelineOptions& opts) {
  const int d = inst.set.dim();
  if (opts.j < 0 || opts.j > d) throw InputError("cover: coordinate out of range");
  std::vector<int> js;
  if (opts.j == 0) {
    for (int j = 1; j <= d; ++j) js.push_back(j);
  } else {
    js.push_back(opts.j);
  }
  CoverFamilies fams;
  for (int j : js) {
    if (opts.order == 1 || opts.order == 2) {
      SurfaceFamily f;
      f.name = "order1-j" + std::to_string(j);
      f.j = j;
      f.order = 1;
      f.surfaces = cover_positive_singularities(inst.set, j, opts.epsilon,
                                                inst.tolerances.isotropy);
      fams.surface_families.push_back(std::move(f));
    }
    if (opts.order == 0 || opts.order == 2) {
      SurfaceFamily f;
      f.name = "order0-j" + std::to_string(j);
      f.j = j;
      f.order = 0;
      f.surfaces = cover_isotropic_singularities(inst.set, j, opts.delta,
                                                 inst.tolerances.isotropy);
      fams.surface_families.push_back(std::move(f));
      if (inst.space().index() == 1) {
        PlaneFamily p;
        p.name = "lines-j" + std::to_string(j);
        p.j = j;
        p.planes = isotropic_hyperplanes(inst.set, j, inst.tolerances.isotropy);
        fams.plane_families.push_back(std::move(p));
      }
    }
  }
  return fams;
}

inline VerifyOutcome run_verify(const Instance& inst, const PipelineOptions& opts) {
  VerifyOutcome out;
  out.points = run_classify(inst, opts);
  out.families = run_cover(inst, opts);
  for (const SurfaceFamily& f : out.families.surface_families) {
    const PointFilter filter =
        witness_filter(f.order == 1 ? PairClass::kPositive : PairClass::kIsotropic, f.j);
    FamilyReport fr;
    fr.name = f.name;
    fr.report = verify_coverage(f.surfaces, out.points, filter, inst.tolerances.coverage,
                                opts.fd_step, opts.normal_tol);
    out.family_reports.push_back(std::move(fr));
  }
  for (const PlaneFamily& f : out.families.plane_families) {
    FamilyReport fr;
    fr.name = f.name;
    fr.report = verify_coverage(f.planes, out.points,
                                witness_filter(PairClass::kIsotropic, f.j),
                                inst.tolerances.coverage);
    out.family_reports.push_back(std::move(fr));
  }
  for (const FamilyReport& fr : out.family_reports) {
    out.aggregate.total_points += fr.report.total_points;
    out.aggregate.covered += fr.report.covered;
    out.aggregate.normal_failures += fr.report.normal_failures;
    out.aggregate.max_residual = std::max(out.aggregate.max_residual, fr.report.max_residual);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Emission. All writers are deterministic: fixed ordering, fixed layout, and
// doubles through format_double, so identical seeds produce identical bytes.

namespace detail {

inline std::string join_vec(const Vec& v, const char* sep = "|") {
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += format_double(v[i]);
  }
  return out;
}

inline std::string encode_pieces(const PolyConvexFn& g) {
  std::string out;
  for (int k = 0; k < g.size(); ++k) {
    if (k) out += ";";
    for (int i = 0; i < g.dim(); ++i) out += format_double(g.slopes()(k, i)) + "|";
    out += format_double(g.intercept(k));
  }
  return out;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write output file '" + path + "'");
  out << content;
}

}  // namespace detail

inline std::string points_to_csv(const std::vector<SingularPoint>& points, int dim) {
  std::ostringstream out;
  out << "id,order,j_indices,witnesses";
  for (int i = 1; i <= dim; ++i) out << ",x" << i;
  out << "\n";
  for (std::size_t id = 0; id < points.size(); ++id) {
    const SingularPoint& p = points[id];
    out << id << "," << p.order << ",";
    for (std::size_t i = 0; i < p.j_indices.size(); ++i) {
      if (i) out << "|";
      out << p.j_indices[i];
    }
    out << ",";
    for (std::size_t w = 0; w < p.witnesses.size(); ++w) {
      const PairWitness& pw = p.witnesses[w];
      if (w) out << ";";
      out << pw.a << ":" << pw.b << ":"
          << (pw.cls == PairClass::kPositive ? "P" : "I");
      for (std::size_t c = 0; c < pw.diff_coords.size(); ++c) {
        out << (c ? "|" : ":") << pw.diff_coords[c];
      }
    }
    for (int i = 0; i < p.location.size(); ++i) out << "," << format_double(p.location[i]);
    out << "\n";
  }
  return out.str();
}

inline std::string surfaces_to_csv(const CoverFamilies& fams) {
  std::ostringstream out;
  out << "family,id,j,precompose,g1,g2,normals\n";
  for (const SurfaceFamily& f : fams.surface_families) {
    for (std::size_t id = 0; id < f.surfaces.size(); ++id) {
      const CcSurface& s = f.surfaces[id];
      out << f.name << "," << id << "," << s.j << "," << (s.precompose ? 1 : 0) << ","
          << detail::encode_pieces(s.g1) << "," << detail::encode_pieces(s.g2) << ",";
      for (std::size_t n = 0; n < s.normal_set.size(); ++n) {
        if (n) out << ";";
        out << detail::join_vec(s.normal_set[n]);
      }
      out << "\n";
    }
  }
  // Hyperplane rows reuse the g1/g2 columns for anchor and direction.
  for (const PlaneFamily& f : fams.plane_families) {
    for (std::size_t id = 0; id < f.planes.size(); ++id) {
      const IsotropicHyperplane& h = f.planes[id];
      out << f.name << "," << id << "," << f.j << ",0," << detail::join_vec(h.anchor)
          << "," << detail::join_vec(h.direction) << "," << detail::join_vec(h.normal)
          << "|" << format_double(h.offset) << "\n";
    }
  }
  return out.str();
}

inline std::string report_to_json(const VerifyOutcome& outcome) {
  const auto clamp = [](double v) { return std::isfinite(v) ? v : 9e99; };
  std::ostringstream out;
  out << "{\n";
  out << "  \"total_points\": " << outcome.aggregate.total_points << ",\n";
  out << "  \"covered\": " << outcome.aggregate.covered << ",\n";
  out << "  \"max_residual\": " << format_double(clamp(outcome.aggregate.max_residual))
      << ",\n";
  out << "  \"normal_failures\": " << outcome.aggregate.normal_failures << ",\n";
  out << "  \"families\": [\n";
  for (std::size_t i = 0; i < outcome.family_reports.size(); ++i) {
    const FamilyReport& fr = outcome.family_reports[i];
    out << "    {\"name\": \"" << fr.name << "\", \"total_points\": "
        << fr.report.total_points << ", \"covered\": " << fr.report.covered
        << ", \"max_residual\": " << format_double(clamp(fr.report.max_residual))
        << ", \"normal_failures\": " << fr.report.normal_failures << "}"
        << (i + 1 < outcome.family_reports.size() ? "," : "") << "\n";
  }
  out << "  ]\n";
  out << "}\n";
  return out.str();
}

/// Executes one pipeline command against a loaded instance, emitting files
/// into opts.out_dir. Returns the process exit code: 0 on success, 2 when
/// verification fails. Input problems throw InputError (exit code 1 at the
/// CLI), internal assertion failures throw InternalError (exit code 3).
inline int run_pipeline(const Instance& inst, const std::string& command,
                        const PipelineOptions& opts, std::ostream& log) {
  namespace fs = std::filesystem;
  fs::create_directories(opts.out_dir);
  const auto path = [&](const char* name) { return (fs::path(opts.out_dir) / name).string(); };

  if (command == "check") {
    log << "ok: " << inst.set.size() << " points, dim " << inst.set.dim() << ", index "
        << inst.space().index() << "\n";
    return 0;
  }
  if (command == "classify") {
    const auto points = run_classify(inst, opts);
    detail::write_file(path("points.csv"), points_to_csv(points, inst.set.dim()));
    log << "singular points: " << points.size() << "\n";
    return 0;
  }
  if (command == "cover") {
    const CoverFamilies fams = run_cover(inst, opts);
    detail::write_file(path("surfaces.csv"), surfaces_to_csv(fams));
    std::size_t surfaces = 0;
    for (const auto& f : fams.surface_families) surfaces += f.surfaces.size();
    std::size_t planes = 0;
    for (const auto& f : fams.plane_families) planes += f.planes.size();
    log << "families: " << fams.surface_families.size() + fams.plane_families.size()
        << ", surfaces: " << surfaces << ", hyperplanes: " << planes << "\n";
    return 0;
  }
  if (command == "verify") {
    const VerifyOutcome outcome = run_verify(inst, opts);
    detail::write_file(path("points.csv"), points_to_csv(outcome.points, inst.set.dim()));
    detail::write_file(path("surfaces.csv"), surfaces_to_csv(outcome.families));
    detail::write_file(path("report.json"), report_to_json(outcome));
    for (const FamilyReport& fr : outcome.family_reports) {
      log << fr.name << ": " << fr.report.covered << "/" << fr.report.total_points
          << " covered, max residual " << fr.report.max_residual << ", normal failures "
          << fr.report.normal_failures << "\n";
    }
    log << (outcome.passed() ? "verify: PASS\n" : "verify: FAIL\n");
    return outcome.passed() ? 0 : 2;
  }
  throw InputError("unknown pipeline command '" + command + "'");
}

}  // namespace sscover
