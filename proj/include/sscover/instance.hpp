#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sscover/monotone.hpp"
#include "sscover/pseudo_space.hpp"
#include "sscover/types.hpp"

namespace sscover {

/// Shortest exact decimal: 17 significant digits round-trip any double.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

struct Tolerances {
  double activity = 1e-9;
  double isotropy = 1e-9;
  double coverage = 1e-8;
};

/// A problem instance: the space, the monotone set, and the tolerances the
/// pipeline runs with.
struct Instance {
  MonotoneSet set;
  Tolerances tolerances;

  const ScalarProduct& space() const { return set.space(); }
};

namespace detail {

inline double require_number(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number()) throw InputError("instance: field '" + where + "' must be a number");
  return j.get<double>();
}

inline int require_int(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) {
    throw InputError("instance: field '" + where + "' must be an integer");
  }
  return j.get<int>();
}

}  // namespace detail

inline Instance parse_instance(const std::string& text, const std::string& origin) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(origin + ": " + e.what());
  }
  if (!doc.is_object()) throw InputError(origin + ": top-level value must be an object");
  for (const char* field : {"dim", "index", "S", "G"}) {
    if (!doc.contains(field)) {
      throw InputError(origin + ": missing field '" + field + "'");
    }
  }
  const int dim = detail::require_int(doc["dim"], "dim");
  const int index = detail::require_int(doc["index"], "index");
  if (dim < 1) throw InputError(origin + ": field 'dim' must be positive");

  const auto& sj = doc["S"];
  if (!sj.is_array() || static_cast<int>(sj.size()) != dim) {
    throw InputError(origin + ": field 'S' must be a " + std::to_string(dim) + "-row array");
  }
  Mat s(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (!sj[i].is_array() || static_cast<int>(sj[i].size()) != dim) {
      throw InputError(origin + ": field 'S', row " + std::to_string(i) +
                       " must hold " + std::to_string(dim) + " numbers");
    }
    for (int k = 0; k < dim; ++k) {
      s(i, k) = detail::require_number(sj[i][k], "S[" + std::to_string(i) + "][" +
                                                    std::to_string(k) + "]");
    }
  }

  const auto& gj = doc["G"];
  if (!gj.is_array() || gj.empty()) {
    throw InputError(origin + ": field 'G' must be a nonempty array of points");
  }
  std::vector<Vec> points;
  for (std::size_t i = 0; i < gj.size(); ++i) {
    if (!gj[i].is_array() || static_cast<int>(gj[i].size()) != dim) {
      throw InputError(origin + ": field 'G', point " + std::to_string(i) +
                       " must hold " + std::to_string(dim) + " numbers");
    }
    Vec p(dim);
    for (int k = 0; k < dim; ++k) {
      p[k] = detail::require_number(gj[i][k], "G[" + std::to_string(i) + "][" +
                                                  std::to_string(k) + "]");
    }
    points.push_back(std::move(p));
  }

  Tolerances tol;
  if (doc.contains("tolerances")) {
    const auto& tj = doc["tolerances"];
    if (!tj.is_object()) throw InputError(origin + ": field 'tolerances' must be an object");
    if (tj.contains("activity")) tol.activity = detail::require_number(tj["activity"], "tolerances.activity");
    if (tj.contains("isotropy")) tol.isotropy = detail::require_number(tj["isotropy"], "tolerances.isotropy");
    if (tj.contains("coverage")) tol.coverage = detail::require_number(tj["coverage"], "tolerances.coverage");
  }
  if (tol.activity <= 0 || tol.isotropy <= 0 || tol.coverage <= 0) {
    throw InputError(origin + ": tolerances must be positive");
  }

  ScalarProduct space(dim, s, index);  // reports asymmetric / singular matrices
  MonotoneSet set(std::move(space), std::move(points), tol.isotropy);
  return Instance{std::move(set), tol};
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), path);
}

/// Canonical serialization: fixed key order, two-space indent, and doubles
/// written with 17 significant digits, so load followed by save reproduces a
/// canonically formatted file byte for byte.
inline std::string instance_to_json(const Instance& inst) {
  const ScalarProduct& sp = inst.space();
  std::ostringstream out;
  out << "{\n";
  out << "  \"dim\": " << sp.dim() << ",\n";
  out << "  \"index\": " << sp.index() << ",\n";
  out << "  \"S\": [\n";
  for (int i = 0; i < sp.dim(); ++i) {
    out << "    [";
    for (int k = 0; k < sp.dim(); ++k) {
      out << (k ? ", " : "") << format_double(sp.matrix()(i, k));
    }
    out << (i + 1 < sp.dim() ? "],\n" : "]\n");
  }
  out << "  ],\n";
  out << "  \"G\": [\n";
  for (int i = 0; i < inst.set.size(); ++i) {
    out << "    [";
    for (int k = 0; k < sp.dim(); ++k) {
      out << (k ? ", " : "") << format_double(inst.set.point(i)[k]);
    }
    out << (i + 1 < inst.set.size() ? "],\n" : "]\n");
  }
  out << "  ],\n";
  out << "  \"tolerances\": {\n";
  out << "    \"activity\": " << format_double(inst.tolerances.activity) << ",\n";
  out << "    \"isotropy\": " << format_double(inst.tolerances.isotropy) << ",\n";
  out << "    \"coverage\": " << format_double(inst.tolerances.coverage) << "\n";
  out << "  }\n";
  out << "}\n";
  return out.str();
}

inline void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write instance file '" + path + "'");
  out << instance_to_json(inst);
}

}  // namespace sscover
