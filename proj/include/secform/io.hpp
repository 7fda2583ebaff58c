#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "secform/elliptic.hpp"
#include "secform/fov.hpp"
#include "secform/resolvent.hpp"
#include "secform/types.hpp"

namespace secform {

/// %.17g rendering: enough significant digits to round-trip a double.
std::string format_g17(double v);

/// Writes content to path via a temp file in the same directory plus rename,
/// so readers never observe a partial file.
void atomic_write_file(const std::string& path, const std::string& content);

/// Parses a JSON file; IO and syntax problems raise domain_error.
nlohmann::json load_json(const std::string& path);

/// Matrix JSON: {"n": int, "entries": [[re, im], ...]} row-major, length n^2.
nlohmann::json matrix_to_json(const ComplexMatrix& M);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

ComplexMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const ComplexMatrix& M);

/// Problem config JSON:
///   {"grid": {"nx", "ny", "Lx", "Ly"},
///    "mu": {"kind": "constant"|"cells"|"named", ...},
///    "dirichlet": {"left": [[a,b],...], "right": ..., "bottom": ..., "top": ...}}
/// mu payloads: constant -> "entries": 4 [re,im] pairs row-major;
/// cells -> "entries": one 4-pair list per cell, row-major cells;
/// named -> "name". Absent dirichlet sides have no Dirichlet part.
struct ProblemConfig {
  Grid grid;
  CoefficientField mu = CoefficientField::named("identity");
  BoundarySpec bc;
};

ProblemConfig problem_from_json(const nlohmann::json& j);
ProblemConfig load_problem(const std::string& path);

/// CSV emitters, 17 significant digits throughout.
std::string fov_csv(const FovBoundary& fov);                 // phi,support,re,im
std::string scan_csv(const ResolventScan& scan);             // re_lambda,im_lambda,resolvent_norm,bound
std::string angles_csv(const SectorAngles& a, const std::vector<double>& p_list);

/// Parses a numeric CSV written by the emitters above.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};
CsvTable parse_csv(const std::string& text);

/// Report payloads.
nlohmann::json containment_report_json(const SectorContainmentReport& r);
nlohmann::json scan_report_json(const ResolventScan& s);
nlohmann::json calculus_report_json(const RationalCalculusReport& r, double shift);

/// FoV plot: boundary polygon with the sharp-angle and classical-angle rays.
std::string fov_svg(const FovBoundary& fov, double kappa, double classical);

}  // namespace secform
