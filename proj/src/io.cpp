#include "secform/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace secform {

using nlohmann::json;

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void atomic_write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw domain_error("cannot open for writing: " + tmp);
    out << content;
    if (!out.flush()) throw domain_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw domain_error("cannot rename into place: " + path);
}

json matrix_to_json(const ComplexMatrix& M) {
  json entries = json::array();
  for (const cplx& e : M.entries()) entries.push_back({e.real(), e.imag()});
  return json{{"n", M.size()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  try {
    const std::size_t n = j.at("n").get<std::size_t>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != n * n)
      throw domain_error("matrix JSON: entries length must be n^2");
    std::vector<cplx> a;
    a.reserve(entries.size());
    for (const json& e : entries) {
      if (!e.is_array() || e.size() != 2)
        throw domain_error("matrix JSON: each entry must be [re, im]");
      a.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return ComplexMatrix(n, std::move(a));
  } catch (const json::exception& ex) {
    throw domain_error(std::string("matrix JSON: ") + ex.what());
  }
}

json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw domain_error("cannot open: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw domain_error("malformed JSON in " + path + ": " + ex.what());
  }
}

ComplexMatrix load_matrix(const std::string& path) {
  return matrix_from_json(load_json(path));
}

void save_matrix(const std::string& path, const ComplexMatrix& M) {
  atomic_write_file(path, matrix_to_json(M).dump(2) + "\n");
}

namespace {

Mu2 mu2_from_json(const json& e) {
  if (!e.is_array() || e.size() != 4)
    throw domain_error("mu entries: expected 4 [re, im] pairs");
  Mu2 m;
  for (std::size_t k = 0; k < 4; ++k) {
    if (!e[k].is_array() || e[k].size() != 2)
      throw domain_error("mu entries: each entry must be [re, im]");
    m[k] = cplx(e[k][0].get<double>(), e[k][1].get<double>());
  }
  return m;
}

BoundarySpec::Intervals intervals_from_json(const json& side) {
  BoundarySpec::Intervals iv;
  if (!side.is_array()) throw domain_error("dirichlet side: expected a list of [a, b]");
  for (const json& p : side) {
    if (!p.is_array() || p.size() != 2)
      throw domain_error("dirichlet side: each interval must be [a, b]");
    iv.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return iv;
}

}  // namespace

ProblemConfig problem_from_json(const json& j) {
  try {
    const json& g = j.at("grid");
    ProblemConfig cfg;
    cfg.grid = Grid(g.at("nx").get<int>(), g.at("ny").get<int>(), g.at("Lx").get<double>(),
                    g.at("Ly").get<double>());

    const json& mu = j.at("mu");
    const std::string kind = mu.at("kind").get<std::string>();
    if (kind == "constant") {
      cfg.mu = CoefficientField::constant(mu2_from_json(mu.at("entries")));
    } else if (kind == "cells") {
      const json& entries = mu.at("entries");
      if (!entries.is_array()) throw domain_error("mu cells: entries must be a list");
      std::vector<Mu2> values;
      values.reserve(entries.size());
      for (const json& e : entries) values.push_back(mu2_from_json(e));
      cfg.mu = CoefficientField::per_cell(cfg.grid.nx, cfg.grid.ny, std::move(values));
    } else if (kind == "named") {
      cfg.mu = CoefficientField::named(mu.at("name").get<std::string>());
    } else {
      throw domain_error("mu kind must be constant, cells or named");
    }

    if (j.contains("dirichlet")) {
      const json& d = j.at("dirichlet");
      if (d.contains("left")) cfg.bc.left = intervals_from_json(d.at("left"));
      if (d.contains("right")) cfg.bc.right = intervals_from_json(d.at("right"));
      if (d.contains("bottom")) cfg.bc.bottom = intervals_from_json(d.at("bottom"));
      if (d.contains("top")) cfg.bc.top = intervals_from_json(d.at("top"));
    }
    return cfg;
  } catch (const json::exception& ex) {
    throw domain_error(std::string("problem config: ") + ex.what());
  }
}

ProblemConfig load_problem(const std::string& path) {
  return problem_from_json(load_json(path));
}

std::string fov_csv(const FovBoundary& fov) {
  std::string out = "phi,support,re,im\n";
  for (std::size_t k = 0; k < fov.angles.size(); ++k) {
    out += format_g17(fov.angles[k]) + ',' + format_g17(fov.support[k]) + ',' +
           format_g17(fov.points[k].real()) + ',' + format_g17(fov.points[k].imag()) + '\n';
  }
  return out;
}

std::string scan_csv(const ResolventScan& scan) {
  std::string out = "re_lambda,im_lambda,resolvent_norm,bound\n";
  for (std::size_t i = 0; i < scan.lambdas.size(); ++i) {
    const double bound = scan.bound_constant / std::abs(scan.lambdas[i]);
    out += format_g17(scan.lambdas[i].real()) + ',' + format_g17(scan.lambdas[i].imag()) +
           ',' + format_g17(scan.norms[i]) + ',' + format_g17(bound) + '\n';
  }
  return out;
}

std::string angles_csv(const SectorAngles& a, const std::vector<double>& p_list) {
  std::string out = "quantity,value\n";
  out += "m," + format_g17(a.m) + '\n';
  out += "M," + format_g17(a.M) + '\n';
  out += "classical," + format_g17(a.classical) + '\n';
  out += "kappa," + format_g17(a.kappa) + '\n';
  for (double p : p_list)
    out += "kappa_p(" + format_g17(p) + ")," + format_g17(kappa_p(a.kappa, p)) + '\n';
  return out;
}

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    if (first) {
      while (std::getline(ls, cell, ',')) t.header.push_back(cell);
      first = false;
      continue;
    }
    std::vector<double> row;
    while (std::getline(ls, cell, ',')) {
      // label cells (first column of angles tables) parse as NaN
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        row.push_back(std::numeric_limits<double>::quiet_NaN());
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

json containment_report_json(const SectorContainmentReport& r) {
  return json{{"max_arg", r.max_arg}, {"theta", r.theta}, {"pass", r.pass}};
}

json scan_report_json(const ResolventScan& s) {
  return json{{"theta", s.theta},
              {"constant", s.bound_constant},
              {"max_violation", s.max_violation},
              {"pass", s.pass}};
}

json calculus_report_json(const RationalCalculusReport& r, double shift) {
  return json{{"f", r.f_id},     {"kappa", r.kappa}, {"eps", r.eps}, {"lhs", r.lhs},
              {"rhs", r.rhs},    {"shift", shift},   {"pass", r.pass}};
}

namespace {

std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string fov_svg(const FovBoundary& fov, double kappa, double classical) {
  // Data bounds over boundary points and the origin.
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  for (const cplx& p : fov.points) {
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  }
  const double spanx = std::max(xmax - xmin, 1e-12);
  const double spany = std::max(ymax - ymin, 1e-12);
  const double pad = 0.08 * std::max(spanx, spany);
  xmin -= pad, xmax += pad, ymin -= pad, ymax += pad;

  const double W = 640.0, H = 640.0;
  const double sx = W / (xmax - xmin), sy = H / (ymax - ymin);
  auto px = [&](double x) { return (x - xmin) * sx; };
  auto py = [&](double y) { return H - (y - ymin) * sy; };  // y up

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes
  out << "<line x1=\"" << svg_num(px(xmin)) << "\" y1=\"" << svg_num(py(0)) << "\" x2=\""
      << svg_num(px(xmax)) << "\" y2=\"" << svg_num(py(0))
      << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << svg_num(px(0)) << "\" y1=\"" << svg_num(py(ymin)) << "\" x2=\""
      << svg_num(px(0)) << "\" y2=\"" << svg_num(py(ymax))
      << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

  // sector rays from the origin, clipped by length
  const double ray_len = 2.0 * std::hypot(xmax - xmin, ymax - ymin);
  auto ray = [&](double angle, const char* color, const char* dash) {
    out << "<line x1=\"" << svg_num(px(0)) << "\" y1=\"" << svg_num(py(0)) << "\" x2=\""
        << svg_num(px(ray_len * std::cos(angle))) << "\" y2=\""
        << svg_num(py(ray_len * std::sin(angle))) << "\" stroke=\"" << color
        << "\" stroke-width=\"1.5\"" << dash << "/>\n";
  };
  ray(kappa, "#d62728", "");
  ray(-kappa, "#d62728", "");
  ray(classical, "#7f7f7f", " stroke-dasharray=\"6 4\"");
  ray(-classical, "#7f7f7f", " stroke-dasharray=\"6 4\"");

  // boundary polygon
  out << "<polygon points=\"";
  for (const cplx& p : fov.points) out << svg_num(px(p.real())) << ',' << svg_num(py(p.imag())) << ' ';
  out << "\" fill=\"#1f77b422\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";

  out << "<text x=\"12\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">"
         "numerical range boundary; solid rays: sharp angle, dashed: classical</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace secform
