#include "secform/cli.hpp"

#include <cmath>
#include <filesystem>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "secform/acceptance.hpp"
#include "secform/eig.hpp"
#include "secform/elliptic.hpp"
#include "secform/fov.hpp"
#include "secform/io.hpp"
#include "secform/resolvent.hpp"
#include "secform/sector.hpp"

namespace secform {

namespace {

namespace fs = std::filesystem;
using std::numbers::pi;

std::vector<double> parse_p_list(const std::string& s) {
  std::vector<double> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw domain_error("--p: cannot parse \"" + item + "\"");
    }
  }
  return out;
}

std::vector<double> parse_radii(const std::string& s) {
  double lo = 0.0, hi = 0.0;
  int count = 0;
  char colon1 = 0, colon2 = 0;
  std::istringstream in(s);
  if (!(in >> lo >> colon1 >> hi >> colon2 >> count) || colon1 != ':' || colon2 != ':' ||
      !in.eof())
    throw domain_error("--radii: expected MIN:MAX:COUNT, got \"" + s + "\"");
  return log_spaced(lo, hi, count);
}

fs::path prepare_out_dir(const std::string& out_dir) {
  fs::path p = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw domain_error("cannot create output directory " + p.string());
  return p;
}

struct Options {
  // angles
  double m = 0.0, M = 0.0;
  std::string p_list;
  // fov / calculus / resolvent inputs
  std::string input_path;
  double theta = 0.0;
  bool theta_set = false;
  int n_angles = 720;
  int n_rays = 9;
  std::string radii = "1e-2:1e4:12";
  std::string f_id = "z/(1+z)^2";
  double eps = 0.05;
  bool eps_set = false;
  std::uint64_t seed = 12345;
  std::string out_dir;
};

int cmd_angles(const Options& o, std::ostream& out) {
  const SectorAngles a = make_sector_angles(o.m, o.M);
  const std::vector<double> ps = parse_p_list(o.p_list);
  for (double p : ps) kappa_p(a.kappa, p);  // validate before emitting
  const std::string csv = angles_csv(a, ps);
  out << csv;
  if (!o.out_dir.empty())
    atomic_write_file((prepare_out_dir(o.out_dir) / "angles.csv").string(), csv);
  return 0;
}

int cmd_fov(const Options& o, std::ostream& out) {
  const ComplexMatrix T = load_matrix(o.input_path);
  const double m = coercivity_constant(T);
  const double t_norm = operator_norm(T);

  double theta = o.theta;
  if (!o.theta_set) {
    if (!(m > 0.0))
      throw precondition_error("matrix is not coercive; pass --theta explicitly");
    theta = std::atan(std::sqrt(std::max(0.0, t_norm * t_norm - m * m)) / m);
  }
  const double classical = m > 0.0 ? classical_angle(m, t_norm) : theta;

  const FovBoundary fov = fov_boundary(T, o.n_angles);
  SectorContainmentReport rep;
  rep.max_arg = minimal_enclosing_angle(fov.points);
  rep.theta = theta;
  rep.pass = rep.max_arg <= theta + 1e-8;

  bool oracle_inside = true;
  const double tol = 1e-8 * t_norm;
  for (const cplx& z : brute_force_fov_sample(T, 200, o.seed))
    oracle_inside = oracle_inside && hull_contains(fov, z, tol);

  const fs::path dir = prepare_out_dir(o.out_dir);
  atomic_write_file((dir / "boundary.csv").string(), fov_csv(fov));
  atomic_write_file((dir / "fov.svg").string(), fov_svg(fov, theta, classical));
  nlohmann::json rj = containment_report_json(rep);
  rj["oracle_inside"] = oracle_inside;
  rj["seed"] = o.seed;
  atomic_write_file((dir / "report.json").string(), rj.dump(2) + "\n");

  const bool ok = rep.pass && oracle_inside;
  out << "max_arg " << format_g17(rep.max_arg) << ", theta " << format_g17(theta) << ": "
      << (ok ? "pass" : "FAIL") << "\nwrote boundary.csv, fov.svg, report.json to "
      << dir.string() << "\n";
  return ok ? 0 : 1;
}

int cmd_assemble(const Options& o, std::ostream& out) {
  const ProblemConfig cfg = load_problem(o.input_path);
  const AssembledForm form = assemble(cfg.grid, cfg.mu, cfg.bc);

  const fs::path dir = prepare_out_dir(o.out_dir);
  atomic_write_file((dir / "matrix.json").string(), matrix_to_json(form.A).dump() + "\n");
  atomic_write_file((dir / "angles.csv").string(), angles_csv(form.field_angles, {}));

  const SectorAngles& a = form.field_angles;
  out << "nodes " << form.grid.n_nodes() << ", free " << form.free_nodes.size() << ", m "
      << format_g17(a.m) << ", M " << format_g17(a.M) << ", kappa " << format_g17(a.kappa)
      << "\nwrote matrix.json, angles.csv to " << dir.string() << "\n";
  return 0;
}

int cmd_resolvent(const Options& o, std::ostream& out) {
  const ProblemConfig cfg = load_problem(o.input_path);
  const AssembledForm form = assemble(cfg.grid, cfg.mu, cfg.bc);
  const double theta =
      o.theta_set ? o.theta : std::min(form.field_angles.kappa + 0.3, pi / 2.0);
  const std::vector<double> radii = parse_radii(o.radii);

  const ResolventScan scan = ray_scan(form, theta, o.n_rays, radii);

  const fs::path dir = prepare_out_dir(o.out_dir);
  atomic_write_file((dir / "scan.csv").string(), scan_csv(scan));
  atomic_write_file((dir / "report.json").string(), scan_report_json(scan).dump(2) + "\n");

  out << "theta " << format_g17(scan.theta) << ", constant "
      << format_g17(scan.bound_constant) << ", max violation "
      << format_g17(scan.max_violation) << ": " << (scan.pass ? "pass" : "FAIL")
      << "\nwrote scan.csv, report.json to " << dir.string() << "\n";
  return scan.pass ? 0 : 1;
}

int cmd_calculus(const Options& o, std::ostream& out) {
  const nlohmann::json j = load_json(o.input_path);

  ComplexMatrix A;
  double kappa = 0.0;
  double shift = 0.0;
  if (j.contains("grid")) {
    const ProblemConfig cfg = problem_from_json(j);
    const AssembledForm form = assemble(cfg.grid, cfg.mu, cfg.bc);
    if (form.A.size() == 0) throw precondition_error("no free nodes");
    kappa = form.field_angles.kappa;
    A = form.A;
    if (form.free_nodes.size() == static_cast<std::size_t>(form.grid.n_nodes())) {
      // No Dirichlet part: constants are in the kernel, shift off zero.
      shift = 1.0;
      for (std::size_t i = 0; i < A.size(); ++i) A(i, i) += shift;
    }
  } else {
    A = matrix_from_json(j);
    kappa = containment_half_angle(A);
  }

  const double eps = o.eps_set ? o.eps : std::min(o.eps, 0.5 * (pi / 2.0 - kappa));
  const RationalCalculusReport rep = rational_calculus_check(A, kappa, eps, o.f_id);

  const fs::path dir = prepare_out_dir(o.out_dir);
  atomic_write_file((dir / "report.json").string(),
                    calculus_report_json(rep, shift).dump(2) + "\n");

  out << "f " << rep.f_id << ", lhs " << format_g17(rep.lhs) << ", rhs "
      << format_g17(rep.rhs) << ", shift " << format_g17(shift) << ": "
      << (rep.pass ? "pass" : "FAIL") << "\nwrote report.json to " << dir.string() << "\n";
  return rep.pass ? 0 : 1;
}

int cmd_selftest(std::ostream& out) {
  const auto results = acceptance::run_all(out);
  const bool ok = acceptance::all_passed(results);
  out << (ok ? "all criteria passed\n" : "FAILURES present\n");
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"sector angles, numerical ranges and resolvent bounds of sesquilinear forms"};
  app.require_subcommand(1);
  Options o;

  CLI::App* angles = app.add_subcommand("angles", "angle table from coercivity m and bound M");
  angles->add_option("m", o.m, "coercivity constant")->required();
  angles->add_option("M", o.M, "uniform bound")->required();
  angles->add_option("--p", o.p_list, "comma-separated exponents for interpolated angles");
  angles->add_option("--out", o.out_dir, "also write angles.csv here");

  CLI::App* fov = app.add_subcommand("fov", "numerical range boundary of a matrix");
  fov->add_option("matrix", o.input_path, "matrix JSON path")->required();
  fov->add_option("--theta", o.theta, "sector half-angle to verify (default: the angle the"
                                      " coercivity and norm of the matrix induce)");
  fov->add_option("--n-angles", o.n_angles, "support directions (default 720)");
  fov->add_option("--seed", o.seed, "seed for the random-vector oracle");
  fov->add_option("--out", o.out_dir, "output directory (default .)");

  CLI::App* assemble = app.add_subcommand("assemble", "assemble a form from a problem config");
  assemble->add_option("config", o.input_path, "problem config JSON path")->required();
  assemble->add_option("--out", o.out_dir, "output directory (default .)");

  CLI::App* resolvent =
      app.add_subcommand("resolvent", "resolvent-norm ray scan of an assembled form");
  resolvent->add_option("config", o.input_path, "problem config JSON path")->required();
  resolvent->add_option("--theta", o.theta, "ray-sector angle (default: field angle + 0.3)");
  resolvent->add_option("--n-rays", o.n_rays, "number of rays (default 9)");
  resolvent->add_option("--radii", o.radii, "MIN:MAX:COUNT log-spaced (default 1e-2:1e4:12)");
  resolvent->add_option("--out", o.out_dir, "output directory (default .)");

  CLI::App* calculus =
      app.add_subcommand("calculus", "rational functional-calculus bound check");
  calculus->add_option("input", o.input_path, "problem config or matrix JSON path")
      ->required();
  calculus->add_option("--f", o.f_id, "function id (default z/(1+z)^2)");
  calculus->add_option("--eps", o.eps, "sector widening angle (default 0.05)");
  calculus->add_option("--out", o.out_dir, "output directory (default .)");

  CLI::App* selftest = app.add_subcommand("selftest", "run the full verification suite");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("secform");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  o.theta_set = (fov->count("--theta") + resolvent->count("--theta")) > 0;
  o.eps_set = calculus->count("--eps") > 0;

  try {
    if (*angles) return cmd_angles(o, out);
    if (*fov) return cmd_fov(o, out);
    if (*assemble) return cmd_assemble(o, out);
    if (*resolvent) return cmd_resolvent(o, out);
    if (*calculus) return cmd_calculus(o, out);
    if (*selftest) return cmd_selftest(out);
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace secform
