#include "secform/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace secform {

using std::numbers::pi;

Grid::Grid(int nx_, int ny_, double Lx_, double Ly_) : nx(nx_), ny(ny_), Lx(Lx_), Ly(Ly_) {
  if (nx < 1 || ny < 1) throw domain_error("Grid: cell counts must be >= 1");
  if (!(Lx > 0.0) || !(Ly > 0.0)) throw domain_error("Grid: side lengths must be > 0");
}

double mu_coercivity(const Mu2& mu) {
  // Hermitian part [[a, b], [conj(b), d]]; eigenvalues (a+d)/2 -+ hypot.
  const double a = mu[0].real();
  const double d = mu[3].real();
  const cplx b = 0.5 * (mu[1] + std::conj(mu[2]));
  return 0.5 * (a + d) - std::hypot(0.5 * (a - d), std::abs(b));
}

double mu_norm(const Mu2& mu) {
  // Largest eigenvalue of mu^H mu, a 2x2 Hermitian matrix.
  const double g00 = std::norm(mu[0]) + std::norm(mu[2]);
  const double g11 = std::norm(mu[1]) + std::norm(mu[3]);
  const cplx g01 = std::conj(mu[0]) * mu[1] + std::conj(mu[2]) * mu[3];
  const double top = 0.5 * (g00 + g11) + std::hypot(0.5 * (g00 - g11), std::abs(g01));
  return std::sqrt(std::max(0.0, top));
}

namespace {

void require_elliptic(const Mu2& mu) {
  if (!(mu_coercivity(mu) > 0.0)) throw precondition_error("not elliptic");
}

Mu2 named_value(const std::string& name, double x, double y) {
  if (name == "identity") return {cplx{1.0}, cplx{0.0}, cplx{0.0}, cplx{1.0}};
  if (name == "swirl") {
    const double w = std::sin(pi * x) * std::sin(pi * y);
    return {cplx{1.0}, cplx{w}, cplx{-w}, cplx{1.0}};
  }
  if (name == "graded") return {cplx{1.0 + x}, cplx{0.0}, cplx{0.0}, cplx{1.0 + y}};
  throw domain_error("CoefficientField: unknown named field \"" + name + "\"");
}

}  // namespace

CoefficientField CoefficientField::constant(const Mu2& value) {
  for (const cplx& e : value)
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
      throw domain_error("CoefficientField: non-finite entry");
  require_elliptic(value);
  CoefficientField f;
  f.kind_ = "constant";
  f.values_ = {value};
  return f;
}

CoefficientField CoefficientField::per_cell(int nx, int ny, std::vector<Mu2> values) {
  if (nx < 1 || ny < 1) throw domain_error("CoefficientField: cell counts must be >= 1");
  if (values.size() != static_cast<std::size_t>(nx) * ny)
    throw domain_error("CoefficientField: expected one value per cell");
  for (const Mu2& v : values) {
    for (const cplx& e : v)
      if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
        throw domain_error("CoefficientField: non-finite entry");
    require_elliptic(v);
  }
  CoefficientField f;
  f.kind_ = "cells";
  f.nx_ = nx;
  f.ny_ = ny;
  f.values_ = std::move(values);
  return f;
}

CoefficientField CoefficientField::named(const std::string& name) {
  named_value(name, 0.5, 0.5);  // validates the name
  CoefficientField f;
  f.kind_ = "named";
  f.name_ = name;
  return f;
}

Mu2 CoefficientField::at(double x, double y, int cx, int cy) const {
  if (kind_ == "constant") return values_[0];
  if (kind_ == "cells") {
    if (cx < 0 || cx >= nx_ || cy < 0 || cy >= ny_)
      throw domain_error("CoefficientField: cell index outside the table");
    return values_[static_cast<std::size_t>(cy) * nx_ + cx];
  }
  return named_value(name_, x, y);
}

BoundarySpec BoundarySpec::all_dirichlet() {
  BoundarySpec bc;
  bc.left = bc.right = bc.bottom = bc.top = {{0.0, 1.0}};
  return bc;
}

BoundarySpec BoundarySpec::all_neumann() { return {}; }

namespace {

constexpr double kParamTol = 1e-12;

void validate_intervals(const BoundarySpec::Intervals& iv, const char* side) {
  for (const auto& [a, b] : iv)
    if (!(a >= -kParamTol) || !(b <= 1.0 + kParamTol) || !(a <= b))
      throw domain_error(std::string("BoundarySpec: bad interval on side ") + side);
}

bool marked(const BoundarySpec::Intervals& iv, double t) {
  for (const auto& [a, b] : iv)
    if (t >= a - kParamTol && t <= b + kParamTol) return true;
  return false;
}

}  // namespace

std::vector<int> dirichlet_nodes(const Grid& grid, const BoundarySpec& bc) {
  validate_intervals(bc.left, "left");
  validate_intervals(bc.right, "right");
  validate_intervals(bc.bottom, "bottom");
  validate_intervals(bc.top, "top");

  std::vector<int> out;
  for (int iy = 0; iy <= grid.ny; ++iy) {
    for (int ix = 0; ix <= grid.nx; ++ix) {
      const double tx = static_cast<double>(ix) / grid.nx;
      const double ty = static_cast<double>(iy) / grid.ny;
      bool d = false;
      if (ix == 0) d = d || marked(bc.left, ty);
      if (ix == grid.nx) d = d || marked(bc.right, ty);
      if (iy == 0) d = d || marked(bc.bottom, tx);
      if (iy == grid.ny) d = d || marked(bc.top, tx);
      if (d) out.push_back(grid.node_index(ix, iy));
    }
  }
  return out;
}

namespace {

struct Tri {
  std::array<int, 3> nodes;                    // global indices, counterclockwise
  std::array<std::array<double, 2>, 3> grad;   // hat-function gradients
  double area;
  double cx, cy;                               // centroid
};

// The two triangles of cell (cx, cy): (LL, LR, UR) below the diagonal and
// (LL, UR, UL) above it.
std::array<Tri, 2> cell_triangles(const Grid& g, int cx, int cy) {
  const double hx = g.hx(), hy = g.hy();
  const double x0 = hx * cx, y0 = hy * cy;
  const int ll = g.node_index(cx, cy);
  const int lr = g.node_index(cx + 1, cy);
  const int ul = g.node_index(cx, cy + 1);
  const int ur = g.node_index(cx + 1, cy + 1);

  auto make = [&](std::array<int, 3> nodes, std::array<std::array<double, 2>, 2> p) {
    // p holds vertices 1 and 2 relative to vertex 0 = LL at (x0, y0).
    const double x1 = p[0][0], y1 = p[0][1], x2 = p[1][0], y2 = p[1][1];
    const double twoA = x1 * y2 - x2 * y1;
    Tri t;
    t.nodes = nodes;
    t.grad[0] = {(y1 - y2) / twoA, (x2 - x1) / twoA};
    t.grad[1] = {y2 / twoA, -x2 / twoA};
    t.grad[2] = {-y1 / twoA, x1 / twoA};
    t.area = 0.5 * twoA;
    t.cx = x0 + (x1 + x2) / 3.0;
    t.cy = y0 + (y1 + y2) / 3.0;
    return t;
  };

  return {make({ll, lr, ur}, {{{hx, 0.0}, {hx, hy}}}),
          make({ll, ur, ul}, {{{hx, hy}, {0.0, hy}}})};
}

void accumulate_cell(const Grid& g, const CoefficientField& mu, int cx, int cy,
                     ComplexMatrix& A) {
  for (const Tri& t : cell_triangles(g, cx, cy)) {
    const Mu2 m = mu.at(t.cx, t.cy, cx, cy);
    if (mu.kind() == "named") require_elliptic(m);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        // (mu grad_j) . grad_i, gradients real
        const cplx v = m[0] * t.grad[j][0] * t.grad[i][0] + m[1] * t.grad[j][1] * t.grad[i][0] +
                       m[2] * t.grad[j][0] * t.grad[i][1] + m[3] * t.grad[j][1] * t.grad[i][1];
        A(t.nodes[i], t.nodes[j]) += t.area * v;
      }
    }
  }
}

AssembledForm finish(const Grid& grid, const CoefficientField& mu, const BoundarySpec& bc,
                     ComplexMatrix A_full) {
  AssembledForm form;
  form.grid = grid;
  form.field_angles = field_bounds(mu, grid);

  const std::vector<int> fixed = dirichlet_nodes(grid, bc);
  std::vector<char> is_fixed(grid.n_nodes(), 0);
  for (int i : fixed) is_fixed[i] = 1;
  for (int i = 0; i < grid.n_nodes(); ++i)
    if (!is_fixed[i]) form.free_nodes.push_back(i);

  const std::size_t nf = form.free_nodes.size();
  form.A = ComplexMatrix(nf);
  for (std::size_t i = 0; i < nf; ++i)
    for (std::size_t j = 0; j < nf; ++j)
      form.A(i, j) = A_full(form.free_nodes[i], form.free_nodes[j]);

  form.A_full = std::move(A_full);
  return form;
}

void check_table_fits(const Grid& grid, const CoefficientField& mu) {
  if (mu.kind() == "cells" && (mu.table_nx() != grid.nx || mu.table_ny() != grid.ny))
    throw domain_error("assemble: per-cell table does not match the grid");
}

}  // namespace

SectorAngles field_bounds(const CoefficientField& mu, const Grid& grid) {
  check_table_fits(grid, mu);
  double m = std::numeric_limits<double>::infinity();
  double M = 0.0;
  for (int cy = 0; cy < grid.ny; ++cy) {
    for (int cx = 0; cx < grid.nx; ++cx) {
      for (const Tri& t : cell_triangles(grid, cx, cy)) {
        const Mu2 v = mu.at(t.cx, t.cy, cx, cy);
        const double c = mu_coercivity(v);
        if (!(c > 0.0)) throw precondition_error("not elliptic");
        m = std::min(m, c);
        M = std::max(M, mu_norm(v));
      }
    }
  }
  return make_sector_angles(m, M);
}

AssembledForm assemble(const Grid& grid, const CoefficientField& mu, const BoundarySpec& bc) {
  check_table_fits(grid, mu);
  ComplexMatrix A(grid.n_nodes());

  // Parity coloring: same-color cells share no node, so cells of one color
  // write disjoint entries and each entry sees a fixed color order. The
  // result is bit-identical for any thread count.
  for (int color = 0; color < 4; ++color) {
    const int px = color & 1, py = color >> 1;
    std::vector<std::pair<int, int>> cells;
    for (int cy = py; cy < grid.ny; cy += 2)
      for (int cx = px; cx < grid.nx; cx += 2) cells.emplace_back(cx, cy);
#pragma omp parallel for schedule(static)
    for (std::size_t k = 0; k < cells.size(); ++k)
      accumulate_cell(grid, mu, cells[k].first, cells[k].second, A);
  }
  return finish(grid, mu, bc, std::move(A));
}

AssembledForm assemble_serial(const Grid& grid, const CoefficientField& mu,
                              const BoundarySpec& bc) {
  check_table_fits(grid, mu);
  ComplexMatrix A(grid.n_nodes());
  for (int cy = 0; cy < grid.ny; ++cy)
    for (int cx = 0; cx < grid.nx; ++cx) accumulate_cell(grid, mu, cx, cy, A);
  return finish(grid, mu, bc, std::move(A));
}

ComplexVector interpolate(const Grid& grid, const std::function<cplx(double, double)>& f) {
  ComplexVector u(grid.n_nodes());
  for (int iy = 0; iy <= grid.ny; ++iy)
    for (int ix = 0; ix <= grid.nx; ++ix)
      u[grid.node_index(ix, iy)] = f(grid.node_x(ix), grid.node_y(iy));
  return u;
}

cplx form_value(const AssembledForm& form, const ComplexVector& u) {
  if (u.size() != static_cast<std::size_t>(form.grid.n_nodes()))
    throw domain_error("form_value: u must live on all nodes");
  return dot(matvec(form.A_full, u), u);
}

}  // namespace secform
