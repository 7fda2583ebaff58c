#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "secform/sector.hpp"
#include "secform/types.hpp"

namespace secform {

/// Rectangle [0,Lx] x [0,Ly] split into nx*ny cells, each cell split into
/// two right triangles by the diagonal from lower-left to upper-right.
/// Nodes are numbered row-major with x fastest: node(ix,iy) = iy*(nx+1)+ix.
struct Grid {
  int nx = 1;
  int ny = 1;
  double Lx = 1.0;
  double Ly = 1.0;

  Grid() = default;
  Grid(int nx_, int ny_, double Lx_, double Ly_);

  int n_nodes() const { return (nx + 1) * (ny + 1); }
  int n_cells() const { return nx * ny; }
  int n_triangles() const { return 2 * nx * ny; }
  double hx() const { return Lx / nx; }
  double hy() const { return Ly / ny; }
  int node_index(int ix, int iy) const { return iy * (nx + 1) + ix; }
  double node_x(int ix) const { return hx() * ix; }
  double node_y(int iy) const { return hy() * iy; }
};

/// 2x2 coefficient matrix, row-major: {m00, m01, m10, m11}.
using Mu2 = std::array<cplx, 4>;

/// Coefficient field mu on the rectangle. Three kinds:
///   constant  - a single 2x2 matrix everywhere;
///   cells     - one matrix per grid cell (both triangles of a cell share it);
///   named     - closed form, evaluated at triangle centroids:
///                 "identity"  I
///                 "swirl"     I + w(x,y) [[0,1],[-1,0]], w = sin(pi x) sin(pi y)
///                 "graded"    diag(1 + x, 1 + y)
/// Table kinds check coercivity (lambda_min of the Hermitian part > 0) at
/// construction; named fields are checked at every evaluation point during
/// assembly. Violations raise precondition_error("not elliptic").
class CoefficientField {
public:
  static CoefficientField constant(const Mu2& value);
  static CoefficientField per_cell(int nx, int ny, std::vector<Mu2> values);
  static CoefficientField named(const std::string& name);

  /// Value on the triangle with centroid (x, y) inside cell (cx, cy).
  Mu2 at(double x, double y, int cx, int cy) const;

  const std::string& kind() const { return kind_; }
  const std::string& name() const { return name_; }

  /// Cell dimensions a per-cell table was built for; 0 for other kinds.
  int table_nx() const { return nx_; }
  int table_ny() const { return ny_; }

private:
  CoefficientField() = default;

  std::string kind_;
  std::string name_;
  int nx_ = 0, ny_ = 0;
  std::vector<Mu2> values_;
};

/// Smallest eigenvalue of the Hermitian part of a 2x2 matrix.
double mu_coercivity(const Mu2& mu);

/// Largest singular value of a 2x2 matrix.
double mu_norm(const Mu2& mu);

/// Dirichlet part of the boundary: per side, closed parameter intervals
/// inside [0,1]. Side parametrizations: bottom/top run with x/Lx, left/right
/// with y/Ly. A node is Dirichlet when its parameter lies in a marked
/// interval of any side it belongs to (tolerance 1e-12).
struct BoundarySpec {
  using Intervals = std::vector<std::array<double, 2>>;
  Intervals left, right, bottom, top;

  static BoundarySpec all_dirichlet();
  static BoundarySpec all_neumann();
};

/// Node indices clamped by the Dirichlet part, ascending.
std::vector<int> dirichlet_nodes(const Grid& grid, const BoundarySpec& bc);

/// Discrete form a[u,v] = sum_tri area (mu grad u) . grad v on P1 elements.
/// A_full acts on all nodes; A is the principal submatrix on free_nodes
/// (Dirichlet elimination), so its numerical range is contained in the
/// range of the full form.
struct AssembledForm {
  Grid grid;
  ComplexMatrix A_full;
  std::vector<int> free_nodes;
  ComplexMatrix A;
  SectorAngles field_angles;
};

/// (m, M) of the field over the mesh: m = min over triangles of the
/// coercivity of mu, M = max of its norm, with the induced angles.
SectorAngles field_bounds(const CoefficientField& mu, const Grid& grid);

/// P1 assembly. Gradients are constant per triangle, so the integration is
/// exact for per-triangle-constant mu. Cells are accumulated by parity
/// color (OpenMP inside each color); same-color cells share no node, so the
/// result is identical for any thread count.
AssembledForm assemble(const Grid& grid, const CoefficientField& mu, const BoundarySpec& bc);

/// Serial reference: plain row-major cell loop.
AssembledForm assemble_serial(const Grid& grid, const CoefficientField& mu,
                              const BoundarySpec& bc);

/// Nodal values of f; the exact P1 representation when f is affine.
ComplexVector interpolate(const Grid& grid, const std::function<cplx(double, double)>& f);

/// Quadratic form value a[u] = sum_ij A_full[i][j] u_j conj(u_i)
/// = (A_full u, u); u lives on all nodes.
cplx form_value(const AssembledForm& form, const ComplexVector& u);

}  // namespace secform
