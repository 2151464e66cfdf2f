#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace mps {

using Vec2 = std::array<double, 2>;

/// Uniform tensor grid on [-L, L]^dim with homogeneous Dirichlet boundary.
/// Nodes along an axis sit at -L + i*h for i = 0..n-1, with h*(n-1)/2 == L.
/// Fields carry a copy of their grid, so grids compare by value.
struct Grid {
  int dim = 1;                      // 1 or 2
  double half_width = 0.0;          // L
  double spacing = 0.0;             // h, possibly adjusted from the request
  double requested_spacing = 0.0;   // h as requested by the caller
  std::size_t points_per_axis = 0;  // n = 2m + 1, odd so the origin is a node

  std::size_t num_nodes() const {
    return dim == 1 ? points_per_axis : points_per_axis * points_per_axis;
  }
  double axis_coord(std::size_t i) const {
    return -half_width + static_cast<double>(i) * spacing;
  }
  // Row-major flat index: 1D -> i; 2D -> ix * n + iy.
  Vec2 node_coord(std::size_t flat) const {
    if (dim == 1) return {axis_coord(flat), 0.0};
    const std::size_t n = points_per_axis;
    return {axis_coord(flat / n), axis_coord(flat % n)};
  }
  bool is_boundary(std::size_t flat) const {
    const std::size_t n = points_per_axis;
    if (dim == 1) return flat == 0 || flat + 1 == n;
    const std::size_t ix = flat / n, iy = flat % n;
    return ix == 0 || ix + 1 == n || iy == 0 || iy + 1 == n;
  }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.dim == b.dim && a.half_width == b.half_width &&
           a.spacing == b.spacing && a.points_per_axis == b.points_per_axis;
  }
};

/// Builds a grid, adjusting the spacing downward (at most 1%) so that nodes
/// align exactly with +-half_width. Throws std::invalid_argument on a bad
/// dim, non-positive sizes, or an adjustment larger than 1%.
Grid build_grid(int dim, double half_width, double spacing);

/// Discrete field on a grid. Boundary values stay exactly 0; every operation
/// here preserves that.
struct ScalarField {
  Grid grid;
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(const Grid& g) : grid(g), values(g.num_nodes(), 0.0) {}

  std::size_t size() const { return values.size(); }
  double* data() { return values.data(); }
  const double* data() const { return values.data(); }
  bool conforms(const ScalarField& other) const { return grid == other.grid; }
};

/// Field whose nodal values are fn(y) at interior nodes, 0 on the boundary.
ScalarField make_field(const Grid& g, const std::function<double(const Vec2&)>& fn);

/// out = -Delta_h u (3-point stencil in 1D, 5-point in 2D), with zero
/// Dirichlet data outside the box; boundary nodes of the result are 0.
ScalarField laplacian_apply(const ScalarField& u);

/// Discrete L2 pairing h^dim * sum_i u_i v_i. Throws on grid mismatch.
double inner_l2(const ScalarField& u, const ScalarField& v);

/// ||u||^2 = <(-Delta_h) u, u> + <V(eps*y) u, u> with the same stencil and
/// quadrature the energy functionals use, so energies and gradients stay
/// exactly compatible at the discrete level.
double weighted_norm_sq(const ScalarField& u,
                        const std::function<double(const Vec2&)>& potential,
                        double eps);
double weighted_norm_sq_cached(const ScalarField& u, const double* v_eps);

// --- field dump format -------------------------------------------------
// Plain text. Leading '#' comment lines carry provenance; the line
// '# dim n h L eps = ...' carries grid metadata with 17 significant digits,
// then one node per line ('i v' in 1D, 'ix iy v' in 2D, row-major).
// Round-trips bit-exactly.

void write_field(std::ostream& os, const ScalarField& u, double eps,
                 const std::vector<std::string>& provenance = {});
void write_field_file(const std::string& path, const ScalarField& u, double eps,
                      const std::vector<std::string>& provenance = {});

struct FieldDump {
  ScalarField field;
  double eps = 0.0;
};
FieldDump read_field(std::istream& is);
FieldDump read_field_file(const std::string& path);

/// Fixed-format float printing used by every text artifact: %.17g round-trips
/// doubles exactly, %.12g is the CSV precision.
std::string format_g17(double v);
std::string format_g12(double v);

}  // namespace mps
