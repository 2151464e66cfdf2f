#include "mps/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mps/kernels.hpp"

namespace mps {

Grid build_grid(int dim, double half_width, double spacing) {
  if (dim != 1 && dim != 2) {
    throw std::invalid_argument("build_grid: dim must be 1 or 2");
  }
  if (!(spacing > 0.0) || !(half_width > 0.0)) {
    throw std::invalid_argument("build_grid: sizes must be positive");
  }
  if (half_width < 5.0 * spacing) {
    throw std::invalid_argument(
        "build_grid: half_width must be at least 5 spacings");
  }
  // Snap to m = round-down cells per half-axis; if that would stretch the
  // spacing, add a cell so the adjustment is downward. A tiny slack keeps
  // exact ratios like 20/0.01 from bumping up a cell.
  const double ratio = half_width / spacing;
  auto cells = static_cast<std::size_t>(std::floor(ratio + 1e-9));
  double h = half_width / static_cast<double>(cells);
  if (h > spacing * (1.0 + 1e-12)) {
    ++cells;
    h = half_width / static_cast<double>(cells);
  }
  const double adjustment = (spacing - h) / spacing;
  if (adjustment > 0.01) {
    std::ostringstream msg;
    msg << "build_grid: spacing " << spacing << " does not divide half_width "
        << half_width << "; nearest aligned spacing " << h << " is "
        << adjustment * 100.0 << "% smaller (limit 1%)";
    throw std::invalid_argument(msg.str());
  }
  Grid g;
  g.dim = dim;
  g.half_width = half_width;
  g.spacing = h;
  g.requested_spacing = spacing;
  g.points_per_axis = 2 * cells + 1;
  if (g.points_per_axis < 5) {
    throw std::invalid_argument("build_grid: fewer than 5 nodes per axis");
  }
  return g;
}

ScalarField make_field(const Grid& g,
                       const std::function<double(const Vec2&)>& fn) {
  ScalarField u(g);
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i) {
    u.values[i] = g.is_boundary(i) ? 0.0 : fn(g.node_coord(i));
  }
  return u;
}

ScalarField laplacian_apply(const ScalarField& u) {
  ScalarField out(u.grid);
  const double inv_h2 = 1.0 / (u.grid.spacing * u.grid.spacing);
  if (u.grid.dim == 1) {
    kernels::laplacian_1d(u.data(), out.data(), u.grid.points_per_axis, inv_h2);
  } else {
    kernels::laplacian_2d(u.data(), out.data(), u.grid.points_per_axis, inv_h2);
  }
  return out;
}

double inner_l2(const ScalarField& u, const ScalarField& v) {
  if (!u.conforms(v)) {
    throw std::invalid_argument("inner_l2: grid mismatch");
  }
  double w = u.grid.spacing;
  if (u.grid.dim == 2) w *= u.grid.spacing;
  return w * kernels::dot(u.data(), v.data(), u.size());
}

double weighted_norm_sq(const ScalarField& u,
                        const std::function<double(const Vec2&)>& potential,
                        double eps) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("weighted_norm_sq: eps must be positive");
  }
  std::vector<double> v_eps(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Vec2 y = u.grid.node_coord(i);
    v_eps[i] = potential({eps * y[0], eps * y[1]});
  }
  return weighted_norm_sq_cached(u, v_eps.data());
}

double weighted_norm_sq_cached(const ScalarField& u, const double* v_eps) {
  const ScalarField lap = laplacian_apply(u);
  double w = u.grid.spacing;
  if (u.grid.dim == 2) w *= u.grid.spacing;
  const double* uv = u.data();
  const double quad = kernels::sum_transform(
      uv, u.size(),
      [&](std::size_t i, double ui) { return v_eps[i] * ui * ui; });
  return w * kernels::dot(lap.data(), uv, u.size()) + w * quad;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_g12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_field(std::ostream& os, const ScalarField& u, double eps,
                 const std::vector<std::string>& provenance) {
  for (const auto& line : provenance) os << "# " << line << "\n";
  const Grid& g = u.grid;
  os << "# dim n h L eps = " << g.dim << " " << g.points_per_axis << " "
     << format_g17(g.spacing) << " " << format_g17(g.half_width) << " "
     << format_g17(eps) << "\n";
  const std::size_t n = g.points_per_axis;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (g.dim == 1) {
      os << i << " " << format_g17(u.values[i]) << "\n";
    } else {
      os << i / n << " " << i % n << " " << format_g17(u.values[i]) << "\n";
    }
  }
}

void write_field_file(const std::string& path, const ScalarField& u,
                      double eps, const std::vector<std::string>& provenance) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_field_file: cannot open " + path);
  write_field(os, u, eps, provenance);
  if (!os.good()) throw std::runtime_error("write_field_file: write failed");
}

FieldDump read_field(std::istream& is) {
  std::string line;
  int dim = 0;
  std::size_t n = 0;
  double h = 0, L = 0, eps = 0;
  bool have_meta = false;
  std::streampos data_start = is.tellg();
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] != '#') break;
    const auto eq = line.find('=');
    if (line.rfind("# dim n h L eps", 0) == 0 && eq != std::string::npos) {
      std::istringstream meta(line.substr(eq + 1));
      meta >> dim >> n >> h >> L >> eps;
      have_meta = true;
    }
    data_start = is.tellg();
  }
  if (!have_meta) {
    throw std::runtime_error("read_field: missing '# dim n h L eps' header");
  }
  is.clear();
  is.seekg(data_start);

  FieldDump out;
  out.eps = eps;
  Grid g;
  g.dim = dim;
  g.points_per_axis = n;
  g.spacing = h;
  g.requested_spacing = h;
  g.half_width = L;
  out.field = ScalarField(g);
  const std::size_t total = g.num_nodes();
  for (std::size_t count = 0; count < total; ++count) {
    std::size_t i = 0, j = 0;
    double v = 0;
    if (dim == 1) {
      if (!(is >> i >> v)) throw std::runtime_error("read_field: short file");
      out.field.values.at(i) = v;
    } else {
      if (!(is >> i >> j >> v)) {
        throw std::runtime_error("read_field: short file");
      }
      out.field.values.at(i * n + j) = v;
    }
  }
  return out;
}

FieldDump read_field_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("read_field_file: cannot open " + path);
  return read_field(is);
}

}  // namespace mps
