// Discrete spatial domains with zero Dirichlet boundary: uniform 1D intervals
// and masked 2D lattices. A grid owns the interior-node bookkeeping and the
// quadrature weights every other module integrates with; lattice neighbors
// outside the interior act as zero-value ghosts.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "rda/errors.hpp"

namespace rda {

using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Complex = std::complex<double>;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct Grid {
    int dim = 1;                     // 1 or 2
    double hx = 0.0, hy = 0.0;       // spacing (hy unused in 1D)
    std::vector<Point> nodes;        // interior node coordinates, index = interior id
    Vec weights;                     // per-node quadrature weight (hx or hx*hy)

    // Lattice bookkeeping. 1D: nx = n_interior, ny = 1. 2D: interior nodes are
    // the lattice points whose inside predicate held.
    int nx = 0, ny = 0;
    double x0 = 0.0, y0 = 0.0;                    // bbox origin (1D: interval start)
    std::vector<int> lattice_to_interior;         // size nx*ny, -1 for ghost
    std::vector<std::pair<int, int>> interior_to_lattice;

    std::string descriptor;  // human-readable domain description

    int size() const { return static_cast<int>(nodes.size()); }

    // Interior id of the lattice neighbor one step along axis (0=x, 1=y) in
    // direction dir (+1/-1), or -1 when the neighbor is a zero ghost.
    int neighbor(int id, int axis, int dir) const;

    // Interior node nearest to p (for probes); dimension error if p is not
    // within the bounding box.
    int nearest_node(const Point& p) const;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr build_interval_grid(double a, double b, int n_interior);

struct Rect {
    double x0, x1, y0, y1;
};

GridPtr build_masked_grid_2d(const Rect& bbox, int nx, int ny,
                             const std::function<bool(double, double)>& inside);

// Convenience: the closed disk (x-cx)^2 + (y-cy)^2 <= r^2 inside its bbox.
GridPtr build_disk_grid(double cx, double cy, double r, int nx, int ny);

struct Field {
    GridPtr grid;
    Vec values;

    int size() const { return static_cast<int>(values.size()); }
};

struct CField {
    GridPtr grid;
    CVec values;

    int size() const { return static_cast<int>(values.size()); }
};

Field make_field(const GridPtr& g, const std::function<double(double, double)>& fn);
Field constant_field(const GridPtr& g, double value);

double integrate(const Grid& g, const Vec& f);
double integrate(const Field& f);

// Conjugate-linear in the first argument.
Complex inner_product(const Grid& g, const CVec& f, const CVec& h);
double inner_product(const Grid& g, const Vec& f, const Vec& h);

// Weighted L2 norm sqrt(sum_i w_i |f_i|^2).
double norm_h(const Grid& g, const Vec& f);
double norm_h(const Grid& g, const CVec& f);

// CSV snapshot: header "x,value" (1D) or "x,y,value" (2D), one row per
// interior node, '.' decimal point.
void write_field_csv(const std::string& path, const Field& f);
void write_field_csv(const std::string& path, const Grid& g, const Vec& values);

}  // namespace rda
