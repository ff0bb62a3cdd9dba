#include "rda/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "rda/kernels.hpp"

namespace rda {

int Grid::neighbor(int id, int axis, int dir) const {
    auto [i, j] = interior_to_lattice[static_cast<std::size_t>(id)];
    if (axis == 0)
        i += dir;
    else
        j += dir;
    if (i < 0 || i >= nx || j < 0 || j >= ny) return -1;
    return lattice_to_interior[static_cast<std::size_t>(j) * nx + i];
}

int Grid::nearest_node(const Point& p) const {
    int best = -1;
    double best_d = std::numeric_limits<double>::max();
    for (int k = 0; k < size(); ++k) {
        const double dx = nodes[static_cast<std::size_t>(k)].x - p.x;
        const double dy = dim == 2 ? nodes[static_cast<std::size_t>(k)].y - p.y : 0.0;
        const double d = dx * dx + dy * dy;
        if (d < best_d) {
            best_d = d;
            best = k;
        }
    }
    if (best < 0) throw dimension_error("nearest_node: empty grid");
    return best;
}

GridPtr build_interval_grid(double a, double b, int n_interior) {
    if (!(a < b)) throw invalid_grid_error("interval grid: need a < b");
    if (n_interior < 3) throw invalid_grid_error("interval grid: need n_interior >= 3");

    auto g = std::make_shared<Grid>();
    g->dim = 1;
    g->nx = n_interior;
    g->ny = 1;
    g->x0 = a;
    g->hx = (b - a) / (n_interior + 1);
    g->hy = 0.0;
    g->nodes.resize(static_cast<std::size_t>(n_interior));
    g->weights = Vec::Constant(n_interior, g->hx);
    g->lattice_to_interior.resize(static_cast<std::size_t>(n_interior));
    g->interior_to_lattice.resize(static_cast<std::size_t>(n_interior));
    for (int i = 0; i < n_interior; ++i) {
        g->nodes[static_cast<std::size_t>(i)] = {a + (i + 1) * g->hx, 0.0};
        g->lattice_to_interior[static_cast<std::size_t>(i)] = i;
        g->interior_to_lattice[static_cast<std::size_t>(i)] = {i, 0};
    }
    std::ostringstream d;
    d << "interval (" << a << ", " << b << "), n=" << n_interior;
    g->descriptor = d.str();
    return g;
}

GridPtr build_masked_grid_2d(const Rect& bbox, int nx, int ny,
                             const std::function<bool(double, double)>& inside) {
    if (nx < 8 || ny < 8) throw invalid_grid_error("masked grid: need nx, ny >= 8");
    if (!(bbox.x0 < bbox.x1 && bbox.y0 < bbox.y1))
        throw invalid_grid_error("masked grid: degenerate bounding box");

    auto g = std::make_shared<Grid>();
    g->dim = 2;
    g->nx = nx;
    g->ny = ny;
    g->x0 = bbox.x0;
    g->y0 = bbox.y0;
    g->hx = (bbox.x1 - bbox.x0) / (nx + 1);
    g->hy = (bbox.y1 - bbox.y0) / (ny + 1);
    g->lattice_to_interior.assign(static_cast<std::size_t>(nx) * ny, -1);

    for (int j = 0; j < ny; ++j) {
        const double y = bbox.y0 + (j + 1) * g->hy;
        for (int i = 0; i < nx; ++i) {
            const double x = bbox.x0 + (i + 1) * g->hx;
            if (!inside(x, y)) continue;
            g->lattice_to_interior[static_cast<std::size_t>(j) * nx + i] = g->size();
            g->nodes.push_back({x, y});
            g->interior_to_lattice.emplace_back(i, j);
        }
    }
    if (g->nodes.empty()) throw invalid_grid_error("masked grid: empty interior");
    g->weights = Vec::Constant(g->size(), g->hx * g->hy);
    std::ostringstream d;
    d << "masked 2d [" << bbox.x0 << "," << bbox.x1 << "]x[" << bbox.y0 << "," << bbox.y1
      << "], " << nx << "x" << ny << ", " << g->size() << " interior nodes";
    g->descriptor = d.str();
    return g;
}

GridPtr build_disk_grid(double cx, double cy, double r, int nx, int ny) {
    if (!(r > 0)) throw invalid_grid_error("disk grid: radius must be positive");
    const Rect bbox{cx - r, cx + r, cy - r, cy + r};
    const double r2 = r * r;
    return build_masked_grid_2d(bbox, nx, ny, [=](double x, double y) {
        const double dx = x - cx, dy = y - cy;
        return dx * dx + dy * dy <= r2;
    });
}

Field make_field(const GridPtr& g, const std::function<double(double, double)>& fn) {
    Field f;
    f.grid = g;
    f.values.resize(g->size());
    for (int i = 0; i < g->size(); ++i) {
        const auto& p = g->nodes[static_cast<std::size_t>(i)];
        f.values[i] = fn(p.x, p.y);
    }
    return f;
}

Field constant_field(const GridPtr& g, double value) {
    Field f;
    f.grid = g;
    f.values = Vec::Constant(g->size(), value);
    return f;
}

namespace {
void check_size(const Grid& g, Eigen::Index n, const char* where) {
    if (n != g.size()) {
        std::ostringstream m;
        m << where << ": field size " << n << " does not match grid size " << g.size();
        throw dimension_error(m.str());
    }
}
}  // namespace

double integrate(const Grid& g, const Vec& f) {
    check_size(g, f.size(), "integrate");
    return kern::active_kernels().dot(g.weights.data(), f.data(),
                                      static_cast<std::size_t>(f.size()));
}

double integrate(const Field& f) { return integrate(*f.grid, f.values); }

double inner_product(const Grid& g, const Vec& f, const Vec& h) {
    check_size(g, f.size(), "inner_product");
    check_size(g, h.size(), "inner_product");
    return kern::active_kernels().wdot(g.weights.data(), f.data(), h.data(),
                                       static_cast<std::size_t>(f.size()));
}

Complex inner_product(const Grid& g, const CVec& f, const CVec& h) {
    check_size(g, f.size(), "inner_product");
    check_size(g, h.size(), "inner_product");
    Complex s = 0.0;
    for (Eigen::Index i = 0; i < f.size(); ++i)
        s += g.weights[i] * std::conj(f[i]) * h[i];
    return s;
}

double norm_h(const Grid& g, const Vec& f) {
    return std::sqrt(inner_product(g, f, f));
}

double norm_h(const Grid& g, const CVec& f) {
    check_size(g, f.size(), "norm_h");
    double s = 0.0;
    for (Eigen::Index i = 0; i < f.size(); ++i) s += g.weights[i] * std::norm(f[i]);
    return std::sqrt(s);
}

void write_field_csv(const std::string& path, const Grid& g, const Vec& values) {
    check_size(g, values.size(), "write_field_csv");
    std::ofstream out(path);
    if (!out) throw error("cannot open output file: " + path);
    out << (g.dim == 1 ? "x,value\n" : "x,y,value\n");
    char buf[96];
    for (int i = 0; i < g.size(); ++i) {
        const auto& p = g.nodes[static_cast<std::size_t>(i)];
        if (g.dim == 1)
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", p.x, values[i]);
        else
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", p.x, p.y, values[i]);
        out << buf;
    }
}

void write_field_csv(const std::string& path, const Field& f) {
    write_field_csv(path, *f.grid, f.values);
}

}  // namespace rda
