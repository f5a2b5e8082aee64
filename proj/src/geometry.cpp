#include "mbo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace mbo {

DensitySpec DensitySpec::Uniform() { return DensitySpec{}; }

DensitySpec DensitySpec::GaussianBump(std::array<double, 2> center, double amplitude,
                                      double width) {
    DensitySpec s;
    s.kind = Kind::gaussian_bump;
    s.center = center;
    s.amplitude = amplitude;
    s.width = width;
    return s;
}

DensitySpec DensitySpec::Table(std::vector<double> values) {
    DensitySpec s;
    s.kind = Kind::table;
    s.values = std::move(values);
    return s;
}

namespace {

double wrap_delta(double a, double b) {
    double d = std::fabs(a - b);
    d -= std::floor(d);  // into [0,1)
    return std::min(d, 1.0 - d);
}

double wrap_distance(const std::array<double, 2>& a, const std::array<double, 2>& b, int dim) {
    double s = 0.0;
    for (int k = 0; k < dim; ++k) {
        double d = wrap_delta(a[k], b[k]);
        s += d * d;
    }
    return std::sqrt(s);
}

std::vector<double> raw_density(const DensitySpec& spec, int n,
                                const std::vector<std::array<double, 2>>& pos, int dim) {
    std::vector<double> rho(n, 1.0);
    switch (spec.kind) {
        case DensitySpec::Kind::uniform:
            break;
        case DensitySpec::Kind::gaussian_bump: {
            if (spec.width <= 0.0)
                throw std::invalid_argument("gaussian_bump width must be positive");
            for (int v = 0; v < n; ++v) {
                double d = wrap_distance(pos[v], spec.center, dim);
                rho[v] = 1.0 + spec.amplitude * std::exp(-d * d / (2.0 * spec.width * spec.width));
            }
            break;
        }
        case DensitySpec::Kind::table: {
            if (static_cast<int>(spec.values.size()) != n)
                throw std::invalid_argument("density table size does not match vertex count");
            rho = spec.values;
            break;
        }
    }
    for (double r : rho)
        if (!(r > 0.0)) throw std::invalid_argument("density must be positive everywhere");
    return rho;
}

struct CsrArrays {
    std::vector<int> row_ptr;
    std::vector<int> cols;
    std::vector<double> wts;
};

// Build CSR adjacency from an undirected edge list (x, y, w), storing both
// directions, neighbor lists sorted by index.
CsrArrays assemble_csr(int n, const std::vector<std::tuple<int, int, double>>& und) {
    std::vector<int> deg(n, 0);
    for (const auto& [x, y, w] : und) {
        (void)w;
        ++deg[x];
        ++deg[y];
    }
    CsrArrays csr;
    csr.row_ptr.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) csr.row_ptr[v + 1] = csr.row_ptr[v] + deg[v];
    csr.cols.resize(csr.row_ptr[n]);
    csr.wts.resize(csr.row_ptr[n]);
    std::vector<int> fill(n, 0);
    for (const auto& [x, y, w] : und) {
        csr.cols[csr.row_ptr[x] + fill[x]] = y;
        csr.wts[csr.row_ptr[x] + fill[x]] = w;
        ++fill[x];
        csr.cols[csr.row_ptr[y] + fill[y]] = x;
        csr.wts[csr.row_ptr[y] + fill[y]] = w;
        ++fill[y];
    }
    for (int v = 0; v < n; ++v) {
        std::vector<std::pair<int, double>> tmp;
        tmp.reserve(deg[v]);
        for (int e = csr.row_ptr[v]; e < csr.row_ptr[v + 1]; ++e)
            tmp.emplace_back(csr.cols[e], csr.wts[e]);
        std::sort(tmp.begin(), tmp.end());
        for (int k = 0; k < static_cast<int>(tmp.size()); ++k) {
            csr.cols[csr.row_ptr[v] + k] = tmp[k].first;
            csr.wts[csr.row_ptr[v] + k] = tmp[k].second;
        }
    }
    return csr;
}

bool connected(int n, const CsrArrays& csr) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e = csr.row_ptr[v]; e < csr.row_ptr[v + 1]; ++e) {
            int u = csr.cols[e];
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n;
}

}  // namespace

void DiscreteGeometry::finalize_measure() {
    double total = 0.0;
    measure_.resize(n_);
    for (int v = 0; v < n_; ++v) {
        measure_[v] = density_[v] * cell_volume_[v];
        total += measure_[v];
    }
    if (!(total > 0.0)) throw std::invalid_argument("total measure must be positive");
    // Scale density, measure and edge weights by the same constant: the
    // probability normalization leaves the Laplacian untouched.
    for (int v = 0; v < n_; ++v) {
        density_[v] /= total;
        measure_[v] /= total;
    }
    for (double& w : wts_) w /= total;
    min_measure_ = *std::min_element(measure_.begin(), measure_.end());
    double dmin = *std::min_element(density_.begin(), density_.end());
    double dmax = *std::max_element(density_.begin(), density_.end());
    uniform_density_ = (dmax - dmin) <= 1e-12 * dmax;
}

double DiscreteGeometry::distance(int a, int b) const {
    if (!has_positions_)
        throw std::runtime_error("geometry has no positions: distances unavailable");
    return wrap_distance(positions_[a], positions_[b], dim_);
}

void DiscreteGeometry::apply_laplacian(std::span<const double> f, std::span<double> out) const {
    for (int v = 0; v < n_; ++v) {
        double acc = 0.0;
        int lo = row_ptr_[v], hi = row_ptr_[v + 1];
        for (int e = lo; e < hi; ++e) acc += wts_[e] * (f[v] - f[cols_[e]]);
        out[v] = acc / measure_[v];
    }
}

double DiscreteGeometry::laplacian_spectral_bound() const {
    double bound = 0.0;
    for (int v = 0; v < n_; ++v) {
        double row = 0.0;
        for (int e = row_ptr_[v]; e < row_ptr_[v + 1]; ++e) row += wts_[e];
        bound = std::max(bound, 2.0 * row / measure_[v]);
    }
    return bound;
}

double DiscreteGeometry::ball_measure(int x, double r) const {
    if (!has_positions_) throw std::runtime_error("ball_measure requires positions");
    double acc = 0.0;
    for (int y = 0; y < n_; ++y)
        if (distance(x, y) <= r) acc += measure_[y];
    return acc;
}

DiscreteGeometry build_torus_grid(int side_count, int dim, const DensitySpec& density) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("torus grid dim must be 1 or 2");
    if (side_count < 8) throw std::invalid_argument("side_count must be at least 8");

    DiscreteGeometry g;
    g.kind_ = (dim == 1) ? GeometryKind::circle_grid : GeometryKind::torus_grid;
    g.dim_ = dim;
    g.side_ = side_count;
    g.spacing_ = 1.0 / side_count;
    g.n_ = (dim == 1) ? side_count : side_count * side_count;
    g.has_positions_ = true;

    const double dx = g.spacing_;
    g.positions_.resize(g.n_);
    for (int v = 0; v < g.n_; ++v) {
        int i = v % side_count;
        int j = (dim == 2) ? v / side_count : 0;
        g.positions_[v] = {i * dx, j * dx};
    }

    g.cell_volume_.assign(g.n_, std::pow(dx, dim));
    g.density_ = raw_density(density, g.n_, g.positions_, dim);

    // stencil edges: +1 neighbor per axis with wrap-around
    const double wscale = std::pow(dx, dim - 2);
    std::vector<std::tuple<int, int, double>> und;
    und.reserve(static_cast<size_t>(g.n_) * dim);
    auto vid = [&](int i, int j) { return j * side_count + i; };
    for (int v = 0; v < g.n_; ++v) {
        int i = v % side_count;
        int j = (dim == 2) ? v / side_count : 0;
        int xr = (dim == 1) ? (i + 1) % side_count : vid((i + 1) % side_count, j);
        double w = 0.5 * (g.density_[v] + g.density_[xr]) * wscale;
        und.emplace_back(v, xr, w);
        if (dim == 2) {
            int yu = vid(i, (j + 1) % side_count);
            double wy = 0.5 * (g.density_[v] + g.density_[yu]) * wscale;
            und.emplace_back(v, yu, wy);
        }
    }
    CsrArrays csr = assemble_csr(g.n_, und);
    g.row_ptr_ = std::move(csr.row_ptr);
    g.cols_ = std::move(csr.cols);
    g.wts_ = std::move(csr.wts);

    g.finalize_measure();
    return g;
}

DiscreteGeometry build_circle_grid(int count, const DensitySpec& density) {
    return build_torus_grid(count, 1, density);
}

DiscreteGeometry build_weighted_graph(int n,
                                      const std::vector<std::tuple<int, int, double>>& edges,
                                      const std::vector<double>& vertex_measures) {
    if (n < 2) throw std::invalid_argument("graph needs at least 2 vertices");
    if (static_cast<int>(vertex_measures.size()) != n)
        throw std::invalid_argument("vertex_measures size does not match n");
    for (double m : vertex_measures)
        if (!(m > 0.0)) throw std::invalid_argument("vertex measures must be positive");

    // Deduplicate symmetric input on the canonical (min,max) key.
    std::map<std::pair<int, int>, double> canon;
    for (const auto& [x, y, w] : edges) {
        if (x < 0 || x >= n || y < 0 || y >= n) throw std::invalid_argument("edge endpoint out of range");
        if (x == y) throw std::invalid_argument("self-edges are not allowed");
        if (!(w >= 0.0)) throw std::invalid_argument("edge weights must be nonnegative");
        auto key = std::minmax(x, y);
        auto it = canon.find(key);
        if (it == canon.end())
            canon[key] = w;
        else if (it->second != w)
            throw std::invalid_argument("asymmetric duplicate edge weights");
    }
    std::vector<std::tuple<int, int, double>> und;
    und.reserve(canon.size());
    for (const auto& [key, w] : canon)
        if (w > 0.0) und.emplace_back(key.first, key.second, w);

    DiscreteGeometry g;
    g.kind_ = GeometryKind::weighted_graph;
    g.dim_ = 0;
    g.n_ = n;
    g.has_positions_ = false;
    g.cell_volume_.assign(n, 1.0);
    g.density_ = vertex_measures;

    CsrArrays csr = assemble_csr(n, und);
    if (!connected(n, csr))
        throw std::invalid_argument("graph is disconnected: heat kernel would not mix");
    g.row_ptr_ = std::move(csr.row_ptr);
    g.cols_ = std::move(csr.cols);
    g.wts_ = std::move(csr.wts);

    g.finalize_measure();
    return g;
}

double dot_mu(const DiscreteGeometry& g, std::span<const double> a, std::span<const double> b) {
    const auto& mu = g.measure();
    double acc = 0.0;
    for (int v = 0; v < g.n_vertices(); ++v) acc += a[v] * b[v] * mu[v];
    return acc;
}

double norm_l1_mu(const DiscreteGeometry& g, std::span<const double> a) {
    const auto& mu = g.measure();
    double acc = 0.0;
    for (int v = 0; v < g.n_vertices(); ++v) acc += std::fabs(a[v]) * mu[v];
    return acc;
}

double norm_l2_mu_sq(const DiscreteGeometry& g, std::span<const double> a) {
    const auto& mu = g.measure();
    double acc = 0.0;
    for (int v = 0; v < g.n_vertices(); ++v) acc += a[v] * a[v] * mu[v];
    return acc;
}

}  // namespace mbo
