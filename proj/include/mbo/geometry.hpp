/// @file geometry.hpp
/// @brief Discrete weighted geometries: periodic grids and weighted graphs.
///
/// A DiscreteGeometry is the discrete stand-in for a closed weighted
/// manifold (M, mu, g): vertices carry positions (on grids), cell volumes,
/// a positive density rho and the resulting measure mu = rho * cell_volume,
/// normalized so that mu is a probability measure. Edges carry symmetric
/// nonnegative weights from which the weighted graph Laplacian
///   (L f)(x) = (1/mu(x)) * sum_y w_xy (f(x) - f(y))
/// is assembled; L is symmetric in l^2(mu) and positive semi-definite.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mbo {

enum class GeometryKind { torus_grid, circle_grid, weighted_graph };

/// Density descriptor used by the grid constructors. Values describe the
/// raw density before probability normalization.
struct DensitySpec {
    enum class Kind { uniform, gaussian_bump, table };
    Kind kind = Kind::uniform;

    // gaussian_bump parameters: rho(x) = 1 + amplitude * exp(-d(x,center)^2 / (2 width^2))
    std::array<double, 2> center{0.5, 0.5};
    double amplitude = 0.0;
    double width = 0.1;

    // table: one raw density value per vertex
    std::vector<double> values;

    static DensitySpec Uniform();
    static DensitySpec GaussianBump(std::array<double, 2> center, double amplitude, double width);
    static DensitySpec Table(std::vector<double> values);
};

class DiscreteGeometry {
  public:
    GeometryKind kind() const { return kind_; }
    int dim() const { return dim_; }
    int n_vertices() const { return n_; }

    /// Grid geometry only: vertices per side and grid spacing 1/side_count.
    int side_count() const { return side_; }
    double spacing() const { return spacing_; }

    const std::vector<double>& cell_volume() const { return cell_volume_; }
    const std::vector<double>& density() const { return density_; }
    const std::vector<double>& measure() const { return measure_; }
    double measure(int v) const { return measure_[v]; }
    double min_measure() const { return min_measure_; }

    bool has_positions() const { return has_positions_; }
    std::array<double, 2> position(int v) const { return positions_[v]; }

    /// Geodesic distance. Grids use the flat wrap-around metric; weighted
    /// graphs carry no distances and throw.
    double distance(int a, int b) const;

    /// True when the density is constant across vertices (up to roundoff).
    bool uniform_density() const { return uniform_density_; }

    // CSR adjacency access.
    int degree(int v) const { return row_ptr_[v + 1] - row_ptr_[v]; }
    std::span<const int> neighbors(int v) const {
        return {cols_.data() + row_ptr_[v], static_cast<size_t>(degree(v))};
    }
    std::span<const double> edge_weights(int v) const {
        return {wts_.data() + row_ptr_[v], static_cast<size_t>(degree(v))};
    }

    /// (L f)(x) = (1/mu(x)) sum_y w_xy (f(x) - f(y)).
    void apply_laplacian(std::span<const double> f, std::span<double> out) const;

    /// Gershgorin upper bound on the spectrum of L.
    double laplacian_spectral_bound() const;

    /// mu-mass of the metric ball B_r(x); grids only.
    double ball_measure(int x, double r) const;

  private:
    friend DiscreteGeometry build_torus_grid(int, int, const DensitySpec&);
    friend DiscreteGeometry build_circle_grid(int, const DensitySpec&);
    friend DiscreteGeometry build_weighted_graph(int,
                                                 const std::vector<std::tuple<int, int, double>>&,
                                                 const std::vector<double>&);

    GeometryKind kind_ = GeometryKind::weighted_graph;
    int dim_ = 0;
    int n_ = 0;
    int side_ = 0;
    double spacing_ = 0.0;
    bool has_positions_ = false;
    bool uniform_density_ = false;
    double min_measure_ = 0.0;

    std::vector<std::array<double, 2>> positions_;
    std::vector<double> cell_volume_;
    std::vector<double> density_;
    std::vector<double> measure_;

    std::vector<int> row_ptr_;
    std::vector<int> cols_;
    std::vector<double> wts_;

    void finalize_measure();  // normalize mu to a probability measure
};

/// Periodic grid on [0,1)^dim, dim in {1,2}, spacing 1/side_count, 3/5-point
/// stencil with edge weight w_xy = rho_edge(x,y) * dx^(dim-2), rho_edge the
/// arithmetic mean of the endpoint densities.
DiscreteGeometry build_torus_grid(int side_count, int dim, const DensitySpec& density);

/// Torus grid with dim = 1 (unit-circumference circle).
DiscreteGeometry build_circle_grid(int count, const DensitySpec& density);

/// Abstract weighted graph: symmetric edges (x, y, w), positive vertex
/// measures (renormalized to total 1), no positions. Disconnected graphs are
/// rejected: the heat kernel would not mix and the volume multiplier loses
/// uniqueness.
DiscreteGeometry build_weighted_graph(int n,
                                      const std::vector<std::tuple<int, int, double>>& edges,
                                      const std::vector<double>& vertex_measures);

// mu-weighted inner product and norms over per-vertex fields.
double dot_mu(const DiscreteGeometry& g, std::span<const double> a, std::span<const double> b);
double norm_l1_mu(const DiscreteGeometry& g, std::span<const double> a);
double norm_l2_mu_sq(const DiscreteGeometry& g, std::span<const double> a);

}  // namespace mbo
