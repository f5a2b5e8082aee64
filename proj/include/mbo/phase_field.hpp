/// @file phase_field.hpp
/// @brief Partition-of-unity phase fields and initial-partition seeding.

#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "mbo/geometry.hpp"

namespace mbo {

/// P per-vertex values in [0,1] summing to 1 at every vertex. Crisp fields
/// take values in {0,1} except at recorded tie-split vertices.
class PhaseField {
  public:
    PhaseField() = default;
    PhaseField(int n_phases, int n_vertices, double fill = 0.0)
        : P_(n_phases), n_(n_vertices), v_(static_cast<size_t>(n_phases) * n_vertices, fill) {}

    int n_phases() const { return P_; }
    int n_vertices() const { return n_; }

    double at(int phase, int vertex) const { return v_[static_cast<size_t>(phase) * n_ + vertex]; }
    double& at(int phase, int vertex) { return v_[static_cast<size_t>(phase) * n_ + vertex]; }

    std::span<const double> phase(int i) const {
        return {v_.data() + static_cast<size_t>(i) * n_, static_cast<size_t>(n_)};
    }
    std::span<double> phase(int i) {
        return {v_.data() + static_cast<size_t>(i) * n_, static_cast<size_t>(n_)};
    }

    const std::vector<double>& data() const { return v_; }
    std::vector<double>& data() { return v_; }

    /// max_x |sum_i u_i(x) - 1|
    double partition_deviation() const;

    /// Every entry within eps of {0,1}.
    bool is_crisp(double eps = 1e-12) const;

    /// Index of the largest membership at a vertex (lowest index wins ties).
    int argmax_phase(int vertex) const;

    bool operator==(const PhaseField& o) const = default;

  private:
    int P_ = 0;
    int n_ = 0;
    std::vector<double> v_;
};

/// Seeding shape. Shapes are painted in declaration order, later shapes
/// overwriting earlier ones; vertices left uncovered stay in phase 0. A shape
/// paints `phase` when set (>= 0), otherwise phase k+1 for the k-th shape.
struct ShapeSpec {
    enum class Kind { disk, stripe, half_space, label_file, voronoi };
    Kind kind = Kind::disk;

    std::array<double, 2> center{0.5, 0.5};  // disk
    double radius = 0.1;                     // disk

    int axis = 0;  // stripe
    double lo = 0.0, hi = 0.5;

    std::array<double, 2> normal{1.0, 0.0};  // half_space: <pos, normal> >= offset
    double offset = 0.0;

    std::string path;  // label_file (PGM P5, one byte per vertex = phase index)

    std::vector<std::array<double, 2>> points;  // voronoi: phase = nearest seed index

    int phase = -1;

    static ShapeSpec Disk(std::array<double, 2> center, double radius, int phase = -1);
    static ShapeSpec Stripe(int axis, double lo, double hi, int phase = -1);
    static ShapeSpec HalfSpace(std::array<double, 2> normal, double offset, int phase = -1);
    static ShapeSpec LabelFile(std::string path);
    static ShapeSpec Voronoi(std::vector<std::array<double, 2>> points);
};

/// Crisp initial partition from a shape list. Warns on stderr when a phase
/// ends up empty; a constrained run will reject such a target downstream.
PhaseField seed_partition(const DiscreteGeometry& geom, const std::vector<ShapeSpec>& shapes,
                          int n_phases);

/// Per-phase mu-masses sum_x u_i(x) mu(x).
std::vector<double> phase_volumes(const DiscreteGeometry& geom, const PhaseField& u);

}  // namespace mbo
