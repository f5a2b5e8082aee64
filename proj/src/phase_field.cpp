#include "mbo/phase_field.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "mbo/io.hpp"

namespace mbo {

double PhaseField::partition_deviation() const {
    double worst = 0.0;
    for (int x = 0; x < n_; ++x) {
        double s = 0.0;
        for (int i = 0; i < P_; ++i) s += at(i, x);
        worst = std::max(worst, std::fabs(s - 1.0));
    }
    return worst;
}

bool PhaseField::is_crisp(double eps) const {
    for (double v : v_)
        if (std::fabs(v) > eps && std::fabs(v - 1.0) > eps) return false;
    return true;
}

int PhaseField::argmax_phase(int vertex) const {
    int best = 0;
    double bv = at(0, vertex);
    for (int i = 1; i < P_; ++i)
        if (at(i, vertex) > bv) {
            bv = at(i, vertex);
            best = i;
        }
    return best;
}

ShapeSpec ShapeSpec::Disk(std::array<double, 2> center, double radius, int phase) {
    ShapeSpec s;
    s.kind = Kind::disk;
    s.center = center;
    s.radius = radius;
    s.phase = phase;
    return s;
}

ShapeSpec ShapeSpec::Stripe(int axis, double lo, double hi, int phase) {
    ShapeSpec s;
    s.kind = Kind::stripe;
    s.axis = axis;
    s.lo = lo;
    s.hi = hi;
    s.phase = phase;
    return s;
}

ShapeSpec ShapeSpec::HalfSpace(std::array<double, 2> normal, double offset, int phase) {
    ShapeSpec s;
    s.kind = Kind::half_space;
    s.normal = normal;
    s.offset = offset;
    s.phase = phase;
    return s;
}

ShapeSpec ShapeSpec::LabelFile(std::string path) {
    ShapeSpec s;
    s.kind = Kind::label_file;
    s.path = std::move(path);
    return s;
}

ShapeSpec ShapeSpec::Voronoi(std::vector<std::array<double, 2>> points) {
    ShapeSpec s;
    s.kind = Kind::voronoi;
    s.points = std::move(points);
    return s;
}

namespace {

double wrap_dist(const DiscreteGeometry& g, std::array<double, 2> p, std::array<double, 2> q) {
    double s = 0.0;
    for (int k = 0; k < g.dim(); ++k) {
        double d = std::fabs(p[k] - q[k]);
        d -= std::floor(d);
        d = std::min(d, 1.0 - d);
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace

PhaseField seed_partition(const DiscreteGeometry& geom, const std::vector<ShapeSpec>& shapes,
                          int n_phases) {
    if (n_phases < 2) throw std::invalid_argument("need at least 2 phases");
    const int n = geom.n_vertices();
    std::vector<int> label(n, 0);

    for (size_t k = 0; k < shapes.size(); ++k) {
        const ShapeSpec& s = shapes[k];
        int target = (s.phase >= 0) ? s.phase : static_cast<int>(k) + 1;
        switch (s.kind) {
            case ShapeSpec::Kind::disk: {
                if (!geom.has_positions()) throw std::invalid_argument("disk shape needs a grid");
                if (target >= n_phases) throw std::invalid_argument("shape phase index out of range");
                for (int v = 0; v < n; ++v)
                    if (wrap_dist(geom, geom.position(v), s.center) <= s.radius) label[v] = target;
                break;
            }
            case ShapeSpec::Kind::stripe: {
                if (!geom.has_positions()) throw std::invalid_argument("stripe shape needs a grid");
                if (target >= n_phases) throw std::invalid_argument("shape phase index out of range");
                if (s.axis < 0 || s.axis >= geom.dim())
                    throw std::invalid_argument("stripe axis out of range");
                for (int v = 0; v < n; ++v) {
                    double c = geom.position(v)[s.axis];
                    if (c >= s.lo && c < s.hi) label[v] = target;
                }
                break;
            }
            case ShapeSpec::Kind::half_space: {
                if (!geom.has_positions())
                    throw std::invalid_argument("half_space shape needs a grid");
                if (target >= n_phases) throw std::invalid_argument("shape phase index out of range");
                for (int v = 0; v < n; ++v) {
                    auto p = geom.position(v);
                    double dot = p[0] * s.normal[0] + p[1] * s.normal[1];
                    if (dot >= s.offset) label[v] = target;
                }
                break;
            }
            case ShapeSpec::Kind::label_file: {
                std::vector<int> file_labels = read_label_pgm(s.path, geom);
                for (int v = 0; v < n; ++v) {
                    if (file_labels[v] >= n_phases)
                        throw std::invalid_argument("label file phase index out of range");
                    label[v] = file_labels[v];
                }
                break;
            }
            case ShapeSpec::Kind::voronoi: {
                if (!geom.has_positions()) throw std::invalid_argument("voronoi shape needs a grid");
                if (s.points.empty()) throw std::invalid_argument("voronoi needs seed points");
                if (static_cast<int>(s.points.size()) > n_phases)
                    throw std::invalid_argument("more voronoi seeds than phases");
                for (int v = 0; v < n; ++v) {
                    int best = 0;
                    double bd = std::numeric_limits<double>::infinity();
                    for (size_t j = 0; j < s.points.size(); ++j) {
                        double d = wrap_dist(geom, geom.position(v), s.points[j]);
                        if (d < bd) {
                            bd = d;
                            best = static_cast<int>(j);
                        }
                    }
                    label[v] = best;
                }
                break;
            }
        }
    }

    PhaseField u(n_phases, n, 0.0);
    for (int v = 0; v < n; ++v) u.at(label[v], v) = 1.0;

    std::vector<double> vols = phase_volumes(geom, u);
    for (int i = 0; i < n_phases; ++i)
        if (vols[i] == 0.0)
            std::cerr << "warning: seeded phase " << i << " is empty (volume 0)\n";
    return u;
}

std::vector<double> phase_volumes(const DiscreteGeometry& geom, const PhaseField& u) {
    std::vector<double> vols(u.n_phases(), 0.0);
    const auto& mu = geom.measure();
    for (int i = 0; i < u.n_phases(); ++i) {
        double acc = 0.0;
        auto ph = u.phase(i);
        for (int x = 0; x < u.n_vertices(); ++x) acc += ph[x] * mu[x];
        vols[i] = acc;
    }
    return vols;
}

}  // namespace mbo
