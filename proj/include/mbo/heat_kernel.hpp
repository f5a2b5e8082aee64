/// @file heat_kernel.hpp
/// @brief Heat-kernel operators e^{-h L} on discrete weighted geometries.
///
/// The operator acts by mu-convolution: (p(h) * f)(x) = sum_y p(h,x,y) f(y) mu(y)
/// with a symmetric, mu-stochastic kernel (p(h,x,y) = p(h,y,x) and
/// sum_y p(h,x,y) mu(y) = 1). Backends trade generality for speed:
///
///   fourier            uniform periodic grids, exact stencil symbol via FFT
///   spectral           dense eigendecomposition of L, n_vertices <= 4096
///   expm_action        matrix-free Chebyshev approximation of e^{-hL}
///   gaussian_surrogate truncated wrapped Gaussian G_h(x,y) * v0(x,y) with
///                      v0(x,y) = 1/sqrt(rho(x) rho(y)), cutoff 6 sqrt(h)

#pragma once

#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "mbo/geometry.hpp"

namespace mbo {

enum class KernelBackend { fourier, spectral, expm_action, gaussian_surrogate };

const char* backend_name(KernelBackend b);

class HeatKernelOperator {
  public:
    /// Builds an operator for the geometry; throws when the backend is
    /// incompatible (fourier on non-uniform density, spectral above the
    /// vertex cap, gaussian_surrogate without positions). A non-positive
    /// tolerance selects the backend default.
    static HeatKernelOperator build(const DiscreteGeometry& geom, KernelBackend backend,
                                    double tolerance = 0.0);

    KernelBackend backend() const;
    double tolerance() const;
    const DiscreteGeometry& geometry() const;

    /// p(h) * f. Pure; thread-safe.
    void apply(double h, std::span<const double> in, std::span<double> out) const;
    std::vector<double> apply(double h, const std::vector<double>& in) const;

    /// Entrywise kernel access; expm_action has no entries and throws.
    bool has_entries() const;
    double entry(double h, int x, int y) const;

    /// Spectral backend introspection (throws otherwise).
    const std::vector<double>& eigenvalues() const;
    double eigenfunction(int k, int x) const;
    /// CSV dump "index,eigenvalue" (spectral backend).
    void dump_spectrum(std::ostream& out) const;

  private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

}  // namespace mbo
