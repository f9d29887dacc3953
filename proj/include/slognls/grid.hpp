#pragma once

// Periodic lattice geometry, lattice fields and the spectral transform
// contract used by every other module.
//
// Conventions (fixed repo-wide):
//   * box [-L/2, L/2)^d, points x_j = -L/2 + j*h with h = L/N, row-major
//     storage (axis 0 slowest);
//   * frequencies k_m = (2*pi/L)*s(m) with s(m) = m for m < N/2 and
//     s(m) = m - N otherwise, i.e. s in {-N/2, ..., N/2-1};
//   * to_spectral is the plain forward DFT  u_hat(m) = sum_j u_j e^{-2πi m·j/N},
//     to_physical divides by N^d.  Parseval then reads
//         sum_j |u_j|^2 h^d = L^{-d} sum_m |u_hat(m)|^2 h^{2d};
//   * derivative multiplier is i*k with the s = -N/2 (Nyquist) component
//     zeroed, so gradients of real fields are real;
//   * the Laplacian multiplier is -|k|^2 with the full frequency set.

#include <complex>
#include <cstdint>
#include <vector>

#include "slognls/errors.hpp"

namespace slognls {

using cplx = std::complex<double>;

enum class Domain { physical, spectral };

struct GridSpec {
    int d = 1;           // dimension, 1 or 2
    int n = 8;           // points per axis, power of two >= 8
    double length = 1.0; // box side L

    static GridSpec make(int d, int n, double length);

    double spacing() const { return length / n; }
    std::size_t size() const;
    double freq_unit() const;          // 2*pi/L
    double nyquist() const;            // pi/h
    double coord(int j) const { return -0.5 * length + j * spacing(); }
    double freq(int m) const;          // 2*pi/L * signed index
    int signed_index(int m) const { return m < n / 2 ? m : m - n; }

    // row-major decode of a flat index into per-axis indices
    void unravel(std::size_t idx, int* out) const;

    bool operator==(const GridSpec&) const = default;
};

struct Field {
    GridSpec spec;
    Domain domain = Domain::physical;
    bool real_tagged = false;
    std::vector<cplx> values;

    static Field zeros(const GridSpec& spec, Domain dom = Domain::physical);

    std::size_t size() const { return values.size(); }
    cplx& operator[](std::size_t i) { return values[i]; }
    const cplx& operator[](std::size_t i) const { return values[i]; }

    void check_shape() const;
    // enforces the real-tag invariant (zero imaginary part within tol, relative)
    void check_real(double tol = 1e-12) const;
};

Field to_spectral(const Field& f);
Field to_physical(const Field& f);

// component j of the spectral gradient; physical-tagged output
std::vector<Field> gradient(const Field& f);

// lattice samples of <x>^mu = (1+|x|^2)^{mu/2}
Field weight_samples(const GridSpec& spec, double mu);

// |k|^2 at flat spectral index (full frequency set, used by the Laplacian
// and the free flow)
double k_squared(const GridSpec& spec, std::size_t idx);

// |D(k)|^2 at flat spectral index (gradient multiplier, Nyquist zeroed)
double k_squared_grad(const GridSpec& spec, std::size_t idx);

// lattice inner products / norms (physical domain, Riemann sums)
double l2_norm(const Field& f);
cplx inner(const Field& f, const Field& g);  // sum conj(f) g h^d

}  // namespace slognls
