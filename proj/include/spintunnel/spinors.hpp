#pragma once

#include <Eigen/Dense>
#include <complex>

#include "spintunnel/algebra.hpp"

namespace spintunnel {

enum class SpinLabel { Up, Down, None };

// Plane-wave eigenstate of the momentum-space wave equation. Components are
// pinned to the published normalization (leading component 1), not unit norm,
// so amplitude coefficients compare directly with the closed forms.
struct Spinor {
  RepTag rep = RepTag::TwoByTwo;
  Eigen::VectorXcd components;
  Complex kx;
  double ky = 0.0;
  SpinLabel spin = SpinLabel::None;
};

// [sqrt(2) kappa/(kx + i ky), 1]; kappa = m v / hbar. Throws ZeroMomentum at k = 0
// (and on the kx + i ky = 0 line where the component diverges).
Spinor spinor_2x2(Complex kx, double ky, double mass_me, double v_mps);

// FourRepA eigenstates with D = 2 kappa^2 + kx^2 + ky^2:
//   up:   [1, 0, i(kx^2+ky^2-2 kappa^2)/D, 2 sqrt(2) kappa (kx + i ky)/D]
//   down: [0, 1, 2 sqrt(2) kappa (kx - i ky)/D, i(kx^2+ky^2-2 kappa^2)/D]
// Complex kx is the analytic continuation used for barrier-interior states.
Spinor spinor_4x4_up(Complex kx, double ky, double mass_me, double v_mps);
Spinor spinor_4x4_down(Complex kx, double ky, double mass_me, double v_mps);

// Relative residual of the eigenstate equation,
//   || hbar v (G.k) s - (eta E + eta^dag m v^2) s || / (scale ||s||),
// with E = hbar^2(kx^2+ky^2)/2m at the spinor's (complex) momentum and
// scale = max(|E|, m v^2, hbar v |k|).
double lle_residual(const MatrixRep& rep, const Spinor& s, double mass_me, double v_mps);

}  // namespace spintunnel
