#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <string>
#include <vector>

#include "spintunnel/units.hpp"

namespace spintunnel {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

enum class RepTag { TwoByTwo, FourRepA, FourRepB };

const char* rep_name(RepTag tag);

// A concrete matrix set for the wave equation: two spatial matrices that pair
// with (kx, ky) plus the nilpotent eta and its adjoint.
//
// TwoByTwo: mu1 = I, mu2 = i sigma3, eta = (sigma1 - i sigma2)/sqrt(2).
// FourRepA: gamma basis (Dirac), spatial (gamma1, gamma2), eta = (gamma0 + i gamma5)/sqrt(2).
// FourRepB: eta = -i (gamma2 + gamma5)/sqrt(2). Since eta must anticommute with
//           both spatial matrices and gamma2 enters eta, the spatial pair for
//           this representation is (gamma1, gamma3).
struct MatrixRep {
  RepTag tag = RepTag::TwoByTwo;
  int dim = 2;
  Matrix spatial_x, spatial_y;
  Matrix eta, eta_dagger;
};

MatrixRep build_rep(RepTag tag);

// Dirac-basis gamma matrices (4x4)
Matrix gamma0();
Matrix gamma1();
Matrix gamma2();
Matrix gamma3();
Matrix gamma5();

// Momentum-space wave operator L(E, k) = hbar v (Gx kx + Gy ky) - eta E - eta^dag m v^2.
// Solutions exist exactly at E = hbar^2 k^2 / (2m).
Matrix lle_operator(const MatrixRep& rep, Complex kx, double ky, double mass_me,
                    double v_mps, Complex energy_meV);

struct AlgebraCheck {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct AlgebraReport {
  std::vector<AlgebraCheck> checks;
  bool ok() const;
  // name of the first failing identity, empty if all pass
  std::string first_failure() const;
};

// Verifies eta^2 = 0, (eta^dag)^2 = 0, eta_dagger == adjoint(eta), the
// anticommutation of eta with the spatial pair, and that the wave operator
// carries the Schrodinger dispersion: det L(E,k) = c (E0 - E)^(dim/2) with
// E0 = hbar^2 k^2/2m and c = (2 m v^2)^(dim/2), plus rank deficiency dim/2 at E0.
// Residual tolerance 1e-12 (relative to the natural scale of each identity).
AlgebraReport verify_algebra(const MatrixRep& rep);

// Eigenvalues of H = (eta + eps eta^dag)^{-1} (hbar v (G.k) - m v^2 eta^dag).
// Two converge to hbar^2 k^2/2m as eps -> 0; two diverge like -m v^2/eps.
// Throws SingularEtaPrime when cond(eta') > 1e14.
std::array<Complex, 4> hamiltonian_spectrum(const MatrixRep& rep, double kx, double ky,
                                            double mass_me, double v_mps, double eps);

}  // namespace spintunnel
