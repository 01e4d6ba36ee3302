#pragma once

#include <complex>
#include <utility>

#include "spintunnel/kinematics.hpp"

namespace spintunnel {

// Symbol combinations entering the published coefficient expressions.
struct ClosedFormInput {
  double kx = 0.0;               // 1/nm, real (incident)
  double ky = 0.0;
  std::complex<double> qx;       // complex barrier wave number component
  double d = 0.0;                // nm
  double kappa = 0.0;            // m v / hbar
};

ClosedFormInput closed_form_input(const PhysicalScenario& scenario, const Kinematics& kin);

// Spin-resolved coefficients; the 2x2 model maps to (T1, R1) with T2 = R2 = 0.
struct ScatterCoefficients {
  double T1 = 0.0, T2 = 0.0, R1 = 0.0, R2 = 0.0;
  double T_sum() const { return T1 + T2; }
  double R_sum() const { return R1 + R2; }
  double unitarity_residual() const { return T1 + T2 + R1 + R2 - 1.0; }
};

// T = 4 kx^2 qx^2 / Den, R = (kx^2-qx^2)^2 sin^2(d qx) / Den with
// Den = 4 kx^2 qx^2 cos^2(d qx) + (kx^2+qx^2)^2 sin^2(d qx), evaluated with
// complex qx. Throws QxZero on the degenerate edge.
std::pair<double, double> tr_2x2(const ClosedFormInput& in);

// Spin-up incidence, eta = (gamma0 + i gamma5)/sqrt(2): T1 as in tr_2x2, T2 = 0,
//   R1 = (4k^4 + 4k^2(ky^2-kx^2) + (kx^2+ky^2)^2)(kx^2-qx^2)^2 sin^2(d qx) / ((2k^2+kx^2+ky^2)^2 Den)
//   R2 = 8 k^2 kx^2 (kx^2-qx^2)^2 sin^2(d qx) / ((2k^2+kx^2+ky^2)^2 Den)
// with k = kappa shorthand.
ScatterCoefficients coeffs_rep_a(const ClosedFormInput& in);

// eta = -i(gamma2 + gamma5)/sqrt(2): same transmission, reflection split
//   R1 = ky^2 (kx^2-qx^2)^2 sin^2(d qx) / (2 (ky^2+kappa^2) Den)
//   R2 = (ky^2 + 2 kappa^2)(kx^2-qx^2)^2 sin^2(d qx) / (2 (ky^2+kappa^2) Den)
// (sin form of the published cot expressions; finite at resonance where both vanish).
ScatterCoefficients coeffs_rep_b(const ClosedFormInput& in);

}  // namespace spintunnel
