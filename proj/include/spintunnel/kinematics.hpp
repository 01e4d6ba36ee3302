#pragma once

#include <complex>
#include <optional>

#include "spintunnel/units.hpp"

namespace spintunnel {

enum class Regime { Propagating, Evanescent, TotalInternal };

const char* regime_name(Regime r);

// Wave-vector data derived from a scenario. q and qx are complex: for E < V0
// or incidence past the critical angle qx is purely imaginary with Im >= 0
// (the decaying wave; growth is carried by the b amplitudes).
struct Kinematics {
  double k = 0.0;    // incident wave number, 1/nm
  double kx = 0.0;
  double ky = 0.0;
  std::complex<double> q;      // barrier wave number
  std::complex<double> qx;
  std::complex<double> theta;  // refraction angle, k sin(phi) = q sin(theta)
  Regime regime = Regime::Propagating;
  double kappa = 0.0;          // m v / hbar
};

// k = sqrt(2 m E)/hbar, q = k sqrt((E-V0)/E) (principal branch),
// qx = sqrt(q^2 - ky^2) with Im(qx) >= 0 and Re(qx) >= 0 on the real branch.
// Throws ResonantEdge when |E - V0| < 1e-12 meV and InvalidScenario on bad input.
Kinematics derive_kinematics(const PhysicalScenario& scenario);

// arcsin(sqrt((E-V0)/E)) for 0 < V0 < E; nullopt when no real critical angle exists.
std::optional<double> critical_angle(const PhysicalScenario& scenario);

}  // namespace spintunnel
