#include "spintunnel/kinematics.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace spintunnel {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::Propagating: return "propagating";
    case Regime::Evanescent: return "evanescent";
    case Regime::TotalInternal: return "total_internal";
  }
  return "unknown";
}

Kinematics derive_kinematics(const PhysicalScenario& s) {
  s.validate();
  if (std::abs(s.energy_meV - s.barrier_meV) < 1e-12)
    throw Error(ErrorCode::ResonantEdge,
                "E == V0 within 1e-12 meV: qx degenerates, perturb the scenario");

  const double m = s.mass_internal();
  const double E = s.energy_meV;
  const double V0 = s.barrier_meV;

  Kinematics kin;
  kin.kappa = s.kappa();
  kin.k = std::sqrt(2.0 * m * E) / units::hbar_meV_ps;
  kin.kx = kin.k * std::cos(s.angle_rad);
  kin.ky = kin.k * std::sin(s.angle_rad);

  // principal branch: E < V0 gives q on the positive imaginary axis
  kin.q = kin.k * std::sqrt(std::complex<double>((E - V0) / E, 0.0));
  const double qx2 = (kin.q * kin.q).real() - kin.ky * kin.ky;  // exactly real
  kin.qx = qx2 >= 0.0 ? std::complex<double>(std::sqrt(qx2), 0.0)
                      : std::complex<double>(0.0, std::sqrt(-qx2));

  // ky conservation: k sin(phi) = q sin(theta)
  kin.theta = std::abs(kin.q) > 0.0
                  ? std::asin(std::complex<double>(kin.ky, 0.0) / kin.q)
                  : std::complex<double>(0.0, 0.0);

  if (E < V0) {
    kin.regime = Regime::Evanescent;
  } else if (V0 > 0.0 && kin.ky * kin.ky > (kin.q * kin.q).real()) {
    kin.regime = Regime::TotalInternal;
  } else {
    kin.regime = Regime::Propagating;
  }
  return kin;
}

std::optional<double> critical_angle(const PhysicalScenario& s) {
  s.validate();
  if (s.barrier_meV <= 0.0 || s.barrier_meV >= s.energy_meV) return std::nullopt;
  return std::asin(std::sqrt((s.energy_meV - s.barrier_meV) / s.energy_meV));
}

}  // namespace spintunnel
