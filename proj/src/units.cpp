#include "spintunnel/units.hpp"

#include <cmath>
#include <sstream>

namespace spintunnel {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidScenario: return "invalid_scenario";
    case ErrorCode::ResonantEdge: return "resonant_edge";
    case ErrorCode::ZeroMomentum: return "zero_momentum";
    case ErrorCode::QxZero: return "qx_zero";
    case ErrorCode::IllConditioned: return "ill_conditioned";
    case ErrorCode::SingularEtaPrime: return "singular_eta_prime";
    case ErrorCode::VerificationFailed: return "verification_failed";
    case ErrorCode::IoError: return "io_error";
  }
  return "unknown";
}

void PhysicalScenario::validate() const {
  std::ostringstream bad;
  if (!(energy_meV > 0.0) || !std::isfinite(energy_meV)) bad << "energy must be > 0; ";
  if (!(width_nm > 0.0) || !std::isfinite(width_nm)) bad << "width must be > 0; ";
  if (!(mass_me > 0.0) || !std::isfinite(mass_me)) bad << "mass must be > 0; ";
  if (!(fermi_velocity_mps > 0.0) || !std::isfinite(fermi_velocity_mps))
    bad << "fermi velocity must be > 0; ";
  if (!(std::abs(angle_rad) < 1.5707963267948966) || !std::isfinite(angle_rad))
    bad << "|angle| must be < pi/2; ";
  if (!std::isfinite(barrier_meV)) bad << "barrier height must be finite; ";
  const std::string msg = bad.str();
  if (!msg.empty()) throw Error(ErrorCode::InvalidScenario, msg);
}

}  // namespace spintunnel
