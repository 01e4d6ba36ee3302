#pragma once

#include "spintunnel/errors.hpp"

namespace spintunnel {

// Internal unit system: meV, nm, ps. Wave numbers come out O(1) 1/nm and all
// coefficient formulas are evaluated close to unit scale.
namespace units {

// CODATA 2018
inline constexpr double hbar_meV_ps = 0.6582119569;                  // meV ps
inline constexpr double c_nm_per_ps = 299792.458;                    // nm/ps (exact)
inline constexpr double electron_mass_energy_meV = 5.1099895000e8;   // m_e c^2
inline constexpr double electron_mass_kg = 9.1093837015e-31;
inline constexpr double joule_per_meV = 1.602176634e-22;             // exact

// m_e in meV ps^2 / nm^2
inline constexpr double electron_mass =
    electron_mass_energy_meV / (c_nm_per_ps * c_nm_per_ps);

inline constexpr double meV_to_joule(double e_meV) { return e_meV * joule_per_meV; }
inline constexpr double joule_to_meV(double e_J) { return e_J / joule_per_meV; }
inline constexpr double nm_to_m(double x_nm) { return x_nm * 1e-9; }
inline constexpr double m_to_nm(double x_m) { return x_m * 1e9; }
// 1 m/s = 1e9 nm / 1e12 ps
inline constexpr double mps_to_nm_per_ps(double v_mps) { return v_mps * 1e-3; }
inline constexpr double nm_per_ps_to_mps(double v) { return v * 1e3; }

}  // namespace units

// Full experiment definition. Mass is a multiple of the free electron mass;
// the Fermi velocity is given in m/s (the material scale replacing c).
struct PhysicalScenario {
  double energy_meV = 80.0;
  double barrier_meV = 70.0;
  double width_nm = 10.0;
  double angle_rad = 0.0;
  double mass_me = 1.0;
  double fermi_velocity_mps = 1e6;

  // throws Error{InvalidScenario} unless all invariants hold
  void validate() const;

  double mass_internal() const { return mass_me * units::electron_mass; }
  double velocity_internal() const { return units::mps_to_nm_per_ps(fermi_velocity_mps); }
  // kappa = m v / hbar, the wave-number scale formed from mass and Fermi velocity
  double kappa() const { return mass_internal() * velocity_internal() / units::hbar_meV_ps; }
};

}  // namespace spintunnel
