#include "spintunnel/spinors.hpp"

#include <cmath>

namespace spintunnel {

namespace {
constexpr Complex I{0.0, 1.0};
}

Spinor spinor_2x2(Complex kx, double ky, double mass_me, double v_mps) {
  const Complex denom = kx + I * ky;
  if (std::abs(denom) < 1e-14 || (std::abs(kx) == 0.0 && ky == 0.0))
    throw Error(ErrorCode::ZeroMomentum, "2x2 spinor undefined at kx + i ky = 0");
  const double kap = mass_me * units::electron_mass * units::mps_to_nm_per_ps(v_mps) /
                     units::hbar_meV_ps;
  Spinor s;
  s.rep = RepTag::TwoByTwo;
  s.kx = kx;
  s.ky = ky;
  s.spin = SpinLabel::None;
  s.components = Eigen::VectorXcd(2);
  s.components << std::sqrt(2.0) * kap / denom, Complex(1.0, 0.0);
  return s;
}

namespace {

Spinor spinor_4x4(Complex kx, double ky, double mass_me, double v_mps, SpinLabel spin) {
  if (std::abs(kx) == 0.0 && ky == 0.0)
    throw Error(ErrorCode::ZeroMomentum, "4x4 spinor undefined at k = 0");
  const double kap = mass_me * units::electron_mass * units::mps_to_nm_per_ps(v_mps) /
                     units::hbar_meV_ps;
  const Complex k2 = kx * kx + ky * ky;
  const Complex D = 2.0 * kap * kap + k2;
  const Complex c3 = I * (k2 - 2.0 * kap * kap) / D;

  Spinor s;
  s.rep = RepTag::FourRepA;
  s.kx = kx;
  s.ky = ky;
  s.spin = spin;
  s.components = Eigen::VectorXcd(4);
  if (spin == SpinLabel::Up) {
    s.components << 1.0, 0.0, c3, 2.0 * std::sqrt(2.0) * kap * (kx + I * ky) / D;
  } else {
    s.components << 0.0, 1.0, 2.0 * std::sqrt(2.0) * kap * (kx - I * ky) / D, c3;
  }
  return s;
}

}  // namespace

Spinor spinor_4x4_up(Complex kx, double ky, double mass_me, double v_mps) {
  return spinor_4x4(kx, ky, mass_me, v_mps, SpinLabel::Up);
}

Spinor spinor_4x4_down(Complex kx, double ky, double mass_me, double v_mps) {
  return spinor_4x4(kx, ky, mass_me, v_mps, SpinLabel::Down);
}

double lle_residual(const MatrixRep& rep, const Spinor& s, double mass_me, double v_mps) {
  const double m = mass_me * units::electron_mass;
  const double v = units::mps_to_nm_per_ps(v_mps);
  const Complex k2 = s.kx * s.kx + Complex(s.ky * s.ky, 0.0);
  const Complex E = units::hbar_meV_ps * units::hbar_meV_ps * k2 / (2.0 * m);
  const Matrix L = lle_operator(rep, s.kx, s.ky, mass_me, v_mps, E);
  const double scale = std::max({std::abs(E), m * v * v,
                                 units::hbar_meV_ps * v * std::sqrt(std::abs(k2))});
  return (L * s.components).norm() / (scale * s.components.norm());
}

}  // namespace spintunnel
