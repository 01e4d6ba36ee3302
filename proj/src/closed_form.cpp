#include "spintunnel/closed_form.hpp"

#include <cmath>
#include <sstream>

namespace spintunnel {

namespace {

// complex-continued evaluations must come out real; a surviving imaginary part
// signals a branch-cut mistake
double enforce_real(std::complex<double> z, const char* what) {
  if (!(std::abs(z.imag()) < 1e-10 * std::abs(z.real()) + 1e-14)) {
    std::ostringstream msg;
    msg << what << " has non-negligible imaginary residue " << z.imag();
    throw Error(ErrorCode::VerificationFailed, msg.str());
  }
  return z.real();
}

struct Fractions {
  double tfrac;  // 4 kx^2 qx^2 / Den
  double rfrac;  // (kx^2 - qx^2)^2 sin^2(d qx) / Den
};

// Den = 4 kx^2 qx^2 cos^2(d qx) + (kx^2 + qx^2)^2 sin^2(d qx)
Fractions fractions(const ClosedFormInput& in) {
  if (std::abs(in.qx) < 1e-14)
    throw Error(ErrorCode::QxZero, "closed forms are singular at qx = 0 (E = V0 edge)");
  const double kx2 = in.kx * in.kx;
  const std::complex<double> qx2 = in.qx * in.qx;

  // opaque-barrier asymptote: cosh/sinh overflow past d*|Im qx| ~ 350, where
  // T has long underflowed and sinh^2/Den -> 1/(kx^2 - qx^2)^2
  if (in.d * in.qx.imag() > 350.0) {
    return {0.0, 1.0};
  }

  const std::complex<double> s = std::sin(in.d * in.qx);
  const std::complex<double> c = std::cos(in.d * in.qx);
  const std::complex<double> tnum = 4.0 * kx2 * qx2;
  const std::complex<double> den = tnum * c * c + (kx2 + qx2) * (kx2 + qx2) * s * s;
  const std::complex<double> refl = (kx2 - qx2) * (kx2 - qx2) * s * s;
  return {enforce_real(tnum / den, "T fraction"), enforce_real(refl / den, "R fraction")};
}

}  // namespace

ClosedFormInput closed_form_input(const PhysicalScenario& scenario, const Kinematics& kin) {
  return ClosedFormInput{kin.kx, kin.ky, kin.qx, scenario.width_nm, kin.kappa};
}

std::pair<double, double> tr_2x2(const ClosedFormInput& in) {
  const Fractions f = fractions(in);
  return {f.tfrac, f.rfrac};
}

ScatterCoefficients coeffs_rep_a(const ClosedFormInput& in) {
  const Fractions f = fractions(in);
  const double kap2 = in.kappa * in.kappa;
  const double k2 = in.kx * in.kx + in.ky * in.ky;
  const double D2 = (2.0 * kap2 + k2) * (2.0 * kap2 + k2);
  // 4 kap^4 + 4 kap^2 (ky^2 - kx^2) + k^4; together with 8 kap^2 kx^2 this
  // completes (2 kap^2 + k^2)^2, which is what makes the split unitary
  const double r1num = 4.0 * kap2 * kap2 + 4.0 * kap2 * (in.ky * in.ky - in.kx * in.kx) + k2 * k2;

  ScatterCoefficients c;
  c.T1 = f.tfrac;
  c.T2 = 0.0;
  c.R1 = r1num / D2 * f.rfrac;
  c.R2 = 8.0 * kap2 * in.kx * in.kx / D2 * f.rfrac;
  return c;
}

ScatterCoefficients coeffs_rep_b(const ClosedFormInput& in) {
  const Fractions f = fractions(in);
  const double kap2 = in.kappa * in.kappa;
  const double ky2 = in.ky * in.ky;
  const double pref = 2.0 * (ky2 + kap2);

  ScatterCoefficients c;
  c.T1 = f.tfrac;
  c.T2 = 0.0;
  c.R1 = ky2 / pref * f.rfrac;
  c.R2 = (ky2 + 2.0 * kap2) / pref * f.rfrac;
  return c;
}

}  // namespace spintunnel
