#include "spintunnel/algebra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace spintunnel {

namespace {

constexpr Complex I{0.0, 1.0};

Eigen::Matrix2cd sigma1() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}
Eigen::Matrix2cd sigma2() {
  Eigen::Matrix2cd m;
  m << 0, -I, I, 0;
  return m;
}
Eigen::Matrix2cd sigma3() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Matrix block_off(const Eigen::Matrix2cd& s) {
  Matrix g = Matrix::Zero(4, 4);
  g.block<2, 2>(0, 2) = s;
  g.block<2, 2>(2, 0) = -s;
  return g;
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

const char* rep_name(RepTag tag) {
  switch (tag) {
    case RepTag::TwoByTwo: return "2x2";
    case RepTag::FourRepA: return "4x4-a";
    case RepTag::FourRepB: return "4x4-b";
  }
  return "unknown";
}

Matrix gamma0() {
  Matrix g = Matrix::Zero(4, 4);
  g.block<2, 2>(0, 0) = Eigen::Matrix2cd::Identity();
  g.block<2, 2>(2, 2) = -Eigen::Matrix2cd::Identity();
  return g;
}
Matrix gamma1() { return block_off(sigma1()); }
Matrix gamma2() { return block_off(sigma2()); }
Matrix gamma3() { return block_off(sigma3()); }
Matrix gamma5() {
  Matrix g = Matrix::Zero(4, 4);
  g.block<2, 2>(0, 2) = Eigen::Matrix2cd::Identity();
  g.block<2, 2>(2, 0) = Eigen::Matrix2cd::Identity();
  return g;
}

MatrixRep build_rep(RepTag tag) {
  MatrixRep rep;
  rep.tag = tag;
  const double s2 = std::sqrt(2.0);
  switch (tag) {
    case RepTag::TwoByTwo:
      rep.dim = 2;
      rep.spatial_x = Matrix::Identity(2, 2);
      rep.spatial_y = I * sigma3();
      rep.eta = (sigma1() - I * sigma2()) / s2;
      break;
    case RepTag::FourRepA:
      rep.dim = 4;
      rep.spatial_x = gamma1();
      rep.spatial_y = gamma2();
      rep.eta = (gamma0() + I * gamma5()) / s2;
      break;
    case RepTag::FourRepB:
      rep.dim = 4;
      // gamma2 enters eta, so the spatial pair anticommuting with it is (gamma1, gamma3)
      rep.spatial_x = gamma1();
      rep.spatial_y = gamma3();
      rep.eta = -I * (gamma2() + gamma5()) / s2;
      break;
  }
  rep.eta_dagger = rep.eta.adjoint();
  return rep;
}

Matrix lle_operator(const MatrixRep& rep, Complex kx, double ky, double mass_me,
                    double v_mps, Complex energy_meV) {
  const double m = mass_me * units::electron_mass;
  const double v = units::mps_to_nm_per_ps(v_mps);
  return units::hbar_meV_ps * v * (rep.spatial_x * kx + rep.spatial_y * ky) -
         rep.eta * energy_meV - rep.eta_dagger * (m * v * v);
}

bool AlgebraReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string AlgebraReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return c.name;
  return {};
}

AlgebraReport verify_algebra(const MatrixRep& rep) {
  AlgebraReport report;
  const double tol = 1e-12;
  auto add = [&](const std::string& name, double residual) {
    report.checks.push_back({name, residual, tol, residual < tol});
  };

  const Matrix& eta = rep.eta;
  const Matrix& etd = rep.eta_dagger;
  const Matrix id = Matrix::Identity(rep.dim, rep.dim);

  add("eta nilpotent (eta^2 = 0)", max_abs(eta * eta));
  add("eta_dagger nilpotent", max_abs(etd * etd));
  add("eta_dagger is adjoint of eta", max_abs(etd - eta.adjoint()));
  add("(eta + eta_dagger)^2 = 2", max_abs((eta + etd) * (eta + etd) - 2.0 * id) / 2.0);

  if (rep.dim == 4) {
    add("spatial_x^2 = -1", max_abs(rep.spatial_x * rep.spatial_x + id));
    add("spatial_y^2 = -1", max_abs(rep.spatial_y * rep.spatial_y + id));
    add("{spatial_x, spatial_y} = 0",
        max_abs(rep.spatial_x * rep.spatial_y + rep.spatial_y * rep.spatial_x));
    add("{spatial, eta} = 0",
        std::max(max_abs(rep.spatial_x * eta + eta * rep.spatial_x),
                 max_abs(rep.spatial_y * eta + eta * rep.spatial_y)));
    add("{spatial, eta_dagger} = 0",
        std::max(max_abs(rep.spatial_x * etd + etd * rep.spatial_x),
                 max_abs(rep.spatial_y * etd + etd * rep.spatial_y)));
  }

  // Applying the equation twice must land on the Schrodinger dispersion:
  // det L(E,k) = (2 m v^2 (E0 - E))^(dim/2) with E0 = hbar^2 k^2/2m, and the
  // operator drops rank by dim/2 exactly on shell.
  const double mass_me = 1.0, v_mps = 1e6;
  const double m = mass_me * units::electron_mass;
  const double v = units::mps_to_nm_per_ps(v_mps);
  const double mv2 = m * v * v;
  const int p = rep.dim / 2;

  double worst_det = 0.0, worst_rank = 0.0, worst_offshell = 0.0;
  const double momenta[][2] = {{1.3, -0.4}, {0.2, 0.9}, {2.7, 1.9}, {0.05, -0.02}, {6.0, 7.5}};
  for (const auto& km : momenta) {
    const double kx = km[0], ky = km[1];
    const double E0 = units::hbar_meV_ps * units::hbar_meV_ps * (kx * kx + ky * ky) / (2.0 * m);
    for (double f : {0.3, 1.7, -2.0}) {
      const Complex det = lle_operator(rep, kx, ky, mass_me, v_mps, f * E0).determinant();
      const Complex pred = std::pow(Complex(2.0 * mv2 * (E0 - f * E0), 0.0), p);
      worst_det = std::max(worst_det, std::abs(det - pred) / std::abs(pred));
    }
    Eigen::JacobiSVD<Matrix> svd(lle_operator(rep, kx, ky, mass_me, v_mps, E0));
    const auto& sv = svd.singularValues();
    worst_rank = std::max(worst_rank, sv(rep.dim - 1) / sv(0));
    if (p == 2) worst_rank = std::max(worst_rank, sv(rep.dim - 2) / sv(0));
    Eigen::JacobiSVD<Matrix> svd_off(lle_operator(rep, kx, ky, mass_me, v_mps, 1.25 * E0));
    const auto& sv_off = svd_off.singularValues();
    // off shell the operator must stay invertible
    worst_offshell = std::max(worst_offshell, 1e-12 * sv_off(0) / sv_off(rep.dim - 1));
  }
  add("dispersion det L = (2mv^2 (E0-E))^" + std::to_string(p), worst_det);
  add("on-shell rank deficiency = " + std::to_string(p), worst_rank);
  add("off-shell invertibility", worst_offshell);

  return report;
}

std::array<Complex, 4> hamiltonian_spectrum(const MatrixRep& rep, double kx, double ky,
                                            double mass_me, double v_mps, double eps) {
  if (rep.dim != 4)
    throw Error(ErrorCode::InvalidScenario, "hamiltonian_spectrum requires a 4x4 representation");
  if (!(eps > 0.0))
    throw Error(ErrorCode::InvalidScenario, "epsilon must be > 0");

  const Matrix etap = rep.eta + eps * rep.eta_dagger;
  Eigen::JacobiSVD<Matrix> svd(etap);
  const auto& sv = svd.singularValues();
  if (sv(3) <= 0.0 || sv(0) / sv(3) > 1e14)
    throw Error(ErrorCode::SingularEtaPrime, "eta + eps*eta_dagger is numerically singular");

  const double m = mass_me * units::electron_mass;
  const double v = units::mps_to_nm_per_ps(v_mps);
  const Matrix rhs = units::hbar_meV_ps * v * (rep.spatial_x * kx + rep.spatial_y * ky) -
                     (m * v * v) * rep.eta_dagger;
  const Matrix H = etap.partialPivLu().solve(rhs);

  Eigen::ComplexEigenSolver<Matrix> es(H, /*computeEigenvectors=*/false);
  std::array<Complex, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = es.eigenvalues()(i);
  return out;
}

}  // namespace spintunnel
