#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "spintunnel/closed_form.hpp"
#include "spintunnel/spinors.hpp"

namespace spintunnel {

enum class Model { TwoByTwo, FourByFour };

// Wavefunction-continuity system at x = 0 and x = d. The common e^{i ky y}
// factor is cancelled before assembly; region-II terms carry e^{+-i qx x}.
// 2x2 model: 4 unknowns (r, a, b, t); 4x4: 8 unknowns (r1, r2, a1, a2, b1, b2, t1, t2).
struct LinearSystem {
  Model model = Model::TwoByTwo;
  RepTag rep = RepTag::TwoByTwo;
  Eigen::MatrixXcd A;
  Eigen::VectorXcd b;
};

struct ScatterAmplitudes {
  Model model = Model::TwoByTwo;
  RepTag rep = RepTag::TwoByTwo;
  std::vector<Complex> reflected;    // r  or  r1, r2
  std::vector<Complex> transmitted;  // t  or  t1, t2
  std::vector<Complex> interior;     // a, b  or  a1, a2, b1, b2 (diagnostics only)
  double condition = 0.0;            // 2-norm condition of the equilibrated matrix
  double residual = 0.0;             // relative solve residual
};

LinearSystem assemble_system(const PhysicalScenario& scenario, Model model, RepTag rep);

// Dense elimination with partial pivoting on the column-equilibrated matrix.
// Throws IllConditioned when the condition estimate exceeds 1e12.
ScatterAmplitudes solve_amplitudes(const LinearSystem& system);

// T_i = |t_i|^2, R_i = |r_i|^2. Regions I and III are barrier-free and share
// the incident wave number, so no flux-ratio factor appears.
ScatterCoefficients coefficients_from_amplitudes(const ScatterAmplitudes& amps);

// assemble + solve + coefficients
struct ScatterSolution {
  ScatterCoefficients coefficients;
  ScatterAmplitudes amplitudes;
};
ScatterSolution scatter(const PhysicalScenario& scenario, Model model, RepTag rep);

// Textbook two-interface transfer matrix for the rectangular barrier along x
// with effective energy Ex = hbar^2 kx^2/2m. Third, independent route to the
// spin-summed coefficients; returns (T, R).
std::pair<double, double> schrodinger_transfer_matrix(const PhysicalScenario& scenario);

}  // namespace spintunnel
