#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "spintunnel/matcher.hpp"

namespace spintunnel {

inline constexpr const char* kVersion = "0.1.0";

enum class Engine { ClosedForm, Oracle, Schrodinger };
enum class SweepVariable { Angle, Width, Energy };

const char* engine_name(Engine e);

struct SweepSpec {
  SweepVariable variable = SweepVariable::Angle;
  double from = -1.2;
  double to = 1.2;
  int points = 481;
  PhysicalScenario base;
  Model model = Model::FourByFour;
  RepTag rep = RepTag::FourRepA;
  std::vector<Engine> engines = {Engine::ClosedForm, Engine::Oracle, Engine::Schrodinger};

  void validate() const;  // throws InvalidScenario on bad ranges
};

struct SweepRow {
  double phi_rad = 0.0;
  double d_nm = 0.0;
  double energy_meV = 0.0;
  double barrier_meV = 0.0;
  Engine engine = Engine::ClosedForm;
  RepTag rep = RepTag::FourRepA;
  ScatterCoefficients c;
  double unitarity_resid = 0.0;
  double condition = 0.0;     // 0 for non-oracle engines
  std::string status = "ok";  // ok | skipped | disagree | error:<code>
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;  // ordered by (variable value, engine)
};

// Evaluates every requested engine at every grid point. Points inside the
// degenerate zone |E - V0| < 1e-6 meV become "skipped" rows; per-point errors
// become "error:<code>" rows; rows where engines disagree beyond 1e-9 on the
// spin-summed coefficients are flagged "disagree". Never throws per point.
SweepResult run_sweep(const SweepSpec& spec);

// fig2_3 | fig4 | fig5_left | fig5_right (parameters from the figure captions,
// m = 1 m_e, v = 1e6 m/s)
SweepSpec preset(const std::string& name);
std::vector<std::string> preset_names();

// Deterministic CSV/JSON (12 significant digits, byte-stable across runs).
void emit_csv(const SweepResult& result, std::ostream& os);
void emit_json(const SweepResult& result, std::ostream& os);
void emit_file(const SweepResult& result, const std::string& format, const std::string& path);

// ---- randomized validation grid -------------------------------------------

struct GridPoint {
  double energy_meV, barrier_meV, width_nm, angle_rad;
};

// mt19937_64(seed); E in [10,200] meV, V0 in [0,2E], d in [1,30] nm,
// phi in (-1.2,1.2); points with |E-V0| < 0.1 meV or within 0.01 rad of the
// total-internal-reflection edge are redrawn.
std::vector<GridPoint> random_grid(int n, std::uint64_t seed);

struct ValidationItem {
  std::string name;
  double worst = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ValidationReport {
  std::vector<ValidationItem> items;
  bool ok() const;
};

// Aggregates the invariant suites: unitarity, triple-engine agreement,
// spin-sum reduction, R1+R2 = R_QM, T2 = 0, phi-evenness, algebra identities,
// spinor residual fuzzing, regularized-spectrum structure.
ValidationReport validate(int grid_points = 200, std::uint64_t seed = 42);

}  // namespace spintunnel
