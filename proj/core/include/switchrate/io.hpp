#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "switchrate/errors.hpp"
#include "switchrate/integrate.hpp"
#include "switchrate/rates.hpp"
#include "switchrate/signals.hpp"
#include "switchrate/subsystem.hpp"

namespace switchrate {

/// Malformed input file; carries 1-based line/column of the first offending
/// character when known (0 when not applicable).
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int column)
      : InputError(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// System description JSON: {"dimension": d, "subsystems": [...], "lyapunov": {...}}
SwitchedSystem load_system(const std::filesystem::path& file);
SwitchedSystem parse_system(const std::string& text);
std::string system_to_json(const SwitchedSystem& sys);
void save_system(const SwitchedSystem& sys, const std::filesystem::path& file);

// Signal JSON: {"switch_times": [...], "values": [...], "horizon": h}
SwitchingSignal load_signal(const std::filesystem::path& file);
SwitchingSignal parse_signal(const std::string& text);
std::string signal_to_json(const SwitchingSignal& u);
void save_signal(const SwitchingSignal& u, const std::filesystem::path& file);

// Signal CSV alternative: header "t,i", one row per segment start.
void save_signal_csv(const SwitchingSignal& u, const std::filesystem::path& file);
SwitchingSignal load_signal_csv(const std::filesystem::path& file,
                                double horizon);

/// Trajectory CSV: header t,i,x1,...,xd,V,normP; 17-significant-digit
/// decimals, '.' separator, LF line endings.
void save_trajectory_csv(const Trajectory& traj, const SwitchedSystem& sys,
                         const std::filesystem::path& file);

// Certificates and reports as JSON (includes tool version and seeds).
std::string certificate_to_json(const HomogeneousCertificate& cert);
std::string certificate_to_json(const NonlinearCertificate& cert);
std::string report_to_json(const VerificationReport& report,
                           const std::string& kind);

// Curve CSVs for the M(delta) and beta(1, .) graphs.
void save_m_curve_csv(const std::vector<MCurvePoint>& curve,
                      const std::filesystem::path& file);
void save_beta_curve_csv(const std::vector<double>& deltas,
                         const std::vector<double>& Ms,
                         const std::vector<double>& t_grid,
                         const std::filesystem::path& file);
void save_slow_convergence_csv(const std::vector<SlowConvergenceRow>& rows,
                               const std::filesystem::path& file);

/// %.17g rendering used by every CSV writer (locale-independent).
std::string format_double(double v);

}  // namespace switchrate
