#include "switchrate/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#ifndef SWITCHRATE_VERSION
#define SWITCHRATE_VERSION "0.0.0"
#endif

namespace switchrate {

using nlohmann::json;

const char* version() { return SWITCHRATE_VERSION; }

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

void offset_to_line_col(const std::string& text, std::size_t offset, int& line,
                        int& col) {
  line = 1;
  col = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1, col = 1;
    // e.byte is 1-based and points just past the offending character.
    offset_to_line_col(text, e.byte > 0 ? e.byte - 1 : 0, line, col);
    std::ostringstream msg;
    msg << "JSON parse error at line " << line << ", column " << col << ": "
        << e.what();
    throw ParseError(msg.str(), line, col);
  }
}

const json& require(const json& j, const char* key, const char* context) {
  const auto it = j.find(key);
  if (it == j.end()) {
    std::ostringstream msg;
    msg << context << ": missing key \"" << key << "\"";
    throw ParseError(msg.str(), 0, 0);
  }
  return *it;
}

Mat as_matrix(const json& j, const char* context) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(std::string(context) + ": matrix must be a nonempty array of rows",
                     0, 0);
  }
  const auto rows = j.size();
  const auto cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) {
    throw ParseError(std::string(context) + ": matrix rows must be nonempty arrays",
                     0, 0);
  }
  Mat A(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw ParseError(std::string(context) + ": matrix rows have unequal lengths",
                       0, 0);
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[i][c].is_number()) {
        throw ParseError(std::string(context) + ": matrix entries must be numbers",
                         0, 0);
      }
      A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
          j[i][c].get<double>();
    }
  }
  return A;
}

json matrix_to_json(const Mat& A) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < A.cols(); ++c) row.push_back(A(i, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw InputError("cannot open file: " + file.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& file, const std::string& content) {
  std::ofstream out(file, std::ios::binary);
  if (!out) {
    throw InputError("cannot write file: " + file.string());
  }
  out << content;
  if (!out) {
    throw InputError("write failed: " + file.string());
  }
}

std::vector<int> as_int_vector(const json& j, const char* context) {
  if (!j.is_array()) {
    throw ParseError(std::string(context) + ": expected an array of integers", 0, 0);
  }
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_integer()) {
      throw ParseError(std::string(context) + ": expected integers", 0, 0);
    }
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<double> as_double_vector(const json& j, const char* context) {
  if (!j.is_array()) {
    throw ParseError(std::string(context) + ": expected an array of numbers", 0, 0);
  }
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) {
      throw ParseError(std::string(context) + ": expected numbers", 0, 0);
    }
    out.push_back(e.get<double>());
  }
  return out;
}

LyapunovFunction parse_lyapunov(const json& j, int dimension) {
  const std::string type =
      require(j, "type", "lyapunov").get<std::string>();
  if (type == "quadratic") {
    return QuadraticForm(as_matrix(require(j, "P", "lyapunov"), "lyapunov.P"));
  }
  if (type == "polynomial") {
    const json& jterms = require(j, "terms", "lyapunov");
    if (!jterms.is_array()) {
      throw ParseError("lyapunov.terms: expected an array", 0, 0);
    }
    std::vector<ScalarTerm> terms;
    for (const auto& jt : jterms) {
      ScalarTerm t;
      t.coeff = require(jt, "coeff", "lyapunov term").get<double>();
      t.exponents = as_int_vector(require(jt, "exponents", "lyapunov term"),
                                  "lyapunov term exponents");
      terms.push_back(std::move(t));
    }
    return PolynomialForm(dimension, std::move(terms));
  }
  throw ParseError("lyapunov.type must be \"quadratic\" or \"polynomial\"", 0, 0);
}

Subsystem parse_subsystem(const json& j, std::size_t index) {
  std::ostringstream ctx;
  ctx << "subsystems[" << index << "]";
  const std::string type =
      require(j, "type", ctx.str().c_str()).get<std::string>();
  Mat A = as_matrix(require(j, "matrix", ctx.str().c_str()),
                    (ctx.str() + ".matrix").c_str());
  if (type == "linear") {
    return Subsystem::linear(std::move(A));
  }
  if (type != "polynomial") {
    throw ParseError(ctx.str() + ".type must be \"linear\" or \"polynomial\"", 0, 0);
  }
  std::vector<MonomialTerm> terms;
  if (j.contains("terms")) {
    const json& jterms = j["terms"];
    if (!jterms.is_array()) {
      throw ParseError(ctx.str() + ".terms: expected an array", 0, 0);
    }
    for (const auto& jt : jterms) {
      MonomialTerm t;
      t.target = require(jt, "target", "subsystem term").get<int>();
      t.coeff = require(jt, "coeff", "subsystem term").get<double>();
      t.exponents = as_int_vector(require(jt, "exponents", "subsystem term"),
                                  "subsystem term exponents");
      terms.push_back(std::move(t));
    }
  }
  return Subsystem::polynomial(std::move(A), std::move(terms));
}

}  // namespace

SwitchedSystem parse_system(const std::string& text) {
  const json j = parse_json_text(text);
  try {
    const int dimension = require(j, "dimension", "system").get<int>();
    if (dimension < 1) {
      throw ParseError("system.dimension must be a positive integer", 0, 0);
    }
    const json& jsubs = require(j, "subsystems", "system");
    if (!jsubs.is_array() || jsubs.empty()) {
      throw ParseError("system.subsystems must be a nonempty array", 0, 0);
    }
    std::vector<Subsystem> subs;
    for (std::size_t i = 0; i < jsubs.size(); ++i) {
      subs.push_back(parse_subsystem(jsubs[i], i));
      if (subs.back().dimension() != dimension) {
        std::ostringstream msg;
        msg << "subsystems[" << i << "] has dimension "
            << subs.back().dimension() << ", expected " << dimension;
        throw ParseError(msg.str(), 0, 0);
      }
    }
    SwitchedSystem sys{std::move(subs),
                       parse_lyapunov(require(j, "lyapunov", "system"), dimension)};
    sys.validate();
    return sys;
  } catch (const json::exception& e) {
    throw ParseError(std::string("system description: ") + e.what(), 0, 0);
  }
}

SwitchedSystem load_system(const std::filesystem::path& file) {
  return parse_system(read_file(file));
}

std::string system_to_json(const SwitchedSystem& sys) {
  json j;
  j["dimension"] = sys.dimension();
  json subs = json::array();
  for (const auto& s : sys.subsystems) {
    json js;
    js["type"] = s.kind() == SubsystemKind::Linear ? "linear" : "polynomial";
    js["matrix"] = matrix_to_json(s.matrix());
    if (s.kind() == SubsystemKind::Polynomial) {
      json jterms = json::array();
      for (const auto& t : s.terms()) {
        json jt;
        jt["target"] = t.target;
        jt["coeff"] = t.coeff;
        jt["exponents"] = t.exponents;
        jterms.push_back(std::move(jt));
      }
      js["terms"] = std::move(jterms);
    }
    subs.push_back(std::move(js));
  }
  j["subsystems"] = std::move(subs);
  json jl;
  if (const auto* q = std::get_if<QuadraticForm>(&sys.lyapunov)) {
    jl["type"] = "quadratic";
    jl["P"] = matrix_to_json(q->P());
  } else {
    const auto& p = std::get<PolynomialForm>(sys.lyapunov);
    jl["type"] = "polynomial";
    json jterms = json::array();
    for (const auto& t : p.terms()) {
      json jt;
      jt["coeff"] = t.coeff;
      jt["exponents"] = t.exponents;
      jterms.push_back(std::move(jt));
    }
    jl["terms"] = std::move(jterms);
  }
  j["lyapunov"] = std::move(jl);
  return j.dump(2) + "\n";
}

void save_system(const SwitchedSystem& sys, const std::filesystem::path& file) {
  write_file(file, system_to_json(sys));
}

SwitchingSignal parse_signal(const std::string& text) {
  const json j = parse_json_text(text);
  try {
    auto times = as_double_vector(require(j, "switch_times", "signal"),
                                  "signal.switch_times");
    auto values =
        as_int_vector(require(j, "values", "signal"), "signal.values");
    const double horizon = require(j, "horizon", "signal").get<double>();
    return SwitchingSignal(std::move(times), std::move(values), horizon);
  } catch (const json::exception& e) {
    throw ParseError(std::string("signal description: ") + e.what(), 0, 0);
  }
}

SwitchingSignal load_signal(const std::filesystem::path& file) {
  return parse_signal(read_file(file));
}

std::string signal_to_json(const SwitchingSignal& u) {
  json j;
  j["switch_times"] = u.switch_times();
  j["values"] = u.values();
  j["horizon"] = u.horizon();
  return j.dump(2) + "\n";
}

void save_signal(const SwitchingSignal& u, const std::filesystem::path& file) {
  write_file(file, signal_to_json(u));
}

void save_signal_csv(const SwitchingSignal& u,
                     const std::filesystem::path& file) {
  std::ostringstream out;
  out << "t,i\n";
  for (std::size_t k = 0; k < u.switch_times().size(); ++k) {
    out << format_double(u.switch_times()[k]) << ',' << u.values()[k] << '\n';
  }
  write_file(file, out.str());
}

SwitchingSignal load_signal_csv(const std::filesystem::path& file,
                                double horizon) {
  const std::string text = read_file(file);
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "t,i") {
    throw ParseError("signal CSV: expected header \"t,i\"", 1, 1);
  }
  std::vector<double> times;
  std::vector<int> values;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ParseError("signal CSV: expected \"t,i\" row", lineno, 1);
    }
    try {
      std::size_t used = 0;
      const double t = std::stod(line.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("trailing characters");
      const int i = std::stoi(line.substr(comma + 1), &used);
      if (comma + 1 + used != line.size()) {
        throw std::invalid_argument("trailing characters");
      }
      times.push_back(t);
      values.push_back(i);
    } catch (const std::exception&) {
      throw ParseError("signal CSV: malformed number", lineno,
                       static_cast<int>(comma) + 2);
    }
  }
  return SwitchingSignal(std::move(times), std::move(values), horizon);
}

void save_trajectory_csv(const Trajectory& traj, const SwitchedSystem& sys,
                         const std::filesystem::path& file) {
  const int d = sys.dimension();
  std::ostringstream out;
  out << "t,i";
  for (int c = 1; c <= d; ++c) out << ",x" << c;
  out << ",V,normP\n";
  for (int j = 0; j < traj.size(); ++j) {
    out << format_double(traj.times[j]) << ',' << traj.input_trace[j];
    for (int c = 0; c < d; ++c) {
      out << ',' << format_double(traj.states[j](c));
    }
    out << ',' << format_double(value_of(sys.lyapunov, traj.states[j]));
    out << ',' << format_double(lyapunov_norm(sys.lyapunov, traj.states[j]));
    out << '\n';
  }
  write_file(file, out.str());
}

std::string certificate_to_json(const HomogeneousCertificate& cert) {
  json j;
  j["type"] = "homogeneous";
  j["version"] = version();
  j["delta"] = cert.delta;
  j["M"] = cert.M;
  j["per_subsystem_m"] = cert.per_subsystem_m;
  j["method"] =
      cert.method == GainMethod::ExactSvd ? "exact-svd" : "sphere-search";
  std::vector<double> argmax(cert.argmax_point.data(),
                             cert.argmax_point.data() + cert.argmax_point.size());
  j["argmax_point"] = argmax;
  j["samples"] = cert.samples;
  j["seed"] = cert.seed;
  j["resolution_limited"] = cert.resolution_limited;
  return j.dump(2) + "\n";
}

std::string certificate_to_json(const NonlinearCertificate& cert) {
  json j;
  j["type"] = "nonlinear";
  j["version"] = version();
  j["delta"] = cert.delta;
  j["R"] = cert.R;
  j["m"] = cert.m;
  j["m1"] = cert.m1;
  j["r1"] = cert.r1;
  j["r"] = cert.r;
  j["m2"] = cert.m2;
  j["alpha"] = cert.alpha;
  j["gamma"] = cert.gamma;
  j["rho"] = cert.rho;
  j["sphere_samples"] = cert.sphere_samples;
  j["annulus_directions"] = cert.annulus_directions;
  j["annulus_radial"] = cert.annulus_radial;
  j["seed"] = cert.seed;
  j["resolution_limited"] = cert.resolution_limited;
  return j.dump(2) + "\n";
}

std::string report_to_json(const VerificationReport& report,
                           const std::string& kind) {
  json j;
  j["type"] = "verification";
  j["kind"] = kind;
  j["version"] = version();
  j["trials"] = report.trials;
  j["points_checked"] = report.points_checked;
  j["violations"] = report.violations;
  j["max_ratio"] = report.max_ratio;
  j["worst_time"] = report.worst_time;
  j["worst_trial"] = report.worst_trial;
  j["seed"] = report.seed;
  j["tolerance"] = report.tolerance;
  j["passed"] = report.passed();
  return j.dump(2) + "\n";
}

void save_m_curve_csv(const std::vector<MCurvePoint>& curve,
                      const std::filesystem::path& file) {
  std::ostringstream out;
  out << "delta,M\n";
  for (const auto& p : curve) {
    out << format_double(p.delta) << ',' << format_double(p.M) << '\n';
  }
  write_file(file, out.str());
}

void save_beta_curve_csv(const std::vector<double>& deltas,
                         const std::vector<double>& Ms,
                         const std::vector<double>& t_grid,
                         const std::filesystem::path& file) {
  if (deltas.size() != Ms.size() || deltas.empty()) {
    throw InputError("save_beta_curve_csv: need one M per delta");
  }
  if (t_grid.empty()) {
    throw InputError("save_beta_curve_csv: empty time grid");
  }
  std::ostringstream out;
  out << 't';
  for (double d : deltas) out << ",beta_delta_" << format_double(d);
  out << '\n';
  for (double t : t_grid) {
    out << format_double(t);
    for (std::size_t k = 0; k < deltas.size(); ++k) {
      out << ',' << format_double(beta(Ms[k], deltas[k], 1.0, t));
    }
    out << '\n';
  }
  write_file(file, out.str());
}

void save_slow_convergence_csv(const std::vector<SlowConvergenceRow>& rows,
                               const std::filesystem::path& file) {
  std::ostringstream out;
  out << "T,time_to_half\n";
  for (const auto& r : rows) {
    out << format_double(r.T) << ',' << format_double(r.time_to_half) << '\n';
  }
  write_file(file, out.str());
}

}  // namespace switchrate
