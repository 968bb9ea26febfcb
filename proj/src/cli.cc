#include "armafisher/cli.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "armafisher/bezout.h"
#include "armafisher/error.h"
#include "armafisher/mc_oracle.h"
#include "armafisher/statespace.h"
#include "armafisher/stein.h"
#include "armafisher/structmat.h"

namespace armafisher::cli {

using nlohmann::json;

namespace {

std::vector<double> ReadCoefficients(const json& doc, const char* key) {
  if (!doc.contains(key)) return {};
  const json& arr = doc.at(key);
  if (!arr.is_array()) {
    throw Error(ErrorCode::kBadModel,
                std::string("model field '") + key + "' must be an array");
  }
  std::vector<double> out;
  for (const json& v : arr) {
    if (!v.is_number()) {
      throw Error(ErrorCode::kBadModel,
                  std::string("model field '") + key + "' must hold numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

json ComplexToJson(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json RootsToJson(const std::vector<Root>& roots) {
  json arr = json::array();
  for (const Root& r : roots) {
    json item = ComplexToJson(r.value);
    item["multiplicity"] = r.multiplicity;
    arr.push_back(item);
  }
  return arr;
}

json VectorToJson(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

json CVectorToJson(const CVector& v) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return json{{"re", re}, {"im", im}};
}

void DumpTo(const json& j, std::string& s) {
  switch (j.type()) {
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        s += "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      s += buf;
      return;
    }
    case json::value_t::array: {
      s += '[';
      bool first = true;
      for (const json& v : j) {
        if (!first) s += ',';
        first = false;
        DumpTo(v, s);
      }
      s += ']';
      return;
    }
    case json::value_t::object: {
      s += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) s += ',';
        first = false;
        s += json(it.key()).dump();
        s += ':';
        DumpTo(it.value(), s);
      }
      s += '}';
      return;
    }
    default:
      s += j.dump();
  }
}

struct Options {
  std::string model_path;
  double tol = 1e-8;
  bool fail_on_singular = false;
  bool oracle = false;
  std::uint64_t seed = 0;
  int horizon = 100000;
  int burn_in = 2000;
  int replications = 1;
  int threads = 0;
};

void RequireEqualDegrees(const ArmaModel& model) {
  if (model.p() != model.q()) {
    throw Error(ErrorCode::kDegreeMismatch, "equal degrees required (p=q)");
  }
}

double MaxAbsDiff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

json ModelHeader(const ArmaModel& model) {
  return json{{"p", model.p()}, {"q", model.q()}, {"sigma2", model.sigma2}};
}

int CmdFisher(const Options& opt, std::ostream& out, std::ostream& err) {
  const ArmaModel model = LoadModelFile(opt.model_path);
  const Matrix fisher = FisherInformation(model);
  const Vector s = SingularValues(fisher);
  const int rank = NumericalRank(fisher, opt.tol);
  json doc = ModelHeader(model);
  doc["fisher"] = MatrixToJson(fisher);
  doc["rank"] = rank;
  doc["singular_values"] = VectorToJson(s);
  if (opt.oracle) {
    const ScoreSystem sys = BuildScoreSystem(model.ar, model.ma);
    const Matrix kron =
        SolveSteinKronecker(sys.F, sys.b_in * sys.b_in.transpose()).X;
    doc["oracle"] = json{{"method", "kronecker"},
                         {"max_abs_diff", MaxAbsDiff(fisher, kron)}};
  }
  out << DumpJson(doc) << '\n';
  const bool singular = rank < model.p() + model.q();
  if (singular) err << "Fisher information is singular (rank " << rank << ")\n";
  return (singular && opt.fail_on_singular) ? kExitSingular : kExitOk;
}

int CmdBezout(const Options& opt, std::ostream& out, std::ostream&) {
  const ArmaModel model = LoadModelFile(opt.model_path);
  RequireEqualDegrees(model);
  const Matrix bez = BezoutMatrix(model.ma, model.ar);
  json doc = ModelHeader(model);
  doc["arguments"] = "B(c,a)";
  doc["bezout"] = MatrixToJson(bez);
  doc["rank"] = NumericalRank(bez, opt.tol);
  out << DumpJson(doc) << '\n';
  return kExitOk;
}

int CmdResultant(const Options& opt, std::ostream& out, std::ostream&) {
  const ArmaModel model = LoadModelFile(opt.model_path);
  const Matrix r = SylvesterMatrix(model.ma, model.ar);
  json doc = ModelHeader(model);
  doc["sylvester"] = MatrixToJson(r);
  doc["det"] = ResultantDeterminant(model.ar, model.ma);
  doc["det_from_roots"] = ResultantFromRoots(model.ar, model.ma);
  doc["rank"] = NumericalRank(r, opt.tol);
  out << DumpJson(doc) << '\n';
  return kExitOk;
}

int CmdKernel(const Options& opt, std::ostream& out, std::ostream&) {
  const ArmaModel model = LoadModelFile(opt.model_path);
  RequireEqualDegrees(model);
  const KernelBasis basis = BezoutKernelBasis(model.ma, model.ar, opt.tol);
  json doc = ModelHeader(model);
  doc["common_roots"] = RootsToJson(basis.common_roots);
  json vectors = json::array();
  for (const CVector& v : basis.vectors) vectors.push_back(CVectorToJson(v));
  doc["kernel"] = vectors;
  doc["max_residual"] = basis.max_residual;
  out << DumpJson(doc) << '\n';
  return kExitOk;
}

int CmdStein(const Options& opt, std::ostream& out, std::ostream&) {
  const ArmaModel model = LoadModelFile(opt.model_path);
  const SteinQuartet quartet = BuildSteinQuartet(model.ar, model.ma);
  json doc = ModelHeader(model);
  doc["I"] = MatrixToJson(quartet.I);
  doc["P"] = MatrixToJson(quartet.P);
  if (quartet.H) doc["H"] = MatrixToJson(*quartet.H);
  if (quartet.Q) doc["Q"] = MatrixToJson(*quartet.Q);
  json residuals = json::object();
  if (quartet.hq_residual) residuals["H_vs_Q"] = *quartet.hq_residual;
  if (quartet.ih_residual) residuals["I_vs_H"] = *quartet.ih_residual;
  if (quartet.pq_residual) residuals["P_vs_Q"] = *quartet.pq_residual;
  doc["residuals"] = residuals;
  if (opt.oracle) {
    const ScoreSystem sys = BuildScoreSystem(model.ar, model.ma);
    const Eigen::Index m = sys.G.rows();
    const Vector e = Vector::Unit(m, 0);
    const Matrix i_kron =
        SolveSteinKronecker(sys.F, sys.b_in * sys.b_in.transpose()).X;
    const Matrix p_kron = SolveSteinKronecker(sys.G, e * e.transpose()).X;
    doc["oracle"] =
        json{{"method", "kronecker"},
             {"max_abs_diff", std::max(MaxAbsDiff(quartet.I, i_kron),
                                       MaxAbsDiff(quartet.P, p_kron))}};
  }
  out << DumpJson(doc) << '\n';
  return kExitOk;
}

void WriteHumanReport(const ArmaModel& model, const IdentReport& report,
                      std::ostream& err) {
  const int m = model.p() + model.q();
  err << "ARMA(" << model.p() << "," << model.q() << ") identifiability: "
      << VerdictName(report.verdict)
      << (report.borderline ? " (borderline: detectors disagree)" : "") << '\n';
  err << "  Fisher rank " << report.rank << " of " << m;
  if (report.rank < m && report.rank > 0) {
    err << ", singular value gap " << report.singular_value_gap;
  }
  err << '\n';
  err << "  det R(c,-a) = " << report.resultant_det << ", rank "
      << report.resultant_rank << " of " << m << '\n';
  if (report.bezout_rank) {
    err << "  Bezout B(c,a) rank " << *report.bezout_rank << " of "
        << model.p() << '\n';
  }
  if (report.common_roots.empty()) {
    err << "  no common AR/MA roots\n";
  } else {
    for (const Root& r : report.common_roots) {
      err << "  common root " << r.value.real();
      if (r.value.imag() != 0.0) {
        err << (r.value.imag() > 0 ? " + " : " - ") << std::abs(r.value.imag())
            << "i";
      }
      err << " (multiplicity " << r.multiplicity << ")\n";
    }
  }
}

int CmdDiagnose(const Options& opt, std::ostream& out, std::ostream& err) {
  const ArmaModel model = LoadModelFile(opt.model_path);
  const IdentReport report = IdentifiabilityReport(model, opt.tol);
  json doc = ModelHeader(model);
  doc["verdict"] = VerdictName(report.verdict);
  doc["borderline"] = report.borderline;
  doc["fisher"] = MatrixToJson(report.fisher);
  doc["rank"] = report.rank;
  doc["singular_values"] = VectorToJson(report.singular_values);
  doc["singular_value_gap"] = report.singular_value_gap;
  doc["resultant_det"] = report.resultant_det;
  doc["resultant_rank"] = report.resultant_rank;
  doc["bezout_rank"] =
      report.bezout_rank ? json(*report.bezout_rank) : json(nullptr);
  doc["common_roots"] = RootsToJson(report.common_roots);
  json kernel = json::array();
  if (report.kernel_basis) {
    for (const CVector& v : report.kernel_basis->vectors) {
      kernel.push_back(CVectorToJson(v));
    }
  }
  doc["kernel"] = kernel;
  out << DumpJson(doc) << '\n';
  WriteHumanReport(model, report, err);
  const bool singular = report.verdict == Verdict::kSingular;
  return (singular && opt.fail_on_singular) ? kExitSingular : kExitOk;
}

int CmdSimulate(const Options& opt, std::ostream& out, std::ostream&) {
  SimConfig cfg{LoadModelFile(opt.model_path)};
  cfg.horizon = opt.horizon;
  cfg.burn_in = opt.burn_in;
  cfg.seed = opt.seed;
  cfg.replications = opt.replications;
  cfg.threads = opt.threads;
  const EmpiricalInfo info = SimulateScoreCovariance(cfg);
  const Matrix analytic = FisherInformation(cfg.model);
  double max_z = 0.0;
  for (Eigen::Index i = 0; i < analytic.rows(); ++i) {
    for (Eigen::Index j = 0; j < analytic.cols(); ++j) {
      const double se = info.standard_error(i, j);
      if (se > 0.0) {
        max_z = std::max(max_z, std::abs(info.mean(i, j) - analytic(i, j)) / se);
      }
    }
  }
  json doc = ModelHeader(cfg.model);
  doc["seed"] = cfg.seed;
  doc["horizon"] = cfg.horizon;
  doc["burn_in"] = cfg.burn_in;
  doc["replications"] = cfg.replications;
  doc["samples"] = info.samples;
  doc["mean"] = MatrixToJson(info.mean);
  doc["standard_error"] = MatrixToJson(info.standard_error);
  doc["analytic"] = MatrixToJson(analytic);
  doc["max_z_score"] = max_z;
  out << DumpJson(doc) << '\n';
  return kExitOk;
}

}  // namespace

ArmaModel ParseModel(const json& doc) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::kBadModel, "model file must hold a JSON object");
  }
  const std::vector<double> ar = ReadCoefficients(doc, "ar");
  const std::vector<double> ma = ReadCoefficients(doc, "ma");
  double sigma2 = 1.0;
  if (doc.contains("sigma2")) {
    if (!doc.at("sigma2").is_number()) {
      throw Error(ErrorCode::kBadModel, "model field 'sigma2' must be a number");
    }
    sigma2 = doc.at("sigma2").get<double>();
  }
  return MakeArmaModel(Polynomial::FromTail(ar), Polynomial::FromTail(ma),
                       sigma2);
}

ArmaModel LoadModelFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kBadModel, "cannot open model file '" + path + "'");
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kBadModel,
                "model file '" + path + "' is not valid JSON: " + e.what());
  }
  return ParseModel(doc);
}

json MatrixToJson(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

Matrix MatrixFromJson(const json& j) {
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = rows > 0 ? static_cast<Eigen::Index>(j[0].size()) : 0;
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != cols) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix in JSON");
    }
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = j[i][k].get<double>();
  }
  return m;
}

std::string DumpJson(const json& j) {
  std::string s;
  DumpTo(j, s);
  return s;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fisher information and identifiability of ARMA models"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--model", opt.model_path, "JSON model file")->required();
    sub->add_option("--tol", opt.tol, "rank / root-matching tolerance");
  };

  CLI::App* fisher = app.add_subcommand("fisher", "asymptotic Fisher information");
  add_common(fisher);
  fisher->add_flag("--oracle", opt.oracle, "cross-check with a Kronecker solve");
  fisher->add_flag("--fail-on-singular", opt.fail_on_singular,
                   "exit 4 when the matrix is singular");

  CLI::App* bezout = app.add_subcommand("bezout", "Bezout matrix B(c,a)");
  add_common(bezout);
  CLI::App* resultant = app.add_subcommand("resultant", "Sylvester matrix R(c,-a)");
  add_common(resultant);
  CLI::App* kernel = app.add_subcommand("kernel", "kernel basis of B(c,a)");
  add_common(kernel);

  CLI::App* stein = app.add_subcommand("stein", "Stein solutions I, P, H, Q");
  add_common(stein);
  stein->add_flag("--oracle", opt.oracle, "cross-check with a Kronecker solve");

  CLI::App* diagnose = app.add_subcommand("diagnose", "identifiability report");
  add_common(diagnose);
  diagnose->add_flag("--fail-on-singular", opt.fail_on_singular,
                     "exit 4 on a singular verdict");

  CLI::App* simulate =
      app.add_subcommand("simulate", "Monte Carlo score covariance");
  add_common(simulate);
  simulate->add_option("--seed", opt.seed, "generator seed");
  simulate->add_option("--horizon", opt.horizon, "retained steps per replication");
  simulate->add_option("--burn-in", opt.burn_in, "discarded initial steps");
  simulate->add_option("--replications", opt.replications, "independent runs");
  simulate->add_option("--threads", opt.threads, "worker threads (0 = auto)");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return e.get_exit_code() == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (fisher->parsed()) return CmdFisher(opt, out, err);
    if (bezout->parsed()) return CmdBezout(opt, out, err);
    if (resultant->parsed()) return CmdResultant(opt, out, err);
    if (kernel->parsed()) return CmdKernel(opt, out, err);
    if (stein->parsed()) return CmdStein(opt, out, err);
    if (diagnose->parsed()) return CmdDiagnose(opt, out, err);
    if (simulate->parsed()) return CmdSimulate(opt, out, err);
  } catch (const Error& e) {
    err << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << '\n';
    return IsNumericalFailure(e.code()) ? kExitNumerical : kExitValidation;
  }
  return kExitValidation;
}

}  // namespace armafisher::cli
