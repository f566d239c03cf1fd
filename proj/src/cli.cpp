#include "strongfact/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "strongfact/basis.hpp"
#include "strongfact/certifier.hpp"
#include "strongfact/error.hpp"
#include "strongfact/factorization.hpp"
#include "strongfact/io.hpp"
#include "strongfact/representing.hpp"
#include "strongfact/seq_norms.hpp"
#include "strongfact/suites.hpp"

namespace strongfact {

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Exponent need_exponent(const std::optional<std::string>& v, const char* flag, const std::string& command) {
  if (!v) throw Error(ErrorCode::SpecError, command + " needs --" + flag);
  try {
    return Exponent::parse(*v);
  } catch (const Error& e) {
    throw Error(ErrorCode::SpecError, std::string("--") + flag + ": " + e.what());
  }
}

MatrixOp load_operator(const JobSpec& job, std::size_t& N) {
  if (!job.matrix.empty() && !job.gen.empty()) throw Error(ErrorCode::SpecError, "give --matrix or --gen, not both");
  if (!job.matrix.empty()) {
    MatrixOp A = read_matrix(job.matrix);
    if (job.N != 0 && job.N != A.size()) {
      throw Error(ErrorCode::SpecError, "--N " + std::to_string(job.N) + " disagrees with the matrix size " +
                                            std::to_string(A.size()));
    }
    N = A.size();
    return A;
  }
  if (job.gen.empty()) throw Error(ErrorCode::SpecError, job.command + " needs --matrix or --gen");
  if (job.N == 0) throw Error(ErrorCode::SpecError, "--gen needs --N");
  N = job.N;
  GeneratorParams gp;
  gp.N = N;
  gp.seed = job.seed;
  if (!job.g.empty()) gp.g = named_sequence(job.g, N, job.seed);
  if (!job.h.empty()) gp.h = named_sequence(job.h, N, job.seed + 1);
  gp.row = job.perturb_row;
  gp.col = job.perturb_col;
  gp.eps = job.eps;
  return generate_matrix(job.gen, gp);
}

TruncatedSeq need_sequence(const std::string& name, const char* flag, std::size_t N, std::uint64_t seed,
                           const std::string& command) {
  if (name.empty()) throw Error(ErrorCode::SpecError, command + " needs --" + flag);
  return named_sequence(name, N, seed);
}

Certificate certify_job(const JobSpec& job) {
  std::size_t N = 0;
  const MatrixOp A = load_operator(job, N);
  const Exponent q = need_exponent(job.q, "q", job.command);
  const Exponent r = need_exponent(job.r, "r", job.command);
  Certificate c;
  c.truncation = N;
  InequalityResult res;
  if (job.kind == "cesaro") {
    const TruncatedSeq h = need_sequence(job.h, "h", N, job.seed + 1, job.command);
    const Exponent s = multiplier_exponent(r, q);
    c.check = "certify-cesaro";
    c.h = h;
    c.exponents = {{"q", q}, {"r", r}, {"s_rq", s}, {"dual", conjugate(s)}};
    res = certify_inequality_cesaro(A, h, s, job.patterns, job.seed, job.block_n, job.block_m);
  } else if (job.kind == "fourier") {
    const Exponent s = multiplier_exponent(conjugate(r), q);
    c.check = "certify-fourier";
    c.exponents = {{"q", q}, {"r", r}, {"r_dual", conjugate(r)}, {"s_rdual_q", s}, {"dual", conjugate(s)}};
    res = certify_inequality_fourier(A, s, job.patterns, job.seed, job.block_n, job.block_m);
  } else {
    throw Error(ErrorCode::SpecError, "--kind must be cesaro or fourier, got '" + job.kind + "'");
  }
  c.verdict = verdict_from(res);
  c.c_hat = res.c_hat;
  c.vertex_c_hat = res.vertex_c_hat;
  c.tol = CertifierOptions{}.refute_tol;
  if (res.refuted) {
    Witness w;
    w.reason = "pattern with zero right-hand side and positive left-hand side";
    w.pattern = res.pattern;
    w.lhs = res.lhs;
    w.rhs = res.rhs;
    w.found = res.lhs;
    w.expected = 0.0;
    c.witness = std::move(w);
  }
  c.notes.push_back(std::string(res.exhaustive ? "exhaustive vertex enumeration" : "heuristic vertex search") +
                    " on a " + std::to_string(res.pattern.rows) + "x" + std::to_string(res.pattern.cols) +
                    " block, " + std::to_string(res.evaluated) + " patterns evaluated");
  c.notes.push_back("finite evidence only: a certifier never reports FACTORS");
  return c;
}

Certificate representing_job(const JobSpec& job) {
  const std::size_t N = job.N == 0 ? 16 : job.N;
  const double tol = job.tol.value_or(kQuadratureTolerance);
  if (job.op == "hardy-littlewood") {
    const Exponent p = job.p ? Exponent::parse(*job.p) : Exponent::rational(4, 3);
    const double pv = p.value();
    if (!(pv > 1.0 && pv <= 2.0)) throw Error(ErrorCode::SpecError, "hardy-littlewood needs 1 < p <= 2");
    std::vector<double> gamma(N);
    for (std::size_t k = 0; k < N; ++k) gamma[k] = std::pow(1.0 / (static_cast<double>(k) + 2.0), (2.0 - pv) / pv);
    const TruncatedSeq g(std::move(gamma));
    const BasisSpec trig(BasisFamily::TrigReal, N);
    Certificate c = verify_representing([&](const GridFunction& f) { return g.times(fourier_coeffs(f, trig, N)); },
                                        trig, [](double) { return 1.0; }, g, job.samples, N, tol, job.seed);
    c.exponents = {{"p", p}};
    return c;
  }
  const BasisSpec spec(parse_basis_family(job.basis), N);
  const RepresentingSetup setup = representing_setup(spec);
  // fourier_coeffs carries the family weight, so it equals the basis map applied to w^{1/2} x.
  CoefficientOperator T;
  if (job.op == "basis-operator") {
    T = [&](const GridFunction& f) { return fourier_coeffs(f, spec, N); };
  } else if (job.op == "permuted") {
    if (N < 2) throw Error(ErrorCode::SpecError, "permuted operator needs N >= 2");
    T = [&](const GridFunction& f) {
      std::vector<double> a = fourier_coeffs(f, spec, N).vec();
      std::swap(a[0], a[1]);
      return TruncatedSeq(std::move(a));
    };
  } else {
    throw Error(ErrorCode::SpecError, "unknown --operator '" + job.op + "'");
  }
  return verify_representing(T, spec, setup.multiplier, TruncatedSeq::constant(N, 1.0), job.samples, N, tol,
                             job.seed);
}

Certificate build_certificate(const JobSpec& job) {
  const std::string& cmd = job.command;
  if (cmd == "check-cesaro" || cmd == "check-cesaro-j0") {
    std::size_t N = 0;
    const MatrixOp A = load_operator(job, N);
    const TruncatedSeq h = need_sequence(job.h, "h", N, job.seed + 1, cmd);
    const Exponent p = need_exponent(job.p, "p", cmd), q = need_exponent(job.q, "q", cmd),
                   r = need_exponent(job.r, "r", cmd);
    const double tol = job.tol.value_or(kShapeTolerance);
    return cmd == "check-cesaro" ? cesaro_factor_check(A, h, p, q, r, tol) : cesaro_factor_check_j0(A, h, p, q, r, tol);
  }
  if (cmd == "check-fourier") {
    std::size_t N = 0;
    const MatrixOp T = load_operator(job, N);
    return fourier_factor_check(T, need_exponent(job.r, "r", cmd), need_exponent(job.p, "p", cmd),
                                need_exponent(job.q, "q", cmd), job.tol.value_or(kShapeTolerance));
  }
  if (cmd == "check-matrix") {
    std::size_t N = 0;
    const MatrixOp A = load_operator(job, N);
    if (job.B.empty()) throw Error(ErrorCode::SpecError, "check-matrix needs --B");
    MatrixOp B;
    if (job.B == "cesaro" || job.B == "identity") {
      GeneratorParams gp;
      gp.N = N;
      B = generate_matrix(job.B, gp);
    } else {
      B = read_matrix(job.B);
    }
    const TruncatedSeq h = need_sequence(job.h, "h", N, job.seed + 1, cmd);
    return matrix_factor_check(A, B, h, job.tol.value_or(kShapeTolerance));
  }
  if (cmd == "certify") return certify_job(job);
  if (cmd == "verify-representing") return representing_job(job);
  throw Error(ErrorCode::SpecError, "unknown command '" + cmd + "'");
}

void emit(const std::string& json, const JobSpec& job, std::ostream& out) {
  if (job.out.empty()) {
    out << json << '\n';
    return;
  }
  std::ofstream f(job.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, job.out + ": cannot write");
  f << json << '\n';
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(10);
  s << v;
  return s.str();
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Factors: return kExitFactors;
    case Verdict::DoesNotFactor: return kExitDoesNotFactor;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitFailure;
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    if (job.command == "suite") {
      if (job.name.empty()) throw Error(ErrorCode::SpecError, "suite needs --name");
      const SuiteResult r = run_suite(job.name, job.seed);
      out << "suite " << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.checks << " checks, "
          << r.failures << " failures)\n";
      for (const auto& m : r.messages) err << "  " << m << '\n';
      if (!job.out.empty()) emit(to_json(r), job, out);
      return r.passed ? 0 : 1;
    }
    Certificate c = build_certificate(job);
    c.seed = job.seed;
    out << c.check << ": " << to_string(c.verdict) << " N=" << c.truncation << " residual=" << fmt(c.residual);
    if (c.g_norm) out << " g_norm=" << fmt(c.g_norm->value) << " (s=" << c.g_norm->exponent.to_string() << ")";
    if (c.c_hat) out << " C_hat=" << fmt(*c.c_hat);
    if (c.witness) out << " witness=(" << c.witness->row << "," << c.witness->col << ")";
    out << '\n';
    emit(to_json(c, job.no_timestamp ? std::string() : utc_timestamp()), job, out);
    return exit_code(c.verdict);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::ParseError: return kExitParse;
      case ErrorCode::SpecError: return kExitUsage;
      default: return kExitFailure;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Strong factorization checks through the Fourier and Cesaro operators"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help and exit");  // -h would clash with the --h multiplier
  JobSpec job;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", job.seed, "RNG seed (always recorded)");
    sub->add_option("--out", job.out, "certificate path (default: standard output)");
    sub->add_flag("--no-timestamp", job.no_timestamp, "omit the timestamp field");
    sub->add_option("--tol", job.tol, "tolerance");
  };
  auto add_operator = [&](CLI::App* sub) {
    sub->add_option("--matrix", job.matrix, "matrix file (CSV with N=<n> header, or JSON)");
    sub->add_option("--gen", job.gen, "generator: rank-one, identity, cesaro, random-lower, diagonal, perturbed, zero");
    sub->add_option("--N", job.N, "truncation size");
    sub->add_option("--g", job.g, "multiplier g: named sequence or CSV path");
    sub->add_option("--h", job.h, "multiplier h: named sequence or CSV path");
    sub->add_option("--p", job.p, "exponent p (number, a/b or inf)");
    sub->add_option("--q", job.q, "exponent q");
    sub->add_option("--r", job.r, "exponent r");
    sub->add_option("--perturb-row", job.perturb_row, "perturbed generator: row");
    sub->add_option("--perturb-col", job.perturb_col, "perturbed generator: column");
    sub->add_option("--eps", job.eps, "perturbed generator: added value");
  };

  for (const char* name : {"check-cesaro", "check-cesaro-j0", "check-fourier", "check-matrix", "certify"}) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub);
    add_operator(sub);
    if (std::string(name) == "check-matrix") sub->add_option("--B", job.B, "factor matrix: path, cesaro or identity");
    if (std::string(name) == "certify") {
      sub->add_option("--kind", job.kind, "cesaro or fourier")->check(CLI::IsMember({"cesaro", "fourier"}));
      sub->add_option("--patterns", job.patterns, "random starts for the heuristic search")
          ->check(CLI::PositiveNumber);
      sub->add_option("--n", job.block_n, "rows of the leading block (default: N)");
      sub->add_option("--m", job.block_m, "columns of the leading block (default: N)");
    }
  }
  CLI::App* rep = app.add_subcommand("verify-representing");
  add_common(rep);
  rep->add_option("--basis", job.basis, "trig, legendre, chebyshev1, chebyshev2, laguerre");
  rep->add_option("--operator", job.op, "basis-operator, permuted or hardy-littlewood");
  rep->add_option("--samples", job.samples, "random inputs")->check(CLI::PositiveNumber);
  rep->add_option("--N", job.N, "coefficients compared (default 16)");
  rep->add_option("--p", job.p, "hardy-littlewood exponent, 1 < p <= 2");

  CLI::App* suite = app.add_subcommand("suite");
  suite->add_option("--name", job.name, "suite name")->required();
  suite->add_option("--seed", job.seed, "RNG seed");
  suite->add_option("--out", job.out, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  for (CLI::App* sub : app.get_subcommands()) job.command = sub->get_name();
  return run(job, std::cout, std::cerr);
}

}  // namespace strongfact
