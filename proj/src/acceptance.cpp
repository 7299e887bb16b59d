#include "uj/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "uj/bell.hpp"
#include "uj/decompose.hpp"
#include "uj/joint.hpp"
#include "uj/sampling.hpp"

namespace uj::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class... Args>
std::string fmt(Args&&... args) {
  std::ostringstream os;
  os << std::setprecision(6);
  (os << ... << args);
  return os.str();
}

CriterionResult lambda_opt_reproduction(unsigned threads) {
  const auto t0 = Clock::now();
  WorstCase wc;
  wc.mesh_size = 1000;
  wc.threads = threads;
  const LambdaOptResult r = lambda_opt_search(wc, 1e-4);
  const double secs = seconds_since(t0);
  const double err = std::abs(r.lambda_opt - kQuantumLambdaOpt);
  CriterionResult c;
  c.pass = err <= 1e-3 && secs < 60.0;
  c.detail = fmt("lambda_opt=", std::setprecision(8), r.lambda_opt, " |err|=", err, " (tol 1e-3), ",
                 std::setprecision(3), secs, "s (limit 60s), oracle below=", to_string(r.oracle_below),
                 " above=", to_string(r.oracle_above));
  return c;
}

ChshSettings random_projective_settings(Rng& rng) {
  auto obs = [&] { return random_bloch(rng).projector().observable(); };
  auto a1 = obs(), a2 = obs(), b1 = obs(), b2 = obs();
  return {a1, a2, b1, b2};
}

CriterionResult tsirelson_bound() {
  const auto t0 = Clock::now();
  const ChshReport opt = chsh(singlet(), optimal_qubit_settings());
  const double opt_err = std::abs(opt.value - 2.0 * std::sqrt(2.0));
  Rng rng(2002);
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    const DensityMatrix rho = DensityMatrix::pure(random_state_vector(4, rng));
    worst = std::max(worst, chsh(rho, random_projective_settings(rng)).value);
  }
  const double secs = seconds_since(t0);
  CriterionResult c;
  c.pass = opt_err <= 1e-6 && worst <= 2.0 * std::sqrt(2.0) + 1e-6 && secs < 120.0;
  c.detail = fmt("singlet CHSH=", std::setprecision(12), opt.value, " |err|=", opt_err,
                 " (tol 1e-6); max over 1e4 random=", worst, " (limit 2sqrt2+1e-6); ", std::setprecision(3), secs,
                 "s (limit 120s)");
  return c;
}

CriterionResult smeared_saturation() {
  const ChshSettings opt = optimal_qubit_settings();
  const ChshReport at_opt = smeared_chsh(singlet(), opt, UnsharpParam(1.0 / std::sqrt(2.0)));
  const double sat_err = std::abs(at_opt.value - 2.0);
  double worst = 0;
  for (int k = 1; k <= 200; ++k) {
    const double l = kQuantumLambdaOpt * k / 200.0;
    worst = std::max(worst, smeared_chsh(singlet(), opt, UnsharpParam(std::min(l, kQuantumLambdaOpt))).value);
  }
  Rng rng(3003);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const DensityMatrix rho = DensityMatrix::pure(random_state_vector(4, rng));
    const double l = std::max(1e-6, kQuantumLambdaOpt * unit(rng));
    worst = std::max(worst, smeared_chsh(rho, random_projective_settings(rng), UnsharpParam(l)).value);
  }
  CriterionResult c;
  c.pass = sat_err <= 1e-9 && worst <= 2.0 + 1e-9;
  c.detail = fmt("smeared CHSH at 1/sqrt2=", std::setprecision(15), at_opt.value, " |err|=", sat_err,
                 " (tol 1e-9); max over lambda<=1/sqrt2 =", worst, " (limit 2+1e-9)");
  return c;
}

CriterionResult joint_povm_validity() {
  Rng rng(4004);
  const UnsharpParam lambda(0.70);
  double worst_res = 0, worst_eig = 1;
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const Projector p1 = random_bloch(rng).projector();
    const Projector p2 = random_bloch(rng).projector();
    const FeasibilityReport r = pvm_joint_observable(p1, p2, lambda);
    if (r.feasible != Verdict::Yes) {
      ++failures;
      continue;
    }
    const JointResiduals res = check_joint(*r.witness, smear(p1.observable(), lambda), smear(p2.observable(), lambda));
    worst_res = std::max(worst_res, res.max_marginal());
    worst_eig = std::min(worst_eig, res.min_eigenvalue);
  }
  CriterionResult c;
  c.pass = failures == 0 && worst_res <= 1e-9 && worst_eig >= -1e-9;
  c.detail = fmt("1000 pairs at lambda=0.70: no-witness=", failures, " max residual=", worst_res,
                 " (tol 1e-9) min eigenvalue=", worst_eig, " (tol -1e-9)");
  return c;
}

CriterionResult oracle_agreement() {
  Rng rng(5005);
  std::uniform_real_distribution<double> lam(0.3, 0.95);
  OracleOptions opt;
  opt.tol = 1e-9;
  opt.max_iter = 20000;
  int counted = 0, agree = 0, undetermined = 0, excluded = 0;
  int drawn = 0;
  while (drawn < 1000) {
    ++drawn;
    const BlochVector m = random_bloch(rng);
    const BlochVector n = random_bloch(rng);
    const double l = lam(rng);
    const double crit = qubit_criterion(m, n, l);
    if (std::abs(crit - 2.0) < 0.02) {
      ++excluded;
      continue;
    }
    const UnsharpParam lambda(l);
    const Verdict closed = qubit_joint_observable(m, n, lambda).feasible;
    const Verdict oracle = feasibility_oracle(smear(m.projector().observable(), lambda),
                                              smear(n.projector().observable(), lambda), opt)
                               .feasible;
    ++counted;
    if (oracle == Verdict::Undetermined) ++undetermined;
    if (oracle == closed) ++agree;
  }
  const double rate = counted ? static_cast<double>(agree) / counted : 0.0;
  CriterionResult c;
  c.pass = counted > 0 && rate >= 0.99;
  c.detail = fmt("agreement ", agree, "/", counted, " = ", rate, " (need >= 0.99); undetermined=", undetermined,
                 "; excluded in band=", excluded, " of 1000");
  return c;
}

CriterionResult lemma_round_trip() {
  Rng rng(6006);
  double worst_off = 0, worst_rec = 0;
  std::size_t biggest_block = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t d = 3 + static_cast<std::size_t>(i) % 14;
    std::uniform_int_distribution<std::size_t> rank(1, d - 1);
    const Projector p = random_projector(d, rank(rng), rng);
    const Projector q = random_projector(d, rank(rng), rng);
    const BlockDecomposition dec = two_projector_blocks(p, q);
    for (const Block& b : dec.blocks) biggest_block = std::max(biggest_block, b.dim);
    worst_off = std::max({worst_off, dec.off_block_residual(p.matrix()), dec.off_block_residual(q.matrix())});
    worst_rec =
        std::max({worst_rec, dec.reconstruction_residual(p.matrix()), dec.reconstruction_residual(q.matrix())});
  }
  CriterionResult c;
  c.pass = worst_off <= 1e-9 && worst_rec <= 1e-9 && biggest_block <= 2;
  c.detail = fmt("50 pairs d in 3..16: off-block=", worst_off, " reconstruction=", worst_rec,
                 " (tol 1e-9) max block dim=", biggest_block);
  return c;
}

CriterionResult dilation_pipeline() {
  Rng rng(7007);
  double worst_round = 0;
  for (std::size_t d : {2u, 4u, 8u})
    for (int i = 0; i < 100; ++i) {
      const Effect e = random_effect(d, rng);
      const Dilation dil = neumark_dilate(DichotomicObservable::from_yes(e));
      worst_round = std::max(worst_round, max_abs(compress(dil.projector.matrix()) - e.matrix()));
    }
  const UnsharpParam lambda(1.0 / std::sqrt(2.0));
  double worst_res = 0, worst_eig = 1;
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = 2 + static_cast<std::size_t>(i) % 3;
    const auto o1 = DichotomicObservable::from_yes(random_effect(d, rng));
    const auto o2 = DichotomicObservable::from_yes(random_effect(d, rng));
    const FeasibilityReport r = povm_joint_observable(o1, o2, lambda);
    if (r.feasible != Verdict::Yes) {
      ++failures;
      continue;
    }
    const JointResiduals res = check_joint(*r.witness, smear(o1, lambda), smear(o2, lambda));
    if (!res.passes(1e-9)) ++failures;
    worst_res = std::max(worst_res, res.max_marginal());
    worst_eig = std::min(worst_eig, res.min_eigenvalue);
  }
  CriterionResult c;
  c.pass = worst_round <= 1e-12 && failures == 0;
  c.detail = fmt("compress(dilate) residual=", worst_round, " (tol 1e-12); 200 POVM pairs at 1/sqrt2: failures=",
                 failures, " max residual=", worst_res, " min eigenvalue=", worst_eig, " (tol 1e-9)");
  return c;
}

CriterionResult box_layer() {
  const auto pr = box_chsh(pr_box());
  const bool pr_ok = pr.value == Rational(4);
  int deterministic_ok = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const auto c = box_chsh(deterministic_box({a & 1, a >> 1}, {b & 1, b >> 1}));
      if (c.value <= Rational(2)) ++deterministic_ok;
    }
  // classical case: commuting projectors are jointly measurable when sharp
  Rng rng(8008);
  bool commuting_ok = true;
  for (int i = 0; i < 20; ++i) {
    const std::size_t d = 2 + static_cast<std::size_t>(i) % 6;
    const Matrix u = random_unitary(d, rng);
    Matrix dp = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    Matrix dq = dp;
    std::bernoulli_distribution coin(0.5);
    for (Eigen::Index k = 0; k < dp.rows(); ++k) {
      dp(k, k) = coin(rng) ? 1.0 : 0.0;
      dq(k, k) = coin(rng) ? 1.0 : 0.0;
    }
    const Projector p = Projector::validate(u * dp * u.adjoint(), 1e-9);
    const Projector q = Projector::validate(u * dq * u.adjoint(), 1e-9);
    const UnsharpParam one(1.0);
    const FeasibilityReport r = pvm_joint_observable(p, q, one);
    if (r.feasible != Verdict::Yes ||
        !check_joint(*r.witness, smear(p.observable(), one), smear(q.observable(), one)).passes(1e-9))
      commuting_ok = false;
  }
  CriterionResult c;
  c.pass = pr_ok && deterministic_ok == 16 && commuting_ok;
  c.detail = fmt("PR CHSH=", pr.value.numerator(), "/", pr.value.denominator(), " (exact 4); deterministic boxes with "
                 "|CHSH|<=2: ", deterministic_ok, "/16; commuting pairs feasible at lambda=1: ",
                 commuting_ok ? "yes" : "no");
  return c;
}

CriterionResult mean_scaling() {
  Rng rng(9009);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::size_t d = 2 + static_cast<std::size_t>(i) % 3;
    const auto obs = DichotomicObservable::from_yes(random_effect(d, rng));
    const DensityMatrix rho = random_density(d, rng);
    const double l = std::max(1e-9, unit(rng));
    const double sharp = mean_value(obs, rho);
    const double smeared = mean_value(smear(obs, UnsharpParam(l)), rho);
    worst = std::max(worst, std::abs(smeared - l * sharp));
  }
  CriterionResult c;
  c.pass = worst <= 1e-12;
  c.detail = fmt("10^4 triples: max |<A^(l)> - l<A>| = ", worst, " (tol 1e-12)");
  return c;
}

}  // namespace

std::vector<Criterion> criteria(unsigned threads) {
  return {
      {1, "lambda_opt reproduction", [threads] { return lambda_opt_reproduction(threads); }},
      {2, "Tsirelson bound", tsirelson_bound},
      {3, "smeared CHSH saturation at 1/sqrt(2)", smeared_saturation},
      {4, "joint POVM validity (qubit PVM pairs)", joint_povm_validity},
      {5, "closed form vs oracle agreement", oracle_agreement},
      {6, "two-projector block round trip", lemma_round_trip},
      {7, "dilation pipeline", dilation_pipeline},
      {8, "box layer and classical case", box_layer},
      {9, "mean value scaling", mean_scaling},
  };
}

std::vector<CriterionResult> run_all(unsigned threads, std::ostream& log) {
  std::vector<CriterionResult> out;
  for (const Criterion& c : criteria(threads)) {
    const auto t0 = Clock::now();
    CriterionResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.id = c.id;
    r.name = c.name;
    r.seconds = seconds_since(t0);
    log << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail << "\n";
    log.flush();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace uj::acceptance
