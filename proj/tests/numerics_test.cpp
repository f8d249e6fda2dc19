#include <cmath>
#include <numbers>
#include <set>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "latbench/error.hpp"
#include "latbench/numerics/dare.hpp"
#include "latbench/numerics/filters.hpp"
#include "latbench/numerics/ode.hpp"
#include "latbench/numerics/qp.hpp"
#include "latbench/numerics/random.hpp"
#include "latbench/numerics/spectral.hpp"
#include "latbench/numerics/state_space.hpp"
#include "support/gen.hpp"

namespace latbench::numerics {
namespace {

using Vec1 = Eigen::Matrix<double, 1, 1>;

Vec1 v1(double x) { return Vec1::Constant(x); }

// ----- RK4 -----

TEST(Rk4, ZeroDerivativeKeepsState) {
  auto f = [](const Vec1&, double) { return v1(0.0); };
  EXPECT_DOUBLE_EQ(integrate_rk4(v1(3.0), f, 0.0, 0.05)(0), 3.0);
}

TEST(Rk4, ConstantDerivativeIsExact) {
  auto f = [](const Vec1&, double) { return v1(1.0); };
  EXPECT_NEAR(integrate_rk4(v1(0.0), f, 0.0, 0.05)(0), 0.05, 1e-15);
}

TEST(Rk4, ExponentialMatchesClosedForm) {
  auto f = [](const Vec1& x, double) { return x; };
  EXPECT_NEAR(integrate_rk4(v1(1.0), f, 0.0, 0.05)(0), std::exp(0.05), 1e-8);
}

TEST(Rk4, HalvingStepCutsErrorSixteenfold) {
  auto f = [](const Vec1& x, double) { return x; };
  auto error = [&](double dt) {
    Vec1 x = v1(1.0);
    const int n = static_cast<int>(std::lround(1.0 / dt));
    for (int i = 0; i < n; ++i) x = integrate_rk4(x, f, 0.0, dt);
    return std::abs(x(0) - std::exp(1.0));
  };
  const double ratio = error(0.1) / error(0.05);
  EXPECT_NEAR(ratio, 16.0, 1.0);
}

TEST(Rk4, NonFiniteDerivativeThrows) {
  auto f = [](const Vec1&, double) { return v1(std::numeric_limits<double>::quiet_NaN()); };
  EXPECT_THROW(integrate_rk4(v1(0.0), f, 0.0, 0.01), IntegrationError);
  auto g = [](const Vec1&, double) { return v1(0.0); };
  EXPECT_THROW(integrate_rk4(v1(0.0), g, 0.0, 0.0), ArgumentError);
}

// ----- DARE -----

Eigen::MatrixXd m1(double x) { return Eigen::MatrixXd::Constant(1, 1, x); }

TEST(Dare, ZeroDynamicsGivesZeroGain) {
  const auto s = solve_dare(m1(0), m1(1), m1(1), m1(1));
  EXPECT_NEAR(s.K(0, 0), 0.0, 1e-12);
}

TEST(Dare, ScalarIntegratorMatchesGoldenRatio) {
  const auto s = solve_dare(m1(1), m1(1), m1(1), m1(1));
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  EXPECT_NEAR(s.P(0, 0), phi, 1e-8);
  EXPECT_NEAR(s.K(0, 0), phi / (1.0 + phi), 1e-8);
  EXPECT_NEAR(s.K(0, 0), 0.6180339887, 1e-8);
}

TEST(Dare, RejectsIndefiniteRAndBadShapes) {
  EXPECT_THROW(solve_dare(m1(1), m1(1), m1(1), m1(-1)), ArgumentError);
  EXPECT_THROW(solve_dare(Eigen::MatrixXd::Identity(2, 2), m1(1), m1(1), m1(1)), ArgumentError);
}

TEST(Dare, UncontrollableUnstableModeFails) {
  Eigen::MatrixXd A(2, 2);
  A << 1.5, 0, 0, 0.5;
  Eigen::MatrixXd B(2, 1);
  B << 0, 1;
  EXPECT_THROW(solve_dare(A, B, Eigen::MatrixXd::Identity(2, 2), m1(1)), SolverError);
}

// Independent form of the Riccati recursion: P <- Q + A' P (I + B R^-1 B' P)^-1 A.
Eigen::MatrixXd riccati_oracle(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, const Eigen::MatrixXd& Q,
                               const Eigen::MatrixXd& R) {
  const Eigen::Index n = A.rows();
  const Eigen::MatrixXd G = B * R.inverse() * B.transpose();
  Eigen::MatrixXd P = Q;
  for (int k = 0; k < 200000; ++k) {
    const Eigen::MatrixXd next =
        Q + A.transpose() * P * (Eigen::MatrixXd::Identity(n, n) + G * P).partialPivLu().solve(A);
    const double change = (next - P).cwiseAbs().maxCoeff();
    P = 0.5 * (next + next.transpose());
    if (change <= 1e-13 * std::max(1.0, P.cwiseAbs().maxCoeff())) break;
  }
  return P;
}

TEST(Dare, RandomSystemsMatchIterationOracleAndResidual) {
  testing::for_all(11, 25, [](testing::Gen& g) {
    Eigen::MatrixXd A(4, 4), B(4, 1);
    for (int i = 0; i < 16; ++i) A.data()[i] = g.real(-0.6, 0.6);
    for (int i = 0; i < 4; ++i) B(i) = g.real(-1, 1);
    Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(4, 4);
    for (int i = 0; i < 4; ++i) Q(i, i) = g.log_real(1e-3, 10);
    const Eigen::MatrixXd R = m1(g.log_real(0.1, 10));
    const auto s = solve_dare(A, B, Q, R);
    const Eigen::MatrixXd P = riccati_oracle(A, B, Q, R);
    const Eigen::MatrixXd K = (R + B.transpose() * P * B).ldlt().solve(B.transpose() * P * A);
    EXPECT_LT((s.K - K).cwiseAbs().maxCoeff(), 1e-8) << g.where();
    const Eigen::MatrixXd residual = s.P - A.transpose() * s.P * A +
                                     A.transpose() * s.P * B * (R + B.transpose() * s.P * B).inverse() *
                                         B.transpose() * s.P * A -
                                     Q;
    EXPECT_LT(residual.cwiseAbs().maxCoeff(), 1e-8) << g.where();
    EXPECT_LT(spectral_radius(A - B * s.K), 1.0) << g.where();
  });
}

// ----- filtered derivative -----

TEST(FilteredDerivative, ConstantSignalSettlesToZero) {
  FilteredDerivative d(1.5, 0.05);
  double y = 1.0;
  for (int k = 0; k < 10; ++k) y = d.step(4.2);
  EXPECT_NEAR(y, 0.0, 1e-12);
}

TEST(FilteredDerivative, RampGivesItsSlope) {
  FilteredDerivative d(1.5, 0.05);
  double y = 0.0;
  for (int k = 0; k < 200; ++k) y = d.step(2.0 * 0.05 * k);
  EXPECT_NEAR(y, 2.0, 1e-6);
}

TEST(FilteredDerivative, StepMatchesDifferenceEquation) {
  // C y[k] + (1 - C) y[k-1] = (x[k] - x[k-1]) / Ts
  const double C = 1.5, Ts = 0.05;
  FilteredDerivative d(C, Ts, 0.0);
  double y_prev = 0.0, x_prev = 0.0;
  for (int k = 0; k < 30; ++k) {
    const double x = 1.0;
    const double oracle = ((x - x_prev) / Ts - (1.0 - C) * y_prev) / C;
    EXPECT_NEAR(d.step(x), oracle, 1e-12) << "k=" << k;
    y_prev = oracle;
    x_prev = x;
  }
  // Impulse-like: the first output is 1/(C Ts), then it decays by (C-1)/C.
  FilteredDerivative e(C, Ts, 0.0);
  EXPECT_NEAR(e.step(1.0), 1.0 / (C * Ts), 1e-12);
  EXPECT_NEAR(e.step(1.0), (C - 1.0) / (C * C * Ts), 1e-12);
}

TEST(FilteredDerivative, PlainBackwardDifferenceWhenCIsOne) {
  FilteredDerivative d(1.0, 0.1, 0.0);
  EXPECT_NEAR(d.step(0.5), 5.0, 1e-12);
  EXPECT_NEAR(d.step(0.7), 2.0, 1e-12);
}

TEST(FilteredDerivative, FirstSampleMayPrime) {
  FilteredDerivative d(1.5, 0.05);
  EXPECT_DOUBLE_EQ(d.step(3.0), 0.0);
  d.reset(0.0);
  EXPECT_GT(d.step(3.0), 0.0);
}

// ----- high-pass -----

double steady_amplitude(double freq, double cutoff, double fs = 20.0) {
  std::vector<double> x(4000);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = std::sin(2 * std::numbers::pi * freq * k / fs);
  const auto y = highpass_filter(x, fs, cutoff);
  double peak = 0.0;
  for (std::size_t k = x.size() / 2; k < x.size(); ++k) peak = std::max(peak, std::abs(y[k]));
  return peak;
}

TEST(HighPass, RejectsConstant) {
  std::vector<double> x(400, 2.5);
  const auto y = highpass_filter(x, 20.0, 0.5);
  for (std::size_t k = 100; k < y.size(); ++k) EXPECT_LT(std::abs(y[k]), 1e-3 * 2.5);
}

TEST(HighPass, PassbandWithinOneDecibel) {
  const double gain_db = 20 * std::log10(steady_amplitude(6.0, 4.0));
  EXPECT_LT(std::abs(gain_db), 1.0);
  EXPECT_LT(std::abs(20 * std::log10(steady_amplitude(1.0, 0.5))), 1.0);
}

TEST(HighPass, StopbandAttenuated) { EXPECT_LT(20 * std::log10(steady_amplitude(0.1, 0.5)), -20.0); }

TEST(HighPass, CutoffOutOfRangeThrows) {
  std::vector<double> x(10, 1.0);
  EXPECT_THROW(highpass_filter(x, 20.0, 0.0), ArgumentError);
  EXPECT_THROW(highpass_filter(x, 20.0, 10.0), ArgumentError);
}

// ----- STFT -----

std::vector<double> tone(double freq, double amplitude, double seconds, double fs = 20.0, double phase = 0.0) {
  std::vector<double> x(static_cast<std::size_t>(std::lround(seconds * fs)));
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = amplitude * std::sin(2 * std::numbers::pi * freq * k / fs + phase);
  return x;
}

TEST(Stft, ZeroSignalHasZeroPower) {
  std::vector<double> x(400, 0.0);
  const auto s = stft_power(x, 20.0, 5.0, 0.5);
  EXPECT_EQ(s.sections(), 7u);
  for (double p : s.power) EXPECT_EQ(p, 0.0);
}

TEST(Stft, FrequencyGridSpansToNyquist) {
  const auto s = stft_power(tone(1.0, 1.0, 10.0), 20.0, 5.0, 0.5);
  EXPECT_DOUBLE_EQ(s.frequencies.front(), 0.0);
  EXPECT_DOUBLE_EQ(s.frequencies.back(), 10.0);
  EXPECT_EQ(s.bins(), 51u);
}

TEST(Stft, ToneLandsInItsBin) {
  const auto s = stft_power(tone(2.0, 1.0, 10.0), 20.0, 5.0, 0.5);
  const auto row = s.row(0);
  const auto peak = std::max_element(row.begin(), row.end()) - row.begin();
  EXPECT_NEAR(s.frequencies[peak], 2.0, 0.2 + 1e-9);
}

TEST(Stft, ParsevalPerSection) {
  testing::Gen g(5);
  std::vector<double> x = g.reals(300, -1, 1);
  const auto s = stft_power(x, 20.0, 5.0, 0.5);
  const std::size_t n = section_length(20.0, 5.0);
  for (std::size_t i = 0; i < s.sections(); ++i) {
    const std::size_t start = i * n / 2;
    double energy = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double w = 0.5 - 0.5 * std::cos(2 * std::numbers::pi * k / n);
      energy += (w * x[start + k]) * (w * x[start + k]);
    }
    energy /= static_cast<double>(n);
    double sum = 0.0;
    for (double p : s.row(i)) sum += p;
    EXPECT_NEAR(sum, energy, 0.01 * energy);
  }
}

TEST(Stft, ToneStandsAboveNoiseFloor) {
  // SNR 10 in power: tone amplitude sqrt(2), noise variance 0.1.
  RandomStream rng(9);
  std::vector<double> tone_plus_noise = tone(2.0, std::sqrt(2.0), 5.0);
  for (double& v : tone_plus_noise) v += std::sqrt(0.1) * rng.standard_normal();
  const auto s = stft_power(tone_plus_noise, 20.0, 5.0, 0.5);
  const auto row = s.row(0);
  std::vector<double> sorted(row.begin(), row.end());
  std::sort(sorted.begin(), sorted.end());
  const double floor = sorted[sorted.size() / 2];
  EXPECT_GT(10 * std::log10(*std::max_element(row.begin(), row.end()) / floor), 10.0);
}

TEST(Stft, BinAlignedTonePowerIgnoresPhase) {
  const auto a = stft_power(tone(2.0, 1.0, 5.0, 20.0, 0.0), 20.0, 5.0, 0.0);
  const auto b = stft_power(tone(2.0, 1.0, 5.0, 20.0, 2 * std::numbers::pi * 0.37), 20.0, 5.0, 0.0);
  double pa = 0, pb = 0;
  for (double p : a.power) pa += p;
  for (double p : b.power) pb += p;
  EXPECT_NEAR(pa, pb, 0.01 * pa);
}

TEST(Stft, ShortSignalThrows) {
  std::vector<double> x(50, 1.0);
  EXPECT_THROW(stft_power(x, 20.0, 5.0, 0.5), ArgumentError);
  std::vector<double> y(200, 1.0);
  EXPECT_THROW(stft_power(y, 20.0, 5.0, 1.0), ArgumentError);
}

// ----- random -----

TEST(Random, UniformStaysInRange) {
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL, 123456789ULL}) {
    RandomStream rng(seed);
    for (int i = 0; i < 1000; ++i) {
      const double v = sample_distribution(UniformDist{0.5, 1.17}, rng);
      EXPECT_GE(v, 0.5);
      EXPECT_LE(v, 1.17);
    }
  }
}

TEST(Random, NormalMeanConverges) {
  RandomStream rng(3);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) sum += sample_distribution(NormalDist{1372.0, 137.2}, rng);
  EXPECT_NEAR(sum / n, 1372.0, 0.01 * 1372.0);
}

TEST(Random, SameSeedSameSequence) {
  RandomStream a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.standard_normal(), b.standard_normal());
}

TEST(Random, InvalidParametersThrow) {
  RandomStream rng(1);
  EXPECT_THROW(sample_distribution(NormalDist{0.0, -1.0}, rng), ArgumentError);
  EXPECT_THROW(sample_distribution(UniformDist{2.0, 1.0}, rng), ArgumentError);
}

TEST(Random, DerivedSeedsDiffer) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(7, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(derive_seed(7, 0), derive_seed(8, 0));
}

// ----- zero-order hold -----

TEST(Discretize, ScalarMatchesClosedForm) {
  StateSpaceModel c{m1(-2.0), m1(3.0), std::nullopt};
  const auto d = discretize_zoh(c, 0.1);
  EXPECT_NEAR(d.A(0, 0), std::exp(-0.2), 1e-12);
  EXPECT_NEAR(d.B(0, 0), 3.0 * (1.0 - std::exp(-0.2)) / 2.0, 1e-12);
  ASSERT_TRUE(d.discrete());
  EXPECT_DOUBLE_EQ(*d.sample_time, 0.1);
}

TEST(Discretize, DoubleIntegrator) {
  Eigen::MatrixXd A(2, 2);
  A << 0, 1, 0, 0;
  Eigen::MatrixXd B(2, 1);
  B << 0, 1;
  const auto d = discretize_zoh({A, B, std::nullopt}, 0.05);
  EXPECT_NEAR(d.A(0, 1), 0.05, 1e-14);
  EXPECT_NEAR(d.B(0, 0), 0.05 * 0.05 / 2, 1e-14);
  EXPECT_NEAR(d.B(1, 0), 0.05, 1e-14);
}

// ----- QP -----

TEST(Qp, UnconstrainedSolvesNormalEquations) {
  Eigen::MatrixXd H(2, 2);
  H << 4, 1, 1, 3;
  Eigen::VectorXd f(2);
  f << -1, -2;
  QpProblem p{H, f, Eigen::MatrixXd(0, 2), Eigen::VectorXd(0)};
  const auto r = solve_qp(p, Eigen::VectorXd::Zero(2));
  const Eigen::VectorXd x = H.ldlt().solve(-f);
  EXPECT_LT((r.x - x).norm(), 1e-12);
  EXPECT_EQ(r.status, QpStatus::kOptimal);
}

TEST(Qp, BoxConstraintBinds) {
  // min 0.5 (x - 2)^2 with x <= 1 -> x = 1, multiplier 1.
  QpProblem p{m1(1.0), Eigen::VectorXd::Constant(1, -2.0), m1(1.0), Eigen::VectorXd::Constant(1, 1.0)};
  const auto r = solve_qp(p, Eigen::VectorXd::Zero(1));
  EXPECT_NEAR(r.x(0), 1.0, 1e-12);
  EXPECT_NEAR(r.multipliers(0), 1.0, 1e-12);
}

TEST(Qp, InfeasibleStartThrows) {
  QpProblem p{m1(1.0), Eigen::VectorXd::Zero(1), m1(1.0), Eigen::VectorXd::Constant(1, 1.0)};
  EXPECT_THROW(solve_qp(p, Eigen::VectorXd::Constant(1, 2.0)), ArgumentError);
}

TEST(Qp, IterationLimitReturnsFeasibleImprovement) {
  testing::for_all(21, 20, [](testing::Gen& g) {
    const int n = 6;
    Eigen::MatrixXd M(n, n);
    for (int i = 0; i < n * n; ++i) M.data()[i] = g.real(-1, 1);
    const Eigen::MatrixXd H = M * M.transpose() + Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd f(n);
    for (int i = 0; i < n; ++i) f(i) = g.real(-20, 20);
    Eigen::MatrixXd A(2 * n, n);
    A << Eigen::MatrixXd::Identity(n, n), -Eigen::MatrixXd::Identity(n, n);
    const QpProblem p{H, f, A, Eigen::VectorXd::Ones(2 * n)};
    const Eigen::VectorXd x0 = Eigen::VectorXd::Zero(n);
    QpOptions opt;
    opt.max_iterations = 2;
    const auto r = solve_qp(p, x0, opt);
    EXPECT_LE((A * r.x - p.b).maxCoeff(), 1e-9) << g.where();
    EXPECT_LE(qp_objective(p, r.x), qp_objective(p, x0) + 1e-12) << g.where();
  });
}

}  // namespace
}  // namespace latbench::numerics
