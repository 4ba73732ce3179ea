#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "signlap/dynamics.hpp"
#include "signlap/error.hpp"
#include "signlap/random_graph.hpp"

using namespace signlap;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::InvalidArgument;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  return t;
}

}  // namespace

TEST(Consensus, TwoAgentsAverage) {
  const std::vector<double> x0{1.0, 0.0};
  const std::vector<double> times{0.0, 20.0};
  const auto tr = simulate_consensus(fixtures::path(2), x0, times);
  EXPECT_DOUBLE_EQ(tr.consensus_value, 0.5);
  EXPECT_NEAR(tr.states[1](0), 0.5, 1e-12);
  EXPECT_NEAR(tr.states[1](1), 0.5, 1e-12);
  EXPECT_NEAR(tr.states[0](0), 1.0, 1e-14);
  EXPECT_TRUE(tr.certificate.psd_corank1());
}

TEST(Consensus, KernelStartIsConstant) {
  const std::vector<double> x0(9, 3.25);
  const auto tr = simulate_consensus(fixtures::load("nine_node.txt"), x0, linspace(0, 5, 11));
  for (const auto& s : tr.states) EXPECT_LT((s.array() - 3.25).abs().maxCoeff(), 1e-12);
  EXPECT_TRUE(orthant_exit_events(tr).empty());
}

TEST(Consensus, Validation) {
  const std::vector<double> x0{1.0, 2.0};
  const std::vector<double> t{0.0, 1.0};
  EXPECT_EQ(code_of([&] { simulate_consensus(fixtures::path(3), x0, t); }), ErrorCode::DimensionMismatch);
  const std::vector<double> backwards{1.0, 0.5};
  EXPECT_EQ(code_of([&] { simulate_consensus(fixtures::path(2), x0, backwards); }), ErrorCode::InvalidArgument);
  const std::vector<double> negative{-1.0};
  EXPECT_EQ(code_of([&] { simulate_consensus(fixtures::path(2), x0, negative); }), ErrorCode::InvalidArgument);
  const std::vector<double> neg_x0{-1.0, 2.0};
  const auto tr = simulate_consensus(fixtures::path(2), neg_x0, t);
  EXPECT_EQ(code_of([&] { orthant_exit_events(tr); }), ErrorCode::NegativeInitialCondition);
}

TEST(Consensus, ConservesSumAndMatchesIntegrator) {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  for (std::uint64_t k = 0; k < 30; ++k) {
    const auto g = random_signed_graph(72, k);
    std::vector<double> x0(g.node_count());
    for (auto& x : x0) x = u(rng);
    const auto times = linspace(0.0, 2.0, 21);
    const auto tr = simulate_consensus(g, x0, times);
    const Vector start = Eigen::Map<const Vector>(x0.data(), static_cast<Eigen::Index>(x0.size()));
    const auto ref = oracle::integrate(oracle::laplacian(g), start, times);
    ASSERT_EQ(ref.size(), times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
      const double scale = std::max(1.0, ref[i].cwiseAbs().maxCoeff());
      EXPECT_LT((tr.states[i] - ref[i]).cwiseAbs().maxCoeff() / scale, 1e-6) << "instance " << k;
      // Roundoff scales with the current state, which grows when L is indefinite.
      EXPECT_NEAR(tr.states[i].sum(), start.sum(), 1e-12 * std::max(1.0, tr.states[i].cwiseAbs().sum()));
    }
  }
}

TEST(Consensus, DichotomyFollowsCertificate) {
  for (double a : {-0.4, -1.0}) {
    const std::vector<double> x0{1.0, 2.0, 0.5};
    // Slowest decay for a = -0.4 is exp(-0.2 t).
    const std::vector<double> t{0.0, 150.0};
    const auto tr = simulate_consensus(fixtures::k3(a), x0, t);
    const double deviation = (tr.states[1].array() - tr.consensus_value).abs().maxCoeff();
    if (tr.certificate.psd_corank1()) {
      EXPECT_LT(deviation, 1e-6);
    } else {
      EXPECT_GT(deviation, 1.0);
    }
  }
}

TEST(OrthantExit, PositiveGraphStaysInside) {
  const std::vector<double> x0{0.0, 3.0, 1.0, 0.0};
  const auto tr = simulate_consensus(fixtures::path(4), x0, linspace(0, 5, 501));
  EXPECT_TRUE(orthant_exit_events(tr).empty());
}

TEST(OrthantExit, FixtureSixthAgentDipsAndReturns) {
  const auto g = fixtures::load("nine_node.txt");
  const auto x0 = read_vector_file(fixtures::data("nine_node_x0.txt"), 9);
  const auto tr = simulate_consensus(g, x0, linspace(0, 5, 5001));
  const auto events = orthant_exit_events(tr);
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0].agent, 5u);
  ASSERT_TRUE(events[0].return_time.has_value());
  EXPECT_GT(*events[0].return_time, events[0].exit_time);
  EXPECT_LT(events[0].minimum, 0.0);
  // Refined endpoints are zero crossings of the exact solution.
  EXPECT_NEAR(tr.state_at(events[0].exit_time)(5), 0.0, 1e-6);
  EXPECT_NEAR(tr.state_at(*events[0].return_time)(5), 0.0, 1e-6);
  EXPECT_NEAR(tr.consensus_value, 62.52 / 9.0, 1e-12);
  EXPECT_LT((tr.states.back().array() - tr.consensus_value).abs().maxCoeff(), 1e-3);
}

TEST(DcFlow, SingleLine) {
  const std::vector<double> p{1.0, -1.0};
  const auto pf = dc_power_flow(fixtures::path(2), p);
  EXPECT_TRUE(pf.feasible);
  EXPECT_NEAR(pf.angles(0), 1.0, 1e-14);
  EXPECT_EQ(pf.angles(1), 0.0);
  EXPECT_LE(pf.residual, 1e-12);
  const std::vector<double> zero{0.0, 0.0};
  EXPECT_EQ(dc_power_flow(fixtures::path(2), zero).angles, Vector::Zero(2));
}

TEST(DcFlow, Validation) {
  const std::vector<double> unbalanced{1.0, 0.5};
  EXPECT_EQ(code_of([&] { dc_power_flow(fixtures::path(2), unbalanced); }), ErrorCode::UnbalancedInjections);
  const std::vector<double> wrong{1.0, -1.0};
  EXPECT_EQ(code_of([&] { dc_power_flow(fixtures::path(3), wrong); }), ErrorCode::DimensionMismatch);
}

TEST(DcFlow, BoundaryInstanceReportsKernel) {
  const std::vector<double> p{1.0, 0.0, -1.0};
  const auto pf = dc_power_flow(fixtures::k3(-0.5), p);
  EXPECT_FALSE(pf.feasible);
  EXPECT_EQ(pf.reason, "multiple zero eigenvalues");
  ASSERT_EQ(pf.kernel_basis.cols(), 2);
  EXPECT_LT((laplacian(fixtures::k3(-0.5)).dense() * pf.kernel_basis).cwiseAbs().maxCoeff(), 1e-12);
  const auto ind = dc_power_flow(fixtures::k3(-1.0), p);
  EXPECT_FALSE(ind.feasible);
  EXPECT_EQ(ind.reason, "indefinite");
  EXPECT_EQ(ind.kernel_basis.cols(), 0);
}

TEST(DcFlow, FeasibleResidualAndVerdict) {
  std::mt19937_64 rng(73);
  std::normal_distribution<double> d;
  for (std::uint64_t k = 0; k < 100; ++k) {
    const auto g = random_signed_graph(74, k);
    std::vector<double> p(g.node_count());
    for (auto& x : p) x = d(rng);
    double mean = 0;
    for (double x : p) mean += x;
    mean /= static_cast<double>(p.size());
    for (auto& x : p) x -= mean;
    const auto pf = dc_power_flow(g, p);
    const auto ref = oracle::spectrum(oracle::laplacian(g));
    if (!ref.near_threshold) EXPECT_EQ(pf.feasible, oracle::psd_corank1(ref)) << "instance " << k;
    if (pf.feasible) EXPECT_LE(pf.residual, 1e-9 * pf.injections.norm()) << "instance " << k;
  }
}

TEST(AngleStability, SmallAnglesPositiveWeights) {
  const std::vector<Line> lines{{1, 2, 2.0}, {2, 3, 1.5}, {3, 4, 1.0}};
  const std::vector<double> v{1.0, 1.02, 0.98, 1.01};
  const std::vector<double> th{0.0, 0.1, -0.2, 0.3};
  const auto s = angle_stability_weights(lines, v, th);
  for (double w : s.weights) EXPECT_GT(w, 0.0);
  EXPECT_NEAR(s.weights[0], 1.02 * 2.0 * std::cos(-0.1), 1e-14);
  EXPECT_TRUE(s.stable);
  EXPECT_EQ(s.type_index, 0u);
  const std::vector<Line> split{{1, 2, 2.0}, {3, 4, 1.0}};
  EXPECT_FALSE(angle_stability_weights(split, v, th).stable);
}

TEST(AngleStability, WideAngleAndCapacitiveLine) {
  const std::vector<Line> lines{{1, 2, 2.0}, {2, 3, 1.5}, {3, 4, 1.0}, {1, 4, -0.8}, {1, 3, 1.2}};
  const std::vector<double> v{1.0, 1.0, 1.0, 1.0};
  const std::vector<double> th{0.0, 2.0, 0.1, 0.2};  // |theta1 - theta2| > pi/2
  const auto s = angle_stability_weights(lines, v, th);
  EXPECT_LT(s.weights[0], 0.0);
  EXPECT_LT(s.weights[3], 0.0);
  const auto ref = oracle::spectrum(oracle::laplacian(s.graph));
  EXPECT_EQ(s.inertia, ref.inertia);
  EXPECT_EQ(s.stable, oracle::psd_corank1(ref));
  EXPECT_EQ(s.type_index, ref.inertia.minus);
}

TEST(AngleStability, ZeroWeightDroppedAndVoltageChecked) {
  const std::vector<Line> lines{{1, 2, 1.0}, {2, 3, 0.0}};
  const std::vector<double> v{1.0, 1.0, 1.0};
  const std::vector<double> th{0.0, 0.0, 0.0};
  const auto s = angle_stability_weights(lines, v, th);
  EXPECT_EQ(s.dropped_lines, (std::vector<std::size_t>{1}));
  EXPECT_EQ(s.graph.edge_count(), 1u);
  EXPECT_FALSE(s.warnings.empty());
  const std::vector<double> bad{1.0, 0.0, 1.0};
  EXPECT_EQ(code_of([&] { angle_stability_weights(lines, bad, th); }), ErrorCode::NonpositiveVoltage);
}
