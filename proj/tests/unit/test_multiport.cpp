#include <functional>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "signlap/error.hpp"
#include "signlap/multiport.hpp"
#include "signlap/random_graph.hpp"

using namespace signlap;

namespace {


// Connected all-positive graph: corpus instance with every weight made positive.
SignedGraph positive_connected(std::uint64_t seed, std::uint64_t k) {
  for (;; ++k) {
    auto g = random_signed_graph(seed, k);
    std::vector<Edge> e(g.edges().begin(), g.edges().end());
    for (auto& x : e) x.weight = std::abs(x.weight);
    SignedGraph h(g.node_count(), e);
    if (is_connected(h)) return h;
  }
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(EffectiveResistance, SeriesPath) {
  const auto L = laplacian(fixtures::path(3));
  EXPECT_NEAR(effective_resistance(L, 0, 2), 2.0, 1e-12);
  EXPECT_NEAR(effective_resistance(L, 0, 1), 1.0, 1e-12);
  // Unit current across (1,2) produces voltage 1 across (1,3) and 0 across (2,3).
  EXPECT_NEAR(transfer_effective_resistance(L, {0, 2}, {0, 1}), 1.0, 1e-12);
  EXPECT_NEAR(transfer_effective_resistance(L, {1, 2}, {0, 1}), 0.0, 1e-12);
}

TEST(EffectiveResistance, MatchesGroundedSolve) {
  for (std::uint64_t k = 0; k < 40; ++k) {
    const auto g = positive_connected(31, k * 7);
    const auto L = laplacian(g);
    const Matrix Lo = oracle::laplacian(g);
    const std::size_t n = g.node_count();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      EXPECT_NEAR(effective_resistance(L, i, n - 1), oracle::effective_resistance(Lo, i, n - 1), 1e-9);
    }
  }
}

TEST(PortSpec, Validation) {
  EXPECT_EQ(code_of([] { PortSpec(3, {{0, 0}}); }), ErrorCode::InvalidPort);
  EXPECT_EQ(code_of([] { PortSpec(3, {{0, 1}, {1, 0}}); }), ErrorCode::InvalidPort);
  EXPECT_EQ(code_of([] { PortSpec(3, {{0, 3}}); }), ErrorCode::IndexOutOfRange);
  const PortSpec p(3, {{2, 0}});
  EXPECT_EQ(p.incidence()(2, 0), 1.0);
  EXPECT_EQ(p.incidence()(0, 0), -1.0);
}

TEST(PortMatrices, MatchOraclePseudoinverse) {
  std::mt19937_64 rng(32);
  for (std::uint64_t k = 0; k < 40; ++k) {
    const auto g = positive_connected(33, k * 5);
    const std::size_t n = g.node_count();
    std::vector<Port> ports{{0, n - 1}};
    if (n > 3) ports.push_back({1, 2});
    const PortSpec spec(n, ports);
    const auto pm = port_matrices(laplacian(g), spec);
    ASSERT_TRUE(pm.Z.has_value());
    const Matrix D = spec.incidence();
    const Matrix Z = D.transpose() * oracle::pinv(oracle::laplacian(g)) * D;
    EXPECT_LT(oracle::rel_diff(pm.Z->dense(), Z), 1e-9);
    EXPECT_LT(oracle::rel_diff(pm.Y.dense() * Z, Matrix::Identity(Z.rows(), Z.cols())), 1e-8);
  }
}

TEST(PortMatrices, UndefinedAcrossComponents) {
  const std::vector<EdgeInput> e{{1, 2, 1}, {3, 4, 1}};
  const auto g = build_graph(4, e);
  const auto across = port_matrices(laplacian(g), PortSpec(4, {{1, 2}}));
  EXPECT_FALSE(across.Z.has_value());
  EXPECT_FALSE(across.z_undefined_reason.empty());
  const auto within = port_matrices(laplacian(g), PortSpec(4, {{0, 1}, {2, 3}}));
  ASSERT_TRUE(within.Z.has_value());
  EXPECT_NEAR((*within.Z)(0, 0), 1.0, 1e-12);
  EXPECT_NEAR((*within.Z)(0, 1), 0.0, 1e-12);
}

TEST(PortMatrices, OpenShortDualities) {
  for (std::uint64_t k = 0; k < 40; ++k) {
    const auto g = positive_connected(34, k * 3);
    const std::size_t n = g.node_count();
    if (n < 4) continue;
    const PortSpec spec(n, {{0, 1}, {1, 2}, {2, 3}});
    const auto pm = port_matrices(laplacian(g), spec);
    const std::vector<std::size_t> first{0};
    const auto open = open_circuit(pm, first);
    const auto shorted = short_circuit(pm, first);
    const std::vector<std::size_t> rest{1, 2};
    EXPECT_EQ(open.Z->dense(), pm.Z->principal(rest).dense());
    EXPECT_EQ(shorted.Y.dense(), pm.Y.principal(rest).dense());
    const Matrix I = Matrix::Identity(2, 2);
    EXPECT_LT(oracle::rel_diff(open.Y.dense() * open.Z->dense(), I), 1e-8);
    EXPECT_LT(oracle::rel_diff(shorted.Y.dense() * shorted.Z->dense(), I), 1e-8);
    // Y' = Y / Y_11 on open ports, by LU.
    EXPECT_LT(oracle::rel_diff(open.Y.dense(), oracle::kron(pm.Y.dense(), {1, 2})), 1e-8);
    EXPECT_LT(oracle::rel_diff(shorted.Z->dense(), oracle::kron(pm.Z->dense(), {1, 2})), 1e-8);
  }
}

TEST(PortMatrices, AllPortsRejected) {
  const auto pm = port_matrices(laplacian(fixtures::path(3)), PortSpec(3, {{0, 1}, {1, 2}}));
  const std::vector<std::size_t> all{0, 1};
  EXPECT_EQ(code_of([&] { open_circuit(pm, all); }), ErrorCode::AllPortsOpened);
  EXPECT_EQ(code_of([&] { short_circuit(pm, all); }), ErrorCode::AllPortsShorted);
  const std::vector<std::size_t> none;
  EXPECT_EQ(open_circuit(pm, none).Y, pm.Y);
}

TEST(Parallel, AddsConductances) {
  const auto a = SymmetricMatrix::diagonal(Vector::Constant(2, 2.0));
  const auto b = SymmetricMatrix::diagonal(Vector::Constant(2, 3.0));
  const auto p = parallel(a, b);
  EXPECT_NEAR(p.Y(0, 0), 5.0, 1e-15);
  EXPECT_NEAR(p.Z(1, 1), 0.2, 1e-15);
  EXPECT_EQ(code_of([&] { parallel(a, SymmetricMatrix::identity(3)); }), ErrorCode::DimensionMismatch);
}

TEST(SplitPortMatrices, ConductanceOfWholeIsSumOfParts) {
  std::size_t checked = 0;
  for (std::uint64_t k = 0; checked < 60 && k < 500; ++k) {
    const auto g = random_signed_graph(35, k);
    const auto s = split_by_sign(g);
    if (!is_connected(s.positive)) continue;
    const auto forest = spanning_forest(s.negative);
    std::vector<std::size_t> parents;
    for (auto e : forest.edges) parents.push_back(s.negative_parent[e]);
    const auto whole = port_matrices(laplacian(g), PortSpec::from_edges(g, parents));
    const auto [plus, minus] = split_port_matrices(s, forest);
    EXPECT_LT(oracle::rel_diff(whole.Y.dense(), plus.Y.dense() + minus.Y.dense()), 1e-8) << "instance " << k;
    ++checked;
  }
  EXPECT_EQ(checked, 60u);
}

TEST(SplitPortMatrices, EmptyForestRejected) {
  const auto s = split_by_sign(fixtures::path(3));
  EXPECT_EQ(code_of([&] { split_port_matrices(s, spanning_forest(s.negative)); }), ErrorCode::EmptyForest);
}

TEST(SplitPortMatrices, FixtureBoundaryAndConductance) {
  const auto g = fixtures::load("nine_node.txt");
  const auto s = split_by_sign(g);
  const auto [plus, minus] = split_port_matrices(s, spanning_forest(s.negative));
  Matrix z(2, 2), y(2, 2);
  z << 0.1488, -0.1046, -0.1046, 0.1371;
  y << 14.4890, 11.0571, 11.0571, 15.7337;
  EXPECT_LT((plus.Z->dense() - z).cwiseAbs().maxCoeff(), 5e-5);
  EXPECT_LT((plus.Y.dense() - y).cwiseAbs().maxCoeff(), 5e-5);
  // G- is a tree, so each port sees only its own edge and Y- is diagonal.
  EXPECT_NEAR(minus.Y(0, 0), -2.0, 1e-10);
  EXPECT_NEAR(minus.Y(1, 1), -4.0, 1e-10);
  EXPECT_NEAR(minus.Y(0, 1), 0.0, 1e-10);
}
