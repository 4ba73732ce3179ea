#include <functional>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "signlap/error.hpp"
#include "signlap/random_graph.hpp"
#include "signlap/reduction.hpp"

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

}  // namespace

TEST(Kron, PathEndpointsGiveSeriesEdge) {
  const std::vector<NodeId> alpha{0, 2};
  const auto k = kron_reduce(laplacian(fixtures::path(3)), alpha);
  ASSERT_EQ(k.reduced_graph.edge_count(), 1u);
  EXPECT_NEAR(k.reduced_graph.edge(0).weight, 0.5, 1e-14);
  EXPECT_EQ(k.beta, (std::vector<NodeId>{1}));
  EXPECT_FALSE(k.disconnected_input);
}

TEST(Kron, RejectsBadTerminalSets) {
  const auto L = laplacian(fixtures::path(3));
  EXPECT_EQ(code_of([&] { kron_reduce(L, std::vector<NodeId>{0}); }), ErrorCode::AlphaTooSmall);
  EXPECT_EQ(code_of([&] { kron_reduce(L, std::vector<NodeId>{0, 1, 2}); }), ErrorCode::AlphaNotProper);
  EXPECT_EQ(code_of([&] { kron_reduce(L, std::vector<NodeId>{0, 0}); }), ErrorCode::AlphaNotProper);
  EXPECT_EQ(code_of([&] { kron_reduce(L, std::vector<NodeId>{0, 5}); }), ErrorCode::AlphaNotProper);
}

TEST(ExternalTerminals, NodesOnNegativeEdges) {
  EXPECT_EQ(external_terminals(fixtures::load("nine_node.txt")), (std::vector<NodeId>{4, 5, 6}));
  EXPECT_EQ(code_of([] { external_terminals(fixtures::path(3)); }), ErrorCode::NoNegativeEdges);
}

TEST(Kron, MatchesLuAndBalancesCurrents) {
  std::size_t checked = 0;
  for (std::uint64_t k = 0; k < 300 && checked < 80; ++k) {
    const auto g = random_signed_graph(41, k);
    if (!is_connected(g)) continue;
    const auto alpha = external_terminals(g);
    if (alpha.size() == g.node_count()) continue;
    const auto kr = kron_reduce(laplacian(g), alpha);
    const Matrix L = oracle::laplacian(g);
    EXPECT_LT(oracle::rel_diff(kr.reduced.dense(), oracle::kron(L, alpha)), 1e-9);

    // Interior nodes carry no injected current when v_b = -L_bb^{-1} L_ba v_a.
    const Vector va = Vector::LinSpaced(static_cast<Eigen::Index>(alpha.size()), -1.0, 2.0);
    const Matrix Lbb = block(L, kr.beta, kr.beta);
    const Matrix Lba = block(L, kr.beta, alpha);
    const Vector vb = -Lbb.partialPivLu().solve(Lba * va);
    Vector v(L.rows());
    for (std::size_t i = 0; i < alpha.size(); ++i) v(static_cast<Eigen::Index>(alpha[i])) = va(static_cast<Eigen::Index>(i));
    for (std::size_t i = 0; i < kr.beta.size(); ++i) v(static_cast<Eigen::Index>(kr.beta[i])) = vb(static_cast<Eigen::Index>(i));
    const Vector current = L * v;
    const Vector reduced_current = kr.reduced.dense() * va;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      EXPECT_NEAR(current(static_cast<Eigen::Index>(alpha[i])), reduced_current(static_cast<Eigen::Index>(i)), 1e-9);
    }
    for (auto b : kr.beta) EXPECT_NEAR(current(static_cast<Eigen::Index>(b)), 0.0, 1e-9);
    ++checked;
  }
  EXPECT_GE(checked, 80u);
}

TEST(Kron, ReducedLaplacianIsLaplacian) {
  for (std::uint64_t k = 0; k < 50; ++k) {
    const auto g = random_signed_graph(42, k);
    if (!is_connected(g)) continue;
    const auto alpha = external_terminals(g);
    if (alpha.size() == g.node_count()) continue;
    const auto kr = kron_reduce(laplacian(g), alpha);
    EXPECT_LT(kr.reduced.dense().rowwise().sum().cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LT(oracle::rel_diff(laplacian(kr.reduced_graph).dense(), kr.reduced.dense()), 1e-9);
  }
}

TEST(Kron, FixtureReducesToPositiveTriangle) {
  const auto g = fixtures::load("nine_node.txt");
  const auto kr = kron_reduce(laplacian(g), external_terminals(g));
  EXPECT_EQ(kr.reduced_graph.node_count(), 3u);
  EXPECT_EQ(kr.reduced_graph.edge_count(), 3u);
  EXPECT_EQ(kr.reduced_graph.negative_edge_count(), 0u);
  EXPECT_TRUE(is_connected(kr.reduced_graph));
}

TEST(Kron, SingularInteriorFlagsDisconnectedInput) {
  // Node 3 is isolated and interior.
  const std::vector<EdgeInput> e{{1, 2, -1}, {1, 4, 2}, {2, 4, 2}};
  const auto g = build_graph(4, e);
  const std::vector<NodeId> alpha{0, 1};
  const auto kr = kron_reduce(laplacian(g), alpha);
  EXPECT_TRUE(kr.disconnected_input);
}

TEST(GraphFromLaplacian, DropsNegligibleEntries) {
  Matrix L(3, 3);
  L << 1, -1, 1e-15, -1, 1.5, -0.5, 1e-15, -0.5, 0.5;
  const auto g = graph_from_laplacian(SymmetricMatrix(L));
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edge(0).weight, 1.0);
  EXPECT_EQ(g.edge(1).weight, 0.5);
}
