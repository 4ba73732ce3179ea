#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "signlap/analysis.hpp"
#include "signlap/graph.hpp"
#include "signlap/numerics.hpp"

namespace signlap {

/// Solution of x' = -L x sampled on a time grid.
struct Trajectory {
  std::vector<double> times;
  std::vector<Vector> states;
  double consensus_value = 0.0;  // 1'x(0) / n
  Certificate certificate;       // oracle verdict for L
  Vector initial;
  EigenDecomposition spectrum;   // of L

  /// Exact state at any t >= 0.
  Vector state_at(double t) const;
};

/// x(t) = exp(-L t) x0, evaluated spectrally. Throws DimensionMismatch, or
/// InvalidArgument for negative or unsorted times.
Trajectory simulate_consensus(const SignedGraph& g, std::span<const double> x0, std::span<const double> times,
                              const TolerancePolicy& tol = {});

struct OrthantExit {
  NodeId agent = 0;
  double exit_time = 0.0;
  std::optional<double> return_time;  // absent when still negative at the last sample
  double minimum = 0.0;               // lowest sampled value inside the interval
};

/// Intervals where x_i(t) < -1e-9 max|x0|, endpoints refined by bisection
/// between samples. Throws NegativeInitialCondition.
std::vector<OrthantExit> orthant_exit_events(const Trajectory& traj, const TolerancePolicy& tol = {});

struct PowerFlowCase {
  Vector injections;
  Vector angles;  // slack: last node at 0
  bool feasible = false;
  double residual = 0.0;  // ||L theta - p||
  std::string reason;     // empty when feasible
  Inertia inertia;
  Matrix kernel_basis;    // columns; filled when corank(L) > 1
};

/// Solves p = L theta with theta = L^dagger p shifted so theta_n = 0. Feasible
/// iff L is PSD with a simple zero eigenvalue. Throws DimensionMismatch or
/// UnbalancedInjections.
PowerFlowCase dc_power_flow(const SignedGraph& g, std::span<const double> p, const TolerancePolicy& tol = {});

struct Line {
  std::size_t i = 0;  // 1-based
  std::size_t j = 0;
  double susceptance = 0.0;
};

struct EquilibriumScreen {
  std::vector<double> weights;              // per input line
  std::vector<std::size_t> dropped_lines;   // input indices with weight exactly zero
  SignedGraph graph;
  bool stable = false;
  std::size_t type_index = 0;  // negative eigenvalue count of L
  Inertia inertia;
  std::vector<std::string> warnings;
};

/// w_k = V_i V_j B_ij cos(theta_i - theta_j) for each line, classified by the
/// oracle. Throws NonpositiveVoltage or DimensionMismatch.
EquilibriumScreen angle_stability_weights(std::span<const Line> lines, std::span<const double> voltages,
                                          std::span<const double> theta, const TolerancePolicy& tol = {});

}  // namespace signlap
