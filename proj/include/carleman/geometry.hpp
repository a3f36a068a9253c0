#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "carleman/util.hpp"

namespace carleman::geo {

/// Uniform tensor grid on [0,R] x [0,2pi), periodic in theta.
struct Grid {
  int n_r = 0;
  int n_theta = 0;
  double R = 0.0;
  double dr = 0.0;
  double dtheta = 0.0;

  Grid() = default;
  Grid(int nr, int nt, double R_outer);

  std::size_t size() const { return std::size_t(n_r) * n_theta; }
  int wrap_j(int j) const {
    int m = j % n_theta;
    return m < 0 ? m + n_theta : m;
  }
  std::size_t index(int i, int j) const {
    return std::size_t(i) * n_theta + wrap_j(j);
  }
  double r(int i) const { return i * dr; }
  double theta(int j) const { return wrap_j(j) * dtheta; }
  int i_of(std::size_t idx) const { return int(idx / n_theta); }
  int j_of(std::size_t idx) const { return int(idx % n_theta); }
};

/// Warp factor a(r) of the metric dr^2 + a(r)^2 dtheta^2.
/// Pure cone a = beta*r for r >= r_cone; cubic blend with a(0)=a_min,
/// a'(0)=0 below. A constant-warp (cylinder) variant is available for
/// separable-oracle tests.
struct ConeProfile {
  double beta = 1.0;
  double r_cone = 1.0;
  double R = 4.0;
  double a_min = 0.5;
  bool cylinder = false;
  double a0 = 1.0;  // warp constant when cylinder
  // blend a(r) = a_min + c2 r^2 + c3 r^3 on [0, r_cone]
  double c2 = 0.0;
  double c3 = 0.0;
  std::vector<double> a_values;  // sampled on the radial grid

  double a(double r) const;
  double da(double r) const;  // a'(r)
};

struct Surface {
  ConeProfile profile;
  Grid grid;

  double a_at(int i) const { return profile.a_values[std::size_t(i)]; }
  /// Stable content hash of the discretized geometry.
  std::string content_hash() const;
};

struct ScalarField {
  int n_r = 0;
  int n_theta = 0;
  std::vector<double> values;

  ScalarField() = default;
  ScalarField(const Grid& g, double fill = 0.0)
      : n_r(g.n_r), n_theta(g.n_theta), values(g.size(), fill) {}

  std::size_t size() const { return values.size(); }
  double& at(int i, int j) { return values[idx(i, j)]; }
  double at(int i, int j) const { return values[idx(i, j)]; }
  double& operator[](std::size_t k) { return values[k]; }
  double operator[](std::size_t k) const { return values[k]; }

  std::size_t idx(int i, int j) const {
    int m = j % n_theta;
    if (m < 0) m += n_theta;
    return std::size_t(i) * n_theta + m;
  }
};

struct RegionMask {
  int n_r = 0;
  int n_theta = 0;
  std::string label;
  std::vector<std::uint8_t> on;

  RegionMask() = default;
  RegionMask(const Grid& g, std::string name = "")
      : n_r(g.n_r), n_theta(g.n_theta), label(std::move(name)), on(g.size(), 0) {}

  std::size_t size() const { return on.size(); }
  bool empty_mask() const;
  std::size_t count() const;
  bool test(std::size_t k) const { return on[k] != 0; }
  void set(std::size_t k, bool v = true) { on[k] = v ? 1 : 0; }
  std::uint8_t& at(int i, int j) { return on[idx(i, j)]; }
  std::uint8_t at(int i, int j) const { return on[idx(i, j)]; }
  std::size_t idx(int i, int j) const {
    int m = j % n_theta;
    if (m < 0) m += n_theta;
    return std::size_t(i) * n_theta + m;
  }
};

/// Builds the truncated conic surface. Throws CarlemanError when the blend
/// dips below a_min/2 or parameters are inconsistent.
Surface build_cone(double beta, double r_cone, double R, int n_r, int n_theta,
                   double a_min);

/// Constant-warp surface (cylinder [0,R] x S^1_{2 pi a0}), for separable oracles.
Surface build_cylinder(double a0, double R, int n_r, int n_theta);

struct GradientField {
  ScalarField d_r;      // orthonormal-frame radial component
  ScalarField d_theta;  // orthonormal-frame angular component a^{-1} d_theta u
};

/// Second-order gradient in the orthonormal coframe; one-sided stencils at
/// r=0 and r=R, periodic in theta.
GradientField metric_gradient(const Surface& s, const ScalarField& u);

ScalarField gradient_norm(const GradientField& g);

/// Quadrature weights a(r_i) dr dtheta with trapezoid halving at the radial
/// boundaries; defines the discrete L^2(M) inner product.
ScalarField volume_weights(const Surface& s);

double inner_product(const ScalarField& w, const ScalarField& u,
                     const ScalarField& v);

struct EpsDenseResult {
  bool ok = false;
  double worst_distance = 0.0;
  std::size_t argmax_node = 0;
};

/// Multi-source Dijkstra distances to the mask on the 8-neighbor grid graph
/// with metric edge lengths.
std::vector<double> distances_to_mask(const Surface& s, const RegionMask& mask);

EpsDenseResult eps_dense_check(const Surface& s, const RegionMask& mask,
                               double eps);

/// Geodesic (graph) distance between two nodes.
double node_distance(const Surface& s, std::size_t from, std::size_t to);

/// Grows mask by all nodes within radius of any set node.
RegionMask dilate(const Surface& s, const RegionMask& mask, double radius);

/// Ball of given radius around a node.
RegionMask metric_ball(const Surface& s, std::size_t center, double radius);

/// Greedy farthest-point net: adds balls of radius ball_radius until the mask
/// is eps-dense. Deterministic (ties broken by node index). Starts from the
/// given mask (may be empty).
RegionMask fill_to_eps_dense(const Surface& s, RegionMask mask, double eps,
                             double ball_radius);

std::string mask_to_csv(const RegionMask& m);
RegionMask mask_from_csv(const Grid& g, const std::string& csv);

}  // namespace carleman::geo
