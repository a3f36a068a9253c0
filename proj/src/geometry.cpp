#include "carleman/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <sstream>

#include "carleman/sha256.hpp"

namespace carleman::geo {

Grid::Grid(int nr, int nt, double R_outer) {
  if (nr < 4 || nt < 4) throw CarlemanError("grid: n_r and n_theta must be >= 4");
  if (R_outer <= 0.0) throw CarlemanError("grid: R must be positive");
  n_r = nr;
  n_theta = nt;
  R = R_outer;
  dr = R / double(nr - 1);
  dtheta = 2.0 * M_PI / double(nt);
}

double ConeProfile::a(double r) const {
  if (cylinder) return a0;
  double rr = std::abs(r);  // even extension across r=0 (ghost points)
  if (rr >= r_cone) return beta * rr;
  return a_min + c2 * rr * rr + c3 * rr * rr * rr;
}

double ConeProfile::da(double r) const {
  if (cylinder) return 0.0;
  double sign = r < 0.0 ? -1.0 : 1.0;
  double rr = std::abs(r);
  if (rr >= r_cone) return sign * beta;
  return sign * (2.0 * c2 * rr + 3.0 * c3 * rr * rr);
}

std::string Surface::content_hash() const {
  Sha256 h;
  auto put = [&h](double x) { h.update(&x, sizeof(x)); };
  put(profile.beta);
  put(profile.r_cone);
  put(profile.R);
  put(profile.a_min);
  put(profile.cylinder ? profile.a0 : -1.0);
  put(double(grid.n_r));
  put(double(grid.n_theta));
  h.update(profile.a_values.data(), profile.a_values.size() * sizeof(double));
  auto d = h.digest();
  static const char* k = "0123456789abcdef";
  std::string out;
  for (auto b : d) {
    out.push_back(k[b >> 4]);
    out.push_back(k[b & 0xf]);
  }
  return out;
}

bool RegionMask::empty_mask() const {
  for (auto v : on)
    if (v) return false;
  return true;
}

std::size_t RegionMask::count() const {
  std::size_t c = 0;
  for (auto v : on) c += (v != 0);
  return c;
}

static void sample_profile(Surface& s) {
  s.profile.a_values.resize(s.grid.size() ? std::size_t(s.grid.n_r) : 0);
  s.profile.a_values.resize(std::size_t(s.grid.n_r));
  for (int i = 0; i < s.grid.n_r; ++i)
    s.profile.a_values[std::size_t(i)] = s.profile.a(s.grid.r(i));
}

Surface build_cone(double beta, double r_cone, double R, int n_r, int n_theta,
                   double a_min) {
  if (beta <= 0.0) throw CarlemanError("build_cone: beta must be positive");
  if (!(0.0 < r_cone && r_cone < R))
    throw CarlemanError("build_cone: need 0 < r_cone < R");
  if (a_min <= 0.0) throw CarlemanError("build_cone: a_min must be positive");

  Surface s;
  s.grid = Grid(n_r, n_theta, R);
  ConeProfile& p = s.profile;
  p.beta = beta;
  p.r_cone = r_cone;
  p.R = R;
  p.a_min = a_min;
  p.cylinder = false;
  // Cubic blend on [0, r_cone]: a(0)=a_min, a'(0)=0, a(rc)=beta*rc, a'(rc)=beta.
  const double rc = r_cone;
  const double A = beta * rc - a_min;
  const double B = beta;
  p.c2 = (3.0 * A - B * rc) / (rc * rc);
  p.c3 = (B * rc - 2.0 * A) / (rc * rc * rc);

  // Reject blends that dip below a_min/2 (sampled finely).
  const int fine = 2000;
  for (int k = 0; k <= fine; ++k) {
    double r = rc * double(k) / double(fine);
    if (p.a(r) < 0.5 * a_min)
      throw CarlemanError(
          "build_cone: blended warp factor dips below a_min/2; "
          "adjust beta, r_cone or a_min");
  }
  sample_profile(s);
  return s;
}

Surface build_cylinder(double a0, double R, int n_r, int n_theta) {
  if (a0 <= 0.0) throw CarlemanError("build_cylinder: a0 must be positive");
  Surface s;
  s.grid = Grid(n_r, n_theta, R);
  s.profile.cylinder = true;
  s.profile.a0 = a0;
  s.profile.a_min = a0;
  s.profile.beta = 0.0;
  s.profile.r_cone = 0.0;
  s.profile.R = R;
  sample_profile(s);
  return s;
}

GradientField metric_gradient(const Surface& s, const ScalarField& u) {
  const Grid& g = s.grid;
  if (u.size() != g.size()) throw CarlemanError("metric_gradient: field/grid size mismatch");
  GradientField out;
  out.d_r = ScalarField(g);
  out.d_theta = ScalarField(g);
  const double inv2dr = 1.0 / (2.0 * g.dr);
  const double inv2dt = 1.0 / (2.0 * g.dtheta);
  for (int i = 0; i < g.n_r; ++i) {
    const double inv_a = 1.0 / s.a_at(i);
    for (int j = 0; j < g.n_theta; ++j) {
      double ur;
      if (i == 0) {
        // second-order one-sided
        ur = (-3.0 * u.at(0, j) + 4.0 * u.at(1, j) - u.at(2, j)) * inv2dr;
      } else if (i == g.n_r - 1) {
        ur = (3.0 * u.at(i, j) - 4.0 * u.at(i - 1, j) + u.at(i - 2, j)) * inv2dr;
      } else {
        ur = (u.at(i + 1, j) - u.at(i - 1, j)) * inv2dr;
      }
      double ut = (u.at(i, j + 1) - u.at(i, j - 1)) * inv2dt;
      out.d_r.at(i, j) = ur;
      out.d_theta.at(i, j) = ut * inv_a;
    }
  }
  return out;
}

ScalarField gradient_norm(const GradientField& gf) {
  ScalarField out;
  out.n_r = gf.d_r.n_r;
  out.n_theta = gf.d_r.n_theta;
  out.values.resize(gf.d_r.size());
  for (std::size_t k = 0; k < out.values.size(); ++k)
    out.values[k] = std::hypot(gf.d_r[k], gf.d_theta[k]);
  return out;
}

ScalarField volume_weights(const Surface& s) {
  const Grid& g = s.grid;
  ScalarField w(g);
  for (int i = 0; i < g.n_r; ++i) {
    double base = s.a_at(i) * g.dr * g.dtheta;
    if (i == 0 || i == g.n_r - 1) base *= 0.5;
    for (int j = 0; j < g.n_theta; ++j) w.at(i, j) = base;
  }
  return w;
}

double inner_product(const ScalarField& w, const ScalarField& u,
                     const ScalarField& v) {
  double s = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) s += w[k] * u[k] * v[k];
  return s;
}

std::vector<double> distances_to_mask(const Surface& s, const RegionMask& mask) {
  const Grid& g = s.grid;
  if (mask.size() != g.size()) throw CarlemanError("distances_to_mask: mask/grid mismatch");
  const double INF = std::numeric_limits<double>::infinity();
  std::vector<double> dist(g.size(), INF);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (std::size_t k = 0; k < g.size(); ++k)
    if (mask.test(k)) {
      dist[k] = 0.0;
      pq.emplace(0.0, k);
    }
  if (pq.empty()) throw CarlemanError("control region empty");

  auto edge = [&](int i0, int di, int dj) -> double {
    // metric edge lengths: radial dr, angular a(r)*dtheta at the mean radius,
    // diagonals the Euclidean combination
    if (dj == 0) return g.dr;
    double a_here = s.a_at(i0);
    double a_there = s.a_at(i0 + di);
    double ang = 0.5 * (a_here + a_there) * g.dtheta;
    if (di == 0) return a_here * g.dtheta;
    return std::hypot(g.dr, ang);
  };

  while (!pq.empty()) {
    auto [d, k] = pq.top();
    pq.pop();
    if (d > dist[k]) continue;
    int i = g.i_of(k), j = g.j_of(k);
    for (int di = -1; di <= 1; ++di) {
      int ii = i + di;
      if (ii < 0 || ii >= g.n_r) continue;
      for (int dj = -1; dj <= 1; ++dj) {
        if (di == 0 && dj == 0) continue;
        std::size_t kk = g.index(ii, j + dj);
        double nd = d + edge(i, di, dj);
        if (nd < dist[kk]) {
          dist[kk] = nd;
          pq.emplace(nd, kk);
        }
      }
    }
  }
  return dist;
}

EpsDenseResult eps_dense_check(const Surface& s, const RegionMask& mask,
                               double eps) {
  if (eps <= 0.0) throw CarlemanError("eps_dense_check: eps must be positive");
  auto dist = distances_to_mask(s, mask);
  EpsDenseResult r;
  r.worst_distance = 0.0;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    if (dist[k] > r.worst_distance) {
      r.worst_distance = dist[k];
      r.argmax_node = k;
    }
  }
  r.ok = r.worst_distance <= eps;
  return r;
}

double node_distance(const Surface& s, std::size_t from, std::size_t to) {
  RegionMask m(s.grid, "src");
  m.set(from, true);
  auto dist = distances_to_mask(s, m);
  return dist[to];
}

RegionMask dilate(const Surface& s, const RegionMask& mask, double radius) {
  auto dist = distances_to_mask(s, mask);
  RegionMask out(s.grid, mask.label);
  for (std::size_t k = 0; k < dist.size(); ++k) out.set(k, dist[k] <= radius);
  return out;
}

RegionMask metric_ball(const Surface& s, std::size_t center, double radius) {
  RegionMask m(s.grid, "ball");
  m.set(center, true);
  return dilate(s, m, radius);
}

RegionMask fill_to_eps_dense(const Surface& s, RegionMask mask, double eps,
                             double ball_radius) {
  RegionMask out = mask;
  out.n_r = s.grid.n_r;
  out.n_theta = s.grid.n_theta;
  if (out.on.empty()) out.on.assign(s.grid.size(), 0);
  for (;;) {
    if (out.empty_mask()) {
      // seed at the outermost ring's first node to make Dijkstra well-posed
      out.set(s.grid.index(s.grid.n_r - 1, 0), true);
      auto ball = metric_ball(s, s.grid.index(s.grid.n_r - 1, 0), ball_radius);
      for (std::size_t k = 0; k < ball.size(); ++k)
        if (ball.test(k)) out.set(k, true);
      continue;
    }
    auto dist = distances_to_mask(s, out);
    double worst = 0.0;
    std::size_t arg = 0;
    for (std::size_t k = 0; k < dist.size(); ++k)
      if (dist[k] > worst) {
        worst = dist[k];
        arg = k;
      }
    if (worst <= eps) break;
    auto ball = metric_ball(s, arg, ball_radius);
    for (std::size_t k = 0; k < ball.size(); ++k)
      if (ball.test(k)) out.set(k, true);
  }
  return out;
}

std::string mask_to_csv(const RegionMask& m) {
  std::ostringstream os;
  os << "i,j,flag\n";
  for (int i = 0; i < m.n_r; ++i)
    for (int j = 0; j < m.n_theta; ++j)
      os << i << ',' << j << ',' << int(m.at(i, j)) << '\n';
  return os.str();
}

RegionMask mask_from_csv(const Grid& g, const std::string& csv) {
  RegionMask m(g);
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);  // header
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    int i, j, f;
    if (std::sscanf(line.c_str(), "%d,%d,%d", &i, &j, &f) == 3)
      m.at(i, j) = std::uint8_t(f != 0);
  }
  return m;
}

}  // namespace carleman::geo
