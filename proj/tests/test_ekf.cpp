#include <array>
#include <cmath>

#include "doctest.h"
#include "relmcl/ekf.hpp"
#include "relmcl/rng.hpp"

using namespace relmcl;

namespace {

// Smallest eigenvalue of a symmetric 4x4 via cyclic Jacobi rotations.
double min_eigenvalue(Mat4 a) {
  for (int sweep = 0; sweep < 50; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-24) break;
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        if (std::abs(a[p][q]) < 1e-18) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < 4; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 4; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  double min_ev = a[0][0];
  for (int i = 1; i < 4; ++i) min_ev = std::min(min_ev, a[i][i]);
  return min_ev;
}

double range_to_anchor(const Vec2& r, const Vec2& q) { return norm(r - q); }

}  // namespace

TEST_CASE("range jacobian matches central finite differences") {
  Rng rng(2);
  AnchorLayout layout{0.44};
  auto anchors = layout.anchors();
  const double h = 1e-6;
  for (int trial = 0; trial < 100; ++trial) {
    Vec2 r = rng.uniform2({-4.0, -4.0}, {4.0, 4.0});
    bool near_anchor = false;
    for (const auto& q : anchors)
      if (norm(r - q) < 1e-3) near_anchor = true;
    if (near_anchor) continue;

    auto jac = range_jacobian(r, layout);
    for (int i = 0; i < 3; ++i) {
      const Vec2& q = anchors[i];
      double dx = (range_to_anchor({r.x + h, r.y}, q) - range_to_anchor({r.x - h, r.y}, q)) / (2 * h);
      double dy = (range_to_anchor({r.x, r.y + h}, q) - range_to_anchor({r.x, r.y - h}, q)) / (2 * h);
      CHECK(std::abs(jac[i][0] - dx) < 1e-6);
      CHECK(std::abs(jac[i][1] - dy) < 1e-6);
      CHECK(jac[i][2] == 0.0);
      CHECK(jac[i][3] == 0.0);
    }
  }
}

TEST_CASE("init_ekf uses box moments") {
  EkfState st = init_ekf({{-4.0, 0.0}, {0.0, 2.0}}, {1.0, 1.0});
  CHECK(st.mean[0] == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(st.mean[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(st.cov[0][0] == doctest::Approx(16.0 / 12.0).epsilon(1e-12));
  CHECK(st.cov[1][1] == doctest::Approx(4.0 / 12.0).epsilon(1e-12));
  CHECK(st.cov[2][2] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(init_ekf({{1.0, 0.0}, {0.0, 1.0}}, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("ekf prediction moves the mean by (v1 - v0) ts") {
  EkfState st = init_ekf({{0.0, 0.0}, {0.0, 0.0}}, {0.1, 0.1});
  st.mean = {1.0, 2.0, 0.5, -0.5};

  EkfConfig cfg;
  cfg.layout = AnchorLayout{1.0};
  cfg.ts = 0.1;
  cfg.meas_sigma = {1e9, 1e9, 1e9};  // updates contribute ~nothing
  cfg.process_sigma = {0.0, 0.0, 0.0, 0.0};

  Vec2 v0{0.1, 0.1};
  FilterEstimate est = ekf_step(st, {1.0, 1.0, 1.0}, v0, cfg);
  CHECK(est.r_hat.x == doctest::Approx(1.0 + (0.5 - 0.1) * 0.1).epsilon(1e-9));
  CHECK(est.r_hat.y == doctest::Approx(2.0 + (-0.5 - 0.1) * 0.1).epsilon(1e-9));
}

TEST_CASE("ekf converges on a static target") {
  AnchorLayout layout{1.0};
  Vec2 truth{-2.0, 2.0};
  RangeTriple d = true_ranges(truth, layout);

  EkfConfig cfg;
  cfg.layout = layout;
  cfg.ts = 0.1;
  cfg.meas_sigma = {0.05, 0.05, 0.05};
  cfg.process_sigma = {0.01, 0.01, 0.1, 0.1};

  EkfState st = init_ekf({{-4.2, -0.2}, {-0.2, 3.8}}, {1.0, 1.0});
  FilterEstimate est;
  for (int k = 0; k < 50; ++k) est = ekf_step(st, d, {0.0, 0.0}, cfg);
  CHECK(norm(est.r_hat - truth) < 0.05);
}

TEST_CASE("ekf covariance stays symmetric positive semidefinite") {
  Rng rng(14);
  AnchorLayout layout{0.44};
  EkfConfig cfg;
  cfg.layout = layout;
  cfg.ts = 0.1;
  cfg.meas_sigma = {0.05, 0.05, 0.05};
  cfg.process_sigma = {0.01, 0.01, 0.5, 0.5};

  EkfState st = init_ekf({{-3.0, -3.0}, {3.0, 3.0}}, {1.0, 1.0});
  for (int k = 0; k < 1000; ++k) {
    Vec2 truth = rng.uniform2({-4.0, -4.0}, {4.0, 4.0});
    RangeTriple d = true_ranges(truth, layout);
    RangeTriple noisy{d.d1 + rng.normal(0.0, 0.05), d.d2 + rng.normal(0.0, 0.05),
                      d.d3 + rng.normal(0.0, 0.05)};
    ekf_step(st, noisy, rng.normal2({0.0, 0.0}, {0.3, 0.3}), cfg);

    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(st.cov[i][j] == st.cov[j][i]);
    CHECK(min_eigenvalue(st.cov) >= -1e-9);
  }
}

TEST_CASE("ekf skips a range row when the predicted distance vanishes") {
  AnchorLayout layout{1.0};
  EkfConfig cfg;
  cfg.layout = layout;
  cfg.ts = 0.1;

  // Mean sits exactly on anchor q2 = origin with zero velocity.
  EkfState st = init_ekf({{0.0, 0.0}, {0.0, 0.0}}, {0.1, 0.1});
  FilterEstimate est = ekf_step(st, {1.0, 0.5, 1.0}, {0.0, 0.0}, cfg);
  CHECK(std::isfinite(est.r_hat.x));
  CHECK(std::isfinite(est.r_hat.y));
  CHECK(min_eigenvalue(st.cov) >= -1e-9);
}
