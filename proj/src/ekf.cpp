#include "relmcl/ekf.hpp"

#include <cmath>
#include <stdexcept>

namespace relmcl {

namespace {

Mat4 mat_mul(const Mat4& a, const Mat4& b) {
  Mat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      double aik = a[i][k];
      if (aik == 0.0) continue;
      for (int j = 0; j < 4; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

Mat4 transpose(const Mat4& a) {
  Mat4 t{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = a[j][i];
  return t;
}

void symmetrize(Mat4& p) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      double v = 0.5 * (p[i][j] + p[j][i]);
      p[i][j] = v;
      p[j][i] = v;
    }
}

// One scalar measurement update in Joseph form: y = z - h, H a row vector.
void scalar_update(EkfState& st, const std::array<double, 4>& H, double y,
                   double r_var) {
  double s = r_var;
  std::array<double, 4> ph{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) ph[i] += st.cov[i][j] * H[j];
  for (int i = 0; i < 4; ++i) s += H[i] * ph[i];
  if (s <= 0.0) return;

  std::array<double, 4> k{};
  for (int i = 0; i < 4; ++i) k[i] = ph[i] / s;
  for (int i = 0; i < 4; ++i) st.mean[i] += k[i] * y;

  Mat4 ikh{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) ikh[i][j] = (i == j ? 1.0 : 0.0) - k[i] * H[j];
  Mat4 p = mat_mul(mat_mul(ikh, st.cov), transpose(ikh));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) p[i][j] += k[i] * r_var * k[j];
  st.cov = p;
  symmetrize(st.cov);
}

}  // namespace

EkfState init_ekf(const Box2& init_region, const Vec2& v_sigma) {
  if (!init_region.valid()) throw std::invalid_argument("init region is empty (lo > hi)");
  EkfState st;
  Vec2 c = init_region.center();
  Vec2 e = init_region.extent();
  st.mean = {c.x, c.y, 0.0, 0.0};
  st.cov = Mat4{};
  st.cov[0][0] = std::max(e.x * e.x / 12.0, 1e-6);
  st.cov[1][1] = std::max(e.y * e.y / 12.0, 1e-6);
  st.cov[2][2] = std::max(v_sigma.x * v_sigma.x, 1e-6);
  st.cov[3][3] = std::max(v_sigma.y * v_sigma.y, 1e-6);
  return st;
}

std::array<std::array<double, 4>, 3> range_jacobian(const Vec2& r,
                                                    const AnchorLayout& layout) {
  auto anchors = layout.anchors();
  std::array<std::array<double, 4>, 3> jac{};
  for (int i = 0; i < 3; ++i) {
    Vec2 diff = r - anchors[static_cast<std::size_t>(i)];
    double d = norm(diff);
    if (d < 1e-6) continue;  // row stays zero; caller skips the update
    jac[static_cast<std::size_t>(i)] = {diff.x / d, diff.y / d, 0.0, 0.0};
  }
  return jac;
}

FilterEstimate ekf_step(EkfState& state, const RangeTriple& ranges, const Vec2& v0,
                        const EkfConfig& cfg) {
  if (cfg.ts <= 0.0) throw std::invalid_argument("ts must be positive");
  for (double s : cfg.meas_sigma)
    if (s <= 0.0) throw std::invalid_argument("measurement sigma must be positive");

  double ts = cfg.ts;
  // Predict: r += (v1 - v0) ts with constant tag velocity.
  state.mean[0] += (state.mean[2] - v0.x) * ts;
  state.mean[1] += (state.mean[3] - v0.y) * ts;
  Mat4 f{};
  for (int i = 0; i < 4; ++i) f[i][i] = 1.0;
  f[0][2] = ts;
  f[1][3] = ts;
  state.cov = mat_mul(mat_mul(f, state.cov), transpose(f));
  for (int i = 0; i < 4; ++i)
    state.cov[i][i] += cfg.process_sigma[static_cast<std::size_t>(i)] *
                       cfg.process_sigma[static_cast<std::size_t>(i)];
  symmetrize(state.cov);

  auto anchors = cfg.layout.anchors();
  for (int i = 0; i < 3; ++i) {
    Vec2 r{state.mean[0], state.mean[1]};
    Vec2 diff = r - anchors[static_cast<std::size_t>(i)];
    double predicted = norm(diff);
    if (predicted < 1e-6) continue;
    std::array<double, 4> H{diff.x / predicted, diff.y / predicted, 0.0, 0.0};
    double sigma = cfg.meas_sigma[static_cast<std::size_t>(i)];
    scalar_update(state, H, ranges[i] - predicted, sigma * sigma);
  }

  state.step += 1;
  FilterEstimate est;
  est.r_hat = {state.mean[0], state.mean[1]};
  est.v1_hat = {state.mean[2], state.mean[3]};
  return est;
}

}  // namespace relmcl
