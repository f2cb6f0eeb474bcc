#include "todatop/toda.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace todatop {
namespace {

constexpr double kBlowup = 1e9;

struct Deriv {
  std::vector<double> da, db;
};

Deriv rhs(const RootDatum& d, const std::vector<double>& a, const std::vector<double>& b) {
  Deriv out;
  out.da.resize(d.rank);
  out.db = a;
  for (int j = 0; j < d.rank; ++j) {
    double s = 0;
    for (int k = 0; k < d.rank; ++k) s += d.cartan[j][k] * b[k];
    out.da[j] = -s * a[j];
  }
  return out;
}

bool out_of_range(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x) || std::fabs(x) > kBlowup) return true;
  return false;
}

}  // namespace

SimResult simulate(const RootDatum& d, const TodaState& init, double t_end, double dt,
                   int stride) {
  if ((int)init.a.size() != d.rank || (int)init.b.size() != d.rank)
    throw std::invalid_argument("simulate: state dimension does not match the rank");
  if (!(dt > 0)) throw std::invalid_argument("simulate: dt must be positive");
  if (stride < 1) stride = 1;

  SimResult sim;
  TodaState s = init;
  sim.samples.push_back(s);
  const double span = t_end - init.t;
  long long nsteps = std::llround(std::fabs(span) / dt);
  if (nsteps < 1) nsteps = 1;
  const double h = span / (double)nsteps;

  auto axpy = [&](const std::vector<double>& x, double c, const Deriv& k,
                  std::vector<double>& out, bool use_a) {
    const std::vector<double>& kk = use_a ? k.da : k.db;
    out.resize(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + c * kk[i];
  };

  for (long long step = 1; step <= nsteps; ++step) {
    const Deriv k1 = rhs(d, s.a, s.b);
    std::vector<double> a2, b2;
    axpy(s.a, h / 2, k1, a2, true);
    axpy(s.b, h / 2, k1, b2, false);
    const Deriv k2 = rhs(d, a2, b2);
    std::vector<double> a3, b3;
    axpy(s.a, h / 2, k2, a3, true);
    axpy(s.b, h / 2, k2, b3, false);
    const Deriv k3 = rhs(d, a3, b3);
    std::vector<double> a4, b4;
    axpy(s.a, h, k3, a4, true);
    axpy(s.b, h, k3, b4, false);
    const Deriv k4 = rhs(d, a4, b4);

    TodaState next;
    next.t = init.t + (double)step * h;
    next.a.resize(d.rank);
    next.b.resize(d.rank);
    for (int j = 0; j < d.rank; ++j) {
      next.a[j] = s.a[j] + h / 6 * (k1.da[j] + 2 * k2.da[j] + 2 * k3.da[j] + k4.da[j]);
      next.b[j] = s.b[j] + h / 6 * (k1.db[j] + 2 * k2.db[j] + 2 * k3.db[j] + k4.db[j]);
    }
    if (out_of_range(next.a) || out_of_range(next.b)) {
      sim.blowup = true;
      sim.blowup_time = s.t;
      break;
    }
    s = next;
    if (step % stride == 0 || step == nsteps) sim.samples.push_back(s);
  }
  return sim;
}

std::vector<double> lax_char_coeffs(const std::vector<double>& a, const std::vector<double>& b) {
  const int l = (int)a.size();
  assert((int)b.size() == l);
  // Tridiagonal Lax matrix of size l+1 with diagonal d_1 = b_1,
  // d_j = b_j - b_{j-1}, d_{l+1} = -b_l.
  std::vector<double> diag(l + 1);
  diag[0] = l > 0 ? b[0] : 0;
  for (int j = 1; j < l; ++j) diag[j] = b[j] - b[j - 1];
  diag[l] = l > 0 ? -b[l - 1] : 0;
  // det(x I - L) by the three-term recurrence over leading principal minors.
  std::vector<std::vector<double>> P(l + 2);
  P[0] = {1.0};
  for (int k = 1; k <= l + 1; ++k) {
    std::vector<double> cur(k + 1, 0.0);
    for (size_t i = 0; i < P[k - 1].size(); ++i) {
      cur[i + 1] += P[k - 1][i];            // x * P_{k-1}
      cur[i] -= diag[k - 1] * P[k - 1][i];  // -d_k * P_{k-1}
    }
    if (k >= 2) {
      const double offdiag = a[k - 2];  // sub * super = a_{k-1} * 1
      for (size_t i = 0; i < P[k - 2].size(); ++i) cur[i] -= offdiag * P[k - 2][i];
    }
    P[k] = std::move(cur);
  }
  return P[l + 1];
}

std::string trajectory_csv(const SimResult& sim, int rank) {
  std::string out = "t";
  for (int j = 1; j <= rank; ++j) out += ",a" + std::to_string(j);
  for (int j = 1; j <= rank; ++j) out += ",b" + std::to_string(j);
  out += ",blowup\n";
  char buf[64];
  for (size_t i = 0; i < sim.samples.size(); ++i) {
    const TodaState& s = sim.samples[i];
    std::snprintf(buf, sizeof buf, "%.12g", s.t);
    out += buf;
    for (double v : s.a) {
      std::snprintf(buf, sizeof buf, ",%.12g", v);
      out += buf;
    }
    for (double v : s.b) {
      std::snprintf(buf, sizeof buf, ",%.12g", v);
      out += buf;
    }
    out += (sim.blowup && i + 1 == sim.samples.size()) ? ",1\n" : ",0\n";
  }
  return out;
}

}  // namespace todatop
