#include "kernel_verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cms {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Richardson extrapolation of the 3-point second difference: (4 D(h/2) − D(h)) / 3.
template <class F>
cplx second_derivative(F&& f, std::vector<double>& pt, std::size_t i, double h) {
  const double x0 = pt[i];
  const cplx f0 = f(pt);
  auto d2 = [&](double step) {
    pt[i] = x0 + step;
    const cplx fp = f(pt);
    pt[i] = x0 - step;
    const cplx fm = f(pt);
    pt[i] = x0;
    return (fp - 2.0 * f0 + fm) / (step * step);
  };
  const cplx dh = d2(h);
  const cplx dh2 = d2(h / 2);
  return (4.0 * dh2 - dh) / 3.0;
}

VerificationReport make_report(std::string name, long samples, double worst, double tol, std::uint64_t seed) {
  VerificationReport r;
  r.identity = std::move(name);
  r.samples = samples;
  r.max_rel_residual = worst;
  r.tolerance = tol;
  r.pass = worst <= tol;
  r.seed = seed;
  return r;
}

double relative(cplx diff, double scale) { return scale > 0 ? std::abs(diff) / scale : std::abs(diff); }

std::string lambda_tag(double lambda) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", lambda);
  return buf;
}

}  // namespace

double circle_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2 * kPi);
  return d > kPi ? 2 * kPi - d : d;
}

void require_separated(const Configuration& c) {
  const auto& x = c.x;
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (std::size_t k = j + 1; k < x.size(); ++k)
      if (circle_distance(x[j], x[k]) <= c.delta) throw std::domain_error("coincident points in configuration");
    for (double yk : c.y)
      if (circle_distance(x[j], yk) <= c.delta) throw std::domain_error("x and y points too close");
  }
  for (std::size_t j = 0; j < c.y.size(); ++j)
    for (std::size_t k = j + 1; k < c.y.size(); ++k)
      if (circle_distance(c.y[j], c.y[k]) <= c.delta) throw std::domain_error("coincident points in configuration");
}

Configuration random_configuration(std::size_t N, bool with_y, double delta, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  Configuration c;
  c.delta = delta;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    c.x.assign(N, 0.0);
    c.y.assign(with_y ? N : 0, 0.0);
    for (auto& v : c.x) v = angle(rng);
    for (auto& v : c.y) v = angle(rng);
    try {
      require_separated(c);
      return c;
    } catch (const std::domain_error&) {
    }
  }
  throw std::runtime_error("could not sample a separated configuration");
}

cplx psi_power(double r, double lambda) {
  const double s = std::sin(r / 2);
  const double mag = std::pow(std::abs(s), lambda);
  if (s > 0) return mag;
  return std::polar(mag, kPi * lambda);
}

double pair_potential(double r) {
  const double s = std::sin(r / 2);
  return 1.0 / (4 * s * s);
}

namespace {
cplx psi0_raw(std::span<const double> x, double lambda) {
  cplx acc = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j)
    for (std::size_t k = j + 1; k < x.size(); ++k) acc *= psi_power(x[k] - x[j], lambda);
  return acc;
}
}  // namespace

cplx eval_psi0(const Configuration& c, double lambda) {
  require_separated(c);
  return psi0_raw(c.x, lambda);
}

cplx eval_kernel(std::span<const double> x, std::span<const double> y, double lambda) {
  cplx acc = 1.0;
  const std::size_t N = x.size();
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t k = j + 1; k < N; ++k) {
      acc *= psi_power(x[k] - x[j], lambda);
      acc *= psi_power(y[j] - y[k], lambda);
    }
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t k = 0; k < N; ++k) acc *= psi_power(x[j] - y[k], -lambda);
  return acc;
}

VerificationReport check_fact1(std::size_t N, double lambda, const FdOptions& opt) {
  if (!(lambda > 0)) throw std::invalid_argument("check_fact1 requires lambda > 0");
  std::mt19937_64 rng(opt.seed);
  const double gamma = 2 * lambda * (lambda - 1);
  const double e0 = lambda * lambda * N * (double(N) * N - 1) / 12.0;
  auto f = [&](const std::vector<double>& x) { return psi0_raw(x, lambda); };
  double worst = 0;
  for (long s = 0; s < opt.samples; ++s) {
    Configuration c = random_configuration(N, false, opt.delta, rng);
    const cplx psi = f(c.x);
    cplx kinetic = 0;
    double scale = 0;
    for (std::size_t j = 0; j < N; ++j) {
      const cplx d2 = second_derivative(f, c.x, j, opt.h);
      kinetic -= d2;
      scale += std::abs(d2);
    }
    double v = 0;
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = j + 1; k < N; ++k) v += pair_potential(c.x[j] - c.x[k]);
    const cplx lhs = kinetic + gamma * v * psi;
    const cplx rhs = e0 * psi;
    scale += std::abs(gamma * v * psi) + std::abs(rhs);
    worst = std::max(worst, relative(lhs - rhs, scale));
  }
  return make_report("ground_state_fd N=" + std::to_string(N) + " lambda=" + lambda_tag(lambda),
                     opt.samples, worst, opt.tolerance, opt.seed);
}

VerificationReport check_fact2(std::size_t N, double lambda, const FdOptions& opt) {
  if (!(lambda > 0)) throw std::invalid_argument("check_fact2 requires lambda > 0");
  std::mt19937_64 rng(opt.seed);
  const double gamma = 2 * lambda * (lambda - 1);
  double worst = 0;
  for (long s = 0; s < opt.samples; ++s) {
    Configuration c = random_configuration(N, true, opt.delta, rng);
    // Joint coordinate vector (x, y) so one derivative helper serves both families.
    std::vector<double> xy(c.x);
    xy.insert(xy.end(), c.y.begin(), c.y.end());
    auto f = [&](const std::vector<double>& p) {
      return eval_kernel(std::span(p).first(N), std::span(p).subspan(N), lambda);
    };
    const cplx F = f(xy);
    cplx lhs = 0;
    double scale = 0;
    for (std::size_t i = 0; i < 2 * N; ++i) {
      const cplx d2 = second_derivative(f, xy, i, opt.h);
      lhs += i < N ? d2 : -d2;
      scale += std::abs(d2);
    }
    double vx = 0, vy = 0;
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = j + 1; k < N; ++k) {
        vx += pair_potential(c.x[k] - c.x[j]);
        vy += pair_potential(c.y[j] - c.y[k]);
      }
    const cplx rhs = gamma * (vx - vy) * F;
    scale += std::abs(gamma * vx * F) + std::abs(gamma * vy * F);
    worst = std::max(worst, relative(lhs - rhs, scale));
  }
  return make_report("kernel_identity_fd N=" + std::to_string(N) + " lambda=" + lambda_tag(lambda), opt.samples,
                     worst, opt.tolerance, opt.seed);
}

VerificationReport check_cot_identity(long samples, std::uint64_t seed, double tolerance) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  auto cot = [](double t) { return std::cos(t) / std::sin(t); };
  // Keep every argument away from the poles of cot (multiples of π).
  auto far_from_pole = [](double t) { return std::abs(std::sin(t)) > 0.1; };
  double worst = 0;
  long taken = 0;
  while (taken < samples) {
    const double x = angle(rng), y = angle(rng), z = -x - y;
    if (!far_from_pole(x) || !far_from_pole(y) || !far_from_pole(z)) continue;
    const double v = cot(x) * cot(y) + cot(x) * cot(z) + cot(y) * cot(z);
    const double scale = std::abs(cot(x) * cot(y)) + std::abs(cot(x) * cot(z)) + std::abs(cot(y) * cot(z)) + 1;
    worst = std::max(worst, std::abs(v - 1) / scale);
    ++taken;
  }
  return make_report("cot_product_identity", samples, worst, tolerance, seed);
}

VerificationReport check_log_derivative(long samples, std::uint64_t seed, double tolerance) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  double worst = 0;
  long taken = 0;
  while (taken < samples) {
    const double r = angle(rng);
    if (std::abs(std::sin(r / 2)) < 0.1) continue;
    constexpr double h = 1e-30;
    const double dpsi = std::imag(std::sin(cplx(r, h) / 2.0)) / h;
    const double phi = dpsi / std::sin(r / 2);
    const double expected = 0.5 * std::cos(r / 2) / std::sin(r / 2);
    worst = std::max(worst, std::abs(phi - expected) / std::max(1.0, std::abs(expected)));
    ++taken;
  }
  return make_report("log_derivative_psi", samples, worst, tolerance, seed);
}

double geom_tail_bound(double eps, int K) {
  const double q = std::exp(-eps);
  return 2 * std::exp(-(K + 1) * eps) * (K + 2) / ((1 - q) * (1 - q));
}

VerificationReport check_geom_expansion(double eps, double y, int K, double tolerance) {
  if (!(eps > 0)) throw std::invalid_argument("check_geom_expansion requires eps > 0");
  const cplx s = std::sin(cplx(y, eps) / 2.0);
  const cplx lhs = 1.0 / (4.0 * s * s);
  cplx sum = 0;
  double magnitude = std::abs(lhs);
  for (int nu = 1; nu <= K; ++nu) {
    const cplx term = double(nu) * std::exp(cplx(-nu * eps, nu * y));
    sum += term;
    magnitude += std::abs(term);
  }
  const double dev = std::abs(lhs + sum);
  // Once the tail bound drops below double rounding, the rounding floor takes over.
  const double floor = 64 * std::numeric_limits<double>::epsilon() * magnitude;
  VerificationReport r;
  r.identity = "geometric_expansion eps=" + lambda_tag(eps) + " y=" + lambda_tag(y) + " K=" + std::to_string(K);
  r.samples = 1;
  r.max_rel_residual = dev;
  r.tolerance = std::min(std::max(geom_tail_bound(eps, K), floor), tolerance);
  r.pass = dev <= r.tolerance;
  return r;
}

VerificationReport check_eigenfunction(const SymPoly& phi, double energy, const BigRational& lambda0,
                                       const FdOptions& opt) {
  const double lambda = lambda0.get_d();
  if (!(lambda > 0)) throw std::invalid_argument("check_eigenfunction requires lambda > 0");
  const std::size_t N = phi.size();
  const NumericSymPoly poly(phi, lambda0);
  const double gamma = 2 * lambda * (lambda - 1);
  std::mt19937_64 rng(opt.seed);
  auto f = [&](const std::vector<double>& x) { return poly(x) * psi0_raw(x, lambda); };
  double worst = 0;
  for (long s = 0; s < opt.samples; ++s) {
    Configuration c = random_configuration(N, false, opt.delta, rng);
    const cplx val = f(c.x);
    cplx lhs = 0;
    double scale = 0;
    for (std::size_t j = 0; j < N; ++j) {
      const cplx d2 = second_derivative(f, c.x, j, opt.h);
      lhs -= d2;
      scale += std::abs(d2);
    }
    double v = 0;
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = j + 1; k < N; ++k) v += pair_potential(c.x[j] - c.x[k]);
    lhs += gamma * v * val;
    const cplx rhs = energy * val;
    scale += std::abs(gamma * v * val) + std::abs(rhs);
    worst = std::max(worst, relative(lhs - rhs, scale));
  }
  return make_report("eigenfunction_fd", opt.samples, worst, opt.tolerance, opt.seed);
}

}  // namespace cms
