#include "ramacert/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ramacert::hecke {

namespace {
constexpr double kPi = std::numbers::pi;
}

// ------------------------------------------------------------- small 2x2

Mat2 Mat2::identity() { return diag(1.0, 1.0); }

Mat2 Mat2::diag(Complex x, Complex y) {
  Mat2 m;
  m.a[0][0] = x;
  m.a[1][1] = y;
  return m;
}

Mat2 Mat2::operator*(const Mat2& o) const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.a[i][j] = a[i][0] * o.a[0][j] + a[i][1] * o.a[1][j];
  return r;
}

Mat2 Mat2::operator+(const Mat2& o) const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.a[i][j] = a[i][j] + o.a[i][j];
  return r;
}

Mat2 Mat2::operator-(const Mat2& o) const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.a[i][j] = a[i][j] - o.a[i][j];
  return r;
}

Mat2 Mat2::scaled(Complex f) const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.a[i][j] = a[i][j] * f;
  return r;
}

Complex Mat2::det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

Complex Mat2::trace() const { return a[0][0] + a[1][1]; }

Mat2 Mat2::inverse() const {
  const Complex d = det();
  if (std::abs(d) < 1e-300)
    fail(ErrorCode::ThetaSingular, "2x2 matrix is singular");
  Mat2 r;
  r.a[0][0] = a[1][1] / d;
  r.a[0][1] = -a[0][1] / d;
  r.a[1][0] = -a[1][0] / d;
  r.a[1][1] = a[0][0] / d;
  return r;
}

double Mat2::max_abs() const {
  double m = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m = std::max(m, std::abs(a[i][j]));
  return m;
}

std::array<Complex, 2> Mat2::eigenvalues() const {
  const Complex t = trace();
  const Complex d = det();
  const Complex disc = std::sqrt(t * t - 4.0 * d);
  std::array<Complex, 2> eig{(t - disc) / 2.0, (t + disc) / 2.0};
  if (std::abs(eig[0]) > std::abs(eig[1])) std::swap(eig[0], eig[1]);
  return eig;
}

// --------------------------------------------------------------- parameters

double HeckeParams::log_q() const { return std::log(q); }
double HeckeParams::q1() const { return std::pow(q, lambda); }
double HeckeParams::q2() const { return std::pow(q, lambda_star); }
double HeckeParams::qpow(double e) const { return std::pow(q, e); }
double HeckeParams::boundary_im() const { return kPi / log_q(); }

HeckeParams make_params(double q, double lambda, double lambda_star) {
  if (!(q > 1.0)) fail(ErrorCode::InvalidQ, "residue cardinality q must be > 1");
  if (!(lambda >= lambda_star) || !(lambda_star > 0.0))
    fail(ErrorCode::InvalidArgument, "parameters must satisfy lambda >= lambda* > 0");
  return HeckeParams{q, lambda, lambda_star};
}

HeckeParams params_from_su3(double q) {
  if (!(q > 1.0)) fail(ErrorCode::InvalidQ, "residue cardinality q must be > 1");
  return HeckeParams{q, 3.0, 1.0};
}

HeckeParams params_for_bigraph(int q1, int q2) {
  if (q2 > 1)
    return HeckeParams{static_cast<double>(q2),
                       std::log(static_cast<double>(q1)) / std::log(static_cast<double>(q2)),
                       1.0};
  if (q1 > 1) return HeckeParams{static_cast<double>(q1), 1.0, 0.0};
  return HeckeParams{std::numbers::e, 0.0, 0.0};  // cycles
}

// ---------------------------------------------------- spectral parameter nu

SpectralParameter canonicalize(Complex nu, const HeckeParams& p) {
  const double L = p.log_q();
  double x = nu.real();
  double y = std::remainder(nu.imag() * L, 2.0 * kPi);
  if (y <= -kPi) y += 2.0 * kPi;
  if (x < 0.0 || (x == 0.0 && y < 0.0)) {
    x = -x;
    y = -y;
    if (y <= -kPi) y += 2.0 * kPi;  // y was exactly pi
  }
  return SpectralParameter{Complex(x, y / L)};
}

double parameter_distance(Complex a, Complex b, const HeckeParams& p) {
  const double L = p.log_q();
  const double dx = a.real() - b.real();
  const double dy = std::remainder((a.imag() - b.imag()) * L, 2.0 * kPi) / L;
  return std::hypot(dx, dy);
}

// ------------------------------------------------------------------ modules

std::pair<Mat2, Mat2> principal_series_matrices(Complex nu, const HeckeParams& p) {
  const double a = p.q1();  // q^lambda
  const double c = p.qpow(0.5 * (p.lambda + p.lambda_star)) -
                   p.qpow(0.5 * (p.lambda - p.lambda_star));
  const Complex s = std::exp(nu * p.log_q());   // q^nu
  const Complex S = std::exp(-nu * p.log_q());  // q^-nu
  Mat2 tmat = Mat2::diag(a, -1.0);
  Mat2 theta;
  theta.a[0][0] = a * S + a * s + c;
  theta.a[0][1] = a * S - s + c;
  theta.a[1][0] = S - a * s - c;
  theta.a[1][1] = S + s - c;
  theta = theta.scaled(1.0 / (a + 1.0));
  return {tmat, theta};
}

bool is_reducible(const SpectralParameter& nu, const HeckeParams& p, double tol) {
  const Complex sph_point(0.5 * (p.lambda + p.lambda_star), 0.0);
  const Complex nt_point(0.5 * (p.lambda - p.lambda_star), p.boundary_im());
  return parameter_distance(nu.nu, sph_point, p) <= tol ||
         parameter_distance(nu.nu, nt_point, p) <= tol;
}

std::array<ModuleDescriptor, 4> one_dimensionals(const HeckeParams& p) {
  const double half_sum = 0.5 * (p.lambda + p.lambda_star);
  const double half_diff = 0.5 * (p.lambda - p.lambda_star);
  const double ql = p.q1();
  return {
      ModuleDescriptor{OneDim{OneDimLabel::St, -1.0, p.qpow(-half_sum)}, p},
      ModuleDescriptor{OneDim{OneDimLabel::Ds, -1.0, -p.qpow(-half_diff)}, p},
      ModuleDescriptor{OneDim{OneDimLabel::Sph, ql, p.qpow(half_sum)}, p},
      ModuleDescriptor{OneDim{OneDimLabel::Nt, ql, -p.qpow(half_diff)}, p},
  };
}

const char* to_string(OneDimLabel label) {
  switch (label) {
    case OneDimLabel::St: return "St";
    case OneDimLabel::Ds: return "ds";
    case OneDimLabel::Sph: return "sph";
    case OneDimLabel::Nt: return "nt";
  }
  return "?";
}

ModuleDescriptor principal_series_module(Complex nu, const HeckeParams& p) {
  SpectralParameter canon = canonicalize(nu, p);
  return ModuleDescriptor{PrincipalSeries{canon, is_reducible(canon, p)}, p};
}

std::vector<Complex> char_poly_module(const ModuleDescriptor& m) {
  const double root_q1q2 = std::sqrt(m.params.q1() * m.params.q2());
  if (const auto* od = std::get_if<OneDim>(&m.kind)) {
    return {Complex(1.0), Complex(-root_q1q2 * od->theta_scalar)};
  }
  const auto& ps = std::get<PrincipalSeries>(m.kind);
  const Complex tr = central_character(ps.nu.nu, m.params);
  return {Complex(1.0), -root_q1q2 * tr, Complex(m.params.q1() * m.params.q2())};
}

bool is_tempered(const ModuleDescriptor& m, double tol) {
  if (const auto* od = std::get_if<OneDim>(&m.kind))
    return std::abs(od->theta_scalar) <= 1.0 + tol;
  // Weights q^{+-nu}: both on the unit circle iff Re nu = 0.
  return std::abs(std::get<PrincipalSeries>(m.kind).nu.nu.real()) <= tol;
}

bool is_discrete_series(const ModuleDescriptor& m, double tol) {
  if (const auto* od = std::get_if<OneDim>(&m.kind))
    return std::abs(od->theta_scalar) < 1.0 - tol;
  return false;  // weights multiply to 1, never both strictly inside
}

bool is_unitary(const SpectralParameter& nu, const HeckeParams& p, double tol) {
  const double x = nu.nu.real();
  const double y = nu.nu.imag();
  if (std::abs(y) <= tol && std::abs(x) <= 0.5 * (p.lambda + p.lambda_star) + tol)
    return true;
  if (std::abs(x) <= tol) return true;
  if (std::abs(y - p.boundary_im()) <= tol &&
      std::abs(x) <= 0.5 * (p.lambda - p.lambda_star) + tol)
    return true;
  return false;
}

Complex central_character(Complex nu, const HeckeParams& p) {
  const double L = p.log_q();
  return std::exp(nu * L) + std::exp(-nu * L);
}

SpectralParameter eigenvalue_to_parameter(double lambda_j, const HeckeParams& p) {
  const double q1 = p.q1(), q2 = p.q2();
  const double root = std::sqrt(q1 * q2);
  const double t = root > 0 ? (lambda_j * lambda_j - q1 - q2) / root
                            : lambda_j * lambda_j - q1 - q2;
  const double L = p.log_q();
  if (t >= 2.0) return SpectralParameter{Complex(std::acosh(t / 2.0) / L, 0.0)};
  if (t <= -2.0)
    return SpectralParameter{Complex(std::acosh(-t / 2.0) / L, p.boundary_im())};
  return SpectralParameter{Complex(0.0, std::acos(t / 2.0) / L)};
}

double parameter_to_eigenvalue_sq(const SpectralParameter& nu,
                                  const HeckeParams& p) {
  const double q1 = p.q1(), q2 = p.q2();
  return q1 + q2 + std::sqrt(q1 * q2) * central_character(nu.nu, p).real();
}

// ------------------------------------- graded Hecke algebra H_mu (s, eps)

GradedParams graded_parameter(XiPoint xi, const HeckeParams& p) {
  if (xi == XiPoint::Zero)
    return GradedParams{0.5 * (p.lambda + p.lambda_star), xi};
  return GradedParams{0.5 * (p.lambda - p.lambda_star), xi};
}

GradedParams graded_parameter_at(Complex xi, const HeckeParams& p) {
  const double tol = 1e-12;
  if (std::abs(xi) <= tol) return graded_parameter(XiPoint::Zero, p);
  if (std::abs(xi.real()) <= tol && std::abs(xi.imag() - p.boundary_im()) <= tol)
    return graded_parameter(XiPoint::PiOverLogQ, p);
  fail(ErrorCode::UnsupportedXi,
       "graded reduction implemented only at xi = 0 and xi = pi i / log q");
}

bool graded_intertwiner_psd(double nu, double mu) {
  return nu + mu >= 0.0 && mu - nu >= 0.0;
}

}  // namespace ramacert::hecke
