#pragma once

#include <array>
#include <complex>
#include <utility>
#include <variant>
#include <vector>

#include "ramacert/error.hpp"

// The rank-one Iwahori-Hecke algebra with unequal parameters (q^lambda,
// q^lambda*), in the Bernstein-Lusztig presentation
//
//   T^2 = (q^l - 1) T + q^l,
//   theta T - T theta^{-1} = (q^l - 1) theta + (q^{(l+l*)/2} - q^{(l-l*)/2}),
//
// together with its principal series X(nu), the four one-dimensional
// modules St/ds/sph/nt, the tempered/unitary classification, and the graded
// degeneration H_mu used to settle unitarity. For quasisplit SU(3) over a
// p-adic field with residue cardinality q, the parameters are lambda = 3,
// lambda* = 1, so (q1, q2) = (q^3, q) and the tree is (q^3+1, q+1)-biregular.

namespace ramacert::hecke {

using Complex = std::complex<double>;

// ------------------------------------------------------------- small 2x2

struct Mat2 {
  Complex a[2][2]{};

  static Mat2 identity();
  static Mat2 diag(Complex x, Complex y);
  Mat2 operator*(const Mat2& o) const;
  Mat2 operator+(const Mat2& o) const;
  Mat2 operator-(const Mat2& o) const;
  Mat2 scaled(Complex f) const;
  Mat2 inverse() const;  // throws ThetaSingular on det == 0
  Complex det() const;
  Complex trace() const;
  double max_abs() const;
  std::array<Complex, 2> eigenvalues() const;  // sorted by modulus, ascending
};

// --------------------------------------------------------------- parameters

struct HeckeParams {
  double q = 0.0;            // residue cardinality, > 1
  double lambda = 0.0;       // lambda >= lambda_star >= 0
  double lambda_star = 0.0;

  double log_q() const;
  double q1() const;  // q^lambda
  double q2() const;  // q^lambda_star
  double qpow(double e) const;
  // pi / log q: the imaginary period of the parameter space is twice this.
  double boundary_im() const;
};

// Validating constructor for user-supplied parameters (lambda >= lambda* > 0,
// q > 1); throws InvalidQ / InvalidArgument.
HeckeParams make_params(double q, double lambda, double lambda_star);

// SU(3) parameter map: lambda = 3, lambda* = 1, q1 = q^3, q2 = q.
HeckeParams params_from_su3(double q);

// Hecke parameters matching a (q1+1, q2+1)-biregular graph, used by the
// certification pipeline. Prefers base q = q2 (so lambda* = 1); for q2 = 1
// it falls back to base q1 with lambda* = 0, and for cycles (q1 = q2 = 1)
// to base e. Degenerate exponents are fine for every formula below.
HeckeParams params_for_bigraph(int q1, int q2);

// ---------------------------------------------------- spectral parameter nu

// X(nu) and X(-nu) are isomorphic and nu lives modulo 2 pi i / log q, so a
// module corresponds to a unique canonical representative with Re nu >= 0,
// Im nu * log q in (-pi, pi], and Im nu * log q in [0, pi] when Re nu = 0.
struct SpectralParameter {
  Complex nu{};
};

SpectralParameter canonicalize(Complex nu, const HeckeParams& p);

// Distance between parameters on the cylinder C / (2 pi i / log q).
double parameter_distance(Complex a, Complex b, const HeckeParams& p);

// ------------------------------------------------------------------ modules

enum class OneDimLabel { St, Ds, Sph, Nt };
const char* to_string(OneDimLabel label);

struct OneDim {
  OneDimLabel label{};
  double t_scalar = 0.0;      // action of T
  double theta_scalar = 0.0;  // action of theta (the single A-weight)
};

struct PrincipalSeries {
  SpectralParameter nu;
  bool reducible = false;
};

struct ModuleDescriptor {
  std::variant<OneDim, PrincipalSeries> kind;
  HeckeParams params;
};

// T = diag(q^l, -1) and the theta action on X(nu) in the basis
// {(T+1) x 1_nu, (T - q^l) x 1_nu}; spec(theta) = {q^nu, q^-nu}.
std::pair<Mat2, Mat2> principal_series_matrices(Complex nu, const HeckeParams& p);

// X(nu) fails to be irreducible exactly at nu = +-(l+l*)/2 and
// nu = +-(l-l*)/2 + pi i / log q.
bool is_reducible(const SpectralParameter& nu, const HeckeParams& p,
                  double tol = 1e-12);

// St = (T=-1, theta=q^{-(l+l*)/2}),  ds = (T=-1, theta=-q^{(l*-l)/2}),
// sph = (T=q^l, theta=q^{(l+l*)/2}), nt = (T=q^l, theta=-q^{(l-l*)/2}).
std::array<ModuleDescriptor, 4> one_dimensionals(const HeckeParams& p);

ModuleDescriptor principal_series_module(Complex nu, const HeckeParams& p);

// det(1 - phi(T1 T2) u) with T1 T2 = sqrt(q1 q2) theta; coefficients lowest
// degree first. One-dimensionals give 1-u, 1+q2 u, 1-q1q2 u, 1+q1 u for
// St, ds, sph, nt; X(nu) gives 1 - sqrt(q1q2)(q^nu + q^-nu) u + q1q2 u^2.
std::vector<Complex> char_poly_module(const ModuleDescriptor& m);

// Casselman criterion on the A-weights: tempered iff every weight has
// modulus <= 1, discrete series iff strict.
bool is_tempered(const ModuleDescriptor& m, double tol = 1e-12);
bool is_discrete_series(const ModuleDescriptor& m, double tol = 1e-12);

// Unitary dual of the principal series parameters: nu real with
// |nu| <= (l+l*)/2, or Re nu = 0, or Im nu = pi/log q with |Re nu| <= (l-l*)/2.
bool is_unitary(const SpectralParameter& nu, const HeckeParams& p,
                double tol = 1e-12);

// Value of the central element theta + theta^{-1} on X(nu): q^nu + q^-nu.
Complex central_character(Complex nu, const HeckeParams& p);

// Solves q^nu + q^-nu = (lambda_j^2 - q1 - q2)/sqrt(q1 q2) for the canonical
// parameter. lambda_1 lands on (l+l*)/2; eigenvalue 0 lands on
// (l-l*)/2 + pi i/log q; |trace| <= 2 lands on Re nu = 0.
SpectralParameter eigenvalue_to_parameter(double lambda_j, const HeckeParams& p);

// Reconstruction lambda_j^2 = q1 + q2 + sqrt(q1 q2)(q^nu + q^-nu).
double parameter_to_eigenvalue_sq(const SpectralParameter& nu,
                                  const HeckeParams& p);

// ------------------------------------- graded Hecke algebra H_mu (s, eps)

enum class XiPoint { Zero, PiOverLogQ };

struct GradedParams {
  double mu = 0.0;
  XiPoint origin = XiPoint::Zero;
};

// mu = (l+l*)/2 at xi = 0 and mu = (l-l*)/2 at xi = pi i / log q.
GradedParams graded_parameter(XiPoint xi, const HeckeParams& p);
// Same, validating an arbitrary xi in {0, pi i/log q}; throws UnsupportedXi.
GradedParams graded_parameter_at(Complex xi, const HeckeParams& p);

// All graded matrices are templated on the scalar so the relations and the
// intertwining identity can be verified in exact rational arithmetic.
template <typename S>
struct GMat2 {
  S a[2][2]{};
};

// Basis {1 x 1_nu, s x 1_nu}: s = [[0,1],[1,0]], eps = [[nu,2mu],[0,-nu]];
// relations s^2 = 1 and eps s + s eps = 2 mu hold on the nose.
template <typename S>
GMat2<S> graded_s_matrix() {
  GMat2<S> m;
  m.a[0][0] = S(0);
  m.a[0][1] = S(1);
  m.a[1][0] = S(1);
  m.a[1][1] = S(0);
  return m;
}

template <typename S>
GMat2<S> graded_eps_matrix(const S& nu, const S& mu) {
  GMat2<S> m;
  m.a[0][0] = nu;
  m.a[0][1] = S(2) * mu;
  m.a[1][0] = S(0);
  m.a[1][1] = -nu;
  return m;
}

// Generators rewritten in the basis {(1+s) x 1_nu, (1-s) x 1_nu}, where the
// intertwiner is diagonal: s = diag(1,-1), eps = [[mu, nu-mu],[mu+nu, -mu]].
template <typename S>
GMat2<S> graded_s_pm_basis() {
  GMat2<S> m;
  m.a[0][0] = S(1);
  m.a[0][1] = S(0);
  m.a[1][0] = S(0);
  m.a[1][1] = -S(1);
  return m;
}

template <typename S>
GMat2<S> graded_eps_pm_basis(const S& nu, const S& mu) {
  GMat2<S> m;
  m.a[0][0] = mu;
  m.a[0][1] = nu - mu;
  m.a[1][0] = mu + nu;
  m.a[1][1] = -mu;
  return m;
}

// Normalized intertwiner A(nu): X(nu) -> X(-nu), diag(1, (mu-nu)/(mu+nu)) in
// the {(1+s) x 1, (1-s) x 1} basis; A phi_nu(x) = phi_{-nu}(x) A for
// x in {s, eps}. Pole at nu = -mu.
template <typename S>
GMat2<S> graded_intertwiner(const S& nu, const S& mu) {
  if (nu == -mu)
    fail(ErrorCode::PoleAtMinusMu, "intertwiner A(nu) has a pole at nu = -mu");
  GMat2<S> m;
  m.a[0][0] = S(1);
  m.a[0][1] = S(0);
  m.a[1][0] = S(0);
  m.a[1][1] = (mu - nu) / (mu + nu);
  return m;
}

// Positive semidefiniteness of the (unnormalized) intertwiner
// diag(nu + mu, mu - nu): holds exactly for -mu <= nu <= mu.
bool graded_intertwiner_psd(double nu, double mu);

}  // namespace ramacert::hecke
