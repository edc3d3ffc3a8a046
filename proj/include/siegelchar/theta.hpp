#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "siegelchar/characteristic.hpp"
#include "siegelchar/symplectic.hpp"

namespace siegelchar {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kDefaultTailTol = 1e-12;
inline constexpr double kDefaultTol = 1e-6;
/// Characteristics with |theta_m(tau)| at or below this are not divided by.
inline constexpr double kUsableThetaFloor = 1e-4;
inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kMaxConditionNumber = 1e12;

/// A point of the Siegel upper half-space: tau symmetric with Im(tau)
/// positive definite.
class SiegelPoint {
 public:
  /// Throws NotUpperHalfSpace if tau is not square, not symmetric within
  /// kSymmetryTol, or Im(tau) is not positive definite.
  static SiegelPoint make(ComplexMatrix tau);
  /// i * I_g
  static SiegelPoint imaginary_identity(std::size_t g);

  std::size_t degree() const noexcept { return static_cast<std::size_t>(tau_.rows()); }
  const ComplexMatrix& tau() const noexcept { return tau_; }
  /// Lower bound on the smallest eigenvalue of Im(tau).
  double min_imag_eigenvalue() const noexcept { return lambda_min_; }

 private:
  SiegelPoint(ComplexMatrix tau, double lambda_min)
      : tau_(std::move(tau)), lambda_min_(lambda_min) {}

  ComplexMatrix tau_;
  double lambda_min_;
};

/// Radius R (in the sup norm of p + m'/2) beyond which every omitted term is
/// below tail_tol / C, C = 3^g max(1, lambda_min^{-g/2}).
double truncation_radius(const SiegelPoint& tau, double tail_tol);

/// Theta constant by a truncated lattice sum over the points v = p + m'/2 with
/// v^t Im(tau) v <= lambda_min R^2, a subset of the sup-norm ball of radius R.
Complex theta_constant(const Characteristic& m, const SiegelPoint& tau,
                       double tail_tol = kDefaultTailTol);
Complex theta_constant_truncated(const Characteristic& m, const SiegelPoint& tau, double radius);

/// (a tau + b)(c tau + d)^{-1}, re-symmetrized. Throws SingularFactor when
/// c tau + d has condition number above kMaxConditionNumber.
SiegelPoint mobius(const SymplecticMatrix& m, const SiegelPoint& tau);

/// det(c tau + d).
Complex det_factor(const SymplecticMatrix& m, const SiegelPoint& tau);
/// Principal square root of det(c tau + d), argument in (-pi/2, pi/2].
Complex det_sqrt_factor(const SymplecticMatrix& m, const SiegelPoint& tau);

struct VerificationReport {
  std::vector<Characteristic> m_list;
  // second factor of each pair; product checks only
  std::vector<Characteristic> n_list;
  // quotients before dividing by the exact character or phase
  std::vector<Complex> raw_ratios;
  // the adjusted quotients s_m, all estimates of the same unit
  std::vector<Complex> ratios;
  Complex estimated_unit{0.0, 0.0};
  double max_deviation = 0.0;
  double tolerance = 0.0;
  // the unit is checked to be a root of unity of this order
  unsigned unit_order = 8;
  double modulus_error = 0.0;
  double power_error = 0.0;
  bool passed = false;
};

/// Checks theta_m(M tau) = a(M) chi_m(M) det(c tau + d)^{1/2} theta_m(tau):
/// the quotients theta_m(M tau) / (sqrt det * theta_m(tau) * chi_m(M)) must
/// agree across the even characteristics. a(M) is estimated, never predicted.
VerificationReport verify_character(const SymplecticMatrix& m, const SiegelPoint& tau,
                                    double tol = kDefaultTol,
                                    double tail_tol = kDefaultTailTol);

/// The same check for any M in Sp(g, Z), through theta_{M o m}(M tau) and the
/// full phase e(Phi_m(M)).
VerificationReport verify_transformation_general(const SymplecticMatrix& m,
                                                 std::span<const Characteristic> m_set,
                                                 const SiegelPoint& tau,
                                                 double tol = kDefaultTol,
                                                 double tail_tol = kDefaultTailTol);

/// psi = theta_m theta_n transforms with a(M)^2 chi_m chi_n det(c tau + d);
/// the quotient must agree over all the given pairs.
VerificationReport verify_igusa_product(
    const SymplecticMatrix& m, std::span<const std::pair<Characteristic, Characteristic>> pairs,
    const SiegelPoint& tau, double tol = kDefaultTol, double tail_tol = kDefaultTailTol);

/// Sweeps (m, n) together with every unordered pair of even characteristics
/// mod 2.
VerificationReport verify_igusa_product(const Characteristic& m, const Characteristic& n,
                                        const SymplecticMatrix& mat, const SiegelPoint& tau,
                                        double tol = kDefaultTol,
                                        double tail_tol = kDefaultTailTol);

/// Re(tau) uniform in [-1/2, 1/2], Im(tau) = 0.6 I + 0.3 B B^t with B uniform
/// in [-1, 1], all drawn from the engine's 53-bit uniforms.
SiegelPoint random_siegel_point(std::size_t g, Engine& engine);
SiegelPoint random_siegel_point(std::size_t g, std::uint64_t seed);

}  // namespace siegelchar
