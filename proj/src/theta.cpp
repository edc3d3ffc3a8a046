#include "siegelchar/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <map>
#include <numbers>

#include "siegelchar/character.hpp"
#include "siegelchar/error.hpp"

namespace siegelchar {
namespace {

using RealMatrix = Eigen::MatrixXd;

void require_positive(double tol, const char* name) {
  if (!(tol > 0.0))
    throw Error(ErrorKind::NonPositiveTolerance, std::string(name) + " must be positive");
}

void require_degree(const SymplecticMatrix& m, const SiegelPoint& tau) {
  if (m.degree() != tau.degree())
    throw Error(ErrorKind::DegreeMismatch, "matrix and point have different degrees");
}

RealMatrix to_real(const IntMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  return out;
}

double smallest_eigenvalue(const RealMatrix& y) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(y, Eigen::EigenvaluesOnly);
  if (solver.info() == Eigen::Success) return solver.eigenvalues().minCoeff();
  // Gershgorin lower bound
  double bound = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < y.rows(); ++i)
    bound = std::min(bound, y(i, i) - (y.row(i).cwiseAbs().sum() - std::abs(y(i, i))));
  return bound;
}

// Lattice sum over v in r/2 + Z^g inside the ellipsoid v^t Y v <= bound,
// enumerated coordinate by coordinate from the last one (Fincke-Pohst).
class LatticeSum {
 public:
  LatticeSum(const SiegelPoint& tau, const Characteristic& m, double bound)
      : g_(tau.degree()),
        x_(tau.tau().real()),
        y_(tau.tau().imag()),
        bound_(bound),
        v_(static_cast<Eigen::Index>(g_)),
        u_(g_, 0) {
    upper_ = Eigen::LLT<RealMatrix>(y_).matrixU();
    for (std::size_t i = 0; i < g_; ++i) {
      shift_.push_back(residue(m.prime()[i], 2) ? 0.5 : 0.0);
      flip_.push_back(static_cast<int>(residue(m.double_prime()[i], 2)));
    }
    Integer quarter = 0;
    for (std::size_t i = 0; i < g_; ++i)
      if (shift_[i] != 0.0) quarter += m.double_prime()[i];
    // exp(pi i r.m''/2) with r = m' mod 2
    static constexpr Complex kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    prefactor_ = kPowersOfI[residue(quarter, 4)];
  }

  Complex run() {
    sum_ = Complex(0.0, 0.0);
    visit(static_cast<Eigen::Index>(g_) - 1, 0.0);
    return prefactor_ * sum_;
  }

 private:
  void visit(Eigen::Index level, double used) {
    if (level < 0) {
      accumulate();
      return;
    }
    const auto k = static_cast<std::size_t>(level);
    const double diag = upper_(level, level);
    double center = 0.0;
    for (Eigen::Index j = level + 1; j < static_cast<Eigen::Index>(g_); ++j)
      center -= upper_(level, j) * v_(j);
    center /= diag;
    const double room = bound_ - used;
    if (room < 0.0) return;
    const double width = std::sqrt(room) / diag;
    const long lo = static_cast<long>(std::ceil(center - width - shift_[k]));
    const long hi = static_cast<long>(std::floor(center + width - shift_[k]));
    for (long u = lo; u <= hi; ++u) {
      u_[k] = u;
      v_(level) = static_cast<double>(u) + shift_[k];
      const double t = diag * (v_(level) - center);
      visit(level - 1, used + t * t);
    }
  }

  void accumulate() {
    const double re = v_.dot(x_ * v_);
    const double im = v_.dot(y_ * v_);
    const double magnitude = std::exp(-std::numbers::pi * im);
    const double angle = std::numbers::pi * re;
    long parity = 0;
    for (std::size_t i = 0; i < g_; ++i) parity += flip_[i] * u_[i];
    const double sign = (parity & 1L) ? -1.0 : 1.0;
    sum_ += sign * magnitude * Complex(std::cos(angle), std::sin(angle));
  }

  std::size_t g_;
  RealMatrix x_;
  RealMatrix y_;
  RealMatrix upper_;
  double bound_;
  Eigen::VectorXd v_;
  std::vector<long> u_;
  std::vector<double> shift_;
  std::vector<int> flip_;
  Complex prefactor_{1.0, 0.0};
  Complex sum_{0.0, 0.0};
};

ComplexMatrix cast_complex(const RealMatrix& m) { return m.cast<Complex>(); }

ComplexMatrix factor(const SymplecticMatrix& m, const SiegelPoint& tau) {
  require_degree(m, tau);
  ComplexMatrix y = cast_complex(to_real(m.c())) * tau.tau() + cast_complex(to_real(m.d()));
  Eigen::JacobiSVD<ComplexMatrix> svd(y);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  if (!(smallest > 0.0) || sv(0) / smallest > kMaxConditionNumber)
    throw Error(ErrorKind::SingularFactor, "c tau + d is numerically singular");
  return y;
}

// Fills the summary fields from the per-characteristic quotients.
void summarize(VerificationReport& report) {
  const auto& s = report.ratios;
  if (s.size() < 2)
    throw Error(ErrorKind::TooFewUsable, "fewer than two characteristics have |theta| above " +
                                             std::to_string(kUsableThetaFloor));
  Complex mean(0.0, 0.0);
  for (const auto& x : s) mean += x;
  mean /= static_cast<double>(s.size());
  double deviation = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) deviation = std::max(deviation, std::abs(s[i] - s[j]));
  report.estimated_unit = mean;
  report.max_deviation = deviation;
  report.modulus_error = std::abs(std::abs(mean) - 1.0);
  report.power_error = std::abs(std::pow(mean, static_cast<int>(report.unit_order)) - 1.0);
  const double tol = report.tolerance;
  report.passed = deviation <= tol && report.modulus_error <= tol &&
                  report.power_error <= report.unit_order * tol;
}

}  // namespace

SiegelPoint SiegelPoint::make(ComplexMatrix tau) {
  if (tau.rows() == 0 || tau.rows() != tau.cols())
    throw Error(ErrorKind::NotUpperHalfSpace, "tau must be a non-empty square matrix");
  if (!tau.allFinite()) throw Error(ErrorKind::NotUpperHalfSpace, "tau has non-finite entries");
  for (Eigen::Index i = 0; i < tau.rows(); ++i)
    for (Eigen::Index j = i + 1; j < tau.cols(); ++j)
      if (std::abs(tau(i, j) - tau(j, i)) > kSymmetryTol)
        throw Error(ErrorKind::NotUpperHalfSpace, "tau is not symmetric");
  const RealMatrix y = tau.imag();
  const double lambda = smallest_eigenvalue(0.5 * (y + y.transpose()));
  if (!(lambda > 0.0))
    throw Error(ErrorKind::NotUpperHalfSpace, "Im(tau) is not positive definite");
  return SiegelPoint(std::move(tau), lambda);
}

SiegelPoint SiegelPoint::imaginary_identity(std::size_t g) {
  const auto n = static_cast<Eigen::Index>(g);
  return make(Complex(0.0, 1.0) * ComplexMatrix::Identity(n, n));
}

double truncation_radius(const SiegelPoint& tau, double tail_tol) {
  require_positive(tail_tol, "tail_tol");
  const double g = static_cast<double>(tau.degree());
  const double lambda = tau.min_imag_eigenvalue();
  const double count = std::pow(3.0, g) * std::max(1.0, std::pow(lambda, -g / 2.0));
  const double log_ratio = std::max(0.0, std::log(count / tail_tol));
  return std::ceil(std::sqrt(log_ratio / (std::numbers::pi * lambda))) + 2.0;
}

Complex theta_constant(const Characteristic& m, const SiegelPoint& tau, double tail_tol) {
  return theta_constant_truncated(m, tau, truncation_radius(tau, tail_tol));
}

Complex theta_constant_truncated(const Characteristic& m, const SiegelPoint& tau, double radius) {
  if (m.degree() != tau.degree())
    throw Error(ErrorKind::DegreeMismatch, "characteristic and point have different degrees");
  const double bound = tau.min_imag_eigenvalue() * radius * radius;
  return LatticeSum(tau, m, bound).run();
}

SiegelPoint mobius(const SymplecticMatrix& m, const SiegelPoint& tau) {
  const ComplexMatrix y = factor(m, tau);
  const ComplexMatrix x = cast_complex(to_real(m.a())) * tau.tau() + cast_complex(to_real(m.b()));
  // x y^{-1} = (y^{-t} x^t)^t
  ComplexMatrix image = y.transpose().partialPivLu().solve(x.transpose()).transpose();
  ComplexMatrix symmetric = 0.5 * (image + image.transpose());
  return SiegelPoint::make(std::move(symmetric));
}

Complex det_factor(const SymplecticMatrix& m, const SiegelPoint& tau) {
  return factor(m, tau).partialPivLu().determinant();
}

Complex det_sqrt_factor(const SymplecticMatrix& m, const SiegelPoint& tau) {
  const Complex det = det_factor(m, tau);
  // std::sqrt maps a negative real with -0 imaginary part to -i|.|; keep +i.
  if (det.imag() == 0.0 && det.real() < 0.0) return {0.0, std::sqrt(-det.real())};
  return std::sqrt(det);
}

VerificationReport verify_character(const SymplecticMatrix& m, const SiegelPoint& tau,
                                    double tol, double tail_tol) {
  require_positive(tol, "tol");
  require_positive(tail_tol, "tail_tol");
  if (!is_level2(m)) throw Error(ErrorKind::NotLevel2, "matrix not ≡ I mod 2");
  require_degree(m, tau);
  const SiegelPoint image = mobius(m, tau);
  const Complex root = det_sqrt_factor(m, tau);

  VerificationReport report;
  report.tolerance = tol;
  for (const auto& ch : enumerate_even_mod2(m.degree())) {
    const Complex before = theta_constant(ch, tau, tail_tol);
    if (std::abs(before) <= kUsableThetaFloor) continue;
    const Complex after = theta_constant(ch, image, tail_tol);
    const Complex raw = after / (root * before);
    report.m_list.push_back(ch);
    report.raw_ratios.push_back(raw);
    report.ratios.push_back(raw / chi(ch, m).value());
  }
  summarize(report);
  return report;
}

VerificationReport verify_transformation_general(const SymplecticMatrix& m,
                                                 std::span<const Characteristic> m_set,
                                                 const SiegelPoint& tau, double tol,
                                                 double tail_tol) {
  require_positive(tol, "tol");
  require_positive(tail_tol, "tail_tol");
  require_degree(m, tau);
  const SiegelPoint image = mobius(m, tau);
  const Complex root = det_sqrt_factor(m, tau);

  VerificationReport report;
  report.tolerance = tol;
  for (const auto& ch : m_set) {
    const Complex before = theta_constant(ch, tau, tail_tol);
    if (std::abs(before) <= kUsableThetaFloor) continue;
    const Complex after = theta_constant(act(m, ch), image, tail_tol);
    const Complex raw = after / (root * before);
    report.m_list.push_back(ch);
    report.raw_ratios.push_back(raw);
    report.ratios.push_back(raw / phi_full(ch, m).exp().value());
  }
  summarize(report);
  return report;
}

VerificationReport verify_igusa_product(
    const SymplecticMatrix& m, std::span<const std::pair<Characteristic, Characteristic>> pairs,
    const SiegelPoint& tau, double tol, double tail_tol) {
  require_positive(tol, "tol");
  require_positive(tail_tol, "tail_tol");
  if (!is_level2(m)) throw Error(ErrorKind::NotLevel2, "matrix not ≡ I mod 2");
  require_degree(m, tau);
  const SiegelPoint image = mobius(m, tau);
  const Complex det = det_factor(m, tau);

  // theta values at tau and M tau, keyed by the flat characteristic
  std::map<std::vector<std::string>, std::pair<Complex, Complex>> cache;
  auto thetas = [&](const Characteristic& ch) {
    std::vector<std::string> key;
    for (const auto& x : ch.flat()) key.push_back(x.get_str());
    auto it = cache.find(key);
    if (it == cache.end()) {
      const Complex before = theta_constant(ch, tau, tail_tol);
      const Complex after = std::abs(before) > kUsableThetaFloor
                                ? theta_constant(ch, image, tail_tol)
                                : Complex(0.0, 0.0);
      it = cache.emplace(std::move(key), std::make_pair(before, after)).first;
    }
    return it->second;
  };

  VerificationReport report;
  report.tolerance = tol;
  report.unit_order = 4;
  for (const auto& [first, second] : pairs) {
    const auto [m_before, m_after] = thetas(first);
    const auto [n_before, n_after] = thetas(second);
    if (std::abs(m_before) <= kUsableThetaFloor || std::abs(n_before) <= kUsableThetaFloor)
      continue;
    const Complex raw = (m_after * n_after) / (det * m_before * n_before);
    report.m_list.push_back(first);
    report.n_list.push_back(second);
    report.raw_ratios.push_back(raw);
    report.ratios.push_back(raw / igusa_product_character(first, second, m).value());
  }
  summarize(report);
  return report;
}

VerificationReport verify_igusa_product(const Characteristic& m, const Characteristic& n,
                                        const SymplecticMatrix& mat, const SiegelPoint& tau,
                                        double tol, double tail_tol) {
  if (!is_even(m) || !is_even(n))
    throw Error(ErrorKind::ParityMismatch, "theta products need even characteristics");
  std::vector<std::pair<Characteristic, Characteristic>> pairs{{m, n}};
  const auto evens = enumerate_even_mod2(mat.degree());
  for (std::size_t i = 0; i < evens.size(); ++i)
    for (std::size_t j = i; j < evens.size(); ++j) pairs.emplace_back(evens[i], evens[j]);
  return verify_igusa_product(mat, pairs, tau, tol, tail_tol);
}

SiegelPoint random_siegel_point(std::size_t g, Engine& engine) {
  if (g == 0) throw Error(ErrorKind::BadShape, "degree must be positive");
  auto uniform = [&engine](double lo, double hi) {
    const double unit = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  };
  const auto n = static_cast<Eigen::Index>(g);
  RealMatrix re(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) re(i, j) = re(j, i) = uniform(-0.5, 0.5);
  RealMatrix b(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) b(i, j) = uniform(-1.0, 1.0);
  RealMatrix im = 0.6 * RealMatrix::Identity(n, n) + 0.3 * b * b.transpose();
  im = 0.5 * (im + im.transpose());
  ComplexMatrix tau = re.cast<Complex>() + Complex(0.0, 1.0) * im.cast<Complex>();
  return SiegelPoint::make(std::move(tau));
}

SiegelPoint random_siegel_point(std::size_t g, std::uint64_t seed) {
  Engine engine(seed);
  return random_siegel_point(g, engine);
}

}  // namespace siegelchar
