// Core value types shared across the library: spin length, measurement
// directions, density matrices and the error hierarchy.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace spintomo {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

namespace tol {
inline constexpr double hermitian = 1e-12;
inline constexpr double trace = 1e-12;
inline constexpr double psd_flag = 1e-10;          // physical DensityMatrix
inline constexpr double physical_state = 1e-8;     // measurement input gate
inline constexpr double eigenvalue_snap = 1e-6;    // spin-component spectra
inline constexpr double projector = 1e-10;
inline constexpr double direction_separation = 1e-9;
inline constexpr double svd_cutoff = 1e-12;        // relative to sigma_max
inline constexpr double condition_limit = 1e6;
}  // namespace tol

// ---------------------------------------------------------------------------
// Errors. The CLI maps `validation` to exit code 1 and `numerical` to 2.

enum class ErrorKind { validation, numerical };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string type, const std::string& what)
      : std::runtime_error(what), kind_(kind), type_(std::move(type)) {}
  ErrorKind kind() const noexcept { return kind_; }
  const std::string& type() const noexcept { return type_; }

 private:
  ErrorKind kind_;
  std::string type_;
};

#define SPINTOMO_DEFINE_ERROR(Name, Kind)                     \
  struct Name : Error {                                       \
    explicit Name(const std::string& what)                    \
        : Error(ErrorKind::Kind, #Name, what) {}              \
  }

SPINTOMO_DEFINE_ERROR(InvalidArgument, validation);
SPINTOMO_DEFINE_ERROR(DimensionMismatch, validation);
SPINTOMO_DEFINE_ERROR(OrderOutOfRange, validation);
SPINTOMO_DEFINE_ERROR(InsufficientDirections, validation);
SPINTOMO_DEFINE_ERROR(InsufficientSettings, validation);
SPINTOMO_DEFINE_ERROR(IncompleteRecord, validation);
SPINTOMO_DEFINE_ERROR(WrongDirections, validation);
SPINTOMO_DEFINE_ERROR(EigenvalueMismatch, numerical);
SPINTOMO_DEFINE_ERROR(IllConditioned, numerical);
SPINTOMO_DEFINE_ERROR(NonPhysicalState, numerical);
SPINTOMO_DEFINE_ERROR(StepTooLarge, numerical);

#undef SPINTOMO_DEFINE_ERROR

// ---------------------------------------------------------------------------
// Spin length l, stored as 2l so half-integer spins stay exact. All eigenvalue
// bookkeeping below uses 2m integers for the same reason.

class SpinLength {
 public:
  explicit SpinLength(int two_l) : two_l_(two_l) {
    if (two_l < 1)
      throw InvalidArgument("spin length requires 2l >= 1, got " +
                            std::to_string(two_l));
    if (two_l > 64)
      throw InvalidArgument("2l > 64 is outside the supported range");
  }

  int two_l() const noexcept { return two_l_; }
  int dimension() const noexcept { return two_l_ + 1; }
  double value() const noexcept { return 0.5 * two_l_; }

  // Basis index r (0-based, row order of all matrices here) holds m = l - r.
  int two_m_at(int index) const noexcept { return two_l_ - 2 * index; }
  double m_at(int index) const noexcept { return 0.5 * two_m_at(index); }

  friend bool operator==(SpinLength a, SpinLength b) noexcept {
    return a.two_l_ == b.two_l_;
  }
  friend bool operator!=(SpinLength a, SpinLength b) noexcept {
    return !(a == b);
  }

 private:
  int two_l_;
};

// ---------------------------------------------------------------------------
// Measurement direction on the sphere.

struct Direction {
  double theta = 0.0;  // polar angle from +z, radians
  double phi = 0.0;    // azimuth from +x, radians

  Eigen::Vector3d unit_vector() const {
    const double st = std::sin(theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
  }
};

// Angle between the two unit vectors, in [0, pi].
double angle_between(const Direction& a, const Direction& b);

// ---------------------------------------------------------------------------
// Hermitian helpers.

double hermiticity_defect(const Matrix& m);  // max |A - A^dagger| entry
bool is_hermitian(const Matrix& m, double eps = tol::hermitian);
void require_hermitian(const Matrix& m, double eps, const char* where);
Matrix symmetrized(const Matrix& m);         // (A + A^dagger) / 2
double min_eigenvalue(const Matrix& hermitian);

// ---------------------------------------------------------------------------
// Density matrix. `raw` marks linear-inversion output whose spectrum has not
// been repaired; physical states satisfy min eigenvalue >= -1e-10.

struct DensityMatrix {
  Matrix entries;
  bool raw = false;

  int dim() const noexcept { return static_cast<int>(entries.rows()); }
};

// Validates Hermiticity and unit trace; `make_density_matrix` additionally
// requires the spectrum to be non-negative within tolerance.
DensityMatrix make_density_matrix(const Matrix& entries);
DensityMatrix make_raw_density_matrix(const Matrix& entries);

// Maximally mixed state I/(2l+1).
DensityMatrix maximally_mixed(SpinLength l);

}  // namespace spintomo
