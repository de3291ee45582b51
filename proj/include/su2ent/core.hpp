#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace su2ent {

using Real = double;
using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;
using Vector3 = Eigen::Vector3d;

// Tolerances shared across modules. Values are part of the library contract,
// not tuning knobs.
namespace tol {
inline constexpr double hermiticity = 1e-12;       // max |M - M^dag| for certified input
inline constexpr double degeneracy_rel = 1e-8;     // eigenvalue clustering, relative to 1-norm
inline constexpr double ppt = 1e-10;               // absolute PPT threshold on min eigenvalue
inline constexpr double weight_clip = 1e-12;       // negative multiplet weights clipped to zero
inline constexpr double invariance = 1e-10;        // commutator residual for invariant states
inline constexpr double reconstruction = 1e-6;     // separability certificate trace distance
}  // namespace tol

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Incompatible or oversized matrix dimensions.
struct DimensionError : Error {
  using Error::Error;
};

// Invalid argument values (quantum numbers out of range, bad indices).
struct ArgumentError : Error {
  using Error::Error;
};

// A documented precondition was violated (non-Hermitian input, non-unit trace).
struct ContractViolation : Error {
  using Error::Error;
};

// Correlators outside the physical region of the invariant family.
struct InfeasibleError : Error {
  using Error::Error;
};

// Input expected to be SU(2)-invariant (or a partial transpose of one) is not.
struct NotInvariantError : Error {
  using Error::Error;
};

// Hilbert-space dimension exceeds the configured cap.
struct CapacityError : Error {
  using Error::Error;
};

// Ground-state pair already has a positive partial transpose.
struct NoThresholdError : Error {
  using Error::Error;
};

// Quadrature failed to reach the requested reconstruction accuracy.
struct ConvergenceError : Error {
  using Error::Error;
};

// Separability certificate requested for a state with negative partial transpose.
struct CertificateUnavailableError : Error {
  using Error::Error;
};

}  // namespace su2ent
