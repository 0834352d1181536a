// qcore.hpp: dense linear algebra for a pair of qutrits (3 (x) 3 = 9 dims).
//
// Basis ordering is |ab> -> 3a + b, i.e. |00>,|01>,|02>,|10>,...,|22>.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace qtd {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr int kQutritDim = 3;
inline constexpr int kPairDim = 9;

namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kPsd = 1e-10;
inline constexpr double kNorm = 1e-12;
inline constexpr double kEigenInputHermitian = 1e-10;
inline constexpr double kExpectationImag = 1e-11;
inline constexpr double kGlobalPhase = 1e-10;
}  // namespace tol

inline constexpr int pair_index(int a, int b) { return kQutritDim * a + b; }

/// Index pair (m, n) in Z3 x Z3; both components are reduced modulo 3.
struct WeylLabel {
  int m = 0;
  int n = 0;

  constexpr WeylLabel() = default;
  constexpr WeylLabel(int m_in, int n_in)
      : m(((m_in % 3) + 3) % 3), n(((n_in % 3) + 3) % 3) {}

  friend constexpr bool operator==(WeylLabel, WeylLabel) = default;
};

/// Normalized 9-component state vector.
class PureState {
 public:
  /// Throws std::invalid_argument unless the vector has 9 finite entries
  /// and unit norm within tol::kNorm.
  explicit PureState(ComplexVector amplitudes);

  /// Normalizes first; throws on a zero or non-finite vector.
  static PureState normalized(ComplexVector amplitudes);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  Complex operator[](int i) const { return amplitudes_(i); }

  ComplexMatrix projector() const;
  Complex inner(const PureState& other) const;

 private:
  ComplexVector amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite 9x9 operator.
class DensityMatrix {
 public:
  /// Throws std::invalid_argument when any invariant fails.
  explicit DensityMatrix(ComplexMatrix matrix);

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed();

  const ComplexMatrix& matrix() const { return matrix_; }
  Complex operator()(int i, int j) const { return matrix_(i, j); }

 private:
  ComplexMatrix matrix_;
};

struct HermitianEigensystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

double max_hermitian_deviation(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);

/// Kronecker product of two 3x3 matrices (row-major |ab> -> 3a+b).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Transpose of the subsystem-B indices of a 9x9 matrix.
ComplexMatrix partial_transpose_b(const ComplexMatrix& m);
ComplexMatrix partial_transpose_b(const DensityMatrix& rho);

/// Ascending eigenvalues. Throws std::invalid_argument if the input deviates
/// from Hermitian by more than tol::kEigenInputHermitian.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& m);

/// R_{(a a'),(b b')} = rho_{(a b),(a' b')}.
ComplexMatrix realign(const DensityMatrix& rho);
ComplexMatrix realign(const ComplexMatrix& m);

/// Re Tr(op rho) for Hermitian op; throws if dims differ or the imaginary
/// part exceeds tol::kExpectationImag.
double expectation(const ComplexMatrix& op, const DensityMatrix& rho);

/// W_(m,n) = sum_k e^{2 pi i k n / 3} |k><k+m mod 3|.
ComplexMatrix weyl_operator(WeylLabel label);

/// (W_label (x) I) |Psi_00>.
PureState max_entangled_state(WeylLabel label);

/// (|00> + |11> + |22>) / sqrt(3).
const PureState& psi00();

/// (|02> + |10> + |21>) / sqrt(3), the maximally entangled state inside the
/// decoherence-free block. Pinned by amplitudes, not by a Weyl label.
const PureState& dfs_state();

/// Computational basis product state |a b>.
PureState product_basis_state(int a, int b);

/// |<psi|phi>| == 1 within tolerance.
bool equal_up_to_phase(const PureState& psi, const PureState& phi,
                       double tolerance = tol::kGlobalPhase);

}  // namespace qtd
