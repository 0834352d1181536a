#include "qtd/qcore.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qtd {

namespace {

void require_square(const ComplexMatrix& m, Eigen::Index dim, const char* what) {
  if (m.rows() != dim || m.cols() != dim) {
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(dim) + "x" + std::to_string(dim) +
                                " matrix, got " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
  }
}

}  // namespace

double max_hermitian_deviation(const ComplexMatrix& m) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

// ---------------------------------------------------------------- states

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != kPairDim) {
    throw std::invalid_argument("PureState: expected 9 amplitudes, got " +
                                std::to_string(amplitudes_.size()));
  }
  if (!amplitudes_.allFinite()) {
    throw std::invalid_argument("PureState: non-finite amplitude");
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > tol::kNorm) {
    throw std::invalid_argument("PureState: <psi|psi> = " + std::to_string(norm2));
  }
}

PureState PureState::normalized(ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("PureState: cannot normalize zero or non-finite vector");
  }
  amplitudes /= norm;
  return PureState(std::move(amplitudes));
}

ComplexMatrix PureState::projector() const {
  return amplitudes_ * amplitudes_.adjoint();
}

Complex PureState::inner(const PureState& other) const {
  return amplitudes_.dot(other.amplitudes_);  // conjugates the left argument
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  require_square(matrix_, kPairDim, "DensityMatrix");
  if (!all_finite(matrix_)) {
    throw std::invalid_argument("DensityMatrix: non-finite entry");
  }
  const double herm = max_hermitian_deviation(matrix_);
  if (herm > tol::kHermitian) {
    throw std::invalid_argument("DensityMatrix: not Hermitian (deviation " +
                                std::to_string(herm) + ")");
  }
  const double trace = matrix_.trace().real();
  if (std::abs(trace - 1.0) > tol::kTrace) {
    throw std::invalid_argument("DensityMatrix: trace " + std::to_string(trace));
  }
  const double lowest = hermitian_eigenvalues(matrix_).front();
  if (lowest < -tol::kPsd) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                std::to_string(lowest));
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.projector());
}

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix(ComplexMatrix::Identity(kPairDim, kPairDim) / double(kPairDim));
}

// ---------------------------------------------------------------- operations

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, kQutritDim, "tensor_product (left)");
  require_square(b, kQutritDim, "tensor_product (right)");
  ComplexMatrix out(kPairDim, kPairDim);
  for (int i = 0; i < kQutritDim; ++i) {
    for (int j = 0; j < kQutritDim; ++j) {
      out.block(kQutritDim * i, kQutritDim * j, kQutritDim, kQutritDim) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_transpose_b(const ComplexMatrix& m) {
  require_square(m, kPairDim, "partial_transpose_b");
  ComplexMatrix out(kPairDim, kPairDim);
  // Each 3x3 block (fixed A indices) is transposed in place.
  for (int a = 0; a < kQutritDim; ++a) {
    for (int ap = 0; ap < kQutritDim; ++ap) {
      out.block(kQutritDim * a, kQutritDim * ap, kQutritDim, kQutritDim) =
          m.block(kQutritDim * a, kQutritDim * ap, kQutritDim, kQutritDim).transpose();
    }
  }
  return out;
}

ComplexMatrix partial_transpose_b(const DensityMatrix& rho) {
  return partial_transpose_b(rho.matrix());
}

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument("hermitian_eigensystem: matrix must be square");
  }
  if (!all_finite(m)) {
    throw std::invalid_argument("hermitian_eigensystem: non-finite entry");
  }
  const double herm = max_hermitian_deviation(m);
  if (herm > tol::kEigenInputHermitian) {
    throw std::invalid_argument("hermitian_eigensystem: input not Hermitian (deviation " +
                                std::to_string(herm) + ")");
  }
  // Symmetrize so round-off in the lower triangle cannot leak in.
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigensystem: eigensolver did not converge");
  }
  HermitianEigensystem out;
  out.values.assign(solver.eigenvalues().data(),
                    solver.eigenvalues().data() + solver.eigenvalues().size());
  out.vectors = solver.eigenvectors();
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  return hermitian_eigensystem(m).values;
}

double trace_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

ComplexMatrix realign(const ComplexMatrix& m) {
  require_square(m, kPairDim, "realign");
  ComplexMatrix out(kPairDim, kPairDim);
  for (int a = 0; a < kQutritDim; ++a)
    for (int b = 0; b < kQutritDim; ++b)
      for (int ap = 0; ap < kQutritDim; ++ap)
        for (int bp = 0; bp < kQutritDim; ++bp)
          out(pair_index(a, ap), pair_index(b, bp)) = m(pair_index(a, b), pair_index(ap, bp));
  return out;
}

ComplexMatrix realign(const DensityMatrix& rho) { return realign(rho.matrix()); }

double expectation(const ComplexMatrix& op, const DensityMatrix& rho) {
  require_square(op, kPairDim, "expectation");
  const Complex value = (op * rho.matrix()).trace();
  if (std::abs(value.imag()) > tol::kExpectationImag) {
    throw std::invalid_argument("expectation: imaginary part " +
                                std::to_string(value.imag()) +
                                " (operator not Hermitian?)");
  }
  return value.real();
}

ComplexMatrix weyl_operator(WeylLabel label) {
  ComplexMatrix w = ComplexMatrix::Zero(kQutritDim, kQutritDim);
  for (int k = 0; k < kQutritDim; ++k) {
    const int phase_index = (k * label.n) % kQutritDim;
    // Exact unit phases keep W_(0,0) == I bit-for-bit.
    const Complex phase =
        phase_index == 0 ? Complex(1.0, 0.0)
                         : std::polar(1.0, 2.0 * std::numbers::pi * phase_index / 3.0);
    w(k, (k + label.m) % kQutritDim) = phase;
  }
  return w;
}

PureState max_entangled_state(WeylLabel label) {
  const ComplexMatrix lift =
      tensor_product(weyl_operator(label), ComplexMatrix::Identity(kQutritDim, kQutritDim));
  return PureState::normalized(lift * psi00().amplitudes());
}

const PureState& psi00() {
  static const PureState state = [] {
    ComplexVector v = ComplexVector::Zero(kPairDim);
    for (int k = 0; k < kQutritDim; ++k) v(pair_index(k, k)) = 1.0;
    return PureState::normalized(v);
  }();
  return state;
}

const PureState& dfs_state() {
  static const PureState state = [] {
    ComplexVector v = ComplexVector::Zero(kPairDim);
    v(pair_index(0, 2)) = 1.0;
    v(pair_index(1, 0)) = 1.0;
    v(pair_index(2, 1)) = 1.0;
    return PureState::normalized(v);
  }();
  return state;
}

PureState product_basis_state(int a, int b) {
  if (a < 0 || a >= kQutritDim || b < 0 || b >= kQutritDim) {
    throw std::invalid_argument("product_basis_state: level out of range");
  }
  ComplexVector v = ComplexVector::Zero(kPairDim);
  v(pair_index(a, b)) = 1.0;
  return PureState(v);
}

bool equal_up_to_phase(const PureState& psi, const PureState& phi, double tolerance) {
  return std::abs(std::abs(psi.inner(phi)) - 1.0) <= tolerance;
}

}  // namespace qtd
