#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qnt {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Every operator in the toolkit is carried
/// by this type. Element access is always bounds-checked.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Row-wise literal, e.g. {{0, 1}, {1, 0}}. All rows must have equal length.
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c);
  const cplx& operator()(std::size_t r, std::size_t c) const;

  std::span<const cplx> data() const { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  cplx trace() const;
  /// Largest |entry|; 0 for an empty matrix.
  double max_abs() const;
  /// Top-left rows×cols sub-block.
  ComplexMatrix block(std::size_t rows, std::size_t cols) const;
  /// Column c as a vector.
  std::vector<cplx> column(std::size_t c) const;

  bool operator==(const ComplexMatrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, cplx s);
std::vector<cplx> operator*(const ComplexMatrix& a, std::span<const cplx> v);

/// max |a_ij − b_ij|. Shapes must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// max |a_ij − conj(a_ji)|.
double hermitian_defect(const ComplexMatrix& a);
/// Largest off-diagonal magnitude.
double max_off_diagonal(const ComplexMatrix& a);

enum class Bracket { commutator, anticommutator };

/// AB − BA or AB + BA. Throws std::invalid_argument unless both operands are
/// square with the same dimension.
ComplexMatrix matmul_commutator(const ComplexMatrix& a, const ComplexMatrix& b, Bracket sign);

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul_commutator(a, b, Bracket::commutator);
}
inline ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul_commutator(a, b, Bracket::anticommutator);
}

/// Kronecker product, shape (rA·rB)×(cA·cB).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// vector helpers
double norm(std::span<const cplx> v);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);  // ⟨a|b⟩

}  // namespace qnt
