#pragma once

#include <complex>
#include <vector>

#include "ncmi/dual.hpp"

namespace ncmi {

/// Kernel execution policy. Both paths run the identical per-element
/// arithmetic in the identical order, so results are bit-for-bit equal;
/// the serial path is the reference the parallel one is tested against.
enum class Exec { serial, openmp };

/// Dense row-major complex matrix.
class MatrixC {
public:
    MatrixC() = default;
    MatrixC(int rows, int cols)
        : rows_(rows), cols_(cols),
          d_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static MatrixC identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return d_.empty(); }

    cplx& operator()(int i, int j) { return d_[idx(i, j)]; }
    const cplx& operator()(int i, int j) const { return d_[idx(i, j)]; }
    cplx* row(int i) { return d_.data() + idx(i, 0); }
    const cplx* row(int i) const { return d_.data() + idx(i, 0); }

    void set_zero();

    MatrixC& operator+=(const MatrixC& o);
    friend MatrixC operator+(MatrixC a, const MatrixC& b) { return a += b; }

    friend bool operator==(const MatrixC&, const MatrixC&) = default;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> d_;
};

/// out = a * b. out must not alias a or b.
void matmul_into(MatrixC& out, const MatrixC& a, const MatrixC& b, Exec exec);

/// Restricted product: fills out rows [row_begin, row_end) accumulating only
/// over the contraction range [k_begin, k_end); other rows of out are left
/// untouched. Lets callers exploit known zero blocks.
void matmul_rows_into(MatrixC& out, const MatrixC& a, const MatrixC& b,
                      int row_begin, int row_end, int k_begin, int k_end,
                      Exec exec);

MatrixC matmul(const MatrixC& a, const MatrixC& b, Exec exec = Exec::openmp);

MatrixC adjoint(const MatrixC& a);
cplx trace(const MatrixC& a);

/// max_ij |a(i,j) - conj(a(j,i))|.
double hermitian_defect(const MatrixC& a);

}  // namespace ncmi
