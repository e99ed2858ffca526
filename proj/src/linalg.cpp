#include "ncmi/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncmi {

MatrixC MatrixC::identity(int n) {
    MatrixC m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

void MatrixC::set_zero() { std::fill(d_.begin(), d_.end(), cplx(0.0)); }

MatrixC& MatrixC::operator+=(const MatrixC& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("MatrixC: shape mismatch in addition");
    for (std::size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
    return *this;
}

namespace {

// Accumulates out_row += a_ik * b_row over a contiguous row, on the raw
// (re, im) pairs so the loop vectorizes.
inline void axpy_row(double ar, double ai, const cplx* b_row, cplx* out_row, int w) {
    const double* b = reinterpret_cast<const double*>(b_row);
    double* o = reinterpret_cast<double*>(out_row);
    for (int j = 0; j < w; ++j) {
        const double br = b[2 * j], bi = b[2 * j + 1];
        o[2 * j] += ar * br - ai * bi;
        o[2 * j + 1] += ar * bi + ai * br;
    }
}

void kernel_rows(MatrixC& out, const MatrixC& a, const MatrixC& b, int row_begin,
                 int row_end, int k_begin, int k_end, bool parallel) {
    const int w = b.cols();
#ifdef NCMI_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (int i = row_begin; i < row_end; ++i) {
        cplx* out_row = out.row(i);
        std::fill(out_row, out_row + w, cplx(0.0));
        const cplx* a_row = a.row(i);
        for (int k = k_begin; k < k_end; ++k)
            axpy_row(a_row[k].real(), a_row[k].imag(), b.row(k), out_row, w);
    }
#ifndef NCMI_HAVE_OPENMP
    (void)parallel;
#endif
}

}  // namespace

void matmul_rows_into(MatrixC& out, const MatrixC& a, const MatrixC& b,
                      int row_begin, int row_end, int k_begin, int k_end,
                      Exec exec) {
    if (a.cols() != b.rows() || out.rows() != a.rows() || out.cols() != b.cols())
        throw std::invalid_argument("matmul: dimension mismatch");
    if (&out == &a || &out == &b)
        throw std::invalid_argument("matmul: output may not alias an input");
    if (row_begin < 0 || row_end > a.rows() || k_begin < 0 || k_end > a.cols())
        throw std::invalid_argument("matmul: range out of bounds");
    kernel_rows(out, a, b, row_begin, row_end, k_begin, k_end, exec == Exec::openmp);
}

void matmul_into(MatrixC& out, const MatrixC& a, const MatrixC& b, Exec exec) {
    matmul_rows_into(out, a, b, 0, a.rows(), 0, a.cols(), exec);
}

MatrixC matmul(const MatrixC& a, const MatrixC& b, Exec exec) {
    MatrixC out(a.rows(), b.cols());
    matmul_into(out, a, b, exec);
    return out;
}

MatrixC adjoint(const MatrixC& a) {
    MatrixC r(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
    return r;
}

cplx trace(const MatrixC& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("trace: matrix not square");
    cplx t = 0.0;
    for (int i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

double hermitian_defect(const MatrixC& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("hermitian_defect: matrix not square");
    double d = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            d = std::max(d, std::abs(a(i, j) - std::conj(a(j, i))));
    return d;
}

}  // namespace ncmi
