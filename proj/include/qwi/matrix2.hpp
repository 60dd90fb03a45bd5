#ifndef QWI_MATRIX2_HPP
#define QWI_MATRIX2_HPP

#include <complex>

namespace qwi {

using cplx = std::complex<double>;

// Dense 2x2 complex matrix.  Everything in this library is 2x2, so a tiny
// value type beats pulling in a linear-algebra dependency.
struct Matrix2 {
    cplx a11{1.0}, a12{0.0};
    cplx a21{0.0}, a22{1.0};

    static Matrix2 identity() { return {}; }

    cplx det() const { return a11 * a22 - a12 * a21; }
    cplx trace() const { return a11 + a22; }

    Matrix2 operator*(const Matrix2& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }

    Matrix2 operator*(const cplx& s) const {
        return {a11 * s, a12 * s, a21 * s, a22 * s};
    }

    Matrix2 operator+(const Matrix2& o) const {
        return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
    }

    Matrix2 operator-(const Matrix2& o) const {
        return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
    }

    // Inverse via the adjugate; caller is responsible for det != 0.
    Matrix2 inverse() const {
        const cplx d = det();
        return {a22 / d, -a12 / d, -a21 / d, a11 / d};
    }
};

inline Matrix2 operator*(const cplx& s, const Matrix2& m) { return m * s; }

// max |entry| deviation, used by tests and det checks
double max_abs_diff(const Matrix2& x, const Matrix2& y);

// Matrix power by repeated squaring (exact arithmetic path for
// cross-checking the closed-form power of a unimodular matrix).
Matrix2 matrix_power(Matrix2 m, unsigned n);

} // namespace qwi

#endif
