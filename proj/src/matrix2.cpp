#include "qwi/matrix2.hpp"

#include <algorithm>
#include <cmath>

namespace qwi {

double max_abs_diff(const Matrix2& x, const Matrix2& y) {
    return std::max({std::abs(x.a11 - y.a11), std::abs(x.a12 - y.a12),
                     std::abs(x.a21 - y.a21), std::abs(x.a22 - y.a22)});
}

Matrix2 matrix_power(Matrix2 m, unsigned n) {
    Matrix2 acc = Matrix2::identity();
    while (n > 0) {
        if (n & 1u) acc = acc * m;
        m = m * m;
        n >>= 1u;
    }
    return acc;
}

} // namespace qwi
