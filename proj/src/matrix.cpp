#include "qrook/matrix.hpp"

namespace qrook {

Matrix<Rational> specialize(const Matrix<RatFunc>& m, const Rational& q0) {
    Matrix<Rational> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) out(i, j) = specialize(m(i, j), q0);
    return out;
}

Matrix<RatFunc> lift(const Matrix<Rational>& m) {
    Matrix<RatFunc> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0) out(i, j) = RatFunc(m(i, j));
    return out;
}

}  // namespace qrook
