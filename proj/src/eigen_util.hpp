#pragma once

#include <Eigen/Dense>

#include "monodesc/matrix.hpp"

namespace monodesc {

inline Eigen::MatrixXcd to_eigen(const CMat& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

inline CMat from_eigen(const Eigen::MatrixXcd& m) {
    CMat out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

inline CMat cmat_inverse(const CMat& m) {
    Eigen::MatrixXcd e = to_eigen(m);
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(e);
    if (!lu.isInvertible()) throw SingularGauge("singular matrix");
    return from_eigen(lu.inverse());
}

}  // namespace monodesc
