#ifndef PEBBLETREE_RATIONAL_HPP
#define PEBBLETREE_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace pebbletree {

// Exact scalars.  All geometry in this project is exact: sign decisions are
// the content of the certificates, so no floating point is used anywhere.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline bool isZero(const RatVec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) != 0) return false;
    return true;
}

inline bool isZero(const RatMat& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) return false;
    return true;
}

/** Canonical text form of a rational: reduced fraction, "-a/b" or "n". */
std::string ratToString(const Rational& r);

}  // namespace pebbletree

#endif  // PEBBLETREE_RATIONAL_HPP
