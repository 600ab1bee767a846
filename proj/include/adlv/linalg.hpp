#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adlv/rational.hpp"

namespace adlv {

using Q = Rational;
using IVec = std::vector<Int>;
using QVec = std::vector<Q>;
using IMat = std::vector<IVec>;  // row major
using QMat = std::vector<QVec>;

Int floor_q(const Q& q);
Int ceil_q(const Q& q);
std::string to_string(const Q& q);
std::string to_string(const IVec& v);
std::string to_string(const QVec& v);

QVec to_q(const IVec& v);
bool is_integral(const QVec& v);
IVec to_int(const QVec& v);  // throws if not integral

IMat identity(int n);
IMat transpose(const IMat& a);
IMat mul(const IMat& a, const IMat& b);
IVec mul(const IMat& a, const IVec& x);
QVec mul(const QMat& a, const QVec& x);
QMat to_q(const IMat& a);
IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec scale(const IVec& a, Int k);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const QVec& a, const Q& k);
Int dot(const IVec& a, const IVec& b);
Q dot(const QVec& a, const QVec& b);
Q dot(const IVec& a, const QVec& b);
bool is_zero(const IVec& v);
bool is_zero(const QVec& v);

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct Smith {
  IMat U, D, V;
  IVec diagonal() const;
};
Smith smith_normal_form(const IMat& a);

// R * A = H with R unimodular and H in row echelon (Hermite) form.
struct Hermite {
  IMat R, H;
  int rank = 0;
};
Hermite hermite_rows(const IMat& a);

IMat unimodular_inverse(const IMat& a);
QMat inverse(const QMat& a);

// Rows form a basis of the integer kernel {x : A x = 0}.
IMat integer_kernel(const IMat& a);
// Some integer solution of A x = b, if one exists.
std::optional<IVec> solve_integer(const IMat& a, const IVec& b);
// Some rational solution of A x = b, if one exists.
std::optional<QVec> solve_rational(const QMat& a, const QVec& b);
int rank(const QMat& a);
// Dimension of the fixed space of a square matrix acting on column vectors.
int fixed_dimension(const QMat& a);

}  // namespace adlv
