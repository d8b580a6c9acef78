#pragma once
#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "hopfdisc/polynomial.hpp"

namespace Eigen {
template <> struct NumTraits<hopfdisc::CycEl> {
	typedef hopfdisc::CycEl Real;
	typedef hopfdisc::CycEl NonInteger;
	typedef hopfdisc::CycEl Nested;
	typedef hopfdisc::CycEl Literal;
	enum {
		IsComplex = 0,
		IsInteger = 0,
		IsSigned = 1,
		RequireInitialization = 1,
		ReadCost = 8,
		AddCost = 40,
		MulCost = 80
	};
	static inline Real epsilon() { return Real(0); }
	static inline Real dummy_precision() { return Real(0); }
	static inline int digits10() { return 0; }
};
} // namespace Eigen

namespace hopfdisc {

using Mat = Eigen::Matrix<CycEl, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<CycEl, Eigen::Dynamic, 1>;

inline Mat zeros(long r, long c) { return Mat::Constant(r, c, CycEl(0)); }

template <typename D> bool exactly_zero(const Eigen::MatrixBase<D> &m)
{
	for (long j = 0; j < m.cols(); ++j)
		for (long i = 0; i < m.rows(); ++i)
			if (!m(i, j).is_zero())
				return false;
	return true;
}
inline Vec zero_vec(long n) { return Vec::Constant(n, CycEl(0)); }
Mat identity(long n);

struct Rref {
	Mat R;                     // reduced row echelon form
	std::vector<long> pivots;  // pivot column per nonzero row
	long rank = 0;
};

Rref rref(Mat A);
long rank(const Mat &A);

// columns form a basis of {x : Ax = 0}
Mat kernel(const Mat &A);

// exact determinant by Gaussian elimination with pivoting
CycEl det(Mat A);

// one solution of Ax = b, or nullopt if inconsistent
std::optional<Vec> solve(const Mat &A, const Vec &b);
// columnwise: solves AX = B
std::optional<Mat> solve_many(const Mat &A, const Mat &B);

Mat inverse(const Mat &A); // throws Error if singular

// Kronecker product, row-major pairing: (i1*r2+i2, j1*c2+j2)
Mat kron(const Mat &A, const Mat &B);

// basis of the column span (subset of columns reduced to independent set)
Mat column_space_basis(const Mat &A);

// true iff v lies in the span of the columns of basis
bool span_contains(const Mat &basis, const Vec &v);

// precomputed echelon form for repeated membership queries against one span
class SpanChecker {
  public:
	explicit SpanChecker(const Mat &columns);
	bool contains(const Vec &v) const;

  private:
	Mat rows_; // rref of the transposed column set
	std::vector<long> pivots_;
};

// monic minimal polynomial of a square matrix
Poly min_poly(const Mat &A);
// monic minimal polynomial of v under A (divides min_poly(A))
Poly min_poly_vector(const Mat &A, const Vec &v);

} // namespace hopfdisc
