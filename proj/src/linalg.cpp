#include "hopfdisc/linalg.hpp"

#include "hopfdisc/errors.hpp"

namespace hopfdisc {

Mat identity(long n)
{
	Mat I = zeros(n, n);
	for (long i = 0; i < n; ++i)
		I(i, i) = CycEl(1);
	return I;
}

Rref rref(Mat A)
{
	Rref out;
	long rows = A.rows(), cols = A.cols(), r = 0;
	for (long c = 0; c < cols && r < rows; ++c) {
		long piv = -1;
		for (long i = r; i < rows; ++i)
			if (!A(i, c).is_zero()) {
				piv = i;
				break;
			}
		if (piv < 0)
			continue;
		if (piv != r)
			A.row(piv).swap(A.row(r));
		CycEl inv = A(r, c).inverse();
		for (long j = c; j < cols; ++j)
			A(r, j) *= inv;
		for (long i = 0; i < rows; ++i) {
			if (i == r || A(i, c).is_zero())
				continue;
			CycEl f = A(i, c);
			for (long j = c; j < cols; ++j)
				A(i, j) -= f * A(r, j);
		}
		out.pivots.push_back(c);
		++r;
	}
	out.rank = r;
	out.R = std::move(A);
	return out;
}

long rank(const Mat &A) { return rref(A).rank; }

Mat kernel(const Mat &A)
{
	Rref rr = rref(A);
	long cols = A.cols();
	std::vector<bool> is_pivot(cols, false);
	for (long p : rr.pivots)
		is_pivot[p] = true;
	long nullity = cols - rr.rank;
	Mat K = zeros(cols, nullity);
	long k = 0;
	for (long c = 0; c < cols; ++c) {
		if (is_pivot[c])
			continue;
		K(c, k) = CycEl(1);
		for (long r = 0; r < rr.rank; ++r)
			K(rr.pivots[r], k) = -rr.R(r, c);
		++k;
	}
	return K;
}

CycEl det(Mat A)
{
	long n = A.rows();
	if (n != A.cols())
		throw Error("determinant of a non-square matrix");
	CycEl d(1);
	for (long c = 0; c < n; ++c) {
		long piv = -1;
		for (long i = c; i < n; ++i)
			if (!A(i, c).is_zero()) {
				piv = i;
				break;
			}
		if (piv < 0)
			return CycEl(0);
		if (piv != c) {
			A.row(piv).swap(A.row(c));
			d = -d;
		}
		d *= A(c, c);
		CycEl inv = A(c, c).inverse();
		for (long i = c + 1; i < n; ++i) {
			if (A(i, c).is_zero())
				continue;
			CycEl f = A(i, c) * inv;
			for (long j = c; j < n; ++j)
				A(i, j) -= f * A(c, j);
		}
	}
	return d;
}

std::optional<Mat> solve_many(const Mat &A, const Mat &B)
{
	long rows = A.rows(), cols = A.cols(), k = B.cols();
	Mat aug = zeros(rows, cols + k);
	aug.leftCols(cols) = A;
	aug.rightCols(k) = B;
	Rref rr = rref(std::move(aug));
	// inconsistent if any pivot lands in the augmented block
	for (long p : rr.pivots)
		if (p >= cols)
			return std::nullopt;
	Mat X = zeros(cols, k);
	for (long r = 0; r < rr.rank; ++r)
		for (long j = 0; j < k; ++j)
			X(rr.pivots[r], j) = rr.R(r, cols + j);
	return X;
}

std::optional<Vec> solve(const Mat &A, const Vec &b)
{
	auto X = solve_many(A, b);
	if (!X)
		return std::nullopt;
	return Vec(X->col(0));
}

Mat inverse(const Mat &A)
{
	long n = A.rows();
	if (n != A.cols())
		throw Error("inverse of a non-square matrix");
	auto X = solve_many(A, identity(n));
	if (!X || rank(A) != n)
		throw Error("matrix is singular");
	return *X;
}

Mat kron(const Mat &A, const Mat &B)
{
	long r1 = A.rows(), c1 = A.cols(), r2 = B.rows(), c2 = B.cols();
	Mat K = zeros(r1 * r2, c1 * c2);
	for (long i = 0; i < r1; ++i)
		for (long j = 0; j < c1; ++j) {
			if (A(i, j).is_zero())
				continue;
			for (long p = 0; p < r2; ++p)
				for (long q = 0; q < c2; ++q)
					if (!B(p, q).is_zero())
						K(i * r2 + p, j * c2 + q) = A(i, j) * B(p, q);
		}
	return K;
}

Mat column_space_basis(const Mat &A)
{
	Rref rr = rref(A);
	Mat B = zeros(A.rows(), rr.rank);
	for (long r = 0; r < rr.rank; ++r)
		B.col(r) = A.col(rr.pivots[r]);
	return B;
}

bool span_contains(const Mat &basis, const Vec &v)
{
	return solve(basis, v).has_value();
}

SpanChecker::SpanChecker(const Mat &columns)
{
	Rref rr = rref(Mat(columns.transpose()));
	rows_ = rr.R.topRows(rr.rank);
	pivots_ = rr.pivots;
}

bool SpanChecker::contains(const Vec &v) const
{
	Vec w = v;
	for (long i = 0; i < rows_.rows(); ++i) {
		const CycEl &c = w(pivots_[i]);
		if (c.is_zero())
			continue;
		CycEl f = c; // pivots are 1 after reduction
		for (long j = 0; j < w.size(); ++j)
			if (!rows_(i, j).is_zero())
				w(j) -= f * rows_(i, j);
	}
	return exactly_zero(w);
}

Poly min_poly(const Mat &A)
{
	long n = A.rows();
	if (n != A.cols())
		throw Error("minimal polynomial of a non-square matrix");
	// flatten successive powers and look for the first linear dependence
	Mat pw = identity(n);
	std::vector<Mat> powers{pw};
	for (long d = 1; d <= n; ++d) {
		pw = Mat(pw * A);
		powers.push_back(pw);
		Mat M = zeros(n * n, d + 1);
		for (long k = 0; k <= d; ++k)
			for (long i = 0; i < n; ++i)
				for (long j = 0; j < n; ++j)
					M(i * n + j, k) = powers[k](i, j);
		Mat K = kernel(M);
		if (K.cols() > 0) {
			Poly p(d + 1, CycEl(0));
			for (long k = 0; k <= d; ++k)
				p[k] = K(k, 0);
			return pmonic(p);
		}
	}
	throw InvariantViolation("no minimal polynomial of degree <= n");
}

Poly min_poly_vector(const Mat &A, const Vec &v)
{
	long n = A.rows();
	Vec cur = v;
	std::vector<Vec> seq{cur};
	for (long d = 1; d <= n + 1; ++d) {
		cur = Vec(A * cur);
		seq.push_back(cur);
		Mat M = zeros(n, d + 1);
		for (long k = 0; k <= d; ++k)
			M.col(k) = seq[k];
		Mat K = kernel(M);
		if (K.cols() > 0) {
			// kernel basis is ordered with free columns rightmost; take the
			// relation involving the highest power with nonzero top coefficient
			for (long c = K.cols() - 1; c >= 0; --c) {
				Poly p(d + 1, CycEl(0));
				for (long k = 0; k <= d; ++k)
					p[k] = K(k, c);
				if (pdeg(p) >= 1)
					return pmonic(p);
			}
		}
	}
	throw InvariantViolation("no annihilating polynomial of degree <= n");
}

} // namespace hopfdisc
