#include "hopfdisc/discriminant.hpp"

#include <future>
#include <random>

#include "hopfdisc/errors.hpp"

namespace hopfdisc {

namespace {

// power sums p_i = tr(a^i), i = 1..n
std::vector<CycEl> trace_power_sums(const FinDimAlg &A, const Vec &a, long n)
{
	std::vector<CycEl> ps;
	Vec acc = A.unit;
	for (long i = 1; i <= n; ++i) {
		acc = mul(A, acc, a);
		ps.push_back(regular_trace(A, acc));
	}
	return ps;
}

Poly assemble_char_poly(const std::vector<CycEl> &e, long n)
{
	// p(t) = sum_k (-1)^k e_k t^{n-k}
	Poly p(n + 1, CycEl(0));
	for (long k = 0; k <= n; ++k)
		p[n - k] = (k % 2 == 0) ? e[k] : -e[k];
	return p;
}

} // namespace

Poly char_poly_newton(const FinDimAlg &A, const Vec &a)
{
	long n = A.dim;
	auto ps = trace_power_sums(A, a, n);
	std::vector<CycEl> e(n + 1, CycEl(0));
	e[0] = CycEl(1);
	for (long k = 1; k <= n; ++k) {
		CycEl acc(0);
		for (long i = 1; i <= k; ++i) {
			CycEl term = e[k - i] * ps[i - 1];
			acc += (i % 2 == 1) ? term : -term;
		}
		e[k] = acc * CycEl(Rat(1, k));
	}
	return assemble_char_poly(e, n);
}

Poly char_poly_det(const FinDimAlg &A, const Vec &a)
{
	long n = A.dim;
	auto ps = trace_power_sums(A, a, n);
	std::vector<CycEl> e(n + 1, CycEl(0));
	e[0] = CycEl(1);
	Rat fact = 1;
	for (long k = 1; k <= n; ++k) {
		// e_k = det(M_k) / k! with M_k(i,j) = p_{i-j+1} for j <= i and
		// M_k(i,i+1) = i+1
		Mat M = zeros(k, k);
		for (long i = 0; i < k; ++i) {
			for (long j = 0; j <= i; ++j)
				M(i, j) = ps[i - j];
			if (i + 1 < k)
				M(i, i + 1) = CycEl(i + 1);
		}
		fact *= k;
		e[k] = det(M) * CycEl(Rat(1) / fact);
	}
	return assemble_char_poly(e, n);
}

bool cayley_hamilton_check(const FinDimAlg &A, int samples, unsigned long seed)
{
	if (regular_trace(A, A.unit) != CycEl(A.dim))
		return false;
	std::mt19937_64 rng(seed);
	std::uniform_int_distribution<int> coeff(-3, 3);
	for (int s = 0; s < samples; ++s) {
		Vec a = zero_vec(A.dim);
		for (long i = 0; i < A.dim; ++i)
			a(i) = CycEl(coeff(rng));
		Poly p = char_poly_newton(A, a);
		// Horner evaluation of p at the element a
		Vec acc = zero_vec(A.dim);
		for (long i = pdeg(p); i >= 0; --i) {
			acc = mul(A, acc, a);
			acc += Vec(A.unit * p[i]);
		}
		if (!exactly_zero(acc))
			return false;
	}
	return true;
}

long gram_rank(const FinDimAlg &A) { return rank(gram_matrix(A)); }

bool dk_vanishes(const FinDimAlg &A, long k, int samples, unsigned long seed)
{
	if (k < 1)
		throw BadInput("discriminant level must be positive");
	// beyond the dimension every k x k trace matrix is singular
	if (k > A.dim)
		return true;
	Mat G = gram_matrix(A);
	long r = rank(G);
	bool vanishes = r < k;
	// cross-validation against determinants of k x k trace matrices
	std::mt19937_64 rng(seed);
	std::uniform_int_distribution<int> coeff(-2, 2);
	for (int s = 0; s < samples; ++s) {
		std::vector<Vec> tuple;
		for (long t = 0; t < k; ++t) {
			Vec a = zero_vec(A.dim);
			for (long i = 0; i < A.dim; ++i)
				a(i) = CycEl(coeff(rng));
			tuple.push_back(a);
		}
		Mat M = zeros(k, k);
		for (long i = 0; i < k; ++i)
			for (long j = 0; j < k; ++j)
				M(i, j) = regular_trace(A, mul(A, tuple[i], tuple[j]));
		if (vanishes && !det(M).is_zero())
			throw InvariantViolation("nonzero trace minor below the Gram rank");
	}
	if (!vanishes) {
		// congruence-diagonalize the form to produce an explicit k-tuple whose
		// trace matrix has nonzero determinant
		long d = A.dim;
		Mat X = identity(d);
		auto B = [&](long i, long j) {
			CycEl acc(0);
			for (long a = 0; a < d; ++a)
				for (long b = 0; b < d; ++b)
					if (!X(a, i).is_zero() && !X(b, j).is_zero())
						acc += X(a, i) * G(a, b) * X(b, j);
			return acc;
		};
		long found = 0;
		for (long i = 0; i < d && found < k; ++i) {
			long t = -1;
			for (long u = i; u < d && t < 0; ++u)
				if (!B(u, u).is_zero())
					t = u;
			if (t < 0) {
				for (long u = i; u < d && t < 0; ++u)
					for (long v = u + 1; v < d && t < 0; ++v)
						if (!B(u, v).is_zero()) {
							X.col(u) += X.col(v); // char 0: makes B(u,u) nonzero
							t = u;
						}
			}
			if (t < 0)
				break;
			X.col(t).swap(X.col(i));
			CycEl piv = B(i, i);
			for (long j = i + 1; j < d; ++j) {
				CycEl c = B(i, j);
				if (!c.is_zero())
					X.col(j) -= Vec(X.col(i) * (c * piv.inverse()));
			}
			++found;
		}
		if (found < k)
			throw InvariantViolation("vanishing trace form above the Gram rank");
		Mat M = zeros(k, k);
		for (long i = 0; i < k; ++i)
			for (long j = 0; j < k; ++j)
				M(i, j) = regular_trace(A, mul(A, Vec(X.col(i)), Vec(X.col(j))));
		if (det(M).is_zero())
			throw InvariantViolation("diagonalized trace minor vanished unexpectedly");
	}
	return vanishes;
}

long lowest_level(const HopfFamily &F)
{
	return sd(*specialize(F, identity_point(F))->alg) + 1;
}

std::vector<VarietyRow> scan_variety(const HopfFamily &F,
                                     const std::vector<CentralPoint> &pts,
                                     int jobs)
{
	std::vector<VarietyRow> rows(pts.size());
	auto work = [&](size_t begin, size_t step) {
		for (size_t i = begin; i < pts.size(); i += step)
			rows[i] = {pts[i], sd(*specialize(F, pts[i])->alg)};
	};
	if (jobs <= 1) {
		work(0, 1);
		return rows;
	}
	std::vector<std::future<void>> fs;
	for (int j = 0; j < jobs; ++j)
		fs.push_back(std::async(std::launch::async, work, (size_t)j, (size_t)jobs));
	for (auto &f : fs)
		f.get();
	return rows;
}

} // namespace hopfdisc
