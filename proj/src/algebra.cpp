#include "hopfdisc/algebra.hpp"

#include <random>

#include "hopfdisc/errors.hpp"

namespace hopfdisc {

namespace {

Vec basis_vec(long dim, long i)
{
	Vec v = zero_vec(dim);
	v(i) = CycEl(1);
	return v;
}

// evaluates with a caller-chosen unit so corner algebras pAp (unit p) work
Vec eval_poly_at_element(const FinDimAlg &A, const Poly &p, const Vec &x,
                         const Vec &unit)
{
	Vec acc = zero_vec(A.dim);
	for (long i = pdeg(p); i >= 0; --i) {
		acc = mul(A, acc, x);
		acc += Vec(unit * p[i]);
	}
	return acc;
}

Vec eval_poly_at_element(const FinDimAlg &A, const Poly &p, const Vec &x)
{
	return eval_poly_at_element(A, p, x, A.unit);
}

} // namespace

AlgPtr make_algebra(long dim, int conductor, std::vector<std::string> labels,
                    std::vector<std::vector<SCTerm>> sc, Vec unit, bool validate)
{
	if (dim <= 0 || (long)labels.size() != dim || (long)sc.size() != dim * dim ||
	    unit.size() != dim)
		throw BadInput("inconsistent algebra data");
	auto A = std::make_shared<FinDimAlg>();
	A->dim = dim;
	A->conductor = conductor;
	A->labels = std::move(labels);
	A->unit = std::move(unit);
	A->sc = std::move(sc);
	for (const auto &terms : A->sc)
		for (const auto &t : terms)
			if (t.k < 0 || t.k >= dim)
				throw BadInput("structure constant index out of range");
	if (validate) {
		for (long i = 0; i < dim; ++i) {
			Vec bi = basis_vec(dim, i);
			if (mul(*A, A->unit, bi) != bi || mul(*A, bi, A->unit) != bi)
				throw BadInput("unit axiom fails on basis element " +
				               A->labels[i]);
		}
		// (b_i b_j) b_k vs b_i (b_j b_k), accumulated straight from the
		// sparse structure constants into a reused scratch difference
		Vec diff = zero_vec(dim);
		std::vector<long> touched;
		for (long i = 0; i < dim; ++i)
			for (long j = 0; j < dim; ++j) {
				const auto &tij = A->sc[i * dim + j];
				for (long k = 0; k < dim; ++k) {
					for (const auto &t : tij)
						for (const auto &u : A->sc[t.k * dim + k]) {
							diff(u.k) += t.c * u.c;
							touched.push_back(u.k);
						}
					for (const auto &u : A->sc[j * dim + k])
						for (const auto &t : A->sc[i * dim + u.k]) {
							diff(t.k) -= u.c * t.c;
							touched.push_back(t.k);
						}
					bool ok = true;
					for (long idx : touched)
						ok = ok && diff(idx).is_zero();
					if (!ok)
						throw BadInput("associativity fails at (" +
						               A->labels[i] + "," + A->labels[j] +
						               "," + A->labels[k] + ")");
					for (long idx : touched)
						diff(idx) = CycEl(0);
					touched.clear();
				}
			}
	}
	return A;
}

Vec mul(const FinDimAlg &A, const Vec &x, const Vec &y)
{
	Vec r = zero_vec(A.dim);
	for (long i = 0; i < A.dim; ++i) {
		if (x(i).is_zero())
			continue;
		for (long j = 0; j < A.dim; ++j) {
			if (y(j).is_zero())
				continue;
			CycEl f = x(i) * y(j);
			for (const auto &t : A.sc[i * A.dim + j])
				r(t.k) += f * t.c;
		}
	}
	return r;
}

Mat left_mult(const FinDimAlg &A, const Vec &x)
{
	Mat L = zeros(A.dim, A.dim);
	for (long i = 0; i < A.dim; ++i) {
		if (x(i).is_zero())
			continue;
		for (long j = 0; j < A.dim; ++j)
			for (const auto &t : A.sc[i * A.dim + j])
				L(t.k, j) += x(i) * t.c;
	}
	return L;
}

Mat right_mult(const FinDimAlg &A, const Vec &x)
{
	Mat R = zeros(A.dim, A.dim);
	for (long j = 0; j < A.dim; ++j) {
		if (x(j).is_zero())
			continue;
		for (long i = 0; i < A.dim; ++i)
			for (const auto &t : A.sc[i * A.dim + j])
				R(t.k, i) += x(j) * t.c;
	}
	return R;
}

Vec element_pow(const FinDimAlg &A, const Vec &x, long e)
{
	if (e < 0)
		throw Error("negative element power");
	Vec acc = A.unit;
	for (long i = 0; i < e; ++i)
		acc = mul(A, acc, x);
	return acc;
}

Vec trace_vector(const FinDimAlg &A)
{
	{
		std::lock_guard<std::mutex> lk(A.cache->mu);
		if (A.cache->tracev)
			return *A.cache->tracev;
	}
	Vec t = zero_vec(A.dim);
	for (long k = 0; k < A.dim; ++k) {
		// trace of left multiplication by b_k without forming the matrix
		CycEl tr(0);
		for (long j = 0; j < A.dim; ++j)
			for (const auto &term : A.sc[k * A.dim + j])
				if (term.k == j)
					tr += term.c;
		t(k) = tr;
	}
	std::lock_guard<std::mutex> lk(A.cache->mu);
	if (!A.cache->tracev)
		A.cache->tracev = t;
	return *A.cache->tracev;
}

CycEl regular_trace(const FinDimAlg &A, const Vec &x)
{
	Vec t = trace_vector(A);
	CycEl acc(0);
	for (long i = 0; i < A.dim; ++i)
		acc += t(i) * x(i);
	return acc;
}

Mat gram_matrix(const FinDimAlg &A)
{
	{
		std::lock_guard<std::mutex> lk(A.cache->mu);
		if (A.cache->gram)
			return *A.cache->gram;
	}
	Vec t = trace_vector(A);
	Mat G = zeros(A.dim, A.dim);
	for (long i = 0; i < A.dim; ++i)
		for (long j = 0; j < A.dim; ++j) {
			CycEl acc(0);
			for (const auto &term : A.sc[i * A.dim + j])
				acc += term.c * t(term.k);
			G(i, j) = acc;
		}
	std::lock_guard<std::mutex> lk(A.cache->mu);
	if (!A.cache->gram)
		A.cache->gram = G;
	return *A.cache->gram;
}

Mat radical_basis(const FinDimAlg &A)
{
	{
		std::lock_guard<std::mutex> lk(A.cache->mu);
		if (A.cache->radical)
			return *A.cache->radical;
	}
	Mat J = kernel(gram_matrix(A));
	// the trace-form kernel must be a nil two-sided ideal in characteristic 0
	SpanChecker Jspan(J);
	for (long c = 0; c < J.cols(); ++c)
		for (long i = 0; i < A.dim; ++i) {
			Vec l = mul(A, basis_vec(A.dim, i), Vec(J.col(c)));
			Vec r = mul(A, Vec(J.col(c)), basis_vec(A.dim, i));
			if ((!exactly_zero(l) && !Jspan.contains(l)) ||
			    (!exactly_zero(r) && !Jspan.contains(r)))
				throw InvariantViolation("trace-form kernel is not an ideal");
		}
	// nilpotency: powers of the ideal must terminate at zero
	Mat Pk = J;
	for (long step = 0; Pk.cols() > 0; ++step) {
		if (step > A.dim)
			throw InvariantViolation("radical candidate is not nilpotent");
		Mat nxt = zeros(A.dim, Pk.cols() * J.cols());
		for (long a = 0; a < Pk.cols(); ++a)
			for (long b = 0; b < J.cols(); ++b)
				nxt.col(a * J.cols() + b) = mul(A, Vec(Pk.col(a)), Vec(J.col(b)));
		Pk = column_space_basis(nxt);
	}
	std::lock_guard<std::mutex> lk(A.cache->mu);
	if (!A.cache->radical)
		A.cache->radical = J;
	return *A.cache->radical;
}

// in characteristic 0 the radical is exactly the trace-form kernel, so the
// square dimension is the Gram rank; this avoids building the radical ideal
long sd(const FinDimAlg &A)
{
	{
		std::lock_guard<std::mutex> lk(A.cache->mu);
		if (A.cache->radical)
			return A.dim - A.cache->radical->cols();
	}
	return rank(gram_matrix(A));
}

Quotient semisimple_quotient(const FinDimAlg &A)
{
	Mat J = radical_basis(A);
	long r = J.cols(), d = A.dim, q = d - r;
	Quotient out;
	if (r == 0) {
		out.alg = std::make_shared<FinDimAlg>(A);
		out.projection = identity(d);
		out.section = identity(d);
		return out;
	}
	// pick coordinate complement of the radical span
	Mat Jt = zeros(r, d);
	for (long c = 0; c < r; ++c)
		Jt.row(c) = J.col(c).transpose();
	Rref rr = rref(Jt);
	std::vector<bool> pivot(d, false);
	for (long p : rr.pivots)
		pivot[p] = true;
	std::vector<long> rep;
	for (long i = 0; i < d; ++i)
		if (!pivot[i])
			rep.push_back(i);
	Mat M = zeros(d, d); // [section columns | radical columns]
	for (long c = 0; c < q; ++c)
		M.col(c) = basis_vec(d, rep[c]);
	for (long c = 0; c < r; ++c)
		M.col(q + c) = J.col(c);
	Mat Mi = inverse(M);
	Mat proj = Mi.topRows(q); // q x d
	std::vector<std::vector<SCTerm>> sc(q * q);
	for (long i = 0; i < q; ++i)
		for (long j = 0; j < q; ++j) {
			Vec prod = mul(A, basis_vec(d, rep[i]), basis_vec(d, rep[j]));
			Vec pv = Vec(proj * prod);
			for (long k = 0; k < q; ++k)
				if (!pv(k).is_zero())
					sc[i * q + j].push_back({k, pv(k)});
		}
	std::vector<std::string> labels;
	for (long c = 0; c < q; ++c)
		labels.push_back(A.labels[rep[c]]);
	out.alg = make_algebra(q, A.conductor, std::move(labels), std::move(sc),
	                       Vec(proj * A.unit), d <= 32);
	out.projection = proj;
	out.section = M.leftCols(q);
	return out;
}

Mat center_basis(const FinDimAlg &A)
{
	{
		std::lock_guard<std::mutex> lk(A.cache->mu);
		if (A.cache->center)
			return *A.cache->center;
	}
	long d = A.dim;
	Mat S = zeros(d * d, d);
	for (long i = 0; i < d; ++i) {
		Vec bi = basis_vec(d, i);
		Mat diff = left_mult(A, bi) - right_mult(A, bi);
		S.block(i * d, 0, d, d) = diff;
	}
	Mat Z = kernel(S);
	std::lock_guard<std::mutex> lk(A.cache->mu);
	if (!A.cache->center)
		A.cache->center = Z;
	return *A.cache->center;
}

namespace {

// CRT idempotents of k[z] for the roots of the (squarefree) minimal
// polynomial of z; one idempotent per root, pairwise orthogonal
std::vector<Vec> crt_idempotents(const FinDimAlg &A, const Vec &z, const Poly &m,
                                 const std::vector<CycEl> &roots, const Vec &unit)
{
	std::vector<Vec> hs;
	for (const auto &r : roots) {
		Poly lin{-r, CycEl(1)};
		Poly g = pdivrem(m, lin).first;
		CycEl val = peval(g, r);
		if (val.is_zero())
			throw InvariantViolation("repeated root in squarefree polynomial");
		CycEl inv = val.inverse();
		Poly h = g;
		for (auto &c : h)
			c *= inv;
		hs.push_back(eval_poly_at_element(A, h, z, unit));
	}
	return hs;
}

bool is_squarefree(const Poly &m)
{
	return pdeg(pgcd(m, pderiv(m))) == 0;
}

} // namespace

std::vector<Vec> central_primitive_idempotents(const FinDimAlg &A)
{
	if (radical_basis(A).cols() != 0)
		throw Error("central idempotent computation requires a semisimple algebra");
	Mat Z = center_basis(A);
	long c = Z.cols(), d = A.dim;
	std::vector<Vec> idems{A.unit};
	auto all_primitive = [&]() {
		for (const auto &e : idems) {
			Mat Ze = zeros(d, c);
			for (long j = 0; j < c; ++j)
				Ze.col(j) = mul(A, Vec(Z.col(j)), e);
			if (rank(Ze) != 1)
				return false;
		}
		return true;
	};
	std::string offending;
	auto refine_with = [&](const Vec &z) {
		Poly m = min_poly(left_mult(A, z));
		if (!is_squarefree(m))
			throw InvariantViolation(
			    "central element of a semisimple algebra has a repeated root");
		auto rr = roots_in_field(m, A.conductor);
		if (!rr.complete && offending.empty())
			offending = poly_to_string(rr.unresolved);
		if (rr.roots.size() < 2 && rr.complete)
			return;
		if (rr.roots.empty())
			return;
		auto hs = crt_idempotents(A, z, m, rr.roots, A.unit);
		Vec sum = zero_vec(d);
		for (const auto &h : hs)
			sum += h;
		hs.push_back(Vec(A.unit - sum));
		std::vector<Vec> next;
		for (const auto &e : idems)
			for (const auto &h : hs) {
				Vec v = mul(A, e, h);
				if (!exactly_zero(v))
					next.push_back(v);
			}
		idems = std::move(next);
	};
	for (long j = 0; j < c && !all_primitive(); ++j)
		refine_with(Vec(Z.col(j)));
	if (!all_primitive()) {
		std::mt19937_64 rng(0x5eed);
		std::uniform_int_distribution<int> coeff(-3, 3);
		for (int round = 0; round < 12 && !all_primitive(); ++round) {
			Vec z = zero_vec(d);
			for (long j = 0; j < c; ++j)
				z += Vec(Z.col(j) * CycEl(coeff(rng)));
			refine_with(z);
		}
	}
	if (!all_primitive())
		throw NotSplit("center does not split over the working field",
		               offending.empty() ? "unknown factor" : offending);
	if ((long)idems.size() != c)
		throw InvariantViolation("central idempotent count differs from center dimension");
	return idems;
}

AlgMod regular_module(const AlgPtr &A)
{
	AlgMod M;
	M.parent = A;
	M.dim = A->dim;
	for (long i = 0; i < A->dim; ++i)
		M.action.push_back(left_mult(*A, basis_vec(A->dim, i)));
	return M;
}

bool check_module(const FinDimAlg &A, const AlgMod &M)
{
	long d = A.dim;
	Mat unit_act = zeros(M.dim, M.dim);
	for (long i = 0; i < d; ++i)
		if (!A.unit(i).is_zero())
			unit_act += Mat(M.action[i] * A.unit(i));
	if (unit_act != identity(M.dim))
		return false;
	for (long i = 0; i < d; ++i)
		for (long j = 0; j < d; ++j) {
			Mat lhs = Mat(M.action[i] * M.action[j]);
			Mat rhs = zeros(M.dim, M.dim);
			for (const auto &t : A.sc[i * d + j])
				rhs += Mat(M.action[t.k] * t.c);
			if (lhs != rhs)
				return false;
		}
	return true;
}

namespace {

Mat corner_basis(const FinDimAlg &A, const Vec &p)
{
	Mat C = zeros(A.dim, A.dim);
	for (long i = 0; i < A.dim; ++i)
		C.col(i) = mul(A, p, mul(A, basis_vec(A.dim, i), p));
	return column_space_basis(C);
}

// primitive idempotent below the central idempotent e, by corner refinement
Vec primitive_idempotent(const FinDimAlg &A, const Vec &e)
{
	Vec p = e;
	std::mt19937_64 rng(0xb10c);
	std::uniform_int_distribution<int> coeff(-2, 2);
	for (long guard = 0; guard <= A.dim; ++guard) {
		Mat C = corner_basis(A, p);
		long cd = C.cols();
		if (cd == 1)
			return p;
		std::vector<Vec> candidates;
		for (long i = 0; i < cd; ++i)
			candidates.push_back(Vec(C.col(i)));
		for (long i = 0; i < cd && i < 6; ++i)
			for (long j = i + 1; j < cd && j < 6; ++j) {
				candidates.push_back(Vec(C.col(i) + C.col(j)));
				candidates.push_back(Vec(C.col(i) - C.col(j)));
			}
		for (int t = 0; t < 24; ++t) {
			Vec v = zero_vec(A.dim);
			for (long i = 0; i < cd; ++i)
				v += Vec(C.col(i) * CycEl(coeff(rng)));
			candidates.push_back(v);
		}
		std::string offending;
		bool refined = false;
		for (const auto &u : candidates) {
			if (exactly_zero(u))
				continue;
			// minimal polynomial of u acting on the corner
			auto act = solve_many(C, Mat(left_mult(A, u) * C));
			if (!act)
				throw InvariantViolation("corner not closed under multiplication");
			Poly m = min_poly(*act);
			if (pdeg(m) < 2 || !is_squarefree(m))
				continue;
			auto rr = roots_in_field(m, A.conductor);
			if (!rr.complete && offending.empty())
				offending = poly_to_string(rr.unresolved);
			if (rr.roots.empty())
				continue;
			// the corner algebra pAp has unit p
			auto hs = crt_idempotents(A, u, m, rr.roots, p);
			for (const auto &h : hs) {
				if (exactly_zero(h) || h == p)
					continue;
				Vec h2 = mul(A, h, h);
				if (h2 != h)
					throw InvariantViolation("refinement produced a non-idempotent");
				if (corner_basis(A, h).cols() < cd) {
					p = h;
					refined = true;
					break;
				}
			}
			if (refined)
				break;
		}
		if (!refined)
			throw NotSplit("matrix block does not split over the working field",
			               offending.empty() ? "no separable splitting element found"
			                                 : offending);
	}
	throw InvariantViolation("primitive idempotent search did not terminate");
}

AlgMod module_from_idempotent(const AlgPtr &A, const Vec &p)
{
	long d = A->dim;
	Mat cols = zeros(d, d);
	for (long i = 0; i < d; ++i)
		cols.col(i) = mul(*A, basis_vec(d, i), p);
	Mat W = column_space_basis(cols);
	AlgMod M;
	M.parent = A;
	M.dim = W.cols();
	for (long i = 0; i < d; ++i) {
		auto act = solve_many(W, Mat(left_mult(*A, basis_vec(d, i)) * W));
		if (!act)
			throw InvariantViolation("left ideal is not a submodule");
		M.action.push_back(*act);
	}
	return M;
}

} // namespace

std::vector<AlgMod> simple_modules(const AlgPtr &A)
{
	Quotient Q = semisimple_quotient(*A);
	auto cpis = central_primitive_idempotents(*Q.alg);
	std::vector<AlgMod> out;
	long sqsum = 0;
	for (const auto &e : cpis) {
		Vec p = primitive_idempotent(*Q.alg, e);
		AlgMod Mq = module_from_idempotent(Q.alg, p);
		// pull the action back through the projection
		AlgMod M;
		M.parent = A;
		M.dim = Mq.dim;
		for (long i = 0; i < A->dim; ++i) {
			Vec pi = Vec(Q.projection * basis_vec(A->dim, i));
			Mat act = zeros(M.dim, M.dim);
			for (long k = 0; k < Q.alg->dim; ++k)
				if (!pi(k).is_zero())
					act += Mat(Mq.action[k] * pi(k));
			M.action.push_back(act);
		}
		if (!check_module(*A, M))
			throw InvariantViolation("constructed simple module fails the axioms");
		sqsum += M.dim * M.dim;
		out.push_back(std::move(M));
	}
	if (sqsum != sd(*A))
		throw InvariantViolation("simple module dimensions do not account for sd");
	return out;
}

std::vector<AlgMod> characters(const AlgPtr &A)
{
	Quotient Q = semisimple_quotient(*A);
	auto cpis = central_primitive_idempotents(*Q.alg);
	std::vector<AlgMod> out;
	for (const auto &e : cpis) {
		// block dimension 1 <=> e spans e*Abar*e and Abar*e
		Mat cols = zeros(Q.alg->dim, Q.alg->dim);
		for (long i = 0; i < Q.alg->dim; ++i)
			cols.col(i) = mul(*Q.alg, basis_vec(Q.alg->dim, i), e);
		if (rank(cols) != 1)
			continue;
		long nz = 0;
		while (e(nz).is_zero())
			++nz;
		AlgMod chi;
		chi.parent = A;
		chi.dim = 1;
		for (long i = 0; i < A->dim; ++i) {
			Vec pi = Vec(Q.projection * basis_vec(A->dim, i));
			Vec prod = mul(*Q.alg, pi, e);
			Mat m = zeros(1, 1);
			m(0, 0) = prod(nz) / e(nz);
			chi.action.push_back(m);
		}
		if (!check_module(*A, chi))
			throw InvariantViolation("character fails the module axioms");
		out.push_back(std::move(chi));
	}
	return out;
}

CycEl character_value(const AlgMod &chi, const Vec &x)
{
	CycEl acc(0);
	for (long i = 0; i < x.size(); ++i)
		if (!x(i).is_zero())
			acc += x(i) * chi.action[i](0, 0);
	return acc;
}

bool is_semisimple_module(const FinDimAlg &A, const AlgMod &M)
{
	Mat J = radical_basis(A);
	for (long c = 0; c < J.cols(); ++c) {
		Mat act = zeros(M.dim, M.dim);
		for (long i = 0; i < A.dim; ++i)
			if (!J(i, c).is_zero())
				act += Mat(M.action[i] * J(i, c));
		if (!exactly_zero(act))
			return false;
	}
	return true;
}

bool is_split_semisimple(const FinDimAlg &A)
{
	if (radical_basis(A).cols() != 0)
		return false;
	try {
		auto self = std::make_shared<FinDimAlg>(A);
		simple_modules(self);
		return true;
	} catch (const NotSplit &) {
		return false;
	}
}

bool module_isomorphic(const AlgMod &M1, const AlgMod &M2)
{
	if (M1.dim != M2.dim || M1.action.size() != M2.action.size())
		return false;
	long n = M1.dim, d = (long)M1.action.size();
	// T rho1(b) = rho2(b) T as a linear system in vec(T)
	Mat S = zeros(d * n * n, n * n);
	Mat In = identity(n);
	for (long i = 0; i < d; ++i) {
		Mat blk = kron(In, M2.action[i]) - kron(Mat(M1.action[i].transpose()), In);
		S.block(i * n * n, 0, n * n, n * n) = blk;
	}
	Mat K = kernel(S);
	for (long c = 0; c < K.cols(); ++c) {
		Mat T = zeros(n, n);
		for (long j = 0; j < n; ++j)
			for (long i = 0; i < n; ++i)
				T(i, j) = K(j * n + i, c);
		if (!det(T).is_zero())
			return true;
	}
	return false;
}

Mat spin_submodule(const AlgMod &M, const Vec &v)
{
	Mat W = zeros(M.dim, 1);
	W.col(0) = v;
	W = column_space_basis(W);
	while (true) {
		Mat bigger = zeros(M.dim, W.cols() * (1 + (long)M.action.size()));
		bigger.leftCols(W.cols()) = W;
		long c = W.cols();
		for (const auto &act : M.action) {
			Mat img = Mat(act * W);
			bigger.block(0, c, M.dim, W.cols()) = img;
			c += W.cols();
		}
		Mat W2 = column_space_basis(bigger);
		if (W2.cols() == W.cols())
			return W2;
		W = W2;
	}
}

} // namespace hopfdisc
