#include <doctest.h>

#include "hopfdisc/algebra.hpp"
#include "hopfdisc/errors.hpp"

using namespace hopfdisc;

namespace {

Vec unit_at(long dim, long i)
{
	Vec v = zero_vec(dim);
	v(i) = CycEl(1);
	return v;
}

// group algebra from a multiplication table g_i g_j = g_{table[i][j]}
AlgPtr group_algebra(const std::vector<std::vector<int>> &table, int conductor)
{
	long d = table.size();
	std::vector<std::vector<SCTerm>> sc(d * d);
	for (long i = 0; i < d; ++i)
		for (long j = 0; j < d; ++j)
			sc[i * d + j].push_back({table[i][j], CycEl(1)});
	std::vector<std::string> labels;
	for (long i = 0; i < d; ++i)
		labels.push_back("g" + std::to_string(i));
	return make_algebra(d, conductor, labels, sc, unit_at(d, 0));
}

AlgPtr cyclic_group_algebra(int n, int conductor)
{
	std::vector<std::vector<int>> t(n, std::vector<int>(n));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			t[i][j] = (i + j) % n;
	return group_algebra(t, conductor);
}

// full matrix algebra M_n with basis e_{ab}, index a*n+b
AlgPtr matrix_algebra(int n, int conductor)
{
	long d = (long)n * n;
	std::vector<std::vector<SCTerm>> sc(d * d);
	for (int a = 0; a < n; ++a)
		for (int b = 0; b < n; ++b)
			for (int c = 0; c < n; ++c)
				for (int e = 0; e < n; ++e)
					if (b == c)
						sc[(a * n + b) * d + (c * n + e)].push_back(
						    {(long)a * n + e, CycEl(1)});
	std::vector<std::string> labels;
	for (int a = 0; a < n; ++a)
		for (int b = 0; b < n; ++b)
			labels.push_back("e" + std::to_string(a) + std::to_string(b));
	Vec unit = zero_vec(d);
	for (int a = 0; a < n; ++a)
		unit(a * n + a) = CycEl(1);
	return make_algebra(d, conductor, labels, sc, unit);
}

// dual numbers k[x]/(x^2)
AlgPtr dual_numbers()
{
	std::vector<std::vector<SCTerm>> sc(4);
	sc[0].push_back({0, CycEl(1)});
	sc[1].push_back({1, CycEl(1)});
	sc[2].push_back({1, CycEl(1)});
	// x*x = 0: no terms
	return make_algebra(2, 1, {"1", "x"}, sc, unit_at(2, 0));
}

// Q(i) as a 2-dimensional algebra over the given field
AlgPtr gaussian_field(int conductor)
{
	std::vector<std::vector<SCTerm>> sc(4);
	sc[0].push_back({0, CycEl(1)});
	sc[1].push_back({1, CycEl(1)});
	sc[2].push_back({1, CycEl(1)});
	sc[3].push_back({0, CycEl(-1)}); // i*i = -1
	return make_algebra(2, conductor, {"1", "i"}, sc, unit_at(2, 0));
}

// upper triangular 2x2 matrices: basis e11, e22, e12
AlgPtr upper_triangular()
{
	std::vector<std::vector<SCTerm>> sc(9);
	auto put = [&](int i, int j, int k) { sc[i * 3 + j].push_back({k, CycEl(1)}); };
	put(0, 0, 0); // e11 e11 = e11
	put(1, 1, 1); // e22 e22 = e22
	put(0, 2, 2); // e11 e12 = e12
	put(2, 1, 2); // e12 e22 = e12
	Vec unit = zero_vec(3);
	unit(0) = CycEl(1);
	unit(1) = CycEl(1);
	return make_algebra(3, 1, {"e11", "e22", "e12"}, sc, unit);
}

} // namespace

TEST_CASE("validation rejects broken structure constants")
{
	// x*x = 1 but unit claims to be x: unit axiom must fail
	std::vector<std::vector<SCTerm>> sc(4);
	sc[0].push_back({0, CycEl(1)});
	sc[1].push_back({1, CycEl(1)});
	sc[2].push_back({1, CycEl(1)});
	sc[3].push_back({0, CycEl(1)});
	CHECK_THROWS_AS(make_algebra(2, 1, {"1", "x"}, sc, unit_at(2, 1)), BadInput);

	// non-associative: x*x = x with x*1 = x etc. broken table
	std::vector<std::vector<SCTerm>> sc2(4);
	sc2[0].push_back({0, CycEl(1)});
	sc2[1].push_back({1, CycEl(1)});
	sc2[2].push_back({1, CycEl(1)});
	sc2[3].push_back({0, CycEl(1)});
	sc2[3].push_back({1, CycEl(1)}); // x^2 = 1 + x
	CHECK_NOTHROW(make_algebra(2, 1, {"1", "x"}, sc2, unit_at(2, 0)));
	sc2[3].clear();
	sc2[3].push_back({0, CycEl(1)});
	sc2[1].clear();
	sc2[1].push_back({0, CycEl(1)}); // 1*x = 1: breaks unit
	CHECK_THROWS_AS(make_algebra(2, 1, {"1", "x"}, sc2, unit_at(2, 0)), BadInput);
}

TEST_CASE("regular trace on group algebras")
{
	auto A = cyclic_group_algebra(3, 3);
	// tr(1) = 3, tr(g) = 0 for g != 1
	CHECK(regular_trace(*A, unit_at(3, 0)) == CycEl(3));
	CHECK(regular_trace(*A, unit_at(3, 1)) == CycEl(0));
	// trace is symmetric: tr(ab) = tr(ba) on all pairs
	for (long i = 0; i < 3; ++i)
		for (long j = 0; j < 3; ++j)
			CHECK(regular_trace(*A, mul(*A, unit_at(3, i), unit_at(3, j))) ==
			      regular_trace(*A, mul(*A, unit_at(3, j), unit_at(3, i))));
}

TEST_CASE("gram matrix, radical and sd")
{
	auto C3 = cyclic_group_algebra(3, 3);
	CHECK(radical_basis(*C3).cols() == 0);
	CHECK(sd(*C3) == 3);

	auto D = dual_numbers();
	CHECK(radical_basis(*D).cols() == 1);
	CHECK(sd(*D) == 1);

	auto U = upper_triangular();
	CHECK(radical_basis(*U).cols() == 1);
	CHECK(sd(*U) == 2);

	auto M2 = matrix_algebra(2, 1);
	CHECK(sd(*M2) == 4);
	// the Gram matrix of M_n has rank n^2
	CHECK(rank(gram_matrix(*M2)) == 4);
}

TEST_CASE("semisimple quotient")
{
	auto U = upper_triangular();
	Quotient Q = semisimple_quotient(*U);
	CHECK(Q.alg->dim == 2);
	CHECK(radical_basis(*Q.alg).cols() == 0);
	// projection is an algebra map on products of basis elements
	for (long i = 0; i < 3; ++i)
		for (long j = 0; j < 3; ++j) {
			Vec pij = Vec(Q.projection * mul(*U, unit_at(3, i), unit_at(3, j)));
			Vec qq = mul(*Q.alg, Vec(Q.projection * unit_at(3, i)),
			             Vec(Q.projection * unit_at(3, j)));
			CHECK(pij == qq);
		}
	CHECK(Vec(Q.projection * U->unit) == Q.alg->unit);
}

TEST_CASE("center")
{
	CHECK(center_basis(*matrix_algebra(2, 1)).cols() == 1);
	CHECK(center_basis(*cyclic_group_algebra(4, 4)).cols() == 4);
	CHECK(center_basis(*upper_triangular()).cols() == 1);
}

TEST_CASE("central idempotents and characters of cyclic group algebras")
{
	auto C4 = cyclic_group_algebra(4, 4);
	auto cpis = central_primitive_idempotents(*C4);
	CHECK(cpis.size() == 4);
	Vec sum = zero_vec(4);
	for (const auto &e : cpis) {
		CHECK(mul(*C4, e, e) == e);
		sum += e;
	}
	CHECK(sum == C4->unit);
	for (size_t a = 0; a < cpis.size(); ++a)
		for (size_t b = a + 1; b < cpis.size(); ++b)
			CHECK(exactly_zero(mul(*C4, cpis[a], cpis[b])));

	auto chars = characters(C4);
	CHECK(chars.size() == 4);
	// character values at the generator are exactly the 4th roots of unity
	std::vector<CycEl> vals;
	for (const auto &chi : chars)
		vals.push_back(character_value(chi, unit_at(4, 1)));
	for (long k = 0; k < 4; ++k) {
		bool found = false;
		for (const auto &v : vals)
			if (v == CycEl::root_of_unity(4, 4, k))
				found = true;
		CHECK(found);
	}

	// over conductor 1 the center of k[C4] does not split
	auto C4q = cyclic_group_algebra(4, 1);
	CHECK_THROWS_AS(central_primitive_idempotents(*C4q), NotSplit);
	CHECK(!is_split_semisimple(*C4q));
	CHECK(is_split_semisimple(*C4));
}

TEST_CASE("Q(i) as an algebra: split iff the field contains i")
{
	CHECK(!is_split_semisimple(*gaussian_field(1)));
	CHECK(is_split_semisimple(*gaussian_field(4)));
	CHECK(characters(gaussian_field(4)).size() == 2);
	CHECK(sd(*gaussian_field(1)) == 2); // sd never needs splitting
}

TEST_CASE("simple modules of M_2 and of the upper triangular algebra")
{
	auto M2 = matrix_algebra(2, 1);
	auto simples = simple_modules(M2);
	REQUIRE(simples.size() == 1);
	CHECK(simples[0].dim == 2);
	CHECK(check_module(*M2, simples[0]));
	CHECK(characters(M2).empty());

	auto U = upper_triangular();
	auto us = simple_modules(U);
	CHECK(us.size() == 2);
	for (const auto &m : us)
		CHECK(m.dim == 1);
	CHECK(characters(U).size() == 2);
}

TEST_CASE("module semisimplicity via the radical action")
{
	auto U = upper_triangular();
	AlgMod reg = regular_module(U);
	CHECK(check_module(*U, reg));
	CHECK(!is_semisimple_module(*U, reg));
	for (const auto &m : simple_modules(U))
		CHECK(is_semisimple_module(*U, m));
	auto M2 = matrix_algebra(2, 1);
	CHECK(is_semisimple_module(*M2, regular_module(M2)));
}

TEST_CASE("module isomorphism and spinning")
{
	auto M2 = matrix_algebra(2, 1);
	auto V = simple_modules(M2)[0];
	AlgMod reg = regular_module(M2);
	// spinning e11 inside the regular module gives a copy of the simple
	Vec e11 = unit_at(4, 0);
	Mat W = spin_submodule(reg, e11);
	CHECK(W.cols() == 2);
	// restrict the regular action to W
	AlgMod sub;
	sub.parent = M2;
	sub.dim = 2;
	for (const auto &act : reg.action) {
		auto r = solve_many(W, Mat(act * W));
		REQUIRE(r);
		sub.action.push_back(*r);
	}
	CHECK(check_module(*M2, sub));
	CHECK(module_isomorphic(sub, V));

	// the two distinct characters of the upper triangular algebra differ
	auto U = upper_triangular();
	auto chars = characters(U);
	REQUIRE(chars.size() == 2);
	CHECK(!module_isomorphic(chars[0], chars[1]));
	CHECK(module_isomorphic(chars[0], chars[0]));
}

TEST_CASE("simple modules of a product algebra M_2 x k")
{
	// direct sum M_2 + k: 5-dimensional, sd 5, simples of dims 2 and 1
	long d = 5;
	std::vector<std::vector<SCTerm>> sc(d * d);
	auto M2 = matrix_algebra(2, 1);
	for (long i = 0; i < 4; ++i)
		for (long j = 0; j < 4; ++j)
			for (const auto &t : M2->sc[i * 4 + j])
				sc[i * d + j].push_back(t);
	sc[4 * d + 4].push_back({4, CycEl(1)});
	Vec unit = zero_vec(d);
	unit(0) = CycEl(1);
	unit(3) = CycEl(1);
	unit(4) = CycEl(1);
	auto A = make_algebra(d, 1, {"e00", "e01", "e10", "e11", "f"}, sc, unit);
	CHECK(sd(*A) == 5);
	CHECK(center_basis(*A).cols() == 2);
	auto simples = simple_modules(A);
	REQUIRE(simples.size() == 2);
	long d1 = simples[0].dim, d2 = simples[1].dim;
	CHECK(((d1 == 1 && d2 == 2) || (d1 == 2 && d2 == 1)));
	CHECK(!module_isomorphic(simples[0], simples[1]));
	CHECK(characters(A).size() == 1);
}
