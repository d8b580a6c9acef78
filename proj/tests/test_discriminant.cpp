#include <random>

#include "doctest.h"
#include "hopfdisc/discriminant.hpp"
#include "hopfdisc/errors.hpp"
#include "hopfdisc/families.hpp"

using namespace hopfdisc;

namespace {

Vec unit_at(long dim, long i)
{
	Vec v = zero_vec(dim);
	v(i) = CycEl(1);
	return v;
}

AlgPtr cyclic_group_algebra(int n, int conductor)
{
	long d = n;
	std::vector<std::vector<SCTerm>> sc(d * d);
	for (long i = 0; i < d; ++i)
		for (long j = 0; j < d; ++j)
			sc[i * d + j].push_back({(i + j) % d, CycEl(1)});
	std::vector<std::string> labels;
	for (long i = 0; i < d; ++i)
		labels.push_back("g" + std::to_string(i));
	return make_algebra(d, conductor, labels, sc, unit_at(d, 0));
}

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
	std::vector<std::string> labels(d, "e");
	Vec unit = zero_vec(d);
	for (int a = 0; a < n; ++a)
		unit(a * n + a) = CycEl(1);
	return make_algebra(d, conductor, labels, sc, unit);
}

AlgPtr dual_numbers()
{
	std::vector<std::vector<SCTerm>> sc(4);
	sc[0].push_back({0, CycEl(1)});
	sc[1].push_back({1, CycEl(1)});
	sc[2].push_back({1, CycEl(1)});
	return make_algebra(2, 1, {"1", "x"}, sc, unit_at(2, 0));
}

CentralPoint pt(std::initializer_list<CycEl> cs) { return CentralPoint(cs); }

} // namespace

TEST_CASE("characteristic polynomial of a group-like element")
{
	auto A = cyclic_group_algebra(4, 4);
	// left multiplication by g permutes the basis with a single 4-cycle
	Poly p = char_poly_newton(*A, unit_at(4, 1));
	Poly expect = {CycEl(-1), CycEl(0), CycEl(0), CycEl(0), CycEl(1)};
	CHECK(p == expect);
	CHECK(char_poly_det(*A, unit_at(4, 1)) == expect);
}

TEST_CASE("newton and determinant formulas agree")
{
	std::vector<AlgPtr> algs = {cyclic_group_algebra(3, 3), matrix_algebra(2, 1),
	                            dual_numbers()};
	auto F = make_a_family(2, 1, 4);
	algs.push_back(specialize(*F, pt({CycEl(1), CycEl::zeta(4)}))->alg);
	std::mt19937_64 rng(0x0dd5);
	std::uniform_int_distribution<int> coeff(-4, 4);
	for (const auto &A : algs)
		for (int s = 0; s < 8; ++s) {
			Vec a = zero_vec(A->dim);
			for (long i = 0; i < A->dim; ++i)
				a(i) = CycEl(coeff(rng));
			CHECK(char_poly_newton(*A, a) == char_poly_det(*A, a));
		}
}

TEST_CASE("cayley-hamilton identity on fibers")
{
	CHECK(cayley_hamilton_check(*cyclic_group_algebra(4, 4)));
	CHECK(cayley_hamilton_check(*matrix_algebra(2, 1)));
	CHECK(cayley_hamilton_check(*dual_numbers()));
	auto F = make_liu(2, 3, 12);
	CHECK(cayley_hamilton_check(*specialize(*F, pt({CycEl(-1)}))->alg));
	CHECK(cayley_hamilton_check(*specialize(*F, identity_point(*F))->alg));
	auto U = build_family("uqsl2", {});
	CHECK(cayley_hamilton_check(*specialize(*U, {})->alg, 3));
}

TEST_CASE("gram rank equals square dimension")
{
	CHECK(gram_rank(*matrix_algebra(2, 1)) == 4);
	CHECK(gram_rank(*dual_numbers()) == 1);
	auto F = make_taft_ext(3);
	CHECK(gram_rank(*specialize(*F, identity_point(*F))->alg) == 3);
}

TEST_CASE("discriminant level vanishing")
{
	auto M2 = matrix_algebra(2, 1);
	CHECK_FALSE(dk_vanishes(*M2, 4));
	CHECK_FALSE(dk_vanishes(*M2, 1));
	auto D = dual_numbers();
	CHECK(dk_vanishes(*D, 2));
	CHECK_FALSE(dk_vanishes(*D, 1));
	auto F = make_a_family(2, 1, 4);
	auto taft = specialize(*F, identity_point(*F))->alg;
	CHECK(dk_vanishes(*taft, 3));
	CHECK(dk_vanishes(*taft, 4));
	CHECK_FALSE(dk_vanishes(*taft, 2));
	CHECK_THROWS_AS(dk_vanishes(*taft, 0), BadInput);
	CHECK(dk_vanishes(*taft, 5)); // vanishes trivially past the dimension
}

TEST_CASE("lowest discriminant levels")
{
	CHECK(lowest_level(*make_a_family(2, 1, 4)) == 3);
	CHECK(lowest_level(*make_liu(2, 3, 12)) == 3);
	CHECK(lowest_level(*make_infinite_taft(2, 1, 4)) == 3);
	CHECK(lowest_level(*make_taft_ext(3)) == 4);
	CHECK(lowest_level(*make_qborel_sl2(3)) == 4);
	CHECK(lowest_level(*make_group_ext_d8()) == 5);
	CHECK(lowest_level(*make_oeps_sl2(3)) == 4);
}

TEST_CASE("variety scan preserves order and parallelizes deterministically")
{
	auto F = make_a_family(2, 1, 4);
	auto pts = sample_points(*F, 4);
	auto rows1 = scan_variety(*F, pts, 1);
	auto rows4 = scan_variety(*F, pts, 4);
	REQUIRE(rows1.size() == pts.size());
	for (size_t i = 0; i < rows1.size(); ++i) {
		CHECK(rows1[i].point == pts[i]);
		CHECK(rows1[i].sdim == rows4[i].sdim);
		bool alpha_zero = pts[i][0].is_zero();
		CHECK(rows1[i].sdim == (alpha_zero ? 2 : 4));
	}
}

TEST_CASE("liu scan finds the cyclic lowest subvariety")
{
	auto F = make_liu(2, 3, 12);
	auto pts = sample_points(*F, 12);
	CHECK(pts.size() == 12);
	long members = 0;
	for (const auto &row : scan_variety(*F, pts, 2)) {
		CycEl a3 = pow(row.point[0], 3);
		if (row.sdim == 2) {
			++members;
			CHECK(a3 == CycEl(1));
		} else {
			CHECK(row.sdim == 4);
			CHECK(a3 != CycEl(1));
		}
	}
	CHECK(members == 3);
}
