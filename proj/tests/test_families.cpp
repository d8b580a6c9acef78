#include "doctest.h"
#include "hopfdisc/errors.hpp"
#include "hopfdisc/families.hpp"

using namespace hopfdisc;

namespace {

CentralPoint pt(std::initializer_list<CycEl> cs) { return CentralPoint(cs); }

long fiber_sd(const FamilyPtr &F, const CentralPoint &p)
{
	return sd(*specialize(*F, p)->alg);
}

} // namespace

TEST_CASE("parameter validation")
{
	CHECK_THROWS_AS(make_taft_ext(1), BadInput);
	CHECK_THROWS_AS(make_taft_ext(3, 4), BadInput); // conductor not multiple of 3
	CHECK_THROWS_AS(make_infinite_taft(4, 2), BadInput); // t not coprime to n
	CHECK_THROWS_AS(make_qborel_sl2(4), BadInput);
	CHECK_THROWS_AS(make_oeps_sl2(4), BadInput);
	CHECK_THROWS_AS(build_family("no_such", {}), BadInput);
	CHECK_THROWS_AS(build_family("liu", {{"q", 5}}), BadInput);
}

TEST_CASE("taft extension fibers")
{
	auto F = make_taft_ext(2, 4);
	CHECK(F->ch_degree == 4);
	auto id = specialize(*F, identity_point(*F));
	CHECK(id->alg->dim == 4);
	CHECK(sd(*id->alg) == 2);
	// every fiber stays basic: sd is constantly n
	for (long k = 0; k < 4; ++k)
		CHECK(fiber_sd(F, pt({CycEl::root_of_unity(4, 4, k)})) == 2);
	auto F3 = make_taft_ext(3);
	CHECK(fiber_sd(F3, identity_point(*F3)) == 3);
	CHECK(fiber_sd(F3, pt({CycEl::root_of_unity(3, 3, 1)})) == 3);
}

TEST_CASE("a_family fibers and convolution group")
{
	auto F = make_a_family(2, 1, 4);
	CHECK(F->ch_degree == 4);
	// identity fiber (alpha=0, beta=1) is the 4-dimensional Taft algebra
	CentralPoint e = identity_point(*F);
	CHECK(e == pt({CycEl(0), CycEl(1)}));
	CHECK(fiber_sd(F, e) == 2);
	// alpha = 0 line stays basic, alpha != 0 is a full matrix algebra
	CHECK(fiber_sd(F, pt({CycEl(0), CycEl(-1)})) == 2);
	CHECK(fiber_sd(F, pt({CycEl(1), CycEl(1)})) == 4);
	CHECK(fiber_sd(F, pt({CycEl::zeta(4), CycEl(-1)})) == 4);
	// convolution on (alpha, beta): (a1 + b1^n a2, b1 b2)
	CentralPoint p = pt({CycEl(1), CycEl(-1)}), q = pt({CycEl::zeta(4), CycEl::zeta(4)});
	CentralPoint r = convolve(*F, p, q);
	CHECK(r == pt({CycEl(1) - CycEl::zeta(4), CycEl(0) - CycEl::zeta(4)}));
	CHECK(convolve(*F, p, point_inverse(*F, p)) == e);
	CHECK(convolve(*F, point_inverse(*F, q), q) == e);
	CentralPoint s = pt({CycEl(-1), CycEl(1)});
	CHECK(convolve(*F, convolve(*F, p, q), s) == convolve(*F, p, convolve(*F, q, s)));
}

TEST_CASE("liu fibers")
{
	auto F = make_liu(2, 3, 12);
	CHECK(F->ch_degree == 4);
	CHECK(fiber_sd(F, identity_point(*F)) == 2);
	// alpha^w = 1 gives the Taft algebra again; otherwise a matrix algebra
	CycEl z3 = CycEl::root_of_unity(12, 3, 1);
	CHECK(fiber_sd(F, pt({z3})) == 2);
	CHECK(fiber_sd(F, pt({z3 * z3})) == 2);
	CHECK(fiber_sd(F, pt({CycEl(-1)})) == 4);
	CHECK(fiber_sd(F, pt({CycEl::zeta(12)})) == 4);
	CHECK_THROWS_AS(specialize(*F, pt({CycEl(0)})), BadInput);
}

TEST_CASE("infinite taft fibers")
{
	auto F = make_infinite_taft(2, 1, 4);
	CHECK(fiber_sd(F, identity_point(*F)) == 2);
	CHECK(identity_point(*F) == pt({CycEl(0)}));
	CHECK(fiber_sd(F, pt({CycEl(1)})) == 4);
	CHECK(fiber_sd(F, pt({CycEl::zeta(4)})) == 4);
	// additive convolution group
	CHECK(convolve(*F, pt({CycEl(1)}), pt({CycEl(-1)})) == pt({CycEl(0)}));
}

TEST_CASE("quantized borel fibers")
{
	auto F = make_qborel_sl2(3);
	CHECK(F->ch_degree == 9);
	CHECK(fiber_sd(F, identity_point(*F)) == 3);
	CycEl z3 = CycEl::root_of_unity(3, 3, 1);
	CHECK(fiber_sd(F, pt({z3, CycEl(0)})) == 3);
	CHECK(fiber_sd(F, pt({CycEl(1), CycEl(1)})) == 9);
}

TEST_CASE("dihedral group over its center")
{
	auto F = make_group_ext_d8();
	CHECK(F->ch_degree == 4);
	auto pts = sample_points(*F, 4);
	CHECK(pts.size() == 2); // z^2 = 1 cuts the grid down to +-1
	for (const auto &p : pts)
		CHECK(fiber_sd(F, p) == 4);
	CHECK_THROWS_AS(specialize(*F, pt({CycEl::zeta(4)})), BadInput);
}

TEST_CASE("quantized SL2 charts satisfy the defining relations")
{
	auto F = make_oeps_sl2(3);
	CycEl eps = CycEl::root_of_unity(3, 3, 1);
	std::vector<CentralPoint> pts = {
	    identity_point(*F),                                  // a-chart
	    pt({CycEl(0), CycEl(1), CycEl(-1), CycEl(1)}),       // d-chart
	    pt({CycEl(2), CycEl(1), CycEl(1), CycEl(1)}),        // generic
	    pt({eps, CycEl(0), CycEl(0), eps.inverse()}),        // torus
	    pt({CycEl(1), CycEl(1), CycEl(0), CycEl(1)}),        // upper triangular
	};
	for (const auto &p : pts) {
		auto f = specialize(*F, p);
		const FinDimAlg &A = *f->alg;
		CHECK(A.dim == 27);
		Vec a = f->gen_images[0], b = f->gen_images[1], c = f->gen_images[2],
		    d = f->gen_images[3];
		CHECK(mul(A, a, b) == Vec(mul(A, b, a) * eps));
		CHECK(mul(A, a, c) == Vec(mul(A, c, a) * eps));
		CHECK(mul(A, b, c) == mul(A, c, b));
		CHECK(mul(A, b, d) == Vec(mul(A, d, b) * eps));
		CHECK(mul(A, c, d) == Vec(mul(A, d, c) * eps));
		Vec bc = mul(A, b, c);
		CHECK(Vec(mul(A, a, d) - mul(A, d, a)) ==
		      Vec(bc * (eps - eps.inverse())));
		CHECK(Vec(mul(A, a, d) - Vec(bc * eps)) == A.unit);
		// r-th powers match the point coordinates
		for (int i = 0; i < 4; ++i)
			CHECK(element_pow(A, f->gen_images[i], 3) == Vec(A.unit * p[i]));
	}
	CHECK(fiber_sd(F, identity_point(*F)) == 3);
	CHECK(fiber_sd(F, pts[3]) == 3); // torus point stays at the lowest level
	CHECK(fiber_sd(F, pts[4]) > 3);
	CHECK(fiber_sd(F, pts[4]) < 10);
	CHECK(fiber_sd(F, pts[2]) >= 10);
	// the a^r = d^r = 0 locus lies outside both charts
	CHECK_THROWS_AS(specialize(*F, pt({CycEl(0), CycEl(1), CycEl(-1), CycEl(0)})),
	                BadInput);
	// convolution is matrix multiplication on the central variety
	CentralPoint prod = convolve(*F, pts[4],
	                             pt({CycEl(1), CycEl(0), CycEl(1), CycEl(1)}));
	CHECK(prod == pt({CycEl(2), CycEl(1), CycEl(1), CycEl(1)}));
}

TEST_CASE("small quantum sl2 fixture")
{
	FiberHopf H = make_uqsl2_fixture();
	const FinDimAlg &A = *H.alg;
	CHECK(A.dim == 27);
	CHECK(A.conductor == 3);
	CycEl eps = CycEl::root_of_unity(3, 3, 1);
	Vec E = zero_vec(27), Fv = zero_vec(27), K = zero_vec(27);
	E(9) = CycEl(1);
	Fv(3) = CycEl(1);
	K(1) = CycEl(1);
	CHECK(mul(A, K, E) == Vec(mul(A, E, K) * (eps * eps)));
	CHECK(mul(A, K, Fv) == Vec(mul(A, Fv, K) * pow(eps, -2)));
	Vec comm = Vec(mul(A, E, Fv) - mul(A, Fv, E));
	Vec rhs = Vec(Vec(element_pow(A, K, 1) - element_pow(A, K, 2)) *
	              (eps - eps.inverse()).inverse());
	CHECK(comm == rhs);
	CHECK(element_pow(A, E, 3) == zero_vec(27));
	CHECK(element_pow(A, Fv, 3) == zero_vec(27));
	CHECK(element_pow(A, K, 3) == A.unit);
	CHECK(sd(A) == 14); // simple modules of dimensions 1, 2, 3
	CHECK(verify_fiber_hopf(H));
	auto simples = simple_modules(H.alg);
	std::vector<long> dims;
	for (const auto &S : simples)
		dims.push_back(S.dim);
	std::sort(dims.begin(), dims.end());
	CHECK(dims == std::vector<long>{1, 2, 3});
}

TEST_CASE("catalog and registry")
{
	CHECK(family_catalog().size() == 8);
	auto F = build_family("liu", {{"n", 2}, {"w", 3}}, 12);
	CHECK(F->name == "liu");
	CHECK(F->conductor == 12);
	auto G = build_family("a_family", {});
	CHECK(G->params.at("l") == 2);
	auto U = build_family("uqsl2", {});
	CHECK(U->backend == HopfFamily::Backend::Fixture);
	CHECK(specialize(*U, {})->alg->dim == 27);
}

TEST_CASE("sample grids")
{
	auto F = make_a_family(2, 1, 4);
	auto pts = sample_points(*F, 4);
	// alpha in {0} + mu_4, beta in mu_4
	CHECK(pts.size() == 20);
	for (const auto &p : pts)
		CHECK(point_valid(*F, p));
	auto F2 = make_oeps_sl2(3);
	auto pts2 = sample_points(*F2, 3);
	for (const auto &p : pts2) {
		CycEl det = p[0] * p[3] - p[1] * p[2];
		CHECK(det == CycEl(1));
	}
	CHECK(pts2.size() > 10);
	CHECK_THROWS_AS(sample_points(*F, 3), BadInput);
	// capping keeps a deterministic prefix
	auto capped = sample_points(*F, 4, 5);
	CHECK(capped.size() == 5);
	CHECK(capped[0] == pts[0]);
}
