#include "doctest.h"
#include "hopfdisc/chevalley.hpp"
#include "hopfdisc/errors.hpp"
#include "hopfdisc/families.hpp"

using namespace hopfdisc;

namespace {

CentralPoint pt(std::initializer_list<CycEl> cs) { return CentralPoint(cs); }

} // namespace

TEST_CASE("single-fiber chevalley property")
{
	// basic identity fibers are Chevalley
	CHECK(fiber_chevalley(identity_fiber_hopf(*make_taft_ext(2, 4))));
	CHECK(fiber_chevalley(identity_fiber_hopf(*make_a_family(2, 1, 4))));
	CHECK(fiber_chevalley(identity_fiber_hopf(*make_qborel_sl2(3))));
	CHECK(fiber_chevalley(identity_fiber_hopf(*make_group_ext_d8())));
	// the small quantum group is famously not Chevalley
	CHECK_FALSE(fiber_chevalley(make_uqsl2_fixture()));
}

TEST_CASE("six equivalent conditions at lowest and generic points")
{
	auto F = make_a_family(2, 1, 4);
	std::vector<CentralPoint> test_pts = {identity_point(*F),
	                                      pt({CycEl(0), CycEl(-1)}),
	                                      pt({CycEl(1), CycEl(1)})};
	// point inside the lowest subvariety: all six conditions true
	CentralPoint low = pt({CycEl(0), CycEl(-1)});
	for (const auto &V : simple_modules(specialize(*F, low)->alg)) {
		SixEquivalences six = verify_six_equivalences(*F, low, V, test_pts);
		CHECK(six.agree);
		CHECK(six.tensor_reducible);
		CHECK(six.lowest_level_member);
		CHECK(six.dual_pairing_semisimple);
	}
	// generic point: all six conditions false, still in agreement
	CentralPoint hi = pt({CycEl::zeta(4), CycEl(-1)});
	for (const auto &V : simple_modules(specialize(*F, hi)->alg)) {
		SixEquivalences six = verify_six_equivalences(*F, hi, V, test_pts);
		CHECK(six.agree);
		CHECK_FALSE(six.tensor_reducible);
		CHECK_FALSE(six.lowest_level_member);
		CHECK_FALSE(six.dual_pairing_semisimple);
	}
}

TEST_CASE("six equivalences on the liu family")
{
	auto F = make_liu(2, 3, 12);
	CycEl z3 = CycEl::root_of_unity(12, 3, 1);
	std::vector<CentralPoint> test_pts = {identity_point(*F), pt({z3}),
	                                      pt({CycEl(-1)})};
	for (const auto &V : simple_modules(specialize(*F, pt({z3}))->alg)) {
		SixEquivalences six = verify_six_equivalences(*F, pt({z3}), V, test_pts);
		CHECK(six.agree);
		CHECK(six.tensor_reducible);
	}
	for (const auto &V : simple_modules(specialize(*F, pt({CycEl(-1)}))->alg)) {
		SixEquivalences six =
		    verify_six_equivalences(*F, pt({CycEl(-1)}), V, test_pts);
		CHECK(six.agree);
		CHECK_FALSE(six.tensor_reducible);
	}
}

TEST_CASE("six-equivalence hypothesis requires a chevalley identity fiber")
{
	auto U = build_family("uqsl2", {});
	auto simples = simple_modules(specialize(*U, {})->alg);
	CHECK_THROWS_AS(verify_six_equivalences(*U, {}, simples[0], {{}}),
	                HypothesisFailed);
}

TEST_CASE("maximally stable modules are tensor-reducible")
{
	auto F = make_qborel_sl2(3, 9);
	std::vector<CentralPoint> test_pts = {identity_point(*F),
	                                      pt({CycEl::root_of_unity(9, 3, 1), CycEl(0)})};
	// identity fiber: every simple is a character, all maximally stable
	StabilityReport rep = maximal_stability_check(*F, identity_point(*F), test_pts);
	CHECK(rep.checked == 3);
	CHECK(rep.maximally_stable == 3);
	CHECK(rep.implication_holds);
	// generic fiber: the 3-dimensional simple is not maximally stable
	CentralPoint gen = pt({CycEl(1), CycEl(1)});
	StabilityReport rep2 = maximal_stability_check(*F, gen, test_pts);
	CHECK(rep2.checked == 1);
	CHECK(rep2.maximally_stable == 0);
	CHECK(rep2.implication_holds);
	auto G = make_a_family(2, 1, 4);
	StabilityReport rep3 = maximal_stability_check(
	    *G, pt({CycEl(0), CycEl(-1)}), {identity_point(*G), pt({CycEl(1), CycEl(1)})});
	CHECK(rep3.checked == 2);
	CHECK(rep3.maximally_stable == 2);
	CHECK(rep3.implication_holds);
}

TEST_CASE("family chevalley verdicts")
{
	{
		auto F = make_taft_ext(2, 4);
		auto v = chevalley_family_check(*F, sample_points(*F, 4));
		CHECK(v.identity_fiber_chevalley);
		CHECK(v.sd_constant);
		CHECK(v.chevalley);
	}
	{
		auto F = make_group_ext_d8();
		auto v = chevalley_family_check(*F, sample_points(*F, 2));
		CHECK(v.chevalley);
	}
	{
		auto F = make_a_family(2, 1, 4);
		auto v = chevalley_family_check(*F, sample_points(*F, 4), 2);
		CHECK(v.identity_fiber_chevalley);
		CHECK_FALSE(v.sd_constant);
		CHECK_FALSE(v.chevalley);
		REQUIRE(v.witness.has_value());
		CHECK_FALSE((*v.witness)[0].is_zero()); // a point off the alpha = 0 line
	}
	{
		auto F = make_liu(2, 3, 12);
		auto v = chevalley_family_check(*F, sample_points(*F, 12));
		CHECK_FALSE(v.chevalley);
		CHECK(v.identity_fiber_chevalley);
	}
}

TEST_CASE("lowest subvariety group structure")
{
	{
		// alpha = 0 line of A(2,1): closed subgroup at the lowest level
		auto F = make_a_family(2, 1, 4);
		auto rep = subgroup_check(*F, sample_points(*F, 4), lowest_level(*F));
		CHECK(rep.members.size() == 4);
		CHECK(rep.subgroup());
	}
	{
		// cube roots of unity inside the liu family
		auto F = make_liu(2, 3, 12);
		auto rep = subgroup_check(*F, sample_points(*F, 12), lowest_level(*F), 2);
		CHECK(rep.members.size() == 3);
		CHECK(rep.subgroup());
	}
	{
		// infinite taft: the singleton at the origin
		auto F = make_infinite_taft(2, 1, 4);
		auto rep = subgroup_check(*F, sample_points(*F, 4), lowest_level(*F));
		CHECK(rep.members.size() == 1);
		CHECK(rep.subgroup());
	}
}

TEST_CASE("quantized SL2: triangular level set is not a subgroup")
{
	auto F = make_oeps_sl2(3);
	auto pts = sample_points(*F, 3);
	// level r^2 + 1 = 10 catches all triangular points, but products of
	// opposite triangulars escape
	auto rep10 = subgroup_check(*F, pts, 10);
	CHECK(rep10.contains_identity);
	CHECK(rep10.members.size() == 21);
	CHECK_FALSE(rep10.closed_under_product);
	REQUIRE(rep10.product_violation.has_value());
	auto [vp, vq] = *rep10.product_violation;
	CHECK(sd(*specialize(*F, convolve(*F, vp, vq))->alg) >= 10);
	// the lowest level r + 1 = 4 carves out the diagonal torus
	auto rep4 = subgroup_check(*F, pts, 4);
	CHECK(rep4.members.size() == 3);
	CHECK(rep4.subgroup());
}

TEST_CASE("hopf quotients supported on the lowest subvariety")
{
	{
		// conductor 8 so the characters of every fiber on the line split
		auto F = make_a_family(2, 1, 8);
		auto rep = quotient_chevalley_check(*F, sample_points(*F, 4), 3, false);
		CHECK(rep.subgroup.subgroup());
		CHECK(rep.chevalley);
		CHECK_FALSE(rep.quotient_dimension.has_value()); // infinite line
	}
	{
		auto F = make_liu(2, 3, 12);
		auto rep = quotient_chevalley_check(*F, sample_points(*F, 12), 3, true);
		CHECK(rep.subgroup.subgroup());
		CHECK(rep.chevalley);
		REQUIRE(rep.quotient_dimension.has_value());
		CHECK(*rep.quotient_dimension == 12); // 3 points x fiber dimension 4
	}
}
