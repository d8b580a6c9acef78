#pragma once
#include "hopfdisc/discriminant.hpp"

namespace hopfdisc {

// Chevalley property of a single Hopf fiber: the tensor product of any two
// simple modules (through the fiber's own coproduct) is semisimple
bool fiber_chevalley(const FiberHopf &H);

// tensor products V (x) W and W (x) V across fibers: V over H_p against the
// simple modules over H_q for every q in test_points
struct TensorReducibility {
	bool left = true;  // V (x) W semisimple for all W
	bool right = true; // W (x) V semisimple for all W
	bool reducible() const { return left && right; }
};
TensorReducibility tensor_reducible(const HopfFamily &F, const CentralPoint &p,
                                    const AlgMod &V,
                                    const std::vector<CentralPoint> &test_points);

// the six equivalent conditions characterizing simple modules annihilated by
// the lowest discriminant ideal; requires the identity fiber to be Chevalley
struct SixEquivalences {
	bool tensor_reducible = false;
	bool left_tensor_reducible = false;
	bool right_tensor_reducible = false;
	bool lowest_level_member = false; // sd(p) < lowest level
	bool lowest_minor_vanishes = false;
	bool dual_pairing_semisimple = false; // V (x) V* completely reducible
	bool agree = false;
};
SixEquivalences verify_six_equivalences(const HopfFamily &F,
                                        const CentralPoint &p, const AlgMod &V,
                                        const std::vector<CentralPoint> &test_points);

// maximally stable simple modules must be tensor-reducible
struct StabilityReport {
	long checked = 0;
	long maximally_stable = 0;
	bool implication_holds = true;
};
StabilityReport maximal_stability_check(const HopfFamily &F,
                                        const CentralPoint &p,
                                        const std::vector<CentralPoint> &test_points);

// family-level verdict on the sampled points
struct ChevalleyVerdict {
	bool identity_fiber_chevalley = false;
	bool sd_constant = false;
	bool chevalley = false;
	std::optional<CentralPoint> witness; // point whose sd exceeds the lowest
};
ChevalleyVerdict chevalley_family_check(const HopfFamily &F,
                                        const std::vector<CentralPoint> &pts,
                                        int jobs = 1);

// group axioms of {p : sd(p) < level} within the sampled points
struct SubgroupReport {
	std::vector<CentralPoint> members;
	bool contains_identity = false;
	bool closed_under_product = true;
	bool closed_under_inverse = true;
	std::optional<std::pair<CentralPoint, CentralPoint>> product_violation;
	bool subgroup() const
	{
		return contains_identity && closed_under_product && closed_under_inverse;
	}
};
SubgroupReport subgroup_check(const HopfFamily &F,
                              const std::vector<CentralPoint> &pts, long level,
                              int jobs = 1);

// Chevalley property of the Hopf quotient supported on {sd < level}:
// cross-fiber tensor products of simples over member points stay semisimple
struct QuotientReport {
	SubgroupReport subgroup;
	bool chevalley = false;
	std::optional<long> quotient_dimension; // |members| * fiber dim if exhaustive
};
QuotientReport quotient_chevalley_check(const HopfFamily &F,
                                        const std::vector<CentralPoint> &pts,
                                        long level, bool exhaustive = false);

} // namespace hopfdisc
