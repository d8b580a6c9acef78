#include "hopfdisc/chevalley.hpp"

#include <map>

#include "hopfdisc/errors.hpp"

namespace hopfdisc {

namespace {

// tensor product of two modules over the same fiber through an explicit delta
AlgMod tensor_via_delta(const AlgPtr &A, const Mat &delta, const AlgMod &V,
                        const AlgMod &W)
{
	long d = A->dim;
	AlgMod M;
	M.parent = A;
	M.dim = V.dim * W.dim;
	for (long x = 0; x < d; ++x) {
		Mat act = zeros(M.dim, M.dim);
		for (long k = 0; k < delta.rows(); ++k) {
			if (delta(k, x).is_zero())
				continue;
			act += Mat(kron(V.action[k / d], W.action[k % d]) * delta(k, x));
		}
		M.action.push_back(act);
	}
	return M;
}

struct SimpleCache {
	const HopfFamily &F;
	std::map<std::string, std::vector<AlgMod>> cache;
	const std::vector<AlgMod> &at(const CentralPoint &p)
	{
		std::string key = point_key(p);
		auto it = cache.find(key);
		if (it == cache.end())
			it = cache.emplace(key, simple_modules(specialize(F, p)->alg)).first;
		return it->second;
	}
};

void require_identity_chevalley(const HopfFamily &F)
{
	if (!fiber_chevalley(identity_fiber_hopf(F)))
		throw HypothesisFailed("the identity fiber is not Chevalley; the "
		                       "six-equivalence theorem does not apply");
}

} // namespace

bool fiber_chevalley(const FiberHopf &H)
{
	auto simples = simple_modules(H.alg);
	for (const auto &V : simples)
		for (const auto &W : simples) {
			AlgMod T = tensor_via_delta(H.alg, H.delta, V, W);
			if (!is_semisimple_module(*H.alg, T))
				return false;
		}
	return true;
}

TensorReducibility tensor_reducible(const HopfFamily &F, const CentralPoint &p,
                                    const AlgMod &V,
                                    const std::vector<CentralPoint> &test_points)
{
	TensorReducibility out;
	SimpleCache simples{F};
	// the decisive partner is the dual over the inverse fiber; always probe
	// that fiber (and the identity) in addition to the requested sample
	std::vector<CentralPoint> probes = test_points;
	for (const CentralPoint &extra : {point_inverse(F, p), identity_point(F)}) {
		bool present = false;
		for (const auto &q : probes)
			present = present || point_key(q) == point_key(extra);
		if (!present)
			probes.push_back(extra);
	}
	for (const auto &q : probes) {
		for (const auto &W : simples.at(q)) {
			if (out.left) {
				AlgMod T = tensor_module(F, p, V, q, W);
				out.left = is_semisimple_module(*T.parent, T);
			}
			if (out.right) {
				AlgMod T = tensor_module(F, q, W, p, V);
				out.right = is_semisimple_module(*T.parent, T);
			}
			if (!out.left && !out.right)
				return out;
		}
	}
	return out;
}

SixEquivalences verify_six_equivalences(const HopfFamily &F,
                                        const CentralPoint &p, const AlgMod &V,
                                        const std::vector<CentralPoint> &test_points)
{
	require_identity_chevalley(F);
	SixEquivalences six;
	TensorReducibility tr = tensor_reducible(F, p, V, test_points);
	six.left_tensor_reducible = tr.left;
	six.right_tensor_reducible = tr.right;
	six.tensor_reducible = tr.reducible();
	long ell = lowest_level(F);
	const FinDimAlg &A = *specialize(F, p)->alg;
	six.lowest_level_member = sd(A) < ell;
	six.lowest_minor_vanishes = dk_vanishes(A, ell);
	AlgMod dual = dual_module(F, p, V, true);
	AlgMod pairing = tensor_module(F, p, V, point_inverse(F, p), dual);
	six.dual_pairing_semisimple = is_semisimple_module(*pairing.parent, pairing);
	six.agree = six.tensor_reducible == six.left_tensor_reducible &&
	            six.tensor_reducible == six.right_tensor_reducible &&
	            six.tensor_reducible == six.lowest_level_member &&
	            six.tensor_reducible == six.lowest_minor_vanishes &&
	            six.tensor_reducible == six.dual_pairing_semisimple;
	return six;
}

StabilityReport maximal_stability_check(const HopfFamily &F,
                                        const CentralPoint &p,
                                        const std::vector<CentralPoint> &test_points)
{
	require_identity_chevalley(F);
	StabilityReport rep;
	for (const auto &V : simple_modules(specialize(F, p)->alg)) {
		++rep.checked;
		OrbitReport orbit = character_action_orbit(F, p, V);
		if (!orbit.maximally_stable)
			continue;
		++rep.maximally_stable;
		if (!tensor_reducible(F, p, V, test_points).reducible())
			rep.implication_holds = false;
	}
	return rep;
}

ChevalleyVerdict chevalley_family_check(const HopfFamily &F,
                                        const std::vector<CentralPoint> &pts,
                                        int jobs)
{
	ChevalleyVerdict v;
	v.identity_fiber_chevalley = fiber_chevalley(identity_fiber_hopf(F));
	long base = lowest_level(F) - 1;
	v.sd_constant = true;
	for (const auto &row : scan_variety(F, pts, jobs))
		if (row.sdim != base) {
			v.sd_constant = false;
			if (!v.witness)
				v.witness = row.point;
		}
	v.chevalley = v.identity_fiber_chevalley && v.sd_constant;
	return v;
}

SubgroupReport subgroup_check(const HopfFamily &F,
                              const std::vector<CentralPoint> &pts, long level,
                              int jobs)
{
	SubgroupReport rep;
	auto member = [&](const CentralPoint &p) {
		return sd(*specialize(F, p)->alg) < level;
	};
	for (const auto &row : scan_variety(F, pts, jobs))
		if (row.sdim < level)
			rep.members.push_back(row.point);
	rep.contains_identity = member(identity_point(F));
	for (const auto &p : rep.members) {
		if (!member(point_inverse(F, p)))
			rep.closed_under_inverse = false;
		for (const auto &q : rep.members)
			if (!member(convolve(F, p, q))) {
				rep.closed_under_product = false;
				if (!rep.product_violation)
					rep.product_violation = {p, q};
			}
	}
	return rep;
}

QuotientReport quotient_chevalley_check(const HopfFamily &F,
                                        const std::vector<CentralPoint> &pts,
                                        long level, bool exhaustive)
{
	QuotientReport rep;
	rep.subgroup = subgroup_check(F, pts, level);
	rep.chevalley = true;
	SimpleCache simples{F};
	for (const auto &p : rep.subgroup.members)
		for (const auto &q : rep.subgroup.members) {
			for (const auto &V : simples.at(p))
				for (const auto &W : simples.at(q)) {
					AlgMod T = tensor_module(F, p, V, q, W);
					if (!is_semisimple_module(*T.parent, T))
						rep.chevalley = false;
				}
			if (!rep.chevalley)
				break;
		}
	if (exhaustive && rep.subgroup.subgroup())
		rep.quotient_dimension =
		    (long)rep.subgroup.members.size() * F.ch_degree;
	return rep;
}

} // namespace hopfdisc
