#pragma once
#include <map>
#include <tuple>

#include "hopfdisc/algebra.hpp"

namespace hopfdisc {

// exponent vector over the family generators; negative entries are allowed
// for invertible generators and are resolved at specialization time
struct GenMonomial {
	std::vector<long> e;
};

// exponent vector over the central generators
struct CMonomial {
	std::vector<long> e;
};

struct CPolyTerm {
	CycEl coeff;
	CMonomial m;
};
using CPoly = std::vector<CPolyTerm>;

struct GenSpec {
	std::string name;
	bool invertible = false;
	long order = 1;    // power relation exponent n_i >= 1
	CPoly power_value; // g^{n_i} equals this central polynomial
};

struct CentralGenSpec {
	std::string name;
	GenMonomial expr; // expression in the generators
	bool invertible = false;
	// Hopf structure of the central subalgebra on this generator
	std::vector<std::tuple<CycEl, CMonomial, CMonomial>> coproduct;
	CycEl counit;
	CPoly antipode;
};

// g_j g_i = q * z^central * g_i g_j for i < j
struct QCommRel {
	CycEl q = CycEl(1);
	CMonomial central;
};

struct SkewTerm {
	CycEl coeff;
	GenMonomial left, right;
};

struct FiberAlgebra {
	std::vector<CycEl> point; // coordinates per central generator
	AlgPtr alg;
	// ordered chart: (generator index, exponent bound); basis monomials are
	// mixed-radix tuples over the chart, last coordinate fastest
	std::vector<std::pair<int, long>> chart;
	std::vector<Vec> gen_images; // image of every family generator
};
using FiberPtr = std::shared_ptr<const FiberAlgebra>;

// complete Hopf structure carried by a single fiber (identity fiber data,
// standalone fixtures): Delta maps the fiber into its own square
struct FiberHopf {
	AlgPtr alg;
	Mat delta;   // (d*d) x d, column j = Delta(b_j)
	Vec counit;  // functional values on the basis
	Mat antipode;
};

struct HopfFamily {
	std::string name;
	std::string display;
	std::map<std::string, long> params;
	int conductor = 1;
	enum class Backend { QComm, OepsSL2, Fixture } backend = Backend::QComm;
	bool experimental = false;

	std::vector<GenSpec> gens;
	std::vector<CentralGenSpec> cgens;
	std::map<std::pair<int, int>, QCommRel> qcomm;
	std::vector<std::vector<SkewTerm>> coproduct; // Delta(g_i)
	std::vector<CycEl> counit_gen;
	std::vector<std::vector<std::pair<CycEl, GenMonomial>>> antipode_gen;
	std::vector<CPoly> point_relations; // must vanish at valid points
	long ch_degree = 0;                 // fiber dimension

	std::shared_ptr<FiberHopf> fixture; // Backend::Fixture payload

	mutable std::mutex cache_mu;
	mutable std::map<std::string, FiberPtr> fiber_cache;
};

using CentralPoint = std::vector<CycEl>;

std::string point_key(const CentralPoint &p);
std::string point_to_string(const HopfFamily &F, const CentralPoint &p);
bool point_valid(const HopfFamily &F, const CentralPoint &p,
                 std::string *why = nullptr);

CycEl eval_cmonomial(const CentralPoint &p, const CMonomial &m);
CycEl eval_cpoly(const CentralPoint &p, const CPoly &poly);

// fiber algebra H/mH at the maximal ideal given by the point (cached)
FiberPtr specialize(const HopfFamily &F, const CentralPoint &p);

// convolution group structure on maxSpec C
CentralPoint identity_point(const HopfFamily &F);
CentralPoint convolve(const HopfFamily &F, const CentralPoint &p,
                      const CentralPoint &q);
CentralPoint point_inverse(const HopfFamily &F, const CentralPoint &p);

// image of a generator monomial inside a fiber
Vec eval_gen_monomial(const FiberAlgebra &f, const GenMonomial &m);

AlgPtr tensor_algebra(const FinDimAlg &A, const FinDimAlg &B,
                      bool validate = false);

// Delta_{p,q}: H_{p*q} -> H_p (x) H_q
struct DeltaMap {
	FiberPtr src, left, right;
	Mat m; // (d_left * d_right) x d_src
};
DeltaMap delta_fiber(const HopfFamily &F, const CentralPoint &p,
                     const CentralPoint &q, bool verify = true);

// counit functional on the identity fiber
Vec counit_fiber(const HopfFamily &F);

// S_p: H_p -> H_{p^{-1}} on basis monomials (anti-homomorphism)
Mat antipode_fiber(const HopfFamily &F, const CentralPoint &p);

// Hopf axioms that live on single fibers / the identity fiber
bool check_coassociativity(const HopfFamily &F, const CentralPoint &p,
                           const CentralPoint &q, const CentralPoint &r);
bool check_counit(const HopfFamily &F, const CentralPoint &p);
bool check_antipode(const HopfFamily &F, const CentralPoint &p);

FiberHopf identity_fiber_hopf(const HopfFamily &F);
bool verify_fiber_hopf(const FiberHopf &H);

// V over H_p, W over H_q: V (x) W over H_{p*q} through Delta_{p,q}
AlgMod tensor_module(const HopfFamily &F, const CentralPoint &p, const AlgMod &V,
                     const CentralPoint &q, const AlgMod &W);

// duals: left via the antipode, right via its inverse; both over H_{p^{-1}}
AlgMod dual_module(const HopfFamily &F, const CentralPoint &p, const AlgMod &V,
                   bool left = true);

struct BiGaloisReport {
	bool left_bijective = false;
	bool right_bijective = false;
};
BiGaloisReport bigalois_check(const HopfFamily &F, const CentralPoint &p,
                              const CentralPoint &q);

struct RadicalCoidealReport {
	bool holds = false;
	bool sd_hypothesis = false; // sd(p*q) == sd(p) relation used in the paper
};
RadicalCoidealReport radical_coideal_check(const HopfFamily &F,
                                           const CentralPoint &p,
                                           const CentralPoint &q);
// core inclusion test, exposed so designed-failure fixtures can corrupt Delta
bool radical_coideal_inclusion(const Mat &delta, const Mat &rad_src,
                               const Mat &rad_left, const Mat &rad_right,
                               long dl, long dr);

bool has_character(const HopfFamily &F, const CentralPoint &p);

struct OrbitReport {
	long group_order = 0;
	long orbit_size = 0;
	long stabilizer_order = 0;
	bool maximally_stable = false; // stabilizer order == (dim V)^2
};
OrbitReport character_action_orbit(const HopfFamily &F, const CentralPoint &p,
                                   const AlgMod &V);

} // namespace hopfdisc
