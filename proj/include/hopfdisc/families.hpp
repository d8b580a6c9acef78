#pragma once
#include "hopfdisc/hopf.hpp"

namespace hopfdisc {

using FamilyPtr = std::shared_ptr<const HopfFamily>;

// Taft extension T(n): g invertible with g^n central, x^n = 0, xg = eps gx
FamilyPtr make_taft_ext(long n, int conductor = 0);

// A(l, n): x invertible, xy = xi yx, x^l and y^l central, Delta(y) = y(x)1 + x^n(x)y
FamilyPtr make_a_family(long l, long n, int conductor = 0);

// generalized Liu algebra B(n, w): x central invertible, g^n = x^w, y^n = 1 - x^w
FamilyPtr make_liu(long n, long w, int conductor = 0);

// infinite Taft H(n, t): g^n = 1, x^n central primitive, Delta(x) = x(x)g^t + 1(x)x
FamilyPtr make_infinite_taft(long n, long t, int conductor = 0);

// quantized Borel of sl2: K invertible, EK = eps^{-2} KE, K^l and E^l central
FamilyPtr make_qborel_sl2(long l, int conductor = 0);

// group algebra of the dihedral group of order 8 over its center
FamilyPtr make_group_ext_d8(int conductor = 0);

// quantized coordinate ring of SL2 at a primitive r-th root of unity (r odd >= 3)
FamilyPtr make_oeps_sl2(long r, int conductor = 0);

// small quantum group u_eps(sl2) at a primitive cube root of unity, as a
// standalone 27-dimensional fiber with its full Hopf structure
FiberHopf make_uqsl2_fixture();
FamilyPtr make_fixture_family(const std::string &name,
                              std::shared_ptr<FiberHopf> fix);

struct FamilyInfo {
	std::string name;
	std::string summary;
	std::vector<std::string> param_names;
	std::map<std::string, long> defaults;
	bool experimental = false;
};
const std::vector<FamilyInfo> &family_catalog();
// params may omit entries (defaults apply); conductor 0 picks the minimum
FamilyPtr build_family(const std::string &name,
                       std::map<std::string, long> params, int conductor = 0);

// root-of-unity sample grid on the central variety: every coordinate ranges
// over the roots of unity of order dividing `order` (plus 0 when the
// coordinate is not forced invertible), filtered by the point relations
std::vector<CentralPoint> sample_points(const HopfFamily &F, long order,
                                        long max_points = 4096);

} // namespace hopfdisc
