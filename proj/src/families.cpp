#include "hopfdisc/families.hpp"

#include <numeric>

#include "hopfdisc/errors.hpp"

namespace hopfdisc {

namespace {

GenMonomial gmono(std::vector<long> e)
{
	GenMonomial m;
	m.e = std::move(e);
	return m;
}

CMonomial cmono(std::vector<long> e)
{
	CMonomial m;
	m.e = std::move(e);
	return m;
}

CPoly cterm(CycEl coeff, std::vector<long> e)
{
	return {CPolyTerm{coeff, cmono(std::move(e))}};
}

int pick_conductor(int requested, long minimum, const char *what)
{
	if (requested == 0)
		return (int)minimum;
	if (requested % minimum != 0)
		throw BadInput(std::string("conductor for ") + what +
		               " must be a multiple of " + std::to_string(minimum));
	return requested;
}

} // namespace

FamilyPtr make_taft_ext(long n, int conductor)
{
	if (n < 2)
		throw BadInput("taft_ext requires n >= 2");
	int N = pick_conductor(conductor, n, "taft_ext");
	CycEl eps = CycEl::root_of_unity(N, n);
	auto F = std::make_shared<HopfFamily>();
	F->name = "taft_ext";
	F->display = "T(" + std::to_string(n) + ")";
	F->params = {{"n", n}};
	F->conductor = N;
	F->gens = {
	    {"g", true, n, cterm(CycEl(1), {1})},
	    {"x", false, n, {}}, // x^n = 0
	};
	F->qcomm[{0, 1}] = {eps, cmono({0})}; // xg = eps gx
	F->coproduct = {
	    {{CycEl(1), gmono({1, 0}), gmono({1, 0})}},
	    {{CycEl(1), gmono({0, 1}), gmono({1, 0})},
	     {CycEl(1), gmono({0, 0}), gmono({0, 1})}}, // Delta(x) = x(x)g + 1(x)x
	};
	F->counit_gen = {CycEl(1), CycEl(0)};
	F->antipode_gen = {
	    {{CycEl(1), gmono({-1, 0})}},
	    {{CycEl(0) - eps.inverse(), gmono({-1, 1})}}, // S(x) = -x g^{-1}
	};
	F->cgens = {{"z",
	             gmono({n, 0}),
	             true,
	             {{CycEl(1), cmono({1}), cmono({1})}},
	             CycEl(1),
	             cterm(CycEl(1), {-1})}};
	F->ch_degree = n * n;
	return F;
}

FamilyPtr make_a_family(long l, long n, int conductor)
{
	if (l < 2 || n < 1)
		throw BadInput("a_family requires l >= 2, n >= 1");
	// default to 2l so the default sample grid sees the square roots of the
	// invertible coordinate, not just the l-th roots
	int N = pick_conductor(conductor, 2 * l, "a_family");
	CycEl xi = CycEl::root_of_unity(N, l);
	auto F = std::make_shared<HopfFamily>();
	F->name = "a_family";
	F->display = "A(" + std::to_string(l) + "," + std::to_string(n) + ")";
	F->params = {{"l", l}, {"n", n}};
	F->conductor = N;
	// central coordinates: zy = y^l (alpha), zx = x^l (beta)
	F->gens = {
	    {"x", true, l, cterm(CycEl(1), {0, 1})},
	    {"y", false, l, cterm(CycEl(1), {1, 0})},
	};
	F->qcomm[{0, 1}] = {xi.inverse(), cmono({0, 0})}; // xy = xi yx
	F->coproduct = {
	    {{CycEl(1), gmono({1, 0}), gmono({1, 0})}},
	    {{CycEl(1), gmono({0, 1}), gmono({0, 0})},
	     {CycEl(1), gmono({n, 0}), gmono({0, 1})}}, // Delta(y) = y(x)1 + x^n(x)y
	};
	F->counit_gen = {CycEl(1), CycEl(0)};
	F->antipode_gen = {
	    {{CycEl(1), gmono({-1, 0})}},
	    {{CycEl(-1), gmono({-n, 1})}}, // S(y) = -x^{-n} y
	};
	F->cgens = {
	    {"zy",
	     gmono({0, l}),
	     false,
	     {{CycEl(1), cmono({1, 0}), cmono({0, 0})},
	      {CycEl(1), cmono({0, n}), cmono({1, 0})}},
	     CycEl(0),
	     {{CycEl(-1), cmono({1, -n})}}},
	    {"zx",
	     gmono({l, 0}),
	     true,
	     {{CycEl(1), cmono({0, 1}), cmono({0, 1})}},
	     CycEl(1),
	     cterm(CycEl(1), {0, -1})},
	};
	F->ch_degree = l * l;
	return F;
}

FamilyPtr make_liu(long n, long w, int conductor)
{
	if (n < 2 || w < 1)
		throw BadInput("liu requires n >= 2, w >= 1");
	int N = pick_conductor(conductor, n, "liu");
	CycEl xi = CycEl::root_of_unity(N, n);
	auto F = std::make_shared<HopfFamily>();
	F->name = "liu";
	F->display = "B(" + std::to_string(n) + "," + std::to_string(w) + ")";
	F->params = {{"n", n}, {"w", w}};
	F->conductor = N;
	// single central coordinate z = x
	CPoly one_minus_zw = {{CycEl(1), cmono({0})}, {CycEl(-1), cmono({w})}};
	F->gens = {
	    {"x", true, 1, cterm(CycEl(1), {1})},
	    {"y", false, n, one_minus_zw}, // y^n = 1 - x^w
	    {"g", true, n, cterm(CycEl(1), {w})},
	};
	F->qcomm[{1, 2}] = {xi.inverse(), cmono({0})}; // yg = xi gy
	F->coproduct = {
	    {{CycEl(1), gmono({1, 0, 0}), gmono({1, 0, 0})}},
	    {{CycEl(1), gmono({0, 1, 0}), gmono({0, 0, 1})},
	     {CycEl(1), gmono({0, 0, 0}), gmono({0, 1, 0})}}, // y(x)g + 1(x)y
	    {{CycEl(1), gmono({0, 0, 1}), gmono({0, 0, 1})}},
	};
	F->counit_gen = {CycEl(1), CycEl(0), CycEl(1)};
	F->antipode_gen = {
	    {{CycEl(1), gmono({-1, 0, 0})}},
	    {{CycEl(-1), gmono({0, 1, -1})}}, // S(y) = -y g^{-1}
	    {{CycEl(1), gmono({0, 0, -1})}},
	};
	F->cgens = {{"z",
	             gmono({1, 0, 0}),
	             true,
	             {{CycEl(1), cmono({1}), cmono({1})}},
	             CycEl(1),
	             cterm(CycEl(1), {-1})}};
	F->ch_degree = n * n;
	return F;
}

FamilyPtr make_infinite_taft(long n, long t, int conductor)
{
	if (n < 2 || t < 1 || t > n || std::gcd(n, t) != 1)
		throw BadInput("infinite_taft requires n >= 2 and t in [1,n] coprime to n");
	int N = pick_conductor(conductor, n, "infinite_taft");
	CycEl xi = CycEl::root_of_unity(N, n);
	auto F = std::make_shared<HopfFamily>();
	F->name = "infinite_taft";
	F->display = "H(" + std::to_string(n) + "," + std::to_string(t) + ")";
	F->params = {{"n", n}, {"t", t}};
	F->conductor = N;
	// central coordinate z = x^n (primitive)
	F->gens = {
	    {"g", true, n, cterm(CycEl(1), {0})}, // g^n = 1
	    {"x", false, n, cterm(CycEl(1), {1})},
	};
	F->qcomm[{0, 1}] = {xi, cmono({0})}; // xg = xi gx
	F->coproduct = {
	    {{CycEl(1), gmono({1, 0}), gmono({1, 0})}},
	    {{CycEl(1), gmono({0, 1}), gmono({t, 0})},
	     {CycEl(1), gmono({0, 0}), gmono({0, 1})}}, // x(x)g^t + 1(x)x
	};
	F->counit_gen = {CycEl(1), CycEl(0)};
	F->antipode_gen = {
	    {{CycEl(1), gmono({-1, 0})}},
	    {{CycEl(0) - pow(xi, -t), gmono({-t, 1})}}, // S(x) = -x g^{-t}
	};
	F->cgens = {{"z",
	             gmono({0, n}),
	             false,
	             {{CycEl(1), cmono({1}), cmono({0})},
	              {CycEl(1), cmono({0}), cmono({1})}}, // primitive
	             CycEl(0),
	             cterm(CycEl(-1), {1})}};
	F->ch_degree = n * n;
	return F;
}

FamilyPtr make_qborel_sl2(long l, int conductor)
{
	if (l < 3 || l % 2 == 0)
		throw BadInput("qborel_sl2 requires odd l >= 3");
	int N = pick_conductor(conductor, l, "qborel_sl2");
	CycEl eps = CycEl::root_of_unity(N, l);
	auto F = std::make_shared<HopfFamily>();
	F->name = "qborel_sl2";
	F->display = "u_eps^{>=0}(sl2), l=" + std::to_string(l);
	F->params = {{"l", l}};
	F->conductor = N;
	F->gens = {
	    {"K", true, l, cterm(CycEl(1), {1, 0})},
	    {"E", false, l, cterm(CycEl(1), {0, 1})},
	};
	F->qcomm[{0, 1}] = {pow(eps, -2), cmono({0, 0})}; // KE = eps^2 EK
	F->coproduct = {
	    {{CycEl(1), gmono({1, 0}), gmono({1, 0})}},
	    {{CycEl(1), gmono({0, 1}), gmono({0, 0})},
	     {CycEl(1), gmono({1, 0}), gmono({0, 1})}}, // E(x)1 + K(x)E
	};
	F->counit_gen = {CycEl(1), CycEl(0)};
	F->antipode_gen = {
	    {{CycEl(1), gmono({-1, 0})}},
	    {{CycEl(-1), gmono({-1, 1})}}, // S(E) = -K^{-1} E
	};
	F->cgens = {
	    {"z1",
	     gmono({l, 0}),
	     true,
	     {{CycEl(1), cmono({1, 0}), cmono({1, 0})}},
	     CycEl(1),
	     cterm(CycEl(1), {-1, 0})},
	    {"z2",
	     gmono({0, l}),
	     false,
	     {{CycEl(1), cmono({0, 1}), cmono({0, 0})},
	      {CycEl(1), cmono({1, 0}), cmono({0, 1})}},
	     CycEl(0),
	     {{CycEl(-1), cmono({-1, 1})}}},
	};
	F->ch_degree = l * l;
	return F;
}

FamilyPtr make_group_ext_d8(int conductor)
{
	int N = conductor == 0 ? 4 : conductor;
	auto F = std::make_shared<HopfFamily>();
	F->name = "group_ext_d8";
	F->display = "kD8 over its center";
	F->conductor = N;
	// D8 = <r, s | r^4 = s^2 = 1, sr = r^3 s>, center Z = <r^2>, z = r^2
	F->gens = {
	    {"r", true, 2, cterm(CycEl(1), {1})},
	    {"s", true, 2, cterm(CycEl(1), {0})},
	};
	F->qcomm[{0, 1}] = {CycEl(1), cmono({1})}; // sr = z rs
	F->coproduct = {
	    {{CycEl(1), gmono({1, 0}), gmono({1, 0})}},
	    {{CycEl(1), gmono({0, 1}), gmono({0, 1})}},
	};
	F->counit_gen = {CycEl(1), CycEl(1)};
	F->antipode_gen = {
	    {{CycEl(1), gmono({-1, 0})}},
	    {{CycEl(1), gmono({0, -1})}},
	};
	F->cgens = {{"z",
	             gmono({2, 0}),
	             true,
	             {{CycEl(1), cmono({1}), cmono({1})}},
	             CycEl(1),
	             cterm(CycEl(1), {-1})}};
	F->point_relations = {{{CycEl(1), cmono({2})}, {CycEl(-1), cmono({0})}}};
	F->ch_degree = 4;
	return F;
}

FamilyPtr make_oeps_sl2(long r, int conductor)
{
	if (r < 3 || r % 2 == 0)
		throw BadInput("oeps_sl2 requires odd r >= 3");
	int N = pick_conductor(conductor, r, "oeps_sl2");
	CycEl eps = CycEl::root_of_unity(N, r);
	auto F = std::make_shared<HopfFamily>();
	F->name = "oeps_sl2";
	F->display = "O_eps(SL2), r=" + std::to_string(r);
	F->params = {{"r", r}};
	F->conductor = N;
	F->backend = HopfFamily::Backend::OepsSL2;
	F->experimental = true;
	// 0=a, 1=b, 2=c, 3=d; central z1=a^r, z2=b^r, z3=c^r, z4=d^r
	F->gens = {
	    {"a", false, r, cterm(CycEl(1), {1, 0, 0, 0})},
	    {"b", false, r, cterm(CycEl(1), {0, 1, 0, 0})},
	    {"c", false, r, cterm(CycEl(1), {0, 0, 1, 0})},
	    {"d", false, r, cterm(CycEl(1), {0, 0, 0, 1})},
	};
	// ab = eps ba, ac = eps ca, bc = cb, bd = eps db, cd = eps dc
	F->qcomm[{0, 1}] = {eps.inverse(), cmono({0, 0, 0, 0})};
	F->qcomm[{0, 2}] = {eps.inverse(), cmono({0, 0, 0, 0})};
	F->qcomm[{1, 3}] = {eps.inverse(), cmono({0, 0, 0, 0})};
	F->qcomm[{2, 3}] = {eps.inverse(), cmono({0, 0, 0, 0})};
	F->coproduct = {
	    {{CycEl(1), gmono({1, 0, 0, 0}), gmono({1, 0, 0, 0})},
	     {CycEl(1), gmono({0, 1, 0, 0}), gmono({0, 0, 1, 0})}},
	    {{CycEl(1), gmono({1, 0, 0, 0}), gmono({0, 1, 0, 0})},
	     {CycEl(1), gmono({0, 1, 0, 0}), gmono({0, 0, 0, 1})}},
	    {{CycEl(1), gmono({0, 0, 0, 1}), gmono({0, 0, 1, 0})},
	     {CycEl(1), gmono({0, 0, 1, 0}), gmono({1, 0, 0, 0})}},
	    {{CycEl(1), gmono({0, 0, 0, 1}), gmono({0, 0, 0, 1})},
	     {CycEl(1), gmono({0, 0, 1, 0}), gmono({0, 1, 0, 0})}},
	};
	F->counit_gen = {CycEl(1), CycEl(0), CycEl(0), CycEl(1)};
	F->antipode_gen = {
	    {{CycEl(1), gmono({0, 0, 0, 1})}},
	    {{CycEl(0) - eps.inverse(), gmono({0, 1, 0, 0})}},
	    {{CycEl(0) - eps, gmono({0, 0, 1, 0})}},
	    {{CycEl(1), gmono({1, 0, 0, 0})}},
	};
	auto group_like = [](int i, int j) {
		std::vector<long> el(4, 0), er(4, 0);
		el[i] = 1;
		er[j] = 1;
		return std::make_tuple(CycEl(1), cmono(el), cmono(er));
	};
	F->cgens = {
	    {"z1", gmono({r, 0, 0, 0}), false,
	     {group_like(0, 0), group_like(1, 2)}, CycEl(1),
	     cterm(CycEl(1), {0, 0, 0, 1})},
	    {"z2", gmono({0, r, 0, 0}), false,
	     {group_like(0, 1), group_like(1, 3)}, CycEl(0),
	     cterm(CycEl(-1), {0, 1, 0, 0})},
	    {"z3", gmono({0, 0, r, 0}), false,
	     {group_like(3, 2), group_like(2, 0)}, CycEl(0),
	     cterm(CycEl(-1), {0, 0, 1, 0})},
	    {"z4", gmono({0, 0, 0, r}), false,
	     {group_like(3, 3), group_like(2, 1)}, CycEl(1),
	     cterm(CycEl(1), {1, 0, 0, 0})},
	};
	// det = 1 on the central variety
	F->point_relations = {{{CycEl(1), cmono({1, 0, 0, 1})},
	                       {CycEl(-1), cmono({0, 1, 1, 0})},
	                       {CycEl(-1), cmono({0, 0, 0, 0})}}};
	F->ch_degree = r * r * r;
	return F;
}

namespace {

// u_eps(sl2) at a cube root of unity: basis E^a F^b K^c, a,b,c in {0,1,2}
constexpr long UQ_L = 3;
constexpr long UQ_DIM = UQ_L * UQ_L * UQ_L;

long uq_idx(long a, long b, long c) { return a * 9 + b * 3 + c; }

struct UqTerm {
	long a, b, c;
	CycEl coeff;
};

// normal forms of F^b E for b = 0..2, derived from FE = EF - (K - K^2)/(eps - eps^2)
std::vector<std::vector<UqTerm>> uq_fbe_table(const CycEl &eps)
{
	CycEl gamma = (eps - eps.inverse()).inverse();
	std::vector<std::vector<UqTerm>> nf(UQ_L);
	nf[0] = {{1, 0, 0, CycEl(1)}};
	for (long b = 1; b < UQ_L; ++b) {
		std::vector<UqTerm> cur;
		// F^b E = (F^{b-1} E) F - F^{b-1} (K - K^2) gamma
		for (const auto &t : nf[b - 1]) {
			if (t.b + 1 >= UQ_L)
				continue;
			// (E^a F^b K^c) F = eps^{-2c} E^a F^{b+1} K^c
			cur.push_back({t.a, t.b + 1, t.c, t.coeff * pow(eps, -2 * t.c)});
		}
		cur.push_back({0, b - 1, 1, CycEl(0) - gamma});
		cur.push_back({0, b - 1, 2, gamma});
		nf[b] = cur;
	}
	return nf;
}

Vec uq_collect(const std::vector<UqTerm> &terms)
{
	Vec v = zero_vec(UQ_DIM);
	for (const auto &t : terms)
		v(uq_idx(t.a, t.b, t.c)) += t.coeff;
	return v;
}

} // namespace

FiberHopf make_uqsl2_fixture()
{
	const int N = 3;
	CycEl eps = CycEl::root_of_unity(N, UQ_L);
	auto fbe = uq_fbe_table(eps);

	// right multiplication of a basis monomial by each generator
	auto mul_by_K = [&](long a, long b, long c) {
		return std::vector<UqTerm>{{a, b, (c + 1) % UQ_L, CycEl(1)}};
	};
	auto mul_by_F = [&](long a, long b, long c) {
		std::vector<UqTerm> out;
		if (b + 1 < UQ_L)
			out.push_back({a, b + 1, c, pow(eps, -2 * c)});
		return out;
	};
	auto mul_by_E = [&](long a, long b, long c) {
		// (E^a F^b K^c) E = eps^{2c} E^a (F^b E) K^c
		std::vector<UqTerm> out;
		for (const auto &t : fbe[b]) {
			if (a + t.a >= UQ_L)
				continue;
			out.push_back({a + t.a, t.b, (t.c + c) % UQ_L, t.coeff * pow(eps, 2 * c)});
		}
		return out;
	};
	auto right_mul = [&](const Vec &v, int gen) {
		Vec out = zero_vec(UQ_DIM);
		for (long i = 0; i < UQ_DIM; ++i) {
			if (v(i).is_zero())
				continue;
			long a = i / 9, b = (i / 3) % 3, c = i % 3;
			std::vector<UqTerm> terms = gen == 0   ? mul_by_E(a, b, c)
			                            : gen == 1 ? mul_by_F(a, b, c)
			                                       : mul_by_K(a, b, c);
			for (const auto &t : terms)
				out(uq_idx(t.a, t.b, t.c)) += v(i) * t.coeff;
		}
		return out;
	};

	std::vector<std::vector<SCTerm>> sc(UQ_DIM * UQ_DIM);
	std::vector<std::string> labels;
	for (long x = 0; x < UQ_DIM; ++x) {
		long a = x / 9, b = (x / 3) % 3, c = x % 3;
		std::string s;
		auto app = [&](const char *g, long e) {
			if (!e)
				return;
			if (!s.empty())
				s += "*";
			s += g;
			if (e > 1)
				s += "^" + std::to_string(e);
		};
		app("E", a);
		app("F", b);
		app("K", c);
		labels.push_back(s.empty() ? "1" : s);
	}
	for (long x = 0; x < UQ_DIM; ++x) {
		Vec base = zero_vec(UQ_DIM);
		base(x) = CycEl(1);
		for (long y = 0; y < UQ_DIM; ++y) {
			long a = y / 9, b = (y / 3) % 3, c = y % 3;
			Vec prod = base;
			for (long k = 0; k < a; ++k)
				prod = right_mul(prod, 0);
			for (long k = 0; k < b; ++k)
				prod = right_mul(prod, 1);
			for (long k = 0; k < c; ++k)
				prod = right_mul(prod, 2);
			for (long k = 0; k < UQ_DIM; ++k)
				if (!prod(k).is_zero())
					sc[x * UQ_DIM + y].push_back({k, prod(k)});
		}
	}
	Vec unit = zero_vec(UQ_DIM);
	unit(0) = CycEl(1);
	AlgPtr A = make_algebra(UQ_DIM, N, std::move(labels), std::move(sc), unit, true);

	FiberHopf H;
	H.alg = A;
	AlgPtr T = tensor_algebra(*A, *A);
	auto tvec = [&](long i, long j) {
		Vec v = zero_vec(UQ_DIM * UQ_DIM);
		v(i * UQ_DIM + j) = CycEl(1);
		return v;
	};
	// Delta(E) = E(x)1 + K(x)E, Delta(F) = F(x)K^{-1} + 1(x)F, Delta(K) = K(x)K
	Vec dE = Vec(tvec(uq_idx(1, 0, 0), 0) + tvec(uq_idx(0, 0, 1), uq_idx(1, 0, 0)));
	Vec dF = Vec(tvec(uq_idx(0, 1, 0), uq_idx(0, 0, 2)) + tvec(0, uq_idx(0, 1, 0)));
	Vec dK = tvec(uq_idx(0, 0, 1), uq_idx(0, 0, 1));
	H.delta = zeros(UQ_DIM * UQ_DIM, UQ_DIM);
	for (long x = 0; x < UQ_DIM; ++x) {
		long a = x / 9, b = (x / 3) % 3, c = x % 3;
		Vec acc = T->unit;
		for (long k = 0; k < a; ++k)
			acc = mul(*T, acc, dE);
		for (long k = 0; k < b; ++k)
			acc = mul(*T, acc, dF);
		for (long k = 0; k < c; ++k)
			acc = mul(*T, acc, dK);
		H.delta.col(x) = acc;
	}
	H.counit = zero_vec(UQ_DIM);
	for (long c = 0; c < UQ_L; ++c)
		H.counit(uq_idx(0, 0, c)) = CycEl(1);
	// S(E) = -K^{-1}E = -eps E K^2, S(F) = -F K, S(K) = K^2 (anti-homomorphism)
	Vec sE = zero_vec(UQ_DIM), sF = zero_vec(UQ_DIM), sK = zero_vec(UQ_DIM);
	sE(uq_idx(1, 0, 2)) = CycEl(0) - pow(eps, 4);
	sF(uq_idx(0, 1, 1)) = CycEl(-1);
	sK(uq_idx(0, 0, 2)) = CycEl(1);
	H.antipode = zeros(UQ_DIM, UQ_DIM);
	for (long x = 0; x < UQ_DIM; ++x) {
		long a = x / 9, b = (x / 3) % 3, c = x % 3;
		Vec acc = A->unit;
		for (long k = 0; k < c; ++k)
			acc = mul(*A, acc, sK);
		for (long k = 0; k < b; ++k)
			acc = mul(*A, acc, sF);
		for (long k = 0; k < a; ++k)
			acc = mul(*A, acc, sE);
		H.antipode.col(x) = acc;
	}
	return H;
}

FamilyPtr make_fixture_family(const std::string &name,
                              std::shared_ptr<FiberHopf> fix)
{
	auto F = std::make_shared<HopfFamily>();
	F->name = name;
	F->display = name;
	F->conductor = fix->alg->conductor;
	F->backend = HopfFamily::Backend::Fixture;
	F->fixture = std::move(fix);
	F->ch_degree = F->fixture->alg->dim;
	return F;
}

const std::vector<FamilyInfo> &family_catalog()
{
	static const std::vector<FamilyInfo> cat = {
	    {"taft_ext", "Taft extension T(n); identity fiber is the Taft algebra",
	     {"n"}, {{"n", 3}}, false},
	    {"a_family", "A(l,n): x invertible, xy = xi yx, skew-primitive y",
	     {"l", "n"}, {{"l", 2}, {"n", 1}}, false},
	    {"liu", "generalized Liu algebra B(n,w)", {"n", "w"},
	     {{"n", 2}, {"w", 3}}, false},
	    {"infinite_taft", "infinite Taft algebra H(n,t)", {"n", "t"},
	     {{"n", 2}, {"t", 1}}, false},
	    {"qborel_sl2", "quantized Borel of sl2 at an l-th root of unity", {"l"},
	     {{"l", 3}}, false},
	    {"group_ext_d8", "group algebra of D8 over its center", {}, {}, false},
	    {"oeps_sl2", "quantized coordinate ring of SL2 at an r-th root of unity",
	     {"r"}, {{"r", 3}}, true},
	    {"uqsl2", "small quantum group u_eps(sl2), l = 3 (single fiber)", {}, {},
	     false},
	};
	return cat;
}

FamilyPtr build_family(const std::string &name,
                       std::map<std::string, long> params, int conductor)
{
	const FamilyInfo *info = nullptr;
	for (const auto &fi : family_catalog())
		if (fi.name == name)
			info = &fi;
	if (!info)
		throw BadInput("unknown family: " + name);
	for (const auto &[k, v] : params)
		if (!info->defaults.count(k))
			throw BadInput("family " + name + " has no parameter " + k);
	auto get = [&](const std::string &k) {
		auto it = params.find(k);
		return it != params.end() ? it->second : info->defaults.at(k);
	};
	if (name == "taft_ext")
		return make_taft_ext(get("n"), conductor);
	if (name == "a_family")
		return make_a_family(get("l"), get("n"), conductor);
	if (name == "liu")
		return make_liu(get("n"), get("w"), conductor);
	if (name == "infinite_taft")
		return make_infinite_taft(get("n"), get("t"), conductor);
	if (name == "qborel_sl2")
		return make_qborel_sl2(get("l"), conductor);
	if (name == "group_ext_d8")
		return make_group_ext_d8(conductor);
	if (name == "oeps_sl2")
		return make_oeps_sl2(get("r"), conductor);
	if (name == "uqsl2")
		return make_fixture_family(
		    "uqsl2", std::make_shared<FiberHopf>(make_uqsl2_fixture()));
	throw BadInput("unknown family: " + name);
}

std::vector<CentralPoint> sample_points(const HopfFamily &F, long order,
                                        long max_points)
{
	if (order < 1 || F.conductor % order != 0)
		throw BadInput("sample order must divide the working conductor");
	std::vector<std::vector<CycEl>> cand;
	for (const auto &zg : F.cgens) {
		std::vector<CycEl> vals;
		if (!zg.invertible)
			vals.push_back(CycEl(0));
		for (long k = 0; k < order; ++k)
			vals.push_back(CycEl::root_of_unity(F.conductor, order, k));
		cand.push_back(std::move(vals));
	}
	std::vector<CentralPoint> out;
	if (cand.empty()) {
		out.push_back({});
		return out;
	}
	std::vector<size_t> idx(cand.size(), 0);
	while (true) {
		CentralPoint p;
		for (size_t j = 0; j < cand.size(); ++j)
			p.push_back(cand[j][idx[j]]);
		if (point_valid(F, p))
			out.push_back(std::move(p));
		if ((long)out.size() >= max_points)
			break;
		size_t j = cand.size();
		while (j > 0) {
			--j;
			if (++idx[j] < cand[j].size())
				break;
			idx[j] = 0;
			if (j == 0)
				return out;
		}
	}
	return out;
}

} // namespace hopfdisc
