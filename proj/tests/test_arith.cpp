#include <doctest.h>
#include <random>

#include "hopfdisc/cyclotomic.hpp"
#include "hopfdisc/errors.hpp"
#include "hopfdisc/polynomial.hpp"

using namespace hopfdisc;

namespace {

// independent oracle: Phi_N via the Moebius product
// Phi_N(x) = prod_{d | N} (x^{N/d} - 1)^{mu(d)}
int moebius(int n)
{
	int m = 1;
	for (int p = 2; p * p <= n; ++p)
		if (n % p == 0) {
			n /= p;
			if (n % p == 0)
				return 0;
			m = -m;
		}
	if (n > 1)
		m = -m;
	return m;
}

std::vector<Rat> oracle_phi(int N)
{
	std::vector<Rat> num{Rat(1)}, den{Rat(1)};
	auto mul = [](std::vector<Rat> a, int d) {
		// multiply by x^d - 1
		std::vector<Rat> r(a.size() + d, Rat(0));
		for (size_t i = 0; i < a.size(); ++i) {
			r[i + d] += a[i];
			r[i] -= a[i];
		}
		return r;
	};
	for (int d = 1; d <= N; ++d) {
		if (N % d)
			continue;
		int mu = moebius(d);
		if (mu == 1)
			num = mul(num, N / d);
		else if (mu == -1)
			den = mul(den, N / d);
	}
	// exact division num/den
	std::vector<Rat> q(num.size() - den.size() + 1, Rat(0));
	for (long i = (long)q.size() - 1; i >= 0; --i) {
		Rat f = num[i + den.size() - 1] / den.back();
		q[i] = f;
		for (size_t j = 0; j < den.size(); ++j)
			num[i + j] -= f * den[j];
	}
	for (auto &c : num)
		REQUIRE(c == 0);
	return q;
}

CycEl random_element(std::mt19937_64 &rng, int N)
{
	std::uniform_int_distribution<int> d(-4, 4);
	std::vector<Rat> c(euler_phi(N));
	for (auto &x : c)
		x = rat(d(rng), 1 + std::abs(d(rng)));
	return CycEl::from_coords(N, std::move(c));
}

} // namespace

TEST_CASE("cyclotomic polynomials match the Moebius-product oracle")
{
	for (int N : {1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 16, 20, 24, 27})
		CHECK(cyclotomic_polynomial(N) == oracle_phi(N));
}

TEST_CASE("known cyclotomic polynomials")
{
	CHECK(cyclotomic_polynomial(1) == std::vector<Rat>{Rat(-1), Rat(1)});
	CHECK(cyclotomic_polynomial(4) == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
	CHECK(cyclotomic_polynomial(12) ==
	      std::vector<Rat>{Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)});
	CHECK(euler_phi(12) == 4);
	CHECK(euler_phi(1) == 1);
	CHECK(euler_phi(27) == 18);
}

TEST_CASE("basic field identities")
{
	CycEl i = CycEl::zeta(4);
	CHECK(i * i == CycEl(-1));
	CHECK((CycEl(1) + i) * (CycEl(1) - i) == CycEl(2));
	CycEl w = CycEl::zeta(3);
	CHECK(w * w + w + CycEl(1) == CycEl(0));
	CHECK(pow(CycEl::zeta(12), 12) == CycEl(1));
	CHECK(pow(CycEl::zeta(12), 6) == CycEl(-1));
}

TEST_CASE("field axioms on random elements")
{
	std::mt19937_64 rng(20260823);
	for (int N : {4, 8, 12, 9}) {
		for (int t = 0; t < 25; ++t) {
			CycEl a = random_element(rng, N), b = random_element(rng, N),
			      c = random_element(rng, N);
			CHECK(a * (b + c) == a * b + a * c);
			CHECK(a * b == b * a);
			CHECK((a * b) * c == a * (b * c));
			if (!a.is_zero()) {
				CHECK(a * a.inverse() == CycEl(1));
				CHECK((b / a) * a == b);
			}
		}
	}
}

TEST_CASE("embedding is a field homomorphism and preserves the root")
{
	CHECK(CycEl::zeta(6).embedded(12) == pow(CycEl::zeta(12), 2));
	CHECK(CycEl::zeta(3).embedded(12) == pow(CycEl::zeta(12), 4));
	std::mt19937_64 rng(7);
	for (int t = 0; t < 20; ++t) {
		CycEl a = random_element(rng, 6), b = random_element(rng, 6);
		CHECK((a * b).embedded(12) == a.embedded(12) * b.embedded(12));
		CHECK((a + b).embedded(12) == a.embedded(12) + b.embedded(12));
	}
	CHECK_THROWS_AS(CycEl::zeta(8).embedded(12), ConductorMismatch);
	// auto-alignment on divisibility, mismatch otherwise
	CHECK(CycEl::zeta(4) * CycEl(2) == pow(CycEl::zeta(12), 3) + pow(CycEl::zeta(12), 3));
	CHECK_THROWS_AS(CycEl::zeta(8) + CycEl::zeta(12), ConductorMismatch);
}

TEST_CASE("root_of_unity has the exact order requested")
{
	for (auto [N, k] : std::vector<std::pair<int, long>>{
	         {12, 12}, {12, 6}, {12, 4}, {12, 3}, {12, 2}, {12, 1},
	         {3, 6},   {9, 18}, {8, 8},  {1, 2}}) {
		CycEl r = CycEl::root_of_unity(N, k);
		CHECK(pow(r, k) == CycEl(1));
		for (long j = 1; j < k; ++j)
			CHECK(pow(r, j) != CycEl(1));
	}
	CHECK_THROWS_AS(CycEl::root_of_unity(12, 5), BadInput);
	CHECK_THROWS_AS(CycEl::root_of_unity(4, 3), BadInput);
}

TEST_CASE("parse and print round-trip")
{
	std::mt19937_64 rng(99);
	for (int N : {1, 4, 12}) {
		for (int t = 0; t < 20; ++t) {
			CycEl a = random_element(rng, N);
			CHECK(parse_cyc(to_string(a), N) == a);
		}
	}
	CHECK(parse_cyc("1/2 - z + 3*z^2", 12) ==
	      CycEl(Rat(1, 2)) - CycEl::zeta(12) + CycEl(3) * pow(CycEl::zeta(12), 2));
	CHECK(parse_cyc("0", 12).is_zero());
	CHECK(parse_cyc("-z^2", 8) == -pow(CycEl::zeta(8), 2));
	CHECK_THROWS_AS(parse_cyc("", 4), BadInput);
	CHECK_THROWS_AS(parse_cyc("1 +", 4), BadInput);
	CHECK_THROWS_AS(parse_cyc("q", 4), BadInput);
}

TEST_CASE("canonical keys do not depend on the carrying conductor")
{
	// one and the same value reached through different fields keys equally
	CHECK(canonical_key(CycEl(1)) ==
	      canonical_key(pow(CycEl::root_of_unity(12, 3), 3)));
	CHECK(canonical_key(CycEl::root_of_unity(12, 4)) ==
	      canonical_key(CycEl::zeta(4).embedded(12)));
	CHECK(canonical_key(CycEl::zeta(4)) ==
	      canonical_key(CycEl::zeta(4).embedded(8)));
	// distinct values key differently
	CHECK(canonical_key(CycEl::zeta(12)) != canonical_key(CycEl::zeta(4)));
	CHECK(canonical_key(CycEl(0)) != canonical_key(CycEl(1)));
}

TEST_CASE("rational nth roots")
{
	CHECK(rat_nth_root(rat(8), 3) == rat(2));
	CHECK(rat_nth_root(rat(-8), 3) == rat(-2));
	CHECK(rat_nth_root(rat(9, 4), 2) == rat(3, 2));
	CHECK(!rat_nth_root(rat(2), 2));
	CHECK(!rat_nth_root(rat(-4), 2));
	CHECK(rat_nth_root(rat(0), 5) == rat(0));
}

TEST_CASE("binomial equations in the field")
{
	auto r = solve_binomial(2, CycEl(-1), 4);
	REQUIRE(r);
	CHECK(*r * *r == CycEl(-1));
	r = solve_binomial(2, CycEl::zeta(4), 8);
	REQUIRE(r);
	CHECK(*r * *r == CycEl::zeta(4).embedded(8));
	r = solve_binomial(3, CycEl::zeta(3).embedded(9), 9);
	REQUIRE(r);
	CHECK(pow(*r, 3) == CycEl::zeta(3).embedded(9));
	// sqrt(2) is not in Q(zeta_12): must report failure, never approximate
	CHECK(!solve_binomial(2, CycEl(2), 12));
	r = solve_binomial(2, CycEl(Rat(9, 4)), 12);
	REQUIRE(r);
	CHECK(*r * *r == CycEl(Rat(9, 4)));
	// negative rationals pick up a sign from the unit group
	r = solve_binomial(2, CycEl(-4), 4);
	REQUIRE(r);
	CHECK(*r * *r == CycEl(-4));
}

TEST_CASE("polynomial root extraction in the field")
{
	// Phi_12 splits completely over Q(zeta_12)
	Poly phi;
	for (const auto &c : cyclotomic_polynomial(12))
		phi.push_back(CycEl(c));
	auto rr = roots_in_field(phi, 12);
	CHECK(rr.complete);
	CHECK(rr.roots.size() == 4);
	for (const auto &r : rr.roots)
		CHECK(peval(phi, r).is_zero());

	// t^2 - 2 has no root in Q(zeta_12)
	Poly p{CycEl(-2), CycEl(0), CycEl(1)};
	rr = roots_in_field(p, 12);
	CHECK(!rr.complete);
	CHECK(rr.roots.empty());
	CHECK(pdeg(rr.unresolved) == 2);

	// mixed rational roots with multiplicity: (t-1)^2 (t+3) t
	Poly q{CycEl(0), CycEl(1)};
	Poly lin1{CycEl(-1), CycEl(1)};
	q = pmul(q, pmul(lin1, pmul(lin1, Poly{CycEl(3), CycEl(1)})));
	rr = roots_in_field(q, 4);
	CHECK(rr.complete);
	CHECK(rr.roots.size() == 3);

	// quadratic needing a cyclotomic discriminant: (t - z4)(t + 1)
	Poly quad = pmul(Poly{-CycEl::zeta(4), CycEl(1)}, Poly{CycEl(1), CycEl(1)});
	rr = roots_in_field(quad, 4);
	CHECK(rr.complete);
	CHECK(rr.roots.size() == 2);

	// deflation: t^6 = z3 over Q(zeta_9)
	Poly six(7, CycEl(0));
	six[0] = -CycEl::zeta(3).embedded(9);
	six[6] = CycEl(1);
	rr = roots_in_field(six, 9);
	CHECK(rr.roots.size() >= 1);
	for (const auto &r : rr.roots)
		CHECK(pow(r, 6) == CycEl::zeta(3).embedded(9));
}

TEST_CASE("polynomial arithmetic sanity")
{
	Poly a{CycEl(1), CycEl(2), CycEl(1)};        // (t+1)^2
	Poly b{CycEl(1), CycEl(1)};                  // t+1
	auto [quo, rem] = pdivrem(a, b);
	CHECK(quo == b);
	CHECK(pdeg(rem) < 0);
	CHECK(pgcd(a, b) == b);
	CHECK(pderiv(a) == Poly{CycEl(2), CycEl(2)});
	CHECK(peval(a, CycEl(3)) == CycEl(16));
}
