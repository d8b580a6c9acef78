#pragma once
#include <string>
#include <vector>

#include "hopfdisc/rational.hpp"

namespace hopfdisc {

unsigned long euler_phi(unsigned long n);

// monic coefficients of the N-th cyclotomic polynomial Phi_N,
// low degree first, size phi(N)+1
std::vector<Rat> cyclotomic_polynomial(int N);

// element of Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1} where z is
// the canonical primitive N-th root. conductor 1 means plain rationals.
//
// mixing rule: binary operations embed the operand whose conductor divides
// the other's; incomparable conductors throw ConductorMismatch.
class CycEl {
public:
	CycEl() : N_(1), c_(1, Rat(0)) {}
	CycEl(int v) : N_(1), c_(1, Rat(v)) {}
	CycEl(long v) : N_(1), c_(1, Rat(v)) {}
	CycEl(const Rat &v) : N_(1), c_(1, v) {}

	static CycEl zeta(int N);
	// primitive `order`-th root of unity (e^{2 pi i/order}), raised to `power`;
	// requires such a root to exist in Q(zeta_N)
	static CycEl root_of_unity(int N, long order, long power = 1);
	static CycEl from_coords(int N, std::vector<Rat> coords);

	int conductor() const { return N_; }
	const std::vector<Rat> &coords() const { return c_; }

	bool is_zero() const;
	bool is_rational() const;
	Rat to_rational() const; // throws Error if not rational

	// canonical embedding into Q(zeta_M); requires conductor | M
	CycEl embedded(int M) const;

	CycEl operator-() const;
	CycEl &operator+=(const CycEl &o);
	CycEl &operator-=(const CycEl &o);
	CycEl &operator*=(const CycEl &o);
	CycEl &operator/=(const CycEl &o);
	CycEl inverse() const;

	friend CycEl operator+(CycEl a, const CycEl &b) { return a += b; }
	friend CycEl operator-(CycEl a, const CycEl &b) { return a -= b; }
	friend CycEl operator*(CycEl a, const CycEl &b) { return a *= b; }
	friend CycEl operator/(CycEl a, const CycEl &b) { return a /= b; }
	friend bool operator==(const CycEl &a, const CycEl &b);
	friend bool operator!=(const CycEl &a, const CycEl &b) { return !(a == b); }

private:
	int N_;
	std::vector<Rat> c_;
	void trim_check();
};

CycEl pow(const CycEl &x, long e);

// textual form "a0 + a1*z + a2*z^2" with z = zeta_N, rationals as p/q
std::string to_string(const CycEl &x);
std::ostream &operator<<(std::ostream &os, const CycEl &x);
CycEl parse_cyc(const std::string &s, int N);

// deterministic key for use in ordered containers / fiber caches
std::string canonical_key(const CycEl &x);

} // namespace hopfdisc
