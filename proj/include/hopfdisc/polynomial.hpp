#pragma once
#include <string>
#include <utility>
#include <vector>

#include "hopfdisc/cyclotomic.hpp"

namespace hopfdisc {

// dense univariate polynomial over Q(zeta_N), low degree first
using Poly = std::vector<CycEl>;

void ptrim(Poly &p);
long pdeg(const Poly &p); // -1 for the zero polynomial
Poly padd(const Poly &a, const Poly &b);
Poly psub(const Poly &a, const Poly &b);
Poly pmul(const Poly &a, const Poly &b);
std::pair<Poly, Poly> pdivrem(const Poly &a, const Poly &b);
Poly pgcd(Poly a, Poly b); // monic
Poly pderiv(const Poly &p);
Poly pmonic(const Poly &p);
CycEl peval(const Poly &p, const CycEl &x);
std::string poly_to_string(const Poly &p, const std::string &var = "t");

// one solution of t^m = c in Q(zeta_N), if representable there
// (works through rational times root-of-unity decompositions)
std::optional<CycEl> solve_binomial(unsigned long m, const CycEl &c, int N);

struct RootResult {
	std::vector<CycEl> roots; // distinct roots found in Q(zeta_N)
	bool complete = false;    // true iff the squarefree part splits into the roots
	Poly unresolved;          // nontrivial factor with no root found (if any)
};

// roots of p inside Q(zeta_N); never approximates, never leaves the field
RootResult roots_in_field(const Poly &p, int N);

} // namespace hopfdisc
