#pragma once
#include "hopfdisc/hopf.hpp"

namespace hopfdisc {

// characteristic polynomial of `a` with respect to the regular trace,
// computed from the power sums tr(a^i) by the Newton recurrence
Poly char_poly_newton(const FinDimAlg &A, const Vec &a);
// same coefficients through exact determinants of trace matrices
Poly char_poly_det(const FinDimAlg &A, const Vec &a);

// p_{n,a}(a) = 0 and tr(1) = dim on seeded random elements
bool cayley_hamilton_check(const FinDimAlg &A, int samples = 12,
                           unsigned long seed = 0xc4a1);

// rank of the trace Gram matrix; equals the square dimension
long gram_rank(const FinDimAlg &A);

// the k-discriminant ideal vanishes at this fiber iff rank(Gram) < k;
// cross-validated against exact determinants of sampled k x k trace minors
bool dk_vanishes(const FinDimAlg &A, long k, int samples = 5,
                 unsigned long seed = 0xd15c);

// level of the lowest discriminant ideal: sd at the identity fiber + 1
long lowest_level(const HopfFamily &F);

struct VarietyRow {
	CentralPoint point;
	long sdim = 0;
};

// square dimension at every point, in input order; jobs > 1 parallelizes
std::vector<VarietyRow> scan_variety(const HopfFamily &F,
                                     const std::vector<CentralPoint> &pts,
                                     int jobs = 1);

} // namespace hopfdisc
