#pragma once
#include <gmpxx.h>
#include <optional>
#include <string>

#include "hopfdisc/errors.hpp"

namespace hopfdisc {

// exact rational scalar; always kept in canonical (reduced, positive
// denominator) form by GMP
using Rat = mpq_class;

inline Rat rat(long num, long den = 1)
{
	Rat r(num, den);
	r.canonicalize();
	return r;
}

std::string rat_to_string(const Rat &r);

// parses "p", "-p/q" etc.; throws BadInput
Rat parse_rat(const std::string &s);

Rat rat_pow(const Rat &base, long e);

// exact n-th root if it exists (n >= 1); nullopt otherwise.
// for even n only the nonnegative root is reported.
std::optional<Rat> rat_nth_root(const Rat &x, unsigned long n);

} // namespace hopfdisc
