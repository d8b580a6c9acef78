#include "hopfdisc/rational.hpp"

namespace hopfdisc {

std::string rat_to_string(const Rat &r)
{
	if (r.get_den() == 1)
		return r.get_num().get_str();
	return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(const std::string &s)
{
	if (s.empty())
		throw BadInput("empty rational literal");
	try {
		Rat r(s);
		r.canonicalize();
		return r;
	} catch (const std::invalid_argument &) {
		throw BadInput("malformed rational literal: " + s);
	}
}

Rat rat_pow(const Rat &base, long e)
{
	if (e < 0) {
		if (base == 0)
			throw Error("zero raised to a negative power");
		return 1 / rat_pow(base, -e);
	}
	Rat acc = 1, b = base;
	unsigned long k = static_cast<unsigned long>(e);
	while (k) {
		if (k & 1)
			acc *= b;
		b *= b;
		k >>= 1;
	}
	return acc;
}

std::optional<Rat> rat_nth_root(const Rat &x, unsigned long n)
{
	if (n == 0)
		throw Error("0th root");
	if (n == 1)
		return x;
	if (x == 0)
		return Rat(0);
	if (x < 0 && n % 2 == 0)
		return std::nullopt;
	mpz_class num = x.get_num(), den = x.get_den();
	mpz_class rn, rd;
	bool neg = num < 0;
	mpz_class anum = abs(num);
	if (!mpz_root(rn.get_mpz_t(), anum.get_mpz_t(), n))
		return std::nullopt;
	if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n))
		return std::nullopt;
	Rat r(neg ? mpz_class(-rn) : rn, rd);
	r.canonicalize();
	return r;
}

} // namespace hopfdisc
