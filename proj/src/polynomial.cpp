#include "hopfdisc/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hopfdisc/errors.hpp"

namespace hopfdisc {

void ptrim(Poly &p)
{
	while (!p.empty() && p.back().is_zero())
		p.pop_back();
}

long pdeg(const Poly &p)
{
	for (long i = (long)p.size() - 1; i >= 0; --i)
		if (!p[i].is_zero())
			return i;
	return -1;
}

Poly padd(const Poly &a, const Poly &b)
{
	Poly r(std::max(a.size(), b.size()), CycEl(0));
	for (size_t i = 0; i < a.size(); ++i)
		r[i] += a[i];
	for (size_t i = 0; i < b.size(); ++i)
		r[i] += b[i];
	ptrim(r);
	return r;
}

Poly psub(const Poly &a, const Poly &b)
{
	Poly r(std::max(a.size(), b.size()), CycEl(0));
	for (size_t i = 0; i < a.size(); ++i)
		r[i] += a[i];
	for (size_t i = 0; i < b.size(); ++i)
		r[i] -= b[i];
	ptrim(r);
	return r;
}

Poly pmul(const Poly &a, const Poly &b)
{
	if (pdeg(a) < 0 || pdeg(b) < 0)
		return {};
	Poly r(a.size() + b.size() - 1, CycEl(0));
	for (size_t i = 0; i < a.size(); ++i)
		if (!a[i].is_zero())
			for (size_t j = 0; j < b.size(); ++j)
				if (!b[j].is_zero())
					r[i + j] += a[i] * b[j];
	ptrim(r);
	return r;
}

std::pair<Poly, Poly> pdivrem(const Poly &a, const Poly &b)
{
	long db = pdeg(b);
	if (db < 0)
		throw Error("polynomial division by zero");
	Poly r = a, q;
	ptrim(r);
	long da = pdeg(r);
	if (da < db)
		return {Poly{}, r};
	q.assign(da - db + 1, CycEl(0));
	CycEl lc = b[db].inverse();
	for (long i = da - db; i >= 0; --i) {
		CycEl f = r[i + db] * lc;
		q[i] = f;
		if (!f.is_zero())
			for (long j = 0; j <= db; ++j)
				r[i + j] -= f * b[j];
	}
	ptrim(r);
	return {q, r};
}

Poly pgcd(Poly a, Poly b)
{
	ptrim(a);
	ptrim(b);
	while (pdeg(b) >= 0) {
		auto [q, r] = pdivrem(a, b);
		a = std::move(b);
		b = std::move(r);
	}
	return pmonic(a);
}

Poly pderiv(const Poly &p)
{
	Poly r;
	for (size_t i = 1; i < p.size(); ++i)
		r.push_back(CycEl((long)i) * p[i]);
	ptrim(r);
	return r;
}

Poly pmonic(const Poly &p)
{
	long d = pdeg(p);
	if (d < 0)
		return {};
	Poly r(p.begin(), p.begin() + d + 1);
	CycEl inv = r[d].inverse();
	for (auto &c : r)
		c *= inv;
	return r;
}

CycEl peval(const Poly &p, const CycEl &x)
{
	CycEl acc(0);
	for (long i = (long)p.size() - 1; i >= 0; --i)
		acc = acc * x + p[i];
	return acc;
}

std::string poly_to_string(const Poly &p, const std::string &var)
{
	long d = pdeg(p);
	if (d < 0)
		return "0";
	std::ostringstream out;
	bool first = true;
	for (long i = d; i >= 0; --i) {
		if (p[i].is_zero())
			continue;
		if (!first)
			out << " + ";
		out << "(" << to_string(p[i]) << ")";
		if (i >= 1)
			out << "*" << var;
		if (i >= 2)
			out << "^" << i;
		first = false;
	}
	return out.str();
}

namespace {

// generator of the full group of roots of unity in Q(zeta_N) and its order
std::pair<CycEl, long> unit_group(int N)
{
	if (N % 2 == 0)
		return {CycEl::zeta(N), N};
	return {-CycEl::zeta(N), 2L * N};
}

// all rational roots of a polynomial with rational coefficients
std::vector<Rat> rational_roots_rp(const std::vector<Rat> &rp)
{
	std::vector<Rat> out;
	long d = (long)rp.size() - 1;
	while (d >= 0 && rp[d] == 0)
		--d;
	if (d < 0)
		return out;
	// clear denominators to integer coefficients
	mpz_class lcm = 1;
	for (long i = 0; i <= d; ++i)
		mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
		        rp[i].get_den().get_mpz_t());
	std::vector<mpz_class> ic(d + 1);
	for (long i = 0; i <= d; ++i) {
		Rat v = rp[i] * Rat(lcm);
		ic[i] = v.get_num();
	}
	long lo = 0;
	while (lo <= d && ic[lo] == 0)
		++lo;
	if (lo > 0)
		out.push_back(Rat(0));
	if (lo > d)
		return out;
	auto divisors = [](mpz_class v) {
		std::vector<mpz_class> ds;
		v = abs(v);
		for (mpz_class i = 1; i * i <= v; ++i)
			if (v % i == 0) {
				ds.push_back(i);
				if (i * i != v)
					ds.push_back(v / i);
			}
		return ds;
	};
	auto evalz = [&](const Rat &r) {
		Rat acc = 0;
		for (long i = d; i >= lo; --i)
			acc = acc * r + Rat(ic[i]);
		return acc == 0;
	};
	for (const auto &pn : divisors(ic[lo]))
		for (const auto &qd : divisors(ic[d])) {
			Rat cand(pn, qd);
			cand.canonicalize();
			if (evalz(cand))
				out.push_back(cand);
			cand = -cand;
			if (evalz(cand))
				out.push_back(cand);
		}
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

std::vector<Rat> rational_roots(const Poly &p)
{
	std::vector<Rat> rp;
	for (const auto &c : p)
		rp.push_back(c.to_rational());
	return rational_roots_rp(rp);
}

bool all_rational(const Poly &p)
{
	for (const auto &c : p)
		if (!c.is_rational())
			return false;
	return true;
}

} // namespace

std::optional<CycEl> solve_binomial(unsigned long m, const CycEl &c, int N)
{
	if (m == 0)
		throw Error("0th root");
	if (c.is_zero())
		return CycEl(0);
	if (m == 1)
		return c;
	auto [g, order] = unit_group(N);
	// write c = q * g^e with q rational > 0, then take m-th roots of both parts
	CycEl u(1);
	CycEl ginv = g.inverse();
	CycEl scan = c;
	for (long e = 0; e < order; ++e) {
		if (scan.is_rational()) {
			Rat q = scan.to_rational();
			long ee = e;
			if (q < 0) {
				q = -q;
				ee = (e + order / 2) % order; // fold the sign into the unit
			}
			auto qr = rat_nth_root(q, m);
			if (qr) {
				// need e' with m*e' = ee (mod order)
				long gmo = std::gcd((long)m, order);
				if (ee % gmo == 0) {
					long mm = (long)(m % order);
					for (long ep = 0; ep < order; ++ep)
						if ((mm * ep) % order == ee % order)
							return CycEl(*qr) * pow(g, ep);
				}
			}
		}
		scan *= ginv;
	}
	// composite orders: chain through a proper factorization, trying all
	// intermediate roots y with y^{m/p} = c
	for (unsigned long p = 2; p * p <= m; ++p) {
		if (m % p)
			continue;
		auto y0 = solve_binomial(m / p, c, N);
		if (!y0)
			continue;
		long gk = std::gcd((long)(m / p), order);
		for (long j = 0; j < gk; ++j) {
			CycEl y = *y0 * pow(g, (order / gk) * j);
			if (auto x = solve_binomial(p, y, N))
				return x;
		}
	}
	return std::nullopt;
}

namespace {

// collects distinct roots of the squarefree monic q; appends to out
void find_roots(Poly q, int N, std::vector<CycEl> &out)
{
	ptrim(q);
	long d = pdeg(q);
	if (d <= 0)
		return;
	q = pmonic(q);
	if (q[0].is_zero()) {
		out.push_back(CycEl(0));
		Poly shifted(q.begin() + 1, q.end());
		find_roots(shifted, N, out);
		return;
	}
	if (d == 1) {
		out.push_back(-q[0]);
		return;
	}
	if (d == 2) {
		// roots via the discriminant; monic: t^2 + b t + c
		CycEl b = q[1], c0 = q[0];
		CycEl disc = b * b - CycEl(4) * c0;
		if (auto s = solve_binomial(2, disc, N)) {
			CycEl half = CycEl(Rat(1, 2));
			CycEl r1 = (-b + *s) * half, r2 = (-b - *s) * half;
			out.push_back(r1);
			if (r2 != r1)
				out.push_back(r2);
			return;
		}
		// fall through to the unit-scan strategy
	}
	if (all_rational(q)) {
		auto rs = rational_roots(q);
		if (!rs.empty()) {
			Poly rem = q;
			for (const auto &r : rs) {
				out.push_back(CycEl(r));
				Poly lin{-CycEl(r), CycEl(1)};
				rem = pdivrem(rem, lin).first;
			}
			find_roots(rem, N, out);
			return;
		}
	}
	// binomial t^d - c
	bool binom = true;
	for (long i = 1; i < d; ++i)
		if (!q[i].is_zero())
			binom = false;
	if (binom) {
		if (auto r0 = solve_binomial((unsigned long)d, -q[0], N)) {
			long order = (N % 2 == 0) ? N : 2L * N;
			long gk = std::gcd((long)d, order);
			for (long j = 0; j < gk; ++j) {
				CycEl r = *r0 * CycEl::root_of_unity(N, gk, j);
				if (peval(q, r).is_zero())
					out.push_back(r);
			}
			return;
		}
	} else {
		// deflation: q(t) = h(t^m) for the largest m dividing all exponents
		long m = 0;
		for (long i = 1; i <= d; ++i)
			if (!q[i].is_zero())
				m = m ? std::gcd(m, i) : i;
		if (m > 1) {
			Poly h;
			for (long i = 0; i <= d; i += m)
				h.push_back(q[i]);
			std::vector<CycEl> hr;
			find_roots(h, N, hr);
			size_t before = out.size();
			for (const auto &hroot : hr) {
				Poly bin(m + 1, CycEl(0));
				bin[0] = -hroot;
				bin[m] = CycEl(1);
				find_roots(bin, N, out);
			}
			if (out.size() > before)
				return;
		}
	}
	// catch-all: all roots of the form rational * root of unity.
	// substituting t = w s gives a polynomial whose rational roots in s are
	// among the rational roots of any single power-basis component.
	auto [g, order] = unit_group(N);
	size_t fdeg = euler_phi(N);
	for (long e = 0; e < order; ++e) {
		CycEl w = pow(g, e);
		std::vector<std::vector<Rat>> comp(fdeg, std::vector<Rat>(d + 1, Rat(0)));
		CycEl wp(1);
		for (long i = 0; i <= d; ++i) {
			CycEl ci = (q[i] * wp).embedded(N);
			for (size_t k = 0; k < ci.coords().size(); ++k)
				comp[k][i] = ci.coords()[k];
			wp *= w;
		}
		// first nonzero component
		for (size_t k = 0; k < fdeg; ++k) {
			bool nz = false;
			for (const auto &c : comp[k])
				if (c != 0)
					nz = true;
			if (!nz)
				continue;
			for (const auto &rr : rational_roots_rp(comp[k])) {
				if (rr == 0)
					continue; // zero handled earlier
				CycEl cand = CycEl(rr) * w;
				if (peval(q, cand).is_zero())
					out.push_back(cand);
			}
			break;
		}
	}
}

} // namespace

RootResult roots_in_field(const Poly &p, int N)
{
	RootResult res;
	Poly q = pmonic(p);
	long d = pdeg(q);
	if (d <= 0)
		return res;
	Poly sq = q;
	Poly g = pgcd(q, pderiv(q));
	if (pdeg(g) > 0)
		sq = pdivrem(q, g).first;
	std::vector<CycEl> raw;
	find_roots(sq, N, raw);
	// dedupe and verify
	Poly rem = sq;
	for (const auto &r : raw) {
		bool seen = false;
		for (const auto &s : res.roots)
			if (s == r)
				seen = true;
		if (seen)
			continue;
		if (!peval(sq, r).is_zero())
			throw InvariantViolation("root finder produced a non-root");
		res.roots.push_back(r);
		Poly lin{-r, CycEl(1)};
		rem = pdivrem(rem, lin).first;
	}
	res.complete = pdeg(rem) <= 0;
	if (!res.complete)
		res.unresolved = rem;
	return res;
}

} // namespace hopfdisc
