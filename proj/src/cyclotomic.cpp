#include "hopfdisc/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hopfdisc/errors.hpp"

namespace hopfdisc {

namespace {

using RPoly = std::vector<Rat>; // dense, low degree first, possibly untrimmed

void rtrim(RPoly &p)
{
	while (p.size() > 1 && p.back() == 0)
		p.pop_back();
}

// exact division, remainder must vanish
RPoly rdiv_exact(const RPoly &a, const RPoly &b)
{
	RPoly r = a, q(std::max<size_t>(a.size() - b.size() + 1, 1), Rat(0));
	rtrim(r);
	for (long i = (long)r.size() - (long)b.size(); i >= 0; --i) {
		Rat f = r[i + b.size() - 1] / b.back();
		q[i] = f;
		if (f != 0)
			for (size_t j = 0; j < b.size(); ++j)
				r[i + j] -= f * b[j];
	}
	rtrim(r);
	if (!(r.size() == 1 && r[0] == 0))
		throw InvariantViolation("inexact cyclotomic polynomial division");
	return q;
}

struct CycloField {
	int N;
	size_t deg;
	RPoly phi;                     // Phi_N, monic, size deg+1
	std::vector<RPoly> red;        // red[k] = z^{deg+k} reduced, size deg
};

const CycloField &field(int N)
{
	static std::mutex mu;
	static std::map<int, std::unique_ptr<CycloField>> cache;
	std::lock_guard<std::mutex> lk(mu);
	auto it = cache.find(N);
	if (it != cache.end())
		return *it->second;
	auto f = std::make_unique<CycloField>();
	f->N = N;
	f->phi = cyclotomic_polynomial(N);
	f->deg = f->phi.size() - 1;
	// z^{deg} = -(phi minus leading term); higher powers by shifting
	RPoly cur(f->deg, Rat(0));
	for (size_t i = 0; i < f->deg; ++i)
		cur[i] = -f->phi[i];
	f->red.push_back(cur);
	for (size_t k = 1; k + 1 < f->deg; ++k) {
		RPoly nxt(f->deg, Rat(0));
		Rat top = cur[f->deg - 1];
		for (size_t i = 0; i + 1 < f->deg; ++i)
			nxt[i + 1] = cur[i];
		if (top != 0)
			for (size_t i = 0; i < f->deg; ++i)
				nxt[i] += top * f->red[0][i];
		f->red.push_back(nxt);
		cur = nxt;
	}
	auto &ref = *f;
	cache.emplace(N, std::move(f));
	return ref;
}

} // namespace

unsigned long euler_phi(unsigned long n)
{
	unsigned long r = n;
	for (unsigned long p = 2; p * p <= n; ++p)
		if (n % p == 0) {
			while (n % p == 0)
				n /= p;
			r -= r / p;
		}
	if (n > 1)
		r -= r / n;
	return r;
}

std::vector<Rat> cyclotomic_polynomial(int N)
{
	if (N < 1)
		throw BadInput("conductor must be positive");
	// Phi_N = (x^N - 1) / prod of Phi_d over proper divisors d
	std::map<int, RPoly> phis;
	for (int d = 1; d <= N; ++d) {
		if (N % d)
			continue;
		RPoly p(d + 1, Rat(0));
		p[0] = -1;
		p[d] = 1;
		for (auto &[e, q] : phis)
			if (d % e == 0)
				p = rdiv_exact(p, q);
		phis[d] = std::move(p);
	}
	return phis[N];
}

CycEl CycEl::from_coords(int N, std::vector<Rat> coords)
{
	const auto &f = field(N);
	if (coords.size() != f.deg)
		throw BadInput("coordinate vector has wrong length for conductor");
	CycEl x;
	x.N_ = N;
	x.c_ = std::move(coords);
	return x;
}

CycEl CycEl::zeta(int N)
{
	const auto &f = field(N);
	std::vector<Rat> c(f.deg, Rat(0));
	if (f.deg == 1) {
		// N is 1 or 2: zeta is rational
		c[0] = (N == 1) ? 1 : -1;
	} else
		c[1] = 1;
	return from_coords(N, std::move(c));
}

CycEl CycEl::root_of_unity(int N, long order, long power)
{
	if (order < 1)
		throw BadInput("root order must be positive");
	long k = ((power % order) + order) % order;
	if (N % order == 0)
		return pow(zeta(N), (N / order) * k);
	// odd conductor still contains 2N-th roots via -zeta
	if (N % 2 == 1 && order % 2 == 0 && N % (order / 2) == 0) {
		long j = order / 2; // odd since order does not divide N
		// -zeta_j generates the 2j-th roots; find s with (-zeta_j)^s = e^{2 pi i/2j}
		// (-zeta_j)^s = e^{pi i s (j+2)/j}, need s*(j+2) = 1 mod 2j
		long target = 1, mod = 2 * j, a = (j + 2) % mod, s = -1;
		for (long t = 0; t < mod; ++t)
			if ((a * t) % mod == target) {
				s = t;
				break;
			}
		if (s < 0)
			throw InvariantViolation("no modular inverse for root of unity");
		CycEl base = pow(-pow(zeta(N), N / j), s);
		return pow(base, k);
	}
	throw BadInput("Q(zeta_" + std::to_string(N) + ") has no primitive " +
	               std::to_string(order) + "-th root of unity");
}

bool CycEl::is_zero() const
{
	for (const auto &a : c_)
		if (a != 0)
			return false;
	return true;
}

bool CycEl::is_rational() const
{
	for (size_t i = 1; i < c_.size(); ++i)
		if (c_[i] != 0)
			return false;
	return true;
}

Rat CycEl::to_rational() const
{
	if (!is_rational())
		throw Error("cyclotomic element is not rational: " + to_string(*this));
	return c_[0];
}

CycEl CycEl::embedded(int M) const
{
	if (M == N_)
		return *this;
	if (M % N_ != 0)
		throw ConductorMismatch("cannot embed conductor " + std::to_string(N_) +
		                        " into " + std::to_string(M));
	size_t dm = field(M).deg;
	if (N_ == 1) {
		std::vector<Rat> c(dm, Rat(0));
		c[0] = c_[0];
		return from_coords(M, std::move(c));
	}
	// zeta_N -> zeta_M^{M/N}: evaluate the coordinate polynomial
	CycEl z = pow(zeta(M), M / N_);
	CycEl acc = from_coords(M, std::vector<Rat>(dm, Rat(0)));
	std::vector<Rat> onec(dm, Rat(0));
	onec[0] = 1;
	CycEl p = from_coords(M, std::move(onec));
	for (const auto &a : c_) {
		if (a != 0) {
			CycEl t = p;
			for (auto &tc2 : t.c_)
				tc2 *= a;
			acc += t;
		}
		p *= z;
	}
	return acc;
}

void CycEl::trim_check() {}

CycEl CycEl::operator-() const
{
	CycEl r = *this;
	for (auto &a : r.c_)
		a = -a;
	return r;
}

namespace {
// align two elements to a common conductor (one must divide the other)
void align(CycEl &a, CycEl &b)
{
	if (a.conductor() == b.conductor())
		return;
	if (b.conductor() % a.conductor() == 0)
		a = a.embedded(b.conductor());
	else if (a.conductor() % b.conductor() == 0)
		b = b.embedded(a.conductor());
	else
		throw ConductorMismatch(
		    "incompatible conductors " + std::to_string(a.conductor()) + " and " +
		    std::to_string(b.conductor()) + "; embed explicitly");
}
} // namespace

CycEl &CycEl::operator+=(const CycEl &o)
{
	CycEl b = o;
	align(*this, b);
	for (size_t i = 0; i < c_.size(); ++i)
		c_[i] += b.c_[i];
	return *this;
}

CycEl &CycEl::operator-=(const CycEl &o)
{
	CycEl b = o;
	align(*this, b);
	for (size_t i = 0; i < c_.size(); ++i)
		c_[i] -= b.c_[i];
	return *this;
}

CycEl &CycEl::operator*=(const CycEl &o)
{
	CycEl b = o;
	align(*this, b);
	const auto &f = field(N_);
	size_t d = f.deg;
	std::vector<Rat> conv(2 * d - 1, Rat(0));
	for (size_t i = 0; i < d; ++i) {
		if (c_[i] == 0)
			continue;
		for (size_t j = 0; j < d; ++j)
			if (b.c_[j] != 0)
				conv[i + j] += c_[i] * b.c_[j];
	}
	std::vector<Rat> res(conv.begin(), conv.begin() + d);
	for (size_t k = 0; k + 1 < d; ++k)
		if (conv[d + k] != 0)
			for (size_t i = 0; i < d; ++i)
				res[i] += conv[d + k] * f.red[k][i];
	c_ = std::move(res);
	return *this;
}

CycEl CycEl::inverse() const
{
	if (is_zero())
		throw Error("division by zero in cyclotomic field");
	if (N_ == 1) {
		CycEl r;
		r.c_[0] = 1 / c_[0];
		return r;
	}
	// extended Euclid: u * this + v * Phi_N = gcd = const
	const auto &f = field(N_);
	RPoly r0 = f.phi, r1(c_);
	rtrim(r1);
	RPoly u0{Rat(0)}, u1{Rat(1)};
	while (!(r1.size() == 1 && r1[0] == 0)) {
		// divide r0 by r1
		RPoly q(std::max<size_t>(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 1), Rat(0));
		RPoly rem = r0;
		for (long i = (long)rem.size() - (long)r1.size(); i >= 0; --i) {
			Rat fq = rem[i + r1.size() - 1] / r1.back();
			q[i] = fq;
			if (fq != 0)
				for (size_t j = 0; j < r1.size(); ++j)
					rem[i + j] -= fq * r1[j];
		}
		rtrim(rem);
		// u2 = u0 - q*u1
		RPoly qu(q.size() + u1.size() - 1, Rat(0));
		for (size_t i = 0; i < q.size(); ++i)
			if (q[i] != 0)
				for (size_t j = 0; j < u1.size(); ++j)
					qu[i + j] += q[i] * u1[j];
		RPoly u2(std::max(u0.size(), qu.size()), Rat(0));
		for (size_t i = 0; i < u0.size(); ++i)
			u2[i] += u0[i];
		for (size_t i = 0; i < qu.size(); ++i)
			u2[i] -= qu[i];
		rtrim(u2);
		r0 = std::move(r1);
		r1 = std::move(rem);
		u0 = std::move(u1);
		u1 = std::move(u2);
	}
	if (r0.size() != 1)
		throw InvariantViolation("gcd with Phi_N is not constant");
	std::vector<Rat> res(f.deg, Rat(0));
	for (size_t i = 0; i < u0.size() && i < f.deg; ++i)
		res[i] = u0[i] / r0[0];
	if (u0.size() > f.deg)
		throw InvariantViolation("inverse exceeds field degree");
	return from_coords(N_, std::move(res));
}

CycEl &CycEl::operator/=(const CycEl &o)
{
	CycEl b = o;
	align(*this, b);
	return *this *= b.inverse();
}

bool operator==(const CycEl &a, const CycEl &b)
{
	CycEl x = a, y = b;
	align(x, y);
	return x.c_ == y.c_;
}

CycEl pow(const CycEl &x, long e)
{
	if (e < 0)
		return pow(x.inverse(), -e);
	CycEl acc(1), b = x;
	unsigned long k = static_cast<unsigned long>(e);
	while (k) {
		if (k & 1)
			acc *= b;
		b *= b;
		k >>= 1;
	}
	return acc;
}

std::string to_string(const CycEl &x)
{
	const auto &c = x.coords();
	std::ostringstream out;
	bool first = true;
	for (size_t i = 0; i < c.size(); ++i) {
		if (c[i] == 0)
			continue;
		Rat a = c[i];
		if (first) {
			if (a < 0) {
				out << "-";
				a = -a;
			}
		} else
			out << (a < 0 ? " - " : " + "), a = abs(a);
		if (i == 0)
			out << rat_to_string(a);
		else {
			if (a != 1)
				out << rat_to_string(a) << "*";
			out << "z";
			if (i > 1)
				out << "^" << i;
		}
		first = false;
	}
	if (first)
		out << "0";
	return out.str();
}

std::ostream &operator<<(std::ostream &os, const CycEl &x)
{
	return os << to_string(x);
}

namespace {

// coordinates of y in the span of the given vectors, if any (plain Gaussian
// elimination over the rationals)
std::optional<std::vector<Rat>> rat_solve(std::vector<std::vector<Rat>> cols,
                                          std::vector<Rat> y)
{
	size_t rows = y.size(), n = cols.size();
	std::vector<Rat> sol(n, Rat(0));
	std::vector<long> pivot_row(n, -1);
	size_t r = 0;
	for (size_t c = 0; c < n && r < rows; ++c) {
		size_t piv = r;
		while (piv < rows && cols[c][piv] == 0)
			++piv;
		if (piv == rows)
			continue;
		for (size_t cc = 0; cc < n; ++cc)
			std::swap(cols[cc][piv], cols[cc][r]);
		std::swap(y[piv], y[r]);
		Rat inv = 1 / cols[c][r];
		for (size_t i = 0; i < rows; ++i) {
			if (i == r || cols[c][i] == 0)
				continue;
			Rat f = cols[c][i] * inv;
			for (size_t cc = c; cc < n; ++cc)
				cols[cc][i] -= f * cols[cc][r];
			y[i] -= f * y[r];
		}
		pivot_row[c] = (long)r;
		++r;
	}
	for (size_t c = 0; c < n; ++c)
		if (pivot_row[c] >= 0)
			sol[c] = y[pivot_row[c]] / cols[c][pivot_row[c]];
	// possibly inconsistent; the caller verifies the candidate it builds
	return sol;
}

} // namespace

// deterministic key, independent of the conductor the value is carried in:
// the element is rewritten over the smallest cyclotomic subfield containing it
std::string canonical_key(const CycEl &x)
{
	int N = x.conductor();
	for (int d = 1; d < N; ++d) {
		if (N % d != 0)
			continue;
		size_t deg = euler_phi((unsigned long)d);
		std::vector<std::vector<Rat>> cols;
		CycEl zpow(1);
		CycEl z = CycEl::zeta(d).embedded(N);
		for (size_t j = 0; j < deg; ++j) {
			cols.push_back(zpow.embedded(N).coords());
			zpow *= z;
		}
		auto sol = rat_solve(cols, x.coords());
		if (!sol)
			continue;
		// verify the candidate before trusting the elimination
		CycEl cand = CycEl::from_coords(d, *sol);
		if (cand.embedded(N) == x)
			return std::to_string(d) + "|" + to_string(cand);
	}
	return std::to_string(N) + "|" + to_string(x);
}

CycEl parse_cyc(const std::string &s, int N)
{
	const auto &f = field(N);
	std::vector<Rat> coords(f.deg, Rat(0));
	size_t i = 0, n = s.size();
	auto skipws = [&] { while (i < n && isspace((unsigned char)s[i])) ++i; };
	skipws();
	if (i == n)
		throw BadInput("empty cyclotomic literal");
	bool any = false;
	while (true) {
		skipws();
		if (i == n)
			break;
		int sign = 1;
		if (s[i] == '+' || s[i] == '-') {
			if (s[i] == '-')
				sign = -1;
			++i;
			skipws();
		} else if (any)
			throw BadInput("expected + or - in cyclotomic literal: " + s);
		// term: [rat] [* ] [z [^k]]
		Rat coeff = 1;
		bool have_coeff = false;
		if (i < n && (isdigit((unsigned char)s[i]))) {
			size_t j = i;
			while (j < n && (isdigit((unsigned char)s[j]) || s[j] == '/'))
				++j;
			coeff = parse_rat(s.substr(i, j - i));
			i = j;
			have_coeff = true;
			skipws();
			if (i < n && s[i] == '*') {
				++i;
				skipws();
			}
		}
		long expo = 0;
		if (i < n && s[i] == 'z') {
			++i;
			expo = 1;
			if (i < n && s[i] == '^') {
				++i;
				size_t j = i;
				if (j < n && s[j] == '-')
					++j;
				while (j < n && isdigit((unsigned char)s[j]))
					++j;
				if (j == i)
					throw BadInput("missing exponent in cyclotomic literal: " + s);
				expo = std::stol(s.substr(i, j - i));
				i = j;
			}
		} else if (!have_coeff)
			throw BadInput("malformed term in cyclotomic literal: " + s);
		CycEl term = pow(CycEl::zeta(N), expo);
		std::vector<Rat> tc = term.coords();
		for (size_t k = 0; k < tc.size(); ++k)
			coords[k] += Rat(sign) * coeff * tc[k];
		any = true;
		skipws();
	}
	if (!any)
		throw BadInput("empty cyclotomic literal");
	return CycEl::from_coords(N, std::move(coords));
}

} // namespace hopfdisc
