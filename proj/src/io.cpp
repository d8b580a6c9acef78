#include "hopfdisc/io.hpp"

#include <fstream>
#include <sstream>

#include "hopfdisc/errors.hpp"
#include "json.hpp"

namespace hopfdisc {

using nlohmann::json;

std::string read_file(const std::string &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw BadInput("cannot open file: " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void write_file(const std::string &path, const std::string &text)
{
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw BadInput("cannot write file: " + path);
	out << text;
}

// ---------------------------------------------------------------- JSON

static json algebra_json(const FinDimAlg &A)
{
	json j;
	j["schema_version"] = 1;
	j["kind"] = "algebra";
	j["dim"] = A.dim;
	j["conductor"] = A.conductor;
	j["labels"] = A.labels;
	json unit = json::array();
	for (long i = 0; i < A.dim; ++i)
		unit.push_back(to_string(A.unit(i)));
	j["unit"] = unit;
	json sc = json::array();
	for (long i = 0; i < A.dim; ++i)
		for (long jj = 0; jj < A.dim; ++jj) {
			const auto &terms = A.sc[i * A.dim + jj];
			if (terms.empty())
				continue;
			json row = json::array();
			row.push_back(i);
			row.push_back(jj);
			json ts = json::array();
			for (const auto &t : terms)
				ts.push_back(json::array({t.k, to_string(t.c)}));
			row.push_back(ts);
			sc.push_back(row);
		}
	j["sc"] = sc;
	return j;
}

static void check_schema(const json &j, const char *kind)
{
	if (!j.is_object() || !j.contains("schema_version"))
		throw BadInput("missing schema_version");
	if (j["schema_version"].get<long>() != 1)
		throw BadInput("unsupported schema_version");
	if (!j.contains("kind") || j["kind"].get<std::string>() != kind)
		throw BadInput(std::string("expected kind \"") + kind + "\"");
}

static AlgPtr algebra_from(const json &j)
{
	long dim = j.at("dim").get<long>();
	int N = j.at("conductor").get<int>();
	if (dim <= 0 || N < 1)
		throw BadInput("invalid dimension or conductor");
	std::vector<std::string> labels =
	    j.at("labels").get<std::vector<std::string>>();
	if ((long)labels.size() != dim)
		throw BadInput("label count does not match dimension");
	const json &ju = j.at("unit");
	if ((long)ju.size() != dim)
		throw BadInput("unit vector length does not match dimension");
	Vec unit = zero_vec(dim);
	for (long i = 0; i < dim; ++i)
		unit(i) = parse_cyc(ju[i].get<std::string>(), N);
	std::vector<std::vector<SCTerm>> sc(dim * dim);
	for (const json &row : j.at("sc")) {
		long i = row.at(0).get<long>(), jj = row.at(1).get<long>();
		if (i < 0 || i >= dim || jj < 0 || jj >= dim)
			throw BadInput("structure constant index out of range");
		std::vector<SCTerm> terms;
		for (const json &t : row.at(2)) {
			long k = t.at(0).get<long>();
			if (k < 0 || k >= dim)
				throw BadInput("structure constant index out of range");
			terms.push_back({k, parse_cyc(t.at(1).get<std::string>(), N)});
		}
		sc[i * dim + jj] = std::move(terms);
	}
	return make_algebra(dim, N, std::move(labels), std::move(sc),
	                    std::move(unit), true);
}

std::string algebra_to_json(const FinDimAlg &A)
{
	return algebra_json(A).dump(1, '\t') + "\n";
}

AlgPtr algebra_from_json(const std::string &text)
{
	json j = json::parse(text, nullptr, false);
	if (j.is_discarded())
		throw BadInput("malformed JSON");
	check_schema(j, "algebra");
	return algebra_from(j);
}

static json sparse_mat_json(const Mat &M)
{
	json out = json::array();
	for (long c = 0; c < M.cols(); ++c)
		for (long r = 0; r < M.rows(); ++r)
			if (!M(r, c).is_zero())
				out.push_back(json::array({r, c, to_string(M(r, c))}));
	return out;
}

static Mat sparse_mat_from(const json &j, long rows, long cols, int N)
{
	Mat M = zeros(rows, cols);
	for (const json &e : j) {
		long r = e.at(0).get<long>(), c = e.at(1).get<long>();
		if (r < 0 || r >= rows || c < 0 || c >= cols)
			throw BadInput("matrix entry index out of range");
		M(r, c) = parse_cyc(e.at(2).get<std::string>(), N);
	}
	return M;
}

std::string fiber_hopf_to_json(const FiberHopf &H)
{
	json j;
	j["schema_version"] = 1;
	j["kind"] = "fiber_hopf";
	j["algebra"] = algebra_json(*H.alg);
	j["algebra"]["kind"] = "algebra";
	j["delta"] = sparse_mat_json(H.delta);
	json ce = json::array();
	for (long i = 0; i < H.counit.size(); ++i)
		ce.push_back(to_string(H.counit(i)));
	j["counit"] = ce;
	j["antipode"] = sparse_mat_json(H.antipode);
	return j.dump(1, '\t') + "\n";
}

std::shared_ptr<FiberHopf> fiber_hopf_from_json(const std::string &text)
{
	json j = json::parse(text, nullptr, false);
	if (j.is_discarded())
		throw BadInput("malformed JSON");
	check_schema(j, "fiber_hopf");
	auto H = std::make_shared<FiberHopf>();
	check_schema(j.at("algebra"), "algebra");
	H->alg = algebra_from(j.at("algebra"));
	long d = H->alg->dim;
	int N = H->alg->conductor;
	H->delta = sparse_mat_from(j.at("delta"), d * d, d, N);
	const json &ce = j.at("counit");
	if ((long)ce.size() != d)
		throw BadInput("counit length does not match dimension");
	H->counit = zero_vec(d);
	for (long i = 0; i < d; ++i)
		H->counit(i) = parse_cyc(ce[i].get<std::string>(), N);
	H->antipode = sparse_mat_from(j.at("antipode"), d, d, N);
	return H;
}

// ---------------------------------------------------------------- TOML

namespace {

std::string cyc_str(const CycEl &c) { return "(" + to_string(c) + ")"; }

std::string int_list(const std::vector<long> &e)
{
	std::string s = "[";
	for (size_t i = 0; i < e.size(); ++i)
		s += (i ? "," : "") + std::to_string(e[i]);
	return s + "]";
}

std::string cpoly_str(const CPoly &p)
{
	if (p.empty())
		return "0";
	std::string s;
	for (size_t i = 0; i < p.size(); ++i)
		s += (i ? " + " : "") + cyc_str(p[i].coeff) + ":" + int_list(p[i].m.e);
	return s;
}

std::string gpoly_str(const std::vector<std::pair<CycEl, GenMonomial>> &p)
{
	if (p.empty())
		return "0";
	std::string s;
	for (size_t i = 0; i < p.size(); ++i)
		s += (i ? " + " : "") + cyc_str(p[i].first) + ":" +
		     int_list(p[i].second.e);
	return s;
}

std::string skew_str(const std::vector<SkewTerm> &terms)
{
	if (terms.empty())
		return "0";
	std::string s;
	for (size_t i = 0; i < terms.size(); ++i)
		s += (i ? " + " : "") + cyc_str(terms[i].coeff) + ":" +
		     int_list(terms[i].left.e) + "x" + int_list(terms[i].right.e);
	return s;
}

std::string ccop_str(
    const std::vector<std::tuple<CycEl, CMonomial, CMonomial>> &terms)
{
	if (terms.empty())
		return "0";
	std::string s;
	for (size_t i = 0; i < terms.size(); ++i) {
		const auto &[c, l, r] = terms[i];
		s += (i ? " + " : "") + cyc_str(c) + ":" + int_list(l.e) + "x" +
		     int_list(r.e);
	}
	return s;
}

std::string quote(const std::string &s) { return "\"" + s + "\""; }

// --- parsing helpers: terms are joined by " + " at paren depth zero

std::string trim(const std::string &s)
{
	size_t a = s.find_first_not_of(" \t\r\n");
	if (a == std::string::npos)
		return "";
	size_t b = s.find_last_not_of(" \t\r\n");
	return s.substr(a, b - a + 1);
}

std::vector<std::string> split_terms(const std::string &s)
{
	std::vector<std::string> out;
	int depth = 0;
	size_t start = 0;
	for (size_t i = 0; i < s.size(); ++i) {
		if (s[i] == '(')
			++depth;
		else if (s[i] == ')')
			--depth;
		else if (depth == 0 && s[i] == '+') {
			out.push_back(trim(s.substr(start, i - start)));
			start = i + 1;
		}
	}
	out.push_back(trim(s.substr(start)));
	return out;
}

CycEl parse_paren_cyc(const std::string &s, size_t &pos, int N)
{
	if (pos >= s.size() || s[pos] != '(')
		throw BadInput("expected '(' in \"" + s + "\"");
	size_t close = s.find(')', pos);
	if (close == std::string::npos)
		throw BadInput("unbalanced parentheses in \"" + s + "\"");
	CycEl c = parse_cyc(s.substr(pos + 1, close - pos - 1), N);
	pos = close + 1;
	return c;
}

std::vector<long> parse_int_list(const std::string &s, size_t &pos)
{
	if (pos >= s.size() || s[pos] != '[')
		throw BadInput("expected '[' in \"" + s + "\"");
	size_t close = s.find(']', pos);
	if (close == std::string::npos)
		throw BadInput("unbalanced brackets in \"" + s + "\"");
	std::string body = s.substr(pos + 1, close - pos - 1);
	pos = close + 1;
	std::vector<long> out;
	if (trim(body).empty())
		return out;
	std::istringstream ss(body);
	std::string tok;
	while (std::getline(ss, tok, ','))
		out.push_back(std::stol(trim(tok)));
	return out;
}

void expect_char(const std::string &s, size_t &pos, char c)
{
	if (pos >= s.size() || s[pos] != c)
		throw BadInput(std::string("expected '") + c + "' in \"" + s + "\"");
	++pos;
}

CPoly parse_cpoly(const std::string &s, int N, size_t arity)
{
	CPoly out;
	if (trim(s) == "0")
		return out;
	for (const std::string &term : split_terms(s)) {
		size_t pos = 0;
		CycEl c = parse_paren_cyc(term, pos, N);
		expect_char(term, pos, ':');
		std::vector<long> e = parse_int_list(term, pos);
		if (e.size() != arity)
			throw BadInput("central monomial arity mismatch in \"" + term + "\"");
		out.push_back({c, CMonomial{std::move(e)}});
	}
	return out;
}

std::vector<std::pair<CycEl, GenMonomial>>
parse_gpoly(const std::string &s, int N, size_t arity)
{
	std::vector<std::pair<CycEl, GenMonomial>> out;
	if (trim(s) == "0")
		return out;
	for (const std::string &term : split_terms(s)) {
		size_t pos = 0;
		CycEl c = parse_paren_cyc(term, pos, N);
		expect_char(term, pos, ':');
		std::vector<long> e = parse_int_list(term, pos);
		if (e.size() != arity)
			throw BadInput("monomial arity mismatch in \"" + term + "\"");
		out.emplace_back(c, GenMonomial{std::move(e)});
	}
	return out;
}

std::vector<SkewTerm> parse_skew(const std::string &s, int N, size_t arity)
{
	std::vector<SkewTerm> out;
	if (trim(s) == "0")
		return out;
	for (const std::string &term : split_terms(s)) {
		size_t pos = 0;
		SkewTerm t;
		t.coeff = parse_paren_cyc(term, pos, N);
		expect_char(term, pos, ':');
		t.left.e = parse_int_list(term, pos);
		expect_char(term, pos, 'x');
		t.right.e = parse_int_list(term, pos);
		if (t.left.e.size() != arity || t.right.e.size() != arity)
			throw BadInput("monomial arity mismatch in \"" + term + "\"");
		out.push_back(std::move(t));
	}
	return out;
}

std::vector<std::tuple<CycEl, CMonomial, CMonomial>>
parse_ccop(const std::string &s, int N, size_t arity)
{
	std::vector<std::tuple<CycEl, CMonomial, CMonomial>> out;
	if (trim(s) == "0")
		return out;
	for (const std::string &term : split_terms(s)) {
		size_t pos = 0;
		CycEl c = parse_paren_cyc(term, pos, N);
		expect_char(term, pos, ':');
		CMonomial l{parse_int_list(term, pos)};
		expect_char(term, pos, 'x');
		CMonomial r{parse_int_list(term, pos)};
		if (l.e.size() != arity || r.e.size() != arity)
			throw BadInput("central monomial arity mismatch in \"" + term + "\"");
		out.emplace_back(c, std::move(l), std::move(r));
	}
	return out;
}

// sections -> ordered (key, value) pairs; values keep their raw token form
using TomlDoc =
    std::map<std::string, std::vector<std::pair<std::string, std::string>>>;

TomlDoc parse_toml(const std::string &text)
{
	TomlDoc doc;
	std::string section;
	std::istringstream in(text);
	std::string line;
	while (std::getline(in, line)) {
		// comments start with '#' outside of quoted strings
		bool quoted = false;
		for (size_t i = 0; i < line.size(); ++i) {
			if (line[i] == '"')
				quoted = !quoted;
			else if (line[i] == '#' && !quoted) {
				line = line.substr(0, i);
				break;
			}
		}
		line = trim(line);
		if (line.empty())
			continue;
		if (line.front() == '[') {
			if (line.back() != ']')
				throw BadInput("malformed section header: " + line);
			section = trim(line.substr(1, line.size() - 2));
			doc.try_emplace(section);
			continue;
		}
		size_t eq = line.find('=');
		if (eq == std::string::npos)
			throw BadInput("expected key = value: " + line);
		std::string key = trim(line.substr(0, eq));
		if (key.size() >= 2 && key.front() == '"' && key.back() == '"')
			key = key.substr(1, key.size() - 2);
		std::string val = trim(line.substr(eq + 1));
		if (!val.empty() && val.front() == '"') {
			if (val.size() < 2 || val.back() != '"')
				throw BadInput("unterminated string: " + line);
			val = val.substr(1, val.size() - 2);
		}
		doc[section].emplace_back(std::move(key), std::move(val));
	}
	return doc;
}

const std::string &toml_get(const TomlDoc &doc, const std::string &section,
                            const std::string &key)
{
	auto it = doc.find(section);
	if (it == doc.end())
		throw BadInput("missing section [" + section + "]");
	for (const auto &[k, v] : it->second)
		if (k == key)
			return v;
	throw BadInput("missing key \"" + key + "\" in [" + section + "]");
}

const std::vector<std::pair<std::string, std::string>> &
toml_section(const TomlDoc &doc, const std::string &section)
{
	auto it = doc.find(section);
	if (it == doc.end())
		throw BadInput("missing section [" + section + "]");
	return it->second;
}

} // namespace

std::string family_to_toml(const HopfFamily &F)
{
	if (F.backend == HopfFamily::Backend::Fixture)
		throw BadInput("fixture-backed families are stored as JSON, not TOML");
	std::ostringstream out;
	out << "schema_version = 1\n";
	out << "name = " << quote(F.name) << "\n";
	out << "display = " << quote(F.display) << "\n";
	out << "backend = "
	    << quote(F.backend == HopfFamily::Backend::OepsSL2 ? "oeps_sl2"
	                                                       : "qcomm")
	    << "\n";
	out << "experimental = " << (F.experimental ? "true" : "false") << "\n";
	out << "conductor = " << F.conductor << "\n";
	out << "ch_degree = " << F.ch_degree << "\n";
	out << "trace = \"regular\"\n";
	out << "\n[params]\n";
	for (const auto &[k, v] : F.params)
		out << k << " = " << v << "\n";
	out << "\n[generators]\n";
	out << "# name inv|ord <power exponent> <central power value>\n";
	for (size_t i = 0; i < F.gens.size(); ++i) {
		const GenSpec &g = F.gens[i];
		out << "g" << i << " = \"" << g.name << " "
		    << (g.invertible ? "inv" : "ord") << " " << g.order << " "
		    << cpoly_str(g.power_value) << "\"\n";
	}
	out << "\n[qcomm]\n";
	for (const auto &[ij, rel] : F.qcomm)
		out << "\"" << ij.first << "," << ij.second << "\" = \""
		    << cyc_str(rel.q) << ":" << int_list(rel.central.e) << "\"\n";
	out << "\n[coproduct]\n";
	for (size_t i = 0; i < F.coproduct.size(); ++i)
		out << "g" << i << " = \"" << skew_str(F.coproduct[i]) << "\"\n";
	out << "\n[counit]\n";
	for (size_t i = 0; i < F.counit_gen.size(); ++i)
		out << "g" << i << " = \"" << cyc_str(F.counit_gen[i]) << "\"\n";
	out << "\n[antipode]\n";
	for (size_t i = 0; i < F.antipode_gen.size(); ++i)
		out << "g" << i << " = \"" << gpoly_str(F.antipode_gen[i]) << "\"\n";
	out << "\n[central]\n";
	out << "# name inv|ord <expression in the generators>\n";
	for (size_t i = 0; i < F.cgens.size(); ++i) {
		const CentralGenSpec &z = F.cgens[i];
		out << "z" << i << " = \"" << z.name << " "
		    << (z.invertible ? "inv" : "ord") << " " << int_list(z.expr.e)
		    << "\"\n";
	}
	out << "\n[central.coproduct]\n";
	for (size_t i = 0; i < F.cgens.size(); ++i)
		out << "z" << i << " = \"" << ccop_str(F.cgens[i].coproduct) << "\"\n";
	out << "\n[central.counit]\n";
	for (size_t i = 0; i < F.cgens.size(); ++i)
		out << "z" << i << " = \"" << cyc_str(F.cgens[i].counit) << "\"\n";
	out << "\n[central.antipode]\n";
	for (size_t i = 0; i < F.cgens.size(); ++i)
		out << "z" << i << " = \"" << cpoly_str(F.cgens[i].antipode) << "\"\n";
	out << "\n[point_relations]\n";
	for (size_t i = 0; i < F.point_relations.size(); ++i)
		out << "r" << i << " = \"" << cpoly_str(F.point_relations[i]) << "\"\n";
	return out.str();
}

FamilyPtr family_from_toml(const std::string &text)
{
	TomlDoc doc = parse_toml(text);
	if (std::stol(toml_get(doc, "", "schema_version")) != 1)
		throw BadInput("unsupported schema_version");
	auto F = std::make_shared<HopfFamily>();
	F->name = toml_get(doc, "", "name");
	F->display = toml_get(doc, "", "display");
	std::string backend = toml_get(doc, "", "backend");
	if (backend == "qcomm")
		F->backend = HopfFamily::Backend::QComm;
	else if (backend == "oeps_sl2")
		F->backend = HopfFamily::Backend::OepsSL2;
	else
		throw BadInput("unknown backend \"" + backend + "\"");
	F->experimental = toml_get(doc, "", "experimental") == "true";
	F->conductor = std::stoi(toml_get(doc, "", "conductor"));
	F->ch_degree = std::stol(toml_get(doc, "", "ch_degree"));
	if (F->conductor < 1 || F->ch_degree < 1)
		throw BadInput("invalid conductor or fiber dimension");
	for (const auto &[k, v] : toml_section(doc, "params"))
		F->params[k] = std::stol(v);
	int N = F->conductor;

	// generators first: everything else is sized against them
	for (const auto &[k, v] : toml_section(doc, "generators")) {
		(void)k;
		std::istringstream ss(v);
		GenSpec g;
		std::string flag;
		ss >> g.name >> flag >> g.order;
		if (!ss || (flag != "inv" && flag != "ord") || g.order < 1)
			throw BadInput("malformed generator spec \"" + v + "\"");
		g.invertible = flag == "inv";
		// power_value needs the central arity, so it is filled in a second pass
		F->gens.push_back(std::move(g));
	}
	size_t ngen = F->gens.size();
	if (ngen == 0)
		throw BadInput("family has no generators");

	for (const auto &[k, v] : toml_section(doc, "central")) {
		(void)k;
		std::istringstream ss(v);
		CentralGenSpec z;
		std::string flag;
		ss >> z.name >> flag;
		if (!ss || (flag != "inv" && flag != "ord"))
			throw BadInput("malformed central generator spec \"" + v + "\"");
		z.invertible = flag == "inv";
		std::string rest;
		std::getline(ss, rest);
		rest = trim(rest);
		size_t pos = 0;
		z.expr.e = parse_int_list(rest, pos);
		if (z.expr.e.size() != ngen)
			throw BadInput("central expression arity mismatch in \"" + v + "\"");
		F->cgens.push_back(std::move(z));
	}
	size_t ncen = F->cgens.size();

	// second pass over generators for the central power values
	{
		const auto &rows = toml_section(doc, "generators");
		for (size_t i = 0; i < rows.size(); ++i) {
			std::istringstream ss(rows[i].second);
			std::string name, flag;
			long order;
			ss >> name >> flag >> order;
			std::string rest;
			std::getline(ss, rest);
			F->gens[i].power_value = parse_cpoly(trim(rest), N, ncen);
		}
	}

	for (const auto &[k, v] : toml_section(doc, "qcomm")) {
		size_t comma = k.find(',');
		if (comma == std::string::npos)
			throw BadInput("qcomm key must be \"i,j\": " + k);
		int i = std::stoi(k.substr(0, comma)), j = std::stoi(k.substr(comma + 1));
		if (i < 0 || j < 0 || i >= (int)ngen || j >= (int)ngen || i >= j)
			throw BadInput("qcomm pair out of range: " + k);
		QCommRel rel;
		size_t pos = 0;
		rel.q = parse_paren_cyc(v, pos, N);
		expect_char(v, pos, ':');
		rel.central.e = parse_int_list(v, pos);
		if (rel.central.e.size() != ncen)
			throw BadInput("qcomm central arity mismatch in \"" + v + "\"");
		F->qcomm[{i, j}] = std::move(rel);
	}

	for (const auto &[k, v] : toml_section(doc, "coproduct")) {
		(void)k;
		F->coproduct.push_back(parse_skew(v, N, ngen));
	}
	for (const auto &[k, v] : toml_section(doc, "counit")) {
		(void)k;
		size_t pos = 0;
		F->counit_gen.push_back(parse_paren_cyc(v, pos, N));
	}
	for (const auto &[k, v] : toml_section(doc, "antipode")) {
		(void)k;
		F->antipode_gen.push_back(parse_gpoly(v, N, ngen));
	}
	if (F->coproduct.size() != ngen || F->counit_gen.size() != ngen ||
	    F->antipode_gen.size() != ngen)
		throw BadInput("coproduct/counit/antipode rows must match generators");

	{
		const auto &cop = toml_section(doc, "central.coproduct");
		const auto &cnt = toml_section(doc, "central.counit");
		const auto &ant = toml_section(doc, "central.antipode");
		if (cop.size() != ncen || cnt.size() != ncen || ant.size() != ncen)
			throw BadInput("central Hopf data rows must match central generators");
		for (size_t i = 0; i < ncen; ++i) {
			F->cgens[i].coproduct = parse_ccop(cop[i].second, N, ncen);
			size_t pos = 0;
			F->cgens[i].counit = parse_paren_cyc(cnt[i].second, pos, N);
			F->cgens[i].antipode = parse_cpoly(ant[i].second, N, ncen);
		}
	}

	if (doc.count("point_relations"))
		for (const auto &[k, v] : toml_section(doc, "point_relations")) {
			(void)k;
			F->point_relations.push_back(parse_cpoly(v, N, ncen));
		}
	return F;
}

} // namespace hopfdisc
