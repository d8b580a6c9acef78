// hopfdisc: build Hopf algebra families, specialize fibers, and run
// discriminant / Chevalley checks with exact cyclotomic arithmetic.
//
// exit codes: 0 success and all --expect assertions hold, 1 assertion or
// verification failure, 2 usage / malformed input, 3 internal error
// (invariant violation, non-split field, failed hypothesis).
#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "hopfdisc/chevalley.hpp"
#include "hopfdisc/errors.hpp"
#include "hopfdisc/io.hpp"
#include "json.hpp"

using namespace hopfdisc;
using nlohmann::json;

namespace {

struct Options {
	std::string family;
	std::string params;      // "k=v,k=v"
	std::string family_file; // TOML presentation
	std::string fixture_file;
	int conductor = 0;
	long order = 0; // root-of-unity order of the default grid (0: conductor)
	long max_points = 4096;
	std::string points;      // "c1,c2;c1,c2"
	std::string points_file; // one point per line
	unsigned long seed = 0xc4a1;
	int jobs = 1;
	bool as_json = false;
	bool enable_experimental = false;
};

FamilyPtr load_family(const Options &o)
{
	FamilyPtr F;
	if (!o.fixture_file.empty()) {
		if (!o.family.empty() || !o.family_file.empty())
			throw BadInput("choose one of --family / --family-file / --fixture");
		if (o.conductor != 0)
			throw BadInput("--conductor does not apply to fixture files");
		F = make_fixture_family("fixture", fiber_hopf_from_json(read_file(o.fixture_file)));
	} else if (!o.family_file.empty()) {
		if (!o.family.empty())
			throw BadInput("choose one of --family / --family-file / --fixture");
		if (o.conductor != 0)
			throw BadInput("--conductor does not apply to family files");
		F = family_from_toml(read_file(o.family_file));
	} else if (!o.family.empty()) {
		std::map<std::string, long> params;
		std::istringstream ss(o.params);
		std::string kv;
		while (std::getline(ss, kv, ',')) {
			if (kv.empty())
				continue;
			size_t eq = kv.find('=');
			if (eq == std::string::npos)
				throw BadInput("--params expects k=v,k=v: " + kv);
			params[kv.substr(0, eq)] = std::stol(kv.substr(eq + 1));
		}
		F = build_family(o.family, std::move(params), o.conductor);
	} else {
		throw BadInput("no family selected (--family, --family-file or --fixture)");
	}
	if (F->experimental && !o.enable_experimental)
		throw BadInput("family \"" + F->name +
		               "\" is experimental; pass --enable-experimental");
	return F;
}

CentralPoint parse_point(const HopfFamily &F, const std::string &s)
{
	CentralPoint p;
	std::istringstream ss(s);
	std::string tok;
	while (std::getline(ss, tok, ','))
		p.push_back(parse_cyc(tok, F.conductor));
	if (p.size() != F.cgens.size())
		throw BadInput("point \"" + s + "\" has " + std::to_string(p.size()) +
		               " coordinates, expected " + std::to_string(F.cgens.size()));
	std::string why;
	if (!point_valid(F, p, &why))
		throw BadInput("point \"" + s + "\" is not on the variety: " + why);
	return p;
}

std::vector<CentralPoint> select_points(const Options &o, const HopfFamily &F)
{
	std::vector<CentralPoint> pts;
	if (!o.points.empty()) {
		std::istringstream ss(o.points);
		std::string tok;
		while (std::getline(ss, tok, ';'))
			if (!tok.empty())
				pts.push_back(parse_point(F, tok));
	} else if (!o.points_file.empty()) {
		std::istringstream ss(read_file(o.points_file));
		std::string line;
		while (std::getline(ss, line)) {
			size_t h = line.find('#');
			if (h != std::string::npos)
				line = line.substr(0, h);
			bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
			if (!blank)
				pts.push_back(parse_point(F, line));
		}
	} else {
		pts = sample_points(F, o.order ? o.order : F.conductor, o.max_points);
	}
	if (pts.empty())
		throw BadInput("empty point sample");
	return pts;
}

std::string point_str(const CentralPoint &p)
{
	std::string s;
	for (size_t i = 0; i < p.size(); ++i)
		s += (i ? "," : "") + to_string(p[i]);
	return s.empty() ? "()" : s;
}

json points_json(const std::vector<CentralPoint> &pts)
{
	json out = json::array();
	for (const auto &p : pts)
		out.push_back(point_str(p));
	return out;
}

json report_head(const char *command, const HopfFamily &F)
{
	json j;
	j["schema_version"] = 1;
	j["command"] = command;
	j["family"] = F.display;
	j["conductor"] = F.conductor;
	return j;
}

void emit(const Options &o, const json &j, const std::string &table)
{
	if (o.as_json)
		std::cout << j.dump(1, '\t') << "\n";
	else
		std::cout << table;
}

int expect_verdict(const std::string &expect, bool positive,
                   const std::string &pos_word, const std::string &neg_word)
{
	if (expect.empty())
		return 0;
	if (expect != pos_word && expect != neg_word)
		throw BadInput("--expect must be \"" + pos_word + "\" or \"" + neg_word +
		               "\"");
	bool want = expect == pos_word;
	if (want == positive)
		return 0;
	std::cout << "expectation failed: expected " << expect << ", got "
	          << (positive ? pos_word : neg_word) << "\n";
	return 1;
}

// ------------------------------------------------------------ subcommands

int cmd_family_list(const Options &o)
{
	json rows = json::array();
	std::ostringstream tab;
	for (const FamilyInfo &info : family_catalog()) {
		json r;
		r["name"] = info.name;
		r["summary"] = info.summary;
		r["params"] = info.defaults;
		r["experimental"] = info.experimental;
		rows.push_back(r);
		tab << info.name;
		if (!info.param_names.empty()) {
			tab << " (";
			for (size_t i = 0; i < info.param_names.size(); ++i)
				tab << (i ? ", " : "") << info.param_names[i] << "="
				    << info.defaults.at(info.param_names[i]);
			tab << ")";
		}
		if (info.experimental)
			tab << " [experimental]";
		tab << "\n    " << info.summary << "\n";
	}
	json j;
	j["schema_version"] = 1;
	j["command"] = "family list";
	j["families"] = rows;
	emit(o, j, tab.str());
	return 0;
}

int cmd_family_describe(const Options &o, const std::string &name)
{
	for (const FamilyInfo &info : family_catalog()) {
		if (info.name != name)
			continue;
		Options oo = o;
		oo.family = name;
		oo.enable_experimental = true;
		auto F = load_family(oo);
		std::ostringstream tab;
		tab << F->display << "\n  " << info.summary << "\n";
		tab << "  conductor " << F->conductor << ", fiber dimension "
		    << F->ch_degree << "\n";
		tab << "  generators:";
		for (const auto &g : F->gens)
			tab << " " << g.name;
		tab << "\n  central coordinates:";
		for (const auto &z : F->cgens)
			tab << " " << z.name << (z.invertible ? " (invertible)" : "");
		tab << "\n";
		if (info.experimental)
			tab << "  experimental: requires --enable-experimental\n";
		json j = report_head("family describe", *F);
		j["summary"] = info.summary;
		j["fiber_dimension"] = F->ch_degree;
		j["params"] = F->params;
		j["experimental"] = info.experimental;
		emit(o, j, tab.str());
		return 0;
	}
	throw BadInput("unknown family \"" + name + "\"");
}

int cmd_family_export(const Options &o, const std::string &name,
                      const std::string &out_path)
{
	Options oo = o;
	oo.family = name;
	auto F = load_family(oo);
	std::string text = family_to_toml(*F);
	if (out_path.empty())
		std::cout << text;
	else
		write_file(out_path, text);
	return 0;
}

int cmd_fiber(const Options &o, const std::string &point)
{
	auto F = load_family(o);
	CentralPoint p = point.empty() ? identity_point(*F) : parse_point(*F, point);
	AlgPtr A = specialize(*F, p)->alg;
	long s = sd(*A);
	bool split = is_split_semisimple(*semisimple_quotient(*A).alg);
	std::vector<long> dims;
	std::string split_note;
	if (split) {
		for (const auto &V : simple_modules(A))
			dims.push_back(V.dim);
	} else {
		try {
			for (const auto &V : simple_modules(A))
				dims.push_back(V.dim);
		} catch (const NotSplit &e) {
			split_note = e.polynomial;
			dims.clear();
		}
	}
	std::sort(dims.begin(), dims.end());
	std::ostringstream tab;
	tab << "fiber at (" << point_to_string(*F, p) << ")\n";
	tab << "  dimension    " << A->dim << "\n";
	tab << "  conductor    " << A->conductor << "\n";
	tab << "  sd           " << s << "\n";
	tab << "  radical dim  " << A->dim - s << "\n";
	tab << "  split        " << (split ? "yes" : "no") << "\n";
	tab << "  simples      ";
	if (!dims.empty() || split) {
		for (size_t i = 0; i < dims.size(); ++i)
			tab << (i ? ", " : "") << dims[i];
		tab << "\n";
	} else {
		tab << "not available over this field [" << split_note << "]\n";
	}
	json j = report_head("fiber", *F);
	j["point"] = point_str(p);
	j["dimension"] = A->dim;
	j["sd"] = s;
	j["radical_dimension"] = A->dim - s;
	j["split"] = split;
	if (!dims.empty() || split)
		j["simple_dimensions"] = dims;
	emit(o, j, tab.str());
	return 0;
}

int cmd_scan(const Options &o, const std::vector<long> &levels)
{
	auto F = load_family(o);
	auto pts = select_points(o, *F);
	auto rows = scan_variety(*F, pts, o.jobs);
	std::ostringstream tab;
	tab << "point : sd";
	for (long k : levels)
		tab << " : V_" << k;
	tab << "\n";
	json jrows = json::array();
	for (const auto &row : rows) {
		tab << "(" << point_to_string(*F, row.point) << ") : " << row.sdim;
		json r;
		r["point"] = point_str(row.point);
		r["sd"] = row.sdim;
		json v;
		for (long k : levels) {
			bool in = row.sdim < k;
			tab << " : " << (in ? "yes" : "no");
			v[std::to_string(k)] = in;
		}
		if (!levels.empty())
			r["vanishes"] = v;
		tab << "\n";
		jrows.push_back(r);
	}
	json j = report_head("scan", *F);
	j["levels"] = levels;
	j["points"] = points_json(pts);
	j["rows"] = jrows;
	emit(o, j, tab.str());
	return 0;
}

int cmd_lowest(const Options &o)
{
	auto F = load_family(o);
	auto pts = select_points(o, *F);
	long level = lowest_level(*F);
	auto rows = scan_variety(*F, pts, o.jobs);
	std::vector<CentralPoint> members;
	for (const auto &row : rows)
		if (row.sdim < level)
			members.push_back(row.point);
	std::ostringstream tab;
	tab << "lowest level " << level << "\n";
	tab << "sampled members of V_" << level << " (" << members.size() << " of "
	    << pts.size() << "):\n";
	for (const auto &m : members)
		tab << "  (" << point_to_string(*F, m) << ")\n";
	json j = report_head("lowest", *F);
	j["lowest_level"] = level;
	j["points"] = points_json(pts);
	j["members"] = points_json(members);
	emit(o, j, tab.str());
	return 0;
}

int cmd_ch_verify(const Options &o, int samples)
{
	auto F = load_family(o);
	auto pts = select_points(o, *F);
	bool all_ok = true;
	std::ostringstream tab;
	json jrows = json::array();
	for (const auto &p : pts) {
		AlgPtr A = specialize(*F, p)->alg;
		bool ok = cayley_hamilton_check(*A, samples, o.seed);
		// the two characteristic polynomial computations must agree
		std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
		for (int s = 0; ok && s < samples; ++s) {
			Vec a = zero_vec(A->dim);
			for (long i = 0; i < A->dim; ++i)
				a(i) = CycEl((long)(rng() % 7) - 3);
			Poly pn = char_poly_newton(*A, a), pd = char_poly_det(*A, a);
			ok = pn.size() == pd.size();
			for (size_t i = 0; ok && i < pn.size(); ++i)
				ok = pn[i] == pd[i];
		}
		all_ok = all_ok && ok;
		tab << "(" << point_to_string(*F, p) << ") : "
		    << (ok ? "verified" : "FAILED") << "\n";
		json r;
		r["point"] = point_str(p);
		r["verified"] = ok;
		jrows.push_back(r);
	}
	json j = report_head("ch-verify", *F);
	j["samples"] = samples;
	j["seed"] = o.seed;
	j["points"] = points_json(pts);
	j["rows"] = jrows;
	j["all_verified"] = all_ok;
	emit(o, j, tab.str());
	return all_ok ? 0 : 1;
}

int cmd_tensor_check(const Options &o, const std::string &point,
                     long simple_index, const std::string &expect)
{
	auto F = load_family(o);
	CentralPoint p = point.empty() ? identity_point(*F) : parse_point(*F, point);
	auto test_pts = select_points(o, *F);
	auto simples = simple_modules(specialize(*F, p)->alg);
	if (simple_index < 0 || simple_index >= (long)simples.size())
		throw BadInput("simple index out of range (fiber has " +
		               std::to_string(simples.size()) + " simples)");
	TensorReducibility t =
	    tensor_reducible(*F, p, simples[simple_index], test_pts);
	std::ostringstream tab;
	tab << "simple " << simple_index << " (dim " << simples[simple_index].dim
	    << ") at (" << point_to_string(*F, p) << ")\n";
	tab << "  left tensor-reducible   " << (t.left ? "yes" : "no") << "\n";
	tab << "  right tensor-reducible  " << (t.right ? "yes" : "no") << "\n";
	tab << "  tensor-reducible        " << (t.reducible() ? "yes" : "no") << "\n";
	json j = report_head("tensor-check", *F);
	j["point"] = point_str(p);
	j["simple_index"] = simple_index;
	j["simple_dimension"] = simples[simple_index].dim;
	j["points"] = points_json(test_pts);
	j["left"] = t.left;
	j["right"] = t.right;
	j["tensor_reducible"] = t.reducible();
	emit(o, j, tab.str());
	return expect_verdict(expect, t.reducible(), "reducible", "not-reducible");
}

int cmd_six_equiv(const Options &o, const std::string &point)
{
	auto F = load_family(o);
	CentralPoint p = point.empty() ? identity_point(*F) : parse_point(*F, point);
	auto test_pts = select_points(o, *F);
	auto simples = simple_modules(specialize(*F, p)->alg);
	bool all_agree = true;
	std::ostringstream tab;
	tab << "six equivalent conditions at (" << point_to_string(*F, p) << ")\n";
	json jrows = json::array();
	for (size_t i = 0; i < simples.size(); ++i) {
		SixEquivalences six = verify_six_equivalences(*F, p, simples[i], test_pts);
		all_agree = all_agree && six.agree;
		auto yn = [](bool b) { return b ? "yes" : "no "; };
		tab << "simple " << i << " (dim " << simples[i].dim << "): "
		    << "tensor-reducible " << yn(six.tensor_reducible) << " left "
		    << yn(six.left_tensor_reducible) << " right "
		    << yn(six.right_tensor_reducible) << " lowest-member "
		    << yn(six.lowest_level_member) << " minor-vanishes "
		    << yn(six.lowest_minor_vanishes) << " dual-pairing "
		    << yn(six.dual_pairing_semisimple)
		    << (six.agree ? "  [agree]" : "  [DISAGREE]") << "\n";
		json r;
		r["simple_index"] = i;
		r["simple_dimension"] = simples[i].dim;
		r["tensor_reducible"] = six.tensor_reducible;
		r["left_tensor_reducible"] = six.left_tensor_reducible;
		r["right_tensor_reducible"] = six.right_tensor_reducible;
		r["lowest_level_member"] = six.lowest_level_member;
		r["lowest_minor_vanishes"] = six.lowest_minor_vanishes;
		r["dual_pairing_semisimple"] = six.dual_pairing_semisimple;
		r["agree"] = six.agree;
		jrows.push_back(r);
	}
	json j = report_head("six-equiv", *F);
	j["point"] = point_str(p);
	j["points"] = points_json(test_pts);
	j["rows"] = jrows;
	j["all_agree"] = all_agree;
	emit(o, j, tab.str());
	return all_agree ? 0 : 1;
}

int cmd_chevalley(const Options &o, const std::string &expect)
{
	auto F = load_family(o);
	auto pts = select_points(o, *F);
	ChevalleyVerdict v = chevalley_family_check(*F, pts, o.jobs);
	std::ostringstream tab;
	tab << "identity fiber Chevalley  " << (v.identity_fiber_chevalley ? "yes" : "no")
	    << "\n";
	tab << "sd constant on sample     " << (v.sd_constant ? "yes" : "no") << "\n";
	tab << "Chevalley verdict         " << (v.chevalley ? "yes" : "no") << "\n";
	if (v.witness)
		tab << "witness                   (" << point_to_string(*F, *v.witness)
		    << ")\n";
	json j = report_head("chevalley", *F);
	j["points"] = points_json(pts);
	j["identity_fiber_chevalley"] = v.identity_fiber_chevalley;
	j["sd_constant"] = v.sd_constant;
	j["chevalley"] = v.chevalley;
	if (v.witness)
		j["witness"] = point_str(*v.witness);
	emit(o, j, tab.str());
	return expect_verdict(expect, v.chevalley, "chevalley", "not-chevalley");
}

int cmd_subgroup(const Options &o, long level, const std::string &expect)
{
	auto F = load_family(o);
	auto pts = select_points(o, *F);
	if (level == 0)
		level = lowest_level(*F);
	SubgroupReport rep = subgroup_check(*F, pts, level, o.jobs);
	std::ostringstream tab;
	tab << "level " << level << ": " << rep.members.size() << " of "
	    << pts.size() << " sampled points\n";
	tab << "  contains identity     " << (rep.contains_identity ? "yes" : "no")
	    << "\n";
	tab << "  closed under product  " << (rep.closed_under_product ? "yes" : "no")
	    << "\n";
	tab << "  closed under inverse  " << (rep.closed_under_inverse ? "yes" : "no")
	    << "\n";
	tab << "  subgroup              " << (rep.subgroup() ? "yes" : "no") << "\n";
	if (rep.product_violation)
		tab << "  product escaping the set: ("
		    << point_to_string(*F, rep.product_violation->first) << ") * ("
		    << point_to_string(*F, rep.product_violation->second) << ")\n";
	json j = report_head("subgroup", *F);
	j["level"] = level;
	j["points"] = points_json(pts);
	j["members"] = points_json(rep.members);
	j["contains_identity"] = rep.contains_identity;
	j["closed_under_product"] = rep.closed_under_product;
	j["closed_under_inverse"] = rep.closed_under_inverse;
	j["subgroup"] = rep.subgroup();
	if (rep.product_violation)
		j["product_violation"] = json::array(
		    {point_str(rep.product_violation->first),
		     point_str(rep.product_violation->second)});
	emit(o, j, tab.str());
	return expect_verdict(expect, rep.subgroup(), "subgroup", "not-subgroup");
}

int cmd_quotient(const Options &o, long level, bool exhaustive,
                 const std::string &expect)
{
	auto F = load_family(o);
	auto pts = select_points(o, *F);
	if (level == 0)
		level = lowest_level(*F);
	QuotientReport rep = quotient_chevalley_check(*F, pts, level, exhaustive);
	std::ostringstream tab;
	tab << "level " << level << ": " << rep.subgroup.members.size()
	    << " member fibers\n";
	tab << "  subgroup   " << (rep.subgroup.subgroup() ? "yes" : "no") << "\n";
	tab << "  chevalley  " << (rep.chevalley ? "yes" : "no") << "\n";
	if (rep.quotient_dimension)
		tab << "  quotient dimension " << *rep.quotient_dimension << "\n";
	json j = report_head("quotient-chevalley", *F);
	j["level"] = level;
	j["points"] = points_json(pts);
	j["members"] = points_json(rep.subgroup.members);
	j["subgroup"] = rep.subgroup.subgroup();
	j["chevalley"] = rep.chevalley;
	if (rep.quotient_dimension)
		j["quotient_dimension"] = *rep.quotient_dimension;
	emit(o, j, tab.str());
	return expect_verdict(expect, rep.chevalley, "chevalley", "not-chevalley");
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact discriminant-ideal and Chevalley-property computations "
	             "on module-finite Hopf algebra families"};
	app.require_subcommand(1);

	Options o;
	app.add_option("--family", o.family, "built-in family name (see: family list)");
	app.add_option("--params", o.params, "family parameters, k=v,k=v");
	app.add_option("--family-file", o.family_file, "family presentation (TOML)");
	app.add_option("--fixture", o.fixture_file, "standalone fiber file (JSON)");
	app.add_option("--conductor", o.conductor,
	               "cyclotomic conductor (0: family minimum)");
	app.add_option("--order", o.order,
	               "root-of-unity order of the default grid (0: conductor)");
	app.add_option("--max-points", o.max_points, "cap on the default grid");
	app.add_option("--points", o.points, "explicit points \"c1,c2;c1,c2\"");
	app.add_option("--points-file", o.points_file, "points, one per line");
	app.add_option("--seed", o.seed, "seed for randomized verification");
	app.add_option("--jobs", o.jobs, "worker count for point scans");
	app.add_flag("--json", o.as_json, "emit JSON reports");
	app.add_flag("--enable-experimental", o.enable_experimental,
	             "allow experimental families");

	auto *fam = app.add_subcommand("family", "catalog of built-in families");
	fam->require_subcommand(1);
	fam->add_subcommand("list", "list built-in families");
	std::string desc_name;
	auto *fam_desc = fam->add_subcommand("describe", "describe one family");
	fam_desc->add_option("name", desc_name)->required();
	std::string export_name, export_out;
	auto *fam_exp = fam->add_subcommand("export", "export a family as TOML");
	fam_exp->add_option("name", export_name)->required();
	fam_exp->add_option("-o,--output", export_out, "output path (default stdout)");

	std::string fiber_point;
	auto *fiber = app.add_subcommand("fiber", "inspect one fiber algebra");
	fiber->add_option("point", fiber_point, "central point (default identity)");

	std::vector<long> scan_levels;
	auto *scan = app.add_subcommand("scan", "square dimension over a sample");
	scan->add_option("--levels", scan_levels, "discriminant levels to report")
	    ->delimiter(',');

	app.add_subcommand("lowest", "lowest level and its sampled subvariety");

	int ch_samples = 12;
	auto *chv = app.add_subcommand("ch-verify", "Cayley-Hamilton verification");
	chv->add_option("--samples", ch_samples, "random elements per fiber");

	std::string tc_point, tc_expect;
	long tc_index = 0;
	auto *tc = app.add_subcommand("tensor-check", "tensor-reducibility of a simple");
	tc->add_option("point", tc_point, "central point (default identity)");
	tc->add_option("simple-index", tc_index, "index into the fiber's simples");
	tc->add_option("--expect", tc_expect, "reducible | not-reducible");

	std::string se_point;
	auto *se = app.add_subcommand("six-equiv",
	                              "six equivalent conditions per simple");
	se->add_option("point", se_point, "central point (default identity)");

	std::string chev_expect;
	auto *chev = app.add_subcommand("chevalley", "family Chevalley verdict");
	chev->add_option("--expect", chev_expect, "chevalley | not-chevalley");

	long sub_level = 0;
	std::string sub_expect;
	auto *sub = app.add_subcommand("subgroup", "group axioms of a level set");
	sub->add_option("--level", sub_level, "level k (default: lowest)");
	sub->add_option("--expect", sub_expect, "subgroup | not-subgroup");

	long q_level = 0;
	bool q_exhaustive = false;
	std::string q_expect;
	auto *quo = app.add_subcommand("quotient-chevalley",
	                               "Chevalley check of the level-set quotient");
	quo->add_option("--level", q_level, "level k (default: lowest)");
	quo->add_flag("--exhaustive", q_exhaustive,
	              "sample is the whole subvariety (enables total dimension)");
	quo->add_option("--expect", q_expect, "chevalley | not-chevalley");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		int rc = app.exit(e);
		return rc == 0 ? 0 : 2;
	}

	try {
		if (fam->parsed()) {
			if (fam->get_subcommand("list")->parsed())
				return cmd_family_list(o);
			if (fam_desc->parsed())
				return cmd_family_describe(o, desc_name);
			return cmd_family_export(o, export_name, export_out);
		}
		if (fiber->parsed())
			return cmd_fiber(o, fiber_point);
		if (scan->parsed())
			return cmd_scan(o, scan_levels);
		if (app.get_subcommand("lowest")->parsed())
			return cmd_lowest(o);
		if (chv->parsed())
			return cmd_ch_verify(o, ch_samples);
		if (tc->parsed())
			return cmd_tensor_check(o, tc_point, tc_index, tc_expect);
		if (se->parsed())
			return cmd_six_equiv(o, se_point);
		if (chev->parsed())
			return cmd_chevalley(o, chev_expect);
		if (sub->parsed())
			return cmd_subgroup(o, sub_level, sub_expect);
		if (quo->parsed())
			return cmd_quotient(o, q_level, q_exhaustive, q_expect);
	} catch (const BadInput &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const Error &e) {
		std::cerr << "internal error: " << e.what() << "\n";
		return 3;
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}
