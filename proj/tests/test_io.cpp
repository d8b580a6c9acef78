#include "doctest.h"
#include "hopfdisc/discriminant.hpp"
#include "hopfdisc/errors.hpp"
#include "hopfdisc/io.hpp"

using namespace hopfdisc;

TEST_CASE("algebra json round trip")
{
	auto F = make_a_family(2, 1, 4);
	AlgPtr A = specialize(*F, {CycEl(1), CycEl(1)})->alg;
	std::string text = algebra_to_json(*A);
	AlgPtr B = algebra_from_json(text);
	CHECK(B->dim == A->dim);
	CHECK(B->conductor == A->conductor);
	CHECK(B->labels == A->labels);
	CHECK(exactly_zero(Vec(B->unit - A->unit)));
	// structure constants survive: multiplication tables agree entrywise
	for (long i = 0; i < A->dim; ++i)
		for (long j = 0; j < A->dim; ++j) {
			Vec ei = zero_vec(A->dim), ej = zero_vec(A->dim);
			ei(i) = CycEl(1);
			ej(j) = CycEl(1);
			CHECK(exactly_zero(Vec(mul(*A, ei, ej) - mul(*B, ei, ej))));
		}
	CHECK(sd(*B) == sd(*A));
}

TEST_CASE("algebra json rejects malformed input")
{
	CHECK_THROWS_AS(algebra_from_json("not json at all"), BadInput);
	CHECK_THROWS_AS(algebra_from_json("{\"kind\":\"algebra\"}"), BadInput);
	CHECK_THROWS_AS(
	    algebra_from_json("{\"schema_version\":2,\"kind\":\"algebra\"}"),
	    BadInput);
	// index out of range in the structure constants
	std::string bad = R"({"schema_version":1,"kind":"algebra","dim":1,
		"conductor":1,"labels":["1"],"unit":["1"],"sc":[[0,0,[[5,"1"]]]]})";
	CHECK_THROWS_AS(algebra_from_json(bad), BadInput);
}

TEST_CASE("fiber hopf json round trip keeps the hopf axioms")
{
	FiberHopf H = identity_fiber_hopf(*make_taft_ext(2, 4));
	std::string text = fiber_hopf_to_json(H);
	auto G = fiber_hopf_from_json(text);
	CHECK(G->alg->dim == H.alg->dim);
	CHECK(exactly_zero(Mat(G->delta - H.delta)));
	CHECK(exactly_zero(Vec(G->counit - H.counit)));
	CHECK(exactly_zero(Mat(G->antipode - H.antipode)));
	CHECK(verify_fiber_hopf(*G));
}

TEST_CASE("fixture family from json behaves like the built one")
{
	auto fix = std::make_shared<FiberHopf>(make_uqsl2_fixture());
	std::string text = fiber_hopf_to_json(*fix);
	auto loaded = fiber_hopf_from_json(text);
	auto F = make_fixture_family("uqsl2", loaded);
	AlgPtr A = specialize(*F, {})->alg;
	CHECK(A->dim == 27);
	CHECK(sd(*A) == 14);
}

TEST_CASE("family toml round trip")
{
	for (const char *name : {"taft_ext", "a_family", "liu", "infinite_taft",
	                         "qborel_sl2", "group_ext_d8", "oeps_sl2"}) {
		CAPTURE(name);
		auto F = build_family(name, {});
		std::string text = family_to_toml(*F);
		auto G = family_from_toml(text);
		CHECK(G->name == F->name);
		CHECK(G->conductor == F->conductor);
		CHECK(G->ch_degree == F->ch_degree);
		CHECK(G->params == F->params);
		CHECK(G->gens.size() == F->gens.size());
		CHECK(G->cgens.size() == F->cgens.size());
		// serialization is stable under one round trip
		CHECK(family_to_toml(*G) == text);
	}
}

TEST_CASE("family loaded from toml computes like the original")
{
	auto F = make_a_family(2, 1, 4);
	auto G = family_from_toml(family_to_toml(*F));
	CentralPoint p = {CycEl::zeta(4), CycEl(-1)};
	CHECK(sd(*specialize(*G, p)->alg) == sd(*specialize(*F, p)->alg));
	CHECK(sd(*specialize(*G, identity_point(*G))->alg) == 2);
	CHECK(lowest_level(*G) == lowest_level(*F));
	CHECK(check_antipode(*G, p));
	CHECK(verify_fiber_hopf(identity_fiber_hopf(*G)));
	CentralPoint q = convolve(*G, p, p);
	CHECK(exactly_zero(Vec(Vec::Map(q.data(), q.size()) -
	                       Vec::Map(convolve(*F, p, p).data(), q.size()))));
}

TEST_CASE("family toml rejects malformed input")
{
	CHECK_THROWS_AS(family_from_toml(""), BadInput);
	auto F = make_taft_ext(2, 4);
	std::string text = family_to_toml(*F);
	// corrupt the backend
	std::string bad = text;
	bad.replace(bad.find("qcomm"), 5, "other"); // backend = "other"
	CHECK_THROWS_AS(family_from_toml(bad), BadInput);
	// fixture families have no toml presentation
	auto fix = std::make_shared<FiberHopf>(identity_fiber_hopf(*F));
	CHECK_THROWS_AS(family_to_toml(*make_fixture_family("t", fix)), BadInput);
}

TEST_CASE("file helpers")
{
	CHECK_THROWS_AS(read_file("/nonexistent/path/file.json"), BadInput);
	std::string path = "io_test_tmp.txt";
	write_file(path, "hello\n");
	CHECK(read_file(path) == "hello\n");
	std::remove(path.c_str());
}
