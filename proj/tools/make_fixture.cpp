// regenerates the bundled small-quantum-group fixture:
//   make_fixture [output.json]
#include <cstdio>

#include "hopfdisc/io.hpp"

int main(int argc, char **argv)
{
	using namespace hopfdisc;
	std::string path = argc > 1 ? argv[1] : "data/fixtures/uqsl2_l3.json";
	FiberHopf H = make_uqsl2_fixture();
	if (!verify_fiber_hopf(H)) {
		std::fprintf(stderr, "fixture fails the Hopf axioms\n");
		return 1;
	}
	write_file(path, fiber_hopf_to_json(H));
	std::printf("wrote %s (dim %ld, conductor %d)\n", path.c_str(), H.alg->dim,
	            H.alg->conductor);
	return 0;
}
