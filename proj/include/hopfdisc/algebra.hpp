#pragma once
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hopfdisc/linalg.hpp"

namespace hopfdisc {

struct FinDimAlg;
using AlgPtr = std::shared_ptr<const FinDimAlg>;

struct SCTerm {
	long k;
	CycEl c;
};

// associative unital algebra of finite dimension over Q(zeta_N), given by
// structure constants on a fixed basis. immutable once built; derived data
// (trace vector, Gram matrix, radical, ...) is memoized.
struct FinDimAlg {
	long dim = 0;
	int conductor = 1;
	std::vector<std::string> labels;
	Vec unit;
	// product b_i * b_j = sum_k sc[i*dim+j].c * b_k, sparse per pair
	std::vector<std::vector<SCTerm>> sc;

	struct Cache {
		std::mutex mu;
		std::optional<Vec> tracev;
		std::optional<Mat> gram;
		std::optional<Mat> radical;
		std::optional<Mat> center;
	};
	std::shared_ptr<Cache> cache = std::make_shared<Cache>();
};

// builds and (optionally) validates unit and associativity axioms
AlgPtr make_algebra(long dim, int conductor, std::vector<std::string> labels,
                    std::vector<std::vector<SCTerm>> sc, Vec unit,
                    bool validate = true);

Vec mul(const FinDimAlg &A, const Vec &x, const Vec &y);
Mat left_mult(const FinDimAlg &A, const Vec &x);
Mat right_mult(const FinDimAlg &A, const Vec &x);
Vec element_pow(const FinDimAlg &A, const Vec &x, long e);

// t_k = trace of left multiplication by b_k; regular trace is t . x
Vec trace_vector(const FinDimAlg &A);
CycEl regular_trace(const FinDimAlg &A, const Vec &x);

// G_{ij} = tr(b_i b_j) of the regular trace
Mat gram_matrix(const FinDimAlg &A);

// columns span the Jacobson radical (char 0: kernel of the Gram form);
// verified to be a nil two-sided ideal before being returned
Mat radical_basis(const FinDimAlg &A);

// square dimension: dim A - dim J = sum of squares of simple module
// dimensions over the algebraic closure
long sd(const FinDimAlg &A);

struct Quotient {
	AlgPtr alg;     // A / J
	Mat projection; // dim_bar x dim
	Mat section;    // dim x dim_bar, projection * section = id
};
Quotient semisimple_quotient(const FinDimAlg &A);

Mat center_basis(const FinDimAlg &A); // columns

// requires A semisimple (radical zero); throws NotSplit when the center
// does not split into one-dimensional pieces over the working field
std::vector<Vec> central_primitive_idempotents(const FinDimAlg &A);

struct AlgMod {
	AlgPtr parent;
	long dim = 0;
	std::vector<Mat> action; // action[i] = matrix of basis element b_i
};

AlgMod regular_module(const AlgPtr &A);
bool check_module(const FinDimAlg &A, const AlgMod &M);

// one representative per isomorphism class of simple left modules;
// throws NotSplit when a Wedderburn block resists splitting
std::vector<AlgMod> simple_modules(const AlgPtr &A);

// the one-dimensional modules (algebra characters)
std::vector<AlgMod> characters(const AlgPtr &A);
CycEl character_value(const AlgMod &chi, const Vec &x);

// a module is semisimple iff the radical acts by zero
bool is_semisimple_module(const FinDimAlg &A, const AlgMod &M);

bool is_split_semisimple(const FinDimAlg &A);

bool module_isomorphic(const AlgMod &M1, const AlgMod &M2);

// smallest submodule containing v, as a basis matrix (columns)
Mat spin_submodule(const AlgMod &M, const Vec &v);

} // namespace hopfdisc
