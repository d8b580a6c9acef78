#pragma once
#include <stdexcept>
#include <string>

namespace hopfdisc {

struct Error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// arithmetic on elements of distinct cyclotomic fields without an explicit embed
struct ConductorMismatch : Error {
	using Error::Error;
};

// a semisimple algebra whose Wedderburn decomposition cannot be realized over
// the working field; carries the polynomial that resisted splitting
struct NotSplit : Error {
	std::string polynomial;
	NotSplit(const std::string &msg, std::string poly)
	    : Error(msg + " [" + poly + "]"), polynomial(std::move(poly)) {}
};

// a theorem-backed invariant failed; indicates a bug, never user error
struct InvariantViolation : Error {
	using Error::Error;
};

struct AntipodeNotInvertible : Error {
	using Error::Error;
};

// an operation's hypothesis (e.g. identity fiber has the Chevalley property)
// does not hold for the given input
struct HypothesisFailed : Error {
	using Error::Error;
};

// malformed user input: files, CLI values, presentations
struct BadInput : Error {
	using Error::Error;
};

} // namespace hopfdisc
