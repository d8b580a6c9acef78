#pragma once
#include "hopfdisc/families.hpp"

namespace hopfdisc {

// structure-constant JSON (schema_version 1)
std::string algebra_to_json(const FinDimAlg &A);
AlgPtr algebra_from_json(const std::string &text);

// algebra JSON plus a "hopf" section with delta / counit / antipode,
// used for standalone fiber fixtures
std::string fiber_hopf_to_json(const FiberHopf &H);
std::shared_ptr<FiberHopf> fiber_hopf_from_json(const std::string &text);

// family presentation in a small TOML subset (round-trips built-in families)
std::string family_to_toml(const HopfFamily &F);
FamilyPtr family_from_toml(const std::string &text);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &text);

} // namespace hopfdisc
