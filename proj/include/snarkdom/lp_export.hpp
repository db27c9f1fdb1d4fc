#pragma once

#include <string>

#include "snarkdom/graph.hpp"
#include "snarkdom/variant.hpp"

namespace snarkdom {

// CPLEX-LP text for the covering-style variants (domination, independent,
// two_domination, total): a binary x_v per vertex, objective minimize the
// sum, one cover row per vertex, plus one row per edge for independence.
// Section order Minimize / Subject To / Binary / End; variable names use
// 1-based labels like x_a3.  Throws std::invalid_argument for any other
// variant.
std::string export_lp(const FlowerSnark& g, Variant variant);

}  // namespace snarkdom
