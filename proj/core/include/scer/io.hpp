#pragma once

#include <iosfwd>
#include <string>

#include "scer/complex.hpp"

namespace scer {

/// Complex file format: one record per line, `simplex v0 v1 ... vk [weight]`.
/// Lines starting with `#` are comments. A trailing token is a weight iff it
/// is not a plain non-negative integer (so `2.0` is a weight, `2` a vertex).
/// Only facets need listing; explicitly listed faces may carry weights.
WeightedComplex parse_complex(std::istream& in);
WeightedComplex parse_complex_file(const std::string& path);

/// Writes every simplex with its weight, one record per line; re-parsing
/// yields an equal complex.
void dump_complex(std::ostream& out, const WeightedComplex& K);

}  // namespace scer
