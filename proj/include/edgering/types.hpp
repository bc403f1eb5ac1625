#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace edgering {

// All arithmetic in this library is exact. Exponent vectors, incidence
// vectors, cone rows and lattice points are dense integer vectors; at the
// scales this library targets (walk lengths <= 2|E|, coordinates <= 2*degree)
// int64 never comes close to overflow, and the few places that could grow
// (binomial coefficients) are guarded.
using Int = std::int64_t;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

// Error taxonomy, mapped to CLI exit codes: invariant violations exit 2,
// input errors exit 3, resource guards exit 4.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct invariant_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Plain lexicographic comparison, first index decides. Returns -1/0/+1.
int lexCompare(const IntVec& a, const IntVec& b);

bool lexLess(const IntVec& a, const IntVec& b);

/// Exact binomial coefficient; throws resource_error on int64 overflow.
Int binomialCoeff(Int n, Int k);

}  // namespace edgering
