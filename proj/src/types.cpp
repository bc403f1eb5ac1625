#include "edgering/types.hpp"

namespace edgering {

int lexCompare(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) {
    throw input_error("lexCompare: vector length mismatch");
  }
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

bool lexLess(const IntVec& a, const IntVec& b) { return lexCompare(a, b) < 0; }

Int binomialCoeff(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (Int i = 1; i <= k; ++i) {
    // result * (n-k+i) stays integral after dividing by i
    Int factor = n - k + i;
    if (result > (std::int64_t{1} << 62) / std::max<Int>(factor, 1)) {
      throw resource_error("binomialCoeff: int64 overflow");
    }
    result = result * factor / i;
  }
  return result;
}

}  // namespace edgering
