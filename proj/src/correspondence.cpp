#include "quivermod/correspondence.hpp"

namespace quivermod {

BigInt gauge_group_order(const DimVector& v, std::uint64_t q) {
  BigInt order = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto n = static_cast<std::uint64_t>(v[i]);
    const BigInt qn = big_pow(q, n);
    for (std::uint64_t k = 0; k < n; ++k) order *= qn - big_pow(q, k);
  }
  return order;
}

}  // namespace quivermod
