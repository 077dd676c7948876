#include "quivermod/grassmannian.hpp"

namespace quivermod {

BigInt gaussian_binomial(int n, int k, std::uint64_t q) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= big_pow(q, static_cast<std::uint64_t>(n - i)) - 1;
    den *= big_pow(q, static_cast<std::uint64_t>(i + 1)) - 1;
  }
  return num / den;
}

namespace {

void pivot_sets(int k, int n, int start, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  for (int c = start; c <= n - (k - static_cast<int>(current.size())); ++c) {
    current.push_back(c);
    pivot_sets(k, n, c + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Matrix<Fp>> enumerate_rref_matrices(int k, int n, std::uint32_t p) {
  std::vector<std::vector<int>> sets;
  std::vector<int> current;
  pivot_sets(k, n, 0, current, sets);
  std::vector<Matrix<Fp>> out;
  for (const auto& piv : sets) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
    // free positions: right of the row's pivot, in a non-pivot column
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < k; ++r)
      for (int c = piv[static_cast<std::size_t>(r)] + 1; c < n; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free.emplace_back(r, c);
    std::uint64_t count = 1;
    for (std::size_t f = 0; f < free.size(); ++f) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Matrix<Fp> m = Matrix<Fp>::Constant(k, n, Fp(0, p));
      for (int r = 0; r < k; ++r) m(r, piv[static_cast<std::size_t>(r)]) = Fp(1, p);
      auto rest = idx;
      for (std::size_t f = free.size(); f-- > 0;) {
        m(free[f].first, free[f].second) = Fp(static_cast<std::int64_t>(rest % p), p);
        rest /= p;
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace quivermod
