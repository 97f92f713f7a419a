#include "tropcat/chains.hpp"

#include <algorithm>
#include <numeric>

namespace tropcat::chains {

using tropcat::detail::require;
using tropcat::detail::require_match;

ChainMap ChainMap::make(int src_rank, int dst_rank, std::vector<int> vals) {
  require(src_rank >= 0 && dst_rank >= 0, "chain ranks must be >= 0");
  require(vals.size() == static_cast<size_t>(src_rank),
          "value list length must equal the source rank");
  int prev = 0;
  for (int v : vals) {
    require(v >= 0 && v <= dst_rank, "chain value out of range");
    require(v >= prev, "values must be non-decreasing");
    prev = v;
  }
  ChainMap f;
  f.src_rank = src_rank;
  f.dst_rank = dst_rank;
  f.vals = std::move(vals);
  return f;
}

ChainMap ChainMap::identity(int rank) {
  std::vector<int> v(static_cast<size_t>(rank));
  std::iota(v.begin(), v.end(), 1);
  return make(rank, rank, std::move(v));
}

int ChainMap::operator()(int x) const {
  require(x >= 0 && x <= src_rank, "chain element out of range");
  return x == 0 ? 0 : vals[static_cast<size_t>(x) - 1];
}

bool is_zero_reflecting(const ChainMap& f) {
  return std::all_of(f.vals.begin(), f.vals.end(), [](int v) { return v >= 1; });
}

bool is_endpoint_preserving(const ChainMap& f) {
  return f.src_rank == 0 ? f.dst_rank == 0 : f.vals.back() == f.dst_rank;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  require_match(f.dst_rank == g.src_rank, "composition needs f.dst_rank == g.src_rank");
  std::vector<int> v(static_cast<size_t>(f.src_rank));
  for (int x = 1; x <= f.src_rank; ++x) v[static_cast<size_t>(x) - 1] = g(f(x));
  return ChainMap::make(f.src_rank, g.dst_rank, std::move(v));
}

trop::BElem b_pairing(int x, int y) {
  return x <= y ? trop::BElem::zero : trop::BElem::one;
}

int transpose_at(const ChainMap& f, int y) {
  require(y >= 0 && y <= f.dst_rank, "chain element out of range");
  for (int x = f.src_rank; x >= 1; --x)
    if (f(x) <= y) return x;
  return 0;
}

ChainMap b_transpose(const ChainMap& f) {
  int n = f.src_rank, m = f.dst_rank;
  std::vector<int> v(static_cast<size_t>(m));
  for (int y = 1; y <= m; ++y)
    v[static_cast<size_t>(y) - 1] = n - transpose_at(f, m - y);
  return ChainMap::make(m, n, std::move(v));
}

BMatrix BMatrix::make(int n) {
  require(n >= 0, "matrix size must be >= 0");
  BMatrix x;
  x.n = n;
  x.a.assign(static_cast<size_t>(n) * n, trop::BElem::zero);
  return x;
}

BMatrix operator*(const BMatrix& x, const BMatrix& y) {
  require_match(x.n == y.n, "matrix sizes must agree");
  BMatrix out = BMatrix::make(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      trop::BElem s = trop::BElem::zero;
      for (int k = 0; k < x.n; ++k) s = s + x.at(i, k) * y.at(k, j);
      out.at(i, j) = s;
    }
  return out;
}

std::uint32_t BMatrix::apply(std::uint32_t v) const {
  std::uint32_t out = 0;
  for (int i = 0; i < n; ++i) {
    std::uint32_t row = 0;
    for (int j = 0; j < n; ++j)
      if (at(i, j) == trop::BElem::one) row |= 1u << j;
    if (row & v) out |= 1u << i;
  }
  return out;
}

BMatrix projection_matrix(int n) {
  BMatrix p = BMatrix::make(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) p.at(i, j) = trop::BElem::one;
  return p;
}

std::uint64_t count_submodules(int n, int k) {
  require(n >= 0 && k >= 0, "ranks must be >= 0");
  require(k <= n, "subsemimodule rank cannot exceed the ambient rank");
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
    if (r > UINT64_MAX / factor) throw bound_error("binomial overflows 64 bits");
    r = r * factor / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::vector<ChainMap> enumerate_chain_maps(int src_rank, int dst_rank) {
  require(src_rank >= 0 && dst_rank >= 0, "chain ranks must be >= 0");
  std::vector<ChainMap> out;
  std::vector<int> v(static_cast<size_t>(src_rank));
  auto rec = [&](auto&& self, int i, int low) -> void {
    if (i == src_rank) {
      out.push_back(ChainMap::make(src_rank, dst_rank, v));
      return;
    }
    for (int x = low; x <= dst_rank; ++x) {
      v[static_cast<size_t>(i)] = x;
      self(self, i + 1, x);
    }
  };
  rec(rec, 0, 0);
  return out;
}

int iota_point(int x, int n) {
  require(n >= 1, "chain rank must be >= 1");
  require(x >= 1 && x <= n, "only nonzero chain elements have a point");
  return x - 1;
}

long long phi_point(trop::TropInt x, int j, int n) {
  require(!x.is_zero(), "only nonzero scalars act on points");
  return iota_point(j, n) + x.exponent() * static_cast<long long>(n);
}

arc::ArcMorphism simplicial_embedding(const ChainMap& f) {
  require(f.src_rank >= 1 && f.dst_rank >= 1, "chain ranks must be >= 1");
  require(is_zero_reflecting(f), "embedding needs a zero-reflecting map");
  std::vector<long long> v(static_cast<size_t>(f.src_rank));
  for (int j = 0; j < f.src_rank; ++j) v[static_cast<size_t>(j)] = f(j + 1) - 1;
  return arc::ArcMorphism::make(f.src_rank, f.dst_rank, 1, std::move(v));
}

}  // namespace tropcat::chains
