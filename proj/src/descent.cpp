#include "tropcat/descent.hpp"

#include <string>

namespace tropcat::descent {

using arc::ArcMorphism;
using tropcat::detail::require;

SetMap SetMap::make(int src_size, int dst_size, std::vector<int> table) {
  require(src_size >= 1 && dst_size >= 1, "set sizes must be >= 1");
  require(table.size() == static_cast<size_t>(src_size),
          "table length must equal the source size");
  for (int v : table) require(v >= 0 && v < dst_size, "table value out of range");
  SetMap s;
  s.src_size = src_size;
  s.dst_size = dst_size;
  s.table = std::move(table);
  return s;
}

SetMap SetMap::identity(int n) {
  std::vector<int> t(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<size_t>(i)] = i;
  return make(n, n, std::move(t));
}

int SetMap::operator()(int x) const {
  require(x >= 0 && x < src_size, "point out of range");
  return table[static_cast<size_t>(x)];
}

SetMap project(const ArcMorphism& f) {
  if (f.eqmod() != 1) throw unsupported_error("point projection needs eqmod 1");
  std::vector<int> t(static_cast<size_t>(f.src()));
  for (int x = 0; x < f.src(); ++x)
    t[static_cast<size_t>(x)] = static_cast<int>(arc::fmod(f.vals()[x], f.dst()));
  return SetMap::make(f.src(), f.dst(), std::move(t));
}

int cdesc(const SetMap& s) {
  int p = s.src_size, d = 0;
  for (int j = 0; j < p; ++j)
    if (s((j + 1) % p) < s(j)) ++d;
  return d;
}

ArcMorphism lift(const SetMap& s) {
  int p = s.src_size, q = s.dst_size;
  std::vector<long long> v(static_cast<size_t>(p));
  int drops = 0;
  for (int x = 0; x < p; ++x) {
    if (x > 0 && s(x) < s(x - 1)) ++drops;
    v[static_cast<size_t>(x)] = s(x) + static_cast<long long>(q) * drops;
  }
  return ArcMorphism::make(p, q, cdesc(s), std::move(v));
}

bool minimality_witness(const SetMap& s, int max_size) {
  if (s.src_size > max_size || s.dst_size > max_size)
    throw bound_error("set sizes exceed the enumeration bound of " +
                      std::to_string(max_size));
  int d = cdesc(s);
  for (int deg = 0; deg < d; ++deg)
    for (const ArcMorphism& f : arc::enumerate_morphisms(s.src_size, s.dst_size, deg))
      if (project(f) == s) return false;
  int hits = 0;
  for (const ArcMorphism& f : arc::enumerate_morphisms(s.src_size, s.dst_size, d))
    if (project(f) == s) ++hits;
  return hits == 1;
}

bool fullness_check(int p, int q, int max_size) {
  if (p > max_size || q > max_size)
    throw bound_error("set sizes exceed the enumeration bound of " +
                      std::to_string(max_size));
  require(p >= 1 && q >= 1, "set sizes must be >= 1");
  std::vector<int> t(static_cast<size_t>(p), 0);
  while (true) {
    SetMap s = SetMap::make(p, q, t);
    if (project(lift(s)) != s) return false;
    int i = 0;
    while (i < p && t[static_cast<size_t>(i)] == q - 1) t[static_cast<size_t>(i++)] = 0;
    if (i == p) break;
    ++t[static_cast<size_t>(i)];
  }
  return true;
}

}  // namespace tropcat::descent
