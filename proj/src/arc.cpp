#include "tropcat/arc.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace tropcat::arc {

using tropcat::detail::require;
using tropcat::detail::require_match;

ArcMorphism ArcMorphism::make(int src, int dst, int deg, std::vector<long long> raw_vals,
                              int eqmod) {
  require(src >= 1, "source period must be >= 1");
  require(dst >= 1, "target period must be >= 1");
  require(deg >= 0, "degree must be >= 0");
  require(eqmod >= 1, "equivalence level must be >= 1");
  require(raw_vals.size() == static_cast<size_t>(src),
          "value list length must equal the source period");
  for (int i = 0; i + 1 < src; ++i)
    require(raw_vals[i] <= raw_vals[i + 1], "values must be non-decreasing");
  require(raw_vals[src - 1] <= raw_vals[0] + static_cast<long long>(deg) * dst,
          "periodicity slack: last value exceeds first value + deg * target period");

  long long window = static_cast<long long>(eqmod) * dst;
  long long shift = fdiv(raw_vals[0], window) * window;
  if (shift != 0)
    for (auto& v : raw_vals) v -= shift;

  ArcMorphism f;
  f.src_ = src;
  f.dst_ = dst;
  f.deg_ = deg;
  f.eqmod_ = eqmod;
  f.vals_ = std::move(raw_vals);
  return f;
}

ArcMorphism ArcMorphism::identity(int period, int eqmod) {
  std::vector<long long> v(static_cast<size_t>(period));
  std::iota(v.begin(), v.end(), 0LL);
  return make(period, period, 1, std::move(v), eqmod);
}

long long eval(const ArcMorphism& f, long long x) {
  return detail::eval_raw(f.vals().data(), f.src(), f.dst(), f.deg(), x);
}

ArcMorphism compose(const ArcMorphism& g, const ArcMorphism& f) {
  require_match(f.dst() == g.src(), "composition needs f.dst == g.src");
  require_match(f.eqmod() == g.eqmod(), "composition needs equal equivalence levels");
  std::vector<long long> out(static_cast<size_t>(f.src()));
  for (int i = 0; i < f.src(); ++i) out[i] = eval(g, f.vals()[i]);
  return ArcMorphism::make(f.src(), g.dst(), g.deg() * f.deg(), std::move(out),
                           f.eqmod());
}

ArcMorphism psi(int n, int k) {
  require(n >= 1, "period must be >= 1");
  require(k >= 1, "power index must be >= 1");
  std::vector<long long> v(static_cast<size_t>(k) * n);
  std::iota(v.begin(), v.end(), 0LL);
  return ArcMorphism::make(k * n, n, k, std::move(v));
}

namespace {

// f re-read with both periods multiplied by k, shifted by `shift` in the
// target; underlying map x -> f(x) + shift.
ArcMorphism reperiod(const ArcMorphism& f, int k, long long shift, int new_eqmod) {
  int n = f.src(), m = f.dst();
  std::vector<long long> v(static_cast<size_t>(k) * n);
  for (long long i = 0; i < k * static_cast<long long>(n); ++i)
    v[static_cast<size_t>(i)] = eval(f, i) + shift;
  return ArcMorphism::make(k * n, k * m, 1, std::move(v), new_eqmod);
}

}  // namespace

std::vector<ArcMorphism> psi_classes(const ArcMorphism& f, int k) {
  require(k >= 1, "power index must be >= 1");
  if (f.deg() != 1) throw unsupported_error("power correspondence needs degree 1");
  if (f.eqmod() != 1) throw unsupported_error("power correspondence needs eqmod 1");
  std::set<ArcMorphism> out;
  for (int j = 0; j < k; ++j)
    out.insert(reperiod(f, k, static_cast<long long>(j) * f.dst(), 1));
  return {out.begin(), out.end()};
}

ArcMorphism subdivide(const ArcMorphism& f, int k) {
  require(k >= 1, "power index must be >= 1");
  if (f.deg() != 1) throw unsupported_error("subdivision needs degree 1");
  if (f.eqmod() != 1) throw unsupported_error("subdivision needs eqmod 1");
  return reperiod(f, k, 0, 1);
}

ArcMorphism psi_functor(const ArcMorphism& f, int k) {
  require(k >= 1, "power index must be >= 1");
  if (f.deg() != 1) throw unsupported_error("period multiplication needs degree 1");
  require_match(f.eqmod() % k == 0, "period multiplication needs k | eqmod");
  return reperiod(f, k, 0, f.eqmod() / k);
}

std::pair<ArcMorphism, ArcMorphism> factor(const ArcMorphism& f) {
  int k = f.deg();
  if (k < 1) throw unsupported_error("constant morphisms do not factor");
  if (f.eqmod() != 1) throw unsupported_error("factorization needs eqmod 1");
  ArcMorphism h = ArcMorphism::make(f.src(), k * f.dst(), 1, f.vals(), 1);
  return {psi(f.dst(), k), h};
}

ArcMorphism face(int n, int j, int eqmod) {
  require(n >= 1, "period must be >= 1");
  require(j >= 0 && j <= n, "skipped residue out of range");
  std::vector<long long> v(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) v[static_cast<size_t>(x)] = x < j ? x : x + 1;
  return ArcMorphism::make(n, n + 1, 1, std::move(v), eqmod);
}

ArcMorphism degeneracy(int n, int j, int eqmod) {
  require(n >= 1, "period must be >= 1");
  require(j >= 0 && j <= n - 1, "doubled residue out of range");
  std::vector<long long> v(static_cast<size_t>(n) + 1);
  for (int x = 0; x <= n; ++x) v[static_cast<size_t>(x)] = x <= j ? x : x - 1;
  return ArcMorphism::make(n + 1, n, 1, std::move(v), eqmod);
}

ArcMorphism rotation(int n, int eqmod) { return rotation_power(n, 1, eqmod); }

ArcMorphism rotation_power(int n, long long j, int eqmod) {
  require(n >= 1, "period must be >= 1");
  std::vector<long long> v(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) v[static_cast<size_t>(x)] = x - j;
  return ArcMorphism::make(n, n, 1, std::move(v), eqmod);
}

ArcMorphism forget(const ArcMorphism& f, int b) {
  require(b >= 1, "equivalence level must be >= 1");
  require_match(f.eqmod() % b == 0, "level drop needs b | eqmod");
  return ArcMorphism::make(f.src(), f.dst(), f.deg(), f.vals(), b);
}

EquivariantSetMap EquivariantSetMap::make(int group_order, int src_orbits,
                                          int dst_orbits, std::vector<int> table) {
  require(group_order >= 1, "group order must be >= 1");
  require(src_orbits >= 1 && dst_orbits >= 1, "orbit counts must be >= 1");
  int sn = group_order * src_orbits, sm = group_order * dst_orbits;
  require(table.size() == static_cast<size_t>(sn),
          "orbit table length must be group_order * src_orbits");
  for (int v : table) require(v >= 0 && v < sm, "orbit table value out of range");
  for (int x = 0; x < sn; ++x)
    require(table[static_cast<size_t>((x + src_orbits) % sn)] ==
                (table[static_cast<size_t>(x)] + dst_orbits) % sm,
            "orbit table must commute with the translation action");
  EquivariantSetMap e;
  e.group_order = group_order;
  e.src_orbits = src_orbits;
  e.dst_orbits = dst_orbits;
  e.table = std::move(table);
  return e;
}

EquivariantSetMap orbit_map(const ArcMorphism& f, int a) {
  require(a >= 1, "group order must be >= 1");
  require_match(f.eqmod() == a, "orbit map needs eqmod == group order");
  if (a > 1 && f.deg() != 1)
    throw unsupported_error("orbit map at level > 1 needs degree 1");
  long long sn = static_cast<long long>(a) * f.src();
  long long sm = static_cast<long long>(a) * f.dst();
  std::vector<int> table(static_cast<size_t>(sn));
  for (long long x = 0; x < sn; ++x)
    table[static_cast<size_t>(x)] = static_cast<int>(fmod(eval(f, x), sm));
  return EquivariantSetMap::make(a, f.src(), f.dst(), std::move(table));
}

std::uint64_t hom_count_sets(int n, int m, int a) {
  require(n >= 1 && m >= 1, "orbit counts must be >= 1");
  require(a >= 1, "group order must be >= 1");
  std::uint64_t base = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(m);
  std::uint64_t out = 1;
  for (int i = 0; i < n; ++i) {
    if (base != 0 && out > UINT64_MAX / base)
      throw bound_error("equivariant map count overflows 64 bits");
    out *= base;
  }
  return out;
}

ArcMorphism submodule_embedding(int n, const std::vector<int>& subset) {
  require(n >= 1, "period must be >= 1");
  require(!subset.empty(), "residue subset must be non-empty");
  std::vector<long long> v;
  v.reserve(subset.size());
  int prev = -1;
  for (int y : subset) {
    require(y >= 0 && y < n, "residue out of range");
    require(y > prev, "residues must be strictly increasing");
    prev = y;
    v.push_back(y);
  }
  return ArcMorphism::make(static_cast<int>(subset.size()), n, 1, std::move(v));
}

std::vector<ArcMorphism> enumerate_morphisms(int src, int dst, int deg, int eqmod) {
  require(src >= 1 && dst >= 1 && deg >= 0 && eqmod >= 1, "invalid enumeration shape");
  std::vector<ArcMorphism> out;
  std::vector<long long> v(static_cast<size_t>(src));
  long long window = static_cast<long long>(eqmod) * dst;
  long long span = static_cast<long long>(deg) * dst;
  // vals[0] ranges over the canonical window, later values over the slack span.
  auto rec = [&](auto&& self, int i) -> void {
    if (i == src) {
      out.push_back(ArcMorphism::make(src, dst, deg, v, eqmod));
      return;
    }
    for (long long x = v[static_cast<size_t>(i) - 1]; x <= v[0] + span; ++x) {
      v[static_cast<size_t>(i)] = x;
      self(self, i + 1);
    }
  };
  for (long long first = 0; first < window; ++first) {
    v[0] = first;
    if (src == 1)
      out.push_back(ArcMorphism::make(src, dst, deg, v, eqmod));
    else
      rec(rec, 1);
  }
  return out;
}

ArcMorphism random_morphism(std::mt19937_64& rng, int src, int dst, int deg,
                            int eqmod) {
  long long window = static_cast<long long>(eqmod) * dst;
  std::uniform_int_distribution<long long> first(0, window - 1);
  std::vector<long long> v(static_cast<size_t>(src));
  v[0] = first(rng);
  std::uniform_int_distribution<long long> step(0, static_cast<long long>(deg) * dst);
  for (int i = 1; i < src; ++i) v[static_cast<size_t>(i)] = v[0] + step(rng);
  std::sort(v.begin() + 1, v.end());
  return ArcMorphism::make(src, dst, deg, std::move(v), eqmod);
}

Circle::Circle(int period) : period_(period) {
  require(period >= 1, "period must be >= 1");
}

bool Circle::valid(Segment s) const {
  return s.base >= 0 && s.base < period_ && s.len >= 0 && s.len <= period_;
}

int Circle::d0(Segment s) const {
  require(valid(s), "segment out of range");
  return s.base;
}

int Circle::d1(Segment s) const {
  require(valid(s), "segment out of range");
  return (s.base + s.len) % period_;
}

Segment Circle::zero_seg(int x) const {
  require(x >= 0 && x < period_, "point out of range");
  return Segment{x, 0};
}

Segment Circle::full_seg(int x) const {
  require(x >= 0 && x < period_, "point out of range");
  return Segment{x, period_};
}

Segment Circle::star(Segment s) const {
  require(valid(s), "segment out of range");
  return Segment{d1(s), period_ - s.len};
}

Segment Circle::unite(Segment s, Segment t) const {
  require(valid(s) && valid(t), "segment out of range");
  require_match(d1(s) == d0(t), "segments must share an endpoint in order");
  require(s.len + t.len <= period_, "combined segment would overrun the circle");
  return Segment{s.base, s.len + t.len};
}

Segment Circle::between(int x, int y) const {
  require(x >= 0 && x < period_ && y >= 0 && y < period_, "point out of range");
  require(x != y, "no unique proper segment between equal points");
  return Segment{x, static_cast<int>(fmod(y - x, period_))};
}

std::vector<Segment> Circle::segments() const {
  std::vector<Segment> out;
  out.reserve(static_cast<size_t>(period_) * (period_ + 1));
  for (int p = 0; p < period_; ++p)
    for (int len = 0; len <= period_; ++len) out.push_back(Segment{p, len});
  return out;
}

}  // namespace tropcat::arc
