#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "tropcat/errors.hpp"

namespace tropcat::arc {

// Floored division and remainder for a positive modulus.
inline long long fdiv(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline long long fmod(long long a, long long b) { return a - fdiv(a, b) * b; }

/// Morphism between the archimedean sets (Z, x -> x + src) and
/// (Z, x -> x + dst), i.e. a non-decreasing map f with
/// f(x + src) = f(x) + deg * dst.  Stored by its values on one period,
/// reduced modulo the target translation: two maps differing by
/// eqmod * dst count as the same morphism, and the representative kept is
/// the one with vals[0] in [0, eqmod * dst).
///
/// deg = 0 is admitted and denotes a constant map; such morphisms are
/// rejected by the operations that need an unbounded (injective-image) map.
class ArcMorphism {
public:
  static ArcMorphism make(int src, int dst, int deg, std::vector<long long> raw_vals,
                          int eqmod = 1);
  static ArcMorphism identity(int period, int eqmod = 1);

  int src() const { return src_; }
  int dst() const { return dst_; }
  int deg() const { return deg_; }
  int eqmod() const { return eqmod_; }
  const std::vector<long long>& vals() const { return vals_; }

  friend bool operator==(const ArcMorphism&, const ArcMorphism&) = default;
  friend auto operator<=>(const ArcMorphism&, const ArcMorphism&) = default;

private:
  ArcMorphism() = default;
  int src_ = 1, dst_ = 1, deg_ = 1, eqmod_ = 1;
  std::vector<long long> vals_;
};

/// Value at an arbitrary integer point, via the periodicity rule.
long long eval(const ArcMorphism& f, long long x);

/// g after f.  Degrees multiply; both operands must share eqmod.
ArcMorphism compose(const ArcMorphism& g, const ArcMorphism& f);

/// The multiplicative degree marker (the semidirect N-component).
inline int mod_degree(const ArcMorphism& f) { return f.deg(); }

/// The canonical degree-k morphism from period k*n to period n carried by the
/// identity of Z.  Evaluates to the identity map on every integer.
ArcMorphism psi(int n, int k);

/// The k element classes lying over a degree-1 morphism under the period-
/// multiplying correspondence: target shifts of f re-read at k-fold periods.
/// Sorted, pairwise distinct, size exactly k.  Requires deg 1, eqmod 1.
std::vector<ArcMorphism> psi_classes(const ArcMorphism& f, int k);

/// Distinguished element of psi_classes(f, k): f itself re-read on the k-fold
/// periods (k-fold concatenation of the value list).  Requires deg 1, eqmod 1.
ArcMorphism subdivide(const ArcMorphism& f, int k);

/// Functor that divides the ambient equivalence level by k while multiplying
/// periods by k; the underlying map is unchanged.  Requires deg 1 and
/// k | eqmod.
ArcMorphism psi_functor(const ArcMorphism& f, int k);

/// Writes f (deg k >= 1) as compose(psi(f.dst, k), h) with h of degree 1.
std::pair<ArcMorphism, ArcMorphism> factor(const ArcMorphism& f);

/// Injective monotone generator, period n -> n + 1, skipping residue j
/// (0 <= j <= n).
ArcMorphism face(int n, int j, int eqmod = 1);

/// Surjective monotone generator, period n + 1 -> n, hitting residue j twice
/// (0 <= j <= n - 1).
ArcMorphism degeneracy(int n, int j, int eqmod = 1);

/// The cyclic rotation x -> x - 1 on period n.
ArcMorphism rotation(int n, int eqmod = 1);

/// rotation(n)^j for any integer j (negative j gives the inverse power).
ArcMorphism rotation_power(int n, long long j, int eqmod = 1);

/// Drops the equivalence level from f.eqmod to b; requires b | f.eqmod.
ArcMorphism forget(const ArcMorphism& f, int b);

/// Map of finite orbit spaces with a free cyclic group action: the source has
/// group_order * src_orbits points, x -> x + src_orbits generates the action,
/// and the table commutes with it.
struct EquivariantSetMap {
  int group_order = 1;
  int src_orbits = 1;
  int dst_orbits = 1;
  std::vector<int> table;

  static EquivariantSetMap make(int group_order, int src_orbits, int dst_orbits,
                                std::vector<int> table);

  friend bool operator==(const EquivariantSetMap&, const EquivariantSetMap&) = default;
};

/// Quotient of f by the a-th power of the translations on both sides.
/// Requires f.eqmod == a, and deg 1 whenever a > 1.
EquivariantSetMap orbit_map(const ArcMorphism& f, int a);

/// Number of equivariant maps between free cyclic-group sets of order a with
/// n and m orbits: (a*m)^n.
std::uint64_t hom_count_sets(int n, int m, int a);

/// Degree-1 embedding classifying the sub-semimodule spanned by the given
/// residues: subset {y_0 < ... < y_{k-1}} of {0..n-1} gives the morphism of
/// period k into period n with those values.
ArcMorphism submodule_embedding(int n, const std::vector<int>& subset);

/// All canonical morphisms with the given periods, degree and eqmod.
std::vector<ArcMorphism> enumerate_morphisms(int src, int dst, int deg, int eqmod = 1);

/// Uniformly random canonical morphism with the given shape (test support).
ArcMorphism random_morphism(std::mt19937_64& rng, int src, int dst, int deg,
                            int eqmod = 1);

/// Closed interval on the circle of period n, from point `base` spanning
/// `len` steps clockwise (0 <= len <= n).  Length 0 and length n segments at
/// the same base point are distinct.
struct Segment {
  int base = 0;
  int len = 0;
  friend bool operator==(Segment, Segment) = default;
  friend auto operator<=>(Segment, Segment) = default;
};

/// The abstract circle attached to the archimedean set of period n: the
/// quotient of the intervals [x, y], x <= y <= x + n, by the translation.
class Circle {
public:
  explicit Circle(int period);

  int period() const { return period_; }
  int point_count() const { return period_; }

  bool valid(Segment s) const;
  int d0(Segment s) const;  // initial endpoint
  int d1(Segment s) const;  // final endpoint
  Segment zero_seg(int x) const;  // degenerate segment at x
  Segment full_seg(int x) const;  // whole circle based at x
  Segment star(Segment s) const;  // complementary segment
  /// Concatenation; requires d1(s) == d0(t) and len sum <= period.
  Segment unite(Segment s, Segment t) const;
  /// The unique segment with endpoints x, y and 0 < len < period (x != y).
  Segment between(int x, int y) const;
  std::vector<Segment> segments() const;

private:
  int period_;
};

namespace detail {

// Composition kernel on raw value windows; shared by compose() and the
// exhaustive law checks, which cannot afford per-call allocation.
// out must have room for f_src values.  Returns the composite degree.
inline long long eval_raw(const long long* vals, int src, int dst, int deg,
                          long long x) {
  long long q = fdiv(x, src);
  return vals[x - q * src] + q * static_cast<long long>(deg) * dst;
}

inline void compose_raw(const long long* gvals, int gsrc, int gdst, int gdeg,
                        const long long* fvals, int fsrc, long long window,
                        long long* out) {
  for (int i = 0; i < fsrc; ++i) out[i] = eval_raw(gvals, gsrc, gdst, gdeg, fvals[i]);
  long long shift = fdiv(out[0], window) * window;
  if (shift != 0)
    for (int i = 0; i < fsrc; ++i) out[i] -= shift;
}

}  // namespace detail

}  // namespace tropcat::arc
