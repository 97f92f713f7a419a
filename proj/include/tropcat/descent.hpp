#pragma once

#include <vector>

#include "tropcat/arc.hpp"

namespace tropcat::descent {

/// Plain map between finite sets {0..src_size-1} -> {0..dst_size-1}.
struct SetMap {
  int src_size = 1;
  int dst_size = 1;
  std::vector<int> table;

  static SetMap make(int src_size, int dst_size, std::vector<int> table);
  static SetMap identity(int n);

  int operator()(int x) const;

  friend bool operator==(const SetMap&, const SetMap&) = default;
};

/// Reduction of a period morphism to the underlying map of point sets
/// (values mod the target period).  Requires eqmod 1.
SetMap project(const arc::ArcMorphism& f);

/// Cyclic descent number: positions j in {0..p-1} with s(j+1) < s(j), reading
/// s(p) as s(0).
int cdesc(const SetMap& s);

/// Minimal monotone lift of s: vals[x] = s(x) + dst_size * c(x) where c(x)
/// counts the descents before x; the degree is cdesc(s).  A constant s lifts
/// to a degree-0 (constant) morphism.
arc::ArcMorphism lift(const SetMap& s);

/// True when no canonical morphism of degree < cdesc(s) projects to s and
/// exactly one of degree cdesc(s) does.  Exhaustive; sizes above max_size are
/// rejected with bound_error.
bool minimality_witness(const SetMap& s, int max_size = 4);

/// project(lift(s)) == s for every s between sets of the given sizes.
bool fullness_check(int p, int q, int max_size = 4);

}  // namespace tropcat::descent
