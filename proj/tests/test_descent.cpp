// Unit tests for projecting periodic maps to plain set maps and lifting set
// maps back along cyclic descent counts.
#include <doctest.h>

#include <vector>

#include "tropcat/descent.hpp"
#include "tropcat/errors.hpp"

using tropcat::arc::ArcMorphism;
using tropcat::descent::SetMap;
namespace arc = tropcat::arc;
namespace descent = tropcat::descent;

namespace {

// Count positions with a cyclic drop directly.
int cdesc_oracle(const SetMap& s) {
  int d = 0;
  for (int j = 0; j < s.src_size; ++j)
    if (s((j + 1) % s.src_size) < s(j)) ++d;
  return d;
}

}  // namespace

TEST_CASE("set map basics") {
  SetMap s = SetMap::make(3, 2, {1, 0, 1});
  CHECK(s(0) == 1);
  CHECK(s(2) == 1);
  CHECK_THROWS_AS(s(3), tropcat::error);
  CHECK(SetMap::identity(3) == SetMap::make(3, 3, {0, 1, 2}));
  CHECK_THROWS_AS(SetMap::make(2, 2, {0}), tropcat::error);
  CHECK_THROWS_AS(SetMap::make(2, 2, {0, 2}), tropcat::error);
  CHECK_THROWS_AS(SetMap::make(0, 1, {}), tropcat::error);
}

TEST_CASE("cyclic descent numbers") {
  CHECK(descent::cdesc(SetMap::identity(3)) == 1);  // wraps 2 -> 0
  CHECK(descent::cdesc(SetMap::make(3, 3, {2, 1, 0})) == 2);
  CHECK(descent::cdesc(SetMap::make(3, 3, {1, 1, 1})) == 0);
  CHECK(descent::cdesc(SetMap::make(1, 3, {2})) == 0);
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) {
      std::vector<int> table(static_cast<size_t>(p), 0);
      while (true) {
        SetMap s = SetMap::make(p, q, table);
        CHECK(descent::cdesc(s) == cdesc_oracle(s));
        int i = 0;
        while (i < p && table[static_cast<size_t>(i)] == q - 1)
          table[static_cast<size_t>(i++)] = 0;
        if (i == p) break;
        ++table[static_cast<size_t>(i)];
      }
    }
}

TEST_CASE("lifting set maps to periodic morphisms") {
  ArcMorphism up = descent::lift(SetMap::make(3, 3, {1, 2, 0}));
  CHECK(up == ArcMorphism::make(3, 3, 1, {1, 2, 3}));
  ArcMorphism rev = descent::lift(SetMap::make(3, 3, {2, 1, 0}));
  CHECK(rev.deg() == 2);
  CHECK(rev.vals() == std::vector<long long>{2, 4, 6});
  // Frozen wire example used across the tool suite.
  CHECK(descent::lift(SetMap::make(3, 3, {2, 1, 0})) ==
        ArcMorphism::make(3, 3, 2, {2, 4, 6}));
  ArcMorphism flat = descent::lift(SetMap::make(2, 3, {1, 1}));
  CHECK(flat.deg() == 0);
  CHECK(flat.vals() == std::vector<long long>{1, 1});
  // The lift starts at s(0) and its degree is the cyclic descent count.
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) {
      std::vector<int> table(static_cast<size_t>(p), 0);
      while (true) {
        SetMap s = SetMap::make(p, q, table);
        ArcMorphism f = descent::lift(s);
        CHECK(f.src() == p);
        CHECK(f.dst() == q);
        CHECK(f.deg() == descent::cdesc(s));
        CHECK(f.vals()[0] == s(0));
        CHECK(descent::project(f) == s);
        int i = 0;
        while (i < p && table[static_cast<size_t>(i)] == q - 1)
          table[static_cast<size_t>(i++)] = 0;
        if (i == p) break;
        ++table[static_cast<size_t>(i)];
      }
    }
}

TEST_CASE("projection to point sets") {
  CHECK(descent::project(arc::rotation(3)) == SetMap::make(3, 3, {2, 0, 1}));
  CHECK(descent::project(ArcMorphism::identity(4)) == SetMap::identity(4));
  CHECK(descent::project(arc::psi(2, 2)) == SetMap::make(4, 2, {0, 1, 0, 1}));
  CHECK_THROWS_AS(descent::project(ArcMorphism::make(1, 1, 1, {0}, 2)),
                  tropcat::unsupported_error);
}

TEST_CASE("lifts are minimal") {
  CHECK(descent::minimality_witness(SetMap::make(3, 3, {2, 1, 0})));
  CHECK(descent::minimality_witness(SetMap::identity(2)));
  CHECK(descent::minimality_witness(SetMap::make(1, 1, {0})));
  CHECK_THROWS_AS(descent::minimality_witness(SetMap::identity(5)),
                  tropcat::bound_error);
  CHECK(descent::minimality_witness(SetMap::identity(5), 5));
}

TEST_CASE("projection is full") {
  CHECK(descent::fullness_check(3, 3));
  CHECK(descent::fullness_check(4, 2, 4));
  CHECK_THROWS_AS(descent::fullness_check(9, 2), tropcat::bound_error);
}
