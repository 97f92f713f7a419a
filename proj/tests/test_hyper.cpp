// Unit tests for signed chains: multivalued addition, hypergroup axioms,
// sign-module laws, and the tensor decomposition of signed maps.
#include <doctest.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "tropcat/errors.hpp"
#include "tropcat/hyper.hpp"

using tropcat::chains::ChainMap;
using tropcat::hyper::HyperSet;
using tropcat::hyper::SignedElem;
using tropcat::hyper::SignedMap;
namespace hyper = tropcat::hyper;

TEST_CASE("signed elements canonicalize zero") {
  SignedElem z = SignedElem::make(2, 0, -1);
  CHECK(z.sign() == 1);
  CHECK(z == SignedElem::zero(2));
  CHECK(-z == z);
  SignedElem v = SignedElem::make(3, 2, -1);
  CHECK((-v) == SignedElem::make(3, 2, 1));
  CHECK_THROWS_AS(SignedElem::make(2, 3, 1), tropcat::error);
  CHECK_THROWS_AS(SignedElem::make(2, 1, 0), tropcat::error);
  CHECK_THROWS_AS(SignedElem::make(-1, 0, 1), tropcat::error);
  CHECK(hyper::scale(0, v) == SignedElem::zero(3));
  CHECK(hyper::scale(-1, v) == -v);
  CHECK(hyper::scale(1, v) == v);
  CHECK_THROWS_AS(hyper::scale(2, v), tropcat::error);
}

TEST_CASE("multivalued addition") {
  SignedElem p3 = SignedElem::make(3, 3, 1);
  SignedElem m1 = SignedElem::make(3, 1, -1);
  // Larger magnitude wins.
  CHECK(hyper::hyper_add(p3, m1) == HyperSet{p3});
  CHECK(hyper::hyper_add(m1, p3) == HyperSet{p3});
  // Equal elements give themselves.
  CHECK(hyper::hyper_add(m1, m1) == HyperSet{m1});
  // Zero is neutral.
  CHECK(hyper::hyper_add(SignedElem::zero(3), m1) == HyperSet{m1});
  // Opposite elements blur into the bounded interval.
  SignedElem p2 = SignedElem::make(2, 2, 1);
  HyperSet blur = hyper::hyper_add(p2, -p2);
  CHECK(blur == hyper::interval(p2));
  CHECK(blur.size() == 5);  // 0, +-1, +-2
  CHECK(std::is_sorted(blur.begin(), blur.end()));
  CHECK(blur.front() == SignedElem::zero(2));
  // Mixed ranks are rejected.
  CHECK_THROWS_AS(hyper::hyper_add(p3, p2), tropcat::mismatch_error);
  // Set-level addition distributes elementwise.
  HyperSet sum = hyper::hyper_add(HyperSet{p3, m1}, HyperSet{m1});
  CHECK(sum == HyperSet{m1, p3});
}

TEST_CASE("hypergroup axioms hold on small ranks") {
  for (int r = 0; r <= 4; ++r) CHECK(hyper::check_hypergroup(r));
  CHECK(hyper::all_elements(3).size() == 7);
  CHECK(hyper::all_elements(0).size() == 1);
}

TEST_CASE("sign module laws and the strictness witness") {
  for (int r = 0; r <= 4; ++r) {
    hyper::SignModuleReport rep = hyper::s_module_check(r);
    CHECK(rep.laws_hold);
    // (1 + -1)v = {-v..v} strictly contains {-v, 0, v} only once rank >= 2.
    CHECK(rep.strict_witness == (r >= 2));
  }
  // The strict inclusion itself, spelled out at rank 2.
  SignedElem v = SignedElem::make(2, 2, 1);
  HyperSet left{SignedElem::zero(2), -v, v};  // lv + l'v evaluated pointwise
  HyperSet right = hyper::hyper_add(v, -v);   // (l + l')v as the blur
  CHECK(std::includes(right.begin(), right.end(), left.begin(), left.end()));
  CHECK(left.size() < right.size());
}

TEST_CASE("signed maps and the tensor decomposition") {
  ChainMap f = ChainMap::identity(2);
  SignedMap g = hyper::tensor_morphism(f, {1, -1});
  CHECK(g.src_rank() == 2);
  CHECK(g.dst_rank() == 2);
  CHECK(g(SignedElem::make(2, 2, 1)) == SignedElem::make(2, 2, -1));
  CHECK(g(SignedElem::make(2, 2, -1)) == SignedElem::make(2, 2, 1));
  CHECK(g(SignedElem::make(2, 1, 1)) == SignedElem::make(2, 1, 1));
  CHECK(g(SignedElem::make(2, 1, -1)) == SignedElem::make(2, 1, -1));
  CHECK(g(SignedElem::zero(2)) == SignedElem::zero(2));
  auto [back_f, back_signs] = hyper::decompose(g);
  CHECK(back_f == f);
  CHECK(back_signs == std::vector<int>{1, -1});
  // Round trip over every zero-reflecting chain map and sign mask.
  for (const ChainMap& h : tropcat::chains::enumerate_chain_maps(2, 3)) {
    if (!tropcat::chains::is_zero_reflecting(h)) continue;
    for (int mask = 0; mask < 4; ++mask) {
      std::vector<int> signs{(mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1};
      SignedMap t = hyper::tensor_morphism(h, signs);
      auto [rf, rs] = hyper::decompose(t);
      CHECK(rf == h);
      CHECK(rs == signs);
    }
  }
  // Maps collapsing a nonzero element to zero do not decompose.
  std::vector<SignedElem> collapse(5, SignedElem::zero(2));
  SignedMap bad = SignedMap::make(2, 2, collapse);
  CHECK_THROWS_AS(hyper::decompose(bad), tropcat::error);
  // Sign mask length must match the source rank.
  CHECK_THROWS_AS(hyper::tensor_morphism(f, {1}), tropcat::error);
  CHECK_THROWS_AS(hyper::tensor_morphism(f, {1, 2}), tropcat::error);
  // Tensoring a zero-collapsing chain map builds a signed map that then
  // fails to decompose.
  SignedMap collapsed = hyper::tensor_morphism(ChainMap::make(1, 1, {0}), {1});
  CHECK(collapsed(SignedElem::make(1, 1, 1)) == SignedElem::zero(1));
  CHECK_THROWS_AS(hyper::decompose(collapsed), tropcat::error);
}

TEST_CASE("signed map validation") {
  // Image table must have one entry per source element.
  CHECK_THROWS_AS(SignedMap::make(2, 2, {}), tropcat::error);
  // Images must live in the stated target rank.
  std::vector<SignedElem> wrong(5, SignedElem::zero(3));
  CHECK_THROWS_AS(SignedMap::make(2, 2, wrong), tropcat::error);
  // Lookup requires matching rank.
  std::vector<SignedElem> ok(5, SignedElem::zero(2));
  SignedMap m = SignedMap::make(2, 2, ok);
  CHECK_THROWS_AS(m(SignedElem::zero(3)), tropcat::mismatch_error);
}
