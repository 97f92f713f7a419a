#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "tropcat/chains.hpp"

namespace tropcat::hyper {

/// Element of the sign extension of a rank-n chain: a magnitude in {0..rank}
/// with a sign, the two signed zeros identified (canonical sign of 0 is +1).
class SignedElem {
public:
  static SignedElem make(int rank, int mag, int sign);
  static SignedElem zero(int rank) { return make(rank, 0, 1); }

  int rank() const { return rank_; }
  int mag() const { return mag_; }
  int sign() const { return sign_; }
  bool is_zero() const { return mag_ == 0; }

  SignedElem operator-() const;

  friend bool operator==(const SignedElem&, const SignedElem&) = default;
  friend auto operator<=>(const SignedElem&, const SignedElem&) = default;

private:
  SignedElem() = default;
  int rank_ = 0;
  int mag_ = 0;
  int sign_ = 1;
};

/// Finite subset of signed elements, kept sorted and deduplicated.
using HyperSet = std::vector<SignedElem>;

/// Scalar action of {-1, 0, +1}.
SignedElem scale(int lambda, const SignedElem& v);

/// The interval of all elements of magnitude <= |x|, both signs.
HyperSet interval(const SignedElem& x);

/// Multivalued addition: the larger magnitude wins; equal elements give
/// themselves; opposite elements blur into the whole interval they bound.
HyperSet hyper_add(const SignedElem& x, const SignedElem& y);

/// Elementwise extension of hyper_add to sets.
HyperSet hyper_add(const HyperSet& xs, const HyperSet& ys);

/// All elements of the signed rank-n chain.
HyperSet all_elements(int rank);

/// Canonical hypergroup axioms (associativity as sets, commutativity,
/// neutral zero, unique symmetric element, reversibility), exhaustively.
bool check_hypergroup(int rank);

struct SignModuleReport {
  bool laws_hold = false;       // scalar laws, distributivity inclusions
  bool strict_witness = false;  // some (l + l')v strictly inside lv + l'v
};

/// Module laws over the sign scalars, with the strictness witness for the
/// scalar-distributivity inclusion at opposite scalars.
SignModuleReport s_module_check(int rank);

/// Map between signed chains, given by an arbitrary image table (one entry
/// per source element, including both signs and zero).  No laws are assumed;
/// decompose() checks them.
class SignedMap {
public:
  /// images[index(e)] = image of e, where index(e) = src_rank + sign * mag.
  static SignedMap make(int src_rank, int dst_rank, std::vector<SignedElem> images);

  int src_rank() const { return src_rank_; }
  int dst_rank() const { return dst_rank_; }
  SignedElem operator()(const SignedElem& v) const;

  friend bool operator==(const SignedMap&, const SignedMap&) = default;

private:
  SignedMap() = default;
  int src_rank_ = 0;
  int dst_rank_ = 0;
  std::vector<SignedElem> images_;
};

/// The map sending +/-x to +/-signs[x-1] * f(x): a monotone magnitude part
/// twisted by a sign flip on each source level.
SignedMap tensor_morphism(const chains::ChainMap& f, const std::vector<int>& signs);

/// Writes g as tensor_morphism(f, signs), after checking that g is a lawful
/// signed-module map with only zero mapping to zero.  Inverse of
/// tensor_morphism on such maps.
std::pair<chains::ChainMap, std::vector<int>> decompose(const SignedMap& g);

}  // namespace tropcat::hyper
