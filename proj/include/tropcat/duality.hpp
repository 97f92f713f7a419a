#pragma once

#include <map>

#include "tropcat/arc.hpp"
#include "tropcat/tropical.hpp"

namespace tropcat::duality {

/// Galois adjoint value min{x : eval(f, x) >= y} for the stored
/// representative of f.  Requires deg 1, eqmod 1.
long long adjoint_min(const arc::ArcMorphism& f, long long y);

/// The transposed morphism, canonical representative.  Contravariant:
/// transpose(compose(g, f)) == compose(transpose(f), transpose(g)).
/// Requires deg 1, eqmod 1.
arc::ArcMorphism transpose(const arc::ArcMorphism& f);

/// Checks the double-transpose rule t(t(f))(x + 1) == f(x) + 1 pointwise on a
/// fundamental window, at the level of representatives (no renormalization in
/// between).
bool double_transpose_twist_holds(const arc::ArcMorphism& f);

/// Value of the adapted adjoint representative adjoint_min(f, y + 1) - 1.
/// This is the representative of star_transpose(f) that satisfies the pairing
/// adjunction on the nose.
long long star_adjoint(const arc::ArcMorphism& f, long long y);

/// The unique g with transpose(g) == f; canonical representative.
/// Requires deg 1, eqmod 1.
arc::ArcMorphism star_transpose(const arc::ArcMorphism& f);

/// Pairing of integer points of the period-n module and its dual: the scalar
/// u^k with k minimal such that x <= y + k * n.
trop::TropInt f_pairing(long long x, long long y, int n);

/// Scalar restriction to the two-element semifield: nonzero exactly on
/// strictly positive exponents.
trop::BElem re_b(trop::TropInt t);

/// One residue per period, the finite layers of a compatible tower of twists.
class ResidueVector {
public:
  void set(int period, long long residue);
  bool has(int period) const;
  int at(int period) const;

  /// True when the stored residues are compatible along divisibility:
  /// residue(b) == residue(a) mod a whenever a | b.
  bool projective() const;

  const std::map<int, int>& entries() const { return residues_; }

private:
  std::map<int, int> residues_;
};

/// Conjugation of f by the rotation powers picked out by z:
/// rotation(dst)^{z(dst)} after f after rotation(src)^{-z(src)}.
/// Requires deg >= 1, eqmod 1, and residues stored for both periods.
arc::ArcMorphism beta_twist(const arc::ArcMorphism& f, const ResidueVector& z);

}  // namespace tropcat::duality
