#include "tropcat/duality.hpp"

#include <functional>
#include <string>

namespace tropcat::duality {

using arc::ArcMorphism;
using arc::fdiv;
using tropcat::detail::require;

namespace {

void need_invertible_degree(const ArcMorphism& f) {
  if (f.deg() != 1) throw unsupported_error("duality needs degree 1");
  if (f.eqmod() != 1) throw unsupported_error("duality needs eqmod 1");
}

// min{x : g(x) >= y} for a monotone g with g(x + src) = g(x) + dst,
// located by a whole-period jump followed by binary search on one period.
long long adjoint_min_fn(long long g0, long long src, long long dst,
                         const std::function<long long(long long)>& g, long long y) {
  long long q = fdiv(y - g0, dst) - 1;
  long long lo = q * src;        // g(lo) < y
  long long hi = (q + 2) * src;  // g(hi) >= y
  while (lo + 1 < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (g(mid) >= y)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace

long long adjoint_min(const ArcMorphism& f, long long y) {
  need_invertible_degree(f);
  return adjoint_min_fn(
      f.vals()[0], f.src(), f.dst(), [&](long long x) { return eval(f, x); }, y);
}

ArcMorphism transpose(const ArcMorphism& f) {
  need_invertible_degree(f);
  std::vector<long long> v(static_cast<size_t>(f.dst()));
  for (int y = 0; y < f.dst(); ++y) v[static_cast<size_t>(y)] = adjoint_min(f, y);
  return ArcMorphism::make(f.dst(), f.src(), 1, std::move(v), 1);
}

bool double_transpose_twist_holds(const ArcMorphism& f) {
  need_invertible_degree(f);
  // Representative-level double adjoint; the rule is periodic, so a window
  // around the fundamental one is conclusive.
  auto t1 = [&](long long y) { return adjoint_min(f, y); };
  long long t10 = t1(0);
  for (long long x = -f.src(); x < 2LL * f.src(); ++x) {
    long long t2 = adjoint_min_fn(t10, f.dst(), f.src(), t1, x + 1);
    if (t2 != eval(f, x) + 1) return false;
  }
  return true;
}

long long star_adjoint(const ArcMorphism& f, long long y) {
  return adjoint_min(f, y + 1) - 1;
}

ArcMorphism star_transpose(const ArcMorphism& f) {
  need_invertible_degree(f);
  std::vector<long long> v(static_cast<size_t>(f.dst()));
  for (int y = 0; y < f.dst(); ++y) v[static_cast<size_t>(y)] = star_adjoint(f, y);
  return ArcMorphism::make(f.dst(), f.src(), 1, std::move(v), 1);
}

trop::TropInt f_pairing(long long x, long long y, int n) {
  require(n >= 1, "period must be >= 1");
  return trop::TropInt::pow(-fdiv(y - x, n));
}

trop::BElem re_b(trop::TropInt t) {
  if (t.is_zero() || t.exponent() <= 0) return trop::BElem::zero;
  return trop::BElem::one;
}

void ResidueVector::set(int period, long long residue) {
  require(period >= 1, "period must be >= 1");
  residues_[period] = static_cast<int>(arc::fmod(residue, period));
}

bool ResidueVector::has(int period) const { return residues_.count(period) != 0; }

int ResidueVector::at(int period) const {
  auto it = residues_.find(period);
  if (it == residues_.end())
    throw mismatch_error("no residue stored for period " + std::to_string(period));
  return it->second;
}

bool ResidueVector::projective() const {
  for (const auto& [a, za] : residues_)
    for (const auto& [b, zb] : residues_)
      if (b % a == 0 && zb % a != za) return false;
  return true;
}

ArcMorphism beta_twist(const ArcMorphism& f, const ResidueVector& z) {
  if (f.deg() < 1) throw unsupported_error("twist needs degree >= 1");
  if (f.eqmod() != 1) throw unsupported_error("twist needs eqmod 1");
  ArcMorphism pre = arc::rotation_power(f.src(), -static_cast<long long>(z.at(f.src())));
  ArcMorphism post = arc::rotation_power(f.dst(), z.at(f.dst()));
  return compose(post, compose(f, pre));
}

}  // namespace tropcat::duality
