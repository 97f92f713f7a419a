#include "tropcat/hyper.hpp"

#include <algorithm>
#include <cstdlib>

namespace tropcat::hyper {

using tropcat::detail::require;
using tropcat::detail::require_match;

SignedElem SignedElem::make(int rank, int mag, int sign) {
  require(rank >= 0, "chain rank must be >= 0");
  require(mag >= 0 && mag <= rank, "magnitude out of range");
  require(sign == 1 || sign == -1, "sign must be +1 or -1");
  SignedElem e;
  e.rank_ = rank;
  e.mag_ = mag;
  e.sign_ = mag == 0 ? 1 : sign;  // the two signed zeros are identified
  return e;
}

SignedElem SignedElem::operator-() const { return make(rank_, mag_, -sign_); }

static void sort_unique(HyperSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

SignedElem scale(int lambda, const SignedElem& v) {
  require(lambda >= -1 && lambda <= 1, "scalar must be in {-1, 0, +1}");
  if (lambda == 0) return SignedElem::zero(v.rank());
  return lambda == 1 ? v : -v;
}

HyperSet interval(const SignedElem& x) {
  HyperSet out;
  out.push_back(SignedElem::zero(x.rank()));
  for (int m = 1; m <= x.mag(); ++m) {
    out.push_back(SignedElem::make(x.rank(), m, 1));
    out.push_back(SignedElem::make(x.rank(), m, -1));
  }
  sort_unique(out);
  return out;
}

HyperSet hyper_add(const SignedElem& x, const SignedElem& y) {
  require_match(x.rank() == y.rank(), "mixed ambient chains");
  if (x == y) return {x};
  if (x.mag() > y.mag()) return {x};
  if (x.mag() < y.mag()) return {y};
  return interval(x);  // equal magnitude, opposite signs
}

HyperSet hyper_add(const HyperSet& xs, const HyperSet& ys) {
  HyperSet out;
  for (const SignedElem& x : xs)
    for (const SignedElem& y : ys) {
      HyperSet s = hyper_add(x, y);
      out.insert(out.end(), s.begin(), s.end());
    }
  sort_unique(out);
  return out;
}

HyperSet all_elements(int rank) {
  return interval(SignedElem::make(rank, rank, 1));
}

bool check_hypergroup(int rank) {
  const HyperSet all = all_elements(rank);
  const SignedElem zero = SignedElem::zero(rank);
  for (const SignedElem& x : all) {
    // neutral element
    if (hyper_add(x, zero) != HyperSet{x}) return false;
    // unique symmetric element
    int inverses = 0;
    for (const SignedElem& y : all) {
      HyperSet s = hyper_add(x, y);
      if (std::binary_search(s.begin(), s.end(), zero)) ++inverses;
    }
    if (inverses != 1) return false;
  }
  for (const SignedElem& x : all)
    for (const SignedElem& y : all) {
      if (hyper_add(x, y) != hyper_add(y, x)) return false;
      for (const SignedElem& z : all) {
        if (hyper_add(hyper_add(x, y), {z}) != hyper_add({x}, hyper_add(y, z)))
          return false;
        // reversibility
        HyperSet yz = hyper_add(y, z);
        if (std::binary_search(yz.begin(), yz.end(), x)) {
          HyperSet back = hyper_add(x, -y);
          if (!std::binary_search(back.begin(), back.end(), z)) return false;
        }
      }
    }
  return true;
}

namespace {

// The sign scalars as the signed rank-1 chain, for the multivalued scalar sum.
HyperSet scalar_sum(int l1, int l2) {
  auto enc = [](int l) {
    return SignedElem::make(1, l == 0 ? 0 : 1, l < 0 ? -1 : 1);
  };
  return hyper_add(enc(l1), enc(l2));
}

int scalar_of(const SignedElem& s) { return s.mag() == 0 ? 0 : s.sign(); }

}  // namespace

SignModuleReport s_module_check(int rank) {
  SignModuleReport rep;
  rep.laws_hold = true;
  const HyperSet all = all_elements(rank);
  const int scalars[] = {-1, 0, 1};
  for (const SignedElem& v : all) {
    if (scale(1, v) != v || !scale(0, v).is_zero()) rep.laws_hold = false;
    for (int l1 : scalars)
      for (int l2 : scalars) {
        if (scale(l1 * l2, v) != scale(l1, scale(l2, v))) rep.laws_hold = false;
        // multivalued scalar distributivity, an inclusion in general
        HyperSet lhs;
        for (const SignedElem& s : scalar_sum(l1, l2)) lhs.push_back(scale(scalar_of(s), v));
        sort_unique(lhs);
        HyperSet rhs = hyper_add(scale(l1, v), scale(l2, v));
        if (!std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end()))
          rep.laws_hold = false;
        if (l2 == -l1 && l1 != 0 && lhs != rhs) rep.strict_witness = true;
      }
    // addition distributes over the scalar action exactly
    for (const SignedElem& w : all) {
      if (w.rank() != v.rank()) continue;
      for (int l : scalars) {
        HyperSet lhs;
        for (const SignedElem& u : hyper_add(v, w)) lhs.push_back(scale(l, u));
        sort_unique(lhs);
        if (lhs != hyper_add(scale(l, v), scale(l, w))) rep.laws_hold = false;
      }
    }
  }
  return rep;
}

SignedMap SignedMap::make(int src_rank, int dst_rank, std::vector<SignedElem> images) {
  require(src_rank >= 0 && dst_rank >= 0, "chain ranks must be >= 0");
  require(images.size() == static_cast<size_t>(2 * src_rank + 1),
          "image table must cover every signed element");
  for (const SignedElem& e : images)
    require_match(e.rank() == dst_rank, "image outside the target chain");
  SignedMap g;
  g.src_rank_ = src_rank;
  g.dst_rank_ = dst_rank;
  g.images_ = std::move(images);
  return g;
}

SignedElem SignedMap::operator()(const SignedElem& v) const {
  require_match(v.rank() == src_rank_, "element outside the source chain");
  return images_[static_cast<size_t>(src_rank_ + v.sign() * v.mag())];
}

SignedMap tensor_morphism(const chains::ChainMap& f, const std::vector<int>& signs) {
  require(signs.size() == static_cast<size_t>(f.src_rank),
          "one sign per source level is required");
  for (int s : signs) require(s == 1 || s == -1, "sign must be +1 or -1");
  std::vector<SignedElem> images(static_cast<size_t>(2 * f.src_rank + 1),
                                 SignedElem::zero(f.dst_rank));
  for (int x = 1; x <= f.src_rank; ++x) {
    int eps = signs[static_cast<size_t>(x) - 1];
    images[static_cast<size_t>(f.src_rank + x)] =
        SignedElem::make(f.dst_rank, f(x), eps);
    images[static_cast<size_t>(f.src_rank - x)] =
        SignedElem::make(f.dst_rank, f(x), -eps);
  }
  return SignedMap::make(f.src_rank, f.dst_rank, std::move(images));
}

std::pair<chains::ChainMap, std::vector<int>> decompose(const SignedMap& g) {
  const HyperSet all = all_elements(g.src_rank());
  const SignedElem zero = SignedElem::zero(g.src_rank());
  require(g(zero).is_zero(), "map must send zero to zero");
  for (const SignedElem& v : all) {
    require(g(-v) == -g(v), "map must commute with the sign flip");
    require(v.is_zero() || !g(v).is_zero(), "only zero may map to zero");
    for (const SignedElem& w : all) {
      HyperSet image;
      for (const SignedElem& u : hyper_add(v, w)) image.push_back(g(u));
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      HyperSet target = hyper_add(g(v), g(w));
      require(std::includes(target.begin(), target.end(), image.begin(), image.end()),
              "map must be additive as a hypergroup morphism");
    }
  }
  std::vector<int> mags(static_cast<size_t>(g.src_rank()));
  std::vector<int> signs(static_cast<size_t>(g.src_rank()));
  for (int x = 1; x <= g.src_rank(); ++x) {
    SignedElem image = g(SignedElem::make(g.src_rank(), x, 1));
    mags[static_cast<size_t>(x) - 1] = image.mag();
    signs[static_cast<size_t>(x) - 1] = image.sign();
  }
  return {chains::ChainMap::make(g.src_rank(), g.dst_rank(), std::move(mags)),
          std::move(signs)};
}

}  // namespace tropcat::hyper
