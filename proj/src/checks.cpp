#include "tropcat/checks.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstring>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tropcat/arc.hpp"
#include "tropcat/chains.hpp"
#include "tropcat/descent.hpp"
#include "tropcat/duality.hpp"
#include "tropcat/errors.hpp"
#include "tropcat/hyper.hpp"
#include "tropcat/tropical.hpp"

namespace tropcat::checks {

using arc::ArcMorphism;

namespace {

// Accumulates a result; only the first failure is kept.
struct Tally {
  CheckResult r;
  explicit Tally(std::string name) { r.name = std::move(name); }
  void count(long long k = 1) { r.instances += k; }
  template <typename... Parts>
  void expect(bool ok, const Parts&... parts) {
    ++r.instances;
    if (ok || !r.detail.empty()) return;
    std::ostringstream os;
    (os << ... << parts);
    r.detail = os.str();
  }
  CheckResult done() {
    r.passed = r.detail.empty();
    return r;
  }
};

std::string show(const ArcMorphism& f) {
  std::ostringstream os;
  os << f.src() << "->" << f.dst() << " deg " << f.deg() << " vals (";
  for (size_t i = 0; i < f.vals().size(); ++i)
    os << (i ? "," : "") << f.vals()[i];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// category laws

constexpr int kMaxFlatPeriod = 12;

struct FlatM {
  int src = 1, dst = 1, deg = 0;
  std::array<long long, kMaxFlatPeriod> v{};
};

FlatM flatten(const ArcMorphism& f) {
  FlatM m;
  m.src = f.src();
  m.dst = f.dst();
  m.deg = f.deg();
  std::copy(f.vals().begin(), f.vals().end(), m.v.begin());
  return m;
}

// All canonical eqmod-1 morphisms with periods <= P and degree <= K,
// bucketed by (src, dst, deg).
struct Universe {
  int P, K;
  std::vector<std::vector<ArcMorphism>> full;
  std::vector<std::vector<FlatM>> flat;

  Universe(int P_, int K_) : P(P_), K(K_) {
    detail::require(P <= kMaxFlatPeriod, "period bound exceeds the law-check cap");
    full.resize(static_cast<size_t>(P) * P * (K + 1));
    flat.resize(full.size());
    for (int src = 1; src <= P; ++src)
      for (int dst = 1; dst <= P; ++dst)
        for (int deg = 0; deg <= K; ++deg) {
          auto& bucket = full[index(src, dst, deg)];
          bucket = arc::enumerate_morphisms(src, dst, deg);
          auto& fb = flat[index(src, dst, deg)];
          fb.reserve(bucket.size());
          for (const ArcMorphism& f : bucket) fb.push_back(flatten(f));
        }
  }

  size_t index(int src, int dst, int deg) const {
    return (static_cast<size_t>(src - 1) * P + (dst - 1)) * (K + 1) + deg;
  }
  const std::vector<FlatM>& bucket(int src, int dst, int deg) const {
    return flat[index(src, dst, deg)];
  }
};

// Associativity instances for one middle morphism g.  Factor degrees and both
// composite degrees stay within the degree bound; without that cap the triple
// count is three orders of magnitude past the time budget.
//
// Every canonical value in play is nonnegative and below (K+1)*P, so each
// morphism that gets applied in the inner loop is replaced by a lookup table
// over that range; a triple then costs a handful of loads and two small
// divisions for the canonical shift.
long long associativity_for(const Universe& U, const FlatM& g, std::string* fail) {
  const int K = U.K, b = g.src, c = g.dst, kg = g.deg;
  constexpr int kTableCap = 64;
  const int bound = (K + 1) * U.P;  // exclusive bound on canonical values
  detail::require(bound <= kTableCap, "value bound exceeds the lookup cap");

  std::array<long long, kTableCap> tg{};
  for (int x = 0; x < bound; ++x)
    tg[static_cast<size_t>(x)] = arc::detail::eval_raw(g.v.data(), b, c, kg, x);

  std::vector<std::vector<FlatM>> gf(static_cast<size_t>(U.P) * (K + 1));
  for (int a = 1; a <= U.P; ++a)
    for (int kf = 0; kf <= K; ++kf) {
      if (kf * kg > K) continue;
      const auto& fs = U.bucket(a, b, kf);
      auto& out = gf[static_cast<size_t>(a - 1) * (K + 1) + kf];
      out.resize(fs.size());
      for (size_t i = 0; i < fs.size(); ++i) {
        out[i].src = a;
        out[i].dst = c;
        out[i].deg = kg * kf;
        const long long shift =
            tg[static_cast<size_t>(fs[i].v[0])] / c * c;
        for (int j = 0; j < a; ++j)
          out[i].v[static_cast<size_t>(j)] =
              tg[static_cast<size_t>(fs[i].v[static_cast<size_t>(j)])] - shift;
      }
    }

  long long triples = 0;
  std::array<long long, kTableCap> th{}, thg{};
  FlatM hgm;
  for (int d = 1; d <= U.P; ++d)
    for (int kh = 0; kh <= K; ++kh) {
      if (kh * kg > K) continue;
      const auto& hs = U.bucket(c, d, kh);
      for (size_t hi = 0; hi < hs.size(); ++hi) {
        const FlatM& h = hs[hi];
        for (int x = 0; x < bound; ++x)
          th[static_cast<size_t>(x)] =
              arc::detail::eval_raw(h.v.data(), c, d, kh, x);
        {
          const long long shift = th[static_cast<size_t>(g.v[0])] / d * d;
          for (int j = 0; j < b; ++j)
            hgm.v[static_cast<size_t>(j)] =
                th[static_cast<size_t>(g.v[static_cast<size_t>(j)])] - shift;
        }
        for (int x = 0; x < bound; ++x)
          thg[static_cast<size_t>(x)] =
              arc::detail::eval_raw(hgm.v.data(), b, d, kh * kg, x);

        for (int kf = 0; kf <= K; ++kf) {
          if (kf * kg > K || kf * kg * kh > K) continue;
          for (int a = 1; a <= U.P; ++a) {
            const auto& fs = U.bucket(a, b, kf);
            const auto& gfs = gf[static_cast<size_t>(a - 1) * (K + 1) + kf];
            for (size_t fi = 0; fi < fs.size(); ++fi) {
              const long long* fv = fs[fi].v.data();
              const long long* gv = gfs[fi].v.data();
              const long long sl = th[static_cast<size_t>(gv[0])] / d * d;
              const long long sr = thg[static_cast<size_t>(fv[0])] / d * d;
              bool ok = true;
              for (int j = 0; j < a; ++j)
                ok = ok && (th[static_cast<size_t>(gv[j])] - sl ==
                            thg[static_cast<size_t>(fv[j])] - sr);
              ++triples;
              if (!ok && fail->empty()) {
                std::ostringstream os;
                os << "associativity broke at degs (" << kh << "," << kg << ","
                   << kf << ") periods (" << a << "," << b << "," << c << "," << d
                   << ") indices (" << hi << "," << fi << ")";
                *fail = os.str();
              }
            }
          }
        }
      }
    }
  return triples;
}

}  // namespace

CheckResult check_category_laws(int max_period, int max_deg) {
  Tally t("composition associativity and unitality");
  Universe U(max_period, max_deg);

  for (const auto& bucket : U.full)
    for (const ArcMorphism& f : bucket) {
      t.expect(compose(ArcMorphism::identity(f.dst()), f) == f,
               "left unit failed on ", show(f));
      t.expect(compose(f, ArcMorphism::identity(f.src())) == f,
               "right unit failed on ", show(f));
      t.expect(mod_degree(compose(f, ArcMorphism::identity(f.src()))) == f.deg(),
               "degree marker changed under units on ", show(f));
    }

  // degree-1 eqmod-1 morphisms close under composition
  for (int a = 1; a <= max_period; ++a)
    for (int b = 1; b <= max_period; ++b)
      for (int c = 1; c <= max_period; ++c)
        for (const ArcMorphism& f : U.full[U.index(a, b, 1)])
          for (size_t gi = 0; gi < U.full[U.index(b, c, 1)].size();
               gi += (U.full[U.index(b, c, 1)].size() / 7) + 1) {
            const ArcMorphism& g = U.full[U.index(b, c, 1)][gi];
            t.expect(compose(g, f).deg() == 1,
                     "degree-1 composition left the subcategory");
          }

  std::vector<const FlatM*> mids;
  for (const auto& bucket : U.flat)
    for (const FlatM& g : bucket) mids.push_back(&g);
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<size_t> next{0};
  std::vector<long long> counts(workers, 0);
  std::vector<std::string> fails(mids.size());
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      size_t i;
      while ((i = next.fetch_add(1)) < mids.size())
        counts[w] += associativity_for(U, *mids[i], &fails[i]);
    });
  for (auto& th : pool) th.join();
  for (long long c : counts) t.count(c);
  for (const std::string& f : fails)
    if (!f.empty()) {
      t.expect(false, f);
      break;
    }
  return t.done();
}

CheckResult check_canonical_forms(int max_period, int max_deg, int samples,
                                  std::uint64_t seed) {
  Tally t("canonical forms and evaluation");
  for (int src = 1; src <= max_period; ++src)
    for (int dst = 1; dst <= max_period; ++dst)
      for (int deg = 0; deg <= max_deg; ++deg)
        for (const ArcMorphism& f : arc::enumerate_morphisms(src, dst, deg)) {
          t.expect(f.vals()[0] >= 0 && f.vals()[0] < dst,
                   "representative outside the canonical window: ", show(f));
          for (long long shift : {-2LL, -1LL, 1LL, 2LL}) {
            std::vector<long long> moved = f.vals();
            for (auto& v : moved) v += shift * dst;
            t.expect(ArcMorphism::make(src, dst, deg, moved) == f,
                     "translates normalized to different forms: ", show(f));
          }
          for (long long x = -2LL * src; x < 2LL * src; ++x) {
            t.expect(eval(f, x) <= eval(f, x + 1), "evaluation not monotone: ",
                     show(f));
            t.expect(eval(f, x + src) ==
                         eval(f, x) + static_cast<long long>(deg) * dst,
                     "periodicity rule failed: ", show(f));
          }
        }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> period(1, max_period);
  std::uniform_int_distribution<int> degree(0, max_deg);
  std::uniform_int_distribution<int> level(1, 3);
  for (int s = 0; s < samples; ++s) {
    int eq = level(rng);
    int src = period(rng), dst = period(rng), deg = degree(rng);
    ArcMorphism f = arc::random_morphism(rng, src, dst, deg, eq);
    t.expect(f.vals()[0] >= 0 && f.vals()[0] < static_cast<long long>(eq) * f.dst(),
             "random representative escaped the window: ", show(f));
    t.expect(ArcMorphism::make(f.src(), f.dst(), f.deg(), f.vals(), eq) == f,
             "normalization is not idempotent: ", show(f));
    t.expect(compose(ArcMorphism::identity(f.dst(), eq), f) == f &&
                 compose(f, ArcMorphism::identity(f.src(), eq)) == f,
             "unit laws failed at level ", eq, " on ", show(f));
  }

  bool rejected = false;
  try {
    arc::ArcMorphism::make(2, 2, 0, {0, 1});
  } catch (const tropcat::error&) {
    rejected = true;
  }
  t.expect(rejected, "non-constant degree-0 data was accepted");
  return t.done();
}

CheckResult check_tropical_semifield(int max_exp, int max_frob, int max_level) {
  Tally t("idempotent semifield arithmetic");
  using trop::TropInt;
  std::vector<TropInt> xs{TropInt::zero()};
  for (long long e = -max_exp; e <= max_exp; ++e) xs.push_back(TropInt::pow(e));
  const TropInt one = TropInt::pow(0), zero = TropInt::zero();

  for (const TropInt& x : xs) {
    t.expect(x + zero == x && zero + x == x, "additive unit failed");
    t.expect(x + x == x, "addition is not idempotent");
    t.expect(x * one == x && one * x == x, "multiplicative unit failed");
    t.expect(x * zero == zero, "zero is not absorbing");
    for (const TropInt& y : xs) {
      t.expect(x + y == y + x, "addition not commutative");
      t.expect(x * y == y * x, "multiplication not commutative");
      for (const TropInt& z : xs) {
        t.expect((x + y) + z == x + (y + z), "addition not associative");
        t.expect((x * y) * z == x * (y * z), "multiplication not associative");
        t.expect(x * (y + z) == x * y + x * z, "distributivity failed");
      }
    }
  }

  for (int n = 1; n <= max_frob; ++n) {
    for (const TropInt& x : xs) {
      for (const TropInt& y : xs) {
        t.expect(frobenius(n, x * y) == frobenius(n, x) * frobenius(n, y),
                 "power map not multiplicative");
        t.expect(frobenius(n, x + y) == frobenius(n, x) + frobenius(n, y),
                 "power map not additive");
        t.expect(!(frobenius(n, x) == frobenius(n, y)) || x == y,
                 "power map not injective");
      }
      for (int m = 1; m <= max_frob; ++m)
        t.expect(frobenius(n, frobenius(m, x)) == frobenius(n * m, x),
                 "power maps do not compose multiplicatively");
    }
  }
  bool rejected = false;
  try {
    frobenius(0, one);
  } catch (const tropcat::error&) {
    rejected = true;
  }
  t.expect(rejected, "index-0 power map was accepted");

  // only 1 and 0 lie in every power-map image
  for (long long e = -max_exp; e <= max_exp; ++e) {
    if (e == 0) continue;
    bool excluded = false;
    for (long long m = 2; m <= max_exp + 1 && !excluded; ++m)
      excluded = !in_frobenius_image(TropInt::pow(e), m);
    t.expect(excluded, "a nontrivial power lies in every image");
  }
  for (int m = 1; m <= max_frob; ++m)
    t.expect(in_frobenius_image(one, m) && in_frobenius_image(zero, m),
             "the base subfield left a power image");

  using trop::TropRat;
  std::set<std::pair<long long, long long>> seen;
  std::vector<TropRat> qs{TropRat::zero()};
  for (long long den = 1; den <= 4; ++den)
    for (long long num = -5 * den; num <= 5 * den; ++num) {
      trop::Rational r = trop::Rational::make(num, den);
      if (seen.insert({r.num, r.den}).second) qs.push_back(TropRat::pow(r));
    }
  const TropRat qone = TropRat::pow(0), qzero = TropRat::zero();
  for (const TropRat& x : qs)
    for (const TropRat& y : qs) {
      t.expect(x + y == y + x && x * y == y * x, "rational laws not commutative");
      for (const TropRat& z : qs) {
        t.expect((x + y) + z == x + (y + z), "rational addition not associative");
        t.expect((x * y) * z == x * (y * z), "rational product not associative");
        t.expect(x * (y + z) == x * y + x * z, "rational distributivity failed");
      }
    }
  for (const TropRat& x : qs) {
    t.expect(x + x == x && x * qone == x && x + qzero == x, "rational units failed");
    for (int n = 1; n <= max_frob; ++n) {
      t.expect(frobenius_inverse(n, frobenius(n, x)) == x,
               "power map not invertible on rationals");
      t.expect(frobenius(n, frobenius_inverse(n, x)) == x,
               "power map not surjective on rationals");
    }
  }

  // fixed subfields are ordered by divisibility of the level, strictly
  std::vector<TropRat> lattice{TropRat::zero()};
  for (long long den = 1; den <= max_level; ++den)
    for (long long num = -2 * max_level; num <= 2 * max_level; ++num)
      lattice.push_back(TropRat::pow(num, den));
  for (int n = 1; n <= max_level; ++n)
    for (int m = 1; m <= max_level; ++m) {
      if (m % n == 0) {
        for (const TropRat& x : lattice)
          t.expect(!in_subfield(x, n) || in_subfield(x, m),
                   "subfield inclusion failed at levels ", n, "|", m);
      } else {
        TropRat w = TropRat::pow(1, n);
        t.expect(in_subfield(w, n) && !in_subfield(w, m),
                 "no separating element for levels ", n, ",", m);
      }
    }

  using trop::BElem;
  const BElem bs[] = {BElem::zero, BElem::one};
  for (BElem x : bs)
    for (BElem y : bs) {
      t.expect(x + y == y + x && x * y == y * x, "two-element laws not commutative");
      for (BElem z : bs)
        t.expect((x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) &&
                     x * (y + z) == x * y + x * z,
                 "two-element semifield law failed");
    }
  t.expect(BElem::one + BElem::one == BElem::one, "1 + 1 must stay 1");
  return t.done();
}

CheckResult check_circle_geometry(int max_period) {
  Tally t("abstract circle structure");
  for (int n = 1; n <= max_period; ++n) {
    arc::Circle c(n);
    auto segs = c.segments();
    t.expect(segs.size() == static_cast<size_t>(n) * (n + 1),
             "segment count wrong at period ", n);
    for (int x = 0; x < n; ++x) {
      t.expect(c.d0(c.zero_seg(x)) == x && c.d1(c.zero_seg(x)) == x,
               "degenerate segment endpoints wrong");
      t.expect(c.d0(c.full_seg(x)) == x && c.d1(c.full_seg(x)) == x,
               "full segment endpoints wrong");
      t.expect(c.star(c.zero_seg(x)) == c.full_seg(x),
               "complement of a point is not the full circle");
    }
    for (arc::Segment s : segs) {
      t.expect(c.star(c.star(s)) == s, "complement is not an involution");
      t.expect(c.d0(c.star(s)) == c.d1(s) && c.d1(c.star(s)) == c.d0(s),
               "complement does not swap endpoints");
      t.expect(c.unite(s, c.star(s)) == c.full_seg(c.d0(s)),
               "segment plus complement is not the full circle");
      t.expect(c.unite(c.zero_seg(c.d0(s)), s) == s &&
                   c.unite(s, c.zero_seg(c.d1(s))) == s,
               "degenerate segments are not neutral for union");
      for (arc::Segment u : segs) {
        if (c.d0(u) != c.d1(s) || s.len + u.len > n) continue;
        arc::Segment su = c.unite(s, u);
        t.expect(c.d0(su) == c.d0(s) && c.d1(su) == c.d1(u),
                 "union endpoints wrong");
        t.expect(su.len == s.len + u.len, "union length wrong");
        for (arc::Segment w : segs) {
          if (c.d0(w) != c.d1(su) || su.len + w.len > n) continue;
          t.expect(c.unite(c.unite(s, u), w) == c.unite(s, c.unite(u, w)),
                   "union is not associative");
        }
      }
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        arc::Segment b = c.between(x, y);
        t.expect(c.d0(b) == x && c.d1(b) == y && b.len > 0 && b.len < n,
                 "connecting segment wrong");
        int matches = 0;
        for (arc::Segment s : segs)
          if (c.d0(s) == x && c.d1(s) == y && s.len > 0 && s.len < n) ++matches;
        t.expect(matches == 1, "connecting segment not unique");
      }
    bool rejected = false;
    try {
      c.unite(arc::Segment{0, n}, arc::Segment{0, 1});
    } catch (const tropcat::error&) {
      rejected = true;
    }
    t.expect(rejected, "overrunning union was accepted");
  }
  return t.done();
}

CheckResult check_cyclic_presentation(int max_object, int max_eqmod) {
  Tally t("rotation and simplicial generator relations");
  for (int a = 1; a <= max_eqmod; ++a)
    for (int n = 0; n <= max_object; ++n) {
      const int P = n + 1;
      ArcMorphism tp = arc::rotation(P, a);
      ArcMorphism acc = ArcMorphism::identity(P, a);
      for (int i = 0; i < P * a; ++i) acc = compose(tp, acc);
      t.expect(acc == ArcMorphism::identity(P, a),
               "rotation order broke at object ", n, " level ", a);

      ArcMorphism tq = arc::rotation(P + 1, a);
      t.expect(compose(tp, arc::degeneracy(P, 0, a)) ==
                   compose(arc::degeneracy(P, P - 1, a), compose(tq, tq)),
               "rotation/degeneracy edge relation broke at object ", n, " level ", a);
      for (int j = 1; j <= P - 1; ++j)
        t.expect(compose(tp, arc::degeneracy(P, j, a)) ==
                     compose(arc::degeneracy(P, j - 1, a), tq),
                 "rotation/degeneracy shuffle broke at object ", n, " index ", j);
      if (n >= 1) {
        t.expect(compose(tp, arc::face(P - 1, 0, a)) == arc::face(P - 1, P - 1, a),
                 "rotation/face edge relation broke at object ", n, " level ", a);
        ArcMorphism tsub = arc::rotation(P - 1, a);
        for (int j = 1; j <= P - 1; ++j)
          t.expect(compose(tp, arc::face(P - 1, j, a)) ==
                       compose(arc::face(P - 1, j - 1, a), tsub),
                   "rotation/face shuffle broke at object ", n, " index ", j);
      }

      // simplicial identities among faces and degeneracies
      for (int i = 0; i <= P + 1; ++i)
        for (int j = i + 1; j <= P + 1; ++j)
          t.expect(compose(arc::face(P + 1, j, a), arc::face(P, i, a)) ==
                       compose(arc::face(P + 1, i, a), arc::face(P, j - 1, a)),
                   "face/face relation broke at object ", n, " (", i, ",", j, ")");
      for (int i = 0; i <= P - 1; ++i)
        for (int j = i; j <= P - 1; ++j)
          t.expect(compose(arc::degeneracy(P, j, a), arc::degeneracy(P + 1, i, a)) ==
                       compose(arc::degeneracy(P, i, a),
                               arc::degeneracy(P + 1, j + 1, a)),
                   "degeneracy/degeneracy relation broke at object ", n, " (", i,
                   ",", j, ")");
      for (int j = 0; j <= P - 1; ++j)
        for (int i = 0; i <= P; ++i) {
          ArcMorphism lhs = compose(arc::degeneracy(P, j, a), arc::face(P, i, a));
          if (i == j || i == j + 1) {
            t.expect(lhs == ArcMorphism::identity(P, a),
                     "face/degeneracy cancellation broke at object ", n, " (", i,
                     ",", j, ")");
          } else if (i < j) {
            t.expect(lhs == compose(arc::face(P - 1, i, a),
                                    arc::degeneracy(P - 1, j - 1, a)),
                     "face/degeneracy exchange broke at object ", n, " (", i, ",",
                     j, ")");
          } else {
            t.expect(lhs == compose(arc::face(P - 1, i - 1, a),
                                    arc::degeneracy(P - 1, j, a)),
                     "face/degeneracy exchange broke at object ", n, " (", i, ",",
                     j, ")");
          }
        }
    }
  return t.done();
}

CheckResult check_epicyclic_presentation(int max_object, int max_k) {
  Tally t("power map relations");
  for (int n = 0; n <= max_object; ++n) {
    const int P = n + 1;
    t.expect(arc::psi(P, 1) == ArcMorphism::identity(P), "unit power map is not the identity");
    for (int k = 1; k <= max_k; ++k) {
      for (int l = 1; l <= max_k; ++l)
        t.expect(compose(arc::psi(P, l), arc::psi(l * P, k)) == arc::psi(P, k * l),
                 "power maps do not compose at object ", n, " k=", k, " l=", l);
      t.expect(compose(arc::rotation(P), arc::psi(P, k)) ==
                   compose(arc::psi(P, k), arc::rotation(k * P)),
               "rotation does not slide through the power map at object ", n);
      t.expect(mod_degree(arc::psi(P, k)) == k, "power map degree marker wrong");

      if (n >= 1)
        for (int j = 0; j <= n; ++j) {
          ArcMorphism al = arc::face(n, j);  // source period n, target period P
          t.expect(compose(al, arc::psi(n, k)) ==
                       compose(arc::psi(P, k), subdivide(al, k)),
                   "face does not slide through the power map, object ", n,
                   " j=", j, " k=", k);
        }
      for (int j = 0; j <= P - 1; ++j) {
        ArcMorphism al = arc::degeneracy(P, j);  // source period P+1, target P
        t.expect(compose(al, arc::psi(P + 1, k)) ==
                     compose(arc::psi(P, k), subdivide(al, k)),
                 "degeneracy does not slide through the power map, object ", n,
                 " j=", j, " k=", k);
      }
    }
  }
  return t.done();
}

CheckResult check_power_correspondence(int samples, int max_k, std::uint64_t seed) {
  Tally t("period-multiplying correspondence");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> period(1, 6);
  for (int s = 0; s < samples; ++s) {
    ArcMorphism f = arc::random_morphism(rng, period(rng), period(rng), 1);
    for (int k = 1; k <= max_k; ++k) {
      auto classes = arc::psi_classes(f, k);
      t.expect(classes.size() == static_cast<size_t>(k),
               "correspondence size is not ", k, " over ", show(f));
      ArcMorphism sub = subdivide(f, k);
      t.expect(std::find(classes.begin(), classes.end(), sub) != classes.end(),
               "distinguished element missing over ", show(f));
      ArcMorphism lhs = compose(f, arc::psi(f.src(), k));
      for (const ArcMorphism& g : classes)
        t.expect(lhs == compose(arc::psi(f.dst(), k), g),
                 "exchange rule failed over ", show(f));
    }
  }
  // multiplicativity on composable pairs, small periods, exhaustive
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int p = 1; p <= 3; ++p)
        for (const ArcMorphism& f : arc::enumerate_morphisms(n, m, 1))
          for (const ArcMorphism& g : arc::enumerate_morphisms(m, p, 1))
            for (int k = 2; k <= 3; ++k) {
              std::set<ArcMorphism> composed;
              for (const ArcMorphism& gu : arc::psi_classes(g, k))
                for (const ArcMorphism& fu : arc::psi_classes(f, k))
                  composed.insert(compose(gu, fu));
              auto direct = arc::psi_classes(compose(g, f), k);
              t.expect(std::vector<ArcMorphism>(composed.begin(), composed.end()) ==
                           direct,
                       "correspondence is not multiplicative at periods (", n, ",",
                       m, ",", p, ") k=", k);
            }
  return t.done();
}

CheckResult check_factorization(int max_period, int max_deg) {
  Tally t("power-map factorization");
  for (int src = 1; src <= max_period; ++src)
    for (int dst = 1; dst <= max_period; ++dst)
      for (int deg = 1; deg <= max_deg; ++deg)
        for (const ArcMorphism& f : arc::enumerate_morphisms(src, dst, deg)) {
          auto [p, h] = factor(f);
          t.expect(h.deg() == 1, "carrier part is not degree 1: ", show(f));
          t.expect(p == arc::psi(f.dst(), deg), "power part wrong: ", show(f));
          t.expect(compose(p, h) == f, "recomposition failed: ", show(f));
        }
  bool rejected = false;
  try {
    factor(ArcMorphism::make(2, 2, 0, {1, 1}));
  } catch (const tropcat::unsupported_error&) {
    rejected = true;
  }
  t.expect(rejected, "constant morphism factorization was accepted");
  return t.done();
}

CheckResult check_subobject_bijection(int max_period) {
  Tally t("residue subsets classify degree-1 embeddings");
  for (int n = 1; n <= max_period; ++n) {
    std::set<ArcMorphism> images;
    std::vector<std::uint64_t> per_rank(static_cast<size_t>(n) + 1, 0);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> subset;
      for (int y = 0; y < n; ++y)
        if (mask & (1u << y)) subset.push_back(y);
      ArcMorphism f = arc::submodule_embedding(n, subset);
      ++per_rank[subset.size()];
      t.expect(f.deg() == 1 && f.src() == static_cast<int>(subset.size()) &&
                   f.dst() == n,
               "embedding shape wrong at period ", n);
      for (long long x = -f.src(); x < f.src(); ++x)
        t.expect(eval(f, x) < eval(f, x + 1), "embedding is not strictly monotone");
      std::set<int> residues;
      for (int x = 0; x < f.src(); ++x)
        residues.insert(static_cast<int>(arc::fmod(f.vals()[x], n)));
      t.expect(residues == std::set<int>(subset.begin(), subset.end()),
               "embedding image disagrees with the subset at period ", n);
      images.insert(f);
    }
    t.expect(images.size() == (1u << n) - 1,
             "distinct subsets collided at period ", n);
    for (int k = 1; k <= n; ++k)
      t.expect(per_rank[static_cast<size_t>(k)] == chains::count_submodules(n, k),
               "subset count disagrees with the subobject count at (", n, ",", k, ")");
  }
  bool rejected = false;
  try {
    arc::submodule_embedding(3, {});
  } catch (const tropcat::error&) {
    rejected = true;
  }
  t.expect(rejected, "empty subset was accepted");
  return t.done();
}

CheckResult check_duality_adjunction(int max_period) {
  Tally t("transpose adjunction and pairings");
  for (int n = 1; n <= max_period; ++n)
    for (int m = 1; m <= max_period; ++m)
      for (const ArcMorphism& f : arc::enumerate_morphisms(n, m, 1)) {
        for (long long y = -m; y < 2LL * m; ++y) {
          long long ty = duality::adjoint_min(f, y);
          for (long long x = -n; x < 2LL * n; ++x)
            t.expect((eval(f, x) >= y) == (x >= ty),
                     "order adjunction failed on ", show(f));
          t.expect(duality::adjoint_min(f, y + m) == ty + n,
                   "adjoint periodicity failed on ", show(f));
          for (long long k = -2; k <= 2; ++k)
            t.expect(duality::adjoint_min(f, y + k * m) == ty + k * n,
                     "representative shift rule failed on ", show(f));
        }
        for (long long x = -n; x < 2LL * n; ++x)
          for (long long y = -m; y < 2LL * m; ++y)
            t.expect(duality::f_pairing(eval(f, x), y, m) ==
                         duality::f_pairing(x, duality::star_adjoint(f, y), n),
                     "pairing adjunction failed on ", show(f));
      }

  for (int n = 1; n <= max_period; ++n)
    for (long long x = -n; x <= n; ++x)
      for (long long y = -n; y <= n; ++y) {
        trop::TropInt p = duality::f_pairing(x, y, n);
        t.expect(duality::f_pairing(x, x, n) == trop::TropInt::pow(0),
                 "self pairing is not the unit");
        for (long long j = -2; j <= 2; ++j) {
          t.expect(duality::f_pairing(x + j * n, y, n) == trop::TropInt::pow(j) * p,
                   "pairing not linear in the first slot");
          t.expect(duality::f_pairing(x, y + j * n, n) * trop::TropInt::pow(j) == p,
                   "pairing not linear in the second slot");
        }
        t.expect((duality::re_b(p) == trop::BElem::zero) == (x <= y),
                 "scalar restriction disagrees with the order pairing");
      }
  return t.done();
}

CheckResult check_duality_functor(int max_period) {
  Tally t("transpose functor");
  for (int n = 1; n <= max_period; ++n) {
    t.expect(duality::transpose(ArcMorphism::identity(n)) == ArcMorphism::identity(n),
             "transpose of the identity moved");
    t.expect(duality::transpose(arc::rotation(n)) == arc::rotation_power(n, -1),
             "transpose of the rotation is not its inverse");
    for (int m = 1; m <= max_period; ++m)
      for (const ArcMorphism& f : arc::enumerate_morphisms(n, m, 1)) {
        ArcMorphism tf = duality::transpose(f);
        t.expect(tf.src() == m && tf.dst() == n && tf.deg() == 1,
                 "transpose shape wrong on ", show(f));
        t.expect(duality::double_transpose_twist_holds(f),
                 "double-transpose twist failed on ", show(f));
        ArcMorphism twist = compose(arc::rotation_power(m, -1),
                                    compose(f, arc::rotation_power(n, 1)));
        t.expect(duality::transpose(tf) == twist,
                 "class-level double transpose is not the shifted conjugate on ",
                 show(f));
        t.expect(duality::transpose(duality::star_transpose(f)) == f,
                 "starred map does not transpose back on ", show(f));
        t.expect(duality::star_transpose(duality::transpose(f)) == f,
                 "transpose does not star back on ", show(f));
      }
  }
  for (int n = 1; n <= max_period; ++n)
    for (int m = 1; m <= max_period; ++m)
      for (int p = 1; p <= max_period; ++p)
        for (const ArcMorphism& f : arc::enumerate_morphisms(n, m, 1))
          for (const ArcMorphism& g : arc::enumerate_morphisms(m, p, 1))
            t.expect(duality::transpose(compose(g, f)) ==
                         compose(duality::transpose(f), duality::transpose(g)),
                     "transpose is not contravariant on ", show(f), " and ", show(g));

  bool rejected = false;
  try {
    duality::transpose(arc::psi(2, 2));
  } catch (const tropcat::unsupported_error&) {
    rejected = true;
  }
  t.expect(rejected, "transpose of a degree-2 morphism was accepted");

  // rotation-conjugation twists parametrized by compatible residues
  duality::ResidueVector z;
  for (int n = 1; n <= 2 * max_period; ++n) z.set(n, n - 1);
  for (int n = 1; n <= max_period; ++n)
    for (int k = 1; k <= 3; ++k) {
      if (k * n > 2 * max_period) continue;
      bool fixes = duality::beta_twist(arc::psi(n, k), z) == arc::psi(n, k);
      bool compatible = (z.at(k * n) - z.at(n)) % n == 0;
      t.expect(fixes == compatible, "twist fixes the power map iff residues agree (",
               n, ",", k, ")");
    }
  duality::ResidueVector bad;
  bad.set(2, 1);
  bad.set(4, 2);
  t.expect(!bad.projective(), "incompatible residue tower reported compatible");
  duality::ResidueVector good;
  for (int n = 1; n <= 12; ++n) good.set(n, 7 % n);
  t.expect(good.projective(), "compatible residue tower reported incompatible");
  return t.done();
}

CheckResult check_chain_duality(int max_rank) {
  Tally t("finite chain duality");
  using chains::ChainMap;
  for (int n = 0; n <= max_rank; ++n) {
    t.expect(chains::b_transpose(ChainMap::identity(n)) == ChainMap::identity(n),
             "chain transpose of the identity moved");
    for (int m = 0; m <= max_rank; ++m)
      for (const ChainMap& f : chains::enumerate_chain_maps(n, m)) {
        t.expect(chains::b_transpose(chains::b_transpose(f)) == f,
                 "chain double transpose moved a map");
        ChainMap tf = chains::b_transpose(f);
        t.expect(chains::is_zero_reflecting(f) == chains::is_endpoint_preserving(tf),
                 "zero reflection does not match endpoint preservation on the dual");
        t.expect(chains::is_endpoint_preserving(f) == chains::is_zero_reflecting(tf),
                 "endpoint preservation does not match zero reflection on the dual");
        for (int y = 0; y <= m; ++y) {
          int ty = chains::transpose_at(f, y);
          for (int x = 0; x <= n; ++x) {
            t.expect((f(x) <= y) == (x <= ty), "chain adjunction failed");
            t.expect(chains::b_pairing(f(x), y) == chains::b_pairing(x, ty),
                     "chain pairing adjunction failed");
          }
        }
        for (int p = 0; p <= max_rank; ++p)
          for (const ChainMap& g : chains::enumerate_chain_maps(m, p))
            t.expect(chains::b_transpose(chains::compose(g, f)) ==
                         chains::compose(chains::b_transpose(f),
                                         chains::b_transpose(g)),
                     "chain transpose is not contravariant");
      }
  }
  // linear forms with values in the two-element semifield = dual chain
  for (int n = 0; n <= max_rank + 1; ++n) {
    auto forms = chains::enumerate_chain_maps(n, 1);
    t.expect(forms.size() == static_cast<size_t>(n) + 1,
             "form count is not rank + 1 at rank ", n);
    for (int y = 0; y <= n; ++y) {
      int matches = 0;
      for (const chains::ChainMap& form : forms) {
        bool same = true;
        for (int x = 0; x <= n; ++x)
          same = same && ((form(x) == 0) == (chains::b_pairing(x, y) ==
                                             trop::BElem::zero));
        if (same) ++matches;
      }
      t.expect(matches == 1, "pairing against ", y, " is not a unique form");
    }
  }
  return t.done();
}

CheckResult check_descent_lift(int max_points) {
  Tally t("minimal monotone lifts");
  for (int p = 1; p <= max_points; ++p)
    for (int q = 1; q <= max_points; ++q) {
      std::vector<int> tab(static_cast<size_t>(p), 0);
      while (true) {
        descent::SetMap s = descent::SetMap::make(p, q, tab);
        ArcMorphism f = descent::lift(s);
        t.expect(descent::project(f) == s, "lift does not project back");
        t.expect(f.deg() == descent::cdesc(s), "lift degree is not the descent number");
        t.expect(f.vals()[0] == s(0), "lift representative is not anchored at s(0)");
        t.expect(descent::minimality_witness(s, max_points),
                 "lift is not minimal or not unique");
        int i = 0;
        while (i < p && tab[static_cast<size_t>(i)] == q - 1)
          tab[static_cast<size_t>(i++)] = 0;
        if (i == p) break;
        ++tab[static_cast<size_t>(i)];
      }
      t.expect(descent::cdesc(descent::SetMap::identity(p)) == (p >= 2 ? 1 : 0),
               "identity descent number wrong at ", p);
    }
  return t.done();
}

CheckResult check_projection_fullness(int max_points) {
  Tally t("point projection is full");
  for (int p = 1; p <= max_points; ++p)
    for (int q = 1; q <= max_points; ++q) {
      t.expect(descent::fullness_check(p, q, max_points),
               "a set map admits no lift at sizes (", p, ",", q, ")");
      long long total = 1;
      for (int i = 0; i < p; ++i) total *= q;
      t.count(total);
    }
  return t.done();
}

namespace {

std::uint64_t count_equivariant_bruteforce(int n, int m, int a) {
  const int sn = a * n, sm = a * m;
  std::vector<int> table(static_cast<size_t>(sn), -1);
  std::uint64_t found = 0;
  auto consistent = [&](int x) {
    int up = (x + n) % sn, down = ((x - n) % sn + sn) % sn;
    if (table[static_cast<size_t>(up)] >= 0 &&
        table[static_cast<size_t>(up)] != (table[static_cast<size_t>(x)] + m) % sm)
      return false;
    if (table[static_cast<size_t>(down)] >= 0 &&
        (table[static_cast<size_t>(down)] + m) % sm != table[static_cast<size_t>(x)])
      return false;
    return true;
  };
  auto rec = [&](auto&& self, int x) -> void {
    if (x == sn) {
      ++found;
      return;
    }
    for (int v = 0; v < sm; ++v) {
      table[static_cast<size_t>(x)] = v;
      if (consistent(x)) self(self, x + 1);
    }
    table[static_cast<size_t>(x)] = -1;
  };
  rec(rec, 0);
  return found;
}

}  // namespace

CheckResult check_counting_identities(int max_orbit, int max_group,
                                      int max_submodule_rank,
                                      int max_cardinality_rank) {
  Tally t("counting identities");
  for (int n = 1; n <= max_orbit; ++n)
    for (int m = 1; m <= max_orbit; ++m)
      for (int a = 1; a <= max_group; ++a)
        t.expect(arc::hom_count_sets(n, m, a) == count_equivariant_bruteforce(n, m, a),
                 "equivariant map count disagrees with enumeration at (", n, ",", m,
                 ",", a, ")");
  t.expect(arc::hom_count_sets(1, 2, 2) == 4, "frozen equivariant count moved");

  for (int n = 0; n <= max_submodule_rank; ++n) {
    std::vector<std::uint64_t> by_rank(static_cast<size_t>(n) + 1, 0);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      // subset of the nonzero chain elements, plus 0: closed under join
      // exactly when every pairwise max stays inside, which is automatic in a
      // chain; verified anyway as the oracle.
      std::vector<int> elems{0};
      for (int x = 1; x <= n; ++x)
        if (mask & (1u << (x - 1))) elems.push_back(x);
      bool closed = true;
      for (int x : elems)
        for (int y : elems)
          closed = closed &&
                   std::find(elems.begin(), elems.end(), std::max(x, y)) != elems.end();
      if (closed) ++by_rank[elems.size() - 1];
    }
    for (int k = 0; k <= n; ++k)
      t.expect(by_rank[static_cast<size_t>(k)] == chains::count_submodules(n, k),
               "subsemimodule count disagrees with the binomial at (", n, ",", k, ")");
  }

  // the orbit construction is functorial and commutes with level drops and
  // period multiplication
  for (int s = 1; s <= 3; ++s)
    for (int d = 1; d <= 3; ++d)
      for (int a : {2, 4}) {
        for (const ArcMorphism& f : arc::enumerate_morphisms(s, d, 1, a)) {
          arc::EquivariantSetMap full = arc::orbit_map(f, a);
          for (int b = 1; b <= a; ++b) {
            if (a % b != 0) continue;
            arc::EquivariantSetMap dropped = arc::orbit_map(arc::forget(f, b), b);
            bool same = dropped.group_order == b &&
                        dropped.src_orbits == full.src_orbits;
            for (int x = 0; same && x < b * s; ++x)
              same = dropped.table[static_cast<size_t>(x)] ==
                     static_cast<int>(arc::fmod(full.table[static_cast<size_t>(x)],
                                                static_cast<long long>(b) * d));
            t.expect(same, "orbit table does not respect the level drop to ", b);
          }
          for (int k = 2; k <= a; ++k) {
            if (a % k != 0) continue;
            ArcMorphism lowered = arc::psi_functor(f, k);
            arc::EquivariantSetMap relab = arc::orbit_map(lowered, a / k);
            t.expect(relab.group_order == a / k &&
                         relab.src_orbits == k * s && relab.table == full.table,
                     "orbit table does not respect period multiplication by ", k);
          }
        }
        for (const ArcMorphism& f : arc::enumerate_morphisms(s, d, 1, a))
          for (const ArcMorphism& g : arc::enumerate_morphisms(d, s, 1, a)) {
            arc::EquivariantSetMap tf = arc::orbit_map(f, a);
            arc::EquivariantSetMap tg = arc::orbit_map(g, a);
            arc::EquivariantSetMap tgf = arc::orbit_map(compose(g, f), a);
            bool same = true;
            for (int x = 0; same && x < a * s; ++x)
              same = tgf.table[static_cast<size_t>(x)] ==
                     tg.table[static_cast<size_t>(tf.table[static_cast<size_t>(x)])];
            t.expect(same, "orbit tables do not compose at (", s, ",", d, ",", a,
                     ")");
            break;  // one g per f keeps the quadratic pairing bounded
          }
      }

  for (int n = 1; n <= max_cardinality_rank; ++n) {
    chains::BMatrix p = chains::projection_matrix(n);
    t.expect(p * p == p, "chain projection is not idempotent at rank ", n);
    std::set<std::uint32_t> range;
    for (std::uint32_t v = 0; v < (1u << n); ++v) range.insert(p.apply(v));
    t.expect(range.size() == static_cast<size_t>(n) + 1,
             "chain projection range size is not rank + 1 at rank ", n);
    std::set<long long> points;
    for (long long x = -2LL * n; x < 2LL * n; ++x) points.insert(arc::fmod(x, n));
    t.expect(points.size() == static_cast<size_t>(n),
             "projective point count is not the period at ", n);
    for (int x = 1; x <= n; ++x)
      t.expect(chains::iota_point(x, n) == x - 1, "point coordinates moved");
  }
  return t.done();
}

CheckResult check_hypergroup_axioms(int max_rank) {
  Tally t("signed chain hypergroup axioms");
  for (int r = 0; r <= max_rank; ++r) {
    t.expect(hyper::check_hypergroup(r), "hypergroup axioms failed at rank ", r);
    t.count(static_cast<long long>(2 * r + 1) * (2 * r + 1) * (2 * r + 1));
  }
  using hyper::SignedElem;
  auto pp = SignedElem::make(1, 1, 1), mm = SignedElem::make(1, 1, -1);
  t.expect(hyper::hyper_add(pp, pp) == hyper::HyperSet{pp}, "sign table broke at +/+");
  t.expect(hyper::hyper_add(pp, mm) ==
               hyper::HyperSet({SignedElem::zero(1), mm, pp}),
           "sign table broke at +/-");
  t.expect(hyper::hyper_add(pp, SignedElem::zero(1)) == hyper::HyperSet{pp},
           "sign table broke at +/0");
  bool rejected = false;
  try {
    hyper::hyper_add(SignedElem::make(1, 1, 1), SignedElem::make(2, 1, 1));
  } catch (const tropcat::mismatch_error&) {
    rejected = true;
  }
  t.expect(rejected, "mixed ambient chains were accepted");
  return t.done();
}

CheckResult check_sign_module_laws(int max_rank) {
  Tally t("signed module laws");
  for (int r = 0; r <= max_rank; ++r) {
    hyper::SignModuleReport rep = hyper::s_module_check(r);
    t.expect(rep.laws_hold, "module laws failed at rank ", r);
    t.expect(rep.strict_witness == (r >= 2),
             "strictness witness expectation failed at rank ", r);
  }
  // decomposition into a monotone magnitude part and a sign twist
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (const chains::ChainMap& f : chains::enumerate_chain_maps(n, m)) {
        if (!chains::is_zero_reflecting(f)) continue;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          std::vector<int> signs(static_cast<size_t>(n));
          for (int x = 0; x < n; ++x) signs[static_cast<size_t>(x)] =
              (mask & (1u << x)) ? -1 : 1;
          hyper::SignedMap g = hyper::tensor_morphism(f, signs);
          auto [f2, s2] = hyper::decompose(g);
          t.expect(f2 == f && s2 == signs, "decomposition round trip failed");
        }
      }
  {
    // a map collapsing a nonzero element to zero must be rejected
    std::vector<hyper::SignedElem> images(5, hyper::SignedElem::zero(2));
    bool rejected = false;
    try {
      hyper::decompose(hyper::SignedMap::make(2, 2, images));
    } catch (const tropcat::error&) {
      rejected = true;
    }
    t.expect(rejected, "a collapsing map decomposed");
  }
  // exchange property of the join on chains
  for (int r = 0; r <= 5; ++r)
    for (int x = 0; x <= r; ++x)
      for (int y = 0; y <= r; ++y)
        for (int u = 0; u <= r; ++u)
          for (int v = 0; v <= r; ++v) {
            if (std::max(x, y) != std::max(u, v)) continue;
            bool ok = false;
            for (int z = 0; z <= r && !ok; ++z)
              ok = (std::max(x, z) == u && std::max(z, v) == y) ||
                   (x == std::max(u, z) && v == std::max(z, y));
            t.expect(ok, "join exchange failed at rank ", r);
          }
  return t.done();
}

std::vector<std::string> suite_names() {
  return {"category", "presentation", "epicyclic", "duality",
          "descent",  "hypergroup",   "counts"};
}

bool is_suite_name(const std::string& name) {
  auto names = suite_names();
  return name == "all" || std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(const std::string& name, int max_period, int max_deg) {
  const int P = max_period, K = max_deg;
  SuiteReport rep;
  rep.suite = name;
  // an exception inside a check becomes a failed result instead of aborting
  // the remaining checks
  auto add = [&rep](const char* label, auto&& fn) {
    try {
      rep.checks.push_back(fn());
    } catch (const std::exception& e) {
      rep.checks.push_back(CheckResult{label, false, 0, e.what()});
    }
  };
  if (name == "category") {
    add("composition associativity and unitality",
        [&] { return check_category_laws(P, K); });
    add("canonical forms and evaluation", [&] { return check_canonical_forms(P, K); });
    add("idempotent semifield arithmetic", [] { return check_tropical_semifield(); });
    add("abstract circle structure", [&] { return check_circle_geometry(P + 2); });
  } else if (name == "presentation") {
    add("rotation and simplicial generator relations",
        [&] { return check_cyclic_presentation(P, K); });
  } else if (name == "epicyclic") {
    add("power map relations", [&] { return check_epicyclic_presentation(P, K); });
    add("period-multiplying correspondence",
        [] { return check_power_correspondence(); });
    add("power-map factorization", [&] { return check_factorization(P, K); });
    add("residue subsets classify degree-1 embeddings",
        [&] { return check_subobject_bijection(P + 1); });
  } else if (name == "duality") {
    add("transpose adjunction and pairings",
        [&] { return check_duality_adjunction(P + 1); });
    add("transpose functor", [&] { return check_duality_functor(P); });
    add("finite chain duality", [&] { return check_chain_duality(P); });
  } else if (name == "descent") {
    add("minimal monotone lifts", [&] { return check_descent_lift(P); });
    add("point projection is full", [&] { return check_projection_fullness(P); });
  } else if (name == "hypergroup") {
    add("signed chain hypergroup axioms",
        [&] { return check_hypergroup_axioms(P + 2); });
    add("signed module laws", [&] { return check_sign_module_laws(P + 2); });
  } else if (name == "counts") {
    add("counting identities", [&] {
      return check_counting_identities(std::min(P, 3), std::min(K, 3), P + 2,
                                       2 * P);
    });
  } else {
    throw tropcat::error("unknown verification suite \"" + name + "\"");
  }
  rep.passed = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const CheckResult& c) { return c.passed; });
  return rep;
}

std::vector<SuiteReport> run_suites(const std::string& name_or_all, int max_period,
                                    int max_deg) {
  std::vector<SuiteReport> out;
  if (name_or_all == "all") {
    for (const std::string& s : suite_names())
      out.push_back(run_suite(s, max_period, max_deg));
  } else {
    out.push_back(run_suite(name_or_all, max_period, max_deg));
  }
  return out;
}

std::string reports_to_json(const std::vector<SuiteReport>& reports, int indent) {
  nlohmann::json out = nlohmann::json::array();
  for (const SuiteReport& rep : reports) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : rep.checks) {
      nlohmann::json j{{"name", c.name},
                       {"passed", c.passed},
                       {"instances", c.instances}};
      if (!c.passed) j["detail"] = c.detail;
      checks.push_back(j);
    }
    out.push_back(nlohmann::json{
        {"suite", rep.suite}, {"passed", rep.passed}, {"checks", checks}});
  }
  return indent < 0 ? out.dump() : out.dump(indent);
}

}  // namespace tropcat::checks
