#include "tropcat.h"

#include <cstring>
#include <string>
#include <vector>

#include "tropcat/arc.hpp"
#include "tropcat/checks.hpp"
#include "tropcat/descent.hpp"
#include "tropcat/duality.hpp"
#include "tropcat/errors.hpp"
#include "tropcat/hyper.hpp"
#include "tropcat/json_io.hpp"

struct tropcat_morphism {
  tropcat::arc::ArcMorphism m;
};

struct tropcat_setmap {
  tropcat::descent::SetMap s;
};

namespace {

thread_local std::string g_last_error = "no error";

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
tropcat_status guarded(Fn&& fn) {
  try {
    fn();
    return TROPCAT_OK;
  } catch (const tropcat::parse_error& e) {
    g_last_error = e.what();
    return TROPCAT_ERR_PARSE;
  } catch (const tropcat::mismatch_error& e) {
    g_last_error = e.what();
    return TROPCAT_ERR_MISMATCH;
  } catch (const tropcat::unsupported_error& e) {
    g_last_error = e.what();
    return TROPCAT_ERR_UNSUPPORTED;
  } catch (const tropcat::bound_error& e) {
    g_last_error = e.what();
    return TROPCAT_ERR_BOUND;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TROPCAT_ERR_INVALID;
  }
}

tropcat_status null_arg() {
  g_last_error = "required pointer argument was NULL";
  return TROPCAT_ERR_NULL;
}

}  // namespace

extern "C" {

const char* tropcat_last_error(void) { return g_last_error.c_str(); }

void tropcat_string_free(char* s) { delete[] s; }
void tropcat_morphism_free(tropcat_morphism* m) { delete m; }
void tropcat_setmap_free(tropcat_setmap* s) { delete s; }

tropcat_status tropcat_morphism_parse(const char* json, tropcat_morphism** out) {
  if (!json || !out) return null_arg();
  return guarded([&] {
    *out = new tropcat_morphism{tropcat::jsonio::morphism_from_json(json)};
  });
}

tropcat_status tropcat_morphism_make(int src, int dst, int deg,
                                     const int64_t* vals, int n_vals, int eqmod,
                                     tropcat_morphism** out) {
  if (!vals || !out) return null_arg();
  return guarded([&] {
    tropcat::detail::require(n_vals == src, "vals length must equal src");
    std::vector<long long> v(vals, vals + n_vals);
    *out = new tropcat_morphism{
        tropcat::arc::ArcMorphism::make(src, dst, deg, v, eqmod)};
  });
}

tropcat_status tropcat_morphism_to_json(const tropcat_morphism* m, char** out) {
  if (!m || !out) return null_arg();
  return guarded([&] { *out = copy_string(tropcat::jsonio::morphism_to_json(m->m)); });
}

tropcat_status tropcat_morphism_shape(const tropcat_morphism* m, int* src,
                                      int* dst, int* deg, int* eqmod) {
  if (!m) return null_arg();
  if (src) *src = m->m.src();
  if (dst) *dst = m->m.dst();
  if (deg) *deg = m->m.deg();
  if (eqmod) *eqmod = m->m.eqmod();
  return TROPCAT_OK;
}

tropcat_status tropcat_morphism_vals(const tropcat_morphism* m, int64_t* out,
                                     int cap) {
  if (!m || !out) return null_arg();
  return guarded([&] {
    tropcat::detail::require(cap >= m->m.src(), "vals buffer is too small");
    for (int i = 0; i < m->m.src(); ++i)
      out[i] = m->m.vals()[static_cast<size_t>(i)];
  });
}

tropcat_status tropcat_morphism_eq(const tropcat_morphism* a,
                                   const tropcat_morphism* b, int* equal) {
  if (!a || !b || !equal) return null_arg();
  *equal = (a->m == b->m) ? 1 : 0;
  return TROPCAT_OK;
}

tropcat_status tropcat_identity(int period, int eqmod, tropcat_morphism** out) {
  if (!out) return null_arg();
  return guarded([&] {
    *out = new tropcat_morphism{
        tropcat::arc::ArcMorphism::identity(period, eqmod)};
  });
}

tropcat_status tropcat_eval(const tropcat_morphism* m, int64_t x, int64_t* out) {
  if (!m || !out) return null_arg();
  return guarded([&] { *out = tropcat::arc::eval(m->m, x); });
}

tropcat_status tropcat_compose(const tropcat_morphism* g,
                               const tropcat_morphism* f,
                               tropcat_morphism** out) {
  if (!g || !f || !out) return null_arg();
  return guarded([&] {
    *out = new tropcat_morphism{tropcat::arc::compose(g->m, f->m)};
  });
}

tropcat_status tropcat_psi(int period, int k, tropcat_morphism** out) {
  if (!out) return null_arg();
  return guarded([&] { *out = new tropcat_morphism{tropcat::arc::psi(period, k)}; });
}

tropcat_status tropcat_subdivide(const tropcat_morphism* m, int k,
                                 tropcat_morphism** out) {
  if (!m || !out) return null_arg();
  return guarded([&] {
    *out = new tropcat_morphism{tropcat::arc::subdivide(m->m, k)};
  });
}

tropcat_status tropcat_factor(const tropcat_morphism* m,
                              tropcat_morphism** power_part,
                              tropcat_morphism** carrier) {
  if (!m || !power_part || !carrier) return null_arg();
  return guarded([&] {
    auto [p, h] = tropcat::arc::factor(m->m);
    *power_part = new tropcat_morphism{std::move(p)};
    *carrier = new tropcat_morphism{std::move(h)};
  });
}

tropcat_status tropcat_face(int period, int index, int eqmod,
                            tropcat_morphism** out) {
  if (!out) return null_arg();
  return guarded([&] {
    *out = new tropcat_morphism{tropcat::arc::face(period, index, eqmod)};
  });
}

tropcat_status tropcat_degeneracy(int period, int index, int eqmod,
                                  tropcat_morphism** out) {
  if (!out) return null_arg();
  return guarded([&] {
    *out = new tropcat_morphism{tropcat::arc::degeneracy(period, index, eqmod)};
  });
}

tropcat_status tropcat_rotation(int period, int power, int eqmod,
                                tropcat_morphism** out) {
  if (!out) return null_arg();
  return guarded([&] {
    *out = new tropcat_morphism{
        tropcat::arc::rotation_power(period, power, eqmod)};
  });
}

tropcat_status tropcat_submodule(int period, const int* residues, int count,
                                 tropcat_morphism** out) {
  if (!residues || !out) return null_arg();
  return guarded([&] {
    std::vector<int> subset(residues, residues + count);
    *out = new tropcat_morphism{tropcat::arc::submodule_embedding(period, subset)};
  });
}

tropcat_status tropcat_transpose(const tropcat_morphism* m,
                                 tropcat_morphism** out) {
  if (!m || !out) return null_arg();
  return guarded([&] {
    *out = new tropcat_morphism{tropcat::duality::transpose(m->m)};
  });
}

tropcat_status tropcat_star_transpose(const tropcat_morphism* m,
                                      tropcat_morphism** out) {
  if (!m || !out) return null_arg();
  return guarded([&] {
    *out = new tropcat_morphism{tropcat::duality::star_transpose(m->m)};
  });
}

tropcat_status tropcat_setmap_parse(const char* json, tropcat_setmap** out) {
  if (!json || !out) return null_arg();
  return guarded([&] {
    *out = new tropcat_setmap{tropcat::jsonio::setmap_from_json(json)};
  });
}

tropcat_status tropcat_setmap_to_json(const tropcat_setmap* s, char** out) {
  if (!s || !out) return null_arg();
  return guarded([&] { *out = copy_string(tropcat::jsonio::setmap_to_json(s->s)); });
}

tropcat_status tropcat_setmap_shape(const tropcat_setmap* s, int* src, int* dst) {
  if (!s) return null_arg();
  if (src) *src = s->s.src_size;
  if (dst) *dst = s->s.dst_size;
  return TROPCAT_OK;
}

tropcat_status tropcat_project(const tropcat_morphism* m, tropcat_setmap** out) {
  if (!m || !out) return null_arg();
  return guarded([&] {
    *out = new tropcat_setmap{tropcat::descent::project(m->m)};
  });
}

tropcat_status tropcat_lift(const tropcat_setmap* s, tropcat_morphism** out) {
  if (!s || !out) return null_arg();
  return guarded([&] {
    *out = new tropcat_morphism{tropcat::descent::lift(s->s)};
  });
}

tropcat_status tropcat_cdesc(const tropcat_setmap* s, int* out) {
  if (!s || !out) return null_arg();
  return guarded([&] { *out = tropcat::descent::cdesc(s->s); });
}

tropcat_status tropcat_hom_count(int src_orbits, int dst_orbits, int group_order,
                                 uint64_t* out) {
  if (!out) return null_arg();
  return guarded([&] {
    *out = tropcat::arc::hom_count_sets(src_orbits, dst_orbits, group_order);
  });
}

tropcat_status tropcat_circle_json(int period, int indent, char** out) {
  if (!out) return null_arg();
  return guarded([&] {
    *out = copy_string(tropcat::jsonio::circle_to_json(period, indent));
  });
}

tropcat_status tropcat_hyper_add(int rank, int mag1, int sign1, int mag2,
                                 int sign2, char** out) {
  if (!out) return null_arg();
  return guarded([&] {
    auto a = tropcat::hyper::SignedElem::make(rank, mag1, sign1);
    auto b = tropcat::hyper::SignedElem::make(rank, mag2, sign2);
    *out = copy_string(tropcat::jsonio::hyperset_to_json(tropcat::hyper::hyper_add(a, b)));
  });
}

tropcat_status tropcat_verify(const char* suite, int max_period, int max_deg,
                              int indent, char** report_json) {
  if (!suite || !report_json) return null_arg();
  bool all_passed = false;
  tropcat_status st = guarded([&] {
    int p = max_period > 0 ? max_period : 4;
    int k = max_deg > 0 ? max_deg : 3;
    auto reports = tropcat::checks::run_suites(suite, p, k);
    all_passed = true;
    for (const auto& rep : reports) all_passed = all_passed && rep.passed;
    *report_json = copy_string(tropcat::checks::reports_to_json(reports, indent));
  });
  if (st != TROPCAT_OK) return st;
  if (!all_passed) {
    g_last_error = "verification reported failures";
    return TROPCAT_ERR_VERIFY;
  }
  return TROPCAT_OK;
}

}  // extern "C"
