// Tests for the C shared-library interface: opaque handles, status codes,
// string ownership, and JSON pass-through.
#include <doctest.h>

#include <string>
#include <vector>

#include "tropcat.h"

namespace {

// Owning wrappers so failed CHECKs cannot leak handles.
struct Morphism {
  tropcat_morphism* p = nullptr;
  ~Morphism() { tropcat_morphism_free(p); }
};

struct Setmap {
  tropcat_setmap* p = nullptr;
  ~Setmap() { tropcat_setmap_free(p); }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  tropcat_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("parse, serialize, and inspect a morphism") {
  Morphism m;
  REQUIRE(tropcat_morphism_parse(R"({"src":3,"dst":3,"deg":2,"vals":[2,4,6]})",
                                 &m.p) == TROPCAT_OK);
  char* text = nullptr;
  REQUIRE(tropcat_morphism_to_json(m.p, &text) == TROPCAT_OK);
  CHECK(take(text) == R"({"src":3,"dst":3,"deg":2,"eqmod":1,"vals":[2,4,6]})");
  int src = 0, dst = 0, deg = 0, eqmod = 0;
  REQUIRE(tropcat_morphism_shape(m.p, &src, &dst, &deg, &eqmod) == TROPCAT_OK);
  CHECK(src == 3);
  CHECK(dst == 3);
  CHECK(deg == 2);
  CHECK(eqmod == 1);
  int64_t vals[3] = {0, 0, 0};
  REQUIRE(tropcat_morphism_vals(m.p, vals, 3) == TROPCAT_OK);
  CHECK(vals[0] == 2);
  CHECK(vals[2] == 6);
  CHECK(tropcat_morphism_vals(m.p, vals, 2) == TROPCAT_ERR_INVALID);
  int64_t y = 0;
  REQUIRE(tropcat_eval(m.p, -1, &y) == TROPCAT_OK);
  CHECK(y == 0);  // vals[2] shifted down one full period: 6 - 2*3
}

TEST_CASE("make and equality") {
  const int64_t vals[2] = {0, 1};
  Morphism a, b, id2;
  REQUIRE(tropcat_morphism_make(2, 2, 1, vals, 2, 1, &a.p) == TROPCAT_OK);
  REQUIRE(tropcat_morphism_make(2, 2, 1, vals, 2, 1, &b.p) == TROPCAT_OK);
  REQUIRE(tropcat_identity(2, 1, &id2.p) == TROPCAT_OK);
  int eq = 0;
  REQUIRE(tropcat_morphism_eq(a.p, b.p, &eq) == TROPCAT_OK);
  CHECK(eq == 1);
  REQUIRE(tropcat_morphism_eq(a.p, id2.p, &eq) == TROPCAT_OK);
  CHECK(eq == 1);  // {0,1} is the identity on period 2
  const int64_t bad[2] = {1, 0};
  Morphism c;
  CHECK(tropcat_morphism_make(2, 2, 1, bad, 2, 1, &c.p) ==
        TROPCAT_ERR_INVALID);
}

TEST_CASE("status codes name each failure mode") {
  Morphism m;
  CHECK(tropcat_morphism_parse("not json", &m.p) == TROPCAT_ERR_PARSE);
  std::string msg = tropcat_last_error();
  CHECK(!msg.empty());
  Morphism f2, g3;
  REQUIRE(tropcat_identity(2, 1, &f2.p) == TROPCAT_OK);
  REQUIRE(tropcat_identity(3, 1, &g3.p) == TROPCAT_OK);
  Morphism out;
  CHECK(tropcat_compose(g3.p, f2.p, &out.p) == TROPCAT_ERR_MISMATCH);
  Morphism deg2;
  const int64_t v[1] = {0};
  REQUIRE(tropcat_morphism_make(1, 1, 2, v, 1, 1, &deg2.p) == TROPCAT_OK);
  Morphism t;
  CHECK(tropcat_transpose(deg2.p, &t.p) == TROPCAT_ERR_UNSUPPORTED);
  uint64_t count = 0;
  CHECK(tropcat_hom_count(60, 2, 2, &count) == TROPCAT_ERR_BOUND);
  CHECK(tropcat_identity(3, 1, nullptr) == TROPCAT_ERR_NULL);
  CHECK(tropcat_eval(nullptr, 0, nullptr) == TROPCAT_ERR_NULL);
}

TEST_CASE("compose and power maps") {
  Morphism p;
  REQUIRE(tropcat_psi(2, 2, &p.p) == TROPCAT_OK);
  char* text = nullptr;
  REQUIRE(tropcat_morphism_to_json(p.p, &text) == TROPCAT_OK);
  CHECK(take(text) == R"({"src":4,"dst":2,"deg":2,"eqmod":1,"vals":[0,1,2,3]})");
  Morphism id4, comp;
  REQUIRE(tropcat_identity(4, 1, &id4.p) == TROPCAT_OK);
  REQUIRE(tropcat_compose(p.p, id4.p, &comp.p) == TROPCAT_OK);
  int eq = 0;
  REQUIRE(tropcat_morphism_eq(comp.p, p.p, &eq) == TROPCAT_OK);
  CHECK(eq == 1);
  Morphism sub;
  REQUIRE(tropcat_subdivide(id4.p, 3, &sub.p) == TROPCAT_OK);
  int src = 0, dst = 0, deg = 0, eqmod = 0;
  REQUIRE(tropcat_morphism_shape(sub.p, &src, &dst, &deg, &eqmod) == TROPCAT_OK);
  CHECK(src == 12);
  CHECK(dst == 12);
  Morphism power, carrier;
  REQUIRE(tropcat_factor(p.p, &power.p, &carrier.p) == TROPCAT_OK);
  REQUIRE(tropcat_morphism_eq(power.p, p.p, &eq) == TROPCAT_OK);
  CHECK(eq == 1);  // psi factors through itself with an identity carrier
  REQUIRE(tropcat_morphism_shape(carrier.p, &src, &dst, &deg, &eqmod) ==
          TROPCAT_OK);
  CHECK(deg == 1);
}

TEST_CASE("generators through the C interface") {
  Morphism f, d, r;
  REQUIRE(tropcat_face(2, 1, 1, &f.p) == TROPCAT_OK);
  char* text = nullptr;
  REQUIRE(tropcat_morphism_to_json(f.p, &text) == TROPCAT_OK);
  CHECK(take(text) == R"({"src":2,"dst":3,"deg":1,"eqmod":1,"vals":[0,2]})");
  REQUIRE(tropcat_degeneracy(1, 0, 1, &d.p) == TROPCAT_OK);
  REQUIRE(tropcat_rotation(3, -1, 1, &r.p) == TROPCAT_OK);
  REQUIRE(tropcat_morphism_to_json(r.p, &text) == TROPCAT_OK);
  CHECK(take(text) == R"({"src":3,"dst":3,"deg":1,"eqmod":1,"vals":[1,2,3]})");
  CHECK(tropcat_face(2, 5, 1, &f.p) == TROPCAT_ERR_INVALID);
  Morphism sub;
  const int subset[2] = {0, 2};
  REQUIRE(tropcat_submodule(3, subset, 2, &sub.p) == TROPCAT_OK);
  REQUIRE(tropcat_morphism_to_json(sub.p, &text) == TROPCAT_OK);
  CHECK(take(text) == R"({"src":2,"dst":3,"deg":1,"eqmod":1,"vals":[0,2]})");
}

TEST_CASE("duality through the C interface") {
  Morphism flat;
  const int64_t v[2] = {0, 0};
  REQUIRE(tropcat_morphism_make(2, 2, 1, v, 2, 1, &flat.p) == TROPCAT_OK);
  Morphism t, back;
  REQUIRE(tropcat_transpose(flat.p, &t.p) == TROPCAT_OK);
  char* text = nullptr;
  REQUIRE(tropcat_morphism_to_json(t.p, &text) == TROPCAT_OK);
  CHECK(take(text) == R"({"src":2,"dst":2,"deg":1,"eqmod":1,"vals":[0,2]})");
  REQUIRE(tropcat_star_transpose(t.p, &back.p) == TROPCAT_OK);
  int eq = 0;
  REQUIRE(tropcat_morphism_eq(back.p, flat.p, &eq) == TROPCAT_OK);
  CHECK(eq == 1);
}

TEST_CASE("set maps, lifting, and descent counts") {
  Setmap s;
  REQUIRE(tropcat_setmap_parse(R"({"src":3,"dst":3,"table":[2,1,0]})", &s.p) ==
          TROPCAT_OK);
  int src = 0, dst = 0;
  REQUIRE(tropcat_setmap_shape(s.p, &src, &dst) == TROPCAT_OK);
  CHECK(src == 3);
  CHECK(dst == 3);
  int d = -1;
  REQUIRE(tropcat_cdesc(s.p, &d) == TROPCAT_OK);
  CHECK(d == 2);
  Morphism up;
  REQUIRE(tropcat_lift(s.p, &up.p) == TROPCAT_OK);
  char* text = nullptr;
  REQUIRE(tropcat_morphism_to_json(up.p, &text) == TROPCAT_OK);
  CHECK(take(text) == R"({"src":3,"dst":3,"deg":2,"eqmod":1,"vals":[2,4,6]})");
  Setmap down;
  REQUIRE(tropcat_project(up.p, &down.p) == TROPCAT_OK);
  REQUIRE(tropcat_setmap_to_json(down.p, &text) == TROPCAT_OK);
  CHECK(take(text) == R"({"src":3,"dst":3,"table":[2,1,0]})");
}

TEST_CASE("counting, circle, and hypergroup entry points") {
  uint64_t count = 0;
  REQUIRE(tropcat_hom_count(1, 2, 2, &count) == TROPCAT_OK);
  CHECK(count == 4);
  char* text = nullptr;
  REQUIRE(tropcat_circle_json(3, -1, &text) == TROPCAT_OK);
  std::string circle = take(text);
  CHECK(circle.find("\"period\":3") != std::string::npos);
  REQUIRE(tropcat_hyper_add(2, 2, 1, 2, -1, &text) == TROPCAT_OK);
  CHECK(take(text) ==
        R"([{"mag":0,"sign":1},{"mag":1,"sign":-1},{"mag":1,"sign":1},)"
        R"({"mag":2,"sign":-1},{"mag":2,"sign":1}])");
  CHECK(tropcat_hyper_add(2, 3, 1, 2, -1, &text) == TROPCAT_ERR_INVALID);
}

TEST_CASE("verification entry point") {
  char* report = nullptr;
  REQUIRE(tropcat_verify("descent", 3, 2, -1, &report) == TROPCAT_OK);
  std::string text = take(report);
  CHECK(text.find("\"passed\":true") != std::string::npos);
  CHECK(tropcat_verify("no-such-suite", 3, 2, -1, &report) ==
        TROPCAT_ERR_INVALID);
}
