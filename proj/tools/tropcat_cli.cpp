// Command-line front end for the tropical-cyclic morphism library.
//
// Payload arguments accept inline JSON (first character '{' or '['), "-" for
// stdin, or a file path.  Exit codes: 0 success, 1 usage or parse problem,
// 2 invariant violation or verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropcat.h"

namespace {

struct MorphismDeleter {
  void operator()(tropcat_morphism* m) const { tropcat_morphism_free(m); }
};
struct SetmapDeleter {
  void operator()(tropcat_setmap* s) const { tropcat_setmap_free(s); }
};
struct StringDeleter {
  void operator()(char* s) const { tropcat_string_free(s); }
};
using MorphismPtr = std::unique_ptr<tropcat_morphism, MorphismDeleter>;
using SetmapPtr = std::unique_ptr<tropcat_setmap, SetmapDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string g_format = "json";

int fail_now(tropcat_status st) {
  std::cerr << "error: " << tropcat_last_error() << "\n";
  return st == TROPCAT_ERR_PARSE ? 1 : 2;
}

bool read_payload(const std::string& arg, std::string& out) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
    out = arg;
    return true;
  }
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    out = ss.str();
    return true;
  }
  std::ifstream in(arg);
  if (!in) {
    std::cerr << "error: cannot read payload \"" << arg << "\"\n";
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// 0 on success, otherwise the process exit code
int parse_morphism(const std::string& arg, MorphismPtr& out) {
  std::string text;
  if (!read_payload(arg, text)) return 1;
  tropcat_morphism* raw = nullptr;
  if (tropcat_status st = tropcat_morphism_parse(text.c_str(), &raw))
    return fail_now(st);
  out.reset(raw);
  return 0;
}

int parse_setmap(const std::string& arg, SetmapPtr& out) {
  std::string text;
  if (!read_payload(arg, text)) return 1;
  tropcat_setmap* raw = nullptr;
  if (tropcat_status st = tropcat_setmap_parse(text.c_str(), &raw))
    return fail_now(st);
  out.reset(raw);
  return 0;
}

std::string morphism_text(const tropcat_morphism* m) {
  int src = 0, dst = 0, deg = 0, eqmod = 0;
  tropcat_morphism_shape(m, &src, &dst, &deg, &eqmod);
  std::vector<int64_t> vals(static_cast<size_t>(src));
  tropcat_morphism_vals(m, vals.data(), src);
  std::ostringstream os;
  os << "[" << src - 1 << "] -> [" << dst - 1 << "]  period " << src << " -> "
     << dst << "  deg " << deg << "  level " << eqmod << "  vals";
  for (int64_t v : vals) os << " " << v;
  return os.str();
}

int print_morphism(const tropcat_morphism* m) {
  if (g_format == "text") {
    std::cout << morphism_text(m) << "\n";
    return 0;
  }
  char* s = nullptr;
  if (tropcat_status st = tropcat_morphism_to_json(m, &s)) return fail_now(st);
  StringPtr guard(s);
  std::cout << s << "\n";
  return 0;
}

int print_setmap(const tropcat_setmap* s) {
  if (g_format == "text") {
    char* js = nullptr;
    if (tropcat_status st = tropcat_setmap_to_json(s, &js)) return fail_now(st);
    StringPtr guard(js);
    nlohmann::json j = nlohmann::json::parse(js);
    int src = j["src"].get<int>(), dst = j["dst"].get<int>();
    std::ostringstream os;
    os << "points " << src << " -> " << dst << "  table";
    for (const auto& v : j["table"]) os << " " << v.get<int>();
    std::cout << os.str() << "\n";
    return 0;
  }
  char* js = nullptr;
  if (tropcat_status st = tropcat_setmap_to_json(s, &js)) return fail_now(st);
  StringPtr guard(js);
  std::cout << js << "\n";
  return 0;
}

void add_format(CLI::App* sub) {
  sub->add_option("--format", g_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
}

// parses {"mag":..,"sign":..}; returns 0 or exit code
int parse_signed(const std::string& arg, int& mag, int& sign) {
  std::string text;
  if (!read_payload(arg, text)) return 1;
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("mag") ||
      !j.contains("sign") || !j["mag"].is_number_integer() ||
      !j["sign"].is_number_integer()) {
    std::cerr << "error: signed element payload needs integer fields "
                 "\"mag\" and \"sign\"\n";
    return 1;
  }
  mag = j["mag"].get<int>();
  sign = j["sign"].get<int>();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropical-cyclic morphism toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  // compose
  std::string arg_g, arg_f;
  CLI::App* c_compose =
      app.add_subcommand("compose", "composite G after F (apply F first)");
  c_compose->add_option("G", arg_g, "outer morphism payload")->required();
  c_compose->add_option("F", arg_f, "inner morphism payload")->required();
  add_format(c_compose);
  c_compose->callback([&] {
    MorphismPtr g, f;
    if ((rc = parse_morphism(arg_g, g))) return;
    if ((rc = parse_morphism(arg_f, f))) return;
    tropcat_morphism* out = nullptr;
    if (tropcat_status st = tropcat_compose(g.get(), f.get(), &out)) {
      rc = fail_now(st);
      return;
    }
    MorphismPtr guard(out);
    rc = print_morphism(out);
  });

  // normalize
  std::string arg_m;
  CLI::App* c_norm =
      app.add_subcommand("normalize", "canonical form of a morphism");
  c_norm->add_option("M", arg_m, "morphism payload")->required();
  add_format(c_norm);
  c_norm->callback([&] {
    MorphismPtr m;
    if ((rc = parse_morphism(arg_m, m))) return;
    rc = print_morphism(m.get());
  });

  // eval
  std::string arg_em;
  int64_t arg_x = 0;
  CLI::App* c_eval = app.add_subcommand("eval", "evaluate a morphism at a point");
  c_eval->add_option("M", arg_em, "morphism payload")->required();
  c_eval->add_option("X", arg_x, "integer point")->required();
  add_format(c_eval);
  c_eval->callback([&] {
    MorphismPtr m;
    if ((rc = parse_morphism(arg_em, m))) return;
    int64_t y = 0;
    if (tropcat_status st = tropcat_eval(m.get(), arg_x, &y)) {
      rc = fail_now(st);
      return;
    }
    if (g_format == "text")
      std::cout << y << "\n";
    else
      std::cout << nlohmann::ordered_json{{"x", arg_x}, {"value", y}}.dump()
                << "\n";
  });

  // transpose / star
  std::string arg_tm;
  CLI::App* c_tr =
      app.add_subcommand("transpose", "order-theoretic transpose (degree 1)");
  c_tr->add_option("M", arg_tm, "morphism payload")->required();
  add_format(c_tr);
  c_tr->callback([&] {
    MorphismPtr m;
    if ((rc = parse_morphism(arg_tm, m))) return;
    tropcat_morphism* out = nullptr;
    if (tropcat_status st = tropcat_transpose(m.get(), &out)) {
      rc = fail_now(st);
      return;
    }
    MorphismPtr guard(out);
    rc = print_morphism(out);
  });

  std::string arg_sm;
  CLI::App* c_star =
      app.add_subcommand("star", "starred transpose (inverse direction)");
  c_star->add_option("M", arg_sm, "morphism payload")->required();
  add_format(c_star);
  c_star->callback([&] {
    MorphismPtr m;
    if ((rc = parse_morphism(arg_sm, m))) return;
    tropcat_morphism* out = nullptr;
    if (tropcat_status st = tropcat_star_transpose(m.get(), &out)) {
      rc = fail_now(st);
      return;
    }
    MorphismPtr guard(out);
    rc = print_morphism(out);
  });

  // lift / cdesc / project
  std::string arg_ls;
  CLI::App* c_lift =
      app.add_subcommand("lift", "minimal monotone lift of a finite set map");
  c_lift->add_option("S", arg_ls, "set map payload")->required();
  add_format(c_lift);
  c_lift->callback([&] {
    SetmapPtr s;
    if ((rc = parse_setmap(arg_ls, s))) return;
    tropcat_morphism* out = nullptr;
    if (tropcat_status st = tropcat_lift(s.get(), &out)) {
      rc = fail_now(st);
      return;
    }
    MorphismPtr guard(out);
    rc = print_morphism(out);
  });

  std::string arg_cs;
  CLI::App* c_cdesc =
      app.add_subcommand("cdesc", "cyclic descent number of a finite set map");
  c_cdesc->add_option("S", arg_cs, "set map payload")->required();
  add_format(c_cdesc);
  c_cdesc->callback([&] {
    SetmapPtr s;
    if ((rc = parse_setmap(arg_cs, s))) return;
    int d = 0;
    if (tropcat_status st = tropcat_cdesc(s.get(), &d)) {
      rc = fail_now(st);
      return;
    }
    if (g_format == "text")
      std::cout << d << "\n";
    else
      std::cout << nlohmann::json{{"cdesc", d}}.dump() << "\n";
  });

  std::string arg_pm;
  CLI::App* c_proj =
      app.add_subcommand("project", "residue projection of a level-1 morphism");
  c_proj->add_option("M", arg_pm, "morphism payload")->required();
  add_format(c_proj);
  c_proj->callback([&] {
    MorphismPtr m;
    if ((rc = parse_morphism(arg_pm, m))) return;
    tropcat_setmap* out = nullptr;
    if (tropcat_status st = tropcat_project(m.get(), &out)) {
      rc = fail_now(st);
      return;
    }
    SetmapPtr guard(out);
    rc = print_setmap(out);
  });

  // psi / factor
  int arg_pn = 1, arg_pk = 1;
  CLI::App* c_psi =
      app.add_subcommand("psi", "degree-k period-multiplying morphism");
  c_psi->add_option("N", arg_pn, "target period")->required();
  c_psi->add_option("K", arg_pk, "degree")->required();
  add_format(c_psi);
  c_psi->callback([&] {
    tropcat_morphism* out = nullptr;
    if (tropcat_status st = tropcat_psi(arg_pn, arg_pk, &out)) {
      rc = fail_now(st);
      return;
    }
    MorphismPtr guard(out);
    rc = print_morphism(out);
  });

  std::string arg_fm;
  CLI::App* c_factor = app.add_subcommand(
      "factor", "split into a power part and a degree-1 carrier");
  c_factor->add_option("M", arg_fm, "morphism payload")->required();
  add_format(c_factor);
  c_factor->callback([&] {
    MorphismPtr m;
    if ((rc = parse_morphism(arg_fm, m))) return;
    tropcat_morphism *p = nullptr, *h = nullptr;
    if (tropcat_status st = tropcat_factor(m.get(), &p, &h)) {
      rc = fail_now(st);
      return;
    }
    MorphismPtr gp(p), gh(h);
    if (g_format == "text") {
      std::cout << "power:   " << morphism_text(p) << "\n";
      std::cout << "carrier: " << morphism_text(h) << "\n";
      return;
    }
    char *ps = nullptr, *hs = nullptr;
    if (tropcat_status st = tropcat_morphism_to_json(p, &ps)) {
      rc = fail_now(st);
      return;
    }
    StringPtr gps(ps);
    if (tropcat_status st = tropcat_morphism_to_json(h, &hs)) {
      rc = fail_now(st);
      return;
    }
    StringPtr ghs(hs);
    nlohmann::ordered_json j{{"power", nlohmann::ordered_json::parse(ps)},
                             {"carrier", nlohmann::ordered_json::parse(hs)}};
    std::cout << j.dump() << "\n";
  });

  // generators
  int arg_gn = 1, arg_glevel = 1;
  CLI::App* c_gen = app.add_subcommand(
      "generators", "face, degeneracy and rotation morphisms at a period");
  c_gen->add_option("N", arg_gn, "period")->required();
  c_gen->add_option("--level", arg_glevel, "equivalence level (default 1)");
  add_format(c_gen);
  c_gen->callback([&] {
    auto render = [&](tropcat_morphism* m, nlohmann::ordered_json& slot) -> int {
      MorphismPtr guard(m);
      if (g_format == "text") return print_morphism(m);
      char* s = nullptr;
      if (tropcat_status st = tropcat_morphism_to_json(m, &s))
        return fail_now(st);
      StringPtr g2(s);
      slot = nlohmann::ordered_json::parse(s);
      return 0;
    };
    nlohmann::ordered_json out{{"period", arg_gn},
                               {"level", arg_glevel},
                               {"faces", nlohmann::ordered_json::array()},
                               {"degeneracies", nlohmann::ordered_json::array()},
                               {"rotation", nullptr}};
    for (int j = 0; j <= arg_gn; ++j) {
      tropcat_morphism* m = nullptr;
      if (g_format == "text") std::cout << "face " << j << ":        ";
      if (tropcat_status st = tropcat_face(arg_gn, j, arg_glevel, &m)) {
        rc = fail_now(st);
        return;
      }
      nlohmann::ordered_json slot;
      if ((rc = render(m, slot))) return;
      if (g_format != "text") out["faces"].push_back(slot);
    }
    for (int j = 0; j < arg_gn; ++j) {
      tropcat_morphism* m = nullptr;
      if (g_format == "text") std::cout << "degeneracy " << j << ":  ";
      if (tropcat_status st = tropcat_degeneracy(arg_gn, j, arg_glevel, &m)) {
        rc = fail_now(st);
        return;
      }
      nlohmann::ordered_json slot;
      if ((rc = render(m, slot))) return;
      if (g_format != "text") out["degeneracies"].push_back(slot);
    }
    {
      tropcat_morphism* m = nullptr;
      if (g_format == "text") std::cout << "rotation:      ";
      if (tropcat_status st = tropcat_rotation(arg_gn, 1, arg_glevel, &m)) {
        rc = fail_now(st);
        return;
      }
      nlohmann::ordered_json slot;
      if ((rc = render(m, slot))) return;
      if (g_format != "text") out["rotation"] = slot;
    }
    if (g_format != "text") std::cout << out.dump() << "\n";
  });

  // submodule
  int arg_sn = 1;
  std::string arg_subset;
  CLI::App* c_sub = app.add_subcommand(
      "submodule", "degree-1 embedding selected by a residue subset");
  c_sub->add_option("N", arg_sn, "ambient period")->required();
  c_sub->add_option("SUBSET", arg_subset, "JSON array of residues")->required();
  add_format(c_sub);
  c_sub->callback([&] {
    std::string text;
    if (!read_payload(arg_subset, text)) {
      rc = 1;
      return;
    }
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array()) {
      std::cerr << "error: subset payload must be a JSON array of integers\n";
      rc = 1;
      return;
    }
    std::vector<int> subset;
    for (const auto& v : j) {
      if (!v.is_number_integer()) {
        std::cerr << "error: subset payload must be a JSON array of integers\n";
        rc = 1;
        return;
      }
      subset.push_back(v.get<int>());
    }
    tropcat_morphism* out = nullptr;
    if (tropcat_status st = tropcat_submodule(
            arg_sn, subset.data(), static_cast<int>(subset.size()), &out)) {
      rc = fail_now(st);
      return;
    }
    MorphismPtr guard(out);
    rc = print_morphism(out);
  });

  // circle
  int arg_cn = 1;
  CLI::App* c_circle =
      app.add_subcommand("circle", "abstract circle structure at a period");
  c_circle->add_option("N", arg_cn, "period")->required();
  add_format(c_circle);
  c_circle->callback([&] {
    char* s = nullptr;
    if (tropcat_status st = tropcat_circle_json(arg_cn, -1, &s)) {
      rc = fail_now(st);
      return;
    }
    StringPtr guard(s);
    if (g_format == "text") {
      nlohmann::json j = nlohmann::json::parse(s);
      std::cout << "period " << j["period"].get<int>() << ", "
                << j["segments"].size() << " segments\n";
      for (const auto& seg : j["segments"])
        std::cout << "  base " << seg["base"].get<int>() << " len "
                  << seg["len"].get<int>() << "  endpoints ("
                  << seg["d0"].get<int>() << "," << seg["d1"].get<int>()
                  << ")  star base " << seg["star"]["base"].get<int>() << " len "
                  << seg["star"]["len"].get<int>() << "\n";
      return;
    }
    std::cout << s << "\n";
  });

  // hyper-add
  int arg_rank = 0;
  std::string arg_ha, arg_hb;
  CLI::App* c_hyper = app.add_subcommand(
      "hyper-add", "multivalued sum of two signed chain elements");
  c_hyper->add_option("RANK", arg_rank, "chain rank")->required();
  c_hyper->add_option("A", arg_ha, "signed element payload")->required();
  c_hyper->add_option("B", arg_hb, "signed element payload")->required();
  add_format(c_hyper);
  c_hyper->callback([&] {
    int m1 = 0, s1 = 0, m2 = 0, s2 = 0;
    if ((rc = parse_signed(arg_ha, m1, s1))) return;
    if ((rc = parse_signed(arg_hb, m2, s2))) return;
    char* out = nullptr;
    if (tropcat_status st = tropcat_hyper_add(arg_rank, m1, s1, m2, s2, &out)) {
      rc = fail_now(st);
      return;
    }
    StringPtr guard(out);
    if (g_format == "text") {
      nlohmann::json j = nlohmann::json::parse(out);
      std::ostringstream os;
      for (const auto& e : j) {
        int mag = e["mag"].get<int>(), sign = e["sign"].get<int>();
        os << " " << (mag == 0 ? "0" : (sign > 0 ? "+" : "-")) << (mag == 0 ? "" : std::to_string(mag));
      }
      std::cout << "{" << os.str() << " }\n";
      return;
    }
    std::cout << out << "\n";
  });

  // hom-count
  int arg_hn = 1, arg_hm = 1, arg_hg = 1;
  CLI::App* c_count = app.add_subcommand(
      "hom-count", "number of equivariant maps between free cyclic sets");
  c_count->add_option("N", arg_hn, "source orbit count")->required();
  c_count->add_option("M", arg_hm, "target orbit count")->required();
  c_count->add_option("A", arg_hg, "group order")->required();
  add_format(c_count);
  c_count->callback([&] {
    uint64_t n = 0;
    if (tropcat_status st = tropcat_hom_count(arg_hn, arg_hm, arg_hg, &n)) {
      rc = fail_now(st);
      return;
    }
    if (g_format == "text")
      std::cout << n << "\n";
    else
      std::cout << nlohmann::json{{"count", n}}.dump() << "\n";
  });

  // verify
  std::string arg_suite;
  int arg_maxp = 0, arg_maxk = 0;
  CLI::App* c_verify =
      app.add_subcommand("verify", "run a verification suite and report");
  c_verify
      ->add_option("SUITE", arg_suite,
                   "category, presentation, epicyclic, duality, descent, "
                   "hypergroup, counts, or all")
      ->required();
  c_verify->add_option("--max-period", arg_maxp,
                       "period bound (0 = default 4)");
  c_verify->add_option("--max-deg", arg_maxk, "degree bound (0 = default 3)");
  add_format(c_verify);
  c_verify->callback([&] {
    char* report = nullptr;
    tropcat_status st =
        tropcat_verify(arg_suite.c_str(), arg_maxp, arg_maxk,
                       g_format == "text" ? -1 : 2, &report);
    if ((st != TROPCAT_OK && st != TROPCAT_ERR_VERIFY) || !report) {
      rc = fail_now(st);
      return;
    }
    StringPtr guard(report);
    if (g_format == "text") {
      nlohmann::json j = nlohmann::json::parse(report);
      for (const auto& suite : j)
        for (const auto& check : suite["checks"]) {
          std::cout << (check["passed"].get<bool>() ? "PASS" : "FAIL") << "  "
                    << suite["suite"].get<std::string>() << " / "
                    << check["name"].get<std::string>() << "  ("
                    << check["instances"].get<long long>() << " instances)";
          if (!check["passed"].get<bool>())
            std::cout << "  " << check["detail"].get<std::string>();
          std::cout << "\n";
        }
    } else {
      std::cout << report << "\n";
    }
    rc = (st == TROPCAT_OK) ? 0 : 2;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return rc;
}
