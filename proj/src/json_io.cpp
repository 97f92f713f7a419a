#include "tropcat/json_io.hpp"

#include <json.hpp>

namespace tropcat::jsonio {

using nlohmann::json;
// serializers emit keys in declaration order
using ojson = nlohmann::ordered_json;

namespace {

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error("malformed JSON");
  return j;
}

long long get_int(const json& j, const char* key) {
  if (!j.contains(key)) throw parse_error(std::string("missing field \"") + key + "\"");
  if (!j.at(key).is_number_integer())
    throw parse_error(std::string("field \"") + key + "\" must be an integer");
  return j.at(key).get<long long>();
}

std::vector<long long> get_int_array(const json& j, const char* key) {
  if (!j.contains(key)) throw parse_error(std::string("missing field \"") + key + "\"");
  const json& a = j.at(key);
  if (!a.is_array()) throw parse_error(std::string("field \"") + key + "\" must be an array");
  std::vector<long long> out;
  out.reserve(a.size());
  for (const json& v : a) {
    if (!v.is_number_integer())
      throw parse_error(std::string("field \"") + key + "\" must hold integers");
    out.push_back(v.get<long long>());
  }
  return out;
}

std::string dump(const ojson& j, int indent) {
  return indent < 0 ? j.dump() : j.dump(indent);
}

}  // namespace

arc::ArcMorphism morphism_from_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) throw parse_error("morphism must be a JSON object");
  long long eqmod = j.contains("eqmod") ? get_int(j, "eqmod") : 1;
  return arc::ArcMorphism::make(static_cast<int>(get_int(j, "src")),
                                static_cast<int>(get_int(j, "dst")),
                                static_cast<int>(get_int(j, "deg")),
                                get_int_array(j, "vals"), static_cast<int>(eqmod));
}

std::string morphism_to_json(const arc::ArcMorphism& f, int indent) {
  ojson j{{"src", f.src()},
         {"dst", f.dst()},
         {"deg", f.deg()},
         {"eqmod", f.eqmod()},
         {"vals", f.vals()}};
  return dump(j, indent);
}

descent::SetMap setmap_from_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) throw parse_error("set map must be a JSON object");
  std::vector<long long> wide = get_int_array(j, "table");
  std::vector<int> table(wide.begin(), wide.end());
  return descent::SetMap::make(static_cast<int>(get_int(j, "src")),
                               static_cast<int>(get_int(j, "dst")), std::move(table));
}

std::string setmap_to_json(const descent::SetMap& s, int indent) {
  ojson j{{"src", s.src_size}, {"dst", s.dst_size}, {"table", s.table}};
  return dump(j, indent);
}

hyper::SignedElem signed_from_json(const std::string& text, int rank) {
  json j = parse_text(text);
  if (!j.is_object()) throw parse_error("signed element must be a JSON object");
  return hyper::SignedElem::make(rank, static_cast<int>(get_int(j, "mag")),
                                 static_cast<int>(get_int(j, "sign")));
}

std::string signed_to_json(const hyper::SignedElem& x) {
  return ojson{{"mag", x.mag()}, {"sign", x.sign()}}.dump();
}

std::string hyperset_to_json(const hyper::HyperSet& xs, int indent) {
  ojson a = ojson::array();
  for (const hyper::SignedElem& x : xs)
    a.push_back(ojson{{"mag", x.mag()}, {"sign", x.sign()}});
  return dump(a, indent);
}

std::string circle_to_json(int period, int indent) {
  arc::Circle c(period);
  ojson segs = ojson::array();
  for (arc::Segment s : c.segments()) {
    arc::Segment st = c.star(s);
    segs.push_back(ojson{{"base", s.base},
                         {"len", s.len},
                         {"d0", c.d0(s)},
                         {"d1", c.d1(s)},
                         {"star", ojson{{"base", st.base}, {"len", st.len}}}});
  }
  std::vector<int> points(static_cast<size_t>(period));
  for (int i = 0; i < period; ++i) points[static_cast<size_t>(i)] = i;
  ojson j{{"period", period}, {"points", points}, {"segments", segs}};
  return dump(j, indent);
}

std::vector<int> int_array_from_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_array()) throw parse_error("expected a JSON array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const json& v : j) {
    if (!v.is_number_integer()) throw parse_error("expected a JSON array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace tropcat::jsonio
