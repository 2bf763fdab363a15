#include "serialize.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace duval::cli {

namespace {

const Json& require(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(path, std::string("missing field '") + key + "'");
  return j.at(key);
}

void reject_unknown(const Json& j, std::initializer_list<const char*> allowed, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  for (const auto& [key, _] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      throw SchemaError(path, "unknown field '" + key + "'");
    }
  }
}

int int_field(const Json& j, const char* key, const std::string& path, int fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw SchemaError(path + "." + key, "expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < -1000000 || x > 1000000) throw SchemaError(path + "." + key, "integer out of range");
  return static_cast<int>(x);
}

bool bool_field(const Json& j, const char* key, const std::string& path, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_boolean()) throw SchemaError(path + "." + key, "expected true or false");
  return j.at(key).get<bool>();
}

std::string string_value(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

BigInt parse_bigint(const std::string& s, const std::string& path) {
  std::size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw SchemaError(path, "malformed number '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw SchemaError(path, "malformed number '" + s + "'");
  }
  // cpp_int reads a leading 0 as octal.
  std::string digits = s.substr(i);
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  BigInt v(digits);
  return s[0] == '-' ? BigInt(-v) : v;
}

Rational parse_rational_string(const std::string& s, const std::string& path) {
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const BigInt num = parse_bigint(s.substr(0, slash), path);
    const BigInt den = parse_bigint(s.substr(slash + 1), path);
    if (den == 0) throw SchemaError(path, "zero denominator");
    return Rational(num) / Rational(den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    const std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if (frac.empty()) throw SchemaError(path, "malformed decimal '" + s + "'");
    const std::string digits = (whole.empty() || whole == "-" || whole == "+" ? whole + "0" : whole) + frac;
    const BigInt num = parse_bigint(digits, path);
    BigInt den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return Rational(num, den);
  }
  return Rational(parse_bigint(s, path));
}

std::string type_name(DuValType t) {
  switch (t) {
    case DuValType::B: return "B";
    case DuValType::D: return "D";
    case DuValType::Dn: return "Dn";
  }
  return "?";
}

}  // namespace

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(line, column, e.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational_string(j.get<std::string>(), path);
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
    const auto den = j[1].get<std::int64_t>();
    if (den == 0) throw SchemaError(path, "zero denominator");
    return Rational(j[0].get<std::int64_t>()) / Rational(den);
  }
  throw SchemaError(path, "expected an integer, a [num, den] pair or a string");
}

Json rational_to_json(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1 && num >= std::numeric_limits<std::int64_t>::min() && num <= std::numeric_limits<std::int64_t>::max()) {
    return Json(num.convert_to<std::int64_t>());
  }
  return Json(num.str() + "/" + den.str());
}

DuValConfig config_from_json(const Json& j) {
  const std::string path = "$";
  reject_unknown(j, {"type", "n", "delta1", "delta2", "gamma_infinitely_near", "conic"}, path);
  const std::string type = string_value(require(j, "type", path), path + ".type");
  DuValConfig c;
  if (type == "B") {
    c.type = DuValType::B;
  } else if (type == "D") {
    c.type = DuValType::D;
  } else if (type == "Dn") {
    c.type = DuValType::Dn;
  } else {
    throw SchemaError(path + ".type", "expected \"B\", \"D\" or \"Dn\", got \"" + type + "\"");
  }
  c.n = int_field(j, "n", path, 0);
  c.delta1 = int_field(j, "delta1", path, 0);
  c.delta2 = int_field(j, "delta2", path, 0);
  c.gamma_infinitely_near = bool_field(j, "gamma_infinitely_near", path, false);
  if (j.contains("conic")) {
    const Json& e = j.at("conic");
    const std::string epath = path + ".conic";
    if (e.is_string()) {
      const std::string s = e.get<std::string>();
      if (s == "generic") {
        c.conic = ConicGeneric{};
      } else if (s == "on_conic") {
        c.conic = ConicOnConic{};
      } else {
        throw SchemaError(epath, "expected \"generic\", \"on_conic\" or {\"points\": [...]}");
      }
    } else {
      reject_unknown(e, {"points"}, epath);
      const Json& pts = require(e, "points", epath);
      if (!pts.is_array()) throw SchemaError(epath + ".points", "expected an array");
      ConicCoordinates coords;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string ppath = epath + ".points[" + std::to_string(i) + "]";
        if (!pts[i].is_array() || pts[i].size() != 3) throw SchemaError(ppath, "expected [x, y, z]");
        ProjectivePoint p;
        for (std::size_t k = 0; k < 3; ++k) {
          p.xyz[k] = rational_from_json(pts[i][k], ppath + "[" + std::to_string(k) + "]");
        }
        coords.points.push_back(p);
      }
      c.conic = std::move(coords);
    }
  }
  return c;
}

Json config_to_json(const DuValConfig& c) {
  Json j;
  j["type"] = type_name(c.type);
  if (c.type != DuValType::Dn) return j;
  j["n"] = c.n;
  j["delta1"] = c.delta1;
  j["delta2"] = c.delta2;
  j["gamma_infinitely_near"] = c.gamma_infinitely_near;
  if (std::holds_alternative<ConicGeneric>(c.conic)) {
    j["conic"] = "generic";
  } else if (std::holds_alternative<ConicOnConic>(c.conic)) {
    j["conic"] = "on_conic";
  } else {
    Json pts = Json::array();
    for (const auto& p : std::get<ConicCoordinates>(c.conic).points) {
      pts.push_back(Json::array({rational_to_json(p.xyz[0]), rational_to_json(p.xyz[1]), rational_to_json(p.xyz[2])}));
    }
    j["conic"] = Json{{"points", pts}};
  }
  return j;
}

Json report_to_json(const SurfaceReport& r) {
  Json j;
  j["pg"] = r.pg;
  j["q"] = r.q;
  j["chi"] = r.chi;
  j["ksq"] = r.ksq_minimal;
  j["ksq_resolution"] = r.ksq_resolution;
  j["k_isolated"] = r.k_isolated;
  j["kr"] = r.kr;
  j["h0_2k_delta"] = r.h0_2k_delta;
  j["minus_two_curves"] = r.minus_two_curves;
  j["torsion_rank_lower"] = r.torsion_rank_lower;
  j["bicanonical_degree"] = r.bicanonical_degree;
  if (r.bicanonical_image_degree) j["bicanonical_image_degree"] = *r.bicanonical_image_degree;
  if (r.ample_canonical) j["ample_canonical"] = *r.ample_canonical;
  if (r.pencil) {
    j["pencil"] = Json{{"genus", r.pencil->genus},
                       {"hyperelliptic", r.pencil->hyperelliptic},
                       {"base_points", r.pencil->base_points},
                       {"double_fibres", r.pencil->double_fibres},
                       {"h_squared", r.pencil->h_squared},
                       {"h_dot_k", r.pencil->h_dot_k},
                       {"h_dot_r", r.pencil->h_dot_r}};
  }
  j["notes"] = r.notes;
  return j;
}

Json admissibility_to_json(const AdmissibilityReport& r) {
  return Json{{"admissible", r.admissible}, {"reasons", r.reasons}};
}

Json class_to_json(const DivisorClass& cls) {
  return Json{{"coeffs", std::vector<std::int64_t>(cls.coeffs().begin(), cls.coeffs().end())},
              {"text", cls.to_string()}};
}

Json model_to_json(const SurfaceModel& m) {
  Json j;
  if (m.kind().is_plane()) {
    j["surface"] = "P2";
  } else {
    j["surface"] = "F";
    j["e"] = m.kind().e();
  }
  Json centers = Json::array();
  for (const auto& c : m.centers()) {
    centers.push_back(Json{{"id", c.id.value}, {"parent", c.parent ? Json(c.parent->value) : Json(nullptr)}});
  }
  j["centers"] = centers;
  Json basis = Json::array();
  for (std::size_t i = 0; i < m.rank(); ++i) basis.push_back(m.basis_label(i));
  j["basis"] = basis;
  return j;
}

BranchModel branch_from_json(const Json& j) {
  const std::string path = "$";
  reject_unknown(j, {"ambient", "class", "singularities"}, path);
  const Json& amb = require(j, "ambient", path);
  reject_unknown(amb, {"surface", "e", "centers"}, path + ".ambient");
  const std::string surface = string_value(require(amb, "surface", path + ".ambient"), path + ".ambient.surface");
  SurfaceKind kind = SurfaceKind::plane();
  if (surface == "F") {
    kind = SurfaceKind::hirzebruch(int_field(amb, "e", path + ".ambient", 0));
  } else if (surface != "P2") {
    throw SchemaError(path + ".ambient.surface", "expected \"P2\" or \"F\"");
  }
  std::vector<BlowUpCenter> centers;
  if (amb.contains("centers")) {
    const Json& cs = amb.at("centers");
    if (!cs.is_array()) throw SchemaError(path + ".ambient.centers", "expected an array");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string cpath = path + ".ambient.centers[" + std::to_string(i) + "]";
      reject_unknown(cs[i], {"id", "parent"}, cpath);
      BlowUpCenter c{CenterId{string_value(require(cs[i], "id", cpath), cpath + ".id")}, std::nullopt};
      if (cs[i].contains("parent") && !cs[i].at("parent").is_null()) {
        c.parent = CenterId{string_value(cs[i].at("parent"), cpath + ".parent")};
      }
      centers.push_back(c);
    }
  }
  const ModelPtr ambient = make_model(kind, centers);

  const Json& coeffs = require(j, "class", path);
  if (!coeffs.is_array()) throw SchemaError(path + ".class", "expected an array of integers");
  std::vector<std::int64_t> v;
  for (const auto& x : coeffs) {
    if (!x.is_number_integer()) throw SchemaError(path + ".class", "expected an array of integers");
    v.push_back(x.get<std::int64_t>());
  }
  if (v.size() != ambient->rank()) {
    throw SchemaError(path + ".class", "expected " + std::to_string(ambient->rank()) + " coefficients");
  }
  BranchModel b{ambient, DivisorClass(ambient, v), {}};

  if (j.contains("singularities")) {
    const Json& ss = j.at("singularities");
    if (!ss.is_array()) throw SchemaError(path + ".singularities", "expected an array");
    for (std::size_t i = 0; i < ss.size(); ++i) {
      const std::string spath = path + ".singularities[" + std::to_string(i) + "]";
      const std::string t = string_value(require(ss[i], "type", spath), spath + ".type");
      std::optional<CenterId> parent;
      if (ss[i].contains("parent") && !ss[i].at("parent").is_null()) {
        parent = CenterId{string_value(ss[i].at("parent"), spath + ".parent")};
      }
      if (t == "mtuple") {
        reject_unknown(ss[i], {"type", "center", "m", "parent"}, spath);
        b.singularities.push_back(Mtuple{CenterId{string_value(require(ss[i], "center", spath), spath + ".center")},
                                         int_field(ss[i], "m", spath, 0), parent});
      } else if (t == "rr") {
        reject_unknown(ss[i], {"type", "p", "p_prime", "r", "parent"}, spath);
        b.singularities.push_back(RRpoint{CenterId{string_value(require(ss[i], "p", spath), spath + ".p")},
                                          CenterId{string_value(require(ss[i], "p_prime", spath), spath + ".p_prime")},
                                          int_field(ss[i], "r", spath, 0), parent});
      } else {
        throw SchemaError(spath + ".type", "expected \"mtuple\" or \"rr\"");
      }
    }
  }
  return b;
}

Json branch_to_json(const BranchModel& b) {
  Json amb = model_to_json(*b.ambient);
  amb.erase("basis");
  Json ss = Json::array();
  for (const auto& s : b.singularities) {
    Json o;
    if (const auto* mt = std::get_if<Mtuple>(&s)) {
      o = Json{{"type", "mtuple"}, {"center", mt->center.value}, {"m", mt->m}};
      if (mt->parent) o["parent"] = mt->parent->value;
    } else {
      const auto& rr = std::get<RRpoint>(s);
      o = Json{{"type", "rr"}, {"p", rr.p.value}, {"p_prime", rr.p_prime.value}, {"r", rr.r}};
      if (rr.parent) o["parent"] = rr.parent->value;
    }
    ss.push_back(o);
  }
  return Json{{"ambient", amb},
              {"class", std::vector<std::int64_t>(b.branch_class.coeffs().begin(), b.branch_class.coeffs().end())},
              {"singularities", ss}};
}

Json resolution_to_json(const ResolvedCover& cover) {
  Json steps = Json::array();
  for (const auto& s : cover.steps) {
    steps.push_back(Json{{"center", s.center.value},
                         {"parent", s.parent ? Json(s.parent->value) : Json(nullptr)},
                         {"multiplicity", s.multiplicity},
                         {"floor_half", s.floor_half},
                         {"subtraction", s.subtraction},
                         {"exceptional_in_branch", s.exceptional_in_branch}});
  }
  return Json{{"base_class", class_to_json(cover.branch.branch_class)},
              {"model", model_to_json(*cover.model)},
              {"steps", steps},
              {"smooth_class", class_to_json(cover.smooth_class)},
              {"half_class", class_to_json(cover.half_class)}};
}

Json table_check_to_json(const TableCheck& t) {
  Json cells = Json::array();
  for (const auto& c : t.cells) {
    cells.push_back(Json{{"ksq", c.ksq}, {"n", c.n}, {"realized", !c.realized_by.empty()}, {"realized_by", c.realized_by}});
  }
  return Json{{"table", t.table},
              {"complete", t.complete()},
              {"cells", cells},
              {"warnings", t.warnings},
              {"outside_range", t.outside_range}};
}

Json multiset_check_to_json(const MultisetCheck& m) {
  return Json{{"table", m.table}, {"matches", m.matches}, {"missing", m.missing}, {"extra", m.extra}, {"residue", m.residue}};
}

Json certificate_to_json(const EliminationCertificate& c) {
  return Json{{"case", c.which == XiaoCase::III ? "III" : "IV"},
              {"xi", c.xi},
              {"d_squared", c.d_squared},
              {"d_dot_k", c.d_dot_k},
              {"d_dot_e0", c.d_dot_e0},
              {"d_dot_base_branch", c.d_dot_base_branch},
              {"d_dot_branch", c.d_dot_branch},
              {"section_dot_branch", c.section_dot_branch},
              {"section_bound", c.section_bound},
              {"holds", c.holds()},
              {"assumptions", c.assumptions}};
}

Json error_json(std::string_view code, const std::string& message) {
  return Json{{"error", Json{{"code", std::string(code)}, {"message", message}}}};
}

}  // namespace duval::cli
