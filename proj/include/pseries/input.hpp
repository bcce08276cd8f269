#pragma once

// JSON input documents: parsing, validation with path-named schema errors,
// and serialization back to an equivalent document.

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pseries/character.hpp"
#include "pseries/criteria.hpp"
#include "pseries/mu_poles.hpp"
#include "pseries/root_datum.hpp"
#include "pseries/segments.hpp"
#include "pseries/smooth_group.hpp"

namespace pseries {

using Json = nlohmann::json;
using OJson = nlohmann::ordered_json;

inline const std::vector<std::string>& theorem_tokens() {
  static const std::vector<std::string> t = {
      "auto",    "gln",  "split",  "classical-smooth", "classical-banach", "unitary",
      "rank1",   "glnd", "rgroup", "poles",            "smooth-via-rank1"};
  return t;
}

inline bool pole_case_equal(const PoleCase& a, const PoleCase& b) {
  return a.kind == b.kind && a.d == b.d;
}

struct RunOptions {
  std::string theorem = "auto";
  bool refined = false;
  long long weyl_budget = 10000000LL;
  bool weyl_budget_given = false;
  std::optional<PoleCase> pole;
  std::map<int, PoleCase> cone;
  bool cone_given = false;
  bool unitary = false;
  Rank1Table rank1_table;
  bool table_given = false;

  bool operator==(const RunOptions& o) const {
    if (theorem != o.theorem || refined != o.refined || weyl_budget != o.weyl_budget ||
        cone_given != o.cone_given || unitary != o.unitary || table_given != o.table_given)
      return false;
    if (pole.has_value() != o.pole.has_value()) return false;
    if (pole && !pole_case_equal(*pole, *o.pole)) return false;
    if (cone.size() != o.cone.size()) return false;
    for (const auto& [k, v] : cone) {
      auto it = o.cone.find(k);
      if (it == o.cone.end() || !pole_case_equal(v, it->second)) return false;
    }
    return rank1_table.by_root == o.rank1_table.by_root;
  }
};

struct InputDocument {
  RootDatum datum;
  SmoothCharGroup group;
  std::optional<Character> character;
  std::vector<SegmentDatum> segments;
  RunOptions options;
};

struct ParseResult {
  std::optional<InputDocument> doc;
  std::vector<std::string> errors;

  bool ok() const { return doc.has_value() && errors.empty(); }
};

// Strict rational literal: [+-]?digits optionally followed by /[+-]?digits.
inline std::optional<Rat> rat_from_string(const std::string& t) {
  size_t i = 0;
  auto read_int = [&](Int& out) -> bool {
    bool neg = false;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) {
      neg = t[i] == '-';
      ++i;
    }
    if (i >= t.size() || !std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    Int v = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
      v = v * 10 + (t[i] - '0');
      ++i;
    }
    out = neg ? Int(-v) : v;
    return true;
  };
  Int num = 0, den = 1;
  if (!read_int(num)) return std::nullopt;
  if (i < t.size() && t[i] == '/') {
    ++i;
    if (!read_int(den)) return std::nullopt;
  }
  if (i != t.size() || den == 0) return std::nullopt;
  return Rat(num, den);
}

namespace detail_io {

struct Errs {
  std::vector<std::string> list;
  void add(const std::string& path, const std::string& msg) {
    list.push_back((path.empty() ? std::string("/") : path) + ": " + msg);
  }
};

inline void check_keys(const Json& j, const std::string& path,
                       std::initializer_list<const char*> keys, Errs& e) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys)
      if (it.key() == k) {
        known = true;
        break;
      }
    if (!known) e.add(path, "unknown key \"" + it.key() + "\"");
  }
}

inline bool get_int(const Json& j, const std::string& path, long long& out, Errs& e) {
  if (!j.is_number_integer()) {
    e.add(path, "expected an integer");
    return false;
  }
  out = j.get<long long>();
  return true;
}

inline bool get_bool(const Json& j, const std::string& path, bool& out, Errs& e) {
  if (!j.is_boolean()) {
    e.add(path, "expected a boolean");
    return false;
  }
  out = j.get<bool>();
  return true;
}

inline bool get_string(const Json& j, const std::string& path, std::string& out, Errs& e) {
  if (!j.is_string()) {
    e.add(path, "expected a string");
    return false;
  }
  out = j.get<std::string>();
  return true;
}

// A vector of integers of a fixed length (any length when want < 0).
inline std::optional<IVec> get_ivec(const Json& j, const std::string& path, int want, Errs& e) {
  if (!j.is_array()) {
    e.add(path, "expected an array of integers");
    return std::nullopt;
  }
  if (want >= 0 && static_cast<int>(j.size()) != want) {
    e.add(path, "expected " + std::to_string(want) + " entries, got " +
                    std::to_string(j.size()));
    return std::nullopt;
  }
  IVec v;
  for (size_t i = 0; i < j.size(); ++i) {
    long long x = 0;
    if (!get_int(j[i], path + "/" + std::to_string(i), x, e)) return std::nullopt;
    v.push_back(Int(x));
  }
  return v;
}

// A square matrix given as an array of rows.
inline std::optional<IntMat> get_matrix(const Json& j, const std::string& path, int n, Errs& e) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    e.add(path, "expected a " + std::to_string(n) + "x" + std::to_string(n) +
                    " matrix as an array of rows");
    return std::nullopt;
  }
  std::vector<IVec> rows;
  for (size_t i = 0; i < j.size(); ++i) {
    auto row = get_ivec(j[i], path + "/" + std::to_string(i), n, e);
    if (!row) return std::nullopt;
    rows.push_back(*row);
  }
  if (n == 0) return IntMat(0, 0);
  return IntMat::from_rows(rows);
}

inline std::string int_str(const Int& v) { return v.str(); }

}  // namespace detail_io

inline ParseResult parse_input(const std::string& text) {
  using detail_io::Errs;
  ParseResult res;
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& ex) {
    res.errors.push_back(std::string("/: invalid JSON: ") + ex.what());
    return res;
  }
  if (!j.is_object()) {
    res.errors.push_back("/: the document must be a JSON object");
    return res;
  }

  Errs e;
  detail_io::check_keys(j, "", {"group", "smooth_group", "character", "segments", "options"}, e);

  // ---- group ----
  std::optional<Family> family;
  int size = 0;
  FieldData field;
  bool res_scalars = false;
  int gld_d = 1;
  if (!j.contains("group") || !j["group"].is_object()) {
    e.add("/group", "a group object is required");
  } else {
    const Json& g = j["group"];
    detail_io::check_keys(g, "/group",
                          {"family", "size", "d", "restriction_of_scalars", "field"}, e);
    if (!g.contains("family")) {
      e.add("/group/family", "a family token is required");
    } else {
      std::string tok;
      if (detail_io::get_string(g["family"], "/group/family", tok, e)) {
        family = family_from_token(tok);
        if (!family)
          e.add("/group/family",
                "unknown family \"" + tok +
                    "\" (expected GL, SL, Sp, SO_odd, SO_even, SOstar, U_even, U_odd, or GLD)");
      }
    }
    if (!g.contains("size")) {
      e.add("/group/size", "a positive group size is required");
    } else {
      long long s = 0;
      if (detail_io::get_int(g["size"], "/group/size", s, e)) {
        if (s < 1)
          e.add("/group/size", "the group size must be positive");
        else
          size = static_cast<int>(s);
      }
    }
    if (g.contains("d")) {
      long long d = 0;
      if (detail_io::get_int(g["d"], "/group/d", d, e)) {
        if (d < 1)
          e.add("/group/d", "the division-algebra degree must be positive");
        else
          gld_d = static_cast<int>(d);
      }
    }
    if (g.contains("restriction_of_scalars"))
      detail_io::get_bool(g["restriction_of_scalars"], "/group/restriction_of_scalars",
                          res_scalars, e);
    if (g.contains("field")) {
      const Json& f = g["field"];
      if (!f.is_object()) {
        e.add("/group/field", "expected an object");
      } else {
        detail_io::check_keys(f, "/group/field", {"p", "q", "degree", "embeddings", "extension"},
                              e);
        long long v = 0;
        if (f.contains("p") && detail_io::get_int(f["p"], "/group/field/p", v, e)) {
          if (v < 2)
            e.add("/group/field/p", "the residue characteristic must be at least 2");
          else
            field.p = Int(v);
        }
        if (f.contains("q") && detail_io::get_int(f["q"], "/group/field/q", v, e)) {
          if (v < 2)
            e.add("/group/field/q", "the residue cardinality must be at least 2");
          else
            field.q = Int(v);
        } else if (f.contains("p") && !f.contains("q")) {
          field.q = field.p;
        }
        bool degree_given = false;
        if (f.contains("degree") && detail_io::get_int(f["degree"], "/group/field/degree", v, e)) {
          if (v < 1)
            e.add("/group/field/degree", "the degree over Q_p must be positive");
          else {
            field.deg_F_Qp = static_cast<int>(v);
            degree_given = true;
          }
        }
        if (f.contains("embeddings") &&
            detail_io::get_int(f["embeddings"], "/group/field/embeddings", v, e)) {
          if (v < 1)
            e.add("/group/field/embeddings", "the embedding count must be positive");
          else
            field.embeddings = static_cast<int>(v);
        } else if (degree_given) {
          field.embeddings = field.deg_F_Qp;
        }
        if (f.contains("extension")) {
          const Json& x = f["extension"];
          if (!x.is_object()) {
            e.add("/group/field/extension", "expected an object");
          } else {
            detail_io::check_keys(x, "/group/field/extension", {"e", "f", "degree"}, e);
            field.has_extension = true;
            if (x.contains("e") && detail_io::get_int(x["e"], "/group/field/extension/e", v, e))
              field.ext_e = static_cast<int>(v);
            if (x.contains("f") && detail_io::get_int(x["f"], "/group/field/extension/f", v, e))
              field.ext_f = static_cast<int>(v);
            if (x.contains("degree") &&
                detail_io::get_int(x["degree"], "/group/field/extension/degree", v, e))
              field.ext_degree = static_cast<int>(v);
          }
        }
      }
    }
  }

  // Build the root datum as soon as the group block parses, so later blocks
  // can validate against its rank.
  std::optional<RootDatum> datum;
  if (e.list.empty() && family && size >= 1) {
    if (family_needs_extension(*family) && !field.has_extension) {
      e.add("/group/field/extension",
            "family " + family_token(*family) + " requires quadratic extension data");
    } else {
      try {
        datum = build_root_datum(*family, size, field, res_scalars, gld_d);
      } catch (const std::exception& ex) {
        e.add("/group", ex.what());
      }
    }
  }

  // ---- smooth_group ----
  std::vector<std::string> gen_names;
  std::optional<IntMat> relations;
  std::optional<IntMat> involution, norm_pullback, restriction;
  std::map<std::string, IVec> distinguished;
  int m = 0;
  bool smooth_ok = true;
  if (j.contains("smooth_group")) {
    const Json& sg = j["smooth_group"];
    if (!sg.is_object()) {
      e.add("/smooth_group", "expected an object");
      smooth_ok = false;
    } else {
      detail_io::check_keys(sg, "/smooth_group",
                            {"generators", "orders", "relations", "involution", "norm_pullback",
                             "restriction", "distinguished"},
                            e);
      if (sg.contains("generators")) {
        const Json& gn = sg["generators"];
        if (!gn.is_array()) {
          e.add("/smooth_group/generators", "expected an array of generator names");
          smooth_ok = false;
        } else {
          for (size_t i = 0; i < gn.size(); ++i) {
            std::string name;
            if (!detail_io::get_string(gn[i], "/smooth_group/generators/" + std::to_string(i),
                                       name, e))
              smooth_ok = false;
            else
              gen_names.push_back(name);
          }
        }
      }
      m = static_cast<int>(gen_names.size());
      const bool has_orders = sg.contains("orders");
      const bool has_relations = sg.contains("relations");
      if (has_orders && has_relations) {
        e.add("/smooth_group", "give either \"orders\" or \"relations\", not both");
        smooth_ok = false;
      } else if (has_orders) {
        auto ords = detail_io::get_ivec(sg["orders"], "/smooth_group/orders", m, e);
        if (!ords) {
          smooth_ok = false;
        } else {
          std::vector<IVec> cols;
          for (int i = 0; i < m; ++i) {
            if ((*ords)[i] < 0) {
              e.add("/smooth_group/orders", "generator orders must be non-negative");
              smooth_ok = false;
              break;
            }
            if ((*ords)[i] > 0) {
              IVec c(m, Int(0));
              c[i] = (*ords)[i];
              cols.push_back(c);
            }
          }
          if (smooth_ok) relations = cols.empty() ? IntMat(m, 0) : IntMat::from_columns(cols);
        }
      } else if (has_relations) {
        const Json& rl = sg["relations"];
        if (!rl.is_array()) {
          e.add("/smooth_group/relations", "expected an array of relation vectors");
          smooth_ok = false;
        } else {
          std::vector<IVec> cols;
          for (size_t i = 0; i < rl.size(); ++i) {
            auto col =
                detail_io::get_ivec(rl[i], "/smooth_group/relations/" + std::to_string(i), m, e);
            if (!col) {
              smooth_ok = false;
              break;
            }
            cols.push_back(*col);
          }
          if (smooth_ok) relations = cols.empty() ? IntMat(m, 0) : IntMat::from_columns(cols);
        }
      } else if (m > 0) {
        e.add("/smooth_group", "give either \"orders\" or \"relations\" for the generators");
        smooth_ok = false;
      } else {
        relations = IntMat(0, 0);
      }
      for (const char* name : {"involution", "norm_pullback", "restriction"}) {
        if (!sg.contains(name)) continue;
        auto mat = detail_io::get_matrix(sg[name], std::string("/smooth_group/") + name, m, e);
        if (!mat) {
          smooth_ok = false;
          continue;
        }
        if (std::string(name) == "involution") involution = *mat;
        if (std::string(name) == "norm_pullback") norm_pullback = *mat;
        if (std::string(name) == "restriction") restriction = *mat;
      }
      if (sg.contains("distinguished")) {
        const Json& ds = sg["distinguished"];
        if (!ds.is_object()) {
          e.add("/smooth_group/distinguished", "expected an object of named elements");
          smooth_ok = false;
        } else {
          for (auto it = ds.begin(); it != ds.end(); ++it) {
            auto vec =
                detail_io::get_ivec(it.value(), "/smooth_group/distinguished/" + it.key(), m, e);
            if (!vec)
              smooth_ok = false;
            else
              distinguished[it.key()] = *vec;
          }
        }
      }
    }
  } else {
    relations = IntMat(0, 0);
  }

  // Families over a quadratic extension need the extension maps declared.
  if (family && family_needs_extension(*family)) {
    if (!involution)
      e.add("/smooth_group/involution", "family " + family_token(*family) +
                                            " requires the smooth group to declare involution");
    if (!norm_pullback)
      e.add("/smooth_group/norm_pullback",
            "family " + family_token(*family) +
                " requires the smooth group to declare norm_pullback");
  }
  if (family && (*family == Family::Ueven || *family == Family::Uodd)) {
    if (!restriction)
      e.add("/smooth_group/restriction", "family " + family_token(*family) +
                                             " requires the smooth group to declare restriction");
    if (!distinguished.count("omega_EF"))
      e.add("/smooth_group/distinguished/omega_EF",
            "family " + family_token(*family) +
                " requires the distinguished element omega_EF");
  }

  // A document may omit the smooth data entirely; a one-generator group with
  // the single relation g = 1 stands in for the trivial character group.
  if (smooth_ok && m == 0) {
    if (involution || norm_pullback || restriction || !distinguished.empty()) {
      e.add("/smooth_group", "maps and distinguished elements need at least one generator");
      smooth_ok = false;
    } else {
      gen_names = {"one"};
      relations = IntMat(1, 1);
      relations->at(0, 0) = 1;
      m = 1;
    }
  }

  std::optional<SmoothCharGroup> group;
  if (smooth_ok && relations) {
    try {
      group = make_smooth_group(gen_names, *relations, involution, norm_pullback, restriction,
                                distinguished);
    } catch (const std::exception& ex) {
      e.add("/smooth_group", ex.what());
    }
  }

  // ---- character ----
  std::optional<Character> character;
  if (j.contains("character")) {
    const Json& ch = j["character"];
    if (!ch.is_array()) {
      e.add("/character", "expected an array of coordinate characters");
    } else {
      if (datum && static_cast<int>(ch.size()) != datum->rank)
        e.add("/character", "expected " + std::to_string(datum->rank) + " coordinates for " +
                                datum->display() + ", got " + std::to_string(ch.size()));
      Character chi;
      bool ok = true;
      int next_generic = 1;
      for (size_t i = 0; i < ch.size(); ++i) {
        const std::string path = "/character/" + std::to_string(i);
        if (!ch[i].is_object()) {
          e.add(path, "expected an object");
          ok = false;
          continue;
        }
        detail_io::check_keys(ch[i], path, {"smooth", "unramified", "algebraic"}, e);
        CharCoord c;
        c.smooth = IVec(m, Int(0));
        if (ch[i].contains("smooth")) {
          auto v = detail_io::get_ivec(ch[i]["smooth"], path + "/smooth", group ? m : -1, e);
          if (!v)
            ok = false;
          else
            c.smooth = *v;
        }
        if (ch[i].contains("unramified")) {
          const Json& u = ch[i]["unramified"];
          if (u.is_number_integer()) {
            c.s = Rat(Int(u.get<long long>()));
          } else if (u.is_string()) {
            auto r = rat_from_string(u.get<std::string>());
            if (!r) {
              e.add(path + "/unramified",
                    "malformed rational \"" + u.get<std::string>() + "\"");
              ok = false;
            } else {
              c.s = *r;
            }
          } else {
            e.add(path + "/unramified", "expected a rational as a string or an integer");
            ok = false;
          }
        }
        if (ch[i].contains("algebraic")) {
          const Json& al = ch[i]["algebraic"];
          if (!al.is_array()) {
            e.add(path + "/algebraic", "expected an array");
            ok = false;
          } else {
            if (datum && static_cast<int>(al.size()) > datum->field.embeddings)
              e.add(path + "/algebraic",
                    "got " + std::to_string(al.size()) + " entries but the field declares " +
                        std::to_string(datum->field.embeddings) + " embeddings");
            for (size_t k = 0; k < al.size(); ++k) {
              const std::string apath = path + "/algebraic/" + std::to_string(k);
              const Json& entry = al[k];
              if (entry.is_number_integer()) {
                c.alg.push_back(AlgPart::value(Rat(Int(entry.get<long long>()))));
              } else if (entry.is_string()) {
                const std::string t = entry.get<std::string>();
                if (t == "generic") {
                  c.alg.push_back(AlgPart::generic(next_generic++));
                } else if (t.rfind("generic:", 0) == 0) {
                  auto id = rat_from_string(t.substr(8));
                  if (!id || !is_integer(*id)) {
                    e.add(apath, "malformed generic id \"" + t + "\"");
                    ok = false;
                  } else {
                    c.alg.push_back(
                        AlgPart::generic(static_cast<int>(numerator(*id).convert_to<long long>())));
                  }
                } else {
                  auto r = rat_from_string(t);
                  if (!r) {
                    e.add(apath, "malformed rational \"" + t + "\"");
                    ok = false;
                  } else {
                    c.alg.push_back(AlgPart::value(*r));
                  }
                }
              } else {
                e.add(apath, "expected a rational string, an integer, or \"generic\"");
                ok = false;
              }
            }
          }
        }
        chi.coords.push_back(c);
      }
      if (ok && datum && chi.rank() == datum->rank) character = chi;
    }
  }

  // ---- segments ----
  std::vector<SegmentDatum> segments;
  if (j.contains("segments")) {
    const Json& sg = j["segments"];
    if (!sg.is_array()) {
      e.add("/segments", "expected an array of segment objects");
    } else {
      bool ok = true;
      for (size_t i = 0; i < sg.size(); ++i) {
        const std::string path = "/segments/" + std::to_string(i);
        if (!sg[i].is_object()) {
          e.add(path, "expected an object");
          ok = false;
          continue;
        }
        detail_io::check_keys(sg[i], path, {"class", "k", "step", "d"}, e);
        SegmentDatum s;
        s.d = gld_d;
        long long v = 0;
        if (sg[i].contains("class") && detail_io::get_int(sg[i]["class"], path + "/class", v, e))
          s.class_id = static_cast<int>(v);
        if (!sg[i].contains("k")) {
          e.add(path + "/k", "a segment needs an exponent k");
          ok = false;
        } else if (detail_io::get_int(sg[i]["k"], path + "/k", v, e)) {
          s.k = Int(v);
        }
        if (sg[i].contains("step") && detail_io::get_int(sg[i]["step"], path + "/step", v, e))
          s.step = static_cast<int>(v);
        if (sg[i].contains("d") && detail_io::get_int(sg[i]["d"], path + "/d", v, e))
          s.d = static_cast<int>(v);
        segments.push_back(s);
      }
      if (ok && !segments.empty()) {
        try {
          validate_segments(segments);
        } catch (const std::exception& ex) {
          e.add("/segments", ex.what());
        }
      }
    }
  }

  // ---- options ----
  RunOptions opt;
  if (j.contains("options")) {
    const Json& op = j["options"];
    if (!op.is_object()) {
      e.add("/options", "expected an object");
    } else {
      detail_io::check_keys(op, "/options",
                            {"theorem", "refined", "weyl_budget", "pole_case", "pole_d", "cone",
                             "unitary", "rank1_table"},
                            e);
      if (op.contains("theorem")) {
        std::string t;
        if (detail_io::get_string(op["theorem"], "/options/theorem", t, e)) {
          bool known = false;
          for (const auto& tok : theorem_tokens())
            if (tok == t) {
              known = true;
              break;
            }
          if (!known) {
            std::string all;
            for (const auto& tok : theorem_tokens()) all += (all.empty() ? "" : ", ") + tok;
            e.add("/options/theorem", "unknown theorem \"" + t + "\" (expected one of " + all + ")");
          } else {
            opt.theorem = t;
          }
        }
      }
      if (op.contains("refined"))
        detail_io::get_bool(op["refined"], "/options/refined", opt.refined, e);
      if (op.contains("unitary"))
        detail_io::get_bool(op["unitary"], "/options/unitary", opt.unitary, e);
      if (op.contains("weyl_budget")) {
        long long v = 0;
        if (detail_io::get_int(op["weyl_budget"], "/options/weyl_budget", v, e)) {
          if (v < 1)
            e.add("/options/weyl_budget", "the search budget must be positive");
          else {
            opt.weyl_budget = v;
            opt.weyl_budget_given = true;
          }
        }
      }
      int pole_d = 1;
      if (op.contains("pole_d")) {
        long long v = 0;
        if (detail_io::get_int(op["pole_d"], "/options/pole_d", v, e)) {
          if (v < 1)
            e.add("/options/pole_d", "the division-algebra degree must be positive");
          else
            pole_d = static_cast<int>(v);
        }
      }
      if (op.contains("pole_case")) {
        std::string t;
        if (detail_io::get_string(op["pole_case"], "/options/pole_case", t, e)) {
          auto pc = pole_case_from_token(t, pole_d);
          if (!pc)
            e.add("/options/pole_case",
                  "unknown pole case \"" + t +
                      "\" (expected i, ii3, ii4, iii1, iii2, iv4, or iv5)");
          else
            opt.pole = pc;
        }
      }
      if (op.contains("cone")) {
        const Json& cn = op["cone"];
        if (!cn.is_object()) {
          e.add("/options/cone", "expected an object keyed by simple-root position");
        } else {
          opt.cone_given = true;
          for (auto it = cn.begin(); it != cn.end(); ++it) {
            const std::string cpath = "/options/cone/" + it.key();
            auto posr = rat_from_string(it.key());
            if (!posr || !is_integer(*posr) || *posr < 0) {
              e.add(cpath, "keys must be simple-root positions (non-negative integers)");
              continue;
            }
            int pos = static_cast<int>(numerator(*posr).convert_to<long long>());
            if (datum && pos >= static_cast<int>(datum->simples.size())) {
              e.add(cpath, "simple-root position out of range for " + datum->display());
              continue;
            }
            std::string tok;
            int d = pole_d;
            if (it.value().is_string()) {
              tok = it.value().get<std::string>();
            } else if (it.value().is_object()) {
              detail_io::check_keys(it.value(), cpath, {"case", "d"}, e);
              if (!it.value().contains("case") ||
                  !detail_io::get_string(it.value()["case"], cpath + "/case", tok, e))
                continue;
              if (it.value().contains("d")) {
                long long v = 0;
                if (detail_io::get_int(it.value()["d"], cpath + "/d", v, e)) d = static_cast<int>(v);
              }
            } else {
              e.add(cpath, "expected a pole-case token or an object {case, d}");
              continue;
            }
            auto pc = pole_case_from_token(tok, d);
            if (!pc)
              e.add(cpath, "unknown pole case \"" + tok + "\"");
            else
              opt.cone.emplace(pos, *pc);
          }
        }
      }
      if (op.contains("rank1_table")) {
        const Json& tb = op["rank1_table"];
        if (!tb.is_object()) {
          e.add("/options/rank1_table", "expected an object keyed by reduced root index");
        } else {
          opt.table_given = true;
          for (auto it = tb.begin(); it != tb.end(); ++it) {
            const std::string tpath = "/options/rank1_table/" + it.key();
            auto idxr = rat_from_string(it.key());
            if (!idxr || !is_integer(*idxr) || *idxr < 0) {
              e.add(tpath, "keys must be reduced root indices (non-negative integers)");
              continue;
            }
            int idx = static_cast<int>(numerator(*idxr).convert_to<long long>());
            if (datum && idx >= static_cast<int>(datum->reduced_pos.size())) {
              e.add(tpath, "root index out of range for " + datum->display());
              continue;
            }
            bool red = false;
            if (detail_io::get_bool(it.value(), tpath, red, e)) opt.rank1_table.by_root[idx] = red;
          }
        }
      }
    }
  }

  res.errors = e.list;
  if (!res.errors.empty() || !datum || !group) return res;

  InputDocument doc;
  doc.datum = *datum;
  doc.group = *group;
  doc.character = character;
  doc.segments = segments;
  doc.options = opt;
  res.doc = std::move(doc);
  return res;
}

// ---- serialization back to a document ----

namespace detail_io {

inline OJson matrix_rows_json(const IntMat& M) {
  OJson rows = OJson::array();
  for (int i = 0; i < M.rows; ++i) {
    OJson row = OJson::array();
    for (int j = 0; j < M.cols; ++j) row.push_back(M.at(i, j).convert_to<long long>());
    rows.push_back(row);
  }
  return rows;
}

inline OJson ivec_json(const IVec& v) {
  OJson out = OJson::array();
  for (const auto& x : v) out.push_back(x.convert_to<long long>());
  return out;
}

inline std::string alg_entry_str(const AlgPart& a) {
  if (a.gen.empty()) return rat_str(a.offset);
  require(a.offset == 0 && a.gen.size() == 1 && a.gen.begin()->second == 1,
          "only plain rationals and single generic symbols serialize");
  return "generic:" + std::to_string(a.gen.begin()->first);
}

}  // namespace detail_io

inline OJson input_json(const InputDocument& doc) {
  OJson out;
  const RootDatum& rd = doc.datum;

  OJson g;
  g["family"] = family_token(rd.family);
  g["size"] = rd.size;
  if (rd.family == Family::GLD) g["d"] = rd.d;
  if (rd.res_scalars) g["restriction_of_scalars"] = true;
  OJson f;
  f["p"] = rd.field.p.convert_to<long long>();
  f["q"] = rd.field.q.convert_to<long long>();
  f["degree"] = rd.field.deg_F_Qp;
  f["embeddings"] = rd.field.embeddings;
  if (rd.field.has_extension) {
    OJson x;
    x["e"] = rd.field.ext_e;
    x["f"] = rd.field.ext_f;
    x["degree"] = rd.field.ext_degree;
    f["extension"] = x;
  }
  g["field"] = f;
  out["group"] = g;

  OJson sg;
  OJson gens = OJson::array();
  for (const auto& n : doc.group.gen_names) gens.push_back(n);
  sg["generators"] = gens;
  OJson rels = OJson::array();
  for (int c = 0; c < doc.group.relations.cols; ++c)
    rels.push_back(detail_io::ivec_json(doc.group.relations.column(c)));
  sg["relations"] = rels;
  if (doc.group.involution) sg["involution"] = detail_io::matrix_rows_json(*doc.group.involution);
  if (doc.group.norm_pullback)
    sg["norm_pullback"] = detail_io::matrix_rows_json(*doc.group.norm_pullback);
  if (doc.group.restriction)
    sg["restriction"] = detail_io::matrix_rows_json(*doc.group.restriction);
  if (!doc.group.distinguished.empty()) {
    OJson ds;
    for (const auto& [name, v] : doc.group.distinguished) ds[name] = detail_io::ivec_json(v);
    sg["distinguished"] = ds;
  }
  out["smooth_group"] = sg;

  if (doc.character) {
    OJson ch = OJson::array();
    for (const auto& c : doc.character->coords) {
      OJson cc;
      cc["smooth"] = detail_io::ivec_json(c.smooth);
      cc["unramified"] = rat_str(c.s);
      if (!c.alg.empty()) {
        OJson al = OJson::array();
        for (const auto& a : c.alg) al.push_back(detail_io::alg_entry_str(a));
        cc["algebraic"] = al;
      }
      ch.push_back(cc);
    }
    out["character"] = ch;
  }

  if (!doc.segments.empty()) {
    OJson sgs = OJson::array();
    for (const auto& s : doc.segments) {
      OJson ss;
      ss["class"] = s.class_id;
      ss["k"] = s.k.convert_to<long long>();
      ss["step"] = s.step;
      ss["d"] = s.d;
      sgs.push_back(ss);
    }
    out["segments"] = sgs;
  }

  OJson op;
  op["theorem"] = doc.options.theorem;
  if (doc.options.refined) op["refined"] = true;
  if (doc.options.unitary) op["unitary"] = true;
  if (doc.options.weyl_budget_given) op["weyl_budget"] = doc.options.weyl_budget;
  if (doc.options.pole) {
    op["pole_case"] = pole_case_token(*doc.options.pole);
    op["pole_d"] = doc.options.pole->d;
  }
  if (doc.options.cone_given) {
    OJson cn;
    for (const auto& [pos, pc] : doc.options.cone) {
      OJson entry;
      entry["case"] = pole_case_token(pc);
      entry["d"] = pc.d;
      cn[std::to_string(pos)] = entry;
    }
    op["cone"] = cn;
  }
  if (doc.options.table_given) {
    OJson tb;
    for (const auto& [idx, red] : doc.options.rank1_table.by_root) tb[std::to_string(idx)] = red;
    op["rank1_table"] = tb;
  }
  out["options"] = op;
  return out;
}

inline std::string serialize_input(const InputDocument& doc) { return input_json(doc).dump(2); }

// Semantic equality of two parsed documents.
inline bool input_equal(const InputDocument& a, const InputDocument& b) {
  const RootDatum &x = a.datum, &y = b.datum;
  if (x.family != y.family || x.size != y.size || x.d != y.d ||
      x.res_scalars != y.res_scalars)
    return false;
  const FieldData &fa = x.field, &fb = y.field;
  if (fa.p != fb.p || fa.q != fb.q || fa.deg_F_Qp != fb.deg_F_Qp ||
      fa.embeddings != fb.embeddings || fa.has_extension != fb.has_extension)
    return false;
  if (fa.has_extension &&
      (fa.ext_e != fb.ext_e || fa.ext_f != fb.ext_f || fa.ext_degree != fb.ext_degree))
    return false;
  const SmoothCharGroup &ga = a.group, &gb = b.group;
  if (ga.m != gb.m || ga.gen_names != gb.gen_names) return false;
  for (int c = 0; c < ga.relations.cols; ++c)
    if (!gb.lat.contains(ga.relations.column(c))) return false;
  for (int c = 0; c < gb.relations.cols; ++c)
    if (!ga.lat.contains(gb.relations.column(c))) return false;
  if (ga.involution != gb.involution || ga.norm_pullback != gb.norm_pullback ||
      ga.restriction != gb.restriction || ga.distinguished != gb.distinguished)
    return false;
  if (a.character.has_value() != b.character.has_value()) return false;
  if (a.character && !char_equal(ga, *a.character, *b.character)) return false;
  return a.segments == b.segments && a.options == b.options;
}

}  // namespace pseries
