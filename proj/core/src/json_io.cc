// Copyright 2026 The etcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "etcs/json_io.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "etcs/error.h"

namespace etcs {

using nlohmann::json;

namespace {

std::string Join(const std::string& prefix, const std::string& key) {
  if (prefix.empty()) return key;
  if (key.empty()) return prefix;
  if (prefix.back() == ':') return prefix + " " + key;
  if (!key.empty() && key.front() == '[') return prefix + key;
  return prefix + "." + key;
}

// Runs fn, prefixing the path of any ValidationError it throws.
template <typename Fn>
auto Nested(const std::string& prefix, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ValidationError& e) {
    throw ValidationError(Join(prefix, e.path()), e.message());
  }
}

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("", std::string("JSON parse error: ") + e.what());
  }
}

const json& Field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ValidationError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(Join(path, key), "missing field");
  return *it;
}

const json* OptionalField(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

std::int64_t AsInt(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ValidationError(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::string AsString(const json& j, const std::string& path) {
  if (!j.is_string()) throw ValidationError(path, "expected a string");
  return j.get<std::string>();
}

double AsDouble(const json& j, const std::string& path) {
  if (!j.is_number()) throw ValidationError(path, "expected a number");
  return j.get<double>();
}

Rational AsRational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    return Nested(path, [&] { return ParseRational(j.get<std::string>()); });
  }
  throw ValidationError(path, "expected an integer or a string \"a/b\"");
}

Integer AsInteger(const json& j, const std::string& path) {
  const Rational r = AsRational(j, path);
  if (Denominator(r) != 1) throw ValidationError(path, "expected an integer");
  return Numerator(r);
}

void CheckSchema(const json& j, bool required) {
  if (!j.is_object()) throw ValidationError("", "expected an object");
  const json* s = OptionalField(j, "schema");
  if (!s) {
    if (required) throw ValidationError("schema", "missing field");
    return;
  }
  if (!s->is_string() || s->get<std::string>() != kSchemaTag) {
    throw ValidationError("schema", "unsupported schema version, expected \"" +
                                        std::string(kSchemaTag) + "\"");
  }
}

GramMatrix GramFrom(const json& j, const std::string& path) {
  if (!j.is_array()) throw ValidationError(path, "expected an array of rows");
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) throw ValidationError(row_path, "expected an array");
    rows.emplace_back();
    for (std::size_t c = 0; c < j[i].size(); ++c) {
      rows.back().push_back(AsInteger(j[i][c], row_path + "[" + std::to_string(c) + "]"));
    }
  }
  return Nested(path, [&] { return GramMatrix(std::move(rows)); });
}

Configuration ConfigurationFrom(const json& j) {
  CheckSchema(j, false);
  GramMatrix gram = GramFrom(Field(j, "gram", ""), "gram");
  const std::int64_t r_plus = AsInt(Field(j, "r_plus", ""), "r_plus");
  const std::int64_t r_minus = AsInt(Field(j, "r_minus", ""), "r_minus");
  if (r_plus < 0) throw ValidationError("r_plus", "must be non-negative");
  if (r_minus < 0) throw ValidationError("r_minus", "must be non-negative");
  return Configuration(std::move(gram), static_cast<std::size_t>(r_plus),
                       static_cast<std::size_t>(r_minus));
}

GluingData GluingFrom(const json& j) {
  CheckSchema(j, false);
  GluingData g;
  g.k_plus = AsInt(Field(j, "k_plus", ""), "k_plus");
  g.eps_plus = AsInt(Field(j, "eps_plus", ""), "eps_plus");
  g.k_minus = AsInt(Field(j, "k_minus", ""), "k_minus");
  g.eps_minus = AsInt(Field(j, "eps_minus", ""), "eps_minus");
  const json& m = Field(j, "G", "");
  if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 ||
      !m[1].is_array() || m[1].size() != 2) {
    throw ValidationError("G", "expected [[m, p], [n, q]]");
  }
  g.m = AsInt(m[0][0], "G[0][0]");
  g.p = AsInt(m[0][1], "G[0][1]");
  g.n = AsInt(m[1][0], "G[1][0]");
  g.q = AsInt(m[1][1], "G[1][1]");
  const GluingValidation v = Validate(g);
  if (!v.ok()) throw ValidationError("G", "gluing constraints violated: " + v.Failures());
  return g;
}

FixedPointAngle FixedPointAngleFrom(const json& j, const std::string& path) {
  if (!j.is_object()) throw ValidationError(path, "expected {\"pi_frac\": \"a/b\"} or {\"radians\": x}");
  if (const json* f = OptionalField(j, "pi_frac")) {
    return FixedPointAngle::PiFrac(AsRational(*f, Join(path, "pi_frac")));
  }
  if (const json* r = OptionalField(j, "radians")) {
    return FixedPointAngle::Radians(AsDouble(*r, Join(path, "radians")));
  }
  throw ValidationError(path, "expected {\"pi_frac\": \"a/b\"} or {\"radians\": x}");
}

FixedPointSet FixedPointSetFrom(const json& j) {
  CheckSchema(j, false);
  FixedPointSet fps;
  fps.k = AsInt(Field(j, "k", ""), "k");
  if (const json* entries = OptionalField(j, "entries")) {
    if (!entries->is_array()) throw ValidationError("entries", "expected an array");
    for (std::size_t e = 0; e < entries->size(); ++e) {
      const std::string path = "entries[" + std::to_string(e) + "]";
      const json& ej = (*entries)[e];
      FixedPointEntry entry;
      entry.j = AsInt(Field(ej, "j", path), Join(path, "j"));
      const json& angles = Field(ej, "angles", path);
      if (!angles.is_array() || angles.size() != 3) {
        throw ValidationError(Join(path, "angles"), "expected three angles");
      }
      for (std::size_t i = 0; i < 3; ++i) {
        entry.angles[i] = FixedPointAngleFrom(
            angles[i], Join(path, "angles") + "[" + std::to_string(i) + "]");
      }
      fps.entries.push_back(entry);
    }
  }
  ValidateFixedPointSet(fps);
  return fps;
}

BlockRecord BlockFrom(const json& j) {
  CheckSchema(j, false);
  BlockRecord b;
  b.name = AsString(Field(j, "name", ""), "name");
  b.polarising_gram = GramFrom(Field(j, "polarising_gram", ""), "polarising_gram");
  b.k = AsInt(Field(j, "k", ""), "k");
  b.eps = AsInt(Field(j, "eps", ""), "eps");
  if (const json* f = OptionalField(j, "fixed_points")) {
    b.fixed_points = Nested("fixed_points", [&] { return FixedPointSetFrom(*f); });
  } else {
    b.fixed_points.k = b.k;
  }
  if (const json* n = OptionalField(j, "notes")) b.notes = AsString(*n, "notes");
  ValidateBlock(b);
  return b;
}

ConfigAngle AngleFrom(const json& j, const std::string& path) {
  if (j.is_string()) {
    const std::string tag = j.get<std::string>();
    if (tag == "zero") return ConfigAngle::Zero();
    if (tag == "pi") return ConfigAngle::Pi();
    throw ValidationError(path, "unknown angle tag '" + tag + "'");
  }
  if (j.is_object()) {
    if (const json* c = OptionalField(j, "cos2")) {
      const Rational t = AsRational(*c, Join(path, "cos2"));
      if (t <= -2 || t >= 2) throw ValidationError(Join(path, "cos2"), "2 cos(alpha) must lie in (-2, 2)");
      const std::int64_t sign = AsInt(Field(j, "sign", path), Join(path, "sign"));
      if (sign != 1 && sign != -1) throw ValidationError(Join(path, "sign"), "must be 1 or -1");
      return ConfigAngle::Exact(t, static_cast<int>(sign));
    }
    if (const json* f = OptionalField(j, "float")) {
      const double x = AsDouble(*f, Join(path, "float"));
      if (!(x > -kPi && x <= kPi)) throw ValidationError(Join(path, "float"), "must lie in (-pi, pi]");
      return ConfigAngle::Float(x);
    }
  }
  throw ValidationError(path, "expected \"zero\", \"pi\", {\"cos2\", \"sign\"} or {\"float\"}");
}

std::vector<ConfigAngle> AnglesFrom(const json& j, const std::string& path) {
  if (!j.is_array()) throw ValidationError(path, "expected an array");
  std::vector<ConfigAngle> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(AngleFrom(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json AngleTo(const ConfigAngle& a) {
  switch (a.kind) {
    case ConfigAngle::Kind::kZero: return "zero";
    case ConfigAngle::Kind::kPi: return "pi";
    case ConfigAngle::Kind::kExact: return json{{"cos2", ToString(a.two_cos)}, {"sign", a.sign}};
    case ConfigAngle::Kind::kFloat: return json{{"float", a.radians}};
  }
  return nullptr;
}

HyperPolygon PolygonFrom(const json& j) {
  CheckSchema(j, false);
  HyperPolygon p;
  p.n_sides = static_cast<int>(AsInt(Field(j, "n_sides", ""), "n_sides"));
  auto point = [](const json& v, const std::string& path) {
    return Nested(path, [&] { return BoundaryPoint::Parse(AsString(v, "")); });
  };
  if (const json* cusps = OptionalField(j, "cusps")) {
    for (std::size_t i = 0; i < cusps->size(); ++i) {
      const std::string path = "cusps[" + std::to_string(i) + "]";
      const json& c = (*cusps)[i];
      p.cusps.push_back({point(Field(c, "base", path), Join(path, "base")),
                         point(Field(c, "x", path), Join(path, "x")),
                         point(Field(c, "y", path), Join(path, "y"))});
      if (p.cusps.back().base.infinite) {
        throw ValidationError(Join(path, "base"), "cusp base must be rational");
      }
    }
  }
  if (const json* edges = OptionalField(j, "edges")) {
    for (std::size_t i = 0; i < edges->size(); ++i) {
      const std::string path = "edges[" + std::to_string(i) + "]";
      const json& e = (*edges)[i];
      Geodesic g{point(Field(e, "a", path), Join(path, "a")),
                 point(Field(e, "b", path), Join(path, "b")), false};
      if (const json* ray = OptionalField(e, "ray")) g.ray = ray->is_boolean() && ray->get<bool>();
      p.edges.push_back(g);
    }
  }
  if (const json* angles = OptionalField(j, "interior_angles")) {
    for (std::size_t i = 0; i < angles->size(); ++i) {
      const std::string path = "interior_angles[" + std::to_string(i) + "]";
      const json& a = (*angles)[i];
      if (const json* t = OptionalField(a, "two_theta"); t && t->is_boolean() && t->get<bool>()) {
        p.interior_angles.push_back({Rational(0), Rational(2), 0.0});
      } else if (const json* r = OptionalField(a, "radians")) {
        const double x = AsDouble(*r, Join(path, "radians"));
        if (!(x > 0 && x < kPi)) throw ValidationError(Join(path, "radians"), "interior angle must lie in (0, pi)");
        p.interior_angles.push_back({Rational(0), Rational(0), x});
      } else {
        throw ValidationError(path, "expected {\"two_theta\": true} or {\"radians\": x}");
      }
    }
  }
  PolygonArea(p);
  return p;
}

template <typename T, typename FromJson>
T FromRefOrInline(const json& j, const std::string& key, const std::string& base_dir,
                  FromJson from) {
  const json& v = Field(j, key, "");
  return Nested(key, [&]() -> T {
    if (v.is_string()) {
      const std::filesystem::path ref = std::filesystem::path(base_dir) / v.get<std::string>();
      const json doc = Parse(ReadFile(ref.string()));
      CheckSchema(doc, true);
      return from(doc);
    }
    return from(v);
  });
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GramMatrix GramFromJson(std::string_view text) {
  const json j = Parse(text);
  if (j.is_object()) {
    CheckSchema(j, true);
    return GramFrom(Field(j, "gram", ""), "gram");
  }
  return GramFrom(j, "");
}

namespace {

template <typename Fn>
auto Document(std::string_view text, Fn from) {
  const json j = Parse(text);
  CheckSchema(j, true);
  return from(j);
}

}  // namespace

Configuration ConfigurationFromJson(std::string_view text) {
  return Document(text, ConfigurationFrom);
}
GluingData GluingFromJson(std::string_view text) { return Document(text, GluingFrom); }
FixedPointSet FixedPointSetFromJson(std::string_view text) {
  return Document(text, FixedPointSetFrom);
}
BlockRecord BlockFromJson(std::string_view text) { return Document(text, BlockFrom); }
HyperPolygon PolygonFromJson(std::string_view text) { return Document(text, PolygonFrom); }

EtcsInstance InstanceFromJson(std::string_view text, const std::string& base_dir) {
  const json j = Parse(text);
  CheckSchema(j, true);
  EtcsInstance inst;
  inst.name = AsString(Field(j, "name", ""), "name");
  inst.block_plus = FromRefOrInline<BlockRecord>(j, "block_plus", base_dir, BlockFrom);
  inst.block_minus = FromRefOrInline<BlockRecord>(j, "block_minus", base_dir, BlockFrom);
  inst.gluing = FromRefOrInline<GluingData>(j, "gluing", base_dir, GluingFrom);
  if (OptionalField(j, "configuration")) {
    inst.configuration =
        FromRefOrInline<Configuration>(j, "configuration", base_dir, ConfigurationFrom);
  }
  if (const json* o = OptionalField(j, "overrides")) {
    if (const json* m = OptionalField(*o, "m_rho")) {
      inst.overrides.m_rho = static_cast<int>(AsInt(*m, "overrides.m_rho"));
    }
    if (const json* a = OptionalField(*o, "alpha_minus")) {
      inst.overrides.alpha_minus = AnglesFrom(*a, "overrides.alpha_minus");
    }
  }
  if (const json* b1 = OptionalField(j, "b1")) inst.b1 = AsInt(*b1, "b1");
  if (const json* n = OptionalField(j, "notes")) inst.notes = AsString(*n, "notes");
  ValidateInstance(inst);
  return inst;
}

namespace {

std::string Dir(const std::string& path) {
  return std::filesystem::path(path).parent_path().string();
}

template <typename T>
T LoadWith(const std::string& path, T (*from_json)(std::string_view)) {
  const std::string text = ReadFile(path);
  return Nested(path + ":", [&] { return from_json(text); });
}

}  // namespace

Configuration LoadConfiguration(const std::string& path) {
  return LoadWith(path, &ConfigurationFromJson);
}
GluingData LoadGluing(const std::string& path) { return LoadWith(path, &GluingFromJson); }
FixedPointSet LoadFixedPointSet(const std::string& path) {
  return LoadWith(path, &FixedPointSetFromJson);
}
BlockRecord LoadBlock(const std::string& path) { return LoadWith(path, &BlockFromJson); }
HyperPolygon LoadPolygon(const std::string& path) { return LoadWith(path, &PolygonFromJson); }

EtcsInstance LoadInstance(const std::string& path) {
  const std::string text = ReadFile(path);
  return Nested(path + ":", [&] { return InstanceFromJson(text, Dir(path)); });
}

std::string GluingToJson(const GluingData& g) {
  json j;
  j["schema"] = kSchemaTag;
  j["k_plus"] = g.k_plus;
  j["eps_plus"] = g.eps_plus;
  j["k_minus"] = g.k_minus;
  j["eps_minus"] = g.eps_minus;
  j["G"] = json::array({json::array({g.m, g.p}), json::array({g.n, g.q})});
  return j.dump();
}

std::string AnglesToJson(const std::vector<ConfigAngle>& angles) {
  json arr = json::array();
  for (const auto& a : angles) arr.push_back(AngleTo(a));
  return arr.dump();
}

std::vector<ConfigAngle> AnglesFromJson(std::string_view text) {
  return AnglesFrom(Parse(text), "");
}

}  // namespace etcs
