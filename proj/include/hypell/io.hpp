#pragma once

// Point files and result documents. Parsing and document construction use
// nlohmann::json; the writer is our own so that every number is printed with
// 17 significant digits and the bytes are stable across platforms.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hypell/certificate.hpp"
#include "hypell/conics.hpp"
#include "hypell/enclosing.hpp"
#include "hypell/errors.hpp"
#include "hypell/hull.hpp"
#include "hypell/verify.hpp"

namespace hypell {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::invalid_parameter, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// {"points": [[u, v], ...]} in Klein disk coordinates.
inline PointSet parse_point_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::invalid_parameter, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
    throw Error(Errc::invalid_parameter, "expected an object with a \"points\" array");
  std::vector<Vec2> uv;
  for (const auto& p : doc["points"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      throw Error(Errc::invalid_parameter, "each point must be a pair of numbers [u, v]");
    uv.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  return PointSet::from_klein(uv);
}

inline std::string point_file_text(const std::vector<Vec2>& uv) {
  std::string s = "{\"points\": [";
  char buf[64];
  for (std::size_t i = 0; i < uv.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s[%.17g, %.17g]", i ? ", " : "", uv[i].x(), uv[i].y());
    s += buf;
  }
  return s + "]}\n";
}

// ------------------------------------------------------------------ writer

namespace detail {

inline void write_number(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

inline void write_json(std::string& out, const json& j, int indent, int depth) {
  const std::string pad(std::size_t(indent) * (depth + 1), ' '), end(std::size_t(indent) * depth, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(k).dump() + ": ";
        write_json(out, v, indent, depth + 1);
      }
      out += "\n" + end + "}";
      return;
    }
    case json::value_t::array: {
      // Short numeric arrays stay on one line.
      bool flat = j.size() <= 4;
      for (const auto& v : j) flat = flat && v.is_primitive();
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += flat ? "[" : "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += flat ? ", " : ",\n";
        first = false;
        if (!flat) out += pad;
        write_json(out, v, indent, depth + 1);
      }
      out += flat ? "]" : "\n" + end + "]";
      return;
    }
    case json::value_t::number_float: write_number(out, j.get<double>()); return;
    default: out += j.dump(); return;
  }
}

}  // namespace detail

/// Deterministic serialization with %.17g numbers.
inline std::string to_text(const json& j, int indent = 2) {
  std::string out;
  detail::write_json(out, j, indent, 0);
  return out + "\n";
}

// ------------------------------------------------------------------ records

inline json vec_json(const MinkVector& v) { return json::array({v[0], v[1], v[2]}); }

inline json ellipse_json(const EllipseMatrix& e) {
  json m = json::array();
  for (int i = 0; i < 3; ++i) m.push_back(json::array({e.matrix()(i, 0), e.matrix()(i, 1), e.matrix()(i, 2)}));
  const auto [a, b] = e.semiaxes();
  const Vec2 k = klein_project(e.center());
  json j;
  j["matrix"] = m;
  j["center"] = vec_json(e.center());
  j["center_klein"] = json::array({k.x(), k.y()});
  j["eigenvalues"] = json::array({1.0, e.nu1(), e.nu2()});
  j["semiaxes"] = json::array({a, b});
  j["major_axis"] = vec_json(e.major_axis());
  j["minor_axis"] = vec_json(e.minor_axis());
  j["area"] = area_gaps(e.gap1(), e.gap2());
  return j;
}

inline json certificate_json(const UniquenessCertificate& c) {
  json j;
  j["rho"] = c.rho;
  j["S"] = c.S;
  j["R"] = c.R;
  j["nu1"] = c.nu1;
  j["nu2"] = c.nu2;
  j["H"] = c.H_value;
  j["verdict"] = to_string(c.verdict);
  return j;
}

inline json suite_json(const SuiteReport& r) {
  json j;
  j["suite"] = r.suite;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["violations"] = r.violations();
  json inv = json::array();
  for (const auto& i : r.invariants) {
    json e;
    e["name"] = i.name;
    e["checked"] = i.checked;
    e["violations"] = i.violations;
    e["worst_margin"] = i.worst_margin;
    inv.push_back(e);
  }
  j["invariants"] = inv;
  json vals;
  for (const auto& [k, v] : r.values) vals[k] = v;
  j["values"] = vals.is_null() ? json::object() : vals;
  return j;
}

/// Header shared by all result documents.
inline json result_document(const std::string& command, const std::string& input_bytes) {
  json j;
  j["tool"] = "hypell";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["input_digest"] = fnv1a_hex(input_bytes);
  return j;
}

}  // namespace hypell
