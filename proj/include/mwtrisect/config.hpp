#pragma once
// Curve configuration files: JSON documents carrying a Weierstrass curve over
// Q(sqrt(d))(t), named sections, the reducible-fiber blocks with contact
// vectors, Mordell-Weil coordinates, and divisor intersection data.  All
// polynomial and rational values are strings in the expression grammar.

#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mwtrisect/curve.hpp"
#include "mwtrisect/lattice.hpp"
#include "mwtrisect/parser.hpp"
#include "mwtrisect/rfunc.hpp"

namespace mwtrisect {

struct CurveConfig {
  std::string name;
  std::string scenario;   // empty when the file names no scenario
  long long field_d = 0;  // 0 for plain Q
  WCurve curve;
  std::map<std::string, MWPoint> points;
  FiberConfig fibers;
  Mat gram;
  std::map<std::string, MWVector> vectors;
  std::map<std::string, DivisorData> divisors;
};

namespace config_detail {

using json = nlohmann::ordered_json;

inline Error bad(const std::string& msg) { return Error(errc::invalid_config, msg); }

inline const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw bad(std::string("config is missing '") + key + "'");
  return *it;
}

inline std::string str(const json& j, const char* what) {
  if (!j.is_string()) throw bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

// Every scalar loaded from a config must live in the declared field.
inline void check_field(const QuadScalar& k, long long d, const std::string& what) {
  if (k.radicand() != 0 && k.radicand() != d)
    throw bad(what + " lies outside the declared base field");
}

inline void check_field(const RFunc& r, long long d, const std::string& what) {
  for (const auto& k : r.num.c) check_field(k, d, what);
  for (const auto& k : r.den.c) check_field(k, d, what);
}

inline RFunc load_rfunc(const json& j, long long d, const std::string& what) {
  const RFunc r = parse_rfunc(str(j, what.c_str()));
  check_field(r, d, what);
  return r;
}

inline Rat load_rat(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  return parse_rat(str(j, what.c_str()));
}

}  // namespace config_detail

inline CurveConfig load_curve_config(const std::string& path) {
  using config_detail::bad;
  using config_detail::check_field;
  using config_detail::field;
  using config_detail::json;
  using config_detail::load_rat;
  using config_detail::load_rfunc;
  using config_detail::str;

  std::ifstream in(path);
  if (!in) throw bad("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw bad("config file '" + path + "' is not valid JSON: " + e.what());
  }

  long long d = 0;
  {
    const json& bf = field(j, "base_field");
    const std::string kind = str(field(bf, "kind"), "base_field.kind");
    if (kind == "sqrt") {
      const json& dj = field(bf, "d");
      if (!dj.is_number_integer()) throw bad("base_field.d must be an integer");
      d = dj.get<long long>();
      if (d <= 0) throw bad("base_field.d must be a positive integer");
      // normalize through sqrt_of so d is validated and squarefree-reduced
      d = QuadScalar::sqrt_of(d).radicand();
      if (d == 0) throw bad("base_field.d must not be a perfect square; use kind \"plain\"");
    } else if (kind != "plain") {
      throw bad("base_field.kind must be \"plain\" or \"sqrt\"");
    }
  }

  // the Weierstrass right side: a monic cubic in x
  const XPoly f = parse_xpoly(str(field(j, "f"), "f"));
  if (f.degree() != 3 || !(f.leading() == RFunc(1)))
    throw bad("f must be a monic cubic in x");
  for (int k = 0; k < 3; ++k) check_field(f.coeff(k), d, "a coefficient of f");
  WCurve curve(f.coeff(2), f.coeff(1), f.coeff(0));

  CurveConfig cfg{str(field(j, "name"), "name"),
                  j.contains("scenario") ? str(j["scenario"], "scenario") : std::string(),
                  d,
                  curve,
                  {},
                  {},
                  {},
                  {},
                  {}};

  if (j.contains("chi")) {
    if (!j["chi"].is_number_integer()) throw bad("chi must be an integer");
    cfg.fibers.chi = j["chi"].get<long long>();
  }

  if (j.contains("points")) {
    for (const auto& [name, pj] : j["points"].items()) {
      const MWPoint p = MWPoint::affine(load_rfunc(field(pj, "x"), d, "points." + name + ".x"),
                                        load_rfunc(field(pj, "y"), d, "points." + name + ".y"));
      if (!on_curve(cfg.curve, p))
        throw Error(errc::not_on_curve, "point " + name + " does not satisfy the curve equation");
      cfg.points.emplace(name, p);
    }
  }

  // fibers carry their block and the per-divisor contact columns
  std::map<std::string, std::vector<std::vector<long long>>> contact_rows;
  if (j.contains("fibers")) {
    for (const json& fj : j["fibers"]) {
      Fiber fib;
      fib.label = str(field(fj, "label"), "fiber label");
      for (const json& row : field(fj, "a")) {
        std::vector<Rat> r;
        for (const json& e : row) r.push_back(load_rat(e, "fiber block entry"));
        fib.block.push_back(std::move(r));
      }
      const std::size_t k = fib.block.size();
      if (fj.contains("contacts")) {
        for (const auto& [dname, cj] : fj["contacts"].items()) {
          std::vector<long long> col;
          for (const json& e : cj) {
            if (!e.is_number_integer()) throw bad("contact entries must be integers");
            col.push_back(e.get<long long>());
          }
          if (col.size() != k)
            throw bad("contact vector of " + dname + " at fiber " + fib.label +
                      " does not match the block size");
          contact_rows[dname].resize(cfg.fibers.fibers.size());
          contact_rows[dname].push_back(std::move(col));
        }
      }
      for (auto& [dname, rows] : contact_rows)
        if (rows.size() < cfg.fibers.fibers.size() + 1) rows.resize(cfg.fibers.fibers.size() + 1);
      cfg.fibers.fibers.push_back(std::move(fib));
    }
    validate_fiber_config(cfg.fibers);
  }

  if (j.contains("mw_basis")) {
    const json& mb = j["mw_basis"];
    for (const json& row : field(mb, "gram")) {
      std::vector<Rat> r;
      for (const json& e : row) r.push_back(load_rat(e, "gram entry"));
      cfg.gram.push_back(std::move(r));
    }
    validate_positive_definite(cfg.gram, "mw_basis.gram");
    for (const auto& [name, vj] : field(mb, "vectors").items()) {
      MWVector v;
      v.gram = cfg.gram;
      const json& coords = vj.is_object() ? field(vj, "coords") : vj;
      if (vj.is_object() && vj.contains("torsion")) v.torsion_tag = str(vj["torsion"], "torsion");
      for (const json& e : coords) v.coords.push_back(load_rat(e, "coordinate of " + name));
      if (v.coords.size() != cfg.gram.size())
        throw bad("coordinate vector of " + name + " does not match the gram matrix");
      cfg.vectors.emplace(name, std::move(v));
    }
  }

  if (j.contains("divisors")) {
    for (const auto& [name, dj] : j["divisors"].items()) {
      DivisorData dd;
      const json& deg = field(dj, "d");
      if (!deg.is_number_integer()) throw bad("divisors." + name + ".d must be an integer");
      dd.d = deg.get<long long>();
      const json& ddo = field(dj, "d_dot_o");
      if (!ddo.is_number_integer()) throw bad("divisors." + name + ".d_dot_o must be an integer");
      dd.d_dot_o = ddo.get<long long>();
      if (dj.contains("self_int")) {
        if (!dj["self_int"].is_number_integer())
          throw bad("divisors." + name + ".self_int must be an integer");
        dd.self_int = dj["self_int"].get<long long>();
      }
      auto it = contact_rows.find(name);
      if (it != contact_rows.end()) dd.contacts = it->second;
      dd.contacts.resize(cfg.fibers.fibers.size());
      // absent contact vectors are zero
      for (std::size_t v = 0; v < dd.contacts.size(); ++v)
        if (dd.contacts[v].empty())
          dd.contacts[v].assign(cfg.fibers.fibers[v].block.size(), 0);
      require_contact_shape(dd, cfg.fibers, name.c_str());
      cfg.divisors.emplace(name, std::move(dd));
    }
  }

  return cfg;
}

}  // namespace mwtrisect
