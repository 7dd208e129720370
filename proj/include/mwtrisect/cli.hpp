#pragma once
// Command dispatch for the mwtrisect tool: each subcommand runs against a
// curve configuration file and emits exactly one JSON document on stdout.
// Exit codes: 0 success, 1 domain error, 2 usage or expression-syntax error.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mwtrisect/config.hpp"
#include "mwtrisect/curve.hpp"
#include "mwtrisect/lattice.hpp"
#include "mwtrisect/mumford.hpp"
#include "mwtrisect/parser.hpp"
#include "mwtrisect/planecurves.hpp"

namespace mwtrisect {

struct CommandResult {
  int exit_code = 0;
  std::string out;
};

namespace cli_detail {

using json = nlohmann::ordered_json;

inline json point_json(const MWPoint& p) {
  if (p.infinity) return json{{"infinity", true}};
  return json{{"x", render_rfunc(p.x)}, {"y", render_rfunc(p.y)}};
}

inline json pair_json(const MumfordPair& m) {
  return json{{"u", render_xpoly(m.u)}, {"v", render_xpoly(m.v)}};
}

inline std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

inline Error usage(const std::string& msg) { return Error(errc::usage, msg); }

// Point names accept a '-' or '~' prefix meaning the group-law negation.
inline MWPoint lookup_point(const CurveConfig& cfg, std::string name) {
  const bool neg = !name.empty() && (name[0] == '-' || name[0] == '~');
  if (neg) name.erase(0, 1);
  auto it = cfg.points.find(name);
  if (it == cfg.points.end()) throw usage("no point named '" + name + "' in the config");
  return neg ? negate(cfg.curve, it->second) : it->second;
}

inline const MWVector& lookup_vector(const CurveConfig& cfg, const std::string& name) {
  auto it = cfg.vectors.find(name);
  if (it == cfg.vectors.end()) throw usage("no lattice vector named '" + name + "'");
  return it->second;
}

inline const DivisorData& lookup_divisor(const CurveConfig& cfg, const std::string& name) {
  auto it = cfg.divisors.find(name);
  if (it == cfg.divisors.end()) throw usage("no divisor named '" + name + "'");
  return it->second;
}

inline int exit_code_for(errc code) {
  switch (code) {
    case errc::usage:
    case errc::syntax_error:
    case errc::unknown_symbol:
      return 2;
    default:
      return 1;
  }
}

}  // namespace cli_detail

// args in natural order, without the program name.
inline CommandResult run_command(const std::vector<std::string>& args) {
  using cli_detail::json;

  CLI::App app{"exact arithmetic for trisections of rational elliptic surfaces"};
  app.require_subcommand(1);

  struct {
    std::string curve, points, point, u, v, b0, b1, a, b, cubic, line, scenario, params, expr;
    long long n = 0, r = -1, inter = 0;
    bool has_inter = false, has_r = false;
  } opt;

  auto* c_check = app.add_subcommand("check", "validate a curve configuration");
  c_check->add_option("--curve", opt.curve)->required();

  auto* c_parse = app.add_subcommand("parse", "echo an expression in canonical form");
  c_parse->add_option("--expr", opt.expr)->required();

  auto* c_add = app.add_subcommand("add", "sum named points under the group law");
  c_add->add_option("--curve", opt.curve)->required();
  c_add->add_option("--points", opt.points)->required();

  auto* c_mul = app.add_subcommand("mul", "scalar multiple of a named point");
  c_mul->add_option("--curve", opt.curve)->required();
  c_mul->add_option("--point", opt.point)->required();
  c_mul->add_option("--n", opt.n)->required();

  auto* c_neg = app.add_subcommand("negate", "group-law negation of a named point");
  c_neg->add_option("--curve", opt.curve)->required();
  c_neg->add_option("--point", opt.point)->required();

  auto* c_mum = app.add_subcommand("mumford", "Mumford pair of a sum of named points");
  c_mum->add_option("--curve", opt.curve)->required();
  c_mum->add_option("--points", opt.points)->required();

  auto* c_cls = app.add_subcommand("class-point", "class point of a Mumford pair");
  c_cls->add_option("--curve", opt.curve)->required();
  c_cls->add_option("--u", opt.u)->required();
  c_cls->add_option("--v", opt.v)->required();

  auto* c_tri = app.add_subcommand("trisection", "trisecting cubic through an anchor point");
  c_tri->add_option("--curve", opt.curve)->required();
  c_tri->add_option("--point", opt.point)->required();
  c_tri->add_option("--b0", opt.b0)->required();
  c_tri->add_option("--b1", opt.b1)->required();

  auto* c_hgt = app.add_subcommand("height", "lattice height of a point, or by residue count");
  c_hgt->add_option("--curve", opt.curve)->required();
  c_hgt->add_option("--point", opt.point);
  c_hgt->add_option("--r", opt.r);

  auto* c_pair = app.add_subcommand("pairing", "height pairing of two named vectors");
  c_pair->add_option("--curve", opt.curve)->required();
  c_pair->add_option("--a", opt.a)->required();
  c_pair->add_option("--b", opt.b)->required();
  c_pair->add_option("--intersection", opt.inter);

  auto* c_int = app.add_subcommand("intersection", "geometric intersection number from the pairing");
  c_int->add_option("--curve", opt.curve)->required();
  c_int->add_option("--a", opt.a)->required();
  c_int->add_option("--b", opt.b)->required();

  auto* c_spl = app.add_subcommand("splitting-type", "splitting type of a split divisor");
  c_spl->add_option("--curve", opt.curve)->required();
  c_spl->add_option("--cubic", opt.cubic)->required();
  c_spl->add_option("--line", opt.line)->required();

  auto* c_ver = app.add_subcommand("verify", "run a scenario checklist");
  c_ver->add_option("--curve", opt.curve)->required();
  c_ver->add_option("--scenario", opt.scenario);
  c_ver->add_option("--params", opt.params);

  std::string cmd = args.empty() ? std::string() : args.front();
  {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (const CLI::CallForHelp&) {
      return {0, app.help()};
    } catch (const CLI::ParseError& e) {
      const json out = {{"command", cmd},
                        {"error", {{"code", errc_name(errc::usage)}, {"message", e.what()}}}};
      return {2, out.dump() + "\n"};
    }
  }
  opt.has_inter = c_pair->count("--intersection") > 0;
  opt.has_r = c_hgt->count("--r") > 0;
  cmd = app.get_subcommands().front()->get_name();

  json result;
  try {
    if (c_parse->parsed()) {
      result = render_xpoly(parse_xpoly(opt.expr));
    } else {
      const CurveConfig cfg = load_curve_config(opt.curve);
      if (c_check->parsed()) {
        json names = json::array(), fibers = json::array(), divisors = json::array(),
             vectors = json::array();
        for (const auto& [n, p] : cfg.points) names.push_back(n);
        for (const auto& f : cfg.fibers.fibers) fibers.push_back(f.label);
        for (const auto& [n, dd] : cfg.divisors) divisors.push_back(n);
        for (const auto& [n, v] : cfg.vectors) vectors.push_back(n);
        result = json{{"name", cfg.name},
                      {"field", cfg.field_d == 0 ? std::string("plain")
                                                 : "sqrt(" + std::to_string(cfg.field_d) + ")"},
                      {"points", names},
                      {"fibers", fibers},
                      {"divisors", divisors},
                      {"vectors", vectors}};
      } else if (c_add->parsed()) {
        std::vector<MWPoint> pts;
        for (const auto& name : cli_detail::split_csv(opt.points))
          pts.push_back(cli_detail::lookup_point(cfg, name));
        if (pts.size() < 2) throw cli_detail::usage("add needs at least two points");
        result = cli_detail::point_json(fold_add(cfg.curve, pts));
      } else if (c_mul->parsed()) {
        result = cli_detail::point_json(
            scalar_mul(cfg.curve, opt.n, cli_detail::lookup_point(cfg, opt.point)));
      } else if (c_neg->parsed()) {
        result = cli_detail::point_json(
            negate(cfg.curve, cli_detail::lookup_point(cfg, opt.point)));
      } else if (c_mum->parsed()) {
        SemiReducedDivisor div;
        for (const auto& name : cli_detail::split_csv(opt.points))
          div.entries.push_back({cli_detail::lookup_point(cfg, name), 1});
        result = cli_detail::pair_json(mumford_from_points(div, cfg.curve));
      } else if (c_cls->parsed()) {
        const MumfordPair m{parse_xpoly(opt.u), parse_xpoly(opt.v)};
        result = cli_detail::point_json(class_point(m, cfg.curve));
      } else if (c_tri->parsed()) {
        const MumfordPair m =
            trisection_construct(cfg.curve, cli_detail::lookup_point(cfg, opt.point),
                                 parse_scalar(opt.b0), parse_rfunc(opt.b1));
        result = cli_detail::pair_json(m);
      } else if (c_hgt->parsed()) {
        if (opt.has_r == !opt.point.empty())
          throw cli_detail::usage("height takes exactly one of --point or --r");
        if (opt.has_r) {
          result = rat_str(trisection_height(opt.r));
        } else {
          const MWVector& v = cli_detail::lookup_vector(cfg, opt.point);
          result = rat_str(lattice_pairing(v, v));
        }
      } else if (c_pair->parsed()) {
        if (opt.has_inter) {
          result = rat_str(pairing_from_geometry(cli_detail::lookup_divisor(cfg, opt.a),
                                                 cli_detail::lookup_divisor(cfg, opt.b),
                                                 opt.inter, cfg.fibers));
        } else {
          result = rat_str(lattice_pairing(cli_detail::lookup_vector(cfg, opt.a),
                                           cli_detail::lookup_vector(cfg, opt.b)));
        }
      } else if (c_int->parsed()) {
        const Rat p = lattice_pairing(cli_detail::lookup_vector(cfg, opt.a),
                                      cli_detail::lookup_vector(cfg, opt.b));
        result = rat_str(intersection_from_pairing(cli_detail::lookup_divisor(cfg, opt.a),
                                                   cli_detail::lookup_divisor(cfg, opt.b), p,
                                                   cfg.fibers));
      } else if (c_spl->parsed()) {
        const SplitType st =
            splitting_type(cli_detail::lookup_vector(cfg, opt.cubic),
                           cli_detail::lookup_vector(cfg, opt.line),
                           cli_detail::lookup_divisor(cfg, opt.cubic),
                           cli_detail::lookup_divisor(cfg, opt.line), cfg.fibers);
        result = json::array({st.m1, st.m2});
      } else if (c_ver->parsed()) {
        const std::string scenario = opt.scenario.empty() ? cfg.scenario : opt.scenario;
        if (scenario.empty())
          throw cli_detail::usage("no scenario named on the command line or in the config");
        std::vector<Rat> params;
        if (!opt.params.empty())
          for (const auto& p : cli_detail::split_csv(opt.params)) params.push_back(parse_rat(p));
        const StructuredReport rep = verify_scenario(scenario, params);
        json items = json::array();
        for (const auto& it : rep.items) {
          json item = {{"name", it.name}, {"passed", it.passed}};
          if (!it.detail.empty()) item["detail"] = it.detail;
          items.push_back(std::move(item));
        }
        result = json{{"scenario", rep.scenario}, {"items", items}, {"all_passed", rep.all_passed()}};
      }
    }
  } catch (const Error& e) {
    json err = {{"code", errc_name(e.code)}, {"message", e.what()}};
    if (e.offset != Error::npos) err["offset"] = e.offset;
    const json out = {{"command", cmd}, {"error", err}};
    return {cli_detail::exit_code_for(e.code), out.dump() + "\n"};
  }

  const json out = {{"command", cmd}, {"result", result}};
  return {0, out.dump() + "\n"};
}

}  // namespace mwtrisect
