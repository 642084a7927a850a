#pragma once

#include "pbw/io.hpp"
#include "pbw/pbw.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace pbwctl {

enum Exit : int { kOk = 0, kNotPbw = 1, kInvalid = 2, kInternal = 3 };

namespace detail {

inline std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw pbw::ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string input;
  std::string params;
  std::string output;
  std::string format = "json";
  bool reduce = false;
  bool prune = false;
  int n = 0;
};

struct Loaded {
  pbw::Algebra algebra;
  std::optional<pbw::NumericTable> params;
};

inline Loaded load(const Options& o, bool need_params) {
  if (o.input.empty()) throw pbw::ValidationError("--input is required");
  auto parsed = pbw::io::parse_input(slurp(o.input));
  Loaded l{parsed.algebra, parsed.params};
  if (!o.params.empty()) l.params = pbw::io::parse_params(slurp(o.params), l.algebra);
  if (need_params && !l.params) throw pbw::ValidationError("--params is required (or embed \"params\" in the input)");
  return l;
}

inline void text_constraints(std::ostream& os, const pbw::ConstraintSystem& sys) {
  for (const pbw::Constraint& c : sys.constraints()) {
    os << pbw::to_string(c.label.origin) << " " << pbw::to_string(c.label.triple);
    if (c.label.r) os << " r=" << *c.label.r;
    if (c.label.aux) os << " m=" << *c.label.aux;
    os << ": " << pbw::to_string(c.polynomial) << " = 0\n";
  }
}

inline void text_verdict(std::ostream& os, const pbw::Verdict& v) {
  os << (v.pbw ? "PBW" : "not PBW") << "\n";
  for (const pbw::Failure& f : v.failures) {
    const pbw::Constraint& c = f.constraint;
    os << pbw::to_string(c.label.origin) << " " << pbw::to_string(c.label.triple);
    if (c.label.r) os << " r=" << *c.label.r;
    if (c.label.aux) os << " m=" << *c.label.aux;
    os << ": " << pbw::to_string(c.polynomial) << " = " << pbw::to_string(f.value) << "\n";
  }
}

inline void text_verdict(std::ostream& os, const pbw::oracle::OracleVerdict& v) {
  os << (v.pbw ? "PBW" : "not PBW") << "\n";
  for (const auto& f : v.failures)
    os << pbw::to_string(f.triple) << ": " << pbw::oracle::to_string(f.left) << " != " << pbw::oracle::to_string(f.right)
       << "\n";
}

// formats each subcommand can produce besides json
inline bool format_supported(const std::string& cmd, const std::string& format) {
  if (format == "json") return true;
  if (format == "dot") return cmd == "graph";
  if (format == "csv") return cmd == "survey";
  return cmd == "constraints" || cmd == "reduce" || cmd == "check" || cmd == "oracle";
}

}  // namespace detail

/// Runs one command line; returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using pbw::io::to_json;
  CLI::App app{"Decide and classify filtered PBW deformations of a quadratic monomial algebra"};
  app.require_subcommand(1);
  app.fallthrough();

  detail::Options o;
  app.add_option("--input", o.input, "algebra JSON (\"-\" for stdin)");
  app.add_option("--params", o.params, "parameter table JSON");
  app.add_option("--output", o.output, "write the result here instead of stdout");
  app.add_option("--format", o.format, "json|csv|dot|text")->check(CLI::IsMember({"json", "csv", "dot", "text"}));

  auto* graph = app.add_subcommand("graph", "relation graph and its overlap basis");
  auto* constraints = app.add_subcommand("constraints", "generate the constraint system");
  constraints->add_flag("--reduce", o.reduce, "eliminate condition I first");
  auto* check = app.add_subcommand("check", "check a concrete parameter table");
  check->add_flag("--prune", o.prune, "skip equations implied by graph shortcuts");
  auto* reduce = app.add_subcommand("reduce", "condition-I elimination: rules, residual, free parameters");
  auto* shortcuts = app.add_subcommand("shortcuts", "which checks the graph makes redundant");
  auto* deform = app.add_subcommand("deform", "construct a nontrivial deformation");
  auto* oracle = app.add_subcommand("oracle", "independent verdict by overlap resolution");
  auto* survey = app.add_subcommand("survey", "statistics over every relation set on n generators");
  survey->add_option("--n", o.n, "number of generators (1..4)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInvalid;
  }

  std::ostringstream result;
  int code = kOk;
  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (!detail::format_supported(cmd, o.format))
      throw pbw::ValidationError("--format " + o.format + " is not available for " + cmd);
    if (graph->parsed()) {
      auto l = detail::load(o, false);
      if (o.format == "dot") {
        result << pbw::export_dot(l.algebra);
      } else {
        auto doc = to_json(l.algebra);
        nlohmann::json q = nlohmann::json::array();
        for (const auto& t : pbw::overlap_basis(l.algebra)) q.push_back(to_json(t));
        nlohmann::json comps = nlohmann::json::array();
        for (const auto& c : pbw::components(l.algebra)) {
          nlohmann::json arrows = nlohmann::json::array();
          for (const auto& r : c) arrows.push_back({r.i, r.j});
          comps.push_back(arrows);
        }
        doc["overlaps"] = q;
        doc["components"] = comps;
        result << doc.dump(2) << "\n";
      }
    } else if (constraints->parsed() || reduce->parsed()) {
      auto l = detail::load(o, false);
      auto sys = pbw::generate_system(l.algebra);
      if (reduce->parsed() || o.reduce) {
        auto red = pbw::reduce_by_I(sys);
        if (o.format == "text")
          detail::text_constraints(result, red.residual);
        else
          result << to_json(red).dump(2) << "\n";
      } else if (o.format == "text") {
        detail::text_constraints(result, sys);
      } else {
        result << to_json(sys).dump(2) << "\n";
      }
    } else if (check->parsed()) {
      auto l = detail::load(o, true);
      auto v = pbw::check(*l.params, o.prune ? pbw::Pruning::shortcuts : pbw::Pruning::off);
      if (o.format == "text")
        detail::text_verdict(result, v);
      else
        result << to_json(v).dump(2) << "\n";
      code = v.pbw ? kOk : kNotPbw;
    } else if (oracle->parsed()) {
      auto l = detail::load(o, true);
      auto v = pbw::oracle::oracle_verdict(*l.params);
      if (o.format == "text")
        detail::text_verdict(result, v);
      else
        result << to_json(v).dump(2) << "\n";
      code = v.pbw ? kOk : kNotPbw;
    } else if (shortcuts->parsed()) {
      auto l = detail::load(o, false);
      result << to_json(pbw::shortcut_report(l.algebra)).dump(2) << "\n";
    } else if (deform->parsed()) {
      auto l = detail::load(o, false);
      result << to_json(pbw::nontrivial_deformation(l.algebra)).dump(2) << "\n";
    } else if (survey->parsed()) {
      auto rows = pbw::survey(o.n);
      if (o.format == "csv") {
        pbw::write_csv(result, rows);
      } else {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& r : rows) {
          nlohmann::json rel = nlohmann::json::array();
          for (const auto& a : r.relations) rel.push_back({a.i, a.j});
          nlohmann::json row = {{"mask", r.mask},
                                {"relations", rel},
                                {"R", r.relations.size()},
                                {"Q", r.overlaps},
                                {"counts",
                                 {{"I.a", r.counts[0]},
                                  {"I.b", r.counts[1]},
                                  {"I.c", r.counts[2]},
                                  {"II", r.counts[3]},
                                  {"III", r.counts[4]}}},
                                {"free", r.free_parameters}};
          row["case"] = r.branch ? nlohmann::json(*r.branch) : nlohmann::json(nullptr);
          list.push_back(row);
        }
        result << nlohmann::json{{"schema_version", pbw::io::schema_version}, {"n", o.n}, {"rows", list}}.dump(2)
               << "\n";
      }
    }
  } catch (const pbw::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }

  if (o.output.empty()) {
    out << result.str();
  } else {
    std::ofstream f(o.output);
    if (!f) {
      err << "error: cannot write " << o.output << "\n";
      return kInvalid;
    }
    f << result.str();
  }
  return code;
}

}  // namespace pbwctl
