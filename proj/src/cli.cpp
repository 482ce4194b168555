#include "monolat/cli.hpp"

#include <iomanip>
#include <optional>

#include "CLI11.hpp"
#include "monolat/json_io.hpp"
#include "monolat/oracle.hpp"
#include "monolat/service.hpp"
#include "monolat/text.hpp"
#include "monolat/truth_table.hpp"
#include "monolat/walker.hpp"

namespace monolat {

namespace {

struct options {
  int p = 0;
  std::string format = "text";
  std::uint64_t seed = 0;
  bool long_mode = false;

  std::string function_text;
  std::string signs;
  std::string table;
  std::string dir = "up";
  int p_min = 2;
  int p_max = 8;
  std::size_t traces = 100;
  unsigned threads = 0;
  int max_p = 5;
  std::string host = "127.0.0.1";
  int port = 8080;
};

std::string quoted(const std::string& s) { return '"' + s + '"'; }

parsed_function read_function(const options& o) {
  if (o.p < 1) throw error(error_code::invalid_argument, "--p is required");
  auto parsed = parse_function(o.function_text, o.p);
  if (!o.signs.empty()) {
    auto signs = sign_structure::parse(o.signs, o.p);
    if (!parsed.signs.all_positive() && !(parsed.signs == signs))
      throw error(error_code::mixed_sign, "--signs disagrees with the function text");
    parsed.signs = std::move(signs);
  }
  return parsed;
}

void print_neighbors(const options& o, direction d, std::ostream& out) {
  const auto in = read_function(o);
  const auto results = immediate_neighbors(in.function, d);
  if (o.format == "json") {
    out << json_io::neighbors_json(in.function, in.signs, d, results).dump() << '\n';
  } else if (o.format == "csv") {
    out << "neighbor,rule,true_set_delta\n";
    for (const auto& r : results)
      out << quoted(render_function(r.neighbor, in.signs, text_style::sets)) << ','
          << to_string(r.produced_by) << ',' << rule_delta(r) << '\n';
  } else {
    out << "function: " << render_function(in.function, in.signs, text_style::sets) << "  ("
        << render_function(in.function, in.signs, text_style::expr) << ")\n";
    out << (d == direction::parent ? "parents" : "children") << ": " << results.size() << '\n';
    for (const auto& r : results)
      out << "  " << to_string(r.produced_by) << ' ' << std::showpos << rule_delta(r)
          << std::noshowpos << "  " << render_function(r.neighbor, in.signs, text_style::sets)
          << "  (" << render_function(r.neighbor, in.signs, text_style::expr) << ")\n";
  }
}

int validate_table(const options& o, std::ostream& out) {
  if (o.p < 1) throw error(error_code::invalid_argument, "--p is required");
  const auto t = truth_table::from_string(o.table, o.p);
  const auto report = check_monotone_nondegenerate(t);
  if (o.format == "json") {
    json_io::json vars = json_io::json::array();
    for (const auto& v : report.variables) {
      json_io::json row = {{"variable", v.variable}, {"positive", v.positive}, {"essential", v.essential}};
      if (v.witness_low) {
        row["witness"] = {state_text(*v.witness_low, o.p), state_text(*v.witness_high, o.p)};
      }
      vars.push_back(std::move(row));
    }
    json_io::json body = {{"pass", report.pass}, {"variables", std::move(vars)}};
    if (auto bad = report.violated_property()) body["violated"] = *bad;
    body["summary"] = report.summary();
    if (report.pass) body["function"] = json_io::function_json(from_truth_table(t));
    out << body.dump() << '\n';
  } else {
    for (const auto& v : report.variables)
      out << 'x' << v.variable << ": " << (v.positive ? "positive" : "not positive") << ", "
          << (v.essential ? "essential" : "inessential") << '\n';
    out << (report.pass ? "valid: " : "invalid: ") << report.summary() << '\n';
    if (report.pass) out << "function: " << from_truth_table(t).to_string() << '\n';
  }
  return report.pass ? exit_ok : exit_validation;
}

int validate(const options& o, std::ostream& out) {
  if (!o.table.empty()) return validate_table(o, out);
  const auto in = read_function(o);
  if (o.format == "json") {
    out << json_io::describe_function(in.function, in.signs).dump() << '\n';
  } else {
    out << "valid\n"
        << "sets: " << render_function(in.function, in.signs, text_style::sets) << '\n'
        << "expr: " << render_function(in.function, in.signs, text_style::expr) << '\n'
        << "signs: " << in.signs.to_string() << '\n';
  }
  return exit_ok;
}

void true_count(const options& o, std::ostream& out) {
  const auto in = read_function(o);
  const auto n = true_set_size(in.function);
  if (o.format == "json")
    out << json_io::json{{"function", json_io::function_json(in.function)}, {"trueSetSize", n}}.dump()
        << '\n';
  else if (o.format == "csv")
    out << "true_set_size\n" << n << '\n';
  else
    out << n << '\n';
}

void walk(const options& o, std::ostream& out) {
  if (o.p < 1) throw error(error_code::invalid_argument, "--p is required");
  const auto trace = random_walk(o.p, parse_walk_direction(o.dir), o.seed);
  if (o.format == "json") {
    out << json_io::trace_json(trace).dump() << '\n';
    return;
  }
  if (o.format == "csv") out << "step,from,to,rule,true_set_delta,gen_r1,gen_r2,gen_r3\n";
  std::size_t i = 0;
  for (const auto& s : trace.steps) {
    ++i;
    if (o.format == "csv")
      out << i << ',' << quoted(s.from.to_string()) << ',' << quoted(s.chosen.neighbor.to_string())
          << ',' << to_string(s.chosen.produced_by) << ',' << rule_delta(s.chosen) << ','
          << s.generated.r1 << ',' << s.generated.r2 << ',' << s.generated.r3 << '\n';
    else
      out << std::setw(5) << i << "  " << to_string(s.chosen.produced_by) << "  "
          << s.chosen.neighbor.to_string() << '\n';
  }
  if (o.format != "csv")
    out << "length " << trace.length() << ", generated R1=" << trace.cumulative.r1
        << " R2=" << trace.cumulative.r2 << " R3=" << trace.cumulative.r3 << '\n';
}

void experiment(const options& o, std::ostream& out) {
  const auto stats = run_experiment(o.p_min, o.p_max, o.traces, parse_walk_direction(o.dir),
                                    o.seed, o.threads);
  if (o.format == "json") {
    auto list = json_io::json::array();
    for (const auto& s : stats) list.push_back(json_io::stats_json(s));
    out << list.dump() << '\n';
  } else {
    write_csv(out, stats);
  }
}

void count(const options& o, std::ostream& out) {
  const auto rows = oracle::count_table(o.max_p, oracle::dedekind_numbers(), o.long_mode);
  if (o.format == "json")
    out << json_io::counts_json(rows).dump() << '\n';
  else
    oracle::write_csv(out, rows);
}

int serve(const options& o, std::ostream& out) {
  http_server server({.long_mode = o.long_mode});
  const int port = server.bind(o.host, o.port);
  out << "listening on http://" << o.host << ':' << port << std::endl;
  server.run();
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  options o;
  CLI::App app{"Navigate the lattice of non-degenerate monotone Boolean functions", "monolat"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--p", o.p, "number of variables");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", o.seed, "random seed (walk, experiment)");
  app.add_flag("--long", o.long_mode, "enable p=6 enumeration for counts");

  auto add_function_command = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("function", o.function_text, "e.g. '{1,2,3},{3,4}' or 'x1 | x2 & !x3'")->required();
    cmd->add_option("--signs", o.signs, "per-variable signs, e.g. ++-");
    return cmd;
  };
  auto* parents = add_function_command("parents", "immediate parents with rule tags");
  auto* children = add_function_command("children", "immediate children with rule tags");
  auto* truecount = add_function_command("truecount", "size of the True set");

  auto* validate_cmd = app.add_subcommand("validate", "validate a function text or a truth table");
  validate_cmd->add_option("function", o.function_text, "function text");
  validate_cmd->add_option("--signs", o.signs, "per-variable signs");
  validate_cmd->add_option("--table", o.table, "2^p characters of 0/1, state k at position k");

  auto* walk_cmd = app.add_subcommand("walk", "one seeded random walk");
  walk_cmd->add_option("--dir", o.dir, "up or down");

  auto* experiment_cmd = app.add_subcommand("experiment", "random-walk statistics over a range of p");
  experiment_cmd->add_option("--pmin", o.p_min, "smallest p");
  experiment_cmd->add_option("--pmax", o.p_max, "largest p");
  experiment_cmd->add_option("--traces", o.traces, "walks per p");
  experiment_cmd->add_option("--dir", o.dir, "up or down");
  experiment_cmd->add_option("--threads", o.threads, "worker threads, 0 = all cores");

  auto* count_cmd = app.add_subcommand("count", "N(p) by recurrence and enumeration");
  count_cmd->add_option("--maxp", o.max_p, "largest p");

  auto* serve_cmd = app.add_subcommand("serve", "serve the JSON API");
  serve_cmd->add_option("--host", o.host, "bind address");
  serve_cmd->add_option("--port", o.port, "port, 0 picks a free one");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (parents->parsed()) print_neighbors(o, direction::parent, out);
    else if (children->parsed()) print_neighbors(o, direction::child, out);
    else if (truecount->parsed()) true_count(o, out);
    else if (validate_cmd->parsed()) return validate(o, out);
    else if (walk_cmd->parsed()) walk(o, out);
    else if (experiment_cmd->parsed()) experiment(o, out);
    else if (count_cmd->parsed()) count(o, out);
    else if (serve_cmd->parsed()) return serve(o, out);
    return exit_ok;
  } catch (const error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    switch (classify(e.code())) {
      case error_class::usage: return exit_usage;
      case error_class::validation: return exit_validation;
      case error_class::capability: return exit_capability;
    }
    return exit_usage;
  }
}

}  // namespace monolat
