#include "pafdp/cli.hpp"

#include "pafdp/dp_solver.hpp"
#include "pafdp/errors.hpp"
#include "pafdp/grid_generator.hpp"
#include "pafdp/oracle.hpp"
#include "pafdp/paf_format.hpp"
#include "pafdp/preprocess.hpp"
#include "pafdp/td_format.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <sys/resource.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <new>
#include <sstream>

namespace pafdp {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string input;
  std::string semantics = "complete";
  std::string mode = "rational";
  std::optional<std::string> set;
  std::optional<std::string> acc;
  std::string td_file;
  std::string heuristic = "min-fill";
  std::string order;
  std::optional<std::uint64_t> seed;
  std::string preprocess;
  std::string merge = "eager";
  bool eager_acceptance = false;
  bool trace = false;
  double timeout = 300;
  std::size_t memory_mb = 8192;
  std::size_t cap = kDefaultUncertainCap;
  bool nice = false;
  bool raw = false;
  std::string grid;
  std::uint64_t instance = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Semantics semantics_of(const std::string& text) {
  auto sigma = parse_semantics(text);
  if (!sigma) throw CLI::ValidationError("--semantics", "unknown semantics '" + text + "'");
  return *sigma;
}

Heuristic heuristic_of(const RunConfig& cfg, const AF& af) {
  Heuristic h;
  if (cfg.heuristic == "min-fill") {
    h = Heuristic::min_fill();
  } else if (cfg.heuristic == "min-degree") {
    h = Heuristic::min_degree();
  } else if (cfg.heuristic == "given-order") {
    std::vector<ArgIndex> order;
    for (const auto& name : split_list(cfg.order)) order.push_back(af.index_of(name));
    h = Heuristic::given(std::move(order));
  } else {
    throw CLI::ValidationError("--heuristic", "unknown heuristic '" + cfg.heuristic + "'");
  }
  h.seed = cfg.seed;
  return h;
}

json base_record(const std::string& command) {
  json j;
  j["command"] = command;
  j["answer"] = nullptr;
  j["answerDecimal"] = nullptr;
  j["mode"] = nullptr;
  j["semantics"] = nullptr;
  j["width"] = nullptr;
  j["nodes"] = nullptr;
  j["wallMillis"] = 0;
  return j;
}

void set_answer(json& j, const Probability& p) {
  if (const auto* r = std::get_if<Rational>(&p)) {
    j["answer"] = fraction_string(*r);
    j["answerDecimal"] = significant_decimal(*r, 15);
  } else {
    j["answer"] = significant_decimal(std::get<double>(p), 17);
    j["answerDecimal"] = significant_decimal(std::get<double>(p), 15);
  }
}

ArgSet query_set(const RunConfig& cfg, const PafDocument& doc) {
  const auto& af = doc.paf.framework();
  if (cfg.set) return af.make_set(split_list(*cfg.set));
  if (doc.query_set) return af.make_set(*doc.query_set);
  throw CLI::ValidationError("--set", "no query set given (flag or 'set' line)");
}

std::optional<ArgIndex> query_argument(const RunConfig& cfg, const PafDocument& doc) {
  const auto& af = doc.paf.framework();
  if (cfg.acc) return af.index_of(*cfg.acc);
  // the file's query line is used only when no set is asked for at all
  if (!cfg.set && !doc.query_set && doc.query_argument) return af.index_of(*doc.query_argument);
  return std::nullopt;
}

std::vector<std::string> names(const AF& af, const ArgSet& set) { return af.names_of(set); }

NiceTreeDecomposition load_or_build_td(const RunConfig& cfg, const Paf& original,
                                       const Paf& working) {
  const auto& af = working.framework();
  if (cfg.td_file.empty()) return make_nice(decompose(af, heuristic_of(cfg, af)), af);
  auto parsed = parse_td(read_file(cfg.td_file), original.framework());
  const bool reduced = working.framework().num_arguments() != original.framework().num_arguments();
  if (auto* nice = std::get_if<NiceTreeDecomposition>(&parsed)) {
    if (!reduced) {
      if (auto v = validate(*nice, af); !v.empty()) {
        throw InputError("invalid nice tree decomposition: " + v.front().describe());
      }
      return *nice;
    }
    parsed = nice->plain();
  }
  auto plain = std::get<TreeDecomposition>(parsed);
  if (reduced) plain = project(plain, original.framework(), af);
  return make_nice(plain, af);
}

json cmd_solve(const RunConfig& cfg) {
  json j = base_record("solve");
  const auto doc = parse_paf(read_file(cfg.input));
  const Semantics sigma = semantics_of(cfg.semantics);
  if (cfg.mode != "rational" && cfg.mode != "float") {
    throw CLI::ValidationError("--mode", "expected rational or float");
  }
  const ArgSet S = query_set(cfg, doc);

  SolveOptions options;
  options.sigma = sigma;
  options.mode = cfg.mode == "float" ? ArithmeticMode::Float : ArithmeticMode::Rational;
  options.merge = cfg.merge == "forget-only" ? MergePolicy::ForgetOnly : MergePolicy::Eager;
  options.eager_acceptance = cfg.eager_acceptance;
  options.trace = cfg.trace;
  options.deadline = Deadline(std::chrono::duration<double>(cfg.timeout));

  j["mode"] = cfg.mode;
  j["semantics"] = std::string(long_name(sigma));
  j["set"] = names(doc.paf.framework(), S);

  const bool preprocess = cfg.preprocess.empty() || cfg.preprocess == "on";
  Rational multiplier = 1;
  const Paf* working = &doc.paf;
  std::optional<ReducedInstance> reduction;
  if (preprocess && sigma == Semantics::Complete) {
    auto simplified = simplify_for_ext(doc.paf, S);
    if (std::holds_alternative<ZeroProbability>(simplified)) {
      j["preprocess"] = {{"result", "zero"}};
      Probability zero = options.mode == ArithmeticMode::Rational ? Probability(Rational(0))
                                                                  : Probability(0.0);
      set_answer(j, zero);
      return j;
    }
    reduction = std::get<ReducedInstance>(std::move(simplified));
    multiplier = reduction->multiplier;
    working = &reduction->reduced;
    j["preprocess"] = {{"result", "reduced"},
                       {"removed", names(doc.paf.framework(), reduction->removed)},
                       {"multiplier", fraction_string(multiplier)}};
  }
  const ArgSet working_S = working->framework().make_set(doc.paf.framework().names_of(S));
  const auto td = load_or_build_td(cfg, doc.paf, *working);
  auto result = solve(*working, working_S, td, options);

  Probability answer = result.probability;
  if (auto* r = std::get_if<Rational>(&answer)) {
    *r *= multiplier;
  } else {
    std::get<double>(answer) *= multiplier.get_d();
  }
  set_answer(j, answer);
  j["width"] = result.width;
  j["nodes"] = result.nodes.size();
  j["maxRows"] = result.max_rows;
  if (cfg.trace) j["trace"] = result.trace;
  return j;
}

json cmd_oracle(const RunConfig& cfg) {
  json j = base_record("oracle");
  const auto doc = parse_paf(read_file(cfg.input));
  const Semantics sigma = semantics_of(cfg.semantics);
  OracleOptions options;
  options.uncertain_cap = cfg.cap;
  options.deadline = Deadline(std::chrono::duration<double>(cfg.timeout));
  j["mode"] = "rational";
  j["semantics"] = std::string(long_name(sigma));
  const bool preprocess = cfg.preprocess == "on";

  const auto& af = doc.paf.framework();
  if (auto a = query_argument(cfg, doc)) {
    j["task"] = "acc";
    j["argument"] = af.name(*a);
    if (preprocess && simplify_for_acc(doc.paf, *a) == AccSimplification::Zero) {
      j["preprocess"] = {{"result", "zero"}};
      set_answer(j, Probability(Rational(0)));
      return j;
    }
    const auto tally = acc_tally(doc.paf, sigma, *a, options);
    set_answer(j, Probability(tally.probability));
    j["count"] = tally.count;
    j["subframeworks"] = tally.total;
    return j;
  }
  const ArgSet S = query_set(cfg, doc);
  j["task"] = "ext";
  j["set"] = names(af, S);
  if (preprocess && sigma == Semantics::Complete) {
    auto simplified = simplify_for_ext(doc.paf, S);
    if (std::holds_alternative<ZeroProbability>(simplified)) {
      j["preprocess"] = {{"result", "zero"}};
      set_answer(j, Probability(Rational(0)));
      return j;
    }
    const auto& red = std::get<ReducedInstance>(simplified);
    const auto tally = ext_tally(red.reduced, sigma, red.reduced.framework().make_set(red.query),
                                 options);
    set_answer(j, Probability(Rational(tally.probability * red.multiplier)));
    j["preprocess"] = {{"result", "reduced"},
                       {"removed", names(af, red.removed)},
                       {"multiplier", fraction_string(red.multiplier)}};
    return j;
  }
  const auto tally = ext_tally(doc.paf, sigma, S, options);
  set_answer(j, Probability(tally.probability));
  j["count"] = tally.count;
  j["subframeworks"] = tally.total;
  return j;
}

json cmd_preprocess(const RunConfig& cfg) {
  json j = base_record("preprocess");
  const auto doc = parse_paf(read_file(cfg.input));
  const auto& af = doc.paf.framework();
  const auto forced = forced_labeling(doc.paf);
  j["semantics"] = "complete";
  j["forcedIn"] = names(af, forced.forced_in);
  j["forcedOut"] = names(af, forced.forced_out);
  j["iterations"] = forced.iterations;
  if (cfg.set || doc.query_set) {
    const ArgSet S = query_set(cfg, doc);
    j["set"] = names(af, S);
    auto simplified = simplify_for_ext(doc.paf, S, forced);
    if (std::holds_alternative<ZeroProbability>(simplified)) {
      j["ext"] = {{"result", "zero"}};
    } else {
      const auto& red = std::get<ReducedInstance>(simplified);
      j["ext"] = {{"result", "reduced"},
                  {"removed", names(af, red.removed)},
                  {"multiplier", fraction_string(red.multiplier)},
                  {"instance", serialize_paf(red.reduced, red.query)}};
    }
  }
  if (auto a = query_argument(cfg, doc)) {
    j["acc"] = {{"argument", af.name(*a)},
                {"result", forced.forced_out.test(*a) ? "zero" : "unchanged"}};
  }
  return j;
}

json cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  json j = base_record("decompose");
  const auto doc = parse_paf(read_file(cfg.input));
  const auto& af = doc.paf.framework();
  const auto td = decompose(af, heuristic_of(cfg, af));
  std::string text;
  std::size_t nodes = 0, w = 0;
  if (cfg.nice) {
    const auto nice = make_nice(td, af);
    text = serialize_td(nice, af);
    nodes = nice.nodes.size();
    w = width(nice);
  } else {
    text = serialize_td(td, af);
    nodes = td.nodes.size();
    w = width(td);
  }
  if (cfg.raw) {
    out << text;
    return nullptr;
  }
  j["width"] = w;
  j["nodes"] = nodes;
  j["nice"] = cfg.nice;
  j["td"] = text;
  return j;
}

json cmd_validate_td(const RunConfig& cfg) {
  json j = base_record("validate-td");
  const auto doc = parse_paf(read_file(cfg.input));
  const auto& af = doc.paf.framework();
  const auto parsed = parse_td(read_file(cfg.td_file), af);
  std::vector<Violation> violations;
  std::visit(
      [&](const auto& td) {
        violations = validate(td, af);
        j["width"] = width(td);
        j["nodes"] = td.nodes.size();
      },
      parsed);
  j["nice"] = std::holds_alternative<NiceTreeDecomposition>(parsed);
  j["ok"] = violations.empty();
  json list = json::array();
  for (const auto& v : violations) list.push_back({{"condition", v.condition}, {"witness", v.witness}});
  j["violations"] = list;
  return j;
}

void cmd_generate(const RunConfig& cfg, std::ostream& out) {
  const auto x = cfg.grid.find('x');
  GridSpec spec;
  try {
    if (x == std::string::npos) throw std::invalid_argument("no x");
    spec.rows = std::stoul(cfg.grid.substr(0, x));
    spec.columns = std::stoul(cfg.grid.substr(x + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--grid", "expected <k>x<n>, e.g. 3x5");
  }
  spec.seed = cfg.seed.value_or(0) + cfg.instance;
  out << serialize_paf(generate_grid(spec));
}

void apply_memory_limit(std::size_t megabytes) {
  if (megabytes == 0) return;
  rlimit limit{};
  limit.rlim_cur = limit.rlim_max = static_cast<rlim_t>(megabytes) * 1024 * 1024;
  setrlimit(RLIMIT_AS, &limit);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            bool apply_process_limits) {
  RunConfig cfg;
  CLI::App app{"Exact P-Ext / P-Acc for probabilistic argumentation frameworks", "pafdp"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, ".paf instance")->required()->check(CLI::ExistingFile);
  };
  auto add_heuristic = [&](CLI::App* sub) {
    sub->add_option("--heuristic", cfg.heuristic, "min-fill | min-degree | given-order")
        ->check(CLI::IsMember({"min-fill", "min-degree", "given-order"}));
    sub->add_option("--order", cfg.order, "comma-separated elimination order (given-order)");
    sub->add_option("--seed", cfg.seed, "randomize heuristic tie-breaks");
  };

  auto* solve_cmd = app.add_subcommand("solve", "P-Ext by dynamic programming on a nice TD");
  add_common(solve_cmd);
  add_heuristic(solve_cmd);
  solve_cmd->add_option("--semantics", cfg.semantics, "admissible | complete | stable");
  solve_cmd->add_option("--set", cfg.set, "query set, comma-separated (overrides the file)");
  solve_cmd->add_option("--mode", cfg.mode, "rational | float")
      ->check(CLI::IsMember({"rational", "float"}));
  solve_cmd->add_option("--td-file", cfg.td_file, "decomposition to use")
      ->check(CLI::ExistingFile);
  solve_cmd->add_option("--preprocess", cfg.preprocess, "on | off (default on)")
      ->check(CLI::IsMember({"on", "off"}));
  solve_cmd->add_option("--merge", cfg.merge, "eager | forget-only")
      ->check(CLI::IsMember({"eager", "forget-only"}));
  solve_cmd->add_flag("--eager-acceptance", cfg.eager_acceptance,
                      "filter query violations while building rows");
  solve_cmd->add_flag("--trace", cfg.trace, "include every table in the record");
  solve_cmd->add_option("--timeout", cfg.timeout, "seconds (default 300)");
  solve_cmd->add_option("--memory-mb", cfg.memory_mb, "address-space cap, 0 = none (default 8192)");

  auto* oracle_cmd = app.add_subcommand("oracle", "P-Ext / P-Acc and counts by enumeration");
  add_common(oracle_cmd);
  oracle_cmd->add_option("--semantics", cfg.semantics, "admissible | complete | stable | grounded");
  auto* ext_opt = oracle_cmd->add_option("--set,--ext", cfg.set, "query set, comma-separated");
  oracle_cmd->add_option("--acc", cfg.acc, "query argument")->excludes(ext_opt);
  oracle_cmd->add_option("--cap", cfg.cap, "maximum uncertain elements (default 30)");
  oracle_cmd->add_option("--preprocess", cfg.preprocess, "on | off (default off)")
      ->check(CLI::IsMember({"on", "off"}));
  oracle_cmd->add_option("--timeout", cfg.timeout, "seconds (default 300)");
  oracle_cmd->add_option("--memory-mb", cfg.memory_mb, "address-space cap, 0 = none");

  auto* pre_cmd = app.add_subcommand("preprocess", "forced labeling and instance reduction");
  add_common(pre_cmd);
  pre_cmd->add_option("--set", cfg.set, "query set for the P-Ext reduction");
  pre_cmd->add_option("--acc", cfg.acc, "query argument for the P-Acc check");

  auto* dec_cmd = app.add_subcommand("decompose", "tree decomposition of the attack graph");
  add_common(dec_cmd);
  add_heuristic(dec_cmd);
  dec_cmd->add_flag("--nice", cfg.nice, "emit the nice form");
  dec_cmd->add_flag("--raw", cfg.raw, "print the TD text format instead of a record");

  auto* gen_cmd = app.add_subcommand("generate", "seeded grid instance (.paf on stdout)");
  gen_cmd->add_option("--grid", cfg.grid, "<k>x<n>")->required();
  gen_cmd->add_option("--seed", cfg.seed, "64-bit seed (default 0)");
  gen_cmd->add_option("--instance", cfg.instance, "instance index i, uses seed+i");

  auto* val_cmd = app.add_subcommand("validate-td", "check a decomposition file");
  add_common(val_cmd);
  val_cmd->add_option("--td-file", cfg.td_file, "decomposition to check")
      ->required()
      ->check(CLI::ExistingFile);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (apply_process_limits && (command == "solve" || command == "oracle")) {
      apply_memory_limit(cfg.memory_mb);
    }
    json record;
    if (command == "solve") {
      record = cmd_solve(cfg);
    } else if (command == "oracle") {
      record = cmd_oracle(cfg);
    } else if (command == "preprocess") {
      record = cmd_preprocess(cfg);
    } else if (command == "decompose") {
      record = cmd_decompose(cfg, out);
      if (record.is_null()) return kExitOk;
    } else if (command == "validate-td") {
      record = cmd_validate_td(cfg);
    } else {
      cmd_generate(cfg, out);
      return kExitOk;
    }
    record["wallMillis"] = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    out << record.dump() << "\n";
    return kExitOk;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::bad_alloc&) {
    err << "capacity error: out of memory\n";
    return kExitCapacity;
  }
}

}  // namespace pafdp
