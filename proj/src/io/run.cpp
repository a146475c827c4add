#include "belief/io/run.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "belief/combination.hpp"
#include "belief/conditioning.hpp"
#include "belief/credal.hpp"
#include "belief/io/documents.hpp"
#include "belief/io/render.hpp"
#include "belief/io/voting.hpp"
#include "belief/matrices.hpp"
#include "belief/pignistic.hpp"
#include "belief/transforms.hpp"

namespace evidence::io {
namespace {

void build_app(CLI::App& app, CommandRequest& req) {
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--in", req.input, "mass-function document ('-' for stdin)")->required();
    sub->add_option("--format", req.format, "output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, OutputFormat>{{"tsv", OutputFormat::tsv},
                                                                                {"json", OutputFormat::json}}));
    sub->add_option("--world", req.world, "override the input world (condition --rule geometric: variant)")
        ->transform(CLI::CheckedTransformer(std::map<std::string, World>{{"open", World::open}, {"closed", World::closed}}));
    sub->add_flag("--masses", req.show_masses, "print the resulting masses instead of bel/pl");
  };
  const auto add_queries = [&](CLI::App* sub) {
    sub->add_option("--query", req.queries, "set literal to report, e.g. c,d (repeatable)");
  };

  auto* bel = app.add_subcommand("bel", "belief and plausibility of a mass function");
  add_common(bel);
  add_queries(bel);

  auto* condition = app.add_subcommand("condition", "condition on a retained set");
  add_common(condition);
  add_queries(condition);
  condition->add_option("--rule", req.rule, "conditioning rule")
      ->required()
      ->check(CLI::IsMember({"c1", "c2", "c3", "geometric"}));
  condition->add_option("--retain", req.retain, "retained set, e.g. c,d,e")->required();

  auto* specialize = app.add_subcommand("specialize", "apply a specialization matrix");
  add_common(specialize);
  add_queries(specialize);
  specialize->add_option("--matrix", req.matrix, "specialization-matrix document")->required();

  auto* image = app.add_subcommand("image", "apply a transfer matrix or a closest-world map");
  add_common(image);
  add_queries(image);
  auto* matrix = image->add_option("--matrix", req.matrix, "transfer-matrix document");
  auto* closest = image->add_option("--closest", req.closest, "closest-world map document");
  matrix->excludes(closest);
  closest->excludes(matrix);

  auto* combine = app.add_subcommand("combine", "conjunctive combination of two mass functions");
  add_common(combine);
  add_queries(combine);
  combine->add_option("--in2", req.second_input, "second mass-function document")->required();
  combine->add_flag("--normalize", req.normalize, "apply Dempster normalization");

  auto* betp = app.add_subcommand("betp", "pignistic probabilities");
  add_common(betp);
  add_queries(betp);

  auto* credal = app.add_subcommand("credal", "lower/upper conditional probabilities");
  add_common(credal);
  add_queries(credal);
  credal->add_option("--method", req.rule, "fh (closed form) or oracle (vertex enumeration)")
      ->required()
      ->check(CLI::IsMember({"fh", "oracle"}));
  credal->add_option("--retain", req.retain, "conditioning set")->required();

  auto* demo = app.add_subcommand("demo", "reproduce built-in scenario tables");
  demo->require_subcommand(1);
  auto* voting = demo->add_subcommand("voting", "voting-intentions scenario");
  std::vector<std::string> selectors = voting::table_selectors();
  selectors.insert(selectors.begin(), "all");
  voting->add_option("--table", req.table, "table selector")->check(CLI::IsMember(selectors));
  voting->add_option("--format", req.format, "output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, OutputFormat>{{"tsv", OutputFormat::tsv},
                                                                              {"json", OutputFormat::json}}));
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  return read_file(path);
}

SubsetKey parse_literal(const Frame& frame, const std::string& literal, const char* option) {
  if (literal == "∅") return SubsetKey::empty();
  try {
    return frame.parse_subset(literal);
  } catch (const InvalidInput& e) {
    throw UsageError(std::string(option) + ": " + e.what());
  }
}

MassFunction load_bba(const std::string& path, const std::optional<World>& world) {
  MassFunction m = parse_bba(read_input(path));
  if (!world || *world == m.world()) return m;
  const auto focal = m.focal();
  try {
    return MassFunction::create(m.frame(), focal, *world);
  } catch (const InvalidInput& e) {
    throw DocumentError(std::string("--world: ") + e.what());
  }
}

void require_frame(const Frame& expected, const Frame& actual, const std::string& what) {
  if (!(expected == actual)) throw DocumentError(what + ": frame differs from the input mass function");
}

std::vector<SubsetKey> requested_sets(const CommandRequest& req, const Frame& frame, SubsetKey universe) {
  std::vector<SubsetKey> sets;
  if (!req.queries.empty()) {
    for (const auto& q : req.queries) sets.push_back(parse_literal(frame, q, "--query"));
    return sets;
  }
  for (SubsetKey key : subsets_in_display_order(frame)) {
    if (!key.is_empty() && key.is_subset_of(universe)) sets.push_back(key);
  }
  return sets;
}

void emit(std::ostream& out, const CommandRequest& req, const std::vector<RenderedTable>& tables) {
  if (req.format == OutputFormat::json) {
    if (tables.size() == 1) {
      out << to_json(tables.front()).dump(2) << '\n';
      return;
    }
    nlohmann::json all = nlohmann::json::array();
    for (const auto& t : tables) all.push_back(to_json(t));
    out << all.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i) out << '\n';
    write_tsv(out, tables[i]);
  }
}

// bel/pl of the result, or its masses with --masses.
RenderedTable result_table(const CommandRequest& req, const MassFunction& result, SubsetKey universe) {
  if (req.show_masses) return mass_table(result);
  return interval_table(belief(result), requested_sets(req, result.frame(), universe));
}

RenderedTable run_condition(const CommandRequest& req) {
  const bool geometric = req.rule == "geometric";
  const MassFunction m = load_bba(req.input, geometric ? std::nullopt : req.world);
  const SubsetKey retained = parse_literal(m.frame(), *req.retain, "--retain");
  const World variant = req.world.value_or(World::closed);
  const bool normalized = req.rule == "c2" || req.rule == "c3" || (geometric && variant == World::closed);
  if (normalized && retained.is_empty()) throw UsageError("--retain: the empty set is not allowed for rule " + req.rule);

  ConditioningOutcome outcome = [&] {
    if (req.rule == "c1") return condition_open(m, retained);
    if (req.rule == "c2") return condition_closed(m, retained);
    if (req.rule == "c3") return condition_yager_kohlas(m, retained);
    return condition_geometric(m, retained, variant);
  }();
  RenderedTable table = result_table(req, outcome.result, retained);
  table.facts.push_back({"conflict", outcome.conflict});
  table.facts.push_back({"normalization", outcome.normalization, false});
  return table;
}

RenderedTable run_betp(const CommandRequest& req, const MassFunction& m) {
  const PignisticDistribution p = pignistic(m);
  RenderedTable table;
  table.columns = {"set", "betp"};
  std::vector<SubsetKey> sets;
  if (req.queries.empty()) {
    for (std::size_t i = 0; i < m.frame().size(); ++i) sets.push_back(SubsetKey::singleton(i));
  } else {
    for (const auto& q : req.queries) sets.push_back(parse_literal(m.frame(), q, "--query"));
  }
  for (SubsetKey set : sets) table.rows.push_back({set, m.frame().format(set), {p.probability(set)}, {}});
  return table;
}

RenderedTable run_credal(const CommandRequest& req, const MassFunction& m) {
  const SubsetKey given = parse_literal(m.frame(), *req.retain, "--retain");
  RenderedTable table;
  table.columns = {"set", "lower", "upper"};
  for (SubsetKey query : requested_sets(req, m.frame(), m.frame().full())) {
    const IntervalBound b = req.rule == "fh" ? fh_conditional(m, given, query) : oracle_conditional(m, given, query);
    table.rows.push_back({query, m.frame().format(query), {b.lower, b.upper}, {}});
  }
  return table;
}

std::vector<RenderedTable> dispatch(const CommandRequest& req) {
  if (req.subcommand == "demo") return voting::demo_tables(req.table);
  if (req.subcommand == "condition") return {run_condition(req)};

  const MassFunction m = load_bba(req.input, req.world);
  const Frame& frame = m.frame();
  if (req.subcommand == "bel") return {result_table(req, m, frame.full())};
  if (req.subcommand == "betp") return {run_betp(req, m)};
  if (req.subcommand == "credal") return {run_credal(req, m)};
  if (req.subcommand == "specialize") {
    const SpecializationMatrix s = parse_specialization(read_file(req.matrix));
    require_frame(frame, s.frame(), "--matrix");
    const MassFunction result = apply_specialization(m, s);
    RenderedTable table = result_table(req, result, frame.full());
    table.facts.push_back({"conflict", result.empty_mass()});
    return {table};
  }
  if (req.subcommand == "image") {
    std::optional<TransferMatrix> f;
    if (!req.matrix.empty()) {
      f = parse_transfer(read_file(req.matrix));
      require_frame(frame, f->frame(), "--matrix");
    } else {
      const ClosestWorldMap map = parse_closest(read_file(req.closest), frame);
      f = transfer_matrix_for(transfer_rule::Closest{map}, map.retained(), frame);
    }
    const MassFunction result = image_general(m, *f);
    RenderedTable table = result_table(req, result, frame.full());
    table.facts.push_back({"conflict", result.empty_mass()});
    return {table};
  }
  if (req.subcommand == "combine") {
    const MassFunction other = load_bba(req.second_input, req.world);
    require_frame(frame, other.frame(), "--in2");
    RenderedTable table;
    if (req.normalize) {
      const ConditioningOutcome outcome = dempster_combine(m, other);
      table = result_table(req, outcome.result, frame.full());
      table.facts.push_back({"conflict", outcome.conflict});
      table.facts.push_back({"normalization", outcome.normalization, false});
    } else {
      const MassFunction result = conjunctive(m, other);
      table = result_table(req, result, frame.full());
      table.facts.push_back({"conflict", result.empty_mass()});
    }
    return {table};
  }
  throw UsageError("unknown subcommand '" + req.subcommand + "'");
}

}  // namespace

std::optional<CommandRequest> parse_command_line(std::span<const std::string> args, std::ostream& out) {
  CommandRequest req;
  CLI::App app{"Belief functions on finite frames: conditioning, combination and credal bounds", "beliefctl"};
  build_app(app, req);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  req.subcommand = app.get_subcommands().front()->get_name();
  if (req.subcommand == "image" && req.matrix.empty() && req.closest.empty()) {
    throw UsageError("image: one of --matrix or --closest is required");
  }
  return req;
}

int execute(const CommandRequest& request, std::ostream& out, std::ostream& err) {
  try {
    const auto tables = dispatch(request);
    std::ostringstream buffer;
    emit(buffer, request, tables);
    out << buffer.str();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  std::optional<CommandRequest> request;
  try {
    request = parse_command_line(args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!request) return kExitOk;
  return execute(*request, out, err);
}

}  // namespace evidence::io
