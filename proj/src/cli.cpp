#include "rackmod/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rackmod/enumerate.hpp"
#include "rackmod/io.hpp"

namespace rackmod::cli {

namespace {

using io::Json;
using io::to_json;

struct Params {
  std::vector<std::string> inputs;
  std::string output;
  std::size_t dim = 3;
  std::size_t order = 0;
  std::size_t base_order = 2;
  std::size_t budget = 100000;
  std::size_t max_length = 16;
  std::size_t cap = 1000000;
  std::size_t trials = 20;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::string flavor = "racks";
  std::string rack;
  std::string diagram;
  std::string word1;
  std::string word2;
  std::string x_group;
  bool invariance = false;
  bool timing = false;
};

struct Outcome {
  Json result;
  int code = 0;
};

class Session {
 public:
  explicit Session(const Params& p) : p_(p) {}

  const Params& params() const { return p_; }

  std::string text(const std::string& path) {
    std::string bytes = io::read_file(path);
    inputs_.push_back({{"path", path}, {"sha256", io::sha256_hex(bytes)}});
    return bytes;
  }

  Json json(const std::string& path) {
    const std::string bytes = text(path);
    try {
      return Json::parse(bytes);
    } catch (const Json::parse_error& e) {
      throw MalformedInput(path + ": " + e.what());
    }
  }

  /// The single --input, parsed.
  Json input() {
    if (p_.inputs.size() != 1) throw MalformedInput("expected exactly one --input");
    return json(p_.inputs.front());
  }

  Rack rack_spec(const std::string& spec) {
    if (std::filesystem::is_regular_file(spec)) return io::rack_from_json(json(spec));
    return io::named_rack(spec);
  }

  /// A PD JSON file or a file with a PD[...] code.
  LinkDiagram diagram_file(const std::string& path) {
    const std::string bytes = text(path);
    const auto first = bytes.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && bytes[first] == '{') {
      try {
        return io::diagram_from_json(Json::parse(bytes));
      } catch (const Json::parse_error& e) {
        throw MalformedInput(path + ": " + e.what());
      }
    }
    return parse_pd(bytes);
  }

  const Json& inputs() const { return inputs_; }

 private:
  const Params& p_;
  Json inputs_ = Json::array();
};

Json report_json(const ValidationReport& r) { return to_json(r); }

void require_valid(const ValidationReport& r, const std::string& what) {
  if (!r.valid()) throw ValidationError(what, r);
}

Json corner_table(const Grid& g) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < g.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < g.cols(); ++c)
      row.push_back(g(r, c) == kNoEdge ? Json(nullptr) : Json(g(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Word parse_word(const std::string& text) {
  Word w;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(token, &used);
    } catch (const std::exception&) {
      throw MalformedInput("bad letter '" + token + "' in word '" + text + "'");
    }
    if (used != token.size() || v == 0 || v > 1000000 || v < -1000000)
      throw MalformedInput("bad letter '" + token + "' in word '" + text + "'");
    w.push_back(static_cast<std::int32_t>(v));
  }
  return w;
}

// check ----------------------------------------------------------------------

Outcome check(Session& s, const std::string& kind) {
  const Json j = s.input();
  Json result{{"kind", kind}};
  ValidationReport rep;
  try {
    if (kind == "rack") {
      const auto [table, basepoint] = io::raw_rack_from_json(j);
      rep = validate_rack(table, basepoint);
      if (rep.valid()) {
        const Rack r(table, basepoint);
        result["quandle"] = r.is_quandle();
        result["orbits"] = orbits(r).size();
      }
    } else if (kind == "group") {
      if (io::type_of(j) != "group") throw MalformedInput("expected type 'group'");
      rep = validate_group(io::grid_from_json(j.at("cayley")));
    } else if (kind == "action") {
      rep = validate_action(io::action_from_json(j));
    } else if (kind == "crossmod") {
      rep = validate_crossed_module(io::crossmod_from_json(j), io::claimed_source_from_json(j));
    } else if (kind == "augmented") {
      rep = validate_augmented(io::augmented_from_json(j));
    } else if (kind == "group_crossmod") {
      rep = validate_group_crossmod(io::group_crossmod_from_json(j));
    } else if (kind == "2rack") {
      const auto x = io::two_rack_from_json(j);
      rep = validate_2rack(x);
      if (rep.valid()) {
        result["kernels_act_trivially"] = report_json(kernels_act_trivially(x));
        result["peiffer_disagreements"] = peiffer_discrepancy_scan(x).disagreements.size();
      }
    } else if (kind == "2group") {
      rep = validate_2group(io::two_group_from_json(j));
    } else if (kind == "trunk") {
      rep = validate_trunk(io::trunk_from_json(j));
    } else if (kind == "corner") {
      const auto t = io::trunk_from_json(j);
      rep = validate_corner(t);
      if (rep.valid()) {
        const auto ops = corner_ops(t);
        result["left"] = corner_table(ops.left);
        result["right"] = corner_table(ops.right);
      }
    } else if (kind == "pd") {
      const auto d = io::diagram_from_json(j);
      result["crossings"] = d.crossings.size();
      result["arcs"] = d.arc_count;
      result["components"] = d.components.size();
    }
  } catch (const ValidationError& e) {
    // A component (the target rack, say) failed before the main validator ran.
    rep = e.report();
    result["message"] = e.what();
  }
  result["report"] = report_json(rep);
  return {result, rep.valid() ? 0 : 1};
}

// construct ------------------------------------------------------------------

[[noreturn]] void wrong_type(const std::string& verb, const std::string& type, const std::string& expected) {
  throw MalformedInput("construct " + verb + " expects " + expected + ", got '" + type + "'");
}

CrossedModule valid_crossmod(const Json& j) {
  auto cm = io::crossmod_from_json(j);
  require_valid(validate_crossed_module(cm, io::claimed_source_from_json(j)), "crossed module");
  return cm;
}

RackAction valid_action(const Json& j) {
  auto a = io::action_from_json(j);
  require_valid(validate_action(a), "action");
  return a;
}

Outcome construct(Session& s, const std::string& verb) {
  const Params& p = s.params();
  const Json j = s.input();
  const std::string type = io::type_of(j);
  Json object;
  Json result{{"verb", verb}, {"input_type", type}};

  if (verb == "conj") {
    if (type == "group")
      object = to_json(conj_rack(io::group_from_json(j)));
    else if (type == "2group")
      object = to_json(conj_2rack(io::two_group_from_json(j)));
    else
      wrong_type(verb, type, "group or 2group");
  } else if (verb == "as") {
    if (type != "rack") wrong_type(verb, type, "rack");
    object = to_json(as_presentation(io::rack_from_json(j)));
  } else if (verb == "hemi") {
    if (type != "action") wrong_type(verb, type, "action");
    object = to_json(hemi_semi_direct(valid_action(j)));
  } else if (verb == "induced") {
    if (type == "crossmod") {
      object = to_json(induced_rack(valid_crossmod(j)));
    } else if (type == "augmented") {
      const auto ar = io::augmented_from_json(j);
      require_valid(validate_augmented(ar), "augmented rack");
      object = to_json(induced_rack(ar));
    } else {
      wrong_type(verb, type, "crossmod or augmented");
    }
  } else if (verb == "standard") {
    if (type != "2rack") wrong_type(verb, type, "2rack");
    const auto x = io::two_rack_from_json(j);
    require_valid(validate_2rack(x), "2-rack");
    const auto sc = standard_construction(x);
    object = to_json(sc.crossed_module);
    result["kernel"] = sc.kernel;
  } else if (verb == "trunkify") {
    if (type == "rack")
      object = to_json(rack_trunk(io::rack_from_json(j)));
    else if (type == "action")
      object = to_json(action_rack_trunk(valid_action(j)));
    else if (type == "crossmod")
      object = to_json(trunkified_from_crossmod(valid_crossmod(j)));
    else
      wrong_type(verb, type, "rack, action or crossmod");
  } else if (verb == "nerve") {
    const NerveLimits limits{4, p.cap};
    result["caps"] = {{"max_dim", limits.max_dim}, {"max_cubes", limits.max_cubes}};
    if (type == "rack")
      object = to_json(nerve(io::rack_from_json(j), p.dim, limits));
    else if (type == "action")
      object = to_json(covering_nerve(valid_action(j), p.dim, limits));
    else
      wrong_type(verb, type, "rack or action");
  } else if (verb == "2group") {
    if (type == "group_crossmod") {
      object = to_json(two_group_from_group_crossmod(io::group_crossmod_from_json(j)));
    } else if (type == "group") {
      object = to_json(two_group_from_group_crossmod(identity_group_crossmod(io::group_from_json(j))));
    } else if (type == "augmented") {
      if (p.x_group.empty()) throw MalformedInput("construct 2group from an augmented rack needs --x-group");
      const auto ar = io::augmented_from_json(j);
      require_valid(validate_augmented(ar), "augmented rack");
      object = to_json(two_group_from_abelian_augmented(ar, io::named_group(p.x_group)));
    } else {
      wrong_type(verb, type, "group_crossmod, group or augmented");
    }
  } else if (verb == "crossmod") {
    if (type == "rack") {
      object = to_json(identity_crossed_module(io::rack_from_json(j)));
    } else if (type == "augmented") {
      const auto ar = io::augmented_from_json(j);
      require_valid(validate_augmented(ar), "augmented rack");
      object = to_json(crossmod_from_augmented(ar));
    } else if (type == "group_crossmod") {
      const auto gc = io::group_crossmod_from_json(j);
      require_valid(validate_group_crossmod(gc), "group crossed module");
      object = to_json(crossmod_from_group_crossmod(gc));
    } else {
      wrong_type(verb, type, "rack, augmented or group_crossmod");
    }
  } else if (verb == "discrete") {
    if (type != "rack") wrong_type(verb, type, "rack");
    object = to_json(discrete_2rack(io::rack_from_json(j)));
  } else if (verb == "fundamental") {
    if (type != "pd") wrong_type(verb, type, "pd");
    object = to_json(fundamental_rack_presentation(io::diagram_from_json(j)));
  }

  const std::string bytes = io::dump(object);
  if (p.output.empty()) {
    result["object"] = object;
  } else {
    std::ofstream out(p.output, std::ios::binary | std::ios::trunc);
    if (!out) throw io::IoError("cannot write '" + p.output + "'");
    out << bytes;
    if (!out.flush()) throw io::IoError("cannot write '" + p.output + "'");
  }
  result["output_sha256"] = io::sha256_hex(bytes);
  result["output_type"] = object.value("type", "");
  return {result, 0};
}

// compute --------------------------------------------------------------------

Outcome compute(Session& s, const std::string& verb) {
  const Params& p = s.params();
  Json result{{"verb", verb}};
  int code = 0;

  if (verb == "homology") {
    const Json j = s.input();
    const std::string type = io::type_of(j);
    const NerveLimits limits{4, p.cap};
    CubicalComplex c;
    if (type == "rack")
      c = nerve(io::rack_from_json(j), p.dim, limits);
    else if (type == "action")
      c = covering_nerve(valid_action(j), p.dim, limits);
    else
      throw MalformedInput("compute homology expects rack or action, got '" + type + "'");
    const auto h = homology(c);
    result["homology"] = to_json(h)["degrees"];
    Json betti = Json::array();
    for (const auto& d : h) betti.push_back(d.betti);
    result["betti"] = betti;
    result["cube_counts"] = c.cube_counts;
    result["caps"] = {{"dim", p.dim}, {"max_dim", limits.max_dim}, {"max_cubes", limits.max_cubes}};
  } else if (verb == "abelianization") {
    const Json j = s.input();
    const std::string type = io::type_of(j);
    GroupPresentation pres;
    if (type == "rack")
      pres = as_presentation(io::rack_from_json(j));
    else if (type == "presentation")
      pres = io::presentation_from_json(j);
    else
      throw MalformedInput("compute abelianization expects rack or presentation, got '" + type + "'");
    const auto ab = abelianization(pres);
    Json torsion = Json::array();
    for (const auto& t : ab.torsion) torsion.push_back(to_json(t));
    result["rank"] = ab.rank;
    result["torsion"] = torsion;
    result["generators"] = pres.generator_count;
    result["relators"] = pres.relators.size();
  } else if (verb == "covering-check") {
    const Json j = s.input();
    const auto cm = io::crossmod_from_json(j);
    const auto rep = validate_crossed_module(cm, io::claimed_source_from_json(j));
    const auto cc = covering_check(cm, p.cap);
    result["crossmod"] = report_json(rep);
    result["covering"] = cc.covering;
    result["group_order"] = cc.group_order;
    result["source_stabilizers"] = cc.source_stabilizers;
    result["target_stabilizers"] = cc.target_stabilizers;
    if (cc.witness) result["witness"] = {{"element", *cc.witness}, {"point", *cc.witness_point}};
    result["caps"] = {{"max_group_order", p.cap}};
    code = cc.covering ? 0 : 1;
  } else if (verb == "colorings") {
    if (p.rack.empty()) throw MalformedInput("compute colorings needs --rack");
    LinkDiagram d;
    if (!p.diagram.empty() && !p.inputs.empty()) throw MalformedInput("give either --diagram or --input");
    if (!p.diagram.empty()) {
      d = bundled_diagram(p.diagram);
      result["diagram"] = p.diagram;
    } else {
      if (p.inputs.size() != 1) throw MalformedInput("compute colorings needs --diagram or one --input");
      d = s.diagram_file(p.inputs.front());
    }
    const Rack r = s.rack_spec(p.rack);
    const auto pres = fundamental_rack_presentation(d);
    result["colorings"] = count_colorings(pres, r);
    result["generators"] = pres.generators;
    result["relations"] = pres.relations.size();
    result["rack_size"] = r.size();
    result["quandle"] = r.is_quandle();
    if (p.invariance) {
      Json moves = Json::array();
      bool ok = true;
      for (const auto& m : coloring_invariance_check(bundled_moves(), r)) {
        moves.push_back({{"name", m.name}, {"move", m.move}, {"before", m.before}, {"after", m.after},
                         {"agree", m.agree()}});
        // R1 changes the framing, so only R2 and R3 are required to agree.
        if (m.move != "R1") ok = ok && m.agree();
      }
      result["invariance"] = {{"moves", moves}, {"r2_r3_agree", ok}};
      code = ok ? 0 : 1;
    }
  } else if (verb == "enumerate") {
    if (p.order == 0) throw MalformedInput("compute enumerate needs --order");
    EnumerateOptions options;
    options.jobs = p.jobs;
    const auto res = enumerate_racks(p.order, parse_flavor(p.flavor), options);
    Json reps = Json::array();
    for (const auto& r : res.representatives) reps.push_back(to_json(r));
    result["order"] = res.order;
    result["flavor"] = flavor_name(res.flavor);
    result["count"] = res.count();
    result["representatives"] = reps;
    result["caps"] = {{"max_order", options.max_order}};
  } else if (verb == "word-eq") {
    const Json j = s.input();
    const std::string type = io::type_of(j);
    GroupPresentation pres;
    if (type == "rack")
      pres = as_presentation(io::rack_from_json(j));
    else if (type == "presentation")
      pres = io::presentation_from_json(j);
    else
      throw MalformedInput("compute word-eq expects rack or presentation, got '" + type + "'");
    const Word w1 = parse_word(p.word1), w2 = parse_word(p.word2);
    check_word(w1, pres.generator_count);
    check_word(w2, pres.generator_count);
    WordEqualityOptions options;
    options.budget = p.budget;
    options.max_length = p.max_length;
    const auto res = word_equality(pres, w1, w2, options);
    result["verdict"] = verdict_name(res.verdict);
    result["method"] = res.method;
    result["visited"] = res.visited;
    result["word1"] = w1;
    result["word2"] = w2;
    result["caps"] = {{"budget", options.budget},
                      {"max_length", options.max_length},
                      {"quotient_search_nodes", options.quotient_search_nodes}};
  } else if (verb == "mfe-scan") {
    const std::size_t max_r1 = p.order == 0 ? 4 : p.order;
    const auto search = enumerate_small_2racks(max_r1, p.base_order);
    std::size_t kernel_failures_valid = 0, kernel_failures_violating = 0, peiffer = 0, mutants = 0,
                mutant_kernel_failures = 0;
    for (const auto& x : search.valid) {
      kernel_failures_valid += !kernels_act_trivially(x).valid();
      peiffer += !peiffer_discrepancy_scan(x).agree();
    }
    for (const auto& x : search.mfe_violating) kernel_failures_violating += !kernels_act_trivially(x).valid();
    for (std::size_t k = 0; k < search.valid.size(); ++k) {
      for (const auto& m : mfe_mutation_scan(search.valid[k], p.seed + k, p.trials)) {
        ++mutants;
        mutant_kernel_failures += !kernels_act_trivially(m).valid();
      }
    }
    result["candidates"] = search.candidates;
    result["valid"] = search.valid.size();
    result["mfe_violating"] = search.mfe_violating.size();
    result["truncated"] = search.truncated;
    result["valid_with_kernel_failure"] = kernel_failures_valid;
    result["violating_with_kernel_failure"] = kernel_failures_violating;
    result["valid_with_peiffer_disagreement"] = peiffer;
    result["mutants"] = mutants;
    result["mutants_with_kernel_failure"] = mutant_kernel_failures;
    result["caps"] = {{"max_r1", max_r1}, {"max_r0", p.base_order}, {"trials_per_base", p.trials},
                      {"seed", p.seed}};
    code = kernel_failures_valid == 0 ? 0 : 1;
  }
  return {result, code};
}

// reporting ------------------------------------------------------------------

struct Failure {
  int code;
  Json error;
};

Failure classify(const std::exception& e) {
  if (const auto* v = dynamic_cast<const ValidationError*>(&e))
    return {1, {{"kind", "validation"}, {"message", e.what()}, {"report", report_json(v->report())}}};
  if (dynamic_cast<const PreconditionError*>(&e)) return {1, {{"kind", "precondition"}, {"message", e.what()}}};
  if (dynamic_cast<const IncompatibleError*>(&e)) return {1, {{"kind", "incompatible"}, {"message", e.what()}}};
  if (dynamic_cast<const InconsistencyError*>(&e)) return {1, {{"kind", "inconsistency"}, {"message", e.what()}}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e))
    return {2, {{"kind", "parse"}, {"message", e.what()}, {"position", pe->position()}}};
  if (dynamic_cast<const MalformedInput*>(&e)) return {2, {{"kind", "malformed"}, {"message", e.what()}}};
  if (const auto* r = dynamic_cast<const ResourceError*>(&e))
    return {2, {{"kind", "resource"}, {"message", e.what()}, {"partial", r->partial()}}};
  if (dynamic_cast<const io::IoError*>(&e)) return {2, {{"kind", "io"}, {"message", e.what()}}};
  return {2, {{"kind", "internal"}, {"message", e.what()}}};
}

const char* status_name(int code) { return code == 0 ? "ok" : code == 1 ? "fail" : "error"; }

/// Options given on the command line, minus those that must not influence
/// the report (--jobs, --timing) and those echoed elsewhere.
Json echo_options(const CLI::App& sub) {
  Json out = Json::object();
  for (const CLI::Option* o : sub.get_options()) {
    const std::string name = o->get_single_name();
    if (o->count() == 0 || name.empty() || name == "help" || name == "jobs" || name == "timing" ||
        name == "input" || o->get_positional())
      continue;
    const auto& results = o->results();
    if (o->get_expected_max() == 0)
      out[name] = true;
    else if (results.size() == 1)
      out[name] = results.front();
    else
      out[name] = results;
  }
  return out;
}

void add_common(CLI::App& sub, Params& p) {
  sub.add_option("-i,--input", p.inputs, "Input file");
  sub.add_option("-o,--output", p.output, "Output file");
  sub.add_option("--jobs", p.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  sub.add_flag("--timing", p.timing, "Print elapsed milliseconds to stderr");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Params p;
  std::string kind, verb;
  CLI::App app{"Finite racks, crossed modules of racks and their invariants", "rackmod"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* check_cmd = app.add_subcommand("check", "Validate an object file");
  check_cmd
      ->add_option("kind", kind, "Object kind")
      ->required()
      ->check(CLI::IsMember({"rack", "group", "action", "crossmod", "augmented", "group_crossmod", "2rack",
                             "2group", "trunk", "corner", "pd"}));
  add_common(*check_cmd, p);

  auto* construct_cmd = app.add_subcommand("construct", "Build an object from another");
  construct_cmd->add_option("verb", verb, "Construction")
      ->required()
      ->check(CLI::IsMember({"conj", "as", "hemi", "induced", "standard", "trunkify", "nerve", "2group",
                             "crossmod", "discrete", "fundamental"}));
  add_common(*construct_cmd, p);
  construct_cmd->add_option("--dim", p.dim, "Nerve dimension");
  construct_cmd->add_option("--cap", p.cap, "Cube cap per degree");
  construct_cmd->add_option("--x-group", p.x_group, "Abelian group X for an augmented 2-group");

  auto* compute_cmd = app.add_subcommand("compute", "Compute an invariant");
  compute_cmd->add_option("verb", verb, "Computation")
      ->required()
      ->check(CLI::IsMember({"homology", "abelianization", "covering-check", "colorings", "enumerate",
                             "word-eq", "mfe-scan"}));
  add_common(*compute_cmd, p);
  compute_cmd->add_option("--dim", p.dim, "Nerve dimension");
  compute_cmd->add_option("--order", p.order, "Rack order (enumerate) or largest |R1| (mfe-scan)");
  compute_cmd->add_option("--base-order", p.base_order, "Largest |R0| for mfe-scan");
  compute_cmd->add_option("--flavor", p.flavor, "racks, quandles or pointed")
      ->check(CLI::IsMember({"racks", "quandles", "pointed"}));
  compute_cmd->add_option("--budget", p.budget, "Rewriting budget for word-eq");
  compute_cmd->add_option("--max-length", p.max_length, "Longest word kept by word-eq");
  compute_cmd->add_option("--cap", p.cap, "Cube or group-order cap");
  compute_cmd->add_option("--seed", p.seed, "Seed for mutation scans");
  compute_cmd->add_option("--trials", p.trials, "Mutations per base in mfe-scan");
  compute_cmd->add_option("--rack", p.rack, "Rack: trivial:n, dihedral:n, cyclic:n, flip, conj:G or a file");
  compute_cmd->add_option("--diagram", p.diagram, "Bundled diagram: unknot, trefoil, figure-eight, hopf");
  compute_cmd->add_option("--word1", p.word1, "Word as comma-separated letters, e.g. 1,-2");
  compute_cmd->add_option("--word2", p.word2, "Word as comma-separated letters");
  compute_cmd->add_flag("--invariance", p.invariance, "Also compare counts across bundled Reidemeister moves");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const std::string what = command == "check" ? kind : verb;

  Json report{{"command", {{"name", command}, {"target", what}, {"options", echo_options(*sub)}}}};
  if (!p.output.empty()) report["command"]["output"] = p.output;

  Session session(p);
  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    Outcome o;
    if (command == "check")
      o = check(session, kind);
    else if (command == "construct")
      o = construct(session, verb);
    else
      o = compute(session, verb);
    report["result"] = std::move(o.result);
    code = o.code;
  } catch (const std::exception& e) {
    auto f = classify(e);
    report["error"] = std::move(f.error);
    code = f.code;
    err << "rackmod: " << e.what() << "\n";
  }
  report["inputs"] = session.inputs();
  report["status"] = status_name(code);
  out << io::dump(report);
  if (p.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    err << "elapsed_ms " << ms << "\n";
  }
  return code;
}

}  // namespace rackmod::cli
