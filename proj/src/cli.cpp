#include "hgrig/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "hgrig/error.hpp"
#include "hgrig/exotic.hpp"
#include "hgrig/serialize.hpp"

namespace hgrig {

namespace {

// check-lemma targets by name, with numeric aliases.
const std::map<std::string, std::string>& lemma_aliases() {
  static const std::map<std::string, std::string> aliases = {
      {"type-detection", "type-detection"},
      {"3.2", "type-detection"},
      {"gaps", "gaps"},
      {"3.4", "gaps"},
      {"containment", "containment"},
      {"3.5", "containment"},
      {"adjacency", "adjacency"},
      {"3.6", "adjacency"},
      {"3.7", "adjacency"},
      {"counts", "counts"},
      {"malnormal", "malnormal"},
      {"tree", "tree"},
      {"comparability", "comparability"},
  };
  return aliases;
}

void add_output_options(CLI::App* sub, RunConfig& c) {
  static const std::map<std::string, OutputFormat> formats = {
      {"json", OutputFormat::json}, {"dot", OutputFormat::dot}, {"text", OutputFormat::text}};
  sub->add_option("--format", c.format, "json, dot or text")->transform(CLI::CheckedTransformer(formats));
  sub->add_option("--output", c.output, "write the artifact to a file instead of stdout");
  sub->add_option("--threads", c.threads, "worker threads; output does not depend on it")
      ->check(CLI::Range(1u, 256u));
}

void add_bs_group(CLI::App* sub, RunConfig& c) {
  sub->add_option("--m", c.m, "BS(m,n) parameter m");
  sub->add_option("--n", c.n, "BS(m,n) parameter n");
  sub->add_option("--radius", c.radius, "Cayley ball radius")->check(CLI::NonNegativeNumber);
}

void add_sigma(CLI::App* sub, RunConfig& c, bool with_ball) {
  sub->add_option("--sigma", c.sigma, "pairs \"m1,n1;m2,n2;...\"");
  if (!with_ball) return;
  sub->add_option("--r", c.r, "development radius in cell steps")->check(CLI::NonNegativeNumber);
  sub->add_option("--s", c.s, "word length of the vertex-group balls")->check(CLI::PositiveNumber);
}

CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help, RunConfig& c) {
  CLI::App* sub = parent->add_subcommand(name, help);
  sub->final_callback([&c, sub, parent] {
    c.command = parent->get_name();
    c.subcommand = sub->get_name();
  });
  add_output_options(sub, c);
  return sub;
}

void build_app(CLI::App& app, RunConfig& c) {
  app.require_subcommand(1);

  CLI::App* bs = app.add_subcommand("bs", "Baumslag-Solitar groups, standard lines and the line graph");
  bs->require_subcommand(1);
  add_bs_group(leaf(bs, "ball", "Cayley ball", c), c);
  add_bs_group(leaf(bs, "lambda", "line graph of a Cayley ball", c), c);
  CLI::App* gaps_cmd = leaf(bs, "gaps", "spacing of a comparable a-line pair", c);
  add_bs_group(gaps_cmd, c);
  gaps_cmd->add_option("--u1", c.u1, "word on the measuring a-line")->required();
  gaps_cmd->add_option("--u2", c.u2, "word on the measured a-line")->required();
  CLI::App* order_cmd = leaf(bs, "order", "Bass-Serre order and distance of two a-lines", c);
  order_cmd->add_option("--m", c.m, "BS(m,n) parameter m");
  order_cmd->add_option("--n", c.n, "BS(m,n) parameter n");
  order_cmd->add_option("--u1", c.u1, "word on the first a-line")->required();
  order_cmd->add_option("--u2", c.u2, "word on the second a-line")->required();

  CLI::App* lemma = leaf(bs, "check-lemma", "check one line-graph property on a ball", c);
  add_bs_group(lemma, c);
  std::string names;
  for (const auto& [token, name] : lemma_aliases()) names += (names.empty() ? "" : "|") + token;
  lemma->add_option("lemma", c.lemma, names)
      ->required()
      ->check(CLI::Validator(
          [](std::string& token) { return lemma_name(token).empty() ? "unknown check '" + token + "'" : ""; },
          "CHECK"));
  lemma->add_option("--u1", c.u1, "word on u1 (defaults depend on the check)");
  lemma->add_option("--u2", c.u2, "word on u2");
  lemma->add_option("--u3", c.u3, "word on u3 (containment)");
  lemma->add_option("--line-type", c.line_type, "type of the line u1 for type-detection")
      ->check(CLI::IsMember({'a', 't'}));
  lemma->add_option("--search-bound", c.search_bound, "largest candidate cover tried for a t-line");
  lemma->add_option("--search-radius", c.search_radius, "offset window for adjacency candidates")
      ->check(CLI::NonNegativeNumber);
  lemma->add_option("--exponent-bound", c.exponent_bound, "largest |j| for malnormality")
      ->check(CLI::NonNegativeNumber);

  CLI::App* exotic = app.add_subcommand("exotic", "the exotic line-preserving bijection of BS(1,2)");
  exotic->require_subcommand(1);
  CLI::App* verify = leaf(exotic, "verify", "verify the bijection on a ball of BS(1,2)", c);
  verify->add_option("--n", c.exotic_n, "shift exponent: the map moves low t-lines by a^(2^n)")
      ->check(CLI::Range(0u, 20u));
  verify->add_option("--radius", c.radius, "ball radius (default 2^n + 4)")->check(CLI::NonNegativeNumber);

  CLI::App* higman = app.add_subcommand("higman", "generalized Higman groups and their developed complex");
  higman->require_subcommand(1);
  add_sigma(leaf(higman, "ball", "developed ball around the base cell", c), c, true);
  add_sigma(leaf(higman, "links", "link and quotient checks on a developed ball", c), c, true);
  add_sigma(leaf(higman, "fsigma", "the translation group F_sigma", c), c, false);
  CLI::App* witness = leaf(higman, "witness", "least common power of a_i in two conjugates", c);
  add_sigma(witness, c, false);
  witness->add_option("--i", c.i, "vertex type, 0-based; the power is of a_i and t = a_{i-1}");
  witness->add_option("--s1", c.s1, "first conjugating exponent");
  witness->add_option("--s2", c.s2, "second conjugating exponent");
  witness->add_option("--bound", c.bound, "largest accepted |s1|, |s2|")->check(CLI::NonNegativeNumber);

  CLI::App* theta_cmd = app.add_subcommand("theta", "the intersection graph of the developed complex");
  theta_cmd->require_subcommand(1);
  add_sigma(leaf(theta_cmd, "build", "intersection graph on a developed ball", c), c, true);
  CLI::App* cycles = leaf(theta_cmd, "cycles", "induced k-cycles in the deep region", c);
  add_sigma(cycles, c, true);
  cycles->add_option("--k", c.k, "cycle length (default: number of generators)")->check(CLI::Range(3u, 64u));
  cycles->add_option("--margin", c.margin, "depth margin of the region")->check(CLI::NonNegativeNumber);
  CLI::App* tverify = leaf(theta_cmd, "verify", "induced cycles against 2-cells in the deep region", c);
  add_sigma(tverify, c, true);
  tverify->add_option("--margin", c.margin, "depth margin of the region")->check(CLI::NonNegativeNumber);
  CLI::App* equi = leaf(theta_cmd, "equivariance", "F_sigma relabeling preserves the intersection graph", c);
  add_sigma(equi, c, true);
  equi->add_option("--tau", c.tau, "cyclic translation");
  equi->add_flag("--force", c.force, "apply tau even outside F_sigma");
}

std::vector<std::string> reversed(const std::vector<std::string>& args) { return {args.rbegin(), args.rend()}; }

void validate(RunConfig& c) {
  c.lemma = lemma_name(c.lemma);
  const bool graph_artifact = (c.command == "bs" && (c.subcommand == "ball" || c.subcommand == "lambda")) ||
                              (c.command == "higman" && c.subcommand == "ball") ||
                              (c.command == "theta" && c.subcommand == "build");
  if (c.format == OutputFormat::dot && !graph_artifact) {
    throw ValidationError("--format dot applies to bs ball, bs lambda, higman ball and theta build");
  }
  if (c.command == "bs") make_params(c.m, c.n);
  if (c.command == "higman" || c.command == "theta") parse_sigma(c.sigma);
}

// ---------------------------------------------------------------------------
// Output

class Sink {
 public:
  Sink(const RunConfig& c, std::ostream& out) : out_(&out) {
    if (!c.output.empty()) {
      file_.open(c.output, std::ios::binary);
      if (!file_) throw ValidationError("cannot write " + c.output);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

void write_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

void write_text(std::ostream& out, const Report& r) {
  out << r.check << ": " << to_string(r.status) << '\n';
  for (const auto& [key, value] : r.stats.items()) out << "  " << key << " = " << value.dump() << '\n';
  for (const std::string& note : r.notes) out << "  note: " << note << '\n';
  for (const Witness& w : r.witnesses) out << "  witness " << w.kind << ' ' << w.detail.dump() << '\n';
}

int emit(const RunConfig& c, std::ostream& out, const Report& r) {
  Sink sink(c, out);
  if (c.format == OutputFormat::text) {
    write_text(sink.stream(), r);
  } else {
    write_json(sink.stream(), report_document(r));
  }
  return exit_code(r);
}

// ---------------------------------------------------------------------------
// bs

BsParams bs_params(const RunConfig& c) { return make_params(c.m, c.n); }

int radius_or(const RunConfig& c, int fallback) { return c.radius >= 0 ? c.radius : fallback; }

StandardLine a_line(const BsParams& p, const std::string& word) { return line_of(normalize(p, word), Label::a); }

json line_json(const StandardLine& line) {
  json j = to_json(line);
  j["word"] = to_string(line.rep);
  return j;
}

constexpr int kLemmaRadius = 8;
constexpr int kBallRadius = 3;

int bs_ball(const RunConfig& c, std::ostream& out) {
  CayleyBall b = ball(bs_params(c), radius_or(c, kBallRadius), {default_caps().vertices, c.threads});
  Sink sink(c, out);
  switch (c.format) {
    case OutputFormat::json: write_json(sink.stream(), to_json(b)); break;
    case OutputFormat::dot: sink.stream() << to_dot(b); break;
    case OutputFormat::text:
      sink.stream() << to_string(b.params()) << " radius " << b.radius() << ": " << b.size() << " elements, "
                    << b.edges().size() << " edges\n";
      break;
  }
  return exit_pass;
}

int bs_lambda(const RunConfig& c, std::ostream& out) {
  LambdaGraph g = lambda_graph(ball(bs_params(c), radius_or(c, kBallRadius), {default_caps().vertices, c.threads}));
  Sink sink(c, out);
  switch (c.format) {
    case OutputFormat::json: write_json(sink.stream(), to_json(g)); break;
    case OutputFormat::dot: sink.stream() << to_dot(g); break;
    case OutputFormat::text: {
      std::size_t truncated = 0;
      for (const StandardLine& line : g.nodes()) truncated += line.truncated;
      sink.stream() << to_string(g.params()) << " radius " << g.ball().radius() << ": " << g.nodes().size()
                    << " lines (" << truncated << " truncated), " << g.links().size() << " links\n";
      break;
    }
  }
  return exit_pass;
}

int bs_gaps(const RunConfig& c, std::ostream& out) {
  const BsParams p = bs_params(c);
  LambdaGraph g = lambda_graph(ball(p, radius_or(c, kLemmaRadius), {default_caps().vertices, c.threads}));
  GapReport r = gaps(g, a_line(p, c.u1), a_line(p, c.u2));
  Sink sink(c, out);
  if (c.format == OutputFormat::text) {
    sink.stream() << r.direction << " d=" << r.d << " measured " << r.measured_gap << " formula " << r.formula_gap
                  << " over " << r.samples << " spacings" << (r.passed() ? "" : " MISMATCH") << '\n';
  } else {
    write_json(sink.stream(), to_json(r));
  }
  return r.passed() ? exit_pass : exit_violation;
}

int bs_order(const RunConfig& c, std::ostream& out) {
  const BsParams p = bs_params(c);
  const StandardLine u1 = a_line(p, c.u1);
  const StandardLine u2 = a_line(p, c.u2);
  const TreeVertex v1 = bass_serre_address(u1);
  const TreeVertex v2 = bass_serre_address(u2);
  const TreeOrder order = tree_order(v1, v2);
  const std::size_t distance = tree_distance(v1, v2);
  Sink sink(c, out);
  if (c.format == OutputFormat::text) {
    sink.stream() << "u1 " << to_string(order) << " u2, tree distance " << distance << '\n';
  } else {
    json doc{{"schema", 1}, {"kind", "tree_order"}, {"params", to_json(p)}, {"u1", line_json(u1)},
             {"u2", line_json(u2)}, {"order", to_string(order)}, {"distance", distance}};
    write_json(sink.stream(), doc);
  }
  return exit_pass;
}

Report gaps_check(const RunConfig& c, const BsParams& p, const LambdaGraph& g) {
  Report report;
  report.check = "gaps";
  std::vector<std::pair<StandardLine, StandardLine>> pairs;
  if (!c.u1.empty() || !c.u2.empty()) {
    if (c.u1.empty() || c.u2.empty()) throw ValidationError("gaps needs both --u1 and --u2");
    pairs.emplace_back(a_line(p, c.u1), a_line(p, c.u2));
  } else {
    // the base line and the line below it, measured on each side
    const StandardLine base = a_line(p, "e");
    const StandardLine below = a_line(p, "T");
    pairs.emplace_back(base, below);
    pairs.emplace_back(below, base);
  }
  json measured = json::array();
  for (const auto& [u1, u2] : pairs) {
    GapReport r = gaps(g, u1, u2);
    json entry = to_json(r);
    entry.erase("schema");
    entry.erase("kind");
    entry["u1"] = to_string(u1.rep);
    entry["u2"] = to_string(u2.rep);
    measured.push_back(entry);
    if (!r.passed()) report.violate({"gap-mismatch", entry});
  }
  report.stats["gaps"] = measured;
  report.stats["radius"] = g.ball().radius();
  return report;
}

Report counts_check(const RunConfig& c, const BsParams& p, const LambdaGraph& g) {
  const StandardLine u1 = a_line(p, c.u1.empty() ? "t" : c.u1);
  const StandardLine u2 = a_line(p, c.u2.empty() ? "e" : c.u2);
  auto [v1, v2] = count_strongly_comparable(g, u1, u2);
  Report report;
  report.check = "counts";
  report.stats["V1"] = v1;
  report.stats["V2"] = v2;
  report.stats["q"] = p.q;
  report.stats["p"] = p.p;
  if (v1 != static_cast<std::size_t>(p.q) || v2 != static_cast<std::size_t>(p.p)) {
    report.violate({"count-mismatch", {{"u1", line_json(u1)}, {"u2", line_json(u2)}, {"V1", v1}, {"V2", v2}}});
  }
  return report;
}

Report adjacency_check(const RunConfig& c, const BsParams& p, const LambdaGraph& g) {
  const StandardLine u1 = a_line(p, c.u1.empty() ? "e" : c.u1);
  const StandardLine u2 = a_line(p, c.u2.empty() ? "t" : c.u2);
  AdjacencyOptions options;
  options.search_radius = c.search_radius;
  AdjacencyResult r = adjacency_predicate(g, u1, u2, options);
  const std::size_t distance = tree_distance(bass_serre_address(u1), bass_serre_address(u2));
  Report report = r.report;
  report.stats["tree_distance"] = distance;
  if (!r.witness.empty()) {
    json lines = json::array();
    for (const StandardLine& w : r.witness) lines.push_back(line_json(w));
    report.stats["witness_lines"] = lines;
  }
  if (r.predicate != (distance == 1)) {
    report.violate({"predicate-disagrees-with-tree", {{"predicate", r.predicate}, {"tree_distance", distance}}});
  }
  return report;
}

int bs_check_lemma(const RunConfig& c, std::ostream& out) {
  const BsParams p = bs_params(c);
  const int radius = radius_or(c, kLemmaRadius);
  if (c.lemma == "malnormal") {
    return emit(c, out, malnormal_check(ball(p, radius, {default_caps().vertices, c.threads}), c.exponent_bound));
  }
  LambdaGraph g = lambda_graph(ball(p, radius, {default_caps().vertices, c.threads}));
  Report report;
  if (c.lemma == "type-detection") {
    const Label label = c.line_type == 't' ? Label::t : Label::a;
    report = type_detection_witness(g, line_of(normalize(p, c.u1.empty() ? "e" : c.u1), label), c.search_bound);
  } else if (c.lemma == "gaps") {
    report = gaps_check(c, p, g);
  } else if (c.lemma == "containment") {
    report = containment_check(g, a_line(p, c.u1.empty() ? "T" : c.u1), a_line(p, c.u2.empty() ? "e" : c.u2),
                               a_line(p, c.u3.empty() ? "t" : c.u3));
  } else if (c.lemma == "adjacency") {
    report = adjacency_check(c, p, g);
  } else if (c.lemma == "counts") {
    report = counts_check(c, p, g);
  } else if (c.lemma == "tree") {
    report = tree_degree_check(g);
  } else if (c.lemma == "comparability") {
    report = comparability_check(g);
  } else {
    throw InternalError("unhandled check " + c.lemma);
  }
  report.stats["params"] = to_string(p);
  return emit(c, out, report);
}

// ---------------------------------------------------------------------------
// exotic

int exotic_verify(const RunConfig& c, std::ostream& out) {
  const ExoticParams params = make_exotic_params(c.exotic_n);
  const int radius = radius_or(c, (1 << c.exotic_n) + 4);
  return emit(c, out, verify_exotic(ball(make_params(1, 2), radius, {default_caps().vertices, c.threads}), params));
}

// ---------------------------------------------------------------------------
// higman and theta

DevelopedBall developed(const RunConfig& c) {
  BuildOptions options;
  options.threads = c.threads;
  return build_ball(parse_sigma(c.sigma), c.r, c.s, options);
}

std::string summary(const DevelopedBall& b) {
  std::size_t interior = 0;
  for (const HigVertex& v : b.vertices()) interior += v.interior;
  std::ostringstream text;
  text << "sigma " << to_string(b.sigma()) << " (r,s)=(" << b.r() << "," << b.s() << "): " << b.cells().size()
       << " cells, " << b.vertices().size() << " vertices (" << interior << " interior), " << b.edges().size()
       << " edges";
  return text.str();
}

int higman_ball(const RunConfig& c, std::ostream& out) {
  DevelopedBall b = developed(c);
  Sink sink(c, out);
  switch (c.format) {
    case OutputFormat::json: write_json(sink.stream(), to_json(b)); break;
    case OutputFormat::dot: sink.stream() << to_dot(b); break;
    case OutputFormat::text: sink.stream() << summary(b) << "\nsha256 " << ball_hash(b) << '\n'; break;
  }
  return exit_pass;
}

int higman_links(const RunConfig& c, std::ostream& out) {
  DevelopedBall b = developed(c);
  Report links = check_links(b, c.threads);
  Report quotient = check_quotient(b);
  Report report;
  report.check = "higman_links";
  merge_into(report, links);
  merge_into(report, quotient);
  report.stats["links"] = links.stats;
  report.stats["quotient"] = quotient.stats;
  report.stats["cells"] = b.cells().size();
  report.stats["vertices"] = b.vertices().size();
  report.stats["sha256"] = ball_hash(b);
  return emit(c, out, report);
}

int higman_fsigma(const RunConfig& c, std::ostream& out) {
  const Sigma sigma = parse_sigma(c.sigma);
  const FSigma f = f_sigma(sigma);
  Sink sink(c, out);
  if (c.format == OutputFormat::text) {
    sink.stream() << "F_sigma = {";
    for (std::size_t i = 0; i < f.translations.size(); ++i) sink.stream() << (i ? ", " : "") << f.translations[i];
    sink.stream() << "}, cyclic of order " << f.translations.size() << " in Z/" << f.k << '\n';
  } else {
    json doc = to_json(f);
    doc["order"] = f.translations.size();
    doc["generator"] = f.translations.size() > 1 ? f.translations[1] : 0;
    write_json(sink.stream(), doc);
  }
  return exit_pass;
}

Word conjugate_word(std::int64_t s, const BigInt& exponent) {
  return {Letter{Label::t, -s}, Letter{Label::a, exponent}, Letter{Label::t, s}};
}

int higman_witness(const RunConfig& c, std::ostream& out) {
  const Sigma sigma = parse_sigma(c.sigma);
  CommonPowerWitness w = common_power_witness(sigma, c.i, c.s1, c.s2, c.bound);
  Report report;
  report.check = "common_power";
  report.stats["witness"] = to_json(w);
  const BsParams& group = vertex_group(sigma, c.i);
  for (auto [s, image] : {std::pair{w.s1, w.image1}, std::pair{w.s2, w.image2}}) {
    const std::optional<BigInt> z = subgroup_membership(normalize(group, conjugate_word(s, w.exponent)), Label::a);
    if (!z || *z != image) {
      report.violate({"conjugate-not-a-power", {{"s", s}, {"claimed", to_decimal(image)}}});
    }
  }
  return emit(c, out, report);
}

int theta_build(const RunConfig& c, std::ostream& out) {
  DevelopedBall b = developed(c);
  ThetaBall t = theta(b);
  Sink sink(c, out);
  switch (c.format) {
    case OutputFormat::json: write_json(sink.stream(), to_json(t)); break;
    case OutputFormat::dot: sink.stream() << to_dot(b, t); break;
    case OutputFormat::text: sink.stream() << summary(b) << "\nTheta: " << t.edge_count() << " edges\n"; break;
  }
  return exit_pass;
}

int theta_cycles(const RunConfig& c, std::ostream& out) {
  DevelopedBall b = developed(c);
  ThetaBall t = theta(b);
  const std::vector<std::uint32_t> region = deep_region(b, c.margin);
  const std::size_t k = c.k ? c.k : b.k();
  std::vector<Cycle> cycles = induced_cycles(t, k, region, default_caps().cycles, c.threads);
  Sink sink(c, out);
  if (c.format == OutputFormat::text) {
    sink.stream() << cycles.size() << " induced " << k << "-cycles among " << region.size() << " vertices\n";
    for (const Cycle& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) sink.stream() << (i ? " " : "") << cycle[i];
      sink.stream() << '\n';
    }
  } else {
    json doc = cycles_to_json(cycles);
    doc["k"] = k;
    doc["margin"] = c.margin;
    doc["region_vertices"] = region.size();
    write_json(sink.stream(), doc);
  }
  return exit_pass;
}

int theta_verify(const RunConfig& c, std::ostream& out) {
  DevelopedBall b = developed(c);
  ThetaBall t = theta(b);
  Report r = verify_correspondence(b, t, deep_region(b, c.margin), c.threads);
  r.stats["margin"] = c.margin;
  return emit(c, out, r);
}

int theta_equivariance_cmd(const RunConfig& c, std::ostream& out) {
  DevelopedBall b = developed(c);
  ThetaBall t = theta(b);
  Report r = theta_equivariance(b, t, c.tau, c.force);
  r.stats["tau"] = c.tau;
  return emit(c, out, r);
}

}  // namespace

std::string lemma_name(const std::string& token) {
  auto it = lemma_aliases().find(token);
  return it == lemma_aliases().end() ? std::string() : it->second;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig config;
  CLI::App app("hgrig: finite verifications for Baumslag-Solitar and generalized Higman groups", "hgrig");
  build_app(app, config);
  app.parse(reversed(args));
  validate(config);
  return config;
}

int execute(const RunConfig& c, std::ostream& out, std::ostream&) {
  using Handler = int (*)(const RunConfig&, std::ostream&);
  static const std::map<std::pair<std::string, std::string>, Handler> handlers = {
      {{"bs", "ball"}, bs_ball},
      {{"bs", "lambda"}, bs_lambda},
      {{"bs", "gaps"}, bs_gaps},
      {{"bs", "order"}, bs_order},
      {{"bs", "check-lemma"}, bs_check_lemma},
      {{"exotic", "verify"}, exotic_verify},
      {{"higman", "ball"}, higman_ball},
      {{"higman", "links"}, higman_links},
      {{"higman", "fsigma"}, higman_fsigma},
      {{"higman", "witness"}, higman_witness},
      {{"theta", "build"}, theta_build},
      {{"theta", "cycles"}, theta_cycles},
      {{"theta", "verify"}, theta_verify},
      {{"theta", "equivariance"}, theta_equivariance_cmd},
  };
  auto it = handlers.find({c.command, c.subcommand});
  if (it == handlers.end()) throw ValidationError("unknown command " + c.command + " " + c.subcommand);
  return it->second(c, out);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app("hgrig: finite verifications for Baumslag-Solitar and generalized Higman groups", "hgrig");
  build_app(app, config);
  try {
    app.parse(reversed(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_pass : exit_usage;
  }
  try {
    validate(config);
    return execute(config, out, err);
  } catch (const ValidationError& e) {
    err << "hgrig: " << e.what() << '\n';
    return exit_usage;
  } catch (const TruncationError& e) {
    err << "hgrig: inconclusive: " << e.what() << '\n';
    return exit_truncation;
  } catch (const ResourceCapError& e) {
    err << "hgrig: resource cap: " << e.what() << '\n';
    return exit_cap;
  } catch (const InternalError& e) {
    err << "hgrig: internal error: " << e.what() << '\n';
    return exit_violation;
  }
}

}  // namespace hgrig
