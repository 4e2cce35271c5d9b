// Acceptance suite: one line per criterion, exit status 0 iff all pass.
//
//   acceptance            run every criterion
//   acceptance 3 5        run the listed criteria

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <unistd.h>

#include "hgrig/bs_lemmas.hpp"
#include "hgrig/error.hpp"
#include "hgrig/exotic.hpp"
#include "hgrig/serialize.hpp"
#include "oracles.hpp"

using namespace hgrig;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
};

// Tolerances and scales, pinned.
constexpr int kWordsPerGroup = 10000;
constexpr std::size_t kMaxWordLength = 16;
constexpr int kTriples = 1000;
constexpr double kNormalFormSeconds = 10.0;
constexpr int kLemmaRadius = 8;
constexpr double kHigmanSeconds = 60.0;
constexpr int kHigmanR = 2;
constexpr int kHigmanS = 3;
constexpr int kDeepMargin = 1;
constexpr std::int64_t kConjugateBound = 3;
const char* const kClassical = "1,2;1,2;1,2;1,2;1,2";

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join_counts(const std::map<std::string, std::size_t>& counts) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, value] : counts) {
    out << (first ? "" : ", ") << key << "=" << value;
    first = false;
  }
  return out.str();
}

/// Ordered a-node pairs (lower, upper) met by one visible t-line, distance <= max_d.
std::set<std::pair<std::uint32_t, std::uint32_t>> visible_strong_pairs(const LambdaGraph& g, std::size_t max_d) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t node = 0; node < g.nodes().size(); ++node) {
    if (g.nodes()[node].label != Label::t) continue;
    const auto& pts = g.points(node);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (static_cast<std::size_t>(g.t_offset(pts[j]) - g.t_offset(pts[i])) > max_d) break;
        pairs.emplace(g.node_of(pts[i], Label::a), g.node_of(pts[j], Label::a));
      }
    }
  }
  return pairs;
}

// ---------------------------------------------------------------------------

Outcome normal_form_suite() {
  const auto start = Clock::now();
  std::size_t failures = 0;
  std::mt19937_64 rng(20240601);
  for (auto [m, n] : {std::pair{1, 2}, {2, 3}, {2, 4}, {2, -3}}) {
    const BsParams p = make_params(m, n);
    std::vector<std::pair<Word, BsElement>> sample;
    sample.reserve(kWordsPerGroup);
    for (int i = 0; i < kWordsPerGroup; ++i) {
      Word w = testing::random_word(rng, kMaxWordLength);
      BsElement x = normalize(p, w);
      if (normalize(p, render(x)) != x) ++failures;
      if (!is_identity(normalize(p, testing::concat(w, inverse(w))))) ++failures;
      if (normalize_by_pinch_reduction(p, w, PinchOrder::leftmost) != x) ++failures;
      if (normalize_by_pinch_reduction(p, w, PinchOrder::rightmost) != x) ++failures;
      sample.emplace_back(std::move(w), std::move(x));
    }
    std::uniform_int_distribution<std::size_t> pick(0, sample.size() - 1);
    for (int i = 0; i < kTriples; ++i) {
      const BsElement& x = sample[pick(rng)].second;
      const BsElement& y = sample[pick(rng)].second;
      const BsElement& z = sample[pick(rng)].second;
      if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z))) ++failures;
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << failures << " failures over 4 groups x " << kWordsPerGroup << " words, " << elapsed << " s";
  return {failures == 0 && elapsed < kNormalFormSeconds, detail.str()};
}

Outcome tree_structure() {
  LambdaGraph g = lambda_graph(ball(make_params(2, 3), 6));
  Report r = tree_degree_check(g);
  std::ostringstream detail;
  detail << "fully visible vertices " << r.stats["fully_visible"] << ", status " << to_string(r.status);
  return {r.status == Status::pass && r.stats["fully_visible"].get<std::size_t>() > 0, detail.str()};
}

Outcome gap_formula() {
  bool ok = true;
  std::map<std::string, std::size_t> measured;
  std::size_t skipped = 0;

  const BsParams p24 = make_params(2, 4);
  LambdaGraph g24 = lambda_graph(ball(p24, kLemmaRadius));
  const StandardLine e24 = line_of(BsElement(p24), Label::a);
  const StandardLine below24 = line_of(normalize(p24, "T"), Label::a);
  GapReport lower = gaps(g24, e24, below24);
  GapReport upper = gaps(g24, below24, e24);
  ok = ok && lower.passed() && lower.measured_gap == 4 && upper.passed() && upper.measured_gap == 2;

  const BsParams p23 = make_params(2, 3);
  LambdaGraph g = lambda_graph(ball(p23, kLemmaRadius));
  std::size_t oracle_mismatch = 0;
  for (auto [lo, hi] : visible_strong_pairs(g, 2)) {
    const StandardLine& low = g.nodes()[lo];
    const StandardLine& high = g.nodes()[hi];
    for (bool measure_low : {true, false}) {
      const StandardLine& u1 = measure_low ? high : low;
      const StandardLine& u2 = measure_low ? low : high;
      GapReport r;
      try {
        r = gaps(g, u1, u2);
      } catch (const TruncationError&) {
        ++skipped;
        continue;
      }
      ++measured[r.direction + "/d" + std::to_string(r.d)];
      if (!r.passed()) ok = false;
      // brute force: every visible intersection lies on the same progression
      auto n1 = g.find_node(u1);
      auto n2 = g.find_node(u2);
      std::vector<BigInt> positions;
      for (std::uint32_t v : g.points(*n2)) {
        if (g.meeting(*n1, g.node_of(v, Label::t))) positions.push_back(g.ball().vertices()[v].tail());
      }
      BigInt spacing = 0;
      for (std::size_t i = 1; i < positions.size(); ++i) spacing = gcd(spacing, positions[i] - positions[0]);
      if (spacing % r.formula_gap != 0) ++oracle_mismatch;
    }
  }
  ok = ok && oracle_mismatch == 0 && measured.size() == 4;
  std::ostringstream detail;
  detail << "BS(2,4) gaps " << lower.measured_gap << "/" << upper.measured_gap << "; BS(2,3) measured "
         << join_counts(measured) << ", truncated " << skipped << ", oracle mismatches " << oracle_mismatch;
  return {ok, detail.str()};
}

Outcome containment() {
  bool ok = true;
  std::ostringstream detail;
  for (auto [m, n] : {std::pair{2, 3}, {2, 4}}) {
    const BsParams p = make_params(m, n);
    LambdaGraph g = lambda_graph(ball(p, kLemmaRadius));
    std::set<std::array<std::uint32_t, 3>> triples;
    for (std::uint32_t node = 0; node < g.nodes().size(); ++node) {
      if (g.nodes()[node].label != Label::t) continue;
      const auto& pts = g.points(node);
      for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
        for (std::size_t j = i + 1; j + 1 < pts.size() && j <= i + 2; ++j) {
          for (std::size_t k = j + 1; k < pts.size() && k <= j + 2; ++k) {
            triples.insert({g.node_of(pts[i], Label::a), g.node_of(pts[j], Label::a), g.node_of(pts[k], Label::a)});
          }
        }
      }
    }
    std::size_t certified = 0;
    std::size_t inconclusive = 0;
    std::size_t violations = 0;
    const std::string expected23 = p.p > 1 ? "strict" : "equal";
    for (const auto& t : triples) {
      Report r = containment_check(g, g.nodes()[t[0]], g.nodes()[t[1]], g.nodes()[t[2]]);
      if (r.status == Status::violation) {
        ++violations;
        continue;
      }
      if (r.status != Status::pass) {
        ++inconclusive;
        continue;
      }
      if (r.stats["lambda13_vs_lambda12"] != "strict" || r.stats["lambda13_vs_lambda23"] != expected23) {
        ++violations;
      }
      ++certified;
    }
    ok = ok && violations == 0 && certified > 0;
    detail << to_string(p) << ": " << certified << " certified (" << expected23 << "), " << inconclusive
           << " inconclusive, " << violations << " violations; ";
  }
  return {ok, detail.str()};
}

Outcome adjacency() {
  bool ok = true;
  std::ostringstream detail;
  for (auto [m, n] : {std::pair{2, 3}, {2, 4}}) {
    const BsParams p = make_params(m, n);
    LambdaGraph g = lambda_graph(ball(p, kLemmaRadius));
    std::map<std::string, std::size_t> certified;
    std::size_t undecided = 0;
    std::size_t mismatches = 0;
    for (std::uint32_t node = 0; node < g.nodes().size(); ++node) {
      const StandardLine& u = g.nodes()[node];
      if (u.label != Label::a) continue;
      // every visible line above u within distance 3
      std::vector<StandardLine> layer{u};
      for (std::size_t dist = 1; dist <= 3; ++dist) {
        std::vector<StandardLine> next;
        for (const StandardLine& x : layer) {
          for (StandardLine& w : tree_out_neighbors(x)) next.push_back(std::move(w));
        }
        layer = std::move(next);
        for (const StandardLine& w : layer) {
          if (!g.find_node(w)) continue;
          AdjacencyResult r;
          try {
            r = adjacency_predicate(g, u, w);
          } catch (const TruncationError&) {
            ++undecided;
            continue;
          }
          if (r.predicate != (dist == 1)) ++mismatches;
          ++certified["d" + std::to_string(dist)];
        }
      }
    }
    ok = ok && mismatches == 0 && certified.count("d1") && certified.count("d2");
    detail << to_string(p) << ": certified " << join_counts(certified) << ", undecided " << undecided
           << ", mismatches " << mismatches << "; ";
  }
  return {ok, detail.str()};
}

Outcome counts() {
  bool ok = true;
  std::ostringstream detail;
  for (auto [m, n] : {std::pair{2, 3}, {2, 4}}) {
    const BsParams p = make_params(m, n);
    LambdaGraph g = lambda_graph(ball(p, kLemmaRadius));
    std::size_t certified = 0;
    std::size_t wrong = 0;
    for (std::uint32_t node = 0; node < g.nodes().size(); ++node) {
      const StandardLine& u2 = g.nodes()[node];
      if (u2.label != Label::a) continue;
      for (const StandardLine& u1 : tree_out_neighbors(u2)) {
        if (!g.find_node(u1)) continue;
        try {
          auto [v1, v2] = count_strongly_comparable(g, u1, u2);
          ++certified;
          if (v1 != static_cast<std::size_t>(p.q) || v2 != static_cast<std::size_t>(p.p)) ++wrong;
        } catch (const TruncationError&) {
        }
      }
    }
    ok = ok && wrong == 0 && certified > 0;
    detail << to_string(p) << ": " << certified << " pairs give (" << p.q << "," << p.p << "), " << wrong
           << " differ; ";
  }
  return {ok, detail.str()};
}

Outcome malnormality() {
  Report r = malnormal_check(ball(make_params(2, 3), 6), 4);
  std::ostringstream detail;
  detail << r.stats["checks"] << " conjugates checked, " << r.stats.value("violations", 0) << " violations";
  return {r.status == Status::pass, detail.str()};
}


Outcome exotic() {
  bool ok = true;
  std::ostringstream detail;
  const BsParams p = make_params(1, 2);
  for (unsigned n : {0u, 1u, 2u}) {
    const ExoticParams e = make_exotic_params(n);
    const int radius = (1 << n) + 4;
    Report r = verify_exotic(ball(p, radius), e);
    const bool witnessed = r.witnesses.size() == 1 && r.witnesses[0].kind == "a-order-violation";
    ok = ok && r.status == Status::pass && witnessed;
    detail << "n=" << n << " radius " << radius << " " << to_string(r.status);
    if (witnessed && n == 1) {
      const json& w = r.witnesses[0].detail;
      const bool expected = w["x"]["word"] == "a" && w["y"]["word"] == "a^2" && w["phi_x"]["word"] == "a^3" &&
                            w["phi_y"]["word"] == "a^2";
      ok = ok && expected;
      detail << " witness (" << w["x"]["word"].get<std::string>() << ", " << w["y"]["word"].get<std::string>()
             << ") -> (" << w["phi_x"]["word"].get<std::string>() << ", " << w["phi_y"]["word"].get<std::string>()
             << ")";
    }
    detail << "; ";
  }
  return {ok, detail.str()};
}

Outcome higman_development() {
  const auto start = Clock::now();
  const Sigma sigma = parse_sigma(kClassical);
  BuildOptions serial;
  DevelopedBall b = build_ball(sigma, kHigmanR, kHigmanS, serial);
  Report links = check_links(b, 2);
  Report quotient = check_quotient(b);
  const std::string hash = ball_hash(b);
  BuildOptions parallel;
  parallel.threads = 2;
  const std::string again = ball_hash(build_ball(sigma, kHigmanR, kHigmanS, serial));
  const std::string threaded = ball_hash(build_ball(sigma, kHigmanR, kHigmanS, parallel));
  const double elapsed = seconds_since(start);
  const std::size_t interior = links.stats["interior_vertices"].get<std::size_t>();
  const bool ok = links.passed() && quotient.passed() && interior > 0 && hash == again && hash == threaded &&
                  elapsed < kHigmanSeconds;
  std::ostringstream detail;
  detail << b.cells().size() << " cells, " << interior << " interior links " << to_string(links.status)
         << " (girths " << links.stats["girth"].dump() << "), quotient " << to_string(quotient.status) << ", sha256 "
         << hash.substr(0, 12) << (hash == again && hash == threaded ? " stable" : " UNSTABLE") << ", " << elapsed
         << " s";
  return {ok, detail.str()};
}

Outcome cycle_correspondence() {
  const auto start = Clock::now();
  DevelopedBall b = build_ball(parse_sigma(kClassical), kHigmanR, kHigmanS, {default_caps().cells,
                                                                              default_caps().vertices, 2});
  ThetaBall t = theta(b);
  const std::vector<std::uint32_t> region = deep_region(b, kDeepMargin);
  Report r = verify_correspondence(b, t, region, 2);
  const std::size_t cycles = r.stats["induced_cycles"].get<std::size_t>();
  const std::size_t cells = r.stats["cells_in_region"].get<std::size_t>();
  bool ok = r.passed() && cycles == cells && cells > 0 && r.stats["cycles_matched"] == cycles &&
            r.stats["cells_matched"] == cells;

  // fault injection: drop one side of the base cell
  const auto& base = b.cells()[DevelopedBall::base_cell].vertices;
  ThetaBall broken = t;
  broken.remove_edge(base[0], base[1]);
  Report bad = verify_correspondence(b, broken, region, 2);
  const bool detected = bad.status == Status::violation && !bad.witnesses.empty() &&
                        bad.witnesses[0].detail.contains("cell");
  const double elapsed = seconds_since(start);
  ok = ok && detected && elapsed < kHigmanSeconds;
  std::ostringstream detail;
  detail << "margin " << kDeepMargin << ": " << region.size() << " vertices, " << cycles << " induced 5-cycles, "
         << cells << " cells, both directions " << to_string(r.status) << "; removed edge (" << base[0] << ","
         << base[1] << ") " << (detected ? "detected: " + bad.witnesses[0].kind : std::string("NOT detected")) << ", "
         << elapsed << " s";
  return {ok, detail.str()};
}

Outcome common_powers() {
  const Sigma sigma = parse_sigma(kClassical);
  std::size_t checked = 0;
  std::size_t failures = 0;
  BigInt largest = 0;
  for (std::size_t i = 0; i < sigma.k(); ++i) {
    const BsParams& p = vertex_group(sigma, i);
    auto conjugate = [&](std::int64_t s, const BigInt& N) {
      return subgroup_membership(normalize(p, Word{{Label::t, -s}, {Label::a, N}, {Label::t, s}}), Label::a);
    };
    for (std::int64_t s1 = -kConjugateBound; s1 <= kConjugateBound; ++s1) {
      for (std::int64_t s2 = -kConjugateBound; s2 <= kConjugateBound; ++s2) {
        if (s1 == s2) continue;
        CommonPowerWitness w = common_power_witness(sigma, i, s1, s2, kConjugateBound);
        ++checked;
        largest = std::max(largest, w.exponent);
        const auto z1 = conjugate(s1, w.exponent);
        const auto z2 = conjugate(s2, w.exponent);
        bool ok = w.exponent > 0 && w.witness == power_of(p, Label::a, w.exponent) && z1 && z2 &&
                  *z1 == w.image1 && *z2 == w.image2;
        // minimality by scanning the smaller exponents
        for (BigInt N = 1; ok && N < w.exponent; ++N) ok = !(conjugate(s1, N) && conjugate(s2, N));
        if (!ok) ++failures;
      }
    }
  }
  std::ostringstream detail;
  detail << checked << " witnesses over 5 vertex types, " << failures << " failures, largest exponent " << largest;
  return {failures == 0 && checked == 5 * 42, detail.str()};
}

template <class T, class To, class From>
bool round_trip(const T& value, To to, From from) {
  return from(json::parse(to(value).dump())) == value;
}

Outcome serialization() {
  std::vector<std::string> failed;
  auto check = [&](const char* name, bool ok) {
    if (!ok) failed.push_back(name);
  };
  const BsParams p = make_params(2, -3);
  const BsElement x = normalize(p, "t a^5 T a^-7 t t a^12345678901234567890");
  const CayleyBall cb = ball(p, 4);
  const LambdaGraph lg = lambda_graph(cb);
  const BsParams p24 = make_params(2, 4);
  const GapReport gr = gaps(lambda_graph(ball(p24, kLemmaRadius)), line_of(BsElement(p24), Label::a),
                            line_of(normalize(p24, "T"), Label::a));
  const Sigma sigma = parse_sigma("2,3;1,2;2,-3;1,3;1,2");
  const DevelopedBall db = build_ball(sigma, 2, 1);
  const ThetaBall tb = theta(db);
  const std::vector<Cycle> cycles = induced_cycles(tb, 5, deep_region(db, 1));
  const LinkGraph link = link_of(db, db.cells()[0].vertices[0]);
  const CommonPowerWitness w = common_power_witness(sigma, 3, -2, 3, 3);
  Report report = check_links(db);
  report.violate({"example", {{"vertex", 1}}});

  check("params", round_trip(p, [](auto& v) { return to_json(v); }, params_from_json));
  check("element", round_trip(x, [](auto& v) { return to_json(v); }, [&](const json& j) { return element_from_json(p, j); }));
  check("line", round_trip(line_of(x, Label::t), [](auto& v) { return to_json(v); },
                           [&](const json& j) { return line_from_json(p, j); }));
  check("tree_vertex", round_trip(tree_vertex_of(x), [](auto& v) { return to_json(v); }, tree_vertex_from_json));
  check("cayley_ball", round_trip(cb, [](auto& v) { return to_json(v); }, cayley_ball_from_json));
  check("lambda_graph", round_trip(lg, [](auto& v) { return to_json(v); }, lambda_graph_from_json));
  check("gap_report", round_trip(gr, [](auto& v) { return to_json(v); }, gap_report_from_json));
  check("sigma", round_trip(sigma, [](auto& v) { return to_json(v); }, sigma_from_json));
  check("f_sigma", round_trip(f_sigma(sigma), [](auto& v) { return to_json(v); }, f_sigma_from_json));
  check("developed_ball", round_trip(db, [](auto& v) { return to_json(v); }, developed_ball_from_json));
  check("theta_ball", round_trip(tb, [](auto& v) { return to_json(v); }, theta_from_json));
  check("cycles", round_trip(cycles, cycles_to_json, cycles_from_json));
  check("report", round_trip(report, report_document, report_from_document));
  const LinkGraph link_back = link_graph_from_json(json::parse(to_json(link).dump()));
  check("link_graph", link_back.vertex == link.vertex && link_back.nodes == link.nodes && link_back.out == link.out &&
                          link_back.links == link.links && link_back.link_cells == link.link_cells);
  const CommonPowerWitness w_back = common_power_witness_from_json(sigma, json::parse(to_json(w).dump()));
  check("common_power_witness", w_back.i == w.i && w_back.s1 == w.s1 && w_back.s2 == w.s2 &&
                                    w_back.exponent == w.exponent && w_back.witness == w.witness &&
                                    w_back.image1 == w.image1 && w_back.image2 == w.image2);
  const std::size_t types = 15;

  // DOT through an independent parser
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("hgrig_dot_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const CayleyBall small = ball(p, 3);
  const LambdaGraph small_lambda = lambda_graph(small);
  const DevelopedBall hig = build_ball(parse_sigma(kClassical), 1, 2);
  const ThetaBall hig_theta = theta(hig);
  struct DotFile {
    std::string name;
    std::string text;
    std::size_t nodes;
    std::size_t edges;
  };
  const std::vector<DotFile> files = {
      {"cayley_ball.dot", to_dot(small), small.size(), small.edges().size()},
      {"lambda.dot", to_dot(small_lambda), small_lambda.nodes().size(), small_lambda.links().size()},
      {"developed_ball.dot", to_dot(hig), hig.vertices().size(), hig.edges().size()},
      {"theta.dot", to_dot(hig, hig_theta), hig.vertices().size(), hig_theta.edge_count()},
  };
  std::string command = std::string(HGRIG_PYTHON) + " " + HGRIG_DOT_CHECKER;
  for (const DotFile& f : files) {
    const fs::path path = dir / f.name;
    std::ofstream(path) << f.text;
    command += " " + path.string() + ":" + std::to_string(f.nodes) + ":" + std::to_string(f.edges);
  }
  command += " > " + (dir / "check.log").string() + " 2>&1";
  const bool dot_ok = std::system(command.c_str()) == 0;
  std::ifstream log(dir / "check.log");
  std::string log_text((std::istreambuf_iterator<char>(log)), std::istreambuf_iterator<char>());
  fs::remove_all(dir);

  std::ostringstream detail;
  detail << (types - failed.size()) << "/" << types << " artifact types round-trip";
  for (const std::string& name : failed) detail << " FAIL:" << name;
  detail << "; pydot parsed " << files.size() << " DOT exports " << (dot_ok ? "with matching counts" : "FAILED");
  if (!dot_ok) detail << " [" << log_text << "]";
  return {failed.empty() && dot_ok, detail.str()};
}


}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "normal-form suite", normal_form_suite},
      {2, "tree structure of BS(2,3)", tree_structure},
      {3, "gap formula", gap_formula},
      {4, "containment along chains", containment},
      {5, "adjacency predicate matches tree adjacency", adjacency},
      {6, "strongly comparable counts", counts},
      {7, "exotic bijection of BS(1,2)", exotic},
      {8, "Higman development links and quotient", higman_development},
      {9, "induced 5-cycles versus 2-cells", cycle_correspondence},
      {10, "malnormality of <t>", malnormality},
      {11, "common power witnesses", common_powers},
      {12, "serialization round trips and DOT", serialization},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));
  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("criterion %2d %s: %s [%s] (%.1f s)\n", c.id, outcome.pass ? "PASS" : "FAIL", c.title.c_str(),
                outcome.detail.c_str(), seconds_since(start));
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
