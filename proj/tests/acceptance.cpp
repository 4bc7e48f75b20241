// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gcond/condense.hpp"
#include "gcond/formulas.hpp"
#include "random_graphs.hpp"

using namespace gcond;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << what;
    ok = ok && cond;
  }
};

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

// Runs the CLI binary; returns stdout and sets status to the exit code.
std::string run_cli(const std::string& args, int& status) {
  std::string cmd = shell_quote(GCOND_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

RingElem oracle(const PlaneBipartiteGraph& g) { return weighted_sum(g); }

// ---------------------------------------------------------------- criteria

Check aztec_counts() {
  Check c;
  for (int n = 0; n <= 5; ++n) {
    int status = 0;
    std::string out = run_cli("count aztec:" + std::to_string(n) + " --method all", status);
    std::string v = aztec_formula(n).str();
    c.expect(status == 0 && out == v + " " + v + " " + v + "\n", "three-way count at n=" + std::to_string(n));
  }
  for (int n = 0; n <= 64; ++n)
    c.expect(aztec_rec(n).value == aztec_formula(n), "recurrence vs formula at n=" + std::to_string(n));
  c.expect(aztec_rec(4).value == RingElem(1024), "T(4)");
  c.expect(aztec_rec(5).value == RingElem(32768), "T(5)");
  return c;
}

Check superposition_mechanics() {
  Check c;
  std::mt19937 rng(20240601);
  for (AnchorPattern p : {AnchorPattern::ACBD, AnchorPattern::ABCD, AnchorPattern::ABC_D, AnchorPattern::ALL4}) {
    int good = 0;
    for (int i = 0; i < 200; ++i) {
      PlaneBipartiteGraph g = testing::random_anchored_grid(rng, p);
      MechanicsReport rep = verify_superposition(g, *g.anchor());
      if (rep.holds && rep.products.holds && rep.pattern == p) ++good;
    }
    c.expect(good == 200, to_string(p) + ": " + std::to_string(good) + "/200 hold");
  }
  if (c.ok) c.note << "200 random graphs for each of 4 patterns";
  return c;
}

Check fibonacci_cassini() {
  Check c;
  for (int n = 2; n <= 10; ++n) {
    PlaneBipartiteGraph g = grid(2, n);
    const AnchorQuad& q = *g.anchor();
    IdentityReport rep = verify_bilinear(g, q);
    RingElem whole = oracle(g), inner = oracle(delete_vertices(g, quad_subset(q, 15)));
    RingElem sign = n % 2 == 0 ? RingElem(1) : RingElem(-1);
    c.expect(rep.holds, "grid identity at n=" + std::to_string(n));
    c.expect(whole == fibonacci(n + 1) && inner == fibonacci(n - 1), "corner counts at n=" + std::to_string(n));
    c.expect(whole * inner == fibonacci(n) * fibonacci(n) + sign, "Cassini at n=" + std::to_string(n));
  }
  for (int n = 2; n <= 8; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        FibonacciReport rep = verify_fibonacci_identity(n, i, j);
        c.expect(rep.holds, "general identity at n,i,j=" + std::to_string(n) + "," + std::to_string(i) + "," +
                                std::to_string(j));
      }
  return c;
}

Check holey_rectangles() {
  Check c;
  int cases = 0;
  for (int n = 3; n <= 4; ++n)
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b) {
        RingElem want(count_matchings(aztec_rectangle(n, std::make_pair(a, b))));
        c.expect(holey_rect_rec(n, a, b).value == want,
                 "R(" + std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b) + ")");
        ++cases;
      }
  if (c.ok) c.note << cases << " holes";
  return c;
}

Check pythagorean() {
  Check c;
  for (int n : {2, 4}) {
    PythagoreanReport rep = verify_pythagorean(n);
    c.expect(rep.holds, "sum of squares at n=" + std::to_string(n));
    c.expect(!rep.bilinear || rep.bilinear->holds, "four-anchor identity at n=" + std::to_string(n));
    if (n == 4 && c.ok) c.note << "n=4: " << rep.t1 << "^2 + " << rep.t2 << "^2 = " << rep.t3 << "^2";
  }
  return c;
}

Check placement() {
  Check c;
  int cases = 0;
  for (int n : {3, 4})
    for (const Domino& d : admissible_dominoes(n)) {
      PlacementReport rep = verify_placement_recurrence(n, d);
      c.expect(rep.counts_hold && rep.probabilities_hold, "domino at n=" + std::to_string(n));
      ++cases;
    }
  c.expect(cases > 0, "no admissible dominoes");
  if (c.ok) c.note << cases << " dominoes";
  return c;
}

Check weighted_aztec() {
  Check c;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(1, 6), den(1, 6), order(1, 3);
  for (int i = 0; i < 20; ++i) {
    std::map<std::pair<Cell, Cell>, RingElem> chosen;
    CellWeight w = [&](Cell a, Cell b) {
      auto key = a < b ? std::pair{a, b} : std::pair{b, a};
      auto it = chosen.find(key);
      if (it == chosen.end()) it = chosen.emplace(key, RingElem::rational(num(rng), den(rng))).first;
      return it->second;
    };
    AztecDiamond d = aztec_diamond(order(rng), w);
    c.expect(weighted_aztec_rec(d).value == oracle(d.graph), "random diamond " + std::to_string(i));
  }
  for (int n = 1; n <= 4; ++n) {
    std::vector<Weighting> ws = n % 2 ? std::vector{Weighting::Fortress1, Weighting::Fortress2}
                                      : std::vector{Weighting::Fortress3};
    for (Weighting w : ws) {
      AztecDiamond d = aztec_diamond(n, w);
      c.expect(weighted_aztec_rec(d).value == oracle(d.graph), to_string(w) + " at n=" + std::to_string(n));
    }
  }
  for (const FortressRow& row : fortress_rec(8)) {
    c.expect(row.a == fortress_formula(FortressKind::A, row.k), "A at k=" + std::to_string(row.k));
    c.expect(row.b == fortress_formula(FortressKind::B, row.k), "B at k=" + std::to_string(row.k));
    c.expect(row.c == fortress_formula(FortressKind::C, row.k), "C at k=" + std::to_string(row.k));
  }
  c.expect(fortress_rec(1)[0].c == RingElem::rational(5, 4), "C_2 = 5/4");
  c.expect(fortress_rec(1)[0].a == RingElem::rational(25, 16), "A_3 = 25/16");
  return c;
}

Check rectangle_embedding() {
  Check c;
  for (auto [h, w, want] : {std::array{2, 2, 2}, std::array{2, 3, 3}, std::array{2, 4, 5}, std::array{4, 4, 36}}) {
    RingElem direct(count_matchings(grid(h, w)));
    RingElem embedded = oracle(rectangle_in_aztec(h, w).diamond.graph);
    c.expect(direct == RingElem(want) && embedded == direct,
             std::to_string(h) + "x" + std::to_string(w) + " gives " + embedded.str());
  }
  return c;
}

Check macmahon() {
  Check c;
  for (int r = 0; r <= 4; ++r)
    for (int s = 0; s <= 4; ++s)
      for (int t = 0; t <= 4; ++t)
        c.expect(macmahon_rec(r, s, t).value == macmahon_P(r, s, t), "recurrence at " + std::to_string(r) +
                                                                        std::to_string(s) + std::to_string(t));
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; s <= 3; ++s)
      for (int t = 0; t <= 3; ++t)
        c.expect(oracle(hexagon_q(r, s, t)) == RingElem::q_power(r * s * (s - 1) / 2) * macmahon_P(r, s, t),
                 "hexagon at " + std::to_string(r) + std::to_string(s) + std::to_string(t));
  c.expect(eval_at_one(macmahon_P(2, 2, 2)) == RingElem(20), "P(2,2,2) at q=1");
  c.expect(RingElem(count_matchings(hexagon_q(2, 2, 2))) == RingElem(20), "hexagon (2,2,2) count");
  return c;
}

Check pp_relations() {
  Check c;
  int checked = 0;
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; s <= 3; ++s)
      for (int t = 0; t <= 3; ++t) {
        PpRelationsReport rep = verify_pp_relations(r, s, t);
        std::string at = std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t);
        for (const RelationCheck* rc : {&rep.first, &rep.second}) {
          if (!rc->applicable) continue;
          c.expect(rc->holds, "q-relation at " + at);
          ++checked;
        }
      }
  for (auto [r, s, t] : {std::array{2, 2, 2}, std::array{3, 2, 2}}) {
    PpRelationsReport rep = verify_pp_relations(r, s, t);
    c.expect(rep.limit_plain.applicable && rep.limit_shifted.applicable &&
                 rep.limit_plain.holds != rep.limit_shifted.holds,
             "q=1 variants at " + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t));
    if (r == 3 && c.ok)
      c.note << checked << " q-relation instances; at q=1 only the N(r-1,s,t+1) variant holds: "
             << (rep.limit_shifted.holds ? "yes" : "no");
  }
  return c;
}

Check tcpp() {
  Check c;
  for (int r = 0; r <= 4; ++r)
    for (int t = 0; t <= 3; ++t) {
      RingElem o(count_matchings(tcpp_region(r, t).graph));
      c.expect(tcpp_rec(r, t).value == o && tcpp_formula(r, t) == o,
               "N(" + std::to_string(r) + "," + std::to_string(r) + "," + std::to_string(2 * t) + ")");
    }
  for (int k = 0; k <= 6; ++k) {
    c.expect(tcpp_rec(k, 0).value == RingElem(1), "N(r,r,0)");
    c.expect(tcpp_rec(1, k).value == RingElem(1), "N(1,1,2t)");
  }
  return c;
}

Check determinism() {
  Check c;
  const std::vector<std::string> commands{
      "count aztec:4 --method all",
      "count aztec:5 --method all",
      "count aztec:3:fortress1",
      "count rect:4:2,2",
      "count hex:2,2,2",
      "count tcpp:4,3",
      "count rectembed:4,4",
      "wsum hex:2,2,1",
      "verify bilinear grid:2,6",
      "verify bilinear hex:2,2,1 --mechanics",
      "verify altcycle aztec:3",
      "verify pythagorean 4",
      "verify placement 4",
      "verify fibonacci 8 3 6",
      "verify pp-relations 2 2 2",
      "verify zeilberger 3 2 2",
      "table aztec 0..12",
      "table fortress 1..8",
      "table fibonacci 1..40",
      "table tcpp 0..4 0..3",
      "table rect 3..4",
      "table macmahon 0..2 0..2 0..2",
      "export hex:2,2,2",
      "prob aztec:3 4 9",
  };
  for (const auto& cmd : commands) {
    int s1 = 0, s2 = 0;
    std::string first = run_cli(cmd, s1), second = run_cli(cmd, s2);
    c.expect(!first.empty() && first == second && s1 == s2, "'" + cmd + "' differs between runs");
  }
  if (c.ok) c.note << commands.size() << " commands, each run twice";
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Check()> run;
    double limit_seconds;  // 0 means untimed
  };
  const std::vector<Criterion> criteria{
      {"Aztec diamond counts", aztec_counts, 10},
      {"superposition mechanics", superposition_mechanics, 60},
      {"Fibonacci and Cassini", fibonacci_cassini, 0},
      {"holey Aztec rectangles", holey_rectangles, 0},
      {"Pythagorean tromino relation", pythagorean, 300},
      {"placement recurrence", placement, 0},
      {"weighted Aztec diamonds", weighted_aztec, 0},
      {"rectangle embedding", rectangle_embedding, 0},
      {"MacMahon box formula", macmahon, 0},
      {"plane partition relations", pp_relations, 0},
      {"TCPP enumeration", tcpp, 0},
      {"CLI determinism", determinism, 0},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& cr = criteria[i];
    auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.note << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0 && secs >= cr.limit_seconds) {
      c.ok = false;
      c.note << " (over the " << cr.limit_seconds << " s budget)";
    }
    failed += c.ok ? 0 : 1;
    std::printf("%s %2zu %-30s %7.2fs  %s\n", c.ok ? "PASS" : "FAIL", i + 1, cr.name, secs, c.note.str().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
