#include "gcond/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "gcond/condense.hpp"
#include "gcond/formulas.hpp"
#include "gcond/oracle.hpp"
#include "gcond/regions.hpp"

namespace gcond {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError("expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw UsageError("expected an integer, got '" + s + "'");
  return v;
}

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    int v = to_int(s);
    return {v, v};
  }
  int lo = to_int(s.substr(0, dots)), hi = to_int(s.substr(dots + 2));
  if (lo > hi) throw UsageError("empty range '" + s + "'");
  return {lo, hi};
}

Cell parse_cell(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("cell must be x,y, got '" + s + "'");
  return {to_int(s.substr(0, comma)), to_int(s.substr(comma + 1))};
}

void need_params(const std::vector<std::string>& p, std::size_t lo, std::size_t hi, const std::string& what) {
  if (p.size() < lo || p.size() > hi) throw UsageError("usage: verify " + what);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- count

std::optional<RingElem> recurrence_value(const RegionSpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::AztecDiamond:
      if (spec.weighting == Weighting::Unit) return aztec_rec(p[0]).value;
      return weighted_aztec_rec(aztec_diamond(p[0], spec.weighting)).value;
    case Family::AztecRectangle: return holey_rect_rec(p[0], p[1], p[2]).value;
    case Family::HexagonQ:
      return RingElem::q_power(p[0] * p[1] * (p[1] - 1) / 2) * macmahon_rec(p[0], p[1], p[2]).value;
    case Family::TcppRegion: return tcpp_rec(p[0], p[1]).value;
    case Family::RectangleInAztec: return weighted_aztec_rec(rectangle_in_aztec(p[0], p[1]).diamond).value;
    case Family::Grid:
    case Family::TrominoRegion: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<RingElem> formula_value(const RegionSpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::AztecDiamond: {
      const int n = p[0];
      switch (spec.weighting) {
        case Weighting::Unit: return aztec_formula(n);
        case Weighting::Fortress1:
          if (n >= 3) return fortress_formula(FortressKind::A, (n - 1) / 2);
          return std::nullopt;
        case Weighting::Fortress2:
          if (n >= 3) return fortress_formula(FortressKind::B, (n - 1) / 2);
          return std::nullopt;
        case Weighting::Fortress3:
          if (n >= 2) return fortress_formula(FortressKind::C, n / 2);
          return std::nullopt;
        default: return std::nullopt;
      }
    }
    case Family::HexagonQ: return RingElem::q_power(p[0] * p[1] * (p[1] - 1) / 2) * macmahon_P(p[0], p[1], p[2]);
    case Family::TcppRegion: return tcpp_formula(p[0], p[1]);
    case Family::Grid: {
      int m = std::min(p[0], p[1]), n = std::max(p[0], p[1]);
      if (m == 1) return RingElem(n % 2 == 0 ? 1 : 0);
      if (m == 2) return fibonacci(n + 1);
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

int cmd_count(const std::string& region, const std::string& method, std::ostream& out, std::ostream& err) {
  RegionSpec spec = RegionSpec::parse(region);
  PlaneBipartiteGraph g = build_region(spec);
  auto oracle = [&] { return std::optional<RingElem>(weighted_sum(g)); };
  auto single = [&](std::optional<RingElem> v, const std::string& name) {
    if (!v) throw UsageError("no " + name + " method for region family " + to_string(spec.family));
    out << *v << '\n';
    return 0;
  };
  if (method == "oracle") return single(oracle(), "oracle");
  if (method == "rec") return single(recurrence_value(spec), "recurrence");
  if (method == "formula") return single(formula_value(spec), "formula");

  std::vector<std::optional<RingElem>> values{oracle()};
  try {
    values.push_back(recurrence_value(spec));
  } catch (const NotApplicable&) {
    values.emplace_back();
  }
  values.push_back(formula_value(spec));
  bool agree = true;
  std::optional<RingElem> first;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << (i ? " " : "");
    if (!values[i]) {
      out << "n/a";
      continue;
    }
    out << *values[i];
    if (!first) first = values[i];
    else if (!(*first == *values[i])) agree = false;
  }
  out << '\n';
  if (!agree) {
    err << "methods disagree for " << spec.str() << '\n';
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------- verify

void print_identity(const IdentityReport& rep, std::ostream& out) {
  out << "pattern " << to_string(rep.pattern) << '\n';
  for (const auto& [name, v] : rep.terms) out << name << " = " << v << '\n';
  out << "lhs " << rep.lhs << '\n' << "rhs " << rep.rhs << '\n' << "holds " << yes_no(rep.holds) << '\n';
}

PlaneBipartiteGraph graph_from_token(const std::string& token) {
  std::ifstream in(token);
  if (in) {
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
  }
  return build_region(RegionSpec::parse(token));
}

int verify_bilinear_cmd(const std::vector<std::string>& p, std::ostream& out) {
  need_params(p, 1, 2, "bilinear <region|graph-file> [--mechanics]");
  bool mechanics = p.size() == 2;
  if (mechanics && p[1] != "--mechanics") throw UsageError("unknown option '" + p[1] + "'");
  PlaneBipartiteGraph g = graph_from_token(p[0]);
  if (!g.anchor()) throw UsageError("graph has no anchor quad");
  if (!mechanics) {
    IdentityReport rep = verify_bilinear(g, *g.anchor());
    print_identity(rep, out);
    return rep.holds ? 0 : 1;
  }
  MechanicsReport rep = verify_superposition(g, *g.anchor());
  print_identity(rep.products, out);
  out << "superpositions " << rep.distinct_h << '\n'
      << "lhs_pairs " << rep.lhs_pairs << '\n'
      << "rhs_pairs " << rep.rhs_pairs << '\n'
      << "lhs_total " << rep.lhs_total << '\n'
      << "rhs_total " << rep.rhs_total << '\n'
      << "mechanics " << yes_no(rep.holds) << '\n';
  return rep.holds ? 0 : 1;
}

int verify_cmd(const std::string& identity, const std::vector<std::string>& p, std::ostream& out) {
  if (identity == "bilinear") return verify_bilinear_cmd(p, out);
  if (identity == "altcycle") {
    need_params(p, 1, 2, "altcycle <region> [face-index]");
    PlaneBipartiteGraph g = build_region(RegionSpec::parse(p[0]));
    int face = p.size() == 2 ? to_int(p[1]) : central_four_face(g);
    if (face < 0) throw UsageError("region has no 4-face");
    AltCycleReport rep = verify_alternating_cycle(g, face);
    out << "face " << rep.face[0] << ' ' << rep.face[1] << ' ' << rep.face[2] << ' ' << rep.face[3] << '\n'
        << "alternating " << rep.alternating << '\n'
        << "predicted " << rep.predicted << '\n'
        << "holds " << yes_no(rep.holds) << '\n';
    return rep.holds ? 0 : 1;
  }
  if (identity == "pythagorean") {
    need_params(p, 1, 1, "pythagorean <n>");
    int n = to_int(p[0]);
    if (n < 2 || n % 2) throw UsageError("pythagorean needs an even n >= 2");
    PythagoreanReport rep = verify_pythagorean(n);
    out << "t1 " << rep.t1 << '\n' << "t2 " << rep.t2 << '\n' << "t3 " << rep.t3 << '\n';
    out << "four_anchor_identity " << (rep.bilinear ? yes_no(rep.bilinear->holds) : "n/a") << '\n';
    out << "holds " << yes_no(rep.holds) << '\n';
    return rep.holds && (!rep.bilinear || rep.bilinear->holds) ? 0 : 1;
  }
  if (identity == "placement") {
    need_params(p, 1, 3, "placement <n> [x1,y1 x2,y2]");
    int n = to_int(p[0]);
    if (n < 3) throw UsageError("placement needs n >= 3");
    std::vector<Domino> ds;
    if (p.size() == 3) ds.push_back({parse_cell(p[1]), parse_cell(p[2])});
    else if (p.size() == 1) ds = admissible_dominoes(n);
    else throw UsageError("usage: verify placement <n> [x1,y1 x2,y2]");
    bool all = true;
    for (const auto& d : ds) {
      PlacementReport rep = verify_placement_recurrence(n, d);
      const auto& c = rep.counts;
      out << "domino " << d.a.x << ',' << d.a.y << ' ' << d.b.x << ',' << d.b.y << " counts " << c[0] << ' ' << c[1]
          << ' ' << c[2] << ' ' << c[3] << ' ' << c[4] << ' ' << c[5] << " probability " << rep.prob_lhs
          << " holds " << yes_no(rep.counts_hold && rep.probabilities_hold) << '\n';
      all = all && rep.counts_hold && rep.probabilities_hold;
    }
    out << "holds " << yes_no(all) << '\n';
    return all ? 0 : 1;
  }
  if (identity == "fibonacci") {
    need_params(p, 3, 3, "fibonacci <n> <i> <j>");
    int n = to_int(p[0]), i = to_int(p[1]), j = to_int(p[2]);
    if (!(1 <= i && i < j && j <= n)) throw UsageError("fibonacci needs 1 <= i < j <= n");
    FibonacciReport rep = verify_fibonacci_identity(n, i, j);
    print_identity(rep.bilinear, out);
    out << "closed_lhs " << rep.lhs << '\n' << "closed_rhs " << rep.rhs << '\n';
    return rep.holds ? 0 : 1;
  }
  if (identity == "pp-relations" || identity == "zeilberger") {
    need_params(p, 3, 3, identity + " <r> <s> <t>");
    int r = to_int(p[0]), s = to_int(p[1]), t = to_int(p[2]);
    if (r < 0 || s < 0 || t < 0) throw UsageError("indices must be nonnegative");
    PpRelationsReport rep = verify_pp_relations(r, s, t);
    auto show = [&](const char* name, const RelationCheck& c) {
      if (!c.applicable) {
        out << name << " n/a\n";
        return;
      }
      out << name << ' ' << yes_no(c.holds) << '\n';
    };
    if (identity == "pp-relations") {
      if (!rep.first.applicable && !rep.second.applicable) throw UsageError("no relation applies at these indices");
      show("first", rep.first);
      show("second", rep.second);
      bool ok = (!rep.first.applicable || rep.first.holds) && (!rep.second.applicable || rep.second.holds);
      return ok ? 0 : 1;
    }
    if (!rep.limit_plain.applicable) throw UsageError("zeilberger needs r >= 1 and s >= 1");
    out << "lhs " << rep.limit_plain.lhs << '\n';
    out << "rhs_plain " << rep.limit_plain.rhs << '\n';
    out << "rhs_shifted " << rep.limit_shifted.rhs << '\n';
    show("plain", rep.limit_plain);
    show("shifted", rep.limit_shifted);
    return rep.limit_plain.holds != rep.limit_shifted.holds ? 0 : 1;
  }
  throw UsageError("unknown identity '" + identity + "'");
}

// ---------------------------------------------------------------- table

int table_cmd(const std::string& family, const std::vector<std::string>& ranges, std::ostream& out) {
  auto need = [&](std::size_t k) {
    if (ranges.size() != k) throw UsageError("table " + family + " needs " + std::to_string(k) + " range(s)");
  };
  auto nonneg = [](std::pair<int, int> r, int min) {
    if (r.first < min) throw UsageError("range starts below " + std::to_string(min));
    return r;
  };
  if (family == "aztec") {
    need(1);
    auto [lo, hi] = nonneg(parse_range(ranges[0]), 0);
    for (int n = lo; n <= hi; ++n) out << n << ' ' << aztec_rec(n).value << '\n';
  } else if (family == "fibonacci") {
    need(1);
    auto [lo, hi] = nonneg(parse_range(ranges[0]), 1);
    for (int n = lo; n <= hi; ++n) out << n << ' ' << fibonacci(n) << '\n';
  } else if (family == "fortress") {
    need(1);
    auto [lo, hi] = nonneg(parse_range(ranges[0]), 1);
    for (const auto& row : fortress_rec(hi))
      if (row.k >= lo) out << row.k << ' ' << row.a << ' ' << row.b << ' ' << row.c << '\n';
  } else if (family == "tcpp") {
    need(2);
    auto [r0, r1] = nonneg(parse_range(ranges[0]), 0);
    auto [t0, t1] = nonneg(parse_range(ranges[1]), 0);
    for (int r = r0; r <= r1; ++r)
      for (int t = t0; t <= t1; ++t) out << r << ' ' << t << ' ' << tcpp_rec(r, t).value << '\n';
  } else if (family == "macmahon") {
    need(3);
    auto [r0, r1] = nonneg(parse_range(ranges[0]), 0);
    auto [s0, s1] = nonneg(parse_range(ranges[1]), 0);
    auto [t0, t1] = nonneg(parse_range(ranges[2]), 0);
    for (int r = r0; r <= r1; ++r)
      for (int s = s0; s <= s1; ++s)
        for (int t = t0; t <= t1; ++t) out << r << ' ' << s << ' ' << t << ' ' << macmahon_rec(r, s, t).value << '\n';
  } else if (family == "rect") {
    need(1);
    auto [lo, hi] = nonneg(parse_range(ranges[0]), 0);
    for (int n = lo; n <= hi; ++n)
      for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) out << n << ' ' << a << ' ' << b << ' ' << holey_rect_rec(n, a, b).value << '\n';
  } else {
    throw UsageError("unknown table family '" + family + "'");
  }
  return 0;
}

}  // namespace

CommandOutcome run_command(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CLI::App app{"Exact perfect-matching counts and condensation identities", "gcond"};
  app.require_subcommand(1);

  std::string region, method = "all", identity, family, out_file, u_text, v_text;
  std::vector<std::string> params, ranges;

  auto* count = app.add_subcommand("count", "Count matchings of a region by one or all methods");
  count->add_option("region", region, "Region, e.g. aztec:4 or rect:4:2,3")->required();
  count->add_option("--method", method, "oracle, rec, formula or all")
      ->check(CLI::IsMember({"oracle", "rec", "formula", "all"}));

  auto* wsum = app.add_subcommand("wsum", "Weighted sum of a region by enumeration");
  wsum->add_option("region", region)->required();

  auto* verify = app.add_subcommand("verify", "Check an identity");
  verify->add_option("identity", identity,
                     "bilinear, altcycle, pythagorean, placement, fibonacci, pp-relations or zeilberger")
      ->required();
  verify->add_option("params", params, "Identity parameters");
  verify->allow_extras(false);
  verify->prefix_command(false);

  auto* table = app.add_subcommand("table", "Tabulate a family by its recurrence");
  table->add_option("family", family, "aztec, fortress, fibonacci, tcpp, macmahon or rect")->required();
  table->add_option("range", ranges, "Ranges such as 0..10")->required();

  auto* exp = app.add_subcommand("export", "Write a region in the graph text format");
  exp->add_option("region", region)->required();
  exp->add_option("--out", out_file, "Output file");

  auto* prob = app.add_subcommand("prob", "Placement probability of an edge");
  prob->add_option("region", region)->required();
  prob->add_option("u", u_text)->required();
  prob->add_option("v", v_text)->required();

  // --mechanics belongs to verify's parameter list.
  std::vector<std::string> argv_store{"gcond"};
  for (const auto& a : args) argv_store.push_back(a == "--mechanics" ? "--" : a);
  bool mechanics = std::find(args.begin(), args.end(), "--mechanics") != args.end();
  if (mechanics) argv_store.erase(std::find(argv_store.begin(), argv_store.end(), "--"));
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  int status = 0;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (mechanics) params.push_back("--mechanics");
    if (*count) {
      status = cmd_count(region, method, out, err);
    } else if (*wsum) {
      out << weighted_sum(build_region(RegionSpec::parse(region))) << '\n';
    } else if (*verify) {
      status = verify_cmd(identity, params, out);
    } else if (*table) {
      status = table_cmd(family, ranges, out);
    } else if (*exp) {
      std::string text = serialize_graph(build_region(RegionSpec::parse(region)));
      if (out_file.empty()) {
        out << text;
      } else {
        std::ofstream f(out_file);
        if (!f) throw UsageError("cannot write " + out_file);
        f << text;
      }
    } else if (*prob) {
      out << placement_probability(build_region(RegionSpec::parse(region)), to_int(u_text), to_int(v_text)) << '\n';
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    status = code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    status = 2;
  } catch (const RegionError& e) {
    err << "error: " << e.what() << '\n';
    status = 2;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    status = 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    status = 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    status = 1;
  }
  return {status, out.str(), err.str()};
}

}  // namespace gcond
