#include "orbitgr/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "orbitgr/cells.hpp"
#include "orbitgr/goldie.hpp"
#include "orbitgr/oracles.hpp"

namespace orbitgr {

using nlohmann::json;

std::vector<std::string> split_command_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool in_token = false, quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (c == '\\' && i + 1 < line.size()) {
      cur += line[++i];
      in_token = true;
    } else if (c == '"') {
      quoted = !quoted;
      in_token = true;
    } else if (!quoted && (c == ' ' || c == '\t' || c == '\r')) {
      if (in_token) out.push_back(cur);
      cur.clear();
      in_token = false;
    } else {
      cur += c;
      in_token = true;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in: " + std::string(line));
  if (in_token) out.push_back(cur);
  return out;
}

std::string weight_text(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i].str();
  return s;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Weight parse_symbolic_weight(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty weight");
  if (t.back() == 'a') {
    const std::string coef = t.substr(0, t.size() - 1);
    if (coef.empty() || coef == "+") return Weight::integral({1});
    if (coef == "-") return Weight::integral({-1});
    std::size_t used = 0;
    const int k = std::stoi(coef, &used);
    if (used != coef.size()) throw std::invalid_argument("bad symbolic weight: " + t);
    return Weight::integral({k});
  }
  return Weight::parse(t);
}

json character_to_json(const FormalCharacter& ch) {
  json num = json::array();
  for (const auto& [nu, c] : ch.numerator()) num.push_back({{"weight", weight_text(nu)}, {"coefficient", c.str()}});
  json den = json::array();
  for (const Weight& mu : ch.denominators()) den.push_back(weight_text(mu));
  return {{"theta", ch.theta()}, {"numerator", num}, {"denominators", den}};
}

namespace {

Rational parse_rational(std::string_view s) {
  const std::string t = trim(s);
  const auto slash = t.find('/');
  std::size_t used = 0;
  if (slash == std::string::npos) {
    const long long n = std::stoll(t, &used);
    if (used != t.size()) throw std::invalid_argument("bad rational: " + t);
    return Rational(n);
  }
  const std::string a = t.substr(0, slash), b = t.substr(slash + 1);
  const long long n = std::stoll(a, &used);
  if (used != a.size()) throw std::invalid_argument("bad rational: " + t);
  const long long d = std::stoll(b, &used);
  if (used != b.size() || d == 0) throw std::invalid_argument("bad rational: " + t);
  return Rational(n, d);
}

}  // namespace

FormalCharacter character_from_json(const json& j) {
  std::vector<Weight> den;
  for (const auto& d : j.at("denominators")) den.push_back(Weight::parse(d.get<std::string>()));
  FormalCharacter ch(j.at("theta").get<std::vector<int>>(), den);
  for (const auto& t : j.at("numerator"))
    ch.add_term(Weight::parse(t.at("weight").get<std::string>()), parse_rational(t.at("coefficient").get<std::string>()));
  return ch;
}

namespace {

struct Output {
  std::ostream& out;
  bool json_mode = false;
  std::string command;

  void emit(const json& result, const std::string& text) const {
    if (json_mode) out << json{{"command", command}, {"result", result}}.dump() << '\n';
    else out << text << '\n';
  }
};

using Action = std::function<int(Output&)>;

Family parse_family(const std::string& s) {
  const std::string t = trim(s);
  if (t == "A") return Family::A;
  if (t == "B") return Family::B;
  if (t == "C") return Family::C;
  if (t == "D") return Family::D;
  throw std::invalid_argument("family must be one of A, B, C, D: " + t);
}

GroupForm parse_form(const std::string& s) {
  if (s == "full") return GroupForm::Full;
  if (s == "adjoint") return GroupForm::Adjoint;
  if (s == "special") return GroupForm::Special;
  throw std::invalid_argument("form must be full, adjoint or special: " + s);
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string tableau_text(const std::vector<std::vector<int>>& t) {
  std::string s;
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (r) s += "/";
    for (std::size_t c = 0; c < t[r].size(); ++c) s += (c ? "," : "") + std::to_string(t[r][c]);
  }
  return s;
}

std::string character_text(const FormalCharacter& ch) {
  std::string num, den;
  for (const auto& [nu, c] : ch.numerator()) {
    if (!num.empty()) num += " + ";
    num += c.str() + " e^(" + weight_text(nu) + ")";
  }
  for (const Weight& mu : ch.denominators()) den += (den.empty() ? "" : " ") + std::string("(") + weight_text(mu) + ")";
  return "numerator: " + (num.empty() ? "0" : num) + "; denominators: " + (den.empty() ? "none" : den);
}

std::vector<Weight> parse_weight_list(const std::string& s) {
  std::vector<Weight> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!trim(item).empty()) out.push_back(parse_symbolic_weight(item));
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    std::size_t used = 0;
    out.push_back(std::stoi(t, &used));
    if (used != t.size()) throw std::invalid_argument("bad integer list: " + s);
  }
  return out;
}

void emit_character(const Output& o, const FormalCharacter& ch, int truncate) {
  json j = character_to_json(ch);
  std::string text;
  if (truncate >= 0) {
    std::vector<std::string> series;
    json js = json::array();
    for (const Rational& r : ch.graded_dimensions(truncate)) {
      series.push_back(r.str());
      js.push_back(r.str());
    }
    j["series"] = js;
    for (std::size_t i = 0; i < series.size(); ++i) text += (i ? "," : "") + series[i];
  } else {
    text = character_text(ch);
  }
  o.emit(j, text);
}

// Options shared by the character pipeline commands.
struct PipelineArgs {
  std::string type, levi, orbit = "zero", rho0;
  bool parallel = false;

  void bind(CLI::App* s) {
    s->add_option("--type", type, "ambient type, e.g. A2 or B2")->required();
    s->add_option("--levi", levi, "block Levi, e.g. \"1,1|0\"")->required();
    s->add_option("--orbit", orbit, "e on the Levi: zero or regular")->check(CLI::IsMember({"zero", "regular"}));
    s->add_option("--rho0", rho0, "regular dominant integral weight (default rho)");
    s->add_flag("--parallel", parallel, "build the KL table in parallel");
  }
  CharacterPipeline make() const {
    const LieType t = LieType::parse(type);
    const LeviDescriptor l = LeviDescriptor::parse(t.family, levi);
    const LeviNilpotent nil = orbit == "regular" ? LeviNilpotent::regular(l) : LeviNilpotent::zero(l);
    std::optional<Weight> r;
    if (!rho0.empty()) r = Weight::parse(rho0);
    return CharacterPipeline(t, nil, r, parallel ? Execution::Parallel : Execution::Serial);
  }
};

struct TripleArgs {
  std::int64_t dx = 1, dy = 1, abar = 0, ax = 0, ay = 0, axy = 1, dim_v = 1;

  void bind(CLI::App* s, bool with_dims) {
    if (with_dims) {
      s->add_option("--dx", dx, "d_x");
      s->add_option("--dy", dy, "d_y");
    }
    s->add_option("--Abar", abar, "|Abar| (default lcm(|A_x|, |A_y|))");
    s->add_option("--Ax", ax, "|A_x| (default |A_(x,y)|)");
    s->add_option("--Ay", ay, "|A_y| (default |A_(x,y)|)");
    s->add_option("--Axy", axy, "|A_(x,y)|");
    s->add_option("--dimV", dim_v, "dim V");
  }
  TripleData make() const {
    TripleData t;
    t.d_x = dx;
    t.d_y = dy;
    t.a_xy_order = axy;
    t.a_x_order = ax > 0 ? ax : axy;
    t.a_y_order = ay > 0 ? ay : axy;
    t.abar_order = abar > 0 ? abar : std::lcm(t.a_x_order, t.a_y_order);
    t.dim_v = dim_v;
    return t;
  }
};

json triple_json(const TripleData& t) {
  return {{"d_x", t.d_x},          {"d_y", t.d_y},          {"Abar", t.abar_order}, {"A_x", t.a_x_order},
          {"A_y", t.a_y_order},    {"A_xy", t.a_xy_order},  {"dimV", t.dim_v}};
}

int check_result(const Output& o, std::size_t mismatches, std::size_t compared) {
  o.emit({{"compared", compared}, {"mismatches", mismatches}, {"agree", mismatches == 0}},
         mismatches == 0 ? "agree (" + std::to_string(compared) + " compared)"
                         : "MISMATCH: " + std::to_string(mismatches) + " of " + std::to_string(compared));
  return mismatches == 0 ? 0 : 2;
}

int run_batch(const std::string& path, bool json_mode, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open batch file " + path);
  int worst = 0;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::vector<std::string> args = split_command_line(t);
    if (json_mode) args.insert(args.begin(), "--json");
    worst = std::max(worst, run_cli(args, out, err));
  }
  return worst;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"orbitgr: nilpotent orbits, Kazhdan-Lusztig data and W-algebra characters"};
  app.name("orbitgr");
  app.fallthrough();
  bool json_mode = false;
  std::string batch;
  app.add_flag("--json", json_mode, "emit one JSON object per result");
  app.add_option("--batch", batch, "run one request per line of FILE");

  std::map<const CLI::App*, Action> actions;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    return parent->add_subcommand(name, desc);
  };

  // positional holders
  std::string a1, a2, a3, a4;
  std::string form = "adjoint", side = "right", kind = "left", jset;
  bool check = false, parallel = false;
  int truncate = -1, depth = 10;

  // partition
  CLI::App* part = app.add_subcommand("partition", "partition combinatorics");
  part->require_subcommand(1);
  {
    auto* s = leaf(part, "transpose", "transpose partition");
    s->add_option("partition", a1)->required();
    actions[s] = [&](Output& o) {
      const Partition p = transpose(Partition::parse(a1));
      o.emit(p.str(), p.str());
      return 0;
    };
    s = leaf(part, "collapse", "B, C or D collapse of a partition");
    s->add_option("family", a1)->required();
    s->add_option("partition", a2)->required();
    actions[s] = [&](Output& o) {
      const Partition p = collapse(Partition::parse(a2), parse_family(a1));
      o.emit(p.str(), p.str());
      return 0;
    };
    s = leaf(part, "dominance", "compare two partitions of the same size");
    s->add_option("p", a1)->required();
    s->add_option("q", a2)->required();
    actions[s] = [&](Output& o) {
      const Partition p = Partition::parse(a1), q = Partition::parse(a2);
      if (p.size() != q.size()) throw DomainError("partitions of different sizes");
      const bool le = dominance_leq(p, q), ge = dominance_leq(q, p);
      const std::string r = le && ge ? "equal" : le ? "below" : ge ? "above" : "incomparable";
      o.emit(r, r);
      return 0;
    };
    s = leaf(part, "special", "whether a partition of the given type is special");
    s->add_option("type", a1)->required();
    s->add_option("partition", a2)->required();
    actions[s] = [&](Output& o) {
      const bool b = is_special(Partition::parse(a2), LieType::parse(a1));
      o.emit(b, bool_text(b));
      return 0;
    };
  }

  // orbit
  CLI::App* orb = app.add_subcommand("orbit", "nilpotent orbits");
  orb->require_subcommand(1);
  {
    auto* s = leaf(orb, "dim", "orbit dimension");
    s->add_option("label", a1, "e.g. B2:3,1,1")->required();
    actions[s] = [&](Output& o) {
      const int d = orbit_dimension(OrbitLabel::parse(a1));
      o.emit(d, std::to_string(d));
      return 0;
    };
    s = leaf(orb, "induce", "Lusztig-Spaltenstein induction from a block Levi");
    s->add_option("ambient", a1, "e.g. B3")->required();
    s->add_option("levi", a2, "e.g. \"1|2\"")->required();
    s->add_option("seed", a3, "orbit of the residual factor (default zero)");
    actions[s] = [&](Output& o) {
      const LieType t = LieType::parse(a1);
      const LeviDescriptor l = LeviDescriptor::parse(t.family, a2);
      const Partition seed = a3.empty() ? Partition::single_column(l.residual_natural_dim()) : Partition::parse(a3);
      const OrbitLabel r = ls_induce(t, l, seed);
      o.emit(r.str(), r.str());
      return 0;
    };
    s = leaf(orb, "dual", "Barbasch-Vogan-Spaltenstein dual of a special orbit");
    s->add_option("label", a1)->required();
    actions[s] = [&](Output& o) {
      const OrbitLabel r = bvs_dual(OrbitLabel::parse(a1));
      o.emit(r.str(), r.str());
      return 0;
    };
    s = leaf(orb, "rigid", "weakly rigid partition pattern");
    s->add_option("label", a1)->required();
    actions[s] = [&](Output& o) {
      const bool b = is_weakly_rigid_pattern(OrbitLabel::parse(a1));
      o.emit(b, bool_text(b));
      return 0;
    };
    s = leaf(orb, "component-group", "order of the component group A(e)");
    s->add_option("label", a1)->required();
    s->add_option("--form", form, "full, adjoint or special")->check(CLI::IsMember({"full", "adjoint", "special"}));
    actions[s] = [&](Output& o) {
      const long long n = component_group_order(OrbitLabel::parse(a1), parse_form(form));
      o.emit(n, std::to_string(n));
      return 0;
    };
    s = leaf(orb, "abv", "the weight h/2 of the dual orbit");
    s->add_option("label", a1)->required();
    actions[s] = [&](Output& o) {
      const std::string w = weight_text(abv_weight(OrbitLabel::parse(a1)));
      o.emit(w, w);
      return 0;
    };
    s = leaf(orb, "even", "whether the orbit is even");
    s->add_option("label", a1)->required();
    actions[s] = [&](Output& o) {
      const bool b = is_even_orbit(OrbitLabel::parse(a1));
      o.emit(b, bool_text(b));
      return 0;
    };
  }

  // weyl
  CLI::App* weyl = app.add_subcommand("weyl", "Weyl group elements");
  weyl->require_subcommand(1);
  {
    auto* s = leaf(weyl, "length", "Coxeter length");
    s->add_option("group", a1, "A2, B3, D4, I2(6)")->required();
    s->add_option("element", a2, "e, w0, [2,1,3] or s1s2")->required();
    actions[s] = [&](Output& o) {
      const WeylGroup g = WeylGroup::parse(a1);
      const int l = g.length(g.parse_element(a2));
      o.emit(l, std::to_string(l));
      return 0;
    };
    s = leaf(weyl, "bruhat", "whether x <= w in the Bruhat order");
    s->add_option("group", a1)->required();
    s->add_option("x", a2)->required();
    s->add_option("w", a3)->required();
    actions[s] = [&](Output& o) {
      const WeylGroup g = WeylGroup::parse(a1);
      const bool b = g.bruhat_leq(g.parse_element(a2), g.parse_element(a3));
      o.emit(b, bool_text(b));
      return 0;
    };
    s = leaf(weyl, "cosets", "minimal coset representatives");
    s->add_option("group", a1)->required();
    s->add_option("J", a2, "generators, e.g. \"1,2\"")->required();
    s->add_option("--side", side, "right (W/W_J) or left (W_J\\W)")->check(CLI::IsMember({"left", "right"}));
    actions[s] = [&](Output& o) {
      const WeylGroup g = WeylGroup::parse(a1);
      json j = json::array();
      std::string text;
      for (ElementId w : g.coset_min_reps(parse_mask(a2, g.rank()), side == "left" ? Side::Left : Side::Right)) {
        j.push_back(g.str(w));
        text += (text.empty() ? "" : " ") + g.str(w);
      }
      o.emit(j, text);
      return 0;
    };
  }

  // kl
  CLI::App* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomials");
  kl->require_subcommand(1);
  {
    auto* s = leaf(kl, "poly", "P_{x,w}");
    s->add_option("group", a1)->required();
    s->add_option("x", a2)->required();
    s->add_option("w", a3)->required();
    s->add_flag("--parallel", parallel);
    actions[s] = [&](Output& o) {
      const WeylGroup g = WeylGroup::parse(a1);
      const KLTable t(g, parallel ? Execution::Parallel : Execution::Serial);
      const KLPolynomial& p = t.poly(g.parse_element(a2), g.parse_element(a3));
      o.emit({{"coefficients", p.coeffs}, {"text", p.str()}}, p.str());
      return 0;
    };
    s = leaf(kl, "mu", "mu(x, w)");
    s->add_option("group", a1)->required();
    s->add_option("x", a2)->required();
    s->add_option("w", a3)->required();
    actions[s] = [&](Output& o) {
      const WeylGroup g = WeylGroup::parse(a1);
      const KLTable t(g);
      const int m = t.mu(g.parse_element(a2), g.parse_element(a3));
      o.emit(m, std::to_string(m));
      return 0;
    };
    auto row_out = [](const Output& o, const WeylGroup& g, const DecompositionRow& row) {
      json j = json::array();
      std::string text;
      for (const auto& [x, c] : row.entries) {
        j.push_back({{"element", g.str(x)}, {"coefficient", c}});
        text += (text.empty() ? "" : "\n") + g.str(x) + " " + std::to_string(c);
      }
      o.emit(j, text);
    };
    s = leaf(kl, "inverse", "L(w) as a combination of Verma modules");
    s->add_option("group", a1)->required();
    s->add_option("w", a2)->required();
    actions[s] = [&, row_out](Output& o) {
      const WeylGroup g = WeylGroup::parse(a1);
      const KLTable t(g);
      row_out(o, g, inverse_kl_decomposition(t, g.parse_element(a2)));
      return 0;
    };
    s = leaf(kl, "parabolic", "L(w) as a combination of parabolic Verma modules");
    s->add_option("group", a1)->required();
    s->add_option("w", a2)->required();
    s->add_option("J", a3, "generators, e.g. \"1\"")->required();
    actions[s] = [&, row_out](Output& o) {
      const WeylGroup g = WeylGroup::parse(a1);
      const KLTable t(g);
      row_out(o, g, parabolic_verma_decomposition(t, g.parse_element(a2), parse_mask(a3, g.rank())));
      return 0;
    };
  }

  // cells
  CLI::App* cel = app.add_subcommand("cells", "Kazhdan-Lusztig cells");
  cel->require_subcommand(1);
  {
    auto* s = leaf(cel, "compute", "left, right or two-sided cells");
    s->add_option("group", a1)->required();
    s->add_option("--kind", kind, "left, right or two-sided")->check(CLI::IsMember({"left", "right", "two-sided"}));
    actions[s] = [&](Output& o) {
      const WeylGroup g = WeylGroup::parse(a1);
      const KLTable t(g);
      const CellKind k = kind == "left" ? CellKind::Left : kind == "right" ? CellKind::Right : CellKind::TwoSided;
      const CellPartition cp = compute_cells(t, k);
      const bool type_a = !g.is_dihedral() && g.family() == Family::A;
      json cells = json::array();
      std::string text;
      const auto all = cp.cells();
      for (std::size_t c = 0; c < all.size(); ++c) {
        json elems = json::array();
        std::string line = "cell " + std::to_string(c) + ":";
        for (ElementId w : all[c]) {
          elems.push_back(g.str(w));
          line += " " + g.str(w);
        }
        json entry = {{"elements", elems}};
        if (type_a) {
          const RSKPair r = rsk_label(g, all[c].front());
          if (k == CellKind::Left) {
            entry["recording"] = tableau_text(r.recording);
            line += "  Q=" + tableau_text(r.recording);
          } else if (k == CellKind::Right) {
            entry["insertion"] = tableau_text(r.insertion);
            line += "  P=" + tableau_text(r.insertion);
          } else {
            const OrbitLabel orbit = cell_orbit_type_A(g, all[c]);
            entry["shape"] = r.shape().str();
            entry["orbit"] = orbit.str();
            line += "  shape=" + r.shape().str() + " orbit=" + orbit.str();
          }
        }
        cells.push_back(entry);
        text += (text.empty() ? "" : "\n") + line;
      }
      o.emit({{"kind", kind}, {"cells", cells}}, text);
      return 0;
    };
    s = leaf(cel, "rsk", "Robinson-Schensted tableaux of a type A element");
    s->add_option("group", a1)->required();
    s->add_option("element", a2)->required();
    actions[s] = [&](Output& o) {
      const WeylGroup g = WeylGroup::parse(a1);
      const RSKPair r = rsk_label(g, g.parse_element(a2));
      o.emit({{"P", tableau_text(r.insertion)}, {"Q", tableau_text(r.recording)}, {"shape", r.shape().str()}},
             "P=" + tableau_text(r.insertion) + " Q=" + tableau_text(r.recording));
      return 0;
    };
  }

  // char
  PipelineArgs pipe;
  std::string mu0, den, theta, lambda, w_text = "e";
  std::int64_t dim0 = 1;
  GroupFactors factors;
  CLI::App* chr = app.add_subcommand("char", "W-algebra category O characters");
  chr->require_subcommand(1);
  {
    auto* s = leaf(chr, "verma", "Verma character e^mu0 dim0 / prod (1 - e^mu)");
    s->add_option("--mu0", mu0, "highest weight on t")->required();
    s->add_option("--dim", dim0, "dimension of the top component");
    s->add_option("--den", den, "denominator weights separated by ';' (\"a\" means (1) in rank one)");
    s->add_option("--theta", theta, "theta coordinates (default all ones)");
    s->add_option("--truncate", truncate, "print graded dimensions to this depth");
    actions[s] = [&](Output& o) {
      const Weight m = parse_symbolic_weight(mu0);
      const std::vector<Weight> d = parse_weight_list(den);
      const std::vector<int> th = theta.empty() ? std::vector<int>(m.size(), 1) : parse_int_list(theta);
      emit_character(o, verma_character(m, dim0, th, d), truncate);
      return 0;
    };
    auto pipeline_cmd = [&](const std::string& name, const std::string& desc) {
      auto* c = leaf(chr, name, desc);
      pipe.bind(c);
      c->add_option("--truncate", truncate, "print graded dimensions to this depth");
      return c;
    };
    s = pipeline_cmd("parabolic-image", "image of the parabolic Verma module of highest weight lambda - rho");
    s->add_option("--lambda", lambda, "lambda in epsilon coordinates (default u rho0)");
    s->add_option("--u", w_text, "element u giving lambda = u rho0");
    actions[s] = [&](Output& o) {
      const CharacterPipeline p = pipe.make();
      const Weight lam = lambda.empty() ? p.act(p.group().parse_element(w_text), p.rho0()) : Weight::parse(lambda);
      emit_character(o, p.parabolic_verma_image(lam), truncate);
      return 0;
    };
    auto bind_factors = [&](CLI::App* c) {
      c->add_option("--w", w_text, "element w labelling L(w rho0)");
      c->add_option("--H0", factors.h0_order, "|H_0|");
      c->add_option("--Abar0", factors.abar0_order, "|Abar_0|");
      c->add_option("--dimV", factors.dim_v, "dim V");
    };
    s = pipeline_cmd("simple", "character of the simple module L(w rho0)");
    bind_factors(s);
    actions[s] = [&](Output& o) {
      const CharacterPipeline p = pipe.make();
      emit_character(o, p.simple_character(p.group().parse_element(w_text), factors), truncate);
      return 0;
    };
    s = pipeline_cmd("dim", "dimension of the simple module L(w rho0), or infinite");
    bind_factors(s);
    actions[s] = [&](Output& o) {
      const CharacterPipeline p = pipe.make();
      const auto d = finite_dimension(p.simple_character(p.group().parse_element(w_text), factors));
      if (d) o.emit(*d, std::to_string(*d));
      else o.emit("infinite", "infinite");
      return 0;
    };
  }

  // goldie
  TripleArgs triple;
  std::string pr_x = "1", pr_y = "1", pr = "1";
  CLI::App* gol = app.add_subcommand("goldie", "Goldie ranks, scale factors and multiplicities");
  gol->require_subcommand(1);
  {
    auto* s = leaf(gol, "scale", "z = dim V |A_y| / |A_(x,y)|");
    triple.bind(s, false);
    actions[s] = [&](Output& o) {
      const std::int64_t z = scale_factor(triple.make());
      o.emit(z, std::to_string(z));
      return 0;
    };
    s = leaf(gol, "mult", "d_x d_y |Abar| dim V / |A_(x,y)|");
    triple.bind(s, true);
    actions[s] = [&](Output& o) {
      const std::int64_t m = bimodule_multiplicity(triple.make());
      o.emit(m, std::to_string(m));
      return 0;
    };
    s = leaf(gol, "premet", "(pr_x / pr_y) |A_y| / |A_(x,y)| dim V");
    triple.bind(s, false);
    s->add_option("--prx", pr_x, "pr_x (rational)");
    s->add_option("--pry", pr_y, "pr_y (rational)");
    actions[s] = [&](Output& o) {
      const Rational z = scale_factor_via_premet(parse_rational(pr_x), parse_rational(pr_y), triple.make());
      o.emit(z.str(), z.str());
      return 0;
    };
    s = leaf(gol, "report", "dimension, Goldie rank, scale factor and multiplicity of L(w rho0)");
    pipe.bind(s);
    triple.bind(s, false);
    s->add_option("--w", w_text, "element w labelling L(w rho0)");
    s->add_option("--H0", factors.h0_order, "|H_0|");
    s->add_option("--Abar0", factors.abar0_order, "|Abar_0|");
    s->add_option("--pr", pr, "Premet ratio of the left cell (rational, default 1)");
    actions[s] = [&](Output& o) {
      const CharacterPipeline p = pipe.make();
      factors.dim_v = triple.dim_v;
      const GoldieReport r =
          goldie_report(p, p.group().parse_element(w_text), triple.make(), factors, parse_rational(pr));
      TripleData used = triple.make();
      used.d_x = used.d_y = r.dimension;
      json j = {{"w", p.group().str(r.w)},
                {"dimension", r.dimension},
                {"goldie_rank", r.goldie_rank.str()},
                {"pr", r.pr.str()},
                {"theorem_applies", r.theorem_applies},
                {"scale_factor", r.scale_factor},
                {"premet_scale_factor", r.premet_scale_factor.str()},
                {"multiplicity", r.multiplicity},
                {"triple", triple_json(used)}};
      if (!r.note.empty()) j["note"] = r.note;
      // the report is JSON in both modes
      o.out << (o.json_mode ? json{{"command", o.command}, {"result", j}}.dump() : j.dump()) << '\n';
      return 0;
    };
  }

  // oracle
  CLI::App* ora = app.add_subcommand("oracle", "brute-force reference computations");
  ora->require_subcommand(1);
  {
    auto* s = leaf(ora, "collapse", "dominance maximum over all partitions of the family below p");
    s->add_option("family", a1)->required();
    s->add_option("partition", a2)->required();
    s->add_flag("--check", check, "compare every partition of the same size with the constructive collapse");
    actions[s] = [&](Output& o) {
      const Family f = parse_family(a1);
      const Partition p = Partition::parse(a2);
      if (check) {
        std::size_t bad = 0, n = 0;
        for (const Partition& q : all_partitions(p.size())) {
          ++n;
          bad += !(oracle::collapse(q, f) == collapse(q, f));
        }
        return check_result(o, bad, n);
      }
      const Partition r = oracle::collapse(p, f);
      o.emit(r.str(), r.str());
      return 0;
    };
    s = leaf(ora, "kl", "P_{x,w} from the Hecke algebra bar involution");
    s->add_option("group", a1)->required();
    s->add_option("x", a2);
    s->add_option("w", a3);
    s->add_flag("--check", check, "compare the whole table with the recursion");
    actions[s] = [&](Output& o) {
      const WeylGroup g = WeylGroup::parse(a1);
      const auto table = oracle::kl_bar_involution(g);
      if (check) {
        const KLTable t(g);
        std::size_t bad = 0;
        for (ElementId w = 0; w < g.size(); ++w)
          for (ElementId x = 0; x < g.size(); ++x) bad += !(t.poly(x, w) == table[w][x]);
        return check_result(o, bad, static_cast<std::size_t>(g.size()) * g.size());
      }
      if (a2.empty() || a3.empty()) throw std::invalid_argument("oracle kl needs x and w (or --check)");
      const KLPolynomial& p = table[g.parse_element(a3)][g.parse_element(a2)];
      o.emit({{"coefficients", p.coeffs}, {"text", p.str()}}, p.str());
      return 0;
    };
    s = leaf(ora, "bruhat", "Bruhat order as the closure of reflection covers");
    s->add_option("group", a1)->required();
    s->add_option("x", a2);
    s->add_option("w", a3);
    s->add_flag("--check", check, "compare every pair with the descent recursion");
    actions[s] = [&](Output& o) {
      const WeylGroup g = WeylGroup::parse(a1);
      const auto leq = oracle::bruhat_reflection_closure(g);
      if (check) {
        std::size_t bad = 0;
        for (ElementId x = 0; x < g.size(); ++x)
          for (ElementId w = 0; w < g.size(); ++w) bad += (leq[x][w] != 0) != g.bruhat_leq(x, w);
        return check_result(o, bad, static_cast<std::size_t>(g.size()) * g.size());
      }
      if (a2.empty() || a3.empty()) throw std::invalid_argument("oracle bruhat needs x and w (or --check)");
      const bool b = leq[g.parse_element(a2)][g.parse_element(a3)] != 0;
      o.emit(b, bool_text(b));
      return 0;
    };
    s = leaf(ora, "pbw", "count PBW monomials by weight up to a theta depth");
    s->add_option("--den", den, "generator weights separated by ';'")->required();
    s->add_option("--theta", theta, "theta coordinates (default all ones)");
    s->add_option("--depth", depth, "depth bound");
    s->add_flag("--check", check, "compare with the expanded Verma character");
    actions[s] = [&](Output& o) {
      const std::vector<Weight> d = parse_weight_list(den);
      if (d.empty()) throw std::invalid_argument("no generator weights");
      const std::vector<int> th = theta.empty() ? std::vector<int>(d.front().size(), 1) : parse_int_list(theta);
      std::vector<std::vector<int>> ints;
      for (const Weight& mu : d) {
        if (!mu.is_integral()) throw DomainError("PBW weights must be integral");
        std::vector<int> v;
        for (int x : mu.doubled()) v.push_back(x / 2);
        ints.push_back(v);
      }
      const auto counts = oracle::pbw_monomial_count(ints, th, depth);
      if (check) {
        const auto series = verma_character(Weight(th.size()), 1, th, d).expand(depth);
        std::size_t bad = 0;
        for (const auto& [nu, c] : counts) {
          auto it = series.find(Weight::integral(nu));
          bad += it == series.end() || !(it->second == Rational(c));
        }
        bad += series.size() != counts.size();
        return check_result(o, bad, counts.size());
      }
      json j = json::array();
      std::string text;
      for (const auto& [nu, c] : counts) {
        const std::string w = weight_text(Weight::integral(nu));
        j.push_back({{"weight", w}, {"count", c}});
        text += (text.empty() ? "" : "\n") + w + " " + std::to_string(c);
      }
      o.emit(j, text);
      return 0;
    };
    s = leaf(ora, "component-group", "component group order by F2 linear algebra");
    s->add_option("label", a1)->required();
    s->add_option("--form", form)->check(CLI::IsMember({"full", "adjoint", "special"}));
    s->add_flag("--check", check, "compare every orbit of the same type with the closed formula");
    actions[s] = [&](Output& o) {
      const OrbitLabel l = OrbitLabel::parse(a1);
      const GroupForm f = parse_form(form);
      if (check) {
        std::size_t bad = 0, n = 0;
        for (const OrbitLabel& x : all_orbits(l.type)) {
          ++n;
          bad += oracle::component_group(x, f) != component_group_order(x, f);
        }
        return check_result(o, bad, n);
      }
      const long long c = oracle::component_group(l, f);
      o.emit(c, std::to_string(c));
      return 0;
    };
    s = leaf(ora, "centralizer", "dim z_g(e) from the kernel of ad(e) over gl_N");
    s->add_option("label", a1)->required();
    s->add_flag("--check", check, "compare every orbit of the same type with the dimension formula");
    actions[s] = [&](Output& o) {
      const OrbitLabel l = OrbitLabel::parse(a1);
      if (check) {
        std::size_t bad = 0, n = 0;
        for (const OrbitLabel& x : all_orbits(l.type)) {
          ++n;
          bad += oracle::centralizer_dimension_gl(x) != x.type.algebra_dim() - orbit_dimension(x);
        }
        return check_result(o, bad, n);
      }
      const int d = oracle::centralizer_dimension_gl(l);
      o.emit(d, std::to_string(d));
      return 0;
    };
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? 0 : 1;
    }
    if (!batch.empty()) {
      if (!app.get_subcommands().empty()) throw std::invalid_argument("--batch cannot be combined with a subcommand");
      return run_batch(batch, json_mode, out, err);
    }
    const CLI::App* cur = &app;
    std::string path;
    while (!cur->get_subcommands().empty()) {
      cur = cur->get_subcommands().front();
      path += (path.empty() ? "" : " ") + cur->get_name();
    }
    auto it = actions.find(cur);
    if (it == actions.end()) {
      err << app.help();
      return 1;
    }
    Output o{out, json_mode, path};
    return it->second(o);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace orbitgr
