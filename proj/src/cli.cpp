#include "circ2/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <map>
#include <sstream>

#include "circ2/circulant.hpp"
#include "circ2/closedform.hpp"
#include "circ2/digraph.hpp"
#include "circ2/serialize.hpp"
#include "circ2/untangle.hpp"
#include "circ2/verify.hpp"

namespace circ2::cli {

namespace {

struct RawOptions {
  std::int64_t n = 0, s1 = 0, s2 = 0;
  std::string a, b, format = "text", coeffs, pairs;
  bool dense = false, symbolic = false, dot = false, json = false;
  std::int64_t n_max = 10;
};

Rational parse_rational_arg(const std::string& text, const char* name) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

std::vector<Rational> parse_rational_list(const std::string& text, const char* name) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational_arg(item, name));
  if (out.empty()) throw UsageError(std::string("--") + name + ": empty list");
  return out;
}

// "2,3;1,-1" -> {(2,3), (1,-1)}
std::vector<std::pair<Rational, Rational>> parse_pairs(const std::string& text) {
  std::vector<std::pair<Rational, Rational>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto values = parse_rational_list(item, "pairs");
    if (values.size() != 2) throw UsageError("--pairs: each pair needs exactly two values, e.g. \"2,3;1,-1\"");
    if (values[0].is_zero() || values[1].is_zero()) throw UsageError("--pairs: a and b must be nonzero");
    out.emplace_back(values[0], values[1]);
  }
  if (out.empty()) throw UsageError("--pairs: empty list");
  return out;
}

TwoParamCirculant two_param(const Command& c) {
  if (!c.a || !c.b) throw UsageError("--a and --b are required");
  return TwoParamCirculant(c.n, c.s1, c.s2, *c.a, *c.b);
}

void validate_shape(const Command& c) {
  if (!(0 <= c.s1 && c.s1 < c.s2 && c.s2 < c.n)) {
    throw UsageError("expected 0 <= s1 < s2 < n (got n=" + std::to_string(c.n) + ", s1=" + std::to_string(c.s1) +
                     ", s2=" + std::to_string(c.s2) + ")");
  }
  if ((c.a && c.a->is_zero()) || (c.b && c.b->is_zero())) throw UsageError("--a and --b must be nonzero");
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].to_string();
  return s;
}

void print_json(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

int run_det(const Command& c, std::ostream& out) {
  const DetResult d = det_closed(two_param(c));
  if (c.format == Format::Json) {
    print_json(out, to_json(d));
  } else {
    out << "det: " << d.value << '\n'
        << "sign_exponent: " << d.sign_exponent << '\n'
        << "base: " << d.base << '\n'
        << "multiplicity: " << d.multiplicity << '\n';
  }
  return kExitOk;
}

int run_perm(const Command& c, std::ostream& out) {
  const Rational p = perm_closed(two_param(c));
  if (c.format == Format::Json) {
    print_json(out, {{"kind", "perm"}, {"value", to_json(p)}});
  } else {
    out << "perm: " << p << '\n';
  }
  return kExitOk;
}

void print_gen_inverse(const GenInverseResult& r, Format format, std::ostream& out) {
  if (format == Format::Json) {
    print_json(out, to_json(r));
  } else {
    out << "kind: " << to_string(r.kind) << '\n'
        << "scale: " << r.scale << '\n'
        << "coeffs: " << join(r.circ.coeffs()) << '\n';
  }
}

int run_rank(const Command& c, std::ostream& out) {
  const Circulant circ = c.coeffs.empty() ? two_param(c).to_circulant() : Circulant(c.coeffs);
  const std::int64_t r = rank_circulant(circ);
  if (c.format == Format::Json) {
    print_json(out, {{"kind", "rank"}, {"n", circ.order()}, {"value", r}});
  } else {
    out << "rank: " << r << '\n';
  }
  return kExitOk;
}

int run_untangle(const Command& c, std::ostream& out) {
  const UntangleResult u = sigma(c.n, c.s2 - c.s1);
  std::optional<DenseMatrix> dense;
  if (c.dense) dense = untangled_dense(two_param(c));

  if (c.format == Format::Json) {
    json j = {{"kind", "untangle"},
              {"sigma", to_json(u.sigma)},
              {"sigma_cycles", u.sigma.to_cycle_notation()},
              {"nu", to_json(u.nu)},
              {"nu_cycles", u.nu.to_cycle_notation()},
              {"block_count", u.block_count},
              {"block_size", u.block_size}};
    if (dense) j["dense"] = to_json(*dense);
    print_json(out, j);
  } else {
    out << "sigma: " << u.sigma.to_cycle_notation() << '\n'
        << "nu: " << u.nu.to_cycle_notation() << '\n'
        << "block_count: " << u.block_count << '\n'
        << "block_size: " << u.block_size << '\n';
    if (dense) out << *dense;
  }
  return kExitOk;
}

int run_digraph(const Command& c, std::ostream& out) {
  const TwoParamCirculant t = two_param(c);
  const WeightedDigraph g = build_digraph(t);
  if (c.format == Format::Json) {
    json j = to_json(g);
    json comps = json::array();
    for (const auto& comp : components(t)) comps.push_back(comp);
    j["components"] = std::move(comps);
    print_json(out, j);
  } else {
    out << to_dot(g, c.symbolic);
  }
  return kExitOk;
}

int run_verify(const Command& c, std::ostream& out) {
  const auto pairs = c.pairs.empty() ? default_grid_pairs() : c.pairs;
  const auto cases = verify_grid(c.n_max, pairs);
  std::size_t failures = 0;
  auto mark = [](bool ok) { return ok ? "ok" : "FAIL"; };
  if (c.format == Format::Text) {
    out << std::left << std::setw(4) << "n" << std::setw(4) << "s1" << std::setw(4) << "s2" << std::setw(7) << "a"
        << std::setw(7) << "b" << std::setw(11) << "kind" << std::setw(6) << "det" << std::setw(6) << "perm"
        << std::setw(8) << "inverse" << std::setw(12) << "bjerhammar" << "result\n";
  }
  json rows = json::array();
  for (const auto& gc : cases) {
    if (!gc.passed()) ++failures;
    if (c.format == Format::Json) {
      rows.push_back({{"n", gc.n}, {"s1", gc.s1}, {"s2", gc.s2}, {"a", to_json(gc.a)}, {"b", to_json(gc.b)},
                      {"singular", gc.singular}, {"det", gc.det_ok}, {"perm", gc.perm_ok},
                      {"inverse", gc.inverse_ok}, {"bjerhammar", gc.bjerhammar_ok}, {"passed", gc.passed()}});
    } else {
      out << std::setw(4) << gc.n << std::setw(4) << gc.s1 << std::setw(4) << gc.s2 << std::setw(7)
          << gc.a.to_string() << std::setw(7) << gc.b.to_string() << std::setw(11)
          << (gc.singular ? "drazin" : "inverse") << std::setw(6) << mark(gc.det_ok) << std::setw(6)
          << mark(gc.perm_ok) << std::setw(8) << mark(gc.inverse_ok) << std::setw(12)
          << (gc.singular ? mark(gc.bjerhammar_ok) : "-") << (gc.passed() ? "PASS" : "FAIL") << '\n';
    }
  }
  if (c.format == Format::Json) {
    print_json(out, {{"kind", "verify"}, {"cases", cases.size()}, {"failures", failures}, {"results", rows}});
  } else {
    out << cases.size() << " cases, " << failures << " failures\n";
  }
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::optional<Command> parse_command(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Exact closed forms for two-parameter circulant matrices a P_n^s1 + b P_n^s2", "circ2"};
  app.require_subcommand(1);
  RawOptions raw;

  const std::map<std::string, Subcommand> names = {
      {"det", Subcommand::Det},         {"perm", Subcommand::Perm},       {"inv", Subcommand::Inv},
      {"drazin", Subcommand::Drazin},   {"rank", Subcommand::Rank},       {"untangle", Subcommand::Untangle},
      {"digraph", Subcommand::Digraph}, {"verify", Subcommand::Verify}};
  const std::map<std::string, std::string> help = {
      {"det", "closed-form determinant"},
      {"perm", "closed-form permanent"},
      {"inv", "closed-form inverse (nonsingular only)"},
      {"drazin", "closed-form Drazin (group) inverse (singular only)"},
      {"rank", "rank by the gcd(x^n - 1, P_C) criterion"},
      {"untangle", "the untangling permutation and block structure"},
      {"digraph", "the weighted digraph as DOT or JSON"},
      {"verify", "check every closed formula against the dense oracles over a grid"}};

  std::map<CLI::App*, Subcommand> subs;
  for (const auto& [name, kind] : names) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    subs[sub] = kind;
    if (kind == Subcommand::Verify) {
      sub->add_option("--n-max", raw.n_max, "largest order in the grid")->check(CLI::Range(2, 16));
      sub->add_option("--pairs", raw.pairs, "(a,b) pairs, e.g. \"2,3;1,-1\"");
      sub->add_option("--format", raw.format)->check(CLI::IsMember({"text", "json"}));
      continue;
    }
    const bool shape_required = kind != Subcommand::Rank;
    auto* n_opt = sub->add_option("--n", raw.n, "order n");
    sub->add_option("--s1", raw.s1, "first exponent (default 0)");
    auto* s2_opt = sub->add_option("--s2", raw.s2, "second exponent");
    sub->add_option("--a", raw.a, "coefficient of P^s1, as p/q");
    sub->add_option("--b", raw.b, "coefficient of P^s2, as p/q");
    if (shape_required) {
      n_opt->required();
      s2_opt->required();
    }
    if (kind == Subcommand::Digraph) {
      sub->add_option("--format", raw.format)->check(CLI::IsMember({"dot", "json"}));
      sub->add_flag("--dot", raw.dot, "DOT output (default)");
      sub->add_flag("--json", raw.json, "JSON arc list");
      sub->add_flag("--symbolic", raw.symbolic, "label arcs a/b instead of their values");
    } else {
      sub->add_option("--format", raw.format)->check(CLI::IsMember({"text", "json"}));
    }
    if (kind == Subcommand::Rank) sub->add_option("--coeffs", raw.coeffs, "first row c_0,...,c_{n-1} instead of --n/--s1/--s2/--a/--b");
    if (kind == Subcommand::Untangle) sub->add_flag("--dense", raw.dense, "print P_sigma^T P_n^{n-s1} A P_sigma (needs --a, --b)");
  }

  std::vector<const char*> argv{"circ2"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Command c;
  CLI::App* chosen = app.get_subcommands().front();
  c.subcommand = subs.at(chosen);
  c.n = raw.n;
  c.s1 = raw.s1;
  c.s2 = raw.s2;
  if (!raw.a.empty()) c.a = parse_rational_arg(raw.a, "a");
  if (!raw.b.empty()) c.b = parse_rational_arg(raw.b, "b");
  c.dense = raw.dense;
  c.symbolic = raw.symbolic;
  c.n_max = raw.n_max;

  if (c.subcommand == Subcommand::Digraph) {
    if (raw.dot && raw.json) throw UsageError("--dot and --json are exclusive");
    c.format = (raw.json || raw.format == "json") ? Format::Json : Format::Dot;
  } else {
    c.format = raw.format == "json" ? Format::Json : Format::Text;
  }

  switch (c.subcommand) {
    case Subcommand::Verify:
      if (!raw.pairs.empty()) c.pairs = parse_pairs(raw.pairs);
      break;
    case Subcommand::Rank:
      if (!raw.coeffs.empty()) {
        if (chosen->count("--n") || chosen->count("--s2") || c.a || c.b) {
          throw UsageError("--coeffs cannot be combined with --n/--s1/--s2/--a/--b");
        }
        c.coeffs = parse_rational_list(raw.coeffs, "coeffs");
        break;
      }
      if (!chosen->count("--n") || !chosen->count("--s2")) throw UsageError("rank needs --coeffs or --n/--s2/--a/--b");
      validate_shape(c);
      if (!c.a || !c.b) throw UsageError("--a and --b are required");
      break;
    case Subcommand::Untangle:
      validate_shape(c);
      if (c.dense && (!c.a || !c.b)) throw UsageError("--dense needs --a and --b");
      break;
    default:
      validate_shape(c);
      if (!c.a || !c.b) throw UsageError("--a and --b are required");
      break;
  }
  return c;
}

int run(const Command& command, std::ostream& out, std::ostream& err) {
  try {
    switch (command.subcommand) {
      case Subcommand::Det: return run_det(command, out);
      case Subcommand::Perm: return run_perm(command, out);
      case Subcommand::Inv: {
        const TwoParamCirculant t = two_param(command);
        if (det_closed(t).singular()) {
          err << "error: singular: det = 0, use drazin\n";
          return kExitDomain;
        }
        print_gen_inverse(inverse_closed(t), command.format, out);
        return kExitOk;
      }
      case Subcommand::Drazin: {
        const TwoParamCirculant t = two_param(command);
        if (!det_closed(t).singular()) {
          err << "error: nonsingular: det != 0, use inv\n";
          return kExitDomain;
        }
        print_gen_inverse(drazin_closed(t), command.format, out);
        return kExitOk;
      }
      case Subcommand::Rank: return run_rank(command, out);
      case Subcommand::Untangle: return run_untangle(command, out);
      case Subcommand::Digraph: return run_digraph(command, out);
      case Subcommand::Verify: return run_verify(command, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<Command> command;
  try {
    command = parse_command(args, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!command) return kExitOk;
  return run(*command, out, err);
}

}  // namespace circ2::cli
