#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hopfint/braided.hpp"
#include "hopfint/errors.hpp"
#include "hopfint/integrals.hpp"
#include "hopfint/presentation.hpp"
#include "json.hpp"

namespace hopfint::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Request {
  std::string command;
  std::string input;
  std::string side;
  std::string member;
  std::string elem;
  std::string method = "vacuum";
  std::string q_eval;
  bool json = false;
  int n = 0;
};

struct Loaded {
  std::string builtin_name;
  Compiled compiled;
  DualPair pair;
  SmashAlgebra smash;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("not an integer: " + s);
}

// "name[:param]"
std::pair<std::string, int> builtin_ref(const std::string& ref, int n) {
  auto colon = ref.find(':');
  std::string name = ref.substr(0, colon);
  int param = colon == std::string::npos ? 0 : to_int(ref.substr(colon + 1));
  if (n != 0) param = n;
  return {name, param};
}

Loaded load(const Request& r) {
  if (r.input.empty()) throw UsageError("missing input");
  Loaded l;
  const std::string prefix = "builtin:";
  PresentationAST ast;
  if (r.input.rfind(prefix, 0) == 0) {
    auto [name, param] = builtin_ref(r.input.substr(prefix.size()), r.n);
    l.builtin_name = name;
    ast = builtin(name, param);
  } else {
    ast = parse(read_file(r.input));
  }
  l.compiled = compile(ast);
  const Compiled& c = l.compiled;
  if (c.pair) {
    l.pair = *c.pair;
  } else if (c.braided()) {
    throw ConsistencyFailure("braided input without a pairing or smash block");
  } else {
    l.pair = dualize(c.primary.algebra);
  }
  l.smash = c.smash ? *c.smash : SmashAlgebra::from_pair(l.pair);
  return l;
}

class Output {
 public:
  explicit Output(const Request& r) {
    if (!r.q_eval.empty()) {
      try {
        q0_ = Rational(r.q_eval);
        q0_->canonicalize();
      } catch (const std::exception&) {
        throw UsageError("--q-eval needs a rational number, got " + r.q_eval);
      }
    }
  }

  std::string scalar(const RatFunc& c) const {
    return q0_ ? to_string(c.eval(*q0_)) : render_scalar(c);
  }
  std::string element(const HopfAlgebra& h, const Element& e) const {
    if (!q0_) return render(h, e);
    Element v = e;
    for (auto& c : v.coords) c = RatFunc(c.eval(*q0_));
    return render(h, v);
  }
  std::string element(const SmashAlgebra& s, const SmashElement& e) const {
    if (!q0_) return render(s, e);
    SmashElement v = e;
    for (auto& c : v.coeff) c = RatFunc(c.eval(*q0_));
    return render(s, v);
  }

 private:
  std::optional<Rational> q0_;
};

const std::string& name_of(const Loaded& l, const HopfAlgebra& h) {
  static const std::string unnamed = "dual";
  const Compiled& c = l.compiled;
  if (h.id() == c.primary.algebra.id()) return c.primary.name;
  if (c.dual && h.id() == c.dual->algebra.id()) return c.dual->name;
  return unnamed;
}

Json matrix_json(const std::vector<std::vector<RatFunc>>& m, const Output& o) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json jr = Json::array();
    for (const auto& v : row) jr.push_back(o.scalar(v));
    rows.push_back(jr);
  }
  return rows;
}

// Basis indices whose labels are single generator symbols.
std::vector<std::size_t> generator_indices(const HopfAlgebra& h) {
  std::vector<std::size_t> out;
  auto unit = h.unit_index();
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (unit && *unit == i) continue;
    const std::string& s = h.label(i);
    if (s.find('*') == std::string::npos) out.push_back(i);
  }
  return out;
}

const HopfAlgebra& pick_member(const Loaded& l, const std::string& member) {
  if (member == "A") return l.pair.functions();
  if (member == "H") return l.pair.points();
  throw UsageError("--member must be A or H");
}

Side side_of(const std::string& s) {
  if (s == "right") return Side::kRight;
  if (s == "left") return Side::kLeft;
  throw UsageError("--side must be right or left");
}

void cmd_check(const Loaded& l, Json& results, bool& failed) {
  const Compiled& c = l.compiled;
  auto report = [&](const std::string& who, const AxiomReport& rep) {
    for (const auto& e : rep.entries) {
      Json j{{"algebra", who}, {"check", e.name}, {"passed", e.passed}};
      if (!e.passed) {
        j["witness"] = e.witness;
        failed = true;
      }
      results.push_back(j);
    }
  };
  auto algebra = [&](const CompiledAlgebra& a) {
    report(a.name, a.braiding ? check_braided_axioms({a.algebra.data(), *a.braiding})
                              : check_hopf_axioms(a.algebra.data()));
  };
  algebra(c.primary);
  if (c.dual) algebra(*c.dual);
  if (!c.braided()) {
    report("pairing", check_pairing(l.pair.functions(), l.pair.points(), l.pair.pairing()));
  }
  results.push_back({{"algebra", "smash"},
                     {"check", "associativity"},
                     {"passed", true},
                     {"dimension", l.smash.dim()}});
}

void cmd_tensors(const Loaded& l, const Request& r, const Output& o, Json& results) {
  const HopfAlgebra& h =
      r.member.empty() ? l.compiled.primary.algebra : pick_member(l, r.member);
  auto ms = m_slices(h);
  auto ws = w_slices(h);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    results.push_back({{"slice", "M" + std::to_string(i)},
                       {"basis", h.label(i)},
                       {"matrix", matrix_json(ms[i], o)}});
  }
  const bool dqs = l.builtin_name == "dqs" && h.id() == l.compiled.primary.algebra.id();
  for (std::size_t k = 0; k < ws.size(); ++k) {
    Json j{{"slice", "W" + std::to_string(k)},
           {"basis", h.label(k)},
           {"matrix", matrix_json(ws[k], o)}};
    if (dqs && h.label(k) == "y") {
      j["note"] = "row x*y, column x is -1; m(S(*)id)Delta(x*y) = 0 fails with 0";
    }
    results.push_back(j);
  }
}

void cmd_smash(const Loaded& l, const Output& o, Json& results) {
  const SmashAlgebra& s = l.smash;
  const HopfAlgebra& a = s.functions();
  const HopfAlgebra& h = s.points();
  results.push_back({{"functions", name_of(l, a)},
                     {"points", name_of(l, h)},
                     {"dimension", s.dim()}});
  const std::size_t ua = a.unit_index().value_or(0);
  const std::size_t uh = h.unit_index().value_or(0);
  for (std::size_t j : generator_indices(h)) {
    for (std::size_t i : generator_indices(a)) {
      SmashElement p = s.mul(s.basis(ua, j), s.basis(i, uh));
      results.push_back({{"product", h.label(j) + "*" + a.label(i)},
                         {"normal_form", o.element(s, p)}});
    }
  }
}

void cmd_projectors(const Loaded& l, const Output& o, Json& results, bool& failed) {
  ProjectorPair p = solve_vacuum_projectors(l.smash);
  auto v = projector_violations(l.smash, p);
  failed = !v.empty();
  results.push_back({{"E", o.element(l.smash, p.E)},
                     {"Ebar", o.element(l.smash, p.Ebar)},
                     {"violations", v}});
}

void cmd_integrate(const Loaded& l, const Request& r, const Output& o, Json& results) {
  if (r.elem.empty()) throw UsageError("integrate needs --elem");
  const std::string member = r.member.empty() ? "A" : r.member;
  const HopfAlgebra& target = pick_member(l, member);
  if (l.compiled.braided() && r.method != "vacuum") {
    throw UsageError("braided input supports --method vacuum only");
  }
  std::string side = r.side;
  if (side.empty()) side = member == "A" ? "right" : "left";
  Element x = parse_element(target, r.elem);
  Json j{{"element", r.elem}, {"member", member}, {"side", side}, {"method", r.method}};
  auto put = [&](const IntegralResult& res, const HopfAlgebra& dh) {
    j["value"] = o.scalar(res.value);
    j["delta"] = o.element(dh, res.delta);
    if (res.realization) j["realization"] = o.element(l.smash, *res.realization);
    j["convention"] = res.convention;
  };
  if (r.method == "trace") {
    if (side != (member == "A" ? "right" : "left")) {
      throw UsageError("the trace formula gives the " +
                       std::string(member == "A" ? "right" : "left") + " integral only");
    }
    j["value"] = o.scalar(
        trace_integral(l.pair, member == "A" ? Factor::kFunctions : Factor::kPoints, x));
  } else if (r.method == "modified") {
    const DualPair p = member == "A" ? l.pair : l.pair.swapped();
    put(invariant_integral(p, x, side_of(side)), p.functions());
  } else if (r.method == "vacuum") {
    ProjectorPair proj = solve_vacuum_projectors(l.smash);
    if (member == "A") {
      put(vacuum_integral_A(l.smash, proj, x, side_of(side)), l.pair.functions());
    } else {
      if (side != "left") throw UsageError("the vacuum route gives the left integral on H");
      put(vacuum_integral_H(l.smash, proj, x), l.pair.functions());
    }
  } else {
    throw UsageError("--method must be trace, modified or vacuum");
  }
  results.push_back(j);
}

void cmd_delta(const Loaded& l, const Request& r, const Output& o, Json& results) {
  if (l.compiled.braided() && r.method != "vacuum") {
    throw UsageError("braided input supports --method vacuum only");
  }
  Element d;
  if (r.method == "vacuum") {
    d = vacuum_delta(l.smash, solve_vacuum_projectors(l.smash));
  } else if (r.method == "modified") {
    d = normalize_delta(l.pair);
  } else {
    throw UsageError("delta supports --method modified or vacuum");
  }
  results.push_back({{"delta", o.element(l.pair.functions(), d)},
                     {"method", r.method},
                     {"convention", kDeltaConvention}});
}

void cmd_dual(const Loaded& l, Json& results) {
  const Compiled& c = l.compiled;
  std::string text;
  if (c.dual) {
    text = emit(c.dual->algebra, c.dual->name, c.dual->braiding);
  } else {
    text = emit(l.pair.functions(), c.primary.name + "-dual");
  }
  results.push_back({{"source", text}});
}

void cmd_builtin(const Request& r, Json& results) {
  if (r.input.empty()) {
    results.push_back({{"builtins", builtin_names()}});
    return;
  }
  std::string ref = r.input;
  if (ref.rfind("builtin:", 0) == 0) ref = ref.substr(8);
  auto [name, param] = builtin_ref(ref, r.n);
  results.push_back({{"name", name}, {"source", format(builtin(name, param))}});
}

void cmd_identities(const Request& r, const Output& o, Json& results, Json& warnings) {
  const int top = r.n == 0 ? 6 : r.n;
  if (top < 1) throw UsageError("--n must be positive");
  for (int a = 1; a <= top; ++a) {
    results.push_back({{"identity", "q_vanishing_sum(" + std::to_string(a) + ")"},
                       {"value", o.scalar(q_vanishing_sum(a))},
                       {"passed", true}});
  }
  if (r.input.empty()) return;
  Loaded l = load(r);
  if (l.compiled.braided()) {
    warnings.push_back("theta check skipped for braided input");
    return;
  }
  Matrix t = theta_matrix(l.pair);
  results.push_back({{"identity", "theta"}, {"rank", rank(t)}, {"passed", true}});
}

std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_text(const Json& doc, std::ostream& out, std::ostream& err) {
  bool first = true;
  for (const auto& res : doc["results"]) {
    if (res.size() > 1 && !first) out << "\n";
    first = false;
    for (const auto& [key, v] : res.items()) {
      if (v.is_array() && !v.empty() && v[0].is_array()) {
        std::size_t w = 1;
        for (const auto& row : v) {
          for (const auto& x : row) w = std::max(w, cell(x).size());
        }
        out << key << ":\n";
        for (const auto& row : v) {
          out << " ";
          for (const auto& x : row) {
            std::string s = cell(x);
            out << " " << std::string(w - s.size(), ' ') << s;
          }
          out << "\n";
        }
      } else if (v.is_array()) {
        out << key << ":";
        if (v.empty()) out << " none";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : " ") << cell(v[i]);
        out << "\n";
      } else if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
        out << v.get<std::string>();
      } else {
        out << key << ": " << cell(v) << "\n";
      }
    }
  }
  for (const auto& w : doc["warnings"]) err << "warning: " << w.get<std::string>() << "\n";
  for (const auto& e : doc["errors"]) err << "error: " << e["message"].get<std::string>() << "\n";
}

bool usage_error(const Error& e) {
  static const std::vector<std::string> names{"SyntaxError", "UnknownSymbol",
                                              "DuplicateGenerator", "UnknownBuiltin",
                                              "BadParam"};
  return std::find(names.begin(), names.end(), e.name()) != names.end();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request r;
  CLI::App app{"Integrals on finite-dimensional Hopf algebras", "hopfint"};
  app.require_subcommand(1);
  auto add = [&](const std::string& name, const std::string& help, bool input_required) {
    CLI::App* sub = app.add_subcommand(name, help);
    auto* in = sub->add_option("input", r.input, "builtin:NAME[:PARAM] or a .hopf file");
    if (input_required) in->required();
    sub->add_flag("--json", r.json, "Machine-readable output");
    sub->add_option("--q-eval", r.q_eval, "Evaluate scalars at this rational q");
    sub->add_option("--n", r.n, "Builtin parameter (cyclic group order, q-plane size)");
    return sub;
  };
  add("check", "Run every axiom check", true);
  add("dual", "Emit the dual algebra", true);
  add("tensors", "Print M- and W-slices", true)
      ->add_option("--member", r.member, "A or H (default: the first algebra)");
  add("smash", "Cross relations of the smash product", true);
  add("projectors", "Vacuum projectors E and Ebar", true);
  CLI::App* integ = add("integrate", "Integral of an element", true);
  integ->add_option("--elem", r.elem, "Element expression")->required();
  integ->add_option("--side", r.side, "right or left");
  integ->add_option("--member", r.member, "A or H");
  integ->add_option("--method", r.method, "trace, modified or vacuum");
  add("delta", "Delta function of the functions algebra", true)
      ->add_option("--method", r.method, "modified or vacuum");
  add("builtin", "Print a builtin source, or list builtins", false);
  add("identities", "q-identities and the theta check", false);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  r.command = app.get_subcommands().front()->get_name();

  Json doc{{"command", r.command},
           {"input", r.input},
           {"results", Json::array()},
           {"warnings", Json::array()},
           {"errors", Json::array()}};
  int code = 0;
  try {
    Output o(r);
    Json& results = doc["results"];
    bool failed = false;
    if (r.command == "builtin") {
      cmd_builtin(r, results);
    } else if (r.command == "identities") {
      cmd_identities(r, o, results, doc["warnings"]);
    } else {
      Loaded l = load(r);
      for (const auto& w : l.compiled.warnings) doc["warnings"].push_back(w);
      if (r.command == "check") cmd_check(l, results, failed);
      if (r.command == "dual") cmd_dual(l, results);
      if (r.command == "tensors") cmd_tensors(l, r, o, results);
      if (r.command == "smash") cmd_smash(l, o, results);
      if (r.command == "projectors") cmd_projectors(l, o, results, failed);
      if (r.command == "integrate") cmd_integrate(l, r, o, results);
      if (r.command == "delta") cmd_delta(l, r, o, results);
    }
    if (failed) {
      doc["errors"].push_back({{"name", "CheckFailed"}, {"message", "a check failed"}});
      code = 1;
    }
  } catch (const UsageError& e) {
    doc["errors"].push_back({{"name", "UsageError"}, {"message", e.what()}});
    code = 2;
  } catch (const Error& e) {
    doc["errors"].push_back({{"name", e.name()}, {"message", e.what()}});
    code = usage_error(e) ? 2 : 1;
  } catch (const std::exception& e) {
    doc["errors"].push_back({{"name", "InternalError"}, {"message", e.what()}});
    code = 1;
  }
  if (r.json) {
    out << doc.dump(2) << "\n";
    return code;
  }
  print_text(doc, out, err);
  return code;
}

}  // namespace hopfint::cli
