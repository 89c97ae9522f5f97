#include "wallcross/idealsuite.hpp"

#include <cctype>
#include <future>
#include <json.hpp>
#include <map>
#include <sstream>

namespace wallcross {

namespace {

#include "paper_suite.inc"

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

// Positions of `sep` outside parentheses.
std::vector<std::size_t> top_level(std::string_view s, std::string_view sep) {
  std::vector<std::size_t> out;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && s.compare(i, sep.size(), sep) == 0) out.push_back(i);
  }
  return out;
}

std::vector<std::string> split_top(std::string_view s, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t pos : top_level(s, sep)) {
    out.push_back(trim(s.substr(start, pos - start)));
    start = pos + sep.size();
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

// Index of the parenthesis closing the one at `open`, or npos.
std::size_t matching(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i;
  }
  return std::string_view::npos;
}

// ---- evaluation ----------------------------------------------------------------

class Evaluator {
 public:
  explicit Evaluator(const FamilyScenario& sc) : ring_(make_ring(sc)) {}

  const PolyRing& ring() const { return ring_; }

  void let(const std::string& name, const std::string& text) {
    check_free(name);
    macros_.insert_or_assign(name, polynomial(text));
  }

  void define(const std::string& name, const Ideal& ideal) {
    if (ring_.index_of(name) || macros_.count(name)) throw ManifestError("'" + name + "' is already a polynomial");
    ideals_.insert_or_assign(name, ideal);
  }

  bool has_ideal(const std::string& name) const { return ideals_.count(name) > 0; }
  const Ideal& ideal_named(const std::string& name) const { return ideals_.at(name); }

  Polynomial polynomial(const std::string& text) const {
    try {
      return Polynomial::parse(ring_, text, macros_);
    } catch (const std::invalid_argument& e) {
      throw ManifestError("bad polynomial '" + text + "': " + e.what());
    }
  }

  Rational rational(const std::string& text) const {
    try {
      return Rational::parse(trim(text));
    } catch (const std::invalid_argument& e) {
      throw ManifestError("bad rational '" + text + "'");
    }
  }

  Ideal ideal(std::string_view text) const {
    const std::string s = trim(text);
    if (s.empty()) throw ManifestError("empty ideal expression");
    if (const auto parts = split_top(s, "&"); parts.size() > 1) {
      Ideal acc = ideal(parts[0]);
      for (std::size_t i = 1; i < parts.size(); ++i) acc = ideal_intersect(acc, ideal(parts[i]));
      return acc;
    }
    if (const auto parts = split_top(s, "+"); parts.size() > 1) {
      Ideal acc = ideal(parts[0]);
      for (std::size_t i = 1; i < parts.size(); ++i) acc = ideal_sum(acc, ideal(parts[i]));
      return acc;
    }
    if (const auto parts = split_top(s, "*"); parts.size() > 1) {
      Ideal acc = ideal(parts[0]);
      for (std::size_t i = 1; i < parts.size(); ++i) acc = ideal_product(acc, ideal(parts[i]));
      return acc;
    }
    if (const auto hats = top_level(s, "^"); !hats.empty()) {
      const std::string exponent = trim(std::string_view(s).substr(hats.back() + 1));
      const Rational e = rational(exponent);
      if (!e.is_integer() || e.sign() < 0) throw ManifestError("bad ideal power '" + exponent + "'");
      return ideal_power(ideal(std::string_view(s).substr(0, hats.back())), static_cast<unsigned>(e.to_int64()));
    }
    return atom(s);
  }

 private:
  static PolyRing make_ring(const FamilyScenario& sc) {
    try {
      return PolyRing(sc.vars);
    } catch (const std::invalid_argument& e) {
      throw ManifestError("scenario " + sc.name + ": " + e.what());
    }
  }

  void check_free(const std::string& name) const {
    if (!is_identifier(name)) throw ManifestError("bad name '" + name + "'");
    if (ring_.index_of(name)) throw ManifestError("'" + name + "' is a variable");
    if (ideals_.count(name)) throw ManifestError("'" + name + "' is already an ideal");
  }

  Ideal atom(const std::string& s) const {
    if (s.front() == '(') {
      if (matching(s, 0) != s.size() - 1) throw ManifestError("unbalanced parentheses in '" + s + "'");
      const std::string inner = trim(std::string_view(s).substr(1, s.size() - 2));
      if (inner.empty()) return Ideal(ring_);
      const auto pieces = split_top(inner, ",");
      if (pieces.size() == 1) {
        // Either a one-generator list or a parenthesized ideal expression.
        if (inner.front() == '(') {
          try {
            return ideal(inner);
          } catch (const ManifestError&) {
          }
        }
        try {
          return Ideal(ring_, {Polynomial::parse(ring_, inner, macros_)});
        } catch (const std::invalid_argument&) {
          return ideal(inner);
        }
      }
      std::vector<Polynomial> gens;
      for (const auto& p : pieces) gens.push_back(polynomial(p));
      return Ideal(ring_, std::move(gens));
    }
    const std::size_t open = s.find('(');
    if (open != std::string::npos && s.back() == ')' && is_identifier(trim(std::string_view(s).substr(0, open)))) {
      if (matching(s, open) != s.size() - 1) throw ManifestError("unbalanced parentheses in '" + s + "'");
      return call(trim(std::string_view(s).substr(0, open)), split_top(std::string_view(s).substr(open + 1, s.size() - open - 2), ","));
    }
    if (is_identifier(s)) {
      const auto it = ideals_.find(s);
      if (it == ideals_.end()) throw ManifestError("unknown ideal '" + s + "'");
      return it->second;
    }
    throw ManifestError("cannot read ideal expression '" + s + "'");
  }

  Ideal call(const std::string& fn, const std::vector<std::string>& args) const {
    auto arity = [&](std::size_t n) {
      if (args.size() != n) throw ManifestError(fn + " expects " + std::to_string(n) + " arguments");
    };
    auto variable = [&](const std::string& name) {
      if (!ring_.index_of(name)) throw ManifestError("unknown variable '" + name + "'");
      return name;
    };
    try {
      if (fn == "limit") {
        if (args.size() == 2) return limit_ideal(ideal(args[0]), variable(args[1]));
        arity(1);
        return limit_ideal(ideal(args[0]), variable("t"));
      }
      if (fn == "restrict") {
        arity(2);
        return restrict_to_plane(ideal(args[0]), polynomial(args[1]));
      }
      if (fn == "colon") {
        arity(2);
        return ideal_colon(ideal(args[0]), polynomial(args[1]));
      }
      if (fn == "specialize") {
        arity(3);
        return specialize(ideal(args[0]), variable(args[1]), rational(args[2]));
      }
      if (fn == "eliminate") {
        arity(2);
        return eliminate(ideal(args[0]), {variable(args[1])});
      }
      if (fn == "embedded") {
        arity(3);
        return embedded_point_ideal(polynomial(args[0]), rational(args[1]), rational(args[2]));
      }
    } catch (const std::invalid_argument& e) {
      throw ManifestError(fn + ": " + e.what());
    }
    throw ManifestError("unknown function '" + fn + "'");
  }

  PolyRing ring_;
  std::map<std::string, Polynomial> macros_;
  std::map<std::string, Ideal> ideals_;
};

// "desc: rest" split at the first colon.
std::pair<std::string, std::string> described(const Statement& st) {
  const std::size_t colon = st.body.find(':');
  if (colon == std::string::npos) throw ManifestError("line " + std::to_string(st.line) + ": missing 'description:'");
  return {trim(std::string_view(st.body).substr(0, colon)), trim(std::string_view(st.body).substr(colon + 1))};
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

// ---- operations ------------------------------------------------------------------

Ideal embedded_point_ideal(const Polynomial& q, const Rational& a, const Rational& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("normal direction (a:b) must not be (0:0)");
  const PolyRing& r = q.ring();
  const Polynomial x = Polynomial::variable(r, "x");
  const Polynomial y = Polynomial::variable(r, "y");
  const Polynomial z = Polynomial::variable(r, "z");
  const Ideal maximal(r, {x, y, z});
  const Ideal curve(r, {q, z});
  return ideal_sum(ideal_product(maximal, curve), Ideal(r, {b * q - a * z}));
}

Ideal limit_ideal(const Ideal& family, const std::string& t) {
  const Polynomial tv = Polynomial::variable(family.ring(), t);
  const Ideal truncated = ideal_sum(family, Ideal(family.ring(), {tv * tv}));
  const Ideal lifted = ideal_sum(ideal_colon(truncated, tv), Ideal(family.ring(), {tv}));
  return groebner(specialize(lifted, t, Rational(0)));
}

Ideal restrict_to_plane(const Ideal& ideal, const Polynomial& plane) {
  return ideal_sum(ideal, Ideal(ideal.ring(), {plane}));
}

// ---- scenarios -------------------------------------------------------------------

namespace {

std::optional<std::string> find_keyword(const FamilyScenario& sc, const std::string& keyword) {
  for (const auto& st : sc.statements)
    if (st.keyword == keyword) return st.body;
  return std::nullopt;
}

}  // namespace

std::optional<std::string> FamilyScenario::family() const { return find_keyword(*this, "family"); }
std::optional<std::string> FamilyScenario::restriction() const { return find_keyword(*this, "restrict"); }
std::optional<std::string> FamilyScenario::expected_limit() const { return find_keyword(*this, "expect"); }

bool VerificationReport::pass() const {
  for (const auto& s : steps)
    if (!s.pass) return false;
  return !steps.empty();
}

std::string VerificationReport::text() const {
  std::ostringstream os;
  os << (pass() ? "PASS " : "FAIL ") << name;
  if (!anchor.empty()) os << "  [" << anchor << "]";
  os << "\n";
  for (const auto& s : steps) {
    os << "  " << (s.pass ? "ok   " : "FAIL ") << s.description << "\n";
    if (!s.pass) {
      os << "       computed: " << s.computed << "\n";
      os << "       expected: " << s.expected << "\n";
    }
  }
  return os.str();
}

std::vector<FamilyScenario> parse_manifest(std::string_view text) {
  std::vector<FamilyScenario> out;
  std::optional<FamilyScenario> current;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  auto fail = [&](const std::string& msg) -> ManifestError {
    return ManifestError("manifest line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t space = line.find_first_of(" \t");
    const std::string keyword = line.substr(0, space);
    const std::string body = space == std::string::npos ? "" : trim(std::string_view(line).substr(space));

    if (keyword == "scenario" || keyword == "name") {
      if (current) throw fail("scenario " + current->name + " is missing 'end'");
      current.emplace();
      const std::size_t colon = body.find(':');
      current->name = trim(std::string_view(body).substr(0, colon));
      if (colon != std::string::npos) current->title = trim(std::string_view(body).substr(colon + 1));
      if (!is_identifier(current->name)) throw fail("bad scenario name '" + current->name + "'");
      for (const auto& sc : out)
        if (sc.name == current->name) throw fail("duplicate scenario '" + current->name + "'");
      continue;
    }
    if (!current) throw fail("'" + keyword + "' outside a scenario");
    if (keyword == "end") {
      if (current->vars.empty()) throw fail("scenario " + current->name + " has no 'vars'");
      if (current->statements.empty()) throw fail("scenario " + current->name + " checks nothing");
      out.push_back(std::move(*current));
      current.reset();
    } else if (keyword == "anchor") {
      current->anchor = body;
    } else if (keyword == "vars") {
      std::istringstream vs(body);
      for (std::string v; vs >> v;) {
        if (!is_identifier(v)) throw fail("bad variable '" + v + "'");
        current->vars.push_back(v);
      }
      if (current->vars.empty()) throw fail("empty 'vars'");
    } else if (keyword == "let" || keyword == "ideal") {
      if (top_level(body, "=").empty()) throw fail("expected '" + keyword + " name = ...'");
      current->statements.push_back({line_no, keyword, body});
    } else if (keyword == "family" || keyword == "restrict" || keyword == "expect") {
      if (body.empty()) throw fail("'" + keyword + "' needs an ideal");
      if (keyword != "family" && !current->family()) throw fail("'" + keyword + "' before 'family'");
      current->statements.push_back({line_no, keyword, body});
    } else if (keyword == "check" || keyword == "member" || keyword == "nonmember") {
      if (body.find(':') == std::string::npos) throw fail("expected '" + keyword + " description: ...'");
      current->statements.push_back({line_no, keyword, body});
    } else {
      throw fail("unknown keyword '" + keyword + "'");
    }
    if (!current->statements.empty() && current->vars.empty()) throw fail("'vars' must come first");
  }
  if (current) throw ManifestError("manifest ends inside scenario " + current->name);
  if (out.empty()) throw ManifestError("manifest has no scenarios");
  return out;
}

VerificationReport run_scenario(const FamilyScenario& sc) {
  VerificationReport report{sc.name, sc.anchor, {}};
  Evaluator ev(sc);
  for (const Statement& st : sc.statements) {
    try {
      if (st.keyword == "let" || st.keyword == "ideal") {
        const std::size_t eq = st.body.find('=');
        const std::string name = trim(std::string_view(st.body).substr(0, eq));
        const std::string rhs = trim(std::string_view(st.body).substr(eq + 1));
        if (st.keyword == "let") {
          ev.let(name, rhs);
        } else {
          if (!is_identifier(name)) throw ManifestError("bad name '" + name + "'");
          ev.define(name, ev.ideal(rhs));
        }
      } else if (st.keyword == "family") {
        ev.define("family", ev.ideal(st.body));
      } else if (st.keyword == "restrict") {
        const Ideal ambient = ev.ideal(st.body);
        ev.define("ambient", ambient);
        ev.define("restricted", ideal_sum(ev.ideal_named("family"), ambient));
      } else if (st.keyword == "expect") {
        const Ideal source = ev.has_ideal("restricted") ? ev.ideal_named("restricted") : ev.ideal_named("family");
        const Ideal limit = limit_ideal(source, "t");
        const Ideal expected = ev.ideal(st.body);
        report.steps.push_back({"limit = " + st.body, limit.str(), groebner(expected).str(), ideal_equal(limit, expected)});
        const Ideal at_zero = specialize(source, "t", Rational(0));
        report.steps.push_back({"limit contains the restricted family at t = 0", limit.str(),
                                "superset of " + groebner(at_zero).str(), contains(limit, at_zero)});
      } else if (st.keyword == "check") {
        const auto [desc, rest] = described(st);
        bool subset = false;
        auto sides = split_top(rest, "==");
        if (sides.size() != 2) {
          sides = split_top(rest, "<=");
          subset = true;
        }
        if (sides.size() != 2) throw ManifestError("expected 'A == B' or 'A <= B'");
        const Ideal lhs = ev.ideal(sides[0]);
        const Ideal rhs = ev.ideal(sides[1]);
        const bool ok = subset ? contains(rhs, lhs) : ideal_equal(lhs, rhs);
        report.steps.push_back({desc, groebner(lhs).str(), (subset ? "superset " : "") + groebner(rhs).str(), ok});
      } else if (st.keyword == "member" || st.keyword == "nonmember") {
        const auto [desc, rest] = described(st);
        const auto sides = split_top(rest, " in ");
        if (sides.size() != 2) throw ManifestError("expected 'p in I'");
        const bool in = member(ev.polynomial(sides[0]), ev.ideal(sides[1]));
        const bool want = st.keyword == "member";
        report.steps.push_back({desc, bool_text(in), bool_text(want), in == want});
      }
    } catch (const ManifestError& e) {
      throw ManifestError("scenario " + sc.name + ", line " + std::to_string(st.line) + ": " + e.what());
    }
  }
  return report;
}

std::vector<VerificationReport> run_suite(const std::vector<FamilyScenario>& scenarios) {
  std::vector<std::future<VerificationReport>> jobs;
  jobs.reserve(scenarios.size());
  for (const auto& sc : scenarios) jobs.push_back(std::async(std::launch::async, run_scenario, std::cref(sc)));
  std::vector<VerificationReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

std::string_view builtin_manifest(std::string_view name) {
  if (name == "paper") return kPaperSuiteManifest;
  throw std::invalid_argument("no builtin suite named '" + std::string(name) + "'");
}

std::vector<VerificationReport> run_paper_suite() { return run_suite(parse_manifest(builtin_manifest("paper"))); }

std::string reports_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["anchor"] = r.anchor;
    j["pass"] = r.pass();
    j["steps"] = nlohmann::ordered_json::array();
    for (const auto& s : r.steps) {
      j["steps"].push_back({{"description", s.description},
                            {"computed", s.computed},
                            {"expected", s.expected},
                            {"pass", s.pass}});
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace wallcross
