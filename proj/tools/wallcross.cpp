// wallcross: command-line front end.
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 invalid input.

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "wallcross/chow.hpp"
#include "wallcross/idealsuite.hpp"
#include "wallcross/lambdawalls.hpp"
#include "wallcross/tiltwalls.hpp"

using namespace wallcross;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInvalidInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ojson chern_json(const ChernCharacter& v) {
  ojson a = ojson::array();
  for (std::size_t i = 0; i < 4; ++i) a.push_back(v[i].str());
  return a;
}

ojson truncated_json(const TruncatedCharacter& t) { return ojson::array({t.rank.str(), t.c.str(), t.d.str()}); }

ChernCharacter parse_chern(const std::string& text) {
  try {
    return ChernCharacter::parse(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--chern: ") + e.what());
  }
}

Rational parse_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw InputError(flag + ": '" + text + "' is not a rational number p/q");
  }
}

std::pair<Rational, Rational> parse_point(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
    throw InputError("--at: expected 'alpha,beta', got '" + text + "'");
  return {parse_rational("--at", text.substr(0, comma)), parse_rational("--at", text.substr(comma + 1))};
}

// ---- tilt-wall ------------------------------------------------------------------

struct TiltOptions {
  std::string chern = "1,0,-2,2";
  std::string beta0 = "-2";
  long long rank_bound = 10;
};

int cmd_tilt_wall(const TiltOptions& o, bool json, std::ostream& out) {
  const ChernCharacter v = parse_chern(o.chern);
  if (!v.in_lattice()) throw InputError("--chern: " + v.str() + " is not the Chern character of a sheaf (not in the lattice)");
  const Rational b0 = parse_rational("--beta0", o.beta0);
  if (!b0.is_integer())
    throw InputError("--beta0: " + b0.str() + " is not an integer; the search twists by O(beta0) and needs an integral twist");
  const long long beta0 = b0.to_int64();
  std::vector<DestabilizerCandidate> candidates;
  try {
    candidates = enumerate_destabilizers(v, beta0, o.rank_bound);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  }

  if (json) {
    ojson j;
    j["chern"] = chern_json(v);
    j["beta0"] = b0.str();
    j["rank_bound"] = o.rank_bound;
    j["complete_up_to_rank_bound"] = true;
    j["candidates"] = ojson::array();
    for (const auto& c : candidates) {
      ojson e;
      e["sub"] = truncated_json(c.sub());
      e["complement"] = truncated_json(c.complement);
      e["sub_chern"] = chern_json(c.sub().untwisted(beta0));
      e["complement_chern"] = chern_json(c.complement.untwisted(beta0));
      e["alpha_sq"] = c.alpha_sq.str();
      e["wall"] = ojson::parse(c.wall(beta0).json());
      j["candidates"].push_back(std::move(e));
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "class " << v.str() << ", beta0 = " << b0.str() << ", search complete up to rank bound " << o.rank_bound
      << "\n";
  if (candidates.empty()) {
    out << "no candidates\n";
    return kOk;
  }
  out << candidates.size() << (candidates.size() == 1 ? " candidate pair" : " candidate pairs") << " (twisted r, c, d)\n";
  for (const auto& c : candidates) {
    out << "  " << c.str() << "  alpha^2 = " << c.alpha_sq.str() << "\n";
    out << "    characters " << c.sub().untwisted(beta0).str() << " and " << c.complement.untwisted(beta0).str() << "\n";
    out << "    wall: " << c.wall(beta0).str() << "\n";
  }
  return kOk;
}

// ---- lambda ----------------------------------------------------------------------

struct LambdaOptions {
  std::string chern = "1,0,-2,2";
  std::string s = "1/3";
  std::string at = "3/2,-5/2";
};

int cmd_lambda(const LambdaOptions& o, bool json, std::ostream& out) {
  const ChernCharacter v = parse_chern(o.chern);
  if (v != skew_lines_class())
    throw InputError("--chern: the walls W1 and W2 are defined for 1,0,-2,2 only, got " + v.str());
  const Rational s = parse_rational("--s", o.s);
  if (s.sign() <= 0) throw InputError("--s: need s>0, got " + s.str());
  const auto [alpha, beta] = parse_point(o.at);
  if (alpha.sign() <= 0) throw InputError("--at: need alpha > 0, got " + alpha.str());
  const StabilityPoint p(alpha, beta, s);

  std::string chamber;
  try {
    chamber = classify_chamber(v, p).str();
  } catch (const std::logic_error& e) {
    chamber = std::string("unclassified: ") + e.what();
  }
  ojson walls = ojson::array();
  std::ostringstream text;
  text << "class " << v.str() << ", s = " << s.str() << ", point (alpha, beta) = (" << alpha.str() << ", "
       << beta.str() << ")\n";
  for (const WallPolynomial& w : {wall_w1(), wall_w2()}) {
    const Rational value = evaluate_wall(w, p);
    const Rational deriv = phi_alpha_derivative_at(w, p);
    std::string slope;
    try {
      slope = wall_slope_at(w, p).str();
    } catch (const WallError& e) {
      slope = e.what();
    }
    ojson e;
    e["wall"] = w.label;
    e["phi"] = w.poly.str();
    e["value"] = value.str();
    e["alpha_derivative"] = deriv.str();
    e["slope"] = slope;
    walls.push_back(std::move(e));
    text << w.label << ": phi = " << w.poly.str() << "\n"
         << "  value " << value.str() << ", d/dalpha " << deriv.str() << ", slope " << slope << "\n";
  }
  text << "chamber: " << chamber << "\n";
  if (json) {
    ojson j;
    j["chern"] = chern_json(v);
    j["s"] = s.str();
    j["alpha"] = alpha.str();
    j["beta"] = beta.str();
    j["walls"] = std::move(walls);
    j["chamber"] = chamber;
    out << j.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return kOk;
}

// ---- plot ------------------------------------------------------------------------

struct PlotOptions {
  std::string chern = "1,0,-2,2";
  std::string s = "1/3";
  std::string beta_min = "-4";
  std::string beta_max = "-1";
  std::string beta0 = "-2";
  long long samples = 61;
  std::string out = "-";
  std::string svg;
};

struct PlotRow {
  std::string wall;
  WallSample sample;
};

std::string render_svg(const std::vector<PlotRow>& rows, double beta_lo, double beta_hi) {
  double alpha_hi = 1;
  for (const auto& r : rows) alpha_hi = std::max(alpha_hi, r.sample.alpha);
  const double width = 640, height = 400, margin = 40;
  auto px = [&](double b) { return margin + (b - beta_lo) / (beta_hi - beta_lo) * (width - 2 * margin); };
  auto py = [&](double a) { return height - margin - a / alpha_hi * (height - 2 * margin); };
  const std::map<std::string, std::string> colour{
      {"W", "black"}, {"W1", "firebrick"}, {"W2", "royalblue"}, {"hyperbola", "gray"}};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << margin << "\" y1=\"" << py(0) << "\" x2=\"" << width - margin << "\" y2=\"" << py(0)
     << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << width - margin << "\" y=\"" << height - 10 << "\" font-size=\"12\">beta</text>\n";
  os << "<text x=\"5\" y=\"" << margin - 10 << "\" font-size=\"12\">alpha</text>\n";
  double legend_y = margin;
  for (const auto& [name, c] : colour) {
    os << "<g fill=\"" << c << "\">\n";
    for (const auto& r : rows)
      if (r.wall == name)
        os << "<circle cx=\"" << px(r.sample.beta.to_double()) << "\" cy=\"" << py(r.sample.alpha)
           << "\" r=\"2\"/>\n";
    os << "<text x=\"" << width - margin - 60 << "\" y=\"" << legend_y << "\" font-size=\"12\">" << name << "</text>\n";
    os << "</g>\n";
    legend_y += 15;
  }
  os << "</svg>\n";
  return os.str();
}

int cmd_plot(const PlotOptions& o, std::ostream& out) {
  const ChernCharacter v = parse_chern(o.chern);
  const Rational s = parse_rational("--s", o.s);
  if (s.sign() <= 0) throw InputError("--s: need s>0, got " + s.str());
  const Rational lo = parse_rational("--beta-min", o.beta_min);
  const Rational hi = parse_rational("--beta-max", o.beta_max);
  if (!(lo < hi)) throw InputError("--beta-min must be smaller than --beta-max");
  if (o.samples < 2) throw InputError("--samples: need at least 2, got " + std::to_string(o.samples));
  const Rational b0 = parse_rational("--beta0", o.beta0);
  if (!b0.is_integer()) throw InputError("--beta0: " + b0.str() + " is not an integer");

  std::vector<PlotRow> rows;
  auto add = [&](const std::string& name, const std::vector<WallSample>& samples) {
    for (const auto& x : samples) rows.push_back({name, x});
  };
  try {
    std::vector<WallLocus> tilt;
    if (v.in_lattice() && v.ch1() - b0 * v.ch0() > Rational(0)) {
      for (const auto& c : enumerate_destabilizers(v, b0.to_int64())) {
        const WallLocus w = c.wall(b0.to_int64());
        if (std::find(tilt.begin(), tilt.end(), w) == tilt.end()) tilt.push_back(w);
      }
    }
    for (const auto& w : tilt)
      if (w.kind() == WallLocus::Kind::Circle || w.kind() == WallLocus::Kind::VerticalLine)
        add("W", sample_wall(w, s, lo, hi, o.samples));
    if (v == skew_lines_class()) {
      add("W1", sample_wall(wall_w1(), s, lo, hi, o.samples));
      add("W2", sample_wall(wall_w2(), s, lo, hi, o.samples));
    }
    if (!v.ch0().is_zero()) add("hyperbola", sample_wall(hyperbola(v), s, lo, hi, o.samples));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  }
  std::stable_sort(rows.begin(), rows.end(), [](const PlotRow& a, const PlotRow& b) {
    if (a.wall != b.wall) return a.wall < b.wall;
    return a.sample.beta < b.sample.beta;
  });

  std::ostringstream csv;
  csv << "wall,beta,alpha\n";
  for (const auto& r : rows) csv << r.wall << "," << r.sample.beta_text << "," << r.sample.alpha_text << "\n";

  auto write_file = [](const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << content;
    f.close();
    if (!f) throw InputError("cannot write '" + path + "'");
  };
  // Both targets are checked before anything is written.
  if (o.out != "-") write_file(o.out, "");
  if (!o.svg.empty()) write_file(o.svg, "");
  if (!o.svg.empty()) write_file(o.svg, render_svg(rows, lo.to_double(), hi.to_double()));
  if (o.out == "-")
    out << csv.str();
  else
    write_file(o.out, csv.str());
  return kOk;
}

// ---- ideals ------------------------------------------------------------------------

int cmd_ideals(const std::string& suite, bool json, std::ostream& out) {
  std::string text;
  if (suite == "paper") {
    text = std::string(builtin_manifest("paper"));
  } else {
    std::ifstream f(suite, std::ios::binary);
    if (!f) throw InputError("--suite: '" + suite + "' is neither a builtin suite nor a readable file");
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  std::vector<VerificationReport> reports;
  try {
    reports = run_suite(parse_manifest(text));
  } catch (const ManifestError& e) {
    throw InputError(e.what());
  }
  const auto passed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.pass(); });
  if (json) {
    out << reports_json(reports) << "\n";
  } else {
    for (const auto& r : reports) out << r.text();
    out << passed << "/" << reports.size() << " scenarios pass\n";
  }
  return passed == static_cast<long>(reports.size()) ? kOk : kCheckFailed;
}

// ---- chow ----------------------------------------------------------------------------

int cmd_chow(const std::string& sub, bool json, bool format_given, std::ostream& out) {
  if (sub == "todd") {
    const BigradedClass td = todd_p3();
    if (json) {
      ojson j;
      j["todd"] = td.str();
      j["coefficients"] = ojson::array();
      for (int k = 0; k < 4; ++k) j["coefficients"].push_back(td.coeff(k, 0).str());
      out << j.dump(2) << "\n";
    } else {
      out << td.str() << "\n";
    }
    return kOk;
  }
  if (sub == "c1e") {
    const BigradedClass c1 = grr_c1_pushforward();
    if (json) {
      ojson j;
      j["c1"] = c1.str();
      j["integrand_H3Hp"] = grr_degree4_integrand().coeff(3, 1).str();
      out << j.dump(2) << "\n";
    } else {
      out << c1.str() << "\n";
    }
    return kOk;
  }
  if (sub == "mori") {
    const MoriReport r = mori_report();
    // JSON unless text output was asked for explicitly.
    if (json || !format_given)
      out << ojson::parse(r.json()).dump(2) << "\n";
    else
      out << r.text();
    return kOk;
  }
  throw InputError("chow: unknown subcommand '" + sub + "' (expected todd, c1e or mori)");
}

int run(int argc, char** argv) {
  CLI::App app{"Stability walls, ideal limits and Chow computations on P^3",
               "wallcross"};
  app.require_subcommand(1);
  std::string format = "text";
  auto* format_opt = app.add_option("--format", format, "Output format")
                         ->check(CLI::IsMember({"text", "json"}))
                         ->capture_default_str();
  app.set_version_flag("--version", "wallcross 1.0");

  TiltOptions tilt;
  auto* tilt_cmd = app.add_subcommand("tilt-wall", "Enumerate tilt destabilizers of a class along beta = beta0");
  tilt_cmd->add_option("--chern", tilt.chern, "Chern character ch0,ch1,ch2,ch3")->capture_default_str();
  tilt_cmd->add_option("--beta0", tilt.beta0, "Integral beta of the vertical ray")->capture_default_str();
  tilt_cmd->add_option("--rank-bound", tilt.rank_bound, "Search ranks in [-bound, bound]")->capture_default_str();

  LambdaOptions lam;
  auto* lambda_cmd = app.add_subcommand("lambda", "Evaluate the lambda walls W1 and W2 at a point");
  lambda_cmd->add_option("--chern", lam.chern, "Chern character")->capture_default_str();
  lambda_cmd->add_option("--s", lam.s, "Parameter s > 0")->capture_default_str();
  lambda_cmd->add_option("--at", lam.at, "Point alpha,beta")->capture_default_str();

  PlotOptions plot;
  auto* plot_cmd = app.add_subcommand("plot", "Sample the walls and the hyperbola as CSV");
  plot_cmd->add_option("--chern", plot.chern, "Chern character")->capture_default_str();
  plot_cmd->add_option("--s", plot.s, "Parameter s > 0")->capture_default_str();
  plot_cmd->add_option("--beta-min", plot.beta_min)->capture_default_str();
  plot_cmd->add_option("--beta-max", plot.beta_max)->capture_default_str();
  plot_cmd->add_option("--beta0", plot.beta0, "Ray used to find the tilt wall W")->capture_default_str();
  plot_cmd->add_option("--samples", plot.samples, "Number of beta values")->capture_default_str();
  plot_cmd->add_option("--out", plot.out, "CSV path, - for stdout")->capture_default_str();
  plot_cmd->add_option("--svg", plot.svg, "Also render the points as SVG");

  std::string suite = "paper";
  auto* ideals_cmd = app.add_subcommand("ideals", "Run an ideal verification suite");
  ideals_cmd->add_option("--suite", suite, "Builtin suite name or manifest path")->capture_default_str();

  std::string chow_sub;
  auto* chow_cmd = app.add_subcommand("chow", "Todd class, GRR c1 and the Mori cone report");
  chow_cmd->add_option("what", chow_sub, "todd, c1e or mori")->required();

  // --format is accepted before or after the subcommand.
  for (auto* sub : {tilt_cmd, lambda_cmd, plot_cmd, ideals_cmd, chow_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  const bool json = format == "json";
  try {
    if (*tilt_cmd) return cmd_tilt_wall(tilt, json, std::cout);
    if (*lambda_cmd) return cmd_lambda(lam, json, std::cout);
    if (*plot_cmd) return cmd_plot(plot, std::cout);
    if (*ideals_cmd) return cmd_ideals(suite, json, std::cout);
    if (*chow_cmd) return cmd_chow(chow_sub, json, format_opt->count() > 0, std::cout);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvalidInput;
  }
}
