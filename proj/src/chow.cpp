#include "wallcross/chow.hpp"

#include <json.hpp>
#include <stdexcept>

namespace wallcross {

namespace {

std::string with_coefficient(const Rational& c, const std::string& monomial, bool first, const char* sep = "") {
  std::string out;
  const Rational mag = c.abs();
  if (first) {
    if (c.sign() < 0) out += "-";
  } else {
    out += c.sign() < 0 ? " - " : " + ";
  }
  if (monomial.empty()) return out + mag.str();
  if (mag != Rational(1)) out += mag.str() + sep;
  return out + monomial;
}

std::string linear_combination(const std::array<Rational, 4>& v, const std::array<const char*, 4>& names,
                               const char* sep = "") {
  std::string out;
  for (std::size_t k = 0; k < 4; ++k) {
    if (v[k].is_zero()) continue;
    out += with_coefficient(v[k], names[k], out.empty(), sep);
  }
  return out.empty() ? "0" : out;
}

std::string power(const char* base, int e) {
  if (e == 0) return "";
  if (e == 1) return base;
  return std::string(base) + "^" + std::to_string(e);
}

}  // namespace

// ---- BigradedClass ---------------------------------------------------------------

BigradedClass BigradedClass::monomial(int i, int j, Rational c) {
  BigradedClass out;
  if (i < 4 && j < 4) out.c_.at(i).at(j) = std::move(c);
  return out;
}

BigradedClass BigradedClass::degree_part(int k) const {
  BigradedClass out;
  for (int i = 0; i < 4; ++i) {
    const int j = k - i;
    if (j >= 0 && j < 4) out.c_[i][j] = c_[i][j];
  }
  return out;
}

bool BigradedClass::is_zero() const { return *this == BigradedClass(); }

BigradedClass BigradedClass::exp() const {
  if (!c_[0][0].is_zero()) throw std::invalid_argument("exp needs a class without constant term");
  BigradedClass out = one();
  BigradedClass term = one();
  // x^7 = 0 in total degree.
  for (int k = 1; k <= 6; ++k) {
    term = Rational(1, k) * (term * *this);
    out += term;
  }
  return out;
}

std::string BigradedClass::str() const {
  std::string out;
  for (int deg = 0; deg <= 6; ++deg) {
    for (int i = 3; i >= 0; --i) {
      const int j = deg - i;
      if (j < 0 || j > 3 || c_[i][j].is_zero()) continue;
      out += with_coefficient(c_[i][j], power("H", i) + power("H'", j), out.empty());
    }
  }
  return out.empty() ? "0" : out;
}

BigradedClass& BigradedClass::operator+=(const BigradedClass& o) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c_[i][j] += o.c_[i][j];
  return *this;
}

BigradedClass& BigradedClass::operator-=(const BigradedClass& o) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c_[i][j] -= o.c_[i][j];
  return *this;
}

BigradedClass operator*(const BigradedClass& a, const BigradedClass& b) {
  BigradedClass out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (a.c_[i][j].is_zero()) continue;
      for (int k = 0; i + k < 4; ++k)
        for (int l = 0; j + l < 4; ++l) out.c_[i + k][j + l] += a.c_[i][j] * b.c_[k][l];
    }
  return out;
}

BigradedClass operator*(const Rational& k, const BigradedClass& a) {
  BigradedClass out = a;
  for (auto& row : out.c_)
    for (auto& x : row) x *= k;
  return out;
}

// ---- GRR --------------------------------------------------------------------------

BigradedClass todd_p3() {
  // (1 - e^{-H}) / H = sum (-1)^k H^k / (k+1)!, inverted as a power series.
  std::array<Rational, 4> f{}, g{};
  Rational factorial(1);
  for (int k = 0; k < 4; ++k) {
    factorial *= Rational(k + 1);
    f[k] = (k % 2 ? Rational(-1) : Rational(1)) / factorial;
  }
  g[0] = Rational(1);
  for (int n = 1; n < 4; ++n) {
    Rational acc;
    for (int k = 1; k <= n; ++k) acc += f[k] * g[n - k];
    g[n] = -acc;
  }
  BigradedClass inv;
  for (int k = 0; k < 4; ++k) inv.coeff(k, 0) = g[k];
  return inv * inv * inv * inv;
}

BigradedClass pushforward_pr2(const BigradedClass& x) {
  BigradedClass out;
  for (int j = 0; j < 4; ++j) out.coeff(0, j) = x.coeff(3, j);
  return out;
}

BigradedClass grr_degree4_integrand(long long twist) {
  const BigradedClass h = BigradedClass::H();
  const BigradedClass hp = BigradedClass::Hp();
  const BigradedClass line = (Rational(twist) * h).exp();
  const BigradedClass incidence = BigradedClass::one() - (-(h + hp)).exp();
  return (line * incidence * todd_p3()).degree_part(4);
}

BigradedClass grr_c1_pushforward(long long twist) {
  return pushforward_pr2(grr_degree4_integrand(twist)).degree_part(1);
}

// ---- divisors and curves ------------------------------------------------------------

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  for (std::size_t k = 0; k < 4; ++k) v[k] += o.v[k];
  return *this;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  DivisorClass out = a;
  for (std::size_t k = 0; k < 4; ++k) out.v[k] -= b.v[k];
  return out;
}

DivisorClass operator*(const Rational& k, const DivisorClass& a) {
  DivisorClass out = a;
  for (auto& x : out.v) x *= k;
  return out;
}

std::string DivisorClass::str() const { return linear_combination(v, {"H", "H'", "A", "E'"}); }

CurveClass operator+(const CurveClass& a, const CurveClass& b) {
  CurveClass out = a;
  for (std::size_t k = 0; k < 4; ++k) out.v[k] += b.v[k];
  return out;
}

CurveClass operator*(const Rational& k, const CurveClass& a) {
  CurveClass out = a;
  for (auto& x : out.v) x *= k;
  return out;
}

std::string CurveClass::str() const {
  return linear_combination(v, {"alpha", "beta", "gamma", "delta"}, "*");
}

Rational pair(const DivisorClass& d, const CurveClass& c) {
  return d.v[0] * c.v[0] + d.v[1] * c.v[1] + d.v[2] * c.v[2] - d.v[3] * c.v[3];
}

const std::map<std::string, DivisorClass>& named_divisors() {
  static const std::map<std::string, DivisorClass> table = [] {
    auto d = [](int a, int b, int c, int e) { return DivisorClass{{Rational(a), Rational(b), Rational(c), Rational(e)}}; };
    return std::map<std::string, DivisorClass>{
        {"H", d(1, 0, 0, 0)},  {"H'", d(0, 1, 0, 0)},  {"A", d(0, 0, 1, 0)},    {"E'", d(0, 0, 0, 1)},
        {"D", d(0, 2, 1, 0)},  {"D'", d(2, 2, 1, -1)}, {"E", d(1, 1, 0, -1)},   {"K", d(-4, -8, -6, 1)},
    };
  }();
  return table;
}

const DivisorClass& named_divisor(const std::string& name) {
  const auto& table = named_divisors();
  const auto it = table.find(name);
  if (it == table.end()) throw std::out_of_range("unknown divisor '" + name + "'");
  return it->second;
}

std::array<CurveClass, 4> dual_curve_basis(const std::array<DivisorClass, 4>& divs) {
  // Row i of m is divs[i] with the metric applied; solve m * C = I.
  std::array<std::array<Rational, 8>, 4> m{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 4; ++k) m[i][k] = k == 3 ? -divs[i].v[k] : divs[i].v[k];
    m[i][4 + i] = Rational(1);
  }
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    while (pivot < 4 && m[pivot][col].is_zero()) ++pivot;
    if (pivot == 4) throw std::domain_error("degenerate basis");
    std::swap(m[col], m[pivot]);
    const Rational inv = m[col][col].inverse();
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rational factor = m[r][col];
      for (std::size_t k = 0; k < 8; ++k) m[r][k] -= factor * m[col][k];
    }
  }
  std::array<CurveClass, 4> out{};
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t k = 0; k < 4; ++k) out[j].v[k] = m[k][4 + j];
  return out;
}

// ---- Mori cone ----------------------------------------------------------------------

const std::array<std::string, 4>& MoriReport::ray_names() {
  static const std::array<std::string, 4> names{"epsilon", "eta", "zeta", "delta"};
  return names;
}

MoriReport mori_report() {
  MoriReport report;
  report.K = named_divisor("K");
  report.rays = dual_curve_basis(
      {named_divisor("H"), named_divisor("H'"), named_divisor("D"), named_divisor("D'") + named_divisor("H'")});
  for (std::size_t k = 0; k < 4; ++k) {
    report.pairings[k] = pair(report.K, report.rays[k]);
    if (report.pairings[k].sign() < 0) report.negative_rays.push_back(MoriReport::ray_names()[k]);
    if (report.pairings[k].sign() > 0) report.positive_rays.push_back(MoriReport::ray_names()[k]);
  }
  report.contraction_of_zeta = "C -> C'";
  return report;
}

std::string MoriReport::json() const {
  nlohmann::ordered_json j;
  j["K"] = nlohmann::json::array();
  for (const auto& x : K.v) j["K"].push_back(x.str());
  j["pairings"] = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < 4; ++k) j["pairings"][ray_names()[k]] = pairings[k].str();
  j["negative_rays"] = negative_rays;
  j["positive_rays"] = positive_rays;
  j["contraction_of_zeta"] = contraction_of_zeta;
  return j.dump();
}

std::string MoriReport::text() const {
  std::string out = "K = " + K.str() + "\n";
  for (std::size_t k = 0; k < 4; ++k) {
    out += "K." + ray_names()[k] + " = " + pairings[k].str() + "   (" + ray_names()[k] + " = " + rays[k].str() + ")\n";
  }
  auto join = [](const std::vector<std::string>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
    return s;
  };
  out += "K-negative rays: " + join(negative_rays) + "\n";
  out += "K-positive rays: " + join(positive_rays) + "\n";
  out += "contraction of zeta: " + contraction_of_zeta + "\n";
  return out;
}

}  // namespace wallcross
