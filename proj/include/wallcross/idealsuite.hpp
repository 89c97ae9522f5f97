#pragma once

// Embedded points, first-order limits of families over k[t]/(t^2), and a
// small manifest language for scripted ideal identities.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wallcross/ideal.hpp"

namespace wallcross {

/// m_P (q, z) + (b q - a z) with m_P = (x, y, z). The ring of q must contain
/// x, y and z. Throws std::invalid_argument for (a, b) = (0, 0).
Ideal embedded_point_ideal(const Polynomial& q, const Rational& a, const Rational& b);

/// ((I + (t^2)) : t) + (t), specialized at t = 0.
Ideal limit_ideal(const Ideal& family, const std::string& t = "t");

/// I + (plane).
Ideal restrict_to_plane(const Ideal& ideal, const Polynomial& plane);

/// Malformed manifest text or a statement that cannot be evaluated.
class ManifestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Statement {
  int line = 0;
  std::string keyword;
  std::string body;
};

/// One scenario of a manifest: a ring, definitions and checks.
struct FamilyScenario {
  std::string name;
  std::string title;
  std::string anchor;
  std::vector<std::string> vars;
  std::vector<Statement> statements;

  /// Source text of the family / restriction / expected limit, if given.
  std::optional<std::string> family() const;
  std::optional<std::string> restriction() const;
  std::optional<std::string> expected_limit() const;
};

struct VerificationStep {
  std::string description;
  std::string computed;
  std::string expected;
  bool pass = false;
};

struct VerificationReport {
  std::string name;
  std::string anchor;
  std::vector<VerificationStep> steps;

  bool pass() const;
  std::string text() const;
};

/// Parses manifest text. Throws ManifestError with the offending line.
std::vector<FamilyScenario> parse_manifest(std::string_view text);

/// Runs every statement. Mathematical failures land in the report;
/// evaluation errors throw ManifestError.
VerificationReport run_scenario(const FamilyScenario& scenario);

/// Scenarios run concurrently; reports come back in manifest order.
std::vector<VerificationReport> run_suite(const std::vector<FamilyScenario>& scenarios);

/// Manifest text compiled into the binary ("paper"). Throws
/// std::invalid_argument for other names.
std::string_view builtin_manifest(std::string_view name);

std::vector<VerificationReport> run_paper_suite();

/// JSON list of reports with per-step booleans and canonical bases.
std::string reports_json(const std::vector<VerificationReport>& reports);

}  // namespace wallcross
