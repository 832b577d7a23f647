#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace stabur {

/// Outcome distribution: entries in [0,1] summing to 1. Sums within 1e-12
/// of one are renormalized; anything else is rejected.
class ProbabilityDistribution {
 public:
  explicit ProbabilityDistribution(std::vector<double> probs);
  ProbabilityDistribution(std::initializer_list<double> probs)
      : ProbabilityDistribution(std::vector<double>(probs)) {}

  /// Two-outcome distribution ((1 + e)/2, (1 - e)/2) of a ±1 observable
  /// with expectation e, clamped to [-1, 1].
  static ProbabilityDistribution from_expectation(double expectation);

  std::span<const double> probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

 private:
  std::vector<double> probs_;
};

enum class EntropyKind { kShannon, kMin, kTsallis };

/// Entropy function selector. q is only meaningful for Tsallis (q > 1).
struct EntropySpec {
  EntropyKind kind = EntropyKind::kShannon;
  double q = 0.0;

  static EntropySpec shannon() { return {EntropyKind::kShannon, 0.0}; }
  static EntropySpec min() { return {EntropyKind::kMin, 0.0}; }
  /// Throws ValidationError unless q > 1.
  static EntropySpec tsallis(double q);

  /// "shannon", "min" or "tsallis".
  std::string kind_name() const;
  /// "shannon", "min" or "tsallis(q=...)".
  std::string describe() const;
};

/// Parses "shannon", "min" or "tsallis"; `q` is required for tsallis.
EntropySpec parse_entropy_spec(const std::string& kind, double q);

/// Shannon (bits), min-entropy (bits) or Tsallis entropy of `p`.
double entropy(const EntropySpec& spec, const ProbabilityDistribution& p);

/// Shannon entropy in nats, the q -> 1 limit of the Tsallis entropy.
double shannon_nats(const ProbabilityDistribution& p);

/// Entropy S0 of the flat two-outcome distribution (1/2, 1/2).
double flat_entropy(const EntropySpec& spec);

/// Entropy of a ±1 observable as a function of its squared expectation x:
/// S(((1 + sqrt x)/2, (1 - sqrt x)/2)). Throws ValidationError outside [0,1].
double s_tilde(const EntropySpec& spec, double x);

enum class Curvature { kConcave, kLinear, kConvex };

std::string to_string(Curvature c);

/// Curvature of the Tsallis s_tilde on [0,1]: concave for 1<q<2 and q>3,
/// linear at q = 2 and q = 3, convex for 2<q<3.
Curvature tsallis_concavity_class(double q);

/// True when s_tilde is concave (or linear) on [0,1]: Shannon, and Tsallis
/// outside (2,3). The min-entropy does not qualify.
bool is_concave_in_squared_expectation(const EntropySpec& spec);

/// Throws HypothesisError naming `context` when the spec is not concave in
/// the squared expectation.
void require_concave(const EntropySpec& spec, const std::string& context);

/// Sign-carrying factor of the second derivative of the Tsallis s_tilde in
/// y = sqrt(x):
///   f_q(y) = (1+y)^{q-2}[1 - y(q-2)] - (1-y)^{q-2}[1 + y(q-2)].
/// Negative on (0,1] exactly when s_tilde is concave. Requires q > 1 and
/// 0 < y <= 1.
double f_q(double q, double y);

/// f'_q(y) = -(q-2)(q-1) y [(1+y)^{q-3} - (1-y)^{q-3}].
double f_q_prime(double q, double y);

struct CurvePoint {
  double a1 = 0.0;
  double a2 = 0.0;
};

/// Bisection settings for boundary_curve.
inline constexpr double kBisectionTolerance = 1e-12;
inline constexpr int kBisectionMaxIterations = 200;

/// First-quadrant arc of s_tilde(a1^2) + s_tilde(a2^2) = S0 for `samples`
/// equally spaced a1 in [0,1]; the other quadrants follow by sign symmetry.
/// Rejects specs that are not concave in the squared expectation.
std::vector<CurvePoint> boundary_curve(const EntropySpec& spec, int samples);

/// Mirrors a first-quadrant arc into all four quadrants, counter-clockwise
/// from (1, 0), dropping duplicated axis points.
std::vector<CurvePoint> expand_quadrants(std::span<const CurvePoint> arc);

}  // namespace stabur
