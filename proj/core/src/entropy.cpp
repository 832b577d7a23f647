#include "stabur/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "stabur/errors.hpp"

namespace stabur {

namespace {

constexpr double kSumTolerance = 1e-12;

}  // namespace

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) throw ValidationError("empty probability distribution");
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    double& p = probs_[i];
    if (!std::isfinite(p) || p < -kSumTolerance || p > 1.0 + kSumTolerance) {
      std::ostringstream os;
      os << "probability " << i << " = " << p << " outside [0,1]";
      throw ValidationError(os.str());
    }
    p = std::clamp(p, 0.0, 1.0);
  }
  const double sum = std::accumulate(probs_.begin(), probs_.end(), 0.0);
  if (std::abs(sum - 1.0) > kSumTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "probabilities sum to " << sum;
    throw ValidationError(os.str());
  }
  for (double& p : probs_) p /= sum;
}

ProbabilityDistribution ProbabilityDistribution::from_expectation(double expectation) {
  const double e = std::clamp(expectation, -1.0, 1.0);
  return ProbabilityDistribution({(1.0 + e) / 2.0, (1.0 - e) / 2.0});
}

EntropySpec EntropySpec::tsallis(double q) {
  if (!(q > 1.0) || !std::isfinite(q)) {
    std::ostringstream os;
    os << "Tsallis parameter q must be > 1, got " << q;
    throw ValidationError(os.str());
  }
  return {EntropyKind::kTsallis, q};
}

std::string EntropySpec::kind_name() const {
  switch (kind) {
    case EntropyKind::kShannon:
      return "shannon";
    case EntropyKind::kMin:
      return "min";
    case EntropyKind::kTsallis:
      return "tsallis";
  }
  return "unknown";
}

std::string EntropySpec::describe() const {
  if (kind != EntropyKind::kTsallis) return kind_name();
  std::ostringstream os;
  os << "tsallis(q=" << q << ")";
  return os.str();
}

EntropySpec parse_entropy_spec(const std::string& kind, double q) {
  if (kind == "shannon") return EntropySpec::shannon();
  if (kind == "min") return EntropySpec::min();
  if (kind == "tsallis") return EntropySpec::tsallis(q);
  throw ValidationError("unknown entropy kind '" + kind + "'");
}

double entropy(const EntropySpec& spec, const ProbabilityDistribution& p) {
  switch (spec.kind) {
    case EntropyKind::kShannon: {
      double h = 0.0;
      for (double v : p.probs()) {
        if (v > 0.0) h -= v * std::log2(v);
      }
      return std::max(h, 0.0);
    }
    case EntropyKind::kMin: {
      const double top = *std::max_element(p.probs().begin(), p.probs().end());
      return std::max(-std::log2(top), 0.0);
    }
    case EntropyKind::kTsallis: {
      double power_sum = 0.0;
      for (double v : p.probs()) power_sum += std::pow(v, spec.q);
      return std::max((1.0 - power_sum) / (spec.q - 1.0), 0.0);
    }
  }
  throw InternalError("unhandled entropy kind");
}

double shannon_nats(const ProbabilityDistribution& p) {
  double h = 0.0;
  for (double v : p.probs()) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

double flat_entropy(const EntropySpec& spec) {
  switch (spec.kind) {
    case EntropyKind::kShannon:
    case EntropyKind::kMin:
      return 1.0;
    case EntropyKind::kTsallis:
      return (1.0 - std::exp2(1.0 - spec.q)) / (spec.q - 1.0);
  }
  throw InternalError("unhandled entropy kind");
}

double s_tilde(const EntropySpec& spec, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os << "squared expectation " << x << " outside [0,1]";
    throw ValidationError(os.str());
  }
  const double root = std::sqrt(x);
  return entropy(spec, ProbabilityDistribution({(1.0 + root) / 2.0, (1.0 - root) / 2.0}));
}

std::string to_string(Curvature c) {
  switch (c) {
    case Curvature::kConcave:
      return "concave";
    case Curvature::kLinear:
      return "linear";
    case Curvature::kConvex:
      return "convex";
  }
  return "unknown";
}

Curvature tsallis_concavity_class(double q) {
  if (!(q > 1.0)) {
    std::ostringstream os;
    os << "Tsallis parameter q must be > 1, got " << q;
    throw ValidationError(os.str());
  }
  if (q == 2.0 || q == 3.0) return Curvature::kLinear;
  if (q > 2.0 && q < 3.0) return Curvature::kConvex;
  return Curvature::kConcave;
}

bool is_concave_in_squared_expectation(const EntropySpec& spec) {
  switch (spec.kind) {
    case EntropyKind::kShannon:
      return true;
    case EntropyKind::kMin:
      return false;
    case EntropyKind::kTsallis:
      return tsallis_concavity_class(spec.q) != Curvature::kConvex;
  }
  return false;
}

void require_concave(const EntropySpec& spec, const std::string& context) {
  if (is_concave_in_squared_expectation(spec)) return;
  std::string why;
  if (spec.kind == EntropyKind::kMin) {
    why = "the min-entropy is not concave in the squared expectation value";
  } else {
    why = "the Tsallis entropy with 2 < q < 3 is convex, not concave, in the squared "
          "expectation value";
  }
  throw HypothesisError(context + " requires an entropy concave in the squared expectation; " +
                        spec.describe() + ": " + why);
}

namespace {

void check_f_domain(double q, double y) {
  if (!(q > 1.0) || !(y > 0.0 && y <= 1.0)) {
    std::ostringstream os;
    os << "f_q requires q > 1 and 0 < y <= 1, got q=" << q << ", y=" << y;
    throw ValidationError(os.str());
  }
}

}  // namespace

double f_q(double q, double y) {
  check_f_domain(q, y);
  const double e = q - 2.0;
  return std::pow(1.0 + y, e) * (1.0 - y * e) - std::pow(1.0 - y, e) * (1.0 + y * e);
}

double f_q_prime(double q, double y) {
  check_f_domain(q, y);
  return -(q - 2.0) * (q - 1.0) * y * (std::pow(1.0 + y, q - 3.0) - std::pow(1.0 - y, q - 3.0));
}

std::vector<CurvePoint> boundary_curve(const EntropySpec& spec, int samples) {
  require_concave(spec, "boundary_curve");
  if (samples < 2) throw ValidationError("boundary_curve needs at least 2 samples");
  const double s0 = flat_entropy(spec);
  std::vector<CurvePoint> out;
  out.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    const double a1 = static_cast<double>(k) / (samples - 1);
    const double left = s_tilde(spec, a1 * a1);
    // g(a2) = left + s_tilde(a2^2) - S0 decreases from g(0) >= 0 to g(1) <= 0.
    const auto g = [&](double a2) { return left + s_tilde(spec, a2 * a2) - s0; };
    double a2;
    if (g(0.0) <= 1e-15) {
      a2 = 0.0;
    } else if (g(1.0) >= -1e-15) {
      a2 = 1.0;
    } else {
      double lo = 0.0;
      double hi = 1.0;
      for (int it = 0; it < kBisectionMaxIterations && hi - lo > kBisectionTolerance; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) > 0.0 ? lo : hi) = mid;
      }
      a2 = 0.5 * (lo + hi);
    }
    out.push_back({a1, a2});
  }
  return out;
}

std::vector<CurvePoint> expand_quadrants(std::span<const CurvePoint> arc) {
  // Arc runs from a1 = 0 (top) to a1 = 1 (right). Walk it right-to-top,
  // then mirror through the remaining quadrants.
  std::vector<CurvePoint> q1(arc.rbegin(), arc.rend());
  std::vector<CurvePoint> out;
  const auto push = [&](CurvePoint p) {
    if (!out.empty() && out.back().a1 == p.a1 && out.back().a2 == p.a2) return;
    out.push_back(p);
  };
  for (const auto& p : q1) push({p.a1, p.a2});
  for (auto it = q1.rbegin(); it != q1.rend(); ++it) push({-it->a1, it->a2});
  for (const auto& p : q1) push({-p.a1, -p.a2});
  for (auto it = q1.rbegin(); it != q1.rend(); ++it) push({it->a1, -it->a2});
  if (out.size() > 1 && out.back().a1 == out.front().a1 && out.back().a2 == out.front().a2) {
    out.pop_back();
  }
  // -0.0 from mirroring axis points prints as "-0"; normalize.
  for (auto& p : out) {
    if (p.a1 == 0.0) p.a1 = 0.0;
    if (p.a2 == 0.0) p.a2 = 0.0;
  }
  return out;
}

}  // namespace stabur
