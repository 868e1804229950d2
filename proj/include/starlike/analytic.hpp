#pragma once

// Members of the classes T1 (ratios subordinate to sqrt(1+z)) and T2 (ratios
// subordinate to e^z), built as f(z) = z p(z) p1(z) p2(z) where every factor is
// h(w(z)) for a finite Blaschke-product Schwarz function w.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace starlike {

using ComplexPoint = std::complex<double>;

enum class Family { T1, T2 };

enum class FactorKind { SqrtOnePlus, Exp };

constexpr FactorKind factor_kind(Family family) noexcept {
  return family == Family::T1 ? FactorKind::SqrtOnePlus : FactorKind::Exp;
}

constexpr std::string_view to_string(Family family) noexcept {
  return family == Family::T1 ? "t1" : "t2";
}

constexpr std::string_view to_string(FactorKind kind) noexcept {
  return kind == FactorKind::SqrtOnePlus ? "sqrt_one_plus" : "exp";
}

inline Family parse_family(std::string_view name) {
  if (name == "t1" || name == "T1") return Family::T1;
  if (name == "t2" || name == "T2") return Family::T2;
  throw std::invalid_argument("unknown family '" + std::string(name) +
                              "' (expected t1 or t2)");
}

namespace detail {

inline void require_in_disc(ComplexPoint z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
      std::abs(z) >= 1.0) {
    throw std::domain_error("point must lie in the open unit disc");
  }
}

}  // namespace detail

/// Schwarz function w(z) = e^{i phase} z prod_j (a_j - z) / (1 - conj(a_j) z).
///
/// Every such map is analytic on the closed disc, fixes the origin and
/// satisfies |w(z)| <= |z|. The empty product gives a rotation; phase 0 with no
/// factors is the identity.
class SchwarzMap {
 public:
  SchwarzMap() = default;

  SchwarzMap(double phase, std::vector<ComplexPoint> blaschke_params)
      : params_(std::move(blaschke_params)) {
    if (!std::isfinite(phase)) {
      throw std::invalid_argument("Schwarz map phase must be finite");
    }
    constexpr double two_pi = 2.0 * std::numbers::pi;
    phase_ = std::fmod(phase, two_pi);
    if (phase_ < 0.0) phase_ += two_pi;
    rotation_ = std::polar(1.0, phase_);
    for (const auto& a : params_) {
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) ||
          std::abs(a) >= 1.0) {
        throw std::invalid_argument(
            "Blaschke parameters must lie in the open unit disc");
      }
    }
  }

  static SchwarzMap identity() { return {}; }

  double phase() const noexcept { return phase_; }
  std::span<const ComplexPoint> blaschke_params() const noexcept {
    return params_;
  }
  bool is_identity() const noexcept { return phase_ == 0.0 && params_.empty(); }

  // Unchecked evaluation; callers validate the domain.
  ComplexPoint value(ComplexPoint z) const noexcept {
    ComplexPoint product = rotation_ * z;
    for (const auto& a : params_) product *= blaschke_factor(a, z);
    return product;
  }

  ComplexPoint derivative(ComplexPoint z) const noexcept {
    // d/dz [z b_1 ... b_n] with prefix/suffix products so no b_j is divided out.
    const std::size_t n = params_.size();
    if (n == 0) return rotation_;
    std::vector<ComplexPoint> factors(n);
    std::vector<ComplexPoint> suffix(n + 1, ComplexPoint{1.0, 0.0});
    for (std::size_t j = 0; j < n; ++j) factors[j] = blaschke_factor(params_[j], z);
    for (std::size_t j = n; j-- > 0;) suffix[j] = suffix[j + 1] * factors[j];

    ComplexPoint sum = suffix[0];
    ComplexPoint prefix{1.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      sum += z * prefix * blaschke_factor_derivative(params_[j], z) * suffix[j + 1];
      prefix *= factors[j];
    }
    return rotation_ * sum;
  }

 private:
  static ComplexPoint blaschke_factor(ComplexPoint a, ComplexPoint z) noexcept {
    return (a - z) / (1.0 - std::conj(a) * z);
  }

  static ComplexPoint blaschke_factor_derivative(ComplexPoint a,
                                                 ComplexPoint z) noexcept {
    const ComplexPoint denom = 1.0 - std::conj(a) * z;
    return (std::norm(a) - 1.0) / (denom * denom);
  }

  double phase_ = 0.0;
  std::vector<ComplexPoint> params_;
  ComplexPoint rotation_{1.0, 0.0};
};

inline ComplexPoint eval_schwarz(const SchwarzMap& map, ComplexPoint z) {
  detail::require_in_disc(z);
  return map.value(z);
}

inline ComplexPoint eval_schwarz_deriv(const SchwarzMap& map, ComplexPoint z) {
  detail::require_in_disc(z);
  return map.derivative(z);
}

/// p = h o w with h(z) = sqrt(1+z) (principal branch) or h(z) = e^z.
struct SubordinateFactor {
  FactorKind kind = FactorKind::SqrtOnePlus;
  SchwarzMap map;
};

inline ComplexPoint eval_factor(const SubordinateFactor& p, ComplexPoint z) {
  const ComplexPoint w = eval_schwarz(p.map, z);
  // |w| < 1 keeps 1 + w in the right half-plane, away from the sqrt branch cut.
  return p.kind == FactorKind::SqrtOnePlus ? std::sqrt(1.0 + w) : std::exp(w);
}

/// z p'(z) / p(z), from 2zp'/p = zw'/(1+w) and zp'/p = zw' respectively.
inline ComplexPoint log_derivative_factor(const SubordinateFactor& p,
                                          ComplexPoint z) {
  detail::require_in_disc(z);
  const ComplexPoint zw_prime = z * p.map.derivative(z);
  if (p.kind == FactorKind::Exp) return zw_prime;
  return zw_prime / (2.0 * (1.0 + p.map.value(z)));
}

/// A member f(z) = z p(z) p1(z) p2(z) of T1 or T2.
class ClassMember {
 public:
  ClassMember(Family family, std::array<SubordinateFactor, 3> factors)
      : family_(family), factors_(std::move(factors)) {
    for (const auto& factor : factors_) {
      if (factor.kind != factor_kind(family_)) {
        throw std::invalid_argument(
            "every factor of a class member must use the family's kind");
      }
    }
  }

  Family family() const noexcept { return family_; }
  const std::array<SubordinateFactor, 3>& factors() const noexcept {
    return factors_;
  }
  const SubordinateFactor& factor_p() const noexcept { return factors_[0]; }
  const SubordinateFactor& factor_p1() const noexcept { return factors_[1]; }
  const SubordinateFactor& factor_p2() const noexcept { return factors_[2]; }

 private:
  Family family_;
  std::array<SubordinateFactor, 3> factors_;
};

inline ComplexPoint eval_member(const ClassMember& f, ComplexPoint z) {
  ComplexPoint value = z;
  for (const auto& factor : f.factors()) value *= eval_factor(factor, z);
  return value;
}

/// z f'(z) / f(z) = 1 + sum of the factor log-derivatives; the limit 1 at z = 0.
inline ComplexPoint log_derivative_member(const ClassMember& f, ComplexPoint z) {
  detail::require_in_disc(z);
  if (z == ComplexPoint{}) return {1.0, 0.0};
  ComplexPoint sum{1.0, 0.0};
  for (const auto& factor : f.factors()) sum += log_derivative_factor(factor, z);
  return sum;
}

/// z(1+z)^{3/2} for T1 and z e^{3z} for T2: all three Schwarz maps are the
/// identity.
inline ClassMember extremal_member(Family family) {
  const SubordinateFactor factor{factor_kind(family), SchwarzMap::identity()};
  return ClassMember(family, {factor, factor, factor});
}

}  // namespace starlike
