#include "wandering/pattern.hpp"

#include <algorithm>
#include <sstream>

#include "wandering/errors.hpp"

namespace wandering {

DegreePattern::DegreePattern(int k, std::array<std::int64_t, 6> gamma) : k_(k), gamma_(gamma) {
  if (k < 2) throw InvalidPattern("k must be at least 2, got " + std::to_string(k));
  for (std::size_t i = 0; i < 6; ++i) {
    if (gamma_[i] < 0) throw InvalidPattern("negative degree gamma_" + std::to_string(i));
    for (std::size_t j = 0; j < i; ++j) {
      if (gamma_[i] % k == gamma_[j] % k) {
        throw InvalidPattern("gamma_" + std::to_string(j) + " = " + std::to_string(gamma_[j]) + " and gamma_" +
                             std::to_string(i) + " = " + std::to_string(gamma_[i]) + " coincide mod " +
                             std::to_string(k));
      }
    }
  }
}

DegreePattern DegreePattern::standard(int k) { return DegreePattern(k, {0, 1, 2, 3, 4, 5}); }

DegreePattern DegreePattern::from_phi(int k, const std::array<int, 6>& phi) {
  std::array<std::int64_t, 6> gamma{};
  for (std::size_t i = 0; i < 6; ++i) {
    if (phi[i] < 0) throw InvalidPattern("negative phi_" + std::to_string(i));
    gamma[i] = static_cast<std::int64_t>(phi[i]) * k + static_cast<std::int64_t>(i);
  }
  return DegreePattern(k, gamma);
}

DegreePattern DegreePattern::from_phi(int k, int phi2, int phi3) { return from_phi(k, {0, 0, phi2, phi3, 0, 0}); }

std::optional<std::array<int, 6>> DegreePattern::phi() const {
  std::array<int, 6> out{};
  for (std::size_t i = 0; i < 6; ++i) {
    std::int64_t rest = gamma_[i] - static_cast<std::int64_t>(i);
    if (rest < 0 || rest % k_ != 0) return std::nullopt;
    out[i] = static_cast<int>(rest / k_);
  }
  return out;
}

std::array<std::int64_t, 12> DegreePattern::matrix_indices() const {
  std::array<std::int64_t, 12> out{};
  for (std::int64_t s = 1; s <= 3; ++s) {
    for (std::size_t i = 0; i < 4; ++i) out[static_cast<std::size_t>((s - 1) * 4) + i] = s * k_ + gamma_[i];
  }
  return out;
}

std::int64_t DegreePattern::max_degree() const {
  std::int64_t high = *std::max_element(gamma_.begin(), gamma_.begin() + 4) + k_;
  return std::max({high, gamma_[4], gamma_[5]});
}

std::string DegreePattern::describe() const {
  std::ostringstream os;
  os << "k=" << k_ << " gamma=(";
  for (std::size_t i = 0; i < 6; ++i) os << (i ? "," : "") << gamma_[i];
  os << ')';
  return os.str();
}

}  // namespace wandering
