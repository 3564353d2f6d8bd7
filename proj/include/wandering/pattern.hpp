#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wandering {

/// Monomial degrees carrying the generators' coefficients.
///
/// F_1 has coefficients at degrees gamma[0..4] and k + gamma[0..3]; F_2 at
/// gamma[0..3] and gamma[5]. gamma[4] and gamma[5] are the register degrees
/// of a_4 and b_5. All six degrees must be pairwise distinct modulo k, which
/// is what keeps the only overlaps between shifted copies of F_1 and F_2 at
/// the degrees s*k + gamma[i].
class DegreePattern {
 public:
  /// Throws InvalidPattern unless k >= 2, every gamma >= 0 and the gammas are
  /// pairwise distinct mod k.
  DegreePattern(int k, std::array<std::int64_t, 6> gamma);

  /// gamma = (0, 1, 2, 3, 4, 5).
  static DegreePattern standard(int k);

  /// gamma_i = phi_i * k + i.
  static DegreePattern from_phi(int k, const std::array<int, 6>& phi);

  /// Searchable family: phi = (0, 0, phi2, phi3, 0, 0).
  static DegreePattern from_phi(int k, int phi2, int phi3);

  int k() const noexcept { return k_; }
  const std::array<std::int64_t, 6>& gamma() const noexcept { return gamma_; }
  std::int64_t gamma(std::size_t i) const { return gamma_.at(i); }

  /// phi_i when gamma_i = phi_i * k + i for every i, otherwise nullopt.
  std::optional<std::array<int, 6>> phi() const;

  /// The twelve indices s*k + gamma_i, s = 1..3, i = 0..3, row-major in s.
  std::array<std::int64_t, 12> matrix_indices() const;

  /// Largest degree of any generator coefficient.
  std::int64_t max_degree() const;

  std::string describe() const;

  friend bool operator==(const DegreePattern& a, const DegreePattern& b) {
    return a.k_ == b.k_ && a.gamma_ == b.gamma_;
  }

 private:
  int k_;
  std::array<std::int64_t, 6> gamma_;
};

}  // namespace wandering
