#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include "kitnet/errors.hpp"

namespace kitnet {

enum class Boundary { periodic, open };

inline std::string to_string(Boundary b) {
  return b == Boundary::periodic ? "periodic" : "open";
}

// Hard cap on chain length; 2^16 amplitudes is the largest vector we keep dense.
inline constexpr int kDefaultMaxSites = 16;

// Physical parameters of one Kitaev chain instance. Energies are in units of
// the hopping w (w itself is kept as a free scale).
struct ChainSpec {
  int n_sites = 14;
  double hopping = 1.0;             // w
  double chemical_potential = 0.0;  // mu
  double pairing = 0.0;             // delta
  Boundary boundary = Boundary::periodic;

  void validate(int max_sites = kDefaultMaxSites) const {
    if (n_sites < 2) throw DomainError("ChainSpec: n_sites must be >= 2");
    if (n_sites > max_sites)
      throw CapacityError("ChainSpec: n_sites " + std::to_string(n_sites) +
                          " exceeds maximum " + std::to_string(max_sites));
    if (!std::isfinite(hopping) || !std::isfinite(chemical_potential) ||
        !std::isfinite(pairing))
      throw DomainError("ChainSpec: parameters must be finite");
  }

  std::size_t dimension() const { return std::size_t{1} << n_sites; }
};

// Parameters of the cyclic XY spin chain: J = J_x + J_y, gamma = J_x - J_y.
struct XYSpec {
  int n_sites = 14;
  double coupling_sum = 1.0;  // J
  double anisotropy = 0.0;    // gamma
  double field = 0.0;         // h

  void validate(int max_sites = kDefaultMaxSites) const {
    if (n_sites < 2) throw DomainError("XYSpec: n_sites must be >= 2");
    if (n_sites > max_sites)
      throw CapacityError("XYSpec: n_sites " + std::to_string(n_sites) +
                          " exceeds maximum " + std::to_string(max_sites));
    if (!std::isfinite(coupling_sum) || !std::isfinite(anisotropy) || !std::isfinite(field))
      throw DomainError("XYSpec: parameters must be finite");
  }

  std::size_t dimension() const { return std::size_t{1} << n_sites; }
};

}  // namespace kitnet
