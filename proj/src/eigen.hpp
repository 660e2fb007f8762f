#pragma once

#include <stdexcept>
#include <string>

#include "spectra.hpp"
#include "sympoly.hpp"

namespace cms {

enum class Algorithm { Sutherland, Novel };

inline const char* to_string(Algorithm a) {
  return a == Algorithm::Sutherland ? "sutherland" : "novel";
}

/// An internal invariant failed (e.g. an exact eigen-check). Maps to exit code 3.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct EigenResult {
  Weight n;
  Energy energy;             ///< E_n
  Energy excitation_energy;  ///< E'_n = E_n − E₀
  SymPoly phi;               ///< M basis, coefficient 1 on m_n
  Algorithm algorithm;
};

/// Throws InternalError unless H'Φ = E'Φ exactly.
void require_eigenpair(const SymPoly& phi, const Energy& eigenvalue, const char* who);

}  // namespace cms
