// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

namespace givens {

enum class AlgorithmId {
  Real39,
  Real310,
  RealHigham,
  Cplx39,
  Cplx310,
  CplxNew,
  CplxCast,
};

inline constexpr std::array kAllAlgorithms = {
    AlgorithmId::Real39,  AlgorithmId::Real310, AlgorithmId::RealHigham, AlgorithmId::Cplx39,
    AlgorithmId::Cplx310, AlgorithmId::CplxNew, AlgorithmId::CplxCast,
};

/// The four complex generators, in the order tables list them.
inline constexpr std::array kComplexAlgorithms = {
    AlgorithmId::Cplx39,
    AlgorithmId::Cplx310,
    AlgorithmId::CplxNew,
    AlgorithmId::CplxCast,
};

inline constexpr std::array kRealAlgorithms = {
    AlgorithmId::Real39,
    AlgorithmId::Real310,
    AlgorithmId::RealHigham,
};

constexpr bool is_complex(AlgorithmId id) {
  return id == AlgorithmId::Cplx39 || id == AlgorithmId::Cplx310 ||
         id == AlgorithmId::CplxNew || id == AlgorithmId::CplxCast;
}

/// Command-line / CSV name, e.g. "cplx_new".
constexpr std::string_view name_of(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::Real39: return "real39";
    case AlgorithmId::Real310: return "real310";
    case AlgorithmId::RealHigham: return "real_higham";
    case AlgorithmId::Cplx39: return "cplx39";
    case AlgorithmId::Cplx310: return "cplx310";
    case AlgorithmId::CplxNew: return "cplx_new";
    case AlgorithmId::CplxCast: return "cplx_cast";
  }
  return "?";
}

constexpr std::optional<AlgorithmId> parse_algorithm(std::string_view name) {
  for (AlgorithmId id : kAllAlgorithms) {
    if (name_of(id) == name) return id;
  }
  return std::nullopt;
}

}  // namespace givens
