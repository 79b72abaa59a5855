#pragma once

#include <string>
#include <vector>

#include "folia/error.hpp"
#include "folia/rat.hpp"

namespace folia {

// Fibre data of a Riccati foliation over a curve B.
struct RiccatiModel {
  long chi_top = 2;
  std::vector<unsigned> b_orders;          // k_j >= 2
  unsigned c_count = 0;
  std::vector<unsigned> d_multiplicities;  // m_j >= 1
  std::vector<unsigned> e_multiplicities;  // l_j >= 1

  void validate() const {
    for (unsigned k : b_orders)
      if (k < 2) throw Error(ErrorKind::SchemaError, "class (b) order " + std::to_string(k) + " below 2");
    for (unsigned m : d_multiplicities)
      if (m < 1) throw Error(ErrorKind::SchemaError, "class (d) multiplicity must be positive");
    for (unsigned l : e_multiplicities)
      if (l < 1) throw Error(ErrorKind::SchemaError, "class (e) multiplicity must be positive");
  }
};

inline Rat base_chi_orb(const RiccatiModel& m) {
  m.validate();
  Rat x(m.chi_top);
  for (unsigned k : m.b_orders) x -= Rat(static_cast<long>(k) - 1, static_cast<long>(k));
  x -= Rat(static_cast<long>(m.e_multiplicities.size()), 2);
  return x;
}

// deg pi_* K_F.
inline Rat pushforward_degree(const RiccatiModel& m) {
  Rat d = -base_chi_orb(m) + Rat(static_cast<long>(m.c_count));
  for (unsigned x : m.d_multiplicities) d += Rat(static_cast<long>(x));
  for (unsigned x : m.e_multiplicities) d += Rat(static_cast<long>(x), 2);
  return d;
}

enum class Kodaira { NegInfinity, Zero, One };

inline std::string to_string(Kodaira k) {
  switch (k) {
    case Kodaira::NegInfinity: return "-inf";
    case Kodaira::Zero: return "0";
    case Kodaira::One: return "1";
  }
  return "?";
}

inline Kodaira kodaira_from_degree(const Rat& deg) {
  if (deg.sign() > 0) return Kodaira::One;
  if (deg.sign() == 0) return Kodaira::Zero;
  return Kodaira::NegInfinity;
}

// User-supplied contribution list over an orbifold base: -chi_orb(B) plus the
// given per-fibre contributions.  Not tied to any particular fibre table.
struct ContributionModel {
  long chi_top = 2;
  std::vector<unsigned> orbifold_orders;
  std::vector<Rat> contributions;
};

inline Rat contribution_chi_orb(const ContributionModel& m) {
  Rat x(m.chi_top);
  for (unsigned k : m.orbifold_orders) {
    if (k < 2) throw Error(ErrorKind::SchemaError, "orbifold order below 2");
    x -= Rat(static_cast<long>(k) - 1, static_cast<long>(k));
  }
  return x;
}

inline Rat contribution_degree(const ContributionModel& m) {
  Rat d = -contribution_chi_orb(m);
  for (const auto& c : m.contributions) d += c;
  return d;
}

}  // namespace folia
