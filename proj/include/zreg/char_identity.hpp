#pragma once

#include <cstdint>

#include "zreg/complexval.hpp"

namespace zreg {

// Verification record for the finite character/root-of-unity identity
//
//   sum_{(a,b,c) in S} psi(abc) / ((1-w^a)(1-w^b)(1-w^c))
//     ?= -sqrt(p) ((p+1)/4 B_{1,psi} + (1/6) B_{3,psi}),
//
// S = {(a,b,c) in (F_p^x)^3 : ab+bc+ca = 0}, psi the quadratic character,
// w = e^{2 pi i / p}, p prime, p = 3 (mod 4).
//
// The enumerated sum is purely imaginary: pairing (a,b,c) with (-a,-b,-c)
// conjugates the denominators while psi(-1) = -1 flips the sign, which
// cancels the real parts. It equals i times the displayed right side, i.e.
//   LHS = -i sqrt(p) ((p+1)/4 B_1 + (1/6) B_3)
// (the sqrt(p) normalization absorbs a factor i, as with the quadratic Gauss
// sum for p = 3 mod 4). Both orientations are recorded.
struct IdentityReport {
  std::uint64_t p = 0;
  ComplexValue lhs;              // enumerated triple sum
  ComplexValue rhs;              // i * rhs_displayed (matches lhs)
  double rhs_displayed = 0.0;    // -sqrt(p)((p+1)/4 B_1 + B_3/6), real
  double abs_diff = 0.0;         // |lhs - rhs|
  double abs_diff_displayed = 0.0;  // |lhs - rhs_displayed|
  std::uint64_t triple_count = 0;
};

// Enumerates S by solving for c (O(p^2)), computes both sides independently
// (roots of unity vs exact generalized Bernoulli numbers). Requires p prime,
// p = 3 (mod 4), p <= 200.
IdentityReport verify_character_identity(std::uint64_t p);

// |S| = (p-1)(p-2); cross-checked against a full triple enumeration for
// p <= 50. Any prime p >= 3.
std::uint64_t triple_set_size(std::uint64_t p);

}  // namespace zreg
