#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfint/duality.hpp"
#include "hopfint/smash.hpp"

namespace hopfint {

struct ProjectorPair {
  SmashElement E;     // x·E = ε(x)E, E·a = ε(a)E, E² = E
  SmashElement Ebar;  // a·Ē = ε(a)Ē, Ē·x = ε(x)Ē, Ē² = Ē
};

enum class Side { kRight, kLeft };

// The scale of every integral: δ^R_A has last nonzero coordinate 1 and
// I(δ^R_A) = 1.
inline constexpr const char* kDeltaConvention =
    "delta: last nonzero coordinate 1; I(delta) = 1";
inline constexpr const char* kPointsConvention =
    "points: E z Ebar = <z, delta> K";

struct IntegralResult {
  RatFunc value;
  Element delta;
  std::optional<SmashElement> realization;  // Ē·a·E or E·z·Ē
  std::string convention;
};

// Σ_i ⟨S²(e_i), f^i·u⟩ on the functions side; the points side exchanges the
// roles of the two factors.
RatFunc trace_integral(const DualPair& p, Factor side, const Element& u);

// T(a) = Σ_n f^n ⟨e_n S²(e_i), f^i a⟩
Element modified_trace(const DualPair& p, const Element& a);

// Spanning vector of a one-dimensional image, last nonzero coordinate 1.
// Throws DegenerateImage(dim) otherwise.
Element delta_from_images(const HopfAlgebra& a,
                          const std::vector<Element>& images);
// Scalar λ with v = λ·delta. Throws DegenerateImage when v is off the line.
RatFunc coefficient_on(const Element& delta, const Element& v);

Element normalize_delta(const DualPair& p);
IntegralResult invariant_integral(const DualPair& p, const Element& a,
                                  Side side = Side::kRight);

ProjectorPair solve_vacuum_projectors(const SmashAlgebra& s);
// E = S⁻¹(f^i)e_i and Ē = S²(e_i)f^i; needs the pair of s.
ProjectorPair closed_form_projectors(const SmashAlgebra& s);
// Residuals of the six defining conditions and both idempotencies; empty
// when all hold.
std::vector<std::string> projector_violations(const SmashAlgebra& s,
                                              const ProjectorPair& proj);

// δ^R_A from the projector route: Ē a E = t(a) E.
Element vacuum_delta(const SmashAlgebra& s, const ProjectorPair& proj);
IntegralResult vacuum_integral_A(const SmashAlgebra& s,
                                 const ProjectorPair& proj, const Element& a,
                                 Side side = Side::kRight);
IntegralResult vacuum_integral_H(const SmashAlgebra& s,
                                 const ProjectorPair& proj, const Element& z);

// Θ[i][l] = ⟨e_i S²(e_k), f^k f^l⟩. Throws AllZeroTheta when Θ = 0.
Matrix theta_matrix(const DualPair& p);

}  // namespace hopfint
