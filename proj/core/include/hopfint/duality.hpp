#pragma once

#include <string>
#include <vector>

#include "hopfint/hopf.hpp"
#include "hopfint/linalg.hpp"

namespace hopfint {

// Functions algebra A, points algebra H, pairing P[i][j] = ⟨b^H_i, b^A_j⟩.
class DualPair {
 public:
  enum class Check {
    kFull,        // nondegeneracy and the four compatibility laws
    kNondegenerate  // braided pairs: compatibility is carried by the cross tensor
  };

  DualPair() = default;
  static DualPair make(HopfAlgebra functions, HopfAlgebra points,
                       Matrix pairing, Check check = Check::kFull);

  const HopfAlgebra& functions() const { return a_; }
  const HopfAlgebra& points() const { return h_; }
  const Matrix& pairing() const { return p_; }
  // Pinv[j][i]: dual basis f^i = Σ_j Pinv[j][i] b^A_j of the points basis e_i.
  const Matrix& pairing_inverse() const { return pinv_; }
  bool fully_checked() const { return checked_; }

  // A and H exchanged, pairing transposed.
  DualPair swapped() const;
  // f^i as an element of A.
  Element dual_basis(std::size_t i) const;

 private:
  HopfAlgebra a_;
  HopfAlgebra h_;
  Matrix p_;
  Matrix pinv_;
  bool checked_ = false;
};

// The four compatibility laws plus nondegeneracy, as a report.
AxiomReport check_pairing(const HopfAlgebra& functions,
                          const HopfAlgebra& points, const Matrix& pairing);

// Dual Hopf algebra by transposition of the structure tensors, P = identity.
// Labels default to "1" for a basis unit and "f<i>" otherwise.
DualPair dualize(const HopfAlgebra& h, std::vector<std::string> labels = {});

RatFunc pair_eval(const DualPair& p, const Element& h, const Element& a);
// x ▷ a = a_(1)⟨x, a_(2)⟩
Element act_left(const DualPair& p, const Element& x, const Element& a);
// x ◁ a = ⟨x_(1), a⟩x_(2)
Element act_right(const DualPair& p, const Element& x, const Element& a);

}  // namespace hopfint
