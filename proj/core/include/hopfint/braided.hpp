#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfint/hopf.hpp"
#include "hopfint/integrals.hpp"
#include "hopfint/smash.hpp"

namespace hopfint {

// Ψ(b_i⊗b_j) = Σ psi[i][j][k][l] b_k⊗b_l, stored as a map on n*n with
// column i*n+j and entry k*n+l.
struct BraidedHopfData {
  HopfAlgebraData base;
  LinearMap psi;

  RatFunc Psi(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return psi.at(i * base.dim + j, k * base.dim + l);
  }
};

// Axioms named as in check_hopf_axioms with the flip replaced by Ψ, plus
// yang-baxter, braiding-invertible, braiding-unit and braiding-natural-*.
AxiomReport check_braided_axioms(const BraidedHopfData& b);

struct BraidedPair {
  BraidedHopfData A;  // functions
  BraidedHopfData H;  // points
  Matrix pairing;     // P[i][j] = ⟨b^H_i, b^A_j⟩
  LinearMap cross;    // H⊗A -> A⊗H as in SmashAlgebra::from_cross
};

struct BraidedBuild {
  BraidedPair pair;
  HopfAlgebra functions;
  HopfAlgebra points;
  SmashAlgebra smash;
  std::vector<std::string> warnings;
};

// Each basis vector as unit, generator, or generator times a tail.
struct WordBasis {
  std::size_t unit = 0;
  std::vector<bool> generator;
  std::vector<std::size_t> head;  // basis index of the first generator
  std::vector<SparseVec> tail;    // the rest, in the basis
};

// Extends a crossing L⊗R -> R⊗L from generator pairs to all basis pairs by
// functoriality in both legs. rules[(gl, gr)] is indexed r*nL + l. Output
// column l*nR + r, entry r'*nL + l'.
LinearMap extend_crossing(const HopfAlgebraData& left, const WordBasis& wl,
                          const HopfAlgebraData& right, const WordBasis& wr,
                          const std::map<std::pair<std::size_t, std::size_t>,
                                         SparseVec>& rules);

// Extends the smash cross relations H⊗A -> A⊗H from generator pairs.
// rules[(gh, ga)] is indexed a*nH + h.
LinearMap extend_smash_cross(const HopfAlgebraData& a, const WordBasis& wa,
                             const HopfAlgebraData& h, const WordBasis& wh,
                             const std::map<std::pair<std::size_t, std::size_t>,
                                            SparseVec>& rules);

RatFunc q_int(int k);        // (1 - q^{2k})/(1 - q^2)
RatFunc q_factorial(int k);  // [1][2]...[k], [0]! = 1
// [k] and [k]! at q^{-1}.
RatFunc q_int_inv(int k);
RatFunc q_factorial_inv(int k);
// Σ_{k=0..A} (-1)^k q^{k(k-2A+1)} [A]!/([k]![A-k]!); throws IdentityFailure
// unless it is zero.
RatFunc q_vanishing_sum(int a);

BraidedBuild build_fermionic_line();
// .hopf source of the q-plane on xi1..xiN and sigma1..sigmaN.
std::string q_plane_source(int n);
// N >= 1; N = 4 adds a warning, larger N is rejected with BadParam.
BraidedBuild build_q_fermionic_plane(int n);

// Σ f^i ⊗ e_i over the dual bases, rows A, cols H.
TensorElement canonical_element(const DualPair& p);
// e_{q^-1}(ξ_i⊗σ_i) in the braided tensor product A⊗H of the q-plane.
TensorElement qexp_canonical_element(const BraidedBuild& b, int n);

struct QPlaneReport {
  bool e_matches = false;
  bool d_found = false;
  std::vector<RatFunc> d;  // fitted diagonal
  bool low_degree_zero = false;
  bool top_nonzero = false;
  bool all_constant = false;
  std::vector<RatFunc> values;  // basis integrals
  bool monomial_sums = false;   // Ē ξ_I E = qsum(N-|I|) ξ_I E
  bool ok() const {
    return e_matches && d_found && low_degree_zero && top_nonzero &&
           all_constant && monomial_sums;
  }
};

// Throws ClosedFormMismatch(part) on the first failing part.
QPlaneReport verify_qplane_closed_forms(const BraidedBuild& b, int n,
                                        const ProjectorPair& proj);

}  // namespace hopfint
