#pragma once

#include <complex>
#include <vector>

#include "quatlie/representation.hpp"

namespace quatlie {

enum class NormalFormKind {
  JFromP,       // even n, p != 0: image of e_1..p becomes alpha_p J
  JFromQ,       // even n, q != 0: image of e_{p+1}..n becomes sigma_q J
  BlockJFromP,  // odd n, even p != 0: alpha_p diag(J, J)
  BlockJFromQ,  // odd n, even q != 0: sigma_q diag(J, J)
  OrthJ,        // orthogonal transform bringing a real generator product to J
  OrthOmega,    // orthogonal transform bringing a real generator product to Omega
};

/// J = diag(1..1,-1..-1), balanced.
ComplexMatrix balanced_j(int size);
/// Omega = [[0,-I],[I,0]].
ComplexMatrix omega_form(int size);

/// Unitary T with T^-1 M T = J for Hermitian M with M^2 = I and trace 0.
/// T is real orthogonal whenever M is real. Residuals are held below 1e-10
/// or a std::runtime_error is thrown.
ComplexMatrix involution_normal_form_j(const ComplexMatrix& m);

/// Real orthogonal T with T^-1 M T = Omega for real skew M with M^2 = -I.
ComplexMatrix involution_normal_form_omega(const ComplexMatrix& m);

/// Result of conjugating a representation so one distinguished generator
/// product lands on J or Omega (blockwise for odd n).
struct NormalFormedRep {
  explicit NormalFormedRep(Signature s) : sig(s) {}

  Signature sig;
  NormalFormKind kind = NormalFormKind::JFromP;
  std::vector<ComplexMatrix> gens;
  ComplexMatrix transform;  // unitary (or orthogonal) T
  ComplexMatrix target;     // achieved form of the normalized product
  BladeMask conjugator_mask = 0;
  std::complex<double> unit{1.0, 0.0};

  int matrix_size() const { return gens.empty() ? 0 : gens.front().size(); }
};

NormalFormedRep normal_form_rep(const Representation& rep, NormalFormKind kind);

/// Transform data shared with the verifier: conjugating T plus the achieved
/// full-size form for an arbitrary blade-product conjugator.
struct ConjugatorNormalForm {
  ComplexMatrix transform;  // identity-sized T, block-diagonal when blockwise
  ComplexMatrix form;       // I, J, Omega, or their diag(x, x) doubles
  bool omega = false;
  bool blockwise = false;
};

/// Normalizes the image of blade `mask` divided by `unit` to J or Omega.
/// In unitary mode the normalized matrix must be exactly Hermitian with
/// square I; in orthogonal mode exactly real with square +-I (J/Omega picked
/// by the sign). `blockwise` runs the construction on the identical diagonal
/// blocks (odd n).
ConjugatorNormalForm normalize_blade_conjugator(const Representation& rep, BladeMask mask,
                                                const ExactComplex& unit, bool orthogonal_mode,
                                                bool blockwise);

}  // namespace quatlie
