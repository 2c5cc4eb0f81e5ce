#include <doctest.h>

#include "quatlie/normal_form.hpp"

using namespace quatlie;

namespace {

ComplexMatrix cm2(std::initializer_list<std::complex<double>> entries) {
  ComplexMatrix m(2);
  auto it = entries.begin();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.at(i, j) = *it++;
  return m;
}

double form_residual(const ComplexMatrix& t, const ComplexMatrix& m,
                     const ComplexMatrix& target) {
  return max_abs(conj_transpose(t) * m * t - target);
}

}  // namespace

TEST_CASE("involution normal form to J") {
  ComplexMatrix j = balanced_j(2);
  ComplexMatrix t = involution_normal_form_j(j);
  CHECK(form_residual(t, j, j) < 1e-10);
  CHECK(max_abs(conj_transpose(t) * t - ComplexMatrix::identity(2)) < 1e-10);

  ComplexMatrix swap = cm2({0, 1, 1, 0});
  ComplexMatrix ts = involution_normal_form_j(swap);
  CHECK(form_residual(ts, swap, j) < 1e-10);

  CHECK_THROWS_AS(involution_normal_form_j(ComplexMatrix::identity(2)), std::domain_error);
}

TEST_CASE("involution normal form to Omega") {
  ComplexMatrix omega = omega_form(2);
  ComplexMatrix t = involution_normal_form_omega(omega);
  CHECK(form_residual(t, omega, omega) < 1e-10);

  ComplexMatrix neg = cm2({0, 1, -1, 0});  // -Omega, still real skew with square -I
  ComplexMatrix tn = involution_normal_form_omega(neg);
  CHECK(form_residual(tn, neg, omega) < 1e-10);

  CHECK_THROWS_AS(involution_normal_form_omega(balanced_j(2)), std::domain_error);
}

TEST_CASE("J normal form from the positive generator product") {
  Representation rep = build_beta(Signature(2, 0));
  NormalFormedRep nf = normal_form_rep(rep, NormalFormKind::JFromP);
  // alpha_2 = i, so the normalized product is i J.
  ComplexMatrix expected = std::complex<double>(0, 1) * balanced_j(2);
  CHECK(max_abs(nf.target - expected) < 1e-12);
  ApproxMultivector e12(rep.sig);
  e12.set(0b11, 1.0);
  CHECK(max_abs(rep_apply(nf.gens, nf.matrix_size(), e12) - nf.target) < 1e-10);
}

TEST_CASE("J normal form from the negative generator product") {
  Representation rep = build_beta(Signature(1, 1));
  NormalFormedRep nf = normal_form_rep(rep, NormalFormKind::JFromQ);
  ComplexMatrix expected = std::complex<double>(0, 1) * balanced_j(2);  // sigma_1 = i
  CHECK(max_abs(nf.target - expected) < 1e-12);
}

TEST_CASE("blockwise J normal form at odd n") {
  Representation rep = build_beta(Signature(2, 1));
  NormalFormedRep nf = normal_form_rep(rep, NormalFormKind::BlockJFromP);
  ComplexMatrix expected = std::complex<double>(0, 1) * block_diag_pair(balanced_j(2));
  CHECK(max_abs(nf.target - expected) < 1e-12);
  ApproxMultivector e12(rep.sig);
  e12.set(0b011, 1.0);
  CHECK(max_abs(rep_apply(nf.gens, nf.matrix_size(), e12) - nf.target) < 1e-10);
}

TEST_CASE("orthogonal Omega normal form") {
  Representation rep = build_beta(Signature(2, 0));
  NormalFormedRep nf = normal_form_rep(rep, NormalFormKind::OrthOmega);
  CHECK(max_abs(rep_apply(nf.gens, nf.matrix_size(),
                          ApproxMultivector::scalar(rep.sig, 1.0)) -
                ComplexMatrix::identity(2)) < 1e-12);
  // k = 2 symmetric generators; their product squares to -I, so OrthJ must
  // be rejected for this signature.
  CHECK_THROWS_AS(normal_form_rep(rep, NormalFormKind::OrthJ), std::invalid_argument);
}

TEST_CASE("inapplicable kinds are rejected") {
  Representation odd = build_beta(Signature(2, 1));
  CHECK_THROWS_AS(normal_form_rep(odd, NormalFormKind::JFromP), std::invalid_argument);
  Representation definite = build_beta(Signature(2, 0));
  CHECK_THROWS_AS(normal_form_rep(definite, NormalFormKind::JFromQ), std::invalid_argument);
  CHECK_THROWS_AS(normal_form_rep(definite, NormalFormKind::BlockJFromP),
                  std::invalid_argument);
}

TEST_CASE("orthogonal-mode transforms stay real") {
  auto realness = [](const ComplexMatrix& m) {
    double worst = 0.0;
    for (int i = 0; i < m.size(); ++i)
      for (int j = 0; j < m.size(); ++j) worst = std::max(worst, std::abs(m.at(i, j).imag()));
    return worst;
  };
  // Real symmetric involution with zero trace: the projector columns are
  // real, so the transform must come out real.
  ComplexMatrix swap = cm2({0, 1, 1, 0});
  CHECK(realness(involution_normal_form_j(swap)) == 0.0);
  CHECK(realness(involution_normal_form_omega(omega_form(2))) == 0.0);

  Representation rep = build_beta(Signature(2, 0));
  NormalFormedRep nf = normal_form_rep(rep, NormalFormKind::OrthOmega);
  CHECK(realness(nf.transform) == 0.0);
}

TEST_CASE("empty conjugator normalizes to the identity form") {
  Representation rep = build_beta(Signature(2, 0));
  ConjugatorNormalForm cnf =
      normalize_blade_conjugator(rep, 0, ExactComplex::one(), false, false);
  CHECK(cnf.transform == ComplexMatrix::identity(2));
  CHECK(cnf.form == ComplexMatrix::identity(2));
  CHECK_FALSE(cnf.omega);
}

TEST_CASE("normal forms preserve structure for every applicable signature") {
  for (int n = 1; n <= 6; ++n) {
    for (int p = n; p >= 0; --p) {
      Signature sig(p, n - p);
      Representation rep = build_beta(sig);
      for (NormalFormKind kind :
           {NormalFormKind::JFromP, NormalFormKind::JFromQ, NormalFormKind::BlockJFromP,
            NormalFormKind::BlockJFromQ, NormalFormKind::OrthJ, NormalFormKind::OrthOmega}) {
        NormalFormedRep nf(sig);
        try {
          nf = normal_form_rep(rep, kind);
        } catch (const std::invalid_argument&) {
          continue;  // kind not applicable at this signature
        }
        // Transform is unitary and the conjugator image hits the target.
        CHECK(max_abs(conj_transpose(nf.transform) * nf.transform -
                      ComplexMatrix::identity(nf.matrix_size())) < 1e-10);
        ApproxMultivector conj_blade(sig);
        conj_blade.set(nf.conjugator_mask, 1.0);
        CHECK(max_abs(rep_apply(nf.gens, nf.matrix_size(), conj_blade) - nf.target) < 1e-10);
        // Anticommutation survives.
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            ComplexMatrix lhs = nf.gens[a] * nf.gens[b] + nf.gens[b] * nf.gens[a];
            std::complex<double> expected = a == b ? 2.0 * sig.eta(a + 1) : 0.0;
            CHECK(max_abs(lhs - expected * ComplexMatrix::identity(nf.matrix_size())) <
                  1e-10);
          }
      }
    }
  }
}
