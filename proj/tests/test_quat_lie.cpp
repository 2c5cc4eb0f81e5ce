#include <doctest.h>

#include <cmath>

#include "quatlie/quat_lie.hpp"
#include "test_support.hpp"

using namespace quatlie;
using quatlie::testing::random_multivector;

namespace {

Multivector blade(Signature sig, BladeMask m, ExactComplex c = ExactComplex::one()) {
  return Multivector::blade(sig, m, c);
}

}  // namespace

TEST_CASE("subspace spec parsing and naming") {
  SubspaceSpec s = SubspaceSpec::parse("23i01");
  CHECK(s.has(2, 0));
  CHECK(s.has(3, 0));
  CHECK(s.has(0, 1));
  CHECK(s.has(1, 1));
  CHECK_FALSE(s.has(0, 0));
  CHECK(s.name() == "23i01");
  CHECK(SubspaceSpec::parse("2").name() == "2");
  CHECK(SubspaceSpec::parse("0123i0123") == catalog_row(1).algebra);
  CHECK(catalog_id_from_name("2i0") == 8);
  CHECK(catalog_id_from_name("nonsense") == 0);
}

TEST_CASE("quaternion type projections") {
  Signature sig(3, 0);
  CHECK(quat_projection(blade(sig, 0b111), 3) == blade(sig, 0b111));
  Multivector u = identity(sig) + blade(sig, 0b011);
  CHECK(quat_projection(u, 0) == identity(sig));

  std::mt19937_64 rng(5);
  Signature big(2, 2);
  for (int t = 0; t < 20; ++t) {
    Multivector w = random_multivector(big, rng, 8);
    Multivector sum(big);
    for (int s = 0; s < 4; ++s) {
      Multivector part = quat_projection(w, s);
      sum = sum + part;
      CHECK(quat_projection(part, s) == part);                       // idempotent
      CHECK(quat_projection(part, (s + 1) % 4) == Multivector(big));  // annihilating
      // Grade involution and reversion determine the type.
      CHECK(grade_involution(part) ==
            ((s % 2) ? ExactComplex(-1) * part : part));
      int rev_sign = (s == 2 || s == 3) ? -1 : 1;
      CHECK(reversion(part) == ExactComplex(rev_sign) * part);
    }
    CHECK(sum == w);
  }
}

TEST_CASE("quaternion type dimensions") {
  CHECK(quat_type_dims(3) == std::array<std::int64_t, 4>{1, 3, 3, 1});
  CHECK(quat_type_dims(4) == std::array<std::int64_t, 4>{2, 4, 6, 4});
  CHECK(quat_type_dims(1) == std::array<std::int64_t, 4>{1, 1, 0, 0});
  for (int n = 1; n <= 14; ++n) {
    auto exact = quat_type_dims(n);
    auto closed = quat_type_dims_closed(n);
    std::int64_t total = 0;
    for (int s = 0; s < 4; ++s) {
      CHECK(std::abs(closed[s] - double(exact[s])) < 1e-9);
      total += exact[s];
    }
    CHECK(total == (std::int64_t(1) << n));
  }
  CHECK_THROWS_AS(quat_type_dims(0), std::out_of_range);
  CHECK_THROWS_AS(quat_type_dims(15), std::out_of_range);
}

TEST_CASE("catalog dimensions match the closed forms") {
  CHECK(lie_algebra_dim(9, 3) == 8);
  CHECK(lie_algebra_dim(16, 4) == 6);
  for (int n = 1; n <= 12; ++n) CHECK(lie_algebra_dim(2, n) == (std::int64_t(1) << n));
  for (int id = 1; id <= 16; ++id)
    for (int n = 1; n <= 12; ++n)
      CHECK(std::abs(closed_form_dim(id, n) - double(lie_algebra_dim(id, n))) < 1e-9);
}

TEST_CASE("subspace bases") {
  Signature sig2(2, 0);
  auto b16 = subspace_basis(16, sig2);
  REQUIRE(b16.size() == 1);
  CHECK(b16[0] == blade(sig2, 0b11));

  auto b8 = subspace_basis(8, sig2);
  REQUIRE(b8.size() == 2);
  CHECK(b8[0] == blade(sig2, 0b11));                      // real block first
  CHECK(b8[1] == blade(sig2, 0, ExactComplex::i()));      // then imaginary

  for (int n = 1; n <= 6; ++n) {
    Signature sig(n, 0);
    CHECK(subspace_basis(1, sig).size() == (std::size_t(1) << (n + 1)));
    for (int id = 1; id <= 16; ++id)
      CHECK(std::int64_t(subspace_basis(id, sig).size()) == lie_algebra_dim(id, n));
  }
}

TEST_CASE("membership predicate") {
  Signature sig(2, 0);
  const SubspaceSpec& row12 = catalog_row(12).algebra;  // 2 + i1
  CHECK(contains(row12, blade(sig, 0b01, ExactComplex::i())));
  CHECK_FALSE(contains(row12, blade(sig, 0b01)));

  // Membership in 23+i01 is exactly anti-invariance under pseudo-Hermitian
  // conjugation.
  std::mt19937_64 rng(13);
  Signature s22(2, 2);
  const SubspaceSpec& row6 = catalog_row(6).algebra;
  for (int t = 0; t < 40; ++t) {
    Multivector u = random_multivector(s22, rng, 6);
    bool anti = pseudo_hermitian(u) == Multivector(s22) - u;
    CHECK(contains(row6, u) == anti);
    // Projecting onto the allowed components always passes both tests.
    Multivector proj(s22);
    for (const auto& [m, c] : u.terms()) {
      int type = blade_quat_type(m);
      ExactComplex kept(row6.has(type, 0) ? c.re : Rational(0),
                        row6.has(type, 1) ? c.im : Rational(0));
      proj.add_term(m, kept);
    }
    CHECK(contains(row6, proj));
    CHECK(pseudo_hermitian(proj) == Multivector(s22) - proj);
  }
}

TEST_CASE("approximate membership") {
  Signature sig(2, 0);
  ApproxMultivector u(sig);
  u.set(0b01, std::complex<double>(1e-12, 0.4));
  CHECK(contains_approx(catalog_row(12).algebra, u, 1e-10));
  u.set(0b01, std::complex<double>(1e-8, 0.4));
  CHECK_FALSE(contains_approx(catalog_row(12).algebra, u, 1e-10));
}

TEST_CASE("closure of the catalog rows") {
  CHECK(closure_check(16, Signature(3, 0)).passed);
  CHECK(closure_check(9, Signature(2, 2)).passed);
  for (int id = 1; id <= 16; ++id)
    for (int n = 1; n <= 4; ++n)
      for (int p = n; p >= 0; --p) CHECK(closure_check(id, Signature(p, n - p)).passed);
}

TEST_CASE("negative control: the odd-vector slice is not closed") {
  ClosureReport report = closure_check(SubspaceSpec::parse("1"), Signature(3, 0));
  CHECK_FALSE(report.passed);
  bool witness_found = false;
  for (const auto& [a, b] : report.violations)
    if (a == 0b001 && b == 0b010) witness_found = true;
  CHECK(witness_found);
}

TEST_CASE("bracket inclusion table") {
  for (auto [p, q] : {std::pair{3, 0}, {1, 3}, {2, 0}, {2, 2}}) {
    CommutationTableReport report = commutation_table_check(Signature(p, q));
    CHECK(report.passed());
    CHECK(report.relations.size() == 10);
  }
}

TEST_CASE("group residuals") {
  Signature cl20(2, 0);
  CHECK(group_residual(16, approx_identity(cl20)) == 0.0);
  CHECK(group_residual(1, approx_identity(cl20)) == 0.0);
  CHECK(group_residual(1, ApproxMultivector(cl20)) == 1.0);  // zero is singular

  ApproxMultivector ie12(cl20);
  ie12.set(0b11, std::complex<double>(0, 1));
  CHECK(group_residual(11, exp_series(ie12, 1e-15)) < 1e-10);

  ApproxMultivector ie(cl20);
  ie.set(0, std::complex<double>(0, 1));
  CHECK(group_residual(6, exp_series(ie, 1e-15)) < 1e-10);
}

TEST_CASE("real-carrier rows are fixed by complex conjugation") {
  for (int id : {2, 3, 14, 15, 16}) {
    for (auto [p, q] : {std::pair{2, 2}, {3, 0}, {1, 4}}) {
      Signature sig(p, q);
      for (const auto& b : subspace_basis(id, sig)) CHECK(complex_conjugation(b) == b);
    }
  }
}

TEST_CASE("exact group residuals") {
  // (3/5)e + (4/5)e_12 is an exact point of the reversion group in Cl(2,0).
  Signature cl20(2, 0);
  Multivector u = ExactComplex(Rational(3, 5)) * identity(cl20) +
                  ExactComplex(Rational(4, 5)) * blade(cl20, 0b11);
  CHECK(group_residual(16, u) == 0.0);
  CHECK(group_residual(11, u) == 0.0);
  CHECK(group_residual(16, ExactComplex(2) * identity(cl20)) == 3.0);  // 4e - e

  // e + e_1 squares the metric away in Cl(1,0): a zero divisor.
  Signature cl10(1, 0);
  Multivector zd = identity(cl10) + blade(cl10, 0b1);
  CHECK(group_residual(2, zd) == 1.0);
  CHECK(group_residual(2, ExactComplex(2) * identity(cl10)) == 0.0);
  CHECK(group_residual(1, identity(cl10)) == 0.0);
}

TEST_CASE("exponentials of algebra elements satisfy the group condition") {
  std::mt19937_64 rng(99);
  for (int id = 1; id <= 16; ++id) {
    for (int n = 1; n <= 5; ++n) {
      for (int p = n; p >= 0; --p) {
        Signature sig(p, n - p);
        auto basis = subspace_basis(id, sig);
        for (int sample = 0; sample < 20; ++sample) {
          ApproxMultivector u(sig);
          for (const auto& b : basis) {
            double c = (double(rng() >> 11) * 0x1.0p-53 - 0.5) * 0.2;
            u = u + std::complex<double>(c) * b.to_approx();
          }
          if (u.norm_one() > 0.5) u = std::complex<double>(0.5 / u.norm_one()) * u;
          CHECK(group_residual(id, exp_series(u, 1e-15)) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("closure check enforces its pairwise budget") {
  CHECK_THROWS_AS(closure_check(16, Signature(10, 0)), std::invalid_argument);
  CHECK_THROWS_AS(commutation_table_check(Signature(10, 0)), std::invalid_argument);
}

TEST_CASE("spin algebra checks") {
  SpinChecksReport r3 = spin_lie_checks(Signature(3, 0));
  CHECK(r3.passed());
  CHECK(r3.spin_algebra_dim == 6);
  CHECK(r3.type2_complex_dim == 6);

  SpinChecksReport r6 = spin_lie_checks(Signature(2, 4));
  CHECK(r6.passed());
  CHECK(r6.spin_algebra_dim == 30);
  CHECK(r6.type2_complex_dim == 32);
  CHECK(r6.max_trace < 1e-10);

  SpinChecksReport r4 = spin_lie_checks(Signature(2, 2));
  CHECK(r4.passed());
  CHECK(r4.bracket_closed);
  CHECK(r4.stabilizes_vectors);
}
