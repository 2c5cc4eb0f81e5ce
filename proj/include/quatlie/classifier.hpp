#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quatlie/algebra.hpp"

namespace quatlie {

enum class Family { GL, U, SOComplex, SPComplex };
enum class BaseField { R, C, H };

/// Convention-free descriptor of a classical matrix Lie algebra (or group):
/// family, base field (gl only), the actual matrix side length, the
/// indefinite signature (u only), and the number of direct summands.
struct ClassicalLieAlgebra {
  Family family = Family::GL;
  BaseField base = BaseField::C;
  int matrix_size = 0;
  int indef_pos = 0;
  int indef_neg = 0;
  int summands = 1;
  std::string branch;  // selector case that produced this descriptor

  friend bool operator==(const ClassicalLieAlgebra& a, const ClassicalLieAlgebra& b) {
    return a.family == b.family && a.base == b.base && a.matrix_size == b.matrix_size &&
           a.indef_pos == b.indef_pos && a.indef_neg == b.indef_neg &&
           a.summands == b.summands;
  }
};

/// Which data the classification of a row depends on.
enum class SelectorKind {
  DifferenceMod8,  // p - q mod 8
  Parities,        // parities of p and q with zero flags
  NOnly,           // n alone (mod 2 or mod 8)
};

SelectorKind selector_kind(int id);

/// Real dimension: gl(m,R) = m^2, gl(m,C) = 2m^2, gl(m,H) = 4m^2,
/// u(a,b) = (a+b)^2, so(m,C) = m(m-1), sp(m,C) = m(m+1) with m even;
/// multiplied by the summand count.
std::int64_t real_dim(const ClassicalLieAlgebra& d);

/// Classification of catalog rows 1..11; throws std::out_of_range for 12..16.
ClassicalLieAlgebra classify(int id, Signature sig);

/// Group-level descriptor; same data as classify, rendered with the group
/// families GL / U / O(m,C) / Sp(m,C).
ClassicalLieAlgebra group_classify(int id, Signature sig);

std::string family_name(Family f, bool group_level);
std::string base_name(BaseField b);
std::string algebra_display(const ClassicalLieAlgebra& d);
std::string group_display(const ClassicalLieAlgebra& d);

/// Basis-change reduction chain for the rows proved through the even
/// subalgebra or the signature swap (rows 7, 8, 11).
std::vector<std::string> derived_iso_chain(int id, Signature sig);

}  // namespace quatlie
