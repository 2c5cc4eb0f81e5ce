#include "quatlie/classifier.hpp"

#include <stdexcept>

namespace quatlie {

SelectorKind selector_kind(int id) {
  switch (id) {
    case 2:
    case 3:
    case 5: return SelectorKind::DifferenceMod8;
    case 6:
    case 7:
    case 8: return SelectorKind::Parities;
    case 1:
    case 4:
    case 9:
    case 10:
    case 11: return SelectorKind::NOnly;
    default: throw std::out_of_range("selector_kind: only rows 1..11 are classified");
  }
}

std::int64_t real_dim(const ClassicalLieAlgebra& d) {
  const std::int64_t m = d.matrix_size;
  std::int64_t one = 0;
  switch (d.family) {
    case Family::GL:
      switch (d.base) {
        case BaseField::R: one = m * m; break;
        case BaseField::C: one = 2 * m * m; break;
        case BaseField::H: one = 4 * m * m; break;
      }
      break;
    case Family::U: {
      std::int64_t t = d.indef_pos + d.indef_neg;
      one = t * t;
      break;
    }
    case Family::SOComplex: one = m * (m - 1); break;
    case Family::SPComplex:
      if (m % 2 != 0) throw std::domain_error("real_dim: sp needs even matrix size");
      one = m * (m + 1);
      break;
  }
  return d.summands * one;
}

namespace {

std::int64_t pow2(int e) {
  if (e < 0) throw std::domain_error("pow2: negative exponent in classification size");
  return std::int64_t(1) << e;
}

ClassicalLieAlgebra gl(BaseField base, std::int64_t size, int summands, std::string branch) {
  ClassicalLieAlgebra d;
  d.family = Family::GL;
  d.base = base;
  d.matrix_size = static_cast<int>(size);
  d.summands = summands;
  d.branch = std::move(branch);
  return d;
}

ClassicalLieAlgebra unitary(std::int64_t a, std::int64_t b, int summands, std::string branch) {
  ClassicalLieAlgebra d;
  d.family = Family::U;
  d.matrix_size = static_cast<int>(a + b);
  d.indef_pos = static_cast<int>(a);
  d.indef_neg = static_cast<int>(b);
  d.summands = summands;
  d.branch = std::move(branch);
  return d;
}

ClassicalLieAlgebra so_c(std::int64_t size, int summands, std::string branch) {
  ClassicalLieAlgebra d;
  d.family = Family::SOComplex;
  d.matrix_size = static_cast<int>(size);
  d.summands = summands;
  d.branch = std::move(branch);
  return d;
}

ClassicalLieAlgebra sp_c(std::int64_t size, int summands, std::string branch) {
  ClassicalLieAlgebra d;
  d.family = Family::SPComplex;
  d.matrix_size = static_cast<int>(size);
  d.summands = summands;
  d.branch = std::move(branch);
  return d;
}

}  // namespace

ClassicalLieAlgebra classify(int id, Signature sig) {
  const int n = sig.n();
  const int p = sig.p();
  const int q = sig.q();
  const int d8 = (((p - q) % 8) + 8) % 8;
  const int n8 = n % 8;

  switch (id) {
    case 1:
      return n % 2 == 0 ? gl(BaseField::C, pow2(n / 2), 1, "n even")
                        : gl(BaseField::C, pow2((n - 1) / 2), 2, "n odd");
    case 2:
      switch (d8) {
        case 0:
        case 2: return gl(BaseField::R, pow2(n / 2), 1, "p-q=0,2 mod 8");
        case 1: return gl(BaseField::R, pow2((n - 1) / 2), 2, "p-q=1 mod 8");
        case 3:
        case 7: return gl(BaseField::C, pow2((n - 1) / 2), 1, "p-q=3,7 mod 8");
        case 4:
        case 6: return gl(BaseField::H, pow2((n - 2) / 2), 1, "p-q=4,6 mod 8");
        default: return gl(BaseField::H, pow2((n - 3) / 2), 2, "p-q=5 mod 8");
      }
    case 3:
      switch (d8) {
        case 1:
        case 7: return gl(BaseField::R, pow2((n - 1) / 2), 1, "p-q=1,7 mod 8");
        case 0: return gl(BaseField::R, pow2((n - 2) / 2), 2, "p-q=0 mod 8");
        case 2:
        case 6: return gl(BaseField::C, pow2((n - 2) / 2), 1, "p-q=2,6 mod 8");
        case 3:
        case 5: return gl(BaseField::H, pow2((n - 3) / 2), 1, "p-q=3,5 mod 8");
        default: return gl(BaseField::H, pow2((n - 4) / 2), 2, "p-q=4 mod 8");
      }
    case 4:
      return n % 2 == 1 ? gl(BaseField::C, pow2((n - 1) / 2), 1, "n odd")
                        : gl(BaseField::C, pow2((n - 2) / 2), 2, "n even");
    case 5:
      switch (d8) {
        case 0:
        case 6: return gl(BaseField::R, pow2(n / 2), 1, "p-q=0,6 mod 8");
        case 7: return gl(BaseField::R, pow2((n - 1) / 2), 2, "p-q=7 mod 8");
        case 1:
        case 5: return gl(BaseField::C, pow2((n - 1) / 2), 1, "p-q=1,5 mod 8");
        case 2:
        case 4: return gl(BaseField::H, pow2((n - 2) / 2), 1, "p-q=2,4 mod 8");
        default: return gl(BaseField::H, pow2((n - 3) / 2), 2, "p-q=3 mod 8");
      }
    case 6:
      if (q == 0)
        return p % 2 == 0 ? unitary(pow2(n / 2), 0, 1, "p even, q=0")
                          : unitary(pow2((n - 1) / 2), 0, 2, "p odd, q=0");
      if (n % 2 == 0)
        return unitary(pow2((n - 2) / 2), pow2((n - 2) / 2), 1, "n even, q!=0");
      if (p % 2 == 1) return unitary(pow2((n - 3) / 2), pow2((n - 3) / 2), 2,
                                     "p odd, q!=0 even");
      return gl(BaseField::C, pow2((n - 1) / 2), 1, "p even, q odd");
    case 7:
      if (p == 0)
        return q % 2 == 0 ? unitary(pow2(n / 2), 0, 1, "p=0, q even")
                          : unitary(pow2((n - 1) / 2), 0, 2, "p=0, q odd");
      if (n % 2 == 0)
        return unitary(pow2((n - 2) / 2), pow2((n - 2) / 2), 1, "n even, p!=0");
      if (p % 2 == 0) return unitary(pow2((n - 3) / 2), pow2((n - 3) / 2), 2,
                                     "p!=0 even, q odd");
      return gl(BaseField::C, pow2((n - 1) / 2), 1, "p odd, q even");
    case 8:
      if (p == 0 || q == 0)
        return n % 2 == 1 ? unitary(pow2((n - 1) / 2), 0, 1, "definite, n odd")
                          : unitary(pow2((n - 2) / 2), 0, 2, "definite, n even");
      if (n % 2 == 1)
        return unitary(pow2((n - 3) / 2), pow2((n - 3) / 2), 1, "n odd, p,q!=0");
      if (p % 2 == 0) return unitary(pow2((n - 4) / 2), pow2((n - 4) / 2), 2,
                                     "p,q!=0 even");
      return gl(BaseField::C, pow2((n - 2) / 2), 1, "p,q odd");
    case 9:
      switch (n8) {
        case 0:
        case 2: return so_c(pow2(n / 2), 1, "n=0,2 mod 8");
        case 4:
        case 6: return sp_c(pow2(n / 2), 1, "n=4,6 mod 8");
        case 1: return so_c(pow2((n - 1) / 2), 2, "n=1 mod 8");
        case 5: return sp_c(pow2((n - 1) / 2), 2, "n=5 mod 8");
        default: return gl(BaseField::C, pow2((n - 1) / 2), 1, "n=3,7 mod 8");
      }
    case 10:
      switch (n8) {
        case 0:
        case 6: return so_c(pow2(n / 2), 1, "n=0,6 mod 8");
        case 2:
        case 4: return sp_c(pow2(n / 2), 1, "n=2,4 mod 8");
        case 7: return so_c(pow2((n - 1) / 2), 2, "n=7 mod 8");
        case 3: return sp_c(pow2((n - 1) / 2), 2, "n=3 mod 8");
        default: return gl(BaseField::C, pow2((n - 1) / 2), 1, "n=1,5 mod 8");
      }
    case 11:
      switch (n8) {
        case 1:
        case 7: return so_c(pow2((n - 1) / 2), 1, "n=1,7 mod 8");
        case 3:
        case 5: return sp_c(pow2((n - 1) / 2), 1, "n=3,5 mod 8");
        case 0: return so_c(pow2((n - 2) / 2), 2, "n=0 mod 8");
        case 4: return sp_c(pow2((n - 2) / 2), 2, "n=4 mod 8");
        default: return gl(BaseField::C, pow2((n - 2) / 2), 1, "n=2,6 mod 8");
      }
    default:
      throw std::out_of_range("classify: only rows 1..11 are classified here");
  }
}

ClassicalLieAlgebra group_classify(int id, Signature sig) { return classify(id, sig); }

std::string family_name(Family f, bool group_level) {
  switch (f) {
    case Family::GL: return group_level ? "GL" : "gl";
    case Family::U: return group_level ? "U" : "u";
    case Family::SOComplex: return group_level ? "O" : "so";
    case Family::SPComplex: return group_level ? "Sp" : "sp";
  }
  return "?";
}

std::string base_name(BaseField b) {
  switch (b) {
    case BaseField::R: return "R";
    case BaseField::C: return "C";
    case BaseField::H: return "H";
  }
  return "?";
}

namespace {

std::string display(const ClassicalLieAlgebra& d, bool group_level) {
  std::string one;
  switch (d.family) {
    case Family::GL:
      one = family_name(d.family, group_level) + "(" + std::to_string(d.matrix_size) + "," +
            base_name(d.base) + ")";
      break;
    case Family::U:
      if (d.indef_neg == 0)
        one = family_name(d.family, group_level) + "(" + std::to_string(d.indef_pos) + ")";
      else
        one = family_name(d.family, group_level) + "(" + std::to_string(d.indef_pos) + "," +
              std::to_string(d.indef_neg) + ")";
      break;
    case Family::SOComplex:
    case Family::SPComplex:
      one = family_name(d.family, group_level) + "(" + std::to_string(d.matrix_size) + ",C)";
      break;
  }
  if (d.summands == 2) return one + " + " + one;
  return one;
}

}  // namespace

std::string algebra_display(const ClassicalLieAlgebra& d) { return display(d, false); }
std::string group_display(const ClassicalLieAlgebra& d) { return display(d, true); }

std::vector<std::string> derived_iso_chain(int id, Signature sig) {
  const int p = sig.p();
  const int q = sig.q();
  auto at = [](const char* g, int pp, int qq) {
    return std::string(g) + "(" + std::to_string(pp) + "," + std::to_string(qq) + ")";
  };
  std::vector<std::string> chain;
  switch (id) {
    case 7:
      chain.push_back(at("G{12i03}", p, q) + " ~ " + at("G{23i01}", q, p) +
                      " via e_a -> i e_a");
      return chain;
    case 8:
      if (q == 0) {
        chain.push_back(at("G{2i0}", p, 0) + " ~ " + at("G{2i0}", 0, p) + " via e_a -> i e_a");
        chain.push_back(at("G{2i0}", 0, p) + " ~ " + at("G{12i03}", 0, p - 1) +
                        " via e_a -> e_a e_n");
      } else {
        chain.push_back(at("G{2i0}", p, q) + " ~ " + at("G{12i03}", p, q - 1) +
                        " via e_a -> e_a e_n");
      }
      return chain;
    case 11:
      if (q == 0) {
        chain.push_back(at("G{2i2}", p, 0) + " ~ " + at("G{2i2}", 0, p) + " via e_a -> i e_a");
        chain.push_back(at("G{2i2}", 0, p) + " ~ " + at("G{12i12}", 0, p - 1) +
                        " via e_a -> e_a e_n");
      } else {
        chain.push_back(at("G{2i2}", p, q) + " ~ " + at("G{12i12}", p, q - 1) +
                        " via e_a -> e_a e_n");
      }
      return chain;
    default:
      throw std::invalid_argument("derived_iso_chain: no reduction chain for this row");
  }
}

}  // namespace quatlie
