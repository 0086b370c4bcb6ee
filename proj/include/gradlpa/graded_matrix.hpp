#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "gradlpa/algebra.hpp"

namespace gradlpa {

using Coefficient = std::int64_t;

// Finite sum of integer multiples of monomials x^e. Zero coefficients are
// never stored.
class LaurentElement {
 public:
  LaurentElement() = default;
  static LaurentElement monomial(Shift degree, Coefficient coeff = 1);

  const std::map<Shift, Coefficient>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(Shift degree, Coefficient coeff);

  LaurentElement& operator+=(const LaurentElement& other);
  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) {
    return a += b;
  }
  friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b);
  // Multiplies by x^shift.
  LaurentElement shifted(Shift shift) const;

  bool operator==(const LaurentElement&) const = default;

 private:
  std::map<Shift, Coefficient> terms_;
};

// n x n matrix over K or K[x^m, x^-m] carrying the grading of
// M_n(base)(γ1, ..., γn): x^e at (i, j) has degree e + γi - γj.
class GradedMatrix {
 public:
  // Zero matrix. Throws Error(InvalidArgument) if shifts is empty.
  GradedMatrix(GradedBase base, std::vector<Shift> shifts);
  static GradedMatrix identity(GradedBase base, std::vector<Shift> shifts);

  std::size_t size() const noexcept { return shifts_.size(); }
  const GradedBase& base() const noexcept { return base_; }
  const std::vector<Shift>& shifts() const noexcept { return shifts_; }

  const LaurentElement& at(std::size_t i, std::size_t j) const {
    return entries_[i * size() + j];
  }
  // Throws Error(InvalidArgument) when a term's degree is not allowed by the
  // base (nonzero over K, not divisible by m over K[x^m, x^-m]).
  void set(std::size_t i, std::size_t j, LaurentElement value);
  void add_term(std::size_t i, std::size_t j, Shift degree, Coefficient coeff);

  Shift degree_of(std::size_t i, std::size_t j, Shift exponent) const {
    return exponent + shifts_[i] - shifts_[j];
  }
  bool is_zero() const;

  bool operator==(const GradedMatrix&) const = default;

 private:
  void check_degree(Shift degree) const;

  GradedBase base_;
  std::vector<Shift> shifts_;
  std::vector<LaurentElement> entries_;
};

// δ -> component of degree δ. Zero components are omitted.
std::map<Shift, GradedMatrix> homogeneous_components(const GradedMatrix& m);
GradedMatrix sum(const std::map<Shift, GradedMatrix>& components,
                 const GradedMatrix& like);

// Throws Error(ShapeMismatch) unless size, base and shifts agree.
GradedMatrix multiply(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix add(const GradedMatrix& a, const GradedMatrix& b);

// Realizes one certificate step as a graded isomorphism:
//   Permute(π)       p M p^-1, with p having 1 at (i, π(i)); shifts permuted
//   GlobalShift(δ)   M unchanged; every shift increased by δ
//   EntryShift(i,δ)  u^-1 M u, u = diag(1, .., x^δ at i, .., 1); γi += δ
GradedMatrix conjugate_by_step(const GradedMatrix& m, const Step& step);

}  // namespace gradlpa
