#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace gradlpa {

using Shift = std::int64_t;

// Shifts are restricted to |γ| <= 2^31 so that every difference and every
// certificate delta fits comfortably in a Shift.
inline constexpr Shift kMaxAbsShift = Shift{1} << 31;

// Graded field underlying a matrix algebra: K concentrated in degree 0, or
// K[x^m, x^-m] with nonzero components exactly in degrees divisible by m.
class GradedBase {
 public:
  static GradedBase trivial() { return GradedBase(0); }
  // Throws Error(InvalidArgument) unless m >= 1.
  static GradedBase laurent(Shift m);

  bool is_trivial() const noexcept { return period_ == 0; }
  bool is_laurent() const noexcept { return period_ != 0; }
  // m for K[x^m, x^-m]; 0 for the trivially graded field.
  Shift period() const noexcept { return period_; }

  auto operator<=>(const GradedBase&) const = default;

 private:
  explicit GradedBase(Shift period) : period_(period) {}
  Shift period_ = 0;
};

// M_n(base)(γ1, ..., γn).
struct ShiftedMatrixAlgebra {
  GradedBase base = GradedBase::trivial();
  std::vector<Shift> shifts;

  ShiftedMatrixAlgebra() = default;
  // Throws Error(InvalidArgument) on an empty shift list.
  ShiftedMatrixAlgebra(GradedBase b, std::vector<Shift> s);

  std::size_t size() const noexcept { return shifts.size(); }
  bool operator==(const ShiftedMatrixAlgebra&) const = default;
};

// One nonzero multiplicity of a canonical form.
struct Level {
  Shift offset = 0;
  std::size_t count = 0;
  auto operator<=>(const Level&) const = default;
};

// Representatives (k; l_0, ..., l_k) over K, stored sparsely: `levels` lists
// the offsets with l_i > 0 in increasing order, `top` is k.
struct TrivialForm {
  Shift top = 0;
  std::vector<Level> levels;

  std::size_t multiplicity(Shift i) const;
  std::vector<std::size_t> dense() const;
  auto operator<=>(const TrivialForm&) const = default;
};

// Representatives (l_0, ..., l_{m-1}) over K[x^m, x^-m] at the
// lexicographically least rotation of the dense vector. Sparse as above.
struct CyclicForm {
  Shift period = 1;
  std::vector<Level> levels;

  std::size_t multiplicity(Shift i) const;
  std::vector<std::size_t> dense() const;
  auto operator<=>(const CyclicForm&) const = default;
};

using CanonicalForm = std::variant<TrivialForm, CyclicForm>;

CanonicalForm canonical_form(const ShiftedMatrixAlgebra& a);

// Offset r such that reducing (γ_i - r) mod m yields the stored rotation of
// canonical_form(a). Requires a Laurent base.
Shift canonical_rotation(const ShiftedMatrixAlgebra& a);

// Certificate steps. Indices are 0-based; the text formats print them 1-based.
struct Permute {
  // new_shifts[i] = old_shifts[image[i]]
  std::vector<std::size_t> image;
  bool operator==(const Permute&) const = default;
};
struct GlobalShift {
  Shift delta = 0;
  bool operator==(const GlobalShift&) const = default;
};
struct EntryShift {
  std::size_t index = 0;
  Shift delta = 0;
  bool operator==(const EntryShift&) const = default;
};

using Step = std::variant<Permute, GlobalShift, EntryShift>;
using IsoCertificate = std::vector<Step>;

// Throws Error(InvalidStep) if the step does not fit the shift list or base.
void validate_step(const Step& step, std::size_t n, const GradedBase& base);
std::vector<Shift> apply_step(std::span<const Shift> shifts, const Step& step,
                              const GradedBase& base);
std::vector<Shift> apply_certificate(std::span<const Shift> shifts,
                                     const IsoCertificate& cert,
                                     const GradedBase& base);
Step inverse(const Step& step);

bool is_graded_isomorphic(const ShiftedMatrixAlgebra& a,
                          const ShiftedMatrixAlgebra& b);

// A step sequence taking a.shifts to b.shifts exactly, or nullopt when the
// algebras are not graded isomorphic.
std::optional<IsoCertificate> iso_certificate(const ShiftedMatrixAlgebra& a,
                                              const ShiftedMatrixAlgebra& b);

// Breadth-first search over sorted shift lists using unit global shifts and
// (Laurent) single-entry shifts by ±m, confined to the window
// [min - bound, max + bound] of both inputs. Independent of canonical forms.
// Throws Error(WindowExceeded) when the window or state space is too large
// to search.
bool oracle_iso(const ShiftedMatrixAlgebra& a, const ShiftedMatrixAlgebra& b,
                Shift bound);

struct DirectSumAlgebra {
  std::vector<ShiftedMatrixAlgebra> summands;

  DirectSumAlgebra() = default;
  // Throws Error(InvalidArgument) when empty.
  explicit DirectSumAlgebra(std::vector<ShiftedMatrixAlgebra> s);

  bool operator==(const DirectSumAlgebra&) const = default;
};

// Total order key of a summand's graded isomorphism class.
struct SummandKey {
  GradedBase base;
  std::size_t n = 0;
  CanonicalForm form;
  auto operator<=>(const SummandKey&) const = default;
};

SummandKey summand_key(const ShiftedMatrixAlgebra& a);

bool direct_sum_iso(const DirectSumAlgebra& r, const DirectSumAlgebra& s);

std::string to_string(const GradedBase& base);
std::string to_string(const ShiftedMatrixAlgebra& a);
std::string to_string(const DirectSumAlgebra& r);
std::string to_string(const CanonicalForm& form);
std::string to_string(const Step& step);

}  // namespace gradlpa
