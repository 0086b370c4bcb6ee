#include "gradlpa/graded_matrix.hpp"

#include <utility>

#include "gradlpa/error.hpp"

namespace gradlpa {

LaurentElement LaurentElement::monomial(Shift degree, Coefficient coeff) {
  LaurentElement e;
  e.add_term(degree, coeff);
  return e;
}

void LaurentElement::add_term(Shift degree, Coefficient coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = terms_.emplace(degree, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& other) {
  for (const auto& [d, c] : other.terms_) add_term(d, c);
  return *this;
}

LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
  LaurentElement out;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) out.add_term(da + db, ca * cb);
  return out;
}

LaurentElement LaurentElement::shifted(Shift shift) const {
  LaurentElement out;
  for (const auto& [d, c] : terms_) out.terms_.emplace(d + shift, c);
  return out;
}

GradedMatrix::GradedMatrix(GradedBase base, std::vector<Shift> shifts)
    : base_(base), shifts_(std::move(shifts)) {
  if (shifts_.empty())
    throw Error(ErrorKind::InvalidArgument, "graded matrix needs n >= 1");
  entries_.resize(shifts_.size() * shifts_.size());
}

GradedMatrix GradedMatrix::identity(GradedBase base, std::vector<Shift> shifts) {
  GradedMatrix m(base, std::move(shifts));
  for (std::size_t i = 0; i < m.size(); ++i) m.add_term(i, i, 0, 1);
  return m;
}

void GradedMatrix::check_degree(Shift degree) const {
  if (base_.is_trivial() ? degree != 0 : degree % base_.period() != 0)
    throw Error(ErrorKind::InvalidArgument,
                "x^" + std::to_string(degree) + " is not an element of " +
                    to_string(base_));
}

void GradedMatrix::set(std::size_t i, std::size_t j, LaurentElement value) {
  for (const auto& [d, c] : value.terms()) check_degree(d);
  entries_[i * size() + j] = std::move(value);
}

void GradedMatrix::add_term(std::size_t i, std::size_t j, Shift degree,
                            Coefficient coeff) {
  check_degree(degree);
  entries_[i * size() + j].add_term(degree, coeff);
}

bool GradedMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

std::map<Shift, GradedMatrix> homogeneous_components(const GradedMatrix& m) {
  std::map<Shift, GradedMatrix> out;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [e, c] : m.at(i, j).terms()) {
        const Shift delta = m.degree_of(i, j, e);
        auto it = out.try_emplace(delta, m.base(), m.shifts()).first;
        it->second.add_term(i, j, e, c);
      }
    }
  }
  return out;
}

namespace {
void require_same_shape(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.size() != b.size() || a.base() != b.base() || a.shifts() != b.shifts())
    throw Error(ErrorKind::ShapeMismatch,
                "matrices differ in size, base or shifts");
}
}  // namespace

GradedMatrix add(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_shape(a, b);
  GradedMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out.set(i, j, a.at(i, j) + b.at(i, j));
  return out;
}

GradedMatrix sum(const std::map<Shift, GradedMatrix>& components,
                 const GradedMatrix& like) {
  GradedMatrix out(like.base(), like.shifts());
  for (const auto& [d, c] : components) out = add(out, c);
  return out;
}

GradedMatrix multiply(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_shape(a, b);
  const std::size_t n = a.size();
  GradedMatrix out(a.base(), a.shifts());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      LaurentElement acc;
      for (std::size_t k = 0; k < n; ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        acc += a.at(i, k) * b.at(k, j);
      }
      out.set(i, j, std::move(acc));
    }
  }
  return out;
}

GradedMatrix conjugate_by_step(const GradedMatrix& m, const Step& step) {
  const std::size_t n = m.size();
  const std::vector<Shift> shifts = apply_step(m.shifts(), step, m.base());
  GradedMatrix out(m.base(), shifts);
  if (const auto* p = std::get_if<Permute>(&step)) {
    // (p M p^-1)_{ij} = M_{π(i) π(j)}
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.set(i, j, m.at(p->image[i], p->image[j]));
  } else if (std::holds_alternative<GlobalShift>(step)) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.set(i, j, m.at(i, j));
  } else {
    // row i picks up u_δ^-1 on the left, column i picks up u_δ on the right
    const auto& e = std::get<EntryShift>(step);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Shift factor = 0;
        if (i == e.index) factor -= e.delta;
        if (j == e.index) factor += e.delta;
        out.set(i, j, m.at(i, j).shifted(factor));
      }
    }
  }
  return out;
}

}  // namespace gradlpa
