#include "gradlpa/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "gradlpa/error.hpp"
#include "gradlpa/rotation.hpp"

namespace gradlpa {

namespace {

Shift floor_mod(Shift value, Shift m) {
  const Shift r = value % m;
  return r < 0 ? r + m : r;
}

std::vector<Level> run_lengths(const std::map<Shift, std::size_t>& counts,
                               Shift origin, Shift modulus) {
  std::vector<Level> levels;
  levels.reserve(counts.size());
  for (const auto& [value, count] : counts) {
    const Shift offset = modulus == 0 ? value - origin : floor_mod(value - origin, modulus);
    levels.push_back({offset, count});
  }
  std::sort(levels.begin(), levels.end());
  return levels;
}

std::size_t lookup(const std::vector<Level>& levels, Shift i) {
  auto it = std::lower_bound(levels.begin(), levels.end(), Level{i, 0});
  return it != levels.end() && it->offset == i ? it->count : 0;
}

std::vector<std::size_t> densify(const std::vector<Level>& levels, Shift length) {
  std::vector<std::size_t> out(static_cast<std::size_t>(length), 0);
  for (const auto& l : levels) out[static_cast<std::size_t>(l.offset)] = l.count;
  return out;
}

std::map<Shift, std::size_t> residue_counts(const ShiftedMatrixAlgebra& a) {
  std::map<Shift, std::size_t> counts;
  for (Shift s : a.shifts) ++counts[floor_mod(s, a.base.period())];
  return counts;
}

// A maximal run of zeros in the dense residue vector followed by one nonzero
// multiplicity. Ordering by (-gap, count) on tokens agrees with lexicographic
// order of the dense rotations that start at token boundaries, and the least
// dense rotation always starts at such a boundary.
struct Token {
  Shift neg_gap;
  std::size_t count;
  bool operator==(const Token&) const = default;
  bool operator<(const Token& o) const {
    return std::tie(neg_gap, count) < std::tie(o.neg_gap, o.count);
  }
};

}  // namespace

GradedBase GradedBase::laurent(Shift m) {
  if (m < 1)
    throw Error(ErrorKind::InvalidArgument,
                "Laurent period must be positive, got " + std::to_string(m));
  return GradedBase(m);
}

ShiftedMatrixAlgebra::ShiftedMatrixAlgebra(GradedBase b, std::vector<Shift> s)
    : base(b), shifts(std::move(s)) {
  if (shifts.empty())
    throw Error(ErrorKind::InvalidArgument, "matrix algebra needs n >= 1");
}

DirectSumAlgebra::DirectSumAlgebra(std::vector<ShiftedMatrixAlgebra> s)
    : summands(std::move(s)) {
  if (summands.empty())
    throw Error(ErrorKind::InvalidArgument, "direct sum needs a summand");
}

std::size_t TrivialForm::multiplicity(Shift i) const { return lookup(levels, i); }
std::vector<std::size_t> TrivialForm::dense() const { return densify(levels, top + 1); }
std::size_t CyclicForm::multiplicity(Shift i) const { return lookup(levels, i); }
std::vector<std::size_t> CyclicForm::dense() const { return densify(levels, period); }

Shift canonical_rotation(const ShiftedMatrixAlgebra& a) {
  if (!a.base.is_laurent())
    throw Error(ErrorKind::InvalidArgument, "rotation is defined for Laurent bases only");
  const Shift m = a.base.period();
  const auto counts = residue_counts(a);
  std::vector<Shift> residues;
  std::vector<Token> tokens;
  for (const auto& [r, c] : counts) residues.push_back(r);
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const Shift prev = i == 0 ? residues.back() - m : residues[i - 1];
    tokens.push_back({-(residues[i] - prev - 1), counts.at(residues[i])});
  }
  const std::size_t j = least_rotation(tokens);
  // the winning rotation starts right after the previous nonzero residue
  const Shift prev = j == 0 ? residues.back() - m : residues[j - 1];
  return floor_mod(prev + 1, m);
}

CanonicalForm canonical_form(const ShiftedMatrixAlgebra& a) {
  if (a.shifts.empty())
    throw Error(ErrorKind::InvalidArgument, "matrix algebra needs n >= 1");
  if (a.base.is_trivial()) {
    std::map<Shift, std::size_t> counts;
    for (Shift s : a.shifts) ++counts[s];
    const Shift lo = counts.begin()->first;
    return TrivialForm{counts.rbegin()->first - lo, run_lengths(counts, lo, 0)};
  }
  const Shift m = a.base.period();
  const Shift r = canonical_rotation(a);
  return CyclicForm{m, run_lengths(residue_counts(a), r, m)};
}

void validate_step(const Step& step, std::size_t n, const GradedBase& base) {
  if (const auto* p = std::get_if<Permute>(&step)) {
    if (p->image.size() != n)
      throw Error(ErrorKind::InvalidStep, "permutation has wrong length");
    std::vector<bool> hit(n, false);
    for (std::size_t i : p->image) {
      if (i >= n || hit[i])
        throw Error(ErrorKind::InvalidStep, "not a permutation of 1.." + std::to_string(n));
      hit[i] = true;
    }
  } else if (const auto* g = std::get_if<GlobalShift>(&step)) {
    if (g->delta > 2 * kMaxAbsShift || g->delta < -2 * kMaxAbsShift)
      throw Error(ErrorKind::InvalidStep, "global shift out of range");
  } else {
    const auto& e = std::get<EntryShift>(step);
    if (base.is_trivial())
      throw Error(ErrorKind::InvalidStep,
                  "entry shifts need a Laurent base; K has no invertible "
                  "homogeneous elements outside degree 0");
    if (e.index >= n)
      throw Error(ErrorKind::InvalidStep, "entry index out of range");
    if (e.delta % base.period() != 0)
      throw Error(ErrorKind::InvalidStep,
                  "entry shift " + std::to_string(e.delta) +
                      " is not a multiple of the period " + std::to_string(base.period()));
    if (e.delta > 2 * kMaxAbsShift || e.delta < -2 * kMaxAbsShift)
      throw Error(ErrorKind::InvalidStep, "entry shift out of range");
  }
}

std::vector<Shift> apply_step(std::span<const Shift> shifts, const Step& step,
                              const GradedBase& base) {
  validate_step(step, shifts.size(), base);
  std::vector<Shift> out(shifts.begin(), shifts.end());
  if (const auto* p = std::get_if<Permute>(&step)) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = shifts[p->image[i]];
  } else if (const auto* g = std::get_if<GlobalShift>(&step)) {
    for (auto& s : out) s += g->delta;
  } else {
    const auto& e = std::get<EntryShift>(step);
    out[e.index] += e.delta;
  }
  return out;
}

std::vector<Shift> apply_certificate(std::span<const Shift> shifts,
                                     const IsoCertificate& cert,
                                     const GradedBase& base) {
  std::vector<Shift> cur(shifts.begin(), shifts.end());
  for (const auto& step : cert) cur = apply_step(cur, step, base);
  return cur;
}

Step inverse(const Step& step) {
  if (const auto* p = std::get_if<Permute>(&step)) {
    Permute inv;
    inv.image.resize(p->image.size());
    for (std::size_t i = 0; i < p->image.size(); ++i) inv.image[p->image[i]] = i;
    return inv;
  }
  if (const auto* g = std::get_if<GlobalShift>(&step)) return GlobalShift{-g->delta};
  const auto& e = std::get<EntryShift>(step);
  return EntryShift{e.index, -e.delta};
}

bool is_graded_isomorphic(const ShiftedMatrixAlgebra& a,
                          const ShiftedMatrixAlgebra& b) {
  return a.base == b.base && a.size() == b.size() &&
         canonical_form(a) == canonical_form(b);
}

std::optional<IsoCertificate> iso_certificate(const ShiftedMatrixAlgebra& a,
                                              const ShiftedMatrixAlgebra& b) {
  if (!is_graded_isomorphic(a, b)) return std::nullopt;
  const std::size_t n = a.size();
  const bool laurent = a.base.is_laurent();
  const Shift m = a.base.period();

  // Global shift bringing a's entries into b's classes (values over K,
  // residues over K[x^m, x^-m]).
  Shift t;
  if (laurent) {
    t = floor_mod(canonical_rotation(b) - canonical_rotation(a), m);
  } else {
    t = *std::min_element(b.shifts.begin(), b.shifts.end()) -
        *std::min_element(a.shifts.begin(), a.shifts.end());
  }
  std::vector<Shift> cur = a.shifts;
  for (auto& s : cur) s += t;

  auto cls = [&](Shift v) { return laurent ? floor_mod(v, m) : v; };

  // match[j] = index in `cur` that ends up at position j of b
  std::vector<std::size_t> match(n, n);
  std::vector<bool> used(n, false);
  std::map<Shift, std::deque<std::size_t>> by_value;
  for (std::size_t i = 0; i < n; ++i) by_value[cur[i]].push_back(i);
  for (std::size_t j = 0; j < n; ++j) {
    auto it = by_value.find(b.shifts[j]);
    if (it != by_value.end() && !it->second.empty()) {
      match[j] = it->second.front();
      used[match[j]] = true;
      it->second.pop_front();
    }
  }
  // Leftovers are paired within each class in order of (value, index).
  std::map<Shift, std::vector<std::size_t>> free_src, free_dst;
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) free_src[cls(cur[i])].push_back(i);
  for (std::size_t j = 0; j < n; ++j)
    if (match[j] == n) free_dst[cls(b.shifts[j])].push_back(j);
  std::vector<Shift> entry_delta(n, 0);
  for (auto& [c, dst] : free_dst) {
    auto& src = free_src.at(c);
    auto by_val = [](const std::vector<Shift>& vals) {
      return [&vals](std::size_t x, std::size_t y) {
        return std::tie(vals[x], x) < std::tie(vals[y], y);
      };
    };
    std::sort(src.begin(), src.end(), by_val(cur));
    std::sort(dst.begin(), dst.end(), by_val(b.shifts));
    for (std::size_t k = 0; k < dst.size(); ++k) {
      match[dst[k]] = src[k];
      entry_delta[src[k]] = b.shifts[dst[k]] - cur[src[k]];
    }
  }

  IsoCertificate cert;
  if (t != 0) cert.push_back(GlobalShift{t});
  for (std::size_t i = 0; i < n; ++i)
    if (entry_delta[i] != 0) cert.push_back(EntryShift{i, entry_delta[i]});
  Permute p{match};
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  if (p.image != identity) cert.push_back(std::move(p));
  return cert;
}

bool oracle_iso(const ShiftedMatrixAlgebra& a, const ShiftedMatrixAlgebra& b,
                Shift bound) {
  if (bound < 1) throw Error(ErrorKind::InvalidArgument, "bound must be positive");
  if (a.base != b.base || a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n > 8)
    throw Error(ErrorKind::WindowExceeded, "oracle supports n <= 8 only");

  Shift lo = a.shifts.front(), hi = a.shifts.front();
  for (const auto* list : {&a.shifts, &b.shifts}) {
    for (Shift s : *list) {
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
  }
  lo -= bound;
  hi += bound;
  const Shift width = hi - lo + 1;
  if (width > 255)
    throw Error(ErrorKind::WindowExceeded,
                "search window of width " + std::to_string(width) + " is too wide");
  // number of sorted lists over the window: C(width + n - 1, n)
  double states = 1;
  for (std::size_t i = 0; i < n; ++i)
    states = states * static_cast<double>(width + static_cast<Shift>(i)) /
             static_cast<double>(i + 1);
  if (states > 4e6)
    throw Error(ErrorKind::WindowExceeded, "search space too large");

  auto encode = [&](std::vector<Shift> v) {
    std::sort(v.begin(), v.end());
    std::uint64_t code = 0;
    for (Shift s : v) code = (code << 8) | static_cast<std::uint64_t>(s - lo);
    return code;
  };
  auto decode = [&](std::uint64_t code) {
    std::vector<Shift> v(n);
    for (std::size_t i = n; i-- > 0;) {
      v[i] = static_cast<Shift>(code & 0xff) + lo;
      code >>= 8;
    }
    return v;
  };

  const std::uint64_t start = encode(a.shifts);
  const std::uint64_t goal = encode(b.shifts);
  std::unordered_set<std::uint64_t> seen{start};
  std::deque<std::uint64_t> queue{start};
  auto visit = [&](const std::vector<Shift>& v) {
    for (Shift s : v)
      if (s < lo || s > hi) return false;
    const std::uint64_t code = encode(v);
    if (code == goal) return true;
    if (seen.insert(code).second) queue.push_back(code);
    return false;
  };
  if (start == goal) return true;
  while (!queue.empty()) {
    const std::vector<Shift> cur = decode(queue.front());
    queue.pop_front();
    for (Shift d : {Shift{1}, Shift{-1}}) {
      std::vector<Shift> next = cur;
      for (auto& s : next) s += d;
      if (visit(next)) return true;
    }
    if (a.base.is_laurent()) {
      const Shift m = a.base.period();
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && cur[i] == cur[i - 1]) continue;
        for (Shift d : {m, -m}) {
          std::vector<Shift> next = cur;
          next[i] += d;
          if (visit(next)) return true;
        }
      }
    }
  }
  return false;
}

SummandKey summand_key(const ShiftedMatrixAlgebra& a) {
  return {a.base, a.size(), canonical_form(a)};
}

bool direct_sum_iso(const DirectSumAlgebra& r, const DirectSumAlgebra& s) {
  if (r.summands.size() != s.summands.size()) return false;
  auto keys = [](const DirectSumAlgebra& d) {
    std::vector<SummandKey> k;
    k.reserve(d.summands.size());
    for (const auto& a : d.summands) k.push_back(summand_key(a));
    std::sort(k.begin(), k.end());
    return k;
  };
  return keys(r) == keys(s);
}

std::string to_string(const GradedBase& base) {
  if (base.is_trivial()) return "K";
  return "K[x^" + std::to_string(base.period()) + "]";
}

std::string to_string(const ShiftedMatrixAlgebra& a) {
  std::ostringstream os;
  os << 'M' << a.size() << '(' << to_string(a.base) << ")(";
  for (std::size_t i = 0; i < a.shifts.size(); ++i) os << (i ? "," : "") << a.shifts[i];
  os << ')';
  return os.str();
}

std::string to_string(const DirectSumAlgebra& r) {
  std::string out;
  for (std::size_t i = 0; i < r.summands.size(); ++i) {
    if (i) out += " (+) ";
    out += to_string(r.summands[i]);
  }
  return out;
}

namespace {
constexpr Shift kDenseLimit = 64;

void write_levels(std::ostream& os, const std::vector<Level>& levels, Shift length) {
  if (length <= kDenseLimit) {
    auto dense = densify(levels, length);
    for (std::size_t i = 0; i < dense.size(); ++i) os << (i ? "," : "") << dense[i];
    return;
  }
  // long and mostly zero: list the nonzero entries only
  os << '{';
  for (std::size_t i = 0; i < levels.size(); ++i)
    os << (i ? ", " : "") << "l" << levels[i].offset << '=' << levels[i].count;
  os << '}';
}
}  // namespace

std::string to_string(const CanonicalForm& form) {
  std::ostringstream os;
  if (const auto* t = std::get_if<TrivialForm>(&form)) {
    os << "(k=" << t->top << "; ";
    write_levels(os, t->levels, t->top + 1);
  } else {
    const auto& c = std::get<CyclicForm>(form);
    os << "(m=" << c.period << "; ";
    write_levels(os, c.levels, c.period);
  }
  os << ')';
  return os.str();
}

std::string to_string(const Step& step) {
  std::ostringstream os;
  if (const auto* p = std::get_if<Permute>(&step)) {
    os << "Permute(";
    for (std::size_t i = 0; i < p->image.size(); ++i) os << (i ? " " : "") << p->image[i] + 1;
    os << ')';
  } else if (const auto* g = std::get_if<GlobalShift>(&step)) {
    os << "GlobalShift(" << (g->delta >= 0 ? "+" : "") << g->delta << ')';
  } else {
    const auto& e = std::get<EntryShift>(step);
    os << "EntryShift(" << e.index + 1 << ',' << e.delta << ')';
  }
  return os.str();
}

}  // namespace gradlpa
