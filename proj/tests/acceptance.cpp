// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "gradlpa/algebra.hpp"
#include "gradlpa/corner.hpp"
#include "gradlpa/error.hpp"
#include "gradlpa/graded_matrix.hpp"
#include "gradlpa/graph.hpp"
#include "gradlpa/realization.hpp"
#include "gradlpa/representation.hpp"
#include "gradlpa/text.hpp"
#include "oracles.hpp"

using namespace gradlpa;

namespace {

const GradedBase K = GradedBase::trivial();
GradedBase Kx(Shift m) { return GradedBase::laurent(m); }

// Collects failures of one criterion; the first few are reported.
struct Check {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok) failures.push_back(what);
  }
};

std::string show(const std::vector<Shift>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::map<Shift, std::multiset<Coefficient>> coefficients_by_degree(const GradedMatrix& m) {
  std::map<Shift, std::multiset<Coefficient>> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      for (const auto& [e, c] : m.at(i, j).terms())
        out[e + m.shifts()[i] - m.shifts()[j]].insert(c);
  return out;
}

// Degrees of all monomials of m, straight from the grading rule.
std::set<Shift> degrees(const GradedMatrix& m) {
  std::set<Shift> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      for (const auto& [e, c] : m.at(i, j).terms()) out.insert(e + m.shifts()[i] - m.shifts()[j]);
  return out;
}

const ShiftedMatrixAlgebra& single(const RepresentationReport& r) {
  if (r.sum.summands.size() != 1) throw std::runtime_error("expected one summand");
  return r.sum.summands.front();
}

void criterion_example_comet(Check& c) {
  const auto g = parse_graph("a -> u\nu -> v\nv -> u\n");
  const auto at_u = single(represent_at(g, {{"u", "u"}}));
  const auto at_v = single(represent_at(g, {{"u", "v"}}));
  c.expect(at_u.base == Kx(2) && at_u.shifts == std::vector<Shift>{0, 1, 1},
           "base u gave " + to_string(at_u));
  c.expect(at_v.base == Kx(2) && at_v.shifts == std::vector<Shift>{0, 1, 2},
           "base v gave " + to_string(at_v));
  c.expect(is_graded_isomorphic(at_u, at_v), "not isomorphic");

  const auto cert = iso_certificate(at_u, at_v);
  c.expect(cert.has_value(), "no certificate");
  if (!cert) return;
  c.expect(apply_certificate(at_u.shifts, *cert, at_u.base) == at_v.shifts,
           "certificate does not fold to the target shifts");

  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    GradedMatrix m = oracle::random_matrix(rng, at_u.base, at_u.shifts);
    std::vector<Shift> shifts = at_u.shifts;
    for (const auto& step : *cert) {
      shifts = apply_step(shifts, step, at_u.base);
      const GradedMatrix next = conjugate_by_step(m, step);
      c.expect(next.shifts() == shifts, "conjugation shifts disagree with apply_step");
      c.expect(coefficients_by_degree(next) == coefficients_by_degree(m),
               "step " + to_string(step) + " moved a monomial to another degree");
      m = next;
    }
    c.expect(m.shifts() == at_v.shifts, "conjugation chain ends at " + show(m.shifts()));
  }
}

void criterion_remark(Check& c) {
  const ShiftedMatrixAlgebra a{K, {0, 2}};
  const Verdict v = is_realizable(a);
  c.expect(!v, "M2(K)(0,2) reported realizable");
  c.expect(!v.failures.empty() && v.failures[0].index == 1, "failing index is not 1");
  try {
    synthesize(a);
    c.expect(false, "synthesize succeeded");
  } catch (const Error& e) {
    c.expect(e.kind() == ErrorKind::NotRealizable, "synthesize raised " + std::string(to_string(e.kind())));
  }
}

void criterion_corner(Check& c) {
  const auto l3 = parse_graph("u -> v\nv -> w\n");
  const auto r = corner_by_vertices(l3, {"u", "w"});
  c.expect(r.summands.size() == 1 && r.summands[0].base == K &&
               r.summands[0].shifts == std::vector<Shift>{0, 2},
           "corner is " + to_string(r));
  c.expect(!corner_realizable(l3, {"u", "w"}), "corner reported realizable");
}

void criterion_lines_cycles(Check& c) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto line = single(represent(build_line(n)));
    const auto dense = oracle::brute_dense_form(line);
    c.expect(line.base == K && dense == std::vector<std::size_t>(n, 1),
             "L" + std::to_string(n) + " gave " + to_string(line));
    c.expect(static_cast<bool>(is_realizable(line)), "L" + std::to_string(n) + " not realizable");
    const auto back = single(represent(synthesize(line)));
    c.expect(is_graded_isomorphic(back, line), "L" + std::to_string(n) + " round trip");

    const auto tail = single(represent(build_cycle_tail(n)));
    c.expect(tail.base == Kx(1) && oracle::brute_dense_form(tail) == std::vector<std::size_t>{n},
             "C" + std::to_string(n) + " gave " + to_string(tail));
  }
}

void criterion_oracle_grid(Check& c) {
  const std::vector<GradedBase> bases{K, Kx(1), Kx(2), Kx(3), Kx(4)};
  for (const auto& base : bases) {
    for (std::size_t n = 1; n <= 4; ++n) {
      std::vector<std::vector<Shift>> lists;
      std::vector<Shift> cur(n, 0);
      std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (i == n) {
          lists.push_back(cur);
          return;
        }
        for (Shift v = 0; v <= 3; ++v) {
          cur[i] = v;
          fill(i + 1);
        }
      };
      fill(0);
      // The oracle searches sorted lists, so its answer for (x, y) equals its
      // answer for (sort x, sort y); each sorted pair is searched once.
      std::map<std::pair<std::vector<Shift>, std::vector<Shift>>, bool> searched;
      for (const auto& x : lists) {
        for (const auto& y : lists) {
          const ShiftedMatrixAlgebra a{base, x}, b{base, y};
          const bool fast = is_graded_isomorphic(a, b);
          auto sx = x, sy = y;
          std::sort(sx.begin(), sx.end());
          std::sort(sy.begin(), sy.end());
          auto [it, fresh] = searched.try_emplace({sx, sy}, false);
          if (fresh) it->second = oracle_iso(a, b, 8);
          const bool slow = it->second;
          c.expect(fast == slow, to_string(a) + " vs " + to_string(b));
        }
      }
    }
  }
}

void criterion_invariance(Check& c) {
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<std::size_t> size(1, 8), len(0, 6);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto base = oracle::random_base(rng, 6);
    const auto s = oracle::random_shifts(rng, size(rng), -5, 5);
    std::vector<Shift> t = s;
    for (std::size_t k = len(rng); k > 0; --k)
      t = apply_step(t, oracle::random_step(rng, t.size(), base), base);
    c.expect(canonical_form({base, s}) == canonical_form({base, t}),
             to_string(base) + " " + show(s) + " -> " + show(t));
  }
}

ShiftedMatrixAlgebra random_realizable(std::mt19937_64& rng) {
  std::bernoulli_distribution trivial(0.5);
  std::uniform_int_distribution<std::size_t> len(1, 6), mult(1, 4);
  std::vector<std::size_t> l;
  GradedBase base = K;
  if (trivial(rng)) {
    l.assign(len(rng) + 1, 0);  // k in 0..6
    for (auto& x : l) x = mult(rng);
    l[0] = 1;
  } else {
    l.assign(len(rng), 0);
    for (auto& x : l) x = mult(rng);
    base = Kx(static_cast<Shift>(l.size()));
  }
  auto a = oracle::from_multiplicities(base, l);
  for (int k = 0; k < 3; ++k)
    a.shifts = apply_step(a.shifts, oracle::random_step(rng, a.size(), base), base);
  return a;
}

void criterion_round_trip(Check& c) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 1000; ++trial) {
    const DirectSumAlgebra r({random_realizable(rng)});
    c.expect(direct_sum_iso(represent(synthesize_sum(r)).sum, r), to_string(r));
  }
  std::uniform_int_distribution<std::size_t> count(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ShiftedMatrixAlgebra> s;
    for (std::size_t k = count(rng); k > 0; --k) s.push_back(random_realizable(rng));
    const DirectSumAlgebra r(s);
    c.expect(direct_sum_iso(represent(synthesize_sum(r)).sum, r), to_string(r));
  }
}

// Dense multiplicity vectors with entries >= 1 summing to at most `total`.
void compositions(std::size_t total, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (!cur.empty()) out.push_back(cur);
  std::size_t used = 0;
  for (std::size_t x : cur) used += x;
  for (std::size_t x = 1; used + x <= total; ++x) {
    cur.push_back(x);
    compositions(total, cur, out);
    cur.pop_back();
  }
}

void criterion_small_graphs(Check& c) {
  constexpr std::size_t kMaxVertices = 5;
  using Form = std::pair<std::size_t, CanonicalForm>;  // (n, form)
  std::set<Form> obtained_sinks, obtained_comets;
  auto names = [](const std::string& prefix, std::size_t n) {
    std::vector<VertexId> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(prefix + std::to_string(i));
    return v;
  };

  // Acyclic single-sink graphs: vertices 0..n-1 in topological order, every
  // edge goes from a higher to a lower index; vertex 0 is the only sink.
  for (std::size_t n = 1; n <= kMaxVertices; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) slots.push_back({i, j});
    const auto vs = names("t", n);
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      std::vector<Edge> edges;
      std::vector<std::size_t> out_deg(n, 0);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (!(mask >> s & 1)) continue;
        edges.push_back({"e" + std::to_string(s), vs[slots[s].first], vs[slots[s].second]});
        ++out_deg[slots[s].first];
      }
      bool single_sink = true;
      for (std::size_t i = 1; i < n; ++i) single_sink = single_sink && out_deg[i] > 0;
      if (!single_sink) continue;
      const DirectedGraph g(vs, edges);
      const auto cls = classify(g);
      c.expect(cls.acyclic && cls.no_exit && cls.sinks.size() == 1, "enumeration produced a bad DAG");
      const auto a = single(represent(g));
      const bool ok = static_cast<bool>(is_realizable(a));
      c.expect(ok, "acyclic graph gave non-realizable " + to_string(a));
      obtained_sinks.insert({a.size(), canonical_form(a)});
    }
  }

  // Comets: a cycle c0 -> c1 -> ... -> c(m-1) -> c0 plus tree vertices
  // t1..tr, each with a nonempty set of edges into the cycle or earlier tree
  // vertices.
  for (std::size_t m = 1; m <= kMaxVertices; ++m) {
    for (std::size_t r = 0; m + r <= kMaxVertices; ++r) {
      const auto cyc = names("c", m);
      const auto tree = names("t", r);
      std::vector<VertexId> vs = cyc;
      vs.insert(vs.end(), tree.begin(), tree.end());
      std::vector<Edge> base_edges;
      for (std::size_t i = 0; i < m; ++i)
        base_edges.push_back({"z" + std::to_string(i), cyc[i], cyc[(i + 1) % m]});
      std::vector<std::uint32_t> choice(r, 1);
      std::function<void(std::size_t)> rec = [&](std::size_t t) {
        if (t == r) {
          std::vector<Edge> edges = base_edges;
          for (std::size_t i = 0; i < r; ++i) {
            const std::size_t targets = m + i;
            for (std::size_t k = 0; k < targets; ++k)
              if (choice[i] >> k & 1)
                edges.push_back({"f" + std::to_string(i) + "_" + std::to_string(k), tree[i],
                                 k < m ? cyc[k] : tree[k - m]});
          }
          const DirectedGraph g(vs, edges);
          const auto cls = classify(g);
          c.expect(cls.no_exit && cls.all_comets && cls.cycles.size() == 1 && cls.sinks.empty(),
                   "enumeration produced a non-comet");
          const auto a = single(represent(g));
          c.expect(static_cast<bool>(is_realizable(a)), "comet gave non-realizable " + to_string(a));
          obtained_comets.insert({a.size(), canonical_form(a)});
          return;
        }
        for (std::uint32_t s = 1; s < (1u << (m + t)); ++s) {
          choice[t] = s;
          rec(t + 1);
        }
      };
      rec(0);
    }
  }

  // Predicted forms of size <= 5 from the multiplicity conditions.
  std::set<Form> predicted_sinks, predicted_comets;
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> cur;
  compositions(kMaxVertices, cur, comps);
  for (const auto& l : comps) {
    std::size_t n = 0;
    for (std::size_t x : l) n += x;
    if (l[0] == 1) {
      const auto a = oracle::from_multiplicities(K, l);
      predicted_sinks.insert({n, canonical_form(a)});
    }
    const auto a = oracle::from_multiplicities(Kx(static_cast<Shift>(l.size())), l);
    predicted_comets.insert({n, canonical_form(a)});
  }

  auto small = [&](const std::set<Form>& s) {
    std::set<Form> out;
    for (const auto& f : s)
      if (f.first <= kMaxVertices) out.insert(f);
    return out;
  };
  c.expect(small(obtained_sinks) == predicted_sinks, "acyclic forms differ from prediction");
  c.expect(small(obtained_comets) == predicted_comets, "comet forms differ from prediction");
}

void criterion_degrees(Check& c) {
  std::mt19937_64 rng(109);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto base = oracle::random_base(rng, 4);
    const auto shifts = oracle::random_shifts(rng, size(rng), -3, 3);
    const auto m = oracle::random_matrix(rng, base, shifts);
    const Step step = oracle::random_step(rng, m.size(), base);
    const auto image = conjugate_by_step(m, step);
    const auto before = homogeneous_components(m);
    const auto after = homogeneous_components(image);
    bool same = before.size() == after.size();
    for (const auto& [d, comp] : before) {
      const auto it = after.find(d);
      same = same && it != after.end() && conjugate_by_step(comp, step) == it->second &&
             degrees(it->second) == std::set<Shift>{d};
    }
    c.expect(same, "components moved under " + to_string(step));

    const auto other = homogeneous_components(oracle::random_matrix(rng, base, shifts));
    for (const auto& [d1, x] : before)
      for (const auto& [d2, y] : other) {
        const auto prod = degrees(multiply(x, y));
        c.expect(prod.empty() || prod == std::set<Shift>{d1 + d2},
                 "product of degrees " + std::to_string(d1) + " and " + std::to_string(d2));
      }
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*run)(Check&);
  };
  const Criterion criteria[] = {
      {"finite comet: representations at u and v, certificate", criterion_example_comet},
      {"M2(K)(0,2) is not realizable", criterion_remark},
      {"corner of L3 at {u,w}", criterion_corner},
      {"lines L_n and cycles with tails C_n, n = 1..8", criterion_lines_cycles},
      {"isomorphism agrees with the BFS oracle on the full grid", criterion_oracle_grid},
      {"canonical forms invariant under 10000 random certificates", criterion_invariance},
      {"synthesize/represent round trip on 1000 forms and 200 sums", criterion_round_trip},
      {"exhaustive small graphs match the predicted forms", criterion_small_graphs},
      {"conjugation preserves homogeneous degrees", criterion_degrees},
  };
  int failed = 0;
  int index = 0;
  for (const auto& cr : criteria) {
    ++index;
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = check.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("[%s] %d. %s (%zu checks, %.2fs)\n", ok ? "PASS" : "FAIL", index, cr.name,
                check.cases, secs);
    for (std::size_t i = 0; i < check.failures.size() && i < 5; ++i)
      std::printf("       %s\n", check.failures[i].c_str());
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
