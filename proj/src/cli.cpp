#include "gradlpa/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "gradlpa/algebra.hpp"
#include "gradlpa/corner.hpp"
#include "gradlpa/error.hpp"
#include "gradlpa/graded_matrix.hpp"
#include "gradlpa/graph.hpp"
#include "gradlpa/realization.hpp"
#include "gradlpa/representation.hpp"
#include "gradlpa/text.hpp"

namespace gradlpa::cli {

namespace {

using json = nlohmann::json;

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

DirectedGraph load_graph(const std::string& path) {
  try {
    return parse_graph(read_source(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path + ": " + e.message());
  }
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotNoExit:
    case ErrorKind::NotASink:
    case ErrorKind::VertexNotOnCycle:
    case ErrorKind::EmptyGraph:
    case ErrorKind::CycleLimitExceeded:
    case ErrorKind::WindowExceeded:
    case ErrorKind::ZeroCorner:
      return kPreconditionFailed;
    case ErrorKind::NotIsomorphic:
    case ErrorKind::NotRealizable:
      return kDecidedNo;
    default:
      return kInputError;
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

json to_json(const CycleDescriptor& c) {
  return {{"vertices", c.vertices}, {"edges", c.edges}, {"length", c.length}};
}

json to_json(const ShiftedMatrixAlgebra& a) {
  return {{"expr", to_string(a)},
          {"base", to_string(a.base)},
          {"n", a.size()},
          {"shifts", a.shifts}};
}

json to_json(const CanonicalForm& f) {
  if (const auto* t = std::get_if<TrivialForm>(&f)) {
    json levels = json::array();
    for (const auto& l : t->levels) levels.push_back({l.offset, l.count});
    return {{"kind", "TrivialForm"}, {"k", t->top}, {"levels", levels}};
  }
  const auto& c = std::get<CyclicForm>(f);
  json levels = json::array();
  for (const auto& l : c.levels) levels.push_back({l.offset, l.count});
  return {{"kind", "CyclicForm"}, {"m", c.period}, {"levels", levels}};
}

json to_json(const Step& s) {
  if (const auto* p = std::get_if<Permute>(&s)) {
    std::vector<std::size_t> image;
    for (std::size_t i : p->image) image.push_back(i + 1);
    return {{"step", "Permute"}, {"permutation", image}};
  }
  if (const auto* g = std::get_if<GlobalShift>(&s))
    return {{"step", "GlobalShift"}, {"delta", g->delta}};
  const auto& e = std::get<EntryShift>(s);
  return {{"step", "EntryShift"}, {"index", e.index + 1}, {"delta", e.delta}};
}

json to_json(const Verdict& v) {
  json failures = json::array();
  for (const auto& f : v.failures)
    failures.push_back({{"summand", f.summand + 1},
                        {"index", f.index},
                        {"multiplicity", f.multiplicity},
                        {"reason", f.reason}});
  return {{"realizable", v.realizable}, {"failures", failures}};
}

std::string chain(const IsoCertificate& cert) {
  if (cert.empty()) return "(identity)";
  std::string out;
  for (std::size_t i = 0; i < cert.size(); ++i) out += (i ? "; " : "") + to_string(cert[i]);
  return out;
}

std::string verdict_reason(const Verdict& v) {
  std::string out;
  for (std::size_t i = 0; i < v.failures.size(); ++i) {
    const auto& f = v.failures[i];
    out += (i ? "; " : "") + std::string("summand ") + std::to_string(f.summand + 1) +
           ": " + f.reason;
  }
  return out;
}

// Output context shared by the subcommands.
struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json_mode = false;

  // Emits a decided-no result. The reason line goes to `out` in text mode and
  // to `err` in JSON mode so that `out` stays a single JSON document.
  int decided_no(const std::string& reason, json payload = nullptr) {
    if (json_mode) {
      payload["reason"] = reason;
      out << payload.dump(2) << '\n';
      err << "reason: " << reason << '\n';
    } else {
      out << "reason: " << reason << '\n';
    }
    return kDecidedNo;
  }
};

int cmd_classify(Context& ctx, const std::string& path) {
  const DirectedGraph g = load_graph(path);
  const GraphClassification c = classify(g);
  if (ctx.json_mode) {
    json cycles = json::array();
    for (const auto& cy : c.cycles) cycles.push_back(to_json(cy));
    json comps = json::array();
    for (const auto& comp : c.components)
      comps.push_back({{"vertices", comp.vertices},
                       {"cycle_count", comp.cycle_count},
                       {"comet", comp.comet}});
    ctx.out << json{{"finite", c.finite},
                    {"acyclic", c.acyclic},
                    {"no_exit", c.no_exit},
                    {"all_comets", c.all_comets},
                    {"sinks", c.sinks},
                    {"regular", c.regular},
                    {"cycles", cycles},
                    {"cycles_truncated", c.cycles_truncated},
                    {"components", comps}}
                   .dump(2)
            << '\n';
    return kSuccess;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  auto join = [](const std::vector<VertexId>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i];
    return s.empty() ? std::string("-") : s;
  };
  ctx.out << "vertices: " << g.vertex_count() << "\nedges: " << g.edge_count()
          << "\nfinite: " << yn(c.finite) << "\nacyclic: " << yn(c.acyclic)
          << "\nno-exit: " << yn(c.no_exit) << "\ncomet components: " << yn(c.all_comets)
          << "\nsinks: " << join(c.sinks) << "\nregular: " << join(c.regular) << '\n';
  ctx.out << "cycles: " << c.cycles.size() << (c.cycles_truncated ? "+ (truncated)" : "")
          << '\n';
  for (const auto& cy : c.cycles)
    ctx.out << "  length " << cy.length << ": " << join(cy.vertices) << '\n';
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    const auto& comp = c.components[i];
    ctx.out << "component " << i + 1 << ": " << join(comp.vertices) << " (cycles "
            << comp.cycle_count << (comp.comet ? ", comet" : "") << ")\n";
  }
  return kSuccess;
}

int cmd_represent(Context& ctx, const std::string& path,
                  const std::vector<std::string>& base_args, bool provenance) {
  const DirectedGraph g = load_graph(path);
  std::map<VertexId, VertexId> choice;
  for (const auto& arg : base_args) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos)
      choice[arg] = arg;
    else
      choice[arg.substr(0, eq)] = arg.substr(eq + 1);
  }
  const RepresentationReport report = represent_at(g, choice);
  if (ctx.json_mode) {
    json summands = json::array();
    for (std::size_t i = 0; i < report.sum.summands.size(); ++i) {
      json s = to_json(report.sum.summands[i]);
      const auto& p = report.provenance[i];
      if (p.sink) s["sink"] = *p.sink;
      if (p.cycle) {
        s["cycle"] = to_json(*p.cycle);
        s["base_vertex"] = p.target;
      }
      json paths = json::array();
      for (const auto& path_end : p.paths)
        paths.push_back({{"source", path_end.source}, {"length", path_end.length}});
      s["paths"] = paths;
      summands.push_back(s);
    }
    ctx.out << json{{"sum", to_string(report.sum)}, {"summands", summands}}.dump(2) << '\n';
    return kSuccess;
  }
  ctx.out << to_string(report.sum) << '\n';
  if (provenance) ctx.out << provenance_text(report);
  return kSuccess;
}

int cmd_canonical(Context& ctx, const std::string& expr) {
  const DirectSumAlgebra r = parse_algebra(expr);
  json summands = json::array();
  for (const auto& a : r.summands) {
    const CanonicalForm f = canonical_form(a);
    if (ctx.json_mode) {
      summands.push_back({{"algebra", to_json(a)}, {"form", to_json(f)}});
    } else {
      ctx.out << to_string(a) << ": " << to_string(f) << '\n';
    }
  }
  if (ctx.json_mode) ctx.out << json{{"summands", summands}}.dump(2) << '\n';
  return kSuccess;
}

std::string non_iso_reason(const ShiftedMatrixAlgebra& a, const ShiftedMatrixAlgebra& b) {
  if (a.base != b.base)
    return "graded fields differ: " + to_string(a.base) + " vs " + to_string(b.base);
  if (a.size() != b.size())
    return "sizes differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
  return "canonical forms differ: " + to_string(canonical_form(a)) + " vs " +
         to_string(canonical_form(b));
}

int cmd_iso(Context& ctx, const std::string& e1, const std::string& e2, bool certificate) {
  const DirectSumAlgebra r = parse_algebra(e1);
  const DirectSumAlgebra s = parse_algebra(e2);
  if (r.summands.size() == 1 && s.summands.size() == 1) {
    const auto& a = r.summands.front();
    const auto& b = s.summands.front();
    const auto cert = iso_certificate(a, b);
    if (!cert) return ctx.decided_no(non_iso_reason(a, b), json{{"isomorphic", false}});
    if (ctx.json_mode) {
      json steps = json::array();
      for (const auto& st : *cert) steps.push_back(to_json(st));
      ctx.out << json{{"isomorphic", true}, {"certificate", steps}}.dump(2) << '\n';
    } else if (certificate) {
      ctx.out << print_certificate(*cert);
    } else {
      ctx.out << "isomorphic\ncertificate: " << chain(*cert) << '\n';
    }
    return kSuccess;
  }
  if (certificate)
    throw Error(ErrorKind::InvalidArgument,
                "certificates are produced for single matrix algebras only");
  if (!direct_sum_iso(r, s))
    return ctx.decided_no("summand isomorphism classes differ as multisets",
                          json{{"isomorphic", false}});
  if (ctx.json_mode)
    ctx.out << json{{"isomorphic", true}}.dump(2) << '\n';
  else
    ctx.out << "isomorphic\n";
  return kSuccess;
}

// Matrix with a unit-coefficient term in every entry for each degree the base
// allows among {0, m}, so that every homogeneous component is populated.
GradedMatrix probe_matrix(const ShiftedMatrixAlgebra& a) {
  GradedMatrix m(a.base, a.shifts);
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = static_cast<Coefficient>(i * n + j + 1);
      m.add_term(i, j, 0, c);
      if (a.base.is_laurent()) m.add_term(i, j, a.base.period(), -c);
    }
  }
  return m;
}

int cmd_verify_cert(Context& ctx, const std::string& e1, const std::string& e2,
                    const std::string& cert_path) {
  const ShiftedMatrixAlgebra a = parse_matrix_algebra(e1);
  const ShiftedMatrixAlgebra b = parse_matrix_algebra(e2);
  IsoCertificate cert;
  try {
    cert = parse_certificate(read_source(cert_path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), cert_path + ": " + e.message());
  }
  if (a.base != b.base) return ctx.decided_no(non_iso_reason(a, b), json{{"verified", false}});

  std::vector<Shift> shifts = a.shifts;
  GradedMatrix m = probe_matrix(a);
  for (std::size_t k = 0; k < cert.size(); ++k) {
    try {
      shifts = apply_step(shifts, cert[k], a.base);
    } catch (const Error& e) {
      return ctx.decided_no("step " + std::to_string(k + 1) + " (" + to_string(cert[k]) +
                                ") is invalid: " + e.what(),
                            json{{"verified", false}});
    }
    // the step must carry each homogeneous component onto the same degree
    const auto before = homogeneous_components(m);
    const GradedMatrix next = conjugate_by_step(m, cert[k]);
    const auto after = homogeneous_components(next);
    bool preserved = before.size() == after.size();
    for (const auto& [d, comp] : before) {
      auto it = after.find(d);
      preserved = preserved && it != after.end() && conjugate_by_step(comp, cert[k]) == it->second;
    }
    if (!preserved || next.shifts() != shifts)
      return ctx.decided_no("step " + std::to_string(k + 1) + " does not preserve degrees",
                            json{{"verified", false}});
    m = next;
  }
  if (shifts != b.shifts) {
    return ctx.decided_no("certificate maps the shifts to " +
                              to_string(ShiftedMatrixAlgebra(a.base, shifts)) +
                              ", not " + to_string(b),
                          json{{"verified", false}});
  }
  if (ctx.json_mode)
    ctx.out << json{{"verified", true}, {"steps", cert.size()}}.dump(2) << '\n';
  else
    ctx.out << "verified: " << cert.size() << " steps map " << to_string(a) << " to "
            << to_string(b) << '\n';
  return kSuccess;
}

int cmd_realizable(Context& ctx, const std::string& expr) {
  const DirectSumAlgebra r = parse_algebra(expr);
  const Verdict v = is_realizable_sum(r);
  if (!v) return ctx.decided_no(verdict_reason(v), to_json(v));
  if (ctx.json_mode)
    ctx.out << to_json(v).dump(2) << '\n';
  else
    ctx.out << "realizable\n";
  return kSuccess;
}

int cmd_synthesize(Context& ctx, const std::string& expr, bool dot, const std::string& file) {
  const DirectSumAlgebra r = parse_algebra(expr);
  const Verdict v = is_realizable_sum(r);
  if (!v) {
    ctx.err << "error: NotRealizable: " << to_string(r) << " is not graded isomorphic to a "
            << "Leavitt path algebra\n";
    return ctx.decided_no(verdict_reason(v), to_json(v));
  }
  const DirectedGraph g = r.summands.size() == 1 ? synthesize(r.summands.front())
                                                 : synthesize_sum(r);
  const std::string text = dot ? to_dot(g) : print_graph(g);
  if (!file.empty()) {
    std::ofstream os(file, std::ios::binary);
    if (!os) throw Error(ErrorKind::InvalidArgument, "cannot write '" + file + "'");
    os << text;
  }
  if (ctx.json_mode) {
    ctx.out << json{{"graph", text}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}}
                   .dump(2)
            << '\n';
  } else if (file.empty()) {
    ctx.out << text;
  }
  return kSuccess;
}

int cmd_corner(Context& ctx, const std::string& input, const std::string& vertices,
               const std::string& indices) {
  if (vertices.empty() == indices.empty())
    throw Error(ErrorKind::InvalidArgument, "corner needs exactly one of --vertices, --indices");
  DirectSumAlgebra result;
  if (!vertices.empty()) {
    const DirectedGraph g = load_graph(input);
    const auto list = split_list(vertices);
    result = corner_by_vertices(g, std::set<VertexId>(list.begin(), list.end()));
  } else {
    const ShiftedMatrixAlgebra a = parse_matrix_algebra(input);
    std::vector<std::size_t> idx;
    for (const auto& item : split_list(indices)) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != item.size() || v < 1)
        throw Error(ErrorKind::InvalidArgument, "bad index '" + item + "' (1-based)");
      idx.push_back(static_cast<std::size_t>(v - 1));
    }
    result = DirectSumAlgebra({corner_by_indices(a, idx)});
  }
  const Verdict v = is_realizable_sum(result);
  if (ctx.json_mode) {
    json summands = json::array();
    for (const auto& s : result.summands) summands.push_back(to_json(s));
    ctx.out << json{{"corner", to_string(result)}, {"summands", summands},
                    {"verdict", to_json(v)}}
                   .dump(2)
            << '\n';
  } else {
    ctx.out << to_string(result) << '\n'
            << "realizable: " << (v ? "yes" : "no") << '\n';
    if (!v) ctx.out << "note: " << verdict_reason(v) << '\n';
  }
  return kSuccess;
}

int cmd_emit_dot(Context& ctx, const std::string& path) {
  ctx.out << to_dot(load_graph(path));
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded matrix algebras and Leavitt path algebras of no-exit graphs",
               "gradlpa"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "Emit a single JSON object");

  std::string graph_path, expr1, expr2, cert_path, out_file, vertices, indices;
  std::vector<std::string> bases;
  bool provenance = false, certificate = false, dot = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a graph file");
  classify_cmd->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required();

  auto* represent_cmd =
      app.add_subcommand("represent", "Graded matricial representation of L_K(E)");
  represent_cmd->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required();
  represent_cmd->add_option("--base", bases, "Base vertex per cycle: <cycle-vertex>=<vertex>");
  represent_cmd->add_flag("--provenance", provenance, "List the paths behind each shift");

  auto* canonical_cmd = app.add_subcommand("canonical", "Canonical representatives");
  canonical_cmd->add_option("expr", expr1, "Algebra expression")->required();

  auto* iso_cmd = app.add_subcommand("iso", "Decide graded isomorphism");
  iso_cmd->add_option("expr1", expr1)->required();
  iso_cmd->add_option("expr2", expr2)->required();
  iso_cmd->add_flag("--certificate", certificate, "Print the certificate in file format");

  auto* verify_cmd = app.add_subcommand("verify-cert", "Check a certificate file");
  verify_cmd->add_option("expr1", expr1)->required();
  verify_cmd->add_option("expr2", expr2)->required();
  verify_cmd->add_option("cert", cert_path, "Certificate file ('-' for stdin)")->required();

  auto* realizable_cmd = app.add_subcommand("realizable", "Decide realizability");
  realizable_cmd->add_option("expr", expr1)->required();

  auto* synth_cmd = app.add_subcommand("synthesize", "Build a witness graph");
  synth_cmd->add_option("expr", expr1)->required();
  synth_cmd->add_flag("--dot", dot, "Emit DOT instead of the graph format");
  synth_cmd->add_option("-o,--output", out_file, "Write the graph to a file");

  auto* corner_cmd = app.add_subcommand("corner", "Graded corner");
  corner_cmd->add_option("input", graph_path, "Graph file, or expression with --indices")
      ->required();
  corner_cmd->add_option("--vertices", vertices, "Comma-separated vertex ids");
  corner_cmd->add_option("--indices", indices, "Comma-separated 1-based indices");

  auto* dot_cmd = app.add_subcommand("emit-dot", "Print a graph file as DOT");
  dot_cmd->add_option("graph", graph_path)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  Context ctx{out, err, json_mode};
  try {
    if (*classify_cmd) return cmd_classify(ctx, graph_path);
    if (*represent_cmd) return cmd_represent(ctx, graph_path, bases, provenance);
    if (*canonical_cmd) return cmd_canonical(ctx, expr1);
    if (*iso_cmd) return cmd_iso(ctx, expr1, expr2, certificate);
    if (*verify_cmd) return cmd_verify_cert(ctx, expr1, expr2, cert_path);
    if (*realizable_cmd) return cmd_realizable(ctx, expr1);
    if (*synth_cmd) return cmd_synthesize(ctx, expr1, dot, out_file);
    if (*corner_cmd) return cmd_corner(ctx, graph_path, vertices, indices);
    if (*dot_cmd) return cmd_emit_dot(ctx, graph_path);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kInputError;
}

}  // namespace gradlpa::cli
