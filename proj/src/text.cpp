#include "gradlpa/text.hpp"

#include <cctype>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "gradlpa/error.hpp"

namespace gradlpa {

namespace {

// Largest matrix size accepted from text; keeps d(γ) expansion bounded.
constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 24;

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s[0])) return false;
  for (char c : s)
    if (!ident_char(c)) return false;
  return true;
}

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize_graph_line(std::string_view line, std::size_t lineno) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (ident_start(c)) {
      const std::size_t start = i;
      while (i < line.size() && ident_char(line[i])) ++i;
      tokens.push_back({std::string(line.substr(start, i - start)), start + 1});
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      tokens.push_back({"->", i + 1});
      i += 2;
    } else if (c == '[' || c == ']') {
      tokens.push_back({std::string(1, c), i + 1});
      ++i;
    } else {
      throw ParseError(lineno, i + 1, std::string("unexpected character '") + c + "'");
    }
  }
  return tokens;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

// Recursive-descent cursor over an algebra expression.
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  DirectSumAlgebra parse_sum() {
    std::vector<ShiftedMatrixAlgebra> summands;
    summands.push_back(parse_summand());
    while (true) {
      skip_ws();
      if (at_end()) break;
      expect("(+)");
      summands.push_back(parse_summand());
    }
    return DirectSumAlgebra(std::move(summands));
  }

 private:
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, col_, message);
  }
  [[noreturn]] void fail_at(std::size_t line, std::size_t col,
                            const std::string& message) const {
    throw ParseError(line, col, message);
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  // Matches `word` character by character, whitespace allowed in between.
  void expect(std::string_view word) {
    for (char c : word) {
      if (peek() != c) {
        if (pos_ >= text_.size()) fail("expected '" + std::string(word) + "', got end of input");
        fail("expected '" + std::string(word) + "'");
      }
      advance();
    }
  }

  std::uint64_t parse_nat() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a natural number");
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::uint64_t{1} << 40)) fail("number too large");
      advance();
    }
    return value;
  }

  Shift parse_int() {
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    const std::size_t line = line_, col = col_;
    const std::uint64_t magnitude = parse_nat();
    if (magnitude > static_cast<std::uint64_t>(kMaxAbsShift))
      fail_at(line, col, "shift exceeds 2^31 in absolute value");
    const Shift v = static_cast<Shift>(magnitude);
    return negative ? -v : v;
  }

  GradedBase parse_base() {
    expect("K");
    if (!accept('[')) return GradedBase::trivial();
    expect("x");
    expect("^");
    const std::size_t line = line_, col = col_;
    const std::uint64_t m = parse_nat();
    if (m == 0) fail_at(line, col, "period m must be positive");
    if (m > static_cast<std::uint64_t>(kMaxAbsShift)) fail_at(line, col, "period too large");
    expect("]");
    return GradedBase::laurent(static_cast<Shift>(m));
  }

  ShiftedMatrixAlgebra parse_summand() {
    skip_ws();
    const std::size_t line = line_, col = col_;
    expect("M");
    const std::size_t nline = line_, ncol = col_;
    const std::uint64_t n = parse_nat();
    if (n == 0) fail_at(nline, ncol, "matrix size must be positive");
    if (n > kMaxSize) fail_at(nline, ncol, "matrix size too large");
    expect("(");
    const GradedBase base = parse_base();
    expect(")");
    expect("(");
    std::vector<Shift> shifts;
    // counted separately so oversized lists are reported without expanding them
    std::uint64_t count = 0;
    do {
      const std::size_t iline = line_, icol = col_;
      const bool signed_item = peek() == '-' || peek() == '+';
      Shift first = parse_int();
      if (!signed_item && accept('(')) {
        const Shift value = parse_int();
        expect(")");
        if (first == 0) fail_at(iline, icol, "multiplicity must be positive");
        count += static_cast<std::uint64_t>(first);
        if (count <= n) shifts.insert(shifts.end(), static_cast<std::size_t>(first), value);
      } else {
        if (++count <= n) shifts.push_back(first);
      }
    } while (accept(','));
    expect(")");
    if (count != n)
      fail_at(line, col, std::to_string(count) + " shifts for n=" + std::to_string(n));
    return {base, std::move(shifts)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

bool needs_quotes(const std::string& id) { return !is_identifier(id); }

std::string dot_id(const std::string& id) {
  if (!needs_quotes(id)) return id;
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

DirectedGraph parse_graph(std::string_view text) {
  struct PendingEdge {
    std::optional<std::string> id;
    std::string source, range;
    std::size_t line, column;
  };
  std::vector<std::string> vertices;
  std::unordered_set<std::string> known, declared;
  std::vector<PendingEdge> pending;
  std::unordered_map<std::string, std::pair<std::size_t, std::size_t>> explicit_ids;

  auto touch = [&](const std::string& v) {
    if (known.insert(v).second) vertices.push_back(v);
  };

  const auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t lineno = ln + 1;
    const auto tokens = tokenize_graph_line(lines[ln], lineno);
    if (tokens.empty()) continue;
    if (tokens.size() >= 2 && tokens[1].text == "->") {
      if (!is_identifier(tokens[0].text))
        throw ParseError(lineno, tokens[0].column, "expected a vertex id");
      if (tokens.size() < 3 || !is_identifier(tokens[2].text))
        throw ParseError(lineno, tokens.size() < 3 ? lines[ln].size() + 1 : tokens[2].column,
                         "expected a target vertex id after '->'");
      std::optional<std::string> id;
      std::size_t next = 3;
      if (next < tokens.size()) {
        const bool bracketed = tokens[next].text == "[";
        if (bracketed) ++next;
        if (next >= tokens.size() || !is_identifier(tokens[next].text))
          throw ParseError(lineno, next < tokens.size() ? tokens[next].column : lines[ln].size() + 1,
                           "expected an edge id");
        id = tokens[next].text;
        ++next;
        if (bracketed) {
          if (next >= tokens.size() || tokens[next].text != "]")
            throw ParseError(lineno, lines[ln].size() + 1, "expected ']'");
          ++next;
        }
        if (next < tokens.size())
          throw ParseError(lineno, tokens[next].column, "unexpected '" + tokens[next].text + "'");
        if (!explicit_ids.emplace(*id, std::pair{lineno, tokens[3].column}).second)
          throw ParseError(lineno, tokens[3].column, "duplicate edge id '" + *id + "'");
      }
      touch(tokens[0].text);
      touch(tokens[2].text);
      pending.push_back({id, tokens[0].text, tokens[2].text, lineno, tokens[0].column});
    } else if (tokens[0].text == "vertex") {
      if (tokens.size() != 2 || !is_identifier(tokens[1].text))
        throw ParseError(lineno, tokens.size() > 1 ? tokens[1].column : lines[ln].size() + 1,
                         "expected 'vertex <id>'");
      if (!declared.insert(tokens[1].text).second)
        throw ParseError(lineno, tokens[1].column,
                         "duplicate vertex declaration '" + tokens[1].text + "'");
      touch(tokens[1].text);
    } else {
      throw ParseError(lineno, tokens[0].column,
                       "expected 'vertex <id>' or '<src> -> <dst> [<edge-id>]'");
    }
  }

  std::vector<Edge> edges;
  edges.reserve(pending.size());
  for (std::size_t k = 0; k < pending.size(); ++k) {
    auto& p = pending[k];
    std::string id = p.id ? *p.id : "e" + std::to_string(k + 1);
    if (!p.id && explicit_ids.count(id))
      throw ParseError(p.line, p.column,
                       "generated edge id '" + id + "' collides with an explicit id");
    edges.push_back({std::move(id), std::move(p.source), std::move(p.range)});
  }
  return {std::move(vertices), std::move(edges)};
}

std::string print_graph(const DirectedGraph& g) {
  std::ostringstream os;
  for (const auto& v : g.vertices()) os << "vertex " << v << '\n';
  for (const auto& e : g.edges()) os << e.source << " -> " << e.range << ' ' << e.id << '\n';
  return os.str();
}

std::string to_dot(const DirectedGraph& g) {
  std::ostringstream os;
  os << "digraph {\n";
  for (const auto& v : g.vertices()) os << "  " << dot_id(v) << ";\n";
  for (const auto& e : g.edges())
    os << "  " << dot_id(e.source) << " -> " << dot_id(e.range) << " [label="
       << dot_id(e.id) << "];\n";
  os << "}\n";
  return os.str();
}

DirectSumAlgebra parse_algebra(std::string_view text) {
  return ExprParser(text).parse_sum();
}

ShiftedMatrixAlgebra parse_matrix_algebra(std::string_view text) {
  DirectSumAlgebra sum = parse_algebra(text);
  if (sum.summands.size() != 1)
    throw Error(ErrorKind::InvalidArgument,
                "expected a single matrix algebra, got a direct sum of " +
                    std::to_string(sum.summands.size()));
  return std::move(sum.summands.front());
}

IsoCertificate parse_certificate(std::string_view text) {
  IsoCertificate cert;
  const auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::istringstream is{std::string(lines[ln])};
    std::string op;
    if (!(is >> op)) continue;
    auto read_int = [&](const char* what) {
      long long v;
      if (!(is >> v)) throw ParseError(ln + 1, 1, std::string("expected ") + what);
      return static_cast<Shift>(v);
    };
    if (op == "G") {
      cert.push_back(GlobalShift{read_int("a shift")});
    } else if (op == "E") {
      const Shift index = read_int("an index");
      const Shift delta = read_int("a shift");
      if (index < 1) throw ParseError(ln + 1, 1, "indices are 1-based");
      cert.push_back(EntryShift{static_cast<std::size_t>(index - 1), delta});
    } else if (op == "P") {
      Permute p;
      long long v;
      while (is >> v) {
        if (v < 1) throw ParseError(ln + 1, 1, "indices are 1-based");
        p.image.push_back(static_cast<std::size_t>(v - 1));
      }
      if (p.image.empty()) throw ParseError(ln + 1, 1, "empty permutation");
      cert.push_back(std::move(p));
      continue;
    } else {
      throw ParseError(ln + 1, 1, "unknown step '" + op + "', expected P, G or E");
    }
    std::string extra;
    if (is >> extra) throw ParseError(ln + 1, 1, "trailing input '" + extra + "'");
  }
  return cert;
}

std::string print_certificate(const IsoCertificate& cert) {
  std::ostringstream os;
  for (const auto& step : cert) {
    if (const auto* p = std::get_if<Permute>(&step)) {
      os << 'P';
      for (std::size_t i : p->image) os << ' ' << i + 1;
    } else if (const auto* g = std::get_if<GlobalShift>(&step)) {
      os << "G " << g->delta;
    } else {
      const auto& e = std::get<EntryShift>(step);
      os << "E " << e.index + 1 << ' ' << e.delta;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace gradlpa
