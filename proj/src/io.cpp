#include "qbforge/io.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "qbforge/forge.hpp"
#include "qbforge/types.hpp"

namespace qbforge {
namespace {

const char* const kKeywords[] = {"algebra", "elements", "leq",   "to",
                                 "lto",     "mul",      "unit",  "bottom",
                                 "class",   "end"};

bool is_keyword(const std::string& tok) {
  for (const char* k : kKeywords)
    if (tok == k) return true;
  return false;
}

// empty string when the token is usable as a name or a label
std::string token_objection(const std::string& tok) {
  if (tok.empty()) return "empty token";
  if (is_keyword(tok)) return "'" + tok + "' is a format keyword";
  for (char c : tok)
    if (c == '#' || std::isspace(static_cast<unsigned char>(c)))
      return "'" + tok + "' has reserved characters";
  return "";
}

struct Line {
  int number;
  std::vector<std::string> toks;
};

// comment-stripped, tokenized, blank lines dropped
std::vector<Line> scan(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  for (int number = 1; std::getline(in, raw); ++number) {
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.resize(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    for (std::string tok; ls >> tok;) line.toks.push_back(tok);
    if (!line.toks.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error("parse", "line " + std::to_string(line) + ": " + what);
}

struct BlockParser {
  const std::vector<Line>& lines;
  std::size_t& at;

  const Line& peek() const { return lines[at]; }
  bool more() const { return at < lines.size(); }

  const Line& next(const std::string& want) {
    if (!more())
      throw Error("parse", "unexpected end of input, wanted " + want);
    return lines[at++];
  }

  int resolve(const std::map<std::string, int>& index,
              const std::string& tok, int line) const {
    auto it = index.find(tok);
    if (it == index.end()) fail(line, "unknown label '" + tok + "'");
    return it->second;
  }

  // n lines of n label tokens
  std::vector<int> label_matrix(const std::string& field, int n,
                                const std::map<std::string, int>& index) {
    std::vector<int> m(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
      const Line& row = next("a row of " + field);
      if (static_cast<int>(row.toks.size()) != n)
        fail(row.number, field + " row " + std::to_string(x) + " wants " +
                             std::to_string(n) + " entries, found " +
                             std::to_string(row.toks.size()));
      for (int y = 0; y < n; ++y)
        m[x * n + y] = resolve(index, row.toks[y], row.number);
    }
    return m;
  }

  std::vector<int> leq_matrix(int n) {
    std::vector<int> m(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
      const Line& row = next("a row of leq");
      if (static_cast<int>(row.toks.size()) != n)
        fail(row.number, "leq row " + std::to_string(x) + " wants " +
                             std::to_string(n) + " entries, found " +
                             std::to_string(row.toks.size()));
      for (int y = 0; y < n; ++y) {
        const std::string& tok = row.toks[y];
        if (tok != "0" && tok != "1")
          fail(row.number, "leq entries are 0 or 1, found '" + tok + "'");
        m[x * n + y] = tok == "1";
      }
    }
    return m;
  }

  // two-label lines until the next keyword line, then the reflexive
  // transitive closure; antisymmetry is create()'s problem
  std::vector<int> leq_pairs(int n, const std::map<std::string, int>& index) {
    std::vector<int> m(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x) m[x * n + x] = 1;
    while (more() && !is_keyword(peek().toks[0])) {
      const Line& row = next("a pair");
      if (row.toks.size() != 2)
        fail(row.number, "a leq pair wants two labels, found " +
                             std::to_string(row.toks.size()));
      int x = resolve(index, row.toks[0], row.number);
      int y = resolve(index, row.toks[1], row.number);
      m[x * n + y] = 1;
    }
    for (int k = 0; k < n; ++k)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (m[x * n + k] && m[k * n + y]) m[x * n + y] = 1;
    return m;
  }

  FiniteAlgebra run() {
    const Line& head = next("'algebra <name>'");
    if (head.toks[0] != "algebra" || head.toks.size() != 2)
      fail(head.number, "a block opens with 'algebra <name>'");
    FiniteAlgebra::Data d;
    d.name = head.toks[1];
    if (auto why = token_objection(d.name); !why.empty())
      fail(head.number, "bad algebra name: " + why);

    std::map<std::string, int> index;
    std::optional<std::string> declared_class;
    bool saw_end = false;
    std::vector<std::string> seen;

    auto once = [&](const std::string& field, int line) {
      for (const auto& s : seen)
        if (s == field) fail(line, "duplicate field '" + field + "'");
      seen.push_back(field);
    };
    auto need_elements = [&](const std::string& field, int line) {
      if (d.labels.empty())
        fail(line, "'" + field + "' before 'elements'");
      return static_cast<int>(d.labels.size());
    };

    while (!saw_end) {
      const Line& line = next("'end'");
      const std::string& key = line.toks[0];
      if (!is_keyword(key)) fail(line.number, "unknown field '" + key + "'");
      if (key == "algebra")
        fail(line.number, "'algebra' inside a block, missing 'end'?");
      once(key, line.number);

      if (key == "elements") {
        if (line.toks.size() < 2)
          fail(line.number, "'elements' wants at least one label");
        for (std::size_t i = 1; i < line.toks.size(); ++i) {
          const std::string& lab = line.toks[i];
          if (auto why = token_objection(lab); !why.empty())
            fail(line.number, "bad label: " + why);
          if (!index.emplace(lab, static_cast<int>(d.labels.size())).second)
            fail(line.number, "duplicate label '" + lab + "'");
          d.labels.push_back(lab);
        }
      } else if (key == "leq") {
        int n = need_elements(key, line.number);
        if (line.toks.size() == 2 && line.toks[1] == "pairs")
          d.leq = leq_pairs(n, index);
        else if (line.toks.size() == 1)
          d.leq = leq_matrix(n);
        else
          fail(line.number, "'leq' stands alone or reads 'leq pairs'");
      } else if (key == "to" || key == "lto" || key == "mul") {
        int n = need_elements(key, line.number);
        if (line.toks.size() != 1)
          fail(line.number, "'" + key + "' stands alone before its matrix");
        auto m = label_matrix(key, n, index);
        if (key == "to")
          d.to = std::move(m);
        else if (key == "lto")
          d.lto = std::move(m);
        else
          d.mul = std::move(m);
      } else if (key == "unit" || key == "bottom") {
        need_elements(key, line.number);
        if (line.toks.size() != 2)
          fail(line.number, "'" + key + "' wants one label");
        int e = resolve(index, line.toks[1], line.number);
        (key == "unit" ? d.unit : d.bottom) = e;
      } else if (key == "class") {
        if (line.toks.size() != 2)
          fail(line.number, "'class' wants one class name");
        declared_class = line.toks[1];
      } else {  // end
        if (line.toks.size() != 1)
          fail(line.number, "'end' stands alone");
        saw_end = true;
      }
    }

    for (const char* field : {"elements", "leq", "to", "lto"}) {
      bool have = false;
      for (const auto& s : seen) have = have || s == field;
      if (!have)
        throw Error("parse",
                    d.name + ": missing field '" + std::string(field) + "'");
    }

    FiniteAlgebra a = FiniteAlgebra::create(std::move(d));
    if (declared_class) {
      TargetClass klass = class_by_name(*declared_class);
      if (!in_class(klass, a))
        throw Error("class_mismatch",
                    a.name() + " does not satisfy " + *declared_class);
    }
    return a;
  }
};

void matrix_rows(std::ostringstream& out, const FiniteAlgebra& a,
                 const std::vector<int>& table) {
  const int n = a.size();
  for (int x = 0; x < n; ++x) {
    out << " ";
    for (int y = 0; y < n; ++y) out << ' ' << a.label(table[x * n + y]);
    out << '\n';
  }
}

}  // namespace

std::string serialize_algebra(const FiniteAlgebra& a) {
  if (auto why = token_objection(a.name()); !why.empty())
    throw Error("precondition", "unserializable algebra name: " + why);
  for (const auto& lab : a.labels())
    if (auto why = token_objection(lab); !why.empty())
      throw Error("precondition", "unserializable label: " + why);

  std::ostringstream out;
  out << "algebra " << a.name() << '\n';
  out << "elements";
  for (const auto& lab : a.labels()) out << ' ' << lab;
  out << '\n';
  const int n = a.size();
  out << "leq\n";
  for (int x = 0; x < n; ++x) {
    out << " ";
    for (int y = 0; y < n; ++y) out << ' ' << (a.leq(x, y) ? 1 : 0);
    out << '\n';
  }
  out << "to\n";
  matrix_rows(out, a, a.data().to);
  out << "lto\n";
  matrix_rows(out, a, a.data().lto);
  if (a.has_mul()) {
    out << "mul\n";
    matrix_rows(out, a, *a.data().mul);
  }
  if (a.data().unit) out << "unit " << a.label(*a.data().unit) << '\n';
  if (a.data().bottom) out << "bottom " << a.label(*a.data().bottom) << '\n';
  out << "end\n";
  return out.str();
}

FiniteAlgebra ingest_algebra(const std::string& text) {
  auto lines = scan(text);
  std::size_t at = 0;
  FiniteAlgebra a = BlockParser{lines, at}.run();
  if (at < lines.size())
    fail(lines[at].number, "trailing content after 'end'");
  return a;
}

std::vector<FiniteAlgebra> ingest_algebras(const std::string& text) {
  auto lines = scan(text);
  if (lines.empty()) throw Error("parse", "no algebra blocks in the input");
  std::vector<FiniteAlgebra> out;
  std::size_t at = 0;
  while (at < lines.size()) out.push_back(BlockParser{lines, at}.run());
  return out;
}

}  // namespace qbforge
