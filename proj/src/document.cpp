#include "partlat/document.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace partlat {

SyntaxError::SyntaxError(std::size_t line, std::size_t column, std::string expected)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": expected " + expected),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

SemanticError::SemanticError(std::size_t line, std::size_t column, const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool is_name_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Cursor over one line (comment already stripped).
class LineReader {
 public:
  LineReader(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  /// Next non-space character, or '\0' at end of line.
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t column() const { return pos_ + 1; }
  std::size_t line() const { return line_; }

  /// A name token; reserved names are a semantic error.
  std::pair<std::string, std::size_t> name() {
    skip_space();
    const std::size_t col = column();
    auto rest = text_.substr(pos_);
    for (auto reserved : {kBottomLabel, kTopLabel}) {
      if (rest.starts_with(reserved)) {
        throw SemanticError(line_, col, "reserved name '" + std::string(reserved) + "'");
      }
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (pos_ == start) throw SyntaxError(line_, col, "element name");
    return {std::string(text_.substr(start, pos_ - start)), col};
  }

  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void expect(char c, const char* what) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) throw SyntaxError(line_, column(), what);
    ++pos_;
  }

  void expect_end() {
    if (!at_end()) throw SyntaxError(line_, column(), "end of line");
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (true) {
    ++number;
    const auto nl = text.find('\n', start);
    auto line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!std::all_of(line.begin(), line.end(), is_space)) out.emplace_back(number, line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return out;
}

}  // namespace

Document parse_document(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw SyntaxError(1, 1, "'poset' or 'plattice'");

  Document doc;
  {
    LineReader r(lines[0].second, lines[0].first);
    r.skip_space();
    const auto col = r.column();
    const auto kw = r.word();
    if (kw == "poset") doc.kind = Document::Kind::poset;
    else if (kw == "plattice") doc.kind = Document::Kind::plattice;
    else throw SyntaxError(r.line(), col, "'poset' or 'plattice'");
    r.expect_end();
  }

  if (lines.size() < 2) {
    const auto last = lines[0].first;
    throw SyntaxError(last + 1, 1, "'elements'");
  }
  {
    LineReader r(lines[1].second, lines[1].first);
    r.skip_space();
    const auto col = r.column();
    if (r.word() != "elements") throw SyntaxError(r.line(), col, "'elements'");
    std::set<std::string> seen;
    do {
      auto [name, name_col] = r.name();
      if (!seen.insert(name).second) {
        throw SemanticError(r.line(), name_col, "duplicate element '" + name + "'");
      }
      doc.labels.push_back(std::move(name));
    } while (!r.at_end());
  }

  auto known = [&](const std::string& name, const LineReader& r, std::size_t col) {
    if (std::find(doc.labels.begin(), doc.labels.end(), name) == doc.labels.end()) {
      throw SemanticError(r.line(), col, "unknown element '" + name + "'");
    }
  };

  std::set<std::tuple<Operation, std::string, std::string>> cells_seen;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    LineReader r(lines[i].second, lines[i].first);
    r.skip_space();
    const auto col = r.column();
    const auto kw = r.word();
    if (doc.kind == Document::Kind::poset) {
      if (kw != "rel") throw SyntaxError(r.line(), col, "'rel'");
      auto [lo, lo_col] = r.name();
      r.expect('<', "'<'");
      auto [hi, hi_col] = r.name();
      r.expect_end();
      known(lo, r, lo_col);
      known(hi, r, hi_col);
      doc.relations.emplace_back(std::move(lo), std::move(hi));
      continue;
    }
    Document::Cell cell;
    if (kw == "join") cell.op = Operation::join;
    else if (kw == "meet") cell.op = Operation::meet;
    else throw SyntaxError(r.line(), col, "'join' or 'meet'");
    auto [x, x_col] = r.name();
    auto [y, y_col] = r.name();
    r.expect('=', "'='");
    auto [z, z_col] = r.name();
    r.expect_end();
    known(x, r, x_col);
    known(y, r, y_col);
    known(z, r, z_col);
    if (x == y && z != x) {
      throw SemanticError(r.line(), z_col, "diagonal cell must be " + x + ", got " + z);
    }
    auto key = std::make_tuple(cell.op, std::min(x, y), std::max(x, y));
    if (!cells_seen.insert(key).second) {
      throw SemanticError(r.line(), col, std::string("duplicate cell ") + to_string(cell.op) +
                                             " " + x + " " + y);
    }
    cell.x = std::move(x);
    cell.y = std::move(y);
    cell.z = std::move(z);
    doc.cells.push_back(std::move(cell));
  }
  return doc;
}

std::string print_document(const Document& doc) {
  std::string out = doc.kind == Document::Kind::poset ? "poset\n" : "plattice\n";
  out += "elements";
  for (const auto& l : doc.labels) out += " " + l;
  out += "\n";
  for (const auto& [lo, hi] : doc.relations) out += "rel " + lo + "<" + hi + "\n";
  for (const auto& c : doc.cells) {
    out += std::string(to_string(c.op)) + " " + c.x + " " + c.y + " = " + c.z + "\n";
  }
  return out;
}

Document to_document(const Poset& p) {
  Document doc;
  doc.kind = Document::Kind::poset;
  doc.labels = p.labels();
  for (auto [lo, hi] : covers(p)) doc.relations.emplace_back(p.label(lo), p.label(hi));
  return doc;
}

Document to_document(const PartialLattice& l) {
  Document doc;
  doc.kind = Document::Kind::plattice;
  doc.labels = l.labels();
  for (Operation op : {Operation::join, Operation::meet}) {
    for (Elem a = 0; a < l.size(); ++a) {
      for (Elem b = a + 1; b < l.size(); ++b) {
        if (auto v = l.apply(op, a, b)) doc.cells.push_back({op, l.label(a), l.label(b), l.label(*v)});
      }
    }
  }
  return doc;
}

Poset to_poset(const Document& doc) {
  if (doc.kind == Document::Kind::poset) return make_poset(doc.labels, doc.relations);
  return induced_order(to_partial_lattice(doc));
}

PartialLattice to_partial_lattice(const Document& doc) {
  if (doc.kind == Document::Kind::poset) return from_plos(make_poset(doc.labels, doc.relations));
  const std::size_t n = doc.labels.size();
  auto index = [&](const std::string& name) -> Elem {
    auto it = std::find(doc.labels.begin(), doc.labels.end(), name);
    if (it == doc.labels.end()) throw UnknownLabel(name);
    return static_cast<Elem>(it - doc.labels.begin());
  };
  OpTable join(n * n);
  OpTable meet(n * n);
  for (Elem x = 0; x < n; ++x) join[x * n + x] = meet[x * n + x] = x;
  for (const auto& c : doc.cells) {
    auto& table = c.op == Operation::join ? join : meet;
    const Elem x = index(c.x);
    const Elem y = index(c.y);
    table[x * n + y] = table[y * n + x] = index(c.z);
  }
  return validate_partial_lattice(doc.labels, std::move(join), std::move(meet));
}

Partition parse_partition(std::string_view text, const std::vector<std::string>& labels) {
  std::vector<std::vector<Elem>> blocks(1);
  std::vector<bool> listed(labels.size(), false);
  LineReader r(text, 1);
  while (!r.at_end()) {
    if (r.peek() == '|') {
      r.expect('|', "'|'");
      blocks.emplace_back();
      continue;
    }
    auto [name, col] = r.name();
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw SemanticError(1, col, "unknown element '" + name + "'");
    const auto x = static_cast<Elem>(it - labels.begin());
    if (listed[x]) throw SemanticError(1, col, "element '" + name + "' listed twice");
    listed[x] = true;
    blocks.back().push_back(x);
  }
  return Partition::from_blocks(labels.size(), blocks);
}

std::string format_partition(const Partition& p, const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& block : p.blocks()) {
    if (!out.empty()) out += "|";
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i != 0) out += " ";
      out += labels.at(block[i]);
    }
  }
  return out;
}

}  // namespace partlat
