#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partlat/congruence.hpp"

namespace partlat {

/// Text form of a poset or a partial lattice.
///
///     poset                     plattice
///     elements a b c            elements a b c
///     rel a<c                   join a c = c
///                               meet a c = a
///
/// Names match [A-Za-z0-9_]+. `rel` lines are strict relations whose
/// reflexive-transitive closure is taken. Plattice diagonals are implied,
/// cells are mirrored, unlisted cells are undefined. `#` starts a comment.
struct Document {
  enum class Kind { poset, plattice };
  struct Cell {
    Operation op = Operation::join;
    std::string x, y, z;
    friend bool operator==(const Cell&, const Cell&) = default;
  };

  Kind kind = Kind::poset;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> relations;
  std::vector<Cell> cells;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Malformed text; line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string expected);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

/// Well-formed text that names unknown, duplicate or reserved elements or
/// repeats a cell.
class SemanticError : public Error {
 public:
  SemanticError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Document parse_document(std::string_view text);
std::string print_document(const Document& doc);

/// Cover relations only.
Document to_document(const Poset& p);
/// Off-diagonal defined cells with x before y in carrier order.
Document to_document(const PartialLattice& l);

/// Posets via make_poset; plattices via their induced order.
Poset to_poset(const Document& doc);
/// Plattices via validate_partial_lattice; posets via from_plos.
PartialLattice to_partial_lattice(const Document& doc);

/// `|`-separated blocks of space-separated labels; unlisted elements become
/// singletons. Errors are reported on line 1.
Partition parse_partition(std::string_view text, const std::vector<std::string>& labels);
std::string format_partition(const Partition& p, const std::vector<std::string>& labels);

}  // namespace partlat
