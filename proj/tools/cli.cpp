#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "partlat/document.hpp"
#include "partlat/dot.hpp"
#include "partlat/fixtures.hpp"
#include "partlat/morphism.hpp"
#include "partlat/verify.hpp"

namespace partlat {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Input that could not be read or parsed; reported with exit code 2.
struct InputError {
  std::string message;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError{path + ": cannot open file"};
  buf << file.rdbuf();
  return buf.str();
}

Document load(const std::string& path, std::istream& in) {
  const auto text = read_input(path, in);
  try {
    return parse_document(text);
  } catch (const SyntaxError& e) {
    throw InputError{path + ":" + e.what()};
  } catch (const SemanticError& e) {
    throw InputError{path + ":" + e.what()};
  }
}

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width - std::min(width, display_width(s)), ' ');
}

std::string format_table(const PartialLattice& l, Operation op) {
  std::size_t w = 1;
  for (const auto& label : l.labels()) w = std::max(w, display_width(label));
  w = std::max(w, display_width(to_string(op)));
  std::string out = pad(to_string(op), w) + " |";
  for (const auto& label : l.labels()) out += " " + pad(label, w);
  out += "\n" + std::string(w + 1, '-') + "+" + std::string(l.size() * (w + 1), '-') + "\n";
  for (Elem a = 0; a < l.size(); ++a) {
    out += pad(l.label(a), w) + " |";
    for (Elem b = 0; b < l.size(); ++b) {
      const auto v = l.apply(op, a, b);
      out += " " + pad(v ? l.label(*v) : "-", w);
    }
    out += "\n";
  }
  return out;
}

std::string trim_lines(const std::string& text) {
  std::string out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string::npos) nl = text.size();
    auto line = text.substr(start, nl - start);
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
    start = nl + 1;
  }
  return out;
}

std::string format_tables(const PartialLattice& l) {
  return trim_lines(format_table(l, Operation::join) + "\n" + format_table(l, Operation::meet));
}

std::string format_order(const Poset& p) {
  std::string out = "elements:";
  for (const auto& label : p.labels()) out += " " + label;
  out += "\ncovers:";
  for (auto [lo, hi] : covers(p)) out += " " + p.label(lo) + "<" + p.label(hi);
  return out + "\n";
}

int cmd_validate(const Document& doc, std::ostream& out) {
  if (doc.kind == Document::Kind::poset) {
    const auto p = to_poset(doc);
    const auto report = check_plos(p);
    if (!report.ok) {
      out << "not partially lattice-ordered: ";
      std::string set;
      for (Elem x : report.bound_set) set += (set.empty() ? "" : ",") + p.label(x);
      const bool upper = report.failure == PlosReport::Failure::upper;
      out << (upper ? "U(" : "L(") << p.label(report.witness.first) << ","
          << p.label(report.witness.second) << ") = {" << set << "} has no "
          << (upper ? "least" : "greatest") << " element\n";
      return kFailed;
    }
  }
  const auto l = to_partial_lattice(doc);
  out << "partial lattice on " << l.size() << " elements, " << to_string(classify_totality(l))
      << "\n";
  return kOk;
}

int cmd_order(const Document& doc, bool dot, std::ostream& out) {
  const auto l = to_partial_lattice(doc);
  const auto p = induced_order(l);
  out << (dot ? emit_dot(p) : format_order(p));
  return kOk;
}

std::string added_note(const Extension& x) {
  std::vector<std::string> parts;
  if (x.added_bottom) parts.emplace_back(kBottomLabel);
  if (x.added_top) parts.emplace_back(kTopLabel);
  if (parts.empty()) return "added nothing (already a lattice)";
  std::string out = "added";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i == 0 ? " " : ", ") + parts[i];
  return out;
}

int cmd_extend(const Document& doc, bool dot, std::ostream& out, std::ostream& err) {
  const auto x = two_point_extension(to_partial_lattice(doc));
  if (dot) {
    out << emit_dot(x.star, "star");
    err << added_note(x) << "\n";
  } else {
    out << added_note(x) << "\n" << format_order(x.star.poset()) << "\n"
        << format_tables(to_partial(x.star));
  }
  return kOk;
}

int cmd_onepoint(const Document& doc, std::ostream& out) {
  const auto a = one_point_extension(to_partial_lattice(doc));
  const auto n = a.size();
  std::ostringstream tables;
  if (!a.fresh) out << "operations already total; algebra unchanged\n";
  for (const auto& [name, table] : {std::pair{"join", &a.join}, std::pair{"meet", &a.meet}}) {
    std::size_t w = 4;
    for (const auto& label : a.labels) w = std::max(w, display_width(label));
    tables << pad(name, w) << " |";
    for (const auto& label : a.labels) tables << " " << pad(label, w);
    tables << "\n";
    for (Elem x = 0; x < n; ++x) {
      tables << pad(a.labels[x], w) << " |";
      for (Elem y = 0; y < n; ++y) tables << " " << pad(a.labels[(*table)[x * n + y]], w);
      tables << "\n";
    }
    tables << "\n";
  }
  out << trim_lines(tables.str());
  if (auto failure = a.validation_failure()) {
    out << "not a partial lattice: " << failure->what() << "\n";
  } else {
    out << "validates as a partial lattice\n";
  }
  return kOk;
}

int cmd_congruences(const Document& doc, std::ostream& out) {
  const auto l = to_partial_lattice(doc);
  const auto all = all_partial_congruences(l);
  for (const auto& e : all) out << format_partition(e, l.labels()) << "\n";
  out << all.size() << " congruences\n";
  return kOk;
}

Partition load_classes(const std::string& text, const PartialLattice& l) {
  try {
    return parse_partition(text, l.labels());
  } catch (const SyntaxError& e) {
    throw InputError{std::string("--classes:") + e.what()};
  } catch (const SemanticError& e) {
    throw InputError{std::string("--classes:") + e.what()};
  }
}

int cmd_quotient(const Document& doc, const std::string& classes, bool dot, std::ostream& out) {
  const auto l = to_partial_lattice(doc);
  const auto e = load_classes(classes, l);
  const auto w = check_partial_congruence(l, e);
  const auto x = two_point_extension(l);
  if (!w.is_congruence) {
    out << "not a congruence: Θ(E) = " << format_partition(w.theta, x.star.poset().labels())
        << " restricts to " << format_partition(w.restriction, l.labels()) << "\n";
    return kFailed;
  }
  const auto q = quotient(l, e);
  if (dot) {
    out << emit_dot(q, "quotient");
    return kOk;
  }
  out << "Θ(E) = " << format_partition(w.theta, x.star.poset().labels()) << "\n"
      << format_order(induced_order(q)) << "\n"
      << format_tables(q);
  return kOk;
}

int cmd_iso(const Document& a, const Document& b, std::ostream& out) {
  const auto la = to_partial_lattice(a);
  const auto lb = to_partial_lattice(b);
  const auto w = find_isomorphism(la, lb);
  if (!w) {
    out << "not isomorphic\n";
    return kFailed;
  }
  out << "isomorphic:";
  for (Elem x = 0; x < la.size(); ++x) out << " " << la.label(x) << "->" << lb.label(w->forward(x));
  out << "\n";
  return kOk;
}

int cmd_verify(std::size_t n, std::ostream& out) {
  const auto report = verify_corpus(n);
  out << format_report(report);
  return report.ok() ? kOk : kFailed;
}

int cmd_demo(const std::string& id, bool dot, std::ostream& out, std::ostream& err) {
  const auto* fixture = find_fixture(id);
  if (!fixture) {
    err << "unknown figure '" << id << "'; known:";
    for (const auto& f : figure_fixtures()) err << " " << f.id;
    err << "\n";
    return kUsage;
  }
  const auto outcome = run_fixture(*fixture);
  out << (dot ? outcome.dot : outcome.rendering);
  for (const auto& f : outcome.failures) err << id << ": " << f << "\n";
  return outcome.ok() ? kOk : kFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Finite partial lattices: extensions, congruences and quotients", "partlat"};
  app.require_subcommand(1);

  std::string file;
  std::string file2;
  std::string classes;
  std::string figure;
  std::size_t n = 4;
  bool dot = false;

  auto* validate = app.add_subcommand("validate", "Check a poset or partial lattice");
  validate->add_option("file", file, "Input file, - for stdin")->required();

  auto* order = app.add_subcommand("order", "Induced order of a partial lattice");
  order->add_option("file", file)->required();
  order->add_flag("--dot", dot, "Emit Graphviz DOT");

  auto* extend = app.add_subcommand("extend", "Two-point extension L*");
  extend->add_option("file", file)->required();
  extend->add_flag("--dot", dot, "Emit Graphviz DOT");

  auto* onepoint = app.add_subcommand("onepoint", "One-point totalization and its validation");
  onepoint->add_option("file", file)->required();

  auto* congruences = app.add_subcommand("congruences", "List all congruences");
  congruences->add_option("file", file)->required();

  auto* quot = app.add_subcommand("quotient", "Quotient L/E");
  quot->add_option("file", file)->required();
  quot->add_option("--classes", classes, "Blocks of E, e.g. \"a c|b\"")->required();
  quot->add_flag("--dot", dot, "Emit Graphviz DOT");

  auto* iso = app.add_subcommand("iso", "Find an isomorphism between two partial lattices");
  iso->add_option("first", file)->required();
  iso->add_option("second", file2)->required();

  auto* verify = app.add_subcommand("verify", "Check all properties over small partial lattices");
  verify->add_option("--n", n, "Largest carrier size")->check(CLI::Range(1, 6));

  auto* demo = app.add_subcommand("demo", "Build and check a worked example (fig1..fig18)");
  demo->add_option("figure", figure)->required();
  demo->add_flag("--dot", dot, "Emit Graphviz DOT");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(load(file, in), out);
    if (order->parsed()) return cmd_order(load(file, in), dot, out);
    if (extend->parsed()) return cmd_extend(load(file, in), dot, out, err);
    if (onepoint->parsed()) return cmd_onepoint(load(file, in), out);
    if (congruences->parsed()) return cmd_congruences(load(file, in), out);
    if (quot->parsed()) return cmd_quotient(load(file, in), classes, dot, out);
    if (iso->parsed()) return cmd_iso(load(file, in), load(file2, in), out);
    if (verify->parsed()) return cmd_verify(n, out);
    if (demo->parsed()) return cmd_demo(figure, dot, out, err);
  } catch (const InputError& e) {
    err << e.message << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace partlat
