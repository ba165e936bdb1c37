#include "malleq/formula.hpp"

#include <algorithm>
#include <sstream>

#include "malleq/parse_util.hpp"

namespace malleq {

bool valid_atom_name(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), detail::Cursor::ident_char);
}

bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), detail::Cursor::ident_char);
}

FormulaPtr atom(const std::string& name) {
  if (!valid_atom_name(name)) throw Error("invalid atom name '" + name + "'");
  return std::make_shared<Formula>(Formula{Formula::Kind::Atom, name, nullptr, nullptr, 1});
}

FormulaPtr imp(FormulaPtr l, FormulaPtr r) {
  if (!l || !r) throw Error("implication needs two subformulas");
  int n = l->atoms + r->atoms;
  return std::make_shared<Formula>(Formula{Formula::Kind::Imp, "", std::move(l), std::move(r), n});
}

FormulaPtr plus(const std::string& label, FormulaPtr l, FormulaPtr r) {
  if (!valid_label(label)) throw Error("invalid label '" + label + "'");
  if (!l || !r) throw Error("sum needs two subformulas");
  int n = l->atoms + r->atoms;
  return std::make_shared<Formula>(Formula{Formula::Kind::Plus, label, std::move(l), std::move(r), n});
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.name != b.name) return false;
  if (a.kind == Formula::Kind::Atom) return true;
  return *a.left == *b.left && *a.right == *b.right;
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool sequent_equal(const Sequent& a, const Sequent& b) {
  if (a.context.size() != b.context.size()) return false;
  for (std::size_t i = 0; i < a.context.size(); ++i) {
    if (!formula_equal(a.context[i], b.context[i])) return false;
  }
  return formula_equal(a.succedent, b.succedent);
}

int atom_count(const Formula& f) { return f.atoms; }

int atom_count(const Sequent& s) {
  int n = 0;
  for (const auto& f : s.context) n += f->atoms;
  if (s.succedent) n += s.succedent->atoms;
  return n;
}

namespace {

void collect_occurrences(const Formula& f, int place, std::vector<int>& path, int& index,
                         std::vector<Occurrence>& out) {
  if (f.kind == Formula::Kind::Atom) {
    out.push_back({index++, f.name, place, path});
    return;
  }
  path.push_back(0);
  collect_occurrences(*f.left, place, path, index, out);
  path.back() = 1;
  collect_occurrences(*f.right, place, path, index, out);
  path.pop_back();
}

void collect_plus_sites(const Formula& f, bool negative, int& offset, std::vector<PlusSite>& out) {
  if (f.kind == Formula::Kind::Atom) {
    ++offset;
    return;
  }
  if (f.kind == Formula::Kind::Plus) {
    int mid = offset + f.left->atoms;
    out.push_back({f.name, negative, offset, mid, mid, mid + f.right->atoms});
  }
  // the antecedent of an implication flips polarity
  bool left_neg = f.kind == Formula::Kind::Imp ? !negative : negative;
  collect_plus_sites(*f.left, left_neg, offset, out);
  collect_plus_sites(*f.right, negative, offset, out);
}

}  // namespace

std::vector<Occurrence> occurrences(const Sequent& s) {
  std::vector<Occurrence> out;
  std::vector<int> path;
  int index = 0;
  for (std::size_t i = 0; i < s.context.size(); ++i) {
    collect_occurrences(*s.context[i], static_cast<int>(i) + 1, path, index, out);
  }
  if (s.succedent) collect_occurrences(*s.succedent, 0, path, index, out);
  return out;
}

std::pair<int, int> occurrence_block(const Sequent& s, int place) {
  int begin = 0;
  if (place == 0) {
    for (const auto& f : s.context) begin += f->atoms;
    return {begin, begin + (s.succedent ? s.succedent->atoms : 0)};
  }
  if (place < 1 || place > static_cast<int>(s.context.size())) {
    throw Error("sequent position " + std::to_string(place) + " out of range");
  }
  for (int i = 0; i < place - 1; ++i) begin += s.context[i]->atoms;
  return {begin, begin + s.context[place - 1]->atoms};
}

std::vector<PlusSite> plus_sites(const Sequent& s) {
  std::vector<PlusSite> out;
  int offset = 0;
  for (const auto& f : s.context) collect_plus_sites(*f, true, offset, out);
  if (s.succedent) collect_plus_sites(*s.succedent, false, offset, out);
  return out;
}

std::set<std::string> sequent_labels(const Sequent& s) {
  std::set<std::string> out;
  for (const auto& site : plus_sites(s)) out.insert(site.label);
  return out;
}

std::set<std::string> negative_plus_labels(const Sequent& s) {
  std::set<std::string> out;
  for (const auto& site : plus_sites(s)) {
    if (site.negative) out.insert(site.label);
  }
  return out;
}

std::string find_duplicate_label(const Sequent& s) {
  std::set<std::string> seen;
  for (const auto& site : plus_sites(s)) {
    if (!seen.insert(site.label).second) return site.label;
  }
  return "";
}

void validate_sequent(const Sequent& s) {
  if (!s.succedent) throw Error("sequent has no succedent");
  std::string dup = find_duplicate_label(s);
  if (!dup.empty()) throw Error("duplicate label '" + dup + "' in sequent");
}

namespace {

FormulaPtr parse_formula_at(detail::Cursor& c) {
  if (c.try_consume('(')) {
    FormulaPtr l = parse_formula_at(c);
    if (c.try_consume("-o")) {
      FormulaPtr r = parse_formula_at(c);
      c.expect(')');
      return imp(std::move(l), std::move(r));
    }
    if (c.try_consume('+')) {
      c.expect('[');
      std::string label = c.label();
      c.expect(']');
      FormulaPtr r = parse_formula_at(c);
      c.expect(')');
      return plus(label, std::move(l), std::move(r));
    }
    c.fail("expected '-o' or '+['");
  }
  std::size_t at = c.pos;
  std::string name = c.ident();
  if (!valid_atom_name(name)) throw ParseError("invalid atom name '" + name + "'", at);
  return atom(name);
}

Sequent parse_sequent_at(detail::Cursor& c) {
  Sequent s;
  if (!c.try_consume("|-")) {
    s.context.push_back(parse_formula_at(c));
    while (c.try_consume(',')) s.context.push_back(parse_formula_at(c));
    c.expect("|-");
  }
  s.succedent = parse_formula_at(c);
  return s;
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
  detail::Cursor c(text);
  FormulaPtr f = parse_formula_at(c);
  c.expect_end();
  return f;
}

FormulaPtr parse_formula_prefix(detail::Cursor& c) { return parse_formula_at(c); }

Sequent parse_sequent(std::string_view text) {
  detail::Cursor c(text);
  Sequent s = parse_sequent_at(c);
  c.expect_end();
  validate_sequent(s);
  return s;
}

namespace {

void show_formula_to(const Formula& f, std::ostringstream& out) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      out << f.name;
      break;
    case Formula::Kind::Imp:
      out << '(';
      show_formula_to(*f.left, out);
      out << " -o ";
      show_formula_to(*f.right, out);
      out << ')';
      break;
    case Formula::Kind::Plus:
      out << '(';
      show_formula_to(*f.left, out);
      out << " +[" << f.name << "] ";
      show_formula_to(*f.right, out);
      out << ')';
      break;
  }
}

}  // namespace

std::string show_formula(const Formula& f) {
  std::ostringstream out;
  show_formula_to(f, out);
  return out.str();
}

std::string show_sequent(const Sequent& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.context.size(); ++i) {
    if (i) out << ", ";
    show_formula_to(*s.context[i], out);
  }
  if (!s.context.empty()) out << ' ';
  out << "|- ";
  show_formula_to(*s.succedent, out);
  return out.str();
}

}  // namespace malleq
