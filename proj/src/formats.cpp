#include "abdarg/formats.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace abdarg {

namespace {

// Character cursor with 1-based line/column tracking; '%' comments run to the
// end of the line.
struct Scanner {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int column = 1;

  explicit Scanner(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::SyntaxError, message, line, column);
  }

  bool done() {
    skip();
    return pos >= text.size();
  }

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  void advance() {
    if (pos >= text.size()) return;
    if (text[pos] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++pos;
  }

  void skip() {
    for (;;) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        advance();
      }
      if (pos < text.size() && text[pos] == '%') {
        while (pos < text.size() && text[pos] != '\n') advance();
        continue;
      }
      return;
    }
  }

  void expect(char c, const std::string& what) {
    skip();
    if (peek() != c) fail("expected '" + std::string(1, c) + "' " + what);
    advance();
  }

  bool consume(char c) {
    skip();
    if (peek() != c) return false;
    advance();
    return true;
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string identifier(const std::string& what) {
    skip();
    if (!ident_start(peek())) fail("expected " + what);
    std::string out;
    while (ident_char(peek())) {
      out += peek();
      advance();
    }
    return out;
  }
};

// Lowercase-identifier atom; an uppercase lead or a parenthesised term is the
// non-ground syntax this artifact refuses.
Atom parse_atom(Scanner& s, const std::string& what) {
  s.skip();
  const int line = s.line, column = s.column;
  std::string id = s.identifier(what);
  if (std::isupper(static_cast<unsigned char>(id[0]))) {
    throw Error(ErrorCode::VariableNotSupported,
                "'" + id + "' reads as a variable; programs must be ground",
                line, column);
  }
  s.skip();
  if (s.peek() == '(') {
    // look inside: a variable argument gets the specific error
    std::size_t probe = s.pos + 1;
    while (probe < s.text.size() && s.text[probe] != ')') {
      if (std::isupper(static_cast<unsigned char>(s.text[probe]))) {
        throw Error(ErrorCode::VariableNotSupported,
                    "'" + id + "(...)' contains a variable; programs must be ground",
                    line, column);
      }
      ++probe;
    }
    throw Error(ErrorCode::SyntaxError,
                "'" + id + "(...)': compound terms are not supported", line, column);
  }
  return id;
}

struct AfStatements {
  std::vector<ArgumentId> args;
  std::vector<std::pair<ArgumentId, ArgumentId>> attacks;

  ArgumentationFramework build() const { return ArgumentationFramework(args, attacks); }
};

// One `arg(x).` or `att(x,y).` statement; returns false on anything else
// without consuming input.
bool parse_af_statement(Scanner& s, AfStatements& out) {
  s.skip();
  if (!Scanner::ident_start(s.peek())) return false;
  const std::size_t mark = s.pos;
  const int line = s.line, column = s.column;
  std::string keyword = s.identifier("a statement");
  if (keyword != "arg" && keyword != "att") {
    s.pos = mark;
    s.line = line;
    s.column = column;
    return false;
  }
  s.expect('(', "after '" + keyword + "'");
  std::string first = s.identifier("an argument name");
  if (keyword == "arg") {
    s.expect(')', "after the argument name");
    s.expect('.', "to close the statement");
    out.args.push_back(std::move(first));
    return true;
  }
  s.expect(',', "between the attack endpoints");
  std::string second = s.identifier("an argument name");
  s.expect(')', "after the attack endpoints");
  s.expect('.', "to close the statement");
  out.attacks.emplace_back(std::move(first), std::move(second));
  return true;
}

}  // namespace

ArgumentationFramework parse_af(const std::string& text) {
  Scanner s(text);
  AfStatements acc;
  while (!s.done()) {
    if (!parse_af_statement(s, acc)) {
      s.fail("expected an 'arg' or 'att' statement");
    }
  }
  return acc.build();
}

AbductiveAF parse_aaf(const std::string& text) {
  Scanner s(text);
  std::vector<std::pair<AbducibleName, AfStatements>> blocks;
  AbducibleName base;
  bool base_set = false;
  while (!s.done()) {
    if (s.consume('@')) {
      std::string directive = s.identifier("a directive name");
      if (directive == "af") {
        blocks.emplace_back(s.identifier("a framework name"), AfStatements{});
        continue;
      }
      if (directive == "base") {
        if (base_set) s.fail("a second '@base' directive");
        base = s.identifier("a framework name");
        base_set = true;
        continue;
      }
      s.fail("unknown directive '@" + directive + "'");
    }
    if (blocks.empty()) s.fail("a statement outside any '@af' block");
    if (!parse_af_statement(s, blocks.back().second)) {
      s.fail("expected an 'arg' or 'att' statement or a directive");
    }
  }
  if (blocks.empty()) {
    throw Error(ErrorCode::MissingBase, "no '@af' blocks in the document");
  }
  if (!base_set) base = blocks.front().first;
  std::vector<std::pair<AbducibleName, ArgumentationFramework>> members;
  members.reserve(blocks.size());
  for (const auto& [name, stmts] : blocks) {
    members.emplace_back(name, stmts.build());
  }
  return AbductiveAF(base, std::move(members));
}

Alp parse_alp(const std::string& text) {
  Scanner s(text);
  std::vector<Rule> rules;
  std::vector<Atom> abducibles;
  while (!s.done()) {
    if (s.consume('@')) {
      std::string directive = s.identifier("a directive name");
      if (directive != "abducible") s.fail("unknown directive '@" + directive + "'");
      do {
        abducibles.push_back(parse_atom(s, "an abducible atom"));
      } while (s.consume(','));
      s.expect('.', "to close the directive");
      continue;
    }
    Atom head = parse_atom(s, "a rule head");
    std::vector<Atom> pos, neg;
    s.skip();
    if (s.peek() == ':') {
      s.advance();
      s.expect('-', "to complete ':-'");
      do {
        s.skip();
        const std::size_t mark = s.pos;
        const int line = s.line, column = s.column;
        std::string id = s.identifier("a body atom");
        if (id == "not" && Scanner::ident_start((s.skip(), s.peek()))) {
          neg.push_back(parse_atom(s, "a negated atom"));
        } else {
          s.pos = mark;
          s.line = line;
          s.column = column;
          pos.push_back(parse_atom(s, "a body atom"));
        }
      } while (s.consume(','));
    }
    s.expect('.', "to close the rule");
    rules.push_back(make_rule(std::move(head), std::move(pos), std::move(neg)));
  }
  return make_alp(LogicProgram(std::move(rules)), std::move(abducibles));
}

std::string serialize_af(const ArgumentationFramework& af) {
  std::string out;
  for (const ArgumentId& a : af.arguments()) out += "arg(" + a + ").\n";
  for (auto [i, j] : af.attack_pairs()) {
    out += "att(" + af.name_of(i) + "," + af.name_of(j) + ").\n";
  }
  return out;
}

std::string serialize_aaf(const AbductiveAF& m) {
  std::string out = "@base " + m.base_name() + "\n";
  for (std::size_t i = 0; i < m.member_count(); ++i) {
    out += "\n@af " + m.name_at(i) + "\n" + serialize_af(m.member_at(i));
  }
  return out;
}

std::string serialize_alp(const Alp& alp) {
  std::string out;
  for (const Rule& r : alp.program.rules()) out += render_rule(r) + ".\n";
  if (!alp.abducibles.empty()) {
    out += "@abducible ";
    for (std::size_t i = 0; i < alp.abducibles.size(); ++i) {
      if (i) out += ", ";
      out += alp.abducibles[i];
    }
    out += ".\n";
  }
  return out;
}

std::string render_move(const Move& move) {
  switch (move.kind) {
    case MoveKind::OppAttack:
      return "OPP: " + move.attacker + " -> " + move.target;
    case MoveKind::ProDefence:
      return "PRO: " + move.attacker + " -> " + move.target;
    case MoveKind::ProNegation:
      return "PRO: " + move.attacker + " -/> " + move.target;
    case MoveKind::OppOk:
      return "OPP: ok";
    case MoveKind::ProWin:
      return "PRO: win";
  }
  return {};
}

std::string render_state(const InformationState& state) {
  std::string out = "{";
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (i) out += ", ";
    out += state[i];
  }
  return out + "}";
}

std::string render_dialogue(const AbductiveAF& m, const Dialogue& d) {
  std::string out;
  for (std::size_t i = 0; i < d.moves.size(); ++i) {
    out += render_move(d.moves[i]) + "  " +
           render_state(info_state(m, d, i + 1)) + "\n";
  }
  return out;
}

std::string render_witness(const AbductiveAF& m, const ExplanationWitness& w) {
  return "witness for " + w.dialogue.initial_argument + " -> " +
         render_state(w.explained) + "\n" + render_dialogue(m, w.dialogue);
}

Dialogue parse_dialogue_trace(const std::string& text) {
  Dialogue d;
  bool initial_known = false;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto cut = line.find('%'); cut != std::string::npos) line.resize(cut);
    if (auto cut = line.find('{'); cut != std::string::npos) line.resize(cut);
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t\r");
    line = line.substr(begin, end - begin + 1);

    if (line.rfind("witness for ", 0) == 0) {
      std::string rest = line.substr(12);
      auto arrow = rest.find(" ->");
      d.initial_argument = rest.substr(0, arrow);
      initial_known = true;
      continue;
    }
    if (line == "OPP: ok") {
      d.moves.push_back(opp_ok());
      continue;
    }
    if (line == "PRO: win") {
      d.moves.push_back(pro_win());
      continue;
    }
    bool opp = line.rfind("OPP: ", 0) == 0;
    bool pro = line.rfind("PRO: ", 0) == 0;
    if (!opp && !pro) {
      throw Error(ErrorCode::SyntaxError, "unrecognized trace line '" + line + "'",
                  line_no, 1);
    }
    std::string rest = line.substr(5);
    bool negation = false;
    auto arrow = rest.find(" -> ");
    if (arrow == std::string::npos) {
      arrow = rest.find(" -/> ");
      negation = true;
    }
    if (arrow == std::string::npos) {
      throw Error(ErrorCode::SyntaxError, "unrecognized trace line '" + line + "'",
                  line_no, 1);
    }
    std::string from = rest.substr(0, arrow);
    std::string to = rest.substr(arrow + (negation ? 5 : 4));
    if (opp) {
      if (negation) {
        throw Error(ErrorCode::SyntaxError, "OPP cannot negate an attack", line_no, 1);
      }
      d.moves.push_back(opp_attack(from, to));
      if (!initial_known) {
        d.initial_argument = to;
        initial_known = true;
      }
    } else {
      d.moves.push_back(negation ? pro_negation(from, to) : pro_defence(from, to));
    }
  }
  return d;
}

}  // namespace abdarg
