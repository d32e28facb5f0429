#include "abdarg/lp.hpp"

#include <algorithm>

#include "abdarg/kernels.hpp"

namespace abdarg {

namespace {

void sort_unique(std::vector<Atom>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool member(const std::vector<Atom>& sorted, const Atom& a) {
  return std::binary_search(sorted.begin(), sorted.end(), a);
}

}  // namespace

Rule make_rule(Atom head, std::vector<Atom> pos, std::vector<Atom> neg) {
  Rule r{std::move(head), std::move(pos), std::move(neg)};
  sort_unique(r.pos);
  sort_unique(r.neg);
  return r;
}

LogicProgram::LogicProgram(std::vector<Rule> rules) : rules_(std::move(rules)) {
  for (auto& r : rules_) {
    sort_unique(r.pos);
    sort_unique(r.neg);
  }
  std::sort(rules_.begin(), rules_.end());
  rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
  for (const auto& r : rules_) {
    atoms_.push_back(r.head);
    atoms_.insert(atoms_.end(), r.pos.begin(), r.pos.end());
    atoms_.insert(atoms_.end(), r.neg.begin(), r.neg.end());
  }
  sort_unique(atoms_);
}

Interpretation make_interpretation(std::vector<Atom> true_atoms,
                                   std::vector<Atom> false_atoms) {
  Interpretation i{std::move(true_atoms), std::move(false_atoms)};
  sort_unique(i.true_atoms);
  sort_unique(i.false_atoms);
  for (const auto& a : i.true_atoms) {
    if (member(i.false_atoms, a)) {
      throw std::invalid_argument("atom '" + a + "' assigned both true and false");
    }
  }
  return i;
}

TransformedBodyTerm body_atom(Atom atom) {
  TransformedBodyTerm t;
  t.is_constant = false;
  t.atom = std::move(atom);
  return t;
}

TransformedBodyTerm body_constant(TruthConstant value) {
  TransformedBodyTerm t;
  t.is_constant = true;
  t.constant = value;
  return t;
}

std::vector<TransformedRule> gl_transform(const LogicProgram& program,
                                          const Interpretation& interp) {
  const auto& vocab = program.atoms();
  for (const auto& a : interp.true_atoms) {
    if (!member(vocab, a)) {
      throw Error(ErrorCode::InterpretationOutOfVocabulary,
                  "atom '" + a + "' does not occur in the program");
    }
  }
  for (const auto& a : interp.false_atoms) {
    if (!member(vocab, a)) {
      throw Error(ErrorCode::InterpretationOutOfVocabulary,
                  "atom '" + a + "' does not occur in the program");
    }
  }
  std::vector<TransformedRule> out;
  out.reserve(program.rules().size());
  for (const auto& rule : program.rules()) {
    TransformedRule tr;
    tr.head = rule.head;
    for (const auto& a : rule.pos) tr.body.push_back(body_atom(a));
    for (const auto& b : rule.neg) {
      // "not b" becomes the complement of b's value under interp.
      TruthConstant c = TruthConstant::Undecided;
      if (member(interp.true_atoms, b)) c = TruthConstant::False;
      else if (member(interp.false_atoms, b)) c = TruthConstant::True;
      tr.body.push_back(body_constant(c));
    }
    out.push_back(std::move(tr));
  }
  return out;
}

Interpretation least_model(const std::vector<TransformedRule>& rules,
                           const std::vector<Atom>& vocabulary) {
  std::vector<Atom> vocab = vocabulary;
  sort_unique(vocab);
  auto check = [&](const Atom& a) {
    if (!member(vocab, a)) {
      throw Error(ErrorCode::InterpretationOutOfVocabulary,
                  "atom '" + a + "' is outside the given vocabulary");
    }
  };
  for (const auto& r : rules) {
    check(r.head);
    for (const auto& t : r.body) {
      if (!t.is_constant) check(t.atom);
    }
  }

  // Least fixpoint of true derivability: a body holds when every atom term is
  // already derived and every constant is 1.
  std::vector<Atom> true_atoms;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : rules) {
      if (member(true_atoms, r.head)) continue;
      bool fires = true;
      for (const auto& t : r.body) {
        bool ok = t.is_constant ? t.constant == TruthConstant::True
                                : member(true_atoms, t.atom);
        if (!ok) { fires = false; break; }
      }
      if (fires) {
        true_atoms.insert(
            std::upper_bound(true_atoms.begin(), true_atoms.end(), r.head),
            r.head);
        changed = true;
      }
    }
  }

  // Least fixpoint of "possibly not false": constants only need to be above
  // 0.  Atoms never reached this way are false.
  std::vector<Atom> not_false;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : rules) {
      if (member(not_false, r.head)) continue;
      bool fires = true;
      for (const auto& t : r.body) {
        bool ok = t.is_constant ? t.constant != TruthConstant::False
                                : member(not_false, t.atom);
        if (!ok) { fires = false; break; }
      }
      if (fires) {
        not_false.insert(
            std::upper_bound(not_false.begin(), not_false.end(), r.head),
            r.head);
        changed = true;
      }
    }
  }
  std::vector<Atom> false_atoms;
  std::set_difference(vocab.begin(), vocab.end(), not_false.begin(),
                      not_false.end(), std::back_inserter(false_atoms));
  return Interpretation{std::move(true_atoms), std::move(false_atoms)};
}

Interpretation gamma(const LogicProgram& program, const Interpretation& interp) {
  return least_model(gl_transform(program, interp), program.atoms());
}

namespace {

Interpretation from_masks(const LogicProgram& program,
                          kernels::MaskInterpretation m) {
  const auto& atoms = program.atoms();
  Interpretation out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (m.first & (1u << i)) out.true_atoms.push_back(atoms[i]);
    if (m.second & (1u << i)) out.false_atoms.push_back(atoms[i]);
  }
  return out;
}

}  // namespace

std::vector<Interpretation> partial_stable_models(const LogicProgram& program,
                                                  int max_atoms) {
  const int n = static_cast<int>(program.atoms().size());
  if (n > max_atoms) {
    throw Error(ErrorCode::VocabularyTooLarge,
                "model enumeration over " + std::to_string(n) +
                    " atoms refused (limit " + std::to_string(max_atoms) + ")");
  }
  auto tables = kernels::lp_tables(program);
  auto masks = kernels::partial_stable_masks(tables);
  std::vector<Interpretation> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(from_masks(program, m));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_consequence(const LogicProgram& program, const Atom& query,
                    AcceptanceMode mode, int max_atoms) {
  if (!member(program.atoms(), query)) {
    throw Error(ErrorCode::UnknownAtom,
                "atom '" + query + "' does not occur in the program");
  }
  auto models = partial_stable_models(program, max_atoms);
  if (mode == AcceptanceMode::Skeptical) {
    for (const auto& m : models) {
      if (!member(m.true_atoms, query)) return false;
    }
    return true;
  }
  for (const auto& m : models) {
    if (member(m.true_atoms, query)) return true;
  }
  return false;
}

}  // namespace abdarg
