#include "abdarg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "abdarg/af.hpp"
#include "abdarg/alp.hpp"
#include "abdarg/dialogue.hpp"
#include "abdarg/formats.hpp"
#include "abdarg/instantiate.hpp"

namespace abdarg {

namespace {

struct UsageError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

AcceptanceMode mode_from(const std::string& name) {
  return name == "credulous" ? AcceptanceMode::Credulous : AcceptanceMode::Skeptical;
}

Observation split_observation(const std::string& text) {
  Observation out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) throw UsageError{"empty entry in the observation list"};
    auto e = item.find_last_not_of(" \t");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw UsageError{"the observation list is empty"};
  return out;
}

nlohmann::json move_json(const Move& mv) {
  const char* kind = "";
  switch (mv.kind) {
    case MoveKind::OppAttack: kind = "opp_attack"; break;
    case MoveKind::ProDefence: kind = "pro_defence"; break;
    case MoveKind::ProNegation: kind = "pro_negation"; break;
    case MoveKind::OppOk: kind = "opp_ok"; break;
    case MoveKind::ProWin: kind = "pro_win"; break;
  }
  return {{"move", kind}, {"from", mv.attacker}, {"to", mv.target}};
}

int cmd_solve(const std::string& af_path, const std::string& semantics,
              const std::string& arg, const std::string& mode, std::ostream& out) {
  const ArgumentationFramework af = parse_af(read_file(af_path));
  if (!arg.empty()) {
    const bool ok = accepts(af, arg, mode_from(mode));
    out << (ok ? "accepted" : "not accepted") << "\n";
    return ok ? 0 : 1;
  }
  if (semantics == "grounded") {
    out << render_state(grounded_extension(af)) << "\n";
    return 0;
  }
  for (const Extension& e : complete_extensions(af)) out << render_state(e) << "\n";
  return 0;
}

int cmd_explain(const std::string& aaf_path, const std::string& obs_text,
                const std::string& mode_name, bool dialogue,
                const std::string& format, std::ostream& out) {
  const AbductiveAF m = parse_aaf(read_file(aaf_path));
  const Observation obs = split_observation(obs_text);
  for (const ArgumentId& x : obs) {
    const auto& known = m.union_signature().arguments;
    if (!std::binary_search(known.begin(), known.end(), x)) {
      throw Error(ErrorCode::UnknownArgument,
                  "observation argument '" + x + "' appears in no member");
    }
  }
  const AcceptanceMode mode = mode_from(mode_name);
  const std::vector<AbducibleName> names = m.all_explanations(obs, mode);
  const bool want_witnesses = dialogue || format == "json";
  std::vector<ExplanationWitness> witnesses;
  if (want_witnesses) {
    witnesses = mode == AcceptanceMode::Skeptical ? search_skeptical(m, obs)
                                                  : search_credulous(m, obs);
  }

  if (format == "json") {
    nlohmann::json doc;
    doc["observation"] = obs;
    doc["mode"] = mode_name;
    doc["explanations"] = nlohmann::json::array();
    for (const AbducibleName& name : names) {
      nlohmann::json entry;
      entry["name"] = name;
      entry["hypotheses"] = nlohmann::json::array();
      const ExplanationWitness* covering = nullptr;
      for (const ExplanationWitness& w : witnesses) {
        if (std::find(w.explained.begin(), w.explained.end(), name) !=
            w.explained.end()) {
          covering = &w;
          break;
        }
      }
      if (covering) {
        entry["dialogue"] = nlohmann::json::array();
        entry["states"] = nlohmann::json::array();
        for (std::size_t i = 0; i < covering->dialogue.moves.size(); ++i) {
          entry["dialogue"].push_back(move_json(covering->dialogue.moves[i]));
          entry["states"].push_back(info_state(m, covering->dialogue, i + 1));
        }
      }
      doc["explanations"].push_back(std::move(entry));
    }
    out << doc.dump(2) << "\n";
    return names.empty() ? 1 : 0;
  }

  for (const AbducibleName& name : names) out << name << "\n";
  if (dialogue) {
    for (const ExplanationWitness& w : witnesses) {
      out << "\n" << render_witness(m, w);
    }
  }
  return names.empty() ? 1 : 0;
}

int cmd_consequences(const std::string& lp_path, const std::string& mode_name,
                     std::ostream& out) {
  const Alp alp = parse_alp(read_file(lp_path));
  const AcceptanceMode mode = mode_from(mode_name);
  bool any = false;
  for (const Atom& a : alp.program.atoms()) {
    if (is_consequence(alp.program, a, mode)) {
      out << a << "\n";
      any = true;
    }
  }
  return any ? 0 : 1;
}

int cmd_instantiate(const std::string& lp_path, const std::string& out_path,
                    std::ostream& out) {
  const InstantiatedAF inst = instantiate(parse_alp(read_file(lp_path)).program);
  std::string doc = serialize_af(inst.af) + "\n";
  std::istringstream table(render_triple_table(inst));
  std::string line;
  while (std::getline(table, line)) doc += "% " + line + "\n";
  if (out_path.empty()) {
    out << doc;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw UsageError{"cannot write '" + out_path + "'"};
  file << doc;
  return 0;
}

int cmd_abduce(const std::string& alp_path, const std::string& query,
               const std::string& mode_name, const std::string& via,
               bool dialogue, std::ostream& out) {
  const Alp alp = parse_alp(read_file(alp_path));
  const AcceptanceMode mode = mode_from(mode_name);
  const ExplainRoute route =
      via == "direct" ? ExplainRoute::Direct : ExplainRoute::ViaAaf;
  const std::vector<Hypothesis> hyps = explain_query(alp, query, mode, route);
  for (const Hypothesis& h : hyps) out << hypothesis_label(h) << "\n";
  if (dialogue) {
    const AlpFamily fam = build_aaf(alp);
    const Observation obs = fam.anywhere_observation(query);
    const std::vector<ExplanationWitness> witnesses =
        mode == AcceptanceMode::Skeptical ? search_skeptical(fam.aaf, obs)
                                          : search_credulous(fam.aaf, obs);
    for (const ExplanationWitness& w : witnesses) {
      out << "\n" << render_witness(fam.aaf, w);
    }
  }
  return hyps.empty() ? 1 : 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"abductive explanations for observations over argumentation frameworks"};
  app.require_subcommand(1);

  std::string af_path, aaf_path, lp_path, alp_path, out_path;
  std::string semantics, arg, obs_text, query, via;
  std::string mode = "skeptical", format = "text";
  bool dialogue = false;

  CLI::App* solve = app.add_subcommand("solve", "extensions and acceptance for one framework");
  solve->add_option("--af", af_path, "framework file")->required();
  solve->add_option("--semantics", semantics, "complete or grounded")
      ->required()
      ->check(CLI::IsMember({"complete", "grounded"}));
  solve->add_option("--arg", arg, "report acceptance of this argument instead");
  solve->add_option("--mode", mode, "skeptical or credulous")
      ->check(CLI::IsMember({"skeptical", "credulous"}));

  CLI::App* explain = app.add_subcommand("explain", "members backing an observation");
  explain->add_option("--aaf", aaf_path, "framework family file")->required();
  explain->add_option("--observation", obs_text, "comma-separated argument names")->required();
  explain->add_option("--mode", mode, "skeptical or credulous")
      ->required()
      ->check(CLI::IsMember({"skeptical", "credulous"}));
  explain->add_flag("--dialogue", dialogue, "also print witness dialogues");
  explain->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* consequences = app.add_subcommand("consequences", "atoms following from a program");
  consequences->add_option("--lp", lp_path, "program file")->required();
  consequences->add_option("--mode", mode, "skeptical or credulous")
      ->required()
      ->check(CLI::IsMember({"skeptical", "credulous"}));

  CLI::App* inst = app.add_subcommand("instantiate", "argument graph of a program");
  inst->add_option("--lp", lp_path, "program file")->required();
  inst->add_option("--out", out_path, "write here instead of stdout");

  CLI::App* abduce = app.add_subcommand("abduce", "hypotheses making a query follow");
  abduce->add_option("--alp", alp_path, "program file with @abducible directives")->required();
  abduce->add_option("--query", query, "atom to explain")->required();
  abduce->add_option("--mode", mode, "skeptical or credulous")
      ->required()
      ->check(CLI::IsMember({"skeptical", "credulous"}));
  abduce->add_option("--via", via, "direct or aaf")
      ->required()
      ->check(CLI::IsMember({"direct", "aaf"}));
  abduce->add_flag("--dialogue", dialogue, "also print witness dialogues");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("abdarg");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (app.got_subcommand(solve)) return cmd_solve(af_path, semantics, arg, mode, out);
    if (app.got_subcommand(explain)) {
      return cmd_explain(aaf_path, obs_text, mode, dialogue, format, out);
    }
    if (app.got_subcommand(consequences)) return cmd_consequences(lp_path, mode, out);
    if (app.got_subcommand(inst)) return cmd_instantiate(lp_path, out_path, out);
    return cmd_abduce(alp_path, query, mode, via, dialogue, out);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << e.message << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace abdarg
