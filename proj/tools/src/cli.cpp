#include "worldseq_cli/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "worldseq/error.hpp"
#include "worldseq/kb.hpp"
#include "worldseq/sequence_json.hpp"
#include "worldseq/syntax.hpp"

namespace worldseq::cli {
namespace {

using nlohmann::json;

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  bool strict = false;
  bool all_orders = false;
  std::string file;
  std::string sequence_file;
  std::vector<std::string> names;
  std::vector<std::string> on;
  std::vector<std::string> queries;
  std::string eps;
};

struct Outcome {
  int code = kOk;
  std::string text;
  json result = json::object();
  json sequences = json::array();
};

CheckMode mode(const Options& o) { return o.strict ? CheckMode::Strict : CheckMode::Standard; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageFailure("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

KbDocument load_kb(const std::string& path, KbKind kind) {
  const std::string text = read_file(path);
  try {
    return parse_kb(text, kind);
  } catch (const ParseError& e) {
    throw InputFailure(path + ":" + e.what());
  } catch (const SemanticError& e) {
    throw InputFailure(path + ": " + e.what());
  }
}

PartitionSequence load_sequence(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return sequence_from_json_text(text);
  } catch (const ParseError& e) {
    throw InputFailure(path + ":" + e.what());
  } catch (const SemanticError& e) {
    throw InputFailure(path + ": " + e.what());
  }
}

Formula formula_over(const std::string& text, const Vocabulary& vocab) {
  try {
    Formula f = parse_formula(text);
    for (const auto& name : f.atoms()) vocab.index_of(name);
    return f;
  } catch (const Error& e) {
    throw InputFailure("formula '" + text + "': " + e.what());
  }
}

std::vector<Formula> formulas_over(const std::vector<std::string>& texts, const Vocabulary& vocab) {
  std::vector<Formula> out;
  for (const auto& t : texts) out.push_back(formula_over(t, vocab));
  return out;
}

Rational epsilon(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const SemanticError& e) {
    throw UsageFailure("--eps: " + std::string(e.what()));
  }
}

json assignment_json(const World& w, const Vocabulary& vocab) { return world_to_json(w, vocab)["assign"]; }

json kernel_json(const Kernel& k, const Vocabulary& vocab) {
  json out = json::array();
  for (const auto& w : k.worlds()) out.push_back(assignment_json(w, vocab));
  return out;
}

std::string kernel_text(const Kernel& k, const Vocabulary& vocab) {
  if (k.empty()) return "(no worlds)";
  std::string out;
  for (const auto& w : k.worlds()) out += (out.empty() ? "" : " ") + describe(w, vocab);
  return out;
}

json report_json(const CheckReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations()) {
    json item{{"condition", v.condition}, {"message", v.message}};
    item["class"] = v.class_index ? json(*v.class_index) : json(nullptr);
    if (!v.item.empty()) item["item"] = v.item;
    violations.push_back(std::move(item));
  }
  return json{{"ok", report.ok()}, {"violations", std::move(violations)}};
}

Outcome report_outcome(const CheckReport& report) {
  Outcome o;
  o.result = report_json(report);
  o.text = report.ok() ? "ok\n" : report.to_string();
  if (!o.text.empty() && o.text.back() != '\n') o.text += '\n';
  o.code = report.ok() ? kOk : kNegative;
  return o;
}

void add_sequences(Outcome& o, const std::vector<PartitionSequence>& seqs) {
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    o.text += "sequence " + std::to_string(i + 1) + ":\n" + explain(seqs[i]);
    if (o.text.back() != '\n') o.text += '\n';
    o.sequences.push_back(sequence_to_json(seqs[i]));
  }
}

Outcome worlds_cmd(const Options& opt) {
  Outcome o;
  const Vocabulary vocab(opt.names);
  json list = json::array();
  for (const auto& w : enumerate_worlds(vocab)) {
    o.text += describe(w, vocab) + "\n";
    list.push_back(assignment_json(w, vocab));
  }
  o.result["worlds"] = std::move(list);
  return o;
}

Outcome default_extensions(const Options& opt) {
  const auto doc = load_kb(opt.file, KbKind::Default);
  const auto ext = extensions(doc.default_theory());
  Outcome o;
  o.result["inconsistent"] = ext.inconsistent;
  json list = json::array();
  for (const auto& k : ext.kernels) list.push_back(kernel_json(k, doc.vocab));
  o.result["extensions"] = std::move(list);
  if (ext.inconsistent) {
    o.text = "facts are inconsistent: the only extension is the inconsistent theory\n";
    o.code = kNegative;
  } else if (ext.empty()) {
    o.text = "no extension\n";
    o.code = kNegative;
  } else {
    for (std::size_t i = 0; i < ext.kernels.size(); ++i) {
      o.text += "extension " + std::to_string(i + 1) + ": " + kernel_text(ext.kernels[i], doc.vocab) + "\n";
    }
  }
  return o;
}

Outcome default_sequences(const Options& opt) {
  const auto doc = load_kb(opt.file, KbKind::Default);
  const auto seqs = build_default_sequences(doc.default_theory(), opt.all_orders);
  Outcome o;
  o.result["count"] = seqs.size();
  if (seqs.empty()) {
    o.text = "no default partition sequence: the theory has no consistent extension\n";
    o.code = kNegative;
  }
  add_sequences(o, seqs);
  return o;
}

Outcome default_check(const Options& opt) {
  const auto doc = load_kb(opt.file, KbKind::Default);
  const auto seq = load_sequence(opt.sequence_file);
  return report_outcome(check_default_sequence(doc.default_theory(), seq, mode(opt)));
}

Outcome ael_expansions(const Options& opt) {
  const auto doc = load_kb(opt.file, KbKind::Autoepistemic);
  const auto exp = stable_expansions(doc.ael_premises());
  Outcome o;
  o.result["premises_inconsistent"] = exp.premises_inconsistent;
  json list = json::array();
  for (const auto& k : exp.kernels) list.push_back(kernel_json(k, doc.vocab));
  o.result["expansions"] = std::move(list);
  if (exp.empty()) {
    o.text = exp.premises_inconsistent ? "no stable expansion: the non-modal premises are inconsistent\n"
                                       : "no stable expansion\n";
    o.code = kNegative;
  }
  for (std::size_t i = 0; i < exp.kernels.size(); ++i) {
    o.text += "expansion " + std::to_string(i + 1) + ": kernel " + kernel_text(exp.kernels[i], doc.vocab) + "\n";
  }
  return o;
}

Outcome ael_sequences(const Options& opt) {
  const auto doc = load_kb(opt.file, KbKind::Autoepistemic);
  const auto seqs = build_ael_sequences(doc.ael_premises(), opt.all_orders);
  Outcome o;
  o.result["count"] = seqs.size();
  if (seqs.empty()) {
    o.text = "no autoepistemic partition sequence: no consistent stable expansion\n";
    o.code = kNegative;
  }
  add_sequences(o, seqs);
  return o;
}

Outcome ael_check(const Options& opt) {
  const auto doc = load_kb(opt.file, KbKind::Autoepistemic);
  const auto seq = load_sequence(opt.sequence_file);
  return report_outcome(check_ael_sequence(doc.ael_premises(), seq, mode(opt)));
}

std::vector<Formula> conditions_of(const Options& opt, const Vocabulary& vocab) {
  auto conds = formulas_over(opt.on, vocab);
  if (conds.empty()) conds.push_back(Formula::top());
  return conds;
}

Outcome threshold_failure(const ThresholdError& e, const Rational& eps) {
  Outcome o;
  o.code = kNegative;
  const std::string ratio = e.ratio() ? format_rational(*e.ratio()) : "undefined";
  o.text = "threshold fails at step " + std::to_string(e.step()) + " (" + e.formula() + "): ratio " + ratio +
           " exceeds " + format_rational(eps) + "\n";
  o.result = json{{"accepted", false}, {"step", e.step()}, {"formula", e.formula()},
                  {"ratio", e.ratio() ? json(ratio) : json(nullptr)}};
  return o;
}

Outcome prob_condition(const Options& opt) {
  const auto doc = load_kb(opt.file, KbKind::Probability);
  const auto seq = condition(doc.sample_space(), conditions_of(opt, doc.vocab));
  Outcome o;
  o.result["last_class_weight"] = format_rational(total_weight(seq.last()));
  add_sequences(o, {seq});
  return o;
}

Outcome prob_threshold(const Options& opt) {
  const auto doc = load_kb(opt.file, KbKind::Probability);
  const Rational eps = epsilon(opt.eps);
  const auto conds = conditions_of(opt, doc.vocab);
  try {
    const auto seq = threshold(doc.sample_space(), eps, conds, mode(opt));
    Outcome o;
    json ratios = json::array();
    const auto steps = step_ratios(seq, mode(opt));
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const std::string r = format_rational(*steps[i]);
      o.text += "step " + std::to_string(i + 1) + " (" + conds[i].to_string() + "): ratio " + r + "\n";
      ratios.push_back(r);
    }
    o.result = json{{"accepted", true}, {"ratios", std::move(ratios)}};
    add_sequences(o, {seq});
    return o;
  } catch (const ThresholdError& e) {
    return threshold_failure(e, eps);
  }
}

Outcome prob_query(const Options& opt) {
  const auto doc = load_kb(opt.file, KbKind::Probability);
  const auto conds = conditions_of(opt, doc.vocab);
  const auto queries = formulas_over(opt.queries, doc.vocab);
  std::optional<Rational> eps;
  if (!opt.eps.empty()) eps = epsilon(opt.eps);

  PartitionSequence seq;
  try {
    seq = eps ? threshold(doc.sample_space(), *eps, conds, mode(opt)) : condition(doc.sample_space(), conds);
  } catch (const ThresholdError& e) {
    return threshold_failure(e, *eps);
  }
  Outcome o;
  json values = json::array();
  try {
    for (std::size_t i = 0; i < queries.size(); ++i) {
      const std::string value = format_rational(cond_prob(seq, queries[i]));
      o.text += value + "\n";
      values.push_back(json{{"query", opt.queries[i]}, {"value", value}});
    }
  } catch (const UndefinedConditionalError& e) {
    o.code = kNegative;
    o.text = std::string("undefined: ") + e.what() + "\n";
  }
  o.result["values"] = std::move(values);
  o.sequences.push_back(sequence_to_json(seq));
  return o;
}

Outcome inconsistent_poss(const PossibilityInconsistency& bad) {
  Outcome o;
  o.code = kNegative;
  o.text = "inconsistent: " + bad.message + "\n";
  o.result = json{{"consistent", false},
                  {"formula", bad.formula ? json(bad.formula->to_string()) : json(nullptr)},
                  {"degree", format_rational(bad.degree)},
                  {"message", bad.message}};
  return o;
}

Outcome poss_build(const Options& opt) {
  const auto doc = load_kb(opt.file, KbKind::Possibility);
  auto built = build_poss_sequence(doc.possibilistic_kb());
  if (auto* bad = std::get_if<PossibilityInconsistency>(&built)) return inconsistent_poss(*bad);
  Outcome o;
  o.result["consistent"] = true;
  add_sequences(o, {std::get<PartitionSequence>(built)});
  return o;
}

Outcome poss_query(const Options& opt) {
  const auto doc = load_kb(opt.file, KbKind::Possibility);
  const auto queries = formulas_over(opt.queries, doc.vocab);
  auto built = build_poss_sequence(doc.possibilistic_kb());
  if (auto* bad = std::get_if<PossibilityInconsistency>(&built)) return inconsistent_poss(*bad);
  const auto& seq = std::get<PartitionSequence>(built);
  Outcome o;
  json values = json::array();
  for (std::size_t i = 0; i < queries.size(); ++i) {
    const std::string pi = format_rational(possibility(seq, queries[i]));
    const std::string n = format_rational(necessity(seq, queries[i]));
    o.text += "Pi(" + opt.queries[i] + ") = " + pi + "  N(" + opt.queries[i] + ") = " + n + "\n";
    values.push_back(json{{"query", opt.queries[i]}, {"possibility", pi}, {"necessity", n}});
  }
  o.result["values"] = std::move(values);
  o.sequences.push_back(sequence_to_json(seq));
  return o;
}

Outcome poss_check(const Options& opt) {
  const auto doc = load_kb(opt.file, KbKind::Possibility);
  const auto seq = load_sequence(opt.sequence_file);
  return report_outcome(check_poss_sequence(doc.possibilistic_kb(), seq));
}

Outcome explain_cmd(const Options& opt) {
  const auto seq = load_sequence(opt.sequence_file);
  Outcome o;
  o.text = explain(seq);
  if (!o.text.empty() && o.text.back() != '\n') o.text += '\n';
  json chain = json::array();
  for (const auto& m : preference_view(seq).models) {
    json worlds = json::array();
    for (const auto& w : m) worlds.push_back(assignment_json(w, seq.vocab));
    chain.push_back(std::move(worlds));
  }
  o.result["preference_chain"] = std::move(chain);
  o.sequences.push_back(sequence_to_json(seq));
  return o;
}

json inputs_json(const Options& opt) {
  json in = json::object();
  if (!opt.file.empty()) in["file"] = opt.file;
  if (!opt.sequence_file.empty()) in["sequence"] = opt.sequence_file;
  if (!opt.names.empty()) in["names"] = opt.names;
  if (!opt.on.empty()) in["on"] = opt.on;
  if (!opt.eps.empty()) in["eps"] = opt.eps;
  if (!opt.queries.empty()) in["query"] = opt.queries;
  in["strict"] = opt.strict;
  return in;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Possible-world partition sequences for default, autoepistemic, probabilistic and possibilistic KBs",
               "worldseq"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "Print a JSON envelope {command, inputs, result, sequences}");
  app.add_flag("--strict", opt.strict, "Check sequence conditions in their literal reading");

  std::string command;
  std::function<Outcome(const Options&)> handler;
  auto bind = [&](CLI::App* sub, std::string name, Outcome (*fn)(const Options&)) {
    sub->callback([&command, &handler, name = std::move(name), fn] {
      command = name;
      handler = fn;
    });
  };
  auto kb_file = [&](CLI::App* sub) { sub->add_option("file", opt.file, "Knowledge-base file")->required(); };
  auto seq_file = [&](CLI::App* sub) {
    sub->add_option("sequence", opt.sequence_file, "Partition sequence JSON file")->required();
  };

  auto* worlds = app.add_subcommand("worlds", "List the possible worlds over the given constants");
  worlds->add_option("names", opt.names, "Propositional constants")->required();
  bind(worlds, "worlds", worlds_cmd);

  auto* dl = app.add_subcommand("default", "Reiter default logic (.dl)");
  dl->require_subcommand(1);
  auto* dl_ext = dl->add_subcommand("extensions", "List all extensions");
  kb_file(dl_ext);
  bind(dl_ext, "default extensions", default_extensions);
  auto* dl_seq = dl->add_subcommand("sequences", "Build default partition sequences");
  kb_file(dl_seq);
  dl_seq->add_flag("--all-orders", opt.all_orders, "Keep every distinct rule order, not one per extension");
  bind(dl_seq, "default sequences", default_sequences);
  auto* dl_check = dl->add_subcommand("check", "Check a sequence against a default theory");
  kb_file(dl_check);
  seq_file(dl_check);
  bind(dl_check, "default check", default_check);

  auto* ael = app.add_subcommand("ael", "Autoepistemic logic in normal form (.ael)");
  ael->require_subcommand(1);
  auto* ael_exp = ael->add_subcommand("expansions", "List all consistent stable expansions");
  kb_file(ael_exp);
  bind(ael_exp, "ael expansions", ael_expansions);
  auto* ael_seq = ael->add_subcommand("sequences", "Build autoepistemic partition sequences");
  kb_file(ael_seq);
  ael_seq->add_flag("--all-orders", opt.all_orders, "Keep every distinct premise order, not one per expansion");
  bind(ael_seq, "ael sequences", ael_sequences);
  auto* ael_chk = ael->add_subcommand("check", "Check a sequence against premises");
  kb_file(ael_chk);
  seq_file(ael_chk);
  bind(ael_chk, "ael check", ael_check);

  auto* prob = app.add_subcommand("prob", "Conditioning and thresholding (.prob)");
  prob->require_subcommand(1);
  auto on = [&](CLI::App* sub) {
    sub->add_option("--on", opt.on, "Condition, repeatable; applied in the order given");
  };
  auto* p_cond = prob->add_subcommand("condition", "Conditioning partition sequence");
  kb_file(p_cond);
  on(p_cond);
  bind(p_cond, "prob condition", prob_condition);
  auto* p_thr = prob->add_subcommand("threshold", "Threshold partition sequence");
  kb_file(p_thr);
  on(p_thr);
  p_thr->add_option("--eps", opt.eps, "Threshold, decimal or a/b")->required();
  bind(p_thr, "prob threshold", prob_threshold);
  auto* p_query = prob->add_subcommand("query", "Conditional (or thresholded, with --eps) probability");
  kb_file(p_query);
  on(p_query);
  p_query->add_option("--eps", opt.eps, "Threshold, decimal or a/b");
  p_query->add_option("--query", opt.queries, "Formula to evaluate, repeatable")->required();
  bind(p_query, "prob query", prob_query);

  auto* poss = app.add_subcommand("poss", "Possibility theory (.poss)");
  poss->require_subcommand(1);
  auto* ps_build = poss->add_subcommand("build", "Build the possibility partition sequence");
  kb_file(ps_build);
  bind(ps_build, "poss build", poss_build);
  auto* ps_query = poss->add_subcommand("query", "Possibility and necessity of formulas");
  kb_file(ps_query);
  ps_query->add_option("--query", opt.queries, "Formula to evaluate, repeatable")->required();
  bind(ps_query, "poss query", poss_query);
  auto* ps_check = poss->add_subcommand("check", "Check a sequence against possibilistic statements");
  kb_file(ps_check);
  seq_file(ps_check);
  bind(ps_check, "poss check", poss_check);

  auto* expl = app.add_subcommand("explain", "Show a sequence with provenance and its preference chain");
  seq_file(expl);
  bind(expl, "explain", explain_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  Outcome outcome;
  try {
    outcome = handler(opt);
  } catch (const InputFailure& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  if (opt.json) {
    const json envelope{{"command", command},
                        {"inputs", inputs_json(opt)},
                        {"result", std::move(outcome.result)},
                        {"sequences", std::move(outcome.sequences)}};
    out << envelope.dump(2) << "\n";
  } else {
    out << outcome.text;
  }
  return outcome.code;
}

}  // namespace worldseq::cli
