#include "aisr/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aisr/algebra.hpp"
#include "aisr/deciders.hpp"
#include "aisr/derivation.hpp"
#include "aisr/syntax.hpp"
#include "aisr/terms.hpp"
#include "aisr/witness.hpp"

namespace aisr::cli {

namespace {

using nlohmann::ordered_json;

/// Usage and structural problems; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_file(const std::string& path) {
  std::error_code ec;
  return std::filesystem::is_regular_file(path, ec);
}

FiniteSemiring load_semiring(const std::string& source) {
  const auto names = builtin_names();
  if (std::find(names.begin(), names.end(), source) != names.end()) return builtin(source);
  if (!is_file(source)) throw UsageError("'" + source + "' is neither a built-in semiring nor a file");
  auto r = semiring_from_json(read_file(source));
  if (!r.ok())
    throw UsageError("'" + source + "' is not an ai-semiring: " + describe(r.elements, *r.violation));
  return std::move(*r.semiring);
}

/// Identity text, or the first nonblank line of a file.
std::string identity_text(const std::string& arg) {
  if (!is_file(arg)) return arg;
  std::istringstream in(read_file(arg));
  for (std::string line; std::getline(in, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  throw UsageError("'" + arg + "' contains no identity");
}

ordered_json verdict_json(const Verdict& v, const FiniteSemiring* s) {
  ordered_json j;
  j["holds"] = v.holds;
  j["reason"] = v.reason;
  if (v.witness && s) {
    ordered_json w = ordered_json::object();
    for (const auto& [x, e] : *v.witness) w[x.name()] = s->name(e);
    j["witness"] = std::move(w);
  }
  if (!v.components.empty()) {
    j["components"] = ordered_json::array();
    for (const auto& c : v.components)
      j["components"].push_back({{"identity", to_string(c.component.identity())},
                                 {"trivial", c.component.trivial},
                                 {"holds", c.holds},
                                 {"detail", c.detail}});
  }
  return j;
}

ordered_json family_json(const DeltaFamily& family) {
  ordered_json arr = ordered_json::array();
  for (const auto& z : family) {
    ordered_json set = ordered_json::array();
    for (const auto& x : z) set.push_back(x.name());
    arr.push_back(std::move(set));
  }
  return arr;
}

const char* holds_word(bool holds) { return holds ? "holds" : "fails"; }

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string semiring;
  std::string identity;
  std::string method = "both";
  bool commutative = false;
  bool json = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const auto s = load_semiring(a.semiring);
  const auto id = parse_identity(identity_text(a.identity), a.commutative);

  std::optional<Verdict> by_oracle, by_syntax;
  if (a.method == "oracle" || a.method == "both") by_oracle = holds_bruteforce(s, id);
  if (a.method == "syntactic" || a.method == "both") {
    auto d = syntactic_decider(s);
    if (!d) throw UsageError("no syntactic decider is known for semiring '" + a.semiring + "'");
    by_syntax = (*d)(id);
  }
  const bool agree = !(by_oracle && by_syntax) || by_oracle->holds == by_syntax->holds;
  const bool holds = (!by_oracle || by_oracle->holds) && (!by_syntax || by_syntax->holds);

  if (a.json) {
    ordered_json j;
    j["identity"] = to_string(id);
    j["semiring"] = a.semiring;
    if (by_oracle) j["oracle"] = verdict_json(*by_oracle, &s);
    if (by_syntax) j["syntactic"] = verdict_json(*by_syntax, &s);
    if (by_oracle && by_syntax) j["agree"] = agree;
    out << j.dump(2) << "\n";
  } else {
    out << "identity: " << to_string(id) << "\n";
    out << "semiring: " << a.semiring << "\n";
    if (by_oracle) out << "oracle: " << holds_word(by_oracle->holds) << " (" << by_oracle->reason << ")\n";
    if (by_syntax) {
      out << "syntactic: " << holds_word(by_syntax->holds) << " (" << by_syntax->reason << ")\n";
      for (const auto& c : by_syntax->components)
        out << "  " << (c.holds ? "ok   " : "FAIL ") << to_string(c.component.identity())
            << (c.component.trivial ? " [trivial]" : "") << ": " << c.detail << "\n";
    }
    if (by_oracle && by_syntax) out << "methods agree: " << (agree ? "yes" : "NO") << "\n";
  }
  return holds && agree ? kOk : kRejected;
}

int cmd_delta(const std::string& text, bool commutative, bool json, std::ostream& out) {
  const auto t = parse_term(text, commutative);
  const auto d = delta_sets(t);
  if (json) {
    ordered_json j;
    j["term"] = to_string(t);
    j["delta"] = family_json(d);
    out << j.dump(2) << "\n";
  } else {
    out << to_string(d) << "\n";
  }
  return kOk;
}

int cmd_witness(std::size_t n, bool use_oracle, std::uint64_t cap, bool json, std::ostream& out) {
  if (n < 1) throw UsageError("--n must be at least 1");
  const auto w = make_witness(n);
  WitnessOptions opts;
  opts.oracle = use_oracle;
  opts.oracle_cap = cap;
  const auto report = check_witness_facts(w, opts);
  if (json) {
    ordered_json j;
    j["n"] = n;
    j["identity"] = to_string(w.identity());
    j["checks"] = ordered_json::array();
    for (const auto& c : report.checks)
      j["checks"].push_back(
          {{"name", c.name}, {"status", std::string(status_name(c.status))}, {"detail", c.detail}});
    j["passed"] = report.passed();
    out << j.dump(2) << "\n";
  } else {
    out << "witness n = " << n << ": " << to_string(w.identity()) << "\n";
    for (const auto& c : report.checks)
      out << "  " << c.name << ": " << status_name(c.status) << " (" << c.detail << ")\n";
    out << "result: " << (report.passed() ? "pass" : "FAIL") << "\n";
  }
  return report.passed() ? kOk : kRejected;
}

std::string cycle_text(const std::vector<Variable>& cycle) {
  std::string s;
  for (const auto& v : cycle) s += v.name() + " - ";
  return s + cycle.front().name();
}

int cmd_axiom_check(const std::string& identity, const std::string& term, bool commutative,
                    bool json, std::ostream& out) {
  std::optional<Term> a, b;
  if (!identity.empty()) {
    const auto id = parse_identity(identity_text(identity), commutative);
    a = id.lhs();
    b = id.rhs();
  } else if (!term.empty()) {
    a = parse_term(term, commutative);
  } else {
    throw UsageError("axiom-check needs --identity or --term");
  }
  const auto r = check_axiom_conditions(*a, b);

  if (json) {
    ordered_json j;
    j["A"] = to_string(*a);
    if (b) j["B"] = to_string(*b);
    j["a_short_words"] = r.short_words;
    j["b_linear"] = r.linear;
    j["c_antichain"] = r.antichain;
    j["d_no_odd_cycle"] = r.no_odd_cycle;
    if (r.long_word) j["long_word"] = to_string(*r.long_word);
    if (r.nonlinear_word) j["nonlinear_word"] = to_string(*r.nonlinear_word);
    if (r.comparable_pair)
      j["comparable_pair"] = {to_string(r.comparable_pair->first),
                              to_string(r.comparable_pair->second)};
    if (r.odd_cycle) {
      ordered_json cyc = ordered_json::array();
      for (const auto& v : *r.odd_cycle) cyc.push_back(v.name());
      j["odd_cycle"] = std::move(cyc);
    }
    j["delta"] = family_json(r.delta);
    j["every_variable_covered"] = r.every_variable_covered;
    if (r.b_subset_of_a) j["b_subset_of_a"] = *r.b_subset_of_a;
    out << j.dump(2) << "\n";
  } else {
    auto line = [&](const char* label, bool ok, const std::string& evidence) {
      out << label << ": " << (ok ? "pass" : "FAIL");
      if (!ok && !evidence.empty()) out << " (" << evidence << ")";
      out << "\n";
    };
    out << "A: " << to_string(*a) << "\n";
    if (b) out << "B: " << to_string(*b) << "\n";
    line("(a) every word has length <= 2", r.short_words,
         r.long_word ? to_string(*r.long_word) : "");
    line("(b) every word is linear", r.linear,
         r.nonlinear_word ? to_string(*r.nonlinear_word) : "");
    line("(c) no word lies below another", r.antichain,
         r.comparable_pair ? to_string(r.comparable_pair->first) + " <= " +
                                 to_string(r.comparable_pair->second)
                           : "");
    line("(d) no odd cycle", r.no_odd_cycle,
         r.odd_cycle ? "cycle " + cycle_text(*r.odd_cycle) : "");
    out << "δ(A): " << to_string(r.delta) << "\n";
    out << "every variable of A lies in a member of δ(A): "
        << (r.every_variable_covered ? "yes" : "no (" + r.uncovered->name() + ")") << "\n";
    if (r.b_subset_of_a) out << "B ⊆ A: " << (*r.b_subset_of_a ? "yes" : "no") << "\n";
  }
  return r.all_conditions() ? kOk : kRejected;
}

int cmd_derive_verify(const std::string& axioms, const std::string& chain, bool json,
                      std::ostream& out) {
  const auto sigma = axioms_from_json(read_file(axioms));
  const auto c = chain_from_json(read_file(chain));
  const auto v = verify_chain(c, sigma);
  if (json) {
    ordered_json j;
    j["accepted"] = v.accepted;
    if (v.failing_index) j["failing_index"] = *v.failing_index;
    j["message"] = v.message;
    out << j.dump(2) << "\n";
  } else {
    out << (v.accepted ? "accepted: " : "rejected: ") << v.message << "\n";
  }
  return v.accepted ? kOk : kRejected;
}

int cmd_derive_search(const std::string& axioms, const std::string& goal, bool commutative,
                      const SearchBounds& bounds, bool json, std::ostream& out) {
  const auto sigma = axioms_from_json(read_file(axioms));
  const auto id = parse_identity(identity_text(goal), commutative);
  const auto r = search_derivation(sigma, id, bounds);
  std::ostringstream qual;
  qual << "depth <= " << bounds.max_depth << ", words <= " << bounds.max_words
       << ", length <= " << bounds.max_len << ", image words <= " << bounds.max_image_words;
  if (json) {
    ordered_json j;
    j["outcome"] = std::string(outcome_name(r.outcome));
    j["bounds"] = {{"max_depth", bounds.max_depth},
                   {"max_words", bounds.max_words},
                   {"max_len", bounds.max_len},
                   {"max_image_words", bounds.max_image_words}};
    j["explored"] = r.explored;
    if (r.chain) j["chain"] = ordered_json::parse(to_json(*r.chain));
    out << j.dump(2) << "\n";
  } else if (r.chain) {
    out << "found: derivation with " << r.chain->steps.size() << " step(s)\n" << to_json(*r.chain);
  } else {
    out << "absent: " << outcome_name(r.outcome) << " (" << qual.str() << "); explored "
        << r.explored << " term(s)\n";
  }
  return r.chain ? kOk : kRejected;
}

int cmd_validate(const std::string& source, bool json, std::ostream& out) {
  const auto names = builtin_names();
  ValidationResult r;
  if (std::find(names.begin(), names.end(), source) != names.end()) {
    r.semiring = builtin(source);
  } else {
    if (!is_file(source)) throw UsageError("'" + source + "' is neither a built-in semiring nor a file");
    r = semiring_from_json(read_file(source));
  }
  if (json) {
    ordered_json j;
    j["valid"] = r.ok();
    if (r.ok()) {
      j["elements"] = r.semiring->elements();
    } else {
      j["axiom"] = std::string(axiom_name(r.violation->axiom));
      j["violation"] = describe(r.elements, *r.violation);
    }
    out << j.dump(2) << "\n";
  } else if (r.ok()) {
    out << "valid ai-semiring with " << r.semiring->size() << " element(s)\n";
  } else {
    out << "invalid: " << describe(r.elements, *r.violation) << "\n";
  }
  return r.ok() ? kOk : kRejected;
}

struct CrossvalArgs {
  std::string semiring;
  std::string decider = "auto";
  GeneratorConfig config;
  bool json = false;
};

int cmd_crossval(const CrossvalArgs& a, std::ostream& out) {
  const auto s = load_semiring(a.semiring);
  std::optional<Decider> d;
  if (a.decider == "lift") {
    auto split = split_adjoined_zero(s);
    if (!split) throw UsageError("semiring '" + a.semiring + "' has no adjoined zero to lift over");
    auto base = oracle(std::move(split->base));
    d = [base](const Identity& id) { return holds_s0_lift(base, id); };
  } else {
    d = syntactic_decider(s);
    if (!d) throw UsageError("no syntactic decider is known for semiring '" + a.semiring + "'");
  }
  const auto r = cross_validate(s, *d, a.config);
  const auto& c = a.config;
  if (a.json) {
    ordered_json j;
    j["semiring"] = a.semiring;
    j["decider"] = a.decider;
    j["samples"] = c.samples;
    j["seed"] = c.seed;
    j["max_vars"] = c.max_vars;
    j["max_words"] = c.max_words;
    j["max_len"] = c.max_len;
    j["commutative"] = c.commutative;
    j["holding"] = r.holding;
    j["disagreements"] = ordered_json::array();
    for (const auto& dis : r.disagreements)
      j["disagreements"].push_back({{"identity", to_string(dis.identity)},
                                    {"syntactic", dis.syntactic},
                                    {"oracle", dis.oracle}});
    out << j.dump(2) << "\n";
  } else {
    out << "semiring: " << a.semiring << " (decider: " << a.decider << ")\n";
    out << "samples: " << c.samples << " (seed " << c.seed << ", vars <= " << c.max_vars
        << ", words <= " << c.max_words << ", length <= " << c.max_len
        << (c.commutative ? ", commutative" : "") << ")\n";
    out << "holding per oracle: " << r.holding << "\n";
    out << "disagreements: " << r.disagreements.size() << "\n";
    for (const auto& dis : r.disagreements)
      out << "  " << to_string(dis.identity) << ": syntactic " << holds_word(dis.syntactic)
          << ", oracle " << holds_word(dis.oracle) << "\n";
  }
  return r.disagreements.empty() ? kOk : kRejected;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Identity checking in finite additively idempotent semirings", "aisr"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* sc_check = app.add_subcommand("check", "Decide an identity in a semiring");
  sc_check->add_option("--semiring", check.semiring, "Built-in name (S7, S7_0, D2, trivial) or JSON file")->required();
  sc_check->add_option("--identity", check.identity, "Identity text or a file holding it")->required();
  sc_check->add_option("--method", check.method, "oracle, syntactic or both")
      ->check(CLI::IsMember({"oracle", "syntactic", "both"}));
  sc_check->add_flag("--commutative", check.commutative, "Treat words as commutative");
  sc_check->add_flag("--json", check.json, "Machine-readable output");

  std::string delta_term;
  bool delta_comm = false, delta_json = false;
  auto* sc_delta = app.add_subcommand("delta", "Print the δ-sets of a term");
  sc_delta->add_option("--term", delta_term, "Term text")->required();
  sc_delta->add_flag("--commutative", delta_comm);
  sc_delta->add_flag("--json", delta_json);

  std::size_t wit_n = 1;
  bool wit_oracle = false, wit_json = false;
  std::uint64_t wit_cap = kDefaultBruteForceCap;
  auto* sc_wit = app.add_subcommand("witness", "Check the odd-cycle witness identity for n");
  sc_wit->add_option("--n", wit_n, "Witness index (>= 1)")->required();
  sc_wit->add_flag("--oracle", wit_oracle, "Also run the brute-force oracle in S7_0");
  sc_wit->add_option("--oracle-cap", wit_cap, "Largest number of assignments to enumerate");
  sc_wit->add_flag("--json", wit_json);

  std::string ax_identity, ax_term;
  bool ax_comm = false, ax_json = false;
  auto* sc_ax = app.add_subcommand("axiom-check", "Conditions (a)-(d) on an axiom A ≈ B");
  sc_ax->add_option("--identity", ax_identity, "Axiom A == B");
  sc_ax->add_option("--term", ax_term, "A alone");
  sc_ax->add_flag("--commutative", ax_comm);
  sc_ax->add_flag("--json", ax_json);

  auto* sc_derive = app.add_subcommand("derive", "Verify or search derivations");
  sc_derive->require_subcommand(1);
  std::string dv_axioms, dv_chain;
  bool dv_json = false;
  auto* sc_verify = sc_derive->add_subcommand("verify", "Verify a derivation chain");
  sc_verify->add_option("--axioms", dv_axioms, "Axiom JSON file")->required();
  sc_verify->add_option("--chain", dv_chain, "Chain JSON file")->required();
  sc_verify->add_flag("--json", dv_json);

  std::string ds_axioms, ds_goal;
  bool ds_comm = false, ds_json = false;
  SearchBounds bounds;
  auto* sc_search = sc_derive->add_subcommand("search", "Bounded breadth-first derivation search");
  sc_search->add_option("--axioms", ds_axioms, "Axiom JSON file")->required();
  sc_search->add_option("--goal", ds_goal, "Goal identity")->required();
  sc_search->add_option("--max-depth", bounds.max_depth, "Longest chain in steps");
  sc_search->add_option("--max-words", bounds.max_words, "Most words per term");
  sc_search->add_option("--max-len", bounds.max_len, "Longest word");
  sc_search->add_option("--max-image-words", bounds.max_image_words,
                        "Most words per substitution image");
  sc_search->add_flag("--commutative", ds_comm);
  sc_search->add_flag("--json", ds_json);

  std::string val_semiring;
  bool val_json = false;
  auto* sc_val = app.add_subcommand("validate", "Check the ai-semiring axioms of a table file");
  sc_val->add_option("--semiring", val_semiring, "JSON file or built-in name")->required();
  sc_val->add_flag("--json", val_json);

  CrossvalArgs cv;
  auto* sc_cv = app.add_subcommand("crossval", "Compare the syntactic decider with brute force");
  sc_cv->add_option("--semiring", cv.semiring, "Built-in name or JSON file")->required();
  sc_cv->add_option("--decider", cv.decider, "auto, or lift for the S^0 lift over brute force")
      ->check(CLI::IsMember({"auto", "lift"}));
  sc_cv->add_option("--samples", cv.config.samples);
  sc_cv->add_option("--seed", cv.config.seed);
  sc_cv->add_option("--max-vars", cv.config.max_vars)->check(CLI::PositiveNumber);
  sc_cv->add_option("--max-words", cv.config.max_words)->check(CLI::PositiveNumber);
  sc_cv->add_option("--max-len", cv.config.max_len)->check(CLI::PositiveNumber);
  sc_cv->add_flag("--commutative", cv.config.commutative);
  sc_cv->add_flag("--json", cv.json);

  std::vector<const char*> argv{"aisr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*sc_check) return cmd_check(check, out);
    if (*sc_delta) return cmd_delta(delta_term, delta_comm, delta_json, out);
    if (*sc_wit) return cmd_witness(wit_n, wit_oracle, wit_cap, wit_json, out);
    if (*sc_ax) return cmd_axiom_check(ax_identity, ax_term, ax_comm, ax_json, out);
    if (*sc_verify) return cmd_derive_verify(dv_axioms, dv_chain, dv_json, out);
    if (*sc_search)
      return cmd_derive_search(ds_axioms, ds_goal, ds_comm, bounds, ds_json, out);
    if (*sc_val) return cmd_validate(val_semiring, val_json, out);
    if (*sc_cv) return cmd_crossval(cv, out);
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace aisr::cli
