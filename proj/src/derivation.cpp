#include "aisr/derivation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

#include "aisr/syntax.hpp"

namespace aisr {

AxiomSet::AxiomSet(std::vector<NamedAxiom> axioms) {
  for (auto& a : axioms) add(std::move(a.name), std::move(a.identity));
}

void AxiomSet::add(std::string name, Identity identity) {
  if (find(name)) throw DerivationError("duplicate axiom name '" + name + "'");
  axioms_.push_back(NamedAxiom{std::move(name), std::move(identity)});
}

const NamedAxiom* AxiomSet::find(std::string_view name) const {
  for (const auto& a : axioms_)
    if (a.name == name) return &a;
  return nullptr;
}

namespace {

Term convert(const Term& t, bool commutative) { return Term(t.words(), commutative); }

const NamedAxiom& lookup(const AxiomSet& sigma, const std::string& name) {
  const auto* a = sigma.find(name);
  if (!a) throw DerivationError("unknown axiom '" + name + "'");
  return *a;
}

Term sandwich(const std::optional<Term>& left, Term middle, const std::optional<Term>& right,
              bool commutative) {
  if (left) middle = convert(*left, commutative) * middle;
  if (right) middle = middle * convert(*right, commutative);
  return middle;
}

Term instantiate(const DerivationStep& step, const AxiomSet& sigma, bool commutative,
                 bool source) {
  const auto& ax = lookup(sigma, step.axiom);
  const bool forward = step.direction == Direction::Forward;
  const Term& side = (forward == source) ? ax.identity.lhs() : ax.identity.rhs();
  for (const auto& x : content(ax.identity))
    if (!step.phi.count(x))
      throw DerivationError("substitution for axiom '" + step.axiom + "' does not map " +
                            x.name());
  Term image = convert(substitute(step.phi, convert(side, commutative)), commutative);
  Term out = sandwich(step.left_context, std::move(image), step.right_context, commutative);
  if (step.remainder) out = out.plus(*step.remainder);
  return out;
}

}  // namespace

Term step_source(const DerivationStep& step, const AxiomSet& sigma, bool commutative) {
  return instantiate(step, sigma, commutative, true);
}

Term step_target(const DerivationStep& step, const AxiomSet& sigma, bool commutative) {
  return instantiate(step, sigma, commutative, false);
}

StepResult apply_step(const Term& t, const DerivationStep& step, const AxiomSet& sigma) {
  StepResult r;
  Term source = step_source(step, sigma, t.commutative());
  if (source != t) {
    r.expected_source = std::move(source);
    return r;
  }
  r.term = step_target(step, sigma, t.commutative());
  return r;
}

ChainVerdict verify_chain(const DerivationChain& chain, const AxiomSet& sigma) {
  ChainVerdict v;
  Term current = chain.start;
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    try {
      auto r = apply_step(current, chain.steps[i], sigma);
      if (!r.ok()) {
        v.failing_index = i;
        v.message = "step " + std::to_string(i + 1) + ": expected source " +
                    to_string(*r.expected_source) + " but the current term is " +
                    to_string(current);
        return v;
      }
      current = std::move(*r.term);
    } catch (const std::exception& e) {
      v.failing_index = i;
      v.message = "step " + std::to_string(i + 1) + ": " + e.what();
      return v;
    }
  }
  const Term end = convert(chain.end, chain.start.commutative());
  if (current != end) {
    v.failing_index = chain.steps.size();
    v.message = "final term " + to_string(current) + " differs from the stated end " +
                to_string(end);
    return v;
  }
  v.accepted = true;
  v.message = "chain of " + std::to_string(chain.steps.size()) + " step(s) verified";
  return v;
}

// ---------------------------------------------------------------------------
// Search

std::string_view outcome_name(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::NoDerivationWithinBounds: return "no derivation within bounds";
    case SearchOutcome::BoundsExhausted: return "bounds exhausted";
  }
  return "?";
}

namespace {

// Contiguous factors, or sub-multisets in commutative mode, up to max_len.
void collect_factors(const Word& w, bool commutative, std::size_t max_len, WordSet& out) {
  const auto& ls = w.letters();
  if (!commutative) {
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t len = 1; len <= max_len && i + len <= ls.size(); ++len)
        out.insert(Word(std::vector<Variable>(ls.begin() + i, ls.begin() + i + len)));
    return;
  }
  std::vector<std::pair<Variable, std::size_t>> counts;
  for (const auto& x : content(w)) counts.emplace_back(x, occurrences(x, w));
  std::vector<std::size_t> pick(counts.size(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t len) {
    if (i == counts.size()) {
      if (len == 0) return;
      std::vector<Variable> letters;
      for (std::size_t j = 0; j < counts.size(); ++j)
        letters.insert(letters.end(), pick[j], counts[j].first);
      out.insert(Word(std::move(letters)));
      return;
    }
    for (std::size_t k = 0; k <= counts[i].second && len + k <= max_len; ++k) {
      pick[i] = k;
      rec(i + 1, len + k);
    }
  };
  rec(0, 0);
}

class Searcher {
 public:
  Searcher(const AxiomSet& sigma, const Identity& goal, const SearchBounds& bounds)
      : sigma_(sigma), goal_(goal), bounds_(bounds), commutative_(goal.commutative()) {
    WordSet pool;
    for (const auto* side : {&goal.lhs(), &goal.rhs()})
      for (const auto& w : side->words()) collect_factors(w, commutative_, bounds.max_len, pool);
    pool_.assign(pool.begin(), pool.end());

    for (const auto& w : pool_) images_.push_back(Term({w}, commutative_));
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> combos = [&](std::size_t from) {
      if (idx.size() >= 2) {
        WordSet ws;
        for (auto i : idx) ws.insert(pool_[i]);
        images_.push_back(Term(std::move(ws), commutative_));
      }
      if (idx.size() == bounds_.max_image_words) return;
      for (std::size_t i = from; i < pool_.size(); ++i) {
        idx.push_back(i);
        combos(i + 1);
        idx.pop_back();
      }
    };
    combos(0);

    contexts_.emplace_back();
    for (const auto& w : pool_) contexts_.push_back(Term({w}, commutative_));
  }

  SearchResult run() {
    SearchResult result{SearchOutcome::NoDerivationWithinBounds, std::nullopt, 0};
    const WordSet target = goal_.rhs().words();
    nodes_.push_back(Node{goal_.lhs().words(), std::nullopt, std::nullopt, 0});
    visited_.insert(nodes_.front().words);
    if (nodes_.front().words == target) return found(result, 0);

    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      const std::size_t id = queue.front();
      queue.pop_front();
      if (nodes_[id].depth >= bounds_.max_depth) {
        hit_bound_ = true;
        continue;
      }
      ++result.explored;
      const Term t(nodes_[id].words, commutative_);
      std::optional<std::size_t> hit;
      expand(t, [&](WordSet next, DerivationStep step) {
        if (hit || !visited_.insert(next).second) return;
        const bool done = next == target;
        nodes_.push_back(Node{std::move(next), id, std::move(step), nodes_[id].depth + 1});
        if (done) hit = nodes_.size() - 1;
        queue.push_back(nodes_.size() - 1);
      });
      if (hit) return found(result, *hit);
    }
    if (hit_bound_) result.outcome = SearchOutcome::BoundsExhausted;
    return result;
  }

 private:
  struct Node {
    WordSet words;
    std::optional<std::size_t> parent;
    std::optional<DerivationStep> step;
    std::size_t depth;
  };

  SearchResult& found(SearchResult& result, std::size_t id) {
    std::vector<DerivationStep> steps;
    for (std::size_t cur = id; nodes_[cur].parent; cur = *nodes_[cur].parent)
      steps.push_back(*nodes_[cur].step);
    std::reverse(steps.begin(), steps.end());
    DerivationChain chain{goal_.lhs(), std::move(steps), goal_.rhs()};
    if (!verify_chain(chain, sigma_).accepted)
      throw std::logic_error("search produced a chain that does not verify");
    result.outcome = SearchOutcome::Found;
    result.chain = std::move(chain);
    return result;
  }

  bool within_bounds(const WordSet& ws) const {
    if (ws.size() > bounds_.max_words) return false;
    return std::all_of(ws.begin(), ws.end(),
                       [&](const Word& w) { return w.length() <= bounds_.max_len; });
  }

  template <typename Emit>
  void expand(const Term& t, Emit&& emit) {
    WordSet factors;
    for (const auto& w : t.words())
      collect_factors(w, commutative_, std::max<std::size_t>(w.length(), 1), factors);

    for (const auto& ax : sigma_.axioms()) {
      const std::vector<Variable> vars = [&] {
        auto vs = content(ax.identity);
        return std::vector<Variable>(vs.begin(), vs.end());
      }();
      for (Direction dir : {Direction::Forward, Direction::Backward}) {
        const bool fwd = dir == Direction::Forward;
        const Term from = convert(fwd ? ax.identity.lhs() : ax.identity.rhs(), commutative_);
        const Term to = convert(fwd ? ax.identity.rhs() : ax.identity.lhs(), commutative_);

        std::vector<std::size_t> choice(vars.size(), 0);
        for (bool more = !images_.empty(); more;) {
          Substitution phi;
          for (std::size_t i = 0; i < vars.size(); ++i) phi.emplace(vars[i], images_[choice[i]]);
          try_substitution(t, factors, ax.name, dir, phi, from, to, emit);

          more = false;
          for (std::size_t i = choice.size(); i-- > 0;) {
            if (++choice[i] < images_.size()) {
              more = true;
              break;
            }
            choice[i] = 0;
          }
        }
      }
    }
  }

  template <typename Emit>
  void try_substitution(const Term& t, const WordSet& factors, const std::string& axiom,
                        Direction dir, const Substitution& phi, const Term& from, const Term& to,
                        Emit& emit) {
    const Term image = substitute(phi, from);
    for (const auto& w : image.words())
      if (!factors.count(w)) return;
    std::optional<Term> image_to;

    for (const auto& left : contexts_) {
      for (const auto& right : contexts_) {
        const Term source = sandwich(left, image, right, commutative_);
        if (!std::includes(t.words().begin(), t.words().end(), source.words().begin(),
                           source.words().end()))
          continue;
        if (!image_to) image_to = substitute(phi, to);
        const Term target = sandwich(left, *image_to, right, commutative_);

        WordSet rest;
        std::set_difference(t.words().begin(), t.words().end(), source.words().begin(),
                            source.words().end(), std::inserter(rest, rest.end()));
        const std::vector<Word> kept(source.words().begin(), source.words().end());
        // The remainder may also repeat words of the source.
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << kept.size()); ++mask) {
          WordSet remainder = rest;
          for (std::size_t i = 0; i < kept.size(); ++i)
            if (mask >> i & 1) remainder.insert(kept[i]);
          WordSet next = target.words();
          next.insert(remainder.begin(), remainder.end());
          if (next == t.words()) continue;
          if (!within_bounds(next)) {
            hit_bound_ = true;
            continue;
          }
          DerivationStep step{axiom, dir, phi, left, right, std::nullopt};
          if (!remainder.empty()) step.remainder = std::move(remainder);
          emit(std::move(next), std::move(step));
        }
      }
    }
  }

  const AxiomSet& sigma_;
  const Identity& goal_;
  SearchBounds bounds_;
  bool commutative_;
  std::vector<Word> pool_;
  std::vector<Term> images_;
  std::vector<std::optional<Term>> contexts_;
  std::vector<Node> nodes_;
  std::set<WordSet> visited_;
  bool hit_bound_ = false;
};

}  // namespace

SearchResult search_derivation(const AxiomSet& sigma, const Identity& goal,
                               const SearchBounds& bounds) {
  if (bounds.max_image_words == 0 || bounds.max_len == 0)
    throw std::invalid_argument("search bounds must be positive");
  return Searcher(sigma, goal, bounds).run();
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_doc(std::string_view text, const char* what) {
  try {
    auto doc = json::parse(text);
    if (!doc.is_object()) throw DerivationError(std::string(what) + " must be a JSON object");
    return doc;
  } catch (const json::parse_error& e) {
    throw DerivationError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

std::string get_string(const json& obj, const char* key, const char* what) {
  if (!obj.contains(key) || !obj[key].is_string())
    throw DerivationError(std::string(what) + " needs a string field '" + key + "'");
  return obj[key].get<std::string>();
}

bool get_commutative(const json& doc) {
  if (!doc.contains("commutative")) return false;
  if (!doc["commutative"].is_boolean()) throw DerivationError("'commutative' must be a boolean");
  return doc["commutative"].get<bool>();
}

Term term_field(const json& obj, const char* key, bool commutative, const char* what) {
  const auto text = get_string(obj, key, what);
  try {
    return parse_term(text, commutative);
  } catch (const ParseError& e) {
    throw DerivationError(std::string(what) + " field '" + key + "': " + e.what());
  }
}

}  // namespace

AxiomSet axioms_from_json(std::string_view text) {
  const auto doc = parse_doc(text, "axiom file");
  const bool comm = get_commutative(doc);
  if (!doc.contains("axioms") || !doc["axioms"].is_array())
    throw DerivationError("axiom file needs an array field 'axioms'");
  AxiomSet sigma;
  for (const auto& entry : doc["axioms"]) {
    if (!entry.is_object()) throw DerivationError("each axiom must be an object");
    auto name = get_string(entry, "name", "axiom");
    const auto src = get_string(entry, "identity", "axiom");
    try {
      sigma.add(std::move(name), parse_identity(src, comm));
    } catch (const ParseError& e) {
      throw DerivationError("axiom '" + get_string(entry, "name", "axiom") + "': " + e.what());
    }
  }
  return sigma;
}

std::string to_json(const AxiomSet& sigma) {
  ordered_json doc;
  doc["commutative"] = !sigma.empty() && sigma.axioms().front().identity.commutative();
  doc["axioms"] = ordered_json::array();
  for (const auto& a : sigma.axioms())
    doc["axioms"].push_back({{"name", a.name}, {"identity", to_string(a.identity)}});
  return doc.dump(2) + "\n";
}

DerivationChain chain_from_json(std::string_view text) {
  const auto doc = parse_doc(text, "chain file");
  const bool comm = get_commutative(doc);
  Term start = term_field(doc, "start", comm, "chain");
  Term end = term_field(doc, "end", comm, "chain");
  std::vector<DerivationStep> steps;
  if (doc.contains("steps")) {
    if (!doc["steps"].is_array()) throw DerivationError("'steps' must be an array");
    for (const auto& s : doc["steps"]) {
      if (!s.is_object()) throw DerivationError("each step must be an object");
      DerivationStep step;
      step.axiom = get_string(s, "axiom", "step");
      const auto dir = s.contains("direction") ? get_string(s, "direction", "step") : "forward";
      if (dir == "forward")
        step.direction = Direction::Forward;
      else if (dir == "backward")
        step.direction = Direction::Backward;
      else
        throw DerivationError("step direction must be 'forward' or 'backward'");
      if (s.contains("substitution")) {
        if (!s["substitution"].is_object())
          throw DerivationError("'substitution' must map variable names to terms");
        for (const auto& [name, value] : s["substitution"].items()) {
          if (!value.is_string()) throw DerivationError("substitution images must be strings");
          try {
            step.phi.emplace(Variable(name), parse_term(value.get<std::string>(), comm));
          } catch (const std::exception& e) {
            throw DerivationError("substitution for '" + name + "': " + e.what());
          }
        }
      }
      if (s.contains("left_context"))
        step.left_context = term_field(s, "left_context", comm, "step");
      if (s.contains("right_context"))
        step.right_context = term_field(s, "right_context", comm, "step");
      if (s.contains("remainder"))
        step.remainder = term_field(s, "remainder", comm, "step").words();
      steps.push_back(std::move(step));
    }
  }
  return DerivationChain{std::move(start), std::move(steps), std::move(end)};
}

std::string to_json(const DerivationChain& chain) {
  ordered_json doc;
  doc["commutative"] = chain.start.commutative();
  doc["start"] = to_string(chain.start);
  doc["steps"] = ordered_json::array();
  for (const auto& s : chain.steps) {
    ordered_json step;
    step["axiom"] = s.axiom;
    step["direction"] = s.direction == Direction::Forward ? "forward" : "backward";
    ordered_json phi = ordered_json::object();
    for (const auto& [x, t] : s.phi) phi[x.name()] = to_string(t);
    step["substitution"] = std::move(phi);
    if (s.left_context) step["left_context"] = to_string(*s.left_context);
    if (s.right_context) step["right_context"] = to_string(*s.right_context);
    if (s.remainder && !s.remainder->empty()) step["remainder"] = to_string(*s.remainder);
    doc["steps"].push_back(std::move(step));
  }
  doc["end"] = to_string(chain.end);
  return doc.dump(2) + "\n";
}

}  // namespace aisr
