#include "affbraid/cli.hpp"

#include "affbraid/braid_word.hpp"
#include "affbraid/closure.hpp"
#include "affbraid/decomposition.hpp"
#include "affbraid/equality.hpp"
#include "affbraid/errors.hpp"
#include "affbraid/morphisms.hpp"
#include "affbraid/moves.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace affbraid::cli {

namespace {

using nlohmann::json;

struct Outcome {
  int code = kTrue;
  std::string text;
  json result = json::object();
  std::optional<std::string> certificate;
};

struct Budgets {
  std::size_t max_endo_len = kDefaultMaxWordLength;
  int max_strands = kMaxTLStrands;
  int max_depth = 4;
  int max_rank = -1; // search: defaults to one above the larger input rank

  EqualityOptions equality() const { return {max_endo_len}; }
  ClosureOptions closure() const { return {max_strands}; }
};

BraidWord read_word(const std::string& text, std::optional<GroupKind> kind, const char* verb,
                    Presentation p = Presentation::Formal) {
  BraidWord w = parse(text, ParseOptions{p});
  if (kind && w.kind() != *kind) {
    throw DomainError(std::string(verb) + " expects a word of kind " +
                      std::string(to_string(*kind)) + ", got " + std::string(to_string(w.kind())));
  }
  return w;
}

json invariants_json(const ClosureInvariants& c) {
  json j{{"strands", c.strands}, {"components", c.components}, {"exponent_sum", c.exponent_sum}};
  j["normalized_bracket"] = c.normalized_bracket ? json(c.normalized_bracket->to_string()) : json();
  return j;
}

std::string invariants_text(const ClosureInvariants& c) {
  return "strands " + std::to_string(c.strands) + "\ncomponents " + std::to_string(c.components) +
         "\nexponent_sum " + std::to_string(c.exponent_sum) + "\nnormalized_bracket " +
         (c.normalized_bracket ? c.normalized_bracket->to_string() : std::string("absent"));
}

GroupKind kind_from_name(const std::string& name) {
  if (name == "A") return GroupKind::A;
  if (name == "B") return GroupKind::B;
  if (name == "AT") return GroupKind::AffineA;
  throw DomainError("unknown group kind '" + name + "' (expected A, B or AT)");
}

Presentation presentation_from_name(const std::string& name) {
  if (name == "formal") return Presentation::Formal;
  if (name == "parabolic") return Presentation::Parabolic;
  if (name == "split") return Presentation::Split;
  throw DomainError("unknown presentation '" + name + "'");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for A-type, B-type and affine braid groups", "affbraid"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  Budgets budgets;
  app.add_flag("--json", as_json, "Emit a JSON object instead of text");
  app.add_option("--max-endo-len", budgets.max_endo_len, "Free-word length budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-strands", budgets.max_strands, "Strand budget for bracket evaluation")
      ->check(CLI::Range(1, kMaxTLStrands));
  app.add_option("--max-depth", budgets.max_depth, "Depth budget for search")
      ->check(CLI::NonNegativeNumber);

  std::string w1;
  std::string w2;
  int n = 0;
  int e = 1;
  std::string name;
  bool to = false;
  bool from = false;
  std::string kind_name;
  std::string presentation_name = "formal";

  auto* eq = app.add_subcommand("eq", "Decide whether two words are equal");
  eq->add_option("x", w1)->required();
  eq->add_option("y", w2)->required();

  auto* member = app.add_subcommand("member", "Affine membership of a B word by t-exponent sum");
  member->add_option("word", w1)->required();

  auto* decompose = app.add_subcommand("decompose", "Split a B word as lambda * phi^k");
  decompose->add_option("word", w1)->required();

  auto* parabolic = app.add_subcommand("parabolic", "Convert AT words to/from the a3 alphabet");
  auto* to_flag = parabolic->add_flag("--to", to, "formal -> parabolic");
  parabolic->add_flag("--from", from, "parabolic -> formal")->excludes(to_flag);
  parabolic->add_option("word", w1)->required();

  auto* kernel = app.add_subcommand("kernel", "Rewrite a kernel element of alpha over F_0..F_n");
  kernel->add_option("word", w1)->required();

  auto* schreier = app.add_subcommand("schreier", "Rewrite a zero-sum F-word over g[j,i]");
  schreier->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);
  schreier->add_option("fword", w1, "F-word such as \"F0 F1^-1\"")->required();

  auto* ne = app.add_subcommand("ne", "Split an AT word along B(A_n) x| N_e");
  ne->add_option("word", w1)->required();

  auto* map = app.add_subcommand("map", "Apply a morphism");
  map->add_option("--m", name, "Morphism name")->required();
  map->add_option("--n", n, "Morphism index")->required();
  map->add_option("--e", e, "Exponent (dynkin only)");
  map->add_option("word", w1)->required();

  auto* dynkin = app.add_subcommand("dynkin", "Apply the Dynkin automorphism");
  dynkin->add_option("--e", e, "Exponent");
  dynkin->add_option("word", w1)->required();

  auto* dominating = app.add_subcommand("dominating", "Print the dominating element D_n");
  dominating->add_option("--n", n, "Rank")->required();

  auto* diagram = app.add_subcommand("diagram", "Check a commuting identity on a word");
  diagram->add_option("--name", name, "Identity name")->required();
  diagram->add_option("--n", n, "Index")->required();
  diagram->add_option("word", w1)->required();

  auto* close = app.add_subcommand("close", "Closure invariants of an A word");
  close->add_option("word", w1)->required();

  auto* affine_close_cmd = app.add_subcommand("affine-close", "Closure invariants of an AT word");
  affine_close_cmd->add_option("word", w1)->required();

  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket of the closure of an A word");
  bracket->add_option("word", w1)->required();

  auto* moves = app.add_subcommand("moves", "Markov derivation for the closure proposition");
  moves->add_option("--which", name, "dynkin or append_a")
      ->required()
      ->check(CLI::IsMember({"dynkin", "append_a"}));
  moves->add_option("word", w1)->required();

  auto* search = app.add_subcommand("search", "Bounded search for a Markov equivalence");
  search->add_option("--max-rank", budgets.max_rank, "Rank budget")->check(CLI::NonNegativeNumber);
  search->add_option("x", w1)->required();
  search->add_option("y", w2)->required();

  auto* replay_cmd = app.add_subcommand("replay", "Check a serialized move sequence");
  replay_cmd->add_option("file", w1, "Path to the sequence")->required();

  auto* relations = app.add_subcommand("relations", "Dump a defining-relation table");
  relations->add_option("--kind", kind_name, "A, B or AT")->required();
  relations->add_option("--n", n, "Rank")->required();
  relations->add_option("--presentation", presentation_name, "formal, parabolic or split");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string verb = cmd->get_name();
  json inputs = json::object();
  for (const CLI::Option* opt : cmd->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    const std::string key = opt->get_name(false, true);
    const auto results = opt->results();
    inputs[key.rfind("--", 0) == 0 ? key.substr(2) : key] =
        opt->get_type_size() == 0 ? json(true) : json(results.size() == 1 ? results[0] : "");
  }

  Outcome o;
  try {
    if (cmd == eq) {
      const bool equal = words_equal(read_word(w1, std::nullopt, "eq"),
                                     read_word(w2, std::nullopt, "eq"), budgets.equality());
      o.code = equal ? kTrue : kFalse;
      o.text = equal ? "equal" : "not equal";
      o.result = {{"equal", equal}};
    } else if (cmd == member) {
      const BraidWord w = read_word(w1, GroupKind::B, "member");
      const int k = t_exponent_sum(w);
      o.code = k == 0 ? kTrue : kFalse;
      o.text = std::string(k == 0 ? "affine" : "not affine") + " (t-sum " + std::to_string(k) + ")";
      o.result = {{"affine", k == 0}, {"t_sum", k}};
    } else if (cmd == decompose) {
      const PhiDecomposition d = phi_decompose(read_word(w1, GroupKind::B, "decompose"));
      o.text = "lambda " + render(d.lambda) + "\nk " + std::to_string(d.k);
      o.result = {{"lambda", render(d.lambda)}, {"k", d.k}};
    } else if (cmd == parabolic) {
      if (!to && !from) throw DomainError("parabolic needs --to or --from");
      const BraidWord w =
          to ? to_parabolic(read_word(w1, GroupKind::AffineA, "parabolic"))
             : from_parabolic(read_word(w1, GroupKind::AffineA, "parabolic", Presentation::Parabolic));
      o.text = render(w);
      o.result = {{"word", o.text}, {"presentation", to ? "parabolic" : "formal"}};
    } else if (cmd == kernel) {
      const KernelWord k = kernel_rewrite_F(read_word(w1, GroupKind::B, "kernel"), budgets.equality());
      o.text = render(k);
      o.result = {{"kernel_word", o.text}, {"n", k.n}};
    } else if (cmd == schreier) {
      const SchreierWord s = schreier_rewrite(parse_kernel_word(w1, n));
      o.text = render(s);
      o.result = {{"schreier_word", o.text}, {"n", s.n}};
    } else if (cmd == ne) {
      const NeDecomposition d = ne_decompose(read_word(w1, GroupKind::AffineA, "ne"), budgets.equality());
      o.text = "nu " + render(d.nu) + "\nu " + render(d.u);
      o.result = {{"nu", render(d.nu)}, {"u", render(d.u)}};
    } else if (cmd == map) {
      const auto kind = morphism_from_name(name);
      if (!kind) throw DomainError("unknown morphism '" + name + "'");
      const BraidWord image = apply_morphism({*kind, n, e}, read_word(w1, std::nullopt, "map"));
      o.text = render(image);
      o.result = {{"image", o.text}};
    } else if (cmd == dynkin) {
      const BraidWord image = dynkin_shift(read_word(w1, GroupKind::AffineA, "dynkin"), e);
      o.text = render(image);
      o.result = {{"image", o.text}};
    } else if (cmd == dominating) {
      o.text = render(dominating_element(n));
      o.result = {{"word", o.text}};
    } else if (cmd == diagram) {
      const auto d = diagram_from_name(name);
      if (!d) throw DomainError("unknown diagram '" + name + "'");
      const bool holds = check_diagram(*d, n, read_word(w1, std::nullopt, "diagram"), budgets.equality());
      o.code = holds ? kTrue : kFalse;
      o.text = holds ? "commutes" : "does not commute";
      o.result = {{"commutes", holds}};
    } else if (cmd == close) {
      const ClosureInvariants c =
          closure_invariants(read_word(w1, GroupKind::A, "close"), budgets.closure());
      o.text = invariants_text(c);
      o.result = invariants_json(c);
    } else if (cmd == affine_close_cmd) {
      const ClosureInvariants c =
          affine_close(read_word(w1, GroupKind::AffineA, "affine-close"), budgets.closure());
      o.text = invariants_text(c);
      o.result = invariants_json(c);
    } else if (cmd == bracket) {
      const BraidWord w = read_word(w1, GroupKind::A, "bracket");
      const LaurentPoly b = kauffman_bracket(w, budgets.closure());
      const LaurentPoly v = normalized_invariant(w, budgets.closure());
      o.text = "bracket " + b.to_string() + "\nnormalized " + v.to_string();
      o.result = {{"bracket", b.to_string()}, {"normalized", v.to_string()}};
    } else if (cmd == moves) {
      const MoveSequence seq = prop_closure_moves(
          read_word(w1, GroupKind::AffineA, "moves"),
          name == "dynkin" ? ClosureProp::Dynkin : ClosureProp::AppendA);
      (void)replay(seq, budgets.equality());
      o.text = serialize(seq);
      o.text.pop_back();
      o.result = {{"steps", seq.steps.size()}, {"valid", true}};
      o.certificate = serialize(seq);
    } else if (cmd == search) {
      const BraidWord x = read_word(w1, GroupKind::A, "search");
      const BraidWord y = read_word(w2, GroupKind::A, "search");
      SearchOptions opts;
      opts.max_depth = budgets.max_depth;
      opts.max_rank = budgets.max_rank >= 0 ? budgets.max_rank : std::max(x.rank(), y.rank()) + 1;
      opts.equality = budgets.equality();
      const auto seq = markov_search(x, y, opts);
      if (seq) {
        o.text = "found " + std::to_string(seq->steps.size()) + " steps\n" + serialize(*seq);
        o.text.pop_back();
        o.result = {{"found", true}, {"steps", seq->steps.size()}};
        o.certificate = serialize(*seq);
      } else {
        o.code = kFalse;
        o.text = "not found";
        o.result = {{"found", false}};
      }
    } else if (cmd == replay_cmd) {
      std::ifstream in(w1);
      if (!in) throw DomainError("cannot read '" + w1 + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      const MoveSequence seq = parse_move_sequence(buf.str());
      try {
        (void)replay(seq, budgets.equality());
        o.text = "valid (" + std::to_string(seq.steps.size()) + " steps)";
        o.result = {{"valid", true}, {"steps", seq.steps.size()}};
      } catch (const DomainError& bad) {
        o.code = kFalse;
        o.text = std::string("invalid: ") + bad.what();
        o.result = {{"valid", false}, {"reason", bad.what()}};
      }
    } else if (cmd == relations) {
      const RelationTable t = defining_relations(kind_from_name(kind_name), n,
                                                 presentation_from_name(presentation_name));
      json pairs = json::array();
      for (const Relation& r : t.pairs) {
        if (!o.text.empty()) o.text += "\n";
        o.text += r.label + " " + render_atoms(r.lhs) + " = " + render_atoms(r.rhs);
        pairs.push_back({{"label", r.label}, {"lhs", render(r.lhs)}, {"rhs", render(r.rhs)}});
      }
      o.result = {{"relations", pairs}};
    }
  } catch (const ResourceError& ex) {
    err << "resource budget exceeded: " << ex.what() << "\n";
    return kResource;
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return kUsage;
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kInternal;
  }

  if (as_json) {
    json j{{"verb", verb}, {"inputs", inputs}, {"result", o.result}};
    if (o.certificate) j["certificate"] = *o.certificate;
    out << j.dump(2) << "\n";
  } else {
    out << o.text << "\n";
  }
  return o.code;
}

} // namespace affbraid::cli
