#include "affbraid/moves.hpp"

#include "affbraid/errors.hpp"
#include "affbraid/morphisms.hpp"

#include <deque>
#include <map>
#include <sstream>

namespace affbraid {

namespace {

void require_a(const BraidWord& w, const char* what) {
  if (w.kind() != GroupKind::A) {
    throw DomainError(std::string(what) + " must be a kind-A word, got " + render(w));
  }
}

[[noreturn]] void illegal(const std::string& check) { throw DomainError("illegal move: " + check); }

BraidWord top_letter(int n, int sign) { return BraidWord(GroupKind::A, n, {sigma(n, sign)}); }

// Witness as a word of rank n-1; a rank-n witness must avoid s_n.
BraidWord lower_witness(const BraidWord& u, int n) {
  require_a(u, "destabilization witness");
  if (u.rank() == n - 1) return u;
  if (u.rank() == n) {
    if (u.uses(Generator{GenKind::Sigma, n})) {
      illegal("destabilization witness uses the top generator s" + std::to_string(n));
    }
    return relabel(u, GroupKind::A, n - 1);
  }
  illegal("destabilization witness has rank " + std::to_string(u.rank()) + ", expected " +
          std::to_string(n - 1));
}

} // namespace

BraidWord apply_move(const BraidWord& w, const MoveStep& step, EqualityOptions options) {
  require_a(w, "moved word");
  const int n = w.rank();
  switch (step.kind) {
  case MoveKind::Rewrite: {
    if (!step.word) illegal("rewrite needs a target word");
    const BraidWord& v = *step.word;
    if (!w.same_group(v)) illegal("rewrite target lives in a different group");
    if (!words_equal(w, v, options)) illegal("rewrite target is not equal to the current word");
    return v;
  }
  case MoveKind::Conjugate: {
    if (!step.word) illegal("conjugation needs a conjugator");
    const BraidWord& g = *step.word;
    if (!w.same_group(g)) illegal("conjugator lives in a different group");
    return invert_word(g) * w * g;
  }
  case MoveKind::Stabilize: {
    if (step.sign != 1 && step.sign != -1) illegal("stabilization sign must be +1 or -1");
    return relabel(w, GroupKind::A, n + 1) * top_letter(n + 1, step.sign);
  }
  case MoveKind::Destabilize: {
    if (step.sign != 1 && step.sign != -1) illegal("destabilization sign must be +1 or -1");
    if (n < 1) illegal("cannot destabilize a single strand");
    if (!step.word) illegal("destabilization needs a witness");
    const BraidWord u = lower_witness(*step.word, n);
    const BraidWord lifted = relabel(u, GroupKind::A, n) * top_letter(n, step.sign);
    if (!words_equal(w, lifted, options)) {
      illegal("current word is not witness * s" + std::to_string(n) +
              (step.sign > 0 ? "" : "^-1"));
    }
    return u;
  }
  }
  illegal("unknown move kind");
}

BraidWord replay(const MoveSequence& seq, EqualityOptions options) {
  BraidWord cur = seq.start;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    try {
      cur = apply_move(cur, seq.steps[i], options);
    } catch (const DomainError& err) {
      throw DomainError("step " + std::to_string(i + 1) + ": " + err.what());
    }
  }
  if (!cur.same_group(seq.end) || !words_equal(cur, seq.end, options)) {
    throw DomainError("replayed word " + render(cur) + " does not equal the stated end " +
                      render(seq.end));
  }
  return cur;
}

MoveSequence prop_closure_moves(const BraidWord& input, ClosureProp which) {
  const BraidWord x = parabolic_to_formal(input);
  if (x.kind() != GroupKind::AffineA) {
    throw DomainError("prop_closure_moves expects an AT word, got " + render(input));
  }
  const int n = x.rank() + 1;
  using K = MorphismKind;
  auto F = [n](const BraidWord& w) { return apply_morphism({K::F, n}, w); };
  auto up = [n](const BraidWord& w) { return apply_morphism({K::XBar, n + 1}, w); };
  auto down = [n](const BraidWord& w) { return apply_morphism({K::XBar, n}, w); };

  if (which == ClosureProp::Dynkin) {
    const BraidWord start = up(F(x));
    const BraidWord end = up(F(dynkin_shift(x, 1)));
    return {start, {MoveStep::conjugate(up(dominating_element(n)))}, end};
  }

  // a_n of AT rank n-1 and its F-image s_n a_{n+1} s_n^-1 in AT rank n.
  const BraidWord a_small(GroupKind::AffineA, n - 1, {agen(n)});
  const BraidWord a_big = F(a_small);
  const BraidWord a_top(GroupKind::AffineA, n, {agen(n + 1)});
  const BraidWord s_top(GroupKind::AffineA, n, {sigma(n)});

  const BraidWord start = up(F(x) * a_top);
  // a_{n+1} a_n = a_n s_n, hence a_{n+1} = a_n s_n a_n^-1.
  const BraidWord rewritten = up(F(x) * a_big * s_top * invert_word(a_big));
  const BraidWord conjugated_x = invert_word(a_small) * x * a_small;
  const BraidWord witness = down(conjugated_x);
  return {start,
          {MoveStep::rewrite(rewritten), MoveStep::conjugate(up(a_big)),
           MoveStep::destabilize(1, witness), MoveStep::conjugate(invert_word(down(a_small)))},
          down(x)};
}

std::optional<MoveSequence> markov_search(const BraidWord& x, const BraidWord& y,
                                          SearchOptions options) {
  require_a(x, "search source");
  require_a(y, "search target");
  if (options.max_rank < 0 || options.max_depth < 0) {
    throw DomainError("search budgets must be non-negative");
  }
  struct Node {
    BraidWord word;
    int parent;
    MoveStep step;
    int depth;
  };
  auto goal = [&](const BraidWord& w) {
    return w.same_group(y) && words_equal(w, y, options.equality);
  };
  auto path_to = [&](const std::vector<Node>& nodes, int idx) {
    std::vector<MoveStep> steps;
    for (int i = idx; nodes[static_cast<std::size_t>(i)].parent >= 0;
         i = nodes[static_cast<std::size_t>(i)].parent) {
      steps.push_back(nodes[static_cast<std::size_t>(i)].step);
    }
    return MoveSequence{x, {steps.rbegin(), steps.rend()}, y};
  };

  std::vector<Node> nodes;
  nodes.push_back({x, -1, MoveStep::stabilize(1), 0});
  if (goal(x)) return MoveSequence{x, {}, y};
  std::map<std::pair<int, std::vector<BraidLetter>>, bool> seen;
  auto key = [](const BraidWord& w) {
    const auto c = free_cancel(w);
    return std::pair{c.rank(), std::vector<BraidLetter>(c.letters().begin(), c.letters().end())};
  };
  seen[key(x)] = true;
  std::deque<int> queue{0};

  while (!queue.empty()) {
    const int idx = queue.front();
    queue.pop_front();
    const BraidWord cur = nodes[static_cast<std::size_t>(idx)].word;
    const int depth = nodes[static_cast<std::size_t>(idx)].depth;
    if (depth >= options.max_depth) continue;
    const int n = cur.rank();

    std::vector<MoveStep> moves;
    for (int sign : {1, -1}) {
      for (int i = 1; i <= n; ++i) {
        moves.push_back(MoveStep::conjugate(BraidWord(GroupKind::A, n, {sigma(i, sign)})));
      }
    }
    if (n + 1 <= options.max_rank) {
      moves.push_back(MoveStep::stabilize(1));
      moves.push_back(MoveStep::stabilize(-1));
    }
    const BraidWord reduced = free_cancel(cur);
    const auto ls = reduced.letters();
    if (n >= 1 && !ls.empty() && ls.back().gen == Generator{GenKind::Sigma, n}) {
      const BraidWord prefix(GroupKind::A, n, ls.first(ls.size() - 1));
      if (!prefix.uses(Generator{GenKind::Sigma, n})) {
        moves.push_back(MoveStep::destabilize(ls.back().sign, relabel(prefix, GroupKind::A, n - 1)));
      }
    }

    for (const MoveStep& m : moves) {
      BraidWord next = free_cancel(apply_move(cur, m, options.equality));
      if (!seen.emplace(key(next), true).second) continue;
      nodes.push_back({std::move(next), idx, m, depth + 1});
      const int child = static_cast<int>(nodes.size()) - 1;
      if (goal(nodes.back().word)) return path_to(nodes, child);
      queue.push_back(child);
    }
  }
  return std::nullopt;
}

std::string render(const MoveStep& step) {
  const auto sign = [](int s) { return s > 0 ? std::string("+1") : std::string("-1"); };
  switch (step.kind) {
  case MoveKind::Rewrite: return "rewrite " + render(*step.word);
  case MoveKind::Conjugate: return "conj " + render(*step.word);
  case MoveKind::Stabilize: return "stab " + sign(step.sign);
  case MoveKind::Destabilize: return "destab " + sign(step.sign) + " " + render(*step.word);
  }
  return "?";
}

std::string serialize(const MoveSequence& seq) {
  std::string out = "start " + render(seq.start) + "\n";
  for (const MoveStep& s : seq.steps) out += render(s) + "\n";
  out += "end " + render(seq.end) + "\n";
  return out;
}

MoveSequence parse_move_sequence(std::string_view text) {
  std::optional<BraidWord> start;
  std::optional<BraidWord> end;
  std::vector<MoveStep> steps;
  std::size_t line_start = 0;
  int line_no = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    ++line_no;
    const std::size_t base = line_start;
    line_start = line_end + 1;

    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    const std::size_t kw_end = std::min(line.find_first_of(" \t\r", first), line.size());
    const std::string_view kw = line.substr(first, kw_end - first);
    std::string_view rest = kw_end < line.size() ? line.substr(kw_end + 1) : std::string_view{};
    std::size_t rest_base = base + kw_end + 1;

    auto fail = [&](const std::string& what, std::size_t at) {
      throw ParseError("line " + std::to_string(line_no) + ": " + what, at);
    };
    auto word = [&](std::string_view t, std::size_t at) {
      try {
        return parse(t);
      } catch (const ParseError& err) {
        throw ParseError("line " + std::to_string(line_no) + ": " + err.what(),
                         at + err.offset());
      }
    };
    auto sign_token = [&]() {
      const std::size_t s = rest.find_first_not_of(" \t");
      if (s == std::string_view::npos) fail("expected +1 or -1", rest_base);
      const std::string_view tok = rest.substr(s, 2);
      int sign = 0;
      if (tok == "+1") sign = 1;
      else if (tok == "-1") sign = -1;
      else fail("expected +1 or -1", rest_base + s);
      rest = rest.substr(s + 2);
      rest_base += s + 2;
      return sign;
    };

    if (end) fail("content after 'end'", base + first);
    if (kw == "start") {
      if (start) fail("duplicate 'start'", base + first);
      start = word(rest, rest_base);
    } else if (!start) {
      fail("expected 'start'", base + first);
    } else if (kw == "end") {
      end = word(rest, rest_base);
    } else if (kw == "rewrite") {
      steps.push_back(MoveStep::rewrite(word(rest, rest_base)));
    } else if (kw == "conj") {
      steps.push_back(MoveStep::conjugate(word(rest, rest_base)));
    } else if (kw == "stab") {
      const int s = sign_token();
      if (rest.find_first_not_of(" \t\r") != std::string_view::npos) {
        fail("unexpected text after stab sign", rest_base);
      }
      steps.push_back(MoveStep::stabilize(s));
    } else if (kw == "destab") {
      const int s = sign_token();
      steps.push_back(MoveStep::destabilize(s, word(rest, rest_base)));
    } else {
      fail("unknown step '" + std::string(kw) + "'", base + first);
    }
  }
  if (!start) throw ParseError("missing 'start' line", 0);
  if (!end) throw ParseError("missing 'end' line", text.size());
  return {*start, std::move(steps), *end};
}

} // namespace affbraid
