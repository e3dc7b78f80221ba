#include <algorithm>
#include <set>
#include <string>

#include "thrackle/drawing.hpp"
#include "thrackle/error.hpp"

namespace thrackle {

std::string Word::str() const {
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    s += static_cast<char>('a' + letters[i]);
    if (signs.empty()) continue;
    switch (signs[i]) {
      case TurnSign::Plus: s += '+'; break;
      case TurnSign::Minus: s += '-'; break;
      case TurnSign::Ambiguous: s += '?'; break;
      case TurnSign::None: break;
    }
  }
  return s;
}

Word parse_word(std::string_view text, bool cyclic) {
  Word w;
  w.cyclic = cyclic;
  bool any_sign = false;
  std::vector<TurnSign> signs;
  for (char ch : text) {
    if (ch >= 'a' && ch <= 'z') {
      w.letters.push_back(ch - 'a');
      signs.push_back(TurnSign::None);
    } else if (ch == '+' || ch == '-' || ch == '?') {
      if (signs.empty()) throw Error(ErrorCode::ParseError, "sign before any letter");
      signs.back() = ch == '+' ? TurnSign::Plus : ch == '-' ? TurnSign::Minus : TurnSign::Ambiguous;
      any_sign = true;
    } else if (ch != '_' && ch != ' ') {
      throw Error(ErrorCode::ParseError, std::string("unexpected character '") + ch + "' in word");
    }
  }
  if (any_sign) w.signs = std::move(signs);
  return w;
}

TurnSign turn_sign(const Drawing& d, Dart t_in, Dart t_out) {
  const NodeId v = d.map.node_of(t_in);
  Dart c1 = kNoDart;
  for (Dart x : d.map.darts_at(v)) {
    if (d.is_scaffold_dart(x) && d.disc_side[x]) c1 = x;
  }
  if (c1 == kNoDart) return TurnSign::Ambiguous;
  const Dart c2 = d.map.prev_ccw(c1);
  for (Dart x = d.map.next_ccw(c1); x != c2 && x != c1; x = d.map.next_ccw(x)) {
    if (x == t_out) return TurnSign::Plus;
    if (x == t_in) return TurnSign::Minus;
  }
  return TurnSign::Ambiguous;
}

namespace {

// Dart at u starting the edge between u and w, kNoDart if none.
Dart dart_between(const Drawing& d, int u, int w) {
  for (Dart x : d.edge_darts_at(u)) {
    const auto& g = d.edges[d.segment_of(x)];
    const int other = g.tail == u ? g.head : g.tail;
    if (other == w) return x;
  }
  return kNoDart;
}

}  // namespace

Word word_of(const Drawing& d, std::span<const int> walk, bool signed_word) {
  if (!d.has_scaffold()) throw Error(ErrorCode::NoScaffold, "drawing has no scaffold");
  if (walk.empty()) throw Error(ErrorCode::WalkNotInGraph, "empty walk");
  const bool closed = walk.size() > 2 && walk.front() == walk.back();
  std::vector<int> verts(walk.begin(), walk.end() - (closed ? 1 : 0));
  for (int v : verts) {
    if (v < 0 || v >= d.vertex_count()) throw Error(ErrorCode::WalkNotInGraph, "unknown vertex");
  }
  const int k = static_cast<int>(verts.size());
  const int steps = closed ? k : k - 1;
  std::vector<Dart> fwd(steps), back(steps);
  for (int i = 0; i < steps; ++i) {
    const int u = verts[i], w = verts[(i + 1) % k];
    fwd[i] = dart_between(d, u, w);
    back[i] = dart_between(d, w, u);
    if (fwd[i] == kNoDart) {
      throw Error(ErrorCode::WalkNotInGraph,
                  "no edge between vertices " + std::to_string(u) + " and " + std::to_string(w));
    }
  }
  Word word;
  word.cyclic = closed;
  for (int v : verts) {
    const int disc = d.disc_of_vertex(v);
    if (disc < 0) throw Error(ErrorCode::NoScaffold, "vertex " + std::to_string(v) + " is not on a circle");
    word.letters.push_back(disc);
  }
  if (signed_word) {
    word.signs.assign(k, TurnSign::None);
    for (int i = 0; i < k; ++i) {
      const bool interior = closed || (i > 0 && i < k - 1);
      if (!interior) continue;
      const Dart t_in = back[(i - 1 + steps) % steps];
      const Dart t_out = fwd[i % steps];
      word.signs[i] = turn_sign(d, t_in, t_out);
    }
  }
  return word;
}

namespace {

TurnSign flip(TurnSign s) {
  if (s == TurnSign::Plus) return TurnSign::Minus;
  if (s == TurnSign::Minus) return TurnSign::Plus;
  return s;
}

Word reversed(const Word& w) {
  Word r = w;
  std::reverse(r.letters.begin(), r.letters.end());
  std::reverse(r.signs.begin(), r.signs.end());
  for (auto& s : r.signs) s = flip(s);
  return r;
}

Word rotated(const Word& w, int k) {
  Word r = w;
  std::rotate(r.letters.begin(), r.letters.begin() + k, r.letters.end());
  if (!r.signs.empty()) std::rotate(r.signs.begin(), r.signs.begin() + k, r.signs.end());
  return r;
}

bool same_up_to_letters(const Word& a, const Word& b, bool relabel) {
  if (a.signs != b.signs) return false;
  if (!relabel) return a.letters == b.letters;
  std::vector<int> fwd(26, -1), bwd(26, -1);
  for (std::size_t i = 0; i < a.letters.size(); ++i) {
    const int x = a.letters[i], y = b.letters[i];
    if (fwd[x] == -1 && bwd[y] == -1) {
      fwd[x] = y;
      bwd[y] = x;
    } else if (fwd[x] != y || bwd[y] != x) {
      return false;
    }
  }
  return true;
}

// Every rotation of w and of its reversal (cyclic words), or w and its
// reversal (paths).
std::vector<Word> variants(const Word& w) {
  std::vector<Word> out;
  const int n = static_cast<int>(w.letters.size());
  for (const Word& base : {w, reversed(w)}) {
    if (!w.cyclic) {
      out.push_back(base);
      continue;
    }
    for (int k = 0; k < std::max(n, 1); ++k) out.push_back(rotated(base, k));
  }
  return out;
}

int letter_at(const Word& w, int i) {
  const int n = static_cast<int>(w.letters.size());
  return w.letters[((i % n) + n) % n];
}

}  // namespace

bool words_equivalent(const Word& a, const Word& b, bool relabel) {
  if (a.letters.size() != b.letters.size() || a.signs.size() != b.signs.size()) return false;
  for (const Word& v : variants(b)) {
    if (same_up_to_letters(a, v, relabel)) return true;
  }
  return false;
}

std::optional<std::pair<int, int>> annular_form(const Word& w) {
  std::set<int> distinct(w.letters.begin(), w.letters.end());
  if (distinct.size() != 2) return std::nullopt;
  for (const Word& v : variants(w)) {
    const int n = static_cast<int>(v.letters.size());
    const int a = v.letters[0];
    int run = 0;
    while (run < n && v.letters[run] == a) ++run;
    if (run < 2 || run % 2 != 0 || run == n) continue;
    // Remainder must be (ba)^r b.
    const int rest = n - run;
    if (rest % 2 != 1) continue;
    bool ok = true;
    for (int i = 0; i < rest; ++i) {
      const bool want_b = i % 2 == 0;
      if ((v.letters[run + i] == a) == want_b) ok = false;
    }
    if (ok) return std::make_pair(run / 2, (rest - 1) / 2);
  }
  return std::nullopt;
}

std::optional<int> abc_power(const Word& w) {
  const int n = static_cast<int>(w.letters.size());
  if (n == 0 || n % 3 != 0) return std::nullopt;
  if (w.letters[0] == w.letters[1] || w.letters[1] == w.letters[2] || w.letters[0] == w.letters[2]) return std::nullopt;
  for (int i = 0; i < n; ++i) {
    if (w.letters[i] != w.letters[i % 3]) return std::nullopt;
  }
  return n / 3;
}

namespace {

std::set<int> squared_letters(const Word& w) {
  std::set<int> out;
  const int n = static_cast<int>(w.letters.size());
  const int pairs = w.cyclic ? n : n - 1;
  for (int i = 0; i < pairs; ++i) {
    if (w.letters[i] == letter_at(w, i + 1)) out.insert(w.letters[i]);
  }
  return out;
}

bool no_caba(const Word& w) {
  const std::set<int> squares = squared_letters(w);
  if (squares.size() >= 2) return true;
  const int n = static_cast<int>(w.letters.size());
  if (n < 4) return true;
  const int windows = w.cyclic ? n : n - 3;
  for (int i = 0; i < windows; ++i) {
    const int x0 = letter_at(w, i), x1 = letter_at(w, i + 1), x2 = letter_at(w, i + 2), x3 = letter_at(w, i + 3);
    // Shape xyzy (caba, baca) and its reversal yzyx read forwards as xyxz.
    int middle = -1;
    if (x1 == x3 && x0 != x1 && x2 != x1 && x0 != x2) middle = x1;
    if (x0 == x2 && x1 != x0 && x3 != x0 && x1 != x3) middle = x0;
    if (middle < 0) continue;
    if (squares.empty() || squares.count(middle)) return false;
  }
  return true;
}

bool alternating_signs(const Word& w) {
  const int n = static_cast<int>(w.signs.size());
  if (n == 0 || n != static_cast<int>(w.letters.size())) return false;
  for (TurnSign s : w.signs) {
    if (s != TurnSign::Plus && s != TurnSign::Minus) return false;
  }
  const int pairs = w.cyclic ? n : n - 1;
  for (int i = 0; i < pairs; ++i) {
    if (w.signs[i] == w.signs[(i + 1) % n]) return false;
  }
  return true;
}

bool no_triple(const Word& w) {
  const int n = static_cast<int>(w.letters.size());
  if (n < 3) return true;
  const int windows = w.cyclic ? n : n - 2;
  for (int i = 0; i < windows; ++i) {
    if (letter_at(w, i) == letter_at(w, i + 1) && letter_at(w, i) == letter_at(w, i + 2)) return false;
  }
  return true;
}

}  // namespace

bool word_form_check(std::span<const Word> words, WordPattern pattern) {
  if (pattern == WordPattern::NoTwoDiscSquares) {
    std::set<int> squares;
    for (const Word& w : words) {
      const auto s = squared_letters(w);
      squares.insert(s.begin(), s.end());
    }
    return squares.size() < 2;
  }
  for (const Word& w : words) {
    bool ok = true;
    switch (pattern) {
      case WordPattern::NoTripleRepeat: ok = no_triple(w); break;
      case WordPattern::AnnularOddForm: ok = annular_form(w).has_value(); break;
      case WordPattern::PantsAbcPower: ok = abc_power(w).has_value(); break;
      case WordPattern::NoCabaBaca: ok = no_caba(w); break;
      case WordPattern::AlternatingSigns: ok = alternating_signs(w); break;
      case WordPattern::NoTwoDiscSquares: break;
    }
    if (!ok) return false;
  }
  return true;
}

bool word_form_check(const Word& word, WordPattern pattern) {
  return word_form_check(std::span<const Word>(&word, 1), pattern);
}

}  // namespace thrackle
