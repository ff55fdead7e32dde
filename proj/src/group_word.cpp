#include <cctype>
#include <charconv>

#include "lmg/group.hpp"

namespace lmg {

  std::optional<std::string> y_index_violation(Word const& s) {
    int const n = s.arity();
    if (s.empty()) {
      return "the index is empty";
    }
    if (s.is_power_of(0)) {
      return "the index is a power of 0";
    }
    if (s.is_power_of(static_cast<Letter>(n - 1))) {
      return "the index is a power of n-1";
    }
    if (digit_sum_mod(s, static_cast<std::size_t>(n - 1)) != 0) {
      return "the digit sum of the index is not 0 mod n-1";
    }
    return std::nullopt;
  }

  bool is_y_index(Word const& s) {
    return !y_index_violation(s).has_value();
  }

  void check_y_index(Word const& s) {
    if (auto why = y_index_violation(s)) {
      throw DomainError("y[" + word_body(s) + "] is not in Y(" +
                        std::to_string(s.arity()) + "): " + *why);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Letters and words
  ////////////////////////////////////////////////////////////////////////

  GroupLetter GroupLetter::x(int i, Word alpha, YSign s) {
    int const n = alpha.arity();
    if (i < 0 || i > n - 2) {
      throw DomainError("x" + std::to_string(i) + " is not a generator for n = "
                        + std::to_string(n));
    }
    return {Kind::X, i, std::move(alpha), s};
  }

  GroupLetter GroupLetter::y(Word s, YSign sign) {
    check_y_index(s);
    return {Kind::Y, 0, std::move(s), sign};
  }

  GroupLetter GroupLetter::inverse() const {
    GroupLetter a = *this;
    a.sign        = -sign;
    return a;
  }

  TreePair GroupLetter::as_tree_pair() const {
    if (!is_x()) {
      throw DomainError("as_tree_pair: not an X letter");
    }
    TreePair g = generator(i, index);
    return sign == YSign::plus() ? g : invert(g);
  }

  GroupWord::GroupWord(int arity, std::vector<GroupLetter> letters)
      : _arity(arity) {
    validate_arity(arity);
    for (auto const& a : letters) {
      push_back(a);
    }
  }

  GroupWord& GroupWord::push_back(GroupLetter const& a) {
    if (a.index.arity() != _arity) {
      throw DomainError("letter of a different arity");
    }
    _letters.push_back(a);
    return *this;
  }

  GroupWord& GroupWord::append(GroupWord const& w) {
    if (w.arity() != _arity) {
      throw DomainError("words of different arity");
    }
    _letters.insert(_letters.end(), w._letters.begin(), w._letters.end());
    return *this;
  }

  GroupWord& GroupWord::append_f(TreePair const& f) {
    if (f.arity() != _arity) {
      throw DomainError("tree pair of a different arity");
    }
    std::size_t const m = static_cast<std::size_t>(_arity - 1);
    for (auto const& p : to_x_normal_form(f).word()) {
      Word alpha(_arity,
                 Word::storage_type(p.index / m, static_cast<Letter>(_arity - 1)));
      YSign const s(p.exponent > 0 ? 1 : -1);
      long long   k = p.exponent > 0 ? p.exponent : -p.exponent;
      for (; k > 0; --k) {
        _letters.push_back(
            GroupLetter::x(static_cast<int>(p.index % m), alpha, s));
      }
    }
    return *this;
  }

  GroupWord GroupWord::inverse() const {
    GroupWord w(_arity);
    for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
      w._letters.push_back(it->inverse());
    }
    return w;
  }

  EvPeriodicWord evaluate(GroupWord const& w, EvPeriodicWord const& x) {
    if (x.arity() != w.arity()) {
      throw DomainError("evaluate: arity mismatch");
    }
    EvPeriodicWord z = x;
    for (auto const& a : w.letters()) {
      if (a.is_x()) {
        z = apply_ep(a.as_tree_pair(), z);
      } else if (z.starts_with(a.index)) {
        z = y_apply_ep(a.sign, z.drop(a.index.size())).prepend(a.index);
      }
    }
    return z;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string letter_name(GroupLetter const& a) {
      if (a.is_x()) {
        std::string s = "x" + std::to_string(a.i);
        if (!a.index.empty()) {
          s += "[" + word_body(a.index) + "]";
        }
        return s;
      }
      return "y[" + word_body(a.index) + "]";
    }

    long long parse_int(std::string_view text, std::size_t pos) {
      long long   v     = 0;
      char const* first = text.data();
      char const* last  = text.data() + text.size();
      if (!text.empty() && text.front() == '+') {
        ++first;
      }
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last || first == last) {
        throw ParseError("expected an integer, got '" + std::string(text) + "'",
                         pos);
      }
      return v;
    }

    // One token "x1[21]^-2" or "y[30]" at offset pos.
    void parse_token(std::string_view tok, std::size_t pos, int n,
                     GroupWord& out) {
      if (tok == "id") {
        return;
      }
      std::string_view body = tok;
      long long        k    = 1;
      if (auto caret = tok.find('^'); caret != std::string_view::npos) {
        k    = parse_int(tok.substr(caret + 1), pos + caret + 1);
        body = tok.substr(0, caret);
      }
      if (body.empty() || (body[0] != 'x' && body[0] != 'y')) {
        throw ParseError("expected a letter x<i>[...] or y[...]", pos);
      }
      Word        index(n);
      std::size_t rest = 1;
      int         i    = 0;
      if (body[0] == 'x') {
        while (rest < body.size()
               && std::isdigit(static_cast<unsigned char>(body[rest]))) {
          ++rest;
        }
        if (rest == 1) {
          throw ParseError("x needs a generator number", pos + 1);
        }
        i = static_cast<int>(parse_int(body.substr(1, rest - 1), pos + 1));
      }
      if (rest < body.size()) {
        if (body[rest] != '[' || body.back() != ']') {
          throw ParseError("expected [...] after the letter", pos + rest);
        }
        index = parse_word_body(body.substr(rest + 1, body.size() - rest - 2), n,
                                pos + rest + 1);
      } else if (body[0] == 'y') {
        throw ParseError("y needs an index y[...]", pos + 1);
      }
      GroupLetter const a = body[0] == 'x' ? GroupLetter::x(i, index)
                                           : GroupLetter::y(index);
      for (long long j = 0; j < (k < 0 ? -k : k); ++j) {
        out.push_back(k < 0 ? a.inverse() : a);
      }
    }
  }  // namespace

  GroupWord parse_group_word(std::string_view text, int arity) {
    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    for (std::size_t i = 0; i < text.size();) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      tokens.emplace_back(text.substr(i, j - i), i);
      i = j;
    }
    std::size_t first = 0;
    if (!tokens.empty() && tokens[0].first.substr(0, 2) == "n=") {
      long long const h = parse_int(tokens[0].first.substr(2), 2);
      if (h < kMinArity || h > kMaxArity) {
        throw DomainError("arity " + std::to_string(h) + " out of range");
      }
      if (arity != 0 && h != arity) {
        throw ParseError("header n=" + std::to_string(h)
                             + " disagrees with arity " + std::to_string(arity),
                         0);
      }
      arity = static_cast<int>(h);
      first = 1;
    }
    if (arity == 0) {
      throw ParseError("no arity given (use n=<arity>)", 0);
    }
    GroupWord w(arity);
    for (std::size_t k = first; k < tokens.size(); ++k) {
      parse_token(tokens[k].first, tokens[k].second, arity, w);
    }
    return w;
  }

  std::string to_string(GroupWord const& w) {
    std::string out;
    auto const& ls = w.letters();
    for (std::size_t i = 0; i < ls.size();) {
      std::size_t j = i;
      while (j < ls.size() && ls[j] == ls[i]) {
        ++j;
      }
      long long const k = static_cast<long long>(j - i) * ls[i].sign.value();
      if (!out.empty()) {
        out.push_back(' ');
      }
      out += letter_name(ls[i]);
      if (k != 1) {
        out += "^" + std::to_string(k);
      }
      i = j;
    }
    return out.empty() ? "id" : out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Moves
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void need(bool ok, char const* what) {
      if (!ok) {
        throw DomainError(what);
      }
    }

    GroupWord splice(GroupWord const& w, std::size_t pos, std::size_t len,
                     std::vector<GroupLetter> const& with) {
      std::vector<GroupLetter> ls = w.letters();
      auto at = ls.begin() + static_cast<std::ptrdiff_t>(pos);
      ls.insert(ls.erase(at, at + static_cast<std::ptrdiff_t>(len)), with.begin(),
                with.end());
      return GroupWord(w.arity(), std::move(ls));
    }

    Word ext(Word const& s, std::initializer_list<int> tail) {
      Word w = s;
      for (int a : tail) {
        w.push_back(static_cast<Letter>(a));
      }
      return w;
    }

    std::vector<GroupLetter> expansion_of(GroupLetter const& a) {
      int const   top = a.index.arity() - 1;
      Word const& s   = a.index;
      YSign const P   = YSign::plus();
      YSign const M   = YSign::minus();
      if (a.sign == P) {
        return {GroupLetter::x(0, s, P), GroupLetter::y(ext(s, {0}), P),
                GroupLetter::y(ext(s, {top, 0}), M),
                GroupLetter::y(ext(s, {top, top}), P)};
      }
      return {GroupLetter::x(0, s, M), GroupLetter::y(ext(s, {0, 0}), M),
              GroupLetter::y(ext(s, {0, top}), P),
              GroupLetter::y(ext(s, {top}), M)};
    }
  }  // namespace

  GroupWord rearranging_move(GroupWord const& w, std::size_t pos) {
    need(pos + 1 < w.size(), "rearranging move: position out of range");
    auto const& y = w.letters()[pos];
    auto const& x = w.letters()[pos + 1];
    need(!y.is_x() && x.is_x(), "rearranging move needs y then x");
    auto image = apply_prefix(x.as_tree_pair(), y.index);
    need(image.has_value(), "rearranging move: x is undefined on the y index");
    return splice(w, pos, 2, {x, GroupLetter::y(*image, y.sign)});
  }

  GroupWord expansion_move(GroupWord const& w, std::size_t pos) {
    need(pos < w.size(), "expansion move: position out of range");
    auto const& a = w.letters()[pos];
    need(!a.is_x(), "expansion move needs a y letter");
    return splice(w, pos, 1, expansion_of(a));
  }

  GroupWord commuting_move(GroupWord const& w, std::size_t pos) {
    need(pos + 1 < w.size(), "commuting move: position out of range");
    auto const& a = w.letters()[pos];
    auto const& b = w.letters()[pos + 1];
    need(!a.is_x() && !b.is_x(), "commuting move needs two y letters");
    need(independent(a.index, b.index), "commuting move needs independent indices");
    return splice(w, pos, 2, {b, a});
  }

  GroupWord cancellation_move(GroupWord const& w, std::size_t pos) {
    need(pos + 1 < w.size(), "cancellation move: position out of range");
    auto const& a = w.letters()[pos];
    auto const& b = w.letters()[pos + 1];
    need(a.kind == b.kind && a.i == b.i && a.index == b.index && a.sign == -b.sign,
         "cancellation move needs a letter followed by its inverse");
    return splice(w, pos, 2, {});
  }

  ////////////////////////////////////////////////////////////////////////
  // Relations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    GroupLetter x_letter(std::size_t t, int n, YSign s = YSign::plus()) {
      std::size_t const m = static_cast<std::size_t>(n - 1);
      return GroupLetter::x(
          static_cast<int>(t % m),
          Word(n, Word::storage_type(t / m, static_cast<Letter>(n - 1))), s);
    }
  }  // namespace

  Relation conjugation_relation(std::size_t i, std::size_t j, int n) {
    need(i < j, "conjugation relation needs i < j");
    YSign const M = YSign::minus();
    GroupWord   lhs(n, {x_letter(i, n, M), x_letter(j, n), x_letter(i, n)});
    GroupWord   rhs(n, {x_letter(j + static_cast<std::size_t>(n - 1), n)});
    return {lhs, rhs};
  }

  Relation x_normal_form_relation(int i, Word const& alpha) {
    int const n = alpha.arity();
    GroupWord lhs(n, {GroupLetter::x(i, alpha)});
    GroupWord rhs(n);
    rhs.append_f(generator(i, alpha));
    return {lhs, rhs};
  }

  Relation rearranging_relation(Word const& t, int i, Word const& s, YSign d) {
    int const   n = t.arity();
    GroupLetter x = GroupLetter::x(i, s, d);
    GroupLetter y = GroupLetter::y(t);
    auto image = apply_prefix(x.as_tree_pair(), t);
    if (!image) {
      throw DomainError("x" + std::to_string(i) + "[" + word_body(s) + "]"
                        + (d == YSign::plus() ? "" : "^-1") + " is not defined on "
                        + to_string(t));
    }
    return {GroupWord(n, {y, x}), GroupWord(n, {x, GroupLetter::y(*image)})};
  }

  Relation commuting_relation(Word const& s, Word const& t) {
    need(independent(s, t), "commuting relation needs independent indices");
    int const         n = s.arity();
    GroupLetter const a = GroupLetter::y(s);
    GroupLetter const b = GroupLetter::y(t);
    return {GroupWord(n, {a, b}), GroupWord(n, {b, a})};
  }

  Relation expansion_relation(Word const& s) {
    int const         n = s.arity();
    GroupLetter const a = GroupLetter::y(s);
    return {GroupWord(n, {a}), GroupWord(n, expansion_of(a))};
  }

}  // namespace lmg
