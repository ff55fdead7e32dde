#include "lmg/homomorphisms.hpp"

#include <algorithm>

namespace lmg {

  int arity_ratio(int p, int q) {
    validate_arity(p);
    validate_arity(q);
    if (q < p || (q - 1) % (p - 1) != 0) {
      throw DomainError("no embedding from arity " + std::to_string(p) + " to "
                        + std::to_string(q) + ": " + std::to_string(p - 1)
                        + " does not divide " + std::to_string(q - 1));
    }
    return (q - 1) / (p - 1);
  }

  Word letter_stretch(Word const& s, int q) {
    int const          d = arity_ratio(s.arity(), q);
    Word::storage_type out;
    out.reserve(s.size());
    for (Letter a : s) {
      out.push_back(static_cast<Letter>(a * d));
    }
    return Word(q, std::move(out));
  }

  EvPeriodicWord stretch_point(EvPeriodicWord const& x, int q) {
    return canonicalize_ep(letter_stretch(x.preperiod(), q),
                           letter_stretch(x.period(), q));
  }

  namespace {
    // Leaves of the stretched tree: images of the old leaves plus the new
    // edges hanging off each stretched internal node.
    std::vector<Word> stretch_tree(std::vector<Word> const& leaves, int q) {
      int const         d = arity_ratio(leaves.front().arity(), q);
      std::vector<Word> out;
      std::vector<Word> internal;
      for (auto const& leaf : leaves) {
        out.push_back(letter_stretch(leaf, q));
        for (std::size_t k = 0; k < leaf.size(); ++k) {
          internal.push_back(leaf.prefix(k));
        }
      }
      std::sort(internal.begin(), internal.end());
      internal.erase(std::unique(internal.begin(), internal.end()), internal.end());
      for (auto const& v : internal) {
        Word const base = letter_stretch(v, q);
        for (int c = 0; c < q; ++c) {
          if (c % d != 0) {
            out.push_back(base.child(static_cast<Letter>(c)));
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace

  TreePair embed_f(TreePair const& f, int q) {
    arity_ratio(f.arity(), q);
    return TreePair(stretch_tree(f.domain(), q), stretch_tree(f.range(), q));
  }

  StandardForm embed(StandardForm const& g, int q) {
    StandardForm out(embed_f(g.f, q), {});
    for (auto const& y : g.ys) {
      out.ys.push_back({letter_stretch(y.s, q), y.t});
    }
    if (!is_normal_form(out)) {
      throw InvariantError("the image under I_{" + std::to_string(g.arity()) + ","
                           + std::to_string(q) + "} is not in normal form");
    }
    return out;
  }

  GroupWord embed(GroupWord const& w, int q) {
    arity_ratio(w.arity(), q);
    GroupWord out(q);
    for (auto const& a : w.letters()) {
      if (a.is_x()) {
        out.append_f(embed_f(a.as_tree_pair(), q));
      } else {
        out.push_back(GroupLetter::y(letter_stretch(a.index, q), a.sign));
      }
    }
    return out;
  }

  std::vector<long long> abelianize(StandardForm const& g) {
    std::vector<long long> v = abelianization_a(g.f);
    long long              t = 0;
    for (auto const& y : g.ys) {
      t += y.t;
    }
    v.push_back(t);
    return v;
  }

  std::vector<long long> abelianize(GroupWord const& w) {
    std::vector<long long> v(static_cast<std::size_t>(w.arity()) + 1, 0);
    for (auto const& a : w.letters()) {
      if (a.is_x()) {
        auto const ax = abelianization_a(a.as_tree_pair());
        for (std::size_t k = 0; k < ax.size(); ++k) {
          v[k] += ax[k];
        }
      } else {
        v.back() += a.sign.value();
      }
    }
    return v;
  }

  GroupWord standard_generators(int n) {
    GroupWord g(n);
    for (int i = 0; i <= n - 2; ++i) {
      g.push_back(GroupLetter::x(i, Word(n)));
    }
    Letter const top = static_cast<Letter>(n - 1);
    g.push_back(GroupLetter::x(0, Word(n, {top})));
    g.push_back(GroupLetter::y(Word(n, {top, 0})));
    return g;
  }

}  // namespace lmg
