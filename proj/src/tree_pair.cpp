#include "lmg/tree_pair.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace lmg {

  namespace {
    // w0, ..., w(n-1) at positions [i, i+n) of a sorted leaf list.
    bool is_sibling_block(std::vector<Word> const& v, std::size_t i, int n) {
      Word const& first = v[i];
      Word const& last  = v[i + n - 1];
      return !first.empty() && first.size() == last.size() && first.back() == 0
             && last.back() == n - 1
             && first.prefix(first.size() - 1).is_prefix_of(last);
    }

    void check_arity(TreePair const& f, TreePair const& g) {
      if (f.arity() != g.arity()) {
        throw DomainError("tree pairs of different arity");
      }
    }
  }  // namespace

  bool is_complete_prefix_code(std::vector<Word> const& leaves, int n) {
    if (leaves.empty()) {
      return false;
    }
    std::vector<Word> stack;
    for (std::size_t k = 0; k < leaves.size(); ++k) {
      if (leaves[k].arity() != n
          || (k > 0 && !(leaves[k - 1].letters() < leaves[k].letters()))) {
        return false;
      }
      stack.push_back(leaves[k]);
      while (stack.size() >= static_cast<std::size_t>(n)
             && is_sibling_block(stack, stack.size() - n, n)) {
        Word parent = stack.back().prefix(stack.back().size() - 1);
        stack.erase(stack.end() - n, stack.end());
        stack.push_back(std::move(parent));
      }
    }
    return stack.size() == 1 && stack.front().empty();
  }

  TreePair::TreePair(std::vector<Word> domain, std::vector<Word> range)
      : _arity(domain.empty() ? 2 : domain.front().arity()) {
    std::sort(domain.begin(), domain.end());
    std::sort(range.begin(), range.end());
    if (domain.size() != range.size()) {
      throw DomainError("domain and range trees have different leaf counts");
    }
    if (!is_complete_prefix_code(domain, _arity)
        || !is_complete_prefix_code(range, _arity)) {
      throw DomainError("leaves do not form a complete n-ary tree");
    }
    *this = reduce_pairs(_arity, domain, range);
  }

  TreePair::TreePair(Trusted, int n, std::vector<Word> domain,
                     std::vector<Word> range)
      : _arity(n), _domain(std::move(domain)), _range(std::move(range)) {}

  TreePair TreePair::identity(int n) {
    validate_arity(n);
    return TreePair(Trusted{}, n, {Word(n)}, {Word(n)});
  }

  TreePair reduce_pairs(int n, std::vector<Word> const& domain,
                        std::vector<Word> const& range) {
    std::vector<Word> dom;
    std::vector<Word> ran;
    dom.reserve(domain.size());
    ran.reserve(range.size());
    std::size_t const block = static_cast<std::size_t>(n);
    for (std::size_t k = 0; k < domain.size(); ++k) {
      dom.push_back(domain[k]);
      ran.push_back(range[k]);
      while (dom.size() >= block && is_sibling_block(dom, dom.size() - n, n)
             && is_sibling_block(ran, ran.size() - n, n)) {
        Word d = dom.back().prefix(dom.back().size() - 1);
        Word r = ran.back().prefix(ran.back().size() - 1);
        dom.erase(dom.end() - n, dom.end());
        ran.erase(ran.end() - n, ran.end());
        dom.push_back(std::move(d));
        ran.push_back(std::move(r));
      }
    }
    return TreePair(TreePair::Trusted{}, n, std::move(dom), std::move(ran));
  }

  TreePair generator(int i, Word const& alpha) {
    int const n = alpha.arity();
    if (i < 0 || i > n - 2) {
      throw DomainError("generator index " + std::to_string(i)
                        + " outside 0.." + std::to_string(n - 2));
    }
    std::vector<Word> domain;
    std::vector<Word> range;
    for (std::size_t p = 0; p < alpha.size(); ++p) {
      Word const node = alpha.prefix(p);
      for (int c = 0; c < n; ++c) {
        if (c != alpha[p]) {
          domain.push_back(node.child(static_cast<Letter>(c)));
          range.push_back(domain.back());
        }
      }
    }
    Letter const top = static_cast<Letter>(n - 1);
    for (int k = 0; k < n; ++k) {
      Word const child = alpha.child(static_cast<Letter>(k));
      if (k == i) {
        for (int c = 0; c < n; ++c) {
          domain.push_back(child.child(static_cast<Letter>(c)));
        }
      } else {
        domain.push_back(child);
      }
      if (k == top) {
        for (int c = 0; c < n; ++c) {
          range.push_back(child.child(static_cast<Letter>(c)));
        }
      } else {
        range.push_back(child);
      }
    }
    std::sort(domain.begin(), domain.end());
    std::sort(range.begin(), range.end());
    return reduce_pairs(n, domain, range);
  }

  TreePair x_generator(std::size_t t, int n) {
    validate_arity(n);
    std::size_t const m = static_cast<std::size_t>(n - 1);
    Word alpha(n, Word::storage_type(t / m, static_cast<Letter>(n - 1)));
    return generator(static_cast<int>(t % m), alpha);
  }

  TreePair compose(TreePair const& f, TreePair const& g) {
    check_arity(f, g);
    int const   n = f.arity();
    auto const& a = f.domain();
    auto const& b = f.range();
    auto const& c = g.domain();
    auto const& d = g.range();

    std::vector<Word> domain;
    std::vector<Word> range;
    std::size_t       i = 0;
    std::size_t       j = 0;
    while (i < b.size() && j < c.size()) {
      if (b[i] == c[j]) {
        domain.push_back(a[i++]);
        range.push_back(d[j++]);
      } else if (b[i].is_proper_prefix_of(c[j])) {
        // c[j], c[j+1], ... refine b[i]
        while (j < c.size() && b[i].is_prefix_of(c[j])) {
          domain.push_back(a[i] + c[j].suffix(b[i].size()));
          range.push_back(d[j++]);
        }
        ++i;
      } else {
        while (i < b.size() && c[j].is_prefix_of(b[i])) {
          domain.push_back(a[i]);
          range.push_back(d[j] + b[i++].suffix(c[j].size()));
        }
        ++j;
      }
    }
    if (i != b.size() || j != c.size()) {
      throw InvariantError("compose: trees do not cover the same space");
    }
    // Both images of an order preserving map of a sorted list stay sorted.
    return reduce_pairs(n, domain, range);
  }

  TreePair invert(TreePair const& f) {
    return reduce_pairs(f.arity(), f.range(), f.domain());
  }

  TreePair power(TreePair const& f, long long k) {
    TreePair base   = k < 0 ? invert(f) : f;
    TreePair result = TreePair::identity(f.arity());
    unsigned long long e
        = k < 0 ? 0ULL - static_cast<unsigned long long>(k)
                : static_cast<unsigned long long>(k);
    while (e > 0) {
      if (e & 1ULL) {
        result = compose(result, base);
      }
      e >>= 1U;
      if (e > 0) {
        base = compose(base, base);
      }
    }
    return result;
  }

  namespace {
    // Index of the domain leaf that is a prefix of t, if any.
    std::optional<std::size_t> leaf_above(std::vector<Word> const& leaves,
                                          Word const&              t) {
      auto it = std::upper_bound(
          leaves.begin(), leaves.end(), t, [](Word const& x, Word const& y) {
            return x.letters() < y.letters();
          });
      if (it == leaves.begin()) {
        return std::nullopt;
      }
      --it;
      if (!it->is_prefix_of(t)) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - leaves.begin());
    }
  }  // namespace

  std::optional<Word> apply_prefix(TreePair const& f, Word const& t) {
    if (t.arity() != f.arity()) {
      throw DomainError("apply_prefix: arity mismatch");
    }
    auto k = leaf_above(f.domain(), t);
    if (!k) {
      return std::nullopt;
    }
    return f.range()[*k] + t.suffix(f.domain()[*k].size());
  }

  EvPeriodicWord apply_ep(TreePair const& f, EvPeriodicWord const& x) {
    if (x.arity() != f.arity()) {
      throw DomainError("apply_ep: arity mismatch");
    }
    std::size_t depth = 0;
    for (auto const& leaf : f.domain()) {
      depth = std::max(depth, leaf.size());
    }
    auto k = leaf_above(f.domain(), x.expand(depth));
    if (!k) {
      throw InvariantError("apply_ep: domain leaves do not cover the point");
    }
    return x.drop(f.domain()[*k].size()).prepend(f.range()[*k]);
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal form
  ////////////////////////////////////////////////////////////////////////

  XWord XNormalForm::word() const {
    XWord w = positive;
    for (auto it = negative.rbegin(); it != negative.rend(); ++it) {
      w.push_back({it->index, -it->exponent});
    }
    return w;
  }

  namespace {
    // The positive word P_T sending the tree T onto the right vine with the
    // same number of leaves, as a nondecreasing list of indices.
    std::vector<std::size_t> fold_to_vine(std::vector<Word> leaves, int n) {
      Letter const             top = static_cast<Letter>(n - 1);
      std::size_t const        m   = static_cast<std::size_t>(n - 1);
      std::vector<std::size_t> out;
      for (;;) {
        // first leaf (n-1)^j i rest with i < n-1 and rest nonempty
        std::optional<std::size_t> found;
        std::size_t                j = 0;
        for (std::size_t k = 0; k < leaves.size() && !found; ++k) {
          Word const& w = leaves[k];
          std::size_t p = 0;
          while (p < w.size() && w[p] == top) {
            ++p;
          }
          if (p + 1 < w.size()) {
            found = k;
            j     = p;
          }
        }
        if (!found) {
          return out;
        }
        std::size_t const t = j * m + leaves[*found][j];
        out.push_back(t);
        TreePair const x = x_generator(t, n);
        for (auto& w : leaves) {
          auto image = apply_prefix(x, w);
          if (!image) {
            throw InvariantError("fold_to_vine: generator undefined on a leaf");
          }
          w = std::move(*image);
        }
        std::sort(leaves.begin(), leaves.end());
      }
    }

    XWord group_runs(std::vector<std::size_t> const& idx) {
      XWord w;
      for (std::size_t t : idx) {
        if (!w.empty() && w.back().index == t) {
          ++w.back().exponent;
        } else {
          w.push_back({t, 1});
        }
      }
      return w;
    }
  }  // namespace

  XNormalForm to_x_normal_form(TreePair const& f) {
    int const   n = f.arity();
    XNormalForm nf;
    nf.arity    = n;
    nf.positive = group_runs(fold_to_vine(f.domain(), n));
    nf.negative = group_runs(fold_to_vine(f.range(), n));
    return nf;
  }

  TreePair from_x_word(XWord const& w, int n) {
    TreePair f = TreePair::identity(n);
    for (auto const& p : w) {
      f = compose(f, power(x_generator(p.index, n), p.exponent));
    }
    return f;
  }

  bool is_valid_x_normal_form(XNormalForm const& nf) {
    auto ascending = [](XWord const& w) {
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k].exponent <= 0 || (k > 0 && w[k - 1].index >= w[k].index)) {
          return false;
        }
      }
      return true;
    };
    if (!ascending(nf.positive) || !ascending(nf.negative)) {
      return false;
    }
    if (!nf.positive.empty() && !nf.negative.empty()
        && nf.positive.back().index == nf.negative.back().index) {
      return false;
    }
    auto occurs = [&](std::size_t lo, std::size_t hi) {
      for (auto const* part : {&nf.positive, &nf.negative}) {
        for (auto const& p : *part) {
          if (p.index >= lo && p.index <= hi) {
            return true;
          }
        }
      }
      return false;
    };
    std::size_t const m = static_cast<std::size_t>(nf.arity - 1);
    for (auto const& p : nf.positive) {
      for (auto const& q : nf.negative) {
        if (p.index == q.index && !occurs(p.index + 1, p.index + m)) {
          return false;
        }
      }
    }
    return true;
  }

  std::string x_generator_name(std::size_t t, int n) {
    std::size_t const m = static_cast<std::size_t>(n - 1);
    std::string       s = "x" + std::to_string(t % m);
    if (t >= m) {
      Word alpha(n, Word::storage_type(t / m, static_cast<Letter>(n - 1)));
      s += "[" + word_body(alpha) + "]";
    }
    return s;
  }

  std::string to_string(XWord const& w, int n) {
    if (w.empty()) {
      return "id";
    }
    std::string s;
    for (auto const& p : w) {
      if (!s.empty()) {
        s.push_back(' ');
      }
      s += x_generator_name(p.index, n);
      if (p.exponent != 1) {
        s += "^" + std::to_string(p.exponent);
      }
    }
    return s;
  }

  std::vector<long long> abelianization_a(TreePair const& f) {
    int const              n = f.arity();
    std::size_t const      m = static_cast<std::size_t>(n - 1);
    std::vector<long long> v(static_cast<std::size_t>(n), 0);
    auto const             nf = to_x_normal_form(f);
    for (auto const& p : nf.word()) {
      std::size_t const k = p.index == 0 ? 0 : (p.index - 1) % m + 1;
      v[k] += p.exponent;
    }
    return v;
  }

  TreePair right_support_element(Word const& s) {
    if (s.empty()) {
      throw DomainError("right_support_element: empty word");
    }
    int const    n   = s.arity();
    Letter const top = static_cast<Letter>(n - 1);
    Word const   p   = s.back() == top ? s.child(0) : s;

    std::vector<Word> fixed;
    std::vector<Word> cones;  // p and the right siblings along its path
    for (std::size_t q = 0; q < p.size(); ++q) {
      Word const node = p.prefix(q);
      for (int c = 0; c < n; ++c) {
        if (c < p[q]) {
          fixed.push_back(node.child(static_cast<Letter>(c)));
        } else if (c > p[q]) {
          cones.push_back(node.child(static_cast<Letter>(c)));
        }
      }
    }
    cones.push_back(p);
    std::sort(cones.begin(), cones.end());

    std::vector<Word> domain = fixed;
    std::vector<Word> range  = fixed;
    for (int c = 0; c < n; ++c) {
      domain.push_back(cones.front().child(static_cast<Letter>(c)));
      range.push_back(cones.back().child(static_cast<Letter>(c)));
    }
    domain.insert(domain.end(), cones.begin() + 1, cones.end());
    range.insert(range.end(), cones.begin(), cones.end() - 1);
    return TreePair(std::move(domain), std::move(range));
  }

  std::string to_dot(TreePair const& f) {
    int const          n = f.arity();
    std::ostringstream out;
    out << "digraph tree_pair {\n"
        << "  node [shape=point];\n"
        << "  edge [arrowhead=none];\n";
    auto tree = [&](char const* name, std::vector<Word> const& leaves) {
      out << "  subgraph cluster_" << name << " {\n"
          << "    label=\"" << name << "\";\n";
      auto node_id = [&](Word const& w) {
        return std::string(name) + "_" + (w.empty() ? "r" : word_body(w));
      };
      std::vector<Word> internal;
      for (auto const& leaf : leaves) {
        for (std::size_t k = 0; k < leaf.size(); ++k) {
          internal.push_back(leaf.prefix(k));
        }
      }
      std::sort(internal.begin(), internal.end());
      internal.erase(std::unique(internal.begin(), internal.end()),
                     internal.end());
      for (auto const& v : internal) {
        out << "    \"" << node_id(v) << "\";\n";
        for (int c = 0; c < n; ++c) {
          out << "    \"" << node_id(v) << "\" -> \""
              << node_id(v.child(static_cast<Letter>(c))) << "\" [label=\""
              << c << "\"];\n";
        }
      }
      for (std::size_t k = 0; k < leaves.size(); ++k) {
        out << "    \"" << node_id(leaves[k]) << "\" [shape=plaintext, label=\""
            << k << "\"];\n";
      }
      out << "  }\n";
    };
    tree("domain", f.domain());
    tree("range", f.range());
    out << "}\n";
    return out.str();
  }

}  // namespace lmg
