#pragma once

// Elements of F(n) as reduced pairs of n-ary trees, the generators
// x_{i[alpha]}, the X_t normal form and the abelianization map a.
//
// Words act left to right: compose(f, g) is "f, then g".

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lmg/words.hpp"

namespace lmg {

  // A tree is given by its leaves, sorted lexicographically. They form a
  // complete prefix code: every infinite word has exactly one leaf as a prefix.
  bool is_complete_prefix_code(std::vector<Word> const& leaves, int n);

  // Leaf i of the domain is sent to leaf i of the range: a_i eta -> b_i eta.
  class TreePair {
   public:
    // Validates both leaf lists (after sorting) and reduces.
    TreePair(std::vector<Word> domain, std::vector<Word> range);

    static TreePair identity(int n);

    int arity() const noexcept {
      return _arity;
    }
    std::vector<Word> const& domain() const noexcept {
      return _domain;
    }
    std::vector<Word> const& range() const noexcept {
      return _range;
    }
    std::size_t leaf_count() const noexcept {
      return _domain.size();
    }
    bool is_identity() const noexcept {
      return _domain.size() == 1;
    }

    friend bool operator==(TreePair const&, TreePair const&) = default;
    friend auto operator<=>(TreePair const&, TreePair const&) = default;

   private:
    struct Trusted {};
    TreePair(Trusted, int n, std::vector<Word> domain, std::vector<Word> range);
    friend TreePair reduce_pairs(int, std::vector<Word> const&,
                                 std::vector<Word> const&);

    int               _arity;
    std::vector<Word> _domain;
    std::vector<Word> _range;
  };

  // Removes matching carets. Both lists must be sorted complete prefix codes
  // of equal size.
  TreePair reduce_pairs(int n, std::vector<Word> const& domain,
                        std::vector<Word> const& range);

  // x_{i[alpha]}: acts as x_i on the cone below alpha and fixes the rest.
  // Throws DomainError unless 0 <= i <= n-2.
  TreePair generator(int i, Word const& alpha);

  // X_t = x_{i[(n-1)^j]} where t = j(n-1) + i.
  TreePair x_generator(std::size_t t, int n);

  TreePair compose(TreePair const& f, TreePair const& g);
  TreePair invert(TreePair const& f);
  TreePair power(TreePair const& f, long long k);

  // f(t) for a finite word t: defined iff t extends a domain leaf of the
  // reduced pair.
  std::optional<Word> apply_prefix(TreePair const& f, Word const& t);
  EvPeriodicWord      apply_ep(TreePair const& f, EvPeriodicWord const& x);

  ////////////////////////////////////////////////////////////////////////
  // X_t words and the normal form
  ////////////////////////////////////////////////////////////////////////

  struct XPower {
    std::size_t index;
    long long   exponent;
    bool operator==(XPower const&) const = default;
  };

  using XWord = std::vector<XPower>;

  // X_{i_1}^{r_1} ... X_{i_m}^{r_m} X_{j_k}^{-s_k} ... X_{j_1}^{-s_1} with
  // i_1 < ... < i_m, j_1 < ... < j_k, all r, s > 0, i_m != j_k, and if both
  // X_i and X_i^{-1} occur then so does some X_{i+1}, ..., X_{i+n-1}.
  struct XNormalForm {
    int         arity = 2;
    XWord positive;  // ascending index, exponents > 0
    XWord negative;  // ascending index j_1 < ... < j_k, exponents > 0
    // The whole word, negative part written with negative exponents.
    XWord word() const;
    bool  operator==(XNormalForm const&) const = default;
  };

  XNormalForm to_x_normal_form(TreePair const& f);
  TreePair    from_x_word(XWord const& w, int n);
  bool        is_valid_x_normal_form(XNormalForm const& nf);

  // "x1", "x0[33]" (X_t as x_i with its (n-1)^j prefix).
  std::string x_generator_name(std::size_t t, int n);
  // Space separated X_t^k letters, "id" for the empty word.
  std::string to_string(XWord const& w, int n);

  // a: F(n) -> Z^n. Coordinate 0 sums the exponents of X_0; coordinate k
  // (1 <= k <= n-1) sums the exponents of the X_t with t >= 1 and
  // t = k mod (n-1).
  std::vector<long long> abelianization_a(TreePair const& f);

  // An element whose support is exactly the open interval (s0..., (n-1)...).
  // Throws DomainError for empty s.
  TreePair right_support_element(Word const& s);

  // Graphviz source drawing the domain and range trees side by side, edges
  // labelled 0..n-1 from the left and paired leaves numbered alike.
  std::string to_dot(TreePair const& f);

}  // namespace lmg
