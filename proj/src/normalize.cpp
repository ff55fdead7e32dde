#include <map>

#include "lmg/group.hpp"

namespace lmg {

  namespace {
    constexpr std::size_t kStepLimit = 2'000'000;

    std::vector<YFactor> units_of(std::vector<YFactor> const& ys) {
      std::vector<YFactor> out;
      for (auto const& y : ys) {
        for (long long k = 0; k < (y.t > 0 ? y.t : -y.t); ++k) {
          out.push_back({y.s, y.t > 0 ? 1 : -1});
        }
      }
      return out;
    }

    // f followed by a weak standard list of unit y factors. Every operation
    // keeps the element unchanged up to the letter being pushed.
    class Normalizer {
     public:
      explicit Normalizer(int n) : _f(TreePair::identity(n)) {}

      void push_f(TreePair const& h) {
        for (;;) {
          std::size_t k = 0;
          while (k < _u.size() && apply_prefix(h, _u[k].s)) {
            ++k;
          }
          if (k == _u.size()) {
            break;
          }
          er_unblocked(k);
        }
        for (auto& y : _u) {
          y.s = *apply_prefix(h, y.s);
        }
        _f = compose(_f, h);
      }

      void push_y(Word const& s, YSign d) {
        check_y_index(s);
        // Nothing before the new factor may be a proper prefix of it.
        for (;;) {
          std::size_t k = 0;
          while (k < _u.size() && !_u[k].s.is_proper_prefix_of(s)) {
            ++k;
          }
          if (k == _u.size()) {
            break;
          }
          er_unblocked(k);
        }
        _u.push_back({s, d.value()});
      }

      void push(StandardForm const& form) {
        push_f(form.f);
        for (auto const& y : units_of(form.ys)) {
          push_y(y.s, YSign(static_cast<int>(y.t)));
          reduce();
        }
      }

      // Removes every potential cancellation.
      void reduce() {
        for (;;) {
          cancel_inverse_pairs();
          auto pc = find_potential_cancellation(_u);
          if (!pc) {
            return;
          }
          er_unblocked(pc->outer);
          tick();
        }
      }

      StandardForm standard() const {
        return StandardForm(_f, standardize(_u));
      }

      // Alternates removing potential cancellations and contractions.
      StandardForm finish() {
        for (;;) {
          reduce();
          StandardForm form = standard();
          auto         site = find_potential_contraction(form.ys);
          if (!site) {
            return form;
          }
          form = contraction_move(form, *site);
          _f   = form.f;
          _u   = units_of(form.ys);
          tick();
        }
      }

      void expand_below(std::size_t min_depth) {
        for (;;) {
          std::size_t k = 0;
          while (k < _u.size() && _u[k].s.size() >= min_depth) {
            ++k;
          }
          if (k == _u.size()) {
            return;
          }
          er_unblocked(k);
        }
      }

     private:
      void tick() {
        if (++_steps > kStepLimit) {
          throw InvariantError("normalization did not terminate within "
                               + std::to_string(kStepLimit) + " steps");
        }
      }

      // ER move on factor k, first expanding any earlier factor on which
      // x_{0[s_k]}^{+-1} is undefined.
      void er_unblocked(std::size_t k) {
        for (;;) {
          tick();
          if (auto r = er_move(_f, _u, k)) {
            _f = std::move(r->f);
            _u = std::move(r->ys);
            return;
          }
          TreePair x = generator(0, _u[k].s);
          if (_u[k].t < 0) {
            x = invert(x);
          }
          std::size_t j = 0;
          while (apply_prefix(x, _u[j].s)) {
            ++j;
          }
          // Every move made by the recursive call sits before k.
          std::size_t const before = _u.size();
          er_unblocked(j);
          k += _u.size() - before;
        }
      }

      // Between two copies of an index there are only independent factors,
      // so consecutive copies of opposite sign cancel.
      void cancel_inverse_pairs() {
        std::map<Word, std::vector<std::size_t>> open;
        std::vector<bool>                        dead(_u.size(), false);
        bool                                     any = false;
        for (std::size_t k = 0; k < _u.size(); ++k) {
          auto& stack = open[_u[k].s];
          if (!stack.empty() && _u[stack.back()].t == -_u[k].t) {
            dead[stack.back()] = dead[k] = true;
            stack.pop_back();
            any = true;
          } else {
            stack.push_back(k);
          }
        }
        if (!any) {
          return;
        }
        std::vector<YFactor> kept;
        for (std::size_t k = 0; k < _u.size(); ++k) {
          if (!dead[k]) {
            kept.push_back(std::move(_u[k]));
          }
        }
        _u = std::move(kept);
      }

      TreePair             _f;
      std::vector<YFactor> _u;
      std::size_t          _steps = 0;
    };

    void feed(Normalizer& nz, GroupWord const& w) {
      for (auto const& a : w.letters()) {
        if (a.is_x()) {
          nz.push_f(a.as_tree_pair());
        } else {
          nz.push_y(a.index, a.sign);
        }
        nz.reduce();
      }
    }
  }  // namespace

  StandardForm standard_form(GroupWord const& w, std::size_t min_depth) {
    Normalizer nz(w.arity());
    for (auto const& a : w.letters()) {
      if (a.is_x()) {
        nz.push_f(a.as_tree_pair());
      } else {
        nz.push_y(a.index, a.sign);
      }
    }
    nz.expand_below(min_depth);
    return nz.standard();
  }

  StandardForm remove_potential_cancellations(StandardForm const& form) {
    Normalizer nz(form.arity());
    nz.push(form);
    nz.reduce();
    return nz.standard();
  }

  StandardForm remove_potential_contractions(StandardForm const& form) {
    Normalizer nz(form.arity());
    nz.push(form);
    return nz.finish();
  }

  StandardForm normalize(GroupWord const& w) {
    Normalizer nz(w.arity());
    feed(nz, w);
    return nz.finish();
  }

  StandardForm normalize(StandardForm const& form) {
    return remove_potential_contractions(form);
  }

  bool is_normal_form(StandardForm const& form) {
    return is_standard(form.ys) && !find_potential_cancellation(form.ys)
           && !find_potential_contraction(form.ys);
  }

  StandardForm multiply(StandardForm const& a, StandardForm const& b) {
    if (a.arity() != b.arity()) {
      throw DomainError("multiply: arity mismatch");
    }
    Normalizer nz(a.arity());
    nz.push(a);
    nz.push(b);
    return nz.finish();
  }

  StandardForm inverse(StandardForm const& a) {
    Normalizer nz(a.arity());
    auto const units = units_of(a.ys);
    for (auto it = units.rbegin(); it != units.rend(); ++it) {
      nz.push_y(it->s, YSign(static_cast<int>(-it->t)));
      nz.reduce();
    }
    nz.push_f(invert(a.f));
    return nz.finish();
  }

  StandardForm power(StandardForm const& a, long long k) {
    StandardForm base = k < 0 ? inverse(a) : normalize(a);
    unsigned long long e = k < 0 ? 0ULL - static_cast<unsigned long long>(k)
                                 : static_cast<unsigned long long>(k);
    StandardForm result(a.arity());
    while (e > 0) {
      if (e & 1ULL) {
        result = multiply(result, base);
      }
      e >>= 1;
      if (e > 0) {
        base = multiply(base, base);
      }
    }
    return result;
  }

  bool equals(StandardForm const& a, StandardForm const& b) {
    return a.arity() == b.arity() && normalize(a) == normalize(b);
  }

}  // namespace lmg
