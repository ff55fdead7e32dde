#pragma once

// Embeddings G_0(p) -> G_0(q) for (p-1) | (q-1) and the abelianization
// G_0(n) -> Z^{n+1}.

#include <vector>

#include "lmg/group.hpp"

namespace lmg {

  // d = (q-1)/(p-1); DomainError unless 2 <= p <= q and the division is exact.
  int arity_ratio(int p, int q);

  // i_{p,q}: every letter multiplied by d.
  Word           letter_stretch(Word const& s, int q);
  EvPeriodicWord stretch_point(EvPeriodicWord const& x, int q);

  // Each p-caret becomes a q-caret whose old edges sit at 0, d, ..., q-1.
  TreePair embed_f(TreePair const& f, int q);

  // I_{p,q} on a normal form. Throws InvariantError if the image is not in
  // normal form.
  StandardForm embed(StandardForm const& g, int q);
  // Letterwise on words; x letters go through embed_f.
  GroupWord embed(GroupWord const& w, int q);

  // (a(f), sum of the y exponents).
  std::vector<long long> abelianize(StandardForm const& g);
  std::vector<long long> abelianize(GroupWord const& w);

  // x_0, ..., x_{n-2}, x_{0[n-1]}, y_{(n-1)0}.
  GroupWord standard_generators(int n);

}  // namespace lmg
