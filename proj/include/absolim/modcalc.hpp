#pragma once

#include "absolim/enriched.hpp"
#include "absolim/parallel.hpp"

namespace absolim {

// ---------------------------------------------------------------------------
// Independent oracle (finset only). Decides "u exhibits m as the lifting hom
// [n, l]" by raw element enumeration: the end is computed as the set of
// action-compatible families of plain functions, and the canonical comparison
// map is checked to be a bijection at every component. No tensor, equalizer
// or hom-carrier machinery is involved, so this is a genuinely separate path
// from exhibits_as_left_hom below.
// ---------------------------------------------------------------------------

// u_blocks(t, mid, s) is the block map n(t,mid) (x) m(mid,s) -> l(t,s) given
// as a table over pure pair indices (i * m.n + j).
using BlockTable = std::vector<std::vector<int>>;  // [(t * nmid + mid) * ns + s] -> table

Report oracle_exhibits_left(const Profunctor& n, const Profunctor& m, const Profunctor& l,
                            const BlockTable& u_blocks);

// ---------------------------------------------------------------------------
// Collective tensor n (x)_B m for m: A -|-> B, n: B -|-> C (m.target and
// n.source must agree). Each component (c, a) is presented as a coequalizer
// of a sum of blocks indexed by the middle objects.
// ---------------------------------------------------------------------------

struct TensorComponent {
  CoproductResult sum;     // over b: n(c,b) (x) m(b,a)
  CoproductResult relsum;  // over (b,b2): (n(c,b) (x) B(b,b2)) (x) m(b2,a)
  BaseMorphism via_n;      // relsum -> sum: act on n, land in slot b2
  BaseMorphism via_m;      // relsum -> sum: reassociate, act on m, land in slot b
  BaseMorphism proj;       // sum -> component carrier (coequalizer of the two)
};

struct TensorPresentation {
  Profunctor n, m;
  Profunctor result;
  std::vector<TensorComponent> comps;  // [t * ns + s] indexed like result

  const TensorComponent& at(int t, int s) const {
    return comps[size_t(t) * result.ns() + s];
  }
};

TensorPresentation tensor_over(const Profunctor& n, const Profunctor& m);

// Map out of the tensor from a balanced family of block maps
// family[(t * nmid + mid) * ns + s]: n(t,mid) (x) m(mid,s) -> l(t,s).
// Throws CatError naming the first unbalanced middle pair.
ProfMap induce_out_of_tensor(const TensorPresentation& pres,
                             const std::vector<BaseMorphism>& family, const Profunctor& l);

// beta (x) alpha on presentations of both sides.
ProfMap tensor_profmap(const TensorPresentation& dom_pres, const TensorPresentation& cod_pres,
                       const ProfMap& beta, const ProfMap& alpha);

// Structure maps of the module tensor. fwd/inv are mutually inverse.
struct UnitorPair {
  TensorPresentation pres;
  ProfMap fwd;  // pres.result -> m
  ProfMap inv;
};
UnitorPair module_left_unitor(const Profunctor& m);   // Id_target (x) m -> m
UnitorPair module_right_unitor(const Profunctor& m);  // m (x) Id_source -> m

// (p (x) n) (x) m -> p (x) (n (x) m); recomputes the four presentations.
ProfMap module_associator(const Profunctor& p, const Profunctor& n, const Profunctor& m);

ProfMap compose_profmap(const ProfMap& f, const ProfMap& g);  // f then g
ProfMap inverse_profmap(const ProfMap& f);                    // componentwise inverse

// ---------------------------------------------------------------------------
// Lifting homs (enriched ends). For n: A -|-> B and l: X -|-> B, the module
// [n, l]: X -|-> A has components
//   [n, l](a, x) = equalizer( prod_b hom(n(b,a), l(b,x))
//                             => prod_{b,b2} hom(B(b2,b) (x) n(b,a), l(b2,x)) ).
// For m: A -|-> B and l: A -|-> Y, the mirror <m, l>: B -|-> Y has components
//   <m, l>(y, b) = equalizer over hom_right of m-blocks.
// ---------------------------------------------------------------------------

struct EndComponent {
  ProductResult prod;
  BaseMorphism inclusion;  // component carrier -> prod.obj
};

struct EndPresentation {
  Profunctor n, l;  // for the right-hand version these hold m, l
  Profunctor result;
  std::vector<EndComponent> comps;  // indexed like result

  const EndComponent& at(int t, int s) const {
    return comps[size_t(t) * result.ns() + s];
  }
};

EndPresentation lifting_hom_left(const Profunctor& n, const Profunctor& l);
EndPresentation lifting_hom_right(const Profunctor& m, const Profunctor& l);

// For u: n (x) m -> l, the transpose m -> [n, l] (left) or n -> <m, l> (right).
ProfMap transpose_left(const TensorPresentation& pres, const EndPresentation& end,
                       const ProfMap& u);
ProfMap transpose_right(const TensorPresentation& pres, const EndPresentation& end,
                        const ProfMap& u);

// Evaluation n (x) [n, l] -> l.
ProfMap end_evaluation_left(const EndPresentation& end, const TensorPresentation& pres);

struct Exhibition {
  bool exhibits = false;
  ProfMap kappa;      // right factor -> [n, l], or left factor -> <m, l>
  ProfMap kappa_inv;  // meaningful only when exhibits
  Report detail;      // per-component failures
};

// Does u: n (x) m -> l exhibit m as [n, l] (left) / n as <m, l> (right)?
Exhibition exhibits_as_left_hom(const TensorPresentation& pres, const ProfMap& u);
Exhibition exhibits_as_right_hom(const TensorPresentation& pres, const ProfMap& u);

// ---------------------------------------------------------------------------
// Adjunction of modules phi: A -|-> B, psi: B -|-> A with unit and counit.
// ---------------------------------------------------------------------------

struct Adjunction {
  Profunctor weight;    // phi
  Profunctor coweight;  // psi
  ProfMap unit_map;     // Id_A -> psi (x)_B phi
  ProfMap counit_map;   // phi (x)_A psi -> Id_B
};

// Triangle identities (shapes of the structure maps are validated first).
Report check_adjunction(const Adjunction& adj);

}  // namespace absolim
