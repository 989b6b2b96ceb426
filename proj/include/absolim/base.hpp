#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "absolim/lattice.hpp"
#include "absolim/qmat.hpp"

namespace absolim {

// Raised on structurally invalid inputs: size mismatches, non-composable
// morphisms, maps that fail to factor where a factorization was requested.
struct CatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class BaseTag { finset, finset_ptd, matq, suplat };

std::string tag_name(BaseTag t);

// One object of the enriching base.
//   finset:     n = cardinality (>= 0)
//   finset_ptd: n = cardinality (>= 1), basepoint is index 0
//   matq:       n = dimension (>= 0)
//   suplat:     n = lat.n, lat a validated lattice with bottom at index 0
struct BaseObject {
  BaseTag tag = BaseTag::finset;
  int n = 0;
  Lat lat;

  bool operator==(const BaseObject& o) const {
    return tag == o.tag && n == o.n && (tag != BaseTag::suplat || lat == o.lat);
  }
  bool operator!=(const BaseObject& o) const { return !(*this == o); }
};

BaseObject finset_obj(int n);
BaseObject finset_ptd_obj(int n);
BaseObject matq_obj(int dim);
// Validates the order and reindexes so the bottom lands at index 0.
BaseObject suplat_obj(Lat l);

// Morphisms are tables (finset / finset_ptd / suplat) or cod x dom rational
// matrices (matq). Equality is bit-exact.
struct BaseMorphism {
  BaseTag tag = BaseTag::finset;
  BaseObject dom, cod;
  std::vector<int> table;
  QMat mat;

  bool operator==(const BaseMorphism& o) const {
    return tag == o.tag && dom == o.dom && cod == o.cod && table == o.table && mat == o.mat;
  }
  bool operator!=(const BaseMorphism& o) const { return !(*this == o); }
};

// Constructors validate: ranges, basepoint preservation, join preservation,
// matrix dimensions. They throw CatError with a localized description.
BaseMorphism make_table_morphism(const BaseObject& dom, const BaseObject& cod,
                                 std::vector<int> table);
BaseMorphism make_matq_morphism(const BaseObject& dom, const BaseObject& cod, QMat m);

BaseMorphism identity(const BaseObject& a);

// Diagrammatic composition: seq(f, g) = f then g.
BaseMorphism seq(const BaseMorphism& f, const BaseMorphism& g);
template <typename... Ms>
BaseMorphism seq(const BaseMorphism& f, const BaseMorphism& g, const Ms&... rest) {
  return seq(seq(f, g), rest...);
}

// --- monoidal structure ---------------------------------------------------

BaseObject unit_obj(BaseTag t);
BaseObject tensor_obj(const BaseObject& a, const BaseObject& b);
BaseMorphism tensor_mor(const BaseMorphism& f, const BaseMorphism& g);

// Index of the pure tensor of elements (i, j) in the tensor carrier: pair
// index for finset, smash index for finset_ptd, basis index for matq, the
// class of the principal down-set for suplat.
int pure_tensor_index(const BaseObject& a, const BaseObject& b, int i, int j);

// (a (x) b) (x) c -> a (x) (b (x) c); identity tables except for suplat.
BaseMorphism associator(const BaseObject& a, const BaseObject& b, const BaseObject& c);
BaseMorphism left_unitor(const BaseObject& a);   // I (x) a -> a
BaseMorphism right_unitor(const BaseObject& a);  // a (x) I -> a
BaseMorphism braiding(const BaseObject& a, const BaseObject& b);  // a (x) b -> b (x) a

// --- (co)limits -----------------------------------------------------------

struct CoproductResult {
  BaseObject obj;
  std::vector<BaseMorphism> injections;
};
struct ProductResult {
  BaseObject obj;
  std::vector<BaseMorphism> projections;
};

CoproductResult coproduct(BaseTag t, const std::vector<BaseObject>& parts);
ProductResult product(BaseTag t, const std::vector<BaseObject>& parts);

// Cotuple [f_0, .., f_k]: coproduct -> X, and tuple <f_0, .., f_k>: X -> product.
// The explicit endpoint is only required for empty families.
BaseMorphism from_coproduct(const CoproductResult& cp, const std::vector<BaseMorphism>& fs,
                            std::optional<BaseObject> cod = std::nullopt);
BaseMorphism to_product(const ProductResult& pr, const std::vector<BaseMorphism>& fs,
                        std::optional<BaseObject> dom = std::nullopt);

struct SubobjectResult {
  BaseObject obj;
  BaseMorphism inclusion;
};
struct QuotientResult {
  BaseObject obj;
  BaseMorphism projection;
};

SubobjectResult equalizer(const BaseMorphism& f, const BaseMorphism& g);
QuotientResult coequalizer(const BaseMorphism& f, const BaseMorphism& g);

// Factors h through a surjection e (h = result . e). Works for any epi of the
// base, not just coequalizer projections. Throws CatError when h is not
// constant on the fibers of e.
BaseMorphism induce_from_coequalizer(const BaseMorphism& epi, const BaseMorphism& h);

// Corestricts h through an injection m (h = m . result). Throws CatError when
// h does not land in the image of m.
BaseMorphism restrict_through_equalizer(const BaseMorphism& mono, const BaseMorphism& h);

// --- internal homs ---------------------------------------------------------

// Carrier of maps a -> x. hom_left and hom_right agree on objects; they
// differ in which tensor factor the currying bijections move:
//   curry_left:  (a (x) b -> x)  <->  (b -> hom_left(a, x))
//   curry_right: (b (x) a -> x)  <->  (b -> hom_right(a, x))
// Table encodings are lexicographic with slot 0 most significant; matq homs
// flatten a matrix M (dx x da) at coordinate r*da + s.
BaseObject hom_left(const BaseObject& a, const BaseObject& x);
BaseObject hom_right(const BaseObject& a, const BaseObject& x);

BaseMorphism curry_left(const BaseObject& a, const BaseObject& b, const BaseMorphism& f);
BaseMorphism uncurry_left(const BaseObject& a, const BaseObject& b, const BaseObject& x,
                          const BaseMorphism& g);
BaseMorphism curry_right(const BaseObject& b, const BaseObject& a, const BaseMorphism& f);
BaseMorphism uncurry_right(const BaseObject& b, const BaseObject& a, const BaseObject& x,
                           const BaseMorphism& g);

// Evaluation a (x) hom_left(a,x) -> x and hom_right(a,x) (x) a -> x.
BaseMorphism ev_left(const BaseObject& a, const BaseObject& x);
BaseMorphism ev_right(const BaseObject& a, const BaseObject& x);

// Internal pre/post composition on hom carriers.
BaseMorphism hom_left_pre(const BaseMorphism& w, const BaseObject& x);   // [a,x] -> [a',x], w: a' -> a
BaseMorphism hom_left_post(const BaseObject& a, const BaseMorphism& u);  // [a,x] -> [a,y], u: x -> y
BaseMorphism hom_right_pre(const BaseMorphism& w, const BaseObject& x);
BaseMorphism hom_right_post(const BaseObject& a, const BaseMorphism& u);

// Number of elements of the hom carrier (table bases only), and the
// encode/decode bijection between carrier indices and actual morphisms.
int hom_size(const BaseObject& a, const BaseObject& x);
BaseMorphism hom_element(const BaseObject& a, const BaseObject& x, int idx);
int hom_index(const BaseObject& a, const BaseObject& x, const BaseMorphism& f);

// matq hom carriers: matrix <-> flattened column.
QMat flatten_hom(const QMat& m);
QMat unflatten_hom(int da, int dx, const QMat& col);

// --- distributivity and isos ------------------------------------------------

// (coprod a_i) (x) m -> coprod (a_i (x) m); inverse of the cotuple of
// inj_i (x) 1. Identity tables except for suplat.
BaseMorphism distribute_sum_left(const std::vector<BaseObject>& parts, const BaseObject& m);
// m (x) (coprod a_i) -> coprod (m (x) a_i).
BaseMorphism distribute_sum_right(const BaseObject& m, const std::vector<BaseObject>& parts);

// Two-sided inverse when f is invertible.
std::optional<BaseMorphism> is_iso(const BaseMorphism& f);

}  // namespace absolim
