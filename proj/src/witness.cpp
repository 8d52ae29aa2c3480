#include "dcat/crossprod.hpp"
#include "dcat/instances.hpp"

namespace dcat {

NonInjectivityWitness find_noninjectivity_witness(std::shared_ptr<const DoubleCat> c) {
  // Extraction only uses cartesianness of unit squares, so that is the
  // precondition verified here (a full bifibration sweep is not needed).
  for (VertId f = 0; f < c->vertical_category().morphism_count(); ++f)
    if (!is_fully_faithful_morphism(*c, f))
      throw Error(Err::NotFramed,
                  "vertical morphism " + std::to_string(f) + " is not fully faithful");

  Pi2Indexing phi = induce_opindexing(c);
  CrossedProduct q = build_crossed_product(phi);
  DoubleFunctorTable bang = evaluation_functor(q, c);
  InjectivityDecision inj = check_eval_injective(bang, q, *c);

  NonInjectivityWitness out;
  if (inj.injective) return out;
  out.found = true;
  out.image = inj.image;
  const HorizontalizationView* view = indexing_view(q.phi);
  auto fill = [&](SqId s, SqId& down, SqId& up, VertId& mid) {
    CpSquare rep = q.dc->decode(s);
    if (rep.is_globular) {
      down = view->parent_square(rep.cell);
      up = kNone;
      mid = kNone;
    } else {
      down = view->parent_square(rep.down);
      up = view->parent_square(rep.up);
      mid = rep.mid;
    }
  };
  VertId m1, m2;
  fill(inj.first, out.first_down, out.first_up, m1);
  fill(inj.second, out.second_down, out.second_up, m2);
  out.vertical = m1 != kNone ? m1 : m2;
  return out;
}

}  // namespace dcat
