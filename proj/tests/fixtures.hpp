#pragma once

// Hand-built double category tables used across the test suites.

#include "dcat/doublecat.hpp"

namespace fixtures {

using namespace dcat;

// Two factorizations of verticals of a square through two middle objects:
// p -> r1 -> q and p -> r2 -> q with g2∘g1 = f = h2∘h1, unit 1-cells only,
// and a Z/2 worth of identity-boundary squares at each middle object. The
// horizontal composite t of the two loaded canonical squares is reachable by
// pasting but is not a vertical stack of globular and unit squares: the two
// frame words share no common refinement, so the composite cannot be
// re-subdivided.
struct MisalignedDiamond {
  TableDoubleCat cat;
  SqId s_eps, s_delta, t, u_f;

  MisalignedDiamond() {
    FiniteCategory c0;
    ObjId p = c0.add_object(), r1 = c0.add_object(), r2 = c0.add_object(), q = c0.add_object();
    MorId ip = c0.add_morphism(p, p), ir1 = c0.add_morphism(r1, r1),
          ir2 = c0.add_morphism(r2, r2), iq = c0.add_morphism(q, q);
    MorId g1 = c0.add_morphism(p, r1), g2 = c0.add_morphism(r1, q);
    MorId h1 = c0.add_morphism(p, r2), h2 = c0.add_morphism(r2, q);
    MorId f = c0.add_morphism(p, q);
    c0.finalize();
    c0.set_identity(p, ip);
    c0.set_identity(r1, ir1);
    c0.set_identity(r2, ir2);
    c0.set_identity(q, iq);
    for (MorId m = 0; m < c0.morphism_count(); ++m) {
      c0.set_composite(m, c0.identity(c0.src(m)), m);
      c0.set_composite(c0.identity(c0.tgt(m)), m, m);
    }
    c0.set_composite(g2, g1, f);
    c0.set_composite(h2, h1, f);
    cat.set_vertical_category(c0);

    HorId up = cat.add_hcell(p, p), ur1 = cat.add_hcell(r1, r1), ur2 = cat.add_hcell(r2, r2),
          uq = cat.add_hcell(q, q);
    cat.set_hunit(p, up);
    cat.set_hunit(r1, ur1);
    cat.set_hunit(r2, ur2);
    cat.set_hunit(q, uq);
    for (HorId h : {up, ur1, ur2, uq}) cat.set_hcompose(h, h, h);

    // vertical identity squares and the pi2 generators
    SqId vp = cat.add_square({ip, ip, up, up});
    SqId vr1 = cat.add_square({ir1, ir1, ur1, ur1});
    SqId vr2 = cat.add_square({ir2, ir2, ur2, ur2});
    SqId vq = cat.add_square({iq, iq, uq, uq});
    SqId eps = cat.add_square({ir1, ir1, ur1, ur1});
    SqId delta = cat.add_square({ir2, ir2, ur2, ur2});
    // unit squares of the generators and the diagonal
    SqId ug1 = cat.add_square({g1, g1, up, ur1});
    SqId ug2 = cat.add_square({g2, g2, ur1, uq});
    SqId uh1 = cat.add_square({h1, h1, up, ur2});
    SqId uh2 = cat.add_square({h2, h2, ur2, uq});
    u_f = cat.add_square({f, f, up, uq});
    // loaded units and the canonical squares through each route
    SqId mg1 = cat.add_square({g1, g1, up, ur1});   // [U(g1); eps]
    SqId mg2 = cat.add_square({g2, g2, ur1, uq});   // [eps; U(g2)]
    SqId mh1 = cat.add_square({h1, h1, up, ur2});
    SqId mh2 = cat.add_square({h2, h2, ur2, uq});
    s_eps = cat.add_square({f, f, up, uq});         // [U(g1); eps; U(g2)]
    s_delta = cat.add_square({f, f, up, uq});       // [U(h1); delta; U(h2)]
    t = cat.add_square({f, f, up, uq});             // s_eps □ s_delta, not a stack

    cat.set_unit_square(ip, vp);
    cat.set_unit_square(ir1, vr1);
    cat.set_unit_square(ir2, vr2);
    cat.set_unit_square(iq, vq);
    cat.set_unit_square(g1, ug1);
    cat.set_unit_square(g2, ug2);
    cat.set_unit_square(h1, uh1);
    cat.set_unit_square(h2, uh2);
    cat.set_unit_square(f, u_f);
    cat.set_videntity(up, vp);
    cat.set_videntity(ur1, vr1);
    cat.set_videntity(ur2, vr2);
    cat.set_videntity(uq, vq);

    // pi2 at r1: {vr1, eps} with xor; same at r2.
    auto xor1 = [&](SqId a, SqId b) { return (a == eps) == (b == eps) ? vr1 : eps; };
    auto xor2 = [&](SqId a, SqId b) { return (a == delta) == (b == delta) ? vr2 : delta; };
    for (SqId a : {vr1, eps})
      for (SqId b : {vr1, eps}) {
        cat.set_vcomp(a, b, xor1(a, b));
        cat.set_hcomp(a, b, xor1(a, b));
      }
    for (SqId a : {vr2, delta})
      for (SqId b : {vr2, delta}) {
        cat.set_vcomp(a, b, xor2(a, b));
        cat.set_hcomp(a, b, xor2(a, b));
      }
    cat.set_vcomp(vp, vp, vp);
    cat.set_hcomp(vp, vp, vp);
    cat.set_vcomp(vq, vq, vq);
    cat.set_hcomp(vq, vq, vq);

    // loading and unloading the route squares
    auto route = [&](SqId unit, SqId loaded, SqId pi_unit, SqId pi_gen, bool below) {
      // vcomp with the pi2 squares on the matching side
      if (below) {  // U(g1): pi2 sits below (at r1)
        cat.set_vcomp(unit, pi_unit, unit);
        cat.set_vcomp(unit, pi_gen, loaded);
        cat.set_vcomp(loaded, pi_unit, loaded);
        cat.set_vcomp(loaded, pi_gen, unit);
      } else {  // U(g2): pi2 sits above
        cat.set_vcomp(pi_unit, unit, unit);
        cat.set_vcomp(pi_gen, unit, loaded);
        cat.set_vcomp(pi_unit, loaded, loaded);
        cat.set_vcomp(pi_gen, loaded, unit);
      }
    };
    route(ug1, mg1, vr1, eps, true);
    route(ug2, mg2, vr1, eps, false);
    route(uh1, mh1, vr2, delta, true);
    route(uh2, mh2, vr2, delta, false);
    // top/bottom vertical identities on the route squares
    for (SqId s : {ug1, mg1}) {
      cat.set_vcomp(vp, s, s);
    }
    for (SqId s : {uh1, mh1}) cat.set_vcomp(vp, s, s);
    for (SqId s : {ug2, mg2, uh2, mh2}) cat.set_vcomp(s, vq, s);

    // stacking the two-route squares: route1 then route2
    auto stack = [&](SqId top_unit, SqId top_loaded, SqId bot_unit, SqId bot_loaded) {
      cat.set_vcomp(top_unit, bot_unit, u_f);
      cat.set_vcomp(top_unit, bot_loaded, s_eps == bot_loaded || bot_loaded == mg2 ? s_eps : s_delta);
      cat.set_vcomp(top_loaded, bot_unit, bot_unit == ug2 ? s_eps : s_delta);
      cat.set_vcomp(top_loaded, bot_loaded, u_f);
    };
    stack(ug1, mg1, ug2, mg2);
    stack(uh1, mh1, uh2, mh2);

    // f-level squares against the endpoint pi2s (both trivial) and vcomp with
    // vertical identities
    for (SqId s : {u_f, s_eps, s_delta, t}) {
      cat.set_vcomp(vp, s, s);
      cat.set_vcomp(s, vq, s);
    }

    // horizontal composition on the f-level squares: Z/2 x Z/2
    auto hmul = [&](SqId a, SqId b) {
      int av = a == s_eps ? 1 : a == s_delta ? 2 : a == t ? 3 : 0;
      int bv = b == s_eps ? 1 : b == s_delta ? 2 : b == t ? 3 : 0;
      int rv = av ^ bv;
      return rv == 0 ? u_f : rv == 1 ? s_eps : rv == 2 ? s_delta : t;
    };
    for (SqId a : {u_f, s_eps, s_delta, t})
      for (SqId b : {u_f, s_eps, s_delta, t}) cat.set_hcomp(a, b, hmul(a, b));
    // and on the route squares: Z/2 each
    auto hroute = [&](SqId unit, SqId loaded) {
      cat.set_hcomp(unit, unit, unit);
      cat.set_hcomp(unit, loaded, loaded);
      cat.set_hcomp(loaded, unit, loaded);
      cat.set_hcomp(loaded, loaded, unit);
    };
    hroute(ug1, mg1);
    hroute(ug2, mg2);
    hroute(uh1, mh1);
    hroute(uh2, mh2);

    cat.finalize();
  }
};

}  // namespace fixtures
