use super::*;
use crate::catkit::{
    category_structures, dec, is_discrete_fibration, is_groupoid, pt_is_cartesian, Ambient, FinSetCat, InternalFunctor,
    PtCat, PtObject, SliceObj,
};
use crate::corpus;
use crate::setcat::{Atom, FinMap, FinSetObj};

fn sets(n: usize) -> Vec<FinSetObj> {
    FinSetCat.probes(n)
}

/// Laws of the maybe monad recomputed with `Option`, independent of the
/// finite-map machinery.
fn maybe_oracle(n: usize) -> bool {
    let lift = |a: &Atom| match a {
        Atom::Just(x) => Some((**x).clone()),
        _ => None,
    };
    for x in sets(n) {
        let tx = Maybe::new().obj(&x).unwrap();
        let ttx = Maybe::new().obj(&tx).unwrap();
        let mu = Maybe::new().mult(&x).unwrap();
        for w in ttx.iter() {
            let flat = lift(w).and_then(|inner| lift(&inner));
            if lift(&mu.apply(w).unwrap()) != flat {
                return false;
            }
        }
    }
    true
}

#[test]
fn identity_and_maybe_are_monads() {
    assert!(validate_monad(&Identity { amb: FinSetCat }, 3).unwrap().passed());
    assert!(validate_monad(&Identity { amb: PtCat }, 3).unwrap().passed());
    assert!(maybe_oracle(3));
    let cert = validate_monad(&Maybe::new(), 3).unwrap();
    assert!(cert.passed(), "{cert}");
}

#[test]
fn broken_maybe_fails_associativity() {
    let cert = validate_monad(&Maybe::broken(), 2).unwrap();
    assert_eq!(cert.verdict("mu.mu_T=mu.T(mu)"), Some(false), "{cert}");
}

#[test]
fn maybe_is_cartesian_but_not_hypercartesian() {
    let m = Maybe::new();
    let c = certify_cartesian(&m, 3).unwrap();
    assert!(c.cartesian(), "{}", c.checks);
    assert!(c.half_cartesian() && c.conservative(), "{}", c.checks);
    // (just ⊥, ⊥) is identified by μ but no element of T³ lies over it:
    // T(μ) sends only ⊥ to ⊥, and μ_T(⊥) = ⊥.
    assert!(!c.hypercartesian());
    let x = FinSetObj::empty("E");
    let t3 = m.obj(&m.obj(&m.obj(&x).unwrap()).unwrap()).unwrap();
    let (mu_t, t_mu) = (m.mult(&m.obj(&x).unwrap()).unwrap(), m.fmap(&m.mult(&x).unwrap()).unwrap());
    assert!(!t3.iter().any(|t| mu_t.apply(t).unwrap() == Atom::just(Atom::Bot) && t_mu.apply(t).unwrap() == Atom::Bot));
}

/// A monoid is a group when every element has a two-sided inverse.
fn is_group(m: &FinMonoid) -> bool {
    m.carrier.iter().all(|a| m.carrier.iter().any(|b| m.mul(a, b) == m.unit && m.mul(b, a) == m.unit))
}

#[test]
fn writer_monads() {
    for mo in [FinMonoid::z2(), FinMonoid::absorbing()] {
        let w = Writer::new(mo.clone());
        assert!(validate_monad(&w, 2).unwrap().passed());
        let c = certify_cartesian(&w, 2).unwrap();
        assert!(c.cartesian(), "{}", c.checks);
        assert_eq!(c.hypercartesian(), is_group(&mo), "{}", c.checks);
    }
    let bad = Writer::with_unit(FinMonoid::absorbing(), Atom::sym("z")).unwrap();
    assert!(!validate_monad(&bad, 2).unwrap().passed());
}

#[test]
fn list_monad_basics() {
    let m = List::new(4);
    let empty = FinSetObj::empty("E");
    assert_eq!(m.obj(&empty).unwrap().elems(), &[Atom::Word(vec![])]);
    let ab = FinSetObj::of_syms("AB", &["a", "b"]);
    assert_eq!(list_grade_piece(&m, &ab, 2).unwrap().len(), 4);
    assert!(list_grade_piece(&m, &ab, 5).is_err());
    let (a, b) = (Atom::sym("a"), Atom::sym("b"));
    let ww = Atom::word(vec![Atom::word(vec![a.clone()]), Atom::word(vec![b.clone(), a.clone()])]);
    assert_eq!(m.mult(&ab).unwrap().apply(&ww).unwrap(), Atom::word(vec![a.clone(), b, a]));
    let cert = validate_monad(&List::new(3), 2).unwrap();
    assert!(cert.passed(), "{cert}");
    let c = certify_cartesian(&List::new(3), 2).unwrap();
    assert!(c.cartesian(), "{}", c.checks);
    let words = m.obj(&ab).unwrap();
    let grow = FinMap::new(&ab, &words, |x| Atom::word(vec![x.clone(), x.clone()])).unwrap();
    assert!(matches!(m.fmap(&grow), Err(crate::Error::GradeBound { bound: 4, .. })));
}

#[test]
fn tx_monad_examples() {
    let disc = TxMonad::new(&corpus::discrete(2)).unwrap();
    for h in disc.probes(2) {
        let th = disc.obj(&h).unwrap();
        assert_eq!(th.carrier.len(), h.carrier.len());
        assert!(disc.ambient().is_iso(&disc.unit(&h).unwrap()));
    }
    let two = TxMonad::new(&corpus::arrow_category()).unwrap();
    let id = SliceObj::new(FinMap::id(&two.cat.x0));
    assert_eq!(two.obj(&id).unwrap().carrier.len(), 3);
    assert!(validate_monad(&two, 2).unwrap().passed());
    let c = certify_cartesian(&two, 2).unwrap();
    assert!(c.cartesian(), "{}", c.checks);
    assert!(!c.hypercartesian());
    let iso = TxMonad::new(&corpus::iso_pair()).unwrap();
    assert!(certify_cartesian(&iso, 2).unwrap().hypercartesian());
}

#[test]
fn tx_hypercartesian_iff_groupoid() {
    let mut cats = crate::catkit::small_categories(2, 3);
    cats.extend(corpus::categories());
    for c in cats {
        let t = TxMonad::new(&c).unwrap();
        let cert = certify_cartesian(&t, 1).unwrap();
        assert!(cert.cartesian(), "{}", c.name);
        assert_eq!(cert.hypercartesian(), is_groupoid(&c), "{}", c.name);
    }
}

#[test]
fn g_monad() {
    let cert = validate_monad(&GMonad, 4).unwrap();
    assert!(cert.passed(), "{cert}");
    let y = FinSetObj::of_syms("Y", &["y"]);
    let o = PtObject::identity_on(&y);
    let go = GMonad.obj(&o).unwrap();
    assert_eq!(go.upper().len(), 1);
    assert!(PtCat.is_iso(&GMonad.unit(&o).unwrap()));
    let pq = FinSetObj::of_syms("X", &["p", "q"]);
    let star = FinSetObj::of_syms("S", &["*"]);
    let g = FinMap::constant(&pq, &star, &Atom::sym("*")).unwrap();
    let t = FinMap::constant(&star, &pq, &Atom::sym("p")).unwrap();
    let o = PtObject::new(g, t).unwrap();
    assert_eq!(GMonad.obj(&o).unwrap().upper().len(), 4);
    for p in PtCat.probes(4) {
        assert!(pt_is_cartesian(&GMonad.unit(&p).unwrap()));
        assert!(pt_is_cartesian(&GMonad.mult(&p).unwrap()));
        assert!(rich_check(&p).unwrap().passed());
    }
    let c = certify_sigma_cartesian(&GMonad, 3, "P", pt_is_cartesian).unwrap();
    assert!(c.cartesian(), "{}", c.checks);
}

#[test]
fn algebra_examples() {
    let m = Maybe::new();
    let a = FinSetObj::of_syms("A", &["a"]);
    assert!(validate_algebra(&m, &Algebra::free(&m, &a).unwrap()).unwrap().passed());
    let ta = m.obj(&a).unwrap();
    let xi = FinMap::constant(&ta, &a, &Atom::sym("a")).unwrap();
    assert!(validate_algebra(&m, &Algebra::new(&m, a.clone(), xi).unwrap()).unwrap().passed());
    let ab = FinSetObj::of_syms("AB", &["a", "b"]);
    let tab = m.obj(&ab).unwrap();
    let swap = FinMap::new(&tab, &ab, |w| match w {
        Atom::Just(x) if **x == Atom::sym("a") => Atom::sym("b"),
        _ => Atom::sym("a"),
    })
    .unwrap();
    let cert = validate_algebra(&m, &Algebra::new(&m, ab.clone(), swap).unwrap()).unwrap();
    assert_eq!(cert.verdict("xi.lambda=1"), Some(false));
    for x in sets(3) {
        // pointed sets: ξ(⊥) is free, the rest is forced
        assert_eq!(algebras_on(&m, &x).unwrap().len(), x.len());
    }
}

#[test]
fn structure_maps_are_coequalizers_for_hypercartesian_monads() {
    let iso = TxMonad::new(&corpus::iso_pair()).unwrap();
    for h in iso.probes(2) {
        for alg in algebras_on(&iso, &h).unwrap() {
            assert!(kernel_of_structure(&iso, &alg).unwrap());
        }
    }
    let w = Writer::new(FinMonoid::z2());
    for x in sets(1) {
        for alg in algebras_on(&w, &x).unwrap() {
            assert!(kernel_of_structure(&w, &alg).unwrap());
        }
    }
}

#[test]
fn tbar_examples() {
    let id = Identity { amb: FinSetCat };
    let x = FinSetObj::of_syms("X", &["a", "b"]);
    let (c, cert) = tbar(&id, &Algebra::free(&id, &x).unwrap()).unwrap();
    assert!(cert.passed());
    assert_eq!(c.x1.len(), c.x0.len());

    let m = Maybe::new();
    let a = FinSetObj::of_syms("A", &["a"]);
    let free = Algebra::free(&m, &a).unwrap();
    let (c, cert) = tbar(&m, &free).unwrap();
    assert!(cert.passed(), "{cert}");
    assert_eq!(c.x1.len(), 4);
    assert!(!is_groupoid(&c));

    let ta = m.obj(&a).unwrap();
    let xi = FinMap::constant(&ta, &a, &Atom::sym("a")).unwrap();
    let triv = Algebra::new(&m, a.clone(), xi.clone()).unwrap();
    let f = tbar_functor(&m, &free, &triv, &xi).unwrap();
    assert!(f.validate().passed());
    assert!(is_discrete_fibration(&f));

    let iso = TxMonad::new(&corpus::iso_pair()).unwrap();
    for h in iso.probes(1) {
        let (c, cert) = tbar(&iso, &Algebra::free(&iso, &h).unwrap()).unwrap();
        assert!(cert.passed());
        assert!(is_groupoid(&c));
    }
}

#[test]
fn dfib_translation() {
    let two = TxMonad::new(&corpus::arrow_category()).unwrap();
    let idf = InternalFunctor::identity(&two.cat);
    let alg = dfib_to_algebra(&two, &idf).unwrap();
    assert_eq!(alg.carrier.over, FinMap::id(&two.cat.x0));
    for p in two.obj(&alg.carrier).unwrap().carrier.iter() {
        assert_eq!(alg.xi.map.apply(p).unwrap(), two.cat.d0.apply(p.proj(1).unwrap()).unwrap());
    }

    let iso = TxMonad::new(&corpus::iso_pair()).unwrap();
    let (_, eps) = dec(&iso.cat).unwrap();
    let alg = dfib_to_algebra(&iso, &eps).unwrap();
    assert_eq!(alg.carrier.over, iso.cat.d1);

    let mut seen = 0;
    for h in two.probes(2) {
        for alg in algebras_on(&two, &h).unwrap() {
            let f = algebra_to_dfib(&two, &alg).unwrap();
            assert!(is_discrete_fibration(&f));
            assert_eq!(dfib_to_algebra(&two, &f).unwrap(), alg);
            seen += 1;
        }
    }
    assert!(seen > 0);

    let (_, eps) = dec(&two.cat).unwrap();
    assert!(dfib_to_algebra(&two, &eps).is_err());
}

#[test]
fn g_algebras_and_groupoids() {
    let d = corpus::discrete(2);
    let alg = groupoid_to_g_algebra(&d).unwrap();
    let back = g_algebra_to_groupoid(&alg).unwrap();
    assert_eq!(back.m, d.m);

    for c in [corpus::iso_pair(), corpus::kernel_groupoid(), corpus::cyclic2()] {
        let alg = groupoid_to_g_algebra(&c).unwrap();
        assert!(validate_algebra(&GMonad, &alg).unwrap().passed());
        let back = g_algebra_to_groupoid(&alg).unwrap();
        assert_eq!(back.m, c.m);
        assert_eq!(groupoid_to_g_algebra(&back).unwrap(), alg);
    }

    let iso = corpus::iso_pair();
    let algs = g_algebras_on_graph(&iso.graph()).unwrap();
    let grds = category_structures(&iso.graph()).into_iter().filter(is_groupoid).count();
    assert_eq!(algs.len(), 1);
    assert_eq!(grds, 1);
    assert!(groupoid_to_g_algebra(&corpus::arrow_category()).is_err());
}
