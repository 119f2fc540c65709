use super::*;
use crate::catkit::{
    category_structures, dec, is_groupoid, probe_set, reflexive_graphs, small_categories, Ambient, FinSetCat,
    InternalCategory, InternalFunctor, SliceObj,
};
use crate::corpus;
use crate::kleisli::{Kl, KlCalculus, KleisliMor};
use crate::monadkit::{algebras_on, validate_monad, Algebra, FinMonoid, Identity, List, Maybe, Monad, TxMonad, Writer};
use crate::setcat::{Atom, FinMap, FinSetObj};

fn id_monad() -> Identity<FinSetCat> {
    Identity { amb: FinSetCat }
}

fn a(s: &str) -> Atom {
    Atom::from(s)
}

/// For the identity monad an element `(x, w)` of X2 is the pair `(w, x)`.
fn identity_build(g: &crate::catkit::ReflexiveGraph, m: &FinMap) -> TCatBuild<Identity<FinSetCat>> {
    let tg = TGraph::new(id_monad(), g.d0.clone(), g.d1.clone(), g.s0.clone()).unwrap();
    let (x2, _, _) = tg.x2().unwrap();
    let d1_1 = FinMap::new(&x2, &g.x1, |p| {
        m.apply(&Atom::pair(p.proj(1).unwrap().clone(), p.proj(0).unwrap().clone())).unwrap()
    })
    .unwrap();
    build_tcategory("t", tg, d1_1).unwrap()
}

#[test]
fn e7_is_an_operad() {
    let c = corpus::e7();
    assert_eq!(c.x2.len(), 3);
    assert!(is_operad(&c));
    assert_eq!(arity(&c, &a("e")).unwrap(), 1);
    assert_eq!(arity(&c, &a("k")).unwrap(), 0);
    let g = c.graph.clone();
    let cert = build_tcategory("E7", g, c.d1_1.clone()).unwrap().cert;
    for name in [AX1_D0, AX1_DELTA, OBS2, OBS3_FIRST, OBS3_SECOND, OBS3_D0, OBS3_DELTA, AX4_D0, AX4_DELTA, AX7_S0, AX7_S1, OBS5, OBS6, AX8] {
        assert_eq!(cert.verdict(name), Some(true), "{name}");
    }
}

#[test]
fn broken_e7_fails_compatibility() {
    let b = corpus::e7_broken();
    assert!(b.tcat.is_none());
    assert_eq!(b.cert.verdict(AX4_D0), Some(true));
    assert_eq!(b.cert.verdict(AX4_DELTA), Some(false));
    let w = b.cert.checks.iter().find(|c| c.name == AX4_DELTA).unwrap().witness.clone().unwrap();
    assert!(w.contains("(e,[k])"), "{w}");
}

#[test]
fn identity_monad_tcategories_are_categories() {
    let mut valid = 0;
    for n in 1..=3 {
        for k in n..=4 {
            for g in reflexive_graphs(n, k) {
                for c in category_structures(&g) {
                    assert!(identity_build(&g, &c.m).tcat.is_some(), "{}", c.name);
                    valid += 1;
                    if c.x1.len() > 3 {
                        continue;
                    }
                    // every single-entry change of the table
                    for (i, p) in c.x2().iter().enumerate() {
                        for f in c.arrows(&c.dom_of(p.proj(0).unwrap()), &c.cod_of(p.proj(1).unwrap())) {
                            if &f == c.m.apply(p).as_ref().unwrap() {
                                continue;
                            }
                            let mut img = c.m.images().to_vec();
                            img[i] = f;
                            let m = FinMap::from_pairs(&c.x2(), &c.x1, c.x2().iter().cloned().zip(img)).unwrap();
                            let cat = InternalCategory::on_graph("p", &g, m.clone()).unwrap();
                            assert_eq!(identity_build(&g, &m).tcat.is_some(), cat.is_valid());
                        }
                    }
                }
            }
        }
    }
    assert!(valid > 20);
}

#[test]
fn exhaustive_tables_on_tiny_graphs() {
    for n in 1..=2 {
        for k in n..=3 {
            for g in reflexive_graphs(n, k) {
                let x2 = g.x2();
                let cands: Vec<Vec<Atom>> = x2
                    .iter()
                    .map(|p| {
                        let (f, h) = (p.proj(0).unwrap(), p.proj(1).unwrap());
                        let (s, t) = (g.d1.apply(f).unwrap(), g.d0.apply(h).unwrap());
                        g.x1.iter().filter(|u| g.d1.get(u) == Some(&s) && g.d0.get(u) == Some(&t)).cloned().collect()
                    })
                    .collect();
                let total: usize = cands.iter().map(Vec::len).product();
                if total > 3000 {
                    continue;
                }
                for idx in 0..total {
                    let mut r = idx;
                    let img: Vec<Atom> = cands
                        .iter()
                        .map(|c| {
                            let v = c[r % c.len()].clone();
                            r /= c.len();
                            v
                        })
                        .collect();
                    let m = FinMap::from_pairs(&x2, &g.x1, x2.iter().cloned().zip(img)).unwrap();
                    let cat = InternalCategory::on_graph("t", &g, m.clone()).unwrap();
                    assert_eq!(identity_build(&g, &m).tcat.is_some(), cat.is_valid());
                }
            }
        }
    }
}

#[test]
fn categories_embed_for_every_builtin_monad() {
    for c in small_categories(2, 4).iter().chain(corpus::categories().iter()) {
        cat_embed(&id_monad(), c).unwrap();
        cat_embed(&Maybe::new(), c).unwrap();
        cat_embed(&Writer::new(FinMonoid::z2()), c).unwrap();
        cat_embed(&List::new(2), c).unwrap();
    }
}

#[test]
fn kleisli_translation_for_identity() {
    let calc = KlCalculus::certify(id_monad(), 2).unwrap();
    for c in corpus::categories() {
        let t = cat_embed(&id_monad(), &c).unwrap();
        let s = tcat_to_kl(&t).unwrap();
        assert!(validate_kl_category(&calc.kl, &s).passed());
        assert_eq!(tcat_from_kl(&calc, &c.name, &s).unwrap(), t);
    }
}

#[test]
fn kleisli_translation_for_e7() {
    let c = corpus::e7();
    let calc = KlCalculus::certify(List::new(4), 2).unwrap();
    let s = tcat_to_kl(&c).unwrap();
    let cert = validate_kl_category(&Kl::new(List::new(4), 2), &s);
    assert!(cert.passed(), "{cert}");
    let back = tcat_from_kl(&calc, "E7", &s).unwrap();
    assert_eq!(back, c);
    assert_eq!(back.d1_1, c.d1_1);

    let mut bad = s.clone();
    bad.faces[1][0] = KleisliMor { src: c.x1().clone(), tgt: c.x0().clone(), support: c.delta1().clone() };
    let e = tcat_from_kl(&calc, "bad", &bad).unwrap_err().to_string();
    assert!(e.contains("T-category presentation"), "{e}");
}

#[test]
fn tfunctors() {
    let c = corpus::e7();
    let id = TFunctor::new(&c, &c, FinMap::id(c.x0()), FinMap::id(c.x1())).unwrap();
    assert!(validate_tfunctor(&id).passed());
    let swap = FinMap::new(c.x1(), c.x1(), |x| if *x == a("e") { a("k") } else { a("e") }).unwrap();
    let f = TFunctor::new(&c, &c, FinMap::id(c.x0()), swap).unwrap();
    let cert = validate_tfunctor(&f);
    assert_eq!(cert.verdict("preserves delta1"), Some(false));

    // the unary core of E7 includes into it
    let r = r_coreflection(&c).unwrap();
    let core = cat_embed(&List::new(4), &r).unwrap();
    let inc = r_counit(&c).unwrap();
    assert_eq!(inc.source, core);
    assert!(validate_tfunctor(&inc).passed());
}

#[test]
fn t_groupoids() {
    let m = id_monad();
    assert!(is_t_groupoid(&cat_embed(&m, &corpus::iso_pair()).unwrap()));
    assert!(!is_t_groupoid(&cat_embed(&m, &corpus::arrow_category()).unwrap()));
    for c in small_categories(2, 4) {
        assert_eq!(is_t_groupoid(&cat_embed(&m, &c).unwrap()), is_groupoid(&c), "{}", c.name);
    }
    let w = Writer::new(FinMonoid::z2());
    for x in FinSetCat.probes(2) {
        for alg in algebras_on(&w, &x).unwrap() {
            assert!(is_t_groupoid(&tc_embed_algebra(&w, &alg).unwrap()));
        }
    }
}

#[test]
fn algebra_embeddings() {
    let m = Maybe::new();
    let x = FinSetObj::of_syms("X", &["a"]);
    let algs = algebras_on(&m, &x).unwrap();
    assert_eq!(algs.len(), 1);
    let t = tc_embed_algebra(&m, &algs[0]).unwrap();
    assert_eq!(t.x1().elems(), &[Atom::Bot, Atom::just(a("a"))]);
    let free = tc_embed_algebra(&m, &Algebra::free(&m, &x).unwrap()).unwrap();
    assert_eq!(free.x1().len(), 3);

    let i = id_monad();
    let t = tc_embed_algebra(&i, &Algebra::new(&i, x.clone(), FinMap::id(&x)).unwrap()).unwrap();
    assert_eq!(t.d0(), &FinMap::id(&x));
    assert!(is_t_groupoid(&t));

    let tx = TxMonad::new(&corpus::iso_pair()).unwrap();
    let mut n = 0;
    for h in tx.probes(2) {
        for alg in algebras_on(&tx, &h).unwrap() {
            assert!(is_t_groupoid(&tc_embed_algebra(&tx, &alg).unwrap()));
            n += 1;
        }
    }
    assert!(n > 3);
}

#[test]
fn coreflection() {
    let m = Maybe::new();
    for c in corpus::categories() {
        let r = r_coreflection(&cat_embed(&m, &c).unwrap()).unwrap();
        assert!(r.is_valid());
        assert_eq!((&r.x1, &r.d0, &r.d1, &r.s0, &r.m), (&c.x1, &c.d0, &c.d1, &c.s0, &c.m));
        let f = r_counit(&cat_embed(&m, &c).unwrap()).unwrap();
        assert!(validate_tfunctor(&f).passed());
        let e = cat_embed(&m, &c).unwrap();
        let id = TFunctor::new(&e, &e, FinMap::id(e.x0()), FinMap::id(e.x1())).unwrap();
        assert!(r_factor(&c, &id).unwrap().is_isomorphism());
    }
    let e7 = r_coreflection(&corpus::e7()).unwrap();
    assert_eq!(e7.x1.elems(), &[a("e")]);
    assert!(e7.is_valid());

    let x = FinSetObj::of_syms("X", &["a", "b"]);
    for alg in algebras_on(&m, &x).unwrap() {
        let r = r_coreflection(&tc_embed_algebra(&m, &alg).unwrap()).unwrap();
        assert_eq!(r.x1.len(), 2);
        assert_eq!(r.d0, r.d1);
    }
}

#[test]
fn pullbacks() {
    let c = corpus::e7();
    let id = TFunctor::new(&c, &c, FinMap::id(c.x0()), FinMap::id(c.x1())).unwrap();
    let (p, qa, qb) = tcat_pullback(&id, &id).unwrap();
    assert_eq!((p.x0().len(), p.x1().len(), p.x2.len()), (1, 2, 3));
    assert!(validate_tfunctor(&qa).passed() && validate_tfunctor(&qb).passed());

    let m = Maybe::new();
    let two = cat_embed(&m, &corpus::arrow_category()).unwrap();
    let disc = cat_embed(&m, &corpus::discrete(2)).unwrap();
    let objs = FinMap::new(disc.x0(), two.x0(), |o| o.clone()).unwrap();
    let arrows = FinMap::new(disc.x1(), two.x1(), |o| if *o == Atom::Int(0) { a("i0") } else { a("i1") }).unwrap();
    let f = TFunctor::new(&disc, &two, objs, arrows).unwrap_or_else(|e| panic!("{e}"));
    assert!(validate_tfunctor(&f).passed());
    let idt = TFunctor::new(&two, &two, FinMap::id(two.x0()), FinMap::id(two.x1())).unwrap();
    let (p, _, _) = tcat_pullback(&f, &idt).unwrap();
    let base = crate::setcat::pullback(&f.f1, &idt.f1).unwrap();
    assert_eq!(p.x1().len(), base.obj.len());
    assert_eq!(p.x1().len(), 2);
}

#[test]
fn dec_matches_catkit_for_identity() {
    for c in corpus::categories() {
        let d = dec_tcat(&cat_embed(&id_monad(), &c).unwrap()).unwrap();
        assert!(d.counit_leg_in_e);
        let r = r_coreflection(&d.tcat).unwrap();
        let (k, _) = dec(&c).unwrap();
        let f0 = FinMap::new(&k.x0, &r.x0, |f| f.clone()).unwrap();
        let f1 = FinMap::new(&k.x1, &r.x1, |p| {
            Atom::pair(p.proj(1).unwrap().clone(), p.proj(0).unwrap().clone())
        })
        .unwrap();
        assert!(InternalFunctor::new(&k, &r, f0, f1).unwrap().is_isomorphism(), "{}", c.name);
    }
}

#[test]
fn dec_of_e7() {
    let d = dec_tcat(&corpus::e7()).unwrap();
    assert_eq!(d.tcat.x0().elems(), &[a("e"), a("k")]);
    assert_eq!(d.tcat.x1().len(), 3);
    assert!(!d.counit_leg_in_e);
}

#[test]
fn tx_translation() {
    for g in corpus::tx_functors() {
        let t = TxMonad::new(&g.target).unwrap();
        let c = functor_to_tx_tcat(&t, &g).unwrap();
        let back = tx_tcat_to_functor(&t, &c).unwrap();
        assert_eq!(back, g);
        assert_eq!(functor_to_tx_tcat(&t, &back).unwrap(), c);
        assert_eq!(is_t_groupoid(&c), is_groupoid(&g.source), "{}", g.source.name);
    }
    let x = corpus::discrete(2);
    let t = TxMonad::new(&x).unwrap();
    let c = functor_to_tx_tcat(&t, &InternalFunctor::identity(&x)).unwrap();
    assert_eq!(c.x1().carrier, x.x1);
    let wrong = InternalFunctor::identity(&corpus::iso_pair());
    assert!(functor_to_tx_tcat(&t, &wrong).is_err());
}

#[test]
fn g_translation() {
    let mut cats = corpus::categories();
    cats.extend(small_categories(2, 3));
    cats.extend(small_categories(2, 4).into_iter().step_by(7));
    for c in cats.iter().filter(|c| c.x1.len() <= 4) {
        let g = cat_to_gcat(c).unwrap();
        let back = gcat_to_cat(&g).unwrap();
        assert_eq!(&back, c);
        assert_eq!(cat_to_gcat(&back).unwrap(), g);
    }
    let d = cat_to_gcat(&corpus::discrete(2)).unwrap();
    assert!(d.x0().g.is_bijective() && d.x1().g.is_bijective());

    let two = corpus::arrow_category();
    let g = cat_to_gcat(&two).unwrap();
    assert_eq!((&g.x0().g, &g.x0().t), (&two.d1, &two.s0));
    assert_eq!(g.x1().upper().len(), 4);

    let sigma = FinMap::new(g.x1().lower(), &FinSetObj::collect("Y1'", two.x1.iter().map(|f| Atom::sym(format!("r{f}")))), |f| {
        Atom::sym(format!("r{f}"))
    })
    .unwrap();
    let r = relabel_arrow_level(&g, &sigma).unwrap();
    let e = gcat_to_cat(&r).unwrap_err().to_string();
    assert!(e.contains("idomorphic"), "{e}");
}

/// Independent count of E7-sets on `n` elements: an action of `e` (which
/// must be the identity) and a value for the constant `k`.
fn e7_set_oracle(n: usize) -> usize {
    let z = probe_set(n);
    let mut count = 0;
    for u in FinMap::all(&z, &z) {
        for c in z.iter() {
            if u == FinMap::id(&z) && u.apply(c).unwrap() == *c {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn txt_monad_of_e7() {
    let c = corpus::e7();
    let t = TxtMonad::new(&c);
    let top = SliceObj::new(FinMap::id(c.x0()));
    assert_eq!(t.obj(&top).unwrap().carrier.len(), 2);
    assert!(validate_monad(&t, 2).unwrap().passed());
    for n in 0..=2 {
        let z = probe_set(n);
        let mut algs = Vec::new();
        for h in FinMap::all(&z, c.x0()) {
            algs.extend(algebras_on(&t, &SliceObj::new(h)).unwrap());
        }
        let fibs = discrete_tfibrations_over(&c, &z, 16).unwrap();
        assert_eq!(algs.len(), e7_set_oracle(n), "size {n}");
        assert_eq!(fibs.len(), algs.len(), "size {n}");
        for alg in &algs {
            let f = txt_algebra_to_tfunctor(&t, alg).unwrap();
            assert!(is_discrete_tfibration(&f).unwrap());
            assert_eq!(&tfunctor_to_txt_algebra(&t, &f).unwrap(), alg);
        }
        let mut seen: Vec<_> = fibs.iter().map(|f| tfunctor_to_txt_algebra(&t, f).unwrap()).collect();
        seen.dedup();
        assert_eq!(seen.len(), fibs.len());
        assert!(seen.iter().all(|s| algs.contains(s)));
    }
}

#[test]
fn txt_specializes_to_tx() {
    for x in [corpus::arrow_category(), corpus::iso_pair()] {
        let t = TxtMonad::new(&cat_embed(&id_monad(), &x).unwrap());
        let tx = TxMonad::new(&x).unwrap();
        for h in tx.probes(2) {
            let a = t.obj(&h).unwrap();
            let b = tx.obj(&h).unwrap();
            let swapped = FinMap::new(&a.carrier, &b.carrier, |p| {
                Atom::pair(p.proj(1).unwrap().clone(), p.proj(0).unwrap().clone())
            })
            .unwrap();
            assert!(swapped.is_bijective());
            assert_eq!(b.over.after(&swapped).unwrap(), a.over);
        }
    }
}
