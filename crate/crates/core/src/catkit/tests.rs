use super::*;
use crate::corpus;
use crate::setcat::{Atom, FinMap, FinSetObj};

#[test]
fn corpus_validates() {
    for c in corpus::categories() {
        let cert = c.validate();
        assert!(cert.passed(), "{cert}");
    }
}

#[test]
fn broken_unit_is_named() {
    let c = corpus::arrow_category();
    let x2 = c.x2();
    let m = FinMap::new(&x2, &c.x1, |p| {
        if *p == Atom::pair(Atom::from("i0"), Atom::from("u")) {
            Atom::from("i0")
        } else {
            c.m.get(p).unwrap().clone()
        }
    })
    .unwrap();
    let broken = InternalCategory::on_graph("broken", &c.graph(), m).unwrap();
    let cert = broken.validate();
    assert!(!cert.passed());
    assert!(cert.failures().any(|f| f.name.starts_with("d_i.s_j=1")), "{cert}");
}

#[test]
fn groupoid_verdicts() {
    assert!(!is_groupoid(&corpus::arrow_category()));
    assert!(is_groupoid(&corpus::iso_pair()));
    assert!(is_groupoid(&corpus::kernel_groupoid()));
    assert!(is_groupoid(&corpus::cyclic2()));
    assert!(!is_groupoid(&corpus::absorbing_monoid()));
}

#[test]
fn inversions() {
    let d = corpus::discrete(3);
    assert_eq!(invert(&d).unwrap(), FinMap::id(&d.x1));
    let e = corpus::iso_pair();
    let inv = invert(&e).unwrap();
    assert_eq!(inv.apply(&Atom::from("u")).unwrap(), Atom::from("v"));
    assert_eq!(inv.apply(&Atom::from("v")).unwrap(), Atom::from("u"));
    let r = corpus::kernel_groupoid();
    let inv = invert(&r).unwrap();
    for p in r.x1.iter() {
        let swapped = Atom::pair(p.proj(1).unwrap().clone(), p.proj(0).unwrap().clone());
        assert_eq!(inv.apply(p).unwrap(), swapped);
    }
    assert!(invert(&corpus::arrow_category()).is_err());
}

/// Every arrow has a two-sided inverse, by search over all arrows.
fn brute_force_groupoid(c: &InternalCategory) -> bool {
    c.x1.iter().all(|f| {
        c.x1.iter().any(|g| {
            c.then(f, g) == Some(c.id_of(&c.dom_of(f))) && c.then(g, f) == Some(c.id_of(&c.cod_of(f)))
        })
    })
}

#[test]
fn groupoid_square_matches_brute_force() {
    let mut cats = small_categories(2, 5);
    cats.extend(corpus::categories());
    for c in &cats {
        assert_eq!(is_groupoid(c), brute_force_groupoid(c), "{}", c.name);
        if is_groupoid(c) {
            let inv = invert(c).unwrap();
            assert_eq!(inv.after(&inv).unwrap(), FinMap::id(&c.x1));
            assert_eq!(c.d0.after(&inv).unwrap(), c.d1);
        }
    }
}

#[test]
fn fibration_examples() {
    let two = corpus::arrow_category();
    let id = InternalFunctor::identity(&two);
    assert!(is_discrete_fibration(&id) && is_discrete_cofibration(&id));
    let term = corpus::discrete(1);
    let f0 = FinMap::constant(&two.x0, &term.x0, &Atom::Int(0)).unwrap();
    let f1 = FinMap::constant(&two.x1, &term.x1, &term.x1.elems()[0]).unwrap();
    let bang = InternalFunctor::new(&two, &term, f0, f1).unwrap();
    assert!(bang.validate().passed());
    assert!(!is_discrete_fibration(&bang));
    assert!(!is_discrete_cofibration(&bang));
    let d2 = corpus::discrete(2);
    let f0 = FinMap::constant(&d2.x0, &term.x0, &Atom::Int(0)).unwrap();
    let f1 = FinMap::constant(&d2.x1, &term.x1, &term.x1.elems()[0]).unwrap();
    let bang = InternalFunctor::new(&d2, &term, f0, f1).unwrap();
    assert!(is_discrete_fibration(&bang));
}

/// Composable pairs counted directly from the arrow list.
fn composable_pairs(c: &InternalCategory) -> usize {
    c.x1.iter().flat_map(|f| c.x1.iter().map(move |g| (f, g))).filter(|(f, g)| c.cod_of(f) == c.dom_of(g)).count()
}

#[test]
fn dec_examples() {
    let two = corpus::arrow_category();
    let (d, eps) = dec(&two).unwrap();
    assert_eq!(d.x0.len(), 3);
    assert_eq!(d.x1.len(), composable_pairs(&two));
    assert_eq!(d.x1.len(), 4);
    assert!(d.validate().passed());
    assert!(eps.validate().passed());
    assert!(is_discrete_cofibration(&eps));

    let disc = corpus::discrete(3);
    let (d, eps) = dec(&disc).unwrap();
    assert_eq!(d.x0.len(), 3);
    assert_eq!(d.x1.len(), 3);
    assert!(eps.f0.is_bijective() && eps.f1.is_bijective());

    let iso = corpus::iso_pair();
    assert!(dec_to_kernel_groupoid(&iso).unwrap().is_isomorphism());
    assert!(!dec_to_kernel_groupoid(&two).unwrap().is_isomorphism());
}

#[test]
fn dec_properties_on_small_categories() {
    let cats: Vec<_> = small_categories(3, 4).into_iter().chain(corpus::categories()).collect();
    for c in &cats {
        let (d, eps) = dec(c).unwrap();
        assert!(d.validate().passed(), "{}", c.name);
        assert!(eps.validate().passed(), "{}", c.name);
        assert!(is_discrete_cofibration(&eps), "{}", c.name);
        assert_eq!(is_groupoid(&d), is_groupoid(c), "{}", c.name);
        if is_groupoid(c) {
            assert!(dec_to_kernel_groupoid(c).unwrap().is_isomorphism(), "{}", c.name);
        }
    }
}

#[test]
fn presentations() {
    let iso = corpus::iso_pair();
    let d2 = presentation_of(&iso).unwrap();
    let back = groupoid_from_presentation("again", &iso.graph(), &d2).unwrap();
    assert_eq!(back.m, iso.m);

    let disc = corpus::discrete(2);
    let r = crate::setcat::kernel_pair(&disc.d0);
    let proj = FinMap::new(&r.obj, &disc.x1, |p| p.proj(0).unwrap().clone()).unwrap();
    let back = groupoid_from_presentation("disc", &disc.graph(), &proj).unwrap();
    assert_eq!(back.m, disc.m);

    let broken = FinMap::new(&d2.dom().clone(), &iso.x1, |p| {
        if *p == Atom::pair(Atom::from("u"), Atom::from("u")) {
            Atom::from("u")
        } else {
            d2.get(p).unwrap().clone()
        }
    })
    .unwrap();
    assert!(groupoid_from_presentation("broken", &iso.graph(), &broken).is_err());
}

#[test]
fn fibrations_over_a_groupoid_have_groupoid_domains() {
    let iso = corpus::iso_pair();
    let mut seen = 0;
    for c in small_categories(2, 4) {
        for f0 in FinMap::all(&c.x0, &iso.x0) {
            for f1 in FinMap::all(&c.x1, &iso.x1) {
                let f = InternalFunctor::new(&c, &iso, f0.clone(), f1).unwrap();
                if f.validate().passed() && is_discrete_fibration(&f) {
                    seen += 1;
                    assert!(is_groupoid(&c), "{}", c.name);
                }
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn probe_sets() {
    let p = probe_set(3);
    assert_eq!(p.len(), 3);
    assert_eq!(FinSetCat.probes(3).len(), 4);
    let s = SliceCat::new(&FinSetObj::range("B", 2));
    assert_eq!(s.probes(2).len(), 1 + 2 + 4);
}
