use proptest::prelude::*;
use std::sync::OnceLock;
use workbench::catkit::{dec, is_discrete_cofibration, is_groupoid, probe_set, small_categories, InternalCategory};
use workbench::cli::workspace::{AlgebraEntry, MonadEntry, Workspace};
use workbench::cli::{parse_document, Document};
use workbench::kleisli::{embed_e, forget, kl_compose, KlCalculus, KleisliMor};
use workbench::monadkit::{algebras_on, g_algebra_to_groupoid, groupoid_to_g_algebra, Maybe, Monad};
use workbench::setcat::{is_pullback_square, kernel_pair, pullback, Atom, FinMap, FinSetObj};
use workbench::suites::Bounds;
use workbench::tcat::{build_tcategory, cat_embed};

fn atom() -> impl Strategy<Value = Atom> {
    let leaf = prop_oneof![
        (-50i64..50).prop_map(Atom::Int),
        "[a-z][a-z0-9_']{0,3}".prop_map(Atom::Sym),
        Just(Atom::Bot),
    ];
    leaf.prop_recursive(3, 16, 4, |inner| {
        prop_oneof![
            inner.clone().prop_map(Atom::just),
            prop::collection::vec(inner.clone(), 0..4).prop_map(Atom::Tup),
            prop::collection::vec(inner, 0..4).prop_map(Atom::Word),
        ]
    })
}

/// A map between probe sets given by its table of indices.
fn map_into(dom: usize, cod: usize) -> impl Strategy<Value = FinMap> {
    prop::collection::vec(0..cod.max(1), dom).prop_map(move |idx| {
        let (x, y) = (probe_set(dom), probe_set(cod));
        FinMap::from_pairs(&x, &y, x.iter().cloned().zip(idx.iter().map(|&i| y.elems()[i].clone()))).unwrap()
    })
}

fn cospan() -> impl Strategy<Value = (FinMap, FinMap)> {
    (0usize..=4, 0usize..=4, 1usize..=4).prop_flat_map(|(a, b, c)| (map_into(a, c), map_into(b, c)))
}

fn categories() -> &'static [InternalCategory] {
    static CATS: OnceLock<Vec<InternalCategory>> = OnceLock::new();
    CATS.get_or_init(|| small_categories(2, 4))
}

fn category() -> impl Strategy<Value = InternalCategory> {
    (0..categories().len()).prop_map(|i| categories()[i].clone())
}

fn groupoid() -> impl Strategy<Value = InternalCategory> {
    static GRDS: OnceLock<Vec<InternalCategory>> = OnceLock::new();
    let grds = GRDS.get_or_init(|| categories().iter().filter(|c| is_groupoid(c)).cloned().collect());
    (0..grds.len()).prop_map(move |i| grds[i].clone())
}

/// Every arrow has a two-sided inverse, by search.
fn all_invertible(c: &InternalCategory) -> bool {
    c.x1.iter().all(|f| {
        c.x1.iter().any(|g| {
            c.then(f, g) == Some(c.id_of(&c.dom_of(f))) && c.then(g, f) == Some(c.id_of(&c.cod_of(f)))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn atoms_print_and_parse_back(a in atom()) {
        let back: Atom = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn chosen_pullbacks_are_pullbacks((f, g) in cospan()) {
        let pb = pullback(&f, &g).unwrap();
        prop_assert!(is_pullback_square(&pb.pg, &pb.pf, &g, &f).unwrap().is_pullback());
    }

    #[test]
    fn pullback_is_symmetric_up_to_swap((f, g) in cospan()) {
        let (p, q) = (pullback(&f, &g).unwrap(), pullback(&g, &f).unwrap());
        let swap = FinMap::new(&p.obj, &q.obj, |x| Atom::pair(x.proj(1).unwrap().clone(), x.proj(0).unwrap().clone()));
        let swap = swap.unwrap();
        prop_assert!(swap.is_bijective());
        prop_assert_eq!(q.pf.after(&swap).unwrap(), p.pg);
        prop_assert_eq!(q.pg.after(&swap).unwrap(), p.pf);
    }

    #[test]
    fn kernel_pairs_are_pullbacks_of_f_against_itself(f in (0usize..=4, 1usize..=3).prop_flat_map(|(a, b)| map_into(a, b))) {
        let r = kernel_pair(&f);
        prop_assert!(is_pullback_square(&r.p1, &r.p0, &f, &f).unwrap().is_pullback());
    }

    #[test]
    fn composition_of_maps_is_associative(
        (f, g, h) in (0usize..=3, 1usize..=3, 1usize..=3, 1usize..=3)
            .prop_flat_map(|(a, b, c, d)| (map_into(a, b), map_into(b, c), map_into(c, d)))
    ) {
        let left = h.after(&g).unwrap().after(&f).unwrap();
        let right = h.after(&g.after(&f).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(FinMap::id(g.cod()).after(&g).unwrap(), g.clone());
    }

    #[test]
    fn groupoids_are_exactly_the_categories_with_inverses(c in category()) {
        prop_assert_eq!(is_groupoid(&c), all_invertible(&c));
    }

    #[test]
    fn dec_validates_and_reflects_groupoids(c in category()) {
        let (d, eps) = dec(&c).unwrap();
        prop_assert!(d.validate().passed());
        prop_assert!(eps.validate().passed());
        prop_assert!(is_discrete_cofibration(&eps));
        prop_assert_eq!(is_groupoid(&d), is_groupoid(&c));
    }

    #[test]
    fn groupoids_round_trip_through_g_algebras(c in groupoid()) {
        let back = g_algebra_to_groupoid(&groupoid_to_g_algebra(&c).unwrap()).unwrap();
        prop_assert_eq!(back.m, c.m);
    }

    #[test]
    fn embedded_categories_are_maybe_categories(c in category()) {
        let m = Maybe::new();
        let t = cat_embed(&m, &c).unwrap();
        prop_assert!(build_tcategory("embedded", t.graph.clone(), t.d1_1.clone()).unwrap().cert.passed());
    }

    #[test]
    fn kleisli_composition_is_associative_and_unital(
        (a, b, c) in (0usize..=2, 0usize..=2, 0usize..=2, 0usize..=2)
            .prop_flat_map(|(w, x, y, z)| (map_into(w, x + 1), map_into(x, y + 1), map_into(y, z + 1))
                .prop_map(move |t| (t, (w, x, y, z))))
            .prop_map(|((a, b, c), (w, x, y, z))| (maybe_arrow(a, w, x), maybe_arrow(b, x, y), maybe_arrow(c, y, z)))
    ) {
        let m = Maybe::new();
        let ab = kl_compose(&m, &b, &a).unwrap();
        let bc = kl_compose(&m, &c, &b).unwrap();
        prop_assert_eq!(kl_compose(&m, &c, &ab).unwrap(), kl_compose(&m, &bc, &a).unwrap());
        let id = embed_e(&m, &FinMap::id(&a.src)).unwrap();
        prop_assert_eq!(kl_compose(&m, &a, &id).unwrap(), a.clone());
        let after = forget(&m, &ab).unwrap();
        prop_assert_eq!(after, forget(&m, &b).unwrap().after(&forget(&m, &a).unwrap()).unwrap());
    }

    #[test]
    fn embedded_maps_lie_in_e(f in (0usize..=3, 1usize..=3).prop_flat_map(|(a, b)| map_into(a, b))) {
        static CALC: OnceLock<KlCalculus<Maybe>> = OnceLock::new();
        let calc = CALC.get_or_init(|| KlCalculus::certify(Maybe::new(), 2).unwrap());
        let k = embed_e(calc.monad(), &f).unwrap();
        prop_assert_eq!(calc.in_e(&k).unwrap(), Some(f));
    }

    #[test]
    fn workspaces_survive_serialization(c in category(), f in (0usize..=3, 1usize..=3).prop_flat_map(|(a, b)| map_into(a, b)), k in 0usize..4) {
        let b = Bounds::default();
        let m = Maybe::new();
        let mut ws = Workspace::default();
        ws.categories.insert("C".into(), c);
        ws.sets.insert("S".into(), f.dom().renamed("S"));
        ws.maps.insert("f".into(), f);
        ws.monads.insert("maybe".into(), MonadEntry::Maybe(m.clone()));
        let carrier = probe_set(2);
        let algs = algebras_on(&m, &carrier).unwrap();
        ws.algebras.insert("A".into(), ("maybe".into(), AlgebraEntry::Maybe(algs[k % algs.len()].clone())));
        let doc = ws.to_document();
        let text = serde_json::to_string(&doc).unwrap();
        let parsed: Document = parse_document(&text).unwrap();
        prop_assert_eq!(&parsed, &doc);
        let again = Workspace::from_document(&parsed, &b).unwrap().to_document();
        prop_assert_eq!(again, doc);
    }
}

/// The maybe-arrow whose support sends an element to `⊥` when the table
/// points past the end of `Y`.
fn maybe_arrow(table: FinMap, x: usize, y: usize) -> KleisliMor<Maybe> {
    let m = Maybe::new();
    let (xs, ys) = (probe_set(x), probe_set(y));
    let ty = m.obj(&ys).unwrap();
    let support = FinMap::new(&xs, &ty, |a| {
        let i = table.cod().index_of(&table.apply(a).unwrap()).unwrap();
        ys.elems().get(i).map_or(Atom::Bot, |b| Atom::just(b.clone()))
    })
    .unwrap();
    KleisliMor::new(&m, xs, ys, support).unwrap()
}

#[test]
fn probe_sets_have_the_requested_size() {
    for n in 0..5 {
        assert_eq!(probe_set(n).len(), n);
    }
    assert!(FinSetObj::empty("E").is_empty());
}
