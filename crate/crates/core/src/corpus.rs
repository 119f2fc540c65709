//! Small named structures used throughout the checks.

use crate::catkit::{dec, InternalCategory, InternalFunctor};
use crate::monadkit::{List, Monad};
use crate::tcat::{build_tcategory, TCatBuild, TCategory, TGraph};
use crate::setcat::{Atom, FinMap, FinSetObj};
use std::collections::BTreeMap;

fn a(s: &str) -> Atom {
    Atom::from(s)
}

fn ids(pairs: &[(&str, &str)]) -> BTreeMap<Atom, Atom> {
    pairs.iter().map(|(o, i)| (a(o), a(i))).collect()
}

fn is_identity(f: &Atom) -> bool {
    f.to_string().starts_with('i')
}

/// Composite with identity arrows (named `i*`) handled, deferring the rest.
fn unital(f: &Atom, g: &Atom, rest: impl Fn(&str, &str) -> Option<&'static str>) -> Option<Atom> {
    if is_identity(f) {
        Some(g.clone())
    } else if is_identity(g) {
        Some(f.clone())
    } else {
        rest(&f.to_string(), &g.to_string()).map(a)
    }
}

/// The arrow category: objects 0, 1 and one arrow `u: 0 → 1`.
pub fn arrow_category() -> InternalCategory {
    let arrows = [(a("i0"), a("0"), a("0")), (a("i1"), a("1"), a("1")), (a("u"), a("0"), a("1"))];
    InternalCategory::from_arrows("2", &[a("0"), a("1")], &arrows, &ids(&[("0", "i0"), ("1", "i1")]), |f, g| {
        unital(f, g, |_, _| None)
    })
    .unwrap()
}

/// Two objects with an isomorphism `u: 0 → 1`, `v: 1 → 0` between them.
pub fn iso_pair() -> InternalCategory {
    let arrows = [
        (a("i0"), a("0"), a("0")),
        (a("i1"), a("1"), a("1")),
        (a("u"), a("0"), a("1")),
        (a("v"), a("1"), a("0")),
    ];
    InternalCategory::from_arrows("iso", &[a("0"), a("1")], &arrows, &ids(&[("0", "i0"), ("1", "i1")]), |f, g| {
        unital(f, g, |f, g| match (f, g) {
            ("u", "v") => Some("i0"),
            ("v", "u") => Some("i1"),
            _ => None,
        })
    })
    .unwrap()
}

/// The cyclic group of order two as a one-object category.
pub fn cyclic2() -> InternalCategory {
    let arrows = [(a("e"), a("*"), a("*")), (a("t"), a("*"), a("*"))];
    InternalCategory::from_arrows("Z/2", &[a("*")], &arrows, &ids(&[("*", "e")]), |f, g| {
        Some(if f == g { a("e") } else { a("t") })
    })
    .unwrap()
}

/// A one-object monoid `{e, z}` with `z` absorbing.
pub fn absorbing_monoid() -> InternalCategory {
    let arrows = [(a("e"), a("*"), a("*")), (a("z"), a("*"), a("*"))];
    InternalCategory::from_arrows("absorb", &[a("*")], &arrows, &ids(&[("*", "e")]), |f, g| {
        Some(if f == &a("e") && g == &a("e") { a("e") } else { a("z") })
    })
    .unwrap()
}

pub fn discrete(n: usize) -> InternalCategory {
    InternalCategory::discrete(format!("disc{n}"), &FinSetObj::range("X0", n))
}

/// The kernel-pair groupoid of `{a, b, c} → {0, 1}` with fibres `{a, b}`, `{c}`.
pub fn kernel_groupoid() -> InternalCategory {
    let x = FinSetObj::of_syms("X", &["a", "b", "c"]);
    let y = FinSetObj::range("Y", 2);
    let f = FinMap::new(&x, &y, |t| if *t == a("c") { Atom::Int(1) } else { Atom::Int(0) }).unwrap();
    InternalCategory::kernel_pair_groupoid("R[f]", &f)
}

/// The chain `0 → 1 → 2` with its composite.
pub fn chain3() -> InternalCategory {
    let arrows = [
        (a("i0"), a("0"), a("0")),
        (a("i1"), a("1"), a("1")),
        (a("i2"), a("2"), a("2")),
        (a("p"), a("0"), a("1")),
        (a("q"), a("1"), a("2")),
        (a("r"), a("0"), a("2")),
    ];
    InternalCategory::from_arrows(
        "3",
        &[a("0"), a("1"), a("2")],
        &arrows,
        &ids(&[("0", "i0"), ("1", "i1"), ("2", "i2")]),
        |f, g| unital(f, g, |f, g| (f == "p" && g == "q").then_some("r")),
    )
    .unwrap()
}

/// The named internal categories of the corpus.
pub fn categories() -> Vec<InternalCategory> {
    vec![arrow_category(), iso_pair(), cyclic2(), absorbing_monoid(), discrete(2), kernel_groupoid(), chain3()]
}

fn e7_graph() -> TGraph<List> {
    let m = List::new(4);
    let x0 = FinSetObj::of_syms("X0", &["*"]);
    let x1 = FinSetObj::of_syms("X1", &["e", "k"]);
    let tx0 = m.obj(&x0).unwrap();
    let star = a("*");
    let d0 = FinMap::constant(&x1, &x0, &star).unwrap();
    let delta1 = FinMap::new(&x1, &tx0, |x| {
        if *x == a("e") { Atom::word(vec![star.clone()]) } else { Atom::word(vec![]) }
    })
    .unwrap();
    let s0 = FinMap::constant(&x0, &x1, &a("e")).unwrap();
    TGraph::new(m, d0, delta1, s0).unwrap()
}

/// Composition table of E7 keyed by `(outer, input word)`.
fn e7_table(broken: bool) -> impl Fn(&Atom) -> Atom {
    move |p: &Atom| {
        let (x, w) = (p.proj(0).unwrap(), p.proj(1).unwrap().as_word().unwrap());
        match (x.to_string().as_str(), w.first().map(|v| v.to_string())) {
            ("e", Some(inner)) if inner == "e" => a("e"),
            ("e", Some(_)) => if broken { a("e") } else { a("k") },
            _ => a("k"),
        }
    }
}

/// The one-object multicategory with a unary identity `e` and a nullary
/// constant `k`: `e∘[e] = e`, `e∘[k] = k`, `k∘[] = k`.
pub fn e7() -> TCategory<List> {
    let g = e7_graph();
    let (x2, _, _) = g.x2().unwrap();
    let d1_1 = FinMap::new(&x2, &g.x1, e7_table(false)).unwrap();
    TCategory::new("E7", g, d1_1).unwrap()
}

/// E7 with `e∘[k] = e`, which breaks the input compatibility.
pub fn e7_broken() -> TCatBuild<List> {
    let g = e7_graph();
    let (x2, _, _) = g.x2().unwrap();
    let d1_1 = FinMap::new(&x2, &g.x1, e7_table(true)).unwrap();
    build_tcategory("E7 broken", g, d1_1).unwrap()
}

/// Functors into 𝟚 and the iso pair: identities, the Dec counits and the
/// inclusion of the objects of 𝟚.
pub fn tx_functors() -> Vec<InternalFunctor> {
    let mut out = Vec::new();
    for x in [arrow_category(), iso_pair()] {
        out.push(InternalFunctor::identity(&x));
        out.push(dec(&x).unwrap().1);
    }
    let two = arrow_category();
    let disc = InternalCategory::discrete("objects", &two.x0);
    out.push(InternalFunctor::new(&disc, &two, FinMap::id(&two.x0), two.s0.clone()).unwrap());
    out
}
