use super::atom::Atom;
use super::finset::{FinMap, FinSetObj};
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Chosen pullback of a cospan `f: A → C ← B: g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pullback {
    pub obj: FinSetObj,
    /// projection to the domain of `f`
    pub pf: FinMap,
    /// projection to the domain of `g`
    pub pg: FinMap,
}

/// P = {(a,b) : f(a) = g(b)} with the two projections.
pub fn pullback(f: &FinMap, g: &FinMap) -> Result<Pullback> {
    if f.cod() != g.cod() {
        return Err(Error::ty(format!("cospan codomains differ: {} vs {}", f.cod(), g.cod())));
    }
    let mut fibres: HashMap<&Atom, Vec<&Atom>> = HashMap::new();
    for (b, gb) in g.pairs() {
        fibres.entry(gb).or_default().push(b);
    }
    let mut elems = Vec::new();
    for (a, fa) in f.pairs() {
        for b in fibres.get(fa).into_iter().flatten() {
            elems.push(Atom::pair(a.clone(), (*b).clone()));
        }
    }
    let obj = FinSetObj::collect(format!("{}×{}", f.dom().name, g.dom().name), elems);
    let pf = FinMap::new(&obj, f.dom(), |p| p.proj(0).unwrap().clone())?;
    let pg = FinMap::new(&obj, g.dom(), |p| p.proj(1).unwrap().clone())?;
    Ok(Pullback { obj, pf, pg })
}

impl Pullback {
    /// The unique map into P induced by a commuting cone `(a, b)`.
    pub fn mediate(&self, a: &FinMap, b: &FinMap) -> Result<FinMap> {
        if a.dom() != b.dom() {
            return Err(Error::ty("cone legs have different domains"));
        }
        FinMap::try_new(a.dom(), &self.obj, |w| {
            let p = Atom::pair(a.apply(w)?, b.apply(w)?);
            if self.obj.contains(&p) {
                Ok(p)
            } else {
                Err(Error::not_a("commuting cone", format!("at {w}")))
            }
        })
    }
}

/// Outcome of testing a square for being a pullback.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SquareVerdict {
    Pullback,
    /// The square commutes but the comparison map is not a bijection.
    NotPullback(String),
    /// The two composites around the square differ.
    NotCommuting(String),
}

impl SquareVerdict {
    pub fn is_pullback(&self) -> bool {
        matches!(self, SquareVerdict::Pullback)
    }

    pub fn witness(&self) -> Option<String> {
        match self {
            SquareVerdict::Pullback => None,
            SquareVerdict::NotPullback(w) => Some(format!("not a pullback: {w}")),
            SquareVerdict::NotCommuting(w) => Some(format!("does not commute: {w}")),
        }
    }
}

/// Tests the square
/// ```text
///  P --top--> B
///  |          |
/// left      right
///  v          v
///  A -bottom-> C
/// ```
pub fn is_pullback_square(
    top: &FinMap,
    left: &FinMap,
    right: &FinMap,
    bottom: &FinMap,
) -> Result<SquareVerdict> {
    if top.dom() != left.dom()
        || right.dom() != top.cod()
        || bottom.dom() != left.cod()
        || right.cod() != bottom.cod()
    {
        return Err(Error::ty("square boundary types do not match"));
    }
    let rt = right.after(top)?;
    let bl = bottom.after(left)?;
    if let Some(w) = rt.first_difference(&bl) {
        return Ok(SquareVerdict::NotCommuting(w));
    }
    let pb = pullback(bottom, right)?;
    let cmp = pb.mediate(left, top)?;
    if !cmp.is_injective() {
        let imgs = cmp.images();
        for (i, x) in top.dom().iter().enumerate() {
            for (j, y) in top.dom().iter().enumerate().skip(i + 1) {
                if imgs[i] == imgs[j] {
                    return Ok(SquareVerdict::NotPullback(format!(
                        "{x} and {y} both compare to {}",
                        imgs[i]
                    )));
                }
            }
        }
    }
    if let Some(missing) = pb.obj.iter().find(|p| !cmp.images().contains(p)) {
        return Ok(SquareVerdict::NotPullback(format!("cone {missing} has no preimage")));
    }
    Ok(SquareVerdict::Pullback)
}

/// Chosen equalizer: the subset where `f` and `g` agree.
pub fn equalizer(f: &FinMap, g: &FinMap) -> Result<(FinSetObj, FinMap)> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::ty("equalizer of a non-parallel pair"));
    }
    let e = FinSetObj::collect(
        format!("Eq({})", f.dom().name),
        f.dom().iter().filter(|x| f.get(x) == g.get(x)).cloned(),
    );
    let inc = FinMap::inclusion(&e, f.dom())?;
    Ok((e, inc))
}

/// Whether `e` is an equalizer of `(f, g)`: mono with image the agreement set.
pub fn is_equalizer(e: &FinMap, f: &FinMap, g: &FinMap) -> Result<Option<String>> {
    let (eq, _) = equalizer(f, g)?;
    if e.cod() != f.dom() {
        return Err(Error::ty("equalizer candidate has the wrong codomain"));
    }
    if !e.is_injective() {
        return Ok(Some(format!("{e} is not injective")));
    }
    if let Some(x) = e.dom().iter().find(|x| !eq.contains(e.get(x).unwrap())) {
        return Ok(Some(format!("{x} does not land in the agreement set")));
    }
    if let Some(y) = eq.iter().find(|y| !e.images().contains(y)) {
        return Ok(Some(format!("{y} is equalized but not in the image")));
    }
    Ok(None)
}

/// Kernel pair R[f] with projections and diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelPair {
    pub obj: FinSetObj,
    pub p0: FinMap,
    pub p1: FinMap,
    pub s0: FinMap,
}

pub fn kernel_pair(f: &FinMap) -> KernelPair {
    let pb = pullback(f, f).expect("a cospan (f, f) is always well-typed");
    let obj = pb.obj.renamed(format!("R[{}]", f.dom().name));
    let p0 = FinMap::new(&obj, f.dom(), |p| p.proj(0).unwrap().clone()).unwrap();
    let p1 = FinMap::new(&obj, f.dom(), |p| p.proj(1).unwrap().clone()).unwrap();
    let s0 = FinMap::new(f.dom(), &obj, |x| Atom::pair(x.clone(), x.clone())).unwrap();
    KernelPair { obj, p0, p1, s0 }
}

/// Triples of elements in a common fibre, R₂[f], with the three projections
/// onto R[f] dropping one coordinate: `q0` drops the first, `q1` the middle,
/// `q2` the last.
#[derive(Debug, Clone)]
pub struct KernelTriples {
    pub obj: FinSetObj,
    pub q0: FinMap,
    pub q1: FinMap,
    pub q2: FinMap,
}

pub fn kernel_triples(f: &FinMap) -> KernelTriples {
    let r = kernel_pair(f);
    let mut elems = Vec::new();
    for (a, fa) in f.pairs() {
        for (b, fb) in f.pairs() {
            for (c, fc) in f.pairs() {
                if fa == fb && fb == fc {
                    elems.push(Atom::Tup(vec![a.clone(), b.clone(), c.clone()]));
                }
            }
        }
    }
    let obj = FinSetObj::collect(format!("R2[{}]", f.dom().name), elems);
    let drop = |skip: usize| {
        FinMap::new(&obj, &r.obj, |t| {
            let v = t.as_tup().unwrap();
            let kept: Vec<Atom> =
                v.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, a)| a.clone()).collect();
            Atom::Tup(kept)
        })
        .unwrap()
    };
    KernelTriples { q0: drop(0), q1: drop(1), q2: drop(2), obj }
}

/// Is `(p0, p1)` a kernel pair of `f`, up to the canonical comparison?
pub fn is_kernel_pair(p0: &FinMap, p1: &FinMap, f: &FinMap) -> Result<SquareVerdict> {
    is_pullback_square(p1, p0, f, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(names: &[&str]) -> FinSetObj {
        FinSetObj::of_syms("S", names)
    }

    fn map(dom: &FinSetObj, cod: &FinSetObj, imgs: &[&str]) -> FinMap {
        FinMap::from_pairs(dom, cod, dom.iter().cloned().zip(imgs.iter().map(|s| Atom::from(*s))))
            .unwrap()
    }

    #[test]
    fn identity_pullback_is_diagonal() {
        let a = FinSetObj::range("A", 2);
        let pb = pullback(&FinMap::id(&a), &FinMap::id(&a)).unwrap();
        assert_eq!(pb.obj.len(), 2);
        assert!(pb.obj.contains(&Atom::pair(Atom::Int(1), Atom::Int(1))));
    }

    #[test]
    fn disjoint_images_give_empty_pullback() {
        let two = FinSetObj::range("2", 2);
        let ab = set(&["a", "b"]);
        let c = set(&["c"]);
        let f = map(&ab, &two, &["0", "0"]);
        let g = map(&c, &two, &["1"]);
        assert!(pullback(&f, &g).unwrap().obj.is_empty());
    }

    #[test]
    fn pullback_over_a_point_is_the_product() {
        let one = FinSetObj::range("1", 1);
        let f = map(&set(&["a", "b"]), &one, &["0", "0"]);
        let g = map(&set(&["c", "d"]), &one, &["0", "0"]);
        assert_eq!(pullback(&f, &g).unwrap().obj.len(), 4);
    }

    #[test]
    fn codomain_mismatch_is_an_error() {
        let f = FinMap::id(&FinSetObj::range("A", 1));
        let g = FinMap::id(&FinSetObj::range("B", 2));
        assert!(pullback(&f, &g).is_err());
    }

    #[test]
    fn square_verdicts() {
        let a = FinSetObj::range("A", 2);
        let id = FinMap::id(&a);
        assert!(is_pullback_square(&id, &id, &id, &id).unwrap().is_pullback());
        let xy = set(&["x", "y"]);
        let x = set(&["x"]);
        let collapse = map(&xy, &x, &["x", "x"]);
        let idx = FinMap::id(&x);
        let v = is_pullback_square(&collapse, &collapse, &idx, &idx).unwrap();
        assert!(matches!(v, SquareVerdict::NotPullback(_)));
        let two = FinSetObj::range("2", 2);
        let c0 = FinMap::constant(&two, &two, &Atom::Int(0)).unwrap();
        let v = is_pullback_square(&FinMap::id(&two), &FinMap::id(&two), &c0, &FinMap::id(&two)).unwrap();
        assert!(matches!(v, SquareVerdict::NotCommuting(_)));
    }

    #[test]
    fn equalizer_examples() {
        let ab = set(&["a", "b"]);
        let two = FinSetObj::range("2", 2);
        let f = map(&ab, &two, &["0", "0"]);
        let g = map(&ab, &two, &["0", "1"]);
        let (e, _) = equalizer(&f, &g).unwrap();
        assert_eq!(e.elems(), &[Atom::sym("a")]);
        let (e, inc) = equalizer(&f, &f).unwrap();
        assert_eq!(e, ab);
        assert_eq!(inc, FinMap::id(&ab));
    }

    #[test]
    fn kernel_pair_sizes() {
        let abc = set(&["a", "b", "c"]);
        let two = FinSetObj::range("2", 2);
        let f = map(&abc, &two, &["0", "0", "1"]);
        let r = kernel_pair(&f);
        assert_eq!(r.obj.len(), 5);
        assert!(is_kernel_pair(&r.p0, &r.p1, &f).unwrap().is_pullback());
        let inj = FinMap::id(&abc);
        let r = kernel_pair(&inj);
        assert_eq!(r.obj.len(), 3);
        assert_eq!(r.p0.images(), r.p1.images());
        assert_eq!(kernel_triples(&f).obj.len(), 9);
    }
}
