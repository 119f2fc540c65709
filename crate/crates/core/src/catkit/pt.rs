use super::ambient::Ambient;
use crate::error::{Error, Result};
use crate::setcat::{is_pullback_square, pullback, Atom, FinMap, FinSetObj, SquareVerdict};
use std::fmt;

/// A split epimorphism `g: X → Y` with chosen section `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PtObject {
    pub g: FinMap,
    pub t: FinMap,
}

impl PtObject {
    pub fn new(g: FinMap, t: FinMap) -> Result<Self> {
        if g.dom() != t.cod() || g.cod() != t.dom() {
            return Err(Error::ty("section has the wrong type"));
        }
        if let Some(w) = g.after(&t)?.first_difference(&FinMap::id(g.cod())) {
            return Err(Error::not_a("split epimorphism", w));
        }
        Ok(PtObject { g, t })
    }

    pub fn upper(&self) -> &FinSetObj {
        self.g.dom()
    }

    pub fn lower(&self) -> &FinSetObj {
        self.g.cod()
    }

    pub fn identity_on(y: &FinSetObj) -> Self {
        PtObject { g: FinMap::id(y), t: FinMap::id(y) }
    }
}

impl fmt::Display for PtObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} ⇄ {})", self.g, self.t)
    }
}

/// A commuting square between split epimorphisms: `x` on the upper level,
/// `y` on the lower level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PtMorphism {
    pub dom: PtObject,
    pub cod: PtObject,
    pub y: FinMap,
    pub x: FinMap,
}

impl PtMorphism {
    pub fn new(dom: &PtObject, cod: &PtObject, y: FinMap, x: FinMap) -> Result<Self> {
        if x.dom() != dom.upper() || x.cod() != cod.upper() || y.dom() != dom.lower() || y.cod() != cod.lower() {
            return Err(Error::ty("point morphism level types"));
        }
        if let Some(w) = cod.g.after(&x)?.first_difference(&y.after(&dom.g)?) {
            return Err(Error::not_a("morphism of points (projections)", w));
        }
        if let Some(w) = x.after(&dom.t)?.first_difference(&cod.t.after(&y)?) {
            return Err(Error::not_a("morphism of points (sections)", w));
        }
        Ok(PtMorphism { dom: dom.clone(), cod: cod.clone(), y, x })
    }

    /// Lower map is an identity.
    pub fn is_idomorphism(&self) -> bool {
        self.dom.lower() == self.cod.lower() && self.y == FinMap::id(self.dom.lower())
    }
}

/// Whether the underlying square of a morphism of points is a pullback,
/// i.e. the morphism lies in the class P.
pub fn pt_is_cartesian(sq: &PtMorphism) -> bool {
    pt_square(sq).map(|v| v.is_pullback()).unwrap_or(false)
}

pub fn pt_square(sq: &PtMorphism) -> Result<SquareVerdict> {
    is_pullback_square(&sq.x, &sq.dom.g, &sq.cod.g, &sq.y)
}

/// The category Pt(FinSet) of split epimorphisms.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PtCat;

impl Ambient for PtCat {
    type Obj = PtObject;
    type Mor = PtMorphism;

    fn name(&self) -> String {
        "Pt(FinSet)".into()
    }

    fn dom(&self, f: &PtMorphism) -> PtObject {
        f.dom.clone()
    }

    fn cod(&self, f: &PtMorphism) -> PtObject {
        f.cod.clone()
    }

    fn id(&self, o: &PtObject) -> PtMorphism {
        PtMorphism { dom: o.clone(), cod: o.clone(), y: FinMap::id(o.lower()), x: FinMap::id(o.upper()) }
    }

    fn compose(&self, g: &PtMorphism, f: &PtMorphism) -> Result<PtMorphism> {
        if f.cod != g.dom {
            return Err(Error::ty("point composition types"));
        }
        Ok(PtMorphism { dom: f.dom.clone(), cod: g.cod.clone(), y: g.y.after(&f.y)?, x: g.x.after(&f.x)? })
    }

    fn hom(&self, a: &PtObject, b: &PtObject) -> Vec<PtMorphism> {
        let mut out = Vec::new();
        for y in FinMap::all(a.lower(), b.lower()) {
            for x in FinMap::all(a.upper(), b.upper()) {
                if let Ok(m) = PtMorphism::new(a, b, y.clone(), x) {
                    out.push(m);
                }
            }
        }
        out
    }

    fn obj_levels(&self, o: &PtObject) -> Vec<FinSetObj> {
        vec![o.upper().clone(), o.lower().clone()]
    }

    fn levels(&self, f: &PtMorphism) -> Vec<FinMap> {
        vec![f.x.clone(), f.y.clone()]
    }

    fn from_levels(&self, dom: &PtObject, cod: &PtObject, mut levels: Vec<FinMap>) -> Result<PtMorphism> {
        if levels.len() != 2 {
            return Err(Error::ty("a morphism of points has two levels"));
        }
        let y = levels.pop().unwrap();
        let x = levels.pop().unwrap();
        PtMorphism::new(dom, cod, y, x)
    }

    fn pullback(&self, f: &PtMorphism, g: &PtMorphism) -> Result<(PtObject, PtMorphism, PtMorphism)> {
        let up = pullback(&f.x, &g.x)?;
        let low = pullback(&f.y, &g.y)?;
        let pg = low.mediate(&f.dom.g.after(&up.pf)?, &g.dom.g.after(&up.pg)?)?;
        let pt = up.mediate(&f.dom.t.after(&low.pf)?, &g.dom.t.after(&low.pg)?)?;
        let p = PtObject::new(pg, pt)?;
        let m1 = PtMorphism::new(&p, &f.dom, low.pf, up.pf)?;
        let m2 = PtMorphism::new(&p, &g.dom, low.pg, up.pg)?;
        Ok((p, m1, m2))
    }

    /// Split epimorphisms with `|X| + |Y| ≤ size`.
    fn probes(&self, size: usize) -> Vec<PtObject> {
        let mut out = Vec::new();
        for ny in 0..=size / 2 {
            for nx in ny..=size - ny {
                if ny == 0 && nx > 0 {
                    continue;
                }
                let y = FinSetObj::collect(format!("Y{ny}"), (0..ny as i64).map(Atom::Int));
                let x = FinSetObj::collect(format!("X{nx}"), (0..nx).map(|i| Atom::sym(format!("x{i}"))));
                for g in FinMap::all(&x, &y).filter(FinMap::is_surjective) {
                    for t in FinMap::all(&y, &x) {
                        if let Ok(p) = PtObject::new(g.clone(), t) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probe_count_at_total_four() {
        assert_eq!(PtCat.probes(4).len(), 1 + 1 + 2 + 3 + 2);
    }

    #[test]
    fn identity_square_is_cartesian() {
        for p in PtCat.probes(4) {
            assert!(pt_is_cartesian(&PtCat.id(&p)));
        }
    }

    #[test]
    fn collapsing_a_fibre_is_not_cartesian() {
        let one = FinSetObj::range("1", 1);
        let two = FinSetObj::of_syms("X", &["p", "q"]);
        let g = FinMap::constant(&two, &one, &Atom::Int(0)).unwrap();
        let t = FinMap::constant(&one, &two, &Atom::sym("p")).unwrap();
        let a = PtObject::new(g, t).unwrap();
        let b = PtObject::identity_on(&one);
        let sq = PtMorphism::new(&a, &b, FinMap::id(&one), a.g.clone()).unwrap();
        assert!(!pt_is_cartesian(&sq));
    }
}
