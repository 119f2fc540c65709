use super::core::{TCategory, TGraph};
use crate::catkit::{pt_is_cartesian, InternalCategory, PtMorphism, PtObject};
use crate::error::{Error, Result};
use crate::monadkit::{GMonad, Monad};
use crate::setcat::{Atom, FinMap};

/// The G-category encoding `Y•`: objects `(d1, s0)`, arrows `(pr0, s1)` on
/// composable pairs, 0-leg `(pr1, d0)` and idomorphic 1-leg
/// `(f, g) ↦ (f, g∘f)`.
pub fn cat_to_gcat(c: &InternalCategory) -> Result<TCategory<GMonad>> {
    let g = GMonad;
    let y2 = c.x2();
    let pr = |i: usize| FinMap::try_new(&y2, &c.x1, |p| Ok(p.proj(i)?.clone()));
    let (pr0, pr1) = (pr(0)?, pr(1)?);
    let x0 = PtObject::new(c.d1.clone(), c.s0.clone())?;
    let s1 = FinMap::try_new(&c.x1, &y2, |f| Ok(Atom::pair(f.clone(), c.id_of(&c.cod_of(f)))))?;
    let x1 = PtObject::new(pr0, s1)?;
    let d0 = PtMorphism::new(&x1, &x0, c.d0.clone(), pr1)?;
    let gx0 = g.obj(&x0)?;
    let up = FinMap::try_new(&y2, gx0.upper(), |p| {
        let (f, h) = (p.proj(0)?, p.proj(1)?);
        Ok(Atom::pair(f.clone(), c.m.apply(&Atom::pair(f.clone(), h.clone()))?))
    })?;
    let delta1 = PtMorphism::new(&x1, &gx0, FinMap::id(&c.x1), up)?;
    let s0_up = FinMap::try_new(&c.x1, &y2, |f| Ok(Atom::pair(c.id_of(&c.dom_of(f)), f.clone())))?;
    let s0 = PtMorphism::new(&x0, &x1, c.s0.clone(), s0_up)?;
    let graph = TGraph::new(g, d0, delta1, s0)?;
    let (x2, _, _) = graph.x2()?;
    let comp = |e: &Atom, f: &Atom| c.m.apply(&Atom::pair(e.clone(), f.clone()));
    let lower = FinMap::try_new(x2.lower(), &c.x1, |p| {
        let ef = p.proj(1)?;
        comp(ef.proj(0)?, ef.proj(1)?)
    })?;
    let upper = FinMap::try_new(x2.upper(), &y2, |p| {
        let (fg, r) = (p.proj(0)?, p.proj(1)?);
        let ef = r.proj(0)?;
        Ok(Atom::pair(comp(ef.proj(0)?, ef.proj(1)?)?, fg.proj(1)?.clone()))
    })?;
    let d1_1 = PtMorphism::new(&x2, &x1, lower, upper)?;
    TCategory::new(c.name.clone(), graph, d1_1)
}

/// Reads `Y•` back from a G-category whose 0-leg is P-cartesian and whose
/// 1-leg is idomorphic; both conditions are reported when they fail.
pub fn gcat_to_cat(c: &TCategory<GMonad>) -> Result<InternalCategory> {
    let mut bad = Vec::new();
    if !pt_is_cartesian(c.d0()) {
        bad.push("0-leg is not P-cartesian");
    }
    if !c.delta1().is_idomorphism() {
        bad.push("1-leg is not idomorphic");
    }
    if !bad.is_empty() {
        return Err(Error::not_a("the G-category of an internal category", bad.join("; ")));
    }
    let (x0, x1) = (c.x0(), c.x1());
    let d1 = x0.g.clone();
    let s0 = x0.t.clone();
    let d0 = c.d0().y.clone();
    let y1 = d1.dom().clone();
    let pairs = crate::setcat::pullback(&d0, &d1)?.obj;
    let m = FinMap::try_new(&pairs, &y1, |p| {
        let (f, g) = (p.proj(0)?, p.proj(1)?);
        let up = x1
            .upper()
            .iter()
            .find(|u| x1.g.get(u) == Some(f) && c.d0().x.get(u) == Some(g))
            .ok_or_else(|| Error::ty(format!("no upper element over ({f}, {g})")))?;
        c.d1_1.y.apply(&Atom::pair(g.clone(), up.clone()))
    })?;
    InternalCategory::new(c.name.clone(), d0, d1, s0, m)
}

/// Renames the lower level of `X1` along a bijection `σ`, transporting all
/// structure; the 1-leg then has lower map `σ⁻¹`, which is not an identity.
pub fn relabel_arrow_level(c: &TCategory<GMonad>, sigma: &FinMap) -> Result<TCategory<GMonad>> {
    let g = GMonad;
    let x1 = c.x1();
    if sigma.dom() != x1.lower() || !sigma.is_bijective() {
        return Err(Error::ty("relabelling must be a bijection on the lower level of X1"));
    }
    let inv = sigma.inverse()?;
    let nx1 = PtObject::new(sigma.after(&x1.g)?, x1.t.after(&inv)?)?;
    let d0 = PtMorphism::new(&nx1, c.x0(), c.d0().y.after(&inv)?, c.d0().x.clone())?;
    let delta1 = PtMorphism::new(&nx1, &c.delta1().cod, c.delta1().y.after(&inv)?, c.delta1().x.clone())?;
    let s0 = PtMorphism::new(c.x0(), &nx1, sigma.after(&c.s0().y)?, c.s0().x.clone())?;
    let graph = TGraph::new(g, d0, delta1, s0)?;
    let (x2, _, _) = graph.x2()?;
    let lower = FinMap::try_new(x2.lower(), sigma.cod(), |p| {
        let old = Atom::pair(inv.apply(p.proj(0)?)?, p.proj(1)?.clone());
        sigma.apply(&c.d1_1.y.apply(&old)?)
    })?;
    let d1_1 = PtMorphism::new(&x2, &nx1, lower, c.d1_1.x.clone())?;
    TCategory::new(format!("{} relabelled", c.name), graph, d1_1)
}
