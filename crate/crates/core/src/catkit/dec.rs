use super::functor::InternalFunctor;
use super::internal::{InternalCategory, ReflexiveGraph};
use crate::error::Result;
use crate::setcat::{Atom, FinMap};

/// The shifted category obtained by dropping the last face and degeneracy:
/// objects are the arrows of `c`, an arrow `(f, g)` goes from `g∘f` to `g`.
/// Returns it with the counit `ε`, which is given by the last faces.
pub fn dec(c: &InternalCategory) -> Result<(InternalCategory, InternalFunctor)> {
    let x2 = c.x2();
    let d0 = FinMap::new(&x2, &c.x1, |p| p.proj(1).unwrap().clone())?;
    let d1 = c.m.clone();
    let s0 = FinMap::new(&c.x1, &x2, |f| Atom::pair(c.id_of(&c.dom_of(f)), f.clone()))?;
    let g = ReflexiveGraph::new(d0, d1, s0)?;
    let dx2 = g.x2();
    let m = FinMap::try_new(&dx2, &x2, |q| {
        let (a, b) = (q.proj(0)?, q.proj(1)?);
        let (f, fp, gp) = (a.proj(0)?, b.proj(0)?, b.proj(1)?);
        let ffp = c.then(f, fp).ok_or_else(|| crate::Error::ty("dec composite"))?;
        Ok(Atom::pair(ffp, gp.clone()))
    })?;
    let d = InternalCategory::on_graph(format!("Dec {}", c.name), &g, m)?;
    let e1 = FinMap::new(&x2, &c.x1, |p| p.proj(0).unwrap().clone())?;
    let eps = InternalFunctor::new(&d, c, c.d1.clone(), e1)?;
    Ok((d, eps))
}

/// The comparison `Dec c → R[d0]•`, `(f, g) ↦ (g, g∘f)`, an isomorphism
/// exactly when `c` is a groupoid.
pub fn dec_to_kernel_groupoid(c: &InternalCategory) -> Result<InternalFunctor> {
    let (d, _) = dec(c)?;
    let r = InternalCategory::kernel_pair_groupoid(format!("R[d0] of {}", c.name), &c.d0);
    let f0 = FinMap::new(&d.x0, &r.x0, |f| f.clone())?;
    let f1 = FinMap::try_new(&d.x1, &r.x1, |p| {
        let (f, g) = (p.proj(0)?, p.proj(1)?);
        Ok(Atom::pair(g.clone(), c.then(f, g).unwrap()))
    })?;
    InternalFunctor::new(&d, &r, f0, f1)
}
