use super::core::{TCategory, TGraph};
use crate::catkit::{InternalCategory, InternalFunctor, SliceMor, SliceObj};
use crate::error::{Error, Result};
use crate::monadkit::{Monad, TxMonad};
use crate::setcat::{Atom, FinMap};

/// A `T_X`-category as the internal functor `Y• → X•` it encodes:
/// `d1 = pr1.δ1`, `g1 = pr2.δ1`, and `a` then `b` composes to
/// `d1^1(b, (a, g1 b))`.
pub fn tx_tcat_to_functor(t: &TxMonad, c: &TCategory<TxMonad>) -> Result<InternalFunctor> {
    let (y0, y1) = (&c.x0().carrier, &c.x1().carrier);
    let delta1 = &c.delta1().map;
    let d0 = c.d0().map.clone();
    let d1 = FinMap::try_new(y1, y0, |y| Ok(delta1.apply(y)?.proj(0)?.clone()))?;
    let g1 = FinMap::try_new(y1, &t.cat.x1, |y| Ok(delta1.apply(y)?.proj(1)?.clone()))?;
    let pairs = crate::setcat::pullback(&d0, &d1)?.obj;
    let m = FinMap::try_new(&pairs, y1, |p| {
        let (a, b) = (p.proj(0)?, p.proj(1)?);
        c.d1_1.map.apply(&Atom::pair(b.clone(), Atom::pair(a.clone(), g1.apply(b)?)))
    })?;
    let y = InternalCategory::new(c.name.clone(), d0, d1, c.s0().map.clone(), m)?;
    InternalFunctor::new(&y, &t.cat, c.x0().over.clone(), g1)
}

/// An internal functor into `X•` as a `T_X`-category.
pub fn functor_to_tx_tcat(t: &TxMonad, g: &InternalFunctor) -> Result<TCategory<TxMonad>> {
    if g.target != t.cat {
        return Err(Error::ty("functor does not land in the monad's category"));
    }
    if let Some(c) = g.validate().first_failure() {
        return Err(Error::not_a("internal functor", format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())));
    }
    let y = &g.source;
    let x0 = SliceObj::new(g.f0.clone());
    let x1 = SliceObj::new(g.f0.after(&y.d0)?);
    let tx0 = t.obj(&x0)?;
    let delta1 = FinMap::try_new(&y.x1, &tx0.carrier, |f| Ok(Atom::pair(y.dom_of(f), g.f1.apply(f)?)))?;
    let graph = TGraph::new(
        t.clone(),
        SliceMor::new(&x1, &x0, y.d0.clone())?,
        SliceMor::new(&x1, &tx0, delta1)?,
        SliceMor::new(&x0, &x1, y.s0.clone())?,
    )?;
    let (x2, _, _) = graph.x2()?;
    let d1_1 = FinMap::try_new(&x2.carrier, &y.x1, |p| {
        let (b, a) = (p.proj(0)?, p.proj(1)?.proj(0)?);
        y.then(a, b).ok_or_else(|| Error::ty(format!("({a}, {b}) not composable")))
    })?;
    TCategory::new(y.name.clone(), graph, SliceMor::new(&x2, &x1, d1_1)?)
}
