use super::algebra::Algebra;
use super::monad::Monad;
use super::tx::TxMonad;
use crate::catkit::{is_discrete_fibration, InternalCategory, InternalFunctor, SliceMor, SliceObj};
use crate::error::{Error, Result};
use crate::setcat::{Atom, FinMap};
use std::collections::BTreeMap;

/// The discrete fibration over `X•` whose arrows are the pairs `(z, f)`,
/// going from `z` to `ξ(z, f)`.
pub fn algebra_to_dfib(t: &TxMonad, alg: &Algebra<TxMonad>) -> Result<InternalFunctor> {
    if !super::validate_algebra(t, alg)?.passed() {
        return Err(Error::Precondition("not an algebra".into()));
    }
    let c = &t.cat;
    let h = &alg.carrier;
    let th = t.obj(h)?;
    let xi = &alg.xi.map;
    let objects: Vec<Atom> = h.carrier.elems().to_vec();
    let arrows: Vec<(Atom, Atom, Atom)> = th
        .carrier
        .iter()
        .map(|p| Ok((p.clone(), p.proj(0)?.clone(), xi.apply(p)?)))
        .collect::<Result<_>>()?;
    let mut identity = BTreeMap::new();
    for z in &objects {
        identity.insert(z.clone(), Atom::pair(z.clone(), c.s0.apply(&h.over.apply(z)?)?));
    }
    let src = InternalCategory::from_arrows(format!("elements of {}", h.carrier.name), &objects, &arrows, &identity, |a, b| {
        let (z, f) = (a.proj(0).ok()?, a.proj(1).ok()?);
        let g = b.proj(1).ok()?;
        Some(Atom::pair(z.clone(), c.then(f, g)?))
    })?;
    let f0 = h.over.clone();
    let f1 = FinMap::try_new(&src.x1, &c.x1, |p| Ok(p.proj(1)?.clone()))?;
    InternalFunctor::new(&src, c, f0, f1)
}

/// Reads the algebra off a discrete fibration: `ξ(z, f)` is the codomain of
/// the unique lift of `f` at `z`.
pub fn dfib_to_algebra(t: &TxMonad, f: &InternalFunctor) -> Result<Algebra<TxMonad>> {
    if f.target != t.cat {
        return Err(Error::ty("functor does not land in the monad's category"));
    }
    if !f.validate().passed() {
        return Err(Error::not_a("internal functor", f.validate().to_string()));
    }
    if !is_discrete_fibration(f) {
        let w = f.fibration_square()?.witness().unwrap_or_default();
        return Err(Error::not_a("discrete fibration", w));
    }
    let h = SliceObj::new(f.f0.clone());
    let th = t.obj(&h)?;
    let s = &f.source;
    let xi = FinMap::try_new(&th.carrier, &h.carrier, |p| {
        let (z, g) = (p.proj(0)?, p.proj(1)?);
        let lift = s
            .x1
            .iter()
            .find(|a| s.dom_of(a) == *z && f.f1.get(a) == Some(g))
            .ok_or_else(|| Error::not_a("discrete fibration", format!("no lift of {g} at {z}")))?;
        Ok(s.cod_of(lift))
    })?;
    Algebra::new(t, h.clone(), SliceMor::new(&th, &h, xi)?)
}
