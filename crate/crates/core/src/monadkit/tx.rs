use super::monad::Monad;
use crate::catkit::{Ambient, InternalCategory, SliceCat, SliceMor, SliceObj};
use crate::error::{Error, Result};
use crate::setcat::{Atom, FinMap, FinSetObj};

/// The monad on `FinSet/X0` induced by an internal category `X•`: pull back
/// along the domain, push forward along the codomain.
#[derive(Debug, Clone)]
pub struct TxMonad {
    pub cat: InternalCategory,
    slice: SliceCat,
}

impl TxMonad {
    pub fn new(cat: &InternalCategory) -> Result<Self> {
        if let Some(f) = cat.validate().first_failure() {
            return Err(Error::law(f.name.clone(), f.witness.clone().unwrap_or_default()));
        }
        Ok(TxMonad { cat: cat.clone(), slice: SliceCat::new(&cat.x0) })
    }
}

impl Monad for TxMonad {
    type A = SliceCat;

    fn ambient(&self) -> &SliceCat {
        &self.slice
    }

    fn name(&self) -> String {
        format!("TX({})", self.cat.name)
    }

    /// `{(z, f) : d1 f = h z}` over `d0 ∘ pr2`.
    fn obj(&self, h: &SliceObj) -> Result<SliceObj> {
        let mut elems = Vec::new();
        for (z, hz) in h.over.pairs() {
            for f in self.cat.x1.iter() {
                if self.cat.d1.get(f) == Some(hz) {
                    elems.push(Atom::pair(z.clone(), f.clone()));
                }
            }
        }
        let carrier = FinSetObj::collect(format!("T({})", h.carrier.name), elems);
        let over = FinMap::try_new(&carrier, &self.cat.x0, |p| self.cat.d0.apply(p.proj(1)?))?;
        Ok(SliceObj::new(over))
    }

    fn fmap(&self, phi: &SliceMor) -> Result<SliceMor> {
        let (s, t) = (self.obj(&phi.dom)?, self.obj(&phi.cod)?);
        let map = FinMap::try_new(&s.carrier, &t.carrier, |p| {
            Ok(Atom::pair(phi.map.apply(p.proj(0)?)?, p.proj(1)?.clone()))
        })?;
        SliceMor::new(&s, &t, map)
    }

    fn unit(&self, h: &SliceObj) -> Result<SliceMor> {
        let th = self.obj(h)?;
        let map = FinMap::try_new(&h.carrier, &th.carrier, |z| {
            Ok(Atom::pair(z.clone(), self.cat.s0.apply(&h.over.apply(z)?)?))
        })?;
        SliceMor::new(h, &th, map)
    }

    fn mult(&self, h: &SliceObj) -> Result<SliceMor> {
        let th = self.obj(h)?;
        let tth = self.obj(&th)?;
        let map = FinMap::try_new(&tth.carrier, &th.carrier, |p| {
            let (zf, g) = (p.proj(0)?, p.proj(1)?);
            let (z, f) = (zf.proj(0)?, zf.proj(1)?);
            Ok(Atom::pair(z.clone(), self.cat.m.apply(&Atom::pair(f.clone(), g.clone()))?))
        })?;
        SliceMor::new(&tth, &th, map)
    }

    fn probes(&self, size: usize) -> Vec<SliceObj> {
        let mut out = self.slice.probes(size);
        out.push(self.slice.terminal());
        out
    }
}
