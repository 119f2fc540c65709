use super::ambient::{probe_set, Ambient};
use crate::error::{Error, Result};
use crate::setcat::{pullback, FinMap, FinSetObj};
use std::fmt;

/// An object `h: Z → B` of the slice over `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceObj {
    pub carrier: FinSetObj,
    pub over: FinMap,
}

impl SliceObj {
    pub fn new(over: FinMap) -> Self {
        SliceObj { carrier: over.dom().clone(), over }
    }
}

impl fmt::Display for SliceObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.over, self.over.cod())
    }
}

/// A map of carriers commuting with the structure maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceMor {
    pub dom: SliceObj,
    pub cod: SliceObj,
    pub map: FinMap,
}

impl SliceMor {
    pub fn new(dom: &SliceObj, cod: &SliceObj, map: FinMap) -> Result<Self> {
        if map.dom() != &dom.carrier || map.cod() != &cod.carrier {
            return Err(Error::ty("slice morphism carrier types"));
        }
        if let Some(w) = cod.over.after(&map)?.first_difference(&dom.over) {
            return Err(Error::not_a("map over the base", w));
        }
        Ok(SliceMor { dom: dom.clone(), cod: cod.clone(), map })
    }
}

/// The slice category FinSet/B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceCat {
    pub base: FinSetObj,
}

impl SliceCat {
    pub fn new(base: &FinSetObj) -> Self {
        SliceCat { base: base.clone() }
    }

    pub fn terminal(&self) -> SliceObj {
        SliceObj::new(FinMap::id(&self.base))
    }
}

impl Ambient for SliceCat {
    type Obj = SliceObj;
    type Mor = SliceMor;

    fn name(&self) -> String {
        format!("FinSet/{}", self.base)
    }

    fn dom(&self, f: &SliceMor) -> SliceObj {
        f.dom.clone()
    }

    fn cod(&self, f: &SliceMor) -> SliceObj {
        f.cod.clone()
    }

    fn id(&self, x: &SliceObj) -> SliceMor {
        SliceMor { dom: x.clone(), cod: x.clone(), map: FinMap::id(&x.carrier) }
    }

    fn compose(&self, g: &SliceMor, f: &SliceMor) -> Result<SliceMor> {
        if f.cod != g.dom {
            return Err(Error::ty("slice composition types"));
        }
        Ok(SliceMor { dom: f.dom.clone(), cod: g.cod.clone(), map: g.map.after(&f.map)? })
    }

    fn hom(&self, x: &SliceObj, y: &SliceObj) -> Vec<SliceMor> {
        FinMap::all(&x.carrier, &y.carrier)
            .filter(|m| y.over.after(m).map(|c| c == x.over).unwrap_or(false))
            .map(|map| SliceMor { dom: x.clone(), cod: y.clone(), map })
            .collect()
    }

    fn obj_levels(&self, x: &SliceObj) -> Vec<FinSetObj> {
        vec![x.carrier.clone()]
    }

    fn levels(&self, f: &SliceMor) -> Vec<FinMap> {
        vec![f.map.clone()]
    }

    fn from_levels(&self, dom: &SliceObj, cod: &SliceObj, mut levels: Vec<FinMap>) -> Result<SliceMor> {
        let map = levels.pop().ok_or_else(|| Error::ty("no level"))?;
        SliceMor::new(dom, cod, map)
    }

    fn pullback(&self, f: &SliceMor, g: &SliceMor) -> Result<(SliceObj, SliceMor, SliceMor)> {
        let pb = pullback(&f.map, &g.map)?;
        let p = SliceObj::new(f.dom.over.after(&pb.pf)?);
        let pf = SliceMor { dom: p.clone(), cod: f.dom.clone(), map: pb.pf };
        let pg = SliceMor { dom: p.clone(), cod: g.dom.clone(), map: pb.pg };
        Ok((p, pf, pg))
    }

    fn probes(&self, size: usize) -> Vec<SliceObj> {
        let mut out = Vec::new();
        for n in 0..=size {
            let z = probe_set(n);
            for h in FinMap::all(&z, &self.base) {
                out.push(SliceObj::new(h));
            }
        }
        out
    }
}
