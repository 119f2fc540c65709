use crate::error::{Error, Result};
use crate::setcat::{is_equalizer, is_pullback_square, pullback, Atom, FinMap, FinSetObj, SquareVerdict};
use std::collections::HashMap;
use std::fmt;

/// A finitely enumerable category in which every construction of the
/// workbench is carried out. Morphisms are represented by one or more
/// underlying finite maps ("levels"); pullbacks and equalizers in every
/// shipped instance are computed levelwise.
pub trait Ambient {
    type Obj: Clone + PartialEq + fmt::Debug + fmt::Display;
    type Mor: Clone + PartialEq + fmt::Debug;

    fn name(&self) -> String;
    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn id(&self, x: &Self::Obj) -> Self::Mor;
    /// `g ∘ f`
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Mor>;

    fn obj_levels(&self, x: &Self::Obj) -> Vec<FinSetObj>;
    fn levels(&self, f: &Self::Mor) -> Vec<FinMap>;
    /// Reassembles a morphism from its levels, checking it is one.
    fn from_levels(&self, dom: &Self::Obj, cod: &Self::Obj, levels: Vec<FinMap>) -> Result<Self::Mor>;

    /// Chosen pullback `(P, pf, pg)` of the cospan `(f, g)`.
    fn pullback(&self, f: &Self::Mor, g: &Self::Mor) -> Result<(Self::Obj, Self::Mor, Self::Mor)>;

    /// Small objects used as probes by law and cartesianness checks.
    fn probes(&self, size: usize) -> Vec<Self::Obj>;

    /// The unique `c` with `left ∘ c = a` and `top ∘ c = b`, when `(left, top)`
    /// is a pullback cone.
    fn lift(&self, left: &Self::Mor, top: &Self::Mor, a: &Self::Mor, b: &Self::Mor) -> Result<Self::Mor> {
        let (ll, tl, al, bl) = (self.levels(left), self.levels(top), self.levels(a), self.levels(b));
        let mut out = Vec::with_capacity(ll.len());
        for i in 0..ll.len() {
            out.push(lift_maps(&ll[i], &tl[i], &al[i], &bl[i])?);
        }
        self.from_levels(&self.dom(a), &self.dom(left), out)
    }

    /// `c` with `m ∘ c = a`, when it exists (unique when `m` is mono).
    fn factor_through_mono(&self, m: &Self::Mor, a: &Self::Mor) -> Option<Self::Mor> {
        let (ml, al) = (self.levels(m), self.levels(a));
        let mut out = Vec::with_capacity(ml.len());
        for i in 0..ml.len() {
            out.push(factor_map(&ml[i], &al[i])?);
        }
        self.from_levels(&self.dom(a), &self.dom(m), out).ok()
    }

    fn is_pullback_square(
        &self,
        top: &Self::Mor,
        left: &Self::Mor,
        right: &Self::Mor,
        bottom: &Self::Mor,
    ) -> Result<SquareVerdict> {
        let (t, l, r, b) = (self.levels(top), self.levels(left), self.levels(right), self.levels(bottom));
        for i in 0..t.len() {
            let v = is_pullback_square(&t[i], &l[i], &r[i], &b[i])?;
            if !v.is_pullback() {
                return Ok(match v {
                    SquareVerdict::NotCommuting(w) => SquareVerdict::NotCommuting(format!("level {i}: {w}")),
                    SquareVerdict::NotPullback(w) => SquareVerdict::NotPullback(format!("level {i}: {w}")),
                    SquareVerdict::Pullback => unreachable!(),
                });
            }
        }
        Ok(SquareVerdict::Pullback)
    }

    /// Levelwise check that `e` equalizes `(f, g)` universally.
    fn is_equalizer(&self, e: &Self::Mor, f: &Self::Mor, g: &Self::Mor) -> Result<Option<String>> {
        let (el, fl, gl) = (self.levels(e), self.levels(f), self.levels(g));
        for i in 0..el.len() {
            if let Some(w) = is_equalizer(&el[i], &fl[i], &gl[i])? {
                return Ok(Some(if el.len() > 1 { format!("level {i}: {w}") } else { w }));
            }
        }
        Ok(None)
    }

    /// Whether `(p0, p1)` is a kernel pair of `f`.
    fn is_kernel_pair(&self, p0: &Self::Mor, p1: &Self::Mor, f: &Self::Mor) -> Result<SquareVerdict> {
        self.is_pullback_square(p1, p0, f, f)
    }

    fn difference(&self, f: &Self::Mor, g: &Self::Mor) -> Option<String> {
        if f == g {
            return None;
        }
        let (fl, gl) = (self.levels(f), self.levels(g));
        for i in 0..fl.len().min(gl.len()) {
            if let Some(w) = fl[i].first_difference(&gl[i]) {
                return Some(if fl.len() > 1 { format!("level {i}: {w}") } else { w });
            }
        }
        Some("morphisms differ".into())
    }

    fn is_mono(&self, f: &Self::Mor) -> bool {
        self.levels(f).iter().all(FinMap::is_injective)
    }

    fn is_iso(&self, f: &Self::Mor) -> bool {
        self.levels(f).iter().all(FinMap::is_bijective)
    }
}

/// Levelwise universal map into a pullback cone of finite maps.
pub fn lift_maps(left: &FinMap, top: &FinMap, a: &FinMap, b: &FinMap) -> Result<FinMap> {
    let mut over: HashMap<(&Atom, &Atom), Vec<&Atom>> = HashMap::new();
    for (p, l) in left.pairs() {
        if let Some(t) = top.get(p) {
            over.entry((l, t)).or_default().push(p);
        }
    }
    FinMap::try_new(a.dom(), left.dom(), |w| {
        let (aw, bw) = (a.apply(w)?, b.apply(w)?);
        match over.get(&(&aw, &bw)).map(Vec::as_slice) {
            Some([p]) => Ok((*p).clone()),
            None | Some([]) => Err(Error::not_a("pullback cone", format!("nothing over ({aw}, {bw})"))),
            Some([p, q, ..]) => {
                Err(Error::not_a("pullback cone", format!("{p} and {q} both lie over ({aw}, {bw})")))
            }
        }
    })
}

fn factor_map(m: &FinMap, a: &FinMap) -> Option<FinMap> {
    FinMap::try_new(a.dom(), m.dom(), |w| {
        let aw = a.apply(w)?;
        m.pairs().find(|(_, y)| **y == aw).map(|(x, _)| x.clone()).ok_or_else(|| Error::ty("no factor"))
    })
    .ok()
}

/// The category of finite sets.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FinSetCat;

impl Ambient for FinSetCat {
    type Obj = FinSetObj;
    type Mor = FinMap;

    fn name(&self) -> String {
        "FinSet".into()
    }

    fn dom(&self, f: &FinMap) -> FinSetObj {
        f.dom().clone()
    }

    fn cod(&self, f: &FinMap) -> FinSetObj {
        f.cod().clone()
    }

    fn id(&self, x: &FinSetObj) -> FinMap {
        FinMap::id(x)
    }

    fn compose(&self, g: &FinMap, f: &FinMap) -> Result<FinMap> {
        g.after(f)
    }

    fn hom(&self, x: &FinSetObj, y: &FinSetObj) -> Vec<FinMap> {
        FinMap::all(x, y).collect()
    }

    fn obj_levels(&self, x: &FinSetObj) -> Vec<FinSetObj> {
        vec![x.clone()]
    }

    fn levels(&self, f: &FinMap) -> Vec<FinMap> {
        vec![f.clone()]
    }

    fn from_levels(&self, dom: &FinSetObj, cod: &FinSetObj, mut levels: Vec<FinMap>) -> Result<FinMap> {
        let f = levels.pop().ok_or_else(|| Error::ty("no level"))?;
        if f.dom() != dom || f.cod() != cod {
            return Err(Error::ty("level has the wrong type"));
        }
        Ok(f)
    }

    fn pullback(&self, f: &FinMap, g: &FinMap) -> Result<(FinSetObj, FinMap, FinMap)> {
        let pb = pullback(f, g)?;
        Ok((pb.obj, pb.pf, pb.pg))
    }

    fn probes(&self, size: usize) -> Vec<FinSetObj> {
        (0..=size).map(probe_set).collect()
    }
}

/// `{a, b, c, ...}` with `n` elements.
pub fn probe_set(n: usize) -> FinSetObj {
    FinSetObj::collect(
        format!("P{n}"),
        (0..n).map(|i| Atom::sym(((b'a' + (i % 26) as u8) as char).to_string() + &"'".repeat(i / 26))),
    )
}
