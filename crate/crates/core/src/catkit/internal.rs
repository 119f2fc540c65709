use super::ambient::FinSetCat;
use super::simplicial::{check_simplicial, Simplicial};
use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::setcat::{kernel_pair, pullback, Atom, FinMap, FinSetObj};
use std::collections::BTreeMap;

/// An internal category in finite sets. `d1` is the domain face, `d0` the
/// codomain face; `X2 = {(f,g) : d0 f = d1 g}` is read "f then g" and
/// `m(f,g)` is the composite `g∘f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InternalCategory {
    pub name: String,
    pub x0: FinSetObj,
    pub x1: FinSetObj,
    pub d0: FinMap,
    pub d1: FinMap,
    pub s0: FinMap,
    pub m: FinMap,
}

/// A reflexive graph `(X0, X1, d0, d1, s0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflexiveGraph {
    pub x0: FinSetObj,
    pub x1: FinSetObj,
    pub d0: FinMap,
    pub d1: FinMap,
    pub s0: FinMap,
}

impl ReflexiveGraph {
    pub fn new(d0: FinMap, d1: FinMap, s0: FinMap) -> Result<Self> {
        let (x1, x0) = (d0.dom().clone(), d0.cod().clone());
        if d1.dom() != &x1 || d1.cod() != &x0 || s0.dom() != &x0 || s0.cod() != &x1 {
            return Err(Error::ty("reflexive graph faces"));
        }
        for (face, d) in [("d0.s0=1", &d0), ("d1.s0=1", &d1)] {
            if let Some(w) = d.after(&s0)?.first_difference(&FinMap::id(&x0)) {
                return Err(Error::law(face, w));
            }
        }
        Ok(ReflexiveGraph { x0, x1, d0, d1, s0 })
    }

    /// Canonical composable pairs `(f, g)` with `d0 f = d1 g`.
    pub fn x2(&self) -> FinSetObj {
        pullback(&self.d0, &self.d1).unwrap().obj.renamed("X2")
    }
}

impl InternalCategory {
    /// Checks only that the data is well typed; use [`validate`](Self::validate)
    /// for the laws.
    pub fn new(name: impl Into<String>, d0: FinMap, d1: FinMap, s0: FinMap, m: FinMap) -> Result<Self> {
        let g = ReflexiveGraph::new(d0, d1, s0)?;
        Self::on_graph(name, &g, m)
    }

    pub fn on_graph(name: impl Into<String>, g: &ReflexiveGraph, m: FinMap) -> Result<Self> {
        if m.dom() != &g.x2() || m.cod() != &g.x1 {
            return Err(Error::ty("composition must be a map from the canonical X2 to X1"));
        }
        Ok(InternalCategory {
            name: name.into(),
            x0: g.x0.clone(),
            x1: g.x1.clone(),
            d0: g.d0.clone(),
            d1: g.d1.clone(),
            s0: g.s0.clone(),
            m,
        })
    }

    /// Builds a category from named arrows `(arrow, dom, cod)`, identities and
    /// a composition rule `comp(f, g) = g∘f` on composable pairs.
    pub fn from_arrows(
        name: impl Into<String>,
        objects: &[Atom],
        arrows: &[(Atom, Atom, Atom)],
        identity: &BTreeMap<Atom, Atom>,
        comp: impl Fn(&Atom, &Atom) -> Option<Atom>,
    ) -> Result<Self> {
        let x0 = FinSetObj::new("X0", objects.iter().cloned())?;
        let x1 = FinSetObj::new("X1", arrows.iter().map(|a| a.0.clone()))?;
        let d1 = FinMap::from_pairs(&x1, &x0, arrows.iter().map(|a| (a.0.clone(), a.1.clone())))?;
        let d0 = FinMap::from_pairs(&x1, &x0, arrows.iter().map(|a| (a.0.clone(), a.2.clone())))?;
        let s0 = FinMap::from_pairs(&x0, &x1, identity.iter().map(|(o, a)| (o.clone(), a.clone())))?;
        let g = ReflexiveGraph::new(d0, d1, s0)?;
        let x2 = g.x2();
        let m = FinMap::try_new(&x2, &x1, |p| {
            let (f, h) = (p.proj(0)?, p.proj(1)?);
            comp(f, h).ok_or_else(|| Error::ty(format!("no composite for ({f}, {h})")))
        })?;
        Self::on_graph(name, &g, m)
    }

    pub fn graph(&self) -> ReflexiveGraph {
        ReflexiveGraph { x0: self.x0.clone(), x1: self.x1.clone(), d0: self.d0.clone(), d1: self.d1.clone(), s0: self.s0.clone() }
    }

    pub fn x2(&self) -> FinSetObj {
        self.m.dom().clone()
    }

    pub fn dom_of(&self, f: &Atom) -> Atom {
        self.d1.apply(f).unwrap()
    }

    pub fn cod_of(&self, f: &Atom) -> Atom {
        self.d0.apply(f).unwrap()
    }

    pub fn id_of(&self, x: &Atom) -> Atom {
        self.s0.apply(x).unwrap()
    }

    /// `f` then `g`, when composable.
    pub fn then(&self, f: &Atom, g: &Atom) -> Option<Atom> {
        self.m.get(&Atom::pair(f.clone(), g.clone())).cloned()
    }

    /// Every arrow from `a` to `b`.
    pub fn arrows(&self, a: &Atom, b: &Atom) -> Vec<Atom> {
        self.x1.iter().filter(|f| &self.dom_of(f) == a && &self.cod_of(f) == b).cloned().collect()
    }

    fn pr(&self, x2: &FinSetObj, i: usize) -> FinMap {
        FinMap::from_images(x2, &self.x1, x2.iter().map(|p| p.proj(i).unwrap().clone()).collect())
    }

    /// Levels 0..2 and, when the level-2 data is well typed, level 3.
    pub fn simplicial(&self) -> Result<Simplicial<FinSetCat>> {
        let x2 = self.x2();
        let (pr0, pr1) = (self.pr(&x2, 0), self.pr(&x2, 1));
        let s0_1 = FinMap::try_new(&self.x1, &x2, |f| Ok(Atom::pair(self.id_of(&self.dom_of(f)), f.clone())))?;
        let s1_1 = FinMap::try_new(&self.x1, &x2, |f| Ok(Atom::pair(f.clone(), self.id_of(&self.cod_of(f)))))?;
        let mut s = Simplicial {
            objs: vec![self.x0.clone(), self.x1.clone(), x2.clone()],
            faces: vec![vec![], vec![self.d0.clone(), self.d1.clone()], vec![pr1.clone(), self.m.clone(), pr0]],
            degens: vec![vec![self.s0.clone()], vec![s0_1, s1_1]],
        };
        let x3 = pullback(&pr1, &s.faces[2][2])?.obj.renamed("X3");
        let trip = |t: &Atom| -> (Atom, Atom, Atom) {
            let (a, b) = (t.proj(0).unwrap(), t.proj(1).unwrap());
            (a.proj(0).unwrap().clone(), a.proj(1).unwrap().clone(), b.proj(1).unwrap().clone())
        };
        let comp = |f: &Atom, g: &Atom| -> Result<Atom> {
            self.then(f, g).ok_or_else(|| Error::ty(format!("({f}, {g}) not composable")))
        };
        let built: Result<Vec<FinMap>> = (|| {
            let d0 = FinMap::try_new(&x3, &x2, |t| { let (_, g, h) = trip(t); Ok(Atom::pair(g, h)) })?;
            let d1 = FinMap::try_new(&x3, &x2, |t| { let (f, g, h) = trip(t); Ok(Atom::pair(comp(&f, &g)?, h)) })?;
            let d2 = FinMap::try_new(&x3, &x2, |t| { let (f, g, h) = trip(t); Ok(Atom::pair(f, comp(&g, &h)?)) })?;
            let d3 = FinMap::try_new(&x3, &x2, |t| { let (f, g, _) = trip(t); Ok(Atom::pair(f, g)) })?;
            Ok(vec![d0, d1, d2, d3])
        })();
        let Ok(faces3) = built else {
            return Ok(s);
        };
        let mk = |f: &Atom, g: &Atom, h: &Atom| Atom::pair(Atom::pair(f.clone(), g.clone()), Atom::pair(g.clone(), h.clone()));
        let degens2: Result<Vec<FinMap>> = (|| {
            let s0 = FinMap::try_new(&x2, &x3, |p| {
                let (f, g) = (p.proj(0)?, p.proj(1)?);
                Ok(mk(&self.id_of(&self.dom_of(f)), f, g))
            })?;
            let s1 = FinMap::try_new(&x2, &x3, |p| {
                let (f, g) = (p.proj(0)?, p.proj(1)?);
                Ok(mk(f, &self.id_of(&self.cod_of(f)), g))
            })?;
            let s2 = FinMap::try_new(&x2, &x3, |p| {
                let (f, g) = (p.proj(0)?, p.proj(1)?);
                Ok(mk(f, g, &self.id_of(&self.cod_of(g))))
            })?;
            Ok(vec![s0, s1, s2])
        })();
        s.objs.push(x3);
        s.faces.push(faces3);
        s.degens.push(degens2?);
        Ok(s)
    }

    /// Every simplicial identity through level 3, each named.
    pub fn validate(&self) -> Certificate {
        let mut cert = Certificate::new(format!("internal category {}", self.name));
        match self.simplicial() {
            Err(e) => {
                cert.record("level-2 degeneracies well typed", Some(e.to_string()));
            }
            Ok(s) => {
                let complete = s.objs.len() == 4;
                cert.extend("", check_simplicial(&FinSetCat, &s));
                cert.record(
                    "level-3 faces well typed",
                    (!complete).then(|| "composites leave X2, so X3 faces cannot be formed".to_string()),
                );
            }
        }
        cert
    }

    pub fn is_valid(&self) -> bool {
        self.validate().passed()
    }

    /// The discrete category on a set.
    pub fn discrete(name: impl Into<String>, x: &FinSetObj) -> Self {
        let id = FinMap::id(x);
        let g = ReflexiveGraph::new(id.clone(), id.clone(), id).unwrap();
        let x2 = g.x2();
        let m = FinMap::new(&x2, x, |p| p.proj(0).unwrap().clone()).unwrap();
        Self::on_graph(name, &g, m).unwrap()
    }

    /// The kernel-pair groupoid of `f`: an arrow `(a, b)` goes from `b` to `a`.
    pub fn kernel_pair_groupoid(name: impl Into<String>, f: &FinMap) -> Self {
        let r = kernel_pair(f);
        let g = ReflexiveGraph::new(r.p0.clone(), r.p1.clone(), r.s0.clone()).unwrap();
        let x2 = g.x2();
        let m = FinMap::new(&x2, &r.obj, |p| {
            let (ab, ca) = (p.proj(0).unwrap(), p.proj(1).unwrap());
            Atom::pair(ca.proj(0).unwrap().clone(), ab.proj(1).unwrap().clone())
        })
        .unwrap();
        Self::on_graph(name, &g, m).unwrap()
    }

    /// Total size `|X0| + |X1|`.
    pub fn size(&self) -> usize {
        self.x0.len() + self.x1.len()
    }
}
