use super::core::{is_discrete_tfibration, validate_tfunctor, TCategory, TFunctor, TGraph};
use crate::catkit::{Ambient, FinSetCat, SliceCat, SliceMor, SliceObj};
use crate::error::{Error, Result};
use crate::monadkit::{validate_algebra, Algebra, Monad};
use crate::setcat::{pullback, Atom, FinMap, FinSetObj};

/// The monad on `FinSet/X0` induced by a T-category `C`:
/// `T_C(h) = {(x, w) : δ1 x = T(h) w}` over `d0.pr1`.
#[derive(Clone)]
pub struct TxtMonad<M: Monad<A = FinSetCat> + Clone> {
    pub tcat: TCategory<M>,
    slice: SliceCat,
}

impl<M: Monad<A = FinSetCat> + Clone> std::fmt::Debug for TxtMonad<M> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TxtMonad({})", self.tcat.name)
    }
}

impl<M: Monad<A = FinSetCat> + Clone> TxtMonad<M> {
    pub fn new(c: &TCategory<M>) -> Self {
        TxtMonad { tcat: c.clone(), slice: SliceCat::new(c.x0()) }
    }

    fn base(&self) -> &M {
        self.tcat.monad()
    }

    fn pr(&self, th: &SliceObj, i: usize, cod: &FinSetObj) -> Result<FinMap> {
        FinMap::try_new(&th.carrier, cod, |p| Ok(p.proj(i)?.clone()))
    }
}

impl<M: Monad<A = FinSetCat> + Clone> Monad for TxtMonad<M> {
    type A = SliceCat;

    fn ambient(&self) -> &SliceCat {
        &self.slice
    }

    fn name(&self) -> String {
        format!("T({})", self.tcat.name)
    }

    fn obj(&self, h: &SliceObj) -> Result<SliceObj> {
        let c = &self.tcat;
        let th = self.base().fmap(&h.over)?;
        let pb = pullback(c.delta1(), &th)?;
        let carrier = pb.obj.renamed(format!("T({})", h.carrier.name));
        Ok(SliceObj::new(c.d0().after(&pb.pf)?.with_dom_name(&carrier.name)))
    }

    fn fmap(&self, phi: &SliceMor) -> Result<SliceMor> {
        let (s, t) = (self.obj(&phi.dom)?, self.obj(&phi.cod)?);
        let tp = self.base().fmap(&phi.map)?;
        let map = FinMap::try_new(&s.carrier, &t.carrier, |p| Ok(Atom::pair(p.proj(0)?.clone(), tp.apply(p.proj(1)?)?)))?;
        SliceMor::new(&s, &t, map)
    }

    /// `z ↦ (s0 h z, λ z)`
    fn unit(&self, h: &SliceObj) -> Result<SliceMor> {
        let th = self.obj(h)?;
        let lam = self.base().unit(&h.carrier)?;
        let s0 = self.tcat.s0();
        let map = FinMap::try_new(&h.carrier, &th.carrier, |z| {
            Ok(Atom::pair(s0.apply(&h.over.apply(z)?)?, lam.apply(z)?))
        })?;
        SliceMor::new(h, &th, map)
    }

    /// `(x, W) ↦ (d1^1(x, T(pr1) W), μ T(pr2) W)`
    fn mult(&self, h: &SliceObj) -> Result<SliceMor> {
        let c = &self.tcat;
        let b = self.base();
        let th = self.obj(h)?;
        let tth = self.obj(&th)?;
        let tz = b.obj(&h.carrier)?;
        let t_pr1 = b.fmap(&self.pr(&th, 0, c.x1())?)?;
        let flat = b.bind(&h.carrier, &self.pr(&th, 1, &tz)?, &FinMap::id(&b.obj(&th.carrier)?))?;
        let map = FinMap::try_new(&tth.carrier, &th.carrier, |p| {
            let (x, w) = (p.proj(0)?, p.proj(1)?);
            Ok(Atom::pair(c.d1_1.apply(&Atom::pair(x.clone(), t_pr1.apply(w)?))?, flat.apply(w)?))
        })?;
        SliceMor::new(&tth, &th, map)
    }

    fn probes(&self, size: usize) -> Vec<SliceObj> {
        let mut out = self.slice.probes(size);
        out.push(self.slice.terminal());
        out
    }
}

/// The discrete fibration of an algebra: arrows `(x, w)` with input `w` and
/// output `ξ(x, w)`, sent to `x`.
pub fn txt_algebra_to_tfunctor<M: Monad<A = FinSetCat> + Clone>(
    t: &TxtMonad<M>,
    alg: &Algebra<TxtMonad<M>>,
) -> Result<TFunctor<M>> {
    if let Some(c) = validate_algebra(t, alg)?.first_failure() {
        return Err(Error::law(c.name.clone(), c.witness.clone().unwrap_or_default()));
    }
    let c = &t.tcat;
    let b = t.base();
    let h = &alg.carrier;
    let th = t.obj(h)?;
    let z = &h.carrier;
    let pr0 = t.pr(&th, 0, c.x1())?;
    let pr1 = t.pr(&th, 1, &b.obj(z)?)?;
    let g = TGraph::new(b.clone(), alg.xi.map.clone(), pr1, t.unit(h)?.map)?;
    let (x2, _, _) = g.x2()?;
    let mu = t.mult(h)?.map;
    let d1_1 = FinMap::try_new(&x2, &th.carrier, |p| {
        let (tt, w) = (p.proj(0)?, p.proj(1)?);
        mu.apply(&Atom::pair(tt.proj(0)?.clone(), w.clone()))
    })?;
    let d = TCategory::new(format!("elements of {}", z.name), g, d1_1)?;
    TFunctor::new(&d, c, h.over.clone(), pr0)
}

/// Reads the algebra off a discrete T-fibration: `ξ(x, w)` is the output of
/// the unique arrow over `x` with input `w`.
pub fn tfunctor_to_txt_algebra<M: Monad<A = FinSetCat> + Clone>(
    t: &TxtMonad<M>,
    f: &TFunctor<M>,
) -> Result<Algebra<TxtMonad<M>>> {
    if f.target != t.tcat {
        return Err(Error::ty("T-functor does not land in the monad's T-category"));
    }
    if let Some(c) = validate_tfunctor(f).first_failure() {
        return Err(Error::not_a("T-functor", format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())));
    }
    if !is_discrete_tfibration(f)? {
        return Err(Error::not_a("discrete fibration", "some arrow has zero or several lifts"));
    }
    let s = &f.source;
    let h = SliceObj::new(f.f0.clone());
    let th = t.obj(&h)?;
    let xi = FinMap::try_new(&th.carrier, &h.carrier, |p| {
        let (x, w) = (p.proj(0)?, p.proj(1)?);
        let a = s
            .x1()
            .iter()
            .find(|a| f.f1.get(a) == Some(x) && s.delta1().get(a) == Some(w))
            .ok_or_else(|| Error::ty(format!("no lift of {x} at {w}")))?;
        s.d0().apply(a)
    })?;
    let xi = SliceMor::new(&th, &h, xi)?;
    Algebra::new(t, h, xi)
}

/// Every discrete T-fibration into `c` whose object set is `z` over `c`'s
/// objects via some map, found by enumerating subsets of the candidate
/// arrows `(x, w, z)` and certifying each through `build_tcategory`.
pub fn discrete_tfibrations_over<M: Monad<A = FinSetCat> + Clone>(
    c: &TCategory<M>,
    z: &FinSetObj,
    max_free: usize,
) -> Result<Vec<TFunctor<M>>> {
    let b = c.monad();
    let tz = b.obj(z)?;
    let lam = b.unit(z)?;
    let mut out = Vec::new();
    for f0 in FinMap::all(z, c.x0()) {
        let tf0 = b.fmap(&f0)?;
        let mut forced = Vec::new();
        let mut free = Vec::new();
        for x in c.x1().iter() {
            let dx = c.delta1().apply(x)?;
            for w in tz.iter().filter(|w| tf0.get(w) == Some(&dx)) {
                for o in z.iter().filter(|o| f0.get(o) == c.d0().get(x)) {
                    let trip = Atom::Tup(vec![x.clone(), w.clone(), o.clone()]);
                    let is_id = z.iter().any(|y| {
                        c.s0().get(&f0.apply(y).unwrap()) == Some(x) && lam.get(y) == Some(w) && y == o
                    });
                    if is_id { forced.push(trip) } else { free.push(trip) }
                }
            }
        }
        if free.len() > max_free {
            return Err(Error::Input(format!("{} candidate arrows exceed the bound {max_free}", free.len())));
        }
        for mask in 0u64..(1u64 << free.len()) {
            let chosen = forced
                .iter()
                .cloned()
                .chain(free.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, t)| t.clone()));
            let d1 = FinSetObj::collect("D1", chosen);
            if let Some(f) = tfunctor_from_triples(c, z, &f0, &d1)? {
                if is_discrete_tfibration(&f)? {
                    out.push(f);
                }
            }
        }
    }
    Ok(out)
}

fn tfunctor_from_triples<M: Monad<A = FinSetCat> + Clone>(
    c: &TCategory<M>,
    z: &FinSetObj,
    f0: &FinMap,
    d1: &FinSetObj,
) -> Result<Option<TFunctor<M>>> {
    let b = c.monad();
    let tz = b.obj(z)?;
    let comp = |i: usize, cod: &FinSetObj| FinMap::try_new(d1, cod, |t| Ok(t.as_tup().unwrap()[i].clone()));
    let (f1, delta1, d0) = (comp(0, c.x1())?, comp(1, &tz)?, comp(2, z)?);
    let lam = b.unit(z)?;
    let Ok(s0) = FinMap::try_new(z, d1, |y| {
        Ok(Atom::Tup(vec![c.s0().apply(&f0.apply(y)?)?, lam.apply(y)?, y.clone()]))
    }) else {
        return Ok(None);
    };
    let Ok(g) = TGraph::new(b.clone(), d0, delta1.clone(), s0) else { return Ok(None) };
    let (x2, d0_1, delta2) = g.x2()?;
    let t_f1 = b.fmap(&f1)?;
    let flat = b.bind(z, &delta1, &delta2)?;
    let Ok(d1_1) = FinMap::try_new(&x2, d1, |p| {
        let top = d0_1.apply(p)?;
        let x = c.d1_1.apply(&Atom::pair(f1.apply(&top)?, t_f1.apply(&delta2.apply(p)?)?))?;
        let want = Atom::Tup(vec![x, flat.apply(p)?, top.as_tup().unwrap()[2].clone()]);
        if d1.contains(&want) { Ok(want) } else { Err(Error::ty("composite missing")) }
    }) else {
        return Ok(None);
    };
    let Ok(d) = TCategory::new("D", g, d1_1) else { return Ok(None) };
    let f = TFunctor::new(&d, c, f0.clone(), f1)?;
    Ok(validate_tfunctor(&f).passed().then_some(f))
}
