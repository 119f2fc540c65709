use super::core::{TCategory, TFunctor, TGraph};
use crate::catkit::{Ambient, FinSetCat, InternalCategory, InternalFunctor};
use crate::error::{Error, Result};
use crate::monadkit::{validate_algebra, Algebra, List, Monad};
use crate::setcat::{Atom, FinMap, FinSetObj};

/// The T-category of an algebra: `X1 = T(X)`, `d0 = ξ`, `δ1 = 1`, `s0 = λ`,
/// composition `μ_X`.
pub fn tc_embed_algebra<M: Monad + Clone>(m: &M, alg: &Algebra<M>) -> Result<TCategory<M>> {
    if let Some(c) = validate_algebra(m, alg)?.first_failure() {
        return Err(Error::law(c.name.clone(), c.witness.clone().unwrap_or_default()));
    }
    let a = m.ambient();
    let x = &alg.carrier;
    let tx = m.obj(x)?;
    let g = TGraph::new(m.clone(), alg.xi.clone(), a.id(&tx), m.unit(x)?)?;
    let (_, _, delta2) = g.x2()?;
    let d1_1 = a.compose(&m.mult(x)?, &delta2)?;
    TCategory::new(format!("TC({x})"), g, d1_1)
}

/// An internal category seen as a T-category: `δ1 = λ.d1` and
/// `d1^1(x, λ w) = m(w, x)`.
pub fn cat_embed<M: Monad<A = FinSetCat> + Clone>(m: &M, c: &InternalCategory) -> Result<TCategory<M>> {
    let delta1 = m.unit(&c.x0)?.after(&c.d1)?;
    let g = TGraph::new(m.clone(), c.d0.clone(), delta1, c.s0.clone())?;
    let (x2, d0_1, delta2) = g.x2()?;
    let w = FinSetCat
        .factor_through_mono(&m.unit(&c.x1)?, &delta2)
        .ok_or_else(|| Error::not_a("image of a category", "an input word is not a unit"))?;
    let d1_1 = FinMap::try_new(&x2, &c.x1, |p| c.m.apply(&Atom::pair(w.apply(p)?, d0_1.apply(p)?)))?;
    TCategory::new(c.name.clone(), g, d1_1)
}

/// The internal category of the arrows whose input is a unit.
pub fn r_coreflection<M: Monad<A = FinSetCat>>(c: &TCategory<M>) -> Result<InternalCategory> {
    let m = c.monad();
    let (x0, x1) = (c.x0(), c.x1());
    let lam0 = m.unit(x0)?;
    let lam1 = m.unit(x1)?;
    let bar: Vec<Atom> = x1
        .iter()
        .filter(|x| c.delta1().get(x).map(|w| lam0.images().contains(w)).unwrap_or(false))
        .cloned()
        .collect();
    let xb = FinSetObj::collect(format!("R({})", x1.name), bar);
    let inc = FinMap::inclusion(&xb, x1)?;
    let d0 = c.d0().after(&inc)?;
    let d1 = FinMap::try_new(&xb, x0, |x| {
        let w = c.delta1().apply(x)?;
        Ok(lam0.pairs().find(|(_, v)| **v == w).unwrap().0.clone())
    })?;
    let s0 = c.s0().with_cod(&xb)?;
    let pairs = crate::setcat::pullback(&d0, &d1)?.obj.renamed("X2");
    let comp = FinMap::try_new(&pairs, &xb, |p| {
        let (f, g) = (p.proj(0)?, p.proj(1)?);
        c.d1_1.apply(&Atom::pair(g.clone(), lam1.apply(f)?))
    })?;
    InternalCategory::new(format!("R({})", c.name), d0, d1, s0, comp)
}

/// The counit `Cat(R C) → C`, the identity on objects and the inclusion on
/// arrows.
pub fn r_counit<M: Monad<A = FinSetCat> + Clone>(c: &TCategory<M>) -> Result<TFunctor<M>> {
    let r = r_coreflection(c)?;
    let e = cat_embed(c.monad(), &r)?;
    TFunctor::new(&e, c, FinMap::id(c.x0()), FinMap::inclusion(&r.x1, c.x1())?)
}

/// Factors a T-functor out of an embedded category through the counit.
pub fn r_factor<M: Monad<A = FinSetCat> + Clone>(d: &InternalCategory, f: &TFunctor<M>) -> Result<InternalFunctor> {
    let r = r_coreflection(&f.target)?;
    let f1 = f.f1.with_cod(&r.x1).map_err(|_| Error::not_a("factorization", "an arrow leaves R(C)"))?;
    let g = InternalFunctor::new(d, &r, f.f0.clone(), f1)?;
    if let Some(c) = g.validate().first_failure() {
        return Err(Error::law(c.name.clone(), c.witness.clone().unwrap_or_default()));
    }
    Ok(g)
}

/// Levelwise pullback of two T-functors with a common target, with its
/// projections.
pub fn tcat_pullback<M: Monad + Clone>(
    f: &TFunctor<M>,
    g: &TFunctor<M>,
) -> Result<(TCategory<M>, TFunctor<M>, TFunctor<M>)> {
    if f.target != g.target {
        return Err(Error::ty("T-functors do not share a target"));
    }
    let (ca, cb) = (&f.source, &g.source);
    let m = ca.monad();
    let a = m.ambient();
    let (_, pa0, pb0) = a.pullback(&f.f0, &g.f0)?;
    let (_, pa1, pb1) = a.pullback(&f.f1, &g.f1)?;
    let d0 = a.lift(&pa0, &pb0, &a.compose(ca.d0(), &pa1)?, &a.compose(cb.d0(), &pb1)?)?;
    let delta1 = a.lift(
        &m.fmap(&pa0)?,
        &m.fmap(&pb0)?,
        &a.compose(ca.delta1(), &pa1)?,
        &a.compose(cb.delta1(), &pb1)?,
    )?;
    let s0 = a.lift(&pa1, &pb1, &a.compose(ca.s0(), &pa0)?, &a.compose(cb.s0(), &pb0)?)?;
    let graph = TGraph::new(m.clone(), d0, delta1, s0)?;
    let (_, d0_1, delta2) = graph.x2()?;
    let proj2 = |c: &TCategory<M>, p1: &crate::monadkit::Mor<M>| {
        a.lift(&c.d0_1, &c.delta2, &a.compose(p1, &d0_1)?, &a.compose(&m.fmap(p1)?, &delta2)?)
    };
    let (fa2, fb2) = (proj2(ca, &pa1)?, proj2(cb, &pb1)?);
    let d1_1 = a.lift(&pa1, &pb1, &a.compose(&ca.d1_1, &fa2)?, &a.compose(&cb.d1_1, &fb2)?)?;
    let p = TCategory::new(format!("{}×{}", ca.name, cb.name), graph, d1_1)?;
    let qa = TFunctor::new(&p, ca, pa0, pa1)?;
    let qb = TFunctor::new(&p, cb, pb0, pb1)?;
    Ok((p, qa, qb))
}

/// The shifted T-category, with whether the would-be counit's object leg
/// `δ1` lies in `E`.
pub struct DecTcat<M: Monad> {
    pub tcat: TCategory<M>,
    pub counit_leg_in_e: bool,
}

/// Objects `X1`, arrows `X2` from `d1^1` to `d0^1`; composition through the
/// unique element of `X3` with prescribed `d0^2` and `d2^2`.
pub fn dec_tcat<M: Monad + Clone>(c: &TCategory<M>) -> Result<DecTcat<M>> {
    let m = c.monad();
    let a = m.ambient();
    let delta1 = a.compose(&m.unit(c.x1())?, &c.d1_1)?;
    let g = TGraph::new(m.clone(), c.d0_1.clone(), delta1, c.s0_1.clone())?;
    let (_, d0_1, delta2) = g.x2()?;
    let b = a
        .factor_through_mono(&m.unit(&c.x2)?, &delta2)
        .ok_or_else(|| Error::not_a("shifted composable data", "an input word is not a unit"))?;
    let t = a.lift(&c.d0_2, &c.d2_2, &d0_1, &b)?;
    let d1_1 = a.compose(&c.d1_2, &t)?;
    let tcat = TCategory::new(format!("Dec {}", c.name), g, d1_1)?;
    let counit_leg_in_e = a.factor_through_mono(&m.unit(c.x0())?, c.delta1()).is_some();
    Ok(DecTcat { tcat, counit_leg_in_e })
}

/// A multicategory is a T-category for the list monad; the arity of an
/// arrow is the length of its input word.
pub type Multicategory = TCategory<List>;

pub fn arity(c: &Multicategory, x: &Atom) -> Result<usize> {
    c.delta1().apply(x)?.as_word().map(|w| w.len()).ok_or_else(|| Error::ty("input is not a word"))
}

pub fn is_operad(c: &Multicategory) -> bool {
    c.x0().len() == 1
}
