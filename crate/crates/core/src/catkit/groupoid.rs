use super::internal::{InternalCategory, ReflexiveGraph};
use crate::error::{Error, Result};
use crate::setcat::{is_pullback_square, kernel_pair, kernel_triples, Atom, FinMap, SquareVerdict};

/// The square `(m, pr2)` over `(d0, d0)`; a pullback exactly when every arrow
/// is invertible.
pub fn groupoid_square(c: &InternalCategory) -> Result<SquareVerdict> {
    let x2 = c.x2();
    let pr1 = FinMap::new(&x2, &c.x1, |p| p.proj(1).unwrap().clone())?;
    is_pullback_square(&c.m, &pr1, &c.d0, &c.d0)
}

pub fn is_groupoid(c: &InternalCategory) -> bool {
    groupoid_square(c).map(|v| v.is_pullback()).unwrap_or(false)
}

/// The inversion `ι` of a groupoid.
pub fn invert(c: &InternalCategory) -> Result<FinMap> {
    if !is_groupoid(c) {
        return Err(Error::Precondition(format!("{} is not a groupoid", c.name)));
    }
    FinMap::try_new(&c.x1, &c.x1, |f| {
        let id = c.id_of(&c.dom_of(f));
        c.arrows(&c.cod_of(f), &c.dom_of(f))
            .into_iter()
            .find(|g| c.then(f, g).as_ref() == Some(&id))
            .ok_or_else(|| Error::not_a("invertible arrow", f.to_string()))
    })
}

/// Builds the groupoid presented by a reflexive graph and a map
/// `d2: R[d0] → X1`, `d2(α, β) = α⁻¹∘β` for arrows with a common codomain.
pub fn groupoid_from_presentation(name: &str, g: &ReflexiveGraph, d2: &FinMap) -> Result<InternalCategory> {
    let r = kernel_pair(&g.d0);
    if d2.dom() != &r.obj || d2.cod() != &g.x1 {
        return Err(Error::ty("d2 must be a map R[d0] → X1"));
    }
    check_presentation(g, d2)?;
    let x2 = g.x2();
    let m = FinMap::try_new(&x2, &g.x1, |p| {
        let (f, h) = (p.proj(0)?, p.proj(1)?);
        let inv_h = d2.apply(&Atom::pair(h.clone(), g.s0.apply(&g.d0.apply(h)?)?))?;
        d2.apply(&Atom::pair(inv_h, f.clone()))
    })?;
    let c = InternalCategory::on_graph(name, g, m)?;
    let cert = c.validate();
    if let Some(f) = cert.first_failure() {
        return Err(Error::law(f.name.clone(), f.witness.clone().unwrap_or_default()));
    }
    if !is_groupoid(&c) {
        return Err(Error::not_a("groupoid", "presentation does not produce inverses"));
    }
    Ok(c)
}

/// The equations a presentation must satisfy, each reported by name.
pub fn check_presentation(g: &ReflexiveGraph, d2: &FinMap) -> Result<()> {
    let r = kernel_pair(&g.d0);
    let lhs = g.d0.after(d2)?;
    let rhs = g.d1.after(&r.p0)?;
    if let Some(w) = lhs.first_difference(&rhs) {
        return Err(Error::law("d0.d2=d1.p0", w));
    }
    if let Some(w) = g.d1.after(d2)?.first_difference(&g.d1.after(&r.p1)?) {
        return Err(Error::law("d1.d2=d1.p1", w));
    }
    if let Some(w) = d2.after(&r.s0)?.first_difference(&g.s0.after(&g.d1)?) {
        return Err(Error::law("d2.s0=s0.d1", w));
    }
    for f in g.x1.iter() {
        let p = Atom::pair(g.s0.apply(&g.d0.apply(f)?)?, f.clone());
        if &d2.apply(&p)? != f {
            return Err(Error::law("d2.(s0.d0,1)=1", f.to_string()));
        }
    }
    let t = kernel_triples(&g.d0);
    for trip in t.obj.iter() {
        let v = trip.as_tup().unwrap();
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        let ab = d2.apply(&Atom::pair(a.clone(), b.clone()))?;
        let ac = d2.apply(&Atom::pair(a.clone(), c.clone()))?;
        let Some(lhs) = d2.get(&Atom::pair(ab.clone(), ac.clone())) else {
            return Err(Error::law("d2.R(d2)=d2.p2", format!("({ab}, {ac}) leaves R[d0] at {trip}")));
        };
        let rhs = d2.apply(&Atom::pair(b.clone(), c.clone()))?;
        if lhs != &rhs {
            return Err(Error::law("d2.R(d2)=d2.p2", format!("{trip}: {lhs} vs {rhs}")));
        }
    }
    Ok(())
}

/// The presentation map of a groupoid: `d2(α, β) = α⁻¹∘β`.
pub fn presentation_of(c: &InternalCategory) -> Result<FinMap> {
    let inv = invert(c)?;
    let r = kernel_pair(&c.d0);
    FinMap::try_new(&r.obj, &c.x1, |p| {
        let (a, b) = (p.proj(0)?, p.proj(1)?);
        c.then(b, &inv.apply(a)?).ok_or_else(|| Error::ty("not composable"))
    })
}
