use super::algebra::{validate_algebra, Algebra};
use super::g::GMonad;
use super::monad::Monad;
use crate::catkit::{
    groupoid_from_presentation, is_groupoid, presentation_of, pt_is_cartesian, pt_square, InternalCategory, PtMorphism,
    Ambient, PtCat, PtObject, ReflexiveGraph,
};
use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::setcat::{is_kernel_pair, Atom, FinMap};
use std::collections::HashMap;

/// The groupoid whose reflexive graph is `(g, y, t)` and whose division
/// `d2(α, β) = α⁻¹∘β` is the upper level of the structure map.
pub fn g_algebra_to_groupoid(alg: &Algebra<GMonad>) -> Result<InternalCategory> {
    let cert = validate_algebra(&GMonad, alg)?;
    if let Some(f) = cert.first_failure() {
        return Err(Error::law(f.name.clone(), f.witness.clone().unwrap_or_default()));
    }
    if !pt_is_cartesian(&alg.xi) {
        let w = pt_square(&alg.xi)?.witness().unwrap_or_default();
        return Err(Error::Precondition(format!("contradiction: structure map is not cartesian ({w})")));
    }
    let o = &alg.carrier;
    let graph = ReflexiveGraph::new(o.g.clone(), alg.xi.y.clone(), o.t.clone())?;
    groupoid_from_presentation("groupoid of a G-algebra", &graph, &alg.xi.x)
}

/// The structure map `G(d0, s0) → (d0, s0)` of a groupoid.
pub fn groupoid_to_g_algebra(c: &InternalCategory) -> Result<Algebra<GMonad>> {
    if !is_groupoid(c) {
        return Err(Error::not_a("groupoid", c.name.clone()));
    }
    let o = PtObject::new(c.d0.clone(), c.s0.clone())?;
    let go = GMonad.obj(&o)?;
    let xi = PtMorphism::new(&go, &o, c.d1.clone(), presentation_of(c)?)?;
    Algebra::new(&GMonad, o, xi)
}

/// G-algebra structures on `(d0, s0)` of a reflexive graph whose lower map
/// is `d1`.
pub fn g_algebras_on_graph(g: &ReflexiveGraph) -> Result<Vec<Algebra<GMonad>>> {
    let o = PtObject::new(g.d0.clone(), g.s0.clone())?;
    let go = GMonad.obj(&o)?;
    let r = go.upper().clone();
    // x(α, β) must have codomain d1 α, and x(α, α) = s0 d1 α.
    let mut choices: Vec<Vec<Atom>> = Vec::new();
    for p in r.iter() {
        let (al, be) = (p.proj(0)?, p.proj(1)?);
        let target = g.d1.apply(al)?;
        if al == be {
            choices.push(vec![g.s0.apply(&target)?]);
        } else {
            choices.push(g.x1.iter().filter(|f| g.d0.get(f) == Some(&target)).cloned().collect());
        }
    }
    let pairs: Vec<(Atom, Atom)> = r.iter().map(|p| Ok((p.proj(0)?.clone(), p.proj(1)?.clone()))).collect::<Result<_>>()?;
    let index: HashMap<(Atom, Atom), usize> = pairs.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    // Triples (a, b, c) in one fibre of d0, for the upper-level law
    // x(x(a, b), x(a, c)) = x(b, c), used to prune the search.
    let mut triples = Vec::new();
    for (a, b) in &pairs {
        for (a2, c) in &pairs {
            if a == a2 {
                triples.push((index[&(a.clone(), b.clone())], index[&(a.clone(), c.clone())], index[&(b.clone(), c.clone())]));
            }
        }
    }
    let mut out = Vec::new();
    let mut val: Vec<Option<Atom>> = vec![None; pairs.len()];
    let consistent = |val: &[Option<Atom>]| {
        triples.iter().all(|&(ab, ac, bc)| match (&val[ab], &val[ac]) {
            (Some(u), Some(v)) => match index.get(&(u.clone(), v.clone())) {
                None => false,
                Some(&uv) => match (&val[uv], &val[bc]) {
                    (Some(l), Some(r)) => l == r,
                    _ => true,
                },
            },
            _ => true,
        })
    };
    fn search(
        k: usize,
        val: &mut Vec<Option<Atom>>,
        choices: &[Vec<Atom>],
        consistent: &dyn Fn(&[Option<Atom>]) -> bool,
        found: &mut dyn FnMut(&[Option<Atom>]) -> Result<()>,
    ) -> Result<()> {
        if k == choices.len() {
            return found(val);
        }
        for c in &choices[k] {
            val[k] = Some(c.clone());
            if consistent(val) {
                search(k + 1, val, choices, consistent, found)?;
            }
        }
        val[k] = None;
        Ok(())
    }
    let mut found = |val: &[Option<Atom>]| -> Result<()> {
        let x = FinMap::from_pairs(&r, &g.x1, r.iter().cloned().zip(val.iter().flatten().cloned()))?;
        if let Ok(xi) = PtMorphism::new(&go, &o, g.d1.clone(), x) {
            let alg = Algebra { carrier: o.clone(), xi };
            if validate_algebra(&GMonad, &alg)?.passed() {
                out.push(alg);
            }
        }
        Ok(())
    };
    if !choices.iter().any(Vec::is_empty) {
        search(0, &mut val, &choices, &consistent, &mut found)?;
    }
    Ok(out)
}

/// Experimental: the parallel pair `(π_G, G(π))` is the kernel pair of `π`
/// at `(g, t)`, and `π` is levelwise surjective, hence the levelwise quotient
/// of that pair.
pub fn rich_check(o: &PtObject) -> Result<Certificate> {
    let m = GMonad;
    let go = m.obj(o)?;
    let pi = m.mult(o)?;
    let pi_g = m.mult(&go)?;
    let g_pi = m.fmap(&pi)?;
    let mut cert = Certificate::new(format!("experimental kernel-quotient check at {o}"));
    let levels = (PtCat.levels(&pi_g), PtCat.levels(&g_pi), PtCat.levels(&pi));
    for (i, ((a, b), f)) in levels.0.into_iter().zip(levels.1).zip(levels.2).enumerate() {
        let v = is_kernel_pair(&a, &b, &f)?;
        cert.record(format!("kernel pair [level {i}]"), v.witness());
        cert.record(
            format!("quotient [level {i}]"),
            (!f.is_surjective()).then(|| format!("{} is not onto", f.cod().name)),
        );
    }
    Ok(cert)
}
