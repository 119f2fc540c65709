use super::core::{TCategory, TGraph};
use crate::catkit::{check_simplicial, Ambient, Simplicial};
use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::kleisli::{embed_e, Kl, KlCalculus, KleisliMor};
use crate::monadkit::{Monad, Mor, Obj};

fn kleisli<M: Monad>(src: &Obj<M>, tgt: &Obj<M>, support: &Mor<M>) -> KleisliMor<M> {
    KleisliMor { src: src.clone(), tgt: tgt.clone(), support: support.clone() }
}

/// The internal category in `Kl(T)`: the `d0`-family and all degeneracies are
/// embedded from `E`, the last face at each level is the Kleisli map `δ`.
pub fn tcat_to_kl<M: Monad + Clone>(c: &TCategory<M>) -> Result<Simplicial<Kl<M>>> {
    let m = c.monad();
    let e = |f: &Mor<M>| embed_e(m, f);
    let (x0, x1, x2, x3) = (c.x0(), c.x1(), &c.x2, &c.x3);
    Ok(Simplicial {
        objs: vec![x0.clone(), x1.clone(), x2.clone(), x3.clone()],
        faces: vec![
            vec![],
            vec![e(c.d0())?, kleisli(x1, x0, c.delta1())],
            vec![e(&c.d0_1)?, e(&c.d1_1)?, kleisli(x2, x1, &c.delta2)],
            vec![e(&c.d0_2)?, e(&c.d1_2)?, e(&c.d2_2)?, kleisli(x3, x2, &c.delta3)],
        ],
        degens: vec![vec![e(c.s0())?], vec![e(&c.s0_1)?, e(&c.s1_1)?], vec![e(&c.s0_2)?, e(&c.s1_2)?, e(&c.s2_2)?]],
    })
}

/// Every simplicial identity of the image, checked in `Kl(T)`.
pub fn validate_kl_category<M: Monad + Clone>(kl: &Kl<M>, s: &Simplicial<Kl<M>>) -> Certificate {
    check_simplicial(kl, s)
}

fn not_presentation(why: impl Into<String>) -> Error {
    Error::not_a("a T-category presentation", why)
}

fn from_e<M: Monad + Clone>(calc: &KlCalculus<M>, k: &KleisliMor<M>, what: &str) -> Result<Mor<M>> {
    calc.in_e(k)?.ok_or_else(|| not_presentation(format!("{what} is not in E")))
}

/// Recovers the T-category from an internal category in `Kl(T)` whose
/// `d0`-family and degeneracies lie in `E`.
pub fn tcat_from_kl<M: Monad + Clone>(
    calc: &KlCalculus<M>,
    name: impl Into<String>,
    s: &Simplicial<Kl<M>>,
) -> Result<TCategory<M>> {
    if s.objs.len() < 3 || s.faces.len() < 3 || s.faces[1].len() < 2 || s.faces[2].len() < 3 || s.degens.is_empty() {
        return Err(not_presentation("levels 0 to 2 are required"));
    }
    let m = calc.monad();
    let d0 = from_e(calc, &s.faces[1][0], "the d0-leg")?;
    let s0 = from_e(calc, &s.degens[0][0], "s0")?;
    let delta1 = s.faces[1][1].support.clone();
    let g = TGraph::new(m.clone(), d0, delta1, s0).map_err(|e| not_presentation(e.to_string()))?;
    let (x2, d0_1, delta2) = g.x2()?;
    if s.objs[2] != x2 {
        return Err(not_presentation("X2 is not the pullback of delta1 and T(d0)"));
    }
    if from_e(calc, &s.faces[2][0], "the d0^1-leg")? != d0_1 || s.faces[2][2].support != delta2 {
        return Err(not_presentation("level-2 faces are not the pullback projections"));
    }
    let d1_1 = from_e(calc, &s.faces[2][1], "d1^1")?;
    let c = TCategory::new(name, g, d1_1).map_err(|e| not_presentation(e.to_string()))?;
    let canon = tcat_to_kl(&c)?;
    let a = calc.kl.clone();
    for n in 1..s.objs.len().min(4) {
        for (i, d) in s.faces[n].iter().enumerate() {
            if let Some(w) = canon.faces[n].get(i).and_then(|c| a.difference(c, d)) {
                return Err(not_presentation(format!("face d{i} on X{n} differs from the derived one: {w}")));
            }
        }
    }
    Ok(c)
}
