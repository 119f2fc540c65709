use super::monad::{Monad, Mor, Obj};
use crate::catkit::{Ambient, InternalCategory, InternalFunctor, ReflexiveGraph};
use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::setcat::{Atom, FinMap};

/// An algebra `ξ: T(X) → X`.
pub struct Algebra<M: Monad + ?Sized> {
    pub carrier: Obj<M>,
    pub xi: Mor<M>,
}

impl<M: Monad + ?Sized> Clone for Algebra<M> {
    fn clone(&self) -> Self {
        Algebra { carrier: self.carrier.clone(), xi: self.xi.clone() }
    }
}

impl<M: Monad + ?Sized> std::fmt::Debug for Algebra<M> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra").field("carrier", &self.carrier).field("xi", &self.xi).finish()
    }
}

impl<M: Monad + ?Sized> PartialEq for Algebra<M> {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier && self.xi == other.xi
    }
}

impl<M: Monad> Algebra<M> {
    pub fn new(m: &M, carrier: Obj<M>, xi: Mor<M>) -> Result<Self> {
        let a = m.ambient();
        if a.dom(&xi) != m.obj(&carrier)? || a.cod(&xi) != carrier {
            return Err(Error::ty(format!("structure map must be T({carrier}) → {carrier}")));
        }
        Ok(Algebra { carrier, xi })
    }

    /// `(T(X), μ_X)`
    pub fn free(m: &M, x: &Obj<M>) -> Result<Self> {
        Algebra::new(m, m.obj(x)?, m.mult(x)?)
    }
}

pub fn validate_algebra<M: Monad>(m: &M, alg: &Algebra<M>) -> Result<Certificate> {
    let a = m.ambient();
    let x = &alg.carrier;
    let tx = m.obj(x)?;
    if a.dom(&alg.xi) != tx || a.cod(&alg.xi) != *x {
        return Err(Error::ty(format!("structure map must be T({x}) → {x}")));
    }
    let mut cert = Certificate::new(format!("{}-algebra on {x}", m.name()));
    cert.record("xi.lambda=1", a.difference(&a.compose(&alg.xi, &m.unit(x)?)?, &a.id(x)));
    let lhs = a.compose(&alg.xi, &m.mult(x)?)?;
    let rhs = a.compose(&alg.xi, &m.fmap(&alg.xi)?)?;
    cert.record("xi.mu=xi.T(xi)", a.difference(&lhs, &rhs));
    Ok(cert)
}

/// `h ∘ ξ_A = ξ_B ∘ T(h)`
pub fn is_algebra_hom<M: Monad>(m: &M, src: &Algebra<M>, tgt: &Algebra<M>, h: &Mor<M>) -> Result<bool> {
    let a = m.ambient();
    Ok(a.compose(h, &src.xi)? == a.compose(&tgt.xi, &m.fmap(h)?)?)
}

/// Every algebra structure on `x`, by exhaustive search over `T(x) → x`.
pub fn algebras_on<M: Monad>(m: &M, x: &Obj<M>) -> Result<Vec<Algebra<M>>> {
    let a = m.ambient();
    let mut out = Vec::new();
    for xi in a.hom(&m.obj(x)?, x) {
        let alg = Algebra { carrier: x.clone(), xi };
        if validate_algebra(m, &alg)?.passed() {
            out.push(alg);
        }
    }
    Ok(out)
}

/// Whether `(μ_X, T(ξ))` is a kernel pair of `ξ`.
pub fn kernel_of_structure<M: Monad>(m: &M, alg: &Algebra<M>) -> Result<bool> {
    let a = m.ambient();
    Ok(a.is_kernel_pair(&m.mult(&alg.carrier)?, &m.fmap(&alg.xi)?, &alg.xi)?.is_pullback())
}

fn single<A: Ambient>(a: &A, f: &A::Mor) -> Result<FinMap> {
    let mut l = a.levels(f);
    if l.len() != 1 {
        return Err(Error::Precondition(format!("{} is not a one-level ambient", a.name())));
    }
    Ok(l.pop().unwrap())
}

/// The internal category with objects `T(X)`, arrows `T²(X)`, codomain
/// `T(ξ)`, domain `μ_X`, identities `T(λ_X)` and composition `T(μ_X)`, read
/// through the chosen comparison `T³(X) → X2`. Needs the `μ` naturality
/// square at `ξ` to be a pullback.
pub fn tbar<M: Monad>(m: &M, alg: &Algebra<M>) -> Result<(InternalCategory, Certificate)> {
    let a = m.ambient();
    let x = &alg.carrier;
    if !validate_algebra(m, alg)?.passed() {
        return Err(Error::Precondition("structure map is not an algebra".into()));
    }
    let tx = m.obj(x)?;
    let t_xi = m.fmap(&alg.xi)?;
    let tt_xi = m.fmap(&t_xi)?;
    let mu_x = m.mult(x)?;
    let mu_tx = m.mult(&tx)?;
    let mu_verdict = a.is_pullback_square(&tt_xi, &mu_tx, &mu_x, &t_xi)?;
    if let Some(w) = mu_verdict.witness() {
        return Err(Error::Precondition(format!("mu is not cartesian at the structure map: {w}")));
    }
    let d0 = single(a, &t_xi)?;
    let d1 = single(a, &mu_x)?;
    let s0 = single(a, &m.fmap(&m.unit(x)?)?)?;
    let g = ReflexiveGraph::new(d0, d1, s0)?;
    let x2 = g.x2();
    let (mu_l, tt_l, t_mu) = (single(a, &mu_tx)?, single(a, &tt_xi)?, single(a, &m.fmap(&mu_x)?)?);
    let comp = FinMap::try_new(&x2, &g.x1, |p| {
        let (f, h) = (p.proj(0)?, p.proj(1)?);
        let hits: Vec<&Atom> = mu_l
            .dom()
            .iter()
            .filter(|t| mu_l.get(t) == Some(f) && tt_l.get(t) == Some(h))
            .collect();
        match hits.as_slice() {
            [t] => t_mu.apply(t),
            _ => Err(Error::not_a("pullback", format!("({f}, {h}) has {} lifts", hits.len()))),
        }
    })?;
    let c = InternalCategory::on_graph(format!("Tbar({x})"), &g, comp)?;
    let mut cert = c.validate();
    let free_t = Algebra { carrier: tx.clone(), xi: mu_x.clone() };
    let free_tt = Algebra { carrier: m.obj(&tx)?, xi: mu_tx.clone() };
    cert.record("d0 is an algebra map", (!is_algebra_hom(m, &free_tt, &free_t, &t_xi)?).then(|| "T(xi)".into()));
    cert.record("d1 is an algebra map", (!is_algebra_hom(m, &free_tt, &free_t, &mu_x)?).then(|| "mu".into()));
    let t_lambda = m.fmap(&m.unit(x)?)?;
    cert.record("s0 is an algebra map", (!is_algebra_hom(m, &free_t, &free_tt, &t_lambda)?).then(|| "T(lambda)".into()));
    Ok((c, cert))
}

/// The functor `(T(φ), T²(φ))` between the categories of two algebras.
pub fn tbar_functor<M: Monad>(m: &M, src: &Algebra<M>, tgt: &Algebra<M>, phi: &Mor<M>) -> Result<InternalFunctor> {
    if !is_algebra_hom(m, src, tgt, phi)? {
        return Err(Error::not_a("algebra morphism", "h.xi differs from zeta.T(h)"));
    }
    let a = m.ambient();
    let (cs, _) = tbar(m, src)?;
    let (ct, _) = tbar(m, tgt)?;
    let tphi = m.fmap(phi)?;
    let f0 = single(a, &tphi)?;
    let f1 = single(a, &m.fmap(&tphi)?)?;
    InternalFunctor::new(&cs, &ct, f0, f1)
}
