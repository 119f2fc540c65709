use crate::catkit::Ambient;
use crate::cert::Certificate;
use crate::error::{Error, Result};

pub type Obj<M> = <<M as Monad>::A as Ambient>::Obj;
pub type Mor<M> = <<M as Monad>::A as Ambient>::Mor;

/// A monad `(T, λ, μ)` on an ambient category, given by its actions.
pub trait Monad {
    type A: Ambient;

    fn ambient(&self) -> &Self::A;
    fn name(&self) -> String;
    fn obj(&self, x: &Obj<Self>) -> Result<Obj<Self>>;
    fn fmap(&self, f: &Mor<Self>) -> Result<Mor<Self>>;
    /// `λ_X: X → T(X)`
    fn unit(&self, x: &Obj<Self>) -> Result<Mor<Self>>;
    /// `μ_X: T²(X) → T(X)`
    fn mult(&self, x: &Obj<Self>) -> Result<Mor<Self>>;

    /// Kleisli extension `μ_Z ∘ T(β) ∘ α` for `α: X → T(Y)`, `β: Y → T(Z)`.
    fn bind(&self, z: &Obj<Self>, beta: &Mor<Self>, alpha: &Mor<Self>) -> Result<Mor<Self>> {
        let a = self.ambient();
        let tb = self.fmap(beta)?;
        a.compose(&self.mult(z)?, &a.compose(&tb, alpha)?)
    }

    /// Objects on which laws are checked.
    fn probes(&self, size: usize) -> Vec<Obj<Self>> {
        self.ambient().probes(size)
    }
}

/// Every morphism between probe objects of size at most `size`.
pub fn probe_morphisms<M: Monad>(m: &M, size: usize) -> Vec<Mor<M>> {
    let a = m.ambient();
    let objs = m.probes(size);
    let mut out = Vec::new();
    for x in &objs {
        for y in &objs {
            out.extend(a.hom(x, y));
        }
    }
    out
}

fn typed<M: Monad>(m: &M, f: &Mor<M>, dom: &Obj<M>, cod: &Obj<M>, what: &str) -> Result<()> {
    let a = m.ambient();
    if a.dom(f) != *dom || a.cod(f) != *cod {
        return Err(Error::ty(format!("{what} of {} has the wrong type", m.name())));
    }
    Ok(())
}

fn equal<M: Monad>(m: &M, f: &Mor<M>, g: &Mor<M>, at: impl std::fmt::Display) -> Option<String> {
    m.ambient().difference(f, g).map(|w| format!("at {at}: {w}"))
}

/// Unit, associativity and naturality laws over the probe objects and every
/// morphism between them.
pub fn validate_monad<M: Monad>(m: &M, size: usize) -> Result<Certificate> {
    let a = m.ambient();
    let objs = m.probes(size);
    let mut left = None;
    let mut right = None;
    let mut assoc = None;
    for x in &objs {
        let tx = m.obj(x)?;
        let ttx = m.obj(&tx)?;
        let l = m.unit(x)?;
        let mu = m.mult(x)?;
        typed(m, &l, x, &tx, "unit")?;
        typed(m, &mu, &ttx, &tx, "multiplication")?;
        let one = a.id(&tx);
        if left.is_none() {
            left = equal(m, &a.compose(&mu, &m.unit(&tx)?)?, &one, x);
        }
        if right.is_none() {
            right = equal(m, &a.compose(&mu, &m.fmap(&l)?)?, &one, x);
        }
        if assoc.is_none() {
            let lhs = a.compose(&mu, &m.mult(&tx)?)?;
            let rhs = a.compose(&mu, &m.fmap(&mu)?)?;
            assoc = equal(m, &lhs, &rhs, x);
        }
    }
    let mut fid = None;
    let mut lnat = None;
    let mut mnat = None;
    let mut count = 0;
    for f in probe_morphisms(m, size) {
        count += 1;
        let (x, y) = (a.dom(&f), a.cod(&f));
        let tf = m.fmap(&f)?;
        typed(m, &tf, &m.obj(&x)?, &m.obj(&y)?, "functor action")?;
        if fid.is_none() && x == y && f == a.id(&x) {
            fid = equal(m, &tf, &a.id(&m.obj(&x)?), &x);
        }
        if lnat.is_none() {
            lnat = equal(m, &a.compose(&tf, &m.unit(&x)?)?, &a.compose(&m.unit(&y)?, &f)?, format!("{x} → {y}"));
        }
        if mnat.is_none() {
            let ttf = m.fmap(&tf)?;
            mnat = equal(m, &a.compose(&tf, &m.mult(&x)?)?, &a.compose(&m.mult(&y)?, &ttf)?, format!("{x} → {y}"));
        }
    }
    let mut cert =
        Certificate::new(format!("monad {} on {} ({} objects, {count} morphisms)", m.name(), a.name(), objs.len()));
    cert.record("mu.lambda_T=1", left);
    cert.record("mu.T(lambda)=1", right);
    cert.record("mu.mu_T=mu.T(mu)", assoc);
    cert.record("T(1)=1", fid);
    cert.record("lambda natural", lnat);
    cert.record("mu natural", mnat);
    Ok(cert)
}
