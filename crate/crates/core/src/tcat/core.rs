use crate::catkit::Ambient;
use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::monadkit::{Monad, Mor, Obj};

/// A pointed T-graph: `d0: X1 → X0` is the codomain leg, `δ1: X1 → T(X0)`
/// the generalized domain leg, `s0: X0 → X1` the identities.
pub struct TGraph<M: Monad> {
    pub monad: M,
    pub x0: Obj<M>,
    pub x1: Obj<M>,
    pub d0: Mor<M>,
    pub delta1: Mor<M>,
    pub s0: Mor<M>,
}

impl<M: Monad + Clone> Clone for TGraph<M> {
    fn clone(&self) -> Self {
        TGraph {
            monad: self.monad.clone(),
            x0: self.x0.clone(),
            x1: self.x1.clone(),
            d0: self.d0.clone(),
            delta1: self.delta1.clone(),
            s0: self.s0.clone(),
        }
    }
}

impl<M: Monad> PartialEq for TGraph<M> {
    fn eq(&self, o: &Self) -> bool {
        self.x0 == o.x0 && self.x1 == o.x1 && self.d0 == o.d0 && self.delta1 == o.delta1 && self.s0 == o.s0
    }
}

impl<M: Monad> std::fmt::Debug for TGraph<M> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TGraph")
            .field("monad", &self.monad.name())
            .field("x0", &self.x0)
            .field("x1", &self.x1)
            .field("d0", &self.d0)
            .field("delta1", &self.delta1)
            .field("s0", &self.s0)
            .finish()
    }
}

pub const AX1_D0: &str = "Axioms 1: d0.s0=1";
pub const AX1_DELTA: &str = "Axioms 1: delta1.s0=lambda";

impl<M: Monad> TGraph<M> {
    /// Checks the typing and Axioms 1.
    pub fn new(monad: M, d0: Mor<M>, delta1: Mor<M>, s0: Mor<M>) -> Result<Self> {
        let a = monad.ambient();
        let (x1, x0) = (a.dom(&d0), a.cod(&d0));
        if a.dom(&delta1) != x1 || a.cod(&delta1) != monad.obj(&x0)? {
            return Err(Error::ty(format!("delta1 must be {x1} → T({x0})")));
        }
        if a.dom(&s0) != x0 || a.cod(&s0) != x1 {
            return Err(Error::ty(format!("s0 must be {x0} → {x1}")));
        }
        let g = TGraph { x0, x1, d0, delta1, s0, monad };
        if let Some(c) = g.axioms1()?.first_failure() {
            return Err(Error::law(c.name.clone(), c.witness.clone().unwrap_or_default()));
        }
        Ok(g)
    }

    pub fn axioms1(&self) -> Result<Certificate> {
        let a = self.monad.ambient();
        let mut cert = Certificate::new("pointed T-graph");
        cert.record(AX1_D0, a.difference(&a.compose(&self.d0, &self.s0)?, &a.id(&self.x0)));
        cert.record(AX1_DELTA, a.difference(&a.compose(&self.delta1, &self.s0)?, &self.monad.unit(&self.x0)?));
        Ok(cert)
    }

    /// The canonical `X2` with `d0^1` and `δ2`: an element `(x, w)` is
    /// `w` followed by `x`.
    pub fn x2(&self) -> Result<(Obj<M>, Mor<M>, Mor<M>)> {
        self.monad.ambient().pullback(&self.delta1, &self.monad.fmap(&self.d0)?)
    }
}

/// A T-category with every derived map of its truncated Kleisli simplicial
/// object.
pub struct TCategory<M: Monad> {
    pub name: String,
    pub graph: TGraph<M>,
    pub x2: Obj<M>,
    pub d0_1: Mor<M>,
    pub delta2: Mor<M>,
    pub d1_1: Mor<M>,
    pub s0_1: Mor<M>,
    pub s1_1: Mor<M>,
    pub x3: Obj<M>,
    pub d0_2: Mor<M>,
    pub d1_2: Mor<M>,
    pub d2_2: Mor<M>,
    pub delta3: Mor<M>,
    pub s0_2: Mor<M>,
    pub s1_2: Mor<M>,
    pub s2_2: Mor<M>,
}

impl<M: Monad + Clone> Clone for TCategory<M> {
    fn clone(&self) -> Self {
        TCategory {
            name: self.name.clone(),
            graph: self.graph.clone(),
            x2: self.x2.clone(),
            d0_1: self.d0_1.clone(),
            delta2: self.delta2.clone(),
            d1_1: self.d1_1.clone(),
            s0_1: self.s0_1.clone(),
            s1_1: self.s1_1.clone(),
            x3: self.x3.clone(),
            d0_2: self.d0_2.clone(),
            d1_2: self.d1_2.clone(),
            d2_2: self.d2_2.clone(),
            delta3: self.delta3.clone(),
            s0_2: self.s0_2.clone(),
            s1_2: self.s1_2.clone(),
            s2_2: self.s2_2.clone(),
        }
    }
}

/// Everything is derived from the graph and `d1^1`, so those are compared.
impl<M: Monad> PartialEq for TCategory<M> {
    fn eq(&self, o: &Self) -> bool {
        self.graph == o.graph && self.x2 == o.x2 && self.d1_1 == o.d1_1
    }
}

impl<M: Monad> std::fmt::Debug for TCategory<M> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TCategory")
            .field("name", &self.name)
            .field("graph", &self.graph)
            .field("x2", &self.x2)
            .field("d1_1", &self.d1_1)
            .finish()
    }
}

impl<M: Monad> TCategory<M> {
    pub fn monad(&self) -> &M {
        &self.graph.monad
    }

    pub fn x0(&self) -> &Obj<M> {
        &self.graph.x0
    }

    pub fn x1(&self) -> &Obj<M> {
        &self.graph.x1
    }

    pub fn d0(&self) -> &Mor<M> {
        &self.graph.d0
    }

    pub fn delta1(&self) -> &Mor<M> {
        &self.graph.delta1
    }

    pub fn s0(&self) -> &Mor<M> {
        &self.graph.s0
    }

    /// Builds and certifies; fails with the first failing axiom.
    pub fn new(name: impl Into<String>, graph: TGraph<M>, d1_1: Mor<M>) -> Result<Self> {
        let b = build_tcategory(name, graph, d1_1)?;
        match b.tcat {
            Some(t) => Ok(t),
            None => {
                let c = b.cert.first_failure().expect("no category only when a check fails");
                Err(Error::law(c.name.clone(), c.witness.clone().unwrap_or_default()))
            }
        }
    }
}

/// Per-axiom verdicts, with the category when all of them pass.
pub struct TCatBuild<M: Monad> {
    pub cert: Certificate,
    pub tcat: Option<TCategory<M>>,
}

pub const OBS2: &str = "Observation 2: s0^1 = <1, T(s0).delta1>";
pub const OBS3_FIRST: &str = "Observation 3: delta1.s0.d0=T(d0).lambda_X1";
pub const OBS3_SECOND: &str = "Observation 3 (second derivation): delta1.d1^1.s0^1.s0.d0=T(d0).lambda_X1";
pub const OBS3_D0: &str = "Observation 3: d0^1.s1^1=s0.d0";
pub const OBS3_DELTA: &str = "Observation 3: delta2.s1^1=lambda_X1";
pub const AX4_D0: &str = "Axioms 4: d0.d1^1=d0.d0^1";
pub const AX4_DELTA: &str = "Axioms 4: delta1.d1^1=mu.T(delta1).delta2";
pub const AX7_S0: &str = "Axioms 7: d1^1.s0^1=1";
pub const AX7_S1: &str = "Axioms 7: d1^1.s1^1=1";
pub const OBS5: &str = "Observations 5: d1^2 = <d0^1.d0^2, T(d1^1).delta3>";
pub const OBS6: &str = "Observations 6: d2^2 = <d1^1.d0^2, mu.T(delta2).delta3>";
pub const LEVEL3_DEGEN: &str = "degeneracies s0^2, s1^2, s2^2 exist";
pub const AX8: &str = "Axiom 8: d1^1.d1^2=d1^1.d2^2";

fn eq_check<A: Ambient>(a: &A, l: Result<A::Mor>, r: Result<A::Mor>) -> Option<String> {
    match (l, r) {
        (Ok(l), Ok(r)) => a.difference(&l, &r),
        (Err(e), _) | (_, Err(e)) => Some(e.to_string()),
    }
}

/// Constructs `X2`, `X3` and every derived map from the graph and the
/// composition `d1^1`, certifying each axiom. Only ill-typed input is an
/// error; failing axioms are reported in the certificate.
pub fn build_tcategory<M: Monad>(name: impl Into<String>, g: TGraph<M>, d1_1: Mor<M>) -> Result<TCatBuild<M>> {
    let name = name.into();
    let m = &g.monad;
    let a = m.ambient();
    let mut cert = Certificate::new(format!("{}-category {name}", m.name()));
    let (x2, d0_1, delta2) = g.x2()?;
    if a.dom(&d1_1) != x2 || a.cod(&d1_1) != g.x1 {
        return Err(Error::ty(format!("d1^1 must be a map from the canonical X2 {x2} to {}", g.x1)));
    }
    cert.extend("", g.axioms1()?);
    let lam1 = m.unit(&g.x1)?;
    let t_d0 = m.fmap(&g.d0)?;

    let s0_1 = a.lift(&d0_1, &delta2, &a.id(&g.x1), &a.compose(&m.fmap(&g.s0)?, &g.delta1)?);
    cert.record(OBS2, s0_1.as_ref().err().map(|e| e.to_string()));

    let obs3 = a.compose(&t_d0, &lam1);
    cert.record(OBS3_FIRST, eq_check(a, a.compose(&a.compose(&g.delta1, &g.s0)?, &g.d0), obs3.clone()));
    let s0d0 = a.compose(&g.s0, &g.d0)?;
    let s1_1 = a.lift(&d0_1, &delta2, &s0d0, &lam1);
    let (s0_1, s1_1) = match (s0_1, s1_1) {
        (Ok(x), Ok(y)) => (x, y),
        (_, Err(e)) | (Err(e), _) => {
            cert.record(OBS3_D0, Some(e.to_string()));
            return Ok(TCatBuild { cert, tcat: None });
        }
    };
    cert.record(
        OBS3_SECOND,
        eq_check(a, a.compose(&g.delta1, &a.compose(&d1_1, &a.compose(&s0_1, &s0d0)?)?), obs3),
    );
    cert.record(OBS3_D0, eq_check(a, a.compose(&d0_1, &s1_1), Ok(s0d0)));
    cert.record(OBS3_DELTA, eq_check(a, a.compose(&delta2, &s1_1), Ok(lam1.clone())));

    let ax4a = cert.record(AX4_D0, eq_check(a, a.compose(&g.d0, &d1_1), a.compose(&g.d0, &d0_1)));
    let ax4b = cert.record(AX4_DELTA, eq_check(a, a.compose(&g.delta1, &d1_1), m.bind(&g.x0, &g.delta1, &delta2)));
    cert.record(AX7_S0, eq_check(a, a.compose(&d1_1, &s0_1), Ok(a.id(&g.x1))));
    cert.record(AX7_S1, eq_check(a, a.compose(&d1_1, &s1_1), Ok(a.id(&g.x1))));

    let (x3, d0_2, delta3) = a.pullback(&delta2, &m.fmap(&d0_1)?)?;
    if !(ax4a && ax4b) {
        cert.record(AX8, Some("not evaluated: Axioms 4 fail, so d1^2 and d2^2 do not exist".into()));
        return Ok(TCatBuild { cert, tcat: None });
    }
    let d1_2 = a.lift(&d0_1, &delta2, &a.compose(&d0_1, &d0_2)?, &a.compose(&m.fmap(&d1_1)?, &delta3)?);
    cert.record(OBS5, d1_2.as_ref().err().map(|e| e.to_string()));
    let d2_2 = a.lift(&d0_1, &delta2, &a.compose(&d1_1, &d0_2)?, &m.bind(&g.x1, &delta2, &delta3)?);
    cert.record(OBS6, d2_2.as_ref().err().map(|e| e.to_string()));
    let (Ok(d1_2), Ok(d2_2)) = (d1_2, d2_2) else {
        cert.record(AX8, Some("not evaluated: d1^2 or d2^2 missing".into()));
        return Ok(TCatBuild { cert, tcat: None });
    };
    cert.record(AX8, eq_check(a, a.compose(&d1_1, &d1_2), a.compose(&d1_1, &d2_2)));

    let degens = (|| -> Result<(Mor<M>, Mor<M>, Mor<M>)> {
        let s0 = a.lift(&d0_2, &delta3, &a.id(&x2), &a.compose(&m.fmap(&s0_1)?, &delta2)?)?;
        let s1 = a.lift(&d0_2, &delta3, &a.compose(&s0_1, &d0_1)?, &a.compose(&m.fmap(&s1_1)?, &delta2)?)?;
        let s2 = a.lift(&d0_2, &delta3, &a.compose(&s1_1, &d0_1)?, &m.unit(&x2)?)?;
        Ok((s0, s1, s2))
    })();
    cert.record(LEVEL3_DEGEN, degens.as_ref().err().map(|e| e.to_string()));
    let Ok((s0_2, s1_2, s2_2)) = degens else {
        return Ok(TCatBuild { cert, tcat: None });
    };
    let tcat = cert.passed().then(|| TCategory {
        name,
        graph: g,
        x2,
        d0_1,
        delta2,
        d1_1,
        s0_1,
        s1_1,
        x3,
        d0_2,
        d1_2,
        d2_2,
        delta3,
        s0_2,
        s1_2,
        s2_2,
    });
    Ok(TCatBuild { cert, tcat })
}

/// A morphism of T-categories.
pub struct TFunctor<M: Monad> {
    pub source: TCategory<M>,
    pub target: TCategory<M>,
    pub f0: Mor<M>,
    pub f1: Mor<M>,
}

impl<M: Monad + Clone> Clone for TFunctor<M> {
    fn clone(&self) -> Self {
        TFunctor { source: self.source.clone(), target: self.target.clone(), f0: self.f0.clone(), f1: self.f1.clone() }
    }
}

impl<M: Monad> std::fmt::Debug for TFunctor<M> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TFunctor {} → {} ({:?}, {:?})", self.source.name, self.target.name, self.f0, self.f1)
    }
}

impl<M: Monad> TFunctor<M> {
    pub fn new(source: &TCategory<M>, target: &TCategory<M>, f0: Mor<M>, f1: Mor<M>) -> Result<Self>
    where
        M: Clone,
    {
        let a = source.monad().ambient();
        if a.dom(&f0) != *source.x0() || a.cod(&f0) != *target.x0() {
            return Err(Error::ty("f0 has the wrong type"));
        }
        if a.dom(&f1) != *source.x1() || a.cod(&f1) != *target.x1() {
            return Err(Error::ty("f1 has the wrong type"));
        }
        Ok(TFunctor { source: source.clone(), target: target.clone(), f0, f1 })
    }

    /// `f2 = <f1.d0^1, T(f1).δ2>`
    pub fn f2(&self) -> Result<Mor<M>> {
        let m = self.source.monad();
        let a = m.ambient();
        let (s, t) = (&self.source, &self.target);
        a.lift(&t.d0_1, &t.delta2, &a.compose(&self.f1, &s.d0_1)?, &a.compose(&m.fmap(&self.f1)?, &s.delta2)?)
    }
}

pub fn validate_tfunctor<M: Monad>(f: &TFunctor<M>) -> Certificate {
    let (s, t) = (&f.source, &f.target);
    let m = s.monad();
    let a = m.ambient();
    let mut cert = Certificate::new(format!("T-functor {} → {}", s.name, t.name));
    cert.record("preserves d0", eq_check(a, a.compose(t.d0(), &f.f1), a.compose(&f.f0, s.d0())));
    cert.record(
        "preserves delta1",
        eq_check(a, a.compose(t.delta1(), &f.f1), m.fmap(&f.f0).and_then(|tf| a.compose(&tf, s.delta1()))),
    );
    cert.record("preserves s0", eq_check(a, a.compose(&f.f1, s.s0()), a.compose(t.s0(), &f.f0)));
    match f.f2() {
        Ok(f2) => {
            cert.record("preserves d1^1", eq_check(a, a.compose(&t.d1_1, &f2), a.compose(&f.f1, &s.d1_1)));
        }
        Err(e) => {
            cert.record("preserves d1^1", Some(format!("composable data not sent to composable data: {e}")));
        }
    }
    cert
}

/// The square `(f1, δ1, δ1, T(f0))` is a pullback: every arrow of the
/// target with a lifted input has exactly one lift.
pub fn is_discrete_tfibration<M: Monad>(f: &TFunctor<M>) -> Result<bool> {
    let m = f.source.monad();
    let v = m.ambient().is_pullback_square(&f.f1, f.source.delta1(), f.target.delta1(), &m.fmap(&f.f0)?)?;
    Ok(v.is_pullback())
}

/// Whether `(d0^1, d1^1)` is the kernel pair of `d0`, with `s0^1` as
/// diagonal.
pub fn is_t_groupoid<M: Monad>(c: &TCategory<M>) -> bool {
    let a = c.monad().ambient();
    a.is_pullback_square(&c.d1_1, &c.d0_1, c.d0(), c.d0()).map(|v| v.is_pullback()).unwrap_or(false)
}
