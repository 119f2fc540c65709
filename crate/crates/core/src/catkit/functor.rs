use super::internal::InternalCategory;
use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::setcat::{is_pullback_square, Atom, FinMap, SquareVerdict};

/// An internal functor, stored by its object and arrow maps; the action on
/// composable pairs is derived.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InternalFunctor {
    pub source: InternalCategory,
    pub target: InternalCategory,
    pub f0: FinMap,
    pub f1: FinMap,
}

impl InternalFunctor {
    pub fn new(source: &InternalCategory, target: &InternalCategory, f0: FinMap, f1: FinMap) -> Result<Self> {
        if f0.dom() != &source.x0 || f0.cod() != &target.x0 || f1.dom() != &source.x1 || f1.cod() != &target.x1 {
            return Err(Error::ty("functor components have the wrong type"));
        }
        Ok(InternalFunctor { source: source.clone(), target: target.clone(), f0, f1 })
    }

    pub fn identity(c: &InternalCategory) -> Self {
        InternalFunctor { source: c.clone(), target: c.clone(), f0: FinMap::id(&c.x0), f1: FinMap::id(&c.x1) }
    }

    /// Induced action on composable pairs.
    pub fn f2(&self) -> Result<FinMap> {
        FinMap::try_new(&self.source.x2(), &self.target.x2(), |p| {
            Ok(Atom::pair(self.f1.apply(p.proj(0)?)?, self.f1.apply(p.proj(1)?)?))
        })
    }

    pub fn validate(&self) -> Certificate {
        let (s, t) = (&self.source, &self.target);
        let mut cert = Certificate::new(format!("functor {} → {}", s.name, t.name));
        let eq = |a: Result<FinMap>, b: Result<FinMap>| match (a, b) {
            (Ok(a), Ok(b)) => a.first_difference(&b),
            (Err(e), _) | (_, Err(e)) => Some(e.to_string()),
        };
        cert.record("preserves d0", eq(t.d0.after(&self.f1), self.f0.after(&s.d0)));
        cert.record("preserves d1", eq(t.d1.after(&self.f1), self.f0.after(&s.d1)));
        cert.record("preserves s0", eq(self.f1.after(&s.s0), t.s0.after(&self.f0)));
        match self.f2() {
            Ok(f2) => {
                cert.record("preserves m", eq(t.m.after(&f2), self.f1.after(&s.m)));
            }
            Err(e) => {
                cert.record("preserves m", Some(format!("composable pair not sent to a composable pair: {e}")));
            }
        }
        cert
    }

    /// The square `(f1, d1, d1, f0)`.
    pub fn fibration_square(&self) -> Result<SquareVerdict> {
        is_pullback_square(&self.f1, &self.source.d1, &self.target.d1, &self.f0)
    }

    /// The square `(f1, d0, d0, f0)`.
    pub fn cofibration_square(&self) -> Result<SquareVerdict> {
        is_pullback_square(&self.f1, &self.source.d0, &self.target.d0, &self.f0)
    }

    pub fn compose(&self, g: &InternalFunctor) -> Result<InternalFunctor> {
        InternalFunctor::new(&self.source, &g.target, g.f0.after(&self.f0)?, g.f1.after(&self.f1)?)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.validate().passed() && self.f0.is_bijective() && self.f1.is_bijective()
    }
}

pub fn is_discrete_fibration(f: &InternalFunctor) -> bool {
    f.fibration_square().map(|v| v.is_pullback()).unwrap_or(false)
}

pub fn is_discrete_cofibration(f: &InternalFunctor) -> bool {
    f.cofibration_square().map(|v| v.is_pullback()).unwrap_or(false)
}
