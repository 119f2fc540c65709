use super::monad::{probe_morphisms, Monad, Mor, Obj};
use crate::catkit::Ambient;
use crate::cert::Certificate;
use crate::error::Result;
use crate::setcat::SquareVerdict;
use serde::Serialize;

/// Per-probe verdicts on the cartesian properties of a monad.
#[derive(Debug, Clone, Serialize)]
pub struct CartesianCertificate {
    pub monad: String,
    pub probe_objects: Vec<String>,
    pub probe_squares: usize,
    pub checks: Certificate,
}

pub const PRESERVES: &str = "T preserves pullbacks";
pub const UNIT: &str = "lambda cartesian";
pub const MULT: &str = "mu cartesian";
pub const HALF: &str = "lambda is the equalizer of lambda_T, T(lambda)";
pub const HYPER: &str = "(mu_T, T(mu)) is the kernel pair of mu";
pub const CONSERVATIVE: &str = "T conservative";

impl CartesianCertificate {
    fn all(&self, kind: &str) -> bool {
        self.checks.checks.iter().filter(|c| c.name.starts_with(kind)).all(|c| c.pass)
    }

    pub fn preserves_pullbacks(&self) -> bool {
        self.all(PRESERVES)
    }

    pub fn unit_cartesian(&self) -> bool {
        self.all(UNIT)
    }

    pub fn mult_cartesian(&self) -> bool {
        self.all(MULT)
    }

    pub fn cartesian(&self) -> bool {
        self.preserves_pullbacks() && self.unit_cartesian() && self.mult_cartesian()
    }

    pub fn half_cartesian(&self) -> bool {
        self.preserves_pullbacks() && self.all(HALF)
    }

    pub fn hypercartesian(&self) -> bool {
        self.cartesian() && self.all(HYPER)
    }

    pub fn conservative(&self) -> bool {
        self.all(CONSERVATIVE)
    }
}

fn square_witness(v: SquareVerdict, at: String) -> Option<String> {
    v.witness().map(|w| format!("{at}: {w}"))
}

/// Cartesianness with respect to every morphism.
pub fn certify_cartesian<M: Monad>(m: &M, size: usize) -> Result<CartesianCertificate> {
    certify_sigma_cartesian(m, size, "all maps", |_| true)
}

/// Cartesianness restricted to a class `Σ` of morphisms: naturality squares
/// of `Σ`-maps must be pullbacks, and `T` must preserve pullbacks of
/// `Σ`-maps along arbitrary maps. Exhaustive over probe objects of size at
/// most `size`; cospans use probes one size smaller.
pub fn certify_sigma_cartesian<M: Monad>(
    m: &M,
    size: usize,
    sigma_name: &str,
    sigma: impl Fn(&Mor<M>) -> bool,
) -> Result<CartesianCertificate> {
    let a = m.ambient();
    let objs: Vec<Obj<M>> = m.probes(size);
    let mut checks = Certificate::new(format!("cartesianness of {} ({sigma_name})", m.name()));
    let mut squares = 0;

    for x in &objs {
        let tx = m.obj(x)?;
        let l = m.unit(x)?;
        let mu = m.mult(x)?;
        let half = a.is_equalizer(&l, &m.unit(&tx)?, &m.fmap(&l)?)?;
        checks.record(format!("{HALF} [{x}]"), half);
        let hyper = a.is_kernel_pair(&m.mult(&tx)?, &m.fmap(&mu)?, &mu)?;
        squares += 1;
        checks.record(format!("{HYPER} [{x}]"), hyper.witness());
    }

    let morphisms: Vec<Mor<M>> = probe_morphisms(m, size);
    for x in &objs {
        let mut unit = None;
        let mut mult = None;
        let mut cons = None;
        for f in morphisms.iter().filter(|f| a.dom(f) == *x) {
            let tf = m.fmap(f)?;
            if cons.is_none() && a.is_iso(&tf) && !a.is_iso(f) {
                cons = Some(format!("T({}) is invertible but the map {x} → {} is not", x, a.cod(f)));
            }
            if !sigma(f) {
                continue;
            }
            squares += 2;
            let y = a.cod(f);
            if unit.is_none() {
                let v = a.is_pullback_square(f, &m.unit(x)?, &m.unit(&y)?, &tf)?;
                unit = square_witness(v, format!("naturality square of λ at {x} → {y}"));
            }
            if mult.is_none() {
                let v = a.is_pullback_square(&m.fmap(&tf)?, &m.mult(x)?, &m.mult(&y)?, &tf)?;
                mult = square_witness(v, format!("naturality square of μ at {x} → {y}"));
            }
        }
        checks.record(format!("{UNIT} [{x}]"), unit);
        checks.record(format!("{MULT} [{x}]"), mult);
        checks.record(format!("{CONSERVATIVE} [{x}]"), cons);
    }

    let small: Vec<Obj<M>> = m.probes(size.saturating_sub(1));
    for z in &small {
        let mut fails = None;
        let into: Vec<Mor<M>> = small.iter().flat_map(|x| a.hom(x, z)).collect();
        for f in into.iter().filter(|f| sigma(f)) {
            for g in &into {
                squares += 1;
                let (_, pf, pg) = a.pullback(f, g)?;
                let v = a.is_pullback_square(&m.fmap(&pg)?, &m.fmap(&pf)?, &m.fmap(g)?, &m.fmap(f)?)?;
                if fails.is_none() {
                    fails = square_witness(v, format!("T of the pullback of {} → {z} ← {}", a.dom(f), a.dom(g)));
                }
            }
        }
        checks.record(format!("{PRESERVES} [{z}]"), fails);
    }

    Ok(CartesianCertificate {
        monad: m.name(),
        probe_objects: objs.iter().map(|o| o.to_string()).collect(),
        probe_squares: squares,
        checks,
    })
}
