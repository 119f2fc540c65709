use super::monad::{Monad, Mor, Obj};
use crate::catkit::{Ambient, FinSetCat};
use crate::error::{Error, Result};
use crate::setcat::{bounded_words, Atom, FinMap, FinSetObj};
use std::collections::BTreeMap;

/// The identity monad on any ambient.
#[derive(Debug, Clone)]
pub struct Identity<A: Ambient> {
    pub amb: A,
}

impl<A: Ambient> Monad for Identity<A> {
    type A = A;

    fn ambient(&self) -> &A {
        &self.amb
    }

    fn name(&self) -> String {
        "identity".into()
    }

    fn obj(&self, x: &Obj<Self>) -> Result<Obj<Self>> {
        Ok(x.clone())
    }

    fn fmap(&self, f: &Mor<Self>) -> Result<Mor<Self>> {
        Ok(f.clone())
    }

    fn unit(&self, x: &Obj<Self>) -> Result<Mor<Self>> {
        Ok(self.amb.id(x))
    }

    fn mult(&self, x: &Obj<Self>) -> Result<Mor<Self>> {
        Ok(self.amb.id(x))
    }
}

/// `T(X) = X ⊎ {⊥}`, elements `just(x)` and `⊥`.
#[derive(Debug, Clone, Default)]
pub struct Maybe {
    /// Negative control: `μ` sends the outer `⊥` to the first `just`.
    pub broken: bool,
}

impl Maybe {
    pub fn new() -> Self {
        Maybe { broken: false }
    }

    pub fn broken() -> Self {
        Maybe { broken: true }
    }
}

impl Monad for Maybe {
    type A = FinSetCat;

    fn ambient(&self) -> &FinSetCat {
        &FinSetCat
    }

    fn name(&self) -> String {
        if self.broken { "maybe(broken)".into() } else { "maybe".into() }
    }

    fn obj(&self, x: &FinSetObj) -> Result<FinSetObj> {
        Ok(FinSetObj::collect(
            format!("T({})", x.name),
            x.iter().cloned().map(Atom::just).chain(std::iter::once(Atom::Bot)),
        ))
    }

    fn fmap(&self, f: &FinMap) -> Result<FinMap> {
        FinMap::try_new(&self.obj(f.dom())?, &self.obj(f.cod())?, |a| match a {
            Atom::Just(x) => Ok(Atom::just(f.apply(x)?)),
            _ => Ok(Atom::Bot),
        })
    }

    fn unit(&self, x: &FinSetObj) -> Result<FinMap> {
        FinMap::new(x, &self.obj(x)?, |a| Atom::just(a.clone()))
    }

    fn mult(&self, x: &FinSetObj) -> Result<FinMap> {
        let tx = self.obj(x)?;
        let first = x.elems().first().map(|a| Atom::just(a.clone())).unwrap_or(Atom::Bot);
        FinMap::new(&self.obj(&tx)?, &tx, |a| match a {
            Atom::Just(inner) => (**inner).clone(),
            _ if self.broken => first.clone(),
            _ => Atom::Bot,
        })
    }
}

/// A finite monoid given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinMonoid {
    pub name: String,
    pub carrier: FinSetObj,
    pub unit: Atom,
    table: BTreeMap<(Atom, Atom), Atom>,
}

impl FinMonoid {
    pub fn new(
        name: impl Into<String>,
        carrier: FinSetObj,
        unit: Atom,
        mul: impl Fn(&Atom, &Atom) -> Atom,
    ) -> Result<Self> {
        let mut table = BTreeMap::new();
        for a in carrier.iter() {
            for b in carrier.iter() {
                let c = mul(a, b);
                if !carrier.contains(&c) {
                    return Err(Error::NotMember { atom: c.to_string(), set: carrier.name.clone() });
                }
                table.insert((a.clone(), b.clone()), c);
            }
        }
        let mo = FinMonoid { name: name.into(), carrier, unit, table };
        for a in mo.carrier.iter() {
            if mo.mul(&mo.unit, a) != *a || mo.mul(a, &mo.unit) != *a {
                return Err(Error::law("monoid unit", a.to_string()));
            }
            for b in mo.carrier.iter() {
                for c in mo.carrier.iter() {
                    if mo.mul(&mo.mul(a, b), c) != mo.mul(a, &mo.mul(b, c)) {
                        return Err(Error::law("monoid associativity", format!("({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(mo)
    }

    pub fn mul(&self, a: &Atom, b: &Atom) -> Atom {
        self.table[&(a.clone(), b.clone())].clone()
    }

    /// `{e, t}` with `t·t = e`.
    pub fn z2() -> Self {
        let c = FinSetObj::of_syms("Z2", &["e", "t"]);
        FinMonoid::new("Z2", c, Atom::sym("e"), |a, b| if a == b { Atom::sym("e") } else { Atom::sym("t") }).unwrap()
    }

    /// `{e, z}` with `z` absorbing.
    pub fn absorbing() -> Self {
        let c = FinSetObj::of_syms("Abs2", &["e", "z"]);
        let e = Atom::sym("e");
        FinMonoid::new("Abs2", c, e.clone(), |a, b| if *a == e && *b == e { e.clone() } else { Atom::sym("z") })
            .unwrap()
    }
}

/// `T(X) = M × X` with elements `(m, x)`.
#[derive(Debug, Clone)]
pub struct Writer {
    pub monoid: FinMonoid,
    /// The element used by `λ`; the monoid unit unless deliberately broken.
    pub unit_elem: Atom,
}

impl Writer {
    pub fn new(monoid: FinMonoid) -> Self {
        let unit_elem = monoid.unit.clone();
        Writer { monoid, unit_elem }
    }

    pub fn with_unit(monoid: FinMonoid, unit_elem: Atom) -> Result<Self> {
        if !monoid.carrier.contains(&unit_elem) {
            return Err(Error::NotMember { atom: unit_elem.to_string(), set: monoid.name.clone() });
        }
        Ok(Writer { monoid, unit_elem })
    }
}

impl Monad for Writer {
    type A = FinSetCat;

    fn ambient(&self) -> &FinSetCat {
        &FinSetCat
    }

    fn name(&self) -> String {
        if self.unit_elem == self.monoid.unit {
            format!("writer({})", self.monoid.name)
        } else {
            format!("writer({}, unit {})", self.monoid.name, self.unit_elem)
        }
    }

    fn obj(&self, x: &FinSetObj) -> Result<FinSetObj> {
        let mut elems = Vec::new();
        for m in self.monoid.carrier.iter() {
            for a in x.iter() {
                elems.push(Atom::pair(m.clone(), a.clone()));
            }
        }
        Ok(FinSetObj::collect(format!("{}×{}", self.monoid.name, x.name), elems))
    }

    fn fmap(&self, f: &FinMap) -> Result<FinMap> {
        FinMap::try_new(&self.obj(f.dom())?, &self.obj(f.cod())?, |p| {
            Ok(Atom::pair(p.proj(0)?.clone(), f.apply(p.proj(1)?)?))
        })
    }

    fn unit(&self, x: &FinSetObj) -> Result<FinMap> {
        FinMap::new(x, &self.obj(x)?, |a| Atom::pair(self.unit_elem.clone(), a.clone()))
    }

    fn mult(&self, x: &FinSetObj) -> Result<FinMap> {
        let tx = self.obj(x)?;
        FinMap::try_new(&self.obj(&tx)?, &tx, |p| {
            let (m, inner) = (p.proj(0)?, p.proj(1)?);
            let (n, a) = (inner.proj(0)?, inner.proj(1)?);
            Ok(Atom::pair(self.monoid.mul(m, n), a.clone()))
        })
    }
}

/// The free monoid monad, truncated: `T(X)` holds the words whose size is at
/// most `bound`, where letters count by their own size and an empty word
/// counts one. The truncation is closed under `λ`, `μ` and `T(f)` whenever
/// `f` does not increase sizes; otherwise `T(f)` reports the grade needed.
#[derive(Debug, Clone)]
pub struct List {
    pub bound: usize,
}

impl List {
    pub fn new(bound: usize) -> Self {
        List { bound }
    }

    fn word(&self, letters: Vec<Atom>) -> Result<Atom> {
        let w = Atom::Word(letters);
        if w.size() > self.bound {
            return Err(Error::GradeBound { need: w.size(), bound: self.bound });
        }
        Ok(w)
    }
}

impl Monad for List {
    type A = FinSetCat;

    fn ambient(&self) -> &FinSetCat {
        &FinSetCat
    }

    fn name(&self) -> String {
        format!("list(bound={})", self.bound)
    }

    fn obj(&self, x: &FinSetObj) -> Result<FinSetObj> {
        Ok(bounded_words(x, self.bound).renamed(format!("M({})", x.name)))
    }

    fn fmap(&self, f: &FinMap) -> Result<FinMap> {
        let tx = self.obj(f.dom())?;
        let ty = self.obj(f.cod())?;
        FinMap::try_new(&tx, &ty, |w| {
            let letters = w.as_word().ok_or_else(|| Error::ty("not a word"))?;
            self.word(letters.iter().map(|a| f.apply(a)).collect::<Result<_>>()?)
        })
    }

    fn unit(&self, x: &FinSetObj) -> Result<FinMap> {
        let tx = self.obj(x)?;
        FinMap::try_new(x, &tx, |a| self.word(vec![a.clone()]))
    }

    fn mult(&self, x: &FinSetObj) -> Result<FinMap> {
        let tx = self.obj(x)?;
        FinMap::try_new(&self.obj(&tx)?, &tx, |ww| {
            let mut out = Vec::new();
            for w in ww.as_word().ok_or_else(|| Error::ty("not a word"))? {
                out.extend(w.as_word().ok_or_else(|| Error::ty("not a word"))?.iter().cloned());
            }
            self.word(out)
        })
    }

    /// Pointwise, so that only the words actually reached are built.
    fn bind(&self, z: &FinSetObj, beta: &FinMap, alpha: &FinMap) -> Result<FinMap> {
        let tz = self.obj(z)?;
        FinMap::try_new(alpha.dom(), &tz, |a| {
            let mut out = Vec::new();
            for y in alpha.apply(a)?.as_word().ok_or_else(|| Error::ty("not a word"))? {
                out.extend(beta.apply(y)?.as_word().ok_or_else(|| Error::ty("not a word"))?.iter().cloned());
            }
            self.word(out)
        })
    }

    fn probes(&self, size: usize) -> Vec<FinSetObj> {
        FinSetCat.probes(size.min(self.bound))
    }
}

/// Words of length exactly `n` in `T(X)`.
pub fn list_grade_piece(m: &List, x: &FinSetObj, n: usize) -> Result<FinSetObj> {
    if n > m.bound {
        return Err(Error::GradeBound { need: n, bound: m.bound });
    }
    let tx = m.obj(x)?;
    Ok(FinSetObj::collect(
        format!("{}^{n}", x.name),
        tx.iter().filter(|w| w.as_word().map(|v| v.len()) == Some(n)).cloned(),
    ))
}
