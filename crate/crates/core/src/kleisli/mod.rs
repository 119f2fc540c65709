//! The Kleisli category of a monad as an ambient, and the calculus of the
//! subcategory `E` embedded in it.

use crate::catkit::Ambient;
use crate::error::{Error, Result};
use crate::monadkit::{certify_cartesian, validate_monad, CartesianCertificate, Monad, Mor, Obj};
use crate::setcat::{FinMap, FinSetObj, SquareVerdict};
use std::fmt;

/// A Kleisli morphism `X ⇢ Y`, given by its support `α: X → T(Y)`.
pub struct KleisliMor<M: Monad> {
    pub src: Obj<M>,
    pub tgt: Obj<M>,
    pub support: Mor<M>,
}

impl<M: Monad> Clone for KleisliMor<M> {
    fn clone(&self) -> Self {
        KleisliMor { src: self.src.clone(), tgt: self.tgt.clone(), support: self.support.clone() }
    }
}

impl<M: Monad> PartialEq for KleisliMor<M> {
    fn eq(&self, o: &Self) -> bool {
        self.src == o.src && self.tgt == o.tgt && self.support == o.support
    }
}

impl<M: Monad> fmt::Debug for KleisliMor<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{:?}\": {} ⇢ {}", self.support, self.src, self.tgt)
    }
}

impl<M: Monad> KleisliMor<M> {
    pub fn new(m: &M, src: Obj<M>, tgt: Obj<M>, support: Mor<M>) -> Result<Self> {
        let a = m.ambient();
        if a.dom(&support) != src || a.cod(&support) != m.obj(&tgt)? {
            return Err(Error::ty(format!("support must be {src} → T({tgt})")));
        }
        Ok(KleisliMor { src, tgt, support })
    }
}

/// `μ_Z ∘ T(β) ∘ α`
pub fn kl_compose<M: Monad>(m: &M, b: &KleisliMor<M>, a: &KleisliMor<M>) -> Result<KleisliMor<M>> {
    if a.tgt != b.src {
        return Err(Error::ty(format!("cannot compose {} ⇢ {} after {} ⇢ {}", b.src, b.tgt, a.src, a.tgt)));
    }
    Ok(KleisliMor { src: a.src.clone(), tgt: b.tgt.clone(), support: m.bind(&b.tgt, &b.support, &a.support)? })
}

/// `λ_Y ∘ f`
pub fn embed_e<M: Monad>(m: &M, f: &Mor<M>) -> Result<KleisliMor<M>> {
    let a = m.ambient();
    let (x, y) = (a.dom(f), a.cod(f));
    let support = a.compose(&m.unit(&y)?, f)?;
    Ok(KleisliMor { src: x, tgt: y, support })
}

/// `μ_Y ∘ T(α): T(X) → T(Y)`
pub fn forget<M: Monad>(m: &M, k: &KleisliMor<M>) -> Result<Mor<M>> {
    m.ambient().compose(&m.mult(&k.tgt)?, &m.fmap(&k.support)?)
}

/// `ε_X: T(X) ⇢ X`, supported by the identity of `T(X)`.
pub fn counit<M: Monad>(m: &M, x: &Obj<M>) -> Result<KleisliMor<M>> {
    let tx = m.obj(x)?;
    Ok(KleisliMor { src: tx.clone(), tgt: x.clone(), support: m.ambient().id(&tx) })
}

/// `Kl(T)` as an ambient. Limits are not levelwise here, so universal
/// properties are checked by enumerating cones from the probe objects of
/// size at most `probe_size`.
#[derive(Debug, Clone)]
pub struct Kl<M: Monad + Clone> {
    pub monad: M,
    pub probe_size: usize,
}

impl<M: Monad + Clone> Kl<M> {
    pub fn new(monad: M, probe_size: usize) -> Self {
        Kl { monad, probe_size }
    }

    fn cone_probes(&self) -> Vec<Obj<M>> {
        self.monad.probes(self.probe_size)
    }
}

impl<M: Monad + Clone> Ambient for Kl<M> {
    type Obj = Obj<M>;
    type Mor = KleisliMor<M>;

    fn name(&self) -> String {
        format!("Kl({})", self.monad.name())
    }

    fn dom(&self, f: &KleisliMor<M>) -> Obj<M> {
        f.src.clone()
    }

    fn cod(&self, f: &KleisliMor<M>) -> Obj<M> {
        f.tgt.clone()
    }

    fn id(&self, x: &Obj<M>) -> KleisliMor<M> {
        embed_e(&self.monad, &self.monad.ambient().id(x)).expect("the unit is defined on every object")
    }

    fn compose(&self, g: &KleisliMor<M>, f: &KleisliMor<M>) -> Result<KleisliMor<M>> {
        kl_compose(&self.monad, g, f)
    }

    fn hom(&self, x: &Obj<M>, y: &Obj<M>) -> Vec<KleisliMor<M>> {
        let Ok(ty) = self.monad.obj(y) else { return Vec::new() };
        self.monad
            .ambient()
            .hom(x, &ty)
            .into_iter()
            .map(|support| KleisliMor { src: x.clone(), tgt: y.clone(), support })
            .collect()
    }

    fn obj_levels(&self, x: &Obj<M>) -> Vec<FinSetObj> {
        self.monad.ambient().obj_levels(x)
    }

    fn levels(&self, f: &KleisliMor<M>) -> Vec<FinMap> {
        self.monad.ambient().levels(&f.support)
    }

    fn from_levels(&self, dom: &Obj<M>, cod: &Obj<M>, levels: Vec<FinMap>) -> Result<KleisliMor<M>> {
        let support = self.monad.ambient().from_levels(dom, &self.monad.obj(cod)?, levels)?;
        Ok(KleisliMor { src: dom.clone(), tgt: cod.clone(), support })
    }

    /// Available when one leg comes from `E`.
    fn pullback(&self, f: &KleisliMor<M>, g: &KleisliMor<M>) -> Result<(Obj<M>, KleisliMor<M>, KleisliMor<M>)> {
        let m = &self.monad;
        if let Some(base) = self.monad.ambient().factor_through_mono(&m.unit(&f.tgt)?, &f.support) {
            let sq = kl_pullback_along_e(m, &base, g)?;
            return Ok((sq.corner, sq.left, sq.top));
        }
        if let Some(base) = self.monad.ambient().factor_through_mono(&m.unit(&g.tgt)?, &g.support) {
            let sq = kl_pullback_along_e(m, &base, f)?;
            return Ok((sq.corner, sq.top, sq.left));
        }
        Err(Error::Precondition("Kleisli pullbacks are only built along maps of E".into()))
    }

    fn probes(&self, size: usize) -> Vec<Obj<M>> {
        self.monad.probes(size)
    }

    fn lift(
        &self,
        left: &KleisliMor<M>,
        top: &KleisliMor<M>,
        a: &KleisliMor<M>,
        b: &KleisliMor<M>,
    ) -> Result<KleisliMor<M>> {
        let hits: Vec<KleisliMor<M>> = self
            .hom(&a.src, &left.src)
            .into_iter()
            .filter(|c| self.compose(left, c).ok().as_ref() == Some(a) && self.compose(top, c).ok().as_ref() == Some(b))
            .collect();
        match hits.len() {
            1 => Ok(hits.into_iter().next().unwrap()),
            n => Err(Error::not_a("pullback cone", format!("{n} mediating Kleisli maps"))),
        }
    }

    fn factor_through_mono(&self, mono: &KleisliMor<M>, a: &KleisliMor<M>) -> Option<KleisliMor<M>> {
        self.hom(&a.src, &mono.src).into_iter().find(|c| self.compose(mono, c).ok().as_ref() == Some(a))
    }

    fn is_pullback_square(
        &self,
        top: &KleisliMor<M>,
        left: &KleisliMor<M>,
        right: &KleisliMor<M>,
        bottom: &KleisliMor<M>,
    ) -> Result<SquareVerdict> {
        is_pullback_in_kl(self, &KlSquare::new(top, left, right, bottom)?, &self.cone_probes())
    }

    fn is_equalizer(&self, e: &KleisliMor<M>, f: &KleisliMor<M>, g: &KleisliMor<M>) -> Result<Option<String>> {
        is_equalizer_in_kl(self, e, f, g, &self.cone_probes())
    }

    fn is_mono(&self, f: &KleisliMor<M>) -> bool {
        self.cone_probes().iter().all(|z| {
            let outs: Vec<KleisliMor<M>> =
                self.hom(z, &f.src).iter().filter_map(|c| self.compose(f, c).ok()).collect();
            (0..outs.len()).all(|i| (i + 1..outs.len()).all(|j| outs[i] != outs[j]))
        })
    }

    fn is_iso(&self, f: &KleisliMor<M>) -> bool {
        kl_inverse(self, f).is_some()
    }
}

/// A two-sided inverse in `Kl(T)`, by search.
pub fn kl_inverse<M: Monad + Clone>(kl: &Kl<M>, f: &KleisliMor<M>) -> Option<KleisliMor<M>> {
    let (ix, iy) = (kl.id(&f.src), kl.id(&f.tgt));
    kl.hom(&f.tgt, &f.src).into_iter().find(|g| {
        kl.compose(g, f).ok().as_ref() == Some(&ix) && kl.compose(f, g).ok().as_ref() == Some(&iy)
    })
}

/// A square `top: P ⇢ B`, `left: P ⇢ A`, `right: B ⇢ C`, `bottom: A ⇢ C`.
pub struct KlSquare<M: Monad> {
    pub corner: Obj<M>,
    pub top: KleisliMor<M>,
    pub left: KleisliMor<M>,
    pub right: KleisliMor<M>,
    pub bottom: KleisliMor<M>,
}

impl<M: Monad> KlSquare<M> {
    pub fn new(top: &KleisliMor<M>, left: &KleisliMor<M>, right: &KleisliMor<M>, bottom: &KleisliMor<M>) -> Result<Self> {
        if top.src != left.src || right.src != top.tgt || bottom.src != left.tgt || right.tgt != bottom.tgt {
            return Err(Error::ty("square boundary types do not match"));
        }
        Ok(KlSquare {
            corner: top.src.clone(),
            top: top.clone(),
            left: left.clone(),
            right: right.clone(),
            bottom: bottom.clone(),
        })
    }
}

/// Universal property by cone enumeration: for every probe `Z` and every
/// commuting pair `(a: Z ⇢ A, b: Z ⇢ B)` there is exactly one mediating map.
pub fn is_pullback_in_kl<M: Monad + Clone>(kl: &Kl<M>, sq: &KlSquare<M>, probes: &[Obj<M>]) -> Result<SquareVerdict> {
    let rt = kl.compose(&sq.right, &sq.top)?;
    let bl = kl.compose(&sq.bottom, &sq.left)?;
    if let Some(w) = kl.difference(&rt, &bl) {
        return Ok(SquareVerdict::NotCommuting(w));
    }
    let (a_obj, b_obj) = (sq.left.tgt.clone(), sq.top.tgt.clone());
    for z in probes {
        let mut med: Vec<((KleisliMor<M>, KleisliMor<M>), usize)> = Vec::new();
        for c in kl.hom(z, &sq.corner) {
            let key = (kl.compose(&sq.left, &c)?, kl.compose(&sq.top, &c)?);
            match med.iter_mut().find(|(k, _)| *k == key) {
                Some((_, n)) => *n += 1,
                None => med.push((key, 1)),
            }
        }
        let bs = kl.hom(z, &b_obj);
        let rb: Vec<KleisliMor<M>> = bs.iter().map(|b| kl.compose(&sq.right, b)).collect::<Result<_>>()?;
        for a in kl.hom(z, &a_obj) {
            let ba = kl.compose(&sq.bottom, &a)?;
            for (b, rb) in bs.iter().zip(&rb) {
                if *rb != ba {
                    continue;
                }
                let n = med.iter().find(|(k, _)| k.0 == a && k.1 == *b).map(|(_, n)| *n).unwrap_or(0);
                if n != 1 {
                    return Ok(SquareVerdict::NotPullback(format!(
                        "cone from {z} with legs {:?}, {:?} has {n} mediating maps",
                        a.support, b.support
                    )));
                }
            }
        }
    }
    Ok(SquareVerdict::Pullback)
}

/// `e` equalizes `(f, g)` and every probe map equalizing them factors
/// uniquely through `e`.
pub fn is_equalizer_in_kl<M: Monad + Clone>(
    kl: &Kl<M>,
    e: &KleisliMor<M>,
    f: &KleisliMor<M>,
    g: &KleisliMor<M>,
    probes: &[Obj<M>],
) -> Result<Option<String>> {
    if kl.compose(f, e)? != kl.compose(g, e)? {
        return Ok(Some("the candidate does not equalize the pair".into()));
    }
    for z in probes {
        let through: Vec<KleisliMor<M>> =
            kl.hom(z, &e.src).iter().map(|d| kl.compose(e, d)).collect::<Result<_>>()?;
        for c in kl.hom(z, &f.src) {
            if kl.compose(f, &c)? != kl.compose(g, &c)? {
                continue;
            }
            let n = through.iter().filter(|t| **t == c).count();
            if n != 1 {
                return Ok(Some(format!("{:?} from {z} factors {n} times", c.support)));
            }
        }
    }
    Ok(None)
}

/// The result of [`kl_pullback_along_e`]: `left = "φ"`, `top = embed(h)`,
/// over `bottom = embed(f)` and `right = ψ`.
pub fn kl_pullback_along_e<M: Monad>(m: &M, f: &Mor<M>, psi: &KleisliMor<M>) -> Result<KlSquare<M>> {
    let a = m.ambient();
    if a.cod(f) != psi.tgt {
        return Err(Error::ty("the two legs do not share a codomain"));
    }
    let tf = m.fmap(f)?;
    let (v, phi, h) = a.pullback(&tf, &psi.support)?;
    let left = KleisliMor { src: v.clone(), tgt: a.dom(f), support: phi };
    let top = embed_e(m, &h)?;
    KlSquare::new(&top, &left, psi, &embed_e(m, f)?)
}

/// Report of an exhaustive search for counterexamples.
#[derive(Debug, Clone, Default, serde::Serialize)]
pub struct SearchReport {
    pub checked: usize,
    pub counterexamples: Vec<String>,
}

impl SearchReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// A monad whose laws and cartesianness were certified on probes; the
/// calculus of `E ⊂ Kl(T)` is only offered through this gate.
pub struct KlCalculus<M: Monad + Clone> {
    pub kl: Kl<M>,
    pub cert: CartesianCertificate,
}

impl<M: Monad + Clone> KlCalculus<M> {
    pub fn certify(monad: M, probe_size: usize) -> Result<Self> {
        let laws = validate_monad(&monad, probe_size)?;
        if let Some(f) = laws.first_failure() {
            return Err(Error::Precondition(format!(
                "{} is not a monad: {} fails ({})",
                monad.name(),
                f.name,
                f.witness.clone().unwrap_or_default()
            )));
        }
        let cert = certify_cartesian(&monad, probe_size)?;
        Ok(KlCalculus { kl: Kl::new(monad, probe_size), cert })
    }

    pub fn monad(&self) -> &M {
        &self.kl.monad
    }

    /// Whether `α` lies in `E`, with the base map it comes from.
    pub fn in_e(&self, k: &KleisliMor<M>) -> Result<Option<Mor<M>>> {
        if !self.cert.half_cartesian() {
            return Err(Error::Precondition(format!("{} is not certified half-cartesian", self.monad().name())));
        }
        let m = self.monad();
        let a = m.ambient();
        let ly = m.unit(&k.tgt)?;
        let lhs = a.compose(&m.unit(&m.obj(&k.tgt)?)?, &k.support)?;
        let rhs = a.compose(&m.fmap(&ly)?, &k.support)?;
        if lhs != rhs {
            return Ok(None);
        }
        a.factor_through_mono(&ly, &k.support)
            .map(Some)
            .ok_or_else(|| Error::not_a("equalizer", "λ does not capture an equalized map"))
    }

    pub fn pullback_along_e(&self, f: &Mor<M>, psi: &KleisliMor<M>) -> Result<KlSquare<M>> {
        if !self.cert.cartesian() {
            return Err(Error::Precondition(format!("{} is not certified cartesian", self.monad().name())));
        }
        kl_pullback_along_e(self.monad(), f, psi)
    }

    /// Whenever `embed(g) ∘ φ` lies in `E`, so does `φ`.
    pub fn verify_left_cancellable(&self, size: usize) -> Result<SearchReport> {
        if !self.cert.unit_cartesian() {
            return Err(Error::Precondition("lambda is not certified cartesian".into()));
        }
        let m = self.monad();
        let a = m.ambient();
        let objs = m.probes(size);
        let mut rep = SearchReport::default();
        for x in &objs {
            for y in &objs {
                let phis = self.kl.hom(x, y);
                for z in &objs {
                    for g in a.hom(y, z) {
                        let eg = embed_e(m, &g)?;
                        for phi in &phis {
                            rep.checked += 1;
                            let h = kl_compose(m, &eg, phi)?;
                            if self.in_e(&h)?.is_some() && self.in_e(phi)?.is_none() {
                                rep.counterexamples.push(format!("{:?} then {:?}", phi.support, g));
                            }
                        }
                    }
                }
            }
        }
        Ok(rep)
    }

    /// Every base map whose embedding is invertible in `Kl(T)` is invertible,
    /// and its Kleisli inverse lies in `E`.
    pub fn verify_reflects_isos(&self, size: usize) -> Result<SearchReport> {
        let m = self.monad();
        let a = m.ambient();
        let objs = m.probes(size);
        let mut rep = SearchReport::default();
        for x in &objs {
            for y in &objs {
                for f in a.hom(x, y) {
                    rep.checked += 1;
                    if let Some(inv) = kl_inverse(&self.kl, &embed_e(m, &f)?) {
                        if !a.is_iso(&f) || self.in_e(&inv)?.is_none() {
                            rep.counterexamples.push(format!("{f:?}"));
                        }
                    }
                }
            }
        }
        Ok(rep)
    }
}
