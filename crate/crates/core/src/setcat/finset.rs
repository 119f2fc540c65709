use super::atom::Atom;
use crate::error::{Error, Result};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

/// A finite set of atoms kept in sorted order. The name is a label only;
/// equality looks at the elements.
#[derive(Debug, Clone)]
pub struct FinSetObj {
    pub name: String,
    elems: Arc<[Atom]>,
}

impl PartialEq for FinSetObj {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.elems, &other.elems) || self.elems == other.elems
    }
}

impl Eq for FinSetObj {}

impl Hash for FinSetObj {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elems.hash(state);
    }
}

impl FinSetObj {
    /// Builds a set, rejecting duplicates.
    pub fn new(name: impl Into<String>, elems: impl IntoIterator<Item = Atom>) -> Result<Self> {
        let name = name.into();
        let mut v: Vec<Atom> = elems.into_iter().collect();
        v.sort();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Duplicate(w[0].to_string(), name));
        }
        Ok(FinSetObj { name, elems: v.into() })
    }

    /// Builds a set, silently merging duplicates.
    pub fn collect(name: impl Into<String>, elems: impl IntoIterator<Item = Atom>) -> Self {
        let mut v: Vec<Atom> = elems.into_iter().collect();
        v.sort();
        v.dedup();
        FinSetObj { name: name.into(), elems: v.into() }
    }

    pub fn empty(name: impl Into<String>) -> Self {
        FinSetObj { name: name.into(), elems: Arc::from([]) }
    }

    /// `{0, .., n-1}` as integer atoms.
    pub fn range(name: impl Into<String>, n: usize) -> Self {
        FinSetObj::collect(name, (0..n as i64).map(Atom::Int))
    }

    pub fn of_syms(name: impl Into<String>, syms: &[&str]) -> Self {
        FinSetObj::collect(name, syms.iter().map(|s| Atom::sym(*s)))
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        FinSetObj { name: name.into(), elems: self.elems.clone() }
    }

    pub fn elems(&self) -> &[Atom] {
        &self.elems
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Atom> {
        self.elems.iter()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn index_of(&self, a: &Atom) -> Option<usize> {
        self.elems.binary_search(a).ok()
    }

    pub fn contains(&self, a: &Atom) -> bool {
        self.index_of(a).is_some()
    }

    pub fn is_subset(&self, other: &FinSetObj) -> bool {
        self.elems.iter().all(|a| other.contains(a))
    }
}

impl fmt::Display for FinSetObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// A total function between finite sets; `img[i]` is the image of the
/// i-th element of `dom`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinMap {
    dom: FinSetObj,
    cod: FinSetObj,
    img: Arc<[Atom]>,
}

impl FinMap {
    pub fn new(dom: &FinSetObj, cod: &FinSetObj, f: impl Fn(&Atom) -> Atom) -> Result<Self> {
        Self::try_new(dom, cod, |a| Ok(f(a)))
    }

    pub fn try_new(
        dom: &FinSetObj,
        cod: &FinSetObj,
        f: impl Fn(&Atom) -> Result<Atom>,
    ) -> Result<Self> {
        let mut img = Vec::with_capacity(dom.len());
        for a in dom.iter() {
            let b = f(a)?;
            if !cod.contains(&b) {
                return Err(Error::NotMember {
                    atom: b.to_string(),
                    set: format!("{} (image of {a})", cod.name),
                });
            }
            img.push(b);
        }
        Ok(FinMap { dom: dom.clone(), cod: cod.clone(), img: img.into() })
    }

    /// From an explicit table; every element of `dom` must be listed once.
    pub fn from_pairs(
        dom: &FinSetObj,
        cod: &FinSetObj,
        pairs: impl IntoIterator<Item = (Atom, Atom)>,
    ) -> Result<Self> {
        let mut slots: Vec<Option<Atom>> = vec![None; dom.len()];
        for (a, b) in pairs {
            let i = dom.index_of(&a).ok_or_else(|| Error::NotMember {
                atom: a.to_string(),
                set: dom.name.clone(),
            })?;
            if slots[i].is_some() {
                return Err(Error::ty(format!("{a} assigned twice")));
            }
            slots[i] = Some(b);
        }
        let mut img = Vec::with_capacity(dom.len());
        for (i, s) in slots.into_iter().enumerate() {
            match s {
                Some(b) if cod.contains(&b) => img.push(b),
                Some(b) => {
                    return Err(Error::NotMember { atom: b.to_string(), set: cod.name.clone() })
                }
                None => return Err(Error::ty(format!("no image for {}", dom.elems()[i]))),
            }
        }
        Ok(FinMap { dom: dom.clone(), cod: cod.clone(), img: img.into() })
    }

    /// Internal constructor when the images are already known to be valid.
    pub(crate) fn from_images(dom: &FinSetObj, cod: &FinSetObj, img: Vec<Atom>) -> Self {
        debug_assert_eq!(dom.len(), img.len());
        debug_assert!(img.iter().all(|b| cod.contains(b)));
        FinMap { dom: dom.clone(), cod: cod.clone(), img: img.into() }
    }

    pub fn id(x: &FinSetObj) -> Self {
        FinMap { dom: x.clone(), cod: x.clone(), img: x.elems.clone() }
    }

    pub fn constant(dom: &FinSetObj, cod: &FinSetObj, b: &Atom) -> Result<Self> {
        FinMap::new(dom, cod, |_| b.clone())
    }

    /// The inclusion of a subset.
    pub fn inclusion(sub: &FinSetObj, sup: &FinSetObj) -> Result<Self> {
        FinMap::new(sub, sup, |a| a.clone())
    }

    pub fn dom(&self) -> &FinSetObj {
        &self.dom
    }

    pub fn cod(&self) -> &FinSetObj {
        &self.cod
    }

    pub fn images(&self) -> &[Atom] {
        &self.img
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Atom, &Atom)> {
        self.dom.iter().zip(self.img.iter())
    }

    pub fn get(&self, a: &Atom) -> Option<&Atom> {
        self.dom.index_of(a).map(|i| &self.img[i])
    }

    pub fn apply(&self, a: &Atom) -> Result<Atom> {
        self.get(a).cloned().ok_or_else(|| Error::NotMember {
            atom: a.to_string(),
            set: self.dom.name.clone(),
        })
    }

    /// `g.after(f)` is g∘f.
    pub fn after(&self, f: &FinMap) -> Result<FinMap> {
        if f.cod != self.dom {
            return Err(Error::ty(format!(
                "cannot compose: codomain {} is not domain {}",
                f.cod, self.dom
            )));
        }
        let img: Vec<Atom> = f.img.iter().map(|b| self.img[self.dom.index_of(b).unwrap()].clone()).collect();
        Ok(FinMap { dom: f.dom.clone(), cod: self.cod.clone(), img: img.into() })
    }

    pub fn with_cod(&self, cod: &FinSetObj) -> Result<FinMap> {
        FinMap::new(&self.dom, cod, |a| self.get(a).unwrap().clone())
    }

    pub fn with_dom_name(mut self, name: &str) -> FinMap {
        self.dom.name = name.to_string();
        self
    }

    pub fn image(&self) -> FinSetObj {
        FinSetObj::collect(format!("im {}", self.cod.name), self.img.iter().cloned())
    }

    pub fn fiber(&self, b: &Atom) -> Vec<Atom> {
        self.pairs().filter(|(_, y)| *y == b).map(|(x, _)| x.clone()).collect()
    }

    pub fn is_injective(&self) -> bool {
        let mut v = self.img.to_vec();
        v.sort();
        v.windows(2).all(|w| w[0] != w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.cod.iter().all(|b| self.img.contains(b))
    }

    pub fn is_bijective(&self) -> bool {
        self.dom.len() == self.cod.len() && self.is_injective()
    }

    pub fn inverse(&self) -> Result<FinMap> {
        if !self.is_bijective() {
            return Err(Error::not_a("bijection", format!("{self}")));
        }
        FinMap::from_pairs(&self.cod, &self.dom, self.pairs().map(|(a, b)| (b.clone(), a.clone())))
    }

    /// First element on which two parallel maps disagree.
    pub fn first_difference(&self, other: &FinMap) -> Option<String> {
        if self.dom != other.dom || self.cod != other.cod {
            return Some(format!("type {}→{} vs {}→{}", self.dom, self.cod, other.dom, other.cod));
        }
        self.dom
            .iter()
            .zip(self.img.iter().zip(other.img.iter()))
            .find(|(_, (a, b))| a != b)
            .map(|(x, (a, b))| format!("{x} ↦ {a} vs {b}"))
    }

    /// Every map `dom → cod`, in lexicographic order of image tuples.
    pub fn all(dom: &FinSetObj, cod: &FinSetObj) -> AllMaps {
        AllMaps::new(dom, cod)
    }
}

impl fmt::Display for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (a, b)) in self.pairs().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}↦{b}")?;
        }
        write!(f, "}}")
    }
}

/// Odometer over all maps between two finite sets.
pub struct AllMaps {
    dom: FinSetObj,
    cod: FinSetObj,
    counter: Vec<usize>,
    done: bool,
}

impl AllMaps {
    fn new(dom: &FinSetObj, cod: &FinSetObj) -> Self {
        let done = cod.is_empty() && !dom.is_empty();
        AllMaps { dom: dom.clone(), cod: cod.clone(), counter: vec![0; dom.len()], done }
    }
}

impl Iterator for AllMaps {
    type Item = FinMap;

    fn next(&mut self) -> Option<FinMap> {
        if self.done {
            return None;
        }
        let img: Vec<Atom> = self.counter.iter().map(|&i| self.cod.elems()[i].clone()).collect();
        let out = FinMap { dom: self.dom.clone(), cod: self.cod.clone(), img: img.into() };
        let n = self.cod.len();
        let mut k = self.counter.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.counter[k] += 1;
            if self.counter[k] < n {
                break;
            }
            self.counter[k] = 0;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicates_rejected() {
        assert!(FinSetObj::new("A", vec![Atom::sym("a"), Atom::sym("a")]).is_err());
    }

    #[test]
    fn canonical_order() {
        let a = FinSetObj::of_syms("A", &["b", "a"]);
        let b = FinSetObj::of_syms("B", &["a", "b"]);
        assert_eq!(a, b);
    }

    #[test]
    fn map_counts() {
        let a = FinSetObj::range("A", 2);
        let b = FinSetObj::range("B", 3);
        assert_eq!(FinMap::all(&a, &b).count(), 9);
        assert_eq!(FinMap::all(&FinSetObj::empty("E"), &b).count(), 1);
        assert_eq!(FinMap::all(&a, &FinSetObj::empty("E")).count(), 0);
    }

    #[test]
    fn images_must_land_in_codomain() {
        let a = FinSetObj::range("A", 2);
        assert!(FinMap::new(&a, &a, |x| match x {
            Atom::Int(n) => Atom::Int(n + 1),
            _ => unreachable!(),
        })
        .is_err());
    }

    #[test]
    fn composition() {
        let a = FinSetObj::range("A", 3);
        let two = FinSetObj::range("2", 2);
        let f = FinMap::new(&a, &two, |x| if *x == Atom::Int(2) { Atom::Int(1) } else { Atom::Int(0) }).unwrap();
        let g = FinMap::new(&two, &two, |x| if *x == Atom::Int(0) { Atom::Int(1) } else { Atom::Int(0) }).unwrap();
        let gf = g.after(&f).unwrap();
        assert_eq!(gf.images(), &[Atom::Int(1), Atom::Int(1), Atom::Int(0)]);
        assert!(f.after(&g).is_err());
    }
}
