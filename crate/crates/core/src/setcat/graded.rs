use super::atom::Atom;
use super::finset::{FinMap, FinSetObj};
use crate::error::{Error, Result};

/// Words over a finite alphabet, graded by length. Only this constructor is
/// registered, so each piece is finite by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSet {
    pub base: FinSetObj,
    pub description: String,
}

impl GradedSet {
    pub fn words(base: &FinSetObj) -> Self {
        GradedSet { base: base.clone(), description: format!("words over {}", base.name) }
    }

    /// Words of length exactly `n`.
    pub fn piece(&self, n: usize) -> FinSetObj {
        let mut layer: Vec<Vec<Atom>> = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::with_capacity(layer.len() * self.base.len());
            for w in &layer {
                for a in self.base.iter() {
                    let mut v = w.clone();
                    v.push(a.clone());
                    next.push(v);
                }
            }
            layer = next;
        }
        FinSetObj::collect(format!("{}^{n}", self.base.name), layer.into_iter().map(Atom::Word))
    }

    pub fn contains(&self, a: &Atom) -> bool {
        a.as_word().is_some_and(|v| v.iter().all(|x| self.base.contains(x)))
    }

    pub fn grade(&self, a: &Atom) -> Option<usize> {
        if self.contains(a) {
            a.as_word().map(|v| v.len())
        } else {
            None
        }
    }
}

/// All words over `alphabet` whose size (see [`Atom::size`]) is at most `bound`.
pub fn bounded_words(alphabet: &FinSetObj, bound: usize) -> FinSetObj {
    let sized: Vec<(Atom, usize)> = alphabet.iter().map(|a| (a.clone(), a.size())).collect();
    let mut out = vec![Atom::Word(Vec::new())];
    let mut frontier: Vec<(Vec<Atom>, usize)> = vec![(Vec::new(), 0)];
    while let Some((w, used)) = frontier.pop() {
        for (a, s) in &sized {
            if used + s <= bound {
                let mut v = w.clone();
                v.push(a.clone());
                out.push(Atom::Word(v.clone()));
                frontier.push((v, used + s));
            }
        }
    }
    FinSetObj::collect(format!("M{}({})", bound, alphabet.name), out)
}

/// A map from a finite set into a graded set, recording the grade of each image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMap {
    pub dom: FinSetObj,
    pub cod: GradedSet,
    table: Vec<Atom>,
}

impl GradedMap {
    pub fn new(dom: &FinSetObj, cod: &GradedSet, f: impl Fn(&Atom) -> Atom) -> Result<Self> {
        let mut table = Vec::new();
        for a in dom.iter() {
            let w = f(a);
            if !cod.contains(&w) {
                return Err(Error::NotMember { atom: w.to_string(), set: cod.description.clone() });
            }
            table.push(w);
        }
        Ok(GradedMap { dom: dom.clone(), cod: cod.clone(), table })
    }

    /// Reads a map whose images are words as a graded map.
    pub fn from_finmap(f: &FinMap, alphabet: &FinSetObj) -> Result<Self> {
        GradedMap::new(f.dom(), &GradedSet::words(alphabet), |a| f.get(a).unwrap().clone())
    }

    pub fn apply(&self, a: &Atom) -> Option<&Atom> {
        self.dom.index_of(a).map(|i| &self.table[i])
    }

    pub fn grade(&self, a: &Atom) -> Option<usize> {
        self.apply(a).and_then(|w| self.cod.grade(w))
    }

    pub fn max_grade(&self) -> usize {
        self.table.iter().filter_map(|w| self.cod.grade(w)).max().unwrap_or(0)
    }
}

/// Pullback of `delta: X → M(C)` along `M(base)` where `base: B → C`:
/// P = {(x, w) : delta(x) = M(base)(w)}. `pr2` lands in the finite set of
/// words that actually occur.
#[derive(Debug, Clone)]
pub struct GradedFiber {
    pub obj: FinSetObj,
    pub pr1: FinMap,
    pub pr2: FinMap,
}

pub fn graded_pullback_fiber(delta: &GradedMap, base: &FinMap) -> Result<GradedFiber> {
    if delta.cod.base != *base.cod() {
        return Err(Error::ty(format!(
            "fibre over words in {} requested for a map into {}",
            delta.cod.base,
            base.cod()
        )));
    }
    let mut elems = Vec::new();
    let mut words = Vec::new();
    for x in delta.dom.iter() {
        let target = delta.apply(x).unwrap().as_word().unwrap();
        let choices: Vec<Vec<Atom>> = target.iter().map(|c| base.fiber(c)).collect();
        let mut partial: Vec<Vec<Atom>> = vec![Vec::new()];
        for opts in &choices {
            let mut next = Vec::new();
            for p in &partial {
                for o in opts {
                    let mut v = p.clone();
                    v.push(o.clone());
                    next.push(v);
                }
            }
            partial = next;
        }
        for w in partial {
            let w = Atom::Word(w);
            words.push(w.clone());
            elems.push(Atom::pair(x.clone(), w));
        }
    }
    let obj = FinSetObj::collect(format!("{}×M{}", delta.dom.name, base.dom().name), elems);
    let wset = FinSetObj::collect(format!("M{}", base.dom().name), words);
    let pr1 = FinMap::new(&obj, &delta.dom, |p| p.proj(0).unwrap().clone())?;
    let pr2 = FinMap::new(&obj, &wset, |p| p.proj(1).unwrap().clone())?;
    Ok(GradedFiber { obj, pr1, pr2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pieces() {
        let ab = FinSetObj::of_syms("X", &["a", "b"]);
        let g = GradedSet::words(&ab);
        assert_eq!(g.piece(2).len(), 4);
        assert_eq!(g.piece(0).len(), 1);
        assert_eq!(GradedSet::words(&FinSetObj::empty("E")).piece(0).len(), 1);
        assert_eq!(GradedSet::words(&FinSetObj::empty("E")).piece(1).len(), 0);
    }

    #[test]
    fn bounded_words_of_letters() {
        let ab = FinSetObj::of_syms("X", &["a", "b"]);
        assert_eq!(bounded_words(&ab, 2).len(), 1 + 2 + 4);
        assert_eq!(bounded_words(&FinSetObj::empty("E"), 4).len(), 1);
    }

    #[test]
    fn fibre_over_grade_zero() {
        let x = FinSetObj::of_syms("X", &["p", "q"]);
        let c = FinSetObj::of_syms("C", &["*"]);
        let delta = GradedMap::new(&x, &GradedSet::words(&c), |_| Atom::word(vec![])).unwrap();
        let base = FinMap::constant(&FinSetObj::of_syms("B", &["u", "v"]), &c, &Atom::sym("*")).unwrap();
        let fib = graded_pullback_fiber(&delta, &base).unwrap();
        assert_eq!(fib.obj.len(), 2);
    }

    #[test]
    fn fibre_over_grade_two() {
        let x = FinSetObj::of_syms("X", &["m"]);
        let c = FinSetObj::of_syms("C", &["*"]);
        let star = Atom::sym("*");
        let delta =
            GradedMap::new(&x, &GradedSet::words(&c), |_| Atom::word(vec![star.clone(), star.clone()]))
                .unwrap();
        let base = FinMap::constant(&FinSetObj::of_syms("B", &["a", "b"]), &c, &star).unwrap();
        let fib = graded_pullback_fiber(&delta, &base).unwrap();
        assert_eq!(fib.obj.len(), 4);
        assert_eq!(delta.max_grade(), 2);
    }
}
