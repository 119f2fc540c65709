use super::schema::*;
use crate::catkit::{FinSetCat, InternalCategory, InternalFunctor, ReflexiveGraph, SliceMor, SliceObj};
use crate::error::{Error, Result};
use crate::monadkit::{validate_algebra, Algebra, FinMonoid, Identity, List, Maybe, Monad, TxMonad, Writer};
use crate::setcat::{Atom, FinMap, FinSetObj};
use crate::suites::Bounds;
use crate::tcat::{TCategory, TGraph};
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Debug, Clone)]
pub enum MonadEntry {
    Identity(Identity<FinSetCat>),
    Maybe(Maybe),
    Writer(Writer),
    List(List),
    Tx { category: String, monad: TxMonad },
}

/// An algebra, tagged with the kind of monad it lives over.
#[derive(Debug, Clone)]
pub enum AlgebraEntry {
    Identity(Algebra<Identity<FinSetCat>>),
    Maybe(Algebra<Maybe>),
    Writer(Algebra<Writer>),
    List(Algebra<List>),
    Tx(Algebra<TxMonad>),
}

/// T-categories are stored for set-based monads only.
#[derive(Debug, Clone)]
pub enum TCatEntry {
    Identity(TCategory<Identity<FinSetCat>>),
    Maybe(TCategory<Maybe>),
    Writer(TCategory<Writer>),
    List(TCategory<List>),
}

#[derive(Debug, Clone, Default)]
pub struct Workspace {
    pub sets: BTreeMap<String, FinSetObj>,
    pub maps: BTreeMap<String, FinMap>,
    pub categories: BTreeMap<String, InternalCategory>,
    pub monads: BTreeMap<String, MonadEntry>,
    pub algebras: BTreeMap<String, (String, AlgebraEntry)>,
    pub tcategories: BTreeMap<String, (String, TCatEntry)>,
    pub functors: BTreeMap<String, FunctorEntry>,
    /// Translated structures with no place in the schema, by description.
    pub derived: BTreeMap<String, String>,
}

#[derive(Debug, Clone)]
pub struct FunctorEntry {
    pub source: String,
    pub target: String,
    pub functor: InternalFunctor,
}

fn atom(s: &str) -> Result<Atom> {
    s.parse()
}

fn atoms(v: &[String]) -> Result<Vec<Atom>> {
    v.iter().map(|s| atom(s)).collect()
}

fn table_map(dom: &FinSetObj, cod: &FinSetObj, t: &Table) -> Result<FinMap> {
    let pairs = t.iter().map(|(k, v)| Ok((atom(k)?, atom(v)?))).collect::<Result<Vec<_>>>()?;
    FinMap::from_pairs(dom, cod, pairs)
}

fn to_table(f: &FinMap) -> Table {
    f.pairs().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

fn to_strings(x: &FinSetObj) -> Vec<String> {
    x.iter().map(Atom::to_string).collect()
}

/// Byte offset of a 1-based line and column.
fn offset(text: &str, line: usize, column: usize) -> usize {
    text.split_inclusive('\n').take(line.saturating_sub(1)).map(str::len).sum::<usize>() + column.saturating_sub(1)
}

pub fn parse_document(text: &str) -> Result<Document> {
    if text.trim().is_empty() {
        return Ok(Document::default());
    }
    serde_json::from_str(text).map_err(|e| Error::Parse { pos: offset(text, e.line(), e.column()), msg: e.to_string() })
}

fn merge<V>(into: &mut BTreeMap<String, V>, from: BTreeMap<String, V>, kind: &str) -> Result<()> {
    for (k, v) in from {
        if into.insert(k.clone(), v).is_some() {
            return Err(Error::Input(format!("{kind} {k} is defined twice")));
        }
    }
    Ok(())
}

/// Reads, merges and validates the documents.
pub fn load_workspace<P: AsRef<Path>>(paths: &[P], bounds: &Bounds) -> Result<Workspace> {
    let mut doc = Document::default();
    for p in paths {
        let p = p.as_ref();
        let text = std::fs::read_to_string(p).map_err(|e| Error::Input(format!("{}: {e}", p.display())))?;
        let d = parse_document(&text).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse { pos, msg: format!("{}: {msg}", p.display()) },
            e => e,
        })?;
        merge(&mut doc.set, d.set, "set")?;
        merge(&mut doc.map, d.map, "map")?;
        merge(&mut doc.category, d.category, "category")?;
        merge(&mut doc.monad, d.monad, "monad")?;
        merge(&mut doc.algebra, d.algebra, "algebra")?;
        merge(&mut doc.tcategory, d.tcategory, "tcategory")?;
        merge(&mut doc.functor, d.functor, "functor")?;
    }
    Workspace::from_document(&doc, bounds)
}

impl Workspace {
    /// Resolves and validates every entry; reports the first failure of
    /// each structure that fails.
    pub fn from_document(doc: &Document, bounds: &Bounds) -> Result<Workspace> {
        let mut ws = Workspace::default();
        let mut problems: Vec<(String, Error)> = Vec::new();
        for (name, elems) in &doc.set {
            match atoms(elems).and_then(|v| FinSetObj::new(name.clone(), v)) {
                Ok(s) => {
                    ws.sets.insert(name.clone(), s);
                }
                Err(e) => problems.push((format!("set {name}"), e)),
            }
        }
        for (name, m) in &doc.map {
            let r = ws.set_ref(&m.dom, "dom").and_then(|d| {
                let c = ws.set_ref(&m.cod, "cod")?;
                table_map(&d, &c, &m.table)
            });
            match r {
                Ok(f) => {
                    ws.maps.insert(name.clone(), f);
                }
                Err(e) => problems.push((format!("map {name}"), e)),
            }
        }
        for (name, c) in &doc.category {
            match category_from_doc(name, c) {
                Ok(c) => {
                    ws.categories.insert(name.clone(), c);
                }
                Err(e) => problems.push((format!("category {name}"), e)),
            }
        }
        for (name, m) in &doc.monad {
            match ws.monad_from_doc(m, bounds) {
                Ok(m) => {
                    ws.monads.insert(name.clone(), m);
                }
                Err(e) => problems.push((format!("monad {name}"), e)),
            }
        }
        for (name, a) in &doc.algebra {
            match ws.algebra_from_doc(name, a) {
                Ok(a) => {
                    ws.algebras.insert(name.clone(), (a_monad(&doc.algebra[name]), a));
                }
                Err(e) => problems.push((format!("algebra {name}"), e)),
            }
        }
        for (name, t) in &doc.tcategory {
            match ws.tcat_from_doc(name, t) {
                Ok(c) => {
                    ws.tcategories.insert(name.clone(), (t.monad.clone(), c));
                }
                Err(e) => problems.push((format!("tcategory {name}"), e)),
            }
        }
        for (name, f) in &doc.functor {
            match ws.functor_from_doc(f) {
                Ok(func) => {
                    ws.functors.insert(
                        name.clone(),
                        FunctorEntry { source: f.source.clone(), target: f.target.clone(), functor: func },
                    );
                }
                Err(e) => problems.push((format!("functor {name}"), e)),
            }
        }
        match problems.len() {
            0 => Ok(ws),
            1 => {
                let (what, e) = problems.pop().unwrap();
                Err(match e {
                    Error::Parse { pos, msg } => Error::Parse { pos, msg: format!("{what}: {msg}") },
                    Error::Unresolved(n) => Error::Unresolved(format!("{n} (in {what})")),
                    e => Error::Input(format!("{what}: {e}")),
                })
            }
            _ => Err(Error::Input(problems.iter().map(|(w, e)| format!("{w}: {e}")).collect::<Vec<_>>().join("\n"))),
        }
    }

    fn set_ref(&self, r: &SetRef, role: &str) -> Result<FinSetObj> {
        match r {
            SetRef::Name(n) => self.sets.get(n).cloned().ok_or_else(|| Error::Unresolved(format!("set {n}"))),
            SetRef::Elems(v) => FinSetObj::new(role, atoms(v)?),
        }
    }

    pub fn category(&self, name: &str) -> Result<&InternalCategory> {
        self.categories.get(name).ok_or_else(|| Error::Unresolved(format!("category {name}")))
    }

    pub fn monad(&self, name: &str) -> Result<&MonadEntry> {
        self.monads.get(name).ok_or_else(|| Error::Unresolved(format!("monad {name}")))
    }

    fn monad_from_doc(&self, m: &MonadDoc, bounds: &Bounds) -> Result<MonadEntry> {
        Ok(match m {
            MonadDoc::Identity => MonadEntry::Identity(Identity { amb: FinSetCat }),
            MonadDoc::Maybe => MonadEntry::Maybe(Maybe::new()),
            MonadDoc::Writer { monoid } => {
                let carrier = FinSetObj::new("M", atoms(&monoid.carrier)?)?;
                let mut table = BTreeMap::new();
                for (k, v) in &monoid.table {
                    let p = atom(k)?;
                    table.insert((p.proj(0)?.clone(), p.proj(1)?.clone()), atom(v)?);
                }
                for a in carrier.iter() {
                    for b in carrier.iter() {
                        if !table.contains_key(&(a.clone(), b.clone())) {
                            return Err(Error::Input(format!("monoid table has no entry for ({a},{b})")));
                        }
                    }
                }
                let mo = FinMonoid::new("M", carrier, atom(&monoid.unit)?, |a, b| table[&(a.clone(), b.clone())].clone())?;
                MonadEntry::Writer(Writer::new(mo))
            }
            MonadDoc::List { bound } => MonadEntry::List(List::new(bound.unwrap_or(bounds.grade_bound))),
            MonadDoc::Tx { category } => {
                MonadEntry::Tx { category: category.clone(), monad: TxMonad::new(self.category(category)?)? }
            }
        })
    }

    fn algebra_from_doc(&self, name: &str, a: &AlgebraDoc) -> Result<AlgebraEntry> {
        let carrier = self.set_ref(&a.carrier, name)?;
        fn set_alg<M: Monad<A = FinSetCat>>(m: &M, x: FinSetObj, t: &Table) -> Result<Algebra<M>> {
            let xi = table_map(&m.obj(&x)?, &x, t)?;
            let alg = Algebra::new(m, x, xi)?;
            check_cert(validate_algebra(m, &alg)?)?;
            Ok(alg)
        }
        Ok(match self.monad(&a.monad)? {
            MonadEntry::Identity(m) => AlgebraEntry::Identity(set_alg(m, carrier, &a.structure)?),
            MonadEntry::Maybe(m) => AlgebraEntry::Maybe(set_alg(m, carrier, &a.structure)?),
            MonadEntry::Writer(m) => AlgebraEntry::Writer(set_alg(m, carrier, &a.structure)?),
            MonadEntry::List(m) => AlgebraEntry::List(set_alg(m, carrier, &a.structure)?),
            MonadEntry::Tx { monad, .. } => {
                let over = a.over.as_ref().ok_or_else(|| Error::Input("a tx algebra needs an `over` table".into()))?;
                let h = SliceObj::new(table_map(&carrier, &monad.cat.x0, over)?);
                let th = monad.obj(&h)?;
                let xi = SliceMor::new(&th, &h, table_map(&th.carrier, &h.carrier, &a.structure)?)?;
                let alg = Algebra::new(monad, h, xi)?;
                check_cert(validate_algebra(monad, &alg)?)?;
                AlgebraEntry::Tx(alg)
            }
        })
    }

    fn tcat_from_doc(&self, name: &str, t: &TCategoryDoc) -> Result<TCatEntry> {
        let x0 = self.set_ref(&t.objects, "X0")?.renamed("X0");
        let x1 = self.set_ref(&t.arrows, "X1")?.renamed("X1");
        fn build<M: Monad<A = FinSetCat> + Clone>(
            m: &M,
            name: &str,
            x0: &FinSetObj,
            x1: &FinSetObj,
            t: &TCategoryDoc,
        ) -> Result<TCategory<M>> {
            let d0 = table_map(x1, x0, &t.d0)?;
            let delta1 = table_map(x1, &m.obj(x0)?, &t.delta1)?;
            let s0 = table_map(x0, x1, &t.s0)?;
            let g = TGraph::new(m.clone(), d0, delta1, s0)?;
            let (x2, _, _) = g.x2()?;
            let d1_1 = table_map(&x2, x1, &t.compose)?;
            TCategory::new(name, g, d1_1)
        }
        Ok(match self.monad(&t.monad)? {
            MonadEntry::Identity(m) => TCatEntry::Identity(build(m, name, &x0, &x1, t)?),
            MonadEntry::Maybe(m) => TCatEntry::Maybe(build(m, name, &x0, &x1, t)?),
            MonadEntry::Writer(m) => TCatEntry::Writer(build(m, name, &x0, &x1, t)?),
            MonadEntry::List(m) => TCatEntry::List(build(m, name, &x0, &x1, t)?),
            MonadEntry::Tx { .. } => {
                return Err(Error::Input("T-categories over tx monads are entered as functors".into()))
            }
        })
    }

    fn functor_from_doc(&self, f: &FunctorDoc) -> Result<InternalFunctor> {
        let (s, t) = (self.category(&f.source)?, self.category(&f.target)?);
        let func = InternalFunctor::new(s, t, table_map(&s.x0, &t.x0, &f.objects)?, table_map(&s.x1, &t.x1, &f.arrows)?)?;
        check_cert(func.validate())?;
        Ok(func)
    }

    /// The canonical document: every set inline where it is not shared,
    /// every table complete.
    pub fn to_document(&self) -> Document {
        let mut d = Document::default();
        for (n, s) in &self.sets {
            d.set.insert(n.clone(), to_strings(s));
        }
        let set_ref = |x: &FinSetObj| match self.sets.iter().find(|(_, s)| *s == x) {
            Some((n, _)) => SetRef::Name(n.clone()),
            None => SetRef::Elems(to_strings(x)),
        };
        for (n, f) in &self.maps {
            d.map.insert(n.clone(), MapDoc { dom: set_ref(f.dom()), cod: set_ref(f.cod()), table: to_table(f) });
        }
        for (n, c) in &self.categories {
            d.category.insert(n.clone(), category_to_doc(c));
        }
        for (n, m) in &self.monads {
            d.monad.insert(n.clone(), monad_to_doc(m));
        }
        for (n, (monad, a)) in &self.algebras {
            let doc = match a {
                AlgebraEntry::Identity(a) => set_algebra_doc(monad, &a.carrier, &a.xi, &set_ref),
                AlgebraEntry::Maybe(a) => set_algebra_doc(monad, &a.carrier, &a.xi, &set_ref),
                AlgebraEntry::Writer(a) => set_algebra_doc(monad, &a.carrier, &a.xi, &set_ref),
                AlgebraEntry::List(a) => set_algebra_doc(monad, &a.carrier, &a.xi, &set_ref),
                AlgebraEntry::Tx(a) => AlgebraDoc {
                    monad: monad.clone(),
                    carrier: set_ref(&a.carrier.carrier),
                    over: Some(to_table(&a.carrier.over)),
                    structure: to_table(&a.xi.map),
                },
            };
            d.algebra.insert(n.clone(), doc);
        }
        for (n, (monad, c)) in &self.tcategories {
            let doc = match c {
                TCatEntry::Identity(c) => tcat_doc(monad, c, &set_ref),
                TCatEntry::Maybe(c) => tcat_doc(monad, c, &set_ref),
                TCatEntry::Writer(c) => tcat_doc(monad, c, &set_ref),
                TCatEntry::List(c) => tcat_doc(monad, c, &set_ref),
            };
            d.tcategory.insert(n.clone(), doc);
        }
        for (n, f) in &self.functors {
            d.functor.insert(
                n.clone(),
                FunctorDoc {
                    source: f.source.clone(),
                    target: f.target.clone(),
                    objects: to_table(&f.functor.f0),
                    arrows: to_table(&f.functor.f1),
                },
            );
        }
        d
    }

    /// Every name in use, with its kind.
    pub fn names(&self) -> Vec<(String, &'static str)> {
        let mut out = Vec::new();
        out.extend(self.sets.keys().map(|k| (k.clone(), "set")));
        out.extend(self.maps.keys().map(|k| (k.clone(), "map")));
        out.extend(self.categories.keys().map(|k| (k.clone(), "category")));
        out.extend(self.monads.keys().map(|k| (k.clone(), "monad")));
        out.extend(self.algebras.keys().map(|k| (k.clone(), "algebra")));
        out.extend(self.tcategories.keys().map(|k| (k.clone(), "tcategory")));
        out.extend(self.functors.keys().map(|k| (k.clone(), "functor")));
        out.extend(self.derived.keys().map(|k| (k.clone(), "derived")));
        out
    }

    pub fn is_free(&self, name: &str) -> bool {
        !self.names().iter().any(|(n, _)| n == name)
    }
}

fn a_monad(a: &AlgebraDoc) -> String {
    a.monad.clone()
}

fn check_cert(c: crate::Certificate) -> Result<()> {
    match c.first_failure() {
        Some(f) => Err(Error::law(f.name.clone(), f.witness.clone().unwrap_or_default())),
        None => Ok(()),
    }
}

fn category_from_doc(name: &str, c: &CategoryDoc) -> Result<InternalCategory> {
    let x0 = FinSetObj::new("X0", atoms(&c.objects)?)?;
    let arrows = c.arrows.keys().map(|k| atom(k)).collect::<Result<Vec<_>>>()?;
    let x1 = FinSetObj::new("X1", arrows)?;
    let mut d1 = Table::new();
    let mut d0 = Table::new();
    for (f, [dom, cod]) in &c.arrows {
        d1.insert(f.clone(), dom.clone());
        d0.insert(f.clone(), cod.clone());
    }
    let g = ReflexiveGraph::new(table_map(&x1, &x0, &d0)?, table_map(&x1, &x0, &d1)?, table_map(&x0, &x1, &c.identities)?)?;
    let x2 = g.x2();
    let mut given = BTreeMap::new();
    for (k, v) in &c.compose {
        let p = atom(k)?;
        if !x2.contains(&p) {
            return Err(Error::ty(format!("{k} is not a composable pair")));
        }
        given.insert(p, atom(v)?);
    }
    let is_id = |f: &Atom| g.s0.images().contains(f);
    let m = FinMap::try_new(&x2, &g.x1, |p| {
        let (f, h) = (p.proj(0)?, p.proj(1)?);
        if let Some(v) = given.get(p) {
            Ok(v.clone())
        } else if is_id(f) {
            Ok(h.clone())
        } else if is_id(h) {
            Ok(f.clone())
        } else {
            Err(Error::Input(format!("no composite given for ({f},{h})")))
        }
    })?;
    let cat = InternalCategory::on_graph(name, &g, m)?;
    check_cert(cat.validate())?;
    Ok(cat)
}

pub fn category_to_doc(c: &InternalCategory) -> CategoryDoc {
    CategoryDoc {
        objects: to_strings(&c.x0),
        arrows: c.x1.iter().map(|f| (f.to_string(), [c.dom_of(f).to_string(), c.cod_of(f).to_string()])).collect(),
        identities: to_table(&c.s0),
        compose: to_table(&c.m),
    }
}

fn monad_to_doc(m: &MonadEntry) -> MonadDoc {
    match m {
        MonadEntry::Identity(_) => MonadDoc::Identity,
        MonadEntry::Maybe(_) => MonadDoc::Maybe,
        MonadEntry::Writer(w) => {
            let mo = &w.monoid;
            MonadDoc::Writer {
                monoid: MonoidDoc {
                    carrier: to_strings(&mo.carrier),
                    unit: mo.unit.to_string(),
                    table: mo
                        .carrier
                        .iter()
                        .flat_map(|a| mo.carrier.iter().map(move |b| (a, b)))
                        .map(|(a, b)| (Atom::pair(a.clone(), b.clone()).to_string(), mo.mul(a, b).to_string()))
                        .collect(),
                },
            }
        }
        MonadEntry::List(l) => MonadDoc::List { bound: Some(l.bound) },
        MonadEntry::Tx { category, .. } => MonadDoc::Tx { category: category.clone() },
    }
}

fn set_algebra_doc(monad: &str, x: &FinSetObj, xi: &FinMap, set_ref: &dyn Fn(&FinSetObj) -> SetRef) -> AlgebraDoc {
    AlgebraDoc { monad: monad.into(), carrier: set_ref(x), over: None, structure: to_table(xi) }
}

fn tcat_doc<M: Monad<A = FinSetCat>>(monad: &str, c: &TCategory<M>, set_ref: &dyn Fn(&FinSetObj) -> SetRef) -> TCategoryDoc {
    TCategoryDoc {
        monad: monad.into(),
        objects: set_ref(c.x0()),
        arrows: set_ref(c.x1()),
        d0: to_table(c.d0()),
        delta1: to_table(c.delta1()),
        s0: to_table(c.s0()),
        compose: to_table(&c.d1_1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offsets_count_bytes_across_lines() {
        assert_eq!(offset("ab\ncd", 2, 2), 4);
        assert_eq!(offset("x", 1, 1), 0);
    }

    #[test]
    fn identity_composites_are_filled_in() {
        let doc = r#"{"category": {"one": {"objects": ["*"], "arrows": {"i": ["*", "*"]}, "identities": {"*": "i"}}}}"#;
        let ws = Workspace::from_document(&parse_document(doc).unwrap(), &Bounds::default()).unwrap();
        let c = &ws.categories["one"];
        assert_eq!(c.m.images(), &[Atom::sym("i")]);
    }

    #[test]
    fn missing_composites_are_reported() {
        let doc = r#"{"category": {"loop": {"objects": ["*"], "arrows": {"i": ["*", "*"], "e": ["*", "*"]},
            "identities": {"*": "i"}}}}"#;
        let e = Workspace::from_document(&parse_document(doc).unwrap(), &Bounds::default()).unwrap_err();
        assert!(e.to_string().contains("no composite given for (e,e)"), "{e}");
    }

    #[test]
    fn duplicate_names_across_documents_are_rejected() {
        let dir = std::env::temp_dir().join(format!("workbench-dup-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let (a, b) = (dir.join("a.json"), dir.join("b.json"));
        std::fs::write(&a, r#"{"set": {"S": ["x"]}}"#).unwrap();
        std::fs::write(&b, r#"{"set": {"S": ["y"]}}"#).unwrap();
        let e = load_workspace(&[a, b], &Bounds::default()).unwrap_err();
        assert!(e.to_string().contains("set S is defined twice"), "{e}");
    }

    #[test]
    fn writer_monoid_tables_must_be_complete() {
        let doc = r#"{"monad": {"w": {"builtin": "writer", "monoid": {"carrier": ["1", "z"], "unit": "1", "table": {"(1,1)": "1"}}}}}"#;
        let e = Workspace::from_document(&parse_document(doc).unwrap(), &Bounds::default()).unwrap_err();
        assert!(e.to_string().contains("no entry"), "{e}");
    }
}
