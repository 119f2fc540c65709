use super::report::{Report, Section};
use super::workspace::{AlgebraEntry, FunctorEntry, MonadEntry, TCatEntry, Workspace};
use crate::catkit::{
    category_structures, dec, is_discrete_cofibration, is_discrete_fibration, is_groupoid, probe_set, small_categories,
    FinSetCat, InternalCategory, SliceObj,
};
use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::kleisli::KlCalculus;
use crate::monadkit::{
    algebra_to_dfib, algebras_on, certify_cartesian, dfib_to_algebra, g_algebra_to_groupoid, groupoid_to_g_algebra,
    validate_algebra, validate_monad, FinMonoid, Identity, List, Maybe, Monad, TxMonad, Writer, CONSERVATIVE,
    HALF, HYPER,
};
use crate::setcat::FinMap;
use crate::suites::{discrete_fibrations_with_objects, run_suite, suite_names, Bounds};
use crate::tcat::{
    build_tcategory, cat_embed, cat_to_gcat, discrete_tfibrations_over, functor_to_tx_tcat, gcat_to_cat, is_operad,
    is_t_groupoid, r_coreflection, r_counit, tc_embed_algebra, tcat_from_kl, tcat_to_kl, tx_tcat_to_functor,
    validate_kl_category, validate_tfunctor, TCategory,
};

/// The translations `translate` knows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Theorem {
    /// T-category to internal category in the Kleisli category
    Kleisli,
    /// internal category to G-category
    GCategory,
    /// groupoid to G-algebra
    GAlgebra,
    /// functor into X to TX-category
    Tx,
    /// TX-algebra to discrete fibration
    Dfib,
    /// discrete fibration to TX-algebra
    Algebra,
    /// internal category to T-category
    Embed,
    /// T-algebra to T-category
    AlgebraTcat,
    /// T-category to its category of unary arrows
    Coreflection,
    /// internal category to its shift, with the counit
    Dec,
}

/// What `enumerate` counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum What {
    Categories,
    Groupoids,
    Dfibs,
    Algebras,
    Tfibrations,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Validate { name: Option<String> },
    Certify { monad: String },
    Translate { theorem: Theorem, input: String, as_name: Option<String>, monad: Option<String> },
    Enumerate { what: What, objects: usize, arrows: usize, size: usize, over: Option<String>, monad: Option<String>, list: bool },
    Suite { name: Option<String> },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Certify { .. } => "certify",
            Command::Translate { .. } => "translate",
            Command::Enumerate { .. } => "enumerate",
            Command::Suite { .. } => "suite",
        }
    }
}

pub const MAX_OBJECTS: usize = 3;
pub const MAX_ARROWS: usize = 6;
pub const MAX_SIZE: usize = 6;

fn bound(what: &str, n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::Input(format!("bound exceeded: {what} {n} > {max}")));
    }
    Ok(())
}

/// Dispatches over the monad kinds that live on finite sets; `$tx` handles
/// the monad of an internal category.
macro_rules! on_monad {
    ($e:expr, $m:ident => $body:expr, $t:ident => $tx:expr) => {
        match $e {
            MonadEntry::Identity($m) => $body,
            MonadEntry::Maybe($m) => $body,
            MonadEntry::Writer($m) => $body,
            MonadEntry::List($m) => $body,
            MonadEntry::Tx { monad: $t, .. } => $tx,
        }
    };
}

macro_rules! on_tcat {
    ($e:expr, $c:ident => $body:expr) => {
        match $e {
            TCatEntry::Identity($c) => $body,
            TCatEntry::Maybe($c) => $body,
            TCatEntry::Writer($c) => $body,
            TCatEntry::List($c) => $body,
        }
    };
}

pub fn run(cmd: &Command, ws: &mut Workspace, b: &Bounds) -> Result<Report> {
    let mut r = Report::new(cmd.name());
    match cmd {
        Command::Validate { name } => validate(&mut r, ws, name.as_deref(), b)?,
        Command::Certify { monad } => certify(&mut r, ws, monad, b)?,
        Command::Translate { theorem, input, as_name, monad } => {
            translate(&mut r, ws, *theorem, input, as_name.as_deref(), monad.as_deref(), b)?
        }
        Command::Enumerate { what, objects, arrows, size, over, monad, list } => {
            let s = enumerate(ws, *what, *objects, *arrows, *size, over.as_deref(), monad.as_deref(), *list, b)?;
            r.push(s);
        }
        Command::Suite { name } => {
            let names: Vec<&str> = match name {
                Some(n) => vec![n.as_str()],
                None => suite_names(),
            };
            for n in names {
                let s = run_suite(n, b)?;
                let mut sec = Section::from_cert(format!("{} ({})", s.name, s.title), s.checks);
                sec.counts = s.counts;
                r.push(sec);
            }
        }
    }
    Ok(r)
}

fn validate(r: &mut Report, ws: &Workspace, only: Option<&str>, b: &Bounds) -> Result<()> {
    if let Some(n) = only {
        if ws.is_free(n) {
            return Err(Error::Unresolved(n.into()));
        }
    }
    let wanted = |n: &str| only.is_none_or(|o| o == n);
    for (n, s) in ws.sets.iter().filter(|(n, _)| wanted(n)) {
        let mut sec = Section::new(format!("set {n}"));
        sec.count("elements", s.len());
        r.push(sec);
    }
    for (n, f) in ws.maps.iter().filter(|(n, _)| wanted(n)) {
        let mut sec = Section::new(format!("map {n}"));
        sec.count("domain", f.dom().len()).count("codomain", f.cod().len());
        sec.property("injective", f.is_injective()).property("surjective", f.is_surjective());
        r.push(sec);
    }
    for (n, c) in ws.categories.iter().filter(|(n, _)| wanted(n)) {
        let mut sec = Section::from_cert(format!("category {n}"), c.validate());
        sec.count("objects", c.x0.len()).count("arrows", c.x1.len());
        sec.property("groupoid", is_groupoid(c));
        r.push(sec);
    }
    for (n, m) in ws.monads.iter().filter(|(n, _)| wanted(n)) {
        let cert = on_monad!(m, m => validate_monad(m, b.probe_size)?, t => validate_monad(t, b.probe_size)?);
        let mut sec = Section::from_cert(format!("monad {n}"), cert);
        sec.count("probe size", b.probe_size);
        r.push(sec);
    }
    for (n, (monad, a)) in ws.algebras.iter().filter(|(n, _)| wanted(n)) {
        let m = ws.monad(monad)?;
        let cert = match (m, a) {
            (MonadEntry::Identity(m), AlgebraEntry::Identity(a)) => validate_algebra(m, a)?,
            (MonadEntry::Maybe(m), AlgebraEntry::Maybe(a)) => validate_algebra(m, a)?,
            (MonadEntry::Writer(m), AlgebraEntry::Writer(a)) => validate_algebra(m, a)?,
            (MonadEntry::List(m), AlgebraEntry::List(a)) => validate_algebra(m, a)?,
            (MonadEntry::Tx { monad: m, .. }, AlgebraEntry::Tx(a)) => validate_algebra(m, a)?,
            _ => return Err(Error::ty(format!("algebra {n} is not over {monad}"))),
        };
        r.push(Section::from_cert(format!("algebra {n} over {monad}"), cert));
    }
    for (n, (monad, c)) in ws.tcategories.iter().filter(|(n, _)| wanted(n)) {
        let mut sec = on_tcat!(c, c => tcat_section(format!("tcategory {n} over {monad}"), c)?);
        if let TCatEntry::List(c) = c {
            sec.property("operad", is_operad(c));
        }
        r.push(sec);
    }
    for (n, f) in ws.functors.iter().filter(|(n, _)| wanted(n)) {
        let func = &f.functor;
        let mut sec = Section::from_cert(format!("functor {n}: {} -> {}", f.source, f.target), func.validate());
        sec.property("discrete fibration", is_discrete_fibration(func));
        sec.property("discrete cofibration", is_discrete_cofibration(func));
        sec.property("isomorphism", func.is_isomorphism());
        r.push(sec);
    }
    for (n, d) in ws.derived.iter().filter(|(n, _)| wanted(n)) {
        let mut sec = Section::new(format!("derived {n}"));
        sec.note(d.clone());
        r.push(sec);
    }
    Ok(())
}

fn tcat_section<M: Monad<A = FinSetCat> + Clone>(title: String, c: &TCategory<M>) -> Result<Section> {
    let cert = build_tcategory(c.name.clone(), c.graph.clone(), c.d1_1.clone())?.cert;
    let mut sec = Section::from_cert(title, cert);
    sec.count("objects", c.x0().len()).count("arrows", c.x1().len()).count("composable pairs", c.x2.len());
    sec.property("T-groupoid", is_t_groupoid(c));
    Ok(sec)
}

/// A workspace monad, or one of `identity`, `maybe`, `writer` (over Z/2)
/// and `list`.
fn resolve_monad(ws: &Workspace, name: &str, b: &Bounds) -> Result<MonadEntry> {
    if let Some(m) = ws.monads.get(name) {
        return Ok(m.clone());
    }
    Ok(match name {
        "identity" => MonadEntry::Identity(Identity { amb: FinSetCat }),
        "maybe" => MonadEntry::Maybe(Maybe::new()),
        "writer" => MonadEntry::Writer(Writer::new(FinMonoid::z2())),
        "list" => MonadEntry::List(List::new(b.grade_bound)),
        _ => return Err(Error::Unresolved(format!("monad {name}"))),
    })
}

fn certify(r: &mut Report, ws: &Workspace, name: &str, b: &Bounds) -> Result<()> {
    let m = resolve_monad(ws, name, b)?;
    let (laws, cert) = on_monad!(&m,
        m => (validate_monad(m, b.probe_size)?, certify_cartesian(m, b.probe_size)?),
        t => (validate_monad(t, b.probe_size)?, certify_cartesian(t, b.probe_size)?));
    let mut sec = Section::new(format!("monad {name} ({})", cert.monad));
    sec.count("probe objects", cert.probe_objects.len()).count("probe squares", cert.probe_squares);
    sec.checks.extend(laws.checks);
    let informational = |n: &str| n.starts_with(HALF) || n.starts_with(HYPER) || n.starts_with(CONSERVATIVE);
    for c in &cert.checks.checks {
        if !informational(&c.name) {
            sec.checks.push(c.clone());
        }
    }
    sec.property("cartesian", cert.cartesian());
    sec.property("half-cartesian", cert.half_cartesian());
    sec.property("hypercartesian", cert.hypercartesian());
    sec.property("conservative", cert.conservative());
    for kind in [HALF, HYPER, CONSERVATIVE] {
        if let Some(c) = cert.checks.checks.iter().find(|c| c.name.starts_with(kind) && !c.pass) {
            sec.note(format!("{} -- {}", c.name, c.witness.as_deref().unwrap_or("")));
        }
    }
    r.push(sec);
    Ok(())
}

fn round_trip(sec: &mut Section, what: &str, ok: Result<bool>) {
    sec.check(
        format!("{what} round trip"),
        match ok {
            Ok(true) => None,
            Ok(false) => Some("the translation back differs".into()),
            Err(e) => Some(e.to_string()),
        },
    );
}

fn cert_check(sec: &mut Section, prefix: &str, c: Certificate) {
    for mut k in c.checks {
        k.name = format!("{prefix}: {}", k.name);
        sec.checks.push(k);
    }
}

fn translate(
    r: &mut Report,
    ws: &mut Workspace,
    theorem: Theorem,
    input: &str,
    as_name: Option<&str>,
    monad: Option<&str>,
    b: &Bounds,
) -> Result<()> {
    let tag = clap::ValueEnum::to_possible_value(&theorem).map(|v| v.get_name().to_string()).unwrap_or_default();
    let out = as_name.map(String::from).unwrap_or_else(|| format!("{input}-{tag}"));
    if !ws.is_free(&out) {
        return Err(Error::Input(format!("{out} is already defined")));
    }
    let mut sec = Section::new(format!("{tag}: {input} -> {out}"));
    match theorem {
        Theorem::Kleisli => {
            let (monad, c) = ws.tcategories.get(input).ok_or_else(|| Error::Unresolved(format!("tcategory {input}")))?;
            let d = on_tcat!(c, c => kleisli_translation(&mut sec, c, b)?);
            ws.derived.insert(out, format!("internal category in Kl({monad}) with {d}"));
        }
        Theorem::GCategory => {
            let c = ws.category(input)?;
            let g = cat_to_gcat(c)?;
            round_trip(&mut sec, "G-category", gcat_to_cat(&g).map(|back| back == *c));
            sec.count("objects", c.x0.len()).count("arrows", c.x1.len());
            let d = format!("G-category with arrow level {}", g.x1());
            ws.derived.insert(out, d);
        }
        Theorem::GAlgebra => {
            let c = ws.category(input)?;
            let alg = groupoid_to_g_algebra(c)?;
            cert_check(&mut sec, "G-algebra", validate_algebra(&crate::monadkit::GMonad, &alg)?);
            round_trip(&mut sec, "G-algebra", g_algebra_to_groupoid(&alg).map(|back| back.m == c.m));
            ws.derived.insert(out, format!("G-algebra on {}", alg.carrier));
        }
        Theorem::Tx => {
            let f = ws.functors.get(input).ok_or_else(|| Error::Unresolved(format!("functor {input}")))?;
            let t = TxMonad::new(&f.functor.target)?;
            let c = functor_to_tx_tcat(&t, &f.functor)?;
            cert_check(&mut sec, "TX-category", build_tcategory(c.name.clone(), c.graph.clone(), c.d1_1.clone())?.cert);
            round_trip(&mut sec, "TX-category", tx_tcat_to_functor(&t, &c).map(|back| back == f.functor));
            sec.property("T-groupoid", is_t_groupoid(&c));
            sec.count("objects", c.x0().carrier.len()).count("arrows", c.x1().carrier.len());
            let d = format!("TX-category over {} with {} arrows", f.target, c.x1().carrier.len());
            ws.derived.insert(out, d);
        }
        Theorem::Dfib => {
            let (monad, a) = ws.algebras.get(input).ok_or_else(|| Error::Unresolved(format!("algebra {input}")))?;
            let AlgebraEntry::Tx(a) = a else {
                return Err(Error::Input(format!("algebra {input} is not over the monad of a category")));
            };
            let MonadEntry::Tx { category, monad: t } = ws.monad(monad)? else { unreachable!("checked on load") };
            let f = algebra_to_dfib(t, a)?;
            sec.check("is a discrete fibration", (!is_discrete_fibration(&f)).then(|| "fibration square fails".into()));
            round_trip(&mut sec, "discrete fibration", dfib_to_algebra(t, &f).map(|back| back == *a));
            let total = format!("{out}-total");
            if !ws.is_free(&total) {
                return Err(Error::Input(format!("{total} is already defined")));
            }
            let category = category.clone();
            sec.note(format!("source category saved as {total}"));
            ws.categories.insert(total.clone(), f.source.clone());
            ws.functors.insert(out, FunctorEntry { source: total, target: category, functor: f });
        }
        Theorem::Algebra => {
            let f = ws.functors.get(input).ok_or_else(|| Error::Unresolved(format!("functor {input}")))?.clone();
            let monad = match monad {
                Some(m) => m.to_string(),
                None => ws
                    .monads
                    .iter()
                    .find(|(_, m)| matches!(m, MonadEntry::Tx { category, .. } if *category == f.target))
                    .map(|(n, _)| n.clone())
                    .ok_or_else(|| Error::Input(format!("no monad of {} in the workspace; pass --monad", f.target)))?,
            };
            let MonadEntry::Tx { category, monad: t } = ws.monad(&monad)? else {
                return Err(Error::Input(format!("{monad} is not the monad of a category")));
            };
            if *category != f.target {
                return Err(Error::Input(format!("{monad} is the monad of {category}, not of {}", f.target)));
            }
            let a = dfib_to_algebra(t, &f.functor)?;
            cert_check(&mut sec, "algebra", validate_algebra(t, &a)?);
            // the fibration rebuilt from the algebra relabels arrows, so compare
            // on the algebra side and on objects
            let back = algebra_to_dfib(t, &a)?;
            sec.check("same objects over X", (back.f0 != f.functor.f0).then(|| format!("{} vs {}", back.f0, f.functor.f0)));
            round_trip(&mut sec, "algebra", dfib_to_algebra(t, &back).map(|b| b == a));
            ws.algebras.insert(out, (monad, AlgebraEntry::Tx(a)));
        }
        Theorem::Embed => {
            let monad = monad.ok_or_else(|| Error::Input("embed needs --monad".into()))?;
            let c = ws.category(input)?.clone();
            let m = ws.monad(monad)?;
            let entry = match m {
                MonadEntry::Identity(m) => TCatEntry::Identity(cat_embed(m, &c)?),
                MonadEntry::Maybe(m) => TCatEntry::Maybe(cat_embed(m, &c)?),
                MonadEntry::Writer(m) => TCatEntry::Writer(cat_embed(m, &c)?),
                MonadEntry::List(m) => TCatEntry::List(cat_embed(m, &c)?),
                MonadEntry::Tx { .. } => return Err(Error::Input("embed needs a monad on finite sets".into())),
            };
            let s = on_tcat!(&entry, t => tcat_section(out.clone(), t)?);
            sec.checks.extend(s.checks);
            sec.counts = s.counts;
            round_trip(&mut sec, "coreflection", on_tcat!(&entry, t => r_coreflection(t).map(|back| back.m == c.m)));
            ws.tcategories.insert(out, (monad.to_string(), entry));
        }
        Theorem::AlgebraTcat => {
            let (monad, a) = ws.algebras.get(input).ok_or_else(|| Error::Unresolved(format!("algebra {input}")))?;
            let m = ws.monad(monad)?;
            let entry = match (m, a) {
                (MonadEntry::Identity(m), AlgebraEntry::Identity(a)) => TCatEntry::Identity(tc_embed_algebra(m, a)?),
                (MonadEntry::Maybe(m), AlgebraEntry::Maybe(a)) => TCatEntry::Maybe(tc_embed_algebra(m, a)?),
                (MonadEntry::Writer(m), AlgebraEntry::Writer(a)) => TCatEntry::Writer(tc_embed_algebra(m, a)?),
                (MonadEntry::List(m), AlgebraEntry::List(a)) => TCatEntry::List(tc_embed_algebra(m, a)?),
                _ => return Err(Error::Input("algebra-tcat needs an algebra over a monad on finite sets".into())),
            };
            let s = on_tcat!(&entry, t => tcat_section(out.clone(), t)?);
            sec.checks.extend(s.checks);
            sec.counts = s.counts;
            sec.properties = s.properties;
            let monad = monad.clone();
            ws.tcategories.insert(out, (monad, entry));
        }
        Theorem::Coreflection => {
            let (_, c) = ws.tcategories.get(input).ok_or_else(|| Error::Unresolved(format!("tcategory {input}")))?;
            let (rc, counit) = on_tcat!(c, c => (r_coreflection(c)?, validate_tfunctor(&r_counit(c)?)));
            cert_check(&mut sec, "category", rc.validate());
            cert_check(&mut sec, "counit", counit);
            sec.count("objects", rc.x0.len()).count("arrows", rc.x1.len());
            ws.categories.insert(out, InternalCategory { name: rc.name.clone(), ..rc });
        }
        Theorem::Dec => {
            let c = ws.category(input)?;
            let (d, eps) = dec(c)?;
            cert_check(&mut sec, "category", d.validate());
            cert_check(&mut sec, "counit", eps.validate());
            sec.check("counit is a discrete cofibration", (!is_discrete_cofibration(&eps)).then(|| "cofibration square fails".into()));
            sec.property("groupoid", is_groupoid(&d));
            let counit = format!("{out}-counit");
            if !ws.is_free(&counit) {
                return Err(Error::Input(format!("{counit} is already defined")));
            }
            sec.note(format!("counit saved as {counit}"));
            ws.functors.insert(counit, FunctorEntry { source: out.clone(), target: input.to_string(), functor: eps });
            ws.categories.insert(out, d);
        }
    }
    r.push(sec);
    Ok(())
}

fn kleisli_translation<M: Monad<A = FinSetCat> + Clone>(sec: &mut Section, c: &TCategory<M>, b: &Bounds) -> Result<String> {
    let calc = KlCalculus::certify(c.monad().clone(), b.probe_size.min(2))?;
    let s = tcat_to_kl(c)?;
    cert_check(sec, "category in Kl", validate_kl_category(&calc.kl, &s));
    round_trip(sec, "Kleisli presentation", tcat_from_kl(&calc, c.name.clone(), &s).map(|back| back == *c));
    let sizes: Vec<String> = s.objs.iter().map(|o| o.len().to_string()).collect();
    for (i, o) in s.objs.iter().enumerate() {
        sec.count(&format!("X{i}"), o.len());
    }
    Ok(format!("levels of sizes {}", sizes.join(", ")))
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    ws: &Workspace,
    what: What,
    objects: usize,
    arrows: usize,
    size: usize,
    over: Option<&str>,
    monad: Option<&str>,
    list: bool,
    b: &Bounds,
) -> Result<Section> {
    match what {
        What::Categories | What::Groupoids => {
            let cats: Vec<InternalCategory> = match over {
                Some(n) => category_structures(&ws.category(n)?.graph()),
                None => {
                    bound("objects", objects, MAX_OBJECTS)?;
                    bound("arrows", arrows, MAX_ARROWS)?;
                    small_categories(objects, arrows)
                }
            };
            let grds: Vec<&InternalCategory> = cats.iter().filter(|c| is_groupoid(c)).collect();
            let mut sec = Section::new(match over {
                Some(n) => format!("category structures on the graph of {n}"),
                None => format!("categories with at most {objects} objects and {arrows} arrows"),
            });
            sec.count("categories", cats.len()).count("groupoids", grds.len());
            if list {
                let shown: Vec<&InternalCategory> = match what {
                    What::Groupoids => grds,
                    _ => cats.iter().collect(),
                };
                for c in shown {
                    sec.note(describe_category(c));
                }
            }
            Ok(sec)
        }
        What::Dfibs => {
            bound("size", size, MAX_SIZE)?;
            let n = over.ok_or_else(|| Error::Input("dfibs needs --over CATEGORY".into()))?;
            let x = ws.category(n)?;
            let mut sec = Section::new(format!("discrete fibrations into {n} with at most {size} objects"));
            let mut bad = None;
            for k in 0..=size {
                let z = probe_set(k);
                for f0 in FinMap::all(&z, &x.x0) {
                    for f in discrete_fibrations_with_objects(x, &z, &f0)? {
                        sec.count("discrete fibrations", 1);
                        if is_groupoid(&f.source) {
                            sec.count("with groupoid domain", 1);
                        }
                        if bad.is_none() && !is_discrete_fibration(&f) {
                            bad = Some(format!("over {f0}"));
                        }
                        if list {
                            sec.note(format!("objects over {f0}: {}", describe_category(&f.source)));
                        }
                    }
                }
            }
            sec.check("each is a discrete fibration", bad);
            Ok(sec)
        }
        What::Algebras => {
            bound("size", size, MAX_SIZE)?;
            let name = monad.ok_or_else(|| Error::Input("algebras needs --monad".into()))?;
            let m = resolve_monad(ws, name, b)?;
            let mut sec = Section::new(format!("{name}-algebras on carriers of at most {size} elements"));
            on_monad!(&m,
                m => {
                    bound("size for a monad on sets", size, 3)?;
                    for x in m.probes(size) {
                        let algs = algebras_on(m, &x)?;
                        sec.count("algebras", algs.len());
                        if list {
                            for a in algs {
                                sec.note(format!("on {}: {}", x, a.xi));
                            }
                        }
                    }
                },
                t => {
                    for k in 0..=size {
                        let z = probe_set(k);
                        for h in FinMap::all(&z, &t.cat.x0) {
                            let h = SliceObj::new(h);
                            let algs = algebras_on(t, &h)?;
                            sec.count("algebras", algs.len());
                            if list {
                                for a in algs {
                                    sec.note(format!("over {}: {}", h.over, a.xi.map));
                                }
                            }
                        }
                    }
                });
            Ok(sec)
        }
        What::Tfibrations => {
            bound("size", size, 2)?;
            let n = over.ok_or_else(|| Error::Input("tfibrations needs --over TCATEGORY".into()))?;
            let (_, c) = ws.tcategories.get(n).ok_or_else(|| Error::Unresolved(format!("tcategory {n}")))?;
            let mut sec = Section::new(format!("discrete T-fibrations into {n} with at most {size} objects"));
            let mut bad = None;
            on_tcat!(c, c => {
                for k in 0..=size {
                    for f in discrete_tfibrations_over(c, &probe_set(k), 16)? {
                        sec.count("discrete T-fibrations", 1);
                        let cert = validate_tfunctor(&f);
                        if bad.is_none() {
                            bad = cert.first_failure().map(|x| x.name.clone());
                        }
                        if list {
                            sec.note(format!("objects over {}", f.f0));
                        }
                    }
                }
            });
            sec.check("each is a T-functor", bad);
            Ok(sec)
        }
    }
}

fn describe_category(c: &InternalCategory) -> String {
    let nonid: Vec<String> = c
        .x1
        .iter()
        .filter(|f| c.id_of(&c.dom_of(f)) != **f)
        .map(|f| format!("{f}: {} -> {}", c.dom_of(f), c.cod_of(f)))
        .collect();
    format!("{} objects {}; arrows [{}]", c.name, c.x0, nonid.join(", "))
}

