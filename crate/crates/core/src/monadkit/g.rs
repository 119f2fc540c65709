use super::monad::Monad;
use crate::catkit::{PtCat, PtMorphism, PtObject};
use crate::error::Result;
use crate::setcat::{kernel_pair, Atom, FinMap};

/// The monad on split epimorphisms sending `(g, t)` to the first projection
/// of the kernel pair of `g` with its diagonal.
#[derive(Debug, Clone, Copy, Default)]
pub struct GMonad;

fn both(x: &FinMap, p: &Atom) -> Result<Atom> {
    Ok(Atom::pair(x.apply(p.proj(0)?)?, x.apply(p.proj(1)?)?))
}

impl Monad for GMonad {
    type A = PtCat;

    fn ambient(&self) -> &PtCat {
        &PtCat
    }

    fn name(&self) -> String {
        "G".into()
    }

    fn obj(&self, o: &PtObject) -> Result<PtObject> {
        let r = kernel_pair(&o.g);
        PtObject::new(r.p0, r.s0)
    }

    fn fmap(&self, f: &PtMorphism) -> Result<PtMorphism> {
        let (s, t) = (self.obj(&f.dom)?, self.obj(&f.cod)?);
        let x = FinMap::try_new(s.upper(), t.upper(), |p| both(&f.x, p))?;
        PtMorphism::new(&s, &t, f.x.clone(), x)
    }

    /// `σ`: lower `t`, upper `x ↦ (t g x, x)`.
    fn unit(&self, o: &PtObject) -> Result<PtMorphism> {
        let go = self.obj(o)?;
        let x = FinMap::try_new(o.upper(), go.upper(), |a| {
            Ok(Atom::pair(o.t.apply(&o.g.apply(a)?)?, a.clone()))
        })?;
        PtMorphism::new(o, &go, o.t.clone(), x)
    }

    /// `π`: lower `(a, b) ↦ b`, upper `((a, b), (a, c)) ↦ (b, c)`.
    fn mult(&self, o: &PtObject) -> Result<PtMorphism> {
        let go = self.obj(o)?;
        let ggo = self.obj(&go)?;
        let y = FinMap::try_new(go.upper(), o.upper(), |p| Ok(p.proj(1)?.clone()))?;
        let x = FinMap::try_new(ggo.upper(), go.upper(), |q| {
            Ok(Atom::pair(q.proj(0)?.proj(1)?.clone(), q.proj(1)?.proj(1)?.clone()))
        })?;
        PtMorphism::new(&ggo, &go, y, x)
    }
}
