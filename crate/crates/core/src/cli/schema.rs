//! The workspace document: named top-level entries whose atoms are written
//! in the textual atom syntax (`a`, `3`, `(u,v)`, `[e,k]`, `just(a)`, `_|_`).

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub type Table = BTreeMap<String, String>;

/// A set given by name or inline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SetRef {
    Name(String),
    Elems(Vec<String>),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub set: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub map: BTreeMap<String, MapDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub category: BTreeMap<String, CategoryDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub monad: BTreeMap<String, MonadDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebra: BTreeMap<String, AlgebraDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tcategory: BTreeMap<String, TCategoryDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub functor: BTreeMap<String, FunctorDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    pub dom: SetRef,
    pub cod: SetRef,
    pub table: Table,
}

/// `arrows` maps each arrow to `[domain, codomain]`; `compose` maps a
/// composable pair `(f,g)`, read "f then g", to its composite. Composites
/// with an identity may be omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    pub arrows: BTreeMap<String, [String; 2]>,
    pub identities: Table,
    #[serde(default)]
    pub compose: Table,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidDoc {
    pub carrier: Vec<String>,
    pub unit: String,
    /// `(a,b)` to `a·b`.
    pub table: Table,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "builtin", rename_all = "lowercase", deny_unknown_fields)]
pub enum MonadDoc {
    Identity,
    Maybe,
    Writer { monoid: MonoidDoc },
    List {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bound: Option<usize>,
    },
    /// The monad of an internal category, named in the workspace.
    Tx { category: String },
}

/// For set-based monads `carrier` is the carrier set; for `tx` monads
/// `over` sends each carrier element to an object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub monad: String,
    pub carrier: SetRef,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub over: Option<Table>,
    pub structure: Table,
}

/// `compose` is keyed by elements `(x,w)` of the canonical X2: `w` lies in
/// T(X1) over the input of `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TCategoryDoc {
    pub monad: String,
    pub objects: SetRef,
    pub arrows: SetRef,
    pub d0: Table,
    pub delta1: Table,
    pub s0: Table,
    pub compose: Table,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub source: String,
    pub target: String,
    pub objects: Table,
    pub arrows: Table,
}
