//! Syntax tree of a spec document.

use wcpkit_core::{Field, Scalar};

/// Name of the tensor unit in object lists.
pub const UNIT_NAME: &str = "K";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub field: Field,
    pub items: Vec<Item>,
}

impl Document {
    pub fn new(field: Field) -> Self {
        Document {
            field,
            items: vec![],
        }
    }

    pub fn directives(&self) -> impl Iterator<Item = &Directive> {
        self.items.iter().filter_map(|i| match i {
            Item::Directive(d) => Some(d),
            _ => None,
        })
    }

    /// The morphism declared under `name`, if any.
    pub fn mor(&self, name: &str) -> Option<&MorDecl> {
        self.items.iter().find_map(|i| match i {
            Item::Mor(m) if m.name == name => Some(m),
            _ => None,
        })
    }

    pub fn mor_mut(&mut self, name: &str) -> Option<&mut MorDecl> {
        self.items.iter_mut().find_map(|i| match i {
            Item::Mor(m) if m.name == name => Some(m),
            _ => None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Obj { name: String, dim: usize },
    Mor(MorDecl),
    Decl(Decl),
    Directive(Directive),
}

/// `mor <name> : <objs> -> <objs> { r c value; ... }`. An empty object list
/// is the unit `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorDecl {
    pub name: String,
    pub dom: Vec<String>,
    pub cod: Vec<String>,
    pub entries: Vec<(usize, usize, Scalar)>,
}

/// What a name refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Obj,
    Mor,
    Decl(DeclKind),
}

impl Kind {
    pub fn describe(self) -> &'static str {
        match self {
            Kind::Obj => "object",
            Kind::Mor => "morphism",
            Kind::Decl(k) => k.keyword(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DeclKind {
    Monoid,
    Comonoid,
    Module,
    Comodule,
    Quadruple,
    Coquadruple,
    Preunit,
    Precounit,
    Gauge,
    Cogauge,
    Transfer,
    Cotransfer,
    Biproduct,
}

impl DeclKind {
    pub const ALL: [DeclKind; 13] = [
        DeclKind::Monoid,
        DeclKind::Comonoid,
        DeclKind::Module,
        DeclKind::Comodule,
        DeclKind::Quadruple,
        DeclKind::Coquadruple,
        DeclKind::Preunit,
        DeclKind::Precounit,
        DeclKind::Gauge,
        DeclKind::Cogauge,
        DeclKind::Transfer,
        DeclKind::Cotransfer,
        DeclKind::Biproduct,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            DeclKind::Monoid => "monoid",
            DeclKind::Comonoid => "comonoid",
            DeclKind::Module => "module",
            DeclKind::Comodule => "comodule",
            DeclKind::Quadruple => "quadruple",
            DeclKind::Coquadruple => "coquadruple",
            DeclKind::Preunit => "preunit",
            DeclKind::Precounit => "precounit",
            DeclKind::Gauge => "gauge",
            DeclKind::Cogauge => "cogauge",
            DeclKind::Transfer => "transfer",
            DeclKind::Cotransfer => "cotransfer",
            DeclKind::Biproduct => "biproduct",
        }
    }

    pub fn from_keyword(word: &str) -> Option<DeclKind> {
        DeclKind::ALL.into_iter().find(|k| k.keyword() == word)
    }

    /// Keyword arguments in canonical order.
    pub fn params(self) -> &'static [(&'static str, Kind)] {
        use DeclKind as D;
        use Kind::{Decl, Mor, Obj};
        match self {
            D::Monoid => &[("unit", Mor), ("mult", Mor)],
            D::Comonoid => &[("counit", Mor), ("comult", Mor)],
            D::Module => &[("monoid", Decl(D::Monoid)), ("action", Mor)],
            D::Comodule => &[("comonoid", Decl(D::Comonoid)), ("coaction", Mor)],
            D::Quadruple => &[
                ("monoid", Decl(D::Monoid)),
                ("V", Obj),
                ("psi", Mor),
                ("sigma", Mor),
            ],
            D::Coquadruple => &[
                ("comonoid", Decl(D::Comonoid)),
                ("V", Obj),
                ("chi", Mor),
                ("tau", Mor),
            ],
            D::Preunit => &[("quadruple", Decl(D::Quadruple)), ("nu", Mor)],
            D::Precounit => &[("coquadruple", Decl(D::Coquadruple)), ("upsilon", Mor)],
            D::Gauge => &[("gamma", Mor), ("theta", Mor)],
            D::Cogauge => &[("pi", Mor), ("zeta", Mor)],
            D::Transfer => &[("T", Mor), ("S", Mor)],
            D::Cotransfer => &[("P", Mor), ("R", Mor)],
            D::Biproduct => &[
                ("preunit", Decl(D::Preunit)),
                ("precounit", Decl(D::Precounit)),
            ],
        }
    }
}

/// `<kind> <name> <key> <ref> ...`; `args` follow [`DeclKind::params`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decl {
    pub kind: DeclKind,
    pub name: String,
    pub args: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verb {
    CheckMonoid,
    CheckComonoid,
    CheckModule,
    CheckComodule,
    CheckQuadruple,
    CheckCoquadruple,
    CheckPreunit,
    CheckPrecounit,
    CheckBiproduct,
    CheckBrzezinski,
    BuildQuadruple,
    BuildCoquadruple,
    EquivTransfer,
    EquivGauge,
    EquivCotransfer,
    EquivCogauge,
    EquivBiproductTransfer,
    EquivBiproductGauge,
    TransportPreunit,
    TransportPrecounit,
    TransportBiproduct,
}

pub struct VerbSpec {
    pub verb: Verb,
    pub head: &'static str,
    pub sub: &'static str,
    pub params: &'static [Kind],
}

const fn d(k: DeclKind) -> Kind {
    Kind::Decl(k)
}

pub const VERBS: &[VerbSpec] = {
    use DeclKind as D;
    use Verb as V;
    &[
        VerbSpec {
            verb: V::CheckMonoid,
            head: "check",
            sub: "monoid",
            params: &[d(D::Monoid)],
        },
        VerbSpec {
            verb: V::CheckComonoid,
            head: "check",
            sub: "comonoid",
            params: &[d(D::Comonoid)],
        },
        VerbSpec {
            verb: V::CheckModule,
            head: "check",
            sub: "module",
            params: &[d(D::Module)],
        },
        VerbSpec {
            verb: V::CheckComodule,
            head: "check",
            sub: "comodule",
            params: &[d(D::Comodule)],
        },
        VerbSpec {
            verb: V::CheckQuadruple,
            head: "check",
            sub: "quadruple",
            params: &[d(D::Quadruple)],
        },
        VerbSpec {
            verb: V::CheckCoquadruple,
            head: "check",
            sub: "coquadruple",
            params: &[d(D::Coquadruple)],
        },
        VerbSpec {
            verb: V::CheckPreunit,
            head: "check",
            sub: "preunit",
            params: &[d(D::Preunit)],
        },
        VerbSpec {
            verb: V::CheckPrecounit,
            head: "check",
            sub: "precounit",
            params: &[d(D::Precounit)],
        },
        VerbSpec {
            verb: V::CheckBiproduct,
            head: "check",
            sub: "biproduct",
            params: &[d(D::Biproduct)],
        },
        VerbSpec {
            verb: V::CheckBrzezinski,
            head: "check",
            sub: "brzezinski",
            params: &[d(D::Quadruple), Kind::Mor],
        },
        VerbSpec {
            verb: V::BuildQuadruple,
            head: "build",
            sub: "quadruple",
            params: &[d(D::Quadruple)],
        },
        VerbSpec {
            verb: V::BuildCoquadruple,
            head: "build",
            sub: "coquadruple",
            params: &[d(D::Coquadruple)],
        },
        VerbSpec {
            verb: V::EquivTransfer,
            head: "equiv",
            sub: "transfer",
            params: &[d(D::Transfer), d(D::Preunit), d(D::Preunit)],
        },
        VerbSpec {
            verb: V::EquivGauge,
            head: "equiv",
            sub: "gauge",
            params: &[d(D::Gauge), d(D::Preunit), d(D::Preunit)],
        },
        VerbSpec {
            verb: V::EquivCotransfer,
            head: "equiv",
            sub: "cotransfer",
            params: &[d(D::Cotransfer), d(D::Precounit), d(D::Precounit)],
        },
        VerbSpec {
            verb: V::EquivCogauge,
            head: "equiv",
            sub: "cogauge",
            params: &[d(D::Cogauge), d(D::Precounit), d(D::Precounit)],
        },
        VerbSpec {
            verb: V::EquivBiproductTransfer,
            head: "equiv",
            sub: "biproduct-transfer",
            params: &[d(D::Transfer), d(D::Biproduct), d(D::Biproduct)],
        },
        VerbSpec {
            verb: V::EquivBiproductGauge,
            head: "equiv",
            sub: "biproduct-gauge",
            params: &[d(D::Gauge), d(D::Cogauge), d(D::Biproduct), d(D::Biproduct)],
        },
        VerbSpec {
            verb: V::TransportPreunit,
            head: "transport",
            sub: "preunit",
            params: &[d(D::Preunit), d(D::Gauge)],
        },
        VerbSpec {
            verb: V::TransportPrecounit,
            head: "transport",
            sub: "precounit",
            params: &[d(D::Precounit), d(D::Cogauge)],
        },
        VerbSpec {
            verb: V::TransportBiproduct,
            head: "transport",
            sub: "biproduct",
            params: &[d(D::Biproduct), d(D::Gauge), d(D::Cogauge)],
        },
    ]
};

impl Verb {
    pub fn spec(self) -> &'static VerbSpec {
        VERBS
            .iter()
            .find(|s| s.verb == self)
            .expect("every verb has a table row")
    }
}

/// `<head> <sub> <ref>...`, e.g. `check quadruple Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Directive {
    pub verb: Verb,
    pub args: Vec<String>,
}

impl std::fmt::Display for Directive {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = self.verb.spec();
        write!(f, "{} {}", s.head, s.sub)?;
        for a in &self.args {
            write!(f, " {a}")?;
        }
        Ok(())
    }
}
