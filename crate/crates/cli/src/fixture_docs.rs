//! Spec documents for the library fixtures, as printed by `fixtures emit`.

use std::collections::HashMap;

use wcpkit_core::biproduct::{self, BiproductData};
use wcpkit_core::equivalence::{self as eq, CoGaugePair, GaugePair};
use wcpkit_core::fixtures::{self, FixtureBundle};
use wcpkit_core::structures::{Comonoid, Monoid};
use wcpkit_core::wcc::{dualize, CounitalCoproduct, PrecounitData};
use wcpkit_core::{Field, Mor, Obj, Result, WcpError};

use crate::ast::*;

/// Accumulates a document, declaring objects on first use and sharing
/// identical monoids and comonoids.
pub struct DocBuilder {
    doc: Document,
    dims: HashMap<String, usize>,
    monoids: Vec<(Monoid, String)>,
    comonoids: Vec<(Comonoid, String)>,
}

impl DocBuilder {
    pub fn new(field: Field) -> Self {
        DocBuilder {
            doc: Document::new(field),
            dims: HashMap::new(),
            monoids: vec![],
            comonoids: vec![],
        }
    }

    fn objs(&mut self, x: &Obj) -> Result<Vec<String>> {
        let mut names = vec![];
        for f in x.factors() {
            match self.dims.get(&f.label) {
                Some(&d) if d != f.dim => {
                    return Err(WcpError::InvalidObject(format!(
                        "factor `{}` used with dimensions {d} and {}",
                        f.label, f.dim
                    )))
                }
                Some(_) => {}
                None => {
                    self.dims.insert(f.label.clone(), f.dim);
                    self.doc.items.push(Item::Obj {
                        name: f.label.clone(),
                        dim: f.dim,
                    });
                }
            }
            names.push(f.label.clone());
        }
        Ok(names)
    }

    pub fn mor(&mut self, name: &str, m: &Mor) -> Result<String> {
        let dom = self.objs(m.dom())?;
        let cod = self.objs(m.cod())?;
        self.doc.items.push(Item::Mor(MorDecl {
            name: name.to_string(),
            dom,
            cod,
            entries: m.entries(),
        }));
        Ok(name.to_string())
    }

    pub fn decl(&mut self, kind: DeclKind, name: &str, args: &[String]) -> String {
        self.doc.items.push(Item::Decl(Decl {
            kind,
            name: name.to_string(),
            args: args.to_vec(),
        }));
        name.to_string()
    }

    pub fn directive(&mut self, verb: Verb, args: &[&str]) {
        self.doc.items.push(Item::Directive(Directive {
            verb,
            args: args.iter().map(|a| a.to_string()).collect(),
        }));
    }

    pub fn monoid(&mut self, prefix: &str, m: &Monoid) -> Result<String> {
        if let Some((_, n)) = self.monoids.iter().find(|(x, _)| x == m) {
            return Ok(n.clone());
        }
        let unit = self.mor(&format!("{prefix}.eta"), &m.unit)?;
        let mult = self.mor(&format!("{prefix}.mu"), &m.mult)?;
        let name = self.decl(DeclKind::Monoid, &format!("{prefix}.monoid"), &[unit, mult]);
        self.monoids.push((m.clone(), name.clone()));
        Ok(name)
    }

    pub fn comonoid(&mut self, prefix: &str, c: &Comonoid) -> Result<String> {
        if let Some((_, n)) = self.comonoids.iter().find(|(x, _)| x == c) {
            return Ok(n.clone());
        }
        let counit = self.mor(&format!("{prefix}.eps"), &c.counit)?;
        let comult = self.mor(&format!("{prefix}.delta"), &c.comult)?;
        let name = self.decl(
            DeclKind::Comonoid,
            &format!("{prefix}.comonoid"),
            &[counit, comult],
        );
        self.comonoids.push((c.clone(), name.clone()));
        Ok(name)
    }

    /// Declares quadruple `name` and preunit `name.unital`; returns both names.
    pub fn product(
        &mut self,
        name: &str,
        q: &wcpkit_core::wcp::Quadruple,
        nu: &Mor,
    ) -> Result<(String, String)> {
        let a = self.monoid(name, &q.a)?;
        let v = self.objs(&q.v)?;
        let [v] = v.as_slice() else {
            return Err(WcpError::InvalidObject(format!(
                "V of `{name}` must be a single factor"
            )));
        };
        let psi = self.mor(&format!("{name}.psi"), &q.psi)?;
        let sigma = self.mor(&format!("{name}.sigma"), &q.raw_sigma)?;
        let quad = self.decl(DeclKind::Quadruple, name, &[a, v.clone(), psi, sigma]);
        let nu = self.mor(&format!("{name}.nu"), nu)?;
        let unital = self.decl(
            DeclKind::Preunit,
            &format!("{name}.unital"),
            &[quad.clone(), nu],
        );
        Ok((quad, unital))
    }

    /// Declares coquadruple `name` and precounit `name.counital`.
    pub fn coproduct(
        &mut self,
        name: &str,
        cq: &wcpkit_core::wcc::CoQuadruple,
        ups: &Mor,
    ) -> Result<(String, String)> {
        let c = self.comonoid(name, &cq.c)?;
        let v = self.objs(&cq.v)?;
        let [v] = v.as_slice() else {
            return Err(WcpError::InvalidObject(format!(
                "V of `{name}` must be a single factor"
            )));
        };
        let chi = self.mor(&format!("{name}.chi"), &cq.chi)?;
        let tau = self.mor(&format!("{name}.tau"), &cq.raw_tau)?;
        let quad = self.decl(DeclKind::Coquadruple, name, &[c, v.clone(), chi, tau]);
        let ups = self.mor(&format!("{name}.upsilon"), ups)?;
        let counital = self.decl(
            DeclKind::Precounit,
            &format!("{name}.counital"),
            &[quad.clone(), ups],
        );
        Ok((quad, counital))
    }

    pub fn gauge(&mut self, name: &str, gp: &GaugePair) -> Result<String> {
        let g = self.mor(&format!("{name}.gamma"), &gp.gamma)?;
        let t = self.mor(&format!("{name}.theta"), &gp.theta)?;
        Ok(self.decl(DeclKind::Gauge, name, &[g, t]))
    }

    pub fn cogauge(&mut self, name: &str, cgp: &CoGaugePair) -> Result<String> {
        let p = self.mor(&format!("{name}.pi"), &cgp.pi)?;
        let z = self.mor(&format!("{name}.zeta"), &cgp.zeta)?;
        Ok(self.decl(DeclKind::Cogauge, name, &[p, z]))
    }

    pub fn transfer(&mut self, name: &str, t: &Mor, s: &Mor) -> Result<String> {
        let t = self.mor(&format!("{name}.T"), t)?;
        let s = self.mor(&format!("{name}.S"), s)?;
        Ok(self.decl(DeclKind::Transfer, name, &[t, s]))
    }

    pub fn cotransfer(&mut self, name: &str, p: &Mor, r: &Mor) -> Result<String> {
        let p = self.mor(&format!("{name}.P"), p)?;
        let r = self.mor(&format!("{name}.R"), r)?;
        Ok(self.decl(DeclKind::Cotransfer, name, &[p, r]))
    }

    /// Biproduct `name` over product `name.prod` and coproduct `name.coprod`.
    pub fn biproduct(&mut self, name: &str, bd: &BiproductData) -> Result<String> {
        let (_, p) = self.product(&format!("{name}.prod"), &bd.quadruple, &bd.nu.nu)?;
        let (_, c) = self.coproduct(&format!("{name}.coprod"), &bd.coquadruple, &bd.ups.upsilon)?;
        Ok(self.decl(DeclKind::Biproduct, name, &[p, c]))
    }

    pub fn finish(self) -> Document {
        self.doc
    }
}

fn product_doc(name: &str, b: &FixtureBundle) -> Result<Document> {
    let mut d = DocBuilder::new(b.field());
    let (q, p) = d.product(name, &b.product.quadruple, &b.product.nu.nu)?;
    d.directive(Verb::CheckQuadruple, &[&q]);
    d.directive(Verb::BuildQuadruple, &[&q]);
    d.directive(Verb::CheckPreunit, &[&p]);
    Ok(d.finish())
}

fn coproduct_doc(name: &str, c: &CounitalCoproduct) -> Result<Document> {
    let mut d = DocBuilder::new(c.field());
    let (q, p) = d.coproduct(name, &c.coquadruple, &c.ups.upsilon)?;
    d.directive(Verb::CheckCoquadruple, &[&q]);
    d.directive(Verb::BuildCoquadruple, &[&q]);
    d.directive(Verb::CheckPrecounit, &[&p]);
    Ok(d.finish())
}

fn biproduct_doc(name: &str, bd: &BiproductData) -> Result<Document> {
    let mut d = DocBuilder::new(bd.quadruple.field());
    let b = d.biproduct(name, bd)?;
    d.directive(Verb::CheckBiproduct, &[&b]);
    Ok(d.finish())
}

/// `V`, a gauge, the transported `W` and the induced transfer pair.
fn gauge_doc(name: &str, b: &FixtureBundle, gp: &GaugePair) -> Result<Document> {
    let v = &b.product;
    let w = eq::transport_structure(v, gp)?;
    let tp = eq::ts_from_gauge(gp, v, &w)?;
    let mut d = DocBuilder::new(b.field());
    let (_, pv) = d.product(name, &v.quadruple, &v.nu.nu)?;
    let (_, pw) = d.product(&format!("{name}.W"), &w.quadruple, &w.nu.nu)?;
    let g = d.gauge(&format!("{name}.gauge"), gp)?;
    let t = d.transfer(&format!("{name}.transfer"), &tp.t, &tp.s)?;
    d.directive(Verb::CheckPreunit, &[&pw]);
    d.directive(Verb::EquivGauge, &[&g, &pv, &pw]);
    d.directive(Verb::EquivTransfer, &[&t, &pv, &pw]);
    d.directive(Verb::TransportPreunit, &[&pv, &g]);
    Ok(d.finish())
}

/// The dual picture of [`gauge_doc`]: `π = D(γ)`, `ζ = D(θ)`.
fn cogauge_doc(name: &str, b: &FixtureBundle, gp: &GaugePair) -> Result<Document> {
    let v = fixtures::dual_fixture(b)?;
    let cgp = CoGaugePair {
        pi: dualize(&gp.gamma),
        zeta: dualize(&gp.theta),
    };
    let w = eq::co_transport(&v, &cgp)?;
    let ctp = eq::co_ts_from_gauge(&cgp, &v, &w)?;
    let mut d = DocBuilder::new(b.field());
    let (_, pv) = d.coproduct(name, &v.coquadruple, &v.ups.upsilon)?;
    let (_, pw) = d.coproduct(&format!("{name}.W"), &w.coquadruple, &w.ups.upsilon)?;
    let g = d.cogauge(&format!("{name}.cogauge"), &cgp)?;
    let t = d.cotransfer(&format!("{name}.cotransfer"), &ctp.p, &ctp.r)?;
    d.directive(Verb::CheckPrecounit, &[&pw]);
    d.directive(Verb::EquivCogauge, &[&g, &pv, &pw]);
    d.directive(Verb::EquivCotransfer, &[&t, &pv, &pw]);
    d.directive(Verb::TransportPrecounit, &[&pv, &g]);
    Ok(d.finish())
}

fn biproduct_gauge_doc(name: &str, bd: &BiproductData, shifts: &[usize]) -> Result<Document> {
    let b1 = bd.assemble()?;
    let (gp, cgp) = fixtures::group_biproduct_shift_gauge(bd, shifts)?;
    let b2 = biproduct::transport_biproduct(&b1, &gp, &cgp)?;
    let bd2 = BiproductData {
        name: format!("{name}.W"),
        quadruple: b2.product.quadruple.clone(),
        nu: b2.product.nu.clone(),
        coquadruple: b2.coproduct.coquadruple.clone(),
        ups: PrecounitData {
            upsilon: b2.coproduct.ups.upsilon.clone(),
        },
    };
    let tp = eq::ts_from_gauge(&gp, &b1.product, &b2.product)?;
    let mut d = DocBuilder::new(bd.quadruple.field());
    let x = d.biproduct(name, bd)?;
    let y = d.biproduct(&format!("{name}.W"), &bd2)?;
    let g = d.gauge(&format!("{name}.gauge"), &gp)?;
    let cg = d.cogauge(&format!("{name}.cogauge"), &cgp)?;
    let t = d.transfer(&format!("{name}.transfer"), &tp.t, &tp.s)?;
    d.directive(Verb::CheckBiproduct, &[&y]);
    d.directive(Verb::EquivBiproductGauge, &[&g, &cg, &x, &y]);
    d.directive(Verb::EquivBiproductTransfer, &[&t, &x, &y]);
    d.directive(Verb::TransportBiproduct, &[&x, &g, &cg]);
    Ok(d.finish())
}

/// CZ2TW with `σ(v0⊗v1) = 2·(a0⊗v1)`: fails exactly the cocycle condition.
pub fn corrupted_sigma_doc() -> Result<Document> {
    let b = fixtures::by_name("CZ2TW")?;
    let mut doc = product_doc("CZ2TW", &b)?;
    let sigma = doc
        .mor_mut("CZ2TW.sigma")
        .expect("product documents declare sigma");
    let two = Field::Rationals.from_i64(2);
    for e in sigma.entries.iter_mut().filter(|e| (e.0, e.1) == (1, 1)) {
        e.2 = two.clone();
    }
    Ok(doc)
}

/// Names accepted by [`document_by_name`].
pub fn emit_names() -> Vec<String> {
    let mut out: Vec<String> = fixtures::FIXTURE_NAMES
        .iter()
        .map(|s| s.to_string())
        .collect();
    out.extend(fixtures::FIXTURE_NAMES.iter().map(|s| format!("DUAL-{s}")));
    out.extend(
        [
            "BIP-CZ2",
            "BIP-CZ3",
            "BIP-WHA-PGPD",
            "CZ2TW-GAUGE",
            "WHA-PGPD-GAUGE",
            "DUAL-CZ2TW-GAUGE",
            "BIP-CZ3-GAUGE",
            "CZ2TW-BAD-SIGMA",
        ]
        .map(String::from),
    );
    out
}

pub fn document_by_name(name: &str) -> Result<Document> {
    let q = Field::Rationals;
    match name {
        "BIP-CZ2" => biproduct_doc(name, &fixtures::make_group_biproduct(2, &q.one())?),
        "BIP-CZ3" => biproduct_doc(name, &fixtures::make_group_biproduct(3, &q.one())?),
        "BIP-WHA-PGPD" => biproduct_doc(name, &fixtures::make_wha_biproduct(2)?),
        "CZ2TW-GAUGE" => {
            let b = fixtures::by_name("CZ2TW")?;
            gauge_doc("CZ2TW", &b, &fixtures::scalar_gauge(&b, &q.from_i64(2))?)
        }
        "WHA-PGPD-GAUGE" => {
            let b = fixtures::by_name("WHA-PGPD")?;
            let gp =
                fixtures::groupoid_scaling_gauge(&b, |i, j| q.from_i64((i + 2 * j + 1) as i64))?;
            gauge_doc("WHA-PGPD", &b, &gp)
        }
        "DUAL-CZ2TW-GAUGE" => {
            let b = fixtures::by_name("CZ2TW")?;
            cogauge_doc(
                "DUAL-CZ2TW",
                &b,
                &fixtures::scalar_gauge(&b, &q.from_i64(2))?,
            )
        }
        "BIP-CZ3-GAUGE" => biproduct_gauge_doc(
            "BIP-CZ3",
            &fixtures::make_group_biproduct(3, &q.from_i64(2))?,
            &[0, 1, 0],
        ),
        "CZ2TW-BAD-SIGMA" => corrupted_sigma_doc(),
        _ => match name.strip_prefix("DUAL-") {
            Some(base) => coproduct_doc(name, &fixtures::dual_fixture(&fixtures::by_name(base)?)?),
            None => product_doc(name, &fixtures::by_name(name)?),
        },
    }
}
