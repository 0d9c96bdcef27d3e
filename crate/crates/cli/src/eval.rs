//! Runs a parsed document: builds every declaration, then executes the
//! directives in order.

use std::collections::HashMap;

use serde_json::{json, Value as Json};
use wcpkit_core::biproduct::{self, BiproductData};
use wcpkit_core::equivalence::{self as eq, CoGaugePair, CoTransferPair, GaugePair, TransferPair};
use wcpkit_core::structures::{self as st, Comonoid, LeftModule, Monoid, RightComodule};
use wcpkit_core::wcc::{self, CoQuadruple, CounitalCoproduct, PrecounitData};
use wcpkit_core::wcp::{self, PreunitData, Quadruple, UnitalProduct};
use wcpkit_core::{CheckReport, Field, Mor, Obj, Result, WcpError};

use crate::ast::*;
use crate::report::{Outcome, Report};

enum Value {
    Obj(Obj),
    Mor(Mor),
    Monoid(Monoid),
    Comonoid(Comonoid),
    Module(LeftModule),
    Comodule(RightComodule),
    Quadruple(Quadruple),
    Coquadruple(CoQuadruple),
    Preunit(Quadruple, Mor),
    Precounit(CoQuadruple, Mor),
    Gauge(GaugePair),
    Cogauge(CoGaugePair),
    Transfer(TransferPair),
    Cotransfer(CoTransferPair),
    Biproduct(Box<BiproductData>),
}

struct Env {
    field: Field,
    values: HashMap<String, Value>,
}

fn missing(name: &str) -> WcpError {
    WcpError::InvalidObject(format!(
        "`{name}` is unavailable because its declaration failed"
    ))
}

macro_rules! getter {
    ($fn:ident, $variant:ident, $ty:ty) => {
        fn $fn(&self, name: &str) -> Result<&$ty> {
            match self.values.get(name) {
                Some(Value::$variant(x)) => Ok(x),
                _ => Err(missing(name)),
            }
        }
    };
}

impl Env {
    getter!(obj, Obj, Obj);
    getter!(mor, Mor, Mor);
    getter!(monoid, Monoid, Monoid);
    getter!(comonoid, Comonoid, Comonoid);
    getter!(module, Module, LeftModule);
    getter!(comodule, Comodule, RightComodule);
    getter!(quadruple, Quadruple, Quadruple);
    getter!(coquadruple, Coquadruple, CoQuadruple);
    getter!(gauge, Gauge, GaugePair);
    getter!(cogauge, Cogauge, CoGaugePair);
    getter!(transfer, Transfer, TransferPair);
    getter!(cotransfer, Cotransfer, CoTransferPair);
    getter!(biproduct_data, Biproduct, BiproductData);

    fn objs(&self, names: &[String]) -> Result<Obj> {
        let objs = names
            .iter()
            .map(|n| self.obj(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Obj::tensor_all(objs))
    }

    fn product(&self, name: &str) -> Result<UnitalProduct> {
        match self.values.get(name) {
            Some(Value::Preunit(q, nu)) => UnitalProduct::labelled(q, nu.clone(), name),
            _ => Err(missing(name)),
        }
    }

    fn coproduct(&self, name: &str) -> Result<CounitalCoproduct> {
        match self.values.get(name) {
            Some(Value::Precounit(cq, ups)) => CounitalCoproduct::labelled(cq, ups.clone(), name),
            _ => Err(missing(name)),
        }
    }

    fn biproduct(&self, name: &str) -> Result<biproduct::Biproduct> {
        self.biproduct_data(name)?.assemble()
    }

    fn declare(&mut self, d: &Decl) -> Result<Value> {
        let a = &d.args;
        let m = |i: usize| self.mor(&a[i]).cloned();
        Ok(match d.kind {
            DeclKind::Monoid => Value::Monoid(Monoid::new(m(0)?, m(1)?)?),
            DeclKind::Comonoid => Value::Comonoid(Comonoid::new(m(0)?, m(1)?)?),
            DeclKind::Module => Value::Module(LeftModule::new(self.monoid(&a[0])?.clone(), m(1)?)?),
            DeclKind::Comodule => {
                Value::Comodule(RightComodule::new(self.comonoid(&a[0])?.clone(), m(1)?)?)
            }
            DeclKind::Quadruple => Value::Quadruple(Quadruple::new(
                self.monoid(&a[0])?.clone(),
                self.obj(&a[1])?.clone(),
                m(2)?,
                m(3)?,
            )?),
            DeclKind::Coquadruple => Value::Coquadruple(CoQuadruple::new(
                self.comonoid(&a[0])?.clone(),
                self.obj(&a[1])?.clone(),
                m(2)?,
                m(3)?,
            )?),
            DeclKind::Preunit => {
                let q = self.quadruple(&a[0])?.clone();
                let nu = m(1)?;
                expect_shape("nu", &nu, &Obj::unit(), &q.av())?;
                Value::Preunit(q, nu)
            }
            DeclKind::Precounit => {
                let cq = self.coquadruple(&a[0])?.clone();
                let ups = m(1)?;
                expect_shape("upsilon", &ups, &cq.vc(), &Obj::unit())?;
                Value::Precounit(cq, ups)
            }
            DeclKind::Gauge => Value::Gauge(GaugePair {
                gamma: m(0)?,
                theta: m(1)?,
            }),
            DeclKind::Cogauge => Value::Cogauge(CoGaugePair {
                pi: m(0)?,
                zeta: m(1)?,
            }),
            DeclKind::Transfer => Value::Transfer(TransferPair { t: m(0)?, s: m(1)? }),
            DeclKind::Cotransfer => Value::Cotransfer(CoTransferPair { p: m(0)?, r: m(1)? }),
            DeclKind::Biproduct => {
                let (q, nu) = match self.values.get(&a[0]) {
                    Some(Value::Preunit(q, nu)) => (q.clone(), nu.clone()),
                    _ => return Err(missing(&a[0])),
                };
                let (cq, ups) = match self.values.get(&a[1]) {
                    Some(Value::Precounit(cq, ups)) => (cq.clone(), ups.clone()),
                    _ => return Err(missing(&a[1])),
                };
                Value::Biproduct(Box::new(BiproductData {
                    name: d.name.clone(),
                    quadruple: q,
                    nu: PreunitData { nu },
                    coquadruple: cq,
                    ups: PrecounitData { upsilon: ups },
                }))
            }
        })
    }

    fn execute(&self, d: &Directive) -> Result<(CheckReport, Vec<(String, Json)>)> {
        let a = &d.args;
        let mut info = vec![];
        let report = match d.verb {
            Verb::CheckMonoid => st::check_monoid(self.monoid(&a[0])?)?,
            Verb::CheckComonoid => st::check_comonoid(self.comonoid(&a[0])?)?,
            Verb::CheckModule => st::check_left_module(self.module(&a[0])?)?,
            Verb::CheckComodule => st::check_right_comodule(self.comodule(&a[0])?)?,
            Verb::CheckQuadruple => wcp::check_quadruple(self.quadruple(&a[0])?)?,
            Verb::CheckCoquadruple => wcc::check_coquadruple(self.coquadruple(&a[0])?)?,
            Verb::CheckBrzezinski => {
                eq::check_brzezinski(self.quadruple(&a[0])?, self.mor(&a[1])?)?
            }
            Verb::CheckPreunit => {
                let p = self.product(&a[0])?;
                info.push(("image-dim".into(), json!(p.build.image().dim())));
                p.full_report()?
            }
            Verb::CheckPrecounit => {
                let c = self.coproduct(&a[0])?;
                info.push(("image-dim".into(), json!(c.build.image().dim())));
                let mut r = c.full_report()?;
                r.extend(wcc::dual_crosscheck(&c.coquadruple, Some(&c.ups))?);
                r
            }
            Verb::CheckBiproduct => {
                let r = biproduct::check_biproduct(self.biproduct_data(&a[0])?)?;
                if r.all_passed() {
                    let b = self.biproduct(&a[0])?;
                    info.push(("image-dim".into(), json!(b.product.build.image().dim())));
                }
                r
            }
            Verb::BuildQuadruple => {
                let b = wcp::build_crossed_product_labelled(self.quadruple(&a[0])?, &a[0])?;
                info.push(("image-dim".into(), json!(b.image().dim())));
                b.report
            }
            Verb::BuildCoquadruple => {
                let b = wcc::build_crossed_coproduct_labelled(self.coquadruple(&a[0])?, &a[0])?;
                info.push(("image-dim".into(), json!(b.image().dim())));
                b.report
            }
            Verb::EquivTransfer => {
                let tp = self.transfer(&a[0])?;
                let (v, w) = (self.product(&a[1])?, self.product(&a[2])?);
                let mut r = eq::verify_ts(tp, &v, &w)?;
                if r.all_passed() {
                    let iso = eq::iso_from_ts(tp, &v, &w)?;
                    r.extend(eq::check_iso(&iso, &v, &w)?);
                    let back = eq::ts_from_iso(&iso, &v, &w)?;
                    r.extend(eq::check_ts_roundtrip(tp, &back, &v, &w)?);
                }
                r
            }
            Verb::EquivGauge => {
                let gp = self.gauge(&a[0])?;
                let (v, w) = (self.product(&a[1])?, self.product(&a[2])?);
                let mut r = eq::verify_gauge(gp, &v, &w)?;
                if r.all_passed() {
                    r.extend(eq::check_prop18(gp, &v, &w)?);
                    let tp = eq::ts_from_gauge(gp, &v, &w)?;
                    r.extend(eq::verify_ts(&tp, &v, &w)?);
                    let back = eq::gauge_from_ts(&tp, &v, &w)?;
                    r.record("gauge-roundtrip", &back == gp, None);
                }
                r
            }
            Verb::EquivCotransfer => {
                let ctp = self.cotransfer(&a[0])?;
                let (v, w) = (self.coproduct(&a[1])?, self.coproduct(&a[2])?);
                let mut r = eq::co_verify_ts(ctp, &v, &w)?;
                if r.all_passed() {
                    let iso = eq::co_iso_from_ts(ctp, &v, &w)?;
                    r.extend(eq::check_co_iso(&iso, &v, &w)?);
                }
                r
            }
            Verb::EquivCogauge => {
                let cgp = self.cogauge(&a[0])?;
                let (v, w) = (self.coproduct(&a[1])?, self.coproduct(&a[2])?);
                let mut r = eq::co_verify_gauge(cgp, &v, &w)?;
                if r.all_passed() {
                    let ctp = eq::co_ts_from_gauge(cgp, &v, &w)?;
                    r.extend(eq::co_verify_ts(&ctp, &v, &w)?);
                    let back = eq::co_gauge_from_ts(&ctp, &v, &w)?;
                    r.record("cogauge-roundtrip", &back == cgp, None);
                }
                r
            }
            Verb::EquivBiproductTransfer => {
                let tp = self.transfer(&a[0])?;
                let (b1, b2) = (self.biproduct(&a[1])?, self.biproduct(&a[2])?);
                biproduct::verify_biproduct_ts(&b1, &b2, &tp.t, &tp.s)?
            }
            Verb::EquivBiproductGauge => {
                let (gp, cgp) = (self.gauge(&a[0])?, self.cogauge(&a[1])?);
                let (b1, b2) = (self.biproduct(&a[2])?, self.biproduct(&a[3])?);
                biproduct::verify_biproduct_gauge(&b1, &b2, gp, cgp)?
            }
            Verb::TransportPreunit => {
                let v = self.product(&a[0])?;
                let gp = self.gauge(&a[1])?;
                let w = eq::transport_structure(&v, gp)?;
                info.push(("image-dim".into(), json!(w.build.image().dim())));
                let mut r = eq::verify_gauge(gp, &v, &w)?;
                r.extend(w.full_report()?);
                r
            }
            Verb::TransportPrecounit => {
                let v = self.coproduct(&a[0])?;
                let cgp = self.cogauge(&a[1])?;
                let w = eq::co_transport(&v, cgp)?;
                info.push(("image-dim".into(), json!(w.build.image().dim())));
                let mut r = eq::co_verify_gauge(cgp, &v, &w)?;
                r.extend(w.full_report()?);
                r
            }
            Verb::TransportBiproduct => {
                let b = self.biproduct(&a[0])?;
                let (gp, cgp) = (self.gauge(&a[1])?, self.cogauge(&a[2])?);
                let b2 = biproduct::transport_biproduct(&b, gp, cgp)?;
                info.push(("image-dim".into(), json!(b2.product.build.image().dim())));
                biproduct::verify_biproduct_gauge(&b, &b2, gp, cgp)?
            }
        };
        Ok((report, info))
    }
}

fn expect_shape(what: &'static str, m: &Mor, dom: &Obj, cod: &Obj) -> Result<()> {
    if m.dom() != dom || m.cod() != cod {
        return Err(WcpError::ShapeMismatch {
            op: what,
            left: format!("{} -> {}", m.dom(), m.cod()),
            right: format!("{dom} -> {cod}"),
        });
    }
    Ok(())
}

fn decl_text(d: &Decl) -> String {
    format!("{} {}", d.kind.keyword(), d.name)
}

/// Runs every directive. Declarations that fail to construct are reported as
/// outcomes of their own; directives that use them then fail too.
pub fn run(doc: &Document) -> Report {
    let mut env = Env {
        field: doc.field,
        values: HashMap::new(),
    };
    let mut report = Report::default();
    for item in &doc.items {
        match item {
            Item::Obj { name, dim } => match Obj::new(name.clone(), *dim) {
                Ok(o) => {
                    env.values.insert(name.clone(), Value::Obj(o));
                }
                Err(e) => report
                    .outcomes
                    .push(Outcome::from_error(format!("obj {name}"), &e)),
            },
            Item::Mor(m) => {
                let built = env.objs(&m.dom).and_then(|dom| {
                    let cod = env.objs(&m.cod)?;
                    Mor::from_entries(env.field, &dom, &cod, m.entries.iter().cloned())
                });
                match built {
                    Ok(f) => {
                        env.values.insert(m.name.clone(), Value::Mor(f));
                    }
                    Err(e) => report
                        .outcomes
                        .push(Outcome::from_error(format!("mor {}", m.name), &e)),
                }
            }
            Item::Decl(d) => match env.declare(d) {
                Ok(v) => {
                    env.values.insert(d.name.clone(), v);
                }
                Err(e) => report.outcomes.push(Outcome::from_error(decl_text(d), &e)),
            },
            Item::Directive(d) => {
                let outcome = match env.execute(d) {
                    Ok((r, info)) => Outcome::from_report(d.to_string(), r, info),
                    Err(e) => Outcome::from_error(d.to_string(), &e),
                };
                report.outcomes.push(outcome);
            }
        }
    }
    report
}
