//! Weak crossed biproducts: a weak crossed product and a weak crossed
//! coproduct on the same `A⊗C` with a common idempotent.
//!
//! The product side is a [`Quadruple`] with `V := C`; the coproduct side is
//! a [`CoQuadruple`] over the comonoid `C` with `V := A`.

use crate::equivalence::{
    self, check_co_iso, check_iso, CoGaugePair, CoTransferPair, GaugePair, IsoWitness, TransferPair,
};
use crate::error::{Result, WcpError};
use crate::report::CheckReport;
use crate::tensor::Mor;
use crate::wcc::{CoQuadruple, CounitalCoproduct, PrecounitData};
use crate::wcp::{PreunitData, Quadruple, UnitalProduct};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiproductData {
    pub name: String,
    pub quadruple: Quadruple,
    pub nu: PreunitData,
    pub coquadruple: CoQuadruple,
    pub ups: PrecounitData,
}

/// Validated biproduct: both sides built over one shared image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biproduct {
    pub name: String,
    pub product: UnitalProduct,
    pub coproduct: CounitalCoproduct,
}

impl BiproductData {
    /// Builds both sides; fails unless [`check_biproduct`] passes.
    pub fn assemble(&self) -> Result<Biproduct> {
        let report = check_biproduct(self)?;
        if !report.all_passed() {
            let failed = report.failed_names().join(", ");
            return Err(WcpError::precondition(
                format!("biproduct conditions ({failed})"),
                Some(report),
            ));
        }
        Ok(Biproduct {
            name: self.name.clone(),
            product: UnitalProduct::new(&self.quadruple, self.nu.nu.clone())?,
            coproduct: CounitalCoproduct::new(&self.coquadruple, self.ups.upsilon.clone())?,
        })
    }
}

impl Biproduct {
    pub fn data(&self) -> BiproductData {
        BiproductData {
            name: self.name.clone(),
            quadruple: self.product.quadruple.clone(),
            nu: self.product.nu.clone(),
            coquadruple: self.coproduct.coquadruple.clone(),
            ups: self.coproduct.ups.clone(),
        }
    }

    /// The common idempotent ∇ = Γ.
    pub fn idempotent(&self) -> &Mor {
        self.product.nabla()
    }
}

fn shapes(bd: &BiproductData) -> Result<()> {
    let (q, cq) = (&bd.quadruple, &bd.coquadruple);
    if q.a.carrier != cq.v {
        return Err(WcpError::shape("biproduct (A)", &q.a.carrier, &cq.v));
    }
    if q.v != cq.c.carrier {
        return Err(WcpError::shape("biproduct (C)", &q.v, &cq.c.carrier));
    }
    if q.field() != cq.field() {
        return Err(WcpError::FieldMismatch(q.field(), cq.field()));
    }
    Ok(())
}

fn side_failure(r: &mut CheckReport, name: &str, e: WcpError) -> Result<()> {
    if e.is_shape() {
        return Err(e);
    }
    if let Some(inner) = e.report() {
        r.extend(inner.clone());
    }
    r.record(name, false, Some(e.to_string()));
    Ok(())
}

/// Product side valid with preunit, coproduct side valid with precounit,
/// `nabla-gamma` (∇ = Γ), `3-1` (η_A = (A⊗ε_C)∘ν) and `3-1-2`
/// (ε_C = υ∘(η_A⊗C)); when both sides build and ∇ = Γ, `shared-image`.
pub fn check_biproduct(bd: &BiproductData) -> Result<CheckReport> {
    shapes(bd)?;
    let (q, cq) = (&bd.quadruple, &bd.coquadruple);
    let mut r = CheckReport::new(format!("biproduct {}", bd.name));
    let product = match UnitalProduct::new(q, bd.nu.nu.clone()) {
        Ok(p) => {
            r.extend(p.full_report()?);
            Some(p)
        }
        Err(e) => {
            side_failure(&mut r, "product-valid", e)?;
            None
        }
    };
    let coproduct = match CounitalCoproduct::new(cq, bd.ups.upsilon.clone()) {
        Ok(c) => {
            r.extend(c.full_report()?);
            Some(c)
        }
        Err(e) => {
            side_failure(&mut r, "coproduct-valid", e)?;
            None
        }
    };
    let same = r.equation("nabla-gamma", q.nabla_formula()?, cq.gamma_formula()?);
    r.equation(
        "3-1",
        q.a.unit.clone(),
        comp![tens![q.a.id(), cq.c.counit]?, bd.nu.nu]?,
    );
    r.equation(
        "3-1-2",
        cq.c.counit.clone(),
        comp![bd.ups.upsilon, tens![q.a.unit, cq.id_c()]?]?,
    );
    if let (Some(p), Some(c), true) = (product, coproduct, same) {
        r.consequence(
            "shared-image",
            p.build.split.inj.clone(),
            c.build.split.inj.clone(),
        );
        r.consequence(
            "shared-image-2",
            p.build.split.proj.clone(),
            c.build.split.proj.clone(),
        );
    }
    Ok(r)
}

fn renamed(out: &mut CheckReport, src: &CheckReport, names: &[(&str, &str)]) {
    for (to, from) in names {
        if let Some(e) = src.get(from) {
            let mut e = e.clone();
            e.name = to.to_string();
            out.entries.push(e);
        }
    }
}

/// Left A-linearity and right C-colinearity of T and S, `bi-preserv-preunit`,
/// `bi-co-preserv-preunit`, `bi-preserv-product`, `bi-co-preserv-product`,
/// `bi-preserv-idemp` (both equalities).
pub fn verify_biproduct_ts(
    b1: &Biproduct,
    b2: &Biproduct,
    t: &Mor,
    s: &Mor,
) -> Result<CheckReport> {
    let prod = equivalence::verify_ts(
        &TransferPair {
            t: t.clone(),
            s: s.clone(),
        },
        &b1.product,
        &b2.product,
    )?;
    let co = equivalence::co_ts_direct(
        &CoTransferPair {
            p: t.clone(),
            r: s.clone(),
        },
        &b1.coproduct,
        &b2.coproduct,
    )?;
    let mut r = CheckReport::new("biproduct transfer pair");
    renamed(
        &mut r,
        &prod,
        &[
            ("bi-left-linear-T", "left-linear-T"),
            ("bi-left-linear-S", "left-linear-S"),
        ],
    );
    renamed(
        &mut r,
        &co,
        &[
            ("bi-colinear-T", "colinear-P"),
            ("bi-colinear-S", "colinear-R"),
        ],
    );
    renamed(&mut r, &prod, &[("bi-preserv-preunit", "preserv-preunit")]);
    renamed(
        &mut r,
        &co,
        &[("bi-co-preserv-preunit", "co-preserv-preunit")],
    );
    renamed(&mut r, &prod, &[("bi-preserv-product", "preserv-product")]);
    renamed(
        &mut r,
        &co,
        &[("bi-co-preserv-product", "co-preserv-product")],
    );
    renamed(
        &mut r,
        &prod,
        &[
            ("bi-preserv-idemp", "preserv-idemp"),
            ("bi-preserv-idemp-2", "preserv-idemp-2"),
        ],
    );
    Ok(r)
}

/// The nine displayed gauge conditions (`bigamma-theta-idemp` with both
/// equalities) and the probe `transfer-consistency` comparing
/// `(μ_A⊗C)∘(A⊗γ)` with `(ζ⊗C)∘(A⊗δ_C)`.
pub fn verify_biproduct_gauge(
    b1: &Biproduct,
    b2: &Biproduct,
    gp: &GaugePair,
    cgp: &CoGaugePair,
) -> Result<CheckReport> {
    let prod = equivalence::verify_gauge(gp, &b1.product, &b2.product)?;
    let co = equivalence::co_gauge_direct(cgp, &b1.coproduct, &b2.coproduct)?;
    let mut r = CheckReport::new("biproduct gauge");
    renamed(
        &mut r,
        &prod,
        &[("bi-gamma-theta-preunit", "gamma-theta-preunit")],
    );
    renamed(
        &mut r,
        &co,
        &[("bi-co-gamma-theta-preunit", "co-gamma-theta-preunit")],
    );
    renamed(
        &mut r,
        &prod,
        &[("bigamma-theta-idemp", "gamma-theta-idemp")],
    );
    renamed(
        &mut r,
        &co,
        &[("bigamma-theta-idemp-2", "co-gamma-theta-idemp")],
    );
    renamed(
        &mut r,
        &prod,
        &[
            ("bi-gamma-theta-psi", "gamma-theta-psi"),
            ("bi-gamma-theta-sigma", "gamma-theta-sigma"),
            ("bi-gamma-theta-special", "gamma-theta-special"),
        ],
    );
    renamed(
        &mut r,
        &co,
        &[
            ("bi-co-gamma-theta-psi", "co-gamma-theta-psi"),
            ("bi-co-gamma-theta-sigma", "co-gamma-theta-sigma"),
            ("bi-co-gamma-theta-special", "co-gamma-theta-special"),
        ],
    );
    let q = &b1.product.quadruple;
    let cq = &b1.coproduct.coquadruple;
    r.probe(
        "transfer-consistency",
        comp![tens![q.a.mult, q.id_v()]?, tens![q.id_a(), gp.gamma]?]?,
        comp![tens![cgp.zeta, cq.id_c()]?, cq.rho()?]?,
    );
    Ok(r)
}

/// `α = p₂∘T∘i₁` with inverse `p₁∘S∘i₂`, asserted to preserve the monoid,
/// comonoid, module and comodule structures.
pub fn biproduct_iso(b1: &Biproduct, b2: &Biproduct, t: &Mor, s: &Mor) -> Result<IsoWitness> {
    let pre = verify_biproduct_ts(b1, b2, t, s)?;
    if !pre.all_passed() {
        let failed = pre.failed_names().join(", ");
        return Err(WcpError::precondition(
            format!("biproduct transfer conditions ({failed})"),
            Some(pre),
        ));
    }
    let (p1, p2) = (&b1.product.build, &b2.product.build);
    let iso = IsoWitness {
        alpha: comp![p2.proj(), t, p1.inj()]?,
        alpha_inv: comp![p1.proj(), s, p2.inj()]?,
    };
    let mut r = check_iso(&iso, &b1.product, &b2.product)?;
    r.extend(check_co_iso(&iso, &b1.coproduct, &b2.coproduct)?);
    r.ensure("biproduct_iso")?;
    Ok(iso)
}

/// Transports both sides of `b` along `(γ, θ)` and `(π, ζ)` and validates
/// the result as a biproduct.
pub fn transport_biproduct(b: &Biproduct, gp: &GaugePair, cgp: &CoGaugePair) -> Result<Biproduct> {
    let product = equivalence::transport_structure(&b.product, gp)?;
    let coproduct = equivalence::co_transport(&b.coproduct, cgp)?;
    let data = BiproductData {
        name: format!("{}-transported", b.name),
        quadruple: product.quadruple.clone(),
        nu: product.nu.clone(),
        coquadruple: coproduct.coquadruple.clone(),
        ups: coproduct.ups.clone(),
    };
    data.assemble()
}
