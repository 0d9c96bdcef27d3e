//! Equivalence of weak crossed products (and coproducts): translations
//! between isomorphisms of the images, transfer pairs `(T, S)` and gauge
//! pairs `(γ, θ)`, each verified exactly.

use crate::error::{Result, WcpError};
use crate::report::CheckReport;
use crate::tensor::{Mor, Obj};
use crate::wcc::{self, dualize, CounitalCoproduct};
use crate::wcp::{self, PreunitData, Quadruple, UnitalProduct, IMAGE_LABEL};

/// `T: A⊗V → A⊗W`, `S: A⊗W → A⊗V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferPair {
    pub t: Mor,
    pub s: Mor,
}

/// `γ: V → A⊗W`, `θ: W → A⊗V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugePair {
    pub gamma: Mor,
    pub theta: Mor,
}

/// `α: A×V → A×W` with its inverse (or the comonoid analogue on `V□C`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub alpha: Mor,
    pub alpha_inv: Mor,
}

/// `P: V⊗C → W⊗C`, `R: W⊗C → V⊗C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoTransferPair {
    pub p: Mor,
    pub r: Mor,
}

/// `π: W⊗C → V`, `ζ: V⊗C → W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoGaugePair {
    pub pi: Mor,
    pub zeta: Mor,
}

fn require(report: CheckReport, condition: &str) -> Result<CheckReport> {
    if report.all_passed() {
        Ok(report)
    } else {
        let failed = report.failed_names().join(", ");
        Err(WcpError::precondition(
            format!("{condition} ({failed})"),
            Some(report),
        ))
    }
}

fn same_monoid(v: &UnitalProduct, w: &UnitalProduct) -> Result<()> {
    if v.quadruple.a != w.quadruple.a {
        return Err(WcpError::shape(
            "equivalence (monoid A differs)",
            &v.quadruple.a.carrier,
            &w.quadruple.a.carrier,
        ));
    }
    Ok(())
}

fn same_comonoid(v: &CounitalCoproduct, w: &CounitalCoproduct) -> Result<()> {
    if v.coquadruple.c != w.coquadruple.c {
        return Err(WcpError::shape(
            "coequivalence (comonoid C differs)",
            &v.coquadruple.c.carrier,
            &w.coquadruple.c.carrier,
        ));
    }
    Ok(())
}

/// `(μ_A⊗X)∘(A⊗f)` for `f: Y → A⊗X`: the left-linear extension of `f`.
fn extend(q: &Quadruple, f: &Mor) -> Result<Mor> {
    let x = f
        .cod()
        .strip_prefix(&q.a.carrier)
        .ok_or_else(|| WcpError::shape("map into A⊗X", f.cod(), &q.a.carrier))?;
    comp![
        tens![q.a.mult, Mor::identity(q.field(), &x)]?,
        tens![q.id_a(), f]?
    ]
}

/// Conditions `left-linear-T`, `left-linear-S`, `preserv-preunit`,
/// `preserv-product`, `preserv-idemp` (S∘T = ∇_V) and `preserv-idemp-2`
/// (T∘S = ∇_W); when all hold, the consequences `preserv-comp`,
/// `preserv-comp-2`, `preserv-product-s` and `preserv-preunit-b`.
pub fn verify_ts(tp: &TransferPair, v: &UnitalProduct, w: &UnitalProduct) -> Result<CheckReport> {
    same_monoid(v, w)?;
    let (qv, qw) = (&v.quadruple, &w.quadruple);
    let (t, s) = (&tp.t, &tp.s);
    let (phi_v, phi_w) = (qv.phi()?, qw.phi()?);
    let ia = qv.id_a();
    let mut r = CheckReport::new("transfer pair");
    r.equation(
        "left-linear-T",
        comp![t, phi_v]?,
        comp![phi_w, tens![ia, t]?]?,
    );
    r.equation(
        "left-linear-S",
        comp![s, phi_w]?,
        comp![phi_v, tens![ia, s]?]?,
    );
    r.equation("preserv-preunit", comp![t, v.nu.nu]?, w.nu.nu.clone());
    r.equation(
        "preserv-product",
        comp![t, v.build.mu_big]?,
        comp![w.build.mu_big, tens![t, t]?]?,
    );
    r.equation("preserv-idemp", comp![s, t]?, v.nabla().clone());
    r.equation("preserv-idemp-2", comp![t, s]?, w.nabla().clone());
    if r.all_passed() {
        r.consequence("preserv-comp", comp![t, s, t]?, t.clone());
        r.consequence("preserv-comp-2", comp![s, t, s]?, s.clone());
        r.consequence(
            "preserv-product-s",
            comp![s, w.build.mu_big]?,
            comp![v.build.mu_big, tens![s, s]?]?,
        );
        r.consequence("preserv-preunit-b", comp![s, w.nu.nu]?, v.nu.nu.clone());
    }
    Ok(r)
}

/// Conditions `gamma-theta-preunit`, `gamma-theta-idemp`, `gamma-theta-psi`,
/// `gamma-theta-sigma`, `gamma-theta-special`; when all hold, the
/// consequences `gamma-theta-special-2` and `gamma-theta-preunit-b`.
pub fn verify_gauge(gp: &GaugePair, v: &UnitalProduct, w: &UnitalProduct) -> Result<CheckReport> {
    same_monoid(v, w)?;
    let (qv, qw) = (&v.quadruple, &w.quadruple);
    let (g, th) = (&gp.gamma, &gp.theta);
    let phi_w = qw.phi()?;
    let (ia, iw) = (qv.id_a(), qw.id_v());
    let eta = &qv.a.unit;
    let mut r = CheckReport::new("gauge pair");
    r.equation(
        "gamma-theta-preunit",
        v.nu.nu.clone(),
        comp![extend(qv, th)?, w.nu.nu]?,
    );
    r.equation("gamma-theta-idemp", th.clone(), comp![v.nabla(), th]?);
    r.equation(
        "gamma-theta-psi",
        qw.psi.clone(),
        comp![
            phi_w,
            tens![qv.a.mult, g]?,
            tens![ia, qv.psi]?,
            tens![th, ia]?
        ]?,
    );
    r.equation(
        "gamma-theta-sigma",
        qw.sigma.clone(),
        comp![extend(qv, g)?, v.build.mu_big, tens![th, th]?]?,
    );
    r.equation(
        "gamma-theta-special",
        comp![extend(qv, th)?, g]?,
        comp![v.nabla(), tens![eta, qv.id_v()]?]?,
    );
    if r.all_passed() {
        r.consequence(
            "gamma-theta-special-2",
            comp![extend(qv, g)?, th]?,
            comp![w.nabla(), tens![eta, iw]?]?,
        );
        r.consequence(
            "gamma-theta-preunit-b",
            w.nu.nu.clone(),
            comp![extend(qv, g)?, v.nu.nu]?,
        );
    }
    Ok(r)
}

/// `T = (μ_A⊗W)∘(A⊗γ)`, `S = (μ_A⊗V)∘(A⊗θ)`; requires the gauge
/// conditions and asserts the transfer conditions.
pub fn ts_from_gauge(gp: &GaugePair, v: &UnitalProduct, w: &UnitalProduct) -> Result<TransferPair> {
    require(verify_gauge(gp, v, w)?, "gauge conditions")?;
    let q = &v.quadruple;
    let tp = TransferPair {
        t: extend(q, &gp.gamma)?,
        s: extend(q, &gp.theta)?,
    };
    verify_ts(&tp, v, w)?.ensure("ts_from_gauge")?;
    Ok(tp)
}

/// `γ = T∘(η_A⊗V)`, `θ = ∇_V∘S∘(η_A⊗W)`; requires the transfer
/// conditions and asserts the gauge conditions.
pub fn gauge_from_ts(tp: &TransferPair, v: &UnitalProduct, w: &UnitalProduct) -> Result<GaugePair> {
    require(verify_ts(tp, v, w)?, "transfer conditions")?;
    let eta = &v.quadruple.a.unit;
    let gp = GaugePair {
        gamma: comp![tp.t, tens![eta, v.quadruple.id_v()]?]?,
        theta: comp![v.nabla(), tp.s, tens![eta, w.quadruple.id_v()]?]?,
    };
    verify_gauge(&gp, v, w)?.ensure("gauge_from_ts")?;
    Ok(gp)
}

/// Inverse laws, unit, multiplicativity and left linearity of α.
pub fn check_iso(iso: &IsoWitness, v: &UnitalProduct, w: &UnitalProduct) -> Result<CheckReport> {
    same_monoid(v, w)?;
    let (a, ai) = (&iso.alpha, &iso.alpha_inv);
    let (mv, mw) = (v.image_monoid()?, w.image_monoid()?);
    let mut r = CheckReport::new("isomorphism");
    r.equation("iso-left-inverse", comp![ai, a]?, mv.id());
    r.equation("iso-right-inverse", comp![a, ai]?, mw.id());
    r.equation("iso-unit", comp![a, mv.unit]?, mw.unit.clone());
    r.equation(
        "iso-mult",
        comp![mw.mult, tens![a, a]?]?,
        comp![a, mv.mult]?,
    );
    let (mdv, mdw) = (v.image_module()?, w.image_module()?);
    r.equation(
        "iso-linear",
        comp![a, mdv.action]?,
        comp![mdw.action, tens![v.quadruple.id_a(), a]?]?,
    );
    Ok(r)
}

/// `α = p_W∘T∘i_V` with inverse `p_V∘S∘i_W`; requires the transfer
/// conditions and asserts `eq1`–`eq4` and the isomorphism properties.
pub fn iso_from_ts(tp: &TransferPair, v: &UnitalProduct, w: &UnitalProduct) -> Result<IsoWitness> {
    require(verify_ts(tp, v, w)?, "transfer conditions")?;
    let (iv, pv) = (v.build.inj(), v.build.proj());
    let (iw, pw) = (w.build.inj(), w.build.proj());
    let (t, s) = (&tp.t, &tp.s);
    let mut r = CheckReport::new("iso from transfer pair");
    r.consequence("eq1", comp![pv, s]?, comp![pv, s, w.nabla()]?);
    r.consequence("eq2", comp![pw, t]?, comp![pw, t, v.nabla()]?);
    r.consequence("eq3", comp![s, iw]?, comp![v.nabla(), s, iw]?);
    r.consequence("eq4", comp![t, iv]?, comp![w.nabla(), t, iv]?);
    let iso = IsoWitness {
        alpha: comp![pw, t, iv]?,
        alpha_inv: comp![pv, s, iw]?,
    };
    r.extend(check_iso(&iso, v, w)?);
    r.ensure("iso_from_ts")?;
    Ok(iso)
}

/// `T = i_W∘α∘p_V`, `S = i_V∘α⁻¹∘p_W`; requires the isomorphism
/// properties and asserts the transfer conditions.
pub fn ts_from_iso(iso: &IsoWitness, v: &UnitalProduct, w: &UnitalProduct) -> Result<TransferPair> {
    require(check_iso(iso, v, w)?, "isomorphism conditions")?;
    let tp = TransferPair {
        t: comp![w.build.inj(), iso.alpha, v.build.proj()]?,
        s: comp![v.build.inj(), iso.alpha_inv, w.build.proj()]?,
    };
    verify_ts(&tp, v, w)?.ensure("ts_from_iso")?;
    Ok(tp)
}

/// For `T′` obtained by the round trip transfer → iso → transfer:
/// `T′ = T∘∇_V`, `T′ = ∇_W∘T` and `T′ = T∘S∘T`.
pub fn check_ts_roundtrip(
    original: &TransferPair,
    round: &TransferPair,
    v: &UnitalProduct,
    w: &UnitalProduct,
) -> Result<CheckReport> {
    let (t, s, t2) = (&original.t, &original.s, &round.t);
    let mut r = CheckReport::new("transfer round trip");
    r.equation("roundtrip-T-right", t2.clone(), comp![t, v.nabla()]?);
    r.equation("roundtrip-T-left", t2.clone(), comp![w.nabla(), t]?);
    r.equation("roundtrip-T-tst", t2.clone(), comp![t, s, t]?);
    let s2 = &round.s;
    r.equation("roundtrip-S-right", s2.clone(), comp![s, w.nabla()]?);
    r.equation("roundtrip-S-left", s2.clone(), comp![v.nabla(), s]?);
    Ok(r)
}

/// `sup-11`, given `gamma-theta-sigma` and `gamma-theta-special`.
pub fn check_prop18(gp: &GaugePair, v: &UnitalProduct, w: &UnitalProduct) -> Result<CheckReport> {
    let full = verify_gauge(gp, v, w)?;
    let mut hyp = CheckReport::new("prop18 hypotheses");
    for name in ["gamma-theta-sigma", "gamma-theta-special"] {
        if let Some(e) = full.get(name) {
            hyp.entries.push(e.clone());
        }
    }
    let mut r = require(hyp, "gamma-theta-sigma and gamma-theta-special")?;
    r.title = "prop18".into();
    let (qv, qw) = (&v.quadruple, &w.quadruple);
    let iw = qw.id_v();
    r.consequence(
        "sup-11",
        comp![
            qw.phi()?,
            tens![qv.a.mult, qw.sigma]?,
            tens![qv.id_a(), gp.gamma, iw]?,
            tens![qv.psi, iw]?,
            tens![qv.id_v(), gp.gamma]?
        ]?,
        comp![extend(qv, &gp.gamma)?, qv.sigma]?,
    );
    Ok(r)
}

/// Defines ψ_W, σ_W, ν_W from a gauge pair on `v` by the gauge formulas and
/// verifies the result with the full checker suite.
///
/// Requires `θ = ∇_V∘θ` and `gamma-theta-special`. `W` is read off the
/// codomain `A⊗W` of γ.
pub fn transport_structure(v: &UnitalProduct, gp: &GaugePair) -> Result<UnitalProduct> {
    transport_structure_labelled(v, gp, IMAGE_LABEL)
}

pub fn transport_structure_labelled(
    v: &UnitalProduct,
    gp: &GaugePair,
    label: &str,
) -> Result<UnitalProduct> {
    let qv = &v.quadruple;
    let (g, th) = (&gp.gamma, &gp.theta);
    let w_obj = g
        .cod()
        .strip_prefix(&qv.a.carrier)
        .ok_or_else(|| WcpError::shape("gamma codomain", g.cod(), &qv.a.carrier))?;
    if g.dom() != &qv.v || th.dom() != &w_obj || th.cod() != &qv.av() {
        return Err(WcpError::shape(
            "gauge pair",
            format!("{} -> {}, {} -> {}", g.dom(), g.cod(), th.dom(), th.cod()),
            format!("{} -> A⊗W, W -> {}", qv.v, qv.av()),
        ));
    }
    let mut pre = CheckReport::new("transport preconditions");
    pre.equation("gamma-theta-idemp", th.clone(), comp![v.nabla(), th]?);
    pre.equation(
        "gamma-theta-special",
        comp![extend(qv, th)?, g]?,
        comp![v.nabla(), tens![qv.a.unit, qv.id_v()]?]?,
    );
    require(pre, "gamma-theta-idemp and gamma-theta-special")?;

    let ia = qv.id_a();
    let iw = Mor::identity(qv.field(), &w_obj);
    let phi_w = tens![qv.a.mult, iw]?;
    let psi_w = comp![
        phi_w,
        tens![qv.a.mult, g]?,
        tens![ia, qv.psi]?,
        tens![th, ia]?
    ]?;
    let sigma_w = comp![extend(qv, g)?, v.build.mu_big, tens![th, th]?]?;
    let nu_w = comp![extend(qv, g)?, v.nu.nu]?;

    let transport_failed = |report: CheckReport| WcpError::TransportFailed {
        failed: report.failed_names(),
        report: Box::new(report),
    };
    let qw = Quadruple::new(qv.a.clone(), w_obj, psi_w, sigma_w)?;
    let diag = wcp::check_quadruple(&qw)?;
    if !diag.all_passed() {
        return Err(transport_failed(diag));
    }
    let w = match UnitalProduct::labelled(&qw, nu_w, label) {
        Ok(w) => w,
        Err(e) => {
            let mut report = e.report().cloned().unwrap_or_else(|| {
                let mut r = CheckReport::new("transport");
                r.record("build", false, Some(e.to_string()));
                r
            });
            report.title = "transport".into();
            return Err(transport_failed(report));
        }
    };
    let mut report = w.full_report()?;
    report.extend(verify_gauge(gp, v, &w)?);
    if !report.all_passed() {
        return Err(transport_failed(report));
    }
    Ok(w)
}

/// Brzeziński conditions `brz1`, `brz2`, `brz3` (both equalities),
/// `nabla-identity`, and that `η_A⊗η_V` is a two-sided unit of μ_{A⊗V}.
pub fn check_brzezinski(q: &Quadruple, eta_v: &Mor) -> Result<CheckReport> {
    let (ia, iv) = (q.id_a(), q.id_v());
    let eta = &q.a.unit;
    let mut r = CheckReport::new("brzezinski");
    r.equation("brz1", comp![q.psi, tens![eta_v, ia]?]?, tens![ia, eta_v]?);
    r.equation("brz2", comp![q.psi, tens![iv, eta]?]?, tens![eta, iv]?);
    r.equation("brz3", comp![q.sigma, tens![eta_v, iv]?]?, tens![eta, iv]?);
    r.equation(
        "brz3-2",
        comp![q.sigma, tens![iv, eta_v]?]?,
        tens![eta, iv]?,
    );
    r.equation("nabla-identity", q.nabla_formula()?, q.id_av());
    let unit = tens![eta, eta_v]?;
    let mu = q.mu_big()?;
    let iav = q.id_av();
    r.equation("unit-left", comp![mu, tens![unit, iav]?]?, iav.clone());
    r.equation("unit-right", comp![mu, tens![iav, unit]?]?, iav.clone());
    Ok(r)
}

/// Hypotheses `gamma-theta-psi`, `gamma-theta-sigma`,
/// `gamma-theta-special-BRZ`; derived `gamma-theta-special-BRZ-b`,
/// `aux-brz`, `gamma-theta-preunit-b-BRZ`, `gamma-theta-preunit-BRZ` and
/// `sup-11-Pan`, which together cover the remaining hypotheses of the
/// classical gauge criterion.
///
/// Requires ∇ = id on both sides.
pub fn check_panaite_reduction(
    gp: &GaugePair,
    v: &Quadruple,
    eta_v: &Mor,
    w: &Quadruple,
    eta_w: &Mor,
) -> Result<CheckReport> {
    let mut pre = CheckReport::new("brzezinski case");
    pre.equation("nabla-identity-V", v.nabla_formula()?, v.id_av());
    pre.equation("nabla-identity-W", w.nabla_formula()?, w.id_av());
    require(pre, "nabla = id on both sides")?;
    let (g, th) = (&gp.gamma, &gp.theta);
    let (ia, iv, iw) = (v.id_a(), v.id_v(), w.id_v());
    let eta = &v.a.unit;
    let mu_v = v.mu_big()?;
    let mut r = CheckReport::new("panaite reduction");
    r.note("derived: gamma-theta-special-BRZ-b is gamma-theta-special-BRZ-1-Pan; gamma-theta-preunit-BRZ and gamma-theta-preunit-b-BRZ are the two equalities of gamma-theta-unit-Pan");
    r.equation(
        "gamma-theta-psi",
        w.psi.clone(),
        comp![
            w.phi()?,
            tens![v.a.mult, g]?,
            tens![ia, v.psi]?,
            tens![th, ia]?
        ]?,
    );
    r.equation(
        "gamma-theta-sigma",
        w.sigma.clone(),
        comp![extend(v, g)?, mu_v, tens![th, th]?]?,
    );
    r.equation(
        "gamma-theta-special-BRZ",
        comp![extend(v, th)?, g]?,
        tens![eta, iv]?,
    );
    if !r.all_passed() {
        r.note("hypotheses failed; derived conditions not evaluated");
        return Ok(r);
    }
    r.consequence(
        "gamma-theta-special-BRZ-b",
        comp![extend(v, g)?, th]?,
        tens![eta, iw]?,
    );
    let inner = comp![w.phi()?, tens![ia, w.sigma]?, tens![comp![g, eta_v]?, iw]?]?;
    r.consequence("aux-brz", comp![w.phi()?, tens![ia, inner]?]?, w.id_av());
    r.consequence(
        "gamma-theta-preunit-b-BRZ",
        comp![g, eta_v]?,
        tens![eta, eta_w]?,
    );
    r.consequence(
        "gamma-theta-preunit-BRZ",
        comp![th, eta_w]?,
        tens![eta, eta_v]?,
    );
    r.consequence(
        "sup-11-Pan",
        comp![
            w.phi()?,
            tens![v.a.mult, w.sigma]?,
            tens![ia, g, iw]?,
            tens![v.psi, iw]?,
            tens![iv, g]?
        ]?,
        comp![extend(v, g)?, v.sigma]?,
    );
    Ok(r)
}

// Coproduct side.

/// The product obtained by dualizing a coproduct with precounit.
pub fn dual_product(c: &CounitalCoproduct) -> Result<UnitalProduct> {
    let q = wcc::dual_quadruple(&c.coquadruple)?;
    UnitalProduct::labelled(
        &q,
        dualize(&c.ups.upsilon),
        c.build.image().factors()[0].label.as_str(),
    )
}

fn agree(out: &mut CheckReport, direct: &CheckReport, dual: &CheckReport, names: &[(&str, &str)]) {
    for (co, pr) in names {
        if let (Some(a), Some(b)) = (direct.passed(co), dual.passed(pr)) {
            out.record(
                &format!("agree:{co}"),
                a == b,
                Some(format!("direct {a}, dualized {pr} {b}")),
            );
        }
    }
}

const CO_TS_NAMES: &[(&str, &str)] = &[
    ("colinear-P", "left-linear-T"),
    ("colinear-R", "left-linear-S"),
    ("co-preserv-preunit", "preserv-preunit"),
    ("co-preserv-product", "preserv-product"),
    ("co-preserv-idemp", "preserv-idemp-2"),
    ("co-preserv-idemp-2", "preserv-idemp"),
    ("co-preserv-comp", "preserv-comp"),
    ("co-preserv-comp-2", "preserv-comp-2"),
    ("co-preserv-product-r", "preserv-product-s"),
    ("co-preserv-preunit-b", "preserv-preunit-b"),
];

const CO_GAUGE_NAMES: &[(&str, &str)] = &[
    ("co-gamma-theta-preunit", "gamma-theta-preunit"),
    ("co-gamma-theta-idemp", "gamma-theta-idemp"),
    ("co-gamma-theta-psi", "gamma-theta-psi"),
    ("co-gamma-theta-sigma", "gamma-theta-sigma"),
    ("co-gamma-theta-special", "gamma-theta-special"),
    ("co-gamma-theta-special-2", "gamma-theta-special-2"),
    ("co-gamma-theta-preunit-b", "gamma-theta-preunit-b"),
];

pub(crate) fn co_ts_direct(
    ctp: &CoTransferPair,
    v: &CounitalCoproduct,
    w: &CounitalCoproduct,
) -> Result<CheckReport> {
    same_comonoid(v, w)?;
    let (cv, cw) = (&v.coquadruple, &w.coquadruple);
    let (p, rr) = (&ctp.p, &ctp.r);
    let ic = cv.id_c();
    let (rho_v, rho_w) = (cv.rho()?, cw.rho()?);
    let (uv, uw) = (&v.ups.upsilon, &w.ups.upsilon);
    let (dv, dw) = (&v.build.delta_big, &w.build.delta_big);
    let mut r = CheckReport::new("cotransfer pair");
    r.equation("colinear-P", comp![rho_w, p]?, comp![tens![p, ic]?, rho_v]?);
    r.equation(
        "colinear-R",
        comp![rho_v, rr]?,
        comp![tens![rr, ic]?, rho_w]?,
    );
    r.equation("co-preserv-preunit", comp![uw, p]?, uv.clone());
    r.equation(
        "co-preserv-product",
        comp![dw, p]?,
        comp![tens![p, p]?, dv]?,
    );
    r.equation("co-preserv-idemp", comp![rr, p]?, v.gamma().clone());
    r.equation("co-preserv-idemp-2", comp![p, rr]?, w.gamma().clone());
    if r.all_passed() {
        r.consequence("co-preserv-comp", comp![p, rr, p]?, p.clone());
        r.consequence("co-preserv-comp-2", comp![rr, p, rr]?, rr.clone());
        r.consequence(
            "co-preserv-product-r",
            comp![dv, rr]?,
            comp![tens![rr, rr]?, dw]?,
        );
        r.consequence("co-preserv-preunit-b", comp![uv, rr]?, uw.clone());
    }
    Ok(r)
}

/// Coproduct transfer conditions (`colinear-P`, `colinear-R`,
/// `co-preserv-preunit`, `co-preserv-product`, `co-preserv-idemp`,
/// `co-preserv-idemp-2` and consequences), each cross-checked against
/// [`verify_ts`] on the dualized products (`agree:*` entries).
pub fn co_verify_ts(
    ctp: &CoTransferPair,
    v: &CounitalCoproduct,
    w: &CounitalCoproduct,
) -> Result<CheckReport> {
    let mut r = co_ts_direct(ctp, v, w)?;
    let (dv, dw) = (dual_product(v)?, dual_product(w)?);
    let dual_tp = TransferPair {
        t: dualize(&ctp.p),
        s: dualize(&ctp.r),
    };
    let dual = verify_ts(&dual_tp, &dw, &dv)?;
    let direct = r.clone();
    agree(&mut r, &direct, &dual, CO_TS_NAMES);
    Ok(r)
}

pub(crate) fn co_gauge_direct(
    cgp: &CoGaugePair,
    v: &CounitalCoproduct,
    w: &CounitalCoproduct,
) -> Result<CheckReport> {
    same_comonoid(v, w)?;
    let (cv, cw) = (&v.coquadruple, &w.coquadruple);
    let (pi, z) = (&cgp.pi, &cgp.zeta);
    let ic = cv.id_c();
    let delta = &cv.c.comult;
    let (rho_v, rho_w) = (cv.rho()?, cw.rho()?);
    let (uv, uw) = (&v.ups.upsilon, &w.ups.upsilon);
    let z_ext = comp![tens![z, ic]?, rho_v]?;
    let pi_ext = comp![tens![pi, ic]?, rho_w]?;
    let mut r = CheckReport::new("cogauge pair");
    r.equation("co-gamma-theta-preunit", comp![uw, z_ext]?, uv.clone());
    r.equation("co-gamma-theta-idemp", z.clone(), comp![z, v.gamma()]?);
    r.equation(
        "co-gamma-theta-psi",
        cw.chi.clone(),
        comp![tens![ic, z]?, tens![cv.chi, ic]?, tens![pi, delta]?, rho_w]?,
    );
    r.equation(
        "co-gamma-theta-sigma",
        cw.tau.clone(),
        comp![tens![z, z]?, v.build.delta_big, pi_ext]?,
    );
    r.equation(
        "co-gamma-theta-special",
        comp![pi, z_ext]?,
        comp![tens![cv.id_v(), cv.c.counit]?, v.gamma()]?,
    );
    if r.all_passed() {
        r.consequence(
            "co-gamma-theta-special-2",
            comp![z, pi_ext]?,
            comp![tens![cw.id_v(), cw.c.counit]?, w.gamma()]?,
        );
        r.consequence("co-gamma-theta-preunit-b", uw.clone(), comp![uv, pi_ext]?);
    }
    Ok(r)
}

/// Coproduct gauge conditions (`co-gamma-theta-*`), cross-checked against
/// [`verify_gauge`] on the dualized products.
pub fn co_verify_gauge(
    cgp: &CoGaugePair,
    v: &CounitalCoproduct,
    w: &CounitalCoproduct,
) -> Result<CheckReport> {
    let mut r = co_gauge_direct(cgp, v, w)?;
    let (dv, dw) = (dual_product(v)?, dual_product(w)?);
    let dual_gp = GaugePair {
        gamma: dualize(&cgp.pi),
        theta: dualize(&cgp.zeta),
    };
    let dual = verify_gauge(&dual_gp, &dv, &dw)?;
    let direct = r.clone();
    agree(&mut r, &direct, &dual, CO_GAUGE_NAMES);
    Ok(r)
}

/// `P = (ζ⊗C)∘(V⊗δ_C)`, `R = (π⊗C)∘(W⊗δ_C)`.
pub fn co_ts_from_gauge(
    cgp: &CoGaugePair,
    v: &CounitalCoproduct,
    w: &CounitalCoproduct,
) -> Result<CoTransferPair> {
    require(co_verify_gauge(cgp, v, w)?, "cogauge conditions")?;
    let ic = v.coquadruple.id_c();
    let ctp = CoTransferPair {
        p: comp![tens![cgp.zeta, ic]?, v.coquadruple.rho()?]?,
        r: comp![tens![cgp.pi, ic]?, w.coquadruple.rho()?]?,
    };
    co_verify_ts(&ctp, v, w)?.ensure("co_ts_from_gauge")?;
    Ok(ctp)
}

/// `π = (V⊗ε_C)∘R`, `ζ = (W⊗ε_C)∘P∘Γ_V`.
pub fn co_gauge_from_ts(
    ctp: &CoTransferPair,
    v: &CounitalCoproduct,
    w: &CounitalCoproduct,
) -> Result<CoGaugePair> {
    require(co_verify_ts(ctp, v, w)?, "cotransfer conditions")?;
    let eps = &v.coquadruple.c.counit;
    let cgp = CoGaugePair {
        pi: comp![tens![v.coquadruple.id_v(), eps]?, ctp.r]?,
        zeta: comp![tens![w.coquadruple.id_v(), eps]?, ctp.p, v.gamma()]?,
    };
    co_verify_gauge(&cgp, v, w)?.ensure("co_gauge_from_ts")?;
    Ok(cgp)
}

/// Inverse laws, counit, comultiplicativity and right colinearity of
/// `β: V□C → W□C`.
pub fn check_co_iso(
    iso: &IsoWitness,
    v: &CounitalCoproduct,
    w: &CounitalCoproduct,
) -> Result<CheckReport> {
    same_comonoid(v, w)?;
    let (b, bi) = (&iso.alpha, &iso.alpha_inv);
    let (cv, cw) = (v.image_comonoid()?, w.image_comonoid()?);
    let mut r = CheckReport::new("coisomorphism");
    r.equation("iso-left-inverse", comp![bi, b]?, cv.id());
    r.equation("iso-right-inverse", comp![b, bi]?, cw.id());
    r.equation("iso-counit", comp![cw.counit, b]?, cv.counit.clone());
    r.equation(
        "iso-comult",
        comp![tens![b, b]?, cv.comult]?,
        comp![cw.comult, b]?,
    );
    let (mv, mw) = (v.image_comodule()?, w.image_comodule()?);
    r.equation(
        "iso-colinear",
        comp![mw.coaction, b]?,
        comp![tens![b, v.coquadruple.id_c()]?, mv.coaction]?,
    );
    Ok(r)
}

/// `β = p_W∘P∘i_V` with inverse `p_V∘R∘i_W`.
pub fn co_iso_from_ts(
    ctp: &CoTransferPair,
    v: &CounitalCoproduct,
    w: &CounitalCoproduct,
) -> Result<IsoWitness> {
    require(co_verify_ts(ctp, v, w)?, "cotransfer conditions")?;
    let iso = IsoWitness {
        alpha: comp![w.build.split.proj, ctp.p, v.build.split.inj]?,
        alpha_inv: comp![v.build.split.proj, ctp.r, w.build.split.inj]?,
    };
    check_co_iso(&iso, v, w)?.ensure("co_iso_from_ts")?;
    Ok(iso)
}

/// Defines χ_W, τ_W, υ^W from a cogauge pair on `v` and verifies the
/// result with the full coproduct checker suite.
pub fn co_transport(v: &CounitalCoproduct, cgp: &CoGaugePair) -> Result<CounitalCoproduct> {
    let cv = &v.coquadruple;
    let (pi, z) = (&cgp.pi, &cgp.zeta);
    let w_obj = z.cod().clone();
    let wc = w_obj.tensor(&cv.c.carrier);
    if z.dom() != &cv.vc() || pi.dom() != &wc || pi.cod() != &cv.v {
        return Err(WcpError::shape(
            "cogauge pair",
            format!("{} -> {}, {} -> {}", pi.dom(), pi.cod(), z.dom(), z.cod()),
            format!("W⊗C -> {}, {} -> W", cv.v, cv.vc()),
        ));
    }
    let ic = cv.id_c();
    let iw = Mor::identity(cv.field(), &w_obj);
    let rho_v = cv.rho()?;
    let rho_w = tens![iw, cv.c.comult]?;
    let mut pre = CheckReport::new("cotransport preconditions");
    pre.equation("co-gamma-theta-idemp", z.clone(), comp![z, v.gamma()]?);
    pre.equation(
        "co-gamma-theta-special",
        comp![pi, tens![z, ic]?, rho_v]?,
        comp![tens![cv.id_v(), cv.c.counit]?, v.gamma()]?,
    );
    require(pre, "co-gamma-theta-idemp and co-gamma-theta-special")?;

    let pi_ext = comp![tens![pi, ic]?, rho_w]?;
    let chi_w = comp![
        tens![ic, z]?,
        tens![cv.chi, ic]?,
        tens![pi, cv.c.comult]?,
        rho_w
    ]?;
    let tau_w = comp![tens![z, z]?, v.build.delta_big, pi_ext]?;
    let ups_w = comp![v.ups.upsilon, pi_ext]?;

    let transport_failed = |report: CheckReport| WcpError::TransportFailed {
        failed: report.failed_names(),
        report: Box::new(report),
    };
    let cw = wcc::CoQuadruple::new(cv.c.clone(), w_obj, chi_w, tau_w)?;
    let diag = wcc::check_coquadruple(&cw)?;
    if !diag.all_passed() {
        return Err(transport_failed(diag));
    }
    let w = match CounitalCoproduct::new(&cw, ups_w) {
        Ok(w) => w,
        Err(e) => {
            let mut report = e.report().cloned().unwrap_or_else(|| {
                let mut r = CheckReport::new("cotransport");
                r.record("build", false, Some(e.to_string()));
                r
            });
            report.title = "cotransport".into();
            return Err(transport_failed(report));
        }
    };
    let mut report = w.full_report()?;
    report.extend(co_verify_gauge(cgp, v, &w)?);
    if !report.all_passed() {
        return Err(transport_failed(report));
    }
    Ok(w)
}

/// Identity gauge `γ = θ = ∇_V∘(η_A⊗V)` of a product with itself.
pub fn identity_gauge(v: &UnitalProduct) -> Result<GaugePair> {
    let q = &v.quadruple;
    let g = comp![v.nabla(), tens![q.a.unit, q.id_v()]?]?;
    Ok(GaugePair {
        gamma: g.clone(),
        theta: g,
    })
}

/// Identity cogauge `π = ζ = (V⊗ε_C)∘Γ_V`.
pub fn identity_cogauge(v: &CounitalCoproduct) -> Result<CoGaugePair> {
    let cq = &v.coquadruple;
    let z = comp![tens![cq.id_v(), cq.c.counit]?, v.gamma()]?;
    Ok(CoGaugePair {
        pi: z.clone(),
        zeta: z,
    })
}

/// The preunit of the transported structure, `(μ_A⊗W)∘(A⊗γ)∘ν_V`.
pub fn transported_preunit(v: &UnitalProduct, gp: &GaugePair) -> Result<PreunitData> {
    Ok(PreunitData {
        nu: comp![extend(&v.quadruple, &gp.gamma)?, v.nu.nu]?,
    })
}

/// `W` such that `γ: V → A⊗W`.
pub fn gauge_target(v: &UnitalProduct, gp: &GaugePair) -> Option<Obj> {
    gp.gamma.cod().strip_prefix(&v.quadruple.a.carrier)
}
