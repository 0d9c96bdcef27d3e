//! Weak crossed coproducts `(V⊗C, δ_{V⊗C})` built from coquadruples
//! `(C, V, χ, τ)`, plus the dualization that turns them into quadruples.
//!
//! Plain transposition sends a quadruple on `A⊗V` to data on `V⊗A` (the
//! mirror setting). [`dualize`] composes the transpose with the reversal of
//! tensor factors, which lands in the `V⊗C` setting used here: it sends
//! `μ_A` to a comultiplication, `ψ: V⊗A → A⊗V` to `χ: V⊗C → C⊗V`, and so on.

use crate::error::{Result, WcpError};
use crate::field::Field;
use crate::report::CheckReport;
use crate::structures::{
    check_comodule_morphism, check_comonoid, check_comonoid_morphism, check_right_comodule,
    expect_field, Comonoid, Monoid, RightComodule,
};
use crate::tensor::{Mor, Obj, SplitResult};
use crate::wcp::{self, PreunitData, Quadruple, IMAGE_LABEL};

fn expect(what: &'static str, m: &Mor, dom: &Obj, cod: &Obj) -> Result<()> {
    if m.dom() != dom || m.cod() != cod {
        return Err(WcpError::shape(
            what,
            format!("{} -> {}", m.dom(), m.cod()),
            format!("{dom} -> {cod}"),
        ));
    }
    Ok(())
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

/// Transpose followed by factor reversal: `f: X → Y` becomes
/// `D(f): rev(Y) → rev(X)`. `D` reverses composition and tensor order.
pub fn dualize(f: &Mor) -> Mor {
    let field = f.field();
    let t = f.transpose_dual();
    let into = Mor::reversal(field, f.dom());
    let from = Mor::reversal(field, &f.cod().reversed());
    into.after(&t)
        .and_then(|m| m.after(&from))
        .expect("reversals match the transpose by construction")
}

/// `D` on objects.
pub fn dualize_obj(x: &Obj) -> Obj {
    x.reversed()
}

/// `(C, V, χ: V⊗C → C⊗V, τ: V⊗C → V⊗V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoQuadruple {
    pub c: Comonoid,
    pub v: Obj,
    pub chi: Mor,
    /// τ after normalization (τ∘Γ) when `co-wmeas-wcp` holds; otherwise as given.
    pub tau: Mor,
    pub raw_tau: Mor,
}

impl CoQuadruple {
    /// Validates shapes and replaces τ by τ∘Γ when `co-wmeas-wcp` holds.
    pub fn new(c: Comonoid, v: Obj, chi: Mor, tau: Mor) -> Result<Self> {
        let cq = CoQuadruple::unnormalized(c, v, chi, tau)?;
        if check_coswitch(&cq)?.all_passed() {
            normalize_tau(&cq)
        } else {
            Ok(cq)
        }
    }

    pub fn unnormalized(c: Comonoid, v: Obj, chi: Mor, tau: Mor) -> Result<Self> {
        expect_field(&c.comult, &chi)?;
        expect_field(&c.comult, &tau)?;
        let vc = v.tensor(&c.carrier);
        expect("chi", &chi, &vc, &c.carrier.tensor(&v))?;
        expect("tau", &tau, &vc, &v.tensor(&v))?;
        Ok(CoQuadruple {
            c,
            v,
            chi,
            raw_tau: tau.clone(),
            tau,
        })
    }

    pub fn field(&self) -> Field {
        self.c.field()
    }

    /// The object `V⊗C`.
    pub fn vc(&self) -> Obj {
        self.v.tensor(&self.c.carrier)
    }

    pub fn id_c(&self) -> Mor {
        self.c.id()
    }

    pub fn id_v(&self) -> Mor {
        Mor::identity(self.field(), &self.v)
    }

    pub fn id_vc(&self) -> Mor {
        Mor::identity(self.field(), &self.vc())
    }

    /// `V⊗δ_C`, the right coaction `ρ_{V⊗C}`.
    pub fn rho(&self) -> Result<Mor> {
        tens![self.id_v(), self.c.comult]
    }

    /// `Γ_{V⊗C} = (ε_C⊗V⊗C)∘(χ⊗C)∘(V⊗δ_C)`, without checking `co-wmeas-wcp`.
    pub fn gamma_formula(&self) -> Result<Mor> {
        comp![
            tens![self.c.counit, self.id_v(), self.id_c()]?,
            tens![self.chi, self.id_c()]?,
            self.rho()?
        ]
    }

    /// `δ_{V⊗C} = (V⊗χ⊗C)∘(τ⊗δ_C)∘(V⊗δ_C)`.
    pub fn delta_big(&self) -> Result<Mor> {
        comp![
            tens![self.id_v(), self.chi, self.id_c()]?,
            tens![self.tau, self.c.comult]?,
            self.rho()?
        ]
    }
}

/// `co-wmeas-wcp`: (C⊗χ)∘(χ⊗C)∘(V⊗δ_C) = (δ_C⊗V)∘χ.
pub fn check_coswitch(cq: &CoQuadruple) -> Result<CheckReport> {
    let mut r = CheckReport::new("coswitch");
    r.equation(
        "co-wmeas-wcp",
        comp![
            tens![cq.id_c(), cq.chi]?,
            tens![cq.chi, cq.id_c()]?,
            cq.rho()?
        ]?,
        comp![tens![cq.c.comult, cq.id_v()]?, cq.chi]?,
    );
    Ok(r)
}

/// Idempotence and right colinearity of Γ.
pub fn check_gamma(cq: &CoQuadruple) -> Result<CheckReport> {
    let g = cq.gamma_formula()?;
    let rho = cq.rho()?;
    let mut r = CheckReport::new("gamma");
    r.consequence("gamma-idempotent", comp![g, g]?, g.clone());
    r.consequence(
        "gamma-right-colinear",
        comp![rho, g]?,
        comp![tens![g, cq.id_c()]?, rho]?,
    );
    Ok(r)
}

/// Γ_{V⊗C}; requires `co-wmeas-wcp` and asserts idempotence and colinearity.
pub fn compute_gamma(cq: &CoQuadruple) -> Result<Mor> {
    require(check_coswitch(cq)?, "co-wmeas-wcp")?;
    check_gamma(cq)?.ensure("compute_gamma")?;
    cq.gamma_formula()
}

/// Replaces τ by τ∘Γ.
pub fn normalize_tau(cq: &CoQuadruple) -> Result<CoQuadruple> {
    let g = compute_gamma(cq)?;
    let mut out = cq.clone();
    out.tau = comp![cq.tau, g]?;
    Ok(out)
}

/// `co-twis-wcp`.
pub fn check_cotwisted(cq: &CoQuadruple) -> Result<CheckReport> {
    let (ic, iv) = (cq.id_c(), cq.id_v());
    let rho = cq.rho()?;
    let mut r = CheckReport::new("cotwisted");
    r.equation(
        "co-twis-wcp",
        comp![tens![ic, cq.tau]?, tens![cq.chi, ic]?, rho]?,
        comp![
            tens![cq.chi, iv]?,
            tens![iv, cq.chi]?,
            tens![cq.tau, ic]?,
            rho
        ]?,
    );
    Ok(r)
}

/// `co-cocy-wcp`: (V⊗τ)∘(τ⊗C)∘(V⊗δ_C) = (τ⊗V)∘(V⊗χ)∘(τ⊗C)∘(V⊗δ_C).
pub fn check_cycle(cq: &CoQuadruple) -> Result<CheckReport> {
    let (ic, iv) = (cq.id_c(), cq.id_v());
    let rho = cq.rho()?;
    let mut r = CheckReport::new("cycle");
    r.equation(
        "co-cocy-wcp",
        comp![tens![iv, cq.tau]?, tens![cq.tau, ic]?, rho]?,
        comp![
            tens![cq.tau, iv]?,
            tens![iv, cq.chi]?,
            tens![cq.tau, ic]?,
            rho
        ]?,
    );
    Ok(r)
}

/// Coswitch, Γ identities, τ normalization, cotwisted and cycle conditions.
pub fn check_coquadruple(cq: &CoQuadruple) -> Result<CheckReport> {
    let mut r = check_coswitch(cq)?;
    r.title = "coquadruple".into();
    if !r.all_passed() {
        r.note("co-wmeas-wcp failed; remaining conditions not evaluated");
        return Ok(r);
    }
    r.extend(check_gamma(cq)?);
    let g = cq.gamma_formula()?;
    r.consequence("co-idemp-tau-inv", comp![cq.tau, g]?, cq.tau.clone());
    r.extend(check_cotwisted(cq)?);
    r.extend(check_cycle(cq)?);
    Ok(r)
}

/// Γ, its splitting `V□C`, and both coproducts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedCoproductBuild {
    pub gamma_idem: Mor,
    pub split: SplitResult,
    pub delta_big: Mor,
    pub delta_small: Mor,
    pub report: CheckReport,
}

impl CrossedCoproductBuild {
    pub fn image(&self) -> &Obj {
        &self.split.image
    }
}

/// `ρ_{V□C} = (p⊗C)∘ρ_{V⊗C}∘i`.
pub fn rho_image(cq: &CoQuadruple, b: &CrossedCoproductBuild) -> Result<Mor> {
    comp![tens![b.split.proj, cq.id_c()]?, cq.rho()?, b.split.inj]
}

pub fn build_crossed_coproduct(cq: &CoQuadruple) -> Result<CrossedCoproductBuild> {
    build_crossed_coproduct_labelled(cq, IMAGE_LABEL)
}

/// Requires `co-wmeas-wcp`, `co-twis-wcp`, `co-cocy-wcp`; asserts
/// coassociativity, conormalization, `co-otra-prop`, `co-vieja-proof` and
/// right colinearity of both coproducts.
pub fn build_crossed_coproduct_labelled(
    cq: &CoQuadruple,
    label: &str,
) -> Result<CrossedCoproductBuild> {
    require(check_coswitch(cq)?, "co-wmeas-wcp")?;
    let cq = &normalize_tau(cq)?;
    let mut pre = check_cotwisted(cq)?;
    pre.extend(check_cycle(cq)?);
    require(pre, "co-twis-wcp and co-cocy-wcp")?;

    let g = compute_gamma(cq)?;
    let split = g.split_idempotent(label)?;
    let d = cq.delta_big()?;
    let delta_small = comp![tens![split.proj, split.proj]?, d, split.inj]?;
    let (ic, ivc) = (cq.id_c(), cq.id_vc());
    let rho = cq.rho()?;

    let mut r = CheckReport::new("crossed coproduct");
    r.consequence(
        "coassoc-delta-VC",
        comp![tens![d, ivc]?, d]?,
        comp![tens![ivc, d]?, d]?,
    );
    r.consequence("conormalized", comp![d, g]?, d.clone());
    r.consequence("conormalized-2", comp![tens![g, g]?, d]?, d.clone());
    r.consequence("co-otra-prop", comp![tens![ivc, g]?, d]?, d.clone());
    r.consequence("co-vieja-proof", comp![tens![g, ivc]?, d]?, d.clone());
    r.consequence(
        "delta-VC-right-colinear",
        comp![tens![ivc, rho]?, d]?,
        comp![tens![d, ic]?, rho]?,
    );
    let ibox = Mor::identity(cq.field(), &split.image);
    r.consequence(
        "coassoc-delta-VboxC",
        comp![tens![delta_small, ibox]?, delta_small]?,
        comp![tens![ibox, delta_small]?, delta_small]?,
    );
    let rho_small = comp![tens![split.proj, ic]?, rho, split.inj]?;
    r.consequence(
        "delta-VboxC-right-colinear",
        comp![tens![ibox, rho_small]?, delta_small]?,
        comp![tens![delta_small, ic]?, rho_small]?,
    );
    let report = r.ensure("build_crossed_coproduct")?;
    Ok(CrossedCoproductBuild {
        gamma_idem: g,
        split,
        delta_big: d,
        delta_small,
        report,
    })
}

/// A precounit `υ: V⊗C → K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrecounitData {
    pub upsilon: Mor,
}

/// `ω_υ = (υ⊗C)∘(V⊗δ_C)`.
pub fn omega(cq: &CoQuadruple, ups: &PrecounitData) -> Result<Mor> {
    expect("precounit", &ups.upsilon, &cq.vc(), &Obj::unit())?;
    comp![tens![ups.upsilon, cq.id_c()]?, cq.rho()?]
}

/// `co-pre1-wcp`, `co-pre2-wcp`, `co-pre3-wcp`, the precounit law,
/// `co-preunit-idemp` and agreement of Γ with (υ⊗V⊗C)∘δ_{V⊗C}.
pub fn check_precounit(
    cq: &CoQuadruple,
    b: &CrossedCoproductBuild,
    ups: &PrecounitData,
) -> Result<CheckReport> {
    let u = &ups.upsilon;
    expect("precounit", u, &cq.vc(), &Obj::unit())?;
    let (ic, iv, ivc) = (cq.id_c(), cq.id_v(), cq.id_vc());
    let rho = cq.rho()?;
    let counit_v = comp![tens![iv, cq.c.counit]?, b.gamma_idem]?;
    let om = omega(cq, ups)?;
    let d = &b.delta_big;
    let mut r = CheckReport::new("precounit");
    r.equation(
        "co-pre1-wcp",
        comp![tens![u, iv]?, tens![iv, cq.chi]?, tens![cq.tau, ic]?, rho]?,
        counit_v.clone(),
    );
    r.equation(
        "co-pre2-wcp",
        comp![tens![iv, u]?, tens![cq.tau, ic]?, rho]?,
        counit_v,
    );
    r.equation(
        "co-pre3-wcp",
        comp![tens![ic, u]?, tens![cq.chi, ic]?, rho]?,
        om,
    );
    let left = comp![tens![u, ivc]?, d]?;
    let right = comp![tens![ivc, u]?, d]?;
    let uu = comp![tens![u, u]?, d]?;
    r.consequence("precounit-law", left.clone(), right.clone());
    r.consequence("precounit-law-2", right, comp![tens![uu, ivc]?, d]?);
    r.consequence("co-preunit-idemp", comp![u, b.gamma_idem]?, u.clone());
    r.consequence("co-thm1-wcp", b.gamma_idem.clone(), left);
    Ok(r)
}

/// Comultiplicativity, right colinearity and `ε_C∘ω = υ` of ω_υ.
pub fn check_omega(
    cq: &CoQuadruple,
    b: &CrossedCoproductBuild,
    ups: &PrecounitData,
) -> Result<CheckReport> {
    let om = omega(cq, ups)?;
    let mut r = CheckReport::new("omega");
    r.consequence(
        "omega-comultiplicative",
        comp![cq.c.comult, om]?,
        comp![tens![om, om]?, b.delta_big]?,
    );
    r.consequence(
        "omega-right-colinear",
        comp![cq.c.comult, om]?,
        comp![tens![om, cq.id_c()]?, cq.rho()?]?,
    );
    r.consequence("omega-counit", comp![cq.c.counit, om]?, ups.upsilon.clone());
    Ok(r)
}

/// χ and τ recomputed from δ_{V⊗C} by `co-fi-wcp` and `co-sigma-wcp`.
pub fn recover_chi_tau(
    cq: &CoQuadruple,
    b: &CrossedCoproductBuild,
    ups: &PrecounitData,
) -> Result<(Mor, Mor, CheckReport)> {
    let om = omega(cq, ups)?;
    let iv = cq.id_v();
    let eps = &cq.c.counit;
    let chi = comp![tens![om, iv, eps]?, b.delta_big]?;
    let tau = comp![tens![iv, eps, iv, eps]?, b.delta_big]?;
    let mut r = CheckReport::new("recover chi tau");
    r.consequence("co-fi-wcp", chi.clone(), cq.chi.clone());
    r.consequence("co-sigma-wcp", tau.clone(), cq.tau.clone());
    Ok((chi, tau, r))
}

/// The comonoid `(V□C, δ_{V□C}, υ∘i)` with its report.
pub fn image_comonoid(
    cq: &CoQuadruple,
    b: &CrossedCoproductBuild,
    ups: &PrecounitData,
) -> Result<(Comonoid, CheckReport)> {
    require(check_precounit(cq, b, ups)?, "precounit conditions")?;
    let c = Comonoid::new(comp![ups.upsilon, b.split.inj]?, b.delta_small.clone())?;
    let mut r = check_comonoid(&c)?;
    r.title = "image comonoid".into();
    let obar = comp![omega(cq, ups)?, b.split.inj]?;
    let mut morph = check_comonoid_morphism(&obar, &c, &cq.c)?;
    for e in &mut morph.entries {
        e.name = format!("omega-bar-{}", e.name);
    }
    r.extend(morph);
    let rc = RightComodule::new(cq.c.clone(), rho_image(cq, b)?)?;
    let mut comodule = check_right_comodule(&rc)?;
    for e in &mut comodule.entries {
        e.name = format!("image-{}", e.name);
    }
    r.extend(comodule);
    let r = r.ensure("image_comonoid")?;
    Ok((c, r))
}

/// A weak crossed coproduct with precounit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounitalCoproduct {
    pub coquadruple: CoQuadruple,
    pub build: CrossedCoproductBuild,
    pub ups: PrecounitData,
}

impl CounitalCoproduct {
    pub fn new(cq: &CoQuadruple, upsilon: Mor) -> Result<Self> {
        CounitalCoproduct::labelled(cq, upsilon, IMAGE_LABEL)
    }

    pub fn labelled(cq: &CoQuadruple, upsilon: Mor, label: &str) -> Result<Self> {
        let build = build_crossed_coproduct_labelled(cq, label)?;
        let coquadruple = normalize_tau(cq)?;
        let ups = PrecounitData { upsilon };
        require(
            check_precounit(&coquadruple, &build, &ups)?,
            "precounit conditions",
        )?;
        Ok(CounitalCoproduct {
            coquadruple,
            build,
            ups,
        })
    }

    pub fn field(&self) -> Field {
        self.coquadruple.field()
    }

    pub fn gamma(&self) -> &Mor {
        &self.build.gamma_idem
    }

    pub fn image_comonoid(&self) -> Result<Comonoid> {
        image_comonoid(&self.coquadruple, &self.build, &self.ups).map(|(c, _)| c)
    }

    pub fn image_comodule(&self) -> Result<RightComodule> {
        RightComodule::new(
            self.coquadruple.c.clone(),
            rho_image(&self.coquadruple, &self.build)?,
        )
    }

    /// `colinear`: ρ_{W□C}∘f = (f⊗C)∘ρ_{V□C} for `f: V□C → W□C`.
    pub fn check_image_colinear(&self, f: &Mor, other: &CounitalCoproduct) -> Result<CheckReport> {
        check_comodule_morphism(f, &self.image_comodule()?, &other.image_comodule()?)
    }

    pub fn full_report(&self) -> Result<CheckReport> {
        let cq = &self.coquadruple;
        let mut r = check_coquadruple(cq)?;
        r.extend(self.build.report.clone());
        r.extend(check_precounit(cq, &self.build, &self.ups)?);
        r.extend(check_omega(cq, &self.build, &self.ups)?);
        r.extend(recover_chi_tau(cq, &self.build, &self.ups)?.2);
        r.extend(image_comonoid(cq, &self.build, &self.ups)?.1);
        r.title = "weak crossed coproduct with precounit".into();
        Ok(r)
    }
}

/// The quadruple obtained by dualizing every map of `cq`. σ is not
/// renormalized, so matrices correspond exactly.
pub fn dual_quadruple(cq: &CoQuadruple) -> Result<Quadruple> {
    let a = Monoid::new(dualize(&cq.c.counit), dualize(&cq.c.comult))?;
    Quadruple::unnormalized(a, dualize_obj(&cq.v), dualize(&cq.chi), dualize(&cq.tau))
}

/// The coquadruple obtained by dualizing every map of `q`.
pub fn dual_coquadruple(q: &Quadruple) -> Result<CoQuadruple> {
    let c = Comonoid::new(dualize(&q.a.unit), dualize(&q.a.mult))?;
    CoQuadruple::unnormalized(c, dualize_obj(&q.v), dualize(&q.psi), dualize(&q.sigma))
}

/// Name correspondence between coproduct-side entries and their product-side
/// duals.
pub const DUAL_NAMES: &[(&str, &str)] = &[
    ("co-wmeas-wcp", "wmeas-wcp"),
    ("gamma-idempotent", "nabla-idempotent"),
    ("gamma-right-colinear", "nabla-left-linear"),
    ("co-idemp-tau-inv", "idemp-sigma-inv"),
    ("co-twis-wcp", "twis-wcp"),
    ("co-cocy-wcp", "cocy2-wcp"),
    ("coassoc-delta-VC", "assoc-mu-AV"),
    ("conormalized", "normalized"),
    ("conormalized-2", "normalized-2"),
    ("co-otra-prop", "otra-prop"),
    ("co-vieja-proof", "vieja-proof"),
    ("delta-VC-right-colinear", "mu-AV-left-linear"),
    ("co-pre1-wcp", "pre1-wcp"),
    ("co-pre2-wcp", "pre2-wcp"),
    ("co-pre3-wcp", "pre3-wcp"),
    ("precounit-law", "preunit-law"),
    ("precounit-law-2", "preunit-law-2"),
    ("co-preunit-idemp", "preunit-idemp"),
    ("co-thm1-wcp", "thm1-wcp"),
    ("omega-comultiplicative", "beta-multiplicative"),
    ("omega-right-colinear", "beta-left-linear"),
    ("omega-counit", "beta-unit"),
    ("co-fi-wcp", "fi-wcp"),
    ("co-sigma-wcp", "sigma-wcp"),
];

fn agree(out: &mut CheckReport, direct: &CheckReport, dual: &CheckReport) {
    for (co, pr) in DUAL_NAMES {
        if let (Some(a), Some(b)) = (direct.passed(co), dual.passed(pr)) {
            out.record(
                &format!("agree:{co}"),
                a == b,
                Some(format!("direct {a}, dualized {pr} {b}")),
            );
        }
    }
}

/// Runs the coproduct checkers directly and on the dualized quadruple, and
/// records verdict-by-verdict agreement plus matrix agreement of Γ, δ and
/// the constructed maps with the duals of ∇, μ, ….
///
/// `ups` optionally adds the precounit-level checks. A disagreement entry
/// signals an implementation bug, not a property of the input.
pub fn dual_crosscheck(cq: &CoQuadruple, ups: Option<&PrecounitData>) -> Result<CheckReport> {
    let q = dual_quadruple(cq)?;
    let mut out = CheckReport::new("dual crosscheck");

    let direct = check_coquadruple(cq)?;
    let dual = wcp::check_quadruple(&q)?;
    agree(&mut out, &direct, &dual);
    if !direct.all_passed() || !dual.all_passed() {
        return Ok(out);
    }
    out.equation(
        "dual-gamma",
        cq.gamma_formula()?,
        dualize(&q.nabla_formula()?),
    );
    let (Ok(cb), Ok(pb)) = (build_crossed_coproduct(cq), wcp::build_crossed_product(&q)) else {
        out.record("dual-build", false, Some("only one side builds".into()));
        return Ok(out);
    };
    agree(&mut out, &cb.report, &pb.report);
    out.equation("dual-delta", cb.delta_big.clone(), dualize(&pb.mu_big));

    if let Some(ups) = ups {
        let cq = normalize_tau(cq)?;
        let nu = PreunitData {
            nu: dualize(&ups.upsilon),
        };
        let direct = check_precounit(&cq, &cb, ups)?;
        let dual = wcp::check_preunit(&q, &pb, &nu)?;
        agree(&mut out, &direct, &dual);
        let mut d2 = check_omega(&cq, &cb, ups)?;
        let mut p2 = wcp::check_beta(&q, &pb, &nu)?;
        let (chi, tau, dr) = recover_chi_tau(&cq, &cb, ups)?;
        let (psi, sigma, pr) = wcp::recover_psi_sigma(&q, &pb, &nu)?;
        d2.extend(dr);
        p2.extend(pr);
        agree(&mut out, &d2, &p2);
        out.equation(
            "dual-omega",
            omega(&cq, ups)?,
            dualize(&wcp::beta(&q, &nu)?),
        );
        out.equation("dual-chi", chi, dualize(&psi));
        out.equation("dual-tau", tau, dualize(&sigma));
    }
    Ok(out)
}
