//! Weak crossed products `(A⊗V, μ_{A⊗V})` built from quadruples `(A, V, ψ, σ)`.
//!
//! Condition names in reports follow the standard equation labels
//! (`wmeas-wcp`, `twis-wcp`, `cocy2-wcp`, `pre1-wcp`, …).

use crate::error::{Result, WcpError};
use crate::field::Field;
use crate::report::CheckReport;
use crate::structures::{
    check_left_module, check_module_morphism, check_monoid, check_monoid_morphism, expect_field,
    LeftModule, Monoid,
};
use crate::tensor::{Mor, Obj, SplitResult};

/// Default label of the image object `A×V`.
pub const IMAGE_LABEL: &str = "im";

/// `(A, V, ψ: V⊗A → A⊗V, σ: V⊗V → A⊗V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadruple {
    pub a: Monoid,
    pub v: Obj,
    pub psi: Mor,
    /// σ after normalization (∇∘σ) when `wmeas-wcp` holds; otherwise as given.
    pub sigma: Mor,
    /// σ as supplied.
    pub raw_sigma: Mor,
}

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

impl Quadruple {
    /// Validates shapes and replaces σ by ∇∘σ when `wmeas-wcp` holds. The
    /// supplied σ is kept in `raw_sigma`.
    pub fn new(a: Monoid, v: Obj, psi: Mor, sigma: Mor) -> Result<Self> {
        let q = Quadruple::unnormalized(a, v, psi, sigma)?;
        if check_switch(&q)?.all_passed() {
            normalize_sigma(&q)
        } else {
            Ok(q)
        }
    }

    /// Validates shapes only; σ is used as given.
    pub fn unnormalized(a: Monoid, v: Obj, psi: Mor, sigma: Mor) -> Result<Self> {
        expect_field(&a.mult, &psi)?;
        expect_field(&a.mult, &sigma)?;
        let av = a.carrier.tensor(&v);
        expect("psi", &psi, &v.tensor(&a.carrier), &av)?;
        expect("sigma", &sigma, &v.tensor(&v), &av)?;
        Ok(Quadruple {
            a,
            v,
            psi,
            raw_sigma: sigma.clone(),
            sigma,
        })
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }

    /// The object `A⊗V`.
    pub fn av(&self) -> Obj {
        self.a.carrier.tensor(&self.v)
    }

    pub fn id_a(&self) -> Mor {
        self.a.id()
    }

    pub fn id_v(&self) -> Mor {
        Mor::identity(self.field(), &self.v)
    }

    pub fn id_av(&self) -> Mor {
        Mor::identity(self.field(), &self.av())
    }

    /// `μ_A⊗V`, the left action `φ_{A⊗V}`.
    pub fn phi(&self) -> Result<Mor> {
        tens![self.a.mult, self.id_v()]
    }

    /// `∇_{A⊗V} = (μ_A⊗V)∘(A⊗ψ)∘(A⊗V⊗η_A)`, without checking `wmeas-wcp`.
    pub fn nabla_formula(&self) -> Result<Mor> {
        comp![
            self.phi()?,
            tens![self.id_a(), self.psi]?,
            tens![self.id_a(), self.id_v(), self.a.unit]?
        ]
    }

    /// `μ_{A⊗V} = (μ_A⊗V)∘(μ_A⊗σ)∘(A⊗ψ⊗V)`.
    pub fn mu_big(&self) -> Result<Mor> {
        comp![
            self.phi()?,
            tens![self.a.mult, self.sigma]?,
            tens![self.id_a(), self.psi, self.id_v()]?
        ]
    }

    pub fn with_sigma(&self, sigma: Mor) -> Result<Quadruple> {
        Quadruple::new(self.a.clone(), self.v.clone(), self.psi.clone(), sigma)
    }
}

/// `wmeas-wcp`: (μ_A⊗V)∘(A⊗ψ)∘(ψ⊗A) = ψ∘(V⊗μ_A).
pub fn check_switch(q: &Quadruple) -> Result<CheckReport> {
    let mut r = CheckReport::new("switch");
    r.equation(
        "wmeas-wcp",
        comp![q.phi()?, tens![q.id_a(), q.psi]?, tens![q.psi, q.id_a()]?]?,
        comp![q.psi, tens![q.id_v(), q.a.mult]?]?,
    );
    Ok(r)
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

/// Idempotence, left linearity and `fi-nab` for ∇ computed by `idem-wcp`.
pub fn check_nabla(q: &Quadruple) -> Result<CheckReport> {
    let n = q.nabla_formula()?;
    let phi = q.phi()?;
    let mut r = CheckReport::new("nabla");
    r.consequence("nabla-idempotent", comp![n, n]?, n.clone());
    r.consequence(
        "nabla-left-linear",
        comp![n, phi]?,
        comp![phi, tens![q.id_a(), n]?]?,
    );
    let mid = comp![phi, tens![q.id_a(), q.psi]?]?;
    r.consequence("fi-nab", comp![mid, tens![n, q.id_a()]?]?, mid.clone());
    r.consequence("fi-nab-2", mid.clone(), comp![n, mid]?);
    Ok(r)
}

/// ∇_{A⊗V}; requires `wmeas-wcp` and asserts idempotence and left linearity.
pub fn compute_nabla(q: &Quadruple) -> Result<Mor> {
    require(check_switch(q)?, "wmeas-wcp")?;
    check_nabla(q)?.ensure("compute_nabla")?;
    q.nabla_formula()
}

/// Replaces σ by ∇∘σ.
pub fn normalize_sigma(q: &Quadruple) -> Result<Quadruple> {
    let n = compute_nabla(q)?;
    let mut out = q.clone();
    out.sigma = comp![n, q.sigma]?;
    Ok(out)
}

/// `twis-wcp`; when it holds, also the derived `c1`, `aw` and, for
/// normalized σ, `c11`, `aw1`.
pub fn check_twisted(q: &Quadruple) -> Result<CheckReport> {
    let phi = q.phi()?;
    let (ia, iv) = (q.id_a(), q.id_v());
    let mut r = CheckReport::new("twisted");
    let ok = r.equation(
        "twis-wcp",
        comp![phi, tens![ia, q.psi]?, tens![q.sigma, ia]?]?,
        comp![
            phi,
            tens![ia, q.sigma]?,
            tens![q.psi, iv]?,
            tens![iv, q.psi]?
        ]?,
    );
    if ok && check_switch(q)?.all_passed() {
        let n = q.nabla_formula()?;
        let s_psi = comp![phi, tens![ia, q.sigma]?, tens![q.psi, iv]?]?;
        let s_plain = comp![phi, tens![ia, q.sigma]?]?;
        r.consequence("c1", comp![s_psi, tens![iv, n]?]?, comp![n, s_psi]?);
        r.consequence("aw", comp![n, s_plain, tens![n, iv]?]?, comp![n, s_plain]?);
        if comp![n, q.sigma]? == q.sigma {
            r.consequence("c11", comp![s_psi, tens![iv, n]?]?, s_psi.clone());
            r.consequence("aw1", comp![s_plain, tens![n, iv]?]?, s_plain.clone());
        }
    }
    Ok(r)
}

/// `cocy2-wcp`.
pub fn check_cocycle(q: &Quadruple) -> Result<CheckReport> {
    let phi = q.phi()?;
    let (ia, iv) = (q.id_a(), q.id_v());
    let mut r = CheckReport::new("cocycle");
    r.equation(
        "cocy2-wcp",
        comp![phi, tens![ia, q.sigma]?, tens![q.sigma, iv]?]?,
        comp![
            phi,
            tens![ia, q.sigma]?,
            tens![q.psi, iv]?,
            tens![iv, q.sigma]?
        ]?,
    );
    Ok(r)
}

/// The cheap diagnostics: switch, ∇ identities, σ normalization, twisted
/// and cocycle conditions. Later entries are skipped when `wmeas-wcp` fails.
pub fn check_quadruple(q: &Quadruple) -> Result<CheckReport> {
    let mut r = check_switch(q)?;
    r.title = "quadruple".into();
    if !r.all_passed() {
        r.note("wmeas-wcp failed; remaining conditions not evaluated");
        return Ok(r);
    }
    r.extend(check_nabla(q)?);
    let n = q.nabla_formula()?;
    r.consequence("idemp-sigma-inv", comp![n, q.sigma]?, q.sigma.clone());
    r.extend(check_twisted(q)?);
    r.extend(check_cocycle(q)?);
    Ok(r)
}

/// ∇, its splitting `A×V`, and both products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedProductBuild {
    pub nabla: Mor,
    pub split: SplitResult,
    pub mu_big: Mor,
    pub mu_small: Mor,
    /// The asserted consequences of the build.
    pub report: CheckReport,
}

impl CrossedProductBuild {
    pub fn image(&self) -> &Obj {
        &self.split.image
    }

    pub fn inj(&self) -> &Mor {
        &self.split.inj
    }

    pub fn proj(&self) -> &Mor {
        &self.split.proj
    }
}

pub fn build_crossed_product(q: &Quadruple) -> Result<CrossedProductBuild> {
    build_crossed_product_labelled(q, IMAGE_LABEL)
}

/// Builds the crossed product, labelling the image object `label`.
///
/// Requires `wmeas-wcp`, `twis-wcp`, `cocy2-wcp`; asserts associativity of
/// both products, `normalized`, `otra-prop`, `vieja-proof` and left
/// A-linearity of μ_{A⊗V} and μ_{A×V}.
pub fn build_crossed_product_labelled(q: &Quadruple, label: &str) -> Result<CrossedProductBuild> {
    require(check_switch(q)?, "wmeas-wcp")?;
    let q = &normalize_sigma(q)?;
    let mut pre = check_twisted(q)?;
    pre.extend(check_cocycle(q)?);
    require(pre, "twis-wcp and cocy2-wcp")?;

    let nabla = compute_nabla(q)?;
    let split = nabla.split_idempotent(label)?;
    let mu = q.mu_big()?;
    let mu_small = comp![split.proj, mu, tens![split.inj, split.inj]?]?;
    let (ia, iav) = (q.id_a(), q.id_av());
    let phi = q.phi()?;

    let mut r = CheckReport::new("crossed product");
    r.consequence(
        "assoc-mu-AV",
        comp![mu, tens![mu, iav]?]?,
        comp![mu, tens![iav, mu]?]?,
    );
    r.consequence("normalized", comp![nabla, mu]?, mu.clone());
    r.consequence("normalized-2", comp![mu, tens![nabla, nabla]?]?, mu.clone());
    r.consequence("otra-prop", comp![mu, tens![nabla, iav]?]?, mu.clone());
    r.consequence("vieja-proof", comp![mu, tens![iav, nabla]?]?, mu.clone());
    r.consequence(
        "mu-AV-left-linear",
        comp![mu, tens![phi, iav]?]?,
        comp![phi, tens![ia, mu]?]?,
    );
    let ixv = Mor::identity(q.field(), &split.image);
    r.consequence(
        "assoc-mu-AxV",
        comp![mu_small, tens![mu_small, ixv]?]?,
        comp![mu_small, tens![ixv, mu_small]?]?,
    );
    let phi_small = comp![split.proj, phi, tens![ia, split.inj]?]?;
    r.consequence(
        "mu-AxV-left-linear",
        comp![mu_small, tens![phi_small, ixv]?]?,
        comp![phi_small, tens![ia, mu_small]?]?,
    );
    let report = r.ensure("build_crossed_product")?;
    Ok(CrossedProductBuild {
        nabla,
        split,
        mu_big: mu,
        mu_small,
        report,
    })
}

/// A preunit `ν: K → A⊗V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreunitData {
    pub nu: Mor,
}

/// `β_ν = (μ_A⊗V)∘(A⊗ν)`.
pub fn beta(q: &Quadruple, nu: &PreunitData) -> Result<Mor> {
    expect("preunit", &nu.nu, &Obj::unit(), &q.av())?;
    comp![q.phi()?, tens![q.id_a(), nu.nu]?]
}

/// `pre1-wcp`, `pre2-wcp`, `pre3-wcp`, the preunit law, `preunit-idemp`,
/// and agreement of ∇ with the preunit idempotent m∘(A⊗V⊗ν).
pub fn check_preunit(
    q: &Quadruple,
    b: &CrossedProductBuild,
    nu: &PreunitData,
) -> Result<CheckReport> {
    let n = &nu.nu;
    expect("preunit", n, &Obj::unit(), &q.av())?;
    let (ia, iv, iav) = (q.id_a(), q.id_v(), q.id_av());
    let phi = q.phi()?;
    let unit_v = comp![b.nabla, tens![q.a.unit, iv]?]?;
    let bt = beta(q, nu)?;
    let mu = &b.mu_big;
    let mut r = CheckReport::new("preunit");
    r.equation(
        "pre1-wcp",
        comp![phi, tens![ia, q.sigma]?, tens![q.psi, iv]?, tens![iv, n]?]?,
        unit_v.clone(),
    );
    r.equation(
        "pre2-wcp",
        comp![phi, tens![ia, q.sigma]?, tens![n, iv]?]?,
        unit_v,
    );
    r.equation(
        "pre3-wcp",
        comp![phi, tens![ia, q.psi]?, tens![n, ia]?]?,
        bt.clone(),
    );
    let right = comp![mu, tens![iav, n]?]?;
    let left = comp![mu, tens![n, iav]?]?;
    let nn = comp![mu, tens![n, n]?]?;
    r.consequence("preunit-law", right.clone(), left.clone());
    r.consequence("preunit-law-2", left, comp![mu, tens![iav, nn]?]?);
    r.consequence("preunit-idemp", comp![b.nabla, n]?, n.clone());
    r.consequence("thm1-wcp", b.nabla.clone(), right);
    Ok(r)
}

/// Multiplicativity, left linearity and `β∘η_A = ν` of β_ν.
pub fn check_beta(q: &Quadruple, b: &CrossedProductBuild, nu: &PreunitData) -> Result<CheckReport> {
    let bt = beta(q, nu)?;
    let mut r = CheckReport::new("beta");
    r.consequence(
        "beta-multiplicative",
        comp![bt, q.a.mult]?,
        comp![b.mu_big, tens![bt, bt]?]?,
    );
    r.consequence(
        "beta-left-linear",
        comp![bt, q.a.mult]?,
        comp![q.phi()?, tens![q.id_a(), bt]?]?,
    );
    r.consequence("beta-unit", comp![bt, q.a.unit]?, nu.nu.clone());
    Ok(r)
}

/// ψ and σ recomputed from μ_{A⊗V} by `fi-wcp` and `sigma-wcp`, with a
/// report comparing them to the quadruple's maps.
pub fn recover_psi_sigma(
    q: &Quadruple,
    b: &CrossedProductBuild,
    nu: &PreunitData,
) -> Result<(Mor, Mor, CheckReport)> {
    let bt = beta(q, nu)?;
    let iv = q.id_v();
    let eta = &q.a.unit;
    let psi = comp![b.mu_big, tens![eta, iv, bt]?]?;
    let sigma = comp![b.mu_big, tens![eta, iv, eta, iv]?]?;
    let mut r = CheckReport::new("recover psi sigma");
    r.consequence("fi-wcp", psi.clone(), q.psi.clone());
    r.consequence("sigma-wcp", sigma.clone(), q.sigma.clone());
    Ok((psi, sigma, r))
}

/// `φ_{A×V} = p∘(μ_A⊗V)∘(A⊗i)`.
pub fn phi_image(q: &Quadruple, b: &CrossedProductBuild) -> Result<Mor> {
    comp![b.split.proj, q.phi()?, tens![q.id_a(), b.split.inj]?]
}

/// The monoid `(A×V, μ_{A×V}, p∘ν)`, with its report (monoid axioms, β̄ a
/// monoid morphism, φ_{A×V} a module action).
pub fn image_monoid(
    q: &Quadruple,
    b: &CrossedProductBuild,
    nu: &PreunitData,
) -> Result<(Monoid, CheckReport)> {
    require(check_preunit(q, b, nu)?, "preunit conditions")?;
    let m = Monoid::new(comp![b.split.proj, nu.nu]?, b.mu_small.clone())?;
    let mut r = check_monoid(&m)?;
    r.title = "image monoid".into();
    let bbar = comp![b.split.proj, beta(q, nu)?]?;
    let mut morph = check_monoid_morphism(&bbar, &q.a, &m)?;
    for e in &mut morph.entries {
        e.name = format!("beta-bar-{}", e.name);
    }
    r.extend(morph);
    let lm = LeftModule::new(q.a.clone(), phi_image(q, b)?)?;
    let mut module = check_left_module(&lm)?;
    for e in &mut module.entries {
        e.name = format!("image-{}", e.name);
    }
    r.extend(module);
    let r = r.ensure("image_monoid")?;
    Ok((m, r))
}

/// A weak crossed product with preunit: quadruple, build and ν together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitalProduct {
    pub quadruple: Quadruple,
    pub build: CrossedProductBuild,
    pub nu: PreunitData,
}

impl UnitalProduct {
    /// Normalizes σ, builds, and requires the preunit conditions.
    pub fn new(q: &Quadruple, nu: Mor) -> Result<Self> {
        UnitalProduct::labelled(q, nu, IMAGE_LABEL)
    }

    pub fn labelled(q: &Quadruple, nu: Mor, label: &str) -> Result<Self> {
        let build = build_crossed_product_labelled(q, label)?;
        let quadruple = normalize_sigma(q)?;
        let nu = PreunitData { nu };
        require(
            check_preunit(&quadruple, &build, &nu)?,
            "preunit conditions",
        )?;
        Ok(UnitalProduct {
            quadruple,
            build,
            nu,
        })
    }

    pub fn field(&self) -> Field {
        self.quadruple.field()
    }

    pub fn nabla(&self) -> &Mor {
        &self.build.nabla
    }

    pub fn beta(&self) -> Result<Mor> {
        beta(&self.quadruple, &self.nu)
    }

    pub fn image_monoid(&self) -> Result<Monoid> {
        image_monoid(&self.quadruple, &self.build, &self.nu).map(|(m, _)| m)
    }

    /// `A×V` as a left A-module under φ_{A×V}.
    pub fn image_module(&self) -> Result<LeftModule> {
        LeftModule::new(
            self.quadruple.a.clone(),
            phi_image(&self.quadruple, &self.build)?,
        )
    }

    /// `linear`: f∘φ_{A×V} = φ_{A×W}∘(A⊗f) for `f: A×V → A×W`.
    pub fn check_image_linear(&self, f: &Mor, other: &UnitalProduct) -> Result<CheckReport> {
        check_module_morphism(f, &self.image_module()?, &other.image_module()?)
    }

    /// Every check the product supports, in one report.
    pub fn full_report(&self) -> Result<CheckReport> {
        let q = &self.quadruple;
        let mut r = check_quadruple(q)?;
        r.extend(self.build.report.clone());
        r.extend(check_preunit(q, &self.build, &self.nu)?);
        r.extend(check_beta(q, &self.build, &self.nu)?);
        r.extend(recover_psi_sigma(q, &self.build, &self.nu)?.2);
        r.extend(image_monoid(q, &self.build, &self.nu)?.1);
        r.title = "weak crossed product with preunit".into();
        Ok(r)
    }
}
