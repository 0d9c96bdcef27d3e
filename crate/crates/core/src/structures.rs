//! Monoids, comonoids, modules and comodules with exact axiom checkers.

use crate::error::{Result, WcpError};
use crate::field::Field;
use crate::report::CheckReport;
use crate::tensor::{Mor, Obj};

fn expect_shape(what: &'static str, m: &Mor, dom: &Obj, cod: &Obj) -> Result<()> {
    if m.dom() != dom || m.cod() != cod {
        return Err(WcpError::shape(
            what,
            format!("{} -> {}", m.dom(), m.cod()),
            format!("{dom} -> {cod}"),
        ));
    }
    Ok(())
}

pub(crate) fn expect_field(a: &Mor, b: &Mor) -> Result<()> {
    if a.field() != b.field() {
        return Err(WcpError::FieldMismatch(a.field(), b.field()));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monoid {
    pub carrier: Obj,
    pub unit: Mor,
    pub mult: Mor,
}

impl Monoid {
    /// Checks shapes `unit: K → A`, `mult: A⊗A → A`; axioms are checked by
    /// [`check_monoid`].
    pub fn new(unit: Mor, mult: Mor) -> Result<Self> {
        expect_field(&unit, &mult)?;
        let a = mult.cod().clone();
        expect_shape("monoid unit", &unit, &Obj::unit(), &a)?;
        expect_shape("monoid mult", &mult, &a.tensor(&a), &a)?;
        Ok(Monoid {
            carrier: a,
            unit,
            mult,
        })
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn id(&self) -> Mor {
        Mor::identity(self.field(), &self.carrier)
    }

    /// Transposes unit and multiplication into a counit and comultiplication.
    pub fn transpose_dual(&self) -> Comonoid {
        Comonoid {
            carrier: self.carrier.clone(),
            counit: self.unit.transpose_dual(),
            comult: self.mult.transpose_dual(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comonoid {
    pub carrier: Obj,
    pub counit: Mor,
    pub comult: Mor,
}

impl Comonoid {
    pub fn new(counit: Mor, comult: Mor) -> Result<Self> {
        expect_field(&counit, &comult)?;
        let c = comult.dom().clone();
        expect_shape("comonoid counit", &counit, &c, &Obj::unit())?;
        expect_shape("comonoid comult", &comult, &c, &c.tensor(&c))?;
        Ok(Comonoid {
            carrier: c,
            counit,
            comult,
        })
    }

    pub fn field(&self) -> Field {
        self.comult.field()
    }

    pub fn id(&self) -> Mor {
        Mor::identity(self.field(), &self.carrier)
    }

    pub fn transpose_dual(&self) -> Monoid {
        Monoid {
            carrier: self.carrier.clone(),
            unit: self.counit.transpose_dual(),
            mult: self.comult.transpose_dual(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    pub monoid: Monoid,
    pub carrier: Obj,
    pub action: Mor,
}

impl LeftModule {
    pub fn new(monoid: Monoid, action: Mor) -> Result<Self> {
        expect_field(&monoid.mult, &action)?;
        let m = action.cod().clone();
        expect_shape("module action", &action, &monoid.carrier.tensor(&m), &m)?;
        Ok(LeftModule {
            monoid,
            carrier: m,
            action,
        })
    }

    /// `A` acting on itself by multiplication.
    pub fn regular(monoid: &Monoid) -> Self {
        LeftModule {
            monoid: monoid.clone(),
            carrier: monoid.carrier.clone(),
            action: monoid.mult.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightComodule {
    pub comonoid: Comonoid,
    pub carrier: Obj,
    pub coaction: Mor,
}

impl RightComodule {
    pub fn new(comonoid: Comonoid, coaction: Mor) -> Result<Self> {
        expect_field(&comonoid.comult, &coaction)?;
        let m = coaction.dom().clone();
        expect_shape(
            "comodule coaction",
            &coaction,
            &m,
            &m.tensor(&comonoid.carrier),
        )?;
        Ok(RightComodule {
            comonoid,
            carrier: m,
            coaction,
        })
    }

    pub fn regular(comonoid: &Comonoid) -> Self {
        RightComodule {
            comonoid: comonoid.clone(),
            carrier: comonoid.carrier.clone(),
            coaction: comonoid.comult.clone(),
        }
    }
}

pub fn check_monoid(m: &Monoid) -> Result<CheckReport> {
    let mut r = CheckReport::new("monoid");
    let id = m.id();
    r.equation(
        "monoid-unit-left",
        comp![m.mult, tens![m.unit, id]?]?,
        id.clone(),
    );
    r.equation(
        "monoid-unit-right",
        comp![m.mult, tens![id, m.unit]?]?,
        id.clone(),
    );
    r.equation(
        "monoid-assoc",
        comp![m.mult, tens![id, m.mult]?]?,
        comp![m.mult, tens![m.mult, id]?]?,
    );
    Ok(r)
}

pub fn check_comonoid(c: &Comonoid) -> Result<CheckReport> {
    let mut r = CheckReport::new("comonoid");
    let id = c.id();
    r.equation(
        "comonoid-counit-left",
        comp![tens![c.counit, id]?, c.comult]?,
        id.clone(),
    );
    r.equation(
        "comonoid-counit-right",
        comp![tens![id, c.counit]?, c.comult]?,
        id.clone(),
    );
    r.equation(
        "comonoid-coassoc",
        comp![tens![id, c.comult]?, c.comult]?,
        comp![tens![c.comult, id]?, c.comult]?,
    );
    Ok(r)
}

pub fn check_left_module(lm: &LeftModule) -> Result<CheckReport> {
    let mut r = CheckReport::new("left module");
    let a = &lm.monoid;
    let idm = Mor::identity(a.field(), &lm.carrier);
    r.equation(
        "module-unit",
        comp![lm.action, tens![a.unit, idm]?]?,
        idm.clone(),
    );
    r.equation(
        "module-assoc",
        comp![lm.action, tens![a.id(), lm.action]?]?,
        comp![lm.action, tens![a.mult, idm]?]?,
    );
    Ok(r)
}

pub fn check_right_comodule(rc: &RightComodule) -> Result<CheckReport> {
    let mut r = CheckReport::new("right comodule");
    let c = &rc.comonoid;
    let idm = Mor::identity(c.field(), &rc.carrier);
    r.equation(
        "comodule-counit",
        comp![tens![idm, c.counit]?, rc.coaction]?,
        idm.clone(),
    );
    r.equation(
        "comodule-coassoc",
        comp![tens![rc.coaction, c.id()]?, rc.coaction]?,
        comp![tens![idm, c.comult]?, rc.coaction]?,
    );
    Ok(r)
}

/// Entries `morphism-mult` (μ_B∘(f⊗f) = f∘μ_A) and `morphism-unit` (f∘η_A = η_B).
pub fn check_monoid_morphism(f: &Mor, src: &Monoid, dst: &Monoid) -> Result<CheckReport> {
    expect_shape("monoid morphism", f, &src.carrier, &dst.carrier)?;
    let mut r = CheckReport::new("monoid morphism");
    r.equation(
        "morphism-mult",
        comp![dst.mult, tens![f, f]?]?,
        comp![f, src.mult]?,
    );
    r.equation("morphism-unit", comp![f, src.unit]?, dst.unit.clone());
    Ok(r)
}

/// Entries `morphism-comult` ((f⊗f)∘δ_C = δ_D∘f) and `morphism-counit` (ε_D∘f = ε_C).
pub fn check_comonoid_morphism(f: &Mor, src: &Comonoid, dst: &Comonoid) -> Result<CheckReport> {
    expect_shape("comonoid morphism", f, &src.carrier, &dst.carrier)?;
    let mut r = CheckReport::new("comonoid morphism");
    r.equation(
        "morphism-comult",
        comp![tens![f, f]?, src.comult]?,
        comp![dst.comult, f]?,
    );
    r.equation("morphism-counit", comp![dst.counit, f]?, src.counit.clone());
    Ok(r)
}

/// Entry `linear`: f∘φ_M = φ_N∘(A⊗f).
pub fn check_module_morphism(f: &Mor, src: &LeftModule, dst: &LeftModule) -> Result<CheckReport> {
    expect_shape("module morphism", f, &src.carrier, &dst.carrier)?;
    let mut r = CheckReport::new("module morphism");
    r.equation(
        "linear",
        comp![f, src.action]?,
        comp![dst.action, tens![src.monoid.id(), f]?]?,
    );
    Ok(r)
}

/// Entry `colinear`: ρ_N∘f = (f⊗C)∘ρ_M.
pub fn check_comodule_morphism(
    f: &Mor,
    src: &RightComodule,
    dst: &RightComodule,
) -> Result<CheckReport> {
    expect_shape("comodule morphism", f, &src.carrier, &dst.carrier)?;
    let mut r = CheckReport::new("comodule morphism");
    r.equation(
        "colinear",
        comp![dst.coaction, f]?,
        comp![tens![f, src.comonoid.id()]?, src.coaction]?,
    );
    Ok(r)
}

/// Monoid and comonoid structure on one carrier `H`, plus a stored antipode
/// whose axioms are not checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakHopfData {
    pub monoid: Monoid,
    pub comonoid: Comonoid,
    pub antipode: Mor,
}

impl WeakHopfData {
    pub fn new(monoid: Monoid, comonoid: Comonoid, antipode: Mor) -> Result<Self> {
        if monoid.carrier != comonoid.carrier {
            return Err(WcpError::shape(
                "weak Hopf carrier",
                &monoid.carrier,
                &comonoid.carrier,
            ));
        }
        expect_shape("antipode", &antipode, &monoid.carrier, &monoid.carrier)?;
        Ok(WeakHopfData {
            monoid,
            comonoid,
            antipode,
        })
    }

    pub fn carrier(&self) -> &Obj {
        &self.monoid.carrier
    }

    pub fn field(&self) -> Field {
        self.monoid.field()
    }

    /// `δ_{H⊗H} = (H⊗c_{H,H}⊗H)∘(δ_H⊗δ_H)`.
    pub fn delta_hh(&self) -> Result<Mor> {
        let h = self.carrier();
        let f = self.field();
        let idh = self.monoid.id();
        comp![
            tens![idh, Mor::swap(f, h, h), idh]?,
            tens![self.comonoid.comult, self.comonoid.comult]?
        ]
    }

    /// `μ_{H⊗H} = (μ_H⊗μ_H)∘(H⊗c_{H,H}⊗H)`.
    pub fn mu_hh(&self) -> Result<Mor> {
        let h = self.carrier();
        let f = self.field();
        let idh = self.monoid.id();
        comp![
            tens![self.monoid.mult, self.monoid.mult]?,
            tens![idh, Mor::swap(f, h, h), idh]?
        ]
    }

    /// Monoid and comonoid axioms; weak-Hopf compatibility axioms are not part
    /// of this check.
    pub fn check(&self) -> Result<CheckReport> {
        let mut r = check_monoid(&self.monoid)?;
        r.extend(check_comonoid(&self.comonoid)?);
        r.title = "weak Hopf data".into();
        r.note("only monoid and comonoid axioms are checked; antipode stored unchecked");
        Ok(r)
    }

    /// The same data with every map transposed: comultiplication becomes
    /// multiplication and vice versa.
    pub fn transpose_dual(&self) -> WeakHopfData {
        WeakHopfData {
            monoid: self.comonoid.transpose_dual(),
            comonoid: self.monoid.transpose_dual(),
            antipode: self.antipode.transpose_dual(),
        }
    }
}

pub const MODULE_MONOID_NOTE: &str = "module-monoid axioms checked: module-unit, module-assoc and \
     multiplicativity φ∘(H⊗μ_A) = μ_A∘(φ⊗φ)∘(H⊗c_{H,A}⊗A)∘(δ_H⊗A⊗A)";

/// Checks that `action: H⊗A → A` makes the monoid `a` a left module monoid
/// over `h`, using the plain module axioms plus multiplicativity.
pub fn check_module_monoid(h: &WeakHopfData, a: &Monoid, action: &Mor) -> Result<CheckReport> {
    let lm = LeftModule::new(h.monoid.clone(), action.clone())?;
    if lm.carrier != a.carrier {
        return Err(WcpError::shape("module monoid", &lm.carrier, &a.carrier));
    }
    let mut r = check_left_module(&lm)?;
    r.title = "module monoid".into();
    r.note(MODULE_MONOID_NOTE);
    let f = a.field();
    let (ho, ao) = (h.carrier(), &a.carrier);
    r.equation(
        "module-monoid-mult",
        comp![action, tens![h.monoid.id(), a.mult]?]?,
        comp![
            a.mult,
            tens![action, action]?,
            tens![h.monoid.id(), Mor::swap(f, ho, ao), a.id()]?,
            tens![h.comonoid.comult, a.id(), a.id()]?
        ]?,
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::int;

    fn kz2() -> Monoid {
        let f = Field::Rationals;
        let a = Obj::new("A", 2).unwrap();
        let unit = Mor::from_int_rows(f, &Obj::unit(), &a, &[&[1], &[0]]).unwrap();
        let mult = Mor::from_columns(f, &a.tensor(&a), &a, |c| {
            vec![((c / 2 + c % 2) % 2, int(1))]
        })
        .unwrap();
        Monoid::new(unit, mult).unwrap()
    }

    #[test]
    fn group_algebra_is_a_monoid_and_dualizes() {
        let m = kz2();
        assert!(check_monoid(&m).unwrap().all_passed());
        assert!(check_comonoid(&m.transpose_dual()).unwrap().all_passed());
        assert!(check_left_module(&LeftModule::regular(&m))
            .unwrap()
            .all_passed());
        let rc = RightComodule::regular(&m.transpose_dual());
        assert!(check_right_comodule(&rc).unwrap().all_passed());
    }

    #[test]
    fn corrupted_unit_fails_unit_laws_only() {
        let mut m = kz2();
        m.unit = m.unit.scale(&int(2)).unwrap();
        let r = check_monoid(&m).unwrap();
        assert_eq!(r.passed("monoid-unit-left"), Some(false));
        assert_eq!(r.passed("monoid-unit-right"), Some(false));
        assert_eq!(r.passed("monoid-assoc"), Some(true));
    }

    #[test]
    fn scaled_action_fails_module_unit() {
        let m = kz2();
        let lm = LeftModule::new(m.clone(), m.mult.scale(&int(2)).unwrap()).unwrap();
        assert_eq!(
            check_left_module(&lm).unwrap().passed("module-unit"),
            Some(false)
        );
    }

    #[test]
    fn morphism_checks() {
        let m = kz2();
        let r = check_monoid_morphism(&m.id(), &m, &m).unwrap();
        assert!(r.all_passed());
        let zero = Mor::zero(m.field(), &m.carrier, &m.carrier);
        let r = check_monoid_morphism(&zero, &m, &m).unwrap();
        assert_eq!(r.passed("morphism-unit"), Some(false));
    }

    #[test]
    fn shape_errors_are_errors() {
        let m = kz2();
        let bad = Mor::identity(m.field(), &m.carrier);
        assert!(Monoid::new(bad, m.mult.clone()).unwrap_err().is_shape());
    }
}
