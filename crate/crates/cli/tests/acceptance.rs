//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Expected values come from dense rational arithmetic written out below
//! (matrix product, Kronecker product, row reduction, index reversal), not
//! from the library's own composites.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use num::Zero;
use wcpkit_cli::{fixture_docs, parse, run, serialize};
use wcpkit_core::biproduct::{self, Biproduct};
use wcpkit_core::equivalence::*;
use wcpkit_core::fixtures::{self, FixtureBundle};
use wcpkit_core::{field, wcc, wcp, CheckReport, Mor, Obj, Role, Scalar};

type M = Vec<Vec<Scalar>>;
type Check = Result<(), String>;

fn s(v: i64) -> Scalar {
    field::int(v)
}

fn dense(m: &Mor) -> M {
    m.to_rows()
}

fn eye(n: usize) -> M {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { s(1) } else { s(0) }).collect())
        .collect()
}

fn mm(a: &M, b: &M) -> M {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    let mut out = vec![vec![s(0); m]; n];
    for i in 0..n {
        assert_eq!(a[i].len(), k, "inner dimensions");
        for (l, bl) in b.iter().enumerate() {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][l] * &bl[j];
            }
        }
    }
    out
}

/// Left-factor-major Kronecker product.
fn kron(a: &M, b: &M) -> M {
    let (br, bc) = (b.len(), b[0].len());
    let mut out = vec![vec![s(0); a[0].len() * bc]; a.len() * br];
    for (i, ai) in a.iter().enumerate() {
        for (j, aij) in ai.iter().enumerate() {
            for k in 0..br {
                for l in 0..bc {
                    out[i * br + k][j * bc + l] = aij * &b[k][l];
                }
            }
        }
    }
    out
}

fn kron_all(ms: &[&M]) -> M {
    ms[1..].iter().fold(ms[0].clone(), |acc, m| kron(&acc, m))
}

fn rank(a: &M) -> usize {
    let mut a = a.clone();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][c].clone();
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &piv;
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row).skip(c) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Index of the digit-reversed multi-index: `idx` over factors `dims`
/// becomes the same digits read over the reversed factor list.
fn rev_index(dims: &[usize], idx: usize) -> usize {
    let mut digits = vec![0; dims.len()];
    let mut rest = idx;
    for (k, d) in dims.iter().enumerate().rev() {
        digits[k] = rest % d;
        rest /= d;
    }
    dims.iter()
        .zip(&digits)
        .rev()
        .fold(0, |acc, (d, x)| acc * d + x)
}

fn dims(x: &Obj) -> Vec<usize> {
    x.factors().iter().map(|f| f.dim).collect()
}

/// The dual `D(f)`, entry by entry: `D(f)[r][c] = f[rev c][rev r]`.
fn dual_oracle(f: &Mor) -> M {
    let (dd, cd) = (dims(f.dom()), dims(f.cod()));
    let rd: Vec<usize> = dd.iter().rev().copied().collect();
    let rc: Vec<usize> = cd.iter().rev().copied().collect();
    let fr = dense(f);
    (0..f.cols())
        .map(|r| {
            (0..f.rows())
                .map(|c| fr[rev_index(&rc, c)][rev_index(&rd, r)].clone())
                .collect()
        })
        .collect()
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn all_pass(r: &CheckReport, what: &str) -> Check {
    ensure(r.all_passed(), || format!("{what}: {:?}", r.failed_names()))
}

fn ok<T, E: std::fmt::Display>(x: Result<T, E>, what: &str) -> Result<T, String> {
    x.map_err(|e| format!("{what}: {e}"))
}

fn bundle(name: &str) -> Result<FixtureBundle, String> {
    ok(fixtures::by_name(name), name)
}

const SUITE: &[&str] = &["CZ1", "CZ2", "CZ3", "CZ2TW", "WHA-PGPD", "WHA-PGPD3"];

fn suite() -> Result<Vec<FixtureBundle>, String> {
    SUITE.iter().map(|n| bundle(n)).collect()
}

/// `μ_A⊗V` as a dense matrix.
fn phi(b: &FixtureBundle) -> M {
    let q = b.quadruple();
    kron(&dense(&q.a.mult), &eye(q.v.dim()))
}

fn c1_idempotents() -> Check {
    for b in suite()? {
        let q = b.quadruple();
        let (da, dv) = (q.a.carrier.dim(), q.v.dim());
        let computed = ok(wcp::compute_nabla(q), &b.name)?;
        ensure(&computed == b.product.nabla(), || {
            format!("{}: stored ∇", b.name)
        })?;
        let n = dense(&computed);
        ensure(mm(&n, &n) == n, || format!("{}: ∇∘∇ ≠ ∇", b.name))?;
        let ph = phi(&b);
        ensure(mm(&n, &ph) == mm(&ph, &kron(&eye(da), &n)), || {
            format!("{}: ∇ not left linear", b.name)
        })?;
        // fi-nab: (μ_A⊗V)(A⊗ψ)(∇⊗A) = (μ_A⊗V)(A⊗ψ) = ∇∘(μ_A⊗V)(A⊗ψ)
        let mid = mm(&ph, &kron(&eye(da), &dense(&q.psi)));
        ensure(mm(&mid, &kron(&n, &eye(da))) == mid, || {
            format!("{}: fi-nab", b.name)
        })?;
        ensure(mm(&n, &mid) == mid, || format!("{}: fi-nab-2", b.name))?;
        ensure(n.len() == da * dv, || "∇ size".into())?;
    }
    Ok(())
}

/// Exhaustive associativity of `mu: X⊗X → X` over all basis triples.
fn assoc_exhaustive(mu: &Mor, what: &str) -> Check {
    let d = mu.rows();
    ensure(mu.cols() == d * d, || {
        format!("{what}: not a multiplication")
    })?;
    let prod_basis = |x: usize, y: usize| -> Vec<(usize, Scalar)> { mu.column(x * d + y).to_vec() };
    for x in 0..d {
        for y in 0..d {
            let xy = prod_basis(x, y);
            for z in 0..d {
                let yz = prod_basis(y, z);
                let mut lhs = vec![s(0); d];
                for (k, c) in &xy {
                    for (r, v) in mu.column(k * d + z) {
                        lhs[*r] += c * v;
                    }
                }
                let mut rhs = vec![s(0); d];
                for (k, c) in &yz {
                    for (r, v) in mu.column(x * d + k) {
                        rhs[*r] += c * v;
                    }
                }
                ensure(lhs == rhs, || {
                    format!("{what}: ({x}·{y})·{z} ≠ {x}·({y}·{z})")
                })?;
            }
        }
    }
    Ok(())
}

fn c2_associativity() -> Check {
    for b in suite()? {
        assoc_exhaustive(&b.product.build.mu_big, &format!("{} μ_(A⊗V)", b.name))?;
        let m = ok(b.product.image_monoid(), &b.name)?;
        assoc_exhaustive(&m.mult, &format!("{} μ_(A×V)", b.name))?;
        // The image unit is two-sided.
        let d = m.carrier.dim();
        let (mu, u) = (dense(&m.mult), dense(&m.unit));
        ensure(mm(&mu, &kron(&u, &eye(d))) == eye(d), || {
            format!("{}: left unit", b.name)
        })?;
        ensure(mm(&mu, &kron(&eye(d), &u)) == eye(d), || {
            format!("{}: right unit", b.name)
        })?;
        if b.name.starts_with("WHA") {
            let n = b.quadruple().a.carrier.dim();
            ensure(d == n * n, || format!("{}: image rank {d}", b.name))?;
        }
    }
    Ok(())
}

fn c3_thm1() -> Check {
    for b in suite()? {
        let q = b.quadruple();
        let (dv, dav) = (q.v.dim(), q.av().dim());
        let nu = dense(&b.product.nu.nu);
        let mu = dense(&b.product.build.mu_big);
        let n = dense(b.product.nabla());
        ensure(mm(&mu, &kron(&eye(dav), &nu)) == n, || {
            format!("{}: ∇ ≠ m(A⊗V⊗ν)", b.name)
        })?;
        let eta = dense(&q.a.unit);
        let beta = mm(&phi(&b), &kron(&eye(q.a.carrier.dim()), &nu));
        let psi = mm(&mu, &kron_all(&[&eta, &eye(dv), &beta]));
        let sigma = mm(&mu, &kron_all(&[&eta, &eye(dv), &eta, &eye(dv)]));
        ensure(psi == dense(&q.psi), || format!("{}: ψ from μ", b.name))?;
        ensure(sigma == dense(&q.sigma), || format!("{}: σ from μ", b.name))?;
        let (lp, ls, r) = ok(
            wcp::recover_psi_sigma(q, &b.product.build, &b.product.nu),
            &b.name,
        )?;
        all_pass(&r, &b.name)?;
        ensure(lp == q.psi && ls == q.sigma, || {
            format!("{}: recover_psi_sigma", b.name)
        })?;
        ensure(r.passed("fi-wcp") == Some(true), || "fi-wcp missing".into())?;
        let full = ok(b.product.full_report(), &b.name)?;
        ensure(full.passed("thm1-wcp") == Some(true), || {
            format!("{}: thm1-wcp", b.name)
        })?;
    }
    Ok(())
}

fn c4_weak_hopf_formula() -> Check {
    for n in [2, 3] {
        let b = ok(fixtures::make_pair_groupoid_wha(n), "WHA")?;
        let w = &b.wha;
        let via_wha = ok(
            fixtures::nabla_wha(&w.h, &b.quadruple().a, &w.action),
            "nabla-wha",
        )?;
        let via_idem = ok(wcp::compute_nabla(b.quadruple()), "idem-wcp")?;
        ensure(via_wha == via_idem, || format!("n={n}: formulas differ"))?;
        let r = rank(&dense(&via_wha));
        ensure(r == n * n, || format!("n={n}: rank {r}"))?;
        let dim = b.product.build.image().dim();
        ensure(dim == n * n, || format!("n={n}: image dim {dim}"))?;
    }
    Ok(())
}

fn round_trip(b: &FixtureBundle, gp: &GaugePair, what: &str) -> Check {
    let v = &b.product;
    let w = ok(transport_structure(v, gp), what)?;
    all_pass(&ok(verify_gauge(gp, v, &w), what)?, what)?;
    let tp = ok(ts_from_gauge(gp, v, &w), what)?;
    all_pass(&ok(verify_ts(&tp, v, &w), what)?, what)?;
    let g2 = ok(gauge_from_ts(&tp, v, &w), what)?;
    ensure(&g2 == gp, || format!("{what}: (γ,θ) not reproduced"))?;
    let iso = ok(iso_from_ts(&tp, v, &w), what)?;
    all_pass(&ok(check_iso(&iso, v, &w), what)?, what)?;
    let back = ok(ts_from_iso(&iso, v, &w), what)?;
    all_pass(&ok(check_ts_roundtrip(&tp, &back, v, &w), what)?, what)?;
    let (t, sm) = (dense(&tp.t), dense(&tp.s));
    let (nv, nw) = (dense(v.nabla()), dense(w.nabla()));
    ensure(mm(&t, &mm(&sm, &t)) == t, || format!("{what}: TST ≠ T"))?;
    ensure(mm(&nw, &t) == t && mm(&t, &nv) == t, || {
        format!("{what}: ∇T ≠ T∇")
    })?;
    ensure(dense(&back.t) == t, || format!("{what}: T not reproduced"))?;
    Ok(())
}

fn c5_round_trips() -> Check {
    let b = bundle("CZ2TW")?;
    round_trip(&b, &ok(identity_gauge(&b.product), "id")?, "CZ2TW identity")?;
    round_trip(
        &b,
        &ok(fixtures::scalar_gauge(&b, &s(2)), "scalar")?,
        "CZ2TW scalar",
    )?;
    round_trip(
        &b,
        &ok(fixtures::shift_gauge(&b, &[0, 1]), "shift")?,
        "CZ2TW shift",
    )?;
    let w = bundle("WHA-PGPD")?;
    round_trip(&w, &ok(identity_gauge(&w.product), "id")?, "WHA identity")?;
    let l1 = ok(
        fixtures::groupoid_scaling_gauge(&w, |i, j| s((i + 2 * j + 1) as i64)),
        "λ1",
    )?;
    round_trip(&w, &l1, "WHA λ1")?;
    let l2 = ok(
        fixtures::groupoid_scaling_gauge(&w, |i, j| if i == j { s(1) } else { s(-3) }),
        "λ2",
    )?;
    round_trip(&w, &l2, "WHA λ2")
}

fn prop18_family(b: &FixtureBundle, gauges: Vec<GaugePair>) -> Check {
    ensure(gauges.len() >= 3, || "fewer than three gauges".into())?;
    for (k, gp) in gauges.iter().enumerate() {
        let what = format!("{} gauge {k}", b.name);
        let w = ok(transport_structure(&b.product, gp), &what)?;
        let hyp = ok(verify_gauge(gp, &b.product, &w), &what)?;
        let holds = hyp.passed("gamma-theta-sigma") == Some(true)
            && hyp.passed("gamma-theta-special") == Some(true);
        ensure(holds, || format!("{what}: hypotheses fail"))?;
        let r = ok(check_prop18(gp, &b.product, &w), &what)?;
        all_pass(&r, &what)?;
        ensure(r.passed("sup-11") == Some(true), || {
            format!("{what}: sup-11")
        })?;
    }
    Ok(())
}

fn c6_prop18() -> Check {
    let b = bundle("CZ2TW")?;
    prop18_family(
        &b,
        vec![
            ok(identity_gauge(&b.product), "id")?,
            ok(fixtures::scalar_gauge(&b, &s(2)), "u=2")?,
            ok(fixtures::scalar_gauge(&b, &s(-3)), "u=-3")?,
            ok(fixtures::shift_gauge(&b, &[0, 1]), "shift")?,
        ],
    )?;
    let b3 = bundle("CZ3")?;
    prop18_family(
        &b3,
        vec![
            ok(fixtures::shift_gauge(&b3, &[0, 1, 0]), "shift")?,
            ok(fixtures::shift_gauge(&b3, &[2, 1, 1]), "shift")?,
            ok(fixtures::scalar_gauge(&b3, &s(5)), "u=5")?,
        ],
    )?;
    let w = bundle("WHA-PGPD")?;
    prop18_family(
        &w,
        vec![
            ok(identity_gauge(&w.product), "id")?,
            ok(
                fixtures::groupoid_scaling_gauge(&w, |i, j| s((i + 2 * j + 1) as i64)),
                "λ1",
            )?,
            ok(
                fixtures::groupoid_scaling_gauge(&w, |i, j| if i == j { s(1) } else { s(-3) }),
                "λ2",
            )?,
            ok(
                fixtures::groupoid_scaling_gauge(&w, |i, _| s(i as i64 + 2)),
                "λ3",
            )?,
        ],
    )
}

fn c7_panaite() -> Check {
    let derived = [
        "gamma-theta-preunit-BRZ",
        "gamma-theta-preunit-b-BRZ",
        "gamma-theta-special-BRZ-b",
        "sup-11-Pan",
        "aux-brz",
    ];
    for name in ["CZ2", "CZ2TW", "CZ3"] {
        let b = bundle(name)?;
        let n = b.quadruple().v.dim();
        let shifts: Vec<usize> = (0..n).map(|i| i % 2).collect();
        for gp in [
            ok(fixtures::unit_gauge(&b), name)?,
            ok(fixtures::scalar_gauge(&b, &s(3)), name)?,
            ok(fixtures::shift_gauge(&b, &shifts), name)?,
        ] {
            let w = ok(transport_structure(&b.product, &gp), name)?;
            let r = ok(
                check_panaite_reduction(&gp, b.quadruple(), &b.unit_v, &w.quadruple, &b.unit_v),
                name,
            )?;
            all_pass(&r, name)?;
            for d in derived {
                let e = r.get(d).ok_or_else(|| format!("{name}: {d} missing"))?;
                ensure(e.passed && e.role == Role::Consequence, || {
                    format!("{name}: {d}")
                })?;
            }
            let hyps = r
                .entries
                .iter()
                .filter(|e| e.role == Role::Condition)
                .count();
            ensure(hyps == 3, || format!("{name}: {hyps} hypotheses"))?;
        }
    }
    Ok(())
}

fn c8_duality() -> Check {
    for name in fixtures::FIXTURE_NAMES {
        let b = bundle(name)?;
        let d = ok(fixtures::dual_fixture(&b), name)?;
        let r = ok(wcc::dual_crosscheck(&d.coquadruple, Some(&d.ups)), name)?;
        all_pass(&r, name)?;
        let agreements = r.names().iter().filter(|n| n.starts_with("agree:")).count();
        ensure(agreements > 20, || {
            format!("{name}: only {agreements} agreements")
        })?;
        all_pass(&ok(d.full_report(), name)?, name)?;
        ensure(dense(d.gamma()) == dual_oracle(b.product.nabla()), || {
            format!("{name}: Γ")
        })?;
        ensure(
            dense(&d.build.delta_big) == dual_oracle(&b.product.build.mu_big),
            || format!("{name}: δ"),
        )?;
    }
    // Failing verdicts agree too.
    let b = bundle("CZ2TW")?;
    let q = b.quadruple();
    let mut sigma = q.raw_sigma.entries();
    for e in sigma.iter_mut().filter(|e| (e.0, e.1) == (1, 1)) {
        e.2 = s(2);
    }
    let bad_sigma = ok(
        Mor::from_entries(b.field(), q.sigma.dom(), q.sigma.cod(), sigma),
        "σ",
    )?;
    let bad = ok(
        wcp::Quadruple::new(q.a.clone(), q.v.clone(), q.psi.clone(), bad_sigma),
        "bad",
    )?;
    let cq = ok(wcc::dual_coquadruple(&bad), "dual")?;
    let r = ok(wcc::dual_crosscheck(&cq, None), "bad crosscheck")?;
    all_pass(&r, "bad crosscheck")?;
    let direct = ok(wcc::check_coquadruple(&cq), "bad co")?;
    ensure(!direct.all_passed(), || "corrupted dual passes".into())?;
    // Cogauge translations agree with their dualized product checks.
    let dv = ok(fixtures::dual_fixture(&b), "dual")?;
    let gp = ok(fixtures::scalar_gauge(&b, &s(2)), "gauge")?;
    let cgp = CoGaugePair {
        pi: wcc::dualize(&gp.gamma),
        zeta: wcc::dualize(&gp.theta),
    };
    let dw = ok(co_transport(&dv, &cgp), "co_transport")?;
    all_pass(&ok(co_verify_gauge(&cgp, &dv, &dw), "cogauge")?, "cogauge")?;
    let ctp = ok(co_ts_from_gauge(&cgp, &dv, &dw), "cotransfer")?;
    all_pass(
        &ok(co_verify_ts(&ctp, &dv, &dw), "cotransfer")?,
        "cotransfer",
    )
}

/// α between the image structures, checked with dense arithmetic.
fn iso_preserves_structure(b1: &Biproduct, b2: &Biproduct, t: &Mor, sm: &Mor, what: &str) -> Check {
    let iso = ok(biproduct::biproduct_iso(b1, b2, t, sm), what)?;
    let (a, ai) = (dense(&iso.alpha), dense(&iso.alpha_inv));
    let d = a.len();
    ensure(mm(&a, &ai) == eye(d) && mm(&ai, &a) == eye(d), || {
        format!("{what}: not inverse")
    })?;
    let (m1, m2) = (
        ok(b1.product.image_monoid(), what)?,
        ok(b2.product.image_monoid(), what)?,
    );
    ensure(
        mm(&a, &dense(&m1.mult)) == mm(&dense(&m2.mult), &kron(&a, &a)),
        || format!("{what}: monoid mult"),
    )?;
    ensure(mm(&a, &dense(&m1.unit)) == dense(&m2.unit), || {
        format!("{what}: monoid unit")
    })?;
    let (c1, c2) = (
        ok(b1.coproduct.image_comonoid(), what)?,
        ok(b2.coproduct.image_comonoid(), what)?,
    );
    // The coproduct image is identified with the product image through the
    // shared idempotent, so α acts on it through the splitting maps.
    let tr = |b: &Biproduct| -> Result<(M, M), String> {
        let (pi, pp) = (dense(b.product.build.inj()), dense(b.product.build.proj()));
        let (ci, cp) = (
            dense(&b.coproduct.build.split.inj),
            dense(&b.coproduct.build.split.proj),
        );
        Ok((mm(&cp, &pi), mm(&pp, &ci)))
    };
    let (p2c1, c2p1) = tr(b1)?;
    let (p2c2, _) = tr(b2)?;
    let ac = mm(&p2c2, &mm(&a, &c2p1));
    ensure(
        mm(&dense(&c2.comult), &ac) == mm(&kron(&ac, &ac), &dense(&c1.comult)),
        || format!("{what}: comonoid comult"),
    )?;
    ensure(mm(&dense(&c2.counit), &ac) == dense(&c1.counit), || {
        format!("{what}: counit")
    })?;
    let (l1, l2) = (
        ok(b1.product.image_module(), what)?,
        ok(b2.product.image_module(), what)?,
    );
    let da = b1.product.quadruple.a.carrier.dim();
    ensure(
        mm(&a, &dense(&l1.action)) == mm(&dense(&l2.action), &kron(&eye(da), &a)),
        || format!("{what}: module"),
    )?;
    let (r1, r2) = (
        ok(b1.coproduct.image_comodule(), what)?,
        ok(b2.coproduct.image_comodule(), what)?,
    );
    let dc = b1.coproduct.coquadruple.c.carrier.dim();
    ensure(
        mm(&dense(&r2.coaction), &ac) == mm(&kron(&ac, &eye(dc)), &dense(&r1.coaction)),
        || format!("{what}: comodule"),
    )?;
    ensure(p2c1.len() == d, || format!("{what}: image sizes"))
}

fn c9_biproduct() -> Check {
    let bd = ok(fixtures::make_group_biproduct(2, &s(1)), "BIP-CZ2")?;
    let r = ok(biproduct::check_biproduct(&bd), "BIP-CZ2")?;
    all_pass(&r, "BIP-CZ2")?;
    for name in ["nabla-gamma", "3-1", "3-1-2"] {
        ensure(r.passed(name) == Some(true), || format!("BIP-CZ2: {name}"))?;
    }
    let b = ok(bd.assemble(), "assemble")?;
    ensure(
        dense(b.coproduct.gamma()) == dense(b.product.nabla()),
        || "∇ ≠ Γ".into(),
    )?;
    let id = b.idempotent().clone();
    all_pass(
        &ok(biproduct::verify_biproduct_ts(&b, &b, &id, &id), "ts")?,
        "identity ts",
    )?;
    let gp = ok(identity_gauge(&b.product), "gauge")?;
    let cgp = ok(identity_cogauge(&b.coproduct), "cogauge")?;
    let g = ok(
        biproduct::verify_biproduct_gauge(&b, &b, &gp, &cgp),
        "gauge",
    )?;
    all_pass(&g, "identity gauge")?;
    iso_preserves_structure(&b, &b, &id, &id, "BIP-CZ2 identity")?;
    // A nontrivial equivalence: BIP-CZ3 transported along a shift gauge.
    let bd3 = ok(fixtures::make_group_biproduct(3, &s(2)), "BIP-CZ3")?;
    let b1 = ok(bd3.assemble(), "BIP-CZ3")?;
    let (gp, cgp) = ok(
        fixtures::group_biproduct_shift_gauge(&bd3, &[0, 1, 0]),
        "shift",
    )?;
    let b2 = ok(biproduct::transport_biproduct(&b1, &gp, &cgp), "transport")?;
    all_pass(
        &ok(biproduct::verify_biproduct_gauge(&b1, &b2, &gp, &cgp), "g")?,
        "BIP-CZ3 gauge",
    )?;
    let tp = ok(ts_from_gauge(&gp, &b1.product, &b2.product), "ts")?;
    all_pass(
        &ok(biproduct::verify_biproduct_ts(&b1, &b2, &tp.t, &tp.s), "ts")?,
        "BIP-CZ3 ts",
    )?;
    iso_preserves_structure(&b1, &b2, &tp.t, &tp.s, "BIP-CZ3 shifted")
}

fn run_bin(args: &[&str]) -> Result<std::process::Output, String> {
    ok(
        Command::new(env!("CARGO_BIN_EXE_wcpkit"))
            .args(args)
            .output(),
        "spawn",
    )
}

fn c10_cli() -> Check {
    for name in fixture_docs::emit_names() {
        let doc = ok(fixture_docs::document_by_name(&name), &name)?;
        let text = serialize(&doc);
        let back = ok(parse(&text), &name)?;
        ensure(back == doc, || format!("{name}: parse∘serialize ≠ id"))?;
        ensure(serialize(&back) == text, || {
            format!("{name}: text not stable")
        })?;
    }
    // The emitted CZ2 spec re-checks with the library's verdicts.
    let b = bundle("CZ2")?;
    let report = run(&ok(fixture_docs::document_by_name("CZ2"), "CZ2")?);
    let direct = ok(wcp::check_quadruple(b.quadruple()), "CZ2")?;
    for e in &direct.entries {
        ensure(report.verdict(&e.name) == Some(e.passed), || {
            format!("CZ2: {}", e.name)
        })?;
    }
    ensure(report.exit_code() == 0, || "CZ2 exit code".into())?;

    let dir = ok(tempfile::tempdir(), "tempdir")?;
    let bad = dir.path().join("bad.wcp");
    let emitted = run_bin(&["fixtures", "emit", "CZ2TW-BAD-SIGMA"])?;
    ok(std::fs::write(&bad, &emitted.stdout), "write")?;
    let out = run_bin(&["check", bad.to_str().unwrap()])?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.code() == Some(1), || {
        format!("bad σ exit {:?}", out.status.code())
    })?;
    ensure(stdout.contains("cocy2-wcp: FAIL"), || {
        "no cocy2-wcp: FAIL line".into()
    })?;
    let failing: Vec<&str> = stdout.lines().filter(|l| l.ends_with(": FAIL")).collect();
    ensure(failing.iter().all(|l| l.starts_with("cocy2-wcp")), || {
        format!("unexpected failures {failing:?}")
    })?;

    let good = dir.path().join("cz2tw.wcp");
    let emitted = run_bin(&["fixtures", "emit", "CZ2TW-GAUGE"])?;
    ok(std::fs::write(&good, &emitted.stdout), "write")?;
    let j1 = run_bin(&["report", good.to_str().unwrap(), "--format", "json"])?;
    let j2 = run_bin(&["report", good.to_str().unwrap(), "--format", "json"])?;
    ensure(j1.status.code() == Some(0), || "json exit code".into())?;
    ensure(!j1.stdout.is_empty() && j1.stdout == j2.stdout, || {
        "JSON differs".into()
    })
}

type Criterion = (&'static str, fn() -> Check);

fn main() {
    let criteria: [Criterion; 10] = [
        ("idempotent suite", c1_idempotents),
        ("associativity suite", c2_associativity),
        ("thm1-wcp consistency and ψ/σ recovery", c3_thm1),
        ("weak-Hopf ∇ formula and image rank", c4_weak_hopf_formula),
        ("equivalence round trips", c5_round_trips),
        ("sup-11 on gauge families", c6_prop18),
        ("Panaite reduction", c7_panaite),
        ("duality oracle", c8_duality),
        ("biproduct", c9_biproduct),
        ("command line", c10_cli),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let ms = start.elapsed().as_millis();
        match res {
            Ok(()) => println!("PASS  {:>2}. {name} ({ms} ms)", k + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL  {:>2}. {name} ({ms} ms): {e}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
