//! Fixture values against expected matrices written out by hand-derived
//! basis formulas, independent of the library's composite formulas.

use wcpkit_core::fixtures::{self, make_group_algebra_crossed, make_pair_groupoid_wha};
use wcpkit_core::structures::{check_comonoid, check_monoid};
use wcpkit_core::wcc::dualize;
use wcpkit_core::{field, wcp, Field, Mor, Obj, Scalar};

fn s(v: i64) -> Scalar {
    field::int(v)
}

fn q() -> Field {
    Field::Rationals
}

/// `(a_i⊗g^j)(a_k⊗g^l) = c(j,l)·a_{i+k}⊗g^{j+l}` on `A⊗V`, `A = V = kZ_n`.
fn group_mu_oracle(n: usize, t: i64, dom: &Obj, cod: &Obj) -> Mor {
    let mut entries = vec![];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let col = ((i * n + j) * n + k) * n + l;
                    let row = ((i + k) % n) * n + (j + l) % n;
                    let c = if j + l >= n { t } else { 1 };
                    entries.push((row, col, s(c)));
                }
            }
        }
    }
    Mor::from_entries(q(), dom, cod, entries).unwrap()
}

#[test]
fn group_algebra_products_match_expansion() {
    for (n, t) in [(1, 1), (2, 1), (3, 1), (2, 2), (3, 5)] {
        let b = make_group_algebra_crossed(n, &s(t)).unwrap();
        let mu = &b.product.build.mu_big;
        let oracle = group_mu_oracle(n, t, mu.dom(), mu.cod());
        assert_eq!(mu, &oracle, "n={n} t={t}");
        assert_eq!(b.product.nabla(), &Mor::identity(q(), &b.quadruple().av()));
    }
}

#[test]
fn cz2_generator_squares() {
    // (1⊗g)² = 1⊗1 for CZ2 and 2·(1⊗1) for CZ2TW.
    for (t, expected) in [(1, 1), (2, 2)] {
        let b = make_group_algebra_crossed(2, &s(t)).unwrap();
        let mu = &b.product.build.mu_big;
        let col = 4 + 1; // (a0⊗g)⊗(a0⊗g) = index (0·2+1)·4 + (0·2+1)
        assert_eq!(mu.column(col), &[(0, s(expected))]);
    }
}

#[test]
fn trivial_bundle_is_one_dimensional() {
    let b = fixtures::by_name("TRIV").unwrap();
    let q_ = b.quadruple();
    assert_eq!(q_.av().dim(), 1);
    assert_eq!(b.product.build.mu_big.entries(), vec![(0, 0, s(1))]);
    assert_eq!(b.product.nu.nu.entries(), vec![(0, 0, s(1))]);
}

/// `∇(p_k⊗e_ij) = δ_ki p_k⊗e_ij` on `K^n⊗H`.
fn groupoid_nabla_oracle(n: usize, x: &Obj) -> Mor {
    let d = n * n;
    let entries = (0..n)
        .flat_map(|k| (0..n).map(move |j| (k, j)))
        .map(|(k, j)| {
            let idx = k * d + k * n + j;
            (idx, idx, s(1))
        });
    Mor::from_entries(q(), x, x, entries).unwrap()
}

#[test]
fn groupoid_nabla_is_diagonal_projection() {
    for n in [2, 3] {
        let b = make_pair_groupoid_wha(n).unwrap();
        let av = b.quadruple().av();
        let oracle = groupoid_nabla_oracle(n, &av);
        assert_eq!(b.product.nabla(), &oracle);
        assert_eq!(oracle.rank(), n * n);
        assert_eq!(av.dim(), n * n * n);
        assert_eq!(b.product.build.image().dim(), n * n);
    }
}

#[test]
fn groupoid_preunit_and_beta() {
    let b = make_pair_groupoid_wha(2).unwrap();
    // ν = p₁⊗e₁₁ + p₂⊗e₂₂: indices k·4 + k·2 + k.
    assert_eq!(b.product.nu.nu.entries(), vec![(0, 0, s(1)), (7, 0, s(1))]);
    // β(p_k) = p_k⊗e_kk.
    let beta = b.product.beta().unwrap();
    assert_eq!(beta.entries(), vec![(0, 0, s(1)), (7, 1, s(1))]);
}

#[test]
fn groupoid_product_matches_expansion() {
    // (p_k⊗e_ij)(p_l⊗e_mn) = δ_ki δ_jl δ_jm p_i⊗e_in.
    let n = 2;
    let d = n * n;
    let b = make_pair_groupoid_wha(n).unwrap();
    let mu = &b.product.build.mu_big;
    let mut entries = vec![];
    for k in 0..n {
        for x in 0..d {
            for l in 0..n {
                for y in 0..d {
                    let (i, j, m, nn) = (x / n, x % n, y / n, y % n);
                    if k == i && j == l && j == m {
                        let col = (k * d + x) * (n * d) + l * d + y;
                        entries.push((i * d + i * n + nn, col, s(1)));
                    }
                }
            }
        }
    }
    assert_eq!(
        mu,
        &Mor::from_entries(q(), mu.dom(), mu.cod(), entries).unwrap()
    );
}

#[test]
fn groupoid_psi_and_sigma_match_expansion() {
    // ψ(e_ij⊗p_k) = δ_jk p_i⊗e_ij; σ(e_ij⊗e_kl) = δ_jk p_i⊗e_il.
    let n = 2;
    let d = n * n;
    let b = make_pair_groupoid_wha(n).unwrap();
    let qd = b.quadruple();
    let psi = Mor::from_columns(q(), qd.psi.dom(), qd.psi.cod(), |c| {
        let (x, k) = (c / n, c % n);
        if x % n == k {
            vec![((x / n) * d + x, s(1))]
        } else {
            vec![]
        }
    })
    .unwrap();
    assert_eq!(qd.psi, psi);
    let sigma = Mor::from_columns(q(), qd.sigma.dom(), qd.sigma.cod(), |c| {
        let (x, y) = (c / d, c % d);
        let (i, j, k, l) = (x / n, x % n, y / n, y % n);
        if j == k {
            vec![(i * d + i * n + l, s(1))]
        } else {
            vec![]
        }
    })
    .unwrap();
    assert_eq!(qd.sigma, sigma);
    assert_eq!(qd.raw_sigma, qd.sigma);
}

#[test]
fn groupoid_image_is_the_matrix_algebra() {
    // The image basis is p_i⊗e_ij in pivot order, i.e. e_ij in row-major order.
    let n = 2;
    let b = make_pair_groupoid_wha(n).unwrap();
    let m = b.product.image_monoid().unwrap();
    let d = n * n;
    let mut entries = vec![];
    for x in 0..d {
        for y in 0..d {
            let (i, j, k, l) = (x / n, x % n, y / n, y % n);
            if j == k {
                entries.push((i * n + l, x * d + y, s(1)));
            }
        }
    }
    let oracle = Mor::from_entries(q(), m.mult.dom(), m.mult.cod(), entries).unwrap();
    assert_eq!(m.mult, oracle);
    assert!(check_monoid(&m).unwrap().all_passed());
}

#[test]
fn grouplike_comonoid_and_its_dual() {
    let one = fixtures::make_grouplike_comonoid(q(), 1).unwrap();
    assert_eq!(one.comult.entries(), vec![(0, 0, s(1))]);
    let c = fixtures::make_grouplike_comonoid(q(), 2).unwrap();
    assert!(check_comonoid(&c).unwrap().all_passed());
    let m = c.transpose_dual();
    assert!(check_monoid(&m).unwrap().all_passed());
    let flip = Mor::swap(q(), &m.carrier, &m.carrier);
    assert_eq!(m.mult.after(&flip).unwrap(), m.mult, "commutative");
}

#[test]
fn dual_idempotent_is_reversed_transpose() {
    // Independent transpose: Γ[r][c] = ∇[c'][r'] with the two factors of each
    // index swapped (A⊗H ↔ H⊗A).
    let n = 2;
    let b = make_pair_groupoid_wha(n).unwrap();
    let d = fixtures::dual_fixture(&b).unwrap();
    let nabla = b.product.nabla();
    let gamma = d.gamma();
    let (da, dh) = (n, n * n);
    let flip = |idx: usize| (idx % da) * dh + idx / da;
    for r in 0..gamma.rows() {
        for c in 0..gamma.cols() {
            assert_eq!(gamma.entry(r, c), nabla.entry(flip(c), flip(r)));
        }
    }
    assert_eq!(gamma, &dualize(nabla));
    assert_eq!(d.build.image().dim(), 4);
}

#[test]
fn nabla_formulas_agree() {
    for n in [2, 3] {
        let b = make_pair_groupoid_wha(n).unwrap();
        let w = &b.wha;
        let via_wha = fixtures::nabla_wha(&w.h, &b.quadruple().a, &w.action).unwrap();
        assert_eq!(via_wha, wcp::compute_nabla(b.quadruple()).unwrap());
    }
}

#[test]
fn invalid_parameters_are_rejected() {
    assert!(make_group_algebra_crossed(0, &s(1)).is_err());
    assert!(make_group_algebra_crossed(2, &s(0)).is_err());
    assert!(make_pair_groupoid_wha(1).is_err());
    assert!(fixtures::by_name("nope").is_err());
}
