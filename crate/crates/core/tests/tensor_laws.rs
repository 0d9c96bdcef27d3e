use proptest::prelude::*;
use wcpkit_core::wcc::dualize;
use wcpkit_core::{Field, Mor, Obj, Scalar};

fn obj(label: &str, dim: usize) -> Obj {
    Obj::new(label, dim).unwrap()
}

fn scalar(v: i64) -> Scalar {
    Scalar::from_integer(v.into())
}

/// A map `dom → cod` with small integer entries.
fn arb_mor(field: Field, dom: Obj, cod: Obj) -> impl Strategy<Value = Mor> {
    let n = dom.dim() * cod.dim();
    prop::collection::vec(-3i64..=3, n).prop_map(move |vals| {
        let rows: Vec<Vec<Scalar>> = vals
            .chunks(dom.dim())
            .map(|r| r.iter().map(|&v| scalar(v)).collect())
            .collect();
        Mor::from_rows(field, &dom, &cod, &rows).unwrap()
    })
}

fn q() -> Field {
    Field::Rationals
}

/// Entry of `f⊗g` by the left-factor-major formula, computed without the library.
fn kron_entry(f: &Mor, g: &Mor, r: usize, c: usize) -> Scalar {
    let (gr, gc) = (g.rows(), g.cols());
    f.entry(r / gr, c / gc) * g.entry(r % gr, c % gc)
}

proptest! {
    #[test]
    fn tensor_matches_kronecker_formula(
        f in arb_mor(q(), obj("X", 2), obj("Y", 3)),
        g in arb_mor(q(), obj("U", 2), obj("W", 2)),
    ) {
        let fg = f.tensor(&g).unwrap();
        for r in 0..fg.rows() {
            for c in 0..fg.cols() {
                prop_assert_eq!(fg.entry(r, c), kron_entry(&f, &g, r, c));
            }
        }
    }

    #[test]
    fn interchange_law(
        f in arb_mor(q(), obj("X", 2), obj("Y", 2)),
        f2 in arb_mor(q(), obj("Y", 2), obj("Z", 3)),
        g in arb_mor(q(), obj("U", 1), obj("V", 2)),
        g2 in arb_mor(q(), obj("V", 2), obj("W", 2)),
    ) {
        let lhs = f2.tensor(&g2).unwrap().after(&f.tensor(&g).unwrap()).unwrap();
        let rhs = f2.after(&f).unwrap().tensor(&g2.after(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn swap_is_natural(
        f in arb_mor(q(), obj("X", 2), obj("Y", 3)),
        g in arb_mor(q(), obj("U", 2), obj("V", 2)),
    ) {
        let lhs = Mor::swap(q(), f.cod(), g.cod()).after(&f.tensor(&g).unwrap()).unwrap();
        let rhs = g.tensor(&f).unwrap().after(&Mor::swap(q(), f.dom(), g.dom())).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transpose_is_an_antihomomorphic_involution(
        f in arb_mor(q(), obj("X", 2), obj("Y", 3)),
        g in arb_mor(q(), obj("Y", 3), obj("Z", 2)),
    ) {
        prop_assert_eq!(f.transpose_dual().transpose_dual(), f.clone());
        prop_assert_eq!(
            g.after(&f).unwrap().transpose_dual(),
            f.transpose_dual().after(&g.transpose_dual()).unwrap()
        );
    }

    #[test]
    fn dual_reverses_tensor_order(
        f in arb_mor(q(), obj("X", 2), obj("Y", 2)),
        g in arb_mor(q(), obj("U", 3), obj("V", 1)),
    ) {
        let d = dualize(&f.tensor(&g).unwrap());
        prop_assert_eq!(d, dualize(&g).tensor(&dualize(&f)).unwrap());
        prop_assert_eq!(dualize(&dualize(&f)), f);
    }

    #[test]
    fn fp_arithmetic_stays_canonical(
        f in arb_mor(Field::prime(5).unwrap(), obj("X", 2), obj("Y", 2)),
        g in arb_mor(Field::prime(5).unwrap(), obj("Y", 2), obj("Z", 2)),
    ) {
        let h = g.after(&f).unwrap();
        for (_, _, v) in h.entries() {
            prop_assert!(v.is_integer() && v >= scalar(1) && v < scalar(5));
        }
    }

    /// `e = U∘D∘U⁻¹` with `U = I + N`, `N` strictly upper triangular and
    /// `D` a 0/1 diagonal: splitting gives `inj∘proj = e`, `proj∘inj = id`.
    #[test]
    fn split_idempotent_factorizes(
        n_vals in prop::collection::vec(-2i64..=2, 6),
        diag in prop::collection::vec(any::<bool>(), 4),
    ) {
        prop_assume!(diag.iter().any(|&b| b));
        let x = obj("X", 4);
        let mut u = vec![vec![scalar(0); 4]; 4];
        let mut k = 0;
        for (i, row) in u.iter_mut().enumerate() {
            row[i] = scalar(1);
            for cell in row.iter_mut().skip(i + 1) {
                *cell = scalar(n_vals[k]);
                k += 1;
            }
        }
        let u = Mor::from_rows(q(), &x, &x, &u).unwrap();
        let id = Mor::identity(q(), &x);
        let nil = u.sub(&id).unwrap();
        // (I + N)⁻¹ = I − N + N² − N³ for a 4×4 strictly upper N.
        let n2 = nil.after(&nil).unwrap();
        let n3 = n2.after(&nil).unwrap();
        let uinv = id.sub(&nil).unwrap().add(&n2).unwrap().sub(&n3).unwrap();
        prop_assert_eq!(u.after(&uinv).unwrap(), id.clone());
        let d = Mor::from_columns(q(), &x, &x, |c| {
            if diag[c] { vec![(c, scalar(1))] } else { vec![] }
        }).unwrap();
        let e = u.after(&d).unwrap().after(&uinv).unwrap();
        let s = e.split_idempotent("im").unwrap();
        prop_assert_eq!(s.image.dim(), diag.iter().filter(|&&b| b).count());
        prop_assert_eq!(s.inj.after(&s.proj).unwrap(), e);
        prop_assert_eq!(s.proj.after(&s.inj).unwrap(), Mor::identity(q(), &s.image));
    }
}

#[test]
fn non_idempotent_is_rejected() {
    let x = obj("X", 2);
    let f = Mor::from_int_rows(q(), &x, &x, &[&[1, 1], &[0, 1]]).unwrap();
    assert!(f.split_idempotent("im").is_err());
}

#[test]
fn composition_requires_matching_factors() {
    let x = obj("X", 2);
    let y = obj("Y", 2);
    let f = Mor::identity(q(), &x);
    let g = Mor::identity(q(), &y);
    let err = g.after(&f).unwrap_err();
    assert!(err.is_shape());
}
