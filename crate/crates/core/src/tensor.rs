//! Tensor-structured objects and exact matrices between them.
//!
//! The basis of `X⊗Y` is indexed left-factor-major: basis vector `i` of `X`
//! tensored with basis vector `j` of `Y` has index `i·dim(Y)+j`. Every
//! Kronecker product, swap and block permutation below derives from that
//! convention.
//!
//! Matrices are stored column-sparse: column `c` lists its nonzero rows in
//! increasing order. Fixture structure maps are basis maps, so most columns
//! hold one or two entries even when the ambient dimension is large.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use crate::error::{Result, WcpError};
use crate::field::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub label: String,
    pub dim: usize,
}

/// An object: an ordered list of labelled factors. The empty list is `K`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Obj {
    factors: Vec<Factor>,
}

impl Obj {
    /// The unit object `K`.
    pub fn unit() -> Self {
        Obj::default()
    }

    pub fn new(label: impl Into<String>, dim: usize) -> Result<Self> {
        let label = label.into();
        if dim == 0 {
            return Err(WcpError::InvalidObject(format!(
                "factor `{label}` must have positive dimension"
            )));
        }
        if label.is_empty() {
            return Err(WcpError::InvalidObject("empty factor label".into()));
        }
        Ok(Obj {
            factors: vec![Factor { label, dim }],
        })
    }

    pub fn from_factors(factors: Vec<Factor>) -> Result<Self> {
        let mut out = Obj::unit();
        for f in factors {
            out = out.tensor(&Obj::new(f.label, f.dim)?);
        }
        Ok(out)
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim).product()
    }

    pub fn tensor(&self, other: &Obj) -> Obj {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Obj { factors }
    }

    pub fn tensor_all<'a>(objs: impl IntoIterator<Item = &'a Obj>) -> Obj {
        objs.into_iter().fold(Obj::unit(), |acc, o| acc.tensor(o))
    }

    /// `Y` such that `self = prefix⊗Y`, if `prefix` is a leading part of `self`.
    pub fn strip_prefix(&self, prefix: &Obj) -> Option<Obj> {
        self.factors
            .strip_prefix(prefix.factors.as_slice())
            .map(|rest| Obj {
                factors: rest.to_vec(),
            })
    }

    /// `X` such that `self = X⊗suffix`.
    pub fn strip_suffix(&self, suffix: &Obj) -> Option<Obj> {
        self.factors
            .strip_suffix(suffix.factors.as_slice())
            .map(|rest| Obj {
                factors: rest.to_vec(),
            })
    }

    /// The same factors in reverse order.
    pub fn reversed(&self) -> Obj {
        let mut factors = self.factors.clone();
        factors.reverse();
        Obj { factors }
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "K");
        }
        for (k, factor) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "⊗")?;
            }
            write!(f, "{}({})", factor.label, factor.dim)?;
        }
        Ok(())
    }
}

/// An exact linear map `dom → cod`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mor {
    field: Field,
    dom: Obj,
    cod: Obj,
    cols: Vec<Vec<(usize, Scalar)>>,
}

fn collect_column(field: Field, acc: BTreeMap<usize, Scalar>) -> Vec<(usize, Scalar)> {
    acc.into_iter()
        .filter_map(|(r, v)| {
            let v = field.norm(v);
            (!v.is_zero()).then_some((r, v))
        })
        .collect()
}

impl Mor {
    pub fn zero(field: Field, dom: &Obj, cod: &Obj) -> Mor {
        Mor {
            field,
            dom: dom.clone(),
            cod: cod.clone(),
            cols: vec![Vec::new(); dom.dim()],
        }
    }

    pub fn identity(field: Field, x: &Obj) -> Mor {
        Mor {
            field,
            dom: x.clone(),
            cod: x.clone(),
            cols: (0..x.dim())
                .map(|c| vec![(c, Scalar::from_integer(1.into()))])
                .collect(),
        }
    }

    /// Builds a map column by column: `image(c)` lists `(row, value)` pairs of
    /// the image of basis vector `c`. Repeated rows are summed.
    pub fn from_columns<F>(field: Field, dom: &Obj, cod: &Obj, mut image: F) -> Result<Mor>
    where
        F: FnMut(usize) -> Vec<(usize, Scalar)>,
    {
        let (rows, ncols) = (cod.dim(), dom.dim());
        let mut cols = Vec::with_capacity(ncols);
        for c in 0..ncols {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (r, v) in image(c) {
                if r >= rows {
                    return Err(WcpError::OutOfBounds {
                        row: r,
                        col: c,
                        rows,
                        cols: ncols,
                    });
                }
                let v = field.embed(&v)?;
                *acc.entry(r).or_insert_with(Scalar::zero) += v;
            }
            cols.push(collect_column(field, acc));
        }
        Ok(Mor {
            field,
            dom: dom.clone(),
            cod: cod.clone(),
            cols,
        })
    }

    /// Builds a map from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_entries(
        field: Field,
        dom: &Obj,
        cod: &Obj,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Mor> {
        let (rows, ncols) = (cod.dim(), dom.dim());
        let mut by_col: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); ncols];
        for (r, c, v) in entries {
            if r >= rows || c >= ncols {
                return Err(WcpError::OutOfBounds {
                    row: r,
                    col: c,
                    rows,
                    cols: ncols,
                });
            }
            by_col[c].push((r, v));
        }
        let mut by_col = by_col.into_iter();
        Mor::from_columns(field, dom, cod, |_| by_col.next().unwrap_or_default())
    }

    /// Builds a map from a dense row-major matrix.
    pub fn from_rows(field: Field, dom: &Obj, cod: &Obj, rows: &[Vec<Scalar>]) -> Result<Mor> {
        if rows.len() != cod.dim() || rows.iter().any(|r| r.len() != dom.dim()) {
            let shape = format!(
                "{}x{}",
                rows.len(),
                rows.first().map(|r| r.len()).unwrap_or(0)
            );
            return Err(WcpError::shape(
                "from_rows",
                shape,
                format!("{}x{}", cod.dim(), dom.dim()),
            ));
        }
        let entries = rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, v)| (r, c, v.clone())));
        Mor::from_entries(field, dom, cod, entries)
    }

    /// Integer convenience wrapper around [`Mor::from_rows`].
    pub fn from_int_rows(field: Field, dom: &Obj, cod: &Obj, rows: &[&[i64]]) -> Result<Mor> {
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| Scalar::from_integer(v.into())).collect())
            .collect();
        Mor::from_rows(field, dom, cod, &rows)
    }

    /// Symmetry `X⊗Y → Y⊗X`.
    pub fn swap(field: Field, x: &Obj, y: &Obj) -> Mor {
        Mor::block_permutation(field, &[x.clone(), y.clone()], &[1, 0])
    }

    /// Reorders tensor blocks: the domain is `blocks[0]⊗…⊗blocks[k-1]` and the
    /// codomain is `blocks[order[0]]⊗…⊗blocks[order[k-1]]`.
    ///
    /// Panics if `order` is not a permutation of `0..blocks.len()`.
    pub fn block_permutation(field: Field, blocks: &[Obj], order: &[usize]) -> Mor {
        let mut seen = vec![false; blocks.len()];
        assert_eq!(order.len(), blocks.len(), "order must be a permutation");
        for &k in order {
            assert!(k < blocks.len() && !seen[k], "order must be a permutation");
            seen[k] = true;
        }
        let dom = Obj::tensor_all(blocks);
        let cod = Obj::tensor_all(order.iter().map(|&k| &blocks[k]));
        let dims: Vec<usize> = blocks.iter().map(Obj::dim).collect();
        let mut digits = vec![0usize; blocks.len()];
        let one = Scalar::from_integer(1.into());
        let cols = (0..dom.dim())
            .map(|c| {
                let mut rest = c;
                for k in (0..dims.len()).rev() {
                    digits[k] = rest % dims[k];
                    rest /= dims[k];
                }
                let row = order
                    .iter()
                    .fold(0usize, |acc, &k| acc * dims[k] + digits[k]);
                vec![(row, one.clone())]
            })
            .collect();
        Mor {
            field,
            dom,
            cod,
            cols,
        }
    }

    /// Reverses the factor order of `x`: `x → x.reversed()`.
    pub fn reversal(field: Field, x: &Obj) -> Mor {
        let blocks: Vec<Obj> = x
            .factors()
            .iter()
            .map(|f| Obj {
                factors: vec![f.clone()],
            })
            .collect();
        let order: Vec<usize> = (0..blocks.len()).rev().collect();
        Mor::block_permutation(field, &blocks, &order)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dom(&self) -> &Obj {
        &self.dom
    }

    pub fn cod(&self) -> &Obj {
        &self.cod
    }

    pub fn rows(&self) -> usize {
        self.cod.dim()
    }

    pub fn cols(&self) -> usize {
        self.dom.dim()
    }

    /// Nonzero entries of column `c`, sorted by row.
    pub fn column(&self, c: usize) -> &[(usize, Scalar)] {
        &self.cols[c]
    }

    pub fn entry(&self, row: usize, col: usize) -> Scalar {
        self.cols[col]
            .binary_search_by_key(&row, |(r, _)| *r)
            .map(|k| self.cols[col][k].1.clone())
            .unwrap_or_else(|_| Scalar::zero())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// Dense row-major copy of the matrix.
    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![Scalar::zero(); self.cols()]; self.rows()];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                rows[*r][c] = v.clone();
            }
        }
        rows
    }

    /// Nonzero `(row, col, value)` triples in row-major order.
    pub fn entries(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out: Vec<(usize, usize, Scalar)> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v.clone())))
            .collect();
        out.sort_by_key(|(r, c, _)| (*r, *c));
        out
    }

    fn check_field(&self, other: &Mor) -> Result<()> {
        if self.field != other.field {
            return Err(WcpError::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &Mor) -> Result<Mor> {
        self.check_field(f)?;
        if self.dom != f.cod {
            return Err(WcpError::shape("compose", &self.dom, &f.cod));
        }
        let field = self.field;
        let cols = f
            .cols
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (k, a) in col {
                    for (r, b) in &self.cols[*k] {
                        *acc.entry(*r).or_insert_with(Scalar::zero) += a * b;
                    }
                }
                collect_column(field, acc)
            })
            .collect();
        Ok(Mor {
            field,
            dom: f.dom.clone(),
            cod: self.cod.clone(),
            cols,
        })
    }

    /// `self ⊗ g` (Kronecker product, left factor major).
    pub fn tensor(&self, g: &Mor) -> Result<Mor> {
        self.check_field(g)?;
        let field = self.field;
        let grows = g.rows();
        let mut cols = Vec::with_capacity(self.cols() * g.cols());
        for fcol in &self.cols {
            for gcol in &g.cols {
                let mut col = Vec::with_capacity(fcol.len() * gcol.len());
                for (r1, a) in fcol {
                    for (r2, b) in gcol {
                        col.push((r1 * grows + r2, field.mul(a, b)));
                    }
                }
                cols.push(col);
            }
        }
        Ok(Mor {
            field,
            dom: self.dom.tensor(&g.dom),
            cod: self.cod.tensor(&g.cod),
            cols,
        })
    }

    fn zip_with(&self, other: &Mor, op: &'static str, sign: i64) -> Result<Mor> {
        self.check_field(other)?;
        if self.dom != other.dom || self.cod != other.cod {
            return Err(WcpError::shape(
                op,
                format!("{} -> {}", self.dom, self.cod),
                format!("{} -> {}", other.dom, other.cod),
            ));
        }
        let field = self.field;
        let s = Scalar::from_integer(sign.into());
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, Scalar> = a.iter().cloned().collect();
                for (r, v) in b {
                    *acc.entry(*r).or_insert_with(Scalar::zero) += v * &s;
                }
                collect_column(field, acc)
            })
            .collect();
        Ok(Mor {
            field,
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            cols,
        })
    }

    pub fn add(&self, other: &Mor) -> Result<Mor> {
        self.zip_with(other, "add", 1)
    }

    pub fn sub(&self, other: &Mor) -> Result<Mor> {
        self.zip_with(other, "sub", -1)
    }

    pub fn scale(&self, k: &Scalar) -> Result<Mor> {
        let k = self.field.embed(k)?;
        let field = self.field;
        let cols = self
            .cols
            .iter()
            .map(|col| {
                col.iter()
                    .filter_map(|(r, v)| {
                        let v = field.mul(v, &k);
                        (!v.is_zero()).then_some((*r, v))
                    })
                    .collect()
            })
            .collect();
        Ok(Mor {
            field,
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            cols,
        })
    }

    /// Transpose: `cod → dom` with entries transposed, factor lists kept.
    pub fn transpose_dual(&self) -> Mor {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows()];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                cols[*r].push((c, v.clone()));
            }
        }
        Mor {
            field: self.field,
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            cols,
        }
    }

    /// The same matrix read between other objects of equal total dimension.
    pub fn reinterpret(&self, dom: &Obj, cod: &Obj) -> Result<Mor> {
        if dom.dim() != self.dom.dim() || cod.dim() != self.cod.dim() {
            return Err(WcpError::shape(
                "reinterpret",
                format!("{} -> {}", self.dom, self.cod),
                format!("{dom} -> {cod}"),
            ));
        }
        Ok(Mor {
            field: self.field,
            dom: dom.clone(),
            cod: cod.clone(),
            cols: self.cols.clone(),
        })
    }

    /// Splits an idempotent through its image, labelled `label`.
    pub fn split_idempotent(&self, label: &str) -> Result<SplitResult> {
        if self.dom != self.cod {
            return Err(WcpError::shape("split_idempotent", &self.dom, &self.cod));
        }
        let residual = self.after(self)?.sub(self)?;
        if !residual.is_zero() {
            return Err(WcpError::NotIdempotent {
                residual: Box::new(residual),
            });
        }
        let (rref, pivots) = rref(self.field, &self.to_rows());
        if pivots.is_empty() {
            return Err(WcpError::ZeroImage);
        }
        let image = Obj::new(label, pivots.len())?;
        let inj = Mor {
            field: self.field,
            dom: image.clone(),
            cod: self.cod.clone(),
            cols: pivots.iter().map(|&p| self.cols[p].clone()).collect(),
        };
        let proj = Mor::from_rows(self.field, &self.dom, &image, &rref[..pivots.len()])?;
        assert_eq!(&inj.after(&proj)?, self, "rank factorization failed");
        assert_eq!(
            proj.after(&inj)?,
            Mor::identity(self.field, &image),
            "split of an idempotent must be a retraction"
        );
        Ok(SplitResult { image, inj, proj })
    }

    /// Rank computed by exact row reduction.
    pub fn rank(&self) -> usize {
        rref(self.field, &self.to_rows()).1.len()
    }
}

/// `fs[0] ∘ fs[1] ∘ … ∘ fs[k-1]`.
pub fn compose_all(fs: &[&Mor]) -> Result<Mor> {
    let (last, rest) = fs.split_last().expect("compose_all needs at least one map");
    rest.iter()
        .rev()
        .try_fold((*last).clone(), |acc, g| g.after(&acc))
}

/// `fs[0] ⊗ fs[1] ⊗ … ⊗ fs[k-1]`.
pub fn tensor_all(fs: &[&Mor]) -> Result<Mor> {
    let (first, rest) = fs.split_first().expect("tensor_all needs at least one map");
    rest.iter()
        .try_fold((*first).clone(), |acc, g| acc.tensor(g))
}

/// Reduced row echelon form and pivot columns.
pub fn rref(field: Field, rows: &[Vec<Scalar>]) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map(Vec::len).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = field.inv(&m[r][c]).expect("pivot is nonzero");
        for v in m[r].iter_mut() {
            *v = field.mul(v, &inv);
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        let d = field.mul(&factor, y);
                        *x = field.sub(x, &d);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Rank factorization `e = inj∘proj`, `proj∘inj = id` of an idempotent `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitResult {
    pub image: Obj,
    pub inj: Mor,
    pub proj: Mor,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::int;

    fn q() -> Field {
        Field::Rationals
    }

    fn obj(l: &str, d: usize) -> Obj {
        Obj::new(l, d).unwrap()
    }

    #[test]
    fn compose_two_by_two() {
        let x = obj("X", 2);
        let g = Mor::from_int_rows(q(), &x, &x, &[&[1, 2], &[3, 4]]).unwrap();
        let f = Mor::from_int_rows(q(), &x, &x, &[&[0, 1], &[1, 0]]).unwrap();
        let expect = Mor::from_int_rows(q(), &x, &x, &[&[2, 1], &[4, 3]]).unwrap();
        assert_eq!(g.after(&f).unwrap(), expect);
        assert_eq!(Mor::identity(q(), &x).after(&f).unwrap(), f);
    }

    #[test]
    fn compose_rejects_mismatched_factor_lists() {
        let f = Mor::identity(q(), &obj("X", 2));
        let g = Mor::identity(q(), &obj("Y", 2));
        let err = g.after(&f).unwrap_err();
        assert!(err.is_shape());
        assert!(err.to_string().contains("X(2)") && err.to_string().contains("Y(2)"));
    }

    #[test]
    fn tensor_with_unit_is_strict() {
        let x = obj("X", 2);
        let f = Mor::from_int_rows(q(), &x, &x, &[&[1, 2], &[3, 4]]).unwrap();
        let k = Mor::identity(q(), &Obj::unit());
        assert_eq!(f.tensor(&k).unwrap(), f);
        assert_eq!(k.tensor(&f).unwrap(), f);
    }

    #[test]
    fn kronecker_index_convention() {
        let x = obj("X", 2);
        let y = obj("Y", 3);
        let f = Mor::from_int_rows(q(), &x, &x, &[&[1, 2], &[3, 4]]).unwrap();
        let g = Mor::from_int_rows(q(), &y, &y, &[&[1, 0, 5], &[0, 1, 0], &[7, 0, 1]]).unwrap();
        let fg = f.tensor(&g).unwrap();
        for (i, k) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            for (j, l) in [(0, 2), (2, 0), (1, 1)] {
                let expect = f.entry(i, k) * g.entry(j, l);
                assert_eq!(fg.entry(i * 3 + j, k * 3 + l), expect);
            }
        }
    }

    #[test]
    fn swap_is_an_involution_and_trivial_on_unit() {
        let x = obj("X", 2);
        let y = obj("Y", 3);
        let s = Mor::swap(q(), &x, &y);
        assert_eq!(s.entry(2 * 2 + 1, 3 + 2), Scalar::from_integer(1.into()));
        let back = Mor::swap(q(), &y, &x);
        assert_eq!(back.after(&s).unwrap(), Mor::identity(q(), &x.tensor(&y)));
        assert_eq!(Mor::swap(q(), &Obj::unit(), &x), Mor::identity(q(), &x));
    }

    #[test]
    fn split_diag() {
        let x = obj("X", 2);
        let e = Mor::from_int_rows(q(), &x, &x, &[&[1, 0], &[0, 0]]).unwrap();
        let s = e.split_idempotent("im").unwrap();
        assert_eq!(s.image.dim(), 1);
        assert_eq!(s.inj.to_rows(), vec![vec![int(1)], vec![int(0)]]);
        assert_eq!(s.proj.to_rows(), vec![vec![int(1), int(0)]]);
    }

    #[test]
    fn split_rejects_non_idempotent_and_zero() {
        let x = obj("X", 2);
        let two = Mor::from_int_rows(q(), &x, &x, &[&[2, 0], &[0, 0]]).unwrap();
        assert!(matches!(
            two.split_idempotent("im"),
            Err(WcpError::NotIdempotent { .. })
        ));
        let zero = Mor::zero(q(), &x, &x);
        assert!(matches!(
            zero.split_idempotent("im"),
            Err(WcpError::ZeroImage)
        ));
    }

    #[test]
    fn split_oblique_projection_over_fp() {
        let f = Field::prime(5).unwrap();
        let x = obj("X", 2);
        // e = [[1,1],[0,0]] is idempotent with image spanned by (1,0).
        let e = Mor::from_int_rows(f, &x, &x, &[&[1, 1], &[0, 0]]).unwrap();
        let s = e.split_idempotent("im").unwrap();
        assert_eq!(s.inj.after(&s.proj).unwrap(), e);
        assert_eq!(s.proj.after(&s.inj).unwrap(), Mor::identity(f, &s.image));
    }

    #[test]
    fn transpose_dual_of_identity() {
        let x = obj("X", 3);
        assert_eq!(
            Mor::identity(q(), &x).transpose_dual(),
            Mor::identity(q(), &x)
        );
    }

    #[test]
    fn block_permutation_cycles_three_blocks() {
        let a = obj("A", 2);
        let b = obj("B", 3);
        let c = obj("C", 2);
        // (a,b,c) ↦ (c,a,b)
        let p = Mor::block_permutation(q(), &[a.clone(), b.clone(), c.clone()], &[2, 0, 1]);
        assert_eq!(p.cod(), &Obj::tensor_all([&c, &a, &b]));
        let (i, j, k) = (1, 2, 1);
        let col = (i * 3 + j) * 2 + k;
        let row = (k * 2 + i) * 3 + j;
        assert_eq!(p.column(col), &[(row, Scalar::from_integer(1.into()))]);
    }

    #[test]
    fn reinterpret_requires_equal_dims() {
        let x = obj("X", 2);
        let f = Mor::identity(q(), &x);
        assert!(f.reinterpret(&obj("Y", 2), &obj("Y", 2)).is_ok());
        assert!(f.reinterpret(&obj("Y", 3), &obj("Y", 3)).is_err());
    }
}
