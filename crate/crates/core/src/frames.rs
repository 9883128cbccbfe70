//! Line-set model, exact Gram analysis, and the executable bound checks.
//!
//! A [`LineSet`] is an `m × n` matrix of [`Surd`]s whose rows are unit
//! vectors spanning lines through the origin. [`verify_equiangular`] decides,
//! with zero tolerance, whether all pairwise absolute inner products agree,
//! and fills in the frame-theoretic context: tightness of the frame operator
//! `S = Σ fᵢfᵢᵀ`, equality in the Welch bound `c² = (M−N)/(N(M−1))`, the
//! Gerzon count bound `M ≤ N(N+1)/2`, and the odd-integer parity condition
//! on `1/c` when `M > 2N`.
//!
//! Sets that span only a subspace (the simplex family lives in a hyperplane)
//! are measured against the dimension they actually span: the report carries
//! both the ambient dimension and the exact rank of the frame operator, and
//! tightness/Welch equality are evaluated at the rank. Equality of the two —
//! both directions — is asserted on every verification.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::exact::{Rational, Surd};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FramesError {
    #[error("vector lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("line set must have at least one row and one column")]
    Empty,
    #[error("row {0} has {1} entries, expected {2}")]
    RaggedRow(usize, usize, usize),
    #[error("operation requires a square matrix, got {0}×{1}")]
    NotSquare(usize, usize),
    #[error("Welch bound requires m ≥ n ≥ 1 and m ≥ 2, got m={0}, n={1}")]
    WelchDomain(usize, usize),
    #[error("operation requires a verified equiangular set, found status {0:?}")]
    NotEquiangular(Status),
}

/// `m` unit vectors in `ℝⁿ`, one per line, stored as matrix rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineSet {
    n: usize,
    rows: Vec<Vec<Surd>>,
}

impl LineSet {
    pub fn from_rows(rows: Vec<Vec<Surd>>) -> Result<Self, FramesError> {
        let n = rows.first().map(Vec::len).unwrap_or(0);
        if rows.is_empty() || n == 0 {
            return Err(FramesError::Empty);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(FramesError::RaggedRow(i + 1, row.len(), n));
            }
        }
        Ok(LineSet { n, rows })
    }

    /// Number of vectors.
    pub fn m(&self) -> usize {
        self.rows.len()
    }

    /// Ambient dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[Surd] {
        &self.rows[i]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Surd]> {
        self.rows.iter().map(Vec::as_slice)
    }

    pub fn entry(&self, i: usize, j: usize) -> &Surd {
        &self.rows[i][j]
    }
}

/// Outcome of the equiangularity check, in check order: unit norms first,
/// then coincident lines, then the angle count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Equiangular,
    NotUnitNorm,
    ParallelLines,
    MultipleAngles,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NeumannStatus {
    NotApplicable,
    Pass,
    Violation,
}

/// One `|⟨fᵢ,fⱼ⟩|` value with the number of pairs attaining it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub value: Surd,
    pub count: usize,
}

/// A row pair (1-based, matching printed row numbers) with its exact inner
/// product; for norm defects `i == j` and the value is `⟨fᵢ,fᵢ⟩`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OffendingPair {
    pub i: usize,
    pub j: usize,
    pub value: Surd,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub status: Status,
    /// The common `|⟨fᵢ,fⱼ⟩|` when status is `equiangular` and `m ≥ 2`.
    pub common_angle: Option<Surd>,
    /// Distinct `|⟨fᵢ,fⱼ⟩|` values, ascending, with pair counts.
    pub angle_spectrum: Vec<SpectrumEntry>,
    pub offending_pairs: Vec<OffendingPair>,
    /// Frame operator equals `(m/rank)·I` on the spanned subspace.
    pub is_tight: bool,
    /// `m/rank` when tight.
    #[serde(with = "opt_rational")]
    pub frame_bound: Option<Rational>,
    /// `c² = (m − rank)/(rank·(m − 1))` exactly (requires `m ≥ 2`).
    pub welch_equality: bool,
    /// `rank(rank+1)/2 − m`; non-negative for every genuine equiangular set.
    pub gerzon_slack: i64,
    pub neumann_status: NeumannStatus,
    pub m: usize,
    pub n: usize,
    /// Exact rank of the frame operator: the dimension actually spanned.
    pub rank: usize,
}

mod opt_rational {
    use super::Rational;
    use num_traits::ToPrimitive;
    use serde::ser::SerializeStruct;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            None => s.serialize_none(),
            Some(q) => {
                let mut st = s.serialize_struct("Rational", 2)?;
                st.serialize_field(
                    "num",
                    &q.numer().to_i64().ok_or_else(|| {
                        serde::ser::Error::custom("frame bound numerator out of range")
                    })?,
                )?;
                st.serialize_field(
                    "den",
                    &q.denom().to_i64().ok_or_else(|| {
                        serde::ser::Error::custom("frame bound denominator out of range")
                    })?,
                )?;
                st.end()
            }
        }
    }
}

/// Exact Euclidean dot product.
pub fn inner_product(u: &[Surd], v: &[Surd]) -> Result<Surd, FramesError> {
    if u.len() != v.len() {
        return Err(FramesError::LengthMismatch(u.len(), v.len()));
    }
    let mut acc = Surd::zero();
    for (a, b) in u.iter().zip(v) {
        if !a.is_zero() && !b.is_zero() {
            acc = acc + a * b;
        }
    }
    Ok(acc)
}

fn pair_indices(m: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(m * (m.max(1) - 1) / 2);
    for i in 0..m {
        for j in (i + 1)..m {
            out.push((i, j));
        }
    }
    out
}

fn pairwise_products(ls: &LineSet, parallel: bool) -> Vec<(usize, usize, Surd)> {
    let pairs = pair_indices(ls.m());
    let compute = |&(i, j): &(usize, usize)| {
        let ip = inner_product(ls.row(i), ls.row(j)).expect("rows share a length");
        (i, j, ip)
    };
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return pairs.par_iter().map(compute).collect();
    }
    let _ = parallel;
    pairs.iter().map(compute).collect()
}

/// `S = Σ fᵢfᵢᵀ = AᵀA`, exactly.
pub fn frame_operator(ls: &LineSet) -> Vec<Vec<Surd>> {
    let n = ls.n();
    let row = |j: usize| -> Vec<Surd> {
        (0..n)
            .map(|k| {
                let mut acc = Surd::zero();
                for r in ls.rows() {
                    if !r[j].is_zero() && !r[k].is_zero() {
                        acc = acc + &r[j] * &r[k];
                    }
                }
                acc
            })
            .collect()
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(row).collect();
    }
    #[cfg(not(feature = "parallel"))]
    (0..n).map(row).collect()
}

/// Exact Gram matrix `AAᵀ`.
pub fn gram_matrix(ls: &LineSet) -> Vec<Vec<Surd>> {
    (0..ls.m())
        .map(|i| {
            (0..ls.m())
                .map(|j| inner_product(ls.row(i), ls.row(j)).expect("rows share a length"))
                .collect()
        })
        .collect()
}

/// Exact rank by Gaussian elimination over the surd field with
/// first-nonzero pivoting. Each pivot row is normalized by the pivot's
/// exact inverse before eliminating below, which keeps coefficient growth
/// linear; every step is a rank-preserving exact row operation, so there is
/// no tolerance anywhere.
pub fn rank(matrix: &[Vec<Surd>]) -> usize {
    let mut m: Vec<Vec<Surd>> = matrix.to_vec();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let inv = m[rank][col].inverse().expect("pivot is nonzero");
        for c in col..cols {
            if !m[rank][c].is_zero() {
                m[rank][c] = &m[rank][c] * &inv;
            }
        }
        for r in (rank + 1)..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in (col + 1)..cols {
                if !m[rank][c].is_zero() {
                    m[r][c] = &m[r][c] - &(&factor * &m[rank][c]);
                }
            }
            m[r][col] = Surd::zero();
        }
        rank += 1;
    }
    rank
}

fn mat_mul(a: &[Vec<Surd>], b: &[Vec<Surd>]) -> Vec<Vec<Surd>> {
    let n = a.len();
    let p = if n == 0 { 0 } else { b[0].len() };
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| {
                    let mut acc = Surd::zero();
                    for (k, aik) in a[i].iter().enumerate() {
                        if !aik.is_zero() && !b[k][j].is_zero() {
                            acc = acc + aik * &b[k][j];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Tightness over the spanned subspace: with `k = rank(S)`, the set is tight
/// iff `S² = (m/k)·S` exactly. Returns the frame bound `m/k` when tight.
pub fn is_tight(ls: &LineSet) -> (bool, Option<Rational>) {
    let s = frame_operator(ls);
    is_tight_with(ls.m(), &s, rank(&s))
}

fn is_tight_with(m: usize, s: &[Vec<Surd>], rank: usize) -> (bool, Option<Rational>) {
    if rank == 0 {
        return (false, None);
    }
    let bound = Rational::new(BigInt::from(m), BigInt::from(rank));
    let scaled: Vec<Vec<Surd>> = s
        .iter()
        .map(|row| row.iter().map(|e| e.scale(&bound)).collect())
        .collect();
    if mat_mul(s, s) == scaled {
        (true, Some(bound))
    } else {
        (false, None)
    }
}

/// `(m−n)/(n(m−1))`, the square of the Welch coherence bound.
pub fn welch_bound_sq(m: usize, n: usize) -> Result<Rational, FramesError> {
    if n < 1 || m < n || m < 2 {
        return Err(FramesError::WelchDomain(m, n));
    }
    Ok(Rational::new(
        BigInt::from(m - n),
        BigInt::from(n) * BigInt::from(m - 1),
    ))
}

/// `n(n+1)/2`, the maximal number of equiangular lines in `ℝⁿ`.
pub fn gerzon_bound(n: u64) -> u64 {
    n * (n + 1) / 2
}

/// Parity condition on the angle: with more than `2n` lines, `1/c` must be
/// an odd positive integer. A `violation` on a verified set signals a bug,
/// not a property of the input.
pub fn neumann_lint(m: usize, n: usize, c: &Surd) -> NeumannStatus {
    if m <= 2 * n {
        return NeumannStatus::NotApplicable;
    }
    let Some(q) = c.as_rational() else {
        return NeumannStatus::Violation;
    };
    if q.numer().is_one() && (q.denom() % BigInt::from(2)) == BigInt::one() {
        NeumannStatus::Pass
    } else {
        NeumannStatus::Violation
    }
}

/// Distinct absolute inner products with pair counts, ascending.
pub fn angle_spectrum(ls: &LineSet) -> Vec<SpectrumEntry> {
    spectrum_of(&pairwise_products(ls, cfg!(feature = "parallel")))
}

fn spectrum_of(products: &[(usize, usize, Surd)]) -> Vec<SpectrumEntry> {
    let mut counts: BTreeMap<Surd, usize> = BTreeMap::new();
    for (_, _, ip) in products {
        *counts.entry(ip.abs()).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(value, count)| SpectrumEntry { value, count })
        .collect()
}

/// Rows exactly orthonormal (`AAᵀ = I`); requires a square matrix.
pub fn is_unitary(ls: &LineSet) -> Result<bool, FramesError> {
    if ls.m() != ls.n() {
        return Err(FramesError::NotSquare(ls.m(), ls.n()));
    }
    for i in 0..ls.m() {
        for j in i..ls.m() {
            let ip = inner_product(ls.row(i), ls.row(j))?;
            let expect = if i == j { Surd::one() } else { Surd::zero() };
            if ip != expect {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Welch-bound equality iff equiangular tight frame, asserted in both
/// directions; errors unless the set verifies as equiangular. Degenerate
/// single-line sets are not ETFs (the bound needs `m ≥ 2`).
pub fn is_etf(ls: &LineSet) -> Result<bool, FramesError> {
    let report = verify_equiangular(ls);
    if report.status != Status::Equiangular {
        return Err(FramesError::NotEquiangular(report.status));
    }
    if ls.m() < 2 {
        return Ok(false);
    }
    assert_eq!(
        report.welch_equality, report.is_tight,
        "Welch equality and tightness disagree on an equiangular set; \
         this is a bug in the verifier"
    );
    Ok(report.welch_equality)
}

/// Full zero-tolerance verification. With the `parallel` feature the pair
/// scan runs data-parallel; the report is identical either way.
pub fn verify_equiangular(ls: &LineSet) -> VerificationReport {
    verify_impl(ls, cfg!(feature = "parallel"))
}

/// Sequential variant of [`verify_equiangular`] (same contract, same
/// output); kept callable for benchmarking the two paths against each other.
pub fn verify_equiangular_seq(ls: &LineSet) -> VerificationReport {
    verify_impl(ls, false)
}

fn verify_impl(ls: &LineSet, parallel: bool) -> VerificationReport {
    let m = ls.m();
    let one = Surd::one();

    let norm_defects: Vec<OffendingPair> = (0..m)
        .filter_map(|i| {
            let norm = inner_product(ls.row(i), ls.row(i)).expect("row against itself");
            (norm != one).then_some(OffendingPair {
                i: i + 1,
                j: i + 1,
                value: norm,
            })
        })
        .collect();

    let products = pairwise_products(ls, parallel);
    let spectrum = spectrum_of(&products);
    let parallel_pairs: Vec<OffendingPair> = products
        .iter()
        .filter(|(_, _, ip)| ip.abs() == one)
        .map(|(i, j, ip)| OffendingPair {
            i: i + 1,
            j: j + 1,
            value: ip.clone(),
        })
        .collect();

    let (status, common_angle, offending_pairs) = if !norm_defects.is_empty() {
        (Status::NotUnitNorm, None, norm_defects)
    } else if !parallel_pairs.is_empty() {
        (Status::ParallelLines, None, parallel_pairs)
    } else if spectrum.len() > 1 {
        // flag every pair off the modal angle
        let modal = spectrum
            .iter()
            .max_by_key(|e| e.count)
            .expect("non-empty spectrum")
            .value
            .clone();
        let outliers = products
            .iter()
            .filter(|(_, _, ip)| ip.abs() != modal)
            .map(|(i, j, ip)| OffendingPair {
                i: i + 1,
                j: j + 1,
                value: ip.clone(),
            })
            .collect();
        (Status::MultipleAngles, None, outliers)
    } else {
        (
            Status::Equiangular,
            spectrum.first().map(|e| e.value.clone()),
            Vec::new(),
        )
    };

    let operator = frame_operator(ls);
    let rank = rank(&operator);
    let (tight, frame_bound) = is_tight_with(m, &operator, rank);

    let welch_equality = match (&common_angle, status) {
        (Some(c), Status::Equiangular) if m >= 2 => {
            let bound = welch_bound_sq(m, rank).expect("rank ≤ m and m ≥ 2");
            c.square().as_rational().as_ref() == Some(&bound)
        }
        _ => false,
    };
    if status == Status::Equiangular && m >= 2 {
        // Both directions of the equality case must agree; anything else is
        // an internal error, not a property of the input.
        assert_eq!(
            welch_equality, tight,
            "Welch equality and tightness disagree (m={m}, rank={rank})"
        );
    }

    let gerzon_slack = (gerzon_bound(rank as u64) as i64) - (m as i64);
    let neumann_status = match (&common_angle, status) {
        (Some(c), Status::Equiangular) if !c.is_zero() => neumann_lint(m, rank, c),
        _ => NeumannStatus::NotApplicable,
    };

    VerificationReport {
        status,
        common_angle,
        angle_spectrum: spectrum,
        offending_pairs,
        is_tight: tight,
        frame_bound,
        welch_equality,
        gerzon_slack,
        neumann_status,
        m,
        n: ls.n(),
        rank,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn sqrt(num: i64, den: i64) -> Surd {
        Surd::sqrt_rational(&Rational::new(BigInt::from(num), BigInt::from(den))).unwrap()
    }

    fn signed_block(scale: (i64, i64, u64), signs: &[&[i64]]) -> LineSet {
        let unit = Surd::radical(scale.0, scale.1, scale.2).unwrap();
        LineSet::from_rows(
            signs
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|s| unit.scale(&Rational::from(BigInt::from(*s))))
                        .collect()
                })
                .collect(),
        )
        .unwrap()
    }

    /// 4 vectors in ℝ³ at angle 1/3; entries ±1/√3 = ±(1/3)√3.
    fn four_in_r3() -> LineSet {
        signed_block(
            (1, 3, 3),
            &[&[1, 1, 1], &[-1, 1, 1], &[1, -1, 1], &[1, 1, -1]],
        )
    }

    #[test]
    fn inner_products_are_exact() {
        let b = four_in_r3();
        assert_eq!(
            inner_product(b.row(0), b.row(1)).unwrap(),
            Surd::ratio(1, 3)
        );
        assert_eq!(inner_product(b.row(0), b.row(0)).unwrap(), Surd::one());
        assert!(inner_product(&[Surd::one()], &[Surd::one(), Surd::one()]).is_err());
    }

    #[test]
    fn golden_staircase_rows_meet_at_one_over_sqrt5() {
        let x = Surd::golden_x();
        let y = Surd::golden_y();
        let u = [Surd::zero(), x.clone(), y.clone()];
        let v = [Surd::zero(), -x, y];
        assert_eq!(
            inner_product(&u, &v).unwrap(),
            Surd::radical(1, 5, 5).unwrap()
        );
    }

    #[test]
    fn verify_flags_the_right_statuses() {
        let good = verify_equiangular(&four_in_r3());
        assert_eq!(good.status, Status::Equiangular);
        assert_eq!(good.common_angle, Some(Surd::ratio(1, 3)));
        assert!(good.is_tight && good.welch_equality);
        assert_eq!(good.frame_bound, Some(Rational::new(4.into(), 3.into())));

        // duplicated row → parallel lines
        let dup = signed_block((1, 3, 3), &[&[1, 1, 1], &[-1, 1, 1], &[1, 1, 1]]);
        let rep = verify_equiangular(&dup);
        assert_eq!(rep.status, Status::ParallelLines);
        assert_eq!(rep.offending_pairs.len(), 1);
        assert_eq!((rep.offending_pairs[0].i, rep.offending_pairs[0].j), (1, 3));

        // single line is vacuously equiangular
        let single =
            LineSet::from_rows(vec![vec![Surd::one(), Surd::zero(), Surd::zero()]]).unwrap();
        let rep = verify_equiangular(&single);
        assert_eq!(rep.status, Status::Equiangular);
        assert!(rep.angle_spectrum.is_empty() && rep.common_angle.is_none());

        // non-unit rows reported first
        let bad = LineSet::from_rows(vec![
            vec![Surd::one(), Surd::zero()],
            vec![Surd::zero(), Surd::from_integer(2)],
        ])
        .unwrap();
        let rep = verify_equiangular(&bad);
        assert_eq!(rep.status, Status::NotUnitNorm);
        assert_eq!(rep.offending_pairs[0].value, Surd::from_integer(4));
    }

    #[test]
    fn spectrum_of_orthonormal_basis() {
        let id2 = LineSet::from_rows(vec![
            vec![Surd::one(), Surd::zero()],
            vec![Surd::zero(), Surd::one()],
        ])
        .unwrap();
        let spec = angle_spectrum(&id2);
        assert_eq!(spec.len(), 1);
        assert!(spec[0].value.is_zero());
        assert_eq!(spec[0].count, 1);
        let rep = verify_equiangular(&id2);
        assert!(rep.is_tight && rep.welch_equality);
        assert_eq!(rep.frame_bound, Some(Rational::one()));
    }

    #[test]
    fn frame_operator_of_the_simplex_block_is_scalar() {
        let s = frame_operator(&four_in_r3());
        let expect = Surd::ratio(4, 3);
        for (j, row) in s.iter().enumerate() {
            for (k, e) in row.iter().enumerate() {
                if j == k {
                    assert_eq!(*e, expect);
                } else {
                    assert!(e.is_zero());
                }
            }
        }
        let single = LineSet::from_rows(vec![vec![Surd::one(), Surd::zero()]]).unwrap();
        let s = frame_operator(&single);
        assert_eq!(s[0][0], Surd::one());
        assert!(s[0][1].is_zero() && s[1][1].is_zero());
    }

    #[test]
    fn welch_and_gerzon_values() {
        let w = |m, n| welch_bound_sq(m, n).unwrap();
        assert_eq!(w(28, 7), Rational::new(1.into(), 9.into()));
        assert_eq!(w(16, 6), Rational::new(1.into(), 9.into()));
        assert_eq!(w(5, 5), Rational::zero());
        assert!(welch_bound_sq(3, 5).is_err());
        assert_eq!(gerzon_bound(7), 28);
        assert_eq!(gerzon_bound(2), 3);
        assert_eq!(gerzon_bound(1), 1);
    }

    #[test]
    fn neumann_parity_check() {
        assert_eq!(
            neumann_lint(28, 7, &Surd::ratio(1, 3)),
            NeumannStatus::Pass
        );
        assert_eq!(
            neumann_lint(6, 3, &sqrt(1, 5)),
            NeumannStatus::NotApplicable
        );
        assert_eq!(neumann_lint(13, 6, &sqrt(1, 5)), NeumannStatus::Violation);
        assert_eq!(
            neumann_lint(13, 6, &Surd::ratio(2, 5)),
            NeumannStatus::Violation
        );
    }

    #[test]
    fn unitary_check_requires_square() {
        let id3 = LineSet::from_rows(
            (0..3)
                .map(|i| {
                    (0..3)
                        .map(|j| {
                            if i == j {
                                Surd::one()
                            } else {
                                Surd::zero()
                            }
                        })
                        .collect()
                })
                .collect(),
        )
        .unwrap();
        assert_eq!(is_unitary(&id3), Ok(true));
        assert!(matches!(
            is_unitary(&four_in_r3()),
            Err(FramesError::NotSquare(4, 3))
        ));
    }

    #[test]
    fn rank_detects_subspace_sets() {
        // two copies of the same direction plus an orthogonal one
        let ls = LineSet::from_rows(vec![
            vec![Surd::one(), Surd::zero(), Surd::zero()],
            vec![-Surd::one(), Surd::zero(), Surd::zero()],
            vec![Surd::zero(), Surd::one(), Surd::zero()],
        ])
        .unwrap();
        assert_eq!(rank(&frame_operator(&ls)), 2);
        assert_eq!(rank(&frame_operator(&four_in_r3())), 3);
    }

    #[test]
    fn sequential_and_parallel_reports_agree() {
        let b = four_in_r3();
        assert_eq!(verify_equiangular(&b), verify_equiangular_seq(&b));
    }

    #[test]
    fn sign_and_permutation_invariance() {
        let b = four_in_r3();
        let base = verify_equiangular(&b);
        let mut rows: Vec<Vec<Surd>> = b.rows().map(<[Surd]>::to_vec).collect();
        rows.swap(0, 2);
        rows[1] = rows[1].iter().map(|e| -e).collect();
        let permuted = verify_equiangular(&LineSet::from_rows(rows).unwrap());
        assert_eq!(base.status, permuted.status);
        assert_eq!(base.common_angle, permuted.common_angle);
        assert_eq!(base.angle_spectrum, permuted.angle_spectrum);
        assert_eq!(base.is_tight, permuted.is_tight);
        assert_eq!(base.welch_equality, permuted.welch_equality);
    }
}
