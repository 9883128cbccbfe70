//! Parametric families, circulant unitaries, and placement-plan composition.
//!
//! The generators emit the infinite families in their printed coordinate
//! patterns; none of them claims correctness by construction. Every output
//! is meant to be pushed through [`frames::verify_equiangular`], which is
//! the only arbiter.
//!
//! A [`PlacementPlan`] mechanizes the incidence charts used to assemble
//! large sets out of building blocks: each item places one block's columns
//! at chosen ambient coordinates, and cross-block angles are controlled by
//! which coordinates two items share. [`validate_plan`] surfaces exactly the
//! data a reader checks by eye — injectivity, coverage, and the pairwise
//! shared-coordinate sets.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::exact::{Rational, Surd};
use crate::frames::LineSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error("{family} requires n ≥ {min}, got {n}")]
    Domain {
        family: &'static str,
        n: usize,
        min: usize,
    },
    #[error("unknown building block {0:?}")]
    UnknownBlock(String),
    #[error("item {item}: column map has {map_len} entries but block {block:?} has {block_cols} columns")]
    ArityMismatch {
        item: usize,
        block: String,
        map_len: usize,
        block_cols: usize,
    },
    #[error("plan has structural errors: {0:?}")]
    Structural(Vec<Diagnostic>),
    #[error("unknown generator family {0:?}")]
    UnknownFamily(String),
}

fn sqrt(num: i64, den: i64) -> Surd {
    Surd::sqrt_rational(&Rational::new(BigInt::from(num), BigInt::from(den)))
        .expect("small non-negative radicand")
}

fn scaled(unit: &Surd, sign: i64) -> Surd {
    match sign {
        1 => unit.clone(),
        -1 => -unit,
        _ => unit.scale(&Rational::from(BigInt::from(sign))),
    }
}

fn zero_row(n: usize) -> Vec<Surd> {
    vec![Surd::zero(); n]
}

/// `N+1` unit vectors in `ℝ^{N+1}` spanning an `N`-dimensional subspace with
/// every pairwise inner product exactly `−1/N`: entry `−N/√(N(N+1))` on the
/// diagonal and `1/√(N(N+1))` elsewhere.
pub fn simplex(n: usize) -> Result<LineSet, ConstructError> {
    if n < 1 {
        return Err(ConstructError::Domain {
            family: "simplex",
            n,
            min: 1,
        });
    }
    let unit = sqrt(1, (n * (n + 1)) as i64);
    let rows = (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    if i == j {
                        scaled(&unit, -(n as i64))
                    } else {
                        unit.clone()
                    }
                })
                .collect()
        })
        .collect();
    Ok(LineSet::from_rows(rows).expect("shape by construction"))
}

/// `2(N−1)` vectors in `ℝᴺ` at angle `1/3`: the staircase pairs
/// `(√(1/3), ±√(2/3))` in coordinates `(1, k)` for `k = 2..=N`.
pub fn family_one_third(n: usize) -> Result<LineSet, ConstructError> {
    if n < 2 {
        return Err(ConstructError::Domain {
            family: "one-third",
            n,
            min: 2,
        });
    }
    let head = sqrt(1, 3);
    let tail = sqrt(2, 3);
    let mut rows = Vec::with_capacity(2 * (n - 1));
    for k in 1..n {
        for sign in [1i64, -1] {
            let mut row = zero_row(n);
            row[0] = head.clone();
            row[k] = scaled(&tail, sign);
            rows.push(row);
        }
    }
    Ok(LineSet::from_rows(rows).expect("shape by construction"))
}

fn one_fifth_staircase(n: usize, mid: Surd, last: Surd) -> LineSet {
    let head = sqrt(1, 5);
    let m = n - 1;
    let mut rows = Vec::with_capacity(m);
    for j in 1..=(m / 2) {
        // pair j owns coordinates (2j, 2j+1); column 1 is shared by all rows
        for sign in [1i64, -1] {
            let mut row = zero_row(n);
            row[0] = head.clone();
            row[2 * j - 1] = mid.clone();
            row[2 * j] = scaled(&last, sign);
            rows.push(row);
        }
    }
    if m % 2 == 1 {
        // odd count: one trailing vector on coordinates (1, N)
        let mut row = zero_row(n);
        row[0] = head;
        row[n - 1] = sqrt(4, 5);
        rows.push(row);
    }
    LineSet::from_rows(rows).expect("shape by construction")
}

/// `N−1` vectors in `ℝᴺ` at angle `1/5`, staircase `(√(1/5), √(2/5), ±√(2/5))`.
pub fn family_one_fifth_a(n: usize) -> Result<LineSet, ConstructError> {
    if n < 3 {
        return Err(ConstructError::Domain {
            family: "one-fifth-a",
            n,
            min: 3,
        });
    }
    Ok(one_fifth_staircase(n, sqrt(2, 5), sqrt(2, 5)))
}

/// `N−1` vectors in `ℝᴺ` at angle `1/5`, staircase `(√(1/5), √(1/5), ±√(3/5))`.
pub fn family_one_fifth_b(n: usize) -> Result<LineSet, ConstructError> {
    if n < 3 {
        return Err(ConstructError::Domain {
            family: "one-fifth-b",
            n,
            min: 3,
        });
    }
    Ok(one_fifth_staircase(n, sqrt(1, 5), sqrt(3, 5)))
}

/// The reversed 4×4 block `(√(1/5), √(1/5), √(1/5), √(2/5))` used by the
/// `3N+1` family; column sign patterns `(+,+,+,+)`, `(+,−,−,+)`,
/// `(+,−,+,−)`, `(+,+,−,−)` down the rows.
fn reversed_block_rows() -> Vec<[Surd; 4]> {
    let s15 = sqrt(1, 5);
    let s25 = sqrt(2, 5);
    let signs: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, -1, -1, 1], [1, -1, 1, -1], [1, 1, -1, -1]];
    signs
        .iter()
        .map(|row| {
            [
                scaled(&s15, row[0]),
                scaled(&s15, row[1]),
                scaled(&s15, row[2]),
                scaled(&s25, row[3]),
            ]
        })
        .collect()
}

/// `4K` vectors in `ℝ^{3K+1}` at angle `1/5`: `K` copies of the reversed
/// block, copy `j` on coordinates `(1, 3j−1, 3j, 3j+1)`; coordinate 1 carries
/// the block's all-positive first column, so cross-copy products are `+1/5`.
pub fn family_three_n_plus_one(k: usize) -> Result<LineSet, ConstructError> {
    if k < 1 {
        return Err(ConstructError::Domain {
            family: "three-n-plus-one",
            n: k,
            min: 1,
        });
    }
    let n = 3 * k + 1;
    let block = reversed_block_rows();
    let mut rows = Vec::with_capacity(4 * k);
    for j in 1..=k {
        let cols = [0, 3 * j - 2, 3 * j - 1, 3 * j];
        for brow in &block {
            let mut row = zero_row(n);
            for (c, v) in cols.iter().zip(brow) {
                row[*c] = v.clone();
            }
            rows.push(row);
        }
    }
    Ok(LineSet::from_rows(rows).expect("shape by construction"))
}

/// `2N` unit vectors in `ℝᴺ` whose pairwise inner products are exactly
/// `±1/√5` or `0`, built from the golden staircase coordinates
/// `x = √((5−√5)/10)`, `y = √((5+√5)/10)`.
pub fn two_angle(n: usize) -> Result<LineSet, ConstructError> {
    if n < 3 {
        return Err(ConstructError::Domain {
            family: "two-angle",
            n,
            min: 3,
        });
    }
    let x = Surd::golden_x();
    let y = Surd::golden_y();
    let mut rows = Vec::with_capacity(2 * n);
    for k in 0..n - 1 {
        for sign in [1i64, -1] {
            let mut row = zero_row(n);
            row[k] = scaled(&x, sign);
            row[k + 1] = y.clone();
            rows.push(row);
        }
    }
    for sign in [1i64, -1] {
        let mut row = zero_row(n);
        row[0] = y.clone();
        row[n - 1] = scaled(&x, sign);
        rows.push(row);
    }
    Ok(LineSet::from_rows(rows).expect("shape by construction"))
}

/// The two circulant halves whose rows, taken together, are exactly the rows
/// of [`two_angle`]`(n)`.
pub fn split_circulant(n: usize) -> Result<(LineSet, LineSet), ConstructError> {
    if n < 3 {
        return Err(ConstructError::Domain {
            family: "split-circulant",
            n,
            min: 3,
        });
    }
    let x = Surd::golden_x();
    let y = Surd::golden_y();
    let half = |sign: i64| -> LineSet {
        let mut rows = Vec::with_capacity(n);
        for k in 0..n - 1 {
            let mut row = zero_row(n);
            row[k] = scaled(&x, sign);
            row[k + 1] = y.clone();
            rows.push(row);
        }
        let mut row = zero_row(n);
        row[0] = y.clone();
        row[n - 1] = scaled(&x, sign);
        rows.push(row);
        LineSet::from_rows(rows).expect("shape by construction")
    };
    Ok((half(1), half(-1)))
}

fn circulant_two_valued(
    size: usize,
    a: Rational,
    b: Rational,
    neg_at: impl Fn(usize) -> usize,
) -> LineSet {
    let a = Surd::from_rational(a);
    let neg_b = Surd::from_rational(-b);
    let rows = (0..size)
        .map(|i| {
            let neg = neg_at(i);
            (0..size)
                .map(|j| if j == neg { neg_b.clone() } else { a.clone() })
                .collect()
        })
        .collect();
    LineSet::from_rows(rows).expect("shape by construction")
}

/// `N×N` circulant self-adjoint unitary: `−b` on the diagonal, `a`
/// elsewhere, with `a = 2/N`, `b = (N−2)/N` solving orthogonality
/// (`(N−2)a² − 2ab = 0`) and unit norms (`(N−1)a² + b² = 1`).
pub fn circ_sa_n(n: usize) -> Result<LineSet, ConstructError> {
    if n < 3 {
        return Err(ConstructError::Domain {
            family: "circ-sa-n",
            n,
            min: 3,
        });
    }
    let a = Rational::new(2.into(), BigInt::from(n));
    let b = Rational::new(BigInt::from(n - 2), BigInt::from(n));
    Ok(circulant_two_valued(n, a, b, |i| i))
}

/// `2N×2N` circulant self-adjoint unitary: row `i` has `−b` at column
/// `i + N (mod 2N)`, with `a = 1/N`, `b = (N−1)a`.
pub fn circ_sa_2n(n: usize) -> Result<LineSet, ConstructError> {
    if n < 2 {
        return Err(ConstructError::Domain {
            family: "circ-sa-2n",
            n,
            min: 2,
        });
    }
    let a = Rational::new(1.into(), BigInt::from(n));
    let b = Rational::new(BigInt::from(n - 1), BigInt::from(n));
    Ok(circulant_two_valued(2 * n, a, b, move |i| (i + n) % (2 * n)))
}

/// `N×N` circulant unitary (not self-adjoint): `−b` one step right of the
/// diagonal, same coefficient solve as [`circ_sa_n`].
pub fn circ_shift(n: usize) -> Result<LineSet, ConstructError> {
    if n < 3 {
        return Err(ConstructError::Domain {
            family: "circ-shift",
            n,
            min: 3,
        });
    }
    let a = Rational::new(2.into(), BigInt::from(n));
    let b = Rational::new(BigInt::from(n - 2), BigInt::from(n));
    Ok(circulant_two_valued(n, a, b, move |i| (i + 1) % n))
}

/// Each row is the previous row cyclically shifted one step right.
pub fn is_circulant(ls: &LineSet) -> bool {
    if ls.m() != ls.n() {
        return false;
    }
    let n = ls.n();
    for i in 1..n {
        for j in 0..n {
            if ls.entry(i, (j + 1) % n) != ls.entry(i - 1, j) {
                return false;
            }
        }
    }
    true
}

/// The generator families exposed to batch interfaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Simplex,
    OneThird,
    OneFifthA,
    OneFifthB,
    ThreeNPlusOne,
    TwoAngle,
    CircSaN,
    CircSa2n,
    CircShift,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Simplex,
        Family::OneThird,
        Family::OneFifthA,
        Family::OneFifthB,
        Family::ThreeNPlusOne,
        Family::TwoAngle,
        Family::CircSaN,
        Family::CircSa2n,
        Family::CircShift,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Simplex => "simplex",
            Family::OneThird => "one-third",
            Family::OneFifthA => "one-fifth-a",
            Family::OneFifthB => "one-fifth-b",
            Family::ThreeNPlusOne => "three-n-plus-one",
            Family::TwoAngle => "two-angle",
            Family::CircSaN => "circ-sa-n",
            Family::CircSa2n => "circ-sa-2n",
            Family::CircShift => "circ-shift",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = ConstructError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| ConstructError::UnknownFamily(s.to_string()))
    }
}

/// A family and its size parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<LineSet, ConstructError> {
        match self.family {
            Family::Simplex => simplex(self.n),
            Family::OneThird => family_one_third(self.n),
            Family::OneFifthA => family_one_fifth_a(self.n),
            Family::OneFifthB => family_one_fifth_b(self.n),
            Family::ThreeNPlusOne => family_three_n_plus_one(self.n),
            Family::TwoAngle => two_angle(self.n),
            Family::CircSaN => circ_sa_n(self.n),
            Family::CircSa2n => circ_sa_2n(self.n),
            Family::CircShift => circ_shift(self.n),
        }
    }
}

/// One building-block copy: `map[j]` is the 1-based ambient coordinate that
/// receives block column `j+1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanItem {
    pub block: String,
    pub map: Vec<usize>,
}

/// A recipe placing building-block copies into ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlacementPlan {
    pub ambient_n: usize,
    pub items: Vec<PlanItem>,
}

/// Structural findings and overlap data for a plan. Item indices are
/// 1-based. `SharedCoordinates` entries are informational: one per item
/// pair, including empty overlaps (an empty overlap forces orthogonal
/// cross-block rows, which is itself worth seeing).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Diagnostic {
    EmptyPlan,
    NonInjectiveMap {
        item: usize,
    },
    OutOfRangeCoordinate {
        item: usize,
        coordinate: usize,
    },
    UnusedCoordinate {
        coordinate: usize,
    },
    SharedCoordinates {
        item_a: usize,
        item_b: usize,
        coordinates: Vec<usize>,
    },
}

impl Diagnostic {
    /// Structural errors make a plan unusable; shared-coordinate entries are
    /// informational.
    pub fn is_structural(&self) -> bool {
        !matches!(self, Diagnostic::SharedCoordinates { .. })
    }
}

/// Mechanical version of the by-sight chart check: injectivity, coordinate
/// range and coverage, and every pairwise shared-coordinate set.
pub fn validate_plan(plan: &PlacementPlan) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    if plan.items.is_empty() || plan.ambient_n == 0 {
        out.push(Diagnostic::EmptyPlan);
        return out;
    }
    let mut used: BTreeSet<usize> = BTreeSet::new();
    let sets: Vec<BTreeSet<usize>> = plan
        .items
        .iter()
        .map(|item| item.map.iter().copied().collect())
        .collect();
    for (idx, item) in plan.items.iter().enumerate() {
        if sets[idx].len() != item.map.len() {
            out.push(Diagnostic::NonInjectiveMap { item: idx + 1 });
        }
        for &c in &item.map {
            if c == 0 || c > plan.ambient_n {
                out.push(Diagnostic::OutOfRangeCoordinate {
                    item: idx + 1,
                    coordinate: c,
                });
            } else {
                used.insert(c);
            }
        }
    }
    for c in 1..=plan.ambient_n {
        if !used.contains(&c) {
            out.push(Diagnostic::UnusedCoordinate { coordinate: c });
        }
    }
    for a in 0..sets.len() {
        for b in (a + 1)..sets.len() {
            out.push(Diagnostic::SharedCoordinates {
                item_a: a + 1,
                item_b: b + 1,
                coordinates: sets[a].intersection(&sets[b]).copied().collect(),
            });
        }
    }
    out
}

/// Embed every item's block rows into `ℝ^{ambient_n}` and stack them in item
/// order. Performs no angle reasoning: the verifier is the arbiter of what
/// the composition achieved.
pub fn apply_plan(
    plan: &PlacementPlan,
    resolve: impl Fn(&str) -> Option<LineSet>,
) -> Result<LineSet, ConstructError> {
    let errors: Vec<Diagnostic> = validate_plan(plan)
        .into_iter()
        .filter(Diagnostic::is_structural)
        .collect();
    if !errors.is_empty() {
        return Err(ConstructError::Structural(errors));
    }
    let mut rows = Vec::new();
    for (idx, item) in plan.items.iter().enumerate() {
        let block = resolve(&item.block)
            .ok_or_else(|| ConstructError::UnknownBlock(item.block.clone()))?;
        if item.map.len() != block.n() {
            return Err(ConstructError::ArityMismatch {
                item: idx + 1,
                block: item.block.clone(),
                map_len: item.map.len(),
                block_cols: block.n(),
            });
        }
        for brow in block.rows() {
            let mut row = zero_row(plan.ambient_n);
            for (j, value) in brow.iter().enumerate() {
                row[item.map[j] - 1] = value.clone();
            }
            rows.push(row);
        }
    }
    Ok(LineSet::from_rows(rows).expect("validated plan yields a well-formed matrix"))
}
