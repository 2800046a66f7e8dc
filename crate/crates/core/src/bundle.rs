//! Split types on invariant curves and the bundle expression calculus.
//!
//! A higher-rank equivariant bundle enters every formula of this crate only
//! through its restriction to invariant curves, i.e. through the multiset of
//! degrees in `E|_C = O(a_1) ⊕ … ⊕ O(a_n)`. Expressions are evaluated per
//! curve by the rules: ⊕ is multiset union, ⊗ is pairwise sums, Sym^n is
//! n-fold multiset sums, dual negates, and an explicit table is its own
//! restriction. All arithmetic is checked; overflow is an error, never a
//! wraparound.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Picard class in the line-bundle basis of the ambient product; for a
/// variety built from a word of length r this is an integer r-vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PicClass(pub Vec<i64>);

impl PicClass {
    pub fn zero(r: usize) -> Self {
        PicClass(vec![0; r])
    }

    pub fn basis(r: usize, m: usize) -> Self {
        let mut v = vec![0; r];
        v[m - 1] = 1;
        PicClass(v)
    }

    pub fn all_ones(r: usize) -> Self {
        PicClass(vec![1; r])
    }

    pub fn scaled(&self, k: i64) -> Result<PicClass> {
        let coords = self
            .0
            .iter()
            .map(|a| {
                a.checked_mul(k)
                    .ok_or(Error::Overflow("line class scaling"))
            })
            .collect::<Result<_>>()?;
        Ok(PicClass(coords))
    }
}

/// The multiset of degrees of a rank-n bundle restricted to a ℙ¹, stored
/// sorted ascending for canonical equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SplitType {
    degrees: Vec<i64>,
}

impl SplitType {
    pub fn new(mut degrees: Vec<i64>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::Invalid("split type must have rank ≥ 1".into()));
        }
        degrees.sort_unstable();
        Ok(SplitType { degrees })
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn min_entry(&self) -> i64 {
        self.degrees[0]
    }

    pub fn is_nef(&self) -> bool {
        self.min_entry() >= 0
    }

    pub fn is_ample(&self) -> bool {
        self.min_entry() > 0
    }
}

// Largest split type `restrict` will materialize.
const MAX_SPLIT_RANK: u64 = 1 << 20;

/// An algebraic bundle expression. The JSON encoding is the serde one:
/// `{"line":[a1,…]}`, `{"sum":[…]}`, `{"tensor":[e,f]}`,
/// `{"sym":{"n":k,"of":e}}`, `{"dual":e}`, `{"table":{"curve-id":[d1,…]}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BundleExpr {
    Line(PicClass),
    Sum(Vec<BundleExpr>),
    Tensor(Box<BundleExpr>, Box<BundleExpr>),
    Sym { n: u32, of: Box<BundleExpr> },
    Dual(Box<BundleExpr>),
    Table(BTreeMap<String, Vec<i64>>),
}

impl BundleExpr {
    pub fn line(coords: Vec<i64>) -> Self {
        BundleExpr::Line(PicClass(coords))
    }

    pub fn dual(e: BundleExpr) -> Self {
        BundleExpr::Dual(Box::new(e))
    }

    pub fn tensor(a: BundleExpr, b: BundleExpr) -> Self {
        BundleExpr::Tensor(Box::new(a), Box::new(b))
    }

    pub fn sym(n: u32, e: BundleExpr) -> Self {
        BundleExpr::Sym { n, of: Box::new(e) }
    }
}

fn binomial(n: u64, k: u64) -> Option<u64> {
    let k = k.min(n.saturating_sub(k));
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.checked_mul((n - i) as u128)?;
        den = den.checked_mul((i + 1) as u128)?;
        let g = gcd_u128(num, den);
        num /= g;
        den /= g;
    }
    if den != 1 || num > u64::MAX as u128 {
        return None;
    }
    Some(num as u64)
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// Rank of the bundle an expression denotes. Validates shape invariants:
/// nonempty sums, Sym exponent ≥ 1, consistent table sizes.
pub fn rank(expr: &BundleExpr) -> Result<u64> {
    match expr {
        BundleExpr::Line(_) => Ok(1),
        BundleExpr::Sum(parts) => {
            if parts.is_empty() {
                return Err(Error::Invalid(
                    "empty direct sum (rank 0) is rejected".into(),
                ));
            }
            let mut total: u64 = 0;
            for p in parts {
                total = total
                    .checked_add(rank(p)?)
                    .ok_or(Error::Overflow("rank of sum"))?;
            }
            Ok(total)
        }
        BundleExpr::Tensor(a, b) => rank(a)?
            .checked_mul(rank(b)?)
            .ok_or(Error::Overflow("rank of tensor")),
        BundleExpr::Sym { n, of } => {
            if *n == 0 {
                return Err(Error::Invalid("Sym exponent must be ≥ 1".into()));
            }
            let s = rank(of)?;
            binomial(u64::from(*n) + s - 1, u64::from(*n))
                .ok_or(Error::Overflow("rank of symmetric power"))
        }
        BundleExpr::Dual(e) => rank(e),
        BundleExpr::Table(map) => {
            let mut sizes = map.values().map(|v| v.len());
            let Some(first) = sizes.next() else {
                return Err(Error::Invalid("empty restriction table".into()));
            };
            if first == 0 || sizes.any(|s| s != first) {
                return Err(Error::Invalid(
                    "restriction table entries must all have the same size ≥ 1".into(),
                ));
            }
            Ok(first as u64)
        }
    }
}

/// Restriction of an expression to one curve. `line_deg` supplies the degree
/// of a line class on that curve; `curve_id` keys table lookups.
pub fn restrict<F>(expr: &BundleExpr, curve_id: &str, line_deg: &F) -> Result<SplitType>
where
    F: Fn(&PicClass) -> Result<i64>,
{
    let r = rank(expr)?;
    if r > MAX_SPLIT_RANK {
        return Err(Error::Guard(format!(
            "split type of rank {r} exceeds the materialization bound {MAX_SPLIT_RANK}"
        )));
    }
    restrict_unchecked(expr, curve_id, line_deg)
}

fn restrict_unchecked<F>(expr: &BundleExpr, curve_id: &str, line_deg: &F) -> Result<SplitType>
where
    F: Fn(&PicClass) -> Result<i64>,
{
    match expr {
        BundleExpr::Line(class) => SplitType::new(vec![line_deg(class)?]),
        BundleExpr::Sum(parts) => {
            let mut all = Vec::new();
            for p in parts {
                all.extend_from_slice(restrict_unchecked(p, curve_id, line_deg)?.degrees());
            }
            SplitType::new(all)
        }
        BundleExpr::Tensor(a, b) => {
            let sa = restrict_unchecked(a, curve_id, line_deg)?;
            let sb = restrict_unchecked(b, curve_id, line_deg)?;
            let mut out = Vec::with_capacity(sa.rank() * sb.rank());
            for x in sa.degrees() {
                for y in sb.degrees() {
                    out.push(x.checked_add(*y).ok_or(Error::Overflow("tensor degrees"))?);
                }
            }
            SplitType::new(out)
        }
        BundleExpr::Sym { n, of } => {
            let base = restrict_unchecked(of, curve_id, line_deg)?;
            sym_power(&base, *n)
        }
        BundleExpr::Dual(e) => {
            let s = restrict_unchecked(e, curve_id, line_deg)?;
            SplitType::new(
                s.degrees()
                    .iter()
                    .map(|d| d.checked_neg().ok_or(Error::Overflow("dual degrees")))
                    .collect::<Result<_>>()?,
            )
        }
        BundleExpr::Table(map) => {
            let entry = map
                .get(curve_id)
                .ok_or_else(|| Error::MissingTableEntry(curve_id.to_string()))?;
            SplitType::new(entry.clone())
        }
    }
}

// Sym^n by direct iteration over weakly increasing index tuples
// (combinations with repetition); C(n+s-1, n) entries.
fn sym_power(base: &SplitType, n: u32) -> Result<SplitType> {
    if n == 0 {
        return Err(Error::Invalid("Sym exponent must be ≥ 1".into()));
    }
    let degs = base.degrees();
    let s = degs.len();
    let n = n as usize;
    let mut idx = vec![0usize; n];
    let mut out = Vec::new();
    loop {
        let mut total: i64 = 0;
        for &i in &idx {
            total = total
                .checked_add(degs[i])
                .ok_or(Error::Overflow("symmetric power"))?;
        }
        out.push(total);
        // next weakly increasing tuple
        let mut pos = n;
        loop {
            if pos == 0 {
                return SplitType::new(out);
            }
            pos -= 1;
            if idx[pos] + 1 < s {
                let v = idx[pos] + 1;
                for slot in idx.iter_mut().skip(pos) {
                    *slot = v;
                }
                break;
            }
        }
    }
}

/// The min-over-curves engine behind every Seshadri computation: the minimum
/// split-type entry over the given curves. Callers enforce the nef
/// precondition.
pub fn seshadri_engine<C, F>(curves: &[C], restrict_at: F) -> Result<i64>
where
    F: Fn(&C) -> Result<SplitType>,
{
    if curves.is_empty() {
        return Err(Error::Invalid(
            "no invariant curves through the point".into(),
        ));
    }
    let mut best: Option<i64> = None;
    for c in curves {
        let st = restrict_at(c)?;
        best = Some(best.map_or(st.min_entry(), |b| b.min(st.min_entry())));
    }
    Ok(best.expect("nonempty curve list"))
}

/// Smallest n ≥ 1 with `Sym^n(E) ⊗ L^{-1}` nef on all given curves, scanning
/// up to `bound`; `None` if no n up to the bound works.
pub fn twist_threshold<C, F>(
    expr: &BundleExpr,
    line: &PicClass,
    curves: &[C],
    restrict_at: F,
    bound: u32,
) -> Result<Option<u32>>
where
    F: Fn(&BundleExpr, &C) -> Result<SplitType>,
{
    for n in 1..=bound {
        let candidate = BundleExpr::tensor(
            BundleExpr::sym(n, expr.clone()),
            BundleExpr::dual(BundleExpr::Line(line.clone())),
        );
        let mut ok = true;
        for c in curves {
            if !restrict_at(&candidate, c)?.is_nef() {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(Some(n));
        }
    }
    Ok(None)
}
