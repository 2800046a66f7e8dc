//! Combinatorics of minimal-rank symmetric spaces: involution validation,
//! restricted roots, the invariant-curve classification, and positivity /
//! Seshadri verdicts driven by supplied restriction tables.
//!
//! The symmetric space enters only through a lattice involution σ on the
//! root lattice that preserves the root set and is compatible with the
//! positive system (σ(α) = α or σ(α) ∈ −R⁺ for every α ∈ R⁺). Invariant
//! curves come in two kinds, up to Weyl translation: one per positive root
//! outside the fixed Levi, and one per restricted root γ = α − σ(α).
//!
//! There is no intrinsic Picard pairing here: restriction degrees arrive as
//! a table keyed by canonical curve-class ids, with the translation
//! invariance of split types an input contract.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bundle::{seshadri_engine, SplitType};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rootsys::{Root, RootSystem};
use crate::weyl::WeylElement;

/// A validated lattice involution on a root system.
#[derive(Debug, Clone)]
pub struct InvolutionData {
    rs: RootSystem,
    /// row-major n×n; column j is the image of α_{j+1}
    sigma: Vec<i64>,
}

impl InvolutionData {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn apply(&self, beta: &Root) -> Root {
        Root::new(linalg::apply(self.rs.rank(), &self.sigma, beta.coords()))
    }
}

/// Derived data of the symmetric space: fixed Levi roots, restricted roots,
/// and the ±1 eigenvalue multiplicities of σ.
#[derive(Debug, Clone)]
pub struct SymmetricSpaceData {
    inv: InvolutionData,
    fixed_levi_positive: Vec<Root>,
    restricted: Vec<Vec<i64>>,
    t1_rank: usize,
    t2_rank: usize,
    levi_span_rank: usize,
    degenerate: bool,
}

/// The two kinds of invariant-curve classes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum CurveClassKind {
    /// One per positive root outside the fixed Levi.
    Schubert(Root),
    /// One per restricted root γ = α − σ(α) (a root-lattice vector,
    /// generally not a root).
    Restricted(Vec<i64>),
}

impl CurveClassKind {
    /// Canonical id, e.g. `schubert:1,0` or `restricted:2,2`.
    pub fn id(&self) -> String {
        match self {
            CurveClassKind::Schubert(alpha) => format!(
                "schubert:{}",
                alpha
                    .coords()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            CurveClassKind::Restricted(gamma) => format!(
                "restricted:{}",
                gamma
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        }
    }
}

impl fmt::Display for CurveClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

/// A curve class together with its Weyl translate; translate = identity
/// means "through the base point".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WonderfulCurveClass {
    pub kind: CurveClassKind,
    pub translate: WeylElement,
}

/// Map from canonical curve-class id to split type. Degrees depend only on
/// the class: W-translation invariance of split types is an input contract.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RestrictionTable {
    pub map: BTreeMap<String, Vec<i64>>,
}

impl RestrictionTable {
    pub fn new(map: BTreeMap<String, Vec<i64>>) -> Self {
        RestrictionTable { map }
    }

    fn split(&self, id: &str) -> Result<SplitType> {
        let entry = self
            .map
            .get(id)
            .ok_or_else(|| Error::MissingTableEntry(id.to_string()))?;
        SplitType::new(entry.clone())
    }

    /// Checks coverage of the given classes and equal split sizes.
    pub fn validate_for(&self, classes: &[WonderfulCurveClass]) -> Result<()> {
        let mut size = None;
        for class in classes {
            let st = self.split(&class.kind.id())?;
            match size {
                None => size = Some(st.rank()),
                Some(s) if s != st.rank() => {
                    return Err(Error::Invalid(
                        "restriction table split types must all have the same size".into(),
                    ))
                }
                _ => {}
            }
        }
        Ok(())
    }
}

/// Positivity verdict over curve classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    /// Failing class id and entry, when negative.
    pub witness: Option<(String, i64)>,
}

/// Summary exposed by `minimal_rank_report`: eigenvalue multiplicities and
/// the fixed-Levi comparison. The minimal-rank property itself is not
/// certified here; t2 is the rank of the symmetric space under the
/// maximal-T₁ convention, and rank(H) = t1 exactly in the minimal-rank case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalRankReport {
    pub rank_g: usize,
    pub t1_rank: usize,
    pub t2_rank: usize,
    pub levi_span_rank: usize,
    pub t1_matches_levi_span: bool,
    pub degenerate: bool,
}

impl fmt::Display for MinimalRankReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rank(G) = {}", self.rank_g)?;
        writeln!(
            f,
            "t1 (σ = +1 eigenvalue multiplicity, candidate rank(H)) = {}",
            self.t1_rank
        )?;
        writeln!(
            f,
            "t2 (σ = -1 eigenvalue multiplicity, rank(G/H)) = {}",
            self.t2_rank
        )?;
        writeln!(f, "fixed Levi span rank = {}", self.levi_span_rank)?;
        writeln!(
            f,
            "t1 matches fixed-Levi span: {}",
            self.t1_matches_levi_span
        )?;
        if self.degenerate {
            writeln!(
                f,
                "warning: σ is the identity — not a symmetric space of positive rank"
            )?;
        }
        Ok(())
    }
}

/// Checks all involution axioms and derives the symmetric-space data:
/// σ² = id, σ preserves the root set, and each positive root is fixed or
/// sent negative. Eigenvalue multiplicities are exact integer computations.
pub fn validate_involution(rs: &RootSystem, sigma_rows: &[Vec<i64>]) -> Result<SymmetricSpaceData> {
    let n = rs.rank();
    if sigma_rows.len() != n || sigma_rows.iter().any(|row| row.len() != n) {
        return Err(Error::Invalid(format!("involution matrix must be {n}x{n}")));
    }
    let sigma: Vec<i64> = sigma_rows.iter().flatten().copied().collect();
    let square = linalg::mul(n, &sigma, &sigma);
    if square != linalg::identity(n) {
        return Err(Error::Invalid(
            "involution squared is not the identity".into(),
        ));
    }
    let inv = InvolutionData {
        rs: rs.clone(),
        sigma: sigma.clone(),
    };
    for beta in rs.positive_roots() {
        let image = inv.apply(beta);
        if !rs.is_root(&image) {
            return Err(Error::Invalid(format!(
                "σ does not preserve the root set: σ({beta}) = {image}"
            )));
        }
        if image != *beta && !image.is_negative() {
            return Err(Error::Invalid(format!(
                "Borel compatibility fails at {beta}: σ({beta}) = {image} is neither fixed nor negative"
            )));
        }
    }
    // exact eigenvalue multiplicities: t1 = dim ker(σ − I), t2 = dim ker(σ + I)
    let minus_i: Vec<i64> = sigma
        .iter()
        .enumerate()
        .map(|(k, &v)| v - i64::from(k % (n + 1) == 0))
        .collect();
    let plus_i: Vec<i64> = sigma
        .iter()
        .enumerate()
        .map(|(k, &v)| v + i64::from(k % (n + 1) == 0))
        .collect();
    let t1_rank = n - linalg::rank(n, n, &minus_i);
    let t2_rank = n - linalg::rank(n, n, &plus_i);
    if t1_rank + t2_rank != n {
        return Err(Error::MathConsistency(
            "eigenvalue multiplicities of an involution must add up to the rank".into(),
        ));
    }
    let fixed_levi_positive: Vec<Root> = rs
        .positive_roots()
        .iter()
        .filter(|b| inv.apply(b) == **b)
        .cloned()
        .collect();
    // the fixed roots form a subsystem: closed under their own reflections
    for alpha in &fixed_levi_positive {
        for beta in &fixed_levi_positive {
            let k = rs.pairing(&rs.root_to_weight(beta), &rs.coroot(alpha)?);
            let image = Root::new(
                beta.coords()
                    .iter()
                    .zip(alpha.coords())
                    .map(|(b, a)| b - k * a)
                    .collect(),
            );
            if inv.apply(&image) != image {
                return Err(Error::MathConsistency(
                    "fixed Levi roots are not closed under their reflections".into(),
                ));
            }
        }
    }
    let mut restricted: Vec<Vec<i64>> = rs
        .positive_roots()
        .iter()
        .filter_map(|beta| {
            let image = inv.apply(beta);
            if image == *beta {
                None
            } else {
                Some(
                    beta.coords()
                        .iter()
                        .zip(image.coords())
                        .map(|(b, s)| b - s)
                        .collect(),
                )
            }
        })
        .collect();
    restricted.sort();
    restricted.dedup();
    // restricted roots lie in the −1 eigenspace
    for gamma in &restricted {
        let image = linalg::apply(n, &sigma, gamma);
        if image.iter().zip(gamma).any(|(a, b)| *a != -b) {
            return Err(Error::MathConsistency(format!(
                "restricted root {gamma:?} is not in the −1 eigenspace of σ"
            )));
        }
    }
    let levi_span_rank = if fixed_levi_positive.is_empty() {
        0
    } else {
        let cols = fixed_levi_positive.len();
        let mut m = vec![0i64; n * cols];
        for (c, root) in fixed_levi_positive.iter().enumerate() {
            for (r, &v) in root.coords().iter().enumerate() {
                m[r * cols + c] = v;
            }
        }
        linalg::rank(n, cols, &m)
    };
    let degenerate = sigma == linalg::identity(n);
    Ok(SymmetricSpaceData {
        inv,
        fixed_levi_positive,
        restricted,
        t1_rank,
        t2_rank,
        levi_span_rank,
        degenerate,
    })
}

impl SymmetricSpaceData {
    pub fn involution(&self) -> &InvolutionData {
        &self.inv
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.inv.rs
    }

    /// Positive roots fixed by σ (the positive system of the Levi).
    pub fn fixed_levi_positive(&self) -> &[Root] {
        &self.fixed_levi_positive
    }

    /// Restricted roots γ = α − σ(α), deduplicated, lexicographically sorted.
    pub fn restricted_roots(&self) -> &[Vec<i64>] {
        &self.restricted
    }

    pub fn t1_rank(&self) -> usize {
        self.t1_rank
    }

    pub fn t2_rank(&self) -> usize {
        self.t2_rank
    }

    /// σ = identity: accepted, but flagged so front ends can warn.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn minimal_rank_report(&self) -> MinimalRankReport {
        MinimalRankReport {
            rank_g: self.root_system().rank(),
            t1_rank: self.t1_rank,
            t2_rank: self.t2_rank,
            levi_span_rank: self.levi_span_rank,
            t1_matches_levi_span: self.t1_rank == self.levi_span_rank,
            degenerate: self.degenerate,
        }
    }

    /// Canonical curve classes (translate = identity): one Schubert class
    /// per positive root outside the fixed Levi, one restricted class per
    /// restricted root.
    pub fn curve_classes(&self) -> Vec<WonderfulCurveClass> {
        let identity = WeylElement::identity(self.root_system());
        let mut out = Vec::new();
        for beta in self.root_system().positive_roots() {
            if self.inv.apply(beta) != *beta {
                out.push(WonderfulCurveClass {
                    kind: CurveClassKind::Schubert(beta.clone()),
                    translate: identity.clone(),
                });
            }
        }
        for gamma in &self.restricted {
            out.push(WonderfulCurveClass {
                kind: CurveClassKind::Restricted(gamma.clone()),
                translate: identity.clone(),
            });
        }
        out
    }

    /// The curves through the translated base point w·z: the w-translates of
    /// every canonical class.
    pub fn curves_through(&self, w: &WeylElement) -> Vec<WonderfulCurveClass> {
        self.curve_classes()
            .into_iter()
            .map(|mut class| {
                class.translate = w.clone();
                class
            })
            .collect()
    }

    fn positivity(&self, table: &RestrictionTable, strict: bool) -> Result<Verdict> {
        let classes = self.curve_classes();
        table.validate_for(&classes)?;
        for class in &classes {
            let st = table.split(&class.kind.id())?;
            let bad = st
                .degrees()
                .iter()
                .find(|&&d| if strict { d <= 0 } else { d < 0 });
            if let Some(&entry) = bad {
                return Ok(Verdict {
                    holds: false,
                    witness: Some((class.kind.id(), entry)),
                });
            }
        }
        Ok(Verdict {
            holds: true,
            witness: None,
        })
    }

    /// Nef iff every table entry over every curve class is ≥ 0.
    pub fn nef_test(&self, table: &RestrictionTable) -> Result<Verdict> {
        self.positivity(table, false)
    }

    /// Ample iff every table entry over every curve class is > 0.
    pub fn ample_test(&self, table: &RestrictionTable) -> Result<Verdict> {
        self.positivity(table, true)
    }

    /// Seshadri constant at the fixed point w·z: the minimum split-type
    /// entry over the curves through it. Refuses non-nef tables.
    pub fn seshadri(&self, table: &RestrictionTable, w: &WeylElement) -> Result<i64> {
        let nef = self.nef_test(table)?;
        if !nef.holds {
            let witness = nef
                .witness
                .map(|(id, entry)| format!("entry {entry} on class {id}"))
                .unwrap_or_else(|| "unknown".into());
            return Err(Error::NonNef { witness });
        }
        let curves = self.curves_through(w);
        if curves.is_empty() {
            return Err(Error::Invalid(
                "no invariant curves: σ is the identity (degenerate case)".into(),
            ));
        }
        seshadri_engine(&curves, |class| table.split(&class.kind.id()))
    }
}

/// Involution input: an explicit matrix, or a named shortcut.
///
/// Shortcuts build σ = −π for an involutive Cartan-matrix automorphism π,
/// which is automatically Borel-compatible with no fixed roots:
/// * `"minus-identity"`: π = id;
/// * `"swap"`: π exchanges the two identical components of a product X×X;
/// * `"diagram:p1,…,pn"`: π is the given permutation of the simple roots
///   (1-based), checked to be an involutive symmetry of the Cartan matrix.
///
/// Matrices are row-major with columns the images of the simple roots:
/// σ(α_j) = Σ_i m[i][j] α_i. Mixed fixed/negated components and general
/// Borel-compatible involutions are expressed this way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvolutionSpec {
    Matrix(Vec<Vec<i64>>),
    Shortcut(String),
}

/// Resolves an `InvolutionSpec` to a matrix (rows) for `validate_involution`.
pub fn involution_matrix(rs: &RootSystem, spec: &InvolutionSpec) -> Result<Vec<Vec<i64>>> {
    let n = rs.rank();
    match spec {
        InvolutionSpec::Matrix(rows) => Ok(rows.clone()),
        InvolutionSpec::Shortcut(name) => {
            let perm: Vec<usize> = if name == "minus-identity" {
                (1..=n).collect()
            } else if name == "swap" {
                let comps = rs.components();
                if comps.len() != 2 || comps[0] != comps[1] {
                    return Err(Error::Invalid(
                        "\"swap\" requires a product of exactly two identical components".into(),
                    ));
                }
                let half = comps[0].rank;
                (1..=n)
                    .map(|i| if i <= half { i + half } else { i - half })
                    .collect()
            } else if let Some(list) = name.strip_prefix("diagram:") {
                list.split(',')
                    .map(|part| {
                        part.trim().parse::<usize>().map_err(|_| {
                            Error::Invalid(format!("bad diagram permutation entry {part:?}"))
                        })
                    })
                    .collect::<Result<_>>()?
            } else {
                return Err(Error::Invalid(format!(
                    "unknown involution shortcut {name:?} (expected \"minus-identity\", \
                     \"swap\" or \"diagram:<permutation>\")"
                )));
            };
            minus_permutation(rs, &perm)
        }
    }
}

// σ = −π as a matrix, after checking π is an involutive Cartan symmetry.
fn minus_permutation(rs: &RootSystem, perm: &[usize]) -> Result<Vec<Vec<i64>>> {
    let n = rs.rank();
    if perm.len() != n {
        return Err(Error::Invalid(format!("permutation must have {n} entries")));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p == 0 || p > n || seen[p - 1] {
            return Err(Error::Invalid("not a permutation of 1..=rank".into()));
        }
        seen[p - 1] = true;
    }
    for i in 0..n {
        if perm[perm[i] - 1] != i + 1 {
            return Err(Error::Invalid(
                "diagram permutation must be an involution".into(),
            ));
        }
        for j in 0..n {
            if rs.cartan()[perm[i] - 1][perm[j] - 1] != rs.cartan()[i][j] {
                return Err(Error::Invalid(
                    "permutation does not preserve the Cartan matrix".into(),
                ));
            }
        }
    }
    let mut rows = vec![vec![0i64; n]; n];
    for (j, &p) in perm.iter().enumerate() {
        rows[p - 1][j] = -1;
    }
    Ok(rows)
}

/// Parses the JSON-level involution field: a string shortcut or a matrix.
pub fn parse_involution_spec(text: &str) -> InvolutionSpec {
    InvolutionSpec::Shortcut(text.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;
    use crate::weyl::{enumerate_weyl, WeylElement};

    fn rs(t: &str) -> RootSystem {
        RootSystem::from_type(t).unwrap()
    }

    fn sd(t: &str, spec: InvolutionSpec) -> SymmetricSpaceData {
        let r = rs(t);
        let m = involution_matrix(&r, &spec).unwrap();
        validate_involution(&r, &m).unwrap()
    }

    fn minus_id(t: &str) -> SymmetricSpaceData {
        sd(t, InvolutionSpec::Shortcut("minus-identity".into()))
    }

    #[test]
    fn identity_is_degenerate() {
        let r = rs("A2");
        let data = validate_involution(&r, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(data.is_degenerate());
        assert_eq!(data.t2_rank(), 0);
        assert!(data.restricted_roots().is_empty());
        assert_eq!(data.fixed_levi_positive().len(), 3);
        assert!(data.curve_classes().is_empty());
        let report = data.minimal_rank_report();
        assert_eq!(report.t2_rank, 0);
        assert!(report.t1_matches_levi_span);
    }

    #[test]
    fn a1_split_involution() {
        let data = minus_id("A1");
        assert_eq!(data.t2_rank(), 1);
        assert_eq!(data.restricted_roots(), &[vec![2]]);
        let classes = data.curve_classes();
        assert_eq!(classes.len(), 2); // one Schubert (α1) + one restricted (2α1)
        assert_eq!(classes[0].kind.id(), "schubert:1");
        assert_eq!(classes[1].kind.id(), "restricted:2");
    }

    #[test]
    fn a1xa1_swap_involution() {
        let data = sd("A1xA1", InvolutionSpec::Shortcut("swap".into()));
        assert_eq!(data.t1_rank(), 1);
        assert_eq!(data.t2_rank(), 1);
        assert!(data.fixed_levi_positive().is_empty());
        assert_eq!(data.restricted_roots(), &[vec![1, 1]]);
        assert_eq!(data.curve_classes().len(), 3);
        // σ(α1) = −α2 and σ(α2) = −α1, directly
        let sigma =
            involution_matrix(&rs("A1xA1"), &InvolutionSpec::Shortcut("swap".into())).unwrap();
        assert_eq!(sigma, vec![vec![0, -1], vec![-1, 0]]);
    }

    #[test]
    fn mixed_component_involution() {
        // −id on the first A1, identity on the second
        let r = rs("A1xA1");
        let data = validate_involution(&r, &[vec![-1, 0], vec![0, 1]]).unwrap();
        assert_eq!(data.t1_rank(), 1);
        assert_eq!(data.t2_rank(), 1);
        assert_eq!(data.fixed_levi_positive().len(), 1);
        assert_eq!(data.restricted_roots(), &[vec![2, 0]]);
        assert_eq!(data.curve_classes().len(), 2);
        assert!(data.minimal_rank_report().t1_matches_levi_span);
    }

    #[test]
    fn a3_sp4_style_involution() {
        // σ fixes α1, α3 and sends α2 to −(α1+α2+α3): the rank-1 case with a
        // full Levi A1×A1. Columns are images; rows below.
        let r = rs("A3");
        let rows = vec![vec![1, -1, 0], vec![0, -1, 0], vec![0, -1, 1]];
        let data = validate_involution(&r, &rows).unwrap();
        assert_eq!(data.t1_rank(), 2);
        assert_eq!(data.t2_rank(), 1);
        assert_eq!(data.fixed_levi_positive().len(), 2);
        assert_eq!(data.restricted_roots(), &[vec![1, 2, 1]]);
        // |R⁺∖R⁺(L)| + |restricted| = (6 − 2) + 1
        assert_eq!(data.curve_classes().len(), 5);
        assert!(data.minimal_rank_report().t1_matches_levi_span);
    }

    #[test]
    fn diagram_shortcut_on_a2() {
        let data = sd("A2", InvolutionSpec::Shortcut("diagram:2,1".into()));
        assert_eq!(data.t1_rank(), 1);
        assert_eq!(data.t2_rank(), 1);
        assert!(data.fixed_levi_positive().is_empty());
        assert_eq!(data.restricted_roots(), &[vec![1, 1], vec![2, 2]]);
        assert_eq!(data.curve_classes().len(), 5);
    }

    #[test]
    fn invalid_involutions_are_rejected() {
        let r = rs("A2");
        // not an involution
        assert!(validate_involution(&r, &[vec![0, -1], vec![1, -1]]).is_err());
        // preserves the lattice but not the root set
        assert!(validate_involution(&r, &[vec![1, 1], vec![0, -1]]).is_err());
        // positive diagram flip without the minus sign: Borel compatibility fails
        assert!(validate_involution(&r, &[vec![0, 1], vec![1, 0]]).is_err());
        // bad shapes and shortcuts
        assert!(validate_involution(&r, &[vec![1]]).is_err());
        assert!(involution_matrix(&r, &InvolutionSpec::Shortcut("swap".into())).is_err());
        assert!(involution_matrix(&r, &InvolutionSpec::Shortcut("diagram:1,1".into())).is_err());
        assert!(involution_matrix(&r, &InvolutionSpec::Shortcut("nope".into())).is_err());
    }

    #[test]
    fn sigma_orbit_invariants_on_a_catalog() {
        for (t, spec) in [
            ("A1", InvolutionSpec::Shortcut("minus-identity".into())),
            ("A1xA1", InvolutionSpec::Shortcut("minus-identity".into())),
            ("A1xA1", InvolutionSpec::Shortcut("swap".into())),
            (
                "A1xA1",
                InvolutionSpec::Matrix(vec![vec![-1, 0], vec![0, 1]]),
            ),
            ("A2", InvolutionSpec::Shortcut("minus-identity".into())),
            ("A2", InvolutionSpec::Shortcut("diagram:2,1".into())),
            ("A2", InvolutionSpec::Matrix(vec![vec![1, -1], vec![0, -1]])),
            ("A3", InvolutionSpec::Shortcut("minus-identity".into())),
            ("A3", InvolutionSpec::Shortcut("diagram:3,2,1".into())),
            (
                "A3",
                InvolutionSpec::Matrix(vec![vec![1, -1, 0], vec![0, -1, 0], vec![0, -1, 1]]),
            ),
        ] {
            let data = sd(t, spec.clone());
            let r = data.root_system().clone();
            // σ permutes R; fixed Levi is pointwise fixed
            for beta in r.positive_roots() {
                assert!(r.is_root(&data.involution().apply(beta)));
            }
            for alpha in data.fixed_levi_positive() {
                assert_eq!(&data.involution().apply(alpha), alpha);
            }
            // restricted roots in the −1 eigenspace
            for gamma in data.restricted_roots() {
                let image = data.involution().apply(&Root::new(gamma.clone()));
                assert_eq!(image, Root::new(gamma.iter().map(|c| -c).collect()));
            }
            // class count formula
            assert_eq!(
                data.curve_classes().len(),
                r.positive_roots().len() - data.fixed_levi_positive().len()
                    + data.restricted_roots().len(),
                "{t} {spec:?}"
            );
            // eigenvalue multiplicities add up
            assert_eq!(data.t1_rank() + data.t2_rank(), r.rank());
        }
    }

    #[test]
    fn verdicts_on_hand_tables() {
        let data = sd("A1xA1", InvolutionSpec::Shortcut("swap".into()));
        let ids: Vec<String> = data.curve_classes().iter().map(|c| c.kind.id()).collect();
        assert_eq!(ids, vec!["schubert:0,1", "schubert:1,0", "restricted:1,1"]);

        let table = |vals: [&[i64]; 3]| {
            RestrictionTable::new(
                ids.iter()
                    .cloned()
                    .zip(vals.iter().map(|v| v.to_vec()))
                    .collect(),
            )
        };

        let zero = table([&[0], &[0], &[0]]);
        assert!(data.nef_test(&zero).unwrap().holds);
        assert!(!data.ample_test(&zero).unwrap().holds);

        let with_negative = table([&[2, 1], &[3, -1], &[1, 5]]);
        let v = data.nef_test(&with_negative).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap(), ("schubert:1,0".to_string(), -1));

        let ample = table([&[2], &[3], &[1]]);
        assert!(data.ample_test(&ample).unwrap().holds);
        // ε at the base point and at every translate: min over {2, 3, 1} = 1
        let e = WeylElement::identity(data.root_system());
        assert_eq!(data.seshadri(&ample, &e).unwrap(), 1);
        for w in enumerate_weyl(data.root_system()).unwrap() {
            assert_eq!(data.curves_through(&w).len(), 3);
            assert_eq!(data.seshadri(&ample, &w).unwrap(), 1);
        }
        // ample ⟹ ε ≥ 1
        assert!(data.seshadri(&ample, &e).unwrap() >= 1);

        // constant tables give ε = that constant
        let constant = table([&[4], &[4], &[4]]);
        assert_eq!(data.seshadri(&constant, &e).unwrap(), 4);

        // non-nef tables are refused
        assert!(matches!(
            data.seshadri(&with_negative, &e),
            Err(Error::NonNef { .. })
        ));

        // missing class
        let incomplete = RestrictionTable::new(
            [("schubert:1,0".to_string(), vec![1])]
                .into_iter()
                .collect(),
        );
        assert!(matches!(
            data.nef_test(&incomplete),
            Err(Error::MissingTableEntry(_))
        ));
    }

    #[test]
    fn seshadri_is_additive_in_table_unions() {
        let data = minus_id("A1");
        let ids: Vec<String> = data.curve_classes().iter().map(|c| c.kind.id()).collect();
        let t1 = RestrictionTable::new(ids.iter().cloned().zip([vec![2], vec![5]]).collect());
        let t2 = RestrictionTable::new(ids.iter().cloned().zip([vec![7], vec![3]]).collect());
        let union =
            RestrictionTable::new(ids.iter().cloned().zip([vec![2, 7], vec![5, 3]]).collect());
        let e = WeylElement::identity(data.root_system());
        let s1 = data.seshadri(&t1, &e).unwrap();
        let s2 = data.seshadri(&t2, &e).unwrap();
        assert_eq!(data.seshadri(&union, &e).unwrap(), s1.min(s2));
    }

    #[test]
    fn degenerate_seshadri_is_an_error() {
        let r = rs("A1");
        let data = validate_involution(&r, &[vec![1]]).unwrap();
        let empty = RestrictionTable::new(BTreeMap::new());
        let e = WeylElement::identity(&r);
        assert!(data.seshadri(&empty, &e).is_err());
    }
}
