//! Combinatorial model of an iterated ℙ¹-fibration built from a reduced
//! word: torus-fixed points, invariant curves, line-bundle degrees on those
//! curves, positivity tests and Seshadri constants.
//!
//! The variety for a reduced word (i_1, …, i_r) is an r-fold tower of ℙ¹
//! fibrations, and the model works entirely on the fixed-point combinatorics
//! that tower forces:
//!
//! * fixed points are galleries: bit vectors b ∈ {0,1}^r, bit j choosing the
//!   identity or the reflection s_{i_j} at slot j;
//! * invariant curves are generated recursively as the ℙ¹ fibers of the last
//!   stage plus the two section lifts of the curves one stage down, which
//!   gives the (moving slot j, frozen bits elsewhere) indexing and the count
//!   r·2^{r−1};
//! * the line-bundle basis L_1, …, L_r comes from the ample generators of
//!   the factors of the ambient product of partial flag varieties, restricted
//!   through the standard embedding.
//!
//! Degrees of basis classes on model curves are computed two independent
//! ways and cross-checked on every call: the localization quotient (endpoint
//! weight difference divided by the tangent weight) and a closed form
//! |⟨ω_{i_m}, (u⁻¹ α_{i_j})∨⟩|. Any disagreement is a hard error: it cannot
//! be caused by input data.
//!
//! Completeness of the model curve set is exactly the GKM condition
//! (pairwise non-proportional tangent weights at every fixed point), which
//! `gkm_check` decides; when it fails, positivity and Seshadri answers are
//! tagged as model-curve verdicts rather than claimed unconditionally.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use crate::bundle::{self, BundleExpr, PicClass, SplitType};
use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, Weight};
use crate::weyl::{self, WeylElement, Word};

/// The variety of a reduced word, with its root system.
///
/// Basis-class degrees and the GKM report are computed lazily once per
/// variety and cached (the dual-route verification runs on first access);
/// the caches are thread-safe and do not affect any observable value.
#[derive(Debug, Clone)]
pub struct BsdhVariety {
    rs: RootSystem,
    word: Word,
    // degrees[curve_index * r + (m-1)], model_curves order; r ≤ CACHE_MAX_LEN
    degree_cache: OnceLock<std::result::Result<Vec<i64>, String>>,
    gkm_cache: OnceLock<std::result::Result<GkmReport, String>>,
}

/// A torus-fixed point: one bit per slot, 1 = use the reflection there.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GalleryPoint {
    bits: Vec<bool>,
}

impl GalleryPoint {
    pub fn new(bits: Vec<bool>) -> Self {
        GalleryPoint { bits }
    }

    /// Parses a bit string like `"010"`; the length must match the word.
    pub fn parse(s: &str, r: usize) -> Result<Self> {
        if s.len() != r {
            return Err(Error::Invalid(format!(
                "point bit-string {s:?} has length {}, expected the word length {r}",
                s.len()
            )));
        }
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Invalid(format!(
                    "point bit-string {s:?} has non-binary digit"
                ))),
            })
            .collect::<Result<_>>()?;
        Ok(GalleryPoint { bits })
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn id(&self) -> String {
        self.bits
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for GalleryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

/// A model invariant curve: slot `moving` sweeps its ℙ¹, the other slots are
/// frozen at `bits` (the entry at the moving slot is ignored).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModelCurve {
    moving: usize,
    bits: Vec<bool>,
}

impl ModelCurve {
    pub fn new(moving: usize, mut bits: Vec<bool>) -> Self {
        bits[moving - 1] = false;
        ModelCurve { moving, bits }
    }

    /// 1-based moving slot.
    pub fn moving(&self) -> usize {
        self.moving
    }

    pub fn frozen_bits(&self) -> &[bool] {
        &self.bits
    }

    /// The two fixed endpoints: moving bit 0 and 1.
    pub fn endpoints(&self) -> (GalleryPoint, GalleryPoint) {
        let mut lo = self.bits.clone();
        let mut hi = self.bits.clone();
        lo[self.moving - 1] = false;
        hi[self.moving - 1] = true;
        (GalleryPoint::new(lo), GalleryPoint::new(hi))
    }

    pub fn passes_through(&self, x: &GalleryPoint) -> bool {
        self.bits
            .iter()
            .zip(x.bits())
            .enumerate()
            .all(|(k, (b, xb))| k + 1 == self.moving || b == xb)
    }

    /// Canonical id: the frozen bits with `*` at the moving slot, e.g. `1*0`.
    pub fn id(&self) -> String {
        self.bits
            .iter()
            .enumerate()
            .map(|(k, &b)| {
                if k + 1 == self.moving {
                    '*'
                } else if b {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }
}

impl fmt::Display for ModelCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

/// Positivity verdict; `model_curve_only` is set when the GKM condition
/// failed and the answer is certified over model curves only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<CurveWitness>,
    pub model_curve_only: bool,
}

/// A failing curve and the offending split-type entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveWitness {
    pub curve_id: String,
    pub entry: i64,
}

/// A Seshadri value together with the model-curve tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeshadriValue {
    pub value: i64,
    pub model_curve_only: bool,
}

/// Outcome of the tangent-weight collision scan.
#[derive(Debug, Clone)]
pub struct GkmReport {
    pub ok: bool,
    /// (fixed point id, slot pair) for every proportional pair found.
    pub collisions: Vec<(String, usize, usize)>,
}

/// A curve of the ambient product of partial flag varieties, classified by a
/// positive root, an r-tuple of minimal coset representatives and the
/// nonempty set of factors in which it actually moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbientCurve {
    pub root: Root,
    pub reps: Vec<WeylElement>,
    pub moving: BTreeSet<usize>,
}

const MAX_WORD_LEN: usize = 20;
const MAX_AMBIENT_TRIPLES: u128 = 4_000_000;
// above this length the degree table is too large to precompute
const CACHE_MAX_LEN: usize = 12;

impl BsdhVariety {
    /// Validates the word (letters in range, reduced) and builds the variety.
    pub fn new(rs: RootSystem, word: Word) -> Result<Self> {
        if let Some(position) = weyl::reduced_failure(&rs, &word)? {
            return Err(Error::NotReduced { position });
        }
        Ok(BsdhVariety {
            rs,
            word,
            degree_cache: OnceLock::new(),
            gkm_cache: OnceLock::new(),
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Length r of the word; the variety has dimension r.
    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// The letter i_j at slot j (1-based).
    pub fn letter(&self, j: usize) -> usize {
        self.word.letters()[j - 1]
    }

    fn guard_len(&self) -> Result<()> {
        if self.length() > MAX_WORD_LEN {
            return Err(Error::Guard(format!(
                "fixed-point and curve enumeration supports words of length ≤ {MAX_WORD_LEN}, got {}",
                self.length()
            )));
        }
        Ok(())
    }

    /// All 2^r fixed points in lexicographic bit order.
    pub fn fixed_points(&self) -> Result<Vec<GalleryPoint>> {
        self.guard_len()?;
        let r = self.length();
        let mut out = Vec::with_capacity(1 << r);
        for mask in 0u64..(1u64 << r) {
            let bits = (0..r).map(|k| mask >> (r - 1 - k) & 1 == 1).collect();
            out.push(GalleryPoint::new(bits));
        }
        Ok(out)
    }

    /// All r·2^{r−1} model curves, ordered by (moving slot, frozen bits).
    pub fn model_curves(&self) -> Result<Vec<ModelCurve>> {
        self.guard_len()?;
        let r = self.length();
        let mut out = Vec::new();
        for j in 1..=r {
            for mask in 0u64..(1u64 << (r - 1)) {
                let mut bits = Vec::with_capacity(r);
                let mut pos = 0;
                for k in 0..r {
                    if k + 1 == j {
                        bits.push(false);
                    } else {
                        bits.push(mask >> (r - 2 - pos) & 1 == 1);
                        pos += 1;
                    }
                }
                out.push(ModelCurve { moving: j, bits });
            }
        }
        Ok(out)
    }

    /// The r model curves through a fixed point, one per moving slot.
    pub fn curves_through(&self, x: &GalleryPoint) -> Vec<ModelCurve> {
        (1..=self.length())
            .map(|j| ModelCurve::new(j, x.bits().to_vec()))
            .collect()
    }

    // Product s_{i_1}^{b_1} ⋯ s_{i_m}^{b_m} of the slots ≤ m that are set.
    fn prefix(&self, bits: &[bool], upto: usize) -> WeylElement {
        let mut w = WeylElement::identity(&self.rs);
        for k in 1..=upto {
            if bits[k - 1] {
                let s = WeylElement::simple(&self.rs, self.letter(k)).expect("validated letter");
                w = w.mul(&self.rs, &s);
            }
        }
        w
    }

    /// Localization weight of the m-th basis class at a fixed point:
    /// `s_{i_1}^{b_1} ⋯ s_{i_m}^{b_m} (ω_{i_m})`.
    pub fn fixed_point_weight(&self, x: &GalleryPoint, m: usize) -> Result<Weight> {
        if m == 0 || m > self.length() {
            return Err(Error::Invalid(format!(
                "basis class index {m} out of range 1..={}",
                self.length()
            )));
        }
        let w = self.prefix(x.bits(), m);
        Ok(w.apply_weight(&self.rs, &self.rs.fundamental_weight(self.letter(m))?))
    }

    /// Tangent weight of a model curve: `g(α_{i_j})` for the prefix g of the
    /// frozen bits before the moving slot. Always a root (possibly negative).
    pub fn tangent_weight(&self, curve: &ModelCurve) -> Root {
        let j = curve.moving();
        let g = self.prefix(curve.frozen_bits(), j - 1);
        g.apply_root(
            &self
                .rs
                .simple_root(self.letter(j))
                .expect("validated letter"),
        )
    }

    /// Degree of the m-th basis class on a curve, by the localization
    /// quotient: the endpoint weight difference is an exact integer multiple
    /// of the tangent weight, and the degree is the absolute multiplier.
    pub fn degree_basis_gkm(&self, curve: &ModelCurve, m: usize) -> Result<i64> {
        let (x0, x1) = curve.endpoints();
        let diff = self
            .fixed_point_weight(&x0, m)?
            .sub(&self.fixed_point_weight(&x1, m)?);
        if diff.is_zero() {
            return Ok(0);
        }
        let tangent = self.rs.root_to_weight(&self.tangent_weight(curve));
        let k = integer_ratio(diff.coords(), tangent.coords()).ok_or_else(|| {
            Error::MathConsistency(format!(
                "endpoint weight difference of L{m} on curve {} is not an integer multiple \
                 of the tangent weight",
                curve.id()
            ))
        })?;
        Ok(k.abs())
    }

    /// Degree of the m-th basis class on a curve, closed form: 0 for m < j,
    /// and `|⟨ω_{i_m}, (u⁻¹ α_{i_j})∨⟩|` with `u = s_{i_{j+1}}^{b} ⋯ s_{i_m}^{b}`
    /// for m ≥ j.
    pub fn degree_basis_closed(&self, curve: &ModelCurve, m: usize) -> Result<i64> {
        if m == 0 || m > self.length() {
            return Err(Error::Invalid(format!(
                "basis class index {m} out of range 1..={}",
                self.length()
            )));
        }
        let j = curve.moving();
        if m < j {
            return Ok(0);
        }
        let mut u = WeylElement::identity(&self.rs);
        for k in j + 1..=m {
            if curve.frozen_bits()[k - 1] {
                let s = WeylElement::simple(&self.rs, self.letter(k))?;
                u = u.mul(&self.rs, &s);
            }
        }
        let pulled = u
            .inverse(&self.rs)
            .apply_root(&self.rs.simple_root(self.letter(j))?);
        let value = self.rs.pairing(
            &self.rs.fundamental_weight(self.letter(m))?,
            &self.rs.coroot(&pulled)?,
        );
        Ok(value.abs())
    }

    fn degree_basis_checked(&self, curve: &ModelCurve, m: usize) -> Result<i64> {
        let gkm = self.degree_basis_gkm(curve, m)?;
        let closed = self.degree_basis_closed(curve, m)?;
        if gkm != closed {
            return Err(Error::MathConsistency(format!(
                "degree of L{m} on curve {}: localization gives {gkm}, closed form gives {closed}",
                curve.id()
            )));
        }
        Ok(gkm)
    }

    // flat index of a curve in model_curves order
    fn curve_index(&self, curve: &ModelCurve) -> usize {
        let r = self.length();
        let mut bits_value = 0usize;
        for (k, &b) in curve.frozen_bits().iter().enumerate() {
            if k + 1 == curve.moving() {
                continue;
            }
            bits_value = bits_value << 1 | usize::from(b);
        }
        (curve.moving() - 1) * (1 << (r - 1)) + bits_value
    }

    /// Degree of the m-th basis class, both routes, cross-checked (cached
    /// per variety after the first full computation).
    pub fn degree_basis(&self, curve: &ModelCurve, m: usize) -> Result<i64> {
        if m == 0 || m > self.length() {
            return Err(Error::Invalid(format!(
                "basis class index {m} out of range 1..={}",
                self.length()
            )));
        }
        if self.length() > CACHE_MAX_LEN {
            return self.degree_basis_checked(curve, m);
        }
        let r = self.length();
        let table = self.degree_cache.get_or_init(|| {
            let mut out = Vec::new();
            for c in self.model_curves().map_err(|e| e.to_string())? {
                for k in 1..=r {
                    out.push(
                        self.degree_basis_checked(&c, k)
                            .map_err(|e| e.to_string())?,
                    );
                }
            }
            Ok(out)
        });
        match table {
            Ok(t) => Ok(t[self.curve_index(curve) * r + (m - 1)]),
            Err(msg) => Err(Error::MathConsistency(msg.clone())),
        }
    }

    /// Total degree of a Picard class on a curve.
    pub fn degree(&self, class: &PicClass, curve: &ModelCurve) -> Result<i64> {
        if class.0.len() != self.length() {
            return Err(Error::Invalid(format!(
                "Picard class has {} coordinates, expected the word length {}",
                class.0.len(),
                self.length()
            )));
        }
        let mut total: i64 = 0;
        for (m, &a) in class.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let d = self.degree_basis(curve, m + 1)?;
            total = a
                .checked_mul(d)
                .and_then(|t| total.checked_add(t))
                .ok_or(Error::Overflow("curve degree"))?;
        }
        Ok(total)
    }

    /// Split type of a bundle expression on a model curve.
    pub fn split_type(&self, expr: &BundleExpr, curve: &ModelCurve) -> Result<SplitType> {
        bundle::restrict(expr, &curve.id(), &|class| self.degree(class, curve))
    }

    /// GKM condition: at every fixed point the incident tangent weights are
    /// pairwise non-proportional over the rationals. Cached per variety.
    pub fn gkm_check(&self) -> Result<GkmReport> {
        let cached = self.gkm_cache.get_or_init(|| {
            let mut collisions = Vec::new();
            for x in self.fixed_points().map_err(|e| e.to_string())? {
                let weights: Vec<Root> = self
                    .curves_through(&x)
                    .iter()
                    .map(|c| self.tangent_weight(c))
                    .collect();
                for a in 0..weights.len() {
                    for b in a + 1..weights.len() {
                        if proportional(weights[a].coords(), weights[b].coords()) {
                            collisions.push((x.id(), a + 1, b + 1));
                        }
                    }
                }
            }
            Ok(GkmReport {
                ok: collisions.is_empty(),
                collisions,
            })
        });
        match cached {
            Ok(report) => Ok(report.clone()),
            Err(msg) => Err(Error::Guard(msg.clone())),
        }
    }

    fn positivity(&self, expr: &BundleExpr, strict: bool) -> Result<Verdict> {
        bundle::rank(expr)?;
        let model_curve_only = !self.gkm_check()?.ok;
        for curve in self.model_curves()? {
            let st = self.split_type(expr, &curve)?;
            let bad = st
                .degrees()
                .iter()
                .find(|&&d| if strict { d <= 0 } else { d < 0 });
            if let Some(&entry) = bad {
                return Ok(Verdict {
                    holds: false,
                    witness: Some(CurveWitness {
                        curve_id: curve.id(),
                        entry,
                    }),
                    model_curve_only,
                });
            }
        }
        Ok(Verdict {
            holds: true,
            witness: None,
            model_curve_only,
        })
    }

    /// Nef iff every split-type entry over every invariant curve is ≥ 0.
    pub fn nef_test(&self, expr: &BundleExpr) -> Result<Verdict> {
        self.positivity(expr, false)
    }

    /// Ample iff every split-type entry over every invariant curve is > 0.
    pub fn ample_test(&self, expr: &BundleExpr) -> Result<Verdict> {
        self.positivity(expr, true)
    }

    /// Seshadri constant of a nef bundle at a fixed point: the minimum
    /// split-type entry over the r curves through the point. Refuses non-nef
    /// input, and the empty word (a point has no invariant curves).
    pub fn seshadri(&self, expr: &BundleExpr, x: &GalleryPoint) -> Result<SeshadriValue> {
        if self.length() == 0 {
            return Err(Error::Invalid(
                "seshadri constant undefined on the empty word: no invariant curves".into(),
            ));
        }
        if x.bits().len() != self.length() {
            return Err(Error::Invalid(format!(
                "point has {} bits, expected the word length {}",
                x.bits().len(),
                self.length()
            )));
        }
        let nef = self.nef_test(expr)?;
        if !nef.holds {
            let witness = nef
                .witness
                .map(|w| format!("entry {} on curve {}", w.entry, w.curve_id))
                .unwrap_or_else(|| "unknown".into());
            return Err(Error::NonNef { witness });
        }
        let curves = self.curves_through(x);
        let value = bundle::seshadri_engine(&curves, |c| self.split_type(expr, c))?;
        Ok(SeshadriValue {
            value,
            model_curve_only: nef.model_curve_only,
        })
    }

    // Minimal representative of w W_J for J = S ∖ {α_omit}.
    fn min_rep(&self, w: &WeylElement, omit: usize) -> WeylElement {
        let mut v = w.clone();
        'outer: loop {
            for j in 1..=self.rs.rank() {
                if j == omit {
                    continue;
                }
                let alpha = self.rs.simple_root(j).expect("checked index");
                if v.apply_root(&alpha).is_negative() {
                    let s = WeylElement::simple(&self.rs, j).expect("checked index");
                    v = v.mul(&self.rs, &s);
                    continue 'outer;
                }
            }
            return v;
        }
    }

    /// All ambient-curve triples (β, v, A): A nonempty, every v_j a minimal
    /// coset representative omitting α_{i_j}, and β in every inversion set
    /// R⁺(v_j⁻¹) for j ∈ A. These index the invariant curves of the ambient
    /// product up to torus translation.
    pub fn ambient_curves(&self) -> Result<Vec<AmbientCurve>> {
        let r = self.length();
        let reps: Vec<Vec<WeylElement>> = self
            .word
            .letters()
            .iter()
            .map(|&i| weyl::min_coset_reps(&self.rs, i))
            .collect::<Result<_>>()?;
        let mut estimate: u128 =
            (1u128 << r).saturating_mul(self.rs.positive_roots().len() as u128);
        for rj in &reps {
            estimate = estimate.saturating_mul(rj.len() as u128);
        }
        if estimate > MAX_AMBIENT_TRIPLES {
            return Err(Error::Guard(format!(
                "ambient curve enumeration bound exceeded ({estimate} > {MAX_AMBIENT_TRIPLES}); \
                 practical for rank ≤ 3 and words of length ≤ 4"
            )));
        }
        let inverses: Vec<Vec<WeylElement>> = reps
            .iter()
            .map(|rj| rj.iter().map(|v| v.inverse(&self.rs)).collect())
            .collect();
        let mut out = Vec::new();
        let mut choice = vec![0usize; r];
        loop {
            for beta in self.rs.positive_roots() {
                let in_inversions: Vec<usize> = (0..r)
                    .filter(|&j| inverses[j][choice[j]].apply_root(beta).is_negative())
                    .map(|j| j + 1)
                    .collect();
                if in_inversions.is_empty() {
                    continue;
                }
                // all nonempty subsets of the eligible slots
                for mask in 1u64..(1u64 << in_inversions.len()) {
                    let moving: BTreeSet<usize> = in_inversions
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| mask >> k & 1 == 1)
                        .map(|(_, &j)| j)
                        .collect();
                    out.push(AmbientCurve {
                        root: beta.clone(),
                        reps: (0..r).map(|j| reps[j][choice[j]].clone()).collect(),
                        moving,
                    });
                }
            }
            // odometer over the rep choices
            let mut pos = r;
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                choice[pos] += 1;
                if choice[pos] < reps[pos].len() {
                    break;
                }
                choice[pos] = 0;
            }
        }
    }

    /// Degree of a Picard class on an ambient curve:
    /// `Σ_{j ∈ moving} a_j · (−⟨ω_{i_j}, (v_j⁻¹ β)∨⟩)`; every coefficient is
    /// ≥ 0 because v_j⁻¹ β is a negative root. Cross-checked per factor
    /// against the endpoint weight difference between v_j and s_β v_j.
    pub fn ambient_degree(&self, class: &PicClass, curve: &AmbientCurve) -> Result<i64> {
        self.validate_ambient(curve)?;
        if class.0.len() != self.length() {
            return Err(Error::Invalid(format!(
                "Picard class has {} coordinates, expected the word length {}",
                class.0.len(),
                self.length()
            )));
        }
        let beta_w = self.rs.root_to_weight(&curve.root);
        let mut total: i64 = 0;
        for &j in &curve.moving {
            let v = &curve.reps[j - 1];
            let omega = self.rs.fundamental_weight(self.letter(j))?;
            let pulled = v.inverse(&self.rs).apply_root(&curve.root);
            let k = self.rs.pairing(&omega, &self.rs.coroot(&pulled)?);
            // factor-j localization cross-check: v(ω) − s_β v(ω) = k·β
            let at_v = v.apply_weight(&self.rs, &omega);
            let reflected = self.rs.reflect_weight_by_root(&curve.root, &at_v)?;
            let diff = at_v.sub(&reflected);
            let expected: Vec<i64> = beta_w.coords().iter().map(|c| c * k).collect();
            if diff.coords() != expected.as_slice() {
                return Err(Error::MathConsistency(format!(
                    "ambient degree of factor {j}: formula coefficient {k} does not match the \
                     endpoint weight difference"
                )));
            }
            let a = class.0[j - 1];
            total = a
                .checked_mul(-k)
                .and_then(|t| total.checked_add(t))
                .ok_or(Error::Overflow("ambient curve degree"))?;
        }
        Ok(total)
    }

    fn validate_ambient(&self, curve: &AmbientCurve) -> Result<()> {
        let r = self.length();
        if curve.reps.len() != r {
            return Err(Error::Invalid(format!(
                "ambient curve has {} representatives, expected {r}",
                curve.reps.len()
            )));
        }
        if curve.moving.is_empty() {
            return Err(Error::Invalid(
                "ambient curve must move in at least one factor".into(),
            ));
        }
        if !self.rs.is_positive_root(&curve.root) {
            return Err(Error::NotARoot(curve.root.to_string()));
        }
        for (j0, v) in curve.reps.iter().enumerate() {
            let omit = self.letter(j0 + 1);
            for k in 1..=self.rs.rank() {
                if k != omit && !v.apply_root(&self.rs.simple_root(k)?).is_positive() {
                    return Err(Error::Invalid(format!(
                        "representative at slot {} is not minimal in its coset",
                        j0 + 1
                    )));
                }
            }
        }
        for &j in &curve.moving {
            if j == 0 || j > r {
                return Err(Error::Invalid(format!(
                    "moving slot {j} out of range 1..={r}"
                )));
            }
            let pulled = curve.reps[j - 1].inverse(&self.rs).apply_root(&curve.root);
            if !pulled.is_negative() {
                return Err(Error::Invalid(format!(
                    "root {} is not in the inversion set of the slot-{j} representative",
                    curve.root
                )));
            }
        }
        Ok(())
    }

    /// Image of a model curve in the ambient product: the root is the
    /// positive form of the tangent weight, factor m moves iff the basis
    /// degree there is nonzero, and each moving factor takes the endpoint
    /// representative whose inverse sends the root negative.
    pub fn to_ambient(&self, curve: &ModelCurve) -> Result<AmbientCurve> {
        let tangent = self.tangent_weight(curve);
        let beta = if tangent.is_positive() {
            tangent
        } else {
            tangent.negated()
        };
        let (x0, x1) = curve.endpoints();
        let mut reps = Vec::with_capacity(self.length());
        let mut moving = BTreeSet::new();
        for m in 1..=self.length() {
            let omit = self.letter(m);
            let r0 = self.min_rep(&self.prefix(x0.bits(), m), omit);
            let r1 = self.min_rep(&self.prefix(x1.bits(), m), omit);
            if r0 == r1 {
                reps.push(r0);
                continue;
            }
            moving.insert(m);
            let pick = [r0, r1]
                .into_iter()
                .find(|v| v.inverse(&self.rs).apply_root(&beta).is_negative())
                .ok_or_else(|| {
                    Error::MathConsistency(format!(
                        "no endpoint representative of factor {m} inverts {beta} on curve {}",
                        curve.id()
                    ))
                })?;
            reps.push(pick);
        }
        let ambient = AmbientCurve {
            root: beta,
            reps,
            moving,
        };
        self.validate_ambient(&ambient)?;
        Ok(ambient)
    }

    /// GKM graph in DOT: vertices are gallery bit-strings, edges are model
    /// curves labeled `j; tangent weight; [deg L_1, …, deg L_r]`. Stable
    /// ordering throughout.
    pub fn gkm_dot(&self) -> Result<String> {
        let mut out = String::from("graph gkm {\n");
        for x in self.fixed_points()? {
            out.push_str(&format!("  \"p{}\";\n", x.id()));
        }
        for curve in self.model_curves()? {
            let (x0, x1) = curve.endpoints();
            let degrees = (1..=self.length())
                .map(|m| self.degree_basis(&curve, m).map(|d| d.to_string()))
                .collect::<Result<Vec<_>>>()?
                .join(",");
            let tangent = self.tangent_weight(&curve);
            out.push_str(&format!(
                "  \"p{}\" -- \"p{}\" [label=\"{}; {}; [{}]\"];\n",
                x0.id(),
                x1.id(),
                curve.moving(),
                tangent,
                degrees
            ));
        }
        out.push_str("}\n");
        Ok(out)
    }
}

// diff = k·tangent for an integer k, if any.
fn integer_ratio(diff: &[i64], tangent: &[i64]) -> Option<i64> {
    let mut k: Option<i64> = None;
    for (&d, &t) in diff.iter().zip(tangent) {
        if t == 0 {
            if d != 0 {
                return None;
            }
            continue;
        }
        if d % t != 0 {
            return None;
        }
        let q = d / t;
        match k {
            None => k = Some(q),
            Some(prev) if prev != q => return None,
            _ => {}
        }
    }
    k.or(Some(0))
}

fn proportional(a: &[i64], b: &[i64]) -> bool {
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i] * b[j] != a[j] * b[i] {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

    fn variety(t: &str, letters: &[usize]) -> BsdhVariety {
        BsdhVariety::new(RootSystem::from_type(t).unwrap(), Word(letters.to_vec())).unwrap()
    }

    #[test]
    fn build_validates_reducedness() {
        assert_eq!(variety("A2", &[1, 2]).length(), 2);
        assert_eq!(variety("A2", &[1, 2, 1]).length(), 3);
        match BsdhVariety::new(RootSystem::from_type("A2").unwrap(), Word(vec![1, 1])) {
            Err(Error::NotReduced { position }) => assert_eq!(position, 2),
            other => panic!("expected NotReduced, got {other:?}"),
        }
    }

    #[test]
    fn fixed_point_and_curve_counts() {
        for (letters, r) in [(vec![1], 1usize), (vec![1, 2], 2), (vec![1, 2, 1], 3)] {
            let z = variety("A2", &letters);
            let points = z.fixed_points().unwrap();
            let curves = z.model_curves().unwrap();
            assert_eq!(points.len(), 1 << r);
            assert_eq!(curves.len(), r * (1 << (r - 1)));
            for x in &points {
                let through = z.curves_through(x);
                assert_eq!(through.len(), r);
                for c in &through {
                    assert!(c.passes_through(x));
                    let (a, b) = c.endpoints();
                    assert!(&a == x || &b == x);
                }
            }
            // every curve has two endpoints, so incidences double-count
            let incidences: usize = points
                .iter()
                .map(|x| curves.iter().filter(|c| c.passes_through(x)).count())
                .sum();
            assert_eq!(incidences, 2 * curves.len());
        }
    }

    #[test]
    fn curve_count_satisfies_the_fibration_recursion() {
        // c_r = 2 c_{r-1} + 2^{r-1}, c_1 = 1 (section lifts plus fibers)
        let mut expected = 1usize;
        for (r, letters) in [(1, vec![1]), (2, vec![1, 2]), (3, vec![1, 2, 1])] {
            if r > 1 {
                expected = 2 * expected + (1 << (r - 1));
            }
            assert_eq!(
                variety("A2", &letters).model_curves().unwrap().len(),
                expected
            );
        }
    }

    #[test]
    fn fixed_point_weights() {
        let z = variety("A2", &[1, 2]);
        let zero = GalleryPoint::parse("00", 2).unwrap();
        assert_eq!(
            z.fixed_point_weight(&zero, 1).unwrap(),
            z.root_system().fundamental_weight(1).unwrap()
        );
        // x = (1,0), m = 1: s1(ω1) = ω1 − α1
        let x = GalleryPoint::parse("10", 2).unwrap();
        let expected = z
            .root_system()
            .reflect_weight(1, &z.root_system().fundamental_weight(1).unwrap())
            .unwrap();
        assert_eq!(z.fixed_point_weight(&x, 1).unwrap(), expected);
        // bits beyond position m do not matter
        let y = GalleryPoint::parse("11", 2).unwrap();
        assert_eq!(
            z.fixed_point_weight(&x, 1).unwrap(),
            z.fixed_point_weight(&y, 1).unwrap()
        );
    }

    #[test]
    fn tangent_weights() {
        let z = variety("A2", &[1, 2]);
        for curve in z.model_curves().unwrap() {
            if curve.moving() == 1 {
                assert_eq!(z.tangent_weight(&curve), Root::new(vec![1, 0]));
            }
        }
        // curve (j=2, b1=1): s1(α2) = α1+α2
        let c = ModelCurve::new(2, vec![true, false]);
        assert_eq!(z.tangent_weight(&c), Root::new(vec![1, 1]));
    }

    #[test]
    fn basis_degrees_on_a2_word_12() {
        let z = variety("A2", &[1, 2]);
        // fiber curve (j=2, b1=0): L1 pulled back from the base has degree 0
        let fiber = ModelCurve::new(2, vec![false, false]);
        assert_eq!(z.degree(&PicClass(vec![1, 0]), &fiber).unwrap(), 0);
        // section curve (j=1, b2=1): deg L2 = ⟨ω2, (α1+α2)∨⟩ = 1
        let section = ModelCurve::new(1, vec![false, true]);
        assert_eq!(z.degree(&PicClass(vec![0, 1]), &section).unwrap(), 1);
        // zero class is zero on every curve
        for c in z.model_curves().unwrap() {
            assert_eq!(z.degree(&PicClass::zero(2), &c).unwrap(), 0);
        }
    }

    #[test]
    fn a2_word_12_has_the_worked_degree_table() {
        // the four curves carry the degree functionals a1, a1+a2, a2, a2
        let z = variety("A2", &[1, 2]);
        let mut table: Vec<Vec<i64>> = z
            .model_curves()
            .unwrap()
            .iter()
            .map(|c| (1..=2).map(|m| z.degree_basis(c, m).unwrap()).collect())
            .collect();
        table.sort();
        assert_eq!(table, vec![vec![0, 1], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn two_degree_routes_agree_on_small_corpus() {
        for t in ["A2", "B2", "G2"] {
            let rs = RootSystem::from_type(t).unwrap();
            for word in weyl::reduced_words(&rs, 4) {
                let z = BsdhVariety::new(rs.clone(), word).unwrap();
                for curve in z.model_curves().unwrap() {
                    for m in 1..=z.length() {
                        let gkm = z.degree_basis_gkm(&curve, m).unwrap();
                        let closed = z.degree_basis_closed(&curve, m).unwrap();
                        assert_eq!(gkm, closed);
                        assert!(gkm >= 0);
                    }
                }
            }
        }
    }

    #[test]
    fn corrupted_degree_formula_is_detected() {
        // fault injection: dropping the u⁻¹ conjugation from the closed form
        // must disagree with the localization route somewhere
        let z = variety("A2", &[1, 2]);
        let mut mismatch = false;
        for curve in z.model_curves().unwrap() {
            for m in curve.moving()..=z.length() {
                let wrong = {
                    let alpha = z
                        .root_system()
                        .simple_root(z.letter(curve.moving()))
                        .unwrap();
                    let omega = z.root_system().fundamental_weight(z.letter(m)).unwrap();
                    z.root_system()
                        .pairing(&omega, &z.root_system().coroot(&alpha).unwrap())
                        .abs()
                };
                if wrong != z.degree_basis_gkm(&curve, m).unwrap() {
                    mismatch = true;
                }
            }
        }
        assert!(
            mismatch,
            "the cross-check must be able to catch a corrupted formula"
        );
    }

    #[test]
    fn gkm_check_on_small_words() {
        assert!(variety("A2", &[1]).gkm_check().unwrap().ok);
        assert!(variety("A2", &[1, 2]).gkm_check().unwrap().ok);
        // search the shortest collision over A2 words: (1,2,1) at point 100
        // has incident weights α1 and −α1 in slots 1 and 3
        let rs = RootSystem::from_type("A2").unwrap();
        let mut first_collision = None;
        'words: for word in weyl::reduced_words(&rs, 3) {
            let z = BsdhVariety::new(rs.clone(), word.clone()).unwrap();
            let report = z.gkm_check().unwrap();
            if !report.ok {
                first_collision = Some((word, report));
                break 'words;
            }
        }
        let (word, report) = first_collision.expect("a length-3 collision exists");
        assert_eq!(word.letters(), &[1, 2, 1]);
        assert!(report.collisions.contains(&("100".into(), 1, 3)));
    }

    #[test]
    fn nef_and_ample_tests() {
        let z = variety("A2", &[1, 2]);
        let zero = BundleExpr::line(vec![0, 0]);
        let v = z.nef_test(&zero).unwrap();
        assert!(v.holds && !v.model_curve_only);
        assert!(!z.ample_test(&zero).unwrap().holds);

        let ones = BundleExpr::line(vec![1, 1]);
        assert!(z.ample_test(&ones).unwrap().holds);

        let mixed = BundleExpr::line(vec![1, 0]);
        assert!(z.nef_test(&mixed).unwrap().holds);
        let amp = z.ample_test(&mixed).unwrap();
        assert!(!amp.holds);
        let w = amp.witness.unwrap();
        assert_eq!(w.entry, 0); // degree 0 on a fiber curve
        assert!(w.curve_id.starts_with('*') || w.curve_id.contains('*'));

        let negative = BundleExpr::line(vec![-1, 1]);
        let v = z.nef_test(&negative).unwrap();
        assert!(!v.holds);
        assert!(v.witness.unwrap().entry < 0);
    }

    #[test]
    fn seshadri_values_on_the_worked_instance() {
        let z = variety("A2", &[1, 2]);
        let ones = BundleExpr::line(vec![1, 1]);
        for x in z.fixed_points().unwrap() {
            assert_eq!(z.seshadri(&ones, &x).unwrap().value, 1);
            assert_eq!(
                z.seshadri(&BundleExpr::line(vec![0, 0]), &x).unwrap().value,
                0
            );
        }
        // non-nef input is refused
        let bad = BundleExpr::line(vec![-1, 0]);
        let x = GalleryPoint::parse("00", 2).unwrap();
        assert!(matches!(z.seshadri(&bad, &x), Err(Error::NonNef { .. })));
    }

    #[test]
    fn seshadri_additivity_and_scaling() {
        let z = variety("B2", &[1, 2, 1]);
        let e = BundleExpr::line(vec![1, 2, 0]);
        let f = BundleExpr::sym(2, BundleExpr::line(vec![2, 0, 1]));
        let sum = BundleExpr::Sum(vec![e.clone(), f.clone()]);
        for x in z.fixed_points().unwrap() {
            let se = z.seshadri(&e, &x).unwrap().value;
            let sf = z.seshadri(&f, &x).unwrap().value;
            assert_eq!(z.seshadri(&sum, &x).unwrap().value, se.min(sf));
        }
        for k in 0..4 {
            let scaled = BundleExpr::Line(PicClass(vec![1, 2, 0]).scaled(k).unwrap());
            let x = GalleryPoint::parse("010", 3).unwrap();
            assert_eq!(
                z.seshadri(&scaled, &x).unwrap().value,
                k * z.seshadri(&e, &x).unwrap().value
            );
        }
    }

    #[test]
    fn empty_word_is_a_point() {
        let z = variety("A2", &[]);
        assert_eq!(z.fixed_points().unwrap().len(), 1);
        assert!(z.model_curves().unwrap().is_empty());
        assert!(z.nef_test(&BundleExpr::line(vec![])).unwrap().holds);
        let x = GalleryPoint::new(vec![]);
        assert!(z.seshadri(&BundleExpr::line(vec![]), &x).is_err());
    }

    #[test]
    fn guard_refuses_very_long_words() {
        // a reduced word of length 21 in A7: descending runs
        let mut letters = Vec::new();
        for k in 1..=7 {
            for i in (1..=k).rev() {
                letters.push(i);
            }
        }
        let word: Vec<usize> = letters.into_iter().take(21).collect();
        let z = BsdhVariety::new(RootSystem::from_type("A7").unwrap(), Word(word)).unwrap();
        assert!(matches!(z.fixed_points(), Err(Error::Guard(_))));
        assert!(matches!(z.model_curves(), Err(Error::Guard(_))));
    }

    #[test]
    fn ambient_curves_for_a1() {
        let z = variety("A1", &[1]);
        let all = z.ambient_curves().unwrap();
        assert_eq!(all.len(), 1);
        let yc = &all[0];
        assert_eq!(yc.root, Root::new(vec![1]));
        assert_eq!(yc.moving, BTreeSet::from([1]));
        assert_eq!(yc.reps[0].length(), 1);
        // A = {j}, v_j = s_{i_j}, β = α_{i_j}, L = e_j → degree 1
        assert_eq!(z.ambient_degree(&PicClass(vec![1]), yc).unwrap(), 1);
        assert_eq!(z.ambient_degree(&PicClass::zero(1), yc).unwrap(), 0);
    }

    #[test]
    fn ambient_triples_satisfy_the_defining_condition() {
        let z = variety("A2", &[1, 2]);
        for yc in z.ambient_curves().unwrap() {
            for &j in &yc.moving {
                let pulled = yc.reps[j - 1].inverse(z.root_system()).apply_root(&yc.root);
                assert!(pulled.is_negative());
            }
            // positive-orthant classes have nonnegative ambient degrees
            for class in [
                PicClass(vec![1, 0]),
                PicClass(vec![0, 1]),
                PicClass(vec![2, 3]),
            ] {
                assert!(z.ambient_degree(&class, &yc).unwrap() >= 0);
            }
        }
    }

    #[test]
    fn model_curves_map_to_valid_ambient_curves() {
        for (t, letters) in [
            ("A1", vec![1]),
            ("A2", vec![1, 2]),
            ("A2", vec![1, 2, 1]),
            ("B2", vec![2, 1, 2]),
        ] {
            let z = variety(t, &letters);
            for curve in z.model_curves().unwrap() {
                let yc = z.to_ambient(&curve).unwrap();
                // tangent weight is ±β
                let tan = z.tangent_weight(&curve);
                assert!(tan == yc.root || tan == yc.root.negated());
                // degrees agree for every basis class
                for m in 1..=z.length() {
                    let class = PicClass::basis(z.length(), m);
                    assert_eq!(
                        z.ambient_degree(&class, &yc).unwrap(),
                        z.degree(&class, &curve).unwrap(),
                        "{t} {letters:?} curve {} class {m}",
                        curve.id()
                    );
                }
            }
        }
    }

    #[test]
    fn dot_export_has_vertices_and_edges() {
        let z1 = variety("A1", &[1]);
        let dot = z1.gkm_dot().unwrap();
        assert_eq!(dot.matches(";\n").count(), 3); // 2 vertices + 1 edge
        assert!(dot.contains("\"p0\" -- \"p1\""));
        let z2 = variety("A2", &[1, 2]);
        let dot2 = z2.gkm_dot().unwrap();
        assert_eq!(dot2.matches("--").count(), 4);
        assert!(dot2.contains("[label=\"2; a2; [0,1]\"]"));
    }
}
