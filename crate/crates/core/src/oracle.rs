//! Finite-field ground truth, independent of the relation generator:
//! exhaustive enumeration of subspaces in reduced row-echelon normal form,
//! rank-based subrepresentation tests, solution sets of relation systems,
//! point counting, and exact counting-polynomial fits.

use crate::combinatorics::{binomial, gaussian_binomial, k_subsets, subset_rank, IndexSubset};
use crate::field::{FieldError, FpMatrix, PrimeField};
use crate::model::{DimensionVector, Representation, SpecializedRep, VertexIdx};
use crate::poly::PolyError;
use crate::relations::RelationSet;
use crate::scalar::ScalarError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("subspace dimension {e} exceeds ambient dimension {d}")]
    SubdimensionTooLarge { e: usize, d: usize },
    #[error("coordinate vector has length {found}, expected {expected}")]
    CoordinateLength { expected: usize, found: usize },
    #[error("subset size {found} does not match the subspace dimension {expected}")]
    SubsetSize { expected: usize, found: usize },
    #[error("subset belongs to a different vertex")]
    SubsetVertex,
    #[error("tuple has {found} subspaces, expected one per vertex ({expected})")]
    TupleLength { expected: usize, found: usize },
    #[error("subspace at vertex {vertex} lives in dimension {found}, expected {expected}")]
    AmbientDimension {
        vertex: usize,
        found: usize,
        expected: usize,
    },
    #[error("sets have different shapes or fields and cannot be compared")]
    CompareShapeMismatch,
    #[error("enumeration of {0} candidate tuples is too large for the desk oracle")]
    EnumerationTooLarge(u128),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Model(#[from] crate::model::ModelError),
    #[error(transparent)]
    Combinatorics(#[from] crate::combinatorics::CombinatoricsError),
}

/// Failure modes of the exact counting-polynomial fit.
#[derive(Debug, Error, PartialEq)]
pub enum FitError {
    #[error("need at least one sample point")]
    NoSamples,
    #[error("sample prime {0} appears twice")]
    DuplicateSamplePrime(u64),
    #[error("fitted degree {degree} exceeds the ambient degree bound {cap}")]
    DegreeCapExceeded { cap: usize, degree: usize },
    #[error("non-polynomial count: at q={prime} the fit predicts {fitted}, observed {observed}")]
    NonPolynomialCount {
        prime: u64,
        observed: u64,
        fitted: BigRational,
    },
    #[error("value {0} at q=1 is not an integer")]
    NonIntegerEulerCharacteristic(BigRational),
}

/// Projective Plücker coordinate vector of one subspace: length C(d, e),
/// indexed by e-subsets in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PlueckerVector {
    vertex: VertexIdx,
    dim: usize,
    sub_dim: usize,
    field: PrimeField,
    coords: Vec<u64>,
}

impl PlueckerVector {
    pub fn new(
        vertex: VertexIdx,
        dim: usize,
        sub_dim: usize,
        field: PrimeField,
        coords: Vec<u64>,
    ) -> Result<Self, OracleError> {
        if sub_dim > dim {
            return Err(OracleError::SubdimensionTooLarge { e: sub_dim, d: dim });
        }
        let expected = binomial(dim, sub_dim) as usize;
        if coords.len() != expected {
            return Err(OracleError::CoordinateLength {
                expected,
                found: coords.len(),
            });
        }
        for &c in &coords {
            field.check_residue(c)?;
        }
        Ok(PlueckerVector {
            vertex,
            dim,
            sub_dim,
            field,
            coords,
        })
    }

    pub fn vertex(&self) -> VertexIdx {
        self.vertex
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sub_dim(&self) -> usize {
        self.sub_dim
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    /// The coordinate for one e-subset.
    pub fn get(&self, subset: &IndexSubset) -> Result<u64, OracleError> {
        if subset.vertex() != self.vertex {
            return Err(OracleError::SubsetVertex);
        }
        if subset.len() != self.sub_dim {
            return Err(OracleError::SubsetSize {
                expected: self.sub_dim,
                found: subset.len(),
            });
        }
        let rank = subset_rank(subset, self.dim)?;
        Ok(self.coords[rank as usize])
    }

    /// Scale so the first nonzero coordinate is 1; None for the zero vector.
    pub fn normalize(&self) -> Option<PlueckerVector> {
        let lead = self.coords.iter().copied().find(|&c| c != 0)?;
        if lead == self.field.one() {
            return Some(self.clone());
        }
        let inv = self.field.inv(lead).expect("nonzero leading coordinate");
        let coords = self
            .coords
            .iter()
            .map(|&c| self.field.mul(c, inv))
            .collect();
        Some(PlueckerVector {
            coords,
            ..self.clone()
        })
    }
}

/// An e-dimensional subspace of F_p^d in reduced row-echelon normal form.
/// Two values are equal iff they denote the same subspace.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubspaceRREF {
    pivots: Vec<u32>, // 1-based pivot columns, strictly increasing
    matrix: FpMatrix, // e x d, RREF with identity on pivot columns
}

impl SubspaceRREF {
    /// Row-reduce arbitrary spanning rows; zero rows are discarded, so the
    /// result's dimension is the rank of the input.
    pub fn from_spanning_rows(field: PrimeField, rows: Vec<Vec<u64>>, d: usize) -> SubspaceRREF {
        let mut m = FpMatrix::from_rows(field, rows);
        let pivots0 = m.rref();
        let e = pivots0.len();
        let mut reduced = FpMatrix::zeros(field, e, d);
        for r in 0..e {
            for c in 0..d {
                reduced[(r, c)] = m[(r, c)];
            }
        }
        SubspaceRREF {
            pivots: pivots0.iter().map(|&c| c as u32 + 1).collect(),
            matrix: reduced,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.matrix.field()
    }

    pub fn dim(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn sub_dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn pivots(&self) -> &[u32] {
        &self.pivots
    }

    pub fn matrix(&self) -> &FpMatrix {
        &self.matrix
    }

    /// Rows mapped forward by a matrix acting on column vectors: S * A^T.
    fn image_rows(&self, a: &FpMatrix) -> FpMatrix {
        let field = self.field();
        let rows: Vec<Vec<u64>> = (0..self.sub_dim())
            .map(|r| a.apply(self.matrix.row(r)))
            .collect();
        let mut m = FpMatrix::zeros(field, rows.len(), a.nrows());
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }
}

/// Streams every e-dimensional subspace of F_p^d exactly once, grouped by
/// pivot set in lexicographic order, free entries in row-major odometer
/// order (the last free position varies fastest).
pub struct SubspaceEnumerator {
    field: PrimeField,
    d: usize,
    pivot_sets: Vec<Vec<usize>>, // 0-based columns
    pivot_idx: usize,
    free_positions: Vec<(usize, usize)>,
    counter: Vec<u64>,
    exhausted_current: bool,
}

impl SubspaceEnumerator {
    fn new(field: PrimeField, d: usize, e: usize) -> Result<Self, OracleError> {
        if e > d {
            return Err(OracleError::SubdimensionTooLarge { e, d });
        }
        let pivot_sets: Vec<Vec<usize>> = k_subsets(VertexIdx(0), d, e)?
            .into_iter()
            .map(|s| s.members().iter().map(|&m| m as usize - 1).collect())
            .collect();
        let mut it = SubspaceEnumerator {
            field,
            d,
            pivot_sets,
            pivot_idx: 0,
            free_positions: Vec::new(),
            counter: Vec::new(),
            exhausted_current: false,
        };
        it.load_pivot_set();
        Ok(it)
    }

    fn load_pivot_set(&mut self) {
        if self.pivot_idx >= self.pivot_sets.len() {
            return;
        }
        let pivots = &self.pivot_sets[self.pivot_idx];
        self.free_positions.clear();
        for (r, &pc) in pivots.iter().enumerate() {
            for c in (pc + 1)..self.d {
                if !pivots.contains(&c) {
                    self.free_positions.push((r, c));
                }
            }
        }
        self.counter = vec![0; self.free_positions.len()];
        self.exhausted_current = false;
    }

    fn build(&self) -> SubspaceRREF {
        let pivots = &self.pivot_sets[self.pivot_idx];
        let e = pivots.len();
        let mut m = FpMatrix::zeros(self.field, e, self.d);
        for (r, &pc) in pivots.iter().enumerate() {
            m[(r, pc)] = self.field.one();
        }
        for (&(r, c), &v) in self.free_positions.iter().zip(&self.counter) {
            m[(r, c)] = v;
        }
        SubspaceRREF {
            pivots: pivots.iter().map(|&c| c as u32 + 1).collect(),
            matrix: m,
        }
    }

    fn advance(&mut self) {
        let p = self.field.modulus();
        for slot in self.counter.iter_mut().rev() {
            *slot += 1;
            if *slot < p {
                return;
            }
            *slot = 0;
        }
        self.exhausted_current = true;
    }
}

impl Iterator for SubspaceEnumerator {
    type Item = SubspaceRREF;

    fn next(&mut self) -> Option<SubspaceRREF> {
        while self.pivot_idx < self.pivot_sets.len() {
            if self.exhausted_current {
                self.pivot_idx += 1;
                self.load_pivot_set();
                continue;
            }
            let out = self.build();
            if self.counter.is_empty() {
                self.exhausted_current = true;
            } else {
                self.advance();
            }
            return Some(out);
        }
        None
    }
}

pub fn enumerate_subspaces(
    field: PrimeField,
    d: usize,
    e: usize,
) -> Result<SubspaceEnumerator, OracleError> {
    SubspaceEnumerator::new(field, d, e)
}

/// Plücker coordinates of a subspace: the e x e minors on each e-subset of
/// columns, in lexicographic subset order. For an RREF matrix the leading
/// nonzero coordinate sits at the pivot set and equals 1.
pub fn pluecker_of_subspace(s: &SubspaceRREF, vertex: VertexIdx) -> PlueckerVector {
    let (d, e) = (s.dim(), s.sub_dim());
    let coords: Vec<u64> = if e == 0 {
        vec![s.field().one()]
    } else {
        k_subsets(vertex, d, e)
            .expect("within checked desk-scale bounds")
            .iter()
            .map(|subset| {
                let cols: Vec<usize> = subset.members().iter().map(|&m| m as usize - 1).collect();
                s.matrix().select_columns(&cols).determinant()
            })
            .collect()
    };
    let v = PlueckerVector::new(vertex, d, e, s.field(), coords).expect("shape by construction");
    debug_assert_eq!(
        v.coords.iter().find(|&&c| c != 0),
        Some(&1),
        "RREF normalization puts 1 at the leading coordinate"
    );
    v
}

/// Rank test for the subrepresentation condition: for every arrow v: p -> q,
/// the image of N_p must lie in the row space of N_q.
pub fn is_subrepresentation(
    rep: &Representation,
    spec: &SpecializedRep,
    spaces: &[SubspaceRREF],
) -> Result<bool, OracleError> {
    let quiver = rep.quiver();
    if spaces.len() != quiver.vertex_count() {
        return Err(OracleError::TupleLength {
            expected: quiver.vertex_count(),
            found: spaces.len(),
        });
    }
    for (v, s) in spaces.iter().enumerate() {
        if s.dim() != rep.dim(VertexIdx(v)) {
            return Err(OracleError::AmbientDimension {
                vertex: v,
                found: s.dim(),
                expected: rep.dim(VertexIdx(v)),
            });
        }
        if s.field() != spec.field() {
            return Err(OracleError::Field(FieldError::MixedFields(
                s.field().modulus(),
                spec.field().modulus(),
            )));
        }
    }
    for (idx, arrow) in quiver.arrows() {
        let images = spaces[arrow.source.0].image_rows(spec.matrix(idx));
        let target = &spaces[arrow.target.0];
        let stacked = target.matrix().vstack(&images)?;
        if stacked.rank() != target.sub_dim() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One point of the product of Grassmannians: a normalized Plücker vector
/// per vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GrassmannPoint {
    vectors: Vec<PlueckerVector>,
}

impl GrassmannPoint {
    pub fn new(vectors: Vec<PlueckerVector>) -> Option<GrassmannPoint> {
        let vectors = vectors
            .into_iter()
            .map(|v| v.normalize())
            .collect::<Option<Vec<_>>>()?;
        Some(GrassmannPoint { vectors })
    }

    pub fn vectors(&self) -> &[PlueckerVector] {
        &self.vectors
    }

    pub fn vector(&self, v: VertexIdx) -> &PlueckerVector {
        &self.vectors[v.0]
    }

    fn shape(&self) -> Vec<(usize, usize, u64)> {
        self.vectors
            .iter()
            .map(|v| (v.dim(), v.sub_dim(), v.field().modulus()))
            .collect()
    }
}

/// Materialized per-vertex enumeration with cached Plücker vectors; the
/// scaffolding behind both point-set operations.
struct ProductEnumeration {
    spaces: Vec<Vec<SubspaceRREF>>,
    plueckers: Vec<Vec<PlueckerVector>>,
    sizes: Vec<usize>,
    total: u128,
}

impl ProductEnumeration {
    fn build(
        rep: &Representation,
        sub: &DimensionVector,
        field: PrimeField,
    ) -> Result<Self, OracleError> {
        let nv = rep.quiver().vertex_count();
        let mut spaces = Vec::with_capacity(nv);
        let mut plueckers = Vec::with_capacity(nv);
        let mut total: u128 = 1;
        for v in 0..nv {
            let vertex = VertexIdx(v);
            let list: Vec<SubspaceRREF> =
                enumerate_subspaces(field, rep.dim(vertex), sub.get(vertex))?.collect();
            total = total.saturating_mul(list.len() as u128);
            plueckers.push(
                list.iter()
                    .map(|s| pluecker_of_subspace(s, vertex))
                    .collect(),
            );
            spaces.push(list);
        }
        if total > 10_000_000_000 {
            return Err(OracleError::EnumerationTooLarge(total));
        }
        let sizes = spaces.iter().map(Vec::len).collect();
        Ok(ProductEnumeration {
            spaces,
            plueckers,
            sizes,
            total,
        })
    }

    fn decode(&self, mut index: u128, out: &mut [usize]) {
        for (slot, &size) in out.iter_mut().zip(&self.sizes).rev() {
            *slot = (index % size as u128) as usize;
            index /= size as u128;
        }
    }

    fn point(&self, indices: &[usize]) -> GrassmannPoint {
        let vectors = indices
            .iter()
            .enumerate()
            .map(|(v, &i)| self.plueckers[v][i].clone())
            .collect();
        GrassmannPoint::new(vectors).expect("Plücker vectors of subspaces are nonzero")
    }
}

/// Splits `[0, total)` into at most `workers` contiguous ranges.
fn worker_ranges(total: u128, workers: usize) -> Vec<(u128, u128)> {
    let workers = workers.max(1) as u128;
    let chunk = total.div_ceil(workers).max(1);
    let mut out = Vec::new();
    let mut start = 0;
    while start < total {
        let end = (start + chunk).min(total);
        out.push((start, end));
        start = end;
    }
    out
}

fn collect_parallel<F>(total: u128, workers: usize, run: F) -> BTreeSet<GrassmannPoint>
where
    F: Fn(u128, u128) -> BTreeSet<GrassmannPoint> + Sync,
{
    let ranges = worker_ranges(total, workers);
    if ranges.len() <= 1 {
        return ranges.first().map(|&(a, b)| run(a, b)).unwrap_or_default();
    }
    let mut merged = BTreeSet::new();
    std::thread::scope(|scope| {
        let run = &run;
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(a, b)| scope.spawn(move || run(a, b)))
            .collect();
        for h in handles {
            merged.extend(h.join().expect("enumeration worker panicked"));
        }
    });
    merged
}

/// All Plücker images of subrepresentation tuples over F_p, as a
/// deterministic sorted set. `workers` only affects scheduling.
pub fn subrep_points(
    rep: &Representation,
    sub: &DimensionVector,
    params: &BTreeMap<String, BigRational>,
    field: PrimeField,
    workers: usize,
) -> Result<BTreeSet<GrassmannPoint>, OracleError> {
    let spec = rep.specialize(params, field)?;
    let enumeration = ProductEnumeration::build(rep, sub, field)?;
    let nv = rep.quiver().vertex_count();

    // cache the mapped rows of every source subspace once per arrow
    let image_cache: Vec<Vec<FpMatrix>> = rep
        .quiver()
        .arrows()
        .map(|(idx, arrow)| {
            enumeration.spaces[arrow.source.0]
                .iter()
                .map(|s| s.image_rows(spec.matrix(idx)))
                .collect()
        })
        .collect();
    let arrows: Vec<_> = rep.quiver().arrows().map(|(_, a)| a.clone()).collect();

    let run = |start: u128, end: u128| {
        let mut local = BTreeSet::new();
        let mut indices = vec![0usize; nv];
        for t in start..end {
            enumeration.decode(t, &mut indices);
            let ok = arrows.iter().enumerate().all(|(k, arrow)| {
                let images = &image_cache[k][indices[arrow.source.0]];
                let target = &enumeration.spaces[arrow.target.0][indices[arrow.target.0]];
                match target.matrix().vstack(images) {
                    Ok(stacked) => stacked.rank() == target.sub_dim(),
                    Err(_) => false,
                }
            });
            if ok {
                local.insert(enumeration.point(&indices));
            }
        }
        local
    };
    Ok(collect_parallel(enumeration.total, workers, run))
}

/// Relation term compiled for fast evaluation at enumerated points.
struct CompiledRelation {
    terms: Vec<(u64, Vec<(usize, usize)>)>, // (coefficient, [(vertex, coord index)])
}

fn compile_relations(
    rep: &Representation,
    rels: &RelationSet,
    params: &BTreeMap<String, BigRational>,
    field: PrimeField,
) -> Result<Vec<CompiledRelation>, OracleError> {
    // evaluate the full generated list: rational-proportional duplicates can
    // reduce differently mod p
    let mut out = Vec::new();
    for labeled in rels.generated() {
        let mut terms = Vec::new();
        for (monomial, coeff) in labeled.poly.terms() {
            let c = coeff.eval_mod(params, field)?;
            if c == 0 {
                continue;
            }
            let mut factors = Vec::with_capacity(monomial.degree());
            for var in monomial.vars() {
                let vertex = var.subset.vertex();
                let rank = subset_rank(&var.subset, rep.dim(vertex))?;
                factors.push((vertex.0, rank as usize));
            }
            terms.push((c, factors));
        }
        if !terms.is_empty() {
            out.push(CompiledRelation { terms });
        }
    }
    Ok(out)
}

/// The set of candidate points (tuples of Plücker vectors of actual
/// subspaces, which satisfy the classical relations by construction) at
/// which every relation in the set vanishes.
pub fn variety_points(
    rep: &Representation,
    rels: &RelationSet,
    params: &BTreeMap<String, BigRational>,
    field: PrimeField,
    workers: usize,
) -> Result<BTreeSet<GrassmannPoint>, OracleError> {
    let compiled = compile_relations(rep, rels, params, field)?;
    let enumeration = ProductEnumeration::build(rep, rels.sub_dims(), field)?;
    let nv = rep.quiver().vertex_count();

    let run = |start: u128, end: u128| {
        let mut local = BTreeSet::new();
        let mut indices = vec![0usize; nv];
        for t in start..end {
            enumeration.decode(t, &mut indices);
            let ok = compiled.iter().all(|rel| {
                let mut acc = 0u64;
                for (coeff, factors) in &rel.terms {
                    let mut term = *coeff;
                    for &(v, rank) in factors {
                        term = field.mul(term, enumeration.plueckers[v][indices[v]].coords[rank]);
                    }
                    acc = field.add(acc, term);
                }
                acc == 0
            });
            if ok {
                local.insert(enumeration.point(&indices));
            }
        }
        local
    };
    Ok(collect_parallel(enumeration.total, workers, run))
}

/// Symmetric-difference report between two point sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareReport {
    /// Points of the second set absent from the first.
    pub missing: Vec<GrassmannPoint>,
    /// Points of the first set absent from the second.
    pub extra: Vec<GrassmannPoint>,
}

impl CompareReport {
    pub fn equal(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

pub fn compare_sets(
    first: &BTreeSet<GrassmannPoint>,
    second: &BTreeSet<GrassmannPoint>,
) -> Result<CompareReport, OracleError> {
    if let (Some(a), Some(b)) = (first.iter().next(), second.iter().next()) {
        if a.shape() != b.shape() {
            return Err(OracleError::CompareShapeMismatch);
        }
    }
    Ok(CompareReport {
        missing: second.difference(first).cloned().collect(),
        extra: first.difference(second).cloned().collect(),
    })
}

/// Outcome of the held-out validation of a fitted counting polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationStatus {
    /// Checked against held-out counts at these primes.
    Validated { primes: Vec<u64> },
    /// Fitted through the samples only.
    Unvalidated,
}

/// A univariate polynomial in q fitted exactly through point counts.
#[derive(Debug, Clone, PartialEq)]
pub struct CountingPolynomial {
    coeffs: Vec<BigRational>, // ascending degree, trailing zeros trimmed
    samples: Vec<(u64, u64)>,
    validation: ValidationStatus,
}

impl CountingPolynomial {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn samples(&self) -> &[(u64, u64)] {
        &self.samples
    }

    pub fn validation(&self) -> &ValidationStatus {
        &self.validation
    }

    pub fn evaluate(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    /// Renders like `q^2 + 4*q + 1`.
    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let var = match deg {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{deg}"),
            };
            let body = if var.is_empty() {
                format!("{mag}")
            } else if mag.is_one() {
                var
            } else {
                format!("{mag}*{var}")
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{body}")
                } else {
                    body
                });
            } else if c.is_negative() {
                parts.push(format!("- {body}"));
            } else {
                parts.push(format!("+ {body}"));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ")
        }
    }
}

fn lagrange_interpolate(samples: &[(u64, u64)]) -> Vec<BigRational> {
    let n = samples.len();
    let mut coeffs = vec![BigRational::zero(); n];
    for (i, &(xi, yi)) in samples.iter().enumerate() {
        // numerator polynomial prod_{j != i} (x - x_j), coefficients ascending
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        let xi_r = BigRational::from_integer(BigInt::from(xi));
        for (j, &(xj, _)) in samples.iter().enumerate() {
            if i == j {
                continue;
            }
            let xj_r = BigRational::from_integer(BigInt::from(xj));
            denom *= &xi_r - &xj_r;
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * &xj_r;
            }
            basis = next;
        }
        let scale = BigRational::from_integer(BigInt::from(yi)) / denom;
        for (k, b) in basis.iter().enumerate() {
            coeffs[k] += b * &scale;
        }
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

/// Exact interpolation through the sampled counts, validated against
/// held-out counts. Succeeds only if every validation count matches the
/// fitted polynomial exactly; the optional cap bounds the fitted degree by
/// the ambient dimension sum.
pub fn fit_counting_polynomial(
    samples: &[(u64, u64)],
    validation: &[(u64, u64)],
    degree_cap: Option<usize>,
) -> Result<CountingPolynomial, FitError> {
    if samples.is_empty() {
        return Err(FitError::NoSamples);
    }
    let mut seen = BTreeSet::new();
    for &(p, _) in samples {
        if !seen.insert(p) {
            return Err(FitError::DuplicateSamplePrime(p));
        }
    }
    let coeffs = lagrange_interpolate(samples);
    let cp = CountingPolynomial {
        coeffs,
        samples: samples.to_vec(),
        validation: ValidationStatus::Unvalidated,
    };
    if let Some(cap) = degree_cap {
        if cp.degree() > cap {
            return Err(FitError::DegreeCapExceeded {
                cap,
                degree: cp.degree(),
            });
        }
    }
    for &(prime, observed) in validation {
        let fitted = cp.evaluate(&BigRational::from_integer(BigInt::from(prime)));
        if fitted != BigRational::from_integer(BigInt::from(observed)) {
            return Err(FitError::NonPolynomialCount {
                prime,
                observed,
                fitted,
            });
        }
    }
    Ok(CountingPolynomial {
        validation: if validation.is_empty() {
            ValidationStatus::Unvalidated
        } else {
            ValidationStatus::Validated {
                primes: validation.iter().map(|&(p, _)| p).collect(),
            }
        },
        ..cp
    })
}

/// The counting polynomial evaluated at q = 1, which for a polynomial-count
/// variety is its topological Euler characteristic.
pub fn euler_characteristic(cp: &CountingPolynomial) -> Result<i64, FitError> {
    let value = cp.evaluate(&BigRational::one());
    if !value.is_integer() {
        return Err(FitError::NonIntegerEulerCharacteristic(value));
    }
    Ok(value
        .to_integer()
        .try_into()
        .expect("euler characteristic fits i64"))
}

/// Gaussian binomial, re-exported next to the enumeration it counts.
pub fn subspace_count(d: usize, e: usize, q: u64) -> u128 {
    gaussian_binomial(d, e, q)
}

/// The full variable assignment a point induces, for evaluating relation
/// polynomials at it.
pub fn variable_assignment(point: &GrassmannPoint) -> BTreeMap<crate::poly::PlueckerVariable, u64> {
    let mut out = BTreeMap::new();
    for v in point.vectors() {
        let subsets =
            k_subsets(v.vertex(), v.dim(), v.sub_dim()).expect("within checked desk-scale bounds");
        for (subset, &value) in subsets.into_iter().zip(v.coords()) {
            out.insert(crate::poly::PlueckerVariable::new(subset), value);
        }
    }
    out
}
