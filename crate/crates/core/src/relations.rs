//! Generation of the relation families cutting out the subrepresentation
//! variety inside the product of Grassmannians, together with the chart
//! formulas used to reason about individual subspaces.
//!
//! For an arrow v: p -> q with matrix entries `m[j][i]`, an (e_p-1)-subset I
//! and an (e_q+1)-subset J, the generated relation is
//!
//! ```text
//! E(v,I,J) = sum over i in B_p-I, j in J of
//!            (-1)^(eps(i,I)+eps(j,J)) * m[j][i] * Delta[I+i] * Delta[J-j]
//! ```
//!
//! and the same shape with path-composite matrices gives the higher-order
//! family. The zeroth-order (trivial path) family coincides with the
//! classical Grassmannian relations.

use crate::combinatorics::{epsilon, k_subsets, CombinatoricsError, IndexSubset};
use crate::field::FieldError;
use crate::model::{
    enumerate_paths, path_matrix, validate_representation, ArrowIdx, DimensionVector, ModelError,
    Path, Representation, ScalarMatrix, VertexIdx, Violation,
};
use crate::oracle::PlueckerVector;
use crate::poly::{Labeling, Monomial, PlueckerVariable, RelationPolynomial};
use crate::scalar::Scalar;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RelationError {
    #[error("subset {role} has size {found}, expected {expected}")]
    SubsetSize {
        role: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("subset {role} belongs to vertex {found:?}, expected {expected:?}")]
    SubsetVertex {
        role: &'static str,
        expected: VertexIdx,
        found: VertexIdx,
    },
    #[error("no valid subset size exists: e_p = {e_p}, e_q = {e_q}, d_q = {d_q}")]
    DegenerateDimensions { e_p: usize, e_q: usize, d_q: usize },
    #[error("chart coordinate Delta at the pivot subset is zero")]
    ChartPivotZero,
    #[error("pivot index {0} must not be a member of the pivot subset")]
    PivotIndexInSubset(u32),
    #[error("variable is assigned both zero and one")]
    ConflictingAssignment,
    #[error("dehomogenization variable at vertex {0:?} has the wrong vertex {1:?}")]
    DehomogenizationVertex(VertexIdx, VertexIdx),
    #[error("representation is invalid: {0:?}")]
    InvalidRepresentation(Vec<Violation>),
    #[error("subrepresentation dimensions exceed the representation dimensions")]
    DimensionNotDominated,
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Oracle(#[from] Box<crate::oracle::OracleError>),
}

impl From<crate::oracle::OracleError> for RelationError {
    fn from(e: crate::oracle::OracleError) -> Self {
        RelationError::Oracle(Box::new(e))
    }
}

/// Provenance of a generated relation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum RelationLabel {
    /// Classical relation at a single vertex.
    Classical {
        vertex: VertexIdx,
        i: IndexSubset,
        j: IndexSubset,
    },
    /// Relation attached to a path (length 1 gives the arrow relations).
    Path {
        path: Path,
        i: IndexSubset,
        j: IndexSubset,
    },
}

impl RelationLabel {
    pub fn render(&self, rep: &Representation, labeling: Labeling) -> String {
        let subset = |s: &IndexSubset| -> String {
            let inner: Vec<String> = match labeling {
                Labeling::Global => s
                    .members()
                    .iter()
                    .map(|&m| rep.global_label(s.vertex(), m).to_string())
                    .collect(),
                Labeling::Local => s.members().iter().map(u32::to_string).collect(),
            };
            format!("{{{}}}", inner.join(","))
        };
        match self {
            RelationLabel::Classical { vertex, i, j } => format!(
                "E(1_{}, {}, {})",
                rep.quiver().vertex_name(*vertex),
                subset(i),
                subset(j)
            ),
            RelationLabel::Path { path, i, j } => format!(
                "E({}, {}, {})",
                path.label(rep.quiver()),
                subset(i),
                subset(j)
            ),
        }
    }
}

#[derive(Debug, Clone)]
pub struct LabeledRelation {
    pub label: RelationLabel,
    pub poly: RelationPolynomial,
}

/// The deduplicated, deterministically ordered output of `all_relations`.
/// Labels that produced the zero polynomial or a scalar multiple of an
/// earlier relation are retained for provenance queries.
///
/// The full pre-deduplication list is kept as well: proportionality over the
/// rationals does not survive reduction mod p when the ratio involves p, so
/// finite-field evaluation must see every generated polynomial, not just the
/// deduplicated presentation.
#[derive(Debug, Clone)]
pub struct RelationSet {
    sub_dims: DimensionVector,
    relations: Vec<LabeledRelation>,
    duplicates: Vec<(RelationLabel, usize)>,
    zeros: Vec<RelationLabel>,
    generated: Vec<LabeledRelation>,
}

impl RelationSet {
    pub fn sub_dims(&self) -> &DimensionVector {
        &self.sub_dims
    }

    pub fn relations(&self) -> &[LabeledRelation] {
        &self.relations
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    /// Labels whose polynomial duplicated an earlier one, with the index of
    /// the relation that survived.
    pub fn duplicates(&self) -> &[(RelationLabel, usize)] {
        &self.duplicates
    }

    /// Labels whose polynomial vanished identically.
    pub fn zero_labels(&self) -> &[RelationLabel] {
        &self.zeros
    }

    /// Every nonzero generated relation in generation order, duplicates
    /// included. This is the list finite-field solving evaluates.
    pub fn generated(&self) -> &[LabeledRelation] {
        &self.generated
    }

    /// Total number of generator invocations recorded for one arrow's
    /// length-1 path labels (kept + duplicate + zero).
    pub fn invocations_for_arrow(&self, arrow: ArrowIdx) -> usize {
        let matches = |label: &RelationLabel| match label {
            RelationLabel::Path { path, .. } => path.arrows() == [arrow],
            _ => false,
        };
        self.relations.iter().filter(|r| matches(&r.label)).count()
            + self.duplicates.iter().filter(|(l, _)| matches(l)).count()
            + self.zeros.iter().filter(|l| matches(l)).count()
    }

    pub fn with_relations(&self, relations: Vec<LabeledRelation>) -> RelationSet {
        RelationSet {
            sub_dims: self.sub_dims.clone(),
            generated: relations.clone(),
            relations,
            duplicates: Vec::new(),
            zeros: Vec::new(),
        }
    }
}

fn check_subset(
    role: &'static str,
    subset: &IndexSubset,
    vertex: VertexIdx,
    expected_size: usize,
    dim: usize,
) -> Result<(), RelationError> {
    if subset.vertex() != vertex {
        return Err(RelationError::SubsetVertex {
            role,
            expected: vertex,
            found: subset.vertex(),
        });
    }
    if subset.len() != expected_size {
        return Err(RelationError::SubsetSize {
            role,
            expected: expected_size,
            found: subset.len(),
        });
    }
    subset.check_dim(dim)?;
    Ok(())
}

/// Shared core: the relation for an arbitrary matrix from vertex p to q.
fn relation_from_matrix(
    rep: &Representation,
    sub: &DimensionVector,
    p: VertexIdx,
    q: VertexIdx,
    matrix: &ScalarMatrix,
    i_subset: &IndexSubset,
    j_subset: &IndexSubset,
) -> Result<RelationPolynomial, RelationError> {
    let (d_p, d_q) = (rep.dim(p), rep.dim(q));
    let (e_p, e_q) = (sub.get(p), sub.get(q));
    if e_p == 0 || e_q + 1 > d_q {
        return Err(RelationError::DegenerateDimensions { e_p, e_q, d_q });
    }
    check_subset("I", i_subset, p, e_p - 1, d_p)?;
    check_subset("J", j_subset, q, e_q + 1, d_q)?;
    debug_assert_eq!((matrix.nrows(), matrix.ncols()), (d_q, d_p));

    let mut terms = Vec::new();
    for i in 1..=d_p as u32 {
        if i_subset.contains(i) {
            continue;
        }
        for &j in j_subset.members() {
            let coeff = &matrix[(j as usize - 1, i as usize - 1)];
            if coeff.is_zero() {
                continue;
            }
            let sign = epsilon(i, i_subset) + epsilon(j, j_subset);
            let coeff = if sign.is_multiple_of(2) {
                coeff.clone()
            } else {
                coeff.neg()
            };
            let var_p = PlueckerVariable::new(i_subset.with(i));
            let var_q = PlueckerVariable::new(j_subset.without(j));
            terms.push((Monomial::from_vars(vec![var_p, var_q]), coeff));
        }
    }
    Ok(RelationPolynomial::from_terms(terms).normalize_sign())
}

/// E(v, I, J) for a single arrow.
pub fn quiver_relation(
    rep: &Representation,
    sub: &DimensionVector,
    arrow: ArrowIdx,
    i_subset: &IndexSubset,
    j_subset: &IndexSubset,
) -> Result<RelationPolynomial, RelationError> {
    let a = rep.quiver().arrow(arrow);
    relation_from_matrix(
        rep,
        sub,
        a.source,
        a.target,
        rep.matrix(arrow),
        i_subset,
        j_subset,
    )
}

/// E(pi, I, J) for a path, built from the composite matrix.
pub fn higher_order_relation(
    rep: &Representation,
    sub: &DimensionVector,
    path: &Path,
    i_subset: &IndexSubset,
    j_subset: &IndexSubset,
) -> Result<RelationPolynomial, RelationError> {
    let matrix = path_matrix(rep, path)?;
    relation_from_matrix(
        rep,
        sub,
        path.source(),
        path.target(),
        &matrix,
        i_subset,
        j_subset,
    )
}

/// One classical relation at a vertex, from the zeroth-order formula
/// sum over i in J-I of (-1)^(eps(i,I)+eps(i,J)) Delta[I+i] Delta[J-i].
fn classical_relation_single(i_subset: &IndexSubset, j_subset: &IndexSubset) -> RelationPolynomial {
    let mut terms = Vec::new();
    for &i in j_subset.members() {
        if i_subset.contains(i) {
            continue;
        }
        let sign = epsilon(i, i_subset) + epsilon(i, j_subset);
        let coeff = Scalar::from_integer(if sign.is_multiple_of(2) { 1 } else { -1 });
        let var_a = PlueckerVariable::new(i_subset.with(i));
        let var_b = PlueckerVariable::new(j_subset.without(i));
        terms.push((Monomial::from_vars(vec![var_a, var_b]), coeff));
    }
    RelationPolynomial::from_terms(terms).normalize_sign()
}

/// All distinct nonzero classical relations at a vertex, deduplicated up to
/// scalar multiples. Empty whenever e is 0, 1, or the full dimension.
pub fn classical_relations(
    rep: &Representation,
    sub: &DimensionVector,
    vertex: VertexIdx,
) -> Result<Vec<RelationPolynomial>, RelationError> {
    let d = rep.dim(vertex);
    let e = sub.get(vertex);
    let mut kept: Vec<RelationPolynomial> = Vec::new();
    if e == 0 || e + 1 > d {
        return Ok(kept);
    }
    for i_subset in k_subsets(vertex, d, e - 1)? {
        for j_subset in k_subsets(vertex, d, e + 1)? {
            let poly = classical_relation_single(&i_subset, &j_subset);
            if poly.is_zero() || kept.iter().any(|k| k.proportional_eq(&poly)) {
                continue;
            }
            kept.push(poly);
        }
    }
    Ok(kept)
}

/// Generates every relation family in deterministic order: classical per
/// vertex first (when requested), then E(pi, I, J) for paths of length
/// 1..=max_path_len. Zero polynomials are dropped and scalar-proportional
/// duplicates collapse onto the first label.
pub fn all_relations(
    rep: &Representation,
    sub: &DimensionVector,
    max_path_len: usize,
    include_classical: bool,
) -> Result<RelationSet, RelationError> {
    if let Err(violations) = validate_representation(rep) {
        return Err(RelationError::InvalidRepresentation(violations));
    }
    if !sub.dominated_by(rep.dims()) {
        return Err(RelationError::DimensionNotDominated);
    }

    let mut set = RelationSet {
        sub_dims: sub.clone(),
        relations: Vec::new(),
        duplicates: Vec::new(),
        zeros: Vec::new(),
        generated: Vec::new(),
    };

    let record = |set: &mut RelationSet, label: RelationLabel, poly: RelationPolynomial| {
        if poly.is_zero() {
            set.zeros.push(label);
            return;
        }
        set.generated.push(LabeledRelation {
            label: label.clone(),
            poly: poly.clone(),
        });
        if let Some(pos) = set
            .relations
            .iter()
            .position(|r| r.poly.proportional_eq(&poly))
        {
            set.duplicates.push((label, pos));
        } else {
            set.relations.push(LabeledRelation { label, poly });
        }
    };

    if include_classical {
        for v in 0..rep.quiver().vertex_count() {
            let vertex = VertexIdx(v);
            let (d, e) = (rep.dim(vertex), sub.get(vertex));
            if e == 0 || e + 1 > d {
                continue;
            }
            for i_subset in k_subsets(vertex, d, e - 1)? {
                for j_subset in k_subsets(vertex, d, e + 1)? {
                    let poly = classical_relation_single(&i_subset, &j_subset);
                    let label = RelationLabel::Classical {
                        vertex,
                        i: i_subset.clone(),
                        j: j_subset.clone(),
                    };
                    record(&mut set, label, poly);
                }
            }
        }
    }

    for path in enumerate_paths(rep.quiver(), max_path_len) {
        if path.is_empty() {
            continue;
        }
        let (p, q) = (path.source(), path.target());
        let (d_p, d_q) = (rep.dim(p), rep.dim(q));
        let (e_p, e_q) = (sub.get(p), sub.get(q));
        if e_p == 0 || e_q + 1 > d_q {
            continue;
        }
        let matrix = path_matrix(rep, &path)?;
        for i_subset in k_subsets(p, d_p, e_p - 1)? {
            for j_subset in k_subsets(q, d_q, e_q + 1)? {
                let poly = relation_from_matrix(rep, sub, p, q, &matrix, &i_subset, &j_subset)?;
                let label = RelationLabel::Path {
                    path: path.clone(),
                    i: i_subset.clone(),
                    j: j_subset.clone(),
                };
                record(&mut set, label, poly);
            }
        }
    }
    Ok(set)
}

/// Spanning vectors of the subspace with the given Plücker coordinates, on
/// the chart where the pivot coordinate is invertible. The vector for pivot
/// member i0 has entries delta(i, i0) on the pivot set and
/// `(-1)^(eps(i,I)+eps(i0,I)) * Delta[I+i] / Delta[I0]` off it, I = I0 - i0.
pub fn chart_basis(
    coords: &PlueckerVector,
    pivot: &IndexSubset,
) -> Result<Vec<Vec<u64>>, RelationError> {
    check_subset("I0", pivot, coords.vertex(), coords.sub_dim(), coords.dim())?;
    let field = coords.field();
    let denom = coords.get(pivot)?;
    if denom == 0 {
        return Err(RelationError::ChartPivotZero);
    }
    let denom_inv = field.inv(denom)?;
    let d = coords.dim();
    let mut basis = Vec::with_capacity(pivot.len());
    for &i0 in pivot.members() {
        let i_set = pivot.without(i0);
        let mut vector = vec![0u64; d];
        for i in 1..=d as u32 {
            if pivot.contains(i) {
                vector[i as usize - 1] = if i == i0 { field.one() } else { 0 };
            } else {
                let value = coords.get(&i_set.with(i))?;
                let signed = if (epsilon(i, &i_set) + epsilon(i0, &i_set)).is_multiple_of(2) {
                    value
                } else {
                    field.neg(value)
                };
                vector[i as usize - 1] = field.mul(signed, denom_inv);
            }
        }
        basis.push(vector);
    }
    Ok(basis)
}

/// Elimination coefficients of the chart at J0: a vector v lies in the
/// subspace iff `v[j0] = sum over j in J0 of v[j] * n[j0][j]` for every
/// j0 outside J0, with `n[j0][j] = (-1)^(eps(j0,J)+eps(j,J)+1) Delta[J-j]/Delta[J0]`.
pub fn dual_chart_coefficients(
    coords: &PlueckerVector,
    pivot: &IndexSubset,
    j0: u32,
) -> Result<BTreeMap<u32, u64>, RelationError> {
    check_subset("J0", pivot, coords.vertex(), coords.sub_dim(), coords.dim())?;
    if pivot.contains(j0) {
        return Err(RelationError::PivotIndexInSubset(j0));
    }
    if j0 == 0 || j0 as usize > coords.dim() {
        return Err(RelationError::Combinatorics(
            CombinatoricsError::IndexOutOfRange {
                index: j0,
                dim: coords.dim(),
            },
        ));
    }
    let field = coords.field();
    let denom = coords.get(pivot)?;
    if denom == 0 {
        return Err(RelationError::ChartPivotZero);
    }
    let denom_inv = field.inv(denom)?;
    let j_set = pivot.with(j0);
    let mut out = BTreeMap::new();
    for &j in pivot.members() {
        let value = coords.get(&j_set.without(j))?;
        let signed = if (epsilon(j0, &j_set) + epsilon(j, &j_set) + 1).is_multiple_of(2) {
            value
        } else {
            field.neg(value)
        };
        out.insert(j, field.mul(signed, denom_inv));
    }
    Ok(out)
}

/// Linear forms whose common vanishing characterizes membership in the
/// subspace with the given Plücker coordinates: one form per (e+1)-subset J,
/// `v -> sum over j in J of (-1)^eps(j,J) v[j] Delta[J-j]`.
pub fn membership_forms(coords: &PlueckerVector) -> Result<Vec<Vec<u64>>, RelationError> {
    let field = coords.field();
    let (d, e) = (coords.dim(), coords.sub_dim());
    let mut forms = Vec::new();
    if e + 1 > d {
        return Ok(forms);
    }
    for j_subset in k_subsets(coords.vertex(), d, e + 1)? {
        let mut form = vec![0u64; d];
        for &j in j_subset.members() {
            let value = coords.get(&j_subset.without(j))?;
            form[j as usize - 1] = if epsilon(j, &j_subset).is_multiple_of(2) {
                value
            } else {
                field.neg(value)
            };
        }
        forms.push(form);
    }
    Ok(forms)
}

/// Substitute 0 for a set of coordinates and 1 for one chosen coordinate per
/// vertex, dropping relations that collapse to zero. Output is sorted in the
/// canonical polynomial order.
pub fn schubert_dehomogenize(
    rels: &RelationSet,
    zeros: &BTreeSet<PlueckerVariable>,
    ones: &BTreeMap<VertexIdx, PlueckerVariable>,
) -> Result<Vec<RelationPolynomial>, RelationError> {
    let mut assignment: BTreeMap<PlueckerVariable, Scalar> = BTreeMap::new();
    for v in zeros {
        assignment.insert(v.clone(), Scalar::zero());
    }
    for (&vertex, var) in ones {
        if var.subset.vertex() != vertex {
            return Err(RelationError::DehomogenizationVertex(
                vertex,
                var.subset.vertex(),
            ));
        }
        if zeros.contains(var) {
            return Err(RelationError::ConflictingAssignment);
        }
        assignment.insert(var.clone(), Scalar::one());
    }
    let mut out: Vec<RelationPolynomial> = rels
        .relations()
        .iter()
        .map(|r| r.poly.substitute(&assignment).normalize_sign())
        .filter(|p| !p.is_zero())
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}
