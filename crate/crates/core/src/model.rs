//! Quivers, dimension vectors, representations with exact matrix entries,
//! and path composition.

use crate::field::{FieldError, FpMatrix, PrimeField};
use crate::scalar::{Scalar, ScalarError};
use num_rational::BigRational;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Position of a vertex in the quiver's declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexIdx(pub usize);

/// Position of an arrow in the quiver's declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrowIdx(pub usize);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("path step {step}: arrow `{arrow}` starts at `{found}`, expected `{expected}`")]
    PathNotComposable {
        step: usize,
        arrow: String,
        expected: String,
        found: String,
    },
    #[error("path endpoints ({start}, {end}) do not match arrow sequence")]
    PathEndpointMismatch { start: String, end: String },
    #[error("a nonempty arrow sequence is required; use Path::trivial for length 0")]
    EmptyArrowSequence,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub source: VertexIdx,
    pub target: VertexIdx,
}

/// A finite quiver: ordered vertices and ordered arrows. Loops and parallel
/// arrows are permitted; identifiers must be unique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(
        vertices: Vec<String>,
        arrows: Vec<(String, String, String)>,
    ) -> Result<Self, ModelError> {
        let mut q = Quiver {
            vertices,
            arrows: Vec::new(),
        };
        for (id, src, dst) in arrows {
            let source = q.vertex_idx(&src)?;
            let target = q.vertex_idx(&dst)?;
            q.arrows.push(Arrow { id, source, target });
        }
        Ok(q)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_name(&self, v: VertexIdx) -> &str {
        &self.vertices[v.0]
    }

    pub fn vertex_names(&self) -> impl Iterator<Item = &str> {
        self.vertices.iter().map(String::as_str)
    }

    pub fn vertex_idx(&self, name: &str) -> Result<VertexIdx, ModelError> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .map(VertexIdx)
            .ok_or_else(|| ModelError::UnknownVertex(name.to_string()))
    }

    pub fn arrow(&self, a: ArrowIdx) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn arrows(&self) -> impl Iterator<Item = (ArrowIdx, &Arrow)> {
        self.arrows
            .iter()
            .enumerate()
            .map(|(i, a)| (ArrowIdx(i), a))
    }

    pub fn arrow_idx(&self, id: &str) -> Result<ArrowIdx, ModelError> {
        self.arrows
            .iter()
            .position(|a| a.id == id)
            .map(ArrowIdx)
            .ok_or_else(|| ModelError::UnknownArrow(id.to_string()))
    }

    /// Duplicate-identifier and endpoint diagnostics used by validation.
    fn structural_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if self.vertices[..i].contains(v) {
                out.push(Violation::DuplicateVertex { vertex: v.clone() });
            }
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if self.arrows[..i].iter().any(|b| b.id == a.id) {
                out.push(Violation::DuplicateArrow {
                    arrow: a.id.clone(),
                });
            }
        }
        out
    }
}

/// Per-vertex nonnegative integers, aligned with the quiver's vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionVector {
    entries: Vec<usize>,
}

impl DimensionVector {
    pub fn new(entries: Vec<usize>) -> Self {
        DimensionVector { entries }
    }

    pub fn from_map(quiver: &Quiver, map: &BTreeMap<String, usize>) -> Result<Self, ModelError> {
        let mut entries = vec![0; quiver.vertex_count()];
        for (name, &value) in map {
            let idx = quiver.vertex_idx(name)?;
            entries[idx.0] = value;
        }
        Ok(DimensionVector { entries })
    }

    pub fn get(&self, v: VertexIdx) -> usize {
        self.entries[v.0]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Componentwise e ≤ d.
    pub fn dominated_by(&self, other: &DimensionVector) -> bool {
        self.entries.len() == other.entries.len()
            && self.entries.iter().zip(&other.entries).all(|(e, d)| e <= d)
    }
}

/// Dense matrix of exact scalars, row-major; rows index the target basis,
/// columns the source basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ScalarMatrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        debug_assert!(rows.iter().all(|row| row.len() == c));
        ScalarMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_integers(rows: Vec<Vec<i64>>) -> Self {
        Self::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Scalar::from_integer).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, other: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.cols, other.rows, "scalar matrix shape mismatch");
        let mut out = ScalarMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a.mul(&other[(k, j)]);
                    out[(i, j)] = out[(i, j)].add(&prod);
                }
            }
        }
        out
    }

    pub fn eval_mod(
        &self,
        params: &BTreeMap<String, BigRational>,
        field: PrimeField,
    ) -> Result<FpMatrix, ScalarError> {
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for j in 0..self.cols {
                row.push(self[(i, j)].eval_mod(params, field)?);
            }
            rows.push(row);
        }
        Ok(FpMatrix::from_rows(field, rows))
    }
}

impl std::ops::Index<(usize, usize)> for ScalarMatrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ScalarMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

/// A representation: one matrix per arrow, with exact entries that may
/// involve declared parameters. The ordered basis at a vertex p is implicit:
/// local indices 1..d_p. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    quiver: Quiver,
    dims: DimensionVector,
    matrices: Vec<ScalarMatrix>,
    parameters: Vec<String>,
}

/// One defect found by `validate_representation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateVertex {
        vertex: String,
    },
    DuplicateArrow {
        arrow: String,
    },
    ShapeMismatch {
        arrow: String,
        expected: (usize, usize),
        found: (usize, usize),
    },
    UndeclaredParameter {
        arrow: String,
        parameter: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateVertex { vertex } => write!(f, "duplicate vertex `{vertex}`"),
            Violation::DuplicateArrow { arrow } => write!(f, "duplicate arrow `{arrow}`"),
            Violation::ShapeMismatch {
                arrow,
                expected,
                found,
            } => write!(
                f,
                "matrix for arrow `{arrow}` has shape {}x{}, expected {}x{}",
                found.0, found.1, expected.0, expected.1
            ),
            Violation::UndeclaredParameter { arrow, parameter } => {
                write!(
                    f,
                    "matrix for arrow `{arrow}` uses undeclared parameter `{parameter}`"
                )
            }
        }
    }
}

impl Representation {
    pub fn new(
        quiver: Quiver,
        dims: DimensionVector,
        matrices: Vec<ScalarMatrix>,
        parameters: Vec<String>,
    ) -> Self {
        assert_eq!(dims.len(), quiver.vertex_count(), "dimension vector length");
        assert_eq!(matrices.len(), quiver.arrow_count(), "one matrix per arrow");
        Representation {
            quiver,
            dims,
            matrices,
            parameters,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &DimensionVector {
        &self.dims
    }

    pub fn dim(&self, v: VertexIdx) -> usize {
        self.dims.get(v)
    }

    pub fn matrix(&self, a: ArrowIdx) -> &ScalarMatrix {
        &self.matrices[a.0]
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    /// 1-based global label of local basis index `i` at vertex `v`, numbering
    /// basis vectors consecutively in vertex declaration order.
    pub fn global_label(&self, v: VertexIdx, i: u32) -> u32 {
        let offset: usize = (0..v.0).map(|k| self.dims.entries()[k]).sum();
        offset as u32 + i
    }

    /// Reduce all matrices modulo p after substituting parameter values.
    pub fn specialize(
        &self,
        params: &BTreeMap<String, BigRational>,
        field: PrimeField,
    ) -> Result<SpecializedRep, ModelError> {
        let matrices = self
            .matrices
            .iter()
            .map(|m| m.eval_mod(params, field))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SpecializedRep { field, matrices })
    }
}

/// A representation with all parameters substituted and entries reduced
/// into one prime field.
#[derive(Debug, Clone)]
pub struct SpecializedRep {
    field: PrimeField,
    matrices: Vec<FpMatrix>,
}

impl SpecializedRep {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn matrix(&self, a: ArrowIdx) -> &FpMatrix {
        &self.matrices[a.0]
    }
}

/// Checks a representation against its quiver: matrix shapes, duplicate
/// identifiers, undeclared parameters. Violations are data, not failures.
pub fn validate_representation(rep: &Representation) -> Result<(), Vec<Violation>> {
    let mut violations = rep.quiver.structural_violations();
    for (idx, arrow) in rep.quiver.arrows() {
        let m = rep.matrix(idx);
        let expected = (rep.dim(arrow.target), rep.dim(arrow.source));
        if (m.nrows(), m.ncols()) != expected {
            violations.push(Violation::ShapeMismatch {
                arrow: arrow.id.clone(),
                expected,
                found: (m.nrows(), m.ncols()),
            });
        }
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                for p in m[(i, j)].parameters() {
                    if !rep.parameters.iter().any(|q| q == p) {
                        let v = Violation::UndeclaredParameter {
                            arrow: arrow.id.clone(),
                            parameter: p.to_string(),
                        };
                        if !violations.contains(&v) {
                            violations.push(v);
                        }
                    }
                }
            }
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// A (possibly trivial) path: arrows listed in traversal order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    source: VertexIdx,
    target: VertexIdx,
    arrows: Vec<ArrowIdx>,
}

impl Path {
    pub fn trivial(vertex: VertexIdx) -> Self {
        Path {
            source: vertex,
            target: vertex,
            arrows: Vec::new(),
        }
    }

    pub fn from_arrows(quiver: &Quiver, arrows: Vec<ArrowIdx>) -> Result<Self, ModelError> {
        let first = arrows.first().ok_or(ModelError::EmptyArrowSequence)?;
        let source = quiver.arrow(*first).source;
        let mut at = source;
        for (step, &a) in arrows.iter().enumerate() {
            let arrow = quiver.arrow(a);
            if arrow.source != at {
                return Err(ModelError::PathNotComposable {
                    step,
                    arrow: arrow.id.clone(),
                    expected: quiver.vertex_name(at).to_string(),
                    found: quiver.vertex_name(arrow.source).to_string(),
                });
            }
            at = arrow.target;
        }
        Ok(Path {
            source,
            target: at,
            arrows,
        })
    }

    pub fn from_arrow_ids(quiver: &Quiver, ids: &[&str]) -> Result<Self, ModelError> {
        let arrows = ids
            .iter()
            .map(|id| quiver.arrow_idx(id))
            .collect::<Result<Vec<_>, _>>()?;
        Path::from_arrows(quiver, arrows)
    }

    pub fn source(&self) -> VertexIdx {
        self.source
    }

    pub fn target(&self) -> VertexIdx {
        self.target
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrows(&self) -> &[ArrowIdx] {
        &self.arrows
    }

    /// Label: arrow ids joined by `.` in traversal order; `1_<v>` for the
    /// trivial path at vertex v.
    pub fn label(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("1_{}", quiver.vertex_name(self.source))
        } else {
            self.arrows
                .iter()
                .map(|&a| quiver.arrow(a).id.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }
}

/// M_π = M_{v_n} ∘ ... ∘ M_{v_1}; the identity for the trivial path.
pub fn path_matrix(rep: &Representation, path: &Path) -> Result<ScalarMatrix, ModelError> {
    let quiver = rep.quiver();
    if path.is_empty() {
        return Ok(ScalarMatrix::identity(rep.dim(path.source())));
    }
    let mut at = path.source();
    let mut acc = ScalarMatrix::identity(rep.dim(at));
    for (step, &a) in path.arrows().iter().enumerate() {
        let arrow = quiver.arrow(a);
        if arrow.source != at {
            return Err(ModelError::PathNotComposable {
                step,
                arrow: arrow.id.clone(),
                expected: quiver.vertex_name(at).to_string(),
                found: quiver.vertex_name(arrow.source).to_string(),
            });
        }
        acc = rep.matrix(a).mul(&acc);
        at = arrow.target;
    }
    if at != path.target() {
        return Err(ModelError::PathEndpointMismatch {
            start: quiver.vertex_name(path.source()).to_string(),
            end: quiver.vertex_name(path.target()).to_string(),
        });
    }
    Ok(acc)
}

/// All paths of length 0..=max_len: trivial paths first (vertex order), then
/// by length, and within a length lexicographically by arrow identifiers.
pub fn enumerate_paths(quiver: &Quiver, max_len: usize) -> Vec<Path> {
    let mut out: Vec<Path> = (0..quiver.vertex_count())
        .map(|v| Path::trivial(VertexIdx(v)))
        .collect();

    // arrows sorted by identifier once; extension preserves lex order
    let mut arrow_order: Vec<ArrowIdx> = quiver.arrows().map(|(i, _)| i).collect();
    arrow_order.sort_by(|&a, &b| quiver.arrow(a).id.cmp(&quiver.arrow(b).id));

    let mut current: Vec<Path> = arrow_order
        .iter()
        .map(|&a| {
            let arrow = quiver.arrow(a);
            Path {
                source: arrow.source,
                target: arrow.target,
                arrows: vec![a],
            }
        })
        .collect();
    let mut len = 1;
    while len <= max_len && !current.is_empty() {
        out.extend(current.iter().cloned());
        let mut next = Vec::new();
        for p in &current {
            for &a in &arrow_order {
                let arrow = quiver.arrow(a);
                if arrow.source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    next.push(Path {
                        source: p.source,
                        target: arrow.target,
                        arrows,
                    });
                }
            }
        }
        current = next;
        len += 1;
    }
    out
}
