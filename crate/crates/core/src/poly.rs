//! Sparse exact polynomials in Plücker variables.
//!
//! A variable is an ordered basis subset at a vertex; a monomial is a
//! multiset of variables; coefficients are exact `Scalar`s. Terms are kept in
//! a canonical order (lexicographic on the sorted variable lists), zero
//! coefficients are never stored, and displayed relations are sign-normalized
//! so the canonically first term has a positive leading coefficient.

use crate::combinatorics::IndexSubset;
use crate::field::{FieldError, PrimeField};
use crate::model::Representation;
use crate::scalar::{Scalar, ScalarError};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("no value assigned to variable {0:?}")]
    UnassignedVariable(PlueckerVariable),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A Plücker coordinate Δ_I: the subset I at its vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlueckerVariable {
    pub subset: IndexSubset,
}

impl PlueckerVariable {
    pub fn new(subset: IndexSubset) -> Self {
        PlueckerVariable { subset }
    }
}

/// A multiset of Plücker variables, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default, Hash)]
pub struct Monomial(Vec<PlueckerVariable>);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn from_vars(mut vars: Vec<PlueckerVariable>) -> Self {
        vars.sort();
        Monomial(vars)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn vars(&self) -> &[PlueckerVariable] {
        &self.0
    }

    /// Variables in display order: singletons before larger subsets, then by
    /// vertex and members. This mirrors how relations are conventionally
    /// written, e.g. `Delta[5]*Delta[1,3]`.
    fn display_order(&self) -> Vec<&PlueckerVariable> {
        let mut vs: Vec<&PlueckerVariable> = self.0.iter().collect();
        vs.sort_by_key(|v| {
            (
                v.subset.len(),
                v.subset.vertex(),
                v.subset.members().to_vec(),
            )
        });
        vs
    }
}

/// How Plücker variables are labeled in rendered output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Labeling {
    /// `Delta[vertex;i1,...,ik]` with per-vertex indices.
    Local,
    /// `Delta[g1,...,gk]` with basis vectors numbered consecutively across
    /// vertices in declaration order.
    Global,
}

/// A sparse polynomial in Plücker variables with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct RelationPolynomial {
    terms: BTreeMap<Monomial, Scalar>,
}

impl RelationPolynomial {
    pub fn zero() -> Self {
        RelationPolynomial::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = acc.entry(m).or_insert_with(Scalar::zero);
            *entry = entry.add(&c);
        }
        acc.retain(|_, c| !c.is_zero());
        RelationPolynomial { terms: acc }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn variables(&self) -> Vec<&PlueckerVariable> {
        let mut vs: Vec<&PlueckerVariable> = self.terms.keys().flat_map(|m| m.vars()).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn add(&self, other: &RelationPolynomial) -> RelationPolynomial {
        RelationPolynomial::from_terms(
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    pub fn neg(&self) -> RelationPolynomial {
        RelationPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, r: &BigRational) -> RelationPolynomial {
        if r.is_zero() {
            return RelationPolynomial::zero();
        }
        RelationPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.scale(r)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &RelationPolynomial) -> RelationPolynomial {
        let mut terms = Vec::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut vars = m1.0.clone();
                vars.extend(m2.0.iter().cloned());
                terms.push((Monomial::from_vars(vars), c1.mul(c2)));
            }
        }
        RelationPolynomial::from_terms(terms)
    }

    /// Sign normalization: flip the overall sign if the canonically first
    /// term has a negative leading coefficient. Relations cut out a zero
    /// locus, so the overall sign carries no information.
    pub fn normalize_sign(&self) -> RelationPolynomial {
        match self
            .terms
            .values()
            .next()
            .and_then(Scalar::leading_rational)
        {
            Some(lead) if lead.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Substitute scalars for some variables, leaving the rest symbolic.
    pub fn substitute(
        &self,
        assignments: &BTreeMap<PlueckerVariable, Scalar>,
    ) -> RelationPolynomial {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut kept = Vec::new();
            for v in m.vars() {
                match assignments.get(v) {
                    Some(s) => coeff = coeff.mul(s),
                    None => kept.push(v.clone()),
                }
            }
            terms.push((Monomial::from_vars(kept), coeff));
        }
        RelationPolynomial::from_terms(terms)
    }

    /// Exact evaluation over the rationals.
    pub fn evaluate_rational(
        &self,
        point: &BTreeMap<PlueckerVariable, BigRational>,
        params: &BTreeMap<String, BigRational>,
    ) -> Result<BigRational, PolyError> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.eval_rational(params)?;
            for v in m.vars() {
                let value = point
                    .get(v)
                    .ok_or_else(|| PolyError::UnassignedVariable(v.clone()))?;
                term *= value;
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Exact evaluation over a prime field; point values are residues in
    /// `[0, p)` and anything unreduced is rejected.
    pub fn evaluate_mod(
        &self,
        point: &BTreeMap<PlueckerVariable, u64>,
        params: &BTreeMap<String, BigRational>,
        field: PrimeField,
    ) -> Result<u64, PolyError> {
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut term = c.eval_mod(params, field)?;
            for v in m.vars() {
                let value = *point
                    .get(v)
                    .ok_or_else(|| PolyError::UnassignedVariable(v.clone()))?;
                term = field.mul(term, field.check_residue(value)?);
            }
            acc = field.add(acc, term);
        }
        Ok(acc)
    }

    /// True iff `self = c * other` for some nonzero rational constant c.
    /// Parameters are never rescaled.
    pub fn proportional_eq(&self, other: &RelationPolynomial) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        if !self.terms.keys().eq(other.terms.keys()) {
            return false;
        }
        let (lead_self, lead_other) = (
            self.terms.values().next().unwrap(),
            other.terms.values().next().unwrap(),
        );
        let (Some(a), Some(b)) = (lead_self.leading_rational(), lead_other.leading_rational())
        else {
            return false;
        };
        let c = a / b;
        if c.is_zero() {
            return false;
        }
        self.terms
            .iter()
            .zip(other.terms.iter())
            .all(|((_, ca), (_, cb))| ca.is_rational_multiple_of(cb, &c))
    }

    fn render_variable(var: &PlueckerVariable, rep: &Representation, labeling: Labeling) -> String {
        let members = var.subset.members();
        match labeling {
            Labeling::Global => {
                let labels: Vec<String> = members
                    .iter()
                    .map(|&i| rep.global_label(var.subset.vertex(), i).to_string())
                    .collect();
                format!("Delta[{}]", labels.join(","))
            }
            Labeling::Local => {
                let labels: Vec<String> = members.iter().map(u32::to_string).collect();
                format!(
                    "Delta[{};{}]",
                    rep.quiver().vertex_name(var.subset.vertex()),
                    labels.join(",")
                )
            }
        }
    }

    /// Deterministic rendering in canonical term order with caller-supplied
    /// variable names.
    pub fn render_with(&self, namer: &dyn Fn(&PlueckerVariable) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag, parens) = c.display_parts();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            let coeff_is_unit = !parens && mag == "1";
            if !coeff_is_unit || m.degree() == 0 {
                factors.push(if parens { format!("({mag})") } else { mag });
            }
            for v in m.display_order() {
                factors.push(namer(v));
            }
            let _ = write!(out, "{}", factors.join("*"));
        }
        out
    }

    /// Deterministic rendering in canonical term order. Equal strings imply
    /// equal polynomials and conversely, for fixed representation/labeling.
    pub fn canonical_string(&self, rep: &Representation, labeling: Labeling) -> String {
        self.render_with(&|v| Self::render_variable(v, rep, labeling))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::IndexSubset;
    use crate::model::VertexIdx;
    use crate::samples;
    use std::str::FromStr;

    fn var(vertex: usize, members: &[u32]) -> PlueckerVariable {
        PlueckerVariable::new(IndexSubset::new(VertexIdx(vertex), members.to_vec()).unwrap())
    }

    fn mono(vars: &[PlueckerVariable]) -> Monomial {
        Monomial::from_vars(vars.to_vec())
    }

    fn rat(s: &str) -> BigRational {
        BigRational::from_str(s).unwrap()
    }

    /// The classical relation of the one-vertex quiver on 4 basis vectors:
    /// Delta[1,2]*Delta[3,4] - Delta[1,3]*Delta[2,4] + Delta[1,4]*Delta[2,3].
    fn gr24_classical() -> RelationPolynomial {
        RelationPolynomial::from_terms(vec![
            (
                mono(&[var(0, &[1, 2]), var(0, &[3, 4])]),
                Scalar::from_integer(1),
            ),
            (
                mono(&[var(0, &[1, 3]), var(0, &[2, 4])]),
                Scalar::from_integer(-1),
            ),
            (
                mono(&[var(0, &[1, 4]), var(0, &[2, 3])]),
                Scalar::from_integer(1),
            ),
        ])
    }

    #[test]
    fn evaluate_classical_at_indicator_point() {
        let p = gr24_classical();
        let f = PrimeField::new(7).unwrap();
        let mut point = BTreeMap::new();
        for s in crate::combinatorics::k_subsets(VertexIdx(0), 4, 2).unwrap() {
            point.insert(PlueckerVariable::new(s), 0u64);
        }
        point.insert(var(0, &[1, 2]), 1);
        point.insert(var(0, &[3, 4]), 1);
        assert_eq!(p.evaluate_mod(&point, &BTreeMap::new(), f).unwrap(), 1);
    }

    #[test]
    fn evaluate_zero_constant_term_at_origin() {
        let p = gr24_classical();
        let f = PrimeField::new(5).unwrap();
        let point: BTreeMap<_, _> = crate::combinatorics::k_subsets(VertexIdx(0), 4, 2)
            .unwrap()
            .into_iter()
            .map(|s| (PlueckerVariable::new(s), 0u64))
            .collect();
        assert_eq!(p.evaluate_mod(&point, &BTreeMap::new(), f).unwrap(), 0);
    }

    #[test]
    fn evaluate_missing_assignment_errors() {
        let p = gr24_classical();
        let f = PrimeField::new(5).unwrap();
        assert!(matches!(
            p.evaluate_mod(&BTreeMap::new(), &BTreeMap::new(), f),
            Err(PolyError::UnassignedVariable(_))
        ));
        // unreduced residue is rejected rather than silently wrapped
        let mut point = BTreeMap::new();
        for s in crate::combinatorics::k_subsets(VertexIdx(0), 4, 2).unwrap() {
            point.insert(PlueckerVariable::new(s), 9u64);
        }
        assert!(matches!(
            p.evaluate_mod(&point, &BTreeMap::new(), f),
            Err(PolyError::Field(_))
        ));
    }

    #[test]
    fn evaluate_is_ring_homomorphism_on_random_points() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let f = PrimeField::new(5).unwrap();
        let vars: Vec<_> = (0..4).map(|i| var(0, &[i + 1])).collect();
        for _ in 0..50 {
            let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
                RelationPolynomial::from_terms((0..3).map(|_| {
                    let a = rng.gen_range(0..4);
                    let b = rng.gen_range(0..4);
                    (
                        mono(&[vars[a].clone(), vars[b].clone()]),
                        Scalar::from_integer(rng.gen_range(-3..=3)),
                    )
                }))
            };
            let p = rand_poly(&mut rng);
            let q = rand_poly(&mut rng);
            let point: BTreeMap<_, _> = vars
                .iter()
                .map(|v| (v.clone(), rng.gen_range(0..5u64)))
                .collect();
            let no_params = BTreeMap::new();
            let vp = p.evaluate_mod(&point, &no_params, f).unwrap();
            let vq = q.evaluate_mod(&point, &no_params, f).unwrap();
            assert_eq!(
                p.add(&q).evaluate_mod(&point, &no_params, f).unwrap(),
                f.add(vp, vq)
            );
            assert_eq!(
                p.mul(&q).evaluate_mod(&point, &no_params, f).unwrap(),
                f.mul(vp, vq)
            );
        }
    }

    #[test]
    fn proportional_eq_detects_scalar_multiples() {
        let p = gr24_classical();
        assert!(p.proportional_eq(&p.neg()));
        assert!(p.proportional_eq(&p.scale(&rat("-7/3"))));
        assert!(!p.proportional_eq(&RelationPolynomial::zero()));
        assert!(RelationPolynomial::zero().proportional_eq(&RelationPolynomial::zero()));

        // Delta[5]*Delta[1,3] - Delta[4]*Delta[2,3] versus its negative
        let d5_d13 = mono(&[var(1, &[2]), var(0, &[1, 3])]);
        let d4_d23 = mono(&[var(1, &[1]), var(0, &[2, 3])]);
        let a = RelationPolynomial::from_terms(vec![
            (d5_d13.clone(), Scalar::from_integer(1)),
            (d4_d23.clone(), Scalar::from_integer(-1)),
        ]);
        let b = RelationPolynomial::from_terms(vec![
            (d4_d23, Scalar::from_integer(1)),
            (d5_d13, Scalar::from_integer(-1)),
        ]);
        assert!(a.proportional_eq(&b));
    }

    #[test]
    fn proportional_eq_rejects_relative_sign_flip() {
        // lambda*D3*D4 - lambda*D1*D6 - D1*D3 vs lambda*D3*D4 - lambda*D1*D6 + D1*D3
        let lam = Scalar::parameter("lambda");
        let m34 = mono(&[var(2, &[1]), var(0, &[2])]);
        let m16 = mono(&[var(0, &[1]), var(2, &[2])]);
        let m13 = mono(&[var(0, &[1]), var(2, &[1])]);
        let a = RelationPolynomial::from_terms(vec![
            (m34.clone(), lam.clone()),
            (m16.clone(), lam.neg()),
            (m13.clone(), Scalar::from_integer(-1)),
        ]);
        let b = RelationPolynomial::from_terms(vec![
            (m34, lam.clone()),
            (m16, lam.neg()),
            (m13, Scalar::from_integer(1)),
        ]);
        assert!(!a.proportional_eq(&b));
        assert!(a.proportional_eq(&a.neg()));
    }

    #[test]
    fn proportional_eq_is_an_equivalence_on_nonzero_polys() {
        let p = gr24_classical();
        let q = p.scale(&rat("3"));
        let r = p.scale(&rat("-1/2"));
        assert!(p.proportional_eq(&p));
        assert!(p.proportional_eq(&q) && q.proportional_eq(&p));
        assert!(p.proportional_eq(&q) && q.proportional_eq(&r) && p.proportional_eq(&r));
    }

    #[test]
    fn canonical_string_forms() {
        let (rep, _) = samples::del_pezzo();
        assert_eq!(
            RelationPolynomial::zero().canonical_string(&rep, Labeling::Global),
            "0"
        );
        // Delta[5]*Delta[1,3] - Delta[4]*Delta[2,3]: vertex z is 0, vertex x is 1
        let p = RelationPolynomial::from_terms(vec![
            (
                mono(&[var(1, &[2]), var(0, &[1, 3])]),
                Scalar::from_integer(1),
            ),
            (
                mono(&[var(1, &[1]), var(0, &[2, 3])]),
                Scalar::from_integer(-1),
            ),
        ]);
        assert_eq!(
            p.canonical_string(&rep, Labeling::Global),
            "Delta[5]*Delta[1,3] - Delta[4]*Delta[2,3]"
        );
        assert_eq!(
            p.canonical_string(&rep, Labeling::Local),
            "Delta[x;2]*Delta[z;1,3] - Delta[x;1]*Delta[z;2,3]"
        );
        // normalization flips the leading sign
        assert_eq!(
            p.neg()
                .normalize_sign()
                .canonical_string(&rep, Labeling::Global),
            "Delta[5]*Delta[1,3] - Delta[4]*Delta[2,3]"
        );
    }

    #[test]
    fn canonical_string_is_injective_on_a_family() {
        let (rep, _) = samples::del_pezzo();
        let polys = [
            gr24_classical(),
            gr24_classical().neg(),
            gr24_classical().scale(&rat("2")),
            RelationPolynomial::zero(),
        ];
        for a in &polys {
            for b in &polys {
                let sa = a.canonical_string(&rep, Labeling::Global);
                let sb = b.canonical_string(&rep, Labeling::Global);
                assert_eq!(a == b, sa == sb);
            }
        }
    }

    #[test]
    fn substitute_drops_and_scales() {
        let p = gr24_classical();
        let mut assign = BTreeMap::new();
        assign.insert(var(0, &[3, 4]), Scalar::one());
        assign.insert(var(0, &[2, 4]), Scalar::zero());
        let q = p.substitute(&assign);
        // Delta[1,2] + Delta[1,4]*Delta[2,3]
        assert_eq!(q.num_terms(), 2);
        let quiver = crate::model::Quiver::new(vec!["p".into()], vec![]).unwrap();
        let rep = Representation::new(
            quiver,
            crate::model::DimensionVector::new(vec![4]),
            vec![],
            vec![],
        );
        let s = q.canonical_string(&rep, Labeling::Global);
        assert_eq!(s, "Delta[1,2] + Delta[1,4]*Delta[2,3]");
    }
}
