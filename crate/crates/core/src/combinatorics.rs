//! Ordered subsets of a vertex basis and the sign function ε.
//!
//! Basis indices are local and 1-based: the basis at a vertex of dimension d
//! is {1, .., d}. All orderings are lexicographic, which every deterministic
//! output order in the crate derives from.

use crate::model::VertexIdx;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("basis index {index} is out of range 1..={dim}")]
    IndexOutOfRange { index: u32, dim: usize },
    #[error("subset size {size} exceeds basis dimension {dim}")]
    SizeTooLarge { size: usize, dim: usize },
    #[error("C({dim},{size}) = {count} subsets is beyond desk scale")]
    TooManySubsets {
        dim: usize,
        size: usize,
        count: u128,
    },
    #[error("members must be strictly increasing, got {0:?}")]
    NotStrictlyIncreasing(Vec<u32>),
}

/// An ordered subset of the local basis {1, .., d} at one vertex.
///
/// Equality and ordering are lexicographic on (vertex, members).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSubset {
    vertex: VertexIdx,
    members: Vec<u32>,
}

impl IndexSubset {
    pub fn new(vertex: VertexIdx, members: Vec<u32>) -> Result<Self, CombinatoricsError> {
        if !members.windows(2).all(|w| w[0] < w[1]) {
            return Err(CombinatoricsError::NotStrictlyIncreasing(members));
        }
        if members.first().is_some_and(|&m| m == 0) {
            return Err(CombinatoricsError::IndexOutOfRange { index: 0, dim: 0 });
        }
        Ok(IndexSubset { vertex, members })
    }

    pub fn empty(vertex: VertexIdx) -> Self {
        IndexSubset {
            vertex,
            members: Vec::new(),
        }
    }

    pub fn vertex(&self) -> VertexIdx {
        self.vertex
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: u32) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// The subset with `i` inserted; `i` must not already be a member.
    pub fn with(&self, i: u32) -> IndexSubset {
        debug_assert!(!self.contains(i));
        let pos = self.members.partition_point(|&m| m < i);
        let mut members = self.members.clone();
        members.insert(pos, i);
        IndexSubset {
            vertex: self.vertex,
            members,
        }
    }

    /// The subset with `i` removed; `i` must be a member.
    pub fn without(&self, i: u32) -> IndexSubset {
        debug_assert!(self.contains(i));
        let members = self.members.iter().copied().filter(|&m| m != i).collect();
        IndexSubset {
            vertex: self.vertex,
            members,
        }
    }

    /// Validates membership range against the vertex dimension.
    pub fn check_dim(&self, dim: usize) -> Result<(), CombinatoricsError> {
        match self.members.last() {
            Some(&m) if m as usize > dim => {
                Err(CombinatoricsError::IndexOutOfRange { index: m, dim })
            }
            _ => Ok(()),
        }
    }
}

/// ε(i, I) = #{i' ∈ I : i' ≤ i}. Defined whether or not i is a member of I.
pub fn epsilon(i: u32, subset: &IndexSubset) -> u32 {
    subset.members.partition_point(|&m| m <= i) as u32
}

/// Range-checked ε for callers holding untrusted indices.
pub fn epsilon_checked(
    i: u32,
    subset: &IndexSubset,
    dim: usize,
) -> Result<u32, CombinatoricsError> {
    if i == 0 || i as usize > dim {
        return Err(CombinatoricsError::IndexOutOfRange { index: i, dim });
    }
    subset.check_dim(dim)?;
    Ok(epsilon(i, subset))
}

/// All k-subsets of {1, .., d} at a vertex, in lexicographic order.
pub fn k_subsets(
    vertex: VertexIdx,
    dim: usize,
    k: usize,
) -> Result<Vec<IndexSubset>, CombinatoricsError> {
    if k > dim {
        return Err(CombinatoricsError::SizeTooLarge { size: k, dim });
    }
    let count = binomial_u128(dim, k);
    if count > 50_000_000 {
        return Err(CombinatoricsError::TooManySubsets {
            dim,
            size: k,
            count,
        });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut current: Vec<u32> = (1..=k as u32).collect();
    loop {
        out.push(IndexSubset {
            vertex,
            members: current.clone(),
        });
        // advance to the lexicographic successor
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if current[pos] < (dim - (k - 1 - pos)) as u32 {
                current[pos] += 1;
                for j in pos + 1..k {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return Ok(out);
            }
        }
        if k == 0 {
            return Ok(out);
        }
    }
}

/// 0-based position of a subset within `k_subsets(vertex, dim, |I|)`.
pub fn subset_rank(subset: &IndexSubset, dim: usize) -> Result<u64, CombinatoricsError> {
    subset.check_dim(dim)?;
    let k = subset.len();
    let mut rank = 0u64;
    let mut prev = 0u32;
    for (j, &c) in subset.members.iter().enumerate() {
        for x in prev + 1..c {
            rank += binomial(dim - x as usize, k - j - 1);
        }
        prev = c;
    }
    Ok(rank)
}

/// Exact binomial coefficient; callers stay far below u64 range (the
/// subset-enumeration guard kicks in first).
pub fn binomial(n: usize, k: usize) -> u64 {
    binomial_u128(n, k) as u64
}

fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// The number of e-dimensional subspaces of F_q^d.
pub fn gaussian_binomial(d: usize, e: usize, q: u64) -> u128 {
    if e > d {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    let q = q as u128;
    for i in 0..e {
        num *= q.pow((d - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(idx: usize) -> VertexIdx {
        VertexIdx(idx)
    }

    fn subset(members: &[u32]) -> IndexSubset {
        IndexSubset::new(v(0), members.to_vec()).unwrap()
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon(2, &subset(&[1, 3])), 1);
        assert_eq!(epsilon(7, &subset(&[4, 5, 6, 7])), 4);
        assert_eq!(epsilon(1, &subset(&[])), 0);
        assert!(epsilon_checked(9, &subset(&[1]), 8).is_err());
        assert!(epsilon_checked(0, &subset(&[1]), 8).is_err());
    }

    #[test]
    fn k_subsets_lexicographic() {
        let subs = k_subsets(v(0), 3, 2).unwrap();
        let members: Vec<_> = subs.iter().map(|s| s.members().to_vec()).collect();
        assert_eq!(members, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);

        assert_eq!(k_subsets(v(0), 4, 0).unwrap().len(), 1);
        assert!(k_subsets(v(0), 4, 0).unwrap()[0].is_empty());

        let subs = k_subsets(v(0), 4, 3).unwrap();
        let members: Vec<_> = subs.iter().map(|s| s.members().to_vec()).collect();
        assert_eq!(
            members,
            vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]
        );

        assert!(k_subsets(v(0), 2, 3).is_err());
    }

    #[test]
    fn subset_rank_examples() {
        assert_eq!(subset_rank(&subset(&[1, 2]), 3).unwrap(), 0);
        assert_eq!(subset_rank(&subset(&[2, 3]), 3).unwrap(), 2);
        assert_eq!(subset_rank(&subset(&[1, 3, 4]), 4).unwrap(), 2);
    }

    #[test]
    fn rank_inverts_indexing_exhaustively() {
        for d in 0..=8usize {
            for k in 0..=d {
                let subs = k_subsets(v(1), d, k).unwrap();
                assert_eq!(subs.len() as u64, binomial(d, k));
                for (pos, s) in subs.iter().enumerate() {
                    assert_eq!(subset_rank(s, d).unwrap(), pos as u64);
                }
            }
        }
    }

    #[test]
    fn epsilon_insert_remove_shift() {
        for d in 1..=8u32 {
            for k in 0..=d as usize {
                for s in k_subsets(v(0), d as usize, k).unwrap() {
                    for i in 1..=d {
                        if s.contains(i) {
                            assert_eq!(epsilon(i, &s.without(i)), epsilon(i, &s) - 1);
                        } else {
                            assert_eq!(epsilon(i, &s.with(i)), epsilon(i, &s) + 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_subsets_rejected() {
        assert!(IndexSubset::new(v(0), vec![2, 2]).is_err());
        assert!(IndexSubset::new(v(0), vec![3, 1]).is_err());
        assert!(IndexSubset::new(v(0), vec![0, 1]).is_err());
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(4, 2, 3), 130);
        assert_eq!(gaussian_binomial(3, 2, 2), 7);
        assert_eq!(gaussian_binomial(5, 2, 5), 20306);
        assert_eq!(gaussian_binomial(4, 4, 7), 1);
        assert_eq!(gaussian_binomial(4, 0, 7), 1);
    }
}
