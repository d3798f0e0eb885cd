//! Built-in sample representations used throughout the tests and shipped as
//! fixture files for the CLI. Each returns the representation together with
//! the subrepresentation dimension vector of interest.

use crate::model::{DimensionVector, Quiver, Representation, ScalarMatrix};
use crate::scalar::Scalar;

/// D4 in subspace orientation; the subrepresentation variety is a del Pezzo
/// surface of degree 6. Vertices in declaration order: z (center, dim 3),
/// then x, y, w (dim 2 each), so global basis labels run 1..9.
pub fn del_pezzo() -> (Representation, DimensionVector) {
    let quiver = Quiver::new(
        vec!["z".into(), "x".into(), "y".into(), "w".into()],
        vec![
            ("a".into(), "x".into(), "z".into()),
            ("b".into(), "y".into(), "z".into()),
            ("c".into(), "w".into(), "z".into()),
        ],
    )
    .unwrap();
    let matrices = vec![
        ScalarMatrix::from_integers(vec![vec![1, 0], vec![0, 1], vec![0, 0]]),
        ScalarMatrix::from_integers(vec![vec![0, 0], vec![1, 0], vec![0, 1]]),
        ScalarMatrix::from_integers(vec![vec![1, 0], vec![0, 0], vec![0, 1]]),
    ];
    let rep = Representation::new(
        quiver,
        DimensionVector::new(vec![3, 2, 2, 2]),
        matrices,
        vec![],
    );
    (rep, DimensionVector::new(vec![2, 1, 1, 1]))
}

/// Extended Dynkin Ã2 family with one parameter; the fibre is a smooth conic
/// for lambda != 0 and two crossing lines at lambda = 0, so the Euler
/// characteristic jumps from 2 to 3.
pub fn jumping_family() -> (Representation, DimensionVector) {
    let quiver = Quiver::new(
        vec!["left".into(), "mid".into(), "right".into()],
        vec![
            ("a".into(), "left".into(), "mid".into()),
            ("b".into(), "right".into(), "mid".into()),
            ("c".into(), "right".into(), "left".into()),
        ],
    )
    .unwrap();
    let lam = Scalar::parameter("lambda");
    let id2 = ScalarMatrix::identity(2);
    let mut a_c = ScalarMatrix::zeros(2, 2);
    a_c[(0, 0)] = lam.clone();
    a_c[(1, 0)] = Scalar::one();
    a_c[(1, 1)] = lam;
    let rep = Representation::new(
        quiver,
        DimensionVector::new(vec![2, 2, 2]),
        vec![id2.clone(), id2, a_c],
        vec!["lambda".into()],
    );
    (rep, DimensionVector::new(vec![1, 2, 1]))
}

/// Four-arrow Kronecker-type quiver whose subrepresentation variety is the
/// union of an elliptic curve and two projective lines.
pub fn elliptic_lines() -> (Representation, DimensionVector) {
    let quiver = Quiver::new(
        vec!["src".into(), "dst".into()],
        vec![
            ("a".into(), "src".into(), "dst".into()),
            ("b".into(), "src".into(), "dst".into()),
            ("c".into(), "src".into(), "dst".into()),
            ("d".into(), "src".into(), "dst".into()),
        ],
    )
    .unwrap();
    let matrices = vec![
        ScalarMatrix::from_integers(vec![
            vec![1, 0, 0],
            vec![0, 0, 0],
            vec![0, 0, 0],
            vec![0, 0, 1],
        ]),
        ScalarMatrix::from_integers(vec![
            vec![0, 1, 0],
            vec![0, 0, 0],
            vec![0, 0, 1],
            vec![0, 0, 0],
        ]),
        ScalarMatrix::from_integers(vec![
            vec![0, 0, 0],
            vec![0, 0, 1],
            vec![0, 0, 0],
            vec![1, 0, 0],
        ]),
        ScalarMatrix::from_integers(vec![
            vec![1, 0, 0],
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 0],
        ]),
    ];
    let rep = Representation::new(quiver, DimensionVector::new(vec![3, 4]), matrices, vec![]);
    (rep, DimensionVector::new(vec![1, 3]))
}
