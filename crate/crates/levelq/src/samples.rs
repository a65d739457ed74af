//! Bundled sample inputs shared by the verification suite and tests.

use crate::monalg::MonomialAlgebra;
use crate::scomplex::SimplicialComplex;

/// The complete bipartite graph K_{2,3} on parts {2,4} and {1,3,5}: a
/// 1-dimensional doubly Cohen–Macaulay complex with h-vector (1,3,2) and
/// β_1 = 2 (two independent squares, on {1,2,4,5} and {2,3,4,5}).
pub fn k23() -> SimplicialComplex {
    SimplicialComplex::validate(
        5,
        &[
            vec![1, 2],
            vec![2, 3],
            vec![3, 4],
            vec![1, 4],
            vec![4, 5],
            vec![2, 5],
        ],
    )
    .expect("valid complex")
}

/// Square with one diagonal (a theta graph): doubly Cohen–Macaulay with
/// h-vector (1,2,2).
pub fn square_with_diagonal() -> SimplicialComplex {
    SimplicialComplex::validate(
        4,
        &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4], vec![2, 4]],
    )
    .expect("valid complex")
}

/// k[x,y,z]/(x^3, x^2y, x^2z, yz, y^2, z^2): level with Hilbert function
/// (1,3,3); no Gorenstein quotient has Hilbert function (1,3,1) (two
/// pairing rows are proportional for every socle functional).
pub fn rigid_level_algebra() -> MonomialAlgebra {
    MonomialAlgebra::new(
        3,
        vec![
            vec![3, 0, 0],
            vec![2, 1, 0],
            vec![2, 0, 1],
            vec![0, 1, 1],
            vec![0, 2, 0],
            vec![0, 0, 2],
        ],
    )
    .expect("valid ideal")
}

/// k[x,y,z]/(x^3, x^2y, xy^2, xz, y^2, z^2): level with Hilbert function
/// (1,3,3); the all-ones socle functional yields a Gorenstein quotient
/// with Hilbert function (1,3,1).
pub fn flexible_level_algebra() -> MonomialAlgebra {
    MonomialAlgebra::new(
        3,
        vec![
            vec![3, 0, 0],
            vec![2, 1, 0],
            vec![1, 2, 0],
            vec![1, 0, 1],
            vec![0, 2, 0],
            vec![0, 0, 2],
        ],
    )
    .expect("valid ideal")
}

/// The degree-5 truncation of k[x,y,z]/(yz^3, z^4): a level monomial
/// algebra with Hilbert function (1,3,6,10,13,16).
pub fn truncated_level_algebra() -> MonomialAlgebra {
    MonomialAlgebra::new(3, vec![vec![0, 1, 3], vec![0, 0, 4]])
        .expect("valid ideal")
        .truncate(5)
        .expect("finite after truncation")
}
