//! Builders for the classical matrix families gl, sl, so (odd/even), sp with
//! their standard elementary-matrix-derived bases and diagonal Cartan
//! subalgebras. Bases are fixed and documented so results reproduce
//! bit-for-bit:
//!
//! * `gl(n)`: all `E(i,j)` row-major; Cartan = diagonal `E(i,i)`.
//! * `sl(n)`: `H_k = E(k,k) - E(k+1,k+1)` first, then off-diagonal `E(i,j)`.
//! * `sp(2n)`: split symplectic form `[[0,I],[-I,0]]`.
//! * `so(2n+1)`, `so(2n)`: split symmetric forms `[[1,0,0],[0,0,I],[0,I,0]]`
//!   and `[[0,I],[I,0]]`.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::Zero;
use thiserror::Error;

use super::{Element, LieAlgebra, LieError, SparseVec};
use crate::linalg::{rat, BasisSolver, Matrix, Rational};
use crate::toral::ToralSubalgebra;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Gl,
    Sl,
    SoOdd,
    SoEven,
    Sp,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Family::Gl => "gl",
            Family::Sl => "sl",
            Family::SoOdd => "so_odd",
            Family::SoEven => "so_even",
            Family::Sp => "sp",
        };
        write!(f, "{s}")
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gl" => Ok(Family::Gl),
            "sl" => Ok(Family::Sl),
            "so_odd" => Ok(Family::SoOdd),
            "so_even" => Ok(Family::SoEven),
            "sp" => Ok(Family::Sp),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("unsupported parameters: {family} with n = {n}")]
    Unsupported { family: Family, n: usize },
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Sparse matrix as a list of ((row, col), value).
type SparseMat = Vec<((usize, usize), Rational)>;

fn elem(i: usize, j: usize) -> SparseMat {
    vec![((i, j), rat(1))]
}

fn minus(m: SparseMat) -> SparseMat {
    m.into_iter().map(|(p, c)| (p, -c)).collect()
}

fn plus(mut a: SparseMat, b: SparseMat) -> SparseMat {
    a.extend(b);
    a
}

fn commutator(a: &SparseMat, b: &SparseMat) -> SparseMat {
    let mut acc: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    for ((ai, aj), ac) in a {
        for ((bi, bj), bc) in b {
            if aj == bi {
                *acc.entry((*ai, *bj)).or_insert_with(|| rat(0)) += ac * bc;
            }
            if bj == ai {
                *acc.entry((*bi, *aj)).or_insert_with(|| rat(0)) -= ac * bc;
            }
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn vectorize(m: &SparseMat, size: usize) -> Vec<Rational> {
    let mut v = vec![rat(0); size * size];
    for ((i, j), c) in m {
        v[i * size + j] += c;
    }
    v
}

/// Builds the requested classical algebra together with its diagonal Cartan
/// subalgebra, marked as the toral subalgebra.
pub fn build_classical(
    family: Family,
    n: usize,
) -> Result<(Arc<LieAlgebra>, ToralSubalgebra), BuildError> {
    let min = match family {
        Family::Sl => 2,
        _ => 1,
    };
    if n < min {
        return Err(BuildError::Unsupported { family, n });
    }
    let (size, mats, labels, cartan_indices) = match family {
        Family::Gl => gl_basis(n),
        Family::Sl => sl_basis(n),
        Family::Sp => sp_basis(n),
        Family::SoOdd => so_odd_basis(n),
        Family::SoEven => so_even_basis(n),
    };
    let dim = mats.len();
    let basis_rows = Matrix::from_rows(mats.iter().map(|m| vectorize(m, size)).collect());
    let solver = BasisSolver::new(&basis_rows).expect("classical bases are independent");
    let mut entries = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            let c = commutator(&mats[i], &mats[j]);
            if c.is_empty() {
                continue;
            }
            let coords = solver
                .coords_sparse(&sparse_cells(&c, size))
                .expect("classical algebras close under the commutator");
            let terms: SparseVec = coords
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect();
            entries.push(((i, j), terms));
        }
    }
    let algebra = Arc::new(LieAlgebra::new(dim, labels, entries)?);
    let cartan: Vec<Element> = cartan_indices
        .iter()
        .map(|&i| Element::basis(dim, i))
        .collect();
    let toral = ToralSubalgebra::new(Arc::clone(&algebra), cartan)
        .expect("diagonal Cartan subalgebras are abelian");
    Ok((algebra, toral))
}

fn sparse_cells(m: &SparseMat, size: usize) -> Vec<(usize, Rational)> {
    m.iter().map(|((i, j), c)| (i * size + j, c.clone())).collect()
}

fn gl_basis(n: usize) -> (usize, Vec<SparseMat>, Vec<String>, Vec<usize>) {
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    let mut cartan = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                cartan.push(mats.len());
            }
            mats.push(elem(i, j));
            labels.push(format!("E({},{})", i + 1, j + 1));
        }
    }
    (n, mats, labels, cartan)
}

fn sl_basis(n: usize) -> (usize, Vec<SparseMat>, Vec<String>, Vec<usize>) {
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for k in 0..(n - 1) {
        mats.push(plus(elem(k, k), minus(elem(k + 1, k + 1))));
        labels.push(format!("H{}", k + 1));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                mats.push(elem(i, j));
                labels.push(format!("E({},{})", i + 1, j + 1));
            }
        }
    }
    (n, mats, labels, (0..(n - 1)).collect())
}

fn sp_basis(n: usize) -> (usize, Vec<SparseMat>, Vec<String>, Vec<usize>) {
    let size = 2 * n;
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for k in 0..n {
        mats.push(plus(elem(k, k), minus(elem(n + k, n + k))));
        labels.push(format!("H{}", k + 1));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                mats.push(plus(elem(i, j), minus(elem(n + j, n + i))));
                labels.push(format!("A({},{})", i + 1, j + 1));
            }
        }
    }
    for i in 0..n {
        for j in i..n {
            let m = if i == j {
                elem(i, n + i)
            } else {
                plus(elem(i, n + j), elem(j, n + i))
            };
            mats.push(m);
            labels.push(format!("B({},{})", i + 1, j + 1));
        }
    }
    for i in 0..n {
        for j in i..n {
            let m = if i == j {
                elem(n + i, i)
            } else {
                plus(elem(n + i, j), elem(n + j, i))
            };
            mats.push(m);
            labels.push(format!("C({},{})", i + 1, j + 1));
        }
    }
    (size, mats, labels, (0..n).collect())
}

fn so_odd_basis(n: usize) -> (usize, Vec<SparseMat>, Vec<String>, Vec<usize>) {
    // Index 0 is the extra coordinate; blocks are 1..=n and n+1..=2n.
    let size = 2 * n + 1;
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for k in 1..=n {
        mats.push(plus(elem(k, k), minus(elem(n + k, n + k))));
        labels.push(format!("H{k}"));
    }
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                mats.push(plus(elem(i, j), minus(elem(n + j, n + i))));
                labels.push(format!("A({i},{j})"));
            }
        }
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            mats.push(plus(elem(i, n + j), minus(elem(j, n + i))));
            labels.push(format!("B({i},{j})"));
        }
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            mats.push(plus(elem(n + i, j), minus(elem(n + j, i))));
            labels.push(format!("C({i},{j})"));
        }
    }
    for j in 1..=n {
        mats.push(plus(elem(0, n + j), minus(elem(j, 0))));
        labels.push(format!("U{j}"));
    }
    for j in 1..=n {
        mats.push(plus(elem(0, j), minus(elem(n + j, 0))));
        labels.push(format!("V{j}"));
    }
    (size, mats, labels, (0..n).collect())
}

fn so_even_basis(n: usize) -> (usize, Vec<SparseMat>, Vec<String>, Vec<usize>) {
    let size = 2 * n;
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for k in 0..n {
        mats.push(plus(elem(k, k), minus(elem(n + k, n + k))));
        labels.push(format!("H{}", k + 1));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                mats.push(plus(elem(i, j), minus(elem(n + j, n + i))));
                labels.push(format!("A({},{})", i + 1, j + 1));
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            mats.push(plus(elem(i, n + j), minus(elem(j, n + i))));
            labels.push(format!("B({},{})", i + 1, j + 1));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            mats.push(plus(elem(n + i, j), minus(elem(n + j, i))));
            labels.push(format!("C({},{})", i + 1, j + 1));
        }
    }
    (size, mats, labels, (0..n).collect())
}
