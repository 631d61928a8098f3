//! Row-to-row transfer matrices of the symmetric six-vertex model with
//! periodic boundary conditions, and a brute-force lattice enumerator used
//! as an independent oracle for the partition function.
//!
//! Conventions. The Lax entry `L[(α', i'), (α, i)]` is the weight of a vertex
//! with left horizontal edge `α`, right horizontal edge `α'`, bottom vertical
//! edge `i` and top vertical edge `i'` (spin 0 or 1 on each edge). Nonzero
//! entries are
//!
//! * `a`: all four edges equal,
//! * `b`: `α = α'`, `i = i'`, `α != i`,
//! * `c`: `α' = i`, `i' = α`, `α != i`.
//!
//! Sites are multiplied as `L_N ... L_1` in the auxiliary space, so the
//! auxiliary line runs from site 1 (left) to site N (right). The quantum space
//! `C^(2^N)` is indexed big-endian, site 1 most significant. A transfer matrix
//! maps the bottom row of vertical edges (column index) to the top row (row
//! index); the partition function stacks N rows on the torus.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{commutator, kron, Matrix, Rational};
use crate::vertex::Weights;

/// Largest torus side accepted by [`enumerate_partition`].
pub const MAX_ENUMERATION_SIZE: usize = 3;

/// Monodromy `L_N ... L_1` as a 2×2 block matrix over the auxiliary space,
/// each block an operator on the `2^N`-dimensional quantum space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monodromy {
    blocks: [[Matrix; 2]; 2],
    sites: usize,
}

impl Monodromy {
    pub fn block(&self, row: usize, col: usize) -> &Matrix {
        &self.blocks[row][col]
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    /// Trace over the auxiliary space.
    pub fn trace(&self) -> Matrix {
        &self.blocks[0][0] + &self.blocks[1][1]
    }
}

/// Edge spins of an `n × n` periodic lattice.
///
/// `horizontal[r][c]` is the edge entering vertex `(r, c)` from the left,
/// `vertical[r][c]` the edge entering it from below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeConfig {
    pub horizontal: Vec<Vec<bool>>,
    pub vertical: Vec<Vec<bool>>,
}

/// Vertex type of a single vertex, `None` when the ice rule is violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexKind {
    A,
    B,
    C,
}

/// Classifies a vertex from its `(left, right, bottom, top)` edge spins.
pub fn vertex_kind(left: bool, right: bool, bottom: bool, top: bool) -> Option<VertexKind> {
    if left == right && bottom == top {
        Some(if left == bottom { VertexKind::A } else { VertexKind::B })
    } else if left == top && right == bottom {
        Some(VertexKind::C)
    } else {
        None
    }
}

impl LatticeConfig {
    pub fn size(&self) -> usize {
        self.horizontal.len()
    }

    /// Decodes a configuration from `2 n²` bits: horizontal edges first,
    /// row-major, then vertical edges.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        let bit = |k: usize| bits >> k & 1 == 1;
        let grid = |offset: usize| {
            (0..n)
                .map(|r| (0..n).map(|c| bit(offset + r * n + c)).collect())
                .collect()
        };
        Self {
            horizontal: grid(0),
            vertical: grid(n * n),
        }
    }

    /// Vertex counts `(#a, #b, #c)`, or `None` if any vertex breaks the ice rule.
    pub fn vertex_counts(&self) -> Option<(u32, u32, u32)> {
        let n = self.size();
        let mut counts = (0, 0, 0);
        for r in 0..n {
            for c in 0..n {
                let kind = vertex_kind(
                    self.horizontal[r][c],
                    self.horizontal[r][(c + 1) % n],
                    self.vertical[r][c],
                    self.vertical[(r + 1) % n][c],
                )?;
                match kind {
                    VertexKind::A => counts.0 += 1,
                    VertexKind::B => counts.1 += 1,
                    VertexKind::C => counts.2 += 1,
                }
            }
        }
        Some(counts)
    }

    /// Boltzmann weight `a^#a b^#b c^#c`, zero for forbidden configurations.
    pub fn weight(&self, w: &Weights) -> Rational {
        match self.vertex_counts() {
            Some((na, nb, nc)) => monomial(w, na, nb, nc),
            None => Rational::zero(),
        }
    }
}

fn monomial(w: &Weights, na: u32, nb: u32, nc: u32) -> Rational {
    num_traits::pow(w.a.clone(), na as usize)
        * num_traits::pow(w.b.clone(), nb as usize)
        * num_traits::pow(w.c.clone(), nc as usize)
}

/// Single-site Lax operator as auxiliary blocks over one quantum spin:
/// `[[a e11 + b e22, c e21], [c e12, b e11 + a e22]]`.
fn site_blocks(w: &Weights) -> [[Matrix; 2]; 2] {
    let z = Rational::zero;
    let m = |x: [[Rational; 2]; 2]| Matrix::from_rows(x.map(Vec::from).to_vec()).expect("2x2");
    [
        [
            m([[w.a.clone(), z()], [z(), w.b.clone()]]),
            m([[z(), z()], [w.c.clone(), z()]]),
        ],
        [
            m([[z(), w.c.clone()], [z(), z()]]),
            m([[w.b.clone(), z()], [z(), w.a.clone()]]),
        ],
    ]
}

pub fn monodromy(w: &Weights, n: usize) -> Result<Monodromy> {
    if n < 1 {
        return Err(Error::InvalidSites);
    }
    let site = site_blocks(w);
    let mut blocks = site.clone();
    for _ in 1..n {
        // new site is the least significant quantum factor and multiplies from the left
        let next = |a: usize, g: usize| {
            let t0 = kron(&blocks[0][g], &site[a][0]);
            let t1 = kron(&blocks[1][g], &site[a][1]);
            &t0 + &t1
        };
        blocks = [[next(0, 0), next(0, 1)], [next(1, 0), next(1, 1)]];
    }
    Ok(Monodromy { blocks, sites: n })
}

pub fn transfer_matrix(w: &Weights, n: usize) -> Result<Matrix> {
    Ok(monodromy(w, n)?.trace())
}

/// `[T(w1), T(w2)]` on `n` sites.
pub fn transfer_commutator(w1: &Weights, w2: &Weights, n: usize) -> Result<Matrix> {
    commutator(&transfer_matrix(w1, n)?, &transfer_matrix(w2, n)?)
}

/// `Z_n = Tr T^n` on the `n × n` torus.
pub fn partition_function(w: &Weights, n: usize) -> Result<Rational> {
    let t = transfer_matrix(w, n)?;
    t.pow(n as u32)?.trace()
}

/// Histogram of ice configurations on the `n × n` torus by vertex counts
/// `(#a, #b, #c)`.
pub fn enumerate_vertex_counts(n: usize) -> Result<BTreeMap<(u32, u32, u32), u64>> {
    if n < 1 {
        return Err(Error::InvalidSites);
    }
    if n > MAX_ENUMERATION_SIZE {
        return Err(Error::EnumerationTooLarge {
            size: n,
            limit: MAX_ENUMERATION_SIZE,
        });
    }
    let mut hist = BTreeMap::new();
    for bits in 0..1u64 << (2 * n * n) {
        if let Some(counts) = LatticeConfig::from_bits(n, bits).vertex_counts() {
            *hist.entry(counts).or_insert(0) += 1;
        }
    }
    Ok(hist)
}

/// Partition function by summing over every edge configuration of the torus.
pub fn enumerate_partition(w: &Weights, n: usize) -> Result<Rational> {
    let hist = enumerate_vertex_counts(n)?;
    Ok(hist
        .into_iter()
        .map(|((na, nb, nc), mult)| monomial(w, na, nb, nc) * Rational::from_integer(mult.into()))
        .sum())
}

/// Number of up spins in a quantum basis state.
pub fn up_count(state: usize) -> u32 {
    state.count_ones()
}

/// True when `m` only connects basis states with equal up-spin count.
pub fn conserves_spin(m: &Matrix) -> bool {
    (0..m.rows()).all(|r| {
        (0..m.cols()).all(|c| up_count(r) == up_count(c) || m[(r, c)].is_zero())
    })
}
