//! Square Boolean matrices with bitset rows.

use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    n: usize,
    rows: Vec<BitSet>,
}

impl BoolMatrix {
    pub fn zeros(n: usize) -> Self {
        BoolMatrix {
            n,
            rows: vec![BitSet::new(n); n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BoolMatrix::zeros(n);
        for i in 0..n {
            m.rows[i].insert(i);
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `rows.len()`.
    pub fn from_rows(rows: Vec<BitSet>) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                left: n,
                right: r.len(),
            });
        }
        Ok(BoolMatrix { n, rows })
    }

    /// Parses a dense 0/1 literal, one string per row. Intended for tests and
    /// fixtures; panics on malformed input.
    pub fn from_strs(rows: &[&str]) -> Self {
        let n = rows.len();
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), n, "row {r:?} is not of length {n}");
                BitSet::from_indices(n, r.bytes().enumerate().filter(|&(_, c)| c == b'1').map(|(j, _)| j))
            })
            .collect();
        BoolMatrix { n, rows }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitSet {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitSet] {
        &self.rows
    }

    pub fn transpose(&self) -> BoolMatrix {
        let mut t = BoolMatrix::zeros(self.n);
        for (i, row) in self.rows.iter().enumerate() {
            for j in row {
                t.rows[j].insert(i);
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn zero_diagonal(&mut self) {
        for i in 0..self.n {
            self.rows[i].remove(i);
        }
    }

    /// Dense text rendering: one line of '0'/'1' characters per row.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.n * (self.n + 1));
        for row in &self.rows {
            for j in 0..self.n {
                s.push(if row.contains(j) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BoolMatrix({})", self.n)?;
        f.write_str(&self.to_text())
    }
}

/// Boolean product: `(i,j)` is set iff some `k` has `a(i,k)` and `b(k,j)`.
pub fn bool_mul(a: &BoolMatrix, b: &BoolMatrix) -> Result<BoolMatrix> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch {
            left: a.n,
            right: b.n,
        });
    }
    let rows = a
        .rows
        .iter()
        .map(|ra| {
            let mut acc = BitSet::new(a.n);
            for k in ra {
                acc.union_with(&b.rows[k]);
            }
            acc
        })
        .collect();
    Ok(BoolMatrix { n: a.n, rows })
}

/// `p · pᵀ`: entry `(i,j)` is set iff rows `i` and `j` of `p` intersect.
pub fn gram(p: &BoolMatrix) -> BoolMatrix {
    let n = p.n;
    let mut out = BoolMatrix::zeros(n);
    for i in 0..n {
        if p.rows[i].is_empty() {
            continue;
        }
        out.rows[i].insert(i);
        for j in (i + 1)..n {
            if p.rows[i].intersects(&p.rows[j]) {
                out.rows[i].insert(j);
                out.rows[j].insert(i);
            }
        }
    }
    out
}

/// `A^m (Aᵀ)^m` with its diagonal cleared: the adjacency matrix of the
/// m-step competition graph.
pub fn competition_matrix(a: &BoolMatrix, m: usize) -> Result<BoolMatrix> {
    if m == 0 {
        return Err(Error::ZeroStep);
    }
    let mut steps = PowerSteps::new(a);
    for _ in 1..m {
        steps.advance();
    }
    Ok(steps.competition())
}

/// Walks `P = A^m` for `m = 1, 2, ...` by repeated right multiplication.
#[derive(Clone, Debug)]
pub struct PowerSteps<'a> {
    base: &'a BoolMatrix,
    power: BoolMatrix,
    m: usize,
}

impl<'a> PowerSteps<'a> {
    pub fn new(base: &'a BoolMatrix) -> Self {
        PowerSteps {
            base,
            power: base.clone(),
            m: 1,
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn power(&self) -> &BoolMatrix {
        &self.power
    }

    pub fn advance(&mut self) {
        self.power = bool_mul(&self.power, self.base).expect("square powers share order");
        self.m += 1;
    }

    pub fn competition(&self) -> BoolMatrix {
        let mut c = gram(&self.power);
        c.zero_diagonal();
        c
    }
}
