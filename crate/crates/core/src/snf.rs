//! Abelian group presented by an integer relation matrix: `Z^n / rowspan(A)`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// A finitely generated abelian group `Z^r ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k` with
/// `1 < t_1 | t_2 | ... | t_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    /// Serialized as decimal strings.
    #[serde(with = "decimal")]
    pub torsion: Vec<BigInt>,
}

mod decimal {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|t| t.parse().map_err(D::Error::custom))
            .collect()
    }
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    /// Size of a smallest generating set.
    pub fn min_generators(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.min_generators() == 0
    }
}

impl std::fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

type SparseRow = BTreeMap<usize, i64>;

/// Sparse integer matrix with `columns` generators; each row is one relation.
#[derive(Clone, Debug, Default)]
pub struct RelationMatrix {
    columns: usize,
    rows: Vec<SparseRow>,
}

impl RelationMatrix {
    pub fn new(columns: usize) -> Self {
        RelationMatrix {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Adds a relation given as `(column, coefficient)` pairs. Repeated
    /// columns are summed; zero coefficients are dropped.
    pub fn push(&mut self, entries: impl IntoIterator<Item = (usize, i64)>) {
        let mut row = SparseRow::new();
        for (c, a) in entries {
            assert!(c < self.columns, "column {c} out of range");
            *row.entry(c).or_insert(0) += a;
        }
        row.retain(|_, a| *a != 0);
        if !row.is_empty() {
            self.rows.push(row);
        }
    }

    pub fn from_dense(rows: &[Vec<i64>], columns: usize) -> Self {
        let mut m = RelationMatrix::new(columns);
        for r in rows {
            m.push(r.iter().copied().enumerate());
        }
        m
    }

    fn to_dense(&self, keep: &[usize]) -> Vec<Vec<BigInt>> {
        let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        self.rows
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| {
                let mut dense = vec![BigInt::zero(); keep.len()];
                for (c, a) in r {
                    dense[pos[c]] = BigInt::from(*a);
                }
                dense
            })
            .collect()
    }

    /// Computes the presented group.
    pub fn abelian_group(&self) -> AbelianGroup {
        let mut work = self.clone();
        match work.eliminate_units() {
            Some(kept) => smith_group(work.to_dense(&kept), kept.len()),
            None => {
                let all: Vec<usize> = (0..self.columns).collect();
                smith_group(self.to_dense(&all), self.columns)
            }
        }
    }

    /// Repeatedly pivots on `±1` entries, dropping the pivot row and column.
    /// Returns the surviving columns, or `None` on `i64` overflow.
    fn eliminate_units(&mut self) -> Option<Vec<usize>> {
        let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.columns];
        for (i, r) in self.rows.iter().enumerate() {
            for &c in r.keys() {
                col_rows[c].insert(i);
            }
        }
        let mut alive_col = vec![true; self.columns];
        let mut alive_row = vec![true; self.rows.len()];
        loop {
            // shortest row with a unit entry; ties broken by index
            let pivot = (0..self.rows.len())
                .filter(|&i| alive_row[i])
                .filter_map(|i| {
                    let r = &self.rows[i];
                    r.iter()
                        .filter(|(_, a)| a.abs() == 1)
                        .min_by_key(|(c, _)| col_rows[**c].len())
                        .map(|(&c, &a)| (r.len(), i, c, a))
                })
                .min();
            let Some((_, p, c, a)) = pivot else { break };
            let prow = self.rows[p].clone();
            let targets: Vec<usize> = col_rows[c].iter().copied().filter(|&i| i != p).collect();
            for i in targets {
                let b = self.rows[i][&c];
                // row_i -= (b / a) * pivot, with a = ±1
                let factor = b.checked_mul(a)?;
                for (&col, &v) in &prow {
                    let cur = self.rows[i].get(&col).copied().unwrap_or(0);
                    let next = cur.checked_sub(factor.checked_mul(v)?)?;
                    if next == 0 {
                        self.rows[i].remove(&col);
                        col_rows[col].remove(&i);
                    } else {
                        self.rows[i].insert(col, next);
                        col_rows[col].insert(i);
                    }
                }
                if self.rows[i].is_empty() {
                    alive_row[i] = false;
                }
            }
            for &col in prow.keys() {
                col_rows[col].remove(&p);
            }
            alive_row[p] = false;
            alive_col[c] = false;
            self.rows[p].clear();
        }
        Some((0..self.columns).filter(|&c| alive_col[c]).collect())
    }
}

/// Diagonalizes a dense matrix and reads off the group `Z^columns / rowspan`.
pub fn smith_group(mut m: Vec<Vec<BigInt>>, columns: usize) -> AbelianGroup {
    let diagonal = diagonalize(&mut m, columns);
    let mut factors = diagonal;
    // enforce divisibility: (a, b) -> (gcd, lcm)
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            let g = factors[i].gcd(&factors[j]);
            let l = factors[i].lcm(&factors[j]);
            factors[i] = g;
            factors[j] = l;
        }
    }
    let nonzero = factors.len();
    AbelianGroup {
        free_rank: columns - nonzero,
        torsion: factors.into_iter().filter(|t| !t.is_one()).collect(),
    }
}

/// Returns the nonzero diagonal entries (positive) of a diagonal form.
fn diagonalize(m: &mut [Vec<BigInt>], columns: usize) -> Vec<BigInt> {
    let rows = m.len();
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(columns) {
        // pivot: smallest nonzero absolute value in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..columns {
                if !m[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            if !m[i][t].is_zero() {
                let q = m[i][t].div_floor(&m[t][t]);
                for j in t..columns {
                    let v = &q * &m[t][j];
                    m[i][j] -= v;
                }
                clean &= m[i][t].is_zero();
            }
        }
        for j in t + 1..columns {
            if !m[t][j].is_zero() {
                let q = m[t][j].div_floor(&m[t][t]);
                for row in m.iter_mut() {
                    let v = &q * &row[t];
                    row[j] -= v;
                }
                clean &= m[t][j].is_zero();
            }
        }
        if clean {
            out.push(m[t][t].abs());
            t += 1;
        }
    }
    out
}
