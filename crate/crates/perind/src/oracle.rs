//! Independent oracles used by the self-test and the acceptance suite.
//!
//! Nothing here calls the enumeration, counting or straightening code of
//! `perind-core`; the only shared pieces are the [`Ring`] arithmetic
//! interface and the matrix container.
//!
//! - [`brute_force_ssyt`]: filter all `n^|lambda|` fillings.
//! - [`schur_polynomial`]: sum of content monomials over those tableaux.
//! - [`compound_matrix`]: `k x k` minors by the Leibniz formula.
//! - [`jacobi_trudi_count`]: `det h_{lambda_i - i + j}(1^n)`.
//! - [`QuotientModule`]: `V^{(x) |lambda|}` modulo the explicitly generated
//!   column-antisymmetry and exchange relations, by Gaussian elimination.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use perind_core::{Rationals, Ring, RingMatrix};

/// Rows of a filling, top to bottom.
pub type Rows = Vec<Vec<u32>>;

fn column_lengths(parts: &[usize]) -> Vec<usize> {
    (0..parts[0])
        .map(|j| parts.iter().filter(|&&r| r > j).count())
        .collect()
}

/// Columns bottom to top, left to right.
fn column_word(rows: &Rows) -> Vec<u32> {
    let width = rows[0].len();
    let mut word = Vec::new();
    for j in 0..width {
        for row in rows.iter().rev() {
            if let Some(&e) = row.get(j) {
                word.push(e);
            }
        }
    }
    word
}

fn rows_semistandard(rows: &Rows) -> bool {
    let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
    let cols_ok = rows.windows(2).all(|pair| {
        pair[1]
            .iter()
            .enumerate()
            .all(|(j, &below)| pair[0][j] < below)
    });
    rows_ok && cols_ok
}

/// Every semistandard filling, found by testing all `n^|lambda|` fillings,
/// sorted by column word.
pub fn brute_force_ssyt(parts: &[usize], n: u32) -> Vec<Rows> {
    let cells: usize = parts.iter().sum();
    let total = (n as usize).pow(cells as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let rows: Rows = parts
            .iter()
            .map(|&len| {
                (0..len)
                    .map(|_| {
                        let e = (code % n as usize) as u32 + 1;
                        code /= n as usize;
                        e
                    })
                    .collect()
            })
            .collect();
        if rows_semistandard(&rows) {
            out.push(rows);
        }
    }
    out.sort_by_key(column_word);
    out
}

/// `s_lambda(x_1, ..., x_n)` as the sum over semistandard tableaux of
/// `prod x_{T(b)}`.
pub fn schur_polynomial<R: Ring>(parts: &[usize], xs: &[R::Elem], ring: &R) -> R::Elem {
    brute_force_ssyt(parts, xs.len() as u32)
        .iter()
        .map(|rows| {
            rows.iter()
                .flatten()
                .fold(ring.one(), |acc, &e| ring.mul(&acc, &xs[e as usize - 1]))
        })
        .fold(ring.zero(), |acc, m| ring.add(&acc, &m))
}

/// All permutations of `0..n` with their signs (Heap's algorithm).
fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn heap(
        k: usize,
        perm: &mut Vec<usize>,
        negative: &mut bool,
        out: &mut Vec<(Vec<usize>, bool)>,
    ) {
        if k <= 1 {
            out.push((perm.clone(), *negative));
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, perm, negative, out);
            let swap_with = if k.is_multiple_of(2) { i } else { 0 };
            perm.swap(swap_with, k - 1);
            *negative = !*negative;
        }
        heap(k - 1, perm, negative, out);
    }
    let mut out = Vec::new();
    heap(n, &mut (0..n).collect(), &mut false, &mut out);
    out
}

/// Leibniz determinant.
pub fn leibniz_det<R: Ring>(m: &[Vec<R::Elem>], ring: &R) -> R::Elem {
    permutations(m.len())
        .into_iter()
        .fold(ring.zero(), |acc, (perm, negative)| {
            let term = perm
                .iter()
                .enumerate()
                .fold(ring.one(), |t, (i, &j)| ring.mul(&t, &m[i][j]));
            if negative {
                ring.sub(&acc, &term)
            } else {
                ring.add(&acc, &term)
            }
        })
}

/// `k`-subsets of `1..=n` as increasing vectors, ordered by their reversed
/// sequence (the bottom-to-top reading of a column).
pub fn column_subsets(n: u32, k: usize) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = (0u32..(1 << n))
        .filter(|mask| mask.count_ones() as usize == k)
        .map(|mask| (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect())
        .collect();
    out.sort_by_key(|s: &Vec<u32>| s.iter().rev().copied().collect::<Vec<_>>());
    out
}

/// `k`-th compound matrix: entry `(S, T)` is the minor on rows `S`,
/// columns `T`, with subsets in column-word order.
pub fn compound_matrix<R: Ring>(
    g: &RingMatrix<R::Elem>,
    k: usize,
    ring: &R,
) -> RingMatrix<R::Elem> {
    let subsets = column_subsets(g.rows() as u32, k);
    let rows = subsets
        .iter()
        .map(|s| {
            subsets
                .iter()
                .map(|t| {
                    let minor: Vec<Vec<R::Elem>> = s
                        .iter()
                        .map(|&r| {
                            t.iter()
                                .map(|&c| g.get(r as usize - 1, c as usize - 1).clone())
                                .collect()
                        })
                        .collect();
                    leibniz_det(&minor, ring)
                })
                .collect()
        })
        .collect();
    RingMatrix::from_rows(rows).expect("nonempty square compound")
}

fn binom_pascal(n: usize, k: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::one(); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_else(BigInt::zero)
}

/// Number of semistandard tableaux via Jacobi-Trudi:
/// `det [h_{lambda_i - i + j}(1^n)]` with `h_k(1^n) = C(n + k - 1, k)`.
pub fn jacobi_trudi_count(parts: &[usize], n: usize) -> BigInt {
    let h = |k: i64| -> BigInt {
        if k < 0 {
            BigInt::zero()
        } else if k == 0 {
            BigInt::one()
        } else {
            binom_pascal(n + k as usize - 1, k as usize)
        }
    };
    let len = parts.len();
    let m: Vec<Vec<BigInt>> = (0..len)
        .map(|i| {
            (0..len)
                .map(|j| h(parts[i] as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    leibniz_det(&m, &perind_core::Integers)
}

/// `V^lambda` built as the quotient of the full tensor power `V^{(x) d}`,
/// `d = |lambda|`, by the span of the defining relations, over `Q`.
pub struct QuotientModule {
    parts: Vec<usize>,
    n: u32,
    /// Boxes in column-major order, as `(row, col)`.
    boxes: Vec<(usize, usize)>,
    /// Echelon rows of the relation span, each with its pivot.
    relations: Vec<(usize, Vec<BigRational>)>,
    pivots: Vec<bool>,
    /// Semistandard labels, in column-word order.
    labels: Vec<Rows>,
    /// Inverse of the matrix of projected label vectors.
    label_inverse: Vec<Vec<BigRational>>,
    free: Vec<usize>,
}

impl QuotientModule {
    /// `None` when the semistandard labels do not project to a basis of the
    /// quotient, which would mean the relations are not the expected ones.
    pub fn new(parts: &[usize], n: u32) -> Option<Self> {
        let lengths = column_lengths(parts);
        let boxes: Vec<(usize, usize)> = lengths
            .iter()
            .enumerate()
            .flat_map(|(j, &len)| (0..len).map(move |i| (i, j)))
            .collect();
        let d = boxes.len();
        let dim = (n as usize).pow(d as u32);
        let mut module = QuotientModule {
            parts: parts.to_vec(),
            n,
            boxes,
            relations: Vec::new(),
            pivots: vec![false; dim],
            labels: brute_force_ssyt(parts, n),
            label_inverse: Vec::new(),
            free: Vec::new(),
        };

        // Column offsets in the column-major box order.
        let mut starts = vec![0];
        for &len in &lengths {
            starts.push(starts.last().unwrap() + len);
        }
        for code in 0..dim {
            let word = module.decode(code);
            // column antisymmetry: e_F + e_{F with two column entries swapped}
            for (j, &len) in lengths.iter().enumerate() {
                for a in 0..len {
                    for b in a + 1..len {
                        let mut swapped = word.clone();
                        swapped.swap(starts[j] + a, starts[j] + b);
                        let mut rel = vec![BigRational::zero(); dim];
                        rel[code] += BigRational::one();
                        rel[module.encode(&swapped)] += BigRational::one();
                        module.add_relation(rel);
                    }
                }
            }
            // exchange: e_F - sum_Z e_{F with top k of column j+1 <-> Z in column j}
            for j in 0..lengths.len().saturating_sub(1) {
                for k in 1..=lengths[j + 1] {
                    let mut rel = vec![BigRational::zero(); dim];
                    rel[code] += BigRational::one();
                    for z in column_subsets(lengths[j] as u32, k) {
                        let mut next = word.clone();
                        for (t, &pos) in z.iter().enumerate() {
                            let left = starts[j] + pos as usize - 1;
                            let right = starts[j + 1] + t;
                            next.swap(left, right);
                        }
                        rel[module.encode(&next)] -= BigRational::one();
                    }
                    module.add_relation(rel);
                }
            }
        }

        module.free = (0..dim).filter(|&c| !module.pivots[c]).collect();
        if module.free.len() != module.labels.len() {
            return None;
        }
        if module.labels.is_empty() {
            return Some(module);
        }
        let projected: Vec<Vec<BigRational>> = module
            .labels
            .iter()
            .map(|rows| {
                let mut v = vec![BigRational::zero(); dim];
                v[module.encode_rows(rows)] = BigRational::one();
                module.project(v)
            })
            .collect();
        // columns of B are the projected labels
        let size = projected.len();
        let b: Vec<Vec<BigRational>> = (0..size)
            .map(|r| (0..size).map(|c| projected[c][r].clone()).collect())
            .collect();
        module.label_inverse = invert(b)?;
        Some(module)
    }

    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Rows] {
        &self.labels
    }

    fn decode(&self, mut code: usize) -> Vec<u32> {
        (0..self.boxes.len())
            .map(|_| {
                let e = (code % self.n as usize) as u32 + 1;
                code /= self.n as usize;
                e
            })
            .collect()
    }

    fn encode(&self, word: &[u32]) -> usize {
        word.iter()
            .rev()
            .fold(0, |acc, &e| acc * self.n as usize + (e as usize - 1))
    }

    fn encode_rows(&self, rows: &Rows) -> usize {
        let word: Vec<u32> = self.boxes.iter().map(|&(i, j)| rows[i][j]).collect();
        self.encode(&word)
    }

    fn reduce(&self, mut v: Vec<BigRational>) -> Vec<BigRational> {
        for (pivot, row) in &self.relations {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
        v
    }

    fn add_relation(&mut self, rel: Vec<BigRational>) {
        let mut rel = self.reduce(rel);
        let Some(pivot) = rel.iter().position(|x| !x.is_zero()) else {
            return;
        };
        let lead = rel[pivot].clone();
        for x in rel.iter_mut() {
            *x /= &lead;
        }
        self.pivots[pivot] = true;
        self.relations.push((pivot, rel));
    }

    /// Coordinates of `v` modulo the relations, on the free columns.
    fn project(&self, v: Vec<BigRational>) -> Vec<BigRational> {
        let reduced = self.reduce(v);
        self.free.iter().map(|&c| reduced[c].clone()).collect()
    }

    /// Matrix of `g^{(x) d}` on the quotient, in the semistandard label basis.
    pub fn action(&self, g: &RingMatrix<BigRational>) -> RingMatrix<BigRational> {
        let ring = Rationals;
        let dim = (self.n as usize).pow(self.boxes.len() as u32);
        let size = self.labels.len();
        let mut out = RingMatrix::zeros(&ring, size, size);
        for (t, rows) in self.labels.iter().enumerate() {
            let source: Vec<u32> = self.boxes.iter().map(|&(i, j)| rows[i][j]).collect();
            let mut image = vec![BigRational::zero(); dim];
            for (code, slot) in image.iter_mut().enumerate() {
                let target = self.decode(code);
                *slot = target
                    .iter()
                    .zip(&source)
                    .fold(BigRational::one(), |acc, (&k, &i)| {
                        acc * g.get(k as usize - 1, i as usize - 1)
                    });
            }
            let coords = self.project(image);
            for s in 0..size {
                let c = (0..size).fold(BigRational::zero(), |acc, k| {
                    acc + &self.label_inverse[s][k] * &coords[k]
                });
                out.set(s, t, c);
            }
        }
        out
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }
}

/// Gauss-Jordan inverse over `Q`; `None` if singular.
fn invert(mut a: Vec<Vec<BigRational>>) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let lead = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &lead;
        }
        for x in inv[col].iter_mut() {
            *x /= &lead;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in 0..n {
                let (dv, di) = (&a[col][c] * &factor, &inv[col][c] * &factor);
                a[r][c] -= dv;
                inv[r][c] -= di;
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use perind_core::Integers;

    #[test]
    fn brute_force_counts() {
        assert_eq!(brute_force_ssyt(&[2], 2).len(), 3);
        assert_eq!(brute_force_ssyt(&[2, 1], 3).len(), 8);
        assert_eq!(
            brute_force_ssyt(&[2, 2], 2),
            vec![vec![vec![1, 1], vec![2, 2]]]
        );
        assert!(brute_force_ssyt(&[1, 1, 1], 2).is_empty());
    }

    #[test]
    fn schur_polynomial_values() {
        // s_(2,1)(x, y, z) at (1, 1, 1) is 8; s_(1,1)(2, 3) = 6
        let ones = vec![BigInt::one(); 3];
        assert_eq!(schur_polynomial(&[2, 1], &ones, &Integers), BigInt::from(8));
        let xs = vec![BigInt::from(2), BigInt::from(3)];
        assert_eq!(schur_polynomial(&[1, 1], &xs, &Integers), BigInt::from(6));
        // h_2(2, 3) = 4 + 6 + 9
        assert_eq!(schur_polynomial(&[2], &xs, &Integers), BigInt::from(19));
    }

    #[test]
    fn determinants_and_compounds() {
        let m: Vec<Vec<BigInt>> = [[2, 0, 1], [1, 3, 0], [0, 1, 4]]
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        assert_eq!(leibniz_det(&m, &Integers), BigInt::from(25));
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(4).iter().filter(|(_, neg)| *neg).count(), 12);
        let g = RingMatrix::from_rows(m).unwrap();
        let c3 = compound_matrix(&g, 3, &Integers);
        assert_eq!(c3.entries(), &[BigInt::from(25)]);
        assert_eq!(compound_matrix(&g, 1, &Integers), g);
        assert_eq!(
            column_subsets(3, 2),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }

    #[test]
    fn jacobi_trudi() {
        assert_eq!(jacobi_trudi_count(&[2, 1], 3), BigInt::from(8));
        assert_eq!(jacobi_trudi_count(&[9], 36), BigInt::from(708_930_508u64));
        assert_eq!(jacobi_trudi_count(&[1, 1, 1], 2), BigInt::zero());
        assert_eq!(
            jacobi_trudi_count(&[260, 1], 36).to_string(),
            "114734342260319204060660791279783645963396270100"
        );
    }

    #[test]
    fn quotient_dimensions() {
        for (parts, n, dim) in [
            (vec![2], 2, 3),
            (vec![1, 1], 3, 3),
            (vec![2, 1], 2, 2),
            (vec![2, 1], 3, 8),
            (vec![2, 2], 2, 1),
            (vec![3, 1], 3, 15),
            (vec![1, 1, 1], 2, 0),
        ] {
            let q = QuotientModule::new(&parts, n).expect("labels form a basis");
            assert_eq!(q.dimension(), dim, "{parts:?} n={n}");
        }
    }

    #[test]
    fn quotient_action_on_symmetric_square() {
        let q = QuotientModule::new(&[2], 2).unwrap();
        let g = RingMatrix::from_rows(vec![
            vec![
                BigRational::from_integer(1.into()),
                BigRational::from_integer(2.into()),
            ],
            vec![
                BigRational::from_integer(3.into()),
                BigRational::from_integer(4.into()),
            ],
        ])
        .unwrap();
        let phi = q.action(&g);
        let expected: Vec<BigRational> = [1, 2, 4, 6, 10, 16, 9, 12, 16]
            .iter()
            .map(|&x| BigRational::from_integer(x.into()))
            .collect();
        assert_eq!(phi.entries(), expected.as_slice());
    }
}
