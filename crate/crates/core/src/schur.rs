//! The Schur module `V^lambda` over a commutative ring and the matrix of the
//! induced action `phi_lambda(g)`.
//!
//! `V^lambda` is the tensor product of the exterior powers of `V = R^n`, one
//! per column of `lambda`, modulo the exchange relations between adjacent
//! columns: for columns `x` (left) and `y` (right) and any `k <= len(y)`,
//!
//! ```text
//! e_T = sum over k-subsets Z of x of e_{T with y[0..k] swapped against Z}
//! ```
//!
//! where swapped entries keep their vertical order. Columns are
//! antisymmetric, rows end up symmetric, so `(t)` gives `Sym^t V` and
//! `(1^k)` gives `Lambda^k V`. The semistandard tableaux index a basis.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ring::{IntegersMod, Ring, RingMatrix};
use crate::tableaux::{ssyt_enumerate, Filling, SemistandardTableau, YoungDiagram};
use crate::{Error, Integers, Result, DEFAULT_ENUMERATION_LIMIT};

type Columns = Vec<Vec<u32>>;

/// A linear combination of basis tableaux with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauCombination<E> {
    terms: BTreeMap<SemistandardTableau, E>,
}

impl<E> TableauCombination<E> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, t: &SemistandardTableau) -> Option<&E> {
        self.terms.get(t)
    }

    /// Terms in canonical basis order.
    pub fn iter(&self) -> impl Iterator<Item = (&SemistandardTableau, &E)> {
        self.terms.iter()
    }
}

/// Sorts a column into strictly increasing order. Returns the sign of the
/// sorting permutation, or `None` if an entry repeats.
fn sort_column(col: &mut [u32]) -> Option<bool> {
    let mut negative = false;
    // insertion sort; columns are short
    for i in 1..col.len() {
        let mut k = i;
        while k > 0 && col[k - 1] > col[k] {
            col.swap(k - 1, k);
            negative = !negative;
            k -= 1;
        }
    }
    if col.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(negative)
    }
}

/// Sorts every column; `None` when the filling vanishes.
fn normalize(mut cols: Columns) -> Option<(Columns, bool)> {
    let mut negative = false;
    for col in cols.iter_mut() {
        negative ^= sort_column(col)?;
    }
    Some((cols, negative))
}

/// Topmost violation `(j, i)` of row weakness in the leftmost offending
/// column pair: `cols[j][i] > cols[j + 1][i]`.
fn first_violation(cols: &Columns) -> Option<(usize, usize)> {
    cols.windows(2).enumerate().find_map(|(j, w)| {
        w[1].iter()
            .zip(&w[0])
            .position(|(right, left)| left > right)
            .map(|i| (j, i))
    })
}

/// All `k`-subsets of `0..n`, in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Rewrites column-strict fillings as integer combinations of semistandard
/// ones. Results are memoized for the lifetime of the value.
#[derive(Default)]
struct Straightener {
    memo: BTreeMap<Columns, Vec<(Columns, BigInt)>>,
}

impl Straightener {
    /// `cols` must already be normalized (every column strictly increasing).
    fn expand(&mut self, cols: &Columns) -> Vec<(Columns, BigInt)> {
        if let Some(hit) = self.memo.get(cols) {
            return hit.clone();
        }
        let Some((j, i)) = first_violation(cols) else {
            return vec![(cols.clone(), BigInt::one())];
        };
        // Exchange the top i+1 entries of column j+1 (all smaller than
        // cols[j][i]) with every (i+1)-subset of column j. Each new left
        // column drops an entry >= cols[j][i] for a smaller one, so the
        // column word strictly decreases and the recursion terminates.
        let k = i + 1;
        let mut acc: BTreeMap<Columns, BigInt> = BTreeMap::new();
        for z in subsets(cols[j].len(), k) {
            let mut next = cols.clone();
            for (t, &pos) in z.iter().enumerate() {
                next[j][pos] = cols[j + 1][t];
                next[j + 1][t] = cols[j][pos];
            }
            let Some((next, negative)) = normalize(next) else {
                continue;
            };
            for (basis, c) in self.expand(&next) {
                let entry = acc.entry(basis).or_insert_with(BigInt::zero);
                if negative {
                    *entry -= c;
                } else {
                    *entry += c;
                }
            }
        }
        let result: Vec<(Columns, BigInt)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        self.memo.insert(cols.clone(), result.clone());
        result
    }
}

/// The class of the column-wedge element of `f` in `V^lambda`, written in the
/// semistandard basis.
pub fn straighten<R: Ring>(f: &Filling, ring: &R) -> TableauCombination<R::Elem> {
    let mut terms = BTreeMap::new();
    if let Some((cols, negative)) = normalize(f.columns().to_vec()) {
        let mut straightener = Straightener::default();
        for (basis, c) in straightener.expand(&cols) {
            let mut coeff = ring.from_integer(&c);
            if negative {
                coeff = ring.neg(&coeff);
            }
            if ring.is_zero(&coeff) {
                continue;
            }
            let filling = Filling::from_columns_unchecked(f.shape().clone(), basis, f.alphabet());
            let tableau = SemistandardTableau::try_from(filling)
                .expect("straightening ends in semistandard tableaux");
            terms.insert(tableau, coeff);
        }
    }
    TableauCombination { terms }
}

/// Determinant by cofactor expansion along the first row; needs no division.
fn determinant<R: Ring>(ring: &R, m: &[Vec<R::Elem>]) -> R::Elem {
    match m.len() {
        0 => ring.one(),
        1 => m[0][0].clone(),
        2 => ring.sub(&ring.mul(&m[0][0], &m[1][1]), &ring.mul(&m[0][1], &m[1][0])),
        size => {
            let mut acc = ring.zero();
            for c in 0..size {
                if ring.is_zero(&m[0][c]) {
                    continue;
                }
                let sub: Vec<Vec<R::Elem>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != c)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                let term = ring.mul(&m[0][c], &determinant(ring, &sub));
                acc = if c % 2 == 0 {
                    ring.add(&acc, &term)
                } else {
                    ring.sub(&acc, &term)
                };
            }
            acc
        }
    }
}

/// The Schur module `V^lambda` for `V` of rank `n`: its shape and its
/// semistandard basis in canonical order.
#[derive(Clone, Debug)]
pub struct SchurModule {
    shape: YoungDiagram,
    n: u32,
    basis: Vec<SemistandardTableau>,
    index: BTreeMap<Columns, usize>,
}

impl SchurModule {
    pub fn new(shape: &YoungDiagram, n: u32, limit: usize) -> Result<Self> {
        let basis = ssyt_enumerate(shape, n, limit)?;
        let index = basis
            .iter()
            .enumerate()
            .map(|(k, t)| (t.filling().columns().to_vec(), k))
            .collect();
        Ok(SchurModule {
            shape: shape.clone(),
            n,
            basis,
            index,
        })
    }

    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    pub fn rank(&self) -> u32 {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SemistandardTableau] {
        &self.basis
    }

    /// Matrix of `phi_lambda(g)` in the canonical basis: column `t` holds the
    /// coordinates of `g . e_T` for the `t`-th basis tableau `T`.
    ///
    /// Any square `n x n` matrix is accepted; the action is that of `End(V)`.
    pub fn matrix<R: Ring>(
        &self,
        g: &RingMatrix<R::Elem>,
        ring: &R,
    ) -> Result<RingMatrix<R::Elem>> {
        let n = self.n as usize;
        if g.rows() != n || g.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: (n, n),
                found: (g.rows(), g.cols()),
            });
        }
        let dim = self.dimension();
        if dim == 0 {
            return Err(Error::EmptyModule);
        }
        let mut out = RingMatrix::zeros(ring, dim, dim);

        // g(e_{i1} ^ ... ^ e_{ic}) = sum_K det(g[K, I]) e_K over sorted K.
        let column_lengths = self.shape.column_lengths();
        let mut targets: BTreeMap<usize, Vec<Vec<u32>>> = BTreeMap::new();
        for &len in &column_lengths {
            targets.entry(len).or_insert_with(|| {
                subsets(n, len)
                    .into_iter()
                    .map(|s| s.into_iter().map(|v| v as u32 + 1).collect())
                    .collect()
            });
        }
        let mut minors: BTreeMap<(Vec<u32>, Vec<u32>), R::Elem> = BTreeMap::new();
        let mut minor = |rows: &[u32], cols: &[u32]| -> R::Elem {
            minors
                .entry((rows.to_vec(), cols.to_vec()))
                .or_insert_with(|| {
                    let sub: Vec<Vec<R::Elem>> = rows
                        .iter()
                        .map(|&r| {
                            cols.iter()
                                .map(|&c| g.get(r as usize - 1, c as usize - 1).clone())
                                .collect()
                        })
                        .collect();
                    determinant(ring, &sub)
                })
                .clone()
        };

        let mut straightener = Straightener::default();
        for (t, tableau) in self.basis.iter().enumerate() {
            let source = tableau.filling().columns();
            // Per column: the nonzero (target column, minor) pairs.
            let images: Vec<Vec<(Vec<u32>, R::Elem)>> = source
                .iter()
                .map(|col| {
                    targets[&col.len()]
                        .iter()
                        .filter_map(|k| {
                            let d = minor(k, col);
                            (!ring.is_zero(&d)).then(|| (k.clone(), d))
                        })
                        .collect()
                })
                .collect();
            if images.iter().any(Vec::is_empty) {
                continue;
            }
            let mut choice = vec![0usize; images.len()];
            'terms: loop {
                let coeff = choice
                    .iter()
                    .zip(&images)
                    .fold(ring.one(), |acc, (&c, img)| ring.mul(&acc, &img[c].1));
                if !ring.is_zero(&coeff) {
                    let cols: Columns = choice
                        .iter()
                        .zip(&images)
                        .map(|(&c, img)| img[c].0.clone())
                        .collect();
                    for (basis_cols, c) in straightener.expand(&cols) {
                        let s = self.index[&basis_cols];
                        let term = ring.mul(&coeff, &ring.from_integer(&c));
                        let updated = ring.add(out.get(s, t), &term);
                        out.set(s, t, updated);
                    }
                }
                // odometer over the per-column choices
                for pos in 0..choice.len() {
                    choice[pos] += 1;
                    if choice[pos] < images[pos].len() {
                        continue 'terms;
                    }
                    choice[pos] = 0;
                }
                break;
            }
        }
        Ok(out)
    }
}

/// `phi_lambda(g)` with the default enumeration limit.
pub fn schur_matrix<R: Ring>(
    g: &RingMatrix<R::Elem>,
    shape: &YoungDiagram,
    ring: &R,
) -> Result<RingMatrix<R::Elem>> {
    if !g.is_square() {
        return Err(Error::DimensionMismatch {
            expected: (g.rows(), g.rows()),
            found: (g.rows(), g.cols()),
        });
    }
    let n = u32::try_from(g.rows()).map_err(|_| Error::Overflow)?;
    SchurModule::new(shape, n, DEFAULT_ENUMERATION_LIMIT)?.matrix(g, ring)
}

/// Whether `phi_lambda(x I_n) = x^|lambda| I_N`.
pub fn scalar_law_check<R: Ring>(
    x: &R::Elem,
    shape: &YoungDiagram,
    n: u32,
    ring: &R,
) -> Result<bool> {
    let module = SchurModule::new(shape, n, DEFAULT_ENUMERATION_LIMIT)?;
    let phi = module.matrix(&RingMatrix::scalar(ring, n as usize, x), ring)?;
    let expected = RingMatrix::scalar(ring, module.dimension(), &ring.pow(x, shape.size() as u64));
    Ok(phi == expected)
}

/// Whether building `phi_lambda` over `Z` and reducing mod `q` agrees with
/// reducing `g` mod `q` first and building over `Z / qZ`.
pub fn reduction_compatibility_check(
    g: &RingMatrix<BigInt>,
    shape: &YoungDiagram,
    q: &IntegersMod,
) -> Result<bool> {
    let over_z = schur_matrix(g, shape, &Integers)?.map(|e| q.from_integer(e));
    let over_zq = schur_matrix(&g.map(|e| q.from_integer(e)), shape, q)?;
    Ok(over_z == over_zq)
}
