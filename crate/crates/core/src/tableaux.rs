//! Young diagrams, fillings and semistandard tableaux.
//!
//! Fillings are stored column-major: `columns[j][i]` is the box in row `i`,
//! column `j`. Tableaux are ordered by their column reading word (each
//! column read bottom to top, columns left to right), and that is the order
//! [`ssyt_enumerate`] produces.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// A partition: a nonempty, weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungDiagram {
    parts: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidDiagram("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidDiagram("parts must be positive".into()));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidDiagram(format!(
                "parts must be weakly decreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        Ok(YoungDiagram { parts })
    }

    /// The single row `(t)`.
    pub fn row(t: usize) -> Result<Self> {
        Self::new(vec![t])
    }

    /// The single column `(1^k)`.
    pub fn column(k: usize) -> Result<Self> {
        Self::new(vec![1; k])
    }

    /// The hook `(t, 1)`.
    pub fn hook(t: usize) -> Result<Self> {
        Self::new(vec![t, 1])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes, `|lambda|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn num_columns(&self) -> usize {
        self.parts[0]
    }

    /// Column lengths, left to right.
    pub fn column_lengths(&self) -> Vec<usize> {
        (0..self.parts[0])
            .map(|j| self.parts.iter().take_while(|&&r| r > j).count())
            .collect()
    }

    pub fn conjugate(&self) -> YoungDiagram {
        YoungDiagram {
            parts: self.column_lengths(),
        }
    }

    /// `(row, column)` of every box in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
    }

    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        let arm = self.parts[row] - col - 1;
        let leg = self
            .parts
            .iter()
            .skip(row + 1)
            .take_while(|&&r| r > col)
            .count();
        arm + leg + 1
    }
}

impl fmt::Display for YoungDiagram {
    /// Comma-separated parts, runs of two or more written `part^count`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&q| q == part).count();
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if run >= 2 {
                write!(f, "{part}^{run}")?;
            } else {
                write!(f, "{part}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    /// Parses `"9"`, `"260,1"`, `"1^9"`, `"3,2^2,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let (part, count) = match token.split_once('^') {
                Some((part, count)) => (part.trim(), count.trim()),
                None => (token, "1"),
            };
            let part: usize = part
                .parse()
                .map_err(|_| Error::InvalidDiagram(format!("cannot parse part {token:?}")))?;
            let count: usize = count.parse().map_err(|_| {
                Error::InvalidDiagram(format!("cannot parse exponent in {token:?}"))
            })?;
            if count == 0 {
                return Err(Error::InvalidDiagram(format!("zero exponent in {token:?}")));
            }
            parts.extend(core::iter::repeat_n(part, count));
        }
        YoungDiagram::new(parts)
    }
}

/// An assignment of a letter in `[1, n]` to each box of a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Filling {
    shape: YoungDiagram,
    columns: Vec<Vec<u32>>,
    n: u32,
}

impl Filling {
    /// Builds a filling from its rows, top to bottom.
    pub fn from_rows(shape: YoungDiagram, rows: Vec<Vec<u32>>, n: u32) -> Result<Self> {
        if rows.len() != shape.num_rows()
            || rows
                .iter()
                .zip(shape.parts())
                .any(|(r, &len)| r.len() != len)
        {
            return Err(Error::InvalidFilling(format!(
                "row lengths do not match shape {shape}"
            )));
        }
        let columns = shape
            .column_lengths()
            .iter()
            .enumerate()
            .map(|(j, &len)| (0..len).map(|i| rows[i][j]).collect())
            .collect();
        Self::from_columns(shape, columns, n)
    }

    /// Builds a filling from its columns, left to right, each top to bottom.
    pub fn from_columns(shape: YoungDiagram, columns: Vec<Vec<u32>>, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyAlphabet);
        }
        let lengths = shape.column_lengths();
        if columns.len() != lengths.len()
            || columns.iter().zip(&lengths).any(|(c, &len)| c.len() != len)
        {
            return Err(Error::InvalidFilling(format!(
                "column lengths do not match shape {shape}"
            )));
        }
        if let Some(&bad) = columns.iter().flatten().find(|&&e| e == 0 || e > n) {
            return Err(Error::InvalidFilling(format!(
                "entry {bad} outside [1, {n}]"
            )));
        }
        Ok(Filling { shape, columns, n })
    }

    pub(crate) fn from_columns_unchecked(
        shape: YoungDiagram,
        columns: Vec<Vec<u32>>,
        n: u32,
    ) -> Self {
        debug_assert!(Self::from_columns(shape.clone(), columns.clone(), n).is_ok());
        Filling { shape, columns, n }
    }

    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    pub fn alphabet(&self) -> u32 {
        self.n
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| (0..len).map(|j| self.columns[j][i]).collect())
            .collect()
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<u32> {
        self.columns.get(col)?.get(row).copied()
    }

    /// Columns read bottom to top, left to right.
    pub fn column_word(&self) -> Vec<u32> {
        self.columns
            .iter()
            .flat_map(|c| c.iter().rev().copied())
            .collect()
    }

    pub fn is_column_strict(&self) -> bool {
        self.columns
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_semistandard(&self) -> bool {
        self.is_column_strict()
            && self
                .columns
                .windows(2)
                .all(|w| w[1].iter().zip(&w[0]).all(|(right, left)| left <= right))
    }

    /// Multiplicity of each letter `1..=n`.
    pub fn content(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n as usize];
        for &e in self.columns.iter().flatten() {
            counts[e as usize - 1] += 1;
        }
        counts
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|e| format!("{e}")).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        f.write_str(&rows.join(""))
    }
}

/// A filling with weakly increasing rows and strictly increasing columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemistandardTableau(Filling);

impl SemistandardTableau {
    pub fn filling(&self) -> &Filling {
        &self.0
    }

    pub fn into_filling(self) -> Filling {
        self.0
    }
}

impl TryFrom<Filling> for SemistandardTableau {
    type Error = Error;

    fn try_from(f: Filling) -> Result<Self> {
        if f.is_semistandard() {
            Ok(SemistandardTableau(f))
        } else {
            Err(Error::InvalidFilling(format!("{f} is not semistandard")))
        }
    }
}

impl Ord for SemistandardTableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .column_word()
            .cmp(&other.0.column_word())
            .then_with(|| self.0.shape.cmp(&other.0.shape))
            .then_with(|| self.0.n.cmp(&other.0.n))
    }
}

impl PartialOrd for SemistandardTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Number of semistandard tableaux of shape `shape` with entries in `[1, n]`,
/// by the hook-content formula `prod (n + content) / hook`.
pub fn ssyt_count(shape: &YoungDiagram, n: u64) -> BigUint {
    let mut numerator = BigUint::one();
    let mut denominator = BigUint::one();
    for (i, j) in shape.boxes() {
        // n + j - i <= 0 means a column longer than the alphabet.
        if n + j as u64 <= i as u64 {
            return BigUint::zero();
        }
        numerator *= n + j as u64 - i as u64;
        denominator *= shape.hook_length(i, j) as u64;
    }
    debug_assert!((&numerator % &denominator).is_zero());
    numerator / denominator
}

/// All semistandard tableaux of shape `shape` with entries in `[1, n]`, in
/// column-word order.
///
/// Refuses with [`Error::BasisTooLarge`] when there would be more than `limit`.
pub fn ssyt_enumerate(
    shape: &YoungDiagram,
    n: u32,
    limit: usize,
) -> Result<Vec<SemistandardTableau>> {
    if n == 0 {
        return Err(Error::EmptyAlphabet);
    }
    let count = ssyt_count(shape, u64::from(n));
    if count > BigUint::from(limit) {
        return Err(Error::BasisTooLarge {
            count: format!("{count}"),
            limit,
        });
    }
    let lengths = shape.column_lengths();
    // Boxes in column-word order: each column bottom to top.
    let order: Vec<(usize, usize)> = lengths
        .iter()
        .enumerate()
        .flat_map(|(j, &len)| (0..len).rev().map(move |i| (i, j)))
        .collect();
    let mut columns: Vec<Vec<u32>> = lengths.iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::with_capacity(usize::try_from(&count).unwrap_or(0));
    fill_box(shape, n, &order, 0, &mut columns, &mut out);
    debug_assert_eq!(BigUint::from(out.len()), count);
    Ok(out)
}

fn fill_box(
    shape: &YoungDiagram,
    n: u32,
    order: &[(usize, usize)],
    pos: usize,
    columns: &mut Vec<Vec<u32>>,
    out: &mut Vec<SemistandardTableau>,
) {
    let Some(&(i, j)) = order.get(pos) else {
        out.push(SemistandardTableau(Filling::from_columns_unchecked(
            shape.clone(),
            columns.clone(),
            n,
        )));
        return;
    };
    // Box (i, j) needs i distinct smaller letters above it.
    let mut lo = i as u32 + 1;
    if j > 0 {
        lo = lo.max(columns[j - 1][i]);
    }
    let hi = if i + 1 < columns[j].len() {
        columns[j][i + 1] - 1
    } else {
        n
    };
    for v in lo..=hi {
        columns[j][i] = v;
        fill_box(shape, n, order, pos + 1, columns, out);
    }
    columns[j][i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    fn brute_force_count(shape: &YoungDiagram, n: u32) -> usize {
        let cells = shape.size();
        let total = (n as usize).pow(cells as u32);
        (0..total)
            .filter(|&code| {
                let mut code = code;
                let mut rows = Vec::new();
                for &len in shape.parts() {
                    let mut row = Vec::new();
                    for _ in 0..len {
                        row.push((code % n as usize) as u32 + 1);
                        code /= n as usize;
                    }
                    rows.push(row);
                }
                Filling::from_rows(shape.clone(), rows, n)
                    .unwrap()
                    .is_semistandard()
            })
            .count()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(diagram("9").parts(), &[9]);
        assert_eq!(diagram("260,1").parts(), &[260, 1]);
        assert_eq!(diagram("1^9").parts(), &[1; 9]);
        assert_eq!(diagram(" 3, 2^2 ,1").parts(), &[3, 2, 2, 1]);
        assert_eq!(format!("{}", diagram("1^9")), "1^9");
        assert_eq!(format!("{}", diagram("260,1")), "260,1");
        assert_eq!(format!("{}", diagram("3,2,2,1")), "3,2^2,1");
        for bad in ["", "1,2", "0", "2,0", "a", "2^0", "3,^2", "2^x"] {
            assert!(bad.parse::<YoungDiagram>().is_err(), "{bad:?} accepted");
        }
        assert!(YoungDiagram::new(vec![]).is_err());
    }

    #[test]
    fn conjugate_and_hooks() {
        let d = diagram("4,2,1");
        assert_eq!(d.conjugate().parts(), &[3, 2, 1, 1]);
        assert_eq!(d.conjugate().conjugate(), d);
        assert_eq!(d.size(), 7);
        assert_eq!(d.hook_length(0, 0), 6);
        assert_eq!(d.hook_length(0, 1), 4);
        assert_eq!(d.hook_length(1, 0), 3);
        assert_eq!(d.hook_length(0, 3), 1);
    }

    #[test]
    fn semistandard_checks() {
        let f = Filling::from_rows(diagram("2"), vec![vec![1, 2]], 2).unwrap();
        assert!(f.is_semistandard());
        let f = Filling::from_columns(diagram("1,1"), vec![vec![2, 1]], 2).unwrap();
        assert!(!f.is_semistandard());
        let f = Filling::from_rows(diagram("2,1"), vec![vec![1, 1], vec![2]], 3).unwrap();
        assert!(f.is_semistandard());
        let f = Filling::from_rows(diagram("2,1"), vec![vec![2, 1], vec![3]], 3).unwrap();
        assert!(!f.is_semistandard());
        assert!(f.is_column_strict());
        assert!(Filling::from_rows(diagram("2"), vec![vec![1, 4]], 3).is_err());
        assert!(Filling::from_rows(diagram("2"), vec![vec![1]], 3).is_err());
        assert_eq!(
            Filling::from_rows(diagram("1"), vec![vec![1]], 0),
            Err(Error::EmptyAlphabet)
        );
    }

    #[test]
    fn enumeration_order() {
        let rows: Vec<Vec<Vec<u32>>> = ssyt_enumerate(&diagram("2"), 2, 100)
            .unwrap()
            .iter()
            .map(|t| t.filling().rows())
            .collect();
        assert_eq!(
            rows,
            vec![vec![vec![1, 1]], vec![vec![1, 2]], vec![vec![2, 2]]]
        );
        let col = ssyt_enumerate(&diagram("1,1"), 2, 100).unwrap();
        assert_eq!(col.len(), 1);
        assert_eq!(col[0].filling().columns(), &[vec![1, 2]]);
        let t = ssyt_enumerate(&diagram("2,1"), 3, 100).unwrap();
        assert_eq!(t.len(), 8);
        assert!(t.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn enumeration_limit() {
        let err = ssyt_enumerate(&diagram("9"), 36, 1000).unwrap_err();
        assert!(matches!(err, Error::BasisTooLarge { limit: 1000, .. }));
        assert_eq!(
            ssyt_enumerate(&diagram("1"), 0, 10),
            Err(Error::EmptyAlphabet)
        );
    }

    #[test]
    fn counts_match_brute_force() {
        for s in ["1", "2", "1,1", "3", "2,1", "1,1,1", "2,2", "3,1", "2,1,1"] {
            let d = diagram(s);
            for n in 1..=3 {
                let brute = brute_force_count(&d, n);
                assert_eq!(ssyt_count(&d, n as u64), BigUint::from(brute), "{s} n={n}");
                assert_eq!(ssyt_enumerate(&d, n, 10_000).unwrap().len(), brute);
            }
        }
        assert_eq!(ssyt_count(&diagram("2,1"), 3), BigUint::from(8u32));
        assert_eq!(ssyt_count(&diagram("2,2"), 2), BigUint::from(1u32));
        assert_eq!(ssyt_count(&diagram("1,1,1"), 2), BigUint::zero());
        assert!(ssyt_enumerate(&diagram("1,1,1"), 2, 10).unwrap().is_empty());
    }

    #[test]
    fn closed_forms() {
        use crate::padic::binomial;
        assert_eq!(ssyt_count(&diagram("9"), 36), binomial(44, 9).unwrap());
        assert_eq!(ssyt_count(&diagram("513"), 36), binomial(548, 513).unwrap());
        assert_eq!(ssyt_count(&diagram("1^9"), 36), binomial(36, 9).unwrap());
    }
}
