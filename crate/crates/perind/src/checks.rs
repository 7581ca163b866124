//! Seeded randomized checks of the Schur functor laws.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use perind_core::schur::{reduction_compatibility_check, SchurModule};
use perind_core::{Integers, IntegersMod, Rationals, Result, Ring, RingMatrix};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SAMPLES: usize = 50;

/// Deterministic generator for a seed.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rings whose elements can be sampled.
pub trait RandomElem: Ring {
    fn random_elem<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem;
}

/// Integers in `[-5, 5]`.
impl RandomElem for Integers {
    fn random_elem<G: Rng + ?Sized>(&self, rng: &mut G) -> BigInt {
        BigInt::from(rng.random_range(-5i64..=5))
    }
}

/// Uniform residues.
impl RandomElem for IntegersMod {
    fn random_elem<G: Rng + ?Sized>(&self, rng: &mut G) -> u64 {
        rng.random_range(0..self.modulus())
    }
}

/// `a / b` with `a` in `[-5, 5]`, `b` in `[1, 4]`.
impl RandomElem for Rationals {
    fn random_elem<G: Rng + ?Sized>(&self, rng: &mut G) -> BigRational {
        BigRational::new(
            BigInt::from(rng.random_range(-5i64..=5)),
            BigInt::from(rng.random_range(1i64..=4)),
        )
    }
}

pub fn random_matrix<R: RandomElem, G: Rng + ?Sized>(
    ring: &R,
    n: usize,
    rng: &mut G,
) -> RingMatrix<R::Elem> {
    let entries = (0..n * n).map(|_| ring.random_elem(rng)).collect();
    RingMatrix::new(n, n, entries).expect("n >= 1")
}

/// Integer matrix with entries in `[-bound, bound]`.
pub fn random_int_matrix<G: Rng + ?Sized>(n: usize, bound: i64, rng: &mut G) -> RingMatrix<BigInt> {
    let entries = (0..n * n)
        .map(|_| BigInt::from(rng.random_range(-bound..=bound)))
        .collect();
    RingMatrix::new(n, n, entries).expect("n >= 1")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Hom,
    Scalar,
    Reduce,
}

impl Property {
    pub fn as_str(self) -> &'static str {
        match self {
            Property::Hom => "hom",
            Property::Scalar => "scalar",
            Property::Reduce => "reduce",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "hom" => Ok(Property::Hom),
            "scalar" => Ok(Property::Scalar),
            "reduce" => Ok(Property::Reduce),
            other => Err(format!(
                "unknown check '{other}' (expected hom, scalar or reduce)"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub property: Property,
    pub samples: usize,
    pub failures: usize,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{}: ok ({} samples)", self.property, self.samples)
        } else {
            write!(
                f,
                "{}: FAILED ({} of {} samples)",
                self.property, self.failures, self.samples
            )
        }
    }
}

/// `phi(gh) = phi(g) phi(h)` on random pairs, plus `phi(I) = I` once.
/// A supplied `g` is used in every sample.
pub fn check_hom<R: RandomElem, G: Rng + ?Sized>(
    module: &SchurModule,
    ring: &R,
    samples: usize,
    fixed: Option<&RingMatrix<R::Elem>>,
    rng: &mut G,
) -> Result<CheckReport> {
    let n = module.rank() as usize;
    let mut failures = 0;
    let identity = module.matrix(&RingMatrix::identity(ring, n), ring)?;
    if identity != RingMatrix::identity(ring, module.dimension()) {
        failures += 1;
    }
    for _ in 0..samples {
        let g = match fixed {
            Some(g) => g.clone(),
            None => random_matrix(ring, n, rng),
        };
        let h = random_matrix(ring, n, rng);
        let lhs = module.matrix(&g.mul(&h, ring)?, ring)?;
        let rhs = module
            .matrix(&g, ring)?
            .mul(&module.matrix(&h, ring)?, ring)?;
        if lhs != rhs {
            failures += 1;
        }
    }
    Ok(CheckReport {
        property: Property::Hom,
        samples,
        failures,
    })
}

/// `phi(x I) = x^|lambda| I` for random scalars `x`.
pub fn check_scalar<R: RandomElem, G: Rng + ?Sized>(
    module: &SchurModule,
    ring: &R,
    samples: usize,
    rng: &mut G,
) -> Result<CheckReport> {
    let n = module.rank() as usize;
    let degree = module.shape().size() as u64;
    let mut failures = 0;
    for _ in 0..samples {
        let x = ring.random_elem(rng);
        let phi = module.matrix(&RingMatrix::scalar(ring, n, &x), ring)?;
        if phi != RingMatrix::scalar(ring, module.dimension(), &ring.pow(&x, degree)) {
            failures += 1;
        }
    }
    Ok(CheckReport {
        property: Property::Scalar,
        samples,
        failures,
    })
}

/// Reduction mod `q` commutes with `phi` on random integer matrices with
/// entries in `[-20, 20]`, or on the supplied matrix alone.
pub fn check_reduce<G: Rng + ?Sized>(
    module: &SchurModule,
    q: &IntegersMod,
    samples: usize,
    fixed: Option<&RingMatrix<BigInt>>,
    rng: &mut G,
) -> Result<CheckReport> {
    let n = module.rank() as usize;
    let inputs: Vec<RingMatrix<BigInt>> = match fixed {
        Some(g) => vec![g.clone()],
        None => (0..samples)
            .map(|_| random_int_matrix(n, 20, rng))
            .collect(),
    };
    let mut failures = 0;
    for g in &inputs {
        if !reduction_compatibility_check(g, module.shape(), q)? {
            failures += 1;
        }
    }
    Ok(CheckReport {
        property: Property::Reduce,
        samples: inputs.len(),
        failures,
    })
}
