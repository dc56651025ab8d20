use crate::bits::BitVector;
use crate::error::{Error, Result};
use crate::gf::{RingElem, MAX_RING_M};
use crate::lincode::BinaryCode;

/// Block structure of a length `ℓ·m` code: `m` consecutive blocks of `ℓ`
/// coordinates, coordinate `(i, j)` at position `i·ℓ + j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QcShape {
    ell: usize,
    m: usize,
}

impl QcShape {
    pub fn new(ell: usize, m: usize) -> Result<QcShape> {
        if ell == 0 || m == 0 {
            return Err(Error::Precondition(format!(
                "shape ℓ={ell}, m={m} must be positive"
            )));
        }
        if m.is_multiple_of(2) {
            return Err(Error::Precondition(format!("m = {m} must be coprime to 2")));
        }
        if m > MAX_RING_M {
            return Err(Error::Precondition(format!("m = {m} exceeds {MAX_RING_M}")));
        }
        Ok(QcShape { ell, m })
    }

    /// The cubic shape `(ℓ, 3)`.
    pub fn cubic(ell: usize) -> Result<QcShape> {
        QcShape::new(ell, 3)
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.ell * self.m
    }

    fn check(&self, got: usize) -> Result<()> {
        if got != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got,
            });
        }
        Ok(())
    }
}

/// An element of `R^ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleVector {
    pub entries: Vec<RingElem>,
}

impl ModuleVector {
    pub fn ell(&self) -> usize {
        self.entries.len()
    }
}

/// `φ(c) = (c_0(Y), …, c_{ℓ-1}(Y))` with `c_j(Y) = Σ_i c_{ij} Y^i`.
pub fn phi_map(c: &BitVector, shape: QcShape) -> Result<ModuleVector> {
    shape.check(c.len())?;
    let (ell, m) = (shape.ell, shape.m);
    let entries = (0..ell)
        .map(|j| {
            let bits = (0..m)
                .filter(|&i| c.get(i * ell + j))
                .fold(0u64, |acc, i| acc | 1 << i);
            RingElem::from_bits(m, bits)
        })
        .collect();
    Ok(ModuleVector { entries })
}

pub fn phi_inverse(x: &ModuleVector) -> BitVector {
    let ell = x.ell();
    let m = x.entries.first().map_or(1, |e| e.m());
    let mut c = BitVector::zeros(ell * m);
    for (j, e) in x.entries.iter().enumerate() {
        for i in 0..m {
            if e.coeff(i) {
                c.set(i * ell + j, true);
            }
        }
    }
    c
}

/// Cyclic shift by `ℓ` positions: block `m-1` moves to the front.
pub fn shift_by_block(c: &BitVector, shape: QcShape) -> Result<BitVector> {
    shape.check(c.len())?;
    let n = shape.len();
    let mut out = BitVector::zeros(n);
    for p in (0..n).filter(|&p| c.get(p)) {
        out.set((p + shape.ell) % n, true);
    }
    Ok(out)
}

/// True iff the block shift maps the code onto itself.
pub fn check_quasi_cyclic(c: &BinaryCode, shape: QcShape) -> Result<bool> {
    shape.check(c.n())?;
    for r in c.rows() {
        if !c.contains(&shift_by_block(&r, shape)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `⟨x, y⟩ = Σ_j x_j · conj(y_j)` in `R`.
pub fn hermitian_ip_module(x: &ModuleVector, y: &ModuleVector) -> Result<RingElem> {
    if x.ell() != y.ell() {
        return Err(Error::LengthMismatch {
            expected: x.ell(),
            got: y.ell(),
        });
    }
    let m = match (x.entries.first(), y.entries.first()) {
        (Some(a), Some(b)) if a.m() != b.m() => {
            return Err(Error::Precondition(format!(
                "ring moduli {} and {} differ",
                a.m(),
                b.m()
            )))
        }
        (Some(a), _) => a.m(),
        (None, _) => return Err(Error::Precondition("empty module vectors".into())),
    };
    Ok(x.entries
        .iter()
        .zip(&y.entries)
        .fold(RingElem::zero(m), |acc, (a, b)| acc.add(&a.mul(&b.conj()))))
}

/// Checks that "every block shift of `a` is orthogonal to `b`" holds exactly
/// when `⟨φ(a), φ(b)⟩ = 0`. Always true for a correct implementation.
pub fn prop22_check(a: &BitVector, b: &BitVector, shape: QcShape) -> Result<bool> {
    shape.check(a.len())?;
    shape.check(b.len())?;
    let mut shifted = a.clone();
    let mut all_orthogonal = true;
    for _ in 0..shape.m {
        all_orthogonal &= !shifted.dot(b);
        shifted = shift_by_block(&shifted, shape)?;
    }
    let ip = hermitian_ip_module(&phi_map(a, shape)?, &phi_map(b, shape)?)?;
    Ok(all_orthogonal == ip.is_zero())
}
