use super::shape::{check_quasi_cyclic, phi_map, QcShape};
use crate::error::{Error, Result};
use crate::gf::{factor_cyclotomic, ExtField, Factorization, PolyF2, RingElem};
use crate::lincode::BinaryCode;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    /// Over `F2[Y]/(g)` for a self-reciprocal `g`.
    SelfReciprocal,
    /// Over `F2[Y]/(h)`, first member of a reciprocal pair.
    PairFirst,
    /// Over `F2[Y]/(h*)`.
    PairSecond,
}

/// A length-ℓ linear code over the field `F2[Y]/(modulus)`, in reduced
/// row-echelon form. Field elements are reduced polynomials as bit masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCode {
    pub modulus: PolyF2,
    pub kind: ComponentKind,
    pub ell: usize,
    pub rows: Vec<Vec<u64>>,
}

impl ComponentCode {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn field(&self) -> ExtField {
        ExtField::new(self.modulus).expect("component modulus")
    }
}

/// The CRT components of an ℓ-quasi-cyclic code, in the order
/// `g_1, …, g_s, h_1, h_1*, …, h_t, h_t*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrtComponents {
    pub shape: QcShape,
    pub factorization: Factorization,
    pub components: Vec<ComponentCode>,
}

impl CrtComponents {
    /// `Σ deg(f) · dim(C_f)`, the binary dimension of the decomposed code.
    pub fn binary_dim(&self) -> usize {
        self.components
            .iter()
            .map(|c| c.modulus.degree().unwrap() as usize * c.dim())
            .sum()
    }
}

/// Reduced row-echelon form over `F2[Y]/(f)`, zero rows dropped.
fn ext_rref(field: &ExtField, mut rows: Vec<Vec<u64>>, ell: usize) -> Vec<Vec<u64>> {
    let mut r = 0;
    for col in 0..ell {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(rows[r][col]).unwrap();
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let e = rows[i][col];
                for j in 0..ell {
                    let t = field.mul(e, rows[r][j]);
                    rows[i][j] ^= t;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// Splits an ℓ-quasi-cyclic code into its component codes, one per
/// irreducible factor `f` of `Y^m - 1`: reduce every φ-image coordinate mod `f`.
pub fn crt_decompose(c: &BinaryCode, shape: QcShape) -> Result<CrtComponents> {
    if !check_quasi_cyclic(c, shape)? {
        return Err(Error::NotQuasiCyclic { ell: shape.ell() });
    }
    let factorization = factor_cyclotomic(shape.m())?;
    let images = c
        .rows()
        .iter()
        .map(|r| phi_map(r, shape))
        .collect::<Result<Vec<_>>>()?;
    let mut kinds = vec![ComponentKind::SelfReciprocal; factorization.s()];
    for _ in 0..factorization.t() {
        kinds.push(ComponentKind::PairFirst);
        kinds.push(ComponentKind::PairSecond);
    }
    let components = factorization
        .factors()
        .into_iter()
        .zip(kinds)
        .map(|(f, kind)| {
            let field = ExtField::new(f)?;
            let rows = images
                .iter()
                .map(|x| x.entries.iter().map(|e| field.reduce(e.poly())).collect())
                .collect();
            Ok(ComponentCode {
                modulus: f,
                kind,
                ell: shape.ell(),
                rows: ext_rref(&field, rows, shape.ell()),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CrtComponents {
        shape,
        factorization,
        components,
    })
}

/// `e(Y^(m-1)) mod target` for `e` a residue mod some factor of `Y^m - 1`.
fn conj_into(e: u64, m: usize, target: PolyF2) -> u64 {
    let lifted = RingElem::from_poly(m, PolyF2::from_bits(e as u128)).conj();
    lifted.poly().rem(target).bits() as u64
}

/// Checks the self-duality criterion on CRT components: each self-reciprocal
/// component is Hermitian self-dual (conjugation `Y ↦ Y^(m-1)`), and for each
/// pair the second component, carried to the first field by `Y ↦ Y^(-1)`, is
/// the Euclidean dual of the first.
pub fn verify_decomposition_selfdual(parts: &CrtComponents) -> bool {
    let m = parts.shape.m();
    let ell = parts.shape.ell();
    let mut i = 0;
    while i < parts.components.len() {
        let c = &parts.components[i];
        let field = c.field();
        match c.kind {
            ComponentKind::SelfReciprocal => {
                if 2 * c.dim() != ell {
                    return false;
                }
                for x in &c.rows {
                    for y in &c.rows {
                        let ip = (0..ell).fold(0u64, |acc, j| {
                            acc ^ field.mul(x[j], conj_into(y[j], m, c.modulus))
                        });
                        if ip != 0 {
                            return false;
                        }
                    }
                }
                i += 1;
            }
            ComponentKind::PairFirst => {
                let Some(second) = parts.components.get(i + 1) else {
                    return false;
                };
                if c.dim() + second.dim() != ell {
                    return false;
                }
                for x in &c.rows {
                    for y in &second.rows {
                        let ip = (0..ell).fold(0u64, |acc, j| {
                            acc ^ field.mul(x[j], conj_into(y[j], m, c.modulus))
                        });
                        if ip != 0 {
                            return false;
                        }
                    }
                }
                i += 2;
            }
            ComponentKind::PairSecond => return false,
        }
    }
    true
}
