//! Fixed inputs for the kernel benchmarks.

use qcforge_core::gf::Gf4;
use qcforge_core::lincode::{Gf4Vector, QuaternaryCode};
use qcforge_core::qc::{construct_cubic, CubicComponents};
use qcforge_core::{BinaryCode, BitVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_selfdual(n: usize, rng: &mut impl Rng) -> BinaryCode {
    let mut c = BinaryCode::zero(n);
    while c.k() < n / 2 {
        let v = c
            .euclidean_dual()
            .rows()
            .into_iter()
            .filter(|_| rng.random_bool(0.5))
            .fold(BitVector::zeros(n), |mut acc, r| {
                acc.xor_assign(&r);
                acc
            });
        if v.weight() % 2 == 0 && !c.contains(&v) {
            let mut rows = c.rows();
            rows.push(v);
            c = BinaryCode::from_rows(n, &rows).unwrap();
        }
    }
    c
}

fn random_hermitian_selfdual(n: usize, rng: &mut impl Rng) -> QuaternaryCode {
    let mut c = QuaternaryCode::zero(n);
    while c.k() < n / 2 {
        let v = c.hermitian_dual().rows().iter().fold(Gf4Vector::zeros(n), |acc, r| {
            acc.add(&r.scale(Gf4::ALL[rng.random_range(0..4)]))
        });
        if v.weight() % 2 == 0 && !c.contains(&v) {
            let mut rows = c.rows();
            rows.push(v);
            c = QuaternaryCode::from_rows(n, &rows).unwrap();
        }
    }
    c
}

/// A cubic self-dual code of length `3 * ell` from seeded random components.
pub fn cubic_selfdual(ell: usize, seed: u64) -> BinaryCode {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parts = CubicComponents::new(
        random_selfdual(ell, &mut rng),
        random_hermitian_selfdual(ell, &mut rng),
    )
    .unwrap();
    construct_cubic(&parts).unwrap()
}
