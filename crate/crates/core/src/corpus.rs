//! The versioned test corpus: which algebras the theorem suite runs on, at
//! which field sizes, and how seeded basis changes are derived.
//!
//! Keeping the composition in code makes acceptance runs reproducible: the
//! same seed always yields the same basis changes, the same corpus rows, and
//! the same verdicts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::Family;
use crate::gfq::Field;
use crate::linalg::Matrix;

/// Master seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 1;

/// Seeded random basis changes applied per corpus entry by the bound suite.
pub const BASIS_CHANGES_PER_ENTRY: usize = 10;

/// Field sizes the corpus runs at.
pub const CORPUS_FIELD_SIZES: &[u64] = &[2, 3, 4];

/// One corpus row: a family at a field size.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub family: Family,
    pub q: u64,
}

/// Every family the corpus exercises, abelian members included (they feed
/// the oracle-agreement and gap checks; bound checks skip them since the
/// bounds are stated for non-abelian algebras).
pub fn corpus_families() -> Vec<Family> {
    use Family::*;
    let h1 = || Box::new(Heisenberg(1));
    vec![
        Abelian(2),
        Abelian(3),
        Heisenberg(1),
        Heisenberg(2),
        Affine2,
        L55,
        L57,
        L67_2,
        DirectSum(h1(), h1()),
        DirectSum(h1(), Box::new(Abelian(1))),
        DirectSum(h1(), Box::new(Abelian(2))),
        DirectSum(Box::new(Affine2), Box::new(Abelian(1))),
        DirectSum(Box::new(Affine2), Box::new(Affine2)),
    ]
}

/// The full corpus: every family crossed with every field size.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut rows = Vec::new();
    for family in corpus_families() {
        for &q in CORPUS_FIELD_SIZES {
            rows.push(CorpusEntry { family: family.clone(), q });
        }
    }
    rows
}

/// Build the field for a corpus row; sizes are prime powers covered by the
/// built-in modulus table.
pub fn corpus_field(q: u64) -> Field {
    crate::gfq::field_for_order(q).expect("corpus sizes are small prime powers")
}

/// Deterministic per-item RNG: mixes the master seed with a label via FNV-1a
/// so items are independent of iteration order.
pub fn item_rng(master_seed: u64, label: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(master_seed ^ h)
}

/// Uniformly random invertible matrix by rejection sampling.
pub fn random_invertible(field: &Field, n: usize, rng: &mut impl Rng) -> Matrix {
    loop {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            for j in 0..n {
                let code = rng.gen_range(0..field.order());
                m.set(i, j, field.element(code).expect("sampled below q"));
            }
        }
        if m.is_invertible() {
            return m;
        }
    }
}
