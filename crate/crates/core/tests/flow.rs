//! Rows travel through certification, moves, the symbol and the quadric maps.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{h_with_certificate, pairing, pf4};
use vaserstein::quotient::RingExt;
use vaserstein::random;
use vaserstein::rows::row_make;
use vaserstein::spheres;
use vaserstein::witt::vaserstein_symbol;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn symbol_survives_moves(seed in any::<u64>(), len in 1usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ring = random::random_ring(&mut rng);
        let mut row = random::constructed_row(&mut rng, &ring, 3);
        let word: Vec<_> = (0..len).map(|_| random::random_move(&mut rng, &ring, 3)).collect();
        row = row.apply_word(&word).unwrap();
        prop_assert!(pairing(row.entries(), row.certificate()).is_one());
        let v = vaserstein_symbol(&row).unwrap();
        prop_assert!(pf4(v.matrix.matrix().rows()).is_one());
    }

    #[test]
    fn recertified_rows_feed_h(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ring = random::random_ring(&mut rng);
        let (entries, _) = random::constructed_entries(&mut rng, &ring, 4);
        let row = row_make(&ring, entries, None).unwrap();
        let out = spheres::compose_h(&row).unwrap();
        let (want, cert) = h_with_certificate(row.entries(), row.certificate());
        prop_assert_eq!(out.entries(), want.as_slice());
        prop_assert!(pairing(&want, &cert).is_one());
        let q4 = spheres::map_f(&row).unwrap();
        prop_assert!(spheres::quadric_member(&spheres::QuadricSpec::even(2), &q4).unwrap());
    }
}

#[test]
fn g_after_f_is_unimodular() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let ring = random::random_ring(&mut rng);
    let row = random::constructed_row(&mut rng, &ring, 4);
    let point = spheres::map_f(&row).unwrap();
    let minus_one = ring.int(-1);
    let back = spheres::map_g(&point, &minus_one).unwrap();
    assert_eq!(back.len(), 3);
    assert!(row_make(&ring, back, None).is_ok());
}
