//! Round-trip invariants for the text formats over random values.

use proptest::prelude::*;

use stopred::formats;
use stopred_core::combin;
use stopred_core::designs::BlockSystem;
use stopred_core::field::{FieldMatrix, FieldSpec};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn matrix_text_roundtrip(
        p in prop_oneof![Just(2u32), Just(3), Just(5), Just(251)],
        rows in 1usize..6,
        cols in 1usize..8,
        seed in any::<u64>(),
    ) {
        let field = FieldSpec::new(p).unwrap();
        // Cheap deterministic fill from the seed.
        let entries: Vec<u32> = (0..rows * cols)
            .map(|i| {
                let x = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64 * 0x45D9_F3B3);
                (x % u64::from(p)) as u32
            })
            .collect();
        let m = FieldMatrix::new(field, rows, cols, entries).unwrap();
        let text = formats::write_matrix(&m);
        let back = formats::parse_matrix(&text).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(formats::write_matrix(&back), text);
    }

    #[test]
    fn block_system_text_roundtrip(
        v in 2usize..12,
        r_offset in 1usize..4,
        picks in proptest::collection::vec(any::<u64>(), 0..12),
    ) {
        let r = r_offset.min(v - 1);
        let all: Vec<u64> = combin::subsets(v, r).collect();
        let blocks: Vec<u64> = picks.iter().map(|&p| all[(p % all.len() as u64) as usize]).collect();
        let s = BlockSystem::new(v, r, blocks).unwrap();
        let text = formats::write_block_system(&s);
        let back = formats::parse_block_system(&text).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(formats::write_block_system(&back), text);
    }
}
