//! Property sweeps over randomly generated images and permutations.

use proptest::prelude::*;

use pixshuffle_core::{
    decrypt, derive_key, encrypt, merge_channels, naive_iterate, pooled_histogram, sample_mean,
    sample_sum, shannon_entropy, split_channels, ChannelMode, ChannelOrder, CipherConfig,
    ImageMatrix, Permutation,
};

fn image_strategy(max_side: usize) -> impl Strategy<Value = ImageMatrix> {
    (1..=max_side, 1..=max_side).prop_flat_map(|(rows, cols)| {
        proptest::collection::vec(any::<u8>(), rows * cols * 3)
            .prop_map(move |samples| ImageMatrix::new(rows, cols, samples).unwrap())
    })
}

fn mode_strategy() -> impl Strategy<Value = ChannelMode> {
    prop_oneof![Just(ChannelMode::None), Just(ChannelMode::Rotate)]
}

proptest! {
    #[test]
    fn split_merge_round_trips(img in image_strategy(12)) {
        let (r, g, b) = split_channels(&img);
        let back = merge_channels(&r, &g, &b, ChannelOrder::identity()).unwrap();
        prop_assert_eq!(back, img);
    }

    #[test]
    fn split_preserves_sample_multiset(img in image_strategy(12)) {
        let (r, g, b) = split_channels(&img);
        let mut recombined: Vec<u8> = r.samples().to_vec();
        recombined.extend(g.samples());
        recombined.extend(b.samples());
        recombined.sort_unstable();
        let mut original = img.samples().to_vec();
        original.sort_unstable();
        prop_assert_eq!(recombined, original);
    }

    #[test]
    fn cipher_round_trips(img in image_strategy(16), mode in mode_strategy()) {
        let cfg = CipherConfig::new(mode);
        let (ciphered, _) = encrypt(&img, &cfg);
        let (restored, _) = decrypt(&ciphered, &cfg);
        prop_assert_eq!(restored, img);
    }

    #[test]
    fn cipher_preserves_key_inputs(img in image_strategy(16), mode in mode_strategy()) {
        let (ciphered, _) = encrypt(&img, &CipherConfig::new(mode));
        prop_assert_eq!((ciphered.rows(), ciphered.cols()), (img.rows(), img.cols()));
        prop_assert_eq!(sample_sum(&ciphered), sample_sum(&img));
        prop_assert_eq!(pooled_histogram(&ciphered), pooled_histogram(&img));
        prop_assert_eq!(derive_key(&ciphered), derive_key(&img));
    }

    #[test]
    fn derived_iterations_stay_in_range(img in image_strategy(16)) {
        let key = derive_key(&img);
        prop_assert!(key.iterations >= 1);
        prop_assert!(key.iterations <= img.cols() as u64);
    }

    #[test]
    fn entropy_is_permutation_invariant(img in image_strategy(12), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut shuffled = img.samples().to_vec();
        shuffled.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let other = ImageMatrix::new(img.rows(), img.cols(), shuffled).unwrap();
        prop_assert_eq!(
            shannon_entropy(&pooled_histogram(&other)),
            shannon_entropy(&pooled_histogram(&img))
        );
        prop_assert_eq!(sample_mean(&other), sample_mean(&img));
    }

    #[test]
    fn permutation_maps_are_bijections(rows in 1usize..=12, cols in 1usize..=12, k in 0u64..=40) {
        let perm = Permutation::transpose_reshape(rows, cols).pow(k);
        let mut sorted = perm.map().to_vec();
        sorted.sort_unstable();
        let expected: Vec<usize> = (0..rows * cols).collect();
        prop_assert_eq!(sorted, expected);
    }

    #[test]
    fn inverse_undoes_application(img in image_strategy(12), k in 0u64..=20) {
        let perm = Permutation::transpose_reshape(img.rows(), img.cols()).pow(k);
        let (r, _, _) = split_channels(&img);
        let there = perm.apply(&r).unwrap();
        let back = perm.inverted().apply(&there).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn power_is_additive(rows in 1usize..=8, cols in 1usize..=8, a in 0u64..=15, b in 0u64..=15) {
        let perm = Permutation::transpose_reshape(rows, cols);
        let lhs = perm.pow(a + b);
        let rhs = perm.pow(a).compose(&perm.pow(b)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn power_matches_naive_iteration(rows in 1usize..=8, cols in 1usize..=8, k in 0u64..=20) {
        let perm = Permutation::transpose_reshape(rows, cols);
        prop_assert_eq!(perm.pow(k), naive_iterate(&perm, k));
    }

    #[test]
    fn order_rotation_is_additive(a in 0usize..=9, b in 0usize..=9) {
        let order = ChannelOrder::identity();
        prop_assert_eq!(order.rotated(a + b), order.rotated(a).rotated(b));
    }
}
