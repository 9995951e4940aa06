use boolrsk::{
    f_map, g_map, heap_of, is_uncrowded_tableau, optimal_run_word, rho_orbit, row2_from_canonical, rsk, run_statistic,
    ulam_sort, BinaryWord, CanonicalWord, Permutation,
};
use proptest::prelude::*;

fn permutation(max_degree: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_degree)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|entries| Permutation::from_one_line(entries).unwrap())
}

/// Binary words with odd runs of ones: blocks `0` or `1^(2k+1) 0`, trimmed.
fn odd_run_word(max_blocks: usize) -> impl Strategy<Value = BinaryWord> {
    prop::collection::vec(prop_oneof![Just(0usize), (0usize..4).prop_map(|k| 2 * k + 1)], 0..max_blocks).prop_map(
        |blocks| {
            let mut bits = Vec::new();
            for ones in blocks {
                bits.extend(std::iter::repeat_n(true, ones));
                bits.push(false);
            }
            if bits.len() > 1 && bits[bits.len() - 2] {
                bits.pop();
            }
            BinaryWord::new(bits)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn first_row_plus_run_is_degree(w in permutation(12)) {
        let lambda1 = rsk(&w).0.shape().first_row();
        prop_assert_eq!(lambda1 + run_statistic(&w), w.degree());
        prop_assert_eq!(rho_orbit(&w).len(), run_statistic(&w));
    }

    #[test]
    fn optimal_run_word_evaluates_to_w(w in permutation(12)) {
        let runs = optimal_run_word(&w);
        prop_assert_eq!(runs.len(), run_statistic(&w));
        let letters: Vec<usize> = runs.iter().flat_map(|r| r.letters().to_vec()).collect();
        let word = boolrsk::Word::new(letters, w.degree()).unwrap();
        prop_assert!(word.is_reduced());
        prop_assert_eq!(word.evaluate(), w);
    }

    #[test]
    fn ulam_moves_sort(w in permutation(12)) {
        let moves = ulam_sort(&w);
        prop_assert_eq!(moves.len(), run_statistic(&w));
        let mut current = w.clone();
        for (mv, state) in &moves {
            current = mv.apply(&current).unwrap();
            prop_assert_eq!(&current, state);
        }
        prop_assert!(current.is_identity());
    }

    #[test]
    fn boolean_second_rows(w in permutation(8)) {
        prop_assume!(w.is_boolean());
        let c = CanonicalWord::of(&w).unwrap();
        let (p, q) = rsk(&w);
        let (row2_p, row2_q) = row2_from_canonical(&c);
        prop_assert_eq!(row2_p, p.rows().get(1).map(|r| r.iter().copied().collect()).unwrap_or_default());
        prop_assert_eq!(row2_q, q.rows().get(1).map(|r| r.iter().copied().collect()).unwrap_or_default());
        prop_assert!(is_uncrowded_tableau(&p).unwrap());
        prop_assert_eq!(c.word().evaluate(), w.clone());
        prop_assert_eq!(CanonicalWord::from_word(&c.word()).unwrap(), CanonicalWord::from_heap(&heap_of(&w).unwrap()));
    }

    #[test]
    fn f_then_g_is_identity(x in odd_run_word(12)) {
        let t = f_map(&x).unwrap();
        prop_assert_eq!(t.size(), x.n());
        prop_assert!(is_uncrowded_tableau(&t).unwrap());
        prop_assert_eq!(g_map(&t).unwrap(), x);
    }
}
