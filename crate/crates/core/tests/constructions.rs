use pword::constructions::{
    cube_examples, square_chain, three_power_word, three_power_word_unchecked, two_power_word,
};
use pword::powers::{power_occurrences, start_positions, unique_start_position};
use pword::{Exponent, PartialWord};

fn spans(w: &PartialWord, r: usize) -> Vec<(usize, usize)> {
    power_occurrences(w, Exponent::new(r).unwrap())
        .iter()
        .map(|o| (o.start, o.length))
        .collect()
}

#[test]
fn square_chain_counts() {
    for k in 0..=5 {
        let w = square_chain(k).unwrap();
        assert_eq!(w.len(), 1 << k);
        assert_eq!(w.hole_positions(), [1]);
        let sq = spans(&w, 2);
        assert_eq!(sq.len(), k, "{w}");
        assert!(sq.iter().all(|&(s, _)| s == 1), "{w}");
        let lengths: Vec<usize> = sq.iter().map(|&(_, l)| l).collect();
        let expected: Vec<usize> = (1..=k).map(|i| 1 << i).collect();
        assert_eq!(lengths, expected, "{w}");
    }
}

#[test]
fn square_chain_needs_letters() {
    assert!(square_chain(27).is_err());
}

#[test]
fn two_power_words() {
    for r in 2..=10 {
        let w = two_power_word(r).unwrap();
        assert_eq!(w.len(), 2 * r);
        let e = Exponent::new(r).unwrap();
        assert_eq!(unique_start_position(&w, e), Some(1), "{w}");
        assert_eq!(spans(&w, r), [(1, r), (1, 2 * r)], "{w}");
    }
}

#[test]
fn three_power_words() {
    for r in (3..=21).step_by(6) {
        let w = three_power_word(r).unwrap();
        assert_eq!(w.len(), 3 * r);
        assert_eq!(spans(&w, r), [(1, r), (1, 2 * r), (1, 3 * r)], "{w}");
    }
    for r in [2, 4, 5, 6, 7, 12] {
        assert!(three_power_word(r).is_err(), "r={r}");
    }
    // outside the hypothesis the same shape loses its longest power
    let w = three_power_word_unchecked(5).unwrap();
    assert_eq!(spans(&w, 5), [(1, 5), (1, 10)]);
}

#[test]
fn cube_words() {
    for w in cube_examples() {
        assert_eq!(spans(&w, 3), [(1, 3), (1, 6), (1, 9)], "{w}");
        assert_eq!(start_positions(&w, Exponent::CUBE), [1]);
    }
}
