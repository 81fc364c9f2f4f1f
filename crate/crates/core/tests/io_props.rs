use num_bigint::BigInt;
use proptest::prelude::*;

use periodic_orbits::{parse_sequence, render_sequence, Format, Seq, Sequence};

proptest! {
    #[test]
    fn parse_render_roundtrip(v in proptest::collection::vec(any::<i128>(), 1..=40), bfile in any::<bool>()) {
        let format = if bfile { Format::Bfile } else { Format::Csv };
        let s: Sequence = Seq::new(v.into_iter().map(BigInt::from).collect()).unwrap();
        let text = render_sequence(&s, format);
        let back: Sequence = parse_sequence(&text, format).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(render_sequence(&back, format), text);
    }

    #[test]
    fn bfile_gaps_rejected(len in 2usize..=20, skip in 1usize..=19) {
        prop_assume!(skip < len);
        let text: String = (1..=len).filter(|&n| n != skip).map(|n| format!("{n} {n}\n")).collect();
        let err = parse_sequence::<BigInt>(&text, Format::Bfile).unwrap_err();
        prop_assert_eq!(err.line, skip);
    }
}
