//! Labeling files. Vertices are written 1-based like the graph file; sites
//! keep their 0-based file-order numbers. Missing entries print as `-`.

use std::fmt::Write as _;

use crate::classic::SumLabel;
use crate::roundtrip::PairLabel;
use crate::sites::SiteId;
use crate::weight::Distance;

/// `vertex<TAB>site1<TAB>d1...` with exactly `width` site columns per row.
pub fn site_lists_tsv(lists: &[Vec<(SiteId, Distance)>], width: usize) -> String {
    let mut out = String::new();
    for (v, list) in lists.iter().enumerate() {
        let _ = write!(out, "{}", v + 1);
        for i in 0..width {
            match list.get(i) {
                Some((s, d)) => {
                    let _ = write!(out, "\t{s}\t{d}");
                }
                None => out.push_str("\t-\t-"),
            }
        }
        out.push('\n');
    }
    out
}

pub fn single_site_tsv(labels: &[(Option<SiteId>, Distance)]) -> String {
    let lists: Vec<Vec<_>> = labels
        .iter()
        .map(|&(s, d)| s.map(|s| (s, d)).into_iter().collect())
        .collect();
    site_lists_tsv(&lists, 1)
}

pub fn sum_tsv(labels: &[SumLabel]) -> String {
    let lists: Vec<_> = labels.iter().map(SumLabel::entries).collect();
    site_lists_tsv(&lists, 2)
}

/// `vertex<TAB>site_lo<TAB>site_hi<TAB>dp`.
pub fn pair_labels_tsv(labels: &[PairLabel]) -> String {
    let mut out = String::new();
    for (v, l) in labels.iter().enumerate() {
        let _ = match l.pair {
            Some(p) => writeln!(out, "{}\t{}\t{}\t{}", v + 1, p.lo, p.hi, l.dp),
            None => writeln!(out, "{}\t-\t-\t-", v + 1),
        };
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sites::SitePair;

    #[test]
    fn padded_rows() {
        let lists = vec![vec![(SiteId(0), Distance::ZERO)], vec![]];
        assert_eq!(
            site_lists_tsv(&lists, 2),
            "1\t0\t0.000000\t-\t-\n2\t-\t-\t-\t-\n"
        );
        assert_eq!(
            single_site_tsv(&[(None, Distance::UNREACHABLE)]),
            "1\t-\t-\n"
        );
    }

    #[test]
    fn pair_rows() {
        let labels = [
            PairLabel {
                pair: SitePair::new(SiteId(1), SiteId(0)),
                dp: Distance::from_units(4),
            },
            PairLabel::NONE,
        ];
        assert_eq!(pair_labels_tsv(&labels), "1\t0\t1\t4.000000\n2\t-\t-\t-\n");
    }
}
