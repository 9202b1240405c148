use rtv_core::roundtrip::{
    corollary2_radius, lemma1_admits, lemma3_excluded, lemma4_holds_on_path,
};
use rtv_core::workbench::{generate, Family, GeneratorConfig};
use rtv_core::*;

fn path(n: usize) -> Network {
    generate(&GeneratorConfig::new(Family::Path { n })).unwrap()
}

fn units(u: u64) -> Distance {
    Distance::from_units(u)
}

fn pair(a: u32, b: u32) -> Option<SitePair> {
    SitePair::new(SiteId(a), SiteId(b))
}

fn colored(n: usize, s: &[usize], t: &[usize]) -> SiteSet {
    let mut vertices = s.to_vec();
    vertices.extend_from_slice(t);
    let colors = s
        .iter()
        .map(|_| Color::S)
        .chain(t.iter().map(|_| Color::T))
        .collect();
    SiteSet::colored(n, vertices, colors).unwrap()
}

#[test]
fn loads_small_graph() {
    let (net, report) = load_network("p sp 3 2\na 1 2 1.0\na 2 3 1.0\n").unwrap();
    assert_eq!((net.vertex_count(), net.edge_count()), (3, 2));
    assert_eq!(report.declared_edges, 2);
    let (net, _) = load_network("p sp 2 2\na 1 2 5.0\na 2 1 3.0\n").unwrap();
    assert_eq!(
        net.edges().collect::<Vec<_>>(),
        vec![(0, 1, Weight::from_units(3))]
    );
    let (net, _) = load_network("p sp 1 1\na 1 1 2.0\n").unwrap();
    assert_eq!(net.edge_count(), 0);
}

#[test]
fn site_numbers_follow_file_order() {
    let net = path(4);
    let loaded = load_sites("1\n3\n", &net).unwrap();
    assert_eq!(loaded.sites.len(), 2);
    assert_eq!(loaded.sites.site_at(0), Some(SiteId(0)));
    assert_eq!(loaded.sites.site_at(2), Some(SiteId(1)));
}

#[test]
fn lemma_predicates() {
    assert!(lemma1_admits(units(3), units(6)));
    assert!(!lemma1_admits(units(4), units(6)));
    assert!(lemma1_admits(units(1000), Distance::UNREACHABLE));

    assert_eq!(corollary2_radius(units(1), units(1)), units(2));
    assert_eq!(corollary2_radius(units(0), units(5)), units(5));
    assert_eq!(
        corollary2_radius(units(1), Distance::UNREACHABLE),
        Distance::UNREACHABLE
    );

    assert!(lemma3_excluded(units(10), units(1), units(1)));
    assert!(!lemma3_excluded(units(10), units(1), units(9)));
    assert!(!lemma3_excluded(units(2), units(1), units(1)));
}

#[test]
fn single_and_sum_on_path() {
    let net = path(3);
    let sites = SiteSet::new(3, vec![0, 2]).unwrap();
    let single = single_site_diagram(&net, &sites).unwrap();
    assert_eq!(
        single,
        vec![
            (Some(SiteId(0)), units(0)),
            (Some(SiteId(0)), units(1)),
            (Some(SiteId(1)), units(0))
        ]
    );
    let sum = two_site_sum_diagram(&net, &sites).unwrap();
    for (v, label) in sum.labels.iter().enumerate() {
        assert_eq!(label.d1 + label.d2, units(2), "vertex {v}");
    }
    assert_eq!(sum.labels[0].r1, Some(SiteId(0)));
    assert_eq!(sum.labels[2].r1, Some(SiteId(1)));
}

#[test]
fn brute_examples() {
    let net = path(3);
    let sites = SiteSet::new(3, vec![0, 2]).unwrap();
    let run = roundtrip_brute(&net, &sites).unwrap();
    for l in &run.labels {
        assert_eq!((l.pair, l.dp), (pair(0, 1), units(4)));
    }

    let net = path(4);
    let sites = SiteSet::new(4, vec![0, 1, 3]).unwrap();
    let run = roundtrip_brute(&net, &sites).unwrap();
    assert_eq!(
        (run.labels[2].pair, run.labels[2].dp),
        (pair(0, 1), units(4))
    );
}

#[test]
fn revised_examples() {
    let net = path(3);
    let sites = SiteSet::new(3, vec![0, 2]).unwrap();
    let run = roundtrip_revised(&net, &sites, 0).unwrap();
    assert!(run.total().case_ii_count > 0);
    assert_eq!(
        (run.labels[1].pair, run.labels[1].dp),
        (pair(0, 1), units(4))
    );
    assert_eq!(run.labels, roundtrip_brute(&net, &sites).unwrap().labels);

    let run = roundtrip_revised(&net, &sites, 1).unwrap();
    assert_eq!(run.total().case_ii_count, 0);
}

#[test]
fn dynamic_and_table_on_long_path() {
    let net = path(11);
    let sites = SiteSet::new(11, vec![0, 1, 9, 10]).unwrap();
    let (table, _) = build_candidate_table(&net, &sites, PairRule::AnyTwo).unwrap();
    assert_eq!(
        table.sorted(),
        vec![
            (pair(0, 1).unwrap(), units(1)),
            (pair(2, 3).unwrap(), units(1))
        ]
    );
    let run = roundtrip_dynamic(&net, &sites).unwrap();
    assert_eq!(
        (run.labels[5].pair, run.labels[5].dp),
        (pair(0, 1), units(10))
    );
    assert_eq!(run.labels, roundtrip_brute(&net, &sites).unwrap().labels);

    // The boundary vertex v5 survives; past it (2 * 6 > 3 + 4 + 1 at v6) s is cut.
    assert!(lemma4_holds_on_path(&net, &sites, SiteId(0), 5).unwrap());
    assert!(!lemma4_holds_on_path(&net, &sites, SiteId(0), 10).unwrap());
    assert_ne!(run.labels[10].pair.map(|p| p.lo), Some(SiteId(0)));
    assert!(lemma4_holds_on_path(&net, &sites, SiteId(0), 0).unwrap());
}

#[test]
fn two_color_examples() {
    let net = path(3);
    let sites = colored(3, &[0], &[2]);
    for alg in [Algorithm::Brute, Algorithm::Revised(0), Algorithm::Dynamic] {
        let run = roundtrip_two_color(&net, &sites, alg).unwrap();
        assert!(run.labels.iter().all(|l| l.pair == pair(0, 1)), "{alg}");
    }

    let net = path(4);
    let sites = colored(4, &[0, 3], &[1, 2]);
    let (table, _) = build_candidate_table(&net, &sites, PairRule::CrossColor).unwrap();
    assert_eq!(table.len(), 4);
    for alg in [
        Algorithm::Brute,
        Algorithm::Revised(0),
        Algorithm::Revised(2),
        Algorithm::Dynamic,
    ] {
        let run = roundtrip_two_color(&net, &sites, alg).unwrap();
        // Site 0 is v0 and site 2 is v1.
        assert_eq!(
            (run.labels[0].pair, run.labels[0].dp),
            (pair(0, 2), units(2)),
            "{alg}"
        );
    }
}

#[test]
fn k_below_two_is_rejected() {
    let net = path(3);
    let sites = SiteSet::new(3, vec![1]).unwrap();
    assert!(roundtrip_brute(&net, &sites).is_err());
    assert!(roundtrip_dynamic(&net, &sites).is_err());
    assert!(two_site_sum_diagram(&net, &sites).is_err());
}

#[test]
fn density_examples() {
    let net = path(11);
    let sites = SiteSet::new(11, vec![0, 1, 9, 10]).unwrap();
    let report = density_report(&net, &sites, false, 8).unwrap();
    assert_eq!((report.c, report.c_over_k), (2, 0.5));

    let sites = SiteSet::new(11, vec![3, 7]).unwrap();
    let report = density_report(&net, &sites, false, 8).unwrap();
    assert_eq!((report.c, report.c_over_k), (1, 0.5));
}
