use kac_crystal::base::hook_bijection;
use kac_crystal::kac::generate_graph;
use kac_crystal::verify::{check_axioms, check_character, check_compat, check_connected, check_rho};
use kac_crystal::rsk::ZeroRule;
use kac_crystal::{KacCrystal, Partition, Rank, Weight};

fn instance(m: usize, n: usize, lam: &str) -> (Rank, Weight) {
    let rank = Rank::new(m, n).unwrap();
    (rank, Weight::parse_for(rank, lam).unwrap())
}

#[test]
fn trivial_one_one() {
    let (rank, lam) = instance(1, 1, "0|0");
    let g = generate_graph(rank, &lam, 100).unwrap();
    assert_eq!((g.len(), g.edge_count()), (2, 1));
    let kac = KacCrystal::new(rank, &lam).unwrap();
    assert!(check_axioms(&g, |x| kac.contains(x)).pass);
    assert!(check_character(&g, &lam).pass);
}

#[test]
fn two_two_zero_is_one_component_of_sixteen() {
    let (rank, lam) = instance(2, 2, "0,0|0,0");
    let g = generate_graph(rank, &lam, 100).unwrap();
    assert_eq!(g.len(), 16);
    let (r, _) = check_connected(&g, &lam);
    assert!(r.pass);
    assert_eq!(r.counts["components"], 1);
}

#[test]
fn two_one_count() {
    // 2^2 odd-root subsets, two SST of shape (1) over {2bar, 1bar}, one empty tableau
    let (rank, lam) = instance(2, 1, "1,0|0");
    let g = generate_graph(rank, &lam, 100).unwrap();
    assert_eq!(g.len(), 8);
    assert!(check_character(&g, &lam).pass);
}

#[test]
fn single_box_image_is_the_natural_representation() {
    for (m, n) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
        let rank = Rank::new(m, n).unwrap();
        let lam = hook_bijection(rank, &Partition::parse("1").unwrap()).unwrap();
        let r = check_compat(rank, &lam, 200_000, false);
        assert!(r.pass, "{r:?}");
        assert_eq!(r.counts["image"], (m + n) as u64);
    }
}

#[test]
fn corrupted_zero_rule_is_caught() {
    let (rank, lam) = instance(2, 2, "-1,-2|2,1");
    let good = check_rho(rank, &lam, 4, ZeroRule::Standard);
    assert!(good.pass, "{good:?}");
    let bad = check_rho(rank, &lam, 4, ZeroRule::Corrupted);
    assert!(!bad.pass);
    assert!(bad.witness.is_some());
}
