use proptest::prelude::*;

use kac_crystal::base::hook_bijection;
use kac_crystal::embedding::Embedding;
use kac_crystal::rsk::{default_ell, KappaCrystal};
use kac_crystal::tableau::enumerate_sst;
use kac_crystal::{Alphabet, Crystal, Dir, KacCrystal, Partition, Rank, SkewShape, Tableau, Weight};

fn sorted_desc(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Dominant weights of rank (m|n) with coordinates in [-2, 3].
fn dominant(m: usize, n: usize) -> impl Strategy<Value = Weight> {
    (prop::collection::vec(-2i64..=3, m), prop::collection::vec(-2i64..=3, n)).prop_map(move |(b, u)| {
        Weight::new(Rank::new(m, n).unwrap(), &sorted_desc(b), &sorted_desc(u)).unwrap()
    })
}

fn small_rank() -> impl Strategy<Value = (usize, usize)> {
    prop_oneof![Just((1, 1)), Just((2, 1)), Just((1, 2)), Just((2, 2))]
}

fn window_weight() -> impl Strategy<Value = Weight> {
    small_rank().prop_flat_map(|(m, n)| {
        dominant(m, n).prop_filter("window", move |w| w.bar(m) <= 0 && w.unbar(n) >= 0)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weight_text_round_trip((m, n) in small_rank(), seed in any::<u64>()) {
        let rank = Rank::new(m, n).unwrap();
        let coords: Vec<i64> = (0..m + n).map(|i| ((seed >> (4 * i)) & 15) as i64 - 7).collect();
        let w = Weight::new(rank, &coords[..m], &coords[m..]).unwrap();
        prop_assert_eq!(Weight::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn rho_round_trips(lam in window_weight(), pick in any::<prop::sample::Index>(), extra in 0usize..2) {
        let kappa = KappaCrystal::new(lam.rank(), &lam, default_ell(&lam) + extra).unwrap();
        let domain = kappa.kac_domain().enumerate();
        let x = &domain[pick.index(domain.len())];
        let y = kappa.rho(x).unwrap();
        prop_assert!(kappa.contains(&y));
        prop_assert_eq!(kappa.weight(&y), kappa.kac_domain().weight(x));
        prop_assert_eq!(&kappa.rho_inv(&y).unwrap(), x);
    }

    #[test]
    fn kac_operators_are_partial_inverses(
        (m, n) in small_rank(),
        lam_seed in any::<prop::sample::Index>(),
        pick in any::<prop::sample::Index>(),
    ) {
        let rank = Rank::new(m, n).unwrap();
        let weights = kac_crystal::verify::dominant_weights(rank, -1, 2);
        let lam = &weights[lam_seed.index(weights.len())];
        let kac = KacCrystal::new(rank, lam).unwrap();
        let elems = kac.enumerate();
        let x = &elems[pick.index(elems.len())];
        for k in rank.colors() {
            if let Some(y) = kac.apply(k, Dir::F, x) {
                prop_assert_eq!(kac.apply(k, Dir::E, &y), Some(x.clone()));
                prop_assert_eq!(kac.weight(&y), &kac.weight(x) - &k.simple_root(rank));
            }
        }
    }

    #[test]
    fn embedding_round_trips(sub in any::<prop::sample::Index>(), pick in any::<prop::sample::Index>()) {
        let rank = Rank::new(2, 2).unwrap();
        let shapes: Vec<Partition> = Partition::parse("3,3,2,2")
            .unwrap()
            .subpartitions()
            .into_iter()
            .filter(|p| !p.is_empty())
            .collect();
        let hook = &shapes[sub.index(shapes.len())];
        let emb = Embedding::new(rank, &hook_bijection(rank, hook).unwrap()).unwrap();
        let domain = emb.enumerate_domain();
        let t = &domain[pick.index(domain.len())];
        let b = emb.xi(t).unwrap();
        prop_assert_eq!(emb.target().weight(&b), emb.weight(t));
        prop_assert_eq!(emb.pi_bar(&b), Some(t.clone()));
    }

    #[test]
    fn tableau_json_round_trip(pick in any::<prop::sample::Index>()) {
        let rank = Rank::new(2, 2).unwrap();
        let all = enumerate_sst(rank, Alphabet::B, &SkewShape::straight(Partition::parse("3,2,1").unwrap()));
        let t = &all[pick.index(all.len())];
        let text = serde_json::to_string(&t.to_json()).unwrap();
        let back = Tableau::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(&back, t);
    }
}
