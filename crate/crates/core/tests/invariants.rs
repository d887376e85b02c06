use betti_core::chordal::{hvt_betti, realize_chordal};
use betti_core::fvector::{colex_complex, kk_valid, macaulay_rep};
use betti_core::homology::{hochster_betti, hochster_betti_with, HochsterOptions, HochsterRoute};
use betti_core::ideal::{complex_of_ideal, stanley_reisner_ideal};
use betti_core::suites::{random_chordal, random_complex, random_squarefree_ideal};
use betti_core::{Face, FieldSelector};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const QQ: FieldSelector = FieldSelector::Rationals;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cone_f_vector_identity(seed: u64, n in 1usize..7, t in 0usize..4) {
        let delta = random_complex(&mut rng(seed), n);
        let coned = delta.cone(t).unwrap().f_vector().unwrap();
        prop_assert_eq!(coned, delta.f_vector().unwrap().cone(t as u64));
    }

    #[test]
    fn stanley_reisner_round_trip(seed: u64, n in 1usize..8) {
        let delta = random_complex(&mut rng(seed), n);
        let ideal = stanley_reisner_ideal(&delta);
        prop_assert_eq!(complex_of_ideal(&ideal).unwrap(), delta);
    }

    #[test]
    fn colex_complexes_nest(seed: u64, n in 1usize..7, mask in 1u128..128) {
        let delta = random_complex(&mut rng(seed), n);
        let sub = delta.induced(Face::from_bits(mask));
        let (f, g) = (sub.f_vector().unwrap(), delta.f_vector().unwrap());
        prop_assert!(kk_valid(&f) && kk_valid(&g));
        let (small, big) = (colex_complex(&f).unwrap(), colex_complex(&g).unwrap());
        prop_assert!(small.faces().iter().all(|&face| big.contains(face)));
    }

    #[test]
    fn macaulay_round_trip(a in 1u64..100_000, i in 1u64..8) {
        let rep = macaulay_rep(a, i).unwrap();
        prop_assert_eq!(rep.value(), a);
        prop_assert!(rep.terms.windows(2).all(|w| w[0].0 > w[1].0 && w[0].1 == w[1].1 + 1));
        prop_assert!(rep.terms.iter().all(|&(a, k)| a >= k && k >= 1));
    }

    #[test]
    fn oracle_routes_agree(seed: u64, n in 1usize..9, gens in 1usize..7) {
        let ideal = random_squarefree_ideal(&mut rng(seed), n, gens);
        let direct = HochsterOptions { route: HochsterRoute::Direct, ..Default::default() };
        prop_assert_eq!(
            hochster_betti_with(&ideal, QQ, &direct).unwrap(),
            hochster_betti(&ideal, QQ).unwrap()
        );
    }

    #[test]
    fn chordal_realization_matches_oracle(seed: u64, n in 2usize..10) {
        let g = random_chordal(&mut rng(seed), n);
        let beta = hvt_betti(&g).unwrap();
        prop_assert_eq!(&beta, &hochster_betti(&g.edge_ideal(), QQ).unwrap());
        if g.num_edges() > 0 {
            let c = realize_chordal(&g).unwrap();
            prop_assert!(c.is_downward_closed());
            prop_assert_eq!(c.f_vector().unwrap().into_entries(), beta.into_entries());
        }
    }
}
