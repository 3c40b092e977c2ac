use proptest::prelude::*;

use tract_matroid::flats::{check_lf_axioms, gp_from_lattice, lattice_of_t_flats};
use tract_matroid::gp::{tropicalize, GpFunction};
use tract_matroid::json::{gp_from_json, gp_to_json};
use tract_matroid::linalg;
use tract_matroid::pointline::{check_pl, gp_from_pointline, psi};
use tract_matroid::random::{random_integer_matrix, seeded};
use tract_matroid::tract::FieldTract;
use tract_matroid::{PrimeField, RationalField};

fn gf3_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=3, 3usize..=5)
        .prop_flat_map(|(r, n)| prop::collection::vec(prop::collection::vec(0i64..3, n), r))
}

fn gf3_function(m: &[Vec<i64>]) -> Option<GpFunction<PrimeField>> {
    let f = PrimeField::new(3).unwrap();
    let rows: Vec<Vec<_>> = m.iter().map(|r| r.iter().map(|&a| f.from_i64(a)).collect()).collect();
    if linalg::rank(&f, &rows) < rows.len() {
        return None;
    }
    Some(GpFunction::from_matrix(f, &rows).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dual_is_an_involution(m in gf3_matrix()) {
        if let Some(phi) = gf3_function(&m) {
            let back = phi.dual().dual();
            prop_assert!(back.projectively_equal(&phi));
            prop_assert_eq!(phi.dual().rank(), phi.n() - phi.rank());
        }
    }

    #[test]
    fn lattice_round_trip(m in gf3_matrix()) {
        if let Some(phi) = gf3_function(&m) {
            let collection = lattice_of_t_flats(&phi).unwrap().to_explicit().unwrap();
            check_lf_axioms(&collection).unwrap();
            prop_assert!(gp_from_lattice(&collection).unwrap().projectively_equal(&phi));
        }
    }

    #[test]
    fn pointline_round_trip(m in gf3_matrix()) {
        if let Some(phi) = gf3_function(&m) {
            if phi.rank() >= 2 {
                let a = psi(&phi).unwrap();
                prop_assert_eq!(&check_pl(&a).unwrap(), phi.underlying_matroid());
                prop_assert!(gp_from_pointline(&a).unwrap().projectively_equal(&phi));
            }
        }
    }

    #[test]
    fn json_round_trip(m in gf3_matrix()) {
        if let Some(phi) = gf3_function(&m) {
            let back = gp_from_json(phi.tract(), &gp_to_json(&phi)).unwrap();
            prop_assert_eq!(back.values(), phi.values());
        }
    }

    #[test]
    fn tropicalization_is_a_tropical_function(seed in any::<u64>(), q in prop::sample::select(vec![2u64, 3, 5])) {
        let q_field = RationalField::new();
        let m = random_integer_matrix(2, 4, 6, &mut seeded(seed));
        let rows: Vec<Vec<_>> = m.iter().map(|r| r.iter().map(|&a| q_field.from_i64(a)).collect()).collect();
        let phi = GpFunction::from_matrix(q_field, &rows).unwrap();
        let trop = tropicalize(q, &phi).unwrap();
        prop_assert_eq!(trop.underlying_matroid(), phi.underlying_matroid());
    }
}
