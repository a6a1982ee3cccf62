use braidcoh::cubes::{
    check_disjoint, compose_operad, point_m, verify_homotopy, CubeConfig, LittleCube, NamedPath, PathId,
};
use num_rational::Rational64;
use proptest::prelude::*;

/// A random valid configuration: cube `j` sits in the `j`-th slab of axis 0.
fn config(dim: usize, arity: usize) -> impl Strategy<Value = CubeConfig<Rational64>> {
    prop::collection::vec(prop::collection::vec((0i64..6, 1i64..=6), dim), arity).prop_map(move |raw| {
        let cubes = raw
            .iter()
            .enumerate()
            .map(|(j, axes)| {
                let intervals = axes
                    .iter()
                    .enumerate()
                    .map(|(axis, &(a, b))| {
                        let (lo, hi) = (a.min(b - 1), b.max(a + 1).min(6));
                        let (lo, hi) = (Rational64::new(lo, 6), Rational64::new(hi, 6));
                        if axis == 0 {
                            let k = Rational64::from_integer(arity as i64);
                            let j = Rational64::from_integer(j as i64);
                            ((j + lo) / k, (j + hi) / k)
                        } else {
                            (lo, hi)
                        }
                    })
                    .collect();
                LittleCube::new(intervals).unwrap()
            })
            .collect();
        CubeConfig::new(dim, cubes).unwrap()
    })
}

fn tower(dim: usize) -> impl Strategy<Value = (CubeConfig<Rational64>, Vec<CubeConfig<Rational64>>, Vec<Vec<CubeConfig<Rational64>>>)> {
    (1usize..=3).prop_flat_map(move |k| {
        prop::collection::vec(1usize..=3, k).prop_flat_map(move |ks| {
            let outer = config(dim, ks.len());
            let middles: Vec<_> = ks.iter().map(|&a| config(dim, a)).collect();
            let inners: Vec<_> = ks
                .iter()
                .map(|&a| {
                    prop::collection::vec(1usize..=3, a)
                        .prop_flat_map(move |ls| ls.into_iter().map(|l| config(dim, l)).collect::<Vec<_>>())
                })
                .collect();
            (outer, middles, inners)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn unit_laws(c in (1usize..=2, 1usize..=3).prop_flat_map(|(d, k)| config(d, k))) {
        prop_assert!(check_disjoint(&c));
        let d = c.dim();
        prop_assert_eq!(compose_operad(&CubeConfig::identity(d), &[c.clone()]).unwrap(), c.clone());
        let ids = vec![CubeConfig::identity(d); c.arity()];
        prop_assert_eq!(compose_operad(&c, &ids).unwrap(), c);
    }

    #[test]
    fn associativity((a, bs, cs) in (1usize..=2).prop_flat_map(tower)) {
        let left = compose_operad(&compose_operad(&a, &bs).unwrap(), &cs.concat()).unwrap();
        let inner: Vec<_> = bs.iter().zip(&cs).map(|(b, c)| compose_operad(b, c).unwrap()).collect();
        let right = compose_operad(&a, &inner).unwrap();
        prop_assert_eq!(left, right);
    }
}

#[test]
fn every_path_passes_at_grid_32() {
    for id in PathId::ALL {
        let r = verify_homotopy(&NamedPath::new(id), 32, 1e-9);
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn point_m_is_disjoint_in_every_dimension() {
    for d in 1..=4 {
        assert!(check_disjoint(&point_m(d)));
    }
}
