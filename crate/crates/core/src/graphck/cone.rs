//! Positive cones of the ordered `K_0` groups, as explicit coordinate case
//! lists, and the exhaustive order-isomorphism check between the total-space
//! algebra and its graph model.

/// Which ordered `K_0` group a coordinate vector lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cone {
    /// `C*(G)`, the four-vertex graph of the total space; coordinates are
    /// `[1]_0, [p2+p3+p4]_0, [p3+p4]_0, [p4]_0`.
    GraphG,
    /// `C*(F)`, the three-vertex quotient graph; coordinates are
    /// `[1]_0, [p2+p3]_0, [p3]_0`.
    GraphF,
    /// The total space, with coordinates the lifted quotient generators plus
    /// the class of the minimal compact projection.
    TotalSpace,
}

/// Positivity of `(n1, n2, n3, n4)` in `K_0(C*(G))`: one of
/// (1) all coordinates nonnegative; (2) `n1 >= 1`;
/// (3) `n1 >= 0, n2 >= 1`; (4) `n1, n2 >= 0, n3 >= 1`.
pub fn positive_in_g(v: [i64; 4]) -> bool {
    let [n1, n2, n3, n4] = v;
    (n1 >= 0 && n2 >= 0 && n3 >= 0 && n4 >= 0)
        || (n1 >= 1)
        || (n1 >= 0 && n2 >= 1)
        || (n1 >= 0 && n2 >= 0 && n3 >= 1)
}

/// Positivity of `(n1, n2, n3)` in `K_0(C*(F))`: one of
/// (1) all nonnegative; (2) `n1 >= 1`; (3) `n1 >= 0, n2 >= 1`.
pub fn positive_in_f(v: [i64; 3]) -> bool {
    let [n1, n2, n3] = v;
    (n1 >= 0 && n2 >= 0 && n3 >= 0) || (n1 >= 1) || (n1 >= 0 && n2 >= 1)
}

/// Positivity in `K_0` of the total space: the quotient part must be a
/// nonzero positive class of `C*(F)` (the compact coordinate is then free to
/// move), or everything is concentrated in the compacts, where positivity is
/// ordinary.
pub fn positive_in_total_space(v: [i64; 4]) -> bool {
    let [n1, n2, n3, n4] = v;
    if (n1, n2, n3) == (0, 0, 0) {
        n4 >= 0
    } else {
        positive_in_f([n1, n2, n3])
    }
}

/// Positivity predicate dispatch.
pub fn positive_cone(cone: Cone, v: &[i64]) -> Result<bool, super::GraphError> {
    match cone {
        Cone::GraphG => {
            let v: [i64; 4] =
                v.try_into().map_err(|_| super::GraphError::ArityMismatch(4, v.len()))?;
            Ok(positive_in_g(v))
        }
        Cone::TotalSpace => {
            let v: [i64; 4] =
                v.try_into().map_err(|_| super::GraphError::ArityMismatch(4, v.len()))?;
            Ok(positive_in_total_space(v))
        }
        Cone::GraphF => {
            let v: [i64; 3] =
                v.try_into().map_err(|_| super::GraphError::ArityMismatch(3, v.len()))?;
            Ok(positive_in_f(v))
        }
    }
}

/// Exhaustively compares the cones of the total space and of `C*(G)` on the
/// box `[-bound, bound]^4` and checks that the unit maps to the unit.
pub fn order_iso_check(bound: i64) -> bool {
    assert!(bound >= 1);
    if !(positive_in_g([1, 0, 0, 0]) && positive_in_total_space([1, 0, 0, 0])) {
        return false;
    }
    for n1 in -bound..=bound {
        for n2 in -bound..=bound {
            for n3 in -bound..=bound {
                for n4 in -bound..=bound {
                    let v = [n1, n2, n3, n4];
                    if positive_in_g(v) != positive_in_total_space(v) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn printed_cases() {
        assert!(positive_in_g([1, -5, 7, -2]));
        assert!(!positive_in_g([0, 0, 0, -1]));
        assert!(positive_in_g([0, 0, 0, 0]));
        assert!(positive_in_f([0, 1, -3]));
        assert!(!positive_in_f([0, 0, -1]));
        assert!(!positive_in_total_space([0, 0, 0, -1]));
        assert!(positive_in_total_space([0, 0, 1, -5]));
    }

    #[test]
    fn arity_is_enforced() {
        assert!(positive_cone(Cone::GraphF, &[1, 2, 3, 4]).is_err());
        assert!(positive_cone(Cone::GraphG, &[1, 2, 3]).is_err());
        assert_eq!(positive_cone(Cone::GraphG, &[1, 2, 3, 4]).unwrap(), true);
    }

    #[test]
    fn cones_agree_on_a_box() {
        assert!(order_iso_check(4));
    }

    #[test]
    fn cone_is_closed_under_addition_on_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut tried = 0;
        while tried < 2000 {
            let a: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-6..=6));
            let b: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-6..=6));
            if !(positive_in_g(a) && positive_in_g(b)) {
                continue;
            }
            tried += 1;
            let sum = [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]];
            assert!(positive_in_g(sum), "{:?} + {:?}", a, b);
        }
    }
}
