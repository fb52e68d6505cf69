//! Necessary conditions on parameters for nestings and perfect nestings.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BibdConditions {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub r: u64,
    pub b: u64,
    /// `k >= 2λ+1`.
    pub nestable_possible: bool,
    /// `k = 2λ+1` and `v ≡ 1 mod 2k`.
    pub perfect_possible: bool,
    /// Replication of the augmented BIBD, when perfect.
    pub r_augmented: Option<u64>,
    /// `r' - r = (v-1)/(2k)`: how often each point is a nested point.
    pub nested_per_point: Option<u64>,
    pub reasons: Vec<String>,
}

pub fn bibd_nesting_conditions(v: u64, k: u64, lambda: u64) -> Result<BibdConditions> {
    if k < 2 || v < k || lambda == 0 {
        return Err(Error::InvalidInput(format!("({v},{k},{lambda}) are not BIBD parameters")));
    }
    if !(lambda * (v - 1)).is_multiple_of(k - 1) {
        return Err(Error::InvalidInput(format!("r = {lambda}({v}-1)/({k}-1) is not an integer")));
    }
    if !(lambda * v * (v - 1)).is_multiple_of(k * (k - 1)) {
        return Err(Error::InvalidInput(format!("b = {lambda}·{v}·({v}-1)/({k}·({k}-1)) is not an integer")));
    }
    let r = lambda * (v - 1) / (k - 1);
    let b = lambda * v * (v - 1) / (k * (k - 1));
    let mut reasons = Vec::new();
    let nestable = k > 2 * lambda;
    if !nestable {
        reasons.push(format!("k = {k} < 2λ+1 = {}: the augmented blocks would need too many pairs", 2 * lambda + 1));
    }
    let mut perfect = nestable && k == 2 * lambda + 1;
    if nestable && !perfect {
        reasons.push(format!("k = {k} != 2λ+1 = {}, so no nesting is perfect", 2 * lambda + 1));
    }
    if perfect && !(v - 1).is_multiple_of(2 * k) {
        reasons.push(format!("v = {v} is not 1 mod 2k = {}", 2 * k));
        perfect = false;
    }
    let (r_aug, per_point) = if perfect {
        let r2 = (lambda + 1) * (v - 1) / k;
        (Some(r2), Some(r2 - r))
    } else {
        (None, None)
    };
    Ok(BibdConditions {
        v,
        k,
        lambda,
        r,
        b,
        nestable_possible: nestable,
        perfect_possible: perfect,
        r_augmented: r_aug,
        nested_per_point: per_point,
        reasons,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: &'static str,
    pub statement: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GddConditions {
    pub conditions: Vec<Condition>,
    /// Integrality of `r` and `b` for the GDD itself.
    pub gdd_possible: bool,
    /// The GDD conditions plus `k >= 2λ+1` and `u >= k+1`.
    pub nestable_possible: bool,
    /// `k = 2λ+1`, `u >= k+1` and every congruence for the augmented GDD.
    pub perfect_possible: bool,
    /// For `(4,1)`-GDDs of type `3^u`: the equivalent form `u ≡ 0,1 mod 4`.
    pub type3_k4_feasible: Option<bool>,
    /// Names of the conditions that fail.
    pub violated: Vec<&'static str>,
}

pub fn gdd_nesting_conditions(k: u64, lambda: u64, t: u64, u: u64) -> Result<GddConditions> {
    if t == 0 || u == 0 || k < 2 || lambda == 0 {
        return Err(Error::InvalidInput("need k >= 2, λ >= 1, t >= 1, u >= 1".into()));
    }
    let m = u - 1;
    let cond = |name, statement: String, holds| Condition { name, statement, holds };
    let conditions = vec![
        cond("r-integral", format!("λt(u-1) = {} ≡ 0 mod k-1 = {}", lambda * t * m, k - 1), (lambda * t * m).is_multiple_of(k - 1)),
        cond(
            "b-integral",
            format!("λt²u(u-1) = {} ≡ 0 mod k(k-1) = {}", lambda * t * t * u * m, k * (k - 1)),
            (lambda * t * t * u * m).is_multiple_of(k * (k - 1)),
        ),
        cond(
            "augmented-r-integral",
            format!("(λ+1)t(u-1) = {} ≡ 0 mod k = {k}", (lambda + 1) * t * m),
            ((lambda + 1) * t * m).is_multiple_of(k),
        ),
        cond(
            "augmented-b-integral",
            format!("(λ+1)t²u(u-1) = {} ≡ 0 mod (k+1)k = {}", (lambda + 1) * t * t * u * m, (k + 1) * k),
            ((lambda + 1) * t * t * u * m).is_multiple_of((k + 1) * k),
        ),
        cond("nested-multiplicity-integral", format!("t(u-1) = {} ≡ 0 mod 2k = {}", t * m, 2 * k), (t * m).is_multiple_of(2 * k)),
        cond("k-equals-2-lambda-plus-1", format!("k = {k}, 2λ+1 = {}", 2 * lambda + 1), k == 2 * lambda + 1),
        cond("enough-groups", format!("u = {u} >= k+1 = {}", k + 1), u > k),
    ];
    let holds = |name: &str| conditions.iter().any(|c| c.name == name && c.holds);
    let gdd_possible = holds("r-integral") && holds("b-integral");
    let nestable = gdd_possible && k > 2 * lambda && holds("enough-groups");
    let perfect = holds("r-integral")
        && conditions[2..].iter().all(|c| c.holds);
    let type3 = (k == 4 && lambda == 1 && t == 3).then_some(u.is_multiple_of(4) || u % 4 == 1);
    let violated = conditions.iter().filter(|c| !c.holds).map(|c| c.name).collect();
    Ok(GddConditions {
        conditions,
        gdd_possible,
        nestable_possible: nestable,
        perfect_possible: perfect,
        type3_k4_feasible: type3,
        violated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bibd_examples() {
        let c = bibd_nesting_conditions(9, 2, 1).unwrap();
        assert!(!c.nestable_possible);
        let c = bibd_nesting_conditions(13, 3, 1).unwrap();
        assert!(c.perfect_possible);
        assert_eq!(c.nested_per_point, Some(2));
        let c = bibd_nesting_conditions(16, 4, 1).unwrap();
        assert!(c.nestable_possible && !c.perfect_possible);
        assert!(bibd_nesting_conditions(10, 4, 1).is_err());
    }

    #[test]
    fn gdd_examples() {
        let c = gdd_nesting_conditions(3, 1, 3, 7).unwrap();
        assert!(c.perfect_possible, "{:?}", c.violated);
        for u in 2..40 {
            let c = gdd_nesting_conditions(4, 1, 3, u).unwrap();
            assert_eq!(c.type3_k4_feasible, Some(c.gdd_possible));
            assert_eq!(c.gdd_possible, u % 4 <= 1);
        }
        let c = gdd_nesting_conditions(4, 1, 3, 6).unwrap();
        assert!(!c.gdd_possible);
        assert!(c.violated.contains(&"b-integral"));
    }

    #[test]
    fn perfect_bibd_parameters_match_brute_force() {
        // A perfect nesting needs k = 2λ+1 and integral r' - r.
        for v in 3..80u64 {
            for k in 2..8u64 {
                for lambda in 1..4u64 {
                    if let Ok(c) = bibd_nesting_conditions(v, k, lambda) {
                        let r2_num = (lambda + 1) * (v - 1);
                        let brute = k == 2 * lambda + 1 && r2_num % k == 0 && (r2_num / k - c.r) * 2 * k == v - 1;
                        assert_eq!(c.perfect_possible, brute, "({v},{k},{lambda})");
                    }
                }
            }
        }
    }
}
