use serde::Serialize;

use super::eval::{eval_expr, Env, EvalTarget};
use super::expr::WordExpr;
use crate::error::{Error, Result};

/// `x a x^-1 a x a^-1 x^-1 a^-1`
pub const CONJUGATE_IDENTITY: &str = "?x*a*?x^-1*a*?x*a^-1*?x^-1*a^-1";
/// `x^6 y^6 x^-6 y^-6`, the commutator of sixth powers.
pub const SIXTH_POWER_COMMUTATOR: &str = "?x^6*?y^6*?x^-6*?y^-6";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    HoldsOnSample { trials: usize },
    Counterexample { trial: usize, assignment: Vec<(String, String)>, value: String },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::HoldsOnSample { .. })
    }
}

/// Evaluates `e` on `trials` assignments drawn from `sampler`, stopping at the
/// first one where the value is not the identity.
pub fn check_identity<T, F>(e: &WordExpr, target: &T, mut sampler: F, trials: usize) -> Result<Verdict>
where
    T: EvalTarget,
    F: FnMut(usize) -> Env<T::Value>,
{
    if trials == 0 {
        return Err(Error::Config("at least one trial is required".into()));
    }
    for trial in 0..trials {
        let env = sampler(trial);
        let value = eval_expr(e, target, &env)?;
        if !target.is_identity(&value)? {
            let assignment = env
                .vars
                .iter()
                .map(|(k, v)| (format!("?{k}"), target.render(v)))
                .chain(env.consts.iter().map(|(k, v)| (k.clone(), target.render(v))))
                .collect();
            return Ok(Verdict::Counterexample { trial, assignment, value: target.render(&value) });
        }
    }
    Ok(Verdict::HoldsOnSample { trials })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_group::ReducedWord;
    use crate::identities::eval::{FreeGroupTarget, S3Target};
    use crate::parse::parse_expr;
    use crate::subgroups::Permutation;

    #[test]
    fn conjugate_identity_on_commuting_sample() {
        let e = parse_expr(CONJUGATE_IDENTITY).unwrap();
        let r = ReducedWord::from_pairs([(1, 1), (2, -1)]);
        let v = check_identity(
            &e,
            &FreeGroupTarget,
            |t| Env::new().with_const("a", r.power(2)).with_var("x", r.power(t as i64 - 3)),
            7,
        )
        .unwrap();
        assert_eq!(v, Verdict::HoldsOnSample { trials: 7 });
    }

    #[test]
    fn conjugate_identity_on_free_sample() {
        let e = parse_expr(CONJUGATE_IDENTITY).unwrap();
        let v = check_identity(
            &e,
            &FreeGroupTarget,
            |_| Env::new().with_const("a", ReducedWord::generator(1)).with_var("x", ReducedWord::generator(2)),
            1,
        )
        .unwrap();
        assert!(matches!(v, Verdict::Counterexample { trial: 0, .. }));
    }

    #[test]
    fn sixth_powers_commute_in_s3() {
        let e = parse_expr(SIXTH_POWER_COMMUTATOR).unwrap();
        let all = Permutation::all();
        let v = check_identity(
            &e,
            &S3Target::default(),
            |t| Env::new().with_var("x", all[t / 6]).with_var("y", all[t % 6]),
            36,
        )
        .unwrap();
        assert!(v.holds());
        let cube = parse_expr("?x^3*?y^3*?x^-3*?y^-3").unwrap();
        let v = check_identity(
            &cube,
            &S3Target::default(),
            |t| Env::new().with_var("x", all[t / 6]).with_var("y", all[t % 6]),
            36,
        )
        .unwrap();
        assert!(!v.holds());
    }
}
