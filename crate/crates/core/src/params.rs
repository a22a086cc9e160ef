//! Derived constants of the reduction and the size gate.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{as_string, one_plus, Scalar};

/// Where `d`, `lambda` and `t` come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Profile {
    /// Constants derived from `eps`; the `1 + eps` guarantee applies.
    Paper,
    /// Caller-supplied constants; the guarantee is void.
    Custom { d: u64, lambda: u64, t: u64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct Params<S: Scalar> {
    pub eta: usize,
    #[serde(with = "as_string")]
    pub eps: S,
    pub k: usize,
    #[serde(with = "as_string")]
    pub delta: S,
    pub d: u64,
    pub lambda: u64,
    pub t: u64,
    pub profile: Profile,
    /// Whether small inputs are passed through unchanged. Always on for the
    /// default profile; off by default for custom constants, where the
    /// threshold would swallow every desk-scale instance.
    pub size_gate: bool,
}

fn pow2(exp: u64) -> u64 {
    if exp >= 64 {
        u64::MAX
    } else {
        1u64 << exp
    }
}

impl<S: Scalar> Params<S> {
    pub fn paper(eta: usize, eps: S, k: usize) -> Result<Self> {
        if eta == 0 {
            return Err(Error::Params("eta must be at least 1".into()));
        }
        if eps <= S::zero() || eps > S::one() {
            return Err(Error::Params(format!("eps must lie in (0, 1], got {eps}")));
        }
        let delta = eps.clone() / S::of_u64(10);
        let eta64 = eta as u64;
        let two_eta = pow2(eta64);
        let d = (S::of_u64(pow2(eta64 + 3).saturating_mul(eta64)) / delta.clone()).ceil_u64();
        let lambda_core = (S::of_u64(d.saturating_add(2 * eta64)) / delta.clone()).ceil_u64();
        let lambda = two_eta.saturating_mul(lambda_core);
        let t = pow2((S::one() / delta.clone()).ceil_u64());
        Ok(Self { eta, eps, k, delta, d, lambda, t, profile: Profile::Paper, size_gate: true })
    }

    /// Caller-chosen `d`, `lambda`, `t`; needs `d >= 1` and `t >= 2` so the
    /// effective error stays finite.
    pub fn custom(eta: usize, eps: S, k: usize, d: u64, lambda: u64, t: u64) -> Result<Self> {
        if eta == 0 {
            return Err(Error::Params("eta must be at least 1".into()));
        }
        if eps <= S::zero() {
            return Err(Error::Params(format!("eps must be positive, got {eps}")));
        }
        if d == 0 || t < 2 {
            return Err(Error::Params("custom constants need d >= 1 and t >= 2".into()));
        }
        let delta = eps.clone() / S::of_u64(10);
        Ok(Self {
            eta,
            eps,
            k,
            delta,
            d,
            lambda,
            t,
            profile: Profile::Custom { d, lambda, t },
            size_gate: false,
        })
    }

    pub fn with_size_gate(mut self, on: bool) -> Self {
        self.size_gate = on;
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = k;
        self
    }

    pub fn guarantee_void(&self) -> bool {
        matches!(self.profile, Profile::Custom { .. })
    }

    /// Largest Steiner tree (in vertices) kept by the connector harvest.
    pub fn budget(&self) -> usize {
        (one_plus(&self.delta) * S::of_u64(self.k as u64)).floor_u64() as usize
    }

    /// Rule 2 fires when a component sees more than this many unforced
    /// vertices of `X`.
    pub fn rule2_threshold(&self) -> usize {
        usize_of(self.d.saturating_add(self.eta as u64))
    }

    /// Components kept per class by Rules 3 and 4: `lambda + eta + 1`.
    pub fn keep(&self) -> usize {
        usize_of(self.lambda.saturating_add(self.eta as u64 + 1))
    }

    pub fn d_usize(&self) -> usize {
        usize_of(self.d)
    }

    pub fn lambda_usize(&self) -> usize {
        usize_of(self.lambda)
    }

    pub fn t_usize(&self) -> usize {
        usize_of(self.t)
    }

    pub fn two_pow_eta(&self) -> usize {
        usize_of(pow2(self.eta as u64))
    }

    /// Smallest error the proofs certify for these constants:
    /// `max(eta 2^eta / d, (d + 2 eta) 2^eta / (lambda + 1), 1 / floor(log2 t))`.
    pub fn delta_eff(&self) -> S {
        let eta = self.eta as u64;
        let two_eta = pow2(eta);
        let a = S::of_u64(eta.saturating_mul(two_eta)) / S::of_u64(self.d.max(1));
        let b = S::of_u64(self.d.saturating_add(2 * eta).saturating_mul(two_eta))
            / S::of_u64(self.lambda.saturating_add(1));
        let log_t = 63 - self.t.max(2).leading_zeros() as u64;
        let c = S::one() / S::of_u64(log_t);
        a.max_of(b).max_of(c)
    }

    /// `(1 + delta_eff)^4`, the end-to-end ratio certified by the proofs.
    pub fn ratio_bound(&self) -> S {
        one_plus(&self.delta_eff()).pow_u32(4)
    }

    /// Whether an instance on `n` vertices is small enough to be output
    /// unchanged: `n <= 2^(3 eta^2 + d eta) (lambda + eta + 1)^(eta + 1)
    /// (1 + delta) k^((3d + 6 eta) t + 1)`. Evaluated exactly.
    pub fn within_size_threshold(&self, n: usize) -> bool {
        let eta = self.eta as u64;
        if self.k == 0 {
            return n == 0;
        }
        let two_exp = (3 * eta).saturating_mul(eta).saturating_add(self.d.saturating_mul(eta));
        let k_exp = self
            .d
            .saturating_mul(3)
            .saturating_add(6 * eta)
            .saturating_mul(self.t)
            .saturating_add(1);
        // Every factor is at least 1, so one factor of 2^64 already exceeds
        // any usize.
        if two_exp >= 64 || (self.k >= 2 && k_exp >= 64) {
            return true;
        }
        let mut a = BigUint::from(1u8) << two_exp;
        a *= (BigUint::from(self.lambda) + BigUint::from(eta + 1)).pow(eta as u32 + 1);
        if self.k >= 2 {
            a *= BigUint::from(self.k).pow(k_exp as u32);
        }
        let n_big = BigUint::from(n);
        if a >= n_big {
            return true;
        }
        // a < n fits in u64 here; compare delta >= (n - a) / a.
        let a64: u64 = a.try_into().expect("below n");
        let gap = n as u64 - a64;
        self.delta >= S::ratio(gap, a64)
    }

    /// Whether the size gate passes this instance through unchanged.
    pub fn passes_through(&self, n: usize) -> bool {
        self.size_gate && self.within_size_threshold(n)
    }
}

fn usize_of(v: u64) -> usize {
    usize::try_from(v).unwrap_or(usize::MAX)
}

/// Convenience constructor matching the CLI flags.
pub fn derive_params<S: Scalar>(eta: usize, eps: S, k: usize, profile: Profile) -> Result<Params<S>> {
    match profile {
        Profile::Paper => Params::paper(eta, eps, k),
        Profile::Custom { d, lambda, t } => Params::custom(eta, eps, k, d, lambda, t),
    }
}

impl<S: Scalar> fmt::Display for Params<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let profile = match self.profile {
            Profile::Paper => "paper",
            Profile::Custom { .. } => "custom (guarantee void)",
        };
        write!(
            f,
            "eta={} eps={} k={} delta={} d={} lambda={} t={} profile={}",
            self.eta, self.eps, self.k, self.delta, self.d, self.lambda, self.t, profile
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn rat(text: &str) -> Rational {
        Rational::parse_scalar(text).unwrap()
    }

    #[test]
    fn default_constants_eta1_eps1() {
        let p = Params::paper(1, rat("1"), 3).unwrap();
        assert_eq!(p.delta, rat("1/10"));
        assert_eq!((p.d, p.lambda, p.t), (160, 3240, 1024));
        assert!(!p.guarantee_void());
    }

    #[test]
    fn default_constants_eta2_eps_half() {
        let p = Params::paper(2, rat("0.5"), 3).unwrap();
        assert_eq!(p.delta, rat("0.05"));
        assert_eq!((p.d, p.lambda, p.t), (1280, 102720, 1 << 20));
    }

    #[test]
    fn float_backend_agrees_on_constants() {
        let p = Params::paper(1, 1.0f64, 3).unwrap();
        assert_eq!((p.d, p.lambda, p.t), (160, 3240, 1024));
    }

    #[test]
    fn eps_range_checked() {
        assert!(Params::paper(1, rat("0"), 1).is_err());
        assert!(Params::paper(1, rat("3/2"), 1).is_err());
        assert!(Params::paper(0, rat("1"), 1).is_err());
        assert!(Params::custom(1, rat("1"), 1, 0, 1, 2).is_err());
    }

    #[test]
    fn custom_profile_echoes() {
        let p = Params::custom(1, rat("1"), 2, 2, 3, 2).unwrap();
        assert_eq!((p.d, p.lambda, p.t), (2, 3, 2));
        assert!(p.guarantee_void());
        assert!(p.to_string().contains("guarantee void"));
        assert!(!p.size_gate);
    }

    #[test]
    fn budget_and_thresholds() {
        let p = Params::custom(1, rat("1"), 5, 2, 2, 2).unwrap();
        assert_eq!(p.budget(), 5); // floor(1.1 * 5)
        assert_eq!(p.with_k(10).budget(), 11);
        let p = Params::custom(2, rat("1"), 5, 2, 2, 2).unwrap();
        assert_eq!(p.rule2_threshold(), 4);
        assert_eq!(p.keep(), 5);
    }

    #[test]
    fn delta_eff_for_small_constants() {
        // max(1*2/2, (2+2)*2/3, 1/1) = 8/3
        let p = Params::custom(1, rat("1"), 2, 2, 2, 2).unwrap();
        assert_eq!(p.delta_eff(), rat("8/3"));
        assert_eq!(p.ratio_bound(), rat("11/3").pow_u32(4));
    }

    #[test]
    fn size_gate_default_profile_passes_everything() {
        let p = Params::paper(1, rat("1"), 3).unwrap();
        assert!(p.passes_through(1_000_000));
        assert!(p.with_k(0).passes_through(0));
        assert!(!Params::paper(1, rat("1"), 0).unwrap().passes_through(1));
    }

    #[test]
    fn size_gate_custom_formula() {
        // 2^5 * 5^2 * 1.1 * 2^25 for d=2, lambda=3, t=2, eta=1, k=2
        let p = Params::custom(1, rat("1"), 2, 2, 3, 2).unwrap();
        let base: u64 = 32 * 25 * (1 << 25);
        assert!(p.within_size_threshold(base as usize));
        assert!(p.within_size_threshold((base + base / 10) as usize));
        assert!(!p.within_size_threshold((base + base / 10 + 1) as usize));
        // disabled by default for custom constants
        assert!(!p.passes_through(10));
        assert!(p.clone().with_size_gate(true).passes_through(10));
    }

    #[test]
    fn serde_round_trip_keeps_exact_scalars() {
        let p = Params::custom(2, rat("1/3"), 4, 2, 2, 2).unwrap();
        let text = serde_json::to_string(&p).unwrap();
        assert!(text.contains("\"1/3\""), "{text}");
        let back: Params<Rational> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }
}
