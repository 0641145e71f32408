//! Effective angular parameter β_ℓ, bound-state energies, and the inverse
//! length ξ in both sign conventions.

use crate::error::{Error, Result};
use crate::model::{PhysicalConstants, PotentialParams};

/// Everything derived from (potential, μ, n, ℓ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralContext {
    pub n: u32,
    pub ell: u32,
    /// Positive root of β(β+1) = 2μb/(ħc)² + ℓ(ℓ+1).
    pub beta: f64,
    /// α = n + β + 1, the polynomial-termination parameter.
    pub alpha_quant: f64,
    /// 2μa/((ħc)²(n+β+1)); negative. The sign convention the published
    /// matrix-element tables are built with.
    pub xi_printed: f64,
    /// −xi_printed; the positive scale in ρ = ξr that normalizable
    /// wavefunctions require.
    pub xi_physical: f64,
    /// eV.
    pub energy: f64,
    /// γ = ξ², Å⁻².
    pub gamma_scale: f64,
}

pub fn beta_ell(p: &PotentialParams, mu_ev: f64, ell: u32, k: &PhysicalConstants) -> Result<f64> {
    let hb2 = k.hbar_c * k.hbar_c;
    let t = (2 * ell + 1) as f64;
    let disc = t * t + 8.0 * mu_ev * p.b / hb2;
    if disc < 0.0 {
        return Err(Error::NegativeDiscriminant { ell, b: p.b, disc });
    }
    Ok(0.5 * (-1.0 + disc.sqrt()))
}

pub fn energy(
    p: &PotentialParams,
    mu_ev: f64,
    n: u32,
    ell: u32,
    k: &PhysicalConstants,
) -> Result<f64> {
    if p.a >= 0.0 {
        return Err(Error::Continuum { a: p.a });
    }
    let beta = beta_ell(p, mu_ev, ell, k)?;
    let denom = n as f64 + beta + 1.0;
    Ok(-mu_ev * p.a * p.a / (2.0 * k.hbar_c * k.hbar_c * denom * denom) + p.c)
}

pub fn spectral_context(
    p: &PotentialParams,
    mu_ev: f64,
    n: u32,
    ell: u32,
    k: &PhysicalConstants,
) -> Result<SpectralContext> {
    if p.a >= 0.0 {
        return Err(Error::Continuum { a: p.a });
    }
    let beta = beta_ell(p, mu_ev, ell, k)?;
    let alpha_quant = n as f64 + beta + 1.0;
    let hb2 = k.hbar_c * k.hbar_c;
    let xi_printed = 2.0 * mu_ev * p.a / (hb2 * alpha_quant);
    let xi_physical = -xi_printed;
    let energy = -mu_ev * p.a * p.a / (2.0 * hb2 * alpha_quant * alpha_quant) + p.c;
    Ok(SpectralContext {
        n,
        ell,
        beta,
        alpha_quant,
        xi_printed,
        xi_physical,
        energy,
        gamma_scale: xi_physical * xi_physical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{
        builtin_molecules, kratzer_params, modified_kratzer_params, mu_energy, MoleculeSpec,
    };

    fn co() -> MoleculeSpec {
        builtin_molecules()
            .into_iter()
            .find(|m| m.name == "CO")
            .unwrap()
    }
    fn no() -> MoleculeSpec {
        builtin_molecules()
            .into_iter()
            .find(|m| m.name == "NO")
            .unwrap()
    }

    /// Independent root-finder for β(β+1) = rhs on [0, hi].
    fn bisect_beta(rhs: f64) -> f64 {
        let f = |b: f64| b * (b + 1.0) - rhs;
        let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
        while f(hi) < 0.0 {
            hi *= 2.0;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn beta_collapses_to_ell_when_b_is_zero() {
        let k = PhysicalConstants::default();
        let p = PotentialParams {
            a: -1.0,
            b: 0.0,
            c: 0.0,
        };
        for ell in [0u32, 1, 2, 3, 7] {
            assert_eq!(beta_ell(&p, 1.0e9, ell, &k).unwrap(), ell as f64);
        }
    }

    #[test]
    fn beta_matches_bisection_oracle() {
        let k = PhysicalConstants::default();
        let m = co();
        let p = kratzer_params(&m);
        let mu = mu_energy(&m, &k);
        let beta0 = beta_ell(&p, mu, 0, &k).unwrap();
        // frozen oracle outputs
        assert!((beta0 - 212.362763342281).abs() < 1e-9);
        let rhs0 = 2.0 * mu * p.b / (k.hbar_c * k.hbar_c);
        assert!((rhs0 - 45310.306017711926).abs() < 1e-6);
        assert!((bisect_beta(rhs0) - beta0).abs() < 1e-9);

        let beta3 = beta_ell(&p, mu, 3, &k).unwrap();
        assert!((beta3 - 212.39094865144438).abs() < 1e-9);
        let rhs3 = rhs0 + 12.0;
        assert!((bisect_beta(rhs3) - beta3).abs() < 1e-9);

        let mno = no();
        let pno = kratzer_params(&mno);
        let muno = mu_energy(&mno, &k);
        let bno = beta_ell(&pno, muno, 0, &k).unwrap();
        assert!((bno - 194.60146846505754).abs() < 1e-9);
    }

    #[test]
    fn beta_satisfies_defining_quadratic() {
        let k = PhysicalConstants::default();
        for m in builtin_molecules() {
            let p = kratzer_params(&m);
            let mu = mu_energy(&m, &k);
            for ell in 0..=10u32 {
                let beta = beta_ell(&p, mu, ell, &k).unwrap();
                let lhs = beta * (beta + 1.0);
                let rhs = 2.0 * mu * p.b / (k.hbar_c * k.hbar_c) + (ell * (ell + 1)) as f64;
                assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs());
            }
        }
    }

    #[test]
    fn beta_rejects_negative_discriminant() {
        let k = PhysicalConstants::default();
        let p = PotentialParams {
            a: -1.0,
            b: -1.0,
            c: 0.0,
        };
        let err = beta_ell(&p, 1.0e9, 0, &k).unwrap_err();
        assert!(err.to_string().contains("b = -1"));
    }

    #[test]
    fn frozen_energies() {
        let k = PhysicalConstants::default();
        let m = co();
        let mu = mu_energy(&m, &k);
        let p = kratzer_params(&m);
        assert!((energy(&p, mu, 0, 0, &k).unwrap() - (-10.794315106276681)).abs() < 1e-12);
        assert!((energy(&p, mu, 5, 5, &k).unwrap() - (-10.298997965390498)).abs() < 1e-12);
        let pm = modified_kratzer_params(&m);
        assert!((energy(&pm, mu, 0, 0, &k).unwrap() - 0.050829603723318684).abs() < 1e-12);

        let mno = no();
        let muno = mu_energy(&mno, &k);
        let pno = kratzer_params(&mno);
        assert!((energy(&pno, muno, 5, 5, &k).unwrap() - (-7.60286996209406)).abs() < 1e-12);
    }

    #[test]
    fn energy_rejects_continuum() {
        let k = PhysicalConstants::default();
        let p = PotentialParams {
            a: 1.0,
            b: 1.0,
            c: 0.0,
        };
        assert!(energy(&p, 1.0e9, 0, 0, &k).is_err());
        assert!(spectral_context(&p, 1.0e9, 0, 0, &k).is_err());
    }

    #[test]
    fn context_fields_are_consistent() {
        let k = PhysicalConstants::default();
        let m = co();
        let mu = mu_energy(&m, &k);
        let p = kratzer_params(&m);
        let ctx = spectral_context(&p, mu, 0, 0, &k).unwrap();
        assert!((ctx.xi_physical - 376.4629734839229).abs() < 1e-9);
        assert_eq!(ctx.xi_printed, -ctx.xi_physical);
        assert_eq!(ctx.alpha_quant, ctx.n as f64 + ctx.beta + 1.0);
        assert_eq!(ctx.gamma_scale, ctx.xi_physical * ctx.xi_physical);
        assert!(ctx.beta >= ctx.ell as f64);
        assert_eq!(ctx.energy, energy(&p, mu, 0, 0, &k).unwrap());

        // fixed product: ξ(n+β+1) is n-independent
        let ctx2 = spectral_context(&p, mu, 4, 0, &k).unwrap();
        let lhs = ctx2.xi_physical * ctx2.alpha_quant;
        let rhs = 4.0 * mu * m.d0 * m.r0 / (k.hbar_c * k.hbar_c);
        assert!((lhs - rhs).abs() < 1e-9 * rhs);
    }

    #[test]
    fn xi_matches_energy_relation() {
        // ξ_physical = sqrt(−8μ(E−c))/ħc for every state
        let k = PhysicalConstants::default();
        for m in builtin_molecules() {
            for p in [kratzer_params(&m), modified_kratzer_params(&m)] {
                let mu = mu_energy(&m, &k);
                for n in 0..=10u32 {
                    for ell in 0..=10u32 {
                        let ctx = spectral_context(&p, mu, n, ell, &k).unwrap();
                        let xi = (-8.0 * mu * (ctx.energy - p.c)).sqrt() / k.hbar_c;
                        assert!(
                            (xi - ctx.xi_physical).abs() <= 1e-10 * ctx.xi_physical,
                            "n={n} ell={ell}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn energies_increase_in_n_and_ell() {
        let k = PhysicalConstants::default();
        for m in builtin_molecules() {
            let p = kratzer_params(&m);
            let mu = mu_energy(&m, &k);
            for n in 0..10u32 {
                for ell in 0..10u32 {
                    let e = energy(&p, mu, n, ell, &k).unwrap();
                    assert!(energy(&p, mu, n + 1, ell, &k).unwrap() > e);
                    assert!(energy(&p, mu, n, ell + 1, &k).unwrap() > e);
                    assert!(e < p.c);
                }
            }
        }
    }

    #[test]
    fn hydrogen_limit_degeneracy() {
        // b = c = 0: β = ℓ exactly, so energy depends on n+ℓ only.
        let k = PhysicalConstants::default();
        let p = PotentialParams {
            a: -3.7,
            b: 0.0,
            c: 0.0,
        };
        let mu = 5.0e8;
        for n in 0..8u32 {
            for ell in 1..8u32 {
                let e1 = energy(&p, mu, n + 1, ell - 1, &k).unwrap();
                let e2 = energy(&p, mu, n, ell, &k).unwrap();
                assert_eq!(e1, e2);
                // hydrogen-like 1/(n+ℓ+1)² scaling
                let scale = -mu * p.a * p.a / (2.0 * k.hbar_c * k.hbar_c);
                let expect = scale / ((n + ell + 1) as f64).powi(2);
                assert!((e2 - expect).abs() <= 1e-12 * expect.abs());
            }
        }
    }
}
