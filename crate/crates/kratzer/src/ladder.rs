//! SU(1,1) ladder operators over the fixed-ξ radial basis:
//! L̂₋ = −r·d/dr − ξr/2 + n̂ + β and L̂₊ = r·d/dr − ξr/2 + n̂ + β + 2,
//! with L̂₀ = n̂ + β + 1 applied through its differential resolution
//! ½(L̂₊ + L̂₋ + ξr) so composite identities are exercised numerically.
//!
//! n̂ has no pointwise action on an arbitrary function; composites therefore
//! thread the intermediate state's index (a raise lands on n+1, a lower on
//! n−1) into the next operator.

use crate::error::{Error, Result};
use crate::spectrum::SpectralContext;
use crate::wavefunction::{
    eval_radial, eval_radial_derivative, eval_radial_second_derivative, RadialWavefunction,
};

pub const LADDER_ACTION_TOLERANCE: f64 = 1e-8;
pub const ALGEBRA_TOLERANCE: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderCoefficients {
    pub ell_minus: f64,
    pub ell_plus: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Raise,
    Lower,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OperatorAction {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    /// n of the state the operator acted on.
    pub source_n: u32,
}

/// ℓ₋ = √(n(n+β)(n+2β+1)/(n+β+1)), ℓ₊ = √((n+1)(n+β+2)(n+2β+2)/(n+β+1)).
pub fn ladder_coeffs(n: u32, beta: f64) -> Result<LadderCoefficients> {
    let nf = n as f64;
    let minus_sq = nf * (nf + beta) * (nf + 2.0 * beta + 1.0) / (nf + beta + 1.0);
    let plus_sq = (nf + 1.0) * (nf + beta + 2.0) * (nf + 2.0 * beta + 2.0) / (nf + beta + 1.0);
    if minus_sq < 0.0 || plus_sq < 0.0 {
        return Err(Error::Domain(format!(
            "negative ladder radicand at n = {n}, beta = {beta}"
        )));
    }
    Ok(LadderCoefficients {
        ell_minus: minus_sq.sqrt(),
        ell_plus: plus_sq.sqrt(),
    })
}

pub fn casimir_eigenvalue(beta: f64) -> f64 {
    beta * (beta + 1.0)
}

fn validate_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidArgument("grid must not be empty".to_string()));
    }
    if !(grid[0] > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "grid radii must be positive, got {}",
            grid[0]
        )));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument(
            "grid must be strictly increasing".to_string(),
        ));
    }
    Ok(())
}

/// Value, first, and second derivative of a state at one radius.
#[derive(Clone, Copy)]
struct Jet {
    f: f64,
    fp: f64,
    fpp: f64,
}

fn state_jet(w: &RadialWavefunction, r: f64) -> Jet {
    Jet {
        f: eval_radial(w, r),
        fp: eval_radial_derivative(w, r).expect("positive grid radius"),
        fpp: eval_radial_second_derivative(w, r).expect("positive grid radius"),
    }
}

/// [s·r·d/dr − ξr/2 + k]f at r: the shared shape of both ladder operators,
/// with k the number-operator eigenvalue plus the direction offset.
fn op_value(s: f64, k: f64, xi: f64, r: f64, f: f64, fp: f64) -> f64 {
    s * r * fp - 0.5 * xi * r * f + k * f
}

/// Same application carrying the derivative along for further composition.
fn op_jet(s: f64, k: f64, xi: f64, r: f64, j: Jet) -> (f64, f64) {
    let g = op_value(s, k, xi, r, j.f, j.fp);
    let gp = s * (j.fp + r * j.fpp) - 0.5 * xi * j.f + (k - 0.5 * xi * r) * j.fp;
    (g, gp)
}

fn direction_offset(direction: Direction) -> f64 {
    match direction {
        Direction::Raise => 2.0,
        Direction::Lower => 0.0,
    }
}

fn direction_sign(direction: Direction) -> f64 {
    match direction {
        Direction::Raise => 1.0,
        Direction::Lower => -1.0,
    }
}

pub fn apply_ladder(
    direction: Direction,
    state: &RadialWavefunction,
    grid: &[f64],
) -> Result<OperatorAction> {
    validate_grid(grid)?;
    let k = state.n as f64 + state.beta + direction_offset(direction);
    let s = direction_sign(direction);
    let values = grid
        .iter()
        .map(|&r| {
            let f = eval_radial(state, r);
            let fp = eval_radial_derivative(state, r)?;
            Ok(op_value(s, k, state.xi, r, f, fp))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OperatorAction {
        grid: grid.to_vec(),
        values,
        source_n: state.n,
    })
}

/// Evenly spaced radii bracketing the classical support of states near the
/// given (β, ξ); the envelope peaks near r ≈ (2β+2)/ξ.
pub fn default_algebra_grid(beta: f64, xi: f64) -> Vec<f64> {
    let r_peak = (2.0 * beta + 2.0) / xi;
    let (lo, hi) = (0.4 * r_peak, 2.5 * r_peak);
    let count = 49;
    (0..count)
        .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
        .collect()
}

#[derive(Debug, Clone)]
pub struct AlgebraResidual {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
}

impl AlgebraResidual {
    pub fn pass(&self) -> bool {
        self.residual.is_finite() && self.residual <= self.tolerance
    }
}

#[derive(Debug, Clone)]
pub struct AlgebraReport {
    pub state_n: u32,
    pub ell: u32,
    pub entries: Vec<AlgebraResidual>,
}

impl AlgebraReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass())
    }

    pub fn max_residual(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, e| m.max(e.residual))
    }

    pub fn get(&self, name: &str) -> Option<&AlgebraResidual> {
        self.entries.iter().find(|e| e.name == name)
    }
}

fn sup(values: impl Iterator<Item = f64>) -> f64 {
    values.fold(0.0_f64, |m, v| m.max(v.abs()))
}

/// Sup-norm residuals of the operator identities acting on R_n:
/// ladder action, commutator, number-shift, Casimir (both orderings), and
/// the Hermitian-combination commutators tracked as real components.
pub fn verify_algebra(state_n: u32, ctx: &SpectralContext, grid: &[f64]) -> Result<AlgebraReport> {
    if state_n == 0 {
        return Err(Error::InvalidArgument(
            "algebra verification needs n >= 1 so both ladder directions act".to_string(),
        ));
    }
    validate_grid(grid)?;

    let beta = ctx.beta;
    let xi = ctx.xi_physical;
    let nf = state_n as f64;
    let state = RadialWavefunction::new(state_n, ctx.ell, beta, xi)?;
    let upper = RadialWavefunction::new(state_n + 1, ctx.ell, beta, xi)?;
    let below = RadialWavefunction::new(state_n - 1, ctx.ell, beta, xi)?;
    let coeffs = ladder_coeffs(state_n, beta)?;

    let m = grid.len();
    // grid functions, one slot per radius
    let mut f = vec![0.0; m];
    let mut u = vec![0.0; m]; // L+ R_n
    let mut v = vec![0.0; m]; // L- R_n
    let mut c1 = vec![0.0; m]; // L- L+ R_n
    let mut c2 = vec![0.0; m]; // L+ L- R_n
    let mut l0u = vec![0.0; m];
    let mut l0v = vec![0.0; m];
    let mut lpz = vec![0.0; m]; // L+ (L0 R_n)
    let mut lmz = vec![0.0; m]; // L- (L0 R_n)
    let mut up_plain = vec![0.0; m]; // R_{n+1}
    let mut dn_plain = vec![0.0; m]; // R_{n-1}

    for (i, &r) in grid.iter().enumerate() {
        let j = state_jet(&state, r);
        f[i] = j.f;
        let (uv, up) = op_jet(1.0, nf + beta + 2.0, xi, r, j);
        let (vv, vp) = op_jet(-1.0, nf + beta, xi, r, j);
        u[i] = uv;
        v[i] = vv;
        up_plain[i] = eval_radial(&upper, r);
        dn_plain[i] = eval_radial(&below, r);

        // composites thread the intermediate index into the k of the next op
        c1[i] = op_value(-1.0, (nf + 1.0) + beta, xi, r, uv, up);
        c2[i] = op_value(1.0, (nf - 1.0) + beta + 2.0, xi, r, vv, vp);

        // L0 g = ½(L+ g + L- g + ξr g), with n̂ at the intermediate index
        let l0 = |g: f64, gp: f64, n_mid: f64| -> f64 {
            0.5 * (op_value(1.0, n_mid + beta + 2.0, xi, r, g, gp)
                + op_value(-1.0, n_mid + beta, xi, r, g, gp)
                + xi * r * g)
        };
        l0u[i] = l0(uv, up, nf + 1.0);
        l0v[i] = l0(vv, vp, nf - 1.0);

        // z = L0 R_n and its expression derivative, then L± z at index n
        let z = 0.5 * (uv + vv + xi * r * j.f);
        let zp = 0.5 * (up + vp + xi * (j.f + r * j.fp));
        lpz[i] = op_value(1.0, nf + beta + 2.0, xi, r, z, zp);
        lmz[i] = op_value(-1.0, nf + beta, xi, r, z, zp);
    }

    let idx = 0..m;
    let rel = |num: &dyn Fn(usize) -> f64, den: &dyn Fn(usize) -> f64| -> f64 {
        let n_sup = sup(idx.clone().map(num));
        let d_sup = sup(idx.clone().map(den));
        n_sup / d_sup
    };

    let l0_eig = nf + beta + 1.0;
    let casimir = casimir_eigenvalue(beta);
    let mut entries = Vec::new();
    let mut push = |name: &str, residual: f64, tolerance: f64| {
        entries.push(AlgebraResidual {
            name: name.to_string(),
            residual,
            tolerance,
        });
    };

    push(
        "ladder.raise",
        rel(&|i| u[i] - coeffs.ell_plus * up_plain[i], &|i| up_plain[i]),
        LADDER_ACTION_TOLERANCE,
    );
    push(
        "ladder.lower",
        rel(&|i| v[i] - coeffs.ell_minus * dn_plain[i], &|i| dn_plain[i]),
        LADDER_ACTION_TOLERANCE,
    );
    push(
        "commutator",
        rel(&|i| (c1[i] - c2[i]) - 2.0 * l0_eig * f[i], &|i| {
            2.0 * l0_eig * f[i]
        }),
        ALGEBRA_TOLERANCE,
    );
    push(
        "number_shift.raise",
        rel(&|i| l0u[i] - (l0_eig + 1.0) * u[i], &|i| {
            (l0_eig + 1.0) * u[i]
        }),
        ALGEBRA_TOLERANCE,
    );
    push(
        "number_shift.lower",
        rel(&|i| l0v[i] - (l0_eig - 1.0) * v[i], &|i| {
            (l0_eig - 1.0) * v[i]
        }),
        ALGEBRA_TOLERANCE,
    );
    push(
        "casimir.raise_order",
        rel(
            &|i| l0_eig * (l0_eig + 1.0) * f[i] - c1[i] - casimir * f[i],
            &|i| casimir * f[i],
        ),
        ALGEBRA_TOLERANCE,
    );
    push(
        "casimir.lower_order",
        rel(
            &|i| l0_eig * (l0_eig - 1.0) * f[i] - c2[i] - casimir * f[i],
            &|i| casimir * f[i],
        ),
        ALGEBRA_TOLERANCE,
    );
    // [Lx, Ly] R = −i·L0 R: imaginary component reduces to ½(c1−c2) = (n+β+1)R
    push(
        "hermitian.xy",
        rel(&|i| 0.5 * (c1[i] - c2[i]) - l0_eig * f[i], &|i| {
            l0_eig * f[i]
        }),
        ALGEBRA_TOLERANCE,
    );
    // [Ly, Lz] R = i·Lx R: real component (L+z − L−z) − (L0u − L0v) = −(u+v)
    push(
        "hermitian.yz",
        rel(
            &|i| (lpz[i] - lmz[i]) - (l0u[i] - l0v[i]) + (u[i] + v[i]),
            &|i| u[i] + v[i],
        ),
        ALGEBRA_TOLERANCE,
    );
    // [Lz, Lx] R = i·Ly R: (L0u + L0v) − (L+z + L−z) = (u−v)
    push(
        "hermitian.zx",
        rel(
            &|i| (l0u[i] + l0v[i]) - (lpz[i] + lmz[i]) - (u[i] - v[i]),
            &|i| u[i] - v[i],
        ),
        ALGEBRA_TOLERANCE,
    );

    Ok(AlgebraReport {
        state_n,
        ell: ctx.ell,
        entries,
    })
}
