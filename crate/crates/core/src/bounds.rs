//! Exact evaluation of the edge-count bounds for saturated graphs and
//! hypergraphs.
//!
//! Values are exact rationals (or big integers); nothing here touches floating
//! point.

use alloc::format;
use alloc::string::String;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed};

use crate::combinatorics::binomial;
use crate::error::{ensure, Result};

fn int(x: usize) -> BigInt {
    BigInt::from(x)
}

fn choose(n: usize, k: usize) -> BigInt {
    BigInt::from(binomial(n as u64, k as u64))
}

/// `n(p-2) - C(p-1, 2)`: the least size of a `K_p`-saturated graph on `n`
/// vertices.
pub fn ehm_bound(n: usize, p: usize) -> Result<BigInt> {
    ensure!(p >= 2, "ehm_bound needs p >= 2, got {p}");
    ensure!(n >= p, "ehm_bound needs n >= p, got n = {n}, p = {p}");
    Ok(int(n) * int(p - 2) - choose(p - 1, 2))
}

/// `(n - d - 1)(d + p - 2)/2 + d - C(p-2, 2)` for a `K_p`-semi-saturated graph
/// on `n` vertices with minimum degree `d`.
pub fn dh_semi_bound(n: usize, delta: usize, p: usize) -> Result<BigRational> {
    ensure!(p >= 2, "dh_semi_bound needs p >= 2, got {p}");
    ensure!(delta < n, "dh_semi_bound needs delta < n, got delta = {delta}, n = {n}");
    let num = int(n - delta - 1) * int(delta + p - 2);
    Ok(BigRational::new(num, int(2)) + BigRational::from(int(delta) - choose(p - 2, 2)))
}

/// Largest minimum degree a `K_p`-free graph on `n` vertices can have,
/// `floor((p-2)n/(p-1))` by Turán's theorem.
pub fn turan_max_min_degree(n: usize, p: usize) -> usize {
    if p < 2 {
        return 0;
    }
    (p - 2) * n / (p - 1)
}

/// Lower bound on the size of a `K_p`-saturated graph with minimum degree at
/// least `t`: [`dh_semi_bound`] minimised over every minimum degree a
/// `K_p`-free graph on `n` vertices can have.
pub fn dh_mixed_bound(n: usize, p: usize, t: usize) -> Result<BigRational> {
    ensure!(p >= 3, "dh_mixed_bound needs p >= 3, got {p}");
    let top = turan_max_min_degree(n, p);
    ensure!(
        t <= top,
        "no K_{p}-free graph on {n} vertices has minimum degree {t} (at most {top})"
    );
    // concave in the degree, so the minimum sits at an end of the range
    let lo = dh_semi_bound(n, t, p)?;
    let hi = dh_semi_bound(n, top, p)?;
    Ok(if lo <= hi { lo } else { hi })
}

/// Lower end of the semi-saturation sandwich, `t''(n-t-1)/2 + t - C(p-2,2)`
/// with `t'' = t + p - 2`.
pub fn semi_sat_lower(n: usize, p: usize, t: usize) -> Result<BigRational> {
    check_semi_range(n, p, t)?;
    let tt = t + p - 2;
    Ok(BigRational::new(int(tt) * int(n - t - 1), int(2)) + BigRational::from(int(t) - choose(p - 2, 2)))
}

/// Upper end of the semi-saturation sandwich, `ceil(t''(n-(p-2))/2) + C(p-2,2)`.
pub fn semi_sat_upper(n: usize, p: usize, t: usize) -> Result<BigInt> {
    check_semi_range(n, p, t)?;
    let tt = t + p - 2;
    Ok(int((tt * (n - (p - 2))).div_ceil(2)) + choose(p - 2, 2))
}

fn check_semi_range(n: usize, p: usize, t: usize) -> Result<()> {
    ensure!(p >= 3, "semi-saturation bounds need p >= 3, got {p}");
    ensure!(t + 2 >= p, "semi-saturation bounds need t >= p - 2, got t = {t}, p = {p}");
    ensure!(n > t, "semi-saturation bounds need n > t, got n = {n}, t = {t}");
    Ok(())
}

/// Whether `(n, p, t)` lies where the lower end is a proven bound
/// (`t >= p - 2` and `n >= 4t`); outside it the formula is only evaluated.
pub fn semi_sat_lower_proven(n: usize, p: usize, t: usize) -> bool {
    p >= 3 && t + 2 >= p && n >= 4 * t
}

/// `C(n, r) - C(n - p + r, r)`: the least size of a `K_p^r`-saturated
/// `r`-graph on `n` vertices.
pub fn bollobas_bound(n: usize, r: usize, p: usize) -> Result<BigInt> {
    ensure!(r >= 1 && p > r, "bollobas_bound needs p > r >= 1, got r = {r}, p = {p}");
    ensure!(n >= p, "bollobas_bound needs n >= p, got n = {n}, p = {p}");
    Ok(choose(n, r) - choose(n - p + r, r))
}

/// Upper bound from `K_{t, n-t}`: `tn - t^2`.
pub fn bipartite_upper(n: usize, t: usize) -> Result<BigInt> {
    ensure!(n >= 2 * t, "bipartite_upper needs n >= 2t, got n = {n}, t = {t}");
    Ok(int(t) * int(n) - int(t) * int(t))
}

/// Upper bound from the clique-joined bipartite graph,
/// `tn - t^2 + t(p-3) - C(p-2, 2)`.
pub fn clique_join_upper(n: usize, p: usize, t: usize) -> Result<BigInt> {
    ensure!(p >= 3 && t + 2 >= p, "clique_join_upper needs t >= p - 2 >= 1, got t = {t}, p = {p}");
    ensure!(n + p >= 2 * t + 3, "clique_join_upper needs n >= 2t - (p - 3)");
    Ok(int(t) * int(n) - int(t) * int(t) + int(t) * int(p - 3) - choose(p - 2, 2))
}

/// Closed form for the size of the hub-family construction:
/// `tn - t^2 (1 + C(t, t/2)/8)` for even `t` and
/// `tn - t^2 - ((t-1)(t^2-1)/(8t)) C(t, (t-1)/2)` for odd `t`.
pub fn hub_family_edges(n: usize, t: usize) -> Result<BigRational> {
    ensure!(t >= 4, "hub_family_edges needs t >= 4, got {t}");
    let tn = BigRational::from(int(t) * int(n));
    let t2 = BigRational::from(int(t) * int(t));
    Ok(if t % 2 == 0 {
        let mid = BigRational::from(choose(t, t / 2));
        tn - t2 * (BigRational::one() + mid / BigRational::from(int(8)))
    } else {
        let coeff = BigRational::new(int(t - 1) * int(t * t - 1), int(8 * t));
        tn - t2 - coeff * BigRational::from(choose(t, (t - 1) / 2))
    })
}

/// The closure-argument lower bound `tn - t(t+1)^(t^(2t^2))`.
///
/// The subtracted constant is a tower that is only representable for `t <= 2`
/// (at `t = 3` it has over 2^29 decimal digits); larger `t` yields the
/// symbolic form, which is below `-2^(2^20)` and therefore never binding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TowerBound {
    Exact(BigInt),
    Symbolic { n: usize, t: usize },
}

impl TowerBound {
    /// Whether an edge count meets the bound.
    pub fn admits(&self, edges: &BigInt) -> bool {
        match self {
            TowerBound::Exact(v) => edges >= v,
            TowerBound::Symbolic { .. } => !edges.is_negative(),
        }
    }

    pub fn exact(&self) -> Option<&BigInt> {
        match self {
            TowerBound::Exact(v) => Some(v),
            TowerBound::Symbolic { .. } => None,
        }
    }
}

impl fmt::Display for TowerBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TowerBound::Exact(v) => write!(f, "{v}"),
            TowerBound::Symbolic { n, t } => write!(f, "{t}*{n} - {t}*{}^({t}^{})", t + 1, 2 * t * t),
        }
    }
}

/// The constant `t(t+1)^(t^(2t^2))`, when it fits in memory.
pub fn closure_tower_constant(t: usize) -> Option<BigInt> {
    if t > 2 {
        return None;
    }
    let inner: u32 = (t as u32).pow(2 * (t as u32) * (t as u32));
    Some(int(t) * BigInt::from(Pow::pow(BigUint::from(t + 1), inner)))
}

pub fn closure_tower_bound(n: usize, p: usize, t: usize) -> Result<TowerBound> {
    ensure!(p >= 3, "closure_tower_bound needs p >= 3, got {p}");
    ensure!(t >= 1, "closure_tower_bound needs t >= 1");
    Ok(match closure_tower_constant(t) {
        Some(c) => TowerBound::Exact(int(t) * int(n) - c),
        None => TowerBound::Symbolic { n, t },
    })
}

/// Renders an exact rational as `num/den` or a plain integer.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
