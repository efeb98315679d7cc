//! Characteristic numbers of hyperelliptic Lefschetz fibrations and of
//! double covers of the plane.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::BranchSolution;
use crate::lifts::Factorization;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub g: u32,
    pub n: i64,
    pub k: i64,
    pub h_list: Vec<u32>,
    pub mu: i64,
    /// Euler number.
    pub e: i64,
    pub c1_sq: i64,
    /// Signature.
    pub tau: i64,
    /// Holomorphic Euler characteristic `(c_1² + e)/12`.
    pub chi: i64,
    pub noether: bool,
    pub minimal_hint: Option<String>,
    pub note: Option<String>,
}

impl InvariantReport {
    pub fn t(&self) -> usize {
        self.h_list.len()
    }

    /// `μ/t`, when there are reducible fibres.
    pub fn mu_over_t(&self) -> Option<f64> {
        (!self.h_list.is_empty()).then(|| self.mu as f64 / self.h_list.len() as f64)
    }
}

/// Invariants of the genus-`g` fibration whose branch locus is
/// `(2g+2)H + 2kF` on `P(O ⊕ O(n))`, with reducible fibres of types `h_list`.
pub fn slf_invariants(g: u32, n: i64, k: i64, h_list: &[u32]) -> Result<InvariantReport> {
    if g == 0 {
        return Err(Error::BadGenus(g));
    }
    let gi = g as i64;
    let comb = 4 * k + n * (2 * gi + 2);
    let sum = |f: fn(i64) -> i64| h_list.iter().map(|&h| f(h as i64)).sum::<i64>();

    let mu = (2 * gi + 1) * comb - sum(|h| 8 * h * h + 4 * h - 1);
    if mu <= 0 {
        return Err(Error::InconsistentInput(format!("(g, n, k, h) = ({g}, {n}, {k}, {h_list:?}) gives mu = {mu}")));
    }
    let e = 4 - 4 * gi + mu;
    let c1_sq = (gi - 1) * (comb - 8) - sum(|h| (2 * h - 1) * (2 * h - 1));
    let tau = -(gi + 1) * comb + sum(|h| 4 * h * h + 4 * h - 1);
    if (gi * comb) % 4 != 0 {
        return Err(Error::InconsistentInput(format!("g·(4k + n(2g+2)) = {} is not divisible by 4", gi * comb)));
    }
    let chi = gi * comb / 4 - gi + 1 - sum(|h| h * h);

    if 12 * chi != c1_sq + e || c1_sq != 2 * e + 3 * tau {
        return Err(Error::InconsistentInput(format!(
            "identities fail: 12χ = {}, c1²+e = {}, 2e+3τ = {}",
            12 * chi,
            c1_sq + e,
            2 * e + 3 * tau
        )));
    }

    let (minimal_hint, note) = family_tags(g, n, k, h_list, mu);
    Ok(InvariantReport {
        g,
        n,
        k,
        h_list: h_list.to_vec(),
        mu,
        e,
        c1_sq,
        tau,
        chi,
        noether: noether_check(c1_sq, chi),
        minimal_hint,
        note,
    })
}

/// Tags for the genus-2 families without reducible fibres.
fn family_tags(g: u32, n: i64, k: i64, h_list: &[u32], mu: i64) -> (Option<String>, Option<String>) {
    if g != 2 || !h_list.is_empty() {
        return (None, None);
    }
    let hint = match (n, k) {
        (0, 1) => Some("I_1: rational surface"),
        (0, 2) => Some("I_2: elliptic surface"),
        (1, 0) => Some("II_0: K3 surface blown up twice"),
        (4, -2) => Some("III_2: general type after contracting one (-1)-curve"),
        _ if mu > 40 => Some("general type"),
        _ => None,
    };
    // III_m lives on n = 2m with k = -m; spin exactly when m is even
    let note = (n > 0 && n % 2 == 0 && k == -n / 2 && (n / 2) % 2 == 0).then_some("spin: even intersection form");
    (hint.map(str::to_string), note.map(str::to_string))
}

/// `(c_1², e, χ)` of a double cover of `P²` branched along a curve of degree `2d`.
pub fn p2_cover_invariants(d: i64) -> Result<(i64, i64, i64)> {
    if d < 1 {
        return Err(Error::ParameterOutOfRange(format!("half-degree d must be positive, got {d}")));
    }
    let c1_sq = 2 * d * d - 12 * d + 18;
    let e = 4 * d * d - 6 * d + 6;
    let chi = (d * d - 3 * d + 4) / 2;
    Ok((c1_sq, e, chi))
}

/// On the Noether line `χ = c_1²/2 + 3` (with `c_1²` even).
pub fn noether_check(c1_sq: i64, chi: i64) -> bool {
    c1_sq % 2 == 0 && chi == c1_sq / 2 + 3
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pi1 {
    Trivial,
    Unknown,
}

/// Fibrations with at least one singular fibre and no reducible ones are
/// simply connected; otherwise nothing is claimed.
pub fn pi1_is_trivial(f: &Factorization, _solution: &BranchSolution) -> Pi1 {
    if f.mu() > 0 && f.t() == 0 {
        Pi1::Trivial
    } else {
        Pi1::Unknown
    }
}

/// Genus of the branch curve from Riemann–Hurwitz: `2 - 2g_B = 2(2g+2) - μ_virt`.
pub fn rh_branch_genus(g: u32, mu_virt: i64) -> Result<i64> {
    if mu_virt < 0 {
        return Err(Error::NotRealizable(format!("mu_virt = {mu_virt} is negative")));
    }
    let twice = mu_virt - 4 * g as i64 - 2;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::NotRealizable(format!("genus {g}, mu_virt = {mu_virt} gives 2g_B = {twice}")));
    }
    Ok(twice / 2)
}
