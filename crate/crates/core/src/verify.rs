//! Exhaustive checks of the bijection theorems over `S_n`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bijections::{huang_bump, little_bump, ls_recording, phi, pop_nabla};
use crate::bpd::{enumerate_bpd, gamma};
use crate::error::{Error, Result};
use crate::insertion::q_tableau;
use crate::perm::Permutation;
use crate::pipedream::enumerate_pd;
use crate::schubert::{flagged_schur, schubert_bpd, schubert_pd};
use crate::tableau::{enumerate_flagged, jdt};

/// Environment variable bounding `n` for exhaustive runs.
pub const MAX_N_VAR: &str = "PIPEDREAM_MAX_N";
pub const DEFAULT_MAX_N: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    /// `γ(B) = Q̃(φ(B))` for Grassmannian permutations.
    Grassmannian,
    /// `γ(B) = Q̃(φ(B))` for vexillary permutations.
    Main,
    /// `Q̃` is a bijection from `PD(v)` onto flagged tableaux.
    Lenart,
    /// `jdt(γ(B)) = γ(∇B)` for Grassmannian permutations.
    HuangCor,
    /// `φ ∘ H_ij = L_ij ∘ φ`.
    Canonical,
    /// `Q̃` is unchanged by Little bumps.
    Hy,
    /// The Huang recording tableau equals `Q̃ ∘ φ`.
    Recording,
    /// The three Schubert polynomial formulas agree.
    Schubert,
}

impl Theorem {
    pub const ALL: [Theorem; 8] = [
        Theorem::Grassmannian,
        Theorem::Main,
        Theorem::Lenart,
        Theorem::HuangCor,
        Theorem::Canonical,
        Theorem::Hy,
        Theorem::Recording,
        Theorem::Schubert,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Grassmannian => "grassmannian",
            Theorem::Main => "main",
            Theorem::Lenart => "lenart",
            Theorem::HuangCor => "huangcor",
            Theorem::Canonical => "canonical",
            Theorem::Hy => "hy",
            Theorem::Recording => "recording",
            Theorem::Schubert => "schubert",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub theorem: Theorem,
    /// Smallest and largest `n` covered; `S_n` contains every smaller case.
    pub n_range: (usize, usize),
    pub cases_checked: usize,
    pub failures: Vec<Value>,
    pub wall_time_ms: u128,
    pub pass: bool,
}

/// The cap from [`MAX_N_VAR`], or [`DEFAULT_MAX_N`].
pub fn max_n() -> usize {
    std::env::var(MAX_N_VAR).ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_MAX_N)
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<Value>,
}

impl Tally {
    fn check(&mut self, ok: bool, failure: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok {
            self.failures.push(failure());
        }
    }

    fn run(&mut self, f: impl FnOnce(&mut Tally) -> Result<()>, context: impl FnOnce() -> Value) {
        if let Err(e) = f(self) {
            let mut blob = context();
            blob["error"] = json!(e.to_string());
            self.cases += 1;
            self.failures.push(blob);
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self
    }
}

fn legal_pairs(w: &Permutation) -> Vec<(usize, usize)> {
    let m = w.size();
    (1..=m)
        .flat_map(|i| (i + 1..=m).map(move |j| (i, j)))
        .filter(|&(i, j)| crate::bijections::little::check_bump_pair(w, i, j).is_ok())
        .collect()
}

fn check_permutation(theorem: Theorem, w: &Permutation) -> Tally {
    let mut tally = Tally::default();
    let ctx = || json!({ "perm": w.to_string() });
    tally.run(|t| check_into(theorem, w, t), ctx);
    tally
}

fn gamma_matches_q(w: &Permutation, t: &mut Tally) -> Result<()> {
    for b in enumerate_bpd(w) {
        let g = gamma(&b, w)?;
        let q = q_tableau(&phi(&b)?)?;
        t.check(g == q, || json!({ "perm": w.to_string(), "bpd": b, "gamma": g, "q": q }));
    }
    Ok(())
}

fn check_into(theorem: Theorem, w: &Permutation, t: &mut Tally) -> Result<()> {
    match theorem {
        Theorem::Grassmannian if w.is_grassmannian() => gamma_matches_q(w, t)?,
        Theorem::Main if w.is_vexillary() => gamma_matches_q(w, t)?,
        Theorem::Lenart if w.is_vexillary() => {
            let mut images = enumerate_pd(w).iter().map(|pd| q_tableau(&pd.to_biword())).collect::<Result<Vec<_>>>()?;
            images.sort();
            let expected = enumerate_flagged(&w.shape(), &w.flag()?)?;
            let ok = images == expected;
            t.check(ok, || json!({ "perm": w.to_string(), "images": images, "flagged": expected }));
        }
        Theorem::HuangCor if w.is_grassmannian() && !w.is_identity() => {
            for b in enumerate_bpd(w) {
                let step = pop_nabla(&b)?;
                let v = step.next.permutation();
                let slid = jdt(&gamma(&b, w)?)?;
                let after = gamma(&step.next, &v)?;
                t.check(slid == after, || json!({ "perm": w.to_string(), "bpd": b, "jdt": slid, "gamma_next": after }));
            }
        }
        Theorem::Canonical => {
            let pairs = legal_pairs(w);
            for b in enumerate_bpd(w) {
                let c = phi(&b)?;
                for &(i, j) in &pairs {
                    let left = little_bump(&c, i, j)?;
                    let right = phi(&huang_bump(&b, i, j)?)?;
                    t.check(
                        left == right,
                        || json!({ "perm": w.to_string(), "pair": [i, j], "bpd": b, "little": left, "huang": right }),
                    );
                }
            }
        }
        Theorem::Hy => {
            let pairs = legal_pairs(w);
            for pd in enumerate_pd(w) {
                let c = pd.to_biword();
                let q = q_tableau(&c)?;
                for &(i, j) in &pairs {
                    let bumped = little_bump(&c, i, j)?;
                    let q2 = q_tableau(&bumped)?;
                    t.check(
                        q == q2,
                        || json!({ "perm": w.to_string(), "pair": [i, j], "biword": c, "bumped": bumped }),
                    );
                }
            }
        }
        Theorem::Recording => {
            for b in enumerate_bpd(w) {
                let ls = ls_recording(&b)?.tableau;
                let q = q_tableau(&phi(&b)?)?;
                t.check(ls == q, || json!({ "perm": w.to_string(), "bpd": b, "ls": ls, "q": q }));
            }
        }
        Theorem::Schubert => {
            let pd = schubert_pd(w);
            let bpd = schubert_bpd(w);
            t.check(pd == bpd, || json!({ "perm": w.to_string(), "pd": pd.to_string(), "bpd": bpd.to_string() }));
            if w.is_vexillary() {
                let flagged = flagged_schur(w)?;
                t.check(
                    pd == flagged,
                    || json!({ "perm": w.to_string(), "pd": pd.to_string(), "flagged": flagged.to_string() }),
                );
            }
        }
        _ => {}
    }
    Ok(())
}

/// Checks `theorem` on every permutation of `S_n`, in parallel.
pub fn verify(theorem: Theorem, n: usize) -> Result<VerifyReport> {
    verify_with_cap(theorem, n, max_n())
}

pub fn verify_with_cap(theorem: Theorem, n: usize, cap: usize) -> Result<VerifyReport> {
    if n > cap {
        return Err(Error::SizeCap { n, cap });
    }
    let start = Instant::now();
    let perms = Permutation::all_of_size(n);
    let tally = perms.par_iter().map(|w| check_permutation(theorem, w)).reduce(Tally::default, Tally::merge);
    let mut failures = tally.failures;
    failures.sort_by_key(|v| v.to_string());
    Ok(VerifyReport {
        theorem,
        n_range: (1, n),
        cases_checked: tally.cases,
        pass: failures.is_empty(),
        failures,
        wall_time_ms: start.elapsed().as_millis(),
    })
}
