//! One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use pipedream_core::bijections::{cross_bump_swap, huang_states, phi, pop_nabla};
use pipedream_core::bpd::{available_droops, droop, enumerate_bpd, enumerate_bpd_of_size, gamma, undroop};
use pipedream_core::insertion::{eg_pq, q_tableau};
use pipedream_core::pipedream::enumerate_pd;
use pipedream_core::schubert::{flagged_schur, schubert_bpd, schubert_pd};
use pipedream_core::tableau::{enumerate_flagged, jdt, jdt_inverse};
use pipedream_core::verify::{verify_with_cap, Theorem};
use pipedream_core::{
    AlmostBpd, Bpd, CompatibleSequence, Flag, Partition, Permutation, PipeDream, SparsePolynomial, Tableau, Tile,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, Box<dyn Fn() -> Outcome>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn t(rows: &[&[usize]]) -> Tableau {
    Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn cs(rows: &[usize], letters: &[usize]) -> CompatibleSequence {
    CompatibleSequence::new(rows.to_vec(), letters.to_vec()).unwrap()
}

fn legal_pairs(w: &Permutation) -> Vec<(usize, usize)> {
    let inv = w.inverse();
    let m = w.size();
    let mut out = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            if inv.apply(i) > inv.apply(j) && w.swap_values(i, j).unwrap().drops_length_by_one() {
                out.push((i, j));
            }
        }
    }
    out
}

fn fixtures() -> Outcome {
    let b_12587634 = Bpd::from_rows(&[
        "..r-----", "r-j.r---", "|...|.r-", "|r--jrjr", "||..rjr+", "||..|r++", "||r-++++", "|||r++++",
    ])
    .unwrap();
    let w = p("12587634");
    let rows = [1, 1, 2, 3, 3, 3, 3, 5, 5, 6, 6];
    let corrected = cs(&rows, &[6, 4, 3, 7, 6, 5, 4, 6, 5, 7, 6]);
    let drawn = cs(&rows, &[5, 4, 3, 7, 6, 5, 4, 6, 5, 7, 6]);
    let gamma_12587634 = t(&[&[1, 1, 2, 3], &[3, 3, 3], &[5, 5], &[6, 6]]);
    let c = phi(&b_12587634).map_err(|e| e.to_string())?;
    ensure(c == corrected, || format!("phi(B) = {c}"))?;
    ensure(drawn.permutation() != w, || "the drawn biword unexpectedly belongs to 12587634".into())?;
    let g = gamma(&b_12587634, &w).map_err(|e| e.to_string())?;
    let q = q_tableau(&c).map_err(|e| e.to_string())?;
    ensure(g == gamma_12587634 && q == gamma_12587634, || format!("gamma = {g}, Q = {q}"))?;

    let pair = eg_pq(&cs(&[1, 1, 2, 2], &[4, 2, 3, 2])).map_err(|e| e.to_string())?;
    ensure(pair.p_tableau == t(&[&[2, 3, 4], &[3]]) && pair.q_tableau == t(&[&[1, 1, 2], &[2]]), || {
        format!("EG gives P = {}, Q = {}", pair.p_tableau, pair.q_tableau)
    })?;

    let slid = jdt(&t(&[&[1, 1, 3, 4], &[2, 4, 4, 5], &[3, 5]])).map_err(|e| e.to_string())?;
    ensure(slid == t(&[&[1, 3, 4, 4], &[2, 4, 5], &[3, 5]]), || format!("jdt gives {slid}"))?;

    let mut b = Bpd::from_rows(&["..r--", ".r+--", "rj|.r", "|rjr+", "||r++"]).unwrap();
    let mut pops = Vec::new();
    while !b.blanks().is_empty() {
        let step = pop_nabla(&b).map_err(|e| e.to_string())?;
        pops.push((step.row, step.letter));
        b = step.next;
    }
    ensure(pops == [(1, 3), (1, 1), (2, 4), (3, 3)], || format!("pops {pops:?}"))?;
    Ok("12587634 gamma/Q, EG, jdt and pop fixtures exact; phi(B) has first letter 6, the drawn 5 traces to 12685734"
        .into())
}

fn theorem(theorem: Theorem, n: usize) -> Outcome {
    let report = verify_with_cap(theorem, n, n).map_err(|e| e.to_string())?;
    ensure(report.pass && report.cases_checked > 0, || {
        format!("{} failures of {}; first: {}", report.failures.len(), report.cases_checked, report.failures[0])
    })?;
    Ok(format!("{} cases on S_{n}", report.cases_checked))
}

fn counting() -> Outcome {
    for w in Permutation::all_of_size(5) {
        let (pds, bpds) = (enumerate_pd(&w).len(), enumerate_bpd(&w).len());
        ensure(pds == bpds, || format!("{w}: {pds} pipe dreams, {bpds} bumpless"))?;
    }
    let w = p("1432");
    let (pds, bpds) = (enumerate_pd(&w).len(), enumerate_bpd(&w).len());
    let flagged = enumerate_flagged(&Partition::new(vec![2, 1]).unwrap(), &Flag::new(vec![2, 3])).unwrap().len();
    ensure((pds, bpds, flagged) == (5, 5, 5), || format!("1432: {pds}/{bpds}/{flagged}"))?;
    Ok("|PD| = |BPD| on S_5; 1432 gives 5/5/5".into())
}

fn schubert() -> Outcome {
    let mut vexillary = 0;
    for w in Permutation::all_of_size(5) {
        let pd = schubert_pd(&w);
        ensure(pd == schubert_bpd(&w), || format!("{w}: pipe dream and bumpless sums differ"))?;
        if w.is_vexillary() {
            vexillary += 1;
            ensure(Ok(&pd) == flagged_schur(&w).as_ref(), || format!("{w}: flagged Schur differs"))?;
        }
    }
    let expected: SparsePolynomial = [vec![2, 1], vec![2, 0, 1], vec![1, 2], vec![1, 1, 1], vec![0, 2, 1]]
        .into_iter()
        .map(SparsePolynomial::monomial)
        .sum();
    let s = schubert_pd(&p("1432"));
    ensure(s == expected, || format!("S_1432 = {s}"))?;
    Ok(format!("120 two-way, {vexillary} three-way; S_1432 = {s}"))
}

/// Every subset of staircase cells of the right size that is a reduced pipe
/// dream for `w`.
fn brute_force_pds(w: &Permutation) -> BTreeSet<Vec<(usize, usize)>> {
    let n = w.size().max(1);
    let cells: Vec<(usize, usize)> =
        (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).filter(|&(i, j)| i + j <= n).collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << cells.len()) {
        if mask.count_ones() as usize != w.length() {
            continue;
        }
        let chosen: Vec<_> = (0..cells.len()).filter(|k| mask >> k & 1 == 1).map(|k| cells[k]).collect();
        let pd = PipeDream::new(n, chosen.iter().copied()).unwrap();
        if pd.is_reduced() && pd.permutation() == *w {
            out.insert(chosen);
        }
    }
    out
}

/// Every locally consistent tiling of the `n × n` grid, bottom row first.
fn tilings(n: usize) -> Vec<Vec<Vec<Tile>>> {
    fn go(
        n: usize,
        idx: usize,
        up: &mut Vec<bool>,
        left: bool,
        grid: &mut Vec<Vec<Tile>>,
        out: &mut Vec<Vec<Vec<Tile>>>,
    ) {
        if idx == n * n {
            if up.iter().all(|&x| !x) {
                out.push(grid.clone());
            }
            return;
        }
        let (r, c) = (n - idx / n, idx % n + 1);
        let left = c > 1 && left;
        let options: &[(Tile, bool, bool)] = match (up[c - 1], left) {
            (false, false) => &[(Tile::Blank, false, false)],
            (true, false) => &[(Tile::Vertical, true, false), (Tile::R, false, true)],
            (false, true) => &[(Tile::Horizontal, false, true), (Tile::J, true, false)],
            (true, true) => &[(Tile::Cross, true, true)],
        };
        for &(tile, top, right) in options {
            if c == n && !right {
                continue;
            }
            let saved = up[c - 1];
            up[c - 1] = top;
            grid[r - 1][c - 1] = tile;
            go(n, idx + 1, up, right, grid, out);
            up[c - 1] = saved;
        }
    }
    let mut out = Vec::new();
    go(n, 0, &mut vec![true; n], false, &mut vec![vec![Tile::Blank; n]; n], &mut out);
    out
}

fn random_ssyt(rng: &mut StdRng) -> Tableau {
    let mut parts: Vec<usize> = (0..rng.gen_range(1..=4)).map(|_| rng.gen_range(1..=5)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for (r, &len) in parts.iter().enumerate() {
        let mut row: Vec<usize> = Vec::new();
        for c in 0..len {
            let left = if c > 0 { row[c - 1] } else { 1 };
            let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
            row.push(left.max(above) + rng.gen_range(0..3));
        }
        rows.push(row);
    }
    Tableau::new(rows).unwrap()
}

fn oracles() -> Outcome {
    let grids4 = tilings(4);
    for w in Permutation::all_of_size(4) {
        let fast: BTreeSet<Vec<(usize, usize)>> =
            enumerate_pd(&w).iter().map(|pd| pd.crosses().iter().copied().collect()).collect();
        ensure(fast == brute_force_pds(&w), || format!("{w}: pipe dream enumeration differs from brute force"))?;
        let fast: BTreeSet<Vec<String>> = enumerate_bpd_of_size(&w, 4).iter().map(Bpd::rows).collect();
        let slow: BTreeSet<Vec<String>> = grids4
            .iter()
            .filter_map(|g| Bpd::new(g.clone()).ok())
            .filter(|b| b.permutation() == w)
            .map(|b| b.rows())
            .collect();
        ensure(fast == slow, || format!("{w}: bumpless enumeration differs from brute force"))?;
    }

    const CASES: usize = 10_000;
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let s6 = Permutation::all_of_size(6);

    let mut droops = 0;
    while droops < CASES {
        let w = s6.choose(&mut rng).unwrap();
        let bpds = enumerate_bpd(w);
        let b = bpds.choose(&mut rng).unwrap();
        let Some(&(from, to)) = available_droops(b).choose(&mut rng) else { continue };
        let moved = droop(b, from, to).map_err(|e| e.to_string())?;
        ensure(undroop(&moved, to, from).as_ref() == Ok(b) && moved.permutation() == *w, || {
            format!("droop {from:?} -> {to:?} does not invert on\n{b}")
        })?;
        droops += 1;
    }

    // Almost bumpless pipe dreams whose bump pipes cross elsewhere: a 5 × 5
    // tiling with one doubly crossing pair, one of whose crossings is a bump.
    let grids5 = tilings(5);
    let mut swaps = 0;
    let mut pool = 0;
    while swaps < CASES {
        let grid = grids5.choose(&mut rng).unwrap();
        let crosses: Vec<(usize, usize)> = (1..=5)
            .flat_map(|r| (1..=5).map(move |c| (r, c)))
            .filter(|&(r, c)| grid[r - 1][c - 1] == Tile::Cross)
            .collect();
        let Some(&(r, c)) = crosses.choose(&mut rng) else { continue };
        let mut g = grid.clone();
        g[r - 1][c - 1] = Tile::Bump;
        let Ok(almost) = AlmostBpd::new(g) else { continue };
        pool += 1;
        let Ok((swapped, cross)) = cross_bump_swap(&almost, (r, c)) else { continue };
        let back = cross_bump_swap(&swapped, cross).map_err(|e| e.to_string())?;
        ensure(back == (almost.clone(), (r, c)) && swapped.permutation() == almost.permutation(), || {
            format!("cross-bump-swap at {:?} does not invert on\n{almost}", (r, c))
        })?;
        swaps += 1;
    }
    // and the swaps Huang bumps actually perform
    let mut in_bumps = 0;
    for w in Permutation::all_of_size(5) {
        for (i, j) in legal_pairs(&w) {
            for b in enumerate_bpd(&w) {
                for almost in huang_states(&b, i, j).map_err(|e| e.to_string())? {
                    let Some(cell) = almost.bump_cell() else { continue };
                    if let Ok((swapped, cross)) = cross_bump_swap(&almost, cell) {
                        ensure(cross_bump_swap(&swapped, cross).map_err(|e| e.to_string())? == (almost, cell), || {
                            "cross-bump-swap inside a Huang bump does not invert".into()
                        })?;
                        in_bumps += 1;
                    }
                }
            }
        }
    }

    for _ in 0..CASES {
        let tab = random_ssyt(&mut rng);
        let slid = jdt(&tab).map_err(|e| e.to_string())?;
        let back = jdt_inverse(&slid, &tab.shape(), tab.rows()[0][0]).map_err(|e| e.to_string())?;
        ensure(back == tab && slid.is_semistandard(), || format!("jdt does not invert on {tab}"))?;
    }
    Ok(format!(
        "S_4 enumerations match brute force; {droops} droops, {swaps} swaps ({pool} drawn, {in_bumps} more from Huang bumps on S_5), {CASES} jdt round trips"
    ))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("fixture fidelity", Duration::from_secs(1), Box::new(fixtures)),
        ("gamma = Q o phi on vexillary S_5", Duration::from_secs(60), Box::new(|| theorem(Theorem::Main, 5))),
        (
            "Q bijects PD(v) onto flagged tableaux, vexillary S_5",
            Duration::from_secs(60),
            Box::new(|| theorem(Theorem::Lenart, 5)),
        ),
        (
            "jdt(gamma(B)) = gamma(nabla B) on Grassmannian S_6",
            Duration::from_secs(120),
            Box::new(|| theorem(Theorem::HuangCor, 6)),
        ),
        (
            "L o phi = phi o H on S_4 with embedding",
            Duration::from_secs(120),
            Box::new(|| theorem(Theorem::Canonical, 4)),
        ),
        ("Q invariant under Little bumps on S_4", Duration::from_secs(120), Box::new(|| theorem(Theorem::Hy, 4))),
        ("LS(B) = Q(phi(B)) on S_4", Duration::from_secs(120), Box::new(|| theorem(Theorem::Recording, 4))),
        ("counting", Duration::from_secs(120), Box::new(counting)),
        ("Schubert polynomial agreement", Duration::from_secs(120), Box::new(schubert)),
        ("oracle equivalence and round trips", Duration::from_secs(600), Box::new(oracles)),
    ];
    let mut failed = 0;
    for (k, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if elapsed <= *budget {
                Ok(msg)
            } else {
                Err(format!("{msg}; took {elapsed:.2?}, budget {budget:?}"))
            }
        });
        match outcome {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} [{elapsed:.2?}]", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} [{elapsed:.2?}]", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
