//! Text and TikZ pictures of pipe dreams and bumpless pipe dreams.
//!
//! TikZ output places tile `(row, col)` of an `n`-grid at node
//! `(col - 1, n - row)` and uses the tile macros `\nowire`, `\vwire`,
//! `\hwire`, `\are`, `\jay`, `\cross` and `\bump`, with fallback definitions
//! so the snippet compiles on its own.

use std::fmt::Write;

use crate::bpd::{AlmostBpd, Bpd, Tile};
use crate::pipedream::PipeDream;

const MACROS: &str = r"\providecommand{\nowire}{\tikz[scale=0.4]\draw[gray!40] (-0.5,-0.5) rectangle (0.5,0.5);}
\providecommand{\vwire}{\tikz[scale=0.4]{\draw[gray!40] (-0.5,-0.5) rectangle (0.5,0.5); \draw[thick] (0,-0.5) -- (0,0.5);}}
\providecommand{\hwire}{\tikz[scale=0.4]{\draw[gray!40] (-0.5,-0.5) rectangle (0.5,0.5); \draw[thick] (-0.5,0) -- (0.5,0);}}
\providecommand{\are}{\tikz[scale=0.4]{\draw[gray!40] (-0.5,-0.5) rectangle (0.5,0.5); \draw[thick] (0,-0.5) arc (180:90:0.5);}}
\providecommand{\jay}{\tikz[scale=0.4]{\draw[gray!40] (-0.5,-0.5) rectangle (0.5,0.5); \draw[thick] (-0.5,0) arc (270:360:0.5);}}
\providecommand{\cross}{\tikz[scale=0.4]{\draw[gray!40] (-0.5,-0.5) rectangle (0.5,0.5); \draw[thick] (0,-0.5) -- (0,0.5); \draw[thick] (-0.5,0) -- (0.5,0);}}
\providecommand{\bump}{\tikz[scale=0.4]{\draw[gray!40] (-0.5,-0.5) rectangle (0.5,0.5); \draw[thick] (0,-0.5) arc (180:90:0.5); \draw[thick] (-0.5,0) arc (270:360:0.5);}}
";

fn macro_of(tile: Tile) -> &'static str {
    match tile {
        Tile::Blank => r"\nowire",
        Tile::Vertical => r"\vwire",
        Tile::Horizontal => r"\hwire",
        Tile::R => r"\are",
        Tile::J => r"\jay",
        Tile::Cross => r"\cross",
        Tile::Bump => r"\bump",
    }
}

fn tikz_grid(n: usize, tile: impl Fn(usize, usize) -> Option<Tile>) -> String {
    let mut out = String::from(MACROS);
    out.push_str("\\begin{tikzpicture}[scale=0.4]\n");
    for r in 1..=n {
        for c in 1..=n {
            if let Some(t) = tile(r, c) {
                writeln!(out, "\\node at ({},{}) {{{}}};", c - 1, n - r, macro_of(t)).unwrap();
            }
        }
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

pub fn bpd_ascii(b: &Bpd) -> String {
    b.to_string()
}

pub fn almost_bpd_ascii(b: &AlmostBpd) -> String {
    b.to_string()
}

pub fn bpd_tikz(b: &Bpd) -> String {
    tikz_grid(b.n(), |r, c| Some(b.tile((r, c))))
}

pub fn almost_bpd_tikz(b: &AlmostBpd) -> String {
    tikz_grid(b.n(), |r, c| Some(b.tile((r, c))))
}

/// Staircase rows: `+` for a cross, `.` for a bump tile. Row `i` has
/// `n + 1 - i` cells.
pub fn pd_ascii(p: &PipeDream) -> String {
    let n = p.n();
    let mut out = String::new();
    for i in 1..=n {
        let row: String = (1..=n + 1 - i).map(|j| if p.is_cross((i, j)) { '+' } else { '.' }).collect();
        out.push_str(&row);
        out.push('\n');
    }
    out
}

/// Crosses and bumps inside the staircase, with the corner tiles on the
/// anti-diagonal drawn as `\jay`.
pub fn pd_tikz(p: &PipeDream) -> String {
    let n = p.n();
    tikz_grid(n, |r, c| match r + c {
        s if s > n + 1 => None,
        s if s == n + 1 => Some(Tile::J),
        _ if p.is_cross((r, c)) => Some(Tile::Cross),
        _ => Some(Tile::Bump),
    })
}
