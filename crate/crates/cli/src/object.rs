//! The JSON objects the CLI reads and writes, told apart by their keys.

use anyhow::{bail, Context};
use serde_json::Value;

use pipedream_core::pipedream::biword_to_pd;
use pipedream_core::render::{almost_bpd_tikz, bpd_tikz, pd_ascii, pd_tikz};
use pipedream_core::{
    AlmostBpd, Bpd, CompatibleSequence, InsertionPair, LsRecord, Permutation, PipeDream, PopResult, ReducedWord,
    SkewTableau, SparsePolynomial, Tableau,
};

pub enum Object {
    Perm(Permutation),
    Word(ReducedWord),
    Pd(PipeDream),
    Biword(CompatibleSequence),
    Bpd(Bpd),
    Almost(AlmostBpd),
    Tableau(Tableau),
    Skew(SkewTableau),
    Poly(SparsePolynomial),
    Pop(PopResult),
    Ls(LsRecord),
    Insertion(InsertionPair),
}

fn has(v: &Value, key: &str) -> bool {
    v.get(key).is_some()
}

impl Object {
    pub fn from_json(v: Value) -> anyhow::Result<Object> {
        use serde_json::from_value as de;
        let obj = if v.is_array() {
            Object::Word(de(v)?)
        } else if has(&v, "one_line") {
            Object::Perm(de(v)?)
        } else if has(&v, "crosses") {
            Object::Pd(de(v)?)
        } else if has(&v, "letters") {
            Object::Biword(de(v)?)
        } else if has(&v, "grid") {
            // A grid with a bump tile is only an almost bumpless pipe dream.
            match de::<Bpd>(v.clone()) {
                Ok(b) => Object::Bpd(b),
                Err(_) => Object::Almost(de(v)?),
            }
        } else if has(&v, "inner") {
            Object::Skew(de(v)?)
        } else if has(&v, "rows") {
            Object::Tableau(de(v)?)
        } else if has(&v, "terms") {
            Object::Poly(de(v)?)
        } else if has(&v, "next") {
            Object::Pop(de(v)?)
        } else if has(&v, "chain") {
            Object::Ls(de(v)?)
        } else if has(&v, "p_tableau") {
            Object::Insertion(de(v)?)
        } else {
            bail!("unrecognised object {v}");
        };
        Ok(obj)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Object::Perm(_) => "permutation",
            Object::Word(_) => "reduced word",
            Object::Pd(_) => "pipe dream",
            Object::Biword(_) => "biword",
            Object::Bpd(_) => "bumpless pipe dream",
            Object::Almost(_) => "almost bumpless pipe dream",
            Object::Tableau(_) => "tableau",
            Object::Skew(_) => "skew tableau",
            Object::Poly(_) => "polynomial",
            Object::Pop(_) => "pop result",
            Object::Ls(_) => "recording",
            Object::Insertion(_) => "insertion pair",
        }
    }

    pub fn to_json(&self) -> Value {
        use serde_json::to_value as ser;
        match self {
            Object::Perm(x) => ser(x),
            Object::Word(x) => ser(x),
            Object::Pd(x) => ser(x),
            Object::Biword(x) => ser(x),
            Object::Bpd(x) => ser(x),
            Object::Almost(x) => ser(x),
            Object::Tableau(x) => ser(x),
            Object::Skew(x) => ser(x),
            Object::Poly(x) => ser(x),
            Object::Pop(x) => ser(x),
            Object::Ls(x) => ser(x),
            Object::Insertion(x) => ser(x),
        }
        .expect("library types serialize")
    }

    /// Plain text picture, newline terminated.
    pub fn ascii(&self) -> String {
        match self {
            Object::Perm(w) => format!("{w}\n"),
            Object::Word(w) => {
                let letters: Vec<String> = w.letters().iter().map(|a| a.to_string()).collect();
                format!("{}\n", letters.join(" "))
            }
            Object::Pd(p) => pd_ascii(p),
            Object::Biword(c) => match biword_to_pd(c) {
                Ok(p) => format!("{c}\n{}", pd_ascii(&p)),
                Err(_) => format!("{c}\n"),
            },
            Object::Bpd(b) => b.to_string(),
            Object::Almost(b) => b.to_string(),
            Object::Tableau(t) => tableau_text(t),
            Object::Poly(p) => format!("{p}\n"),
            Object::Pop(p) => format!("({};{})\n{}", p.row, p.letter, p.next),
            Object::Ls(r) => tableau_text(&r.tableau),
            Object::Insertion(pair) => format!("{}\n{}", tableau_text(&pair.p_tableau), tableau_text(&pair.q_tableau)),
            Object::Skew(_) => format!("{}\n", self.to_json()),
        }
    }

    pub fn tikz(&self) -> Option<String> {
        match self {
            Object::Pd(p) => Some(pd_tikz(p)),
            Object::Biword(c) => biword_to_pd(c).ok().map(|p| pd_tikz(&p)),
            Object::Bpd(b) => Some(bpd_tikz(b)),
            Object::Almost(b) => Some(almost_bpd_tikz(b)),
            Object::Pop(p) => Some(bpd_tikz(&p.next)),
            _ => None,
        }
    }
}

/// One line per row, entries separated by spaces.
fn tableau_text(t: &Tableau) -> String {
    t.rows().iter().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ") + "\n").collect()
}

/// Every JSON value in `text`, in order.
pub fn parse_stream(text: &str) -> anyhow::Result<Vec<Object>> {
    let mut out = Vec::new();
    for (k, v) in serde_json::Deserializer::from_str(text).into_iter::<Value>().enumerate() {
        let v = v.with_context(|| format!("input object {} is not valid JSON", k + 1))?;
        out.push(Object::from_json(v).with_context(|| format!("input object {}", k + 1))?);
    }
    if out.is_empty() {
        bail!("no input objects");
    }
    Ok(out)
}
