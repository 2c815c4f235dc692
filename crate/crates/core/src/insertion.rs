//! Column Edelman-Greene insertion of reduced compatible sequences.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Cell;
use crate::pipedream::CompatibleSequence;
use crate::tableau::Tableau;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionPair {
    pub p_tableau: Tableau,
    pub q_tableau: Tableau,
}

/// Outcome of inserting into a single column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnInsert {
    pub column: Vec<usize>,
    /// Value to insert into the next column, if any.
    pub forwarded: Option<usize>,
    pub appended: bool,
}

/// Inserts `x` into the strictly increasing column `c`.
pub fn eg_insert_column(c: &[usize], x: usize) -> Result<ColumnInsert> {
    match c.last() {
        None => return Ok(ColumnInsert { column: vec![x], forwarded: None, appended: true }),
        Some(&last) if x > last => {
            let mut column = c.to_vec();
            column.push(x);
            return Ok(ColumnInsert { column, forwarded: None, appended: true });
        }
        Some(&last) if x == last => return Err(Error::UndefinedInsertion { value: x }),
        _ => {}
    }
    let k = c.iter().position(|&ck| x < ck).expect("x is below the last entry");
    if c[k] == x + 1 && k > 0 && c[k - 1] == x {
        return Ok(ColumnInsert { column: c.to_vec(), forwarded: Some(x + 1), appended: false });
    }
    if k > 0 && c[k - 1] == x {
        return Err(Error::UndefinedInsertion { value: x });
    }
    let mut column = c.to_vec();
    let bumped = std::mem::replace(&mut column[k], x);
    Ok(ColumnInsert { column, forwarded: Some(bumped), appended: false })
}

fn columns_of(t: &Tableau) -> Vec<Vec<usize>> {
    let width = t.rows().first().map_or(0, Vec::len);
    (0..width).map(|j| t.rows().iter().take_while(|row| row.len() > j).map(|row| row[j]).collect()).collect()
}

fn from_columns(cols: &[Vec<usize>]) -> Result<Tableau> {
    let height = cols.first().map_or(0, Vec::len);
    let rows = (0..height).map(|i| cols.iter().take_while(|col| col.len() > i).map(|col| col[i]).collect()).collect();
    Tableau::new(rows)
}

/// `T ↑ x`, together with the cell the insertion created.
pub fn eg_insert(t: &Tableau, x: usize) -> Result<(Tableau, Cell)> {
    let mut cols = columns_of(t);
    let cell = insert_into_columns(&mut cols, x)?;
    Ok((from_columns(&cols)?, cell))
}

fn insert_into_columns(cols: &mut Vec<Vec<usize>>, x: usize) -> Result<Cell> {
    let mut value = x;
    let mut j = 0;
    loop {
        if j == cols.len() {
            cols.push(Vec::new());
        }
        let step = eg_insert_column(&cols[j], value)?;
        cols[j] = step.column;
        if step.appended {
            return Ok((cols[j].len(), j + 1));
        }
        value = step.forwarded.expect("non-appending steps forward a value");
        j += 1;
    }
}

/// `(P̃, Q̃)`: insert the letters in order and record each row in the cell
/// its letter created.
pub fn eg_pq(c: &CompatibleSequence) -> Result<InsertionPair> {
    c.validate(None).map_err(Error::NotCompatible)?;
    let mut p_cols: Vec<Vec<usize>> = Vec::new();
    let mut q_rows: Vec<Vec<usize>> = Vec::new();
    for (r, a) in c.pairs() {
        let (i, j) = insert_into_columns(&mut p_cols, a)?;
        if q_rows.len() < i {
            q_rows.push(Vec::new());
        }
        debug_assert_eq!(q_rows[i - 1].len() + 1, j);
        q_rows[i - 1].push(r);
    }
    Ok(InsertionPair { p_tableau: from_columns(&p_cols)?, q_tableau: Tableau::new(q_rows)? })
}

pub fn q_tableau(c: &CompatibleSequence) -> Result<Tableau> {
    eg_pq(c).map(|pair| pair.q_tableau)
}
