//! Eigenvalue tables in the row = weight r, column = degree l layout.
//!
//! The corner cell names n, the first data column is l = 0 (all ones), the
//! first labelled row is r = 0 (the degrees), and later row labels are bare
//! weights. Columns are right-aligned and separated by two spaces; lines
//! end with LF. Golden files are byte-compared against exactly this
//! rendering.

use hamspec::krawtchouk::{kraw_eval, KrawtchoukParams};
use num_bigint::BigInt;

/// Largest n the table command accepts.
pub const TABLE_CAP: u32 = 64;

/// All eigenvalues lambda_l(r) = K_l^{n,2}(r) as an (n+1) x (n+1) grid,
/// rows indexed by r.
pub fn eigenvalue_grid(n: u32) -> Vec<Vec<BigInt>> {
    (0..=n)
        .map(|r| {
            (0..=n)
                .map(|ell| {
                    let params = KrawtchoukParams::new(n, 2, ell).expect("l <= n");
                    kraw_eval(&params, r).expect("r <= n")
                })
                .collect()
        })
        .collect()
}

/// The text rendering of [`eigenvalue_grid`] in the layout above.
pub fn render_table(n: u32) -> String {
    let grid = eigenvalue_grid(n);
    let mut cells: Vec<Vec<String>> = Vec::with_capacity(n as usize + 2);

    let mut header = vec![format!("n={n}"), "l=0".to_string()];
    header.extend((1..=n).map(|ell| ell.to_string()));
    cells.push(header);

    for (r, row) in grid.iter().enumerate() {
        let label = if r == 0 { "r=0".to_string() } else { r.to_string() };
        let mut line = vec![label];
        line.extend(row.iter().map(BigInt::to_string));
        cells.push(line);
    }

    let columns = n as usize + 2;
    let widths: Vec<usize> = (0..columns)
        .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(0))
        .collect();

    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, width)| format!("{cell:>width$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// CSV rendering: header `r,l=0,...,l=n`, one row per weight.
pub fn render_table_csv(n: u32) -> String {
    let grid = eigenvalue_grid(n);
    let mut out = String::from("r");
    for ell in 0..=n {
        out.push_str(&format!(",l={ell}"));
    }
    out.push('\n');
    for (r, row) in grid.iter().enumerate() {
        out.push_str(&r.to_string());
        for value in row {
            out.push(',');
            out.push_str(&value.to_string());
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_matches_known_small_table() {
        let grid = eigenvalue_grid(3);
        let expected: Vec<Vec<i64>> = vec![
            vec![1, 3, 3, 1],
            vec![1, 1, -1, -1],
            vec![1, -1, -1, 1],
            vec![1, -3, 3, -1],
        ];
        for (row, expected_row) in grid.iter().zip(&expected) {
            let as_i64: Vec<i64> = row.iter().map(|v| i64::try_from(v).unwrap()).collect();
            assert_eq!(&as_i64, expected_row);
        }
    }

    #[test]
    fn trivial_two_by_two() {
        let grid = eigenvalue_grid(1);
        assert_eq!(grid[0], vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(grid[1], vec![BigInt::from(1), BigInt::from(-1)]);
    }

    #[test]
    fn rendering_shape() {
        let text = render_table(3);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[0].starts_with("n=3"));
        assert!(lines[1].starts_with("r=0"));
        assert!(text.ends_with('\n'));
        assert!(!text.contains('\r'));
        for line in &lines {
            assert_eq!(line.trim_end(), *line, "no trailing whitespace");
        }
    }

    #[test]
    fn csv_has_header_and_all_rows() {
        let csv = render_table_csv(2);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "r,l=0,l=1,l=2");
        assert_eq!(lines[1], "0,1,2,1");
        assert_eq!(lines.len(), 4);
    }
}
