//! Rows transcribed from the worked examples, with misprints corrected
//! where noted.

pub const T_M1: &str = "x^2 + x*y + y^2 + x + y";
pub const T_P2: &str = "x^2*z^2 + 3*x*z^2 + y*z^2 + 3*z^2 + 2*x*z + 2*y*z + 5*z + y + 2";

/// `(A, ι', cr', ε, nl, rcd, x^ι' u^cr' y^ε v^nl z^rcd)` for P2 as printed.
/// Two rows are misprinted: ∅ swaps ι' and cr' (and reads x^2 z^2 for
/// u^2 z^2), and 2345 has rcd 1 against its monomial y.
pub const P2_ROWS_AS_PRINTED: [(&str, usize, usize, usize, usize, usize, &str); 32] = [
    ("", 2, 0, 0, 0, 2, "x^2*z^2"),
    ("1", 1, 1, 0, 0, 2, "x*u*z^2"),
    ("2", 1, 1, 0, 0, 2, "x*u*z^2"),
    ("3", 0, 1, 0, 0, 2, "u*z^2"),
    ("4", 0, 1, 0, 0, 2, "u*z^2"),
    ("5", 0, 1, 0, 0, 2, "u*z^2"),
    ("12", 2, 0, 0, 0, 2, "x^2*z^2"),
    ("13", 1, 0, 0, 0, 2, "x*z^2"),
    ("14", 1, 0, 0, 0, 2, "x*z^2"),
    ("15", 1, 0, 0, 0, 2, "x*z^2"),
    ("23", 0, 0, 1, 0, 2, "y*z^2"),
    ("24", 0, 1, 0, 0, 1, "u*z"),
    ("25", 0, 0, 0, 0, 2, "z^2"),
    ("34", 0, 0, 0, 0, 2, "z^2"),
    ("35", 0, 1, 0, 0, 1, "u*z"),
    ("45", 0, 0, 0, 0, 2, "z^2"),
    ("123", 0, 0, 0, 1, 2, "v*z^2"),
    ("124", 1, 0, 0, 0, 1, "x*z"),
    ("125", 0, 0, 0, 0, 1, "z"),
    ("134", 0, 0, 0, 0, 1, "z"),
    ("135", 1, 0, 0, 0, 1, "x*z"),
    ("145", 0, 0, 0, 0, 1, "z"),
    ("234", 0, 0, 1, 0, 1, "y*z"),
    ("235", 0, 0, 1, 0, 1, "y*z"),
    ("245", 0, 0, 0, 0, 1, "z"),
    ("345", 0, 0, 0, 0, 1, "z"),
    ("1234", 0, 0, 0, 1, 1, "v*z"),
    ("1235", 0, 0, 0, 1, 1, "v*z"),
    ("1245", 0, 0, 0, 0, 0, "1"),
    ("1345", 0, 0, 0, 0, 0, "1"),
    ("2345", 0, 0, 1, 0, 1, "y"),
    ("12345", 0, 0, 0, 1, 0, "v"),
];

pub fn p2_rows() -> Vec<(&'static str, usize, usize, usize, usize, usize, &'static str)> {
    P2_ROWS_AS_PRINTED
        .iter()
        .map(|&row| match row.0 {
            "" => ("", 0, 2, 0, 0, 2, "u^2*z^2"),
            "2345" => ("2345", 0, 0, 1, 0, 0, "y"),
            _ => row,
        })
        .collect()
}

/// `(A, Int, P, Ext, Q, x^ι u^cr y^ε v^nl)` for M1.
pub const M1_ACTIVITY_ROWS: [(&str, &str, &str, &str, &str, &str); 16] = [
    ("13", "13", "", "", "", "x^2"),
    ("23", "3", "", "1", "", "x*y"),
    ("34", "", "", "12", "", "y^2"),
    ("14", "1", "", "", "", "x"),
    ("24", "", "", "1", "", "y"),
    ("1", "1", "3", "", "", "x*u"),
    ("3", "3", "1", "", "", "x*u"),
    ("2", "", "3", "1", "", "u*y"),
    ("4", "", "1", "", "", "u"),
    ("123", "3", "", "", "1", "x*v"),
    ("134", "", "", "2", "1", "y*v"),
    ("234", "", "", "1", "2", "y*v"),
    ("124", "", "", "", "1", "v"),
    ("", "", "13", "", "", "u^2"),
    ("12", "", "3", "", "1", "u*v"),
    ("1234", "", "", "", "12", "v^2"),
];

/// Per-subset cells of the nine family columns for M1, in the order
/// (1) (2) (3) (3b) (3c) (3d) (3e) (4) (5); `None` marks an empty cell.
/// Corrected cells: family (3) at 123 reads x*y/4, and the y^2 of family
/// (3c) belongs to 1234 rather than 234.
pub const M1_FAMILY_ROWS: [(&str, [Option<&str>; 9]); 16] = [
    ("", [Some("x^2 - 2*x + 1"), None, Some("1/4*x^2"), Some("1/4*x^2"), Some("1/4*x^2"), Some("x^2 - 2*x + 1"), Some("x^2"), None, Some("x^2 - 2*x + 1")]),
    ("1", [Some("x - 1"), None, Some("1/4*x^2"), Some("1/4*x^2"), Some("1/4*x^2"), Some("x - 1"), None, None, Some("x - 1")]),
    ("2", [Some("x - 1"), None, Some("1/4*x*y"), Some("1/2*x"), None, Some("1/2*x*y - 1/2*y"), Some("1/2*x*y"), None, Some("x*y - y")]),
    ("3", [Some("x - 1"), None, Some("1/4*x^2"), Some("1/4*x^2"), Some("1/4*x^2"), Some("x - 1"), None, None, Some("x - 1")]),
    ("4", [Some("x - 1"), None, Some("1/2*x"), Some("1/2*x"), Some("1/2*x"), Some("x - 1"), Some("x"), None, Some("x - 1")]),
    ("12", [Some("x*y - x - y + 1"), None, Some("1/4*x*y"), Some("1/2*x*y - 1/2*x"), Some("1/2*x*y"), Some("1/2*x*y - 1/2*y"), Some("1/2*x*y"), None, None]),
    ("13", [Some("1"), Some("x^2"), Some("1/4*x^2"), Some("1/4*x^2"), Some("1/4*x^2"), Some("1"), None, Some("x^2"), Some("1")]),
    ("14", [Some("1"), Some("x"), Some("1/2*x"), Some("1/2*x"), Some("1/2*x"), Some("1"), None, Some("x"), Some("1")]),
    ("23", [Some("1"), Some("x*y"), Some("1/4*x*y"), Some("1/2*x"), None, Some("1/2*y"), None, Some("x"), Some("y")]),
    ("24", [Some("1"), Some("y"), Some("1/2*y"), Some("1"), None, Some("1/2*y"), Some("1/2*y"), Some("1"), Some("y")]),
    ("34", [Some("1"), Some("y^2"), Some("1/4*y^2"), Some("1"), None, Some("1/4*y^2"), Some("1/4*y^2"), Some("1"), Some("y^2")]),
    ("123", [Some("y - 1"), None, Some("1/4*x*y"), Some("1/2*x*y - 1/2*x"), Some("1/2*x*y"), Some("1/2*y"), None, Some("x*y - x"), None]),
    ("124", [Some("y - 1"), None, Some("1/2*y"), Some("y - 1"), Some("y"), Some("1/2*y"), Some("1/2*y"), Some("y - 1"), None]),
    ("134", [Some("y - 1"), None, Some("1/4*y^2"), Some("y - 1"), None, Some("1/4*y^2"), Some("1/4*y^2"), Some("y - 1"), None]),
    ("234", [Some("y - 1"), None, Some("1/4*y^2"), Some("y - 1"), None, Some("1/4*y^2"), Some("1/4*y^2"), Some("y - 1"), None]),
    ("1234", [Some("y^2 - 2*y + 1"), None, Some("1/4*y^2"), Some("y^2 - 2*y + 1"), Some("y^2"), Some("1/4*y^2"), Some("1/4*y^2"), Some("y^2 - 2*y + 1"), None]),
];

/// Dawson intervals of M1 as `(witness, bottom, top)`.
pub const M1_INTERVALS: [(&str, &str, &str); 5] =
    [("13", "", "13"), ("23", "2", "123"), ("34", "34", "1234"), ("14", "4", "14"), ("24", "24", "124")];

/// Interval sizes of P2 in the printed order.
pub const P2_INTERVAL_SIZES: [u64; 20] = [4, 2, 2, 2, 2, 1, 1, 1, 1, 1, 2, 2, 2, 2, 1, 1, 2, 1, 1, 1];
