//! Published reference data: low-degree C- and S-polynomial tables, special
//! recursion relations and closed-form dimension formulas for the rank 1 to 3
//! algebras. Used by the verification suites and the acceptance tests.
//!
//! Entries are stored exactly as printed. Entries known to be misprinted carry
//! an erratum note; they are not compared coefficient-wise, the derived
//! polynomial is checked numerically instead.

use crate::genpoly::TableKind;
use crate::polyring::Polynomial;
use crate::rootsys::Weight;
use crate::{IntPoly, Result};
use num_bigint::BigInt;
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct PrintedEntry {
    pub weight: Weight,
    pub poly: IntPoly,
    /// Reason the printed value is not compared, if it is a known misprint.
    pub erratum: Option<&'static str>,
}

#[derive(Debug, Clone)]
pub struct PrintedTable {
    pub name: &'static str,
    pub algebra: &'static str,
    pub kind: TableKind,
    pub entries: Vec<PrintedEntry>,
}

struct Row {
    weight: &'static str,
    poly: &'static str,
    erratum: Option<&'static str>,
}

const fn ok(weight: &'static str, poly: &'static str) -> Row {
    Row {
        weight,
        poly,
        erratum: None,
    }
}

const fn bad(weight: &'static str, poly: &'static str, erratum: &'static str) -> Row {
    Row {
        weight,
        poly,
        erratum: Some(erratum),
    }
}

fn text_table(
    name: &'static str,
    algebra: &'static str,
    kind: TableKind,
    nvars: usize,
    rows: &[Row],
) -> Result<PrintedTable> {
    let entries = rows
        .iter()
        .map(|r| {
            Ok(PrintedEntry {
                weight: r.weight.parse()?,
                poly: Polynomial::parse(r.poly, nvars)?,
                erratum: r.erratum,
            })
        })
        .collect::<Result<_>>()?;
    Ok(PrintedTable {
        name,
        algebra,
        kind,
        entries,
    })
}

/// Column monomials of one coefficient block, then one row of coefficients per weight.
type Block<'a> = (&'a [&'a str], &'a [(&'a str, &'a [i64])]);

/// Tables printed as coefficient matrices: one column per monomial.
fn matrix_table(
    name: &'static str,
    algebra: &'static str,
    nvars: usize,
    blocks: &[Block],
) -> Result<PrintedTable> {
    let mut entries = Vec::new();
    for (columns, rows) in blocks {
        let monomials = columns
            .iter()
            .map(|c| Polynomial::parse(c, nvars))
            .collect::<Result<Vec<IntPoly>>>()?;
        for (weight, coeffs) in rows.iter() {
            let mut poly = IntPoly::zero(nvars);
            for (m, &c) in monomials.iter().zip(coeffs.iter()) {
                poly.add_scaled(m, &BigInt::from(c));
            }
            entries.push(PrintedEntry {
                weight: weight.parse()?,
                poly,
                erratum: None,
            });
        }
    }
    Ok(PrintedTable {
        name,
        algebra,
        kind: TableKind::C,
        entries,
    })
}

const G2_S_SWAPPED: &str = "printed with the two fundamental weights interchanged relative to the C-table";
const G2_S_NO_MATCH: &str = "equals no S_λ/S_ρ in range under either labeling (numerical substitution)";
const G2_C_NO_MATCH: &str = "contradicts the special recursion relations and represents no orbit function \
     (numerical substitution)";

/// All published polynomial tables.
pub fn printed_tables() -> Result<Vec<PrintedTable>> {
    Ok(vec![
        text_table(
            "A1 C-polynomials up to degree 8",
            "A1",
            TableKind::C,
            1,
            &[
                ok("2", "X^2 - 2"),
                ok("4", "X^4 - 4X^2 + 2"),
                ok("6", "X^6 - 6X^4 + 9X^2 - 2"),
                ok("8", "X^8 - 8X^6 + 20X^4 - 16X^2 + 2"),
                ok("1", "X"),
                ok("3", "X^3 - 3X"),
                ok("5", "X^5 - 5X^3 + 5X"),
                ok("7", "X^7 - 7X^5 + 14X^3 - 7X"),
            ],
        )?,
        text_table(
            "A1 S-polynomials up to degree 8",
            "A1",
            TableKind::S,
            1,
            &[
                ok("1", "1"),
                ok("3", "X^2 - 1"),
                ok("5", "X^4 - 3X^2 + 1"),
                ok("7", "X^6 - 5X^4 + 6X^2 - 1"),
                ok("2", "X"),
                ok("4", "X^3 - 2X"),
                ok("6", "X^5 - 4X^3 + 3X"),
                ok("8", "X^7 - 6X^5 + 10X^3 - 4X"),
            ],
        )?,
        text_table(
            "A2 C-polynomials up to degree 4",
            "A2",
            TableKind::C,
            2,
            &[
                ok("1,1", "X_1X_2 - 3"),
                ok("3,0", "X_1^3 - 3X_1X_2 + 3"),
                ok("2,2", "X_1^2X_2^2 - 2X_1^3 - 2X_2^3 + 4X_1X_2 - 3"),
                ok("1,0", "X_1"),
                ok("0,2", "X_2^2 - 2X_1"),
                ok("2,1", "X_1^2X_2 - 2X_2^2 - X_1"),
                ok("1,3", "X_1X_2^3 - 3X_1^2X_2 - X_2^2 + 5X_1"),
                ok("4,0", "X_1^4 - 4X_1^2X_2 + 2X_2^2 + 4X_1"),
            ],
        )?,
        text_table(
            "A2 S-polynomials up to degree 4",
            "A2",
            TableKind::S,
            2,
            &[
                ok("2,2", "X_1X_2 - 1"),
                ok("1,4", "X_2^3 - 2X_1X_2 + 1"),
                ok("3,3", "X_1^2X_2^2 - X_1^3 - X_2^3"),
                ok("2,1", "X_1"),
                ok("1,3", "X_2^2 - X_1"),
                ok("3,2", "X_1^2X_2 - X_2^2 - X_1"),
                bad("2,4", "X_1X_2^3 - 2X_1^2X_2 - X_2^2 + 2X_2", "contradicts the printed character expansion of (1,3)"),
                bad("5,1", "X_1^4 - 3X_1^2X_2 + X_2^2 + X_1 + X_2", "contradicts the printed character expansion of (4,0)"),
            ],
        )?,
        text_table(
            "C2 C-polynomials up to degree 4",
            "C2",
            TableKind::C,
            2,
            &[
                ok("0,1", "X_2"),
                ok("2,0", "X_1^2 - 2X_2 - 4"),
                ok("2,1", "X_1^2X_2 - 2X_2^2 - 6X_2"),
                ok("4,0", "4 - 4X_1^2 + X_1^4 + 8X_2 - 4X_1^2X_2 + 2X_2^2"),
                ok("0,2", "4 - 2X_1^2 + 4X_2 + X_2^2"),
                ok("0,3", "9X_2 - 3X_1^2X_2 + 6X_2^2 + X_2^3"),
                ok("2,2", "-8 + 10X_1^2 - 2X_1^4 - 20X_2 + 8X_1^2X_2 - 12X_2^2 + X_1^2X_2^2 - 2X_2^3"),
                ok("0,4", "4 - 8X_1^2 + 2X_1^4 + 16X_2 - 8X_1^2X_2 + 20X_2^2 - 4X_1^2X_2^2 + 8X_2^3 + X_2^4"),
                ok("1,0", "X_1"),
                ok("1,1", "X_1X_2 - 2X_1"),
                ok("3,0", "X_1^3 - 3X_1X_2 - 3X_1"),
                ok("3,1", "2X_1 - 4X_1X_2 + X_1^3X_2 - 3X_1X_2^2"),
                ok("1,2", "6X_1 - 2X_1^3 + 3X_1X_2 + X_1X_2^2"),
                ok("1,3", "-6X_1 + 2X_1^3 + 6X_1X_2 - 3X_1^3X_2 + 5X_1X_2^2 + X_1X_2^3"),
            ],
        )?,
        text_table(
            "C2 S-polynomials up to degree 4",
            "C2",
            TableKind::S,
            2,
            &[
                ok("1,2", "1 + X_2"),
                ok("3,1", "-2 + X_1^2 - X_2"),
                ok("1,3", "2 - X_1^2 + 3X_2 + X_2^2"),
                ok("3,2", "-1 - 3X_2 + X_1^2X_2 - X_2^2"),
                ok("1,4", "2 - X_1^2 + 7X_2 - 2X_1^2X_2 + 5X_2^2 + X_2^3"),
                ok("5,1", "3 - 4X_1^2 + X_1^4 + 4X_2 - 3X_1^2X_2 + X_2^2"),
                ok("3,3", "-3 + 4X_1^2 - X_1^4 - 7X_2 + 3X_1^2X_2 - 5X_2^2 + X_1^2X_2^2 - X_2^3"),
                ok("2,1", "X_1"),
                ok("2,2", "X_1X_2"),
                ok("4,1", "-3X_1 + X_1^3 - 2X_1X_2"),
                ok("2,3", "2X_1 - X_1^3 + 2X_1X_2 + X_1X_2^2"),
                ok("4,2", "-4X_1X_2 + X_1^3X_2 - 2X_1X_2^2"),
                ok("2,4", "5X_1X_2 - 2X_1^3X_2 + 4X_1X_2^2 + X_1X_2^3"),
            ],
        )?,
        text_table(
            "G2 C-polynomials with a+b at most 4",
            "G2",
            TableKind::C,
            2,
            &[
                ok("1,0", "X_1"),
                ok("0,1", "X_2"),
                ok("0,2", "-6 - 2X_1 - 2X_2 + X_2^2"),
                ok("1,1", "12 + 4X_1 + 2X_2 + X_1X_2 - 2X_2^2"),
                ok("1,2", "-12 - 10X_1 - 2X_1^2 - 4X_2 - 3X_1X_2 + 2X_2^2 + X_1X_2^2"),
                bad("0,3", "-12 - 12X_1 - 2X_1^2 - 3X_2 - 3X_1X_2 + 2X_2^2 + X_1X_2^2", G2_C_NO_MATCH),
                bad("2,0", "18 + 22X_1 + 5X_1^2 + 6X_2 + 6X_1X_2 - 4X_2^2 - 2X_1X_2^2", G2_C_NO_MATCH),
                bad("1,3", "-36 - 58X_1 - 22X_1^2 - 2X_1^3 - 12X_2 - 15X_1X_2 - 3X_1^2X_2 + 8X_2^2 + 6X_1X_2^2 + X_1^2X_2^2", G2_C_NO_MATCH),
                bad("0,4", "6 + 8X_1 + 2X_1^2 - 8X_2 - 10X_1X_2 - 2X_1^2X_2 - 4X_2^2 - 4X_1X_2^2 + 2X_2^3 + X_1X_2^3", G2_C_NO_MATCH),
                bad("2,1", "6X_1 + 2X_1^2 + 20X_2 + 24X_1X_2 + 5X_1^2X_2 + 6X_2^2 + 5X_1X_2^2 - 4X_2^3 - 2X_1X_2^3", G2_C_NO_MATCH),
                bad("1,4", "-12 - 4X_1 + 6X_1^2 + 2X_1^3 - 22X_2 - 33X_1X_2 - 15X_1^2X_2 - 2X_1^3X_2 - 4X_2^2 - 9X_1X_2^2 - 4X_1^2X_2^2 + 4X_2^3 + 4X_1X_2^3 + X_1^2X_2^3", G2_C_NO_MATCH),
                bad("3,0", "60 + 99X_1 + 48X_1^2 + 7X_1^3 + 18X_2 + 27X_1X_2 + 9X_1^2X_2 - 12X_2^2 - 12X_1X_2^2 - 3X_1^2X_2^2", G2_C_NO_MATCH),
                bad("2,2", "-108 - 156X_1 - 46X_1^2 - 2X_1^3 - 64X_2 - 60X_1X_2 + 9X_1^2X_2 + 5X_1^3X_2 + 32X_2^2 + 36X_1X_2^2 + 11X_1^2X_2^2 + 12X_2^3 + 6X_1X_2^3 - 2X_1^2X_2^3 - 4X_2^4 - 2X_1X_2^4", G2_C_NO_MATCH),
                bad("3,1", "108 + 150X_1 + 44X_1^2 + 2X_1^3 + 104X_2 + 135X_1X_2 + 34X_1^2X_2 + 2X_1^3X_2 - 20X_2^2 - 14X_1X_2^2 - 2X_1^2X_2^2 - 20X_2^3 - 16X_1X_2^3 - X_1^2X_2^3 + 4X_2^4 + 2X_1X_2^4", G2_C_NO_MATCH),
                bad("4,0", "198 + 400X_1 + 282X_1^2 + 84X_1^3 + 9X_1^4 + 240X_2 + 360X_1X_2 + 152X_1^2X_2 + 20X_1^3X_2 + 26X_2^2 + 28X_1X_2^2 - 8X_1^2X_2^2 - 4X_1^3X_2^2 - 52X_2^3 - 46X_1X_2^3 - 8X_1^2X_2^3 - 8X_2^4 - 8X_1X_2^4 + 4X_2^5 + 2X_1X_2^5", G2_C_NO_MATCH),
            ],
        )?,
        text_table(
            "G2 S-polynomials with a+b at most 5",
            "G2",
            TableKind::S,
            2,
            &[
                bad("2,1", "1 + X_1", G2_S_SWAPPED),
                bad("1,2", "2 + X_1 + X_2", G2_S_SWAPPED),
                bad("3,1", "21 + 24X_1 + 5X_1^2 + 7X_2 + 6X_1X_2 - 4X_2^2 - 2X_1X_2^2", G2_S_NO_MATCH),
                bad("2,2", "52 + 52X_1 + 10X_1^2 + 16X_2 + 13X_1X_2 - 10X_2^2 - 4X_1X_2^2", G2_S_NO_MATCH),
                bad("4,1", "113 + 151X_1 + 58X_1^2 + 7X_1^3 + 35X_2 + 40X_1X_2 + 9X_1^2X_2 - 22X_2^2 - 16X_1X_2^2 - 3X_1^2X_2^2", G2_S_NO_MATCH),
                bad("1,3", "107 + 148X_1 + 58X_1^2 + 7X_1^3 + 33X_2 + 40X_1X_2 + 9X_1^2X_2 - 21X_2^2 - 16X_1X_2^2 - 3X_1^2X_2^2", G2_S_NO_MATCH),
                bad("3,2", "249 + 332X_1 + 123X_1^2 + 14X_1^3 + 96X_2 + 111X_1X_2 + 23X_1^2X_2 - 43X_2^2 - 29X_1X_2^2 - 6X_1^2X_2^2 - 4X_2^3 - 2X_1X_2^3", G2_S_NO_MATCH),
                bad("2,3", "550 + 879X_1 + 463X_1^2 + 105X_1^3 + 9X_1^4 + 385X_2 + 533X_1X_2 + 189X_1^2X_2 + 20X_1^3X_2 - 11X_1X_2^2 - 32X_2^2 - 17X_1^2X_2^2 - 4X_1^3X_2^2 - 60X_2^3 - 50X_1X_2^3 - 8X_1^2X_2^3 - 8X_2^4 - 8X_1X_2^4 + 4X_2^5 + 2X_1X_2^5", G2_S_NO_MATCH),
                bad(
                    "1,4",
                    "651 + 1063X_1 + 543X_1^2 + 114X_1^3 + 9X_1^4 + 488X_2 + 679X_1X_2 + 232X_1^2X_2 + 22X_1^3X_2 - 32X_1X_2^2 - 51X_2^2 - 22X_1^2X_2^2 - 4X_1^3X_2^2 - 80X_2^3 - 66X_1X_2^3 - 9X_1^2X_2^3 - 4X_2^4 - 6X_1X_2^4 + 4X_2^5 + 2X_1X_2^5",
                    "printed as a second (4,1) entry, presumably (1,4); equals no S_λ/S_ρ in range",
                ),
            ],
        )?,
        text_table(
            "A3 C-polynomials",
            "A3",
            TableKind::C,
            3,
            &[
                ok("1,0,1", "-4 + X_1X_3"),
                ok("0,2,0", "2 - 2X_1X_3 + X_2^2"),
                ok("0,1,2", "4 - X_1X_3 - 2X_2^2 + X_2X_3^2"),
                ok("2,1,0", "4 - X_1X_3 + X_1^2X_2 - 2X_2^2"),
                ok("1,0,0", "X_1"),
                ok("0,1,1", "-3X_1 + X_2X_3"),
                ok("0,0,3", "3X_1 - 3X_2X_3 + X_3^3"),
                ok("2,0,1", "-X_1 - 2X_2X_3 + X_1^2X_3"),
                ok("1,2,0", "5X_1 - X_2X_3 - 2X_1^2X_3 + X_1X_2^2"),
                ok("0,1,0", "X_2"),
                ok("0,0,2", "-2X_2 + X_3^2"),
                ok("2,0,0", "-2X_2 + X_1^2"),
                ok("1,1,1", "4X_2 - 3X_3^2 - 3X_1^2 + X_1X_2X_3"),
                ok("0,0,1", "X_3"),
                ok("1,1,0", "-3X_3 + X_1X_2"),
                ok("3,0,0", "3X_3 - 3X_1X_2 + X_1^3"),
                ok("1,0,2", "-X_3 - 2X_1X_2 + X_1X_3^2"),
                ok("0,2,1", "5X_3 - X_1X_2 - 2X_1X_3^2 + X_2^2X_3"),
            ],
        )?,
        text_table(
            "A3 S-polynomials",
            "A3",
            TableKind::S,
            3,
            &[
                ok("2,1,2", "-1 + X_1X_3"),
                ok("1,3,1", "X_2^2 - X_1X_3"),
                ok("1,2,3", "1 - X_2^2 - X_1X_3 + X_2X_3^2"),
                ok("3,2,1", "1 + X_1^2X_2 - X_2^2 - X_1X_3"),
                ok("2,1,1", "X_1"),
                ok("1,2,2", "-X_1 + X_2X_3"),
                ok("1,1,4", "X_1 - 2X_2X_3 + X_3^3"),
                ok("3,1,2", "-X_1 + X_1^2X_3 - X_2X_3"),
                ok("2,3,1", "X_1 + X_1X_2^2 - X_1^2X_3 - X_2X_3"),
                ok("1,2,1", "X_2"),
                ok("1,1,3", "-X_2 + X_3^2"),
                ok("3,1,1", "X_1^2 - X_2"),
                ok("2,2,2", "-X_1^2 - X_3^2 + X_1X_2X_3"),
                ok("1,1,2", "X_3"),
                ok("2,2,1", "X_1X_2 - X_3"),
                bad("4,1,1", "X_1^3 - X_1X_2 + X_3", "contradicts the printed character expansion of (3,0,0)"),
                ok("2,1,3", "-X_1X_2 - X_3 + X_1X_3^2"),
                bad("1,3,2", "-X_1X_2 - X_3 - X_1X_3^2 + X_2^2X_3", "contradicts the printed character expansion of (0,2,1)"),
            ],
        )?,
        matrix_table(
            "B3 lowest C-polynomials",
            "B3",
            3,
            &[
                (
                    &["1", "u1", "u2", "u1^2", "u3^2", "u1u2", "u1u3^2", "u1^3", "u2^2", "u2u3^2", "u1^2u2"],
                    &[
                        ("0,0,0", &[1]),
                        ("1,0,0", &[0, 1]),
                        ("0,1,0", &[0, 0, 1]),
                        ("2,0,0", &[-6, 0, -2, 1]),
                        ("0,0,2", &[-8, -4, -2, 0, 1]),
                        ("1,1,0", &[24, 8, 6, 0, -3, 1]),
                        ("1,0,2", &[0, -8, -2, -4, 0, -2, 1]),
                        ("3,0,0", &[-24, -15, -6, 0, 3, -3, 0, 1]),
                        ("0,2,0", &[12, 16, 8, 4, 0, 4, -2, 0, 1]),
                        ("0,1,2", &[-48, -20, -20, 0, 6, -6, 0, 0, -2, 1]),
                        ("2,1,0", &[0, 8, -6, 4, 0, 2, -1, 0, -2, 0, 1]),
                    ],
                ),
                (
                    &["u3", "u1u3", "u2u3", "u3^3", "u1^2u3", "u1u2u3"],
                    &[
                        ("0,0,1", &[1]),
                        ("1,0,1", &[-3, 1]),
                        ("0,1,1", &[3, -2, 1]),
                        ("0,0,3", &[-9, -3, -3, 1]),
                        ("2,0,1", &[-3, -1, -2, 0, 1]),
                        ("1,1,1", &[30, 12, 8, -3, -2, 1]),
                    ],
                ),
            ],
        )?,
        matrix_table(
            "C3 lowest C-polynomials",
            "C3",
            3,
            &[
                (
                    &["1", "u2", "u1^2", "u1u3", "u2^2", "u1^2u2", "u3^2", "u1u2u3", "u2^3", "u2u3^2"],
                    &[
                        ("0,0,0", &[1]),
                        ("0,1,0", &[0, 1]),
                        ("2,0,0", &[-6, -2, 1]),
                        ("1,0,1", &[0, -2, 0, 1]),
                        ("0,2,0", &[12, 8, -4, -2, 1]),
                        ("2,1,0", &[0, -6, 0, -1, -2, 1]),
                        ("0,0,2", &[-8, -8, 4, 4, -2, 0, 1]),
                        ("1,1,1", &[0, 12, 0, -4, 4, -2, -3, 1]),
                        ("0,3,0", &[0, 9, 0, 3, 6, -3, 3, -3, 1]),
                        ("0,1,2", &[0, -18, 0, 3, -12, 6, 3, 3, -2, 1]),
                    ],
                ),
                (
                    &["u1", "u3", "u1u2", "u1^3", "u2u3", "u1^2u3", "u1u2^2", "u1u3^2", "u2^2u3", "u3^3"],
                    &[
                        ("1,0,0", &[1]),
                        ("0,0,1", &[0, 1]),
                        ("1,1,0", &[-4, -3, 1]),
                        ("3,0,0", &[-3, 3, -3, 1]),
                        ("0,1,1", &[4, 6, -2, 0, 1]),
                        ("2,0,1", &[0, -9, 0, 0, -2, 1]),
                        ("1,2,0", &[12, -3, 9, -4, -1, -2, 1]),
                        ("1,0,2", &[-12, -6, -6, 4, -1, 4, -2, 1]),
                        ("0,2,1", &[0, 27, 0, 0, 12, -6, 0, -2, 1]),
                        ("0,0,3", &[0, -27, 0, 0, -18, 9, 0, 6, -3, 1]),
                    ],
                ),
            ],
        )?,
    ])
}

/// Weights whose printed entry in a published table of this algebra and kind
/// is a known misprint, with the reason.
pub fn table_errata(algebra: &str, kind: TableKind) -> Result<BTreeMap<Weight, String>> {
    Ok(printed_tables()?
        .into_iter()
        .filter(|t| t.algebra == algebra && t.kind == kind)
        .flat_map(|t| t.entries)
        .filter_map(|e| e.erratum.map(|r| (e.weight, format!("printed value differs, {r}"))))
        .collect())
}

/// A printed recursion relation, possibly with symbolic weight coordinates
/// (single letters, optionally shifted: `a+1`, `b-2`).
#[derive(Debug, Clone, Copy)]
pub struct RecursionLine {
    pub algebra: &'static str,
    pub template: &'static str,
    /// Smallest admissible value of each symbolic coordinate.
    pub min: &'static [(char, i32)],
    pub erratum: Option<&'static str>,
}

impl RecursionLine {
    /// Concrete relations: the template at its minimal parameters and with
    /// each parameter raised by one.
    pub fn instances(&self) -> Vec<String> {
        let base: Vec<(char, i32)> = self.min.to_vec();
        let mut points = vec![base.clone()];
        for i in 0..base.len() {
            let mut p = base.clone();
            p[i].1 += 1;
            points.push(p);
        }
        points.iter().map(|p| substitute(self.template, p)).collect()
    }
}

fn substitute(template: &str, values: &[(char, i32)]) -> String {
    let mut out = String::with_capacity(template.len());
    let mut rest = template;
    while let Some(open) = rest.find("_{(") {
        out.push_str(&rest[..open + 3]);
        rest = &rest[open + 3..];
        let close = rest.find(")}").expect("unterminated weight in template");
        let coords: Vec<String> = rest[..close]
            .split(',')
            .map(|c| eval_coord(c.trim(), values).to_string())
            .collect();
        out.push_str(&coords.join(","));
        rest = &rest[close..];
    }
    out.push_str(rest);
    out
}

fn eval_coord(expr: &str, values: &[(char, i32)]) -> i32 {
    let mut chars = expr.chars();
    match chars.next() {
        Some(v) if v.is_ascii_alphabetic() => {
            let base = values
                .iter()
                .find(|(name, _)| *name == v)
                .unwrap_or_else(|| panic!("unbound coordinate `{v}` in template"))
                .1;
            let shift = chars.as_str();
            if shift.is_empty() {
                base
            } else {
                base + shift.parse::<i32>().expect("bad coordinate shift")
            }
        }
        _ => expr.parse().expect("bad coordinate"),
    }
}

const fn line(algebra: &'static str, template: &'static str, min: &'static [(char, i32)]) -> RecursionLine {
    RecursionLine {
        algebra,
        template,
        min,
        erratum: None,
    }
}

const fn typo(
    algebra: &'static str,
    template: &'static str,
    min: &'static [(char, i32)],
    reason: &'static str,
) -> RecursionLine {
    RecursionLine {
        algebra,
        template,
        min,
        erratum: Some(reason),
    }
}

const AB2: &[(char, i32)] = &[('a', 2), ('b', 2)];
const ABC2: &[(char, i32)] = &[('a', 2), ('b', 2), ('c', 2)];
const NONE: &[(char, i32)] = &[];

/// Printed special and generic recursion relations for products with a
/// single fundamental variable.
pub fn recursion_corpus() -> Vec<RecursionLine> {
    vec![
        // A2, C-functions
        line("A2", "X_1C_{(a,b)} = C_{(a+1,b)} + C_{(a-1,b+1)} + C_{(a,b-1)}", AB2),
        line("A2", "X_2C_{(a,b)} = C_{(a,b+1)} + C_{(a+1,b-1)} + C_{(a-1,b)}", AB2),
        line("A2", "X_1X_1 = C_{(2,0)} + 2X_2", NONE),
        line("A2", "X_2X_2 = C_{(0,2)} + 2X_1", NONE),
        line("A2", "X_1X_2 = C_{(1,1)} + 3", NONE),
        line("A2", "X_1C_{(1,1)} = C_{(2,1)} + 2C_{(0,2)} + 2X_1", NONE),
        line("A2", "X_2C_{(1,1)} = C_{(1,2)} + 2C_{(2,0)} + 2X_2", NONE),
        line("A2", "X_1C_{(a,1)} = C_{(a+1,1)} + C_{(a-1,2)} + 2C_{(a,0)}", &[('a', 2)]),
        line("A2", "X_2C_{(a,1)} = C_{(a,2)} + 2C_{(a+1,0)} + C_{(a-1,1)}", &[('a', 2)]),
        line("A2", "X_1C_{(a,0)} = C_{(a+1,0)} + C_{(a-1,1)}", &[('a', 2)]),
        line("A2", "X_2C_{(a,0)} = C_{(a,1)} + C_{(a-1,0)}", &[('a', 2)]),
        line("A2", "X_1C_{(1,b)} = C_{(2,b)} + 2C_{(0,b+1)} + C_{(1,b-1)}", &[('b', 2)]),
        line("A2", "X_2C_{(1,b)} = C_{(1,b+1)} + C_{(2,b-1)} + 2C_{(0,b)}", &[('b', 2)]),
        line("A2", "X_1C_{(0,b)} = C_{(1,b)} + C_{(0,b-1)}", &[('b', 2)]),
        line("A2", "X_2C_{(0,b)} = C_{(0,b+1)} + C_{(1,b-1)}", &[('b', 2)]),
        // A2, S-functions
        line("A2", "X_1S_{(a,b)} = S_{(a+1,b)} + S_{(a-1,b+1)} + S_{(a,b-1)}", AB2),
        line("A2", "X_2S_{(a,b)} = S_{(a,b+1)} + S_{(a+1,b-1)} + S_{(a-1,b)}", AB2),
        line("A2", "X_1S = S_{(2,1)}", NONE),
        line("A2", "X_2S = S_{(1,2)}", NONE),
        line("A2", "X_1S_{(1,2)} = S_{(2,2)} + S", NONE),
        line("A2", "X_2S_{(1,2)} = S_{(1,3)} + S_{(2,1)}", NONE),
        line("A2", "X_1S_{(2,1)} = S_{(3,1)} + S_{(1,2)}", NONE),
        line("A2", "X_2S_{(2,1)} = S_{(2,2)} + S", NONE),
        line("A2", "X_1S_{(3,1)} = S_{(4,1)} + S_{(2,2)}", NONE),
        line("A2", "X_2S_{(3,1)} = S_{(2,1)} + S_{(3,2)}", NONE),
        // C2, C-functions
        line("C2", "X_1C_{(a,b)} = C_{(a+1,b)} + C_{(a-1,b+1)} + C_{(a+1,b-1)} + C_{(a-1,b)}", AB2),
        line("C2", "X_2C_{(a,b)} = C_{(a,b+1)} + C_{(a+2,b-1)} + C_{(a-2,b+1)} + C_{(a,b-1)}", &[('a', 3), ('b', 2)]),
        line("C2", "X_1C_{(a,1)} = C_{(a+1,1)} + C_{(a-1,2)} + 2C_{(a+1,0)} + C_{(a-1,1)}", &[('a', 2)]),
        line("C2", "X_1C_{(a,0)} = C_{(a+1,0)} + C_{(a-1,1)} + C_{(a-1,0)}", &[('a', 2)]),
        line("C2", "X_1C_{(1,b)} = C_{(2,b)} + 2C_{(0,b+1)} + C_{(2,b-1)} + 2C_{(0,b)}", &[('b', 2)]),
        line("C2", "X_1C_{(0,b)} = C_{(1,b)} + C_{(1,b-1)}", &[('b', 2)]),
        line("C2", "X_1C_{(1,1)} = C_{(2,1)} + 2C_{(0,2)} + 2C_{(2,0)} + 2X_2", NONE),
        line("C2", "X_1X_2 = C_{(1,1)} + 2X_1", NONE),
        line("C2", "X_1X_1 = C_{(2,0)} + 2X_2 + 4", NONE),
        line("C2", "X_2C_{(a,1)} = C_{(a,2)} + 2C_{(a+2,0)} + C_{(a-2,2)} + 2C_{(a,0)}", &[('a', 3)]),
        line("C2", "X_2C_{(a,0)} = C_{(a,1)} + C_{(a-2,1)}", &[('a', 3)]),
        line("C2", "X_2C_{(2,b)} = C_{(2,b+1)} + C_{(4,b-1)} + 2C_{(0,b+1)} + C_{(2,b-1)}", &[('b', 2)]),
        line("C2", "X_2C_{(1,b)} = C_{(1,b+1)} + C_{(3,b-1)} + C_{(1,b-1)} + C_{(1,b)}", &[('b', 2)]),
        line("C2", "X_2C_{(0,b)} = C_{(0,b+1)} + C_{(2,b-1)} + C_{(0,b-1)}", &[('b', 2)]),
        typo("C2", "X_2C_{(2,1)} = C_{(2,2)} + 2C_{(4,0)} + C_{(0,4)} + 2C_{(0,2)} + 2C_{(2,0)}", NONE, "extra term C_{(0,4)}; the term count exceeds 4·8"),
        line("C2", "X_2C_{(1,1)} = C_{(1,2)} + 2C_{(3,0)} + C_{(1,1)} + 2X_1", NONE),
        line("C2", "X_2C_{(2,0)} = C_{(2,1)} + 2X_2", NONE),
        line("C2", "X_2X_2 = C_{(0,2)} + 2C_{(2,0)} + 4", NONE),
        // C2, S-functions
        typo("C2", "X_1S_{(a,b)} = S_{(a+1,b)} - S_{(a-1,b+1)} + S_{(a+1,b-1)} - S_{(a-1,b)}", AB2, "alternating signs; every neighbour of a generic weight is dominant, so all signs are +"),
        typo("C2", "X_2S_{(a,b)} = S_{(a,b+1)} - S_{(a+2,b-1)} + S_{(a-2,b+1)} - S_{(a,b-1)}", &[('a', 3), ('b', 2)], "alternating signs; every neighbour of a generic weight is dominant, so all signs are +"),
        line("C2", "X_1S_{(a,1)} = S_{(a+1,1)} + S_{(a-1,2)} + S_{(a-1,1)}", &[('a', 2)]),
        line("C2", "X_2S_{(a,1)} = S_{(a,2)} + S_{(a-2,2)}", &[('a', 3)]),
        line("C2", "X_2S_{(2,b)} = S_{(2,b+1)} + S_{(4,b-1)} + S_{(2,b-1)}", &[('b', 2)]),
        line("C2", "X_1S_{(1,b)} = S_{(2,b)} + S_{(2,b-1)}", &[('b', 2)]),
        line("C2", "X_2S_{(1,b)} = S_{(1,b+1)} + S_{(3,b-1)} + S_{(1,b-1)} - S_{(1,b)}", &[('b', 2)]),
        line("C2", "X_2S_{(2,1)} = S_{(2,2)}", NONE),
        line("C2", "X_1S = S_{(2,1)}", NONE),
        line("C2", "X_2S = S_{(1,2)} - S", NONE),
        // G2, C-functions
        line("G2", "X_1C_{(a,b)} = C_{(a+1,b)} + C_{(a-1,b+3)} + C_{(a+2,b-3)} + C_{(a-2,b+3)} + C_{(a+1,b-3)} + C_{(a-1,b)}", &[('a', 3), ('b', 4)]),
        line("G2", "X_2C_{(a,b)} = C_{(a,b+1)} + C_{(a+1,b-1)} + C_{(a-1,b+2)} + C_{(a+1,b-2)} + C_{(a-1,b+1)} + C_{(a,b-1)}", &[('a', 2), ('b', 3)]),
        line("G2", "X_1C_{(2,b)} = C_{(3,b)} + C_{(1,b+3)} + C_{(4,b-3)} + 2C_{(0,b+3)} + C_{(3,b-3)} + C_{(1,b)}", &[('b', 4)]),
        line("G2", "X_1C_{(1,b)} = C_{(2,b)} + 2C_{(0,b+3)} + C_{(3,b-3)} + C_{(2,b-3)} + C_{(1,b)} + 2C_{(0,b)}", &[('b', 4)]),
        line("G2", "X_1C_{(0,b)} = C_{(1,b)} + C_{(2,b-3)} + C_{(1,b-3)}", &[('b', 4)]),
        line("G2", "X_1C_{(a,3)} = C_{(a+1,3)} + C_{(a-1,6)} + 2C_{(a+2,0)} + C_{(a-2,6)} + 2C_{(a+1,0)} + C_{(a-1,3)}", &[('a', 3)]),
        line("G2", "X_1C_{(a,2)} = C_{(a+1,2)} + C_{(a-1,5)} + C_{(a+1,1)} + C_{(a-2,5)} + C_{(a,1)} + C_{(a-1,2)}", &[('a', 3)]),
        line("G2", "X_1C_{(a,1)} = C_{(a+1,1)} + C_{(a-1,4)} + C_{(a-2,4)} + C_{(a-1,1)} + C_{(a,2)} + C_{(a-1,2)}", &[('a', 3)]),
        line("G2", "X_1C_{(a,0)} = C_{(a+1,0)} + C_{(a-1,3)} + C_{(a-2,3)} + C_{(a-1,0)}", &[('a', 3)]),
        line("G2", "X_1C_{(2,3)} = C_{(3,3)} + C_{(1,6)} + 2C_{(4,0)} + 2C_{(0,6)} + 2C_{(3,0)} + C_{(1,3)}", NONE),
        typo("G2", "X_1C_{(2,2)} = C_{(3,2)} + C_{(1,5)} + C_{(0,5)} + C_{(1,2)} + C_{(2,1)} + C_{(3,1)}", NONE, "C_{(0,5)} has coefficient 2; the printed terms count 66 of 6·12"),
        line("G2", "X_1C_{(2,1)} = C_{(3,1)} + C_{(1,4)} + 2C_{(0,4)} + C_{(1,1)} + C_{(2,2)} + C_{(1,2)}", NONE),
        line("G2", "X_1C_{(2,0)} = C_{(3,0)} + C_{(1,3)} + 2C_{(0,3)} + X_1", NONE),
        line("G2", "X_1C_{(1,3)} = C_{(2,3)} + 2C_{(0,6)} + 2C_{(3,0)} + 2C_{(2,0)} + C_{(1,3)} + 2C_{(0,3)}", NONE),
        line("G2", "X_1C_{(1,2)} = C_{(2,2)} + 2C_{(0,5)} + C_{(1,2)} + 2C_{(0,2)} + C_{(2,1)} + C_{(1,1)}", NONE),
        line("G2", "X_1C_{(1,1)} = C_{(2,1)} + 2C_{(0,4)} + C_{(1,2)} + 2C_{(0,2)} + C_{(1,1)} + 2X_2", NONE),
        line("G2", "X_1C_{(0,3)} = C_{(1,3)} + 2C_{(2,0)} + 2X_1", NONE),
        line("G2", "X_1C_{(0,2)} = C_{(1,2)} + C_{(1,1)} + 2X_2", NONE),
        line("G2", "X_1X_1 = C_{(2,0)} + 2C_{(0,3)} + 2X_1 + 6", NONE),
        line("G2", "X_1X_2 = C_{(1,1)} + 2C_{(0,2)} + 2X_2", NONE),
        line("G2", "X_2C_{(1,b)} = C_{(1,b+1)} + C_{(2,b-1)} + 2C_{(0,b+2)} + C_{(2,b-2)} + 2C_{(0,b+1)} + C_{(1,b-1)}", &[('b', 3)]),
        line("G2", "X_2C_{(0,b)} = C_{(0,b+1)} + C_{(1,b-1)} + C_{(1,b-2)} + C_{(0,b-1)}", &[('b', 3)]),
        line("G2", "X_2C_{(a,1)} = C_{(a,2)} + 2C_{(a+1,0)} + C_{(a-1,3)} + C_{(a-1,2)} + 2C_{(a,0)} + C_{(a,1)}", &[('a', 2)]),
        line("G2", "X_2C_{(a,0)} = C_{(a,1)} + C_{(a-1,2)} + C_{(a-1,1)}", &[('a', 2)]),
        line("G2", "X_2C_{(1,2)} = C_{(1,3)} + C_{(2,1)} + 2C_{(0,4)} + 2C_{(0,3)} + C_{(1,1)} + 2C_{(2,0)}", NONE),
        line("G2", "X_2C_{(1,1)} = C_{(1,2)} + 2C_{(2,0)} + 2C_{(0,3)} + 2C_{(0,2)} + C_{(1,1)} + 2X_1", NONE),
        line("G2", "X_2C_{(0,2)} = C_{(0,3)} + C_{(1,1)} + 2X_1 + X_2", NONE),
        line("G2", "X_2X_2 = C_{(0,2)} + 2X_1 + 2X_2 + 6", NONE),
        // G2, S-functions
        line("G2", "X_1S_{(a,b)} = S_{(a+1,b)} + S_{(a-1,b+3)} + S_{(a+2,b-3)} + S_{(a-2,b+3)} + S_{(a+1,b-3)} + S_{(a-1,b)}", &[('a', 3), ('b', 4)]),
        line("G2", "X_2S_{(a,b)} = S_{(a,b+1)} + S_{(a+1,b-1)} + S_{(a-1,b+2)} + S_{(a+1,b-2)} + S_{(a-1,b+1)} + S_{(a,b-1)}", &[('a', 2), ('b', 3)]),
        // A3, C-functions
        line("A3", "X_1C_{(a,b,c)} = C_{(a+1,b,c)} + C_{(a-1,b+1,c)} + C_{(a,b-1,c+1)} + C_{(a,b,c-1)}", ABC2),
        line("A3", "X_2C_{(a,b,c)} = C_{(a,b+1,c)} + C_{(a+1,b-1,c+1)} + C_{(a-1,b,c+1)} + C_{(a+1,b,c-1)} + C_{(a-1,b+1,c-1)} + C_{(a,b-1,c)}", ABC2),
        line("A3", "X_3C_{(a,b,c)} = C_{(a,b,c+1)} + C_{(a,b+1,c-1)} + C_{(a+1,b-1,c)} + C_{(a-1,b,c)}", ABC2),
        line("A3", "X_1C_{(a,b,1)} = 2C_{(a,b,0)} + C_{(a+1,b,1)} + C_{(a-1,b+1,1)} + C_{(a,b-1,2)}", AB2),
        line("A3", "X_1C_{(a,b,0)} = C_{(a+1,b,0)} + C_{(a-1,b+1,0)} + C_{(a,b-1,1)}", AB2),
        line("A3", "X_1C_{(a,1,c)} = C_{(a+1,1,c)} + C_{(a-1,2,c)} + C_{(a,1,c-1)} + 2C_{(a,0,c+1)}", &[('a', 2), ('c', 2)]),
        line("A3", "X_1C_{(a,1,1)} = 2C_{(a,1,0)} + C_{(a+1,1,1)} + C_{(a-1,2,1)} + 2C_{(a,0,2)}", &[('a', 2)]),
        line("A3", "X_1C_{(a,1,0)} = C_{(a+1,1,0)} + C_{(a-1,2,0)} + 2C_{(a,0,1)}", &[('a', 2)]),
        line("A3", "X_1C_{(a,0,c)} = C_{(a+1,0,c)} + C_{(a-1,1,c)} + C_{(a,0,c-1)}", &[('a', 2), ('c', 2)]),
        line("A3", "X_1C_{(a,0,1)} = 3C_{(a,0,0)} + C_{(a+1,0,1)} + C_{(a-1,1,1)}", &[('a', 2)]),
        line("A3", "X_1C_{(a,0,0)} = C_{(a+1,0,0)} + C_{(a-1,1,0)}", &[('a', 2)]),
        line("A3", "X_1C_{(1,b,c)} = C_{(2,b,c)} + 2C_{(0,b+1,c)} + C_{(1,b,c-1)} + C_{(1,b-1,c+1)}", &[('b', 2), ('c', 2)]),
        line("A3", "X_1C_{(1,b,1)} = 2C_{(1,b,0)} + C_{(2,b,1)} + 2C_{(0,b+1,1)} + C_{(1,b-1,2)}", &[('b', 2)]),
        line("A3", "X_1C_{(1,b,0)} = 2C_{(0,b+1,0)} + C_{(2,b,0)} + C_{(1,b-1,1)}", &[('b', 2)]),
        line("A3", "X_1C_{(1,1,c)} = C_{(2,1,c)} + 2C_{(0,2,c)} + C_{(1,1,c-1)} + 2C_{(1,0,c+1)}", &[('c', 2)]),
        line("A3", "X_1C_{(1,1,1)} = 2C_{(1,1,0)} + C_{(2,1,1)} + 2C_{(0,2,1)} + 2C_{(1,0,2)}", NONE),
        line("A3", "X_1C_{(1,1,0)} = 2C_{(0,2,0)} + C_{(2,1,0)} + 2C_{(1,0,1)}", NONE),
        line("A3", "X_1C_{(1,0,c)} = C_{(2,0,c)} + 2C_{(0,1,c)} + C_{(1,0,c-1)}", &[('c', 2)]),
        line("A3", "X_1C_{(1,0,1)} = 3X_1 + 2C_{(0,1,1)} + C_{(2,0,1)}", NONE),
        line("A3", "X_1C_{(0,b,c)} = C_{(1,b,c)} + C_{(0,b,c-1)} + C_{(0,b-1,c+1)}", &[('b', 2), ('c', 2)]),
        line("A3", "X_1C_{(0,b,1)} = 2C_{(0,b,0)} + C_{(1,b,1)} + C_{(0,b-1,2)}", &[('b', 2)]),
        line("A3", "X_1C_{(0,b,0)} = C_{(1,b,0)} + C_{(0,b-1,1)}", &[('b', 2)]),
        line("A3", "X_1C_{(0,1,c)} = 2C_{(0,0,c+1)} + C_{(1,1,c)} + C_{(0,1,c-1)} + C_{(0,0,c+1)}", &[('c', 2)]),
        line("A3", "X_1C_{(0,1,1)} = 2X_2 + 3C_{(0,0,2)} + C_{(1,1,1)}", NONE),
        line("A3", "X_1C_{(0,0,c)} = C_{(1,0,c)} + C_{(0,0,c-1)}", &[('c', 2)]),
        line("A3", "X_1X_1 = C_{(2,0,0)} + 2X_2", NONE),
        line("A3", "X_1X_2 = C_{(1,1,0)} + 3X_3", NONE),
        line("A3", "X_1X_3 = 4 + C_{(1,0,1)}", NONE),
        line("A3", "X_2C_{(a,b,1)} = 2C_{(a+1,b,0)} + 2C_{(a-1,b+1,0)} + C_{(a,b-1,1)} + C_{(a,b+1,1)} + C_{(a-1,b,2)} + C_{(a+1,b-1,2)}", AB2),
        line("A3", "X_2C_{(a,b,0)} = C_{(a,b-1,0)} + C_{(a,b+1,0)} + C_{(a-1,b,1)} + C_{(a+1,b-1,1)}", AB2),
        line("A3", "X_2C_{(a,1,c)} = 2C_{(a,0,c)} + 2C_{(a+1,0,c+1)} + C_{(a-1,1,c+1)} + C_{(a-1,2,c-1)} + C_{(a+1,1,c-1)} + C_{(a,2,c)}", &[('a', 2), ('c', 2)]),
        line("A3", "X_2C_{(a,1,1)} = 2C_{(a+1,1,0)} + 2C_{(a-1,2,0)} + 2C_{(a,0,1)} + C_{(a,2,1)} + 2C_{(a+1,0,2)} + C_{(a-1,1,2)}", &[('a', 2)]),
        line("A3", "X_2C_{(a,1,0)} = 3C_{(a,0,0)} + C_{(a,2,0)} + 2C_{(a+1,0,1)} + C_{(a-1,1,1)}", &[('a', 2)]),
        typo("A3", "X_2C_{(a,0,c)} = C_{(a,1,c)} + C_{(a+1,0,c-1)} + C_{(a-1,2,c-1)} + C_{(a-1,0,c+1)}", &[('a', 2), ('c', 2)], "C_{(a-1,2,c-1)} should be C_{(a-1,1,c-1)}; (-1,2,-1) is not in the orbit of ω_2"),
        line("A3", "X_2C_{(a,0,1)} = 3C_{(a+1,0,0)} + 2C_{(a-1,1,0)} + C_{(a,1,1)} + C_{(a-1,0,2)}", &[('a', 2)]),
        line("A3", "X_2C_{(a,0,0)} = C_{(a,1,0)} + C_{(a-1,0,1)}", &[('a', 2)]),
        line("A3", "X_2C_{(1,b,c)} = C_{(1,b-1,c)} + C_{(1,b+1,c)} + C_{(2,b,c-1)} + 2C_{(0,b+1,c-1)} + 2C_{(0,b,c+1)} + C_{(2,b-1,c+1)}", &[('b', 2), ('c', 2)]),
        line("A3", "X_2C_{(1,b,1)} = 4C_{(0,b+1,0)} + 2C_{(2,b,0)} + C_{(1,b-1,1)} + C_{(1,b+1,1)} + 2C_{(0,b,2)} + C_{(2,b-1,2)}", &[('b', 2)]),
        line("A3", "X_2C_{(1,b,0)} = C_{(1,b-1,0)} + C_{(1,b+1,0)} + 2C_{(0,b,1)} + C_{(2,b-1,1)}", &[('b', 2)]),
        line("A3", "X_2C_{(1,1,c)} = 2C_{(1,0,c)} + C_{(1,2,c)} + C_{(2,1,c-1)} + 2C_{(0,2,c-1)} + 2C_{(2,0,c+1)} + 2C_{(0,1,c+1)}", &[('c', 2)]),
        line("A3", "X_2C_{(1,1,1)} = 4C_{(0,2,0)} + 2C_{(2,1,0)} + 2C_{(1,0,1)} + C_{(1,2,1)} + 2C_{(2,0,2)} + 2C_{(0,1,2)}", NONE),
        line("A3", "X_2C_{(1,1,0)} = 3X_1 + C_{(1,2,0)} + 2C_{(2,0,1)} + 2C_{(0,1,1)}", NONE),
        line("A3", "X_2C_{(1,0,c)} = 3C_{(0,0,c+1)} + C_{(1,1,c)} + C_{(2,0,c-1)} + 2C_{(0,1,c-1)}", &[('c', 2)]),
        typo("A3", "X_2C_{(1,0,1)} = 3C_{(2,0,0)} + 4C_{(0,2,0)} + 3C_{(0,0,2)} + C_{(1,1,1)}", NONE, "4C_{(0,2,0)} should be 4X_2; (0,2,0) is in the wrong congruence class"),
        line("A3", "X_2C_{(0,b,c)} = C_{(0,b-1,c)} + C_{(0,b+1,c)} + C_{(1,b,c-1)} + C_{(1,b-1,c+1)}", &[('b', 2), ('c', 2)]),
        line("A3", "X_2C_{(0,b,1)} = 2C_{(1,b,0)} + C_{(0,b-1,1)} + C_{(0,b+1,1)} + C_{(1,b-1,2)}", &[('b', 2)]),
        line("A3", "X_2C_{(0,b,0)} = C_{(0,b+1,0)} + C_{(1,b-1,1)} + C_{(0,b-1,0)}", &[('b', 2)]),
        line("A3", "X_2C_{(0,1,c)} = C_{(0,2,c)} + C_{(1,1,c-1)} + 2C_{(1,0,c+1)} + 3C_{(0,0,c)}", &[('c', 2)]),
        typo("A3", "X_2C_{(0,1,1)} = 2C_{(1,1,0)} + 3X_3 + C_{(0,2,1)} + 2C_{(1,2,0)}", NONE, "2C_{(1,2,0)} should be 2C_{(1,0,2)}; (1,2,0) is in the wrong congruence class"),
        line("A3", "X_2C_{(0,0,c)} = C_{(0,1,c)} + C_{(1,0,c-1)}", &[('c', 2)]),
        line("A3", "X_2X_2 = 6 + C_{(0,2,0)} + 2C_{(1,0,1)}", NONE),
        line("A3", "X_2X_3 = 3X_1 + C_{(0,1,1)}", NONE),
        line("A3", "X_3C_{(a,b,1)} = 2C_{(a,b+1,0)} + C_{(a-1,b,1)} + C_{(a+1,b-1,1)} + C_{(a,b,2)}", AB2),
        line("A3", "X_3C_{(a,b,0)} = C_{(a-1,b,0)} + C_{(a+1,b-1,0)} + C_{(a,b,1)}", AB2),
        line("A3", "X_3C_{(a,1,c)} = 2C_{(a+1,0,c)} + C_{(a-1,1,c)} + C_{(a,2,c-1)} + C_{(a,1,c+1)}", &[('a', 2), ('c', 2)]),
        line("A3", "X_3C_{(a,1,1)} = 2C_{(a,2,0)} + 2C_{(a+1,0,1)} + C_{(a-1,1,1)} + C_{(a,1,2)}", &[('a', 2)]),
        line("A3", "X_3C_{(a,1,0)} = 3C_{(a+1,0,0)} + C_{(a-1,1,0)} + C_{(a,1,1)}", &[('a', 2)]),
        line("A3", "X_3C_{(a,0,c)} = C_{(a-1,0,c)} + C_{(a,1,c-1)} + C_{(a,0,c+1)}", &[('a', 2), ('c', 2)]),
        line("A3", "X_3C_{(a,0,1)} = 2C_{(a,1,0)} + C_{(a-1,0,1)} + C_{(a,0,2)}", &[('a', 2)]),
        line("A3", "X_3C_{(a,0,0)} = C_{(a-1,0,0)} + C_{(a,0,1)}", &[('a', 2)]),
        line("A3", "X_3C_{(1,b,c)} = C_{(1,b,c+1)} + C_{(1,b+1,c-1)} + 2C_{(0,b,c)} + C_{(2,b-1,c)}", &[('b', 2), ('c', 2)]),
        line("A3", "X_3C_{(1,b,1)} = 2C_{(1,b+1,0)} + 2C_{(0,b,1)} + C_{(2,b-1,1)} + C_{(1,b,2)}", &[('b', 2)]),
        line("A3", "X_3C_{(1,b,0)} = 2C_{(0,b,0)} + C_{(2,b-1,0)} + C_{(1,b,1)}", &[('b', 2)]),
        line("A3", "X_3C_{(1,1,c)} = 2C_{(0,1,c)} + C_{(1,2,c-1)} + C_{(1,1,c+1)} + 2C_{(2,0,c)}", &[('c', 2)]),
        line("A3", "X_3C_{(1,1,1)} = 2C_{(1,2,0)} + 2C_{(2,0,1)} + 2C_{(0,1,1)} + C_{(1,1,2)}", NONE),
        line("A3", "X_3C_{(1,1,0)} = 3C_{(2,0,0)} + 2X_2 + C_{(1,1,1)}", NONE),
        typo("A3", "X_3C_{(1,0,c)} = 2C_{(0,0,c)} + C_{(1,1,c-1)}", &[('c', 2)], "top term C_{(1,0,c+1)} missing and C_{(0,0,c)} has coefficient 3"),
        line("A3", "X_3C_{(1,0,1)} = 2C_{(1,1,0)} + 3X_3 + C_{(1,0,2)}", NONE),
        line("A3", "X_3C_{(0,b,c)} = C_{(1,b-1,c)} + C_{(0,b+1,c-1)} + C_{(0,b,c+1)}", &[('b', 2), ('c', 2)]),
        typo("A3", "X_3C_{(0,b,1)} = 2C_{(0,b+1,0)} + C_{(1,b-1,1)} + C_{(0,1,2)}", &[('b', 2)], "top term printed as C_{(0,1,2)} instead of C_{(0,b,2)}"),
        line("A3", "X_3C_{(0,b,0)} = C_{(1,b-1,0)} + C_{(0,b,1)}", &[('b', 2)]),
        line("A3", "X_3C_{(0,1,c)} = C_{(1,0,c)} + C_{(0,2,c-1)} + C_{(0,1,c+1)} + C_{(1,0,c)}", &[('c', 2)]),
        line("A3", "X_3C_{(0,1,1)} = C_{(0,1,2)} + 2C_{(0,2,0)} + 2C_{(1,0,1)}", NONE),
        line("A3", "X_3C_{(0,0,c)} = C_{(0,0,c+1)} + C_{(0,1,c-1)}", &[('c', 2)]),
        line("A3", "X_3X_3 = C_{(0,0,2)} + 2X_2", NONE),
        // A3, S-functions
        line("A3", "X_1S_{(a,b,c)} = S_{(a+1,b,c)} + S_{(a-1,b+1,c)} + S_{(a,b-1,c+1)} + S_{(a,b,c-1)}", ABC2),
        line("A3", "X_2S_{(a,b,c)} = S_{(a,b+1,c)} + S_{(a+1,b-1,c+1)} + S_{(a-1,b,c+1)} + S_{(a+1,b,c-1)} + S_{(a-1,b+1,c-1)} + S_{(a,b-1,c)}", ABC2),
        line("A3", "X_3S_{(a,b,c)} = S_{(a,b,c+1)} + S_{(a,b+1,c-1)} + S_{(a+1,b-1,c)} + S_{(a-1,b,c)}", ABC2),
        // B3 and C3 generic relations
        line("B3", "X_1C_{(a,b,c)} = C_{(a+1,b,c)} + C_{(a-1,b+1,c)} + C_{(a,b-1,c+2)} + C_{(a,b+1,c-2)} + C_{(a+1,b-1,c)} + C_{(a-1,b,c)}", &[('a', 2), ('b', 2), ('c', 3)]),
        // Printed for a >= 2, but at a = 2 the term C_{(a-2,b+1,c)} lies on a wall
        // and its coefficient doubles, so the generic range starts at a = 3.
        line("B3", "X_2C_{(a,b,c)} = C_{(a,b+1,c)} + C_{(a+1,b-1,c+2)} + C_{(a-1,b,c+2)} + C_{(a+1,b+1,c-2)} + C_{(a-1,b+2,c-2)} + C_{(a+2,b-1,c)} + C_{(a+1,b-2,c+2)} + C_{(a-2,b+1,c)} + C_{(a-1,b-1,c+2)} + C_{(a+1,b,c-2)} + C_{(a-1,b+1,c-2)} + C_{(a,b-1,c)}", &[('a', 3), ('b', 3), ('c', 3)]),
        typo(
            "B3",
            "X_3C_{(a,b,c)} = C_{(a,b,c+1)} + C_{(a,b+1,c-1)} + C_{(a+1,b-1,c+1)} + C_{(a-1,b,c+1)} - C_{(a+1,b,c-1)} + C_{(a-1,b+1,c-1)} + C_{(a,b-1,c+1)} + C_{(a,b,c-1)}",
            ABC2,
            "negative coefficient; a product of C-functions has only positive terms",
        ),
        line("C3", "X_1C_{(a,b,c)} = C_{(a+1,b,c)} + C_{(a-1,b+1,c)} + C_{(a,b-1,c+1)} + C_{(a,b+1,c-1)} + C_{(a+1,b-1,c)} + C_{(a-1,b,c)}", ABC2),
        typo("C3", "X_2C_{(a,b,c)} = C_{(a,b+1,c)} + C_{(a+1,b-1,c)} + C_{(a-1,b,c+1)} + C_{(a+1,b+1,c-1)} + C_{(a-1,b+2,c-1)} + C_{(a+2,b-1,c)} + C_{(a+1,b-2,c+1)} + C_{(a-2,b+1,c)} + C_{(a+1,b,c-1)} + C_{(a-1,b-1,c+1)} + C_{(a-1,b+1,c-1)} + C_{(a,b-1,c)}", &[('a', 3), ('b', 3), ('c', 2)], "C_{(a+1,b-1,c)} should be C_{(a+1,b-1,c+1)}; (1,-1,0) is not in the orbit of ω_2"),
        line("C3", "X_3C_{(a,b,c)} = C_{(a,b,c+1)} + C_{(a,b+2,c-1)} + C_{(a+2,b-2,c+1)} + C_{(a-2,b,c+1)} + C_{(a+2,b,c-1)} + C_{(a-2,b+2,c-1)} + C_{(a,b-2,c+1)} + C_{(a,b,c-1)}", &[('a', 3), ('b', 3), ('c', 2)]),
    ]
}

/// A printed closed-form dimension formula `numerator / denominator`.
#[derive(Debug, Clone, Copy)]
pub struct DimensionFormula {
    pub algebra: &'static str,
    pub text: &'static str,
    pub denominator: i128,
    pub numerator: fn(&[i128]) -> i128,
    pub erratum: Option<&'static str>,
}

impl DimensionFormula {
    /// The printed value; `None` when it is not an integer.
    pub fn eval(&self, weight: &Weight) -> Option<i128> {
        let coords: Vec<i128> = weight.0.iter().map(|&x| x as i128).collect();
        let num = (self.numerator)(&coords);
        (num % self.denominator == 0).then_some(num / self.denominator)
    }
}

/// Printed dimension formulas in the coordinates `(a, b[, c])` of the
/// highest weight.
pub fn dimension_formulas() -> Vec<DimensionFormula> {
    vec![
        DimensionFormula {
            algebra: "A2",
            text: "(1/2)(a+1)(b+1)(a+b+2)",
            denominator: 2,
            numerator: |w| (w[0] + 1) * (w[1] + 1) * (w[0] + w[1] + 2),
            erratum: None,
        },
        DimensionFormula {
            algebra: "C2",
            text: "(1/6)(a+1)(b+1)(2a+b+3)(a+b+2)",
            denominator: 6,
            numerator: |w| (w[0] + 1) * (w[1] + 1) * (2 * w[0] + w[1] + 3) * (w[0] + w[1] + 2),
            erratum: Some(
                "the two fundamental weights are interchanged; the formula gives 5 for the 4-dimensional (1,0)",
            ),
        },
        DimensionFormula {
            algebra: "G2",
            text: "(1/120)(a+1)(b+1)(a+b+2)(2a+b+3)(3a+b+4)(3a+2b+5)",
            denominator: 120,
            numerator: |w| {
                let (a, b) = (w[0], w[1]);
                (a + 1) * (b + 1) * (a + b + 2) * (2 * a + b + 3) * (3 * a + b + 4) * (3 * a + 2 * b + 5)
            },
            erratum: None,
        },
        DimensionFormula {
            algebra: "A3",
            text: "(1/12)(a+1)(b+1)(c+1)(a+b+2)(b+c+2)(a+b+c+3)",
            denominator: 12,
            numerator: |w| {
                let (a, b, c) = (w[0], w[1], w[2]);
                (a + 1) * (b + 1) * (c + 1) * (a + b + 2) * (b + c + 2) * (a + b + c + 3)
            },
            erratum: None,
        },
        DimensionFormula {
            algebra: "B3",
            text: "(1/720)(a+1)(b+1)(c+1)(a+b+2)(2b+c+3)(2a+2b+5)(b+c+2)(a+b+c+3)(a+2b+c+4)",
            denominator: 720,
            numerator: |w| {
                let (a, b, c) = (w[0], w[1], w[2]);
                (a + 1)
                    * (b + 1)
                    * (c + 1)
                    * (a + b + 2)
                    * (2 * b + c + 3)
                    * (2 * a + 2 * b + 5)
                    * (b + c + 2)
                    * (a + b + c + 3)
                    * (a + 2 * b + c + 4)
            },
            erratum: Some("the factor (2a+2b+5) lacks c; the formula gives 20/3 for the spin representation (0,0,1)"),
        },
        DimensionFormula {
            algebra: "C3",
            text: "(1/720)(a+1)(b+1)(c+1)(a+b+2)(b+2c+3)(a+b+2c+4)(b+c+2)(a+2b+2c+5)(a+b+c+3)",
            denominator: 720,
            numerator: |w| {
                let (a, b, c) = (w[0], w[1], w[2]);
                (a + 1)
                    * (b + 1)
                    * (c + 1)
                    * (a + b + 2)
                    * (b + 2 * c + 3)
                    * (a + b + 2 * c + 4)
                    * (b + c + 2)
                    * (a + 2 * b + 2 * c + 5)
                    * (a + b + c + 3)
            },
            erratum: None,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitute_shifts() {
        assert_eq!(
            substitute("X_1C_{(a,b)} = C_{(a+1,b)} + 2C_{(a-1, 3)}", &[('a', 2), ('b', 5)]),
            "X_1C_{(2,5)} = C_{(3,5)} + 2C_{(1,3)}"
        );
    }

    #[test]
    fn instances_cover_minimum_and_steps() {
        let l = line("A2", "X_1C_{(a,b)} = C_{(a+1,b)}", AB2);
        assert_eq!(
            l.instances(),
            [
                "X_1C_{(2,2)} = C_{(3,2)}",
                "X_1C_{(3,2)} = C_{(4,2)}",
                "X_1C_{(2,3)} = C_{(3,3)}"
            ]
        );
    }

    #[test]
    fn matrix_rows_expand() {
        let tables = printed_tables().unwrap();
        let b3 = tables.iter().find(|t| t.algebra == "B3").unwrap();
        let e = b3.entries.iter().find(|e| e.weight == Weight::from([0, 0, 2])).unwrap();
        assert_eq!(e.poly, Polynomial::parse("X_3^2 - 2X_2 - 4X_1 - 8", 3).unwrap());
    }

    #[test]
    fn formulas_handle_non_integers() {
        let b3 = dimension_formulas().into_iter().find(|f| f.algebra == "B3").unwrap();
        assert_eq!(b3.eval(&Weight::from([0, 0, 1])), None);
        assert_eq!(b3.eval(&Weight::from([1, 0, 0])), Some(7));
    }
}
