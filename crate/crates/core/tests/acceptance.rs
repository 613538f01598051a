//! Acceptance suite: reproduces the published degree tables and sequences
//! exactly and runs the verification properties, one test per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see one
//! pass/fail line per criterion.

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use rankloci::chow::GrassmannContext;
use rankloci::degrees::{d_diag, d_mix, d_onerow, d_rows, degree_from_blocks, degree_table};
use rankloci::oracle::{cross_check, golden_checks};
use rankloci::patterns::{BlockShape, Pattern};
use BlockShape::{Col, Corner, Row, Square};

fn table_for(n: u32, shapes: &[BlockShape]) -> Vec<BigInt> {
    (1..=n)
        .map(|r| degree_from_blocks(GrassmannContext::for_rank(n, r), shapes))
        .collect()
}

fn as_bigints(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

fn assert_under(budget: Duration, elapsed: Duration, what: &str) {
    assert!(
        elapsed < budget,
        "{} took {:?}, budget {:?}",
        what,
        elapsed,
        budget
    );
}

#[test]
fn criterion_01_single_row_table() {
    let start = Instant::now();
    let got = table_for(7, &[Row(3)]);
    let elapsed = start.elapsed();
    assert_eq!(got, as_bigints(&[896, 15582, 11172, 490, 0, 0, 0]));
    assert_under(Duration::from_millis(500), elapsed, "single-row table");
    println!("criterion 1 (single-row table, {:?}): PASS", elapsed);
}

#[test]
fn criterion_02_multi_row_table() {
    let start = Instant::now();
    let got = table_for(7, &[Row(3), Row(2), Row(1), Row(1)]);
    let elapsed = start.elapsed();
    assert_eq!(got, as_bigints(&[887, 13957, 5990, 35, 0, 0, 0]));
    assert_under(Duration::from_millis(500), elapsed, "multi-row table");
    println!("criterion 2 (multi-row table, {:?}): PASS", elapsed);
}

#[test]
fn criterion_03_corner_tables() {
    let start = Instant::now();
    let got7 = table_for(7, &[Corner]);
    let got8 = table_for(8, &[Corner]);
    let elapsed = start.elapsed();
    assert_eq!(got7, as_bigints(&[912, 17303, 15218, 1001, 6, 0, 0]));
    assert_eq!(
        got8,
        as_bigints(&[3418, 217007, 592956, 118188, 2548, 7, 0, 0])
    );
    assert_under(Duration::from_secs(2), elapsed, "corner tables");
    println!("criterion 3 (corner tables n=7,8, {:?}): PASS", elapsed);
}

#[test]
fn criterion_04_three_corners_from_grid() {
    // six diagonal and three subdiagonal entries: three corner blocks
    let grid = "\
X......
XX.....
..X....
..XX...
....X..
....XX.
.......
";
    let ladder = Pattern::parse_grid(grid).unwrap();
    let shapes = ladder.shapes().unwrap();
    assert_eq!(shapes, vec![Corner, Corner, Corner]);

    let table = degree_table(7, &ladder).unwrap();
    let got: Vec<BigInt> = table.entries().map(|(_, d)| d.clone()).collect();
    assert_eq!(got, as_bigints(&[888, 13395, 4078, 2, 0, 0, 0]));

    // the single degree highlighted by the timing experiment
    let start = Instant::now();
    let single = degree_from_blocks(GrassmannContext::for_rank(7, 2), &shapes);
    let elapsed = start.elapsed();
    assert_eq!(single, BigInt::from(13395));
    assert_under(Duration::from_millis(100), elapsed, "single corner degree");
    println!("criterion 4 (three corners via decompose, {:?}): PASS", elapsed);
}

#[test]
fn criterion_05_square_and_mixed_patterns() {
    let square = table_for(7, &[Square]);
    assert_eq!(square, as_bigints(&[887, 14701, 9478, 371, 1, 0, 0]));

    // corner, two-entry column, two-entry row, corner
    let mixed = Pattern::parse_cells("1,1;2,1;2,2;3,3;4,3;5,4;5,5;6,6;7,6;7,7").unwrap();
    assert_eq!(mixed.shapes().unwrap(), vec![Corner, Col(2), Row(2), Corner]);
    let table = degree_table(7, &mixed).unwrap();
    let got: Vec<BigInt> = table.entries().map(|(_, d)| d.clone()).collect();
    assert_eq!(got, as_bigints(&[886, 12967, 3102, 0, 0, 0, 0]));

    // two-entry column, two-entry row, corner, square along the diagonal
    let ladder = Pattern::parse_cells("1,1;2,1;3,2;3,3;4,4;5,4;5,5;6,6;6,7;7,6;7,7").unwrap();
    assert_eq!(
        ladder.shapes().unwrap(),
        vec![Col(2), Row(2), Corner, Square]
    );
    let table = degree_table(7, &ladder).unwrap();
    let got: Vec<BigInt> = table.entries().map(|(_, d)| d.clone()).collect();
    assert_eq!(got, as_bigints(&[861, 10701, 1424, 0, 0, 0, 0]));

    println!("criterion 5 (square and mixed patterns): PASS");
}

#[test]
fn criterion_06_mixed_rows_columns() {
    let via_mix: Vec<BigInt> = (1..=6).map(|r| d_mix(6, r, &[2, 2], &[2, 2])).collect();
    assert_eq!(via_mix, as_bigints(&[228, 734, 8, 0, 0, 0]));
    let via_blocks = table_for(6, &[Row(2), Row(2), Col(2), Col(2)]);
    assert_eq!(via_blocks, via_mix);
    println!("criterion 6 (mixed rows/columns n=6): PASS");
}

#[test]
fn criterion_07_diagonal_closed_form() {
    assert_eq!(d_diag(4, 2, 4), BigInt::from(2));
    assert_eq!(d_diag(9, 6, 9), BigInt::from(42));

    // full-diagonal multiplicities at s = k^2 for k = 1..4
    let start = Instant::now();
    let got: Vec<BigInt> = [(1u32, 1u32), (2, 4), (3, 9), (4, 16)]
        .iter()
        .map(|&(k, n)| d_diag(n, n - k, k * k))
        .collect();
    let elapsed = start.elapsed();
    assert_eq!(got, as_bigints(&[1, 2, 42, 24024]));
    assert_under(Duration::from_secs(60), elapsed, "k=4 diagonal");

    // stretch value at k = 5
    assert_eq!(d_diag(25, 20, 25), BigInt::from(701149020));
    println!("criterion 7 (diagonal closed form, {:?}): PASS", elapsed);
}

#[test]
fn criterion_08_benzenoid_tables() {
    let b2: Vec<BigInt> = (1..=10).map(|a| d_onerow(a + 2, a, 0)).collect();
    assert_eq!(
        b2,
        as_bigints(&[6, 20, 50, 105, 196, 336, 540, 825, 1210, 1716])
    );

    let b3: Vec<BigInt> = (1..=10).map(|a| d_onerow(a + 3, a, 1)).collect();
    assert_eq!(
        b3,
        as_bigints(&[
            19, 155, 805, 3136, 9996, 27468, 67320, 150645, 313027, 611611
        ])
    );

    let expected: [[i64; 8]; 4] = [
        [1, 20, 175, 980, 4116, 14112, 41580, 108900],
        [1, 19, 155, 805, 3136, 9996, 27468, 67320],
        [1, 16, 110, 490, 1666, 4704, 11592, 25740],
        [1, 10, 50, 175, 490, 1176, 2520, 4950],
    ];
    for (l, row) in expected.iter().enumerate() {
        let got: Vec<BigInt> = (3..=10).map(|n| d_onerow(n, n - 3, l as u32)).collect();
        assert_eq!(got, as_bigints(row), "corank-3 row table, l={}", l);
    }
    println!("criterion 8 (benzenoid tables): PASS");
}

#[test]
fn criterion_09_corank3_sequences() {
    let unit5: Vec<BigInt> = (5..=11).map(|n| d_rows(n, n - 3, &[1; 5])).collect();
    assert_eq!(
        unit5,
        as_bigints(&[85, 295, 771, 1681, 3235, 5685, 9325])
    );

    let rows23: Vec<BigInt> = (5..=11).map(|n| d_rows(n, n - 3, &[2, 3])).collect();
    assert_eq!(rows23, as_bigints(&[25, 65, 140, 266, 462, 750, 1155]));

    let row2col2: Vec<BigInt> = (4..=10).map(|n| d_mix(n, n - 3, &[2], &[2])).collect();
    assert_eq!(
        row2col2,
        as_bigints(&[12, 60, 200, 525, 1176, 2352, 4320])
    );

    let row2col3: Vec<BigInt> = (4..=10).map(|n| d_mix(n, n - 3, &[2], &[3])).collect();
    assert_eq!(row2col3, as_bigints(&[6, 20, 50, 105, 196, 336, 540]));

    let corner: Vec<BigInt> = (3..=9)
        .map(|n| degree_from_blocks(GrassmannContext::for_rank(n, n - 3), &[Corner]))
        .collect();
    assert_eq!(
        corner,
        as_bigints(&[1, 14, 84, 330, 1001, 2548, 5712])
    );

    let square: Vec<BigInt> = (3..=10)
        .map(|n| degree_from_blocks(GrassmannContext::for_rank(n, n - 3), &[Square]))
        .collect();
    assert_eq!(
        square,
        as_bigints(&[1, 10, 46, 146, 371, 812, 1596, 2892])
    );

    let three_squares: Vec<BigInt> = (6..=11)
        .map(|n| degree_from_blocks(GrassmannContext::for_rank(n, n - 4), &[Square; 3]))
        .collect();
    assert_eq!(
        three_squares,
        as_bigints(&[105, 336, 825, 1716, 3185, 5440])
    );
    println!("criterion 9 (corank-3 and corank-4 sequences): PASS");
}

#[test]
fn criterion_10_property_suite() {
    let start = Instant::now();
    let report = cross_check(5);
    let golden = golden_checks();
    let elapsed = start.elapsed();

    for check in report.checks.iter().chain(&golden) {
        assert!(
            check.passed,
            "check {} failed: {:?}",
            check.name, check.detail
        );
    }
    let corpus = report
        .checks
        .iter()
        .find(|c| c.name == "engine-vs-oracle-corpus")
        .expect("corpus check present");
    let detail = corpus.detail.as_deref().unwrap_or("");
    let compared: usize = detail
        .split_whitespace()
        .next()
        .and_then(|w| w.parse().ok())
        .unwrap_or(0);
    assert!(compared >= 30, "corpus too small: {}", detail);

    assert_under(Duration::from_secs(300), elapsed, "property suite");
    println!(
        "criterion 10 (property suite, {} checks, {} corpus patterns, {:?}): PASS",
        report.checks.len() + golden.len(),
        compared,
        elapsed
    );
}
