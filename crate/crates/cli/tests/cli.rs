use std::path::PathBuf;

use conelift::{IntMatrix, IntVector};
use conelift_cli::format::{read_matrices, read_matrix, write_matrix};
use conelift_cli::run;
use proptest::prelude::*;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn conelift(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("conelift").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn hilbert_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("H.mat");
    let (code, out, _) = conelift(&["hilbert", "--kernel", &fixture("sum.mat"), "-o", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let h = read_matrix(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(h, IntMatrix::from_i64_rows(3, &[&[0, 1, 1], &[1, 0, 1]]).unwrap());
}

#[test]
fn rays_are_sorted_on_stdout() {
    let (code, out, err) = conelift(&["rays", "--kernel", &fixture("swap.mat")]);
    assert_eq!(code, 0);
    assert_eq!(out, "4 4\n0 1 0 1\n0 1 1 0\n1 0 0 1\n1 0 1 0\n");
    assert_eq!(err, "4 extreme rays\n");
    let (_, _, err) = conelift(&["rays", "--kernel", &fixture("swap.mat"), "--quiet"]);
    assert!(err.is_empty());
}

#[test]
fn truncated_hilbert() {
    let (code, out, _) = conelift(&["hilbert", "--lattice", &fixture("lattice.mat"), "--bounds", "1,1,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "2 4\n0 1 1 0\n1 0 0 1\n");
    let (code, out, _) = conelift(&["hilbert", "--kernel", &fixture("weighted.mat"), "--bounds", "inf,1,inf"]);
    assert_eq!(code, 0);
    assert_eq!(out, "2 3\n1 1 1\n3 0 1\n");
}

#[test]
fn engines_and_strategies() {
    let (_, reference, _) = conelift(&["hilbert", "--kernel", &fixture("weighted.mat")]);
    for engine in ["graded", "completion"] {
        for strategy in ["input-order", "min-pairs", "max-zeros"] {
            let (code, out, _) = conelift(&[
                "hilbert",
                "--kernel",
                &fixture("weighted.mat"),
                "--engine",
                engine,
                "--strategy",
                strategy,
            ]);
            assert_eq!(code, 0);
            assert_eq!(out, reference);
        }
    }
}

#[test]
fn applications() {
    let (_, out, _) = conelift(&["dual", &fixture("cone.mat")]);
    let blocks = read_matrices(&out).unwrap();
    assert_eq!(blocks[0], IntMatrix::from_i64_rows(2, &[&[-1, 2], &[1, 0]]).unwrap());
    assert_eq!(
        blocks[1],
        IntMatrix::from_i64_rows(2, &[&[-1, 2], &[0, 1], &[1, 0]]).unwrap()
    );

    let (_, out, _) = conelift(&["hilbert-from-gens", &fixture("cone.mat")]);
    assert_eq!(out, "3 2\n0 1\n1 1\n2 1\n");

    let (_, out, _) = conelift(&[
        "decompose",
        "--kernel",
        &fixture("sum.mat"),
        "--target",
        &fixture("target.mat"),
    ]);
    assert_eq!(
        read_matrix(&out).unwrap(),
        IntMatrix::from_i64_rows(4, &[&[1, 0, 1, 1], &[2, 1, 0, 1]]).unwrap()
    );

    let (_, out, _) = conelift(&[
        "improve",
        "--matrix",
        &fixture("improve_a.mat"),
        "--rhs",
        &fixture("improve_b.mat"),
        "--cost",
        &fixture("improve_c.mat"),
        "--start",
        &fixture("improve_z0.mat"),
    ]);
    assert_eq!(out, "# improved cost 0\n1 2\n0 0\n");

    let (code, out, _) = conelift(&["magic-system", "1"]);
    assert_eq!((code, out.as_str()), (0, "0 1\n"));
    let (_, out, _) = conelift(&["magic-system", "3", "--no-diagonals"]);
    assert_eq!(read_matrix(&out).unwrap().num_rows(), 5);
}

#[test]
fn exit_codes() {
    assert_eq!(conelift(&["--help"]).0, 0);
    assert_eq!(conelift(&["--version"]).0, 0);
    assert_eq!(conelift(&[]).0, 1);
    assert_eq!(conelift(&["hilbert"]).0, 1);
    assert_eq!(conelift(&["rays", "--kernel", "/nonexistent/file"]).0, 1);
    assert_eq!(
        conelift(&["hilbert", "--kernel", &fixture("sum.mat"), "--bounds", "1,1"]).0,
        1
    );
    assert_eq!(
        conelift(&["hilbert", "--kernel", &fixture("sum.mat"), "--engine", "x"]).0,
        1
    );
    let dir = tempfile::tempdir().unwrap();
    let line = dir.path().join("line.mat");
    std::fs::write(&line, "2 2\n1 0\n-1 0\n").unwrap();
    let (code, _, err) = conelift(&["dual", line.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
    let bad = dir.path().join("bad.mat");
    std::fs::write(&bad, "1 2\n1\n").unwrap();
    assert_eq!(conelift(&["rays", "--lattice", bad.to_str().unwrap()]).0, 1);
    let start = dir.path().join("z0.mat");
    std::fs::write(&start, "1 2\n1 0\n").unwrap();
    let args = [
        "improve",
        "--matrix",
        &fixture("improve_a.mat"),
        "--rhs",
        &fixture("improve_b.mat"),
        "--cost",
        &fixture("improve_c.mat"),
        "--start",
        start.to_str().unwrap(),
    ];
    assert_eq!(conelift(&args).0, 1);
}

#[test]
fn resource_errors_map_to_three() {
    let e = conelift_cli::CliError::Compute(conelift::Error::Resource("x".into()));
    assert_eq!(e.exit_code(), 3);
    let e = conelift_cli::CliError::Compute(conelift::Error::Degenerate("x".into()));
    assert_eq!(e.exit_code(), 2);
}

fn any_matrix() -> impl Strategy<Value = IntMatrix> {
    (0usize..5, 1usize..5).prop_flat_map(|(m, n)| {
        prop::collection::vec(prop::collection::vec(any::<i64>(), n), m).prop_map(move |rows| {
            let rows = rows
                .iter()
                .map(|r| {
                    // widen some entries past 64 bits
                    IntVector::new(
                        r.iter()
                            .map(|&x| conelift::BigInt::from(x) * conelift::BigInt::from(x))
                            .collect(),
                    )
                })
                .collect();
            IntMatrix::new(n, rows).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn matrices_round_trip(m in any_matrix()) {
        prop_assert_eq!(read_matrix(&write_matrix(&m)).unwrap(), m);
    }

    #[test]
    fn negative_entries_round_trip(rows in prop::collection::vec(prop::collection::vec(-1000i64..1000, 3), 0..6)) {
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = IntMatrix::from_i64_rows(3, &refs).unwrap();
        prop_assert_eq!(read_matrix(&write_matrix(&m)).unwrap(), m);
    }
}
