//! The table command must reproduce the checked-in golden files byte for
//! byte, for every n they cover.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn golden_path(n: u32) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tables")
        .join(format!("n{n}.txt"))
}

fn run_table(n: u32) -> Vec<u8> {
    let output = Command::new(env!("CARGO_BIN_EXE_hamspec"))
        .args(["table", "--n", &n.to_string()])
        .output()
        .expect("binary runs");
    assert!(output.status.success(), "table --n {n} failed");
    output.stdout
}

#[test]
fn binary_output_matches_golden_files() {
    for n in 3..=12 {
        let golden = fs::read(golden_path(n)).expect("golden file exists");
        assert_eq!(
            run_table(n),
            golden,
            "table --n {n} diverges from tables/n{n}.txt"
        );
    }
}

#[test]
fn golden_files_are_utf8_with_lf_endings() {
    for n in 3..=12 {
        let bytes = fs::read(golden_path(n)).unwrap();
        let text = String::from_utf8(bytes).expect("golden files are UTF-8");
        assert!(!text.contains('\r'), "n={n}: CR found");
        assert!(text.ends_with('\n'), "n={n}: missing final LF");
        assert_eq!(text.lines().count(), n as usize + 2, "n={n}: line count");
    }
}

#[test]
fn renderer_matches_golden_without_process_overhead() {
    for n in 3..=12 {
        let golden = fs::read_to_string(golden_path(n)).unwrap();
        assert_eq!(hamspec_cli::table::render_table(n), golden);
    }
}

#[test]
fn known_entries_pinned() {
    // spot values also pinned by the golden files
    let grid12 = hamspec_cli::table::eigenvalue_grid(12);
    assert_eq!(grid12[6][6], (-20).into());
    let grid3 = hamspec_cli::table::eigenvalue_grid(3);
    let col2: Vec<i64> = (0..=3).map(|r| i64::try_from(&grid3[r][2]).unwrap()).collect();
    assert_eq!(col2, vec![3, -1, -1, 3]);
}
