use std::process::{Command, Output};

use serde_json::Value;

fn strongfield(args: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strongfield"))
        .args(args.split_whitespace())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn csv_rows(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines
        .map(|l| l.split(',').map(String::from).collect())
        .collect();
    (header, rows)
}

#[test]
fn spectrum_csv_single_landau_level() {
    let o = strongfield("spectrum --lambda 10 --landau-max 0 --levels 2 --format csv");
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(!text.contains('\r'));
    let (header, rows) = csv_rows(&text);
    assert_eq!(
        header,
        [
            "N",
            "n_rho",
            "m",
            "parity",
            "k",
            "nu",
            "e_longitudinal_hartree",
            "e_landau_hartree",
            "e_total_hartree",
            "validity"
        ]
    );
    assert_eq!(rows.len(), 5);
    let totals: Vec<f64> = rows.iter().map(|r| r[8].parse().unwrap()).collect();
    assert!(totals.windows(2).all(|w| w[0] <= w[1]));
    let kinds: Vec<(&str, &str)> = rows
        .iter()
        .map(|r| (r[3].as_str(), r[4].as_str()))
        .collect();
    assert_eq!(
        kinds,
        [
            ("even", "0"),
            ("odd", "1"),
            ("even", "1"),
            ("odd", "2"),
            ("even", "2")
        ]
    );
    assert!(rows.iter().all(|r| r[9] == "valid"));
}

#[test]
fn spectrum_weak_field_exits_two() {
    let o = strongfield("spectrum --gamma 0.5 --format csv");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("< 1"), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
}

#[test]
fn spectrum_conflicting_field_flags() {
    let o = strongfield("spectrum --lambda 10 --gauss 1e9");
    assert_eq!(o.status.code(), Some(1));
    let msg = stderr(&o);
    assert!(msg.contains("--lambda") && msg.contains("--gauss"), "{msg}");
}

#[test]
fn spectrum_units() {
    let h = strongfield("spectrum --lambda 10 --levels 1 --format json");
    let r = strongfield("spectrum --lambda 10 --levels 1 --format json --units rydberg");
    let e = strongfield("spectrum --lambda 10 --levels 1 --format json --units ev");
    let (h, r, e): (Value, Value, Value) = (
        serde_json::from_slice(&h.stdout).unwrap(),
        serde_json::from_slice(&r.stdout).unwrap(),
        serde_json::from_slice(&e.stdout).unwrap(),
    );
    assert_eq!(r["units"], "rydberg");
    for i in 0..3 {
        let eh = h["lines"][i]["e_long"].as_f64().unwrap();
        let er = r["lines"][i]["e_long"].as_f64().unwrap();
        let ev = e["lines"][i]["e_long"].as_f64().unwrap();
        assert!((er / eh - 2.0).abs() < 1e-10);
        assert!((ev / eh - 27.211_386_245_988).abs() < 1e-8);
        // nu is not an energy
        assert_eq!(h["lines"][i]["nu"], r["lines"][i]["nu"]);
    }
}

#[test]
fn spectrum_gauss_input() {
    let o = strongfield("spectrum --gauss 2.35e13 --levels 0 --format json");
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let lambda = v["field"]["lambda"].as_f64().unwrap();
    assert!((lambda - 0.5 * (2.35e13f64 / 2.350_517_569_315e9).ln()).abs() < 1e-9);
}

#[test]
fn spectrum_table_is_default() {
    let o = strongfield("spectrum --lambda 5 --levels 1");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("# field: gamma="));
    assert!(text.contains("e_total_hartree"));
    assert_eq!(text.lines().count(), 2 + 2 + 3);
}

#[test]
fn map_forward() {
    let o = strongfield("map --n 3 --l 2 --m -2 --format json");
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let row = &v["labels"][0];
    assert_eq!(
        (
            row["n_rho"].as_i64(),
            row["n_z"].as_i64(),
            row["m"].as_i64()
        ),
        (Some(0), Some(0), Some(-2))
    );
    assert_eq!(row["state"], "3d m=-2");
}

#[test]
fn map_inverse() {
    let o = strongfield("map --n-rho 2 --n-z 3 --m 1 --format csv");
    assert_eq!(stdout(&o), "state,n,l,m,n_rho,n_z\n7g m=1,7,4,1,2,3\n");
}

#[test]
fn map_ancestors() {
    let o = strongfield("map --ancestors 3 --format csv");
    assert_eq!(o.status.code(), Some(0));
    let (_, rows) = csv_rows(&stdout(&o));
    let names: Vec<&str> = rows.iter().map(|r| r[0].as_str()).collect();
    assert_eq!(names, ["1s", "2p m=-1", "3d m=-2"]);
    assert!(rows.iter().all(|r| r[4] == "0" && r[5] == "0"));
}

#[test]
fn map_invalid_label() {
    let o = strongfield("map --n 2 --l 2 --m 0");
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("l <= n-1 violated"), "{}", stderr(&o));
    let o = strongfield("map --n 2 --l 1 --m 0 --n-rho 0 --n-z 1");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn oracle_odd_level() {
    let o = strongfield("oracle --lambda 6 --parity odd --k 1 --format json");
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let row = &v["comparison"][0];
    assert!((row["nu_ode"].as_f64().unwrap() - 1.0).abs() < 1e-4);
    assert!(row["lambda_effective"].is_null());
    assert_eq!(row["agrees"], "yes");
}

/// Exit status follows the reported discrepancy and the band.
#[test]
fn oracle_even_level_exit_code_tracks_band() {
    let o = strongfield("oracle --lambda 6 --parity even --k 0 --format json");
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let row = &v["comparison"][0];
    let d = row["discrepancy"].as_f64().unwrap();
    let band = row["band"].as_f64().unwrap();
    assert_eq!(band, 1.5);
    let lam_eff = row["lambda_effective"].as_f64().unwrap();
    assert!((d - (lam_eff - 6.0).abs()).abs() < 1e-9);
    assert_eq!(o.status.code(), Some(if d <= band { 0 } else { 3 }));

    let wide = strongfield("oracle --lambda 6 --parity even --k 0 --band 10");
    assert_eq!(wide.status.code(), Some(0));
}

#[test]
fn oracle_range_is_enforced() {
    let o = strongfield("oracle --lambda 20 --parity even --k 0");
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("outside"));
    assert_eq!(
        strongfield("oracle --lambda 0.5 --parity odd --k 1")
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn deterministic_and_format_parity() {
    let args = "spectrum --lambda 10 --landau-max 1 --levels 3 --format json";
    let a = strongfield(args);
    let b = strongfield(args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let json: Value = serde_json::from_slice(&a.stdout).unwrap();
    let csv = strongfield("spectrum --lambda 10 --landau-max 1 --levels 3 --format csv");
    let (_, rows) = csv_rows(&stdout(&csv));
    let lines = json["lines"].as_array().unwrap();
    assert_eq!(lines.len(), rows.len());
    for (j, r) in lines.iter().zip(&rows) {
        for (key, col) in [("nu", 5), ("e_long", 6), ("e_landau", 7), ("e_total", 8)] {
            assert_eq!(
                j[key].as_f64().unwrap(),
                r[col].parse::<f64>().unwrap(),
                "{key}"
            );
        }
        assert_eq!(j["n_landau"].as_i64().unwrap().to_string(), r[0]);
        assert_eq!(j["parity"].as_str().unwrap(), r[3]);
    }
}
