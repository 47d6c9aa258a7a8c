#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use weyl_pinch::Tensor4;

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_weyl-pinch"))
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

pub fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

/// Fresh path under the cargo-provided scratch directory.
pub fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("weyl-pinch-cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

pub fn read_json(path: &PathBuf) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Largest violation of antisymmetry, pair exchange, first Bianchi and
/// tracelessness, checked component by component.
pub fn weyl_residual(w: &Tensor4) -> f64 {
    let n = w.dim();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let v = w.get(i, j, k, l);
                    worst = worst.max((v + w.get(j, i, k, l)).abs());
                    worst = worst.max((v + w.get(i, j, l, k)).abs());
                    worst = worst.max((v - w.get(k, l, i, j)).abs());
                    worst = worst.max((v + w.get(j, k, i, l) + w.get(k, i, j, l)).abs());
                }
            }
            worst = worst.max((0..n).map(|k| w.get(i, k, j, k)).sum::<f64>().abs());
        }
    }
    worst
}

/// `2 W_pqrs W_ptru W_qtsu + ½ W_pqrs W_pqtu W_rstu` by nested sums.
pub fn naive_q(w: &Tensor4) -> f64 {
    let n = w.dim();
    let mut total = 0.0;
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                for s in 0..n {
                    let x = w.get(p, q, r, s);
                    if x == 0.0 {
                        continue;
                    }
                    for t in 0..n {
                        for u in 0..n {
                            total += x
                                * (2.0 * w.get(p, t, r, u) * w.get(q, t, s, u)
                                    + 0.5 * w.get(p, q, t, u) * w.get(r, s, t, u));
                        }
                    }
                }
            }
        }
    }
    total
}

pub fn naive_norm(w: &Tensor4) -> f64 {
    w.as_slice().iter().map(|v| v * v).sum::<f64>().sqrt()
}
