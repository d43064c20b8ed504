//! Oracles for the integration suites, kept independent of the crate's
//! own enumeration path: closed product formulas expanded as truncated
//! power series, and a brute-force all-words enumeration with its own
//! matrix arithmetic.

#![allow(dead_code)]

use std::collections::HashMap;
use std::process::Command;

/// Coefficients 0..=max_len of the product over `degrees` d of
/// (1 + q + ... + q^(d-1)). For a finite Weyl group with those invariant
/// degrees this series counts elements by length.
pub fn poincare_series(degrees: &[u64], max_len: usize) -> Vec<u64> {
    let mut coeffs = vec![0u64; max_len + 1];
    coeffs[0] = 1;
    for &d in degrees {
        let mut next = vec![0u64; max_len + 1];
        for len in 0..=max_len {
            if coeffs[len] == 0 {
                continue;
            }
            for power in 0..d as usize {
                if len + power > max_len {
                    break;
                }
                next[len + power] += coeffs[len];
            }
        }
        coeffs = next;
    }
    coeffs
}

/// Coefficients 0..=max_len of the product over `exponents` m of
/// 1/(1 - q^m). This is the closed form for the cell counts of the tail
/// quotient attached to a finite group with those exponents.
pub fn affine_tail_series(exponents: &[u64], max_len: usize) -> Vec<u64> {
    let mut coeffs = vec![0u64; max_len + 1];
    coeffs[0] = 1;
    for &m in exponents {
        // multiply by the geometric series in q^m, in place
        for len in m as usize..=max_len {
            coeffs[len] += coeffs[len - m as usize];
        }
    }
    coeffs
}

/// Truncated product of two series.
pub fn convolve_truncated(a: &[u64], b: &[u64], max_len: usize) -> Vec<u64> {
    let mut out = vec![0u64; max_len + 1];
    for (i, &x) in a.iter().enumerate().take(max_len + 1) {
        for (j, &y) in b.iter().enumerate().take(max_len + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn multiply(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += x * b[k * n + j];
            }
        }
    }
    out
}

/// Counts group elements by minimal word length by multiplying out every
/// word over the simple reflections up to `max_len`, with no pruning and
/// its own arithmetic. Exponential in `max_len`; use small ranks only.
pub fn naive_level_sizes(cartan_rows: &[Vec<i64>], max_len: usize) -> Vec<u64> {
    let n = cartan_rows.len();
    let mut identity = vec![0i64; n * n];
    for i in 0..n {
        identity[i * n + i] = 1;
    }
    // reflection i is the identity except in row i, where the entry in
    // column j is delta_ij - a_ij
    let generators: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut m = identity.clone();
            for j in 0..n {
                let delta = if i == j { 1 } else { 0 };
                m[i * n + j] = delta - cartan_rows[i][j];
            }
            m
        })
        .collect();
    let mut first_seen: HashMap<Vec<i64>, usize> = HashMap::new();
    first_seen.insert(identity.clone(), 0);
    let mut words: Vec<Vec<i64>> = vec![identity];
    for len in 1..=max_len {
        let mut next = Vec::with_capacity(words.len() * n);
        for product in &words {
            for generator in &generators {
                let extended = multiply(n, product, generator);
                first_seen.entry(extended.clone()).or_insert(len);
                next.push(extended);
            }
        }
        words = next;
    }
    let mut sizes = vec![0u64; max_len + 1];
    for &len in first_seen.values() {
        sizes[len] += 1;
    }
    sizes
}

pub struct CliOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs the compiled binary with the given arguments.
pub fn run_cli(args: &[&str]) -> CliOutput {
    let output = Command::new(env!("CARGO_BIN_EXE_bruhat"))
        .args(args)
        .output()
        .expect("binary runs");
    CliOutput {
        stdout: String::from_utf8(output.stdout).expect("stdout is UTF-8"),
        stderr: String::from_utf8(output.stderr).expect("stderr is UTF-8"),
        code: output.status.code().expect("no signal"),
    }
}

/// Parses a one-line CSV count series like `1,3,5,6,5,3,1`.
pub fn parse_series(csv: &str) -> Vec<u64> {
    csv.trim()
        .split(',')
        .map(|c| c.parse().expect("count"))
        .collect()
}
