//! Test-only oracles that do not share code with the library.
#![allow(dead_code)]

use cartan_qec::PauliSpinor;

pub type C = (i64, i64);
pub type Matrix = Vec<Vec<C>>;

fn cmul(a: C, b: C) -> C {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn cadd(a: C, b: C) -> C {
    (a.0 + b.0, a.1 + b.1)
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![(0, 0); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == (0, 0) {
                continue;
            }
            for j in 0..n {
                out[i][j] = cadd(out[i][j], cmul(a[i][k], b[k][j]));
            }
        }
    }
    out
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![(0, 0); n * m]; n * m];
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = cmul(a[i][j], b[k][l]);
                }
            }
        }
    }
    out
}

fn single(ch: char) -> Matrix {
    match ch {
        'I' => vec![vec![(1, 0), (0, 0)], vec![(0, 0), (1, 0)]],
        'X' => vec![vec![(0, 0), (1, 0)], vec![(1, 0), (0, 0)]],
        'Y' => vec![vec![(0, 0), (0, -1)], vec![(0, 1), (0, 0)]],
        'Z' => vec![vec![(1, 0), (0, 0)], vec![(0, 0), (-1, 0)]],
        _ => unreachable!(),
    }
}

/// Dense matrix of a spinor from its text form, with the standard Pauli
/// matrices and the printed prefix as a scalar. Qubit 0 is the leftmost
/// tensor factor.
pub fn matrix(s: &PauliSpinor) -> Matrix {
    let text = s.to_string();
    let (scalar, body): (C, &str) = if let Some(b) = text.strip_prefix("+i") {
        ((0, 1), b)
    } else if let Some(b) = text.strip_prefix("-i") {
        ((0, -1), b)
    } else if let Some(b) = text.strip_prefix('-') {
        ((-1, 0), b)
    } else {
        ((1, 0), text.as_str())
    };
    let mut m = vec![vec![scalar]];
    for ch in body.chars() {
        m = kron(&m, &single(ch));
    }
    m
}

pub fn is_zero(m: &Matrix) -> bool {
    m.iter().all(|row| row.iter().all(|&c| c == (0, 0)))
}

pub fn sub(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| {
            r.iter()
                .zip(s)
                .map(|(x, y)| (x.0 - y.0, x.1 - y.1))
                .collect()
        })
        .collect()
}

/// Every spinor of the given width with every phase.
pub fn all_spinors(width: usize) -> Vec<PauliSpinor> {
    let n = 1u32 << width;
    let mut out = Vec::new();
    for x in 0..n {
        for z in 0..n {
            for ph in 0..4 {
                out.push(PauliSpinor::from_parts(width, ph, x, z));
            }
        }
    }
    out
}

/// Every spinor modulo phase, Hermitian form.
pub fn all_mod_phase(width: usize) -> Vec<PauliSpinor> {
    let n = 1u32 << width;
    (0..n * n)
        .map(|v| PauliSpinor::hermitian(width, v >> width, v & (n - 1)))
        .collect()
}

/// Matrix-vector product on an explicit state given as `(re, im)` pairs.
pub fn matvec(m: &Matrix, v: &[C]) -> Vec<C> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold((0, 0), |acc, (&a, &b)| cadd(acc, cmul(a, b)))
        })
        .collect()
}

fn body(s: &PauliSpinor) -> String {
    s.to_string()
        .trim_start_matches(['+', '-', 'i'])
        .to_string()
}

/// Anticommutation counted qubit by qubit on the printed letters: two
/// different non-identity letters anticommute.
pub fn anticommute_text(a: &PauliSpinor, b: &PauliSpinor) -> bool {
    body(a)
        .chars()
        .zip(body(b).chars())
        .filter(|&(p, q)| p != 'I' && q != 'I' && p != q)
        .count()
        % 2
        == 1
}

/// Product modulo phase, letter by letter.
pub fn product_letters(a: &str, b: &str) -> String {
    a.chars()
        .zip(b.chars())
        .map(|(p, q)| match (p, q) {
            ('I', o) | (o, 'I') => o,
            (p, q) if p == q => 'I',
            ('X', 'Y') | ('Y', 'X') => 'Z',
            ('X', 'Z') | ('Z', 'X') => 'Y',
            _ => 'X',
        })
        .collect()
}

/// Closure of the generators modulo phase, as letter strings.
pub fn closure_letters(gens: &[PauliSpinor]) -> std::collections::HashSet<String> {
    let width = gens[0].width();
    let mut set = std::collections::HashSet::new();
    set.insert("I".repeat(width));
    for g in gens {
        let gb = body(g);
        let next: Vec<String> = set.iter().map(|s| product_letters(s, &gb)).collect();
        set.extend(next);
    }
    set
}

pub fn letters(s: &PauliSpinor) -> String {
    body(s)
}

pub fn neg(a: &Matrix) -> Matrix {
    a.iter()
        .map(|r| r.iter().map(|&(x, y)| (-x, -y)).collect())
        .collect()
}
