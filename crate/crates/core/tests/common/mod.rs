#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;
use slf_core::braid::{BraidWord, Generator, Letter};
use slf_core::hurwitz::{hurwitz_move, Direction, Move};
use slf_core::lifts::Factorization;

pub fn word(n: usize, idx: &[i32]) -> BraidWord {
    BraidWord::from_indices(n, idx).unwrap()
}

pub fn random_letters(rng: &mut StdRng, n: usize, len: usize) -> Vec<Letter> {
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as u16);
            if rng.gen_bool(0.5) {
                Letter::x(i)
            } else {
                Letter::x_inv(i)
            }
        })
        .collect()
}

fn gens(idx: &[i32]) -> Vec<Letter> {
    idx.iter().map(|&i| if i > 0 { Letter::x(i as u16) } else { Letter::x_inv((-i) as u16) }).collect()
}

fn splice(w: &mut Vec<Letter>, at: usize, len: usize, with: Vec<Letter>) {
    w.splice(at..at + len, with);
}

/// Applies one randomly chosen defining relation of the extended sphere
/// braid group at a random place (rewriting or inserting), returning the
/// new letter list. Every rewrite preserves the group element.
pub fn random_rewrite(rng: &mut StdRng, n: usize, w: &[Letter]) -> Vec<Letter> {
    let mut out = w.to_vec();
    let pos = rng.gen_range(0..=out.len());
    let m = n as i32 - 1;
    match rng.gen_range(0..8) {
        0 => {
            // braid relation, either direction, if it matches here
            let i = rng.gen_range(1..m);
            let (a, b) = (gens(&[i, i + 1, i]), gens(&[i + 1, i, i + 1]));
            let (from, to) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
            if let Some(p) = out.windows(3).position(|x| x == from.as_slice()) {
                splice(&mut out, p, 3, to);
            } else {
                let mut ins = from.clone();
                ins.extend(to.iter().rev().map(|l| l.inv()));
                splice(&mut out, pos, 0, ins);
            }
        }
        1 => {
            // far commutation
            if m >= 3 {
                let i = rng.gen_range(1..m - 1);
                let j = rng.gen_range(i + 2..=m);
                let (a, b) = (gens(&[i, j]), gens(&[j, i]));
                if let Some(p) = out.windows(2).position(|x| x == a.as_slice()) {
                    splice(&mut out, p, 2, b);
                } else {
                    splice(&mut out, pos, 0, gens(&[i, j, -i, -j]));
                }
            }
        }
        2 => {
            // free insertion of l l^-1
            let l = random_letters(rng, n, 1)[0];
            splice(&mut out, pos, 0, vec![l, l.inv()]);
        }
        3 => {
            // the sphere relator equals I
            let mut rel: Vec<i32> = (1..=m).collect();
            rel.extend((1..=m).rev());
            let mut ins = gens(&rel);
            ins.push(Letter::central(true));
            splice(&mut out, pos, 0, ins);
        }
        4 => {
            // I is an involution
            splice(&mut out, pos, 0, vec![Letter::central(false), Letter::central(false)]);
        }
        5 => {
            // I is central: move it one step
            if let Some(p) = out.iter().position(|l| l.generator == Generator::I) {
                if p + 1 < out.len() {
                    out.swap(p, p + 1);
                }
            }
        }
        6 => {
            // replace I^-1 by I
            if let Some(p) = out.iter().position(|l| *l == Letter::central(true)) {
                out[p] = Letter::central(false);
                splice(&mut out, p, 0, vec![Letter::central(true), Letter::central(true)]);
            }
        }
        _ => {
            // cancel a free pair if present
            if let Some(p) = out.windows(2).position(|x| x[0] == x[1].inv()) {
                splice(&mut out, p, 2, vec![]);
            }
        }
    }
    out
}

pub fn random_move(rng: &mut StdRng, mu: usize) -> Move {
    let r = rng.gen_range(1..mu);
    if rng.gen_bool(0.5) {
        Move::right(r)
    } else {
        Move::left(r)
    }
}

pub fn random_moves(rng: &mut StdRng, f: &Factorization, count: usize) -> (Factorization, Vec<Move>) {
    let mut cur = f.clone();
    let mut moves = Vec::new();
    for _ in 0..count {
        let m = random_move(rng, f.mu());
        if let Move::Hurwitz { position, direction } = m {
            cur = hurwitz_move(&cur, position, direction).unwrap();
        }
        moves.push(m);
    }
    (cur, moves)
}

pub fn dir(right: bool) -> Direction {
    if right {
        Direction::Right
    } else {
        Direction::Left
    }
}
