//! Level-synchronous breadth-first search over Hurwitz moves, optionally
//! interleaved with global conjugation by the generators.
//!
//! Tuple entries are interned by fingerprint. Each level first collects the
//! group products it needs, evaluates the missing ones in parallel and then
//! expands states sequentially, so the explored set and every reported path
//! depend only on the budget.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::fingerprint::{fingerprint, fingerprints, Fingerprint};
use super::{apply_moves, kind_multiset, Direction, Move, MoveSequence};
use crate::braid::{permutation_image, BraidWord, Letter, MappingClass, Permutation, SphereActionBuilder};
use crate::error::{Error, Result};
use crate::lifts::Factorization;

pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of stored states.
    pub budget: usize,
    /// Also allow simultaneous conjugation by `x_i^{±1}`.
    pub conjugations: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_NODE_BUDGET, conjugations: true }
    }
}

/// An invariant on which two factorizations differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub invariant: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Equivalence {
    Equivalent(MoveSequence),
    NotEquivalent(Witness),
    Inconclusive { explored: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalRep {
    pub factorization: Factorization,
    /// Moves taking the input to `factorization`.
    pub moves: MoveSequence,
    pub fingerprints: Vec<Fingerprint>,
    pub explored: usize,
    /// Whether the whole orbit fit in the budget.
    pub complete: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSize {
    pub size: usize,
    pub complete: bool,
}

type State = Box<[u32]>;

#[derive(Clone, Debug)]
struct Element {
    fp: Fingerprint,
    class_inv: MappingClass,
    perm_inv: Permutation,
}

impl Element {
    fn of_word(w: &BraidWord) -> Self {
        let fp = fingerprint(w);
        let mut b = SphereActionBuilder::new(w.strands());
        for &l in w.inverse().letters() {
            b.push(l);
        }
        Element { perm_inv: fp.permutation.inverse(), class_inv: b.finish(), fp }
    }

    /// `a · b · a⁻¹`, or `a⁻¹ · b · a` when `inverted`.
    fn conjugate(a: &Element, b: &Element, inverted: bool) -> Self {
        let (left, right, pl, pr) = if inverted {
            (&a.class_inv, &a.fp.class, &a.perm_inv, &a.fp.permutation)
        } else {
            (&a.fp.class, &a.class_inv, &a.fp.permutation, &a.perm_inv)
        };
        let class = left.then(&b.fp.class).then(right);
        let class_inv = left.then(&b.class_inv).then(right);
        let permutation = pl.then(&b.fp.permutation).then(pr);
        Element {
            perm_inv: permutation.inverse(),
            fp: Fingerprint { exponent_residue: b.fp.exponent_residue, permutation, class },
            class_inv,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Op {
    /// `a b a⁻¹`
    Conj(u32, u32),
    /// `a⁻¹ b a`
    ConjInv(u32, u32),
    /// `l b l⁻¹` for the generator letter with this index.
    Gen(u32, u32),
}

/// Interned group elements with cached products.
struct Space {
    elements: Vec<Element>,
    index: HashMap<Fingerprint, u32>,
    cache: HashMap<Op, u32>,
    letters: Vec<(Letter, Element)>,
}

impl Space {
    fn new(strands: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for i in 1..strands as u16 {
            for l in [Letter::x(i), Letter::x_inv(i)] {
                letters.push((l, Element::of_word(&BraidWord::new(strands, vec![l])?)));
            }
        }
        Ok(Space { elements: Vec::new(), index: HashMap::new(), cache: HashMap::new(), letters })
    }

    fn intern(&mut self, e: Element) -> u32 {
        if let Some(&id) = self.index.get(&e.fp) {
            return id;
        }
        let id = self.elements.len() as u32;
        self.index.insert(e.fp.clone(), id);
        self.elements.push(e);
        id
    }

    fn intern_factorization(&mut self, f: &Factorization) -> Result<State> {
        let words = f.standard_words()?;
        Ok(words.iter().map(|w| self.intern(Element::of_word(w))).collect())
    }

    fn compute(&self, op: Op) -> Element {
        let el = |id: u32| &self.elements[id as usize];
        match op {
            Op::Conj(a, b) => Element::conjugate(el(a), el(b), false),
            Op::ConjInv(a, b) => Element::conjugate(el(a), el(b), true),
            Op::Gen(l, b) => Element::conjugate(&self.letters[l as usize].1, el(b), false),
        }
    }

    /// Evaluates all uncached products in `ops`, in parallel, and interns
    /// them in first-occurrence order.
    fn resolve(&mut self, ops: impl IntoIterator<Item = Op>) {
        let mut seen = std::collections::HashSet::new();
        let missing: Vec<Op> = ops.into_iter().filter(|op| !self.cache.contains_key(op) && seen.insert(*op)).collect();
        let computed: Vec<Element> = missing.par_iter().map(|&op| self.compute(op)).collect();
        for (op, e) in missing.into_iter().zip(computed) {
            let id = self.intern(e);
            self.cache.insert(op, id);
        }
    }

    fn fp(&self, id: u32) -> &Fingerprint {
        &self.elements[id as usize].fp
    }

    fn compare(&self, a: &[u32], b: &[u32]) -> std::cmp::Ordering {
        a.iter().map(|&i| self.fp(i)).cmp(b.iter().map(|&i| self.fp(i)))
    }
}

fn move_ops(state: &[u32], m: Move, letter_index: &HashMap<Letter, u32>) -> Vec<Op> {
    match m {
        Move::Hurwitz { position: r, direction: Direction::Right } => vec![Op::Conj(state[r - 1], state[r])],
        Move::Hurwitz { position: r, direction: Direction::Left } => vec![Op::ConjInv(state[r], state[r - 1])],
        Move::Conjugate(l) => {
            let li = letter_index[&l];
            state.iter().map(|&b| Op::Gen(li, b)).collect()
        }
    }
}

fn apply_state(space: &Space, state: &[u32], m: Move, letter_index: &HashMap<Letter, u32>) -> State {
    let mut out: State = state.into();
    match m {
        Move::Hurwitz { position: r, direction: Direction::Right } => {
            out[r - 1] = space.cache[&Op::Conj(state[r - 1], state[r])];
            out[r] = state[r - 1];
        }
        Move::Hurwitz { position: r, direction: Direction::Left } => {
            out[r - 1] = state[r];
            out[r] = space.cache[&Op::ConjInv(state[r], state[r - 1])];
        }
        Move::Conjugate(l) => {
            let li = letter_index[&l];
            for (o, &b) in out.iter_mut().zip(state.iter()) {
                *o = space.cache[&Op::Gen(li, b)];
            }
        }
    }
    out
}

/// One breadth-first tree rooted at a tuple.
struct Explorer {
    states: Vec<State>,
    parent: Vec<Option<(u32, Move)>>,
    visited: HashMap<State, u32>,
    frontier: Vec<u32>,
}

impl Explorer {
    fn new(root: State) -> Self {
        let mut visited = HashMap::new();
        visited.insert(root.clone(), 0);
        Explorer { states: vec![root], parent: vec![None], visited, frontier: vec![0] }
    }

    fn path_to(&self, mut id: u32) -> MoveSequence {
        let mut moves = Vec::new();
        while let Some((p, m)) = self.parent[id as usize] {
            moves.push(m);
            id = p;
        }
        moves.reverse();
        MoveSequence(moves)
    }

    /// Expands one level. Stops early when `stop` accepts a new state or the
    /// global state count reaches `budget`; returns the accepted state id.
    fn expand(
        &mut self,
        space: &mut Space,
        moves: &[Move],
        letter_index: &HashMap<Letter, u32>,
        budget: usize,
        other_size: usize,
        mut stop: impl FnMut(&State) -> bool,
    ) -> Expansion {
        let frontier = std::mem::take(&mut self.frontier);
        let ops: Vec<Op> = frontier
            .iter()
            .flat_map(|&s| {
                let st = &self.states[s as usize];
                moves.iter().flat_map(move |&m| move_ops(st, m, letter_index))
            })
            .collect();
        space.resolve(ops);
        let mut next = Vec::new();
        for &s in &frontier {
            for &m in moves {
                let succ = apply_state(space, &self.states[s as usize], m, letter_index);
                if self.visited.contains_key(&succ) {
                    continue;
                }
                if self.states.len() + other_size >= budget {
                    return Expansion::Exhausted;
                }
                let id = self.states.len() as u32;
                let hit = stop(&succ);
                self.visited.insert(succ.clone(), id);
                self.states.push(succ);
                self.parent.push(Some((s, m)));
                next.push(id);
                if hit {
                    return Expansion::Found(id);
                }
            }
        }
        self.frontier = next;
        if self.frontier.is_empty() {
            Expansion::Closed
        } else {
            Expansion::Continue
        }
    }
}

enum Expansion {
    Continue,
    Closed,
    Exhausted,
    Found(u32),
}

fn move_set(mu: usize, strands: usize, conjugations: bool) -> Vec<Move> {
    let mut moves: Vec<Move> = (1..mu).flat_map(|r| [Move::right(r), Move::left(r)]).collect();
    if conjugations {
        for i in 1..strands as u16 {
            moves.push(Move::Conjugate(Letter::x(i)));
            moves.push(Move::Conjugate(Letter::x_inv(i)));
        }
    }
    moves
}

fn letter_index(space: &Space) -> HashMap<Letter, u32> {
    space.letters.iter().enumerate().map(|(i, (l, _))| (*l, i as u32)).collect()
}

fn total_product(f: &Factorization) -> Result<(MappingClass, Permutation)> {
    let mut action = SphereActionBuilder::new(f.strands());
    let mut perm = Permutation::identity(f.strands());
    for w in f.standard_words()? {
        perm = perm.then(&permutation_image(&w));
        for &l in w.letters() {
            action.push(l);
        }
    }
    Ok((action.finish(), perm))
}

/// Orbit sizes of the permutation group generated by the entries.
fn orbit_sizes(f: &Factorization) -> Result<Vec<usize>> {
    let n = f.strands();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for w in f.standard_words()? {
        for (i, j) in permutation_image(&w).images().into_iter().enumerate() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j - 1));
            parent[a] = b;
        }
    }
    let mut sizes = vec![0usize; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        sizes[r] += 1;
    }
    let mut out: Vec<usize> = sizes.into_iter().filter(|&s| s > 0).collect();
    out.sort_unstable();
    Ok(out)
}

fn invariant_witness(f1: &Factorization, f2: &Factorization) -> Result<Option<Witness>> {
    let diff =
        |name: &str, a: String, b: String| (a != b).then(|| Witness { invariant: name.into(), left: a, right: b });
    if let Some(w) = diff("mu", f1.mu().to_string(), f2.mu().to_string()) {
        return Ok(Some(w));
    }
    if let Some(w) = diff("t", f1.t().to_string(), f2.t().to_string()) {
        return Ok(Some(w));
    }
    if let Some(w) = diff("h multiset", format!("{:?}", f1.h_list()), format!("{:?}", f2.h_list())) {
        return Ok(Some(w));
    }
    if let Some(w) = diff("twist kinds", format!("{:?}", kind_multiset(f1)), format!("{:?}", kind_multiset(f2))) {
        return Ok(Some(w));
    }
    if let Some(w) = diff("exponent sum", f1.exponent_sum().to_string(), f2.exponent_sum().to_string()) {
        return Ok(Some(w));
    }
    let (c1, p1) = total_product(f1)?;
    let (c2, p2) = total_product(f2)?;
    let trivial = |c: &MappingClass, p: &Permutation| (c.is_identity() && p.is_identity()).to_string();
    if let Some(w) = diff("total product trivial in MCG", trivial(&c1, &p1), trivial(&c2, &p2)) {
        return Ok(Some(w));
    }
    if let Some(w) =
        diff("cycle type of total permutation", format!("{:?}", p1.cycle_type()), format!("{:?}", p2.cycle_type()))
    {
        return Ok(Some(w));
    }
    let o = diff("orbits of the monodromy group", format!("{:?}", orbit_sizes(f1)?), format!("{:?}", orbit_sizes(f2)?));
    Ok(o)
}

/// Bounded Hurwitz-equivalence test with the default options.
pub fn equivalent(f1: &Factorization, f2: &Factorization, node_budget: usize) -> Result<Equivalence> {
    equivalent_with(f1, f2, SearchOptions { budget: node_budget, conjugations: true })
}

/// Bidirectional breadth-first search from both tuples; a returned move
/// sequence has been replayed on `f1` and checked against `f2`.
pub fn equivalent_with(f1: &Factorization, f2: &Factorization, opts: SearchOptions) -> Result<Equivalence> {
    if f1.genus() != f2.genus() {
        return Err(Error::GenusMismatch(f1.genus(), f2.genus()));
    }
    if let Some(w) = invariant_witness(f1, f2)? {
        return Ok(Equivalence::NotEquivalent(w));
    }
    let mut space = Space::new(f1.strands())?;
    let index = letter_index(&space);
    let moves = move_set(f1.mu(), f1.strands(), opts.conjugations);
    let mut fwd = Explorer::new(space.intern_factorization(f1)?);
    let mut bwd = Explorer::new(space.intern_factorization(f2)?);
    if fwd.states[0] == bwd.states[0] {
        return Ok(Equivalence::Equivalent(MoveSequence::default()));
    }

    let mut fwd_done = false;
    let mut bwd_done = false;
    loop {
        let forward = !fwd_done && (bwd_done || fwd.frontier.len() <= bwd.frontier.len());
        let meet = if forward {
            let other = &bwd;
            let r = fwd
                .expand(&mut space, &moves, &index, opts.budget, other.states.len(), |s| other.visited.contains_key(s));
            match r {
                Expansion::Found(id) => Some((id, bwd.visited[&fwd.states[id as usize]])),
                Expansion::Exhausted => {
                    return Ok(Equivalence::Inconclusive { explored: fwd.states.len() + bwd.states.len() })
                }
                Expansion::Closed => {
                    fwd_done = true;
                    None
                }
                Expansion::Continue => None,
            }
        } else {
            let other = &fwd;
            let r = bwd
                .expand(&mut space, &moves, &index, opts.budget, other.states.len(), |s| other.visited.contains_key(s));
            match r {
                Expansion::Found(id) => Some((fwd.visited[&bwd.states[id as usize]], id)),
                Expansion::Exhausted => {
                    return Ok(Equivalence::Inconclusive { explored: fwd.states.len() + bwd.states.len() })
                }
                Expansion::Closed => {
                    bwd_done = true;
                    None
                }
                Expansion::Continue => None,
            }
        };
        if let Some((a, b)) = meet {
            let mut path = fwd.path_to(a);
            path.0.extend(bwd.path_to(b).inverse().0);
            let replayed = apply_moves(f1, &path)?;
            if fingerprints(&replayed)? == fingerprints(f2)? {
                return Ok(Equivalence::Equivalent(path));
            }
            return Ok(Equivalence::Inconclusive { explored: fwd.states.len() + bwd.states.len() });
        }
        if fwd_done || bwd_done {
            let (side, closed) = if fwd_done { ("left", &fwd) } else { ("right", &bwd) };
            return Ok(Equivalence::NotEquivalent(Witness {
                invariant: format!("closed orbit of the {side} tuple"),
                left: format!("{} tuples", closed.states.len()),
                right: "target not reached".into(),
            }));
        }
    }
}

/// Explores the orbit of `f` under Hurwitz moves (no conjugation) and
/// returns the tuple with the least fingerprint sequence seen.
pub fn canonical_rep(f: &Factorization, node_budget: usize) -> Result<CanonicalRep> {
    let mut space = Space::new(f.strands())?;
    let index = letter_index(&space);
    let moves = move_set(f.mu(), f.strands(), false);
    let mut ex = Explorer::new(space.intern_factorization(f)?);
    let complete = loop {
        match ex.expand(&mut space, &moves, &index, node_budget, 0, |_| false) {
            Expansion::Continue => {}
            Expansion::Closed => break true,
            Expansion::Exhausted | Expansion::Found(_) => break false,
        }
    };
    let best = (0..ex.states.len() as u32)
        .min_by(|&a, &b| space.compare(&ex.states[a as usize], &ex.states[b as usize]))
        .unwrap_or(0);
    let moves = ex.path_to(best);
    let factorization = apply_moves(f, &moves)?;
    let fingerprints = ex.states[best as usize].iter().map(|&i| space.fp(i).clone()).collect();
    Ok(CanonicalRep { factorization, moves, fingerprints, explored: ex.states.len(), complete })
}

/// Number of tuples reachable from `f` by Hurwitz moves, up to the budget.
pub fn orbit_size(f: &Factorization, node_budget: usize) -> Result<OrbitSize> {
    let rep = canonical_rep(f, node_budget)?;
    Ok(OrbitSize { size: rep.explored, complete: rep.complete })
}
