//! Clause database, typed variable dictionary, cardinality helpers, and
//! DIMACS emission shared by all encoders.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

/// A DIMACS-style literal: nonzero integer, negative means negated.
pub type Lit = i32;

/// Symbolic key of a CNF variable.
///
/// `boxi` indexes the box a variable belongs to (0 is the primary box).
/// Directions in Z4 follow the square's dot frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarKey {
    /// Edge `e` of box `boxi` is preserved (not cut).
    Edge { boxi: u8, edge: u32 },
    /// Square `sq` of box `boxi` has orientation `d`.
    Orient { boxi: u8, sq: u32, d: u8 },
    /// The preserved edge in local direction `k` of `sq` is directed away
    /// from `sq`.
    Dir { boxi: u8, sq: u32, k: u8 },
    /// Square `sq` of box 0 is the image of square `sbar` of box `boxi`.
    Map { boxi: u8, sq: u32, sbar: u32 },
    /// Orientation change between `sq` (box 0) and its preimage in box
    /// `boxi`.
    Rho { boxi: u8, sq: u32, r: u8 },
    /// Breadth-first reachability: `sq` of box `boxi` reached by step `k`.
    Step { boxi: u8, sq: u32, k: u16 },
    /// Gate for one conjunction inside the reachability biconditional.
    StepGate { boxi: u8, sq: u32, nbr: u8, k: u16 },
    /// Auxiliary variable from a cardinality ladder.
    Aux(u32),
}

/// Bijective dictionary between symbolic keys and DIMACS variable ids.
///
/// Ids are dense `1..=len`; every allocated id decodes to exactly one key.
#[derive(Debug, Default, Clone)]
pub struct VarMap {
    by_key: BTreeMap<VarKey, i32>,
    by_id: Vec<VarKey>,
    aux_counter: u32,
}

impl VarMap {
    pub fn new() -> Self {
        VarMap::default()
    }

    /// Returns the variable for `key`, allocating it on first use.
    pub fn var(&mut self, key: VarKey) -> i32 {
        if let Some(&v) = self.by_key.get(&key) {
            return v;
        }
        let v = self.by_id.len() as i32 + 1;
        self.by_key.insert(key, v);
        self.by_id.push(key);
        v
    }

    /// Allocates a fresh ladder auxiliary variable.
    pub fn fresh_aux(&mut self) -> i32 {
        let key = VarKey::Aux(self.aux_counter);
        self.aux_counter += 1;
        self.var(key)
    }

    /// Looks up a key without allocating.
    pub fn get(&self, key: VarKey) -> Option<i32> {
        self.by_key.get(&key).copied()
    }

    /// Decodes a variable id back to its key.
    pub fn key_of(&self, var: i32) -> Option<VarKey> {
        debug_assert!(var > 0);
        self.by_id.get(var as usize - 1).copied()
    }

    pub fn len(&self) -> u32 {
        self.by_id.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.by_id.is_empty()
    }

    /// All allocated variables whose key satisfies `pred`.
    pub fn vars_matching(&self, mut pred: impl FnMut(&VarKey) -> bool) -> Vec<i32> {
        self.by_id
            .iter()
            .enumerate()
            .filter(|(_, k)| pred(k))
            .map(|(i, _)| i as i32 + 1)
            .collect()
    }
}

/// Clause database. Variable count tracks the highest mentioned id so a
/// formula stays valid even when some allocated variables are unused.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Cnf {
    var_count: i32,
    clauses: Vec<Vec<Lit>>,
}

/// Error for an `exactly_one` over an empty literal set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmptySet;

impl fmt::Display for EmptySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exactly-one constraint over an empty literal set")
    }
}

impl core::error::Error for EmptySet {}

impl Cnf {
    pub fn new() -> Self {
        Cnf::default()
    }

    pub fn var_count(&self) -> i32 {
        self.var_count
    }

    /// Raises the declared variable count (e.g. to cover allocated but
    /// unconstrained variables).
    pub fn ensure_vars(&mut self, n: i32) {
        if n > self.var_count {
            self.var_count = n;
        }
    }

    pub fn clauses(&self) -> &[Vec<Lit>] {
        &self.clauses
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn add_clause(&mut self, lits: &[Lit]) {
        debug_assert!(!lits.is_empty(), "empty clause added directly");
        debug_assert!(
            lits.iter().all(|&l| l != 0),
            "literal 0 is not representable"
        );
        debug_assert!(
            lits.iter().all(|&a| lits.iter().all(|&b| a != -b)),
            "tautological clause"
        );
        for &l in lits {
            self.ensure_vars(l.abs());
        }
        self.clauses.push(lits.to_vec());
    }

    pub fn add_unit(&mut self, lit: Lit) {
        self.add_clause(&[lit]);
    }

    /// Appends clauses satisfiable iff exactly one of `lits` is true.
    ///
    /// Up to 4 literals the pairwise encoding is used; larger sets (the
    /// mapping rows) get a sequential ladder with auxiliaries registered
    /// in `vm`.
    pub fn exactly_one(&mut self, vm: &mut VarMap, lits: &[Lit]) -> Result<(), EmptySet> {
        if lits.is_empty() {
            return Err(EmptySet);
        }
        self.add_clause(lits); // at least one
        if lits.len() <= 4 {
            for i in 0..lits.len() {
                for j in i + 1..lits.len() {
                    self.add_clause(&[-lits[i], -lits[j]]);
                }
            }
        } else {
            // Sequential ladder: aux[i] <-> "some lit with index <= i is
            // true"; a literal may only fire when the ladder below it is
            // still off.
            let n = lits.len();
            let mut aux = Vec::with_capacity(n - 1);
            for _ in 0..n - 1 {
                aux.push(vm.fresh_aux());
            }
            self.add_clause(&[-lits[0], aux[0]]);
            for i in 1..n - 1 {
                self.add_clause(&[-lits[i], aux[i]]);
                self.add_clause(&[-aux[i - 1], aux[i]]);
            }
            for i in 1..n {
                self.add_clause(&[-lits[i], -aux[i - 1]]);
            }
        }
        Ok(())
    }

    /// Writes the formula in DIMACS CNF, deterministically.
    pub fn emit_dimacs(&self, out: &mut String) {
        let _ = write!(out, "p cnf {} {}\n", self.var_count, self.clauses.len());
        for clause in &self.clauses {
            for &l in clause {
                let _ = write!(out, "{} ", l);
            }
            let _ = out.write_str("0\n");
        }
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = String::new();
        self.emit_dimacs(&mut s);
        s
    }

    /// Parses DIMACS CNF produced by `emit_dimacs` (also accepts comment
    /// lines). Used by the round-trip tests and the external solver path.
    pub fn parse_dimacs(input: &str) -> Result<Cnf, String> {
        let mut cnf = Cnf::new();
        let mut declared_vars = 0i32;
        let mut seen_header = false;
        let mut current = Vec::new();
        for line in input.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if line.starts_with('p') {
                let mut it = line.split_whitespace();
                it.next();
                if it.next() != Some("cnf") {
                    return Err(String::from("expected 'p cnf' header"));
                }
                declared_vars = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| String::from("bad variable count"))?;
                seen_header = true;
                continue;
            }
            if !seen_header {
                return Err(String::from("clause before header"));
            }
            for tok in line.split_whitespace() {
                let l: i32 = tok
                    .parse()
                    .map_err(|_| alloc::format!("bad literal {tok:?}"))?;
                if l == 0 {
                    if current.is_empty() {
                        return Err(String::from("empty clause"));
                    }
                    cnf.add_clause(&current);
                    current.clear();
                } else {
                    current.push(l);
                }
            }
        }
        if !current.is_empty() {
            return Err(String::from("unterminated clause"));
        }
        cnf.ensure_vars(declared_vars);
        Ok(cnf)
    }
}
