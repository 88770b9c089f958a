//! Weyl-group elements, canonical words, inversion sets, Bruhat order and
//! bounded enumeration.
//!
//! An element is identified by its action on the root lattice, which is
//! faithful for every Kac-Moody Weyl group. The ShortLex-minimal reduced word
//! is computed once at construction by peeling off the smallest left descent,
//! and equality, hashing and ordering all go through that word.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use rand::Rng;

use crate::cartan::{CartanData, RootVec, WeightVec};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Default cap on the number of elements any enumeration may produce.
pub const DEFAULT_ENUMERATION_BUDGET: usize = 2_000_000;

/// An element of the Weyl group.
///
/// `word = [i1, ..., ik]` stands for `s_{i1} s_{i2} ... s_{ik}`.
#[derive(Clone)]
pub struct WeylElt {
    word: Vec<usize>,
    root_matrix: Matrix,
    inv_root_matrix: Matrix,
    weight_matrix: Matrix,
}

impl WeylElt {
    /// The canonical (ShortLex-minimal) reduced word, 0-based.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Action on simple-root coordinates.
    pub fn root_matrix(&self) -> &Matrix {
        &self.root_matrix
    }

    /// Action on coroot-pairing coordinates.
    pub fn weight_matrix(&self) -> &Matrix {
        &self.weight_matrix
    }

    pub fn act_on_root(&self, beta: &RootVec) -> RootVec {
        RootVec(self.root_matrix.apply(&beta.0))
    }

    pub fn act_on_weight(&self, lambda: &WeightVec) -> WeightVec {
        WeightVec(self.weight_matrix.apply(&lambda.0))
    }

    /// `w(alpha_i)`.
    pub fn image_of_simple(&self, i: usize) -> RootVec {
        RootVec(self.root_matrix.column(i))
    }

    /// `l(w s_i) < l(w)`, i.e. `w(alpha_i) < 0`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        column_negative(&self.root_matrix, i)
    }

    /// `l(s_i w) < l(w)`, i.e. `w^{-1}(alpha_i) < 0`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        column_negative(&self.inv_root_matrix, i)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.root_matrix.dim()).filter(|&i| self.is_right_descent(i)).collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (0..self.root_matrix.dim()).filter(|&i| self.is_left_descent(i)).collect()
    }

    /// The canonical word in the 1-based text syntax, e.g. `"1 2 1"`.
    pub fn word_string(&self) -> String {
        crate::io::format_word(&self.word)
    }
}

// A real root has coordinates of a single sign, so any negative entry
// decides the sign of the whole column.
fn column_negative(m: &Matrix, i: usize) -> bool {
    (0..m.dim()).any(|r| m.get(r, i) < 0)
}

impl PartialEq for WeylElt {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}

impl Eq for WeylElt {}

impl Hash for WeylElt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.word.hash(state);
    }
}

impl Ord for WeylElt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word.len().cmp(&other.word.len()).then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for WeylElt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElt[{}]", self.word_string())
    }
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            write!(f, "e")
        } else {
            write!(f, "{}", self.word_string())
        }
    }
}

/// Inversion set `R+(w) = { beta > 0 : w(beta) < 0 }`.
pub type InversionSet = BTreeSet<RootVec>;

/// The Weyl group of a validated Cartan matrix. Cheap to clone.
#[derive(Clone)]
pub struct WeylGroup {
    cartan: Arc<CartanData>,
    root_gens: Arc<Vec<Matrix>>,
    weight_gens: Arc<Vec<Matrix>>,
    budget: usize,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylGroup")
            .field("cartan", &self.cartan.name())
            .field("rank", &self.rank())
            .field("budget", &self.budget)
            .finish()
    }
}

impl WeylGroup {
    pub fn new(cartan: CartanData) -> Self {
        Self::from_arc(Arc::new(cartan))
    }

    pub fn from_arc(cartan: Arc<CartanData>) -> Self {
        let l = cartan.rank();
        let mut root_gens = Vec::with_capacity(l);
        let mut weight_gens = Vec::with_capacity(l);
        for i in 0..l {
            // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
            let mut s = Matrix::identity(l);
            for m in 0..l {
                s.set(i, m, s.get(i, m) - cartan.entry(i, m));
            }
            root_gens.push(s);
            // c_j -> c_j - c_i a_ji
            let mut t = Matrix::identity(l);
            for j in 0..l {
                t.set(j, i, t.get(j, i) - cartan.entry(j, i));
            }
            weight_gens.push(t);
        }
        WeylGroup {
            cartan,
            root_gens: Arc::new(root_gens),
            weight_gens: Arc::new(weight_gens),
            budget: DEFAULT_ENUMERATION_BUDGET,
        }
    }

    pub fn preset(name: &str) -> Result<Self> {
        Ok(Self::new(CartanData::preset(name)?))
    }

    /// Sets the element cap used by enumerations.
    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn cartan_arc(&self) -> &Arc<CartanData> {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn identity(&self) -> WeylElt {
        let l = self.rank();
        WeylElt {
            word: Vec::new(),
            root_matrix: Matrix::identity(l),
            inv_root_matrix: Matrix::identity(l),
            weight_matrix: Matrix::identity(l),
        }
    }

    pub fn simple(&self, i: usize) -> Result<WeylElt> {
        self.element(&[i])
    }

    /// The element represented by an arbitrary (not necessarily reduced)
    /// 0-based word, in canonical form.
    pub fn element(&self, word: &[usize]) -> Result<WeylElt> {
        for &i in word {
            self.cartan.check_index(i)?;
        }
        let mut inv = Matrix::identity(self.rank());
        for &i in word {
            inv = self.root_gens[i].mul(&inv);
        }
        Ok(self.elt_from_inverse_matrix(inv))
    }

    /// Canonicalizes the element whose inverse acts on roots by `inv`.
    fn elt_from_inverse_matrix(&self, inv: Matrix) -> WeylElt {
        let l = self.rank();
        let mut word = Vec::new();
        let mut peel = inv.clone();
        while let Some(i) = (0..l).find(|&i| column_negative(&peel, i)) {
            word.push(i);
            peel = peel.mul(&self.root_gens[i]);
        }
        debug_assert!(peel.is_identity());
        self.elt_from_canonical_word(word, Some(inv))
    }

    fn elt_from_canonical_word(&self, word: Vec<usize>, inv: Option<Matrix>) -> WeylElt {
        let l = self.rank();
        let mut root_matrix = Matrix::identity(l);
        let mut weight_matrix = Matrix::identity(l);
        for &i in &word {
            root_matrix = root_matrix.mul(&self.root_gens[i]);
            weight_matrix = weight_matrix.mul(&self.weight_gens[i]);
        }
        let inv_root_matrix = inv.unwrap_or_else(|| {
            let mut m = Matrix::identity(l);
            for &i in word.iter().rev() {
                m = m.mul(&self.root_gens[i]);
            }
            m
        });
        WeylElt { word, root_matrix, inv_root_matrix, weight_matrix }
    }

    /// Canonical form of a word; alias of [`WeylGroup::element`].
    pub fn canonical_word(&self, word: &[usize]) -> Result<WeylElt> {
        self.element(word)
    }

    pub fn mul(&self, u: &WeylElt, v: &WeylElt) -> WeylElt {
        let inv = v.inv_root_matrix.mul(&u.inv_root_matrix);
        self.elt_from_inverse_matrix(inv)
    }

    pub fn inverse(&self, w: &WeylElt) -> WeylElt {
        self.elt_from_inverse_matrix(w.root_matrix.clone())
    }

    /// `s_i w`.
    pub fn left_mul(&self, i: usize, w: &WeylElt) -> WeylElt {
        if w.is_left_descent(i) {
            // Canonical words are closed under taking suffixes.
            if w.word.first() == Some(&i) {
                return self.elt_from_canonical_word(w.word[1..].to_vec(), None);
            }
        }
        self.elt_from_inverse_matrix(w.inv_root_matrix.mul(&self.root_gens[i]))
    }

    /// `w s_i`.
    pub fn right_mul(&self, w: &WeylElt, i: usize) -> WeylElt {
        self.elt_from_inverse_matrix(self.root_gens[i].mul(&w.inv_root_matrix))
    }

    /// Simple reflection `s_i` acting on a root.
    pub fn reflect_root(&self, i: usize, beta: &RootVec) -> RootVec {
        RootVec(self.root_gens[i].apply(&beta.0))
    }

    /// Simple reflection `s_i` acting on a weight (linear action).
    pub fn reflect_weight(&self, i: usize, lambda: &WeightVec) -> WeightVec {
        WeightVec(self.weight_gens[i].apply(&lambda.0))
    }

    pub fn act_on_weight(&self, w: &WeylElt, lambda: &WeightVec) -> Result<WeightVec> {
        self.cartan.check_rank(lambda.rank())?;
        Ok(w.act_on_weight(lambda))
    }

    pub fn act_on_root(&self, w: &WeylElt, beta: &RootVec) -> Result<RootVec> {
        self.cartan.check_rank(beta.0.len())?;
        Ok(w.act_on_root(beta))
    }

    /// `R+(w)`, computed along the canonical reduced word.
    pub fn inversion_set(&self, w: &WeylElt) -> InversionSet {
        self.inversion_set_of_word(&w.word)
    }

    /// Inversion set read off a reduced word `[i1, ..., ik]`:
    /// `{ alpha_{ik}, s_{ik}(alpha_{i(k-1)}), ..., s_{ik} ... s_{i2}(alpha_{i1}) }`.
    pub fn inversion_set_of_word(&self, word: &[usize]) -> InversionSet {
        let l = self.rank();
        let mut prefix = Matrix::identity(l);
        let mut roots = BTreeSet::new();
        for &i in word.iter().rev() {
            roots.insert(RootVec(prefix.column(i)));
            prefix = prefix.mul(&self.root_gens[i]);
        }
        roots
    }

    /// Bruhat order test by the greedy subword recursion along the canonical
    /// word of `w`: for a left descent `s` of `w`, `u <= w` iff
    /// `min(u, su) <= sw`.
    pub fn bruhat_leq(&self, u: &WeylElt, w: &WeylElt) -> bool {
        let word = &w.word;
        let mut u = u.clone();
        for (pos, &i) in word.iter().enumerate() {
            let remaining = word.len() - pos;
            if u.length() > remaining {
                return false;
            }
            if u.is_identity() {
                return true;
            }
            if u.length() == remaining {
                return u.word[..] == word[pos..];
            }
            if u.is_left_descent(i) {
                u = self.left_mul(i, &u);
            }
        }
        u.is_identity()
    }

    /// `{ tau : tau <= w }`, by closing the subword products of the
    /// canonical word. Sorted ShortLex.
    pub fn lower_interval(&self, w: &WeylElt) -> Vec<WeylElt> {
        let l = self.rank();
        let mut seen: HashMap<Matrix, Matrix> = HashMap::new();
        seen.insert(Matrix::identity(l), Matrix::identity(l));
        for &i in &w.word {
            let extended: Vec<(Matrix, Matrix)> =
                seen.iter().map(|(m, inv)| (m.mul(&self.root_gens[i]), self.root_gens[i].mul(inv))).collect();
            for (m, inv) in extended {
                seen.entry(m).or_insert(inv);
            }
        }
        let mut out: Vec<WeylElt> = seen.into_values().map(|inv| self.elt_from_inverse_matrix(inv)).collect();
        out.sort();
        out
    }

    /// Every reduced word of `w` (0-based), lexicographically sorted.
    pub fn reduced_words(&self, w: &WeylElt) -> Vec<Vec<usize>> {
        if w.is_identity() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in w.right_descents() {
            let shorter = self.right_mul(w, i);
            for mut word in self.reduced_words(&shorter) {
                word.push(i);
                out.push(word);
            }
        }
        out.sort();
        out
    }

    /// A uniformly chosen descent path gives a random reduced word of `w`.
    pub fn random_reduced_word<R: Rng + ?Sized>(&self, w: &WeylElt, rng: &mut R) -> Vec<usize> {
        let mut word = Vec::with_capacity(w.length());
        let mut cur = w.clone();
        while !cur.is_identity() {
            let descents = cur.right_descents();
            let i = descents[rng.gen_range(0..descents.len())];
            word.push(i);
            cur = self.right_mul(&cur, i);
        }
        word.reverse();
        word
    }

    /// Breadth-first enumeration of every element of length `<= max_length`,
    /// grouped by length and ShortLex-sorted within each length.
    pub fn enumerate_up_to(&self, max_length: usize) -> Enumeration<'_> {
        Enumeration {
            group: self,
            max_length,
            current: Vec::new(),
            pos: 0,
            length: 0,
            emitted: 0,
            started: false,
            done: false,
        }
    }

    /// Collects [`WeylGroup::enumerate_up_to`], failing on budget overrun.
    pub fn elements_up_to(&self, max_length: usize) -> Result<Vec<WeylElt>> {
        self.enumerate_up_to(max_length).collect()
    }

    /// The longest element, for finite type only.
    pub fn longest_element(&self) -> Result<WeylElt> {
        if !self.cartan.is_finite_type() {
            return Err(Error::NotFiniteType);
        }
        let mut w = self.identity();
        while let Some(i) = (0..self.rank()).find(|&i| !w.is_right_descent(i)) {
            w = self.right_mul(&w, i);
        }
        Ok(w)
    }
}

/// Iterator returned by [`WeylGroup::enumerate_up_to`].
pub struct Enumeration<'a> {
    group: &'a WeylGroup,
    max_length: usize,
    current: Vec<WeylElt>,
    pos: usize,
    length: usize,
    emitted: usize,
    started: bool,
    done: bool,
}

impl Enumeration<'_> {
    fn next_level(&mut self) -> Vec<WeylElt> {
        let mut seen: HashMap<Matrix, Matrix> = HashMap::new();
        for w in &self.current {
            for i in 0..self.group.rank() {
                if w.is_right_descent(i) {
                    continue;
                }
                let m = w.root_matrix.mul(&self.group.root_gens[i]);
                seen.entry(m).or_insert_with(|| self.group.root_gens[i].mul(&w.inv_root_matrix));
            }
        }
        let mut level: Vec<WeylElt> = seen.into_values().map(|inv| self.group.elt_from_inverse_matrix(inv)).collect();
        level.sort();
        level
    }
}

impl Iterator for Enumeration<'_> {
    type Item = Result<WeylElt>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.current = vec![self.group.identity()];
        }
        while self.pos >= self.current.len() {
            if self.length >= self.max_length || self.current.is_empty() {
                self.done = true;
                return None;
            }
            self.current = self.next_level();
            self.pos = 0;
            self.length += 1;
        }
        if self.emitted >= self.group.budget {
            self.done = true;
            return Some(Err(Error::BudgetExceeded {
                budget: self.group.budget,
                context: format!("enumerating elements of length <= {}", self.max_length),
            }));
        }
        let w = self.current[self.pos].clone();
        self.pos += 1;
        self.emitted += 1;
        Some(Ok(w))
    }
}

/// Number of elements of each length `0..=max_length`.
pub fn length_counts(elements: &[WeylElt], max_length: usize) -> Vec<usize> {
    let mut counts = vec![0; max_length + 1];
    for w in elements {
        counts[w.length()] += 1;
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}
