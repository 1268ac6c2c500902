//! Formal sums of tensor products of words in `a`, `a⁺`, `N` and `q^{cN+d}`,
//! and their action on basis kets of a truncated representation.
//!
//! Every word maps a basis ket to a multiple of a single basis ket, so a
//! formal sum applied to `|n₁⟩⊗…⊗|n_k⟩` is a short sparse vector. That keeps
//! the checks on triple tensor products cheap without forming Kronecker
//! products.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::{HopfConstants, QExponentialOfN};
use crate::repmat::LadderMatrices;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Factor {
    Lower,
    Raise,
    Number,
    QPow(QExponentialOfN),
}

/// Product of factors, written left to right; the empty word is `1`.
pub type Word = Vec<Factor>;

#[derive(Clone, Debug, PartialEq)]
pub struct TensorTerm {
    pub coeff: Complex64,
    pub slots: Vec<Word>,
}

/// `Σ coeff · w₁ ⊗ … ⊗ w_k` with a fixed number of slots.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorSum {
    pub slots: usize,
    pub terms: Vec<TensorTerm>,
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

impl TensorSum {
    pub fn zero(slots: usize) -> Self {
        Self {
            slots,
            terms: Vec::new(),
        }
    }

    pub fn unit(slots: usize) -> Self {
        Self::single(c(1.0), vec![Word::new(); slots])
    }

    pub fn single(coeff: Complex64, slots: Vec<Word>) -> Self {
        Self {
            slots: slots.len(),
            terms: vec![TensorTerm { coeff, slots }],
        }
    }

    pub fn word(word: Word) -> Self {
        Self::single(c(1.0), vec![word])
    }

    pub fn plus(mut self, other: TensorSum) -> TensorSum {
        assert_eq!(self.slots, other.slots, "slot count mismatch");
        self.terms.extend(other.terms);
        self
    }

    pub fn scale(mut self, s: Complex64) -> TensorSum {
        for t in &mut self.terms {
            t.coeff *= s;
        }
        self
    }

    /// Slot-wise product.
    pub fn mul(&self, rhs: &TensorSum) -> TensorSum {
        assert_eq!(self.slots, rhs.slots, "slot count mismatch");
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for x in &self.terms {
            for y in &rhs.terms {
                let slots = x
                    .slots
                    .iter()
                    .zip(&y.slots)
                    .map(|(u, v)| u.iter().chain(v).copied().collect())
                    .collect();
                terms.push(TensorTerm {
                    coeff: x.coeff * y.coeff,
                    slots,
                });
            }
        }
        TensorSum {
            slots: self.slots,
            terms,
        }
    }

    /// Replaces slot `i` by the image of its word under `f`, which produces a
    /// sum with `width` slots.
    fn expand_slot(&self, i: usize, width: usize, f: impl Fn(&Word) -> TensorSum) -> TensorSum {
        let mut out = TensorSum::zero(self.slots - 1 + width);
        for t in &self.terms {
            for image in f(&t.slots[i]).terms {
                let mut slots = Vec::with_capacity(out.slots);
                slots.extend_from_slice(&t.slots[..i]);
                slots.extend(image.slots);
                slots.extend_from_slice(&t.slots[i + 1..]);
                out.terms.push(TensorTerm {
                    coeff: t.coeff * image.coeff,
                    slots,
                });
            }
        }
        out
    }

    /// `id ⊗ … ⊗ Δ ⊗ … ⊗ id` with `Δ` in slot `i`.
    pub fn coproduct_at(&self, i: usize, k: &HopfConstants) -> TensorSum {
        self.expand_slot(i, 2, |w| coproduct_word(w, k))
    }

    /// `ε` in slot `i`.
    pub fn counit_at(&self, i: usize, k: &HopfConstants) -> TensorSum {
        self.expand_slot(i, 0, |w| TensorSum::single(counit_word(w, k), Vec::new()))
    }

    /// `S` in slot `i`.
    pub fn antipode_at(&self, i: usize, k: &HopfConstants) -> TensorSum {
        self.expand_slot(i, 1, |w| antipode_word(w, k))
    }

    /// Multiplication of the first two slots.
    pub fn multiply_first_two(&self) -> TensorSum {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut slots = Vec::with_capacity(self.slots - 1);
                slots.push(t.slots[0].iter().chain(&t.slots[1]).copied().collect());
                slots.extend_from_slice(&t.slots[2..]);
                TensorTerm {
                    coeff: t.coeff,
                    slots,
                }
            })
            .collect();
        TensorSum {
            slots: self.slots - 1,
            terms,
        }
    }

    /// Applies the sum to `|idx[0]⟩ ⊗ … ⊗ |idx[k−1]⟩`. Each output entry
    /// carries the sum of absolute contributions as a scale for residuals.
    pub fn apply(
        &self,
        rep: &Realization,
        idx: &[usize],
    ) -> BTreeMap<Vec<usize>, (Complex64, f64)> {
        let mut out: BTreeMap<Vec<usize>, (Complex64, f64)> = BTreeMap::new();
        'terms: for t in &self.terms {
            let mut coeff = t.coeff;
            let mut target = Vec::with_capacity(idx.len());
            for (word, &start) in t.slots.iter().zip(idx) {
                match rep.apply_word(word, start) {
                    Some((w, end)) => {
                        coeff *= w;
                        target.push(end);
                    }
                    None => continue 'terms,
                }
            }
            let entry = out.entry(target).or_insert((c(0.0), 0.0));
            entry.0 += coeff;
            entry.1 += coeff.norm();
        }
        out
    }
}

fn product(images: impl Iterator<Item = TensorSum>, slots: usize) -> TensorSum {
    images.fold(TensorSum::unit(slots), |acc, x| acc.mul(&x))
}

/// `Δ` of a single factor, from the stored constants.
fn coproduct_factor(f: &Factor, k: &HopfConstants) -> TensorSum {
    let [c1, c2, c3, c4, c5, c6, ..] = k.c;
    let q = |scale: Complex64| {
        Factor::QPow(QExponentialOfN {
            scale,
            shift: c(0.0),
        })
    };
    match *f {
        Factor::Raise => {
            TensorSum::single(c1, vec![vec![Factor::Raise], vec![q(c(k.alpha1))]]).plus(
                TensorSum::single(c2, vec![vec![q(c(k.alpha2))], vec![Factor::Raise]]),
            )
        }
        Factor::Lower => {
            TensorSum::single(c3, vec![vec![Factor::Lower], vec![q(c(k.alpha3))]]).plus(
                TensorSum::single(c4, vec![vec![q(c(k.alpha4))], vec![Factor::Lower]]),
            )
        }
        Factor::Number => TensorSum::single(c5, vec![vec![Factor::Number], vec![]])
            .plus(TensorSum::single(c6, vec![vec![], vec![Factor::Number]]))
            .plus(TensorSum::single(k.gamma1, vec![vec![], vec![]])),
        // q^{cN+d} ↦ q^{d + cγ₁} q^{c·c₅N} ⊗ q^{c·c₆N}
        Factor::QPow(e) => TensorSum::single(
            k.q_pow(e.shift + e.scale * k.gamma1),
            vec![vec![q(e.scale * c5)], vec![q(e.scale * c6)]],
        ),
    }
}

pub fn coproduct_word(w: &Word, k: &HopfConstants) -> TensorSum {
    product(w.iter().map(|f| coproduct_factor(f, k)), 2)
}

fn counit_factor(f: &Factor, k: &HopfConstants) -> Complex64 {
    let [.., c7, c8, c9, _, _, _, _] = k.c;
    match *f {
        Factor::Raise => c7,
        Factor::Lower => c8,
        Factor::Number => c9,
        Factor::QPow(e) => k.q_pow(e.scale * c9 + e.shift),
    }
}

pub fn counit_word(w: &Word, k: &HopfConstants) -> Complex64 {
    w.iter().map(|f| counit_factor(f, k)).product()
}

fn antipode_factor(f: &Factor, k: &HopfConstants) -> TensorSum {
    let [.., c10, c11, c12, c13] = k.c;
    match *f {
        Factor::Raise => TensorSum::single(-c10, vec![vec![Factor::Raise]]),
        Factor::Lower => TensorSum::single(-c11, vec![vec![Factor::Lower]]),
        Factor::Number => TensorSum::single(-c12, vec![vec![Factor::Number]])
            .plus(TensorSum::single(c13, vec![vec![]])),
        // q^{cN+d} ↦ q^{c(−c₁₂N + c₁₃) + d}
        Factor::QPow(e) => TensorSum::word(vec![Factor::QPow(QExponentialOfN {
            scale: -e.scale * c12,
            shift: e.scale * c13 + e.shift,
        })]),
    }
}

/// `S` reverses the order of factors.
pub fn antipode_word(w: &Word, k: &HopfConstants) -> TensorSum {
    product(w.iter().rev().map(|f| antipode_factor(f, k)), 1)
}

/// The data of a truncated base representation needed to apply words.
#[derive(Clone, Debug)]
pub struct Realization {
    pub dim: usize,
    pub n_values: Vec<f64>,
    /// `a|i⟩ = lower[i]·|i−1⟩`.
    pub lower: Vec<f64>,
    /// `a⁺|i⟩ = raise[i]·|i+1⟩`.
    pub raise: Vec<f64>,
    pub ln_q: f64,
}

impl Realization {
    pub fn new(rep: &LadderMatrices, ln_q: f64) -> Self {
        let dim = rep.dim;
        let lower = (0..dim)
            .map(|i| if i == 0 { 0.0 } else { rep.a[(i - 1, i)] })
            .collect();
        let raise = (0..dim)
            .map(|i| {
                if i + 1 < dim {
                    rep.a_plus[(i + 1, i)]
                } else {
                    0.0
                }
            })
            .collect();
        Self {
            dim,
            n_values: rep.n_values(),
            lower,
            raise,
            ln_q,
        }
    }

    /// `word|start⟩ = w·|end⟩`, or `None` when the image is zero.
    pub fn apply_word(&self, word: &Word, start: usize) -> Option<(Complex64, usize)> {
        let mut idx = start;
        let mut w = c(1.0);
        for f in word.iter().rev() {
            match *f {
                Factor::Lower => {
                    if idx == 0 {
                        return None;
                    }
                    w *= self.lower[idx];
                    idx -= 1;
                }
                Factor::Raise => {
                    if idx + 1 >= self.dim {
                        return None;
                    }
                    w *= self.raise[idx];
                    idx += 1;
                }
                Factor::Number => w *= self.n_values[idx],
                Factor::QPow(e) => {
                    w *= ((e.scale * self.n_values[idx] + e.shift) * self.ln_q).exp()
                }
            }
        }
        Some((w, idx))
    }
}

/// Multi-indices `(n₁, …, n_k)` with `Σ nᵢ ≤ max_total`.
pub fn interior_indices(slots: usize, max_total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(slots);
    fn rec(slots: usize, left: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == slots {
            out.push(current.clone());
            return;
        }
        for n in 0..=left {
            current.push(n);
            rec(slots, left - n, current, out);
            current.pop();
        }
    }
    rec(slots, max_total, &mut current, &mut out);
    out
}

/// Largest scaled entry of `lhs − rhs` over the given kets.
pub fn max_difference(
    lhs: &TensorSum,
    rhs: &TensorSum,
    rep: &Realization,
    kets: &[Vec<usize>],
) -> f64 {
    let mut worst: f64 = 0.0;
    for ket in kets {
        let mut diff = lhs.apply(rep, ket);
        for (target, (value, size)) in rhs.apply(rep, ket) {
            let entry = diff.entry(target).or_insert((c(0.0), 0.0));
            entry.0 -= value;
            entry.1 += size;
        }
        for (value, size) in diff.values() {
            worst = worst.max(crate::report::scaled(value.norm(), *size));
        }
    }
    worst
}
