use std::collections::HashMap;
use std::sync::Arc;

use exactlin::{SparseMatrix, SparseVector};

use crate::cocyclic::{Chain, ChainKey};
use crate::error::{HopfError, Result};
use crate::exec;
use crate::hopf::{HopfPreset, Word};

/// Coordinates on (slot basis)^⊗slots ⊗ Y with mixed-radix indexing; the Y
/// index varies fastest.
#[derive(Clone, Debug)]
pub struct ChainSpace {
    slots: usize,
    basis: Arc<Vec<Word>>,
    index: Arc<HashMap<Word, usize>>,
    ydim: usize,
    dim: usize,
}

impl ChainSpace {
    pub fn new(basis: &[Word], slots: usize, ydim: usize) -> Self {
        let index = basis.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        let dim = basis.len().pow(slots as u32) * ydim;
        ChainSpace {
            slots,
            basis: Arc::new(basis.to_vec()),
            index: Arc::new(index),
            ydim,
            dim,
        }
    }

    /// Same slot basis and Y, different number of slots.
    pub fn with_slots(&self, slots: usize) -> Self {
        ChainSpace {
            slots,
            basis: self.basis.clone(),
            index: self.index.clone(),
            ydim: self.ydim,
            dim: self.basis.len().pow(slots as u32) * self.ydim,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn key(&self, mut i: usize) -> ChainKey {
        let y = i % self.ydim;
        i /= self.ydim;
        let b = self.basis.len();
        let mut words = vec![self.basis[0]; self.slots];
        for s in (0..self.slots).rev() {
            words[s] = self.basis[i % b];
            i /= b;
        }
        ChainKey::new(&words, y)
    }

    pub fn index(&self, k: &ChainKey) -> Option<usize> {
        if k.slots.len() != self.slots {
            return None;
        }
        let mut i = 0;
        for w in &k.slots {
            i = i * self.basis.len() + self.index.get(w)?;
        }
        Some(i * self.ydim + k.y)
    }

    pub fn basis_chain(&self, i: usize) -> Chain {
        Chain::basis(self.key(i))
    }

    pub fn to_vector(&self, h: &HopfPreset, v: &Chain) -> Result<SparseVector> {
        let mut entries = Vec::with_capacity(v.len());
        for (k, c) in v.iter() {
            let i = self.index(k).ok_or_else(|| {
                let bad = k
                    .slots
                    .iter()
                    .find(|w| !self.index.contains_key(w))
                    .map(|w| h.word_name(w))
                    .unwrap_or_else(|| format!("{} slots", k.slots.len()));
                HopfError::DegreeOverflow {
                    word: bad,
                    cap: h.cap().unwrap_or(0),
                }
            })?;
            entries.push((i, c.clone()));
        }
        Ok(SparseVector::from_entries(self.dim, entries))
    }

    pub fn to_chain(&self, v: &SparseVector) -> Chain {
        v.entries().iter().map(|(i, c)| (self.key(*i), c.clone())).collect()
    }
}

/// Matrix of a linear operator given on chains, assembled column by column
/// (in parallel when enabled).
pub fn assemble<F>(h: &HopfPreset, domain: &ChainSpace, codomain: &ChainSpace, f: F) -> Result<SparseMatrix>
where
    F: Fn(&Chain) -> Result<Chain> + Sync + Send,
{
    let cols = exec::try_map_range(domain.dim(), |i| codomain.to_vector(h, &f(&domain.basis_chain(i))?))?;
    Ok(SparseMatrix::from_columns(codomain.dim(), cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_radix_round_trip() {
        let h = HopfPreset::sweedler4();
        let s = ChainSpace::new(h.basis(), 3, 2);
        assert_eq!(s.dim(), 128);
        for i in 0..s.dim() {
            assert_eq!(s.index(&s.key(i)), Some(i));
        }
        assert_eq!(s.with_slots(0).dim(), 2);
    }
}
