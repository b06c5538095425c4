//! Words in a free monoid on indexed generators.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

/// A word is a sequence of 0-based generator indices; its degree is its
/// length when all generators sit in degree one.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(letter: usize) -> Self {
        Word(alloc::vec![letter])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.0.iter().copied().max()
    }

    /// Degree with respect to per-generator degrees.
    pub fn degree(&self, degrees: &[usize]) -> usize {
        self.0.iter().map(|&l| degrees[l]).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn prepend(&self, letter: usize) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + 1);
        letters.push(letter);
        letters.extend_from_slice(&self.0);
        Word(letters)
    }

    pub fn append(&self, letter: usize) -> Word {
        let mut letters = self.0.clone();
        letters.push(letter);
        Word(letters)
    }

    pub fn contains_subword(&self, sub: &Word) -> bool {
        let k = sub.0.len();
        if k == 0 {
            return true;
        }
        if k > self.0.len() {
            return false;
        }
        self.0.windows(k).any(|win| win == sub.0.as_slice())
    }

    /// Position of this word in the lexicographic list of all length-`n`
    /// words over `g` letters.
    pub fn lex_index(&self, g: usize) -> usize {
        self.0.iter().fold(0, |acc, &l| acc * g + l)
    }
}

/// All length-`n` words over `g` letters, in lexicographic order.
pub fn all_words(g: usize, n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn go(g: usize, n: usize, current: &mut Vec<usize>, out: &mut Vec<Word>) {
        if current.len() == n {
            out.push(Word::new(current.clone()));
            return;
        }
        for l in 0..g {
            current.push(l);
            go(g, n, current, out);
            current.pop();
        }
    }
    go(g, n, &mut current, &mut out);
    out
}

/// All length-`n` words over `g` letters that avoid every word of
/// `forbidden` as a subword, in lexicographic order.
///
/// Extending a clean word can only create a forbidden subword at the new
/// suffix, so only suffixes are rechecked.
pub fn words_avoiding(g: usize, forbidden: &BTreeSet<Word>, n: usize) -> Vec<Word> {
    fn suffix_hits(word: &[usize], forbidden: &BTreeSet<Word>) -> bool {
        forbidden.iter().any(|f| {
            let k = f.len();
            k <= word.len() && word[word.len() - k..] == *f.letters()
        })
    }
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::with_capacity(n);
    fn go(
        g: usize,
        n: usize,
        forbidden: &BTreeSet<Word>,
        current: &mut Vec<usize>,
        out: &mut Vec<Word>,
        hits: fn(&[usize], &BTreeSet<Word>) -> bool,
    ) {
        if current.len() == n {
            out.push(Word::new(current.clone()));
            return;
        }
        for l in 0..g {
            current.push(l);
            if !hits(current, forbidden) {
                go(g, n, forbidden, current, out, hits);
            }
            current.pop();
        }
    }
    if forbidden.iter().any(|f| f.is_empty()) {
        return out; // the empty word forbids everything
    }
    go(g, n, forbidden, &mut current, &mut out, suffix_hits);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_and_index() {
        let words = all_words(3, 2);
        assert_eq!(words.len(), 9);
        for (i, w) in words.iter().enumerate() {
            assert_eq!(w.lex_index(3), i);
        }
        assert!(words.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn avoiding_squares() {
        let forbidden: BTreeSet<Word> =
            (0..3).map(|l| Word::new(alloc::vec![l, l])).collect();
        assert_eq!(words_avoiding(3, &forbidden, 0), alloc::vec![Word::empty()]);
        let w2 = words_avoiding(3, &forbidden, 2);
        assert_eq!(w2.len(), 6);
        assert!(w2.iter().all(|w| w.letters()[0] != w.letters()[1]));
        assert_eq!(words_avoiding(3, &forbidden, 5).len(), 48);
    }

    #[test]
    fn subword_detection() {
        let w = Word::new(alloc::vec![0, 1, 2]);
        assert!(w.contains_subword(&Word::new(alloc::vec![1, 2])));
        assert!(!w.contains_subword(&Word::new(alloc::vec![2, 1])));
        assert!(w.contains_subword(&Word::empty()));
    }
}
