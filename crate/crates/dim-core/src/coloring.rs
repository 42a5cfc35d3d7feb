use std::fmt;

/// White sorts before Black so that total colorings compare
/// lexicographically with W < B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::White => 'W',
            Color::Black => 'B',
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A partial map from the vertices `0..n` of some host graph to colors;
/// `None` means uncolored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Coloring {
    slots: Vec<Option<Color>>,
}

impl Coloring {
    pub fn new(n: usize) -> Coloring {
        Coloring { slots: vec![None; n] }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, Color)]) -> Coloring {
        let mut c = Coloring::new(n);
        for &(v, color) in pairs {
            c.set(v, color);
        }
        c
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<Color> {
        self.slots[v]
    }

    pub fn set(&mut self, v: usize, color: Color) {
        self.slots[v] = Some(color);
    }

    pub fn clear(&mut self, v: usize) {
        self.slots[v] = None;
    }

    pub fn is_total(&self) -> bool {
        self.slots.iter().all(|s| s.is_some())
    }

    pub fn first_uncolored(&self) -> Option<usize> {
        self.slots.iter().position(|s| s.is_none())
    }

    pub fn colored_count(&self) -> usize {
        self.slots.iter().filter(|s| s.is_some()).count()
    }

    /// `(vertex, color)` pairs in ascending vertex order.
    pub fn colored(&self) -> impl Iterator<Item = (usize, Color)> + '_ {
        self.slots
            .iter()
            .enumerate()
            .filter_map(|(v, s)| s.map(|c| (v, c)))
    }

    pub fn uncolored(&self) -> impl Iterator<Item = usize> + '_ {
        self.slots
            .iter()
            .enumerate()
            .filter_map(|(v, s)| if s.is_none() { Some(v) } else { None })
    }

    /// Copies every colored slot of `other` into `self`, overwriting.
    pub fn absorb(&mut self, other: &Coloring) {
        assert_eq!(self.len(), other.len());
        for (v, c) in other.colored() {
            self.set(v, c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn white_sorts_before_black() {
        assert!(Color::White < Color::Black);
        let a = Coloring::from_pairs(3, &[(0, Color::White), (1, Color::Black), (2, Color::Black)]);
        let b = Coloring::from_pairs(3, &[(0, Color::Black), (1, Color::White), (2, Color::Black)]);
        assert!(a < b);
    }

    #[test]
    fn totality() {
        let mut c = Coloring::new(2);
        assert!(!c.is_total());
        assert_eq!(c.first_uncolored(), Some(0));
        c.set(0, Color::Black);
        c.set(1, Color::White);
        assert!(c.is_total());
        assert_eq!(c.colored().collect::<Vec<_>>(), vec![(0, Color::Black), (1, Color::White)]);
    }
}
