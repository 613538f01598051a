//! Entry-set handling: parsing patterns of matrix entries, splitting them
//! into blocks (connected components under shared rows/columns), and
//! classifying each block into one of the supported elementary shapes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A set of matrix entries, 1-based (row, column), independent of any
/// ambient matrix size. Validation against n happens at query time.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Pattern {
    cells: BTreeSet<(u32, u32)>,
}

/// One connected component of a pattern: a maximal subset whose cells are
/// linked through shared rows or columns. Distinct blocks of a pattern
/// share neither rows nor columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    cells: BTreeSet<(u32, u32)>,
}

/// The elementary shapes with known Grassmann classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlockShape {
    /// `len >= 1` entries in one row.
    Row(u32),
    /// `len >= 2` entries in one column (a single entry is a `Row(1)`).
    Col(u32),
    /// Three entries inside a 2x2 box, any orientation.
    Corner,
    /// A full 2x2 box.
    Square,
}

impl BlockShape {
    /// Rows x columns of the bounding box once placed canonically.
    pub fn extent(&self) -> (u32, u32) {
        match self {
            BlockShape::Row(l) => (1, *l),
            BlockShape::Col(m) => (*m, 1),
            BlockShape::Corner | BlockShape::Square => (2, 2),
        }
    }
}

impl fmt::Display for BlockShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockShape::Row(l) => write!(f, "row({})", l),
            BlockShape::Col(m) => write!(f, "col({})", m),
            BlockShape::Corner => write!(f, "corner"),
            BlockShape::Square => write!(f, "square"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PatternError {
    #[error("illegal character '{ch}' at line {line}, column {col}")]
    IllegalCharacter { ch: char, line: usize, col: usize },
    #[error("malformed cell '{text}': expected 'row,col' with positive integers")]
    MalformedCell { text: String },
    #[error("duplicate cell ({0},{1})")]
    DuplicateCell(u32, u32),
    #[error("cell ({0},{1}) outside the {2}x{2} matrix")]
    CellOutsideMatrix(u32, u32, u32),
    #[error("unsupported block shape on cells {}", format_cells(.0))]
    UnsupportedShape(Vec<(u32, u32)>),
    #[error("pattern needs {rows} rows and {cols} columns, exceeding n = {n}")]
    DoesNotFit { rows: u32, cols: u32, n: u32 },
}

fn format_cells(cells: &[(u32, u32)]) -> String {
    cells
        .iter()
        .map(|(r, c)| format!("({},{})", r, c))
        .collect::<Vec<_>>()
        .join(" ")
}

impl Pattern {
    pub fn from_cells(cells: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, PatternError> {
        let mut set = BTreeSet::new();
        for (r, c) in cells {
            if r == 0 || c == 0 {
                return Err(PatternError::MalformedCell {
                    text: format!("{},{}", r, c),
                });
            }
            if !set.insert((r, c)) {
                return Err(PatternError::DuplicateCell(r, c));
            }
        }
        Ok(Pattern { cells: set })
    }

    /// Parses the grid format: one line per matrix row, `X`/`x` marks an
    /// entry, `.` and spaces are empty, lines starting with `#` are skipped.
    pub fn parse_grid(text: &str) -> Result<Self, PatternError> {
        let mut cells = BTreeSet::new();
        let mut row = 0usize;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            if line.starts_with('#') {
                continue;
            }
            row += 1;
            for (i, ch) in line.chars().enumerate() {
                match ch {
                    'X' | 'x' => {
                        cells.insert((row as u32, i as u32 + 1));
                    }
                    '.' | ' ' => {}
                    _ => {
                        return Err(PatternError::IllegalCharacter {
                            ch,
                            line: lineno + 1,
                            col: i + 1,
                        })
                    }
                }
            }
        }
        Ok(Pattern { cells })
    }

    /// Parses the cell-list format `"r,c;r,c;..."`; the empty string is the
    /// empty pattern. Duplicates are rejected.
    pub fn parse_cells(text: &str) -> Result<Self, PatternError> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Pattern::default());
        }
        let mut cells = Vec::new();
        for chunk in text.split(';') {
            let chunk = chunk.trim();
            let mut it = chunk.split(',');
            let (r, c) = match (it.next(), it.next(), it.next()) {
                (Some(r), Some(c), None) => (r.trim(), c.trim()),
                _ => {
                    return Err(PatternError::MalformedCell {
                        text: chunk.to_string(),
                    })
                }
            };
            let parse = |s: &str| {
                s.parse::<u32>().ok().filter(|&v| v > 0).ok_or_else(|| {
                    PatternError::MalformedCell {
                        text: chunk.to_string(),
                    }
                })
            };
            cells.push((parse(r)?, parse(c)?));
        }
        Pattern::from_cells(cells)
    }

    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.cells.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Swaps rows and columns.
    pub fn transpose(&self) -> Pattern {
        Pattern {
            cells: self.cells.iter().map(|&(r, c)| (c, r)).collect(),
        }
    }

    /// Checks that every cell lies within an n x n matrix.
    pub fn check_extent(&self, n: u32) -> Result<(), PatternError> {
        for &(r, c) in &self.cells {
            if r > n || c > n {
                return Err(PatternError::CellOutsideMatrix(r, c, n));
            }
        }
        Ok(())
    }

    /// Splits into blocks: connected components of the graph whose edges
    /// join cells sharing a row or a column. Ordered by minimal cell.
    pub fn decompose(&self) -> Vec<Block> {
        let mut uf = UnionFind::default();
        for &(r, c) in &self.cells {
            uf.union(Node::Row(r), Node::Col(c));
        }
        let mut groups: BTreeMap<Node, BTreeSet<(u32, u32)>> = BTreeMap::new();
        for &(r, c) in &self.cells {
            let root = uf.find(Node::Row(r));
            groups.entry(root).or_default().insert((r, c));
        }
        let mut blocks: Vec<Block> = groups
            .into_values()
            .map(|cells| Block { cells })
            .collect();
        blocks.sort_by_key(|b| b.cells.iter().next().copied());
        blocks
    }

    /// Decomposes and classifies every block.
    pub fn shapes(&self) -> Result<Vec<BlockShape>, PatternError> {
        self.decompose().iter().map(classify).collect()
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<_> = self.cells.iter().copied().collect();
        write!(f, "{{{}}}", format_cells(&cells))
    }
}

impl Block {
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.cells.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn row_set(&self) -> BTreeSet<u32> {
        self.cells.iter().map(|&(r, _)| r).collect()
    }

    pub fn col_set(&self) -> BTreeSet<u32> {
        self.cells.iter().map(|&(_, c)| c).collect()
    }
}

/// Classifies a connected block. Row and column permutations are free, so
/// only the distinct-row/distinct-column counts matter: any 3 cells meeting
/// 2 rows and 2 columns normalize to the corner, any 4 to the square.
pub fn classify(block: &Block) -> Result<BlockShape, PatternError> {
    let rows = block.row_set().len();
    let cols = block.col_set().len();
    let s = block.len() as u32;
    match (rows, cols, s) {
        (1, _, l) => Ok(BlockShape::Row(l)),
        (_, 1, m) => Ok(BlockShape::Col(m)),
        (2, 2, 3) => Ok(BlockShape::Corner),
        (2, 2, 4) => Ok(BlockShape::Square),
        _ => Err(PatternError::UnsupportedShape(
            block.cells.iter().copied().collect(),
        )),
    }
}

/// Lays shapes out along the diagonal of an n x n grid, one block after
/// another, so that no two blocks share a row or a column.
pub fn place_shapes(shapes: &[BlockShape], n: u32) -> Result<Pattern, PatternError> {
    let mut row = 1u32;
    let mut col = 1u32;
    let mut cells = BTreeSet::new();
    for shape in shapes {
        let (h, w) = shape.extent();
        match shape {
            BlockShape::Row(l) => {
                for j in 0..*l {
                    cells.insert((row, col + j));
                }
            }
            BlockShape::Col(m) => {
                for i in 0..*m {
                    cells.insert((row + i, col));
                }
            }
            BlockShape::Corner => {
                cells.extend([(row, col), (row, col + 1), (row + 1, col)]);
            }
            BlockShape::Square => {
                cells.extend([(row, col), (row, col + 1), (row + 1, col), (row + 1, col + 1)]);
            }
        }
        row += h;
        col += w;
    }
    let (rows, cols) = (row - 1, col - 1);
    if rows > n || cols > n {
        return Err(PatternError::DoesNotFit { rows, cols, n });
    }
    Ok(Pattern { cells })
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
enum Node {
    Row(u32),
    Col(u32),
}

#[derive(Default)]
struct UnionFind {
    parent: BTreeMap<Node, Node>,
}

impl UnionFind {
    fn find(&mut self, x: Node) -> Node {
        let p = *self.parent.get(&x).unwrap_or(&x);
        if p == x {
            return x;
        }
        let root = self.find(p);
        self.parent.insert(x, root);
        root
    }

    fn union(&mut self, a: Node, b: Node) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent.insert(rb, ra);
        }
    }
}
