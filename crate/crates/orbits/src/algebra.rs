//! The four classical matrix algebras and their nilpotent classes.
//!
//! An [`AlgebraKind`] bundles a family tag (gl, sl, sp, o) with an ambient
//! dimension. The symplectic and orthogonal families carry a fixed bilinear
//! form ([`AlgebraKind::omega`]); membership in the group or its Lie algebra
//! is decided by the exact defining equations. Nilpotent conjugacy classes
//! are labelled by partitions subject to the parity-multiplicity rules, and
//! [`AlgebraKind::standard_form`] builds an explicit nilpotent matrix of a
//! requested class, nesting paired Jordan blocks around a self-mirrored
//! center.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::{direct_sum, jordan_block, ExactMatrix};
use crate::partition::Partition;
use crate::scalar::FieldScalar;

/// The four supported families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GroupTag {
    Gl,
    Sl,
    Sp,
    O,
}

impl GroupTag {
    pub fn name(self) -> &'static str {
        match self {
            GroupTag::Gl => "gl",
            GroupTag::Sl => "sl",
            GroupTag::Sp => "sp",
            GroupTag::O => "o",
        }
    }
}

impl FromStr for GroupTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(GroupTag::Gl),
            "sl" => Ok(GroupTag::Sl),
            "sp" => Ok(GroupTag::Sp),
            "o" => Ok(GroupTag::O),
            other => Err(Error::UnsupportedKind(other.to_string())),
        }
    }
}

/// A family tag together with the ambient dimension N.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraKind {
    tag: GroupTag,
    n: usize,
}

impl AlgebraKind {
    /// Validating constructor: N must be positive, and even for sp.
    pub fn new(tag: GroupTag, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ParameterDomain("dimension must be positive".into()));
        }
        if tag == GroupTag::Sp && n % 2 != 0 {
            return Err(Error::ParameterDomain(format!(
                "sp requires an even dimension, got {n}"
            )));
        }
        Ok(AlgebraKind { tag, n })
    }

    pub fn gl(n: usize) -> Result<Self> {
        Self::new(GroupTag::Gl, n)
    }

    pub fn sl(n: usize) -> Result<Self> {
        Self::new(GroupTag::Sl, n)
    }

    pub fn sp(n: usize) -> Result<Self> {
        Self::new(GroupTag::Sp, n)
    }

    pub fn o(n: usize) -> Result<Self> {
        Self::new(GroupTag::O, n)
    }

    pub fn tag(&self) -> GroupTag {
        self.tag
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> &'static str {
        self.tag.name()
    }

    /// The defining bilinear form. Errors for gl/sl, which carry none.
    ///
    /// For sp_2n the form has columns (-e_2n, ..., -e_{n+1}, e_n, ..., e_1):
    /// entry (2n+1-j, j) is -1 for j <= n and +1 for j > n (1-based). For o_N
    /// it is the anti-identity.
    pub fn omega(&self) -> Result<ExactMatrix> {
        let n = self.n;
        match self.tag {
            GroupTag::Gl | GroupTag::Sl => {
                Err(Error::UnsupportedKind(format!("{} carries no bilinear form", self.name())))
            }
            GroupTag::Sp => Ok(ExactMatrix::from_fn(n, n, |i, j| {
                if i + j == n - 1 {
                    FieldScalar::from_int(if j < n / 2 { -1 } else { 1 })
                } else {
                    FieldScalar::zero()
                }
            })),
            GroupTag::O => Ok(ExactMatrix::from_fn(n, n, |i, j| {
                if i + j == n - 1 {
                    FieldScalar::one()
                } else {
                    FieldScalar::zero()
                }
            })),
        }
    }

    /// Exact membership test for the Lie algebra: gl takes everything, sl
    /// requires trace zero, sp/o require x^T*omega + omega*x = 0.
    pub fn in_lie_algebra(&self, x: &ExactMatrix) -> Result<bool> {
        self.check_dims(x)?;
        match self.tag {
            GroupTag::Gl => Ok(true),
            GroupTag::Sl => Ok(x.trace()?.is_zero()),
            GroupTag::Sp | GroupTag::O => {
                let omega = self.omega()?;
                let lhs = x.transpose().matmul(&omega)?.add(&omega.matmul(x)?)?;
                Ok(lhs.is_zero())
            }
        }
    }

    /// Exact membership test for the group: gl requires invertibility, sl
    /// determinant one, sp/o the defining equation g^T*omega*g = omega.
    pub fn in_group(&self, g: &ExactMatrix) -> Result<bool> {
        self.check_dims(g)?;
        match self.tag {
            GroupTag::Gl => Ok(!g.det()?.is_zero()),
            GroupTag::Sl => Ok(g.det()?.is_one()),
            GroupTag::Sp | GroupTag::O => {
                let omega = self.omega()?;
                Ok(g.transpose().matmul(&omega)?.matmul(g)? == omega)
            }
        }
    }

    /// Whether the partition labels a nilpotent class of this algebra:
    /// the total must be N, odd parts need even multiplicity in sp, and
    /// even parts need even multiplicity in o.
    pub fn is_valid_partition(&self, pi: &Partition) -> bool {
        if pi.size() as usize != self.n {
            return false;
        }
        match self.tag {
            GroupTag::Gl | GroupTag::Sl => true,
            GroupTag::Sp => {
                pi.parts().iter().all(|&p| p % 2 == 0 || pi.multiplicity(p) % 2 == 0)
            }
            GroupTag::O => {
                pi.parts().iter().all(|&p| p % 2 == 1 || pi.multiplicity(p) % 2 == 0)
            }
        }
    }

    /// Distinguished classes: all parts distinct and even (sp), respectively
    /// distinct and odd (o). The gl/sl convention is the regular class [N],
    /// used for informational output only.
    pub fn is_distinguished(&self, pi: &Partition) -> Result<bool> {
        if !self.is_valid_partition(pi) {
            return Err(Error::InvalidPartition(format!("{pi} is not valid for {self}")));
        }
        Ok(match self.tag {
            GroupTag::Gl | GroupTag::Sl => pi.len() == 1,
            GroupTag::Sp => {
                pi.parts().iter().all(|&p| p % 2 == 0 && pi.multiplicity(p) == 1)
            }
            GroupTag::O => {
                pi.parts().iter().all(|&p| p % 2 == 1 && pi.multiplicity(p) == 1)
            }
        })
    }

    /// All valid partitions of N for this kind, in descending lexicographic
    /// order (which refines dominance: a dominating partition always comes
    /// first). Deterministic.
    pub fn enumerate_partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        self.enumerate_rec(self.n as u32, self.n as u32, &mut stack, &mut out);
        out
    }

    fn enumerate_rec(&self, left: u32, max: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            let pi = Partition::from_sorted(stack.clone()).expect("stack is sorted");
            if self.is_valid_partition(&pi) {
                out.push(pi);
            }
            return;
        }
        for p in (1..=left.min(max)).rev() {
            stack.push(p);
            self.enumerate_rec(left - p, p, stack, out);
            stack.pop();
        }
    }

    /// An explicit nilpotent matrix of Jordan type `pi` inside the algebra.
    ///
    /// gl/sl take a plain direct sum of Jordan blocks. sp/o nest paired
    /// blocks J_p (upper left) / -J_p (lower right) from the outside in
    /// around a self-mirrored center built from the unpaired parts: one
    /// unpaired part becomes the block with superdiagonal +1 then -1
    /// switching sign at the midpoint; a second unpaired part is handled by
    /// splitting it into halves joined across the anti-diagonal (sp), or by
    /// the quadrant template with 1/sqrt2 and i/sqrt2 connectors (o). More
    /// than two unpaired parts have no such layout and are rejected.
    pub fn standard_form(&self, pi: &Partition) -> Result<ExactMatrix> {
        if !self.is_valid_partition(pi) {
            return Err(Error::InvalidPartition(format!("{pi} is not valid for {self}")));
        }
        let x = match self.tag {
            GroupTag::Gl | GroupTag::Sl => {
                let blocks: Vec<ExactMatrix> =
                    pi.parts().iter().map(|&p| jordan_block(p as usize)).collect();
                direct_sum(&blocks)
            }
            GroupTag::Sp | GroupTag::O => self.mirrored_form(pi)?,
        };
        // Post-check: layout bugs must never escape as wrong answers.
        if !self.in_lie_algebra(&x)? || &x.jordan_type()? != pi {
            return Err(Error::ConstructionFailed(format!("standard form for {self} {pi}")));
        }
        Ok(x)
    }

    /// Shared sp/o assembly: paired blocks outside, center inside.
    fn mirrored_form(&self, pi: &Partition) -> Result<ExactMatrix> {
        // Distinct part values in descending order with their multiplicities.
        let mut pairs: Vec<u32> = Vec::new();
        let mut singles: Vec<u32> = Vec::new();
        let mut i = 0;
        let parts = pi.parts();
        while i < parts.len() {
            let v = parts[i];
            let mult = pi.multiplicity(v);
            pairs.extend(std::iter::repeat(v).take(mult / 2));
            if mult % 2 == 1 {
                singles.push(v);
            }
            i += mult;
        }
        if singles.len() > 2 {
            return Err(Error::UnsupportedPartition(format!(
                "{pi} has {} unpaired parts; supported layouts allow at most two",
                singles.len()
            )));
        }

        // Left-side blocks (mirrored to -blocks on the right), plus center.
        let mut left: Vec<ExactMatrix> = pairs.iter().map(|&p| jordan_block(p as usize)).collect();
        let mut connector = None;
        let center = match (self.tag, singles.as_slice()) {
            (_, []) => None,
            (GroupTag::Sp, &[u]) => Some(tilde_block(u as usize)),
            (GroupTag::Sp, &[u1, u2]) => {
                // Largest single at the center; the smaller splits into
                // halves whose connector sits on the anti-diagonal.
                left.push(jordan_block(u2 as usize / 2));
                connector = Some(());
                Some(tilde_block(u1 as usize))
            }
            (GroupTag::O, &[u]) => Some(tilde_block(u as usize)),
            (GroupTag::O, &[u1, u2]) => {
                Some(quadrant_block((u1 as usize - 1) / 2, (u2 as usize - 1) / 2))
            }
            _ => unreachable!("singles has at most two entries"),
        };

        let left_dim: usize = left.iter().map(ExactMatrix::rows).sum();
        let center_dim = center.as_ref().map_or(0, ExactMatrix::rows);
        let mut blocks = left.clone();
        if let Some(c) = center {
            blocks.push(c);
        }
        for b in left.iter().rev() {
            blocks.push(b.neg());
        }
        let mut x = direct_sum(&blocks);
        if connector.is_some() {
            // Last row of the innermost left half, first column of its
            // mirrored half: the (row, col) indices sum to N-1, so this is a
            // self-paired position the defining equation leaves free.
            x.set(left_dim - 1, left_dim + center_dim, FieldScalar::one());
        }
        Ok(x)
    }

    fn check_dims(&self, x: &ExactMatrix) -> Result<()> {
        if x.rows() != self.n || x.cols() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix in {self}",
                x.rows(),
                x.cols()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.name(), self.n)
    }
}

/// The self-mirrored single block: superdiagonal +1 on the first half,
/// -1 on the second half, switching sign at the midpoint. Even sizes sit in
/// sp, odd sizes in o; either way the Jordan type is one full-size block.
pub fn tilde_block(size: usize) -> ExactMatrix {
    ExactMatrix::from_fn(size, size, |i, j| {
        if j == i + 1 {
            FieldScalar::from_int(if 2 * (i + 1) <= size { 1 } else { -1 })
        } else {
            FieldScalar::zero()
        }
    })
}

/// The orthogonal two-single center realizing Jordan type [2a+1, 2b+1] in
/// o_{2a+2b+2}: blocks J_a, J_b, a 2x2 hub, -J_b, -J_a, glued through the
/// hub by 1/sqrt2 and i/sqrt2 connectors. Degenerates cleanly at b = 0.
pub fn quadrant_block(a: usize, b: usize) -> ExactMatrix {
    assert!(a > b, "quadrant block needs distinct part sizes");
    let n = 2 * a + 2 * b + 2;
    let mut x = ExactMatrix::zeros(n, n);
    let one = FieldScalar::one();
    let h = FieldScalar::inv_sqrt2(); // 1/sqrt2
    let ih = FieldScalar::i_inv_sqrt2(); // i/sqrt2
    for i in 0..n {
        // Interiors of J_a, J_b, -J_b, -J_a.
        if i + 1 < a || (a <= i && i + 1 < a + b) {
            x.set(i, i + 1, one.clone());
        }
        if (a + b + 2 <= i && i + 1 < a + 2 * b + 2) || (a + 2 * b + 2 <= i && i + 1 < n) {
            x.set(i, i + 1, -&one);
        }
    }
    // J_a's last row feeds both hub coordinates...
    x.set(a - 1, a + b, h.clone());
    x.set(a - 1, a + b + 1, h.clone());
    // ...and the hub feeds -J_a's first column.
    x.set(a + b, a + 2 * b + 2, -&h);
    x.set(a + b + 1, a + 2 * b + 2, -&h);
    if b >= 1 {
        // Same for J_b, with the imaginary connectors.
        x.set(a + b - 1, a + b, ih.clone());
        x.set(a + b - 1, a + b + 1, -&ih);
        x.set(a + b, a + b + 2, ih.clone());
        x.set(a + b + 1, a + b + 2, -&ih);
    }
    x
}

/// Documentation of the basis/indexing convention for the mirrored families:
/// the second half of the basis is indexed from the outside in, with a sign
/// twist in the symplectic case.
#[derive(Clone, Copy, Debug)]
pub struct BasisConvention {
    pub n: usize,
    pub tag: GroupTag,
}

impl BasisConvention {
    pub fn new(kind: AlgebraKind) -> Self {
        BasisConvention { n: kind.dim(), tag: kind.tag() }
    }

    /// The 1-based standard-basis index that f_i abbreviates.
    pub fn f_index(&self, i: usize) -> usize {
        match self.tag {
            // sp_2n: f_i = -e_{2n+1-i}; o_2n: f_i = e_{2n+1-i};
            // o_{2n+1}: f_i = e_{2n+2-i}, skipping the central vector.
            GroupTag::Sp | GroupTag::O if self.n % 2 == 0 => self.n + 1 - i,
            GroupTag::O => self.n + 1 - i,
            _ => i,
        }
    }

    /// The sign carried by f_i relative to the standard basis vector.
    pub fn f_sign(&self, _i: usize) -> i64 {
        match self.tag {
            GroupTag::Sp => -1,
            _ => 1,
        }
    }
}
