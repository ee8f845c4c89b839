use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::field::{Field, FieldDescriptor};
use crate::linalg::Mat;

use super::GroupError;

/// Multiplication law of a Suzuki 2-group: `(a,c)(b,d) = (a+b, c+d+b·Θ(a))`
/// with `Θ(a) = a^(2^h)`.
#[derive(Debug)]
pub struct SuzukiLaw {
    pub field: Field,
    pub h: u32,
}

impl SuzukiLaw {
    #[inline]
    pub fn theta(&self, a: u64) -> u64 {
        self.field.frobenius(a, self.h)
    }

    #[inline]
    pub fn mul(&self, x: (u64, u64), y: (u64, u64)) -> (u64, u64) {
        let f = &self.field;
        (f.add(x.0, y.0), f.add(f.add(x.1, y.1), f.mul(y.0, self.theta(x.0))))
    }

    /// `(a,c)⁻¹ = (a, c + a·Θ(a))`.
    #[inline]
    pub fn inv(&self, x: (u64, u64)) -> (u64, u64) {
        let f = &self.field;
        (x.0, f.add(x.1, f.mul(x.0, self.theta(x.0))))
    }

    fn same(&self, other: &SuzukiLaw) -> bool {
        self.h == other.h && *self.field == *other.field
    }
}

/// Left action of the complement on the normal factor: `act(h, n) = h n h⁻¹`.
pub type Action = Arc<dyn Fn(&GroupElement, &GroupElement) -> GroupElement + Send + Sync>;

#[derive(Clone)]
pub struct SemidirectPair {
    pub normal: GroupElement,
    pub complement: GroupElement,
    /// `None` for a direct product.
    pub action: Option<Action>,
}

#[derive(Clone)]
pub enum GroupElement {
    /// Images of `0..m` under a right action; products compose left to right.
    Perm(Vec<u32>),
    Suzuki { a: u64, b: u64, law: Arc<SuzukiLaw> },
    Matrix { mat: Mat, field: Field },
    Semidirect(Box<SemidirectPair>),
}

impl GroupElement {
    /// Permutation from 1-based cycles on `m` points.
    pub fn perm_from_cycles(m: usize, cycles: &[Vec<u32>]) -> Result<Self, GroupError> {
        let mut images: Vec<u32> = (0..m as u32).collect();
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                if x == 0 || y == 0 || x as usize > m || y as usize > m {
                    return Err(GroupError::InvalidElement(format!("point out of range 1..={m}")));
                }
                images[x as usize - 1] = y - 1;
            }
        }
        Self::perm(images)
    }

    pub fn perm(images: Vec<u32>) -> Result<Self, GroupError> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x as usize >= images.len() || seen[x as usize] {
                return Err(GroupError::InvalidElement("images do not form a bijection".into()));
            }
            seen[x as usize] = true;
        }
        Ok(GroupElement::Perm(images))
    }

    pub fn matrix(mat: Mat, field: &Field) -> Result<Self, GroupError> {
        if mat.rows != mat.cols || mat.data.iter().any(|&x| !field.is_element(x)) {
            return Err(GroupError::InvalidElement("not a square matrix over the field".into()));
        }
        if mat.determinant(field) == 0 {
            return Err(GroupError::InvalidElement("singular matrix".into()));
        }
        Ok(GroupElement::Matrix { mat, field: field.clone() })
    }

    pub fn suzuki(a: u64, b: u64, law: &Arc<SuzukiLaw>) -> Self {
        GroupElement::Suzuki { a, b, law: law.clone() }
    }

    pub fn semidirect(normal: GroupElement, complement: GroupElement, action: Option<Action>) -> Self {
        GroupElement::Semidirect(Box::new(SemidirectPair { normal, complement, action }))
    }

    pub fn compatible(&self, other: &Self) -> bool {
        use GroupElement::*;
        match (self, other) {
            (Perm(x), Perm(y)) => x.len() == y.len(),
            (Suzuki { law: l1, .. }, Suzuki { law: l2, .. }) => Arc::ptr_eq(l1, l2) || l1.same(l2),
            (Matrix { mat: m1, field: f1 }, Matrix { mat: m2, field: f2 }) => {
                m1.rows == m2.rows && **f1 == **f2
            }
            (Semidirect(x), Semidirect(y)) => {
                x.normal.compatible(&y.normal)
                    && x.complement.compatible(&y.complement)
                    && x.action.is_some() == y.action.is_some()
            }
            _ => false,
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, GroupError> {
        if !self.compatible(other) {
            return Err(GroupError::IncompatibleElements);
        }
        Ok(self.mul(other))
    }

    /// Product without a compatibility check.
    pub fn mul(&self, other: &Self) -> Self {
        use GroupElement::*;
        match (self, other) {
            (Perm(x), Perm(y)) => Perm(x.iter().map(|&i| y[i as usize]).collect()),
            (Suzuki { a, b, law }, Suzuki { a: c, b: d, .. }) => {
                let (a, b) = law.mul((*a, *b), (*c, *d));
                Suzuki { a, b, law: law.clone() }
            }
            (Matrix { mat: m1, field }, Matrix { mat: m2, .. }) => {
                Matrix { mat: m1.mul(m2, field), field: field.clone() }
            }
            (Semidirect(x), Semidirect(y)) => {
                let moved = match &x.action {
                    Some(act) => act(&x.complement, &y.normal),
                    None => y.normal.clone(),
                };
                GroupElement::semidirect(
                    x.normal.mul(&moved),
                    x.complement.mul(&y.complement),
                    x.action.clone(),
                )
            }
            _ => panic!("multiplying incompatible group elements"),
        }
    }

    pub fn inverse(&self) -> Self {
        use GroupElement::*;
        match self {
            Perm(x) => {
                let mut inv = vec![0u32; x.len()];
                for (i, &y) in x.iter().enumerate() {
                    inv[y as usize] = i as u32;
                }
                Perm(inv)
            }
            Suzuki { a, b, law } => {
                let (a, b) = law.inv((*a, *b));
                Suzuki { a, b, law: law.clone() }
            }
            Matrix { mat, field } => Matrix {
                mat: mat.inverse(field).expect("group matrices are invertible"),
                field: field.clone(),
            },
            Semidirect(x) => {
                let hinv = x.complement.inverse();
                let ninv = x.normal.inverse();
                let moved = match &x.action {
                    Some(act) => act(&hinv, &ninv),
                    None => ninv,
                };
                GroupElement::semidirect(moved, hinv, x.action.clone())
            }
        }
    }

    pub fn identity_like(&self) -> Self {
        use GroupElement::*;
        match self {
            Perm(x) => Perm((0..x.len() as u32).collect()),
            Suzuki { law, .. } => Suzuki { a: 0, b: 0, law: law.clone() },
            Matrix { mat, field } => Matrix { mat: Mat::identity(mat.rows), field: field.clone() },
            Semidirect(x) => GroupElement::semidirect(
                x.normal.identity_like(),
                x.complement.identity_like(),
                x.action.clone(),
            ),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == self.identity_like()
    }

    /// Flat key used for deterministic generator ordering.
    pub fn sort_key(&self) -> Vec<u64> {
        use GroupElement::*;
        match self {
            Perm(x) => std::iter::once(0).chain(x.iter().map(|&v| v as u64)).collect(),
            Suzuki { a, b, .. } => vec![1, *a, *b],
            Matrix { mat, .. } => std::iter::once(2).chain(mat.data.iter().copied()).collect(),
            Semidirect(x) => {
                let mut k = vec![3];
                k.extend(x.normal.sort_key());
                k.extend(x.complement.sort_key());
                k
            }
        }
    }

    pub fn field(&self) -> Option<&FieldDescriptor> {
        match self {
            GroupElement::Suzuki { law, .. } => Some(&law.field),
            GroupElement::Matrix { field, .. } => Some(field),
            _ => None,
        }
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        use GroupElement::*;
        match (self, other) {
            (Perm(x), Perm(y)) => x == y,
            (Suzuki { a, b, .. }, Suzuki { a: c, b: d, .. }) => a == c && b == d,
            (Matrix { mat: m1, .. }, Matrix { mat: m2, .. }) => m1 == m2,
            (Semidirect(x), Semidirect(y)) => x.normal == y.normal && x.complement == y.complement,
            _ => false,
        }
    }
}
impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        use GroupElement::*;
        match self {
            Perm(x) => x.hash(state),
            Suzuki { a, b, .. } => (a, b).hash(state),
            Matrix { mat, .. } => mat.data.hash(state),
            Semidirect(x) => {
                x.normal.hash(state);
                x.complement.hash(state);
            }
        }
    }
}

fn write_cycles(f: &mut fmt::Formatter<'_>, images: &[u32]) -> fmt::Result {
    let mut seen = vec![false; images.len()];
    let mut any = false;
    for start in 0..images.len() {
        if seen[start] || images[start] as usize == start {
            continue;
        }
        any = true;
        write!(f, "({}", start + 1)?;
        seen[start] = true;
        let mut x = images[start] as usize;
        while x != start {
            write!(f, ",{}", x + 1)?;
            seen[x] = true;
            x = images[x] as usize;
        }
        write!(f, ")")?;
    }
    if !any {
        write!(f, "()")?;
    }
    Ok(())
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupElement::*;
        match self {
            Perm(x) => write_cycles(f, x),
            Suzuki { a, b, .. } => write!(f, "(0x{a:X},0x{b:X})"),
            Matrix { mat, .. } => {
                write!(f, "[")?;
                for i in 0..mat.rows {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    let row: Vec<String> = mat.row(i).iter().map(|v| format!("0x{v:X}")).collect();
                    write!(f, "[{}]", row.join(","))?;
                }
                write!(f, "]")
            }
            Semidirect(x) => write!(f, "<{};{}>", x.normal, x.complement),
        }
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation() {
        let p = GroupElement::perm_from_cycles(4, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(p.to_string(), "(1,2,3)");
        let q = GroupElement::perm_from_cycles(4, &[vec![1, 2]]).unwrap();
        // right action: 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
        assert_eq!(p.mul(&q).to_string(), "(2,3)");
        assert!(p.mul(&p.inverse()).is_identity());
    }

    #[test]
    fn incompatible() {
        let p = GroupElement::perm_from_cycles(3, &[]).unwrap();
        let q = GroupElement::perm_from_cycles(4, &[]).unwrap();
        assert!(matches!(p.try_mul(&q), Err(GroupError::IncompatibleElements)));
    }

    #[test]
    fn semidirect_inverse() {
        // C3 ⋊ C2 with inversion, built from permutations of 3 points for the
        // normal part and a sign on 2 points for the complement.
        let r = GroupElement::perm_from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let s = GroupElement::perm_from_cycles(2, &[vec![1, 2]]).unwrap();
        let act: Action = Arc::new(|h: &GroupElement, n: &GroupElement| {
            if h.is_identity() { n.clone() } else { n.inverse() }
        });
        let x = GroupElement::semidirect(r.clone(), s.clone(), Some(act));
        let e = x.mul(&x.inverse());
        assert!(e.is_identity());
    }
}
