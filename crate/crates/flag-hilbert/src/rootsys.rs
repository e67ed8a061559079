//! Root systems of the simple Lie types A-G: Cartan matrices, positive
//! roots, the invariant form, and dominant integral weights.
//!
//! Simple roots are numbered as in Bourbaki. Positive roots are stored by
//! their coordinates in the simple-root basis and generated by closing the
//! simple roots under root addition, so no type-by-type case analysis is
//! needed downstream. The invariant form is normalized so that long roots
//! have squared length 2.

use crate::error::Error;
use crate::exact::Rational;
use num_traits::{One, Zero};
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

/// The seven families of simple Lie types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    /// Allowed ranks, phrased for error messages.
    fn rank_constraint(self) -> &'static str {
        match self {
            Family::A => "rank >= 1",
            Family::B => "rank >= 2",
            Family::C => "rank >= 2",
            Family::D => "rank >= 3",
            Family::E => "rank in {6, 7, 8}",
            Family::F => "rank = 4",
            Family::G => "rank = 2",
        }
    }

    fn admits(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{letter}")
    }
}

/// A simple type such as A3 or E6: a family plus a valid rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    /// Builds a simple type, rejecting ranks outside the classification.
    ///
    /// The low-rank cutoffs avoid the duplicate types (B1 = A1, C1 = A1,
    /// D2 = A1 x A1 which is not simple, and so on), so every accepted
    /// pair names a distinct simple type.
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        if family.admits(rank) {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family,
                rank,
                constraint: family.rank_constraint(),
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Number of positive roots, from the classification.
    pub fn num_positive_roots(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let usage = || {
            Error::Usage(format!(
                "invalid simple type {s:?}: expected a family letter A-G followed by a rank, e.g. A3"
            ))
        };
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(usage)?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(usage()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| usage())?;
        SimpleType::new(family, rank)
    }
}

/// A root written in the simple-root basis; coordinates are all >= 0 for
/// the positive roots stored here.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Sum of the coordinates.
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }
}

/// A dominant integral weight in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantWeight {
    coeffs: Vec<u64>,
}

impl DominantWeight {
    /// Builds a weight from nonnegative fundamental-weight coefficients.
    pub fn new(coeffs: Vec<u64>) -> Self {
        DominantWeight { coeffs }
    }

    /// The zero weight of the given rank.
    pub fn zero(rank: usize) -> Self {
        DominantWeight {
            coeffs: vec![0; rank],
        }
    }

    /// The i-th fundamental weight (1-based, as in Bourbaki).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        assert!(
            (1..=rank).contains(&i),
            "fundamental weight index {i} out of range 1..={rank}"
        );
        let mut coeffs = vec![0; rank];
        coeffs[i - 1] = 1;
        DominantWeight { coeffs }
    }

    /// The Weyl vector rho, the sum of all fundamental weights.
    pub fn rho(rank: usize) -> Self {
        DominantWeight {
            coeffs: vec![1; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// A fully built root system: Cartan matrix, symmetrized invariant form,
/// and the complete list of positive roots in a deterministic order.
#[derive(Clone, Debug)]
pub struct RootSystem {
    stype: SimpleType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<Rational>,
    form: Vec<Vec<Rational>>,
    positive_roots: Vec<Root>,
}

impl RootSystem {
    /// Builds the root system for a simple type.
    ///
    /// The positive roots are generated from the simple roots by repeated
    /// root addition using the string condition, then sorted by height and,
    /// within a height, by descending coordinate vectors; the count is
    /// checked against the classification before returning.
    pub fn new(stype: SimpleType) -> Self {
        let cartan = cartan_matrix(stype);
        let symmetrizer = symmetrizer(&cartan);
        let n = stype.rank();
        let mut form = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                form[i][j] =
                    &symmetrizer[j] * Rational::from_integer(cartan[i][j].into());
            }
        }
        let positive_roots = generate_positive_roots(&cartan);
        assert_eq!(
            positive_roots.len(),
            stype.num_positive_roots(),
            "positive root count for {stype} disagrees with the classification"
        );
        RootSystem {
            stype,
            cartan,
            symmetrizer,
            form,
            positive_roots,
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.stype
    }

    pub fn rank(&self) -> usize {
        self.stype.rank()
    }

    /// Cartan matrix a_ij = 2(alpha_i, alpha_j)/(alpha_j, alpha_j).
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Symmetrized invariant form (alpha_i, alpha_j), long roots of squared
    /// length 2; for the simply-laced types this equals the Cartan matrix.
    pub fn form(&self) -> &[Vec<Rational>] {
        &self.form
    }

    /// Positive roots sorted by height, then descending coordinates.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Inner product (lambda, alpha) for a dominant weight and a root.
    ///
    /// With alpha = sum_i m_i alpha_i and lambda = sum_i c_i omega_i this is
    /// sum_i c_i m_i d_i where d_i = (alpha_i, alpha_i)/2, because
    /// (omega_i, alpha_j) = d_j delta_ij.
    pub fn pairing(&self, weight: &DominantWeight, root: &Root) -> Result<Rational, Error> {
        let n = self.rank();
        if weight.rank() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: weight.rank(),
            });
        }
        if root.coords.len() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: root.coords.len(),
            });
        }
        let mut acc = Rational::zero();
        for i in 0..n {
            if weight.coeffs[i] != 0 && root.coords[i] != 0 {
                acc += Rational::from_integer(
                    (weight.coeffs[i] as i64 * root.coords[i]).into(),
                ) * &self.symmetrizer[i];
            }
        }
        Ok(acc)
    }

    /// Inner product (rho, alpha); always positive for a positive root.
    pub fn rho_pairing(&self, root: &Root) -> Rational {
        assert_eq!(root.coords.len(), self.rank());
        let mut acc = Rational::zero();
        for i in 0..self.rank() {
            if root.coords[i] != 0 {
                acc += Rational::from_integer(root.coords[i].into()) * &self.symmetrizer[i];
            }
        }
        acc
    }
}

/// Cartan matrix in the Bourbaki numbering.
fn cartan_matrix(stype: SimpleType) -> Vec<Vec<i64>> {
    let n = stype.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let single = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match stype.family() {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                single(&mut a, i, i + 1);
            }
        }
        Family::B => {
            for i in 0..n - 2 {
                single(&mut a, i, i + 1);
            }
            a[n - 2][n - 1] = -2;
            a[n - 1][n - 2] = -1;
        }
        Family::C => {
            for i in 0..n - 2 {
                single(&mut a, i, i + 1);
            }
            a[n - 2][n - 1] = -1;
            a[n - 1][n - 2] = -2;
        }
        Family::D => {
            for i in 0..n - 2 {
                single(&mut a, i, i + 1);
            }
            single(&mut a, n - 3, n - 1);
        }
        Family::E => {
            single(&mut a, 0, 2);
            single(&mut a, 1, 3);
            for i in 2..n - 1 {
                single(&mut a, i, i + 1);
            }
        }
        Family::F => {
            single(&mut a, 0, 1);
            a[1][2] = -2;
            a[2][1] = -1;
            single(&mut a, 2, 3);
        }
        Family::G => {
            a[0][1] = -1;
            a[1][0] = -3;
        }
    }
    a
}

/// Half squared lengths d_i = (alpha_i, alpha_i)/2, normalized so that the
/// long roots get d_i = 1.
///
/// The ratios d_j/d_i = a_ji/a_ij are forced by symmetry of the form, and
/// the Dynkin diagram is connected, so a breadth-first sweep from the first
/// node determines every d_i up to the overall scale.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<Rational> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    d[0] = Some(Rational::one());
    let mut queue = vec![0usize];
    while let Some(i) = queue.pop() {
        for j in 0..n {
            if j != i && cartan[i][j] != 0 && d[j].is_none() {
                let ratio = Rational::new(cartan[j][i].into(), cartan[i][j].into());
                d[j] = Some(d[i].clone().unwrap() * ratio);
                queue.push(j);
            }
        }
    }
    let mut d: Vec<Rational> = d.into_iter().map(Option::unwrap).collect();
    let max = d.iter().cloned().fold(Rational::zero(), Rational::max);
    for v in &mut d {
        *v /= max.clone();
    }
    d
}

/// Closes the simple roots under root addition.
///
/// For a root alpha, alpha + alpha_i is a root exactly when
/// p - <alpha, alpha_i^vee> >= 1, where p counts how far the alpha_i-string
/// continues below alpha. Working height by height visits every positive
/// root exactly once.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut all: HashSet<Vec<i64>> = HashSet::new();
    let mut current: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        all.insert(e.clone());
        current.push(e);
    }
    let mut collected = current.clone();
    while !current.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for alpha in &current {
            for i in 0..n {
                let mut p = 0i64;
                let mut below = alpha.clone();
                loop {
                    below[i] -= 1;
                    if below[i] < 0 || !all.contains(&below) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = (0..n).map(|j| alpha[j] * cartan[j][i]).sum();
                if p - pairing >= 1 {
                    let mut up = alpha.clone();
                    up[i] += 1;
                    if all.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        collected.extend(next.iter().cloned());
        current = next;
    }
    let mut roots: Vec<Root> = collected.into_iter().map(|coords| Root { coords }).collect();
    roots.sort_by(|a, b| {
        a.height()
            .cmp(&b.height())
            .then_with(|| b.coords.cmp(&a.coords))
    });
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    fn all_valid_types(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for family in [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ] {
            for rank in 1..=max_rank {
                if let Ok(st) = SimpleType::new(family, rank) {
                    out.push(st);
                }
            }
        }
        out
    }

    #[test]
    fn rank_validation() {
        assert!(SimpleType::new(Family::A, 1).is_ok());
        assert!(SimpleType::new(Family::A, 0).is_err());
        assert!(SimpleType::new(Family::B, 1).is_err());
        assert!(SimpleType::new(Family::C, 1).is_err());
        assert!(SimpleType::new(Family::D, 2).is_err());
        assert!(SimpleType::new(Family::D, 3).is_ok());
        assert!(SimpleType::new(Family::E, 5).is_err());
        assert!(SimpleType::new(Family::E, 9).is_err());
        assert!(SimpleType::new(Family::F, 3).is_err());
        assert!(SimpleType::new(Family::G, 3).is_err());
    }

    #[test]
    fn parse_and_display() {
        let st: SimpleType = "A3".parse().unwrap();
        assert_eq!(st, SimpleType::new(Family::A, 3).unwrap());
        assert_eq!(st.to_string(), "A3");
        assert_eq!("e6".parse::<SimpleType>().unwrap().to_string(), "E6");
        assert!("H4".parse::<SimpleType>().is_err());
        assert!("A".parse::<SimpleType>().is_err());
        assert!("3A".parse::<SimpleType>().is_err());
        assert!("E5".parse::<SimpleType>().is_err());
    }

    #[test]
    fn a2_positive_roots_in_order() {
        let rs = RootSystem::new("A2".parse().unwrap());
        let coords: Vec<&[i64]> = rs.positive_roots().iter().map(Root::coords).collect();
        assert_eq!(coords, vec![&[1, 0][..], &[0, 1], &[1, 1]]);
    }

    #[test]
    fn a3_roots_containing_ends() {
        // Roots of A3 are the intervals [k, l]; exactly five of the six
        // touch position 1 or position 3.
        let rs = RootSystem::new("A3".parse().unwrap());
        assert_eq!(rs.positive_roots().len(), 6);
        let touching = rs
            .positive_roots()
            .iter()
            .filter(|r| r.coords()[0] != 0 || r.coords()[2] != 0)
            .count();
        assert_eq!(touching, 5);
    }

    #[test]
    fn root_counts_match_classification() {
        for st in all_valid_types(8) {
            let rs = RootSystem::new(st);
            assert_eq!(rs.positive_roots().len(), st.num_positive_roots());
        }
    }

    #[test]
    fn highest_root_heights() {
        // Height of the highest root: checked against h - 1 for the
        // Coxeter number h of each type.
        let expect = [
            ("A3", 3),
            ("B3", 5),
            ("C3", 5),
            ("D4", 5),
            ("E6", 11),
            ("E7", 17),
            ("E8", 29),
            ("F4", 11),
            ("G2", 5),
        ];
        for (name, h) in expect {
            let rs = RootSystem::new(name.parse().unwrap());
            let max = rs.positive_roots().iter().map(Root::height).max().unwrap();
            assert_eq!(max, h, "highest root height for {name}");
        }
    }

    #[test]
    fn cartan_matrices_spot_checks() {
        let b3 = RootSystem::new("B3".parse().unwrap());
        assert_eq!(
            b3.cartan(),
            &[vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]
        );
        let c3 = RootSystem::new("C3".parse().unwrap());
        assert_eq!(
            c3.cartan(),
            &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]
        );
        let g2 = RootSystem::new("G2".parse().unwrap());
        assert_eq!(g2.cartan(), &[vec![2, -1], vec![-3, 2]]);
        let f4 = RootSystem::new("F4".parse().unwrap());
        assert_eq!(
            f4.cartan(),
            &[
                vec![2, -1, 0, 0],
                vec![-1, 2, -2, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2]
            ]
        );
    }

    #[test]
    fn form_is_symmetric_and_positive_definite() {
        for st in all_valid_types(8) {
            let rs = RootSystem::new(st);
            let n = rs.rank();
            let form = rs.form();
            for (i, row) in form.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    assert_eq!(*v, form[j][i], "symmetry for {st}");
                }
            }
            // Sylvester's criterion via forward elimination: every pivot
            // must stay positive.
            let mut m: Vec<Vec<Rational>> = form.to_vec();
            for k in 0..n {
                assert!(m[k][k].is_positive(), "leading minor {k} for {st}");
                let pivot_row = m[k].clone();
                for row in m.iter_mut().skip(k + 1) {
                    let factor = &row[k] / &pivot_row[k];
                    for (j, pv) in pivot_row.iter().enumerate().skip(k) {
                        let sub = &factor * pv;
                        row[j] -= sub;
                    }
                }
            }
        }
    }

    #[test]
    fn simply_laced_form_equals_cartan() {
        for name in ["A4", "D4", "E6", "E7", "E8"] {
            let rs = RootSystem::new(name.parse::<SimpleType>().unwrap());
            for i in 0..rs.rank() {
                for j in 0..rs.rank() {
                    assert_eq!(
                        rs.form()[i][j],
                        Rational::from_integer(rs.cartan()[i][j].into())
                    );
                }
            }
        }
    }

    #[test]
    fn short_and_long_lengths() {
        let b3 = RootSystem::new("B3".parse().unwrap());
        assert_eq!(b3.form()[0][0], rat(2, 1));
        assert_eq!(b3.form()[2][2], rat(1, 1));
        let g2 = RootSystem::new("G2".parse().unwrap());
        assert_eq!(g2.form()[0][0], rat(2, 3));
        assert_eq!(g2.form()[1][1], rat(2, 1));
    }

    #[test]
    fn pairing_examples() {
        // A2, lambda = omega1, alpha = alpha1 + alpha2: (lambda, alpha) = 1.
        let rs = RootSystem::new("A2".parse().unwrap());
        let w = DominantWeight::fundamental(2, 1);
        let highest = rs.positive_roots().last().unwrap();
        assert_eq!(rs.pairing(&w, highest).unwrap(), rat(1, 1));
        assert_eq!(rs.rho_pairing(highest), rat(2, 1));
        // B2, alpha = alpha1 + alpha2 (short): (rho, alpha) = 3/2.
        let b2 = RootSystem::new("B2".parse().unwrap());
        let short = b2
            .positive_roots()
            .iter()
            .find(|r| r.coords() == [1, 1])
            .unwrap();
        assert_eq!(b2.rho_pairing(short), rat(3, 2));
    }

    #[test]
    fn rho_pairing_positive_for_all_roots() {
        for st in all_valid_types(8) {
            let rs = RootSystem::new(st);
            for root in rs.positive_roots() {
                assert!(rs.rho_pairing(root).is_positive(), "{st}");
            }
        }
    }

    #[test]
    fn rho_equals_sum_of_fundamentals() {
        let rs = RootSystem::new("B3".parse().unwrap());
        let rho = DominantWeight::rho(3);
        for root in rs.positive_roots() {
            let sum: Rational = (1..=3)
                .map(|i| {
                    rs.pairing(&DominantWeight::fundamental(3, i), root)
                        .unwrap()
                })
                .sum();
            assert_eq!(rs.pairing(&rho, root).unwrap(), sum);
            assert_eq!(rs.rho_pairing(root), sum);
        }
    }

    #[test]
    fn pairing_rejects_rank_mismatch() {
        let rs = RootSystem::new("A2".parse().unwrap());
        let w = DominantWeight::new(vec![1, 0, 0]);
        let root = &rs.positive_roots()[0];
        assert_eq!(
            rs.pairing(&w, root),
            Err(Error::RankMismatch { expected: 2, got: 3 })
        );
    }

    #[test]
    fn weight_constructors() {
        assert!(DominantWeight::zero(4).is_zero());
        assert_eq!(DominantWeight::fundamental(4, 2).coeffs(), &[0, 1, 0, 0]);
        assert_eq!(DominantWeight::rho(3).coeffs(), &[1, 1, 1]);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn fundamental_index_out_of_range_panics() {
        DominantWeight::fundamental(3, 4);
    }
}
