//! Standard small semigroups used as test instances.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::semigroup::FiniteSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameter out of range for {family}: {detail}")]
    ParamOutOfRange { family: &'static str, detail: String },
    #[error("unknown family `{0}`")]
    Unknown(String),
    #[error("cannot parse family spec `{0}`")]
    Syntax(String),
}

/// A named family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    SemilatticeChain(usize),
    RectangularBand(usize, usize),
    LeftZero(usize),
    RightZero(usize),
    CyclicGroup(usize),
    Monogenic { index: usize, period: usize },
    FullTransformationMonoid(usize),
    SymmetricInverseMonoid(usize),
    BrandtB2,
    DirectProduct(Box<Family>, Box<Family>),
    WithIdentity(Box<Family>),
    ReesMatrix { rows: usize, cols: usize, group: usize },
}

fn out_of_range(family: &'static str, detail: impl Into<String>) -> FamilyError {
    FamilyError::ParamOutOfRange { family, detail: detail.into() }
}

impl Family {
    pub fn generate(&self) -> Result<FiniteSemigroup, FamilyError> {
        match *self {
            Family::SemilatticeChain(k) => semilattice_chain(k),
            Family::RectangularBand(m, k) => rectangular_band(m, k),
            Family::LeftZero(m) => left_zero(m),
            Family::RightZero(k) => right_zero(k),
            Family::CyclicGroup(k) => cyclic_group(k),
            Family::Monogenic { index, period } => monogenic(index, period),
            Family::FullTransformationMonoid(n) => full_transformation_monoid(n),
            Family::SymmetricInverseMonoid(n) => symmetric_inverse_monoid(n),
            Family::BrandtB2 => Ok(brandt_b2()),
            Family::DirectProduct(ref a, ref b) => Ok(a.generate()?.direct_product(&b.generate()?)),
            Family::WithIdentity(ref a) => Ok(a.generate()?.adjoin_identity()),
            Family::ReesMatrix { rows, cols, group } => rees_matrix(rows, cols, group),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::SemilatticeChain(k) => write!(f, "semilattice_chain({k})"),
            Family::RectangularBand(m, k) => write!(f, "rectangular_band({m},{k})"),
            Family::LeftZero(m) => write!(f, "left_zero({m})"),
            Family::RightZero(k) => write!(f, "right_zero({k})"),
            Family::CyclicGroup(k) => write!(f, "cyclic_group({k})"),
            Family::Monogenic { index, period } => write!(f, "monogenic({index},{period})"),
            Family::FullTransformationMonoid(n) => write!(f, "full_transformation_monoid({n})"),
            Family::SymmetricInverseMonoid(n) => write!(f, "symmetric_inverse_monoid({n})"),
            Family::BrandtB2 => write!(f, "brandt_B2"),
            Family::DirectProduct(a, b) => write!(f, "direct_product({a},{b})"),
            Family::WithIdentity(a) => write!(f, "with_identity({a})"),
            Family::ReesMatrix { rows, cols, group } => write!(f, "rees_matrix({rows},{cols},{group})"),
        }
    }
}

/// Splits `a,b` at top-level commas.
fn split_args(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let spec = spec.trim();
        let syntax = || FamilyError::Syntax(spec.to_string());
        let (name, args) = match spec.find('(') {
            Some(open) => {
                let inner = spec[open + 1..].strip_suffix(')').ok_or_else(syntax)?;
                (&spec[..open], split_args(inner))
            }
            None => (spec, Vec::new()),
        };
        let nums = |count: usize| -> Result<Vec<usize>, FamilyError> {
            if args.len() != count {
                return Err(syntax());
            }
            args.iter().map(|a| a.parse::<usize>().map_err(|_| syntax())).collect()
        };
        Ok(match name {
            "semilattice_chain" => Family::SemilatticeChain(nums(1)?[0]),
            "rectangular_band" => {
                let v = nums(2)?;
                Family::RectangularBand(v[0], v[1])
            }
            "left_zero" => Family::LeftZero(nums(1)?[0]),
            "right_zero" => Family::RightZero(nums(1)?[0]),
            "cyclic_group" => Family::CyclicGroup(nums(1)?[0]),
            "monogenic" => {
                let v = nums(2)?;
                Family::Monogenic { index: v[0], period: v[1] }
            }
            "full_transformation_monoid" => Family::FullTransformationMonoid(nums(1)?[0]),
            "symmetric_inverse_monoid" => Family::SymmetricInverseMonoid(nums(1)?[0]),
            "brandt_B2" | "brandt_b2" => {
                if !args.is_empty() {
                    return Err(syntax());
                }
                Family::BrandtB2
            }
            "direct_product" => {
                if args.len() != 2 {
                    return Err(syntax());
                }
                Family::DirectProduct(Box::new(args[0].parse()?), Box::new(args[1].parse()?))
            }
            "with_identity" => {
                if args.len() != 1 {
                    return Err(syntax());
                }
                Family::WithIdentity(Box::new(args[0].parse()?))
            }
            "rees_matrix" => {
                let v = nums(3)?;
                Family::ReesMatrix { rows: v[0], cols: v[1], group: v[2] }
            }
            other => return Err(FamilyError::Unknown(other.to_string())),
        })
    }
}

fn labelled(s: FiniteSemigroup, labels: Vec<String>) -> FiniteSemigroup {
    s.with_labels(labels).expect("one label per element")
}

fn built(s: Result<FiniteSemigroup, crate::SemigroupError>) -> FiniteSemigroup {
    s.expect("family tables are associative by construction")
}

/// The chain 0 < 1 < ... < k-1 under meet.
pub fn semilattice_chain(k: usize) -> Result<FiniteSemigroup, FamilyError> {
    if k == 0 {
        return Err(out_of_range("semilattice_chain", "k must be at least 1"));
    }
    Ok(built(FiniteSemigroup::from_fn(k, |a, b| a.min(b))))
}

/// I × Λ with (i,λ)(j,μ) = (i,μ); (i,λ) has index i·k + λ.
pub fn rectangular_band(m: usize, k: usize) -> Result<FiniteSemigroup, FamilyError> {
    if m == 0 || k == 0 {
        return Err(out_of_range("rectangular_band", "both dimensions must be at least 1"));
    }
    let s = built(FiniteSemigroup::from_fn(m * k, |a, b| (a / k) * k + b % k));
    let labels = (0..m * k).map(|x| format!("({},{})", x / k, x % k)).collect();
    Ok(labelled(s, labels))
}

/// xy = x.
pub fn left_zero(m: usize) -> Result<FiniteSemigroup, FamilyError> {
    if m == 0 {
        return Err(out_of_range("left_zero", "m must be at least 1"));
    }
    Ok(built(FiniteSemigroup::from_fn(m, |a, _| a)))
}

/// xy = y.
pub fn right_zero(k: usize) -> Result<FiniteSemigroup, FamilyError> {
    if k == 0 {
        return Err(out_of_range("right_zero", "k must be at least 1"));
    }
    Ok(built(FiniteSemigroup::from_fn(k, |_, b| b)))
}

/// Z_k under addition.
pub fn cyclic_group(k: usize) -> Result<FiniteSemigroup, FamilyError> {
    if k == 0 {
        return Err(out_of_range("cyclic_group", "k must be at least 1"));
    }
    Ok(built(FiniteSemigroup::from_fn(k, |a, b| (a + b) % k)))
}

/// ⟨a | a^(index+period) = a^index⟩; element i is a^(i+1).
pub fn monogenic(index: usize, period: usize) -> Result<FiniteSemigroup, FamilyError> {
    if index == 0 || period == 0 {
        return Err(out_of_range("monogenic", "index and period must be at least 1"));
    }
    let top = index + period; // exponents live in [1, top)
    let reduce = |mut e: usize| {
        while e >= top {
            e -= period;
        }
        e
    };
    let s = built(FiniteSemigroup::from_fn(top - 1, |a, b| reduce(a + b + 2) - 1));
    let labels = (1..top).map(|e| format!("a^{e}")).collect();
    Ok(labelled(s, labels))
}

/// All maps [n] → [n], composed left to right: x(fg) = (xf)g. Maps are
/// ordered lexicographically by image tuple.
pub fn full_transformation_monoid(n: usize) -> Result<FiniteSemigroup, FamilyError> {
    if n == 0 || n > 3 {
        return Err(out_of_range("full_transformation_monoid", "n must be in 1..=3"));
    }
    let maps: Vec<Vec<usize>> = (0..n.pow(n as u32))
        .map(|code| {
            let mut img = vec![0; n];
            let mut c = code;
            for slot in img.iter_mut().rev() {
                *slot = c % n;
                c /= n;
            }
            img
        })
        .collect();
    let index_of = |img: &[usize]| img.iter().fold(0, |acc, &d| acc * n + d);
    let s = built(FiniteSemigroup::from_fn(maps.len(), |f, g| {
        let comp: Vec<usize> = maps[f].iter().map(|&x| maps[g][x]).collect();
        index_of(&comp)
    }));
    let labels = maps
        .iter()
        .map(|m| m.iter().map(|d| d.to_string()).collect::<String>())
        .collect();
    Ok(labelled(s, labels))
}

/// All partial injections of [n], composed left to right.
pub fn symmetric_inverse_monoid(n: usize) -> Result<FiniteSemigroup, FamilyError> {
    if n == 0 || n > 2 {
        return Err(out_of_range("symmetric_inverse_monoid", "n must be in 1..=2"));
    }
    // each point maps to a point or to "undefined" (encoded as n)
    let mut maps: Vec<Vec<usize>> = Vec::new();
    for code in 0..(n + 1).pow(n as u32) {
        let mut img = vec![0; n];
        let mut c = code;
        for slot in img.iter_mut().rev() {
            *slot = c % (n + 1);
            c /= n + 1;
        }
        let defined: Vec<usize> = img.iter().copied().filter(|&d| d < n).collect();
        let mut dedup = defined.clone();
        dedup.sort_unstable();
        dedup.dedup();
        if dedup.len() == defined.len() {
            maps.push(img);
        }
    }
    let s = built(FiniteSemigroup::from_fn(maps.len(), |f, g| {
        let comp: Vec<usize> = maps[f].iter().map(|&x| if x < n { maps[g][x] } else { n }).collect();
        maps.iter().position(|m| *m == comp).expect("partial injections compose")
    }));
    let labels = maps
        .iter()
        .map(|m| m.iter().map(|&d| if d < n { d.to_string() } else { "-".to_string() }).collect::<String>())
        .collect();
    Ok(labelled(s, labels))
}

/// The five-element Brandt semigroup {0, e11, e12, e21, e22} of 2×2 matrix
/// units with zero.
pub fn brandt_b2() -> FiniteSemigroup {
    let units = [(0, 0), (1, 1), (1, 2), (2, 1), (2, 2)];
    let s = built(FiniteSemigroup::from_fn(5, |a, b| {
        if a == 0 || b == 0 {
            return 0;
        }
        let ((i, j), (k, l)) = (units[a], units[b]);
        if j == k {
            units.iter().position(|&u| u == (i, l)).unwrap()
        } else {
            0
        }
    }));
    let labels = ["0", "e11", "e12", "e21", "e22"].iter().map(|l| l.to_string()).collect();
    labelled(s, labels)
}

/// The Rees matrix semigroup M[Z_group; rows, cols; P] with sandwich entry
/// P(λ, i) = 1 when both λ and i are nonzero and 0 otherwise. Element
/// (i, g, λ) has index (i·group + g)·cols + λ and
/// (i,g,λ)(j,h,μ) = (i, g + P(λ,j) + h, μ).
pub fn rees_matrix(rows: usize, cols: usize, group: usize) -> Result<FiniteSemigroup, FamilyError> {
    if rows == 0 || cols == 0 || group == 0 {
        return Err(out_of_range("rees_matrix", "all parameters must be at least 1"));
    }
    let n = rows * group * cols;
    let split = |x: usize| (x / (group * cols), (x / cols) % group, x % cols);
    let s = built(FiniteSemigroup::from_fn(n, |a, b| {
        let ((i, g, l), (j, h, m)) = (split(a), split(b));
        let p = usize::from(l > 0 && j > 0);
        (i * group + (g + p + h) % group) * cols + m
    }));
    let labels = (0..n)
        .map(|x| {
            let (i, g, l) = split(x);
            format!("({i},{g},{l})")
        })
        .collect();
    Ok(labelled(s, labels))
}

/// Parses and builds a family from its textual spec, e.g. `rectangular_band(2,3)`.
pub fn generate(spec: &str) -> Result<FiniteSemigroup, FamilyError> {
    spec.parse::<Family>()?.generate()
}

/// The built-in corpus: instances spanning orders 1 to 27, each named by the
/// family spec that generates it.
pub fn corpus() -> Vec<(String, FiniteSemigroup)> {
    const SPECS: &[&str] = &[
        "semilattice_chain(1)",
        "semilattice_chain(2)",
        "semilattice_chain(4)",
        "left_zero(3)",
        "right_zero(3)",
        "rectangular_band(2,2)",
        "rectangular_band(2,3)",
        "rectangular_band(3,3)",
        "cyclic_group(2)",
        "cyclic_group(4)",
        "monogenic(2,1)",
        "monogenic(3,2)",
        "full_transformation_monoid(2)",
        "full_transformation_monoid(3)",
        "symmetric_inverse_monoid(1)",
        "symmetric_inverse_monoid(2)",
        "brandt_B2",
        "direct_product(rectangular_band(2,2),cyclic_group(2))",
        "direct_product(left_zero(2),semilattice_chain(2))",
        "direct_product(right_zero(2),brandt_B2)",
        "direct_product(rectangular_band(1,2),symmetric_inverse_monoid(1))",
        "direct_product(monogenic(2,1),semilattice_chain(2))",
        "with_identity(rectangular_band(2,2))",
        "with_identity(rectangular_band(2,3))",
        "rees_matrix(2,2,2)",
        "rees_matrix(2,3,3)",
    ];
    SPECS
        .iter()
        .map(|spec| (spec.to_string(), generate(spec).expect("corpus specs are valid")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rectangular_band_table() {
        let s = rectangular_band(2, 3).unwrap();
        assert_eq!(s.order(), 6);
        assert!(s.is_band());
        for a in s.elements() {
            for b in s.elements() {
                assert_eq!(s.mul(a, b), (a / 3) * 3 + b % 3);
            }
        }
    }

    #[test]
    fn transformation_monoid_counts() {
        let t3 = full_transformation_monoid(3).unwrap();
        assert_eq!(t3.order(), 27);
        // idempotent maps on a 3-set: sum over image size k of C(3,k)·k^(3-k) = 3 + 6 + 1
        assert_eq!(t3.idempotents().len(), 10);
        assert_eq!(t3.identity(), Some(5)); // images 012 = 0·9 + 1·3 + 2
        assert_eq!(full_transformation_monoid(2).unwrap().order(), 4);
    }

    #[test]
    fn inverse_families() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        assert_eq!(i2.order(), 7);
        assert!(i2.is_inverse());
        let b2 = brandt_b2();
        assert_eq!(b2.order(), 5);
        for x in b2.elements() {
            assert_eq!(b2.inverses_of(x).len(), 1);
        }
        assert!(b2.is_inverse());
    }

    #[test]
    fn monogenic_table() {
        // a^3 = a^2
        let s = monogenic(2, 1).unwrap();
        assert_eq!(s.order(), 2);
        assert_eq!(s.mul(0, 0), 1);
        assert_eq!(s.idempotents().to_vec(), vec![1]);
        // a^5 = a^3: {a, a², a³, a⁴}, a⁴·a = a³
        let s = monogenic(3, 2).unwrap();
        assert_eq!(s.order(), 4);
        assert_eq!(s.mul(3, 0), 2);
    }

    #[test]
    fn rees_matrix_is_completely_simple() {
        let s = rees_matrix(2, 2, 2).unwrap();
        assert_eq!(s.order(), 8);
        assert!(s.is_regular());
        // idempotents: one per (i, λ) cell
        assert_eq!(s.idempotents().len(), 4);
        assert_eq!(generate("with_identity(rectangular_band(2,2))").unwrap().order(), 5);
    }

    #[test]
    fn spec_parsing() {
        let f: Family = "direct_product(rectangular_band(2,2),cyclic_group(2))".parse().unwrap();
        assert_eq!(f.to_string(), "direct_product(rectangular_band(2,2),cyclic_group(2))");
        assert_eq!(f.generate().unwrap().order(), 8);
        assert!(matches!(generate("full_transformation_monoid(4)"), Err(FamilyError::ParamOutOfRange { .. })));
        assert!(matches!(generate("free_band(2)"), Err(FamilyError::Unknown(_))));
        assert!(matches!(generate("cyclic_group(x)"), Err(FamilyError::Syntax(_))));
    }

    #[test]
    fn corpus_spans_required_orders() {
        let c = corpus();
        assert!(c.len() >= 15);
        assert_eq!(c.iter().map(|(_, s)| s.order()).min(), Some(1));
        assert_eq!(c.iter().map(|(_, s)| s.order()).max(), Some(27));
    }
}
