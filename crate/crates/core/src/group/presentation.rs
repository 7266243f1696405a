//! Finitely presented groups: the pretzel knot group, surgered groups, and
//! the Coxeter-family quotient targets.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::word::Word;
use crate::slope::Slope;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("pretzel parameters must be odd with 5 <= p <= q, got ({0}, {1})")]
    InvalidParameters(i64, i64),
    #[error("surgered presentations require an integral slope, got {0}")]
    NonIntegralSlope(Slope),
    #[error("the Coxeter family G^{{m,p,q}} is used with m in {{3, 5}}, got {0}")]
    UnsupportedOrder(i64),
}

/// Generators and cyclically reduced relators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<&str>, relators: Vec<Word>) -> Self {
        Presentation {
            generators: generators.into_iter().map(String::from).collect(),
            relators: relators.into_iter().map(|r| r.cyclically_reduce()).collect(),
        }
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Exponent-sum matrix, one row per relator.
    pub fn relation_matrix(&self) -> Vec<Vec<i64>> {
        self.relators.iter().map(|r| r.exponent_sums(self.generators.len())).collect()
    }

    pub fn with_relator(&self, extra: Word) -> Presentation {
        let mut out = self.clone();
        out.relators.push(extra.cyclically_reduce());
        out
    }
}

fn check_parameters(p: i64, q: i64) -> Result<(), PresentationError> {
    if p % 2 != 0 && q % 2 != 0 && 5 <= p && p <= q {
        Ok(())
    } else {
        Err(PresentationError::InvalidParameters(p, q))
    }
}

// generator indices for the knot group
const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;

fn gen(g: usize, e: i64) -> Word {
    Word::generator(g, e)
}

fn prod(parts: &[Word]) -> Word {
    parts.iter().fold(Word::identity(), |acc, w| acc.concat(w))
}

/// The knot group of the (-2,p,q) pretzel:
///
/// ⟨x,y,z | (zx)^{(p−1)/2} z (zx)^{(1−p)/2} = (yx)^{−(q+1)/2} y (yx)^{(q+1)/2},
///          (yz⁻¹)⁻¹ y (yz⁻¹) = (yx)^{(1−q)/2} x (yx)^{(q−1)/2},
///          (yz⁻¹)⁻¹ z (yz⁻¹) = (zx)^{(p+1)/2} x (zx)^{−(p+1)/2}⟩
///
/// as relators lhs·rhs⁻¹. No relator is dropped: the redundancy of any one
/// of the three is not assumed downstream.
pub fn pretzel_presentation(p: i64, q: i64) -> Result<Presentation, PresentationError> {
    check_parameters(p, q)?;
    let zx = prod(&[gen(Z, 1), gen(X, 1)]);
    let yx = prod(&[gen(Y, 1), gen(X, 1)]);
    let yz_inv = prod(&[gen(Y, 1), gen(Z, -1)]);

    let r1_lhs = prod(&[zx.power((p - 1) / 2), gen(Z, 1), zx.power((1 - p) / 2)]);
    let r1_rhs = prod(&[yx.power(-(q + 1) / 2), gen(Y, 1), yx.power((q + 1) / 2)]);
    let r2_lhs = gen(Y, 1).conjugate_by(&yz_inv.inverse());
    let r2_rhs = prod(&[yx.power((1 - q) / 2), gen(X, 1), yx.power((q - 1) / 2)]);
    let r3_lhs = gen(Z, 1).conjugate_by(&yz_inv.inverse());
    let r3_rhs = prod(&[zx.power((p + 1) / 2), gen(X, 1), zx.power(-(p + 1) / 2)]);

    Ok(Presentation::new(
        vec!["x", "y", "z"],
        vec![
            r1_lhs.concat(&r1_rhs.inverse()),
            r2_lhs.concat(&r2_rhs.inverse()),
            r3_lhs.concat(&r3_rhs.inverse()),
        ],
    ))
}

/// The longitude
/// l = x^{−2(p+q)} (yx)^{(q−1)/2} (yz⁻¹)⁻¹ (yx)^{(q+1)/2} (zx)^{(p−1)/2} (yz⁻¹) (zx)^{(p+1)/2},
/// freely reduced.
pub fn longitude_word(p: i64, q: i64) -> Result<Word, PresentationError> {
    check_parameters(p, q)?;
    let zx = prod(&[gen(Z, 1), gen(X, 1)]);
    let yx = prod(&[gen(Y, 1), gen(X, 1)]);
    let yz_inv = prod(&[gen(Y, 1), gen(Z, -1)]);
    Ok(prod(&[
        gen(X, -2 * (p + q)),
        yx.power((q - 1) / 2),
        yz_inv.inverse(),
        yx.power((q + 1) / 2),
        zx.power((p - 1) / 2),
        yz_inv,
        zx.power((p + 1) / 2),
    ]))
}

/// π₁ of s-surgery on the pretzel knot: the knot group plus the relator
/// x^s·l. Only integral slopes are presented this way.
pub fn surgered_presentation(p: i64, q: i64, s: Slope) -> Result<Presentation, PresentationError> {
    if !s.is_integral() {
        return Err(PresentationError::NonIntegralSlope(s));
    }
    let base = pretzel_presentation(p, q)?;
    let filling = gen(X, s.numerator()).concat(&longitude_word(p, q)?);
    Ok(base.with_relator(filling))
}

/// Coxeter's (2,p,q;2) = ⟨α, β | α^p, β^q, (αβ)², (α²β²)²⟩.
pub fn coxeter_2pq2(p: i64, q: i64) -> Result<Presentation, PresentationError> {
    check_parameters(p, q)?;
    let (a, b) = (0usize, 1usize);
    let ab = prod(&[gen(a, 1), gen(b, 1)]);
    let a2b2 = prod(&[gen(a, 2), gen(b, 2)]);
    Ok(Presentation::new(
        vec!["alpha", "beta"],
        vec![gen(a, p), gen(b, q), ab.power(2), a2b2.power(2)],
    ))
}

/// Coxeter's G^{m,p,q} = ⟨A,B,C | A^p, B^q, C^m, (AB)², (BC)², (CA)², (ABC)²⟩,
/// for m in {3, 5}.
pub fn coxeter_gmpq(m: i64, p: i64, q: i64) -> Result<Presentation, PresentationError> {
    if m != 3 && m != 5 {
        return Err(PresentationError::UnsupportedOrder(m));
    }
    let (a, b, c) = (0usize, 1usize, 2usize);
    Ok(Presentation::new(
        vec!["A", "B", "C"],
        vec![
            gen(a, p),
            gen(b, q),
            gen(c, m),
            prod(&[gen(a, 1), gen(b, 1)]).power(2),
            prod(&[gen(b, 1), gen(c, 1)]).power(2),
            prod(&[gen(c, 1), gen(a, 1)]).power(2),
            prod(&[gen(a, 1), gen(b, 1), gen(c, 1)]).power(2),
        ],
    ))
}

/// The 6-relator intermediate form of G^{5,p,q} with C defined by
/// C = (A²B²)²: ⟨A,B,C | A^p, B^q, (AB)², (BC)², (CA)², C(A²B²)^{−2}⟩.
/// This is the presentation the derivation chains run in.
pub fn coxeter_g5_with_definition(p: i64, q: i64) -> Result<Presentation, PresentationError> {
    check_parameters(p, q)?;
    let (a, b, c) = (0usize, 1usize, 2usize);
    let a2b2 = prod(&[gen(a, 2), gen(b, 2)]);
    Ok(Presentation::new(
        vec!["A", "B", "C"],
        vec![
            gen(a, p),
            gen(b, q),
            prod(&[gen(a, 1), gen(b, 1)]).power(2),
            prod(&[gen(b, 1), gen(c, 1)]).power(2),
            prod(&[gen(c, 1), gen(a, 1)]).power(2),
            gen(c, 1).concat(&a2b2.power(-2)),
        ],
    ))
}

/// The factor group of π₁(M(s)) with s even, after adding x², y², z², (yz)²:
/// ⟨x,y,z | x², y², z², (yz)², (zx)^p, (yx)^q,
///          (yx)^{(q−1)/2}(zy)(yx)^{(q+1)/2}(zx)^{(p−1)/2}(yz)(zx)^{(p+1)/2}⟩.
pub fn even_factor_presentation(p: i64, q: i64) -> Result<Presentation, PresentationError> {
    check_parameters(p, q)?;
    let zx = prod(&[gen(Z, 1), gen(X, 1)]);
    let yx = prod(&[gen(Y, 1), gen(X, 1)]);
    let long = prod(&[
        yx.power((q - 1) / 2),
        prod(&[gen(Z, 1), gen(Y, 1)]),
        yx.power((q + 1) / 2),
        zx.power((p - 1) / 2),
        prod(&[gen(Y, 1), gen(Z, 1)]),
        zx.power((p + 1) / 2),
    ]);
    Ok(Presentation::new(
        vec!["x", "y", "z"],
        vec![
            gen(X, 2),
            gen(Y, 2),
            gen(Z, 2),
            prod(&[gen(Y, 1), gen(Z, 1)]).power(2),
            zx.power(p),
            yx.power(q),
            long,
        ],
    ))
}

/// The even-word subgroup rewritten on a = zx, b = xy, c = yz:
/// ⟨a,b,c | c², a^p, b^q, abc, b^{(q+1)/2} c b^{(q−1)/2} a^{(p−1)/2} c a^{(p+1)/2}⟩.
pub fn even_gprime_presentation(p: i64, q: i64) -> Result<Presentation, PresentationError> {
    check_parameters(p, q)?;
    let (a, b, c) = (0usize, 1usize, 2usize);
    Ok(Presentation::new(
        vec!["a", "b", "c"],
        vec![
            gen(c, 2),
            gen(a, p),
            gen(b, q),
            prod(&[gen(a, 1), gen(b, 1), gen(c, 1)]),
            prod(&[
                gen(b, (q + 1) / 2),
                gen(c, 1),
                gen(b, (q - 1) / 2),
                gen(a, (p - 1) / 2),
                gen(c, 1),
                gen(a, (p + 1) / 2),
            ]),
        ],
    ))
}

/// The α, β stage of the even-surgery chain:
/// ⟨α, β | α^p, β^q, (α²β²)², (βα)²(αβ)²⟩.
pub fn even_alphabeta_presentation(p: i64, q: i64) -> Result<Presentation, PresentationError> {
    check_parameters(p, q)?;
    let (a, b) = (0usize, 1usize);
    let ab = prod(&[gen(a, 1), gen(b, 1)]);
    let ba = prod(&[gen(b, 1), gen(a, 1)]);
    let a2b2 = prod(&[gen(a, 2), gen(b, 2)]);
    Ok(Presentation::new(
        vec!["alpha", "beta"],
        vec![gen(a, p), gen(b, q), a2b2.power(2), ba.power(2).concat(&ab.power(2))],
    ))
}

/// π₁(M(2(p+q)−1)) on the generators a, b, α, β:
/// ⟨a,b,α,β | α a^{−(p−1)/2}, β b^{−(q−1)/2},
///            aβb⁻¹aβ(αbαβ)², αba⁻¹αb(αβaβ)²⟩.
pub fn four_gen_minus_presentation(p: i64, q: i64) -> Result<Presentation, PresentationError> {
    check_parameters(p, q)?;
    let (a, b, al, be) = (0usize, 1usize, 2usize, 3usize);
    Ok(Presentation::new(
        vec!["a", "b", "alpha", "beta"],
        vec![
            gen(al, 1).concat(&gen(a, -(p - 1) / 2)),
            gen(be, 1).concat(&gen(b, -(q - 1) / 2)),
            prod(&[
                gen(a, 1),
                gen(be, 1),
                gen(b, -1),
                gen(a, 1),
                gen(be, 1),
                prod(&[gen(al, 1), gen(b, 1), gen(al, 1), gen(be, 1)]).power(2),
            ]),
            prod(&[
                gen(al, 1),
                gen(b, 1),
                gen(a, -1),
                gen(al, 1),
                gen(b, 1),
                prod(&[gen(al, 1), gen(be, 1), gen(a, 1), gen(be, 1)]).power(2),
            ]),
        ],
    ))
}

/// The two-generator stage of the 2(p+q)−1 chain:
/// ⟨α, β | α^p, β^q, (αβ⁻¹)², (β⁻¹(α²β⁻²)²)², ((α²β⁻²)²α)²⟩.
pub fn two_gen_minus_presentation(p: i64, q: i64) -> Result<Presentation, PresentationError> {
    check_parameters(p, q)?;
    let (a, b) = (0usize, 1usize);
    let core = prod(&[gen(a, 2), gen(b, -2)]).power(2);
    Ok(Presentation::new(
        vec!["alpha", "beta"],
        vec![
            gen(a, p),
            gen(b, q),
            prod(&[gen(a, 1), gen(b, -1)]).power(2),
            gen(b, -1).concat(&core).power(2),
            core.concat(&gen(a, 1)).power(2),
        ],
    ))
}

/// π₁(M(2(p+q)+1)) on the generators a, b, α, β:
/// ⟨a,b,α,β | α a^{−(p−1)/2}, β b^{−(q−1)/2},
///            βαbαβ(aβ)²(αb)², αβaβα(aβ)²(αb)²⟩.
pub fn four_gen_plus_presentation(p: i64, q: i64) -> Result<Presentation, PresentationError> {
    check_parameters(p, q)?;
    let (a, b, al, be) = (0usize, 1usize, 2usize, 3usize);
    let tail = prod(&[
        prod(&[gen(a, 1), gen(be, 1)]).power(2),
        prod(&[gen(al, 1), gen(b, 1)]).power(2),
    ]);
    Ok(Presentation::new(
        vec!["a", "b", "alpha", "beta"],
        vec![
            gen(al, 1).concat(&gen(a, -(p - 1) / 2)),
            gen(be, 1).concat(&gen(b, -(q - 1) / 2)),
            prod(&[gen(be, 1), gen(al, 1), gen(b, 1), gen(al, 1), gen(be, 1)]).concat(&tail),
            prod(&[gen(al, 1), gen(be, 1), gen(a, 1), gen(be, 1), gen(al, 1)]).concat(&tail),
        ],
    ))
}

/// four_gen_plus with the relators a^p, b^q, (αβ⁻¹)² added (the factor
/// group that maps onto G^{3,p,q}).
pub fn four_gen_plus_augmented(p: i64, q: i64) -> Result<Presentation, PresentationError> {
    let base = four_gen_plus_presentation(p, q)?;
    let (a, b, al, be) = (0usize, 1usize, 2usize, 3usize);
    Ok(base
        .with_relator(gen(a, p))
        .with_relator(gen(b, q))
        .with_relator(prod(&[gen(al, 1), gen(be, -1)]).power(2)))
}
