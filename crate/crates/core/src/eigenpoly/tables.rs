//! Coefficient tables of the closed-form eigenvalue polynomials.
//!
//! Each family `P_p` is a list of Θ-monomials with coefficients
//! `k_p(α, N)`. All coefficients are stored relative to the family's free
//! coefficient, as exact rational functions of `N` kept in factored form so
//! that the vanishing factors (and hence the admissible range of `N`) can be
//! read off mechanically. Polynomial factors are written as text exactly as
//! they appear in the published tables.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::lattice::{Partition, Scalar};

/// Integer polynomial in `N`, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(Vec<i64>);

impl Poly {
    /// `N + c`.
    pub fn linear(c: i64) -> Self {
        Poly(vec![c, 1])
    }

    /// Parses sums like `2N^2 + 4N - 15`.
    pub fn parse(text: &str) -> Poly {
        let cleaned: String = text
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*')
            .collect();
        let mut coeffs: Vec<i64> = Vec::new();
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in cleaned.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(&cleaned[start..i]);
                start = i;
            }
        }
        terms.push(&cleaned[start..]);
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, term.strip_prefix('+').unwrap_or(term)),
            };
            let (coef, degree) = match body.find('N') {
                None => (body.parse::<i64>().expect("numeric term"), 0usize),
                Some(pos) => {
                    let c = if pos == 0 {
                        1
                    } else {
                        body[..pos].parse::<i64>().expect("coefficient")
                    };
                    let d = match body[pos + 1..].strip_prefix('^') {
                        Some(e) => e.parse::<usize>().expect("exponent"),
                        None => 1,
                    };
                    (c, d)
                }
            };
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, 0);
            }
            coeffs[degree] += sign * coef;
        }
        Poly(coeffs)
    }

    pub fn eval(&self, n: i64) -> BigInt {
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, &c| acc * n + c)
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// Largest non-negative integer root, if any.
    pub fn largest_natural_root(&self, search_to: i64) -> Option<i64> {
        (0..=search_to).rev().find(|&n| self.eval(n).is_zero())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.unsigned_abs();
            match deg {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "N")?;
                    if deg > 1 {
                        write!(f, "^{deg}")?;
                    }
                }
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `scale · ∏ num(N) / ∏ den(N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFn {
    pub scale: Scalar,
    pub num: Vec<Poly>,
    pub den: Vec<Poly>,
}

impl RationalFn {
    pub fn constant(c: Scalar) -> Self {
        RationalFn {
            scale: c,
            num: Vec::new(),
            den: Vec::new(),
        }
    }

    /// First denominator factor vanishing at `n`.
    pub fn vanishing_factor(&self, n: i64) -> Option<&Poly> {
        self.den.iter().find(|p| p.eval(n).is_zero())
    }

    /// `None` when a denominator factor vanishes.
    pub fn eval(&self, n: i64) -> Option<Scalar> {
        if self.vanishing_factor(n).is_some() {
            return None;
        }
        let num: BigInt = self.num.iter().map(|p| p.eval(n)).product();
        let den: BigInt = self.den.iter().map(|p| p.eval(n)).product();
        Some(&self.scale * Scalar::new(num, den))
    }
}

/// One term `k_p(α, N) · Θ-monomial` of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    /// The index `α` in `k_p(α, N)`.
    pub index: usize,
    /// Θ-monomial `Θ(m_1)…Θ(m_j)`; empty for the constant term.
    pub monomial: Partition,
    /// `k_p(α, N) / k_p(free, N)`; zero for coefficients that the tables list
    /// in the general form but not among the non-zero solutions.
    pub ratio: RationalFn,
    /// False for those zero coefficients.
    pub printed: bool,
}

/// A closed-form eigenvalue polynomial `P_p(Λ⁺, N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormPoly {
    pub class: Partition,
    pub terms: Vec<Term>,
    pub free_index: usize,
}

impl ClosedFormPoly {
    /// Label such as `k_43`.
    pub fn label(&self) -> String {
        let digits: String = self.class.parts().iter().map(|p| p.to_string()).collect();
        format!("k_{digits}")
    }

    pub fn coefficient_label(&self, index: usize) -> String {
        format!("{}({index},N)", self.label())
    }

    pub fn free_term(&self) -> &Term {
        self.terms
            .iter()
            .find(|t| t.index == self.free_index)
            .expect("free term present")
    }

    /// Every denominator factor of every coefficient.
    pub fn denominator_factors(&self) -> impl Iterator<Item = &Poly> {
        self.terms.iter().flat_map(|t| t.ratio.den.iter())
    }

    /// Printed ratio for a Θ-monomial, zero when the monomial is absent.
    pub fn ratio_for(&self, monomial: &Partition) -> Option<&Term> {
        self.terms.iter().find(|t| &t.monomial == monomial)
    }
}

fn consecutive(lo: i64, hi: i64) -> Vec<Poly> {
    (lo..=hi).map(Poly::linear).collect()
}

/// Expands a factor name: the `g` products or a literal polynomial.
fn expand(name: &str) -> Vec<Poly> {
    let with = |base: Vec<Poly>, extra: &str| {
        let mut v = base;
        v.push(Poly::parse(extra));
        v
    };
    match name {
        "g4" => consecutive(-2, 4),
        "g22" => with(consecutive(-2, 4), "5N^2 + 10N + 11"),
        "g5" => consecutive(-3, 5),
        "g6" => consecutive(-4, 6),
        "g42" => with(consecutive(-4, 6), "7N^2 + 14N + 47"),
        "g222" => with(consecutive(-4, 6), "5N^2 + 10N + 23"),
        "g7" => consecutive(-5, 7),
        "g52" => with(consecutive(-5, 7), "N^2 + 2N - 1"),
        "g43" => with(consecutive(-5, 7), "N + 1"),
        "g322" => with(consecutive(-5, 7), "5N^2 + 10N + 11"),
        literal => vec![Poly::parse(literal)],
    }
}

fn rf(num: i64, den: i64, numer: &[&str], denom: &[&str]) -> RationalFn {
    RationalFn {
        scale: Scalar::new(num.into(), den.into()),
        num: numer.iter().flat_map(|s| expand(s)).collect(),
        den: denom.iter().flat_map(|s| expand(s)).collect(),
    }
}

struct Builder {
    class: Partition,
    terms: Vec<Term>,
    free_index: usize,
}

impl Builder {
    fn new(class: &[u32], free_index: usize) -> Self {
        Builder {
            class: Partition::new(class.to_vec()).expect("class"),
            terms: Vec::new(),
            free_index,
        }
    }

    fn term(mut self, index: usize, monomial: &[u32], ratio: RationalFn) -> Self {
        self.terms.push(Term {
            index,
            monomial: Partition::new(monomial.to_vec()).expect("monomial"),
            ratio,
            printed: true,
        });
        self
    }

    fn absent(mut self, index: usize, monomial: &[u32]) -> Self {
        self.terms.push(Term {
            index,
            monomial: Partition::new(monomial.to_vec()).expect("monomial"),
            ratio: RationalFn::constant(Scalar::zero()),
            printed: false,
        });
        self
    }

    fn free(self, index: usize, monomial: &[u32]) -> Self {
        assert_eq!(index, self.free_index);
        self.term(index, monomial, RationalFn::constant(Scalar::one()))
    }

    fn build(self) -> ClosedFormPoly {
        ClosedFormPoly {
            class: self.class,
            terms: self.terms,
            free_index: self.free_index,
        }
    }
}

fn build_tables() -> Vec<ClosedFormPoly> {
    const T7: &[u32] = &[7];
    const T52: &[u32] = &[5, 2];
    const T43: &[u32] = &[4, 3];
    const T322: &[u32] = &[3, 2, 2];
    const T6: &[u32] = &[6];
    const T42: &[u32] = &[4, 2];
    const T33: &[u32] = &[3, 3];
    const T222: &[u32] = &[2, 2, 2];

    let p4 = Builder::new(&[4], 5)
        .term(1, &[4], rf(720, 1, &["N^2 + 2N + 2"], &["g4"]))
        .term(
            2,
            &[2, 2],
            rf(-720, 1, &["2N^2 + 4N - 1"], &["g4", "N + 1"]),
        )
        .absent(3, &[3])
        .absent(4, &[2])
        .free(5, &[])
        .build();

    let p22 = Builder::new(&[2, 2], 5)
        .term(1, &[4], rf(-1440, 1, &["2N^2 + 4N - 1"], &["g22"]))
        .term(
            2,
            &[2, 2],
            rf(720, 1, &["N^4 + 4N^3 - 8N + 13"], &["g22", "N + 1"]),
        )
        .absent(3, &[3])
        .term(
            4,
            &[2],
            rf(
                -120,
                1,
                &["N - 2", "N - 1", "N + 1", "N + 1", "N + 3", "N + 4"],
                &["g22"],
            ),
        )
        .free(5, &[])
        .build();

    let p5 = Builder::new(&[5], 2)
        .term(
            1,
            &[5],
            rf(-1, 5, &["N + 1", "N^2 + 2N + 6"], &["N^2 + 2N - 1"]),
        )
        .free(2, &[3, 2])
        .build();

    let p32 = Builder::new(&[3, 2], 3)
        .term(
            1,
            &[5],
            rf(
                72,
                1,
                &["N - 1", "N", "N + 2", "N + 3", "N^2 + 2N - 1"],
                &["g5", "N + 1"],
            ),
        )
        .term(
            2,
            &[3, 2],
            rf(
                -12,
                1,
                &[
                    "N - 1",
                    "N",
                    "N + 2",
                    "N + 3",
                    "N^4 + 4N^3 + 6N^2 + 4N + 25",
                ],
                &["g5", "N + 1", "N + 1"],
            ),
        )
        .free(3, &[3])
        .build();

    let p6 = Builder::new(&[6], 5)
        .term(
            1,
            T6,
            rf(-30240, 1, &["N^4 + 4N^3 + 21N^2 + 34N + 24"], &["g6"]),
        )
        .term(
            2,
            T42,
            rf(
                181440,
                1,
                &["N - 1", "N + 3", "N^2 + 2N + 6"],
                &["g6", "N + 1"],
            ),
        )
        .term(
            3,
            T33,
            rf(
                30240,
                1,
                &["3N^4 + 12N^3 + 7N^2 - 10N + 72"],
                &["g6", "N + 1"],
            ),
        )
        .term(4, T222, rf(-211680, 1, &["N^2 + 2N - 6"], &["g6"]))
        .free(5, &[])
        .build();

    let p33 = Builder::new(&[3, 3], 5)
        .term(
            1,
            T6,
            rf(-3024, 1, &["3N^4 + 12N^3 + 7N^2 - 10N + 72"], &["g6"]),
        )
        .term(
            2,
            T42,
            rf(
                45360,
                1,
                &["N^6 + 6N^5 + 5N^4 - 20N^3 - 20N^2 + 16N + 96"],
                &["N", "N + 1", "N + 2", "g6"],
            ),
        )
        .term(
            3,
            T33,
            rf(
                1008,
                1,
                &["N^8 + 8N^7 - 112N^5 + 127N^4 + 1404N^3 + 580N^2 - 2032N - 3840"],
                &["N", "N + 1", "N + 2", "g6"],
            ),
        )
        .term(
            4,
            T222,
            rf(
                -12096,
                1,
                &["4N^4 + 16N^3 - 35N^2 - 102N + 180"],
                &["N", "N + 2", "g6"],
            ),
        )
        .free(5, &[])
        .build();

    let p42 = Builder::new(&[4, 2], 8)
        .term(
            1,
            T6,
            rf(483840, 1, &["N - 1", "N + 3", "N^2 + 2N + 6"], &["g42"]),
        )
        .term(
            2,
            T42,
            rf(
                -60480,
                1,
                &[
                    "N - 1",
                    "N + 3",
                    "N^2 + 2N + 6",
                    "N^4 + 4N^3 + 5N^2 + 2N + 120",
                ],
                &["g42", "N", "N + 1", "N + 2"],
            ),
        )
        .term(
            3,
            T33,
            rf(
                -1209600,
                1,
                &["N^6 + 6N^5 + 5N^4 - 20N^3 - 20N^2 + 16N + 96"],
                &["g42", "N", "N + 1", "N + 2"],
            ),
        )
        .term(
            4,
            T222,
            rf(
                60480,
                1,
                &["N - 1", "N + 3", "2N^4 + 8N^3 - 25N^2 - 66N + 360"],
                &["g42", "N", "N + 2"],
            ),
        )
        .term(
            5,
            &[4],
            rf(
                5040,
                1,
                &[
                    "N - 4",
                    "N - 3",
                    "N + 1",
                    "N + 1",
                    "N + 5",
                    "N + 6",
                    "N^2 + 2N + 2",
                ],
                &["g42"],
            ),
        )
        .term(
            6,
            &[2, 2],
            rf(
                -5040,
                1,
                &["N - 4", "N - 3", "N + 1", "N + 5", "N + 6", "2N^2 + 4N - 1"],
                &["g42"],
            ),
        )
        .term(
            7,
            &[2],
            rf(
                -84,
                1,
                &[
                    "N - 4", "N - 3", "N - 2", "N - 1", "N + 1", "N + 1", "N + 3", "N + 4",
                    "N + 5", "N + 6",
                ],
                &["g42"],
            ),
        )
        .free(8, &[])
        .build();

    let p222 = Builder::new(&[2, 2, 2], 8)
        .term(1, T6, rf(-483840, 1, &["N^2 + 2N - 6"], &["g222"]))
        .term(
            2,
            T42,
            rf(
                51840,
                1,
                &["N - 1", "N + 3", "2N^4 + 8N^3 - 25N^2 - 66N + 360"],
                &["N", "N + 1", "N + 2", "g222"],
            ),
        )
        .term(
            3,
            T33,
            rf(
                276480,
                1,
                &["4N^4 + 16N^3 - 35N^2 - 102N + 180"],
                &["N", "N + 1", "N + 2", "g222"],
            ),
        )
        .term(
            4,
            T222,
            rf(
                -8640,
                1,
                &["N^8 + 8N^7 - 7N^6 - 154N^5 - 79N^4 + 860N^3 + 1777N^2 + 1338N - 3240"],
                &["N", "N + 1", "N + 1", "N + 2", "g222"],
            ),
        )
        .term(
            5,
            &[4],
            rf(
                -4320,
                1,
                &["N - 4", "N - 3", "N + 5", "N + 6", "2N^2 + 4N - 1"],
                &["g222"],
            ),
        )
        .term(
            6,
            &[2, 2],
            rf(
                2160,
                1,
                &["N - 4", "N - 3", "N + 5", "N + 6", "N^4 + 4N^3 - 8N + 13"],
                &["N + 1", "g222"],
            ),
        )
        .term(
            7,
            &[2],
            rf(
                -36,
                1,
                &[
                    "N - 4",
                    "N - 3",
                    "N - 2",
                    "N - 1",
                    "N + 3",
                    "N + 4",
                    "N + 5",
                    "N + 6",
                    "5N^2 + 10N + 11",
                ],
                &["g222"],
            ),
        )
        .free(8, &[])
        .build();

    let p7 = Builder::new(&[7], 4)
        .term(
            1,
            T7,
            rf(
                1,
                14,
                &["N^4 + 4N^3 + 41N^2 + 74N + 120"],
                &["2N^2 + 4N - 15"],
            ),
        )
        .term(
            2,
            T52,
            rf(
                -1,
                2,
                &["N^4 + 4N^3 + 17N^2 + 26N - 96"],
                &["N + 1", "2N^2 + 4N - 15"],
            ),
        )
        .term(
            3,
            T43,
            rf(
                -1,
                2,
                &["N^4 + 4N^3 + 5N^2 + 2N + 60"],
                &["N + 1", "2N^2 + 4N - 15"],
            ),
        )
        .free(4, T322)
        .build();

    let p43 = Builder::new(&[4, 3], 5)
        .term(
            1,
            T7,
            rf(
                -8640,
                1,
                &[
                    "N - 1",
                    "N",
                    "N + 2",
                    "N + 3",
                    "N^4 + 4N^3 + 5N^2 + 2N + 60",
                ],
                &["N + 1"],
            ),
        )
        .term(
            2,
            T52,
            rf(
                8640,
                1,
                &[
                    "N - 1",
                    "N + 3",
                    "6N^6 + 36N^5 + 13N^4 - 188N^3 - N^2 + 470N + 840",
                ],
                &["N + 1", "N + 1"],
            ),
        )
        .term(
            3,
            T43,
            rf(
                720,
                1,
                &[
                    "N - 1",
                    "N + 3",
                    "N^8 + 8N^7 + 16N^6 - 16N^5 + 681N^4 + 2980N^3 - 986N^2 - 8060N - 8400",
                ],
                &["N + 1", "N + 1"],
            ),
        )
        .term(
            4,
            T322,
            rf(
                -720,
                1,
                &[
                    "N - 1",
                    "N + 3",
                    "2N^6 + 12N^5 + 121N^4 + 404N^3 - 957N^2 - 2690N + 4200",
                ],
                &["N + 1"],
            ),
        )
        .free(5, &[3])
        .build();

    let p52 = Builder::new(&[5, 2], 6)
        .term(
            1,
            T7,
            rf(
                -24,
                1,
                &[
                    "N - 3",
                    "N - 2",
                    "N - 1",
                    "N",
                    "N + 2",
                    "N + 3",
                    "N + 4",
                    "N + 5",
                    "N^4 + 4N^3 + 17N^2 + 26N - 96",
                ],
                &["g52"],
            ),
        )
        .term(
            2,
            T52,
            rf(
                12,
                5,
                &[
                    "N - 3",
                    "N - 2",
                    "N - 1",
                    "N + 3",
                    "N + 4",
                    "N + 5",
                    "N^8 + 8N^7 + 32N^6 + 80N^5 + 515N^4 + 1676N^3 + 1648N^2 + 72N - 10080",
                ],
                &["g52", "N + 1"],
            ),
        )
        .term(
            3,
            T43,
            rf(
                24,
                1,
                &[
                    "N - 3",
                    "N - 2",
                    "N - 1",
                    "N + 3",
                    "N + 4",
                    "N + 5",
                    "6N^6 + 36N^5 + 13N^4 - 188N^3 - N^2 + 470N + 840",
                ],
                &["g52", "N + 1"],
            ),
        )
        .term(
            4,
            T322,
            rf(
                -12,
                1,
                &[
                    "N - 3",
                    "N - 2",
                    "N - 1",
                    "N + 3",
                    "N + 4",
                    "N + 5",
                    "N^6 + 6N^5 - 6N^4 - 64N^3 + 281N^2 + 706N - 840",
                ],
                &["g52"],
            ),
        )
        .term(
            5,
            &[5],
            rf(
                -1,
                5,
                &[
                    "N - 5",
                    "N - 4",
                    "N - 3",
                    "N - 2",
                    "N - 1",
                    "N",
                    "N + 1",
                    "N + 1",
                    "N + 2",
                    "N + 3",
                    "N + 4",
                    "N + 5",
                    "N + 6",
                    "N + 7",
                    "N^2 + 2N + 6",
                ],
                &["g52"],
            ),
        )
        .free(6, &[3, 2])
        .build();

    let p322 = Builder::new(&[3, 2, 2], 7)
        .term(
            1,
            T7,
            rf(
                34560,
                1,
                &["N - 1", "N", "N + 1", "N + 2", "N + 3", "2N^2 + 4N - 15"],
                &["g322"],
            ),
        )
        .term(
            2,
            T52,
            rf(
                -8640,
                1,
                &[
                    "N - 1",
                    "N + 3",
                    "N^6 + 6N^5 - 6N^4 - 64N^3 + 281N^2 + 706N - 840",
                ],
                &["g322"],
            ),
        )
        .term(
            3,
            T43,
            rf(
                -1440,
                1,
                &[
                    "N - 1",
                    "N + 3",
                    "2N^6 + 12N^5 + 121N^4 + 404N^3 - 957N^2 - 2690N + 4200",
                ],
                &["g322"],
            ),
        )
        .term(
            4,
            T322,
            rf(
                720,
                1,
                &[
                    "N - 1",
                    "N + 3",
                    "N^8 + 8N^7 - 3N^6 - 130N^5 + 109N^4 + 1452N^3 + 5113N^2 + 6890N - 4200",
                ],
                &["g322", "N + 1"],
            ),
        )
        .term(
            5,
            &[5],
            rf(
                720,
                1,
                &[
                    "N - 5",
                    "N - 4",
                    "N - 1",
                    "N",
                    "N + 1",
                    "N + 2",
                    "N + 3",
                    "N + 6",
                    "N + 7",
                    "N^2 + 2N - 1",
                ],
                &["g322"],
            ),
        )
        .term(
            6,
            &[3, 2],
            rf(
                -120,
                1,
                &[
                    "N - 5",
                    "N - 4",
                    "N - 1",
                    "N",
                    "N + 2",
                    "N + 3",
                    "N + 6",
                    "N + 7",
                    "N^4 + 4N^3 + 6N^2 + 4N + 25",
                ],
                &["g322"],
            ),
        )
        .free(7, &[3])
        .build();

    vec![p4, p22, p5, p32, p6, p42, p33, p222, p7, p52, p43, p322]
}

/// Which version of the coefficient tables to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Table {
    /// Exactly as published.
    #[default]
    Printed,
    /// With the entries of [`known_errata`] applied.
    Corrected,
}

/// A confirmed misprint and its correction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnownErratum {
    pub class: Partition,
    /// Affected coefficient indices `α`.
    pub indices: Vec<usize>,
    pub description: &'static str,
    /// Extra denominator factors of the corrected coefficients.
    pub extra_den: Vec<Poly>,
}

pub fn known_errata() -> &'static [KnownErratum] {
    static ERRATA: OnceLock<Vec<KnownErratum>> = OnceLock::new();
    ERRATA.get_or_init(|| {
        vec![KnownErratum {
            class: Partition::new(vec![4, 3]).expect("class"),
            indices: vec![1, 2, 3, 4],
            description: "k_43(1..4,N) are printed without their common denominator g_7(N)",
            extra_den: expand("g7"),
        }]
    })
}

fn apply_errata(mut forms: Vec<ClosedFormPoly>) -> Vec<ClosedFormPoly> {
    for e in known_errata() {
        let form = forms
            .iter_mut()
            .find(|f| f.class == e.class)
            .expect("erratum class");
        for t in form
            .terms
            .iter_mut()
            .filter(|t| e.indices.contains(&t.index))
        {
            t.ratio.den.extend(e.extra_den.iter().cloned());
        }
    }
    forms
}

/// The twelve closed-form families of orders 4 to 7, as published.
pub fn closed_forms() -> &'static [ClosedFormPoly] {
    closed_forms_from(Table::Printed)
}

pub fn closed_forms_from(table: Table) -> &'static [ClosedFormPoly] {
    static PRINTED: OnceLock<Vec<ClosedFormPoly>> = OnceLock::new();
    static CORRECTED: OnceLock<Vec<ClosedFormPoly>> = OnceLock::new();
    match table {
        Table::Printed => PRINTED.get_or_init(build_tables),
        Table::Corrected => CORRECTED.get_or_init(|| apply_errata(build_tables())),
    }
}

/// Printed default for the free coefficient, where one is given.
pub(crate) fn default_free_coefficient(class: &Partition) -> Option<RationalFn> {
    match class.parts() {
        [4] => Some(rf(
            1,
            720,
            &["N + 1", "N + 1", "N + 2", "N + 3", "N + 4"],
            &[],
        )),
        [2, 2] => Some(rf(
            1,
            720,
            &["5N^2 + 10N + 11", "N + 1", "N + 2", "N + 3", "N + 4"],
            &[],
        )),
        [5] => Some(rf(
            -5,
            1,
            &["N + 1", "N^2 + 2N - 1"],
            &["N", "N - 1", "N - 2", "N - 3"],
        )),
        [3, 2] => Some(rf(
            -1,
            12,
            &["N + 1", "N + 1", "N + 1", "N + 4", "N + 5"],
            &["N", "N - 1"],
        )),
        _ => None,
    }
}
