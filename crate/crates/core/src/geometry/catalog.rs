//! Built-in arrangements.

use std::sync::Arc;

use super::{Arrangement, GeometryError};
use crate::numbers::{AlgebraicElement, FieldElement, NumberField, Rational};

pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    build: fn() -> Arrangement,
}

impl CatalogEntry {
    pub fn arrangement(&self) -> Arrangement {
        (self.build)()
    }
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "CL1",
        description: "two lines and two conics through a quasi-homogeneous quadruple point",
        build: cl1,
    },
    CatalogEntry {
        name: "CL2",
        description: "CL1 with the line y = 0 moved to x - 13y = 0",
        build: cl2,
    },
    CatalogEntry {
        name: "CL3",
        description: "a line tangent to a conic",
        build: cl3,
    },
    CatalogEntry {
        name: "CL4",
        description: "two tangent lines of a conic",
        build: cl4,
    },
    CatalogEntry {
        name: "CL5",
        description: "three tangent lines of a conic",
        build: cl5,
    },
    CatalogEntry {
        name: "CL5'",
        description: "three lines and a conic through their three triple points",
        build: cl5_prime,
    },
    CatalogEntry {
        name: "CL7",
        description: "two concentric conics and three lines over Q(sqrt 3)",
        build: cl7,
    },
    CatalogEntry {
        name: "A0-six",
        description: "six lines (x^2-y^2)(x^2-z^2)(y^2-z^2)",
        build: a0_six,
    },
    CatalogEntry {
        name: "A0-seven",
        description: "seven lines xyz(x+y)(x+z)(y-z)(x+y+z)",
        build: a0_seven,
    },
    CatalogEntry {
        name: "dual-hesse",
        description: "nine lines (x^3-y^3)(y^3-z^3)(x^3-z^3) over Q(omega)",
        build: dual_hesse,
    },
    CatalogEntry {
        name: "conic-secant",
        description: "a secant line of a conic",
        build: conic_secant,
    },
    CatalogEntry {
        name: "generic-12-lines",
        description: "twelve lines x + iy + i^2 z, i = 1..12, in general position",
        build: generic_12_lines,
    },
    CatalogEntry {
        name: "generic-6-conics",
        description: "six conics meeting pairwise transversally, no three concurrent",
        build: generic_6_conics,
    },
    CatalogEntry {
        name: "bitangent-6-conics",
        description: "three pairs of bitangent conics, otherwise transversal",
        build: bitangent_6_conics,
    },
];

pub fn catalog_names() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.name).collect()
}

/// The named catalog arrangement.
pub fn catalog(name: &str) -> Result<Arrangement, GeometryError> {
    CATALOG
        .iter()
        .find(|e| e.name == name)
        .map(|e| e.arrangement())
        .ok_or_else(|| GeometryError::UnknownName(name.to_string()))
}

fn rational(name: &str, lines: &[[i64; 3]], conics: &[[i64; 6]]) -> Arrangement {
    let k = NumberField::rationals();
    let q = |v: i64| k.from_rational(Rational::from_int(v));
    Arrangement::new(
        Some(name.into()),
        k.clone(),
        lines.iter().map(|l| l.map(q)).collect(),
        conics.iter().map(|c| c.map(q)).collect(),
    )
}

const CIRCLE: [i64; 6] = [1, 1, -1, 0, 0, 0];
const PARABOLA: [i64; 6] = [0, 1, 0, 0, 1, 0];
const CL1_CONIC: [i64; 6] = [1, 1, 0, 0, 2, 0];

fn cl1() -> Arrangement {
    rational("CL1", &[[1, 0, 0], [0, 1, 0]], &[PARABOLA, CL1_CONIC])
}

fn cl2() -> Arrangement {
    rational("CL2", &[[1, 0, 0], [1, -13, 0]], &[PARABOLA, CL1_CONIC])
}

fn cl3() -> Arrangement {
    rational("CL3", &[[1, 0, -1]], &[CIRCLE])
}

fn cl4() -> Arrangement {
    rational("CL4", &[[1, 0, -1], [1, 0, 1]], &[CIRCLE])
}

fn cl5() -> Arrangement {
    rational("CL5", &[[0, 1, -1], [1, 0, -1], [1, 0, 1]], &[CIRCLE])
}

fn cl5_prime() -> Arrangement {
    rational("CL5'", &[[0, 1, 0], [1, 1, -4], [1, -1, 4]], &[[1, 1, -16, 0, 0, 0]])
}

fn sqrt3_field() -> Arc<NumberField> {
    NumberField::from_i64s(&[-3, 0, 1], "Q(sqrt3)").expect("valid field")
}

fn cl7() -> Arrangement {
    let k = sqrt3_field();
    let q = |v: i64| k.from_rational(Rational::from_int(v));
    let s = k.generator();
    let third = |c: i64| s.mul(&k.from_rational(Rational::frac(c, 3)));
    Arrangement::new(
        Some("CL7".into()),
        k.clone(),
        vec![
            [q(1), q(0), q(-1)],
            [third(1), q(1), third(2)],
            [third(-1), q(1), third(-2)],
        ],
        vec![CIRCLE.map(q), [1, 1, -4, 0, 0, 0].map(q)],
    )
}

fn a0_six() -> Arrangement {
    rational(
        "A0-six",
        &[[1, -1, 0], [1, 1, 0], [1, 0, -1], [1, 0, 1], [0, 1, -1], [0, 1, 1]],
        &[],
    )
}

fn a0_seven() -> Arrangement {
    rational(
        "A0-seven",
        &[
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 1, 0],
            [1, 0, 1],
            [0, 1, -1],
            [1, 1, 1],
        ],
        &[],
    )
}

fn dual_hesse() -> Arrangement {
    let k = NumberField::from_i64s(&[1, 1, 1], "Q(omega)").expect("valid field");
    let zero = k.zero();
    let one = k.one();
    let w = k.generator();
    let powers: [AlgebraicElement; 3] = [one.clone(), w.clone(), w.mul(&w)];
    let mut lines = Vec::new();
    for (a, b) in [(0, 1), (1, 2), (0, 2)] {
        for wj in &powers {
            let mut l = [zero.clone(), zero.clone(), zero.clone()];
            l[a] = one.clone();
            l[b] = wj.neg();
            lines.push(l);
        }
    }
    Arrangement::new(Some("dual-hesse".into()), k, lines, vec![])
}

fn conic_secant() -> Arrangement {
    rational("conic-secant", &[[0, 1, 0]], &[CIRCLE])
}

fn generic_12_lines() -> Arrangement {
    let lines: Vec<[i64; 3]> = (1..=12).map(|i| [1, i, i * i]).collect();
    rational("generic-12-lines", &lines, &[])
}

const GENERIC_CONICS: [[i64; 6]; 6] = [
    [1, 1, -1, 0, 0, 0],
    [1, 2, -3, 1, 0, 0],
    [2, 1, -5, 0, 1, 0],
    [1, 3, -2, 0, 0, 2],
    [3, 1, -7, 1, 1, 0],
    [1, 5, -4, 0, 1, 3],
];

fn generic_6_conics() -> Arrangement {
    rational("generic-6-conics", &[], &GENERIC_CONICS)
}

/// `Q` and `Q + L^2` are tangent at the two points of `Q ∩ L`.
fn plus_square(q: [i64; 6], l: [i64; 3]) -> [i64; 6] {
    let [a, b, c] = l;
    [
        q[0] + a * a,
        q[1] + b * b,
        q[2] + c * c,
        q[3] + 2 * a * b,
        q[4] + 2 * a * c,
        q[5] + 2 * b * c,
    ]
}

fn bitangent_6_conics() -> Arrangement {
    let pairs: [([i64; 6], [i64; 3]); 3] = [
        (GENERIC_CONICS[0], [1, 2, 3]),
        (GENERIC_CONICS[1], [2, -1, 1]),
        (GENERIC_CONICS[2], [1, 1, -2]),
    ];
    let conics: Vec<[i64; 6]> = pairs.iter().flat_map(|&(q, l)| [q, plus_square(q, l)]).collect();
    rational("bitangent-6-conics", &[], &conics)
}
