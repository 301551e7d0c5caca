//! Serializable views of the exact constructions, shared by every output
//! format.  Building a view touches only deterministic orders, so repeated
//! runs produce identical bytes.

use serde::Serialize;
use std::collections::BTreeMap;

use octo_g2_core::chevalley::{ChevalleyBasis, Root, ALGEBRA_DIM};
use octo_g2_core::derivations::{
    d_matrix, kernel_generator, kernel_of_d, kernel_orbit, DerivationAlgebra,
};
use octo_g2_core::linalg;
use octo_g2_core::octonion::{basis_product, basis_symbol, OCT_DIM};
use octo_g2_core::scalar::Scalar;
use octo_g2_core::standard_rep::{ActionEntry, StandardRep, Weight};
use octo_g2_core::verify::{self, SuiteReport};
use octo_g2_core::weyl::{weyl_dimension, TwoRowShape, WeylModule};

use octo_g2_core::gf8::F8;

/// One exact rational as a numerator/denominator string pair.
#[derive(Serialize)]
pub struct RatioDto {
    pub num: String,
    pub den: String,
}

/// One exact scalar: real and imaginary rational parts.
#[derive(Serialize)]
pub struct ScalarDto {
    pub re: RatioDto,
    pub im: RatioDto,
}

impl ScalarDto {
    pub fn of(s: &Scalar) -> ScalarDto {
        ScalarDto {
            re: RatioDto {
                num: s.re().numer().to_string(),
                den: s.re().denom().to_string(),
            },
            im: RatioDto {
                num: s.im().numer().to_string(),
                den: s.im().denom().to_string(),
            },
        }
    }
}

/// The eight-by-eight basis multiplication table.  Each product is a signed
/// basis index.
#[derive(Serialize)]
pub struct MulTable {
    pub basis: Vec<String>,
    pub products: Vec<Vec<ProductEntry>>,
}

#[derive(Serialize)]
pub struct ProductEntry {
    pub sign: i8,
    pub index: usize,
}

impl MulTable {
    /// The signed symbol of one product entry, e.g. `-e4`.
    pub fn symbol(&self, entry: &ProductEntry) -> String {
        if entry.sign < 0 {
            format!("-{}", self.basis[entry.index])
        } else {
            self.basis[entry.index].clone()
        }
    }
}

pub fn multiplication_table() -> MulTable {
    let exponents: Vec<F8> = (0..OCT_DIM)
        .map(octo_g2_core::octonion::index_exponent)
        .collect();
    let basis: Vec<String> = (0..OCT_DIM).map(basis_symbol).collect();
    let products = exponents
        .iter()
        .map(|&x| {
            exponents
                .iter()
                .map(|&y| {
                    let (sign, exponent) = basis_product(x, y);
                    ProductEntry {
                        sign,
                        index: octo_g2_core::octonion::basis_index(exponent),
                    }
                })
                .collect()
        })
        .collect();
    MulTable { basis, products }
}

/// One root with every frozen coordinate attached to it.
#[derive(Serialize)]
pub struct RootInfo {
    pub label: String,
    pub m: i64,
    pub n: i64,
    pub kind: String,
    pub twist: usize,
    pub negative: bool,
    pub p: i64,
    pub q: i64,
    pub norm2: i64,
}

pub fn root_table() -> Vec<RootInfo> {
    Root::ALL
        .iter()
        .map(|&r| RootInfo {
            label: r.label().to_string(),
            m: r.mn().0,
            n: r.mn().1,
            kind: if r.is_long() { "long".to_string() } else { "short".to_string() },
            twist: r.twist(),
            negative: r.is_negative(),
            p: r.pq().0,
            q: r.pq().1,
            norm2: r.norm2(),
        })
        .collect()
}

/// One basis element written over the selected derivation pairs, with the
/// full operator matrix on request.
#[derive(Serialize)]
pub struct ChevalleyElement {
    pub index: usize,
    pub label: String,
    pub combination: Vec<PairTerm>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<MatrixEntry>>>,
}

#[derive(Serialize)]
pub struct PairTerm {
    pub pair: String,
    pub value: ScalarDto,
    pub display: String,
}

#[derive(Serialize)]
pub struct MatrixEntry {
    pub value: ScalarDto,
    pub display: String,
}

pub fn chevalley_elements(with_matrices: bool) -> Vec<ChevalleyElement> {
    let basis = ChevalleyBasis::build();
    let algebra = DerivationAlgebra::build();
    let labels = ChevalleyBasis::labels();
    basis
        .elements()
        .iter()
        .enumerate()
        .map(|(index, op)| {
            let decomposed = algebra.element(op).expect("basis elements are derivations");
            let combination = algebra
                .basis_pairs()
                .iter()
                .zip(&decomposed.coords)
                .filter(|(_, c)| !c.is_zero())
                .map(|(&(i, j), c)| PairTerm {
                    pair: format!("e{i}^e{j}"),
                    value: ScalarDto::of(c),
                    display: c.render(),
                })
                .collect();
            let matrix = with_matrices.then(|| {
                (0..OCT_DIM)
                    .map(|r| {
                        (0..OCT_DIM)
                            .map(|c| {
                                let entry = op.at(r, c);
                                MatrixEntry {
                                    value: ScalarDto::of(entry),
                                    display: entry.render(),
                                }
                            })
                            .collect()
                    })
                    .collect()
            });
            ChevalleyElement { index, label: labels[index].clone(), combination, matrix }
        })
        .collect()
}

/// The full bracket table: one entry per ordered basis pair, 196 in all.
#[derive(Serialize)]
pub struct StructureTable {
    pub labels: Vec<String>,
    pub brackets: Vec<BracketLine>,
}

#[derive(Serialize)]
pub struct BracketLine {
    pub left_index: usize,
    pub right_index: usize,
    pub left: String,
    pub right: String,
    pub terms: Vec<CoeffTerm>,
}

#[derive(Serialize)]
pub struct CoeffTerm {
    pub target: String,
    pub coefficient: i64,
}

impl BracketLine {
    /// The bracket coordinates as a dense integer row over the basis order.
    pub fn dense_row(&self, labels: &[String]) -> Vec<i64> {
        let mut row = vec![0i64; labels.len()];
        for term in &self.terms {
            let k = labels.iter().position(|l| l == &term.target).expect("known label");
            row[k] = term.coefficient;
        }
        row
    }
}

pub fn structure_table() -> StructureTable {
    let basis = ChevalleyBasis::build();
    let constants = basis.structure_constants().expect("integer structure constants");
    let labels = ChevalleyBasis::labels();
    let mut brackets = Vec::new();
    for i in 0..ALGEBRA_DIM {
        for j in 0..ALGEBRA_DIM {
            let terms: Vec<CoeffTerm> = constants
                .bracket_coords(i, j)
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(k, &c)| CoeffTerm { target: labels[k].clone(), coefficient: c })
                .collect();
            brackets.push(BracketLine {
                left_index: i,
                right_index: j,
                left: labels[i].clone(),
                right: labels[j].clone(),
                terms,
            });
        }
    }
    StructureTable { labels, brackets }
}

/// The image of one weight vector under one root vector.
#[derive(Serialize)]
pub struct ActionImage {
    pub weight: String,
    pub coefficient: i64,
    pub target: Option<String>,
    pub result: String,
}

#[derive(Serialize)]
pub struct ActionRow {
    pub root: String,
    pub images: Vec<ActionImage>,
}

pub fn action_table() -> Vec<ActionRow> {
    let rep = StandardRep::build();
    rep.action_table()
        .into_iter()
        .map(|(root, row)| ActionRow {
            root: root.label().to_string(),
            images: Weight::ALL
                .iter()
                .zip(row)
                .map(|(w, entry)| {
                    let (coefficient, target) = match entry {
                        ActionEntry::Zero => (0, None),
                        ActionEntry::MinusTwoZero => (-2, Some(Weight::Zero)),
                        ActionEntry::Signed(sign, t) => (sign as i64, Some(t)),
                    };
                    let result = match (coefficient, target) {
                        (_, None) => "0".to_string(),
                        (1, Some(t)) => format!("v_{}", t.label()),
                        (-1, Some(t)) => format!("-v_{}", t.label()),
                        (c, Some(t)) => format!("{c} v_{}", t.label()),
                    };
                    ActionImage {
                        weight: w.label(),
                        coefficient,
                        target: target.map(|t| t.label()),
                        result,
                    }
                })
                .collect(),
        })
        .collect()
}

/// The kernel of the wedge-to-derivation map.
#[derive(Serialize)]
pub struct KernelReport {
    pub rank: usize,
    pub dimension: usize,
    pub generator: String,
    pub orbit: Vec<String>,
}

pub fn kernel_report() -> KernelReport {
    KernelReport {
        rank: linalg::rank(&d_matrix()),
        dimension: kernel_of_d().dim(),
        generator: kernel_generator().render(),
        orbit: kernel_orbit().iter().map(|w| w.render()).collect(),
    }
}

/// One generated irreducible module.
#[derive(Serialize)]
pub struct IrrepReport {
    pub highest_weight: [i64; 2],
    pub shape: [usize; 2],
    pub degree: usize,
    pub ambient_dimension: usize,
    pub dimension: usize,
    pub formula_dimension: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<WeightLine>>,
}

#[derive(Serialize)]
pub struct WeightLine {
    pub mn: [i64; 2],
    pub multiplicity: usize,
}

pub fn irrep_report(a: usize, b: usize, with_weights: bool) -> IrrepReport {
    let rep = StandardRep::build();
    let module = WeylModule::generate(&rep, a, b);
    let shape = TwoRowShape::from_highest_weight(a, b);
    let weights = with_weights.then(|| {
        let mults: BTreeMap<(i64, i64), usize> = module.weight_multiplicities();
        mults
            .into_iter()
            .map(|((m, n), multiplicity)| WeightLine { mn: [m, n], multiplicity })
            .collect()
    });
    IrrepReport {
        highest_weight: [a as i64, b as i64],
        shape: [shape.row1(), shape.row2()],
        degree: shape.size(),
        ambient_dimension: module.tensor_space().dim(),
        dimension: module.dim(),
        formula_dimension: weyl_dimension(a as u64, b as u64),
        weights,
    }
}

/// Results of one or all verification suites.
#[derive(Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub suites: Vec<SuiteDto>,
}

#[derive(Serialize)]
pub struct SuiteDto {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckDto>,
}

#[derive(Serialize)]
pub struct CheckDto {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn suite_dto(report: SuiteReport) -> SuiteDto {
    SuiteDto {
        suite: report.suite.clone(),
        passed: report.passed(),
        checks: report
            .checks
            .into_iter()
            .map(|c| CheckDto { name: c.name, passed: c.passed, detail: c.detail })
            .collect(),
    }
}

/// Runs the named suite, or every suite for `all`; `None` for an
/// unregistered name.
pub fn verify_report(suite: &str) -> Option<VerifyReport> {
    let reports = if suite == "all" {
        verify::run_all()
    } else {
        vec![verify::run_suite(suite)?]
    };
    let suites: Vec<SuiteDto> = reports.into_iter().map(suite_dto).collect();
    let passed = suites.iter().all(|s| s.passed);
    Some(VerifyReport { passed, suites })
}

/// The frozen conventions every other command relies on.
#[derive(Serialize)]
pub struct Conventions {
    pub field_relation: String,
    pub multiplication_rule: String,
    pub coordinate_order: Vec<String>,
    pub basis_order: Vec<String>,
    pub weight_order: Vec<String>,
    pub simple_roots: [String; 2],
    pub cartan_matrix: [[i64; 2]; 2],
    pub eigenvalue_pairs: Vec<String>,
    pub opposite_bracket: String,
    pub scalar_encoding: String,
    pub notes: Vec<String>,
}

pub fn conventions() -> Conventions {
    let weight_order = Weight::ALL.iter().map(|w| format!("v_{}", w.label())).collect();
    let eigenvalue_pairs = Root::ALL
        .iter()
        .map(|r| format!("{}: ({}, {})", r.label(), r.mn().0, r.mn().1))
        .collect();
    Conventions {
        field_relation: "the field generator alpha satisfies alpha^3 = alpha + 1".to_string(),
        multiplication_rule:
            "basis vectors are indexed by the eight field elements; the product of two is the \
             vector of the exponent sum, negated when the sign pairing is odd"
                .to_string(),
        coordinate_order: (0..OCT_DIM).map(basis_symbol).collect(),
        basis_order: ChevalleyBasis::labels(),
        weight_order,
        simple_roots: ["beta".to_string(), "gamma".to_string()],
        cartan_matrix: [[2, -1], [-3, 2]],
        eigenvalue_pairs,
        opposite_bracket: "[E_r, E_-r] = -H_r for every root r".to_string(),
        scalar_encoding:
            "JSON scalars are {\"re\": {\"num\", \"den\"}, \"im\": {\"num\", \"den\"}} with \
             exact integer strings"
                .to_string(),
        notes: vec![
            "coroots are normalized so that eigenvalues on root vectors are the Cartan \
             integers"
                .to_string(),
            "short root vectors are half the derivation of the zero-weight wedge; long ones \
             are a sixth of a short-pair wedge"
                .to_string(),
            "negative root vectors are entrywise complex conjugates of positive ones"
                .to_string(),
            "module weight bases are ordered v_0 first, then the six short-root weight \
             vectors"
                .to_string(),
        ],
    }
}
