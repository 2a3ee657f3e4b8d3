//! Batch front end for `gspin-core`.
//!
//! Every invocation is a [`Request`]; [`execute`] is pure and turns it into a
//! [`Report`] that carries the request, so a JSON report can be replayed.

mod render;

use std::collections::BTreeSet;

use gspin_core::clifford::{
    spin_matrix, torus_element, CliffordContext, Multivector, MultivectorJson,
};
use gspin_core::conjugacy::{
    canonical, go_conjugate, gspin_conjugate, in_bad_position, sign_twist_conjugate, spin_charpoly,
    spinor_norm_chart, std_conjugate, steinberg_conjugate, GSpinTorusPoint, TorusPointJson,
};
use gspin_core::g2::{
    embed_so7, is_g2_class, is_principal_type, spin_restriction_check, G2TorusPoint,
};
use gspin_core::rootdata::{GroupTag, WeightVector};
use gspin_core::satake::{euler_factor, parse_store, partial_l_value, LValue, Rep, StoreRecord};
use gspin_core::scalar::{
    format_rational, int, parse_rational, require_common_field, Rational, Scalar,
};
use gspin_core::weights::{
    c_shift, c_shift_amount, classicality_bound, hodge_cocharacter, ht1_witness, ht2_witness,
    is_admissible, is_spin_regular, is_std_regular, spin_ht_numbers, std_ht_numbers, AffineCone,
    AffineConeJson, HTCocharacter, HTCocharacterJson,
};
use gspin_core::{Error, Quadratic};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use render::render_text;

/// Seed used by randomized commands when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 2;
    pub const DISAGREEMENT: i32 = 3;
    pub const DOMAIN: i32 = 4;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::Domain(_)) => exit::DOMAIN,
            _ => exit::USAGE,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Fully resolved input of one command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Request {
    Conj {
        t1: TorusPointJson,
        t2: TorusPointJson,
    },
    Lfactor {
        rep: Rep,
        records: Vec<StoreRecord>,
    },
    Lsum {
        rep: Rep,
        s: String,
        cutoff: u64,
        c_normalized: bool,
        records: Vec<StoreRecord>,
    },
    WeightsCheck {
        n: usize,
        c0: String,
        mu: Vec<i64>,
    },
    WeightsHodge {
        n: usize,
        lambda: Vec<i64>,
    },
    Classicality {
        n: usize,
        w: Vec<String>,
        vbeta: String,
        eta: Vec<i64>,
        cone: Option<AffineConeJson>,
    },
    G2Check {
        x: String,
        y: String,
    },
    CliffordMul {
        a: MultivectorJson,
        b: MultivectorJson,
    },
    CliffordNorm {
        x: MultivectorJson,
    },
    CliffordTorus {
        c: String,
        a: Vec<String>,
    },
    CliffordCheck {
        n: usize,
        samples: usize,
        seed: u64,
    },
    StoreValidate {
        records: Vec<StoreRecord>,
    },
    StoreIngest {
        existing: Vec<StoreRecord>,
        incoming: Vec<StoreRecord>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConjOutput {
    pub gspin_conjugate: bool,
    pub steinberg_conjugate: bool,
    pub std_conjugate: bool,
    pub go_conjugate: bool,
    pub canonical: [String; 2],
    pub spinor_norm: [String; 2],
    pub spin_charpoly: [String; 2],
    pub bad_position: [bool; 2],
    pub sign_twist: [bool; 2],
    pub criteria_agree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FactorEntry {
    pub q: u64,
    pub label: Option<String>,
    pub class: String,
    pub poly: String,
    /// Coefficients of `T^0, T^1, ...`.
    pub coefficients: Vec<String>,
    pub factored: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LfactorOutput {
    pub rep: Rep,
    pub factors: Vec<FactorEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HtVerdict {
    pub pass: bool,
    /// The multiple `x` (HT1) or the pair `(a, b)` (HT2) of the excluded pattern.
    pub witness: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeightsCheckOutput {
    pub cocharacter: HTCocharacterJson,
    pub spin_ht_numbers: Vec<String>,
    pub std_ht_numbers: Vec<String>,
    pub spin_regular: bool,
    pub std_regular: bool,
    pub ht1: HtVerdict,
    /// Only defined for `n = 3`.
    pub ht2: Option<HtVerdict>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeightsHodgeOutput {
    pub hodge: HTCocharacterJson,
    pub c_normalized: HTCocharacterJson,
    pub spin_regular: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassicalityOutput {
    pub bound: String,
    /// `v(β)` lies strictly below the bound.
    pub classical: bool,
    pub admissible: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct G2Output {
    pub embedding: TorusPointJson,
    pub spin_eigenvalues: Vec<String>,
    pub std_eigenvalues: Vec<String>,
    pub trace_spin: String,
    pub trace_std: String,
    pub trace_ok: bool,
    pub multiset_ok: bool,
    pub g2_class: bool,
    pub principal_type: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CliffordMulOutput {
    pub product: MultivectorJson,
    pub reversed_product: MultivectorJson,
    pub anticommutator: MultivectorJson,
    /// `ab + ba` when it is a scalar, as for two vectors.
    pub anticommutator_scalar: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CliffordNormOutput {
    pub even: bool,
    pub is_gspin: bool,
    pub spinor_norm: Option<String>,
    pub similitude: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CliffordTorusOutput {
    pub element: MultivectorJson,
    pub spinor_norm: String,
    pub spin_diagonal: Vec<String>,
    pub so_diagonal: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CliffordCheckOutput {
    pub vectors: usize,
    pub triples: usize,
    pub square_law: bool,
    pub associativity: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StoreOutput {
    pub records: usize,
    pub added: usize,
    pub ranks: Vec<usize>,
    pub primes: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Output {
    Conj(ConjOutput),
    Lfactor(LfactorOutput),
    Lsum(LValue),
    WeightsCheck(WeightsCheckOutput),
    WeightsHodge(WeightsHodgeOutput),
    Classicality(ClassicalityOutput),
    G2(G2Output),
    CliffordMul(CliffordMulOutput),
    CliffordNorm(CliffordNormOutput),
    CliffordTorus(CliffordTorusOutput),
    CliffordCheck(CliffordCheckOutput),
    Store(StoreOutput),
}

impl Output {
    /// Description of an internal disagreement between criteria that must agree.
    pub fn disagreement(&self) -> Option<String> {
        match self {
            Output::Conj(c) if !c.criteria_agree => Some("conjugacy criteria disagree".into()),
            Output::G2(g) if !(g.trace_ok && g.multiset_ok) => {
                Some("spin restriction to G2 is not std + 1".into())
            }
            Output::CliffordCheck(c) if !(c.square_law && c.associativity) => {
                Some("Clifford axioms failed".into())
            }
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub request: Request,
    pub result: Output,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Reads the request back out of a JSON report.
pub fn request_of_report(json: &str) -> CliResult<Request> {
    #[derive(Deserialize)]
    struct Envelope {
        request: Request,
    }
    let env: Envelope =
        serde_json::from_str(json).map_err(|e| CliError::Usage(format!("bad report: {e}")))?;
    Ok(env.request)
}

type Q = Quadratic;

fn strings<S: Scalar>(v: &[S]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn parse_q(s: &str) -> CliResult<Q> {
    Ok(Q::parse_exact(s)?)
}

fn rationals(v: &[String]) -> CliResult<Vec<Rational>> {
    Ok(v.iter()
        .map(|s| parse_rational(s))
        .collect::<Result<_, _>>()?)
}

pub fn execute(req: &Request) -> CliResult<Report> {
    let result = match req {
        Request::Conj { t1, t2 } => Output::Conj(conj(t1, t2)?),
        Request::Lfactor { rep, records } => Output::Lfactor(lfactor(*rep, records)?),
        Request::Lsum {
            rep,
            s,
            cutoff,
            c_normalized,
            records,
        } => Output::Lsum(lsum(*rep, s, *cutoff, *c_normalized, records)?),
        Request::WeightsCheck { n, c0, mu } => Output::WeightsCheck(weights_check(*n, c0, mu)?),
        Request::WeightsHodge { n, lambda } => Output::WeightsHodge(weights_hodge(*n, lambda)?),
        Request::Classicality {
            n,
            w,
            vbeta,
            eta,
            cone,
        } => Output::Classicality(classicality(*n, w, vbeta, eta, cone.as_ref())?),
        Request::G2Check { x, y } => Output::G2(g2_check(x, y)?),
        Request::CliffordMul { a, b } => Output::CliffordMul(clifford_mul(a, b)?),
        Request::CliffordNorm { x } => Output::CliffordNorm(clifford_norm(x)?),
        Request::CliffordTorus { c, a } => Output::CliffordTorus(clifford_torus(c, a)?),
        Request::CliffordCheck { n, samples, seed } => {
            Output::CliffordCheck(clifford_check(*n, *samples, *seed)?)
        }
        Request::StoreValidate { records } => Output::Store(store_summary(&[], records)?),
        Request::StoreIngest { existing, incoming } => {
            Output::Store(store_summary(existing, incoming)?)
        }
    };
    Ok(Report {
        request: req.clone(),
        result,
    })
}

fn conj(j1: &TorusPointJson, j2: &TorusPointJson) -> CliResult<ConjOutput> {
    let t1 = GSpinTorusPoint::<Q>::from_json(j1)?;
    let t2 = GSpinTorusPoint::<Q>::from_json(j2)?;
    if t1.n() != t2.n() {
        return Err(CliError::Usage(format!(
            "torus points of different rank ({} and {})",
            t1.n(),
            t2.n()
        )));
    }
    let gspin = gspin_conjugate(&t1, &t2)?;
    let steinberg = steinberg_conjugate(&t1, &t2)?;
    let bad = [in_bad_position(&t1), in_bad_position(&t2)];
    let twist = [sign_twist_conjugate(&t1)?, sign_twist_conjugate(&t2)?];
    Ok(ConjOutput {
        gspin_conjugate: gspin,
        steinberg_conjugate: steinberg,
        std_conjugate: std_conjugate(&t1, &t2)?,
        go_conjugate: go_conjugate(&t1, &t2)?,
        canonical: [canonical(&t1)?.to_string(), canonical(&t2)?.to_string()],
        spinor_norm: [
            spinor_norm_chart(&t1).to_string(),
            spinor_norm_chart(&t2).to_string(),
        ],
        spin_charpoly: [
            spin_charpoly(&t1).to_string(),
            spin_charpoly(&t2).to_string(),
        ],
        bad_position: bad,
        sign_twist: twist,
        criteria_agree: gspin == steinberg && bad == twist,
    })
}

/// Validates records the same way a store file is validated.
fn params(records: &[StoreRecord]) -> CliResult<Vec<gspin_core::satake::SatakeParam<Q>>> {
    let text: String = records
        .iter()
        .map(|r| serde_json::to_string(r).expect("records serialize") + "\n")
        .collect();
    Ok(parse_store(&text)?)
}

fn lfactor(rep: Rep, records: &[StoreRecord]) -> CliResult<LfactorOutput> {
    let factors = params(records)?
        .iter()
        .map(|p| {
            let f = euler_factor(p, rep);
            FactorEntry {
                q: p.q(),
                label: p.label().map(str::to_owned),
                class: p.class().to_string(),
                poly: f.poly.display_in("T"),
                coefficients: strings(f.poly.coeffs()),
                factored: f.factored(),
            }
        })
        .collect();
    Ok(LfactorOutput { rep, factors })
}

fn lsum(
    rep: Rep,
    s: &str,
    cutoff: u64,
    c_normalized: bool,
    records: &[StoreRecord],
) -> CliResult<LValue> {
    let ps = params(records)?;
    let s = parse_rational(s)?;
    let shift = if c_normalized {
        let ranks: BTreeSet<usize> = ps.iter().map(|p| p.n()).collect();
        if ranks.len() > 1 {
            return Err(CliError::Usage(format!(
                "C-normalization needs a single rank, store has {ranks:?}"
            )));
        }
        Some(c_shift_amount(ranks.into_iter().next().unwrap_or(1)))
    } else {
        None
    };
    Ok(partial_l_value(&ps, rep, &s, cutoff, shift.as_ref())?)
}

fn weights_check(n: usize, c0: &str, mu: &[i64]) -> CliResult<WeightsCheckOutput> {
    if mu.len() != n {
        return Err(CliError::Usage(format!(
            "--mu needs {n} entries, got {}",
            mu.len()
        )));
    }
    let coch = HTCocharacter::gspin(parse_rational(c0)?, mu.iter().map(|&x| int(x)).collect())?;
    let ht1 = ht1_witness(mu);
    let ht2 = if n == 3 {
        let w = ht2_witness(mu)?;
        Some(HtVerdict {
            pass: w.is_none(),
            witness: w.map(|(a, b)| vec![a, b]),
        })
    } else {
        None
    };
    Ok(WeightsCheckOutput {
        cocharacter: coch.to_json(),
        spin_ht_numbers: spin_ht_numbers(&coch)?
            .iter()
            .map(format_rational)
            .collect(),
        std_ht_numbers: std_ht_numbers(&coch)?.iter().map(format_rational).collect(),
        spin_regular: is_spin_regular(&coch)?,
        std_regular: is_std_regular(&coch)?,
        ht1: HtVerdict {
            pass: ht1.is_none(),
            witness: ht1.map(|x| vec![x]),
        },
        ht2,
    })
}

fn weights_hodge(n: usize, lambda: &[i64]) -> CliResult<WeightsHodgeOutput> {
    let w = WeightVector::character(GroupTag::GSp, n, lambda.to_vec())?;
    let hodge = hodge_cocharacter(&w)?;
    Ok(WeightsHodgeOutput {
        c_normalized: c_shift(&hodge, false)?.to_json(),
        spin_regular: is_spin_regular(&hodge)?,
        hodge: hodge.to_json(),
    })
}

fn classicality(
    n: usize,
    w: &[String],
    vbeta: &str,
    eta: &[i64],
    cone: Option<&AffineConeJson>,
) -> CliResult<ClassicalityOutput> {
    let bound = classicality_bound(&rationals(w)?, eta, n)?;
    let vbeta = parse_rational(vbeta)?;
    let admissible = match cone {
        Some(j) => Some(is_admissible(&AffineCone::from_json(j)?, eta, n)?),
        None => None,
    };
    Ok(ClassicalityOutput {
        classical: vbeta < bound,
        bound: format_rational(&bound),
        admissible,
    })
}

fn g2_check(x: &str, y: &str) -> CliResult<G2Output> {
    let g = G2TorusPoint::new(parse_q(x)?, parse_q(y)?)?;
    let t = embed_so7(&g);
    let r = spin_restriction_check(&g);
    Ok(G2Output {
        embedding: t.to_json(),
        spin_eigenvalues: strings(&gspin_core::conjugacy::spin_eigenvalues(&t)),
        std_eigenvalues: strings(&gspin_core::conjugacy::std_eigenvalues(&t)),
        trace_spin: r.trace_spin.to_string(),
        trace_std: r.trace_std.to_string(),
        trace_ok: r.ok,
        multiset_ok: r.multiset_ok,
        g2_class: is_g2_class(t.a())?,
        principal_type: is_principal_type(t.a()),
    })
}

fn multivector(j: &MultivectorJson) -> CliResult<Multivector<Q>> {
    Ok(Multivector::from_json(j)?)
}

fn clifford_mul(a: &MultivectorJson, b: &MultivectorJson) -> CliResult<CliffordMulOutput> {
    let a = multivector(a)?;
    let b = multivector(b)?;
    require_common_field(a.terms().values().chain(b.terms().values()))?;
    let ab = a.mul(&b)?;
    let ba = b.mul(&a)?;
    let anti = ab.add(&ba)?;
    Ok(CliffordMulOutput {
        product: ab.to_json(),
        reversed_product: ba.to_json(),
        anticommutator_scalar: anti.as_scalar().map(|s| s.to_string()),
        anticommutator: anti.to_json(),
    })
}

fn clifford_norm(x: &MultivectorJson) -> CliResult<CliffordNormOutput> {
    let x = multivector(x)?;
    let is_gspin = x.is_gspin();
    let nrm = if is_gspin {
        Some(x.spinor_norm()?)
    } else {
        None
    };
    Ok(CliffordNormOutput {
        even: x.is_even(),
        is_gspin,
        similitude: nrm.as_ref().map(|v| (v.clone() * v.clone()).to_string()),
        spinor_norm: nrm.map(|v| v.to_string()),
    })
}

fn clifford_torus(c: &str, a: &[String]) -> CliResult<CliffordTorusOutput> {
    let a: Vec<Q> = a.iter().map(|s| parse_q(s)).collect::<CliResult<_>>()?;
    let ctx = CliffordContext::shared(a.len())?;
    let x = torus_element(&ctx, &parse_q(c)?, &a)?;
    let go = x.gspin_to_go()?;
    Ok(CliffordTorusOutput {
        element: x.to_json(),
        spinor_norm: go.spinor_norm.to_string(),
        spin_diagonal: strings(&spin_matrix(&x).diagonal()),
        so_diagonal: strings(&go.so_matrix().diagonal()),
    })
}

fn random_vector(
    ctx: &std::sync::Arc<CliffordContext>,
    rng: &mut ChaCha8Rng,
) -> CliResult<Multivector<Rational>> {
    let coords: Vec<Rational> = (0..ctx.dim_v())
        .map(|_| Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=5).into()))
        .collect();
    Ok(Multivector::vector(ctx, &coords)?)
}

fn random_element(
    ctx: &std::sync::Arc<CliffordContext>,
    rng: &mut ChaCha8Rng,
) -> CliResult<Multivector<Rational>> {
    let terms: Vec<(u32, Rational)> = (0..4)
        .map(|_| {
            (
                rng.gen_range(0..ctx.dim() as u32),
                int(rng.gen_range(-5..=5)),
            )
        })
        .collect();
    Ok(Multivector::from_terms(ctx, terms)?)
}

/// `v^2 = Q(v)` on random vectors and associativity on random triples.
fn clifford_check(n: usize, samples: usize, seed: u64) -> CliResult<CliffordCheckOutput> {
    let ctx = CliffordContext::shared(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut square_law = true;
    for _ in 0..samples {
        let v = random_vector(&ctx, &mut rng)?;
        let c = v.as_vector().expect("vector");
        // Q(v) = v_n^2 + sum_{i < n} v_i v_{2n-i}
        let q = (0..ctx.dim_v()).fold(int(0), |acc, i| {
            let j = 2 * n - i;
            if i < j {
                acc + c[i].clone() * c[j].clone()
            } else if i == j {
                acc + c[i].clone() * c[i].clone()
            } else {
                acc
            }
        });
        square_law &= v.mul(&v)? == Multivector::scalar(&ctx, q);
    }
    let mut associativity = true;
    for _ in 0..samples {
        let x = random_element(&ctx, &mut rng)?;
        let y = random_element(&ctx, &mut rng)?;
        let z = random_element(&ctx, &mut rng)?;
        associativity &= x.mul(&y)?.mul(&z)? == x.mul(&y.mul(&z)?)?;
    }
    Ok(CliffordCheckOutput {
        vectors: samples,
        triples: samples,
        square_law,
        associativity,
    })
}

fn store_summary(existing: &[StoreRecord], incoming: &[StoreRecord]) -> CliResult<StoreOutput> {
    let all: Vec<StoreRecord> = existing.iter().chain(incoming).cloned().collect();
    let ps = params(&all)?;
    Ok(StoreOutput {
        records: ps.len(),
        added: incoming.len(),
        ranks: ps
            .iter()
            .map(|p| p.n())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect(),
        primes: ps
            .iter()
            .map(|p| p.q())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect(),
    })
}
