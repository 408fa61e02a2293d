use crate::format::{
    assoc_file, load_action_data, load_algebra, load_assoc, load_extension_data, load_matrix, matrix_strings,
    serialize_algebra, to_text, Loaded, ParseError,
};
use crate::report::{render_subspace, render_vector, subspace_json, vector_json, CheckEntry, Report};
use clap::{Args, Parser, Subcommand};
use homlie::analyze::{
    center, centroid_matrices, decompose_with_subspaces, fitting_decomposition, radical_involutive,
    recognize_double_extension, simplicity_verdict, trace_form, AnalyzeError, SimplicityVerdict,
};
use homlie::build::{
    derived_hom_algebra, double_extension_1d, involutive_double_extension, involutive_double_extension_1d,
    omega_extension, quadratic_derived, quadratic_yau_twist, tensor_current, tstar_extension, untwist_involutive,
    untwist_regular, yau_twist, BuildError,
};
use homlie::catalog::{basis_names, emit, CatalogError, Fixture, FixtureId, FIXTURE_NAMES};
use homlie::exactlin::{format_scalar, int, parse_scalar, Matrix, Scalar};
use homlie::homalg::{
    check_hom_lie, check_quadratic, multiplicativity_witness, BilinearForm, HomAlgError, HomAlgebra, JacobiWitness,
    QuadraticHomAlgebra,
};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Parser, Debug)]
#[command(name = "homlie", version, about = "Exact computations with quadratic Hom-Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify the axioms of an algebra file.
    Check(CheckArgs),
    /// Build a new algebra from existing ones.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Compute structural invariants.
    Analyze {
        #[command(subcommand)]
        what: Analyze,
    },
    /// Built-in example algebras.
    Catalog {
        #[command(subcommand)]
        what: CatalogCmd,
    },
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    pub file: PathBuf,
    /// Also check that the form is an invariant, twist-symmetric scalar product.
    #[arg(long)]
    pub quadratic: bool,
    #[arg(long)]
    pub multiplicative: bool,
    #[arg(long)]
    pub involutive: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct OutArgs {
    /// Destination file; the result is printed to stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// Compose the bracket of a Lie algebra with an endomorphism.
    Twist {
        file: PathBuf,
        /// Matrix file with the endomorphism.
        map: PathBuf,
        #[command(flatten)]
        out: OutArgs,
    },
    /// The n-th derived Hom-Lie algebra.
    Derived {
        n: usize,
        file: PathBuf,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Cotangent extension of a Lie algebra with its hyperbolic form.
    Tstar {
        file: PathBuf,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Cotangent extension twisted by an automorphism and its transpose.
    OmegaExt {
        file: PathBuf,
        /// Automorphism matrix file; defaults to the twist in FILE.
        #[arg(long)]
        map: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// One-dimensional double extension of a quadratic algebra.
    DoubleExt {
        file: PathBuf,
        data: PathBuf,
        /// Require an involutive output.
        #[arg(long)]
        involutive: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Involutive double extension by an acting algebra.
    InvDoubleExt {
        file: PathBuf,
        acting: PathBuf,
        data: PathBuf,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Current algebra over a commutative associative algebra.
    TensorCurrent {
        file: PathBuf,
        assoc: PathBuf,
        /// Automorphism of the associative algebra; defaults to its twist.
        #[arg(long)]
        theta: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Recover the underlying Lie algebra.
    Untwist {
        file: PathBuf,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args, Debug)]
pub struct Input {
    pub file: PathBuf,
    #[arg(long)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Analyze {
    /// Elements bracketing to zero with everything.
    Center(Input),
    /// Linear maps commuting with every left multiplication.
    Centroid(Input),
    /// Split along the twisting map into nilpotent and invertible parts.
    Fitting(Input),
    /// Largest solvable ideal.
    Radical(Input),
    /// Orthogonal splitting into indecomposable ideals.
    Decompose(Input),
    /// Search for a proper nonzero ideal.
    Simple {
        #[command(flatten)]
        input: Input,
        /// Number of random seed vectors.
        #[arg(long, default_value_t = 16)]
        budget: usize,
    },
    /// Trace form of the adjoint maps.
    TraceForm(Input),
    /// Exhibit the algebra as a one-dimensional double extension.
    RecognizeDext(Input),
}

#[derive(Subcommand, Debug)]
pub enum CatalogCmd {
    /// Print the available names.
    List,
    /// Write a catalog algebra as a file.
    Emit {
        name: String,
        /// Rational parameters; put negative ones after `--`.
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Errors that end a command with exit code 2.
#[derive(Debug, Error)]
pub enum InputError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
}

/// What a command produced: a report, plus text for stdout when a file was
/// requested without `--out`.
pub struct Outcome {
    pub report: Report,
    pub json: bool,
    pub stdout_file: Option<String>,
}

impl Outcome {
    fn report(report: Report, json: bool) -> Self {
        Outcome {
            report,
            json,
            stdout_file: None,
        }
    }
}

pub fn execute(cli: Cli) -> Result<Outcome, InputError> {
    match cli.command {
        Command::Check(a) => check(a),
        Command::Construct { what } => construct(what),
        Command::Analyze { what } => analyze(what),
        Command::Catalog { what } => catalog(what),
    }
}

fn jacobi_entry(name: &str, w: &JacobiWitness, names: &[String]) -> CheckEntry {
    let (i, j, k) = w.triple;
    CheckEntry::fail(name, Some(vec![i, j, k]), Some(format!("residual {}", render_vector(&w.residual, names))))
}

fn check(a: CheckArgs) -> Result<Outcome, InputError> {
    let l = load_algebra(&a.file)?;
    let g = &l.algebra;
    let mut r = Report::new("check");
    let hl = check_hom_lie(g);
    r.push(match hl.skew_witness {
        None => CheckEntry::pass("skew"),
        Some((i, j)) => CheckEntry::fail("skew", Some(vec![i, j]), None),
    });
    r.push(match &hl.jacobi_witness {
        None => CheckEntry::pass("hom-jacobi"),
        Some(w) => jacobi_entry("hom-jacobi", w, &l.names),
    });
    if a.multiplicative {
        r.push(match multiplicativity_witness(g) {
            None => CheckEntry::pass("multiplicative"),
            Some((i, j)) => CheckEntry::fail("multiplicative", Some(vec![i, j]), None),
        });
    }
    if a.involutive {
        r.push(involution_entry(g.alpha()));
    }
    if a.quadratic {
        let gram = l
            .gram
            .as_ref()
            .ok_or_else(|| InputError::Usage("--quadratic needs a form in the file".into()))?;
        quadratic_entries(g, gram, &mut r)?;
    }
    Ok(Outcome::report(r, a.json))
}

fn involution_entry(alpha: &Matrix) -> CheckEntry {
    let sq = alpha.pow(2);
    let n = sq.rows();
    for c in 0..n {
        for row in 0..n {
            let want = if row == c { 1 } else { 0 };
            if sq[(row, c)] != int(want) {
                return CheckEntry::fail("involutive", Some(vec![row, c]), None);
            }
        }
    }
    CheckEntry::pass("involutive")
}

fn quadratic_entries(g: &HomAlgebra, gram: &Matrix, r: &mut Report) -> Result<(), InputError> {
    let n = gram.rows();
    for i in 0..n {
        for j in i + 1..n {
            if gram[(i, j)] != gram[(j, i)] {
                r.push(CheckEntry::fail("form-symmetric", Some(vec![i, j]), None));
                return Ok(());
            }
        }
    }
    r.push(CheckEntry::pass("form-symmetric"));
    let b = BilinearForm::new(gram.clone()).map_err(ParseError::from)?;
    let q = check_quadratic(g, &b).map_err(ParseError::from)?;
    r.push(if q.nondegenerate {
        CheckEntry::pass("form-nondegenerate")
    } else {
        CheckEntry::fail("form-nondegenerate", None, None)
    });
    r.push(match q.invariance_witness {
        None => CheckEntry::pass("form-invariant"),
        Some((i, j, k)) => CheckEntry::fail("form-invariant", Some(vec![i, j, k]), None),
    });
    r.push(match q.alpha_symmetry_witness {
        None => CheckEntry::pass("alpha-symmetric"),
        Some((i, j)) => CheckEntry::fail("alpha-symmetric", Some(vec![i, j]), None),
    });
    Ok(())
}

/// A construction failure as a failed check, or an input error.
fn build_failure(e: BuildError, names: &[String]) -> Result<CheckEntry, InputError> {
    let plain = |n: &str| CheckEntry::fail(n, None, None);
    let pair = |n: &str, (i, j): (usize, usize)| CheckEntry::fail(n, Some(vec![i, j]), None);
    let vector = |n: &str, v: &[Scalar]| {
        CheckEntry::fail(n, None, Some(format!("vector {}", render_vector(v, names))))
    };
    Ok(match e {
        BuildError::NotLie(w) => jacobi_entry("jacobi", &w, names),
        BuildError::NotHomLie(w) => jacobi_entry("hom-jacobi", &w, names),
        BuildError::UntwistNotLie(w) => jacobi_entry("untwisted-jacobi", &w, names),
        BuildError::NotEndomorphism(p) => pair("endomorphism", p),
        BuildError::NotMultiplicative(p) => pair("multiplicative", p),
        BuildError::NotInCentroid(p) => pair("centroid", p),
        BuildError::NotRepresentation(p) => pair("representation", p),
        BuildError::NotAutomorphism => plain("automorphism"),
        BuildError::NotSymmetric => plain("symmetric-map"),
        BuildError::NotRegular => plain("regular"),
        BuildError::NotInvolutive => plain("involutive"),
        BuildError::NotCommutativeAssociative => plain("commutative-associative"),
        BuildError::NotQuadratic => plain("quadratic"),
        BuildError::CenterConditionFailed(v) => vector("center-condition", &v),
        BuildError::AnnihilatorConditionFailed(v) => {
            CheckEntry::fail("annihilator-condition", None, Some(format!("vector {}", render_scalars(&v))))
        }
        BuildError::ConditionFailed { condition, witness } => CheckEntry::fail(condition.name(), Some(witness), None),
        BuildError::InvolutiveDataInvalid(s) => CheckEntry::fail("involutive-data", None, Some(s)),
        BuildError::OutputCheckFailed(s) => CheckEntry::fail("output-check", None, Some(s)),
        BuildError::HomAlg(e) => return Err(ParseError::from(e).into()),
    })
}

fn render_scalars(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(format_scalar).collect();
    format!("[{}]", parts.join(", "))
}

fn write_file(path: &Path, text: &str) -> Result<(), InputError> {
    std::fs::write(path, text).map_err(|source| InputError::Write {
        path: path.display().to_string(),
        source,
    })
}

/// Writes or returns a produced file.
fn deliver(mut r: Report, text: String, out: OutArgs) -> Result<Outcome, InputError> {
    match out.out {
        Some(p) => {
            write_file(&p, &text)?;
            r.outputs.push(p.display().to_string());
            Ok(Outcome::report(r, out.json))
        }
        None => Ok(Outcome {
            report: r,
            json: out.json,
            stdout_file: Some(text),
        }),
    }
}

fn construct(c: Construct) -> Result<Outcome, InputError> {
    let (name, result, out) = match c {
        Construct::Twist { file, map, out } => {
            let l = load_algebra(&file)?;
            let m = load_matrix(&map)?;
            let res = match l.form()? {
                Some(b) => {
                    let q = QuadraticHomAlgebra::new(l.algebra.clone(), b)
                        .map_err(ParseError::from)?;
                    quadratic_yau_twist(&q, &m).map(|q| serialize_algebra(q.algebra(), Some(q.form()), Some(&l.names)))
                }
                None => yau_twist(&l.algebra, &m).map(|g| serialize_algebra(&g, None, Some(&l.names))),
            };
            ("twist", res.map_err(|e| (e, l.names)), out)
        }
        Construct::Derived { n, file, out } => {
            let l = load_algebra(&file)?;
            let res = match l.form()? {
                Some(_) if l.algebra.alpha().is_invertible() => {
                    let q = l.quadratic()?;
                    quadratic_derived(&q, n).map(|q| serialize_algebra(q.algebra(), Some(q.form()), Some(&l.names)))
                }
                _ => derived_hom_algebra(&l.algebra, n).map(|g| serialize_algebra(&g, None, Some(&l.names))),
            };
            ("derived", res.map_err(|e| (e, l.names)), out)
        }
        Construct::Tstar { file, out } => {
            let l = load_algebra(&file)?;
            let res = tstar_extension(&l.algebra).map(|q| serialize_algebra(q.algebra(), Some(q.form()), None));
            ("tstar", res.map_err(|e| (e, l.names)), out)
        }
        Construct::OmegaExt { file, map, out } => {
            let l = load_algebra(&file)?;
            let a = match map {
                Some(p) => load_matrix(&p)?,
                None => l.algebra.alpha().clone(),
            };
            let res = omega_extension(&l.algebra, &a).map(|q| serialize_algebra(q.algebra(), Some(q.form()), None));
            ("omega-ext", res.map_err(|e| (e, l.names)), out)
        }
        Construct::DoubleExt {
            file,
            data,
            involutive,
            out,
        } => {
            let l = load_algebra(&file)?;
            let q = l.quadratic()?;
            let d = load_extension_data(&data, q.dim())?;
            let res = if involutive {
                involutive_double_extension_1d(&q, &d)
            } else {
                double_extension_1d(&q, &d)
            };
            let names = extension_names(&l.names);
            let res = res.map(|q| serialize_algebra(q.algebra(), Some(q.form()), Some(&names)));
            ("double-ext", res.map_err(|e| (e, l.names)), out)
        }
        Construct::InvDoubleExt { file, acting, data, out } => {
            let l = load_algebra(&file)?;
            let q = l.quadratic()?;
            let a = load_algebra(&acting)?;
            let d = load_action_data(&data, a.algebra.dim(), q.dim())?;
            let res = involutive_double_extension(&q, &a.algebra, &d)
                .map(|q| serialize_algebra(q.algebra(), Some(q.form()), None));
            ("inv-double-ext", res.map_err(|e| (e, l.names)), out)
        }
        Construct::TensorCurrent { file, assoc, theta, out } => {
            let l = load_algebra(&file)?;
            let a = load_assoc(&assoc)?;
            let t = match theta {
                Some(p) => load_matrix(&p)?,
                None => a.alpha().clone(),
            };
            let res = tensor_current(&l.algebra, &a, &t).and_then(|(lie, lifted)| {
                let q = omega_extension(&lie, &lifted)?;
                Ok(serialize_algebra(q.algebra(), Some(q.form()), None))
            });
            ("tensor-current", res.map_err(|e| (e, l.names)), out)
        }
        Construct::Untwist { file, out } => {
            let l = load_algebra(&file)?;
            let form = l.form()?;
            let res = if l.algebra.alpha().pow(2).is_identity() {
                untwist_involutive(&l.algebra, form.as_ref())
                    .map(|(g, b)| serialize_algebra(&g, b.as_ref(), Some(&l.names)))
            } else {
                untwist_regular(&l.algebra).map(|g| serialize_algebra(&g, None, Some(&l.names)))
            };
            ("untwist", res.map_err(|e| (e, l.names)), out)
        }
    };
    let mut r = Report::new(&format!("construct {name}"));
    match result {
        Ok(text) => deliver(r, text, out),
        Err((e, names)) => {
            r.push(build_failure(e, &names)?);
            Ok(Outcome::report(r, out.json))
        }
    }
}

/// Names for the `(b, V, e)` basis of a one-dimensional extension.
fn extension_names(base: &[String]) -> Vec<String> {
    let mut names = Vec::with_capacity(base.len() + 2);
    let fresh = |stem: &str| {
        let mut s = stem.to_string();
        while base.contains(&s) {
            s.push('\'');
        }
        s
    };
    names.push(fresh("b"));
    names.extend(base.iter().cloned());
    names.push(fresh("e"));
    names
}

fn matrix_lines(m: &Matrix) -> Vec<String> {
    m.to_rows().iter().map(|r| format!("  {}", render_scalars(r))).collect()
}

fn analysis_failure(e: AnalyzeError, r: &mut Report, names: &[String]) -> Result<(), InputError> {
    let entry = match e {
        AnalyzeError::NotMultiplicative((i, j)) => CheckEntry::fail("multiplicative", Some(vec![i, j]), None),
        AnalyzeError::NotInvolutive => CheckEntry::fail("involutive", None, None),
        AnalyzeError::NotAnIdeal => CheckEntry::fail("ideal", None, None),
        AnalyzeError::NotSubalgebra => CheckEntry::fail("subalgebra", None, None),
        AnalyzeError::CenterTrivial => CheckEntry::fail("nontrivial-center", None, None),
        AnalyzeError::NoRationalCentralEigenvector => CheckEntry::fail("central-eigenvector", None, None),
        AnalyzeError::NoIsotropicCentralVector => CheckEntry::fail("isotropic-central-vector", None, None),
        AnalyzeError::ReconstructionFailed(s) => CheckEntry::fail("reconstruction", None, Some(s)),
        AnalyzeError::PreconditionFailed(s) => CheckEntry::fail("precondition", None, Some(s)),
        AnalyzeError::VerificationFailed(s) => CheckEntry::fail("verification", None, Some(s)),
        AnalyzeError::Build(b) => build_failure(b, names)?,
        AnalyzeError::HomAlg(e) => return Err(ParseError::from(e).into()),
        AnalyzeError::LinAlg(e) => return Err(ParseError::from(HomAlgError::from(e)).into()),
    };
    r.push(entry);
    Ok(())
}

fn analyze(a: Analyze) -> Result<Outcome, InputError> {
    let (name, input) = match &a {
        Analyze::Center(i) => ("center", i),
        Analyze::Centroid(i) => ("centroid", i),
        Analyze::Fitting(i) => ("fitting", i),
        Analyze::Radical(i) => ("radical", i),
        Analyze::Decompose(i) => ("decompose", i),
        Analyze::Simple { input, .. } => ("simple", input),
        Analyze::TraceForm(i) => ("trace-form", i),
        Analyze::RecognizeDext(i) => ("recognize-dext", i),
    };
    let l = load_algebra(&input.file)?;
    let q = match a {
        Analyze::Fitting(_) | Analyze::Decompose(_) | Analyze::RecognizeDext(_) => Some(l.quadratic()?),
        _ => None,
    };
    let mut r = Report::new(&format!("analyze {name}"));
    if let Err(e) = run_analysis(&a, &l, q.as_ref(), &mut r) {
        analysis_failure(e, &mut r, &l.names)?;
    }
    Ok(Outcome::report(r, input.json))
}

/// `q` is present for the analyses that need a quadratic structure.
fn run_analysis(a: &Analyze, l: &Loaded, q: Option<&QuadraticHomAlgebra>, r: &mut Report) -> Result<(), AnalyzeError> {
    let g = &l.algebra;
    let names = &l.names;
    let quadratic = || q.ok_or_else(|| AnalyzeError::PreconditionFailed("needs a quadratic structure".into()));
    match a {
        Analyze::Center(_) => {
            let z = center(g);
            r.line(format!("center (dim {}): {}", z.dim(), render_subspace(&z, names)));
            r.result = Some(json!({ "center": subspace_json(&z) }));
        }
        Analyze::Centroid(_) => {
            let ms = centroid_matrices(g);
            r.line(format!("centroid (dim {})", ms.len()));
            for (k, m) in ms.iter().enumerate() {
                r.line(format!("basis element {}:", k + 1));
                r.lines.extend(matrix_lines(m));
            }
            let js: Vec<Value> = ms.iter().map(|m| json!(matrix_strings(m))).collect();
            r.result = Some(json!({ "centroid": js }));
        }
        Analyze::Fitting(_) => {
            let s = fitting_decomposition(quadratic()?)?;
            r.line(format!("nilpotent part (dim {}): {}", s.i_part.dim(), render_subspace(&s.i_part, names)));
            r.line(format!("invertible part (dim {}): {}", s.j_part.dim(), render_subspace(&s.j_part, names)));
            r.line(format!("stable power: {}", s.n));
            r.result = Some(json!({
                "nilpotent_part": subspace_json(&s.i_part),
                "invertible_part": subspace_json(&s.j_part),
                "stable_power": s.n,
            }));
        }
        Analyze::Radical(_) => {
            let rad = radical_involutive(g)?;
            r.line(format!("radical (dim {}): {}", rad.dim(), render_subspace(&rad, names)));
            r.result = Some(json!({ "radical": subspace_json(&rad) }));
        }
        Analyze::Decompose(_) => {
            let parts = decompose_with_subspaces(quadratic()?);
            let mut js = Vec::new();
            for (k, (s, _)) in parts.iter().enumerate() {
                r.line(format!("component {} (dim {}): {}", k + 1, s.dim(), render_subspace(s, names)));
                js.push(subspace_json(s));
            }
            r.result = Some(json!({ "components": js }));
        }
        Analyze::Simple { budget, .. } => {
            let (text, verdict) = match simplicity_verdict(g, *budget) {
                SimplicityVerdict::Simple => ("simple".to_string(), json!({ "verdict": "simple" })),
                SimplicityVerdict::NotSimple(w) => (
                    format!("not simple: ideal (dim {}) {}", w.dim(), render_subspace(&w, names)),
                    json!({ "verdict": "not_simple", "ideal": subspace_json(&w) }),
                ),
                SimplicityVerdict::Unknown => ("unknown".to_string(), json!({ "verdict": "unknown" })),
            };
            r.line(text);
            r.result = Some(verdict);
        }
        Analyze::TraceForm(_) => {
            let b = trace_form(g);
            r.line("trace form Gram matrix:");
            r.lines.extend(matrix_lines(b.gram()));
            let ok = check_quadratic(g, &b)?.passed();
            r.line(format!("quadratic with this form: {}", if ok { "yes" } else { "no" }));
            r.result = Some(json!({ "gram": matrix_strings(b.gram()), "quadratic": ok }));
        }
        Analyze::RecognizeDext(_) => {
            let w = recognize_double_extension(quadratic()?)?;
            r.line(format!("e = {}", render_vector(&w.e_vec, names)));
            r.line(format!("b = {}", render_vector(&w.b_vec, names)));
            r.line(format!("base (dim {}): {}", w.v_basis.dim(), render_subspace(&w.v_basis, names)));
            r.line(format!("eigenvalue: {}", format_scalar(&w.data.eigenvalue)));
            r.line(format!("e-component: {}", format_scalar(&w.data.e_component)));
            r.line(format!("offset: {}", render_scalars(&w.data.offset)));
            r.line("derivation:");
            r.lines.extend(matrix_lines(&w.data.derivation));
            r.result = Some(json!({
                "e": vector_json(&w.e_vec),
                "b": vector_json(&w.b_vec),
                "base": subspace_json(&w.v_basis),
                "eigenvalue": format_scalar(&w.data.eigenvalue),
                "e_component": format_scalar(&w.data.e_component),
                "offset": vector_json(&w.data.offset),
                "derivation": matrix_strings(&w.data.derivation),
            }));
        }
    }
    Ok(())
}

fn catalog(c: CatalogCmd) -> Result<Outcome, InputError> {
    match c {
        CatalogCmd::List => {
            let mut r = Report::new("catalog list");
            for n in FIXTURE_NAMES {
                r.line(*n);
            }
            r.result = Some(json!({ "fixtures": FIXTURE_NAMES }));
            Ok(Outcome::report(r, false))
        }
        CatalogCmd::Emit { name, params, out } => {
            let params = params
                .iter()
                .map(|p| parse_scalar(p).map_err(|_| InputError::Usage(format!("bad rational parameter {p:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let id = FixtureId::new(&name, params);
            let fixture = emit(&id).map_err(|e| match e {
                CatalogError::UnknownFixture(_) | CatalogError::BadParams(_) => InputError::Usage(e.to_string()),
                other => InputError::Usage(format!("fixture failed to build: {other}")),
            })?;
            let names = basis_names(&id, fixture.dim());
            let text = match &fixture {
                Fixture::Hom(g) => serialize_algebra(g, None, Some(&names)),
                Fixture::Quadratic(q) => serialize_algebra(q.algebra(), Some(q.form()), Some(&names)),
                Fixture::Assoc(a) => to_text(&assoc_file(a)),
            };
            deliver(Report::new("catalog emit"), text, OutArgs { out, json: false })
        }
    }
}
