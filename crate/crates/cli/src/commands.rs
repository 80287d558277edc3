use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use monocat::bimodule::{mult_bijection_check, tensor, Bimodule};
use monocat::category::{
    category_from_monoid, compose_categories, extract_simple, groupoid, is_reduced, CategoryJson, TwoObjectCategory,
};
use monocat::checks::{self, check_free_actions, Check, CRITERIA};
use monocat::connectivity::{are_connected, group_of, groups_isomorphic, GroupInvariantProfile};
use monocat::corpus::{dump, generate, standard_corpus, CorpusEntry, CorpusSpec, Family};
use monocat::ideals::{
    canonical_minimal_pair, group_of_intersection, is_simple, is_two_sided_ideal, kernel, kernel_of,
    minimal_left_ideals, minimal_right_ideals,
};
use monocat::rees::{rees_decomposition, verify_rees_iso};
use monocat::semigroup::{parse_cayley, FiniteSemigroup};
use monocat::{Error, Monoid};

use crate::report::Status;

/// A command that could not produce its results.
#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub kind: String,
    pub message: String,
    pub detail: String,
}

impl Failure {
    pub fn input(kind: &str, message: impl Into<String>) -> Self {
        let message = message.into();
        Self { status: Status::Error, kind: kind.into(), detail: message.clone(), message }
    }

    pub fn to_value(&self) -> Value {
        json!({ "error": { "kind": self.kind, "message": self.message, "detail": self.detail } })
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let detail = format!("{e:?}");
        let kind: String = detail.chars().take_while(|c| c.is_alphanumeric()).collect();
        let status = match e {
            Error::NotAssociative(..)
            | Error::NotIdentity(_)
            | Error::NoIdentity
            | Error::NotClosed(..)
            | Error::NotAGroup(_)
            | Error::NotSimple
            | Error::DecompositionFailure(_)
            | Error::UnitLawViolation { .. }
            | Error::ActionLawViolation { .. }
            | Error::CommutationViolation(_)
            | Error::IllDefinedAction { .. }
            | Error::NotIdempotent(_)
            | Error::IsAGroup
            | Error::GSideNotGroup
            | Error::AIsGroup
            | Error::EmptyBimodule(_)
            | Error::InvalidCategory(_)
            | Error::IllDefinedComposition { .. }
            | Error::Postcondition(_) => Status::Violation,
            _ => Status::Error,
        };
        Self { status, kind, message: e.to_string(), detail }
    }
}

pub type Outcome = Result<Value, Failure>;

/// Derives the report status from a results payload: any entry of `checks`
/// that starts with `fail` is a violation.
pub fn status_of(results: &Value) -> Status {
    let failed = results
        .get("checks")
        .and_then(Value::as_object)
        .is_some_and(|m| m.values().any(|v| v.as_str().is_some_and(|s| s.starts_with("fail"))));
    if failed {
        Status::Violation
    } else {
        Status::Ok
    }
}

fn verdict(r: Check) -> Value {
    match r {
        Ok(()) => "pass".into(),
        Err(msg) => format!("fail: {msg}").into(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input("Io", format!("{}: {e}", path.display())))
}

pub fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::input("Io", format!("{}: {e}", path.display())))
}

fn load_semigroup(path: &Path) -> Result<(FiniteSemigroup, Option<usize>), Failure> {
    let file = parse_cayley(&read(path)?)?;
    Ok((file.semigroup, file.identity))
}

/// Loads a Cayley file as a monoid, adjoining an identity when the table has
/// none. The flag reports whether one was adjoined.
fn load_monoid(path: &Path) -> Result<(Monoid, bool), Failure> {
    let file = parse_cayley(&read(path)?)?;
    let adjoined = file.identity.is_none() && file.semigroup.find_identity().is_none();
    Ok((file.into_monoid()?, adjoined))
}

/// Accepts a bare category file or a report that embeds one under
/// `results.category`.
fn load_category_json(path: &Path) -> Result<CategoryJson, Failure> {
    let value: Value = serde_json::from_str(&read(path)?).map_err(|e| Failure::from(Error::from(e)))?;
    let inner = value.pointer("/results/category").cloned().unwrap_or(value);
    serde_json::from_value(inner).map_err(|e| Failure::from(Error::from(e)))
}

fn load_category(path: &Path) -> Result<TwoObjectCategory, Failure> {
    Ok(TwoObjectCategory::from_json(load_category_json(path)?)?)
}

fn sizes(c: &TwoObjectCategory) -> Value {
    let (a, l, r, g) = c.sizes();
    json!({ "A": a, "L": l, "R": r, "G": g })
}

fn category_value(c: &TwoObjectCategory) -> Value {
    serde_json::to_value(c.to_json()).expect("plain data")
}

pub fn validate(path: &Path) -> Outcome {
    let (s, declared) = load_semigroup(path)?;
    let identity = match declared {
        Some(e) => Some(Monoid::new(s.clone(), e)?.identity()),
        None => s.find_identity(),
    };
    let group = identity.map(|e| Monoid::new(s.clone(), e).expect("identity checked").is_group());
    Ok(json!({
        "size": s.len(),
        "identity": identity,
        "is_group": group.unwrap_or(false),
        "idempotents": s.idempotents().members(),
        "simple": is_simple(&s),
    }))
}

pub fn kernel_cmd(path: &Path) -> Outcome {
    let (m, adjoined) = load_monoid(path)?;
    let k = kernel(&m);
    let (l, r) = canonical_minimal_pair(&m);
    let g = group_of_intersection(&m, &l, &r)?;
    let ideals = |v: Vec<monocat::ideals::IdealSubset>| v.iter().map(|i| i.members().to_vec()).collect::<Vec<_>>();
    let (nl, nr, ng) = (l.len(), r.len(), g.order());
    let quotient = if (nl * nr) % ng == 0 { json!(nl * nr / ng) } else { Value::Null };
    let identity_check = if nl * nr == k.len() * ng {
        Ok(())
    } else {
        Err(format!("|L||R| = {} but |S||G| = {}", nl * nr, k.len() * ng))
    };
    Ok(json!({
        "identity_adjoined": adjoined,
        "monoid_size": m.len(),
        "kernel": k.members(),
        "minimal_left_ideals": ideals(minimal_left_ideals(&m)),
        "minimal_right_ideals": ideals(minimal_right_ideals(&m)),
        "L": l.members(),
        "R": r.members(),
        "G": { "elements": g.elements().members(), "identity": g.identity() },
        "cardinalities": { "S": k.len(), "L": nl, "R": nr, "G": ng, "LR/G": quotient },
        "checks": {
            "kernel": verdict(checks::check_kernel(&m)),
            "cardinality": verdict(checks::check_cardinality(&m)),
            "S*G = L*R": verdict(identity_check),
        },
    }))
}

pub fn category_build(path: &Path, out: Option<&Path>) -> Outcome {
    let (m, _) = load_monoid(path)?;
    let (construction, c) =
        if m.is_group() { ("groupoid", groupoid(&m)?) } else { ("monoid", category_from_monoid(&m)?) };
    if let Some(out) = out {
        write(out, &(c.to_json_string() + "\n"))?;
    }
    Ok(json!({
        "construction": construction,
        "sizes": sizes(&c),
        "reduced": is_reduced(&c),
        "category": category_value(&c),
        "checks": { "validity": verdict(c.check().map_err(|v| v.to_string())) },
    }))
}

pub fn category_check(path: &Path) -> Outcome {
    let json = load_category_json(path)?;
    let declared = json.sizes.clone();
    let c = TwoObjectCategory::from_json_unchecked(json);
    let mut checks = Map::new();
    let validity = c.check().map_err(|v| v.to_string());
    let valid = validity.is_ok();
    checks.insert("validity".into(), verdict(validity));
    let mut results = Map::new();
    if valid {
        let (a, l, r, g) = c.sizes();
        let agree = (declared.a, declared.l, declared.r, declared.g) == (a, l, r, g);
        checks.insert(
            "sizes".into(),
            verdict(if agree { Ok(()) } else { Err("sizes block disagrees with hom-sets".into()) }),
        );
        let g_group = c.monoid_g().map(|g| g.is_group()).unwrap_or(false);
        if g_group {
            checks.insert("free actions".into(), verdict(check_free_actions(&c)));
            let bij = mult_bijection_check(&c);
            if let Ok(rep) = &bij {
                results.insert("LR/G classes".into(), json!(rep.classes));
            }
            checks.insert("bijection".into(), verdict(bij.map(|_| ()).map_err(|e| e.to_string())));
        } else {
            checks.insert("free actions".into(), "skipped: second endomorphism monoid is not a group".into());
            checks.insert("bijection".into(), "skipped: second endomorphism monoid is not a group".into());
        }
        results.insert("sizes".into(), sizes(&c));
        results.insert("reduced".into(), json!(is_reduced(&c)));
        results.insert("g_is_group".into(), json!(g_group));
    }
    results.insert("checks".into(), Value::Object(checks));
    Ok(Value::Object(results))
}

pub fn extract(path: &Path, monoid: Option<&Path>) -> Outcome {
    let c = load_category(path)?;
    let a = c.monoid_a()?;
    let s = extract_simple(&c)?;
    let restricted = a.restrict(&s.subset)?;
    let mut checks = Map::new();
    checks.insert(
        "two-sided ideal".into(),
        verdict(if is_two_sided_ideal(&a, &s.subset) { Ok(()) } else { Err("LR is not an ideal of A".into()) }),
    );
    checks
        .insert("simple".into(), verdict(if is_simple(&restricted) { Ok(()) } else { Err("LR is not simple".into()) }));
    if let Some(p) = monoid {
        let (m, _) = load_monoid(p)?;
        let same = m.semigroup() == a.semigroup();
        checks.insert(
            "first endomorphism monoid".into(),
            verdict(if same { Ok(()) } else { Err("A differs from the given monoid".into()) }),
        );
        let k = kernel(&m);
        checks.insert(
            "round trip".into(),
            verdict(if same && k.members() == s.members() {
                Ok(())
            } else {
                Err(format!("LR = {:?} but the kernel is {:?}", s.members(), k.members()))
            }),
        );
    }
    Ok(json!({
        "S": s.members(),
        "size": s.len(),
        "A_size": a.len(),
        "checks": checks,
    }))
}

pub fn rees(path: &Path) -> Outcome {
    let (s, _) = load_semigroup(path)?;
    let (source, target) = if is_simple(&s) {
        ("input", s.clone())
    } else {
        let k = kernel_of(&s);
        ("kernel", s.restrict(&k.subset)?)
    };
    let d = rees_decomposition(&target)?;
    let iso = verify_rees_iso(&target, &d.rees, &d.map).map_err(|e| e.to_string());
    Ok(json!({
        "decomposed": source,
        "size": target.len(),
        "I": d.rees.i_count(),
        "Lambda": d.rees.lambda_count(),
        "group_order": d.rees.group().len(),
        "rees": d.rees.to_json(),
        "map": d.map,
        "x_reps": d.x_reps,
        "y_reps": d.y_reps,
        "checks": { "isomorphism": verdict(iso) },
    }))
}

pub fn tensor_cmd(x: &Path, y: &Path) -> Outcome {
    let x = Bimodule::from_json_str(&read(x)?)?;
    let y = Bimodule::from_json_str(&read(y)?)?;
    let t = tensor(&x, &y)?;
    let classes: Vec<Vec<[usize; 2]>> =
        t.set.classes().into_iter().map(|c| c.into_iter().map(|(a, b)| [a, b]).collect()).collect();
    Ok(json!({
        "size": t.set.len(),
        "class_sizes": t.set.class_sizes(),
        "classes": classes,
        "module": t.module.to_json(),
    }))
}

pub fn compose(c1: &Path, c2: &Path) -> Outcome {
    let (c1, c2) = (load_category(c1)?, load_category(c2)?);
    let c = compose_categories(&c1, &c2)?;
    Ok(json!({
        "sizes": sizes(&c),
        "category": category_value(&c),
        "checks": { "validity": verdict(c.check().map_err(|v| v.to_string())) },
    }))
}

pub fn connect(a: &Path, b: &Path, witness_out: Option<&Path>) -> Outcome {
    let (ma, _) = load_monoid(a)?;
    let (mb, _) = load_monoid(b)?;
    let (ga, gb) = (group_of(&ma)?, group_of(&mb)?);
    let conn = are_connected(&ma, &mb)?;
    let mut results = json!({
        "connected": conn.connected,
        "groups": {
            "a": GroupInvariantProfile::of(ga.table()),
            "b": GroupInvariantProfile::of(gb.table()),
        },
        "group_iso": conn.group_iso,
        "checks": { "connectivity": verdict(checks::check_connectivity(&ma, &mb).map(|_| ())) },
    });
    if let Some(w) = &conn.witness {
        results["witness"] = json!({ "sizes": sizes(w), "category": category_value(w) });
        if let Some(out) = witness_out {
            write(out, &(w.to_json_string() + "\n"))?;
        }
    }
    Ok(results)
}

pub fn corpus(spec: &str, seed: u64, out: &Path) -> Outcome {
    let entries = if spec == "standard" {
        standard_corpus(seed)?
    } else {
        let family = Family::from_str(spec)?;
        generate(&CorpusSpec::with_seed(family, seed))?
            .into_iter()
            .enumerate()
            .map(|(i, monoid)| CorpusEntry { name: format!("{}-{i:03}", family.slug()), family, monoid })
            .collect()
    };
    dump(&entries, out)?;
    let files: Vec<String> = entries.iter().map(|e| format!("{}.cayley", e.name)).collect();
    Ok(json!({ "spec": spec, "seed": seed, "count": entries.len(), "files": files }))
}

fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>, Failure> {
    let listing = std::fs::read_dir(dir).map_err(|e| Failure::input("Io", format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = listing
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "cayley"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(Failure::input("EmptyCorpus", format!("{}: no .cayley files", dir.display())));
    }
    Ok(files)
}

/// Runs every criterion over a corpus directory. Entries are processed in
/// parallel and reported in file-name order.
pub fn suite(dir: &Path) -> Outcome {
    let files = corpus_files(dir)?;
    let names: Vec<String> =
        files.iter().map(|p| p.file_stem().unwrap_or_default().to_string_lossy().into_owned()).collect();
    let monoids = files.iter().map(|p| load_monoid(p).map(|(m, _)| m)).collect::<Result<Vec<_>, _>>()?;
    let reports: Vec<_> = monoids.par_iter().map(checks::monoid_report).collect();

    let mut failures: Vec<Vec<String>> = vec![Vec::new(); CRITERIA.len()];
    for (name, rep) in names.iter().zip(&reports) {
        for (i, r) in rep.results.iter().enumerate() {
            if let Some(msg) = r {
                failures[i].push(format!("{name}: {msg}"));
            }
        }
    }

    let groups: Vec<_> = monoids.iter().map(group_of).collect::<Result<_, _>>()?;
    let n = monoids.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let verdicts: Vec<Result<bool, String>> =
        pairs.par_iter().map(|&(i, j)| checks::check_connectivity(&monoids[i], &monoids[j])).collect();
    let mut connected = 0;
    for (&(i, j), v) in pairs.iter().zip(&verdicts) {
        match v {
            Ok(c) => connected += usize::from(*c),
            Err(msg) => failures[9].push(format!("{} ~ {}: {msg}", names[i], names[j])),
        }
    }

    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        let mut home = None;
        for (k, class) in classes.iter().enumerate() {
            if groups_isomorphic(&groups[class[0]], &groups[i])?.is_some() {
                home = Some(k);
                break;
            }
        }
        match home {
            Some(k) => classes[k].push(i),
            None => classes.push(vec![i]),
        }
    }
    let triples: Vec<(usize, usize, usize)> = classes
        .iter()
        .flat_map(|class| {
            let len = class.len();
            (0..len.min(6)).map(move |s| (class[s], class[(s * 7 + 1) % len], class[(s * 13 + 2) % len]))
        })
        .collect();
    let transitivity: Vec<Check> = triples
        .par_iter()
        .map(|&(i, j, k)| checks::check_transitivity(&monoids[i], &monoids[j], &monoids[k]))
        .collect();
    for (&(i, j, k), r) in triples.iter().zip(&transitivity) {
        if let Err(msg) = r {
            failures[9].push(format!("{} ~ {} ~ {}: {msg}", names[i], names[j], names[k]));
        }
    }

    let criteria: Vec<Value> = CRITERIA
        .iter()
        .zip(&failures)
        .enumerate()
        .map(|(i, (name, fails))| {
            json!({
                "criterion": i + 1,
                "name": name,
                "result": if fails.is_empty() { "pass" } else { "fail" },
                "failures": fails.len(),
            })
        })
        .collect();
    let checks: Map<String, Value> = CRITERIA
        .iter()
        .zip(&failures)
        .enumerate()
        .map(|(i, (name, fails))| {
            let v = match fails.first() {
                None => "pass".into(),
                Some(first) => format!("fail: {first}"),
            };
            (format!("{:02} {name}", i + 1), Value::from(v))
        })
        .collect();
    let bound_equality: Vec<&String> =
        names.iter().zip(&reports).filter(|(_, r)| r.bound_equality).map(|(n, _)| n).collect();
    Ok(json!({
        "entries": n,
        "pairs": pairs.len(),
        "connected_pairs": connected,
        "group_classes": classes.len(),
        "triples": triples.len(),
        "bound_equality": bound_equality,
        "criteria": criteria,
        "checks": checks,
        "failures": failures.iter().flatten().collect::<Vec<_>>(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_are_classified() {
        assert_eq!(Failure::from(Error::NotAssociative(0, 1, 2)).status, Status::Violation);
        assert_eq!(Failure::from(Error::NotAssociative(0, 1, 2)).kind, "NotAssociative");
        assert_eq!(Failure::from(Error::Parse { line: 3, msg: "x".into() }).status, Status::Error);
        assert_eq!(Failure::from(Error::MiddleMonoidMismatch).status, Status::Error);
    }

    #[test]
    fn status_reads_checks() {
        assert_eq!(status_of(&json!({"checks": {"a": "pass", "b": "skipped: x"}})), Status::Ok);
        assert_eq!(status_of(&json!({"checks": {"a": "fail: boom"}})), Status::Violation);
        assert_eq!(status_of(&json!({"size": 3})), Status::Ok);
    }
}
