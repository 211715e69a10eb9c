//! Reading complexes, ideals and covers from files and arguments.

use std::fs;
use std::io::Read;
use std::path::Path;

use covalg::complex::{ComplexFile, CoverPoint};
use covalg::monomial::IdealFile;
use covalg::{ExponentVector, MonomialIdeal, WeightedComplex};
use serde::de::DeserializeOwned;

use crate::Failure;

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

pub fn complex(path: &Path) -> Result<WeightedComplex, Failure> {
    let file: ComplexFile = read_json(path)?;
    Ok(file.into_complex()?)
}

pub fn ideal(path: &Path) -> Result<MonomialIdeal, Failure> {
    let file: IdealFile = read_json(path)?;
    Ok(file.into_ideal()?)
}

/// Parses `"a1,…,an;k"`.
pub fn cover(spec: &str, n: usize) -> Result<CoverPoint, Failure> {
    let bad = || Failure::Input(format!("cover {spec:?} is not of the form \"a1,...,an;k\""));
    let (a, k) = spec.split_once(';').ok_or_else(bad)?;
    let a: Vec<u64> = a
        .split(',')
        .map(|x| x.trim().parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let k: u64 = k.trim().parse().map_err(|_| bad())?;
    if a.len() != n {
        return Err(Failure::Input(format!(
            "cover has {} coordinates, complex has {n} vertices",
            a.len()
        )));
    }
    Ok(CoverPoint::new(ExponentVector::new(a), k))
}
