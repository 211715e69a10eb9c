//! Worked examples re-run end to end.

use covalg::algebra::{
    compare_powers, find_veronese_d, generators, is_gorenstein, is_standard_graded, veronese, DegreeBound,
    PowerComparison, VeroneseSearch,
};
use covalg::complex::skeleton_generators;
use covalg::graphalg::{counterexample_family, decompose, Decomposition, DEFAULT_BUDGET};
use covalg::{ExponentVector, MonomialIdeal, WeightedComplex};
use serde_json::json;

type Check = fn() -> Result<(), String>;

fn complex(n: usize, facets: &[&[usize]], w: Option<&[u64]>) -> Result<WeightedComplex, String> {
    let f: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
    WeightedComplex::validate(n, &f, w).map_err(|e| e.to_string())
}

fn triangle() -> Result<WeightedComplex, String> {
    complex(3, &[&[1, 2], &[2, 3], &[1, 3]], None)
}

fn rendered(c: &WeightedComplex) -> Result<Vec<String>, String> {
    let p = generators(c, None).map_err(|e| e.to_string())?;
    Ok(p.generators().iter().map(|g| g.to_string()).collect())
}

fn expect<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("got {got:?}, expected {want:?}"))
    }
}

fn triangle_generators() -> Result<(), String> {
    expect(
        rendered(&triangle()?)?,
        ["x1*x2*t", "x1*x3*t", "x2*x3*t", "x1*x2*x3*t^2"].map(String::from).to_vec(),
    )
}

fn square_generators() -> Result<(), String> {
    let sq = complex(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]], None)?;
    expect(rendered(&sq)?, ["x1*x3*t", "x2*x4*t"].map(String::from).to_vec())
}

fn skeletons() -> Result<(), String> {
    for n in 2..=5 {
        for j in 0..=n - 2 {
            let c = WeightedComplex::skeleton(n, j).map_err(|e| e.to_string())?;
            let got = generators(&c, None).map_err(|e| e.to_string())?;
            let want = skeleton_generators(n, j).map_err(|e| e.to_string())?;
            if got.generators() != want.generators() {
                return Err(format!("skeleton({n},{j}) differs from the closed form"));
            }
        }
    }
    Ok(())
}

fn family_2_2() -> Result<(), String> {
    let f = counterexample_family(2, 2).map_err(|e| e.to_string())?;
    let p = generators(&f.complex, None).map_err(|e| e.to_string())?;
    expect(p.generators().len() + f.complex.n(), 52)?;
    let top: Vec<_> = p.generators().iter().filter(|g| g.k == 7).collect();
    expect(top, vec![&f.cover])?;
    expect(p.max_degree().map_err(|e| e.to_string())?, 7)
}

fn family_4_2() -> Result<(), String> {
    let f = counterexample_family(4, 2).map_err(|e| e.to_string())?;
    expect(f.cover.k, 11)?;
    let d = decompose(&f.complex, &f.cover.a, f.cover.k, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    expect(d, Decomposition::Indecomposable)?;
    if f.cover.k < f.complex.n() as u64 {
        return Err("order does not exceed n-1".into());
    }
    Ok(())
}

fn triangle_veronese() -> Result<(), String> {
    let t = triangle()?;
    let std2 = is_standard_graded(&veronese(&t, 2).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let std3 = is_standard_graded(&veronese(&t, 3).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    expect((std2, std3), (true, false))
}

fn triangle_primes() -> Vec<MonomialIdeal> {
    [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
        .iter()
        .map(|s| {
            let gens: Vec<Vec<u64>> = (0..3)
                .filter(|&i| s[i] == 1)
                .map(|i| {
                    let mut e = vec![0; 3];
                    e[i] = 1;
                    e
                })
                .collect();
            let refs: Vec<&[u64]> = gens.iter().map(|g| g.as_slice()).collect();
            MonomialIdeal::from_exponents(3, &refs).expect("valid generators")
        })
        .collect()
}

fn veronese_d() -> Result<(), String> {
    expect(
        find_veronese_d(&triangle_primes(), 3, 4).map_err(|e| e.to_string())?,
        VeroneseSearch::Found {
            d: 2,
            verified_up_to: 3,
        },
    )
}

fn cube_of_xyz() -> Result<(), String> {
    let section = |e: u64| -> Result<MonomialIdeal, String> {
        let powers: Vec<MonomialIdeal> = triangle_primes()
            .iter()
            .map(|p| p.power(e))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        Ok(MonomialIdeal::intersect_all(&powers)
            .map_err(|e| e.to_string())?
            .expect("three ideals"))
    };
    let m = ExponentVector::new(vec![3, 3, 3]);
    let in_i6 = section(6)?.contains(&m).map_err(|e| e.to_string())?;
    let i3 = section(3)?;
    let in_i3_sq = i3.power(2).and_then(|p| p.contains(&m)).map_err(|e| e.to_string())?;
    expect((in_i6, in_i3_sq), (true, false))
}

fn triangle_power_witness() -> Result<(), String> {
    let i = triangle()?.cover_ideal();
    expect(
        compare_powers(&i, 2).map_err(|e| e.to_string())?,
        PowerComparison::Proper {
            witness: ExponentVector::new(vec![1, 1, 1]),
        },
    )
}

fn gorenstein() -> Result<(), String> {
    let g = |c: WeightedComplex| is_gorenstein(&c).map(|v| v.gorenstein).map_err(|e| e.to_string());
    expect(
        (
            g(triangle()?)?,
            g(complex(3, &[&[1, 2, 3]], None)?)?,
            g(complex(3, &[&[1, 2, 3]], Some(&[2]))?)?,
        ),
        (true, false, true),
    )
}

fn degree_bound() -> Result<(), String> {
    expect(
        (DegreeBound::new(7).holds(7), DegreeBound::new(3).max_allowed()),
        (true, 7),
    )
}

const CHECKS: &[(&str, Check)] = &[
    ("triangle generators", triangle_generators),
    ("square generators", square_generators),
    ("skeleton closed form, n <= 5", skeletons),
    ("family m=k=2: 52 generators, top degree 7", family_2_2),
    ("family m=4,k=2: order 11 cover indecomposable", family_4_2),
    ("triangle Veronese c=2 standard, c=3 not", triangle_veronese),
    ("intersection of primes: d = 2", veronese_d),
    ("(xyz)^3 in I_6 but not in I_3^2", cube_of_xyz),
    ("triangle cover ideal: witness xyz at k=2", triangle_power_witness),
    ("Gorenstein predicate examples", gorenstein),
    ("degree bound comparator", degree_bound),
];

/// Runs every check and returns the number of failures.
pub fn run(json_out: bool) -> usize {
    let results: Vec<(&str, Result<(), String>)> = CHECKS.iter().map(|(name, f)| (*name, f())).collect();
    if json_out {
        let rows: Vec<_> = results
            .iter()
            .map(|(name, r)| json!({"check": name, "pass": r.is_ok(), "detail": r.as_ref().err()}))
            .collect();
        crate::output::print_json(&json!(rows));
    } else {
        for (name, r) in &results {
            match r {
                Ok(()) => println!("PASS  {name}"),
                Err(e) => println!("FAIL  {name}: {e}"),
            }
        }
    }
    results.iter().filter(|(_, r)| r.is_err()).count()
}
