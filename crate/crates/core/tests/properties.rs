// Copyright 2026 The whamp Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


use proptest::prelude::*;

use whamp::bell::ClusterLayout;
use whamp::circuit::{Circuit, Gate, QuditOp, WireKind};
use whamp::stats::wilson_interval;
use whamp::{DimVector, Limits, WeylString, C64};

fn dims() -> impl Strategy<Value = DimVector> {
    prop::collection::vec(prop::sample::select(vec![2usize, 3, 5]), 1..=2).prop_map(|d| DimVector::new(d).unwrap())
}

fn string_over(dims: DimVector) -> impl Strategy<Value = WeylString> {
    let ranges: Vec<_> = dims.iter().map(|d| 0..d).collect();
    (ranges.clone(), ranges).prop_map(move |(x, z)| WeylString::new(dims.clone(), x, z).unwrap())
}

fn pair() -> impl Strategy<Value = (WeylString, WeylString)> {
    dims().prop_flat_map(|d| (string_over(d.clone()), string_over(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_matches_matrices((a, b) in pair()) {
        let lim = Limits::default();
        let ab = a.multiply(&b).unwrap();
        let dense = &a.to_matrix(&lim).unwrap() * &b.to_matrix(&lim).unwrap();
        prop_assert!(ab.to_matrix(&lim).unwrap().max_abs_diff(&dense) < 1e-10);
    }

    #[test]
    fn adjoint_inverts((a, _) in pair()) {
        let lim = Limits::default();
        prop_assert!(a.multiply(&a.adjoint()).unwrap().is_identity());
        let m = a.to_matrix(&lim).unwrap().adjoint();
        prop_assert!(a.adjoint().to_matrix(&lim).unwrap().max_abs_diff(&m) < 1e-10);
    }

    #[test]
    fn commutator_is_scalar((a, b) in pair()) {
        let lim = Limits::default();
        let c = a.commutator(&b).unwrap().to_complex();
        let ab = &a.to_matrix(&lim).unwrap() * &b.to_matrix(&lim).unwrap();
        let ba = &b.to_matrix(&lim).unwrap() * &a.to_matrix(&lim).unwrap();
        prop_assert!(ab.max_abs_diff(&ba.scale(c)) < 1e-10);
    }

    #[test]
    fn lex_roundtrip((a, _) in pair()) {
        let back = WeylString::from_lex_index(a.dims(), a.lex_index());
        prop_assert!(back.projectively_equal(&a));
    }

    #[test]
    fn wilson_brackets(t in 1usize..5000, frac in 0.0f64..=1.0, z in 0.1f64..4.0) {
        let s = ((t as f64) * frac).floor() as usize;
        let (lo, hi) = wilson_interval(s, t, z).unwrap();
        let p = s as f64 / t as f64;
        prop_assert!(0.0 <= lo && lo <= p && p <= hi && hi <= 1.0);
        let (lo2, hi2) = wilson_interval(s, t, z * 1.5).unwrap();
        prop_assert!(lo2 <= lo + 1e-12 && hi2 >= hi - 1e-12);
    }

    #[test]
    fn layout_roundtrip(d in dims(), raw in any::<u64>()) {
        let l = ClusterLayout::new(&d).unwrap();
        let idx = raw % l.num_outcomes() as u64;
        prop_assert_eq!(l.encode(&l.decode(idx)).unwrap(), idx);
    }

    #[test]
    fn circuit_text_roundtrip(d in 2usize..6, ops in prop::collection::vec((0usize..10, 0usize..4, 0usize..4), 0..30)) {
        use QuditOp::*;
        let all = [H, Hdg, S, Sdg, X, Xdg, Z, Zdg, Cx, Cxdg];
        let mut c = Circuit::new(WireKind::Qudit(d), 4).unwrap();
        for (op, a, b) in ops {
            let op = all[op];
            if matches!(op, Cx | Cxdg) {
                if a != b {
                    c.push(Gate::qudit(op, &[a, b])).unwrap();
                }
            } else {
                c.push(Gate::qudit(op, &[a])).unwrap();
            }
        }
        let parsed: Circuit = c.to_text().parse().unwrap();
        prop_assert_eq!(&parsed, &c);
        prop_assert_eq!(parsed.adjoint().adjoint(), c);
    }
}

#[test]
fn identity_scalar() {
    let w = WeylString::identity(DimVector::new(vec![3, 2]).unwrap());
    assert_eq!(w.scalar(), C64::new(1.0, 0.0));
}
