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

use crate::dense::{C64, ZERO};
use crate::weyl::Phase;

use super::ClusterLayout;

/// In-place character transform over every cluster of a packed outcome table.
///
/// Forward maps outcome weights `h(s, q)` to `sum h omega^{z s - x q}` stored at
/// slot `z * p + x`. The inverse undoes it including the `p^-2` factors.
pub(crate) fn character_transform(values: &mut [C64], layout: &ClusterLayout, inverse: bool) {
    debug_assert_eq!(values.len() as u128, layout.num_outcomes());
    let sign: i64 = if inverse { -1 } else { 1 };
    let mut scale = 1.0;
    for (k, c) in layout.clusters().iter().enumerate() {
        let st = layout.stride(k) as usize;
        let p = c.p;
        let roots: Vec<C64> = (0..p).map(|e| Phase::root(e as i64, p, p).to_complex()).collect();
        dft_axis(values, st * p, p, sign, &roots);
        dft_axis(values, st, p, -sign, &roots);
        scale *= (p * p) as f64;
    }
    if inverse {
        values.iter_mut().for_each(|v| *v /= scale);
    }
}

fn dft_axis(values: &mut [C64], stride: usize, p: usize, sign: i64, roots: &[C64]) {
    let block = stride * p;
    let mut buf = vec![ZERO; p];
    for base in (0..values.len()).step_by(block) {
        for off in 0..stride {
            let start = base + off;
            for (j, b) in buf.iter_mut().enumerate() {
                *b = values[start + j * stride];
            }
            for m in 0..p {
                let mut acc = ZERO;
                for (j, b) in buf.iter().enumerate() {
                    let e = (sign * (m * j) as i64).rem_euclid(p as i64) as usize;
                    acc += roots[e] * b;
                }
                values[start + m * stride] = acc;
            }
        }
    }
}
