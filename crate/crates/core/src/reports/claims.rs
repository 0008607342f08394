//! Published generating sets of fixed rings, written as words in u, v, t.

use crate::hopf::{Family, LinComb, Word};
use crate::invariants::words;
use crate::module_algebra::{GradedAlgebraSpec, T, U, V};

fn rep(chunk: &[u8], k: usize) -> Word {
    chunk.repeat(k)
}

fn cat(parts: &[&[u8]]) -> Word {
    parts.concat()
}

/// Generators stated for this algebra, or `None` where no list is published.
pub fn published_generators(spec: &GradedAlgebraSpec) -> Option<Vec<LinComb>> {
    let l = spec.conductor();
    let family = spec.hopf().family;
    let p = family.parameter() as usize;
    let w = |terms: &[(i64, Word)]| words(l, terms);
    let (u, v, t) = ([U], [V], [T]);
    let uv = [U, V];
    let vu = [V, U];
    let minus = spec.name.ends_with("minus");
    let list = match family {
        Family::KacPalyutkin => match spec.name.as_str() {
            "KP-b" => vec![
                w(&[(1, rep(&u, 2))]),
                w(&[(1, rep(&uv, 2)), (-1, rep(&vu, 2))]),
            ],
            "KP-c" | "KP-d" => vec![
                w(&[(1, rep(&u, 2)), (1, rep(&v, 2))]),
                w(&[(1, cat(&[&rep(&u, 2), &rep(&v, 2)]))]),
            ],
            _ => return None,
        },
        Family::H2n2 { n } => {
            let n = n as usize;
            let (un, vn) = (rep(&u, n), rep(&v, n));
            let unvn = cat(&[&un, &vn]);
            if n % 2 == 0 {
                let sign = if (spec.params.i * spec.params.j) % 2 == 0 { 1 } else { -1 };
                vec![w(&[(1, un), (sign, vn)]), w(&[(1, unvn)])]
            } else if minus {
                vec![w(&[(1, un), (1, vn)]), w(&[(1, unvn)])]
            } else {
                // uⁿvⁿ(uⁿ − vⁿ)
                vec![
                    w(&[(1, un.clone()), (1, vn.clone())]),
                    w(&[(1, cat(&[&unvn, &un])), (-1, cat(&[&unvn, &vn]))]),
                ]
            }
        }
        Family::B4m { .. } => {
            let (a, b) = (rep(&uv, p), rep(&vu, p));
            if minus {
                vec![w(&[(1, rep(&u, 2))]), w(&[(1, a), (-1, b)])]
            } else {
                let u2 = rep(&u, 2);
                vec![
                    w(&[(1, rep(&u, 4))]),
                    w(&[(1, a.clone()), (-1, b.clone())]),
                    w(&[(1, cat(&[&u2, &a])), (1, cat(&[&u2, &b]))]),
                ]
            }
        }
        Family::A4m { .. } if p % 2 == 1 => {
            let (a, b) = (rep(&uv, p), rep(&vu, p));
            if minus {
                vec![w(&[(1, rep(&u, 2))]), w(&[(1, a), (1, b)])]
            } else {
                let u2 = rep(&u, 2);
                vec![
                    w(&[(1, rep(&u, 4))]),
                    w(&[(1, b.clone()), (1, a.clone())]),
                    w(&[(1, cat(&[&u2, &b])), (-1, cat(&[&u2, &a]))]),
                ]
            }
        }
        Family::A4m { .. } => {
            let h = p / 2;
            let (a, b) = (rep(&uv, h), rep(&vu, h));
            let (um, vm) = (rep(&u, p), rep(&v, p));
            let (u2, t2, t4) = (rep(&u, 2), rep(&t, 2), rep(&t, 4));
            let u2v2 = cat(&[&u2, &rep(&v, 2)]);
            let k = spec.name.as_bytes()[1];
            let uv_um_minus_vm = || w(&[(1, cat(&[&uv, &um])), (-1, cat(&[&uv, &vm]))]);
            let plus_core = || {
                vec![
                    w(&[(1, rep(&u, 4))]),
                    w(&[(1, a.clone()), (-1, b.clone())]),
                    w(&[(1, cat(&[&u2, &a])), (1, cat(&[&u2, &b]))]),
                ]
            };
            match (k, minus) {
                (b'1', true) => vec![w(&[(1, uv.to_vec())]), w(&[(1, um.clone()), (1, vm.clone())]), w(&[(1, t2)])],
                (b'2' | b'5', true) => vec![w(&[(1, u2)]), w(&[(1, b), (-1, a)]), w(&[(1, t2)])],
                (b'3', true) => vec![
                    w(&[(1, uv.to_vec())]),
                    w(&[(1, um.clone()), (1, vm.clone())]),
                    w(&[(1, cat(&[&um, &t2])), (-1, cat(&[&vm, &t2]))]),
                    w(&[(1, t4)]),
                ],
                (b'4', true) => vec![
                    w(&[(1, u2)]),
                    w(&[(1, b.clone()), (-1, a.clone())]),
                    w(&[(1, cat(&[&b, &t2])), (1, cat(&[&a, &t2]))]),
                    w(&[(1, t4)]),
                ],
                (b'1', false) => vec![
                    w(&[(1, u2v2)]),
                    w(&[(1, um.clone()), (1, vm.clone())]),
                    w(&[(1, t2)]),
                    uv_um_minus_vm(),
                ],
                (b'2' | b'5', false) => {
                    let mut g = plus_core();
                    g.push(w(&[(1, t2)]));
                    g
                }
                (b'3', false) => vec![
                    w(&[(1, u2v2)]),
                    w(&[(1, um.clone()), (1, vm.clone())]),
                    uv_um_minus_vm(),
                    w(&[(1, cat(&[&uv, &t2]))]),
                    w(&[(1, cat(&[&um, &t2])), (-1, cat(&[&vm, &t2]))]),
                    w(&[(1, t4)]),
                ],
                (b'4', false) => {
                    let mut g = plus_core();
                    g.push(w(&[(1, cat(&[&u2, &t2]))]));
                    g.push(w(&[(1, cat(&[&a, &t2])), (1, cat(&[&b, &t2]))]));
                    g.push(w(&[(1, t4)]));
                    g
                }
                _ => return None,
            }
        }
        _ => return None,
    };
    Some(list)
}

/// Whether the published statement calls the fixed ring AS regular.
pub fn published_regular(spec: &GradedAlgebraSpec) -> Option<bool> {
    let family = spec.hopf().family;
    let minus = spec.name.ends_with("minus");
    Some(match family {
        Family::KacPalyutkin => matches!(spec.name.as_str(), "KP-b" | "KP-c" | "KP-d"),
        Family::H2n2 { n } => minus || n % 2 == 0,
        Family::B4m { .. } => minus,
        Family::A4m { m } if m % 2 == 1 => minus,
        Family::A4m { .. } => minus && matches!(spec.name.as_bytes()[1], b'1' | b'2' | b'5'),
        _ => return None,
    })
}
