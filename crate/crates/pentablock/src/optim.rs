//! Derivative-free minimization over R^2 with a reflect/expand/contract
//! polytope. Small and self-contained; the witness search is its only
//! client.

/// Minimize `f` starting from `start`, with an initial simplex of the given
/// edge scale. Stops after `max_iter` iterations or once the simplex
/// diameter falls below `diam_tol`. Returns the best vertex and its value.
///
/// Non-finite objective values are treated as "worse than everything", so
/// the search simply backs away from overflow regions.
pub(crate) fn minimize2<F>(
    mut f: F,
    start: [f64; 2],
    scale: f64,
    max_iter: usize,
    diam_tol: f64,
) -> ([f64; 2], f64)
where
    F: FnMut([f64; 2]) -> f64,
{
    let clean = |v: f64| if v.is_finite() { v } else { f64::MAX };
    let mut eval = |x: [f64; 2]| clean(f(x));

    let mut verts = [
        start,
        [start[0] + scale, start[1]],
        [start[0], start[1] + scale],
    ];
    let mut vals = [eval(verts[0]), eval(verts[1]), eval(verts[2])];

    // Reflection, expansion, contraction, shrink coefficients.
    const ALPHA: f64 = 1.0;
    const GAMMA: f64 = 2.0;
    const RHO: f64 = 0.5;
    const SIG: f64 = 0.5;

    for _ in 0..max_iter {
        // Sort vertices best..worst.
        let mut order = [0usize, 1, 2];
        order.sort_by(|&i, &j| vals[i].total_cmp(&vals[j]));
        let (b, m, w) = (order[0], order[1], order[2]);

        let diam = {
            let d = |i: usize, j: usize| {
                ((verts[i][0] - verts[j][0]).powi(2) + (verts[i][1] - verts[j][1]).powi(2)).sqrt()
            };
            d(0, 1).max(d(1, 2)).max(d(0, 2))
        };
        if diam < diam_tol {
            break;
        }

        let centroid = [
            0.5 * (verts[b][0] + verts[m][0]),
            0.5 * (verts[b][1] + verts[m][1]),
        ];
        let dir = [centroid[0] - verts[w][0], centroid[1] - verts[w][1]];
        let at = |t: f64| [centroid[0] + t * dir[0], centroid[1] + t * dir[1]];

        let refl = at(ALPHA);
        let f_refl = eval(refl);
        if f_refl < vals[b] {
            let exp = at(GAMMA);
            let f_exp = eval(exp);
            if f_exp < f_refl {
                verts[w] = exp;
                vals[w] = f_exp;
            } else {
                verts[w] = refl;
                vals[w] = f_refl;
            }
        } else if f_refl < vals[m] {
            verts[w] = refl;
            vals[w] = f_refl;
        } else {
            let contr = if f_refl < vals[w] { at(RHO) } else { at(-RHO) };
            let f_contr = eval(contr);
            if f_contr < vals[w].min(f_refl) {
                verts[w] = contr;
                vals[w] = f_contr;
            } else {
                // Shrink towards the best vertex.
                for i in 0..3 {
                    if i != b {
                        verts[i] = [
                            verts[b][0] + SIG * (verts[i][0] - verts[b][0]),
                            verts[b][1] + SIG * (verts[i][1] - verts[b][1]),
                        ];
                        vals[i] = eval(verts[i]);
                    }
                }
            }
        }
    }

    let mut best = 0;
    for i in 1..3 {
        if vals[i] < vals[best] {
            best = i;
        }
    }
    (verts[best], vals[best])
}
