"""Leading coefficients of embedding counts in weighted blow-ups.

For an m-vertex pattern H and a small weighted pattern P, the coefficient of
n^m in the injective-embedding count of H inside a blow-up of P with blob
fractions w is the weighted homomorphism sum

    sum over homomorphisms phi: H -> P of  prod_v w(phi(v)),

computed here exactly over the rationals.  Tree components are evaluated by
dynamic programming (mandatory for the large trees the counterexample
construction produces); cyclic components backtrack with zero-weight
pruning.  A simplex optimizer searches for the blob weights maximizing the
coefficient: float evaluation inside the search, exact rational evaluation
of the final point.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .embeddings import count_embeddings, embeddings_listing
from .graphs import Graph, build_blowup, connected_components


@dataclass(frozen=True)
class WeightedPattern:
    """A small pattern graph with one exact non-negative rational weight per
    vertex, summing to 1 (the blob fractions of a blow-up skeleton)."""

    pattern: Graph
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        weights = tuple(Fraction(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if len(weights) != self.pattern.n:
            raise ValueError(f"need {self.pattern.n} weights, got {len(weights)}")
        if any(w < 0 for w in weights):
            raise ValueError("weights must be non-negative")
        if self.pattern.n and sum(weights) != 1:
            raise ValueError("weights must sum to exactly 1")


@dataclass(frozen=True)
class LeadingCoefficient:
    """Exact weighted homomorphism sum plus the number of homomorphisms with
    a nonzero weight product."""

    value: Fraction
    hom_count: int


def weighted_hom_sum(patternH: Graph, patternP: Graph, weights):
    """sum over edge-preserving maps V(H) -> V(P) of prod_v weights[phi(v)].

    Weights may be Fractions, ints, or floats and need not be normalized
    (the sum is homogeneous of degree |V(H)|); used raw by the optimizer's
    float loop and by tests of the homogeneity property.
    """
    if len(weights) != patternP.n:
        raise ValueError("one weight per pattern-P vertex required")
    total = 1
    _, comps = connected_components(patternH)
    for comp in comps:
        total *= _component_sum(patternH, comp, patternP, weights)
    return total


def _component_sum(H: Graph, comp, P: Graph, weights):
    verts = list(comp)
    comp_set = set(verts)
    edges_in = sum(1 for u, v in H.edges() if u in comp_set)
    if edges_in == len(verts) - 1:
        return _tree_sum(H, verts, P, weights)
    return _backtrack_sum(H, verts, P, weights)


def _tree_sum(H: Graph, verts, P: Graph, weights):
    """Bottom-up DP over a tree component: O(|tree| * |P|^2) exact ops."""
    root = verts[0]
    parent = {root: None}
    order = [root]
    stack = [root]
    while stack:
        u = stack.pop()
        for w in H.neighbors(u):
            if w not in parent:
                parent[w] = u
                order.append(w)
                stack.append(w)
    children = {v: [] for v in order}
    for v in order[1:]:
        children[parent[v]].append(v)
    k = P.n
    table = {}
    for v in reversed(order):
        vals = list(weights)
        for c in children[v]:
            fc = table.pop(c)
            for q in range(k):
                s = 0
                for qq in P.neighbors(q):
                    s += fc[qq]
                vals[q] = vals[q] * s
        table[v] = vals
    return sum(table[root])


def _backtrack_sum(H: Graph, verts, P: Graph, weights):
    """Backtracking over a (small, cyclic) component in a connectivity-first
    order, pruning zero-weight branches early."""
    order = [verts[0]]
    placed = {verts[0]}
    rest = [v for v in verts[1:]]
    while rest:
        rest.sort(key=lambda v: (-len([u for u in H.neighbors(v) if u in placed]), v))
        v = rest.pop(0)
        order.append(v)
        placed.add(v)
    pos = {v: i for i, v in enumerate(order)}
    parents = [[pos[u] for u in H.neighbors(v) if pos[u] < i]
               for i, v in enumerate(order)]
    k = P.n
    full = (1 << k) - 1
    sel = [0] * len(order)

    def rec(i, prod):
        if i == len(order):
            return prod
        cand = full
        for p in parents[i]:
            cand &= P.rows[sel[p]]
        total = 0
        while cand:
            bit = cand & -cand
            q = bit.bit_length() - 1
            cand &= cand - 1
            w = weights[q]
            if w == 0:
                continue
            sel[i] = q
            total += rec(i + 1, prod * w)
        return total

    return rec(0, 1)


def enumerate_homomorphisms(patternH: Graph, patternP: Graph,
                            include_listing: bool = False):
    """Exact count of edge-preserving maps V(H) -> V(P); injectivity is not
    required.  Returns (count, listing), the listing only on request and
    only for |V(H)| <= 20."""
    count = weighted_hom_sum(patternH, patternP, [1] * patternP.n)
    listing = None
    if include_listing:
        if patternH.n > 20:
            raise ValueError("homomorphism listing capped at 20 pattern vertices")
        listing = tuple(_homomorphism_listing(patternH, patternP))
        if len(listing) != count:
            raise RuntimeError("homomorphism listing disagrees with the count")
    return count, listing


def _homomorphism_listing(H: Graph, P: Graph):
    k = P.n
    full = (1 << k) - 1
    image = [0] * H.n

    def rec(v):
        if v == H.n:
            yield tuple(image)
            return
        cand = full
        for u in H.neighbors(v):
            if u < v:
                cand &= P.rows[image[u]]
        while cand:
            bit = cand & -cand
            image[v] = bit.bit_length() - 1
            yield from rec(v + 1)
            cand &= cand - 1

    yield from rec(0)


def leading_coefficient(patternH: Graph, wp: WeightedPattern) -> LeadingCoefficient:
    """The degree-m coefficient of count_embeddings(H, blow-up of P) in the
    blow-up size n, as an exact rational."""
    value = weighted_hom_sum(patternH, wp.pattern, wp.weights)
    indicator = [1 if w else 0 for w in wp.weights]
    contributing = weighted_hom_sum(patternH, wp.pattern, indicator)
    return LeadingCoefficient(Fraction(value), int(contributing))


# ---------------------------------------------------------------------------
# finite-size saturation of the leading term
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SaturationReport:
    n: int
    feasible: bool
    count: int | None
    normalized: Fraction | None
    coefficient: Fraction
    abs_error: Fraction | None


def rounded_blob_sizes(weights, n: int) -> list[int]:
    """Largest-remainder rounding of w*n to integers summing to n."""
    floors = [int(w * n) for w in weights]
    remainders = [(w * n - f, -i) for i, (w, f) in enumerate(zip(weights, floors))]
    missing = n - sum(floors)
    for _, neg_i in sorted(remainders, reverse=True)[:missing]:
        floors[-neg_i] += 1
    return floors


def saturation_check(patternH: Graph, wp: WeightedPattern, n: int,
                     budget: int = 10 ** 8) -> SaturationReport:
    """|count_embeddings(H, blow-up at size n) / n^m - coefficient|, exact.

    Infeasible instances (estimated work n^m over budget) are reported, not
    fatal.
    """
    coeff = leading_coefficient(patternH, wp).value
    if n > 0 and patternH.n > 0 and n ** patternH.n > budget:
        return SaturationReport(n, False, None, None, coeff, None)
    sizes = rounded_blob_sizes(wp.weights, n)
    host = build_blowup(wp.pattern, sizes)
    count = count_embeddings(patternH, host)
    normalized = Fraction(count, n ** patternH.n) if n else Fraction(count)
    return SaturationReport(n, True, count, normalized, coeff,
                            abs(normalized - coeff))


def saturation_converges(patternH: Graph, wp: WeightedPattern,
                         n1: int, n2: int, budget: int = 10 ** 8):
    """Fit the O(1/n) constant across two sizes and check the error shrinks.

    Returns (C, holds, report1, report2) with C = max of error*n over the
    two sizes; holds iff both counts were feasible and the error at the
    larger size does not exceed the error at the smaller one.
    """
    if not n1 < n2:
        raise ValueError("need n1 < n2")
    r1 = saturation_check(patternH, wp, n1, budget)
    r2 = saturation_check(patternH, wp, n2, budget)
    if not (r1.feasible and r2.feasible):
        return None, False, r1, r2
    c = max(r1.abs_error * n1, r2.abs_error * n2)
    return c, r2.abs_error <= r1.abs_error, r1, r2


# ---------------------------------------------------------------------------
# weight optimization over the simplex
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OptimizerConfig:
    grid_resolution: int = 50
    max_iterations: int = 200
    tolerance: float = 1e-6
    workers: int = 1
    snap_denominator: int = 10 ** 6


def automorphism_maps(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms of a small graph as image tuples."""
    return [image for image in embeddings_listing(g, g)]


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _grid_seeds(patternP: Graph, resolution: int) -> list[tuple[int, ...]]:
    """Integer weight compositions, one representative per Aut(P) orbit."""
    auts = automorphism_maps(patternP)
    seeds = []
    for comp in _compositions(resolution, patternP.n):
        rep = min(tuple(comp[a[i]] for i in range(len(comp))) for a in auts)
        if comp == rep:
            seeds.append(comp)
    return seeds


def _eval_seed_chunk(args):
    h_rows, h_n, p_rows, p_n, seeds, resolution = args
    H = Graph.from_rows(h_rows)
    P = Graph.from_rows(p_rows)
    best_val, best_seed = -1.0, None
    for seed in seeds:
        weights = [a / resolution for a in seed]
        val = float(weighted_hom_sum(H, P, weights))
        if best_seed is None or val > best_val or (val == best_val and seed < best_seed):
            best_val, best_seed = val, seed
    return best_val, best_seed


def optimize_weights(patternH: Graph, patternP: Graph,
                     config: OptimizerConfig | None = None):
    """Heuristically maximize the leading coefficient over blob weights.

    Coarse grid seeding (with Aut(P) symmetry reduction) followed by local
    mass-transfer ascent with a shrinking step; floats inside the loop, one
    exact rational evaluation at the rationalized final point.  Global
    optimality is not claimed.  Returns (WeightedPattern, LeadingCoefficient).
    """
    if patternP.n > 8:
        raise ValueError("blow-up patterns are capped at 8 vertices")
    if patternP.n == 0:
        raise ValueError("blow-up pattern needs at least one vertex")
    cfg = config or OptimizerConfig()
    g = cfg.grid_resolution
    seeds = _grid_seeds(patternP, g)

    if cfg.workers > 1 and len(seeds) > 64:
        chunks = [seeds[i::cfg.workers] for i in range(cfg.workers)]
        args = [(patternH.rows, patternH.n, patternP.rows, patternP.n, ch, g)
                for ch in chunks if ch]
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_eval_seed_chunk, args))
    else:
        results = [_eval_seed_chunk(
            (patternH.rows, patternH.n, patternP.rows, patternP.n, seeds, g))]

    best_val, best_seed = -1.0, None
    for val, seed in results:
        if best_seed is None or val > best_val or (val == best_val and seed < best_seed):
            best_val, best_seed = val, seed

    weights = [a / g for a in best_seed]
    value = best_val
    step = 1.0 / g
    iterations = 0
    k = patternP.n
    while step >= cfg.tolerance and iterations < cfg.max_iterations:
        iterations += 1
        best_move, best_move_val = None, value
        for i in range(k):
            if weights[i] <= 0:
                continue
            t = min(step, weights[i])
            for j in range(k):
                if i == j:
                    continue
                cand = list(weights)
                cand[i] -= t
                cand[j] += t
                v = float(weighted_hom_sum(patternH, patternP, cand))
                if v > best_move_val or (v == best_move_val and best_move is not None
                                         and cand < best_move):
                    best_move_val, best_move = v, cand
        if best_move is not None and best_move_val > value:
            weights, value = best_move, best_move_val
        else:
            step /= 2

    candidates = [_snap_to_simplex(weights, cfg.snap_denominator),
                  tuple(Fraction(a, g) for a in best_seed)]
    best_exact, best_wp = None, None
    for cand in candidates:
        wp = WeightedPattern(patternP, cand)
        exact = weighted_hom_sum(patternH, patternP, wp.weights)
        if (best_exact is None or exact > best_exact
                or (exact == best_exact and wp.weights < best_wp.weights)):
            best_exact, best_wp = exact, wp
    return best_wp, leading_coefficient(patternH, best_wp)


def _snap_to_simplex(weights, denominator: int) -> tuple[Fraction, ...]:
    snapped = [Fraction(max(0, round(w * denominator)), denominator) for w in weights]
    drift = 1 - sum(snapped)
    if drift:
        target = max(range(len(snapped)), key=lambda i: (snapped[i], -i))
        snapped[target] += drift
        if snapped[target] < 0:
            raise RuntimeError("weight snapping produced a negative coordinate")
    return tuple(snapped)
