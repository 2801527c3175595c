"""Constructive sparse halves for graphs with a large independent set.

Starting from an independent set of density alpha >= 3/8 (n even), a greedy
pass absorbs vertices that bring few edges; the leftover structure is split
into the crowded vertices, a reservoir, and a pivot fan, and one of two case
constructions produces a half whose exact value is at most
(alpha/2) * (1/2 - alpha).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactmath import Polynomial, RationalFunc
from .graphcore import Graph, _bits
from .halves import BoundCertificate, Half, beta_of_half, certificate
from .report import CheckResult, IdentityReport, run_check


class DataInconsistencyError(Exception):
    """A step that the independence hypothesis guarantees failed anyway."""


def _mask_of(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class GreedyState:
    """Outcome of the absorption pass: the grown set and its exact densities."""

    grown_mask: int
    history: tuple[int, ...]
    p_grown: Fraction
    rho_grown: Fraction


def grow_low_spill_set(g: Graph, start_mask: int, spill_cap: int, target: int) -> GreedyState:
    """Greedily absorb vertices with at most `spill_cap` neighbors in the set.

    Candidates are scanned in index order and the first qualifying vertex is
    accepted, until the set reaches `target` vertices or no vertex qualifies.
    """
    mask = start_mask
    history: list[int] = []
    size = mask.bit_count()
    while size < target:
        accepted = None
        for v in range(g.n):
            if mask >> v & 1:
                continue
            if (g.adj[v] & mask).bit_count() <= spill_cap:
                accepted = v
                break
        if accepted is None:
            break
        mask |= 1 << accepted
        history.append(accepted)
        size += 1
    inner = sum((g.adj[v] & mask).bit_count() for v in _bits(mask)) // 2
    return GreedyState(
        grown_mask=mask,
        history=tuple(history),
        p_grown=Fraction(size, g.n),
        rho_grown=Fraction(inner, g.n * g.n),
    )


def independence_half(g: Graph, indep: tuple[int, ...] | list[int]) -> BoundCertificate:
    """Build a half from an independent set of density alpha, with exact value.

    The certificate's bound is the recomputed beta of the returned half; the
    analytic guarantee (alpha/2)(1/2 - alpha) rides in params, along with an
    `outside_hypothesis` flag when alpha < 3/8 (the construction still runs,
    the guarantee just is not asserted).
    """
    n = g.n
    if n % 2:
        raise ValueError("construction needs even n; blow the graph up by 2 first")
    a_mask = _mask_of(indep)
    for v in _bits(a_mask):
        if g.adj[v] & a_mask:
            raise ValueError(f"vertex {v} has a neighbor inside the supposed independent set")
    alpha = Fraction(a_mask.bit_count(), n)
    analytic = alpha / 2 * (Fraction(1, 2) - alpha)
    base_params = {
        "alpha": alpha,
        "analytic_bound": analytic,
        "outside_hypothesis": alpha < Fraction(3, 8),
    }

    if a_mask.bit_count() >= n // 2:
        half_mask = 0
        for v in list(_bits(a_mask))[: n // 2]:
            half_mask |= 1 << v
        return certificate(g, "independence", Half.from_mask(n, half_mask),
                           {**base_params, "case": "inside-independent-set"})

    spill_cap = n // 2 - a_mask.bit_count()  # = (1/2 - alpha) * n
    state = grow_low_spill_set(g, a_mask, spill_cap, n // 2)
    b_mask, p_b = state.grown_mask, state.p_grown
    assert alpha <= p_b <= Fraction(1, 2)
    assert state.rho_grown <= 2 * (Fraction(1, 2) - alpha) * (p_b - alpha)

    if b_mask.bit_count() == n // 2:
        cert = certificate(g, "independence", Half.from_mask(n, b_mask),
                           {**base_params, "case": "greedy-filled", "p_b": p_b})
        assert cert.bound <= (Fraction(1, 2) - alpha) ** 2
        return cert

    # every remaining vertex now spills more than the cap
    assert all(
        (g.adj[v] & b_mask).bit_count() > spill_cap
        for v in range(n) if not b_mask >> v & 1
    )

    # crowded vertices: more than half their edges land in the grown set
    crowded = [
        v for v in range(n)
        if not b_mask >> v & 1 and 2 * (g.adj[v] & b_mask).bit_count() > b_mask.bit_count()
    ]
    c_mask = _mask_of(crowded)
    for u in crowded:
        if g.adj[u] & c_mask:
            raise DataInconsistencyError(
                "crowded vertices are adjacent; they should share a grown-set neighbor"
            )

    d_size = n - a_mask.bit_count() - b_mask.bit_count()  # (1 - alpha - p_b) * n
    free = [v for v in range(n) if not (b_mask | c_mask) >> v & 1]
    if len(free) < d_size:
        raise DataInconsistencyError(
            f"reservoir needs {d_size} vertices but only {len(free)} are outside "
            "the grown and crowded sets; contradicts the independence hypothesis"
        )
    d_mask = _mask_of(free[:d_size])

    need = n // 2 - b_mask.bit_count()  # (1/2 - p_b) * n
    pivot = next(
        (v for v in _bits(b_mask) if (g.adj[v] & d_mask).bit_count() >= need), None
    )
    if pivot is not None:
        fan = list(_bits(g.adj[pivot] & d_mask))[:need]
        half_mask = b_mask | _mask_of(fan)
        return certificate(g, "independence", Half.from_mask(n, half_mask),
                           {**base_params, "case": "pivot-fan", "p_b": p_b, "pivot": pivot})

    # no pivot reaches the reservoir strongly: weight the rest fractionally
    best: BoundCertificate | None = None
    for v0 in _bits(b_mask):
        fan_mask = g.adj[v0] & d_mask
        rest_mask = d_mask & ~fan_mask
        p_e = Fraction(fan_mask.bit_count(), n)
        p_f = Fraction(rest_mask.bit_count(), n)
        numer = Fraction(1, 2) - p_b - p_e
        if p_f == 0:
            if numer != 0:
                raise DataInconsistencyError("empty remainder with weight left to place")
            p = Fraction(0)
        else:
            p = numer / p_f
        assert 0 <= p <= 1, f"fractional weight {p} escaped [0, 1]"
        weights = [Fraction(0)] * n
        for v in _bits(b_mask | fan_mask):
            weights[v] = Fraction(1)
        for v in _bits(rest_mask):
            weights[v] = p
        mu = Half(tuple(weights))
        value = beta_of_half(g, mu)
        if best is None or value < best.bound:
            best = certificate(g, "independence", mu,
                               {**base_params, "case": "fractional-rest", "p_b": p_b,
                                "pivot": v0, "p": p})
    assert best is not None
    return best


# ---------------------------------------------------------------------------
# Symbolic checks of the averaging analysis
# ---------------------------------------------------------------------------


def _q_form() -> RationalFunc:
    """The averaged two-moment bound Q(alpha, pb, rbd) of the fractional case."""
    a, b, r = Polynomial.variables_named("alpha", "pb", "rbd")
    num = (
        8 * a**2 * b**2 - 24 * a * b**3 - 4 * b**4 + 4 * a * b**2
        - 8 * a * b * r + 12 * b**3 - 4 * b**2 * r - 3 * b**2
        + 6 * b * r - 3 * r**2
    )
    return RationalFunc(num, 16 * b**2)


def _q1_form() -> Polynomial:
    a, b = Polynomial.variables_named("alpha", "pb")
    return (
        Fraction(13, 16) * a**2 - Fraction(9, 8) * a * b - Fraction(3, 16) * b**2
        - Fraction(1, 4) * a + Fraction(1, 2) * b
    )


def independence_formula_checks() -> IdentityReport:
    """Verify the four closed-form identities plus concavity of the averaged bound."""
    checks: list[CheckResult] = []
    a, b = Polynomial.variables_named("alpha", "pb")
    q = _q_form()
    saturated_r = b * (1 - a - b)  # the reservoir cross-density at its upper bound

    def check_slope_at_saturation():
        lhs = q.derive("rbd").subs("rbd", saturated_r)
        rhs = RationalFunc(b - a, 8 * b)
        return repr(lhs.num), repr(rhs.num), lhs == rhs

    checks.append(run_check("independence.dq_drbd",
                            "dQ/drbd at rbd = pb(1-alpha-pb) equals (pb-alpha)/(8pb)",
                            check_slope_at_saturation))

    def check_q_at_saturation():
        lhs = q.subs("rbd", saturated_r)
        rhs = RationalFunc(_q1_form())
        return repr(lhs.num), repr(rhs.num), lhs == rhs

    checks.append(run_check("independence.q_saturated_is_q1",
                            "Q at rbd = pb(1-alpha-pb) collapses to the quadratic Q1",
                            check_q_at_saturation))

    def check_q1_slope():
        lhs = _q1_form().derive("pb").subs("pb", a)
        rhs = (1 - 3 * a) / 2
        return repr(lhs), repr(rhs), lhs == rhs

    checks.append(run_check("independence.dq1_dpb",
                            "dQ1/dpb at pb = alpha equals (1-3*alpha)/2", check_q1_slope))

    def check_q1_diagonal():
        lhs = _q1_form().subs("pb", a)
        rhs = a / 2 * (Fraction(1, 2) - a)
        return repr(lhs), repr(rhs), lhs == rhs

    checks.append(run_check("independence.q1_diagonal",
                            "Q1(alpha, alpha) equals (alpha/2)(1/2 - alpha)",
                            check_q1_diagonal))

    def check_concavity():
        coeff = q.num.coefficient("rbd", 2)
        return repr(coeff), "-3 (over the 16*pb^2 denominator)", coeff == Polynomial.const(-3)

    checks.append(run_check("independence.q_concave_in_rbd",
                            "coefficient of rbd^2 in Q is -3/(16 pb^2) < 0", check_concavity))

    return IdentityReport("independence-identities", checks)
