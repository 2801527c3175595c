"""Exact arithmetic kernel: rationals, Q(sqrt(161)), multivariate polynomials.

All scalars in this package are `fractions.Fraction`; quantities that live in
the quadratic field Q(sqrt(161)) (the density threshold rho0 and everything
compared against it) are `QuadNum`.  Polynomials carry rational coefficients
and a name-sorted variable tuple so that term maps are canonical.

The module also hosts the symbolic side of the sparse-graph analysis: the
closed-form estimate f(rho, delta, e2), the margin polynomial Q defined by
1/50 - f = Q / (200*(1-delta-e2)*(1-delta-e2+2*delta*e2)), and
`verify_sparse_identities`, which re-checks every identity and sign condition
that analysis relies on.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, isqrt

from .report import CheckResult, IdentityReport, run_check

Rational = Fraction


def frac(num, den=1) -> Fraction:
    return Fraction(num, den)


class ExactDivisionError(ArithmeticError):
    """Polynomial division left a nonzero remainder."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


# ---------------------------------------------------------------------------
# Q(sqrt(161))
# ---------------------------------------------------------------------------

_SQ = 161  # square-free radicand; fixed for the whole package


class QuadNum:
    """Element a + b*sqrt(161), with exact field arithmetic and exact sign."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    # -- coercion ----------------------------------------------------------
    @staticmethod
    def _coerce(value):
        if isinstance(value, QuadNum):
            return value
        if isinstance(value, (int, Fraction)):
            return QuadNum(value)
        return None

    def is_rational(self) -> bool:
        return self.b == 0

    # -- ring/field ops ----------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(o.a - self.a, o.b - self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(self.a * o.a + _SQ * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadNum(-self.a, -self.b)

    def conjugate(self) -> "QuadNum":
        return QuadNum(self.a, -self.b)

    def norm(self) -> Fraction:
        """Field norm a^2 - 161*b^2 (product with the conjugate)."""
        return self.a * self.a - _SQ * self.b * self.b

    def inverse(self) -> "QuadNum":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero element of Q(sqrt(161))")
        return QuadNum(self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exp: int):
        if not isinstance(exp, int) or exp < 0:
            return NotImplemented
        out = QuadNum(1)
        base = self
        while exp:
            if exp & 1:
                out = out * base
            base = base * base
            exp >>= 1
        return out

    # -- exact order -------------------------------------------------------
    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb if sa == 0 else sa
        # a and b have opposite signs: the sign follows the larger of
        # a^2 and 161*b^2 (161 is not a square, so ties need b = 0).
        lhs = self.a * self.a
        rhs = _SQ * self.b * self.b
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b)) if self.b else hash(self.a)

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare QuadNum with {type(other).__name__}")
        return (self - o).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __floor__(self) -> int:
        """Exact floor, via integer-sqrt brackets of increasing precision."""
        if self.b == 0:
            return self.a.numerator // self.a.denominator
        scale = 10**6
        while True:
            root_lo = Fraction(isqrt(_SQ * scale * scale), scale)
            root_hi = root_lo + Fraction(1, scale)
            if self.b > 0:
                lo, hi = self.a + self.b * root_lo, self.a + self.b * root_hi
            else:
                lo, hi = self.a + self.b * root_hi, self.a + self.b * root_lo
            if lo.numerator // lo.denominator == hi.numerator // hi.denominator:
                return lo.numerator // lo.denominator
            scale *= 100

    def __float__(self):
        return float(self.a) + float(self.b) * _SQ**0.5

    def __repr__(self):
        if self.b == 0:
            return f"QuadNum({self.a})"
        return f"QuadNum({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"({self.a})+({self.b})*sqrt(161)"


#: rho0 = (33 - sqrt(161))/116, the density threshold of the sparse case.
RHO0 = QuadNum(Fraction(33, 116), Fraction(-1, 116))

RHO0_STR = "(33-sqrt(161))/116"


def rho0_min_poly() -> "Polynomial":
    """Minimal polynomial of rho0 over Q, derived by rationalizing the root.

    x = (33 - sqrt(161))/116  =>  (116x - 33)^2 = 161, reduced to lowest terms.
    """
    from math import gcd

    x = Polynomial.var("x")
    squared = (116 * x - 33) ** 2 - 161  # 13456x^2 - 7656x + 928
    content = 0
    for coeff in squared.terms.values():
        content = gcd(content, coeff.numerator)
    return Polynomial(squared.variables, {e: c / content for e, c in squared.terms.items()})


# ---------------------------------------------------------------------------
# Multivariate polynomials over Q
# ---------------------------------------------------------------------------


def _order_key(exps):
    # graded lexicographic order on exponent vectors
    return (sum(exps), exps)


class Polynomial:
    """Immutable multivariate polynomial with Fraction coefficients.

    Variables are kept as a name-sorted tuple so equal polynomials built in
    different orders share one canonical term map.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms):
        variables = tuple(variables)
        if tuple(sorted(variables)) != variables:
            raise ValueError(f"variables must be name-sorted: {variables}")
        clean = {}
        for exps, coeff in terms.items():
            if len(exps) != len(variables):
                raise ValueError("exponent arity does not match variable arity")
            coeff = Fraction(coeff)
            if coeff:
                clean[tuple(exps)] = coeff
        self.variables = variables
        self.terms = clean

    # -- constructors ------------------------------------------------------
    @classmethod
    def const(cls, value) -> "Polynomial":
        value = Fraction(value)
        return cls((), {(): value} if value else {})

    @classmethod
    def var(cls, name: str) -> "Polynomial":
        return cls((name,), {(1,): Fraction(1)})

    @classmethod
    def variables_named(cls, *names: str) -> "tuple[Polynomial, ...]":
        return tuple(cls.var(n) for n in names)

    # -- alignment ---------------------------------------------------------
    def _expand_to(self, variables) -> dict:
        if variables == self.variables:
            return dict(self.terms)
        positions = [variables.index(v) for v in self.variables]
        out = {}
        for exps, coeff in self.terms.items():
            full = [0] * len(variables)
            for pos, e in zip(positions, exps):
                full[pos] = e
            out[tuple(full)] = coeff
        return out

    @staticmethod
    def _aligned(p: "Polynomial", q: "Polynomial"):
        variables = tuple(sorted(set(p.variables) | set(q.variables)))
        return variables, p._expand_to(variables), q._expand_to(variables)

    @classmethod
    def _wrap(cls, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.const(other)
        return None

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        variables, t1, t2 = self._aligned(self, o)
        for exps, coeff in t2.items():
            t1[exps] = t1.get(exps, Fraction(0)) + coeff
        return Polynomial(variables, t1)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        variables, t1, t2 = self._aligned(self, o)
        out: dict = {}
        for e1, c1 in t1.items():
            for e2, c2 in t2.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                acc = out.get(key, Fraction(0)) + c1 * c2
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        return Polynomial(variables, out)

    __rmul__ = __mul__

    def __pow__(self, exp: int):
        if not isinstance(exp, int) or exp < 0:
            return NotImplemented
        out = Polynomial.const(1)
        base = self
        while exp:
            if exp & 1:
                out = out * base
            base = base * base
            exp >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            inv = 1 / Fraction(other)
            return Polynomial(self.variables, {e: c * inv for e, c in self.terms.items()})
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return (self - o).is_zero()

    def __hash__(self):
        variables, terms, _ = self._aligned(self, Polynomial.const(0))
        used = [i for i in range(len(variables)) if any(e[i] for e in terms)]
        key = frozenset(
            (tuple(variables[i] for i in used), tuple(e[i] for i in used), c)
            for e, c in terms.items()
            for _ in (0,)
        )
        return hash(key)

    # -- calculus / evaluation ---------------------------------------------
    def derive(self, var: str) -> "Polynomial":
        if var not in self.variables:
            raise ValueError(f"unknown variable {var!r}; have {self.variables}")
        idx = self.variables.index(var)
        out = {}
        for exps, coeff in self.terms.items():
            e = exps[idx]
            if e:
                key = exps[:idx] + (e - 1,) + exps[idx + 1 :]
                out[key] = out.get(key, Fraction(0)) + coeff * e
        return Polynomial(self.variables, out)

    def eval(self, point: dict):
        """Evaluate at a full variable binding; values may be Fraction or QuadNum."""
        missing = [v for v in self.variables if v not in point]
        if missing:
            raise ValueError(f"unbound variables: {missing}")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(self.variables, exps):
                if e:
                    term = term * point[v] ** e
            total = term + total
        return total

    def subs(self, var: str, replacement) -> "Polynomial":
        """Substitute `replacement` (polynomial or scalar) for one variable."""
        rep = self._wrap(replacement)
        if rep is None:
            raise TypeError("replacement must be Polynomial or rational")
        if var not in self.variables:
            return self
        idx = self.variables.index(var)
        rest_vars = self.variables[:idx] + self.variables[idx + 1 :]
        by_power: dict = {}
        for exps, coeff in self.terms.items():
            key = exps[:idx] + exps[idx + 1 :]
            by_power.setdefault(exps[idx], {})[key] = coeff
        total = Polynomial.const(0)
        for power, terms in by_power.items():
            total = total + Polynomial(rest_vars, terms) * rep**power
        return total

    def degree(self, var: str | None = None) -> int:
        """Degree in `var` (or total degree); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.variables:
            return 0
        idx = self.variables.index(var)
        return max(e[idx] for e in self.terms)

    def coefficient(self, var: str, power: int) -> "Polynomial":
        """The polynomial coefficient of var**power."""
        if var not in self.variables:
            return self if power == 0 else Polynomial.const(0)
        idx = self.variables.index(var)
        rest = self.variables[:idx] + self.variables[idx + 1 :]
        out = {}
        for exps, coeff in self.terms.items():
            if exps[idx] == power:
                out[exps[:idx] + exps[idx + 1 :]] = coeff
        return Polynomial(rest, out)

    def divide_exact(self, divisor: "Polynomial") -> "Polynomial":
        """Exact quotient self/divisor; ExactDivisionError if it is not exact."""
        div = self._wrap(divisor)
        if div is None or div.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        variables, rem, dterms = self._aligned(self, div)
        lead_d = max(dterms, key=_order_key)
        lead_c = dterms[lead_d]
        quot: dict = {}
        while rem:
            lead_r = max(rem, key=_order_key)
            diff = tuple(r - d for r, d in zip(lead_r, lead_d))
            if any(d < 0 for d in diff):
                raise ExactDivisionError(
                    f"not divisible: leading term {lead_r} not a multiple of {lead_d}",
                    remainder=Polynomial(variables, rem),
                )
            q = rem[lead_r] / lead_c
            quot[diff] = quot.get(diff, Fraction(0)) + q
            for exps, coeff in dterms.items():
                key = tuple(a + b for a, b in zip(diff, exps))
                acc = rem.get(key, Fraction(0)) - q * coeff
                if acc:
                    rem[key] = acc
                else:
                    rem.pop(key, None)
        return Polynomial(variables, quot)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps in sorted(self.terms, key=_order_key, reverse=True):
            coeff = self.terms[exps]
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v for v, e in zip(self.variables, exps) if e
            )
            if mono:
                bits.append(f"({coeff})*{mono}" if coeff != 1 else mono)
            else:
                bits.append(f"({coeff})")
        return " + ".join(bits)


def poly_derive(p: Polynomial, var: str) -> Polynomial:
    """Exact partial derivative of `p` with respect to `var`."""
    return p.derive(var)


def poly_eval(p: Polynomial, point: dict):
    """Exact evaluation of `p`; values may live in Q or Q(sqrt(161))."""
    return p.eval(point)


# ---------------------------------------------------------------------------
# Rational functions (pairs of polynomials, no reduction)
# ---------------------------------------------------------------------------


class RationalFunc:
    """Quotient of polynomials; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        self.num = Polynomial._wrap(num)
        self.den = Polynomial._wrap(den)
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")

    @classmethod
    def _wrap(cls, other):
        if isinstance(other, RationalFunc):
            return other
        if isinstance(other, (Polynomial, int, Fraction)):
            return cls(other)
        return None

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return RationalFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return RationalFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero()

    def derive(self, var: str) -> "RationalFunc":
        num, den = self.num, self.den
        dn = num.derive(var) if var in num.variables else Polynomial.const(0)
        dd = den.derive(var) if var in den.variables else Polynomial.const(0)
        return RationalFunc(dn * den - num * dd, den * den)

    def subs(self, var: str, replacement) -> "RationalFunc":
        return RationalFunc(self.num.subs(var, replacement), self.den.subs(var, replacement))

    def eval(self, point: dict):
        den = self.den.eval(point)
        if (den.sign() if isinstance(den, QuadNum) else den) == 0:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return self.num.eval(point) / den

    def as_polynomial(self) -> Polynomial:
        """Exact polynomial value of the quotient (errors if not exact)."""
        return self.num.divide_exact(self.den)

    def __repr__(self):
        return f"({self.num!r}) / ({self.den!r})"


# ---------------------------------------------------------------------------
# The sparse-density analysis: f, Q, and its identity suite
# ---------------------------------------------------------------------------


def sparse_estimate() -> RationalFunc:
    """Closed-form bound f(rho, delta, e2) produced by combining three halves.

    Valid for triangle-free graphs with 0 <= rho, e2 <= delta <= 1/4; rho is
    the edge density, delta the maximum relative degree, e2 the largest
    relative degree inside the chosen vertex's neighborhood.
    """
    rho, delta, e2 = Polynomial.variables_named("rho", "delta", "e2")
    num = (1 - 2 * e2) * (
        4 * delta**2 * rho
        - 4 * delta**2 * e2
        + 4 * delta * rho * e2
        - 4 * delta * e2**2
        - 4 * delta * rho
        + 2 * delta * e2
        + rho
    )
    den = 8 * (1 + 2 * delta * e2 - delta - e2) * (1 - delta - e2)
    return RationalFunc(num, den)


def sparse_margin_denominator() -> Polynomial:
    """200*(1-delta-e2)*(1-delta-e2+2*delta*e2), the scale defining Q."""
    delta, e2 = Polynomial.variables_named("delta", "e2")
    return 200 * (1 - delta - e2) * (1 - delta - e2 + 2 * delta * e2)


def sparse_margin_poly(estimate: RationalFunc | None = None) -> Polynomial:
    """The margin polynomial Q with 1/50 - f = Q / sparse_margin_denominator().

    Raises ExactDivisionError if the scaled margin fails to be a polynomial
    (it must be, unless `estimate` was tampered with).
    """
    f = sparse_estimate() if estimate is None else estimate
    margin = (RationalFunc(Polynomial.const(Fraction(1, 50))) - f) * sparse_margin_denominator()
    return margin.as_polynomial()


def edge_split_coeffs() -> dict:
    """Combination coefficients for the three-halves argument, in (e1, e2).

    alpha0/alpha1/alpha2 weight the three half-bounds; gamma is the common
    coefficient they produce in front of the untouched density block.
    """
    e1, e2 = Polynomial.variables_named("e1", "e2")
    alpha0 = (1 - 2 * e1) ** 2 * (1 - 2 * e2)
    alpha1 = (1 - 2 * e1) * (1 - 2 * e2)
    alpha2 = 2 * (1 - 2 * e1) * e2
    gamma = RationalFunc(
        (1 - 2 * e1) * (1 - 2 * e2) * (1 - 4 * e1 + 4 * e1**2 + 4 * e1 * e2),
        2 * (1 - e1 - e2),
    )
    return {"alpha0": alpha0, "alpha1": alpha1, "alpha2": alpha2, "gamma": gamma}


def _rational_points(lo, hi, step: Fraction):
    """Exact grid: all integer multiples of `step` in (lo, hi), plus endpoints.

    `lo`/`hi` may be QuadNum; comparisons stay exact throughout.
    """
    lo_q = lo if isinstance(lo, QuadNum) else QuadNum(lo)
    hi_q = hi if isinstance(hi, QuadNum) else QuadNum(hi)
    points = [lo]
    k = (lo_q / QuadNum(step)).__floor__() + 1
    while True:
        x = k * step
        if QuadNum(x) >= hi_q:
            break
        points.append(x)
        k += 1
    points.append(hi)
    return points


def _e2_coefficients(q: Polynomial, rho_val, delta_val) -> list:
    """Coefficients [c0..cd] of q(rho_val, delta_val, e2) as a poly in e2."""
    out = [QuadNum(0)] * (q.degree("e2") + 1)
    for power in range(len(out)):
        coeff_poly = q.coefficient("e2", power)
        val = coeff_poly.eval({"rho": rho_val, "delta": delta_val})
        out[power] = val if isinstance(val, QuadNum) else QuadNum(val)
    return out


def _taylor_shift(coeffs: list, x0) -> list:
    """Taylor coefficients of sum(c_m x^m) around x = x0."""
    n = len(coeffs)
    shifted = []
    for r in range(n):
        acc = QuadNum(0)
        for m in range(r, n):
            acc = acc + comb(m, r) * coeffs[m] * x0 ** (m - r)
        shifted.append(acc)
    return shifted


def verify_sparse_identities(step: Fraction = Fraction(1, 100)) -> IdentityReport:
    """Re-derive and check every identity behind the sparse-density theorem.

    The checks cover the exact division defining Q, the factored form of
    dQ/drho, the degree profile, the vanishing at (rho0, rho0, rho0), the
    closed form of alpha0 - gamma, and the grid sign conditions that settle
    both cases of the final optimization.  `step` controls the rational grid density.
    """
    checks: list[CheckResult] = []
    f = sparse_estimate()

    def check_division():
        try:
            q = sparse_margin_poly(f)
            return "polynomial", "exact division", True and not q.is_zero()
        except ExactDivisionError as err:
            return f"remainder {err.remainder!r}", "exact division", False

    checks.append(run_check("sparse.q_is_polynomial",
                            "(1/50 - f) * 200*(1-d-e2)*(1-d-e2+2*d*e2) is a polynomial",
                            check_division))
    q = sparse_margin_poly(f)

    def check_drho():
        rho, delta, e2 = Polynomial.variables_named("rho", "delta", "e2")
        expected = -25 * (1 - 2 * e2) * (4 * delta**2 + 4 * delta * e2 - 4 * delta + 1)
        lhs = q.derive("rho")
        return repr(lhs), repr(expected), lhs == expected

    checks.append(run_check("sparse.dq_drho",
                            "dQ/drho = -25*(1-2e2)*(4d^2+4d*e2-4d+1)", check_drho))

    def check_degrees():
        degs = (q.degree("rho"), q.degree("delta"), q.degree("e2"))
        return str(degs), "(1, 2, 3)", degs == (1, 2, 3)

    checks.append(run_check("sparse.q_degrees",
                            "individual degrees of Q in (rho, delta, e2) are (1, 2, 3)",
                            check_degrees))

    def check_root():
        val = q.eval({"rho": RHO0, "delta": RHO0, "e2": RHO0})
        val = val if isinstance(val, QuadNum) else QuadNum(val)
        return str(val), "0", val.sign() == 0

    checks.append(run_check("sparse.q_vanishes_at_rho0",
                            f"Q(rho0, rho0, rho0) = 0 with rho0 = {RHO0_STR}", check_root))

    def check_alpha_gamma():
        e1, e2 = Polynomial.variables_named("e1", "e2")
        coeffs = edge_split_coeffs()
        lhs = RationalFunc(coeffs["alpha0"]) - coeffs["gamma"]
        rhs = RationalFunc(
            (1 - 2 * e1) * (1 - 2 * e2) * (1 - 2 * e1 - 2 * e2),
            2 * (1 - e1 - e2),
        )
        return repr(lhs), repr(rhs), lhs == rhs

    checks.append(run_check("sparse.alpha0_minus_gamma",
                            "alpha0 - gamma = (1-2e1)(1-2e2)(1-2e1-2e2) / (2(1-e1-e2))",
                            check_alpha_gamma))

    quarter = Fraction(1, 4)
    delta_grid = _rational_points(RHO0, quarter, step)

    def check_taylor():
        bad = []
        for dv in delta_grid:
            coeffs = _e2_coefficients(q, RHO0, dv)
            taylor = _taylor_shift(coeffs, RHO0)
            for r, c in enumerate(taylor):
                ok = c.sign() >= 0 if r % 2 == 0 else c.sign() < 0
                if not ok:
                    bad.append((dv, r, str(c)))
        return (f"{len(delta_grid)} grid points, {len(bad)} violations",
                "even r >= 0, odd r < 0", not bad)

    checks.append(run_check("sparse.taylor_signs",
                            "Taylor coefficients of Q1 at e2=rho0: nonneg for even r, "
                            "negative for odd r, for delta in [rho0, 1/4]",
                            check_taylor))

    def check_case2():
        dq_ddelta = q.derive("delta")
        bad = []
        for ev in _rational_points(RHO0, quarter, step):
            on_diag = q.eval({"rho": RHO0, "delta": ev, "e2": ev})
            at_quarter = q.eval({"rho": RHO0, "delta": quarter, "e2": ev})
            slope = dq_ddelta.eval({"rho": RHO0, "delta": ev, "e2": ev})
            for label, val in (("Q1(e2,e2)", on_diag), ("Q1(1/4,e2)", at_quarter),
                               ("dQ1/ddelta|d=e2", slope)):
                val = val if isinstance(val, QuadNum) else QuadNum(val)
                if val.sign() < 0:
                    bad.append((ev, label, str(val)))
        return (f"{len(bad)} violations", ">= 0 on grid", not bad)

    checks.append(run_check("sparse.case2_boundary",
                            "Q1(e2,e2) >= 0, Q1(1/4,e2) >= 0, dQ1/ddelta|_{delta=e2} >= 0 "
                            "for e2 in [rho0, 1/4]",
                            check_case2))

    return IdentityReport("sparse-identities", checks)
