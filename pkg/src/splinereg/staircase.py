"""Initial ideals of ideals generated by (r+1)-st powers of distinct-slope
linear forms in two variables.

The closed forms (the lambda staircase, its colon by z^{r+1}, and the pruned
union that presents the homology quotient) are each paired with an oracle
that recomputes them from scratch by exact rank computations on
coefficient matrices, so every formula is checked against brute force.

Slope conventions: a form is first_var + c * z; the x-side of a
configuration carries a-1 distinct slopes, the y-side b-1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm

from ._echelon import DenseIntEchelon
from .errors import DuplicateSlope, InvalidSlopeCount
from .monomials import Monomial, MonomialIdeal, ideal_sum, minimalize
from .ratlinalg import RatMatrix, pivot_rows


@dataclass(frozen=True)
class Staircase:
    """The z-exponent profile lambda_0..lambda_r of In<(x+c_1 z)^{r+1}, ...>,
    plus the implicit pure power x^{r+1}."""

    r: int
    s: int
    lam: tuple[int, ...]

    def ideal(self, axis: str = "x") -> MonomialIdeal:
        gens = [_axis_monomial(axis, self.r + 1, 0)]
        gens += [_axis_monomial(axis, i, self.lam[i]) for i in range(self.r + 1)]
        return minimalize(gens)


@dataclass(frozen=True)
class ColonStaircase:
    """lambda'_i = max(0, lambda_i - r - 1) on 0..i0, i0 = floor((r+1)/s)."""

    r: int
    s: int
    i0: int
    lam_prime: tuple[int, ...]

    def ideal(self, axis: str = "x") -> MonomialIdeal:
        gens = [_axis_monomial(axis, i, self.lam_prime[i]) for i in range(self.i0 + 1)]
        return minimalize(gens)

    @property
    def is_trivial(self) -> bool:
        return self.i0 == 0


@dataclass(frozen=True)
class QData:
    """The two colon staircases (x,z)/(y,z), the pruning index l0, and the
    minimalized union In Q.  Inputs arriving with a > b are swapped so the
    x-side always carries the smaller slope count; `swapped` records it."""

    a: int
    b: int
    r: int
    colon1: ColonStaircase
    colon2: ColonStaircase
    l0: int
    in_q: MonomialIdeal
    swapped: bool

    @property
    def i0(self) -> int:
        return self.colon1.i0

    @property
    def j0(self) -> int:
        return self.colon2.i0

    @property
    def is_trivial(self) -> bool:
        return self.in_q.is_trivial


def _axis_monomial(axis: str, main: int, zexp: int) -> Monomial:
    if axis == "x":
        return Monomial(ex=main, ez=zexp)
    if axis == "y":
        return Monomial(ey=main, ez=zexp)
    raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")


def staircase_closed_form(r: int, s: int) -> Staircase:
    """lambda_i = (r-i+1) + floor((r-i)/(s-1)): steps of 1 widening to 2 at
    every (s-1)-st step, ending at lambda_r = 1."""
    if r < 0:
        raise ValueError("r must be >= 0")
    if s < 2:
        raise InvalidSlopeCount(f"need at least 2 distinct slopes, got {s}")
    lam = tuple((r - i + 1) + (r - i) // (s - 1) for i in range(r + 1))
    assert lam[-1] == 1 and lam[0] == r + 1 + r // (s - 1)
    assert all(lam[i] > lam[i + 1] for i in range(r))
    return Staircase(r, s, lam)


def colon_staircase(st: Staircase) -> ColonStaircase:
    """The staircase of In(J') : z^{r+1}; i0 is the least i with lambda_i <= r+1."""
    r = st.r
    i0 = next(i for i in range(r + 1) if st.lam[i] <= r + 1)
    assert i0 == (r + 1) // st.s
    lam_prime = tuple(max(0, st.lam[i] - r - 1) for i in range(i0 + 1))
    assert lam_prime[-1] == 0
    assert all(lam_prime[i] > lam_prime[i + 1] for i in range(i0))
    return ColonStaircase(r, st.s, i0, lam_prime)


def build_q(a: int, b: int, r: int) -> QData:
    """Colon staircases at both vertices and their minimalized sum In Q,
    with the x-generators below l0 pruned away by z^{eta'_0}."""
    if a < 3 or b < 3:
        raise InvalidSlopeCount(f"need a, b >= 3, got ({a}, {b})")
    if r < 0:
        raise ValueError("r must be >= 0")
    swapped = a > b
    if swapped:
        a, b = b, a
    colon1 = colon_staircase(staircase_closed_form(r, a - 1))
    colon2 = colon_staircase(staircase_closed_form(r, b - 1))
    in_q = ideal_sum(colon1.ideal("x"), colon2.ideal("y"))
    if in_q.is_trivial:
        return QData(a, b, r, colon1, colon2, 0, in_q, swapped)
    eta0 = colon2.lam_prime[0]
    l0 = next(i for i in range(colon1.i0 + 1) if colon1.lam_prime[i] < eta0)
    expected = {_axis_monomial("x", i, colon1.lam_prime[i]) for i in range(l0, colon1.i0 + 1)}
    expected |= {_axis_monomial("y", j, colon2.lam_prime[j]) for j in range(colon2.i0 + 1)}
    assert set(in_q.gens) == expected, "pruned generator list disagrees with minimalize"
    return QData(a, b, r, colon1, colon2, l0, in_q, swapped)


# ---------------------------------------------------------------------------
# oracles


def _check_slopes(slopes):
    slopes = [Fraction(c) for c in slopes]
    if not slopes:
        raise InvalidSlopeCount("need at least one slope")
    if len(set(slopes)) != len(slopes):
        raise DuplicateSlope(f"repeated slope in {slopes}")
    return slopes


def _power_matrix(r: int, slopes, d: int) -> RatMatrix:
    """Columns are (v + c*z)^{r+1} times the degree-(d-r-1) monomials, in the
    two-variable basis (v^d, v^{d-1} z, ..., z^d)."""
    rows = d + 1
    cols = []
    binoms = [comb(r + 1, m) for m in range(r + 2)]
    for c in slopes:
        powers = [c**m for m in range(r + 2)]
        for k in range(d - r):
            col = [Fraction(0)] * rows
            for m in range(r + 2):
                col[m + k] = Fraction(binoms[m]) * powers[m]
            cols.append(col)
    ent = tuple(cols[j][i] for i in range(rows) for j in range(len(cols)))
    return RatMatrix(rows, len(cols), ent)


def default_oracle_bound(r: int, s: int) -> int:
    """Past lambda_0 the staircase is complete; +2 guards off-by-one."""
    if s < 2:
        return r + 1
    return r + 1 + r // (s - 1) + 2


def initial_ideal_oracle(r, slopes, d_max=None, axis: str = "x") -> MonomialIdeal:
    """In<(v+c_i z)^{r+1}> recomputed degree by degree: pivot rows of the
    coefficient matrix are the leading monomials, and new minimal generators
    are the ones no earlier generator divides."""
    slopes = _check_slopes(slopes)
    if d_max is None:
        d_max = default_oracle_bound(r, len(slopes))
    gens: list[Monomial] = []
    for d in range(r + 1, d_max + 1):
        mat = _power_matrix(r, slopes, d)
        for t in pivot_rows(mat):
            m = _axis_monomial(axis, d - t, t)
            if not any(g.divides(m) for g in gens):
                gens.append(m)
    return minimalize(gens)


# -- colon membership machinery (Fraction-level, desk scale) ----------------


def _first_nonzero(vec):
    for i, v in enumerate(vec):
        if v:
            return i
    return None


def _reduce_against(vec, ech):
    """Eliminate vec against an echelon dict {lead: vector}; returns the
    reduced vector whose first nonzero index (if any) is not a pivot."""
    vec = list(vec)
    i = _first_nonzero(vec)
    while i is not None and i in ech:
        piv = ech[i]
        cf = vec[i] / piv[i]
        vec = [a - cf * b for a, b in zip(vec, piv)]
        i = _first_nonzero(vec)
    return vec


def colon_degree_basis(r, slopes, e: int):
    """Echelonized basis of (J' : z^{r+1})_e as two-variable coefficient
    vectors over (v^e, v^{e-1} z, ..., z^e): all f with z^{r+1} f in J'.

    Solved by reducing the shifted basis vectors against J'_{e+r+1} and
    taking the kernel of the residuals.
    """
    slopes = _check_slopes(slopes)
    if e < 0:
        return []
    mat = _power_matrix(r, slopes, e + r + 1)
    ech: dict[int, list[Fraction]] = {}
    for j in range(mat.cols):
        col = _reduce_against(mat.column(j), ech)
        lead = _first_nonzero(col)
        if lead is not None:
            ech[lead] = col
    rows = e + r + 2
    res_ech: dict[int, tuple[list[Fraction], list[Fraction]]] = {}
    kernel: list[list[Fraction]] = []
    for i in range(e + 1):
        shifted = [Fraction(0)] * rows
        shifted[i + r + 1] = Fraction(1)
        rho = _reduce_against(shifted, ech)
        combo = [Fraction(0)] * (e + 1)
        combo[i] = Fraction(1)
        lead = _first_nonzero(rho)
        while lead is not None and lead in res_ech:
            prho, pcombo = res_ech[lead]
            cf = rho[lead] / prho[lead]
            rho = [a - cf * b for a, b in zip(rho, prho)]
            combo = [a - cf * b for a, b in zip(combo, pcombo)]
            lead = _first_nonzero(rho)
        if lead is None:
            kernel.append(combo)
        else:
            res_ech[lead] = (rho, combo)
    # echelonize the kernel in the two-variable coordinates for stable leads
    out: dict[int, list[Fraction]] = {}
    for combo in kernel:
        vec = _reduce_against(combo, out)
        lead = _first_nonzero(vec)
        if lead is not None:
            out[lead] = [v / vec[lead] for v in vec]
    return [out[k] for k in sorted(out)]


def colon_initial_oracle(r, slopes, d_max=None, axis: str = "x") -> MonomialIdeal:
    """In(J' : z^{r+1}) computed from the colon subspaces themselves, never
    from the staircase closed form."""
    slopes = _check_slopes(slopes)
    if d_max is None:
        cs = colon_staircase(staircase_closed_form(r, len(slopes)))
        d_max = max((g.degree for g in cs.ideal().gens), default=0) + 2
    gens: list[Monomial] = []
    for e in range(d_max + 1):
        for vec in colon_degree_basis(r, slopes, e):
            t = _first_nonzero(vec)
            m = _axis_monomial(axis, e - t, t)
            if not any(g.divides(m) for g in gens):
                gens.append(m)
        if gens and gens[0].degree == 0:
            break  # unit ideal, nothing more to find
    return minimalize(gens)


# -- sum oracle --------------------------------------------------------------


def _monomial_index(ex: int, ey: int, d: int) -> int:
    """Position of x^ex y^ey z^(d-ex-ey) in the lex-descending degree-d list."""
    k = d - ex
    return k * (k + 1) // 2 + (k - ey)


def _clear_fractions(vec):
    den = 1
    for v in vec:
        if v:
            den = lcm(den, v.denominator)
    return [int(v * den) for v in vec]


def sum_initial_oracle(r, slopes1, slopes2, d_max=None) -> MonomialIdeal:
    """In(Q(v1) + Q(v2)) recomputed from the colon subspaces: per degree the
    column space is spanned by last degree's pivot vectors times x, y, z plus
    the new colon basis elements on each side; pivot rows are the leading
    monomials."""
    slopes1 = _check_slopes(slopes1)
    slopes2 = _check_slopes(slopes2)
    if d_max is None:
        q = build_q(len(slopes1) + 1, len(slopes2) + 1, r)
        d_max = max((g.degree for g in q.in_q.gens), default=0) + 2
    gens: list[Monomial] = []
    carried: list[tuple[int, list[int]]] = []  # (degree d-1 index vectors)
    for d in range(d_max + 1):
        n = (d + 2) * (d + 1) // 2
        ech = DenseIntEchelon(n)
        for prev_vec in carried:
            for var in range(3):
                vec = [0] * n
                for idx, val in enumerate(prev_vec):
                    if val:
                        ex, ey = _index_to_exps(idx, d - 1)
                        if var == 0:
                            ex += 1
                        elif var == 1:
                            ey += 1
                        vec[_monomial_index(ex, ey, d)] = val
                ech.insert(vec)
        for axis, slopes in (("x", slopes1), ("y", slopes2)):
            for bvec in colon_degree_basis(r, slopes, d):
                ivec = _clear_fractions(bvec)
                vec = [0] * n
                for t, val in enumerate(ivec):
                    if val:
                        ex = d - t if axis == "x" else 0
                        ey = 0 if axis == "x" else d - t
                        vec[_monomial_index(ex, ey, d)] = val
                ech.insert(vec)
        for lead in ech.pivot_rows():
            ex, ey = _index_to_exps(lead, d)
            m = Monomial(ex, ey, d - ex - ey)
            if not any(g.divides(m) for g in gens):
                gens.append(m)
        if gens and gens[0].degree == 0:
            break
        carried = ech.pivot_vectors()
    return minimalize(gens)


def _index_to_exps(idx: int, d: int) -> tuple[int, int]:
    k = 0
    while (k + 1) * (k + 2) // 2 <= idx:
        k += 1
    rem = idx - k * (k + 1) // 2
    ex = d - k
    ey = k - rem
    return ex, ey
