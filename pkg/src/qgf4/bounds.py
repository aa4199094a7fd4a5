"""Upper bounds on quantum codes: Krawtchouk polynomials, the sphere-packing
and Singleton bounds, shadows, an exact linear-programming feasibility test,
and the structure results for self-dual weight enumerators."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Sequence

from .addcode import AdditiveCode, WeightEnumerator, is_self_dual, weight_distribution


def krawtchouk(j: int, x: int, n: int) -> int:
    """P_j(x, n) = sum_s (-1)^s 3^(j-s) C(x, s) C(n-x, j-s)."""
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= n, got j={j}, n={n}")
    return sum((-1) ** s * 3 ** (j - s) * comb(x, s) * comb(n - x, j - s) for s in range(j + 1))


def krawtchouk_matrix(n: int) -> list[list[int]]:
    """Row j, column r holds P_j(r, n)."""
    return [[krawtchouk(j, r, n) for r in range(n + 1)] for j in range(n + 1)]


def sphere_packing_ok(n: int, k: int, d: int) -> bool:
    """sum_{j<=t} 3^j C(n,j) <= 2^(n-k) with t = (d-1)//2 (pure codes)."""
    t = (d - 1) // 2
    return sum(3**j * comb(n, j) for j in range(t + 1)) <= 2 ** (n - k)


def singleton_ok(n: int, k: int, d: int, pure: bool = False) -> bool:
    """n >= 4e + k for every code; additionally k <= n - 2d + 2 when pure."""
    e = (d - 1) // 2
    if n < 4 * e + k:
        return False
    return not pure or k <= n - 2 * d + 2


def _expand(n: int, coeffs: Sequence, sign: int) -> list[Fraction]:
    """sum_r c_r ((1+3y)/2)^(n-r) ((sign*(y-1))/2)^r as coefficients in y.

    sign=+1 gives the shadow transform, sign=-1 the MacWilliams transform."""
    out = [Fraction(0)] * (n + 1)
    for r, c in enumerate(coeffs):
        if not c:
            continue
        poly = [Fraction(c)]
        for _ in range(n - r):
            poly = _mul_linear(poly, 1, 3)
        for _ in range(r):
            poly = _mul_linear(poly, -sign, sign)
        for i, v in enumerate(poly):
            out[i] += v
    return [v / 2**n for v in out]


def _mul_linear(p: list[Fraction], a: int, b: int) -> list[Fraction]:
    """p(y) * (a + b y)."""
    out = [Fraction(0)] * (len(p) + 1)
    for i, v in enumerate(p):
        out[i] += a * v
        out[i + 1] += b * v
    return out


def shadow_enumerator(W: WeightEnumerator | Sequence[int], k: int) -> list[Fraction]:
    """Coefficients S_j of S(x,y) = 2^k W((x+3y)/2, (y-x)/2)."""
    coeffs = W.coeffs if isinstance(W, WeightEnumerator) else list(W)
    n = len(coeffs) - 1
    return [Fraction(2) ** k * v for v in _expand(n, coeffs, +1)]


# ---------------------------------------------------------------------------
# exact simplex


@dataclass
class Constraint:
    coeffs: list[Fraction]
    sense: str  # '=', '<=', '>='
    rhs: Fraction
    label: str


@dataclass
class Farkas:
    """Multipliers y with y^T A <= 0 (over x >= 0), the sign pattern of the
    senses respected, and y^T b > 0; no x >= 0 can then satisfy A x ~ b."""

    y: list[Fraction]

    def check(self, rows: Sequence[Constraint]) -> bool:
        if len(self.y) != len(rows):
            return False
        nv = len(rows[0].coeffs) if rows else 0
        for yi, row in zip(self.y, rows):
            if row.sense == "<=" and yi > 0:
                return False
            if row.sense == ">=" and yi < 0:
                return False
        for j in range(nv):
            if sum(yi * row.coeffs[j] for yi, row in zip(self.y, rows)) > 0:
                return False
        return sum(yi * row.rhs for yi, row in zip(self.y, rows)) > 0


def satisfies(rows: Sequence[Constraint], x: Sequence[Fraction]) -> bool:
    if any(v < 0 for v in x):
        return False
    for row in rows:
        lhs = sum(c * v for c, v in zip(row.coeffs, x))
        if row.sense == "=" and lhs != row.rhs:
            return False
        if row.sense == "<=" and lhs > row.rhs:
            return False
        if row.sense == ">=" and lhs < row.rhs:
            return False
    return True


def simplex_feasible(rows: Sequence[Constraint], nvars: int) -> tuple[bool, list[Fraction] | Farkas]:
    """Phase-1 simplex over Fractions with Bland's rule.

    Returns (True, x) with x >= 0 satisfying every row, or (False, Farkas).
    """
    m = len(rows)
    slack_of = {}
    ns = 0
    for i, row in enumerate(rows):
        if row.sense != "=":
            slack_of[i] = nvars + ns
            ns += 1
    width = nvars + ns + m
    flip = []
    T: list[list[Fraction]] = []
    for i, row in enumerate(rows):
        t = [Fraction(0)] * (width + 1)
        for j, c in enumerate(row.coeffs):
            t[j] = Fraction(c)
        if row.sense == "<=":
            t[slack_of[i]] = Fraction(1)
        elif row.sense == ">=":
            t[slack_of[i]] = Fraction(-1)
        t[width] = Fraction(row.rhs)
        neg = t[width] < 0
        if neg:
            t = [-v for v in t]
        flip.append(neg)
        t[nvars + ns + i] = Fraction(1)
        T.append(t)
    basis = [nvars + ns + i for i in range(m)]
    art0 = nvars + ns
    cost = [Fraction(0)] * art0 + [Fraction(1)] * m

    while True:
        # reduced costs r_j = c_j - c_B . column_j
        enter = None
        for j in range(width):
            if j in basis:
                continue
            r = cost[j] - sum(cost[basis[i]] * T[i][j] for i in range(m) if T[i][j])
            if r < 0:
                enter = j
                break
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][width] / T[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise AssertionError("phase-1 objective is bounded below; cannot be unbounded")
        piv = T[leave][enter]
        prow = [v / piv for v in T[leave]]
        T[leave] = prow
        for i in range(m):
            if i != leave and T[i][enter]:
                f = T[i][enter]
                T[i] = [a - f * b for a, b in zip(T[i], prow)]
        basis[leave] = enter

    value = sum(T[i][width] for i in range(m) if basis[i] >= art0)
    if value == 0:
        x = [Fraction(0)] * nvars
        for i, b in enumerate(basis):
            if b < nvars:
                x[b] = T[i][width]
        return True, x
    # y = c_B B^-1, read off the artificial columns
    y = []
    for i in range(m):
        yi = sum(cost[basis[r]] * T[r][art0 + i] for r in range(m))
        y.append(-yi if flip[i] else yi)
    return False, Farkas(y)


# ---------------------------------------------------------------------------
# the LP for [[n, k, d]]


@dataclass
class LpProblem:
    """Constraints on A_2..A_n (A_0 = 1 and A_1 = 0 folded in) for one
    branch of the even-subcode condition.

    branch 1: the even words are half of C and the shadow is nonnegative;
    branch 2: every word of C is even.
    """

    n: int
    k: int
    d: int
    pure: bool
    branch: int
    rows: list[Constraint] = field(default_factory=list)

    @property
    def size(self) -> int:
        return 2 ** (self.n - self.k)

    def full_distribution(self, x: Sequence[Fraction]) -> list[Fraction]:
        return [Fraction(1), Fraction(0)] + list(x)


def _dual_row(P: list[list[int]], j: int, size: int, n: int, signed: bool = False) -> tuple[list[Fraction], Fraction]:
    """A'_j (or S_j when signed) as (coefficients on A_2..A_n, constant)."""
    sgn = [(-1) ** r if signed else 1 for r in range(n + 1)]
    coeffs = [Fraction(P[j][r] * sgn[r], size) for r in range(2, n + 1)]
    return coeffs, Fraction(P[j][0] * sgn[0], size)


def build_lp(n: int, k: int, d: int, pure: bool, branch: int) -> LpProblem:
    if not 2 <= d <= n:
        raise ValueError(f"need 2 <= d <= n, got d={d}, n={n}")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}")
    if branch not in (1, 2):
        raise ValueError("branch is 1 or 2")
    prob = LpProblem(n, k, d, pure, branch)
    size = prob.size
    P = krawtchouk_matrix(n)
    nv = n - 1
    rows = prob.rows

    def unit(r: int) -> list[Fraction]:
        v = [Fraction(0)] * nv
        v[r - 2] = Fraction(1)
        return v

    rows.append(Constraint([Fraction(1)] * nv, "=", Fraction(size - 1), "total"))
    for j in range(n + 1):
        dc, d0 = _dual_row(P, j, size, n)
        own = unit(j) if j >= 2 else [Fraction(0)] * nv
        own_const = Fraction(1) if j == 0 else Fraction(0)
        coeffs = [a - b for a, b in zip(own, dc)]
        rhs = d0 - own_const
        if j < d:
            rows.append(Constraint(coeffs, "=", rhs, f"A{j}=A'{j}"))
        else:
            rows.append(Constraint(coeffs, "<=", rhs, f"A{j}<=A'{j}"))
    # with k = 0 the distance is the least weight of C itself
    if pure or k == 0:
        for j in range(2, d):
            rows.append(Constraint(unit(j), "=", Fraction(0), f"pure A{j}=0"))
    even = [Fraction(1 if r % 2 == 0 else 0) for r in range(2, n + 1)]
    if branch == 1:
        if size % 2:
            rows.append(Constraint([Fraction(0)] * nv, "=", Fraction(1), "even half impossible"))
        else:
            rows.append(Constraint(even, "=", Fraction(size // 2 - 1), "even=half"))
        for j in range(n + 1):
            sc, s0 = _dual_row(P, j, size, n, signed=True)
            rows.append(Constraint(sc, ">=", -s0, f"S{j}>=0"))
    else:
        rows.append(Constraint(even, "=", Fraction(size - 1), "even=all"))
    return prob


@dataclass
class LpResult:
    n: int
    k: int
    d: int
    pure: bool
    feasible: bool
    branch: int | None = None
    witness: list[Fraction] | None = None
    certificates: dict[int, Farkas] = field(default_factory=dict)
    problems: dict[int, LpProblem] = field(default_factory=dict)

    def verify(self) -> bool:
        """Re-check the witness or every branch certificate from scratch."""
        if self.feasible:
            prob = self.problems[self.branch]
            return satisfies(prob.rows, self.witness[2:]) and witness_consistent(prob, self.witness)
        return all(self.certificates[b].check(self.problems[b].rows) for b in self.problems)


def witness_consistent(prob: LpProblem, A: Sequence[Fraction]) -> bool:
    """A' recomputed by the MacWilliams transform obeys the same conditions."""
    n, size = prob.n, prob.size
    dual = [Fraction(2) ** n / size * v for v in _expand(n, A, -1)]
    if dual[0] != 1:
        return False
    for j in range(n + 1):
        if j < prob.d and A[j] != dual[j]:
            return False
        if j >= prob.d and A[j] > dual[j]:
            return False
    if prob.branch == 1:
        shadow = shadow_enumerator(A, prob.k)
        return all(s >= 0 for s in shadow)
    return all(A[r] == 0 for r in range(1, n + 1, 2))


def lp_feasible(n: int, k: int, d: int, pure: bool = False, K_override: Fraction | None = None):
    """Decide the LP for [[n,k,d]].

    With K_override the enumerator form is used instead, with 2^k replaced
    by K (the form that also covers codes that are not additive); the
    result is then an EnumeratorLpResult.
    """
    if K_override is not None:
        return lp_enumerator_feasible(n, d, Fraction(K_override), pure=pure)
    res = LpResult(n, k, d, pure, feasible=False)
    for branch in (1, 2):
        prob = build_lp(n, k, d, pure, branch)
        res.problems[branch] = prob
        ok, out = simplex_feasible(prob.rows, n - 1)
        if ok:
            res.feasible = True
            res.branch = branch
            res.witness = prob.full_distribution(out)
            return res
        res.certificates[branch] = out
    return res


# ---------------------------------------------------------------------------
# enumerator form: W, W-perp = K W((x+3y)/2, (x-y)/2), S = K W((x+3y)/2, (y-x)/2)


@dataclass
class EnumeratorLpResult:
    n: int
    K: Fraction
    d: int
    feasible: bool
    witness: list[Fraction] | None = None
    certificate: Farkas | None = None
    rows: list[Constraint] = field(default_factory=list)

    def verify(self) -> bool:
        if self.feasible:
            return satisfies(self.rows, self.witness)
        return self.certificate.check(self.rows)


def build_enumerator_lp(n: int, d: int, K: Fraction, pure: bool = False, a1_zero: bool = False) -> list[Constraint]:
    """Rows over A_0..A_n: A_0 = 1, W-perp(1,0) = 1, W-perp - W = O(y^d),
    W-perp - W >= 0 and S >= 0."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    if K <= 0:
        raise ValueError("K must be positive")
    P = krawtchouk_matrix(n)
    scale = K / 2**n
    nv = n + 1
    rows = []
    e0 = [Fraction(0)] * nv
    e0[0] = Fraction(1)
    rows.append(Constraint(e0, "=", Fraction(1), "A0=1"))
    for j in range(n + 1):
        dual = [scale * P[j][r] for r in range(nv)]
        diff = [dv - (1 if r == j else 0) for r, dv in enumerate(dual)]
        if j == 0:
            rows.append(Constraint(dual, "=", Fraction(1), "W'(1,0)=1"))
        elif j < d:
            rows.append(Constraint(diff, "=", Fraction(0), f"A'{j}=A{j}"))
        else:
            rows.append(Constraint(diff, ">=", Fraction(0), f"A'{j}>=A{j}"))
        shadow = [scale * P[j][r] * (-1) ** r for r in range(nv)]
        rows.append(Constraint(shadow, ">=", Fraction(0), f"S{j}>=0"))
    if pure or a1_zero:
        stop = d if pure else 2
        for j in range(1, stop):
            e = [Fraction(0)] * nv
            e[j] = Fraction(1)
            rows.append(Constraint(e, "=", Fraction(0), f"A{j}=0"))
    return rows


def lp_enumerator_feasible(n: int, d: int, K: Fraction, pure: bool = False, a1_zero: bool = False) -> EnumeratorLpResult:
    rows = build_enumerator_lp(n, d, Fraction(K), pure, a1_zero)
    ok, out = simplex_feasible(rows, n + 1)
    if ok:
        return EnumeratorLpResult(n, Fraction(K), d, True, witness=out, rows=rows)
    return EnumeratorLpResult(n, Fraction(K), d, False, certificate=out, rows=rows)


def lp_max_distance(n: int, k: int, pure: bool = False) -> int:
    """Largest d in [1, n] not excluded by the LP (d = 1 is never excluded)."""
    best = 1
    for d in range(2, n + 1):
        if lp_feasible(n, k, d, pure).feasible:
            best = d
        else:
            break
    return best


def format_fraction_vector(v: Sequence[Fraction]) -> str:
    return " ".join(str(x) for x in v)


# ---------------------------------------------------------------------------
# self-dual enumerators


def _poly_pow(p: list[int], e: int) -> list[int]:
    out = [1]
    for _ in range(e):
        nxt = [0] * (len(out) + len(p) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(p):
                nxt[i + j] += a * b
        out = nxt
    return out


def _poly_mul_int(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def gleason_basis(n: int, even: bool) -> list[list[int]]:
    """Monomials of the invariant ring in degree n, as coefficient lists in
    y (x set to 1): (x+y)^a (x^2+3y^2)^b, or for even codes
    (x^2+3y^2)^a (y^2(x^2-y^2)^2)^b."""
    out = []
    if even:
        if n % 2:
            return []
        g1 = [1, 0, 3]
        g2 = [0, 0, 1, 0, -2, 0, 1]
        for b in range(n // 6 + 1):
            a2 = n - 6 * b
            out.append(_poly_mul_int(_poly_pow(g1, a2 // 2), _poly_pow(g2, b)))
    else:
        for b in range(n // 2 + 1):
            out.append(_poly_mul_int(_poly_pow([1, 1], n - 2 * b), _poly_pow([1, 0, 3], b)))
    return [(v + [0] * (n + 1))[: n + 1] for v in out]


def solve_exact(columns: list[list[int]], target: Sequence[int]) -> list[Fraction] | None:
    """Exact solution c of sum_i c_i columns[i] = target, or None."""
    m = len(target)
    nc = len(columns)
    M = [[Fraction(columns[i][r]) for i in range(nc)] + [Fraction(target[r])] for r in range(m)]
    piv_cols = []
    row = 0
    for c in range(nc):
        p = next((r for r in range(row, m) if M[r][c] != 0), None)
        if p is None:
            continue
        M[row], M[p] = M[p], M[row]
        pv = M[row][c]
        M[row] = [v / pv for v in M[row]]
        for r in range(m):
            if r != row and M[r][c] != 0:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[row])]
        piv_cols.append(c)
        row += 1
    if any(M[r][nc] != 0 for r in range(row, m)):
        return None
    sol = [Fraction(0)] * nc
    for r, c in enumerate(piv_cols):
        sol[c] = M[r][nc]
    return sol


def gleason_decompose(W: WeightEnumerator | Sequence[int], even: bool = False) -> list[Fraction] | None:
    """Coefficients expressing W in the invariant basis, or None when W is
    not of that form."""
    coeffs = list(W.coeffs if isinstance(W, WeightEnumerator) else W)
    n = len(coeffs) - 1
    basis = gleason_basis(n, even)
    if not basis:
        return None
    return solve_exact(basis, coeffs)


def selfdual_distance_bound(n: int, even: bool = False) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return 2 * (n // 6) + 2 if even else n // 2 + 1


def divisibility_constant(C: AdditiveCode, budget: int | None = None) -> int:
    """gcd of the nonzero codeword weights of a self-dual code."""
    if not is_self_dual(C):
        raise ValueError("code is not self-dual")
    g = 0
    for w in weight_distribution(C, budget).support():
        if w:
            g = gcd(g, w)
    return g


def clifford_orders(n: int) -> tuple[int, int]:
    """(|L|, |L_R|) for the complex and real Clifford groups on n qubits."""
    if n < 1:
        raise ValueError("n must be positive")
    prod = 1
    for j in range(1, n + 1):
        prod *= 4**j - 1
    L = 2 ** (n * n + 2 * n + 3) * prod
    prod_r = 1
    for j in range(1, n):
        prod_r *= 4**j - 1
    LR = 2 ** (n * n + n + 2) * (2**n - 1) * prod_r
    return L, LR
