"""Independent oracles that pin every closed form to first principles.

The enumeration oracle rebuilds the semigroup point by point inside a box;
the truncated-series oracle expands the rational Hilbert form inside the same
box; the complex checker multiplies the stored resolution matrices out and
evaluates the named minors. None of these reuse the closed forms they judge.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .closed_forms import (
    GradedResolution,
    HilbertSeriesForm,
    apery_extended,
    extended_betti,
    extended_generating_set,
    generating_set,
    gluing_data,
    hilbert_numerator,
    progression_ring,
    regularity,
    regularity_from_resolution,
    resolution,
)
from .errors import InfiniteDimension
from .lattice import Vec2
from .polynomials import (
    Polynomial,
    buchberger,
    family_grading,
    family_ring,
    grevlex,
    ideal_equal,
    is_groebner_basis,
    is_quadratic,
    leading_term,
    monic,
    standard_monomials,
    toric_kernel,
    vanishes_under_degree_map,
)
from .semigroup import (
    SemigroupFamily,
    apery_bruteforce,
    apery_closed_form,
    cm_type,
    degree_in_rays,
    is_cohen_macaulay,
    is_normal,
    member_certificate,
    quasi_frobenius,
)


@dataclass(frozen=True)
class EnumerationBox:
    cap_x: int
    cap_y: int

    def __post_init__(self):
        if self.cap_x <= 0 or self.cap_y <= 0:
            raise ValueError("box caps must be positive")


def default_box(f: SemigroupFamily) -> EnumerationBox:
    # 3x the largest generator coordinate covers every stored syzygy degree.
    cap = 3 * max(max(g.x, g.y) for g in f.all_generators)
    return EnumerationBox(cap, cap)


@dataclass(frozen=True)
class TruncatedSeries:
    box: EnumerationBox
    coefficients: dict[Vec2, int]

    def coefficient(self, v: Vec2) -> int:
        return self.coefficients.get(v, 0)


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: Optional[str] = None
    elapsed: float = 0.0


@dataclass
class Report:
    family: SemigroupFamily
    checks: list[CheckResult] = field(default_factory=list)
    flags: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


@dataclass(frozen=True)
class VerifyOptions:
    box: Optional[EnumerationBox] = None
    include_toric: bool = True
    include_truncation: bool = True
    apery_cap: Optional[int] = None


# ---------------------------------------------------------------------------
# enumeration and series oracles


def enumerate_semigroup(f: SemigroupFamily, box: EnumerationBox) -> list[Vec2]:
    """Every semigroup point inside the box, by dynamic programming: a point
    is reachable iff it is the origin or some generator steps back to a
    reachable point."""
    gens = f.all_generators
    nx, ny = box.cap_x, box.cap_y
    reach = [[False] * (ny + 1) for _ in range(nx + 1)]
    reach[0][0] = True
    for x in range(nx + 1):
        row = reach[x]
        for y in range(ny + 1):
            if x == 0 and y == 0:
                continue
            for g in gens:
                px, py = x - g.x, y - g.y
                if px >= 0 and py >= 0 and reach[px][py]:
                    row[y] = True
                    break
    return [Vec2(x, y) for x in range(nx + 1) for y in range(ny + 1) if reach[x][y]]


def expand_series(form: HilbertSeriesForm, box: EnumerationBox) -> TruncatedSeries:
    """Expand numerator / prod(1 - t^g) as a power series inside the box.

    Each denominator factor is applied as an in-place geometric-series pass;
    numerator terms outside the box cannot influence coefficients inside it.
    """
    nx, ny = box.cap_x, box.cap_y
    grid = [[0] * (ny + 1) for _ in range(nx + 1)]
    for c, deg in form.numerator:
        if 0 <= deg.x <= nx and 0 <= deg.y <= ny:
            grid[deg.x][deg.y] += c
    for g in form.denominator_factors:
        for x in range(nx + 1):
            for y in range(ny + 1):
                px, py = x - g.x, y - g.y
                if px >= 0 and py >= 0:
                    grid[x][y] += grid[px][py]
    coeffs = {
        Vec2(x, y): grid[x][y]
        for x in range(nx + 1)
        for y in range(ny + 1)
        if grid[x][y]
    }
    return TruncatedSeries(box=box, coefficients=coeffs)


def hilbert_truncation_check(
    f: SemigroupFamily, form: HilbertSeriesForm, box: EnumerationBox
) -> CheckResult:
    """Coefficient-for-coefficient agreement of the closed form with the
    enumerated semigroup: 1 on semigroup points, 0 elsewhere."""
    start = time.perf_counter()
    series = expand_series(form, box)
    points = set(enumerate_semigroup(f, box))
    for x in range(box.cap_x + 1):
        for y in range(box.cap_y + 1):
            v = Vec2(x, y)
            expected = 1 if v in points else 0
            got = series.coefficient(v)
            if got != expected:
                return CheckResult(
                    "hilbert_truncation",
                    False,
                    witness=f"coefficient at {v} is {got}, expected {expected}",
                    elapsed=time.perf_counter() - start,
                )
    return CheckResult(
        "hilbert_truncation", True, elapsed=time.perf_counter() - start
    )


# ---------------------------------------------------------------------------
# resolution checker


def poly_matrix_det(rows: list[list[Polynomial]]) -> Polynomial:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    ring = rows[0][0].ring
    out = ring.zero()
    for j in range(n):
        entry = rows[0][j]
        if entry.is_zero():
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        cofactor = entry * poly_matrix_det(minor)
        out = out + cofactor if j % 2 == 0 else out - cofactor
    return out


def _named_minors(k: int):
    """(map index, row indices, column indices, expected product) tuples,
    exactly the regular-sequence minors exhibited for k = 3 and 4."""
    ring = progression_ring(k)
    x = [None] + [ring.var(i) for i in range(ring.nvars)]
    if k == 3:
        return [
            ("delta2 |R1 R2|C1 C2|", 1, (0, 1), (0, 1), x[3] * x[3] - x[2] * x[4]),
            ("delta2 |R2 R3|C1 C2|", 1, (1, 2), (0, 1), x[2] * x[2] - x[1] * x[3]),
        ]
    if k == 4:
        q22 = x[2] * x[2] - x[1] * x[3]
        q44 = x[4] * x[4] - x[3] * x[5]
        return [
            (
                "delta2 |R2..R6|C1..C5|",
                1,
                (1, 2, 3, 4, 5),
                (0, 1, 2, 3, 4),
                x[1] * q22 * q22,
            ),
            (
                "delta2 |R1..R5|C4..C8|",
                1,
                (0, 1, 2, 3, 4),
                (3, 4, 5, 6, 7),
                x[5] * q44 * q44,
            ),
            (
                "delta3 |R4 R6 R8|C1 C2 C3|",
                2,
                (3, 5, 7),
                (0, 1, 2),
                x[2] * x[2] * x[2] - x[1] * x[2] * x[3],
            ),
            (
                "delta3 |R3 R4 R7|C1 C2 C3|",
                2,
                (2, 3, 6),
                (0, 1, 2),
                x[3] * x[3] * x[3] - x[1] * x[3] * x[5],
            ),
            (
                "delta3 |R1 R2 R5|C1 C2 C3|",
                2,
                (0, 1, 4),
                (0, 1, 2),
                x[4] * x[4] * x[4] - x[3] * x[4] * x[5],
            ),
        ]
    return []


def complex_check(res: GradedResolution) -> CheckResult:
    """delta_i * delta_{i+1} = 0, constant-free entries, shift consistency,
    and the named minors valued at the stated products (up to sign)."""
    start = time.perf_counter()

    def fail(witness: str) -> CheckResult:
        return CheckResult(
            "complex_check", False, witness=witness, elapsed=time.perf_counter() - start
        )

    for idx, matrix in enumerate(res.maps):
        for i, row in enumerate(matrix):
            for j, entry in enumerate(row):
                if not entry.is_zero() and (0,) * entry.ring.nvars in entry.terms:
                    return fail(
                        f"map {idx + 1} entry ({i + 1},{j + 1}) has a constant term"
                    )
    for idx in range(len(res.maps) - 1):
        left, right = res.maps[idx], res.maps[idx + 1]
        for i in range(len(left)):
            for j in range(len(right[0])):
                acc = left[0][0].ring.zero()
                for t in range(len(right)):
                    acc = acc + left[i][t] * right[t][j]
                if not acc.is_zero():
                    return fail(
                        f"(delta{idx + 1} * delta{idx + 2})[{i + 1}][{j + 1}] = {acc}"
                    )

    # Recompute the column degrees independently and compare with the stored
    # shift lists.
    from .closed_forms import _aggregate, _column_degrees

    row_degrees: tuple[Vec2, ...] = (Vec2(0, 0),)
    for idx, matrix in enumerate(res.maps):
        degs = _column_degrees(matrix, row_degrees, res.grading)
        if degs != res.column_degrees[idx]:
            return fail(f"map {idx + 1} column degrees disagree with stored shifts")
        if _aggregate(degs) != res.shifts[idx + 1]:
            return fail(f"shift multiset C_{idx + 1} disagrees with the matrices")
        row_degrees = degs

    for name, map_idx, rows, cols, expected in _named_minors(res.k):
        matrix = res.maps[map_idx]
        sub = [[matrix[i][j] for j in cols] for i in rows]
        det_val = poly_matrix_det(sub)
        if det_val != expected and det_val != -expected:
            return fail(f"minor {name} = {det_val}, expected +/-({expected})")
    return CheckResult("complex_check", True, elapsed=time.perf_counter() - start)


# ---------------------------------------------------------------------------
# quotient-dimension check


def gastinger_check(f: SemigroupFamily, gens=None) -> CheckResult:
    """Two halves: the proposed generators vanish under the degree map (so
    they lie in the kernel), and the quotient by them plus the extremal-ray
    variables has exactly |Ap(S, E)| standard monomials; together these force
    ideal equality.

    `gens` overrides the generator list, for sensitivity controls.
    """
    start = time.perf_counter()
    ring = family_ring(f)
    grading = family_grading(f)
    if f.is_extended:
        expected = f.k * f.extension_mu
    else:
        expected = f.k
    if gens is None:
        if f.is_extended:
            gens = extended_generating_set(f)
        else:
            gens = list(generating_set(f.k, ring).G)
    for g in gens:
        if not vanishes_under_degree_map(g, grading):
            return CheckResult(
                "gastinger",
                False,
                witness=f"{g} does not vanish under the degree map",
                elapsed=time.perf_counter() - start,
            )
    order = grevlex(ring.nvars)
    rays = [ring.var(0), ring.var(f.k)]
    gb = buchberger(list(gens) + rays, order)
    try:
        count = len(standard_monomials(gb))
    except InfiniteDimension as exc:
        return CheckResult(
            "gastinger",
            False,
            witness=f"quotient is not finite dimensional: {exc}",
            elapsed=time.perf_counter() - start,
        )
    if count != expected:
        return CheckResult(
            "gastinger",
            False,
            witness=f"quotient dimension {count}, expected {expected}",
            elapsed=time.perf_counter() - start,
        )
    return CheckResult("gastinger", True, elapsed=time.perf_counter() - start)


# ---------------------------------------------------------------------------
# the aggregate report


def _timed(name: str, fn) -> CheckResult:
    start = time.perf_counter()
    passed, witness = fn()
    return CheckResult(name, passed, witness, elapsed=time.perf_counter() - start)


def full_report(f: SemigroupFamily, options: Optional[VerifyOptions] = None) -> Report:
    """Run every applicable check on the family and collect the verdicts."""
    opts = options or VerifyOptions()
    box = opts.box or default_box(f)
    report = Report(family=f)
    checks = report.checks

    # Apery: closed form against the brute-force definition.
    closed = (
        apery_extended(f).elements if f.is_extended else apery_closed_form(f).elements
    )
    brute = apery_bruteforce(f, cap=opts.apery_cap).elements

    def apery_cmp():
        if closed == brute:
            return True, None
        note = (
            f"closed form {sorted(closed)} != brute force {sorted(brute)}; "
            "the brute-force set follows the definition"
        )
        return False, note

    checks.append(_timed("apery_closed_vs_bruteforce", apery_cmp))

    qf = quasi_frobenius(f)
    checks.append(
        _timed(
            "cm_type_is_k_minus_1",
            lambda: (
                len(qf) == f.k - 1,
                None if len(qf) == f.k - 1 else f"|QF| = {len(qf)}",
            ),
        )
    )

    cm = is_cohen_macaulay(f)
    checks.append(
        _timed(
            "cohen_macaulay",
            lambda: (cm.holds, None if cm.holds else f"violating pair {cm.witness}"),
        )
    )

    gor_ok = (cm_type(f) == 1) == (f.k == 2)
    checks.append(
        _timed(
            "gorenstein_iff_k_is_2",
            lambda: (gor_ok, None if gor_ok else f"type {cm_type(f)} with k = {f.k}"),
        )
    )

    normal = is_normal(f)
    if not f.is_extended:
        checks.append(
            _timed(
                "normality_of_base_family",
                lambda: (
                    normal.holds,
                    None if normal.holds else f"witness {normal.witness}",
                ),
            )
        )

    def degree_one():
        for i in range(1, f.k):
            _, deg = degree_in_rays(f, f.a + i * f.d)
            if deg != 1:
                return False, f"deg(a + {i}d) = {deg}"
        return True, None

    checks.append(_timed("apery_elements_have_ray_degree_1", degree_one))

    # Defining ideal: Groebner claim and idempotence of completion.
    ring = family_ring(f)
    order = grevlex(ring.nvars)
    base_gens = list(generating_set(f.k, ring).G)
    gens = base_gens + ([gluing_data(f).extra_generator] if f.is_extended else [])

    def middle_leading_terms():
        # the order reading stands or falls with this: every leading term
        # must be the product of two middle variables
        for g in base_gens:
            lt, coeff = leading_term(g, order)
            if coeff != 1 or lt[0] != 0 or lt[f.k] != 0:
                return False, f"leading term of {g} is not a middle product"
        return True, None

    checks.append(_timed("leading_terms_are_middle_products", middle_leading_terms))

    gb_claim = is_groebner_basis(base_gens, order)
    checks.append(
        _timed(
            "generating_set_is_groebner",
            lambda: (
                gb_claim.holds,
                None if gb_claim.holds else f"failing pair {gb_claim.witness}",
            ),
        )
    )

    def idempotent():
        out = buchberger(base_gens, order)
        same = {monic(g, order) for g in base_gens} == set(out.elements)
        return same, None if same else f"completion returned {len(out)} elements"

    checks.append(_timed("buchberger_adds_nothing", idempotent))

    full_gb = buchberger(gens, order)

    if opts.include_toric:

        def toric_cmp():
            same = ideal_equal(toric_kernel(f), full_gb)
            return same, None if same else "elimination kernel differs from closed form"

        checks.append(_timed("ideal_equals_toric_kernel", toric_cmp))

    checks.append(gastinger_check(f))

    # Hilbert series, resolution, regularity: stored closed forms for k <= 4.
    if f.k in (2, 3, 4):
        if opts.include_truncation:
            form = hilbert_numerator(f)
            checks.append(hilbert_truncation_check(f, form, box))
        if not f.is_extended:
            res = resolution(f)
            checks.append(complex_check(res))

            def numerator_matches_shifts():
                acc: dict[Vec2, int] = {}
                for i, layer in enumerate(res.shifts):
                    sign = 1 if i % 2 == 0 else -1
                    for mult, deg in layer:
                        acc[deg] = acc.get(deg, 0) + sign * mult
                acc = {deg: c for deg, c in acc.items() if c}
                same = acc == hilbert_numerator(f).numerator_dict()
                return same, None if same else "alternating shift sum != numerator"

            checks.append(_timed("numerator_equals_shift_sum", numerator_matches_shifts))

            def regularity_agreement():
                by_apery = regularity(f)
                by_res = regularity_from_resolution(f)
                ok = by_apery == by_res == 2
                return ok, None if ok else f"apery {by_apery}, resolution {by_res}"

            checks.append(_timed("regularity_is_2", regularity_agreement))
        else:

            def cone_betti():
                base = resolution(
                    SemigroupFamily(f.a, f.d, f.k, f.generators)
                ).betti
                cone = tuple(
                    (base[i] if i < len(base) else 0)
                    + (base[i - 1] if i >= 1 else 0)
                    for i in range(len(base) + 1)
                )
                stored = extended_betti(f.k)
                return (
                    cone == stored,
                    None if cone == stored else f"cone {cone} != stored {stored}",
                )

            checks.append(_timed("extended_betti_match_mapping_cone", cone_betti))
    elif not f.is_extended:

        def regularity_generic():
            val = regularity(f)
            return val == 2, None if val == 2 else f"regularity {val}"

        checks.append(_timed("regularity_is_2", regularity_generic))

    if f.is_extended:

        def gluing_consistency():
            data = gluing_data(f)
            if not vanishes_under_degree_map(data.extra_generator, family_grading(f)):
                return False, "glue binomial does not vanish under the degree map"
            for m in range(1, data.mu):
                if member_certificate(f.generators, m * f.extension) is not None:
                    return False, f"{m}*b already lies in the base semigroup"
            if data.lam[0] == 0 and data.lam[-1] == 0:
                return False, "chosen lambda touches neither extremal variable"
            return True, None

        checks.append(_timed("gluing_consistency", gluing_consistency))

    report.flags = {
        "cohen_macaulay": cm.holds,
        "gorenstein": cm_type(f) == 1,
        "normal": normal.holds,
        "koszul": True if is_quadratic(full_gb) else (None if f.is_extended else False),
    }
    return report
