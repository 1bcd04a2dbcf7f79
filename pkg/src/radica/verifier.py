"""Independent checking machinery for solver output.

Residuals by Horner substitution, coefficient recovery from roots,
a Durand-Kerner simultaneous-iteration oracle, multiset matching of
root sets, and assembly of a per-solve verification report.  Also hosts
the negative demonstration: the uncorrected two-cube-roots formula fails
under a valid but adversarial cube-root provider, while the corrected
t = c/(3s) form never does.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .complexfield import approx_eq, ccbrt_principal, csqrt_principal

FLOAT_RESIDUAL_TOL = 1e-6
ORACLE_MATCH_TOL = 1e-6


def horner_eval(field, coeffs, x):
    """Value of the polynomial (leading-first coefficients) at x."""
    if not coeffs:
        raise ValueError("empty coefficient list")
    acc = coeffs[0]
    for c in coeffs[1:]:
        acc = field.add(field.mul(acc, x), c)
    return acc


def expand_monic_from_roots(field, roots):
    """Leading-first coefficients of prod (x - r) by iterated convolution."""
    if not 1 <= len(roots) <= 4:
        raise ValueError("expected between one and four roots")
    coeffs = [field.one]
    for r in roots:
        nxt = []
        for i in range(len(coeffs) + 1):
            term = coeffs[i] if i < len(coeffs) else field.zero
            if i > 0:
                term = field.sub(term, field.mul(r, coeffs[i - 1]))
            nxt.append(term)
        coeffs = nxt
    return coeffs


class NoConvergence(ArithmeticError):
    """Root iteration did not meet tolerance; carries the last iterate."""

    def __init__(self, roots, iterations):
        super().__init__(f"no convergence after {iterations} iterations")
        self.roots = roots
        self.iterations = iterations


def _chorner(coeffs, x):
    acc = 0j
    for c in coeffs:
        acc = acc * x + c
    return acc


def durand_kerner(coeffs, tol=1e-12, max_iter=200):
    """All complex roots by Weierstrass simultaneous iteration.

    ``coeffs`` is leading-first with nonzero leading coefficient, degree
    at least 1.  Deterministic initialization at powers of 0.4 + 0.9i;
    iterates until the largest correction is at most ``tol``.
    """
    if len(coeffs) < 2:
        raise ValueError("degree must be at least 1")
    lead = complex(coeffs[0])
    if lead == 0:
        raise ValueError("leading coefficient must be nonzero")
    monic = [complex(c) / lead for c in coeffs]
    n = len(monic) - 1
    seed = 0.4 + 0.9j
    roots = [seed**k for k in range(n)]
    for _ in range(max_iter):
        worst = 0.0
        for i in range(n):
            zi = roots[i]
            den = 1 + 0j
            for j in range(n):
                if j != i:
                    den *= zi - roots[j]
            if den == 0:
                den = complex(1e-40, 0.0)
            corr = _chorner(monic, zi) / den
            roots[i] = zi - corr
            worst = max(worst, abs(corr))
        if worst <= tol:
            return roots
    raise NoConvergence(roots, max_iter)


@dataclass
class MatchResult:
    matched: bool
    permutation: Optional[tuple]
    max_distance: float

    def __bool__(self):
        return self.matched


def match_root_multisets(a, b, tol):
    """Best permutation matching of two equal-length root lists (length <= 4).

    Exhaustive search over all permutations; pairs compare via the
    scale-relative ``approx_eq`` at ``tol``.  The reported distance is the
    largest absolute pair distance under the best permutation.
    """
    if len(a) != len(b):
        raise ValueError("root lists must have equal length")
    if len(a) > 4:
        raise ValueError("at most four roots supported")
    if not a:
        return MatchResult(True, (), 0.0)
    best_perm = None
    best_rel = math.inf
    for perm in itertools.permutations(range(len(b))):
        rel = max(
            abs(x - b[p]) / max(1.0, abs(x), abs(b[p])) for x, p in zip(a, perm)
        )
        if rel < best_rel:
            best_rel = rel
            best_perm = perm
    max_dist = max(abs(x - b[p]) for x, p in zip(a, best_perm))
    matched = all(approx_eq(x, b[p], tol) for x, p in zip(a, best_perm))
    return MatchResult(matched, best_perm, max_dist)


@dataclass
class VerificationReport:
    """Checks for one solve: per-root residuals, the factorization identity,
    and agreement with the numeric oracle."""

    backend: str
    residuals: list
    residual_threshold: float
    residuals_ok: bool
    factorization_exact: Optional[bool]
    factorization_error: Optional[float]
    factorization_ok: bool
    oracle_match: Optional[bool]
    oracle_max_distance: Optional[float]
    notes: list = dc_field(default_factory=list)

    @property
    def passed(self):
        return self.residuals_ok and self.factorization_ok and self.oracle_match is not False


def verify_solution(field, coeffs, records, oracle_tol=ORACLE_MATCH_TOL):
    """Check solver output against the input polynomial.

    ``coeffs`` are leading-first backend elements (degree 1 to 4) and
    ``records`` the degree-many root records.  Residuals are exact where
    records carry exact values (demanded to be literally zero), numeric
    otherwise (|p(root)| <= 1e-6 * scale).  The factorization identity
    recovers the monic coefficient list from the roots, and the oracle
    check matches root multisets against Durand-Kerner.  Oracle
    non-convergence is flagged in the notes, not failed.
    """
    degree = len(coeffs) - 1
    if degree < 1 or degree > 4:
        raise ValueError("degree must be between 1 and 4")
    if len(records) != degree:
        raise ValueError("record count must equal the degree")
    notes = []
    numeric = [field.to_complex(c) for c in coeffs]
    scale = max(1.0, max(abs(z) for z in numeric))
    threshold = 0.0 if field.is_exact else FLOAT_RESIDUAL_TOL * scale

    residuals = []
    residuals_ok = True
    for rec in records:
        if rec.exact is not None:
            value = horner_eval(field, coeffs, rec.exact)
            ok = field.is_zero(value)
            residuals.append(0.0 if ok else abs(field.to_complex(value)))
        else:
            residual = abs(_chorner(numeric, rec.approx))
            ok = residual <= FLOAT_RESIDUAL_TOL * scale
            residuals.append(residual)
        residuals_ok = residuals_ok and ok

    ainv = field.inverse(coeffs[0])
    monic = [field.mul(c, ainv) for c in coeffs]
    if field.is_exact and all(rec.exact is not None for rec in records):
        expanded = expand_monic_from_roots(field, [rec.exact for rec in records])
        factorization_exact = all(
            field.is_zero(field.sub(x, y)) for x, y in zip(expanded, monic)
        )
        factorization_error = None
        factorization_ok = factorization_exact
    else:
        lead = numeric[0]
        monic_num = [z / lead for z in numeric]
        expanded = [1 + 0j]
        for rec in records:
            nxt = []
            for i in range(len(expanded) + 1):
                term = expanded[i] if i < len(expanded) else 0j
                if i > 0:
                    term -= rec.approx * expanded[i - 1]
                nxt.append(term)
            expanded = nxt
        factorization_exact = None
        factorization_error = max(
            abs(x - y) for x, y in zip(expanded, monic_num)
        )
        factorization_ok = factorization_error <= FLOAT_RESIDUAL_TOL * scale

    oracle_match = None
    oracle_max_distance = None
    try:
        oracle_roots = durand_kerner(numeric)
    except NoConvergence as exc:
        notes.append(f"oracle did not converge within {exc.iterations} iterations")
    else:
        result = match_root_multisets(
            [rec.approx for rec in records], oracle_roots, oracle_tol
        )
        oracle_match = result.matched
        oracle_max_distance = result.max_distance

    return VerificationReport(
        backend=field.name,
        residuals=residuals,
        residual_threshold=threshold,
        residuals_ok=residuals_ok,
        factorization_exact=factorization_exact,
        factorization_error=factorization_error,
        factorization_ok=factorization_ok,
        oracle_match=oracle_match,
        oracle_max_distance=oracle_max_distance,
        notes=notes,
    )


# ---------------------------------------------------------------------------
# Negative demonstration: two independent cube roots.
# ---------------------------------------------------------------------------


def real_preferring_cbrt(z):
    """A valid cube-root choice that keeps real inputs real (cbrt(-8) = -2)
    and uses the principal branch elsewhere."""
    z = complex(z)
    if z.imag == 0.0:
        return complex(math.copysign(abs(z.real) ** (1.0 / 3.0), z.real))
    return ccbrt_principal(z)


def omega_twisting_cbrt(selector=None):
    """A valid-but-adversarial provider: omega * real_preferring_cbrt(z) on
    inputs chosen by ``selector`` (all inputs when None).  The result still
    cubes back to z, so it satisfies the cube-root contract."""
    w = complex(-0.5, math.sqrt(3.0) / 2.0)

    def cbrt(z):
        root = real_preferring_cbrt(z)
        if selector is None or selector(z):
            root *= w
        return root

    return cbrt


@dataclass
class TwoCubeRootExhibit:
    """One run of the uncorrected formula u = s - t with s and t taken as
    independent cube roots, next to the corrected u = s - c/(3s)."""

    c: complex
    d: complex
    s: complex
    t_independent: complex
    u_naive: complex
    residual_naive: float
    u_corrected: complex
    residual_corrected: float


def negative_exhibit_two_cbrts(c, d, cbrt_func=real_preferring_cbrt):
    """Evaluate the naive and corrected Cardano forms under ``cbrt_func``.

    Requires c, d != 0.  With the default (real-preferring) provider the
    naive form happens to work on benign inputs; swap in an
    ``omega_twisting_cbrt`` provider to exhibit a nonzero naive residual.
    The corrected residual is tiny for every valid provider.
    """
    c, d = complex(c), complex(d)
    if c == 0 or d == 0:
        raise ValueError("requires c != 0 and d != 0")
    r = csqrt_principal(d * d / 4 + c**3 / 27)
    s = cbrt_func(-d / 2 + r)
    t_ind = cbrt_func(d / 2 + r)
    u_naive = s - t_ind
    u_corr = s - c / (3 * s)

    def residual(u):
        return abs(u**3 + c * u + d)

    return TwoCubeRootExhibit(
        c=c,
        d=d,
        s=s,
        t_independent=t_ind,
        u_naive=u_naive,
        residual_naive=residual(u_naive),
        u_corrected=u_corr,
        residual_corrected=residual(u_corr),
    )
