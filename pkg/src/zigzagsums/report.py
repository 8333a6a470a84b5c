"""Machine-readable verification reports over the cross-route identities.

A report is a flat list of checks, each with a unique id, a pass/fail
status, and printable expected/actual/tolerance fields.  Suites:

  exact       table reproductions and exact route agreements (no floats)
  numeric     float routes with analytic tolerances (series, quadrature)
  montecarlo  randomized volume estimates at 4 standard errors, retried
              once on seed+1 if any check misses
  spectral    Nystrom eigenvalues, traces, and eigenfunction residuals
  all         everything above

Reports are deterministic for fixed inputs (no timestamps), so repeated runs
produce byte-identical JSON.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import __version__
from .euler_sums import (
    g_eval,
    l4_coeff,
    s_coeff,
    s_coeff_via_bernoulli,
    s_coeff_via_euler,
    s_numeric,
    zeta_coeff,
)
from .polytope_lab import (
    PolytopeSpec,
    arctangent_check,
    chain_poset,
    cyclic_poset,
    mc_cube_integral,
    mc_volume,
    order_polytope_volume,
    volume_formula,
)
from .special_numbers import (
    bernoulli,
    cyclic_zigzag,
    cyclic_zigzag_bruteforce,
    euler_number,
    power_sum,
    zigzag,
    zigzag_bruteforce,
)
from .spectral_operator import (
    eigenfunction_residual,
    exact_eigenvalue,
    fourier_coeff_const,
    inner_product_one,
    nystrom_matrix,
    parseval_sum,
    sym_eigenvalues,
    trace_power_nystrom,
)

SUITES = ("exact", "numeric", "montecarlo", "spectral", "all")

# Corrections applied to commonly printed conversion identities; the exact
# table calibrations in the 'exact' suite are what enforce them.
CORRECTION_NOTES = (
    "Bernoulli conversion uses S(2m) = (-1)^(m-1) (2^(2m)-1) pi^(2m) B_(2m) / (2 (2m)!); "
    "a printed variant lacking the (2m)! factor fails the exact coefficient table "
    "(it would give B_2 = 1/12 instead of 1/6) and is rejected by calibration.",
    "Euler conversion uses S(2m+1) = (-1)^m E_(2m) pi^(2m+1) / (2^(2m+2) (2m)!); "
    "a printed variant with the factorial and power moved into a prefactor fails "
    "the table (it would give E_0 = 1/16 instead of 1) and is rejected by calibration.",
    "The power-sum identity is applied as sum_{k=0}^{N-1} k^p = "
    "(1/(p+1)) sum_{m=0}^{p} C(p+1,m) B_m N^(p+1-m) with B_1 = -1/2, plus N^p for the "
    "top term; a printed variant summing from m = 1 with prefactor 1/p fails at p = 0.",
)


@dataclass
class CheckResult:
    """One verification check; all payload fields are printable strings."""

    id: str
    description: str
    status: str
    expected: str
    actual: str
    tolerance: str


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    @property
    def summary(self) -> dict:
        passed = sum(1 for c in self.checks if c.status == "pass")
        return {"passed": passed, "failed": len(self.checks) - passed}

    def all_passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_json(self) -> str:
        payload = {
            "checks": [asdict(c) for c in self.checks],
            "summary": self.summary,
            "metadata": self.metadata,
        }
        return json.dumps(payload, indent=2)

    @classmethod
    def from_json(cls, text: str) -> VerificationReport:
        payload = json.loads(text)
        checks = [CheckResult(**c) for c in payload["checks"]]
        return cls(checks=checks, metadata=payload["metadata"])

    def render_text(self, quiet: bool = False) -> str:
        lines = []
        if not quiet:
            for c in self.checks:
                lines.append(
                    f"[{c.status.upper():4s}] {c.id}: {c.description} "
                    f"(expected {c.expected}, actual {c.actual}, tolerance {c.tolerance})"
                )
        s = self.summary
        lines.append(f"{s['passed']} passed, {s['failed']} failed")
        return "\n".join(lines)


class _Recorder:
    """Accumulates checks; ids must be unique."""

    def __init__(self) -> None:
        self.checks: list[CheckResult] = []
        self._seen: set[str] = set()

    def add(self, check_id: str, description: str, ok: bool, expected, actual, tolerance):
        if check_id in self._seen:
            raise ValueError(f"duplicate check id {check_id}")
        self._seen.add(check_id)
        self.checks.append(
            CheckResult(
                id=check_id,
                description=description,
                status="pass" if ok else "fail",
                expected=str(expected),
                actual=str(actual),
                tolerance=str(tolerance),
            )
        )

    def exact(self, check_id: str, description: str, expected, actual) -> None:
        self.add(check_id, description, expected == actual, expected, actual, "exact")

    def close(self, check_id: str, description: str, expected: float, actual: float, tol: float) -> None:
        self.add(check_id, description, abs(actual - expected) <= tol, expected, actual, tol)

    def below(self, check_id: str, description: str, value: float, bound: float) -> None:
        self.add(check_id, description, value < bound, f"< {bound}", value, bound)


S_COEFF_TABLE = {
    1: Fraction(1, 4),
    2: Fraction(1, 8),
    3: Fraction(1, 32),
    4: Fraction(1, 96),
    5: Fraction(5, 1536),
    6: Fraction(1, 960),
    7: Fraction(61, 184320),
    8: Fraction(17, 161280),
    9: Fraction(277, 8257536),
    10: Fraction(31, 2903040),
}

ZETA_COEFF_TABLE = {
    2: Fraction(1, 6),
    4: Fraction(1, 90),
    6: Fraction(1, 945),
    8: Fraction(1, 9450),
    10: Fraction(1, 93555),
}

BERNOULLI_TABLE = {
    0: Fraction(1),
    2: Fraction(1, 6),
    4: Fraction(-1, 30),
    6: Fraction(1, 42),
    8: Fraction(-1, 30),
    10: Fraction(5, 66),
}

EULER_TABLE = {0: 1, 2: -1, 4: 5, 6: -61, 8: 1385}

ZIGZAG_TABLE = {1: 1, 2: 1, 3: 2, 4: 5, 5: 16, 6: 61, 7: 272, 8: 1385, 9: 7936, 10: 50521}

CYCLIC_ZIGZAG_TABLE = {2: 1, 4: 4, 6: 48, 8: 1088, 10: 39680}


def _exact_checks(rec: _Recorder, enumeration_limit: int = 10) -> None:
    for n, expected in S_COEFF_TABLE.items():
        rec.exact(f"exact.s_coeff.{n}", f"coefficient of pi^{n} in S({n})", expected, s_coeff(n))
    for n, expected in ZETA_COEFF_TABLE.items():
        rec.exact(f"exact.zeta_coeff.{n}", f"coefficient of pi^{n} in zeta({n})", expected, zeta_coeff(n))
    rec.exact("exact.l4_coeff.1", "alternating L-value coefficient at n=1", Fraction(1, 4), l4_coeff(1))
    for n, expected in BERNOULLI_TABLE.items():
        rec.exact(f"exact.bernoulli.{n}", f"Bernoulli number B_{n}", expected, bernoulli(n))
    rec.exact("exact.bernoulli.1", "Bernoulli number B_1", Fraction(-1, 2), bernoulli(1))
    rec.exact("exact.bernoulli.odd", "odd Bernoulli numbers vanish for 3 <= n <= 19",
              [Fraction(0)] * 9, [bernoulli(n) for n in range(3, 20, 2)])
    for n, expected in EULER_TABLE.items():
        rec.exact(f"exact.euler.{n}", f"Euler number E_{n}", expected, euler_number(n))
    for n, expected in ZIGZAG_TABLE.items():
        rec.exact(f"exact.zigzag.{n}", f"alternating permutation count A({n})", expected, zigzag(n))
    for n, expected in CYCLIC_ZIGZAG_TABLE.items():
        rec.exact(f"exact.cyclic_zigzag.{n}", f"cyclic count A0({n})", expected, cyclic_zigzag(n))
    for n in range(1, enumeration_limit + 1):
        rec.exact(f"exact.zigzag_bruteforce.{n}", f"A({n}) by enumeration of all {n}! permutations",
                  zigzag(n), zigzag_bruteforce(n))
    for n in range(2, enumeration_limit + 1, 2):
        rec.exact(f"exact.cyclic_bruteforce.{n}", f"A0({n}) by enumeration",
                  cyclic_zigzag(n), cyclic_zigzag_bruteforce(n))
    rec.exact("exact.route.bernoulli", "Bernoulli route equals zigzag route for even n <= 60",
              [s_coeff(n) for n in range(2, 61, 2)],
              [s_coeff_via_bernoulli(n) for n in range(2, 61, 2)])
    rec.exact("exact.route.euler", "Euler route equals zigzag route for odd n <= 59",
              [s_coeff(n) for n in range(1, 60, 2)],
              [s_coeff_via_euler(n) for n in range(1, 60, 2)])
    rec.exact("exact.extensions.chain", "chain order-polytope volume equals A(n)/n! for n <= 10",
              [Fraction(zigzag(n), math.factorial(n)) for n in range(1, 11)],
              [order_polytope_volume(chain_poset(n)) for n in range(1, 11)])
    rec.exact("exact.extensions.cyclic",
              "cyclic order-polytope volume equals A0(n)/n! and 2^n s_coeff(n) for even n <= 10",
              [volume_formula(PolytopeSpec("cyclic", n, "unit")).coeff for n in range(2, 11, 2)],
              [order_polytope_volume(cyclic_poset(n)) for n in range(2, 11, 2)])
    rec.exact("exact.power_sum", "Bernoulli power-sum identity for N <= 20, p <= 10",
              True,
              all(power_sum(N, p).direct == power_sum(N, p).via_bernoulli
                  for N in range(1, 21) for p in range(11)))
    rec.exact("exact.cyclic_bernoulli_identity",
              "A0(n) = 2^(n-1) (2^n - 1) |B_n| for even n <= 16",
              [cyclic_zigzag(n) for n in range(2, 17, 2)],
              [2 ** (n - 1) * (2**n - 1) * abs(bernoulli(n)) for n in range(2, 17, 2)])
    purity_ok = True
    for n in range(1, 21):
        ip = inner_product_one(n)
        expected_coeff = Fraction(zigzag(n), math.factorial(n) * 2**n)
        if ip.terms != ((n, expected_coeff),):
            purity_ok = False
    rec.exact("exact.operator_monomial",
              "inner product of 1 with the (n-1)-th operator iterate is (A(n)/n!)(pi/2)^n, n <= 20",
              True, purity_ok)
    rec.exact("exact.ratio.m5", "cyclic-to-plain ratio at ten letters",
              Fraction(39680, 50521), Fraction(cyclic_zigzag(10), zigzag(10)))


def _numeric_checks(rec: _Recorder) -> None:
    for n in range(2, 11):
        value, tail = s_numeric(n, 10**5)
        exact_value = float(s_coeff(n)) * math.pi**n
        rec.close(f"numeric.s_numeric.{n}",
                  f"truncated summation of S({n}) within its tail bound",
                  exact_value, value, tail + 1e-9)
    for z in (0.5, -0.5, 0.9, -0.9):
        closed, series = g_eval(z, 80)
        rec.close(f"numeric.g_eval.{z}", f"generating function closed form vs series at z={z}",
                  closed, series, 1e-10)
    exact_pi4, numeric = arctangent_check()
    rec.close("numeric.arctangent", "arctangent integral recovers pi/4",
              exact_pi4.to_float(), numeric, 1e-10)
    rec.close("numeric.fourier.k0", "leading expansion coefficient of the constant 1",
              4 / math.pi, fourier_coeff_const(0), 1e-14)
    rec.close("numeric.parseval.0", "squared-coefficient sum recovers the norm of 1",
              math.pi / 2, parseval_sum(0, 10**5), 1e-4)
    rec.close("numeric.parseval.1", "weighted squared-coefficient sum recovers pi^2/8",
              math.pi**2 / 8, parseval_sum(1, 10**4), 1e-6)


def _montecarlo_pass(rec: _Recorder, seed: int, samples: int, suffix: str) -> bool:
    cases = [("cyclic", 2), ("cyclic", 3), ("cyclic", 4), ("chain", 3), ("chain", 5)]
    all_ok = True
    for kind, n in cases:
        spec = PolytopeSpec(kind, n, "half_pi")
        estimate = mc_volume(spec, samples, seed)
        exact_value = volume_formula(spec).to_float()
        tol = 4 * estimate.std_error
        ok = abs(estimate.mean - exact_value) <= tol
        all_ok &= ok
        rec.add(f"montecarlo.volume.{kind}.{n}{suffix}",
                f"{kind} polytope volume in dimension {n} at 4 standard errors",
                ok, exact_value, estimate.mean, tol)
    for n in (2, 3):
        estimate = mc_cube_integral(n, samples, seed)
        exact_value = float(s_coeff(n)) * math.pi**n
        tol = 4 * estimate.std_error
        ok = abs(estimate.mean - exact_value) <= tol
        all_ok &= ok
        rec.add(f"montecarlo.cube.{n}{suffix}",
                f"cube integral in dimension {n} at 4 standard errors",
                ok, exact_value, estimate.mean, tol)
    return all_ok


def _montecarlo_checks(rec: _Recorder, seed: int, samples: int) -> bool:
    """Runs the Monte Carlo checks; retries once on seed+1 if any miss. Returns retry flag."""
    probe = _Recorder()
    if _montecarlo_pass(probe, seed, samples, ""):
        rec.checks.extend(probe.checks)
        rec._seen.update(probe._seen)
        return False
    _montecarlo_pass(rec, seed + 1, samples, ".retry")
    return True


def _spectral_checks(rec: _Recorder, grid: int) -> None:
    matrix = nystrom_matrix(grid)
    spectrum = sym_eigenvalues(matrix, grid)
    top5 = spectrum[:5]
    for rank, approx in enumerate(top5):
        exact_value = exact_eigenvalue(rank)
        rec.close(f"spectral.eigenvalue.{rank}",
                  f"Nystrom eigenvalue of rank {rank} within 1% at N={grid}",
                  exact_value, approx, 0.01 * abs(exact_value))
    gaps_ok = all(
        abs(top5[i] - top5[j]) > 10 * 0.01 * max(abs(exact_eigenvalue(i)), abs(exact_eigenvalue(j)))
        for i in range(5) for j in range(i + 1, 5)
    )
    rec.exact("spectral.multiplicity", "top eigenvalues pairwise distinct beyond tolerance",
              True, gaps_ok)
    for n in (2, 3, 4):
        exact_value = float(s_coeff(n)) * math.pi**n
        trace = trace_power_nystrom(grid, n)
        rec.close(f"spectral.trace.{n}",
                  f"trace of the {n}-th matrix power within 1% of S({n}) at N={grid}",
                  exact_value, trace, 0.01 * exact_value)
        rec.close(f"spectral.spectral_sum.{n}",
                  f"power-{n} eigenvalue sum matches the matrix-power trace",
                  trace, math.fsum(v**n for v in spectrum), 1e-8)
    for k in (0, -1, 1):
        rec.below(f"spectral.residual.{k}",
                  f"eigenrelation residual for mode k={k} at N=1000",
                  eigenfunction_residual(k, 1000), 1e-4)


def run_suite(
    suite: str = "all",
    seed: int = 0,
    samples: int = 10**6,
    grid: int = 2000,
) -> VerificationReport:
    """Run a verification suite and return the report."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    rec = _Recorder()
    retried = False
    if suite in ("exact", "all"):
        _exact_checks(rec)
    if suite in ("numeric", "all"):
        _numeric_checks(rec)
    if suite in ("montecarlo", "all"):
        retried = _montecarlo_checks(rec, seed, samples)
    if suite in ("spectral", "all"):
        _spectral_checks(rec, grid)
    metadata = {
        "suite": suite,
        "seed": seed,
        "samples": samples,
        "grid": grid,
        "montecarlo_retried": retried,
        "version": __version__,
        "notes": list(CORRECTION_NOTES),
    }
    return VerificationReport(checks=rec.checks, metadata=metadata)
