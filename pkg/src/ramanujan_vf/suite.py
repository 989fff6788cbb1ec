"""Registry of per-prime verification checks used by ``ramanujan-vf verify``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import modforms, ppower, supersingular
from .exact_arith import require_prime
from .graded import derivation_bracket, fields
from .qseries import verify_ramanujan_system
from .report import CheckResult, VerificationReport, timed

CONGRUENCE_PRECISION = 60
RAMANUJAN_PRECISION = 30


def _ramanujan(p):
    return verify_ramanujan_system(RAMANUJAN_PRECISION)


def _congruences(p):
    return modforms.verify_congruences(p, CONGRUENCE_PRECISION)


def _sl2(p):
    with timed() as clock:
        R, F, H, _ = fields(p)
        ok = (
            derivation_bracket(R, F) == H
            and derivation_bracket(H, F) == F * -2
            and derivation_bracket(H, R) == R * 2
        )
    return CheckResult(
        name="sl2",
        claim="R, F, H form an sl2-triple",
        passed=ok,
        seconds=clock.seconds,
    )


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[int], CheckResult]
    max_p: int | None = None


CHECKS = {
    c.name: c
    for c in [
        Check("ramanujan_system", _ramanujan),
        Check("sl2", _sl2),
        Check("congruences", _congruences),
        Check("diff_relations", modforms.verify_diff_relations),
        Check("first_integral", ppower.first_integral_check),
        Check("rp_closed_form", ppower.closed_vs_iterated_check, ppower.ITERATION_BOUND),
        Check("rp_decomposition", ppower.decomposition_check, ppower.ITERATION_BOUND),
        Check("coefficient_system", ppower.coefficient_system_check),
        Check("commutation", ppower.commutation_check),
        Check("p_curvature", ppower.p_curvature_witness),
        Check("singular_set", ppower.singular_set_checks),
        Check("table1", supersingular.table_exponents_check),
        Check("coprime_squarefree", supersingular.coprimality_and_squarefree),
        Check("ss_oracle", supersingular.oracle_equivalence_check, supersingular.ORACLE_BOUND),
        Check("supersingular_locus", supersingular.supersingular_point_crosscheck, supersingular.SCAN_BOUND),
        Check("j_consistency", supersingular.j_consistency_check, supersingular.SCAN_BOUND),
        Check("transversality", supersingular.transversality_scan),
        Check("singular_locus", supersingular.singular_locus_check),
        Check("locus", supersingular.locus_check),
        Check("components", supersingular.component_count_check),
    ]
}


def run_check(name: str, p: int) -> CheckResult:
    check = CHECKS[name]
    if check.max_p is not None and p > check.max_p:
        return CheckResult(
            name=name,
            claim="",
            passed=True,
            skipped=True,
            detail=f"skipped: only run for p <= {check.max_p}",
        )
    try:
        return check.run(p)
    except Exception as exc:  # a crash is a failed check, not a crashed run
        return CheckResult(name=name, claim="", passed=False, detail="error", witness=repr(exc))


def run_prime(p: int, names=None) -> VerificationReport:
    require_prime(p)
    names = list(CHECKS) if names is None else list(names)
    return VerificationReport(p, [run_check(n, p) for n in names])
