import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence
from core.config import settings
from core.errors import HookCalcError, UnknownIdentityError
from schemas.report import CheckReport, CheckRequest
from services.harness.checks import (
    CONGRUENCES,
    littlewood_property_scan,
    remark_counterexample,
    run_congruence,
    run_identity,
)
from services.harness.formulas import IDENTITIES, as_request

logger = logging.getLogger(__name__)

REMARK_ID = "remark-counterexample"
SCAN_ID = "littlewood-scan"


def known_checks() -> List[str]:
    return sorted([*IDENTITIES, *CONGRUENCES, REMARK_ID, SCAN_ID])


def run_check(check_id: str, params: Optional[Dict[str, Any]] = None) -> CheckReport:
    """Dispatch one catalog id with its parameters"""
    try:
        if check_id in IDENTITIES:
            return run_identity(check_id, params)
        if check_id in CONGRUENCES:
            return run_congruence(check_id, params)
        request = as_request(params)
        if check_id == REMARK_ID:
            return remark_counterexample(request.z or 0, request.t or 0, request.form)
        if check_id == SCAN_ID:
            top = request.t if request.t is not None else 7
            n_max = request.n_max if request.n_max is not None else 30
            return littlewood_property_scan(n_max, range(2, top + 1))
        raise UnknownIdentityError(check_id, known_checks())
    except HookCalcError as e:
        logger.error(f"Check {check_id} {params or {}} could not run: {e}")
        raise


@dataclass(frozen=True)
class CatalogEntry:
    check_id: str
    params: Dict[str, Any] = field(default_factory=dict)

    def request(self) -> CheckRequest:
        return as_request(self.params)


def _run_entry(entry: CatalogEntry) -> CheckReport:
    return run_check(entry.check_id, entry.params)


def run_catalog(entries: Sequence[CatalogEntry], jobs: Optional[int] = None) -> List[CheckReport]:
    """
    Run the entries, in a process pool when jobs > 1. Reports come back in entry order.
    """
    jobs = settings.JOBS if jobs is None else jobs
    logger.info(f"Running {len(entries)} checks with {jobs} job(s)")
    if jobs <= 1 or len(entries) <= 1:
        return [_run_entry(entry) for entry in entries]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(_run_entry, entries))


def _admissible_z(t: int) -> range:
    return range(t)


def default_catalog(quick: bool = False, closed_forms: bool = False, order: Optional[int] = None,
                    n_max: Optional[int] = None) -> List[CatalogEntry]:
    """
    The curated run. quick=True trims orders, scan ranges and moduli so the whole run
    finishes in about a minute. order and n_max override the truncation order and the
    congruence bound; the u-series entries stay capped by U_ORDER and NO_ORDER.
    """
    if order is None:
        order = settings.QUICK_ORDER if quick else settings.DEFAULT_ORDER
    if n_max is None:
        n_max = settings.QUICK_N_MAX if quick else settings.DEFAULT_N_MAX
    gf_ts = range(2, 6) if quick else range(2, 8)
    addition_ts = range(2, 5) if quick else range(2, 7)
    no_ts = range(2, 4) if quick else range(2, 6)
    congruence_ts = range(2, 7) if quick else range(2, settings.MAX_T + 1)
    base = {"order": order}
    if closed_forms:
        base["closed_forms"] = True
    entries: List[CatalogEntry] = []

    def add(check_id: str, **params):
        entries.append(CatalogEntry(check_id, params))

    for t in addition_ts:
        add("han-ji-addition", t=t, **base)
        add("gt-closed-form", t=t, **base)
        parity = "even" if t % 2 == 0 else "odd"
        if t >= 3 or parity == "even":
            add(f"sc-addition-{parity}", t=t, **base)
            add(f"sc-mult-{parity}", t=t, **base)
        if t % 2 == 0:
            for beta in (0, 1, 2):
                add("sc-powersum", t=t, beta=beta, **base)
        for z in _admissible_z(t):
            add("z-addition-mult", z=z, t=t, **base)
    # One randomized rational table per run, seeded from the settings
    add("han-ji-addition", t=2, rho="random", **base)
    add("z-addition-mult", z=0, t=3, rho1="random", rho2="random", **base)

    for z in range(0, 3):
        add("pz-gf", z=z, **base)
        add("pz-gf", z=z, form="B", **base)
    for t in gf_ts:
        add("bgt-gf", t=t, **base)
        add(f"sc-gf-y-{'even' if t % 2 == 0 else 'odd'}", t=t, **base)
        add("dd-gf-y", t=t, **base)
        for z in _admissible_z(t):
            add("pz-core-gf", z=z, t=t, **base)
            add("z-gf-y", z=z, t=t, **base)

    u_order = min(order, settings.U_ORDER)
    for t in no_ts:
        for z in _admissible_z(t):
            add("z-NO", z=z, t=t, order=u_order)
    add("NO", order=min(order, settings.NO_ORDER))

    for t in congruence_ts:
        add("congP", t=t, n_max=n_max)
        add("congP-parts", t=t, n_max=n_max)
        if t % 2 == 0:
            add("sc-cong-even", t=t, n_max=n_max)
            add("bt-star-cong", t=t, n_max=n_max)
        else:
            add("sc-cong-odd", t=t, n_max=n_max)
        add("dd-cong", t=t, n_max=n_max)
        for z in _admissible_z(t):
            add("z-cong", z=z, t=t, n_max=n_max)

    for t in range(2, 8 if quick else 10):
        for z in _admissible_z(t):
            if z == 0 and t % 2 == 0:
                continue
            add(REMARK_ID, z=z, t=t)
    add(SCAN_ID, t=5 if quick else 7, n_max=15 if quick else 30)
    return entries
