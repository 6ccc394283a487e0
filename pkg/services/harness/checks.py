import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, Union
from core.config import settings
from core.errors import InvalidParamsError, UnknownIdentityError
from models.partition import FrobeniusCoords, Partition, from_frobenius
from models.series import coefficient_to_json
from schemas.class_spec import SELF_CONJUGATE, bg_t, bg_zt, z_asymmetric
from schemas.report import CheckReport, CheckRequest, Verdict, Witness
from services.classes import (
    albion_structure_check,
    class_count,
    enumerate_class,
    in_bg_1t_diagonal,
    in_bg_zt,
    in_bg_zt_via_quotient,
    is_z_asymmetric,
)
from services.enumeration import enumerate_partitions, partition_count
from services.littlewood import decompose, is_t_core, recompose, strip_rim_hooks
from services.harness.formulas import as_request, free_components, plan_identity

logger = logging.getLogger(__name__)

Params = Union[CheckRequest, Dict[str, Any], None]


def _report(identity_id: str, params: Dict[str, Any], order: int, witness: Optional[Witness],
            started: float, notes: Iterable[str] = ()) -> CheckReport:
    elapsed = (time.perf_counter() - started) * 1000
    report = CheckReport(
        identity_id=identity_id,
        params=params,
        verdict=Verdict.FAIL if witness else Verdict.PASS,
        max_order_checked=order,
        witness=witness,
        elapsed_ms=round(elapsed, 3),
        notes=list(notes),
    )
    if witness:
        logger.warning(
            f"{identity_id} {params} failed at n={witness.n}: lhs={witness.lhs} rhs={witness.rhs} "
            f"({report.elapsed_ms} ms)"
        )
    else:
        logger.info(f"{identity_id} {params} passed to order {order} ({report.elapsed_ms} ms)")
    return report


def run_identity(identity_id: str, params: Params = None) -> CheckReport:
    """Compare the enumerated side of an identity with its product side, coefficient by coefficient"""
    started = time.perf_counter()
    plan = plan_identity(identity_id, params)
    logger.info(f"Checking {identity_id} {plan.params} to order {plan.order}")
    lhs = plan.lhs()
    rhs = plan.rhs()
    n = lhs.first_difference(rhs)
    witness = None
    if n is not None:
        witness = Witness(n=n, lhs=coefficient_to_json(lhs[n]), rhs=coefficient_to_json(rhs[n]))
    return _report(identity_id, plan.params, plan.order, witness, started, plan.notes)


# Congruences


@dataclass
class CongruencePlan:
    """
    counts[0] is the brute-force statistic; every other count must agree with it, and
    it must vanish mod modulus (modulus 0 means the statistic is identically zero).
    """

    identity_id: str
    n_max: int
    params: Dict[str, Any]
    modulus: int
    counts: List[Callable[[int], int]]
    notes: List[str] = field(default_factory=list)


def _n_max(request: CheckRequest) -> int:
    return settings.DEFAULT_N_MAX if request.n_max is None else request.n_max


def _congruence_t(request: CheckRequest, parity: Optional[int] = None, minimum: int = 2) -> int:
    t = request.t
    if t is None:
        raise InvalidParamsError("This congruence needs t")
    if not minimum <= t <= settings.MAX_T:
        raise InvalidParamsError(f"This congruence needs {minimum} <= t <= {settings.MAX_T}, got {t}")
    if parity is not None and t % 2 != parity:
        raise InvalidParamsError(f"This congruence needs {'even' if parity == 0 else 'odd'} t, got {t}")
    return t


def _shifted_class_sum(spec, n: int, step: int) -> int:
    """sum_{j >= 1} |class(n - j*step)|"""
    return sum(class_count(spec, m) for m in range(n - step, -1, -step))


def _hooks_equal_total(members: Callable[[int], Iterable[Partition]], length: int) -> Callable[[int], int]:
    return lambda n: sum(p.count_hooks_equal(length) for p in members(n))


def _cong_p(request: CheckRequest) -> CongruencePlan:
    t = _congruence_t(request, minimum=1)
    return CongruencePlan(
        "congP", _n_max(request), {"t": t}, t,
        counts=[
            _hooks_equal_total(enumerate_partitions, t),
            lambda n: t * sum(partition_count(m) for m in range(n - t, -1, -t)),
        ],
    )


def _cong_p_parts(request: CheckRequest) -> CongruencePlan:
    t = _congruence_t(request, minimum=1)
    return CongruencePlan(
        "congP-parts", _n_max(request), {"t": t}, t,
        counts=[
            _hooks_equal_total(enumerate_partitions, t),
            lambda n: t * sum(p.count_part(t) for p in enumerate_partitions(n)),
        ],
    )


def _sc_cong(parity: int):
    def plan(request: CheckRequest) -> CongruencePlan:
        t = _congruence_t(request, parity=parity, minimum=2 if parity == 0 else 3)
        spec = SELF_CONJUGATE if parity == 0 else bg_t(t)
        factor = t if parity == 0 else t - 1
        return CongruencePlan(
            f"sc-cong-{'even' if parity == 0 else 'odd'}", _n_max(request), {"t": t}, factor,
            counts=[
                _hooks_equal_total(lambda n: enumerate_class(spec, n), t),
                lambda n: factor * _shifted_class_sum(spec, n, 2 * t),
            ],
        )
    return plan


def _bt_star_cong(request: CheckRequest) -> CongruencePlan:
    t = _congruence_t(request, parity=0)

    def direct(n: int) -> int:
        return sum(p.hooks(t).total for p in enumerate_class(SELF_CONJUGATE, n))

    def by_multiples(n: int) -> int:
        return sum(
            sum(p.count_hooks_equal(t * k) for p in enumerate_class(SELF_CONJUGATE, n))
            for k in range(1, n // t + 1)
        )

    def closed(n: int) -> int:
        return sum(t * k * _shifted_class_sum(SELF_CONJUGATE, n, 2 * k * t) for k in range(1, n // t + 1))

    return CongruencePlan("bt-star-cong", _n_max(request), {"t": t}, t, counts=[direct, by_multiples, closed])


def _z_cong(request: CheckRequest) -> CongruencePlan:
    t = _congruence_t(request)
    z = request.z if request.z is not None else 0
    if not 0 <= z <= t - 1:
        raise InvalidParamsError(f"This congruence needs 0 <= z <= t-1, got z={z}, t={t}")
    spec = bg_zt(z, t)
    factor = 2 * free_components(z, t)
    notes = ["z = t-1: BG_(z,t) is {()} and a_(z,t) is identically zero"] if factor == 0 else []
    return CongruencePlan(
        "z-cong", _n_max(request), {"z": z, "t": t}, factor,
        counts=[
            _hooks_equal_total(lambda n: enumerate_class(spec, n), t),
            lambda n: factor * _shifted_class_sum(spec, n, 2 * t),
        ],
        notes=notes,
    )


def _dd_cong(request: CheckRequest) -> CongruencePlan:
    t = _congruence_t(request)
    dd = z_asymmetric(1)
    factor = 2 * free_components(1, t)

    def members(n: int) -> Iterable[Partition]:
        return (p for p in enumerate_class(dd, n) if in_bg_1t_diagonal(p, t))

    notes = ["t = 2: BG_(1,2) is {()} and a_(1,2) is identically zero"] if factor == 0 else []
    return CongruencePlan(
        "dd-cong", _n_max(request), {"t": t}, factor,
        counts=[
            _hooks_equal_total(members, t),
            lambda n: factor * sum(sum(1 for _ in members(m)) for m in range(n - 2 * t, -1, -2 * t)),
        ],
        notes=notes,
    )


CONGRUENCES: Dict[str, Callable[[CheckRequest], CongruencePlan]] = {
    "congP": _cong_p,
    "congP-parts": _cong_p_parts,
    "sc-cong-even": _sc_cong(0),
    "sc-cong-odd": _sc_cong(1),
    "bt-star-cong": _bt_star_cong,
    "z-cong": _z_cong,
    "dd-cong": _dd_cong,
}


def run_congruence(congruence_id: str, params: Params = None) -> CheckReport:
    """
    For every n <= n_max, the brute-force hook statistic must equal the convolution with
    class counts and vanish modulo the stated modulus.
    """
    builder = CONGRUENCES.get(congruence_id)
    if builder is None:
        raise UnknownIdentityError(congruence_id, CONGRUENCES)
    started = time.perf_counter()
    plan = builder(as_request(params))
    logger.info(f"Scanning {congruence_id} {plan.params} up to n={plan.n_max}")
    witness = None
    for n in range(plan.n_max + 1):
        values = [count(n) for count in plan.counts]
        brute = values[0]
        mismatch = next((v for v in values[1:] if v != brute), None)
        if mismatch is not None:
            witness = Witness(n=n, lhs=brute, rhs=mismatch)
            break
        if plan.modulus == 0 and brute != 0:
            witness = Witness(n=n, lhs=brute, rhs=0)
            break
        if plan.modulus and brute % plan.modulus:
            witness = Witness(n=n, lhs=brute, rhs=f"0 mod {plan.modulus}")
            break
    params = dict(plan.params, n_max=plan.n_max)
    return _report(congruence_id, params, plan.n_max, witness, started, plan.notes)


# Counterexamples to the congruences over the whole of P_z


def _breaks_congruence(count: int, modulus: int) -> bool:
    return count != 0 if modulus == 0 else count % modulus != 0


def remark_counterexample(z: int, t: int, form: Optional[str] = None) -> CheckReport:
    """
    Show that restricting to BG_(z,t) is needed: the hooks of length t among the
    z-asymmetric partitions of a chosen weight break the congruence, and the predicted
    carrier is outside BG_(z,t).

    Form A (t - z odd, t = 2m + z + 1): weight t, a single hook carried by (m + z; m).
    Form B (z > 0): weight 2t - z + 1, carrier (t; t - z). For z >= 2 it is the only hook.
    For z = 1 the weight 2t carries several hooks of length t; there the count is checked
    against the modulus 2*floor((t-1)/2) instead, with (t; t-1) among the carriers.
    Form A is used whenever it applies, unless form B is asked for.
    """
    started = time.perf_counter()
    if t < 2 or not 0 <= z <= t - 1:
        raise InvalidParamsError(f"Counterexamples need t >= 2 and 0 <= z <= t-1, got z={z}, t={t}")
    form = (form or ("A" if (t - z) % 2 else "B")).upper()
    if form == "A":
        if (t - z) % 2 == 0:
            raise InvalidParamsError(f"Form A needs t - z odd, got z={z}, t={t}")
        m = (t - z - 1) // 2
        weight, coords = t, FrobeniusCoords([m + z], [m])
    elif form == "B":
        if z == 0:
            raise InvalidParamsError("Form B needs z > 0; for z = 0 and even t there is no counterexample")
        weight, coords = 2 * t - z + 1, FrobeniusCoords([t], [t - z])
    else:
        raise InvalidParamsError(f"Unknown counterexample form '{form}'")

    predicted = from_frobenius(coords)
    carriers = []
    count = 0
    for p in enumerate_class(z_asymmetric(z), weight):
        hooks = p.count_hooks_equal(t)
        if hooks:
            carriers.append(p)
            count += hooks
    outside = not in_bg_zt(predicted, z, t)
    unique = form == "A" or z >= 2
    modulus = 2 * free_components(z, t)
    params = {"z": z, "t": t, "form": form, "weight": weight, "witness": predicted.to_string()}
    notes = [f"{count} hook(s) of length {t} over P_{z}({weight}), carried by "
             f"{', '.join(p.to_string() or '()' for p in carriers) or 'nothing'}"]
    if not unique:
        notes.append(f"not unique for z = 1; count checked to be nonzero mod {modulus}")
    witness = None
    if unique and count != 1:
        witness = Witness(n=weight, lhs=count, rhs=1)
    elif not unique and not _breaks_congruence(count, modulus):
        witness = Witness(n=weight, lhs=count, rhs=f"nonzero mod {modulus}")
    elif unique and carriers[0] != predicted:
        witness = Witness(n=weight, lhs=carriers[0].to_string(), rhs=predicted.to_string())
    elif predicted not in carriers:
        witness = Witness(n=weight, lhs=", ".join(p.to_string() for p in carriers), rhs=predicted.to_string())
    elif not outside:
        witness = Witness(n=weight, lhs="in BG", rhs="outside BG")
    return _report("remark-counterexample", params, weight, witness, started, notes)


# Exhaustive Littlewood scan


def _scan_partition(p: Partition, t: int) -> Optional[str]:
    d = decompose(p, t)
    if not is_t_core(d.core, t):
        return "core is not a t-core"
    if p.weight != d.core.weight + t * d.quotient_weight:
        return "weight law"
    scaled = None
    for nu in d.quotient:
        hooks = nu.hooks(1).scale(t)
        scaled = hooks if scaled is None else scaled.union(hooks)
    if p.hooks(t) != scaled:
        return "hooks of the quotient"
    if recompose(d) != p:
        return "roundtrip"
    if strip_rim_hooks(p, t) != d.core:
        return "rim hook stripping"
    return None


def _scan_bg_member(p: Partition, z: int, t: int) -> Optional[str]:
    d = decompose(p, t)
    if not (is_t_core(d.core, t) and is_z_asymmetric(d.core, z)):
        return "core is not a P_z t-core"
    for r in range(z, t):
        if d.quotient[r] != d.quotient[t + z - r - 1].conjugate():
            return f"component {r} is not conjugate to {t + z - r - 1}"
    if any(d.quotient[r] for r in range(z)):
        return "leading components not empty"
    if (t + z - 1) % 2 == 0 and d.quotient[(t + z - 1) // 2]:
        return "middle component not empty"
    free = sum(d.quotient[r].weight for r in range(z, (t + z - 2) // 2 + 1))
    if p.weight != d.core.weight + 2 * t * free:
        return "doubled weight law"
    if not p.hooks(t).all_even():
        return "odd hook multiplicity"
    if not in_bg_zt_via_quotient(p, z, t):
        return "quotient characterization"
    if not albion_structure_check(p, z, t):
        return "core vector structure"
    return None


def _scan_weight(n: int, ts: List[int]) -> Optional[Witness]:
    for p in enumerate_partitions(n):
        for t in ts:
            failure = _scan_partition(p, t)
            if failure:
                return Witness(n=n, lhs=f"{p.to_string()} t={t}", rhs=failure)
    for t in ts:
        if t < 2:
            continue
        for z in range(t):
            for p in enumerate_class(z_asymmetric(z), n):
                if not in_bg_zt(p, z, t):
                    continue
                failure = _scan_bg_member(p, z, t)
                if failure:
                    return Witness(n=n, lhs=f"{p.to_string()} z={z} t={t}", rhs=failure)
    return None


def littlewood_property_scan(n_max: int = 30, t_range: Iterable[int] = range(2, 8)) -> CheckReport:
    """
    Decompose every partition of weight <= n_max for each t and check the weight law, the
    hook law, the roundtrip and rim hook stripping; then the BG_(z,t) structure on every
    z-asymmetric member of BG_(z,t).
    """
    started = time.perf_counter()
    ts = list(t_range)
    if any(t < 1 for t in ts):
        raise InvalidParamsError(f"Moduli must be positive, got {ts}")
    params = {"n_max": n_max, "t_range": ts}
    logger.info(f"Littlewood scan up to n={n_max} for t in {ts}")
    witness = None
    for n in range(n_max + 1):
        witness = _scan_weight(n, ts)
        if witness:
            break
    return _report("littlewood-scan", params, n_max, witness, started)
