import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Union
from core.config import settings
from core.errors import InvalidParamsError, UnknownIdentityError
from models.series import QQ, CoefficientRing, TruncatedSeries, poly_ring
from schemas.class_spec import ALL, SELF_CONJUGATE, bg_t, bg_zt, z_asymmetric
from schemas.report import CheckRequest
from services.classes import enumerate_class, in_bg_1t_diagonal, is_z_asymmetric
from services.littlewood import enumerate_t_cores
from services.harness import weights
from services.harness.statistics import (
    StatisticMarks,
    class_statistic_series,
    fg_series,
    statistic_series,
)
from services.qseries import (
    euler,
    geometric,
    pochhammer_finite,
    pochhammer_inf,
    pow_exponent,
    substitute_monomial,
    substitute_power,
)

logger = logging.getLogger(__name__)


def free_components(z: int, t: int) -> int:
    """floor((t - z)/2), the number of unconstrained quotient components of BG_(z,t)"""
    return (t - z) // 2


# Product building blocks


def sc_product(order: int, ring: CoefficientRing = QQ) -> TruncatedSeries:
    """(-q; q^2)_inf"""
    return pochhammer_inf(-1, 1, 2, order, ring)


def sc_odd_tail(t: int, order: int, ring: CoefficientRing = QQ) -> TruncatedSeries:
    """(-q; q^2)_inf / (-q^t; q^(2t))_inf"""
    return sc_product(order, ring) / pochhammer_inf(-1, t, 2 * t, order, ring)


def bg_zt_product(z: int, t: int, order: int, ring: CoefficientRing = QQ) -> TruncatedSeries:
    """prod_{i < K} (-q^(2i+z+1), -q^(2t-2i-z-1); q^(2t))_inf"""
    result = TruncatedSeries.one(order, ring)
    for i in range(free_components(z, t)):
        result = result * pochhammer_inf(-1, 2 * i + z + 1, 2 * t, order, ring)
        result = result * pochhammer_inf(-1, 2 * t - 2 * i - z - 1, 2 * t, order, ring)
    return result


def pz_core_product(z: int, t: int, order: int, ring: CoefficientRing = QQ) -> TruncatedSeries:
    """Generating function of z-asymmetric t-cores; the empty product covers z = t-1"""
    cores = pochhammer_inf(1, 2 * t, 2 * t, order, ring) ** free_components(z, t)
    return bg_zt_product(z, t, order, ring) * cores


def marked_pochhammer(a: int, m: int, order: int, ring: CoefficientRing) -> TruncatedSeries:
    """((1 - v^2) q^a; q^m)_inf"""
    v = ring.generator()
    return pochhammer_inf(ring.one() - v * v, a, m, order, ring)


# Closed forms of f_t and g_t


def closed_f_constant(order: int, ring: CoefficientRing = QQ) -> TruncatedSeries:
    """f_t for rho1 = 1: 1/(q;q)_inf"""
    return euler(order, ring).inverse()


def closed_f_marked(order: int, ring: CoefficientRing) -> TruncatedSeries:
    """f_t for rho1 = variable at t, 1 elsewhere: ((1 - v^2)q; q)_inf / (q;q)_inf"""
    return marked_pochhammer(1, 1, order, ring) * euler(order, ring).inverse()


def closed_g_indicator(order: int, ring: CoefficientRing = QQ) -> TruncatedSeries:
    """g_t for rho1 = 1 and rho2 = indicator at t: q/((1 - q)(q;q)_inf)"""
    q = TruncatedSeries.monomial(order, 1, 1, ring)
    return q * geometric(1, order, ring) * euler(order, ring).inverse()


# Right-hand sides


def han_ji_rhs(t: int, g: TruncatedSeries, order: int) -> TruncatedSeries:
    """t g_t(q^t) (q^t;q^t)_inf / (q;q)_inf"""
    ring = g.ring
    spread = substitute_power(g, t, order)
    return spread * pochhammer_inf(1, t, t, order, ring) * euler(order, ring).inverse() * t


def sc_addition_rhs(t: int, g: TruncatedSeries, order: int) -> TruncatedSeries:
    ring = g.ring
    spread = substitute_power(g, 2 * t, order) * pochhammer_inf(1, 2 * t, 2 * t, order, ring)
    if t % 2 == 0:
        return spread * sc_product(order, ring) * t
    return spread * sc_odd_tail(t, order, ring) * (t - 1)


def sc_mult_rhs(t: int, f: TruncatedSeries, order: int) -> TruncatedSeries:
    ring = f.ring
    exponent = t // 2
    spread = substitute_power(f, 2 * t, order) * pochhammer_inf(1, 2 * t, 2 * t, order, ring)
    tail = sc_product(order, ring) if t % 2 == 0 else sc_odd_tail(t, order, ring)
    return spread ** exponent * tail


def sc_gf_y_rhs(t: int, order: int, ring: CoefficientRing) -> TruncatedSeries:
    tail = sc_product(order, ring) if t % 2 == 0 else sc_odd_tail(t, order, ring)
    return marked_pochhammer(2 * t, 2 * t, order, ring) ** (t // 2) * tail


def sc_powersum_rhs(t: int, beta: int, order: int) -> TruncatedSeries:
    """(-q;q^2)_inf sum_{k >= 1} (tk)^(beta+1) q^(2kt) / (1 - q^(2kt))"""
    total = TruncatedSeries.zero(order)
    k = 1
    while 2 * k * t <= order:
        term = TruncatedSeries.monomial(order, 2 * k * t, Fraction(t * k) ** (beta + 1))
        total = total + term * geometric(2 * k * t, order)
        k += 1
    return total * sc_product(order)


def bgt_gf_rhs(t: int, order: int) -> TruncatedSeries:
    """Parity-split product; for odd t it is (-q;q^2)/(-q^t;q^2t), for even t it is (-q;q^2)"""
    return bg_zt_product(0, t, order)


def pz_gf_rhs(z: int, order: int, form: str = "product") -> TruncatedSeries:
    shift = abs(z)
    if form == "product":
        return pochhammer_inf(-1, 1 + shift, 2, order)
    total = TruncatedSeries.zero(order)
    d = 0
    while d * d + d * shift <= order:
        numerator = TruncatedSeries.monomial(order, d * d + d * shift, 1)
        total = total + numerator / pochhammer_finite(1, 2, 2, d, order)
        d += 1
    return total


def z_addition_mult_rhs(z: int, t: int, f: TruncatedSeries, g: TruncatedSeries,
                        order: int, ring: CoefficientRing) -> TruncatedSeries:
    """2K f_t(x^2 q^(2t))^(K-1) g_t(x^2 q^(2t)) times the z-asymmetric core product"""
    free = free_components(z, t)
    if free == 0:
        return TruncatedSeries.zero(order, ring)
    f_spread = substitute_monomial(f, 2 * t, ring, 2, order)
    g_spread = substitute_monomial(g, 2 * t, ring, 2, order)
    return f_spread ** (free - 1) * g_spread * pz_core_product(z, t, order, ring) * (2 * free)


def z_gf_y_rhs(z: int, t: int, order: int, ring: CoefficientRing) -> TruncatedSeries:
    marks = marked_pochhammer(2 * t, 2 * t, order, ring) ** free_components(z, t)
    return marks * bg_zt_product(z, t, order, ring)


def dd_gf_y_rhs(t: int, order: int, ring: CoefficientRing) -> TruncatedSeries:
    marks = marked_pochhammer(2 * t, 2 * t, order, ring) ** ((t - 1) // 2)
    base = marks * pochhammer_inf(-1, 2, 2, order, ring)
    if t % 2:
        return base / pochhammer_inf(-1, 2 * t, 2 * t, order, ring)
    return base / pochhammer_inf(-1, t, t, order, ring)


def z_no_rhs(z: int, t: int, order: int, ring: CoefficientRing) -> TruncatedSeries:
    """(q^(2t);q^(2t))_inf^(K u / t^2) times the BG_(z,t) product"""
    u = ring.generator()
    base = pochhammer_inf(1, 2 * t, 2 * t, order, ring)
    exponent = u * Fraction(free_components(z, t), t * t)
    return pow_exponent(base, exponent) * bg_zt_product(z, t, order, ring)


def no_rhs(order: int, ring: CoefficientRing) -> TruncatedSeries:
    """(q;q)_inf^(u - 1)"""
    return pow_exponent(euler(order, ring), ring.generator() - 1)


# Identity plans


@dataclass
class IdentityPlan:
    identity_id: str
    order: int
    params: Dict[str, Any]
    lhs: Callable[[], TruncatedSeries]
    rhs: Callable[[], TruncatedSeries]
    notes: List[str] = field(default_factory=list)


def _require_t(request: CheckRequest, minimum: int = 2, parity: Optional[int] = None) -> int:
    t = request.t
    if t is None:
        raise InvalidParamsError("This check needs t")
    if t < minimum:
        raise InvalidParamsError(f"This check needs t >= {minimum}, got {t}")
    if parity is not None and t % 2 != parity:
        raise InvalidParamsError(f"This check needs {'even' if parity == 0 else 'odd'} t, got {t}")
    return t


def _require_z(request: CheckRequest, t: Optional[int] = None) -> int:
    z = request.z if request.z is not None else 0
    if t is not None and not 0 <= z <= t - 1:
        raise InvalidParamsError(f"This check needs 0 <= z <= t-1, got z={z}, t={t}")
    return z


def _cap(request: CheckRequest, default: int) -> int:
    return request.degree_cap if request.degree_cap is not None else default


def _order(request: CheckRequest, default: Optional[int] = None) -> int:
    if request.order is not None:
        return request.order
    return settings.DEFAULT_ORDER if default is None else default


def _preset(request: CheckRequest, name: Optional[str], default: str, t: int, size: int,
            ring: Optional[CoefficientRing] = None) -> weights.HookWeight:
    return weights.from_preset(name or default, t, size, k=request.k, beta=request.beta or 0,
                               seed=request.seed, ring=ring)


def _fg_for(request: CheckRequest, t: int, order: int, rho1: Optional[weights.HookWeight],
            rho2: Optional[weights.HookWeight], ring: CoefficientRing, notes: List[str]):
    """
    f_t and g_t by enumeration, or by their closed forms when requested and available.
    """
    if request.closed_forms:
        rho1_one = rho1 is None or rho1.is_constant_one()
        rho1_marked = rho1 is not None and rho1.kind == "marked" and rho1.target == t
        rho2_indicator = (rho2 is not None and rho2.kind == "indicator"
                          and rho2.target == t and rho2.value == 1)
        f = None
        if rho1_one:
            f = closed_f_constant(order, ring)
        elif rho1_marked:
            f = closed_f_marked(order, ring)
        g = closed_g_indicator(order, ring) if rho1_one and rho2_indicator else None
        if f is not None and (rho2 is None or g is not None):
            notes.append("f_t and g_t taken from their closed forms")
            return f, (g if g is not None else TruncatedSeries.zero(order, ring))
        notes.append("no closed form for these hook weights; f_t and g_t enumerated")
    return fg_series(t, order, rho1, rho2, ring)


def _han_ji(request: CheckRequest) -> IdentityPlan:
    t = _require_t(request, minimum=1)
    order = _order(request)
    rho = _preset(request, request.rho, "indicator", t, order)
    notes: List[str] = []

    def rhs():
        _, g = _fg_for(request, t, order // t, None, rho, QQ, notes)
        return han_ji_rhs(t, g, order)

    return IdentityPlan(
        "han-ji-addition", order, {"t": t, "rho": rho.describe()},
        lhs=lambda: class_statistic_series(ALL, t, order, StatisticMarks(rho2=rho)),
        rhs=rhs, notes=notes,
    )


def _gt_closed(request: CheckRequest) -> IdentityPlan:
    t = _require_t(request, minimum=1)
    order = _order(request)
    rho2 = weights.indicator(t)
    return IdentityPlan(
        "gt-closed-form", order, {"t": t},
        lhs=lambda: fg_series(t, order, None, rho2)[1],
        rhs=lambda: closed_g_indicator(order),
    )


def _sc_class(t: int):
    return SELF_CONJUGATE if t % 2 == 0 else bg_t(t)


def _sc_addition(parity: int):
    def plan(request: CheckRequest) -> IdentityPlan:
        t = _require_t(request, minimum=2 if parity == 0 else 3, parity=parity)
        order = _order(request)
        rho = _preset(request, request.rho, "indicator", t, order)
        notes: List[str] = []

        def rhs():
            _, g = _fg_for(request, t, order // (2 * t), None, rho, QQ, notes)
            return sc_addition_rhs(t, g, order)

        return IdentityPlan(
            f"sc-addition-{'even' if parity == 0 else 'odd'}", order,
            {"t": t, "rho": rho.describe()},
            lhs=lambda: class_statistic_series(_sc_class(t), t, order, StatisticMarks(rho2=rho)),
            rhs=rhs, notes=notes,
        )
    return plan


def _sc_mult(parity: int):
    def plan(request: CheckRequest) -> IdentityPlan:
        t = _require_t(request, minimum=2 if parity == 0 else 3, parity=parity)
        order = _order(request)
        name = request.rho or "marked"
        ring = poly_ring("y", _cap(request, settings.Y_DEGREE_CAP)) if name == "marked" else QQ
        rho = _preset(request, name, "marked", t, order, ring)
        notes: List[str] = []

        def rhs():
            f, _ = _fg_for(request, t, order // (2 * t), rho, None, ring, notes)
            return sc_mult_rhs(t, f, order)

        return IdentityPlan(
            f"sc-mult-{'even' if parity == 0 else 'odd'}", order,
            {"t": t, "rho": rho.describe(), "degree_cap": ring.cap},
            lhs=lambda: class_statistic_series(_sc_class(t), t, order, StatisticMarks(ring=ring, rho1=rho)),
            rhs=rhs, notes=notes,
        )
    return plan


def _sc_gf_y(parity: int):
    def plan(request: CheckRequest) -> IdentityPlan:
        t = _require_t(request, minimum=2 if parity == 0 else 3, parity=parity)
        order = _order(request)
        ring = poly_ring("y", _cap(request, settings.Y_DEGREE_CAP))
        return IdentityPlan(
            f"sc-gf-y-{'even' if parity == 0 else 'odd'}", order,
            {"t": t, "degree_cap": ring.cap},
            lhs=lambda: class_statistic_series(_sc_class(t), t, order, StatisticMarks(ring=ring, y_hook=t)),
            rhs=lambda: sc_gf_y_rhs(t, order, ring),
        )
    return plan


def _sc_powersum(request: CheckRequest) -> IdentityPlan:
    t = _require_t(request, parity=0)
    beta = request.beta if request.beta is not None else 0
    order = _order(request)
    return IdentityPlan(
        "sc-powersum", order, {"t": t, "beta": beta},
        lhs=lambda: class_statistic_series(SELF_CONJUGATE, t, order, StatisticMarks(rho2=weights.power(beta))),
        rhs=lambda: sc_powersum_rhs(t, beta, order),
    )


def _bgt_gf(request: CheckRequest) -> IdentityPlan:
    t = _require_t(request)
    order = _order(request)
    notes = ["BG_t is SC for even t"] if t % 2 == 0 else []
    return IdentityPlan(
        "bgt-gf", order, {"t": t},
        lhs=lambda: class_statistic_series(bg_t(t), t, order),
        rhs=lambda: bgt_gf_rhs(t, order), notes=notes,
    )


def _pz_gf(request: CheckRequest) -> IdentityPlan:
    z = request.z if request.z is not None else 0
    order = _order(request)
    form = "sum" if request.form == "B" else "product"
    return IdentityPlan(
        "pz-gf", order, {"z": z, "form": form},
        lhs=lambda: class_statistic_series(z_asymmetric(z), 1, order),
        rhs=lambda: pz_gf_rhs(z, order, form),
    )


def _pz_core_gf(request: CheckRequest) -> IdentityPlan:
    t = _require_t(request)
    z = _require_z(request, t)
    order = _order(request)

    def lhs():
        counts = [0] * (order + 1)
        for core in enumerate_t_cores(t, order):
            if is_z_asymmetric(core, z):
                counts[core.weight] += 1
        return TruncatedSeries(order, counts)

    return IdentityPlan(
        "pz-core-gf", order, {"z": z, "t": t},
        lhs=lhs, rhs=lambda: pz_core_product(z, t, order),
    )


def _z_addition_mult(request: CheckRequest) -> IdentityPlan:
    t = _require_t(request)
    z = _require_z(request, t)
    order = _order(request)
    ring = poly_ring("x", _cap(request, settings.X_DEGREE_CAP))
    if request.rho1 == "marked":
        raise InvalidParamsError("rho1 cannot be marked here: x already uses the auxiliary variable")
    rho1 = _preset(request, request.rho1, "const", t, order)
    rho2 = _preset(request, request.rho2, "indicator", t, order)
    notes: List[str] = []
    if free_components(z, t) == 0:
        notes.append("z = t-1: both sides vanish")

    def rhs():
        f, g = _fg_for(request, t, order // (2 * t), rho1, rho2, QQ, notes)
        return z_addition_mult_rhs(z, t, f, g, order, ring)

    marks = StatisticMarks(ring=ring, x_mark=True, rho1=rho1, rho2=rho2)
    return IdentityPlan(
        "z-addition-mult", order,
        {"z": z, "t": t, "rho1": rho1.describe(), "rho2": rho2.describe(), "degree_cap": ring.cap},
        lhs=lambda: class_statistic_series(bg_zt(z, t), t, order, marks),
        rhs=rhs, notes=notes,
    )


def _z_gf_y(request: CheckRequest) -> IdentityPlan:
    t = _require_t(request)
    z = _require_z(request, t)
    order = _order(request)
    ring = poly_ring("y", _cap(request, settings.Y_DEGREE_CAP))
    return IdentityPlan(
        "z-gf-y", order, {"z": z, "t": t, "degree_cap": ring.cap},
        lhs=lambda: class_statistic_series(bg_zt(z, t), t, order, StatisticMarks(ring=ring, y_hook=t)),
        rhs=lambda: z_gf_y_rhs(z, t, order, ring),
    )


def _dd_gf_y(request: CheckRequest) -> IdentityPlan:
    t = _require_t(request)
    order = _order(request)
    ring = poly_ring("y", _cap(request, settings.Y_DEGREE_CAP))
    dd = z_asymmetric(1)

    def members(n):
        return (p for p in enumerate_class(dd, n) if in_bg_1t_diagonal(p, t))

    return IdentityPlan(
        "dd-gf-y", order, {"t": t, "degree_cap": ring.cap},
        lhs=lambda: statistic_series(members, t, order, StatisticMarks(ring=ring, y_hook=t)),
        rhs=lambda: dd_gf_y_rhs(t, order, ring),
    )


def _z_no(request: CheckRequest) -> IdentityPlan:
    t = _require_t(request)
    z = _require_z(request, t)
    order = _order(request, settings.U_ORDER)
    ring = poly_ring("u", _cap(request, settings.U_DEGREE_CAP))
    return IdentityPlan(
        "z-NO", order, {"z": z, "t": t, "degree_cap": ring.cap},
        lhs=lambda: class_statistic_series(bg_zt(z, t), t, order, StatisticMarks(ring=ring, no_weight="half")),
        rhs=lambda: z_no_rhs(z, t, order, ring),
    )


def _no(request: CheckRequest) -> IdentityPlan:
    order = _order(request, settings.NO_ORDER)
    ring = poly_ring("u", _cap(request, settings.U_DEGREE_CAP))
    return IdentityPlan(
        "NO", order, {"degree_cap": ring.cap},
        lhs=lambda: class_statistic_series(ALL, 1, order, StatisticMarks(ring=ring, no_weight="full")),
        rhs=lambda: no_rhs(order, ring),
    )


IDENTITIES: Dict[str, Callable[[CheckRequest], IdentityPlan]] = {
    "han-ji-addition": _han_ji,
    "gt-closed-form": _gt_closed,
    "sc-addition-even": _sc_addition(0),
    "sc-addition-odd": _sc_addition(1),
    "sc-mult-even": _sc_mult(0),
    "sc-mult-odd": _sc_mult(1),
    "sc-gf-y-even": _sc_gf_y(0),
    "sc-gf-y-odd": _sc_gf_y(1),
    "sc-powersum": _sc_powersum,
    "bgt-gf": _bgt_gf,
    "pz-gf": _pz_gf,
    "pz-core-gf": _pz_core_gf,
    "z-addition-mult": _z_addition_mult,
    "z-gf-y": _z_gf_y,
    "dd-gf-y": _dd_gf_y,
    "z-NO": _z_no,
    "NO": _no,
}


def as_request(params: Union[CheckRequest, Dict[str, Any], None]) -> CheckRequest:
    if isinstance(params, CheckRequest):
        return params
    try:
        return CheckRequest(**(params or {}))
    except ValueError as e:
        raise InvalidParamsError(str(e))


def plan_identity(identity_id: str, params: Union[CheckRequest, Dict[str, Any], None]) -> IdentityPlan:
    builder = IDENTITIES.get(identity_id)
    if builder is None:
        raise UnknownIdentityError(identity_id, IDENTITIES)
    return builder(as_request(params))


def rhs_formula(identity_id: str, params: Union[CheckRequest, Dict[str, Any], None],
                order: Optional[int] = None) -> TruncatedSeries:
    """Product-formula side of a catalog identity, with f_t and g_t built by enumeration"""
    request = as_request(params)
    if order is not None:
        request = request.copy(update={"order": order})
    return plan_identity(identity_id, request).rhs()
