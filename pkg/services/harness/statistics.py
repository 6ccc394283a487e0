import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Tuple
from core.errors import InvalidParamsError
from models.partition import Partition
from models.series import QQ, CoefficientRing, Coefficient, TruncatedSeries
from schemas.class_spec import ClassSpec
from services.classes import enumerate_class
from services.enumeration import enumerate_partitions
from services.harness.weights import HookWeight

logger = logging.getLogger(__name__)

Members = Callable[[int], Iterable[Partition]]


@dataclass(frozen=True)
class StatisticMarks:
    """
    Which statistic each partition contributes, over H_t(lambda):

      y_hook     ring variable to the power n_{y_hook}(lambda)
      x_mark     ring variable to the power |H_t(lambda)|
      rho1       product of rho1(h)
      rho2       sum of rho2(h)
      no_weight  "full": product of (1 - u/h^2); "half": the same with halved multiplicities
    """

    ring: CoefficientRing = QQ
    y_hook: Optional[int] = None
    x_mark: bool = False
    rho1: Optional[HookWeight] = None
    rho2: Optional[HookWeight] = None
    no_weight: Optional[str] = None

    def __post_init__(self):
        if self.no_weight not in (None, "full", "half"):
            raise InvalidParamsError(f"Unknown NO weight '{self.no_weight}'")
        uses = [self.y_hook is not None, self.x_mark, self.no_weight is not None]
        uses += [w is not None and w.ring.is_polynomial for w in (self.rho1, self.rho2)]
        if sum(uses) > 1:
            raise InvalidParamsError("Only one auxiliary variable can be marked at a time")
        if any(uses) and not self.ring.is_polynomial:
            raise InvalidParamsError("Marked statistics need a polynomial coefficient ring")
        for weight in (self.rho1, self.rho2):
            if weight is not None and weight.ring.is_polynomial and weight.ring != self.ring:
                raise InvalidParamsError(f"Hook weight over {weight.ring} used in {self.ring}")


def partition_statistic(p: Partition, t: int, marks: StatisticMarks) -> Coefficient:
    ring = marks.ring
    hooks = p.hooks(t)
    value = ring.one()
    if marks.y_hook is not None:
        value = value * ring.generator() ** p.count_hooks_equal(marks.y_hook)
    if marks.x_mark:
        value = value * ring.generator() ** hooks.total
    if marks.rho1 is not None:
        for h, mult in hooks.items():
            value = value * ring.coerce(marks.rho1(h)) ** mult
    if marks.no_weight is not None:
        if marks.no_weight == "half" and not hooks.all_even():
            raise InvalidParamsError(
                f"Hook {hooks.first_odd()} of {p.parts} has odd multiplicity; the half NO weight is undefined"
            )
        u = ring.generator()
        for h, mult in hooks.items():
            exponent = mult // 2 if marks.no_weight == "half" else mult
            value = value * (ring.one() - u / (h * h)) ** exponent
    if marks.rho2 is not None:
        total = ring.zero()
        for h, mult in hooks.items():
            total = total + ring.coerce(marks.rho2(h)) * mult
        value = value * total
    return value


def statistic_series(members: Members, t: int, order: int, marks: StatisticMarks) -> TruncatedSeries:
    """Sum of the marked statistic over members(n), n = 0..order"""
    ring = marks.ring
    coeffs = []
    for n in range(order + 1):
        total = ring.zero()
        for p in members(n):
            total = total + partition_statistic(p, t, marks)
        coeffs.append(total)
    return TruncatedSeries(order, coeffs, ring)


def class_statistic_series(spec: ClassSpec, t: int, order: int,
                           marks: Optional[StatisticMarks] = None) -> TruncatedSeries:
    marks = marks or StatisticMarks()
    logger.debug(f"Building statistic series over {spec} with t={t} to order {order}")
    return statistic_series(lambda n: enumerate_class(spec, n), t, order, marks)


def fg_series(t: int, order: int, rho1: Optional[HookWeight], rho2: Optional[HookWeight],
              ring: CoefficientRing = QQ) -> Tuple[TruncatedSeries, TruncatedSeries]:
    """
    f_t(q) = sum q^|l| prod_{h in H(l)} rho1(th)^2 and
    g_t(q) = sum q^|l| prod_{h in H(l)} rho1(th)^2 sum_{h in H(l)} rho2(th),
    both by enumeration over every partition of weight <= order.
    """
    f_coeffs, g_coeffs = [], []
    for n in range(order + 1):
        f_total, g_total = ring.zero(), ring.zero()
        for p in enumerate_partitions(n):
            hooks = p.hooks(1)
            product = ring.one()
            if rho1 is not None:
                for h, mult in hooks.items():
                    product = product * ring.coerce(rho1(t * h)) ** (2 * mult)
            f_total = f_total + product
            if rho2 is not None:
                added = ring.zero()
                for h, mult in hooks.items():
                    added = added + ring.coerce(rho2(t * h)) * mult
                g_total = g_total + product * added
        f_coeffs.append(f_total)
        g_coeffs.append(g_total)
    return TruncatedSeries(order, f_coeffs, ring), TruncatedSeries(order, g_coeffs, ring)
