import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple
from core.config import settings
from core.errors import InvalidParamsError
from models.series import QQ, CoefficientRing, Coefficient

PRESETS = ("const", "indicator", "power", "random", "marked")


@dataclass(frozen=True)
class HookWeight:
    """
    Function on hook lengths used as rho, rho1 or rho2.

    kind is one of PRESETS:
      const      value everywhere
      indicator  value at h == target, 0 elsewhere
      power      h ** beta
      random     seeded rational table on 1..len(table)
      marked     the ring variable at h == target, 1 elsewhere
    """

    kind: str
    value: Fraction = Fraction(1)
    target: Optional[int] = None
    beta: int = 0
    table: Tuple[Fraction, ...] = ()
    seed: Optional[int] = None
    ring: CoefficientRing = QQ

    def __call__(self, h: int) -> Coefficient:
        if h < 1:
            raise InvalidParamsError(f"Hook weights are defined on positive integers, got {h}")
        if self.kind == "const":
            return self.ring.coerce(self.value)
        if self.kind == "indicator":
            return self.ring.coerce(self.value if h == self.target else 0)
        if self.kind == "power":
            return self.ring.coerce(Fraction(h) ** self.beta)
        if self.kind == "random":
            if h > len(self.table):
                raise InvalidParamsError(f"Random table covers 1..{len(self.table)}, asked for {h}")
            return self.ring.coerce(self.table[h - 1])
        if self.kind == "marked":
            return self.ring.generator() if h == self.target else self.ring.one()
        raise InvalidParamsError(f"Unknown hook weight '{self.kind}'")

    def describe(self) -> Dict[str, Any]:
        info: Dict[str, Any] = {"kind": self.kind}
        if self.kind in ("const", "indicator"):
            info["value"] = str(self.value)
        if self.kind in ("indicator", "marked"):
            info["target"] = self.target
        if self.kind == "power":
            info["beta"] = self.beta
        if self.kind == "random":
            info["seed"] = self.seed
            info["size"] = len(self.table)
        return info

    def is_constant_one(self) -> bool:
        return (self.kind == "const" and self.value == 1) or (self.kind == "power" and self.beta == 0)


def constant(value=1) -> HookWeight:
    return HookWeight(kind="const", value=Fraction(value))


def indicator(target: int, value=1) -> HookWeight:
    return HookWeight(kind="indicator", target=target, value=Fraction(value))


def power(beta: int) -> HookWeight:
    if beta not in (0, 1, 2):
        raise InvalidParamsError(f"beta must be 0, 1 or 2, got {beta}")
    return HookWeight(kind="power", beta=beta)


def random_table(size: int, seed: Optional[int] = None) -> HookWeight:
    """Rational values in [-3, 3] with denominators up to 3, reproducible from the seed"""
    seed = settings.RANDOM_SEED if seed is None else seed
    rng = random.Random(seed)
    table = tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(size))
    return HookWeight(kind="random", table=table, seed=seed)


def marked(target: int, ring: CoefficientRing) -> HookWeight:
    if not ring.is_polynomial:
        raise InvalidParamsError("Marked hook weights need a polynomial ring")
    return HookWeight(kind="marked", target=target, ring=ring)


def from_preset(name: str, t: int, size: int, k: int = 1, beta: int = 0,
                seed: Optional[int] = None, ring: Optional[CoefficientRing] = None) -> HookWeight:
    """
    Build a preset; indicators and marks sit at h = t*k, random tables cover 1..size.
    """
    if name == "const":
        return constant()
    if name == "indicator":
        return indicator(t * k)
    if name == "power":
        return power(beta)
    if name == "random":
        return random_table(size, seed)
    if name == "marked":
        if ring is None:
            raise InvalidParamsError("Marked hook weights need a polynomial ring")
        return marked(t * k, ring)
    raise InvalidParamsError(f"Unknown hook weight preset '{name}'. Known presets: {', '.join(PRESETS)}")
