from enum import Enum
from typing import Optional
from pydantic import BaseModel, ValidationError, validator
from core.errors import ClassSpecError


class ClassKind(str, Enum):
    ALL = "all"
    SELF_CONJUGATE = "sc"
    Z_ASYMMETRIC = "pz"
    BGT = "bgt"
    BGZT = "bgzt"


class ClassSpec(BaseModel):
    kind: ClassKind
    t: Optional[int] = None
    z: Optional[int] = None

    @validator("t", always=True)
    def check_modulus(cls, v, values):
        kind = values.get("kind")
        if kind in (ClassKind.BGT, ClassKind.BGZT):
            if v is None or v < 2:
                raise ValueError(f"{kind.value} needs t >= 2")
        elif v is not None:
            raise ValueError(f"{kind.value if kind else 'class'} takes no t parameter")
        return v

    @validator("z", always=True)
    def check_shift(cls, v, values):
        kind = values.get("kind")
        if kind == ClassKind.Z_ASYMMETRIC:
            if v is None:
                raise ValueError("pz needs a z parameter")
        elif kind == ClassKind.BGZT:
            t = values.get("t")
            if v is None or t is None or not 0 <= v <= t - 1:
                raise ValueError(f"bgzt needs 0 <= z <= t-1, got z={v}, t={t}")
        elif v is not None:
            raise ValueError(f"{kind.value if kind else 'class'} takes no z parameter")
        return v

    class Config:
        frozen = True

    @classmethod
    def parse(cls, text: str) -> "ClassSpec":
        """
        Parse "all", "sc", "pz:1", "bgt:5" or "bgzt:1,5" (z first, then t)
        """
        raw = text.strip().lower()
        name, _, args = raw.partition(":")
        try:
            kind = ClassKind(name)
        except ValueError:
            raise ClassSpecError(
                f"Unknown class '{text}'. Expected one of: all, sc, pz:Z, bgt:T, bgzt:Z,T"
            )
        try:
            numbers = [int(piece) for piece in args.split(",")] if args else []
        except ValueError:
            raise ClassSpecError(f"Malformed class parameters in '{text}'")
        expected = {ClassKind.ALL: 0, ClassKind.SELF_CONJUGATE: 0, ClassKind.Z_ASYMMETRIC: 1,
                    ClassKind.BGT: 1, ClassKind.BGZT: 2}[kind]
        if len(numbers) != expected:
            raise ClassSpecError(f"'{kind.value}' takes {expected} parameter(s), got '{text}'")
        fields = {}
        if kind == ClassKind.Z_ASYMMETRIC:
            fields["z"] = numbers[0]
        elif kind == ClassKind.BGT:
            fields["t"] = numbers[0]
        elif kind == ClassKind.BGZT:
            fields["z"], fields["t"] = numbers
        return cls.build(kind, **fields)

    @classmethod
    def build(cls, kind: ClassKind, t: Optional[int] = None, z: Optional[int] = None) -> "ClassSpec":
        try:
            return cls(kind=kind, t=t, z=z)
        except ValidationError as e:
            raise ClassSpecError("; ".join(err["msg"] for err in e.errors()))

    def __str__(self) -> str:
        if self.kind == ClassKind.Z_ASYMMETRIC:
            return f"pz:{self.z}"
        if self.kind == ClassKind.BGT:
            return f"bgt:{self.t}"
        if self.kind == ClassKind.BGZT:
            return f"bgzt:{self.z},{self.t}"
        return self.kind.value


ALL = ClassSpec(kind=ClassKind.ALL)
SELF_CONJUGATE = ClassSpec(kind=ClassKind.SELF_CONJUGATE)


def z_asymmetric(z: int) -> ClassSpec:
    return ClassSpec.build(ClassKind.Z_ASYMMETRIC, z=z)


def bg_t(t: int) -> ClassSpec:
    return ClassSpec.build(ClassKind.BGT, t=t)


def bg_zt(z: int, t: int) -> ClassSpec:
    return ClassSpec.build(ClassKind.BGZT, t=t, z=z)
