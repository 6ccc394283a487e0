import logging
from functools import lru_cache
from itertools import product
from typing import Iterator, List, Optional, Tuple
from core.errors import ClassSpecError
from models.boundary_word import BoundaryWord, conjugate_word, encode_word
from models.decomposition import AlbionEntry, AlbionReport, CoreVector, Decomposition
from models.partition import EMPTY, FrobeniusCoords, Partition, column, componentwise_add
from schemas.class_spec import ClassKind, ClassSpec
from services.enumeration import enumerate_partitions
from services.littlewood import decompose, is_t_core, kappa, recompose

logger = logging.getLogger(__name__)


def _check_bg_params(z: int, t: int):
    if t < 2 or not 0 <= z <= t - 1:
        raise ClassSpecError(f"BG classes need t >= 2 and 0 <= z <= t-1, got z={z}, t={t}")


def _check_in_pz(p: Partition, z: int):
    if not is_z_asymmetric(p, z):
        raise ClassSpecError(f"{p.parts} is not {z}-asymmetric")


def is_self_conjugate(p: Partition) -> bool:
    return p == p.conjugate()


def is_z_asymmetric(p: Partition, z: int) -> bool:
    """Frobenius arms exceed the legs by exactly z, row by row"""
    coords = p.frobenius()
    return all(a == b + z for a, b in zip(coords.arms, coords.legs))


def is_z_asymmetric_word(w: BoundaryWord, z: int) -> bool:
    """
    Word form of z-asymmetry: c_0..c_{z-1} are 1 and c_i = 1 - c_{z-i-1} for i >= z.

    Negative z is read on the conjugate word.
    """
    if z < 0:
        return is_z_asymmetric_word(conjugate_word(w), -z)
    if any(w.letter(i) != 1 for i in range(z)):
        return False
    stop = max(w.last, z - w.offset) + 2
    return all(w.letter(i) == 1 - w.letter(z - i - 1) for i in range(z, stop))


def in_bg_t(p: Partition, t: int) -> bool:
    if t < 2:
        raise ClassSpecError(f"BG_t needs t >= 2, got {t}")
    return is_self_conjugate(p) and all(h % t for h in p.diagonal_hooks())


def in_bg_zt(p: Partition, z: int, t: int) -> bool:
    _check_bg_params(z, t)
    if not is_z_asymmetric(p, z):
        return False
    for a in p.frobenius().legs:
        if any((a + k) % t == 0 for k in range(1, z + 1)):
            return False
        hook = 2 * a + z + 1
        if hook % t == 0 and (hook // t) % 2 == 1:
            return False
    return True


def in_C_zt(v: CoreVector, z: int) -> bool:
    t = v.modulus
    if not 0 <= z <= t - 1:
        raise ClassSpecError(f"C_(z;t) needs 0 <= z <= t-1, got z={z}, t={t}")
    if any(v[r] + v[z - r - 1] for r in range(z)):
        return False
    return not any(v[r] + v[t + z - r - 1] for r in range(z, t))


def in_bg_zt_via_quotient(p: Partition, z: int, t: int) -> bool:
    _check_bg_params(z, t)
    _check_in_pz(p, z)
    d = decompose(p, t)
    if not in_C_zt(kappa(d.core, t), z):
        return False
    if any(d.quotient[r] for r in range(z)):
        return False
    if (t + z - 1) % 2 == 0 and d.quotient[(t + z - 1) // 2]:
        return False
    return True


def in_bg_1t_diagonal(p: Partition, t: int) -> bool:
    """Doubled distinct with no diagonal hook divisible by t"""
    if t < 2:
        raise ClassSpecError(f"BG_(1,t) needs t >= 2, got {t}")
    return is_z_asymmetric(p, 1) and all(h % t for h in p.diagonal_hooks())


def _peel_mu(nu: Partition, n_r: int) -> Tuple[Optional[Partition], int]:
    """
    Find mu with nu = mu + (1^(n_r + d_{n_r}(mu))), by trying every column height m.
    """
    for m in range(n_r, nu.length + 1):
        parts = [part - 1 if i < m else part for i, part in enumerate(nu.parts)]
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            continue
        if any(part < 0 for part in parts):
            continue
        mu = Partition(part for part in parts if part > 0)
        shifted = mu.shifted_durfee(n_r)
        if n_r + shifted == m:
            return mu, shifted
    return None, 0


def albion_structure_report(p: Partition, z: int, t: int) -> AlbionReport:
    """
    Check the shape of the Littlewood decomposition of a z-asymmetric partition entry by entry.

    The core vector must lie in C_(z;t); components z..t-1 pair up by conjugation; for
    r < z with n_r >= 0 a partition mu^(r) must tie nu^(r) to nu^(z-r-1). Components with
    n_r < 0 are reported as not applicable.
    """
    _check_bg_params(z, t)
    _check_in_pz(p, z)
    d = decompose(p, t)
    vector = kappa(d.core, t)
    entries: List[AlbionEntry] = [
        AlbionEntry(
            index=None,
            relation="core",
            status="ok" if in_C_zt(vector, z) else "fail",
        )
    ]
    for r in range(z):
        n_r = vector[r]
        if n_r < 0:
            entries.append(AlbionEntry(index=r, relation="mu", status="not_applicable"))
            continue
        mu, shifted = _peel_mu(d.quotient[r], n_r)
        ok = mu is not None and d.quotient[z - r - 1] == componentwise_add(mu.conjugate(), column(shifted))
        entries.append(AlbionEntry(index=r, relation="mu", status="ok" if ok else "fail", mu=mu))
    for r in range(z, t):
        ok = d.quotient[r] == d.quotient[t + z - r - 1].conjugate()
        entries.append(AlbionEntry(index=r, relation="conjugate", status="ok" if ok else "fail"))
    return AlbionReport(partition=p, z=z, t=t, core_vector=vector, entries=tuple(entries))


def albion_structure_check(p: Partition, z: int, t: int) -> bool:
    return albion_structure_report(p, z, t).passed


def _distinct_hook_sets(n: int, smallest: int, largest: int) -> Iterator[List[int]]:
    # Strictly decreasing sequences of integers of fixed parity in [smallest, largest] summing to n
    if n == 0:
        yield []
        return
    top = min(n, largest)
    if (top - smallest) % 2:
        top -= 1
    for h in range(top, smallest - 1, -2):
        for rest in _distinct_hook_sets(n - h, smallest, h - 2):
            yield [h] + rest


def _enumerate_pz_direct(z: int, n: int) -> List[Partition]:
    """
    Build P_z(n) from its diagonal hooks: distinct values 2b + 1 + |z| summing to n.
    """
    shift = abs(z)
    found = []
    for hooks in _distinct_hook_sets(n, 1 + shift, n):
        legs = [(h - 1 - shift) // 2 for h in hooks]
        arms = [b + shift for b in legs]
        coords = FrobeniusCoords(arms, legs) if z >= 0 else FrobeniusCoords(legs, arms)
        found.append(coords.to_partition())
    return sorted(found, reverse=True)


def enumerate_pz_cores(z: int, t: int, n_max: int) -> List[Partition]:
    """z-asymmetric t-cores of weight <= n_max, by weight"""
    cores = []
    for n in range(n_max + 1):
        cores.extend(p for p in _class_members(ClassSpec.build(ClassKind.Z_ASYMMETRIC, z=z), n, "direct")
                     if is_t_core(p, t))
    return cores


def _quotient_tuples(weight: int, slots: int) -> Iterator[Tuple[Partition, ...]]:
    if slots == 0:
        if weight == 0:
            yield ()
        return
    for first in range(weight, -1, -1):
        for head in enumerate_partitions(first):
            for rest in _quotient_tuples(weight - first, slots - 1):
                yield (head,) + rest


def _enumerate_bg_direct(z: int, t: int, n: int) -> List[Partition]:
    """
    Rebuild BG_(z,t)(n) from a z-asymmetric t-core plus the free quotient components
    nu^(z), ..., nu^(z+K-1) with K = floor((t-z)/2); each partner nu^(t+z-r-1) is the
    conjugate and every other component is empty.
    """
    free = (t - z) // 2
    found = []
    for core in enumerate_pz_cores(z, t, n):
        rest = n - core.weight
        if rest % (2 * t):
            continue
        if free == 0:
            if rest == 0:
                found.append(core)
            continue
        for chosen in _quotient_tuples(rest // (2 * t), free):
            quotient = [EMPTY] * t
            for offset, nu in enumerate(chosen):
                r = z + offset
                quotient[r] = nu
                quotient[t + z - r - 1] = nu.conjugate()
            found.append(recompose(Decomposition(core=core, quotient=tuple(quotient), modulus=t)))
    return sorted(found, reverse=True)


def contains(spec: ClassSpec, p: Partition) -> bool:
    if spec.kind == ClassKind.ALL:
        return True
    if spec.kind == ClassKind.SELF_CONJUGATE:
        return is_self_conjugate(p)
    if spec.kind == ClassKind.Z_ASYMMETRIC:
        return is_z_asymmetric(p, spec.z)
    if spec.kind == ClassKind.BGT:
        return in_bg_t(p, spec.t)
    return in_bg_zt(p, spec.z, spec.t)


@lru_cache(maxsize=4096)
def _class_members(spec: ClassSpec, n: int, method: str) -> Tuple[Partition, ...]:
    if method == "filter" or spec.kind == ClassKind.ALL:
        members = tuple(p for p in enumerate_partitions(n) if contains(spec, p))
    elif spec.kind == ClassKind.SELF_CONJUGATE:
        members = tuple(_enumerate_pz_direct(0, n))
    elif spec.kind == ClassKind.Z_ASYMMETRIC:
        members = tuple(_enumerate_pz_direct(spec.z, n))
    elif spec.kind == ClassKind.BGT:
        # Diagonal hooks of self-conjugate partitions are odd, so BG_t is SC for even t
        z_spec = ClassSpec.build(ClassKind.SELF_CONJUGATE) if spec.t % 2 == 0 else None
        members = (_class_members(z_spec, n, method) if z_spec
                   else tuple(_enumerate_bg_direct(0, spec.t, n)))
    else:
        members = tuple(_enumerate_bg_direct(spec.z, spec.t, n))
    logger.debug(f"|{spec}({n})| = {len(members)} via {method}")
    return members


def enumerate_class(spec: ClassSpec, n: int, method: str = "direct") -> Iterator[Partition]:
    """
    Members of the class with weight n, in reverse-lexicographic order.

    method="direct" builds P_z from Frobenius diagonals and BG classes from the quotient
    data; method="filter" tests every partition of n.
    """
    if method not in ("direct", "filter"):
        raise ClassSpecError(f"Unknown enumeration method '{method}'")
    if n < 0:
        raise ClassSpecError(f"Weight must be nonnegative, got {n}")
    yield from _class_members(spec, n, method)


def class_count(spec: ClassSpec, n: int) -> int:
    if n < 0:
        return 0
    return len(_class_members(spec, n, "direct"))
