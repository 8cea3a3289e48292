"""Deciding the lifting property and the operators built on it.

``lifting_check(f, g)`` holds when every commuting square with f on the
left and g on the right admits a diagonal making both triangles commute.
On top of that single decision procedure sit the named characterizations
(surjective, T0, Hausdorff, ...), orthogonal classes over a bounded
universe, mono/epi tests, and the self-lifting scan.
"""

from __future__ import annotations

from dataclasses import dataclass

from .oracles import is_injective
from .preorder import (
    CODIAG,
    EMPTY_TO_PT,
    INDISC_TO_PT,
    PT_TO_SIERP_CLOSED,
    SIERP_TO_PT,
    TWO,
    VEE,
    FinPreorder,
    MonotoneMap,
    codiagonal,
    compose,
    diagonal,
    enumerate_preorders,
    hom_enumerate,
    to_point,
)

SPACE_PROPERTIES = ("connected", "T0", "T1", "hausdorff")
MAP_PROPERTIES = ("surjective", "injective", "dense", "induced", "pi0-injective")
PROPERTY_IDS = MAP_PROPERTIES + SPACE_PROPERTIES


class HomCache:
    """Memoized hom-sets, confined to one query evaluation.

    Lifting checks ask for the same hom-sets many times; the cache keys
    them by the (source, target) pair of spaces.
    """

    def __init__(self) -> None:
        self._homs: dict[tuple[FinPreorder, FinPreorder], tuple[MonotoneMap, ...]] = {}

    def hom(self, source: FinPreorder, target: FinPreorder) -> tuple[MonotoneMap, ...]:
        key = (source, target)
        maps = self._homs.get(key)
        if maps is None:
            maps = tuple(hom_enumerate(source, target))
            self._homs[key] = maps
        return maps


@dataclass(frozen=True)
class Square:
    """A commuting square: left f: A->B, right g: X->Y, top i: A->X, bottom j: B->Y."""

    left: MonotoneMap
    right: MonotoneMap
    top: MonotoneMap
    bottom: MonotoneMap

    def __post_init__(self) -> None:
        f, g, i, j = self.left, self.right, self.top, self.bottom
        if i.source != f.source or i.target != g.source:
            raise ValueError("top map must go from the left source to the right source")
        if j.source != f.target or j.target != g.target:
            raise ValueError("bottom map must go from the left target to the right target")
        for a in range(len(f.source)):
            if g.assign[i.assign[a]] != j.assign[f.assign[a]]:
                raise ValueError(f"square does not commute at {f.source.labels[a]!r}")


@dataclass(frozen=True)
class LiftResult:
    """Outcome of a lifting query.

    ``counterexample`` is present exactly when the property fails; it is a
    commuting square admitting no diagonal.  ``witness`` is the diagonal
    found for the first commuting square, kept for diagnostics only (it is
    None when no commuting square exists at all).
    """

    holds: bool
    counterexample: Square | None
    witness: MonotoneMap | None


def find_diagonal(square: Square) -> MonotoneMap | None:
    """Lex-least monotone d: B->X with d after f = top and g after d = bottom.

    Values on the image of f are forced by the top triangle, so they are
    propagated first; backtracking only branches on the remaining elements,
    with candidates restricted to the right fiber over the bottom map.
    """
    f, g, i, j = square.left, square.right, square.top, square.bottom
    mid_src, mid_tgt = f.target, g.source
    n = len(mid_src)
    forced: list[int | None] = [None] * n
    for a in range(len(f.source)):
        b, x = f.assign[a], i.assign[a]
        if forced[b] is not None and forced[b] != x:
            return None
        forced[b] = x
    assign = [0] * n

    def place(b: int) -> bool:
        candidates = range(len(mid_tgt)) if forced[b] is None else (forced[b],)
        for x in candidates:
            if g.assign[x] != j.assign[b]:
                continue
            ok = True
            for p in range(b):
                if mid_src.leq[p][b] and not mid_tgt.leq[assign[p]][x]:
                    ok = False
                    break
                if mid_src.leq[b][p] and not mid_tgt.leq[x][assign[p]]:
                    ok = False
                    break
            if ok:
                assign[b] = x
                if b + 1 == n or place(b + 1):
                    return True
        return False

    if n > 0 and not place(0):
        return None
    return MonotoneMap(mid_src, mid_tgt, tuple(assign))


def lifting_check(f: MonotoneMap, g: MonotoneMap, cache: HomCache | None = None) -> LiftResult:
    """Decide whether f lifts against g (f on the left, g on the right).

    Squares are visited with the top map in the outer loop and the bottom
    map in the inner loop, both in hom_enumerate order, so the reported
    counterexample is reproducible.
    """
    cache = HomCache() if cache is None else cache
    tops = cache.hom(f.source, g.source)
    bottoms = cache.hom(f.target, g.target)
    n_left = len(f.source)
    witness = None
    for i in tops:
        for j in bottoms:
            if any(g.assign[i.assign[a]] != j.assign[f.assign[a]] for a in range(n_left)):
                continue
            square = Square(f, g, i, j)
            d = find_diagonal(square)
            if d is None:
                return LiftResult(False, square, None)
            if witness is None:
                witness = d
    return LiftResult(True, None, witness)


def characterize(name: str, arg, cache: HomCache | None = None) -> LiftResult:
    """Decide a named property of a space or map via its lifting form.

    Space properties (connected, T0, T1, hausdorff) take a FinPreorder;
    the rest take a MonotoneMap.  Each formula plugs the argument and the
    built-in constant maps into lifting_check.
    """
    if name in SPACE_PROPERTIES:
        if not isinstance(arg, FinPreorder):
            raise ValueError(f"property {name!r} applies to a space, got {type(arg).__name__}")
    elif name in MAP_PROPERTIES:
        if not isinstance(arg, MonotoneMap):
            raise ValueError(f"property {name!r} applies to a map, got {type(arg).__name__}")
    else:
        raise ValueError(f"unknown property {name!r}")
    cache = HomCache() if cache is None else cache
    if name == "surjective":
        return lifting_check(EMPTY_TO_PT, arg, cache)
    if name == "injective":
        return lifting_check(CODIAG, arg, cache)
    if name == "dense":
        return lifting_check(arg, PT_TO_SIERP_CLOSED, cache)
    if name == "induced":
        return lifting_check(arg, SIERP_TO_PT, cache)
    if name == "pi0-injective":
        return lifting_check(arg, CODIAG, cache)
    if name == "connected":
        return lifting_check(to_point(arg), CODIAG, cache)
    if name == "T0":
        return lifting_check(INDISC_TO_PT, to_point(arg), cache)
    if name == "T1":
        return lifting_check(SIERP_TO_PT, to_point(arg), cache)
    # hausdorff: conjunction over embeddings of the discrete pair, tested
    # against the three-point space with two open tops.  A repeated point
    # can never be sent to the two incomparable tops, so only injective
    # pairs are quantified; otherwise every nonempty space would fail.
    witness = None
    for pair in cache.hom(TWO, arg):
        if not is_injective(pair):
            continue
        result = lifting_check(pair, to_point(VEE), cache)
        if not result.holds:
            return result
        if witness is None:
            witness = result.witness
    return LiftResult(True, None, witness)


@dataclass(frozen=True)
class Universe:
    """All labeled spaces up to max_size and all monotone maps between them."""

    max_size: int
    spaces: tuple[FinPreorder, ...]
    maps: tuple[MonotoneMap, ...]

    @classmethod
    def build(cls, max_size: int, cache: HomCache | None = None) -> "Universe":
        cache = HomCache() if cache is None else cache
        spaces = tuple(enumerate_preorders(max_size))
        maps = tuple(m for p in spaces for q in spaces for m in cache.hom(p, q))
        return cls(max_size, spaces, maps)

    def hom(self, source: FinPreorder, target: FinPreorder) -> tuple[MonotoneMap, ...]:
        return tuple(m for m in self.maps if m.source == source and m.target == target)


def mono_lift_result(f: MonotoneMap, universe: Universe, cache: HomCache | None = None) -> LiftResult:
    """Lifting reading of mono: the codiagonal of every Z lifts against f."""
    cache = HomCache() if cache is None else cache
    witness = None
    for z in universe.spaces:
        result = lifting_check(codiagonal(z), f, cache)
        if not result.holds:
            return result
        if witness is None:
            witness = result.witness
    return LiftResult(True, None, witness)


def epi_lift_result(f: MonotoneMap, universe: Universe, cache: HomCache | None = None) -> LiftResult:
    """Lifting reading of epi: f lifts against the diagonal of every Z."""
    cache = HomCache() if cache is None else cache
    witness = None
    for z in universe.spaces:
        result = lifting_check(f, diagonal(z), cache)
        if not result.holds:
            return result
        if witness is None:
            witness = result.witness
    return LiftResult(True, None, witness)


def is_mono_upto(f: MonotoneMap, universe: Universe, cache: HomCache | None = None) -> bool:
    return mono_lift_result(f, universe, cache).holds


def is_epi_upto(f: MonotoneMap, universe: Universe, cache: HomCache | None = None) -> bool:
    return epi_lift_result(f, universe, cache).holds


def is_mono_cancellation(
    f: MonotoneMap, universe: Universe, cache: HomCache | None = None
) -> bool:
    """Direct mono definition: f is left-cancellable against universe sources.

    The probe maps Z -> source(f) are enumerated in full, not restricted
    to maps between universe spaces, so f itself may have endpoints
    outside the universe.
    """
    cache = HomCache() if cache is None else cache
    for z in universe.spaces:
        candidates = cache.hom(z, f.source)
        for a, g1 in enumerate(candidates):
            for g2 in candidates[a + 1 :]:
                if compose(g1, f) == compose(g2, f):
                    return False
    return True


def is_epi_cancellation(
    f: MonotoneMap, universe: Universe, cache: HomCache | None = None
) -> bool:
    """Direct epi definition: f is right-cancellable against universe targets."""
    cache = HomCache() if cache is None else cache
    for z in universe.spaces:
        candidates = cache.hom(f.target, z)
        for a, h1 in enumerate(candidates):
            for h2 in candidates[a + 1 :]:
                if compose(f, h1) == compose(f, h2):
                    return False
    return True


def orthogonal_class(
    side: str,
    tests: list[MonotoneMap],
    universe: Universe,
    cache: HomCache | None = None,
) -> list[MonotoneMap]:
    """Maps of the universe lifting against every test, on the given side.

    side="right" keeps g with t lifting against g for all tests t;
    side="left" keeps f with f lifting against all tests.  Output follows
    universe order.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    cache = HomCache() if cache is None else cache
    out = []
    for m in universe.maps:
        if side == "right":
            ok = all(lifting_check(t, m, cache).holds for t in tests)
        else:
            ok = all(lifting_check(m, t, cache).holds for t in tests)
        if ok:
            out.append(m)
    return out


def self_lifting_scan(universe: Universe, cache: HomCache | None = None) -> list[MonotoneMap]:
    """All maps of the universe lifting against themselves.

    These are exactly the isomorphisms: a non-isomorphism never has the
    lifting property relative to itself.
    """
    cache = HomCache() if cache is None else cache
    return [f for f in universe.maps if lifting_check(f, f, cache).holds]
