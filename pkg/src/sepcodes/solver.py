"""Exact minimum-code computation, the brute-force cross-check oracle,
the logarithmic lower bounds, the maximum-order formulas, and the relation
checks between the eight code numbers."""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .codes import ALL_KINDS, CodeKind, Separation, is_admissible, is_code
from .errors import BudgetError, GuardError
from .graphs import (
    ENUMERATION_GUARD,
    Graph,
    edge_bit_pairs,
    labeled_graph_count,
)

DEFAULT_BUDGET = 5_000_000
ORACLE_GUARD = 20


def lower_bound(kind: CodeKind, n: int) -> int:
    """Logarithmic lower bound on the kind-number of any admissible graph
    of order n (exact integer arithmetic, logs base 2)."""
    if n < 1:
        raise ValueError("order must be at least 1")
    if kind in (CodeKind.LD, CodeKind.LTD):
        return n.bit_length() - 1  # floor(log n)
    if kind is CodeKind.OD:
        return (n - 1).bit_length()  # ceil(log n)
    if kind in (CodeKind.OTD, CodeKind.ID, CodeKind.ITD):
        return n.bit_length()  # ceil(log (n+1))
    if kind is CodeKind.FD:
        return n.bit_length()  # 1 + floor(log n)
    return (n + 1).bit_length()  # FTD: 1 + floor(log (n+1))


def max_order(kind: CodeKind, k: int) -> int:
    """Largest order an admissible graph with kind-number k can have."""
    minimum = 4 if kind in (CodeKind.FD, CodeKind.FTD) else 2
    if k < minimum:
        raise ValueError(f"{kind.name} requires k >= {minimum}, got {k}")
    if kind in (CodeKind.LD, CodeKind.LTD):
        return (1 << k) + k - 1
    if kind is CodeKind.OD:
        return 1 << k
    if kind in (CodeKind.OTD, CodeKind.ID, CodeKind.ITD):
        return (1 << k) - 1
    if kind is CodeKind.FD:
        return (1 << k) - k
    return (1 << k) - k - 1  # FTD


def make_mask_checker(
    n: int, adj: list[int] | tuple[int, ...], closed: list[int] | tuple[int, ...], kind: CodeKind
) -> Callable[[int], bool]:
    """Fused separation+domination test over a candidate code mask.

    Specialized per kind for the solver's hot loops; agrees with
    codes.is_code on every input (property-tested exhaustively)."""
    total = kind.total_domination
    sep = kind.separation
    rng = range(n)

    if sep is Separation.LOCATION:

        def check(c: int) -> bool:
            seen = set()
            for v in rng:
                s = adj[v] & c
                if c >> v & 1:
                    if total and not s:
                        return False
                elif not s or s in seen:
                    return False
                else:
                    seen.add(s)
            return True

    elif sep is Separation.OPEN:

        def check(c: int) -> bool:
            seen = set()
            for v in rng:
                s = adj[v] & c
                if not s and (total or not c >> v & 1):
                    return False
                if s in seen:
                    return False
                seen.add(s)
            return True

    elif sep is Separation.CLOSED:

        def check(c: int) -> bool:
            seen = set()
            for v in rng:
                s = closed[v] & c
                if not s or s in seen:
                    return False
                seen.add(s)
                if total and not adj[v] & c:
                    return False
            return True

    else:  # FULL

        def check(c: int) -> bool:
            oseen = set()
            cseen = set()
            for v in rng:
                s = adj[v] & c
                if not s and (total or not c >> v & 1):
                    return False
                if s in oseen:
                    return False
                oseen.add(s)
                sc = closed[v] & c
                if sc in cseen:
                    return False
                cseen.add(sc)
            return True

    return check


def _graph_checker(g: Graph, kind: CodeKind) -> Callable[[int], bool]:
    closed = tuple(nb | (1 << v) for v, nb in enumerate(g.adj))
    return make_mask_checker(g.order, g.adj, closed, kind)


@dataclass(frozen=True)
class SolveReport:
    """Result of one minimum-code computation. number is None when the
    graph admits no code of this kind at all."""

    kind: CodeKind
    number: int | None
    witness: int | None
    subsets_tested: int
    lower_bound: int

    @property
    def inadmissible(self) -> bool:
        return self.number is None


def min_code(g: Graph, kind: CodeKind, budget: int = DEFAULT_BUDGET) -> SolveReport:
    """Exact kind-number with a deterministic witness: cardinalities are
    tried from the lower-bound floor upward, subsets within a cardinality in
    lexicographic order, and the first passing subset is returned."""
    lb = lower_bound(kind, g.order)
    if not is_admissible(g, kind):
        return SolveReport(kind, None, None, 0, lb)
    check = _graph_checker(g, kind)
    tested = 0
    for size in range(max(1, lb), g.order + 1):
        for combo in itertools.combinations(range(g.order), size):
            tested += 1
            if tested > budget:
                raise BudgetError(
                    f"budget of {budget} subsets exhausted at cardinality {size}",
                    subsets_tested=tested,
                )
            c = 0
            for v in combo:
                c |= 1 << v
            if check(c):
                return SolveReport(kind, size, c, tested, lb)
    raise AssertionError("admissible graph has no code; admissibility test is wrong")


def oracle_min_code(g: Graph, kind: CodeKind) -> SolveReport:
    """Independent brute force: test every one of the 2^n subsets with the
    definitional predicate, no cardinality shortcut, no pruning."""
    if g.order > ORACLE_GUARD:
        raise GuardError(f"oracle enumeration is guarded at order {ORACLE_GUARD}")
    lb = lower_bound(kind, g.order)
    best: int | None = None
    best_size = g.order + 1
    tested = 0
    for mask in range(1 << g.order):
        tested += 1
        if not is_code(g, mask, kind):
            continue
        size = mask.bit_count()
        if size < best_size:
            best, best_size = mask, size
        elif size == best_size and best is not None and _lex_key(mask) < _lex_key(best):
            best = mask
    if best is None:
        return SolveReport(kind, None, None, tested, lb)
    return SolveReport(kind, best_size, best, tested, lb)


def _lex_key(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class RelationReport:
    """All eight code numbers of one graph plus the pairwise relations that
    hold between admissible kinds: the LD-number is a floor for every other
    number, the FTD-number a ceiling, and the OD/OTD and FD/FTD numbers
    differ by at most one."""

    numbers: dict[CodeKind, int | None]
    checks: dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def relation_check(g: Graph, budget: int = DEFAULT_BUDGET) -> RelationReport:
    numbers = {kind: min_code(g, kind, budget).number for kind in ALL_KINDS}
    ld = numbers[CodeKind.LD]
    ftd = numbers[CodeKind.FTD]
    checks = {
        "ld_is_floor": all(x is None or ld <= x for x in numbers.values()),
        "ftd_is_ceiling": ftd is None
        or all(x is None or x <= ftd for x in numbers.values()),
        "od_otd_gap_at_most_one": numbers[CodeKind.OTD] is None
        or abs(numbers[CodeKind.OD] - numbers[CodeKind.OTD]) <= 1,
        "fd_ftd_gap_at_most_one": ftd is None
        or abs(numbers[CodeKind.FD] - ftd) <= 1,
    }
    return RelationReport(numbers, checks)


@dataclass(frozen=True)
class CensusReport:
    """Distribution of the kind-number over all labeled graphs of one order."""

    kind: CodeKind
    n: int
    histogram: dict[int, int]
    inadmissible: int


def _census_range(kind_name: str, n: int, lo: int, hi: int) -> tuple[dict[int, int], int]:
    kind = CodeKind[kind_name]
    pairs = edge_bit_pairs(n)
    bits = [1 << v for v in range(n)]
    masks_by_size = [
        [sum(bits[v] for v in combo) for combo in itertools.combinations(range(n), size)]
        for size in range(n + 1)
    ]
    hist: Counter[int] = Counter()
    inadmissible = 0
    for code in range(lo, hi):
        adj = [0] * n
        c = code
        t = 0
        while c:
            if c & 1:
                i, j = pairs[t]
                adj[i] |= bits[j]
                adj[j] |= bits[i]
            c >>= 1
            t += 1
        closed = [adj[v] | bits[v] for v in range(n)]
        if not _masks_admissible(n, adj, closed, kind):
            inadmissible += 1
            continue
        check = make_mask_checker(n, adj, closed, kind)
        lb = max(1, lower_bound(kind, n))
        number = None
        for size in range(lb, n + 1):
            if any(check(m) for m in masks_by_size[size]):
                number = size
                break
        hist[number] += 1
    return dict(hist), inadmissible


def _masks_admissible(n: int, adj: list[int], closed: list[int], kind: CodeKind) -> bool:
    if kind.total_domination and any(nb == 0 for nb in adj):
        return False
    sep = kind.separation
    if sep in (Separation.OPEN, Separation.FULL):
        for u in range(n):
            au = adj[u]
            for v in range(u + 1, n):
                if not au >> v & 1 and au == adj[v]:
                    return False
    if sep in (Separation.CLOSED, Separation.FULL):
        for u in range(n):
            cu = closed[u]
            au = adj[u]
            for v in range(u + 1, n):
                if au >> v & 1 and cu == closed[v]:
                    return False
    return True


def census(
    kind: CodeKind, n: int, jobs: int = 1, allow_large: bool = False
) -> CensusReport:
    """Kind-number histogram over every labeled graph on n vertices."""
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > ENUMERATION_GUARD and not allow_large:
        raise GuardError(
            f"census enumeration is guarded at order {ENUMERATION_GUARD}; "
            f"pass allow_large=True to override"
        )
    total = labeled_graph_count(n)
    chunks = _split_range(total, jobs)
    if len(chunks) == 1:
        results = [_census_range(kind.name, n, 0, total)]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(_census_range_args, [(kind.name, n, lo, hi) for lo, hi in chunks])
            )
    hist: Counter[int] = Counter()
    inadmissible = 0
    for part_hist, part_inadm in results:
        hist.update(part_hist)
        inadmissible += part_inadm
    return CensusReport(kind, n, dict(sorted(hist.items())), inadmissible)


def _census_range_args(args: tuple[str, int, int, int]) -> tuple[dict[int, int], int]:
    return _census_range(*args)


def _split_range(total: int, jobs: int) -> list[tuple[int, int]]:
    jobs = max(1, jobs)
    if jobs == 1 or total < 2 * jobs:
        return [(0, total)]
    step = -(-total // (jobs * 4))
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]
