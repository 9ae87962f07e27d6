"""C-realizability: lists built from copies of (0) by three moves.

The moves, applied to a working collection of lists, are

* ``union``     merge two working lists;
* ``shift_top`` raise the top entry of one list by eps > 0;
* ``guo``       raise the top entry by eps and move entry ``position`` (>= 2)
                by +eps or -eps.

A :class:`MoveSequence` replayed from ``start_count`` copies of (0) is a
polynomial-time checkable certificate.  :func:`search_bms` is best effort:
it can find certificates but its failure is never a proof of non-membership.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .criteria_partition import SpCertificate, check_sp, is_suleimanova, sp_blocks
from .errors import BadMove, InvalidCertificate, InvariantViolation, SearchTooLarge
from .exactnum import common_denominator
from .spectra import SpectrumList, require_context, same_multiset

UNION = "union"
SHIFT_TOP = "shift_top"
GUO = "guo"
KINDS = (UNION, SHIFT_TOP, GUO)

DEFAULT_BUDGET = 5000


@dataclass(frozen=True)
class Move:
    kind: str
    operands: tuple  # 1-based working-list indices
    epsilon: Optional[Fraction] = None
    position: Optional[int] = None
    sign: Optional[str] = None

    @classmethod
    def union(cls, a, b):
        return cls(UNION, (a, b))

    @classmethod
    def shift_top(cls, lst, eps):
        return cls(SHIFT_TOP, (lst,), Fraction(eps))

    @classmethod
    def guo(cls, lst, position, eps, sign):
        return cls(GUO, (lst,), Fraction(eps), position, sign)


@dataclass(frozen=True)
class MoveSequence:
    start_count: int
    moves: tuple = ()


def _in_context(v) -> bool:
    return bool(v) and sum(v) >= 0 and v[0] >= -v[-1]


def _pick(lists, idx):
    if not isinstance(idx, int) or isinstance(idx, bool) or not 1 <= idx <= len(lists):
        raise BadMove(f"working list {idx!r} does not exist ({len(lists)} lists)")
    return idx - 1


def _positive_eps(move):
    eps = move.epsilon
    if eps is None or Fraction(eps) <= 0:
        raise BadMove(f"{move.kind} needs epsilon > 0, got {eps!r}")
    return Fraction(eps)


def apply_move(lists: list, move: Move) -> list:
    """Return the working lists after ``move``; raises BadMove on misuse."""
    lists = list(lists)
    if move.kind == UNION:
        if len(move.operands) != 2:
            raise BadMove("union takes two operands")
        a, b = (_pick(lists, i) for i in move.operands)
        if a == b:
            raise BadMove("union of a list with itself")
        lo, hi = sorted((a, b))
        merged = tuple(sorted(lists[lo] + lists[hi], reverse=True))
        lists[lo] = merged
        del lists[hi]
        return lists
    if move.kind not in (SHIFT_TOP, GUO) or len(move.operands) != 1:
        raise BadMove(f"unknown or malformed move {move.kind!r}")
    k = _pick(lists, move.operands[0])
    eps = _positive_eps(move)
    v = list(lists[k])
    before = tuple(v)
    v[0] += eps
    if move.kind == GUO:
        pos = move.position
        if not isinstance(pos, int) or isinstance(pos, bool) or not 2 <= pos <= len(v):
            raise BadMove(f"guo position {pos!r} invalid for a list of length {len(v)}")
        if move.sign == "+":
            v[pos - 1] += eps
        elif move.sign == "-":
            v[pos - 1] -= eps
        else:
            raise BadMove(f"guo sign must be '+' or '-', got {move.sign!r}")
        # the raised top must still dominate every modulus
        if any(abs(x) > v[0] for x in v[1:]):
            raise InvariantViolation(f"guo on {before} broke dominance of the top entry")
    lists[k] = tuple(sorted(v, reverse=True))
    return lists


def replay(seq: MoveSequence) -> SpectrumList:
    n = seq.start_count
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise BadMove(f"start_count must be a positive integer, got {n!r}")
    lists = [(Fraction(0),) for _ in range(n)]
    for move in seq.moves:
        lists = apply_move(lists, move)
        for v in lists:
            if not _in_context(v):
                raise InvariantViolation(f"working list {v} left the candidate context")
    if len(lists) != 1:
        raise BadMove(f"replay ended with {len(lists)} lists, expected 1")
    return SpectrumList(lists[0])


def verify_bms(lam: SpectrumList, seq: MoveSequence) -> bool:
    try:
        out = replay(seq)
    except (BadMove, InvariantViolation, TypeError, AttributeError):
        return False
    return same_multiset(out, lam)


# Plans are small trees that linearize into move sequences:
#   ("zeros", n) | ("union", a, b) | ("shift", inner, eps)
#   | ("guo", inner, eps, position, sign)

def _su_plan(block) -> tuple:
    head, *tail = block
    plan = ("zeros", 1)
    built = 0
    for mu in tail:
        plan = ("guo", ("union", plan, ("zeros", 1)), -mu, 2, "-")
        built -= mu
    if head > built:
        plan = ("shift", plan, head - built)
    return plan


def _sp_plan(blocks) -> tuple:
    plans = [_su_plan(tuple(b)) for b in blocks]
    plan = plans[0]
    for p in plans[1:]:
        plan = ("union", plan, p)
    return plan


def _plan_size(plan) -> int:
    kind = plan[0]
    if kind == "zeros":
        return plan[1]
    if kind == "union":
        return _plan_size(plan[1]) + _plan_size(plan[2])
    return _plan_size(plan[1])


def _emit(plan, w, out, scale):
    kind = plan[0]
    if kind == "zeros":
        out.extend(Move.union(w, w + 1) for _ in range(plan[1] - 1))
    elif kind == "union":
        _emit(plan[1], w, out, scale)
        _emit(plan[2], w + 1, out, scale)
        out.append(Move.union(w, w + 1))
    elif kind == "shift":
        _emit(plan[1], w, out, scale)
        out.append(Move.shift_top(w, Fraction(plan[2]) / scale))
    else:
        _, inner, eps, pos, sign = plan
        _emit(inner, w, out, scale)
        out.append(Move.guo(w, pos, Fraction(eps) / scale, sign))


def linearize(plan, scale=1) -> MoveSequence:
    """Moves for ``plan``; every eps is divided by ``scale`` on the way out."""
    out = []
    _emit(plan, 1, out, scale)
    return MoveSequence(_plan_size(plan), tuple(out))


def compile_sp_to_bms(cert: SpCertificate) -> MoveSequence:
    """Turn a Suleimanova partition into an equivalent move sequence.

    Each block grows from a single (0): union a fresh (0), then a guo move
    pushes the zero down to the next tail entry while raising the head.
    A final shift tops the head up to its value; blocks are then merged.
    """
    blocks = tuple(cert.blocks)
    if not blocks or not all(is_suleimanova(b) for b in blocks):
        raise InvalidCertificate("every block must be a Suleimanova list")
    return linearize(_sp_plan(blocks))


@dataclass(frozen=True)
class BmsSearchResult:
    found: bool
    sequence: Optional[MoveSequence]
    nodes: int
    budget: int
    budget_exhausted: bool

    def __bool__(self):
        return self.found


class _OutOfBudget(Exception):
    pass


class _BackwardSearch:
    """Undo moves from the target until only zeros remain.

    Candidate eps values are restricted to differences that create a zero
    entry, a tie with the top, or a zero sum, so each state has finitely many
    predecessors; (length, top) strictly decreases along every path.
    """

    def __init__(self, budget):
        self.budget = budget
        self.nodes = 0
        self.failed = set()
        self.solved = {}

    def solve(self, v: tuple):
        if v in self.solved:
            return self.solved[v]
        if v in self.failed:
            return None
        self.nodes += 1
        if self.nodes > self.budget:
            raise _OutOfBudget
        plan = self._expand(v)
        if plan is None:
            self.failed.add(v)
        else:
            self.solved[v] = plan
        return plan

    def _expand(self, v):
        n = len(v)
        if all(x == 0 for x in v):
            return ("zeros", n)
        try:
            blocks = sp_blocks(v, max_nodes=10_000)
        except SearchTooLarge:
            blocks = None
        if blocks is not None:
            return _sp_plan(blocks)
        for a, b in self._splits(v):
            pa = self.solve(a)
            if pa is None:
                continue
            pb = self.solve(b)
            if pb is not None:
                return ("union", pa, pb)
        for pred, eps, pos, sign in self._undo_moves(v):
            inner = self.solve(pred)
            if inner is None:
                continue
            if sign is None:
                return ("shift", inner, eps)
            return ("guo", inner, eps, pos, sign)
        return None

    def _splits(self, v):
        n = len(v)
        if n < 2:
            return
        # splitting off a zero first is cheap and usually right
        if 0 in v[1:]:
            rest = list(v)
            rest.remove(0)
            if _in_context(rest):
                yield tuple(rest), (0,)
        seen = set()
        others = v[1:]
        for size in range(1, n):
            for idx in combinations(range(len(others)), size):
                chosen = set(idx)
                b = tuple(others[i] for i in idx)
                a = (v[0],) + tuple(others[i] for i in range(len(others)) if i not in chosen)
                if (a, b) in seen:
                    continue
                seen.add((a, b))
                if _in_context(a) and _in_context(b):
                    yield a, b

    def _undo_moves(self, v):
        top, rest = v[0], list(v[1:])
        sigma = sum(v)
        eps_pool = {top - abs(x) for x in rest} | {top}
        seen = set()

        def emit(pred_list, eps, pos, sign):
            pred = tuple(sorted(pred_list, reverse=True))
            key = (pred, eps, sign)
            if key in seen or not _in_context(pred):
                return None
            seen.add(key)
            return pred

        # undo shift_top
        if rest:
            tight = top - max(rest[0], -rest[-1])
            for eps in sorted({tight, sigma} | eps_pool, reverse=True):
                if 0 < eps <= tight and eps <= sigma:
                    pred = emit([top - eps] + rest, eps, None, None)
                    if pred is not None:
                        yield pred, eps, None, None
        # undo guo at every distinct non-top value
        for j, x in enumerate(rest):
            if j and rest[j - 1] == x:
                continue
            others = rest[:j] + rest[j + 1:]
            cands = set(eps_pool)
            if x < 0:
                cands.add(-x)
            for sign in ("-", "+"):
                local = set(cands)
                if sign == "+" and x > 0:
                    local.add(x)
                for eps in sorted(local, reverse=True):
                    if eps <= 0:
                        continue
                    new_top = top - eps
                    moved = x + eps if sign == "-" else x - eps
                    # the forward move raises the predecessor's top entry
                    if moved > new_top or (others and others[0] > new_top):
                        continue
                    pred_list = [new_top] + others + [moved]
                    pred = emit(pred_list, eps, None, sign)
                    if pred is None:
                        continue
                    # position of the moved entry in the sorted predecessor,
                    # never the top slot
                    pos = _position_below_top(pred, moved)
                    yield pred, eps, pos, sign


def _position_below_top(pred, value):
    for i in range(1, len(pred)):
        if pred[i] == value:
            return i + 1
    raise InvariantViolation(f"{value} not found below the top of {pred}")


def search_bms(lam: SpectrumList, budget: int = DEFAULT_BUDGET) -> BmsSearchResult:
    """Look for a move sequence producing ``lam``.

    A Suleimanova partition is compiled directly when one exists; otherwise
    a memoized backward search runs until ``budget`` states are expanded.
    """
    require_context(lam)
    cert = check_sp(lam)
    if cert is not None:
        seq = compile_sp_to_bms(cert)
        return BmsSearchResult(True, seq, 0, budget, False)
    # run on integers: scale by the common denominator, unscale eps at the end
    scale = common_denominator(lam.entries)
    search = _BackwardSearch(budget)
    try:
        plan = search.solve(tuple(int(x * scale) for x in lam.entries))
    except _OutOfBudget:
        return BmsSearchResult(False, None, search.nodes, budget, True)
    if plan is None:
        return BmsSearchResult(False, None, search.nodes, budget, False)
    seq = linearize(plan, scale)
    if not verify_bms(lam, seq):
        raise InvariantViolation(f"backward search produced a sequence that does not replay to {lam}")
    return BmsSearchResult(True, seq, search.nodes, budget, False)
