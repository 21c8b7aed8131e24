"""
Normal-form automaton over syllables, refined by x-context.

A syllable sequence is a normal form when each adjacent pair satisfies the
predecessor relation and, in addition, no x_k is appended while some x_j with
j >= k + 2 still right-divides the prefix (x_j could then be moved past x_k).
The set of x_j right-dividing a prefix is tracked as the state's context:
appending x_k keeps the far-apart members and adds k; a simple carries
each member through it or drops it.

States with the same syllable and the same future are merged (coarsest
forward bisimulation). The resulting blocks form a 0/1 predecessor system;
when contexts never matter the blocks are exactly the syllables.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from ..oracle import LengthCensus
from ..words import MonoidKind, transport_singular
from .predecessors import epsilon_matrix
from .syllables import Syllable, alphabet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class State:
    syllable: Syllable
    context: frozenset[int]


def step(state: State | None, syllable: Syllable, allowed: dict[int, frozenset[int]]) -> State | None:
    """Transition on ``syllable``; None when the result is not a normal form."""
    if state is None:
        context: frozenset[int] = frozenset()
    else:
        if state.syllable.id not in allowed[syllable.id]:
            return None
        context = state.context

    if syllable.is_x:
        k = syllable.x_index
        if any(j >= k + 2 for j in context):
            return None
        return State(syllable, frozenset({k} | {j for j in context if abs(j - k) >= 2}))

    carried = (transport_singular(i, syllable.simple) for i in context)
    return State(syllable, frozenset(j for j in carried if j is not None))


@dataclass(frozen=True)
class NormalFormBlock:
    index: int
    syllable: Syllable
    states: frozenset[State]
    is_start: bool

    @property
    def length(self) -> int:
        return self.syllable.length


@dataclass(frozen=True)
class NormalFormAutomaton:
    n: int
    kind: MonoidKind
    blocks: tuple[NormalFormBlock, ...]
    # predecessors[b] = indices of blocks whose states move into block b on b's syllable
    predecessors: tuple[frozenset[int], ...]

    @property
    def is_syllable_level(self) -> bool:
        return len({b.syllable.id for b in self.blocks}) == len(self.blocks)

    def blocks_of(self, syllable_id: int) -> list[NormalFormBlock]:
        return [b for b in self.blocks if b.syllable.id == syllable_id]


def _reachable_states(
    syllables: tuple[Syllable, ...],
    allowed: dict[int, frozenset[int]],
) -> tuple[dict[State, dict[int, State]], set[State]]:
    transitions: dict[State, dict[int, State]] = {}
    starts = {step(None, s, allowed) for s in syllables}
    queue = deque(starts)
    seen = set(starts)
    while queue:
        state = queue.popleft()
        out = transitions.setdefault(state, {})
        for s in syllables:
            nxt = step(state, s, allowed)
            if nxt is None:
                continue
            out[s.id] = nxt
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return transitions, starts


def _coarsest_partition(transitions: dict[State, dict[int, State]]) -> dict[State, int]:
    """Refine 'same syllable' until states in a block have the same successors' blocks."""
    states = sorted(transitions, key=lambda q: (q.syllable.id, sorted(q.context)))
    block_of = {q: q.syllable.id for q in states}
    count = len(set(block_of.values()))
    while True:
        signatures: dict[tuple, int] = {}
        refined: dict[State, int] = {}
        for q in states:
            sig = (
                block_of[q],
                tuple(sorted((sid, block_of[nxt]) for sid, nxt in transitions[q].items())),
            )
            refined[q] = signatures.setdefault(sig, len(signatures))
        if len(signatures) == count:
            return refined
        block_of, count = refined, len(signatures)


@lru_cache(maxsize=None)
def normal_form_automaton(n: int, kind: MonoidKind = MonoidKind.SINGULAR) -> NormalFormAutomaton:
    kind = MonoidKind(kind)
    syllables = alphabet(n, kind)
    eps = epsilon_matrix(n, kind)
    allowed = {sid: eps.row(sid) for sid in eps.ids}

    transitions, starts = _reachable_states(syllables, allowed)
    partition = _coarsest_partition(transitions)

    # number blocks in syllable order, then by smallest context
    members: dict[int, list[State]] = {}
    for q, b in partition.items():
        members.setdefault(b, []).append(q)
    order = sorted(
        members,
        key=lambda b: (members[b][0].syllable.id, min(sorted(q.context) for q in members[b])),
    )
    renumber = {old: new for new, old in enumerate(order)}
    blocks = tuple(
        NormalFormBlock(
            index=renumber[old],
            syllable=members[old][0].syllable,
            states=frozenset(members[old]),
            is_start=any(q in starts for q in members[old]),
        )
        for old in order
    )

    preds: list[set[int]] = [set() for _ in blocks]
    for q, out in transitions.items():
        for nxt in out.values():
            preds[renumber[partition[nxt]]].add(renumber[partition[q]])

    logger.info(
        "Normal-form automaton n=%d kind=%s: %d syllables, %d states, %d blocks",
        n, kind.value, len(syllables), len(transitions), len(blocks),
    )
    return NormalFormAutomaton(
        n=n, kind=kind, blocks=blocks, predecessors=tuple(frozenset(p) for p in preds),
    )


def count_via_dp(n: int, kmax: int, kind: MonoidKind = MonoidKind.SINGULAR) -> LengthCensus:
    """
    Number of normal forms of each length 0..kmax.

    c_B(k) = [B is a start block and k = l_B] + sum over predecessor blocks B'
    of c_{B'}(k - l_B); b_k is the sum over all blocks, with b_0 = 1.
    """
    automaton = normal_form_automaton(n, kind)
    blocks = automaton.blocks
    counts = [[0] * (kmax + 1) for _ in blocks]
    for k in range(1, kmax + 1):
        for b in blocks:
            prev = k - b.length
            if prev < 0:
                continue
            total = 1 if (b.is_start and prev == 0) else 0
            for p in automaton.predecessors[b.index]:
                total += counts[p][prev]
            counts[b.index][k] = total
    series = [sum(c[k] for c in counts) for k in range(kmax + 1)]
    series[0] = 1
    return LengthCensus(n=n, kind=automaton.kind, counts=tuple(series))
