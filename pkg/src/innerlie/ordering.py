"""Selection of an invariant complex structure via a choice of simple roots.

An ordering is admissible when every noncompact simple root has a noncompact
partner whose sum is again a root; the one exception is the so(1,2n) family,
where the noncompact simples of every chamber form a singleton and the
standard ordering is used instead.

The search mirrors the constructive argument: the standard base fails (its
noncompact part is a singleton), a single reflection about the painted
simple root succeeds, and a bounded breadth-first search over reflection
words is kept as a safety net whose exhaustion signals a grading bug.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pairs import InnerPair
from .rootsys import (
    InvariantViolation,
    RootSystemError,
    RootVector,
    SimpleSystem,
    reflect,
)

_BFS_NODE_BUDGET = 100_000

MODE_PARTNER = "partner_property"
MODE_SPECIAL = "so_1_2n_special"
MODE_DIAGNOSTIC = "diagnostic"


@dataclass
class AdmissibleOrdering:
    """A simple system split into compact and noncompact parts."""

    system: SimpleSystem
    positives: tuple[RootVector, ...]
    compact_simples: tuple[RootVector, ...]
    noncompact_simples: tuple[RootVector, ...]
    mode: str


def make_ordering(pair: InnerPair, system: SimpleSystem, mode: str | None = None) -> AdmissibleOrdering:
    """Wrap a simple system for a pair, classifying or validating its mode."""
    pair.system.validate_base(system)
    positives = pair.system.positives(system)
    compact_simples = tuple(s for s in system.simples if pair.grading.is_compact(s))
    noncompact_simples = tuple(s for s in system.simples if not pair.grading.is_compact(s))
    if mode is None:
        if pair.is_so_1_2n and system.key() == pair.system.base.key():
            mode = MODE_SPECIAL
        elif satisfies_partner_property(system, pair):
            mode = MODE_PARTNER
        else:
            mode = MODE_DIAGNOSTIC
    elif mode == MODE_PARTNER and not satisfies_partner_property(system, pair):
        raise RootSystemError("ordering does not satisfy the noncompact-partner property")
    elif mode == MODE_SPECIAL and not pair.is_so_1_2n:
        raise RootSystemError("the special mode is reserved for the so(1,2n) family")
    return AdmissibleOrdering(system=system, positives=positives,
                              compact_simples=compact_simples,
                              noncompact_simples=noncompact_simples, mode=mode)


def standard_ordering(pair: InnerPair) -> AdmissibleOrdering:
    """The standard base of the pair, classified (possibly diagnostic)."""
    return make_ordering(pair, pair.system.base)


def satisfies_partner_property(system: SimpleSystem, pair: InnerPair) -> bool:
    """True iff every noncompact simple has a noncompact partner summing to a root."""
    pair.system.validate_base(system)
    nc = [s for s in system.simples if not pair.grading.is_compact(s)]
    return all(
        any(pair.system.is_root(psi + other) for other in nc)
        for psi in nc
    )


def find_admissible_ordering(pair: InnerPair) -> AdmissibleOrdering:
    """Deterministic search for an admissible ordering.

    Order of attempts: the standard base; single reflections about each of
    its noncompact simple roots; breadth-first search over reflection words
    up to length rank + 2.  Exhausting the search is a hard failure: the
    partner property is guaranteed for every catalog pair outside so(1,2n).
    """
    if pair.is_so_1_2n:
        return make_ordering(pair, pair.system.base, mode=MODE_SPECIAL)
    base = pair.system.base
    if satisfies_partner_property(base, pair):
        return make_ordering(pair, base, mode=MODE_PARTNER)

    def reflected(simples, mirror):
        return SimpleSystem(sorted(reflect(v, mirror) for v in simples))

    first_layer = []
    for psi in base.simples:
        if not pair.grading.is_compact(psi):
            candidate = reflected(base.simples, psi)
            if satisfies_partner_property(candidate, pair):
                return make_ordering(pair, candidate, mode=MODE_PARTNER)
            first_layer.append(candidate)

    seen = {base.key()} | {c.key() for c in first_layer}
    queue = [(c, 1) for c in first_layer]
    while queue:
        current, depth = queue.pop(0)
        if depth >= pair.rank + 2:
            continue
        for mirror in current.simples:
            candidate = reflected(current.simples, mirror)
            if candidate.key() in seen:
                continue
            seen.add(candidate.key())
            if satisfies_partner_property(candidate, pair):
                return make_ordering(pair, candidate, mode=MODE_PARTNER)
            queue.append((candidate, depth + 1))
            if len(seen) > _BFS_NODE_BUDGET:
                raise InvariantViolation(
                    f"{pair.name}: admissible-ordering search exceeded its budget; "
                    "this contradicts the partner property and indicates a grading bug")
    raise InvariantViolation(
        f"{pair.name}: no admissible ordering within reflection words of "
        f"length {pair.rank + 2}; this indicates a grading bug")


def decompose_over(ordering: AdmissibleOrdering, root: RootVector):
    """Coefficients of a root split along (compact simples, noncompact simples)."""
    coeffs = ordering.system.decompose(root)
    by_simple = dict(zip(ordering.system.simples, coeffs))
    n = tuple(by_simple[phi] for phi in ordering.compact_simples)
    m = tuple(by_simple[psi] for psi in ordering.noncompact_simples)
    return n, m


def noncompact_witness(ordering: AdmissibleOrdering, pair: InnerPair, j: int) -> RootVector:
    """Smallest noncompact positive non-simple root with a nonzero coefficient
    along the j-th compact simple."""
    phi = ordering.compact_simples[j]
    simples = set(ordering.system.simples)
    for root in ordering.positives:  # lexicographic order
        if root in simples or pair.grading.is_compact(root):
            continue
        n, _ = decompose_over(ordering, root)
        if n[j] != 0:
            return root
    raise InvariantViolation(
        f"{pair.name}: no noncompact witness for compact simple {phi!r}; "
        "this contradicts the trivial-centralizer argument")
