"""Purification: turning KM_tau derivations with ~-free ends into Int_tau derivations.

``purify_step`` trades a maximal ~gamma for delta = (gamma -> tau) & ~tau, lowering the rank.
Once only ~tau is left, ``eliminate_tilde_tau`` replaces it by a ~-free formula built from the
instances of axiom (c).
"""

from typing import Callable, Dict, List, Optional, Tuple

from .calculus import (
    INT_AXIOMS,
    PROPER_AXIOMS,
    ROOT,
    Calculus,
    Derivation,
    IntAxiom,
    Justification,
    ModusPonens,
    Premise,
    ProperAxiom,
    Rank,
    Substitution,
    check_derivation,
    instance,
    maximal_occurrences,
    maximal_set,
    rank,
)
from .errors import IdentityViolation, NoEligibleGamma, PreconditionViolated
from .formulas import P0, TAU, TOP, And, Formula, Imp, Or, Tilde, conjunction, replace
from .logging_config import get_logger
from .proofs import ProofBuilder

logger = get_logger(__name__)

TILDE_TAU = Tilde(TAU)

Bridge = Callable[[ProofBuilder, Justification], Formula]


def _rewrite(just: Justification, target: Formula, replacement: Formula) -> Justification:
    """The same axiom or premise with ``target`` replaced inside its substitution."""
    subst: Substitution = tuple(
        (var, replace(value, target, replacement)) for var, value in just.subst
    )
    if isinstance(just, IntAxiom):
        return IntAxiom(just.name, subst)
    if isinstance(just, ProperAxiom):
        return ProperAxiom(just.name, subst)
    return Premise(subst)


def _instance_of(just: Justification, premise: Optional[Formula]) -> Formula:
    if isinstance(just, IntAxiom):
        return instance(INT_AXIOMS[just.name], just.subst)
    if isinstance(just, ProperAxiom):
        return instance(PROPER_AXIOMS[just.name], just.subst)
    return instance(premise, just.subst)


def _commutes(D: Derivation, target: Formula, replacement: Formula) -> bool:
    """Whether every premise instance survives the replacement as a premise instance."""
    for step in D.steps:
        if isinstance(step.justification, Premise):
            rewritten = _rewrite(step.justification, target, replacement)
            if _instance_of(rewritten, D.premise) != replace(step.formula, target, replacement):
                return False
    return True


def eligible_gamma(D: Derivation) -> Optional[Formula]:
    """The ~gamma a purification step removes, or None.

    Among the maximal ~-formulas of highest degree, the first one (leftmost occurrence in the
    earliest step) with gamma distinct from tau and not inside the premise.
    """
    members = maximal_occurrences(D.formulas)
    if not members:
        return None
    level = max(member.degree for member in members)
    for candidate in members:
        if candidate.degree != level or candidate == TILDE_TAU:
            continue
        if D.premise is not None and D.premise.contains(candidate):
            continue
        delta = And(Imp(candidate.body, TAU), TILDE_TAU)
        if _commutes(D, candidate, delta):
            return candidate
    return None


def _transform(
    D: Derivation,
    target: Formula,
    replacement: Formula,
    bridges: Dict[str, Bridge],
    prune: bool,
) -> Derivation:
    """Rewrite every step with ``target`` replaced, splicing bridges for selected axioms."""
    builder = ProofBuilder(D.premise)
    produced: List[Formula] = []
    for i, step in enumerate(D.steps):
        expected = replace(step.formula, target, replacement)
        just = step.justification
        if isinstance(just, ModusPonens):
            got = builder.mp(produced[just.minor], produced[just.major])
        elif isinstance(just, ProperAxiom) and just.name in bridges:
            got = bridges[just.name](builder, just)
        elif isinstance(just, (IntAxiom, ProperAxiom, Premise)):
            got = builder.add_instance(_rewrite(just, target, replacement))
        else:
            raise PreconditionViolated(f"step {i + 1} is not justified")
        if got != expected:
            raise IdentityViolation(f"step {i + 1} rewrote to {got}, expected {expected}")
        produced.append(got)
    return builder.derivation(produced[-1], prune=prune)


def _goal_of(D: Derivation, goal: Optional[Formula]) -> Formula:
    if not D.steps:
        raise PreconditionViolated("empty derivation")
    if goal is not None and goal != D.conclusion:
        raise PreconditionViolated(f"derivation ends with {D.conclusion}, not {goal}")
    return D.conclusion


def purify_step(
    D: Derivation, premise: Optional[Formula] = None, goal: Optional[Formula] = None
) -> Derivation:
    """One purification step.

    Args:
        D: A KM_tau derivation
        premise: The premise, when not already recorded on D
        goal: The formula D derives (defaults to its last step)

    Returns:
        A derivation of goal[~gamma : delta] of strictly lower rank, or of rank (1, n) when D
        had rank (1, m)

    Raises:
        PreconditionViolated: If D is already at rank ROOT
        NoEligibleGamma: If only ~tau, or ~-formulas of the premise, remain at top degree
    """
    if premise is not None and D.premise is None:
        D = Derivation(D.steps, premise)
    _goal_of(D, goal)
    before = rank(D)
    if before == ROOT:
        raise PreconditionViolated("derivation has no ~-formulas")
    target = eligible_gamma(D)
    if target is None:
        raise NoEligibleGamma(f"no eligible ~-formula at rank {before}")
    gamma = target.body
    delta = And(Imp(gamma, TAU), TILDE_TAU)

    def bridge_a(builder: ProofBuilder, just: Justification) -> Formula:
        if dict(just.subst).get(0) != gamma:
            return builder.add_instance(_rewrite(just, target, delta))
        same = builder.identity(delta)
        return builder.conj_intro(same, same)

    result = _transform(D, target, delta, {"a": bridge_a}, prune=False)
    after = rank(result)
    logger.debug("Replaced %s: rank %s -> %s", target, before, after)
    if before.level == 1:
        expected = (maximal_set(D.formulas) - {target}) | {TILDE_TAU}
        if maximal_set(result.formulas) != expected:
            raise IdentityViolation(f"level-1 step left {sorted(map(str, expected))} unmet")
    elif after == before or not after.precedes(before):
        raise IdentityViolation(f"rank {after} does not descend from {before}")
    return result


# Bridges for the elimination of ~tau


def c_instances(D: Derivation) -> List[Formula]:
    """The formulas lambda of the axiom-(c) instances of D, in order, without repeats."""
    found: List[Formula] = []
    for step in D.steps:
        just = step.justification
        if isinstance(just, ProperAxiom) and just.name == "c":
            value = dict(just.subst).get(0, P0)
            if value not in found:
                found.append(value)
    return found


def excluded_middle_part(value: Formula) -> Formula:
    """lambda | (lambda -> tau)."""
    return Or(value, Imp(value, TAU))


def tilde_tau_witness(D: Derivation) -> Formula:
    """A*: the conjunction of the (c)-disjunctions with ~tau replaced by TOP."""
    parts: List[Formula] = []
    for value in c_instances(D):
        part = replace(excluded_middle_part(value), TILDE_TAU, TOP)
        if part not in parts:
            parts.append(part)
    return conjunction(parts)


def _parts(witness: Formula) -> List[Formula]:
    if witness == TOP:
        return []
    parts = []
    while isinstance(witness, And):
        parts.append(witness.left)
        witness = witness.right
    parts.append(witness)
    return parts


def prove_nucleus(builder: ProofBuilder, witness: Formula) -> Formula:
    """(witness -> tau) -> tau for a conjunction of excluded-middle parts, or TOP."""
    hypothesis = Imp(witness, TAU)
    if witness == TOP:
        return builder.deduce(hypothesis, lambda b: b.mp(b.identity(P0), hypothesis))
    if isinstance(witness, And):
        left, right = witness.left, witness.right
        left_nucleus = prove_nucleus(builder, left)
        right_nucleus = prove_nucleus(builder, right)

        def body(b: ProofBuilder) -> Formula:
            left_to_tau = b.deduce(
                left,
                lambda c: c.mp(
                    c.deduce(right, lambda d: d.mp(d.conj_intro(left, right), hypothesis)),
                    right_nucleus,
                ),
            )
            return b.mp(left_to_tau, left_nucleus)

        return builder.deduce(hypothesis, body)
    if not (isinstance(witness, Or) and witness.right == Imp(witness.left, TAU)):
        raise PreconditionViolated(f"{witness} is not an excluded-middle part")
    q = witness.left

    def base(b: ProofBuilder) -> Formula:
        q_to_tau = b.deduce(q, lambda c: c.mp(c.disj_left(q, Imp(q, TAU)), hypothesis))
        return b.mp(b.disj_right(q, q_to_tau), hypothesis)

    return builder.deduce(hypothesis, base)


def prove_tau_implies(builder: ProofBuilder, witness: Formula) -> Formula:
    """tau -> witness."""

    def body(b: ProofBuilder) -> Formula:
        parts = _parts(witness)
        if not parts:
            return b.identity(P0)
        proved = [b.disj_right(part.left, b.weaken(TAU, part.left)) for part in parts]
        result = proved[-1]
        for part in reversed(proved[:-1]):
            result = b.conj_intro(part, result)
        return result

    return builder.deduce(TAU, body)


def eliminate_tilde_tau(
    D: Derivation, premise: Optional[Formula] = None, goal: Optional[Formula] = None
) -> Derivation:
    """Remove ~tau from a derivation whose only maximal ~-formula is ~tau.

    Returns:
        A derivation without ~ of goal[~tau : A*]

    Raises:
        PreconditionViolated: If M(D) is not exactly {~tau} or the premise contains ~tau
    """
    if premise is not None and D.premise is None:
        D = Derivation(D.steps, premise)
    _goal_of(D, goal)
    if maximal_set(D.formulas) != frozenset({TILDE_TAU}):
        raise PreconditionViolated("elimination needs ~tau as the only maximal ~-formula")
    if D.premise is not None and D.premise.contains(TILDE_TAU):
        raise PreconditionViolated("the premise contains ~tau")
    witness = tilde_tau_witness(D)
    logger.debug("Eliminating ~tau with %s", witness)

    def bridge_a(builder: ProofBuilder, just: Justification) -> Formula:
        if dict(just.subst).get(0) != TAU:
            raise IdentityViolation("an (a) instance other than tau survived")
        forward = builder.deduce(
            witness, lambda b: b.conj_intro(b.identity(TAU), witness)
        )
        backward = builder.axiom("a5", Imp(TAU, TAU), witness)
        return builder.conj_intro(forward, backward)

    def bridge_b(builder: ProofBuilder, just: Justification) -> Formula:
        return prove_nucleus(builder, witness)

    def bridge_c(builder: ProofBuilder, just: Justification) -> Formula:
        template = excluded_middle_part(dict(just.subst).get(0, P0))
        part = replace(template, TILDE_TAU, TOP)

        def body(b: ProofBuilder) -> Formula:
            known = b.conjunct(witness, part)
            top = b.identity(P0)
            b.weaken(witness, TOP)
            b.weaken(top, witness)
            return b.mp(known, b.equiv(template, TILDE_TAU, TOP, witness))

        return builder.deduce(witness, body)

    def bridge_d(builder: ProofBuilder, just: Justification) -> Formula:
        return prove_tau_implies(builder, witness)

    bridges = {"a": bridge_a, "b": bridge_b, "c": bridge_c, "d": bridge_d}
    result = _transform(D, TILDE_TAU, witness, bridges, prune=True)
    if not result.is_tilde_free():
        raise IdentityViolation("~ survived the elimination of ~tau")
    return result


def purify_with_trace(
    D: Derivation, premise: Optional[Formula] = None, goal: Optional[Formula] = None
) -> Tuple[Derivation, List[Rank]]:
    """Purify D and report the rank after every step, starting with the rank of D.

    Raises:
        PreconditionViolated: If D is not a valid KM_tau derivation or an end contains ~
    """
    if premise is not None and D.premise is None:
        D = Derivation(D.steps, premise)
    target = _goal_of(D, goal)
    if not target.is_tilde_free or (D.premise is not None and not D.premise.is_tilde_free):
        raise PreconditionViolated("premise and goal must be ~-free")
    verdict = check_derivation(D, Calculus.KM_TAU, D.premise)
    if not verdict.valid:
        raise PreconditionViolated(f"not a KM_tau derivation: {verdict.diagnostics[0]}")

    original = len(D)
    ranks = [rank(D)]
    while ranks[-1] != ROOT:
        if maximal_set(D.formulas) == frozenset({TILDE_TAU}):
            D = eliminate_tilde_tau(D)
        else:
            D = purify_step(D)
        ranks.append(rank(D))

    if D.conclusion != target:
        raise IdentityViolation(f"purification changed the goal to {D.conclusion}")
    verdict = check_derivation(D, Calculus.INT_TAU, D.premise)
    if not verdict.valid:
        raise IdentityViolation(f"purified derivation is invalid: {verdict.diagnostics[0]}")
    logger.info("Purified %d steps into %d in %d rounds", original, len(D), len(ranks) - 1)
    return D, ranks


def purify(
    D: Derivation, premise: Optional[Formula] = None, goal: Optional[Formula] = None
) -> Derivation:
    """An Int_tau derivation of the same goal from the same premise.

    A derivation that is already pure is returned unchanged.
    """
    result, _ = purify_with_trace(D, premise, goal)
    return result
