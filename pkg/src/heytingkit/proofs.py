"""A proof builder over the intuitionistic axioms a1-a10.

Builders memoize formulas, so asking twice for the same fact adds nothing. ``deduce`` opens a
child builder with a hypothesis and compiles the child proof back into the parent with the
deduction theorem; formulas of enclosing builders are borrowed on demand.
"""

from typing import Callable, Dict, List, Optional, Set

from .calculus import (
    INT_AXIOMS,
    PROPER_AXIOMS,
    Derivation,
    Hypothesis,
    IntAxiom,
    Justification,
    ModusPonens,
    Premise,
    ProperAxiom,
    Recall,
    Step,
    as_substitution,
    instance,
)
from .errors import IdentityViolation, PreconditionViolated
from .formulas import P0, And, Formula, Imp, Neg, Or, Tilde, replace

Tactic = Callable[["ProofBuilder"], Formula]


class ProofBuilder:
    """Accumulates a derivation step by step."""

    def __init__(
        self,
        premise: Optional[Formula] = None,
        parent: Optional["ProofBuilder"] = None,
        hypothesis: Optional[Formula] = None,
    ):
        self.parent = parent
        self.premise = parent.premise if parent is not None else premise
        self.hypothesis = hypothesis
        self.steps: List[Step] = []
        self.index: Dict[Formula, int] = {}
        if hypothesis is not None:
            self._add(hypothesis, Hypothesis())

    def __len__(self) -> int:
        return len(self.steps)

    def _add(self, formula: Formula, justification: Justification) -> Formula:
        if formula not in self.index:
            self.index[formula] = len(self.steps)
            self.steps.append(Step(formula, justification))
        return formula

    def has(self, formula: Formula) -> bool:
        return formula in self.index

    def available(self, formula: Formula) -> bool:
        if formula in self.index:
            return True
        return self.parent is not None and self.parent.available(formula)

    def require(self, formula: Formula) -> Formula:
        """Make a formula of this or an enclosing builder usable here."""
        if formula in self.index:
            return formula
        if self.parent is not None and self.parent.available(formula):
            self.parent.require(formula)
            return self._add(formula, Recall())
        raise PreconditionViolated(f"{formula} has not been derived")

    # primitive steps

    def add_instance(self, justification: Justification) -> Formula:
        """Add an axiom, proper-axiom or premise instance."""
        if isinstance(justification, IntAxiom):
            schema = INT_AXIOMS[justification.name]
        elif isinstance(justification, ProperAxiom):
            schema = PROPER_AXIOMS[justification.name]
        elif isinstance(justification, Premise):
            if self.premise is None:
                raise PreconditionViolated("no premise to instantiate")
            schema = self.premise
        else:
            raise PreconditionViolated("only axiom and premise steps are instances")
        return self._add(instance(schema, justification.subst), justification)

    def axiom(self, name: str, *values: Formula) -> Formula:
        """Instance of an intuitionistic axiom with p0, p1, ... bound to ``values``."""
        return self.add_instance(IntAxiom(name, as_substitution(dict(enumerate(values)))))

    def proper(self, name: str, *values: Formula) -> Formula:
        return self.add_instance(ProperAxiom(name, as_substitution(dict(enumerate(values)))))

    def premise_instance(self, mapping: Optional[Dict[int, Formula]] = None) -> Formula:
        return self.add_instance(Premise(as_substitution(mapping or {})))

    def mp(self, minor: Formula, major: Formula) -> Formula:
        """From A and A -> B conclude B."""
        if not isinstance(major, Imp) or major.left != minor:
            raise PreconditionViolated(f"{major} does not apply to {minor}")
        self.require(minor)
        self.require(major)
        return self._add(major.right, ModusPonens(self.index[minor], self.index[major]))

    # derived rules

    def identity(self, x: Formula) -> Formula:
        """x -> x."""
        goal = Imp(x, x)
        if self.has(goal):
            return goal
        first = self.axiom("a1", x, goal)
        second = self.axiom("a1", x, x)
        chain = self.axiom("a2", x, goal, x)
        return self.mp(first, self.mp(second, chain))

    def weaken(self, x: Formula, y: Formula) -> Formula:
        """From x conclude y -> x."""
        return self.mp(x, self.axiom("a1", x, y))

    def conj_intro(self, x: Formula, y: Formula) -> Formula:
        return self.mp(y, self.mp(x, self.axiom("a3", x, y)))

    def conj_left(self, conjunction: Formula) -> Formula:
        if not isinstance(conjunction, And):
            raise PreconditionViolated(f"{conjunction} is not a conjunction")
        return self.mp(conjunction, self.axiom("a4", conjunction.left, conjunction.right))

    def conj_right(self, conjunction: Formula) -> Formula:
        if not isinstance(conjunction, And):
            raise PreconditionViolated(f"{conjunction} is not a conjunction")
        return self.mp(conjunction, self.axiom("a5", conjunction.left, conjunction.right))

    def conjunct(self, conjunction: Formula, target: Formula) -> Formula:
        """Extract ``target`` from a nested conjunction."""
        if conjunction == target:
            return self.require(conjunction)
        if isinstance(conjunction, And):
            if _has_conjunct(conjunction.left, target):
                return self.conjunct(self.conj_left(conjunction), target)
            if _has_conjunct(conjunction.right, target):
                return self.conjunct(self.conj_right(conjunction), target)
        raise PreconditionViolated(f"{target} is not a conjunct of {conjunction}")

    def disj_left(self, x: Formula, y: Formula) -> Formula:
        """From x conclude x | y."""
        return self.mp(x, self.axiom("a6", x, y))

    def disj_right(self, x: Formula, y: Formula) -> Formula:
        """From y conclude x | y."""
        return self.mp(y, self.axiom("a7", x, y))

    def syllogism(self, first: Formula, second: Formula) -> Formula:
        """From x -> y and y -> z conclude x -> z."""
        if not (isinstance(first, Imp) and isinstance(second, Imp)) or first.right != second.left:
            raise PreconditionViolated("implications do not chain")
        return self.deduce(first.left, lambda b: b.mp(b.mp(first.left, first), second))

    def cases(self, disjunction: Formula, left: Formula, right: Formula) -> Formula:
        """From x | y, x -> z and y -> z conclude z."""
        if not isinstance(disjunction, Or) or not isinstance(left, Imp):
            raise PreconditionViolated(f"{disjunction} is not a disjunction")
        z = left.right
        rule = self.axiom("a8", disjunction.left, disjunction.right, z)
        return self.mp(disjunction, self.mp(right, self.mp(left, rule)))

    def iff_intro(self, forward: Formula, backward: Formula) -> Formula:
        return self.conj_intro(forward, backward)

    def deduce(self, hypothesis: Formula, body: Tactic) -> Formula:
        """Prove hypothesis -> body(child), where the child may use the hypothesis."""
        child = ProofBuilder(parent=self, hypothesis=hypothesis)
        result = body(child)
        goal_of = Imp(hypothesis, result)
        if self.has(goal_of):
            return goal_of
        self._discharge(child, result)
        return goal_of

    def _discharge(self, child: "ProofBuilder", result: Formula) -> None:
        hyp = child.hypothesis
        for k in sorted(child.reachable(child.index[result])):
            step = child.steps[k]
            target = Imp(hyp, step.formula)
            if self.has(target):
                continue
            just = step.justification
            if isinstance(just, Hypothesis):
                self.identity(hyp)
            elif isinstance(just, ModusPonens):
                minor = child.steps[just.minor].formula
                major = child.steps[just.major].formula
                chain = self.axiom("a2", hyp, minor, step.formula)
                self.mp(Imp(hyp, major), self.mp(Imp(hyp, minor), chain))
            else:
                if isinstance(just, Recall):
                    self.require(step.formula)
                else:
                    self.add_instance(just)
                self.weaken(step.formula, hyp)

    def equiv(self, template: Formula, hole: Formula, x: Formula, y: Formula) -> Formula:
        """template[hole:x] -> template[hole:y], given x -> y and y -> x.

        Raises:
            PreconditionViolated: If the hole occurs under ~
        """
        left = replace(template, hole, x)
        right = replace(template, hole, y)
        if template == hole:
            return self.require(Imp(x, y))
        if left == right:
            return self.identity(left)
        if isinstance(template, And):
            return self.deduce(
                left,
                lambda b: b.conj_intro(
                    b.mp(b.conj_left(left), b.equiv(template.left, hole, x, y)),
                    b.mp(b.conj_right(left), b.equiv(template.right, hole, x, y)),
                ),
            )
        if isinstance(template, Or):
            l1, r1 = replace(template.left, hole, x), replace(template.right, hole, x)
            l2, r2 = replace(template.left, hole, y), replace(template.right, hole, y)
            into_left = self.syllogism(
                self.equiv(template.left, hole, x, y), self.axiom("a6", l2, r2)
            )
            into_right = self.syllogism(
                self.equiv(template.right, hole, x, y), self.axiom("a7", l2, r2)
            )
            rule = self.axiom("a8", l1, r1, right)
            return self.mp(into_right, self.mp(into_left, rule))
        if isinstance(template, Imp):
            back = self.equiv(template.left, hole, y, x)
            forth = self.equiv(template.right, hole, x, y)
            l2 = replace(template.left, hole, y)
            return self.deduce(
                left,
                lambda b: b.deduce(
                    l2, lambda c: c.mp(c.mp(c.mp(l2, back), left), forth)
                ),
            )
        if isinstance(template, Neg):
            back = self.equiv(template.body, hole, y, x)
            b1, b2 = replace(template.body, hole, x), replace(template.body, hole, y)
            return self.deduce(
                left,
                lambda b: b.mp(
                    b.weaken(left, b2), b.mp(back, b.axiom("a9", b2, b1))
                ),
            )
        if isinstance(template, Tilde):
            raise PreconditionViolated("cannot rewrite under ~")
        raise IdentityViolation(f"no congruence rule for {template}")

    # output

    def reachable(self, index: int) -> Set[int]:
        seen: Set[int] = set()
        stack = [index]
        while stack:
            k = stack.pop()
            if k in seen:
                continue
            seen.add(k)
            just = self.steps[k].justification
            if isinstance(just, ModusPonens):
                stack.extend((just.minor, just.major))
        return seen

    def derivation(self, goal: Optional[Formula] = None, prune: bool = True) -> Derivation:
        """The finished derivation, ending with ``goal`` (default: the last step).

        Raises:
            PreconditionViolated: If called on a child builder or the goal is missing
        """
        if self.parent is not None:
            raise PreconditionViolated("only the outermost builder yields a derivation")
        if not self.steps:
            raise PreconditionViolated("nothing has been derived")
        goal = goal if goal is not None else self.steps[-1].formula
        if goal not in self.index:
            raise PreconditionViolated(f"{goal} has not been derived")
        last = self.index[goal]
        kept = sorted(self.reachable(last)) if prune else list(range(len(self.steps)))
        position = {old: new for new, old in enumerate(kept)}
        steps = [_renumber(self.steps[old], position) for old in kept]
        if position[last] != len(steps) - 1:
            steps.append(steps[position[last]])
        return Derivation(tuple(steps), self.premise)


def _renumber(step: Step, position: Dict[int, int]) -> Step:
    just = step.justification
    if isinstance(just, ModusPonens):
        return Step(step.formula, ModusPonens(position[just.minor], position[just.major]))
    return step


def _has_conjunct(conjunction: Formula, target: Formula) -> bool:
    if conjunction == target:
        return True
    if isinstance(conjunction, And):
        return _has_conjunct(conjunction.left, target) or _has_conjunct(
            conjunction.right, target
        )
    return False


def prove_top(builder: ProofBuilder) -> Formula:
    """The formula p0 -> p0."""
    return builder.identity(P0)
