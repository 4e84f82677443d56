"""The invariant suite run by ``heytingkit verify``.

Every check returns a ``CheckResult``; checks never raise for a failing identity, they record
it. The suite order is fixed so reports are stable.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from . import config
from .enrichment import (
    EPair,
    check_tilde,
    confirm_expansions,
    enrichment,
    epairs,
    satisfies_proper_axioms,
    tilde_from_pair,
    tilde_roundtrip_holds,
)
from .errors import HeytingError
from .filters import pair_spectrum_maps, prime_filters, special_filters
from .lattice import AlgebraEmbedding, HeytingAlgebra, find_isomorphism, subalgebra_generated
from .logging_config import get_logger
from .stone import delta_algebra, delta_h, pretop, stone_embed, tower
from .variety import (
    SearchBounds,
    canonical_conjecture,
    conservativity_witness,
    logic_inclusion_failures,
    random_term,
    verify_conjecture,
    verify_main_theorem,
)

logger = get_logger(__name__)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    """Results of the suite on one algebra."""

    algebra: HeytingAlgebra
    results: List[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def as_dict(self) -> Dict:
        return {
            "size": self.algebra.size,
            "ok": self.ok,
            "checks": [
                {"name": r.name, "passed": r.passed, "detail": r.detail} for r in self.results
            ],
        }


Outcome = Tuple[bool, str]


def check_enrichment(A: HeytingAlgebra) -> Outcome:
    """Every element is enriched, uniquely, by a dense element equal to the meet of F_a."""
    for a in A.elements:
        star = enrichment(A, a)
        if star is None:
            return False, f"{A.labels[a]} is not enriched"
        if A.neg[star] != A.bot:
            return False, f"enrichment of {A.labels[a]} is not dense"
        _, f_a = special_filters(A, a)
        if A.meet_all(f_a.elements()) != star:
            return False, f"enrichment of {A.labels[a]} differs from the meet of F_a"
    return True, ""


def check_filters(A: HeytingAlgebra) -> Outcome:
    """F_a = X_a meet [a), and F lies in max h-bar(a) iff F_a is contained in F."""
    spectrum = prime_filters(A)
    for a in A.elements:
        x_a, f_a = special_filters(A, a)
        up = {x for x in A.elements if A.leq[a, x]}
        if set(f_a.elements()) != set(x_a.elements()) & up:
            return False, f"F_a differs from X_a meet [a) at {A.labels[a]}"
        maximal = spectrum.maximal(spectrum.excluding(a))
        for i, F in enumerate(spectrum):
            criterion = not f_a.members & ~F.members and a not in F
            if bool(maximal >> i & 1) != criterion:
                return False, f"max-filter criterion fails for {F} at {A.labels[a]}"
    return True, ""


def check_stone(A: HeytingAlgebra) -> Outcome:
    """h embeds A onto Up(S_A)."""
    sd = stone_embed(A)
    if not sd.is_onto():
        return False, f"h[A] has {sd.image.size} of {sd.upset_algebra.size} upsets"
    return True, ""


def check_delta_identity(A: HeytingAlgebra) -> Outcome:
    """delta h(x) = h(x) joined with max h-bar(x), and (h(x), delta h(x)) is an E-pair."""
    sd = stone_embed(A)
    U = sd.upset_algebra
    for x in A.elements:
        star = sd.index_of(delta_h(sd, x))
        if not EPair(U, sd.h(x), star).is_valid():
            return False, f"(h({A.labels[x]}), delta h({A.labels[x]})) is not an E-pair"
    return True, ""


def check_delta_isomorphic(A: HeytingAlgebra) -> Outcome:
    D, _ = delta_algebra(A)
    if find_isomorphism(A, D) is None:
        return False, f"delta[A] has {D.size} elements and is not isomorphic to A"
    return True, ""


def check_tower(A: HeytingAlgebra, steps: int = config.TOWER_MAX_STEPS) -> Outcome:
    built = tower(A, max(steps, 1))
    if not built.stabilized or built.stable_at != 0:
        return False, f"tower stable_at={built.stable_at}"
    return True, ""


def check_pretop(A: HeytingAlgebra) -> Outcome:
    """A has a pretop iff delta[A] has one, and h sends one to the other."""
    D, embedding = delta_algebra(A)
    w, w_delta = pretop(A), pretop(D)
    if (w is None) != (w_delta is None):
        return False, "pretop exists on one side only"
    if w is not None and embedding(w) != w_delta:
        return False, "h does not preserve the pretop"
    return True, ""


def check_tilde_laws(A: HeytingAlgebra) -> Outcome:
    for pair in epairs(A):
        report = check_tilde(A, tilde_from_pair(pair).t)
        if not report.ok:
            labels = A.labels
            return False, f"({labels[pair.a]}, {labels[pair.a_star]}): {report.failures()}"
    return True, ""


def check_tilde_roundtrip(A: HeytingAlgebra) -> Outcome:
    return tilde_roundtrip_holds(A), ""


def check_proper_axioms(A: HeytingAlgebra) -> Outcome:
    """The proper-axiom identities hold in every expansion and characterize them."""
    for pair in epairs(A):
        if not satisfies_proper_axioms(A, pair.a, tilde_from_pair(pair).t):
            return False, f"identities fail for tau={A.labels[pair.a]}"
    for tau, _, confirmed in confirm_expansions(A):
        if not confirmed:
            return False, f"table at tau={A.labels[tau]} is not a tilde expansion"
    return True, ""


def embedded_pair_identities(e: AlgebraEmbedding, a: int) -> Dict[str, bool]:
    """Identities relating the spectra of A <= B at an element a of A enriched in B."""
    A, B = e.source, e.target
    star = enrichment(B, e(a))
    maps = pair_spectrum_maps(e)
    sd_A, sd_B = stone_embed(A), stone_embed(B)
    S_A, S_B = maps.source, maps.target
    delta_a = delta_h(sd_A, a)
    results = {
        "phi-surjective": maps.is_surjective(),
        "phi-of-h": all(
            maps.phi_tilde(sd_B.h_mask(e(x))) == sd_A.h_mask(x) for x in A.elements
        ),
        "phi-of-max": maps.phi_tilde(S_B.maximal(S_B.excluding(e(a))))
        == S_A.maximal(S_A.excluding(a)),
    }
    if star is not None:
        star_mask = sd_B.h_mask(star)
        results["phi-of-enrichment"] = maps.phi_tilde(star_mask) == delta_a
        results["enrichment-inclusion"] = not star_mask & ~maps.phi_inv(delta_a)
    return results


def _subalgebra_inclusions(A: HeytingAlgebra) -> List[AlgebraEmbedding]:
    """Inclusions of the subalgebras generated by single elements, without repeats."""
    seen = set()
    inclusions = []
    for x in A.elements:
        _, inclusion = subalgebra_generated(A, [x])
        key = tuple(inclusion.mapping.tolist())
        if key not in seen:
            seen.add(key)
            inclusions.append(inclusion)
    return inclusions


def check_embedded_pairs(A: HeytingAlgebra) -> Outcome:
    for inclusion in _subalgebra_inclusions(A):
        for a in inclusion.source.elements:
            for name, holds in embedded_pair_identities(inclusion, a).items():
                if not holds:
                    sub = inclusion.source
                    where = f"a {sub.size}-element subalgebra at {sub.labels[a]}"
                    return False, f"{name} fails in {where}"
    return True, ""


def check_main_theorem(A: HeytingAlgebra, bounds: SearchBounds, seed: int) -> Outcome:
    report = verify_main_theorem(A, bounds, seed)
    notes = [f.budget_note for f in report.elements if f.budget_note]
    for finding in report.elements:
        if not finding.ok:
            return False, f"delta[A_{A.labels[finding.a]}] differs from A"
    for pair in report.pairs:
        if not pair.isomorphic:
            return False, f"two-step delta fails at ({A.labels[pair.a]}, {A.labels[pair.b]})"
    detail = "sampled pairs" if report.pairs_sampled else ""
    if notes:
        detail = "; ".join(filter(None, [detail, "search only: " + notes[0]]))
    return True, detail


def check_conjecture(A: HeytingAlgebra) -> Outcome:
    """Canonical and identity configurations satisfy the isomorphism B = delta[A_a]."""
    identity = AlgebraEmbedding.identity(A)
    for a in A.elements:
        if not canonical_conjecture(A, a).ok:
            return False, f"canonical configuration fails at {A.labels[a]}"
        star = enrichment(A, a)
        if star is not None and not verify_conjecture(identity, a, star).ok:
            return False, f"identity configuration fails at {A.labels[a]}"
    return True, ""


def check_conservativity(A: HeytingAlgebra, bounds: SearchBounds) -> Outcome:
    for a in A.elements:
        result = conservativity_witness(A, a, bounds)
        if result.term is not None:
            return False, f"{result.term} separates at tau={A.labels[a]}"
    return True, ""


def check_logic_inclusion(A: HeytingAlgebra, bounds: SearchBounds, seed: int) -> Outcome:
    rng = np.random.default_rng(seed)
    subalgebras = [inclusion.source for inclusion in _subalgebra_inclusions(A)]
    terms = [
        random_term(rng, bounds.max_vars, bounds.max_depth) for _ in range(bounds.random_terms)
    ]
    failures = logic_inclusion_failures(A, subalgebras, terms)
    if failures:
        term, _ = failures[0]
        return False, f"{term} holds in A but not in a subalgebra"
    return True, ""


def run_suite(
    A: HeytingAlgebra,
    bounds: Optional[SearchBounds] = None,
    seed: int = config.DEFAULT_SEED,
    progress: bool = False,
) -> VerificationReport:
    """Run every check on A.

    Args:
        A: The algebra
        bounds: Search bounds for the variety checks
        seed: Seed for sampled checks
        progress: Show a progress bar on stderr

    Returns:
        The report, one result per check in a fixed order
    """
    bounds = bounds or SearchBounds()
    checks: List[Tuple[str, Callable[[], Outcome]]] = [
        ("enrichment-unique-dense", lambda: check_enrichment(A)),
        ("special-filters", lambda: check_filters(A)),
        ("stone-embedding", lambda: check_stone(A)),
        ("delta-identity", lambda: check_delta_identity(A)),
        ("delta-isomorphic", lambda: check_delta_isomorphic(A)),
        ("tower-stable", lambda: check_tower(A)),
        ("pretop-preserved", lambda: check_pretop(A)),
        ("tilde-laws", lambda: check_tilde_laws(A)),
        ("tilde-roundtrip", lambda: check_tilde_roundtrip(A)),
        ("proper-axioms", lambda: check_proper_axioms(A)),
        ("embedded-pairs", lambda: check_embedded_pairs(A)),
        ("main-theorem", lambda: check_main_theorem(A, bounds, seed)),
        ("conjecture-canonical", lambda: check_conjecture(A)),
        ("tau-conservativity", lambda: check_conservativity(A, bounds)),
        ("logic-inclusion", lambda: check_logic_inclusion(A, bounds, seed)),
    ]
    report = VerificationReport(A)
    for name, check in tqdm(checks, desc="verify", unit="check", disable=not progress):
        try:
            passed, detail = check()
        except HeytingError as error:
            passed, detail = False, f"{type(error).__name__}: {error}"
        if not passed:
            logger.warning("Check %s failed: %s", name, detail)
        report.results.append(CheckResult(name, bool(passed), detail))
    logger.info(
        "Verified %d checks on a %d-element algebra: %d failed",
        len(report.results),
        A.size,
        len(report.failures()),
    )
    return report
